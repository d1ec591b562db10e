//! Coends of bifunctors H: C^op × C -> E over a cocomplete backend,
//! computed as the coequalizer of the two coproduct maps
//!
//!   α = ⨿_f H(C',f) and β = ⨿_f H(f,C),
//!
//! with the middle coproduct indexed by *all* morphisms of C, identities
//! included. The identity summands are redundant (regression-tested), but
//! the indexing stays faithful to the defining formula. Morphism index
//! order is declaration order, which pins every coproduct offset.

use crate::backend::Backend;
use crate::error::{Error, Result};
use crate::fincat::FinCat;
use crate::finset::{enumerate_maps, FinSetMap, FinSetObj};

/// A bifunctor C^op × C -> E, tabulated: `on_objects[(c1,c2)]` is
/// H(C1, C2), contravariant in the first slot, covariant in the second.
#[derive(Debug, Clone)]
pub struct Bifunctor<B: Backend> {
    src: FinCat,
    /// H(C1, C2) at index c1 * n + c2
    on_objects: Vec<B::Obj>,
    /// H(f, C): H(cod f, C) -> H(dom f, C), at index f * n + c
    on_first: Vec<B::Mor>,
    /// H(C, f): H(C, dom f) -> H(C, cod f), at index c * m + f
    on_second: Vec<B::Mor>,
}

impl<B: Backend> Bifunctor<B> {
    pub fn new(
        backend: &B,
        src: FinCat,
        obj_at: impl Fn(usize, usize) -> B::Obj,
        first_at: impl Fn(usize, usize) -> B::Mor,
        second_at: impl Fn(usize, usize) -> B::Mor,
    ) -> Result<Bifunctor<B>> {
        let n = src.object_count();
        let m = src.morphism_count();
        let mut on_objects = Vec::with_capacity(n * n);
        for c1 in 0..n {
            for c2 in 0..n {
                on_objects.push(obj_at(c1, c2));
            }
        }
        let mut on_first = Vec::with_capacity(m * n);
        for f in 0..m {
            for c in 0..n {
                on_first.push(first_at(f, c));
            }
        }
        let mut on_second = Vec::with_capacity(n * m);
        for c in 0..n {
            for f in 0..m {
                on_second.push(second_at(c, f));
            }
        }
        let h = Bifunctor { src, on_objects, on_first, on_second };
        h.validate(backend)?;
        Ok(h)
    }

    pub fn src(&self) -> &FinCat {
        &self.src
    }

    pub fn obj(&self, c1: usize, c2: usize) -> &B::Obj {
        &self.on_objects[c1 * self.src.object_count() + c2]
    }

    /// H(f, C), the contravariant action.
    pub fn first(&self, f: usize, c: usize) -> &B::Mor {
        &self.on_first[f * self.src.object_count() + c]
    }

    /// H(C, f), the covariant action.
    pub fn second(&self, c: usize, f: usize) -> &B::Mor {
        &self.on_second[c * self.src.morphism_count() + f]
    }

    fn validate(&self, backend: &B) -> Result<()> {
        let n = self.src.object_count();
        let m = self.src.morphism_count();
        for f in 0..m {
            let (df, cf) = (self.src.dom_index(f), self.src.cod_index(f));
            for c in 0..n {
                let a = self.first(f, c);
                if !backend.obj_eq(&backend.dom(a), self.obj(cf, c))
                    || !backend.obj_eq(&backend.cod(a), self.obj(df, c))
                {
                    return Err(Error::InvalidBifunctor(format!(
                        "H({}, {}) has mismatched boundary",
                        self.src.morphism(f).id,
                        self.src.objects()[c]
                    )));
                }
                let b = self.second(c, f);
                if !backend.obj_eq(&backend.dom(b), self.obj(c, df))
                    || !backend.obj_eq(&backend.cod(b), self.obj(c, cf))
                {
                    return Err(Error::InvalidBifunctor(format!(
                        "H({}, {}) has mismatched boundary",
                        self.src.objects()[c],
                        self.src.morphism(f).id
                    )));
                }
            }
        }
        for o in 0..n {
            let id = self.src.identity_of(o);
            for c in 0..n {
                if !backend.mor_eq(self.first(id, c), &backend.identity(self.obj(o, c))) {
                    return Err(Error::InvalidBifunctor(format!(
                        "H(id_{}, {}) is not the identity",
                        self.src.objects()[o],
                        self.src.objects()[c]
                    )));
                }
                if !backend.mor_eq(self.second(c, id), &backend.identity(self.obj(c, o))) {
                    return Err(Error::InvalidBifunctor(format!(
                        "H({}, id_{}) is not the identity",
                        self.src.objects()[c],
                        self.src.objects()[o]
                    )));
                }
            }
        }
        for g in 0..m {
            for f in 0..m {
                let Some(gf) = self.src.compose_idx(g, f) else { continue };
                for c in 0..n {
                    // contravariant slot: H(g∘f, C) = H(f, C) ∘ H(g, C)
                    let lhs = self.first(gf, c);
                    let rhs = backend.compose(self.first(f, c), self.first(g, c))?;
                    if !backend.mor_eq(lhs, &rhs) {
                        return Err(Error::InvalidBifunctor(format!(
                            "first slot breaks composition at ({}, {})",
                            self.src.morphism(g).id,
                            self.src.morphism(f).id
                        )));
                    }
                    // covariant slot: H(C, g∘f) = H(C, g) ∘ H(C, f)
                    let lhs = self.second(c, gf);
                    let rhs = backend.compose(self.second(c, g), self.second(c, f))?;
                    if !backend.mor_eq(lhs, &rhs) {
                        return Err(Error::InvalidBifunctor(format!(
                            "second slot breaks composition at ({}, {})",
                            self.src.morphism(g).id,
                            self.src.morphism(f).id
                        )));
                    }
                }
            }
        }
        // the two actions commute
        for f in 0..m {
            for g in 0..m {
                let lhs = backend.compose(
                    self.second(self.src.dom_index(f), g),
                    self.first(f, self.src.dom_index(g)),
                )?;
                let rhs = backend.compose(
                    self.first(f, self.src.cod_index(g)),
                    self.second(self.src.cod_index(f), g),
                )?;
                if !backend.mor_eq(&lhs, &rhs) {
                    return Err(Error::InvalidBifunctor(format!(
                        "actions fail to commute at ({}, {})",
                        self.src.morphism(f).id,
                        self.src.morphism(g).id
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A wedge: an apex with one leg per object, subject to dinaturality.
#[derive(Debug, Clone)]
pub struct Wedge<B: Backend> {
    pub apex: B::Obj,
    pub legs: Vec<B::Mor>,
}

/// The computed coend with all universal-property bookkeeping retained.
#[derive(Debug, Clone)]
pub struct CoendResult<B: Backend> {
    pub bifunctor: Bifunctor<B>,
    /// The universal wedge into the coend object.
    pub wedge: Wedge<B>,
    /// Coequalizer projection λ from the diagonal coproduct.
    pub projection: B::Mor,
    pub alpha: B::Mor,
    pub beta: B::Mor,
    /// Diagonal coproduct Σ_C H(C,C) and its injections j_C.
    pub diagonal: B::Obj,
    pub diagonal_injections: Vec<B::Mor>,
    /// Middle coproduct Σ_f H(cod f, dom f) and its injections k_f.
    pub middle: B::Obj,
    pub middle_injections: Vec<B::Mor>,
}

/// Dinaturality report: ids of morphisms whose hexagon fails.
pub fn verify_dinaturality<B: Backend>(
    backend: &B,
    h: &Bifunctor<B>,
    w: &Wedge<B>,
) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    for f in 0..h.src.morphism_count() {
        let c = h.src.dom_index(f);
        let c2 = h.src.cod_index(f);
        let lhs = backend.compose(&w.legs[c], h.first(f, c))?;
        let rhs = backend.compose(&w.legs[c2], h.second(c2, f))?;
        if !backend.mor_eq(&lhs, &rhs) {
            failures.push(h.src.morphism(f).id.clone());
        }
    }
    Ok(failures)
}

/// Computes the coend of `h` by the coequalizer-of-coproducts formula.
pub fn coend<B: Backend>(backend: &B, h: &Bifunctor<B>) -> Result<CoendResult<B>> {
    let n = h.src.object_count();
    let m = h.src.morphism_count();
    let diag_parts: Vec<B::Obj> = (0..n).map(|c| h.obj(c, c).clone()).collect();
    let (diagonal, diagonal_injections) = backend.coproduct(&diag_parts)?;
    let mid_parts: Vec<B::Obj> = (0..m)
        .map(|f| h.obj(h.src.cod_index(f), h.src.dom_index(f)).clone())
        .collect();
    let (middle, middle_injections) = backend.coproduct(&mid_parts)?;

    let (alpha, beta) = if m == 0 {
        (backend.from_initial(&diagonal)?, backend.from_initial(&diagonal)?)
    } else {
        let mut alpha_legs = Vec::with_capacity(m);
        let mut beta_legs = Vec::with_capacity(m);
        for f in 0..m {
            let c = h.src.dom_index(f);
            let c2 = h.src.cod_index(f);
            alpha_legs.push(backend.compose(&diagonal_injections[c2], h.second(c2, f))?);
            beta_legs.push(backend.compose(&diagonal_injections[c], h.first(f, c))?);
        }
        (
            backend.factor_coproduct(&mid_parts, &middle_injections, &alpha_legs)?,
            backend.factor_coproduct(&mid_parts, &middle_injections, &beta_legs)?,
        )
    };

    let (apex, projection) = backend.coequalizer(&alpha, &beta)?;
    let legs: Result<Vec<B::Mor>> = diagonal_injections
        .iter()
        .map(|j| backend.compose(&projection, j))
        .collect();
    let wedge = Wedge { apex, legs: legs? };

    let result = CoendResult {
        bifunctor: h.clone(),
        wedge,
        projection,
        alpha,
        beta,
        diagonal,
        diagonal_injections,
        middle,
        middle_injections,
    };
    let report = verify_dinaturality(backend, h, &result.wedge)?;
    if !report.is_empty() {
        return Err(Error::Internal(format!(
            "computed coend wedge fails dinaturality at {report:?}"
        )));
    }
    Ok(result)
}

/// The unique mediating morphism from the coend to any other dinatural
/// wedge over the same bifunctor. Uniqueness is structural: coequalizer
/// projections are epimorphisms in every backend used here.
pub fn factor_through_coend<B: Backend>(
    backend: &B,
    r: &CoendResult<B>,
    w: &Wedge<B>,
) -> Result<B::Mor> {
    if w.legs.len() != r.bifunctor.src.object_count() {
        return Err(Error::ShapeMismatch("wedge must have one leg per object".into()));
    }
    let failures = verify_dinaturality(backend, &r.bifunctor, w)?;
    if !failures.is_empty() {
        return Err(Error::NotDinatural(format!("legs fail at {failures:?}")));
    }
    let n = r.bifunctor.src.object_count();
    let diag_parts: Vec<B::Obj> = (0..n).map(|c| r.bifunctor.obj(c, c).clone()).collect();
    let h = if n == 0 {
        backend.from_initial(&w.apex)?
    } else {
        backend.factor_coproduct(&diag_parts, &r.diagonal_injections, &w.legs)?
    };
    let mediating = backend.factor_coequalizer(&r.projection, &h)?;
    for c in 0..n {
        let through = backend.compose(&mediating, &r.wedge.legs[c])?;
        if !backend.mor_eq(&through, &w.legs[c]) {
            return Err(Error::Internal("mediating morphism does not restrict to the wedge".into()));
        }
    }
    Ok(mediating)
}

/// Pointwise coproduct of bifunctors over the same source, with injection
/// bookkeeping for the coproduct-preservation property.
pub struct BifunctorCoproduct<B: Backend> {
    pub bifunctor: Bifunctor<B>,
    /// `injections[i][c1 * n + c2]`: H_i(C1,C2) -> H(C1,C2).
    pub injections: Vec<Vec<B::Mor>>,
}

pub fn coproduct_of_bifunctors<B: Backend>(
    backend: &B,
    parts: &[&Bifunctor<B>],
) -> Result<BifunctorCoproduct<B>> {
    let first = parts
        .first()
        .ok_or_else(|| Error::ShapeMismatch("coproduct of bifunctors needs at least one part".into()))?;
    let src = first.src.clone();
    for p in parts {
        if p.src != src {
            return Err(Error::ShapeMismatch("bifunctor coproduct parts must share a source".into()));
        }
    }
    let n = src.object_count();
    let m = src.morphism_count();
    let mut objects = Vec::with_capacity(n * n);
    let mut injections: Vec<Vec<B::Mor>> = vec![Vec::with_capacity(n * n); parts.len()];
    for c1 in 0..n {
        for c2 in 0..n {
            let summands: Vec<B::Obj> = parts.iter().map(|p| p.obj(c1, c2).clone()).collect();
            let (total, injs) = backend.coproduct(&summands)?;
            objects.push(total);
            for (i, inj) in injs.into_iter().enumerate() {
                injections[i].push(inj);
            }
        }
    }
    let at = |c1: usize, c2: usize| c1 * n + c2;
    let mut on_first = Vec::with_capacity(m * n);
    for f in 0..m {
        let (df, cf) = (src.dom_index(f), src.cod_index(f));
        for c in 0..n {
            let summands: Vec<B::Obj> = parts.iter().map(|p| p.obj(cf, c).clone()).collect();
            let injs: Vec<B::Mor> =
                (0..parts.len()).map(|i| injections[i][at(cf, c)].clone()).collect();
            let legs: Result<Vec<B::Mor>> = parts
                .iter()
                .enumerate()
                .map(|(i, p)| backend.compose(&injections[i][at(df, c)], p.first(f, c)))
                .collect();
            on_first.push(backend.factor_coproduct(&summands, &injs, &legs?)?);
        }
    }
    let mut on_second = Vec::with_capacity(n * m);
    for c in 0..n {
        for f in 0..m {
            let (df, cf) = (src.dom_index(f), src.cod_index(f));
            let summands: Vec<B::Obj> = parts.iter().map(|p| p.obj(c, df).clone()).collect();
            let injs: Vec<B::Mor> =
                (0..parts.len()).map(|i| injections[i][at(c, df)].clone()).collect();
            let legs: Result<Vec<B::Mor>> = parts
                .iter()
                .enumerate()
                .map(|(i, p)| backend.compose(&injections[i][at(c, cf)], p.second(c, f)))
                .collect();
            on_second.push(backend.factor_coproduct(&summands, &injs, &legs?)?);
        }
    }
    let bifunctor = Bifunctor { src, on_objects: objects, on_first, on_second };
    bifunctor.validate(backend)?;
    Ok(BifunctorCoproduct { bifunctor, injections })
}

/// Exhaustive FinSet-only check that the mediating morphism out of a
/// computed coend is unique among all maps with the same wedge
/// restriction. Test/verification fuel, gated by apex size.
pub fn finset_mediator_is_unique(
    r: &CoendResult<crate::backend::FinSetBackend>,
    w: &Wedge<crate::backend::FinSetBackend>,
    size_bound: usize,
) -> Result<bool> {
    let backend = crate::backend::FinSetBackend;
    if w.apex.size > size_bound {
        return Err(Error::SearchBudgetExceeded(format!(
            "apex size {} above exhaustive bound {size_bound}",
            w.apex.size
        )));
    }
    let candidates: Vec<FinSetMap> = enumerate_maps(r.wedge.apex, w.apex)
        .into_iter()
        .filter(|u| {
            (0..w.legs.len()).all(|c| {
                backend
                    .compose(u, &r.wedge.legs[c])
                    .map(|through| through == w.legs[c])
                    .unwrap_or(false)
            })
        })
        .collect();
    Ok(candidates.len() == 1)
}

/// FinSet sanity helper: the coend apex of a FinSet bifunctor.
pub fn finset_coend_size(r: &CoendResult<crate::backend::FinSetBackend>) -> usize {
    let _: FinSetObj = r.wedge.apex;
    r.wedge.apex.size
}

#[cfg(test)]
mod tests;
