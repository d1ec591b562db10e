//! Presentations of finite categories and their structural operations.
//!
//! A [`FinCat`] is an explicit finite presentation: an ordered object list,
//! an ordered morphism list with boundaries, an identity assignment, and a
//! total composition table on composable pairs. All iteration follows
//! declaration order, so every operation downstream is deterministic.

mod functor;
mod skeleton;

pub use functor::{
    identity_functor, vertical_compose, whisker_left, whisker_right, FunctorRep,
    FunctorViolation, NatTransRep, NaturalityViolation,
};
pub use skeleton::{skeleton, Skeleton};

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Boundary data of one morphism in a presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorInfo {
    pub id: String,
    pub dom: String,
    pub cod: String,
}

/// A finite category given by an explicit composition table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCat {
    objects: Vec<String>,
    morphisms: Vec<MorInfo>,
    /// object index -> morphism index of its identity
    identity: Vec<usize>,
    /// (g index, f index) -> index of g∘f, defined exactly when cod(f) = dom(g)
    comp: BTreeMap<(usize, usize), usize>,
    obj_index: BTreeMap<String, usize>,
    mor_index: BTreeMap<String, usize>,
}

/// One broken law, with the witnessing morphisms spelled out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CategoryViolation {
    IdentityLaw { identity: String, morphism: String, got: String },
    Associativity { h: String, g: String, f: String, left: String, right: String },
    MissingComposite { g: String, f: String },
    SpuriousComposite { g: String, f: String },
    CompositeBoundary { g: String, f: String, composite: String },
}

impl fmt::Display for CategoryViolation {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CategoryViolation::IdentityLaw { identity, morphism, got } => write!(
                out,
                "identity law: composing {identity} with {morphism} gives {got}, expected {morphism}"
            ),
            CategoryViolation::Associativity { h, g, f, left, right } => write!(
                out,
                "associativity: {h}∘({g}∘{f}) = {left} but ({h}∘{g})∘{f} = {right}"
            ),
            CategoryViolation::MissingComposite { g, f } => {
                write!(out, "closure: composite {g}∘{f} undefined for a composable pair")
            }
            CategoryViolation::SpuriousComposite { g, f } => {
                write!(out, "closure: composite {g}∘{f} defined for a non-composable pair")
            }
            CategoryViolation::CompositeBoundary { g, f, composite } => {
                write!(out, "closure: {g}∘{f} = {composite} has wrong boundary")
            }
        }
    }
}

impl FinCat {
    /// Builds a presentation from explicit parts. Fails on structural
    /// problems (duplicate or dangling ids, identities with wrong
    /// boundaries); law checking is [`FinCat::validate`]'s job.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<MorInfo>,
        identities: Vec<(String, String)>,
        composites: Vec<(String, String, String)>,
    ) -> Result<FinCat> {
        let mut obj_index = BTreeMap::new();
        for (i, o) in objects.iter().enumerate() {
            if obj_index.insert(o.clone(), i).is_some() {
                return Err(Error::InvalidPresentation(format!("duplicate object id {o}")));
            }
        }
        let mut mor_index = BTreeMap::new();
        for (i, m) in morphisms.iter().enumerate() {
            if mor_index.insert(m.id.clone(), i).is_some() {
                return Err(Error::InvalidPresentation(format!("duplicate morphism id {}", m.id)));
            }
            if !obj_index.contains_key(&m.dom) || !obj_index.contains_key(&m.cod) {
                return Err(Error::InvalidPresentation(format!(
                    "morphism {} has unknown boundary {} -> {}",
                    m.id, m.dom, m.cod
                )));
            }
        }
        let mut identity = vec![usize::MAX; objects.len()];
        for (obj, mor) in &identities {
            let oi = *obj_index
                .get(obj)
                .ok_or_else(|| Error::InvalidPresentation(format!("identity for unknown object {obj}")))?;
            let mi = *mor_index
                .get(mor)
                .ok_or_else(|| Error::InvalidPresentation(format!("unknown identity morphism {mor}")))?;
            if morphisms[mi].dom != *obj || morphisms[mi].cod != *obj {
                return Err(Error::InvalidPresentation(format!(
                    "identity of {obj} must be an endomorphism, got {mor}"
                )));
            }
            identity[oi] = mi;
        }
        for (oi, o) in objects.iter().enumerate() {
            if identity[oi] == usize::MAX {
                return Err(Error::InvalidPresentation(format!("object {o} has no identity assigned")));
            }
        }
        let mut comp = BTreeMap::new();
        for (g, f, gf) in &composites {
            let gi = *mor_index
                .get(g)
                .ok_or_else(|| Error::InvalidPresentation(format!("unknown morphism {g} in composition table")))?;
            let fi = *mor_index
                .get(f)
                .ok_or_else(|| Error::InvalidPresentation(format!("unknown morphism {f} in composition table")))?;
            let ri = *mor_index
                .get(gf)
                .ok_or_else(|| Error::InvalidPresentation(format!("unknown morphism {gf} in composition table")))?;
            if comp.insert((gi, fi), ri).is_some() {
                return Err(Error::InvalidPresentation(format!("duplicate composition entry ({g}, {f})")));
            }
        }
        Ok(FinCat { objects, morphisms, identity, comp, obj_index, mor_index })
    }

    /// Builds a presentation whose identities are inferred from the
    /// composition table: the identity of `X` is the unique endomorphism
    /// neutral on both sides for every defined composite.
    pub fn from_comp_table(
        objects: Vec<String>,
        morphisms: Vec<MorInfo>,
        composites: Vec<(String, String, String)>,
    ) -> Result<FinCat> {
        let mut ids = Vec::with_capacity(objects.len());
        for obj in &objects {
            let mut candidates = Vec::new();
            'cand: for e in &morphisms {
                if e.dom != *obj || e.cod != *obj {
                    continue;
                }
                for f in &morphisms {
                    if f.cod == *obj {
                        match composites.iter().find(|(g, x, _)| g == &e.id && x == &f.id) {
                            Some((_, _, r)) if r == &f.id => {}
                            _ => continue 'cand,
                        }
                    }
                    if f.dom == *obj {
                        match composites.iter().find(|(g, x, _)| g == &f.id && x == &e.id) {
                            Some((_, _, r)) if r == &f.id => {}
                            _ => continue 'cand,
                        }
                    }
                }
                candidates.push(e.id.clone());
            }
            match candidates.len() {
                1 => ids.push((obj.clone(), candidates.pop().unwrap())),
                0 => {
                    return Err(Error::InvalidPresentation(format!(
                        "no identity candidate for object {obj}"
                    )))
                }
                _ => {
                    return Err(Error::InvalidPresentation(format!(
                        "ambiguous identity candidates for object {obj}: {candidates:?}"
                    )))
                }
            }
        }
        FinCat::new(objects, morphisms, ids, composites)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[MorInfo] {
        &self.morphisms
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_index(&self, id: &str) -> Result<usize> {
        self.obj_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownEntity(format!("object {id}")))
    }

    pub fn morphism_index(&self, id: &str) -> Result<usize> {
        self.mor_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownEntity(format!("morphism {id}")))
    }

    pub fn morphism(&self, idx: usize) -> &MorInfo {
        &self.morphisms[idx]
    }

    pub fn dom_index(&self, mor: usize) -> usize {
        self.obj_index[&self.morphisms[mor].dom]
    }

    pub fn cod_index(&self, mor: usize) -> usize {
        self.obj_index[&self.morphisms[mor].cod]
    }

    pub fn identity_of(&self, obj: usize) -> usize {
        self.identity[obj]
    }

    /// Composes by index; `None` when the pair is not composable or the
    /// table has a hole (which `validate` reports).
    pub fn compose_idx(&self, g: usize, f: usize) -> Option<usize> {
        self.comp.get(&(g, f)).copied()
    }

    /// Composition by morphism id, per the declared table.
    pub fn compose(&self, g: &str, f: &str) -> Result<String> {
        let gi = self.morphism_index(g)?;
        let fi = self.morphism_index(f)?;
        if self.cod_index(fi) != self.dom_index(gi) {
            return Err(Error::NotComposable { g: g.to_string(), f: f.to_string() });
        }
        let r = self.comp.get(&(gi, fi)).ok_or_else(|| {
            Error::InvalidPresentation(format!("composition table has no entry for ({g}, {f})"))
        })?;
        Ok(self.morphisms[*r].id.clone())
    }

    /// Morphism indices of hom(x, y), in declaration order. This ordering
    /// fixes every copower offset downstream.
    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.morphisms.len())
            .filter(|&m| self.dom_index(m) == x && self.cod_index(m) == y)
            .collect()
    }

    /// Checks all category laws by full enumeration; empty report means valid.
    pub fn validate(&self) -> Vec<CategoryViolation> {
        let mut report = Vec::new();
        let n = self.morphisms.len();
        // closure: defined exactly on composable pairs, with matching boundaries
        for g in 0..n {
            for f in 0..n {
                let composable = self.cod_index(f) == self.dom_index(g);
                match (composable, self.comp.get(&(g, f))) {
                    (true, None) => report.push(CategoryViolation::MissingComposite {
                        g: self.morphisms[g].id.clone(),
                        f: self.morphisms[f].id.clone(),
                    }),
                    (false, Some(_)) => report.push(CategoryViolation::SpuriousComposite {
                        g: self.morphisms[g].id.clone(),
                        f: self.morphisms[f].id.clone(),
                    }),
                    (true, Some(&r)) => {
                        if self.dom_index(r) != self.dom_index(f) || self.cod_index(r) != self.cod_index(g) {
                            report.push(CategoryViolation::CompositeBoundary {
                                g: self.morphisms[g].id.clone(),
                                f: self.morphisms[f].id.clone(),
                                composite: self.morphisms[r].id.clone(),
                            });
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        // identity laws
        for f in 0..n {
            let id_cod = self.identity[self.cod_index(f)];
            if let Some(&r) = self.comp.get(&(id_cod, f)) {
                if r != f {
                    report.push(CategoryViolation::IdentityLaw {
                        identity: self.morphisms[id_cod].id.clone(),
                        morphism: self.morphisms[f].id.clone(),
                        got: self.morphisms[r].id.clone(),
                    });
                }
            }
            let id_dom = self.identity[self.dom_index(f)];
            if let Some(&r) = self.comp.get(&(f, id_dom)) {
                if r != f {
                    report.push(CategoryViolation::IdentityLaw {
                        identity: self.morphisms[id_dom].id.clone(),
                        morphism: self.morphisms[f].id.clone(),
                        got: self.morphisms[r].id.clone(),
                    });
                }
            }
        }
        // associativity over all composable triples: O(|mor|^3), fine at desk scale
        for h in 0..n {
            for g in 0..n {
                let Some(&hg) = self.comp.get(&(h, g)) else { continue };
                for f in 0..n {
                    let Some(&gf) = self.comp.get(&(g, f)) else { continue };
                    let left = self.comp.get(&(h, gf));
                    let right = self.comp.get(&(hg, f));
                    if let (Some(&l), Some(&r)) = (left, right) {
                        if l != r {
                            report.push(CategoryViolation::Associativity {
                                h: self.morphisms[h].id.clone(),
                                g: self.morphisms[g].id.clone(),
                                f: self.morphisms[f].id.clone(),
                                left: self.morphisms[l].id.clone(),
                                right: self.morphisms[r].id.clone(),
                            });
                        }
                    }
                }
            }
        }
        report
    }

    /// The opposite category: boundaries swapped, composition table
    /// transposed. Ids are reused, so this is an involution up to
    /// structural equality.
    pub fn opposite(&self) -> FinCat {
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| MorInfo { id: m.id.clone(), dom: m.cod.clone(), cod: m.dom.clone() })
            .collect();
        let comp = self.comp.iter().map(|(&(g, f), &r)| ((f, g), r)).collect();
        FinCat {
            objects: self.objects.clone(),
            morphisms,
            identity: self.identity.clone(),
            comp,
            obj_index: self.obj_index.clone(),
            mor_index: self.mor_index.clone(),
        }
    }

    /// Product category with componentwise composition. Object ids are
    /// `(a,b)`, morphism ids `(f,g)`; ordering is left-major declaration
    /// order.
    pub fn product(a: &FinCat, b: &FinCat) -> FinCat {
        let pair = |x: &str, y: &str| format!("({x},{y})");
        let objects: Vec<String> = a
            .objects
            .iter()
            .flat_map(|x| b.objects.iter().map(move |y| pair(x, y)))
            .collect();
        let mut morphisms = Vec::new();
        for f in &a.morphisms {
            for g in &b.morphisms {
                morphisms.push(MorInfo {
                    id: pair(&f.id, &g.id),
                    dom: pair(&f.dom, &g.dom),
                    cod: pair(&f.cod, &g.cod),
                });
            }
        }
        let bm = b.morphisms.len();
        let bo = b.objects.len();
        let mut identity = Vec::with_capacity(objects.len());
        for &ia in &a.identity {
            for &ib in &b.identity {
                identity.push(ia * bm + ib);
            }
        }
        let mut comp = BTreeMap::new();
        for (&(g1, f1), &r1) in &a.comp {
            for (&(g2, f2), &r2) in &b.comp {
                comp.insert((g1 * bm + g2, f1 * bm + f2), r1 * bm + r2);
            }
        }
        let obj_index = objects.iter().enumerate().map(|(i, o)| (o.clone(), i)).collect();
        let mor_index = morphisms.iter().enumerate().map(|(i, m)| (m.id.clone(), i)).collect();
        let _ = bo;
        FinCat { objects, morphisms, identity, comp, obj_index, mor_index }
    }

    /// Projection functors out of `product(a, b)`.
    pub fn product_projections(prod: &FinCat, a: &FinCat, b: &FinCat) -> (FunctorRep, FunctorRep) {
        let bm = b.morphisms.len();
        let bo = b.objects.len();
        let mut obj1 = BTreeMap::new();
        let mut obj2 = BTreeMap::new();
        for (i, o) in prod.objects.iter().enumerate() {
            obj1.insert(o.clone(), a.objects[i / bo].clone());
            obj2.insert(o.clone(), b.objects[i % bo].clone());
        }
        let mut mor1 = BTreeMap::new();
        let mut mor2 = BTreeMap::new();
        for (i, m) in prod.morphisms.iter().enumerate() {
            mor1.insert(m.id.clone(), a.morphisms[i / bm].id.clone());
            mor2.insert(m.id.clone(), b.morphisms[i % bm].id.clone());
        }
        (
            FunctorRep::new_unchecked(prod.clone(), a.clone(), obj1, mor1),
            FunctorRep::new_unchecked(prod.clone(), b.clone(), obj2, mor2),
        )
    }
}

/// The terminal category τ: one object `*`, one identity.
pub fn terminal_category() -> FinCat {
    FinCat::new(
        vec!["*".into()],
        vec![MorInfo { id: "id*".into(), dom: "*".into(), cod: "*".into() }],
        vec![("*".into(), "id*".into())],
        vec![("id*".into(), "id*".into(), "id*".into())],
    )
    .unwrap()
}

/// The walking arrow: objects a, b and one morphism u: a -> b.
pub fn walking_arrow() -> FinCat {
    FinCat::new(
        vec!["a".into(), "b".into()],
        vec![
            MorInfo { id: "ida".into(), dom: "a".into(), cod: "a".into() },
            MorInfo { id: "idb".into(), dom: "b".into(), cod: "b".into() },
            MorInfo { id: "u".into(), dom: "a".into(), cod: "b".into() },
        ],
        vec![("a".into(), "ida".into()), ("b".into(), "idb".into())],
        vec![
            ("ida".into(), "ida".into(), "ida".into()),
            ("idb".into(), "idb".into(), "idb".into()),
            ("u".into(), "ida".into(), "u".into()),
            ("idb".into(), "u".into(), "u".into()),
        ],
    )
    .unwrap()
}

/// Discrete category on `n` objects `o0..o{n-1}`.
pub fn discrete_category(n: usize) -> FinCat {
    let objects: Vec<String> = (0..n).map(|i| format!("o{i}")).collect();
    let morphisms: Vec<MorInfo> = (0..n)
        .map(|i| MorInfo { id: format!("id{i}"), dom: format!("o{i}"), cod: format!("o{i}") })
        .collect();
    let identities = (0..n).map(|i| (format!("o{i}"), format!("id{i}"))).collect();
    let composites = (0..n).map(|i| (format!("id{i}"), format!("id{i}"), format!("id{i}"))).collect();
    FinCat::new(objects, morphisms, identities, composites).unwrap()
}

/// Finite poset as a thin category: a morphism `x<=y` whenever `leq(x, y)`.
pub fn poset_category(elements: &[&str], leq: impl Fn(&str, &str) -> bool) -> FinCat {
    let objects: Vec<String> = elements.iter().map(|e| e.to_string()).collect();
    let mut morphisms = Vec::new();
    for x in elements {
        for y in elements {
            if leq(x, y) {
                morphisms.push(MorInfo {
                    id: format!("{x}<={y}"),
                    dom: x.to_string(),
                    cod: y.to_string(),
                });
            }
        }
    }
    let identities = elements.iter().map(|x| (x.to_string(), format!("{x}<={x}"))).collect();
    let mut composites = Vec::new();
    for f in &morphisms {
        for g in &morphisms {
            if g.dom == f.cod {
                composites.push((g.id.clone(), f.id.clone(), format!("{}<={}", f.dom, g.cod)));
            }
        }
    }
    FinCat::new(objects, morphisms, identities, composites).unwrap()
}

/// The chain poset 0 <= 1 <= ... <= n-1 as a category.
pub fn chain_category(n: usize) -> FinCat {
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    poset_category(&refs, |x, y| x.parse::<usize>().unwrap() <= y.parse::<usize>().unwrap())
}

/// The full subcategory of finite sets {0..k} for k <= max_size, with all
/// functions as morphisms. Used as a brute-force target mirroring small
/// set-valued diagrams. Morphism ids encode the function table.
pub fn finset_category(max_size: usize) -> FinCat {
    assert!(max_size <= 9, "finset_category encodes table entries as single digits");
    let objects: Vec<String> = (0..=max_size).map(|i| i.to_string()).collect();
    let mut morphisms = Vec::new();
    for d in 0..=max_size {
        for c in 0..=max_size {
            // all functions {0..d-1} -> {0..c-1}, lexicographic
            let total = (c as u64).checked_pow(d as u32).unwrap_or(0);
            if d == 0 {
                morphisms.push(MorInfo {
                    id: format!("f{d}.{c}."),
                    dom: d.to_string(),
                    cod: c.to_string(),
                });
                continue;
            }
            for code in 0..total {
                let mut digits = String::new();
                let mut rem = code;
                for _ in 0..d {
                    digits.push(char::from_digit((rem % c as u64) as u32, 10).unwrap());
                    rem /= c as u64;
                }
                morphisms.push(MorInfo {
                    id: format!("f{d}.{c}.{digits}"),
                    dom: d.to_string(),
                    cod: c.to_string(),
                });
            }
        }
    }
    let decode = |id: &str| -> (usize, usize, Vec<usize>) {
        let rest = &id[1..];
        let mut parts = rest.splitn(3, '.');
        let d: usize = parts.next().unwrap().parse().unwrap();
        let c: usize = parts.next().unwrap().parse().unwrap();
        let table: Vec<usize> =
            parts.next().unwrap().chars().map(|ch| ch.to_digit(10).unwrap() as usize).collect();
        (d, c, table)
    };
    let encode = |d: usize, c: usize, table: &[usize]| -> String {
        let digits: String =
            table.iter().map(|&v| char::from_digit(v as u32, 10).unwrap()).collect();
        format!("f{d}.{c}.{digits}")
    };
    let identities = (0..=max_size)
        .map(|k| (k.to_string(), encode(k, k, &(0..k).collect::<Vec<_>>())))
        .collect();
    let mut composites = Vec::new();
    for g in &morphisms {
        for f in &morphisms {
            if f.cod != g.dom {
                continue;
            }
            let (fd, _fc, ft) = decode(&f.id);
            let (_gd, gc, gt) = decode(&g.id);
            let composed: Vec<usize> = ft.iter().map(|&x| gt[x]).collect();
            composites.push((g.id.clone(), f.id.clone(), encode(fd, gc, &composed)));
        }
    }
    FinCat::new(objects, morphisms, identities, composites).unwrap()
}

/// Decodes a `finset_category` morphism id back into its function table.
pub fn decode_finset_morphism(id: &str) -> (usize, usize, Vec<usize>) {
    let rest = &id[1..];
    let mut parts = rest.splitn(3, '.');
    let d: usize = parts.next().unwrap().parse().unwrap();
    let c: usize = parts.next().unwrap().parse().unwrap();
    let table: Vec<usize> =
        parts.next().unwrap().chars().map(|ch| ch.to_digit(10).unwrap() as usize).collect();
    let _ = d;
    (d, c, table)
}

#[cfg(test)]
mod tests;
