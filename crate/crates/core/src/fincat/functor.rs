use std::collections::BTreeMap;
use std::fmt;

use super::FinCat;
use crate::error::{Error, Result};

/// A functor between finite categories, given by explicit object and
/// morphism maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorRep {
    src: FinCat,
    dst: FinCat,
    obj_map: BTreeMap<String, String>,
    mor_map: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FunctorViolation {
    Boundary { morphism: String, image: String },
    Identity { object: String, image: String },
    Composition { g: String, f: String, expected: String, got: String },
}

impl fmt::Display for FunctorViolation {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctorViolation::Boundary { morphism, image } => {
                write!(out, "image {image} of {morphism} has mismatched boundary")
            }
            FunctorViolation::Identity { object, image } => {
                write!(out, "identity of {object} maps to non-identity {image}")
            }
            FunctorViolation::Composition { g, f, expected, got } => {
                write!(out, "F({g}∘{f}) = {expected} but F({g})∘F({f}) = {got}")
            }
        }
    }
}

impl FunctorRep {
    /// Checks totality of the maps and referenced ids; functoriality laws
    /// are [`FunctorRep::validate`]'s job.
    pub fn new(
        src: FinCat,
        dst: FinCat,
        obj_map: BTreeMap<String, String>,
        mor_map: BTreeMap<String, String>,
    ) -> Result<FunctorRep> {
        for o in src.objects() {
            let image = obj_map
                .get(o)
                .ok_or_else(|| Error::InvalidPresentation(format!("functor misses object {o}")))?;
            dst.object_index(image)?;
        }
        for m in src.morphisms() {
            let image = mor_map.get(&m.id).ok_or_else(|| {
                Error::InvalidPresentation(format!("functor misses morphism {}", m.id))
            })?;
            dst.morphism_index(image)?;
        }
        Ok(FunctorRep { src, dst, obj_map, mor_map })
    }

    pub(crate) fn new_unchecked(
        src: FinCat,
        dst: FinCat,
        obj_map: BTreeMap<String, String>,
        mor_map: BTreeMap<String, String>,
    ) -> FunctorRep {
        FunctorRep { src, dst, obj_map, mor_map }
    }

    pub fn src(&self) -> &FinCat {
        &self.src
    }

    pub fn dst(&self) -> &FinCat {
        &self.dst
    }

    pub fn on_object(&self, o: &str) -> &str {
        &self.obj_map[o]
    }

    pub fn on_morphism(&self, m: &str) -> &str {
        &self.mor_map[m]
    }

    pub fn on_object_idx(&self, o: usize) -> usize {
        self.dst.object_index(&self.obj_map[&self.src.objects()[o]]).unwrap()
    }

    pub fn on_morphism_idx(&self, m: usize) -> usize {
        self.dst.morphism_index(&self.mor_map[&self.src.morphisms()[m].id]).unwrap()
    }

    /// Full functoriality check by enumeration; empty report means valid.
    pub fn validate(&self) -> Vec<FunctorViolation> {
        let mut report = Vec::new();
        for m in self.src.morphisms() {
            let image = &self.mor_map[&m.id];
            let ii = self.dst.morphism_index(image).unwrap();
            if self.dst.morphism(ii).dom != self.obj_map[&m.dom]
                || self.dst.morphism(ii).cod != self.obj_map[&m.cod]
            {
                report.push(FunctorViolation::Boundary { morphism: m.id.clone(), image: image.clone() });
            }
        }
        for (oi, o) in self.src.objects().iter().enumerate() {
            let id_src = self.src.identity_of(oi);
            let image = &self.mor_map[&self.src.morphism(id_src).id];
            let target_obj = self.dst.object_index(&self.obj_map[o]).unwrap();
            let id_dst = self.dst.morphism(self.dst.identity_of(target_obj));
            if image != &id_dst.id {
                report.push(FunctorViolation::Identity { object: o.clone(), image: image.clone() });
            }
        }
        let n = self.src.morphism_count();
        for g in 0..n {
            for f in 0..n {
                let Some(gf) = self.src.compose_idx(g, f) else { continue };
                let fg_img = self.dst.compose_idx(self.on_morphism_idx(g), self.on_morphism_idx(f));
                let expected = self.on_morphism_idx(gf);
                if fg_img != Some(expected) {
                    report.push(FunctorViolation::Composition {
                        g: self.src.morphism(g).id.clone(),
                        f: self.src.morphism(f).id.clone(),
                        expected: self.dst.morphism(expected).id.clone(),
                        got: fg_img
                            .map(|i| self.dst.morphism(i).id.clone())
                            .unwrap_or_else(|| "<undefined>".into()),
                    });
                }
            }
        }
        report
    }

    /// Functor composition `self ∘ inner`.
    pub fn compose(&self, inner: &FunctorRep) -> Result<FunctorRep> {
        if inner.dst != self.src {
            return Err(Error::ShapeMismatch("functor composition boundaries disagree".into()));
        }
        let obj_map = inner
            .obj_map
            .iter()
            .map(|(o, m)| (o.clone(), self.obj_map[m].clone()))
            .collect();
        let mor_map = inner
            .mor_map
            .iter()
            .map(|(o, m)| (o.clone(), self.mor_map[m].clone()))
            .collect();
        Ok(FunctorRep { src: inner.src.clone(), dst: self.dst.clone(), obj_map, mor_map })
    }

    /// The constant functor to `obj` in `dst`.
    pub fn constant(src: FinCat, dst: FinCat, obj: &str) -> Result<FunctorRep> {
        let oi = dst.object_index(obj)?;
        let id = dst.morphism(dst.identity_of(oi)).id.clone();
        let obj_map = src.objects().iter().map(|o| (o.clone(), obj.to_string())).collect();
        let mor_map = src.morphisms().iter().map(|m| (m.id.clone(), id.clone())).collect();
        Ok(FunctorRep { src, dst, obj_map, mor_map })
    }
}

/// The identity functor on `c`.
pub fn identity_functor(c: &FinCat) -> FunctorRep {
    let obj_map = c.objects().iter().map(|o| (o.clone(), o.clone())).collect();
    let mor_map = c.morphisms().iter().map(|m| (m.id.clone(), m.id.clone())).collect();
    FunctorRep { src: c.clone(), dst: c.clone(), obj_map, mor_map }
}

/// A natural transformation between two parallel functors, as an explicit
/// component family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTransRep {
    src_functor: FunctorRep,
    dst_functor: FunctorRep,
    /// object id of the shared source -> component morphism id in the target
    components: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaturalityViolation {
    pub morphism: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for NaturalityViolation {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            out,
            "naturality square for {} does not commute: {} != {}",
            self.morphism, self.lhs, self.rhs
        )
    }
}

impl NatTransRep {
    pub fn new(
        src_functor: FunctorRep,
        dst_functor: FunctorRep,
        components: BTreeMap<String, String>,
    ) -> Result<NatTransRep> {
        if src_functor.src != dst_functor.src || src_functor.dst != dst_functor.dst {
            return Err(Error::ShapeMismatch(
                "natural transformation requires parallel functors".into(),
            ));
        }
        for o in src_functor.src.objects() {
            let comp = components.get(o).ok_or_else(|| {
                Error::InvalidPresentation(format!("transformation misses component at {o}"))
            })?;
            let ci = src_functor.dst.morphism_index(comp)?;
            let info = src_functor.dst.morphism(ci);
            if info.dom != *src_functor.on_object(o) || info.cod != *dst_functor.on_object(o) {
                return Err(Error::ShapeMismatch(format!(
                    "component at {o} must go F({o}) -> G({o}), got {comp}"
                )));
            }
        }
        Ok(NatTransRep { src_functor, dst_functor, components })
    }

    pub fn src_functor(&self) -> &FunctorRep {
        &self.src_functor
    }

    pub fn dst_functor(&self) -> &FunctorRep {
        &self.dst_functor
    }

    pub fn component(&self, o: &str) -> &str {
        &self.components[o]
    }

    /// The identity transformation on a functor.
    pub fn identity(f: &FunctorRep) -> NatTransRep {
        let components = f
            .src
            .objects()
            .iter()
            .map(|o| {
                let oi = f.dst.object_index(f.on_object(o)).unwrap();
                (o.clone(), f.dst.morphism(f.dst.identity_of(oi)).id.clone())
            })
            .collect();
        NatTransRep { src_functor: f.clone(), dst_functor: f.clone(), components }
    }

    /// Naturality check over every morphism of the source.
    pub fn validate(&self) -> Vec<NaturalityViolation> {
        let mut report = Vec::new();
        let cat = &self.src_functor.src;
        let dst = &self.src_functor.dst;
        for (mi, m) in cat.morphisms().iter().enumerate() {
            let f_img = self.src_functor.on_morphism_idx(mi);
            let g_img = self.dst_functor.on_morphism_idx(mi);
            let at_dom = dst.morphism_index(&self.components[&m.dom]).unwrap();
            let at_cod = dst.morphism_index(&self.components[&m.cod]).unwrap();
            let lhs = dst.compose_idx(g_img, at_dom);
            let rhs = dst.compose_idx(at_cod, f_img);
            if lhs.is_none() || lhs != rhs {
                report.push(NaturalityViolation {
                    morphism: m.id.clone(),
                    lhs: lhs.map(|i| dst.morphism(i).id.clone()).unwrap_or_else(|| "<undefined>".into()),
                    rhs: rhs.map(|i| dst.morphism(i).id.clone()).unwrap_or_else(|| "<undefined>".into()),
                });
            }
        }
        report
    }
}

/// Vertical composition (β ∘ α)_C := β_C ∘ α_C.
pub fn vertical_compose(beta: &NatTransRep, alpha: &NatTransRep) -> Result<NatTransRep> {
    if alpha.dst_functor != beta.src_functor {
        return Err(Error::ShapeMismatch(
            "vertical composition needs matching middle functor".into(),
        ));
    }
    let dst = &alpha.src_functor.dst;
    let mut components = BTreeMap::new();
    for o in alpha.src_functor.src.objects() {
        let b = beta.components[o].clone();
        let a = alpha.components[o].clone();
        components.insert(o.clone(), dst.compose(&b, &a)?);
    }
    Ok(NatTransRep {
        src_functor: alpha.src_functor.clone(),
        dst_functor: beta.dst_functor.clone(),
        components,
    })
}

/// Whiskering along a functor into the source: (α_K)_A := α_{K(A)}.
pub fn whisker_left(alpha: &NatTransRep, k: &FunctorRep) -> Result<NatTransRep> {
    if k.dst != alpha.src_functor.src {
        return Err(Error::ShapeMismatch("whisker_left requires K landing in α's source".into()));
    }
    let components = k
        .src
        .objects()
        .iter()
        .map(|a| (a.clone(), alpha.components[k.on_object(a)].clone()))
        .collect();
    Ok(NatTransRep {
        src_functor: alpha.src_functor.compose(k)?,
        dst_functor: alpha.dst_functor.compose(k)?,
        components,
    })
}

/// Whiskering with a functor out of the target: (H(α))_C := H(α_C).
pub fn whisker_right(h: &FunctorRep, alpha: &NatTransRep) -> Result<NatTransRep> {
    if alpha.src_functor.dst != h.src {
        return Err(Error::ShapeMismatch("whisker_right requires H departing α's target".into()));
    }
    let components = alpha
        .components
        .iter()
        .map(|(o, m)| (o.clone(), h.on_morphism(m).to_string()))
        .collect();
    Ok(NatTransRep {
        src_functor: h.compose(&alpha.src_functor)?,
        dst_functor: h.compose(&alpha.dst_functor)?,
        components,
    })
}
