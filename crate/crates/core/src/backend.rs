//! The cocomplete-backend contract used by the coend and Kan engines:
//! coproducts, coequalizers, copowers, and the two factorization maps
//! their universal properties provide. Coequalizer projections must be
//! epimorphisms, which makes mediating morphisms structurally unique.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::fincat::FinCat;
use crate::finab::{self, AbMap, FgAbGroup};
use crate::finset::{self, FinSetMap, FinSetObj};

pub trait Backend {
    type Obj: Clone + std::fmt::Debug;
    type Mor: Clone + std::fmt::Debug;

    fn dom(&self, m: &Self::Mor) -> Self::Obj;
    fn cod(&self, m: &Self::Mor) -> Self::Obj;
    fn obj_eq(&self, a: &Self::Obj, b: &Self::Obj) -> bool;
    /// Semantic equality of morphisms (modulo relations in Ab).
    fn mor_eq(&self, a: &Self::Mor, b: &Self::Mor) -> bool;
    fn identity(&self, o: &Self::Obj) -> Self::Mor;
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;

    fn coproduct(&self, parts: &[Self::Obj]) -> Result<(Self::Obj, Vec<Self::Mor>)>;
    fn coequalizer(&self, f: &Self::Mor, g: &Self::Mor) -> Result<(Self::Obj, Self::Mor)>;

    fn copower(&self, count: usize, e: &Self::Obj) -> Result<(Self::Obj, Vec<Self::Mor>)> {
        self.coproduct(&vec![e.clone(); count])
    }

    /// The unique morphism out of a coproduct restricting to the given legs.
    fn factor_coproduct(
        &self,
        parts: &[Self::Obj],
        injections: &[Self::Mor],
        legs: &[Self::Mor],
    ) -> Result<Self::Mor>;

    /// The unique morphism through a coequalizer projection, for `h`
    /// already known to equalize the coequalized pair.
    fn factor_coequalizer(&self, proj: &Self::Mor, h: &Self::Mor) -> Result<Self::Mor>;

    /// The unique morphism out of the initial object (the empty coproduct).
    fn from_initial(&self, target: &Self::Obj) -> Result<Self::Mor>;

    fn is_iso(&self, m: &Self::Mor) -> bool;

    /// A canonical human-readable form of an object (used for reports and
    /// canonical-equality assertions in tests).
    fn render_obj(&self, o: &Self::Obj) -> String;
}

/// FinSet as a backend.
#[derive(Debug, Clone, Copy, Default)]
pub struct FinSetBackend;

impl Backend for FinSetBackend {
    type Obj = FinSetObj;
    type Mor = FinSetMap;

    fn dom(&self, m: &FinSetMap) -> FinSetObj {
        m.dom()
    }

    fn cod(&self, m: &FinSetMap) -> FinSetObj {
        m.cod()
    }

    fn obj_eq(&self, a: &FinSetObj, b: &FinSetObj) -> bool {
        a == b
    }

    fn mor_eq(&self, a: &FinSetMap, b: &FinSetMap) -> bool {
        a == b
    }

    fn identity(&self, o: &FinSetObj) -> FinSetMap {
        FinSetMap::identity(*o)
    }

    fn compose(&self, g: &FinSetMap, f: &FinSetMap) -> Result<FinSetMap> {
        FinSetMap::compose(g, f)
    }

    fn coproduct(&self, parts: &[FinSetObj]) -> Result<(FinSetObj, Vec<FinSetMap>)> {
        Ok(finset::coproduct(parts))
    }

    fn coequalizer(&self, f: &FinSetMap, g: &FinSetMap) -> Result<(FinSetObj, FinSetMap)> {
        finset::coequalizer(f, g)
    }

    fn factor_coproduct(
        &self,
        parts: &[FinSetObj],
        _injections: &[FinSetMap],
        legs: &[FinSetMap],
    ) -> Result<FinSetMap> {
        let target = legs
            .first()
            .map(|l| l.cod())
            .ok_or_else(|| Error::ShapeMismatch("empty coproduct factorization needs a target".into()))?;
        finset::factor_coproduct(parts, legs, target)
    }

    fn factor_coequalizer(&self, proj: &FinSetMap, h: &FinSetMap) -> Result<FinSetMap> {
        finset::factor_coequalizer(proj, h)
    }

    fn from_initial(&self, target: &FinSetObj) -> Result<FinSetMap> {
        FinSetMap::new(FinSetObj::new(0), *target, vec![])
    }

    fn is_iso(&self, m: &FinSetMap) -> bool {
        m.is_bijection()
    }

    fn render_obj(&self, o: &FinSetObj) -> String {
        format!("set({})", o.size)
    }
}

/// Factoring an EMPTY coproduct needs an explicit target object; the
/// trait signature cannot carry one, so empty coproducts into FinSet get
/// the canonical map out of the empty set built at the call site.
pub fn empty_finset_map(target: FinSetObj) -> FinSetMap {
    FinSetMap::new(FinSetObj::new(0), target, vec![]).expect("maps out of the empty set exist")
}

/// Ab (finitely generated, presented) as a backend.
#[derive(Debug, Clone, Copy, Default)]
pub struct FinAbBackend;

impl Backend for FinAbBackend {
    type Obj = FgAbGroup;
    type Mor = AbMap;

    fn dom(&self, m: &AbMap) -> FgAbGroup {
        m.dom().clone()
    }

    fn cod(&self, m: &AbMap) -> FgAbGroup {
        m.cod().clone()
    }

    fn obj_eq(&self, a: &FgAbGroup, b: &FgAbGroup) -> bool {
        a == b
    }

    fn mor_eq(&self, a: &AbMap, b: &AbMap) -> bool {
        a.eq_mod_relations(b)
    }

    fn identity(&self, o: &FgAbGroup) -> AbMap {
        AbMap::identity(o)
    }

    fn compose(&self, g: &AbMap, f: &AbMap) -> Result<AbMap> {
        AbMap::compose(g, f)
    }

    fn coproduct(&self, parts: &[FgAbGroup]) -> Result<(FgAbGroup, Vec<AbMap>)> {
        Ok(finab::direct_sum(parts))
    }

    fn coequalizer(&self, f: &AbMap, g: &AbMap) -> Result<(FgAbGroup, AbMap)> {
        finab::coequalizer_ab(f, g)
    }

    fn factor_coproduct(
        &self,
        parts: &[FgAbGroup],
        _injections: &[AbMap],
        legs: &[AbMap],
    ) -> Result<AbMap> {
        if parts.len() != legs.len() {
            return Err(Error::ShapeMismatch("one leg required per coproduct part".into()));
        }
        let target = legs
            .first()
            .map(|l| l.cod().clone())
            .ok_or_else(|| Error::ShapeMismatch("empty coproduct factorization needs a target".into()))?;
        let (total, _) = finab::direct_sum(parts);
        let mut matrix = crate::finab::IntMat::zeros(target.ambient(), total.ambient());
        let mut offset = 0;
        for (part, leg) in parts.iter().zip(legs) {
            if leg.dom() != part || leg.cod() != &target {
                return Err(Error::BoundaryMismatch("coproduct leg has wrong boundary".into()));
            }
            for r in 0..target.ambient() {
                for c in 0..part.ambient() {
                    matrix[(r, offset + c)] = leg.matrix()[(r, c)].clone();
                }
            }
            offset += part.ambient();
        }
        AbMap::new(total, target, matrix)
    }

    fn factor_coequalizer(&self, proj: &AbMap, h: &AbMap) -> Result<AbMap> {
        finab::factor_quotient(proj.cod(), h)
    }

    fn from_initial(&self, target: &FgAbGroup) -> Result<AbMap> {
        Ok(AbMap::zero(&FgAbGroup::zero(), target))
    }

    fn is_iso(&self, m: &AbMap) -> bool {
        m.is_iso()
    }

    fn render_obj(&self, o: &FgAbGroup) -> String {
        o.render()
    }
}

/// A functor from a finite category into a backend, tabulated on every
/// object and morphism.
#[derive(Debug, Clone)]
pub struct BackendFunctor<B: Backend> {
    src: FinCat,
    on_objects: Vec<B::Obj>,
    on_morphisms: Vec<B::Mor>,
}

impl<B: Backend> BackendFunctor<B> {
    /// Validates functoriality by full enumeration.
    pub fn new(
        backend: &B,
        src: FinCat,
        on_objects: Vec<B::Obj>,
        on_morphisms: Vec<B::Mor>,
    ) -> Result<BackendFunctor<B>> {
        if on_objects.len() != src.object_count() || on_morphisms.len() != src.morphism_count() {
            return Err(Error::ShapeMismatch("functor tables must cover the whole category".into()));
        }
        let f = BackendFunctor { src, on_objects, on_morphisms };
        f.check(backend)?;
        Ok(f)
    }

    fn check(&self, backend: &B) -> Result<()> {
        for m in 0..self.src.morphism_count() {
            let img = &self.on_morphisms[m];
            if !backend.obj_eq(&backend.dom(img), &self.on_objects[self.src.dom_index(m)])
                || !backend.obj_eq(&backend.cod(img), &self.on_objects[self.src.cod_index(m)])
            {
                return Err(Error::ShapeMismatch(format!(
                    "image of {} has mismatched boundary",
                    self.src.morphism(m).id
                )));
            }
        }
        for o in 0..self.src.object_count() {
            let id_img = &self.on_morphisms[self.src.identity_of(o)];
            if !backend.mor_eq(id_img, &backend.identity(&self.on_objects[o])) {
                return Err(Error::ShapeMismatch(format!(
                    "identity of {} does not map to an identity",
                    self.src.objects()[o]
                )));
            }
        }
        for g in 0..self.src.morphism_count() {
            for f in 0..self.src.morphism_count() {
                let Some(gf) = self.src.compose_idx(g, f) else { continue };
                let composed = backend.compose(&self.on_morphisms[g], &self.on_morphisms[f])?;
                if !backend.mor_eq(&composed, &self.on_morphisms[gf]) {
                    return Err(Error::ShapeMismatch(format!(
                        "functor breaks composition at ({}, {})",
                        self.src.morphism(g).id,
                        self.src.morphism(f).id
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn src(&self) -> &FinCat {
        &self.src
    }

    pub fn on_object(&self, idx: usize) -> &B::Obj {
        &self.on_objects[idx]
    }

    pub fn on_morphism(&self, idx: usize) -> &B::Mor {
        &self.on_morphisms[idx]
    }

    pub fn objects(&self) -> &[B::Obj] {
        &self.on_objects
    }

    pub fn morphisms(&self) -> &[B::Mor] {
        &self.on_morphisms
    }
}

/// A natural transformation between backend-valued functors.
#[derive(Debug, Clone)]
pub struct BackendNatTrans<B: Backend> {
    components: Vec<B::Mor>,
}

impl<B: Backend> BackendNatTrans<B> {
    pub fn new(components: Vec<B::Mor>) -> BackendNatTrans<B> {
        BackendNatTrans { components }
    }

    pub fn component(&self, obj_idx: usize) -> &B::Mor {
        &self.components[obj_idx]
    }

    pub fn components(&self) -> &[B::Mor] {
        &self.components
    }

    /// Naturality of src ⇒ dst over every morphism of the shared source;
    /// failures name the morphism.
    pub fn validate(
        &self,
        backend: &B,
        src: &BackendFunctor<B>,
        dst: &BackendFunctor<B>,
    ) -> Result<Vec<String>> {
        if self.components.len() != src.src().object_count() {
            return Err(Error::ShapeMismatch("one component required per object".into()));
        }
        let mut failures = Vec::new();
        for m in 0..src.src().morphism_count() {
            let d = src.src().dom_index(m);
            let c = src.src().cod_index(m);
            let lhs = backend.compose(&self.components[c], src.on_morphism(m))?;
            let rhs = backend.compose(dst.on_morphism(m), &self.components[d])?;
            if !backend.mor_eq(&lhs, &rhs) {
                failures.push(src.src().morphism(m).id.clone());
            }
        }
        Ok(failures)
    }
}

/// Scalar helper reexported for builders that tabulate Ab functors.
pub fn bigint(v: i64) -> BigInt {
    BigInt::from(v)
}
