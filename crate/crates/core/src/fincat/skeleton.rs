use std::collections::BTreeMap;

use super::{FinCat, FunctorRep, NatTransRep};
use crate::error::{Error, Result};

/// Output of [`skeleton`]: the skeletal full subcategory together with the
/// equivalence data witnessing it.
#[derive(Debug, Clone)]
pub struct Skeleton {
    pub subcategory: FinCat,
    /// Inclusion J: subcategory -> original.
    pub inclusion: FunctorRep,
    /// Retraction P: original -> subcategory, with P∘J = id.
    pub retraction: FunctorRep,
    /// Unit μ: id ⇒ P∘J (the identity transformation).
    pub unit: NatTransRep,
    /// Counit ν: J∘P ⇒ id, one chosen isomorphism per object.
    pub counit: NatTransRep,
    /// Inverses of the counit components, indexed by object id.
    pub counit_inverses: BTreeMap<String, String>,
}

fn mutually_inverse_pairs(c: &FinCat, x: usize, y: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for &u in &c.hom(x, y) {
        for &v in &c.hom(y, x) {
            let uv = c.compose_idx(u, v);
            let vu = c.compose_idx(v, u);
            if uv == Some(c.identity_of(y)) && vu == Some(c.identity_of(x)) {
                pairs.push((u, v));
            }
        }
    }
    pairs
}

/// Reduces a finite category to a skeletal full subcategory: one
/// representative per isomorphism class, chosen as the smallest object id.
/// Isomorphisms are found by brute force over hom(X,Y) x hom(Y,X); ties
/// break on the smallest morphism id pair.
pub fn skeleton(c: &FinCat) -> Result<Skeleton> {
    let n = c.object_count();
    // representative of each object's isomorphism class, by smallest id
    let mut rep = vec![usize::MAX; n];
    for x in 0..n {
        let mut class: Vec<usize> = (0..n)
            .filter(|&y| x == y || !mutually_inverse_pairs(c, x, y).is_empty())
            .collect();
        class.sort_by(|&a, &b| c.objects()[a].cmp(&c.objects()[b]));
        rep[x] = class[0];
    }
    // chosen iso nu_X: rep(X) -> X, identity when X is its own representative
    let mut nu = vec![usize::MAX; n];
    let mut nu_inv = vec![usize::MAX; n];
    for x in 0..n {
        if rep[x] == x {
            nu[x] = c.identity_of(x);
            nu_inv[x] = c.identity_of(x);
        } else {
            let mut pairs = mutually_inverse_pairs(c, rep[x], x);
            pairs.sort_by(|a, b| {
                (&c.morphism(a.0).id, &c.morphism(a.1).id)
                    .cmp(&(&c.morphism(b.0).id, &c.morphism(b.1).id))
            });
            let (u, v) = *pairs.first().ok_or_else(|| {
                Error::Internal("representative not isomorphic to its class member".into())
            })?;
            nu[x] = u;
            nu_inv[x] = v;
        }
    }
    // full subcategory on representatives, in declaration order
    let kept: Vec<usize> = (0..n).filter(|&x| rep[x] == x).collect();
    let kept_objects: Vec<String> = kept.iter().map(|&x| c.objects()[x].clone()).collect();
    let kept_mors: Vec<usize> = (0..c.morphism_count())
        .filter(|&m| rep[c.dom_index(m)] == c.dom_index(m) && rep[c.cod_index(m)] == c.cod_index(m))
        .collect();
    let morphisms = kept_mors.iter().map(|&m| c.morphism(m).clone()).collect();
    let identities = kept
        .iter()
        .map(|&x| (c.objects()[x].clone(), c.morphism(c.identity_of(x)).id.clone()))
        .collect();
    let mut composites = Vec::new();
    for &g in &kept_mors {
        for &f in &kept_mors {
            if let Some(r) = c.compose_idx(g, f) {
                composites.push((
                    c.morphism(g).id.clone(),
                    c.morphism(f).id.clone(),
                    c.morphism(r).id.clone(),
                ));
            }
        }
    }
    let sub = FinCat::new(kept_objects, morphisms, identities, composites)?;

    let inclusion = FunctorRep::new(
        sub.clone(),
        c.clone(),
        sub.objects().iter().map(|o| (o.clone(), o.clone())).collect(),
        sub.morphisms().iter().map(|m| (m.id.clone(), m.id.clone())).collect(),
    )?;

    // P(f: X -> Y) = nu_Y^{-1} ∘ f ∘ nu_X
    let mut p_obj = BTreeMap::new();
    for x in 0..n {
        p_obj.insert(c.objects()[x].clone(), c.objects()[rep[x]].clone());
    }
    let mut p_mor = BTreeMap::new();
    for m in 0..c.morphism_count() {
        let x = c.dom_index(m);
        let y = c.cod_index(m);
        let f_nu = c
            .compose_idx(m, nu[x])
            .ok_or_else(|| Error::Internal("retraction composite undefined".into()))?;
        let total = c
            .compose_idx(nu_inv[y], f_nu)
            .ok_or_else(|| Error::Internal("retraction composite undefined".into()))?;
        p_mor.insert(c.morphism(m).id.clone(), c.morphism(total).id.clone());
    }
    let retraction = FunctorRep::new(c.clone(), sub.clone(), p_obj, p_mor)?;

    let unit = NatTransRep::identity(&identity_on(&sub));
    let counit = NatTransRep::new(
        inclusion.compose(&retraction)?,
        identity_on(c),
        (0..n).map(|x| (c.objects()[x].clone(), c.morphism(nu[x]).id.clone())).collect(),
    )?;
    let counit_inverses =
        (0..n).map(|x| (c.objects()[x].clone(), c.morphism(nu_inv[x]).id.clone())).collect();

    Ok(Skeleton { subcategory: sub, inclusion, retraction, unit, counit, counit_inverses })
}

fn identity_on(c: &FinCat) -> FunctorRep {
    super::identity_functor(c)
}
