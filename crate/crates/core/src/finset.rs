//! The cocomplete target FinSet: canonical finite sets `{0..n-1}`,
//! functions as index tables, coproducts, coequalizers, and copowers.

use crate::error::{Error, Result};

/// A canonical finite set, identified with {0, ..., size-1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinSetObj {
    pub size: usize,
}

impl FinSetObj {
    pub fn new(size: usize) -> FinSetObj {
        FinSetObj { size }
    }
}

/// A function between canonical finite sets, as a lookup table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinSetMap {
    dom: FinSetObj,
    cod: FinSetObj,
    table: Vec<usize>,
}

impl FinSetMap {
    /// A map out of ∅ exists for any codomain; a map into ∅ only from ∅.
    pub fn new(dom: FinSetObj, cod: FinSetObj, table: Vec<usize>) -> Result<FinSetMap> {
        if table.len() != dom.size {
            return Err(Error::BoundaryMismatch(format!(
                "table length {} does not match domain size {}",
                table.len(),
                dom.size
            )));
        }
        if cod.size == 0 && dom.size > 0 {
            return Err(Error::BoundaryMismatch(format!(
                "no maps from a set of size {} into the empty set",
                dom.size
            )));
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= cod.size) {
            return Err(Error::BoundaryMismatch(format!(
                "table entry {bad} out of range for codomain size {}",
                cod.size
            )));
        }
        Ok(FinSetMap { dom, cod, table })
    }

    pub fn identity(o: FinSetObj) -> FinSetMap {
        FinSetMap { dom: o, cod: o, table: (0..o.size).collect() }
    }

    pub fn dom(&self) -> FinSetObj {
        self.dom
    }

    pub fn cod(&self) -> FinSetObj {
        self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// g ∘ f, applying `f` first.
    pub fn compose(g: &FinSetMap, f: &FinSetMap) -> Result<FinSetMap> {
        if f.cod != g.dom {
            return Err(Error::NotComposable {
                g: format!("{:?}", g.table),
                f: format!("{:?}", f.table),
            });
        }
        Ok(FinSetMap {
            dom: f.dom,
            cod: g.cod,
            table: f.table.iter().map(|&x| g.table[x]).collect(),
        })
    }

    pub fn is_bijection(&self) -> bool {
        if self.dom.size != self.cod.size {
            return false;
        }
        let mut seen = vec![false; self.cod.size];
        for &v in &self.table {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    pub fn is_surjection(&self) -> bool {
        let mut seen = vec![false; self.cod.size];
        for &v in &self.table {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    }
}

/// Coproduct of finite sets with offset-ordered injections.
pub fn coproduct(parts: &[FinSetObj]) -> (FinSetObj, Vec<FinSetMap>) {
    let total = FinSetObj::new(parts.iter().map(|p| p.size).sum());
    let mut injections = Vec::with_capacity(parts.len());
    let mut offset = 0;
    for p in parts {
        injections.push(FinSetMap {
            dom: *p,
            cod: total,
            table: (offset..offset + p.size).collect(),
        });
        offset += p.size;
    }
    (total, injections)
}

/// Copower S ⊙ E: |s| disjoint copies of `e`, injection k at offset k·|E|.
pub fn copower(count: usize, e: FinSetObj) -> (FinSetObj, Vec<FinSetMap>) {
    coproduct(&vec![e; count])
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    // keep the smaller element as root so class indexing is canonical
    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Coequalizer of a parallel pair: the quotient of the shared codomain by
/// the finest relation with proj∘f = proj∘g. Class indices follow the
/// smallest member of each class.
pub fn coequalizer(f: &FinSetMap, g: &FinSetMap) -> Result<(FinSetObj, FinSetMap)> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(Error::BoundaryMismatch(
            "coequalizer needs a parallel pair with shared boundaries".into(),
        ));
    }
    let n = f.cod.size;
    let mut uf = UnionFind::new(n);
    for x in 0..f.dom.size {
        uf.union(f.table[x], g.table[x]);
    }
    // dense reindexing: scanning 0..n in order, a class is numbered when its
    // root (= smallest member) first appears
    let mut class_of_root = vec![usize::MAX; n];
    let mut next = 0;
    let mut table = Vec::with_capacity(n);
    for x in 0..n {
        let r = uf.find(x);
        if class_of_root[r] == usize::MAX {
            class_of_root[r] = next;
            next += 1;
        }
        table.push(class_of_root[r]);
    }
    let q = FinSetObj::new(next);
    Ok((q, FinSetMap { dom: f.cod, cod: q, table }))
}

/// The two copower actions: reindexing along a map of index sets, and the
/// pointwise action of a map of carriers.
pub enum CopowerAction<'a> {
    /// t ⊙ E for t: S -> U, against copowers S⊙E and U⊙E.
    OnIndex { t: &'a [usize], target_count: usize, e: FinSetObj },
    /// S ⊙ f for f: E1 -> E2, with |S| = count.
    OnMorphism { count: usize, f: &'a FinSetMap },
}

/// Builds the unique map the defining copower squares require; uniqueness
/// holds because the injections are jointly surjective.
pub fn copower_action(action: CopowerAction<'_>) -> Result<FinSetMap> {
    match action {
        CopowerAction::OnIndex { t, target_count, e } => {
            if let Some(&bad) = t.iter().find(|&&u| u >= target_count) {
                return Err(Error::BoundaryMismatch(format!(
                    "index map entry {bad} exceeds target index set of size {target_count}"
                )));
            }
            let (dom, _) = copower(t.len(), e);
            let (cod, _) = copower(target_count, e);
            let mut table = Vec::with_capacity(dom.size);
            for (s, &u) in t.iter().enumerate() {
                let _ = s;
                for j in 0..e.size {
                    table.push(u * e.size + j);
                }
            }
            FinSetMap::new(dom, cod, table)
        }
        CopowerAction::OnMorphism { count, f } => {
            let (dom, _) = copower(count, f.dom);
            let (cod, _) = copower(count, f.cod);
            let mut table = Vec::with_capacity(dom.size);
            for k in 0..count {
                for j in 0..f.dom.size {
                    table.push(k * f.cod.size + f.table[j]);
                }
            }
            FinSetMap::new(dom, cod, table)
        }
    }
}

/// The unique map out of a coproduct determined by one leg per part.
pub fn factor_coproduct(
    parts: &[FinSetObj],
    legs: &[FinSetMap],
    target: FinSetObj,
) -> Result<FinSetMap> {
    if parts.len() != legs.len() {
        return Err(Error::ShapeMismatch("one leg required per coproduct part".into()));
    }
    let mut table = Vec::new();
    for (p, leg) in parts.iter().zip(legs) {
        if leg.dom != *p || leg.cod != target {
            return Err(Error::BoundaryMismatch("coproduct leg has wrong boundary".into()));
        }
        table.extend_from_slice(&leg.table);
    }
    FinSetMap::new(FinSetObj::new(parts.iter().map(|p| p.size).sum()), target, table)
}

/// The unique map through a coequalizer projection: given h with
/// h∘f = h∘g, returns u with u∘proj = h.
pub fn factor_coequalizer(proj: &FinSetMap, h: &FinSetMap) -> Result<FinSetMap> {
    if proj.dom != h.dom {
        return Err(Error::BoundaryMismatch("factoring map must share the projection's domain".into()));
    }
    let mut table = vec![usize::MAX; proj.cod.size];
    for x in 0..proj.dom.size {
        let q = proj.table[x];
        if table[q] == usize::MAX {
            table[q] = h.table[x];
        } else if table[q] != h.table[x] {
            return Err(Error::Internal(
                "map does not respect the coequalizer relation".into(),
            ));
        }
    }
    if table.iter().any(|&v| v == usize::MAX) {
        return Err(Error::Internal("coequalizer projection not surjective".into()));
    }
    FinSetMap::new(proj.cod, h.cod, table)
}

/// All maps `dom -> cod`, in lexicographic table order. Exhaustive-search
/// oracle fuel; keep the sizes tiny.
pub fn enumerate_maps(dom: FinSetObj, cod: FinSetObj) -> Vec<FinSetMap> {
    if dom.size == 0 {
        return vec![FinSetMap { dom, cod, table: vec![] }];
    }
    if cod.size == 0 {
        return vec![];
    }
    let total = (cod.size as u64).pow(dom.size as u32);
    let mut out = Vec::with_capacity(total as usize);
    for code in 0..total {
        let mut table = Vec::with_capacity(dom.size);
        let mut rem = code;
        for _ in 0..dom.size {
            table.push((rem % cod.size as u64) as usize);
            rem /= cod.size as u64;
        }
        out.push(FinSetMap { dom, cod, table });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coproduct_examples() {
        let (empty, injs) = coproduct(&[FinSetObj::new(0), FinSetObj::new(0)]);
        assert_eq!(empty.size, 0);
        assert_eq!(injs.len(), 2);

        let (single, injs) = coproduct(&[FinSetObj::new(3)]);
        assert_eq!(single.size, 3);
        assert_eq!(injs[0], FinSetMap::identity(FinSetObj::new(3)));

        let (five, injs) = coproduct(&[FinSetObj::new(2), FinSetObj::new(3)]);
        assert_eq!(five.size, 5);
        assert_eq!(injs[0].table(), &[0, 1]);
        assert_eq!(injs[1].table(), &[2, 3, 4]);
    }

    #[test]
    fn coequalizer_of_equal_pair_is_identity() {
        let f = FinSetMap::new(FinSetObj::new(2), FinSetObj::new(3), vec![0, 2]).unwrap();
        let (q, proj) = coequalizer(&f, &f).unwrap();
        assert_eq!(q.size, 3);
        assert_eq!(proj, FinSetMap::identity(FinSetObj::new(3)));
    }

    #[test]
    fn coequalizer_merges_generated_pairs() {
        // expected classes frozen from the union-find oracle over the pairs
        // (0,1), (1,2): one class
        let f = FinSetMap::new(FinSetObj::new(2), FinSetObj::new(3), vec![0, 1]).unwrap();
        let g = FinSetMap::new(FinSetObj::new(2), FinSetObj::new(3), vec![1, 2]).unwrap();
        let (q, proj) = coequalizer(&f, &g).unwrap();
        assert_eq!(q.size, 1);
        assert_eq!(proj.table(), &[0, 0, 0]);
    }

    #[test]
    fn coequalizer_of_empty_relation_is_identity() {
        let f = FinSetMap::new(FinSetObj::new(0), FinSetObj::new(2), vec![]).unwrap();
        let (q, proj) = coequalizer(&f, &f).unwrap();
        assert_eq!(q.size, 2);
        assert_eq!(proj.table(), &[0, 1]);
    }

    #[test]
    fn coequalizer_rejects_mismatched_pair() {
        let f = FinSetMap::new(FinSetObj::new(1), FinSetObj::new(2), vec![0]).unwrap();
        let g = FinSetMap::new(FinSetObj::new(1), FinSetObj::new(3), vec![0]).unwrap();
        assert!(matches!(coequalizer(&f, &g), Err(Error::BoundaryMismatch(_))));
    }

    #[test]
    fn coequalizer_is_idempotent() {
        let f = FinSetMap::new(FinSetObj::new(3), FinSetObj::new(4), vec![0, 1, 3]).unwrap();
        let g = FinSetMap::new(FinSetObj::new(3), FinSetObj::new(4), vec![1, 2, 3]).unwrap();
        let (_, proj) = coequalizer(&f, &g).unwrap();
        let pf = FinSetMap::compose(&proj, &f).unwrap();
        let pg = FinSetMap::compose(&proj, &g).unwrap();
        assert_eq!(pf, pg);
        let (q2, proj2) = coequalizer(&pf, &pg).unwrap();
        assert_eq!(q2, proj.cod());
        assert_eq!(proj2, FinSetMap::identity(q2));
    }

    #[test]
    fn coequalizer_universal_property_by_search() {
        // every h with h∘f = h∘g factors uniquely through proj
        let f = FinSetMap::new(FinSetObj::new(2), FinSetObj::new(4), vec![0, 2]).unwrap();
        let g = FinSetMap::new(FinSetObj::new(2), FinSetObj::new(4), vec![1, 2]).unwrap();
        let (q, proj) = coequalizer(&f, &g).unwrap();
        for target in 0..=3 {
            let cod = FinSetObj::new(target);
            for h in enumerate_maps(f.cod(), cod) {
                let hf = FinSetMap::compose(&h, &f).unwrap();
                let hg = FinSetMap::compose(&h, &g).unwrap();
                if hf != hg {
                    continue;
                }
                let mediators: Vec<_> = enumerate_maps(q, cod)
                    .into_iter()
                    .filter(|u| FinSetMap::compose(u, &proj).unwrap() == h)
                    .collect();
                assert_eq!(mediators.len(), 1);
                assert_eq!(mediators[0], factor_coequalizer(&proj, &h).unwrap());
            }
        }
    }

    #[test]
    fn copower_examples() {
        let e = FinSetObj::new(3);
        assert_eq!(copower(0, e).0.size, 0);
        let (one, injs) = copower(1, e);
        assert_eq!(one, e);
        assert_eq!(injs[0], FinSetMap::identity(e));
        let (two, injs) = copower(2, e);
        assert_eq!(two.size, 6);
        assert_eq!(injs[1].table(), &[3, 4, 5]);
    }

    #[test]
    fn copower_action_examples() {
        let e = FinSetObj::new(2);
        let id_idx = copower_action(CopowerAction::OnIndex { t: &[0, 1], target_count: 2, e }).unwrap();
        assert_eq!(id_idx, FinSetMap::identity(FinSetObj::new(4)));

        let idm = FinSetMap::identity(e);
        let id_mor = copower_action(CopowerAction::OnMorphism { count: 2, f: &idm }).unwrap();
        assert_eq!(id_mor, FinSetMap::identity(FinSetObj::new(4)));

        // collapse two indices onto one: [0,1,0,1] from size 4 to size 2
        let collapse =
            copower_action(CopowerAction::OnIndex { t: &[0, 0], target_count: 1, e }).unwrap();
        assert_eq!(collapse.table(), &[0, 1, 0, 1]);

        // defining squares hold pointwise
        let (_, dom_injs) = copower(2, e);
        let (_, cod_injs) = copower(1, e);
        for (s, inj) in dom_injs.iter().enumerate() {
            let lhs = FinSetMap::compose(&collapse, inj).unwrap();
            assert_eq!(lhs, cod_injs[[0, 0][s]]);
        }
    }

    #[test]
    fn copower_action_functoriality_enumerated() {
        let e = FinSetObj::new(2);
        // (t' ∘ t) ⊙ E = (t' ⊙ E) ∘ (t ⊙ E) over all maps between small index sets
        for t_code in 0..9usize {
            let t = [t_code % 3, t_code / 3];
            for tp_code in 0..4usize {
                let tp = [tp_code % 2, tp_code / 2, tp_code % 2];
                let composed = [tp[t[0]], tp[t[1]]];
                let lhs = copower_action(CopowerAction::OnIndex { t: &composed, target_count: 2, e })
                    .unwrap();
                let step1 =
                    copower_action(CopowerAction::OnIndex { t: &t, target_count: 3, e }).unwrap();
                let step2 =
                    copower_action(CopowerAction::OnIndex { t: &tp, target_count: 2, e }).unwrap();
                assert_eq!(lhs, FinSetMap::compose(&step2, &step1).unwrap());
            }
        }
        // S ⊙ (f' ∘ f) = (S ⊙ f') ∘ (S ⊙ f)
        let f = FinSetMap::new(FinSetObj::new(2), FinSetObj::new(3), vec![2, 0]).unwrap();
        let fp = FinSetMap::new(FinSetObj::new(3), FinSetObj::new(2), vec![1, 1, 0]).unwrap();
        let both = FinSetMap::compose(&fp, &f).unwrap();
        let lhs = copower_action(CopowerAction::OnMorphism { count: 3, f: &both }).unwrap();
        let s1 = copower_action(CopowerAction::OnMorphism { count: 3, f: &f }).unwrap();
        let s2 = copower_action(CopowerAction::OnMorphism { count: 3, f: &fp }).unwrap();
        assert_eq!(lhs, FinSetMap::compose(&s2, &s1).unwrap());
    }

    #[test]
    fn maps_into_empty_set_require_empty_domain() {
        assert!(FinSetMap::new(FinSetObj::new(0), FinSetObj::new(0), vec![]).is_ok());
        assert!(matches!(
            FinSetMap::new(FinSetObj::new(1), FinSetObj::new(0), vec![0]),
            Err(Error::BoundaryMismatch(_))
        ));
    }
}
