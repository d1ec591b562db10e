//! Finitely generated abelian groups at desk scale: integer presentation
//! matrices, cached invariant factors, kernels/cokernels, direct sums,
//! coequalizers, and tensor over Z. Presentations are never reduced
//! eagerly; the canonical form is a cached view so ambient coordinates
//! stay meaningful for injections and projections.

pub mod matrix;

pub use matrix::{kernel_basis, smith_normal_form, solve, IntMat, Snf};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A finitely generated abelian group presented as Z^n / column span of
/// an n×m relation matrix.
#[derive(Clone)]
pub struct FgAbGroup {
    ambient: usize,
    relations: IntMat,
    snf: Arc<Snf>,
    canonical: Vec<BigInt>,
}

impl PartialEq for FgAbGroup {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.relations == other.relations
    }
}

impl Eq for FgAbGroup {}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "FgAbGroup({})", self.render())
    }
}

impl FgAbGroup {
    pub fn from_relations(ambient: usize, relations: IntMat) -> FgAbGroup {
        assert_eq!(relations.rows(), ambient, "relation matrix must have ambient many rows");
        let snf = smith_normal_form(&relations);
        let mut canonical = Vec::new();
        for i in 0..snf.rank {
            let d = snf.d[(i, i)].clone();
            if !d.is_one() {
                canonical.push(d);
            }
        }
        for _ in snf.rank..ambient {
            canonical.push(BigInt::zero());
        }
        FgAbGroup { ambient, relations, snf: Arc::new(snf), canonical }
    }

    /// The free group Z^n.
    pub fn free(n: usize) -> FgAbGroup {
        FgAbGroup::from_relations(n, IntMat::zeros(n, 0))
    }

    pub fn zero() -> FgAbGroup {
        FgAbGroup::free(0)
    }

    /// One generator per factor, relation d_i·x_i = 0 (d_i = 0 gives a
    /// free generator).
    pub fn from_invariant_factors(factors: &[BigInt]) -> FgAbGroup {
        let n = factors.len();
        let nonzero: Vec<usize> = (0..n).filter(|&i| !factors[i].is_zero()).collect();
        let mut rel = IntMat::zeros(n, nonzero.len());
        for (c, &i) in nonzero.iter().enumerate() {
            rel[(i, c)] = factors[i].clone();
        }
        FgAbGroup::from_relations(n, rel)
    }

    pub fn cyclic(n: u64) -> FgAbGroup {
        FgAbGroup::from_invariant_factors(&[BigInt::from(n)])
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn relations(&self) -> &IntMat {
        &self.relations
    }

    /// The invariant factor list: torsion entries (> 1) in divisibility
    /// order, then one 0 per free rank.
    pub fn canonical(&self) -> &[BigInt] {
        &self.canonical
    }

    pub fn is_trivial(&self) -> bool {
        self.canonical.is_empty()
    }

    pub fn free_rank(&self) -> usize {
        self.ambient - self.snf.rank
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank() == 0
    }

    pub fn order(&self) -> Option<BigInt> {
        if !self.is_finite() {
            return None;
        }
        Some(self.canonical.iter().product())
    }

    /// Two groups are isomorphic exactly when their canonical lists agree.
    pub fn isomorphic_to(&self, other: &FgAbGroup) -> bool {
        self.canonical == other.canonical
    }

    /// Canonical text form: "Z^r ⊕ Z/d1 ⊕ …", free part first, torsion in
    /// divisibility order; the trivial group renders as "0".
    pub fn render(&self) -> String {
        let torsion: Vec<&BigInt> = self.canonical.iter().filter(|d| !d.is_zero()).collect();
        let rank = self.free_rank();
        let mut parts = Vec::new();
        match rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ⊕ ")
        }
    }

    /// Whether an ambient vector lies in the relation span (represents 0).
    pub fn is_zero_element(&self, v: &[BigInt]) -> bool {
        solve(&self.relations, &self.snf, v).is_some()
    }

    /// Whether every column of `m` lies in the relation span.
    pub fn contains_columns(&self, m: &IntMat) -> bool {
        (0..m.cols()).all(|c| self.is_zero_element(&m.column(c)))
    }

    /// All elements as ambient representatives, in a fixed mixed-radix
    /// order. Errors on infinite groups.
    pub fn elements(&self) -> Result<Vec<Vec<BigInt>>> {
        if !self.is_finite() {
            return Err(Error::InvalidPresentation(
                "cannot enumerate an infinite group".into(),
            ));
        }
        let n = self.ambient;
        let diag: Vec<BigInt> = (0..n).map(|i| self.snf.d[(i, i)].clone()).collect();
        let mut out = Vec::new();
        let mut counter = vec![BigInt::zero(); n];
        loop {
            out.push(self.snf.u_inv.mul_vec(&counter));
            // increment mixed-radix counter
            let mut pos = 0;
            loop {
                if pos == n {
                    return Ok(out);
                }
                counter[pos] += 1;
                if counter[pos] < diag[pos] {
                    break;
                }
                counter[pos] = BigInt::zero();
                pos += 1;
            }
        }
    }

    /// Canonical coordinates of an ambient vector: (u·x) mod d, suitable
    /// for equality tests and indexing.
    pub fn normal_form(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut w = self.snf.u.mul_vec(v);
        for i in 0..self.ambient {
            if i < self.snf.rank {
                let d = &self.snf.d[(i, i)];
                let mut r = &w[i] % d;
                if r < BigInt::zero() {
                    r += d;
                }
                w[i] = r;
            }
        }
        w
    }
}

/// A homomorphism between presented groups, as an integer matrix on
/// ambient coordinates. Well-definedness (relations map into relations)
/// is checked at construction.
#[derive(Clone, PartialEq, Eq)]
pub struct AbMap {
    dom: FgAbGroup,
    cod: FgAbGroup,
    matrix: IntMat,
}

impl fmt::Debug for AbMap {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "AbMap({} -> {}, {:?})", self.dom.render(), self.cod.render(), self.matrix)
    }
}

impl AbMap {
    pub fn new(dom: FgAbGroup, cod: FgAbGroup, matrix: IntMat) -> Result<AbMap> {
        if matrix.rows() != cod.ambient || matrix.cols() != dom.ambient {
            return Err(Error::BoundaryMismatch(format!(
                "matrix is {}x{} but map needs {}x{}",
                matrix.rows(),
                matrix.cols(),
                cod.ambient,
                dom.ambient
            )));
        }
        let image_of_relations = matrix.mul(&dom.relations);
        if !cod.contains_columns(&image_of_relations) {
            return Err(Error::IllDefinedMap(
                "matrix does not send domain relations into codomain relations".into(),
            ));
        }
        Ok(AbMap { dom, cod, matrix })
    }

    pub fn identity(g: &FgAbGroup) -> AbMap {
        AbMap { dom: g.clone(), cod: g.clone(), matrix: IntMat::identity(g.ambient) }
    }

    pub fn zero(dom: &FgAbGroup, cod: &FgAbGroup) -> AbMap {
        AbMap { dom: dom.clone(), cod: cod.clone(), matrix: IntMat::zeros(cod.ambient, dom.ambient) }
    }

    pub fn dom(&self) -> &FgAbGroup {
        &self.dom
    }

    pub fn cod(&self) -> &FgAbGroup {
        &self.cod
    }

    pub fn matrix(&self) -> &IntMat {
        &self.matrix
    }

    pub fn compose(g: &AbMap, f: &AbMap) -> Result<AbMap> {
        if f.cod != g.dom {
            return Err(Error::BoundaryMismatch("composition boundaries disagree".into()));
        }
        Ok(AbMap { dom: f.dom.clone(), cod: g.cod.clone(), matrix: g.matrix.mul(&f.matrix) })
    }

    pub fn add(a: &AbMap, b: &AbMap) -> Result<AbMap> {
        if a.dom != b.dom || a.cod != b.cod {
            return Err(Error::BoundaryMismatch("sum needs parallel maps".into()));
        }
        let matrix = IntMat::from_fn(a.matrix.rows(), a.matrix.cols(), |r, c| {
            &a.matrix[(r, c)] + &b.matrix[(r, c)]
        });
        Ok(AbMap { dom: a.dom.clone(), cod: a.cod.clone(), matrix })
    }

    pub fn scale(&self, k: &BigInt) -> AbMap {
        let matrix =
            IntMat::from_fn(self.matrix.rows(), self.matrix.cols(), |r, c| k * &self.matrix[(r, c)]);
        AbMap { dom: self.dom.clone(), cod: self.cod.clone(), matrix }
    }

    /// Equality as homomorphisms: the difference vanishes modulo codomain
    /// relations. Matrix equality is too strict by design.
    pub fn eq_mod_relations(&self, other: &AbMap) -> bool {
        self.dom == other.dom
            && self.cod == other.cod
            && self.cod.contains_columns(&self.matrix.sub(&other.matrix))
    }

    pub fn is_zero_map(&self) -> bool {
        self.cod.contains_columns(&self.matrix)
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(v)
    }

    /// Mono and epi at once, decided through kernel/cokernel triviality.
    pub fn is_iso(&self) -> bool {
        let (ker, _, coker, _) = kernel_cokernel(self).expect("map validated at construction");
        ker.is_trivial() && coker.is_trivial()
    }
}

/// Direct sum with ambient-coordinate inclusions.
pub fn direct_sum(parts: &[FgAbGroup]) -> (FgAbGroup, Vec<AbMap>) {
    let rels: Vec<&IntMat> = parts.iter().map(|p| &p.relations).collect();
    let total = FgAbGroup::from_relations(
        parts.iter().map(|p| p.ambient).sum(),
        IntMat::block_diag(&rels),
    );
    let mut injections = Vec::with_capacity(parts.len());
    let mut offset = 0;
    for p in parts {
        let mut m = IntMat::zeros(total.ambient, p.ambient);
        for i in 0..p.ambient {
            m[(offset + i, i)] = BigInt::one();
        }
        injections.push(AbMap { dom: p.clone(), cod: total.clone(), matrix: m });
        offset += p.ambient;
    }
    (total, injections)
}

/// Projections out of a direct sum built by [`direct_sum`].
pub fn direct_sum_projections(total: &FgAbGroup, parts: &[FgAbGroup]) -> Vec<AbMap> {
    let mut out = Vec::with_capacity(parts.len());
    let mut offset = 0;
    for p in parts {
        let mut m = IntMat::zeros(p.ambient, total.ambient);
        for i in 0..p.ambient {
            m[(i, offset + i)] = BigInt::one();
        }
        out.push(AbMap { dom: total.clone(), cod: p.clone(), matrix: m });
        offset += p.ambient;
    }
    out
}

/// Copower: |s|-fold direct sum of `a`, indexed in the given order.
pub fn copower_ab(count: usize, a: &FgAbGroup) -> (FgAbGroup, Vec<AbMap>) {
    direct_sum(&vec![a.clone(); count])
}

/// Coequalizer of a parallel pair, realized as the cokernel of f − g: the
/// codomain with relations augmented by the difference columns, projected
/// by the ambient identity.
pub fn coequalizer_ab(f: &AbMap, g: &AbMap) -> Result<(FgAbGroup, AbMap)> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(Error::BoundaryMismatch(
            "coequalizer needs a parallel pair with shared boundaries".into(),
        ));
    }
    let diff = f.matrix.sub(&g.matrix);
    let q = FgAbGroup::from_relations(f.cod.ambient, f.cod.relations.hstack(&diff));
    let proj = AbMap { dom: f.cod.clone(), cod: q.clone(), matrix: IntMat::identity(f.cod.ambient) };
    Ok((q, proj))
}

/// Columns generating the lattice {x : A·x ∈ column span of B}.
fn preimage_lattice(a: &IntMat, b: &IntMat) -> IntMat {
    let combined = a.hstack(b);
    let snf = smith_normal_form(&combined);
    let ker = kernel_basis(&combined, &snf);
    // project onto the first a.cols() coordinates
    IntMat::from_fn(a.cols(), ker.cols(), |r, c| ker[(r, c)].clone())
}

/// Kernel and cokernel with their structure maps:
/// (ker, inclusion, coker, projection).
pub fn kernel_cokernel(f: &AbMap) -> Result<(FgAbGroup, AbMap, FgAbGroup, AbMap)> {
    // kernel: generators X of {x : f(x) ∈ relations of cod}; its own
    // relations are the preimages of the domain relations under X
    let x = preimage_lattice(&f.matrix, &f.cod.relations);
    let ker_rels = preimage_lattice(&x, &f.dom.relations);
    let ker = FgAbGroup::from_relations(x.cols(), ker_rels);
    let inclusion = AbMap { dom: ker.clone(), cod: f.dom.clone(), matrix: x };

    let coker = FgAbGroup::from_relations(f.cod.ambient, f.cod.relations.hstack(&f.matrix));
    let projection =
        AbMap { dom: f.cod.clone(), cod: coker.clone(), matrix: IntMat::identity(f.cod.ambient) };

    Ok((ker, inclusion, coker, projection))
}

/// Factors `h` through the kernel inclusion of `f`: the unique k with
/// inclusion ∘ k = h, defined when f ∘ h = 0.
pub fn lift_through_kernel(ker: &FgAbGroup, inclusion: &AbMap, h: &AbMap) -> Result<AbMap> {
    if h.cod != inclusion.cod {
        return Err(Error::BoundaryMismatch("lift target must be the kernel's ambient group".into()));
    }
    // solve inclusion·k ≡ h (mod dom relations), column by column
    let combined = inclusion.matrix.hstack(&inclusion.cod.relations);
    let snf = smith_normal_form(&combined);
    let mut cols = Vec::with_capacity(h.matrix.cols());
    for c in 0..h.matrix.cols() {
        let target = h.matrix.column(c);
        let sol = solve(&combined, &snf, &target).ok_or_else(|| {
            Error::Internal("map does not factor through the kernel".into())
        })?;
        cols.push(sol[..inclusion.matrix.cols()].to_vec());
    }
    AbMap::new(h.dom.clone(), ker.clone(), IntMat::from_columns(inclusion.matrix.cols(), &cols))
}

/// Tensor product over Z: ambient n_a·n_b with relations rel_a ⊗ basis ∪
/// basis ⊗ rel_b.
pub fn tensor_z(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    let left = a.relations.kronecker(&IntMat::identity(b.ambient));
    let right = IntMat::identity(a.ambient).kronecker(&b.relations);
    FgAbGroup::from_relations(a.ambient * b.ambient, left.hstack(&right))
}

/// The bifunctorial action f ⊗ g on tensor products.
pub fn tensor_z_map(f: &AbMap, g: &AbMap) -> AbMap {
    let dom = tensor_z(&f.dom, &g.dom);
    let cod = tensor_z(&f.cod, &g.cod);
    AbMap { dom, cod, matrix: f.matrix.kronecker(&g.matrix) }
}

/// Factors `h` through a coequalizer/cokernel projection that is the
/// ambient identity: the unique u with u ∘ proj = h.
pub fn factor_quotient(quotient: &FgAbGroup, h: &AbMap) -> Result<AbMap> {
    AbMap::new(quotient.clone(), h.cod.clone(), h.matrix.clone()).map_err(|_| {
        Error::Internal("map does not respect the quotient relations".into())
    })
}

/// Exactness of A --f--> B --g--> C at B: image of f equals kernel of g,
/// as sublattices of B's ambient modulo relations.
pub fn is_exact_at(f: &AbMap, g: &AbMap) -> Result<bool> {
    if f.cod != g.dom {
        return Err(Error::BoundaryMismatch("sequence maps do not meet".into()));
    }
    let image = f.matrix.hstack(&f.cod.relations);
    let ker = preimage_lattice(&g.matrix, &g.cod.relations);
    let image_group = FgAbGroup::from_relations(f.cod.ambient, image.clone());
    let ker_group = FgAbGroup::from_relations(f.cod.ambient, ker.clone());
    Ok(image_group.contains_columns(&ker) && ker_group.contains_columns(&image))
}

#[cfg(test)]
mod tests;
