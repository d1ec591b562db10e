//! Dense arbitrary-precision integer matrices and Smith normal form.
//!
//! Intermediate entries blow up quickly even on small inputs, so
//! everything runs on `BigInt`; there are no modular shortcuts.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMat {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "IntMat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(out, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(out, " ")?;
                }
                write!(out, "{}", self[(r, c)])?;
            }
            write!(out, "]")?;
        }
        write!(out, "]")
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = BigInt;
    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        &mut self.data[r * self.cols + c]
    }
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> IntMat {
        IntMat { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> IntMat {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows_i64(rows: &[Vec<i64>]) -> IntMat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = IntMat::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from(*v);
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> BigInt) -> IntMat {
        let mut m = IntMat::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = IntMat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let prod = a * &other[(k, c)];
                    out[(r, c)] += prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| &self[(r, c)] * &v[c]).sum())
            .collect()
    }

    pub fn sub(&self, other: &IntMat) -> IntMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    /// [self | other], side by side.
    pub fn hstack(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.rows, other.rows, "hstack needs equal row counts");
        let mut out = IntMat::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..other.cols {
                out[(r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        out
    }

    pub fn block_diag(blocks: &[&IntMat]) -> IntMat {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = IntMat::zeros(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out[(ro + r, co + c)] = b[(r, c)].clone();
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    /// Kronecker product: entry blocks a_ij * B.
    pub fn kronecker(&self, other: &IntMat) -> IntMat {
        let mut out = IntMat::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for r in 0..other.rows {
                    for c in 0..other.cols {
                        out[(i * other.rows + r, j * other.cols + c)] = a * &other[(r, c)];
                    }
                }
            }
        }
        out
    }

    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> IntMat {
        let mut out = IntMat::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for r in 0..rows {
                out[(r, c)] = col[r].clone();
            }
        }
        out
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !m[(r, k)].is_zero()) else {
                    return BigInt::zero();
                };
                for c in 0..n {
                    let tmp = m[(k, c)].clone();
                    m[(k, c)] = m[(swap, c)].clone();
                    m[(swap, c)] = tmp;
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = num / &prev;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }
}

/// Smith normal form u·m·v = d with all four transforms tracked.
#[derive(Debug, Clone)]
pub struct Snf {
    pub d: IntMat,
    pub u: IntMat,
    pub u_inv: IntMat,
    pub v: IntMat,
    pub v_inv: IntMat,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
}

struct SnfCalc {
    m: IntMat,
    u: IntMat,
    u_inv: IntMat,
    v: IntMat,
    v_inv: IntMat,
}

impl SnfCalc {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.m.cols {
            self.m.data.swap(a * self.m.cols + c, b * self.m.cols + c);
        }
        for c in 0..self.u.cols {
            self.u.data.swap(a * self.u.cols + c, b * self.u.cols + c);
        }
        for r in 0..self.u_inv.rows {
            self.u_inv.data.swap(r * self.u_inv.cols + a, r * self.u_inv.cols + b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.m.rows {
            self.m.data.swap(r * self.m.cols + a, r * self.m.cols + b);
        }
        for r in 0..self.v.rows {
            self.v.data.swap(r * self.v.cols + a, r * self.v.cols + b);
        }
        for c in 0..self.v_inv.cols {
            self.v_inv.data.swap(a * self.v_inv.cols + c, b * self.v_inv.cols + c);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.m.cols {
            let v = -self.m[(r, c)].clone();
            self.m[(r, c)] = v;
        }
        for c in 0..self.u.cols {
            let v = -self.u[(r, c)].clone();
            self.u[(r, c)] = v;
        }
        for rr in 0..self.u_inv.rows {
            let v = -self.u_inv[(rr, r)].clone();
            self.u_inv[(rr, r)] = v;
        }
    }

    /// row_i -= q * row_j
    fn row_sub(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.m.cols {
            let v = &self.m[(i, c)] - q * &self.m[(j, c)];
            self.m[(i, c)] = v;
        }
        for c in 0..self.u.cols {
            let v = &self.u[(i, c)] - q * &self.u[(j, c)];
            self.u[(i, c)] = v;
        }
        // inverse op on u_inv: col_j += q * col_i
        for r in 0..self.u_inv.rows {
            let v = &self.u_inv[(r, j)] + q * &self.u_inv[(r, i)];
            self.u_inv[(r, j)] = v;
        }
    }

    /// col_i -= q * col_j
    fn col_sub(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.m.rows {
            let v = &self.m[(r, i)] - q * &self.m[(r, j)];
            self.m[(r, i)] = v;
        }
        for r in 0..self.v.rows {
            let v = &self.v[(r, i)] - q * &self.v[(r, j)];
            self.v[(r, i)] = v;
        }
        for c in 0..self.v_inv.cols {
            let v = &self.v_inv[(j, c)] + q * &self.v_inv[(i, c)];
            self.v_inv[(j, c)] = v;
        }
    }

    /// col_i += col_j (used when restoring the divisibility chain)
    fn col_add(&mut self, i: usize, j: usize) {
        let minus_one = -BigInt::one();
        self.col_sub(i, j, &minus_one);
    }

    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for r in t..self.m.rows {
            for c in t..self.m.cols {
                if self.m[(r, c)].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some((r, c)),
                    Some(b) => {
                        if self.m[(r, c)].abs() < self.m[b].abs() {
                            best = Some((r, c));
                        }
                    }
                }
            }
        }
        best
    }

    fn eliminate_at(&mut self, t: usize) {
        loop {
            // clear column t below/above the pivot
            let mut dirty = false;
            for r in 0..self.m.rows {
                if r == t || self.m[(r, t)].is_zero() {
                    continue;
                }
                let q = &self.m[(r, t)] / &self.m[(t, t)];
                self.row_sub(r, t, &q);
                if !self.m[(r, t)].is_zero() {
                    // remainder smaller than pivot: swap it up and restart
                    self.swap_rows(r, t);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            for c in 0..self.m.cols {
                if c == t || self.m[(t, c)].is_zero() {
                    continue;
                }
                let q = &self.m[(t, c)] / &self.m[(t, t)];
                self.col_sub(c, t, &q);
                if !self.m[(t, c)].is_zero() {
                    self.swap_cols(c, t);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            let row_clean = (0..self.m.cols).all(|c| c == t || self.m[(t, c)].is_zero());
            let col_clean = (0..self.m.rows).all(|r| r == t || self.m[(r, t)].is_zero());
            if row_clean && col_clean {
                return;
            }
        }
    }
}

/// Computes the Smith normal form of `m`: unimodular u, v with u·m·v
/// diagonal and each diagonal entry dividing the next. Diagonal entries
/// are nonnegative, zeros last.
pub fn smith_normal_form(m: &IntMat) -> Snf {
    let mut calc = SnfCalc {
        m: m.clone(),
        u: IntMat::identity(m.rows),
        u_inv: IntMat::identity(m.rows),
        v: IntMat::identity(m.cols),
        v_inv: IntMat::identity(m.cols),
    };
    let bound = m.rows.min(m.cols);
    let mut rank = 0;
    for t in 0..bound {
        let Some((pr, pc)) = calc.find_pivot(t) else { break };
        calc.swap_rows(t, pr);
        calc.swap_cols(t, pc);
        calc.eliminate_at(t);
        rank = t + 1;
    }
    // normalize signs
    for t in 0..rank {
        if calc.m[(t, t)].is_negative() {
            calc.negate_row(t);
        }
    }
    // repair the divisibility chain
    loop {
        let mut fixed = true;
        for t in 0..rank.saturating_sub(1) {
            let a = calc.m[(t, t)].clone();
            let b = calc.m[(t + 1, t + 1)].clone();
            if (&b % &a).is_zero() {
                continue;
            }
            calc.col_add(t, t + 1);
            calc.eliminate_at(t);
            if calc.m[(t, t)].is_negative() {
                calc.negate_row(t);
            }
            if calc.m[(t + 1, t + 1)].is_negative() {
                calc.negate_row(t + 1);
            }
            fixed = false;
        }
        if fixed {
            break;
        }
    }
    Snf { d: calc.m, u: calc.u, u_inv: calc.u_inv, v: calc.v, v_inv: calc.v_inv, rank }
}

impl Snf {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }
}

/// A particular integer solution x of A·x = b, if one exists.
pub fn solve(a: &IntMat, snf: &Snf, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len());
    let w = snf.u.mul_vec(b);
    let mut y = vec![BigInt::zero(); a.cols()];
    for i in 0..snf.rank {
        let d = &snf.d[(i, i)];
        if (&w[i] % d).is_zero() {
            y[i] = &w[i] / d;
        } else {
            return None;
        }
    }
    for w_i in w.iter().skip(snf.rank) {
        if !w_i.is_zero() {
            return None;
        }
    }
    Some(snf.v.mul_vec(&y))
}

/// A basis for the integer kernel {x : A·x = 0}, as matrix columns.
pub fn kernel_basis(a: &IntMat, snf: &Snf) -> IntMat {
    let free = a.cols() - snf.rank;
    let mut out = IntMat::zeros(a.cols(), free);
    for (k, c) in (snf.rank..a.cols()).enumerate() {
        for r in 0..a.cols() {
            out[(r, k)] = snf.v[(r, c)].clone();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_snf(m: &IntMat) -> Snf {
        let snf = smith_normal_form(m);
        // u·m·v = d exactly
        assert_eq!(snf.u.mul(m).mul(&snf.v), snf.d);
        // tracked inverses really invert
        assert_eq!(snf.u.mul(&snf.u_inv), IntMat::identity(m.rows()));
        assert_eq!(snf.v.mul(&snf.v_inv), IntMat::identity(m.cols()));
        // unimodular
        assert_eq!(snf.u.determinant().abs(), BigInt::from(1));
        assert_eq!(snf.v.determinant().abs(), BigInt::from(1));
        // diagonal with a total divisibility chain, zeros last
        for r in 0..snf.d.rows() {
            for c in 0..snf.d.cols() {
                if r != c {
                    assert!(snf.d[(r, c)].is_zero());
                }
            }
        }
        let diag = snf.diagonal();
        for i in 0..diag.len().saturating_sub(1) {
            if diag[i].is_zero() {
                assert!(diag[i + 1].is_zero());
            } else {
                assert!((&diag[i + 1] % &diag[i]).is_zero());
            }
        }
        snf
    }

    #[test]
    fn snf_of_zero_matrix() {
        let m = IntMat::zeros(2, 3);
        let snf = check_snf(&m);
        assert!(snf.d.is_zero());
        assert_eq!(snf.u, IntMat::identity(2));
        assert_eq!(snf.v, IntMat::identity(3));
        assert_eq!(snf.rank, 0);
    }

    #[test]
    fn snf_of_identity() {
        let m = IntMat::identity(3);
        let snf = check_snf(&m);
        assert_eq!(snf.d, IntMat::identity(3));
        assert_eq!(snf.rank, 3);
    }

    #[test]
    fn snf_small_example() {
        let m = IntMat::from_rows_i64(&[vec![2, 4], vec![6, 8]]);
        let snf = check_snf(&m);
        assert_eq!(snf.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
        // product of invariant factors = |det| = 8
        assert_eq!(m.determinant().abs(), BigInt::from(8));
    }

    #[test]
    fn snf_rectangular_and_chain_repair() {
        let m = IntMat::from_rows_i64(&[vec![4, 0, 0], vec![0, 6, 0]]);
        let snf = check_snf(&m);
        assert_eq!(snf.diagonal(), vec![BigInt::from(2), BigInt::from(12)]);
    }

    #[test]
    fn solve_and_kernel() {
        let a = IntMat::from_rows_i64(&[vec![2, 0], vec![0, 3]]);
        let snf = smith_normal_form(&a);
        let sol = solve(&a, &snf, &[BigInt::from(4), BigInt::from(9)]).unwrap();
        assert_eq!(a.mul_vec(&sol), vec![BigInt::from(4), BigInt::from(9)]);
        assert!(solve(&a, &snf, &[BigInt::from(1), BigInt::from(0)]).is_none());

        let b = IntMat::from_rows_i64(&[vec![1, 2, 3]]);
        let snf_b = smith_normal_form(&b);
        let ker = kernel_basis(&b, &snf_b);
        assert_eq!(ker.cols(), 2);
        for c in 0..2 {
            let col = ker.column(c);
            assert!(b.mul_vec(&col).iter().all(|v| v.is_zero()));
        }
    }

    #[test]
    fn determinant_matches_cofactor_expectations() {
        let m = IntMat::from_rows_i64(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(m.determinant(), BigInt::from(-2));
        let singular = IntMat::from_rows_i64(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(singular.determinant(), BigInt::from(0));
    }
}
