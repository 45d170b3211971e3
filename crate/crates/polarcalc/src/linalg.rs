//! Exact subspace algebra over `F^n`.
//!
//! Every subspace is kept in reduced row-echelon form with strictly
//! increasing pivot columns, so the representation is the unique canonical
//! one: two subspaces are equal iff their basis matrices are equal.  All
//! containers of subspaces (dedup sets during generator enumeration, caches)
//! rely on this.
//!
//! Vectors are plain `Vec<u16>` of canonical element indices; the owning
//! field travels with the matrix, not the scalars.

use std::fmt;
use std::hash::{Hash, Hasher};

use serde_json::{json, Value};
use thiserror::Error;

use crate::gf::Gf;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("ambient dimensions differ ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("subspace is not contained in the given space")]
    NotContained,
}

/// Dense matrix of canonical element indices, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    pub gf: Gf,
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<u16>,
}

impl Mat {
    pub fn zeros(gf: &Gf, rows: usize, cols: usize) -> Mat {
        Mat { gf: gf.clone(), rows, cols, a: vec![0; rows * cols] }
    }

    pub fn from_rows(gf: &Gf, rows: &[Vec<u16>], cols: usize) -> Mat {
        let mut a = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            a.extend_from_slice(r);
        }
        Mat { gf: gf.clone(), rows: rows.len(), cols, a }
    }

    pub fn identity(gf: &Gf, n: usize) -> Mat {
        let mut m = Mat::zeros(gf, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u16] {
        &self.a[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<u16> {
        self.row(i).to_vec()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(&self.gf, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let gf = &self.gf;
        let mut out = Mat::zeros(gf, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let s = self[(i, k)];
                if s == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let t = other[(k, j)];
                    if t != 0 {
                        out[(i, j)] = gf.vadd(out[(i, j)], gf.vmul(s, t));
                    }
                }
            }
        }
        out
    }

    /// Applies a coordinate-wise map to every entry.
    pub fn map_entries(&self, f: impl Fn(u16) -> u16) -> Mat {
        Mat {
            gf: self.gf.clone(),
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().map(|&v| f(v)).collect(),
        }
    }

    /// In-place Gauss-Jordan reduction; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let gf = self.gf.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self[(i, c)] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.a.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = gf.vinv(self[(r, c)]);
            for j in c..self.cols {
                self[(r, j)] = gf.vmul(self[(r, j)], inv);
            }
            for i in 0..self.rows {
                if i != r && self[(i, c)] != 0 {
                    let factor = self[(i, c)];
                    for j in c..self.cols {
                        let sub = gf.vmul(factor, self[(r, j)]);
                        self[(i, j)] = gf.vsub(self[(i, j)], sub);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = u16;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &u16 {
        &self.a[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u16 {
        &mut self.a[i * self.cols + j]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {:?}", self.rows, self.cols, self.gf)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// A subspace of `F^n` in canonical reduced row-echelon form.
#[derive(Clone)]
pub struct Subspace {
    gf: Gf,
    ambient: usize,
    /// RREF basis; rows are linearly independent, pivots strictly increase.
    basis: Mat,
    pivots: Vec<usize>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.gf == other.gf && self.ambient == other.ambient && self.basis.a == other.basis.a
    }
}
impl Eq for Subspace {}

impl Hash for Subspace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.basis.a.hash(state);
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of F^{}; rows ", self.dim(), self.ambient)?;
        for i in 0..self.basis.rows {
            write!(f, "{:?}", self.basis.row(i))?;
        }
        write!(f, ")")
    }
}

impl Subspace {
    pub fn zero(gf: &Gf, ambient: usize) -> Subspace {
        Subspace {
            gf: gf.clone(),
            ambient,
            basis: Mat::zeros(gf, 0, ambient),
            pivots: vec![],
        }
    }

    pub fn full(gf: &Gf, ambient: usize) -> Subspace {
        Subspace {
            gf: gf.clone(),
            ambient,
            basis: Mat::identity(gf, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Canonical span of a list of vectors.
    pub fn span(gf: &Gf, vectors: &[Vec<u16>], ambient: usize) -> Result<Subspace, LinalgError> {
        for v in vectors {
            if v.len() != ambient {
                return Err(LinalgError::DimensionMismatch(v.len(), ambient));
            }
        }
        let mut m = Mat::from_rows(gf, vectors, ambient);
        let pivots = m.rref();
        let rank = pivots.len();
        m.a.truncate(rank * ambient);
        m.rows = rank;
        Ok(Subspace { gf: gf.clone(), ambient, basis: m, pivots })
    }

    pub fn from_rref(gf: &Gf, basis: Mat) -> Subspace {
        let ambient = basis.cols;
        let mut m = basis;
        let pivots = m.rref();
        let rank = pivots.len();
        m.a.truncate(rank * ambient);
        m.rows = rank;
        Subspace { gf: gf.clone(), ambient, basis: m, pivots }
    }

    pub fn gf(&self) -> &Gf {
        &self.gf
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[u16]> {
        (0..self.basis.rows).map(move |i| self.basis.row(i))
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis, returning the residual.
    pub fn reduce(&self, v: &[u16]) -> Vec<u16> {
        let gf = &self.gf;
        let mut v = v.to_vec();
        for (r, &c) in self.pivots.iter().enumerate() {
            if v[c] != 0 {
                let factor = v[c];
                let row = self.basis.row(r);
                for j in c..self.ambient {
                    if row[j] != 0 {
                        v[j] = gf.vsub(v[j], gf.vmul(factor, row[j]));
                    }
                }
            }
        }
        v
    }

    pub fn contains_vec(&self, v: &[u16]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis_rows().all(|r| self.contains_vec(r))
    }

    /// Canonical sum `A + B`.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch(self.ambient, other.ambient));
        }
        let rows: Vec<Vec<u16>> = self
            .basis_rows()
            .chain(other.basis_rows())
            .map(|r| r.to_vec())
            .collect();
        Subspace::span(&self.gf, &rows, self.ambient)
    }

    /// Sum of this subspace and a single vector.
    pub fn extend(&self, v: &[u16]) -> Subspace {
        let mut rows: Vec<Vec<u16>> = self.basis_rows().map(|r| r.to_vec()).collect();
        rows.push(v.to_vec());
        Subspace::span(&self.gf, &rows, self.ambient).expect("consistent ambient")
    }

    /// Intersection, via the Zassenhaus block trick.
    pub fn meet(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch(self.ambient, other.ambient));
        }
        let n = self.ambient;
        let gf = &self.gf;
        let mut block = Mat::zeros(gf, self.dim() + other.dim(), 2 * n);
        for (i, r) in self.basis_rows().enumerate() {
            for j in 0..n {
                block[(i, j)] = r[j];
                block[(i, n + j)] = r[j];
            }
        }
        for (i, r) in other.basis_rows().enumerate() {
            let i = i + self.dim();
            for j in 0..n {
                block[(i, j)] = r[j];
            }
        }
        block.rref();
        // Rows whose left half vanished carry an intersection basis on the right.
        let mut meet_rows = Vec::new();
        for i in 0..block.rows {
            let left_zero = (0..n).all(|j| block[(i, j)] == 0);
            let right = (n..2 * n).map(|j| block[(i, j)]).collect::<Vec<_>>();
            if left_zero && right.iter().any(|&x| x != 0) {
                meet_rows.push(right);
            }
        }
        Subspace::span(gf, &meet_rows, n)
    }

    /// Deterministic complement of `self` inside `within`: greedy extension by
    /// the lexicographically least standard basis vectors first, then by the
    /// rows of `within`.
    pub fn complement_in(&self, within: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient != within.ambient {
            return Err(LinalgError::DimensionMismatch(self.ambient, within.ambient));
        }
        if !within.contains(self) {
            return Err(LinalgError::NotContained);
        }
        let n = self.ambient;
        let target = within.dim();
        let mut acc = self.clone();
        let mut comp_rows: Vec<Vec<u16>> = Vec::new();
        let mut candidates: Vec<Vec<u16>> = (0..n)
            .map(|i| {
                let mut e = vec![0u16; n];
                e[i] = 1;
                e
            })
            .collect();
        candidates.extend(within.basis_rows().map(|r| r.to_vec()));
        for cand in candidates {
            if acc.dim() == target {
                break;
            }
            if within.contains_vec(&cand) && !acc.contains_vec(&cand) {
                acc = acc.extend(&cand);
                comp_rows.push(cand);
            }
        }
        debug_assert_eq!(acc.dim(), target);
        Subspace::span(&self.gf, &comp_rows, n)
    }

    /// Solution space of the homogeneous system with these rows as equations.
    pub fn kernel_of_functionals(&self) -> Subspace {
        kernel(&self.basis)
    }

    /// All projective points (normalized vectors) of this subspace.
    pub fn projective_points(&self) -> Vec<Vec<u16>> {
        let gf = &self.gf;
        let d = self.dim();
        let mut out = Vec::new();
        if d == 0 {
            return out;
        }
        // Normalized coefficient tuples: first nonzero coefficient equals 1.
        let order = gf.order();
        for lead in 0..d {
            let free = d - lead - 1;
            let count = order.pow(free as u32);
            for mut code in 0..count {
                let mut coeffs = vec![0u16; d];
                coeffs[lead] = 1;
                for c in coeffs.iter_mut().skip(lead + 1) {
                    *c = (code % order) as u16;
                    code /= order;
                }
                let mut v = vec![0u16; self.ambient];
                for (i, &ci) in coeffs.iter().enumerate() {
                    if ci != 0 {
                        let row = self.basis.row(i);
                        for j in 0..self.ambient {
                            if row[j] != 0 {
                                v[j] = gf.vadd(v[j], gf.vmul(ci, row[j]));
                            }
                        }
                    }
                }
                out.push(normalize_point(gf, &v).expect("nonzero combination"));
            }
        }
        out
    }

    /// JSON serialization: row-major list of coordinate tuples, with each
    /// element expanded to its little-endian coefficient tuple.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .basis_rows()
            .map(|r| {
                Value::Array(
                    r.iter()
                        .map(|&v| json!(self.gf.coeffs(self.gf.el(v as u64))))
                        .collect(),
                )
            })
            .collect();
        json!({ "ambient": self.ambient, "rows": rows })
    }
}

/// Kernel (null space) of a matrix acting on row vectors: `{v : M v^T = 0}`.
pub fn kernel(m: &Mat) -> Subspace {
    let gf = &m.gf;
    let n = m.cols;
    let mut work = m.clone();
    let pivots = work.rref();
    let rank = pivots.len();
    let mut is_pivot = vec![false; n];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut rows = Vec::with_capacity(n - rank);
    for free in 0..n {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![0u16; n];
        v[free] = 1;
        for (r, &c) in pivots.iter().enumerate() {
            // Pivot variable value making the equation row r vanish.
            v[c] = gf.vneg(work[(r, free)]);
        }
        rows.push(v);
    }
    Subspace::span(gf, &rows, n).expect("consistent ambient")
}

/// Deterministic projection of `F^n` onto `F^(n - dim A)` with kernel `A`,
/// realized by eliminating the pivot columns of `A`.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    sub: Subspace,
    nonpivots: Vec<usize>,
}

impl QuotientMap {
    pub fn new(sub: Subspace) -> QuotientMap {
        let nonpivots = (0..sub.ambient())
            .filter(|c| !sub.pivots().contains(c))
            .collect();
        QuotientMap { sub, nonpivots }
    }

    pub fn kernel(&self) -> &Subspace {
        &self.sub
    }

    pub fn target_dim(&self) -> usize {
        self.nonpivots.len()
    }

    /// Image of a vector: the non-pivot coordinates of its reduction.
    pub fn apply(&self, v: &[u16]) -> Vec<u16> {
        let r = self.sub.reduce(v);
        self.nonpivots.iter().map(|&c| r[c]).collect()
    }

    /// The canonical section: zero in the pivot coordinates.
    pub fn lift(&self, y: &[u16]) -> Vec<u16> {
        let mut v = vec![0u16; self.sub.ambient()];
        for (i, &c) in self.nonpivots.iter().enumerate() {
            v[c] = y[i];
        }
        v
    }
}

/// Scales a nonzero vector so its first nonzero coordinate is 1.
pub fn normalize_point(gf: &Gf, v: &[u16]) -> Option<Vec<u16>> {
    let lead = v.iter().position(|&x| x != 0)?;
    let inv = gf.vinv(v[lead]);
    Some(v.iter().map(|&x| gf.vmul(inv, x)).collect())
}

pub fn add_vecs(gf: &Gf, a: &[u16], b: &[u16]) -> Vec<u16> {
    a.iter().zip(b).map(|(&x, &y)| gf.vadd(x, y)).collect()
}

pub fn scale_vec(gf: &Gf, c: u16, a: &[u16]) -> Vec<u16> {
    a.iter().map(|&x| gf.vmul(c, x)).collect()
}

pub fn unit_vec(n: usize, i: usize) -> Vec<u16> {
    let mut v = vec![0u16; n];
    v[i] = 1;
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Gf;

    fn f2() -> Gf {
        Gf::new(2, 1).unwrap()
    }

    #[test]
    fn span_basics() {
        let gf = f2();
        let full = Subspace::span(&gf, &[vec![1, 0], vec![0, 1]], 2).unwrap();
        assert_eq!(full.dim(), 2);
        let dup = Subspace::span(&gf, &[vec![1, 1], vec![1, 1]], 2).unwrap();
        assert_eq!(dup.dim(), 1);
        // Diagonal span {e_i + eta_i} at n = 2 inside F^4.
        let diag = Subspace::span(&gf, &[vec![1, 0, 1, 0], vec![0, 1, 0, 1]], 4).unwrap();
        assert_eq!(diag.dim(), 2);
        assert_eq!(diag.basis().row(0), &[1, 0, 1, 0]);
        assert_eq!(diag.basis().row(1), &[0, 1, 0, 1]);
        assert!(Subspace::span(&gf, &[vec![1, 0, 0]], 2).is_err());
    }

    #[test]
    fn canonicity_span_of_basis_is_identity() {
        let gf = Gf::new(3, 1).unwrap();
        let s = Subspace::span(&gf, &[vec![1, 2, 0, 1], vec![0, 1, 1, 2], vec![1, 0, 1, 2]], 4)
            .unwrap();
        let rows: Vec<Vec<u16>> = s.basis_rows().map(|r| r.to_vec()).collect();
        let s2 = Subspace::span(&gf, &rows, 4).unwrap();
        assert_eq!(s, s2);
    }

    #[test]
    fn meet_examples() {
        let gf = f2();
        let x = Subspace::span(&gf, &[vec![1, 0], vec![0, 1]], 2).unwrap();
        assert_eq!(x.meet(&x).unwrap(), x);
        let a = Subspace::span(&gf, &[vec![1, 0]], 2).unwrap();
        let b = Subspace::span(&gf, &[vec![0, 1]], 2).unwrap();
        assert!(a.meet(&b).unwrap().is_zero());
        let e12 = Subspace::span(&gf, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]], 4).unwrap();
        let e23 = Subspace::span(&gf, &[vec![0, 1, 0, 0], vec![0, 0, 1, 0]], 4).unwrap();
        let m = e12.meet(&e23).unwrap();
        assert_eq!(m.dim(), 1);
        assert!(m.contains_vec(&[0, 1, 0, 0]));
    }

    #[test]
    fn complement_examples() {
        let gf = f2();
        let full = Subspace::full(&gf, 2);
        let zero = Subspace::zero(&gf, 2);
        assert_eq!(zero.complement_in(&full).unwrap(), full);
        assert!(full.complement_in(&full).unwrap().is_zero());
        let diag = Subspace::span(&gf, &[vec![1, 1]], 2).unwrap();
        let c = diag.complement_in(&full).unwrap();
        assert_eq!(c, Subspace::span(&gf, &[vec![1, 0]], 2).unwrap());
        // Not contained.
        let other = Subspace::span(&gf, &[vec![1, 0, 0]], 3).unwrap();
        assert!(matches!(
            other.complement_in(&Subspace::zero(&gf, 3)),
            Err(LinalgError::NotContained)
        ));
    }

    #[test]
    fn kernel_examples() {
        let gf = f2();
        let zero_set = Subspace::zero(&gf, 3);
        assert_eq!(zero_set.kernel_of_functionals().dim(), 3);
        let eta0 = Subspace::span(&gf, &[vec![1, 0, 0]], 3).unwrap();
        let k = eta0.kernel_of_functionals();
        assert_eq!(k.dim(), 2);
        assert!(k.contains_vec(&[0, 1, 0]));
        assert!(k.contains_vec(&[0, 0, 1]));
        assert!(!k.contains_vec(&[1, 0, 0]));
    }

    #[test]
    fn kernel_of_kernel_functionals_recovers_subspace() {
        // ker(ker*(X)) = X at finite dimension.
        let gf = Gf::new(3, 1).unwrap();
        for rows in [
            vec![vec![1, 0, 2, 0]],
            vec![vec![1, 1, 1, 1], vec![0, 1, 2, 0]],
            vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0]],
        ] {
            let x = Subspace::span(&gf, &rows, 4).unwrap();
            // ker*(X): functionals vanishing on X = kernel of X's rows.
            let kstar = x.kernel_of_functionals();
            let back = kstar.kernel_of_functionals();
            assert_eq!(back, x);
        }
    }

    #[test]
    fn quotient_map_examples() {
        let gf = f2();
        let q0 = QuotientMap::new(Subspace::zero(&gf, 2));
        assert_eq!(q0.apply(&[1, 0]), vec![1, 0]);
        let diag = Subspace::span(&gf, &[vec![1, 1]], 2).unwrap();
        let q = QuotientMap::new(diag);
        assert_eq!(q.target_dim(), 1);
        let a = q.apply(&[1, 0]);
        let b = q.apply(&[0, 1]);
        assert_eq!(a, b);
        assert!(a.iter().any(|&x| x != 0));
        assert_eq!(q.apply(&[1, 1]), vec![0]);
    }

    #[test]
    fn rank_nullity_for_quotients() {
        let gf = Gf::new(2, 2).unwrap();
        let a = Subspace::span(&gf, &[vec![1, 2, 0], vec![0, 0, 1]], 3).unwrap();
        let q = QuotientMap::new(a.clone());
        for rows in [vec![vec![1u16, 0, 0]], vec![vec![1, 2, 0], vec![1, 0, 1]]] {
            let x = Subspace::span(&gf, &rows, 3).unwrap();
            let image_rows: Vec<Vec<u16>> = x.basis_rows().map(|r| q.apply(r)).collect();
            let img = Subspace::span(&gf, &image_rows, q.target_dim()).unwrap();
            let inter = x.meet(&a).unwrap();
            assert_eq!(img.dim(), x.dim() - inter.dim());
        }
    }

    #[test]
    fn dimension_formula_random_pairs() {
        let gf = Gf::new(3, 1).unwrap();
        let mut state = 1u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state
        };
        for _ in 0..200 {
            let n = 5;
            let mk = |next: &mut dyn FnMut() -> u64| {
                let rows: Vec<Vec<u16>> = (0..(next() % 4))
                    .map(|_| (0..n).map(|_| (next() % 3) as u16).collect())
                    .collect();
                Subspace::span(&gf, &rows, n).unwrap()
            };
            let a = mk(&mut next);
            let b = mk(&mut next);
            let s = a.sum(&b).unwrap();
            let m = a.meet(&b).unwrap();
            assert_eq!(s.dim() + m.dim(), a.dim() + b.dim());
            assert!(s.contains(&a) && s.contains(&b));
            assert!(a.contains(&m) && b.contains(&m));
        }
    }

    #[test]
    fn complement_postconditions_exhaustive_small() {
        let gf = f2();
        let n = 3;
        let full = Subspace::full(&gf, n);
        // All subspaces of F_2^3: spans of all subsets of nonzero vectors.
        let vecs: Vec<Vec<u16>> = (1u32..8)
            .map(|m| (0..n).map(|i| ((m >> i) & 1) as u16).collect())
            .collect();
        let mut seen = std::collections::HashSet::new();
        for mask in 0u32..(1 << vecs.len()) {
            let rows: Vec<Vec<u16>> = vecs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, v)| v.clone())
                .collect();
            let s = Subspace::span(&gf, &rows, n).unwrap();
            if !seen.insert(s.clone()) {
                continue;
            }
            let c = s.complement_in(&full).unwrap();
            assert!(s.meet(&c).unwrap().is_zero());
            assert_eq!(s.sum(&c).unwrap(), full);
        }
    }

    #[test]
    fn projective_points_count() {
        let gf = Gf::new(3, 1).unwrap();
        let full = Subspace::full(&gf, 3);
        assert_eq!(full.projective_points().len(), 13); // (27-1)/2
        let line = Subspace::span(&gf, &[vec![1, 0, 0], vec![0, 1, 0]], 3).unwrap();
        assert_eq!(line.projective_points().len(), 4);
        for p in line.projective_points() {
            assert!(line.contains_vec(&p));
            assert_eq!(p, normalize_point(&gf, &p).unwrap());
        }
    }
}
