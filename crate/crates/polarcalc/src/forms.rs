//! Reflexive sesquilinear and quadratic forms on `F^n`.
//!
//! Three kinds are supported: alternating bilinear forms, quadratic forms
//! (stored as an upper-triangular coefficient matrix, with the bilinearization
//! derived from it once at construction), and sigma-hermitian forms over
//! fields with an involution.  Hermitian forms are evaluated as
//! `h(u, v) = sigma(u) G v^T`; in the natural right-vector-space coordinates
//! on `V + V*` this realizes `h(a + alpha, b + beta) = alpha(b) + beta(a)^sigma`.
//!
//! The module also houses the catalog of canonical forms on `V + V*`
//! (symplectic, hyperbolic quadric, hermitian), the radical/quotient step
//! down to the minimal embedding, and the characteristic-2 quadric lift that
//! realizes the universal embedding of a symplectic space.

use thiserror::Error;

use crate::gf::{Gf, GfError};
use crate::linalg::{kernel, Mat, QuotientMap, Subspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormError {
    #[error(transparent)]
    Field(#[from] GfError),
    #[error("matrix violates the invariants of a {0:?} form: {1}")]
    InvariantViolation(FormKind, String),
    #[error("field has no involution; hermitian forms need one")]
    NoInvolution,
    #[error("operation requires characteristic 2")]
    WrongCharacteristic,
    #[error("no geometry-preserving quotient exists: {0}")]
    NotAQuotientSituation(String),
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Alternating,
    Quadratic,
    Hermitian,
}

/// A validated form on `F^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    gf: Gf,
    n: usize,
    kind: FormKind,
    /// Gram matrix for Alternating/Hermitian; upper-triangular coefficients
    /// for Quadratic.
    data: Mat,
    /// The bilinearization: `data` itself for Alternating, `Q + Q^T` for
    /// Quadratic, and the Gram matrix for Hermitian (whose pairing carries
    /// the involution on the first slot).
    bilin: Mat,
}

impl Form {
    pub fn new(kind: FormKind, gf: &Gf, data: Mat) -> Result<Form, FormError> {
        if data.rows != data.cols {
            return Err(FormError::InvariantViolation(kind, "matrix not square".into()));
        }
        let n = data.rows;
        match kind {
            FormKind::Alternating => {
                for i in 0..n {
                    if data[(i, i)] != 0 {
                        return Err(FormError::InvariantViolation(
                            kind,
                            "nonzero diagonal entry".into(),
                        ));
                    }
                    for j in 0..n {
                        if data[(i, j)] != gf.vneg(data[(j, i)]) {
                            return Err(FormError::InvariantViolation(
                                kind,
                                "matrix is not antisymmetric".into(),
                            ));
                        }
                    }
                }
            }
            FormKind::Quadratic => {
                for i in 0..n {
                    for j in 0..i {
                        if data[(i, j)] != 0 {
                            return Err(FormError::InvariantViolation(
                                kind,
                                "coefficient matrix must be upper-triangular".into(),
                            ));
                        }
                    }
                }
            }
            FormKind::Hermitian => {
                if !gf.has_involution() {
                    return Err(FormError::NoInvolution);
                }
                for i in 0..n {
                    for j in 0..n {
                        let sij = gf.vsigma(data[(i, j)]);
                        if sij != data[(j, i)] {
                            return Err(FormError::InvariantViolation(
                                kind,
                                "matrix does not equal its conjugate transpose".into(),
                            ));
                        }
                    }
                }
            }
        }
        let bilin = match kind {
            FormKind::Alternating | FormKind::Hermitian => data.clone(),
            FormKind::Quadratic => {
                let mut b = data.clone();
                let t = data.transpose();
                for i in 0..n {
                    for j in 0..n {
                        b[(i, j)] = gf.vadd(b[(i, j)], t[(i, j)]);
                    }
                }
                b
            }
        };
        Ok(Form { gf: gf.clone(), n, kind, data, bilin })
    }

    /// The alternating form `f(a + alpha, b + beta) = beta(a) - alpha(b)` on
    /// `F^(2n)`, so `f(e_i, eta_j) = delta_ij` and `f(eta_j, e_i) = -delta_ij`.
    pub fn canonical_symplectic(gf: &Gf, n: usize) -> Form {
        assert!(n >= 1);
        let mut g = Mat::zeros(gf, 2 * n, 2 * n);
        for i in 0..n {
            g[(i, n + i)] = 1;
            g[(n + i, i)] = gf.vneg(1);
        }
        Form::new(FormKind::Alternating, gf, g).expect("canonical symplectic form is valid")
    }

    /// The hyperbolic quadratic form `q(a + alpha) = alpha(a)` on `F^(2n)`,
    /// whose bilinearization is `f_q(a + alpha, b + beta) = alpha(b) + beta(a)`.
    pub fn canonical_hyperbolic(gf: &Gf, n: usize) -> Form {
        assert!(n >= 1);
        let mut q = Mat::zeros(gf, 2 * n, 2 * n);
        for i in 0..n {
            q[(i, n + i)] = 1;
        }
        Form::new(FormKind::Quadratic, gf, q).expect("canonical hyperbolic form is valid")
    }

    /// The hermitian form `h(a + alpha, b + beta) = alpha(b) + beta(a)^sigma`
    /// on `F^(2n)`, written with the involution acting on the first slot.
    pub fn canonical_hermitian(gf: &Gf, n: usize) -> Result<Form, FormError> {
        assert!(n >= 1);
        if !gf.has_involution() {
            return Err(FormError::NoInvolution);
        }
        let mut g = Mat::zeros(gf, 2 * n, 2 * n);
        for i in 0..n {
            g[(i, n + i)] = 1;
            g[(n + i, i)] = 1;
        }
        Form::new(FormKind::Hermitian, gf, g)
    }

    /// A user-supplied form; validation is the same as [`Form::new`].
    pub fn custom(kind: FormKind, gf: &Gf, data: Mat) -> Result<Form, FormError> {
        Form::new(kind, gf, data)
    }

    pub fn gf(&self) -> &Gf {
        &self.gf
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn data(&self) -> &Mat {
        &self.data
    }

    pub fn bilin_matrix(&self) -> &Mat {
        &self.bilin
    }

    /// The pairing that governs collinearity: for Hermitian the involution is
    /// applied to the first argument, otherwise this is the plain bilinear
    /// evaluation of the bilinearization.
    pub fn bilin(&self, u: &[u16], v: &[u16]) -> u16 {
        let gf = &self.gf;
        let mut acc = 0u16;
        for i in 0..self.n {
            let ui = match self.kind {
                FormKind::Hermitian => gf.vsigma(u[i]),
                _ => u[i],
            };
            if ui == 0 {
                continue;
            }
            let mut row_acc = 0u16;
            for j in 0..self.n {
                let g = self.bilin[(i, j)];
                if g != 0 && v[j] != 0 {
                    row_acc = gf.vadd(row_acc, gf.vmul(g, v[j]));
                }
            }
            acc = gf.vadd(acc, gf.vmul(ui, row_acc));
        }
        acc
    }

    /// Quadratic value; only meaningful for the Quadratic kind.
    pub fn q_value(&self, v: &[u16]) -> u16 {
        debug_assert_eq!(self.kind, FormKind::Quadratic);
        let gf = &self.gf;
        let mut acc = 0u16;
        for i in 0..self.n {
            if v[i] == 0 {
                continue;
            }
            for j in i..self.n {
                let c = self.data[(i, j)];
                if c != 0 && v[j] != 0 {
                    acc = gf.vadd(acc, gf.vmul(c, gf.vmul(v[i], v[j])));
                }
            }
        }
        acc
    }

    /// Whether a nonzero vector represents a point of the polar space.
    pub fn is_singular(&self, v: &[u16]) -> bool {
        match self.kind {
            FormKind::Alternating => v.iter().any(|&x| x != 0),
            FormKind::Quadratic => self.q_value(v) == 0 && v.iter().any(|&x| x != 0),
            FormKind::Hermitian => self.bilin(v, v) == 0 && v.iter().any(|&x| x != 0),
        }
    }

    /// Orthogonal subspace of `X` with respect to the form's pairing.
    pub fn orth(&self, x: &Subspace) -> Subspace {
        if x.is_zero() {
            return Subspace::full(&self.gf, self.n);
        }
        let gf = &self.gf;
        let rows: Vec<Vec<u16>> = x
            .basis_rows()
            .map(|r| {
                (0..self.n)
                    .map(|j| {
                        let mut acc = 0u16;
                        for i in 0..self.n {
                            let ri = match self.kind {
                                FormKind::Hermitian => gf.vsigma(r[i]),
                                _ => r[i],
                            };
                            if ri != 0 && self.bilin[(i, j)] != 0 {
                                acc = gf.vadd(acc, gf.vmul(ri, self.bilin[(i, j)]));
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        kernel(&Mat::from_rows(gf, &rows, self.n))
    }

    /// Radical of the pairing: vectors orthogonal to the whole space.
    pub fn radical(&self) -> Subspace {
        kernel(&self.bilin)
    }

    /// Restriction to a subspace, expressed in the subspace's basis.
    pub fn restrict_to(&self, sub: &Subspace) -> Form {
        let gf = &self.gf;
        let m = sub.dim();
        let rows: Vec<Vec<u16>> = sub.basis_rows().map(|r| r.to_vec()).collect();
        match self.kind {
            FormKind::Quadratic => {
                let mut q = Mat::zeros(gf, m, m);
                for i in 0..m {
                    q[(i, i)] = self.q_value(&rows[i]);
                    for j in i + 1..m {
                        q[(i, j)] = self.bilin(&rows[i], &rows[j]);
                    }
                }
                Form::new(FormKind::Quadratic, gf, q).expect("restriction stays valid")
            }
            _ => {
                let mut g = Mat::zeros(gf, m, m);
                for i in 0..m {
                    for j in 0..m {
                        g[(i, j)] = self.bilin(&rows[i], &rows[j]);
                    }
                }
                Form::new(self.kind, gf, g).expect("restriction stays valid")
            }
        }
    }

    /// Quotient by the radical of the bilinearization, yielding the minimal
    /// embedding of the same geometry.  Errors if a nonzero radical vector is
    /// singular (the geometry itself would be degenerate then).
    pub fn minimal_embedding_quotient(&self) -> Result<(Form, QuotientMap), FormError> {
        let rad = self.radical();
        if rad.is_zero() {
            return Ok((
                self.clone(),
                QuotientMap::new(Subspace::zero(&self.gf, self.n)),
            ));
        }
        if self.kind != FormKind::Quadratic {
            return Err(FormError::NotAQuotientSituation(
                "nonzero radical outside the quadratic case".into(),
            ));
        }
        for p in rad.projective_points() {
            if self.is_singular(&p) {
                return Err(FormError::NotAQuotientSituation(
                    "a radical vector is singular".into(),
                ));
            }
        }
        let qmap = QuotientMap::new(rad);
        let m = qmap.target_dim();
        let gf = &self.gf;
        let mut g = Mat::zeros(gf, m, m);
        for i in 0..m {
            let li = qmap.lift(&crate::linalg::unit_vec(m, i));
            for j in 0..m {
                let lj = qmap.lift(&crate::linalg::unit_vec(m, j));
                g[(i, j)] = self.bilin(&li, &lj);
            }
        }
        // Only reachable in characteristic 2, where the descended
        // bilinearization is alternating and nondegenerate.
        let form = Form::new(FormKind::Alternating, gf, g)?;
        if !form.radical().is_zero() {
            return Err(FormError::NotAQuotientSituation(
                "quotient form is still degenerate".into(),
            ));
        }
        Ok((form, qmap))
    }
}

/// The characteristic-2 quadric lift of the symplectic space on `F^(2n)`:
/// the quadratic form `q(x + xi + t) = xi(x) + t^2` on `F^(2n+1)` together
/// with the point map `x + xi -> x + xi + sqrt(xi(x))`.
pub fn char2_universal_lift(gf: &Gf, n: usize) -> Result<(Form, LiftMap), FormError> {
    if !gf.char_is_two() {
        return Err(FormError::WrongCharacteristic);
    }
    let dim = 2 * n + 1;
    let mut q = Mat::zeros(gf, dim, dim);
    for i in 0..n {
        q[(i, n + i)] = 1;
    }
    q[(2 * n, 2 * n)] = 1;
    let form = Form::new(FormKind::Quadratic, gf, q)?;
    Ok((form, LiftMap { gf: gf.clone(), n }))
}

/// Point map of the characteristic-2 lift.
#[derive(Clone, Debug)]
pub struct LiftMap {
    gf: Gf,
    n: usize,
}

impl LiftMap {
    /// `x + xi -> x + xi + sqrt(xi(x))`.
    pub fn apply(&self, v: &[u16]) -> Vec<u16> {
        assert_eq!(v.len(), 2 * self.n);
        let gf = &self.gf;
        let mut pairing = 0u16;
        for i in 0..self.n {
            pairing = gf.vadd(pairing, gf.vmul(v[i], v[self.n + i]));
        }
        let root = gf.sqrt_char2(gf.el(pairing as u64)).expect("char 2");
        let mut out = v.to_vec();
        out.push(root.index() as u16);
        out
    }
}

/// Does this form equal one of the canonical `V + V*` catalog forms?
/// Returns the half-dimension `n` when it does.
pub fn catalog_vdual_rank(form: &Form) -> Option<usize> {
    let dim = form.ambient();
    if dim % 2 != 0 || dim == 0 {
        return None;
    }
    let n = dim / 2;
    let gf = form.gf();
    let canonical = match form.kind() {
        FormKind::Alternating => Form::canonical_symplectic(gf, n),
        FormKind::Quadratic => Form::canonical_hyperbolic(gf, n),
        FormKind::Hermitian => Form::canonical_hermitian(gf, n).ok()?,
    };
    (canonical.data().a == form.data().a).then_some(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::normalize_point;

    /// Brute-force census of singular projective points, evaluating the
    /// defining expressions directly rather than through `Form`.
    fn oracle_count(gf: &Gf, dim: usize, singular: impl Fn(&[u16]) -> bool) -> usize {
        let full = Subspace::full(gf, dim);
        full.projective_points()
            .iter()
            .filter(|p| singular(p))
            .count()
    }

    #[test]
    fn symplectic_gram_n1_gf2() {
        let gf = Gf::new(2, 1).unwrap();
        let f = Form::canonical_symplectic(&gf, 1);
        assert_eq!(f.data().a, vec![0, 1, 1, 0]);
    }

    #[test]
    fn symplectic_pairing_values() {
        let gf = Gf::new(3, 1).unwrap();
        let f = Form::canonical_symplectic(&gf, 2);
        let e0 = [1, 0, 0, 0];
        let eta0 = [0, 0, 1, 0];
        assert_eq!(f.bilin(&e0, &eta0), 1);
        assert_eq!(f.bilin(&eta0, &e0), gf.vneg(1));
    }

    #[test]
    fn alternating_forms_vanish_on_the_diagonal() {
        for (p, k) in [(2u64, 1u32), (3, 1)] {
            let gf = Gf::new(p, k).unwrap();
            for n in 1..=3 {
                let f = Form::canonical_symplectic(&gf, n);
                for v in Subspace::full(&gf, 2 * n).projective_points() {
                    assert_eq!(f.bilin(&v, &v), 0);
                }
            }
        }
    }

    #[test]
    fn hyperbolic_point_census() {
        let gf = Gf::new(2, 1).unwrap();
        // n = 1: q(t e_0 + s eta_0) = ts, two singular points.
        let q1 = Form::canonical_hyperbolic(&gf, 1);
        assert_eq!(
            oracle_count(&gf, 2, |v| (v[0] & v[1]) == 0),
            2
        );
        assert_eq!(
            Subspace::full(&gf, 2)
                .projective_points()
                .iter()
                .filter(|p| q1.is_singular(p))
                .count(),
            2
        );
        // n = 2 over GF(2): 9 points on the grid.
        let q2 = Form::canonical_hyperbolic(&gf, 2);
        let oracle = oracle_count(&gf, 4, |v| {
            // alpha(a) with alpha = (v2, v3), a = (v0, v1), computed directly.
            (v[0] * v[2] + v[1] * v[3]) % 2 == 0
        });
        assert_eq!(oracle, 9);
        assert_eq!(
            Subspace::full(&gf, 4)
                .projective_points()
                .iter()
                .filter(|p| q2.is_singular(p))
                .count(),
            9
        );
    }

    #[test]
    fn hyperbolic_bilinearization_is_symmetric_and_nondegenerate() {
        for (p, k) in [(2u64, 1u32), (3, 1)] {
            let gf = Gf::new(p, k).unwrap();
            for n in 1..=3 {
                let q = Form::canonical_hyperbolic(&gf, n);
                let e0 = crate::linalg::unit_vec(2 * n, 0);
                let eta0 = crate::linalg::unit_vec(2 * n, n);
                assert_eq!(q.bilin(&e0, &eta0), 1);
                assert_eq!(q.bilin(&eta0, &e0), 1);
                assert!(q.radical().is_zero());
            }
        }
    }

    #[test]
    fn quadratic_bilinearization_identity() {
        // B(u, v) = q(u + v) - q(u) - q(v), exhaustively on tiny instances.
        for (p, k) in [(2u64, 1u32), (3, 1)] {
            let gf = Gf::new(p, k).unwrap();
            let q = Form::canonical_hyperbolic(&gf, 1);
            let pts: Vec<Vec<u16>> = {
                let mut all = vec![vec![0u16, 0]];
                all.extend(Subspace::full(&gf, 2).projective_points());
                all
            };
            for u in &pts {
                for v in &pts {
                    let sum = crate::linalg::add_vecs(&gf, u, v);
                    let lhs = q.bilin(u, v);
                    let rhs = gf.vsub(gf.vsub(q.q_value(&sum), q.q_value(u)), q.q_value(v));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn hermitian_census_h34() {
        let gf = Gf::new(2, 2).unwrap();
        let h = Form::canonical_hermitian(&gf, 2).unwrap();
        let pts = Subspace::full(&gf, 4).projective_points();
        assert_eq!(pts.len(), 85);
        // Independent route: evaluate sigma(u) G u^T coordinate by coordinate.
        let oracle = pts
            .iter()
            .filter(|v| {
                let mut acc = gf.zero();
                for i in 0..2 {
                    let a = gf.el(v[i] as u64);
                    let alpha = gf.el(v[2 + i] as u64);
                    let t = gf.mul(gf.sigma(a).unwrap(), alpha);
                    acc = gf.add(acc, gf.add(t, gf.sigma(t).unwrap()));
                }
                acc.is_zero()
            })
            .count();
        assert_eq!(oracle, 45);
        assert_eq!(pts.iter().filter(|p| h.is_singular(p)).count(), 45);
    }

    #[test]
    fn hermitian_values_and_symmetry() {
        let gf = Gf::new(2, 2).unwrap();
        let h = Form::canonical_hermitian(&gf, 1).unwrap();
        let e0 = [1u16, 0];
        let eta0 = [0u16, 1];
        assert_eq!(h.bilin(&e0, &eta0), 1);
        assert_eq!(h.bilin(&eta0, &e0), 1);
        // h(u, v) = sigma(h(v, u)) and diagonal values in the fixed field.
        for u in Subspace::full(&gf, 2).projective_points() {
            for v in Subspace::full(&gf, 2).projective_points() {
                let uv = gf.el(h.bilin(&u, &v) as u64);
                let vu = gf.el(h.bilin(&v, &u) as u64);
                assert_eq!(gf.sigma(vu).unwrap(), uv);
            }
            let d = gf.el(h.bilin(&u, &u) as u64);
            assert_eq!(gf.sigma(d).unwrap(), d);
        }
    }

    #[test]
    fn hermitian_scaling_law() {
        let gf = Gf::new(3, 2).unwrap();
        let h = Form::canonical_hermitian(&gf, 1).unwrap();
        let u = [2u16, 5];
        for lam in gf.elements() {
            let lu: Vec<u16> = u
                .iter()
                .map(|&x| gf.vmul(lam.index() as u16, x))
                .collect();
            let expect = gf.mul(
                gf.mul(lam, gf.sigma(lam).unwrap()),
                gf.el(h.bilin(&u, &u) as u64),
            );
            assert_eq!(h.bilin(&lu, &lu), expect.index() as u16);
        }
    }

    #[test]
    fn custom_form_validation() {
        let gf3 = Gf::new(3, 1).unwrap();
        // Parabolic Q(4, 3): q(x) = x0^2 + x1 x2 + x3 x4.
        let mut q = Mat::zeros(&gf3, 5, 5);
        q[(0, 0)] = 1;
        q[(1, 2)] = 1;
        q[(3, 4)] = 1;
        let f = Form::custom(FormKind::Quadratic, &gf3, q).unwrap();
        let count = Subspace::full(&gf3, 5)
            .projective_points()
            .iter()
            .filter(|p| f.is_singular(p))
            .count();
        assert_eq!(count, 40);

        // Alternating with a nonzero diagonal entry is rejected.
        let mut bad = Mat::zeros(&gf3, 2, 2);
        bad[(0, 0)] = 1;
        assert!(matches!(
            Form::custom(FormKind::Alternating, &gf3, bad),
            Err(FormError::InvariantViolation(..))
        ));

        // Hermitian over GF(2) (odd degree, no involution) is rejected.
        let gf2 = Gf::new(2, 1).unwrap();
        let g = Mat::zeros(&gf2, 2, 2);
        assert!(matches!(
            Form::custom(FormKind::Hermitian, &gf2, g),
            Err(FormError::NoInvolution)
        ));
    }

    #[test]
    fn reflexivity_on_small_catalog_instances() {
        let gf = Gf::new(2, 1).unwrap();
        for form in [
            Form::canonical_symplectic(&gf, 2),
            Form::canonical_hyperbolic(&gf, 2),
        ] {
            let pts = Subspace::full(&gf, 4).projective_points();
            for u in &pts {
                for v in &pts {
                    assert_eq!(form.bilin(u, v) == 0, form.bilin(v, u) == 0);
                }
            }
        }
    }

    #[test]
    fn radical_of_catalog_forms_is_zero() {
        let gf2 = Gf::new(2, 1).unwrap();
        let gf4 = Gf::new(2, 2).unwrap();
        assert!(Form::canonical_symplectic(&gf2, 3).radical().is_zero());
        assert!(Form::canonical_hyperbolic(&gf2, 3).radical().is_zero());
        assert!(Form::canonical_hermitian(&gf4, 2)
            .unwrap()
            .radical()
            .is_zero());
    }

    #[test]
    fn q42_nucleus_and_quotient() {
        let gf = Gf::new(2, 1).unwrap();
        // Q(4, 2): q(x) = x0 x3 + x1 x4 + x2^2 (parabolic; nucleus e_2).
        let mut q = Mat::zeros(&gf, 5, 5);
        q[(0, 3)] = 1;
        q[(1, 4)] = 1;
        q[(2, 2)] = 1;
        let f = Form::custom(FormKind::Quadratic, &gf, q).unwrap();
        let rad = f.radical();
        assert_eq!(rad.dim(), 1);
        assert!(!f.is_singular(&rad.basis().row_vec(0)));
        let (quot, qmap) = f.minimal_embedding_quotient().unwrap();
        assert_eq!(quot.kind(), FormKind::Alternating);
        assert_eq!(quot.ambient(), 4);
        assert!(quot.radical().is_zero());
        // Point map: singular points inject and collinearity transfers.
        let pts: Vec<Vec<u16>> = Subspace::full(&gf, 5)
            .projective_points()
            .into_iter()
            .filter(|p| f.is_singular(p))
            .collect();
        assert_eq!(pts.len(), 15);
        let mut images = std::collections::HashSet::new();
        for p in &pts {
            let img = normalize_point(&gf, &qmap.apply(p)).unwrap();
            images.insert(img);
        }
        assert_eq!(images.len(), 15);
        for a in &pts {
            for b in &pts {
                let before = f.bilin(a, b) == 0;
                let after = quot.bilin(&qmap.apply(a), &qmap.apply(b)) == 0;
                assert_eq!(before, after);
            }
        }
    }

    #[test]
    fn quotient_of_nondegenerate_form_is_identity() {
        let gf = Gf::new(3, 1).unwrap();
        let f = Form::canonical_symplectic(&gf, 2);
        let (g, qmap) = f.minimal_embedding_quotient().unwrap();
        assert_eq!(g, f);
        assert_eq!(qmap.target_dim(), 4);
    }

    #[test]
    fn quotient_rejects_degenerate_input() {
        let gf = Gf::new(2, 1).unwrap();
        // q(x) = x0 x1 on F^3: e_2 is in the radical and singular.
        let mut q = Mat::zeros(&gf, 3, 3);
        q[(0, 1)] = 1;
        let f = Form::custom(FormKind::Quadratic, &gf, q).unwrap();
        assert!(matches!(
            f.minimal_embedding_quotient(),
            Err(FormError::NotAQuotientSituation(_))
        ));
    }

    #[test]
    fn lift_map_basics() {
        let gf = Gf::new(2, 1).unwrap();
        let (lift, map) = char2_universal_lift(&gf, 2).unwrap();
        assert_eq!(lift.ambient(), 5);
        // Points with xi(x) = 0 keep last coordinate 0.
        assert_eq!(map.apply(&[1, 0, 0, 1]), vec![1, 0, 0, 1, 0]);
        // xi(x) = 1 picks up sqrt(1) = 1.
        assert_eq!(map.apply(&[1, 0, 1, 0]), vec![1, 0, 1, 0, 1]);
        for v in Subspace::full(&gf, 4).projective_points() {
            assert!(lift.is_singular(&map.apply(&v)));
        }
        let gf3 = Gf::new(3, 1).unwrap();
        assert!(matches!(
            char2_universal_lift(&gf3, 2),
            Err(FormError::WrongCharacteristic)
        ));
    }

    #[test]
    fn catalog_detection() {
        let gf = Gf::new(2, 1).unwrap();
        assert_eq!(
            catalog_vdual_rank(&Form::canonical_symplectic(&gf, 3)),
            Some(3)
        );
        assert_eq!(
            catalog_vdual_rank(&Form::canonical_hyperbolic(&gf, 2)),
            Some(2)
        );
        let mut q = Mat::zeros(&gf, 5, 5);
        q[(0, 3)] = 1;
        q[(1, 4)] = 1;
        q[(2, 2)] = 1;
        let f = Form::custom(FormKind::Quadratic, &gf, q).unwrap();
        assert_eq!(catalog_vdual_rank(&f), None);
    }
}
