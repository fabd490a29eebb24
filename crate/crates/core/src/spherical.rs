//! The τ-map carrying the Finsleroid onto a round sphere.
//!
//! ```text
//! τ⁰ = (T + ½g|R|) j r,    τ^a = R^a j
//! ```
//!
//! The Euclidean norm of the image is `S(τ(R)) = r K(R)`, so the indicatrix
//! lands on the sphere of radius `r`. Pulling the quasi-Euclidean tensor back
//! through `τ` reproduces the Finslerian metric tensor.

use crate::error::{FinslerError, Result};
use crate::pd::PdParams;
use crate::vector::{EventVector, SphereImage, SquareMatrix};

/// The rank-one deformation of the identity that `τ` pulls back to the
/// Finslerian metric tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct QuasiEuclideanTensor {
    /// Unit direction `l = R̃ / S(R̃)`.
    pub l: Vec<f64>,
    /// `n_pq = δ_pq - ¼g² l_p l_q`.
    pub lower: SquareMatrix,
    /// `n^pq = δ^pq + ¼G² l^p l^q`.
    pub upper: SquareMatrix,
}

impl PdParams {
    /// The τ-map.
    pub fn tau(&self, v: &EventVector) -> Result<SphereImage> {
        self.check_dim(v.dim())?;
        if v.is_zero() {
            return Err(FinslerError::ZeroVector("tau"));
        }
        let rho = v.spatial_norm();
        let j = self.j_of(v.t, rho);
        Ok(SphereImage::new(
            (v.t + 0.5 * self.g() * rho) * j * self.r(),
            v.x.iter().map(|x| x * j).collect(),
        ))
    }

    /// `Ĩ = h R̃⁰ - ½g|R̃|`, which equals `T j` at the preimage.
    pub fn i_tilde(&self, s: &SphereImage) -> f64 {
        self.h() * s.t - 0.5 * self.g() * s.spatial_norm()
    }

    /// `j` expressed through the image, using the sign of `Ĩ` and the ratio
    /// `|R̃| / Ĩ = |R| / T`.
    pub fn j_tilde(&self, s: &SphereImage) -> Result<f64> {
        if s.is_zero() {
            return Err(FinslerError::ZeroVector("j_tilde"));
        }
        Ok(self.j_of(self.i_tilde(s), s.spatial_norm()))
    }

    /// The inverse map `λ = τ⁻¹`.
    pub fn lambda_inv(&self, s: &SphereImage) -> Result<EventVector> {
        self.check_dim(s.dim())?;
        let jt = self.j_tilde(s)?;
        Ok(EventVector::new(
            self.i_tilde(s) / jt,
            s.x.iter().map(|x| x / jt).collect(),
        ))
    }

    /// Jacobian `J[q][p] = ∂τ^q / ∂R^p`.
    pub fn tau_jacobian(&self, v: &EventVector) -> Result<SquareMatrix> {
        self.check_dim(v.dim())?;
        if v.is_zero() {
            return Err(FinslerError::ZeroVector("tau_jacobian"));
        }
        let (g, r) = (self.g(), self.r());
        let t = v.t;
        let rho = v.spatial_norm();
        let b = self.b_of(t, rho);
        let j = self.j_of(t, rho);
        let n = v.dim();
        let mut m = SquareMatrix::zeros(n);

        m.set(0, 0, r * j * (1.0 + (t + 0.5 * g * rho) * g * rho / (2.0 * b)));
        for (a, xa) in v.x.iter().enumerate() {
            m.set(0, a + 1, 0.5 * g * r * j * (rho + 0.5 * g * t) * xa / b);
            m.set(a + 1, 0, j * g * rho * xa / (2.0 * b));
            for (c, xc) in v.x.iter().enumerate() {
                // x_a x_c / |R| → 0 as |R| → 0
                let outer = if rho > 0.0 { xa * xc / rho } else { 0.0 };
                let delta = if a == c { 1.0 } else { 0.0 };
                m.set(a + 1, c + 1, j * delta - j * g * t * outer / (2.0 * b));
            }
        }
        Ok(m)
    }

    /// Jacobian `∂λ^p / ∂R̃^q` of the inverse map at an image point.
    pub fn lambda_jacobian(&self, s: &SphereImage) -> Result<SquareMatrix> {
        let v = self.lambda_inv(s)?;
        self.tau_jacobian(&v)?.inverse()
    }

    /// Closed-form Jacobian determinant `r jᴺ`.
    pub fn tau_jacobian_det(&self, v: &EventVector) -> Result<f64> {
        let j = self.j_factor(v)?;
        Ok(self.r() * j.powi(v.dim() as i32))
    }

    pub fn quasi_euclidean(&self, s: &SphereImage) -> Result<QuasiEuclideanTensor> {
        self.check_dim(s.dim())?;
        if s.is_zero() {
            return Err(FinslerError::ZeroVector("quasi_euclidean"));
        }
        let norm = s.norm();
        let l: Vec<f64> = s.to_vec().iter().map(|c| c / norm).collect();
        let (g, big_g) = (self.g(), self.G());
        Ok(QuasiEuclideanTensor {
            lower: SquareMatrix::identity_plus_outer(&l, -0.25 * g * g),
            upper: SquareMatrix::identity_plus_outer(&l, 0.25 * big_g * big_g),
            l,
        })
    }

    /// `g_pq = n_rs τ^r_p τ^s_q`.
    pub fn pullback_metric(&self, v: &EventVector) -> Result<SquareMatrix> {
        let jac = self.tau_jacobian(v)?;
        let n = self.quasi_euclidean(&self.tau(v)?)?;
        Ok(n.lower.congruence(&jac))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{self, DiffConfig};
    use proptest::prelude::*;

    fn ev(t: f64, x: &[f64]) -> EventVector {
        EventVector::new(t, x.to_vec())
    }

    fn fd_jacobian(p: &PdParams, v: &EventVector) -> SquareMatrix {
        let n = v.dim();
        let mut m = SquareMatrix::zeros(n);
        for q in 0..n {
            let comp = |y: &[f64]| p.tau(&EventVector::from_slice(y)).unwrap().component(q);
            let grad = numerics::grad_fd(comp, &v.to_vec(), &DiffConfig::default()).unwrap();
            for (pp, d) in grad.into_iter().enumerate() {
                m.set(q, pp, d);
            }
        }
        m
    }

    #[test]
    fn identity_at_zero_g() {
        let p = PdParams::new(0.0, 4).unwrap();
        let v = ev(-0.7, &[1.0, 2.0, -0.5]);
        let s = p.tau(&v).unwrap();
        assert_eq!(s.to_vec(), v.to_vec());
        assert_eq!(p.lambda_inv(&s).unwrap(), v);
        assert_eq!(p.tau_jacobian(&v).unwrap(), SquareMatrix::identity(4));
        let n = p.quasi_euclidean(&s).unwrap();
        assert_eq!(n.lower, SquareMatrix::identity(4));
        assert_eq!(n.upper, SquareMatrix::identity(4));
    }

    #[test]
    fn equator_image() {
        let p = PdParams::new(1.0, 4).unwrap();
        let s = p.tau(&ev(0.0, &[1.0, 0.0, 0.0])).unwrap();
        assert!((s.t - 0.577_350_269_189_625_8).abs() < 1e-15);
        assert_eq!(s.x, vec![1.0, 0.0, 0.0]);
        assert!((s.norm() - p.r()).abs() < 1e-15);
    }

    #[test]
    fn jacobian_det_example() {
        let p = PdParams::new(1.0, 4).unwrap();
        let v = ev(1.0, &[1.0, 0.0, 0.0]);
        let j = p.j_factor(&v).unwrap();
        assert!((j - 1.352_966_912_587_151_8).abs() < 1e-14);
        let det = p.tau_jacobian(&v).unwrap().determinant();
        assert!((det - 3.869_172_316_188_865_3).abs() < 1e-13);
        assert!((det - p.tau_jacobian_det(&v).unwrap()).abs() < 1e-13);
    }

    #[test]
    fn jacobian_matches_finite_differences() {
        for g in [-1.9, -0.6, 0.4, 1.5] {
            let p = PdParams::new(g, 4).unwrap();
            for v in [
                ev(1.0, &[1.0, 0.0, 0.0]),
                ev(-0.3, &[0.2, -1.1, 0.4]),
                ev(0.0, &[0.0, 0.5, 0.5]),
                ev(-2.0, &[0.01, 0.0, 0.0]),
            ] {
                let a = p.tau_jacobian(&v).unwrap();
                let b = fd_jacobian(&p, &v);
                assert!(a.max_abs_diff(&b) < 1e-6, "g={g} v={v:?}: {}", a.max_abs_diff(&b));
            }
        }
    }

    #[test]
    fn jacobian_on_axis_is_the_limit() {
        // j has a conical kink along the T axis, so τ is only C¹ there and
        // central differences carry an O(step) error; compare against nearby
        // closed-form values instead.
        let p = PdParams::new(-0.6, 4).unwrap();
        for t in [2.0, -1.5] {
            let on = p.tau_jacobian(&ev(t, &[0.0; 3])).unwrap();
            let near = p.tau_jacobian(&ev(t, &[1e-9, -1e-9, 0.0])).unwrap();
            assert!(on.max_abs_diff(&near) < 1e-8);
        }
    }

    #[test]
    fn auxiliary_contractions() {
        let p = PdParams::new(-1.2, 4).unwrap();
        let g = p.g();
        let v = ev(0.8, &[0.3, -0.4, 1.0]);
        let jac = p.tau_jacobian(&v).unwrap();
        let j = p.j_factor(&v).unwrap();
        let wv: Vec<f64> = v.x.iter().map(|x| x / v.t).collect();
        let w = v.spatial_norm() / v.t;
        let q = p.gen_q(w);
        let e = 1.0 + 0.5 * g * w;
        for a in 0..3 {
            let lhs: f64 = (0..3).map(|b| jac.get(a + 1, b + 1) * wv[b]).sum();
            assert!((lhs - j * wv[a] * (e + w * w) / q).abs() < 1e-14);
            for b in 0..3 {
                let lhs: f64 = (0..3).map(|c| jac.get(a + 1, c + 1) * jac.get(b + 1, c + 1)).sum();
                let delta = if a == b { 1.0 } else { 0.0 };
                let rhs = j * j
                    * (delta - g * wv[a] * wv[b] / (w * q) + 0.25 * g * g * wv[a] * wv[b] / (q * q));
                assert!((lhs - rhs).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn quasi_euclidean_rules() {
        let p = PdParams::new(1.0, 4).unwrap();
        let n = p.quasi_euclidean(&SphereImage::new(2.0, vec![0.0; 3])).unwrap();
        assert!((n.lower.determinant() - 0.75).abs() < 1e-15);
        assert!((numerics::min_eigen_sym(&n.lower).unwrap() - 0.75).abs() < 1e-15);

        let s = SphereImage::new(0.3, vec![-1.0, 0.2, 0.9]);
        let n = p.quasi_euclidean(&s).unwrap();
        let (h2, r2) = (p.h().powi(2), p.r().powi(2));
        assert!(n.lower.mul(&n.upper).max_abs_diff(&SquareMatrix::identity(4)) < 1e-15);
        assert!((n.lower.bilinear(&n.l, &n.l) - h2).abs() < 1e-15);
        assert!((n.upper.bilinear(&n.l, &n.l) - r2).abs() < 1e-14);
        for (a, b) in n.lower.mul_vec(&n.l).iter().zip(&n.l) {
            assert!((a - h2 * b).abs() < 1e-15);
        }
        for (a, b) in n.upper.mul_vec(&n.l).iter().zip(&n.l) {
            assert!((a - r2 * b).abs() < 1e-14);
        }
    }

    #[test]
    fn pullback_determinant() {
        let p = PdParams::new(0.9, 4).unwrap();
        let v = ev(-0.4, &[0.5, 0.5, 0.1]);
        let det = p.pullback_metric(&v).unwrap().determinant();
        let want = p.h().powi(2) * p.tau_jacobian_det(&v).unwrap().powi(2);
        assert!((det - want).abs() < 1e-12 * want);
    }

    #[test]
    fn zero_inputs_are_rejected() {
        let p = PdParams::new(0.5, 4).unwrap();
        assert!(p.tau(&ev(0.0, &[0.0; 3])).is_err());
        assert!(p.lambda_inv(&SphereImage::new(0.0, vec![0.0; 3])).is_err());
        assert!(p.quasi_euclidean(&SphereImage::new(0.0, vec![0.0; 3])).is_err());
    }

    fn point() -> impl Strategy<Value = EventVector> {
        (-3.0..3.0f64, prop::collection::vec(-3.0..3.0f64, 3))
            .prop_filter("nonzero", |(t, x)| t.abs() + x.iter().map(|c| c.abs()).sum::<f64>() > 1e-3)
            .prop_map(|(t, x)| EventVector::new(t, x))
    }

    proptest! {
        #[test]
        fn image_norm_is_r_times_k(g in -1.95..1.95f64, v in point()) {
            let p = PdParams::new(g, 4).unwrap();
            let s = p.tau(&v).unwrap();
            let k = p.metric_k(&v);
            prop_assert!((s.norm() - p.r() * k).abs() <= 1e-12 * p.r() * k);
        }

        #[test]
        fn roundtrip_both_ways(g in -1.95..1.95f64, v in point()) {
            let p = PdParams::new(g, 4).unwrap();
            let s = p.tau(&v).unwrap();
            let back = p.lambda_inv(&s).unwrap();
            prop_assert!(back.max_abs_diff(&v) <= 1e-12 * v.norm().max(1.0));
            let again = p.tau(&back).unwrap();
            prop_assert!(again.max_abs_diff(&s) <= 1e-12 * s.norm().max(1.0));
        }

        #[test]
        fn euler_contraction_and_det(g in -1.95..1.95f64, v in point()) {
            let p = PdParams::new(g, 4).unwrap();
            let jac = p.tau_jacobian(&v).unwrap();
            let s = p.tau(&v).unwrap();
            let image = jac.mul_vec(&v.to_vec());
            for (a, b) in image.iter().zip(s.to_vec()) {
                prop_assert!((a - b).abs() <= 1e-12 * s.norm());
            }
            let det = p.tau_jacobian_det(&v).unwrap();
            prop_assert!(det > 0.0);
            prop_assert!((jac.determinant() - det).abs() <= 1e-11 * det);
        }

        #[test]
        fn homogeneity(g in -1.95..1.95f64, v in point(), b in 0.01..50.0f64) {
            let p = PdParams::new(g, 4).unwrap();
            let a = p.tau(&v.scaled(b)).unwrap();
            let c = p.tau(&v).unwrap().scaled(b);
            prop_assert!(a.max_abs_diff(&c) <= 1e-12 * c.norm());
        }
    }
}
