//! The Hamiltonian of the positive-definite family and its co-Finsleroid.
//!
//! ```text
//! H(g; T̂, R̂) = sqrt(B̂) · ĵ,   B̂ = |R̂|² - g|R̂|T̂ + T̂²,
//! ĵ = exp(-G/2 · ψ),          ψ = atan2(2hT̂, 2|R̂| - gT̂)
//! ```
//!
//! Term by term this is `K(-g; ·)`, so the figuratrix `H = 1` is the
//! Finsleroid of the reflected parameter.
//!
//! `H` is conjugate to `K` only up to a constant: along the gradient map
//! `R ↦ ∇½K²(R)` one finds `H(∇½K²(R)) = K(R) / k(g)` with `k` the ring
//! radius of [`crate::PdLandmarks`]. The exact dual norm is `k · H`, exposed as
//! [`PdParams::dual_norm`], and [`PdParams::contravariant_from_momenta`]
//! inverts the gradient map through it.

use crate::error::{FinslerError, Result};
use crate::pd::PdParams;
use crate::vector::{CoVector, EventVector};

/// Intercepts and widest ring of the co-Finsleroid `H = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoLandmarks {
    /// `T̂` intercept on the positive axis, `-T₁(g)`.
    pub t1_co: f64,
    /// `T̂` intercept on the negative axis, `-T₂(g)`.
    pub t2_co: f64,
    /// Height of the widest ring, `f(-g) = g k(g)`.
    pub f_hat: f64,
    /// Radius of the widest ring, `k(-g) = k(g)`.
    pub k_hat: f64,
}

impl PdParams {
    fn bh_of(&self, t: f64, rho: f64) -> f64 {
        rho * rho - self.g() * rho * t + t * t
    }

    fn jh_of(&self, t: f64, rho: f64) -> f64 {
        let psi = (2.0 * self.h() * t).atan2(2.0 * rho - self.g() * t);
        (-0.5 * self.G() * psi).exp()
    }

    fn h_of(&self, t: f64, rho: f64) -> f64 {
        if t == 0.0 && rho == 0.0 {
            return 0.0;
        }
        self.bh_of(t, rho).sqrt() * self.jh_of(t, rho)
    }

    /// `B̂ = |R̂|² - g|R̂|T̂ + T̂²`.
    pub fn b_hat(&self, c: &CoVector) -> f64 {
        self.bh_of(c.t, c.spatial_norm())
    }

    pub fn hat_j(&self, c: &CoVector) -> Result<f64> {
        if c.is_zero() {
            return Err(FinslerError::ZeroVector("hat_j"));
        }
        Ok(self.jh_of(c.t, c.spatial_norm()))
    }

    /// The Hamiltonian `H`, extended by `H(0) = 0`.
    pub fn hamiltonian(&self, c: &CoVector) -> f64 {
        self.h_of(c.t, c.spatial_norm())
    }

    /// `Q̂(p) = 1 - g p + p²`.
    pub fn gen_q_hat(&self, p: f64) -> f64 {
        1.0 - self.g() * p + p * p
    }

    /// `ĵ` as a function of `p = |R̂|/T̂`; the sign of `p` picks the branch.
    pub fn hat_j_of_p(&self, p: f64) -> f64 {
        if p.is_sign_negative() {
            self.jh_of(-1.0, -p)
        } else {
            self.jh_of(1.0, p)
        }
    }

    /// `W(p) = sqrt(Q̂) ĵ`, so that `H = |T̂| W(|R̂|/T̂)`.
    pub fn gen_w(&self, p: f64) -> f64 {
        self.gen_q_hat(p).sqrt() * self.hat_j_of_p(p)
    }

    /// `W'(p) = p W / Q̂`.
    pub fn gen_w_prime(&self, p: f64) -> f64 {
        p * self.gen_w(p) / self.gen_q_hat(p)
    }

    /// `W''(p) = W / Q̂²`.
    pub fn gen_w_second(&self, p: f64) -> f64 {
        let q = self.gen_q_hat(p);
        self.gen_w(p) / (q * q)
    }

    /// `ĵ'(p) = g ĵ / (2Q̂)`.
    pub fn hat_j_prime(&self, p: f64) -> f64 {
        0.5 * self.g() * self.hat_j_of_p(p) / self.gen_q_hat(p)
    }

    /// `p = w / (1 + g w)`.
    pub fn w_to_p(&self, w: f64) -> Result<f64> {
        let d = 1.0 + self.g() * w;
        if d == 0.0 {
            return Err(FinslerError::Pole {
                map: "w_to_p",
                pole: w,
            });
        }
        Ok(w / d)
    }

    /// `w = p / (1 - g p)`.
    pub fn p_to_w(&self, p: f64) -> Result<f64> {
        let d = 1.0 - self.g() * p;
        if d == 0.0 {
            return Err(FinslerError::Pole {
                map: "p_to_w",
                pole: p,
            });
        }
        Ok(p / d)
    }

    /// The constant `k(g) = K(R) / H(∇½K²(R))`.
    pub fn legendre_scale(&self) -> f64 {
        self.landmarks().k
    }

    /// Dual norm of `K`, equal to `k(g) · H`.
    pub fn dual_norm(&self, c: &CoVector) -> f64 {
        self.legendre_scale() * self.hamiltonian(c)
    }

    /// `∇½H²`, i.e. `(ĵ²(T̂ - g|R̂|), ĵ² R_a)`.
    pub fn hamiltonian_gradient(&self, c: &CoVector) -> Result<EventVector> {
        self.check_dim(c.dim())?;
        if c.is_zero() {
            return Err(FinslerError::ZeroVector("hamiltonian_gradient"));
        }
        let rho = c.spatial_norm();
        let j2 = self.jh_of(c.t, rho).powi(2);
        Ok(EventVector::new(
            j2 * (c.t - self.g() * rho),
            c.xi.iter().map(|x| j2 * x).collect(),
        ))
    }

    /// Inverse of [`PdParams::covariant_momenta`]: the gradient of half the
    /// squared dual norm, `k² ∇½H²`.
    pub fn contravariant_from_momenta(&self, c: &CoVector) -> Result<EventVector> {
        let k = self.legendre_scale();
        Ok(self.hamiltonian_gradient(c)?.scaled(k * k))
    }

    /// Landmarks of the figuratrix `H = 1`.
    pub fn co_landmarks(&self) -> CoLandmarks {
        let l = self.landmarks();
        CoLandmarks {
            t1_co: -l.t1,
            t2_co: -l.t2,
            f_hat: self.g() * l.k,
            k_hat: l.k,
        }
    }

    /// `(dT̂/d|R̂|, d²T̂/d|R̂|²)` of the figuratrix profile through `c`.
    pub fn co_profile_derivatives(&self, c: &CoVector) -> Result<(f64, f64)> {
        self.check_dim(c.dim())?;
        let level = self.hamiltonian(c);
        if (level - 1.0).abs() > crate::numerics::Tolerances::DEFAULT.on_surface {
            return Err(FinslerError::NotOnSurface { level });
        }
        let (t, rho) = (c.t, c.spatial_norm());
        let d = t - self.g() * rho;
        if d.abs() <= 1e-14 * t.abs().max(rho) {
            return Err(FinslerError::VerticalTangent { t, rho });
        }
        Ok((-rho / d, -self.bh_of(t, rho) / d.powi(3)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{self, DiffConfig};
    use proptest::prelude::*;
    use std::f64::consts::FRAC_PI_2;

    fn cv(t: f64, x: &[f64]) -> CoVector {
        CoVector::new(t, x.to_vec())
    }

    /// The three-case definition of `ĵ`.
    fn hat_j_piecewise(p: &PdParams, t: f64, rho: f64) -> f64 {
        let (g, h, big_g) = (p.g(), p.h(), p.G());
        let a = ((2.0 * rho - g * t) / (2.0 * h * t)).atan();
        if t > 0.0 {
            (0.5 * big_g * (-FRAC_PI_2 + a)).exp()
        } else if t < 0.0 {
            (0.5 * big_g * (FRAC_PI_2 + a)).exp()
        } else {
            1.0
        }
    }

    #[test]
    fn b_hat_examples() {
        let p0 = PdParams::new(0.0, 4).unwrap();
        assert_eq!(p0.b_hat(&cv(3.0, &[4.0, 0.0, 0.0])), 25.0);
        let p1 = PdParams::new(1.0, 4).unwrap();
        assert_eq!(p1.b_hat(&cv(1.0, &[1.0, 0.0, 0.0])), 1.0);
        let v = EventVector::new(1.0, vec![1.0, 0.0, 0.0]);
        assert_eq!(p1.b_hat(&cv(1.0, &[1.0, 0.0, 0.0])), p1.reflected().b_form(&v));
    }

    #[test]
    fn hamiltonian_examples() {
        let p0 = PdParams::new(0.0, 4).unwrap();
        assert_eq!(p0.hamiltonian(&cv(3.0, &[4.0, 0.0, 0.0])), 5.0);
        for g in [-1.9, -0.3, 1.0, 1.7] {
            let p = PdParams::new(g, 4).unwrap();
            assert!((p.hamiltonian(&cv(0.0, &[0.0, 1.0, 0.0])) - 1.0).abs() < 1e-15);
        }
        assert_eq!(p0.hamiltonian(&cv(0.0, &[0.0; 3])), 0.0);
    }

    #[test]
    fn unified_hat_j_matches_piecewise() {
        for g in [-1.9, -0.5, 0.2, 1.0, 1.9] {
            let p = PdParams::new(g, 4).unwrap();
            for &t in &[-2.0, -0.01, 0.0, 0.01, 3.0] {
                for &rho in &[0.0, 0.5, 2.0] {
                    if t == 0.0 && rho == 0.0 {
                        continue;
                    }
                    let a = p.jh_of(t, rho);
                    let b = hat_j_piecewise(&p, t, rho);
                    assert!((a - b).abs() <= 1e-12 * b, "g={g} t={t} rho={rho}");
                }
            }
        }
    }

    #[test]
    fn generating_function_examples() {
        let p0 = PdParams::new(0.0, 4).unwrap();
        assert_eq!((p0.gen_q_hat(0.0), p0.gen_w(0.0)), (1.0, 1.0));
        let p1 = PdParams::new(1.0, 4).unwrap();
        assert_eq!(p1.gen_q_hat(1.0), 1.0);
    }

    #[test]
    fn generating_function_derivatives() {
        let cfg = DiffConfig::default();
        let p = PdParams::new(0.7, 4).unwrap();
        for x in [-2.5, -0.4, 0.3, 1.2, 4.0] {
            let w1 = numerics::derivative_fd(|y| p.gen_w(y), x, &cfg).unwrap();
            let w2 = numerics::second_derivative_fd(|y| p.gen_w(y), x, &cfg).unwrap();
            let j1 = numerics::derivative_fd(|y| p.hat_j_of_p(y), x, &cfg).unwrap();
            assert!((w1 - p.gen_w_prime(x)).abs() < 1e-8);
            assert!((w2 - p.gen_w_second(x)).abs() < 1e-6);
            assert!((j1 - p.hat_j_prime(x)).abs() < 1e-8);
        }
    }

    #[test]
    fn w_p_maps() {
        let p0 = PdParams::new(0.0, 4).unwrap();
        assert_eq!(p0.w_to_p(0.37).unwrap(), 0.37);
        let p1 = PdParams::new(1.0, 4).unwrap();
        assert_eq!(p1.w_to_p(1.0).unwrap(), 0.5);
        assert_eq!(p1.p_to_w(0.5).unwrap(), 1.0);
        assert!(matches!(
            p1.w_to_p(-1.0),
            Err(FinslerError::Pole { pole, .. }) if pole == -1.0
        ));
        assert!(matches!(p1.p_to_w(1.0), Err(FinslerError::Pole { .. })));
    }

    #[test]
    fn q_identity_under_w_p_map() {
        let p = PdParams::new(-1.3, 4).unwrap();
        for w in [-3.0, -0.2, 0.0, 0.5, 2.0] {
            let pv = p.w_to_p(w).unwrap();
            let lhs = p.gen_q(w);
            let rhs = p.gen_q_hat(pv) / (1.0 - p.g() * pv).powi(2);
            assert!((lhs - rhs).abs() < 1e-12 * lhs);
        }
    }

    #[test]
    fn co_landmark_examples() {
        let c0 = PdParams::new(0.0, 4).unwrap().co_landmarks();
        assert_eq!((c0.t1_co, c0.t2_co, c0.f_hat), (1.0, -1.0, 0.0));
        let p1 = PdParams::new(1.0, 4).unwrap();
        let c = p1.co_landmarks();
        assert!((c.t1_co - 3.350_801_517_439_033_8).abs() < 1e-14);
        assert!((c.t2_co + 0.546_293_015_873_601_4).abs() < 1e-15);
        assert!((c.f_hat - 1.830_519_466_555_609_7).abs() < 1e-14);
        assert_eq!(c.f_hat, p1.reflected().landmarks().f);
        for (t, rho) in [(c.t1_co, 0.0), (c.t2_co, 0.0), (c.f_hat, c.k_hat)] {
            assert!((p1.h_of(t, rho) - 1.0).abs() < 1e-12);
        }
        let (slope, _) = p1.co_profile_derivatives(&cv(c.t1_co, &[0.0; 3])).unwrap();
        assert_eq!(slope, 0.0);
    }

    #[test]
    fn legendre_scale_at_zero_is_one() {
        let p = PdParams::new(0.0, 4).unwrap();
        assert_eq!(p.legendre_scale(), 1.0);
        let c = cv(0.3, &[0.4, -1.0, 2.0]);
        assert_eq!(p.contravariant_from_momenta(&c).unwrap().to_vec(), c.to_vec());
    }

    fn point() -> impl Strategy<Value = Vec<f64>> {
        prop::collection::vec(-3.0..3.0f64, 4)
            .prop_filter("nonzero", |v| v.iter().map(|c| c.abs()).sum::<f64>() > 1e-3)
    }

    proptest! {
        #[test]
        fn mirror(g in -1.95..1.95f64, v in point()) {
            let p = PdParams::new(g, 4).unwrap();
            let h = p.hamiltonian(&CoVector::from_slice(&v));
            let k = p.reflected().metric_k(&EventVector::from_slice(&v));
            prop_assert!((h - k).abs() <= 1e-12 * k);
        }

        #[test]
        fn gradient_image_has_constant_ratio(g in -1.95..1.95f64, v in point()) {
            let p = PdParams::new(g, 4).unwrap();
            let x = EventVector::from_slice(&v);
            let m = p.covariant_momenta(&x).unwrap();
            let ratio = p.metric_k(&x) / p.hamiltonian(&m);
            prop_assert!((ratio - p.legendre_scale()).abs() <= 1e-12 * ratio);
            prop_assert!((p.dual_norm(&m) - p.metric_k(&x)).abs() <= 1e-12 * p.metric_k(&x));
        }

        #[test]
        fn momenta_roundtrip(g in -1.95..1.95f64, v in point()) {
            let p = PdParams::new(g, 4).unwrap();
            let x = EventVector::from_slice(&v);
            let back = p.contravariant_from_momenta(&p.covariant_momenta(&x).unwrap()).unwrap();
            prop_assert!(back.max_abs_diff(&x) <= 1e-12 * x.norm());
        }

        #[test]
        fn hat_parities(g in -1.95..1.95f64, v in point()) {
            let p = PdParams::new(g, 4).unwrap();
            let c = CoVector::from_slice(&v);
            let flipped_t = CoVector::new(-c.t, c.xi.clone());
            let flipped_x = CoVector::new(c.t, c.xi.iter().map(|x| -x).collect());
            let h = p.hamiltonian(&c);
            prop_assert!((p.reflected().hamiltonian(&flipped_t) - h).abs() <= 1e-12 * h);
            prop_assert!((p.hamiltonian(&flipped_x) - h).abs() <= 1e-12 * h);
        }
    }
}
