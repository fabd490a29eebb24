//! The positive-definite Finsleroid metric function.
//!
//! For `-2 < g < 2` the metric is
//!
//! ```text
//! K(g; T, R) = sqrt(B) · j,    B = |R|² + g |R| T + T²,
//! j = exp(G/2 · φ),            φ = atan2(2 h T, 2 |R| + g T)
//! ```
//!
//! with `h = sqrt(1 - g²/4)`, `r = 1/h` and `G = g/h`. The two-argument
//! arctangent covers the `T > 0`, `T < 0` and `T = 0` branches at once and
//! stays finite as `T → 0`.
//!
//! Because `K` depends on the spatial block only through `|R|`, most
//! quantities are evaluated on the `(T, |R|)` half-plane.

use std::f64::consts::FRAC_PI_4;

use crate::error::{FinslerError, Result};
use crate::numerics::{self, DiffConfig, RootConfig, Tolerances};
use crate::vector::{CoVector, EventVector, SquareMatrix};

/// Parameters of the positive-definite family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PdParams {
    g: f64,
    h: f64,
    r: f64,
    big_g: f64,
    dim: usize,
}

/// Axis intercepts and the widest ring of the Finsleroid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PdLandmarks {
    /// Intercept with the negative `T` axis.
    pub t1: f64,
    /// Intercept with the positive `T` axis.
    pub t2: f64,
    /// Height of the widest ring, where `d|R|/dT = 0`.
    pub f: f64,
    /// Radius of the widest ring.
    pub k: f64,
}

/// How [`PdParams::metric_tensor`] evaluates `½ ∂²K²/∂R^p ∂R^q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricBackend {
    /// Finite-difference Hessian of `½K²`.
    Hessian,
    /// Quasi-Euclidean tensor pulled back through the spherical map.
    Pullback,
}

/// Which sheet of the profile `T(|R|)` to follow.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `T + g|R| > 0`, the cap containing the positive `T` intercept.
    Upper,
    /// `T + g|R| < 0`.
    Lower,
}

impl PdParams {
    pub fn new(g: f64, dim: usize) -> Result<Self> {
        if !g.is_finite() {
            return Err(FinslerError::NonFinite("PdParams::new"));
        }
        if g <= -2.0 || g >= 2.0 {
            return Err(FinslerError::OutOfRange {
                name: "g",
                value: g,
                bound: "-2 < g < 2",
            });
        }
        if dim < 2 {
            return Err(FinslerError::DimensionTooSmall { dim, min: 2 });
        }
        let h = (1.0 - 0.25 * g * g).sqrt();
        Ok(Self {
            g,
            h,
            r: 1.0 / h,
            big_g: g / h,
            dim,
        })
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    #[allow(non_snake_case)]
    pub fn G(&self) -> f64 {
        self.big_g
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Discriminant of the quadratic form, always `-4h²`.
    pub fn discriminant(&self) -> f64 {
        self.g * self.g - 4.0
    }

    /// Same parameters with `g → -g`.
    pub fn reflected(&self) -> Self {
        Self::new(-self.g, self.dim).expect("reflection preserves the admissible range")
    }

    pub(crate) fn check_dim(&self, dim: usize) -> Result<()> {
        if dim != self.dim {
            return Err(FinslerError::DimensionMismatch {
                expected: self.dim,
                got: dim,
            });
        }
        Ok(())
    }

    pub(crate) fn b_of(&self, t: f64, rho: f64) -> f64 {
        rho * rho + self.g * rho * t + t * t
    }

    pub(crate) fn j_of(&self, t: f64, rho: f64) -> f64 {
        let phi = (2.0 * self.h * t).atan2(2.0 * rho + self.g * t);
        (0.5 * self.big_g * phi).exp()
    }

    pub(crate) fn k_of(&self, t: f64, rho: f64) -> f64 {
        if t == 0.0 && rho == 0.0 {
            return 0.0;
        }
        self.b_of(t, rho).sqrt() * self.j_of(t, rho)
    }

    /// `B(g; R) = |R|² + g|R|T + T²`.
    pub fn b_form(&self, v: &EventVector) -> f64 {
        self.b_of(v.t, v.spatial_norm())
    }

    pub fn j_factor(&self, v: &EventVector) -> Result<f64> {
        if v.is_zero() {
            return Err(FinslerError::ZeroVector("j_factor"));
        }
        Ok(self.j_of(v.t, v.spatial_norm()))
    }

    /// The metric function `K`, extended by `K(0) = 0`.
    pub fn metric_k(&self, v: &EventVector) -> f64 {
        self.k_of(v.t, v.spatial_norm())
    }

    /// `Q(w) = 1 + g w + w²`.
    pub fn gen_q(&self, w: f64) -> f64 {
        1.0 + self.g * w + w * w
    }

    /// `j` as a function of `w = |R|/T`. The sign of `w` (including the sign
    /// of zero) selects the `T > 0` or `T < 0` branch.
    pub fn j_of_w(&self, w: f64) -> f64 {
        if w.is_sign_negative() {
            self.j_of(-1.0, -w)
        } else {
            self.j_of(1.0, w)
        }
    }

    /// Generating function `V(w) = sqrt(Q) j`, so that `K = |T| V(|R|/T)`.
    pub fn gen_v(&self, w: f64) -> f64 {
        self.gen_q(w).sqrt() * self.j_of_w(w)
    }

    /// `V'(w) = w V / Q`.
    pub fn gen_v_prime(&self, w: f64) -> f64 {
        w * self.gen_v(w) / self.gen_q(w)
    }

    /// `V''(w) = V / Q²`.
    pub fn gen_v_second(&self, w: f64) -> f64 {
        let q = self.gen_q(w);
        self.gen_v(w) / (q * q)
    }

    /// `j'(w) = -g j / (2Q)`.
    pub fn j_prime(&self, w: f64) -> f64 {
        -0.5 * self.g * self.j_of_w(w) / self.gen_q(w)
    }

    /// Covariant momenta `R_p = ½ ∂K²/∂R^p`.
    ///
    /// In the `(T, |R|)` variables these reduce to `R_0 = j²(T + g|R|)` and
    /// `R_a = j² R^a`, which are regular across `T = 0`.
    pub fn covariant_momenta(&self, v: &EventVector) -> Result<CoVector> {
        self.check_dim(v.dim())?;
        if v.is_zero() {
            return Err(FinslerError::ZeroVector("covariant_momenta"));
        }
        let rho = v.spatial_norm();
        let j2 = self.j_of(v.t, rho).powi(2);
        Ok(CoVector::new(
            j2 * (v.t + self.g * rho),
            v.x.iter().map(|x| j2 * x).collect(),
        ))
    }

    /// Finslerian metric tensor `g_pq = ½ ∂²K²/∂R^p ∂R^q`.
    pub fn metric_tensor(&self, v: &EventVector, backend: MetricBackend) -> Result<SquareMatrix> {
        self.check_dim(v.dim())?;
        if v.is_zero() {
            return Err(FinslerError::ZeroVector("metric_tensor"));
        }
        match backend {
            MetricBackend::Pullback => self.pullback_metric(v),
            MetricBackend::Hessian => {
                let half_sq = |p: &[f64]| {
                    let t = p[0];
                    let rho = p[1..].iter().map(|x| x * x).sum::<f64>().sqrt();
                    0.5 * self.k_of(t, rho).powi(2)
                };
                numerics::hessian_fd(half_sq, &v.to_vec(), &DiffConfig::default())
            }
        }
    }

    /// Axis intercepts `T₁ < 0 < T₂` and the widest ring `(f, k)`.
    ///
    /// The ring radius is `k = exp(G · atan(G/2))`, valid for either sign of
    /// `g`; it is even in `g` while `f = -g k` is odd.
    pub fn landmarks(&self) -> PdLandmarks {
        let big_g = self.big_g;
        let tilt = 0.5 * big_g * (0.5 * big_g).atan();
        let k = (big_g * (0.5 * big_g).atan()).exp();
        PdLandmarks {
            t1: -(big_g * FRAC_PI_4 + tilt).exp(),
            t2: (-big_g * FRAC_PI_4 + tilt).exp(),
            f: -self.g * k,
            k,
        }
    }

    /// Radially rescales `u` onto the indicatrix `K = 1`.
    pub fn indicatrix_point(&self, u: &EventVector) -> Result<EventVector> {
        self.check_dim(u.dim())?;
        if u.is_zero() {
            return Err(FinslerError::ZeroVector("indicatrix_point"));
        }
        Ok(u.scaled(1.0 / self.metric_k(u)))
    }

    fn on_surface(&self, v: &EventVector) -> Result<(f64, f64)> {
        self.check_dim(v.dim())?;
        let level = self.metric_k(v);
        if (level - 1.0).abs() > Tolerances::DEFAULT.on_surface {
            return Err(FinslerError::NotOnSurface { level });
        }
        Ok((v.t, v.spatial_norm()))
    }

    /// `(dT/d|R|, d²T/d|R|²)` of the indicatrix profile through `v`.
    pub fn profile_derivatives(&self, v: &EventVector) -> Result<(f64, f64)> {
        let (t, rho) = self.on_surface(v)?;
        let d = t + self.g * rho;
        if d.abs() <= 1e-14 * t.abs().max(rho) {
            return Err(FinslerError::VerticalTangent { t, rho });
        }
        Ok((-rho / d, -self.b_of(t, rho) / d.powi(3)))
    }

    /// `(d|R|/dT, d²|R|/dT²)` of the indicatrix profile through `v`.
    pub fn inverse_profile_derivatives(&self, v: &EventVector) -> Result<(f64, f64)> {
        let (t, rho) = self.on_surface(v)?;
        if rho == 0.0 {
            return Err(FinslerError::VerticalTangent { t, rho });
        }
        Ok((-(t + self.g * rho) / rho, -self.b_of(t, rho) / rho.powi(3)))
    }

    /// Solves `K(T, |R| = rho) = 1` for `T` on one branch with a bracketed
    /// Newton iteration.
    pub fn solve_profile_t(&self, rho: f64, branch: Branch) -> Result<f64> {
        let k = self.landmarks().k;
        if !(0.0..k).contains(&rho) {
            return Err(FinslerError::OutOfRange {
                name: "|R|",
                value: rho,
                bound: "0 <= |R| < k(g)",
            });
        }
        // Along a line of constant |R|, K is convex in T with its minimum at T = -g|R|.
        let apex = -self.g * rho;
        let dir = match branch {
            Branch::Upper => 1.0,
            Branch::Lower => -1.0,
        };
        let mut far = apex + dir;
        while self.k_of(far, rho) <= 1.0 {
            far = apex + 2.0 * (far - apex);
        }
        let residual = |t: f64| {
            let kv = self.k_of(t, rho);
            let dk = self.j_of(t, rho).powi(2) * (t + self.g * rho) / kv;
            (kv - 1.0, dk)
        };
        let cfg = RootConfig {
            bracket: Some((apex, far)),
            ..RootConfig::default()
        };
        numerics::newton_scalar(residual, far, &cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn ev(t: f64, x: &[f64]) -> EventVector {
        EventVector::new(t, x.to_vec())
    }

    /// The three-case definition of `j`, written out branch by branch.
    fn j_piecewise(p: &PdParams, t: f64, rho: f64) -> f64 {
        let (g, h, big_g) = (p.g(), p.h(), p.G());
        if t > 0.0 {
            (0.5 * big_g * (FRAC_PI_2 - ((2.0 * rho + g * t) / (2.0 * h * t)).atan())).exp()
        } else if t < 0.0 {
            (-0.5 * big_g * (FRAC_PI_2 + ((2.0 * rho + g * t) / (2.0 * h * t)).atan())).exp()
        } else {
            1.0
        }
    }

    #[test]
    fn params_at_zero_and_one() {
        let p = PdParams::new(0.0, 4).unwrap();
        assert_eq!((p.h(), p.r(), p.G()), (1.0, 1.0, 0.0));

        let p = PdParams::new(1.0, 4).unwrap();
        assert!((p.h() - 0.866_025_403_784_438_6).abs() < 1e-15);
        assert!((p.r() - 1.154_700_538_379_251_5).abs() < 1e-15);
        assert!((p.G() - 1.154_700_538_379_251_5).abs() < 1e-15);
        assert!((p.discriminant() + 4.0 * p.h() * p.h()).abs() < 1e-15);
    }

    #[test]
    fn params_reject_bad_input() {
        for g in [2.0, -2.0, 2.5] {
            match PdParams::new(g, 4) {
                Err(FinslerError::OutOfRange { name: "g", .. }) => {}
                other => panic!("g = {g}: {other:?}"),
            }
        }
        assert!(matches!(
            PdParams::new(0.5, 1),
            Err(FinslerError::DimensionTooSmall { dim: 1, min: 2 })
        ));
        assert!(matches!(PdParams::new(f64::NAN, 4), Err(FinslerError::NonFinite(_))));
    }

    #[test]
    fn b_form_examples() {
        let p0 = PdParams::new(0.0, 4).unwrap();
        assert_eq!(p0.b_form(&ev(3.0, &[4.0, 0.0, 0.0])), 25.0);
        let p1 = PdParams::new(1.0, 4).unwrap();
        assert_eq!(p1.b_form(&ev(1.0, &[1.0, 0.0, 0.0])), 3.0);
        let pm = PdParams::new(-1.9, 4).unwrap();
        let b = pm.b_form(&ev(1.0, &[1.0, 0.0, 0.0]));
        assert!((b - 0.1).abs() < 1e-15 && b > 0.0);
    }

    #[test]
    fn j_factor_examples() {
        for g in [-1.5, 0.0, 1.0] {
            let p = PdParams::new(g, 4).unwrap();
            assert_eq!(p.j_factor(&ev(0.0, &[0.0, 1.0, 0.0])).unwrap(), 1.0);
        }
        let p0 = PdParams::new(0.0, 4).unwrap();
        assert_eq!(p0.j_factor(&ev(-2.0, &[0.3, 1.0, 0.0])).unwrap(), 1.0);

        let p1 = PdParams::new(1.0, 4).unwrap();
        let j = p1.j_factor(&ev(1.0, &[0.0; 3])).unwrap();
        assert!((j - 1.830_519_466_555_609_7).abs() < 1e-14);
        assert!(p1.j_factor(&ev(0.0, &[0.0; 3])).is_err());
    }

    #[test]
    fn unified_j_matches_piecewise() {
        for g in [-1.9, -1.0, -0.1, 0.5, 1.0, 1.9] {
            let p = PdParams::new(g, 4).unwrap();
            for &t in &[-3.0, -1.0, -1e-3, 0.0, 1e-3, 0.7, 5.0] {
                for &rho in &[0.0, 0.2, 1.0, 4.0] {
                    if t == 0.0 && rho == 0.0 {
                        continue;
                    }
                    let a = p.j_of(t, rho);
                    let b = j_piecewise(&p, t, rho);
                    assert!((a - b).abs() <= 1e-12 * b, "g={g} t={t} rho={rho}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn j_is_continuous_across_equator() {
        let p = PdParams::new(1.3, 4).unwrap();
        for &rho in &[0.1, 1.0, 7.0] {
            let up = p.j_of(1e-12, rho);
            let down = p.j_of(-1e-12, rho);
            assert!((up - 1.0).abs() < 1e-10 && (down - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn metric_examples() {
        let p0 = PdParams::new(0.0, 4).unwrap();
        assert_eq!(p0.metric_k(&ev(3.0, &[4.0, 0.0, 0.0])), 5.0);
        let p1 = PdParams::new(1.0, 4).unwrap();
        assert!((p1.metric_k(&ev(0.0, &[0.6, 0.8, 0.0])) - 1.0).abs() < 1e-15);
        let t2 = 0.546_293_015_873_601_4;
        assert!((p1.metric_k(&ev(t2, &[0.0; 3])) - 1.0).abs() < 1e-15);
        assert_eq!(p1.metric_k(&ev(0.0, &[0.0; 3])), 0.0);
    }

    #[test]
    fn generating_function_examples() {
        let p0 = PdParams::new(0.0, 4).unwrap();
        assert_eq!((p0.gen_q(0.0), p0.gen_v(0.0)), (1.0, 1.0));
        let p1 = PdParams::new(1.0, 4).unwrap();
        assert_eq!(p1.gen_q(1.0), 3.0);
        assert!((p1.gen_v(0.0) - 1.830_519_466_555_609_7).abs() < 1e-14);
    }

    #[test]
    fn metric_equals_abs_t_times_v() {
        let p = PdParams::new(-0.7, 4).unwrap();
        for v in [
            ev(2.0, &[1.0, -0.5, 0.3]),
            ev(-0.4, &[0.0, 2.0, 0.0]),
            ev(-1.5, &[0.0, 0.0, 0.0]),
            ev(1.5, &[0.0, 0.0, 0.0]),
        ] {
            let w = v.spatial_norm() / v.t;
            let k = p.metric_k(&v);
            assert!((k - v.t.abs() * p.gen_v(w)).abs() <= 1e-14 * k);
        }
    }

    #[test]
    fn momenta_examples() {
        let p0 = PdParams::new(0.0, 4).unwrap();
        let m = p0.covariant_momenta(&ev(3.0, &[4.0, 0.0, 0.0])).unwrap();
        assert_eq!(m.to_vec(), vec![3.0, 4.0, 0.0, 0.0]);

        let p1 = PdParams::new(1.0, 4).unwrap();
        let v = ev(1.0, &[1.0, 0.0, 0.0]);
        let m = p1.covariant_momenta(&v).unwrap();
        let fd = numerics::grad_fd(
            |q: &[f64]| 0.5 * p1.metric_k(&EventVector::from_slice(q)).powi(2),
            &v.to_vec(),
            &DiffConfig::default(),
        )
        .unwrap();
        for (a, b) in m.to_vec().iter().zip(fd) {
            assert!((a - b).abs() < 1e-8);
        }

        let m2 = p1.covariant_momenta(&v.scaled(2.0)).unwrap();
        assert!(m2.max_abs_diff(&m.scaled(2.0)) < 1e-15);

        assert!(p1.covariant_momenta(&ev(0.0, &[0.0; 3])).is_err());
        assert!(matches!(
            p1.covariant_momenta(&ev(1.0, &[0.0; 2])),
            Err(FinslerError::DimensionMismatch { expected: 4, got: 3 })
        ));
    }

    #[test]
    fn momenta_at_equator_are_finite() {
        let p = PdParams::new(1.0, 4).unwrap();
        let m = p.covariant_momenta(&ev(0.0, &[0.6, 0.8, 0.0])).unwrap();
        assert!((m.t - 1.0).abs() < 1e-15);
        assert!(m.max_abs_diff(&CoVector::new(1.0, vec![0.6, 0.8, 0.0])) < 1e-15);
    }

    #[test]
    fn metric_tensor_is_identity_at_zero_g() {
        let p = PdParams::new(0.0, 4).unwrap();
        let v = ev(0.3, &[-1.0, 2.0, 0.5]);
        let pull = p.metric_tensor(&v, MetricBackend::Pullback).unwrap();
        assert!(pull.max_abs_diff(&SquareMatrix::identity(4)) < 1e-15);
        let hess = p.metric_tensor(&v, MetricBackend::Hessian).unwrap();
        assert!(hess.max_abs_diff(&SquareMatrix::identity(4)) < 1e-7);
    }

    #[test]
    fn metric_tensor_backends_agree() {
        let p = PdParams::new(1.0, 4).unwrap();
        let v = ev(1.0, &[1.0, 0.0, 0.0]);
        let a = p.metric_tensor(&v, MetricBackend::Hessian).unwrap();
        let b = p.metric_tensor(&v, MetricBackend::Pullback).unwrap();
        assert!(a.max_abs_diff(&b) < 1e-6, "{}", a.max_abs_diff(&b));
        assert!(numerics::min_eigen_sym(&b).unwrap() > 0.0);
    }

    #[test]
    fn landmark_examples() {
        let l0 = PdParams::new(0.0, 4).unwrap().landmarks();
        assert_eq!((l0.t1, l0.t2, l0.f, l0.k), (-1.0, 1.0, 0.0, 1.0));

        let l = PdParams::new(1.0, 4).unwrap().landmarks();
        assert!((l.t2 - 0.546_293_015_873_601_4).abs() < 1e-15);
        assert!((l.t1 + 3.350_801_517_439_033_8).abs() < 1e-14);
        assert!((l.f + 1.830_519_466_555_609_7).abs() < 1e-14);
        assert!((l.k - 1.830_519_466_555_609_7).abs() < 1e-14);
    }

    #[test]
    fn landmarks_lie_on_indicatrix() {
        for g in [-1.9, -1.0, -0.5, -0.1, 0.1, 0.5, 1.0, 1.9] {
            let p = PdParams::new(g, 4).unwrap();
            let l = p.landmarks();
            assert!(l.t1 < 0.0 && 0.0 < l.t2);
            assert_eq!(l.f.signum(), -g.signum());
            for (t, rho) in [(l.t1, 0.0), (l.t2, 0.0), (l.f, l.k), (0.0, 1.0)] {
                assert!((p.k_of(t, rho) - 1.0).abs() < 1e-12, "g={g} ({t},{rho})");
            }
            let (drho, _) = p
                .inverse_profile_derivatives(&EventVector::axial(l.f, l.k, 4))
                .unwrap();
            assert!(drho.abs() < 1e-12);
        }
    }

    #[test]
    fn ring_formula_matches_closed_form_for_positive_g() {
        // The arccot form of the ring radius holds on the g > 0 branch.
        for g in [0.1, 0.5, 1.0, 1.9] {
            let p = PdParams::new(g, 4).unwrap();
            let (h, big_g) = (p.h(), p.G());
            let k = (0.5 * big_g * (FRAC_PI_2 - ((2.0 - g * g) / (2.0 * g * h)).atan())).exp();
            assert!((p.landmarks().k - k).abs() < 1e-12 * k);
        }
        // and the widest ring is reflection-symmetric
        let a = PdParams::new(0.8, 4).unwrap().landmarks();
        let b = PdParams::new(-0.8, 4).unwrap().landmarks();
        assert!((a.k - b.k).abs() < 1e-15 && (a.f + b.f).abs() < 1e-15);
        assert!((a.t1 + b.t2.recip()).abs() > 0.0);
        assert!((a.t1 * a.t2 + a.k).abs() < 1e-14);
        let _ = PI;
    }

    #[test]
    fn indicatrix_point_examples() {
        let p0 = PdParams::new(0.0, 4).unwrap();
        let q = p0.indicatrix_point(&ev(3.0, &[4.0, 0.0, 0.0])).unwrap();
        assert!(q.max_abs_diff(&ev(0.6, &[0.8, 0.0, 0.0])) < 1e-15);

        let p1 = PdParams::new(1.0, 4).unwrap();
        let u = ev(0.0, &[0.0, 1.0, 0.0]);
        assert!(p1.indicatrix_point(&u).unwrap().max_abs_diff(&u) < 1e-15);
        let q = p1.indicatrix_point(&ev(1.0, &[0.0; 3])).unwrap();
        assert!((q.t - p1.landmarks().t2).abs() < 1e-15);
        assert!(p1.indicatrix_point(&ev(0.0, &[0.0; 3])).is_err());
    }

    #[test]
    fn profile_derivative_examples() {
        let p = PdParams::new(1.0, 4).unwrap();
        let top = EventVector::axial(p.landmarks().t2, 0.0, 4);
        assert_eq!(p.profile_derivatives(&top).unwrap().0, 0.0);
        let eq = EventVector::axial(0.0, 1.0, 4);
        assert!((p.profile_derivatives(&eq).unwrap().0 + 1.0).abs() < 1e-15);

        let apex = EventVector::axial(p.landmarks().f, p.landmarks().k, 4);
        assert!(matches!(
            p.profile_derivatives(&apex),
            Err(FinslerError::VerticalTangent { .. })
        ));
        assert!(matches!(
            p.profile_derivatives(&EventVector::axial(2.0, 0.0, 4)),
            Err(FinslerError::NotOnSurface { .. })
        ));
    }

    #[test]
    fn newton_branch_matches_radial_scaling() {
        let p = PdParams::new(1.0, 4).unwrap();
        let t = p.solve_profile_t(0.5, Branch::Upper).unwrap();
        assert!((p.k_of(t, 0.5) - 1.0).abs() <= 1e-12);
        // Radial scaling along the direction of (t, 0.5) must land on the same point.
        let q = p.indicatrix_point(&EventVector::axial(t * 3.0, 1.5, 4)).unwrap();
        assert!((q.t - t).abs() < 1e-12 && (q.spatial_norm() - 0.5).abs() < 1e-12);

        let lower = p.solve_profile_t(0.5, Branch::Lower).unwrap();
        assert!(lower < -0.5 && (p.k_of(lower, 0.5) - 1.0).abs() <= 1e-12);
        assert!(p.solve_profile_t(2.0, Branch::Upper).is_err());
    }
}
