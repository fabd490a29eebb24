//! The relativistic Finslerian metric function and its Hamiltonian.
//!
//! ```text
//! F = |T + g₋|R||^{G₊/2} · |T + g₊|R||^{-G₋/2}
//! H = |T̂ - |R̂|/g⁺|^{G⁺/2} · |T̂ - |R̂|/g⁻|^{-G⁻/2}
//! ```
//!
//! with `h = sqrt(1 + g²/4)`, `g± = -g/2 ± h`, `g^± = 1/g±` and `G = g/h` for
//! each of them. Both exponents of `F` are positive, so `F` vanishes on the
//! two cone sheets `T + g±|R| = 0`, which split the `(T, |R|)` half-plane
//! into three [`Sector`]s.

use crate::error::{FinslerError, Result};
use crate::numerics::Tolerances;
use crate::vector::{CoVector, EventVector};

/// Parameters of the relativistic family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SrParams {
    pub g: f64,
    pub h: f64,
    pub g_plus: f64,
    pub g_minus: f64,
    pub g_up_plus: f64,
    pub g_up_minus: f64,
    pub big_g_plus: f64,
    pub big_g_minus: f64,
    pub big_g_up_plus: f64,
    pub big_g_up_minus: f64,
    pub dim: usize,
}

/// Equatorial radius `c` and the turning point `(s, z)` of the unit
/// hyperboloid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SrLandmarks {
    pub c: f64,
    pub z: f64,
    pub s: f64,
}

/// One of the two linear factors whose zero set is the cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeFactor {
    /// `T + g₋|R|`
    Minus,
    /// `T + g₊|R|`
    Plus,
}

impl ConeFactor {
    pub fn label(self) -> &'static str {
        match self {
            ConeFactor::Minus => "T + g_-|R|",
            ConeFactor::Plus => "T + g_+|R|",
        }
    }
}

/// Position relative to the cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sector {
    /// Both factors positive.
    Forward,
    /// `T + g₋|R| < 0 < T + g₊|R|`.
    Spacelike,
    /// Both factors negative.
    Backward,
    OnCone(ConeFactor),
}

impl Sector {
    pub fn label(self) -> &'static str {
        match self {
            Sector::Forward => "forward",
            Sector::Spacelike => "spacelike",
            Sector::Backward => "backward",
            Sector::OnCone(_) => "on-cone",
        }
    }
}

impl SrParams {
    pub fn new(g: f64, dim: usize) -> Result<Self> {
        if !g.is_finite() {
            return Err(FinslerError::NonFinite("SrParams::new"));
        }
        if dim < 2 {
            return Err(FinslerError::DimensionTooSmall { dim, min: 2 });
        }
        let h = (1.0 + 0.25 * g * g).sqrt();
        let g_plus = -0.5 * g + h;
        let g_minus = -0.5 * g - h;
        // 1/g₊ = g/2 + h and 1/g₋ = g/2 - h, written without the division
        let g_up_plus = 0.5 * g + h;
        let g_up_minus = 0.5 * g - h;
        Ok(Self {
            g,
            h,
            g_plus,
            g_minus,
            g_up_plus,
            g_up_minus,
            big_g_plus: g_plus / h,
            big_g_minus: g_minus / h,
            big_g_up_plus: g_up_plus / h,
            big_g_up_minus: g_up_minus / h,
            dim,
        })
    }

    /// Same parameters with `g → -g`.
    pub fn reflected(&self) -> Self {
        Self::new(-self.g, self.dim).expect("reflection keeps g finite")
    }

    fn check_dim(&self, dim: usize) -> Result<()> {
        if dim != self.dim {
            return Err(FinslerError::DimensionMismatch {
                expected: self.dim,
                got: dim,
            });
        }
        Ok(())
    }

    /// `(T + g₋|R|, T + g₊|R|)`.
    pub fn factors(&self, t: f64, rho: f64) -> (f64, f64) {
        (t + self.g_minus * rho, t + self.g_plus * rho)
    }

    fn classify(a: f64, b: f64, scale: f64) -> Sector {
        let eps = 1e-14 * scale;
        if a.abs() <= eps {
            Sector::OnCone(ConeFactor::Minus)
        } else if b.abs() <= eps {
            Sector::OnCone(ConeFactor::Plus)
        } else if a > 0.0 && b > 0.0 {
            Sector::Forward
        } else if a < 0.0 && b < 0.0 {
            Sector::Backward
        } else {
            Sector::Spacelike
        }
    }

    pub fn sector(&self, v: &EventVector) -> Sector {
        let rho = v.spatial_norm();
        let (a, b) = self.factors(v.t, rho);
        Self::classify(a, b, v.t.abs() + rho)
    }

    /// Sector of a covector with respect to the factors of `H`.
    pub fn co_sector(&self, c: &CoVector) -> Sector {
        let rho = c.spatial_norm();
        let a = c.t - rho / self.g_up_plus;
        let b = c.t - rho / self.g_up_minus;
        Self::classify(a, b, c.t.abs() + rho)
    }

    fn f_of(&self, t: f64, rho: f64) -> f64 {
        let (a, b) = self.factors(t, rho);
        a.abs().powf(0.5 * self.big_g_plus) * b.abs().powf(-0.5 * self.big_g_minus)
    }

    /// The metric function `F`, zero on the cone.
    pub fn metric_f(&self, v: &EventVector) -> f64 {
        self.f_of(v.t, v.spatial_norm())
    }

    /// The Hamiltonian `H`, zero on its cone.
    pub fn hamiltonian(&self, c: &CoVector) -> f64 {
        let rho = c.spatial_norm();
        let a = c.t - rho / self.g_up_plus;
        let b = c.t - rho / self.g_up_minus;
        a.abs().powf(0.5 * self.big_g_up_plus) * b.abs().powf(-0.5 * self.big_g_up_minus)
    }

    /// `B_SR = (T + g₋|R|)(T + g₊|R|) = T² - g|R|T - |R|²`.
    pub fn b_form(&self, v: &EventVector) -> f64 {
        let rho = v.spatial_norm();
        let (a, b) = self.factors(v.t, rho);
        a * b
    }

    /// `½ ∂F²/∂R^p = (F²(T - g|R|)/B_SR, -F² R^a / B_SR)`.
    pub fn covariant_momenta(&self, v: &EventVector) -> Result<CoVector> {
        self.check_dim(v.dim())?;
        if let Sector::OnCone(factor) = self.sector(v) {
            return Err(FinslerError::OnCone {
                factor: factor.label(),
            });
        }
        let rho = v.spatial_norm();
        let (a, b) = self.factors(v.t, rho);
        let scale = self.f_of(v.t, rho).powi(2) / (a * b);
        Ok(CoVector::new(
            scale * (v.t - self.g * rho),
            v.x.iter().map(|x| -scale * x).collect(),
        ))
    }

    pub fn landmarks(&self) -> SrLandmarks {
        let (gp, gm) = (self.g_plus, self.g_minus);
        let (bp, bm) = (self.big_g_plus, self.big_g_minus);
        let c = (-gm).powf(-0.5 * bp) * gp.powf(0.5 * bm);
        let z = gp.powf(-0.5 * bp) * (-gm).powf(0.5 * bm);
        SrLandmarks { c, z, s: self.g * z }
    }

    /// Radially rescales `u` onto `F = 1`. Any off-cone direction is
    /// accepted; the image stays in the sector of `u`.
    pub fn hyperboloid_point(&self, u: &EventVector) -> Result<EventVector> {
        self.check_dim(u.dim())?;
        if u.is_zero() {
            return Err(FinslerError::ZeroVector("hyperboloid_point"));
        }
        if let Sector::OnCone(factor) = self.sector(u) {
            return Err(FinslerError::OnCone {
                factor: factor.label(),
            });
        }
        Ok(u.scaled(1.0 / self.metric_f(u)))
    }

    fn on_surface(&self, v: &EventVector) -> Result<(f64, f64)> {
        self.check_dim(v.dim())?;
        let level = self.metric_f(v);
        if (level - 1.0).abs() > Tolerances::DEFAULT.on_surface {
            return Err(FinslerError::NotOnSurface { level });
        }
        Ok((v.t, v.spatial_norm()))
    }

    /// `(dT/d|R|, d²T/d|R|²) = (|R|/(T - g|R|), B_SR/(T - g|R|)³)` on `F = 1`.
    pub fn profile_derivatives(&self, v: &EventVector) -> Result<(f64, f64)> {
        let (t, rho) = self.on_surface(v)?;
        let d = t - self.g * rho;
        if d.abs() <= 1e-14 * t.abs().max(rho) {
            return Err(FinslerError::VerticalTangent { t, rho });
        }
        let (a, b) = self.factors(t, rho);
        Ok((rho / d, a * b / d.powi(3)))
    }

    /// `(d|R|/dT, d²|R|/dT²)` on `F = 1`.
    pub fn inverse_profile_derivatives(&self, v: &EventVector) -> Result<(f64, f64)> {
        let (t, rho) = self.on_surface(v)?;
        if rho == 0.0 {
            return Err(FinslerError::VerticalTangent { t, rho });
        }
        let (a, b) = self.factors(t, rho);
        Ok(((t - self.g * rho) / rho, -a * b / rho.powi(3)))
    }

    /// Polar angles (from the `+T` axis) of the two cone sheets in the
    /// `(T, |R|)` half-plane, `Minus` sheet first.
    pub fn cone_angles(&self) -> (f64, f64) {
        // T = -g∓ |R|, i.e. the direction (-g∓, 1)
        ((1.0f64).atan2(-self.g_minus), (1.0f64).atan2(-self.g_plus))
    }
}
