use std::f64::consts::PI;
use std::io::Write;

use finsleroid_core::{CoVector, EventVector, PdParams, Sector, SrParams};

use crate::error::{ExportError, Result};
use crate::format;

/// Unit-level re-evaluation tolerance for traced rows.
pub const PROFILE_TOL: f64 = 1e-10;

/// Fraction of an SR sector's angular width kept clear of each cone sheet.
pub const CONE_MARGIN: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileFamily {
    PdIndicatrix,
    PdFiguratrix,
    SrHyperboloid,
    SrCoHyperboloid,
}

impl ProfileFamily {
    pub fn new(sr: bool, dual: bool) -> Self {
        match (sr, dual) {
            (false, false) => ProfileFamily::PdIndicatrix,
            (false, true) => ProfileFamily::PdFiguratrix,
            (true, false) => ProfileFamily::SrHyperboloid,
            (true, true) => ProfileFamily::SrCoHyperboloid,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ProfileFamily::PdIndicatrix => "pd-indicatrix",
            ProfileFamily::PdFiguratrix => "pd-figuratrix",
            ProfileFamily::SrHyperboloid => "sr-hyperboloid",
            ProfileFamily::SrCoHyperboloid => "sr-co-hyperboloid",
        }
    }

    pub fn is_sr(self) -> bool {
        matches!(self, ProfileFamily::SrHyperboloid | ProfileFamily::SrCoHyperboloid)
    }
}

/// Meridian of a unit surface in the `(|R|, T)` half-plane.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileCurve {
    pub family: ProfileFamily,
    pub g: f64,
    /// Only set for the SR families.
    pub sector: Option<Sector>,
    /// `(rho, t)`, ordered by polar angle from the `+T` axis.
    pub samples: Vec<(f64, f64)>,
}

/// Unit function of a family, evaluated on `(T, |R|)`.
pub fn level(family: ProfileFamily, g: f64, t: f64, rho: f64) -> Result<f64> {
    Ok(match family {
        ProfileFamily::PdIndicatrix => PdParams::new(g, 2)?.metric_k(&EventVector::new(t, vec![rho])),
        ProfileFamily::PdFiguratrix => PdParams::new(g, 2)?.hamiltonian(&CoVector::new(t, vec![rho])),
        ProfileFamily::SrHyperboloid => SrParams::new(g, 2)?.metric_f(&EventVector::new(t, vec![rho])),
        ProfileFamily::SrCoHyperboloid => SrParams::new(g, 2)?.hamiltonian(&CoVector::new(t, vec![rho])),
    })
}

/// `count` evenly spaced angles on `[lo, hi]` merged with the landmark angles
/// that fall inside, sorted. Grid angles within 1e-12 of a landmark snap to it.
fn angle_grid(lo: f64, hi: f64, count: usize, landmarks: &[f64]) -> Vec<f64> {
    let inside: Vec<f64> = landmarks.iter().copied().filter(|&a| a >= lo && a <= hi).collect();
    let step = (hi - lo) / (count - 1) as f64;
    let mut out: Vec<f64> = (0..count)
        .map(|i| if i == count - 1 { hi } else { lo + step * i as f64 })
        .map(|a| inside.iter().copied().find(|l| (l - a).abs() <= 1e-12).unwrap_or(a))
        .collect();
    out.extend(inside);
    out.sort_by(f64::total_cmp);
    out.dedup();
    out
}

/// `(cos θ, sin θ)` with the axis and equator directions exact.
pub(crate) fn direction(theta: f64) -> (f64, f64) {
    if theta == 0.0 {
        (1.0, 0.0)
    } else if theta == 0.5 * PI {
        (0.0, 1.0)
    } else if theta == PI {
        (-1.0, 0.0)
    } else {
        (theta.cos(), theta.sin())
    }
}

impl ProfileCurve {
    /// Traces the PD indicatrix (or figuratrix) from the `+T` pole to the `-T`
    /// pole. The equator and the apex `(f, k)` are always present.
    pub fn pd(g: f64, dual: bool, samples: usize) -> Result<Self> {
        check_samples(samples)?;
        let p = PdParams::new(g, 2)?;
        let (apex_t, apex_rho) = if dual {
            let c = p.co_landmarks();
            (c.f_hat, c.k_hat)
        } else {
            let l = p.landmarks();
            (l.f, l.k)
        };
        let angles = angle_grid(0.0, PI, samples, &[0.5 * PI, apex_rho.atan2(apex_t)]);
        let family = ProfileFamily::new(false, dual);
        let rows = angles
            .iter()
            .map(|&th| {
                let (t, rho) = direction(th);
                let s = level(family, g, t, rho)?;
                Ok((rho / s, t / s))
            })
            .collect::<Result<Vec<_>>>()?;
        let curve = ProfileCurve {
            family,
            g,
            sector: None,
            samples: rows,
        };
        curve.validate()?;
        Ok(curve)
    }

    /// Traces one sector of the SR hyperboloid (or co-hyperboloid) between its
    /// bounding axis and cone sheets, keeping `CONE_MARGIN` off each sheet.
    pub fn sr(g: f64, dual: bool, sector: Sector, samples: usize) -> Result<Self> {
        check_samples(samples)?;
        // H_SR(g) = F_SR(-g), so the co-hyperboloid has the reflected geometry
        let base = SrParams::new(g, 2)?;
        let p = if dual { base.reflected() } else { base };
        let (minus, plus) = p.cone_angles();
        let (lo, hi) = match sector {
            Sector::Forward => (0.0, minus - CONE_MARGIN * minus),
            Sector::Spacelike => {
                let m = CONE_MARGIN * (plus - minus);
                (minus + m, plus - m)
            }
            Sector::Backward => (plus + CONE_MARGIN * (PI - plus), PI),
            Sector::OnCone(_) => return Err(ExportError::usage("the cone itself carries no profile")),
        };
        let l = p.landmarks();
        let angles = angle_grid(lo, hi, samples, &[0.0, 0.5 * PI, l.z.atan2(l.s), PI]);
        let family = ProfileFamily::new(true, dual);
        let mut rows = Vec::with_capacity(angles.len());
        for th in angles {
            let (t, rho) = direction(th);
            let u = EventVector::new(t, vec![rho]);
            let q = p.hyperboloid_point(&u)?;
            if p.sector(&q) != sector {
                return Err(ExportError::usage(format!(
                    "angle {th} left the {} sector",
                    sector.label()
                )));
            }
            rows.push((q.spatial_norm(), q.t));
        }
        let curve = ProfileCurve {
            family,
            g,
            sector: Some(sector),
            samples: rows,
        };
        curve.validate()?;
        Ok(curve)
    }

    /// Every row must re-evaluate to the unit level.
    pub fn validate(&self) -> Result<()> {
        for &(rho, t) in &self.samples {
            let s = level(self.family, self.g, t, rho)?;
            let on = (s - 1.0).abs() <= PROFILE_TOL;
            if !on {
                return Err(ExportError::OffSurface {
                    what: format!("row ({rho}, {t})"),
                    level: s,
                    tol: PROFILE_TOL,
                });
            }
        }
        Ok(())
    }

    pub fn comments(&self) -> Vec<String> {
        let mut c = vec![format!("{} g={}", self.family.label(), format::num(self.g))];
        if let Some(s) = self.sector {
            c.push(format!("sector {}", s.label()));
        }
        c
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let rows: Vec<Vec<f64>> = self.samples.iter().map(|&(rho, t)| vec![rho, t]).collect();
        format::write_csv(w, &self.comments(), &["rho", "t"], &rows)?;
        Ok(())
    }
}

fn check_samples(samples: usize) -> Result<()> {
    if samples < 3 {
        return Err(ExportError::usage(format!("need at least 3 samples, got {samples}")));
    }
    Ok(())
}
