//! Numeric kernels: finite differences with Richardson extrapolation,
//! a safeguarded scalar Newton iteration and a cyclic Jacobi eigen-solver
//! for small symmetric matrices.

use crate::error::{FinslerError, Result};
use crate::vector::SquareMatrix;

/// Tolerances shared by the verification battery and the acceptance suite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Closed-form identities evaluated directly.
    pub algebraic: f64,
    /// Reductions to the classical norms at `g = 0`.
    pub classical: f64,
    /// Composed maps (roundtrips, contractions, determinants).
    pub composed: f64,
    /// Closed forms compared against Richardson-extrapolated derivatives.
    pub derivative: f64,
    /// Closed forms compared against plain finite-difference Hessians and gradients.
    pub finite_difference: f64,
    /// Lower bound on the smallest metric-tensor eigenvalue.
    pub min_eigenvalue: f64,
    /// Minimum `|K(g;-T,R) - K(g;T,R)|` that witnesses the broken `T` symmetry.
    pub asymmetry_witness: f64,
    /// Accepted deviation of the level `K = 1` for points fed to profile routines.
    pub on_surface: f64,
    /// Samples closer than this (relative) to a pole or cone are redrawn.
    pub exclusion_radius: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        algebraic: 1e-12,
        classical: 1e-14,
        composed: 1e-10,
        derivative: 1e-8,
        finite_difference: 1e-6,
        min_eigenvalue: 1e-8,
        asymmetry_witness: 1e-6,
        on_surface: 1e-8,
        exclusion_radius: 1e-3,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiffConfig {
    /// Step before scaling by `max(1, ‖v‖∞)`.
    pub base_step: f64,
    /// Number of Richardson halvings applied on top of the central stencil.
    pub richardson_levels: usize,
}

impl Default for DiffConfig {
    fn default() -> Self {
        Self {
            base_step: 1e-4,
            richardson_levels: 1,
        }
    }
}

impl DiffConfig {
    fn step_for(&self, scale: f64) -> f64 {
        assert!(self.base_step > 0.0, "base_step must be positive");
        self.base_step * scale.abs().max(1.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootConfig {
    pub tol: f64,
    pub max_iter: usize,
    pub bracket: Option<(f64, f64)>,
}

impl Default for RootConfig {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            max_iter: 100,
            bracket: None,
        }
    }
}

/// Richardson extrapolation of an estimator whose error expands in even
/// powers of the step.
fn richardson<E>(mut estimate: E, h: f64, levels: usize) -> Result<f64>
where
    E: FnMut(f64) -> Result<f64>,
{
    let mut prev: Vec<f64> = vec![estimate(h)?];
    for k in 1..=levels {
        let mut row = Vec::with_capacity(k + 1);
        row.push(estimate(h / f64::powi(2.0, k as i32))?);
        for m in 1..=k {
            let w = f64::powi(4.0, m as i32);
            row.push((w * row[m - 1] - prev[m - 1]) / (w - 1.0));
        }
        prev = row;
    }
    Ok(*prev.last().unwrap())
}

fn eval_at<F: Fn(&[f64]) -> f64>(f: &F, point: &[f64]) -> Result<f64> {
    let v = f(point);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(FinslerError::NonFiniteEvaluation {
            point: point.to_vec(),
        })
    }
}

fn inf_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Central-difference gradient of a scalar field.
pub fn grad_fd<F>(f: F, v: &[f64], cfg: &DiffConfig) -> Result<Vec<f64>>
where
    F: Fn(&[f64]) -> f64,
{
    let h0 = cfg.step_for(inf_norm(v));
    let mut probe = v.to_vec();
    let mut grad = Vec::with_capacity(v.len());
    for i in 0..v.len() {
        let d = richardson(
            |h| {
                probe[i] = v[i] + h;
                let fp = eval_at(&f, &probe)?;
                probe[i] = v[i] - h;
                let fm = eval_at(&f, &probe)?;
                probe[i] = v[i];
                Ok((fp - fm) / (2.0 * h))
            },
            h0,
            cfg.richardson_levels,
        )?;
        grad.push(d);
    }
    Ok(grad)
}

/// Second differences lose about `eps / h²` to rounding, so they run on a
/// step this many times larger than first differences.
const SECOND_ORDER_STEP_FACTOR: f64 = 10.0;

/// Finite-difference Hessian. Each off-diagonal entry is computed once from
/// the four-point mixed stencil and mirrored, so the result is symmetric.
pub fn hessian_fd<F>(f: F, v: &[f64], cfg: &DiffConfig) -> Result<SquareMatrix>
where
    F: Fn(&[f64]) -> f64,
{
    let n = v.len();
    let h0 = SECOND_ORDER_STEP_FACTOR * cfg.step_for(inf_norm(v));
    let f0 = eval_at(&f, v)?;
    let mut probe = v.to_vec();
    let mut m = SquareMatrix::zeros(n);
    for i in 0..n {
        let d = richardson(
            |h| {
                probe[i] = v[i] + h;
                let fp = eval_at(&f, &probe)?;
                probe[i] = v[i] - h;
                let fm = eval_at(&f, &probe)?;
                probe[i] = v[i];
                Ok((fp - 2.0 * f0 + fm) / (h * h))
            },
            h0,
            cfg.richardson_levels,
        )?;
        m.set(i, i, d);
        for k in (i + 1)..n {
            let d = richardson(
                |h| {
                    let mut corner = |si: f64, sk: f64| {
                        probe[i] = v[i] + si * h;
                        probe[k] = v[k] + sk * h;
                        let r = eval_at(&f, &probe);
                        probe[i] = v[i];
                        probe[k] = v[k];
                        r
                    };
                    let fpp = corner(1.0, 1.0)?;
                    let fpm = corner(1.0, -1.0)?;
                    let fmp = corner(-1.0, 1.0)?;
                    let fmm = corner(-1.0, -1.0)?;
                    Ok((fpp - fpm - fmp + fmm) / (4.0 * h * h))
                },
                h0,
                cfg.richardson_levels,
            )?;
            m.set(i, k, d);
            m.set(k, i, d);
        }
    }
    Ok(m)
}

/// First derivative of a scalar function of one variable.
pub fn derivative_fd<F>(f: F, x: f64, cfg: &DiffConfig) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let g = |p: &[f64]| f(p[0]);
    Ok(grad_fd(g, &[x], cfg)?[0])
}

/// Second derivative of a scalar function of one variable.
pub fn second_derivative_fd<F>(f: F, x: f64, cfg: &DiffConfig) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let g = |p: &[f64]| f(p[0]);
    Ok(hessian_fd(g, &[x], cfg)?.get(0, 0))
}

/// Newton iteration on `f(x) = 0`, where the closure returns `(f, f')`.
///
/// With a sign-changing bracket the iteration is safeguarded: any step that
/// leaves the current bracket (or a vanishing derivative) is replaced by a
/// bisection step. A bracket without a sign change is ignored.
pub fn newton_scalar<F>(f: F, seed: f64, cfg: &RootConfig) -> Result<f64>
where
    F: Fn(f64) -> (f64, f64),
{
    assert!(cfg.tol > 0.0 && cfg.max_iter >= 1);
    let mut bracket = cfg.bracket.and_then(|(a, b)| {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let (flo, fhi) = (f(lo).0, f(hi).0);
        (flo.is_finite() && fhi.is_finite() && flo * fhi <= 0.0).then_some((lo, hi, flo))
    });
    if let Some((lo, hi, flo)) = bracket {
        if flo == 0.0 {
            return Ok(lo);
        }
        if f(hi).0 == 0.0 {
            return Ok(hi);
        }
    }

    let mut x = match bracket {
        Some((lo, hi, _)) if !(lo..=hi).contains(&seed) => 0.5 * (lo + hi),
        _ => seed,
    };
    let mut residual = f64::INFINITY;
    for _ in 0..cfg.max_iter {
        let (fx, dfx) = f(x);
        residual = fx.abs();
        if residual <= cfg.tol {
            return Ok(x);
        }
        let mut next = x - fx / dfx;
        if let Some((lo, hi, flo)) = bracket.as_mut() {
            if fx.is_finite() {
                if fx.signum() == flo.signum() {
                    *lo = x;
                    *flo = fx;
                } else {
                    *hi = x;
                }
            }
            if !next.is_finite() || next <= *lo || next >= *hi {
                next = 0.5 * (*lo + *hi);
            }
        }
        if !next.is_finite() {
            break;
        }
        x = next;
    }
    Err(FinslerError::Convergence {
        iterations: cfg.max_iter,
        last: x,
        residual,
    })
}

/// All eigenvalues of a symmetric matrix in ascending order, by cyclic
/// Jacobi rotations.
pub fn eigen_sym(m: &SquareMatrix) -> Result<Vec<f64>> {
    let n = m.dim();
    let scale = m.max_abs().max(1.0);
    let deviation = m.asymmetry();
    if deviation > 1e-12 * scale {
        return Err(FinslerError::Asymmetric { deviation });
    }
    let mut a = m.clone();
    a.symmetrize();

    let off = |a: &SquareMatrix| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                s += a.get(i, j) * a.get(i, j);
            }
        }
        s.sqrt()
    };
    let frob = a.as_slice().iter().map(|x| x * x).sum::<f64>().sqrt();

    for _sweep in 0..64 {
        if off(&a) <= f64::EPSILON * 1e-2 * frob {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let app = a.get(p, p);
                let aqq = a.get(q, q);
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    a.set(k, p, c * akp - s * akq);
                    a.set(k, q, s * akp + c * akq);
                }
                for k in 0..n {
                    let apk = a.get(p, k);
                    let aqk = a.get(q, k);
                    a.set(p, k, c * apk - s * aqk);
                    a.set(q, k, s * apk + c * aqk);
                }
                a.set(p, q, 0.0);
                a.set(q, p, 0.0);
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a.get(i, i)).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

pub fn min_eigen_sym(m: &SquareMatrix) -> Result<f64> {
    Ok(eigen_sym(m)?[0])
}
