use finsleroid_core::numerics::Tolerances;
use finsleroid_core::{EventVector, PdParams, Result, SrParams};

use crate::claim::Claim;
use crate::report::Family;
use crate::runner::{CheckSpec, Ctx, Scope};

mod dual;
mod map;
mod pd;
mod sr;

const TOL: Tolerances = Tolerances::DEFAULT;

/// Tolerance used by margin checks, whose residual is a shortfall that is
/// exactly zero when the check holds.
const MARGIN: f64 = f64::MIN_POSITIVE;

pub(crate) fn check(
    name: &'static str,
    family: Family,
    tolerance: f64,
    claims: &'static [Claim],
    samples: usize,
    scope: Scope,
    run: fn(&mut Ctx) -> Result<()>,
) -> CheckSpec {
    CheckSpec {
        name,
        family,
        tolerance,
        claims,
        samples,
        scope,
        run,
    }
}

/// Every registered check.
pub fn registry() -> Vec<CheckSpec> {
    let mut all = pd::checks();
    all.extend(map::checks());
    all.extend(dual::checks());
    all.extend(sr::checks());
    all
}

fn pd_params(ctx: &Ctx) -> Result<PdParams> {
    PdParams::new(ctx.g, ctx.dim)
}

fn sr_params(ctx: &Ctx) -> Result<SrParams> {
    SrParams::new(ctx.g, ctx.dim)
}

/// `|a - b| / max(1, |b|)`.
fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

fn max_rel(a: &[f64], b: &[f64]) -> f64 {
    let scale = b.iter().fold(1.0f64, |m, x| m.max(x.abs()));
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
        / scale
}

/// Directions scaled by random factors in `[0.2, 5)`.
fn scaled_points(ctx: &mut Ctx) -> Vec<EventVector> {
    let dirs = ctx.directions();
    dirs.into_iter()
        .map(|d| {
            let s = ctx.uniform(0.2, 5.0);
            d.scaled(s)
        })
        .collect()
}

/// Point of the `(T, |R|)` half-plane at polar angle `theta` from `+T`.
fn polar(theta: f64, dim: usize) -> EventVector {
    EventVector::axial(theta.cos(), theta.sin(), dim)
}

/// Applies a rotation by `angle` in the plane of spatial axes `a` and `b`.
fn rotate_spatial(v: &EventVector, a: usize, b: usize, angle: f64) -> EventVector {
    let mut x = v.x.clone();
    let (c, s) = (angle.cos(), angle.sin());
    x[a] = c * v.x[a] - s * v.x[b];
    x[b] = s * v.x[a] + c * v.x[b];
    EventVector::new(v.t, x)
}
