use finsleroid_core::numerics::{self, DiffConfig};
use finsleroid_core::{CoVector, EventVector, Result, Sector, SrParams};

use super::{check, max_rel, polar, rel, sr_params, MARGIN, TOL};
use crate::claim::Claim;
use crate::oracle;
use crate::report::Family::Sr;
use crate::runner::{CheckSpec, Ctx, Scope};

pub(super) fn checks() -> Vec<CheckSpec> {
    vec![
        check("sr.params_invariants", Sr, TOL.classical, &[Claim::SrMetric], 1, Scope::Grid, params_invariants),
        check("sr.minkowski_reduction", Sr, TOL.classical, &[Claim::SrMetric], 1000, Scope::Fixed(0.0), minkowski_reduction),
        check("sr.homogeneity", Sr, TOL.algebraic, &[Claim::SrMetric], 200, Scope::Grid, homogeneity),
        check("sr.landmarks", Sr, TOL.algebraic, &[Claim::SrLandmarks, Claim::SrMetric], 1, Scope::Grid, landmarks),
        check("sr.profile_slope_fd", Sr, TOL.finite_difference, &[Claim::SrMetric], 100, Scope::Grid, profile_slope_fd),
        check("sr.profile_convexity", Sr, MARGIN, &[Claim::SrMetric], 100, Scope::Grid, profile_convexity),
        check("sr.mirror", Sr, TOL.algebraic, &[Claim::SrMirror], 500, Scope::Grid, mirror),
        check("sr.gradient_duality", Sr, TOL.finite_difference, &[Claim::SrMirror], 100, Scope::Grid, gradient_duality),
        check("sr.momenta_fd", Sr, TOL.finite_difference, &[Claim::SrMetric], 200, Scope::Grid, momenta_fd),
    ]
}

/// Directions whose cone factors are both at least the exclusion radius.
fn off_cone(ctx: &mut Ctx, p: &SrParams) -> Vec<EventVector> {
    let eps = TOL.exclusion_radius;
    let p = *p;
    ctx.directions_where(move |d| {
        let (a, b) = p.factors(d.t, d.spatial_norm());
        a.abs() > eps && b.abs() > eps
    })
}

/// Points of the forward sector kept 5% of its width away from the cone.
fn forward_points(ctx: &mut Ctx, p: &SrParams) -> Vec<EventVector> {
    let (minus, _) = p.cone_angles();
    let margin = 0.05 * minus;
    (0..ctx.samples)
        .map(|_| {
            let theta = ctx.uniform(0.0, minus - margin);
            let s = ctx.uniform(0.2, 5.0);
            polar(theta, ctx.dim).scaled(s)
        })
        .collect()
}

fn params_invariants(ctx: &mut Ctx) -> Result<()> {
    let p = sr_params(ctx)?;
    let g = p.g;
    let r = [
        p.h - (1.0 + 0.25 * g * g).sqrt(),
        p.g_plus * p.g_minus + 1.0,
        p.g_plus + p.g_minus + g,
        p.g_up_plus - 1.0 / p.g_plus,
        p.g_up_minus - 1.0 / p.g_minus,
        p.g_up_plus + p.g_minus,
        p.g_up_minus + p.g_plus,
        p.big_g_plus - p.big_g_minus - 2.0,
        p.big_g_up_plus - p.g_up_plus / p.h,
        p.big_g_up_minus - p.g_up_minus / p.h,
    ]
    .iter()
    .fold(0.0f64, |m, x| m.max(x.abs()));
    ctx.record(&[g], r);
    Ok(())
}

fn minkowski_reduction(ctx: &mut Ctx) -> Result<()> {
    let p = sr_params(ctx)?;
    let dirs = ctx.directions_where(|d| d.t.abs() > d.spatial_norm() * (1.0 + TOL.exclusion_radius));
    for d in dirs {
        let v = d.scaled(ctx.uniform(0.2, 5.0));
        let c = v.to_vec();
        let want = oracle::minkowski(&c);
        let r = rel(p.metric_f(&v), want).max(rel(p.hamiltonian(&CoVector::from_slice(&c)), want));
        ctx.record(&c, r);
    }
    Ok(())
}

fn homogeneity(ctx: &mut Ctx) -> Result<()> {
    let p = sr_params(ctx)?;
    for d in off_cone(ctx, &p) {
        let v = d.scaled(ctx.uniform(0.2, 5.0));
        let b = ctx.uniform(0.01, 100.0);
        let f = p.metric_f(&v);
        ctx.record(&v.to_vec(), (p.metric_f(&v.scaled(b)) - b * f).abs() / (b * f));
    }
    Ok(())
}

fn landmarks(ctx: &mut Ctx) -> Result<()> {
    let p = sr_params(ctx)?;
    let l = p.landmarks();
    let dim = ctx.dim;
    for (t, rho) in [(0.0, l.c), (1.0, 0.0), (-1.0, 0.0), (l.s, l.z)] {
        let v = EventVector::axial(t, rho, dim);
        ctx.record(&v.to_vec(), p.metric_f(&v) - 1.0);
    }
    for t in [1.0, -1.0] {
        let c = CoVector::axial(t, 0.0, dim);
        ctx.record(&c.to_vec(), p.hamiltonian(&c) - 1.0);
    }
    ctx.record(&[l.c, l.z], l.c * l.z - 1.0);
    ctx.record(&[l.s, l.z], l.s - p.g * l.z);

    let top = EventVector::axial(1.0, 0.0, dim);
    ctx.record(&top.to_vec(), p.profile_derivatives(&top)?.0);
    let apex = EventVector::axial(l.s, l.z, dim);
    ctx.record(&apex.to_vec(), p.inverse_profile_derivatives(&apex)?.0);
    if p.g != 0.0 {
        let eq = EventVector::axial(0.0, l.c, dim);
        let (slope, _) = p.profile_derivatives(&eq)?;
        ctx.record(&eq.to_vec(), (slope + 1.0 / p.g) * p.g);
    }
    Ok(())
}

fn profile_slope_fd(ctx: &mut Ctx) -> Result<()> {
    let p = sr_params(ctx)?;
    let cfg = DiffConfig::default();
    let (minus, _) = p.cone_angles();
    let dim = ctx.dim;
    for _ in 0..ctx.samples {
        let theta = ctx.uniform(0.05 * minus, 0.95 * minus);
        let q = p.hyperboloid_point(&polar(theta, dim))?;
        let point = |th: f64| {
            let u = polar(th, dim);
            let f = p.metric_f(&u);
            (th.cos() / f, th.sin() / f)
        };
        let dt = numerics::derivative_fd(|th| point(th).0, theta, &cfg)?;
        let drho = numerics::derivative_fd(|th| point(th).1, theta, &cfg)?;
        let (slope, _) = p.profile_derivatives(&q)?;
        ctx.record(&q.to_vec(), rel(slope, dt / drho));
    }
    Ok(())
}

fn profile_convexity(ctx: &mut Ctx) -> Result<()> {
    let p = sr_params(ctx)?;
    for u in forward_points(ctx, &p) {
        let q = p.hyperboloid_point(&u)?;
        if p.sector(&q) != Sector::Forward {
            ctx.record(&q.to_vec(), f64::INFINITY);
            continue;
        }
        let (_, second) = p.profile_derivatives(&q)?;
        ctx.record_margin(&q.to_vec(), second, 0.0);
    }
    Ok(())
}

fn mirror(ctx: &mut Ctx) -> Result<()> {
    let p = sr_params(ctx)?;
    let m = p.reflected();
    for d in off_cone(ctx, &m) {
        let v = d.scaled(ctx.uniform(0.2, 5.0));
        let f = m.metric_f(&v);
        let h = p.hamiltonian(&CoVector::new(v.t, v.x.clone()));
        ctx.record(&v.to_vec(), (h - f).abs() / f);
    }
    Ok(())
}

fn half_f2_gradient(p: &SrParams, v: &EventVector) -> Result<Vec<f64>> {
    numerics::grad_fd(
        |q: &[f64]| 0.5 * p.metric_f(&EventVector::from_slice(q)).powi(2),
        &v.to_vec(),
        &DiffConfig::default(),
    )
}

fn gradient_duality(ctx: &mut Ctx) -> Result<()> {
    let p = sr_params(ctx)?;
    for v in forward_points(ctx, &p) {
        let grad = half_f2_gradient(&p, &v)?;
        let f = p.metric_f(&v);
        ctx.record(&v.to_vec(), (p.hamiltonian(&CoVector::from_slice(&grad)) - f).abs() / f);
    }
    Ok(())
}

fn momenta_fd(ctx: &mut Ctx) -> Result<()> {
    let p = sr_params(ctx)?;
    // keep the FD stencil clear of the cone
    let eps = 20.0 * TOL.exclusion_radius;
    let dirs = ctx.directions_where(move |d| {
        let (a, b) = p.factors(d.t, d.spatial_norm());
        a.abs() > eps && b.abs() > eps
    });
    for d in dirs {
        let v = d.scaled(ctx.uniform(0.2, 5.0));
        let m = p.covariant_momenta(&v)?;
        let fd = half_f2_gradient(&p, &v)?;
        ctx.record(&v.to_vec(), max_rel(&m.to_vec(), &fd));
    }
    Ok(())
}
