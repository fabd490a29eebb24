use finsleroid_core::numerics::{self, DiffConfig};
use finsleroid_core::{EventVector, MetricBackend, Result, SphereImage, SquareMatrix};

use super::{check, max_rel, pd_params, rel, scaled_points, TOL};
use crate::claim::Claim;
use crate::report::Family::Map;
use crate::runner::{CheckSpec, Ctx, Scope};

pub(super) fn checks() -> Vec<CheckSpec> {
    vec![
        check("map.sphere_image", Map, TOL.composed, &[Claim::SphereImage], 200, Scope::Grid, sphere_image),
        check("map.roundtrip", Map, TOL.composed, &[Claim::SphereImage], 200, Scope::Grid, roundtrip),
        check("map.homogeneity", Map, TOL.algebraic, &[Claim::SphereImage], 200, Scope::Grid, homogeneity),
        check("map.w_recovery", Map, TOL.composed, &[Claim::SphereImage], 200, Scope::Grid, w_recovery),
        check("map.euler_contraction", Map, TOL.composed, &[Claim::EulerContraction], 200, Scope::Grid, euler_contraction),
        check("map.jacobian_fd", Map, TOL.finite_difference, &[Claim::Jacobian], 100, Scope::Grid, jacobian_fd),
        check("map.jacobian_det", Map, TOL.composed, &[Claim::Jacobian], 200, Scope::Grid, jacobian_det),
        check("map.auxiliary_relations", Map, TOL.composed, &[Claim::Jacobian], 200, Scope::Grid, auxiliary_relations),
        check("map.quasi_euclidean", Map, TOL.algebraic, &[Claim::QuasiEuclidean], 200, Scope::Grid, quasi_euclidean),
        check("map.pullback_vs_hessian", Map, TOL.finite_difference, &[Claim::Pullback, Claim::Convexity], 100, Scope::Grid, pullback_vs_hessian),
        check("map.pullback_det", Map, TOL.composed, &[Claim::Pullback], 200, Scope::Grid, pullback_det),
    ]
}

fn sphere_image(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    for v in scaled_points(ctx) {
        let q = p.indicatrix_point(&v)?;
        let on_sphere = rel(p.tau(&q)?.norm(), p.r());
        let scaled = (p.tau(&v)?.norm() - p.r() * p.metric_k(&v)).abs() / (p.r() * p.metric_k(&v));
        ctx.record(&q.to_vec(), on_sphere.max(scaled));
    }
    Ok(())
}

fn roundtrip(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    for v in scaled_points(ctx) {
        let back = p.lambda_inv(&p.tau(&v)?)?;
        // image-side roundtrip starts from an arbitrary image point
        let s = SphereImage::from_slice(&v.to_vec());
        let again = p.tau(&p.lambda_inv(&s)?)?;
        let r = back.max_abs_diff(&v).max(again.max_abs_diff(&s)) / v.norm().max(1.0);
        ctx.record(&v.to_vec(), r);
    }
    Ok(())
}

fn homogeneity(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    for v in scaled_points(ctx) {
        let b = ctx.uniform(0.01, 100.0);
        let s = p.tau(&v)?;
        let r1 = p.tau(&v.scaled(b))?.max_abs_diff(&s.scaled(b)) / (b * s.norm());
        let l = p.lambda_inv(&s)?;
        let r2 = p.lambda_inv(&s.scaled(b))?.max_abs_diff(&l.scaled(b)) / (b * l.norm());
        ctx.record(&v.to_vec(), r1.max(r2));
    }
    Ok(())
}

fn w_recovery(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    for v in scaled_points(ctx) {
        if v.t.abs() < TOL.exclusion_radius * v.norm() {
            continue;
        }
        let s = p.tau(&v)?;
        let w = v.spatial_norm() / v.t;
        ctx.record(&v.to_vec(), rel(s.spatial_norm() / p.i_tilde(&s), w));
    }
    Ok(())
}

fn euler_contraction(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    for v in scaled_points(ctx) {
        let s = p.tau(&v)?;
        let forward = p.tau_jacobian(&v)?.mul_vec(&v.to_vec());
        let inverse = p.lambda_jacobian(&s)?.mul_vec(&s.to_vec());
        let r = max_rel(&forward, &s.to_vec()).max(max_rel(&inverse, &v.to_vec()));
        ctx.record(&v.to_vec(), r);
    }
    Ok(())
}

fn fd_jacobian(p: &finsleroid_core::PdParams, v: &EventVector) -> Result<SquareMatrix> {
    let n = v.dim();
    let mut m = SquareMatrix::zeros(n);
    for q in 0..n {
        let comp = |y: &[f64]| match p.tau(&EventVector::from_slice(y)) {
            Ok(s) => s.component(q),
            Err(_) => f64::NAN,
        };
        for (col, d) in numerics::grad_fd(comp, &v.to_vec(), &DiffConfig::default())?
            .into_iter()
            .enumerate()
        {
            m.set(q, col, d);
        }
    }
    Ok(m)
}

fn jacobian_fd(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    // τ is only C¹ across the T axis, where central differences lose an order
    let dirs = ctx.directions_where(|d| d.spatial_norm() > 1e-2);
    for d in dirs {
        let v = d.scaled(ctx.uniform(0.2, 5.0));
        let exact = p.tau_jacobian(&v)?;
        let fd = fd_jacobian(&p, &v)?;
        ctx.record(&v.to_vec(), exact.max_abs_diff(&fd) / exact.max_abs().max(1.0));
    }
    Ok(())
}

fn jacobian_det(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    for v in scaled_points(ctx) {
        let det = p.tau_jacobian(&v)?.determinant();
        let want = p.r() * p.j_factor(&v)?.powi(ctx.dim as i32);
        let r = if det > 0.0 {
            (det - want).abs() / want
        } else {
            f64::INFINITY
        };
        ctx.record(&v.to_vec(), r);
    }
    Ok(())
}

fn auxiliary_relations(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let g = p.g();
    let eps = TOL.exclusion_radius;
    let dirs = ctx.directions_where(|d| d.t.abs() > eps && d.spatial_norm() > eps);
    let n = ctx.dim - 1;
    for d in dirs {
        let v = d.scaled(ctx.uniform(0.2, 5.0));
        let jac = p.tau_jacobian(&v)?;
        let j = p.j_factor(&v)?;
        let wv: Vec<f64> = v.x.iter().map(|x| x / v.t).collect();
        let w = v.spatial_norm() / v.t;
        let q = p.gen_q(w);
        let e = 1.0 + 0.5 * g * w;
        let mut worst: f64 = 0.0;
        for a in 0..n {
            let lhs: f64 = (0..n).map(|b| jac.get(a + 1, b + 1) * wv[b]).sum();
            let rhs = j * wv[a] * (e + w * w) / q;
            worst = worst.max(rel(lhs, rhs));
            for b in 0..n {
                let lhs: f64 = (0..n).map(|c| jac.get(a + 1, c + 1) * jac.get(b + 1, c + 1)).sum();
                let delta = if a == b { 1.0 } else { 0.0 };
                let outer = wv[a] * wv[b];
                let rhs = j * j * (delta - g * outer / (w * q) + 0.25 * g * g * outer / (q * q));
                worst = worst.max(rel(lhs, rhs));
            }
        }
        ctx.record(&v.to_vec(), worst);
    }
    Ok(())
}

fn quasi_euclidean(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let (h2, r2) = (p.h() * p.h(), p.r() * p.r());
    let id = SquareMatrix::identity(ctx.dim);
    for v in scaled_points(ctx) {
        let n = p.quasi_euclidean(&p.tau(&v)?)?;
        let l = &n.l;
        let lower_l = n.lower.mul_vec(l);
        let upper_l = n.upper.mul_vec(l);
        let mut r = n.lower.mul(&n.upper).max_abs_diff(&id);
        r = r.max((n.lower.determinant() - h2).abs());
        r = r.max((n.lower.bilinear(l, l) - h2).abs());
        r = r.max((n.upper.bilinear(l, l) - r2).abs() / r2);
        for i in 0..ctx.dim {
            r = r.max((lower_l[i] - h2 * l[i]).abs());
            r = r.max((upper_l[i] - r2 * l[i]).abs() / r2);
        }
        ctx.record(&v.to_vec(), r);
    }
    Ok(())
}

/// Spatial fraction of a direction below which the FD Hessian is not trusted.
pub const AXIS_CLEARANCE: f64 = 2e-2;

fn pullback_vs_hessian(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    // ½K² is C² but not C³ across the T axis: ln K² carries a |x|³ term, so a
    // second difference straddling the axis is only first-order accurate there.
    // Off the axis compare with the FD Hessian; on it, check the pullback is
    // the limit of its off-axis values.
    for d in ctx.directions() {
        let a = p.metric_tensor(&d, MetricBackend::Pullback)?;
        let r = if d.spatial_norm() > AXIS_CLEARANCE * d.norm() {
            let b = p.metric_tensor(&d, MetricBackend::Hessian)?;
            a.max_abs_diff(&b) / a.max_abs().max(1.0)
        } else {
            let mut near = d.clone();
            near.x[0] += 1e-9 * d.norm();
            let c = p.metric_tensor(&near, MetricBackend::Pullback)?;
            a.max_abs_diff(&c) / a.max_abs().max(1.0)
        };
        ctx.record(&d.to_vec(), r);
    }
    Ok(())
}

fn pullback_det(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    for v in scaled_points(ctx) {
        let det = p.pullback_metric(&v)?.determinant();
        let want = p.h().powi(2) * p.tau_jacobian_det(&v)?.powi(2);
        ctx.record(&v.to_vec(), (det - want).abs() / want);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fd_jacobian_is_identity_at_zero_g() {
        let p = finsleroid_core::PdParams::new(0.0, 3).unwrap();
        let m = fd_jacobian(&p, &EventVector::new(0.5, vec![1.0, -1.0])).unwrap();
        assert!(m.max_abs_diff(&SquareMatrix::identity(3)) < 1e-10);
    }
}
