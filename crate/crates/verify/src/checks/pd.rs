use finsleroid_core::numerics::{self, DiffConfig};
use finsleroid_core::pd::Branch;
use finsleroid_core::{EventVector, Result};

use super::{check, max_rel, pd_params, polar, rel, rotate_spatial, scaled_points, MARGIN, TOL};
use crate::claim::Claim;
use crate::oracle;
use crate::report::Family::Pd;
use crate::runner::{CheckSpec, Ctx, Scope};

pub(super) fn checks() -> Vec<CheckSpec> {
    vec![
        check("pd.euclidean_reduction", Pd, TOL.classical, &[Claim::KMetric], 1000, Scope::Fixed(0.0), euclidean_reduction),
        check("pd.homogeneity", Pd, TOL.algebraic, &[Claim::KMetric], 200, Scope::Grid, homogeneity),
        check("pd.gt_parity", Pd, TOL.algebraic, &[Claim::Parities], 200, Scope::Grid, gt_parity),
        check("pd.p_parity", Pd, TOL.algebraic, &[Claim::Parities], 200, Scope::Grid, p_parity),
        check("pd.asymmetry_witness", Pd, MARGIN, &[Claim::Parities], 1, Scope::NonZero, asymmetry_witness),
        check("pd.j_unified", Pd, TOL.algebraic, &[Claim::KMetric], 200, Scope::Grid, j_unified),
        check("pd.generating_function", Pd, TOL.algebraic, &[Claim::GenV], 200, Scope::Grid, generating_function),
        check("pd.gen_v_derivatives", Pd, TOL.derivative, &[Claim::GenV], 100, Scope::Grid, gen_v_derivatives),
        check("pd.momenta_fd", Pd, TOL.finite_difference, &[Claim::Momenta], 200, Scope::Grid, momenta_fd),
        check("pd.euler_identity", Pd, TOL.composed, &[Claim::Momenta], 200, Scope::Grid, euler_identity),
        check("pd.metric_positive", Pd, MARGIN, &[Claim::Convexity], 64, Scope::Grid, metric_positive),
        check("pd.landmarks", Pd, TOL.algebraic, &[Claim::AxisIntercepts, Claim::Equator, Claim::Ring], 50, Scope::Grid, landmarks),
        check("pd.ring_is_widest", Pd, TOL.derivative, &[Claim::Ring], 1, Scope::Grid, ring_is_widest),
        check("pd.profile_slope_fd", Pd, TOL.finite_difference, &[Claim::Profile], 100, Scope::Grid, profile_slope_fd),
        check("pd.profile_concavity", Pd, MARGIN, &[Claim::Profile, Claim::Convexity], 100, Scope::Grid, profile_concavity),
        check("pd.equator_slope", Pd, TOL.algebraic, &[Claim::Profile], 1, Scope::NonZero, equator_slope),
        check("pd.newton_branch", Pd, TOL.composed, &[Claim::Profile], 50, Scope::Grid, newton_branch),
    ]
}

fn euclidean_reduction(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    for v in scaled_points(ctx) {
        let c = v.to_vec();
        ctx.record(&c, rel(p.metric_k(&v), oracle::euclidean(&c)));
    }
    Ok(())
}

fn homogeneity(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    for v in scaled_points(ctx) {
        let b = ctx.uniform(0.01, 100.0);
        let k = p.metric_k(&v);
        ctx.record(&v.to_vec(), (p.metric_k(&v.scaled(b)) - b * k).abs() / (b * k));
    }
    Ok(())
}

fn gt_parity(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let m = p.reflected();
    for v in scaled_points(ctx) {
        let flipped = EventVector::new(-v.t, v.x.clone());
        let k = p.metric_k(&v);
        ctx.record(&v.to_vec(), (m.metric_k(&flipped) - k).abs() / k);
    }
    Ok(())
}

fn p_parity(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let n = ctx.dim - 1;
    for v in scaled_points(ctx) {
        let k = p.metric_k(&v);
        let reflected = EventVector::new(v.t, v.x.iter().map(|x| -x).collect());
        let mut worst = (p.metric_k(&reflected) - k).abs();
        if n >= 2 {
            let a = (ctx.uniform(0.0, n as f64) as usize).min(n - 1);
            let b = (a + 1) % n;
            let angle = ctx.uniform(0.0, std::f64::consts::TAU);
            worst = worst.max((p.metric_k(&rotate_spatial(&v, a, b, angle)) - k).abs());
        }
        ctx.record(&v.to_vec(), worst / k);
    }
    Ok(())
}

fn asymmetry_witness(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let up = EventVector::axial(1.0, 1.0, ctx.dim);
    let down = EventVector::axial(-1.0, 1.0, ctx.dim);
    let gap = (p.metric_k(&up) - p.metric_k(&down)).abs();
    ctx.record_margin(&up.to_vec(), gap, TOL.asymmetry_witness);
    Ok(())
}

fn j_unified(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    for v in scaled_points(ctx) {
        let j = p.j_factor(&v)?;
        let want = oracle::j_piecewise(&p, v.t, v.spatial_norm());
        ctx.record(&v.to_vec(), (j - want).abs() / want);
    }
    Ok(())
}

fn generating_function(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    for v in scaled_points(ctx) {
        if v.t.abs() < TOL.exclusion_radius * v.norm() {
            continue;
        }
        let k = p.metric_k(&v);
        let w = v.spatial_norm() / v.t;
        ctx.record(&v.to_vec(), (v.t.abs() * p.gen_v(w) - k).abs() / k);
    }
    Ok(())
}

/// Samples `w` with `0.05 <= |w| <= 5`; `V` jumps between branches at `w = 0`.
fn sample_w(ctx: &mut Ctx) -> f64 {
    let mag = ctx.uniform(0.05, 5.0);
    if ctx.uniform(0.0, 1.0) < 0.5 {
        -mag
    } else {
        mag
    }
}

fn gen_v_derivatives(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let cfg = DiffConfig::default();
    for _ in 0..ctx.samples {
        let w = sample_w(ctx);
        let v1 = numerics::derivative_fd(|x| p.gen_v(x), w, &cfg)?;
        let v2 = numerics::second_derivative_fd(|x| p.gen_v(x), w, &cfg)?;
        let j1 = numerics::derivative_fd(|x| p.j_of_w(x), w, &cfg)?;
        let r = rel(p.gen_v_prime(w), v1)
            .max(rel(p.gen_v_second(w), v2))
            .max(rel(p.j_prime(w), j1));
        ctx.record(&[w], r);
    }
    Ok(())
}

fn momenta_fd(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let cfg = DiffConfig::default();
    for v in scaled_points(ctx) {
        let m = p.covariant_momenta(&v)?;
        let fd = numerics::grad_fd(
            |q: &[f64]| 0.5 * p.metric_k(&EventVector::from_slice(q)).powi(2),
            &v.to_vec(),
            &cfg,
        )?;
        ctx.record(&v.to_vec(), max_rel(&m.to_vec(), &fd));
    }
    Ok(())
}

fn euler_identity(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    for v in scaled_points(ctx) {
        let m = p.covariant_momenta(&v)?;
        let k2 = p.metric_k(&v).powi(2);
        ctx.record(&v.to_vec(), (m.dot(&v.to_vec()) - k2).abs() / k2);
    }
    Ok(())
}

fn metric_positive(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    for d in ctx.directions() {
        let q = p.indicatrix_point(&d)?;
        let g = p.pullback_metric(&q)?;
        ctx.record_margin(&q.to_vec(), numerics::min_eigen_sym(&g)?, TOL.min_eigenvalue);
    }
    Ok(())
}

fn landmarks(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let l = p.landmarks();
    let dim = ctx.dim;
    for (t, rho) in [(0.0, 1.0), (l.t1, 0.0), (l.t2, 0.0), (l.f, l.k)] {
        let v = EventVector::axial(t, rho, dim);
        ctx.record(&v.to_vec(), p.metric_k(&v) - 1.0);
    }
    // the equator and the widest ring in arbitrary spatial directions
    for d in ctx.directions() {
        let n = d.spatial_norm();
        if n < 0.1 {
            continue;
        }
        let u: Vec<f64> = d.x.iter().map(|x| x / n).collect();
        for (t, rho) in [(0.0, 1.0), (l.f, l.k)] {
            let v = EventVector::new(t, u.iter().map(|x| rho * x).collect());
            ctx.record(&v.to_vec(), p.metric_k(&v) - 1.0);
        }
    }
    for t in [l.t1, l.t2] {
        let v = EventVector::axial(t, 0.0, dim);
        ctx.record(&v.to_vec(), p.profile_derivatives(&v)?.0);
    }
    let apex = EventVector::axial(l.f, l.k, dim);
    ctx.record(&apex.to_vec(), p.inverse_profile_derivatives(&apex)?.0);
    ctx.record(&[l.f, l.k], rel(l.f, -p.g() * l.k));
    Ok(())
}

/// `|R|` along the indicatrix, as a function of the polar angle.
fn indicatrix_rho(p: &finsleroid_core::PdParams, theta: f64) -> f64 {
    theta.sin() / p.metric_k(&polar(theta, p.dim()))
}

fn ring_is_widest(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let l = p.landmarks();
    let theta = l.k.atan2(l.f);
    let cfg = DiffConfig::default();
    let slope = numerics::derivative_fd(|th| indicatrix_rho(&p, th), theta, &cfg)?;
    // k runs to thousands near |g| = 2, so both residuals are relative to it
    ctx.record(&[l.f, l.k], slope.abs() / l.k);
    // and nothing on a fine sweep of the profile is wider
    let widest = (1..2000)
        .map(|i| indicatrix_rho(&p, i as f64 * std::f64::consts::PI / 2000.0))
        .fold(0.0, f64::max);
    ctx.record(&[l.f, l.k], (widest - l.k).max(0.0) / l.k);
    Ok(())
}

fn profile_slope_fd(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let cfg = DiffConfig::default();
    let pi = std::f64::consts::PI;
    for _ in 0..ctx.samples {
        let theta = ctx.uniform(0.05, pi - 0.05);
        let q = p.indicatrix_point(&polar(theta, ctx.dim))?;
        let (t, rho) = (q.t, q.spatial_norm());
        if (t + p.g() * rho).abs() < 0.05 {
            continue;
        }
        let dt = numerics::derivative_fd(|th| th.cos() / p.metric_k(&polar(th, p.dim())), theta, &cfg)?;
        let drho = numerics::derivative_fd(|th| indicatrix_rho(&p, th), theta, &cfg)?;
        let (slope, _) = p.profile_derivatives(&q)?;
        ctx.record(&[t, rho], rel(slope, dt / drho));
    }
    Ok(())
}

fn profile_concavity(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let pi = std::f64::consts::PI;
    let mut taken = 0;
    while taken < ctx.samples {
        let theta = ctx.uniform(0.0, pi);
        let q = p.indicatrix_point(&polar(theta, ctx.dim))?;
        let (t, rho) = (q.t, q.spatial_norm());
        // concavity of T(|R|) is claimed on the sheet T + g|R| > 0
        if t + p.g() * rho <= TOL.exclusion_radius {
            continue;
        }
        let (_, second) = p.profile_derivatives(&q)?;
        ctx.record_margin(&[t, rho], -second, 0.0);
        taken += 1;
    }
    Ok(())
}

fn equator_slope(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let v = EventVector::axial(0.0, 1.0, ctx.dim);
    let (slope, _) = p.profile_derivatives(&v)?;
    ctx.record(&v.to_vec(), (slope + 1.0 / p.g()) * p.g());
    Ok(())
}

fn newton_branch(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let k = p.landmarks().k;
    for _ in 0..ctx.samples {
        let rho = ctx.uniform(0.0, 0.95 * k);
        for branch in [Branch::Upper, Branch::Lower] {
            let t = p.solve_profile_t(rho, branch)?;
            let v = EventVector::axial(t, rho, p.dim());
            // Radially rescaling the solution's direction must return it.
            let back = p.indicatrix_point(&v.scaled(3.0))?;
            let r = (p.metric_k(&v) - 1.0).abs().max(back.max_abs_diff(&v) / v.norm().max(1.0));
            ctx.record(&v.to_vec(), r);
        }
    }
    Ok(())
}
