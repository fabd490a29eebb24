use finsleroid_core::numerics::{self, DiffConfig};
use finsleroid_core::{CoVector, EventVector, PdParams, Result};

use super::{check, max_rel, pd_params, rel, scaled_points, MARGIN, TOL};
use crate::claim::Claim;
use crate::oracle;
use crate::report::Family::Dual;
use crate::runner::{CheckSpec, Ctx, Scope};

pub(super) fn checks() -> Vec<CheckSpec> {
    vec![
        check("dual.mirror", Dual, TOL.algebraic, &[Claim::Mirror], 500, Scope::Grid, mirror),
        check("dual.b_hat_mirror", Dual, TOL.algebraic, &[Claim::Mirror], 200, Scope::Grid, b_hat_mirror),
        check("dual.hat_j_unified", Dual, TOL.algebraic, &[Claim::Mirror], 200, Scope::Grid, hat_j_unified),
        check("dual.hat_parities", Dual, TOL.algebraic, &[Claim::HatParities], 200, Scope::Grid, hat_parities),
        check("dual.gen_w_derivatives", Dual, TOL.derivative, &[Claim::GenW], 100, Scope::Grid, gen_w_derivatives),
        check("dual.co_landmarks", Dual, TOL.algebraic, &[Claim::CoLandmarks], 50, Scope::Grid, co_landmarks),
        check("dual.co_profile_concavity", Dual, MARGIN, &[Claim::CoLandmarks, Claim::CoConvexity], 100, Scope::Grid, co_profile_concavity),
        check("dual.co_convexity", Dual, MARGIN, &[Claim::CoConvexity], 64, Scope::Grid, co_convexity),
        check("dual.legendre_scaled", Dual, TOL.derivative, &[Claim::Legendre], 200, Scope::Grid, legendre_scaled),
        check("dual.momenta_roundtrip", Dual, TOL.derivative, &[Claim::Legendre], 200, Scope::Grid, momenta_roundtrip),
        check("dual.j_product", Dual, TOL.algebraic, &[Claim::JProduct], 200, Scope::Grid, j_product),
        check("dual.q_relation", Dual, TOL.algebraic, &[Claim::JProduct], 200, Scope::Grid, q_relation),
        check("dual.vw_product", Dual, TOL.algebraic, &[Claim::JProduct], 200, Scope::Grid, vw_product),
        check("dual.wp_maps", Dual, TOL.algebraic, &[Claim::WpMap], 200, Scope::Grid, wp_maps),
        check("dual.t_relations", Dual, TOL.algebraic, &[Claim::WpMap], 200, Scope::Grid, t_relations),
    ]
}

fn co(v: &EventVector) -> CoVector {
    CoVector::new(v.t, v.x.clone())
}

fn mirror(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let m = p.reflected();
    for v in scaled_points(ctx) {
        let k = m.metric_k(&v);
        ctx.record(&v.to_vec(), (p.hamiltonian(&co(&v)) - k).abs() / k);
    }
    Ok(())
}

fn b_hat_mirror(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let m = p.reflected();
    for v in scaled_points(ctx) {
        let b = m.b_form(&v);
        ctx.record(&v.to_vec(), (p.b_hat(&co(&v)) - b).abs() / b);
    }
    Ok(())
}

fn hat_j_unified(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    for v in scaled_points(ctx) {
        let c = co(&v);
        let want = oracle::hat_j_piecewise(&p, c.t, c.spatial_norm());
        ctx.record(&v.to_vec(), (p.hat_j(&c)? - want).abs() / want);
    }
    Ok(())
}

fn hat_parities(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let m = p.reflected();
    for v in scaled_points(ctx) {
        let c = co(&v);
        let h = p.hamiltonian(&c);
        let t_flip = CoVector::new(-c.t, c.xi.clone());
        let x_flip = CoVector::new(c.t, c.xi.iter().map(|x| -x).collect());
        let r = (m.hamiltonian(&t_flip) - h).abs().max((p.hamiltonian(&x_flip) - h).abs());
        ctx.record(&v.to_vec(), r / h);
    }
    Ok(())
}

fn gen_w_derivatives(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let cfg = DiffConfig::default();
    for _ in 0..ctx.samples {
        // W switches branch at p = 0
        let mag = ctx.uniform(0.05, 5.0);
        let x = if ctx.uniform(0.0, 1.0) < 0.5 { -mag } else { mag };
        let w1 = numerics::derivative_fd(|y| p.gen_w(y), x, &cfg)?;
        let w2 = numerics::second_derivative_fd(|y| p.gen_w(y), x, &cfg)?;
        let j1 = numerics::derivative_fd(|y| p.hat_j_of_p(y), x, &cfg)?;
        let r = rel(p.gen_w_prime(x), w1)
            .max(rel(p.gen_w_second(x), w2))
            .max(rel(p.hat_j_prime(x), j1));
        ctx.record(&[x], r);
    }
    Ok(())
}

fn co_landmarks(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let c = p.co_landmarks();
    let dim = ctx.dim;
    for (t, rho) in [(0.0, 1.0), (c.t1_co, 0.0), (c.t2_co, 0.0), (c.f_hat, c.k_hat)] {
        let v = CoVector::axial(t, rho, dim);
        ctx.record(&v.to_vec(), p.hamiltonian(&v) - 1.0);
    }
    for t in [c.t1_co, c.t2_co] {
        let v = CoVector::axial(t, 0.0, dim);
        ctx.record(&v.to_vec(), p.co_profile_derivatives(&v)?.0);
    }
    ctx.record(&[c.f_hat], c.f_hat - p.reflected().landmarks().f);
    let l = p.landmarks();
    ctx.record(&[c.t1_co, c.t2_co], (c.t1_co + l.t1).abs().max((c.t2_co + l.t2).abs()));
    // figuratrix ring in arbitrary spatial directions
    for d in ctx.directions() {
        let n = d.spatial_norm();
        if n < 0.1 {
            continue;
        }
        let v = CoVector::new(c.f_hat, d.x.iter().map(|x| c.k_hat * x / n).collect());
        ctx.record(&v.to_vec(), p.hamiltonian(&v) - 1.0);
    }
    Ok(())
}

fn co_profile_concavity(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let pi = std::f64::consts::PI;
    let mut taken = 0;
    while taken < ctx.samples {
        let theta = ctx.uniform(0.0, pi);
        let u = CoVector::axial(theta.cos(), theta.sin(), ctx.dim);
        let c = u.scaled(1.0 / p.hamiltonian(&u));
        let (t, rho) = (c.t, c.spatial_norm());
        if t - p.g() * rho <= TOL.exclusion_radius {
            continue;
        }
        let (_, second) = p.co_profile_derivatives(&c)?;
        ctx.record_margin(&[t, rho], -second, 0.0);
        taken += 1;
    }
    Ok(())
}

fn co_convexity(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let cfg = DiffConfig::default();
    for d in ctx.directions() {
        let c = co(&d).scaled(1.0 / p.hamiltonian(&co(&d)));
        let half_sq = |q: &[f64]| 0.5 * p.hamiltonian(&CoVector::from_slice(q)).powi(2);
        let hess = numerics::hessian_fd(half_sq, &c.to_vec(), &cfg)?;
        ctx.record_margin(&c.to_vec(), numerics::min_eigen_sym(&hess)?, TOL.min_eigenvalue);
    }
    Ok(())
}

fn legendre_scaled(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let k = p.legendre_scale();
    for d in ctx.directions() {
        let v = p.indicatrix_point(&d)?;
        let m = p.covariant_momenta(&v)?;
        let r = (k * p.hamiltonian(&m) - 1.0).abs().max((p.dual_norm(&m) - 1.0).abs());
        ctx.record(&v.to_vec(), r);
    }
    Ok(())
}

fn momenta_roundtrip(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    for v in scaled_points(ctx) {
        let back = p.contravariant_from_momenta(&p.covariant_momenta(&v)?)?;
        ctx.record(&v.to_vec(), max_rel(&back.to_vec(), &v.to_vec()));
    }
    Ok(())
}

/// `w = |R|/T` for sampled points away from `T = 0` and the pole `1 + gw = 0`.
fn sample_ws(ctx: &mut Ctx, p: &PdParams) -> Vec<f64> {
    let eps = TOL.exclusion_radius;
    let g = p.g();
    let dirs = ctx.directions_where(|d| {
        let rho = d.spatial_norm();
        d.t.abs() > eps && (d.t + g * rho).abs() > eps
    });
    dirs.iter().map(|d| d.spatial_norm() / d.t).collect()
}

fn j_product(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let k = p.legendre_scale();
    for w in sample_ws(ctx, &p) {
        let pv = p.w_to_p(w)?;
        ctx.record(&[w], p.hat_j_of_p(pv) * p.j_of_w(w) * k - 1.0);
    }
    Ok(())
}

fn q_relation(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    for w in sample_ws(ctx, &p) {
        let pv = p.w_to_p(w)?;
        let q = p.gen_q(w);
        ctx.record(&[w], (q - p.gen_q_hat(pv) / (1.0 - p.g() * pv).powi(2)).abs() / q);
    }
    Ok(())
}

fn vw_product(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let k = p.legendre_scale();
    for w in sample_ws(ctx, &p) {
        let pv = p.w_to_p(w)?;
        let lhs = (p.gen_v(w) * p.gen_w(pv) * k).powi(2);
        let rhs = p.gen_q(w) * p.gen_q_hat(pv);
        ctx.record(&[w], (lhs - rhs).abs() / rhs);
    }
    Ok(())
}

fn wp_maps(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let g = p.g();
    for w in sample_ws(ctx, &p) {
        let pv = p.w_to_p(w)?;
        let back = p.p_to_w(pv)?;
        let r = rel(back, w).max(((1.0 + g * w) * (1.0 - g * pv) - 1.0).abs());
        ctx.record(&[w], r);
    }
    Ok(())
}

fn t_relations(ctx: &mut Ctx) -> Result<()> {
    let p = pd_params(ctx)?;
    let g = p.g();
    let eps = TOL.exclusion_radius;
    let dirs = ctx.directions_where(|d| d.t.abs() > eps && (d.t + g * d.spatial_norm()).abs() > eps);
    for d in dirs {
        let v = d.scaled(ctx.uniform(0.2, 5.0));
        let m = p.covariant_momenta(&v)?;
        let k2 = p.metric_k(&v).powi(2);
        let w = v.spatial_norm() / v.t;
        let pv = m.spatial_norm() / m.t;
        let t_hat = (1.0 + g * w) * k2 / (p.gen_q(w) * v.t);
        let t = (1.0 - g * pv) * k2 / (p.gen_q_hat(pv) * m.t);
        ctx.record(&v.to_vec(), rel(t_hat, m.t).max(rel(t, v.t)));
        // the momentum ratio is the image of w under the w ↔ p map
        ctx.record(&v.to_vec(), rel(pv, p.w_to_p(w)?));
    }
    Ok(())
}
