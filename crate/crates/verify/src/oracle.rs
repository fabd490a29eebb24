//! Reference formulas written independently of the core crate.

use std::f64::consts::FRAC_PI_2;

use finsleroid_core::PdParams;

/// `j` from its three-case definition.
pub fn j_piecewise(p: &PdParams, t: f64, rho: f64) -> f64 {
    let (g, h, big_g) = (p.g(), p.h(), p.G());
    if t == 0.0 {
        return 1.0;
    }
    let a = ((2.0 * rho + g * t) / (2.0 * h * t)).atan();
    if t > 0.0 {
        (0.5 * big_g * (FRAC_PI_2 - a)).exp()
    } else {
        (-0.5 * big_g * (FRAC_PI_2 + a)).exp()
    }
}

/// `ĵ` from its three-case definition.
pub fn hat_j_piecewise(p: &PdParams, t: f64, rho: f64) -> f64 {
    let (g, h, big_g) = (p.g(), p.h(), p.G());
    if t == 0.0 {
        return 1.0;
    }
    let a = ((2.0 * rho - g * t) / (2.0 * h * t)).atan();
    if t > 0.0 {
        (0.5 * big_g * (-FRAC_PI_2 + a)).exp()
    } else {
        (0.5 * big_g * (FRAC_PI_2 + a)).exp()
    }
}

pub fn euclidean(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// `sqrt|T² - |R|²|`.
pub fn minkowski(v: &[f64]) -> f64 {
    let rho2: f64 = v[1..].iter().map(|x| x * x).sum();
    (v[0] * v[0] - rho2).abs().sqrt()
}
