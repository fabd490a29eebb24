use std::panic::{self, AssertUnwindSafe};

use finsleroid_core::{EventVector, Result};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::claim::Claim;
use crate::report::{Family, VerificationReport, WorstInput};
use crate::sampling::sample_directions;

pub const DEFAULT_GRID: [f64; 11] = [
    -1.9, -1.5, -1.0, -0.5, -0.1, 0.0, 0.1, 0.5, 1.0, 1.5, 1.9,
];

/// Which values of `g` a check visits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Scope {
    /// Every grid value.
    Grid,
    /// Every grid value except `g = 0`.
    NonZero,
    /// A single value, whatever the grid.
    Fixed(f64),
}

pub struct CheckSpec {
    pub name: &'static str,
    pub family: Family,
    pub tolerance: f64,
    pub claims: &'static [Claim],
    /// Number of sample points requested per `g`.
    pub samples: usize,
    pub scope: Scope,
    pub run: fn(&mut Ctx) -> Result<()>,
}

/// Per-`g` state handed to a check.
pub struct Ctx {
    pub g: f64,
    pub dim: usize,
    pub samples: usize,
    pub rng: ChaCha8Rng,
    count: usize,
    worst: Option<(f64, Vec<f64>)>,
}

impl Ctx {
    fn new(g: f64, dim: usize, samples: usize, seed: u64) -> Self {
        Self {
            g,
            dim,
            samples,
            rng: ChaCha8Rng::seed_from_u64(seed),
            count: 0,
            worst: None,
        }
    }

    /// Records one sample. NaN counts as an infinite residual.
    pub fn record(&mut self, point: &[f64], residual: f64) {
        self.count += 1;
        let r = if residual.is_nan() {
            f64::INFINITY
        } else {
            residual.abs()
        };
        if self.worst.as_ref().is_none_or(|(w, _)| r > *w) {
            self.worst = Some((r, point.to_vec()));
        }
    }

    /// Records `max(0, floor - value)`, so the residual is the shortfall
    /// below a required margin.
    pub fn record_margin(&mut self, point: &[f64], value: f64, floor: f64) {
        let shortfall = if value.is_nan() { f64::INFINITY } else { (floor - value).max(0.0) };
        self.record(point, shortfall);
    }

    /// `samples` unit directions including the axes and the equator ring.
    pub fn directions(&mut self) -> Vec<EventVector> {
        let seed = self.rng.next_u64();
        let extra = self.samples.saturating_sub(2 * self.dim);
        sample_directions(self.dim, extra, seed)
    }

    fn random_direction(&mut self) -> EventVector {
        loop {
            let c: Vec<f64> = (0..self.dim).map(|_| self.rng.sample(StandardNormal)).collect();
            let n = c.iter().map(|x: &f64| x * x).sum::<f64>().sqrt();
            if n > 1e-6 {
                return EventVector::from_slice(&c.iter().map(|x| x / n).collect::<Vec<_>>());
            }
        }
    }

    /// Like [`Ctx::directions`], with rejected directions replaced by fresh
    /// random ones until the requested count is reached.
    pub fn directions_where(&mut self, keep: impl Fn(&EventVector) -> bool) -> Vec<EventVector> {
        let target = self.samples.max(2 * self.dim);
        let mut out: Vec<EventVector> = self.directions().into_iter().filter(|d| keep(d)).collect();
        let mut attempts = 0;
        while out.len() < target && attempts < 1000 * target {
            let d = self.random_direction();
            if keep(&d) {
                out.push(d);
            }
            attempts += 1;
        }
        out
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..hi)
    }
}

/// FNV-1a, used to give every check its own random stream.
fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    })
}

fn panic_message(payload: Box<dyn std::any::Any + Send>) -> String {
    if let Some(s) = payload.downcast_ref::<&str>() {
        (*s).to_string()
    } else if let Some(s) = payload.downcast_ref::<String>() {
        s.clone()
    } else {
        "non-string panic payload".to_string()
    }
}

fn run_one(spec: &CheckSpec, grid: &[f64], seed: u64, dim: usize) -> VerificationReport {
    let gs: Vec<f64> = match spec.scope {
        Scope::Grid => grid.to_vec(),
        Scope::NonZero => grid.iter().copied().filter(|g| *g != 0.0).collect(),
        Scope::Fixed(g) => vec![g],
    };
    let base = seed ^ fnv1a(spec.name);
    let mut samples = 0;
    let mut worst: Option<(f64, f64, Vec<f64>)> = None;
    let mut diagnostic: Option<String> = None;

    for g in gs {
        let mut ctx = Ctx::new(g, dim, spec.samples, base ^ g.to_bits().rotate_left(17));
        let outcome = panic::catch_unwind(AssertUnwindSafe(|| (spec.run)(&mut ctx)));
        let problem = match outcome {
            Ok(Ok(())) => None,
            Ok(Err(e)) => Some(format!("g = {g}: {e}")),
            Err(payload) => Some(format!("g = {g}: panic: {}", panic_message(payload))),
        };
        if let Some(msg) = problem {
            ctx.record(&[], f64::INFINITY);
            diagnostic.get_or_insert(msg);
        }
        samples += ctx.count;
        if let Some((r, point)) = ctx.worst {
            if worst.as_ref().is_none_or(|(w, _, _)| r > *w) {
                worst = Some((r, g, point));
            }
        }
    }

    let max_residual = worst.as_ref().map_or(0.0, |w| w.0);
    VerificationReport {
        name: spec.name.to_string(),
        family: spec.family,
        samples,
        max_residual,
        tolerance: spec.tolerance,
        pass: diagnostic.is_none() && max_residual <= spec.tolerance,
        worst_case_input: worst.map(|(_, g, point)| WorstInput { g, point }),
        diagnostic,
    }
}

/// Runs `checks` over `grid` concurrently; reports are sorted by name.
pub fn run_checks(checks: &[CheckSpec], grid: &[f64], seed: u64, dim: usize) -> Vec<VerificationReport> {
    let mut reports: Vec<VerificationReport> = checks
        .par_iter()
        .map(|spec| run_one(spec, grid, seed, dim))
        .collect();
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    reports
}

/// Runs the full registry.
pub fn run_all(grid: &[f64], seed: u64, dim: usize) -> Vec<VerificationReport> {
    run_checks(&crate::checks::registry(), grid, seed, dim)
}
