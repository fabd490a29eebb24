use std::io::Write;

use finsleroid_core::{PdParams, SrParams};

use crate::error::{ExportError, Result};
use crate::format;

/// Distance kept from the PD bounds `|g| = 2`. Closer than about 1e-5 the
/// landmarks overflow `f64` (k grows like exp(πG/2)).
pub const PD_EDGE_MARGIN: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepFamily {
    Pd,
    Sr,
}

/// Landmark quantities tabulated against `g`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
}

impl SweepTable {
    /// `steps` evenly spaced values of `g` on `[g_min, g_max]`; the PD range is
    /// clipped to `(-2, 2)` first.
    pub fn new(family: SweepFamily, g_min: f64, g_max: f64, steps: usize) -> Result<Self> {
        if steps < 2 {
            return Err(ExportError::usage(format!("need at least 2 steps, got {steps}")));
        }
        if !g_min.is_finite() || !g_max.is_finite() || g_min > g_max {
            return Err(ExportError::usage(format!("bad g range [{g_min}, {g_max}]")));
        }
        let (lo, hi) = match family {
            SweepFamily::Pd => {
                let edge = 2.0 - PD_EDGE_MARGIN;
                (g_min.max(-edge), g_max.min(edge))
            }
            SweepFamily::Sr => (g_min, g_max),
        };
        if lo > hi {
            return Err(ExportError::usage(format!("g range [{g_min}, {g_max}] misses (-2, 2)")));
        }
        let step = (hi - lo) / (steps - 1) as f64;
        let mut rows = Vec::with_capacity(steps);
        for i in 0..steps {
            let g = if i == steps - 1 { hi } else { lo + step * i as f64 };
            rows.push(match family {
                SweepFamily::Pd => {
                    let l = PdParams::new(g, 2)?.landmarks();
                    vec![g, l.t1, l.t2, l.f, l.k]
                }
                SweepFamily::Sr => {
                    let l = SrParams::new(g, 2)?.landmarks();
                    vec![g, l.c, l.z, l.s]
                }
            });
        }
        let header = match family {
            SweepFamily::Pd => vec!["g", "t1", "t2", "f", "k"],
            SweepFamily::Sr => vec!["g", "c", "z", "s"],
        };
        Ok(SweepTable { header, rows })
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        format::write_csv(w, &[], &self.header, &self.rows)?;
        Ok(())
    }
}
