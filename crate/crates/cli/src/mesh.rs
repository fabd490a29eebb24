use std::collections::HashMap;
use std::f64::consts::PI;
use std::io::Write;

use crate::error::{ExportError, Result};
use crate::format;
use crate::profile::{direction, level, ProfileFamily};

/// Vertex re-evaluation tolerance.
pub const MESH_TOL: f64 = 1e-8;

/// Triangulated surface of revolution about the `T` axis. Vertices are
/// `[x, y, t]` with `|R| = hypot(x, y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RevolutionMesh {
    pub vertices: Vec<[f64; 3]>,
    /// 0-based vertex indices, counter-clockwise seen from outside.
    pub faces: Vec<[usize; 3]>,
}

impl RevolutionMesh {
    /// Closed PD indicatrix (or figuratrix): `resolution` meridian steps from
    /// pole to pole and `2·resolution` azimuthal segments.
    pub fn pd(g: f64, dual: bool, resolution: usize) -> Result<Self> {
        if resolution < 8 {
            return Err(ExportError::usage(format!("mesh resolution must be at least 8, got {resolution}")));
        }
        let family = ProfileFamily::new(false, dual);
        let meridian = (0..=resolution)
            .map(|i| {
                let th = if i == resolution { PI } else { PI * i as f64 / resolution as f64 };
                let (t, rho) = direction(th);
                let s = level(family, g, t, rho)?;
                Ok((rho / s, t / s))
            })
            .collect::<Result<Vec<_>>>()?;
        let mesh = Self::revolve(&meridian, 2 * resolution);
        for v in &mesh.vertices {
            let s = level(family, g, v[2], v[0].hypot(v[1]))?;
            let on = (s - 1.0).abs() <= MESH_TOL;
            if !on {
                return Err(ExportError::OffSurface {
                    what: format!("vertex {v:?}"),
                    level: s,
                    tol: MESH_TOL,
                });
            }
        }
        Ok(mesh)
    }

    /// Revolves a `(rho, t)` meridian whose first and last points sit on the
    /// axis (`rho = 0`) into a closed triangle mesh.
    pub fn revolve(meridian: &[(f64, f64)], segments: usize) -> Self {
        let rings = meridian.len() - 2;
        let mut vertices = vec![[0.0, 0.0, meridian[0].1]];
        for &(rho, t) in &meridian[1..=rings] {
            for k in 0..segments {
                let phi = 2.0 * PI * k as f64 / segments as f64;
                vertices.push([rho * phi.cos(), rho * phi.sin(), t]);
            }
        }
        let bottom = vertices.len();
        vertices.push([0.0, 0.0, meridian[rings + 1].1]);

        let at = |ring: usize, k: usize| 1 + ring * segments + k % segments;
        let mut faces = Vec::with_capacity(2 * segments * rings);
        for k in 0..segments {
            faces.push([0, at(0, k), at(0, k + 1)]);
        }
        for ring in 0..rings - 1 {
            for k in 0..segments {
                let (u0, u1) = (at(ring, k), at(ring, k + 1));
                let (l0, l1) = (at(ring + 1, k), at(ring + 1, k + 1));
                faces.push([u0, l0, l1]);
                faces.push([u0, l1, u1]);
            }
        }
        for k in 0..segments {
            faces.push([at(rings - 1, k), bottom, at(rings - 1, k + 1)]);
        }
        RevolutionMesh { vertices, faces }
    }

    fn directed_edges(&self) -> HashMap<(usize, usize), usize> {
        let mut edges = HashMap::new();
        for f in &self.faces {
            for i in 0..3 {
                *edges.entry((f[i], f[(i + 1) % 3])).or_insert(0) += 1;
            }
        }
        edges
    }

    pub fn edge_count(&self) -> usize {
        let mut undirected: Vec<(usize, usize)> = self
            .directed_edges()
            .keys()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        undirected.sort_unstable();
        undirected.dedup();
        undirected.len()
    }

    /// `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edge_count() as i64 + self.faces.len() as i64
    }

    /// Each directed edge is used once and its reverse once: closed and
    /// consistently oriented.
    pub fn is_watertight(&self) -> bool {
        let edges = self.directed_edges();
        edges
            .iter()
            .all(|(&(a, b), &n)| n == 1 && edges.get(&(b, a)) == Some(&1))
    }

    /// `(min t, max t)` over the vertices.
    pub fn t_extent(&self) -> (f64, f64) {
        self.vertices
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v[2]), hi.max(v[2])))
    }

    pub fn write_obj<W: Write>(&self, w: W) -> Result<()> {
        format::write_obj(w, &self.vertices, &self.faces)?;
        Ok(())
    }
}
