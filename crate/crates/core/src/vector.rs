//! Vector and small dense matrix types.
//!
//! All three vector types share one layout: a `T`-like leading component and
//! an `N-1` spatial block. They are kept distinct so that points, covectors and
//! sphere images cannot be mixed up at call sites.

use crate::error::{FinslerError, Result};

macro_rules! split_vector {
    ($(#[$meta:meta])* $name:ident, $lead:ident, $rest:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq)]
        pub struct $name {
            pub $lead: f64,
            pub $rest: Vec<f64>,
        }

        impl $name {
            pub fn new($lead: f64, $rest: Vec<f64>) -> Self {
                Self { $lead, $rest }
            }

            /// Builds from a flat slice, leading component first.
            pub fn from_slice(components: &[f64]) -> Self {
                Self {
                    $lead: components[0],
                    $rest: components[1..].to_vec(),
                }
            }

            /// A point with the given leading value and `|spatial| = radius`
            /// along the first spatial axis.
            pub fn axial($lead: f64, radius: f64, dim: usize) -> Self {
                let mut $rest = vec![0.0; dim - 1];
                $rest[0] = radius;
                Self { $lead, $rest }
            }

            pub fn dim(&self) -> usize {
                self.$rest.len() + 1
            }

            /// Euclidean norm of the spatial block.
            pub fn spatial_norm(&self) -> f64 {
                self.$rest.iter().map(|x| x * x).sum::<f64>().sqrt()
            }

            /// Euclidean norm of the whole vector.
            pub fn norm(&self) -> f64 {
                (self.$lead * self.$lead + self.$rest.iter().map(|x| x * x).sum::<f64>()).sqrt()
            }

            pub fn is_zero(&self) -> bool {
                self.$lead == 0.0 && self.$rest.iter().all(|x| *x == 0.0)
            }

            pub fn is_finite(&self) -> bool {
                self.$lead.is_finite() && self.$rest.iter().all(|x| x.is_finite())
            }

            pub fn scaled(&self, b: f64) -> Self {
                Self {
                    $lead: self.$lead * b,
                    $rest: self.$rest.iter().map(|x| x * b).collect(),
                }
            }

            pub fn to_vec(&self) -> Vec<f64> {
                let mut out = Vec::with_capacity(self.dim());
                out.push(self.$lead);
                out.extend_from_slice(&self.$rest);
                out
            }

            pub fn component(&self, p: usize) -> f64 {
                if p == 0 {
                    self.$lead
                } else {
                    self.$rest[p - 1]
                }
            }

            /// Largest absolute componentwise difference.
            pub fn max_abs_diff(&self, other: &Self) -> f64 {
                self.to_vec()
                    .iter()
                    .zip(other.to_vec())
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max)
            }

            pub fn dot(&self, other: &[f64]) -> f64 {
                self.to_vec().iter().zip(other).map(|(a, b)| a * b).sum()
            }
        }
    };
}

split_vector!(
    /// A point `(T, R¹, …, R^{N-1})` of the base space.
    EventVector,
    t,
    x
);

split_vector!(
    /// A covector `(T̂, R₁, …, R_{N-1})` of the dual space.
    CoVector,
    t,
    xi
);

split_vector!(
    /// The image of a point under the spherical map.
    SphereImage,
    t,
    x
);

/// Dense `n × n` matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SquareMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix rows must be square");
            data.extend_from_slice(row);
        }
        Self { n, data }
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, *v);
        }
        m
    }

    /// `δ + alpha · l lᵀ`.
    pub fn identity_plus_outer(l: &[f64], alpha: f64) -> Self {
        let n = l.len();
        let mut m = Self::identity(n);
        for i in 0..n {
            for j in 0..n {
                m.data[i * n + j] += alpha * l[i] * l[j];
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    /// `xᵀ M y`.
    pub fn bilinear(&self, x: &[f64], y: &[f64]) -> f64 {
        x.iter().zip(self.mul_vec(y)).map(|(a, b)| a * b).sum()
    }

    /// `Aᵀ M A`, symmetrised so the result is exactly symmetric.
    pub fn congruence(&self, a: &Self) -> Self {
        let mut out = a.transpose().mul(&self.mul(a));
        out.symmetrize();
        out
    }

    pub fn symmetrize(&mut self) {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let avg = 0.5 * (self.get(i, j) + self.get(j, i));
                self.set(i, j, avg);
                self.set(j, i, avg);
            }
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn asymmetry(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }

    /// LU factorisation with partial pivoting, returned packed together with
    /// the row permutation and its parity. `None` when a pivot vanishes.
    fn lu(&self) -> Option<(Vec<f64>, Vec<usize>, f64)> {
        let n = self.n;
        let mut a = self.data.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = 1.0;
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| a[i * n + col].abs().total_cmp(&a[j * n + col].abs()))
                .unwrap();
            if a[pivot * n + col] == 0.0 {
                return None;
            }
            if pivot != col {
                for k in 0..n {
                    a.swap(pivot * n + k, col * n + k);
                }
                perm.swap(pivot, col);
                sign = -sign;
            }
            let d = a[col * n + col];
            for row in (col + 1)..n {
                let factor = a[row * n + col] / d;
                a[row * n + col] = factor;
                for k in (col + 1)..n {
                    a[row * n + k] -= factor * a[col * n + k];
                }
            }
        }
        Some((a, perm, sign))
    }

    pub fn determinant(&self) -> f64 {
        match self.lu() {
            Some((a, _, sign)) => (0..self.n).map(|i| a[i * self.n + i]).product::<f64>() * sign,
            None => 0.0,
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let (a, perm, _) = self.lu().ok_or(FinslerError::Singular)?;
        let mut inv = Self::zeros(n);
        for col in 0..n {
            // Solve L U x = P e_col.
            let mut y = vec![0.0; n];
            for i in 0..n {
                let mut s = if perm[i] == col { 1.0 } else { 0.0 };
                for k in 0..i {
                    s -= a[i * n + k] * y[k];
                }
                y[i] = s;
            }
            for i in (0..n).rev() {
                let mut s = y[i];
                for k in (i + 1)..n {
                    s -= a[i * n + k] * y[k];
                }
                y[i] = s / a[i * n + i];
            }
            for (i, yi) in y.iter().enumerate() {
                inv.set(i, col, *yi);
            }
        }
        Ok(inv)
    }
}
