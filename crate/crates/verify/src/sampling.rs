use std::f64::consts::TAU;

use finsleroid_core::EventVector;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

/// Unit directions: the `2·dim` signed axes, then a ring of `count / 4`
/// points on the equator `T = 0`, then uniformly distributed points.
/// `count` is the number of directions beyond the axes.
pub fn sample_directions(dim: usize, count: usize, seed: u64) -> Vec<EventVector> {
    let mut out = Vec::with_capacity(2 * dim + count);
    for axis in 0..dim {
        for sign in [1.0, -1.0] {
            let mut c = vec![0.0; dim];
            c[axis] = sign;
            out.push(EventVector::from_slice(&c));
        }
    }

    let ring = count / 4;
    for i in 0..ring {
        // offset by half a step so the ring never repeats an axis
        let a = (i as f64 + 0.5) * TAU / ring as f64;
        let mut c = vec![0.0; dim];
        c[1] = a.cos();
        if dim > 2 {
            c[2] = a.sin();
        } else {
            c[1] = c[1].signum();
        }
        out.push(EventVector::from_slice(&c));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < 2 * dim + count {
        let c: Vec<f64> = (0..dim).map(|_| StandardNormal.sample(&mut rng)).collect();
        let n = c.iter().map(|x: &f64| x * x).sum::<f64>().sqrt();
        if n < 1e-6 {
            continue;
        }
        out.push(EventVector::from_slice(
            &c.iter().map(|x| x / n).collect::<Vec<_>>(),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axes_only() {
        let d = sample_directions(4, 0, 1);
        assert_eq!(d.len(), 8);
        assert_eq!(d[0].to_vec(), vec![1.0, 0.0, 0.0, 0.0]);
        assert_eq!(d[7].to_vec(), vec![0.0, 0.0, 0.0, -1.0]);
    }

    #[test]
    fn deterministic_and_unit() {
        let a = sample_directions(4, 60, 42);
        assert_eq!(a, sample_directions(4, 60, 42));
        assert_ne!(a, sample_directions(4, 60, 43));
        assert_eq!(a.len(), 68);
        for v in &a {
            assert!((v.norm() - 1.0).abs() <= 1e-15);
        }
        assert!(a[8..23].iter().all(|v| v.t == 0.0));
    }

    #[test]
    fn two_dimensional_ring() {
        let d = sample_directions(2, 8, 3);
        assert_eq!(d.len(), 12);
        assert!(d.iter().all(|v| (v.norm() - 1.0).abs() <= 1e-15));
    }
}
