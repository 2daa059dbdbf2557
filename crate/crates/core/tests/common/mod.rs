#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rectimax_core::{RotatedRectConstraint, Tropical, TropicalMatrix, WeightedPoint};

pub const Z: f64 = f64::NEG_INFINITY;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// A random irreducible matrix with roughly `zero_rate` of its entries `𝟘`.
pub fn random_irreducible(rng: &mut ChaCha8Rng, n: usize, zero_rate: f64) -> TropicalMatrix {
    loop {
        let data = (0..n * n)
            .map(|_| {
                if rng.gen_bool(zero_rate) {
                    Tropical::ZERO
                } else {
                    Tropical::finite(rng.gen_range(-10.0..10.0))
                }
            })
            .collect();
        let m = TropicalMatrix::new(n, n, data).unwrap();
        if m.is_irreducible().unwrap() {
            return m;
        }
    }
}

pub fn random_extended(rng: &mut ChaCha8Rng) -> (f64, f64, f64, f64, TropicalMatrix) {
    let mut c = || rng.gen_range(-20.0..20.0);
    let (a, b, cc, d) = (c(), c(), c(), c());
    let m =
        TropicalMatrix::from_conventional(&[vec![Z, a, Z], vec![b, Z, cc], vec![Z, d, Z]]).unwrap();
    (a, b, cc, d, m)
}

/// Maximum cycle mean by enumerating every elementary cycle; an independent
/// route to the eigenvalue of an irreducible matrix.
pub fn max_cycle_mean(m: &TropicalMatrix) -> f64 {
    let n = m.rows();
    let w = m.to_conventional();
    let mut best = Z;
    // cycles are enumerated from their smallest vertex
    fn extend(w: &[Vec<f64>], start: usize, path: &mut Vec<usize>, weight: f64, best: &mut f64) {
        let last = *path.last().unwrap();
        let n = w.len();
        if w[last][start] > Z {
            *best = best.max((weight + w[last][start]) / path.len() as f64);
        }
        for next in start + 1..n {
            if !path.contains(&next) && w[last][next] > Z {
                path.push(next);
                extend(w, start, path, weight + w[last][next], best);
                path.pop();
            }
        }
    }
    for start in 0..n {
        extend(&w, start, &mut vec![start], 0.0, &mut best);
    }
    best
}

pub fn random_points(
    rng: &mut ChaCha8Rng,
    m: usize,
    coord: f64,
    weight: f64,
) -> Vec<WeightedPoint> {
    (0..m)
        .map(|_| {
            WeightedPoint::new(
                rng.gen_range(-coord..coord),
                rng.gen_range(-coord..coord),
                rng.gen_range(-weight..weight),
            )
        })
        .collect()
}

/// A random rotated rectangle near the points, sometimes with missing sides
/// and sometimes empty.
pub fn random_constraint(rng: &mut ChaCha8Rng, coord: f64) -> RotatedRectConstraint {
    let mut bounds = || {
        let center = rng.gen_range(-coord..coord);
        let half = rng.gen_range(-0.1 * coord..coord);
        (center - half, center + half)
    };
    let (lo_u, hi_u) = bounds();
    let (lo_v, hi_v) = bounds();
    let mut cons = RotatedRectConstraint::from_bounds(lo_u, hi_u, lo_v, hi_v);
    for side in [&mut cons.a1, &mut cons.b1, &mut cons.c1, &mut cons.d1] {
        if rng.gen_bool(0.15) {
            *side = Tropical::ZERO;
        }
    }
    cons
}
