//! Seeded workload generators shared by the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rectimax_core::{
    ProblemInstance, RotatedRectConstraint, Tropical, TropicalMatrix, WeightedPoint,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A dense `n × n` matrix with finite entries in `[-10, 10)`; always irreducible.
pub fn dense_matrix(rng: &mut ChaCha8Rng, n: usize) -> TropicalMatrix {
    let data = (0..n * n)
        .map(|_| Tropical::finite(rng.gen_range(-10.0..10.0)))
        .collect();
    TropicalMatrix::new(n, n, data).expect("square data")
}

pub fn random_points(rng: &mut ChaCha8Rng, m: usize) -> Vec<WeightedPoint> {
    (0..m)
        .map(|_| {
            WeightedPoint::new(
                rng.gen_range(-100.0..100.0),
                rng.gen_range(-100.0..100.0),
                rng.gen_range(-10.0..10.0),
            )
        })
        .collect()
}

/// `m` random points and a rotated rectangle somewhere near them.
pub fn constrained_instance(rng: &mut ChaCha8Rng, m: usize) -> ProblemInstance {
    let points = random_points(rng, m);
    let (u, v) = (rng.gen_range(-100.0..100.0), rng.gen_range(-100.0..100.0));
    let (hu, hv) = (rng.gen_range(1.0..50.0), rng.gen_range(1.0..50.0));
    let cons = RotatedRectConstraint::from_bounds(u - hu, u + hu, v - hv, v + hv);
    ProblemInstance::new(points, Some(cons)).expect("valid instance")
}
