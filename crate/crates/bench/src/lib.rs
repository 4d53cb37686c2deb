//! Input generators shared by the benchmarks.

use moeakit::rng::Rng;
use moeakit::Matrix;

/// `n` uniform points in the unit hypercube of dimension `m`.
pub fn random_points(seed: u64, n: usize, m: usize) -> Matrix {
    let mut rng = Rng::seed_from(seed);
    (0..n).map(|_| (0..m).map(|_| rng.uniform()).collect()).collect()
}

/// `n` mutually non-dominated points on the simplex `sum(f) = 1`.
pub fn simplex_front(seed: u64, n: usize, m: usize) -> Matrix {
    let mut rng = Rng::seed_from(seed);
    (0..n)
        .map(|_| {
            let d: Vec<f64> = (0..m).map(|_| rng.uniform_in(0.01, 1.0)).collect();
            let s: f64 = d.iter().sum();
            d.iter().map(|v| v / s).collect()
        })
        .collect()
}
