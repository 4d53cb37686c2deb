use crate::rng::Rng;

use super::crossover::{round_into, widened};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolyMutationParams {
    pub eta_m: f64,
    /// Per-variable mutation probability; `None` means `1 / N`.
    pub prob_per_var: Option<f64>,
}

impl Default for PolyMutationParams {
    fn default() -> Self {
        Self {
            eta_m: 20.0,
            prob_per_var: None,
        }
    }
}

impl PolyMutationParams {
    pub fn prob_for(&self, n_var: usize) -> f64 {
        self.prob_per_var.unwrap_or(1.0 / n_var as f64)
    }
}

/// Boundary-aware polynomial perturbation of `x` in `[lower, upper]` for a draw `u`.
pub fn polynomial_shift(x: f64, lower: f64, upper: f64, u: f64, eta_m: f64) -> f64 {
    let range = upper - lower;
    let pow = 1.0 / (eta_m + 1.0);
    let delta_q = if u < 0.5 {
        let xy = 1.0 - (x - lower) / range;
        let val = 2.0 * u + (1.0 - 2.0 * u) * xy.powf(eta_m + 1.0);
        val.powf(pow) - 1.0
    } else {
        let xy = 1.0 - (upper - x) / range;
        let val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * xy.powf(eta_m + 1.0);
        1.0 - val.powf(pow)
    };
    (x + delta_q * range).clamp(lower, upper)
}

/// Polynomial mutation of real variables.
pub fn mutate_polynomial(
    x: &[f64],
    params: PolyMutationParams,
    lower: &[f64],
    upper: &[f64],
    rng: &mut Rng,
) -> Vec<f64> {
    let prob = params.prob_for(x.len());
    x.iter()
        .enumerate()
        .map(|(i, &v)| {
            if rng.bernoulli(prob) {
                polynomial_shift(v, lower[i], upper[i], rng.uniform(), params.eta_m)
            } else {
                v
            }
        })
        .collect()
}

/// Polynomial mutation on widened integer bounds followed by rounding.
pub fn mutate_polynomial_int(
    x: &[f64],
    params: PolyMutationParams,
    lower: &[f64],
    upper: &[f64],
    rng: &mut Rng,
) -> Vec<f64> {
    let (wl, wu) = widened(lower, upper);
    let mut out = mutate_polynomial(x, params, &wl, &wu, rng);
    round_into(&mut out, lower, upper);
    out
}

/// Flips each bit independently with probability `prob`.
pub fn mutate_bitflip(x: &[f64], prob: f64, rng: &mut Rng) -> Vec<f64> {
    x.iter()
        .map(|&v| if rng.bernoulli(prob) { 1.0 - v } else { v })
        .collect()
}
