//! Two-parent recombination operators. Every operator returns two children.

use crate::rng::Rng;

/// Width subtracted from the integer upper bound before rounding.
pub const INT_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointKind {
    OnePoint,
    TwoPoint,
}

/// Splices `a` and `b` at the given sorted cut positions; a cut at `c`
/// switches the source parent starting at index `c`.
fn splice(a: &[f64], b: &[f64], cuts: &[usize]) -> (Vec<f64>, Vec<f64>) {
    let mut c1 = Vec::with_capacity(a.len());
    let mut c2 = Vec::with_capacity(a.len());
    let mut swapped = false;
    let mut next = cuts.iter().peekable();
    for i in 0..a.len() {
        while next.peek().is_some_and(|&&c| c == i) {
            swapped = !swapped;
            next.next();
        }
        let (x, y) = if swapped { (b[i], a[i]) } else { (a[i], b[i]) };
        c1.push(x);
        c2.push(y);
    }
    (c1, c2)
}

/// One-point crossover with the cut before index `cut` (1..N).
pub fn one_point_at(a: &[f64], b: &[f64], cut: usize) -> (Vec<f64>, Vec<f64>) {
    splice(a, b, &[cut])
}

/// Two-point crossover exchanging the segment `start..end`.
pub fn two_point_at(a: &[f64], b: &[f64], start: usize, end: usize) -> (Vec<f64>, Vec<f64>) {
    splice(a, b, &[start, end])
}

/// One- or two-point crossover with uniformly drawn cuts. Requires `N >= 2`.
pub fn crossover_point(
    a: &[f64],
    b: &[f64],
    kind: PointKind,
    rng: &mut Rng,
) -> (Vec<f64>, Vec<f64>) {
    let n = a.len();
    assert!(n >= 2, "point crossover needs at least two variables");
    match kind {
        PointKind::OnePoint => one_point_at(a, b, 1 + rng.index(n - 1)),
        PointKind::TwoPoint => {
            let mut cuts = rng.choose_distinct(n - 1, 2.min(n - 1));
            cuts.iter_mut().for_each(|c| *c += 1);
            cuts.sort_unstable();
            if cuts.len() == 1 {
                one_point_at(a, b, cuts[0])
            } else {
                two_point_at(a, b, cuts[0], cuts[1])
            }
        }
    }
}

/// Uniform crossover: each position comes from either parent with equal
/// probability; the second child takes the other value.
pub fn crossover_ux(a: &[f64], b: &[f64], rng: &mut Rng) -> (Vec<f64>, Vec<f64>) {
    let mut c1 = a.to_vec();
    let mut c2 = b.to_vec();
    for i in 0..a.len() {
        if rng.bernoulli(0.5) {
            c1[i] = b[i];
            c2[i] = a[i];
        }
    }
    (c1, c2)
}

/// Half-uniform crossover: exactly `floor(|D| / 2)` of the `|D|` differing
/// positions are exchanged, chosen uniformly without replacement.
pub fn crossover_hux(a: &[f64], b: &[f64], rng: &mut Rng) -> (Vec<f64>, Vec<f64>) {
    let differing: Vec<usize> = (0..a.len()).filter(|&i| a[i] != b[i]).collect();
    let mut c1 = a.to_vec();
    let mut c2 = b.to_vec();
    for k in rng.choose_distinct(differing.len(), differing.len() / 2) {
        let i = differing[k];
        c1[i] = b[i];
        c2[i] = a[i];
    }
    (c1, c2)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SbxParams {
    /// Distribution index; larger values keep children closer to parents.
    pub eta: f64,
    /// Probability that an individual variable is recombined.
    pub prob_per_var: f64,
}

impl Default for SbxParams {
    fn default() -> Self {
        Self {
            eta: 15.0,
            prob_per_var: 0.5,
        }
    }
}

/// SBX spread factor for a uniform draw `u` in `[0, 1)`.
pub fn sbx_beta(u: f64, eta: f64) -> f64 {
    let e = 1.0 / (eta + 1.0);
    if u <= 0.5 {
        (2.0 * u).powf(e)
    } else {
        (1.0 / (2.0 * (1.0 - u))).powf(e)
    }
}

/// Unclamped SBX children of two scalar parents for a given draw.
pub fn sbx_children(p1: f64, p2: f64, u: f64, eta: f64) -> (f64, f64) {
    let beta = sbx_beta(u, eta);
    (
        0.5 * ((1.0 + beta) * p1 + (1.0 - beta) * p2),
        0.5 * ((1.0 - beta) * p1 + (1.0 + beta) * p2),
    )
}

/// Simulated binary crossover on real variables; children are clamped to bounds.
pub fn crossover_sbx(
    a: &[f64],
    b: &[f64],
    params: SbxParams,
    lower: &[f64],
    upper: &[f64],
    rng: &mut Rng,
) -> (Vec<f64>, Vec<f64>) {
    let mut c1 = a.to_vec();
    let mut c2 = b.to_vec();
    for i in 0..a.len() {
        if !rng.bernoulli(params.prob_per_var) {
            continue;
        }
        let u = rng.uniform();
        let swap = rng.bernoulli(0.5);
        if a[i] == b[i] {
            continue;
        }
        let (mut y1, mut y2) = sbx_children(a[i], b[i], u, params.eta);
        if swap {
            std::mem::swap(&mut y1, &mut y2);
        }
        c1[i] = y1.clamp(lower[i], upper[i]);
        c2[i] = y2.clamp(lower[i], upper[i]);
    }
    (c1, c2)
}

/// Integer bounds widened so that rounding gives every value an equal share.
pub(crate) fn widened(lower: &[f64], upper: &[f64]) -> (Vec<f64>, Vec<f64>) {
    (
        lower.iter().map(|l| l - 0.5).collect(),
        upper.iter().map(|u| u + 0.5 - INT_EPS).collect(),
    )
}

pub(crate) fn round_into(x: &mut [f64], lower: &[f64], upper: &[f64]) {
    for ((v, l), u) in x.iter_mut().zip(lower).zip(upper) {
        *v = v.round().clamp(*l, *u);
    }
}

/// SBX for integer variables: recombine on `[L - 0.5, U + 0.5 - eps]`,
/// round half away from zero, clamp to `[L, U]`.
pub fn crossover_sbx_int(
    a: &[f64],
    b: &[f64],
    params: SbxParams,
    lower: &[f64],
    upper: &[f64],
    rng: &mut Rng,
) -> (Vec<f64>, Vec<f64>) {
    let (wl, wu) = widened(lower, upper);
    let (mut c1, mut c2) = crossover_sbx(a, b, params, &wl, &wu, rng);
    round_into(&mut c1, lower, upper);
    round_into(&mut c2, lower, upper);
    (c1, c2)
}
