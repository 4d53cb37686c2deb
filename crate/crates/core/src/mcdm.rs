//! Decision making over a final set: compromise programming, pseudo-weights
//! and high trade-off detection.

use crate::decomposition::Decomposition;
use crate::dominance::dominates;
use crate::error::{Error, Result};
use crate::Matrix;

#[derive(Debug, Clone, PartialEq)]
pub struct PseudoWeights {
    /// One row per solution, each summing to 1.
    pub weights: Matrix,
    /// Rows whose normalized distances were all zero and got uniform weights.
    pub degenerate: Vec<bool>,
}

fn check_matrix(f: &[Vec<f64>]) -> Result<usize> {
    let m = f
        .first()
        .ok_or_else(|| Error::invalid("objective matrix is empty"))?
        .len();
    if m == 0 {
        return Err(Error::invalid("objective matrix has no columns"));
    }
    if f.iter().any(|r| r.len() != m) {
        return Err(Error::invalid("objective rows differ in length"));
    }
    if f.iter().flatten().any(|v| !v.is_finite()) {
        return Err(Error::invalid(
            "objective matrix contains non-finite values",
        ));
    }
    Ok(m)
}

fn column_ranges(f: &[Vec<f64>], m: usize) -> Vec<(f64, f64)> {
    (0..m)
        .map(|j| {
            f.iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
                    (lo.min(r[j]), hi.max(r[j]))
                })
        })
        .collect()
}

/// Normalized distance to the worst value in each objective, rescaled per row
/// to sum to one. Objectives with zero range are left at weight 0.
pub fn pseudo_weights(f: &[Vec<f64>]) -> Result<PseudoWeights> {
    let m = check_matrix(f)?;
    let ranges = column_ranges(f, m);
    let mut weights = Vec::with_capacity(f.len());
    let mut degenerate = Vec::with_capacity(f.len());
    for row in f {
        let d: Vec<f64> = row
            .iter()
            .zip(&ranges)
            .map(|(&v, &(lo, hi))| if hi > lo { (hi - v) / (hi - lo) } else { 0.0 })
            .collect();
        let total: f64 = d.iter().sum();
        if total > 0.0 {
            weights.push(d.iter().map(|x| x / total).collect());
            degenerate.push(false);
        } else {
            weights.push(vec![1.0 / m as f64; m]);
            degenerate.push(true);
        }
    }
    Ok(PseudoWeights {
        weights,
        degenerate,
    })
}

/// Row whose pseudo-weight vector is closest (Euclidean) to `target`;
/// ties go to the lowest index.
pub fn closest_to_weights(pw: &PseudoWeights, target: &[f64]) -> Result<usize> {
    let m = pw.weights.first().map_or(0, Vec::len);
    if target.len() != m {
        return Err(Error::invalid(format!(
            "target has {} weights, front has {m} objectives",
            target.len()
        )));
    }
    Ok(argmin(pw.weights.iter().map(|w| {
        w.iter()
            .zip(target)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
    })))
}

/// Aggregated sacrifice over aggregated gain when moving from `a` to `b`.
/// Infinite if `a` is nowhere better than `b`.
pub fn tradeoff(a: &[f64], b: &[f64]) -> f64 {
    let mut loss = 0.0;
    let mut gain = 0.0;
    for (x, y) in a.iter().zip(b) {
        loss += (y - x).max(0.0);
        gain += (x - y).max(0.0);
    }
    loss / gain
}

#[derive(Debug, Clone, PartialEq)]
pub struct TradeoffResult {
    /// Minimum trade-off of each row against its neighbours.
    pub mu: Vec<f64>,
}

impl TradeoffResult {
    /// Row with the highest trade-off value; ties go to the lowest index.
    pub fn best(&self) -> usize {
        argmin(self.mu.iter().map(|v| -v))
    }
}

/// Trade-off value of every row: the minimum of `tradeoff(i, j)` over all
/// other rows, or over the `neighbors` nearest in objective space.
/// Duplicate rows are merged and share the value of their first copy.
pub fn tradeoff_metric(f: &[Vec<f64>], neighbors: Option<usize>) -> Result<TradeoffResult> {
    check_matrix(f)?;
    let mut unique: Vec<usize> = Vec::new();
    let mut slot = Vec::with_capacity(f.len());
    for (i, row) in f.iter().enumerate() {
        match unique.iter().position(|&u| f[u] == *row) {
            Some(p) => slot.push(p),
            None => {
                slot.push(unique.len());
                unique.push(i);
            }
        }
    }
    let n = unique.len();
    if n < 2 {
        return Err(Error::invalid(
            "trade-off needs at least two distinct solutions",
        ));
    }
    for &i in &unique {
        if let Some(&j) = unique.iter().find(|&&j| dominates(&f[j], &f[i])) {
            return Err(Error::invalid(format!("row {i} is dominated by row {j}")));
        }
    }
    let k = match neighbors {
        Some(0) => return Err(Error::invalid("neighbors must be positive")),
        Some(k) => k.min(n - 1),
        None => n - 1,
    };

    let dist = |a: usize, b: usize| -> f64 {
        f[a].iter()
            .zip(&f[b])
            .map(|(x, y)| (x - y) * (x - y))
            .sum::<f64>()
    };
    let unique_mu: Vec<f64> = unique
        .iter()
        .map(|&i| {
            let mut others: Vec<usize> = unique.iter().copied().filter(|&j| j != i).collect();
            if k < others.len() {
                others.sort_by(|&a, &b| dist(i, a).total_cmp(&dist(i, b)).then(a.cmp(&b)));
                others.truncate(k);
            }
            others
                .iter()
                .map(|&j| tradeoff(&f[i], &f[j]))
                .fold(f64::INFINITY, f64::min)
        })
        .collect();
    Ok(TradeoffResult {
        mu: slot.iter().map(|&s| unique_mu[s]).collect(),
    })
}

/// Index of the row minimizing the scalarization; ties go to the lowest index.
pub fn compromise(f: &[Vec<f64>], decomposition: &Decomposition) -> Result<usize> {
    check_matrix(f)?;
    decomposition.validate()?;
    let values = f
        .iter()
        .map(|r| decomposition.apply(r))
        .collect::<Result<Vec<f64>>>()?;
    Ok(argmin(values.into_iter()))
}

fn argmin(values: impl Iterator<Item = f64>) -> usize {
    let mut best = (0, f64::INFINITY);
    for (i, v) in values.enumerate() {
        if v < best.1 {
            best = (i, v);
        }
    }
    best.0
}
