//! Performance indicators for approximation sets (minimization).
//!
//! None of these normalize objectives; callers decide the scaling.

mod hypervolume;

pub use hypervolume::{hypervolume, Hypervolume};

use crate::dominance::dominates;
use crate::error::{Error, Result};
use crate::Matrix;

/// A reference Pareto front, validated to be mutually non-dominated.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceFront {
    points: Matrix,
}

impl ReferenceFront {
    pub fn new(points: Matrix) -> Result<Self> {
        check_set("reference front", &points)?;
        for (i, a) in points.iter().enumerate() {
            if let Some(j) = points.iter().position(|b| dominates(b, a)) {
                return Err(Error::invalid(format!(
                    "reference front row {i} is dominated by row {j}"
                )));
            }
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &Matrix {
        &self.points
    }
}

fn check_set(what: &str, set: &[Vec<f64>]) -> Result<usize> {
    let m = set
        .first()
        .ok_or_else(|| Error::invalid(format!("{what} is empty")))?
        .len();
    if set.iter().any(|r| r.len() != m) {
        return Err(Error::invalid(format!("{what} rows differ in length")));
    }
    if set.iter().flatten().any(|v| !v.is_finite()) {
        return Err(Error::invalid(format!("{what} contains non-finite values")));
    }
    Ok(m)
}

fn check_pair(s: &[Vec<f64>], pf: &[Vec<f64>]) -> Result<()> {
    let ms = check_set("solution set", s)?;
    let mp = check_set("reference front", pf)?;
    if ms != mp {
        return Err(Error::invalid(format!(
            "solution set has {ms} objectives, reference front has {mp}"
        )));
    }
    Ok(())
}

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Dominance-aware distance from solution `a` to reference point `p`:
/// only the components where `a` is worse than `p` count.
pub fn distance_plus(a: &[f64], p: &[f64]) -> f64 {
    a.iter()
        .zip(p)
        .map(|(x, y)| (x - y).max(0.0).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// Mean over `from` of the distance to the closest member of `to`.
fn mean_nearest(from: &[Vec<f64>], to: &[Vec<f64>], dist: impl Fn(&[f64], &[f64]) -> f64) -> f64 {
    let total: f64 = from
        .iter()
        .map(|a| to.iter().map(|b| dist(a, b)).fold(f64::INFINITY, f64::min))
        .sum();
    total / from.len() as f64
}

/// Generational distance: mean distance from each solution to the front.
pub fn gd(s: &[Vec<f64>], pf: &[Vec<f64>]) -> Result<f64> {
    check_pair(s, pf)?;
    Ok(mean_nearest(s, pf, euclidean))
}

/// Inverted generational distance: mean distance from each front point to the set.
pub fn igd(s: &[Vec<f64>], pf: &[Vec<f64>]) -> Result<f64> {
    check_pair(s, pf)?;
    Ok(mean_nearest(pf, s, euclidean))
}

pub fn gd_plus(s: &[Vec<f64>], pf: &[Vec<f64>]) -> Result<f64> {
    check_pair(s, pf)?;
    Ok(mean_nearest(s, pf, distance_plus))
}

pub fn igd_plus(s: &[Vec<f64>], pf: &[Vec<f64>]) -> Result<f64> {
    check_pair(s, pf)?;
    Ok(mean_nearest(pf, s, |p, a| distance_plus(a, p)))
}
