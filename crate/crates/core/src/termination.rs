//! Budget- and movement-based stopping rules.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::population::Population;
use crate::problem::ProblemInfo;
use crate::Matrix;

fn default_tol() -> f64 {
    0.005
}
fn default_window() -> usize {
    10
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum TerminationKind {
    MaxEvals {
        n: usize,
    },
    MaxGen {
        n: usize,
    },
    /// Largest nearest-neighbour displacement in range-normalized design space.
    XMovement {
        #[serde(default = "default_tol")]
        tol: f64,
        #[serde(default = "default_window")]
        k: usize,
    },
    /// Largest nearest-neighbour displacement in objective space.
    FMovement {
        #[serde(default = "default_tol")]
        tol: f64,
        #[serde(default = "default_window")]
        k: usize,
    },
}

/// What a criterion may look at after each generation.
#[derive(Debug, Clone, Copy)]
pub struct Progress<'a> {
    pub n_gen: usize,
    pub n_eval: usize,
    pub population: &'a Population,
    pub info: &'a ProblemInfo,
}

#[derive(Debug, Clone)]
pub struct Termination {
    kind: TerminationKind,
    window: VecDeque<f64>,
    previous: Option<Matrix>,
    last_gen: Option<usize>,
}

impl Termination {
    pub fn new(kind: TerminationKind) -> Self {
        Self {
            kind,
            window: VecDeque::new(),
            previous: None,
            last_gen: None,
        }
    }

    pub fn kind(&self) -> TerminationKind {
        self.kind
    }

    /// Movement values of the last `k` generations, oldest first.
    pub fn window(&self) -> impl Iterator<Item = f64> + '_ {
        self.window.iter().copied()
    }

    /// Call once per generation (generation 0 = initial population).
    /// Repeated calls for the same generation do not advance the window.
    pub fn should_stop(&mut self, state: &Progress<'_>) -> bool {
        match self.kind {
            TerminationKind::MaxEvals { n } => state.n_eval >= n,
            TerminationKind::MaxGen { n } => state.n_gen >= n,
            TerminationKind::XMovement { tol, k } => {
                let scale: Vec<f64> = state
                    .info
                    .lower()
                    .iter()
                    .zip(state.info.upper())
                    .map(|(l, u)| u - l)
                    .collect();
                self.record(state.n_gen, state.population.xs(), Some(&scale), k);
                self.window_below(tol, k)
            }
            TerminationKind::FMovement { tol, k } => {
                self.record(state.n_gen, state.population.fs(), None, k);
                self.window_below(tol, k)
            }
        }
    }

    fn record(&mut self, n_gen: usize, current: Matrix, scale: Option<&[f64]>, k: usize) {
        if self.last_gen == Some(n_gen) {
            return;
        }
        self.last_gen = Some(n_gen);
        if let Some(prev) = &self.previous {
            self.window.push_back(movement(&current, prev, scale));
            while self.window.len() > k {
                self.window.pop_front();
            }
        }
        self.previous = Some(current);
    }

    fn window_below(&self, tol: f64, k: usize) -> bool {
        k > 0 && self.window.len() == k && self.window.iter().all(|&m| m < tol)
    }
}

/// Max over current points of the distance to the closest previous point.
/// Coordinates are divided by `scale` when given.
pub fn movement(current: &Matrix, previous: &Matrix, scale: Option<&[f64]>) -> f64 {
    current
        .iter()
        .map(|c| {
            previous
                .iter()
                .map(|p| {
                    c.iter()
                        .zip(p)
                        .enumerate()
                        .map(|(i, (a, b))| {
                            let d = a - b;
                            let d = scale.map_or(d, |s| d / s[i]);
                            d * d
                        })
                        .sum::<f64>()
                        .sqrt()
                })
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}
