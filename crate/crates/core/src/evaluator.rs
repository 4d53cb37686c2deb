//! Batch evaluation with an evaluation counter.

use std::num::NonZeroUsize;
use std::sync::Arc;
use std::thread;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::population::Individual;
use crate::problem::{Evaluation, Problem};
use crate::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum EvalMode {
    /// The whole batch is evaluated in one call on the calling thread.
    #[default]
    Vectorized,
    /// Rows are spread over a pool of scoped worker threads.
    Threaded { n_threads: NonZeroUsize },
}

/// Objective, inequality and equality matrices of one batch, row-aligned with the input.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct BatchOutput {
    pub f: Matrix,
    pub g: Matrix,
    pub h: Matrix,
}

pub struct Evaluator {
    problem: Arc<dyn Problem>,
    mode: EvalMode,
    n_eval: usize,
}

impl Evaluator {
    pub fn new(problem: Arc<dyn Problem>, mode: EvalMode) -> Self {
        Self {
            problem,
            mode,
            n_eval: 0,
        }
    }

    pub fn problem(&self) -> &Arc<dyn Problem> {
        &self.problem
    }

    pub fn mode(&self) -> EvalMode {
        self.mode
    }

    pub fn n_eval(&self) -> usize {
        self.n_eval
    }

    /// Evaluates every row of `xs`, preserving order. The counter advances by
    /// `xs.len()` only when the whole batch succeeds.
    pub fn evaluate_batch(&mut self, xs: &[Vec<f64>]) -> Result<BatchOutput> {
        let evals = self.evaluate_rows(xs)?;
        let mut out = BatchOutput::default();
        for e in evals {
            out.f.push(e.f);
            out.g.push(e.g);
            out.h.push(e.h);
        }
        Ok(out)
    }

    /// Evaluates and wraps each row into an [`Individual`].
    pub fn evaluate_individuals(&mut self, xs: Vec<Vec<f64>>) -> Result<Vec<Individual>> {
        let evals = self.evaluate_rows(&xs)?;
        Ok(xs
            .into_iter()
            .zip(evals)
            .map(|(x, e)| Individual::from_evaluation(x, e))
            .collect())
    }

    fn evaluate_rows(&mut self, xs: &[Vec<f64>]) -> Result<Vec<Evaluation>> {
        if xs.is_empty() {
            return Err(Error::contract(
                "evaluation batch must contain at least one row",
            ));
        }
        let info = self.problem.info();
        if let Some((i, row)) = xs.iter().enumerate().find(|(_, r)| r.len() != info.n_var()) {
            return Err(Error::contract(format!(
                "row {i} has {} variables, problem `{}` expects {}",
                row.len(),
                info.name(),
                info.n_var()
            )));
        }

        let evals = match self.mode {
            EvalMode::Vectorized => xs.iter().map(|x| self.problem.evaluate(x)).collect(),
            EvalMode::Threaded { n_threads } => {
                evaluate_threaded(self.problem.as_ref(), xs, n_threads.get())
            }
        };

        for (row, e) in evals.iter().enumerate() {
            if e.f.len() != info.n_obj() || e.g.len() != info.n_ieq() || e.h.len() != info.n_eq() {
                return Err(Error::contract(format!(
                    "row {row}: problem returned ({}, {}, {}) values, expected ({}, {}, {})",
                    e.f.len(),
                    e.g.len(),
                    e.h.len(),
                    info.n_obj(),
                    info.n_ieq(),
                    info.n_eq()
                )));
            }
            if e.f.iter().chain(&e.g).chain(&e.h).any(|v| !v.is_finite()) {
                return Err(Error::NonFinite { row });
            }
        }
        self.n_eval += xs.len();
        Ok(evals)
    }
}

fn evaluate_threaded(problem: &dyn Problem, xs: &[Vec<f64>], n_threads: usize) -> Vec<Evaluation> {
    let chunk = xs.len().div_ceil(n_threads.min(xs.len()));
    thread::scope(|scope| {
        let handles: Vec<_> = xs
            .chunks(chunk)
            .map(|rows| {
                scope.spawn(move || rows.iter().map(|x| problem.evaluate(x)).collect::<Vec<_>>())
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("evaluation thread panicked"))
            .collect()
    })
}
