//! Built-in test problems.
//!
//! Every built-in is written once against [`Real`], so the same formula
//! serves plain evaluation and forward-mode gradients.

mod demo;
mod single;
mod zdt;

use std::sync::Arc;

pub use demo::Demo;
pub use single::{Ackley, Himmelblau, Rastrigin, Rosenbrock, Sphere, Zakharov};
pub use zdt::{Zdt, ZdtKind, ZDT3_SEGMENTS, ZDT6_F1_MIN};

use crate::autodiff::{Dual, Real};
use crate::error::{Error, Result};
use crate::problem::{DualEvaluation, Evaluation, Problem, ProblemInfo};
use crate::Matrix;

/// Names accepted by [`make_problem`], in listing order.
pub const PROBLEM_NAMES: [&str; 12] = [
    "demo",
    "zdt1",
    "zdt2",
    "zdt3",
    "zdt4",
    "zdt6",
    "sphere",
    "rastrigin",
    "rosenbrock",
    "ackley",
    "himmelblau",
    "zakharov",
];

/// A problem whose objectives and inequality constraints are generic over [`Real`].
pub trait Formula: Send + Sync {
    fn info(&self) -> &ProblemInfo;

    /// Returns `(f, g)`; `g` may be left empty when `constraints` is false.
    fn compute<T: Real>(&self, x: &[T], constraints: bool) -> (Vec<T>, Vec<T>);

    fn front(&self, _n: usize) -> Option<Matrix> {
        None
    }
}

/// Adapts a [`Formula`] to the object-safe [`Problem`] trait.
#[derive(Debug, Clone)]
pub struct Builtin<P>(pub P);

impl<P: Formula> Problem for Builtin<P> {
    fn info(&self) -> &ProblemInfo {
        self.0.info()
    }

    fn evaluate(&self, x: &[f64]) -> Evaluation {
        let (f, g) = self.0.compute(x, true);
        Evaluation {
            f,
            g,
            h: Vec::new(),
        }
    }

    fn evaluate_dual(&self, x: &[Dual], constraints: bool) -> Option<DualEvaluation> {
        let (f, g) = self.0.compute(x, constraints);
        Some(DualEvaluation { f, g })
    }

    fn pareto_front(&self, n: usize) -> Option<Matrix> {
        self.0.front(n)
    }
}

fn scalable(name: &str) -> bool {
    !matches!(name, "demo" | "himmelblau")
}

/// Instantiates a built-in problem by name, optionally overriding `n_var`
/// for scalable problems.
pub fn make_problem(name: &str, n_var: Option<usize>) -> Result<Arc<dyn Problem>> {
    let key = name.to_ascii_lowercase();
    if !PROBLEM_NAMES.contains(&key.as_str()) {
        return Err(Error::UnknownProblem(name.to_string()));
    }
    if n_var.is_some() && !scalable(&key) {
        return Err(Error::NotScalable(key));
    }
    let problem: Arc<dyn Problem> = match key.as_str() {
        "demo" => Arc::new(Builtin(Demo::new())),
        "zdt1" => Arc::new(Builtin(Zdt::new(ZdtKind::Zdt1, n_var.unwrap_or(30))?)),
        "zdt2" => Arc::new(Builtin(Zdt::new(ZdtKind::Zdt2, n_var.unwrap_or(30))?)),
        "zdt3" => Arc::new(Builtin(Zdt::new(ZdtKind::Zdt3, n_var.unwrap_or(30))?)),
        "zdt4" => Arc::new(Builtin(Zdt::new(ZdtKind::Zdt4, n_var.unwrap_or(10))?)),
        "zdt6" => Arc::new(Builtin(Zdt::new(ZdtKind::Zdt6, n_var.unwrap_or(10))?)),
        "sphere" => Arc::new(Builtin(Sphere::new(n_var.unwrap_or(10))?)),
        "rastrigin" => Arc::new(Builtin(Rastrigin::new(n_var.unwrap_or(10))?)),
        "rosenbrock" => Arc::new(Builtin(Rosenbrock::new(n_var.unwrap_or(10))?)),
        "ackley" => Arc::new(Builtin(Ackley::new(n_var.unwrap_or(10))?)),
        "himmelblau" => Arc::new(Builtin(Himmelblau::new())),
        "zakharov" => Arc::new(Builtin(Zakharov::new(n_var.unwrap_or(10))?)),
        _ => unreachable!("name checked against PROBLEM_NAMES"),
    };
    Ok(problem)
}

/// `n_points` samples of a built-in problem's Pareto front.
pub fn analytic_front(name: &str, n_points: usize) -> Result<Matrix> {
    if n_points < 2 {
        return Err(Error::invalid("analytic front needs at least 2 points"));
    }
    make_problem(name, None)?
        .pareto_front(n_points)
        .ok_or_else(|| Error::NoAnalyticFront(name.to_string()))
}

/// `n` evenly spaced parameters across disjoint intervals, by total length.
pub(crate) fn spread_over(intervals: &[(f64, f64)], n: usize) -> Vec<f64> {
    let total: f64 = intervals.iter().map(|(a, b)| b - a).sum();
    (0..n)
        .map(|k| {
            let mut t = total * k as f64 / (n - 1) as f64;
            for (i, &(a, b)) in intervals.iter().enumerate() {
                let len = b - a;
                if t <= len || i + 1 == intervals.len() {
                    return a + t.min(len);
                }
                t -= len;
            }
            unreachable!()
        })
        .collect()
}
