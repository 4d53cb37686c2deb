//! Problem abstraction: minimize `f_m(x)` subject to `g_j(x) <= 0`,
//! `h_k(x) = 0` and box bounds on every variable.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::autodiff::Dual;
use crate::error::{Error, Result};
use crate::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VarKind {
    Real,
    Integer,
    Binary,
}

impl fmt::Display for VarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VarKind::Real => "real",
            VarKind::Integer => "integer",
            VarKind::Binary => "binary",
        })
    }
}

/// Dimensions, bounds and variable kind of a problem.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemInfo {
    name: String,
    n_obj: usize,
    n_ieq: usize,
    n_eq: usize,
    lower: Vec<f64>,
    upper: Vec<f64>,
    var_kind: VarKind,
    differentiable: bool,
}

impl ProblemInfo {
    pub fn new(
        name: impl Into<String>,
        n_obj: usize,
        n_ieq: usize,
        n_eq: usize,
        lower: Vec<f64>,
        upper: Vec<f64>,
        var_kind: VarKind,
    ) -> Result<Self> {
        if lower.is_empty() {
            return Err(Error::contract("problem needs at least one variable"));
        }
        if n_obj == 0 {
            return Err(Error::contract("problem needs at least one objective"));
        }
        if lower.len() != upper.len() {
            return Err(Error::contract(format!(
                "bounds length mismatch: {} lower vs {} upper",
                lower.len(),
                upper.len()
            )));
        }
        let (lower, upper) = if var_kind == VarKind::Binary {
            (vec![0.0; lower.len()], vec![1.0; upper.len()])
        } else {
            for (i, (l, u)) in lower.iter().zip(&upper).enumerate() {
                if !(l < u) || !l.is_finite() || !u.is_finite() {
                    return Err(Error::contract(format!(
                        "variable {i}: lower bound {l} must be finite and below upper bound {u}"
                    )));
                }
            }
            (lower, upper)
        };
        Ok(Self {
            name: name.into(),
            n_obj,
            n_ieq,
            n_eq,
            lower,
            upper,
            var_kind,
            differentiable: false,
        })
    }

    /// Same bounds `[low, high]` on all `n_var` real variables.
    pub fn uniform_real(
        name: impl Into<String>,
        n_var: usize,
        n_obj: usize,
        n_ieq: usize,
        low: f64,
        high: f64,
    ) -> Result<Self> {
        Self::new(
            name,
            n_obj,
            n_ieq,
            0,
            vec![low; n_var],
            vec![high; n_var],
            VarKind::Real,
        )
    }

    pub fn with_differentiable(mut self, differentiable: bool) -> Self {
        self.differentiable = differentiable;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn n_var(&self) -> usize {
        self.lower.len()
    }
    pub fn n_obj(&self) -> usize {
        self.n_obj
    }
    pub fn n_ieq(&self) -> usize {
        self.n_ieq
    }
    pub fn n_eq(&self) -> usize {
        self.n_eq
    }
    pub fn n_constr(&self) -> usize {
        self.n_ieq + self.n_eq
    }
    pub fn lower(&self) -> &[f64] {
        &self.lower
    }
    pub fn upper(&self) -> &[f64] {
        &self.upper
    }
    pub fn var_kind(&self) -> VarKind {
        self.var_kind
    }
    pub fn differentiable(&self) -> bool {
        self.differentiable
    }

    pub fn in_bounds(&self, x: &[f64]) -> bool {
        x.len() == self.n_var()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (l, u))| *l <= *v && *v <= *u)
    }

    /// Clamps each coordinate into its bounds.
    pub fn clamp(&self, x: &mut [f64]) {
        for (v, (l, u)) in x.iter_mut().zip(self.lower.iter().zip(&self.upper)) {
            *v = v.clamp(*l, *u);
        }
    }
}

/// Output of evaluating one decision vector.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Evaluation {
    pub f: Vec<f64>,
    pub g: Vec<f64>,
    pub h: Vec<f64>,
}

/// Objective and inequality values carried as dual numbers.
#[derive(Debug, Clone)]
pub struct DualEvaluation {
    pub f: Vec<Dual>,
    pub g: Vec<Dual>,
}

/// An optimization problem. Implementations must be pure: the same `x`
/// always produces the same output, and evaluation may run on any thread.
pub trait Problem: Send + Sync {
    fn info(&self) -> &ProblemInfo;

    fn evaluate(&self, x: &[f64]) -> Evaluation;

    /// Dual-number evaluation for problems written against [`crate::autodiff::Real`].
    /// `constraints == false` lets implementations skip `g`.
    fn evaluate_dual(&self, _x: &[Dual], _constraints: bool) -> Option<DualEvaluation> {
        None
    }

    /// `n` evenly parameterized points on the true Pareto front, if known.
    fn pareto_front(&self, _n: usize) -> Option<Matrix> {
        None
    }
}

type EvalFn = dyn Fn(&[f64], &mut Evaluation) + Send + Sync;

/// Problem defined by a closure that fills `f`, `g` and `h`.
pub struct FnProblem {
    info: ProblemInfo,
    func: Box<EvalFn>,
}

impl FnProblem {
    pub fn new<F>(info: ProblemInfo, func: F) -> Self
    where
        F: Fn(&[f64], &mut Evaluation) + Send + Sync + 'static,
    {
        Self {
            info,
            func: Box::new(func),
        }
    }
}

impl fmt::Debug for FnProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FnProblem")
            .field("info", &self.info)
            .finish()
    }
}

impl Problem for FnProblem {
    fn info(&self) -> &ProblemInfo {
        &self.info
    }

    fn evaluate(&self, x: &[f64]) -> Evaluation {
        let mut out = Evaluation {
            f: vec![0.0; self.info.n_obj],
            g: vec![0.0; self.info.n_ieq],
            h: vec![0.0; self.info.n_eq],
        };
        (self.func)(x, &mut out);
        out
    }
}
