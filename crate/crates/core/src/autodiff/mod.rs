//! Forward-mode automatic differentiation over dual numbers, plus a
//! central-difference oracle used to cross-check it.

mod dual;

pub use dual::{Dual, Real};

use crate::error::{Error, Result};
use crate::problem::Problem;
use crate::Matrix;

/// Which Jacobians to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Request {
    pub df: bool,
    pub dg: bool,
}

impl Request {
    pub const F: Request = Request {
        df: true,
        dg: false,
    };
    pub const G: Request = Request {
        df: false,
        dg: true,
    };
    pub const FG: Request = Request { df: true, dg: true };
}

/// Jacobians of objectives (`M x N`) and inequality constraints (`J x N`).
/// Row `m` of `df` is the gradient of `f_m`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GradientBundle {
    pub df: Option<Matrix>,
    pub dg: Option<Matrix>,
}

/// Exact derivatives of a differentiable problem at `x`.
pub fn gradients(problem: &dyn Problem, x: &[f64], want: Request) -> Result<GradientBundle> {
    let info = problem.info();
    if !info.differentiable() {
        return Err(Error::GradientsUnavailable(info.name().to_string()));
    }
    if x.len() != info.n_var() {
        return Err(Error::contract(format!(
            "point has {} coordinates, problem `{}` expects {}",
            x.len(),
            info.name(),
            info.n_var()
        )));
    }
    let n = x.len();
    let out = problem
        .evaluate_dual(&Dual::seed(x), want.dg)
        .ok_or_else(|| Error::GradientsUnavailable(info.name().to_string()))?;
    let jac = |rows: &[Dual]| rows.iter().map(|d| d.gradient(n)).collect::<Matrix>();
    Ok(GradientBundle {
        df: want.df.then(|| jac(&out.f)),
        dg: want.dg.then(|| jac(&out.g)),
    })
}

/// Central differences `(f(x + h e_i) - f(x - h e_i)) / 2h`. Points closer
/// than `h` to a bound are shifted inward so both probes stay feasible.
pub fn finite_difference_oracle(problem: &dyn Problem, x: &[f64], h: f64) -> GradientBundle {
    let info = problem.info();
    let n = info.n_var();
    let mut df = vec![vec![0.0; n]; info.n_obj()];
    let mut dg = vec![vec![0.0; n]; info.n_ieq()];
    for i in 0..n {
        let center = x[i].clamp(info.lower()[i] + h, info.upper()[i] - h);
        let mut plus = x.to_vec();
        let mut minus = x.to_vec();
        plus[i] = center + h;
        minus[i] = center - h;
        let (ep, em) = (problem.evaluate(&plus), problem.evaluate(&minus));
        for (m, row) in df.iter_mut().enumerate() {
            row[i] = (ep.f[m] - em.f[m]) / (2.0 * h);
        }
        for (j, row) in dg.iter_mut().enumerate() {
            row[i] = (ep.g[j] - em.g[j]) / (2.0 * h);
        }
    }
    GradientBundle {
        df: Some(df),
        dg: (info.n_ieq() > 0).then_some(dg),
    }
}
