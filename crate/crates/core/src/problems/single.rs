//! Classic unconstrained single-objective benchmarks.

use std::f64::consts::{E, PI};

use crate::autodiff::Real;
use crate::error::{Error, Result};
use crate::problem::ProblemInfo;

use super::Formula;

fn sum<T: Real>(it: impl Iterator<Item = T>) -> T {
    it.fold(T::constant(0.0), |acc, v| acc + v)
}

fn info(name: &str, n_var: usize, min_var: usize, low: f64, high: f64) -> Result<ProblemInfo> {
    if n_var < min_var {
        return Err(Error::invalid(format!(
            "{name} needs at least {min_var} variable(s), got {n_var}"
        )));
    }
    Ok(ProblemInfo::uniform_real(name, n_var, 1, 0, low, high)?.with_differentiable(true))
}

macro_rules! single_objective {
    ($(#[$doc:meta])* $ty:ident, $name:literal, $min_var:expr, $low:expr, $high:expr) => {
        $(#[$doc])*
        #[derive(Debug, Clone)]
        pub struct $ty {
            info: ProblemInfo,
        }

        impl $ty {
            pub fn new(n_var: usize) -> Result<Self> {
                Ok(Self { info: info($name, n_var, $min_var, $low, $high)? })
            }
        }
    };
}

single_objective!(
    /// `sum x_i^2`
    Sphere, "sphere", 1, -5.12, 5.12
);
single_objective!(
    /// `10 n + sum (x_i^2 - 10 cos(2 pi x_i))`
    Rastrigin, "rastrigin", 1, -5.12, 5.12
);
single_objective!(
    /// `sum 100 (x_{i+1} - x_i^2)^2 + (1 - x_i)^2`
    Rosenbrock, "rosenbrock", 2, -2.048, 2.048
);
single_objective!(Ackley, "ackley", 1, -32.768, 32.768);
single_objective!(Zakharov, "zakharov", 1, -5.0, 10.0);

impl Formula for Sphere {
    fn info(&self) -> &ProblemInfo {
        &self.info
    }
    fn compute<T: Real>(&self, x: &[T], _: bool) -> (Vec<T>, Vec<T>) {
        (vec![sum(x.iter().cloned().map(T::square))], Vec::new())
    }
}

impl Formula for Rastrigin {
    fn info(&self) -> &ProblemInfo {
        &self.info
    }
    fn compute<T: Real>(&self, x: &[T], _: bool) -> (Vec<T>, Vec<T>) {
        let s = sum(x
            .iter()
            .cloned()
            .map(|v| v.clone().square() - (v * (2.0 * PI)).cos() * 10.0));
        (vec![s + 10.0 * x.len() as f64], Vec::new())
    }
}

impl Formula for Rosenbrock {
    fn info(&self) -> &ProblemInfo {
        &self.info
    }
    fn compute<T: Real>(&self, x: &[T], _: bool) -> (Vec<T>, Vec<T>) {
        let s = sum(x.windows(2).map(|w| {
            let (a, b) = (w[0].clone(), w[1].clone());
            (b - a.clone().square()).square() * 100.0 + (-a + 1.0).square()
        }));
        (vec![s], Vec::new())
    }
}

impl Formula for Ackley {
    fn info(&self) -> &ProblemInfo {
        &self.info
    }
    fn compute<T: Real>(&self, x: &[T], _: bool) -> (Vec<T>, Vec<T>) {
        let n = x.len() as f64;
        let sq = sum(x.iter().cloned().map(T::square)) / n;
        let cs = sum(x.iter().cloned().map(|v| (v * (2.0 * PI)).cos())) / n;
        let f = -((sq.sqrt() * -0.2).exp() * 20.0) - cs.exp() + (20.0 + E);
        (vec![f], Vec::new())
    }
}

impl Formula for Zakharov {
    fn info(&self) -> &ProblemInfo {
        &self.info
    }
    fn compute<T: Real>(&self, x: &[T], _: bool) -> (Vec<T>, Vec<T>) {
        let sq = sum(x.iter().cloned().map(T::square));
        let lin = sum(x
            .iter()
            .enumerate()
            .map(|(i, v)| v.clone() * (0.5 * (i + 1) as f64)));
        (vec![sq + lin.clone().square() + lin.powi(4)], Vec::new())
    }
}

/// `(x^2 + y - 11)^2 + (x + y^2 - 7)^2` on `[-5, 5]^2`.
#[derive(Debug, Clone)]
pub struct Himmelblau {
    info: ProblemInfo,
}

impl Himmelblau {
    pub fn new() -> Self {
        Self {
            info: info("himmelblau", 2, 2, -5.0, 5.0).expect("static bounds"),
        }
    }
}

impl Default for Himmelblau {
    fn default() -> Self {
        Self::new()
    }
}

impl Formula for Himmelblau {
    fn info(&self) -> &ProblemInfo {
        &self.info
    }
    fn compute<T: Real>(&self, x: &[T], _: bool) -> (Vec<T>, Vec<T>) {
        let (a, b) = (x[0].clone(), x[1].clone());
        let f = (a.clone().square() + b.clone() - 11.0).square() + (a + b.square() - 7.0).square();
        (vec![f], Vec::new())
    }
}
