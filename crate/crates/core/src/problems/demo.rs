use crate::autodiff::Real;
use crate::problem::ProblemInfo;
use crate::Matrix;

use super::{spread_over, Formula};

/// Constrained bi-objective problem on `[-2, 2]^2` with a disconnected
/// Pareto set `{0.1 <= x1 <= 0.4 or 0.6 <= x1 <= 0.9, x2 = 0}`.
///
/// Both constraints are normalized by their constant terms (0.18 and 4.8).
#[derive(Debug, Clone)]
pub struct Demo {
    info: ProblemInfo,
}

impl Demo {
    pub fn new() -> Self {
        let info = ProblemInfo::uniform_real("demo", 2, 2, 2, -2.0, 2.0)
            .expect("static bounds")
            .with_differentiable(true);
        Self { info }
    }
}

impl Default for Demo {
    fn default() -> Self {
        Self::new()
    }
}

impl Formula for Demo {
    fn info(&self) -> &ProblemInfo {
        &self.info
    }

    fn compute<T: Real>(&self, x: &[T], constraints: bool) -> (Vec<T>, Vec<T>) {
        let (x1, x2) = (x[0].clone(), x[1].clone());
        let f1 = x1.clone().square() + x2.clone().square();
        let f2 = (x1.clone() - 1.0).square() + x2.square();
        let g = if constraints {
            let g1 = (x1.clone() - 0.1) * (x1.clone() - 0.9) * 2.0 / 0.18;
            let g2 = -((x1.clone() - 0.4) * (x1 - 0.6) * 20.0) / 4.8;
            vec![g1, g2]
        } else {
            Vec::new()
        };
        (vec![f1, f2], g)
    }

    fn front(&self, n: usize) -> Option<Matrix> {
        let xs = spread_over(&[(0.1, 0.4), (0.6, 0.9)], n);
        Some(
            xs.into_iter()
                .map(|x1| vec![x1 * x1, (x1 - 1.0) * (x1 - 1.0)])
                .collect(),
        )
    }
}
