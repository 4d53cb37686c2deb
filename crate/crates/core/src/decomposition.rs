//! Scalarization of objective vectors.
//!
//! Weights are used exactly as given; they are not rescaled to sum to one.
//! Objective normalization (by ideal/nadir) is the caller's job.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_THETA: f64 = 5.0;
pub const DEFAULT_RHO: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    WeightedSum,
    Tchebysheff,
    Asf,
    Aasf,
    Pbi,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::WeightedSum,
        Method::Tchebysheff,
        Method::Asf,
        Method::Aasf,
        Method::Pbi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::WeightedSum => "weighted_sum",
            Method::Tchebysheff => "tchebysheff",
            Method::Asf => "asf",
            Method::Aasf => "aasf",
            Method::Pbi => "pbi",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown decomposition method `{s}`")))
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Weights, ideal point and method parameters shared across many `f`.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub method: Method,
    pub weights: Vec<f64>,
    pub ideal: Vec<f64>,
    pub theta: f64,
    pub rho: f64,
}

impl Decomposition {
    /// Ideal point at the origin, default `theta` and `rho`.
    pub fn new(method: Method, weights: Vec<f64>) -> Self {
        let m = weights.len();
        Self {
            method,
            weights,
            ideal: vec![0.0; m],
            theta: DEFAULT_THETA,
            rho: DEFAULT_RHO,
        }
    }

    pub fn with_ideal(mut self, ideal: Vec<f64>) -> Self {
        self.ideal = ideal;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let m = self.weights.len();
        if m == 0 {
            return Err(Error::invalid("weights are empty"));
        }
        if self.ideal.len() != m {
            return Err(Error::invalid(format!(
                "ideal point has {} entries, weights have {m}",
                self.ideal.len()
            )));
        }
        if self.weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::invalid("weights must be finite and non-negative"));
        }
        if self.weights.iter().all(|&w| w == 0.0) {
            return Err(Error::invalid("weights are all zero"));
        }
        if matches!(self.method, Method::Asf | Method::Aasf) && self.weights.contains(&0.0) {
            return Err(Error::invalid(format!(
                "{} needs strictly positive weights",
                self.method
            )));
        }
        if !(self.theta > 0.0) || !(self.rho > 0.0) {
            return Err(Error::invalid("theta and rho must be positive"));
        }
        Ok(())
    }

    pub fn apply(&self, f: &[f64]) -> Result<f64> {
        self.validate()?;
        if f.len() != self.weights.len() {
            return Err(Error::invalid(format!(
                "objective vector has {} entries, weights have {}",
                f.len(),
                self.weights.len()
            )));
        }
        Ok(self.eval(f))
    }

    fn eval(&self, f: &[f64]) -> f64 {
        let w = &self.weights;
        let diff = || f.iter().zip(&self.ideal).map(|(a, z)| a - z);
        match self.method {
            Method::WeightedSum => f.iter().zip(w).map(|(a, b)| a * b).sum(),
            Method::Tchebysheff => diff()
                .zip(w)
                .map(|(d, b)| b * d.abs())
                .fold(f64::NEG_INFINITY, f64::max),
            Method::Asf => asf(diff(), w),
            Method::Aasf => {
                let sum: f64 = diff().zip(w).map(|(d, b)| d / b).sum();
                asf(diff(), w) + self.rho * sum
            }
            Method::Pbi => {
                let norm = w.iter().map(|b| b * b).sum::<f64>().sqrt();
                let d1 = diff().zip(w).map(|(d, b)| d * b).sum::<f64>() / norm;
                let d2 = diff()
                    .zip(w)
                    .map(|(d, b)| {
                        let r = d - d1 * b / norm;
                        r * r
                    })
                    .sum::<f64>()
                    .sqrt();
                d1 + self.theta * d2
            }
        }
    }
}

fn asf(diff: impl Iterator<Item = f64>, w: &[f64]) -> f64 {
    diff.zip(w)
        .map(|(d, b)| d / b)
        .fold(f64::NEG_INFINITY, f64::max)
}

/// One-shot scalarization with default parameters.
pub fn decompose(method: Method, f: &[f64], weights: &[f64], ideal: &[f64]) -> Result<f64> {
    Decomposition::new(method, weights.to_vec())
        .with_ideal(ideal.to_vec())
        .apply(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn pinned_values() {
        let z = [0.0, 0.0];
        assert!(close(
            decompose(Method::WeightedSum, &[0.5, 0.5], &[0.5, 0.5], &z).unwrap(),
            0.5
        ));
        assert!(close(
            decompose(Method::Tchebysheff, &[0.2, 0.6], &[1.0, 1.0], &z).unwrap(),
            0.6
        ));
        assert!(close(
            decompose(Method::Pbi, &[1.0, 1.0], &[1.0, 1.0], &z).unwrap(),
            2f64.sqrt()
        ));
        assert!(close(
            decompose(Method::Pbi, &[1.0, 1.0], &[1.0, 0.0], &z).unwrap(),
            6.0
        ));
        assert!(close(
            decompose(Method::Aasf, &[0.2, 0.6], &[1.0, 1.0], &z).unwrap(),
            0.60008
        ));
    }

    #[test]
    fn rejections() {
        let z = [0.0, 0.0];
        assert!(decompose(Method::Asf, &[1.0, 1.0], &[1.0, 0.0], &z).is_err());
        assert!(decompose(Method::Aasf, &[1.0, 1.0], &[0.0, 1.0], &z).is_err());
        assert!(decompose(Method::WeightedSum, &[1.0, 1.0], &[0.0, 0.0], &z).is_err());
        assert!(decompose(Method::Tchebysheff, &[1.0], &[1.0, 1.0], &z).is_err());
        assert!(decompose(Method::Pbi, &[1.0, 1.0], &[-1.0, 1.0], &z).is_err());
    }

    #[test]
    fn parse_names() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("lp".parse::<Method>().is_err());
    }

    fn instance() -> impl Strategy<Value = (Vec<f64>, Vec<f64>, Vec<f64>)> {
        (1usize..5).prop_flat_map(|m| {
            (
                prop::collection::vec(0.0f64..5.0, m),
                prop::collection::vec(0.05f64..2.0, m),
                prop::collection::vec(-1.0f64..1.0, m),
            )
        })
    }

    proptest! {
        #[test]
        fn zero_at_ideal((_f, w, z) in instance()) {
            for m in Method::ALL {
                let ideal = if m == Method::WeightedSum { vec![0.0; w.len()] } else { z.clone() };
                let v = decompose(m, &ideal, &w, &ideal).unwrap();
                prop_assert!(v.abs() < 1e-12);
            }
        }

        #[test]
        fn monotone_under_dominance((f, w, z) in instance(), k in 0usize..5, delta in 0.01f64..1.0) {
            let f: Vec<f64> = f.iter().zip(&z).map(|(a, b)| a.max(0.0) + b.max(0.0) + 0.5).collect();
            let z: Vec<f64> = z.iter().map(|b| b.max(0.0)).collect();
            let mut better = f.clone();
            let i = k % f.len();
            better[i] = (better[i] - delta).max(z[i]);
            for m in [Method::WeightedSum, Method::Tchebysheff, Method::Asf, Method::Aasf] {
                let a = decompose(m, &better, &w, &z).unwrap();
                let b = decompose(m, &f, &w, &z).unwrap();
                prop_assert!(a <= b + 1e-12);
                if m == Method::Aasf && better[i] < f[i] {
                    prop_assert!(a < b);
                }
            }
        }

        #[test]
        fn pbi_on_ray_has_no_perpendicular_part((_f, w, z) in instance(), t in 0.0f64..10.0) {
            let f: Vec<f64> = z.iter().zip(&w).map(|(a, b)| a + t * b).collect();
            let norm = w.iter().map(|b| b * b).sum::<f64>().sqrt();
            let v = decompose(Method::Pbi, &f, &w, &z).unwrap();
            prop_assert!((v - t * norm).abs() < 1e-9 * (1.0 + t * norm));
        }

        #[test]
        fn tchebysheff_is_large_p_limit((f, w, z) in instance()) {
            let terms: Vec<f64> = f.iter().zip(&z).zip(&w).map(|((a, b), c)| c * (a - b).abs()).collect();
            let max = decompose(Method::Tchebysheff, &f, &w, &z).unwrap();
            let p = 64.0;
            let lp = terms.iter().map(|t| t.powf(p)).sum::<f64>().powf(1.0 / p);
            prop_assert!(lp >= max - 1e-12);
            prop_assert!(lp <= max * (terms.len() as f64).powf(1.0 / p) + 1e-12);
        }
    }
}
