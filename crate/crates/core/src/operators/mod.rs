//! Sampling, crossover, mutation and selection, plus the serializable
//! [`OperatorSet`] that wires them together.

mod crossover;
mod mutation;
mod sampling;
mod selection;

pub use crossover::{
    crossover_hux, crossover_point, crossover_sbx, crossover_sbx_int, crossover_ux, one_point_at,
    sbx_beta, sbx_children, two_point_at, PointKind, SbxParams, INT_EPS,
};
pub use mutation::{
    mutate_bitflip, mutate_polynomial, mutate_polynomial_int, polynomial_shift, PolyMutationParams,
};
pub use sampling::{sample_lhs, sample_random};
pub use selection::{ga_compare, nsga2_compare, tournament_select, Comparator};

pub(crate) use sampling::random_point;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problem::{ProblemInfo, VarKind};
use crate::rng::Rng;
use crate::Matrix;

fn default_crossover_prob() -> f64 {
    0.9
}
fn default_sbx_eta() -> f64 {
    15.0
}
fn default_sbx_prob_per_var() -> f64 {
    0.5
}
fn default_pm_eta() -> f64 {
    20.0
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Sampling {
    #[default]
    Random,
    Lhs,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Crossover {
    OnePoint {
        #[serde(default = "default_crossover_prob")]
        prob: f64,
    },
    TwoPoint {
        #[serde(default = "default_crossover_prob")]
        prob: f64,
    },
    Ux {
        #[serde(default = "default_crossover_prob")]
        prob: f64,
    },
    Hux {
        #[serde(default = "default_crossover_prob")]
        prob: f64,
    },
    Sbx {
        #[serde(default = "default_sbx_eta")]
        eta: f64,
        /// Probability that a mating pair is recombined at all.
        #[serde(default = "default_crossover_prob")]
        prob: f64,
        #[serde(default = "default_sbx_prob_per_var")]
        prob_per_var: f64,
    },
}

impl Crossover {
    pub fn sbx_default() -> Self {
        Crossover::Sbx {
            eta: default_sbx_eta(),
            prob: default_crossover_prob(),
            prob_per_var: default_sbx_prob_per_var(),
        }
    }

    fn prob(&self) -> f64 {
        match *self {
            Crossover::OnePoint { prob }
            | Crossover::TwoPoint { prob }
            | Crossover::Ux { prob }
            | Crossover::Hux { prob }
            | Crossover::Sbx { prob, .. } => prob,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Mutation {
    Polynomial {
        #[serde(default = "default_pm_eta")]
        eta: f64,
        #[serde(default)]
        prob_per_var: Option<f64>,
    },
    Bitflip {
        /// Defaults to `1 / N`.
        #[serde(default)]
        prob: Option<f64>,
    },
    None,
}

impl Mutation {
    pub fn polynomial_default() -> Self {
        Mutation::Polynomial {
            eta: default_pm_eta(),
            prob_per_var: None,
        }
    }
}

/// Sampling, crossover and mutation used by an algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorSet {
    #[serde(default)]
    pub sampling: Sampling,
    pub crossover: Crossover,
    pub mutation: Mutation,
}

fn check_prob(name: &str, p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::Config(format!("{name} must lie in [0, 1], got {p}")))
    }
}

fn check_eta(name: &str, eta: f64) -> Result<()> {
    if eta > 0.0 && eta.is_finite() {
        Ok(())
    } else {
        Err(Error::Config(format!("{name} must be positive, got {eta}")))
    }
}

impl OperatorSet {
    /// SBX + polynomial mutation for real/integer problems; two-point +
    /// bitflip for binary ones.
    pub fn default_for(kind: VarKind) -> Self {
        match kind {
            VarKind::Real | VarKind::Integer => Self {
                sampling: Sampling::Random,
                crossover: Crossover::sbx_default(),
                mutation: Mutation::polynomial_default(),
            },
            VarKind::Binary => Self {
                sampling: Sampling::Random,
                crossover: Crossover::TwoPoint {
                    prob: default_crossover_prob(),
                },
                mutation: Mutation::Bitflip { prob: None },
            },
        }
    }

    /// Rejects parameter values and operator/variable-kind combinations that cannot work.
    pub fn validate(&self, info: &ProblemInfo) -> Result<()> {
        let kind = info.var_kind();
        if self.sampling == Sampling::Lhs && kind != VarKind::Real {
            return Err(Error::Config(format!(
                "lhs sampling requires real variables, problem has {kind}"
            )));
        }
        check_prob("crossover.prob", self.crossover.prob())?;
        match self.crossover {
            Crossover::Sbx {
                eta, prob_per_var, ..
            } => {
                check_eta("crossover.eta", eta)?;
                check_prob("crossover.prob_per_var", prob_per_var)?;
                if kind == VarKind::Binary {
                    return Err(Error::Config(
                        "sbx crossover cannot recombine binary variables".into(),
                    ));
                }
            }
            Crossover::OnePoint { .. } | Crossover::TwoPoint { .. } if info.n_var() < 2 => {
                return Err(Error::Config(
                    "point crossover needs at least two variables".into(),
                ));
            }
            _ => {}
        }
        match self.mutation {
            Mutation::Polynomial { eta, prob_per_var } => {
                check_eta("mutation.eta", eta)?;
                if let Some(p) = prob_per_var {
                    check_prob("mutation.prob_per_var", p)?;
                }
                if kind == VarKind::Binary {
                    return Err(Error::Config(
                        "polynomial mutation cannot act on binary variables".into(),
                    ));
                }
            }
            Mutation::Bitflip { prob } => {
                if let Some(p) = prob {
                    check_prob("mutation.prob", p)?;
                }
                if kind != VarKind::Binary {
                    return Err(Error::Config(format!(
                        "bitflip mutation requires binary variables, problem has {kind}"
                    )));
                }
            }
            Mutation::None => {}
        }
        Ok(())
    }

    pub fn sample(&self, info: &ProblemInfo, n: usize, rng: &mut Rng) -> Result<Matrix> {
        match self.sampling {
            Sampling::Random => Ok(sample_random(info, n, rng)),
            Sampling::Lhs => sample_lhs(info, n, rng),
        }
    }

    /// Crossover (applied with the configured probability) followed by mutation of both children.
    pub fn mate(
        &self,
        a: &[f64],
        b: &[f64],
        info: &ProblemInfo,
        rng: &mut Rng,
    ) -> (Vec<f64>, Vec<f64>) {
        let (lower, upper) = (info.lower(), info.upper());
        let (c1, c2) = if rng.bernoulli(self.crossover.prob()) {
            match self.crossover {
                Crossover::OnePoint { .. } => crossover_point(a, b, PointKind::OnePoint, rng),
                Crossover::TwoPoint { .. } => crossover_point(a, b, PointKind::TwoPoint, rng),
                Crossover::Ux { .. } => crossover_ux(a, b, rng),
                Crossover::Hux { .. } => crossover_hux(a, b, rng),
                Crossover::Sbx {
                    eta, prob_per_var, ..
                } => {
                    let params = SbxParams { eta, prob_per_var };
                    if info.var_kind() == VarKind::Integer {
                        crossover_sbx_int(a, b, params, lower, upper, rng)
                    } else {
                        crossover_sbx(a, b, params, lower, upper, rng)
                    }
                }
            }
        } else {
            (a.to_vec(), b.to_vec())
        };
        (self.mutate(c1, info, rng), self.mutate(c2, info, rng))
    }

    fn mutate(&self, x: Vec<f64>, info: &ProblemInfo, rng: &mut Rng) -> Vec<f64> {
        match self.mutation {
            Mutation::Polynomial { eta, prob_per_var } => {
                let params = PolyMutationParams {
                    eta_m: eta,
                    prob_per_var,
                };
                if info.var_kind() == VarKind::Integer {
                    mutate_polynomial_int(&x, params, info.lower(), info.upper(), rng)
                } else {
                    mutate_polynomial(&x, params, info.lower(), info.upper(), rng)
                }
            }
            Mutation::Bitflip { prob } => {
                mutate_bitflip(&x, prob.unwrap_or(1.0 / x.len() as f64), rng)
            }
            Mutation::None => x,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_parses_with_defaults() {
        let c: Crossover =
            serde_json::from_str(r#"{"kind": "sbx", "eta": 15, "prob": 0.9}"#).unwrap();
        assert_eq!(c, Crossover::sbx_default());
        let m: Mutation = serde_json::from_str(r#"{"kind": "polynomial"}"#).unwrap();
        assert_eq!(m, Mutation::polynomial_default());
        assert!(serde_json::from_str::<Crossover>(r#"{"kind": "sbx", "etaa": 1}"#).is_err());
        assert!(serde_json::from_str::<Crossover>(r#"{"kind": "blend"}"#).is_err());
    }

    #[test]
    fn validation_catches_kind_mismatch() {
        let real = ProblemInfo::uniform_real("r", 3, 1, 0, 0.0, 1.0).unwrap();
        let bin =
            ProblemInfo::new("b", 1, 0, 0, vec![0.0; 3], vec![1.0; 3], VarKind::Binary).unwrap();
        assert!(OperatorSet::default_for(VarKind::Real)
            .validate(&real)
            .is_ok());
        assert!(OperatorSet::default_for(VarKind::Binary)
            .validate(&bin)
            .is_ok());
        assert!(OperatorSet::default_for(VarKind::Real)
            .validate(&bin)
            .is_err());
        assert!(OperatorSet::default_for(VarKind::Binary)
            .validate(&real)
            .is_err());
        let mut bad = OperatorSet::default_for(VarKind::Real);
        bad.crossover = Crossover::Sbx {
            eta: 0.0,
            prob: 0.9,
            prob_per_var: 0.5,
        };
        assert!(bad.validate(&real).is_err());
    }

    #[test]
    fn mating_respects_bounds_and_kind() {
        let mut rng = Rng::seed_from(4);
        let int =
            ProblemInfo::new("i", 1, 0, 0, vec![-3.0; 4], vec![7.0; 4], VarKind::Integer).unwrap();
        let ops = OperatorSet::default_for(VarKind::Integer);
        let bin =
            ProblemInfo::new("b", 1, 0, 0, vec![0.0; 6], vec![1.0; 6], VarKind::Binary).unwrap();
        let bops = OperatorSet::default_for(VarKind::Binary);
        for _ in 0..500 {
            let pop = sample_random(&int, 2, &mut rng);
            let (c1, c2) = ops.mate(&pop[0], &pop[1], &int, &mut rng);
            for v in c1.iter().chain(&c2) {
                assert!(v.fract() == 0.0 && (-3.0..=7.0).contains(v));
            }
            let pop = sample_random(&bin, 2, &mut rng);
            let (c1, c2) = bops.mate(&pop[0], &pop[1], &bin, &mut rng);
            assert!(c1.iter().chain(&c2).all(|&v| v == 0.0 || v == 1.0));
        }
    }
}
