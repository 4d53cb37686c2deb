use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::evaluator::{EvalMode, Evaluator};
use crate::indicators::igd;
use crate::population::{Individual, Population};
use crate::problem::Problem;
use crate::rng::Rng;
use crate::termination::{Progress, Termination, TerminationKind};
use crate::Matrix;

use super::sorting::sort_individuals;
use super::survival::ga_order;
use super::{initialize, step, AlgorithmConfig, AlgorithmKind};

/// Evaluation budget that stops runs whose termination never fires.
pub const DEFAULT_EVAL_CAP: usize = 10_000_000;

/// Points sampled from an analytic front for progress IGD.
const PROGRESS_FRONT_POINTS: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunOptions {
    pub eval_mode: EvalMode,
    pub max_evals_cap: usize,
    pub save_history: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            eval_mode: EvalMode::Vectorized,
            max_evals_cap: DEFAULT_EVAL_CAP,
            save_history: false,
        }
    }
}

/// Per-generation progress line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenerationReport {
    pub n_gen: usize,
    pub n_eval: usize,
    pub igd: Option<f64>,
}

impl fmt::Display for GenerationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gen={} evals={}", self.n_gen, self.n_eval)?;
        if let Some(v) = self.igd {
            write!(f, " igd={v:.6e}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct RunResult {
    /// Feasible non-dominated members (NSGA-II) or the single best member (GA).
    pub final_set: Vec<Individual>,
    pub population: Population,
    /// Population after every generation, starting at generation 0; empty unless requested.
    pub history: Vec<Population>,
    pub n_eval: usize,
    pub n_gen: usize,
}

/// Result selection: the non-dominated members among those with the lowest
/// violation (all feasible ones when any exist); for the GA only the best.
pub fn final_set(kind: AlgorithmKind, members: &[Individual]) -> Vec<Individual> {
    if members.is_empty() {
        return Vec::new();
    }
    match kind {
        AlgorithmKind::Ga => {
            let best = members
                .iter()
                .min_by(|a, b| ga_order(a, b))
                .expect("non-empty");
            vec![best.clone()]
        }
        AlgorithmKind::Nsga2 => {
            let min_cv = members.iter().map(|m| m.cv).fold(f64::INFINITY, f64::min);
            let pool: Vec<Individual> =
                members.iter().filter(|m| m.cv <= min_cv).cloned().collect();
            let fronts = sort_individuals(&pool);
            fronts[0].iter().map(|&i| pool[i].clone()).collect()
        }
    }
}

/// Runs `kind` on `problem` until `termination` fires or the evaluation cap
/// is reached. `observer` receives one report per generation.
pub fn run(
    problem: Arc<dyn Problem>,
    kind: AlgorithmKind,
    config: &AlgorithmConfig,
    termination: TerminationKind,
    options: &RunOptions,
    mut observer: Option<&mut dyn FnMut(&GenerationReport)>,
) -> Result<RunResult> {
    let info = problem.info().clone();
    config.validate(&info)?;
    if kind == AlgorithmKind::Ga && info.n_obj() != 1 {
        return Err(Error::Config(format!(
            "ga is single-objective, problem `{}` has {} objectives",
            info.name(),
            info.n_obj()
        )));
    }

    let front: Option<Matrix> = if info.n_obj() > 1 {
        problem.pareto_front(PROGRESS_FRONT_POINTS)
    } else {
        None
    };
    let mut evaluator = Evaluator::new(problem, options.eval_mode);
    let mut rng = Rng::seed_from(config.seed);
    let mut termination = Termination::new(termination);
    let mut history = Vec::new();

    let mut pop = initialize(kind, config, &mut evaluator, &mut rng)?;
    loop {
        if let Some(obs) = observer.as_deref_mut() {
            let igd = front.as_ref().and_then(|pf| {
                let fs: Matrix = final_set(kind, &pop.members)
                    .into_iter()
                    .map(|m| m.f)
                    .collect();
                igd(&fs, pf).ok()
            });
            obs(&GenerationReport {
                n_gen: pop.generation,
                n_eval: evaluator.n_eval(),
                igd,
            });
        }
        if options.save_history {
            history.push(pop.clone());
        }
        let progress = Progress {
            n_gen: pop.generation,
            n_eval: evaluator.n_eval(),
            population: &pop,
            info: &info,
        };
        if termination.should_stop(&progress) || evaluator.n_eval() >= options.max_evals_cap {
            break;
        }
        step(kind, &mut pop, config, &mut evaluator, &mut rng)?;
    }

    Ok(RunResult {
        final_set: final_set(kind, &pop.members),
        n_eval: evaluator.n_eval(),
        n_gen: pop.generation,
        population: pop,
        history,
    })
}
