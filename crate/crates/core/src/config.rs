//! JSON run configuration and the run-to-disk driver.

use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evaluator::EvalMode;
use crate::io::write_file;
use crate::moea::{
    run, AlgorithmConfig, AlgorithmKind, GenerationReport, RunOptions, RunResult,
    DEFAULT_DUPLICATE_TOL, DEFAULT_EVAL_CAP,
};
use crate::operators::{Crossover, Mutation, OperatorSet, Sampling};
use crate::population::to_csv;
use crate::problems::make_problem;
use crate::termination::TerminationKind;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemConfig {
    pub name: String,
    #[serde(default)]
    pub n_var: Option<usize>,
}

fn yes() -> bool {
    true
}

fn default_output_dir() -> PathBuf {
    PathBuf::from("output")
}

fn default_cap() -> usize {
    DEFAULT_EVAL_CAP
}

fn default_dup_tol() -> f64 {
    DEFAULT_DUPLICATE_TOL
}

/// Everything needed to reproduce a run. Unknown keys are rejected.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub problem: ProblemConfig,
    pub algorithm: AlgorithmKind,
    pub pop_size: usize,
    /// Defaults to `pop_size`.
    #[serde(default)]
    pub n_offsprings: Option<usize>,
    #[serde(default = "yes")]
    pub eliminate_duplicates: bool,
    #[serde(default = "default_dup_tol")]
    pub duplicate_tol: f64,
    #[serde(default)]
    pub sampling: Sampling,
    /// Defaults depend on the variable type.
    #[serde(default)]
    pub crossover: Option<Crossover>,
    #[serde(default)]
    pub mutation: Option<Mutation>,
    pub termination: TerminationKind,
    pub seed: u64,
    #[serde(default)]
    pub verbose: bool,
    #[serde(default = "default_output_dir")]
    pub output_dir: PathBuf,
    #[serde(default)]
    pub save_history: bool,
    #[serde(default)]
    pub eval_mode: EvalMode,
    #[serde(default = "default_cap")]
    pub max_evals_cap: usize,
}

/// Contents of `run.json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub problem: String,
    pub algorithm: AlgorithmKind,
    pub seed: u64,
    pub n_eval: usize,
    pub n_gen: usize,
    pub n_final: usize,
    pub wall_time_s: f64,
}

impl RunConfig {
    pub fn from_json(text: &str, origin: &Path) -> Result<Self> {
        let cfg: RunConfig = serde_json::from_str(text)
            .map_err(|e| Error::Config(format!("{}: {e}", origin.display())))?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text, path)
    }

    /// Resolves the problem and algorithm settings; fails before any evaluation.
    pub fn prepare(
        &self,
    ) -> Result<(std::sync::Arc<dyn crate::problem::Problem>, AlgorithmConfig)> {
        let problem = make_problem(&self.problem.name, self.problem.n_var)?;
        let info = problem.info();
        let defaults = OperatorSet::default_for(info.var_kind());
        let mut algo = AlgorithmConfig::new(info, self.pop_size, self.seed);
        algo.n_offsprings = self.n_offsprings.unwrap_or(self.pop_size);
        algo.eliminate_duplicates = self.eliminate_duplicates;
        algo.duplicate_tol = self.duplicate_tol;
        algo.operators = OperatorSet {
            sampling: self.sampling,
            crossover: self.crossover.unwrap_or(defaults.crossover),
            mutation: self.mutation.unwrap_or(defaults.mutation),
        };
        algo.validate(info)?;
        if let TerminationKind::XMovement { tol, k } | TerminationKind::FMovement { tol, k } =
            self.termination
        {
            if !(tol >= 0.0) || k == 0 {
                return Err(Error::Config(
                    "movement termination needs tol >= 0 and k >= 1".into(),
                ));
            }
        }
        if self.algorithm == AlgorithmKind::Ga && info.n_obj() != 1 {
            return Err(Error::Config(format!(
                "ga is single-objective, problem `{}` has {} objectives",
                info.name(),
                info.n_obj()
            )));
        }
        if self.max_evals_cap == 0 {
            return Err(Error::Config("max_evals_cap must be positive".into()));
        }
        Ok((problem, algo))
    }

    pub fn options(&self) -> RunOptions {
        RunOptions {
            eval_mode: self.eval_mode,
            max_evals_cap: self.max_evals_cap,
            save_history: self.save_history,
        }
    }

    /// Runs without touching the file system.
    pub fn run(&self, observer: Option<&mut dyn FnMut(&GenerationReport)>) -> Result<RunResult> {
        let (problem, algo) = self.prepare()?;
        run(
            problem,
            self.algorithm,
            &algo,
            self.termination,
            &self.options(),
            observer,
        )
    }

    /// Runs and writes `result.csv`, `run.json` and, when enabled,
    /// `history/gen_####.csv` under `output_dir` (or `dir_override`).
    pub fn execute(
        &self,
        dir_override: Option<&Path>,
        observer: Option<&mut dyn FnMut(&GenerationReport)>,
    ) -> Result<RunSummary> {
        let (problem, algo) = self.prepare()?;
        let info = problem.info().clone();
        let dir = dir_override.unwrap_or(&self.output_dir);
        let started = Instant::now();
        let result = run(
            problem,
            self.algorithm,
            &algo,
            self.termination,
            &self.options(),
            observer,
        )?;
        let wall_time_s = started.elapsed().as_secs_f64();

        write_file(&dir.join("result.csv"), &to_csv(&info, &result.final_set))?;
        for pop in &result.history {
            let name = format!("gen_{:04}.csv", pop.generation);
            write_file(
                &dir.join("history").join(name),
                &to_csv(&info, &pop.members),
            )?;
        }
        let summary = RunSummary {
            problem: info.name().to_string(),
            algorithm: self.algorithm,
            seed: self.seed,
            n_eval: result.n_eval,
            n_gen: result.n_gen,
            n_final: result.final_set.len(),
            wall_time_s,
        };
        let json = serde_json::to_string_pretty(&summary).expect("summary serializes");
        write_file(&dir.join("run.json"), &(json + "\n"))?;
        Ok(summary)
    }
}
