//! Algorithm assembly: non-dominated sorting, crowding, survival, NSGA-II,
//! a single-objective GA and the run loop.

mod crowding;
mod duplicates;
mod run;
mod sorting;
mod survival;

pub use crowding::crowding_distance;
pub use duplicates::{eliminate_duplicates, DEFAULT_DUPLICATE_TOL};
pub use run::{final_set, run, GenerationReport, RunOptions, RunResult, DEFAULT_EVAL_CAP};
pub use sorting::{fast_nondominated_sort, sort_individuals};
pub use survival::{ga_order, ga_truncation, rank_and_crowding};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evaluator::Evaluator;
use crate::operators::{
    ga_compare, nsga2_compare, random_point, tournament_select, Comparator, OperatorSet,
};
use crate::population::Population;
use crate::problem::ProblemInfo;
use crate::rng::Rng;
use crate::Matrix;

/// Mating rounds attempted before topping up offspring with random samples.
pub const MAX_MATING_ROUNDS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgorithmKind {
    Ga,
    Nsga2,
}

impl AlgorithmKind {
    fn comparator(self) -> Comparator {
        match self {
            AlgorithmKind::Ga => ga_compare,
            AlgorithmKind::Nsga2 => nsga2_compare,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgorithmConfig {
    pub pop_size: usize,
    /// Offspring per generation; 1 gives the steady-state variant.
    pub n_offsprings: usize,
    pub operators: OperatorSet,
    pub eliminate_duplicates: bool,
    pub duplicate_tol: f64,
    pub seed: u64,
}

impl AlgorithmConfig {
    /// Defaults for the problem's variable kind, generational (`n_offsprings == pop_size`).
    pub fn new(info: &ProblemInfo, pop_size: usize, seed: u64) -> Self {
        Self {
            pop_size,
            n_offsprings: pop_size,
            operators: OperatorSet::default_for(info.var_kind()),
            eliminate_duplicates: true,
            duplicate_tol: DEFAULT_DUPLICATE_TOL,
            seed,
        }
    }

    pub fn validate(&self, info: &ProblemInfo) -> Result<()> {
        if self.pop_size == 0 {
            return Err(Error::Config("pop_size must be positive".into()));
        }
        if self.n_offsprings == 0 {
            return Err(Error::Config("n_offsprings must be positive".into()));
        }
        if !(self.duplicate_tol >= 0.0) {
            return Err(Error::Config("duplicate_tol must be non-negative".into()));
        }
        self.operators.validate(info)
    }
}

/// Draws `n` points, removing duplicates when enabled, then tops up randomly.
fn fill_unique(
    n: usize,
    existing: &[Vec<f64>],
    config: &AlgorithmConfig,
    info: &ProblemInfo,
    rng: &mut Rng,
    mut produce: impl FnMut(usize, &mut Rng) -> Matrix,
) -> Matrix {
    let mut out: Matrix = Vec::with_capacity(n);
    for _ in 0..MAX_MATING_ROUNDS {
        let needed = n - out.len();
        let mut batch = produce(needed, rng);
        if config.eliminate_duplicates {
            let mut seen = existing.to_vec();
            seen.extend(out.iter().cloned());
            batch = eliminate_duplicates(batch, &seen, config.duplicate_tol);
        }
        out.extend(batch.into_iter().take(needed));
        if out.len() == n {
            return out;
        }
    }
    while out.len() < n {
        out.push(random_point(info, rng));
    }
    out
}

/// Samples, evaluates and ranks the initial population (generation 0).
pub fn initialize(
    kind: AlgorithmKind,
    config: &AlgorithmConfig,
    evaluator: &mut Evaluator,
    rng: &mut Rng,
) -> Result<Population> {
    let info = evaluator.problem().info().clone();
    let mut sampling_error = None;
    let xs = fill_unique(config.pop_size, &[], config, &info, rng, |k, rng| {
        config.operators.sample(&info, k, rng).unwrap_or_else(|e| {
            sampling_error.get_or_insert(e);
            Vec::new()
        })
    });
    if let Some(e) = sampling_error {
        return Err(e);
    }
    let members = evaluator.evaluate_individuals(xs)?;
    let members = survive(kind, members, config.pop_size);
    Ok(Population::new(members, 0))
}

fn survive(
    kind: AlgorithmKind,
    members: Vec<crate::population::Individual>,
    n: usize,
) -> Vec<crate::population::Individual> {
    match kind {
        AlgorithmKind::Nsga2 => rank_and_crowding(members, n),
        AlgorithmKind::Ga => ga_truncation(members, n),
    }
}

/// Tournament selection, crossover and mutation producing `n_offsprings`
/// variable vectors (unique against the population when enabled).
pub fn make_offspring(
    kind: AlgorithmKind,
    pop: &Population,
    config: &AlgorithmConfig,
    info: &ProblemInfo,
    rng: &mut Rng,
) -> Matrix {
    let existing = pop.xs();
    let compare = kind.comparator();
    fill_unique(
        config.n_offsprings,
        &existing,
        config,
        info,
        rng,
        |needed, rng| {
            let pairs = tournament_select(&pop.members, needed.div_ceil(2), compare, rng);
            let mut batch = Vec::with_capacity(2 * pairs.len());
            for (a, b) in pairs {
                let (c1, c2) =
                    config
                        .operators
                        .mate(&pop.members[a].x, &pop.members[b].x, info, rng);
                batch.push(c1);
                batch.push(c2);
            }
            batch
        },
    )
}

fn step(
    kind: AlgorithmKind,
    pop: &mut Population,
    config: &AlgorithmConfig,
    evaluator: &mut Evaluator,
    rng: &mut Rng,
) -> Result<()> {
    let info = evaluator.problem().info().clone();
    let xs = make_offspring(kind, pop, config, &info, rng);
    let offspring = evaluator.evaluate_individuals(xs)?;
    let mut merged = std::mem::take(&mut pop.members);
    merged.extend(offspring);
    pop.members = survive(kind, merged, config.pop_size);
    pop.generation += 1;
    Ok(())
}

/// One NSGA-II generation: mating, evaluation, and rank/crowding survival
/// over parents plus offspring.
pub fn nsga2_step(
    pop: &mut Population,
    config: &AlgorithmConfig,
    evaluator: &mut Evaluator,
    rng: &mut Rng,
) -> Result<()> {
    step(AlgorithmKind::Nsga2, pop, config, evaluator, rng)
}

/// One GA generation with (mu + lambda) truncation.
pub fn ga_step(
    pop: &mut Population,
    config: &AlgorithmConfig,
    evaluator: &mut Evaluator,
    rng: &mut Rng,
) -> Result<()> {
    step(AlgorithmKind::Ga, pop, config, evaluator, rng)
}
