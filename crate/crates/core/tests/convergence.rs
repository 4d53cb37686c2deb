use moeakit::moea::{run, AlgorithmConfig, AlgorithmKind, RunOptions};
use moeakit::problems::make_problem;
use moeakit::termination::TerminationKind;

#[test]
fn ga_solves_sphere() {
    let problem = make_problem("sphere", Some(5)).unwrap();
    let algo = AlgorithmConfig::new(problem.info(), 20, 3);
    let r = run(
        problem,
        AlgorithmKind::Ga,
        &algo,
        TerminationKind::MaxGen { n: 200 },
        &RunOptions::default(),
        None,
    )
    .unwrap();
    assert_eq!(r.final_set.len(), 1);
    assert!(r.final_set[0].f[0] < 1e-3, "best {}", r.final_set[0].f[0]);
}

#[test]
fn best_fitness_never_worsens() {
    let problem = make_problem("sphere", Some(5)).unwrap();
    let algo = AlgorithmConfig::new(problem.info(), 20, 11);
    let opts = RunOptions { save_history: true, ..RunOptions::default() };
    let r = run(problem, AlgorithmKind::Ga, &algo, TerminationKind::MaxGen { n: 50 }, &opts, None).unwrap();
    let best: Vec<f64> = r
        .history
        .iter()
        .map(|p| p.members.iter().map(|m| m.f[0]).fold(f64::INFINITY, f64::min))
        .collect();
    assert!(best.windows(2).all(|w| w[1] <= w[0]), "{best:?}");
}

#[test]
fn nsga2_keeps_feasible_nondominated_members() {
    let problem = make_problem("demo", None).unwrap();
    let mut algo = AlgorithmConfig::new(problem.info(), 40, 5);
    algo.n_offsprings = 10;
    let opts = RunOptions { save_history: true, ..RunOptions::default() };
    let r = run(problem, AlgorithmKind::Nsga2, &algo, TerminationKind::MaxGen { n: 40 }, &opts, None).unwrap();
    let feasible: Vec<usize> =
        r.history.iter().map(|p| p.members.iter().filter(|m| m.cv == 0.0).count()).collect();
    // elitist survival never loses a feasible member while the population has room
    assert!(feasible.windows(2).all(|w| w[1] >= w[0].min(40)), "{feasible:?}");
    assert!(r.final_set.iter().all(|m| m.cv == 0.0));
}
