//! Constraint violation and (constrained) Pareto dominance.

use crate::population::Individual;

/// Tolerance that turns `h_k(x) = 0` into `|h_k(x)| - EPS_EQ <= 0`.
pub const EPS_EQ: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    ADominates,
    BDominates,
    Incomparable,
}

/// Unweighted sum of inequality and tolerance-relaxed equality violations.
pub fn constraint_violation(g: &[f64], h: &[f64], eps_eq: f64) -> f64 {
    let ieq: f64 = g.iter().map(|&v| v.max(0.0)).sum();
    let eq: f64 = h.iter().map(|&v| (v.abs() - eps_eq).max(0.0)).sum();
    // an empty sum is -0.0
    ieq + eq + 0.0
}

/// Plain Pareto dominance for minimization.
pub fn pareto_dominance(a: &[f64], b: &[f64]) -> Dominance {
    debug_assert_eq!(a.len(), b.len());
    let mut a_better = false;
    let mut b_better = false;
    for (x, y) in a.iter().zip(b) {
        if x < y {
            a_better = true;
        } else if y < x {
            b_better = true;
        }
        if a_better && b_better {
            return Dominance::Incomparable;
        }
    }
    match (a_better, b_better) {
        (true, false) => Dominance::ADominates,
        (false, true) => Dominance::BDominates,
        _ => Dominance::Incomparable,
    }
}

/// `a` dominates `b`: no worse everywhere, strictly better somewhere.
pub fn dominates(a: &[f64], b: &[f64]) -> bool {
    pareto_dominance(a, b) == Dominance::ADominates
}

/// Feasibility-first comparison on raw objective vectors and violations.
pub fn compare_constrained(fa: &[f64], cva: f64, fb: &[f64], cvb: f64) -> Dominance {
    if cva < cvb {
        Dominance::ADominates
    } else if cvb < cva {
        Dominance::BDominates
    } else {
        pareto_dominance(fa, fb)
    }
}

/// Lower violation wins; equal violation falls back to Pareto dominance.
pub fn constrained_dominates(a: &Individual, b: &Individual) -> Dominance {
    compare_constrained(&a.f, a.cv, &b.f, b.cv)
}
