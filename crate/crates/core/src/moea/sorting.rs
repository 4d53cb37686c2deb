use crate::dominance::{compare_constrained, Dominance};
use crate::population::Individual;

/// Fast non-dominated sorting under the feasibility-first dominance rule.
///
/// Returns fronts as index lists; front 0 is non-dominated. Indices within a
/// front are ascending.
pub fn fast_nondominated_sort(f: &[Vec<f64>], cv: &[f64]) -> Vec<Vec<usize>> {
    let n = f.len();
    debug_assert_eq!(n, cv.len());
    let mut dominated_by: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut counter = vec![0usize; n];

    for i in 0..n {
        for j in (i + 1)..n {
            match compare_constrained(&f[i], cv[i], &f[j], cv[j]) {
                Dominance::ADominates => {
                    dominated_by[i].push(j);
                    counter[j] += 1;
                }
                Dominance::BDominates => {
                    dominated_by[j].push(i);
                    counter[i] += 1;
                }
                Dominance::Incomparable => {}
            }
        }
    }

    let mut fronts = Vec::new();
    let mut current: Vec<usize> = (0..n).filter(|&i| counter[i] == 0).collect();
    while !current.is_empty() {
        let mut next = Vec::new();
        for &i in &current {
            for &j in &dominated_by[i] {
                counter[j] -= 1;
                if counter[j] == 0 {
                    next.push(j);
                }
            }
        }
        next.sort_unstable();
        fronts.push(current);
        current = next;
    }
    fronts
}

/// [`fast_nondominated_sort`] over evaluated individuals.
pub fn sort_individuals(members: &[Individual]) -> Vec<Vec<usize>> {
    let f: Vec<Vec<f64>> = members.iter().map(|m| m.f.clone()).collect();
    let cv: Vec<f64> = members.iter().map(|m| m.cv).collect();
    fast_nondominated_sort(&f, &cv)
}
