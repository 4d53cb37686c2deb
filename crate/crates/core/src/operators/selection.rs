use std::cmp::Ordering;

use crate::population::Individual;
use crate::rng::Rng;

/// `Less` means the first individual wins the tournament.
pub type Comparator = fn(&Individual, &Individual) -> Ordering;

fn cv_first(a: &Individual, b: &Individual) -> Ordering {
    if a.cv > 0.0 || b.cv > 0.0 {
        a.cv.total_cmp(&b.cv)
    } else {
        Ordering::Equal
    }
}

/// Constraint violation, then front rank, then larger crowding distance.
pub fn nsga2_compare(a: &Individual, b: &Individual) -> Ordering {
    cv_first(a, b)
        .then_with(|| match (a.rank, b.rank) {
            (Some(ra), Some(rb)) => ra.cmp(&rb),
            _ => Ordering::Equal,
        })
        .then_with(|| match (a.crowding, b.crowding) {
            (Some(ca), Some(cb)) => cb.total_cmp(&ca),
            _ => Ordering::Equal,
        })
}

/// Constraint violation, then the (single) objective value.
pub fn ga_compare(a: &Individual, b: &Individual) -> Ordering {
    cv_first(a, b).then_with(|| a.f[0].total_cmp(&b.f[0]))
}

fn tournament(pop: &[Individual], compare: Comparator, rng: &mut Rng) -> usize {
    let a = rng.index(pop.len());
    let b = rng.index(pop.len());
    match compare(&pop[a], &pop[b]) {
        Ordering::Less => a,
        Ordering::Greater => b,
        Ordering::Equal => {
            if rng.bernoulli(0.5) {
                a
            } else {
                b
            }
        }
    }
}

/// Picks `n_pairs` parent pairs by binary tournaments.
pub fn tournament_select(
    pop: &[Individual],
    n_pairs: usize,
    compare: Comparator,
    rng: &mut Rng,
) -> Vec<(usize, usize)> {
    assert!(
        !pop.is_empty(),
        "tournament selection on an empty population"
    );
    (0..n_pairs)
        .map(|_| (tournament(pop, compare, rng), tournament(pop, compare, rng)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ind(f: f64, cv: f64, rank: usize, crowding: f64) -> Individual {
        let mut i = Individual::new(vec![f]);
        i.f = vec![f, -f];
        i.cv = cv;
        i.rank = Some(rank);
        i.crowding = Some(crowding);
        i
    }

    #[test]
    fn singleton_population() {
        let pop = vec![ind(0.0, 0.0, 0, 1.0)];
        let pairs = tournament_select(&pop, 5, nsga2_compare, &mut Rng::seed_from(0));
        assert!(pairs.iter().all(|&p| p == (0, 0)));
    }

    #[test]
    fn feasible_beats_infeasible() {
        let feasible = ind(10.0, 0.0, 5, 0.0);
        let infeasible = ind(0.0, 0.1, 0, f64::INFINITY);
        assert_eq!(nsga2_compare(&feasible, &infeasible), Ordering::Less);
        assert_eq!(ga_compare(&infeasible, &feasible), Ordering::Greater);
    }

    #[test]
    fn crowding_breaks_rank_ties() {
        let sparse = ind(0.0, 0.0, 1, 2.0);
        let dense = ind(0.0, 0.0, 1, 0.5);
        assert_eq!(nsga2_compare(&sparse, &dense), Ordering::Less);
        assert_eq!(
            nsga2_compare(&ind(0.0, 0.0, 0, 0.0), &sparse),
            Ordering::Less
        );
    }

    #[test]
    fn tournament_prefers_winner() {
        let pop = vec![ind(0.0, 0.0, 0, 1.0), ind(1.0, 0.5, 0, 1.0)];
        let pairs = tournament_select(&pop, 2000, nsga2_compare, &mut Rng::seed_from(1));
        let wins0 = pairs
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .filter(|&i| i == 0)
            .count();
        // index 1 only wins when drawn against itself: probability 1/4
        assert!((wins0 as f64 / 4000.0 - 0.75).abs() < 0.03);
    }
}
