use std::cmp::Ordering;

use crate::population::Individual;

use super::crowding::crowding_distance;
use super::sorting::sort_individuals;

/// NSGA-II survival: whole fronts in rank order, the overflowing front cut by
/// descending crowding distance (ties keep the lower index). Survivors carry
/// their rank and crowding distance.
pub fn rank_and_crowding(mut members: Vec<Individual>, n_survive: usize) -> Vec<Individual> {
    let fronts = sort_individuals(&members);
    for (rank, front) in fronts.iter().enumerate() {
        let objs: Vec<Vec<f64>> = front.iter().map(|&i| members[i].f.clone()).collect();
        for (&i, d) in front.iter().zip(crowding_distance(&objs)) {
            members[i].rank = Some(rank);
            members[i].crowding = Some(d);
        }
    }

    let mut keep = Vec::with_capacity(n_survive.min(members.len()));
    for front in &fronts {
        let room = n_survive - keep.len();
        if room == 0 {
            break;
        }
        if front.len() <= room {
            keep.extend_from_slice(front);
        } else {
            let mut last = front.clone();
            last.sort_by(|&a, &b| {
                let (ca, cb) = (members[a].crowding.unwrap(), members[b].crowding.unwrap());
                cb.total_cmp(&ca).then(a.cmp(&b))
            });
            keep.extend_from_slice(&last[..room]);
        }
    }

    let mut slots: Vec<Option<Individual>> = members.into_iter().map(Some).collect();
    keep.into_iter()
        .map(|i| slots[i].take().expect("survivor selected once"))
        .collect()
}

/// Lexicographic (violation, objective) order used by the single-objective GA.
pub fn ga_order(a: &Individual, b: &Individual) -> Ordering {
    a.cv.total_cmp(&b.cv)
        .then_with(|| a.f[0].total_cmp(&b.f[0]))
}

/// (mu + lambda) truncation: the `n_survive` best by [`ga_order`], stable.
pub fn ga_truncation(mut members: Vec<Individual>, n_survive: usize) -> Vec<Individual> {
    members.sort_by(ga_order);
    members.truncate(n_survive);
    for (i, m) in members.iter_mut().enumerate() {
        m.rank = Some(i);
        m.crowding = None;
    }
    members
}
