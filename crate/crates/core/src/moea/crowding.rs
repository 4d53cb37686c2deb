/// Crowding distance of each point in a front.
///
/// Per objective with non-zero range, the two extreme points get `+inf` and
/// interior points accumulate the normalized gap between their neighbours.
/// Objectives with zero range contribute nothing. Fronts of one or two points
/// are all boundary.
pub fn crowding_distance(front: &[Vec<f64>]) -> Vec<f64> {
    let n = front.len();
    if n <= 2 {
        return vec![f64::INFINITY; n];
    }
    let m = front[0].len();
    let mut dist = vec![0.0; n];
    let mut order: Vec<usize> = (0..n).collect();
    for obj in 0..m {
        // stable: ties keep index order
        order.sort_by(|&a, &b| front[a][obj].total_cmp(&front[b][obj]));
        let lo = front[order[0]][obj];
        let hi = front[order[n - 1]][obj];
        let range = hi - lo;
        if range <= 0.0 {
            continue;
        }
        dist[order[0]] = f64::INFINITY;
        dist[order[n - 1]] = f64::INFINITY;
        for k in 1..n - 1 {
            let i = order[k];
            if dist[i].is_finite() {
                dist[i] += (front[order[k + 1]][obj] - front[order[k - 1]][obj]) / range;
            }
        }
    }
    dist
}
