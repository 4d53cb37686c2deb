/// Default distance below which two variable vectors count as duplicates.
pub const DEFAULT_DUPLICATE_TOL: f64 = 1e-16;

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Drops candidates closer than `tol` to an existing member or to an
/// earlier surviving candidate.
pub fn eliminate_duplicates(
    candidates: Vec<Vec<f64>>,
    existing: &[Vec<f64>],
    tol: f64,
) -> Vec<Vec<f64>> {
    let mut kept: Vec<Vec<f64>> = Vec::with_capacity(candidates.len());
    for c in candidates {
        let clash = existing
            .iter()
            .chain(kept.iter())
            .any(|e| distance(&c, e) < tol);
        if !clash {
            kept.push(c);
        }
    }
    kept
}
