use crate::error::{Error, Result};

/// Exact hypervolume together with the number of points ignored because
/// they do not strictly dominate the reference point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hypervolume {
    pub value: f64,
    pub discarded: usize,
}

/// Lebesgue measure of the union of boxes `[f, ref_point]` (minimization).
/// Supports one to three objectives.
pub fn hypervolume(set: &[Vec<f64>], ref_point: &[f64]) -> Result<Hypervolume> {
    let m = ref_point.len();
    if m > 3 {
        return Err(Error::HypervolumeDimension(m));
    }
    if m == 0 {
        return Err(Error::invalid(
            "reference point must have at least one coordinate",
        ));
    }
    if let Some(p) = set.iter().find(|p| p.len() != m) {
        return Err(Error::invalid(format!(
            "point has {} objectives, reference point has {m}",
            p.len()
        )));
    }
    let counted: Vec<&[f64]> = set
        .iter()
        .filter(|p| p.iter().zip(ref_point).all(|(a, r)| a < r))
        .map(Vec::as_slice)
        .collect();
    let discarded = set.len() - counted.len();
    let counted = nondominated(counted);
    let value = match m {
        1 => counted
            .iter()
            .map(|p| ref_point[0] - p[0])
            .fold(0.0, f64::max),
        2 => hv2d(counted, ref_point[0], ref_point[1]),
        _ => hv3d(counted, ref_point),
    };
    Ok(Hypervolume { value, discarded })
}

/// Unique non-dominated points in lexicographic order, so dominated points
/// and duplicates cannot change the result, not even by rounding.
fn nondominated(mut pts: Vec<&[f64]>) -> Vec<&[f64]> {
    pts.sort_by(|a, b| {
        a.iter()
            .zip(b.iter())
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    pts.dedup();
    let mut keep: Vec<&[f64]> = Vec::with_capacity(pts.len());
    for p in pts {
        // lexicographic order: only earlier points can dominate later ones
        if !keep.iter().any(|q| q.iter().zip(p).all(|(a, b)| a <= b)) {
            keep.push(p);
        }
    }
    keep
}

/// Sort-and-sweep over points already inside the reference box.
fn hv2d(mut pts: Vec<&[f64]>, r0: f64, r1: f64) -> f64 {
    pts.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
    let mut area = 0.0;
    let mut ceiling = r1;
    for p in pts {
        if p[1] < ceiling {
            area += (r0 - p[0]) * (ceiling - p[1]);
            ceiling = p[1];
        }
    }
    area
}

/// Sweeps the third objective; each slab is a 2-D problem over the points
/// already passed.
fn hv3d(mut pts: Vec<&[f64]>, r: &[f64]) -> f64 {
    pts.sort_by(|a, b| a[2].total_cmp(&b[2]));
    let mut volume = 0.0;
    for i in 0..pts.len() {
        let z_next = pts.get(i + 1).map_or(r[2], |p| p[2]);
        let depth = z_next - pts[i][2];
        if depth > 0.0 {
            volume += depth * hv2d(pts[..=i].to_vec(), r[0], r[1]);
        }
    }
    volume
}
