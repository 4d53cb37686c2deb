use crate::error::{Error, Result};
use crate::problem::{ProblemInfo, VarKind};
use crate::rng::Rng;
use crate::Matrix;

/// Uniform sampling that respects the problem's variable kind.
pub fn sample_random(info: &ProblemInfo, n: usize, rng: &mut Rng) -> Matrix {
    (0..n).map(|_| random_point(info, rng)).collect()
}

pub(crate) fn random_point(info: &ProblemInfo, rng: &mut Rng) -> Vec<f64> {
    info.lower()
        .iter()
        .zip(info.upper())
        .map(|(&l, &u)| match info.var_kind() {
            VarKind::Real => rng.uniform_in(l, u),
            VarKind::Integer => rng.int_in(l.ceil() as i64, u.floor() as i64) as f64,
            VarKind::Binary => f64::from(u8::from(rng.bernoulli(0.5))),
        })
        .collect()
}

/// Latin hypercube sample: in every column each of the `n` equal-width
/// strata of `[lower, upper]` holds exactly one point.
pub fn sample_lhs(info: &ProblemInfo, n: usize, rng: &mut Rng) -> Result<Matrix> {
    if info.var_kind() != VarKind::Real {
        return Err(Error::invalid(format!(
            "latin hypercube sampling requires real variables, problem `{}` has {}",
            info.name(),
            info.var_kind()
        )));
    }
    let mut out = vec![vec![0.0; info.n_var()]; n];
    for (j, (&l, &u)) in info.lower().iter().zip(info.upper()).enumerate() {
        let strata = rng.permutation(n);
        for (row, s) in out.iter_mut().zip(strata) {
            let t = (s as f64 + rng.uniform()) / n as f64;
            // keep rounding from spilling into the next stratum
            row[j] = (l + t * (u - l))
                .min(l + (s + 1) as f64 / n as f64 * (u - l))
                .min(u);
        }
    }
    Ok(out)
}
