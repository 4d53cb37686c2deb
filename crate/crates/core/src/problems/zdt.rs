use std::f64::consts::PI;

use crate::autodiff::Real;
use crate::error::{Error, Result};
use crate::problem::{ProblemInfo, VarKind};
use crate::Matrix;

use super::{spread_over, Formula};

/// `f1` intervals making up the disconnected ZDT3 front.
pub const ZDT3_SEGMENTS: [(f64, f64); 5] = [
    (0.0, 0.083_001_534_9),
    (0.182_228_780, 0.257_762_363_4),
    (0.409_313_674_8, 0.453_882_104_1),
    (0.618_396_794_4, 0.652_511_703_8),
    (0.823_331_798_3, 0.851_832_865_4),
];

/// Smallest attainable `f1` of ZDT6.
pub const ZDT6_F1_MIN: f64 = 0.280_775_319_1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZdtKind {
    Zdt1,
    Zdt2,
    Zdt3,
    Zdt4,
    Zdt6,
}

#[derive(Debug, Clone)]
pub struct Zdt {
    kind: ZdtKind,
    info: ProblemInfo,
}

impl Zdt {
    pub fn new(kind: ZdtKind, n_var: usize) -> Result<Self> {
        if n_var < 2 {
            return Err(Error::invalid("ZDT problems need at least 2 variables"));
        }
        let name = match kind {
            ZdtKind::Zdt1 => "zdt1",
            ZdtKind::Zdt2 => "zdt2",
            ZdtKind::Zdt3 => "zdt3",
            ZdtKind::Zdt4 => "zdt4",
            ZdtKind::Zdt6 => "zdt6",
        };
        let (mut lower, mut upper) = (vec![0.0; n_var], vec![1.0; n_var]);
        if kind == ZdtKind::Zdt4 {
            lower[1..].fill(-5.0);
            upper[1..].fill(5.0);
        }
        let info =
            ProblemInfo::new(name, 2, 0, 0, lower, upper, VarKind::Real)?.with_differentiable(true);
        Ok(Self { kind, info })
    }

    pub fn kind(&self) -> ZdtKind {
        self.kind
    }
}

impl Formula for Zdt {
    fn info(&self) -> &ProblemInfo {
        &self.info
    }

    fn compute<T: Real>(&self, x: &[T], _constraints: bool) -> (Vec<T>, Vec<T>) {
        let n = x.len();
        let tail = || x[1..].iter().cloned();
        let sum =
            |it: &mut dyn Iterator<Item = T>| -> T { it.fold(T::constant(0.0), |acc, v| acc + v) };
        let x1 = x[0].clone();

        let (f1, g) = match self.kind {
            ZdtKind::Zdt1 | ZdtKind::Zdt2 | ZdtKind::Zdt3 => {
                let s = sum(&mut tail());
                (x1, s * (9.0 / (n - 1) as f64) + 1.0)
            }
            ZdtKind::Zdt4 => {
                let s =
                    sum(&mut tail().map(|v| v.clone().square() - (v * (4.0 * PI)).cos() * 10.0));
                (x1, s + (1.0 + 10.0 * (n - 1) as f64))
            }
            ZdtKind::Zdt6 => {
                let f1 = -((x1.clone() * -4.0).exp() * (x1 * (6.0 * PI)).sin().powi(6)) + 1.0;
                let s = sum(&mut tail()) / (n - 1) as f64;
                (f1, s.powf(0.25) * 9.0 + 1.0)
            }
        };

        let ratio = f1.clone() / g.clone();
        let h = match self.kind {
            ZdtKind::Zdt1 | ZdtKind::Zdt4 => -ratio.sqrt() + 1.0,
            ZdtKind::Zdt2 | ZdtKind::Zdt6 => -ratio.square() + 1.0,
            ZdtKind::Zdt3 => {
                -ratio.sqrt() + 1.0 - f1.clone() / g.clone() * (f1.clone() * (10.0 * PI)).sin()
            }
        };
        let f2 = g * h;
        (vec![f1, f2], Vec::new())
    }

    fn front(&self, n: usize) -> Option<Matrix> {
        let f1s = match self.kind {
            ZdtKind::Zdt1 | ZdtKind::Zdt2 | ZdtKind::Zdt4 => spread_over(&[(0.0, 1.0)], n),
            ZdtKind::Zdt3 => spread_over(&ZDT3_SEGMENTS, n),
            ZdtKind::Zdt6 => spread_over(&[(ZDT6_F1_MIN, 1.0)], n),
        };
        let f2 = |f1: f64| match self.kind {
            ZdtKind::Zdt1 | ZdtKind::Zdt4 => 1.0 - f1.sqrt(),
            ZdtKind::Zdt2 | ZdtKind::Zdt6 => 1.0 - f1 * f1,
            ZdtKind::Zdt3 => 1.0 - f1.sqrt() - f1 * (10.0 * PI * f1).sin(),
        };
        Some(f1s.into_iter().map(|f1| vec![f1, f2(f1)]).collect())
    }
}
