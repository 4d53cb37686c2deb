use std::fmt::Write as _;

use crate::dominance::{constraint_violation, EPS_EQ};
use crate::io::fmt_f64;
use crate::problem::{Evaluation, ProblemInfo};

#[derive(Debug, Clone, PartialEq)]
pub struct Individual {
    pub x: Vec<f64>,
    pub f: Vec<f64>,
    pub g: Vec<f64>,
    pub h: Vec<f64>,
    pub cv: f64,
    /// Front index; `None` until a survival pass assigns it.
    pub rank: Option<usize>,
    pub crowding: Option<f64>,
}

impl Individual {
    /// Unevaluated individual.
    pub fn new(x: Vec<f64>) -> Self {
        Self {
            x,
            f: Vec::new(),
            g: Vec::new(),
            h: Vec::new(),
            cv: 0.0,
            rank: None,
            crowding: None,
        }
    }

    pub fn from_evaluation(x: Vec<f64>, eval: Evaluation) -> Self {
        let cv = constraint_violation(&eval.g, &eval.h, EPS_EQ);
        Self {
            x,
            f: eval.f,
            g: eval.g,
            h: eval.h,
            cv,
            rank: None,
            crowding: None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.cv <= 0.0
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Population {
    pub members: Vec<Individual>,
    pub generation: usize,
}

impl Population {
    pub fn new(members: Vec<Individual>, generation: usize) -> Self {
        Self {
            members,
            generation,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn xs(&self) -> Vec<Vec<f64>> {
        self.members.iter().map(|m| m.x.clone()).collect()
    }

    pub fn fs(&self) -> Vec<Vec<f64>> {
        self.members.iter().map(|m| m.f.clone()).collect()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Individual> {
        self.members.iter()
    }
}

/// CSV header `x1..xN,f1..fM,g1..gJ,cv`.
pub fn csv_header(info: &ProblemInfo) -> String {
    let mut cols = Vec::with_capacity(info.n_var() + info.n_obj() + info.n_ieq() + 1);
    cols.extend((1..=info.n_var()).map(|i| format!("x{i}")));
    cols.extend((1..=info.n_obj()).map(|i| format!("f{i}")));
    cols.extend((1..=info.n_ieq()).map(|i| format!("g{i}")));
    cols.push("cv".to_string());
    cols.join(",")
}

/// Serializes individuals with the snapshot schema, one row each.
pub fn to_csv<'a>(info: &ProblemInfo, members: impl IntoIterator<Item = &'a Individual>) -> String {
    let mut out = csv_header(info);
    out.push('\n');
    for m in members {
        let values =
            m.x.iter()
                .chain(&m.f)
                .chain(&m.g)
                .chain(std::iter::once(&m.cv));
        for (i, v) in values.enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}", fmt_f64(*v));
        }
        out.push('\n');
    }
    out
}
