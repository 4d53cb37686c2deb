//! Plot geometry for objective-space visualizations and a small SVG writer.
//!
//! Layouts produce primitives in their own data coordinates; `render_svg`
//! maps `bounds` onto a fixed canvas.

mod layout;
mod svg;

pub use layout::{
    layout_heatmap, layout_pairwise, layout_pcp, layout_petal, layout_radar, layout_radviz,
    layout_scatter2d, layout_scatter3d, layout_star, project_3d, project_radviz, project_star,
    RADAR_INNER_RADIUS, VIEW_AZIMUTH_DEG, VIEW_ELEVATION_DEG,
};
pub use svg::{render_svg, write_svg, CANVAS_SIZE};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Matrix;

pub type Point = [f64; 2];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlotKind {
    Scatter2d,
    Scatter3d,
    Pairwise,
    Pcp,
    Radviz,
    Star,
    Heatmap,
    Petal,
    Radar,
}

impl PlotKind {
    pub const ALL: [PlotKind; 9] = [
        PlotKind::Scatter2d,
        PlotKind::Scatter3d,
        PlotKind::Pairwise,
        PlotKind::Pcp,
        PlotKind::Radviz,
        PlotKind::Star,
        PlotKind::Heatmap,
        PlotKind::Petal,
        PlotKind::Radar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PlotKind::Scatter2d => "scatter2d",
            PlotKind::Scatter3d => "scatter3d",
            PlotKind::Pairwise => "pairwise",
            PlotKind::Pcp => "pcp",
            PlotKind::Radviz => "radviz",
            PlotKind::Star => "star",
            PlotKind::Heatmap => "heatmap",
            PlotKind::Petal => "petal",
            PlotKind::Radar => "radar",
        }
    }
}

impl std::str::FromStr for PlotKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PlotKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown plot kind `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Style {
    pub color: String,
    pub highlight_color: String,
    pub opacity: f64,
    pub stroke_width: f64,
    pub marker_radius: f64,
    /// Sequential color map stops (hex), low to high.
    pub colormap: Vec<String>,
}

impl Default for Style {
    fn default() -> Self {
        Self {
            color: "#1f77b4".into(),
            highlight_color: "#d62728".into(),
            opacity: 1.0,
            stroke_width: 1.0,
            marker_radius: 3.0,
            colormap: ["#440154", "#3b528b", "#21918c", "#5ec962", "#fde725"]
                .map(String::from)
                .to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlotSpec {
    pub kind: PlotKind,
    pub data: Matrix,
    /// Min-max normalize each objective first. Radviz and star always do.
    pub normalize: bool,
    pub ideal: Option<Vec<f64>>,
    pub nadir: Option<Vec<f64>>,
    pub highlight: Vec<usize>,
    pub style: Style,
    /// Heatmap: order rows lexicographically by objective values.
    pub sort_rows: bool,
    /// Petal and radar draw a single solution.
    pub row: usize,
}

impl PlotSpec {
    pub fn new(kind: PlotKind, data: Matrix) -> Self {
        Self {
            kind,
            data,
            normalize: false,
            ideal: None,
            nadir: None,
            highlight: Vec::new(),
            style: Style::default(),
            sort_rows: false,
            row: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Axis,
    Reference,
    Panel,
    Data,
    Highlight,
    Cell,
    Label,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Radius {
    Data(f64),
    /// Data marker; on-screen size comes from `Style::marker_radius`.
    Marker,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Anchor {
    Start,
    Middle,
    End,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Shape {
    Polyline(Vec<Point>),
    Polygon(Vec<Point>),
    Circle {
        center: Point,
        radius: Radius,
    },
    /// Circular sector between two angles (radians, counter-clockwise).
    Wedge {
        center: Point,
        radius: f64,
        start: f64,
        end: f64,
    },
    Text {
        at: Point,
        text: String,
        anchor: Anchor,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Primitive {
    pub shape: Shape,
    pub role: Role,
    /// Explicit fill (heatmap cells); otherwise the role decides.
    pub color: Option<String>,
}

impl Primitive {
    pub fn new(shape: Shape, role: Role) -> Self {
        Self {
            shape,
            role,
            color: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlotGeometry {
    /// `[x_min, y_min, x_max, y_max]` of the data coordinate system.
    pub bounds: [f64; 4],
    pub primitives: Vec<Primitive>,
    pub style: Style,
}

impl PlotGeometry {
    pub fn empty() -> Self {
        Self {
            bounds: [0.0, 0.0, 1.0, 1.0],
            primitives: Vec::new(),
            style: Style::default(),
        }
    }

    pub fn count(&self, role: Role) -> usize {
        self.primitives.iter().filter(|p| p.role == role).count()
    }
}

/// Min-max normalization per column; zero-range columns map to 0.
pub fn normalize(f: &[Vec<f64>]) -> Matrix {
    let m = f.first().map_or(0, Vec::len);
    let ranges: Vec<(f64, f64)> = (0..m)
        .map(|j| {
            f.iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
                    (lo.min(r[j]), hi.max(r[j]))
                })
        })
        .collect();
    f.iter()
        .map(|r| {
            r.iter()
                .zip(&ranges)
                .map(|(&v, &(lo, hi))| if hi > lo { (v - lo) / (hi - lo) } else { 0.0 })
                .collect()
        })
        .collect()
}

pub(crate) fn check_data(f: &[Vec<f64>]) -> Result<usize> {
    let m = f.first().map_or(0, Vec::len);
    if f.iter().any(|r| r.len() != m) {
        return Err(Error::invalid("plot data rows differ in length"));
    }
    if f.iter().flatten().any(|v| !v.is_finite()) {
        return Err(Error::invalid("plot data contains non-finite values"));
    }
    Ok(m)
}

/// Computes the geometry for `spec`.
pub fn build(spec: &PlotSpec) -> Result<PlotGeometry> {
    check_data(&spec.data)?;
    if let Some(&i) = spec.highlight.iter().find(|&&i| i >= spec.data.len()) {
        return Err(Error::invalid(format!(
            "highlight index {i} out of range for {} rows",
            spec.data.len()
        )));
    }
    let prepared = || {
        if spec.normalize {
            normalize(&spec.data)
        } else {
            spec.data.clone()
        }
    };
    let single = |data: &Matrix| -> Result<Vec<f64>> {
        data.get(spec.row).cloned().ok_or_else(|| {
            Error::invalid(format!(
                "row {} out of range for {} rows",
                spec.row,
                data.len()
            ))
        })
    };
    let hl = &spec.highlight;
    let mut geometry = match spec.kind {
        PlotKind::Scatter2d => layout_scatter2d(&prepared(), hl)?,
        PlotKind::Scatter3d => layout_scatter3d(&prepared(), hl)?,
        PlotKind::Pairwise => layout_pairwise(&spec.data, hl)?,
        PlotKind::Pcp => layout_pcp(&spec.data, spec.normalize, hl)?,
        PlotKind::Radviz => layout_radviz(&normalize(&spec.data), hl)?,
        PlotKind::Star => layout_star(&normalize(&spec.data), hl)?,
        PlotKind::Heatmap => layout_heatmap(&spec.data, spec.sort_rows, &spec.style)?,
        PlotKind::Petal => layout_petal(&single(&prepared())?)?,
        PlotKind::Radar => {
            let (ideal, nadir) = match (&spec.ideal, &spec.nadir) {
                (Some(i), Some(n)) => (i, n),
                _ => return Err(Error::invalid("radar needs both ideal and nadir points")),
            };
            for (i, row) in spec.data.iter().enumerate() {
                let inside = row.len() == ideal.len()
                    && row
                        .iter()
                        .zip(ideal)
                        .zip(nadir)
                        .all(|((v, lo), hi)| lo <= v && v <= hi);
                if !inside {
                    return Err(Error::invalid(format!(
                        "row {i} is outside the ideal/nadir box"
                    )));
                }
            }
            layout_radar(&single(&spec.data)?, ideal, nadir)?
        }
    };
    geometry.style = spec.style.clone();
    Ok(geometry)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn kind_names_round_trip() {
        for k in PlotKind::ALL {
            assert_eq!(k.name().parse::<PlotKind>().unwrap(), k);
        }
        assert!("pie".parse::<PlotKind>().is_err());
    }

    #[test]
    fn constant_column_normalizes_to_zero() {
        let n = normalize(&[vec![1.0, 5.0], vec![2.0, 5.0], vec![3.0, 5.0]]);
        assert_eq!(n.iter().map(|r| r[1]).collect::<Vec<_>>(), vec![0.0; 3]);
        assert_eq!(n[1][0], 0.5);
    }

    #[test]
    fn radar_requires_box() {
        let mut spec = PlotSpec::new(PlotKind::Radar, vec![vec![0.5, 0.5, 0.5]]);
        assert!(build(&spec).is_err());
        spec.ideal = Some(vec![0.0; 3]);
        spec.nadir = Some(vec![1.0; 3]);
        assert!(build(&spec).is_ok());
        spec.data.push(vec![2.0, 0.0, 0.0]);
        assert!(build(&spec).is_err());
    }

    #[test]
    fn bad_indices_rejected() {
        let mut spec = PlotSpec::new(PlotKind::Petal, vec![vec![0.5, 0.5]]);
        spec.row = 3;
        assert!(build(&spec).is_err());
        let mut spec = PlotSpec::new(PlotKind::Radviz, vec![vec![0.5, 0.5]]);
        spec.highlight = vec![1];
        assert!(build(&spec).is_err());
    }

    proptest! {
        #[test]
        fn normalization_is_idempotent(f in prop::collection::vec(prop::collection::vec(-10.0f64..10.0, 3), 1..20)) {
            let once = normalize(&f);
            let twice = normalize(&once);
            for (a, b) in once.iter().flatten().zip(twice.iter().flatten()) {
                prop_assert!((a - b).abs() < 1e-12);
                prop_assert!((0.0..=1.0).contains(a));
            }
        }

        #[test]
        fn every_kind_yields_finite_geometry(f in prop::collection::vec(prop::collection::vec(0.0f64..1.0, 3), 1..15)) {
            for kind in PlotKind::ALL {
                let mut spec = PlotSpec::new(kind, f.clone());
                spec.ideal = Some(vec![0.0; 3]);
                spec.nadir = Some(vec![1.0; 3]);
                spec.normalize = true;
                let g = match build(&spec) {
                    Ok(g) => g,
                    Err(_) => {
                        prop_assert_eq!(kind, PlotKind::Scatter2d);
                        continue;
                    }
                };
                for p in &g.primitives {
                    let pts: Vec<Point> = match &p.shape {
                        Shape::Polyline(v) | Shape::Polygon(v) => v.clone(),
                        Shape::Circle { center, .. } | Shape::Wedge { center, .. } => vec![*center],
                        Shape::Text { at, .. } => vec![*at],
                    };
                    prop_assert!(pts.iter().flatten().all(|v| v.is_finite()));
                }
            }
        }
    }
}
