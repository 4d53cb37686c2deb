use std::f64::consts::TAU;

use super::{normalize, Anchor, PlotGeometry, Point, Primitive, Radius, Role, Shape, Style};
use crate::error::{Error, Result};

/// Radius of the ideal-point polygon in radar charts; the nadir sits at 1.
pub const RADAR_INNER_RADIUS: f64 = 0.2;
/// Fixed camera for 3-D scatter plots (orthographic).
pub const VIEW_AZIMUTH_DEG: f64 = 45.0;
pub const VIEW_ELEVATION_DEG: f64 = 30.0;

const LABEL_OFFSET: f64 = 1.12;
const RADIAL_BOUNDS: [f64; 4] = [-1.25, -1.25, 1.25, 1.25];

fn anchor(j: usize, m: usize) -> Point {
    let a = TAU * j as f64 / m as f64;
    [a.cos(), a.sin()]
}

fn label(j: usize) -> String {
    format!("f{}", j + 1)
}

fn text(at: Point, s: String, anchor: Anchor) -> Primitive {
    Primitive::new(
        Shape::Text {
            at,
            text: s,
            anchor,
        },
        Role::Label,
    )
}

fn marker(at: Point, highlighted: bool) -> Primitive {
    let role = if highlighted {
        Role::Highlight
    } else {
        Role::Data
    };
    Primitive::new(
        Shape::Circle {
            center: at,
            radius: Radius::Marker,
        },
        role,
    )
}

/// Data markers, highlighted rows last so they are drawn on top.
fn markers(points: &[Point], highlight: &[usize]) -> Vec<Primitive> {
    let mut out: Vec<Primitive> = points
        .iter()
        .enumerate()
        .filter(|(i, _)| !highlight.contains(i))
        .map(|(_, p)| marker(*p, false))
        .collect();
    let mut hl = highlight.to_vec();
    hl.sort_unstable();
    hl.dedup();
    out.extend(hl.iter().map(|&i| marker(points[i], true)));
    out
}

fn unit_circle(role: Role) -> Primitive {
    Primitive::new(
        Shape::Circle {
            center: [0.0, 0.0],
            radius: Radius::Data(1.0),
        },
        role,
    )
}

fn anchor_labels(m: usize) -> Vec<Primitive> {
    (0..m)
        .map(|j| {
            let [x, y] = anchor(j, m);
            text(
                [x * LABEL_OFFSET, y * LABEL_OFFSET],
                label(j),
                Anchor::Middle,
            )
        })
        .collect()
}

fn geometry(bounds: [f64; 4], primitives: Vec<Primitive>) -> PlotGeometry {
    PlotGeometry {
        bounds,
        primitives,
        style: Style::default(),
    }
}

/// Anchors evenly spaced on the unit circle; each point is the
/// value-weighted mean of the anchors. All-zero rows map to the origin.
pub fn project_radviz(f: &[Vec<f64>]) -> Vec<Point> {
    f.iter()
        .map(|row| {
            let m = row.len();
            let total: f64 = row.iter().sum();
            if total == 0.0 {
                return [0.0, 0.0];
            }
            let mut p = [0.0, 0.0];
            for (j, s) in row.iter().enumerate() {
                let a = anchor(j, m);
                p[0] += s * a[0];
                p[1] += s * a[1];
            }
            [p[0] / total, p[1] / total]
        })
        .collect()
}

/// Plain sum of value-scaled anchors; points may leave the unit circle.
pub fn project_star(f: &[Vec<f64>]) -> Vec<Point> {
    f.iter()
        .map(|row| {
            let m = row.len();
            row.iter().enumerate().fold([0.0, 0.0], |p, (j, s)| {
                let a = anchor(j, m);
                [p[0] + s * a[0], p[1] + s * a[1]]
            })
        })
        .collect()
}

fn need_objectives(m: usize, min: usize, what: &str) -> Result<()> {
    if m < min {
        return Err(Error::invalid(format!(
            "{what} needs at least {min} objectives, got {m}"
        )));
    }
    Ok(())
}

fn width(f: &[Vec<f64>]) -> usize {
    f.first().map_or(0, Vec::len)
}

pub fn layout_radviz(f_normalized: &[Vec<f64>], highlight: &[usize]) -> Result<PlotGeometry> {
    let m = width(f_normalized);
    need_objectives(m, 2, "radviz")?;
    let mut prims = vec![unit_circle(Role::Reference)];
    prims.extend(anchor_labels(m));
    prims.extend(markers(&project_radviz(f_normalized), highlight));
    Ok(geometry(RADIAL_BOUNDS, prims))
}

pub fn layout_star(f_normalized: &[Vec<f64>], highlight: &[usize]) -> Result<PlotGeometry> {
    let m = width(f_normalized);
    need_objectives(m, 2, "star coordinates")?;
    let points = project_star(f_normalized);
    let reach = points
        .iter()
        .map(|p| p[0].abs().max(p[1].abs()))
        .fold(1.0, f64::max)
        * 1.25;
    let mut prims: Vec<Primitive> = (0..m)
        .map(|j| Primitive::new(Shape::Polyline(vec![[0.0, 0.0], anchor(j, m)]), Role::Axis))
        .collect();
    prims.extend(anchor_labels(m));
    prims.extend(markers(&points, highlight));
    Ok(geometry([-reach, -reach, reach, reach], prims))
}

/// Vertical axis per objective at `j / (M - 1)`, one polyline per row.
pub fn layout_pcp(f: &[Vec<f64>], normalized: bool, highlight: &[usize]) -> Result<PlotGeometry> {
    let m = width(f);
    if m < 2 {
        return Err(Error::invalid(
            "parallel coordinates need at least 2 objectives",
        ));
    }
    let data = if normalized { normalize(f) } else { f.to_vec() };
    let (lo, hi) = data
        .iter()
        .flatten()
        .fold((0.0f64, 1.0f64), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    let x = |j: usize| j as f64 / (m - 1) as f64;
    let mut prims: Vec<Primitive> = (0..m)
        .map(|j| Primitive::new(Shape::Polyline(vec![[x(j), lo], [x(j), hi]]), Role::Axis))
        .collect();
    let pad = 0.06 * (hi - lo);
    prims.extend((0..m).map(|j| text([x(j), lo - pad], label(j), Anchor::Middle)));
    let line = |row: &Vec<f64>, role| {
        Primitive::new(
            Shape::Polyline(row.iter().enumerate().map(|(j, &v)| [x(j), v]).collect()),
            role,
        )
    };
    for (i, row) in data.iter().enumerate() {
        if !highlight.contains(&i) {
            prims.push(line(row, Role::Data));
        }
    }
    for (i, row) in data.iter().enumerate() {
        if highlight.contains(&i) {
            prims.push(line(row, Role::Highlight));
        }
    }
    Ok(geometry([-0.05, lo - 2.0 * pad, 1.05, hi + pad], prims))
}

fn data_bounds(points: &[Point]) -> [f64; 4] {
    let mut b = [
        f64::INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::NEG_INFINITY,
    ];
    for p in points {
        b = [
            b[0].min(p[0]),
            b[1].min(p[1]),
            b[2].max(p[0]),
            b[3].max(p[1]),
        ];
    }
    if !b[0].is_finite() {
        return [0.0, 0.0, 1.0, 1.0];
    }
    for (lo, hi) in [(0, 2), (1, 3)] {
        let span = b[hi] - b[lo];
        let pad = if span > 0.0 { 0.08 * span } else { 0.5 };
        b[lo] -= pad;
        b[hi] += pad;
    }
    b
}

pub fn layout_scatter2d(f: &[Vec<f64>], highlight: &[usize]) -> Result<PlotGeometry> {
    let m = width(f);
    if m != 2 && !f.is_empty() {
        return Err(Error::invalid(format!(
            "2-D scatter needs 2 objectives, got {m}"
        )));
    }
    let points: Vec<Point> = f.iter().map(|r| [r[0], r[1]]).collect();
    let b = data_bounds(&points);
    let mut prims = vec![
        Primitive::new(
            Shape::Polyline(vec![[b[0], b[1]], [b[2], b[1]]]),
            Role::Axis,
        ),
        Primitive::new(
            Shape::Polyline(vec![[b[0], b[1]], [b[0], b[3]]]),
            Role::Axis,
        ),
        text([b[2], b[1]], label(0), Anchor::End),
        text([b[0], b[3]], label(1), Anchor::Start),
    ];
    prims.extend(markers(&points, highlight));
    Ok(geometry(b, prims))
}

/// Orthographic view of a 3-D point from the fixed camera.
pub fn project_3d(p: &[f64]) -> Point {
    let az = VIEW_AZIMUTH_DEG.to_radians();
    let el = VIEW_ELEVATION_DEG.to_radians();
    let x = p[0] * az.cos() - p[1] * az.sin();
    let depth = p[0] * az.sin() + p[1] * az.cos();
    let y = p[2] * el.cos() - depth * el.sin();
    [x, y]
}

pub fn layout_scatter3d(f: &[Vec<f64>], highlight: &[usize]) -> Result<PlotGeometry> {
    let m = width(f);
    if m != 3 && !f.is_empty() {
        return Err(Error::invalid(format!(
            "3-D scatter needs 3 objectives, got {m}"
        )));
    }
    let mut lo = [0.0f64; 3];
    let mut hi = [1.0f64; 3];
    for r in f {
        for j in 0..3 {
            lo[j] = lo[j].min(r[j]);
            hi[j] = hi[j].max(r[j]);
        }
    }
    let points: Vec<Point> = f.iter().map(|r| project_3d(r)).collect();
    let mut prims = Vec::new();
    let mut ends = Vec::new();
    for j in 0..3 {
        let mut end = lo;
        end[j] = hi[j];
        let (a, b) = (project_3d(&lo), project_3d(&end));
        prims.push(Primitive::new(Shape::Polyline(vec![a, b]), Role::Axis));
        ends.push(b);
    }
    for (j, at) in ends.iter().enumerate() {
        prims.push(text(*at, label(j), Anchor::Middle));
    }
    prims.extend(markers(&points, highlight));
    let mut all = points.clone();
    all.extend(ends);
    all.push(project_3d(&lo));
    Ok(geometry(data_bounds(&all), prims))
}

/// M x M grid of unit panels; the diagonal carries the objective names and
/// panel (r, c) scatters objective c against objective r.
pub fn layout_pairwise(f: &[Vec<f64>], highlight: &[usize]) -> Result<PlotGeometry> {
    let m = width(f);
    need_objectives(m, 2, "pairwise scatter")?;
    let n = normalize(f);
    let inset = |v: f64| 0.08 + 0.84 * v;
    let mut prims = Vec::new();
    for r in 0..m {
        for c in 0..m {
            let x0 = c as f64;
            let y0 = (m - 1 - r) as f64;
            prims.push(Primitive::new(
                Shape::Polygon(vec![
                    [x0, y0],
                    [x0 + 1.0, y0],
                    [x0 + 1.0, y0 + 1.0],
                    [x0, y0 + 1.0],
                ]),
                Role::Panel,
            ));
            if r == c {
                prims.push(text([x0 + 0.5, y0 + 0.5], label(r), Anchor::Middle));
            } else {
                let pts: Vec<Point> = n
                    .iter()
                    .map(|row| [x0 + inset(row[c]), y0 + inset(row[r])])
                    .collect();
                prims.extend(markers(&pts, highlight));
            }
        }
    }
    let s = m as f64;
    Ok(geometry([-0.05, -0.05, s + 0.05, s + 0.05], prims))
}

fn parse_hex(s: &str) -> Option<[f64; 3]> {
    let h = s.strip_prefix('#')?;
    if h.len() != 6 {
        return None;
    }
    let c = |i: usize| u8::from_str_radix(&h[i..i + 2], 16).ok().map(f64::from);
    Some([c(0)?, c(2)?, c(4)?])
}

/// Linear interpolation through the color map stops.
pub(crate) fn color_at(stops: &[String], t: f64) -> Result<String> {
    let rgb: Vec<[f64; 3]> = stops
        .iter()
        .map(|s| parse_hex(s).ok_or_else(|| Error::invalid(format!("bad hex color `{s}`"))))
        .collect::<Result<_>>()?;
    let Some(first) = rgb.first() else {
        return Err(Error::invalid("color map is empty"));
    };
    if rgb.len() == 1 {
        let [r, g, b] = first.map(|v| v as u8);
        return Ok(format!("#{r:02x}{g:02x}{b:02x}"));
    }
    let pos = t.clamp(0.0, 1.0) * (rgb.len() - 1) as f64;
    let i = (pos.floor() as usize).min(rgb.len() - 2);
    let w = pos - i as f64;
    let mix = |k: usize| (rgb[i][k] + w * (rgb[i + 1][k] - rgb[i][k])).round() as u8;
    Ok(format!("#{:02x}{:02x}{:02x}", mix(0), mix(1), mix(2)))
}

/// Row `i` is drawn top-down as cells colored by the normalized value.
pub fn layout_heatmap(f: &[Vec<f64>], sort_rows: bool, style: &Style) -> Result<PlotGeometry> {
    let m = width(f);
    let n = f.len();
    let mut order: Vec<usize> = (0..n).collect();
    if sort_rows {
        order.sort_by(|&a, &b| {
            f[a].iter()
                .zip(&f[b])
                .map(|(x, y)| x.total_cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.cmp(&b))
        });
    }
    let values = normalize(f);
    let mut prims = Vec::with_capacity(n * m + m);
    for (pos, &i) in order.iter().enumerate() {
        let y1 = (n - pos) as f64;
        let y0 = y1 - 1.0;
        for j in 0..m {
            let x0 = j as f64;
            let mut cell = Primitive::new(
                Shape::Polygon(vec![[x0, y0], [x0 + 1.0, y0], [x0 + 1.0, y1], [x0, y1]]),
                Role::Cell,
            );
            cell.color = Some(color_at(&style.colormap, values[i][j])?);
            prims.push(cell);
        }
    }
    prims.extend((0..m).map(|j| text([j as f64 + 0.5, n as f64 + 0.3], label(j), Anchor::Middle)));
    Ok(geometry(
        [-0.1, -0.1, m.max(1) as f64 + 0.1, n as f64 + 0.8],
        prims,
    ))
}

/// One equal-angle wedge per objective with radius equal to its value.
pub fn layout_petal(f_normalized: &[f64]) -> Result<PlotGeometry> {
    let m = f_normalized.len();
    need_objectives(m, 2, "petal diagram")?;
    let step = TAU / m as f64;
    let mut prims = vec![unit_circle(Role::Reference)];
    for (j, &v) in f_normalized.iter().enumerate() {
        prims.push(Primitive::new(
            Shape::Wedge {
                center: [0.0, 0.0],
                radius: v,
                start: j as f64 * step,
                end: (j + 1) as f64 * step,
            },
            Role::Data,
        ));
    }
    prims.extend((0..m).map(|j| {
        let a = (j as f64 + 0.5) * step;
        text(
            [a.cos() * LABEL_OFFSET, a.sin() * LABEL_OFFSET],
            label(j),
            Anchor::Middle,
        )
    }));
    let reach = f_normalized.iter().fold(1.0f64, |a, &v| a.max(v)) * 1.25;
    Ok(geometry([-reach, -reach, reach, reach], prims))
}

fn radial_polygon(radii: impl Iterator<Item = f64>, m: usize) -> Vec<Point> {
    radii
        .enumerate()
        .map(|(j, r)| {
            let [x, y] = anchor(j, m);
            [r * x, r * y]
        })
        .collect()
}

/// Axis per objective; the ideal maps to the inner polygon and the nadir
/// to the outer one, linearly in between.
pub fn layout_radar(f: &[f64], ideal: &[f64], nadir: &[f64]) -> Result<PlotGeometry> {
    let m = f.len();
    need_objectives(m, 3, "radar chart")?;
    if ideal.len() != m || nadir.len() != m {
        return Err(Error::invalid(
            "ideal and nadir must match the objective count",
        ));
    }
    if let Some(j) = (0..m).find(|&j| nadir[j] <= ideal[j]) {
        return Err(Error::invalid(format!(
            "radar needs nadir > ideal in every objective (objective {} has {} vs {})",
            j + 1,
            nadir[j],
            ideal[j]
        )));
    }
    let radius = |j: usize, v: f64| {
        let t = (v - ideal[j]) / (nadir[j] - ideal[j]);
        RADAR_INNER_RADIUS + (1.0 - RADAR_INNER_RADIUS) * t
    };
    let mut prims: Vec<Primitive> = (0..m)
        .map(|j| Primitive::new(Shape::Polyline(vec![[0.0, 0.0], anchor(j, m)]), Role::Axis))
        .collect();
    prims.push(Primitive::new(
        Shape::Polygon(radial_polygon(std::iter::repeat(1.0).take(m), m)),
        Role::Reference,
    ));
    prims.push(Primitive::new(
        Shape::Polygon(radial_polygon(
            std::iter::repeat(RADAR_INNER_RADIUS).take(m),
            m,
        )),
        Role::Reference,
    ));
    prims.push(Primitive::new(
        Shape::Polygon(radial_polygon(
            f.iter().enumerate().map(|(j, &v)| radius(j, v)),
            m,
        )),
        Role::Data,
    ));
    prims.extend(anchor_labels(m));
    Ok(geometry(RADIAL_BOUNDS, prims))
}
