use std::fmt::Write as _;
use std::path::Path;

use super::{Anchor, PlotGeometry, Point, Primitive, Radius, Role, Shape};
use crate::error::Result;

/// Width and height of the emitted canvas in user units.
pub const CANVAS_SIZE: f64 = 600.0;
const MARGIN: f64 = 30.0;

struct Mapper {
    b: [f64; 4],
    sx: f64,
    sy: f64,
}

impl Mapper {
    fn new(b: [f64; 4]) -> Self {
        let span = |lo: f64, hi: f64| if hi > lo { hi - lo } else { 1.0 };
        let inner = CANVAS_SIZE - 2.0 * MARGIN;
        Self {
            b,
            sx: inner / span(b[0], b[2]),
            sy: inner / span(b[1], b[3]),
        }
    }

    fn map(&self, p: Point) -> Point {
        [
            MARGIN + (p[0] - self.b[0]) * self.sx,
            CANVAS_SIZE - MARGIN - (p[1] - self.b[1]) * self.sy,
        ]
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn points_attr(m: &Mapper, pts: &[Point]) -> String {
    pts.iter()
        .map(|p| {
            let [x, y] = m.map(*p);
            format!("{},{}", num(x), num(y))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn paint(g: &PlotGeometry, p: &Primitive) -> String {
    let s = &g.style;
    let w = num(s.stroke_width);
    let op = num(s.opacity);
    let filled = matches!(
        p.shape,
        Shape::Circle {
            radius: Radius::Marker,
            ..
        } | Shape::Wedge { .. }
    );
    let color = match p.role {
        Role::Highlight => s.highlight_color.as_str(),
        Role::Data => s.color.as_str(),
        _ => "#000000",
    };
    match p.role {
        Role::Cell => format!(
            r#"fill="{}" stroke="none""#,
            escape(p.color.as_deref().unwrap_or("#000000"))
        ),
        Role::Label => r##"fill="#000000" font-family="sans-serif" font-size="12""##.into(),
        Role::Axis => format!(r##"fill="none" stroke="#000000" stroke-width="{w}""##),
        Role::Reference | Role::Panel => {
            format!(r##"fill="none" stroke="#888888" stroke-width="{w}""##)
        }
        Role::Data | Role::Highlight if filled => format!(
            r#"fill="{}" fill-opacity="{op}" stroke="{}" stroke-width="{w}""#,
            escape(color),
            escape(color)
        ),
        Role::Data | Role::Highlight => format!(
            r#"fill="none" stroke="{}" stroke-opacity="{op}" stroke-width="{w}""#,
            escape(color)
        ),
    }
}

fn element(g: &PlotGeometry, m: &Mapper, p: &Primitive) -> String {
    let paint = paint(g, p);
    match &p.shape {
        Shape::Polyline(pts) => {
            format!(r#"<polyline points="{}" {paint}/>"#, points_attr(m, pts))
        }
        Shape::Polygon(pts) => {
            format!(r#"<polygon points="{}" {paint}/>"#, points_attr(m, pts))
        }
        Shape::Circle { center, radius } => {
            let [cx, cy] = m.map(*center);
            let r = match radius {
                Radius::Data(r) => r * m.sx.min(m.sy),
                Radius::Marker => g.style.marker_radius,
            };
            format!(
                r#"<circle cx="{}" cy="{}" r="{}" {paint}/>"#,
                num(cx),
                num(cy),
                num(r)
            )
        }
        Shape::Wedge {
            center,
            radius,
            start,
            end,
        } => {
            let at = |a: f64| m.map([center[0] + radius * a.cos(), center[1] + radius * a.sin()]);
            let [cx, cy] = m.map(*center);
            let [x0, y0] = at(*start);
            let [x1, y1] = at(*end);
            let large = u8::from(end - start > std::f64::consts::PI);
            format!(
                r#"<path d="M {} {} L {} {} A {} {} 0 {large} 0 {} {} Z" {paint}/>"#,
                num(cx),
                num(cy),
                num(x0),
                num(y0),
                num(radius * m.sx),
                num(radius * m.sy),
                num(x1),
                num(y1)
            )
        }
        Shape::Text { at, text, anchor } => {
            let [x, y] = m.map(*at);
            let anchor = match anchor {
                Anchor::Start => "start",
                Anchor::Middle => "middle",
                Anchor::End => "end",
            };
            format!(
                r#"<text x="{}" y="{}" text-anchor="{anchor}" {paint}>{}</text>"#,
                num(x),
                num(y),
                escape(text)
            )
        }
    }
}

/// Standalone SVG 1.1 document. Output depends only on `geometry`.
pub fn render_svg(geometry: &PlotGeometry) -> String {
    let m = Mapper::new(geometry.bounds);
    let size = num(CANVAS_SIZE);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(
        out,
        r##"<rect x="0.500000" y="0.500000" width="{0}" height="{0}" fill="#ffffff" stroke="#000000" stroke-width="1.000000"/>"##,
        num(CANVAS_SIZE - 1.0)
    );
    for p in &geometry.primitives {
        out.push_str(&element(geometry, &m, p));
        out.push('\n');
    }
    out.push_str("</svg>\n");
    out
}

pub fn write_svg(geometry: &PlotGeometry, path: &Path) -> Result<()> {
    crate::io::write_file(path, &render_svg(geometry))
}
