//! SVG figures of a rational triangle with its coloured Euler lines, circles
//! and centers.
//!
//! Geometry stays exact until a coordinate is written; blue circles become
//! `<ellipse>` elements and red or green circles become one `<path>` holding
//! both hyperbola branches.

use std::fmt::Write as _;

use chromogeometry::centers::{center_set, euler_line};
use chromogeometry::circle::{circumcircle, nine_point_circle};
use chromogeometry::{Circle, Colour, Line, Point, Scalar, Triangle};

use crate::error::CliError;

pub const DEFAULT_WIDTH: u32 = 800;
pub const SAMPLES_PER_BRANCH: usize = 256;
const MARGIN: f64 = 0.2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Element {
    Euler,
    Circumcircles,
    Ninepoint,
    Centers,
}

impl Element {
    pub const ALL: [Element; 4] = [
        Element::Euler,
        Element::Circumcircles,
        Element::Ninepoint,
        Element::Centers,
    ];
}

pub fn stroke(colour: Colour) -> &'static str {
    match colour {
        Colour::Blue => "#0066cc",
        Colour::Red => "#cc0000",
        Colour::Green => "#00a000",
    }
}

fn f(x: &Scalar) -> f64 {
    x.to_f64().expect("rational scalar")
}

fn xy(p: &Point) -> (f64, f64) {
    (f(p.x()), f(p.y()))
}

/// World-to-pixel mapping with the y axis flipped.
struct Viewport {
    xmin: f64,
    xmax: f64,
    ymin: f64,
    ymax: f64,
    scale: f64,
    width: u32,
    height: u32,
}

impl Viewport {
    fn around(points: &[(f64, f64)], width: u32) -> Self {
        let (mut xmin, mut xmax) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut ymin, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY);
        for &(x, y) in points {
            xmin = xmin.min(x);
            xmax = xmax.max(x);
            ymin = ymin.min(y);
            ymax = ymax.max(y);
        }
        let (w, h) = (xmax - xmin, ymax - ymin);
        let (xmin, xmax) = (xmin - MARGIN * w, xmax + MARGIN * w);
        let (ymin, ymax) = (ymin - MARGIN * h, ymax + MARGIN * h);
        let scale = f64::from(width) / (xmax - xmin);
        let height = ((ymax - ymin) * scale).round().max(1.0) as u32;
        Viewport {
            xmin,
            xmax,
            ymin,
            ymax,
            scale,
            width,
            height,
        }
    }

    fn px(&self, (x, y): (f64, f64)) -> (f64, f64) {
        ((x - self.xmin) * self.scale, (self.ymax - y) * self.scale)
    }

    /// Largest coordinate offset from `c` to any corner of the viewport.
    fn reach(&self, (cx, cy): (f64, f64)) -> f64 {
        [
            self.xmin - cx,
            self.xmax - cx,
            self.ymin - cy,
            self.ymax - cy,
        ]
        .into_iter()
        .map(f64::abs)
        .fold(0.0, f64::max)
    }

    /// Clips `a x + b y + c = 0` to the viewport (Liang-Barsky).
    fn clip_line(&self, l: &Line) -> Option<((f64, f64), (f64, f64))> {
        let (a, b, c) = (f(l.a()), f(l.b()), f(l.c()));
        let n2 = a * a + b * b;
        let p0 = (-a * c / n2, -b * c / n2);
        let d = (-b, a);
        let (mut t0, mut t1) = (f64::NEG_INFINITY, f64::INFINITY);
        for (dp, lo, hi, p) in [
            (d.0, self.xmin, self.xmax, p0.0),
            (d.1, self.ymin, self.ymax, p0.1),
        ] {
            if dp == 0.0 {
                if p < lo || p > hi {
                    return None;
                }
                continue;
            }
            let (ta, tb) = ((lo - p) / dp, (hi - p) / dp);
            t0 = t0.max(ta.min(tb));
            t1 = t1.min(ta.max(tb));
        }
        (t0 < t1).then_some({
            (
                (p0.0 + t0 * d.0, p0.1 + t0 * d.1),
                (p0.0 + t1 * d.0, p0.1 + t1 * d.1),
            )
        })
    }
}

/// Formats a pixel coordinate, rejecting non-finite values.
fn num(v: f64) -> Result<String, CliError> {
    if !v.is_finite() {
        return Err(CliError::CheckFailed(format!(
            "non-finite SVG coordinate {v}"
        )));
    }
    let s = format!("{v:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    Ok(if s == "-0" || s.is_empty() {
        "0".into()
    } else {
        s.into()
    })
}

fn log_space(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..n).map(move |i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
}

fn lin_space(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
}

/// The two branches of a red or green circle as world-coordinate polylines.
/// A zero quadrance gives the pair of null lines through the center.
fn conic_branches(circle: &Circle, view: &Viewport) -> [Vec<(f64, f64)>; 2] {
    let (cx, cy) = xy(&circle.center);
    let k = f(&circle.quadrance);
    let r = 2.0 * view.reach((cx, cy));
    let n = SAMPLES_PER_BRANCH;
    let shift = |(u, v): (f64, f64)| (cx + u, cy + v);
    if k == 0.0 {
        let [d1, d2] = match circle.colour {
            Colour::Green => [(1.0, 0.0), (0.0, 1.0)],
            _ => [(1.0, 1.0), (1.0, -1.0)],
        };
        return [d1, d2].map(|(dx, dy)| {
            lin_space(-r, r, n)
                .map(|t| shift((t * dx, t * dy)))
                .collect()
        });
    }
    let param: Box<dyn Fn(f64) -> (f64, f64)> = match circle.colour {
        Colour::Green => Box::new(move |t| (t, k / (2.0 * t))),
        _ => Box::new(move |t| (t + k / (4.0 * t), t - k / (4.0 * t))),
    };
    let denom = if circle.colour == Colour::Green {
        2.0
    } else {
        4.0
    };
    let t_lo = (k.abs() / (denom * r)).min(r);
    let t_hi = r.max(t_lo);
    [1.0, -1.0].map(|sign| {
        log_space(t_lo, t_hi, n)
            .map(|t| shift(param(sign * t)))
            .collect()
    })
}

/// Renders the figure. Only rational triangles can be drawn.
pub fn render(t: &Triangle, elements: &[Element], width: u32) -> Result<String, CliError> {
    if !t.field().is_rational() {
        return Err(CliError::Field(
            "svg output needs the rational field; finite fields have no planar embedding".into(),
        ));
    }
    if width == 0 {
        return Err(CliError::Input("width must be positive".into()));
    }
    let has = |e: Element| elements.contains(&e);
    let centers = center_set(t)?;
    let circum = Colour::ALL.map(|c| circumcircle(c, t));
    let ninept = Colour::ALL.map(|c| nine_point_circle(c, t));

    // labelled centers shown, in drawing order
    let mut marks: Vec<(String, &'static str, &Point)> = Vec::new();
    let all_centers = has(Element::Euler) || has(Element::Centers);
    for c in Colour::ALL {
        let cc = centers.get(c);
        let s = c.initial();
        if all_centers {
            marks.push((format!("O_{s}"), stroke(c), &cc.orthocenter));
        }
        if all_centers || has(Element::Circumcircles) {
            marks.push((format!("C_{s}"), stroke(c), &cc.circumcenter));
        }
        if all_centers || has(Element::Ninepoint) {
            marks.push((format!("N_{s}"), stroke(c), &cc.nine_point_center));
        }
    }
    if all_centers {
        marks.push(("G".into(), "black", &centers.centroid));
    }

    let mut world: Vec<(f64, f64)> = t.points().iter().map(xy).collect();
    world.extend(marks.iter().map(|(_, _, p)| xy(p)));
    let view = Viewport::around(&world, width);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = view.width,
        h = view.height
    );
    let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);

    let poly = |pts: &[(f64, f64)]| -> Result<String, CliError> {
        let mut d = String::new();
        for (i, &p) in pts.iter().enumerate() {
            let (x, y) = view.px(p);
            let _ = write!(
                d,
                "{}{} {}",
                if i == 0 { "M" } else { " L" },
                num(x)?,
                num(y)?
            );
        }
        Ok(d)
    };

    let draw_circles =
        |out: &mut String, list: &[Circle; 3], class: &str, dash: &str| -> Result<(), CliError> {
            let _ = writeln!(
                out,
                r#"  <g class="{class}" fill="none" stroke-width="1.5"{dash}>"#
            );
            for circle in list {
                let colour = stroke(circle.colour);
                let k = f(&circle.quadrance);
                if circle.colour == Colour::Blue {
                    if k > 0.0 {
                        let (cx, cy) = view.px(xy(&circle.center));
                        let r = k.sqrt() * view.scale;
                        let _ = writeln!(
                            out,
                            r#"    <ellipse cx="{}" cy="{}" rx="{r}" ry="{r}" stroke="{colour}"/>"#,
                            num(cx)?,
                            num(cy)?,
                            r = num(r)?
                        );
                    }
                    continue;
                }
                let [b1, b2] = conic_branches(circle, &view);
                let _ = writeln!(
                    out,
                    r#"    <path class="{}" d="{} {}" stroke="{colour}"/>"#,
                    circle.colour,
                    poly(&b1)?,
                    poly(&b2)?
                );
            }
            let _ = writeln!(out, "  </g>");
            Ok(())
        };

    if has(Element::Circumcircles) {
        draw_circles(&mut out, &circum, "circumcircles", "")?;
    }
    if has(Element::Ninepoint) {
        draw_circles(
            &mut out,
            &ninept,
            "nine-point-circles",
            r#" stroke-dasharray="6 4""#,
        )?;
    }
    if has(Element::Euler) {
        let _ = writeln!(out, r#"  <g class="euler-lines" stroke-width="1.5">"#);
        for c in Colour::ALL {
            let Ok(l) = euler_line(c, t) else { continue };
            if let Some((p, q)) = view.clip_line(&l) {
                let ((x1, y1), (x2, y2)) = (view.px(p), view.px(q));
                let _ = writeln!(
                    out,
                    r#"    <line class="{c}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}"/>"#,
                    num(x1)?,
                    num(y1)?,
                    num(x2)?,
                    num(y2)?,
                    stroke(c)
                );
            }
        }
        let _ = writeln!(out, "  </g>");
    }

    let verts: Vec<(f64, f64)> = t.points().iter().map(|p| view.px(xy(p))).collect();
    let mut pts = Vec::new();
    for &(x, y) in &verts {
        pts.push(format!("{},{}", num(x)?, num(y)?));
    }
    let _ = writeln!(
        out,
        r#"  <polygon class="triangle" points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
        pts.join(" ")
    );
    let _ = writeln!(
        out,
        r#"  <g class="vertices" font-family="sans-serif" font-size="13">"#
    );
    for (i, &(x, y)) in verts.iter().enumerate() {
        let _ = writeln!(
            out,
            r#"    <text x="{}" y="{}">A{}</text>"#,
            num(x + 5.0)?,
            num(y - 5.0)?,
            i + 1
        );
    }
    let _ = writeln!(out, "  </g>");

    if !marks.is_empty() {
        let _ = writeln!(
            out,
            r#"  <g class="centers" font-family="sans-serif" font-size="12">"#
        );
        for (label, colour, p) in &marks {
            let (x, y) = view.px(xy(p));
            let _ = writeln!(
                out,
                r#"    <circle class="center" data-label="{label}" cx="{}" cy="{}" r="3" fill="{colour}"/>"#,
                num(x)?,
                num(y)?
            );
            let _ = writeln!(
                out,
                r#"    <text x="{}" y="{}" fill="{colour}">{label}</text>"#,
                num(x + 4.0)?,
                num(y - 4.0)?
            );
        }
        let _ = writeln!(out, "  </g>");
    }
    let _ = writeln!(out, "</svg>");
    Ok(out)
}
