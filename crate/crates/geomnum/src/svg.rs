//! Deterministic SVG rendering of bodies, integer-line families, and
//! descent traces.
//!
//! Output is byte-deterministic: coordinates are printed with exactly four
//! decimals, attributes appear in alphabetical order, and nothing depends
//! on hash ordering or locale.  Renderings are therefore comparable as
//! golden files.  The drawing is plain SVG 1.1 with no external assets.

use crate::descent::DescentCertificate;
use crate::geom::ConvexPolygon;
use crate::scalar;

/// What to draw: one body, optionally the family of integer lines
/// `m·x + n·y = 1` with `|m|, |n| ≤ M`, optionally the frames of a descent.
#[derive(Clone, Debug)]
pub struct SvgScene {
    pub body: ConvexPolygon,
    /// Draw integer lines with coefficients bounded by this.
    pub max_line_coeff: Option<i64>,
    /// Overlay the successive polygons of a descent, labeled by step.
    pub trace: Option<DescentCertificate>,
    /// Half-width of the square view window, in body coordinates.
    pub half_extent: f64,
}

impl SvgScene {
    /// A scene framing the body (and any trace frames) with a margin.
    pub fn for_body(body: ConvexPolygon) -> SvgScene {
        let mut extent: f64 = 1.0;
        for v in body.vertices() {
            extent = extent
                .max(scalar::to_f64(&v.x).abs())
                .max(scalar::to_f64(&v.y).abs());
        }
        SvgScene {
            body,
            max_line_coeff: None,
            trace: None,
            half_extent: extent * 1.25 + 0.25,
        }
    }

    /// Same scene with the integer-line family drawn.
    pub fn with_lines(mut self, max_coeff: i64) -> SvgScene {
        self.max_line_coeff = Some(max_coeff);
        self
    }

    /// Same scene with a descent trace overlaid (the view grows to fit
    /// every frame).
    pub fn with_trace(mut self, trace: DescentCertificate) -> SvgScene {
        for step in &trace.steps {
            for p in [&step.start, &step.end] {
                for v in p.vertices() {
                    self.half_extent = self
                        .half_extent
                        .max(scalar::to_f64(&v.x).abs() * 1.25 + 0.25)
                        .max(scalar::to_f64(&v.y).abs() * 1.25 + 0.25);
                }
            }
        }
        self.trace = Some(trace);
        self
    }
}

/// Pixel size of the square canvas.
const CANVAS: f64 = 480.0;

struct Frame {
    scale: f64,
}

impl Frame {
    fn new(half_extent: f64) -> Frame {
        Frame { scale: CANVAS / (2.0 * half_extent) }
    }

    /// World to canvas; SVG's y axis points down.
    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        (CANVAS / 2.0 + x * self.scale, CANVAS / 2.0 - y * self.scale)
    }
}

fn fmt(v: f64) -> String {
    // Fixed four decimals; avoid the distinct "-0.0000".
    let v = if v.abs() < 5e-5 { 0.0 } else { v };
    format!("{v:.4}")
}

fn polygon_points(frame: &Frame, p: &ConvexPolygon) -> String {
    let mut parts = Vec::with_capacity(p.vertex_count());
    for v in p.vertices() {
        let (x, y) = frame.map(scalar::to_f64(&v.x), scalar::to_f64(&v.y));
        parts.push(format!("{},{}", fmt(x), fmt(y)));
    }
    parts.join(" ")
}

/// Clip the line `m·x + n·y = 1` to the square `[−h, h]²`; returns the
/// chord endpoints when the line crosses the window.
fn clip_line(m: i64, n: i64, h: f64) -> Option<((f64, f64), (f64, f64))> {
    let (mf, nf) = (m as f64, n as f64);
    let mut hits: Vec<(f64, f64)> = Vec::new();
    let push = |hits: &mut Vec<(f64, f64)>, x: f64, y: f64| {
        if x.abs() <= h + 1e-9 && y.abs() <= h + 1e-9 {
            let is_new = hits
                .iter()
                .all(|&(px, py)| (px - x).abs() + (py - y).abs() > 1e-9);
            if is_new {
                hits.push((x, y));
            }
        }
    };
    if nf != 0.0 {
        for x in [-h, h] {
            push(&mut hits, x, (1.0 - mf * x) / nf);
        }
    }
    if mf != 0.0 {
        for y in [-h, h] {
            push(&mut hits, (1.0 - nf * y) / mf, y);
        }
    }
    match hits.as_slice() {
        [a, b, ..] => Some((*a, *b)),
        _ => None,
    }
}

/// Render a scene as a standalone SVG 1.1 document.
pub fn render_svg(scene: &SvgScene) -> String {
    assert!(
        scene.half_extent.is_finite() && scene.half_extent > 0.0,
        "view bounds must be finite"
    );
    let frame = Frame::new(scene.half_extent);
    let mut out = String::new();
    out.push_str(&format!(
        "<svg height=\"{c}\" version=\"1.1\" viewBox=\"0 0 {c} {c}\" width=\"{c}\" xmlns=\"http://www.w3.org/2000/svg\">\n",
        c = CANVAS as i64
    ));
    out.push_str(&format!(
        "  <rect fill=\"#ffffff\" height=\"{c}\" width=\"{c}\" x=\"0\" y=\"0\"/>\n",
        c = CANVAS as i64
    ));

    // Coordinate axes, then the integer-line family.
    for (x1, y1, x2, y2) in [
        (-scene.half_extent, 0.0, scene.half_extent, 0.0),
        (0.0, -scene.half_extent, 0.0, scene.half_extent),
    ] {
        let (ax, ay) = frame.map(x1, y1);
        let (bx, by) = frame.map(x2, y2);
        out.push_str(&format!(
            "  <line stroke=\"#c8c8c8\" stroke-width=\"1\" x1=\"{}\" x2=\"{}\" y1=\"{}\" y2=\"{}\"/>\n",
            fmt(ax), fmt(bx), fmt(ay), fmt(by)
        ));
    }
    if let Some(max_coeff) = scene.max_line_coeff {
        for m in -max_coeff..=max_coeff {
            for n in -max_coeff..=max_coeff {
                if (m, n) == (0, 0) {
                    continue;
                }
                let Some(((x1, y1), (x2, y2))) = clip_line(m, n, scene.half_extent) else {
                    continue;
                };
                let (ax, ay) = frame.map(x1, y1);
                let (bx, by) = frame.map(x2, y2);
                out.push_str(&format!(
                    "  <line stroke=\"#8c8c8c\" stroke-width=\"0.5\" x1=\"{}\" x2=\"{}\" y1=\"{}\" y2=\"{}\"/>\n",
                    fmt(ax), fmt(bx), fmt(ay), fmt(by)
                ));
            }
        }
    }

    // Descent frames under the final body, fading with depth.
    if let Some(trace) = &scene.trace {
        for (i, step) in trace.steps.iter().enumerate() {
            let opacity = 0.25 + 0.5 * (i as f64 + 1.0) / (trace.steps.len() as f64 + 1.0);
            out.push_str(&format!(
                "  <polygon fill=\"none\" points=\"{}\" stroke=\"#c0392b\" stroke-opacity=\"{}\" stroke-width=\"1.5\"/>\n",
                polygon_points(&frame, &step.start),
                fmt(opacity)
            ));
            let vertex = step.start.vertex(step.vd.vertex_index);
            let (lx, ly) = frame.map(
                scalar::to_f64(&vertex.x),
                scalar::to_f64(&vertex.y),
            );
            out.push_str(&format!(
                "  <text fill=\"#c0392b\" font-family=\"monospace\" font-size=\"12\" x=\"{}\" y=\"{}\">step {}</text>\n",
                fmt(lx + 4.0),
                fmt(ly - 4.0),
                i
            ));
        }
    }

    out.push_str(&format!(
        "  <polygon fill=\"#2a6fb0\" fill-opacity=\"0.15\" points=\"{}\" stroke=\"#2a6fb0\" stroke-width=\"2\"/>\n",
        polygon_points(&frame, &scene.body)
    ));
    for v in scene.body.vertices() {
        let (cx, cy) = frame.map(scalar::to_f64(&v.x), scalar::to_f64(&v.y));
        out.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" fill=\"#2a6fb0\" r=\"3\"/>\n",
            fmt(cx),
            fmt(cy)
        ));
    }
    out.push_str("</svg>\n");
    out
}
