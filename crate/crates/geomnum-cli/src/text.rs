//! Human-readable report rendering.
//!
//! Every function returns a complete newline-terminated block, built only
//! from exact values and fixed formatting, so identical inputs always give
//! byte-identical reports.

use geomnum::descent::{is_basic_triangle, DeformationStep, DescentCertificate, EventKind};
use geomnum::geom::{ConvexPolygon, Point2};
use geomnum::invariants::{CheckStatus, InvariantReport};
use geomnum::lattice::{
    vertex_weight, AvoidanceCertificate, IntegerLine, Lattice2, ReducedBasis2,
};
use geomnum::scalar::{self, Scalar};
use geomnum::torus::SystolicReport;

/// `(x, y)` with a space, as in step narration.
pub fn point(p: &Point2) -> String {
    format!("({}, {})", scalar::to_string(&p.x), scalar::to_string(&p.y))
}

/// `(x,y)` without a space, as in vertex lists.
pub fn point_tight(p: &Point2) -> String {
    format!("({},{})", scalar::to_string(&p.x), scalar::to_string(&p.y))
}

fn s(x: &Scalar) -> String {
    scalar::to_string(x)
}

/// Exact value with its 12-significant-digit decimal rendering.
fn with_approx(x: &Scalar) -> String {
    format!("{} ~ {:.11e}", s(x), scalar::to_f64(x))
}

fn vertex_list(p: &ConvexPolygon) -> String {
    p.vertices().iter().map(point_tight).collect::<Vec<_>>().join(" ")
}

pub fn dual_report(dual: &ConvexPolygon) -> String {
    format!("dual vertices: {}\ndual area: {}\n", vertex_list(dual), s(&dual.area()))
}

pub fn avoidance(cert: &AvoidanceCertificate) -> String {
    let mut out = format!(
        "unavoidable: {}\n",
        if cert.unavoidable { "yes" } else { "no" }
    );
    if let Some(w) = &cert.witness {
        out.push_str(&format!("witness line: ({}, {})\n", w.m, w.n));
    }
    let points = if cert.dual_interior_points.is_empty() {
        "none".to_string()
    } else {
        cert.dual_interior_points
            .iter()
            .map(|l| format!("({},{})", l.m, l.n))
            .collect::<Vec<_>>()
            .join(" ")
    };
    out.push_str(&format!("dual interior lattice points: {points}\n"));
    out
}

/// The supporting line the slide gained: supports the landed vertex at the
/// end but not the sliding vertex at the start.
fn new_supporting_line(step: &DeformationStep, landed: &Point2) -> Option<IntegerLine> {
    let end_index = step.end.vertices().iter().position(|v| v == landed)?;
    let (_, end_lines) = vertex_weight(&step.end, end_index).ok()?;
    let start_lines = vertex_weight(&step.start, step.vd.vertex_index)
        .map(|(_, lines)| lines)
        .unwrap_or_default();
    end_lines.into_iter().find(|l| !start_lines.contains(l))
}

pub fn descent(cert: &DescentCertificate) -> String {
    let mut out = String::new();
    for (i, step) in cert.steps.iter().enumerate() {
        let x0 = step.start.vertex(step.vd.vertex_index);
        let landed = x0.add(&step.vd.direction.scale(&step.t_stop));
        let clause = match step.event {
            EventKind::VertexMerge => format!("vertex-merge at {}", point(&landed)),
            EventKind::WeightIncrease => {
                if landed.is_integer() {
                    format!(
                        "weight-increase (landing on the integer point {})",
                        point(&landed)
                    )
                } else if let Some(line) = new_supporting_line(step, &landed) {
                    format!("weight-increase at line ({}, {})", line.m, line.n)
                } else {
                    format!("weight-increase at {}", point(&landed))
                }
            }
        };
        out.push_str(&format!(
            "step {}: vertex {} slides along {}, t = {},\n        {}; area {} -> {}\n",
            i + 1,
            point(x0),
            point(&step.vd.direction),
            s(&step.t_stop),
            clause,
            s(&step.start.area()),
            s(&step.end.area()),
        ));
    }
    out.push_str(&format!(
        "terminal: {}, area {}, basic triangle: {}\n",
        vertex_list(&cert.terminal),
        s(&cert.terminal_area),
        if is_basic_triangle(&cert.terminal) { "yes" } else { "no" },
    ));
    let start_area = cert
        .steps
        .first()
        .map(|step| step.start.area())
        .unwrap_or_else(|| cert.terminal_area.clone());
    out.push_str(if cert.is_minimal {
        "minimal: yes\n"
    } else if cert.terminal_area < start_area {
        "minimal: no (area decreased along the way)\n"
    } else {
        "minimal: no (terminal area above 3/2)\n"
    });
    out
}

pub fn all_paths(certs: &[DescentCertificate]) -> String {
    let mut out = String::new();
    let mut minimum: Option<Scalar> = None;
    for (i, cert) in certs.iter().enumerate() {
        let step_word = if cert.steps.len() == 1 { "step" } else { "steps" };
        out.push_str(&format!(
            "path {}: {} {step_word}, terminal area {}, basic triangle: {}\n",
            i + 1,
            cert.steps.len(),
            s(&cert.terminal_area),
            if is_basic_triangle(&cert.terminal) { "yes" } else { "no" },
        ));
        minimum = Some(match minimum {
            None => cert.terminal_area.clone(),
            Some(m) => m.min(cert.terminal_area.clone()),
        });
    }
    if let Some(m) = minimum {
        let word = if certs.len() == 1 { "path" } else { "paths" };
        out.push_str(&format!("minimum over {} {word}: {}\n", certs.len(), s(&m)));
    }
    out
}

fn status_word(status: CheckStatus) -> &'static str {
    match status {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "fail",
        CheckStatus::NotApplicable => "not-applicable",
    }
}

pub fn invariants(report: &InvariantReport) -> String {
    let mut out = format!("body: {}\n", report.body_digest);
    let mut pass = 0usize;
    let mut fail = 0usize;
    let mut na = 0usize;
    for e in &report.entries {
        match e.status {
            CheckStatus::Pass => pass += 1,
            CheckStatus::Fail => fail += 1,
            CheckStatus::NotApplicable => na += 1,
        }
        let value = e.value.as_ref().map(s).unwrap_or_else(|| "n/a".into());
        let note = e
            .note
            .as_ref()
            .map(|n| format!(" — {n}"))
            .unwrap_or_default();
        out.push_str(&format!(
            "{}: {} [{}] {}{}\n",
            e.name,
            value,
            e.bound,
            status_word(e.status),
            note
        ));
    }
    out.push_str(&format!(
        "summary: {pass} pass, {fail} fail, {na} not-applicable\n"
    ));
    out
}

pub fn critical(
    delta: &Scalar,
    lattice: &Lattice2,
    coefficients: (i64, i64),
    gauge: &Scalar,
) -> String {
    let (b1, b2) = lattice.basis();
    format!(
        "critical determinant: {}\nbasis: {} {}\nadmissible: yes (shortest vector ({}, {}), gauge {})\n",
        with_approx(delta),
        point(b1),
        point(b2),
        coefficients.0,
        coefficients.1,
        s(gauge),
    )
}

pub fn reduce(rb: &ReducedBasis2) -> String {
    let t = &rb.transform;
    let v1 = Point2::new(t.a.clone(), t.c.clone());
    let v2 = Point2::new(t.b.clone(), t.d.clone());
    format!(
        "reduced basis: {} {}\nsuccessive minima: {}, {}\n",
        point(&v1),
        point(&v2),
        s(&rb.a1),
        s(&rb.a2),
    )
}

fn inequality_line(defect: &Scalar) -> String {
    match scalar::sign(defect) {
        0 => format!("equality (defect {})", s(defect)),
        1 => format!("holds (defect {})", s(defect)),
        _ => format!("VIOLATED (defect {})", s(defect)),
    }
}

pub fn torus_check(report: &SystolicReport) -> String {
    let mut out = format!("systole: {}\n", s(&report.systole));
    out.push_str(&format!(
        "ht area times pi: {}\n",
        s(&report.ht_area_times_pi)
    ));
    out.push_str(&match &report.bh_area_over_pi {
        Some(q) => format!("bh area over pi: {}\n", s(q)),
        None => "bh area over pi: n/a (irreversible)\n".into(),
    });
    out.push_str(&format!(
        "general inequality: {}\n",
        inequality_line(&report.defect_general)
    ));
    out.push_str(&match &report.defect_reversible {
        Some(d) => format!("reversible inequality: {}\n", inequality_line(d)),
        None => "reversible inequality: n/a (irreversible)\n".into(),
    });
    out.push_str(&match report.zoll {
        Some(true) => "zoll: yes\n",
        Some(false) => "zoll: no\n",
        None => "zoll: undecidable (non-standard lattice)\n",
    });
    out
}
