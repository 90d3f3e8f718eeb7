//! Shared helpers for the integration suites: an independent
//! line-intersection oracle and small body constructors.
//!
//! The oracle deliberately avoids the library's dual-based avoidance
//! machinery.  It decides "does the body meet every integer line?" from
//! first principles: a line `m·x + n·y = 1` meets a convex polygon if and
//! only if the value `m·x + n·y` passes through 1 somewhere on the
//! vertex set, and lines with large coefficients pass so close to the
//! origin that a small origin-centered disc inside the body already
//! catches them.  Everything is exact rational arithmetic.

#![allow(dead_code)] // each test binary uses its own subset

use geomnum::geom::{ConvexPolygon, Point2};
use geomnum::scalar::{self, int, Scalar};

/// Does the line `m·x + n·y = 1` intersect the polygon?  Exact: the
/// linear functional attains values on both sides of 1 (or exactly 1).
pub fn line_meets_body(p: &ConvexPolygon, m: i64, n: i64) -> bool {
    let mut min: Option<Scalar> = None;
    let mut max: Option<Scalar> = None;
    for v in p.vertices() {
        let val = &v.x * int(m) + &v.y * int(n);
        if min.as_ref().is_none_or(|b| &val < b) {
            min = Some(val.clone());
        }
        if max.as_ref().is_none_or(|b| &val > b) {
            max = Some(val);
        }
    }
    min.unwrap() <= int(1) && int(1) <= max.unwrap()
}

/// Squared distance from the origin to the nearest edge line, as the
/// radius² of an origin-centered disc inside the body.  Requires the
/// origin in the interior.  For the edge through points `a`, `b` the
/// line is `{x : w·x = c}` with `w = (b − a)⊥`, and the squared distance
/// is `c²/‖w‖²`.
fn inradius_squared_about_origin(p: &ConvexPolygon) -> Scalar {
    let verts = p.vertices();
    let mut best: Option<Scalar> = None;
    for i in 0..verts.len() {
        let a = &verts[i];
        let b = &verts[(i + 1) % verts.len()];
        let wx = &a.y - &b.y;
        let wy = &b.x - &a.x;
        let c = &wx * &a.x + &wy * &a.y;
        let d2 = &c * &c / (&wx * &wx + &wy * &wy);
        if best.as_ref().is_none_or(|v| &d2 < v) {
            best = Some(d2);
        }
    }
    best.expect("polygon has edges")
}

/// Brute-force avoidance decision for a body with the origin interior.
///
/// The line `m·x + n·y = 1` lies at squared distance `1/(m² + n²)` from
/// the origin, so once `m² + n² ≥ 1/r²` — with `r` the inradius above —
/// the line crosses the inscribed disc and intersection is automatic.
/// Only the finite box below that threshold needs checking.
pub fn oracle_unavoidable(p: &ConvexPolygon) -> bool {
    assert!(
        p.contains(&Point2::origin(), geomnum::geom::Containment::Interior),
        "oracle requires the origin in the interior"
    );
    let r2 = inradius_squared_about_origin(p);
    // Smallest integer bound with bound² ≥ 1/r²: beyond it every line hits.
    let inv = int(1) / r2;
    let mut bound = 1i64;
    while int(bound) * int(bound) < inv {
        bound += 1;
    }
    for m in -bound..=bound {
        for n in -bound..=bound {
            if (m, n) == (0, 0) {
                continue;
            }
            if !line_meets_body(p, m, n) {
                return false;
            }
        }
    }
    true
}

/// All integer lines with `|m|, |n| ≤ box_bound` missed by the body;
/// the box must be checked sufficient by the caller (or be used for
/// grid-style probing only).
pub fn missed_lines_in_box(p: &ConvexPolygon, box_bound: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for m in -box_bound..=box_bound {
        for n in -box_bound..=box_bound {
            if (m, n) != (0, 0) && !line_meets_body(p, m, n) {
                out.push((m, n));
            }
        }
    }
    out
}

/// Integer lines with `|m|, |n| ≤ box_bound` that pass through the point
/// *and* support the body there (the whole body on the `≤ 1` side).  A
/// line through the point that cuts the body's interior does not count:
/// vertex weight is about supporting lines.
pub fn supporting_lines_at(p: &ConvexPolygon, point: &Point2, box_bound: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for m in -box_bound..=box_bound {
        for n in -box_bound..=box_bound {
            if (m, n) == (0, 0) {
                continue;
            }
            if &point.x * int(m) + &point.y * int(n) != int(1) {
                continue;
            }
            let supports = p
                .vertices()
                .iter()
                .all(|v| &v.x * int(m) + &v.y * int(n) <= int(1));
            if supports {
                out.push((m, n));
            }
        }
    }
    out
}

pub fn square() -> ConvexPolygon {
    ConvexPolygon::new(vec![
        Point2::from_int(1, 1),
        Point2::from_int(-1, 1),
        Point2::from_int(-1, -1),
        Point2::from_int(1, -1),
    ])
    .unwrap()
}

pub fn sharp_triangle() -> ConvexPolygon {
    ConvexPolygon::new(vec![
        Point2::new(scalar::frac(3, 2), int(0)),
        Point2::from_int(0, 1),
        Point2::from_int(-1, -1),
    ])
    .unwrap()
}

/// The regular-hexagon lattice tile ±(1,0), ±(1,1), ±(0,1).
pub fn hexagon() -> ConvexPolygon {
    ConvexPolygon::new(vec![
        Point2::from_int(1, 0),
        Point2::from_int(1, 1),
        Point2::from_int(0, 1),
        Point2::from_int(-1, 0),
        Point2::from_int(-1, -1),
        Point2::from_int(0, -1),
    ])
    .unwrap()
}
