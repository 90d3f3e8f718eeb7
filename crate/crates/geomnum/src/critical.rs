//! Critical determinants of symmetric planar bodies.
//!
//! The critical determinant `Δ(K)` of a symmetric convex body is the
//! smallest determinant of a lattice whose only point interior to `K` is
//! the origin (an *admissible* lattice).  In the plane the extremal
//! lattices are inscribed-hexagon lattices: a basis `u, v` with `u`, `v`
//! and `u + v` all on the boundary.  Two facts drive the solver:
//!
//! * any such triple generates an admissible lattice (a reverse triangle
//!   inequality in the gauge shows every nonzero lattice point has gauge
//!   at least 1), and
//! * some critical lattice is of this form, so the minimum of
//!   `|det(u, v)|` over the family *is* `Δ(K)`.
//!
//! For a polygon the family is piecewise algebraic: fixing the edges
//! carrying `u`, `v` and `u + v` makes `v` an affine function of the
//! position of `u` on its edge and the determinant a quadratic, minimized
//! exactly over an explicit rational feasibility interval.  The search is
//! therefore exact; the tolerance parameter only shapes the interface.

use num_traits::{One, Signed, Zero};

use crate::geom::{cross, ConvexPolygon, Point2};
use crate::lattice::{shortest_vector, Lattice2};
use crate::scalar::{self, Scalar};
use crate::{Error, Result};

/// Margin for the floating-point cell prefilter: a cell is discarded only
/// when a feasibility constraint fails by more than this on all of the
/// parameter range, which no exactly-feasible cell can do at rational
/// coordinates of test scale.
const PREFILTER_MARGIN: f64 = 1e-7;

/// A closed rational interval, tracked through affine constraints.
#[derive(Clone, Debug)]
struct Interval {
    lo: Scalar,
    hi: Scalar,
}

impl Interval {
    fn unit() -> Self {
        Interval { lo: Scalar::zero(), hi: Scalar::one() }
    }

    fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    /// Restrict to `{s : c0 + c1·s ≥ 0}`.
    fn require_nonneg(&mut self, c0: &Scalar, c1: &Scalar) {
        if c1.is_zero() {
            if c0.is_negative() {
                self.hi = self.lo.clone() - Scalar::one();
            }
            return;
        }
        let bound = -(c0 / c1);
        if c1.is_positive() {
            if bound > self.lo {
                self.lo = bound;
            }
        } else if bound < self.hi {
            self.hi = bound;
        }
    }
}

/// The affine point `p0 + s·p1` expressed in the parameter `λ` of the
/// segment `[a, b]`: returns `(l0, l1)` with `λ(s) = l0 + s·l1`, using a
/// coordinate where the segment direction does not vanish.
fn segment_parameter(p0: &Point2, p1: &Point2, a: &Point2, b: &Point2) -> (Scalar, Scalar) {
    let d = b.sub(a);
    if !d.x.is_zero() {
        ((&p0.x - &a.x) / &d.x, &p1.x / &d.x)
    } else {
        ((&p0.y - &a.y) / &d.y, &p1.y / &d.y)
    }
}

/// Best configuration found: `|det|` with the generating pair.
struct Best {
    value: Scalar,
    u: Point2,
    v: Point2,
}

/// Floating-point screen: can the cell possibly be feasible?  Errs on the
/// side of keeping the cell (any non-finite arithmetic keeps it too).
#[allow(clippy::too_many_arguments)]
fn cell_maybe_feasible(
    ae: (f64, f64),
    de: (f64, f64),
    wf: (f64, f64),
    wg: (f64, f64),
    f_a: (f64, f64),
    f_d: (f64, f64),
    g_a: (f64, f64),
    g_d: (f64, f64),
) -> bool {
    let det = wf.0 * wg.1 - wf.1 * wg.0;
    if !(det.abs() > 1e-12) {
        return true;
    }
    let r20 = 1.0 - (wg.0 * ae.0 + wg.1 * ae.1);
    let r21 = -(wg.0 * de.0 + wg.1 * de.1);
    let a = ((wg.1 - wf.1 * r20) / det, (-wg.0 + wf.0 * r20) / det);
    let b = ((-wf.1 * r21) / det, (wf.0 * r21) / det);
    // λ for v on edge F, then for u+v on edge G; each yields λ ≥ 0 and
    // λ ≤ 1.  Reject only when a constraint fails on all of s ∈ [0, 1].
    let lambda = |p0: (f64, f64), p1: (f64, f64), ea: (f64, f64), ed: (f64, f64)| {
        if ed.0.abs() > ed.1.abs() {
            ((p0.0 - ea.0) / ed.0, p1.0 / ed.0)
        } else {
            ((p0.1 - ea.1) / ed.1, p1.1 / ed.1)
        }
    };
    let (vf0, vf1) = lambda(a, b, f_a, f_d);
    let (vg0, vg1) = lambda((ae.0 + a.0, ae.1 + a.1), (de.0 + b.0, de.1 + b.1), g_a, g_d);
    for (c0, c1) in [
        (vf0, vf1),
        (1.0 - vf0, -vf1),
        (vg0, vg1),
        (1.0 - vg0, -vg1),
    ] {
        if c0 + c1.max(0.0) < -PREFILTER_MARGIN {
            return false;
        }
    }
    true
}

/// An admissible lattice of minimal determinant for a symmetric polygon,
/// with the exact critical determinant `Δ(ball)`.
///
/// The result is exact; `tol` is validated but never needed for the
/// answer.  Admissibility of the returned lattice is re-certified through
/// an exact shortest-vector computation before returning.
pub fn critical_lattice_symmetric(
    ball: &ConvexPolygon,
    tol: &Scalar,
) -> Result<(Lattice2, Scalar)> {
    if !tol.is_positive() {
        return Err(Error::DegenerateInput("tolerance must be positive".into()));
    }
    if !ball.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = ball.vertex_count();
    let verts: Vec<Point2> = ball.vertices().to_vec();
    let covs: Vec<Point2> = ball
        .edge_covectors()?
        .iter()
        .map(|w| w.as_point())
        .collect();
    let edge = |i: usize| -> (&Point2, &Point2) { (&verts[i], &verts[(i + 1) % n]) };
    let vf64 = |p: &Point2| (scalar::to_f64(&p.x), scalar::to_f64(&p.y));

    let mut best: Option<Best> = None;
    // u and −u generate the same lattice, so half the edges suffice.
    for e in 0..n / 2 {
        let (ea, eb) = edge(e);
        let (de, ae) = (eb.sub(ea), ea.clone());
        for f in 0..n {
            let wf = &covs[f];
            for g in 0..n {
                let wg = &covs[g];
                let det = cross(wf, wg);
                if det.is_zero() {
                    // Parallel normals: either the same edge (covered at
                    // cell endpoints of neighboring cells) or antipodal
                    // edges, which admit no solution.
                    continue;
                }
                let (fa, fb) = edge(f);
                let (ga, gb) = edge(g);
                if !cell_maybe_feasible(
                    vf64(&ae),
                    vf64(&de),
                    vf64(wf),
                    vf64(wg),
                    vf64(fa),
                    vf64(&fb.sub(fa)),
                    vf64(ga),
                    vf64(&gb.sub(ga)),
                ) {
                    continue;
                }
                // v(s) solves w_F·v = 1, w_G·v = 1 − w_G·u(s).
                let r20 = Scalar::one() - wg.dot(&ae);
                let r21 = -wg.dot(&de);
                let va = Point2::new(
                    (&wg.y - &wf.y * &r20) / &det,
                    (-&wg.x + &wf.x * &r20) / &det,
                );
                let vb = Point2::new(-&wf.y * &r21 / &det, &wf.x * &r21 / &det);
                let mut iv = Interval::unit();
                let (l0, l1) = segment_parameter(&va, &vb, fa, fb);
                iv.require_nonneg(&l0, &l1);
                iv.require_nonneg(&(Scalar::one() - &l0), &(-l1));
                let (m0, m1) =
                    segment_parameter(&ae.add(&va), &de.add(&vb), ga, gb);
                iv.require_nonneg(&m0, &m1);
                iv.require_nonneg(&(Scalar::one() - &m0), &(-m1));
                if iv.is_empty() {
                    continue;
                }
                // det(u(s), v(s)) is quadratic in s.
                let q0 = cross(&ae, &va);
                let q1 = cross(&ae, &vb) + cross(&de, &va);
                let q2 = cross(&de, &vb);
                let mut candidates = vec![iv.lo.clone(), iv.hi.clone()];
                if !q2.is_zero() {
                    let s_star = -&q1 / (scalar::int(2) * &q2);
                    if s_star > iv.lo && s_star < iv.hi {
                        candidates.push(s_star);
                    }
                }
                for s in candidates {
                    let q = &q0 + &q1 * &s + &q2 * &s * &s;
                    let value = q.abs();
                    if value.is_zero() {
                        continue;
                    }
                    if best.as_ref().map_or(true, |b| value < b.value) {
                        let u = ae.add(&de.scale(&s));
                        let v = va.add(&vb.scale(&s));
                        best = Some(Best { value, u, v });
                    }
                }
            }
        }
    }

    let best = best.ok_or_else(|| {
        Error::CertificateInvalid("no inscribed-hexagon configuration found".into())
    })?;
    let lattice = Lattice2::new(best.u, best.v)?;
    debug_assert_eq!(lattice.det(), &best.value);
    // Exact admissibility certificate for the returned lattice.
    let (_, shortest) = shortest_vector(ball, &lattice)?;
    if shortest < Scalar::one() {
        return Err(Error::CertificateInvalid(
            "candidate critical lattice is not admissible".into(),
        ));
    }
    Ok((lattice, best.value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::basic_triangle;
    use crate::scalar::{frac, int};

    fn tol() -> Scalar {
        frac(1, 1_000_000)
    }

    fn poly(pts: &[(i64, i64)]) -> ConvexPolygon {
        ConvexPolygon::new(pts.iter().map(|&(x, y)| Point2::from_int(x, y)).collect())
            .unwrap()
    }

    fn square() -> ConvexPolygon {
        poly(&[(-1, -1), (1, -1), (1, 1), (-1, 1)])
    }

    #[test]
    fn critical_determinant_of_the_square_is_one() {
        let (lattice, delta) = critical_lattice_symmetric(&square(), &tol()).unwrap();
        assert_eq!(delta, int(1));
        assert_eq!(lattice.det(), &int(1));
        assert!(shortest_vector(&square(), &lattice).unwrap().1 >= int(1));
    }

    #[test]
    fn critical_determinants_of_tiling_hexagons() {
        // conv{±(1,0), ±(0,1), ±(1,1)} has area 3 and Δ = 3/4.
        let hex = poly(&[(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]);
        let (_, delta) = critical_lattice_symmetric(&hex, &tol()).unwrap();
        assert_eq!(delta, frac(3, 4));

        // The difference body of the basic triangle: area 9, Δ = 9/4.
        let diff = basic_triangle().difference_body();
        let (_, delta) = critical_lattice_symmetric(&diff, &tol()).unwrap();
        assert_eq!(delta, frac(9, 4));

        // Its polar dual: area 1, Δ = 1/4.
        let dual = diff.polar_dual().unwrap();
        let (_, delta) = critical_lattice_symmetric(&dual, &tol()).unwrap();
        assert_eq!(delta, frac(1, 4));
    }

    #[test]
    fn critical_determinant_of_the_cross_polytope() {
        let cross_poly = poly(&[(1, 0), (0, 1), (-1, 0), (0, -1)]);
        let (_, delta) = critical_lattice_symmetric(&cross_poly, &tol()).unwrap();
        assert_eq!(delta, frac(1, 2));
        // Δ scales with the square of a dilation.
        let doubled = cross_poly.scale(&int(2)).unwrap();
        let (_, delta) = critical_lattice_symmetric(&doubled, &tol()).unwrap();
        assert_eq!(delta, int(2));
    }

    #[test]
    fn octagon_determinant_respects_the_area_bound() {
        // Not a tiling body: the answer must still sit in the Minkowski
        // sandwich area/4 ≤ Δ ≤ det(any admissible lattice).
        let oct = poly(&[
            (2, 1),
            (1, 2),
            (-1, 2),
            (-2, 1),
            (-2, -1),
            (-1, -2),
            (1, -2),
            (2, -1),
        ]);
        assert_eq!(oct.area(), int(14));
        let (lattice, delta) = critical_lattice_symmetric(&oct, &tol()).unwrap();
        assert!(delta >= frac(14, 4));
        assert!(delta <= int(4)); // basis (2,0),(0,2) is admissible
        assert!(shortest_vector(&oct, &lattice).unwrap().1 >= int(1));
    }

    #[test]
    fn rejects_asymmetric_input_and_bad_tolerance() {
        assert!(matches!(
            critical_lattice_symmetric(&basic_triangle(), &tol()),
            Err(Error::NotSymmetric)
        ));
        assert!(critical_lattice_symmetric(&square(), &int(0)).is_err());
    }
}
