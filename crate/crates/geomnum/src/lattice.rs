//! The integer lattice ℤ² and friends: point enumeration, unavoidability
//! certificates, vertex weights, Minkowski witnesses, shortest vectors in
//! asymmetric gauges, and two-dimensional gauge reduction.
//!
//! A body is *unavoidable* when it meets every integer line
//! `{x : m·x₁ + n·x₂ = 1}`.  The working criterion is dual: a body with the
//! origin in its interior is unavoidable exactly when the open polar dual
//! contains no nonzero integer point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::geom::{Containment, ConvexPolygon, Covec2, LinearMap2, Point2};
use crate::scalar::{self, Scalar};
use crate::{Error, Result};

/// The integer line `{x : m·x₁ + n·x₂ = 1}`.
///
/// The covector is stored as given: non-primitive lines such as `2x = 1`
/// are legitimate and distinct from their primitive multiples.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct IntegerLine {
    pub m: i64,
    pub n: i64,
}

impl IntegerLine {
    pub fn new(m: i64, n: i64) -> Self {
        assert!(m != 0 || n != 0, "the zero covector denotes no line");
        IntegerLine { m, n }
    }

    pub fn covector(&self) -> Covec2 {
        Covec2::from_int(self.m, self.n)
    }
}

impl std::fmt::Display for IntegerLine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}x{:+}y = 1", self.m, self.n)
    }
}

/// A full-rank planar lattice, stored as a positively oriented basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Lattice2 {
    b1: Point2,
    b2: Point2,
    det: Scalar,
}

impl Lattice2 {
    /// Build from any basis; the pair is swapped if negatively oriented.
    pub fn new(b1: Point2, b2: Point2) -> Result<Self> {
        let d = crate::geom::cross(&b1, &b2);
        if d.is_zero() {
            return Err(Error::DegenerateInput(
                "lattice basis vectors are collinear".into(),
            ));
        }
        if d.is_negative() {
            Ok(Lattice2 { b1: b2, b2: b1, det: -d })
        } else {
            Ok(Lattice2 { b1, b2, det: d })
        }
    }

    /// The integer lattice ℤ².
    pub fn standard() -> Self {
        Lattice2 {
            b1: Point2::from_int(1, 0),
            b2: Point2::from_int(0, 1),
            det: Scalar::one(),
        }
    }

    pub fn basis(&self) -> (&Point2, &Point2) {
        (&self.b1, &self.b2)
    }

    pub fn det(&self) -> &Scalar {
        &self.det
    }

    /// The lattice vector `z₁b₁ + z₂b₂`.
    pub fn vector(&self, z: (i64, i64)) -> Point2 {
        self.b1.scale(&scalar::int(z.0)).add(&self.b2.scale(&scalar::int(z.1)))
    }

    /// The basis as a linear map sending `e₁, e₂` to `b₁, b₂`.
    pub fn basis_map(&self) -> LinearMap2 {
        LinearMap2::from_columns(&self.b1, &self.b2)
    }

    pub fn is_standard(&self) -> bool {
        *self == Lattice2::standard()
    }
}

/// Outcome of an unavoidability test.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AvoidanceCertificate {
    /// True when the body meets every integer line.
    pub unavoidable: bool,
    /// A line the body misses, when avoidable; the lexicographically
    /// smallest covector found.
    pub witness: Option<IntegerLine>,
    /// Every nonzero integer covector strictly inside the polar dual when
    /// the origin is interior; for bodies without the origin interior, the
    /// separating witness alone.
    pub dual_interior_points: Vec<IntegerLine>,
}

/// A gauge-reduced basis of ℤ²: the successive minima of an asymmetric
/// norm together with the unimodular change of basis realizing them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReducedBasis2 {
    /// Unimodular map with determinant +1 sending `e₁, e₂` to the
    /// minimizing vectors.
    pub transform: LinearMap2,
    /// Minimal gauge value over nonzero integer vectors.
    pub a1: Scalar,
    /// Minimal gauge value over vectors completing the first minimizer to
    /// a basis of ℤ².
    pub a2: Scalar,
}

/// Upper bound on the work done per enumeration (columns visited plus
/// points emitted), as a guard against runaway inputs rather than a
/// mathematical limit.
const BOX_BUDGET: i128 = 40_000_000;

fn i64_range(lo: &Scalar, hi: &Scalar) -> Result<(i64, i64)> {
    Ok((scalar::ceil_i64(lo)?, scalar::floor_i64(hi)?))
}

/// All integer points of a polygon, sorted lexicographically.
///
/// Walks the integer columns of the x-range and computes each column's
/// exact y-section from the edge crossings, so the cost is proportional
/// to the width plus the number of points — a long thin polygon (a
/// common shape for the polars showing up in descent bookkeeping) does
/// not force a quadratic bounding-box scan.
pub fn lattice_points(p: &ConvexPolygon, mode: Containment) -> Result<Vec<(i64, i64)>> {
    let (xmin, xmax, _, _) = p.bounding_box();
    let (x0, x1) = i64_range(&xmin, &xmax)?;
    if x0 > x1 {
        return Ok(Vec::new());
    }
    if (x1 as i128 - x0 as i128 + 1) > BOX_BUDGET {
        return Err(Error::EnumerationFailed);
    }
    let verts = p.vertices();
    let mut out = Vec::new();
    let mut budget = BOX_BUDGET - (x1 as i128 - x0 as i128 + 1);
    for x in x0..=x1 {
        let xs = scalar::int(x);
        // The section {y : (x, y) ∈ P} from exact edge crossings.
        let mut lo: Option<Scalar> = None;
        let mut hi: Option<Scalar> = None;
        let mut push = |y: Scalar| {
            if lo.as_ref().is_none_or(|v| &y < v) {
                lo = Some(y.clone());
            }
            if hi.as_ref().is_none_or(|v| &y > v) {
                hi = Some(y);
            }
        };
        for i in 0..verts.len() {
            let a = &verts[i];
            let b = &verts[(i + 1) % verts.len()];
            if a.x == b.x {
                if a.x == xs {
                    push(a.y.clone());
                    push(b.y.clone());
                }
                continue;
            }
            let (lo_x, hi_x) = if a.x < b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
            if lo_x <= &xs && &xs <= hi_x {
                push(&a.y + (&xs - &a.x) * (&b.y - &a.y) / (&b.x - &a.x));
            }
        }
        let (Some(ylo), Some(yhi)) = (lo, hi) else {
            continue;
        };
        let (mut y0, mut y1) = (scalar::ceil_i64(&ylo)?, scalar::floor_i64(&yhi)?);
        if mode == Containment::Interior {
            // Shave boundary hits: the section endpoints are on ∂P, and a
            // column touching the polygon only at xmin/xmax is entirely
            // boundary.
            if xs == xmin || xs == xmax {
                continue;
            }
            if scalar::int(y0) == ylo {
                y0 += 1;
            }
            if scalar::int(y1) == yhi {
                y1 -= 1;
            }
        }
        if y0 > y1 {
            continue;
        }
        budget -= y1 as i128 - y0 as i128 + 1;
        if budget < 0 {
            return Err(Error::EnumerationFailed);
        }
        for y in y0..=y1 {
            debug_assert!(p.contains(&Point2::from_int(x, y), mode));
            out.push((x, y));
        }
    }
    Ok(out)
}

/// Decide whether `p` meets every integer line, with a certificate.
///
/// With the origin interior this is the exact dual test: the body is
/// unavoidable iff the open polar dual contains no nonzero integer point,
/// and any such point is a missed line.  Without the origin interior the
/// body is always avoidable, and a missed line is read off a separating
/// edge: some edge of `p` has the origin on its outer side, so the
/// primitive integer form of its outward normal takes values < 1 on all
/// of `p`.
pub fn is_unavoidable(p: &ConvexPolygon) -> Result<AvoidanceCertificate> {
    if p.origin_interior() {
        let dual = p.polar_dual()?;
        let mut pts: Vec<IntegerLine> = lattice_points(&dual, Containment::Interior)?
            .into_iter()
            .filter(|&z| z != (0, 0))
            .map(|(m, n)| IntegerLine::new(m, n))
            .collect();
        pts.sort();
        Ok(AvoidanceCertificate {
            unavoidable: pts.is_empty(),
            witness: pts.first().copied(),
            dual_interior_points: pts,
        })
    } else {
        let w = separating_line(p)?;
        Ok(AvoidanceCertificate {
            unavoidable: false,
            witness: Some(w),
            dual_interior_points: vec![w],
        })
    }
}

/// A missed integer line for a body without the origin in its interior.
fn separating_line(p: &ConvexPolygon) -> Result<IntegerLine> {
    let verts = p.vertices();
    for i in 0..verts.len() {
        let a = &verts[i];
        let b = p.vertex(i + 1);
        // The outward normal of the edge a→b takes its maximum over p on
        // that edge, with value cross(a, b); origin not interior means
        // some edge has cross(a, b) ≤ 0 < 1.
        if !crate::geom::cross(a, b).is_positive() {
            let normal = Point2::new(&b.y - &a.y, &a.x - &b.x);
            let (m, n) = normal
                .primitive_direction()
                .to_int()
                .ok_or(Error::EnumerationFailed)?;
            let w = IntegerLine::new(m, n);
            debug_assert!(p.support(&w.covector()) < Scalar::one());
            return Ok(w);
        }
    }
    unreachable!("origin interior was ruled out, so a non-positive edge exists")
}

/// All integer lines missed by a body with the origin interior: the
/// nonzero integer points strictly inside the polar dual, sorted.
pub fn missed_lines(p: &ConvexPolygon) -> Result<Vec<IntegerLine>> {
    if !p.origin_interior() {
        return Err(Error::OriginNotInterior);
    }
    Ok(is_unavoidable(p)?.dual_interior_points)
}

/// Exact integer points on a closed segment with rational endpoints.
fn integer_points_on_segment(a: &Point2, b: &Point2) -> Result<Vec<(i64, i64)>> {
    // Integer normal form of the line through a and b: N·p = c.
    let d = b.sub(a);
    if d.is_origin() {
        return Ok(match a.to_int() {
            Some(z) => vec![z],
            None => Vec::new(),
        });
    }
    let lcm3 = |x: &Scalar, y: &Scalar, z: &Scalar| -> BigInt {
        x.denom().lcm(y.denom()).lcm(z.denom())
    };
    let nx = d.y.clone();
    let ny = -d.x.clone();
    let c = &nx * &a.x + &ny * &a.y;
    let l = lcm3(&nx, &ny, &c);
    let to_int = |q: &Scalar| -> BigInt { (q * Scalar::from(l.clone())).to_integer() };
    let (nx, ny, c) = (to_int(&nx), to_int(&ny), to_int(&c));
    let g = nx.gcd(&ny);
    if !(&c % &g).is_zero() {
        return Ok(Vec::new());
    }
    // Particular solution of nx·x + ny·y = c via the extended gcd.
    let e = nx.extended_gcd(&ny);
    let k = &c / &g;
    let (px, py) = (&e.x * &k, &e.y * &k);
    // Solutions step by the primitive direction of the line.
    let (sx, sy) = (&ny / &g, -&nx / &g);
    // Clamp the step count to the segment along a coordinate where the
    // direction is nonzero; exact collinearity makes one axis enough, and
    // the final containment check covers the other.
    let (p0, s0, lo, hi) = if !sx.is_zero() {
        let (lo, hi) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
        (px.clone(), sx.clone(), lo.clone(), hi.clone())
    } else {
        let (lo, hi) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
        (py.clone(), sy.clone(), lo.clone(), hi.clone())
    };
    // k range with (p0 + k·s0) ∈ [lo, hi].
    let t_at = |bound: &Scalar| -> Scalar { (bound - Scalar::from(p0.clone())) / Scalar::from(s0.clone()) };
    let (t0, t1) = (t_at(&lo), t_at(&hi));
    let (t_lo, t_hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
    let k_lo = t_lo.ceil().to_integer();
    let k_hi = t_hi.floor().to_integer();
    let mut out = Vec::new();
    let mut k = k_lo;
    let count = (&k_hi - &k) + BigInt::one();
    if count > BigInt::from(1_000_000) {
        return Err(Error::EnumerationFailed);
    }
    while k <= k_hi {
        let x = &px + &k * &sx;
        let y = &py + &k * &sy;
        let pt = Point2::new(Scalar::from(x.clone()), Scalar::from(y.clone()));
        let on_segment = {
            let in_x = (pt.x >= a.x.clone().min(b.x.clone())) && (pt.x <= a.x.clone().max(b.x.clone()));
            let in_y = (pt.y >= a.y.clone().min(b.y.clone())) && (pt.y <= a.y.clone().max(b.y.clone()));
            in_x && in_y
        };
        if on_segment {
            let zx = x.to_i64().ok_or(Error::EnumerationFailed)?;
            let zy = y.to_i64().ok_or(Error::EnumerationFailed)?;
            out.push((zx, zy));
        }
        k += 1;
    }
    out.sort();
    Ok(out)
}

/// The weight of a vertex: how many integer lines support the polygon
/// there, together with the lines themselves.
///
/// Lines supporting `p` at vertex `i` correspond to integer points on the
/// closed edge of the polar dual between the covectors of the two edges
/// meeting at the vertex.  For a non-integer vertex of an unavoidable
/// polygon the count is at most 1.
pub fn vertex_weight(p: &ConvexPolygon, i: usize) -> Result<(usize, Vec<IntegerLine>)> {
    let covecs = p.edge_covectors()?;
    let n = covecs.len();
    let before = covecs[(i + n - 1) % n].as_point();
    let after = covecs[i % n].as_point();
    let lines: Vec<IntegerLine> = integer_points_on_segment(&before, &after)?
        .into_iter()
        .map(|(m, n)| IntegerLine::new(m, n))
        .collect();
    Ok((lines.len(), lines))
}

/// A nonzero integer point of a symmetric body, if any: the witness of
/// Minkowski's theorem whenever the area is at least 4.
pub fn minkowski_witness(p: &ConvexPolygon) -> Result<Option<(i64, i64)>> {
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(lattice_points(p, Containment::Closed)?
        .into_iter()
        .find(|&z| z != (0, 0)))
}

/// Shortest nonzero lattice vector in the gauge of `ball`.
///
/// The gauge may be asymmetric.  Ties are broken lexicographically on
/// `(value, z)`, so the result is deterministic.
pub fn shortest_vector(ball: &ConvexPolygon, lattice: &Lattice2) -> Result<((i64, i64), Scalar)> {
    let m = lattice.basis_map();
    let gauge_of = |z: (i64, i64)| -> Result<Scalar> { ball.gauge(&lattice.vector(z)) };
    // Upper bound from a handful of small candidates (both signs: the
    // gauge of an asymmetric ball is not symmetric).
    let mut best: ((i64, i64), Scalar) = ((1, 0), gauge_of((1, 0))?);
    for z in [(-1, 0), (0, -1), (0, 1), (-1, -1), (-1, 1), (1, -1), (1, 1)] {
        let g = gauge_of(z)?;
        if (&g, z) < (&best.1, best.0) {
            best = (z, g);
        }
    }
    // Every minimizer z satisfies M(z) ∈ r·ball, i.e. z lies in the
    // preimage polygon; enumerate its integer bounding box.
    let inv = m.inverse()?;
    let preimage = ball.scale(&best.1)?.apply_linear(&inv)?;
    let (xmin, xmax, ymin, ymax) = preimage.bounding_box();
    let (x0, x1) = i64_range(&xmin, &xmax)?;
    let (y0, y1) = i64_range(&ymin, &ymax)?;
    let cells = (x1 as i128 - x0 as i128 + 1) * (y1 as i128 - y0 as i128 + 1);
    if cells > BOX_BUDGET {
        return Err(Error::EnumerationFailed);
    }
    for x in x0..=x1 {
        for y in y0..=y1 {
            if (x, y) == (0, 0) {
                continue;
            }
            let g = gauge_of((x, y))?;
            if (&g, (x, y)) < (&best.1, best.0) {
                best = ((x, y), g);
            }
        }
    }
    Ok(best)
}

/// Gauge reduction of ℤ² for a symmetric ball: successive minima `a₁ ≤ a₂`
/// and the unimodular transform realizing them.
///
/// Certifies the planar case of the reduction bound `a₁·a₂·|B| ≤ 4`.
pub fn reduced_basis(ball: &ConvexPolygon) -> Result<ReducedBasis2> {
    if !ball.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let (u, a1) = shortest_vector(ball, &Lattice2::standard())?;
    // A global minimizer is automatically primitive: a proper multiple has
    // strictly larger gauge.
    let (p, q) = u;
    let e = BigInt::from(p).extended_gcd(&BigInt::from(q));
    debug_assert!(e.gcd.is_one());
    // det((p,q),(v₁,v₂)) = 1 for v = (−y, x) where px + qy = 1.
    let v0 = (
        (-e.y.clone()).to_i64().ok_or(Error::EnumerationFailed)?,
        e.x.to_i64().ok_or(Error::EnumerationFailed)?,
    );
    // Completions of u to a positively oriented basis are v₀ + t·u; the
    // gauge is convex along the family, so walk to the minimum.
    let at = |t: i64| -> Result<Scalar> {
        ball.gauge(&Point2::from_int(v0.0 + t * p, v0.1 + t * q))
    };
    let mut t = 0i64;
    let mut cur = at(0)?;
    let step = if at(1)? < cur {
        1
    } else if at(-1)? < cur {
        -1
    } else {
        0
    };
    if step != 0 {
        loop {
            let next = at(t + step)?;
            if next < cur {
                cur = next;
                t += step;
            } else {
                break;
            }
        }
    }
    let v = (v0.0 + t * p, v0.1 + t * q);
    let transform = LinearMap2::from_columns(&Point2::from_int(p, q), &Point2::from_int(v.0, v.1));
    debug_assert!(transform.det().is_one());
    let a2 = cur;
    debug_assert!(a1 <= a2);
    debug_assert!(&a1 * &a2 * ball.area() <= scalar::int(4));
    Ok(ReducedBasis2 { transform, a1, a2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::basic_triangle;
    use crate::scalar::{frac, int};

    fn poly(pts: &[(i64, i64)]) -> ConvexPolygon {
        ConvexPolygon::new(pts.iter().map(|&(x, y)| Point2::from_int(x, y)).collect())
            .unwrap()
    }

    fn square() -> ConvexPolygon {
        poly(&[(-1, -1), (1, -1), (1, 1), (-1, 1)])
    }

    #[test]
    fn lattice_point_enumeration() {
        assert_eq!(lattice_points(&square(), Containment::Interior).unwrap(), vec![(0, 0)]);
        assert_eq!(lattice_points(&square(), Containment::Closed).unwrap().len(), 9);
        let dual = basic_triangle().polar_dual().unwrap();
        assert_eq!(dual, poly(&[(1, 1), (-2, 1), (1, -2)]));
        assert_eq!(lattice_points(&dual, Containment::Interior).unwrap(), vec![(0, 0)]);
    }

    #[test]
    fn unavoidable_bodies() {
        assert!(is_unavoidable(&basic_triangle()).unwrap().unavoidable);
        assert!(is_unavoidable(&square()).unwrap().unavoidable);
        let t2 = ConvexPolygon::new(vec![
            Point2::from_frac(3, 2, 0, 1),
            Point2::from_int(0, 1),
            Point2::from_int(-1, -1),
        ])
        .unwrap();
        assert!(is_unavoidable(&t2).unwrap().unavoidable);
    }

    #[test]
    fn shrunk_triangle_is_avoidable() {
        let t = basic_triangle().scale(&frac(9, 10)).unwrap();
        let cert = is_unavoidable(&t).unwrap();
        assert!(!cert.unavoidable);
        // Deterministic witness: lexicographically smallest missed line.
        assert_eq!(cert.witness, Some(IntegerLine::new(-2, 1)));
        // The line x + y = 1 is among the missed ones, and the full list is
        // the nonzero integer points of the closed dual triangle.
        assert!(cert.dual_interior_points.contains(&IntegerLine::new(1, 1)));
        assert_eq!(cert.dual_interior_points.len(), 9);
    }

    #[test]
    fn avoidable_without_origin_interior() {
        let shifted = basic_triangle().translate(&Point2::from_int(5, 5));
        let cert = is_unavoidable(&shifted).unwrap();
        assert!(!cert.unavoidable);
        let w = cert.witness.unwrap().covector();
        // The witnessed line really is missed: p lies strictly below it.
        assert!(shifted.support(&w) < int(1));
        // Origin on the boundary is avoidable as well.
        let corner = poly(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        assert!(!is_unavoidable(&corner).unwrap().unavoidable);
    }

    #[test]
    fn missed_lines_of_half_square() {
        let half = square().scale(&frac(1, 2)).unwrap();
        let lines = missed_lines(&half).unwrap();
        assert_eq!(
            lines,
            vec![
                IntegerLine::new(-1, 0),
                IntegerLine::new(0, -1),
                IntegerLine::new(0, 1),
                IntegerLine::new(1, 0),
            ]
        );
        assert_eq!(missed_lines(&basic_triangle()).unwrap(), Vec::new());
        let shifted = square().translate(&Point2::from_int(9, 0));
        assert!(matches!(missed_lines(&shifted), Err(Error::OriginNotInterior)));
    }

    #[test]
    fn weights_of_the_worked_triangles() {
        let t = basic_triangle();
        // Canonical order starts at (−1,−1); (1,0) sits at index 1.
        assert_eq!(t.vertices()[1], Point2::from_int(1, 0));
        let (count, lines) = vertex_weight(&t, 1).unwrap();
        assert_eq!(count, 4);
        assert_eq!(
            lines,
            vec![
                IntegerLine::new(1, -2),
                IntegerLine::new(1, -1),
                IntegerLine::new(1, 0),
                IntegerLine::new(1, 1),
            ]
        );

        let t2 = ConvexPolygon::new(vec![
            Point2::from_frac(3, 2, 0, 1),
            Point2::from_int(0, 1),
            Point2::from_int(-1, -1),
        ])
        .unwrap();
        // (3/2, 0) sits at index 1 after canonical rotation.
        assert_eq!(t2.vertices()[1], Point2::from_frac(3, 2, 0, 1));
        assert_eq!(vertex_weight(&t2, 1).unwrap().0, 0);
        // The integer vertex (0,1) carries weight 3.
        assert_eq!(t2.vertices()[2], Point2::from_int(0, 1));
        let (count, lines) = vertex_weight(&t2, 2).unwrap();
        assert_eq!(count, 3);
        assert_eq!(
            lines,
            vec![IntegerLine::new(-2, 1), IntegerLine::new(-1, 1), IntegerLine::new(0, 1)]
        );

        let t3 = ConvexPolygon::new(vec![
            Point2::from_frac(6, 5, 1, 5),
            Point2::from_int(0, 1),
            Point2::from_int(-1, -1),
        ])
        .unwrap();
        assert_eq!(t3.vertices()[1], Point2::from_frac(6, 5, 1, 5));
        let (count, lines) = vertex_weight(&t3, 1).unwrap();
        assert_eq!(count, 1);
        assert_eq!(lines, vec![IntegerLine::new(1, -1)]);
    }

    #[test]
    fn minkowski_witness_examples() {
        assert_eq!(minkowski_witness(&square()).unwrap(), Some((-1, -1)));
        let half = square().scale(&frac(1, 2)).unwrap();
        assert_eq!(minkowski_witness(&half).unwrap(), None);
        assert!(matches!(
            minkowski_witness(&basic_triangle()),
            Err(Error::NotSymmetric)
        ));
        // The difference body of the basic triangle has area 9 ≥ 4.
        let hex = basic_triangle().difference_body();
        assert!(minkowski_witness(&hex).unwrap().is_some());
    }

    #[test]
    fn shortest_vector_examples() {
        let z2 = Lattice2::standard();
        assert_eq!(shortest_vector(&square(), &z2).unwrap(), ((-1, -1), int(1)));
        let dual_triangle = poly(&[(1, 1), (-2, 1), (1, -2)]);
        // Several vectors attain gauge 1; the vertex (−2,1) wins the
        // lexicographic tie-break.
        assert_eq!(
            shortest_vector(&dual_triangle, &z2).unwrap(),
            ((-2, 1), int(1))
        );
        let big = square().scale(&int(2)).unwrap();
        assert_eq!(shortest_vector(&big, &z2).unwrap(), ((-1, -1), frac(1, 2)));
        let doubled = Lattice2::new(Point2::from_int(2, 0), Point2::from_int(0, 2)).unwrap();
        assert_eq!(shortest_vector(&square(), &doubled).unwrap(), ((-1, -1), int(2)));
    }

    #[test]
    fn shortest_vector_matches_dual_unavoidability() {
        // systole ≥ 1 in the gauge of B over ℤ² ⇔ B* is unavoidable.
        let bodies = [
            square(),
            poly(&[(1, 1), (-2, 1), (1, -2)]),
            square().scale(&frac(1, 2)).unwrap(),
            basic_triangle().difference_body(),
        ];
        for b in bodies {
            let (_, v) = shortest_vector(&b, &Lattice2::standard()).unwrap();
            let dual_unavoidable = is_unavoidable(&b.polar_dual().unwrap()).unwrap().unavoidable;
            assert_eq!(v >= int(1), dual_unavoidable, "body {:?}", b);
        }
    }

    #[test]
    fn reduced_basis_examples() {
        let r = reduced_basis(&square()).unwrap();
        assert_eq!((r.a1.clone(), r.a2.clone()), (int(1), int(1)));
        assert_eq!(&r.a1 * &r.a2 * square().area(), int(4));

        let big = square().scale(&int(2)).unwrap();
        let r = reduced_basis(&big).unwrap();
        assert_eq!((r.a1.clone(), r.a2.clone()), (frac(1, 2), frac(1, 2)));
        assert_eq!(&r.a1 * &r.a2 * big.area(), int(4));

        let hex = basic_triangle().difference_body().scale(&frac(1, 2)).unwrap();
        let r = reduced_basis(&hex).unwrap();
        assert!(&r.a1 * &r.a2 * hex.area() <= int(4));
        assert!(r.a1 <= r.a2);
        assert!(r.transform.is_unimodular());

        assert!(matches!(reduced_basis(&basic_triangle()), Err(Error::NotSymmetric)));
    }

    #[test]
    fn segment_enumeration_handles_degenerate_and_skew_lines() {
        // A skew segment on the line x − y = 1 with three integer points.
        let a = Point2::from_frac(-1, 2, -3, 2);
        let b = Point2::from_frac(5, 2, 3, 2);
        assert_eq!(
            integer_points_on_segment(&a, &b).unwrap(),
            vec![(0, -1), (1, 0), (2, 1)]
        );
        // A vertical dual edge at non-integer abscissa has none.
        let a = Point2::from_frac(2, 3, 1, 1);
        let b = Point2::from_frac(2, 3, -5, 3);
        assert_eq!(integer_points_on_segment(&a, &b).unwrap(), Vec::new());
    }
}
