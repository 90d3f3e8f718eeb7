//! Convex polygons with exact rational vertices.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::scalar::{self, Scalar};
use crate::{Error, Result};

use super::{angle_cmp, cross, orient, Covec2, LinearMap2, Point2};

/// Whether a membership test includes the boundary.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Containment {
    Closed,
    Interior,
}

/// A strictly convex polygon.
///
/// Invariants, established by every constructor:
/// * at least three vertices, all distinct;
/// * counterclockwise order, every consecutive triple a strict left turn
///   (no three collinear vertices);
/// * stored in canonical rotation, starting at the lexicographically
///   smallest vertex (`x` before `y`).
#[derive(Clone, PartialEq, Eq)]
pub struct ConvexPolygon {
    verts: Vec<Point2>,
}

impl ConvexPolygon {
    /// Build from a full cycle of vertices.
    ///
    /// Accepts either orientation (clockwise input is reversed) and any
    /// rotation, but rejects lists that are not strictly convex, naming the
    /// offending triple in input positions.
    pub fn new(mut verts: Vec<Point2>) -> Result<Self> {
        if verts.len() < 3 {
            return Err(Error::DegenerateInput(format!(
                "a polygon needs at least 3 vertices, got {}",
                verts.len()
            )));
        }
        // Signed area decides the intended orientation.
        let mut doubled = Scalar::zero();
        for i in 0..verts.len() {
            let j = (i + 1) % verts.len();
            doubled += cross(&verts[i], &verts[j]);
        }
        let reversed = doubled.is_negative();
        if reversed {
            verts.reverse();
        }
        let n = verts.len();
        let original = |i: usize| if reversed { n - 1 - i } else { i };
        let mut wraps = 0usize;
        for i in 0..n {
            let j = (i + 1) % n;
            let k = (i + 2) % n;
            if !orient(&verts[i], &verts[j], &verts[k]).is_positive() {
                return Err(Error::NotStrictlyConvex {
                    i: original(i),
                    j: original(j),
                    k: original(k),
                });
            }
            // Count how often the edge direction wraps past the angular cut;
            // a convex cycle wraps exactly once, a self-crossing
            // all-left-turns cycle more often.
            let e0 = verts[j].sub(&verts[i]);
            let e1 = verts[k].sub(&verts[j]);
            if angle_cmp(&e0, &e1) != Ordering::Less {
                wraps += 1;
            }
        }
        if wraps != 1 {
            return Err(Error::DegenerateInput(
                "vertex cycle winds more than once".into(),
            ));
        }
        let start = (0..n)
            .min_by(|&i, &j| verts[i].lex_cmp(&verts[j]))
            .unwrap();
        verts.rotate_left(start);
        Ok(ConvexPolygon { verts })
    }

    /// Convex hull of a point set, dropping interior and collinear points.
    ///
    /// Fails if the hull is not full-dimensional (fewer than three extreme
    /// points).
    pub fn convex_hull(mut points: Vec<Point2>) -> Result<Self> {
        points.sort_by(|a, b| a.lex_cmp(b));
        points.dedup();
        if points.len() < 3 {
            return Err(Error::DegenerateInput(
                "hull needs at least 3 distinct points".into(),
            ));
        }
        let chain = |pts: &[Point2]| {
            let mut out: Vec<Point2> = Vec::new();
            for p in pts {
                while out.len() >= 2
                    && !orient(&out[out.len() - 2], &out[out.len() - 1], p).is_positive()
                {
                    out.pop();
                }
                out.push(p.clone());
            }
            out
        };
        let lower = chain(&points);
        let rev: Vec<Point2> = points.iter().rev().cloned().collect();
        let upper = chain(&rev);
        let mut verts = lower;
        verts.pop();
        verts.extend(upper);
        verts.pop();
        if verts.len() < 3 {
            return Err(Error::DegenerateInput("all points are collinear".into()));
        }
        ConvexPolygon::new(verts)
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.verts
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    /// Vertex by cyclic index.
    pub fn vertex(&self, i: usize) -> &Point2 {
        &self.verts[i % self.verts.len()]
    }

    /// Exact area by the shoelace formula.
    pub fn area(&self) -> Scalar {
        let mut doubled = Scalar::zero();
        for i in 0..self.verts.len() {
            let j = (i + 1) % self.verts.len();
            doubled += cross(&self.verts[i], &self.verts[j]);
        }
        doubled / scalar::int(2)
    }

    /// Exact membership test.
    pub fn contains(&self, p: &Point2, mode: Containment) -> bool {
        for i in 0..self.verts.len() {
            let j = (i + 1) % self.verts.len();
            let side = orient(&self.verts[i], &self.verts[j], p);
            let ok = match mode {
                Containment::Closed => !side.is_negative(),
                Containment::Interior => side.is_positive(),
            };
            if !ok {
                return false;
            }
        }
        true
    }

    pub fn origin_interior(&self) -> bool {
        self.contains(&Point2::origin(), Containment::Interior)
    }

    /// Support value `h(w) = max over vertices of ⟨w, v⟩`.
    pub fn support(&self, w: &Covec2) -> Scalar {
        self.verts
            .iter()
            .map(|v| w.pair(v))
            .max()
            .expect("polygon has vertices")
    }

    /// Minimum of `⟨w, ·⟩` over the polygon.
    pub fn support_min(&self, w: &Covec2) -> Scalar {
        self.verts
            .iter()
            .map(|v| w.pair(v))
            .min()
            .expect("polygon has vertices")
    }

    /// Covectors of the edge lines: the `i`-th entry `w` satisfies
    /// `⟨w, v⟩ = 1` on the edge from vertex `i` to vertex `i+1`.
    ///
    /// Defined exactly when the origin is interior.
    pub fn edge_covectors(&self) -> Result<Vec<Covec2>> {
        if !self.origin_interior() {
            return Err(Error::OriginNotInterior);
        }
        let mut out = Vec::with_capacity(self.verts.len());
        for i in 0..self.verts.len() {
            let a = &self.verts[i];
            let b = self.vertex(i + 1);
            let det = cross(a, b);
            debug_assert!(det.is_positive());
            out.push(Covec2::new((&b.y - &a.y) / &det, (&a.x - &b.x) / &det));
        }
        Ok(out)
    }

    /// Gauge (Minkowski functional) `‖v‖ = inf { t > 0 : v ∈ t·P }`,
    /// exact; requires the origin interior.
    ///
    /// For an asymmetric body this is an asymmetric norm.
    pub fn gauge(&self, v: &Point2) -> Result<Scalar> {
        let covecs = self.edge_covectors()?;
        if v.is_origin() {
            return Ok(Scalar::zero());
        }
        let g = covecs
            .iter()
            .map(|w| w.pair(v))
            .max()
            .expect("polygon has edges");
        debug_assert!(g.is_positive());
        Ok(g)
    }

    /// Polar dual `P* = { w : ⟨w, v⟩ ≤ 1 for all v ∈ P }`, a convex polygon
    /// whose vertices are the edge covectors; requires the origin interior.
    pub fn polar_dual(&self) -> Result<ConvexPolygon> {
        let covecs = self.edge_covectors()?;
        ConvexPolygon::new(covecs.into_iter().map(|w| w.as_point()).collect())
    }

    /// The reflection `−P`.
    pub fn negate(&self) -> ConvexPolygon {
        ConvexPolygon::new(self.verts.iter().map(Point2::neg).collect())
            .expect("reflection preserves strict convexity")
    }

    /// Whether `P = −P`.
    pub fn is_symmetric(&self) -> bool {
        *self == self.negate()
    }

    /// Dilate by a positive rational factor.
    pub fn scale(&self, s: &Scalar) -> Result<ConvexPolygon> {
        if !s.is_positive() {
            return Err(Error::DegenerateInput("scale factor must be positive".into()));
        }
        ConvexPolygon::new(self.verts.iter().map(|v| v.scale(s)).collect())
    }

    /// Translate by a vector.
    pub fn translate(&self, t: &Point2) -> ConvexPolygon {
        ConvexPolygon::new(self.verts.iter().map(|v| v.add(t)).collect())
            .expect("translation preserves strict convexity")
    }

    /// Image under an invertible linear map (clockwise images are
    /// re-oriented counterclockwise).
    pub fn apply_linear(&self, m: &LinearMap2) -> Result<ConvexPolygon> {
        if m.det().is_zero() {
            return Err(Error::SingularMap);
        }
        ConvexPolygon::new(self.verts.iter().map(|v| m.apply(v)).collect())
    }

    /// The difference body `P − P` (Minkowski sum with the reflection),
    /// computed exactly by merging the two edge fans by angle.
    pub fn difference_body(&self) -> ConvexPolygon {
        let mut edges: Vec<Point2> = Vec::with_capacity(2 * self.verts.len());
        for i in 0..self.verts.len() {
            let e = self.vertex(i + 1).sub(&self.verts[i]);
            edges.push(e.neg());
            edges.push(e);
        }
        edges.sort_by(angle_cmp);
        // Merge exactly parallel edges (antipodal edge pairs of P).
        let mut merged: Vec<Point2> = Vec::new();
        for e in edges {
            match merged.last() {
                Some(last) if angle_cmp(last, &e) == Ordering::Equal => {
                    let sum = merged.pop().unwrap().add(&e);
                    merged.push(sum);
                }
                _ => merged.push(e),
            }
        }
        // The chain starts at the lexicographically smallest point of the
        // sum, which is the difference of the extreme vertices of P.
        let lexmin = self
            .verts
            .iter()
            .min_by(|a, b| a.lex_cmp(b))
            .unwrap()
            .clone();
        let lexmax = self
            .verts
            .iter()
            .max_by(|a, b| a.lex_cmp(b))
            .unwrap()
            .clone();
        let mut at = lexmin.sub(&lexmax);
        let mut verts = Vec::with_capacity(merged.len());
        for e in &merged[..merged.len() - 1] {
            verts.push(at.clone());
            at = at.add(e);
        }
        verts.push(at);
        ConvexPolygon::new(verts).expect("difference body is strictly convex")
    }

    /// Exact intersection with another convex polygon, by successive
    /// half-plane clipping; fails if the intersection is empty or not
    /// full-dimensional.
    pub fn intersect(&self, other: &ConvexPolygon) -> Result<ConvexPolygon> {
        let mut region: Vec<Point2> = self.verts.clone();
        for i in 0..other.verts.len() {
            let a = &other.verts[i];
            let b = other.vertex(i + 1);
            let mut clipped: Vec<Point2> = Vec::with_capacity(region.len() + 1);
            for j in 0..region.len() {
                let p = &region[j];
                let q = &region[(j + 1) % region.len()];
                let sp = orient(a, b, p);
                let sq = orient(a, b, q);
                if !sp.is_negative() {
                    clipped.push(p.clone());
                }
                if (sp.is_negative() && sq.is_positive())
                    || (sp.is_positive() && sq.is_negative())
                {
                    // Edge crosses the clip line; the crossing point divides
                    // it in the exact ratio of the signed distances.
                    let t = &sp / (&sp - &sq);
                    clipped.push(p.add(&q.sub(p).scale(&t)));
                }
            }
            region = clipped;
            if region.len() < 3 {
                return Err(Error::DegenerateInput(
                    "intersection is not full-dimensional".into(),
                ));
            }
        }
        ConvexPolygon::convex_hull(region)
    }

    /// Exact coordinate bounds `(xmin, xmax, ymin, ymax)`.
    pub fn bounding_box(&self) -> (Scalar, Scalar, Scalar, Scalar) {
        let xs: Vec<&Scalar> = self.verts.iter().map(|v| &v.x).collect();
        let ys: Vec<&Scalar> = self.verts.iter().map(|v| &v.y).collect();
        (
            (*xs.iter().min().unwrap()).clone(),
            (*xs.iter().max().unwrap()).clone(),
            (*ys.iter().min().unwrap()).clone(),
            (*ys.iter().max().unwrap()).clone(),
        )
    }
}

impl fmt::Debug for ConvexPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "polygon{:?}", self.verts)
    }
}

/// The triangle `(1,0), (0,1), (−1,−1)`: the smallest-area polygon with
/// integer vertices, an interior origin, and a lattice-point-free open dual.
pub fn basic_triangle() -> ConvexPolygon {
    ConvexPolygon::new(vec![
        Point2::from_int(1, 0),
        Point2::from_int(0, 1),
        Point2::from_int(-1, -1),
    ])
    .unwrap()
}
