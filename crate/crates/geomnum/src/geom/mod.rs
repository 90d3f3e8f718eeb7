//! Points, covectors, linear maps, and convex polygons with exact
//! rational coordinates.

mod polygon;

pub use polygon::{basic_triangle, Containment, ConvexPolygon};

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::scalar::{self, Scalar};
use crate::{Error, Result};

/// A point of the plane (also used for direction vectors).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point2 {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point2 {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point2 { x, y }
    }

    /// The point `(x, y)` with integer coordinates.
    pub fn from_int(x: i64, y: i64) -> Self {
        Point2::new(scalar::int(x), scalar::int(y))
    }

    /// The point `(xn/xd, yn/yd)`.
    pub fn from_frac(xn: i64, xd: i64, yn: i64, yd: i64) -> Self {
        Point2::new(scalar::frac(xn, xd), scalar::frac(yn, yd))
    }

    pub fn origin() -> Self {
        Point2::from_int(0, 0)
    }

    pub fn is_origin(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Both coordinates integral.
    pub fn is_integer(&self) -> bool {
        scalar::is_integer(&self.x) && scalar::is_integer(&self.y)
    }

    /// Integer coordinates, if both fit in `i64`.
    pub fn to_int(&self) -> Option<(i64, i64)> {
        Some((scalar::as_i64(&self.x)?, scalar::as_i64(&self.y)?))
    }

    pub fn add(&self, o: &Point2) -> Point2 {
        Point2::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn sub(&self, o: &Point2) -> Point2 {
        Point2::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn neg(&self) -> Point2 {
        Point2::new(-self.x.clone(), -self.y.clone())
    }

    pub fn scale(&self, s: &Scalar) -> Point2 {
        Point2::new(&self.x * s, &self.y * s)
    }

    /// Euclidean dot product with another point-as-vector.
    pub fn dot(&self, o: &Point2) -> Scalar {
        &self.x * &o.x + &self.y * &o.y
    }

    /// Lexicographic comparison, `x` before `y`.
    pub fn lex_cmp(&self, o: &Point2) -> Ordering {
        self.x.cmp(&o.x).then_with(|| self.y.cmp(&o.y))
    }

    /// The shortest integer vector with the same direction, for a nonzero
    /// rational vector: clears denominators and divides by the gcd.
    pub fn primitive_direction(&self) -> Point2 {
        assert!(!self.is_origin(), "no direction for the zero vector");
        let common = self.x.denom().lcm(self.y.denom());
        let nx = self.x.numer() * (&common / self.x.denom());
        let ny = self.y.numer() * (&common / self.y.denom());
        let g = nx.gcd(&ny);
        Point2::new(
            Scalar::from_integer(nx / &g),
            Scalar::from_integer(ny / &g),
        )
    }
}

impl fmt::Debug for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {})",
            scalar::to_string(&self.x),
            scalar::to_string(&self.y)
        )
    }
}

/// Cross product (signed area of the parallelogram) of two vectors.
pub fn cross(a: &Point2, b: &Point2) -> Scalar {
    &a.x * &b.y - &a.y * &b.x
}

/// Twice the signed area of the triangle `a b c`; positive for a left turn.
pub fn orient(a: &Point2, b: &Point2, c: &Point2) -> Scalar {
    cross(&b.sub(a), &c.sub(a))
}

/// A covector: the linear functional `p ↦ x·p.x + y·p.y`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Covec2 {
    pub x: Scalar,
    pub y: Scalar,
}

impl Covec2 {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Covec2 { x, y }
    }

    pub fn from_int(x: i64, y: i64) -> Self {
        Covec2::new(scalar::int(x), scalar::int(y))
    }

    /// Evaluate the functional on a point.
    pub fn pair(&self, p: &Point2) -> Scalar {
        &self.x * &p.x + &self.y * &p.y
    }

    /// The same coordinates as a point of the dual plane.
    pub fn as_point(&self) -> Point2 {
        Point2::new(self.x.clone(), self.y.clone())
    }

    /// Integer coordinates, if both fit in `i64`.
    pub fn to_int(&self) -> Option<(i64, i64)> {
        Some((scalar::as_i64(&self.x)?, scalar::as_i64(&self.y)?))
    }
}

impl fmt::Debug for Covec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "⟨{}, {}⟩",
            scalar::to_string(&self.x),
            scalar::to_string(&self.y)
        )
    }
}

/// A linear map of the plane, row-major: `(x, y) ↦ (a x + b y, c x + d y)`.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearMap2 {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub d: Scalar,
}

impl LinearMap2 {
    pub fn new(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Self {
        LinearMap2 { a, b, c, d }
    }

    pub fn from_int(a: i64, b: i64, c: i64, d: i64) -> Self {
        LinearMap2::new(
            scalar::int(a),
            scalar::int(b),
            scalar::int(c),
            scalar::int(d),
        )
    }

    pub fn identity() -> Self {
        LinearMap2::from_int(1, 0, 0, 1)
    }

    /// The map with the given column vectors.
    pub fn from_columns(u: &Point2, v: &Point2) -> Self {
        LinearMap2::new(u.x.clone(), v.x.clone(), u.y.clone(), v.y.clone())
    }

    pub fn det(&self) -> Scalar {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn apply(&self, p: &Point2) -> Point2 {
        Point2::new(
            &self.a * &p.x + &self.b * &p.y,
            &self.c * &p.x + &self.d * &p.y,
        )
    }

    pub fn inverse(&self) -> Result<LinearMap2> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::SingularMap);
        }
        Ok(LinearMap2::new(
            &self.d / &det,
            -&self.b / &det,
            -&self.c / &det,
            &self.a / &det,
        ))
    }

    pub fn transpose(&self) -> LinearMap2 {
        LinearMap2::new(
            self.a.clone(),
            self.c.clone(),
            self.b.clone(),
            self.d.clone(),
        )
    }

    /// Integer entries and determinant ±1.
    pub fn is_unimodular(&self) -> bool {
        let entries = [&self.a, &self.b, &self.c, &self.d];
        entries.iter().all(|e| scalar::is_integer(e)) && self.det().abs() == scalar::int(1)
    }

    /// How the map acts on covectors so that pairings are preserved:
    /// the inverse transpose.
    pub fn apply_covec(&self, w: &Covec2) -> Result<Covec2> {
        let inv = self.inverse()?.transpose();
        let p = inv.apply(&w.as_point());
        Ok(Covec2::new(p.x, p.y))
    }
}

impl fmt::Debug for LinearMap2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} {}; {} {}]",
            scalar::to_string(&self.a),
            scalar::to_string(&self.b),
            scalar::to_string(&self.c),
            scalar::to_string(&self.d)
        )
    }
}

/// Total order on nonzero direction vectors by angle, starting just above
/// the downward direction `(0, −1)` and sweeping counterclockwise through
/// right, up, left, and ending at down itself.
///
/// Within a half-plane the order is decided exactly by the cross product.
pub(crate) fn angle_class(v: &Point2) -> u8 {
    debug_assert!(!v.is_origin());
    if v.x.is_positive() {
        0
    } else if v.x.is_zero() && v.y.is_positive() {
        1
    } else if v.x.is_negative() {
        2
    } else {
        3
    }
}

pub(crate) fn angle_cmp(a: &Point2, b: &Point2) -> Ordering {
    angle_class(a)
        .cmp(&angle_class(b))
        .then_with(|| scalar::sign(&cross(b, a)).cmp(&0))
}
