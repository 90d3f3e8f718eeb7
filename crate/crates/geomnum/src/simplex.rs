//! Rational simplices in dimension n: volume, polar duality, and
//! unavoidability in small dimensions.
//!
//! The planar theory lives on polygons; in higher dimensions only
//! simplices are needed.  The central example is the *basic simplex* with
//! vertices `e₁, …, eₙ, (−1, …, −1)`, of volume `(n+1)/n!` — conjecturally
//! the minimal-volume unavoidable body in every dimension, provably so in
//! the plane.

use num_traits::{One, Signed, Zero};

use crate::scalar::{self, Scalar};
use crate::{Error, Result};

/// A non-degenerate simplex: `n + 1` points with `n` rational coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplexN {
    dim: usize,
    vertices: Vec<Vec<Scalar>>,
}

impl SimplexN {
    /// Build from a vertex list, checking shape and non-degeneracy.
    pub fn new(vertices: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim = match vertices.len() {
            0 | 1 => {
                return Err(Error::DegenerateInput(
                    "a simplex needs at least 2 vertices".into(),
                ))
            }
            k => k - 1,
        };
        if vertices.iter().any(|v| v.len() != dim) {
            return Err(Error::DegenerateInput(format!(
                "expected {} coordinates per vertex for {} vertices",
                dim,
                dim + 1
            )));
        }
        let s = SimplexN { dim, vertices };
        if s.edge_determinant().is_zero() {
            return Err(Error::DegenerateInput(
                "simplex vertices are affinely dependent".into(),
            ));
        }
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<Scalar>] {
        &self.vertices
    }

    /// Dilate about the origin by a positive factor.
    pub fn scale(&self, s: &Scalar) -> Result<SimplexN> {
        if !s.is_positive() {
            return Err(Error::DegenerateInput("scale factor must be positive".into()));
        }
        Ok(SimplexN {
            dim: self.dim,
            vertices: self
                .vertices
                .iter()
                .map(|v| v.iter().map(|c| c * s).collect())
                .collect(),
        })
    }

    fn edge_determinant(&self) -> Scalar {
        let v0 = &self.vertices[0];
        let rows: Vec<Vec<Scalar>> = self.vertices[1..]
            .iter()
            .map(|v| v.iter().zip(v0).map(|(a, b)| a - b).collect())
            .collect();
        determinant(rows)
    }
}

/// Determinant by exact Gaussian elimination.
fn determinant(mut m: Vec<Vec<Scalar>>) -> Scalar {
    let n = m.len();
    let mut det = Scalar::one();
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !m[r][col].is_zero()) {
            Some(r) => r,
            None => return Scalar::zero(),
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            let f = &m[r][col] / &p;
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let sub = &f * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

/// Solve `A x = b` by exact Gaussian elimination; `None` when singular.
fn solve(mut a: Vec<Vec<Scalar>>, mut b: Vec<Scalar>) -> Option<Vec<Scalar>> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(pivot, col);
        b.swap(pivot, col);
        let p = a[col][col].clone();
        for r in col + 1..n {
            let f = &a[r][col] / &p;
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let sub = &f * &a[col][c];
                a[r][c] -= sub;
            }
            let sub = &f * &b[col];
            b[r] -= sub;
        }
    }
    let mut x = vec![Scalar::zero(); n];
    for row in (0..n).rev() {
        let mut acc = b[row].clone();
        for c in row + 1..n {
            acc -= &a[row][c] * &x[c];
        }
        x[row] = acc / &a[row][row];
    }
    Some(x)
}

fn dot_n(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Exact volume `|det(v₁−v₀, …, vₙ−v₀)| / n!`.
pub fn simplex_volume(s: &SimplexN) -> Scalar {
    let mut fact = Scalar::one();
    for k in 2..=s.dim {
        fact *= scalar::int(k as i64);
    }
    s.edge_determinant().abs() / fact
}

/// The simplex `conv{e₁, …, eₙ, (−1, …, −1)}` of volume `(n+1)/n!`.
pub fn basic_simplex(n: usize) -> SimplexN {
    assert!(n >= 1, "dimension must be positive");
    let mut vertices = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut v = vec![Scalar::zero(); n];
        v[i] = Scalar::one();
        vertices.push(v);
    }
    vertices.push(vec![-Scalar::one(); n]);
    SimplexN { dim: n, vertices }
}

/// Polar dual of a simplex with the origin strictly inside.
///
/// Vertex `j` of the dual is the covector `ξ` with `ξ·v = 1` on the facet
/// omitting vertex `j`; with this indexing the operation is involutive
/// vertex-by-vertex.  A singular facet system means the facet hyperplane
/// passes through the origin, and a solved `ξ` with `ξ·v_j ≥ 1` puts the
/// origin outside the facet halfspace; both reject the input.
pub fn dual_simplex(s: &SimplexN) -> Result<SimplexN> {
    let n = s.dim;
    let mut dual_vertices = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let facet: Vec<Vec<Scalar>> = (0..=n)
            .filter(|&i| i != j)
            .map(|i| s.vertices[i].clone())
            .collect();
        let xi = solve(facet, vec![Scalar::one(); n]).ok_or(Error::OriginNotInterior)?;
        if dot_n(&xi, &s.vertices[j]) >= Scalar::one() {
            return Err(Error::OriginNotInterior);
        }
        dual_vertices.push(xi);
    }
    Ok(SimplexN { dim: n, vertices: dual_vertices })
}

/// Upper bound on enumerated cells in `unavoidable_simplex`.
const BOX_BUDGET: i128 = 40_000_000;

/// Does the simplex meet every integer hyperplane `{ξ·x = 1}`?
///
/// Equivalent to the dual simplex containing no nonzero integer point in
/// its interior; interiority of `ξ` is the exact test
/// `max_j ξ·v_j < 1` over the vertices of `s`.  Restricted to `n ≤ 4` to
/// keep the bounding-box enumeration honest.
pub fn unavoidable_simplex(s: &SimplexN) -> Result<bool> {
    if s.dim > 4 {
        return Err(Error::DimensionTooLarge(s.dim));
    }
    let dual = dual_simplex(s)?;
    let mut lo = vec![0i64; s.dim];
    let mut hi = vec![0i64; s.dim];
    for c in 0..s.dim {
        let mut min = dual.vertices[0][c].clone();
        let mut max = min.clone();
        for v in &dual.vertices[1..] {
            if v[c] < min {
                min = v[c].clone();
            }
            if v[c] > max {
                max = v[c].clone();
            }
        }
        lo[c] = scalar::ceil_i64(&min)?;
        hi[c] = scalar::floor_i64(&max)?;
        if lo[c] > hi[c] {
            return Ok(true);
        }
    }
    let cells: i128 = lo
        .iter()
        .zip(&hi)
        .map(|(&a, &b)| (b - a + 1) as i128)
        .product();
    if cells > BOX_BUDGET {
        return Err(Error::EnumerationFailed);
    }
    let mut xi = lo.clone();
    loop {
        if xi.iter().any(|&z| z != 0) {
            let xi_s: Vec<Scalar> = xi.iter().map(|&z| scalar::int(z)).collect();
            let interior = s
                .vertices
                .iter()
                .all(|v| dot_n(&xi_s, v) < Scalar::one());
            if interior {
                return Ok(false);
            }
        }
        // Odometer step through the box.
        let mut c = 0;
        loop {
            if c == s.dim {
                return Ok(true);
            }
            if xi[c] < hi[c] {
                xi[c] += 1;
                break;
            }
            xi[c] = lo[c];
            c += 1;
        }
    }
}
