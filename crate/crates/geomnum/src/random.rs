//! Seeded random polygon generation under exact constraints.
//!
//! The generator is deterministic: one seed, one body, on every platform.
//! Coordinates are rationals with bounded denominator drawn from a fixed
//! box, so generated bodies stay within the exact-arithmetic comfort zone.
//! Constraints are enforced exactly, not by rejection sampling on floats:
//! symmetry comes from hulling a point set together with its reflection,
//! an interior origin from centering on the vertex centroid, and
//! unavoidability from the closed-form minimal dilation — scaling by the
//! reciprocal of the dual's shortest-vector gauge lands the body exactly
//! on the threshold where it meets every integer line.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::{ConvexPolygon, Point2};
use crate::lattice::{is_unavoidable, shortest_vector, Lattice2};
use crate::scalar::{int, Scalar};
use crate::{Error, Result};

/// Constraint a generated body must satisfy exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BodyConstraint {
    /// Any strictly convex polygon.
    None,
    /// The origin is strictly inside (the body is centered on its vertex
    /// centroid).
    OriginInterior,
    /// Centrally symmetric about the origin.
    Symmetric,
    /// Meets every integer line `m·x + n·y = 1`, scaled to do so
    /// minimally: its polar dual touches the lattice.
    Unavoidable,
}

/// Deterministic recipe for one random body.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomBodySpec {
    /// RNG seed; equal specs generate equal bodies.
    pub seed: u64,
    /// Smallest acceptable vertex count (at least 3).
    pub min_vertices: usize,
    /// Largest acceptable vertex count.
    pub max_vertices: usize,
    /// Coordinates are sampled as `k/d` with `1 ≤ d ≤ max_denominator`.
    pub max_denominator: u64,
    /// Constraint to enforce.
    pub constraint: BodyConstraint,
}

impl RandomBodySpec {
    /// A spec with the default shape knobs: 3–8 vertices, denominators up
    /// to 64, no constraint.
    pub fn new(seed: u64) -> Self {
        RandomBodySpec {
            seed,
            min_vertices: 3,
            max_vertices: 8,
            max_denominator: 64,
            constraint: BodyConstraint::None,
        }
    }

    /// Same spec with another constraint.
    pub fn with_constraint(mut self, constraint: BodyConstraint) -> Self {
        self.constraint = constraint;
        self
    }
}

/// Sampling rounds before giving up on a constraint.
const RETRY_ROUNDS: usize = 64;
/// Coordinates are drawn from `[−BOX, BOX]`.
const BOX: i64 = 4;

fn sample_coordinate(rng: &mut ChaCha8Rng, max_den: u64) -> Scalar {
    let d = rng.gen_range(1..=max_den) as i64;
    let k = rng.gen_range(-BOX * d..=BOX * d);
    Scalar::new(k.into(), d.into())
}

fn sample_point(rng: &mut ChaCha8Rng, max_den: u64) -> Point2 {
    let x = sample_coordinate(rng, max_den);
    let y = sample_coordinate(rng, max_den);
    Point2::new(x, y)
}

/// Evenly spaced vertex subsequence: a subset of a strictly convex vertex
/// cycle is again strictly convex, so trimming preserves validity.
fn trim(hull: &ConvexPolygon, target: usize) -> Result<ConvexPolygon> {
    let h = hull.vertex_count();
    debug_assert!(target <= h);
    let picked: Vec<Point2> = (0..target)
        .map(|j| hull.vertex(j * h / target).clone())
        .collect();
    ConvexPolygon::new(picked)
}

/// Like [`trim`], but picking antipodal vertex pairs together so central
/// symmetry survives.
fn trim_symmetric(hull: &ConvexPolygon, target: usize) -> Result<ConvexPolygon> {
    let h = hull.vertex_count();
    debug_assert!(h % 2 == 0 && target % 2 == 0 && target <= h);
    let half = h / 2;
    let k = target / 2;
    let mut picked: Vec<Point2> = Vec::with_capacity(target);
    for j in 0..k {
        picked.push(hull.vertex(j * half / k).clone());
    }
    for j in 0..k {
        picked.push(hull.vertex(j * half / k + half).clone());
    }
    ConvexPolygon::new(picked)
}

fn centroid(p: &ConvexPolygon) -> Point2 {
    let n = int(p.vertex_count() as i64);
    let mut x = Scalar::from_integer(0.into());
    let mut y = Scalar::from_integer(0.into());
    for v in p.vertices() {
        x += &v.x;
        y += &v.y;
    }
    Point2::new(x / &n, y / &n)
}

/// The deterministic random body for a spec.
///
/// Fails with [`Error::ConstraintUnsatisfiable`] when the requested
/// vertex-count window cannot be hit in a bounded number of sampling
/// rounds (or is impossible outright, such as an odd symmetric count).
pub fn random_body(spec: &RandomBodySpec) -> Result<ConvexPolygon> {
    if spec.min_vertices < 3 || spec.min_vertices > spec.max_vertices {
        return Err(Error::ConstraintUnsatisfiable(
            "vertex-count window is empty or below 3".into(),
        ));
    }
    if spec.max_denominator == 0 {
        return Err(Error::ConstraintUnsatisfiable(
            "denominator bound must be at least 1".into(),
        ));
    }
    let symmetric = matches!(
        spec.constraint,
        BodyConstraint::Symmetric | BodyConstraint::Unavoidable
    );
    if symmetric && spec.min_vertices.max(4) > even_below(spec.max_vertices) {
        return Err(Error::ConstraintUnsatisfiable(
            "no even vertex count in the requested window".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for _ in 0..RETRY_ROUNDS {
        let candidate = if symmetric {
            sample_symmetric(&mut rng, spec)?
        } else {
            sample_plain(&mut rng, spec)?
        };
        let Some(hull) = candidate else { continue };
        return finish(hull, spec.constraint);
    }
    Err(Error::ConstraintUnsatisfiable(format!(
        "no hull with {}..={} vertices found in {} rounds",
        spec.min_vertices, spec.max_vertices, RETRY_ROUNDS
    )))
}

fn even_below(n: usize) -> usize {
    n - n % 2
}

fn sample_plain(rng: &mut ChaCha8Rng, spec: &RandomBodySpec) -> Result<Option<ConvexPolygon>> {
    let points: Vec<Point2> = (0..3 * spec.max_vertices + 9)
        .map(|_| sample_point(rng, spec.max_denominator))
        .collect();
    let Ok(hull) = ConvexPolygon::convex_hull(points) else {
        return Ok(None);
    };
    if hull.vertex_count() < spec.min_vertices {
        return Ok(None);
    }
    let target = hull.vertex_count().min(spec.max_vertices);
    trim(&hull, target).map(Some)
}

fn sample_symmetric(
    rng: &mut ChaCha8Rng,
    spec: &RandomBodySpec,
) -> Result<Option<ConvexPolygon>> {
    let mut points: Vec<Point2> = Vec::new();
    for _ in 0..2 * spec.max_vertices + 6 {
        let p = sample_point(rng, spec.max_denominator);
        points.push(p.neg());
        points.push(p);
    }
    let Ok(hull) = ConvexPolygon::convex_hull(points) else {
        return Ok(None);
    };
    debug_assert!(hull.is_symmetric());
    if hull.vertex_count() < spec.min_vertices.max(4) {
        return Ok(None);
    }
    let target = even_below(hull.vertex_count().min(spec.max_vertices));
    trim_symmetric(&hull, target).map(Some)
}

fn finish(hull: ConvexPolygon, constraint: BodyConstraint) -> Result<ConvexPolygon> {
    match constraint {
        BodyConstraint::None | BodyConstraint::Symmetric => Ok(hull),
        BodyConstraint::OriginInterior => center(hull),
        BodyConstraint::Unavoidable => {
            let centered = center(hull)?;
            let dual = centered.polar_dual()?;
            let (_, sigma) = shortest_vector(&dual, &Lattice2::standard())?;
            // Scaling the body by λ scales its dual's gauges by λ; the
            // reciprocal of the shortest dual gauge is exactly the
            // smallest dilation meeting every integer line.
            let scaled = centered.scale(&(int(1) / &sigma))?;
            let certificate = is_unavoidable(&scaled)?;
            if !certificate.unavoidable {
                return Err(Error::CertificateInvalid(
                    "minimal dilation failed its unavoidability certificate".into(),
                ));
            }
            Ok(scaled)
        }
    }
}

/// Translate so the vertex centroid (always interior, by convexity) sits
/// at the origin.
fn center(hull: ConvexPolygon) -> Result<ConvexPolygon> {
    let c = centroid(&hull);
    Ok(hull.translate(&c.neg()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Containment;
    use crate::scalar::frac;

    #[test]
    fn identical_specs_generate_identical_bodies() {
        for constraint in [
            BodyConstraint::None,
            BodyConstraint::OriginInterior,
            BodyConstraint::Symmetric,
            BodyConstraint::Unavoidable,
        ] {
            let spec = RandomBodySpec::new(1).with_constraint(constraint);
            assert_eq!(
                random_body(&spec).unwrap(),
                random_body(&spec).unwrap(),
                "{constraint:?}"
            );
        }
    }

    #[test]
    fn constraints_hold_exactly_across_seeds() {
        for seed in 0..40 {
            let sym = random_body(
                &RandomBodySpec::new(seed).with_constraint(BodyConstraint::Symmetric),
            )
            .unwrap();
            assert!(sym.is_symmetric(), "seed {seed}");

            let interior = random_body(
                &RandomBodySpec::new(seed).with_constraint(BodyConstraint::OriginInterior),
            )
            .unwrap();
            assert!(
                interior.contains(&Point2::from_int(0, 0), Containment::Interior),
                "seed {seed}"
            );

            let unavoidable = random_body(
                &RandomBodySpec::new(seed).with_constraint(BodyConstraint::Unavoidable),
            )
            .unwrap();
            let cert = is_unavoidable(&unavoidable).unwrap();
            assert!(cert.unavoidable, "seed {seed}");
        }
    }

    #[test]
    fn unavoidable_bodies_touch_their_threshold() {
        // The minimal dilation puts the dual's shortest vector at gauge
        // exactly 1: shrinking by any factor loses a line.
        for seed in 0..10 {
            let spec = RandomBodySpec::new(seed).with_constraint(BodyConstraint::Unavoidable);
            let body = random_body(&spec).unwrap();
            let dual = body.polar_dual().unwrap();
            let (_, sigma) = shortest_vector(&dual, &Lattice2::standard()).unwrap();
            assert_eq!(sigma, int(1), "seed {seed}");
            let shrunk = body.scale(&frac(99, 100)).unwrap();
            assert!(!is_unavoidable(&shrunk).unwrap().unavoidable, "seed {seed}");
        }
    }

    #[test]
    fn vertex_counts_respect_the_window() {
        for seed in 0..20 {
            let mut spec = RandomBodySpec::new(seed);
            spec.min_vertices = 5;
            spec.max_vertices = 12;
            let body = random_body(&spec).unwrap();
            assert!((5..=12).contains(&body.vertex_count()), "seed {seed}");

            let mut sym = RandomBodySpec::new(seed).with_constraint(BodyConstraint::Symmetric);
            sym.min_vertices = 6;
            sym.max_vertices = 10;
            let body = random_body(&sym).unwrap();
            assert!((6..=10).contains(&body.vertex_count()), "seed {seed}");
            assert_eq!(body.vertex_count() % 2, 0, "seed {seed}");
        }
    }

    #[test]
    fn impossible_windows_are_rejected() {
        let mut spec = RandomBodySpec::new(1);
        spec.min_vertices = 2;
        assert!(random_body(&spec).is_err());
        let mut odd = RandomBodySpec::new(1).with_constraint(BodyConstraint::Symmetric);
        odd.min_vertices = 5;
        odd.max_vertices = 5;
        assert!(matches!(
            random_body(&odd),
            Err(Error::ConstraintUnsatisfiable(_))
        ));
    }

    #[test]
    fn triangles_on_demand() {
        // Windows pinned at 3 force triangles (used by invariant batteries).
        for seed in 0..20 {
            let mut spec = RandomBodySpec::new(seed);
            spec.min_vertices = 3;
            spec.max_vertices = 3;
            let body = random_body(&spec).unwrap();
            assert_eq!(body.vertex_count(), 3, "seed {seed}");
        }
    }
}
