//! Exact rational convex geometry over the integer lattice.
//!
//! This crate works with convex bodies whose vertices have rational
//! coordinates and asks what the integer lattice sees of them: which of the
//! integer lines `m·x + n·y = 1` a planar body meets, how small a body can be
//! while meeting all of them, and what those questions translate to for the
//! shortest closed geodesics of flat Finsler tori.
//!
//! Everything that can be decided exactly is decided exactly, in
//! big-rational arithmetic: polar duals, support and gauge functions,
//! difference bodies, lattice-point enumeration, basis reduction, and the
//! area-descent procedure of [`descent`] that slides a vertex of an
//! unavoidable polygon along a support line until a certifiable event occurs.
//! Even the critical-determinant search in [`critical`] is exact: floating
//! point appears there only as a conservative prefilter, and the returned
//! basis is rational with its admissibility re-verified exactly.
//!
//! # Modules
//!
//! * [`geom`] — points, covectors, linear maps, convex polygons and their
//!   exact operations (hull, area, gauge, support, polar dual, difference
//!   body, intersection).
//! * [`simplex`] — simplices in dimension ≥ 2, volumes, dual simplices, and
//!   the `basic_simplex` family.
//! * [`lattice`] — lattice-point enumeration, unavoidability certificates,
//!   vertex weights, shortest vectors, reduced bases.
//! * [`critical`] — critical determinants of symmetric bodies with exact
//!   admissibility certificates.
//! * [`invariants`] — volume-product and symmetrization inequalities with
//!   exact or enclosure-certified verdicts.
//! * [`descent`] — certified area descent for unavoidable polygons.
//! * [`torus`] — flat Finsler tori: systoles, Holmes–Thompson and
//!   Busemann–Hausdorff areas, systolic verdicts, Zoll detection.
//! * [`io`] — the body-file format and report serialization.
//! * [`random`] — seeded random body generation under constraints.
//! * [`svg`] — deterministic SVG rendering of bodies, integer-line families
//!   and descent traces.

pub mod critical;
pub mod descent;
pub mod geom;
pub mod guide;
pub mod invariants;
pub mod io;
pub mod lattice;
pub mod random;
pub mod scalar;
pub mod simplex;
pub mod svg;
pub mod torus;

pub use geom::{ConvexPolygon, Containment, Covec2, LinearMap2, Point2};
pub use scalar::Scalar;

/// Errors shared by every module of the crate.
///
/// Operations with geometric preconditions (an interior origin, central
/// symmetry, unavoidability, …) report the violated precondition rather than
/// panicking; bounded searches that run out of room report that instead of
/// looping.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Input does not span a full-dimensional convex body.
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    /// Three consecutive vertices fail to make a strict left turn.
    #[error("vertices #{i}, #{j}, #{k} do not make a strict left turn")]
    NotStrictlyConvex { i: usize, j: usize, k: usize },
    /// The operation needs the origin strictly inside the body.
    #[error("the origin is not an interior point of the body")]
    OriginNotInterior,
    /// The linear map (or lattice basis) has determinant zero.
    #[error("singular linear map")]
    SingularMap,
    /// The operation needs a centrally symmetric body.
    #[error("the body is not centrally symmetric")]
    NotSymmetric,
    /// The operation needs an unavoidable body.
    #[error("the body misses an integer line")]
    NotUnavoidable,
    /// The operation needs a reversible metric (symmetric unit ball).
    #[error("the metric is not reversible")]
    NotReversible,
    /// The operation is only implemented up to a fixed dimension.
    #[error("dimension {0} is above the supported bound for this operation")]
    DimensionTooLarge(usize),
    /// A simplex facet is degenerate.
    #[error("degenerate simplex facet")]
    DegenerateFacet,
    /// The operation is only defined over the standard integer lattice.
    #[error("this check is only defined over the standard integer lattice")]
    UnsupportedLattice,
    /// Numeric refinement stalled before reaching the requested tolerance.
    #[error("numeric search did not reach the requested tolerance")]
    ToleranceNotReached,
    /// A certified enumeration grew past its safety bound.
    #[error("certified enumeration exceeded its safety bound")]
    EnumerationFailed,
    /// Descent did not terminate within the step budget.
    #[error("descent step budget exhausted")]
    StepBudgetExceeded,
    /// A random generator could not satisfy its constraint.
    #[error("could not satisfy constraint: {0}")]
    ConstraintUnsatisfiable(String),
    /// A body file (or scalar) failed to parse.
    #[error("parse error: {0}")]
    Parse(String),
    /// A certificate failed re-verification.
    #[error("certificate failed verification: {0}")]
    CertificateInvalid(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Every fenced code block in the guide under `book/` runs as a doc-test
/// of this crate, so the guide's examples can never drift from the
/// library they describe.
#[cfg(doctest)]
mod guide {
    #![allow(unused)]

    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            struct $name;
        };
    }

    chapter!(Introduction, "../../../book/src/introduction.md");
    chapter!(ExactBodies, "../../../book/src/exact-bodies.md");
    chapter!(Lattices, "../../../book/src/lattices.md");
    chapter!(Descent, "../../../book/src/descent.md");
    chapter!(Invariants, "../../../book/src/invariants.md");
    chapter!(FlatTori, "../../../book/src/flat-tori.md");
    chapter!(CommandLine, "../../../book/src/command-line.md");
}
