//! Affine invariants of convex bodies and their sharp bounds.
//!
//! Each function computes one classical functional exactly — the Mahler
//! product `|K|·|K*|`, the Rogers–Shephard ratio `|K−K|/|K|`, the lattice
//! packing density `δ(K)`, the covering functional `ρ(K)`, and the
//! quotient `Q(K−K)` of area by critical determinant — and
//! [`inequality_battery`] checks every applicable bound at once, reporting
//! exact pass/fail verdicts plus equality flags.
//!
//! The only irrational number that ever enters a verdict is π, and it
//! enters through a hard-coded 50-digit directed-rounding rational
//! enclosure: a comparison passes only when it holds against the
//! unfavourable endpoint, so a `pass` status is a proof, not an estimate.

use num_bigint::BigInt;
use num_traits::One;

use crate::geom::ConvexPolygon;
use crate::io::body_digest;
use crate::lattice::is_unavoidable;
use crate::critical::critical_lattice_symmetric;
use crate::scalar::{self, frac, int, Scalar};
use crate::Result;

/// Verdict of a single invariant check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    /// The stated bound holds (exactly, or against the certified enclosure).
    Pass,
    /// The stated bound fails.
    Fail,
    /// The check's precondition (interior origin, unavoidability, …) is not
    /// met by this body.
    NotApplicable,
}

/// One named invariant with its value, the bound it was checked against,
/// and the verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantEntry {
    /// Stable identifier (also used in serialized reports).
    pub name: String,
    /// Exact value, when the check applies.
    pub value: Option<Scalar>,
    /// Human-readable statement of the bound.
    pub bound: String,
    /// Verdict.
    pub status: CheckStatus,
    /// Equality flags and inapplicability reasons.
    pub note: Option<String>,
}

/// Every applicable invariant of one body, with a canonical digest tying
/// the report to its input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub entries: Vec<InvariantEntry>,
    pub body_digest: String,
}

impl InvariantReport {
    /// The entry with the given name, if present.
    pub fn entry(&self, name: &str) -> Option<&InvariantEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

/// Decimal digits of π truncated after 50 places; the tail `…58209…`
/// witnesses that truncation is a strict lower bound.
const PI_DIGITS: &str = "3.14159265358979323846264338327950288419716939937510";

/// Rational lower endpoint of the π enclosure: `pi_lo() < π`.
pub fn pi_lo() -> Scalar {
    scalar::parse(PI_DIGITS).expect("the digit literal parses")
}

/// Rational upper endpoint of the π enclosure: `π < pi_hi()`, with
/// `pi_hi() − pi_lo() = 10⁻⁵⁰`.
pub fn pi_hi() -> Scalar {
    pi_lo() + Scalar::new(BigInt::one(), BigInt::from(10).pow(50))
}

fn pow(base: &Scalar, n: u32) -> Scalar {
    let mut out = Scalar::one();
    for _ in 0..n {
        out *= base;
    }
    out
}

fn factorial(n: u32) -> Scalar {
    let mut out = BigInt::one();
    for k in 2..=n {
        out *= BigInt::from(k);
    }
    Scalar::from_integer(out)
}

/// The Mahler product `area(P)·area(P*)`, exactly.
///
/// Scale- and `GL(2,ℚ)`-invariant; at least `27/4` for every body with the
/// origin interior (equality at triangles with the origin as barycenter)
/// and at least `8` for symmetric bodies (equality at parallelograms).
pub fn mahler_product(p: &ConvexPolygon) -> Result<Scalar> {
    let dual = p.polar_dual()?;
    Ok(p.area() * dual.area())
}

/// The Rogers–Shephard ratio `area(P−P)/area(P)`, exactly.
///
/// Always in `[4, 6]`: `6` exactly when `P` is a triangle, `4` exactly
/// when `P` is centrally symmetric.
pub fn rogers_shephard_ratio(p: &ConvexPolygon) -> Scalar {
    p.difference_body().area() / p.area()
}

/// The symmetrized Mahler product `area(P−P)·area((P−P)*)`, exactly.
///
/// Translation-invariant, since the difference body is.
pub fn symmetrized_mahler(p: &ConvexPolygon) -> Scalar {
    let diff = p.difference_body();
    mahler_product(&diff).expect("a difference body has the origin interior")
}

/// Check `π²/2 < area(P−P)·area((P−P)*) ≤ π²` against the certified π
/// enclosure and report the exact value with a verdict.
///
/// The comparison is sound by construction: `pass` requires the value to
/// clear the unfavourable enclosure endpoint on both sides.  A value
/// inside an enclosure gap (width `~10⁻⁵⁰`) cannot be decided and is
/// reported as a failure with an explanatory note.
pub fn santalo_kuperberg_check(p: &ConvexPolygon) -> InvariantEntry {
    let s = symmetrized_mahler(p);
    let half_hi = pi_hi() * pi_hi() / int(2);
    let half_lo = pi_lo() * pi_lo() / int(2);
    let sq_lo = pi_lo() * pi_lo();
    let sq_hi = pi_hi() * pi_hi();
    let lower_ok = s >= half_hi;
    let upper_ok = s <= sq_lo;
    let mut note = None;
    if !lower_ok && s >= half_lo {
        note = Some("value inside the π²/2 enclosure gap; undecidable".into());
    } else if !upper_ok && s <= sq_hi {
        note = Some("value inside the π² enclosure gap; undecidable".into());
    }
    InvariantEntry {
        name: "santalo_kuperberg".into(),
        value: Some(s),
        bound: "pi^2/2 < value <= pi^2".into(),
        status: if lower_ok && upper_ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        },
        note,
    }
}

/// The lattice packing density `δ(P) = area(P)/Δ(P−P)`, exactly.
///
/// Always in `(1/3, 1]`; equals `1` exactly when translates of `P` by some
/// lattice tile the plane, and `2/3` for every triangle.
pub fn packing_density(p: &ConvexPolygon, tol: &Scalar) -> Result<Scalar> {
    let (_, delta) = critical_lattice_symmetric(&p.difference_body(), tol)?;
    Ok(p.area() / delta)
}

/// The covering functional `ρ(P) = area(P)·Δ((P−P)*)`, exactly.
///
/// Affine-invariant; at least `3/8` for every convex body, with equality
/// exactly at triangles.
pub fn covering_rho(p: &ConvexPolygon, tol: &Scalar) -> Result<Scalar> {
    let dual_diff = p.difference_body().polar_dual()?;
    let (_, delta) = critical_lattice_symmetric(&dual_diff, tol)?;
    Ok(p.area() * delta)
}

/// The quotient `Q(P−P) = area(P−P)/Δ(P−P)`, exactly.
///
/// Always in `(2, 4]`, with `4` exactly for difference bodies that tile.
pub fn q_symmetrized(p: &ConvexPolygon, tol: &Scalar) -> Result<Scalar> {
    let diff = p.difference_body();
    let (_, delta) = critical_lattice_symmetric(&diff, tol)?;
    Ok(diff.area() / delta)
}

/// Certified enclosure of the dimension-`n` isosystolic constant
/// `(π/8)ⁿ·(n+1)/n!`, together with the conjectured sharp value
/// `(n+1)/n!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsosystolicConstant {
    /// Rational lower bound of the constant.
    pub lower: Scalar,
    /// Rational upper bound of the constant.
    pub upper: Scalar,
    /// The conjectured sharp constant `(n+1)/n!` it undercuts.
    pub conjectured_bound: Scalar,
}

/// The proven lower-bound constant `(π/8)ⁿ·(n+1)/n!` for the volume of an
/// `n`-dimensional body meeting every integer hyperplane, as a certified
/// rational enclosure.
pub fn isosystolic_constant(n: u32) -> IsosystolicConstant {
    assert!(n >= 1, "the constant is defined for dimension n >= 1");
    let shape = (int(i64::from(n) + 1)) / factorial(n);
    IsosystolicConstant {
        lower: pow(&(pi_lo() / int(8)), n) * &shape,
        upper: pow(&(pi_hi() / int(8)), n) * &shape,
        conjectured_bound: shape,
    }
}

fn entry(
    name: &str,
    value: Option<Scalar>,
    bound: &str,
    status: CheckStatus,
    note: Option<&str>,
) -> InvariantEntry {
    InvariantEntry {
        name: name.into(),
        value,
        bound: bound.into(),
        status,
        note: note.map(str::to_owned),
    }
}

fn pass_fail(ok: bool) -> CheckStatus {
    if ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    }
}

/// Every applicable invariant check for one body, in one report.
///
/// Checks whose precondition the body does not meet (an interior origin
/// for the Mahler product, unavoidability for the area bounds) are
/// reported `NotApplicable` rather than omitted, so a report always has
/// the same shape.  For unavoidable bodies the chain `4ρ(P) ≤ area(P)` and
/// its scale-invariant companion `4ρ(P) < area(P)·area(P*)` are checked
/// exactly.
pub fn inequality_battery(p: &ConvexPolygon) -> InvariantReport {
    let tol = frac(1, 1_000_000);
    let symmetric = p.is_symmetric();
    let mut entries = Vec::new();

    let mahler = mahler_product(p).ok();
    match &mahler {
        Some(m) => {
            let (threshold, bound) = if symmetric {
                (int(8), "8 <= value (symmetric)")
            } else {
                (frac(27, 4), "27/4 <= value")
            };
            let note = (*m == threshold).then_some("equality");
            entries.push(entry(
                "mahler_product",
                Some(m.clone()),
                bound,
                pass_fail(*m >= threshold),
                note,
            ));
        }
        None => entries.push(entry(
            "mahler_product",
            None,
            "27/4 <= value",
            CheckStatus::NotApplicable,
            Some("origin not interior"),
        )),
    }

    let rs = rogers_shephard_ratio(p);
    let rs_note = if rs == int(6) {
        Some("equality (triangle)")
    } else if rs == int(4) {
        Some("equality (symmetric)")
    } else {
        None
    };
    entries.push(entry(
        "rogers_shephard_ratio",
        Some(rs.clone()),
        "4 <= value <= 6",
        pass_fail(rs >= int(4) && rs <= int(6)),
        rs_note,
    ));

    entries.push(santalo_kuperberg_check(p));

    match packing_density(p, &tol) {
        Ok(d) => entries.push(entry(
            "packing_density",
            Some(d.clone()),
            "1/3 < value <= 1",
            pass_fail(d > frac(1, 3) && d <= int(1)),
            (d == int(1)).then_some("equality (tiling)"),
        )),
        Err(e) => entries.push(entry(
            "packing_density",
            None,
            "1/3 < value <= 1",
            CheckStatus::NotApplicable,
            Some(&e.to_string()),
        )),
    }

    let rho = covering_rho(p, &tol).ok();
    match &rho {
        Some(r) => entries.push(entry(
            "covering_rho",
            Some(r.clone()),
            "3/8 <= value",
            pass_fail(*r >= frac(3, 8)),
            (*r == frac(3, 8)).then_some("equality (triangle)"),
        )),
        None => entries.push(entry(
            "covering_rho",
            None,
            "3/8 <= value",
            CheckStatus::NotApplicable,
            None,
        )),
    }

    match q_symmetrized(p, &tol) {
        Ok(q) => entries.push(entry(
            "q_symmetrized",
            Some(q.clone()),
            "2 < value <= 4",
            pass_fail(q > int(2) && q <= int(4)),
            (q == int(4)).then_some("equality (tiling difference body)"),
        )),
        Err(_) => entries.push(entry(
            "q_symmetrized",
            None,
            "2 < value <= 4",
            CheckStatus::NotApplicable,
            None,
        )),
    }

    let unavoidable = is_unavoidable(p).map(|c| c.unavoidable).unwrap_or(false);
    let area = p.area();
    if unavoidable {
        entries.push(entry(
            "unavoidable_area_bound",
            Some(area.clone()),
            "3/2 <= area",
            pass_fail(area >= frac(3, 2)),
            (area == frac(3, 2)).then_some("equality"),
        ));
        if symmetric {
            let note = if area == int(2) && p.vertex_count() == 4 {
                Some("equality (parallelogram)")
            } else {
                None
            };
            entries.push(entry(
                "symmetric_unavoidable_area_bound",
                Some(area.clone()),
                "2 <= area",
                pass_fail(area >= int(2)),
                note,
            ));
        } else {
            entries.push(entry(
                "symmetric_unavoidable_area_bound",
                None,
                "2 <= area",
                CheckStatus::NotApplicable,
                Some("body is not symmetric"),
            ));
        }
        match &rho {
            Some(r) => {
                let four_rho = int(4) * r;
                entries.push(entry(
                    "rho_area_chain",
                    Some(four_rho.clone()),
                    "4*rho <= area",
                    pass_fail(four_rho <= area),
                    (four_rho == area).then_some("equality"),
                ));
                match &mahler {
                    Some(m) => entries.push(entry(
                        "rho_mahler_chain",
                        Some(four_rho.clone()),
                        "4*rho < mahler product",
                        pass_fail(four_rho < *m),
                        None,
                    )),
                    None => entries.push(entry(
                        "rho_mahler_chain",
                        None,
                        "4*rho < mahler product",
                        CheckStatus::NotApplicable,
                        Some("origin not interior"),
                    )),
                }
            }
            None => {
                entries.push(entry(
                    "rho_area_chain",
                    None,
                    "4*rho <= area",
                    CheckStatus::NotApplicable,
                    None,
                ));
                entries.push(entry(
                    "rho_mahler_chain",
                    None,
                    "4*rho < mahler product",
                    CheckStatus::NotApplicable,
                    None,
                ));
            }
        }
    } else {
        for (name, bound) in [
            ("unavoidable_area_bound", "3/2 <= area"),
            ("symmetric_unavoidable_area_bound", "2 <= area"),
            ("rho_area_chain", "4*rho <= area"),
            ("rho_mahler_chain", "4*rho < mahler product"),
        ] {
            entries.push(entry(
                name,
                None,
                bound,
                CheckStatus::NotApplicable,
                Some("body is avoidable"),
            ));
        }
    }

    InvariantReport {
        entries,
        body_digest: body_digest(p),
    }
}
