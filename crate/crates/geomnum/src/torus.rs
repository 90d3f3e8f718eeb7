//! Flat Finsler 2-tori: systoles, areas, and sharp systolic verdicts.
//!
//! A flat Finsler torus is a norm (possibly asymmetric — a gauge) on the
//! plane, quotiented by a lattice.  Closed geodesics in a fixed homotopy
//! class are straight segments joining lattice translates, so the systole
//! is the smallest gauge of a nonzero lattice vector — an exact
//! computation.  Both notions of area are exact rationals once π is
//! factored out: the Holmes–Thompson area is `q/π` with
//! `q = area(ball*)·det(Λ)`, the Busemann–Hausdorff area (for reversible
//! metrics) is `q'·π` with `q' = det(Λ)/area(ball)`.
//!
//! The sharp systolic inequalities then become rational comparisons:
//! `sys² ≤ (2π/3)·(HT area)` clears to `3·sys² ≤ 2q`, and for reversible
//! metrics `sys² ≤ (π/2)·(HT area)` clears to `2·sys² ≤ q`.
//! [`systolic_check`] decides both exactly and reports the defects, so an
//! equality case is recognized as such, not as a small number.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::geom::{Containment, ConvexPolygon, Point2};
use crate::lattice::{shortest_vector, Lattice2};
use crate::scalar::{int, Scalar};
use crate::{Error, Result};

/// A flat Finsler metric on a 2-torus: the unit ball of the norm and the
/// lattice being quotiented by.
///
/// The ball may be asymmetric (an irreversible metric); reversibility is
/// computed once and exposed through [`FlatTorusMetric::is_reversible`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatTorusMetric {
    ball: ConvexPolygon,
    lattice: Lattice2,
    reversible: bool,
}

impl FlatTorusMetric {
    /// Metric with the given unit ball and lattice.
    ///
    /// The origin must be strictly inside the ball (a gauge must be finite
    /// and positive on every direction).
    pub fn new(ball: ConvexPolygon, lattice: Lattice2) -> Result<Self> {
        if !ball.contains(&Point2::from_int(0, 0), Containment::Interior) {
            return Err(Error::OriginNotInterior);
        }
        let reversible = ball.is_symmetric();
        Ok(FlatTorusMetric { ball, lattice, reversible })
    }

    /// Metric over the standard integer lattice ℤ².
    pub fn standard(ball: ConvexPolygon) -> Result<Self> {
        FlatTorusMetric::new(ball, Lattice2::standard())
    }

    /// The unit ball of the norm.
    pub fn ball(&self) -> &ConvexPolygon {
        &self.ball
    }

    /// The lattice being quotiented by.
    pub fn lattice(&self) -> &Lattice2 {
        &self.lattice
    }

    /// Whether the metric is reversible (the ball is symmetric).
    pub fn is_reversible(&self) -> bool {
        self.reversible
    }
}

/// Exact systolic data of one flat torus, with all occurrences of π
/// factored into the field names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystolicReport {
    /// Length of the shortest noncontractible closed geodesic.
    pub systole: Scalar,
    /// `q` with Holmes–Thompson area `= q/π`.
    pub ht_area_times_pi: Scalar,
    /// `q'` with Busemann–Hausdorff area `= q'·π`; reversible metrics only.
    pub bh_area_over_pi: Option<Scalar>,
    /// `2q − 3·sys²`: nonnegative exactly when the general sharp
    /// inequality `sys² ≤ (2π/3)·(HT area)` holds; zero exactly at
    /// equality.
    pub defect_general: Scalar,
    /// `q − 2·sys²` for reversible metrics: the defect of the sharp
    /// reversible inequality `sys² ≤ (π/2)·(HT area)`.
    pub defect_reversible: Option<Scalar>,
    /// Whether the geodesic flow is totally periodic; only decidable over
    /// the standard lattice.
    pub zoll: Option<bool>,
}

impl SystolicReport {
    /// Does the general sharp inequality hold?
    pub fn general_holds(&self) -> bool {
        !self.defect_general.is_negative()
    }

    /// Is the general inequality an exact equality?
    pub fn general_is_equality(&self) -> bool {
        self.defect_general.is_zero()
    }

    /// Does the reversible inequality hold (reversible metrics only)?
    pub fn reversible_holds(&self) -> Option<bool> {
        self.defect_reversible.as_ref().map(|d| !d.is_negative())
    }

    /// Is the reversible inequality an exact equality?
    pub fn reversible_is_equality(&self) -> Option<bool> {
        self.defect_reversible.as_ref().map(|d| d.is_zero())
    }
}

/// The systole: the smallest gauge of a nonzero lattice vector, exactly.
pub fn systole(m: &FlatTorusMetric) -> Result<Scalar> {
    Ok(shortest_vector(m.ball(), m.lattice())?.1)
}

/// The exact rational `q = area(ball*)·det(Λ)`; the Holmes–Thompson area
/// of the torus is `q/π`.
pub fn ht_area(m: &FlatTorusMetric) -> Scalar {
    let dual = m
        .ball()
        .polar_dual()
        .expect("metric constructor guarantees an interior origin");
    dual.area() * m.lattice().det()
}

/// The exact rational `q' = det(Λ)/area(ball)`; the Busemann–Hausdorff
/// area of the torus is `q'·π`.  Defined for reversible metrics only.
pub fn bh_area(m: &FlatTorusMetric) -> Result<Scalar> {
    if !m.is_reversible() {
        return Err(Error::NotReversible);
    }
    Ok(m.lattice().det() / m.ball().area())
}

/// Whether the geodesic flow of the metric is totally periodic: true
/// exactly when every vertex of the ball is a primitive integer vector.
///
/// Only defined over the standard lattice.
pub fn zoll_check(m: &FlatTorusMetric) -> Result<bool> {
    if !m.lattice().is_standard() {
        return Err(Error::UnsupportedLattice);
    }
    Ok(m.ball().vertices().iter().all(is_primitive_integer))
}

fn is_primitive_integer(p: &Point2) -> bool {
    match p.to_int() {
        Some((x, y)) => x.abs().gcd(&y.abs()) == 1,
        None => false,
    }
}

/// Every systolic quantity and sharp-inequality verdict of one torus, in
/// one exact report.
pub fn systolic_check(m: &FlatTorusMetric) -> Result<SystolicReport> {
    let sys = systole(m)?;
    let q = ht_area(m);
    let sys_sq = &sys * &sys;
    let defect_general = int(2) * &q - int(3) * &sys_sq;
    let (bh, defect_reversible) = if m.is_reversible() {
        (Some(bh_area(m)?), Some(&q - int(2) * &sys_sq))
    } else {
        (None, None)
    };
    let zoll = if m.lattice().is_standard() {
        Some(zoll_check(m)?)
    } else {
        None
    };
    Ok(SystolicReport {
        systole: sys,
        ht_area_times_pi: q,
        bh_area_over_pi: bh,
        defect_general,
        defect_reversible,
        zoll,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::pi_lo;
    use crate::lattice::is_unavoidable;
    use crate::scalar::frac;

    fn poly(pts: &[(i64, i64)]) -> ConvexPolygon {
        ConvexPolygon::new(pts.iter().map(|&(x, y)| Point2::from_int(x, y)).collect())
            .unwrap()
    }

    fn square_ball() -> FlatTorusMetric {
        FlatTorusMetric::standard(poly(&[(-1, -1), (1, -1), (1, 1), (-1, 1)])).unwrap()
    }

    /// The asymmetric triangle ball whose dual is the minimal-area
    /// unavoidable triangle.
    fn triangle_ball() -> FlatTorusMetric {
        FlatTorusMetric::standard(poly(&[(1, 1), (-2, 1), (1, -2)])).unwrap()
    }

    #[test]
    fn systoles_of_reference_tori() {
        assert_eq!(systole(&square_ball()).unwrap(), int(1));
        assert_eq!(systole(&triangle_ball()).unwrap(), int(1));
        let doubled = FlatTorusMetric::standard(
            square_ball().ball().scale(&int(2)).unwrap(),
        )
        .unwrap();
        assert_eq!(systole(&doubled).unwrap(), frac(1, 2));
        // A coarser lattice lengthens the shortest geodesic.
        let coarse = FlatTorusMetric::new(
            square_ball().ball().clone(),
            Lattice2::new(Point2::from_int(2, 0), Point2::from_int(0, 2)).unwrap(),
        )
        .unwrap();
        assert_eq!(systole(&coarse).unwrap(), int(2));
    }

    #[test]
    fn areas_of_reference_tori() {
        assert_eq!(ht_area(&square_ball()), int(2));
        assert_eq!(ht_area(&triangle_ball()), frac(3, 2));
        let doubled = FlatTorusMetric::standard(
            square_ball().ball().scale(&int(2)).unwrap(),
        )
        .unwrap();
        // The dual ball shrinks by the same factor, so q scales by 1/λ².
        assert_eq!(ht_area(&doubled), frac(1, 2));

        assert_eq!(bh_area(&square_ball()).unwrap(), frac(1, 4));
        assert_eq!(bh_area(&doubled).unwrap(), frac(1, 16));
        let cross = FlatTorusMetric::standard(poly(&[(1, 0), (0, 1), (-1, 0), (0, -1)]))
            .unwrap();
        assert_eq!(bh_area(&cross).unwrap(), frac(1, 2));
        assert_eq!(systole(&cross).unwrap(), int(1));
        assert!(matches!(bh_area(&triangle_ball()), Err(Error::NotReversible)));
    }

    #[test]
    fn sharp_equality_cases() {
        // Asymmetric sharp case: 3·sys² = 2q with q = 3/2.
        let report = systolic_check(&triangle_ball()).unwrap();
        assert_eq!(report.systole, int(1));
        assert_eq!(report.defect_general, int(0));
        assert!(report.general_is_equality());
        assert_eq!(report.defect_reversible, None);
        assert_eq!(report.zoll, Some(true));

        // Reversible sharp case: 2·sys² = q with q = 2.
        let report = systolic_check(&square_ball()).unwrap();
        assert_eq!(report.defect_reversible, Some(int(0)));
        assert_eq!(report.reversible_is_equality(), Some(true));
        assert_eq!(report.defect_general, int(1));
        assert!(report.general_holds() && !report.general_is_equality());
        assert_eq!(report.bh_area_over_pi, Some(frac(1, 4)));
        assert_eq!(report.zoll, Some(true));
    }

    #[test]
    fn verdicts_are_scale_invariant() {
        let scaled = FlatTorusMetric::standard(
            triangle_ball().ball().scale(&frac(3, 7)).unwrap(),
        )
        .unwrap();
        let report = systolic_check(&scaled).unwrap();
        assert_eq!(report.systole, frac(7, 3));
        assert!(report.general_is_equality());
        // Scaling broke the integer-vertex property, not the equality.
        assert_eq!(report.zoll, Some(false));
    }

    #[test]
    fn zoll_detection() {
        assert!(zoll_check(&square_ball()).unwrap());
        assert!(zoll_check(&triangle_ball()).unwrap());
        let scaled = FlatTorusMetric::standard(
            square_ball().ball().scale(&frac(3, 2)).unwrap(),
        )
        .unwrap();
        assert!(!zoll_check(&scaled).unwrap());
        // Integer but imprimitive vertices also fail.
        let wide =
            FlatTorusMetric::standard(poly(&[(2, 0), (1, 1), (-1, 1), (-2, 0), (-1, -1), (1, -1)]))
                .unwrap();
        assert!(!zoll_check(&wide).unwrap());
        let coarse = FlatTorusMetric::new(
            square_ball().ball().clone(),
            Lattice2::new(Point2::from_int(2, 0), Point2::from_int(0, 2)).unwrap(),
        )
        .unwrap();
        assert!(matches!(zoll_check(&coarse), Err(Error::UnsupportedLattice)));
        // Zoll balls realize the systole among vertex directions.
        assert!(systole(&square_ball()).unwrap() <= int(1));
    }

    #[test]
    fn systole_reaching_one_matches_dual_unavoidability() {
        for (ball, expect) in [
            (square_ball().ball().clone(), true),
            (triangle_ball().ball().clone(), true),
            (square_ball().ball().scale(&frac(1, 2)).unwrap(), true),
            (square_ball().ball().scale(&int(2)).unwrap(), false),
        ] {
            let m = FlatTorusMetric::standard(ball.clone()).unwrap();
            let sys = systole(&m).unwrap();
            let dual_unavoidable =
                is_unavoidable(&ball.polar_dual().unwrap()).unwrap().unavoidable;
            assert_eq!(sys >= int(1), expect, "ball {ball:?}");
            assert_eq!(dual_unavoidable, expect, "ball {ball:?}");
        }
    }

    #[test]
    fn reversible_area_comparison_is_the_mahler_bound() {
        // BH ≥ HT for reversible metrics over ℤ² clears to
        // area(ball)·area(ball*) ≤ π²; certify against the enclosure.
        for ball in [
            square_ball().ball().clone(),
            poly(&[(1, 0), (0, 1), (-1, 0), (0, -1)]),
            poly(&[(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]),
        ] {
            let product = ball.area() * ball.polar_dual().unwrap().area();
            assert!(product <= pi_lo() * pi_lo());
        }
    }

    #[test]
    fn metric_requires_interior_origin() {
        let shifted = poly(&[(0, 0), (1, 0), (0, 1)]);
        assert!(matches!(
            FlatTorusMetric::standard(shifted),
            Err(Error::OriginNotInterior)
        ));
    }
}
