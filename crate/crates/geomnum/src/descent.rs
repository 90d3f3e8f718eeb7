//! Vertex-sliding descent: the algorithmic proof that an unavoidable
//! planar body has area at least 3/2.
//!
//! A non-integer vertex of an unavoidable polygon can slide along a
//! support line without increasing the area, and exact arithmetic finds
//! the first moment the slide would break unavoidability — either two
//! vertices merge or a new integer line starts supporting the moving
//! vertex.  Each such step strictly decreases the *type* of the polygon
//! (vertex count, non-integer vertex count, maximal non-integer weight)
//! in a well-founded order, so the process reaches an integer polygon,
//! whose area is at least 3/2 by a lattice argument.  Every intermediate
//! quantity is a rational number and every comparison is exact: the chain
//! of certificates is a machine-checked proof for the given input.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use crate::geom::{cross, Containment, ConvexPolygon, Point2};
use crate::lattice::{is_unavoidable, lattice_points, vertex_weight, IntegerLine};
use crate::scalar::{self, Scalar};
use crate::{Error, Result};

/// The type `(n, m, k)` of an unavoidable polygon: vertex count,
/// non-integer vertex count, and the maximal weight among non-integer
/// vertices (0 when all vertices are integer).
///
/// Types are ordered lexicographically on `(n, m, −k)`; descent steps
/// strictly decrease in this order, which is well-founded because `k` is
/// bounded by 1 on unavoidable polygons.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BodyType {
    pub n: usize,
    pub m: usize,
    pub k: usize,
}

impl PartialOrd for BodyType {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BodyType {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.m, other.k).cmp(&(other.n, other.m, self.k))
    }
}

impl std::fmt::Display for BodyType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.n, self.m, self.k)
    }
}

/// Whether a sliding vertex starts with weight 0 or weight 1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DeformationKind {
    Weight0,
    Weight1,
}

/// A vertex slide that keeps the polygon supported and the area
/// non-increasing: the data `(x₀, v)` of one descent move.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VirtualDeformation {
    /// Index of the sliding vertex in the canonical vertex order.
    pub vertex_index: usize,
    /// Primitive direction of the slide; the line through the vertex with
    /// this direction supports the polygon (for weight 1 it is the unique
    /// supporting integer line there).
    pub direction: Point2,
    /// Exact derivative of the area in slide time; never positive.
    pub slope: Scalar,
    pub kind: DeformationKind,
}

/// What ends a slide.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EventKind {
    /// The moving vertex became collinear with neighbors at `τ₊`.
    VertexMerge,
    /// An integer line started supporting the moving vertex.
    WeightIncrease,
}

/// One executed slide with its exact bookkeeping.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeformationStep {
    pub start: ConvexPolygon,
    pub vd: VirtualDeformation,
    /// First time the vertex structure degenerates; `None` means never.
    pub tau_plus: Option<Scalar>,
    /// First time the origin reaches a moving edge; `None` means never.
    pub t_origin: Option<Scalar>,
    /// The executed slide time: the supremum of times up to which the
    /// deformed polygon stays unavoidable with unchanged weight.
    pub t_stop: Scalar,
    pub event: EventKind,
    pub end: ConvexPolygon,
}

/// A complete descent: the chain of steps from the input down to an
/// integer polygon, with exact areas throughout.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DescentCertificate {
    pub steps: Vec<DeformationStep>,
    /// The integer-vertexed unavoidable polygon the descent reaches.
    pub terminal: ConvexPolygon,
    pub terminal_area: Scalar,
    /// True when the terminal is a basic triangle and no step changed the
    /// area: the input itself realizes the minimum 3/2.
    pub is_minimal: bool,
    pub strategy_log: Vec<String>,
}

/// Default step allowance for a starting type `(n, m, _)`: generous,
/// since the strict type decrease bounds every descent far below it.
pub fn default_step_budget(t: BodyType) -> usize {
    16 * (t.n + t.m + 1)
}

fn ensure_unavoidable(p: &ConvexPolygon) -> Result<()> {
    if is_unavoidable(p)?.unavoidable {
        Ok(())
    } else {
        Err(Error::NotUnavoidable)
    }
}

/// The exact type of an unavoidable polygon.
pub fn body_type(p: &ConvexPolygon) -> Result<BodyType> {
    ensure_unavoidable(p)?;
    let n = p.vertex_count();
    let mut m = 0;
    let mut k = 0;
    for i in 0..n {
        if !p.vertex(i).is_integer() {
            m += 1;
            k = k.max(vertex_weight(p, i)?.0);
        }
    }
    Ok(BodyType { n, m, k })
}

/// All slides available on an unavoidable polygon: one per non-integer
/// vertex.  Empty exactly when the polygon has integer vertices.
///
/// A weight-0 vertex slides along its forward edge (the two chord-ward
/// edge directions always tie in slope, and that slope is strictly
/// negative); a weight-1 vertex slides along its unique supporting
/// integer line, oriented so the area does not grow.
pub fn virtual_deformations(p: &ConvexPolygon) -> Result<Vec<VirtualDeformation>> {
    ensure_unavoidable(p)?;
    let n = p.vertex_count();
    let mut out = Vec::new();
    for i in 0..n {
        let x0 = p.vertex(i);
        if x0.is_integer() {
            continue;
        }
        let prev = p.vertex(i + n - 1);
        let next = p.vertex(i + 1);
        let chord = next.sub(prev);
        let (weight, lines) = vertex_weight(p, i)?;
        let vd = match weight {
            0 => {
                let v = next.sub(x0).primitive_direction();
                let slope = cross(&v, &chord) / scalar::int(2);
                debug_assert!(slope.is_negative());
                VirtualDeformation {
                    vertex_index: i,
                    direction: v,
                    slope,
                    kind: DeformationKind::Weight0,
                }
            }
            1 => {
                let w = lines[0];
                let v = Point2::from_int(w.n, -w.m).primitive_direction();
                let slope = cross(&v, &chord) / scalar::int(2);
                let (v, slope) = if slope.is_positive() {
                    (v.neg(), -slope)
                } else if slope.is_zero() {
                    (orient_flat_slide(p, i, v), slope)
                } else {
                    (v, slope)
                };
                VirtualDeformation {
                    vertex_index: i,
                    direction: v,
                    slope,
                    kind: DeformationKind::Weight1,
                }
            }
            w => {
                return Err(Error::CertificateInvalid(format!(
                    "non-integer vertex {} of an unavoidable polygon has weight {}",
                    i, w
                )))
            }
        };
        out.push(vd);
    }
    Ok(out)
}

/// Orientation of a slope-0 slide (integer line parallel to the chord):
/// prefer the side where the vertex structure eventually degenerates, so
/// the step terminates by merge; fall back to the lexicographically
/// positive direction when both or neither side degenerates.
fn orient_flat_slide(p: &ConvexPolygon, i: usize, v: Point2) -> Point2 {
    let fwd = tau_plus(p, i, &v).is_some();
    let bwd = tau_plus(p, i, &v.neg()).is_some();
    match (fwd, bwd) {
        (true, false) => v,
        (false, true) => v.neg(),
        _ => {
            if v.lex_cmp(&v.neg()) == std::cmp::Ordering::Greater {
                v
            } else {
                v.neg()
            }
        }
    }
}

/// Least positive root of `a + b·t`; `None` when there is none.
fn positive_root(a: &Scalar, b: &Scalar) -> Option<Scalar> {
    if b.is_zero() {
        return None;
    }
    let t = -(a / b);
    if t.is_positive() {
        Some(t)
    } else {
        None
    }
}

fn min_opt(a: Option<Scalar>, b: Option<Scalar>) -> Option<Scalar> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// First positive time the moving vertex becomes collinear with a
/// neighbor pair, collapsing a vertex of the hull; `None` if never.
fn tau_plus(p: &ConvexPolygon, i: usize, v: &Point2) -> Option<Scalar> {
    let n = p.vertex_count();
    let x0 = p.vertex(i);
    let prev = p.vertex(i + n - 1);
    let next = p.vertex(i + 1);
    let prev2 = p.vertex(i + 2 * n - 2);
    let next2 = p.vertex(i + 2);
    // x(t) on the line through (a, b): cross(b − a, x₀ − a) + t·cross(b − a, v).
    let mut best = None;
    for (a, b) in [(prev, next), (prev2, prev), (next, next2)] {
        let d = b.sub(a);
        let c0 = cross(&d, &x0.sub(a));
        let c1 = cross(&d, v);
        debug_assert!(!c0.is_zero());
        best = min_opt(best, positive_root(&c0, &c1));
    }
    best
}

/// First positive time the origin reaches one of the two moving edges:
/// the half-plane constraints of edges `(prev, x(t))` and `(x(t), next)`
/// are affine in `t`, and the origin sits strictly inside both at `t = 0`.
fn t_origin(p: &ConvexPolygon, i: usize, v: &Point2) -> Option<Scalar> {
    let n = p.vertex_count();
    let x0 = p.vertex(i);
    let prev = p.vertex(i + n - 1);
    let next = p.vertex(i + 1);
    // Origin strictly inside relative to the directed edge (a → b) means
    // cross(a, b) > 0; both moving constraints are affine in t.  A root is
    // a genuine contact only if the origin then lies on the closed edge:
    // when the moving vertex collides with a neighbor, the collapsing
    // edge's cross vanishes with the origin nowhere near it.
    let mut best = None;
    for (c0, c1, fixed) in [
        (cross(prev, x0), cross(prev, v), prev),
        (cross(x0, next), cross(v, next), next),
    ] {
        let Some(t) = positive_root(&c0, &c1) else { continue };
        let x_t = x0.add(&v.scale(&t));
        if !x_t.dot(fixed).is_positive() {
            best = min_opt(best, Some(t));
        }
    }
    best
}

/// Clip a vertex cycle by the half-plane `f ≥ 0` with exact crossings.
fn clip_halfplane(
    pts: &[Point2],
    f: impl Fn(&Point2) -> Scalar,
) -> Vec<Point2> {
    let mut out = Vec::new();
    for (j, s) in pts.iter().enumerate() {
        let e = &pts[(j + 1) % pts.len()];
        let fs = f(s);
        let fe = f(e);
        if !fs.is_negative() {
            out.push(s.clone());
        }
        if (fs.is_negative() && fe.is_positive()) || (fs.is_positive() && fe.is_negative()) {
            let t = &fs / (&fs - &fe);
            out.push(s.add(&e.sub(s).scale(&t)));
        }
    }
    out
}

/// `P₀` restricted to both moving half-planes at time `h`: exactly the
/// points that belong to `P_s` for every `s ∈ [0, h]`, because each
/// moving constraint is affine in `s`.
fn restricted_polygon(p: &ConvexPolygon, i: usize, v: &Point2, h: &Scalar) -> Result<ConvexPolygon> {
    let n = p.vertex_count();
    let x_h = p.vertex(i).add(&v.scale(h));
    let prev = p.vertex(i + n - 1).clone();
    let next = p.vertex(i + 1).clone();
    let a = clip_halfplane(p.vertices(), |y| cross(&x_h.sub(&prev), &y.sub(&prev)));
    let b = clip_halfplane(&a, |y| cross(&next.sub(&x_h), &y.sub(&x_h)));
    ConvexPolygon::convex_hull(b)
}

/// The first covector event up to horizon `h`, if any: the minimal
/// `t(w) = (1 − w·x₀)/(w·v)` over integer lines that currently cross the
/// polygon and would stop meeting it at `t(w)`.
///
/// Completeness: an event line with `t(w) ≤ h` supports `P_{t(w)}`, so its
/// covector lies in the polar of `P_{t(w)} ⊇ restricted_polygon(…, h)`,
/// whose integer points are enumerated exactly.
fn first_event_up_to(
    p: &ConvexPolygon,
    i: usize,
    v: &Point2,
    h: &Scalar,
) -> Result<Option<(Scalar, IntegerLine)>> {
    let x0 = p.vertex(i);
    let q = restricted_polygon(p, i, v, h)?;
    let polar = q.polar_dual()?;
    let one = Scalar::one();
    let mut best: Option<(Scalar, IntegerLine)> = None;
    for (wm, wn) in lattice_points(&polar, Containment::Closed)? {
        if (wm, wn) == (0, 0) {
            continue;
        }
        let w = IntegerLine::new(wm, wn);
        let wc = w.covector();
        // Avoidance can only be lost through a line with every fixed
        // vertex strictly below it (the origin pins the other side).
        let fixed_below = (0..p.vertex_count())
            .filter(|&j| j != i)
            .all(|j| wc.pair(p.vertex(j)) < one);
        if !fixed_below {
            continue;
        }
        let wv = wc.pair(v);
        if wv.is_zero() {
            continue;
        }
        let wx0 = wc.pair(x0);
        if wx0 == one {
            continue;
        }
        let t = (&one - &wx0) / &wv;
        if !t.is_positive() || &t > h {
            continue;
        }
        debug_assert!(wx0 > one && wv.is_negative());
        if best.as_ref().map_or(true, |(bt, bw)| (&t, &w) < (bt, bw)) {
            best = Some((t, w));
        }
    }
    Ok(best)
}

/// Iteration cap for the geometric horizon ladder; reaching it means a
/// broken invariant, not a hard input.
const LADDER_CAP: u32 = 62;

/// Execute one slide exactly: find `τ₊`, the origin time, and the first
/// event, then build the deformed polygon at the stopping time.
pub fn deformation_step(p: &ConvexPolygon, vd: &VirtualDeformation) -> Result<DeformationStep> {
    ensure_unavoidable(p)?;
    let i = vd.vertex_index;
    if i >= p.vertex_count() || p.vertex(i).is_integer() || vd.direction.is_origin() {
        return Err(Error::CertificateInvalid(
            "deformation does not match a non-integer vertex".into(),
        ));
    }
    let start_type = body_type(p)?;
    let v = &vd.direction;
    let tp = tau_plus(p, i, v);
    let to = t_origin(p, i, v);

    let found = match (&tp, &to) {
        // The vertex structure degenerates before the origin is at risk:
        // one exact trial at τ₊ covers every possible event.
        (Some(tp_val), None) => first_event_up_to(p, i, v, tp_val)?,
        (Some(tp_val), Some(to_val)) if tp_val < to_val => {
            first_event_up_to(p, i, v, tp_val)?
        }
        // Otherwise grow the horizon geometrically toward the origin
        // time; events cannot accumulate strictly below it.
        (_, Some(to_val)) => {
            let mut found = None;
            for k in 1..=LADDER_CAP {
                let h = to_val * (Scalar::one() - scalar::frac(1, 1i64 << k));
                found = first_event_up_to(p, i, v, &h)?;
                if found.is_some() {
                    break;
                }
            }
            match found {
                Some(f) => Some(f),
                None => return Err(Error::EnumerationFailed),
            }
        }
        (None, None) => return Err(Error::EnumerationFailed),
    };

    // A slide ending exactly at τ₊ with a simultaneous covector event
    // still counts as a weight increase; a merge needs τ₊ strictly first.
    let (t_stop, event) = match (found, &tp) {
        (Some((t, _)), _) => (t, EventKind::WeightIncrease),
        (None, Some(tp_val)) => (tp_val.clone(), EventKind::VertexMerge),
        (None, None) => return Err(Error::EnumerationFailed),
    };
    debug_assert!(t_stop.is_positive());

    let mut moved: Vec<Point2> = p.vertices().to_vec();
    moved[i] = p.vertex(i).add(&v.scale(&t_stop));
    let end = ConvexPolygon::convex_hull(moved)?;

    let step = DeformationStep {
        start: p.clone(),
        vd: vd.clone(),
        tau_plus: tp,
        t_origin: to,
        t_stop,
        event,
        end,
    };
    let end_type = body_type(&step.end)?;
    if end_type >= start_type {
        return Err(Error::CertificateInvalid(format!(
            "step does not decrease the type: {} to {}",
            start_type, end_type
        )));
    }
    if step.end.area() > step.start.area() {
        return Err(Error::CertificateInvalid("step increased the area".into()));
    }
    Ok(step)
}

/// The slides the strategy is allowed to take: all weight-1 slides when
/// any exist, otherwise all weight-0 slides.  Restricting to this class
/// is what makes the type strictly decrease: sliding a weight-0 vertex
/// while some other vertex has weight 1 would leave the type unchanged.
fn preferred_class(vds: Vec<VirtualDeformation>) -> Vec<VirtualDeformation> {
    let has_weight1 = vds.iter().any(|vd| vd.kind == DeformationKind::Weight1);
    if has_weight1 {
        vds.into_iter()
            .filter(|vd| vd.kind == DeformationKind::Weight1)
            .collect()
    } else {
        vds
    }
}

fn finish_certificate(
    steps: Vec<DeformationStep>,
    terminal: ConvexPolygon,
    mut strategy_log: Vec<String>,
) -> Result<DescentCertificate> {
    if terminal.vertices().iter().any(|v| !v.is_integer()) {
        return Err(Error::CertificateInvalid(
            "terminal polygon has a non-integer vertex".into(),
        ));
    }
    ensure_unavoidable(&terminal)?;
    let terminal_area = terminal.area();
    if terminal_area < scalar::frac(3, 2) {
        return Err(Error::CertificateInvalid(
            "terminal area below 3/2 contradicts the lattice bound".into(),
        ));
    }
    let is_minimal =
        is_basic_triangle(&terminal) && steps.iter().all(|s| s.vd.slope.is_zero());
    strategy_log.push(format!(
        "terminal after {} step(s), area {}",
        steps.len(),
        scalar::to_string(&terminal_area)
    ));
    Ok(DescentCertificate {
        steps,
        terminal,
        terminal_area,
        is_minimal,
        strategy_log,
    })
}

/// Run the descent with the deterministic strategy: among the preferred
/// slides, take the one at the smallest vertex index.
pub fn descend(p: &ConvexPolygon, step_budget: Option<usize>) -> Result<DescentCertificate> {
    ensure_unavoidable(p)?;
    let budget = step_budget.unwrap_or(default_step_budget(body_type(p)?));
    let mut current = p.clone();
    let mut steps = Vec::new();
    let mut log = vec!["deterministic strategy: weight-1 first, smallest vertex index".into()];
    loop {
        let vds = preferred_class(virtual_deformations(&current)?);
        let Some(vd) = vds.first() else {
            return finish_certificate(steps, current, log);
        };
        if steps.len() >= budget {
            return Err(Error::StepBudgetExceeded);
        }
        log.push(format!(
            "step {}: vertex {} ({:?}), {} candidate slide(s)",
            steps.len() + 1,
            vd.vertex_index,
            vd.kind,
            vds.len()
        ));
        let step = deformation_step(&current, vd)?;
        current = step.end.clone();
        steps.push(step);
    }
}

/// Certificate cap for exhaustive exploration.
const ALL_PATHS_CAP: usize = 4096;

/// Explore every preferred slide at every stage and return one
/// certificate per path, memoized on intermediate polygons.  Used to
/// cross-validate the deterministic strategy: all paths must agree on the
/// terminal bounds.
pub fn descend_all_paths(
    p: &ConvexPolygon,
    step_budget: Option<usize>,
) -> Result<Vec<DescentCertificate>> {
    ensure_unavoidable(p)?;
    let budget = step_budget.unwrap_or(default_step_budget(body_type(p)?));
    let mut memo: HashMap<String, Vec<DescentCertificate>> = HashMap::new();
    let mut total = 0usize;
    explore(p, budget, &mut memo, &mut total)
}

fn explore(
    p: &ConvexPolygon,
    budget: usize,
    memo: &mut HashMap<String, Vec<DescentCertificate>>,
    total: &mut usize,
) -> Result<Vec<DescentCertificate>> {
    let key = format!("{:?}", p.vertices());
    if let Some(cached) = memo.get(&key) {
        return Ok(cached.clone());
    }
    let vds = preferred_class(virtual_deformations(p)?);
    let certs = if vds.is_empty() {
        *total += 1;
        if *total > ALL_PATHS_CAP {
            return Err(Error::EnumerationFailed);
        }
        vec![finish_certificate(
            Vec::new(),
            p.clone(),
            vec!["all-paths strategy".into()],
        )?]
    } else {
        if budget == 0 {
            return Err(Error::StepBudgetExceeded);
        }
        let mut certs = Vec::new();
        for vd in &vds {
            let step = deformation_step(p, vd)?;
            for tail in explore(&step.end, budget - 1, memo, total)? {
                let mut steps = vec![step.clone()];
                steps.extend(tail.steps.clone());
                let mut log = vec![format!(
                    "all-paths branch: vertex {} of {} candidate(s)",
                    vd.vertex_index,
                    vds.len()
                )];
                log.extend(tail.strategy_log.clone());
                certs.push(DescentCertificate {
                    steps,
                    terminal: tail.terminal,
                    terminal_area: tail.terminal_area,
                    is_minimal: tail.is_minimal,
                    strategy_log: log,
                });
                if certs.len() > ALL_PATHS_CAP {
                    return Err(Error::EnumerationFailed);
                }
            }
        }
        certs
    };
    memo.insert(key, certs.clone());
    Ok(certs)
}

/// Is `p` a basic triangle: integer vertices, origin strictly inside,
/// area exactly 3/2, and every vertex pair spanning determinant ±1?
/// These are precisely the unimodular images of the triangle
/// `(1,0), (0,1), (−1,−1)` — the minimizers of area among unavoidable
/// bodies.
pub fn is_basic_triangle(p: &ConvexPolygon) -> bool {
    if p.vertex_count() != 3
        || !p.origin_interior()
        || p.vertices().iter().any(|v| !v.is_integer())
        || p.area() != scalar::frac(3, 2)
    {
        return false;
    }
    let one = Scalar::one();
    (0..3).all(|i| {
        let d = cross(p.vertex(i), p.vertex(i + 1));
        d == one || d == -one.clone()
    })
}
