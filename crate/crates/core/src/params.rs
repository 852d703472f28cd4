//! Parameter-space calculus for G(5,2): chart parameters of the main
//! stratum, the cubic surface 𝓕 they sweep, its blowup 𝓕̃ at
//! ((1:1),(1:1),(1:1)) (the universal space of parameters), transitions
//! between charts together with their cocycle law, the virtual parameter
//! families of the big strata, and the realization inside (CP¹)⁵.

use crate::exact::GaussianRational;
use crate::plucker::{all_pairs, plucker_coordinates, Pair, PlaneMatrix, PluckerVector};
use crate::polytope::{classify, polytope_of, PolytopeType};
use crate::strata::AdmissibleSet;
use crate::symmetry::{act, Permutation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParamsError {
    #[error("the point does not lie in the main stratum")]
    NotMainStratum,
    #[error("the plane does not belong to the requested chart")]
    NotInChart,
    #[error("the parameter triple is degenerate for this operation")]
    DegenerateTriple,
    #[error("the triple violates the cubic relation")]
    CubicViolated,
    #[error("lifting the blowup center requires a direction")]
    CenterWithoutDirection,
    #[error("no tabulated virtual family for this stratum/chart")]
    Unsupported,
}

// ---------------------------------------------------------------------------
// Projective points and parameter triples.

/// A point (a : b) of CP¹ with exact Gaussian-rational coordinates.
#[derive(Clone, Debug)]
pub struct ProjectivePoint1 {
    a: GaussianRational,
    b: GaussianRational,
}

impl ProjectivePoint1 {
    pub fn new(a: GaussianRational, b: GaussianRational) -> Self {
        assert!(
            !(a.is_zero() && b.is_zero()),
            "projective coordinates must not both vanish"
        );
        ProjectivePoint1 { a, b }
    }

    pub fn from_int(a: i64, b: i64) -> Self {
        Self::new(GaussianRational::from_int(a), GaussianRational::from_int(b))
    }

    pub fn a(&self) -> &GaussianRational {
        &self.a
    }

    pub fn b(&self) -> &GaussianRational {
        &self.b
    }

    pub fn zero_one() -> Self {
        Self::from_int(0, 1)
    }

    pub fn one_zero() -> Self {
        Self::from_int(1, 0)
    }

    pub fn one_one() -> Self {
        Self::from_int(1, 1)
    }

    /// The point (b : a).
    pub fn reversed(&self) -> Self {
        Self::new(self.b.clone(), self.a.clone())
    }

    pub fn is_zero_one(&self) -> bool {
        self.a.is_zero()
    }

    pub fn is_one_zero(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_one_one(&self) -> bool {
        self.a == self.b
    }

    /// Membership in A = {(0:1), (1:0), (1:1)}.
    pub fn is_in_a(&self) -> bool {
        self.is_zero_one() || self.is_one_zero() || self.is_one_one()
    }
}

impl PartialEq for ProjectivePoint1 {
    fn eq(&self, other: &Self) -> bool {
        &self.a * &other.b == &self.b * &other.a
    }
}

impl Eq for ProjectivePoint1 {}

impl std::fmt::Display for ProjectivePoint1 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({} : {})", self.a, self.b)
    }
}

impl Serialize for ProjectivePoint1 {
    /// JSON shape: a two-element array of coordinate strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(2))?;
        seq.serialize_element(&self.a.to_string())?;
        seq.serialize_element(&self.b.to_string())?;
        seq.end()
    }
}

/// A point of the cubic surface 𝓕 ⊂ CP¹×CP¹×CP¹: the relation
/// c₁c₂′c₃ = c₁′c₂c₃′ is enforced at construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamTriple {
    pub c1: ProjectivePoint1,
    pub c2: ProjectivePoint1,
    pub c3: ProjectivePoint1,
}

impl ParamTriple {
    pub fn new(
        c1: ProjectivePoint1,
        c2: ProjectivePoint1,
        c3: ProjectivePoint1,
    ) -> Result<Self, ParamsError> {
        let lhs = &(&c1.a * &c2.b) * &c3.a;
        let rhs = &(&c1.b * &c2.a) * &c3.b;
        if lhs == rhs {
            Ok(ParamTriple { c1, c2, c3 })
        } else {
            Err(ParamsError::CubicViolated)
        }
    }

    pub fn center() -> Self {
        ParamTriple {
            c1: ProjectivePoint1::one_one(),
            c2: ProjectivePoint1::one_one(),
            c3: ProjectivePoint1::one_one(),
        }
    }

    pub fn is_center(&self) -> bool {
        self.c1.is_one_one() && self.c2.is_one_one() && self.c3.is_one_one()
    }

    /// True iff the triple corresponds to a main-stratum orbit: every
    /// homogeneous coordinate nonzero and cᵢ ≠ cᵢ′.
    pub fn is_main(&self) -> bool {
        for c in [&self.c1, &self.c2, &self.c3] {
            if c.is_zero_one() || c.is_one_zero() || c.is_one_one() {
                return false;
            }
        }
        true
    }
}

impl std::fmt::Display for ParamTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.c1, self.c2, self.c3)
    }
}

/// A point of the universal space of parameters 𝓕̃ (the blowup of 𝓕 at the
/// center): either an honest cubic point away from the center, or a point
/// of the exceptional divisor CP¹.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum UniversalParamPoint {
    Regular(ParamTriple),
    Divisor(ProjectivePoint1),
}

impl UniversalParamPoint {
    pub fn regular(t: ParamTriple) -> Self {
        assert!(!t.is_center(), "the center lifts only to divisor points");
        UniversalParamPoint::Regular(t)
    }
}

impl std::fmt::Display for UniversalParamPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            UniversalParamPoint::Regular(t) => write!(f, "{t}"),
            UniversalParamPoint::Divisor(d) => write!(f, "[E: {d}]"),
        }
    }
}

// ---------------------------------------------------------------------------
// Charts and chart parameters.

/// The charts M_ij of G(5,2) are indexed by the pairs 1 ≤ i < j ≤ 5.
pub type Chart = Pair;

/// The three row indices of a chart's non-identity rows, in order.
pub fn chart_free_rows(chart: Chart) -> [usize; 3] {
    let (i, j) = chart;
    assert!(1 <= i && i < j && j <= 5, "chart must be a pair in 1..=5");
    let mut rows = [0usize; 3];
    let mut t = 0;
    for r in 1..=5 {
        if r != i && r != j {
            rows[t] = r;
            t += 1;
        }
    }
    rows
}

/// The plane with identity rows at the chart pair and the six coordinates
/// z₁…z₆ filling the remaining rows as (z₁,z₄), (z₂,z₅), (z₃,z₆).
pub fn plane_from_chart(chart: Chart, z: &[GaussianRational; 6]) -> PlaneMatrix {
    let free = chart_free_rows(chart);
    let mut rows =
        vec![[GaussianRational::zero(), GaussianRational::zero()]; 5];
    rows[chart.0 - 1] = [GaussianRational::from_int(1), GaussianRational::zero()];
    rows[chart.1 - 1] = [GaussianRational::zero(), GaussianRational::from_int(1)];
    for (t, &r) in free.iter().enumerate() {
        rows[r - 1] = [z[t].clone(), z[t + 3].clone()];
    }
    PlaneMatrix::new(rows).expect("chart planes contain an identity block")
}

/// Normalizes a plane to a chart: returns the six coordinates z₁…z₆, or an
/// error if the chart minor vanishes.
pub fn chart_coords_of_plane(
    chart: Chart,
    m: &PlaneMatrix,
) -> Result<[GaussianRational; 6], ParamsError> {
    assert_eq!(m.n(), 5);
    let rows = m.rows();
    let (i, j) = chart;
    // The 2×2 block of the chart rows must be invertible.
    let (a, b) = (&rows[i - 1][0], &rows[i - 1][1]);
    let (c, d) = (&rows[j - 1][0], &rows[j - 1][1]);
    let det = &(a * d) - &(b * c);
    if det.is_zero() {
        return Err(ParamsError::NotInChart);
    }
    // Right-multiply by the inverse of [[a,b],[c,d]].
    let inv = [
        [d / &det, -(b / &det)],
        [-(c / &det), a / &det],
    ];
    let free = chart_free_rows(chart);
    let mut z: [GaussianRational; 6] = core::array::from_fn(|_| GaussianRational::zero());
    for (t, &r) in free.iter().enumerate() {
        let (x, y) = (&rows[r - 1][0], &rows[r - 1][1]);
        z[t] = &(x * &inv[0][0]) + &(y * &inv[1][0]);
        z[t + 3] = &(x * &inv[0][1]) + &(y * &inv[1][1]);
    }
    Ok(z)
}

/// The chart parameters of a main-stratum point with chart coordinates z:
/// (c₁:c₁′) = (z₁z₅ : z₂z₄), (c₂:c₂′) = (z₁z₆ : z₃z₄), (c₃:c₃′) = (z₂z₆ : z₃z₅).
pub fn chart_params(chart: Chart, z: &[GaussianRational; 6]) -> Result<ParamTriple, ParamsError> {
    let _ = chart_free_rows(chart);
    let pairs = [
        (&z[0] * &z[4], &z[1] * &z[3]),
        (&z[0] * &z[5], &z[2] * &z[3]),
        (&z[1] * &z[5], &z[2] * &z[4]),
    ];
    let mut coords = Vec::with_capacity(3);
    for (num, den) in pairs {
        if num.is_zero() || den.is_zero() || num == den {
            return Err(ParamsError::NotMainStratum);
        }
        coords.push(ProjectivePoint1::new(num, den));
    }
    let c3 = coords.pop().unwrap();
    let c2 = coords.pop().unwrap();
    let c1 = coords.pop().unwrap();
    ParamTriple::new(c1, c2, c3)
}

/// The chart parameters of a main-stratum plane, in the given chart.
pub fn chart_params_of_plane(chart: Chart, m: &PlaneMatrix) -> Result<ParamTriple, ParamsError> {
    chart_params(chart, &chart_coords_of_plane(chart, m)?)
}

/// True iff every Plücker coordinate of the plane is nonzero.
pub fn is_main_stratum(p: &PluckerVector) -> bool {
    p.coords().len() == all_pairs(p.n()).len()
}

/// A deterministic main-stratum plane with the given chart parameters:
/// the normalization z₁ = z₄ = 1 gives z = (1, c₁′, c₂′, 1, c₁, c₂).
pub fn representative_of_params(chart: Chart, t: &ParamTriple) -> Result<PlaneMatrix, ParamsError> {
    if !t.is_main() {
        return Err(ParamsError::DegenerateTriple);
    }
    let z = [
        GaussianRational::from_int(1),
        t.c1.b().clone(),
        t.c2.b().clone(),
        GaussianRational::from_int(1),
        t.c1.a().clone(),
        t.c2.a().clone(),
    ];
    let m = plane_from_chart(chart, &z);
    debug_assert!(is_main_stratum(&plucker_coordinates(&m)));
    Ok(m)
}

/// The transition map between the parameter spaces of two charts, computed
/// by round-tripping through a representative plane.
pub fn transition(a: Chart, b: Chart, t: &ParamTriple) -> Result<ParamTriple, ParamsError> {
    if a == b {
        if !t.is_main() {
            return Err(ParamsError::DegenerateTriple);
        }
        return Ok(t.clone());
    }
    let m = representative_of_params(a, t)?;
    chart_params_of_plane(b, &m).map_err(|_| ParamsError::DegenerateTriple)
}

/// The closed formula for f₁₂,₁₃ on main-stratum triples:
/// ((c₁:c₁′),(c₂:c₂′),(c₃:c₃′)) ↦
/// ((c₁:c₁−c₁′), (c₂:c₂−c₂′), ((c₁−c₁′)c₂′c₃ : c₁′(c₂−c₂′)c₃′)).
pub fn transition_12_13_closed(t: &ParamTriple) -> Result<ParamTriple, ParamsError> {
    if !t.is_main() {
        return Err(ParamsError::DegenerateTriple);
    }
    Ok(eq_1213(t).expect("main triples stay inside the cubic"))
}

/// Eq. (1213) applied formally; `None` when the third slot degenerates to
/// (0 : 0), which happens only on two boundary curves of the cubic.
fn eq_1213(t: &ParamTriple) -> Option<ParamTriple> {
    let d1 = t.c1.a() - t.c1.b();
    let d2 = t.c2.a() - t.c2.b();
    let third_a = &(&d1 * t.c2.b()) * t.c3.a();
    let third_b = &(t.c1.b() * &d2) * t.c3.b();
    if third_a.is_zero() && third_b.is_zero() {
        return None;
    }
    Some(
        ParamTriple::new(
            ProjectivePoint1::new(t.c1.a().clone(), d1),
            ProjectivePoint1::new(t.c2.a().clone(), d2),
            ProjectivePoint1::new(third_a, third_b),
        )
        .expect("Eq. (1213) preserves the cubic"),
    )
}

// ---------------------------------------------------------------------------
// The blowup 𝓕̃ and the extended transition.

/// Lifts a cubic point to the blowup; the center needs a direction.
pub fn lift_to_blowup(t: &ParamTriple) -> Result<UniversalParamPoint, ParamsError> {
    if t.is_center() {
        Err(ParamsError::CenterWithoutDirection)
    } else {
        Ok(UniversalParamPoint::Regular(t.clone()))
    }
}

/// Lifts with an explicit exceptional direction, used for limits of paths
/// running into the center.
pub fn lift_with_direction(t: &ParamTriple, dir: ProjectivePoint1) -> UniversalParamPoint {
    if t.is_center() {
        UniversalParamPoint::Divisor(dir)
    } else {
        UniversalParamPoint::Regular(t.clone())
    }
}

/// The blowdown projection π : 𝓕̃ → 𝓕.
pub fn blowdown(u: &UniversalParamPoint) -> ParamTriple {
    match u {
        UniversalParamPoint::Regular(t) => t.clone(),
        UniversalParamPoint::Divisor(_) => ParamTriple::center(),
    }
}

/// The blowup direction (1 − c₁′/c₁ : 1 − c₂′/c₂) of a non-center point
/// with c₁, c₂ ≠ 0, as a projective point ((c₁−c₁′)c₂ : (c₂−c₂′)c₁).
pub fn blowup_direction(t: &ParamTriple) -> Option<ProjectivePoint1> {
    if t.c1.is_zero_one() || t.c2.is_zero_one() {
        return None;
    }
    let x1 = &(t.c1.a() - t.c1.b()) * t.c2.a();
    let x2 = &(t.c2.a() - t.c2.b()) * t.c1.a();
    if x1.is_zero() && x2.is_zero() {
        return None;
    }
    Some(ProjectivePoint1::new(x1, x2))
}

/// The extension f̃₁₂,₁₃ of the transition f₁₂,₁₃ to the whole universal
/// space of parameters.  It is an involution.
pub fn tilde_transition_12_13(u: &UniversalParamPoint) -> UniversalParamPoint {
    match u {
        // The exceptional divisor maps onto the boundary curve 1′2′.
        UniversalParamPoint::Divisor(d) => UniversalParamPoint::Regular(
            ParamTriple::new(
                ProjectivePoint1::one_zero(),
                ProjectivePoint1::one_zero(),
                d.clone(),
            )
            .expect("the 1'2' curve lies in the cubic"),
        ),
        UniversalParamPoint::Regular(t) => {
            // The boundary curve 1′2′ maps onto the divisor.
            if t.c1.is_one_zero() && t.c2.is_one_zero() {
                return UniversalParamPoint::Divisor(t.c3.clone());
            }
            if let Some(image) = eq_1213(t) {
                return UniversalParamPoint::regular(image);
            }
            // Continuous extensions where Eq. (1213) degenerates:
            // the curve 1′3 = ((1:0), (c₂:c₂′), (0:1)) ...
            if t.c1.is_one_zero() && t.c3.is_zero_one() {
                let img = ProjectivePoint1::new(
                    t.c2.a().clone(),
                    t.c2.a() - t.c2.b(),
                );
                return UniversalParamPoint::regular(
                    ParamTriple::new(ProjectivePoint1::one_one(), img.clone(), img)
                        .expect("the 1'3 extension lies in the cubic"),
                );
            }
            // ... and the curve 2′3′ = ((c₁:c₁′), (1:0), (1:0)).
            if t.c2.is_one_zero() && t.c3.is_one_zero() {
                let d1 = t.c1.a() - t.c1.b();
                return UniversalParamPoint::regular(
                    ParamTriple::new(
                        ProjectivePoint1::new(t.c1.a().clone(), d1.clone()),
                        ProjectivePoint1::one_one(),
                        ProjectivePoint1::new(d1, t.c1.a().clone()),
                    )
                    .expect("the 2'3' extension lies in the cubic"),
                );
            }
            unreachable!("Eq. (1213) degenerates only on the curves 1'2', 1'3, 2'3'")
        }
    }
}

// ---------------------------------------------------------------------------
// Virtual parameter families.

/// One slot of a parametrized curve in CP¹×CP¹×CP¹.
#[derive(Clone, Debug, PartialEq)]
pub enum Slot {
    Const(ProjectivePoint1),
    /// (c : c′)
    Param,
    /// (c′ : c)
    ParamRev,
}

impl Slot {
    fn eval(&self, c: &ProjectivePoint1) -> ProjectivePoint1 {
        match self {
            Slot::Const(p) => p.clone(),
            Slot::Param => c.clone(),
            Slot::ParamRev => c.reversed(),
        }
    }
}

/// The parameter domain of a curve family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveDomain {
    /// All of CP¹.
    Full,
    /// CP¹ with the three points of A removed.
    MinusA,
}

impl CurveDomain {
    fn admits(&self, c: &ProjectivePoint1) -> bool {
        match self {
            CurveDomain::Full => true,
            CurveDomain::MinusA => !c.is_in_a(),
        }
    }
}

/// The shape of a virtual parameter family inside 𝓕̃₁₂.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilyShape {
    /// A single point of the universal space.
    Point(UniversalParamPoint),
    /// c ↦ (slot₁(c), slot₂(c), slot₃(c)) over the domain.
    Curve { slots: [Slot; 3], domain: CurveDomain },
    /// c ↦ the exceptional-divisor point (c : c′) over the domain.
    DivisorCurve { domain: CurveDomain },
    /// The cubic points whose `free_slot`-th coordinate avoids A.
    CubicSlice { free_slot: usize },
    /// The open parameter space F of the main stratum.
    Main,
    Union(Vec<FamilyShape>),
}

/// The virtual space of parameters of a stratum in a chart.
#[derive(Clone, Debug)]
pub struct VirtualFamily {
    pub sigma: AdmissibleSet,
    pub chart: Chart,
    pub shape: FamilyShape,
}

impl FamilyShape {
    /// Exact membership of a universal parameter point in the family
    /// (curves are represented by their regular, non-center part).
    pub fn contains(&self, u: &UniversalParamPoint) -> bool {
        match self {
            FamilyShape::Point(p) => p == u,
            FamilyShape::DivisorCurve { domain } => match u {
                UniversalParamPoint::Divisor(d) => domain.admits(d),
                _ => false,
            },
            FamilyShape::Curve { slots, domain } => {
                let UniversalParamPoint::Regular(t) = u else {
                    return false;
                };
                let coords = [&t.c1, &t.c2, &t.c3];
                // Derive the parameter from the first non-constant slot.
                let mut c: Option<ProjectivePoint1> = None;
                for (slot, have) in slots.iter().zip(coords) {
                    let candidate = match slot {
                        Slot::Const(p) => {
                            if p != have {
                                return false;
                            }
                            continue;
                        }
                        Slot::Param => have.clone(),
                        Slot::ParamRev => have.reversed(),
                    };
                    match &c {
                        None => c = Some(candidate),
                        Some(prev) => {
                            if *prev != candidate {
                                return false;
                            }
                        }
                    }
                }
                match c {
                    Some(c) => domain.admits(&c),
                    None => true,
                }
            }
            FamilyShape::CubicSlice { free_slot } => {
                let UniversalParamPoint::Regular(t) = u else {
                    return false;
                };
                let coord = match free_slot {
                    1 => &t.c1,
                    2 => &t.c2,
                    3 => &t.c3,
                    _ => unreachable!("slots are 1..=3"),
                };
                !coord.is_in_a()
            }
            FamilyShape::Main => match u {
                UniversalParamPoint::Regular(t) => t.is_main(),
                _ => false,
            },
            FamilyShape::Union(parts) => parts.iter().any(|p| p.contains(u)),
        }
    }

    /// Deterministic samples from the family.  Curve samples avoid the
    /// points of A (hence also the blowup center) even on full domains.
    pub fn sample(&self, seed: u64, count: usize) -> Vec<UniversalParamPoint> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            match self {
                FamilyShape::Point(p) => out.push(p.clone()),
                FamilyShape::DivisorCurve { .. } => {
                    out.push(UniversalParamPoint::Divisor(random_param(&mut rng)));
                }
                FamilyShape::Curve { slots, .. } => {
                    let c = random_param(&mut rng);
                    let t = ParamTriple::new(
                        slots[0].eval(&c),
                        slots[1].eval(&c),
                        slots[2].eval(&c),
                    )
                    .expect("tabulated curves lie in the cubic");
                    if !t.is_center() {
                        out.push(UniversalParamPoint::Regular(t));
                    }
                }
                FamilyShape::CubicSlice { .. } | FamilyShape::Main => {
                    let t = random_main_triple(&mut rng);
                    out.push(UniversalParamPoint::Regular(t));
                }
                FamilyShape::Union(parts) => {
                    let part = &parts[rng.gen_range(0..parts.len())];
                    out.extend(part.sample(rng.gen(), 1));
                }
            }
        }
        out
    }
}

/// A random CP¹ point outside A, with small Gaussian-rational coordinates.
fn random_param(rng: &mut ChaCha8Rng) -> ProjectivePoint1 {
    loop {
        let re = rng.gen_range(-6i64..=6);
        let im = rng.gen_range(-2i64..=2);
        let z = GaussianRational::new(
            crate::exact::Rational::from_int(re),
            crate::exact::Rational::from_int(im),
        );
        if z.is_zero() || z == GaussianRational::from_int(1) {
            continue;
        }
        return ProjectivePoint1::new(z, GaussianRational::from_int(1));
    }
}

/// A random main-stratum parameter triple (all slots outside A, pairwise
/// constraints met, cubic satisfied by construction of the third slot).
pub fn random_main_triple(rng: &mut ChaCha8Rng) -> ParamTriple {
    loop {
        let c1 = random_param(rng);
        let c2 = random_param(rng);
        // The cubic forces (c₃ : c₃′) = (c₁′c₂ : c₁c₂′).
        let c3 = ProjectivePoint1::new(c1.b() * c2.a(), c1.a() * c2.b());
        if c3.is_in_a() {
            continue;
        }
        return ParamTriple::new(c1, c2, c3).expect("constructed on the cubic");
    }
}

/// Deterministic main-stratum triples for sampling-based verification.
pub fn sample_main_triples(seed: u64, count: usize) -> Vec<ParamTriple> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_main_triple(&mut rng)).collect()
}

/// The K9 curve table in the chart M₁₂, keyed by the missing pair.
fn k9_slots(missing: Pair) -> [Slot; 3] {
    use Slot::{Const, Param, ParamRev};
    let o = ProjectivePoint1::one_zero;
    let z = ProjectivePoint1::zero_one;
    let e = ProjectivePoint1::one_one;
    match missing {
        (2, 3) => [Const(z()), Const(z()), Param],
        (2, 4) => [Const(o()), Param, Const(z())],
        (2, 5) => [Param, Const(o()), Const(o())],
        (1, 3) => [Const(o()), Const(o()), Param],
        (1, 4) => [Const(z()), Param, Const(o())],
        (1, 5) => [Param, Const(z()), Const(z())],
        (3, 4) => [Const(e()), Param, Param],
        (3, 5) => [Param, Const(e()), ParamRev],
        (4, 5) => [Param, Param, Const(e())],
        _ => unreachable!("K9 with missing pair (1,2) is the divisor family"),
    }
}

/// The K8 point table in the chart M₁₂, keyed by the two missing pairs.
fn k8_point(missing: &BTreeSet<Pair>) -> UniversalParamPoint {
    let o = ProjectivePoint1::one_zero;
    let z = ProjectivePoint1::zero_one;
    let e = ProjectivePoint1::one_one;
    let key: Vec<Pair> = missing.iter().copied().collect();
    let triple = |a: ProjectivePoint1, b: ProjectivePoint1, c: ProjectivePoint1| {
        UniversalParamPoint::Regular(
            ParamTriple::new(a, b, c).expect("tabulated K8 points lie in the cubic"),
        )
    };
    match (key[0], key[1]) {
        ((1, 4), (2, 3)) => triple(z(), z(), o()),
        ((1, 3), (2, 4)) => triple(o(), o(), z()),
        ((1, 5), (2, 4)) => triple(o(), z(), z()),
        ((2, 3), (4, 5)) => triple(z(), z(), e()),
        ((2, 4), (3, 5)) => triple(o(), e(), z()),
        ((2, 5), (3, 4)) => triple(e(), o(), o()),
        ((1, 5), (2, 3)) => triple(z(), z(), z()),
        ((1, 3), (2, 5)) => triple(o(), o(), o()),
        ((1, 4), (2, 5)) => triple(z(), o(), o()),
        ((1, 3), (4, 5)) => triple(o(), o(), e()),
        ((1, 4), (3, 5)) => triple(z(), e(), o()),
        ((1, 5), (3, 4)) => triple(e(), z(), z()),
        ((1, 2), (3, 4)) => UniversalParamPoint::Divisor(z()),
        ((1, 2), (3, 5)) => UniversalParamPoint::Divisor(o()),
        ((1, 2), (4, 5)) => UniversalParamPoint::Divisor(e()),
        _ => unreachable!("every K8 stratum misses two disjoint pairs"),
    }
}

/// The virtual space of parameters of a stratum in the chart M₁₂ or M₁₃.
/// For M₁₃ the table is obtained from the M₁₂ table of the relabelled
/// stratum under the transposition (2 3).
pub fn virtual_space(sigma: &AdmissibleSet, chart: Chart) -> Result<VirtualFamily, ParamsError> {
    if sigma.n() != 5 {
        return Err(ParamsError::Unsupported);
    }
    let shape = match chart {
        (1, 2) => virtual_shape_12(sigma)?,
        (1, 3) => {
            let s = Permutation::transposition(5, 2, 3);
            virtual_shape_12(&act(&s, sigma))?
        }
        _ => return Err(ParamsError::Unsupported),
    };
    Ok(VirtualFamily {
        sigma: sigma.clone(),
        chart,
        shape,
    })
}

/// The distinguished pair {i, j} of a K_ij(7) or P_ij stratum: the two
/// singleton blocks of the K7 partition {i}{j}{k,l,m}, or the two-element
/// block of the prism partition {i,j}{k,l,m}.
fn apex_pair(sigma: &AdmissibleSet, ty: PolytopeType) -> Pair {
    let (_, blocks) = sigma.configuration();
    let members: Vec<usize> = if ty == PolytopeType::K7 {
        blocks
            .iter()
            .filter(|b| b.len() == 1)
            .flatten()
            .copied()
            .collect()
    } else {
        blocks
            .iter()
            .find(|b| b.len() == 2)
            .expect("prism partitions have a two-element block")
            .iter()
            .copied()
            .collect()
    };
    assert_eq!(members.len(), 2);
    (members[0].min(members[1]), members[0].max(members[1]))
}

fn virtual_shape_12(sigma: &AdmissibleSet) -> Result<FamilyShape, ParamsError> {
    let ty = classify(&polytope_of(sigma)).map_err(|_| ParamsError::Unsupported)?;
    let full: BTreeSet<Pair> = all_pairs(5).into_iter().collect();
    let missing: BTreeSet<Pair> = full.difference(sigma.pairs()).copied().collect();
    match ty {
        PolytopeType::Hypersimplex => Ok(FamilyShape::Main),
        PolytopeType::K9 => {
            let m = *missing.iter().next().expect("K9 misses one pair");
            if m == (1, 2) {
                Ok(FamilyShape::DivisorCurve {
                    domain: CurveDomain::MinusA,
                })
            } else {
                Ok(FamilyShape::Curve {
                    slots: k9_slots(m),
                    domain: CurveDomain::MinusA,
                })
            }
        }
        PolytopeType::K8 => Ok(FamilyShape::Point(k8_point(&missing))),
        PolytopeType::K7 | PolytopeType::Prism6 => {
            let ij = apex_pair(sigma, ty);
            if ij == (1, 2) {
                Ok(FamilyShape::DivisorCurve {
                    domain: CurveDomain::Full,
                })
            } else if matches!(ij, (3, 4) | (3, 5) | (4, 5)) {
                use Slot::{Const, Param, ParamRev};
                let e = ProjectivePoint1::one_one;
                let slots = match ij {
                    (3, 4) => [Const(e()), Param, Param],
                    (3, 5) => [Param, Const(e()), ParamRev],
                    _ => [Param, Param, Const(e())],
                };
                Ok(FamilyShape::Curve {
                    slots,
                    domain: CurveDomain::Full,
                })
            } else {
                Ok(FamilyShape::Curve {
                    slots: k9_slots(ij),
                    domain: CurveDomain::Full,
                })
            }
        }
        PolytopeType::Octahedron => {
            let (z, _) = sigma.configuration();
            let i = *z.iter().next().expect("octahedra have one zero row");
            match i {
                3 => Ok(FamilyShape::CubicSlice { free_slot: 3 }),
                4 => Ok(FamilyShape::CubicSlice { free_slot: 2 }),
                5 => Ok(FamilyShape::CubicSlice { free_slot: 1 }),
                1 | 2 => {
                    let mut parts = vec![
                        FamilyShape::Main,
                        FamilyShape::DivisorCurve {
                            domain: CurveDomain::MinusA,
                        },
                    ];
                    for j in 1..=5 {
                        if j == i || (i.min(j), i.max(j)) == (1, 2) {
                            continue;
                        }
                        parts.push(FamilyShape::Curve {
                            slots: k9_slots((i.min(j), i.max(j))),
                            domain: CurveDomain::MinusA,
                        });
                    }
                    Ok(FamilyShape::Union(parts))
                }
                _ => unreachable!(),
            }
        }
        _ => Err(ParamsError::Unsupported),
    }
}

// ---------------------------------------------------------------------------
// The realization in (CP¹)⁵.

/// The five cross-ratio coordinates of a main-stratum point:
/// (P¹³P²⁴:P¹⁴P²³), (P¹³P²⁵:P¹⁵P²³), (P¹⁴P²⁵:P¹⁵P²⁴), (P¹⁴P³⁵:P¹⁵P³⁴),
/// (P²⁴P³⁵:P²⁵P³⁴).
pub fn embed_five(p: &PluckerVector) -> Result<[ProjectivePoint1; 5], ParamsError> {
    if p.n() != 5 || !is_main_stratum(p) {
        return Err(ParamsError::NotMainStratum);
    }
    let c = |i: usize, j: usize| p.coord(i, j);
    let ratios = [
        ((1, 3, 2, 4), (1, 4, 2, 3)),
        ((1, 3, 2, 5), (1, 5, 2, 3)),
        ((1, 4, 2, 5), (1, 5, 2, 4)),
        ((1, 4, 3, 5), (1, 5, 3, 4)),
        ((2, 4, 3, 5), (2, 5, 3, 4)),
    ];
    Ok(core::array::from_fn(|t| {
        let ((a, b, x, y), (u, v, s, w)) = ratios[t];
        ProjectivePoint1::new(&c(a, b) * &c(x, y), &c(u, v) * &c(s, w))
    }))
}

/// The four trilinear identities cutting out the manifold 𝓖 ⊂ (CP¹)⁵.
pub fn embedding_identities_hold(x: &[ProjectivePoint1; 5]) -> bool {
    let (c1, c2, c3, c4, c5) = (&x[0], &x[1], &x[2], &x[3], &x[4]);
    let d1 = c1.a() - c1.b();
    let d2 = c2.a() - c2.b();
    let eq1 = &(c1.a() * c2.b()) * c3.a() == &(c1.b() * c2.a()) * c3.b();
    let eq2 = &(c2.b() * c4.a()) * &d1 == &(c1.b() * c4.b()) * &d2;
    let eq3 = &(&d1 * c2.a()) * c5.a() == &(c1.a() * &d2) * c5.b();
    let eq4 = &(c3.a() * c4.b()) * c5.a() == &(c3.b() * c4.a()) * c5.b();
    eq1 && eq2 && eq3 && eq4
}

/// One slot of an embedded family in (CP¹)⁵: constant, or an integer-linear
/// expression (αc + βc′ : γc + δc′) in the curve parameter.
#[derive(Clone, Debug)]
pub enum EmbSlot {
    Const(ProjectivePoint1),
    Lin([[i64; 2]; 2]),
}

impl EmbSlot {
    fn eval(&self, c: &ProjectivePoint1) -> Option<ProjectivePoint1> {
        match self {
            EmbSlot::Const(p) => Some(p.clone()),
            EmbSlot::Lin(m) => {
                let lin = |row: [i64; 2]| {
                    &(c.a() * &GaussianRational::from_int(row[0]))
                        + &(c.b() * &GaussianRational::from_int(row[1]))
                };
                let (a, b) = (lin(m[0]), lin(m[1]));
                if a.is_zero() && b.is_zero() {
                    None
                } else {
                    Some(ProjectivePoint1::new(a, b))
                }
            }
        }
    }
}

/// A tabulated family in (CP¹)⁵, with its curve domain (trivial for points).
#[derive(Clone, Debug)]
pub struct EmbeddedFamily {
    pub slots: [EmbSlot; 5],
    pub domain: CurveDomain,
}

impl EmbeddedFamily {
    pub fn eval(&self, c: &ProjectivePoint1) -> Option<[ProjectivePoint1; 5]> {
        if !self.domain.admits(c) {
            return None;
        }
        let mut out = Vec::with_capacity(5);
        for s in &self.slots {
            out.push(s.eval(c)?);
        }
        out.try_into().ok()
    }
}

const PARAM: EmbSlot = EmbSlot::Lin([[1, 0], [0, 1]]);
const PARAM_REV: EmbSlot = EmbSlot::Lin([[0, 1], [1, 0]]);

fn emb_const(a: i64, b: i64) -> EmbSlot {
    EmbSlot::Const(ProjectivePoint1::from_int(a, b))
}

/// The embeddings into 𝓖 of the virtual families in the chart M₁₂ for the
/// strata over K9, K8 and K7 polytopes.
pub fn embed_family(sigma: &AdmissibleSet, chart: Chart) -> Result<EmbeddedFamily, ParamsError> {
    if sigma.n() != 5 || chart != (1, 2) {
        return Err(ParamsError::Unsupported);
    }
    let ty = classify(&polytope_of(sigma)).map_err(|_| ParamsError::Unsupported)?;
    let full: BTreeSet<Pair> = all_pairs(5).into_iter().collect();
    let missing: BTreeSet<Pair> = full.difference(sigma.pairs()).copied().collect();
    // (c − c′ : c) and companions as integer-linear slots.
    let diff_over_a = EmbSlot::Lin([[1, -1], [1, 0]]); // (c−c′ : c)
    let a_over_diff = EmbSlot::Lin([[1, 0], [1, -1]]); // (c : c−c′)
    let rdiff_over_b = EmbSlot::Lin([[-1, 1], [0, 1]]); // (c′−c : c′)
    let b_over_rdiff = EmbSlot::Lin([[0, 1], [-1, 1]]); // (c′ : c′−c)
    match ty {
        PolytopeType::K9 | PolytopeType::K7 => {
            let key = if ty == PolytopeType::K9 {
                *missing.iter().next().expect("K9 misses one pair")
            } else {
                apex_pair(sigma, ty)
            };
            let slots = match key {
                (1, 3) => [emb_const(0, 1), emb_const(0, 1), PARAM, emb_const(1, 1), PARAM_REV],
                (1, 4) => [emb_const(1, 0), PARAM, emb_const(0, 1), emb_const(0, 1), diff_over_a],
                (1, 5) => [PARAM, emb_const(1, 0), emb_const(1, 0), emb_const(1, 0), a_over_diff],
                (2, 3) => [emb_const(1, 0), emb_const(1, 0), PARAM, PARAM, emb_const(1, 1)],
                (2, 4) => [emb_const(0, 1), PARAM, emb_const(1, 0), rdiff_over_b, emb_const(0, 1)],
                (2, 5) => [PARAM, emb_const(0, 1), emb_const(0, 1), b_over_rdiff, emb_const(1, 0)],
                (3, 4) => [emb_const(1, 1), PARAM, PARAM, emb_const(1, 0), emb_const(1, 0)],
                (3, 5) => [PARAM, emb_const(1, 1), PARAM_REV, emb_const(0, 1), emb_const(0, 1)],
                (1, 2) => [emb_const(1, 1), emb_const(1, 1), emb_const(1, 1), PARAM, PARAM],
                (4, 5) => [PARAM, PARAM, emb_const(1, 1), emb_const(1, 1), emb_const(1, 1)],
                _ => unreachable!(),
            };
            Ok(EmbeddedFamily {
                slots,
                domain: if ty == PolytopeType::K9 {
                    CurveDomain::MinusA
                } else {
                    CurveDomain::Full
                },
            })
        }
        PolytopeType::K8 => {
            let key: Vec<Pair> = missing.iter().copied().collect();
            let pts: [(i64, i64); 5] = match (key[0], key[1]) {
                ((1, 4), (2, 3)) => [(1, 0), (1, 0), (0, 1), (0, 1), (1, 1)],
                ((1, 3), (2, 4)) => [(0, 1), (0, 1), (1, 0), (1, 1), (0, 1)],
                ((1, 5), (2, 4)) => [(0, 1), (1, 0), (1, 0), (1, 0), (0, 1)],
                ((2, 3), (4, 5)) => [(1, 0), (1, 0), (1, 1), (1, 1), (1, 1)],
                ((2, 4), (3, 5)) => [(0, 1), (1, 1), (1, 0), (0, 1), (0, 1)],
                ((2, 5), (3, 4)) => [(1, 1), (0, 1), (0, 1), (1, 0), (1, 0)],
                ((1, 5), (2, 3)) => [(1, 0), (1, 0), (1, 0), (1, 0), (1, 1)],
                ((1, 3), (2, 5)) => [(0, 1), (0, 1), (0, 1), (1, 1), (1, 0)],
                ((1, 4), (2, 5)) => [(1, 0), (0, 1), (0, 1), (0, 1), (1, 0)],
                ((1, 3), (4, 5)) => [(0, 1), (0, 1), (1, 1), (1, 1), (1, 1)],
                ((1, 4), (3, 5)) => [(1, 0), (1, 1), (0, 1), (0, 1), (0, 1)],
                ((1, 5), (3, 4)) => [(1, 1), (1, 0), (1, 0), (1, 0), (1, 0)],
                ((1, 2), (3, 4)) => [(1, 1), (1, 1), (1, 1), (1, 0), (1, 0)],
                ((1, 2), (3, 5)) => [(1, 1), (1, 1), (1, 1), (0, 1), (0, 1)],
                ((1, 2), (4, 5)) => [(1, 1), (1, 1), (1, 1), (1, 1), (1, 1)],
                _ => unreachable!("every K8 stratum misses two disjoint pairs"),
            };
            Ok(EmbeddedFamily {
                slots: core::array::from_fn(|t| emb_const(pts[t].0, pts[t].1)),
                domain: CurveDomain::Full,
            })
        }
        _ => Err(ParamsError::Unsupported),
    }
}

/// The Euler characteristic of the universal space of parameters, computed
/// by both blowup descriptions (CP¹×CP¹ blown up at 3 points, CP² blown up
/// at 4 points); they must agree.
pub fn euler_characteristic_universal() -> i64 {
    let via_quadric = 4 + 3;
    let via_plane = 3 + 4;
    assert_eq!(via_quadric, via_plane);
    via_quadric
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strata::enumerate_admissible_sets;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn pp(a: i64, b: i64) -> ProjectivePoint1 {
        ProjectivePoint1::from_int(a, b)
    }

    fn triple(c1: (i64, i64), c2: (i64, i64), c3: (i64, i64)) -> ParamTriple {
        ParamTriple::new(pp(c1.0, c1.1), pp(c2.0, c2.1), pp(c3.0, c3.1)).unwrap()
    }

    #[test]
    fn chart_params_of_fixed_z() {
        let z = [g(1), g(1), g(1), g(1), g(2), g(3)];
        let t = chart_params((1, 2), &z).unwrap();
        assert_eq!(t, triple((2, 1), (3, 1), (3, 2)));
    }

    #[test]
    fn symmetric_z_is_not_main() {
        let z = [g(1), g(1), g(1), g(1), g(1), g(1)];
        assert_eq!(chart_params((1, 2), &z), Err(ParamsError::NotMainStratum));
    }

    #[test]
    fn degenerate_c1_is_rejected() {
        // z₂z₄ = z₁z₅ forces c₁ = c₁′.
        let z = [g(1), g(2), g(1), g(1), g(2), g(3)];
        assert_eq!(chart_params((1, 2), &z), Err(ParamsError::NotMainStratum));
    }

    #[test]
    fn cubic_violation_is_rejected() {
        assert_eq!(
            ParamTriple::new(pp(2, 1), pp(3, 1), pp(5, 1)).unwrap_err(),
            ParamsError::CubicViolated
        );
    }

    #[test]
    fn representative_round_trips() {
        let t = triple((2, 1), (3, 1), (3, 2));
        let m = representative_of_params((1, 2), &t).unwrap();
        assert_eq!(chart_params_of_plane((1, 2), &m).unwrap(), t);
        // And in another chart.
        let m45 = representative_of_params((4, 5), &t).unwrap();
        assert_eq!(chart_params_of_plane((4, 5), &m45).unwrap(), t);
    }

    #[test]
    fn degenerate_triple_has_no_representative() {
        let t = ParamTriple::new(pp(1, 1), pp(3, 1), pp(3, 1)).unwrap();
        assert_eq!(
            representative_of_params((1, 2), &t).unwrap_err(),
            ParamsError::DegenerateTriple
        );
    }

    #[test]
    fn transition_12_12_is_identity() {
        let t = triple((2, 1), (3, 1), (3, 2));
        assert_eq!(transition((1, 2), (1, 2), &t).unwrap(), t);
    }

    #[test]
    fn transition_12_13_matches_closed_formula() {
        for t in sample_main_triples(11, 60) {
            let roundtrip = transition((1, 2), (1, 3), &t).unwrap();
            let closed = transition_12_13_closed(&t).unwrap();
            assert_eq!(roundtrip, closed, "at {t}");
        }
    }

    #[test]
    fn cocycle_identity_on_chart_triples() {
        let charts = all_pairs(5);
        let triples = sample_main_triples(23, 6);
        for &a in &charts[..4] {
            for &b in &charts[3..7] {
                for &c in &charts[6..10] {
                    if a == b || b == c || a == c {
                        continue;
                    }
                    for t in &triples {
                        let via = transition(b, c, &transition(a, b, t).unwrap()).unwrap();
                        let direct = transition(a, c, t).unwrap();
                        assert_eq!(via, direct, "charts {a:?},{b:?},{c:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn blowup_lift_and_blowdown() {
        let t = triple((1, 2), (1, 3), (2, 3));
        assert_eq!(
            lift_to_blowup(&t).unwrap(),
            UniversalParamPoint::Regular(t.clone())
        );
        assert_eq!(
            lift_to_blowup(&ParamTriple::center()).unwrap_err(),
            ParamsError::CenterWithoutDirection
        );
        let u = lift_with_direction(&ParamTriple::center(), pp(2, 3));
        assert_eq!(u, UniversalParamPoint::Divisor(pp(2, 3)));
        assert_eq!(blowdown(&u), ParamTriple::center());
        assert_eq!(blowdown(&UniversalParamPoint::Regular(t.clone())), t);
    }

    #[test]
    fn blowup_directions_along_a_path() {
        // A rational path into the center with direction (a : b) = (2 : 3):
        // c₁ = 1 + 2s, c₂ = 1 + 3s (affine), c₃ from the cubic.
        for s in [1, 2, 5] {
            let c1 = pp(1 + 2 * s, 1);
            let c2 = pp(1 + 3 * s, 1);
            let c3 = ProjectivePoint1::new(c1.b() * c2.a(), c1.a() * c2.b());
            let t = ParamTriple::new(c1, c2, c3).unwrap();
            assert_eq!(blowup_direction(&t).unwrap(), pp(2 * (1 + 3 * s), 3 * (1 + 2 * s)));
        }
        // In the limit s → 0 the direction tends to (2 : 3).
    }

    #[test]
    fn tilde_transition_on_divisor_and_back() {
        let u = UniversalParamPoint::Divisor(pp(2, 5));
        let v = tilde_transition_12_13(&u);
        assert_eq!(
            v,
            UniversalParamPoint::Regular(triple((1, 0), (1, 0), (2, 5)))
        );
        assert_eq!(tilde_transition_12_13(&v), u);
    }

    #[test]
    fn tilde_transition_extension_1p3() {
        let t = triple((1, 0), (2, 5), (0, 1));
        let img = tilde_transition_12_13(&UniversalParamPoint::Regular(t));
        assert_eq!(
            img,
            UniversalParamPoint::Regular(triple((1, 1), (2, -3), (2, -3)))
        );
    }

    #[test]
    fn tilde_transition_extension_2p3p() {
        let t = triple((2, 5), (1, 0), (1, 0));
        let img = tilde_transition_12_13(&UniversalParamPoint::Regular(t));
        assert_eq!(
            img,
            UniversalParamPoint::Regular(triple((2, -3), (1, 1), (-3, 2)))
        );
    }

    #[test]
    fn tilde_transition_is_an_involution_on_samples() {
        let mut points: Vec<UniversalParamPoint> = sample_main_triples(31, 20)
            .into_iter()
            .map(UniversalParamPoint::Regular)
            .collect();
        points.push(UniversalParamPoint::Divisor(pp(4, 7)));
        points.push(UniversalParamPoint::Regular(triple((1, 0), (2, 5), (0, 1))));
        points.push(UniversalParamPoint::Regular(triple((2, 5), (1, 0), (1, 0))));
        points.push(UniversalParamPoint::Regular(triple((0, 1), (0, 1), (2, 5))));
        for u in points {
            assert_eq!(tilde_transition_12_13(&tilde_transition_12_13(&u)), u, "at {u}");
        }
    }

    fn sigma_missing(missing: &[Pair]) -> AdmissibleSet {
        let pairs: BTreeSet<Pair> = all_pairs(5)
            .into_iter()
            .filter(|p| !missing.contains(p))
            .collect();
        AdmissibleSet::new(5, pairs).unwrap()
    }

    #[test]
    fn virtual_space_k9_rows() {
        let fam = virtual_space(&sigma_missing(&[(1, 3)]), (1, 2)).unwrap();
        let sample = &fam.shape.sample(3, 5)[0];
        assert!(fam.shape.contains(sample));
        match &fam.shape {
            FamilyShape::Curve { slots, domain } => {
                assert_eq!(slots[0], Slot::Const(ProjectivePoint1::one_zero()));
                assert_eq!(slots[1], Slot::Const(ProjectivePoint1::one_zero()));
                assert_eq!(slots[2], Slot::Param);
                assert_eq!(*domain, CurveDomain::MinusA);
            }
            other => panic!("unexpected shape {other:?}"),
        }
        // K₁₂(9) is the divisor family.
        let fam12 = virtual_space(&sigma_missing(&[(1, 2)]), (1, 2)).unwrap();
        assert!(matches!(
            fam12.shape,
            FamilyShape::DivisorCurve {
                domain: CurveDomain::MinusA
            }
        ));
    }

    #[test]
    fn virtual_space_k8_points() {
        let fam = virtual_space(&sigma_missing(&[(1, 2), (4, 5)]), (1, 2)).unwrap();
        assert_eq!(
            fam.shape,
            FamilyShape::Point(UniversalParamPoint::Divisor(ProjectivePoint1::one_one()))
        );
        let fam2 = virtual_space(&sigma_missing(&[(1, 2), (3, 4)]), (1, 2)).unwrap();
        assert_eq!(
            fam2.shape,
            FamilyShape::Point(UniversalParamPoint::Divisor(ProjectivePoint1::zero_one()))
        );
    }

    #[test]
    fn virtual_space_k7_divisor() {
        // K₁₂(7): pairs {12} ∪ {1,2}×{3,4,5}.
        let pairs: BTreeSet<Pair> = [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]
            .into_iter()
            .collect();
        let sigma = AdmissibleSet::new(5, pairs).unwrap();
        let fam = virtual_space(&sigma, (1, 2)).unwrap();
        assert!(matches!(
            fam.shape,
            FamilyShape::DivisorCurve {
                domain: CurveDomain::Full
            }
        ));
    }

    #[test]
    fn virtual_space_octahedron_slice() {
        // O₃: zero row 3.
        let pairs: BTreeSet<Pair> = all_pairs(5)
            .into_iter()
            .filter(|&(i, j)| i != 3 && j != 3)
            .collect();
        let sigma = AdmissibleSet::new(5, pairs).unwrap();
        let fam = virtual_space(&sigma, (1, 2)).unwrap();
        assert_eq!(fam.shape, FamilyShape::CubicSlice { free_slot: 3 });
        // O₁ is the union family.
        let pairs1: BTreeSet<Pair> = all_pairs(5)
            .into_iter()
            .filter(|&(i, j)| i != 1 && j != 1)
            .collect();
        let sigma1 = AdmissibleSet::new(5, pairs1).unwrap();
        let fam1 = virtual_space(&sigma1, (1, 2)).unwrap();
        assert!(matches!(fam1.shape, FamilyShape::Union(_)));
    }

    #[test]
    fn virtual_space_unsupported_for_low_strata() {
        let sigma = AdmissibleSet::new(5, BTreeSet::from([(1, 2)])).unwrap();
        assert_eq!(
            virtual_space(&sigma, (1, 2)).unwrap_err(),
            ParamsError::Unsupported
        );
    }

    #[test]
    fn tilde_transition_maps_families_equivariantly() {
        // For every stratum with a tabulated family in both charts, the
        // extended transition carries sampled points of the 12-family into
        // the 13-family.
        for sigma in enumerate_admissible_sets(5).unwrap() {
            let Ok(fam12) = virtual_space(&sigma, (1, 2)) else {
                continue;
            };
            let fam13 = virtual_space(&sigma, (1, 3)).unwrap();
            for u in fam12.shape.sample(41, 8) {
                let v = tilde_transition_12_13(&u);
                assert!(
                    fam13.shape.contains(&v),
                    "stratum {:?}: {u} -> {v} escapes the 13-family",
                    sigma.pairs()
                );
            }
        }
    }

    #[test]
    fn embedding_identities_on_random_points() {
        for t in sample_main_triples(7, 30) {
            let m = representative_of_params((1, 2), &t).unwrap();
            let p = plucker_coordinates(&m);
            let x = embed_five(&p).unwrap();
            assert!(embedding_identities_hold(&x), "at {t}");
        }
    }

    #[test]
    fn embedding_is_scale_invariant() {
        let t = triple((2, 1), (3, 1), (3, 2));
        let m = representative_of_params((1, 2), &t).unwrap();
        let p = plucker_coordinates(&m);
        let q = p.rescale(&GaussianRational::new(
            crate::exact::Rational::new(3, 7),
            crate::exact::Rational::new(1, 2),
        ));
        assert_eq!(embed_five(&p).unwrap(), embed_five(&q).unwrap());
    }

    #[test]
    fn embedding_rejects_non_main_points() {
        let m = PlaneMatrix::from_int_rows(vec![[1, 0], [0, 1], [1, 1], [1, 2], [1, 2]]).unwrap();
        let p = plucker_coordinates(&m);
        assert_eq!(embed_five(&p).unwrap_err(), ParamsError::NotMainStratum);
    }

    #[test]
    fn embedded_families_satisfy_identities() {
        let mut checked = 0;
        for sigma in enumerate_admissible_sets(5).unwrap() {
            let Ok(fam) = embed_family(&sigma, (1, 2)) else {
                continue;
            };
            for c in [pp(2, 1), pp(5, 3), pp(-3, 4), pp(7, 2)] {
                if let Some(x) = fam.eval(&c) {
                    assert!(
                        embedding_identities_hold(&x),
                        "family {:?} at {c}",
                        sigma.pairs()
                    );
                    checked += 1;
                }
            }
        }
        // 10 K9 + 15 K8 + 10 K7 families, four parameters each.
        assert_eq!(checked, 35 * 4);
    }

    #[test]
    fn embedded_k13_family_matches_table() {
        let fam = embed_family(&sigma_missing(&[(1, 3)]), (1, 2)).unwrap();
        let x = fam.eval(&pp(2, 5)).unwrap();
        assert_eq!(x[0], pp(0, 1));
        assert_eq!(x[1], pp(0, 1));
        assert_eq!(x[2], pp(2, 5));
        assert_eq!(x[3], pp(1, 1));
        assert_eq!(x[4], pp(5, 2));
    }

    #[test]
    fn euler_characteristic_is_seven() {
        assert_eq!(euler_characteristic_universal(), 7);
    }

    #[test]
    fn projection_to_chart_parameters_is_faithful() {
        // For curve families of strata lying in the chart M₁₂, distinct
        // parameters give distinct points: the canonical projection to the
        // one-dimensional parameter space F_σ exists.
        let fam = virtual_space(&sigma_missing(&[(1, 3)]), (1, 2)).unwrap();
        let a = fam.shape.sample(5, 1).remove(0);
        let b = fam.shape.sample(6, 1).remove(0);
        assert_ne!(a, b);
    }
}
