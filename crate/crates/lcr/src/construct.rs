//! Generators for the two optimal point-set families, with exact rational
//! coordinates and a calibrated bulge parameter.
//!
//! Circular arcs are realized as rational points on flat parabolic bumps
//! through the same anchor points; only convexity and flatness of the arcs
//! matter, and the separation verifiers confirm the needed side conditions
//! exactly after generation. The bulge is `eps = 1/2^t`; calibration picks
//! the smallest exponent `t` for which general position, the separation
//! property, and the target local crossing number all hold.

use std::collections::BTreeMap;

use num_traits::One;
use serde::Serialize;

use crate::crossing::crossing_profile;
use crate::geom::{first_degeneracy, orient, Point, PointSet, Rational};
use crate::{Error, Result};

/// Part labels carried by a generated point set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum PartName {
    Arc0,
    Arc1,
    Arc2,
    A,
    B1,
    B2,
    C1,
    C2,
    X1,
    X2,
}

impl std::fmt::Display for PartName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            PartName::Arc0 => "ARC0",
            PartName::Arc1 => "ARC1",
            PartName::Arc2 => "ARC2",
            PartName::A => "A",
            PartName::B1 => "B1",
            PartName::B2 => "B2",
            PartName::C1 => "C1",
            PartName::C2 => "C2",
            PartName::X1 => "X1",
            PartName::X2 => "X2",
        };
        f.write_str(s)
    }
}

/// Parameters of a three-arc set: cluster sizes and the bulge exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ThreeArcSpec {
    pub n: usize,
    pub n0: usize,
    pub n1: usize,
    pub n2: usize,
    pub eps_exponent: u32,
}

/// Parameters of a five-part set for `n = 3k + 8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FivePartSpec {
    pub k: usize,
    pub eps_exponent: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConstructionSpec {
    ThreeArcs(ThreeArcSpec),
    FivePart(FivePartSpec),
}

/// Construction family plus its size parameter, for calibration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionKind {
    ThreeArcs { n: usize },
    FivePart { k: usize },
}

/// A generated point set together with its part labels.
#[derive(Debug, Clone)]
pub struct PartitionedPointSet {
    pub base: PointSet,
    /// Part label per point id.
    pub parts: Vec<PartName>,
    pub spec: ConstructionSpec,
}

impl PartitionedPointSet {
    /// The calibrated bulge exponent `t` (epsilon is `1/2^t`).
    pub fn eps_exponent(&self) -> u32 {
        match self.spec {
            ConstructionSpec::ThreeArcs(s) => s.eps_exponent,
            ConstructionSpec::FivePart(s) => s.eps_exponent,
        }
    }

    pub fn part_ids(&self, part: PartName) -> Vec<usize> {
        self.parts
            .iter()
            .enumerate()
            .filter(|&(_, &p)| p == part)
            .map(|(i, _)| i)
            .collect()
    }
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn eps_of(exponent: u32) -> Rational {
    Rational::new(One::one(), num_bigint::BigInt::from(2u8).pow(exponent))
}

/// Cluster sizes `floor(n/3) <= floor((n+1)/3) <= floor((n+2)/3)`.
pub fn three_arc_sizes(n: usize) -> (usize, usize, usize) {
    (n / 3, (n + 1) / 3, (n + 2) / 3)
}

/// The local crossing number a calibrated three-arc set attains.
pub fn three_arc_target(n: usize) -> usize {
    let (_, n1, n2) = three_arc_sizes(n);
    (n2 - 1) * (n1 - 1)
}

/// The local crossing number a calibrated five-part set attains:
/// `k^2 + 4k + 3 - floor(k/2)`.
pub fn five_part_target(k: usize) -> usize {
    k * k + 4 * k + 3 - k / 2
}

// Cluster directions, roughly 120 degrees apart, all of length 5. Each
// cluster sits on a nearly radial segment between radius 5 and 15 with a
// small bulge toward the counterclockwise side.
const ARC_DIRS: [(i64, i64); 3] = [(5, 0), (-3, 4), (-3, -4)];

/// Builds the three-arc set with an explicit bulge exponent, skipping
/// calibration. Exponent 0 (`eps = 1`) is allowed for diagnostics.
/// Scale all coordinates by the lcm of their denominators. A uniform positive
/// scale changes no orientation, so the drawing is equivalent — but integer
/// coordinates keep the predicates on their fast path.
fn clear_denominators(coords: &mut [(Rational, Rational)]) {
    use num_integer::Integer;
    let mut l = num_bigint::BigInt::from(1);
    for (x, y) in coords.iter() {
        l = l.lcm(x.denom());
        l = l.lcm(y.denom());
    }
    let scale = Rational::from_integer(l);
    for (x, y) in coords.iter_mut() {
        *x = &*x * &scale;
        *y = &*y * &scale;
    }
}

pub fn three_arcs_with_exponent(n: usize, eps_exponent: u32) -> Result<PartitionedPointSet> {
    if n < 3 {
        return Err(Error::TooFewPoints { need: 3, got: n });
    }
    let (n0, n1, n2) = three_arc_sizes(n);
    let eps = eps_of(eps_exponent);
    let mut coords = Vec::with_capacity(n);
    let mut parts = Vec::with_capacity(n);
    for (arc, &m) in [n0, n1, n2].iter().enumerate() {
        let (dx, dy) = ARC_DIRS[arc];
        for j in 0..m {
            // Radial parameter in [1, 3], uniform steps; bulge peaks mid-arc
            // and vanishes at the endpoints.
            let s = if m == 1 {
                rat(2)
            } else {
                rat(1) + rat(2) * Rational::new((j as i64).into(), ((m - 1) as i64).into())
            };
            let g = (&s - rat(1)) * (rat(3) - &s);
            let bulge = &eps * &g;
            let x = &s * rat(dx) + &bulge * rat(-dy);
            let y = &s * rat(dy) + &bulge * rat(dx);
            coords.push((x, y));
            parts.push([PartName::Arc0, PartName::Arc1, PartName::Arc2][arc]);
        }
    }
    clear_denominators(&mut coords);
    Ok(PartitionedPointSet {
        base: PointSet::from_coords(coords),
        parts,
        spec: ConstructionSpec::ThreeArcs(ThreeArcSpec { n, n0, n1, n2, eps_exponent }),
    })
}

/// Points on the parabolic arc from `a0` to `a1` bulging by `bulge` at the
/// midpoint, at `m` uniform parameter steps including both endpoints.
fn arc_points(
    a0: (i64, i64),
    a1: (i64, i64),
    bulge: (i64, i64),
    eps: &Rational,
    m: usize,
    out: &mut Vec<(Rational, Rational)>,
    mirror: bool,
) {
    for j in 0..m {
        let t = if m == 1 {
            Rational::new(1.into(), 2.into())
        } else {
            Rational::new((j as i64).into(), ((m - 1) as i64).into())
        };
        let h = rat(4) * &t * (rat(1) - &t); // 1 at midpoint, 0 at endpoints
        let off = eps * &h;
        let mut x = rat(a0.0) + &t * rat(a1.0 - a0.0) + &off * rat(bulge.0);
        let y = rat(a0.1) + &t * rat(a1.1 - a0.1) + &off * rat(bulge.1);
        if mirror {
            x = -x;
        }
        out.push((x, y));
    }
}

/// Builds the five-part set (`n = 3k + 8`) with an explicit bulge exponent.
pub fn five_part_with_exponent(k: usize, eps_exponent: u32) -> Result<PartitionedPointSet> {
    if k < 4 {
        return Err(Error::InvalidParameter(format!(
            "five-part construction needs k >= 4, got {k}"
        )));
    }
    let eps = eps_of(eps_exponent);
    let half = k / 2;
    let size_a = k + 2;
    let size_b = k + 2 - half;
    let size_c = half;

    let mut coords = Vec::new();
    let mut parts = Vec::new();
    let mut push = |part: PartName, pts: Vec<(Rational, Rational)>| {
        for c in pts {
            coords.push(c);
            parts.push(part);
        }
    };

    // A: near-vertical arc on the y-axis bulging east.
    let mut buf = Vec::new();
    arc_points((0, 20), (0, 24), (1, 0), &eps, size_a, &mut buf, false);
    push(PartName::A, std::mem::take(&mut buf));
    // B1: outer southwest arc bulging away from the origin.
    arc_points((-24, -12), (-20, -10), (-1, 2), &eps, size_b, &mut buf, false);
    push(PartName::B1, std::mem::take(&mut buf));
    // B2: mirror of B1.
    arc_points((-24, -12), (-20, -10), (-1, 2), &eps, size_b, &mut buf, true);
    push(PartName::B2, std::mem::take(&mut buf));
    // C1: inner southwest arc bulging northwest.
    arc_points((-5, -1), (-4, 0), (-1, 1), &eps, size_c, &mut buf, false);
    push(PartName::C1, std::mem::take(&mut buf));
    // C2: mirror of C1.
    arc_points((-5, -1), (-4, 0), (-1, 1), &eps, size_c, &mut buf, true);
    push(PartName::C2, std::mem::take(&mut buf));
    push(PartName::X1, vec![(rat(-11), rat(1))]);
    push(PartName::X2, vec![(rat(11), rat(1))]);

    debug_assert_eq!(coords.len(), 3 * k + 8);
    clear_denominators(&mut coords);
    Ok(PartitionedPointSet {
        base: PointSet::from_coords(coords),
        parts,
        spec: ConstructionSpec::FivePart(FivePartSpec { k, eps_exponent }),
    })
}

/// Side of the oriented line `ab` each point of `ids` falls on: `Some(sign)`
/// when they all lie strictly on one side, `None` otherwise.
fn uniform_side(ps: &PointSet, a: &Point, b: &Point, ids: &[usize]) -> Option<i32> {
    let mut sign = 0;
    for &i in ids {
        let s = orient(a, b, ps.point(i).ok()?).sign();
        if s == 0 {
            return None;
        }
        if sign == 0 {
            sign = s;
        } else if sign != s {
            return None;
        }
    }
    Some(sign)
}

/// True iff every secant line of each arc has one of the other clusters
/// strictly on one side and the third strictly on the other.
pub fn verify_secant_separation(set: &PartitionedPointSet) -> Result<bool> {
    if !matches!(set.spec, ConstructionSpec::ThreeArcs(_)) {
        return Err(Error::WrongPartition("expected a three-arc partition".into()));
    }
    let clusters = [
        set.part_ids(PartName::Arc0),
        set.part_ids(PartName::Arc1),
        set.part_ids(PartName::Arc2),
    ];
    for i in 0..3 {
        let other1 = &clusters[(i + 1) % 3];
        let other2 = &clusters[(i + 2) % 3];
        let cl = &clusters[i];
        for ai in 0..cl.len() {
            for bi in (ai + 1)..cl.len() {
                let a = set.base.point(cl[ai])?;
                let b = set.base.point(cl[bi])?;
                match (
                    uniform_side(&set.base, a, b, other1),
                    uniform_side(&set.base, a, b, other2),
                ) {
                    (Some(s1), Some(s2)) if s1 != s2 => {}
                    _ => return Ok(false),
                }
            }
        }
    }
    Ok(true)
}

/// True iff no line through two points of the same part splits any other
/// part: every other part lies strictly on one side of every such line.
pub fn verify_cluster_separation(set: &PartitionedPointSet) -> Result<bool> {
    if !matches!(set.spec, ConstructionSpec::FivePart(_)) {
        return Err(Error::WrongPartition("expected a five-part partition".into()));
    }
    let names = [
        PartName::A,
        PartName::B1,
        PartName::B2,
        PartName::C1,
        PartName::C2,
        PartName::X1,
        PartName::X2,
    ];
    let groups: Vec<Vec<usize>> = names.iter().map(|&p| set.part_ids(p)).collect();
    for (gi, group) in groups.iter().enumerate() {
        for ai in 0..group.len() {
            for bi in (ai + 1)..group.len() {
                let a = set.base.point(group[ai])?;
                let b = set.base.point(group[bi])?;
                for (oi, other) in groups.iter().enumerate() {
                    if oi == gi {
                        continue;
                    }
                    if uniform_side(&set.base, a, b, other).is_none() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

fn generate(kind: ConstructionKind, exponent: u32) -> Result<PartitionedPointSet> {
    match kind {
        ConstructionKind::ThreeArcs { n } => three_arcs_with_exponent(n, exponent),
        ConstructionKind::FivePart { k } => five_part_with_exponent(k, exponent),
    }
}

fn target_of(kind: ConstructionKind) -> usize {
    match kind {
        ConstructionKind::ThreeArcs { n } => three_arc_target(n),
        ConstructionKind::FivePart { k } => five_part_target(k),
    }
}

/// Checks one candidate exponent fully; `Ok` means all three gates pass.
fn check_exponent(kind: ConstructionKind, t: u32) -> Result<std::result::Result<(), String>> {
    let set = generate(kind, t)?;
    if let Some(ids) = first_degeneracy(&set.base) {
        return Ok(Err(format!("t={t}: degenerate ids {ids:?}")));
    }
    let sep = match kind {
        ConstructionKind::ThreeArcs { .. } => verify_secant_separation(&set)?,
        ConstructionKind::FivePart { .. } => verify_cluster_separation(&set)?,
    };
    if !sep {
        return Ok(Err(format!("t={t}: separation property fails")));
    }
    let lcr = crossing_profile(&set.base).lcr();
    let target = target_of(kind);
    if lcr != target {
        return Ok(Err(format!("t={t}: lcr {lcr} != target {target}")));
    }
    Ok(Ok(()))
}

/// Smallest exponent `t <= max_exponent` for which the generated set passes
/// general position, its separation verifier, and the target local crossing
/// number with `eps = 1/2^t`.
pub fn calibrate_epsilon(kind: ConstructionKind, max_exponent: u32) -> Result<u32> {
    if max_exponent < 1 {
        return Err(Error::CalibrationFailed("empty search range".into()));
    }
    let mut last = String::new();
    for t in 1..=max_exponent {
        match check_exponent(kind, t)? {
            Ok(()) => return Ok(t),
            Err(diag) => last = diag,
        }
    }
    Err(Error::CalibrationFailed(last))
}

/// Default calibration ceiling; binary powers keep denominators small and the
/// constructions settle well before this.
pub const DEFAULT_MAX_EXPONENT: u32 = 64;

/// The three-arc set on `n` points, calibrated.
pub fn construct_three_arcs(n: usize) -> Result<PartitionedPointSet> {
    let t = calibrate_epsilon(ConstructionKind::ThreeArcs { n }, DEFAULT_MAX_EXPONENT)?;
    three_arcs_with_exponent(n, t)
}

/// The five-part set on `3k + 8` points, calibrated.
pub fn construct_five_part(k: usize) -> Result<PartitionedPointSet> {
    // Validate k before calibrating so the parameter error wins.
    five_part_with_exponent(k, 1)?;
    let t = calibrate_epsilon(ConstructionKind::FivePart { k }, DEFAULT_MAX_EXPONENT)?;
    five_part_with_exponent(k, t)
}

fn reflect_part(p: PartName) -> PartName {
    match p {
        PartName::B1 => PartName::B2,
        PartName::B2 => PartName::B1,
        PartName::C1 => PartName::C2,
        PartName::C2 => PartName::C1,
        PartName::X1 => PartName::X2,
        PartName::X2 => PartName::X1,
        other => other,
    }
}

/// The 15 canonical part-pair cases; every part pair maps onto one of these
/// under the mirror symmetry swapping the 1/2-indexed parts.
pub const CANONICAL_CASES: [(PartName, PartName); 15] = [
    (PartName::A, PartName::A),
    (PartName::A, PartName::B1),
    (PartName::A, PartName::C1),
    (PartName::A, PartName::X1),
    (PartName::B1, PartName::B1),
    (PartName::B1, PartName::B2),
    (PartName::B1, PartName::C1),
    (PartName::B1, PartName::C2),
    (PartName::B1, PartName::X1),
    (PartName::B2, PartName::X1),
    (PartName::C1, PartName::C1),
    (PartName::C1, PartName::C2),
    (PartName::C1, PartName::X1),
    (PartName::C2, PartName::X1),
    (PartName::X1, PartName::X2),
];

fn canon_case(a: PartName, b: PartName) -> (PartName, PartName) {
    let sorted = |a: PartName, b: PartName| if a <= b { (a, b) } else { (b, a) };
    let direct = sorted(a, b);
    if CANONICAL_CASES.contains(&direct) {
        direct
    } else {
        let mirrored = sorted(reflect_part(a), reflect_part(b));
        debug_assert!(CANONICAL_CASES.contains(&mirrored));
        mirrored
    }
}

/// Maximum edge crossing count per canonical part-pair case, mirrors folded
/// in. Keys are the 15 cases of the five-part analysis.
pub fn case_maxima_report(
    set: &PartitionedPointSet,
) -> Result<BTreeMap<(PartName, PartName), usize>> {
    if !matches!(set.spec, ConstructionSpec::FivePart(_)) {
        return Err(Error::WrongPartition("expected a five-part partition".into()));
    }
    let profile = crossing_profile(&set.base);
    let mut report: BTreeMap<(PartName, PartName), usize> =
        CANONICAL_CASES.iter().map(|&c| (c, 0)).collect();
    for (edge, &count) in &profile.counts {
        let case = canon_case(set.parts[edge.u], set.parts[edge.v]);
        let entry = report.get_mut(&case).expect("case map covers all pairs");
        *entry = (*entry).max(count);
    }
    Ok(report)
}
