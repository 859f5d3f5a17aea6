//! Balanced hull-edge / hull-path witnesses and the lower-bound certificate
//! they induce on a concrete drawing.
//!
//! Every point set in general position admits either two hull vertices whose
//! line splits the rest with imbalance at most `(n-2)/3`, or a length-2 path
//! anchored at two hull vertices whose angular sectors split the rest with
//! imbalance at most `(n-3)/3`. Thresholds are compared as exact rationals
//! (`3 * |difference| <= n - 2`, resp. `n - 3`), never pre-rounded.

use serde::Serialize;

use crate::geom::{convex_hull, sector_counts, side_counts, PointSet, SectorCounts, SideCounts};
use crate::{Error, Result};

/// The two branches of the separation lemma.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WitnessKind {
    /// Two hull vertices whose line is balanced.
    HullEdge { p: usize, q: usize, counts: SideCounts },
    /// A path `p-r-q` with hull-vertex endpoints and balanced sectors.
    HullPath { p: usize, r: usize, q: usize, counts: SectorCounts },
}

/// A witness satisfying its branch's balance inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SeparationWitness {
    pub kind: WitnessKind,
    /// `|right - left|` resp. `|ccw - cw|`.
    pub imbalance: usize,
    /// The threshold is `threshold_numerator / 3`: `n-2` for a hull edge,
    /// `n-3` for a hull path.
    pub threshold_numerator: usize,
}

impl SeparationWitness {
    fn hull_edge(p: usize, q: usize, counts: SideCounts, n: usize) -> Option<Self> {
        let imbalance = counts.right.abs_diff(counts.left);
        (3 * imbalance <= n - 2).then_some(SeparationWitness {
            kind: WitnessKind::HullEdge { p, q, counts },
            imbalance,
            threshold_numerator: n - 2,
        })
    }

    fn hull_path(p: usize, r: usize, q: usize, counts: SectorCounts, n: usize) -> Option<Self> {
        let imbalance = counts.ccw.abs_diff(counts.cw);
        (3 * imbalance <= n - 3).then_some(SeparationWitness {
            kind: WitnessKind::HullPath { p, r, q, counts },
            imbalance,
            threshold_numerator: n - 3,
        })
    }

    /// Crossings forced on the witness edge or path: the product of the two
    /// side or sector counts.
    pub fn forced_crossings(&self) -> usize {
        match self.kind {
            WitnessKind::HullEdge { counts, .. } => counts.right * counts.left,
            WitnessKind::HullPath { counts, .. } => counts.ccw * counts.cw,
        }
    }

    /// Lower bound on the local crossing number of the drawing: the full
    /// product for a hull edge, else the better of the two path edges.
    pub fn edge_bound(&self) -> usize {
        let forced = self.forced_crossings();
        match self.kind {
            WitnessKind::HullEdge { .. } => forced,
            WitnessKind::HullPath { .. } => forced.div_ceil(2),
        }
    }
}

/// A sound per-drawing lower bound derived from a balanced witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LowerBoundCertificate {
    pub witness: SeparationWitness,
    pub forced_crossings: usize,
    /// `edge_bound <= local_crossing_number(P)` always holds. For a hull
    /// path the bound is attributed to the better of `pr`, `rq` without
    /// deciding which.
    pub edge_bound: usize,
}

fn enumerate_witnesses(ps: &PointSet) -> Result<(Vec<SeparationWitness>, Vec<SeparationWitness>)> {
    let n = ps.len();
    if n < 3 {
        return Err(Error::TooFewPoints { need: 3, got: n });
    }
    let hull = convex_hull(ps)?;
    let mut edges = Vec::new();
    let mut paths = Vec::new();
    for i in 0..hull.len() {
        for j in (i + 1)..hull.len() {
            let (p, q) = (hull[i], hull[j]);
            let sc = side_counts(ps, p, q)?;
            if let Some(w) = SeparationWitness::hull_edge(p, q, sc, n) {
                edges.push(w);
            }
            for r in 0..n {
                if r == p || r == q {
                    continue;
                }
                let sec = sector_counts(ps, p, r, q)?;
                if let Some(w) = SeparationWitness::hull_path(p, r, q, sec, n) {
                    paths.push(w);
                }
            }
        }
    }
    Ok((edges, paths))
}

/// Finds a balanced witness: all hull-vertex pairs are tried first, then all
/// hull-pair/midpoint triples. The lemma guarantees one exists, so the error
/// branch firing means an implementation bug.
pub fn find_separation_witness(ps: &PointSet) -> Result<SeparationWitness> {
    let (edges, paths) = enumerate_witnesses(ps)?;
    edges
        .into_iter()
        .next()
        .or_else(|| paths.into_iter().next())
        .ok_or(Error::LemmaViolated)
}

/// The strongest certificate over all balanced witnesses; ties go to the
/// earliest witness in the deterministic enumeration order.
pub fn lemma_lower_bound(ps: &PointSet) -> Result<LowerBoundCertificate> {
    let (edges, paths) = enumerate_witnesses(ps)?;
    let best = edges
        .into_iter()
        .chain(paths)
        .max_by_key(|w| w.edge_bound())
        .ok_or(Error::LemmaViolated)?;
    Ok(LowerBoundCertificate {
        witness: best,
        forced_crossings: best.forced_crossings(),
        edge_bound: best.edge_bound(),
    })
}

/// Minimum sector imbalance over all hull-anchored length-2 paths. Large
/// values mean no path witness does much better than the lemma's threshold.
pub fn tightness_diagnostic(ps: &PointSet) -> Result<usize> {
    let n = ps.len();
    if n < 4 {
        return Err(Error::TooFewPoints { need: 4, got: n });
    }
    let hull = convex_hull(ps)?;
    let mut min = usize::MAX;
    for i in 0..hull.len() {
        for j in (i + 1)..hull.len() {
            let (p, q) = (hull[i], hull[j]);
            for r in 0..n {
                if r == p || r == q {
                    continue;
                }
                let sec = sector_counts(ps, p, r, q)?;
                min = min.min(sec.ccw.abs_diff(sec.cw));
            }
        }
    }
    Ok(min)
}

/// True iff some edge achieving the local crossing number has at least one
/// endpoint on the convex hull.
pub fn hull_endpoint_property(ps: &PointSet) -> Result<bool> {
    if ps.len() < 3 {
        return Err(Error::TooFewPoints { need: 3, got: ps.len() });
    }
    let hull = convex_hull(ps)?;
    let profile = crate::crossing::crossing_profile(ps);
    Ok(profile
        .max_edges()
        .iter()
        .any(|e| hull.contains(&e.u) || hull.contains(&e.v)))
}
