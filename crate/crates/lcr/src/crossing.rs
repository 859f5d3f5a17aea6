//! Per-edge crossing counts and the local crossing number of a drawing.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::geom::{segments_cross, PointSet};
use crate::{worker_count, Error, Result};

/// An unordered edge of the complete graph, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "edge endpoints must differ");
        Edge { u: a.min(b), v: a.max(b) }
    }

    pub fn disjoint(&self, other: &Edge) -> bool {
        self.u != other.u && self.u != other.v && self.v != other.u && self.v != other.v
    }
}

/// Crossing counts for every edge of the complete straight-line graph on a
/// point set. The maximum count is the local crossing number of the drawing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingProfile {
    pub n: usize,
    pub counts: BTreeMap<Edge, usize>,
}

impl CrossingProfile {
    /// Largest per-edge count; 0 when there are no edges.
    pub fn lcr(&self) -> usize {
        self.counts.values().copied().max().unwrap_or(0)
    }

    /// Total number of crossing pairs. Each crossing contributes to exactly
    /// two edges, so this is half the count sum.
    pub fn total(&self) -> usize {
        let sum: usize = self.counts.values().sum();
        debug_assert_eq!(sum % 2, 0);
        sum / 2
    }

    /// Edges achieving the maximum count.
    pub fn max_edges(&self) -> Vec<Edge> {
        let m = self.lcr();
        self.counts
            .iter()
            .filter(|&(_, &c)| c == m)
            .map(|(&e, _)| e)
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<_> = self
            .counts
            .iter()
            .map(|(e, c)| serde_json::json!({"u": e.u, "v": e.v, "crossings": c}))
            .collect();
        serde_json::json!({
            "n": self.n,
            "edges": edges,
            "lcr": self.lcr(),
            "total": self.total(),
        })
    }
}

fn all_edges(n: usize) -> Vec<Edge> {
    let mut edges = Vec::with_capacity(n * (n.max(1) - 1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push(Edge { u, v });
        }
    }
    edges
}

/// Number of edges of the complete graph on `P` that properly cross `e`.
pub fn edge_crossings(ps: &PointSet, e: Edge) -> Result<usize> {
    let a = ps.point(e.u)?;
    let b = ps.point(e.v)?;
    let mut count = 0;
    let pts = ps.points();
    for c in 0..pts.len() {
        if c == e.u || c == e.v {
            continue;
        }
        for d in (c + 1)..pts.len() {
            if d == e.u || d == e.v {
                continue;
            }
            if segments_cross(a, b, &pts[c], &pts[d])? {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Crossing counts for every edge, via a single pass over all unordered pairs
/// of disjoint edges. Each crossing pair increments both of its edges.
///
/// The pair enumeration is partitioned across workers (capped by
/// `LCR_THREADS`); partial counts merge by summation, so the result is
/// identical for any worker count.
pub fn crossing_profile(ps: &PointSet) -> CrossingProfile {
    let n = ps.len();
    let edges = all_edges(n);
    let m = edges.len();
    let workers = if m >= 256 { worker_count().max(1) } else { 1 };

    let count_range = |lo: usize, hi: usize| -> Vec<usize> {
        let mut counts = vec![0usize; m];
        for i in lo..hi {
            let e = edges[i];
            let (a, b) = (ps.point(e.u).unwrap(), ps.point(e.v).unwrap());
            for (j, f) in edges.iter().enumerate().skip(i + 1) {
                if !e.disjoint(f) {
                    continue;
                }
                let (c, d) = (ps.point(f.u).unwrap(), ps.point(f.v).unwrap());
                if segments_cross(a, b, c, d).expect("point set not in general position") {
                    counts[i] += 1;
                    counts[j] += 1;
                }
            }
        }
        counts
    };

    let totals = if workers <= 1 {
        count_range(0, m)
    } else {
        // Early rows pair with more partners; interleaving would balance
        // better but contiguous chunks keep the merge obvious.
        let chunk = m.div_ceil(workers);
        let partials: Vec<Vec<usize>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let lo = (w * chunk).min(m);
                    let hi = ((w + 1) * chunk).min(m);
                    let f = &count_range;
                    scope.spawn(move || f(lo, hi))
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        let mut totals = vec![0usize; m];
        for part in partials {
            for (t, p) in totals.iter_mut().zip(part) {
                *t += p;
            }
        }
        totals
    };

    let counts = edges.into_iter().zip(totals).collect();
    CrossingProfile { n, counts }
}

/// The local crossing number of the drawing: max per-edge crossing count.
pub fn local_crossing_number(ps: &PointSet) -> usize {
    crossing_profile(ps).lcr()
}

/// Number of crossing pairs of edges in the drawing.
pub fn total_crossings(ps: &PointSet) -> usize {
    crossing_profile(ps).total()
}

/// Checks ids and precondition, then computes the profile.
pub fn try_crossing_profile(ps: &PointSet) -> Result<CrossingProfile> {
    if let Some(ids) = crate::geom::first_degeneracy(ps) {
        return match ids.len() {
            2 => Err(Error::DuplicatePoint(ids[0], ids[1])),
            _ => Err(Error::CollinearTriple(ids[0], ids[1], ids[2])),
        };
    }
    Ok(crossing_profile(ps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::PointSet;

    fn convex_ngon(n: usize) -> PointSet {
        // Integer points in convex position: on the parabola (i, i^2).
        PointSet::from_int_coords(
            &(0..n as i64).map(|i| (i, i * i)).collect::<Vec<_>>(),
        )
    }

    #[test]
    fn quadrilateral_diagonals() {
        let ps = PointSet::from_int_coords(&[(0, 0), (4, 1), (5, 5), (1, 4)]);
        assert_eq!(edge_crossings(&ps, Edge::new(0, 2)).unwrap(), 1);
        assert_eq!(edge_crossings(&ps, Edge::new(1, 3)).unwrap(), 1);
        assert_eq!(edge_crossings(&ps, Edge::new(0, 1)).unwrap(), 0);
        assert_eq!(local_crossing_number(&ps), 1);
        assert_eq!(total_crossings(&ps), 1);
    }

    #[test]
    fn triangular_hull_four_points_has_no_crossings() {
        let ps = PointSet::from_int_coords(&[(0, 0), (10, 0), (5, 9), (5, 3)]);
        for (e, c) in crossing_profile(&ps).counts {
            assert_eq!(c, 0, "edge {e:?}");
        }
        assert_eq!(local_crossing_number(&ps), 0);
    }

    #[test]
    fn convex_hexagon_main_diagonal() {
        let ps = convex_ngon(6);
        // A long diagonal splitting the rest 2/2 is crossed by all 2x2 pairs.
        assert_eq!(edge_crossings(&ps, Edge::new(1, 4)).unwrap(), 4);
    }

    #[test]
    fn convex_pentagon_profile() {
        let ps = convex_ngon(5);
        let profile = crossing_profile(&ps);
        let hull: Vec<Edge> = (0..5).map(|i| Edge::new(i, (i + 1) % 5)).collect();
        for (e, c) in &profile.counts {
            if hull.contains(e) {
                assert_eq!(*c, 0);
            } else {
                assert_eq!(*c, 2);
            }
        }
        assert_eq!(profile.lcr(), 2);
        assert_eq!(profile.total(), 5);
    }

    #[test]
    fn triangle_profile_is_zero() {
        let ps = convex_ngon(3);
        let profile = crossing_profile(&ps);
        assert_eq!(profile.counts.len(), 3);
        assert!(profile.counts.values().all(|&c| c == 0));
    }

    #[test]
    fn convex_chord_crossings_are_a_times_b() {
        // For points in convex position, a chord separating a and b other
        // points is crossed exactly a*b times.
        for n in 4..=10usize {
            let ps = convex_ngon(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    let a = v - u - 1;
                    let b = n - 2 - a;
                    assert_eq!(edge_crossings(&ps, Edge::new(u, v)).unwrap(), a * b);
                }
            }
        }
    }

    #[test]
    fn handshake_identity() {
        let ps = PointSet::from_int_coords(&[
            (13, 2), (7, 2), (17, 13), (1, 18), (3, 7), (20, 20), (18, 1), (18, 18),
        ]);
        let profile = crossing_profile(&ps);
        let sum: usize = profile.counts.values().sum();
        assert_eq!(sum, 2 * profile.total());
    }

    #[test]
    fn profile_independent_of_worker_count() {
        let ps = convex_ngon(24);
        let base = std::env::var("LCR_THREADS").ok();
        std::env::set_var("LCR_THREADS", "1");
        let one = crossing_profile(&ps);
        std::env::set_var("LCR_THREADS", "4");
        let four = crossing_profile(&ps);
        match base {
            Some(v) => std::env::set_var("LCR_THREADS", v),
            None => std::env::remove_var("LCR_THREADS"),
        }
        assert_eq!(one, four);
    }

    #[test]
    fn profile_json_shape() {
        let ps = convex_ngon(4);
        let json = crossing_profile(&ps).to_json();
        assert_eq!(json["n"], 4);
        assert_eq!(json["edges"].as_array().unwrap().len(), 6);
        assert_eq!(json["lcr"], 1);
        assert_eq!(json["total"], 1);
    }
}
