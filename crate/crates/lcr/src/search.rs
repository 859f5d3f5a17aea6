//! Randomized hill-climbing for low-lcr drawings at small n.
//!
//! The search lives on an integer grid so orientation tests are single i128
//! multiplications; the exact-rational machinery is only used to re-verify
//! final witnesses. Restarts are independent: each owns a ChaCha8 stream
//! derived from (seed, restart index), so results are reproducible no matter
//! how restarts are scheduled. Restarts run in parallel batches and results
//! merge by best lcr with ties broken by restart index.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::construct::construct_three_arcs;
use crate::crossing::local_crossing_number;
use crate::formula::lcr_formula;
use crate::geom::{PointSet, Rational};
use crate::worker_count;

/// Parameters of one search run. All counts must be positive.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SearchConfig {
    pub n: usize,
    pub target: usize,
    pub seed: u64,
    pub restarts: usize,
    pub moves_per_restart: usize,
    /// Coordinate magnitude limit of the grid.
    pub grid_bound: i64,
}

impl SearchConfig {
    pub fn new(n: usize, target: usize, seed: u64) -> SearchConfig {
        SearchConfig {
            n,
            target,
            seed,
            restarts: 64,
            moves_per_restart: 20_000,
            grid_bound: 1 << 20,
        }
    }
}

/// Outcome of a search run; `best` is always in general position and
/// `best_lcr` equals its recomputed local crossing number.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub best: PointSet,
    pub best_lcr: usize,
    pub achieved_target: bool,
    pub iterations_used: usize,
}

type GridPoint = (i64, i64);

fn cross(a: GridPoint, b: GridPoint, c: GridPoint) -> i128 {
    let abx = (b.0 - a.0) as i128;
    let aby = (b.1 - a.1) as i128;
    let acx = (c.0 - a.0) as i128;
    let acy = (c.1 - a.1) as i128;
    abx * acy - aby * acx
}

fn segments_cross_grid(a: GridPoint, b: GridPoint, c: GridPoint, d: GridPoint) -> bool {
    // General position is maintained as an invariant, so no orientation is 0.
    (cross(a, b, c) > 0) != (cross(a, b, d) > 0) && (cross(c, d, a) > 0) != (cross(c, d, b) > 0)
}

/// True iff placing `candidate` at slot `i` keeps the set in general position.
fn placement_ok(pts: &[GridPoint], i: usize, candidate: GridPoint) -> bool {
    let n = pts.len();
    for j in 0..n {
        if j != i && pts[j] == candidate {
            return false;
        }
    }
    for j in 0..n {
        if j == i {
            continue;
        }
        for k in (j + 1)..n {
            if k != i && cross(candidate, pts[j], pts[k]) == 0 {
                return false;
            }
        }
    }
    true
}

/// Uniform random general-position set on `[0, grid_bound)^2`, built by
/// rejection-resampling one point at a time.
pub fn random_grid_set(n: usize, grid_bound: i64, rng: &mut impl Rng) -> Vec<GridPoint> {
    let mut pts: Vec<GridPoint> = Vec::with_capacity(n);
    while pts.len() < n {
        let candidate = (rng.gen_range(0..grid_bound), rng.gen_range(0..grid_bound));
        pts.push(candidate);
        let i = pts.len() - 1;
        if !placement_ok(&pts, i, candidate) {
            pts.pop();
        }
    }
    pts
}

/// The same generator packaged as an exact point set, for fuzzing.
pub fn random_point_set(n: usize, grid_bound: i64, rng: &mut impl Rng) -> PointSet {
    let pts = random_grid_set(n, grid_bound, rng);
    PointSet::from_int_coords(&pts)
}

fn to_point_set(pts: &[GridPoint]) -> PointSet {
    PointSet::from_int_coords(pts)
}

/// Dense edge index for `u < v`.
fn eidx(n: usize, u: usize, v: usize) -> usize {
    u * n + v
}

fn full_counts(pts: &[GridPoint]) -> Vec<u32> {
    let n = pts.len();
    let mut counts = vec![0u32; n * n];
    for u in 0..n {
        for v in (u + 1)..n {
            for s in u..n {
                for t in (s + 1)..n {
                    if (s, t) <= (u, v) || s == u || s == v || t == u || t == v {
                        continue;
                    }
                    if segments_cross_grid(pts[u], pts[v], pts[s], pts[t]) {
                        counts[eidx(n, u, v)] += 1;
                        counts[eidx(n, s, t)] += 1;
                    }
                }
            }
        }
    }
    counts
}

fn grid_lcr(pts: &[GridPoint]) -> usize {
    full_counts(pts).iter().copied().max().unwrap_or(0) as usize
}

/// Crossing profile of an integer point set via the i128 fast path. Agrees
/// with [`crate::crossing::crossing_profile`] on every general-position input;
/// exists so bulk fuzzing does not pay big-rational costs.
pub fn grid_crossing_profile(pts: &[GridPoint]) -> crate::crossing::CrossingProfile {
    let n = pts.len();
    let counts = full_counts(pts);
    let mut map = std::collections::BTreeMap::new();
    for u in 0..n {
        for v in (u + 1)..n {
            map.insert(crate::crossing::Edge::new(u, v), counts[eidx(n, u, v)] as usize);
        }
    }
    crate::crossing::CrossingProfile { n, counts: map }
}

/// (max, edges at max, total) — the lexicographic acceptance key.
fn key_of(counts: &[u32]) -> (u32, usize, u64) {
    let max = counts.iter().copied().max().unwrap_or(0);
    let at_max = if max == 0 {
        0
    } else {
        counts.iter().filter(|&&c| c == max).count()
    };
    let total: u64 = counts.iter().map(|&c| c as u64).sum();
    (max, at_max, total)
}

/// Round the exact three-arc construction onto the grid as a warm start,
/// jiggling any point whose rounding broke general position.
fn three_arc_seed(n: usize, rng: &mut impl Rng) -> Option<Vec<GridPoint>> {
    let built = construct_three_arcs(n).ok()?;
    let scale = Rational::from_integer(num_bigint::BigInt::from(1 << 14));
    let half = Rational::new(num_bigint::BigInt::from(1), num_bigint::BigInt::from(2));
    let round = |r: &Rational| -> i64 {
        let scaled = r * &scale + &half;
        let floored = scaled.floor();
        let digits = floored.to_integer().to_string();
        digits.parse::<i64>().expect("seed coordinate fits in i64")
    };
    let mut pts: Vec<GridPoint> = Vec::with_capacity(n);
    for p in built.base.iter() {
        let base = (round(&p.x), round(&p.y));
        let mut candidate = base;
        pts.push(candidate);
        let i = pts.len() - 1;
        while !placement_ok(&pts, i, candidate) {
            candidate = (
                base.0 + rng.gen_range(-256..=256),
                base.1 + rng.gen_range(-256..=256),
            );
            pts[i] = candidate;
        }
    }
    Some(pts)
}

struct RestartOutcome {
    pts: Vec<GridPoint>,
    lcr: usize,
    moves: usize,
}

fn run_restart(cfg: &SearchConfig, restart: usize) -> RestartOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(restart as u64 + 1);
    let n = cfg.n;

    let mut pts = if restart % 2 == 1 {
        three_arc_seed(n, &mut rng)
            .unwrap_or_else(|| random_grid_set(n, cfg.grid_bound, &mut rng))
    } else {
        random_grid_set(n, cfg.grid_bound, &mut rng)
    };
    let mut counts = full_counts(&pts);
    let mut key = key_of(&counts);

    let schedule = (cfg.moves_per_restart / 8).max(1);
    let mut radius = cfg.grid_bound.max(2);
    let mut accepted = 0usize;
    let mut moves = 0usize;
    let mut new_inc = vec![0u32; n];
    let mut delta = vec![0i64; n * n];

    while moves < cfg.moves_per_restart {
        if key.0 as usize <= cfg.target {
            break;
        }
        moves += 1;
        let i = rng.gen_range(0..n);
        let old = pts[i];
        let candidate = (
            (old.0 + rng.gen_range(-radius..=radius)).clamp(-cfg.grid_bound, cfg.grid_bound),
            (old.1 + rng.gen_range(-radius..=radius)).clamp(-cfg.grid_bound, cfg.grid_bound),
        );
        if candidate == old || !placement_ok(&pts, i, candidate) {
            continue;
        }

        // Only pairs with exactly one edge at i can change. For each edge
        // (i, e) accumulate its fresh count; for each far edge (s, t) track
        // the signed change contributed by edges at i.
        for e in 0..n {
            new_inc[e] = 0;
        }
        for s in 0..n {
            for t in (s + 1)..n {
                if s == i || t == i {
                    continue;
                }
                delta[eidx(n, s, t)] = 0;
            }
        }
        for e in 0..n {
            if e == i {
                continue;
            }
            for s in 0..n {
                if s == i || s == e {
                    continue;
                }
                for t in (s + 1)..n {
                    if t == i || t == e {
                        continue;
                    }
                    let before = segments_cross_grid(old, pts[e], pts[s], pts[t]);
                    let now = segments_cross_grid(candidate, pts[e], pts[s], pts[t]);
                    if now {
                        new_inc[e] += 1;
                    }
                    if now != before {
                        delta[eidx(n, s, t)] += if now { 1 } else { -1 };
                    }
                }
            }
        }

        // Candidate acceptance key over all edges, without committing.
        let mut max = 0u32;
        let mut at_max = 0usize;
        let mut total = 0u64;
        for s in 0..n {
            for t in (s + 1)..n {
                let c = if s == i || t == i {
                    new_inc[if s == i { t } else { s }]
                } else {
                    let e = eidx(n, s, t);
                    (counts[e] as i64 + delta[e]) as u32
                };
                total += c as u64;
                if c > max {
                    max = c;
                    at_max = 1;
                } else if c == max && max > 0 {
                    at_max += 1;
                }
            }
        }
        let cand_key = (max, at_max, total);
        if cand_key > key {
            continue;
        }

        pts[i] = candidate;
        for s in 0..n {
            for t in (s + 1)..n {
                let e = eidx(n, s, t);
                counts[e] = if s == i || t == i {
                    new_inc[if s == i { t } else { s }]
                } else {
                    (counts[e] as i64 + delta[e]) as u32
                };
            }
        }
        key = cand_key;
        accepted += 1;
        if accepted % schedule == 0 {
            radius = (radius / 2).max(4);
        }
    }

    RestartOutcome {
        lcr: key.0 as usize,
        pts,
        moves,
    }
}

/// Hill-climb with random restarts until some restart reaches `cfg.target`.
///
/// Deterministic for a given config: restart `r` always consumes RNG stream
/// `r`, batches are merged in index order, and the search stops at batch
/// granularity once a batch contains a hit.
pub fn search_witness(cfg: &SearchConfig) -> SearchResult {
    assert!(cfg.n >= 3, "search needs at least 3 points");
    assert!(
        cfg.restarts > 0 && cfg.moves_per_restart > 0 && cfg.grid_bound > 0,
        "search budget must be positive"
    );

    let workers = worker_count().max(1);
    let mut best: Option<RestartOutcome> = None;
    let mut iterations = 0usize;
    let mut next = 0usize;
    while next < cfg.restarts {
        let batch: Vec<usize> = (next..cfg.restarts.min(next + workers)).collect();
        next += batch.len();
        let outcomes: Vec<RestartOutcome> = std::thread::scope(|scope| {
            let handles: Vec<_> = batch
                .iter()
                .map(|&r| scope.spawn(move || run_restart(cfg, r)))
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        for outcome in outcomes {
            iterations += outcome.moves;
            if best.as_ref().is_none_or(|b| outcome.lcr < b.lcr) {
                best = Some(outcome);
            }
        }
        if best.as_ref().is_some_and(|b| b.lcr <= cfg.target) {
            break;
        }
    }

    let best = best.expect("at least one restart ran");
    let best_set = to_point_set(&best.pts);
    let verified = local_crossing_number(&best_set);
    debug_assert_eq!(verified, best.lcr, "incremental counts drifted");
    debug_assert!(verified as u64 >= lcr_formula(cfg.n as u64).value);
    SearchResult {
        best: best_set,
        best_lcr: verified,
        achieved_target: verified <= cfg.target,
        iterations_used: iterations,
    }
}

/// Minimum lcr over `samples` random general-position sets — an empirical
/// floor that must sit at or above the closed-form value.
pub fn verify_floor_by_sampling(n: usize, samples: usize, seed: u64) -> usize {
    assert!(n >= 3 && samples >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(0);
    let mut min = usize::MAX;
    for _ in 0..samples {
        let pts = random_grid_set(n, 1 << 20, &mut rng);
        min = min.min(grid_lcr(&pts));
    }
    min
}
