//! Exact computation of rectilinear local crossing numbers of complete graphs.
//!
//! The local crossing number of a straight-line drawing is the largest number
//! of crossings carried by any single edge. Everything here runs on exact
//! rational arithmetic: coordinates are arbitrary-precision rationals and no
//! predicate ever rounds.
//!
//! The main entry points:
//!
//! * [`geom`] — orientation, general position, segment crossing, convex hull,
//!   half-plane and angular-sector counts.
//! * [`crossing`] — per-edge crossing counts and the local crossing number of
//!   a drawing.
//! * [`formula`] — the closed-form value of `lcr(K_n)` and the congruence-class
//!   lower bound.
//! * [`construct`] — the three-arc and five-part point sets that attain the
//!   closed form, with exact epsilon calibration.
//! * [`separation`] — balanced hull-edge / hull-path witnesses and the lower
//!   bound certificate they induce.
//! * [`search`] — randomized hill-climbing for low-lcr drawings at small `n`.

pub mod construct;
pub mod crossing;
pub mod fileio;
pub mod formula;
pub mod geom;
pub mod search;
pub mod separation;
pub mod svg;

pub use construct::{
    calibrate_epsilon, construct_five_part, construct_three_arcs, ConstructionKind, PartName,
    PartitionedPointSet,
};
pub use crossing::{
    crossing_profile, edge_crossings, local_crossing_number, total_crossings, CrossingProfile, Edge,
};
pub use fileio::{parse_pointset, serialize_pointset, Report};
pub use formula::{lcr_formula, lower_bound_class, LcrValue};
pub use geom::{
    convex_hull, is_general_position, orient, sector_counts, segments_cross, side_counts,
    Orientation, Point, PointSet, Rational, SectorCounts, SideCounts,
};
pub use search::{
    random_point_set, search_witness, verify_floor_by_sampling, SearchConfig, SearchResult,
};
pub use svg::emit_svg;
pub use separation::{
    find_separation_witness, hull_endpoint_property, lemma_lower_bound, tightness_diagnostic,
    LowerBoundCertificate, SeparationWitness, WitnessKind,
};

/// Default seed used by randomized CLI commands when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 0x1c5;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("segments share an endpoint; adjacency is not a crossing")]
    SharedEndpoint,
    #[error("degenerate input: points {0}, {1}, {2} are collinear")]
    CollinearTriple(usize, usize, usize),
    #[error("duplicate point: ids {0} and {1}")]
    DuplicatePoint(usize, usize),
    #[error("need at least {need} points, got {got}")]
    TooFewPoints { need: usize, got: usize },
    #[error("unknown point id {0}")]
    UnknownId(usize),
    #[error("points must be distinct")]
    NotDistinct,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("epsilon calibration failed: {0}")]
    CalibrationFailed(String),
    #[error("partition shape mismatch: {0}")]
    WrongPartition(String),
    #[error("separation lemma violated - implementation bug")]
    LemmaViolated,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Worker count for parallel pair enumeration: `LCR_THREADS`, with 0 or unset
/// meaning auto.
pub(crate) fn worker_count() -> usize {
    match std::env::var("LCR_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        Some(0) | None => std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
        Some(k) => k,
    }
}
