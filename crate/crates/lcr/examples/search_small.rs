//! Hill-climb for an optimal drawing of K_11 (local crossing number 8) and
//! print the witness coordinates.

use lcr::crossing::crossing_profile;
use lcr::fileio::serialize_pointset;
use lcr::search::{search_witness, SearchConfig};

fn main() {
    let cfg = SearchConfig::new(11, 8, lcr::DEFAULT_SEED);
    let result = search_witness(&cfg);
    println!(
        "best lcr {} after {} moves (target reached: {})",
        result.best_lcr, result.iterations_used, result.achieved_target
    );
    assert_eq!(crossing_profile(&result.best).lcr(), result.best_lcr);
    print!("{}", serialize_pointset(&result.best));
}
