//! Build the three-arc point set for a given n, verify its separation
//! property, and show that its local crossing number hits the class value.

use lcr::construct::{construct_three_arcs, verify_secant_separation};
use lcr::crossing::crossing_profile;
use lcr::fileio::serialize_pointset;
use lcr::formula::lcr_formula;

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("n must be an integer"))
        .unwrap_or(12);
    let built = construct_three_arcs(n).expect("construction calibrates");
    let profile = crossing_profile(&built.base);
    println!(
        "n = {n}: epsilon 1/2^{}, lcr {} (closed form {})",
        built.eps_exponent(),
        profile.lcr(),
        lcr_formula(n as u64).value
    );
    println!(
        "secant separation holds: {}",
        verify_secant_separation(&built).unwrap()
    );
    print!("{}", serialize_pointset(&built.base));
}
