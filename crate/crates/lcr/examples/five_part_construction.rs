//! Build the five-part set for n = 3k+8 and print, per part-pair case, the
//! worst edge crossing count — the (B1,C2) case attains the global maximum.

use lcr::construct::{case_maxima_report, construct_five_part, verify_cluster_separation};
use lcr::crossing::crossing_profile;
use lcr::formula::lcr_formula;

fn main() {
    let k: usize = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("k must be an integer"))
        .unwrap_or(4);
    let built = construct_five_part(k).expect("construction calibrates");
    let n = built.base.len();
    let lcr = crossing_profile(&built.base).lcr();
    println!(
        "k = {k} (n = {n}): lcr {lcr}, closed form {}, cluster separation {}",
        lcr_formula(n as u64).value,
        verify_cluster_separation(&built).unwrap()
    );
    for ((a, b), max) in case_maxima_report(&built).unwrap() {
        let mark = if max == lcr { "  <- global max" } else { "" };
        println!("  case ({a},{b}): {max}{mark}");
    }
}
