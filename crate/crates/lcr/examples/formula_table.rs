//! Print the closed-form local crossing number of K_n for small n, together
//! with the congruence-class lower bound it refines.

use lcr::formula::{lcr_formula, lower_bound_class};

fn main() {
    println!("{:>4} {:>8} {:>12}  note", "n", "lcr", "class bound");
    for n in 3..=40u64 {
        let v = lcr_formula(n);
        let note = if v.exceptional { "exceptional" } else { "" };
        println!(
            "{n:>4} {:>8} {:>12}  {note}",
            v.value,
            lower_bound_class(n).unwrap()
        );
    }
}
