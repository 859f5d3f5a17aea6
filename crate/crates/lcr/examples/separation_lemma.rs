//! Find a balanced separation witness on a random point set and print the
//! lower-bound certificate it forces.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lcr::crossing::crossing_profile;
use lcr::search::random_point_set;
use lcr::separation::lemma_lower_bound;

fn main() {
    let seed: u64 = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("seed must be an integer"))
        .unwrap_or(lcr::DEFAULT_SEED);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in [5, 8, 11, 15] {
        let ps = random_point_set(n, 1 << 20, &mut rng);
        let cert = lemma_lower_bound(&ps).expect("witness exists for n >= 5");
        println!(
            "n = {n}: certified lcr >= {}, actual lcr {}",
            cert.edge_bound,
            crossing_profile(&ps).lcr()
        );
        println!("  witness: {:?}", cert.witness.kind);
    }
}
