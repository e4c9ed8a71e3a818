//! The two open conjectures, checked as far as the oracle reaches.
//!
//! cargo run --release --example conjectures -- 10

use oddinv::oracle::{build_bucket_table, DEFAULT_CAP};
use oddinv::verify::{check_mixed_shift_conjecture, check_unimodality};

fn main() {
    let n_max: usize = std::env::args().nth(1).map_or(9, |a| a.parse().expect("n"));
    for n in 2..=n_max {
        println!("{}", check_mixed_shift_conjecture(&build_bucket_table(n).unwrap()).summary());
    }
    let r = check_unimodality(n_max, DEFAULT_CAP).unwrap();
    println!("{}", r.summary());
    println!("not unimodal at {:?}", r.non_unimodal);
}
