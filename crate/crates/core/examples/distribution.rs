//! Odd-length distribution over S_n, with symmetry and unimodality.
//!
//! cargo run --release --example distribution -- 10

use oddinv::oracle::distribution;

fn main() {
    let n_max: usize = std::env::args().nth(1).map_or(8, |a| a.parse().expect("n"));
    for n in 1..=n_max {
        let d = distribution(n).unwrap();
        let unimodal = d.is_unimodal().unwrap();
        println!("L_{n}: symmetric={} unimodal={unimodal}", d.is_symmetric());
        println!("  {d}");
    }
}
