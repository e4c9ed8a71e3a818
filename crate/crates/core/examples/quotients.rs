//! Chessboard sums over quotients S_n^J (no forced descents).
//!
//! cargo run --example quotients -- 6

use oddinv::closed_form::quotient_formula;
use oddinv::oracle::build_bucket_table;
use oddinv::{ClassSpec, Population, PositionSet};

fn main() {
    let n: usize = std::env::args().nth(1).map_or(6, |a| a.parse().expect("n"));
    let table = build_bucket_table(n).unwrap();
    let pops: &[Population] = if n % 2 == 0 { &[Population::ChessEven, Population::ChessOdd] } else { &[Population::ChessEven] };
    for bits in 0..(1u64 << (n - 1)) {
        let ascents = PositionSet::from_bits(bits << 1);
        let c = ClassSpec::new(n, ascents, PositionSet::EMPTY).unwrap();
        for &pop in pops {
            let formula = quotient_formula(n, ascents, pop).unwrap();
            assert_eq!(formula, table.signed_poly(&c, pop).unwrap());
            println!("{:<12} {:<3} {formula}", ascents.to_string(), pop.flag());
        }
    }
}
