//! Signed sums over alternating and reverse alternating permutations.
//!
//! cargo run --example alternating

use oddinv::closed_form::{alternating_formula, AlternatingVariant};
use oddinv::oracle::signed_poly;
use oddinv::Population;

fn main() {
    for n in 1..=9 {
        for v in [AlternatingVariant::Alternating, AlternatingVariant::ReverseAlternating] {
            let c = v.spec(n).unwrap();
            let formula = alternating_formula(n, v).unwrap();
            assert_eq!(formula, signed_poly(&c, Population::FullSn, None).unwrap());
            println!("n={n} {v:<18?} {formula}");
        }
    }
}
