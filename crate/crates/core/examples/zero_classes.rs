//! Classes forced to sum to zero, and the two n = 8 classes that show the
//! zero condition is not the whole story.
//!
//! cargo run --release --example zero_classes

use oddinv::oracle::{build_bucket_table, signed_poly};
use oddinv::verify::scan_zero_condition;
use oddinv::{ClassSpec, Population};

fn main() {
    for (a, d) in [(&[1, 2, 4][..], &[3, 5, 6][..]), (&[1, 2, 4], &[3, 5, 6, 7])] {
        let c = ClassSpec::from_lists(8, a, d).unwrap();
        let v = signed_poly(&c, Population::FullSn, None).unwrap();
        println!(
            "{c}\n  peaks={} valleys={} zero condition={}  sum = {v}",
            c.peaks(),
            c.valleys(),
            c.zero_condition()
        );
    }

    for n in 2..=9 {
        let r = scan_zero_condition(&build_bucket_table(n).unwrap());
        println!("{}  zero without predicate: {}", r.summary(), r.zero_without_predicate.len());
    }
}
