//! Closed forms for unmixed classes next to the brute-force sums.
//!
//! cargo run --example unmixed_classes -- 6 1 3,5

use oddinv::closed_form::{chessboard_formula, shape_of};
use oddinv::oracle::build_bucket_table;
use oddinv::{ClassSpec, Population};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let specs = if args.is_empty() {
        vec![
            ClassSpec::from_lists(6, &[1], &[3, 5]).unwrap(),
            ClassSpec::from_lists(5, &[1], &[3]).unwrap(),
            ClassSpec::from_lists(8, &[1, 2, 3], &[6]).unwrap(),
        ]
    } else {
        let n = args[0].parse().expect("n");
        let set = |i: usize| args.get(i).map_or(Ok(Default::default()), |s| s.parse()).expect("positions");
        vec![ClassSpec::new(n, set(1), set(2)).expect("valid class")]
    };
    for c in specs {
        println!("{c}");
        let Ok(shape) = shape_of(&c) else {
            println!("  not unmixed: {}", c.unmixed_violation().unwrap());
            continue;
        };
        println!(
            "  b={:?} d={:?} M={} m={} alpha={} compressed={}",
            shape.b,
            shape.d,
            shape.big_m,
            shape.m,
            shape.alpha,
            c.is_compressed().unwrap()
        );
        let table = build_bucket_table(c.n()).unwrap();
        for pop in [Population::FullSn, Population::ChessEven, Population::ChessOdd] {
            let closed = chessboard_formula(&c, pop).unwrap();
            let oracle = table.signed_poly(&c, pop).unwrap();
            let tag = if closed == oracle { "ok" } else { "MISMATCH" };
            println!("  {:<3} {closed}  [{tag}]", pop.flag());
        }
    }
}
