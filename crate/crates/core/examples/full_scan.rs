//! Every proved formula against the oracle, one table per n, with a JSON
//! report on request.
//!
//! cargo run --release --example full_scan -- 10 --json

use oddinv::oracle::build_bucket_table;
use oddinv::verify::Suite;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n_max: usize = args.first().map_or(8, |a| a.parse().expect("n"));
    let json = args.iter().any(|a| a == "--json");
    let mut reports = Vec::new();
    for n in 2..=n_max {
        let table = build_bucket_table(n).unwrap();
        for suite in Suite::ALL {
            let r = suite.run(&table);
            if !json {
                println!("{}", r.summary());
            }
            reports.push(r);
        }
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&reports).unwrap());
    }
    std::process::exit(if reports.iter().all(|r| r.passed()) { 0 } else { 1 });
}
