//! Length, odd length and descent set of a few permutations.
//!
//! cargo run --example permutation_stats -- 3 4 1 2

use oddinv::perm::max_odd_length;
use oddinv::Permutation;

fn show(p: &Permutation) {
    let line: Vec<String> = p.values().map(|v| v.to_string()).collect();
    println!(
        "{:<12} l={:<3} L={:<3} D={:<10} {:?}",
        line.join(" "),
        p.inv_length(),
        p.odd_length(),
        p.descent_set().to_string(),
        p.chessboard_class()
    );
}

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("one-line notation")).collect();
    if !args.is_empty() {
        show(&Permutation::new(args).expect("a permutation of 1..n"));
        return;
    }
    let n = 5;
    show(&Permutation::identity(n).unwrap());
    for i in 1..n {
        show(&Permutation::simple_transposition(n, i).unwrap());
    }
    let w0 = Permutation::longest_element(n).unwrap();
    show(&w0);
    println!("max odd length for n={n}: {}", max_odd_length(n));

    // L(w0 σ) = L(w0) - L(σ)
    let p = Permutation::new(vec![3, 5, 1, 2, 4]).unwrap();
    show(&p);
    show(&w0.compose(&p).unwrap());
}
