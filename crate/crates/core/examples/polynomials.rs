//! Exact Laurent polynomials and Gaussian multinomials at q = x².
//!
//! cargo run --example polynomials

use oddinv::laurent::{gaussian_multinomial, one_minus_even_powers, q_factorial, q_integer};
use oddinv::SignedPoly;

fn main() {
    println!("[3]        = {}", q_integer(3));
    println!("[3]!       = {}", q_factorial(3));
    println!("[4; 2, 2]  = {}", gaussian_multinomial(&[2, 2]).unwrap());
    println!("[5; 1,2,2] = {}", gaussian_multinomial(&[1, 2, 2]).unwrap());
    println!("(1-x^6)(1-x^8) = {}", one_minus_even_powers(3, 4));

    let p = SignedPoly::from_terms([(-1, 2), (0, -1), (3, 1)]);
    println!("p        = {p}");
    println!("p(1/x)   = {}", p.reciprocal_substitute());
    println!("p * p    = {}", &p * &p);
    println!("p*p / p  = {}", (&p * &p).exact_div(&p).unwrap());
    match SignedPoly::from_dense(&[1, 1]).exact_div(&SignedPoly::from_dense(&[1, 0, 1])) {
        Ok(q) => println!("unexpected quotient {q}"),
        Err(e) => println!("(1 + x) / (1 + x^2): {e}"),
    }
    println!("json     = {}", serde_json::to_string(&p).unwrap());
}
