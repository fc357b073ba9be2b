//! The classical pitfall, reproduced on purpose: feeding the raw
//! coefficient matrix Y into the Hasse–Witt iteration formula
//! H·H^(p)·H^(p²)⋯ yields a matrix whose characteristic polynomial is
//! simply wrong for the zeta function.
//!
//! Run with: cargo run --example pitfall_wrong_order

use cartier_manin::cli;

const F27_SPEC: &str = include_str!("../fixtures/f27.curve");
const F125_SPEC: &str = include_str!("../fixtures/f125.curve");
const G1_SPEC: &str = include_str!("../fixtures/ss_genus1_f3.curve");

fn main() {
    // The genus-2 curve over F_27 where the wrong product is visibly
    // wrong: κ(T) = T² + T + 1 versus the true T² + 1.
    let demo = cli::cmd_pitfall(F27_SPEC).unwrap();
    print!("{}", cli::pitfall_text(&demo));
    assert_eq!(demo.verdict, cli::Verdict::Differ);
    println!();

    // The F_125 curve from the opening example: here the correct iterate
    // vanishes but the naive product does not.
    let demo = cli::cmd_pitfall(F125_SPEC).unwrap();
    print!("{}", cli::pitfall_text(&demo));
    println!();

    // Over a prime field there is a single factor and nothing to
    // mis-order, so the naive route accidentally agrees.
    let demo = cli::cmd_pitfall(G1_SPEC).unwrap();
    print!("{}", cli::pitfall_text(&demo));
}
