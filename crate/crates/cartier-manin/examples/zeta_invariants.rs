//! Mod-p zeta data and p-torsion invariants: L(T) mod p, χ(T) mod p,
//! p-rank, a-number and superspeciality for the three bundled curves.
//!
//! Run with: cargo run --example zeta_invariants

use cartier_manin::cli::pretty_fp_poly;
use cartier_manin::curve::parse_curve_spec;
use cartier_manin::invariants;

const SPECS: [(&str, &str); 3] = [
    (
        "F_125 genus-2 (supersingular)",
        include_str!("../fixtures/f125.curve"),
    ),
    (
        "F_27 genus-2 (ordinary)",
        include_str!("../fixtures/f27.curve"),
    ),
    (
        "F_3 elliptic y²=x³+x (superspecial)",
        include_str!("../fixtures/ss_genus1_f3.curve"),
    ),
];

fn main() {
    for (label, spec) in SPECS {
        let x = parse_curve_spec(spec).unwrap();
        println!("=== {label} ===");
        println!("{x}");

        let m = invariants::frobenius_iterate(&x);
        let n = invariants::cartier_iterate(&x);
        println!("M = A·A^σ⋯  = {m}");
        println!("N = B·B^τ⋯  = {n}");
        // Adjoint F_q-linear operators share characteristic polynomials.
        assert_eq!(m.char_poly().unwrap(), n.char_poly().unwrap());

        let zeta = invariants::mod_p_zeta(&x).unwrap();
        println!("L(T) mod p  = {}", pretty_fp_poly(&zeta.l_mod_p));
        println!("χ(T) mod p  = {}", pretty_fp_poly(&zeta.chi_mod_p));
        println!("p-rank      = {}", invariants::p_rank(&x).unwrap());
        println!("a-number    = {}", invariants::a_number(&x));
        println!("superspecial = {}", invariants::is_superspecial(&x));
        println!();
    }

    // The F_125 curve separates the two notions: p-rank 0 (supersingular
    // at desk scale) yet B ≠ 0 (not superspecial).
    let x = parse_curve_spec(SPECS[0].1).unwrap();
    assert_eq!(invariants::p_rank(&x).unwrap(), 0);
    assert!(!invariants::is_superspecial(&x));
    println!("note: p-rank 0 does NOT imply a vanishing Cartier operator;");
    println!("the F_125 curve is supersingular but not superspecial.");
}
