//! Finite field arithmetic with the Frobenius automorphism σ and its
//! inverse τ — the two twists everything else in this crate hangs on.
//!
//! Run with: cargo run --example finite_fields

use cartier_manin::gf::{FieldContext, FieldElement};

fn main() {
    // F_125 = F_5[x]/(x^3 + 3x + 3); α is the residue class of x.
    let ctx = FieldContext::extension(5, &[3, 3, 0, 1]).unwrap();
    println!("field: F_{} (p = {}, e = {})", ctx.q(), ctx.p(), ctx.e());

    let alpha = FieldElement::alpha(&ctx);
    println!("α           = {alpha}");
    println!(
        "α³          = {}   (the modulus relation forces 2α + 2)",
        alpha.pow(3)
    );

    // α generates the multiplicative group, so α^124 = 1 and no earlier
    // power hits 1.
    println!("α^124       = {}", alpha.pow(124));

    // σ : x ↦ x^5 and its inverse τ : x ↦ x^25.
    let a33 = alpha.pow(33);
    println!(
        "σ(α^33)     = {}  (= α^41 = {})",
        a33.frobenius(),
        alpha.pow(41)
    );
    println!(
        "τ(α^41)     = {}  (back to α^33 = {})",
        alpha.pow(41).inv_frobenius(),
        a33
    );
    println!(
        "τ(σ(α^33))  = {}  (round trip)",
        a33.frobenius().inv_frobenius()
    );

    // σ fixes the prime subfield pointwise.
    let two = FieldElement::from_int(&ctx, 2);
    println!("σ(2)        = {}", two.frobenius());

    // Squares via Euler's criterion.
    println!("is_square(α)    = {}", alpha.is_square());
    println!("is_square(α^2)  = {}", alpha.pow(2).is_square());

    // Three input grammars, one canonical output form.
    for s in ["7", "g^41", "[2,2,0]"] {
        let parsed = FieldElement::parse(&ctx, s).unwrap();
        println!("parse {s:>8} -> {parsed}");
    }

    // Division errors are explicit, not panics.
    let zero = FieldElement::zero(&ctx);
    println!("inv(0)          -> {:?}", zero.inv().unwrap_err());
}
