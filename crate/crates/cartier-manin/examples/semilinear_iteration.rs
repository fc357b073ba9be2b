//! Iterating semilinear operators: the twisted product
//! A·A^ε·A^{ε²}⋯A^{ε^{r−1}}, twisted change of basis, and the direct
//! formula for the n-th Cartier iterate.
//!
//! Run with: cargo run --example semilinear_iteration

use cartier_manin::curve::parse_curve_spec;
use cartier_manin::semilin::TwistPower;

const F125_SPEC: &str = include_str!("../fixtures/f125.curve");

fn main() {
    let x = parse_curve_spec(F125_SPEC).unwrap();
    let e = x.context().e();
    let sigma = TwistPower::frobenius(e);
    let tau = TwistPower::inv_frobenius(e);

    let y = x.coefficient_matrix();
    let b = x.cartier_manin();

    // The raw coefficient matrix iterated with σ-twists: nonzero, rank 1.
    let y2 = y.twisted_product(sigma, 2).unwrap();
    println!("Y·Y^σ          = {y2}");
    println!("rank(Y·Y^σ)    = {}", y2.rank());
    println!();

    // The actual Cartier operator iterated (τ-twists): identically zero.
    // Same starting entries, opposite twist direction, opposite answer.
    let b2 = b.twisted_product(tau, 2).unwrap();
    println!("B·B^τ          = {b2}");
    println!("rank(B·B^τ)    = {}", b2.rank());
    println!();

    // The direct coefficient formula for the n-th iterate (p^n-th roots
    // of coefficients of f^((p^n-1)/2)) agrees with the twisted product.
    let direct = x.iterated_cartier_direct(2).unwrap();
    println!("direct 2nd-iterate formula = {direct}");
    assert_eq!(direct, b2);
    println!();

    // Twisted change of basis S⁻¹·B·S^τ represents the same operator:
    // iterate ranks are unchanged.
    let ctx = x.context();
    let s = cartier_manin::semilin::Matrix::parse(ctx, "[[1,g^7],[0,g^3]]").unwrap();
    let b_new = b.change_basis(&s, tau).unwrap();
    println!("B in another basis          = {b_new}");
    println!(
        "rank of 2-fold iterate there = {}",
        b_new.twisted_product(tau, 2).unwrap().rank()
    );

    // The composition law: a 3-fold product splits as 2-fold times a
    // twisted 1-fold.
    let whole = b.twisted_product(tau, 3).unwrap();
    let split = b
        .twisted_product(tau, 2)
        .unwrap()
        .mul(&b.apply_twist(tau.repeat(2)))
        .unwrap();
    assert_eq!(whole, split);
    println!();
    println!("composition law holds: [C^3] = [C^2] · [C]^(τ^2)");
}
