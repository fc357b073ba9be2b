//! From a curve equation to its three matrices: the raw coefficient
//! matrix Y, the Cartier–Manin matrix B = Y^τ and the Hasse–Witt matrix
//! A = Yᵀ — and why they must be kept apart.
//!
//! Run with: cargo run --example cartier_manin_matrix

use cartier_manin::curve::parse_curve_spec;
use cartier_manin::semilin::TwistPower;

const F125_SPEC: &str = include_str!("../fixtures/f125.curve");

fn main() {
    let x = parse_curve_spec(F125_SPEC).unwrap();
    println!("{x}");
    println!();

    // f^((p-1)/2) = f² supplies the coefficients c_m; the matrix grabs
    // c_(ip-j) for i, j = 1..g.
    let h = x.half_power();
    println!("f^((p-1)/2) has degree {:?}", h.degree());
    for (i, j) in [(1i64, 1i64), (1, 2), (2, 1), (2, 2)] {
        let m = i * 5 - j;
        println!("  c_{m} (row {i}, col {j}) = {}", h.coefficient(m));
    }
    println!();

    let data = x.cartier_data();
    println!(
        "Y  (coefficient matrix)              = {}",
        data.coefficient
    );
    println!(
        "B  (Cartier–Manin = Y^τ, τ-linear)   = {}",
        data.cartier_manin
    );
    println!("A  (Hasse–Witt   = Yᵀ,  σ-linear)    = {}", data.hasse_witt);
    println!();

    // The two operator matrices are adjoint: adjoint(B, τ) = (A, σ).
    let tau = TwistPower::inv_frobenius(x.context().e());
    let (adj, twist) = data.cartier_manin.adjoint(tau).unwrap();
    println!("adjoint(B, τ) = ({adj}, σ^{})", twist.power());
    println!("          A   =  {}", data.hasse_witt);
    assert_eq!(adj, data.hasse_witt);

    // Mixing them up is not harmless: B and A differ entrywise here.
    assert_ne!(data.cartier_manin, data.hasse_witt);
    println!();
    println!("B ≠ A on this curve: confusing them changes every entry.");
}
