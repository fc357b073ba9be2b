//! The brute-force oracle: count points over F_{q^k}, reconstruct the
//! exact L-polynomial with Newton's identities, and confirm the mod-p
//! congruence with the matrix side.
//!
//! Run with: cargo run --example point_counting_oracle

use cartier_manin::cli::pretty_fp_poly;
use cartier_manin::curve::parse_curve_spec;
use cartier_manin::invariants;
use cartier_manin::oracle;

const SPECS: [(&str, &str); 3] = [
    (
        "F_3 elliptic",
        include_str!("../fixtures/ss_genus1_f3.curve"),
    ),
    ("F_27 genus-2", include_str!("../fixtures/f27.curve")),
    ("F_125 genus-2", include_str!("../fixtures/f125.curve")),
];

fn main() {
    let bound = 1_000_000;
    for (label, spec) in SPECS {
        let x = parse_curve_spec(spec).unwrap();
        println!("=== {label} ===");
        println!("{x}");

        let counts = oracle::point_counts(&x, bound).unwrap();
        for (k, n) in counts.counts().iter().enumerate() {
            let q = x.context().q();
            println!("  N_{} (over F_{}) = {n}", k + 1, q.pow(k as u32 + 1));
        }

        let l = oracle::l_polynomial_exact(&x, bound).unwrap();
        println!("  exact L(T) coefficients = {:?}", l.coefficients());
        println!("  oracle p-rank           = {}", l.degree_mod_p(x.p()));

        // The central congruence: det(I − M·T) ≡ L(T) mod p.
        let matrix_side = invariants::l_poly_mod_p(&x).unwrap();
        let oracle_side = l.reduce_mod_p(x.p());
        assert_eq!(matrix_side, oracle_side);
        println!(
            "  L(T) mod p = {}  (matrix side == oracle side)",
            pretty_fp_poly(&matrix_side)
        );
        assert_eq!(
            invariants::p_rank(&x).unwrap(),
            oracle::p_rank_oracle(&x, bound).unwrap()
        );
        println!();
    }
    println!("all congruences verified.");
}
