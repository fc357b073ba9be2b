//! Acceptance suite: every pinned fixture and tolerance in one place.
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion PASS lines.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cartier_manin::cli;
use cartier_manin::curve::{parse_curve_spec, HyperellipticCurve};
use cartier_manin::gf::{FieldContext, FieldElement};
use cartier_manin::invariants;
use cartier_manin::oracle;
use cartier_manin::poly::Polynomial;
use cartier_manin::semilin::{Matrix, TwistPower};

const F125_SPEC: &str = include_str!("../fixtures/f125.curve");
const F27_SPEC: &str = include_str!("../fixtures/f27.curve");
const G1_F3_SPEC: &str = include_str!("../fixtures/ss_genus1_f3.curve");

fn pass(criterion: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed < budget,
        "{criterion}: runtime {elapsed:?} exceeded the budget {budget:?}"
    );
    println!("acceptance {criterion}: PASS ({elapsed:?})");
}

fn fp_poly(p: u64, coeffs: &[i64]) -> Polynomial {
    Polynomial::from_ints(&FieldContext::prime(p).unwrap(), coeffs)
}

#[test]
fn criterion_1_f125_fixture() {
    let started = Instant::now();
    let x = parse_curve_spec(F125_SPEC).unwrap();
    let ctx = x.context();
    let mat = |s: &str| Matrix::parse(ctx, s).unwrap();

    let y = x.coefficient_matrix();
    assert_eq!(y, mat("[[g^41,g^105],[2,g^95]]"));

    let y_iter2 = y.twisted_product(TwistPower::frobenius(3), 2).unwrap();
    assert_eq!(y_iter2, mat("[[g^32,g^104],[g^22,g^94]]"));
    assert_eq!(y_iter2.rank(), 1);

    let b = x.cartier_manin();
    assert_eq!(b, mat("[[g^33,g^21],[2,g^19]]"));

    assert_eq!(x.hasse_witt(), mat("[[g^41,2],[g^105,g^95]]"));

    let b_iter2 = b.twisted_product(TwistPower::inv_frobenius(3), 2).unwrap();
    assert!(b_iter2.is_zero());

    assert_eq!(invariants::p_rank(&x).unwrap(), 0);

    pass(
        "criterion 1 (F_125 worked-example fixture)",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_2_f27_fixture() {
    let started = Instant::now();
    let x = parse_curve_spec(F27_SPEC).unwrap();
    let ctx = x.context();

    assert_eq!(
        x.coefficient_matrix(),
        Matrix::parse(ctx, "[[g^2,g^1],[1,0]]").unwrap()
    );

    let kappa = invariants::naive_yui_product(&x).char_poly().unwrap();
    assert_eq!(kappa, Polynomial::from_ints(ctx, &[1, 1, 1]));

    assert_eq!(
        invariants::chi_mod_p(&x).unwrap(),
        fp_poly(3, &[0, 0, 1, 0, 1])
    );
    assert_eq!(
        invariants::l_poly_mod_p(&x).unwrap(),
        fp_poly(3, &[1, 0, 1])
    );

    let demo = cli::cmd_pitfall(F27_SPEC).unwrap();
    assert_eq!(demo.verdict, cli::Verdict::Differ);

    pass(
        "criterion 2 (F_27 wrong-product fixture)",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_3_oracle_end_to_end() {
    let started = Instant::now();
    let bound = 1_000_000;

    let x125 = parse_curve_spec(F125_SPEC).unwrap();
    let l125 = oracle::l_polynomial_exact(&x125, bound).unwrap();
    assert_eq!(l125.coefficients(), &[1, 0, 250, 0, 15625]);
    assert_eq!(
        l125.reduce_mod_p(5),
        invariants::l_poly_mod_p(&x125).unwrap()
    );

    let x27 = parse_curve_spec(F27_SPEC).unwrap();
    let l27 = oracle::l_polynomial_exact(&x27, bound).unwrap();
    assert_eq!(l27.coefficients(), &[1, 6, 52, 162, 729]);
    assert_eq!(l27.reduce_mod_p(3), invariants::l_poly_mod_p(&x27).unwrap());

    pass(
        "criterion 3 (oracle end-to-end)",
        started,
        Duration::from_secs(10),
    );
}

/// The six base fields of the randomized congruence suite.
fn congruence_contexts() -> Vec<Arc<FieldContext>> {
    vec![
        FieldContext::prime(3).unwrap(),
        FieldContext::prime(5).unwrap(),
        FieldContext::prime(7).unwrap(),
        FieldContext::extension(3, &[1, 0, 1]).unwrap(),
        FieldContext::extension(5, &[2, 0, 1]).unwrap(),
        FieldContext::extension(3, &[1, 2, 0, 1]).unwrap(),
    ]
}

fn random_curve(rng: &mut ChaCha8Rng, ctx: &Arc<FieldContext>, genus: usize) -> HyperellipticCurve {
    loop {
        let deg = 2 * genus + 1 + rng.gen_range(0..=1usize);
        let mut coeffs: Vec<FieldElement> = (0..=deg)
            .map(|_| FieldElement::from_index(ctx, rng.gen_range(0..ctx.q())))
            .collect();
        if coeffs[deg].is_zero() {
            coeffs[deg] = FieldElement::one(ctx);
        }
        let f = Polynomial::new(ctx, coeffs).unwrap();
        if let Ok(x) = HyperellipticCurve::new(ctx, f, genus) {
            return x;
        }
    }
}

#[test]
fn criterion_4_randomized_congruence_suite() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x4C0);
    let contexts = congruence_contexts();
    let bound = 1_000_000;
    let mut checked = 0;
    while checked < 50 {
        let ctx = &contexts[rng.gen_range(0..contexts.len())];
        let genus = rng.gen_range(1..=2usize);
        let x = random_curve(&mut rng, ctx, genus);

        let l_matrix = invariants::l_poly_mod_p(&x).unwrap();
        let l_exact = oracle::l_polynomial_exact(&x, bound).unwrap();
        assert_eq!(
            l_exact.reduce_mod_p(x.p()),
            l_matrix,
            "L congruence failed on {x}"
        );

        let p_rank = invariants::p_rank(&x).unwrap();
        assert_eq!(
            p_rank,
            oracle::p_rank_oracle(&x, bound).unwrap(),
            "p-rank mismatch on {x}"
        );

        let m = invariants::frobenius_iterate(&x);
        let n = invariants::cartier_iterate(&x);
        assert_eq!(
            m.char_poly().unwrap(),
            n.char_poly().unwrap(),
            "iterate char polys differ on {x}"
        );
        checked += 1;
    }
    assert_eq!(checked, 50);
    pass(
        "criterion 4 (randomized congruence suite, 50 curves)",
        started,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_5_property_suites() {
    let started = Instant::now();

    // Suite A: the adjoint is an involution on (matrix, twist) pairs.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5A);
    let contexts = congruence_contexts();
    for _ in 0..100 {
        let ctx = &contexts[rng.gen_range(0..contexts.len())];
        let n = rng.gen_range(1..=3usize);
        let a = random_matrix(&mut rng, ctx, n);
        let t = TwistPower::new(rng.gen_range(0..ctx.e() as i64), ctx.e());
        let (adj, dt) = a.adjoint(t).unwrap();
        let (back, bt) = adj.adjoint(dt).unwrap();
        assert_eq!((back, bt), (a, t));
    }

    // Suite B: twisted-product composition law for r + s <= 5.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5B);
    for _ in 0..100 {
        let ctx = &contexts[rng.gen_range(0..contexts.len())];
        let n = rng.gen_range(1..=3usize);
        let a = random_matrix(&mut rng, ctx, n);
        let t = TwistPower::new(rng.gen_range(0..ctx.e() as i64), ctx.e());
        let r = rng.gen_range(1..=4usize);
        let s = rng.gen_range(1..=5 - r);
        let whole = a.twisted_product(t, r + s).unwrap();
        let left = a.twisted_product(t, r).unwrap();
        let right = a.twisted_product(t, s).unwrap().apply_twist(t.repeat(r));
        assert_eq!(whole, left.mul(&right).unwrap());
    }

    // Suite C: rank of twisted iterates is invariant under twisted
    // change of basis.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5C);
    for _ in 0..100 {
        let ctx = &contexts[rng.gen_range(0..contexts.len())];
        let n = rng.gen_range(1..=3usize);
        let a = random_matrix(&mut rng, ctx, n);
        let s = random_invertible(&mut rng, ctx, n);
        let t = TwistPower::new(rng.gen_range(0..ctx.e() as i64), ctx.e());
        let r = rng.gen_range(1..=4usize);
        let lhs = a
            .change_basis(&s, t)
            .unwrap()
            .twisted_product(t, r)
            .unwrap()
            .rank();
        assert_eq!(lhs, a.twisted_product(t, r).unwrap().rank());
    }

    // Suite D: σ/τ round trips on elements.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5D);
    for _ in 0..100 {
        let ctx = &contexts[rng.gen_range(0..contexts.len())];
        let a = FieldElement::from_index(ctx, rng.gen_range(0..ctx.q()));
        assert_eq!(a.frobenius().inv_frobenius(), a);
        assert_eq!(a.inv_frobenius().frobenius(), a);
        assert_eq!(a.twist(ctx.e()), a);
    }

    // Suite E: the direct n-th iterate formula agrees with the twisted
    // product for n <= 3 over F_3, F_5, F_9.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5E);
    let small: Vec<Arc<FieldContext>> = vec![
        FieldContext::prime(3).unwrap(),
        FieldContext::prime(5).unwrap(),
        FieldContext::extension(3, &[1, 0, 1]).unwrap(),
    ];
    for _ in 0..100 {
        let ctx = &small[rng.gen_range(0..small.len())];
        let genus = rng.gen_range(1..=2usize);
        let x = random_curve(&mut rng, ctx, genus);
        let n = rng.gen_range(1..=3u32);
        let direct = x.iterated_cartier_direct(n).unwrap();
        let tau = TwistPower::inv_frobenius(ctx.e());
        let product = x.cartier_manin().twisted_product(tau, n as usize).unwrap();
        assert_eq!(direct, product, "direct iterate mismatch on {x}, n = {n}");
    }

    pass(
        "criterion 5 (five property suites, 100 cases each)",
        started,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_6_superspecial_vs_supersingular() {
    let started = Instant::now();
    let x = parse_curve_spec(F125_SPEC).unwrap();

    assert!(!invariants::is_superspecial(&x));
    assert_eq!(invariants::p_rank(&x).unwrap(), 0);
    let l = oracle::l_polynomial_exact(&x, 1_000_000).unwrap();
    // (1 + 125T²)².
    assert_eq!(l.coefficients(), &[1, 0, 250, 0, 15625]);

    // For contrast: a curve whose Cartier matrix vanishes outright.
    let g1 = parse_curve_spec(G1_F3_SPEC).unwrap();
    assert!(invariants::is_superspecial(&g1));
    assert_eq!(invariants::p_rank(&g1).unwrap(), 0);

    pass(
        "criterion 6 (superspecial vs supersingular distinction)",
        started,
        Duration::from_secs(10),
    );
}

fn random_matrix(rng: &mut ChaCha8Rng, ctx: &Arc<FieldContext>, n: usize) -> Matrix {
    let entries = (0..n * n)
        .map(|_| FieldElement::from_index(ctx, rng.gen_range(0..ctx.q())))
        .collect();
    Matrix::new(ctx, n, n, entries).unwrap()
}

fn random_invertible(rng: &mut ChaCha8Rng, ctx: &Arc<FieldContext>, n: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, ctx, n);
        if !m.det().unwrap().is_zero() {
            return m;
        }
    }
}
