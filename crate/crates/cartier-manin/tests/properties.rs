//! Cross-module randomized invariants that don't fit a single module's
//! unit tests. Seeds are fixed; failures are reproducible.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cartier_manin::curve::HyperellipticCurve;
use cartier_manin::gf::{FieldContext, FieldElement};
use cartier_manin::invariants;
use cartier_manin::oracle;
use cartier_manin::poly::Polynomial;
use cartier_manin::semilin::TwistPower;

fn contexts() -> Vec<Arc<FieldContext>> {
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

/// The construction relations hold entrywise on random curves: B is the
/// τ-twist of Y, A is its transpose, and both agree with the defining
/// coefficient extractions.
#[test]
fn matrix_constructions_agree_with_coefficient_extractions() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let contexts = contexts();
    for _ in 0..40 {
        let ctx = &contexts[rng.gen_range(0..contexts.len())];
        let genus = rng.gen_range(1..=2usize);
        let x = random_curve(&mut rng, ctx, genus);
        let data = x.cartier_data();
        let h = x.half_power();
        let p = x.p() as i64;
        for i in 1..=genus as i64 {
            for j in 1..=genus as i64 {
                let c = h.coefficient(i * p - j);
                let (iu, ju) = (i as usize - 1, j as usize - 1);
                assert_eq!(data.coefficient.at(iu, ju), &c);
                assert_eq!(data.cartier_manin.at(iu, ju), &c.inv_frobenius());
                assert_eq!(data.hasse_witt.at(ju, iu), &c);
            }
        }
    }
}

/// adjoint(B, τ) = (A, σ) for random curves, not just fixtures.
#[test]
fn cartier_and_frobenius_matrices_are_adjoint() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let contexts = contexts();
    for _ in 0..40 {
        let ctx = &contexts[rng.gen_range(0..contexts.len())];
        let genus = rng.gen_range(1..=2usize);
        let x = random_curve(&mut rng, ctx, genus);
        let tau = TwistPower::inv_frobenius(ctx.e());
        let (adj, t) = x.cartier_manin().adjoint(tau).unwrap();
        assert_eq!(adj, x.hasse_witt());
        assert_eq!(t, TwistPower::frobenius(ctx.e()));
    }
}

/// The three p-rank routes agree: rank of the stabilized iterate, the
/// degree of L mod p (both inside `p_rank`), and the rank of the
/// (g·e)-fold twisted product.
#[test]
fn p_rank_routes_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    let contexts = contexts();
    for _ in 0..40 {
        let ctx = &contexts[rng.gen_range(0..contexts.len())];
        let genus = rng.gen_range(1..=2usize);
        let x = random_curve(&mut rng, ctx, genus);
        let rank = invariants::p_rank(&x).unwrap();
        assert_eq!(
            rank,
            invariants::l_poly_mod_p(&x).unwrap().degree().unwrap_or(0)
        );
        let e = ctx.e();
        let long = x
            .hasse_witt()
            .twisted_product(TwistPower::frobenius(e), x.genus() * e)
            .unwrap();
        assert_eq!(rank, long.rank());
    }
}

/// A vanishing Cartier matrix forces p-rank zero (all iterates vanish).
#[test]
fn superspecial_implies_p_rank_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    let contexts = contexts();
    let mut superspecial_seen = 0;
    for _ in 0..200 {
        let ctx = &contexts[rng.gen_range(0..contexts.len())];
        let genus = rng.gen_range(1..=2usize);
        let x = random_curve(&mut rng, ctx, genus);
        if invariants::is_superspecial(&x) {
            superspecial_seen += 1;
            assert_eq!(invariants::p_rank(&x).unwrap(), 0);
        }
    }
    // y² = x³ + x over F_3 guarantees at least one positive case even if
    // the random draw above found none.
    let ctx = FieldContext::prime(3).unwrap();
    let x = HyperellipticCurve::new(&ctx, Polynomial::from_ints(&ctx, &[0, 1, 0, 1]), 1).unwrap();
    assert!(invariants::is_superspecial(&x));
    assert_eq!(invariants::p_rank(&x).unwrap(), 0);
    let _ = superspecial_seen;
}

/// The reciprocal relation χ(T) = T^{2g} · L(1/T) holds coefficientwise
/// on random curves.
#[test]
fn chi_and_l_satisfy_the_reciprocal_relation() {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    let contexts = contexts();
    for _ in 0..40 {
        let ctx = &contexts[rng.gen_range(0..contexts.len())];
        let genus = rng.gen_range(1..=2usize);
        let x = random_curve(&mut rng, ctx, genus);
        let z = invariants::mod_p_zeta(&x).unwrap();
        let g2 = 2 * x.genus();
        assert_eq!(z.chi_mod_p.degree(), Some(g2));
        for i in 0..=g2 {
            assert_eq!(
                z.chi_mod_p.coefficient(i as i64),
                z.l_mod_p.coefficient((g2 - i) as i64)
            );
        }
    }
}

/// Point counts are invariant under the F_q-isomorphism x ↦ ux + v.
#[test]
fn counts_are_isomorphism_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    let contexts = contexts();
    for _ in 0..10 {
        let ctx = &contexts[rng.gen_range(0..contexts.len())];
        let genus = rng.gen_range(1..=2usize);
        let x = random_curve(&mut rng, ctx, genus);
        let u = loop {
            let u = FieldElement::from_index(ctx, rng.gen_range(0..ctx.q()));
            if !u.is_zero() {
                break u;
            }
        };
        let v = FieldElement::from_index(ctx, rng.gen_range(0..ctx.q()));
        let y = x.substitute_linear(&u, &v).unwrap();
        for k in 1..=genus as u32 {
            assert_eq!(
                oracle::count_points(&x, k, 1_000_000).unwrap(),
                oracle::count_points(&y, k, 1_000_000).unwrap()
            );
        }
    }
}
