//! p-torsion and mod-p zeta invariants derived from the matrices.
//!
//! Over `F_q` with `q = p^e`, the e-fold iterates
//!
//! ```text
//! M = A · A^σ ⋯ A^{σ^{e−1}}      (Frobenius side, from the Hasse–Witt A)
//! N = B · B^τ ⋯ B^{τ^{e−1}}      (Cartier side, from the Cartier–Manin B)
//! ```
//!
//! are plain `F_q`-linear and satisfy `det(I − M·T) ≡ L(T) mod p`, where
//! `L` is the numerator of the zeta function. The determinant is computed
//! symbolically over `F_q[T]` and every coefficient is checked to land in
//! the prime subfield: a wrong twist order typically fails that check
//! immediately.

use std::sync::Arc;

use thiserror::Error;

use crate::curve::HyperellipticCurve;
use crate::gf::{FieldContext, FieldElement};
use crate::poly::Polynomial;
use crate::semilin::{poly_det, Matrix, TwistPower};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantsError {
    #[error(
        "determinant coefficient {value} of T^{index} lies outside F_{p}; \
         this indicates a twist-order bug"
    )]
    CoefficientOutsidePrimeField { index: usize, value: String, p: u64 },
    #[error("self-check failed: {0}")]
    SelfCheck(String),
}

/// Mod-p zeta data: `L(T) mod p` (constant term 1, degree ≤ g) and
/// `χ(T) mod p` (degree 2g), tied by the reciprocal relation
/// `χ(T) = T^{2g} · L(1/T)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPZeta {
    pub l_mod_p: Polynomial,
    pub chi_mod_p: Polynomial,
}

/// `M = A · A^σ ⋯ A^{σ^{e−1}}`: the matrix of the `F_q`-linear e-fold
/// Frobenius iterate.
pub fn frobenius_iterate(x: &HyperellipticCurve) -> Matrix {
    let e = x.context().e();
    x.hasse_witt()
        .twisted_product(TwistPower::frobenius(e), e)
        .expect("square matrix, e >= 1")
}

/// `N = B · B^τ ⋯ B^{τ^{e−1}}`: the matrix of the e-fold Cartier iterate.
pub fn cartier_iterate(x: &HyperellipticCurve) -> Matrix {
    let e = x.context().e();
    x.cartier_manin()
        .twisted_product(TwistPower::inv_frobenius(e), e)
        .expect("square matrix, e >= 1")
}

/// `L(T) mod p = det(I − M·T)`, as a polynomial over `F_p`.
pub fn l_poly_mod_p(x: &HyperellipticCurve) -> Result<Polynomial, InvariantsError> {
    let m = frobenius_iterate(x);
    let det = det_one_minus_mt(&m);
    descend_to_prime_field(&det, x.context())
}

/// `χ(T) mod p = (−1)^g T^g det(M − T·I) = T^g · char_poly(M)`, over `F_p`.
pub fn chi_mod_p(x: &HyperellipticCurve) -> Result<Polynomial, InvariantsError> {
    let m = frobenius_iterate(x);
    let cp = m.char_poly().expect("square");
    let shifted = cp
        .checked_mul(&Polynomial::monomial(
            FieldElement::one(x.context()),
            x.genus(),
        ))
        .expect("same context");
    descend_to_prime_field(&shifted, x.context())
}

pub fn mod_p_zeta(x: &HyperellipticCurve) -> Result<ModPZeta, InvariantsError> {
    Ok(ModPZeta {
        l_mod_p: l_poly_mod_p(x)?,
        chi_mod_p: chi_mod_p(x)?,
    })
}

/// The p-rank: the stable rank of the linearized Frobenius, computed as
/// `rank(M^g)` and cross-checked against `deg(L mod p)`.
pub fn p_rank(x: &HyperellipticCurve) -> Result<usize, InvariantsError> {
    let m = frobenius_iterate(x);
    let stable = m.matrix_power(x.genus()).expect("square").rank();
    let l = l_poly_mod_p(x)?;
    let by_degree = l.degree().unwrap_or(0);
    if stable != by_degree {
        return Err(InvariantsError::SelfCheck(format!(
            "rank(M^g) = {stable} but deg(L mod p) = {by_degree}"
        )));
    }
    Ok(stable)
}

/// The a-number `g − rank(B)`, the corank of the Cartier operator.
pub fn a_number(x: &HyperellipticCurve) -> usize {
    x.genus() - x.cartier_manin().rank()
}

/// True iff the Cartier operator vanishes identically, i.e. the Jacobian
/// is superspecial. Strictly stronger than supersingularity.
pub fn is_superspecial(x: &HyperellipticCurve) -> bool {
    x.cartier_manin().is_zero()
}

/// The classical *incorrect* product `Y · Y^σ ⋯ Y^{σ^{e−1}}`, built from
/// the raw coefficient matrix as if it were a Hasse–Witt matrix. Kept as
/// a first-class diagnostic: its characteristic polynomial generally
/// disagrees with the true `χ mod p`. Only the pitfall demo should emit
/// it.
pub fn naive_yui_product(x: &HyperellipticCurve) -> Matrix {
    let e = x.context().e();
    x.coefficient_matrix()
        .twisted_product(TwistPower::frobenius(e), e)
        .expect("square matrix, e >= 1")
}

/// `det(I − M·T)` over `F_q[T]`.
fn det_one_minus_mt(m: &Matrix) -> Polynomial {
    let ctx = m.context();
    let n = m.rows();
    let t = Polynomial::monomial(FieldElement::one(ctx), 1);
    let mut grid = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let mt = t.scale(m.at(i, j));
            let cell = if i == j {
                Polynomial::one(ctx).checked_sub(&mt).expect("same context")
            } else {
                Polynomial::zero(ctx)
                    .checked_sub(&mt)
                    .expect("same context")
            };
            row.push(cell);
        }
        grid.push(row);
    }
    poly_det(ctx, &grid)
}

/// Re-expresses a polynomial over `F_q` whose coefficients all lie in the
/// prime subfield as a polynomial over `F_p`.
fn descend_to_prime_field(
    poly: &Polynomial,
    ctx: &Arc<FieldContext>,
) -> Result<Polynomial, InvariantsError> {
    let p = ctx.p();
    let ctx_p = FieldContext::prime(p).expect("p validated at construction");
    let mut coeffs = Vec::with_capacity(poly.coeffs().len());
    for (i, c) in poly.coeffs().iter().enumerate() {
        let Some(v) = c.in_prime_subfield() else {
            return Err(InvariantsError::CoefficientOutsidePrimeField {
                index: i,
                value: c.to_string(),
                p,
            });
        };
        coeffs.push(FieldElement::from_int(&ctx_p, v as i64));
    }
    Ok(Polynomial::new(&ctx_p, coeffs).expect("constants share the context"))
}
