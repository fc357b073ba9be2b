//! Brute-force ground truth: naive point counting over `F_{q^k}` and
//! exact L-polynomial reconstruction for small curves. Everything here is
//! meant to be obviously correct, not fast; it exists to validate the
//! matrix-side congruences end to end.

use std::sync::Arc;

use thiserror::Error;

use crate::curve::HyperellipticCurve;
use crate::gf::{FieldContext, FieldElement};
use crate::poly::Polynomial;

/// Default cap on the number of field elements enumerated per count.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("counting over F_{{q^{k}}} needs {needed} elements, above the bound {bound}")]
    BoundExceeded { k: u32, needed: u128, bound: u64 },
    #[error("internal oracle bug: {0}")]
    Internal(String),
}

/// Projective point counts `N_1..N_g` of the smooth model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointCounts {
    counts: Vec<u64>,
}

impl PointCounts {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }
}

/// The exact numerator `L(T) = Σ bᵢ Tⁱ ∈ Z[T]` of the zeta function,
/// with `b_0 = 1`, the functional equation `b_{2g−i} = q^{g−i} bᵢ`, and
/// every coefficient inside the Weil bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactLPoly {
    coeffs: Vec<i128>,
    q: u64,
}

impl ExactLPoly {
    fn new(coeffs: Vec<i128>, q: u64) -> Result<Self, OracleError> {
        let g = match coeffs.len() {
            n if n >= 3 && n % 2 == 1 => (n - 1) / 2,
            n => {
                return Err(OracleError::Internal(format!(
                    "L must have odd length >= 3, got {n}"
                )))
            }
        };
        if coeffs[0] != 1 {
            return Err(OracleError::Internal("b_0 must be 1".to_string()));
        }
        for i in 0..=g {
            let expect = (q as i128).pow((g - i) as u32) * coeffs[i];
            if coeffs[2 * g - i] != expect {
                return Err(OracleError::Internal(format!(
                    "functional equation fails at i = {i}"
                )));
            }
        }
        for (i, &b) in coeffs.iter().enumerate() {
            let bound = binomial(2 * g, i) * binomial(2 * g, i) * (q as i128).pow(i as u32);
            if b * b > bound {
                return Err(OracleError::Internal(format!(
                    "Weil bound violated at i = {i}: b = {b}"
                )));
            }
        }
        Ok(ExactLPoly { coeffs, q })
    }

    /// Coefficients `b_0..b_{2g}`, low-to-high.
    pub fn coefficients(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn genus(&self) -> usize {
        (self.coeffs.len() - 1) / 2
    }

    /// The mod-p reduction as a polynomial over `F_p`.
    pub fn reduce_mod_p(&self, p: u64) -> Polynomial {
        let ctx = FieldContext::prime(p).expect("odd prime");
        let coeffs = self
            .coeffs
            .iter()
            .map(|&b| FieldElement::from_int(&ctx, b.rem_euclid(p as i128) as i64))
            .collect();
        Polynomial::new(&ctx, coeffs).expect("constants share the context")
    }

    /// Degree of the mod-p reduction (0 for the constant polynomial 1).
    pub fn degree_mod_p(&self, p: u64) -> usize {
        self.reduce_mod_p(p).degree().unwrap_or(0)
    }
}

fn binomial(n: usize, k: usize) -> i128 {
    let mut acc: i128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// An embedding `F_q → F_{q^k}`, realized by sending the generator of the
/// small field to a root of its modulus in the big field (found by
/// deterministic search; the choice does not affect point counts).
pub struct FieldEmbedding {
    base: Arc<FieldContext>,
    ext: Arc<FieldContext>,
    root: FieldElement,
}

impl FieldEmbedding {
    pub fn ext(&self) -> &Arc<FieldContext> {
        &self.ext
    }

    pub fn embed(&self, a: &FieldElement) -> FieldElement {
        assert_eq!(a.context(), &self.base, "element not in the base field");
        let mut acc = FieldElement::zero(&self.ext);
        for &c in a.coeffs().iter().rev() {
            acc = &(&acc * &self.root) + &FieldElement::from_int(&self.ext, c as i64);
        }
        acc
    }

    pub fn embed_poly(&self, f: &Polynomial) -> Polynomial {
        let coeffs = f.coeffs().iter().map(|c| self.embed(c)).collect();
        Polynomial::new(&self.ext, coeffs).expect("embedded into ext")
    }
}

/// Builds `F_{q^k}` as a degree `e·k` extension of `F_p` together with the
/// embedding of `F_q` into it.
pub fn extend_field(base: &Arc<FieldContext>, k: u32) -> Result<FieldEmbedding, OracleError> {
    assert!(k >= 1);
    if k == 1 {
        return Ok(FieldEmbedding {
            base: Arc::clone(base),
            ext: Arc::clone(base),
            root: FieldElement::alpha(base),
        });
    }
    let p = base.p();
    let d = base.e() * k as usize;
    let modulus = first_irreducible(p, d)?;
    let ext = FieldContext::extension(p, &modulus)
        .map_err(|e| OracleError::Internal(format!("tower construction failed: {e}")))?;
    // The small modulus splits in the big field since e | d; scan for a
    // root.
    let small: Vec<i64> = base.modulus().iter().map(|&c| c as i64).collect();
    let small_poly = Polynomial::from_ints(&ext, &small);
    let root = ext
        .elements()
        .find(|z| small_poly.evaluate(z).expect("same field").is_zero())
        .ok_or_else(|| OracleError::Internal("no root of base modulus found".to_string()))?;
    Ok(FieldEmbedding {
        base: Arc::clone(base),
        ext,
        root,
    })
}

fn first_irreducible(p: u64, d: usize) -> Result<Vec<i64>, OracleError> {
    // Odometer over the d low coefficients; the leading one is 1.
    let total = (p as u128).pow(d as u32);
    let mut idx: u128 = 0;
    while idx < total {
        let mut coeffs = Vec::with_capacity(d + 1);
        let mut n = idx;
        for _ in 0..d {
            coeffs.push((n % p as u128) as i64);
            n /= p as u128;
        }
        coeffs.push(1);
        if crate::gf::is_irreducible(p, &coeffs).expect("p validated") {
            return Ok(coeffs);
        }
        idx += 1;
    }
    Err(OracleError::Internal(format!(
        "no irreducible of degree {d} over F_{p}"
    )))
}

/// Counts projective points of the smooth model over `F_{q^k}`: two
/// affine points where `f(x)` is a nonzero square, one where it vanishes,
/// plus one point at infinity for odd-degree `f`, or two (or zero) for
/// even-degree `f` according to whether the leading coefficient is a
/// square in `F_{q^k}`.
pub fn count_points(x: &HyperellipticCurve, k: u32, bound: u64) -> Result<u64, OracleError> {
    let needed = (x.context().q() as u128).pow(k);
    if needed > bound as u128 {
        return Err(OracleError::BoundExceeded { k, needed, bound });
    }
    let emb = extend_field(x.context(), k)?;
    let f = emb.embed_poly(x.f());
    let mut n: u64 = 0;
    for z in emb.ext().elements() {
        let v = f.evaluate(&z).expect("same field");
        if v.is_zero() {
            n += 1;
        } else if v.is_square() {
            n += 2;
        }
    }
    let deg = x.f().degree().expect("validated");
    if deg == 2 * x.genus() + 1 {
        n += 1;
    } else {
        // Degree 2g+2: the two points at infinity are rational iff the
        // leading coefficient is a square; otherwise they are conjugate.
        let lead = f.leading().expect("nonzero");
        debug_assert!(!lead.is_zero());
        if lead.is_square() {
            n += 2;
        }
    }
    debug_assert!(n <= 2 * x.context().q().pow(k) + 2);
    Ok(n)
}

/// `N_1..N_g`.
pub fn point_counts(x: &HyperellipticCurve, bound: u64) -> Result<PointCounts, OracleError> {
    let counts = (1..=x.genus() as u32)
        .map(|k| count_points(x, k, bound))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PointCounts { counts })
}

/// Reconstructs the exact `L(T)` from `N_1..N_g`: with
/// `L(T) = Π (1 − αᵢT)`, the power sums `S_k = Σ αᵢᵏ` satisfy
/// `N_k = q^k + 1 − S_k`; Newton's identities over exact integers give
/// `b_1..b_g`, and the functional equation fills in the rest.
pub fn l_polynomial_exact(x: &HyperellipticCurve, bound: u64) -> Result<ExactLPoly, OracleError> {
    let counts = point_counts(x, bound)?;
    let g = x.genus();
    let q = x.context().q() as i128;
    let s: Vec<i128> = (1..=g)
        .map(|k| q.pow(k as u32) + 1 - counts.counts[k - 1] as i128)
        .collect();
    let b = newton_coefficients(g, q, &s)?;
    ExactLPoly::new(b, x.context().q())
}

fn newton_coefficients(g: usize, q: i128, s: &[i128]) -> Result<Vec<i128>, OracleError> {
    let mut b: Vec<i128> = vec![1];
    for m in 1..=g {
        let acc: i128 = (1..=m).map(|k| s[k - 1] * b[m - k]).sum();
        if acc % m as i128 != 0 {
            return Err(OracleError::Internal(format!(
                "Newton's identity division is inexact at m = {m}"
            )));
        }
        b.push(-acc / m as i128);
    }
    for i in (0..g).rev() {
        b.push(q.pow((g - i) as u32) * b[i]);
    }
    Ok(b)
}

/// Degree of the exact L reduced mod p; the oracle's independent p-rank.
pub fn p_rank_oracle(x: &HyperellipticCurve, bound: u64) -> Result<usize, OracleError> {
    Ok(l_polynomial_exact(x, bound)?.degree_mod_p(x.p()))
}
