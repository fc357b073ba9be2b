//! Dense univariate polynomials over `F_q`. This is where the
//! coefficients `c_m` of `f(x)^{(p−1)/2}` come from.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::gf::{FieldContext, FieldElement, GfError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("coefficients belong to different field contexts")]
    ContextMismatch,
    #[error("polynomial division by zero")]
    DivisionByZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("cannot parse polynomial `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

impl From<GfError> for PolyError {
    fn from(e: GfError) -> Self {
        match e {
            GfError::ContextMismatch => PolyError::ContextMismatch,
            GfError::DivisionByZero => PolyError::DivisionByZero,
            other => PolyError::Parse {
                input: String::new(),
                reason: other.to_string(),
            },
        }
    }
}

/// A polynomial with coefficients low-to-high. Normalized: the top
/// coefficient is nonzero, and the zero polynomial is the empty sequence
/// (its degree is `None`, standing in for −∞).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ctx: Arc<FieldContext>,
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    pub fn new(ctx: &Arc<FieldContext>, coeffs: Vec<FieldElement>) -> Result<Self, PolyError> {
        if coeffs.iter().any(|c| c.context() != ctx) {
            return Err(PolyError::ContextMismatch);
        }
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        Ok(Polynomial {
            ctx: Arc::clone(ctx),
            coeffs,
        })
    }

    /// Builds a polynomial from prime-subfield integers, low-to-high.
    pub fn from_ints(ctx: &Arc<FieldContext>, coeffs: &[i64]) -> Self {
        let coeffs = coeffs
            .iter()
            .map(|&c| FieldElement::from_int(ctx, c))
            .collect();
        Self::new(ctx, coeffs).expect("constants share the context")
    }

    pub fn zero(ctx: &Arc<FieldContext>) -> Self {
        Polynomial {
            ctx: Arc::clone(ctx),
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: &Arc<FieldContext>) -> Self {
        Self::constant(FieldElement::one(ctx))
    }

    pub fn constant(c: FieldElement) -> Self {
        let ctx = Arc::clone(c.context());
        Self::new(&ctx, vec![c]).expect("single coefficient")
    }

    /// `c · x^n`.
    pub fn monomial(c: FieldElement, n: usize) -> Self {
        let ctx = Arc::clone(c.context());
        if c.is_zero() {
            return Self::zero(&ctx);
        }
        let mut coeffs = vec![FieldElement::zero(&ctx); n + 1];
        coeffs[n] = c;
        Polynomial { ctx, coeffs }
    }

    pub fn context(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// The coefficient `c_m`; zero outside the support (including m < 0).
    pub fn coefficient(&self, m: i64) -> FieldElement {
        if m < 0 || m as usize >= self.coeffs.len() {
            FieldElement::zero(&self.ctx)
        } else {
            self.coeffs[m as usize].clone()
        }
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    fn same_ctx(&self, rhs: &Polynomial) -> Result<(), PolyError> {
        if self.ctx == rhs.ctx {
            Ok(())
        } else {
            Err(PolyError::ContextMismatch)
        }
    }

    pub fn checked_add(&self, rhs: &Polynomial) -> Result<Polynomial, PolyError> {
        self.same_ctx(rhs)?;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = FieldElement::zero(&self.ctx);
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).unwrap_or(&zero);
            let b = rhs.coeffs.get(i).unwrap_or(&zero);
            coeffs.push(a + b);
        }
        Polynomial::new(&self.ctx, coeffs)
    }

    pub fn checked_sub(&self, rhs: &Polynomial) -> Result<Polynomial, PolyError> {
        self.same_ctx(rhs)?;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = FieldElement::zero(&self.ctx);
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).unwrap_or(&zero);
            let b = rhs.coeffs.get(i).unwrap_or(&zero);
            coeffs.push(a - b);
        }
        Polynomial::new(&self.ctx, coeffs)
    }

    pub fn checked_mul(&self, rhs: &Polynomial) -> Result<Polynomial, PolyError> {
        self.same_ctx(rhs)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(Polynomial::zero(&self.ctx));
        }
        let mut coeffs =
            vec![FieldElement::zero(&self.ctx); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::new(&self.ctx, coeffs)
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        let coeffs = self.coeffs.iter().map(|a| a * c).collect();
        Polynomial::new(&self.ctx, coeffs).expect("same context")
    }

    /// Formal derivative with characteristic-p semantics: the derivative
    /// of `x^p` is zero.
    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale_int(i as u64))
            .collect();
        Polynomial::new(&self.ctx, coeffs).expect("same context")
    }

    pub fn evaluate(&self, x: &FieldElement) -> Result<FieldElement, PolyError> {
        if x.context() != &self.ctx {
            return Err(PolyError::ContextMismatch);
        }
        let mut acc = FieldElement::zero(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        Ok(acc)
    }

    /// `self^n` by binary exponentiation with normalization at each step.
    pub fn power(&self, n: u64) -> Polynomial {
        let mut result = Polynomial::one(&self.ctx);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.checked_mul(&base).expect("same context");
            }
            n >>= 1;
            if n > 0 {
                base = base.checked_mul(&base).expect("same context");
            }
        }
        result
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn divmod(&self, d: &Polynomial) -> Result<(Polynomial, Polynomial), PolyError> {
        self.same_ctx(d)?;
        let dd = d.degree().ok_or(PolyError::DivisionByZero)?;
        let lead_inv = d.coeffs[dd].inv().expect("leading coefficient nonzero");
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(&self.ctx);
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let c = &rem.coeffs[dr] * &lead_inv;
            let term = Polynomial::monomial(c, dr - dd);
            quot = quot.checked_add(&term)?;
            rem = rem.checked_sub(&term.checked_mul(d)?)?;
        }
        Ok((quot, rem))
    }

    /// Monic scalar multiple; `None` for the zero polynomial.
    pub fn monic(&self) -> Option<Polynomial> {
        let lead = self.leading()?;
        Some(self.scale(&lead.inv().expect("leading coefficient nonzero")))
    }

    /// Euclidean gcd, normalized monic at each step. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.same_ctx(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let b_monic = b.monic().expect("nonzero");
            let (_, r) = a.divmod(&b_monic)?;
            a = b_monic;
            b = r;
        }
        Ok(a.monic().unwrap_or(a))
    }

    /// True iff the polynomial has no repeated irreducible factor:
    /// `gcd(a, a')` must be constant, and a vanishing derivative means `a`
    /// is a p-th power (hence not squarefree unless constant).
    pub fn is_squarefree(&self) -> Result<bool, PolyError> {
        let deg = self.degree().ok_or(PolyError::ZeroPolynomial)?;
        if deg == 0 {
            return Ok(true);
        }
        let d = self.derivative();
        if d.is_zero() {
            return Ok(false);
        }
        Ok(self.gcd(&d)?.degree() == Some(0))
    }

    /// Entrywise `σ^k` on the coefficients.
    pub fn twist(&self, k: usize) -> Polynomial {
        let coeffs = self.coeffs.iter().map(|c| c.twist(k)).collect();
        Polynomial::new(&self.ctx, coeffs).expect("same context")
    }

    /// Parses `[<elem>,...]`, elements in the field-element grammar,
    /// low-to-high. The empty list is the zero polynomial.
    pub fn parse(ctx: &Arc<FieldContext>, s: &str) -> Result<Polynomial, PolyError> {
        let err = |reason: String| PolyError::Parse {
            input: s.to_string(),
            reason,
        };
        let inner = crate::textutil::strip_brackets(s)
            .ok_or_else(|| err("expected a bracketed coefficient list".to_string()))?;
        let parts = crate::textutil::split_top_level(inner).map_err(err)?;
        let mut coeffs = Vec::with_capacity(parts.len());
        for part in parts {
            coeffs.push(
                FieldElement::parse(ctx, part).map_err(|e| PolyError::Parse {
                    input: s.to_string(),
                    reason: e.to_string(),
                })?,
            );
        }
        Polynomial::new(ctx, coeffs)
    }
}

/// Serialized form: field-element strings low-to-high, e.g.
/// `[[0,1,0],[2,0,0]]`. The zero polynomial is `[]`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl FieldElement {
    /// `n · a` (repeated addition, i.e. multiplication by an integer).
    pub(crate) fn scale_int(&self, n: u64) -> FieldElement {
        let ctx = self.context();
        let scalar = FieldElement::from_int(ctx, (n % ctx.p()) as i64);
        self * &scalar
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f5() -> Arc<FieldContext> {
        FieldContext::prime(5).unwrap()
    }

    fn f125() -> Arc<FieldContext> {
        FieldContext::extension(5, &[3, 3, 0, 1]).unwrap()
    }

    fn f27() -> Arc<FieldContext> {
        FieldContext::extension(3, &[1, -1, 0, 1]).unwrap()
    }

    /// f(x) = x^5 + x^4 + α^92 x^3 + α^18 x^2 + α^56 x from the F_125
    /// fixture curve.
    fn f125_curve_poly() -> Polynomial {
        let ctx = f125();
        Polynomial::parse(&ctx, "[0,g^56,g^18,g^92,1,1]").unwrap()
    }

    fn random_poly(rng: &mut ChaCha8Rng, ctx: &Arc<FieldContext>, max_deg: usize) -> Polynomial {
        let deg = rng.gen_range(0..=max_deg);
        let coeffs = (0..=deg)
            .map(|_| FieldElement::from_index(ctx, rng.gen_range(0..ctx.q())))
            .collect();
        Polynomial::new(ctx, coeffs).unwrap()
    }

    #[test]
    fn derivative_kills_pth_powers() {
        let ctx = f5();
        let x5 = Polynomial::from_ints(&ctx, &[0, 0, 0, 0, 0, 1]);
        assert!(x5.derivative().is_zero());
    }

    #[test]
    fn gcd_is_monic() {
        let ctx = f5();
        let a = Polynomial::from_ints(&ctx, &[-1, 0, 1]); // x^2 - 1
        let b = Polynomial::from_ints(&ctx, &[-1, 1]); // x - 1
        assert_eq!(a.gcd(&b).unwrap(), Polynomial::from_ints(&ctx, &[-1, 1]));
        // ... even when the inputs are scaled.
        let a3 = a.scale(&FieldElement::from_int(&ctx, 3));
        assert_eq!(a3.gcd(&b).unwrap(), Polynomial::from_ints(&ctx, &[-1, 1]));
    }

    #[test]
    fn evaluate_example() {
        let ctx = FieldContext::prime(3).unwrap();
        let f = Polynomial::from_ints(&ctx, &[0, 1, 0, 1]); // x^3 + x
        assert_eq!(
            f.evaluate(&FieldElement::one(&ctx)).unwrap(),
            FieldElement::from_int(&ctx, 2)
        );
    }

    #[test]
    fn power_of_one_is_identity() {
        let f = f125_curve_poly();
        assert_eq!(f.power(1), f);
        assert!(f.power(0).degree() == Some(0));
    }

    #[test]
    fn coefficients_of_f_squared_match_the_f125_matrix_entries() {
        let ctx = f125();
        let f2 = f125_curve_poly().power(2);
        let el = |s: &str| FieldElement::parse(&ctx, s).unwrap();
        assert_eq!(f2.coefficient(4), el("g^41"));
        assert_eq!(f2.coefficient(3), el("g^105"));
        assert_eq!(f2.coefficient(9), el("2"));
        assert_eq!(f2.coefficient(8), el("g^95"));
    }

    #[test]
    fn coefficients_of_f_match_the_f27_matrix_entries() {
        // p = 3 means (p−1)/2 = 1, so the c_m are coefficients of f itself:
        // c_2 = a^2, c_1 = a, c_5 = 1, c_4 = 0.
        let ctx = f27();
        let f = Polynomial::parse(&ctx, "[0,g^1,g^2,0,0,1]").unwrap();
        let f1 = f.power(1);
        let el = |s: &str| FieldElement::parse(&ctx, s).unwrap();
        assert_eq!(f1.coefficient(2), el("g^2"));
        assert_eq!(f1.coefficient(1), el("g^1"));
        assert_eq!(f1.coefficient(5), el("1"));
        assert!(f1.coefficient(4).is_zero());
    }

    #[test]
    fn coefficient_out_of_range_is_zero() {
        let ctx = f5();
        let a = Polynomial::from_ints(&ctx, &[1, 0, 1]); // x^2 + 1
        assert!(a.coefficient(1).is_zero());
        assert!(a.coefficient(9).is_zero());
        assert!(a.coefficient(-3).is_zero());
    }

    #[test]
    fn squarefree_examples() {
        let ctx = f5();
        let x2 = Polynomial::from_ints(&ctx, &[0, 0, 1]);
        assert!(!x2.is_squarefree().unwrap());
        let x5 = Polynomial::from_ints(&ctx, &[0, 0, 0, 0, 0, 1]);
        assert!(!x5.is_squarefree().unwrap()); // derivative 0, p-th power
        assert!(f125_curve_poly().is_squarefree().unwrap());
        assert_eq!(
            Polynomial::zero(&ctx).is_squarefree().unwrap_err(),
            PolyError::ZeroPolynomial
        );
        // Nonzero constants are squarefree.
        assert!(Polynomial::from_ints(&ctx, &[2]).is_squarefree().unwrap());
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = Polynomial::from_ints(&f5(), &[1, 1]);
        let b = Polynomial::from_ints(&f125(), &[1, 1]);
        assert_eq!(a.checked_add(&b).unwrap_err(), PolyError::ContextMismatch);
        assert_eq!(a.checked_mul(&b).unwrap_err(), PolyError::ContextMismatch);
        assert_eq!(a.gcd(&b).unwrap_err(), PolyError::ContextMismatch);
        let x = FieldElement::one(&f125());
        assert_eq!(a.evaluate(&x).unwrap_err(), PolyError::ContextMismatch);
    }

    #[test]
    fn power_is_a_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let ctx = f27();
        for _ in 0..50 {
            let a = random_poly(&mut rng, &ctx, 4);
            let m = rng.gen_range(0..4u64);
            let n = rng.gen_range(0..4u64);
            assert_eq!(a.power(m + n), a.power(m).checked_mul(&a.power(n)).unwrap());
        }
    }

    #[test]
    fn coefficient_extraction_is_linear() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let ctx = f125();
        for _ in 0..50 {
            let a = random_poly(&mut rng, &ctx, 6);
            let b = random_poly(&mut rng, &ctx, 6);
            let s = a.checked_add(&b).unwrap();
            for m in -1..8i64 {
                assert_eq!(s.coefficient(m), &a.coefficient(m) + &b.coefficient(m));
            }
        }
    }

    #[test]
    fn degrees_add_under_multiplication() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let ctx = f5();
        for _ in 0..50 {
            let a = random_poly(&mut rng, &ctx, 5);
            let b = random_poly(&mut rng, &ctx, 5);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            assert_eq!(
                a.checked_mul(&b).unwrap().degree(),
                Some(a.degree().unwrap() + b.degree().unwrap())
            );
        }
    }

    #[test]
    fn freshmans_dream() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for ctx in [f5(), f27(), f125()] {
            let p = ctx.p();
            for _ in 0..30 {
                let a = random_poly(&mut rng, &ctx, 4);
                let ap = a.power(p);
                let expect_deg = a.degree().map(|d| d * p as usize);
                assert_eq!(ap.degree(), expect_deg);
                for (i, c) in a.coeffs().iter().enumerate() {
                    assert_eq!(ap.coefficient((i * p as usize) as i64), c.pow(p));
                }
                // Everything off the p-grid vanishes.
                if let Some(d) = ap.degree() {
                    for m in 0..=d {
                        if m % p as usize != 0 {
                            assert!(ap.coefficient(m as i64).is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parse_display_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let ctx = f27();
        for _ in 0..30 {
            let a = random_poly(&mut rng, &ctx, 5);
            assert_eq!(Polynomial::parse(&ctx, &a.to_string()).unwrap(), a);
        }
        assert_eq!(
            Polynomial::parse(&ctx, "[]").unwrap(),
            Polynomial::zero(&ctx)
        );
    }

    #[test]
    fn divmod_reconstructs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let ctx = f5();
        for _ in 0..50 {
            let a = random_poly(&mut rng, &ctx, 6);
            let d = random_poly(&mut rng, &ctx, 3);
            if d.is_zero() {
                assert_eq!(a.divmod(&d).unwrap_err(), PolyError::DivisionByZero);
                continue;
            }
            let (q, r) = a.divmod(&d).unwrap();
            let back = q.checked_mul(&d).unwrap().checked_add(&r).unwrap();
            assert_eq!(back, a);
            assert!(r.degree() < d.degree() || r.is_zero());
        }
    }
}
