//! Arithmetic in `F_p` and `F_{p^e}` for odd `p`, including the Frobenius
//! automorphism `σ : x ↦ x^p` and its inverse `τ : x ↦ x^{p^{e−1}}`.
//!
//! Elements are dense coefficient vectors in the power basis of `α`, the
//! residue class of the modulus variable; no discrete-log tables are kept.
//! A [`FieldContext`] is immutable and shared behind an [`Arc`], so any
//! number of computations can use it concurrently.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest characteristic we accept. Keeps `(p−1)² + p` well inside `u64`
/// during coefficient arithmetic.
const MAX_P: u64 = 1 << 31;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("characteristic must be an odd prime, got {0}")]
    BadCharacteristic(u64),
    #[error("modulus must be monic of degree >= 2 over F_p")]
    BadModulus,
    #[error("modulus is reducible over F_{0}")]
    ReducibleModulus(u64),
    #[error("field F_{p}^{e} is too large for this implementation")]
    FieldTooLarge { p: u64, e: usize },
    #[error("division by zero field element")]
    DivisionByZero,
    #[error("operands belong to different field contexts")]
    ContextMismatch,
    #[error("cannot parse field element `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

/// The field `F_{p^e} = F_p[x]/(m)` for an odd prime `p` and a monic
/// irreducible `m` of degree `e`. For `e = 1` the modulus is fixed as the
/// monic degree-1 polynomial `x`, so prime fields run through the same
/// code path with length-1 coefficient vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldContext {
    p: u64,
    e: usize,
    /// Monic, length `e + 1`, coefficients low-to-high, reduced mod `p`.
    modulus: Vec<u64>,
    q: u64,
}

impl FieldContext {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Arc<Self>, GfError> {
        validate_characteristic(p)?;
        Ok(Arc::new(FieldContext {
            p,
            e: 1,
            modulus: vec![0, 1],
            q: p,
        }))
    }

    /// An extension field `F_p[x]/(modulus)`. The modulus is given
    /// low-to-high, must reduce to a monic polynomial of degree >= 2 and
    /// must be irreducible over `F_p`. (Use [`FieldContext::prime`] for
    /// degree 1.)
    pub fn extension(p: u64, modulus: &[i64]) -> Result<Arc<Self>, GfError> {
        validate_characteristic(p)?;
        let mut m: Vec<u64> = modulus.iter().map(|&c| reduce_int(c, p)).collect();
        fp::trim(&mut m);
        let e = match fp::degree(&m) {
            Some(e) if e >= 2 => e,
            _ => return Err(GfError::BadModulus),
        };
        if m[e] != 1 {
            return Err(GfError::BadModulus);
        }
        if !fp::is_irreducible(p, &m) {
            return Err(GfError::ReducibleModulus(p));
        }
        let q = checked_q(p, e)?;
        Ok(Arc::new(FieldContext {
            p,
            e,
            modulus: m,
            q,
        }))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Extension degree over the prime field.
    pub fn e(&self) -> usize {
        self.e
    }

    /// Field size `q = p^e`.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients, low-to-high, length `e + 1`.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// All `q` field elements in a fixed order: element `k` has the base-p
    /// digits of `k` as coefficients.
    pub fn elements(self: &Arc<Self>) -> impl Iterator<Item = FieldElement> {
        let ctx = Arc::clone(self);
        (0..ctx.q).map(move |k| FieldElement::from_index(&ctx, k))
    }
}

fn validate_characteristic(p: u64) -> Result<(), GfError> {
    if !(3..=MAX_P).contains(&p) || !is_prime(p) {
        return Err(GfError::BadCharacteristic(p));
    }
    Ok(())
}

fn checked_q(p: u64, e: usize) -> Result<u64, GfError> {
    let mut q: u64 = 1;
    for _ in 0..e {
        q = q.checked_mul(p).ok_or(GfError::FieldTooLarge { p, e })?;
    }
    Ok(q)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn reduce_int(c: i64, p: u64) -> u64 {
    c.rem_euclid(p as i64) as u64
}

/// Tests whether a polynomial over `F_p` (coefficients low-to-high) is
/// irreducible, using Rabin's criterion: `m` of degree `n` is irreducible
/// iff `x^{p^n} ≡ x (mod m)` and `gcd(x^{p^{n/r}} − x, m) = 1` for every
/// prime `r | n`. Constants and the zero polynomial are not irreducible.
pub fn is_irreducible(p: u64, coeffs: &[i64]) -> Result<bool, GfError> {
    validate_characteristic(p)?;
    let mut m: Vec<u64> = coeffs.iter().map(|&c| reduce_int(c, p)).collect();
    fp::trim(&mut m);
    Ok(fp::is_irreducible(p, &m))
}

/// An element of `F_{p^e}`: `Σ cᵢ αⁱ` with exactly `e` coefficients, each
/// reduced mod `p`. Equality is coefficientwise (the representation is
/// canonical).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElement {
    ctx: Arc<FieldContext>,
    coeffs: Vec<u64>,
}

impl FieldElement {
    /// Builds an element from integer coefficients (low-to-high, at most
    /// `e` of them; missing ones are zero). Entries are reduced mod `p`.
    pub fn new(ctx: &Arc<FieldContext>, coeffs: &[i64]) -> Self {
        assert!(
            coeffs.len() <= ctx.e,
            "too many coefficients for extension degree {}",
            ctx.e
        );
        let mut c: Vec<u64> = coeffs.iter().map(|&v| reduce_int(v, ctx.p)).collect();
        c.resize(ctx.e, 0);
        FieldElement {
            ctx: Arc::clone(ctx),
            coeffs: c,
        }
    }

    pub fn zero(ctx: &Arc<FieldContext>) -> Self {
        FieldElement {
            ctx: Arc::clone(ctx),
            coeffs: vec![0; ctx.e],
        }
    }

    pub fn one(ctx: &Arc<FieldContext>) -> Self {
        Self::from_int(ctx, 1)
    }

    /// Embeds an integer as a prime-subfield element.
    pub fn from_int(ctx: &Arc<FieldContext>, v: i64) -> Self {
        let mut coeffs = vec![0; ctx.e];
        coeffs[0] = reduce_int(v, ctx.p);
        FieldElement {
            ctx: Arc::clone(ctx),
            coeffs,
        }
    }

    /// The residue class `α` of the modulus variable. For `e = 1` this is
    /// zero (the modulus is `x`).
    pub fn alpha(ctx: &Arc<FieldContext>) -> Self {
        if ctx.e == 1 {
            return Self::zero(ctx);
        }
        let mut coeffs = vec![0; ctx.e];
        coeffs[1] = 1;
        FieldElement {
            ctx: Arc::clone(ctx),
            coeffs,
        }
    }

    /// `α^k`, the decoding of the `g^k` text form.
    pub fn alpha_pow(ctx: &Arc<FieldContext>, k: u64) -> Self {
        Self::alpha(ctx).pow(k)
    }

    /// Element number `k` in the fixed enumeration order (base-p digits).
    pub fn from_index(ctx: &Arc<FieldContext>, k: u64) -> Self {
        debug_assert!(k < ctx.q);
        let mut coeffs = vec![0; ctx.e];
        let mut k = k;
        for c in coeffs.iter_mut() {
            *c = k % ctx.p;
            k /= ctx.p;
        }
        FieldElement {
            ctx: Arc::clone(ctx),
            coeffs,
        }
    }

    pub fn context(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// `Some(c)` iff the element lies in the prime subfield.
    pub fn in_prime_subfield(&self) -> Option<u64> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    fn same_ctx(&self, rhs: &FieldElement) -> Result<(), GfError> {
        if self.ctx == rhs.ctx {
            Ok(())
        } else {
            Err(GfError::ContextMismatch)
        }
    }

    pub fn checked_add(&self, rhs: &FieldElement) -> Result<FieldElement, GfError> {
        self.same_ctx(rhs)?;
        let p = self.ctx.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        Ok(FieldElement {
            ctx: Arc::clone(&self.ctx),
            coeffs,
        })
    }

    pub fn checked_sub(&self, rhs: &FieldElement) -> Result<FieldElement, GfError> {
        self.same_ctx(rhs)?;
        let p = self.ctx.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        Ok(FieldElement {
            ctx: Arc::clone(&self.ctx),
            coeffs,
        })
    }

    pub fn checked_mul(&self, rhs: &FieldElement) -> Result<FieldElement, GfError> {
        self.same_ctx(rhs)?;
        let p = self.ctx.p;
        let prod = fp::mul(p, &self.coeffs, &rhs.coeffs);
        let mut red = fp::rem(p, prod, &self.ctx.modulus);
        red.resize(self.ctx.e, 0);
        Ok(FieldElement {
            ctx: Arc::clone(&self.ctx),
            coeffs: red,
        })
    }

    /// Multiplicative inverse, by the extended Euclidean algorithm in
    /// `F_p[x]` against the modulus.
    pub fn inv(&self) -> Result<FieldElement, GfError> {
        if self.is_zero() {
            return Err(GfError::DivisionByZero);
        }
        let p = self.ctx.p;
        let mut a = self.coeffs.clone();
        fp::trim(&mut a);
        let (g, u) = fp::half_egcd(p, &a, &self.ctx.modulus);
        // g is a nonzero constant since the modulus is irreducible.
        debug_assert_eq!(fp::degree(&g), Some(0));
        let ginv = fp::scalar_inv(p, g[0]);
        let mut coeffs: Vec<u64> = u.iter().map(|&c| c * ginv % p).collect();
        coeffs.resize(self.ctx.e, 0);
        Ok(FieldElement {
            ctx: Arc::clone(&self.ctx),
            coeffs,
        })
    }

    pub fn checked_div(&self, rhs: &FieldElement) -> Result<FieldElement, GfError> {
        self.same_ctx(rhs)?;
        self.checked_mul(&rhs.inv()?)
    }

    /// `self^n` by square-and-multiply; `0^0 = 1`.
    pub fn pow(&self, n: u64) -> FieldElement {
        let mut result = FieldElement::one(&self.ctx);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.checked_mul(&base).expect("same context");
            }
            base = base.checked_mul(&base).expect("same context");
            n >>= 1;
        }
        result
    }

    /// The Frobenius automorphism `σ(a) = a^p`.
    pub fn frobenius(&self) -> FieldElement {
        self.pow(self.ctx.p)
    }

    /// The inverse Frobenius `τ(a) = a^{p^{e−1}}`, computed as `e − 1`
    /// successive p-th powers.
    pub fn inv_frobenius(&self) -> FieldElement {
        self.twist(self.ctx.e - 1)
    }

    /// `σ^k(a)`, i.e. `a^{p^k}`.
    pub fn twist(&self, k: usize) -> FieldElement {
        let mut r = self.clone();
        for _ in 0..(k % self.ctx.e) {
            r = r.frobenius();
        }
        r
    }

    /// Euler's criterion: true iff the element is a square (zero counts).
    pub fn is_square(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        self.pow((self.ctx.q - 1) / 2).is_one()
    }

    /// Parses the field-element grammar: `<int>` (prime subfield),
    /// `g^<k>` (power of `α`), or `[c0,c1,...,c_{e-1}]` (full coefficient
    /// list, exactly `e` entries).
    pub fn parse(ctx: &Arc<FieldContext>, s: &str) -> Result<FieldElement, GfError> {
        let err = |reason: &str| GfError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        if let Some(inner) = crate::textutil::strip_brackets(t) {
            let parts = crate::textutil::split_top_level(inner).map_err(|e| err(&e))?;
            if parts.len() != ctx.e {
                return Err(err(&format!(
                    "coefficient list must have exactly {} entries",
                    ctx.e
                )));
            }
            let mut coeffs = Vec::with_capacity(ctx.e);
            for part in parts {
                let v: i64 = part.parse().map_err(|_| err("bad integer coefficient"))?;
                coeffs.push(v);
            }
            return Ok(FieldElement::new(ctx, &coeffs));
        }
        if let Some(exp) = t.strip_prefix("g^") {
            let k: u64 = exp
                .parse()
                .map_err(|_| err("exponent must be a non-negative integer"))?;
            return Ok(FieldElement::alpha_pow(ctx, k));
        }
        let v: i64 = t
            .parse()
            .map_err(|_| err("expected an integer, `g^<k>`, or a bracketed coefficient list"))?;
        Ok(FieldElement::from_int(ctx, v))
    }
}

/// Canonical form: the full coefficient list, e.g. `[2,0,1]`.
impl fmt::Display for FieldElement {
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

macro_rules! ref_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("field context mismatch")
            }
        }
    };
}
ref_binop!(Add, add, checked_add);
ref_binop!(Sub, sub, checked_sub);
ref_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::zero(self.context())
            .checked_sub(self)
            .expect("same context")
    }
}

/// Dense polynomial arithmetic over `F_p` on raw coefficient vectors
/// (low-to-high, trimmed). This is the bootstrap layer: it validates
/// moduli and inverts elements before any `FieldContext` exists.
mod fp {
    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn degree(v: &[u64]) -> Option<usize> {
        if v.is_empty() {
            None
        } else {
            Some(v.len() - 1)
        }
    }

    pub fn mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.iter().all(|&x| x == 0) || b.iter().all(|&x| x == 0) {
            return Vec::new();
        }
        let mut r = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + x * y) % p;
            }
        }
        trim(&mut r);
        r
    }

    pub fn sub(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut r = vec![0u64; a.len().max(b.len())];
        for (i, &x) in a.iter().enumerate() {
            r[i] = x;
        }
        for (i, &y) in b.iter().enumerate() {
            r[i] = (r[i] + p - y) % p;
        }
        trim(&mut r);
        r
    }

    /// Remainder of `a` by a nonzero `m`.
    pub fn rem(p: u64, mut a: Vec<u64>, m: &[u64]) -> Vec<u64> {
        trim(&mut a);
        let dm = degree(m).expect("nonzero divisor");
        let lead_inv = scalar_inv(p, m[dm]);
        while let Some(da) = degree(&a) {
            if da < dm {
                break;
            }
            let c = a[da] * lead_inv % p;
            let shift = da - dm;
            for (i, &y) in m.iter().enumerate() {
                a[shift + i] = (a[shift + i] + p - c * y % p) % p;
            }
            trim(&mut a);
        }
        a
    }

    pub fn gcd(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(p, a, &b);
            a = b;
            b = r;
        }
        if let Some(da) = degree(&a) {
            let inv = scalar_inv(p, a[da]);
            for c in a.iter_mut() {
                *c = *c * inv % p;
            }
        }
        a
    }

    /// Returns `(g, u)` with `u·a ≡ g (mod m)` and `g = gcd(a, m)`.
    pub fn half_egcd(p: u64, a: &[u64], m: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let (mut r0, mut r1) = (a.to_vec(), m.to_vec());
        let (mut u0, mut u1) = (vec![1u64], Vec::new());
        trim(&mut r0);
        trim(&mut r1);
        while !r1.is_empty() {
            let (quot, rest) = divmod(p, &r0, &r1);
            let u2 = sub(p, &u0, &mul(p, &quot, &u1));
            r0 = r1;
            r1 = rest;
            u0 = u1;
            u1 = u2;
        }
        (r0, u0)
    }

    fn divmod(p: u64, a: &[u64], m: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let mut a = a.to_vec();
        trim(&mut a);
        let dm = degree(m).expect("nonzero divisor");
        let lead_inv = scalar_inv(p, m[dm]);
        let mut quot = vec![0u64; a.len().saturating_sub(dm)];
        while let Some(da) = degree(&a) {
            if da < dm {
                break;
            }
            let c = a[da] * lead_inv % p;
            let shift = da - dm;
            quot[shift] = c;
            for (i, &y) in m.iter().enumerate() {
                a[shift + i] = (a[shift + i] + p - c * y % p) % p;
            }
            trim(&mut a);
        }
        trim(&mut quot);
        (quot, a)
    }

    pub fn scalar_inv(p: u64, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(p));
        scalar_pow(p, a, p - 2)
    }

    fn scalar_pow(p: u64, mut a: u64, mut n: u64) -> u64 {
        let mut r = 1u64;
        a %= p;
        while n > 0 {
            if n & 1 == 1 {
                r = r * a % p;
            }
            a = a * a % p;
            n >>= 1;
        }
        r
    }

    fn pow_mod(p: u64, base: &[u64], mut n: u64, m: &[u64]) -> Vec<u64> {
        let mut r = vec![1u64];
        let mut b = rem(p, base.to_vec(), m);
        while n > 0 {
            if n & 1 == 1 {
                r = rem(p, mul(p, &r, &b), m);
            }
            b = rem(p, mul(p, &b, &b), m);
            n >>= 1;
        }
        r
    }

    /// `v^{p^times} mod m` by repeated p-th powering (avoids huge
    /// exponents).
    fn pth_power_iterate(p: u64, v: &[u64], times: usize, m: &[u64]) -> Vec<u64> {
        let mut r = v.to_vec();
        for _ in 0..times {
            r = pow_mod(p, &r, p, m);
        }
        r
    }

    fn prime_factors(mut n: usize) -> Vec<usize> {
        let mut fs = Vec::new();
        let mut d = 2;
        while d * d <= n {
            if n.is_multiple_of(d) {
                fs.push(d);
                while n.is_multiple_of(d) {
                    n /= d;
                }
            }
            d += 1;
        }
        if n > 1 {
            fs.push(n);
        }
        fs
    }

    /// Rabin irreducibility test. `m` is trimmed, coefficients reduced.
    pub fn is_irreducible(p: u64, m: &[u64]) -> bool {
        let n = match degree(m) {
            Some(n) if n >= 1 => n,
            _ => return false,
        };
        // x reduced mod m (matters when deg m = 1).
        let x = rem(p, vec![0, 1], m);
        let xpn = pth_power_iterate(p, &x, n, m);
        if !sub(p, &xpn, &x).is_empty() {
            return false;
        }
        for r in prime_factors(n) {
            let xpd = pth_power_iterate(p, &x, n / r, m);
            let g = gcd(p, &sub(p, &xpd, &x), m);
            if degree(&g) != Some(0) {
                return false;
            }
        }
        true
    }
}
