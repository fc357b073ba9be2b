//! Hyperelliptic curves `y² = f(x)` over `F_q` (odd characteristic) and
//! the explicit coefficient-matrix constructions.
//!
//! With `f^{(p−1)/2} = Σ c_m x^m` and the differential basis
//! `ω_i = x^{i−1} dx/y` (i = 1..g), three g×g matrices matter and must not
//! be confused:
//!
//! * `Y` with `Y_ij = c_{ip−j}`: the raw coefficient matrix (Yui's
//!   matrix), representing nothing by itself;
//! * `B = Y^τ`: the Cartier–Manin matrix, τ-linear, left action on
//!   differentials;
//! * `A = (B^σ)ᵀ = Yᵀ`: the Hasse–Witt matrix, σ-linear, left action on
//!   cohomology.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::gf::{FieldContext, FieldElement, GfError};
use crate::poly::Polynomial;
use crate::semilin::{Matrix, TwistPower};

/// Cap on `deg f · (p^n − 1)/2`, the working degree of the direct n-th
/// iterate formula.
pub const DEFAULT_DIRECT_ITERATE_BOUND: u64 = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("genus must be at least 1")]
    BadGenus,
    #[error("f must be squarefree")]
    NotSquarefree,
    #[error("deg f = {degree} but genus {genus} requires degree {} or {}", 2 * genus + 1, 2 * genus + 2)]
    BadDegree { degree: usize, genus: usize },
    #[error("polynomial does not live over the given field")]
    ContextMismatch,
    #[error("substitution x -> ux + v requires a nonzero u")]
    DegenerateSubstitution,
    #[error("direct iterate needs working degree {needed}, above the bound {bound}")]
    IterateBoundExceeded { needed: u64, bound: u64 },
}

/// A validated curve `y² = f(x)` of genus `g ≥ 1` with `f` squarefree of
/// degree `2g+1` or `2g+2` over a field of odd characteristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperellipticCurve {
    ctx: Arc<FieldContext>,
    f: Polynomial,
    genus: usize,
}

/// The three matrices of a curve, bundled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartierData {
    /// Yui's coefficient matrix `Y`.
    pub coefficient: Matrix,
    /// Cartier–Manin matrix `B = Y^τ` (τ-linear, left action).
    pub cartier_manin: Matrix,
    /// Hasse–Witt matrix `A = (B^σ)ᵀ = Yᵀ` (σ-linear, left action).
    pub hasse_witt: Matrix,
}

impl HyperellipticCurve {
    pub fn new(ctx: &Arc<FieldContext>, f: Polynomial, genus: usize) -> Result<Self, CurveError> {
        if f.context() != ctx {
            return Err(CurveError::ContextMismatch);
        }
        if genus < 1 {
            return Err(CurveError::BadGenus);
        }
        let degree = f.degree().ok_or(CurveError::NotSquarefree)?;
        if degree != 2 * genus + 1 && degree != 2 * genus + 2 {
            return Err(CurveError::BadDegree { degree, genus });
        }
        if !f.is_squarefree().expect("nonzero") {
            return Err(CurveError::NotSquarefree);
        }
        Ok(HyperellipticCurve {
            ctx: Arc::clone(ctx),
            f,
            genus,
        })
    }

    pub fn context(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn p(&self) -> u64 {
        self.ctx.p()
    }

    /// `f^{(p−1)/2}`, the source of all coefficient extractions.
    pub fn half_power(&self) -> Polynomial {
        self.f.power((self.p() - 1) / 2)
    }

    /// Yui's coefficient matrix: `Y_ij = c_{ip−j}` for `i, j = 1..g`,
    /// where `c_m` are the coefficients of `f^{(p−1)/2}`. Indices outside
    /// the support read as zero.
    pub fn coefficient_matrix(&self) -> Matrix {
        let h = self.half_power();
        let g = self.genus;
        let p = self.p() as i64;
        let mut rows = Vec::with_capacity(g);
        for i in 1..=g as i64 {
            let mut row = Vec::with_capacity(g);
            for j in 1..=g as i64 {
                row.push(h.coefficient(i * p - j));
            }
            rows.push(row);
        }
        Matrix::from_rows(&self.ctx, rows).expect("g x g grid")
    }

    /// The Cartier–Manin matrix `B = Y^τ`, with `B_ij = c^τ_{ip−j}`.
    /// Left-multiplication by `B` is the τ-linear Cartier operator in the
    /// basis `ω_i = x^{i−1} dx/y`.
    pub fn cartier_manin(&self) -> Matrix {
        self.coefficient_matrix()
            .apply_twist(TwistPower::inv_frobenius(self.ctx.e()))
    }

    /// The Hasse–Witt matrix `A = (B^σ)ᵀ = Yᵀ`, representing the σ-linear
    /// Frobenius operator on `H¹(X, O_X)`, acting on the left.
    pub fn hasse_witt(&self) -> Matrix {
        self.coefficient_matrix().transpose()
    }

    pub fn cartier_data(&self) -> CartierData {
        let y = self.coefficient_matrix();
        CartierData {
            cartier_manin: y.apply_twist(TwistPower::inv_frobenius(self.ctx.e())),
            hasse_witt: y.transpose(),
            coefficient: y,
        }
    }

    /// Direct formula for the matrix of the n-th Cartier iterate: entry
    /// `(i,j)` is the p^n-th root of the coefficient of `x^{ip^n−j}` in
    /// `f^{(p^n−1)/2}`. Equals `twisted_product(cartier_manin, τ, n)`.
    pub fn iterated_cartier_direct(&self, n: u32) -> Result<Matrix, CurveError> {
        self.iterated_cartier_direct_with_bound(n, DEFAULT_DIRECT_ITERATE_BOUND)
    }

    pub fn iterated_cartier_direct_with_bound(
        &self,
        n: u32,
        bound: u64,
    ) -> Result<Matrix, CurveError> {
        assert!(n >= 1, "iterate count must be at least 1");
        let p = self.p();
        let deg_f = self.f.degree().expect("validated nonzero") as u64;
        let over = CurveError::IterateBoundExceeded {
            needed: u64::MAX,
            bound,
        };
        let mut pn: u64 = 1;
        for _ in 0..n {
            pn = pn.checked_mul(p).ok_or_else(|| over.clone())?;
        }
        let needed = ((pn - 1) / 2).checked_mul(deg_f).ok_or(over)?;
        if needed > bound {
            return Err(CurveError::IterateBoundExceeded { needed, bound });
        }
        let h = self.f.power((pn - 1) / 2);
        let root = TwistPower::new(-(n as i64), self.ctx.e());
        let g = self.genus;
        let mut rows = Vec::with_capacity(g);
        for i in 1..=g as i64 {
            let mut row = Vec::with_capacity(g);
            for j in 1..=g as i64 {
                row.push(root.apply(&h.coefficient(i * pn as i64 - j)));
            }
            rows.push(row);
        }
        Ok(Matrix::from_rows(&self.ctx, rows).expect("g x g grid"))
    }

    /// The curve `y² = f(ux + v)` for a unit `u`: an `F_q`-isomorphic
    /// model with the same point counts.
    pub fn substitute_linear(
        &self,
        u: &FieldElement,
        v: &FieldElement,
    ) -> Result<HyperellipticCurve, CurveError> {
        if u.context() != &self.ctx || v.context() != &self.ctx {
            return Err(CurveError::ContextMismatch);
        }
        if u.is_zero() {
            return Err(CurveError::DegenerateSubstitution);
        }
        let line = Polynomial::new(&self.ctx, vec![v.clone(), u.clone()]).expect("same context");
        let mut acc = Polynomial::zero(&self.ctx);
        for c in self.f.coeffs().iter().rev() {
            acc = acc
                .checked_mul(&line)
                .and_then(|t| t.checked_add(&Polynomial::constant(c.clone())))
                .expect("same context");
        }
        HyperellipticCurve::new(&self.ctx, acc, self.genus)
    }
}

impl fmt::Display for HyperellipticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "y^2 = f(x) over F_{} (p={}, e={}), genus {}, f = {}",
            self.ctx.q(),
            self.ctx.p(),
            self.ctx.e(),
            self.genus,
            self.f
        )
    }
}

/// Errors from the curve spec-file front end, with 1-based line anchors.
/// `Parse` is a grammar problem, `Validation` a semantic one; the CLI maps
/// them to different exit codes.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecFileError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: {msg}")]
    Validation { line: usize, msg: String },
}

/// Parses the line-oriented curve spec grammar:
///
/// ```text
/// p = <odd prime>
/// e = <positive integer>
/// modulus = [<int>,...]        (present exactly when e > 1)
/// genus = <positive integer>
/// f = [<elem>,...]
/// ```
///
/// Keys appear in this order; unknown or repeated keys are errors. Blank
/// lines and `#` comments are allowed.
pub fn parse_curve_spec(text: &str) -> Result<HyperellipticCurve, SpecFileError> {
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if !line.is_empty() {
            lines.push((idx + 1, line));
        }
    }
    let mut cursor = lines.into_iter().peekable();
    let last_line = text.lines().count().max(1);

    let mut take = |key: &str| -> Result<(usize, String), SpecFileError> {
        match cursor.next() {
            Some((n, line)) => {
                let (k, v) = line.split_once('=').ok_or_else(|| SpecFileError::Parse {
                    line: n,
                    msg: format!("expected `{key} = <value>`"),
                })?;
                let k = k.trim();
                if k != key {
                    return Err(SpecFileError::Parse {
                        line: n,
                        msg: format!("expected key `{key}`, found `{k}`"),
                    });
                }
                Ok((n, v.trim().to_string()))
            }
            None => Err(SpecFileError::Parse {
                line: last_line,
                msg: format!("missing key `{key}`"),
            }),
        }
    };

    let parse_u64 = |line: usize, v: &str, what: &str| -> Result<u64, SpecFileError> {
        v.parse().map_err(|_| SpecFileError::Parse {
            line,
            msg: format!("{what} must be a non-negative integer, found `{v}`"),
        })
    };

    let (p_line, p_str) = take("p")?;
    let p = parse_u64(p_line, &p_str, "p")?;
    let (e_line, e_str) = take("e")?;
    let e = parse_u64(e_line, &e_str, "e")? as usize;
    if e < 1 {
        return Err(SpecFileError::Validation {
            line: e_line,
            msg: "e must be at least 1".to_string(),
        });
    }

    let ctx = if e == 1 {
        FieldContext::prime(p).map_err(|err| SpecFileError::Validation {
            line: p_line,
            msg: gf_message(&err),
        })?
    } else {
        let (m_line, m_str) = take("modulus")?;
        let coeffs = parse_int_list(m_line, &m_str)?;
        if coeffs.len() != e + 1 {
            return Err(SpecFileError::Validation {
                line: m_line,
                msg: format!(
                    "modulus must list exactly {} coefficients (degree {e})",
                    e + 1
                ),
            });
        }
        FieldContext::extension(p, &coeffs).map_err(|err| match err {
            GfError::BadCharacteristic(_) => SpecFileError::Validation {
                line: p_line,
                msg: gf_message(&err),
            },
            _ => SpecFileError::Validation {
                line: m_line,
                msg: gf_message(&err),
            },
        })?
    };

    let (g_line, g_str) = take("genus")?;
    let genus = parse_u64(g_line, &g_str, "genus")? as usize;

    let (f_line, f_str) = take("f")?;
    let f = Polynomial::parse(&ctx, &f_str).map_err(|err| SpecFileError::Parse {
        line: f_line,
        msg: err.to_string(),
    })?;

    if let Some((n, line)) = cursor.next() {
        let key = line.split('=').next().unwrap_or(line).trim();
        return Err(SpecFileError::Parse {
            line: n,
            msg: format!("unknown key `{key}`"),
        });
    }

    HyperellipticCurve::new(&ctx, f, genus).map_err(|err| {
        let line = match err {
            CurveError::BadGenus => g_line,
            _ => f_line,
        };
        SpecFileError::Validation {
            line,
            msg: err.to_string(),
        }
    })
}

fn gf_message(err: &GfError) -> String {
    match err {
        GfError::BadCharacteristic(2) => {
            "p = 2 is rejected: the model y^2 = f(x) requires odd characteristic".to_string()
        }
        other => other.to_string(),
    }
}

fn parse_int_list(line: usize, v: &str) -> Result<Vec<i64>, SpecFileError> {
    let err = |msg: String| SpecFileError::Parse { line, msg };
    let inner = crate::textutil::strip_brackets(v)
        .ok_or_else(|| err("expected a bracketed integer list".to_string()))?;
    let parts = crate::textutil::split_top_level(inner).map_err(err)?;
    parts
        .iter()
        .map(|s| {
            s.parse().map_err(|_| SpecFileError::Parse {
                line,
                msg: format!("bad integer `{s}`"),
            })
        })
        .collect()
}

/// Spec texts for the bundled fixture curves, shared across the crate's
/// unit tests.
#[cfg(test)]
pub(crate) const F125_SPEC: &str =
    "p = 5\ne = 3\nmodulus = [3,3,0,1]\ngenus = 2\nf = [0,g^56,g^18,g^92,1,1]\n";
#[cfg(test)]
pub(crate) const F27_SPEC: &str =
    "p = 3\ne = 3\nmodulus = [1,2,0,1]\ngenus = 2\nf = [0,g^1,g^2,0,0,1]\n";
#[cfg(test)]
pub(crate) const G1_F3_SPEC: &str = "p = 3\ne = 1\ngenus = 1\nf = [0,1,0,1]\n";
