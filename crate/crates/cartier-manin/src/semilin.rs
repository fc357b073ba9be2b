//! Matrix algebra over `F_q` with automorphism twists.
//!
//! Everything here uses one convention: **matrices act on the left on
//! column vectors**. An ε-linear map `f` (with `f(av) = a^ε f(v)`) has a
//! matrix `A` with `[f(v)] = A · [v]^ε`, its r-fold iterate is
//! represented by the twisted product
//!
//! ```text
//! A · A^ε · A^{ε²} ⋯ A^{ε^{r−1}}
//! ```
//!
//! (ascending twists to the right), change of basis is the twisted
//! conjugacy `S⁻¹ A S^ε`, and the adjoint with respect to the natural
//! pairing is `(A^δ)ᵀ` with `δ = ε⁻¹`. The right-action convention, in
//! which the highest twist lands on the *leftmost* factor, is deliberately
//! not implemented: mixing the two is precisely how published zeta data
//! has gone wrong.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::gf::{FieldContext, FieldElement};
use crate::poly::Polynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatError {
    #[error("matrix entries belong to different field contexts")]
    ContextMismatch,
    #[error("matrix dimensions are incompatible: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),
    #[error("operation requires a square matrix")]
    NotSquare,
    #[error("matrix is singular")]
    Singular,
    #[error("iterate count must be at least 1")]
    EmptyIterate,
    #[error("cannot parse matrix `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

/// The automorphism `σ^k` of `F_{p^e}`, held reduced: `0 ≤ k < e`. The
/// value `k = e − 1` is `τ = σ⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwistPower {
    k: usize,
    e: usize,
}

impl TwistPower {
    /// `σ^k` on a field of extension degree `e`; `k` may be negative or
    /// out of range and is reduced mod `e`.
    pub fn new(k: i64, e: usize) -> Self {
        assert!(e >= 1, "extension degree must be positive");
        TwistPower {
            k: k.rem_euclid(e as i64) as usize,
            e,
        }
    }

    /// The identity automorphism.
    pub fn identity(e: usize) -> Self {
        Self::new(0, e)
    }

    /// `σ`, the p-th power map.
    pub fn frobenius(e: usize) -> Self {
        Self::new(1, e)
    }

    /// `τ = σ⁻¹`.
    pub fn inv_frobenius(e: usize) -> Self {
        Self::new(-1, e)
    }

    pub fn power(&self) -> usize {
        self.k
    }

    pub fn extension_degree(&self) -> usize {
        self.e
    }

    pub fn is_identity(&self) -> bool {
        self.k == 0
    }

    /// The inverse automorphism `σ^{e−k}`.
    pub fn inverse(&self) -> Self {
        Self::new(-(self.k as i64), self.e)
    }

    /// `(σ^k)^r = σ^{kr}`.
    pub fn repeat(&self, r: usize) -> Self {
        Self::new((self.k * r) as i64, self.e)
    }

    /// Applies the automorphism to one element.
    pub fn apply(&self, a: &FieldElement) -> FieldElement {
        a.twist(self.k)
    }
}

/// A dense matrix over `F_q`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    ctx: Arc<FieldContext>,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

impl Matrix {
    pub fn new(
        ctx: &Arc<FieldContext>,
        rows: usize,
        cols: usize,
        entries: Vec<FieldElement>,
    ) -> Result<Self, MatError> {
        if entries.len() != rows * cols {
            return Err(MatError::DimensionMismatch(rows, cols, entries.len(), 1));
        }
        if entries.iter().any(|x| x.context() != ctx) {
            return Err(MatError::ContextMismatch);
        }
        Ok(Matrix {
            ctx: Arc::clone(ctx),
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(
        ctx: &Arc<FieldContext>,
        rows: Vec<Vec<FieldElement>>,
    ) -> Result<Self, MatError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(MatError::DimensionMismatch(r, c, r, 0));
        }
        Self::new(ctx, r, c, rows.into_iter().flatten().collect())
    }

    pub fn zero(ctx: &Arc<FieldContext>, rows: usize, cols: usize) -> Self {
        Matrix {
            ctx: Arc::clone(ctx),
            rows,
            cols,
            entries: vec![FieldElement::zero(ctx); rows * cols],
        }
    }

    pub fn identity(ctx: &Arc<FieldContext>, n: usize) -> Self {
        let mut m = Self::zero(ctx, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = FieldElement::one(ctx);
        }
        m
    }

    pub fn context(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &FieldElement {
        assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }

    fn at_mut(&mut self, i: usize, j: usize) -> &mut FieldElement {
        assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FieldElement::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(&self.ctx, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, MatError> {
        if self.ctx != rhs.ctx {
            return Err(MatError::ContextMismatch);
        }
        if self.cols != rhs.rows {
            return Err(MatError::DimensionMismatch(
                self.rows, self.cols, rhs.rows, rhs.cols,
            ));
        }
        let mut out = Matrix::zero(&self.ctx, self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = FieldElement::zero(&self.ctx);
                for k in 0..self.cols {
                    acc = &acc + &(self.at(i, k) * rhs.at(k, j));
                }
                *out.at_mut(i, j) = acc;
            }
        }
        Ok(out)
    }

    /// Ordinary (untwisted) matrix power; `A^0` is the identity.
    pub fn matrix_power(&self, n: usize) -> Result<Matrix, MatError> {
        if !self.is_square() {
            return Err(MatError::NotSquare);
        }
        let mut out = Matrix::identity(&self.ctx, self.rows);
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Applies `σ^k` to every entry.
    pub fn apply_twist(&self, t: TwistPower) -> Matrix {
        assert_eq!(
            t.extension_degree(),
            self.ctx.e(),
            "twist power and matrix field must agree"
        );
        let entries = self.entries.iter().map(|x| t.apply(x)).collect();
        Matrix {
            ctx: Arc::clone(&self.ctx),
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    /// The matrix of the r-fold iterate of the ε-linear map represented
    /// by `self` (left action): `A · A^ε · A^{ε²} ⋯ A^{ε^{r−1}}`,
    /// accumulated left to right.
    pub fn twisted_product(&self, t: TwistPower, r: usize) -> Result<Matrix, MatError> {
        if !self.is_square() {
            return Err(MatError::NotSquare);
        }
        if r == 0 {
            return Err(MatError::EmptyIterate);
        }
        let mut acc = self.clone();
        for i in 1..r {
            acc = acc.mul(&self.apply_twist(t.repeat(i)))?;
        }
        Ok(acc)
    }

    /// ε-twisted conjugacy `S⁻¹ · A · S^ε`: the matrix of the same
    /// ε-linear operator after the change of basis `S`.
    pub fn change_basis(&self, s: &Matrix, t: TwistPower) -> Result<Matrix, MatError> {
        if !self.is_square() || !s.is_square() {
            return Err(MatError::NotSquare);
        }
        if self.rows != s.rows {
            return Err(MatError::DimensionMismatch(
                self.rows, self.cols, s.rows, s.cols,
            ));
        }
        let s_inv = s.inverse()?;
        s_inv.mul(self)?.mul(&s.apply_twist(t))
    }

    /// The adjoint of the ε-linear map in the dual basis: `((A^δ)ᵀ, δ)`
    /// with `δ = ε⁻¹`. Applying it twice gives back `(A, ε)`.
    pub fn adjoint(&self, t: TwistPower) -> Result<(Matrix, TwistPower), MatError> {
        if !self.is_square() {
            return Err(MatError::NotSquare);
        }
        let delta = t.inverse();
        Ok((self.apply_twist(delta).transpose(), delta))
    }

    /// Row-echelon rank by Gaussian elimination with deterministic
    /// first-nonzero pivoting.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut pivot_row = 0;
        for col in 0..m.cols {
            let Some(r) = (pivot_row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, r);
            let inv = m.at(pivot_row, col).inv().expect("pivot nonzero");
            for r2 in pivot_row + 1..m.rows {
                if m.at(r2, col).is_zero() {
                    continue;
                }
                let factor = &(m.at(r2, col) * &inv);
                for c in col..m.cols {
                    let sub = &(factor * m.at(pivot_row, c));
                    *m.at_mut(r2, c) = &(m.at(r2, c).clone()) - sub;
                }
            }
            rank += 1;
            pivot_row += 1;
            if pivot_row == m.rows {
                break;
            }
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            let idx_a = a * self.cols + c;
            let idx_b = b * self.cols + c;
            self.entries.swap(idx_a, idx_b);
        }
    }

    /// Exact determinant by Gaussian elimination.
    pub fn det(&self) -> Result<FieldElement, MatError> {
        if !self.is_square() {
            return Err(MatError::NotSquare);
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = FieldElement::one(&self.ctx);
        for col in 0..n {
            let Some(r) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return Ok(FieldElement::zero(&self.ctx));
            };
            if r != col {
                m.swap_rows(col, r);
                det = -&det;
            }
            let pivot = m.at(col, col).clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("pivot nonzero");
            for r2 in col + 1..n {
                if m.at(r2, col).is_zero() {
                    continue;
                }
                let factor = &(m.at(r2, col) * &inv);
                for c in col..n {
                    let sub = &(factor * m.at(col, c));
                    *m.at_mut(r2, c) = &(m.at(r2, c).clone()) - sub;
                }
            }
        }
        Ok(det)
    }

    /// Inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix, MatError> {
        if !self.is_square() {
            return Err(MatError::NotSquare);
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Matrix::identity(&self.ctx, n);
        for col in 0..n {
            let r = (col..n)
                .find(|&r| !m.at(r, col).is_zero())
                .ok_or(MatError::Singular)?;
            m.swap_rows(col, r);
            inv.swap_rows(col, r);
            let pivot_inv = m.at(col, col).inv().expect("pivot nonzero");
            for c in 0..n {
                *m.at_mut(col, c) = m.at(col, c) * &pivot_inv;
                *inv.at_mut(col, c) = inv.at(col, c) * &pivot_inv;
            }
            for r2 in 0..n {
                if r2 == col || m.at(r2, col).is_zero() {
                    continue;
                }
                let factor = m.at(r2, col).clone();
                for c in 0..n {
                    let s1 = &(&factor * m.at(col, c));
                    *m.at_mut(r2, c) = &(m.at(r2, c).clone()) - s1;
                    let s2 = &(&factor * inv.at(col, c));
                    *inv.at_mut(r2, c) = &(inv.at(r2, c).clone()) - s2;
                }
            }
        }
        Ok(inv)
    }

    /// Characteristic polynomial `det(T·I − A)`, monic of degree n, as a
    /// polynomial over `F_q` in `T`.
    pub fn char_poly(&self) -> Result<Polynomial, MatError> {
        if !self.is_square() {
            return Err(MatError::NotSquare);
        }
        let n = self.rows;
        let t = Polynomial::monomial(FieldElement::one(&self.ctx), 1);
        let mut grid = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let a = Polynomial::constant(self.at(i, j).clone());
                let cell = if i == j {
                    t.checked_sub(&a).expect("same context")
                } else {
                    Polynomial::zero(&self.ctx)
                        .checked_sub(&a)
                        .expect("same context")
                };
                row.push(cell);
            }
            grid.push(row);
        }
        Ok(poly_det(&self.ctx, &grid))
    }

    /// Parses the row-major nested form, e.g. `[[a,b],[c,d]]` with entries
    /// in the field-element grammar.
    pub fn parse(ctx: &Arc<FieldContext>, s: &str) -> Result<Matrix, MatError> {
        let err = |reason: String| MatError::Parse {
            input: s.to_string(),
            reason,
        };
        let inner = crate::textutil::strip_brackets(s)
            .ok_or_else(|| err("expected a bracketed row list".to_string()))?;
        let row_strs = crate::textutil::split_top_level(inner).map_err(err)?;
        let mut rows = Vec::with_capacity(row_strs.len());
        for row in row_strs {
            let row_inner = crate::textutil::strip_brackets(row)
                .ok_or_else(|| err("expected a bracketed row".to_string()))?;
            let cells = crate::textutil::split_top_level(row_inner).map_err(err)?;
            let mut out = Vec::with_capacity(cells.len());
            for cell in cells {
                out.push(FieldElement::parse(ctx, cell).map_err(|e| MatError::Parse {
                    input: s.to_string(),
                    reason: e.to_string(),
                })?);
            }
            rows.push(out);
        }
        Matrix::from_rows(ctx, rows)
    }
}

/// Row-major nested lists of canonical field elements.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Exact determinant of a square grid of polynomials by cofactor
/// expansion along the first column. Division-free; fine at the genus
/// sizes this crate handles.
pub(crate) fn poly_det(ctx: &Arc<FieldContext>, grid: &[Vec<Polynomial>]) -> Polynomial {
    let n = grid.len();
    if n == 0 {
        return Polynomial::one(ctx);
    }
    if n == 1 {
        return grid[0][0].clone();
    }
    let mut acc = Polynomial::zero(ctx);
    for i in 0..n {
        if grid[i][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = grid
            .iter()
            .enumerate()
            .filter(|&(r, _)| r != i)
            .map(|(_, row)| row[1..].to_vec())
            .collect();
        let term = grid[i][0]
            .checked_mul(&poly_det(ctx, &minor))
            .expect("same context");
        acc = if i % 2 == 0 {
            acc.checked_add(&term).expect("same context")
        } else {
            acc.checked_sub(&term).expect("same context")
        };
    }
    acc
}
