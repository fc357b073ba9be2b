//! Cartier–Manin and Hasse–Witt matrices of hyperelliptic curves over
//! finite fields of odd characteristic.
//!
//! The two matrices represent adjoint semilinear operators and are *not*
//! interchangeable:
//!
//! * the **Cartier–Manin matrix** `B` represents the τ-linear Cartier
//!   operator on holomorphic differentials (τ = inverse Frobenius);
//! * the **Hasse–Witt matrix** `A` represents the σ-linear Frobenius
//!   operator on the first cohomology of the structure sheaf (σ = p-th
//!   power map);
//! * they are related by the twisted transpose `A = (B^σ)ᵀ`.
//!
//! Getting the twist direction or the iteration order wrong silently
//! produces wrong zeta data, so this crate fixes one convention and states
//! it everywhere: **matrices act on the left on column vectors**, and the
//! r-fold iterate of an ε-linear operator with matrix `M` is
//! `M · M^ε · M^{ε²} ⋯ M^{ε^{r−1}}` (ascending twists to the right).
//!
//! The crate computes, for a curve `y² = f(x)`:
//!
//! * the coefficient matrix `Y` (entries `c_{ip−j}` of `f^{(p−1)/2}`),
//!   the Cartier–Manin matrix `B = Y^τ` and the Hasse–Witt matrix `A = Yᵀ`;
//! * full Frobenius/Cartier iterates over `F_q` and the mod-p zeta data
//!   `L(T) mod p`, `χ(T) mod p`;
//! * p-rank, a-number and superspeciality;
//! * an independent brute-force point-counting oracle that reconstructs the
//!   exact `L(T) ∈ Z[T]` for cross-validation;
//! * the classical *wrong* product `Y · Y^σ ⋯` as a reproducible pitfall
//!   demonstration.
//!
//! Start with the runnable walkthroughs in `examples/`, or with
//! [`curve::HyperellipticCurve`].

pub mod cli;
pub mod curve;
pub mod gf;
pub mod invariants;
pub mod oracle;
pub mod poly;
pub mod semilin;

pub(crate) mod textutil;

pub use curve::{CartierData, HyperellipticCurve};
pub use gf::{FieldContext, FieldElement};
pub use invariants::ModPZeta;
pub use oracle::{ExactLPoly, PointCounts};
pub use poly::Polynomial;
pub use semilin::{Matrix, TwistPower};
