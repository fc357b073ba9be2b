//! Command front end: parse curve spec files, run the computations, and
//! emit human-readable or machine-readable reports.
//!
//! Exit codes are a stable contract: 0 success, 2 parse error, 3
//! validation error, 4 resource bound exceeded, 5 verification mismatch
//! (which would indicate a bug, never an expected outcome).

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::curve::{parse_curve_spec, CartierData, HyperellipticCurve, SpecFileError};
use crate::gf::{FieldContext, FieldElement};
use crate::invariants::{self, InvariantsError};
use crate::oracle::{self, OracleError};
use crate::poly::Polynomial;
use crate::semilin::Matrix;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_BOUND: i32 = 4;
pub const EXIT_MISMATCH: i32 = 5;

pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Bound(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Validation(_) => EXIT_VALIDATION,
            CliError::Bound(_) => EXIT_BOUND,
            CliError::Internal(_) => EXIT_MISMATCH,
        }
    }
}

impl From<SpecFileError> for CliError {
    fn from(e: SpecFileError) -> Self {
        match e {
            SpecFileError::Parse { .. } => CliError::Parse(e.to_string()),
            SpecFileError::Validation { .. } => CliError::Validation(e.to_string()),
        }
    }
}

impl From<InvariantsError> for CliError {
    fn from(e: InvariantsError) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::BoundExceeded { .. } => CliError::Bound(e.to_string()),
            OracleError::Internal(_) => CliError::Internal(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

/// Everything a command computed about one curve. Optional sections are
/// filled in by the heavier commands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub curve: HyperellipticCurve,
    pub matrices: CartierData,
    pub iterates: Option<Iterates>,
    pub invariants: Option<InvariantReport>,
    pub oracle: Option<OracleReport>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Iterates {
    /// `M = A · A^σ ⋯ A^{σ^{e−1}}`.
    pub frobenius: Matrix,
    /// `N = B · B^τ ⋯ B^{τ^{e−1}}`.
    pub cartier: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub p_rank: usize,
    pub a_number: usize,
    pub superspecial: bool,
    /// Over `F_p`.
    pub l_mod_p: Polynomial,
    /// Over `F_p`.
    pub chi_mod_p: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    /// Projective counts `N_1..N_g`.
    pub counts: Vec<u64>,
    /// Exact `L(T)` coefficients `b_0..b_{2g}`.
    pub l_exact: Vec<i128>,
    pub p_rank: usize,
    /// Exact L reduced mod p equals the matrix-side `L mod p`.
    pub l_match: bool,
    pub p_rank_match: bool,
    /// Counts are unchanged for the seeded substitution `x ↦ ux + v`.
    pub substitution_check: bool,
}

impl Report {
    /// `Some(false)` if a verification section exists and disagrees.
    pub fn oracle_agrees(&self) -> Option<bool> {
        self.oracle
            .as_ref()
            .map(|o| o.l_match && o.p_rank_match && o.substitution_check)
    }
}

/// The `matrix` command: just the three matrices.
pub fn cmd_matrix(spec: &str) -> Result<Report, CliError> {
    let curve = parse_curve_spec(spec)?;
    let matrices = curve.cartier_data();
    Ok(Report {
        curve,
        matrices,
        iterates: None,
        invariants: None,
        oracle: None,
    })
}

/// The `invariants` command: matrices, iterates and p-torsion data.
pub fn cmd_invariants(spec: &str) -> Result<Report, CliError> {
    let mut report = cmd_matrix(spec)?;
    fill_invariants(&mut report)?;
    Ok(report)
}

fn fill_invariants(report: &mut Report) -> Result<(), CliError> {
    let x = &report.curve;
    report.iterates = Some(Iterates {
        frobenius: invariants::frobenius_iterate(x),
        cartier: invariants::cartier_iterate(x),
    });
    let zeta = invariants::mod_p_zeta(x)?;
    report.invariants = Some(InvariantReport {
        p_rank: invariants::p_rank(x)?,
        a_number: invariants::a_number(x),
        superspecial: invariants::is_superspecial(x),
        l_mod_p: zeta.l_mod_p,
        chi_mod_p: zeta.chi_mod_p,
    });
    Ok(())
}

/// The `verify` command: everything, cross-checked against the
/// point-counting oracle. A report with any `false` agreement flag means
/// a bug somewhere; the binary exits 5 on it.
pub fn cmd_verify(spec: &str, bound: u64, seed: u64) -> Result<Report, CliError> {
    let mut report = cmd_invariants(spec)?;
    let x = report.curve.clone();
    let counts = oracle::point_counts(&x, bound)?;
    let l_exact = oracle::l_polynomial_exact(&x, bound)?;
    let p_rank_oracle = l_exact.degree_mod_p(x.p());
    let inv = report.invariants.as_ref().expect("filled above");
    let l_match = l_exact.reduce_mod_p(x.p()) == inv.l_mod_p;
    let p_rank_match = p_rank_oracle == inv.p_rank;
    let substitution_check = substitution_smoke_test(&x, counts.counts(), bound, seed)?;
    report.oracle = Some(OracleReport {
        counts: counts.counts().to_vec(),
        l_exact: l_exact.coefficients().to_vec(),
        p_rank: p_rank_oracle,
        l_match,
        p_rank_match,
        substitution_check,
    });
    Ok(report)
}

/// Recounts points on the isomorphic model `y² = f(ux + v)` for one
/// seeded random unit `u` and offset `v`; the counts must not move.
fn substitution_smoke_test(
    x: &HyperellipticCurve,
    counts: &[u64],
    bound: u64,
    seed: u64,
) -> Result<bool, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ctx = x.context();
    let u = loop {
        let u = FieldElement::from_index(ctx, rng.gen_range(0..ctx.q()));
        if !u.is_zero() {
            break u;
        }
    };
    let v = FieldElement::from_index(ctx, rng.gen_range(0..ctx.q()));
    let y = x
        .substitute_linear(&u, &v)
        .map_err(|e| CliError::Internal(format!("substitution failed: {e}")))?;
    for (i, &n) in counts.iter().enumerate() {
        if oracle::count_points(&y, i as u32 + 1, bound)? != n {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Agree,
    Differ,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Agree => write!(f, "AGREE"),
            Verdict::Differ => write!(f, "DIFFER"),
        }
    }
}

/// Output of the `pitfall` command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PitfallDemo {
    pub curve: HyperellipticCurve,
    /// The wrong product `Y · Y^σ ⋯ Y^{σ^{e−1}}`.
    pub naive_product: Matrix,
    /// Its characteristic polynomial κ(T), over `F_q`.
    pub kappa: Polynomial,
    /// `T^g · κ(T)`: what the naive route would report as χ mod p.
    pub chi_from_naive: Polynomial,
    /// The correct `χ(T) mod p`, over `F_p`.
    pub chi_correct: Polynomial,
    pub verdict: Verdict,
}

/// The `pitfall` command: runs the classical wrong-order product and
/// compares its zeta claim with the correct one. Kept as a separate verb
/// so the wrong product can never leak out of the correct-path commands.
pub fn cmd_pitfall(spec: &str) -> Result<PitfallDemo, CliError> {
    let curve = parse_curve_spec(spec)?;
    let naive_product = invariants::naive_yui_product(&curve);
    let kappa = naive_product.char_poly().expect("square");
    let shift = Polynomial::monomial(FieldElement::one(curve.context()), curve.genus());
    let chi_from_naive = kappa.checked_mul(&shift).expect("same context");
    let chi_correct = invariants::chi_mod_p(&curve)?;
    let chi_lifted = lift_to(&chi_correct, curve.context());
    let verdict = if chi_from_naive == chi_lifted {
        Verdict::Agree
    } else {
        Verdict::Differ
    };
    Ok(PitfallDemo {
        curve,
        naive_product,
        kappa,
        chi_from_naive,
        chi_correct,
        verdict,
    })
}

/// Re-reads a polynomial over `F_p` as a polynomial over `F_q`.
fn lift_to(poly: &Polynomial, ctx: &Arc<FieldContext>) -> Polynomial {
    let coeffs = poly
        .coeffs()
        .iter()
        .map(|c| {
            let v = c.in_prime_subfield().expect("poly over F_p");
            FieldElement::from_int(ctx, v as i64)
        })
        .collect();
    Polynomial::new(ctx, coeffs).expect("constants share the context")
}

// ---------------------------------------------------------------------
// Text output
// ---------------------------------------------------------------------

/// Pretty form for a polynomial whose coefficients sit in the prime
/// subfield, ascending: `1 + 2*T^2 + T^4`.
pub fn pretty_fp_poly(poly: &Polynomial) -> String {
    let terms: Vec<String> = poly
        .coeffs()
        .iter()
        .enumerate()
        .filter_map(|(i, c)| {
            let v = c.in_prime_subfield().unwrap_or_else(|| {
                unreachable!("pretty_fp_poly expects prime-subfield coefficients")
            });
            if v == 0 {
                return None;
            }
            Some(match (i, v) {
                (0, v) => format!("{v}"),
                (1, 1) => "T".to_string(),
                (1, v) => format!("{v}*T"),
                (i, 1) => format!("T^{i}"),
                (i, v) => format!("{v}*T^{i}"),
            })
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

fn pretty_int_poly(coeffs: &[i128]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter_map(|(i, &v)| {
            if v == 0 {
                return None;
            }
            Some(match (i, v) {
                (0, v) => format!("{v}"),
                (1, 1) => "T".to_string(),
                (1, v) => format!("{v}*T"),
                (i, 1) => format!("T^{i}"),
                (i, v) => format!("{v}*T^{i}"),
            })
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// General `F_q[T]` polynomial, ascending. Prime-subfield coefficients
/// print as bare integers, others in bracket form.
pub fn pretty_fq_poly(poly: &Polynomial) -> String {
    let terms: Vec<String> = poly
        .coeffs()
        .iter()
        .enumerate()
        .filter_map(|(i, c)| {
            if c.is_zero() {
                return None;
            }
            let coeff = match c.in_prime_subfield() {
                Some(v) => v.to_string(),
                None => c.to_string(),
            };
            Some(match (i, coeff.as_str()) {
                (0, _) => coeff,
                (1, "1") => "T".to_string(),
                (1, _) => format!("{coeff}*T"),
                (i, "1") => format!("T^{i}"),
                (i, _) => format!("{coeff}*T^{i}"),
            })
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

fn curve_header(curve: &HyperellipticCurve) -> String {
    let ctx = curve.context();
    let modulus: Vec<String> = ctx.modulus().iter().map(u64::to_string).collect();
    format!(
        "curve: y^2 = f(x) over F_{} (p = {}, e = {}, modulus = [{}]), genus {}\nf = {}\n",
        ctx.q(),
        ctx.p(),
        ctx.e(),
        modulus.join(","),
        curve.genus(),
        curve.f()
    )
}

pub fn report_text(report: &Report) -> String {
    let mut out = curve_header(&report.curve);
    out += &format!(
        "Y (coefficient matrix, Y_ij = c_(ip-j)):   {}\n",
        report.matrices.coefficient
    );
    out += &format!(
        "B (Cartier–Manin, τ-linear, left action):  {}\n",
        report.matrices.cartier_manin
    );
    out += &format!(
        "A (Hasse–Witt, σ-linear, left action):     {}\n",
        report.matrices.hasse_witt
    );
    if let Some(it) = &report.iterates {
        out += &format!(
            "M = A·A^σ⋯A^(σ^(e-1)) (F_q-linear):        {}\n",
            it.frobenius
        );
        out += &format!(
            "N = B·B^τ⋯B^(τ^(e-1)) (F_q-linear):        {}\n",
            it.cartier
        );
    }
    if let Some(inv) = &report.invariants {
        out += &format!("p-rank:       {}\n", inv.p_rank);
        out += &format!("a-number:     {}\n", inv.a_number);
        out += &format!("superspecial: {}\n", inv.superspecial);
        out += &format!("L(T) mod p:   {}\n", pretty_fp_poly(&inv.l_mod_p));
        out += &format!("χ(T) mod p:   {}\n", pretty_fp_poly(&inv.chi_mod_p));
    }
    if let Some(o) = &report.oracle {
        let counts: Vec<String> = o.counts.iter().map(u64::to_string).collect();
        out += &format!("oracle point counts N_k:  [{}]\n", counts.join(", "));
        out += &format!(
            "oracle exact L(T):        {}\n",
            pretty_int_poly(&o.l_exact)
        );
        out += &format!("oracle p-rank:            {}\n", o.p_rank);
        out += &format!(
            "agreement: L mod p {} | p-rank {} | substitution smoke {}\n",
            if o.l_match { "MATCH" } else { "MISMATCH" },
            if o.p_rank_match { "MATCH" } else { "MISMATCH" },
            if o.substitution_check { "PASS" } else { "FAIL" },
        );
    }
    out
}

pub fn pitfall_text(demo: &PitfallDemo) -> String {
    let mut out = curve_header(&demo.curve);
    out += &format!(
        "naive product Y·Y^σ⋯Y^(σ^(e-1)) (WRONG for zeta purposes): {}\n",
        demo.naive_product
    );
    out += &format!(
        "κ(T) = char poly of naive product: {}\n",
        pretty_fq_poly(&demo.kappa)
    );
    out += &format!(
        "naive zeta claim T^g·κ(T):         {}\n",
        pretty_fq_poly(&demo.chi_from_naive)
    );
    out += &format!(
        "correct χ(T) mod p:                {}\n",
        pretty_fp_poly(&demo.chi_correct)
    );
    out += &format!("verdict: {}\n", demo.verdict);
    if demo.verdict == Verdict::Agree {
        out += "note: the wrong product is invisible on this curve (e.g. e = 1 or\n\
                an accidental coincidence); it is still not the Frobenius iterate.\n";
    }
    out
}

// ---------------------------------------------------------------------
// Machine output
// ---------------------------------------------------------------------

const MACHINE_HEADER: &str = "format = cartier-manin/1";
const PITFALL_HEADER: &str = "format = cartier-manin-pitfall/1";

fn emit_curve(out: &mut String, curve: &HyperellipticCurve) {
    let ctx = curve.context();
    let modulus: Vec<String> = ctx.modulus().iter().map(u64::to_string).collect();
    out.push_str(&format!("curve.p = {}\n", ctx.p()));
    out.push_str(&format!("curve.e = {}\n", ctx.e()));
    out.push_str(&format!("curve.modulus = [{}]\n", modulus.join(",")));
    out.push_str(&format!("curve.genus = {}\n", curve.genus()));
    out.push_str(&format!("curve.f = {}\n", curve.f()));
}

/// Stable machine-readable key/value document. `parse_machine_report`
/// inverts it exactly.
pub fn report_machine(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(MACHINE_HEADER);
    out.push('\n');
    emit_curve(&mut out, &report.curve);
    out.push_str(&format!(
        "matrix.coefficient = {}\n",
        report.matrices.coefficient
    ));
    out.push_str(&format!(
        "matrix.cartier_manin = {}\n",
        report.matrices.cartier_manin
    ));
    out.push_str(&format!(
        "matrix.hasse_witt = {}\n",
        report.matrices.hasse_witt
    ));
    if let Some(it) = &report.iterates {
        out.push_str(&format!("iterate.frobenius = {}\n", it.frobenius));
        out.push_str(&format!("iterate.cartier = {}\n", it.cartier));
    }
    if let Some(inv) = &report.invariants {
        out.push_str(&format!("invariant.p_rank = {}\n", inv.p_rank));
        out.push_str(&format!("invariant.a_number = {}\n", inv.a_number));
        out.push_str(&format!("invariant.superspecial = {}\n", inv.superspecial));
        out.push_str(&format!("invariant.l_mod_p = {}\n", inv.l_mod_p));
        out.push_str(&format!("invariant.chi_mod_p = {}\n", inv.chi_mod_p));
    }
    if let Some(o) = &report.oracle {
        let counts: Vec<String> = o.counts.iter().map(u64::to_string).collect();
        let l: Vec<String> = o.l_exact.iter().map(i128::to_string).collect();
        out.push_str(&format!("oracle.counts = [{}]\n", counts.join(",")));
        out.push_str(&format!("oracle.l_exact = [{}]\n", l.join(",")));
        out.push_str(&format!("oracle.p_rank = {}\n", o.p_rank));
        out.push_str(&format!("oracle.l_match = {}\n", o.l_match));
        out.push_str(&format!("oracle.p_rank_match = {}\n", o.p_rank_match));
        out.push_str(&format!(
            "oracle.substitution_check = {}\n",
            o.substitution_check
        ));
    }
    out
}

pub fn pitfall_machine(demo: &PitfallDemo) -> String {
    let mut out = String::new();
    out.push_str(PITFALL_HEADER);
    out.push('\n');
    emit_curve(&mut out, &demo.curve);
    out.push_str(&format!("pitfall.naive_product = {}\n", demo.naive_product));
    out.push_str(&format!("pitfall.kappa = {}\n", demo.kappa));
    out.push_str(&format!(
        "pitfall.chi_from_naive = {}\n",
        demo.chi_from_naive
    ));
    out.push_str(&format!("pitfall.chi_correct = {}\n", demo.chi_correct));
    out.push_str(&format!("pitfall.verdict = {}\n", demo.verdict));
    out
}

/// Reads back a machine-format report.
pub fn parse_machine_report(text: &str) -> Result<Report, CliError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let err = |msg: &str| CliError::Parse(format!("machine report: {msg}"));
    if lines.next().map(str::trim) != Some(MACHINE_HEADER) {
        return Err(err("missing or wrong format line"));
    }
    let mut fields: Vec<(String, String)> = Vec::new();
    for line in lines {
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| err(&format!("bad line `{line}`")))?;
        fields.push((k.trim().to_string(), v.trim().to_string()));
    }
    type FieldIter = std::iter::Peekable<std::vec::IntoIter<(String, String)>>;
    fn take(it: &mut FieldIter, key: &str) -> Result<String, CliError> {
        let err = |msg: String| CliError::Parse(format!("machine report: {msg}"));
        match it.next() {
            Some((k, v)) if k == key => Ok(v),
            Some((k, _)) => Err(err(format!("expected key `{key}`, found `{k}`"))),
            None => Err(err(format!("missing key `{key}`"))),
        }
    }
    let mut it: FieldIter = fields.into_iter().peekable();

    let p: u64 = take(&mut it, "curve.p")?
        .parse()
        .map_err(|_| err("bad curve.p"))?;
    let e: usize = take(&mut it, "curve.e")?
        .parse()
        .map_err(|_| err("bad curve.e"))?;
    let modulus =
        parse_i64_list(&take(&mut it, "curve.modulus")?).ok_or_else(|| err("bad modulus"))?;
    let genus: usize = take(&mut it, "curve.genus")?
        .parse()
        .map_err(|_| err("bad curve.genus"))?;
    let ctx = if e == 1 {
        FieldContext::prime(p)
    } else {
        FieldContext::extension(p, &modulus)
    }
    .map_err(|ge| err(&ge.to_string()))?;
    let f =
        Polynomial::parse(&ctx, &take(&mut it, "curve.f")?).map_err(|pe| err(&pe.to_string()))?;
    let curve = HyperellipticCurve::new(&ctx, f, genus).map_err(|ce| err(&ce.to_string()))?;

    let mat = |v: String| Matrix::parse(&ctx, &v).map_err(|me| err(&me.to_string()));
    let matrices = CartierData {
        coefficient: mat(take(&mut it, "matrix.coefficient")?)?,
        cartier_manin: mat(take(&mut it, "matrix.cartier_manin")?)?,
        hasse_witt: mat(take(&mut it, "matrix.hasse_witt")?)?,
    };

    let mut report = Report {
        curve,
        matrices,
        iterates: None,
        invariants: None,
        oracle: None,
    };

    if it.peek().is_some_and(|(k, _)| k == "iterate.frobenius") {
        let frobenius = mat(take(&mut it, "iterate.frobenius")?)?;
        let cartier = mat(take(&mut it, "iterate.cartier")?)?;
        report.iterates = Some(Iterates { frobenius, cartier });
    }
    if it.peek().is_some_and(|(k, _)| k == "invariant.p_rank") {
        let ctx_p = FieldContext::prime(p).map_err(|ge| err(&ge.to_string()))?;
        let p_rank = take(&mut it, "invariant.p_rank")?
            .parse()
            .map_err(|_| err("bad p_rank"))?;
        let a_number = take(&mut it, "invariant.a_number")?
            .parse()
            .map_err(|_| err("bad a_number"))?;
        let superspecial = parse_bool(&take(&mut it, "invariant.superspecial")?)
            .ok_or_else(|| err("bad superspecial"))?;
        let l_mod_p = Polynomial::parse(&ctx_p, &take(&mut it, "invariant.l_mod_p")?)
            .map_err(|pe| err(&pe.to_string()))?;
        let chi_mod_p = Polynomial::parse(&ctx_p, &take(&mut it, "invariant.chi_mod_p")?)
            .map_err(|pe| err(&pe.to_string()))?;
        report.invariants = Some(InvariantReport {
            p_rank,
            a_number,
            superspecial,
            l_mod_p,
            chi_mod_p,
        });
    }
    if it.peek().is_some_and(|(k, _)| k == "oracle.counts") {
        let counts =
            parse_u64_list(&take(&mut it, "oracle.counts")?).ok_or_else(|| err("bad counts"))?;
        let l_exact =
            parse_i128_list(&take(&mut it, "oracle.l_exact")?).ok_or_else(|| err("bad l_exact"))?;
        let p_rank = take(&mut it, "oracle.p_rank")?
            .parse()
            .map_err(|_| err("bad oracle.p_rank"))?;
        let l_match =
            parse_bool(&take(&mut it, "oracle.l_match")?).ok_or_else(|| err("bad l_match"))?;
        let p_rank_match = parse_bool(&take(&mut it, "oracle.p_rank_match")?)
            .ok_or_else(|| err("bad p_rank_match"))?;
        let substitution_check = parse_bool(&take(&mut it, "oracle.substitution_check")?)
            .ok_or_else(|| err("bad substitution_check"))?;
        report.oracle = Some(OracleReport {
            counts,
            l_exact,
            p_rank,
            l_match,
            p_rank_match,
            substitution_check,
        });
    }
    if let Some((k, _)) = it.next() {
        return Err(err(&format!("unexpected trailing key `{k}`")));
    }
    Ok(report)
}

fn parse_bool(s: &str) -> Option<bool> {
    match s {
        "true" => Some(true),
        "false" => Some(false),
        _ => None,
    }
}

fn parse_i64_list(s: &str) -> Option<Vec<i64>> {
    let inner = crate::textutil::strip_brackets(s)?;
    crate::textutil::split_top_level(inner)
        .ok()?
        .iter()
        .map(|t| t.parse().ok())
        .collect()
}

fn parse_u64_list(s: &str) -> Option<Vec<u64>> {
    let inner = crate::textutil::strip_brackets(s)?;
    crate::textutil::split_top_level(inner)
        .ok()?
        .iter()
        .map(|t| t.parse().ok())
        .collect()
}

fn parse_i128_list(s: &str) -> Option<Vec<i128>> {
    let inner = crate::textutil::strip_brackets(s)?;
    crate::textutil::split_top_level(inner)
        .ok()?
        .iter()
        .map(|t| t.parse().ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{F125_SPEC, F27_SPEC, G1_F3_SPEC};

    #[test]
    fn matrix_report_for_f125() {
        let report = cmd_matrix(F125_SPEC).unwrap();
        let ctx = report.curve.context();
        assert_eq!(
            report.matrices.coefficient,
            Matrix::parse(ctx, "[[g^41,g^105],[2,g^95]]").unwrap()
        );
        assert!(report.iterates.is_none());
        let text = report_text(&report);
        assert!(text.contains("Cartier–Manin, τ-linear, left action"));
        assert!(text.contains("Hasse–Witt, σ-linear, left action"));
    }

    #[test]
    fn invariants_report_values() {
        let report = cmd_invariants(F125_SPEC).unwrap();
        let inv = report.invariants.as_ref().unwrap();
        assert_eq!(inv.p_rank, 0);
        assert_eq!(inv.a_number, 1);
        assert!(!inv.superspecial);
        assert_eq!(pretty_fp_poly(&inv.l_mod_p), "1");
        assert_eq!(pretty_fp_poly(&inv.chi_mod_p), "T^4");

        let report = cmd_invariants(F27_SPEC).unwrap();
        let inv = report.invariants.as_ref().unwrap();
        assert_eq!(pretty_fp_poly(&inv.l_mod_p), "1 + T^2");

        let report = cmd_invariants(G1_F3_SPEC).unwrap();
        let inv = report.invariants.as_ref().unwrap();
        assert_eq!(inv.a_number, 1);
        assert!(inv.superspecial);
    }

    #[test]
    fn verify_agrees_on_fixtures() {
        let report = cmd_verify(G1_F3_SPEC, 1000, DEFAULT_SEED).unwrap();
        assert_eq!(report.oracle_agrees(), Some(true));
        let o = report.oracle.as_ref().unwrap();
        assert_eq!(o.l_exact, vec![1, 0, 3]);

        let report = cmd_verify(F27_SPEC, 1_000_000, DEFAULT_SEED).unwrap();
        assert_eq!(report.oracle_agrees(), Some(true));
        assert_eq!(
            report.oracle.as_ref().unwrap().l_exact,
            vec![1, 6, 52, 162, 729]
        );
    }

    #[test]
    fn verify_respects_bound() {
        let err = cmd_verify(F27_SPEC, 10, DEFAULT_SEED).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_BOUND);
    }

    #[test]
    fn pitfall_fixture_verdicts() {
        let demo = cmd_pitfall(F27_SPEC).unwrap();
        assert_eq!(demo.verdict, Verdict::Differ);
        let text = pitfall_text(&demo);
        assert!(text.contains("verdict: DIFFER"));

        // e = 1: only one factor, so the two sides must agree.
        let demo = cmd_pitfall(G1_F3_SPEC).unwrap();
        assert_eq!(demo.verdict, Verdict::Agree);

        // The F_125 fixture also differs: the naive product is nonzero
        // with char poly T^2 + 2T against the true T^2.
        let demo = cmd_pitfall(F125_SPEC).unwrap();
        assert_eq!(demo.verdict, Verdict::Differ);
    }

    #[test]
    fn machine_round_trip_all_sections() {
        for spec in [F125_SPEC, F27_SPEC, G1_F3_SPEC] {
            let r1 = cmd_matrix(spec).unwrap();
            assert_eq!(parse_machine_report(&report_machine(&r1)).unwrap(), r1);
            let r2 = cmd_invariants(spec).unwrap();
            assert_eq!(parse_machine_report(&report_machine(&r2)).unwrap(), r2);
        }
        let r3 = cmd_verify(G1_F3_SPEC, 1000, DEFAULT_SEED).unwrap();
        let emitted = report_machine(&r3);
        let parsed = parse_machine_report(&emitted).unwrap();
        assert_eq!(parsed, r3);
        // Idempotent re-emission.
        assert_eq!(report_machine(&parsed), emitted);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            cmd_matrix("p = 3\ne = 1\nf = [0,1,0,1]\n")
                .unwrap_err()
                .exit_code(),
            EXIT_PARSE
        );
        assert_eq!(
            cmd_matrix("p = 2\ne = 1\ngenus = 1\nf = [0,1,0,1]\n")
                .unwrap_err()
                .exit_code(),
            EXIT_VALIDATION
        );
    }

    #[test]
    fn pretty_polys() {
        let ctx = FieldContext::prime(5).unwrap();
        assert_eq!(pretty_fp_poly(&Polynomial::from_ints(&ctx, &[1])), "1");
        assert_eq!(pretty_fp_poly(&Polynomial::zero(&ctx)), "0");
        assert_eq!(
            pretty_fp_poly(&Polynomial::from_ints(&ctx, &[1, 2, 1])),
            "1 + 2*T + T^2"
        );
        assert_eq!(
            pretty_int_poly(&[1, 0, 250, 0, 15625]),
            "1 + 250*T^2 + 15625*T^4"
        );
    }
}
