//! Rational numerators of the Hilbert series `H(S;t) = Σ_{n∈S} t^n` and of
//! augmented series `H_f(S;t) = Σ f(n) t^n`.
//!
//! Every numerator that depends on a truncation is computed element by
//! element from divisor complexes and then checked against the independent
//! series-algebra route; a disagreement is reported as
//! [`Error::IdentityMismatch`]. Numerators are certified by requiring a
//! window of zero coefficients just below the truncation degree; a failing
//! window triggers one retry at twice the degree.

use serde::{Deserialize, Serialize};

use crate::complex::{weighted_euler_all_subsets, SquarefreeDivisorComplex};
use crate::error::{Error, Result};
use crate::factorization::{invariant_table, InvariantId, InvariantTable, DEFAULT_ENUMERATION_CAP};
use crate::semigroup::NumericalSemigroup;
use crate::series::{
    is_stably_zero, lambda_times, numerator_extract, SparsePolynomial, TruncatedSeries,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NumeratorForm {
    /// `Σ_{a ∈ Ap(S;p)} t^a` over `1 - t^p`.
    #[serde(rename = "apery")]
    Apery,
    /// Coefficients `χ(Δ_n)` (plain series) or `χ_f(Δ_n)` (augmented).
    #[serde(rename = "chi")]
    Chi,
    /// Coefficients `χ̂_f(Δ_n)`, alongside the `λ(t) H(S;t)` term.
    #[serde(rename = "chihat")]
    ChiHat,
    /// `f(n) - 2f(n-p) + f(n-2p)` over `(1 - t^p)^2`.
    #[serde(rename = "secdiff")]
    SecondDifference,
    /// `(1 - t) H(S;t)`.
    #[serde(rename = "oneminust")]
    OneMinusT,
    /// Closed form for two generators.
    #[serde(rename = "closed2gen")]
    ClosedTwoGen,
}

impl NumeratorForm {
    pub fn name(self) -> &'static str {
        match self {
            NumeratorForm::Apery => "apery",
            NumeratorForm::Chi => "chi",
            NumeratorForm::ChiHat => "chihat",
            NumeratorForm::SecondDifference => "secdiff",
            NumeratorForm::OneMinusT => "oneminust",
            NumeratorForm::ClosedTwoGen => "closed2gen",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [
            NumeratorForm::Apery,
            NumeratorForm::Chi,
            NumeratorForm::ChiHat,
            NumeratorForm::SecondDifference,
            NumeratorForm::OneMinusT,
            NumeratorForm::ClosedTwoGen,
        ]
        .into_iter()
        .find(|f| f.name() == name)
    }
}

/// A numerator together with the denominator it sits over.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumeratorReport {
    pub form: NumeratorForm,
    /// Exponents `e` of the factors `(1 - t^e)`, with multiplicity.
    pub denominator: Vec<u64>,
    #[serde(rename = "terms")]
    pub poly: SparsePolynomial,
    /// Truncation degree the numerator was computed and certified at;
    /// `None` for exact forms.
    pub certified_to: Option<u64>,
    pub stable: bool,
}

impl NumeratorReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Human-readable denominator, e.g. `(1 - t^6)(1 - t^9)(1 - t^20)`.
    pub fn denominator_text(&self) -> String {
        self.denominator
            .iter()
            .map(|&e| {
                if e == 1 {
                    "(1 - t)".to_string()
                } else {
                    format!("(1 - t^{e})")
                }
            })
            .collect()
    }
}

/// Truncation degree, stability window and enumeration cap; unset values
/// fall back to the semigroup's defaults.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    pub trunc: Option<u64>,
    pub window: Option<u64>,
    pub cap: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            trunc: None,
            window: None,
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

impl Settings {
    pub fn with_trunc(trunc: u64) -> Self {
        Self {
            trunc: Some(trunc),
            ..Self::default()
        }
    }

    pub fn trunc_for(&self, s: &NumericalSemigroup) -> u64 {
        self.trunc.unwrap_or_else(|| s.default_trunc())
    }

    pub fn window_for(&self, s: &NumericalSemigroup) -> u64 {
        self.window.unwrap_or_else(|| s.default_window())
    }
}

/// `H(S;t)` up to degree `trunc`.
pub fn hilbert_series(s: &NumericalSemigroup, trunc: u64) -> TruncatedSeries {
    TruncatedSeries::from_coeffs((0..=trunc).map(|n| s.contains(n as i64) as i64).collect())
}

/// `H_f(S;t)` up to degree `trunc`.
pub fn augmented_series(
    s: &NumericalSemigroup,
    f: InvariantId,
    trunc: u64,
    cap: u64,
) -> Result<TruncatedSeries> {
    Ok(table_series(&invariant_table(s, f, trunc, cap)?))
}

fn table_series(t: &InvariantTable) -> TruncatedSeries {
    TruncatedSeries::from_coeffs(t.values.clone())
}

/// Apéry numerator over `1 - t^p`, for any positive `p ∈ S`.
pub fn numerator_apery(s: &NumericalSemigroup, p: u64) -> Result<NumeratorReport> {
    let ap = s.apery(p)?;
    Ok(NumeratorReport {
        form: NumeratorForm::Apery,
        denominator: vec![p],
        poly: SparsePolynomial::from_terms(ap.into_iter().map(|a| (a, 1))),
        certified_to: None,
        stable: true,
    })
}

/// `Σ χ(Δ_n) t^n` over `Π (1 - t^{n_i})`.
pub fn numerator_chi(s: &NumericalSemigroup, settings: &Settings) -> Result<NumeratorReport> {
    let window = settings.window_for(s);
    with_retry(settings.trunc_for(s), true, |trunc| {
        let poly = SparsePolynomial::from_terms(
            (0..=trunc).map(|n| (n, SquarefreeDivisorComplex::new(s, n).euler_char())),
        );
        let via_series = numerator_extract(&hilbert_series(s, trunc), s)?;
        check_same(&poly, &via_series)?;
        Ok(report(
            NumeratorForm::Chi,
            s.generators().to_vec(),
            poly,
            trunc,
            window,
        ))
    })
}

/// `Σ χ_f(Δ_n) t^n` over `Π (1 - t^{n_i})`.
pub fn numerator_chi_f(
    s: &NumericalSemigroup,
    f: InvariantId,
    settings: &Settings,
) -> Result<NumeratorReport> {
    let window = settings.window_for(s);
    let strict = f != InvariantId::MinLinf;
    with_retry(settings.trunc_for(s), strict, |trunc| {
        let table = invariant_table(s, f, trunc, settings.cap)?;
        let mut terms = Vec::new();
        for n in 0..=trunc {
            let by_subsets = weighted_euler_all_subsets(s, n, &table)?;
            let by_faces = SquarefreeDivisorComplex::new(s, n).weighted_euler(s, &table)?;
            if by_subsets != by_faces {
                return Err(Error::IdentityMismatch(n));
            }
            terms.push((n, by_subsets));
        }
        let poly = SparsePolynomial::from_terms(terms);

        let h_f = table_series(&table);
        check_same(&poly, &numerator_extract(&h_f, s)?)?;
        // H_f = poly · z(t)
        let reexpanded = times_z(s, &poly, trunc)?;
        check_prefix(&reexpanded, &h_f, trunc.saturating_sub(s.generator_sum()))?;
        Ok(report(
            NumeratorForm::Chi,
            s.generators().to_vec(),
            poly,
            trunc,
            window,
        ))
    })
}

/// `Σ χ̂_f(Δ_n) t^n`, satisfying `H_f = λ(t) H(S;t) + poly · z(t)`.
pub fn numerator_chihat_f(
    s: &NumericalSemigroup,
    f: InvariantId,
    settings: &Settings,
) -> Result<NumeratorReport> {
    let window = settings.window_for(s);
    let strict = matches!(f, InvariantId::MaxLen | InvariantId::MinLen);
    with_retry(settings.trunc_for(s), strict, |trunc| {
        let table = invariant_table(s, f, trunc, settings.cap)?;
        let mut terms = Vec::new();
        for n in 0..=trunc {
            terms.push((
                n,
                SquarefreeDivisorComplex::new(s, n).augmented_euler(s, &table)?,
            ));
        }
        let poly = SparsePolynomial::from_terms(terms);

        let h_f = table_series(&table);
        let lambda_h = lambda_times(s, &hilbert_series(s, trunc))?;
        check_same(&poly, &numerator_extract(&h_f.sub(&lambda_h)?, s)?)?;
        let reexpanded = lambda_h.add(&times_z(s, &poly, trunc)?)?;
        check_prefix(&reexpanded, &h_f, trunc.saturating_sub(s.generator_sum()))?;
        Ok(report(
            NumeratorForm::ChiHat,
            s.generators().to_vec(),
            poly,
            trunc,
            window,
        ))
    })
}

/// `Σ (f(n) - 2f(n-p) + f(n-2p)) t^n` over `(1 - t^p)^2`.
///
/// Never fails on instability: the form only terminates when the period of
/// `f` divides `p`, so `stable` is simply reported.
pub fn numerator_second_difference(
    s: &NumericalSemigroup,
    f: InvariantId,
    p: u64,
    settings: &Settings,
) -> Result<NumeratorReport> {
    assert!(p >= 1, "shift must be positive");
    let trunc = settings.trunc_for(s);
    let window = settings.window_for(s);
    let table = invariant_table(s, f, trunc, settings.cap)?;
    let p = p as i64;
    let mut terms = Vec::new();
    for n in 0..=trunc as i64 {
        let c = table
            .at(n)
            .checked_sub(table.at(n - p).checked_mul(2).ok_or(Error::Overflow)?)
            .and_then(|x| x.checked_add(table.at(n - 2 * p)))
            .ok_or(Error::Overflow)?;
        terms.push((n as u64, c));
    }
    let poly = SparsePolynomial::from_terms(terms);

    let mut reexpanded = poly.to_series(trunc);
    reexpanded.div_one_minus(p as u64)?;
    reexpanded.div_one_minus(p as u64)?;
    check_prefix(&reexpanded, &table_series(&table), trunc)?;

    Ok(report(
        NumeratorForm::SecondDifference,
        vec![p as u64, p as u64],
        poly,
        trunc,
        window,
    ))
}

/// `(1 - t) H(S;t)`, a polynomial of degree `F(S) + 1`.
pub fn one_minus_t_form(s: &NumericalSemigroup) -> NumeratorReport {
    let top = s.frobenius() + 1;
    let poly = SparsePolynomial::from_terms(
        (0..=top).map(|d| (d as u64, s.contains(d) as i64 - s.contains(d - 1) as i64)),
    );
    NumeratorReport {
        form: NumeratorForm::OneMinusT,
        denominator: vec![1],
        poly,
        certified_to: None,
        stable: true,
    }
}

/// Closed χ̂ numerators for `S = <n_1, n_2>`: `-n_1 t^{n_1 n_2}` for the
/// maximum length and `-n_2 t^{n_1 n_2}` for the minimum length.
pub fn twogen_closed_forms(s: &NumericalSemigroup, f: InvariantId) -> Result<NumeratorReport> {
    if s.k() != 2 {
        return Err(Error::NotTwoGenerated);
    }
    let (n1, n2) = (s.first(), s.last());
    let coeff = match f {
        InvariantId::MaxLen => n1,
        InvariantId::MinLen => n2,
        other => return Err(Error::UnsupportedInvariant(other.name())),
    };
    Ok(NumeratorReport {
        form: NumeratorForm::ClosedTwoGen,
        denominator: vec![n1, n2],
        poly: SparsePolynomial::monomial(n1 * n2, -(coeff as i64)),
        certified_to: None,
        stable: true,
    })
}

fn report(
    form: NumeratorForm,
    denominator: Vec<u64>,
    poly: SparsePolynomial,
    trunc: u64,
    window: u64,
) -> NumeratorReport {
    let stable = is_stably_zero(&poly, trunc, window);
    NumeratorReport {
        form,
        denominator,
        poly,
        certified_to: Some(trunc),
        stable,
    }
}

// Runs `build` at `trunc`, and once more at `2 * trunc` if the result is not
// window-stable. With `strict`, a second failure is an error; otherwise the
// unstable report is returned as is.
fn with_retry<F>(trunc: u64, strict: bool, build: F) -> Result<NumeratorReport>
where
    F: Fn(u64) -> Result<NumeratorReport>,
{
    let first = build(trunc)?;
    if first.stable {
        return Ok(first);
    }
    let second = build(2 * trunc)?;
    if !second.stable && strict {
        return Err(Error::NotStable { trunc: 2 * trunc });
    }
    Ok(second)
}

fn times_z(s: &NumericalSemigroup, poly: &SparsePolynomial, trunc: u64) -> Result<TruncatedSeries> {
    let mut x = poly.to_series(trunc);
    for &g in s.generators() {
        x.div_one_minus(g)?;
    }
    Ok(x)
}

fn check_same(a: &SparsePolynomial, b: &SparsePolynomial) -> Result<()> {
    if a == b {
        return Ok(());
    }
    let first = a
        .terms()
        .chain(b.terms())
        .map(|(e, _)| e)
        .filter(|&e| a.coeff(e) != b.coeff(e))
        .min()
        .unwrap_or(0);
    Err(Error::IdentityMismatch(first))
}

fn check_prefix(a: &TruncatedSeries, b: &TruncatedSeries, upto: u64) -> Result<()> {
    match a.truncate(upto).first_difference(&b.truncate(upto)) {
        None => Ok(()),
        Some(d) => Err(Error::IdentityMismatch(d)),
    }
}
