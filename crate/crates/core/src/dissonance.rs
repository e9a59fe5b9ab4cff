//! Dissonance points of the maximum and minimum factorization length.
//!
//! The eventual quasilinear function `g` is never fitted. Instead the
//! recurrence `f(x + s) = f(x) + 1` (`s = n_1` for the maximum, `s = n_k`
//! for the minimum) is verified on a window starting at an anchor, and `g`
//! is obtained by running that recurrence backwards from the anchor.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factorization::{invariant_table, InvariantId, InvariantTable};
use crate::hilbert::{numerator_chihat_f, Settings};
use crate::semigroup::NumericalSemigroup;

/// The quasilinear extension `g` of `M_S` or `m_S`.
#[derive(Debug, Clone)]
pub struct QuasiExtension {
    id: InvariantId,
    step: u64,
    anchor: u64,
    table: InvariantTable,
}

impl QuasiExtension {
    /// Verifies the recurrence on `[anchor, anchor + n_1 n_k]`, doubling the
    /// anchor once if it fails there.
    pub fn new(
        s: &NumericalSemigroup,
        f: InvariantId,
        anchor: Option<u64>,
        cap: u64,
    ) -> Result<Self> {
        let step = match f {
            InvariantId::MaxLen => s.first(),
            InvariantId::MinLen => s.last(),
            other => return Err(Error::UnsupportedInvariant(other.name())),
        };
        let anchor = anchor.unwrap_or_else(|| s.default_anchor());
        let floor = s.frobenius() + (s.first() * s.last() + s.generator_sum()) as i64;
        if (anchor as i64) <= floor {
            return Err(Error::AnchorUnverified(anchor));
        }
        let window = s.first() * s.last();
        for a in [anchor, 2 * anchor] {
            let table = invariant_table(s, f, a + window + step, cap)?;
            let holds = (a..=a + window).all(|x| {
                let x = x as i64;
                table.at(x + step as i64) == table.at(x) + 1
            });
            if holds {
                return Ok(Self {
                    id: f,
                    step,
                    anchor: a,
                    table,
                });
            }
        }
        Err(Error::AnchorUnverified(2 * anchor))
    }

    pub fn anchor(&self) -> u64 {
        self.anchor
    }

    pub fn invariant(&self) -> InvariantId {
        self.id
    }

    /// The underlying invariant, tabulated at least up to the anchor.
    pub fn table(&self) -> &InvariantTable {
        &self.table
    }

    /// `g(n) = f(n + t s) - t` with `t` the least nonnegative integer such
    /// that `n + t s >= anchor`.
    pub fn eval(&self, n: i64) -> i64 {
        let step = self.step as i64;
        let gap = self.anchor as i64 - n;
        let t = if gap <= 0 { 0 } else { (gap + step - 1) / step };
        self.table.at(n + t * step) - t
    }
}

/// `g(n)` with the default anchor.
pub fn quasi_extension(
    s: &NumericalSemigroup,
    f: InvariantId,
    n: i64,
    anchor: Option<u64>,
) -> Result<i64> {
    Ok(QuasiExtension::new(s, f, anchor, Settings::default().cap)?.eval(n))
}

/// Largest `n >= F(S)` with `f(n) != g(n)`, by direct search.
pub fn dissonance_bruteforce(s: &NumericalSemigroup, f: InvariantId) -> Result<i64> {
    let g = QuasiExtension::new(s, f, None, Settings::default().cap)?;
    bruteforce_with(s, &g)
}

fn bruteforce_with(s: &NumericalSemigroup, g: &QuasiExtension) -> Result<i64> {
    let frob = s.frobenius();
    (frob..=g.anchor() as i64)
        .rev()
        .find(|&n| g.table().at(n) != g.eval(n))
        .ok_or(Error::NoDissonance)
}

/// `deg(Σ χ̂_f(Δ_n) t^n) - n_[k]`.
pub fn dissonance_from_numerator(
    s: &NumericalSemigroup,
    f: InvariantId,
    settings: &Settings,
) -> Result<i64> {
    if !matches!(f, InvariantId::MaxLen | InvariantId::MinLen) {
        return Err(Error::UnsupportedInvariant(f.name()));
    }
    let report = numerator_chihat_f(s, f, settings)?;
    let degree = report.poly.degree().ok_or(Error::ZeroNumerator)?;
    Ok(degree as i64 - s.generator_sum() as i64)
}

/// True iff `f` agrees with its quasilinear extension on every element of
/// `S` up to the anchor.
pub fn is_harmonic(s: &NumericalSemigroup, f: InvariantId) -> Result<bool> {
    let g = QuasiExtension::new(s, f, None, Settings::default().cap)?;
    Ok(harmonic_with(s, &g))
}

fn harmonic_with(s: &NumericalSemigroup, g: &QuasiExtension) -> bool {
    (0..=g.anchor() as i64)
        .filter(|&n| s.contains(n))
        .all(|n| g.table().at(n) == g.eval(n))
}

#[allow(non_snake_case)]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DissonanceReport {
    pub invariant: InvariantId,
    /// From the degree of the χ̂ numerator; `None` when it is zero.
    pub D_formula: Option<i64>,
    /// By search; `None` when no `n >= F(S)` dissents.
    pub D_bruteforce: Option<i64>,
    pub harmonic: bool,
    pub anchor: u64,
}

impl DissonanceReport {
    pub fn new(s: &NumericalSemigroup, f: InvariantId, settings: &Settings) -> Result<Self> {
        let g = QuasiExtension::new(s, f, None, settings.cap)?;
        let brute = match bruteforce_with(s, &g) {
            Ok(d) => Some(d),
            Err(Error::NoDissonance) => None,
            Err(e) => return Err(e),
        };
        let formula = match dissonance_from_numerator(s, f, settings) {
            Ok(d) => Some(d),
            Err(Error::ZeroNumerator) => None,
            Err(e) => return Err(e),
        };
        Ok(Self {
            invariant: f,
            D_formula: formula,
            D_bruteforce: brute,
            harmonic: harmonic_with(s, &g),
            anchor: g.anchor(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
