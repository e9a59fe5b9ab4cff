//! Semigroups of the form `S = d1 S1 + d2 S2`.
//!
//! Only `gcd(d1, d2) = 1` is enforced. The membership and non-minimality
//! conditions on `d1`, `d2` are reported in [`Validity`] but not required,
//! so that glued semigroups whose scale factors miss those conditions can
//! still be built and examined.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factorization::{invariant_table, InvariantId};
use crate::hilbert::{augmented_series, hilbert_series};
use crate::semigroup::{gcd, NumericalSemigroup};
use crate::series::{SparsePolynomial, TruncatedSeries};

/// The ordered data `(S1, S2, d1, d2)`; swapping the factors changes which
/// decompositions count as maximal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingSpec {
    pub s1: NumericalSemigroup,
    pub s2: NumericalSemigroup,
    pub d1: u64,
    pub d2: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Validity {
    pub gcd_one: bool,
    pub d1_in_s2: bool,
    pub d2_in_s1: bool,
    pub d1_not_minimal_generator_of_s2: bool,
    pub d2_not_minimal_generator_of_s1: bool,
}

impl Validity {
    pub fn all(&self) -> bool {
        self.gcd_one
            && self.d1_in_s2
            && self.d2_in_s1
            && self.d1_not_minimal_generator_of_s2
            && self.d2_not_minimal_generator_of_s1
    }
}

/// Outcome of a coefficientwise comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesCheck {
    pub passed: bool,
    pub first_mismatch: Option<u64>,
}

impl SeriesCheck {
    fn from_mismatch(first_mismatch: Option<u64>) -> Self {
        Self {
            passed: first_mismatch.is_none(),
            first_mismatch,
        }
    }
}

impl GluingSpec {
    pub fn new(s1: NumericalSemigroup, s2: NumericalSemigroup, d1: u64, d2: u64) -> Self {
        Self { s1, s2, d1, d2 }
    }

    pub fn validity(&self) -> Validity {
        Validity {
            gcd_one: gcd(self.d1, self.d2) == 1,
            d1_in_s2: self.s2.contains(self.d1 as i64),
            d2_in_s1: self.s1.contains(self.d2 as i64),
            d1_not_minimal_generator_of_s2: !self.s2.minimal_generators().contains(&self.d1),
            d2_not_minimal_generator_of_s1: !self.s1.minimal_generators().contains(&self.d2),
        }
    }

    /// `d1 S1 + d2 S2`, generated by the scaled generators of both factors.
    pub fn glue(&self) -> Result<(NumericalSemigroup, Validity)> {
        let g = gcd(self.d1, self.d2);
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        let gens: Vec<u64> = self
            .s1
            .generators()
            .iter()
            .map(|&x| self.d1 * x)
            .chain(self.s2.generators().iter().map(|&x| self.d2 * x))
            .collect();
        Ok((NumericalSemigroup::new(&gens)?, self.validity()))
    }

    /// `n = d1 n' + d2 n''` with `n' ∈ S1`, `n'' ∈ S2` and `n'` as large as
    /// possible.
    pub fn decompose_max(&self, n: u64) -> Result<(u64, u64)> {
        // n'' runs over its residue class mod d1 in increasing order
        let start = residue_for(n, self.d2, self.d1);
        let mut b = start;
        while self.d2 * b <= n {
            let rest = n - self.d2 * b;
            if self.s2.contains(b as i64)
                && rest.is_multiple_of(self.d1)
                && self.s1.contains((rest / self.d1) as i64)
            {
                return Ok((rest / self.d1, b));
            }
            b += self.d1;
        }
        Err(Error::NoDecomposition(n))
    }

    /// `n = d1 n' + d2 n''` with `n''` as large as possible.
    pub fn decompose_min(&self, n: u64) -> Result<(u64, u64)> {
        let mut a = residue_for(n, self.d1, self.d2);
        while self.d1 * a <= n {
            let rest = n - self.d1 * a;
            if self.s1.contains(a as i64)
                && rest.is_multiple_of(self.d2)
                && self.s2.contains((rest / self.d2) as i64)
            {
                return Ok((a, rest / self.d2));
            }
            a += self.d2;
        }
        Err(Error::NoDecomposition(n))
    }
}

// Least x >= 0 with scale * x ≡ n (mod modulus), gcd(scale, modulus) = 1.
fn residue_for(n: u64, scale: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let inv = mod_inverse(scale % modulus, modulus).expect("coprime scale factors");
    ((n % modulus) as u128 * inv as u128 % modulus as u128) as u64
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(m as i128) as u64)
}

/// `{m ∈ S : m - d ∉ S}`, read literally for any `d >= 1`. For `d ∈ S` this
/// is the Apéry set; otherwise it is still finite but not one element per
/// residue.
pub fn apery_like(s: &NumericalSemigroup, d: u64) -> Vec<u64> {
    let top = (s.frobenius() + d as i64).max(0);
    (0..=top)
        .filter(|&m| s.contains(m) && !s.contains(m - d as i64))
        .map(|m| m as u64)
        .collect()
}

/// Compares `H(S;t)` with `(1 - t^{d1 d2}) H(S1;t^{d1}) H(S2;t^{d2})` up to
/// degree `trunc`.
pub fn hilbert_gluing_check(spec: &GluingSpec, trunc: u64) -> Result<SeriesCheck> {
    let (s, _) = spec.glue()?;
    let lhs = hilbert_series(&s, trunc);
    let h1 = hilbert_series(&spec.s1, trunc / spec.d1).dilate(spec.d1, trunc);
    let h2 = hilbert_series(&spec.s2, trunc / spec.d2).dilate(spec.d2, trunc);
    let mut rhs = h1.mul(&h2)?;
    rhs.mul_one_minus(spec.d1 * spec.d2)?;
    Ok(SeriesCheck::from_mismatch(lhs.first_difference(&rhs)))
}

/// Checks `f_S(n) = f_{S1}(n') + f_{S2}(n'')` for every `n ∈ S` up to
/// `trunc`, using the `n'`-maximal decomposition for the maximum length and
/// the `n''`-maximal one for the minimum length.
pub fn is_harmonic_gluing(
    spec: &GluingSpec,
    f: InvariantId,
    trunc: u64,
    cap: u64,
) -> Result<SeriesCheck> {
    let decompose: fn(&GluingSpec, u64) -> Result<(u64, u64)> = match f {
        InvariantId::MaxLen => GluingSpec::decompose_max,
        InvariantId::MinLen => GluingSpec::decompose_min,
        other => return Err(Error::UnsupportedInvariant(other.name())),
    };
    let (s, _) = spec.glue()?;
    let whole = invariant_table(&s, f, trunc, cap)?;
    let left = invariant_table(&spec.s1, f, trunc / spec.d1, cap)?;
    let right = invariant_table(&spec.s2, f, trunc / spec.d2, cap)?;
    for n in 0..=trunc {
        if !s.contains(n as i64) {
            continue;
        }
        let (a, b) = decompose(spec, n)?;
        if whole.at(n as i64) != left.at(a as i64) + right.at(b as i64) {
            return Ok(SeriesCheck::from_mismatch(Some(n)));
        }
    }
    Ok(SeriesCheck::from_mismatch(None))
}

/// Assembles the candidate right-hand side for `H_f(S;t)` from the factors
/// and compares it with the directly computed series.
///
/// For the maximum length, with `A2 = {m ∈ S2 : m - d1 ∉ S2}`:
/// `H(S1;t^{d1}) Σ_{a∈A2} M_{S2}(a) t^{d2 a} + H_M(S1;t^{d1}) Σ_{a∈A2} t^{d2 a}`.
/// The minimum length mirrors this with `A1 = {m ∈ S1 : m - d2 ∉ S1}`.
pub fn augmented_gluing_formula(
    spec: &GluingSpec,
    f: InvariantId,
    trunc: u64,
    cap: u64,
) -> Result<(TruncatedSeries, SeriesCheck)> {
    let (s, _) = spec.glue()?;
    let (outer, inner, d_outer, d_inner) = match f {
        // outer factor is summed over its whole series, inner over A
        InvariantId::MaxLen => (&spec.s1, &spec.s2, spec.d1, spec.d2),
        InvariantId::MinLen => (&spec.s2, &spec.s1, spec.d2, spec.d1),
        other => return Err(Error::UnsupportedInvariant(other.name())),
    };
    let apery = apery_like(inner, d_outer);
    let top = apery.iter().copied().max().unwrap_or(0);
    let inner_f = invariant_table(inner, f, top, cap)?;
    let weighted =
        SparsePolynomial::from_terms(apery.iter().map(|&a| (d_inner * a, inner_f.at(a as i64))));
    let plain = SparsePolynomial::from_terms(apery.iter().map(|&a| (d_inner * a, 1)));

    let outer_h = hilbert_series(outer, trunc / d_outer).dilate(d_outer, trunc);
    let outer_hf = augmented_series(outer, f, trunc / d_outer, cap)?.dilate(d_outer, trunc);
    let rhs = outer_h
        .mul_poly(&weighted)?
        .add(&outer_hf.mul_poly(&plain)?)?;

    let direct = augmented_series(&s, f, trunc, cap)?;
    let check = SeriesCheck::from_mismatch(direct.first_difference(&rhs));
    Ok((rhs, check))
}

/// Everything known about one gluing, as printed by the command line tool.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingReport {
    pub generators: Vec<u64>,
    pub validity: Validity,
    pub invariant: InvariantId,
    pub trunc: u64,
    pub hilbert_identity: SeriesCheck,
    pub harmonic_gluing: SeriesCheck,
    pub augmented_formula: SeriesCheck,
}

impl GluingReport {
    pub fn new(spec: &GluingSpec, f: InvariantId, trunc: u64, cap: u64) -> Result<Self> {
        let (s, validity) = spec.glue()?;
        Ok(Self {
            generators: s.generators().to_vec(),
            validity,
            invariant: f,
            trunc,
            hilbert_identity: hilbert_gluing_check(spec, trunc)?,
            harmonic_gluing: is_harmonic_gluing(spec, f, trunc, cap)?,
            augmented_formula: augmented_gluing_formula(spec, f, trunc, cap)?.1,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
