//! Exact integer power series truncated at a fixed degree, and sparse
//! polynomials for the numerators extracted from them.
//!
//! All arithmetic is checked; an overflowing coefficient is an error, never
//! a wrapped value.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Coefficients `c_0, ..., c_N` of a power series known up to degree `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<i64>,
}

impl TruncatedSeries {
    pub fn zero(trunc: u64) -> Self {
        Self {
            coeffs: vec![0; trunc as usize + 1],
        }
    }

    pub fn one(trunc: u64) -> Self {
        let mut s = Self::zero(trunc);
        s.coeffs[0] = 1;
        s
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least a constant term");
        Self { coeffs }
    }

    pub fn trunc(&self) -> u64 {
        self.coeffs.len() as u64 - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `t^d`; zero for negative `d`.
    ///
    /// # Panics
    /// If `d` lies beyond the truncation degree.
    pub fn coeff(&self, d: i64) -> i64 {
        if d < 0 {
            return 0;
        }
        assert!(
            d as u64 <= self.trunc(),
            "degree {d} beyond truncation {}",
            self.trunc()
        );
        self.coeffs[d as usize]
    }

    pub fn truncate(&self, trunc: u64) -> Self {
        let n = (trunc.min(self.trunc()) + 1) as usize;
        Self {
            coeffs: self.coeffs[..n].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, i64::checked_add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, i64::checked_sub)
    }

    fn zip_with(&self, other: &Self, op: fn(i64, i64) -> Option<i64>) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| op(a, b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Self { coeffs })
    }

    /// Cauchy product, truncated at the smaller of the two degrees.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let n = self.coeffs.len().min(other.coeffs.len());
        let rhs: Vec<(usize, i64)> = other.coeffs[..n]
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != 0)
            .map(|(j, &b)| (j, b))
            .collect();
        let mut out = vec![0i64; n];
        for (i, &a) in self.coeffs[..n].iter().enumerate() {
            if a == 0 {
                continue;
            }
            for &(j, b) in rhs.iter().take_while(|(j, _)| i + j < n) {
                let p = a.checked_mul(b).ok_or(Error::Overflow)?;
                out[i + j] = out[i + j].checked_add(p).ok_or(Error::Overflow)?;
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Product with a polynomial, keeping this series' truncation.
    pub fn mul_poly(&self, p: &SparsePolynomial) -> Result<Self> {
        let n = self.coeffs.len();
        let mut out = vec![0i64; n];
        for (&e, &c) in &p.terms {
            let e = e as usize;
            if e >= n {
                break;
            }
            for (d, &a) in self.coeffs[..n - e].iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let prod = a.checked_mul(c).ok_or(Error::Overflow)?;
                out[d + e] = out[d + e].checked_add(prod).ok_or(Error::Overflow)?;
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Multiplies by `1 - t^e` in place.
    pub fn mul_one_minus(&mut self, e: u64) -> Result<()> {
        let e = e as usize;
        for d in (e..self.coeffs.len()).rev() {
            self.coeffs[d] = self.coeffs[d]
                .checked_sub(self.coeffs[d - e])
                .ok_or(Error::Overflow)?;
        }
        Ok(())
    }

    /// Multiplies by `1 / (1 - t^e)` in place.
    pub fn div_one_minus(&mut self, e: u64) -> Result<()> {
        assert!(e >= 1);
        let e = e as usize;
        for d in e..self.coeffs.len() {
            self.coeffs[d] = self.coeffs[d]
                .checked_add(self.coeffs[d - e])
                .ok_or(Error::Overflow)?;
        }
        Ok(())
    }

    /// Multiplies by `t^e`.
    pub fn shift(&self, e: u64) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![0i64; n];
        let e = e as usize;
        if e < n {
            out[e..].copy_from_slice(&self.coeffs[..n - e]);
        }
        Self { coeffs: out }
    }

    /// Substitutes `t -> t^factor`, truncating at `trunc`.
    pub fn dilate(&self, factor: u64, trunc: u64) -> Self {
        assert!(factor >= 1);
        let mut out = Self::zero(trunc);
        for (i, &c) in self.coeffs.iter().enumerate() {
            let d = i as u64 * factor;
            if d > trunc {
                break;
            }
            out.coeffs[d as usize] = c;
        }
        out
    }

    /// First degree at which the two series differ, up to the common
    /// truncation.
    pub fn first_difference(&self, other: &Self) -> Option<u64> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
            .map(|d| d as u64)
    }

    /// Nonzero coefficients as a polynomial.
    pub fn to_polynomial(&self) -> SparsePolynomial {
        SparsePolynomial::from_terms(self.coeffs.iter().enumerate().map(|(e, &c)| (e as u64, c)))
    }
}

/// `1 / (1 - t^e)` up to degree `trunc`.
pub fn expand_geometric(e: u64, trunc: u64) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(trunc);
    s.div_one_minus(e)
        .expect("0/1 coefficients cannot overflow");
    s
}

/// `z(t) = Π 1/(1 - t^{n_i})`, whose coefficients count factorizations.
pub fn z_series(s: &NumericalSemigroup, trunc: u64) -> Result<TruncatedSeries> {
    let mut z = TruncatedSeries::one(trunc);
    for &g in s.generators() {
        z.div_one_minus(g)?;
    }
    Ok(z)
}

/// `λ(t) = Σ t^{n_i}/(1 - t^{n_i})`.
pub fn lambda_series(s: &NumericalSemigroup, trunc: u64) -> Result<TruncatedSeries> {
    lambda_times(s, &TruncatedSeries::one(trunc))
}

/// `λ(t) · x(t)` in `O(k N)`.
pub fn lambda_times(s: &NumericalSemigroup, x: &TruncatedSeries) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::zero(x.trunc());
    for &g in s.generators() {
        let mut term = x.shift(g);
        term.div_one_minus(g)?;
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// `Π (1 - t^{n_i}) · series`, read off at every degree up to the
/// truncation (each coefficient only needs lower-degree input).
pub fn numerator_extract(
    series: &TruncatedSeries,
    s: &NumericalSemigroup,
) -> Result<SparsePolynomial> {
    let mut x = series.clone();
    for &g in s.generators() {
        x.mul_one_minus(g)?;
    }
    Ok(x.to_polynomial())
}

/// True iff `p` has no term with exponent in `(trunc - window, trunc]`.
pub fn is_stably_zero(p: &SparsePolynomial, trunc: u64, window: u64) -> bool {
    let lo = trunc as i128 - window as i128;
    p.terms.range(..=trunc).all(|(&e, _)| e as i128 <= lo)
}

/// A polynomial with integer coefficients, stored as exponent → nonzero
/// coefficient.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SparsePolynomial {
    terms: BTreeMap<u64, i64>,
}

impl SparsePolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats and
    /// dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (u64, i64)>>(terms: I) -> Self {
        let mut p = Self::new();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn monomial(e: u64, c: i64) -> Self {
        Self::from_terms([(e, c)])
    }

    pub fn add_term(&mut self, e: u64, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(e).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, e: u64) -> i64 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &other.terms {
                let c = c1.checked_mul(c2).ok_or(Error::Overflow)?;
                let slot = out.entry(e1 + e2).or_insert(0i64);
                *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
            }
        }
        out.retain(|_, c| *c != 0);
        Ok(Self { terms: out })
    }

    /// Dense series up to `trunc`; higher terms are dropped.
    pub fn to_series(&self, trunc: u64) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(trunc);
        for (&e, &c) in self.terms.range(..=trunc) {
            s.coeffs[e as usize] = c;
        }
        s
    }
}

impl fmt::Display for SparsePolynomial {
    /// Increasing exponents, e.g. `1 - t^18 - t^60 + t^78` or `-2t^46 + t^113`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, &c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (_, 1) => {}
                (_, m) => write!(f, "{m}")?,
            }
            match e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for SparsePolynomial {
    type Err = Error;

    /// Parses the display format; `c*t^e` with an explicit `*` is accepted too.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty input".into()));
        }
        if compact == "0" {
            return Ok(Self::new());
        }
        let mut p = Self::new();
        let bytes = compact.as_bytes();
        let mut start = 0;
        while start < bytes.len() {
            let mut end = start + 1;
            while end < bytes.len() && bytes[end] != b'+' && bytes[end] != b'-' {
                end += 1;
            }
            let (e, c) = parse_term(&compact[start..end])?;
            p.add_term(e, c);
            start = end;
        }
        Ok(p)
    }
}

fn parse_term(term: &str) -> Result<(u64, i64)> {
    let bad = || Error::Parse(format!("bad term `{term}`"));
    let (sign, body) = match term.as_bytes()[0] {
        b'-' => (-1, &term[1..]),
        b'+' => (1, &term[1..]),
        _ => (1, term),
    };
    let (coef, exp) = match body.find('t') {
        None => (body, None),
        Some(i) => (body[..i].trim_end_matches('*'), Some(&body[i + 1..])),
    };
    let c: i64 = if coef.is_empty() {
        if exp.is_none() {
            return Err(bad());
        }
        1
    } else {
        coef.parse().map_err(|_| bad())?
    };
    let e: u64 = match exp {
        None => 0,
        Some("") => 1,
        Some(x) => x
            .strip_prefix('^')
            .ok_or_else(bad)?
            .parse()
            .map_err(|_| bad())?,
    };
    Ok((e, sign * c))
}

impl Serialize for SparsePolynomial {
    /// `[[exponent, coefficient], ...]`
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (&e, &c) in &self.terms {
            seq.serialize_element(&(e, c))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for SparsePolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(u64, i64)> = Vec::deserialize(deserializer)?;
        Ok(Self::from_terms(pairs))
    }
}
