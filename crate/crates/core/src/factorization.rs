//! Factorizations and the length invariants built from them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{gcd, NumericalSemigroup};

pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// Multiplicities `a_i` of each generator in an expression `n = Σ a_i n_i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factorization(pub Vec<u64>);

impl Factorization {
    pub fn length(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Largest multiplicity.
    pub fn linf(&self) -> u64 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn value(&self, s: &NumericalSemigroup) -> u64 {
        self.0.iter().zip(s.generators()).map(|(a, g)| a * g).sum()
    }
}

/// The semigroup invariants this crate knows how to tabulate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum InvariantId {
    /// Maximum factorization length `M_S`.
    #[serde(rename = "max")]
    MaxLen,
    /// Minimum factorization length `m_S`.
    #[serde(rename = "min")]
    MinLen,
    /// Number of distinct factorization lengths `l_S`.
    #[serde(rename = "numlens")]
    LenCount,
    /// Smallest largest-multiplicity over all factorizations.
    #[serde(rename = "linf")]
    MinLinf,
}

impl InvariantId {
    pub fn name(self) -> &'static str {
        match self {
            InvariantId::MaxLen => "max",
            InvariantId::MinLen => "min",
            InvariantId::LenCount => "numlens",
            InvariantId::MinLinf => "linf",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "max" => Some(InvariantId::MaxLen),
            "min" => Some(InvariantId::MinLen),
            "numlens" => Some(InvariantId::LenCount),
            "linf" => Some(InvariantId::MinLinf),
            _ => None,
        }
    }
}

/// Values `f(0), ..., f(bound)` of an invariant, zero off the semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantTable {
    pub id: InvariantId,
    pub bound: u64,
    pub values: Vec<i64>,
}

impl InvariantTable {
    /// `f(n)`, with `f(n) = 0` for negative `n`.
    ///
    /// # Panics
    /// If `n > bound`.
    pub fn at(&self, n: i64) -> i64 {
        if n < 0 {
            0
        } else {
            self.values[n as usize]
        }
    }

    pub fn value(&self, n: i64) -> Result<i64> {
        if n > self.bound as i64 {
            return Err(Error::TableTooShort {
                need: n as u64,
                have: self.bound,
            });
        }
        Ok(self.at(n))
    }
}

/// Enumerates factorizations with reachability pruning: the remaining value
/// is only pursued if the generators still available can represent it.
pub struct Factorizer<'a> {
    s: &'a NumericalSemigroup,
    cap: u64,
    // reach[i][x]: x is a combination of n_1..=n_{i+1}
    reach: Vec<Vec<bool>>,
}

impl<'a> Factorizer<'a> {
    pub fn new(s: &'a NumericalSemigroup, bound: u64, cap: u64) -> Self {
        let size = bound as usize + 1;
        let mut reach: Vec<Vec<bool>> = Vec::with_capacity(s.k());
        for (i, &g) in s.generators().iter().enumerate() {
            let g = g as usize;
            let mut row = match reach.last() {
                Some(prev) => prev.clone(),
                None => vec![false; size],
            };
            row[0] = true;
            for x in g..size {
                if row[x - g] {
                    row[x] = true;
                }
            }
            debug_assert_eq!(reach.len(), i);
            reach.push(row);
        }
        Self { s, cap, reach }
    }

    pub fn bound(&self) -> u64 {
        self.reach[0].len() as u64 - 1
    }

    /// Calls `visit` on every factorization of `n`; returns how many there
    /// were. Fails once more than `cap` have been produced.
    pub fn for_each<F: FnMut(&[u64])>(&self, n: u64, mut visit: F) -> Result<u64> {
        assert!(n <= self.bound(), "factorizer bound {} < {n}", self.bound());
        let k = self.s.k();
        if !self.reach[k - 1][n as usize] {
            return Ok(0);
        }
        let mut a = vec![0u64; k];
        let mut count = 0u64;
        self.descend(k - 1, n, &mut a, &mut count, n, &mut visit)?;
        Ok(count)
    }

    fn descend<F: FnMut(&[u64])>(
        &self,
        i: usize,
        rest: u64,
        a: &mut [u64],
        count: &mut u64,
        n: u64,
        visit: &mut F,
    ) -> Result<()> {
        let g = self.s.generators()[i];
        if i == 0 {
            // reachability already guarantees divisibility here
            a[0] = rest / g;
            *count += 1;
            if *count > self.cap {
                return Err(Error::ExplosionGuard { n, cap: self.cap });
            }
            visit(a);
            return Ok(());
        }
        for ai in 0..=rest / g {
            let r = rest - ai * g;
            if self.reach[i - 1][r as usize] {
                a[i] = ai;
                self.descend(i - 1, r, a, count, n, visit)?;
            }
        }
        a[i] = 0;
        Ok(())
    }
}

/// All factorizations of `n`, in lexicographic order.
pub fn factorizations(s: &NumericalSemigroup, n: u64, cap: u64) -> Result<Vec<Factorization>> {
    let fz = Factorizer::new(s, n, cap);
    let mut out = Vec::new();
    fz.for_each(n, |a| out.push(Factorization(a.to_vec())))?;
    out.sort_unstable();
    Ok(out)
}

/// `ℓ(n)`, the sum of the lengths of all factorizations of `n`.
pub fn length_sum(s: &NumericalSemigroup, n: u64, cap: u64) -> Result<u64> {
    let fz = Factorizer::new(s, n, cap);
    let mut total = 0u64;
    let mut overflow = false;
    fz.for_each(n, |a| {
        let len: u64 = a.iter().sum();
        match total.checked_add(len) {
            Some(t) => total = t,
            None => overflow = true,
        }
    })?;
    if overflow {
        return Err(Error::Overflow);
    }
    Ok(total)
}

/// `gcd{n_i - n_{i-1} : i = 2..k}`.
pub fn generator_gap_gcd(s: &NumericalSemigroup) -> Result<u64> {
    if s.k() < 2 {
        return Err(Error::SingleGenerator);
    }
    Ok(s.generators().windows(2).map(|w| w[1] - w[0]).fold(0, gcd))
}

/// Tabulates `f(0..=bound)`.
pub fn invariant_table(
    s: &NumericalSemigroup,
    id: InvariantId,
    bound: u64,
    cap: u64,
) -> Result<InvariantTable> {
    let values = match id {
        InvariantId::MaxLen => extremal_lengths(s, bound, true),
        InvariantId::MinLen => extremal_lengths(s, bound, false),
        InvariantId::LenCount => length_set_sizes(s, bound),
        InvariantId::MinLinf => min_linf(s, bound, cap)?,
    };
    Ok(InvariantTable { id, bound, values })
}

// M(n) = 1 + max{M(n - n_i) : n - n_i ∈ S}, m analogously.
fn extremal_lengths(s: &NumericalSemigroup, bound: u64, maximize: bool) -> Vec<i64> {
    let size = bound as usize + 1;
    let mut out = vec![0i64; size];
    for n in 1..size {
        if !s.contains(n as i64) {
            continue;
        }
        let mut best: Option<i64> = None;
        for &g in s.generators() {
            let g = g as usize;
            if g > n || !s.contains((n - g) as i64) {
                continue;
            }
            let cand = out[n - g] + 1;
            best = Some(match best {
                None => cand,
                Some(b) if maximize => b.max(cand),
                Some(b) => b.min(cand),
            });
        }
        out[n] = best.expect("element with no predecessor");
    }
    out
}

/// Fixed-width bitset of achievable lengths.
#[derive(Clone)]
struct LengthSet(Vec<u64>);

impl LengthSet {
    fn or_shifted_by_one(&mut self, other: &LengthSet) {
        let mut carry = 0u64;
        for (dst, &src) in self.0.iter_mut().zip(&other.0) {
            *dst |= (src << 1) | carry;
            carry = src >> 63;
        }
    }

    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
}

// L(n) = ∪ (L(n - n_i) + 1), kept in a ring of the last n_k sets.
fn length_set_sizes(s: &NumericalSemigroup, bound: u64) -> Vec<i64> {
    let size = bound as usize + 1;
    let max_len = bound / s.first() + 1;
    let words = (max_len as usize + 1).div_ceil(64);
    let ring = s.last() as usize + 1;
    let mut sets = vec![LengthSet(vec![0; words]); ring];
    let mut out = vec![0i64; size];
    sets[0].0[0] = 1;
    out[0] = 1;
    for n in 1..size {
        let mut cur = LengthSet(vec![0; words]);
        for &g in s.generators() {
            let g = g as usize;
            if g <= n {
                let prev = &sets[(n - g) % ring];
                cur.or_shifted_by_one(prev);
            }
        }
        out[n] = cur.count() as i64;
        sets[n % ring] = cur;
    }
    out
}

fn min_linf(s: &NumericalSemigroup, bound: u64, cap: u64) -> Result<Vec<i64>> {
    let fz = Factorizer::new(s, bound, cap);
    let mut out = vec![0i64; bound as usize + 1];
    for n in 0..=bound {
        let mut best = u64::MAX;
        let count = fz.for_each(n, |a| {
            best = best.min(a.iter().copied().max().unwrap_or(0));
        })?;
        if count > 0 {
            out[n as usize] = best as i64;
        }
    }
    Ok(out)
}
