//! Numerical semigroups with a fixed generating set.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

/// Largest generator accepted, leaving headroom for products like `n_1 * n_k`.
pub const MAX_GENERATOR: u64 = 1 << 31;

/// Largest number of generators; divisor complexes are stored as `u32` masks
/// and every subset of `[k]` gets enumerated.
pub const MAX_GENERATORS: usize = 20;

/// A numerical semigroup `S = <n_1, ..., n_k>` together with the generating
/// set it was built from.
///
/// Membership is answered in constant time from the Apéry set of `n_1`: an
/// integer `n >= 0` lies in `S` iff `n >= Ap(S; n_1)[n mod n_1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    gens: Vec<u64>,
    minimal: Vec<bool>,
    apery_first: Vec<u64>,
    subset_sums: Vec<u64>,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`. The list is sorted and
    /// deduplicated; non-minimal generating sets are kept as given.
    pub fn new(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        if gens[0] == 0 {
            return Err(Error::ZeroGenerator);
        }
        if let Some(&g) = gens.iter().find(|&&g| g > MAX_GENERATOR) {
            return Err(Error::GeneratorTooLarge(g));
        }
        if gens.len() > MAX_GENERATORS {
            return Err(Error::TooManyGenerators {
                got: gens.len(),
                max: MAX_GENERATORS,
            });
        }
        let g = gens.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }

        let minimal = (0..gens.len())
            .map(|i| !representable_without(&gens, i))
            .collect();
        let apery_first = apery_by_shortest_paths(&gens);
        let k = gens.len();
        let mut subset_sums = vec![0u64; 1 << k];
        for mask in 1..subset_sums.len() {
            let low = mask.trailing_zeros() as usize;
            subset_sums[mask] = subset_sums[mask & (mask - 1)] + gens[low];
        }
        Ok(Self {
            gens,
            minimal,
            apery_first,
            subset_sums,
        })
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    /// Number of generators `k`.
    pub fn k(&self) -> usize {
        self.gens.len()
    }

    /// Smallest generator `n_1`.
    pub fn first(&self) -> u64 {
        self.gens[0]
    }

    /// Largest generator `n_k`.
    pub fn last(&self) -> u64 {
        self.gens[self.gens.len() - 1]
    }

    /// `n_[k]`, the sum of all generators.
    pub fn generator_sum(&self) -> u64 {
        self.subset_sums[self.subset_sums.len() - 1]
    }

    /// `n_F` for the subset of generator indices encoded by `mask`.
    pub fn subset_sum(&self, mask: u32) -> u64 {
        self.subset_sums[mask as usize]
    }

    /// Per-generator minimality: `n_i` is minimal iff it is not a
    /// combination of the other generators.
    pub fn minimal_flags(&self) -> &[bool] {
        &self.minimal
    }

    pub fn is_minimally_generated(&self) -> bool {
        self.minimal.iter().all(|&m| m)
    }

    /// The minimal generating set (the atoms of `S`).
    pub fn minimal_generators(&self) -> Vec<u64> {
        self.gens
            .iter()
            .zip(&self.minimal)
            .filter(|(_, &m)| m)
            .map(|(&g, _)| g)
            .collect()
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let n = n as u64;
        n >= self.apery_first[(n % self.first()) as usize]
    }

    /// Frobenius number; `-1` for `S = <1>`.
    pub fn frobenius(&self) -> i64 {
        let max = self.apery_first.iter().copied().max().unwrap_or(0);
        max as i64 - self.first() as i64
    }

    /// Apéry set `Ap(S; p)`, indexed by residue: entry `r` is the least
    /// element of `S` congruent to `r` mod `p`.
    pub fn apery(&self, p: u64) -> Result<Vec<u64>> {
        if p == 0 || !self.contains(p as i64) {
            return Err(Error::NotAnElement(p));
        }
        if p == self.first() {
            return Ok(self.apery_first.clone());
        }
        let mut out = vec![None; p as usize];
        let mut missing = p;
        let mut m = 0u64;
        while missing > 0 {
            let slot = &mut out[(m % p) as usize];
            if slot.is_none() && self.contains(m as i64) {
                *slot = Some(m);
                missing -= 1;
            }
            m += 1;
        }
        Ok(out.into_iter().map(|x| x.unwrap_or_default()).collect())
    }

    /// Forward-DP membership sieve on `[0, bound]`.
    pub fn membership_table(&self, bound: u64) -> MembershipTable {
        let mut bits = vec![false; bound as usize + 1];
        bits[0] = true;
        for n in 1..=bound {
            bits[n as usize] = self.gens.iter().any(|&g| g <= n && bits[(n - g) as usize]);
        }
        MembershipTable { bound, bits }
    }

    /// Default truncation degree for numerator computations.
    ///
    /// `max(F, n_{k-1} n_k) + 2 n_1 n_k + 2 n_[k] + 64`; the `n_{k-1} n_k`
    /// term covers late onsets of the minimum-length recurrence.
    pub fn default_trunc(&self) -> u64 {
        let base = self.frobenius().max(self.second_last_product() as i64) as u64;
        base + 2 * self.first() * self.last() + 2 * self.generator_sum() + 64
    }

    /// Default stability window `n_1 n_k`.
    pub fn default_window(&self) -> u64 {
        self.first() * self.last()
    }

    /// Default quasilinearity anchor `max(F, n_{k-1} n_k) + 2 n_1 n_k + n_[k]`.
    pub fn default_anchor(&self) -> u64 {
        let base = self.frobenius().max(self.second_last_product() as i64) as u64;
        base + 2 * self.first() * self.last() + self.generator_sum()
    }

    fn second_last_product(&self) -> u64 {
        let k = self.k();
        if k >= 2 {
            self.gens[k - 2] * self.gens[k - 1]
        } else {
            self.first() * self.last()
        }
    }
}

impl std::fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// Membership bits of a semigroup on `[0, bound]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipTable {
    pub bound: u64,
    pub bits: Vec<bool>,
}

impl MembershipTable {
    pub fn contains(&self, n: i64) -> bool {
        n >= 0 && (n as u64) <= self.bound && self.bits[n as usize]
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn representable_without(gens: &[u64], skip: usize) -> bool {
    let target = gens[skip] as usize;
    let mut reach = vec![false; target + 1];
    reach[0] = true;
    for n in 1..=target {
        reach[n] = gens
            .iter()
            .enumerate()
            .any(|(i, &g)| i != skip && g as usize <= n && reach[n - g as usize]);
    }
    reach[target]
}

// Least element of S in each residue class mod n_1: shortest paths on the
// residue graph with an edge r -> r + n_i of weight n_i.
fn apery_by_shortest_paths(gens: &[u64]) -> Vec<u64> {
    let m = gens[0];
    let mut dist = vec![u64::MAX; m as usize];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0u64)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r as usize] {
            continue;
        }
        for &g in &gens[1..] {
            let nr = (r + g) % m;
            let nd = d + g;
            if nd < dist[nr as usize] {
                dist[nr as usize] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}
