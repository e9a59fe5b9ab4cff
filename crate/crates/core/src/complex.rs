//! Squarefree divisor complexes and their (weighted, augmented) Euler
//! characteristics.
//!
//! Faces are subsets of generator indices stored as bitmasks: bit `i` set
//! means `n_{i+1}` belongs to the face. The Euler characteristic uses the
//! reduced convention `Σ_F (-1)^{|F|}` over all faces including `∅`, so a
//! full simplex contributes zero.

use crate::error::{Error, Result};
use crate::factorization::InvariantTable;
use crate::semigroup::NumericalSemigroup;

/// `Δ_n = {F ⊆ [k] : n - n_F ∈ S}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeDivisorComplex {
    pub n: u64,
    pub k: usize,
    /// Face masks in increasing order; empty iff `n ∉ S`.
    pub faces: Vec<u32>,
}

impl SquarefreeDivisorComplex {
    pub fn new(s: &NumericalSemigroup, n: u64) -> Self {
        let k = s.k();
        let faces = if s.contains(n as i64) {
            (0..1u32 << k)
                .filter(|&mask| s.contains(n as i64 - s.subset_sum(mask) as i64))
                .collect()
        } else {
            Vec::new()
        };
        Self { n, k, faces }
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn is_full_simplex(&self) -> bool {
        self.faces.len() == 1 << self.k
    }

    pub fn contains(&self, mask: u32) -> bool {
        self.faces.binary_search(&mask).is_ok()
    }

    /// Faces as lists of generator values, e.g. `[[], [6], [9]]`.
    pub fn faces_as_generators(&self, s: &NumericalSemigroup) -> Vec<Vec<u64>> {
        self.faces
            .iter()
            .map(|&mask| {
                (0..self.k)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| s.generators()[i])
                    .collect()
            })
            .collect()
    }

    /// `χ(Δ) = Σ_{F ∈ Δ} (-1)^{|F|}`.
    pub fn euler_char(&self) -> i64 {
        self.faces.iter().map(|&f| sign(f)).sum()
    }

    /// `χ_f(Δ_n) = Σ_{F ∈ Δ_n} (-1)^{|F|} f(n - n_F)`.
    pub fn weighted_euler(&self, s: &NumericalSemigroup, f: &InvariantTable) -> Result<i64> {
        self.check_table(f)?;
        let n = self.n as i64;
        self.faces.iter().try_fold(0i64, |acc, &mask| {
            let term = sign(mask) * f.at(n - s.subset_sum(mask) as i64);
            acc.checked_add(term).ok_or(Error::Overflow)
        })
    }

    /// `χ̂_f(Δ_n) = Σ_{F ∈ Δ_n} (-1)^{|F|} (f(n - n_F) + |F|)`.
    pub fn augmented_euler(&self, s: &NumericalSemigroup, f: &InvariantTable) -> Result<i64> {
        self.check_table(f)?;
        let n = self.n as i64;
        self.faces.iter().try_fold(0i64, |acc, &mask| {
            let value = f.at(n - s.subset_sum(mask) as i64) + mask.count_ones() as i64;
            acc.checked_add(sign(mask) * value).ok_or(Error::Overflow)
        })
    }

    fn check_table(&self, f: &InvariantTable) -> Result<()> {
        if !self.faces.is_empty() && self.n > f.bound {
            return Err(Error::TableTooShort {
                need: self.n,
                have: f.bound,
            });
        }
        Ok(())
    }
}

fn sign(mask: u32) -> i64 {
    if mask.count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `Σ_{A ⊆ [k]} (-1)^{|A|} f(n - n_A)`, summing over every subset rather
/// than only the faces of `Δ_n`. Equal to `χ_f(Δ_n)` because `f` vanishes
/// off `S`.
pub fn weighted_euler_all_subsets(
    s: &NumericalSemigroup,
    n: u64,
    f: &InvariantTable,
) -> Result<i64> {
    if n > f.bound {
        return Err(Error::TableTooShort {
            need: n,
            have: f.bound,
        });
    }
    (0..1u32 << s.k()).try_fold(0i64, |acc, mask| {
        let term = sign(mask) * f.at(n as i64 - s.subset_sum(mask) as i64);
        acc.checked_add(term).ok_or(Error::Overflow)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorization::{invariant_table, InvariantId, DEFAULT_ENUMERATION_CAP};

    fn sg(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    #[test]
    fn faces_of_small_elements() {
        let s = sg(&[6, 9, 20]);
        let d = SquarefreeDivisorComplex::new(&s, 18);
        assert_eq!(d.faces, vec![0b000, 0b001, 0b010]);
        assert_eq!(d.faces_as_generators(&s), vec![vec![], vec![6], vec![9]]);
        assert_eq!(d.euler_char(), -1);
        assert!(SquarefreeDivisorComplex::new(&s, 7).is_empty());
        assert_eq!(SquarefreeDivisorComplex::new(&s, 78).euler_char(), 1);
    }

    #[test]
    fn full_simplex_has_zero_euler_characteristic() {
        let s = sg(&[6, 9, 20]);
        let d = SquarefreeDivisorComplex::new(&s, 1000);
        assert!(d.is_full_simplex());
        assert_eq!(d.euler_char(), 0);
    }

    #[test]
    fn complex_at_138() {
        let s = sg(&[6, 9, 20]);
        let m = invariant_table(&s, InvariantId::MaxLen, 200, DEFAULT_ENUMERATION_CAP).unwrap();
        let d = SquarefreeDivisorComplex::new(&s, 138);
        // 138 - 35 = 103 ∈ S, so Δ_138 is the full simplex
        assert!(d.is_full_simplex());
        // faces containing 6 carry the label of the face without 6
        for &mask in &d.faces {
            if mask & 1 == 1 {
                let with = m.at(138 - s.subset_sum(mask) as i64);
                let without = m.at(138 - s.subset_sum(mask & !1) as i64);
                assert_eq!(with + 1, without);
            }
        }
        assert_eq!(m.at(138), 23);
        assert_eq!(d.weighted_euler(&s, &m).unwrap(), 0);
        assert_eq!(d.augmented_euler(&s, &m).unwrap(), 0);
    }

    #[test]
    fn two_generator_corner() {
        let s = sg(&[9, 11]);
        let m = invariant_table(&s, InvariantId::MaxLen, 120, DEFAULT_ENUMERATION_CAP).unwrap();
        let d = SquarefreeDivisorComplex::new(&s, 99);
        assert_eq!(d.augmented_euler(&s, &m).unwrap(), -9);
    }

    #[test]
    fn non_members_contribute_nothing() {
        let s = sg(&[6, 9, 20]);
        let m = invariant_table(&s, InvariantId::MaxLen, 10, DEFAULT_ENUMERATION_CAP).unwrap();
        let d = SquarefreeDivisorComplex::new(&s, 7);
        assert_eq!(d.weighted_euler(&s, &m).unwrap(), 0);
        assert_eq!(d.augmented_euler(&s, &m).unwrap(), 0);
        assert_eq!(d.euler_char(), 0);
    }

    #[test]
    fn short_table_is_rejected() {
        let s = sg(&[6, 9, 20]);
        let m = invariant_table(&s, InvariantId::MaxLen, 50, DEFAULT_ENUMERATION_CAP).unwrap();
        let d = SquarefreeDivisorComplex::new(&s, 60);
        assert_eq!(
            d.weighted_euler(&s, &m),
            Err(Error::TableTooShort { need: 60, have: 50 })
        );
    }

    #[test]
    fn face_and_subset_routes_agree() {
        for gens in [&[6u64, 9, 20][..], &[5, 7, 11, 13], &[4, 6, 9], &[3, 5, 6]] {
            let s = sg(gens);
            for id in [
                InvariantId::MaxLen,
                InvariantId::MinLen,
                InvariantId::LenCount,
            ] {
                let f = invariant_table(&s, id, 300, DEFAULT_ENUMERATION_CAP).unwrap();
                for n in 0..=300 {
                    let d = SquarefreeDivisorComplex::new(&s, n);
                    for &mask in &d.faces {
                        for sub in 0..mask {
                            if sub & mask == sub {
                                assert!(d.contains(sub), "not downward closed");
                            }
                        }
                    }
                    assert_eq!(
                        d.weighted_euler(&s, &f).unwrap(),
                        weighted_euler_all_subsets(&s, n, &f).unwrap()
                    );
                    let gap: i64 = d
                        .faces
                        .iter()
                        .map(|&m| sign(m) * m.count_ones() as i64)
                        .sum();
                    assert_eq!(
                        d.augmented_euler(&s, &f).unwrap() - d.weighted_euler(&s, &f).unwrap(),
                        gap
                    );
                    if d.is_full_simplex() {
                        assert_eq!(gap, 0);
                    }
                }
            }
        }
    }
}
