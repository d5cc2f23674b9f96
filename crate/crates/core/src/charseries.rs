//! SL2 weight combinatorics: partition counts, Weyl characters, the
//! character series of the graded coordinate rings under study, and
//! good-filtration multiplicities.
//!
//! The weight lattice of SL2 is identified with the integers; the positive
//! root alpha sits at 2, so the character of highest weight n*alpha is the
//! string of even weights -2n, -2n+2, ..., 2n.
//!
//! `partition_count(r, n)` counts compositions of n into r nonnegative
//! parts. (The same symbol is sometimes described with the roles of the
//! two arguments exchanged; the composition-of-n reading is the one
//! consistent with the graded sum over a_1 + ... + a_r = n, and is the one
//! implemented here.)

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A finitely supported, negation-symmetric weight multiplicity function.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Sl2Character {
    mult: BTreeMap<i64, u64>,
}

impl Sl2Character {
    pub fn zero() -> Self {
        Sl2Character::default()
    }

    pub fn from_multiplicities(mult: BTreeMap<i64, u64>) -> Result<Self> {
        let mult: BTreeMap<i64, u64> = mult.into_iter().filter(|(_, m)| *m > 0).collect();
        for (&w, &m) in &mult {
            if mult.get(&-w).copied().unwrap_or(0) != m {
                return Err(Error::InvalidArgument(format!(
                    "weight multiplicities are not symmetric at {w}"
                )));
            }
        }
        Ok(Sl2Character { mult })
    }

    pub fn multiplicity(&self, weight: i64) -> u64 {
        self.mult.get(&weight).copied().unwrap_or(0)
    }

    pub fn weights(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.mult.iter().map(|(&w, &m)| (w, m))
    }

    pub fn dimension(&self) -> u64 {
        self.mult.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn top_weight(&self) -> Option<i64> {
        self.mult.keys().next_back().copied()
    }

    pub fn add(&self, other: &Sl2Character) -> Sl2Character {
        let mut mult = self.mult.clone();
        for (&w, &m) in &other.mult {
            *mult.entry(w).or_insert(0) += m;
        }
        Sl2Character { mult }
    }

    pub fn scale(&self, k: u64) -> Sl2Character {
        if k == 0 {
            return Sl2Character::zero();
        }
        Sl2Character {
            mult: self.mult.iter().map(|(&w, &m)| (w, m * k)).collect(),
        }
    }

    /// Symmetric by construction of all public constructors; exposed for
    /// property checks.
    pub fn is_symmetric(&self) -> bool {
        self.mult
            .iter()
            .all(|(&w, &m)| self.multiplicity(-w) == m)
    }
}

/// Number of r-tuples of nonnegative integers summing to n: the partition
/// function for the multiset {1, ..., 1}. Closed form binomial(n+r-1, r-1).
pub fn partition_count(r: usize, n: u64) -> u64 {
    assert!(r >= 1, "tuple length must be positive");
    binomial(n + r as u64 - 1, r as u64 - 1)
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflow")
}

/// The character of highest weight n*alpha: multiplicity one on the even
/// weights from -2n to 2n, dimension 2n + 1.
pub fn weyl_character(n: u64) -> Sl2Character {
    let n = n as i64;
    let mult = (-n..=n).map(|k| (2 * k, 1u64)).collect();
    Sl2Character { mult }
}

/// The per-degree characters of the graded ring attached to tuple length
/// r: in degree n, partition_count(r, n) copies of the weight string of
/// n*alpha.
#[derive(Clone, Debug)]
pub struct CharacterSeries {
    pub r: usize,
    /// Index n holds the degree-n character.
    pub degrees: Vec<Sl2Character>,
}

impl CharacterSeries {
    pub fn graded_dimension(&self, n: usize) -> u64 {
        self.degrees[n].dimension()
    }
}

pub fn character_series(r: usize, max_degree: u64) -> CharacterSeries {
    assert!(r >= 1, "tuple length must be positive");
    let degrees = (0..=max_degree)
        .map(|n| weyl_character(n).scale(partition_count(r, n)))
        .collect();
    CharacterSeries { r, degrees }
}

/// Peels each graded character into a nonnegative combination of the
/// characters chi(m*alpha), greedily from the top weight.
///
/// Returns one map per degree: highest-weight index m -> multiplicity.
/// Fails if some degree is not such a combination, which signals a broken
/// input rather than a legitimate answer.
pub fn decompose_good_filtration(
    degrees: &[Sl2Character],
) -> Result<Vec<BTreeMap<u64, u64>>> {
    degrees.iter().map(peel).collect()
}

fn peel(ch: &Sl2Character) -> Result<BTreeMap<u64, u64>> {
    let mut rest = ch.clone();
    let mut out = BTreeMap::new();
    while let Some(top) = rest.top_weight() {
        if top < 0 || top % 2 != 0 {
            return Err(Error::NotCharacterCombination);
        }
        let m = (top / 2) as u64;
        let count = rest.multiplicity(top);
        let piece = weyl_character(m).scale(count);
        rest = subtract(&rest, &piece)?;
        out.insert(m, count);
    }
    Ok(out)
}

fn subtract(a: &Sl2Character, b: &Sl2Character) -> Result<Sl2Character> {
    let mut mult = a.mult.clone();
    for (&w, &m) in &b.mult {
        let entry = mult.entry(w).or_insert(0);
        if *entry < m {
            return Err(Error::NotCharacterCombination);
        }
        *entry -= m;
        if *entry == 0 {
            mult.remove(&w);
        }
    }
    Ok(Sl2Character { mult })
}

/// Total multiplicity of chi(m*alpha) across all degrees of a
/// decomposition table.
pub fn total_multiplicity(table: &[BTreeMap<u64, u64>], m: u64) -> u64 {
    table.iter().map(|row| row.get(&m).copied().unwrap_or(0)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Enumeration oracle for compositions of n into r parts.
    fn count_compositions(r: usize, n: u64) -> u64 {
        if r == 1 {
            return 1;
        }
        (0..=n).map(|k| count_compositions(r - 1, n - k)).sum()
    }

    #[test]
    fn partition_counts_match_enumeration() {
        assert_eq!(partition_count(4, 0), 1);
        assert_eq!(partition_count(2, 3), 4); // (0,3),(1,2),(2,1),(3,0)
        assert_eq!(partition_count(3, 2), 6);
        for r in 1..=6 {
            for n in 0..=20u64 {
                assert_eq!(
                    partition_count(r, n),
                    count_compositions(r, n),
                    "r={r}, n={n}"
                );
            }
        }
    }

    #[test]
    fn partition_pascal_recurrence() {
        // P_r(n) = sum of P_{r-1}(j) for j <= n
        for r in 2..=6 {
            for n in 0..=20u64 {
                let sum: u64 = (0..=n).map(|j| partition_count(r - 1, j)).sum();
                assert_eq!(partition_count(r, n), sum);
            }
        }
    }

    #[test]
    fn weyl_character_strings() {
        let triv = weyl_character(0);
        assert_eq!(triv.dimension(), 1);
        assert_eq!(triv.multiplicity(0), 1);

        let adj = weyl_character(1);
        assert_eq!(adj.dimension(), 3);
        for w in [-2, 0, 2] {
            assert_eq!(adj.multiplicity(w), 1);
        }

        assert_eq!(weyl_character(2).dimension(), 5);
        assert!(weyl_character(5).is_symmetric());
    }

    #[test]
    fn series_graded_dimensions() {
        let s1 = character_series(1, 3);
        assert_eq!(
            (0..=3).map(|n| s1.graded_dimension(n)).collect::<Vec<_>>(),
            vec![1, 3, 5, 7]
        );
        let s2 = character_series(2, 2);
        assert_eq!(s2.graded_dimension(2), 15); // 3 copies of dimension 5
        let s3 = character_series(3, 1);
        assert_eq!(s3.graded_dimension(1), 9); // 3 copies of dimension 3
    }

    #[test]
    fn graded_dimensions_match_rational_function() {
        // sum_n P_r(n)(2n+1) t^n expands (1 + (2r-1)t) / (1-t)^(r+1);
        // checked coefficient-wise via repeated prefix sums
        for r in 1..=4usize {
            let n_max = 12;
            let mut series = vec![0i64; n_max + 1];
            series[0] = 1;
            series[1] = 2 * r as i64 - 1;
            for _ in 0..=r {
                for i in 1..=n_max {
                    series[i] += series[i - 1];
                }
            }
            for (n, &c) in series.iter().enumerate() {
                assert_eq!(
                    c as u64,
                    partition_count(r, n as u64) * (2 * n as u64 + 1),
                    "r={r}, n={n}"
                );
            }
        }
    }

    #[test]
    fn peeling_examples() {
        let ch = weyl_character(1).add(&weyl_character(0));
        let table = decompose_good_filtration(&[ch]).unwrap();
        assert_eq!(table[0].get(&1), Some(&1));
        assert_eq!(table[0].get(&0), Some(&1));

        let empty = decompose_good_filtration(&[Sl2Character::zero()]).unwrap();
        assert!(empty[0].is_empty());
    }

    #[test]
    fn peeling_series_recovers_partition_counts() {
        let s = character_series(2, 5);
        let table = decompose_good_filtration(&s.degrees).unwrap();
        // chi(3 alpha) appears P_2(3) = 4 times, all in degree 3
        assert_eq!(total_multiplicity(&table, 3), 4);
        assert_eq!(table[3].get(&3), Some(&4));
    }

    #[test]
    fn non_combination_is_rejected() {
        // a bare weight 2 with no companions is not a character
        let bad = Sl2Character {
            mult: [(2i64, 1u64), (-2, 1)].into_iter().collect(),
        };
        assert_eq!(
            decompose_good_filtration(&[bad]),
            Err(Error::NotCharacterCombination)
        );
    }

    #[test]
    fn asymmetric_multiplicities_rejected() {
        let mult: BTreeMap<i64, u64> = [(2i64, 1u64)].into_iter().collect();
        assert!(Sl2Character::from_multiplicities(mult).is_err());
    }
}
