//! Monomials as dense exponent vectors and the supported monomial orders.

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// A monomial in a fixed number of variables, stored as a dense exponent
/// vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial {
            exps: vec![0; arity],
        }
    }

    pub fn var(index: usize, arity: usize) -> Self {
        let mut exps = vec![0; arity];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// True if `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.arity(), other.arity());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.arity(), other.arity());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.arity(), other.arity());
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// A total, multiplicative monomial order with 1 minimal.
///
/// `Block { split }` eliminates the first `split` variables: any monomial
/// touching the first block exceeds every monomial in the remaining
/// variables alone. Both blocks are compared by graded reverse
/// lexicographic order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Block { split: usize },
}

impl MonomialOrder {
    pub fn validate(&self, arity: usize) -> Result<()> {
        if let MonomialOrder::Block { split } = self {
            if *split == 0 || *split >= arity {
                return Err(Error::BadBlockSplit {
                    split: *split,
                    arity,
                });
            }
        }
        Ok(())
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), b.arity());
        match self {
            MonomialOrder::Lex => cmp_lex(a.exps(), b.exps()),
            MonomialOrder::GrevLex => cmp_grevlex(a.exps(), b.exps()),
            MonomialOrder::Block { split } => {
                let (a1, a2) = a.exps().split_at(*split);
                let (b1, b2) = b.exps().split_at(*split);
                cmp_grevlex(a1, b1).then_with(|| cmp_grevlex(a2, b2))
            }
        }
    }

    /// A vector whose ascending lexicographic order matches this monomial
    /// order ascending. Used as a deterministic sort/heap key.
    pub fn ascending_key(&self, m: &Monomial) -> Vec<u64> {
        fn grevlex_key(exps: &[u32], out: &mut Vec<u64>) {
            out.push(exps.iter().map(|&e| e as u64).sum());
            out.extend(exps.iter().rev().map(|&e| u32::MAX as u64 - e as u64));
        }
        let mut key = Vec::with_capacity(m.arity() + 2);
        match self {
            MonomialOrder::Lex => key.extend(m.exps().iter().map(|&e| e as u64)),
            MonomialOrder::GrevLex => grevlex_key(m.exps(), &mut key),
            MonomialOrder::Block { split } => {
                let (a, b) = m.exps().split_at(*split);
                grevlex_key(a, &mut key);
                grevlex_key(b, &mut key);
            }
        }
        key
    }
}

impl std::fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::GrevLex => write!(f, "grevlex"),
            MonomialOrder::Block { split } => write!(f, "block:{split}"),
        }
    }
}

fn cmp_lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn cmp_grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    // equal degree: the monomial with the smaller exponent in the last
    // differing position is the larger one
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}
