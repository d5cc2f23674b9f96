//! Small square matrices with polynomial entries, used to transcribe
//! matrix identities (commutators, conjugation, invariants) into
//! generators and parametrizations.

use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq)]
pub struct PolyMat {
    pub entries: Vec<Vec<Polynomial>>,
}

impl PolyMat {
    pub fn new(entries: Vec<Vec<Polynomial>>) -> Self {
        let n = entries.len();
        assert!(entries.iter().all(|row| row.len() == n), "square matrices only");
        PolyMat { entries }
    }

    pub fn zero(ring: &Ring, n: usize) -> Self {
        PolyMat {
            entries: vec![vec![Polynomial::zero(ring); n]; n],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let mut m = PolyMat::zero(ring, n);
        for i in 0..n {
            m.entries[i][i] = Polynomial::one(ring);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn mul(&self, other: &PolyMat) -> PolyMat {
        let n = self.size();
        assert_eq!(n, other.size());
        let ring = self.entries[0][0].ring().clone();
        let mut out = PolyMat::zero(&ring, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Polynomial::zero(&ring);
                for k in 0..n {
                    acc = acc.add(&self.entries[i][k].mul(&other.entries[k][j]));
                }
                out.entries[i][j] = acc;
            }
        }
        out
    }

    pub fn sub(&self, other: &PolyMat) -> PolyMat {
        let n = self.size();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.entries[i][j].sub(&other.entries[i][j]))
                    .collect()
            })
            .collect();
        PolyMat { entries }
    }

    pub fn add(&self, other: &PolyMat) -> PolyMat {
        let n = self.size();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.entries[i][j].add(&other.entries[i][j]))
                    .collect()
            })
            .collect();
        PolyMat { entries }
    }

    pub fn scale(&self, c: &Polynomial) -> PolyMat {
        let entries = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e.mul(c)).collect())
            .collect();
        PolyMat { entries }
    }

    pub fn commutator(&self, other: &PolyMat) -> PolyMat {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> Polynomial {
        let ring = self.entries[0][0].ring().clone();
        let mut acc = Polynomial::zero(&ring);
        for i in 0..self.size() {
            acc = acc.add(&self.entries[i][i]);
        }
        acc
    }

    /// Trace of the square, computed without forming the full product.
    pub fn trace_of_square(&self) -> Polynomial {
        let ring = self.entries[0][0].ring().clone();
        let n = self.size();
        let mut acc = Polynomial::zero(&ring);
        for i in 0..n {
            for j in 0..n {
                acc = acc.add(&self.entries[i][j].mul(&self.entries[j][i]));
            }
        }
        acc
    }

    /// Determinant for sizes up to 3.
    pub fn det(&self) -> Polynomial {
        let e = &self.entries;
        match self.size() {
            1 => e[0][0].clone(),
            2 => e[0][0].mul(&e[1][1]).sub(&e[0][1].mul(&e[1][0])),
            3 => {
                let m = |i: usize, j: usize| &e[i][j];
                let t1 = m(0, 0).mul(&m(1, 1).mul(m(2, 2)).sub(&m(1, 2).mul(m(2, 1))));
                let t2 = m(0, 1).mul(&m(1, 0).mul(m(2, 2)).sub(&m(1, 2).mul(m(2, 0))));
                let t3 = m(0, 2).mul(&m(1, 0).mul(m(2, 1)).sub(&m(1, 1).mul(m(2, 0))));
                t1.sub(&t2).add(&t3)
            }
            n => panic!("determinant not implemented for size {n}"),
        }
    }
}

/// I + c * E_{ij}, the elementary unipotent with a polynomial parameter.
pub fn elementary(ring: &Ring, n: usize, i: usize, j: usize, c: &Polynomial) -> PolyMat {
    assert_ne!(i, j);
    let mut m = PolyMat::identity(ring, n);
    m.entries[i][j] = c.clone();
    m
}
