//! Exact matrix ranks: fraction-free Gaussian elimination over the
//! integers (Bareiss) for rational matrices, and dense elimination modulo
//! a word-size prime for the evaluation oracle.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rank of a rational matrix, computed fraction-free after clearing each
/// row's denominators.
pub fn rank_rational(rows: &[Vec<BigRational>]) -> usize {
    let int_rows: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let mut lcm = BigInt::one();
            for x in row {
                let d = x.denom();
                let g = gcd(&lcm, d);
                lcm = &lcm / &g * d;
            }
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect();
    rank_int(int_rows)
}

/// Rank of an integer matrix by Bareiss elimination. Entries stay exact;
/// intermediate values are minors of the input.
pub fn rank_int(mut m: Vec<Vec<BigInt>>) -> usize {
    if m.is_empty() {
        return 0;
    }
    let ncols = m[0].len();
    let nrows = m.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    let mut col = 0;
    while rank < nrows && col < ncols {
        let pivot_row = (rank..nrows).find(|&r| !m[r][col].is_zero());
        let Some(pr) = pivot_row else {
            col += 1;
            continue;
        };
        m.swap(rank, pr);
        let pivot = m[rank][col].clone();
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let val = &pivot * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = &val / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
        col += 1;
    }
    rank
}

/// Rank of a matrix over GF(p) for a prime p below 2^31.
pub fn rank_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    debug_assert!(p < (1 << 31));
    if m.is_empty() {
        return 0;
    }
    let ncols = m[0].len();
    let nrows = m.len();
    let mut rank = 0;
    let mut col = 0;
    while rank < nrows && col < ncols {
        let pivot_row = (rank..nrows).find(|&r| !m[r][col].is_multiple_of(p));
        let Some(pr) = pivot_row else {
            col += 1;
            continue;
        };
        m.swap(rank, pr);
        let inv = inv_mod(m[rank][col], p);
        for c in col..ncols {
            m[rank][c] = m[rank][c] % p * inv % p;
        }
        for r in 0..nrows {
            if r == rank || m[r][col].is_multiple_of(p) {
                continue;
            }
            let factor = m[r][col] % p;
            for c in col..ncols {
                let sub = factor * m[rank][c] % p;
                m[r][c] = (m[r][c] + p - sub) % p;
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p as i128) as u64
}

fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn integer_ranks() {
        assert_eq!(rank_int(bi(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank_int(bi(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(rank_int(bi(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(
            rank_int(bi(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])),
            2
        );
        // wide and tall shapes
        assert_eq!(rank_int(bi(&[&[1, 0, 0, 5]])), 1);
        assert_eq!(rank_int(bi(&[&[2], &[3], &[0]])), 1);
    }

    #[test]
    fn rational_rank_clears_denominators() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        let rows = vec![
            vec![half.clone(), third.clone()],
            vec![&half * BigRational::from(BigInt::from(6)), &third * BigRational::from(BigInt::from(6))],
        ];
        assert_eq!(rank_rational(&rows), 1);
    }

    #[test]
    fn modular_ranks() {
        let p = 32003;
        let m = vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]];
        assert_eq!(rank_mod_p(m, p), 2);
        let full = vec![vec![1, 2], vec![3, 5]];
        assert_eq!(rank_mod_p(full, p), 2);
        // singular exactly because of the characteristic
        let m = vec![vec![1, 0], vec![0, 7]];
        assert_eq!(rank_mod_p(m, 7), 1);
    }
}
