//! Hilbert series of homogeneous quotients and Krull dimension read off
//! the pole order at t = 1.
//!
//! The series of R/I for homogeneous I equals that of R modulo the
//! leading-term ideal, computed by the standard inclusion-exclusion
//! recursion on a pivot variable of the minimal monomial generators.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GbConfig, GroebnerBasis};
use crate::ideal::IdealPresentation;
use crate::monomial::Monomial;

/// Hilbert series data for a homogeneous quotient ring: series =
/// numerator(t) / (1 - t)^denominator_power with numerator(1) != 0, plus
/// leading coefficients of the expansion. The zero ring (unit ideal) is
/// reported with dimension -1 and a zero numerator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub numerator: Vec<BigInt>,
    pub denominator_power: usize,
    pub dimension: i64,
    pub coefficients: Vec<u64>,
}

/// Hilbert series of the quotient by the basis' ideal, with the first
/// `n_coeffs` coefficients of the expansion. Requires a homogeneous ideal.
pub fn hilbert_series(gb: &GroebnerBasis, n_coeffs: usize) -> Result<HilbertData> {
    if gb.basis().iter().any(|g| !g.is_homogeneous()) {
        return Err(Error::NonHomogeneous);
    }
    let nvars = gb.ring().arity();
    let lead: Vec<Monomial> = gb
        .basis()
        .iter()
        .map(|g| g.leading_monomial().unwrap().clone())
        .collect();
    let minimal = minimalize(lead);
    let mut numerator = numerator_of(&minimal);

    if numerator.iter().all(|c| c.is_zero()) {
        // unit ideal: the quotient is the zero ring
        return Ok(HilbertData {
            numerator: vec![BigInt::zero()],
            denominator_power: 0,
            dimension: -1,
            coefficients: vec![0; n_coeffs],
        });
    }

    let mut denominator_power = nvars;
    while denominator_power > 0 && eval_at_one(&numerator).is_zero() {
        numerator = divide_by_one_minus_t(&numerator);
        denominator_power -= 1;
    }
    debug_assert!(!eval_at_one(&numerator).is_zero());

    let coefficients = expand(&numerator, denominator_power, n_coeffs)?;
    Ok(HilbertData {
        numerator: trim(numerator),
        denominator_power,
        dimension: denominator_power as i64,
        coefficients,
    })
}

/// Krull dimension of the quotient by the generated ideal, via the pole
/// order of the Hilbert series. Requires homogeneous generators; dimension
/// is insensitive to replacing the ideal by its radical, so the generated
/// presentation suffices. The unit ideal reports -1.
pub fn krull_dimension(ideal: &IdealPresentation, config: &GbConfig) -> Result<i64> {
    if !ideal.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    let gb = buchberger(ideal, config)?;
    Ok(hilbert_series(&gb, 0)?.dimension)
}

/// Drops monomials divisible by another in the list.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.total_degree());
    let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !minimal.iter().any(|g| g.divides(&m)) {
            minimal.push(m);
        }
    }
    minimal
}

/// Numerator of the series of R/<gens> over (1 - t)^nvars, for a minimal
/// monomial generating set.
fn numerator_of(gens: &[Monomial]) -> Vec<BigInt> {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![BigInt::zero()];
    }
    if pairwise_coprime(gens) {
        // complete intersection of monomials: product of (1 - t^deg)
        let mut num = vec![BigInt::one()];
        for m in gens {
            num = mul_one_minus_power(&num, m.total_degree() as usize);
        }
        return num;
    }

    // pivot: the most frequent variable among the minimal generators
    let arity = gens[0].arity();
    let mut counts = vec![0usize; arity];
    for m in gens {
        for (i, &e) in m.exps().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let pivot = counts
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .map(|(i, _)| i)
        .unwrap();

    // short exact sequence on multiplication by the pivot variable:
    // numerator(I) = numerator(I + <x>) + t * numerator(I : x)
    let mut with_var: Vec<Monomial> = vec![Monomial::var(pivot, arity)];
    with_var.extend(gens.iter().filter(|m| m.exp(pivot) == 0).cloned());

    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let mut exps = m.exps().to_vec();
            exps[pivot] = exps[pivot].saturating_sub(1);
            Monomial::from_exps(exps)
        })
        .collect();
    let colon = minimalize(colon);

    let a = numerator_of(&with_var);
    let b = numerator_of(&colon);
    add_shifted(&a, &b, 1)
}

fn pairwise_coprime(gens: &[Monomial]) -> bool {
    for j in 1..gens.len() {
        for i in 0..j {
            if !gens[i].coprime(&gens[j]) {
                return false;
            }
        }
    }
    true
}

fn mul_one_minus_power(num: &[BigInt], d: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); num.len() + d];
    for (i, c) in num.iter().enumerate() {
        out[i] += c;
        out[i + d] -= c;
    }
    out
}

fn add_shifted(a: &[BigInt], b: &[BigInt], shift: usize) -> Vec<BigInt> {
    let len = a.len().max(b.len() + shift);
    let mut out = vec![BigInt::zero(); len];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i + shift] += c;
    }
    out
}

fn eval_at_one(num: &[BigInt]) -> BigInt {
    num.iter().sum()
}

fn divide_by_one_minus_t(num: &[BigInt]) -> Vec<BigInt> {
    // synthetic division by (1 - t); exact when num(1) == 0
    let mut out = vec![BigInt::zero(); num.len().saturating_sub(1)];
    let mut carry = BigInt::zero();
    for i in 0..out.len() {
        carry = &carry + &num[i];
        out[i] = carry.clone();
    }
    debug_assert_eq!(&carry + num.last().unwrap(), BigInt::zero());
    out
}

fn trim(mut num: Vec<BigInt>) -> Vec<BigInt> {
    while num.len() > 1 && num.last().is_some_and(|c| c.is_zero()) {
        num.pop();
    }
    num
}

/// First `n` coefficients of numerator / (1 - t)^d.
fn expand(numerator: &[BigInt], d: usize, n: usize) -> Result<Vec<u64>> {
    let mut series: Vec<BigInt> = (0..n)
        .map(|i| numerator.get(i).cloned().unwrap_or_else(BigInt::zero))
        .collect();
    for _ in 0..d {
        // multiply by 1/(1 - t): prefix sums
        for i in 1..series.len() {
            let prev = series[i - 1].clone();
            series[i] += prev;
        }
    }
    series
        .into_iter()
        .map(|c| {
            if c.is_negative() {
                return Err(Error::InvalidArgument(
                    "negative Hilbert coefficient".into(),
                ));
            }
            u64::try_from(&c)
                .map_err(|_| Error::InvalidArgument("Hilbert coefficient overflow".into()))
        })
        .collect()
}
