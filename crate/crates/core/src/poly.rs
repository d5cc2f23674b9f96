//! Sparse multivariate polynomials over an exact field, with the
//! multivariate division algorithm.
//!
//! Terms are kept sorted descending in the ring's monomial order, with no
//! zero coefficients and no duplicate monomials, so the leading term is
//! always the first stored term. Arithmetic never normalizes leading
//! coefficients; only the Groebner engine works with monic polynomials.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::monomial::Monomial;
use crate::ring::Ring;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    ring: Ring,
    /// (monomial, coefficient), descending in the ring order.
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Ring, c: Scalar) -> Self {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::one(ring.arity()), c)],
        }
    }

    pub fn variable(ring: &Ring, index: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(index, ring.arity()), ring.field().one())],
        }
    }

    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs:
    /// sorts, merges duplicates, and drops zeros.
    pub fn from_terms(ring: &Ring, terms: Vec<(Monomial, Scalar)>) -> Self {
        let mut terms = terms;
        let order = *ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let field = ring.field();
        let mut merged: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = merged.last_mut() {
                if last.0 == m {
                    last.1 = field.add(&last.1, &c);
                    continue;
                }
            }
            merged.push((m, c));
        }
        merged.retain(|(_, c)| !c.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: merged,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading (monomial, coefficient) in the ring order, if nonzero.
    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.total_degree();
                self.terms.iter().all(|(m, _)| m.total_degree() == d)
            }
        }
    }

    /// True when the polynomial is a nonzero constant.
    pub fn is_unit_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert_eq!(
            self.ring, other.ring,
            "polynomial operands live in different rings"
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        self.merge(other, true)
    }

    /// Merge two sorted term lists, negating `other` when `negate` is set.
    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let field = self.ring.field();
        let order = *self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match order.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { field.neg(cb) } else { cb.clone() };
                    out.push((mb.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        field.sub(ca, cb)
                    } else {
                        field.add(ca, cb)
                    };
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for (mb, cb) in &other.terms[j..] {
            let c = if negate { field.neg(cb) } else { cb.clone() };
            out.push((mb.clone(), c));
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                raw.push((ma.mul(mb), field.mul(ca, cb)));
            }
        }
        Polynomial::from_terms(&self.ring, raw)
    }

    /// self * c * m, the workhorse of reduction steps.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), field.mul(tc, c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.arity()), c)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) => {
                if lc.is_one() {
                    self.clone()
                } else {
                    let inv = self
                        .ring
                        .field()
                        .inv(lc)
                        .expect("leading coefficient of a nonzero polynomial is invertible");
                    self.scale(&inv)
                }
            }
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, Scalar)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    /// Exact evaluation at a point given as one scalar per variable.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.ring.arity(), "point arity mismatch");
        let field = self.ring.field();
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = field.mul(&term, &field.pow(&point[i], e));
                }
            }
            acc = field.add(&acc, &term);
        }
        acc
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> Polynomial {
        let field = self.ring.field();
        let mut raw = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[var] = e - 1;
            let factor = field.from_i64(e as i64);
            let coeff = field.mul(c, &factor);
            if !coeff.is_zero() {
                raw.push((Monomial::from_exps(exps), coeff));
            }
        }
        Polynomial::from_terms(&self.ring, raw)
    }

    /// Substitutes one image polynomial per variable, mapping `self` into
    /// the images' ring. Source and target must share the coefficient
    /// field.
    pub fn ring_map(&self, target: &Ring, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.arity() {
            return Err(Error::ArityMismatch {
                expected: self.ring.arity(),
                got: images.len(),
            });
        }
        if target.field() != self.ring.field() {
            return Err(Error::RingMismatch);
        }
        for img in images {
            if img.ring() != target {
                return Err(Error::RingMismatch);
            }
        }
        let field = target.field();
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e));
                }
            }
            acc = acc.add(&term);
        }
        // silence unused when terms is empty
        let _ = field;
        Ok(acc)
    }

    /// Checked variants for user-supplied operands.
    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.add(other))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.sub(other))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.mul(other))
    }
}

/// Remainder of multivariate division of `f` by the listed divisors.
///
/// No term of the remainder is divisible by any divisor's leading
/// monomial, and `f - r` lies in the ideal generated by the divisors. The
/// result is deterministic: at each step the first listed divisor whose
/// leading monomial divides the current leading term is used.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial> {
    for g in divisors {
        if g.ring() != f.ring() {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            return Err(Error::InvalidArgument(
                "zero polynomial among divisors".into(),
            ));
        }
    }
    Ok(normal_form_unchecked(f, divisors))
}

pub(crate) fn normal_form_unchecked(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let field = ring.field();
    let mut work = f.clone();
    let mut rem: Vec<(Monomial, Scalar)> = Vec::new();
    'outer: while let Some((lm, lc)) = work.leading() {
        for g in divisors {
            let (glm, glc) = g.leading().expect("divisors are nonzero");
            if let Some(q) = lm.checked_div(glm) {
                let qc = field
                    .div(lc, glc)
                    .expect("leading coefficients are invertible");
                let sub = g.mul_term(&q, &qc);
                work = work.sub(&sub);
                continue 'outer;
            }
        }
        let (m, c) = work.pop_leading().unwrap();
        rem.push((m, c));
    }
    Polynomial {
        ring,
        terms: rem,
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = if c.is_negative() {
                (true, field.neg(c))
            } else {
                (false, c.clone())
            };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = format_monomial(m, &self.ring);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

fn format_monomial(m: &Monomial, ring: &Ring) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.var_name(i).to_string()),
            _ => parts.push(format!("{}^{}", ring.var_name(i), e)),
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::monomial::MonomialOrder;
    use crate::parse::parse_polynomial;
    use crate::ring::make_ring;

    fn qring() -> Ring {
        make_ring(&["x", "y", "z"], FieldSpec::Rationals, MonomialOrder::GrevLex).unwrap()
    }

    fn p(ring: &Ring, s: &str) -> Polynomial {
        parse_polynomial(ring, s).unwrap()
    }

    #[test]
    fn cancellation() {
        let r = qring();
        let f = p(&r, "x^2 + y*z");
        assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let r = qring();
        let lhs = p(&r, "x + y").mul(&p(&r, "x - y"));
        assert_eq!(lhs, p(&r, "x^2 - y^2"));
    }

    #[test]
    fn modular_coefficients_normalize() {
        let f7 = FieldSpec::prime(7).unwrap();
        let r = make_ring(&["x"], f7, MonomialOrder::Lex).unwrap();
        // 4 * (2x) = 8x = x over GF(7)
        let g = p(&r, "2*x").scale(&f7.from_i64(4));
        assert_eq!(g, p(&r, "x"));
    }

    #[test]
    fn division_example_lex() {
        let r = make_ring(&["x", "y", "z"], FieldSpec::Rationals, MonomialOrder::Lex).unwrap();
        let f = p(&r, "x^2 + y*z");
        let rem = normal_form(&f, &[p(&r, "x")]).unwrap();
        assert_eq!(rem, p(&r, "y*z"));
    }

    #[test]
    fn division_by_zero_divisor_rejected() {
        let r = qring();
        let f = p(&r, "x");
        assert!(normal_form(&f, &[Polynomial::zero(&r)]).is_err());
    }

    #[test]
    fn ring_map_identity() {
        let r = qring();
        let f = p(&r, "x^2*y - 3*z + 1/2");
        let images: Vec<_> = (0..3).map(|i| Polynomial::variable(&r, i)).collect();
        assert_eq!(f.ring_map(&r, &images).unwrap(), f);
    }

    #[test]
    fn ring_map_shift_roundtrip() {
        // x -> x + a/2 followed by x -> x - a/2 is the identity
        let r = make_ring(&["x", "a"], FieldSpec::Rationals, MonomialOrder::GrevLex).unwrap();
        let fwd = vec![p(&r, "x + 1/2*a"), p(&r, "a")];
        let back = vec![p(&r, "x - 1/2*a"), p(&r, "a")];
        let f = p(&r, "x^3 - 2*x*a + 7");
        let roundtrip = f
            .ring_map(&r, &fwd)
            .unwrap()
            .ring_map(&r, &back)
            .unwrap();
        assert_eq!(roundtrip, f);
    }

    #[test]
    fn ring_map_arity_checked() {
        let r = qring();
        let f = p(&r, "x");
        let err = f.ring_map(&r, &[Polynomial::variable(&r, 0)]).unwrap_err();
        assert_eq!(
            err,
            Error::ArityMismatch {
                expected: 3,
                got: 1
            }
        );
    }

    #[test]
    fn evaluation_and_derivative() {
        let r = qring();
        let f = p(&r, "x^2*y + 2*z");
        let field = r.field();
        let point = [field.from_i64(2), field.from_i64(3), field.from_i64(-1)];
        assert_eq!(f.eval(&point), field.from_i64(10));
        assert_eq!(f.derivative(0), p(&r, "2*x*y"));
        assert_eq!(f.derivative(2), p(&r, "2"));
    }

    #[test]
    fn display_roundtrip() {
        let r = qring();
        let f = p(&r, "-x^2 + 1/2*y*z - 3");
        let shown = f.to_string();
        assert_eq!(p(&r, &shown), f);
    }
}
