//! The inductive family of ideals over the nilpotent 2x2 commuting
//! tuples, the three components of the hyperplane cut, and the membership
//! obligations that certify the family radical member by member.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ideal::IdealPresentation;
use crate::poly::Polynomial;
use crate::ring::Ring;

use super::mixed::comm_generators_on_slots;
use super::reject_char_two;
use super::sl2::{slot, sl2_nilcomm_generators, sl2_ring};

/// Label of a family member at tuple length r.
///
/// - `I(m)`: nilpotent commuting generators plus the vanishing of the
///   first r - m slots (1 <= m <= r);
/// - `P(m)`: the purely linear ideal with the first m slots zero and
///   x_j = y_j = -z_j on the rest (1 <= m <= r);
/// - `Chain1(m)`: nilpotent commuting generators plus y_i + z_i for
///   i <= m (1 <= m <= r);
/// - `Chain2(n)`: Chain1(r) plus x_j + y_j for j <= n (0 <= n <= r);
/// - `Max`: the ideal of all variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyLabel {
    I(usize),
    P(usize),
    Chain1(usize),
    Chain2(usize),
    Max,
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyLabel::I(m) => write!(f, "i{m}"),
            FamilyLabel::P(m) => write!(f, "p{m}"),
            FamilyLabel::Chain1(m) => write!(f, "chain1-{m}"),
            FamilyLabel::Chain2(n) => write!(f, "chain2-{n}"),
            FamilyLabel::Max => write!(f, "max"),
        }
    }
}

impl FromStr for FamilyLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownVariety(format!("family label `{s}`"));
        if s == "max" {
            return Ok(FamilyLabel::Max);
        }
        if let Some(rest) = s.strip_prefix("chain1-") {
            return rest.parse().map(FamilyLabel::Chain1).map_err(|_| bad());
        }
        if let Some(rest) = s.strip_prefix("chain2-") {
            return rest.parse().map(FamilyLabel::Chain2).map_err(|_| bad());
        }
        if let Some(rest) = s.strip_prefix('i') {
            return rest.parse().map(FamilyLabel::I).map_err(|_| bad());
        }
        if let Some(rest) = s.strip_prefix('p') {
            return rest.parse().map(FamilyLabel::P).map_err(|_| bad());
        }
        Err(bad())
    }
}

#[derive(Clone, Debug)]
pub struct FamilyFMember {
    pub label: FamilyLabel,
    pub presentation: IdealPresentation,
}

/// The complete family at tuple length r. Members containing the
/// nilpotent commuting generators are flagged radical_closure = true: the
/// member they present is the radical of the generated ideal.
pub fn build_family_f(r: usize, field: &FieldSpec) -> Result<Vec<FamilyFMember>> {
    reject_char_two(field)?;
    if r < 1 {
        return Err(Error::InvalidArgument("tuple length must be positive".into()));
    }
    let ring = sl2_ring(r, field)?;
    let nil = sl2_nilcomm_generators(&ring, r);
    let v = |k: usize| Polynomial::variable(&ring, k);

    let mut members = Vec::new();
    for m in 1..=r {
        let mut gens = nil.clone();
        for jj in 1..=r - m {
            let (x, y, z) = slot(jj);
            gens.extend([v(x), v(y), v(z)]);
        }
        members.push(FamilyFMember {
            label: FamilyLabel::I(m),
            presentation: IdealPresentation::new(ring.clone(), gens, true)?,
        });
    }
    for m in 1..=r {
        members.push(FamilyFMember {
            label: FamilyLabel::P(m),
            presentation: linear_slice_ideal(&ring, r, m)?,
        });
    }
    for m in 1..=r {
        let mut gens = nil.clone();
        for i in 1..=m {
            let (_, y, z) = slot(i);
            gens.push(v(y).add(&v(z)));
        }
        members.push(FamilyFMember {
            label: FamilyLabel::Chain1(m),
            presentation: IdealPresentation::new(ring.clone(), gens, true)?,
        });
    }
    for n in 0..=r {
        let mut gens = nil.clone();
        for i in 1..=r {
            let (_, y, z) = slot(i);
            gens.push(v(y).add(&v(z)));
        }
        for jj in 1..=n {
            let (x, y, _) = slot(jj);
            gens.push(v(x).add(&v(y)));
        }
        members.push(FamilyFMember {
            label: FamilyLabel::Chain2(n),
            presentation: IdealPresentation::new(ring.clone(), gens, true)?,
        });
    }
    let all_vars: Vec<Polynomial> = (0..ring.arity()).map(v).collect();
    members.push(FamilyFMember {
        label: FamilyLabel::Max,
        presentation: IdealPresentation::new(ring.clone(), all_vars, false)?,
    });
    Ok(members)
}

/// The prime linear ideal with the first m slots zero and, on the
/// remaining slots, x_j - y_j and y_j + z_j. Valid for 0 <= m <= r; the
/// quotient is a polynomial ring in r - m variables.
pub fn linear_slice_ideal(ring: &Ring, r: usize, m: usize) -> Result<IdealPresentation> {
    let v = |k: usize| Polynomial::variable(ring, k);
    let mut gens = Vec::new();
    for i in 1..=m {
        let (x, y, z) = slot(i);
        gens.extend([v(x), v(y), v(z)]);
    }
    for jj in m + 1..=r {
        let (x, y, z) = slot(jj);
        gens.push(v(x).sub(&v(y)));
        gens.push(v(y).add(&v(z)));
    }
    IdealPresentation::new(ring.clone(), gens, false)
}

/// The three components of the nilpotent commuting tuples cut by
/// y_1 + z_1 = 0: the zero-first-slot component and the two lines of
/// constant sign patterns.
pub fn build_cut_components(r: usize, field: &FieldSpec) -> Result<[IdealPresentation; 3]> {
    if r < 2 {
        return Err(Error::InvalidArgument(
            "the hyperplane cut needs at least two slots".into(),
        ));
    }
    reject_char_two(field)?;
    let ring = sl2_ring(r, field)?;
    let v = |k: usize| Polynomial::variable(&ring, k);

    // V1: first slot zero, remaining slots a nilpotent commuting tuple
    let mut v1_gens = Vec::new();
    {
        let (x, y, z) = slot(1);
        v1_gens.extend([v(x), v(y), v(z)]);
    }
    for i in 2..=r {
        let (x, y, z) = slot(i);
        v1_gens.push(v(x).mul(&v(x)).add(&v(y).mul(&v(z))));
    }
    v1_gens.extend(comm_generators_on_slots(&ring, 2, r));
    let v1 = IdealPresentation::new(ring.clone(), v1_gens, true)?;

    // V2: y_i = x_i, z_i = -x_i on every slot
    let mut v2_gens = Vec::new();
    for i in 1..=r {
        let (x, y, z) = slot(i);
        v2_gens.push(v(y).sub(&v(x)));
        v2_gens.push(v(z).add(&v(x)));
    }
    let v2 = IdealPresentation::new(ring.clone(), v2_gens, false)?;

    // V3: y_i = -x_i, z_i = x_i on every slot
    let mut v3_gens = Vec::new();
    for i in 1..=r {
        let (x, y, z) = slot(i);
        v3_gens.push(v(y).add(&v(x)));
        v3_gens.push(v(z).sub(&v(x)));
    }
    let v3 = IdealPresentation::new(ring.clone(), v3_gens, false)?;

    Ok([v1, v2, v3])
}

/// What an appendix obligation asserts about its polynomial and ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AppendixCheck {
    /// The polynomial normal-forms to zero against a basis of the
    /// generated ideal.
    NormalFormZero,
    /// The polynomial lies in the radical of the generated ideal.
    RadicalMember,
    /// The polynomial lies outside the radical of the generated ideal
    /// (non-zero-divisor witnesses).
    RadicalNonMember,
}

#[derive(Clone, Debug)]
pub struct AppendixObligation {
    pub label: String,
    pub check: AppendixCheck,
    pub poly: Polynomial,
    pub ideal: IdealPresentation,
}

/// Enumerates every membership obligation behind the two inductive cases
/// for tuple length r, plus the non-zero-divisor obligations.
///
/// Case 1 (1 <= m <= r-1): for j <= m, the products of y_{m+1} + z_{m+1}
/// with x_j, y_j, z_j reduce to zero against the chain ideal at level m.
/// Case 2 (0 <= n <= r-1): for j <= n the analogous products, and for
/// h > n the product (x_{n+1} + y_{n+1})(x_h - y_h) lies in the radical
/// of the chain, which reduces to the witnesses
/// x_{n+1} x_h + y_{n+1} z_h lying in the radical of the nilpotent
/// commuting ideal itself.
pub fn appendix_cases(r: usize, field: &FieldSpec) -> Result<Vec<AppendixObligation>> {
    reject_char_two(field)?;
    if r < 2 {
        return Err(Error::InvalidArgument(
            "the inductive cases need at least two slots".into(),
        ));
    }
    let ring = sl2_ring(r, field)?;
    let nil = sl2_nilcomm_generators(&ring, r);
    let v = |k: usize| Polynomial::variable(&ring, k);
    let nil_ideal = IdealPresentation::new(ring.clone(), nil.clone(), false)?;

    let mut out = Vec::new();

    // Case 1
    for m in 1..r {
        let mut gens = nil.clone();
        for i in 1..=m {
            let (_, y, z) = slot(i);
            gens.push(v(y).add(&v(z)));
        }
        let chain = IdealPresentation::new(ring.clone(), gens, false)?;
        let (_, ym1, zm1) = slot(m + 1);
        let factor = v(ym1).add(&v(zm1));
        for jj in 1..=m {
            let (x, y, z) = slot(jj);
            for (name, idx) in [("x", x), ("y", y), ("z", z)] {
                out.push(AppendixObligation {
                    label: format!("case1:m={m},j={jj}:{name}"),
                    check: AppendixCheck::NormalFormZero,
                    poly: factor.mul(&v(idx)),
                    ideal: chain.clone(),
                });
            }
        }
    }

    // Case 2
    for n in 0..r {
        let mut gens = nil.clone();
        for i in 1..=r {
            let (_, y, z) = slot(i);
            gens.push(v(y).add(&v(z)));
        }
        for jj in 1..=n {
            let (x, y, _) = slot(jj);
            gens.push(v(x).add(&v(y)));
        }
        let chain = IdealPresentation::new(ring.clone(), gens, false)?;
        let (xn1, yn1, _) = slot(n + 1);
        let factor = v(xn1).add(&v(yn1));
        for jj in 1..=n {
            let (x, y, z) = slot(jj);
            for (name, idx) in [("x", x), ("y", y), ("z", z)] {
                out.push(AppendixObligation {
                    label: format!("case2:n={n},j={jj}:{name}"),
                    check: AppendixCheck::NormalFormZero,
                    poly: factor.mul(&v(idx)),
                    ideal: chain.clone(),
                });
            }
        }
        for h in n + 1..=r {
            let (xh, yh, zh) = slot(h);
            out.push(AppendixObligation {
                label: format!("case2:n={n},h={h}:product"),
                check: AppendixCheck::RadicalMember,
                poly: factor.mul(&v(xh).sub(&v(yh))),
                ideal: chain.clone(),
            });
            out.push(AppendixObligation {
                label: format!("case2:n={n},h={h}:witness"),
                check: AppendixCheck::RadicalMember,
                poly: v(xn1).mul(&v(xh)).add(&v(yn1).mul(&v(zh))),
                ideal: nil_ideal.clone(),
            });
        }
    }

    // non-zero-divisor obligations
    for m in 1..r {
        // y_{m+1} + z_{m+1} stays outside the radical of the ideal with
        // the first m slots zeroed
        let mut gens = nil.clone();
        for jj in 1..=m {
            let (x, y, z) = slot(jj);
            gens.extend([v(x), v(y), v(z)]);
        }
        let ideal = IdealPresentation::new(ring.clone(), gens, false)?;
        let (_, ym1, zm1) = slot(m + 1);
        out.push(AppendixObligation {
            label: format!("nzd1:m={m}"),
            check: AppendixCheck::RadicalNonMember,
            poly: v(ym1).add(&v(zm1)),
            ideal,
        });
    }
    for n in 0..r {
        let ideal = linear_slice_ideal(&ring, r, n)?;
        let (xn1, yn1, _) = slot(n + 1);
        out.push(AppendixObligation {
            label: format!("nzd2:n={n}"),
            check: AppendixCheck::RadicalNonMember,
            poly: v(xn1).add(&v(yn1)),
            ideal,
        });
    }

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_size_at_r2() {
        let members = build_family_f(2, &FieldSpec::Rationals).unwrap();
        // I1, I2, P1, P2, chain1-1, chain1-2, chain2-0..2, max
        assert_eq!(members.len(), 10);
        let max = members
            .iter()
            .find(|m| m.label == FamilyLabel::Max)
            .unwrap();
        assert_eq!(max.presentation.generators().len(), 6);
        assert!(!max.presentation.radical_closure());
        let i1 = members
            .iter()
            .find(|m| m.label == FamilyLabel::I(1))
            .unwrap();
        assert!(i1.presentation.radical_closure());
        // I(1) at r=2 zeroes the first slot: 5 quadrics + 3 linear forms
        assert_eq!(i1.presentation.generators().len(), 8);
    }

    #[test]
    fn chain_members_are_nested_by_generators() {
        let members = build_family_f(3, &FieldSpec::Rationals).unwrap();
        let gens_of = |label: FamilyLabel| {
            members
                .iter()
                .find(|m| m.label == label)
                .unwrap()
                .presentation
                .generators()
                .to_vec()
        };
        for m in 1..3 {
            let smaller = gens_of(FamilyLabel::Chain1(m));
            let larger = gens_of(FamilyLabel::Chain1(m + 1));
            assert!(smaller.iter().all(|g| larger.contains(g)));
        }
        for n in 0..3 {
            let smaller = gens_of(FamilyLabel::Chain2(n));
            let larger = gens_of(FamilyLabel::Chain2(n + 1));
            assert!(smaller.iter().all(|g| larger.contains(g)));
        }
    }

    #[test]
    fn label_strings_roundtrip() {
        for label in [
            FamilyLabel::I(2),
            FamilyLabel::P(1),
            FamilyLabel::Chain1(3),
            FamilyLabel::Chain2(0),
            FamilyLabel::Max,
        ] {
            let s = label.to_string();
            assert_eq!(s.parse::<FamilyLabel>().unwrap(), label);
        }
        assert!("chain3-1".parse::<FamilyLabel>().is_err());
    }

    #[test]
    fn cut_components_at_r2() {
        let [v1, v2, v3] = build_cut_components(2, &FieldSpec::Rationals).unwrap();
        // V1 = <x1, y1, z1, x2^2 + y2*z2>
        assert_eq!(v1.generators().len(), 4);
        assert_eq!(v2.generators().len(), 4);
        assert_eq!(v3.generators().len(), 4);
        assert!(build_cut_components(1, &FieldSpec::Rationals).is_err());
    }

    #[test]
    fn appendix_obligation_counts() {
        // r=2: case1 m=1 gives 3; case2 n=0 gives 2*2, n=1 gives 3 + 2;
        // nzd: 1 + 2
        let obs = appendix_cases(2, &FieldSpec::Rationals).unwrap();
        let count = |prefix: &str| obs.iter().filter(|o| o.label.starts_with(prefix)).count();
        assert_eq!(count("case1"), 3);
        assert_eq!(count("case2:n=0"), 4);
        assert_eq!(count("case2:n=1"), 5);
        assert_eq!(count("nzd1"), 1);
        assert_eq!(count("nzd2"), 2);
        assert_eq!(obs.len(), 15);
    }
}
