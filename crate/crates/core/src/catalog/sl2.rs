//! Commuting-variety ideals over 2x2 matrices: traceless tuples, their
//! nilpotent cone, full 2x2 tuples, and the splitting isomorphism between
//! the full and traceless cases.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Result;
use crate::field::FieldSpec;
use crate::ideal::IdealPresentation;
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{make_ring, Ring};

use super::reject_char_two;

/// k[x_1, y_1, z_1, ..., x_r, y_r, z_r] under grevlex.
pub fn sl2_ring(r: usize, field: &FieldSpec) -> Result<Ring> {
    let mut names = Vec::with_capacity(3 * r);
    for i in 1..=r {
        names.push(format!("x{i}"));
        names.push(format!("y{i}"));
        names.push(format!("z{i}"));
    }
    make_ring(&names, *field, MonomialOrder::GrevLex)
}

/// Variable indices of slot i (1-based): x, y, z.
pub(crate) fn slot(i: usize) -> (usize, usize, usize) {
    let base = 3 * (i - 1);
    (base, base + 1, base + 2)
}

fn var(ring: &Ring, i: usize) -> Polynomial {
    Polynomial::variable(ring, i)
}

/// The pairwise commutator relations of traceless 2x2 tuples: for each
/// i < j the three binomials x_i y_j - x_j y_i, y_i z_j - y_j z_i,
/// x_i z_j - x_j z_i.
pub fn sl2_comm_generators(ring: &Ring, r: usize) -> Vec<Polynomial> {
    let mut gens = Vec::with_capacity(3 * r * (r.saturating_sub(1)) / 2);
    for i in 1..=r {
        for j in i + 1..=r {
            let (xi, yi, zi) = slot(i);
            let (xj, yj, zj) = slot(j);
            let minor = |a: usize, b: usize, c: usize, d: usize| {
                var(ring, a).mul(&var(ring, b)).sub(&var(ring, c).mul(&var(ring, d)))
            };
            gens.push(minor(xi, yj, xj, yi));
            gens.push(minor(yi, zj, yj, zi));
            gens.push(minor(xi, zj, xj, zi));
        }
    }
    gens
}

/// The same relations read as the 2-minors of the 3 x r matrix whose rows
/// are the x, y and z coordinates. Produces the identical polynomial set.
pub fn sl2_comm_generators_via_minors(ring: &Ring, r: usize) -> Vec<Polynomial> {
    let rows: Vec<Vec<Polynomial>> = (0..3)
        .map(|row| (1..=r).map(|i| {
            let (x, y, z) = slot(i);
            var(ring, [x, y, z][row])
        }).collect())
        .collect();
    let mut gens = Vec::new();
    for p in 0..3 {
        for q in p + 1..3 {
            for i in 0..r {
                for j in i + 1..r {
                    gens.push(
                        rows[p][i]
                            .mul(&rows[q][j])
                            .sub(&rows[p][j].mul(&rows[q][i])),
                    );
                }
            }
        }
    }
    gens
}

/// Commutator relations plus the nilpotency quadric x_i^2 + y_i z_i per
/// slot.
pub fn sl2_nilcomm_generators(ring: &Ring, r: usize) -> Vec<Polynomial> {
    let mut gens: Vec<Polynomial> = (1..=r)
        .map(|i| {
            let (x, y, z) = slot(i);
            var(ring, x)
                .mul(&var(ring, x))
                .add(&var(ring, y).mul(&var(ring, z)))
        })
        .collect();
    gens.extend(sl2_comm_generators(ring, r));
    gens
}

/// The commuting variety of r-tuples of traceless 2x2 matrices. The
/// generated ideal is radical (it is a determinantal ideal), but the
/// presentation is kept as generated.
pub fn build_sl2_comm(r: usize, field: &FieldSpec) -> Result<IdealPresentation> {
    reject_char_two(field)?;
    let ring = sl2_ring(r, field)?;
    let gens = sl2_comm_generators(&ring, r);
    IdealPresentation::new(ring, gens, false)
}

/// The nilpotent commuting variety of r-tuples of traceless 2x2 matrices.
/// The generated ideal is not radical for r >= 2.
pub fn build_sl2_nilcomm(r: usize, field: &FieldSpec) -> Result<IdealPresentation> {
    reject_char_two(field)?;
    let ring = sl2_ring(r, field)?;
    let gens = sl2_nilcomm_generators(&ring, r);
    IdealPresentation::new(ring, gens, false)
}

/// k[a_1, b_1, c_1, d_1, ..., a_r, b_r, c_r, d_r] under grevlex, for
/// tuples of full 2x2 matrices [[a_i, b_i], [c_i, d_i]].
pub fn gl2_ring(r: usize, field: &FieldSpec) -> Result<Ring> {
    let mut names = Vec::with_capacity(4 * r);
    for i in 1..=r {
        for v in ["a", "b", "c", "d"] {
            names.push(format!("{v}{i}"));
        }
    }
    make_ring(&names, *field, MonomialOrder::GrevLex)
}

fn gl2_slot(i: usize) -> (usize, usize, usize, usize) {
    let base = 4 * (i - 1);
    (base, base + 1, base + 2, base + 3)
}

/// The full 2x2 commuting ideal together with the coordinate maps that
/// split a matrix into its traceless part and trace.
pub struct Gl2Commuting {
    pub ideal: IdealPresentation,
    pub iso: Gl2Sl2Iso,
}

/// The isomorphism between r-tuples of 2x2 matrices and (traceless tuple,
/// trace vector) pairs: v_i maps to (v_i - tr(v_i)/2 * I, tr(v_i)).
///
/// `split_ring` is k[x_i, y_i, z_i, s_i] where s_i is the i-th trace.
pub struct Gl2Sl2Iso {
    pub r: usize,
    pub gl2_ring: Ring,
    pub split_ring: Ring,
    /// Images of a_i, b_i, c_i, d_i inside the split ring (the comorphism
    /// of the inverse map); substituting them pulls full-matrix relations
    /// back to the traceless side.
    pub gl2_images_in_split: Vec<Polynomial>,
    /// Images of x_i, y_i, z_i, s_i inside the full-matrix ring.
    pub split_images_in_gl2: Vec<Polynomial>,
}

impl Gl2Sl2Iso {
    /// Point map: a full-matrix tuple (a_i, b_i, c_i, d_i) to
    /// (x_i, y_i, z_i; s_i) with x_i = (a_i - d_i)/2 and s_i = a_i + d_i.
    pub fn split_point(&self, point: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(point.len(), 4 * self.r);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let mut out = Vec::with_capacity(4 * self.r);
        for i in 0..self.r {
            let (a, b, c, d) = (
                &point[4 * i],
                &point[4 * i + 1],
                &point[4 * i + 2],
                &point[4 * i + 3],
            );
            out.push((a - d) * &half);
            out.push(b.clone());
            out.push(c.clone());
        }
        for i in 0..self.r {
            out.push(&point[4 * i] + &point[4 * i + 3]);
        }
        out
    }

    /// Inverse point map: (x_i, y_i, z_i; s_i) back to the full tuple.
    pub fn unsplit_point(&self, point: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(point.len(), 4 * self.r);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let mut out = Vec::with_capacity(4 * self.r);
        for i in 0..self.r {
            let (x, y, z) = (
                &point[3 * i],
                &point[3 * i + 1],
                &point[3 * i + 2],
            );
            let s = &point[3 * self.r + i];
            let half_s = s * &half;
            out.push(x + &half_s);
            out.push(y.clone());
            out.push(z.clone());
            out.push(&half_s - x);
        }
        out
    }
}

/// Entrywise commutators of full 2x2 tuples, four per pair, plus the
/// splitting maps.
pub fn build_gl2_comm(r: usize, field: &FieldSpec) -> Result<Gl2Commuting> {
    reject_char_two(field)?;
    let ring = gl2_ring(r, field)?;
    let mut gens = Vec::with_capacity(4 * r * (r.saturating_sub(1)) / 2);
    for i in 1..=r {
        for j in i + 1..=r {
            let (ai, bi, ci, di) = gl2_slot(i);
            let (aj, bj, cj, dj) = gl2_slot(j);
            let v = |k: usize| var(&ring, k);
            // [v_i, v_j] entrywise
            let e11 = v(bi).mul(&v(cj)).sub(&v(bj).mul(&v(ci)));
            let e12 = v(ai)
                .mul(&v(bj))
                .add(&v(bi).mul(&v(dj)))
                .sub(&v(aj).mul(&v(bi)))
                .sub(&v(bj).mul(&v(di)));
            let e21 = v(ci)
                .mul(&v(aj))
                .add(&v(di).mul(&v(cj)))
                .sub(&v(cj).mul(&v(ai)))
                .sub(&v(dj).mul(&v(ci)));
            let e22 = v(ci).mul(&v(bj)).sub(&v(cj).mul(&v(bi)));
            gens.extend([e11, e12, e21, e22]);
        }
    }
    let ideal = IdealPresentation::new(ring.clone(), gens, false)?;

    // split ring k[x_1, y_1, z_1, ..., s_1, ..., s_r]
    let mut names = Vec::with_capacity(4 * r);
    for i in 1..=r {
        names.push(format!("x{i}"));
        names.push(format!("y{i}"));
        names.push(format!("z{i}"));
    }
    for i in 1..=r {
        names.push(format!("s{i}"));
    }
    let split_ring = make_ring(&names, *field, MonomialOrder::GrevLex)?;

    let half = {
        let one = BigInt::from(1);
        let two = BigInt::from(2);
        field.fraction(&one, &two)?
    };
    let half_poly = |ring: &Ring, idx: usize| {
        Polynomial::variable(ring, idx).scale(&half)
    };

    let mut gl2_images_in_split = Vec::with_capacity(4 * r);
    for i in 0..r {
        let x = Polynomial::variable(&split_ring, 3 * i);
        let y = Polynomial::variable(&split_ring, 3 * i + 1);
        let z = Polynomial::variable(&split_ring, 3 * i + 2);
        let half_s = half_poly(&split_ring, 3 * r + i);
        gl2_images_in_split.push(x.add(&half_s)); // a_i
        gl2_images_in_split.push(y); // b_i
        gl2_images_in_split.push(z); // c_i
        gl2_images_in_split.push(half_s.sub(&x)); // d_i
    }

    let mut split_images_in_gl2 = Vec::with_capacity(4 * r);
    for i in 0..r {
        let (a, b, c, d) = gl2_slot(i + 1);
        let half_a = half_poly(&ring, a);
        let half_d = half_poly(&ring, d);
        split_images_in_gl2.push(half_a.sub(&half_d)); // x_i
        split_images_in_gl2.push(var(&ring, b)); // y_i
        split_images_in_gl2.push(var(&ring, c)); // z_i
    }
    for i in 0..r {
        let (a, _, _, d) = gl2_slot(i + 1);
        split_images_in_gl2.push(var(&ring, a).add(&var(&ring, d))); // s_i
    }

    Ok(Gl2Commuting {
        ideal,
        iso: Gl2Sl2Iso {
            r,
            gl2_ring: ring,
            split_ring,
            gl2_images_in_split,
            split_images_in_gl2,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::parse::parse_polynomial;

    #[test]
    fn generator_counts() {
        let q = FieldSpec::Rationals;
        assert_eq!(build_sl2_comm(1, &q).unwrap().generators().len(), 0);
        assert_eq!(build_sl2_comm(2, &q).unwrap().generators().len(), 3);
        assert_eq!(build_sl2_comm(3, &q).unwrap().generators().len(), 9);
        assert_eq!(build_sl2_nilcomm(1, &q).unwrap().generators().len(), 1);
        assert_eq!(build_sl2_nilcomm(2, &q).unwrap().generators().len(), 5);
        assert_eq!(build_gl2_comm(2, &q).unwrap().ideal.generators().len(), 4);
        assert_eq!(build_gl2_comm(3, &q).unwrap().ideal.generators().len(), 12);
    }

    #[test]
    fn nilcomm_r1_is_the_cone_quadric() {
        let ideal = build_sl2_nilcomm(1, &FieldSpec::Rationals).unwrap();
        let ring = ideal.ring();
        assert_eq!(
            ideal.generators(),
            &[parse_polynomial(ring, "x1^2 + y1*z1").unwrap()]
        );
    }

    #[test]
    fn characteristic_two_rejected() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert!(matches!(
            build_sl2_comm(2, &f2),
            Err(Error::CharacteristicRejected(2, _))
        ));
        assert!(matches!(
            build_gl2_comm(2, &f2),
            Err(Error::CharacteristicRejected(2, _))
        ));
    }

    #[test]
    fn minor_expansion_matches_direct_generators() {
        for r in 1..=4 {
            let ideal = build_sl2_comm(r, &FieldSpec::Rationals).unwrap();
            let ring = ideal.ring();
            let mut direct = sl2_comm_generators(ring, r);
            let mut minors = sl2_comm_generators_via_minors(ring, r);
            let key = |p: &Polynomial| p.to_string();
            direct.sort_by_key(key);
            minors.sort_by_key(key);
            assert_eq!(direct, minors, "r={r}");
        }
    }

    #[test]
    fn split_point_of_rank_one_projector() {
        // [[1, 0], [0, 0]] goes to ([[1/2, 0], [0, -1/2]], trace 1)
        let built = build_gl2_comm(1, &FieldSpec::Rationals).unwrap();
        let one = BigRational::from(BigInt::from(1));
        let zero = BigRational::from(BigInt::from(0));
        let point = vec![one.clone(), zero.clone(), zero.clone(), zero.clone()];
        let split = built.iso.split_point(&point);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(split, vec![half, zero.clone(), zero, one]);
    }

    #[test]
    fn split_unsplit_roundtrip() {
        let built = build_gl2_comm(2, &FieldSpec::Rationals).unwrap();
        let point: Vec<BigRational> = (1..=8)
            .map(|k| BigRational::new(BigInt::from(k * 7 - 3), BigInt::from(2)))
            .collect();
        let roundtrip = built.iso.unsplit_point(&built.iso.split_point(&point));
        assert_eq!(roundtrip, point);
    }
}
