//! Ideals and slice data over 3x3 matrices: commuting tuples in the
//! strictly lower-triangular algebra, the nilpotent commuting ideal, and
//! the coordinate planes of the sliced subregular-orbit closure.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ideal::IdealPresentation;
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::polymat::PolyMat;
use crate::ring::{make_ring, Ring};

/// The eight matrix coordinates of a traceless 3x3 slot, row-major with
/// the (3,3) entry omitted.
pub const SL3_COORDS: [(usize, usize); 8] = [
    (0, 0),
    (0, 1),
    (0, 2),
    (1, 0),
    (1, 1),
    (1, 2),
    (2, 0),
    (2, 1),
];

/// k[x_1, y_1, z_1, ...] for strictly lower-triangular slots with x_i at
/// (2,1), y_i at (3,1), z_i at (3,2).
pub(crate) fn sl3_u_ring(r: usize, field: &FieldSpec) -> Result<Ring> {
    let mut names = Vec::with_capacity(3 * r);
    for i in 1..=r {
        names.push(format!("x{i}"));
        names.push(format!("y{i}"));
        names.push(format!("z{i}"));
    }
    make_ring(&names, *field, MonomialOrder::GrevLex)
}

/// Commuting tuples in the strictly lower-triangular 3x3 algebra: the
/// relations are x_i z_j - x_j z_i for i < j; the y coordinates are free.
pub fn build_sl3_u_comm(r: usize, field: &FieldSpec) -> Result<IdealPresentation> {
    let ring = sl3_u_ring(r, field)?;
    let gens = sl3_u_minor_generators(&ring, r);
    IdealPresentation::new(ring, gens, false)
}

/// The 2-minors of the 2 x r matrix with rows the x and z coordinates.
pub fn sl3_u_minor_generators(ring: &Ring, r: usize) -> Vec<Polynomial> {
    let mut gens = Vec::with_capacity(r * r.saturating_sub(1) / 2);
    for i in 1..=r {
        for j in i + 1..=r {
            let xi = Polynomial::variable(ring, 3 * (i - 1));
            let zi = Polynomial::variable(ring, 3 * (i - 1) + 2);
            let xj = Polynomial::variable(ring, 3 * (j - 1));
            let zj = Polynomial::variable(ring, 3 * (j - 1) + 2);
            gens.push(xi.mul(&zj).sub(&xj.mul(&zi)));
        }
    }
    gens
}

/// k[m11_1, ..., m32_1, m11_2, ...] with eight coordinates per slot.
pub fn sl3_ring(r: usize, field: &FieldSpec) -> Result<Ring> {
    let mut names = Vec::with_capacity(8 * r);
    for i in 1..=r {
        for (row, col) in SL3_COORDS {
            names.push(format!("m{}{}_{i}", row + 1, col + 1));
        }
    }
    make_ring(&names, *field, MonomialOrder::GrevLex)
}

/// The symbolic traceless matrix of slot i (1-based) in the full 3x3 ring.
pub(crate) fn sl3_slot_matrix(ring: &Ring, i: usize) -> PolyMat {
    let base = 8 * (i - 1);
    let mut m = PolyMat::zero(ring, 3);
    for (k, (row, col)) in SL3_COORDS.iter().enumerate() {
        m.entries[*row][*col] = Polynomial::variable(ring, base + k);
    }
    m.entries[2][2] = m.entries[0][0].add(&m.entries[1][1]).neg();
    m
}

/// The nilpotent commuting ideal over traceless 3x3 matrices: eight
/// commutator entries per pair (the ninth is dependent through the trace)
/// plus, per slot, the two invariants tr(A^2) and det(A) cutting out the
/// nilpotent matrices. Needs the characteristic to avoid 2 and 3 so that
/// vanishing of the invariants is equivalent to nilpotency.
pub fn build_sl3_nilcomm(r: usize, field: &FieldSpec) -> Result<IdealPresentation> {
    let p = field.characteristic();
    if p == 2 || p == 3 {
        return Err(Error::CharacteristicRejected(
            p,
            "nilpotency via tr(A^2) and det(A) needs p > 3",
        ));
    }
    let ring = sl3_ring(r, field)?;
    let mats: Vec<PolyMat> = (1..=r).map(|i| sl3_slot_matrix(&ring, i)).collect();
    let mut gens = Vec::new();
    for i in 0..r {
        gens.push(mats[i].trace_of_square());
        gens.push(mats[i].det());
    }
    for i in 0..r {
        for j in i + 1..r {
            let comm = mats[i].commutator(&mats[j]);
            for (row, col) in SL3_COORDS {
                gens.push(comm.entries[row][col].clone());
            }
        }
    }
    IdealPresentation::new(ring, gens, false)
}

/// Coordinate data of the sliced subregular-orbit closure: the base point
/// v_sub = E_21 and the two planes of matrices commuting with it inside
/// the rank-at-most-one locus. W1 is spanned by the (2,1) and (3,1)
/// entries, W2 by the (2,1) and (2,3) entries.
pub struct SubregSlice {
    /// v_sub as a constant 3x3 integer matrix.
    pub base: [[i64; 3]; 3],
    /// Two spanning matrices for the plane of the requested component.
    pub plane: [[[i64; 3]; 3]; 2],
}

pub fn subreg_slice(which: usize) -> Result<SubregSlice> {
    let e = |row: usize, col: usize| {
        let mut m = [[0i64; 3]; 3];
        m[row][col] = 1;
        m
    };
    let base = e(1, 0);
    let plane = match which {
        1 => [e(1, 0), e(2, 0)],
        2 => [e(1, 0), e(1, 2)],
        _ => {
            return Err(Error::InvalidArgument(format!(
                "subregular component must be 1 or 2, got {which}"
            )))
        }
    };
    Ok(SubregSlice { base, plane })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    #[test]
    fn u_comm_generators() {
        let q = FieldSpec::Rationals;
        assert_eq!(build_sl3_u_comm(1, &q).unwrap().generators().len(), 0);
        let i2 = build_sl3_u_comm(2, &q).unwrap();
        assert_eq!(i2.generators().len(), 1);
        assert_eq!(
            i2.generators()[0],
            parse_polynomial(i2.ring(), "x1*z2 - x2*z1").unwrap()
        );
        assert_eq!(build_sl3_u_comm(4, &q).unwrap().generators().len(), 6);
    }

    #[test]
    fn nilcomm_generator_counts() {
        let q = FieldSpec::Rationals;
        let i1 = build_sl3_nilcomm(1, &q).unwrap();
        assert_eq!(i1.generators().len(), 2);
        assert_eq!(i1.ring().arity(), 8);
        let i2 = build_sl3_nilcomm(2, &q).unwrap();
        assert_eq!(i2.generators().len(), 12);
        assert_eq!(i2.ring().arity(), 16);
    }

    #[test]
    fn nilcomm_generators_homogeneous() {
        let ideal = build_sl3_nilcomm(2, &FieldSpec::Rationals).unwrap();
        assert!(ideal.is_homogeneous());
    }

    #[test]
    fn small_characteristic_rejected() {
        for p in [2u64, 3] {
            let f = FieldSpec::prime(p).unwrap();
            assert!(matches!(
                build_sl3_nilcomm(1, &f),
                Err(Error::CharacteristicRejected(_, _))
            ));
        }
        assert!(build_sl3_nilcomm(1, &FieldSpec::prime(32003).unwrap()).is_ok());
    }

    #[test]
    fn slice_planes_have_rank_one_spans() {
        for which in [1, 2] {
            let slice = subreg_slice(which).unwrap();
            assert_eq!(slice.base[1][0], 1);
            // every matrix in the span has all 2x2 minors zero
            for a in -2i64..=2 {
                for b in -2i64..=2 {
                    let mut m = [[0i64; 3]; 3];
                    for r in 0..3 {
                        for c in 0..3 {
                            m[r][c] = a * slice.plane[0][r][c] + b * slice.plane[1][r][c];
                        }
                    }
                    for r1 in 0..3 {
                        for r2 in r1 + 1..3 {
                            for c1 in 0..3 {
                                for c2 in c1 + 1..3 {
                                    assert_eq!(m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1], 0);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
