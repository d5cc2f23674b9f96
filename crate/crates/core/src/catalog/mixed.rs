//! Mixed commuting tuples over traceless 2x2 matrices: the first i slots
//! are constrained to the nilpotent cone, the remaining j slots are free
//! traceless matrices. The variety decomposes into the all-nilpotent
//! tuples and the tuples vanishing on the first i slots.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ideal::IdealPresentation;
use crate::poly::Polynomial;
use crate::ring::Ring;

use super::reject_char_two;
use super::sl2::{slot, sl2_comm_generators, sl2_nilcomm_generators, sl2_ring};

pub struct MixedVariety {
    pub i: usize,
    pub j: usize,
    /// Nilpotency quadrics on the first i slots plus all pairwise
    /// commutators.
    pub ideal: IdealPresentation,
    /// Ideal of the all-nilpotent component (generated presentation of a
    /// radical ideal, flagged as such).
    pub nilpotent_component: IdealPresentation,
    /// Ideal of the zero-prefix component: the first i slots vanish, the
    /// rest commute.
    pub zero_prefix_component: IdealPresentation,
}

pub fn build_mixed(i: usize, j: usize, field: &FieldSpec) -> Result<MixedVariety> {
    if i < 1 || j < 1 {
        return Err(Error::InvalidArgument(
            "mixed tuples need at least one constrained and one free slot".into(),
        ));
    }
    reject_char_two(field)?;
    let r = i + j;
    let ring = sl2_ring(r, field)?;

    let mut gens: Vec<Polynomial> = (1..=i)
        .map(|m| {
            let (x, y, z) = slot(m);
            let vx = Polynomial::variable(&ring, x);
            vx.mul(&vx).add(
                &Polynomial::variable(&ring, y).mul(&Polynomial::variable(&ring, z)),
            )
        })
        .collect();
    gens.extend(sl2_comm_generators(&ring, r));
    let ideal = IdealPresentation::new(ring.clone(), gens, false)?;

    let nilpotent_component =
        IdealPresentation::new(ring.clone(), sl2_nilcomm_generators(&ring, r), true)?;

    let zero_prefix_component = {
        let mut gens: Vec<Polynomial> = Vec::new();
        for m in 1..=i {
            let (x, y, z) = slot(m);
            gens.push(Polynomial::variable(&ring, x));
            gens.push(Polynomial::variable(&ring, y));
            gens.push(Polynomial::variable(&ring, z));
        }
        gens.extend(comm_generators_on_slots(&ring, i + 1, r));
        IdealPresentation::new(ring.clone(), gens, false)?
    };

    Ok(MixedVariety {
        i,
        j,
        ideal,
        nilpotent_component,
        zero_prefix_component,
    })
}

/// Commutator relations restricted to the slot range lo..=hi.
pub(crate) fn comm_generators_on_slots(ring: &Ring, lo: usize, hi: usize) -> Vec<Polynomial> {
    let mut gens = Vec::new();
    for a in lo..=hi {
        for b in a + 1..=hi {
            let (xa, ya, za) = slot(a);
            let (xb, yb, zb) = slot(b);
            let v = |k: usize| Polynomial::variable(ring, k);
            gens.push(v(xa).mul(&v(yb)).sub(&v(xb).mul(&v(ya))));
            gens.push(v(ya).mul(&v(zb)).sub(&v(yb).mul(&v(za))));
            gens.push(v(xa).mul(&v(zb)).sub(&v(xb).mul(&v(za))));
        }
    }
    gens
}
