//! Constructors for every variety ideal the crate studies, in canonical
//! coordinates, ready for the Groebner engine and the sampling oracle.
//!
//! Coordinates: a traceless 2x2 tuple entry is [[x_i, y_i], [z_i, -x_i]];
//! a full 2x2 entry is [[a_i, b_i], [c_i, d_i]]; a strictly
//! lower-triangular 3x3 entry carries x_i at (2,1), y_i at (3,1) and z_i
//! at (3,2); a traceless 3x3 entry uses its first eight matrix entries,
//! the (3,3) entry being eliminated by tracelessness.

mod family;
mod mixed;
mod sl2;
mod sl3;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ideal::IdealPresentation;

pub use family::{
    appendix_cases, build_cut_components, build_family_f, linear_slice_ideal, AppendixCheck,
    AppendixObligation, FamilyFMember, FamilyLabel,
};
pub use mixed::{build_mixed, MixedVariety};
pub use sl2::{
    build_gl2_comm, build_sl2_comm, build_sl2_nilcomm, gl2_ring, sl2_comm_generators,
    sl2_comm_generators_via_minors, sl2_nilcomm_generators, sl2_ring, Gl2Commuting, Gl2Sl2Iso,
};
pub use sl3::{
    build_sl3_nilcomm, build_sl3_u_comm, sl3_ring, sl3_u_minor_generators, subreg_slice,
    SubregSlice, SL3_COORDS,
};

/// Identifier of a catalog variety, carrying its tuple length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum VarietyId {
    /// Commuting tuples of traceless 2x2 matrices.
    Sl2Comm { r: usize },
    /// Commuting tuples of nilpotent traceless 2x2 matrices.
    Sl2NilComm { r: usize },
    /// Commuting tuples of full 2x2 matrices.
    Gl2Comm { r: usize },
    /// Commuting tuples of strictly lower-triangular 3x3 matrices.
    Sl3UComm { r: usize },
    /// Commuting tuples of nilpotent traceless 3x3 matrices.
    Sl3NilComm { r: usize },
    /// Tuples with the first i entries nilpotent and the rest arbitrary
    /// traceless 2x2.
    Mixed { i: usize, j: usize },
    /// A member of the inductive ideal family over the nilpotent 2x2
    /// tuples.
    FamilyF { r: usize, label: FamilyLabel },
    /// One of the two components of the sliced subregular-closure tuples
    /// in 3x3 matrices (which = 1 or 2).
    SubregComponent { r: usize, which: usize },
    /// One of the three components of the hyperplane-cut nilpotent 2x2
    /// tuples (which = 1, 2 or 3).
    CutComponent { r: usize, which: usize },
}

impl VarietyId {
    /// Tuple length of the ambient product.
    pub fn tuple_length(&self) -> usize {
        match self {
            VarietyId::Sl2Comm { r }
            | VarietyId::Sl2NilComm { r }
            | VarietyId::Gl2Comm { r }
            | VarietyId::Sl3UComm { r }
            | VarietyId::Sl3NilComm { r }
            | VarietyId::FamilyF { r, .. }
            | VarietyId::SubregComponent { r, .. }
            | VarietyId::CutComponent { r, .. } => *r,
            VarietyId::Mixed { i, j } => i + j,
        }
    }

    /// The defining ideal, when the id presents one. Subregular components
    /// are parametrization-only and have no ideal here.
    pub fn build_ideal(&self, field: &FieldSpec) -> Result<IdealPresentation> {
        match self {
            VarietyId::Sl2Comm { r } => build_sl2_comm(*r, field),
            VarietyId::Sl2NilComm { r } => build_sl2_nilcomm(*r, field),
            VarietyId::Gl2Comm { r } => Ok(build_gl2_comm(*r, field)?.ideal),
            VarietyId::Sl3UComm { r } => build_sl3_u_comm(*r, field),
            VarietyId::Sl3NilComm { r } => build_sl3_nilcomm(*r, field),
            VarietyId::Mixed { i, j } => Ok(build_mixed(*i, *j, field)?.ideal),
            VarietyId::FamilyF { r, label } => {
                let members = build_family_f(*r, field)?;
                members
                    .into_iter()
                    .find(|m| m.label == *label)
                    .map(|m| m.presentation)
                    .ok_or_else(|| Error::UnknownVariety(self.to_string()))
            }
            VarietyId::CutComponent { r, which } => {
                let [v1, v2, v3] = build_cut_components(*r, field)?;
                Ok(match which {
                    1 => v1,
                    2 => v2,
                    3 => v3,
                    _ => return Err(Error::UnknownVariety(self.to_string())),
                })
            }
            VarietyId::SubregComponent { .. } => {
                Err(Error::UnsupportedVariety(self.to_string()))
            }
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match self {
            VarietyId::Mixed { i, j } => *i >= 1 && *j >= 1,
            VarietyId::SubregComponent { r, which } => *r >= 1 && (1..=2).contains(which),
            VarietyId::CutComponent { r, which } => *r >= 2 && (1..=3).contains(which),
            other => other.tuple_length() >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnknownVariety(self.to_string()))
        }
    }
}

impl fmt::Display for VarietyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarietyId::Sl2Comm { r } => write!(f, "sl2-comm:r={r}"),
            VarietyId::Sl2NilComm { r } => write!(f, "sl2-nilcomm:r={r}"),
            VarietyId::Gl2Comm { r } => write!(f, "gl2-comm:r={r}"),
            VarietyId::Sl3UComm { r } => write!(f, "sl3-u-comm:r={r}"),
            VarietyId::Sl3NilComm { r } => write!(f, "sl3-nilcomm:r={r}"),
            VarietyId::Mixed { i, j } => write!(f, "mixed:i={i},j={j}"),
            VarietyId::FamilyF { r, label } => write!(f, "family-f:r={r}:{label}"),
            VarietyId::SubregComponent { r, which } => write!(f, "subreg-{which}:r={r}"),
            VarietyId::CutComponent { r, which } => write!(f, "cut-v{which}:r={r}"),
        }
    }
}

impl FromStr for VarietyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownVariety(s.to_string());
        let mut parts = s.split(':');
        let head = parts.next().ok_or_else(bad)?;
        let id = match head {
            "mixed" => {
                let args = parts.next().ok_or_else(bad)?;
                let mut i = None;
                let mut j = None;
                for kv in args.split(',') {
                    match kv.split_once('=') {
                        Some(("i", v)) => i = v.parse().ok(),
                        Some(("j", v)) => j = v.parse().ok(),
                        _ => return Err(bad()),
                    }
                }
                VarietyId::Mixed {
                    i: i.ok_or_else(bad)?,
                    j: j.ok_or_else(bad)?,
                }
            }
            "family-f" => {
                let r = parse_r(parts.next().ok_or_else(bad)?).ok_or_else(bad)?;
                let label: FamilyLabel = parts.next().ok_or_else(bad)?.parse()?;
                VarietyId::FamilyF { r, label }
            }
            _ => {
                let r = parse_r(parts.next().ok_or_else(bad)?).ok_or_else(bad)?;
                match head {
                    "sl2-comm" => VarietyId::Sl2Comm { r },
                    "sl2-nilcomm" => VarietyId::Sl2NilComm { r },
                    "gl2-comm" => VarietyId::Gl2Comm { r },
                    "sl3-u-comm" => VarietyId::Sl3UComm { r },
                    "sl3-nilcomm" => VarietyId::Sl3NilComm { r },
                    "subreg-1" => VarietyId::SubregComponent { r, which: 1 },
                    "subreg-2" => VarietyId::SubregComponent { r, which: 2 },
                    "cut-v1" => VarietyId::CutComponent { r, which: 1 },
                    "cut-v2" => VarietyId::CutComponent { r, which: 2 },
                    "cut-v3" => VarietyId::CutComponent { r, which: 3 },
                    _ => return Err(bad()),
                }
            }
        };
        if parts.next().is_some() {
            return Err(bad());
        }
        id.validate()?;
        Ok(id)
    }
}

fn parse_r(s: &str) -> Option<usize> {
    s.strip_prefix("r=")?.parse().ok()
}

pub(crate) fn reject_char_two(field: &FieldSpec) -> Result<()> {
    if field.characteristic() == 2 {
        return Err(Error::CharacteristicRejected(
            2,
            "this construction needs 2 to be invertible",
        ));
    }
    Ok(())
}
