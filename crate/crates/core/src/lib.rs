//! Exact computer algebra for commuting varieties of matrix tuples.
//!
//! The crate provides sparse multivariate polynomials over the rationals
//! and prime fields, a Buchberger engine with membership, radical
//! membership, elimination and intersection, Hilbert series and Krull
//! dimension, constructors for the commuting-variety ideals it studies
//! (2x2 traceless and full matrices, their nilpotent cones, strictly
//! lower-triangular and nilpotent 3x3 matrices, mixed and sliced
//! variants), an exact point-sampling oracle with evaluation-rank Hilbert
//! functions and Jacobian-rank dimension estimates, and SL2 character
//! series with good-filtration multiplicities.

pub mod catalog;
pub mod charseries;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod polymat;
pub mod ring;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar, DEFAULT_PRIME};
pub use groebner::{
    buchberger, eliminate, ideal_equal_radical, ideal_member, intersect_ideals, is_groebner,
    radical_member, GbConfig, GbStats, GroebnerBasis,
};
pub use hilbert::{hilbert_series, krull_dimension, HilbertData};
pub use ideal::IdealPresentation;
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use poly::{normal_form, Polynomial};
pub use ring::{make_ring, Ring, RingDescriptor};
