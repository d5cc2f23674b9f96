//! Ideal presentations: a generator list plus a flag recording whether the
//! intended ideal is the radical of the generated one.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::Ring;

/// A finitely presented ideal. When `radical_closure` is set, the ideal
/// meant by this presentation is the radical of the generated ideal;
/// membership queries against such presentations should go through
/// radical membership rather than plain normal forms.
#[derive(Clone, PartialEq, Debug)]
pub struct IdealPresentation {
    ring: Ring,
    generators: Vec<Polynomial>,
    radical_closure: bool,
}

impl IdealPresentation {
    /// An empty generator list presents the zero ideal.
    pub fn new(ring: Ring, generators: Vec<Polynomial>, radical_closure: bool) -> Result<Self> {
        for g in &generators {
            if g.ring() != &ring {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() {
                return Err(Error::InvalidArgument(
                    "zero polynomial among ideal generators".into(),
                ));
            }
        }
        Ok(IdealPresentation {
            ring,
            generators,
            radical_closure,
        })
    }

    pub fn zero(ring: Ring) -> Self {
        IdealPresentation {
            ring,
            generators: Vec::new(),
            radical_closure: false,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn radical_closure(&self) -> bool {
        self.radical_closure
    }

    pub fn with_radical_closure(mut self, flag: bool) -> Self {
        self.radical_closure = flag;
        self
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }

    /// Presentation of the sum ideal (concatenated generators). The
    /// radical flag is carried over disjunctively: if either summand was
    /// meant up to radical, so is the sum.
    pub fn sum(&self, other: &IdealPresentation) -> Result<IdealPresentation> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().cloned());
        Ok(IdealPresentation {
            ring: self.ring.clone(),
            generators,
            radical_closure: self.radical_closure || other.radical_closure,
        })
    }
}
