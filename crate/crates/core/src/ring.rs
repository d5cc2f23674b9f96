//! Polynomial ring descriptors: named variables, a coefficient field, and a
//! monomial order.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::monomial::MonomialOrder;

/// Descriptor of a polynomial ring k[x_1, ..., x_n] with a fixed monomial
/// order. Shared behind an [`Arc`]; all polynomials hold a reference to
/// their ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingDescriptor {
    vars: Vec<String>,
    field: FieldSpec,
    order: MonomialOrder,
}

pub type Ring = Arc<RingDescriptor>;

/// Builds a ring descriptor. Variable names must be distinct identifiers
/// (letter, then letters/digits/underscores). Characteristic 2 is accepted;
/// constructions that need p != 2 reject it downstream.
pub fn make_ring<S: AsRef<str>>(names: &[S], field: FieldSpec, order: MonomialOrder) -> Result<Ring> {
    if names.is_empty() {
        return Err(Error::InvalidArgument("empty variable list".into()));
    }
    let mut vars = Vec::with_capacity(names.len());
    for name in names {
        let name = name.as_ref();
        if !is_identifier(name) {
            return Err(Error::InvalidVariableName(name.to_string()));
        }
        if vars.iter().any(|v| v == name) {
            return Err(Error::DuplicateVariable(name.to_string()));
        }
        vars.push(name.to_string());
    }
    order.validate(vars.len())?;
    Ok(Arc::new(RingDescriptor { vars, field, order }))
}

impl RingDescriptor {
    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// A fresh variable name not present in the ring, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        while self.var_index(&name).is_some() {
            name.push('_');
        }
        name
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
