//! Homogeneous multivariate polynomial arithmetic over a prime field.
//!
//! The ring is standard graded: every variable has degree one, and every
//! nonzero polynomial handled by the engine is homogeneous. Term lists are
//! kept strictly descending in the ring's monomial order, with no zero
//! coefficients, so equality is plain structural equality.

mod field;
mod monomial;
mod parse;
mod polynomial;

pub use field::{PrimeField, MAX_CHARACTERISTIC};
pub use monomial::{monomials_of_degree, Monomial, MonomialOrder};
pub use polynomial::{Polynomial, Term};

use std::fmt;
use std::sync::Arc;

use crate::error::{EngineError, Result};

pub const DEFAULT_CHARACTERISTIC: u64 = 32003;

/// The ambient polynomial ring: a prime field, named variables, and a
/// global monomial order.
#[derive(Debug, PartialEq, Eq)]
pub struct RingSpec {
    field: PrimeField,
    vars: Vec<String>,
    order: MonomialOrder,
}

/// Shared handle to a [`RingSpec`]. Cloning is cheap; all polynomial
/// values keep one of these.
#[derive(Debug, Clone)]
pub struct Ring(Arc<RingSpec>);

impl Ring {
    pub fn new(characteristic: u64, vars: Vec<String>, order: MonomialOrder) -> Result<Ring> {
        let field = PrimeField::new(characteristic)?;
        if vars.is_empty() {
            return Err(EngineError::NoVariables);
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(EngineError::DuplicateVariable(v.clone()));
            }
        }
        Ok(Ring(Arc::new(RingSpec { field, vars, order })))
    }

    /// Convenience constructor with single-letter variable names.
    pub fn with_var_names(characteristic: u64, names: &[&str]) -> Result<Ring> {
        Ring::new(
            characteristic,
            names.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::DegRevLex,
        )
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.0.field
    }

    #[inline]
    pub fn characteristic(&self) -> u64 {
        self.0.field.characteristic()
    }

    #[inline]
    pub fn num_vars(&self) -> usize {
        self.0.vars.len()
    }

    #[inline]
    pub fn var_names(&self) -> &[String] {
        &self.0.vars
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn same_ring(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.clone())
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::constant(self.clone(), 1)
    }

    pub fn variable(&self, index: usize) -> Polynomial {
        Polynomial::from_monomial(self.clone(), 1, Monomial::variable(self.num_vars(), index))
    }

    /// Parse the documented text syntax, e.g. `x^2*y + 3*z^3`.
    pub fn parse_poly(&self, text: &str) -> Result<Polynomial> {
        parse::parse_polynomial(self, text)
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other)
    }
}

impl Eq for Ring {}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_{}[{}] ({})",
            self.characteristic(),
            self.var_names().join(","),
            self.order().name()
        )
    }
}
