//! Sparse homogeneous polynomials and the multi-divisor division algorithm.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{EngineError, Result};

use super::monomial::Monomial;
use super::Ring;

/// One term: a nonzero coefficient in `[1, p)` and a monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: u64,
    pub mono: Monomial,
}

/// A homogeneous polynomial. Terms are strictly descending in the ring's
/// monomial order and all share one total degree; the zero polynomial has
/// an empty term list.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: Ring) -> Polynomial {
        Polynomial { ring, terms: Vec::new() }
    }

    pub fn constant(ring: Ring, c: u64) -> Polynomial {
        let c = ring.field().reduce(c);
        if c == 0 {
            return Polynomial::zero(ring);
        }
        let one = Monomial::one(ring.num_vars());
        Polynomial {
            ring,
            terms: vec![Term { coeff: c, mono: one }],
        }
    }

    pub fn from_monomial(ring: Ring, c: u64, mono: Monomial) -> Polynomial {
        let c = ring.field().reduce(c);
        if c == 0 {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring,
            terms: vec![Term { coeff: c, mono }],
        }
    }

    /// Build from arbitrary (coefficient, monomial) pairs: reduces mod p,
    /// sorts, merges duplicates, and enforces homogeneity.
    pub fn from_terms(ring: Ring, pairs: Vec<(u64, Monomial)>) -> Result<Polynomial> {
        let field = ring.field();
        let order = ring.order();
        let mut terms: Vec<Term> = pairs
            .into_iter()
            .filter_map(|(c, m)| {
                let c = field.reduce(c);
                (c != 0).then_some(Term { coeff: c, mono: m })
            })
            .collect();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = field.add(last.coeff, t.coeff);
                }
                _ => merged.push(t),
            }
        }
        merged.retain(|t| t.coeff != 0);
        let poly = Polynomial { ring, terms: merged };
        poly.check_homogeneous()?;
        Ok(poly)
    }

    fn check_homogeneous(&self) -> Result<()> {
        if let Some(first) = self.terms.first() {
            let d = first.mono.degree();
            for t in &self.terms[1..] {
                if t.mono.degree() != d {
                    return Err(EngineError::DegreeMismatch(d, t.mono.degree()));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common total degree of the terms; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.mono.degree())
    }

    pub fn lead_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        debug_assert!(self.ring.same_ring(&other.ring), "ring mismatch");
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            if a != b {
                return Err(EngineError::DegreeMismatch(a, b));
            }
        }
        Ok(self.merge_scaled(other, 1))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        debug_assert!(self.ring.same_ring(&other.ring), "ring mismatch");
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            if a != b {
                return Err(EngineError::DegreeMismatch(a, b));
            }
        }
        let minus_one = self.ring.field().neg(1);
        Ok(self.merge_scaled(other, minus_one))
    }

    /// `self + c * other` as a sorted merge; assumes degrees compatible.
    fn merge_scaled(&self, other: &Polynomial, c: u64) -> Polynomial {
        let field = self.ring.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match order.cmp(&a.mono, &b.mono) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    let coeff = field.mul(c, b.coeff);
                    if coeff != 0 {
                        out.push(Term { coeff, mono: b.mono.clone() });
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = field.add(a.coeff, field.mul(c, b.coeff));
                    if coeff != 0 {
                        out.push(Term { coeff, mono: a.mono.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        for b in &other.terms[j..] {
            let coeff = field.mul(c, b.coeff);
            if coeff != 0 {
                out.push(Term { coeff, mono: b.mono.clone() });
            }
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.ring.field().neg(1))
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        let field = self.ring.field();
        let c = field.reduce(c);
        if c == 0 {
            return Polynomial::zero(self.ring.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: field.mul(t.coeff, c), mono: t.mono.clone() })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Multiply by a single term. The monomial order is preserved under
    /// multiplication by a fixed monomial, so the term list stays sorted.
    pub fn mul_term(&self, c: u64, mono: &Monomial) -> Result<Polynomial> {
        let field = self.ring.field();
        let c = field.reduce(c);
        if c == 0 {
            return Ok(Polynomial::zero(self.ring.clone()));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(Term {
                coeff: field.mul(t.coeff, c),
                mono: t.mono.mul(mono)?,
            });
        }
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        debug_assert!(self.ring.same_ring(&other.ring), "ring mismatch");
        let mut acc = Polynomial::zero(self.ring.clone());
        for t in &other.terms {
            let part = self.mul_term(t.coeff, &t.mono)?;
            acc = acc.merge_scaled(&part, 1);
        }
        Ok(acc)
    }

    /// Scale so the lead coefficient is 1.
    pub fn make_monic(&self) -> Polynomial {
        match self.lead_term() {
            None => self.clone(),
            Some(t) if t.coeff == 1 => self.clone(),
            Some(t) => self.scale(self.ring.field().inv(t.coeff)),
        }
    }

    /// Remainder of the division algorithm: no term of the result is
    /// divisible by any divisor's lead monomial. Deterministic: always
    /// reduces the largest reducible term by the first applicable divisor
    /// in list order.
    pub fn normal_form(&self, divisors: &[Polynomial]) -> Polynomial {
        self.divide(divisors).1
    }

    /// Division with quotients: returns `(q, r)` with
    /// `self = sum q[k] * divisors[k] + r`.
    pub fn divide(&self, divisors: &[Polynomial]) -> (Vec<Polynomial>, Polynomial) {
        let field = self.ring.field();
        let mut rem = self.clone();
        let mut quotients = vec![Polynomial::zero(self.ring.clone()); divisors.len()];
        // Terms above `start` are known irreducible; reduction of term
        // `start` only introduces strictly smaller monomials.
        let mut start = 0;
        'outer: while start < rem.terms.len() {
            let t_coeff = rem.terms[start].coeff;
            let t_mono = rem.terms[start].mono.clone();
            for (k, d) in divisors.iter().enumerate() {
                let lead = match d.lead_term() {
                    Some(l) => l,
                    None => continue,
                };
                if let Some(q_mono) = lead.mono.divide_into(&t_mono) {
                    let q_coeff = field.div(t_coeff, lead.coeff);
                    let piece = d
                        .mul_term(q_coeff, &q_mono)
                        .expect("reduction does not overflow");
                    rem = rem.merge_scaled(&piece, field.neg(1));
                    let q_poly = Polynomial::from_monomial(self.ring.clone(), q_coeff, q_mono);
                    quotients[k] = quotients[k].merge_scaled(&q_poly, 1);
                    continue 'outer;
                }
            }
            start += 1;
        }
        (quotients, rem)
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.ring.var_names();
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (v, &e) in t.mono.exponents().iter().enumerate() {
                if e == 1 {
                    factors.push(names[v].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", names[v], e));
                }
            }
            if factors.is_empty() {
                write!(f, "{}", t.coeff)?;
            } else if t.coeff == 1 {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", t.coeff, factors.join("*"))?;
            }
        }
        Ok(())
    }
}
