//! Monomials and global monomial orders.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{EngineError, Result};

/// A power product of the ring variables, stored as an exponent vector
/// with its total degree cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

const MAX_DEGREE: u64 = 1 << 30;

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        let total: u64 = exps.iter().map(|&e| e as u64).sum();
        if total > MAX_DEGREE {
            return Err(EngineError::ExponentOverflow);
        }
        Ok(Monomial {
            degree: total as u32,
            exps,
        })
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial {
            exps: vec![0; num_vars],
            degree: 0,
        }
    }

    pub fn variable(num_vars: usize, index: usize) -> Self {
        let mut exps = vec![0; num_vars];
        exps[index] = 1;
        Monomial { exps, degree: 1 }
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b).ok_or(EngineError::ExponentOverflow)?);
        }
        Monomial::new(exps)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, defined only when `self` divides `other`.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(b, a)| b - a)
            .collect();
        Some(Monomial {
            exps,
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of the variables that occur in this monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
    }

    /// Plain lexicographic comparison, used to sort basis elements
    /// between resolution steps.
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        for (a, b) in self.exps.iter().zip(&other.exps) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

/// Global monomial order on the ring. Degrevlex is the default everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MonomialOrder {
    DegRevLex,
    DegLex,
    Lex,
}

impl MonomialOrder {
    pub fn parse(tag: &str) -> Option<MonomialOrder> {
        match tag {
            "degrevlex" => Some(MonomialOrder::DegRevLex),
            "deglex" => Some(MonomialOrder::DegLex),
            "lex" => Some(MonomialOrder::Lex),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::DegRevLex => "degrevlex",
            MonomialOrder::DegLex => "deglex",
            MonomialOrder::Lex => "lex",
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.num_vars(), b.num_vars());
        match self {
            MonomialOrder::Lex => lex(a.exponents(), b.exponents()),
            MonomialOrder::DegLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| lex(a.exponents(), b.exponents())),
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                // tie: scan from the last variable; smaller exponent wins
                for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        ord => return ord.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }

    /// Compare `am*a` against `bm*b` without materialising the products.
    pub(crate) fn cmp_products(&self, a: (&Monomial, &Monomial), b: (&Monomial, &Monomial)) -> Ordering {
        let deg_a = a.0.degree() + a.1.degree();
        let deg_b = b.0.degree() + b.1.degree();
        let n = a.0.num_vars();
        let exp_a = |v: usize| a.0.exponents()[v] + a.1.exponents()[v];
        let exp_b = |v: usize| b.0.exponents()[v] + b.1.exponents()[v];
        match self {
            MonomialOrder::Lex => {
                for v in 0..n {
                    match exp_a(v).cmp(&exp_b(v)) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::DegLex => deg_a.cmp(&deg_b).then_with(|| {
                for v in 0..n {
                    match exp_a(v).cmp(&exp_b(v)) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }),
            MonomialOrder::DegRevLex => deg_a.cmp(&deg_b).then_with(|| {
                for v in (0..n).rev() {
                    match exp_a(v).cmp(&exp_b(v)) {
                        Ordering::Equal => continue,
                        ord => return ord.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// All monomials of the given total degree, in descending lex order.
pub fn monomials_of_degree(num_vars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; num_vars];
    fill(&mut out, &mut exps, 0, degree);
    out.reverse();
    out
}

fn fill(out: &mut Vec<Monomial>, exps: &mut Vec<u32>, var: usize, remaining: u32) {
    if var + 1 == exps.len() {
        exps[var] = remaining;
        out.push(Monomial::new(exps.clone()).expect("small degree"));
        exps[var] = 0;
        return;
    }
    for e in 0..=remaining {
        exps[var] = e;
        fill(out, exps, var + 1, remaining - e);
    }
    exps[var] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec()).unwrap()
    }

    #[test]
    fn degrevlex_three_vars() {
        let o = MonomialOrder::DegRevLex;
        // x^2 z < x y^2 in degrevlex (x > y > z)
        assert_eq!(o.cmp(&m(&[2, 0, 1]), &m(&[1, 2, 0])), Ordering::Less);
        // full degree-3 chain: x^3 > x^2 y > x y^2 > y^3 > x^2 z > ...
        let chain = [
            m(&[3, 0, 0]),
            m(&[2, 1, 0]),
            m(&[1, 2, 0]),
            m(&[0, 3, 0]),
            m(&[2, 0, 1]),
            m(&[1, 1, 1]),
            m(&[0, 2, 1]),
            m(&[1, 0, 2]),
            m(&[0, 1, 2]),
            m(&[0, 0, 3]),
        ];
        for w in chain.windows(2) {
            assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Greater);
        }
    }

    #[test]
    fn lcm_divide_roundtrip() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 3, 0]);
        let l = a.lcm(&b);
        assert_eq!(l, m(&[2, 3, 0]));
        assert_eq!(a.divide_into(&l).unwrap(), m(&[0, 2, 0]));
        assert_eq!(b.divide_into(&l).unwrap(), m(&[1, 0, 0]));
        assert!(a.divide_into(&b).is_none());
    }

    #[test]
    fn degree_enumeration_counts() {
        // C(d + n - 1, n - 1) monomials of degree d in n variables
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        let ms = monomials_of_degree(2, 3);
        assert_eq!(ms.len(), 4);
        // descending lex: x^3, x^2 y, x y^2, y^3
        assert_eq!(ms[0], m(&[3, 0]));
        assert_eq!(ms[3], m(&[0, 3]));
    }

    #[test]
    fn product_comparison_agrees_with_materialised_product() {
        let o = MonomialOrder::DegRevLex;
        let ms = monomials_of_degree(3, 3);
        for a in &ms {
            for b in &ms {
                for c in &ms {
                    for d in &ms {
                        let lhs = o.cmp_products((a, b), (c, d));
                        let rhs = o.cmp(&a.mul(b).unwrap(), &c.mul(d).unwrap());
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}
