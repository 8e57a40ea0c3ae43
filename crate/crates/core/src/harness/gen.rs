//! Seeded random instance generators.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::invariants::dim_lead_term;
use crate::polyring::{monomials_of_degree, Monomial, Polynomial, Ring};

/// Derive the per-instance RNG seed from the batch seed. Fixed mixing so
/// reports are reproducible across runs.
pub fn instance_seed(batch_seed: u64, index: usize) -> u64 {
    batch_seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// A minimal (divisibility-reduced) random monomial generating set.
/// `num_gens` draws are attempted; redundant draws collapse.
pub fn gen_monomial_ideal(
    ring: &Ring,
    max_deg: u32,
    num_gens: usize,
    seed: u64,
) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = ring.num_vars();
    let mut monos: Vec<Monomial> = Vec::new();
    for _ in 0..num_gens {
        let degree = rng.gen_range(1..=max_deg.max(1));
        let mut exps = vec![0u32; n];
        for _ in 0..degree {
            exps[rng.gen_range(0..n as u64) as usize] += 1;
        }
        monos.push(Monomial::new(exps).expect("small degree"));
    }
    // divisibility reduction: keep a monomial only if no other kept or
    // pending monomial properly divides it, and drop duplicates
    let mut minimal: Vec<Monomial> = Vec::new();
    for m in monos {
        if minimal.iter().any(|k| k.divides(&m)) {
            continue;
        }
        minimal.retain(|k| !m.divides(k));
        minimal.push(m);
    }
    let order = ring.order();
    minimal.sort_by(|a, b| order.cmp(b, a));
    minimal
        .into_iter()
        .map(|m| Polynomial::from_monomial(ring.clone(), 1, m))
        .collect()
}

pub const GENERIC_FORM_RETRIES: usize = 16;

/// Dense random forms of the given degrees, redrawn until they form a
/// complete intersection (codimension equal to their number); `None`
/// after the retry budget.
pub fn gen_generic_forms(
    ring: &Ring,
    degrees: &[u32],
    seed: u64,
) -> Result<Option<Vec<Polynomial>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = ring.num_vars();
    let p = ring.characteristic();
    if degrees.is_empty() || degrees.len() > n {
        return Ok(None);
    }
    for _ in 0..GENERIC_FORM_RETRIES {
        let mut forms = Vec::with_capacity(degrees.len());
        for &d in degrees {
            let mut pairs = Vec::new();
            for m in monomials_of_degree(n, d) {
                pairs.push((rng.gen_range(0..p), m));
            }
            forms.push(Polynomial::from_terms(ring.clone(), pairs)?);
        }
        if forms.iter().any(|f| f.is_zero()) {
            continue;
        }
        let dim = dim_lead_term(ring, &forms)?;
        if dim >= 0 && n as i64 - dim == degrees.len() as i64 {
            return Ok(Some(forms));
        }
    }
    Ok(None)
}
