//! Hilbert function cross-check.
//!
//! The Hilbert function of `M` is computed two independent ways: counting
//! standard monomials against the lead-term module of a relation Groebner
//! basis, and as the alternating sum of Betti numbers weighted by the
//! Hilbert function of the ring. Agreement degree by degree is a strong
//! consistency check on a computed resolution.

use crate::error::Result;

use super::oracle::standard_monomial_basis;
use super::{BettiTable, ModulePresentation};

/// Dimension over `F_p` of the degree-`d` piece of the presented module.
pub fn graded_dimension(pres: &ModulePresentation, d: i64) -> Result<u64> {
    let gb = pres.relation_gb(None)?;
    Ok(standard_monomial_basis(&gb, pres.target_twists(), d).len() as u64)
}

/// `C(d + n - 1, n - 1)`: the Hilbert function of the ring itself.
fn ring_hilbert(n: usize, d: i64) -> i64 {
    if d < 0 {
        return 0;
    }
    let mut acc: i64 = 1;
    for k in 1..n {
        acc = acc * (d + k as i64) / k as i64;
    }
    acc
}

/// Hilbert function value implied by a Betti table:
/// `sum_{i,j} (-1)^i beta_ij * H_S(d - j)`.
pub fn hilbert_from_betti(table: &BettiTable, num_vars: usize, d: i64) -> i64 {
    let mut acc: i64 = 0;
    for (&(i, j), &b) in table.entries() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        acc += sign * b as i64 * ring_hilbert(num_vars, d - j);
    }
    acc
}

/// Verify the alternating-sum identity for all degrees up to `cap`.
pub fn alternating_sum_check(
    pres: &ModulePresentation,
    table: &BettiTable,
    cap: i64,
) -> Result<bool> {
    let gb = pres.relation_gb(None)?;
    let n = pres.ring().num_vars();
    let lo = pres.target_twists().iter().copied().min().unwrap_or(0);
    for d in lo..=cap {
        let direct = standard_monomial_basis(&gb, pres.target_twists(), d).len() as i64;
        if direct != hilbert_from_betti(table, n, d) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_hilbert_matches_binomials() {
        // n = 3: C(d + 2, 2)
        assert_eq!(ring_hilbert(3, 0), 1);
        assert_eq!(ring_hilbert(3, 1), 3);
        assert_eq!(ring_hilbert(3, 4), 15);
        assert_eq!(ring_hilbert(1, 5), 1);
        assert_eq!(ring_hilbert(2, 5), 6);
        assert_eq!(ring_hilbert(4, 3), 20);
        assert_eq!(ring_hilbert(3, -2), 0);
    }
}
