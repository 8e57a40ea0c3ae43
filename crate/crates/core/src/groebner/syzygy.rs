//! Syzygies of a Groebner basis through the induced Schreyer order.
//!
//! For basis elements `g_i, g_j` with leads in the same position, the
//! S-pair reduction `u_ij g_i - u_ji g_j = sum_k q_k g_k` yields the
//! syzygy `u_ij e_i - u_ji e_j - sum q_k e_k`. Under the Schreyer order on
//! the new free module (basis element `e_i` tagged with the lead of `g_i`)
//! these syzygies have lead term `u_ij e_i` for `i < j`, and together they
//! form a Groebner basis of the whole syzygy module. Pairs whose lead
//! `u_ij` is divisible by a kept `u_ik` are pruned up front: the survivors
//! still generate the same lead-term module, hence stay a basis.

use std::time::Instant;

use crate::error::{EngineError, Result};
use crate::polyring::{Monomial, Polynomial};

use super::order::{ModMono, ModuleOrder};
use super::reduce::normal_form_with_trace;
use super::{FreeModule, GroebnerBasis, VectorElement};

/// Homogeneous generators of the syzygy module of `gb.elements`, living in
/// a free module whose twists are the degrees of the basis elements. The
/// result is a Groebner basis with respect to the induced Schreyer order.
pub fn syzygy_basis(gb: &GroebnerBasis) -> Result<Vec<VectorElement>> {
    Ok(syzygy_gb(gb, None)?.elements)
}

pub fn syzygy_gb(gb: &GroebnerBasis, deadline: Option<Instant>) -> Result<GroebnerBasis> {
    let ring = gb.module.ring().clone();
    let new_module = FreeModule::new(ring.clone(), gb.element_degrees());
    let new_order = ModuleOrder::schreyer(&gb.order, &gb.leads);

    // pairs with leads in a common position, pruned to a minimal lead set
    // per source index
    let mut kept_pairs: Vec<(usize, usize, Monomial)> = Vec::new();
    for i in 0..gb.len() {
        let li = &gb.leads[i];
        let mut quotients: Vec<(Monomial, usize)> = Vec::new();
        for j in (i + 1)..gb.len() {
            let lj = &gb.leads[j];
            if lj.pos != li.pos {
                continue;
            }
            // lcm / lm_i, the would-be lead of the syzygy from (i, j)
            let u = li
                .mono
                .divide_into(&li.mono.lcm(&lj.mono))
                .expect("lead divides lcm");
            quotients.push((u, j));
        }
        quotients.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then(a.1.cmp(&b.1)));
        let mut kept: Vec<(Monomial, usize)> = Vec::new();
        for (u, j) in quotients {
            if kept.iter().any(|(k, _)| k.divides(&u)) {
                continue;
            }
            kept.push((u, j));
        }
        for (u, j) in kept {
            kept_pairs.push((i, j, u));
        }
    }

    let mut syzygies = Vec::with_capacity(kept_pairs.len());
    for (i, j, u_ij) in kept_pairs {
        if let Some(d) = deadline {
            if Instant::now() > d {
                return Err(EngineError::Timeout("syzygy extraction"));
            }
        }
        let li = &gb.leads[i];
        let lj = &gb.leads[j];
        let lcm = li.mono.lcm(&lj.mono);
        let u_ji = lj.mono.divide_into(&lcm).expect("lead divides lcm");
        debug_assert_eq!(li.mono.divide_into(&lcm).as_ref(), Some(&u_ij));

        let spair = gb.elements[i]
            .term_multiple(1, &u_ij)?
            .sub(&gb.elements[j].term_multiple(1, &u_ji)?)?;
        let (rem, quotients) =
            normal_form_with_trace(&spair, &gb.elements, &gb.leads, &gb.order)?;
        if !rem.is_zero() {
            return Err(EngineError::Internal(
                "S-pair of a Groebner basis did not reduce to zero".into(),
            ));
        }

        let field = ring.field();
        let mut comps: Vec<Polynomial> = quotients.iter().map(|q| q.neg()).collect();
        comps[i] = comps[i]
            .add(&Polynomial::from_monomial(ring.clone(), 1, u_ij.clone()))
            .expect("homogeneous");
        comps[j] = comps[j]
            .add(&Polynomial::from_monomial(ring.clone(), field.neg(1), u_ji))
            .expect("homogeneous");
        let syz = VectorElement::new(new_module.clone(), comps)?;
        debug_assert_eq!(
            syz.lead_mono(&new_order),
            Some(ModMono { pos: i, mono: u_ij }),
            "Schreyer lead prediction failed"
        );
        syzygies.push(syz);
    }

    Ok(GroebnerBasis::from_parts(new_module, new_order, syzygies))
}
