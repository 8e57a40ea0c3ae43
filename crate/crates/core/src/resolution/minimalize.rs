//! Cancellation of constant entries in a complex of free modules.
//!
//! A nonzero constant entry at `(r, c)` of a differential splits off a
//! contractible summand `S(-t) -> S(-t)`. Column operations clear row `r`
//! outside column `c`; the basis change this induces on the neighbouring
//! differentials vanishes identically whenever the complex composes to
//! zero, which is verified here rather than assumed, so the neighbours
//! only lose a row (resp. a column). Repeating until no constants remain
//! yields a homotopy-equivalent minimal complex.

use crate::error::{EngineError, Result};
use crate::polyring::{Polynomial, Ring};

use super::{GradedResolution, ResolutionStep};

pub fn minimalize(res: &GradedResolution) -> Result<GradedResolution> {
    let ring = res.ring().clone();
    let mut f0 = res.f0_twists().to_vec();
    let mut steps: Vec<ResolutionStep> = res.steps().to_vec();

    for k in 0..steps.len() {
        while let Some((r, c)) = find_constant_entry(&steps[k]) {
            cancel_unit(&ring, &mut f0, &mut steps, k, r, c)?;
        }
    }

    while matches!(steps.last(), Some(s) if s.cols() == 0) {
        steps.pop();
    }
    for s in &steps {
        if s.cols() > 0 && s.rows() == 0 {
            return Err(EngineError::Internal(
                "minimalisation left a map into the zero module".into(),
            ));
        }
    }

    let out = GradedResolution::from_parts(ring, f0, steps, true);
    debug_assert!(!out.has_constant_entry());
    Ok(out)
}

fn find_constant_entry(step: &ResolutionStep) -> Option<(usize, usize)> {
    for r in 0..step.rows() {
        for c in 0..step.cols() {
            if step.entries[r][c].is_constant() {
                return Some((r, c));
            }
        }
    }
    None
}

fn cancel_unit(
    ring: &Ring,
    f0: &mut Vec<i64>,
    steps: &mut [ResolutionStep],
    k: usize,
    r: usize,
    c: usize,
) -> Result<()> {
    let field = ring.field();
    let u = steps[k].entries[r][c]
        .lead_term()
        .expect("constant entry is nonzero")
        .coeff;
    let uinv = field.inv(u);

    // the original row r and column c drive the neighbour bookkeeping
    let saved_row: Vec<Polynomial> = steps[k].entries[r].clone();
    let saved_col: Vec<Polynomial> = steps[k].entries.iter().map(|row| row[c].clone()).collect();

    // column operations: clear row r outside column c
    for c2 in 0..steps[k].cols() {
        if c2 == c || saved_row[c2].is_zero() {
            continue;
        }
        let q = saved_row[c2].scale(uinv);
        for r2 in 0..steps[k].rows() {
            let delta = q.mul(&steps[k].entries[r2][c])?;
            steps[k].entries[r2][c2] = steps[k].entries[r2][c2].sub(&delta)?;
        }
    }

    // successor: its row c must vanish after the induced basis change
    if k + 1 < steps.len() {
        let next_cols = steps[k + 1].cols();
        for j in 0..next_cols {
            let mut acc = steps[k + 1].entries[c][j].clone();
            for (c2, coeff) in saved_row.iter().enumerate() {
                if c2 == c || coeff.is_zero() {
                    continue;
                }
                let lambda = coeff.scale(uinv);
                acc = acc.add(&lambda.mul(&steps[k + 1].entries[c2][j])?)?;
            }
            if !acc.is_zero() {
                return Err(EngineError::Internal(
                    "cancellation against a non-exact complex".into(),
                ));
            }
        }
        steps[k + 1].entries.remove(c);
        steps[k + 1].row_twists.remove(c);
    }

    // predecessor: its column r must vanish likewise
    if k > 0 {
        let prev = &mut steps[k - 1];
        for i in 0..prev.rows() {
            let mut acc = prev.entries[i][r].clone();
            for (r2, coeff) in saved_col.iter().enumerate() {
                if r2 == r || coeff.is_zero() {
                    continue;
                }
                let mu = coeff.scale(uinv);
                acc = acc.add(&mu.mul(&prev.entries[i][r2])?)?;
            }
            if !acc.is_zero() {
                return Err(EngineError::Internal(
                    "cancellation against a non-exact complex".into(),
                ));
            }
        }
        for row in prev.entries.iter_mut() {
            row.remove(r);
        }
        prev.col_twists.remove(r);
    } else {
        f0.remove(r);
    }

    // finally drop the contractible summand from this step
    steps[k].entries.remove(r);
    for row in steps[k].entries.iter_mut() {
        row.remove(c);
    }
    steps[k].row_twists.remove(r);
    steps[k].col_twists.remove(c);
    Ok(())
}
