//! Betti tables and graded shift profiles.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{EngineError, Result};

use super::GradedResolution;

/// Graded Betti numbers: `(homological index i, internal degree j) -> beta_ij`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), u64>,
}

impl BettiTable {
    pub fn from_entries(entries: BTreeMap<(usize, i64), u64>) -> BettiTable {
        let mut t = BettiTable { entries };
        t.entries.retain(|_, v| *v > 0);
        t
    }

    pub fn entries(&self) -> &BTreeMap<(usize, i64), u64> {
        &self.entries
    }

    pub fn get(&self, i: usize, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological index with a nonzero entry.
    pub fn pd(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    pub fn max_internal_degree(&self) -> Option<i64> {
        self.entries.keys().map(|(_, j)| *j).max()
    }

    /// Total Betti number at homological index `i`.
    pub fn total_at(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((h, _), _)| *h == i)
            .map(|(_, v)| v)
            .sum()
    }
}

/// Betti numbers of a minimal resolution, counted from its twists.
pub fn betti(res: &GradedResolution) -> Result<BettiTable> {
    if !res.is_minimal() {
        return Err(EngineError::NonMinimal);
    }
    let mut entries: BTreeMap<(usize, i64), u64> = BTreeMap::new();
    for &t in res.f0_twists() {
        *entries.entry((0, t)).or_insert(0) += 1;
    }
    for (k, step) in res.steps().iter().enumerate() {
        for &t in &step.col_twists {
            *entries.entry((k + 1, t)).or_insert(0) += 1;
        }
    }
    Ok(BettiTable::from_entries(entries))
}

/// Maximal and minimal graded shifts, projective dimension, regularity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShiftProfile {
    pub max_shifts: Vec<i64>,
    pub min_shifts: Vec<i64>,
    pub pd: usize,
    pub reg: i64,
}

impl ShiftProfile {
    /// `T_i`, the largest degree at homological index `i`.
    pub fn t_max(&self, i: usize) -> Option<i64> {
        self.max_shifts.get(i).copied()
    }

    /// `t_i`, the smallest degree at homological index `i`.
    pub fn t_min(&self, i: usize) -> Option<i64> {
        self.min_shifts.get(i).copied()
    }
}

pub fn shifts(table: &BettiTable) -> Result<ShiftProfile> {
    if table.is_empty() {
        return Err(EngineError::EmptyTable);
    }
    let pd = table.pd().expect("nonempty");
    let mut max_shifts = Vec::with_capacity(pd + 1);
    let mut min_shifts = Vec::with_capacity(pd + 1);
    for i in 0..=pd {
        let degrees: Vec<i64> = table
            .entries()
            .keys()
            .filter(|(h, _)| *h == i)
            .map(|(_, j)| *j)
            .collect();
        if degrees.is_empty() {
            // a minimal resolution has no gaps in homological degree
            return Err(EngineError::Internal(format!(
                "betti table skips homological index {i}"
            )));
        }
        max_shifts.push(*degrees.iter().max().expect("nonempty"));
        min_shifts.push(*degrees.iter().min().expect("nonempty"));
    }
    let reg = max_shifts
        .iter()
        .enumerate()
        .map(|(i, t)| t - i as i64)
        .max()
        .expect("nonempty");
    Ok(ShiftProfile { max_shifts, min_shifts, pd, reg })
}
