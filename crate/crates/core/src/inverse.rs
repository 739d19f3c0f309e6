//! Inverting the right-to-left sweep map.
//!
//! Inversion runs in two passes. [`recover_ranks`] rebuilds the rank
//! sequence `tau` from `sigma` alone. [`reconstruct_path`] then walks the
//! original path from level 0: at each level it consumes the right-most
//! unused entry of `tau` at that level, and that entry's letter decides the
//! next step.
//!
//! Rank recovery uses a counting identity. Every lattice point after the
//! first is entered either by an east step starting `n` higher or by a north
//! step starting `2n` lower. So the number of `W` labels at level `L + n` is
//! the number of labels at level `L` minus the number of `S` labels at level
//! `L - 2n`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::path::{infer_n, DyckPath, Label, Level, PathError, Step};
use crate::sweep::RankSeq;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InverseError {
    #[error("sigma is not a Dyck word: {0}")]
    InvalidSigma(PathError),
    #[error("level difference is zero at empty W position {position}")]
    StuckZeroDifference { position: usize },
    #[error("block fill starting at position {position} needs more W entries than remain")]
    BlockOverrun { position: usize },
    #[error("sigma has length {sigma} but tau has length {tau}")]
    LengthMismatch { sigma: usize, tau: usize },
    #[error("no unused entry at level {level} for step {step}")]
    NoEntryAtLevel { level: Level, step: usize },
    #[error("reconstructed word is not a Dyck path: {0}")]
    ResultNotDyck(PathError),
}

impl InverseError {
    pub fn code(&self) -> &'static str {
        match self {
            InverseError::InvalidSigma(_) => "INVALID_SIGMA",
            InverseError::StuckZeroDifference { .. } => "STUCK_ZERO_DIFFERENCE",
            InverseError::BlockOverrun { .. } => "BLOCK_OVERRUN",
            InverseError::LengthMismatch { .. } => "LENGTH_MISMATCH",
            InverseError::NoEntryAtLevel { .. } => "NO_ENTRY_AT_LEVEL",
            InverseError::ResultNotDyck(_) => "RESULT_NOT_DYCK",
        }
    }

    /// True for errors caused by the caller's input rather than by a broken
    /// invariant of the algorithm.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            InverseError::InvalidSigma(_) | InverseError::LengthMismatch { .. }
        )
    }
}

/// Checks that `sigma`, read as a step word, is a Dyck path; returns `n`.
pub fn validate_sigma(sigma: &[Label]) -> Result<usize, InverseError> {
    let n = infer_n(sigma.len()).map_err(InverseError::InvalidSigma)?;
    DyckPath::from_labels(n, sigma).map_err(InverseError::InvalidSigma)?;
    Ok(n)
}

/// Partially filled rank sequence. A slot is written at most once.
struct RankSlots {
    slots: Vec<Option<Level>>,
}

impl RankSlots {
    fn new(len: usize) -> Self {
        RankSlots {
            slots: vec![None; len],
        }
    }

    fn get(&self, i: usize) -> Option<Level> {
        self.slots[i]
    }

    fn fill(&mut self, i: usize, level: Level) {
        debug_assert!(self.slots[i].is_none(), "slot {i} written twice");
        self.slots[i] = Some(level);
    }

    fn count_level(&self, level: Level) -> usize {
        self.slots.iter().filter(|&&s| s == Some(level)).count()
    }

    fn count_level_with(&self, level: Level, sigma: &[Label], letter: Label) -> usize {
        self.slots
            .iter()
            .zip(sigma)
            .filter(|&(&s, &l)| s == Some(level) && l == letter)
            .count()
    }

    fn into_ranks(self) -> RankSeq {
        RankSeq::new(
            self.slots
                .into_iter()
                .map(|s| s.expect("every slot filled after recovery"))
                .collect(),
        )
    }
}

/// Recovers the rank sequence of a sweep word.
///
/// Walks `sigma` left to right over empty slots. An `S` copies the previous
/// level. A `W` after level `L` computes `x = #{L} - #{S at L - 2n}` over the
/// slots filled so far; the next `x` unfilled `W`s get level `L + n`, or if
/// `x < 0` the next `|x|` get level `L`. Interleaved `S` slots are left for
/// the cursor to fill.
pub fn recover_ranks(sigma: &[Label]) -> Result<RankSeq, InverseError> {
    let n = validate_sigma(sigma)?;
    let step = n as Level;
    let mut slots = RankSlots::new(sigma.len());
    slots.fill(0, 0);

    for i in 1..sigma.len() {
        if slots.get(i).is_some() {
            continue;
        }
        let prev = slots.get(i - 1).expect("filled slots form a prefix");
        match sigma[i] {
            Label::S => slots.fill(i, prev),
            Label::W => {
                let at_prev = slots.count_level(prev) as i64;
                let s_below = slots.count_level_with(prev - 2 * step, sigma, Label::S) as i64;
                let diff = at_prev - s_below;
                let level = match diff {
                    0 => return Err(InverseError::StuckZeroDifference { position: i + 1 }),
                    d if d > 0 => prev + step,
                    _ => prev,
                };
                let mut remaining = diff.unsigned_abs();
                let mut j = i;
                while remaining > 0 {
                    if j >= sigma.len() {
                        return Err(InverseError::BlockOverrun { position: i + 1 });
                    }
                    if sigma[j] == Label::W && slots.get(j).is_none() {
                        slots.fill(j, level);
                        remaining -= 1;
                    }
                    j += 1;
                }
            }
        }
    }
    Ok(slots.into_ranks())
}

/// Rebuilds a path from an aligned `(sigma, tau)` pair by right-most
/// consumption at each level.
pub fn reconstruct_path(sigma: &[Label], tau: &[Level]) -> Result<DyckPath, InverseError> {
    if sigma.len() != tau.len() {
        return Err(InverseError::LengthMismatch {
            sigma: sigma.len(),
            tau: tau.len(),
        });
    }
    let n = infer_n(sigma.len()).map_err(InverseError::InvalidSigma)?;
    let (up, down) = (2 * n as Level, n as Level);

    // Positions per level, ascending; popping yields the right-most unused.
    let mut by_level: BTreeMap<Level, Vec<usize>> = BTreeMap::new();
    for (p, &level) in tau.iter().enumerate() {
        by_level.entry(level).or_default().push(p);
    }

    let mut level: Level = 0;
    let mut steps = Vec::with_capacity(sigma.len());
    for k in 0..sigma.len() {
        let p = by_level
            .get_mut(&level)
            .and_then(Vec::pop)
            .ok_or(InverseError::NoEntryAtLevel { level, step: k + 1 })?;
        match sigma[p] {
            Label::S => {
                steps.push(Step::North);
                level += up;
            }
            Label::W => {
                steps.push(Step::East);
                level -= down;
            }
        }
    }
    DyckPath::new(n, steps).map_err(InverseError::ResultNotDyck)
}

/// Inverts the right-to-left sweep map.
pub fn invert_sweep(sigma: &[Label]) -> Result<DyckPath, InverseError> {
    let tau = recover_ranks(sigma)?;
    reconstruct_path(sigma, &tau)
}
