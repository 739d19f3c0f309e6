//! The forward sweep map.
//!
//! The sweep sorts a path's west-south labels by level. Labels at the same
//! level are taken in scan order: right-to-left for the canonical map,
//! left-to-right for the variant that fails to be injective.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::path::{labels_to_string, DyckPath, Label, Level, PathError, Step};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanDirection {
    #[default]
    RightToLeft,
    LeftToRight,
}

/// A nondecreasing sequence of levels aligned with a sweep word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RankSeq(Vec<Level>);

impl RankSeq {
    pub fn new(levels: Vec<Level>) -> Self {
        RankSeq(levels)
    }

    pub fn as_slice(&self) -> &[Level] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Level> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> Option<Level> {
        self.0.last().copied()
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }
}

impl std::ops::Deref for RankSeq {
    type Target = [Level];

    fn deref(&self) -> &[Level] {
        &self.0
    }
}

impl From<Vec<Level>> for RankSeq {
    fn from(levels: Vec<Level>) -> Self {
        RankSeq(levels)
    }
}

/// Comma-separated, no spaces.
impl fmt::Display for RankSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, level) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{level}")?;
        }
        Ok(())
    }
}

/// Output of the sweep map: the letter word `sigma` and its rank sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SweptWord {
    pub n: usize,
    pub sigma: Vec<Label>,
    pub tau: RankSeq,
}

impl SweptWord {
    pub fn sigma_string(&self) -> String {
        labels_to_string(&self.sigma)
    }

    /// Reads `sigma` as a step word (`S -> N`, `W -> E`).
    pub fn sigma_as_path(&self) -> Result<DyckPath, PathError> {
        DyckPath::from_labels(self.n, &self.sigma)
    }
}

pub fn sweep_map(path: &DyckPath, direction: ScanDirection) -> SweptWord {
    let mut labeled: Vec<(usize, _)> = path.step_labels().into_iter().enumerate().collect();
    match direction {
        ScanDirection::RightToLeft => {
            labeled.sort_by(|(i, a), (j, b)| a.level.cmp(&b.level).then(j.cmp(i)))
        }
        ScanDirection::LeftToRight => {
            labeled.sort_by(|(i, a), (j, b)| a.level.cmp(&b.level).then(i.cmp(j)))
        }
    }
    let (sigma, tau) = labeled
        .into_iter()
        .map(|(_, l)| (l.letter, l.level))
        .unzip();
    SweptWord {
        n: path.n(),
        sigma,
        tau: RankSeq(tau),
    }
}

/// Result of checking that an `S` directly after a `W` (and a second `S`
/// right after it) shares the `W`'s level.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Thm32Verdict {
    /// 1-based positions of offending `S` entries.
    pub violations: Vec<usize>,
}

impl Thm32Verdict {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the "S inherits the preceding W's level" property on an aligned
/// `(sigma, tau)` pair.
///
/// For each `W` at `i` followed by `S` at `i+1`, requires `tau[i+1] == tau[i]`;
/// if `i+2` is also `S`, requires `tau[i+2] == tau[i]` too.
pub fn check_s_inherits_level(sigma: &[Label], tau: &[Level]) -> Thm32Verdict {
    let mut violations = Vec::new();
    let len = sigma.len().min(tau.len());
    for i in 0..len {
        if sigma[i] != Label::W || i + 1 >= len || sigma[i + 1] != Label::S {
            continue;
        }
        if tau[i + 1] != tau[i] {
            violations.push(i + 2);
        }
        if i + 2 < len && sigma[i + 2] == Label::S && tau[i + 2] != tau[i] {
            violations.push(i + 3);
        }
    }
    Thm32Verdict { violations }
}

pub fn check_theorem_3_2(word: &SweptWord) -> Thm32Verdict {
    check_s_inherits_level(&word.sigma, &word.tau)
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("collision witnesses need n >= 2, got {0}")]
    NTooSmall(usize),
}

impl WitnessError {
    pub fn code(&self) -> &'static str {
        match self {
            WitnessError::NTooSmall(_) => "N_TOO_SMALL",
        }
    }
}

/// `(N E E)^n`: every north step starts at level 0.
pub fn collision_witness_a(n: usize) -> Result<DyckPath, WitnessError> {
    if n < 2 {
        return Err(WitnessError::NTooSmall(n));
    }
    Ok(DyckPath::sawtooth(n).expect("sawtooth is a valid path for n >= 1"))
}

/// `N E (N E E)^(n-1) E`: after the first, every north step starts at level `n`.
pub fn collision_witness_b(n: usize) -> Result<DyckPath, WitnessError> {
    if n < 2 {
        return Err(WitnessError::NTooSmall(n));
    }
    let mut steps = vec![Step::North, Step::East];
    for _ in 1..n {
        steps.extend([Step::North, Step::East, Step::East]);
    }
    steps.push(Step::East);
    Ok(DyckPath::new(n, steps).expect("witness b is a valid path for n >= 2"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::parse_labels;

    fn sweep_str(word: &str, direction: ScanDirection) -> (String, Vec<Level>) {
        let path: DyckPath = word.parse().unwrap();
        let swept = sweep_map(&path, direction);
        (swept.sigma_string(), swept.tau.into_inner())
    }

    #[test]
    fn worked_example() {
        let (sigma, tau) = sweep_str("NENEENEEE", ScanDirection::RightToLeft);
        assert_eq!(sigma, "SWSSWWWWW");
        assert_eq!(tau, [0, 3, 3, 3, 6, 6, 6, 9, 9]);
    }

    #[test]
    fn unique_small_path() {
        let (sigma, tau) = sweep_str("NEE", ScanDirection::RightToLeft);
        assert_eq!(sigma, "SWW");
        assert_eq!(tau, [0, 1, 2]);
    }

    #[test]
    fn left_to_right_collides_at_n2() {
        let a = sweep_str("NEENEE", ScanDirection::LeftToRight).0;
        let b = sweep_str("NENEEE", ScanDirection::LeftToRight).0;
        assert_eq!(a, "SSWWWW");
        assert_eq!(b, "SSWWWW");
        // The canonical direction separates them.
        assert_ne!(
            sweep_str("NEENEE", ScanDirection::RightToLeft).0,
            sweep_str("NENEEE", ScanDirection::RightToLeft).0
        );
    }

    #[test]
    fn rank_seq_display() {
        assert_eq!(RankSeq::new(vec![0, 3, 3]).to_string(), "0,3,3");
        assert_eq!(RankSeq::default().to_string(), "");
    }

    #[test]
    fn s_inherits_level_checker() {
        let sigma = parse_labels("SWSSWWWWW").unwrap();
        assert!(check_s_inherits_level(&sigma, &[0, 3, 3, 3, 6, 6, 6, 9, 9]).passed());
        let sigma = parse_labels("SWW").unwrap();
        assert!(check_s_inherits_level(&sigma, &[0, 1, 2]).passed());

        let sigma = parse_labels("SWSW").unwrap();
        let verdict = check_s_inherits_level(&sigma, &[0, 2, 4, 4]);
        assert_eq!(verdict.violations, [3]);
        let sigma = parse_labels("SWSSWW").unwrap();
        let verdict = check_s_inherits_level(&sigma, &[0, 2, 2, 4, 4, 4]);
        assert_eq!(verdict.violations, [4]);
    }

    #[test]
    fn witnesses() {
        assert_eq!(collision_witness_a(2).unwrap().to_string(), "NEENEE");
        assert_eq!(collision_witness_b(2).unwrap().to_string(), "NENEEE");
        assert_eq!(collision_witness_a(3).unwrap().to_string(), "NEENEENEE");
        assert_eq!(collision_witness_b(3).unwrap().to_string(), "NENEENEEE");
        assert_eq!(collision_witness_a(1), Err(WitnessError::NTooSmall(1)));
        assert_eq!(collision_witness_b(1).unwrap_err().code(), "N_TOO_SMALL");
        for n in 2..=6 {
            let expected: String = "S".repeat(n) + &"W".repeat(2 * n);
            let a = collision_witness_a(n).unwrap();
            let b = collision_witness_b(n).unwrap();
            assert_ne!(a, b);
            assert_eq!(
                sweep_map(&a, ScanDirection::LeftToRight).sigma_string(),
                expected
            );
            assert_eq!(
                sweep_map(&b, ScanDirection::LeftToRight).sigma_string(),
                expected
            );
        }
    }
}
