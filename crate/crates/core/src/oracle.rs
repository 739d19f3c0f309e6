//! Brute-force ground truth by exhaustive enumeration.
//!
//! Nothing here goes through [`recover_ranks`](crate::inverse::recover_ranks)
//! to decide an answer: preimages are found by sweeping every path and
//! comparing outputs.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::inverse::invert_sweep;
use crate::path::{enumerate_paths, labels_to_string, DyckPath, Label, Level};
use crate::sweep::{check_theorem_3_2, sweep_map, ScanDirection};

/// Default enumeration limit for exhaustive checks (43263 paths at n = 8).
pub const DEFAULT_MAX_N: usize = 8;

/// All paths whose right-to-left sweep word is `sigma`.
pub fn brute_force_invert(sigma: &[Label], n: usize) -> BTreeSet<DyckPath> {
    if sigma.len() != 3 * n {
        return BTreeSet::new();
    }
    enumerate_paths(n)
        .filter(|p| sweep_map(p, ScanDirection::RightToLeft).sigma == sigma)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FailureKind {
    /// Another path shares this path's sweep word.
    NotInjective,
    /// Inverting this path's sweep word failed or gave another path.
    RoundTrip,
    /// The sweep word breaks the level-inheritance property for `S`.
    Thm32,
    /// Path or sweep maximum level lies outside `[2n, 2n^2]`.
    Prop31,
}

impl fmt::Display for FailureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailureKind::NotInjective => "NOT_INJECTIVE",
            FailureKind::RoundTrip => "ROUND_TRIP",
            FailureKind::Thm32 => "THM32",
            FailureKind::Prop31 => "PROP31",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub path: String,
    pub kind: FailureKind,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub path_count: usize,
    pub injective: bool,
    pub roundtrip_ok: bool,
    pub thm32_ok: bool,
    pub prop31_ok: bool,
    pub counterexamples: Vec<Counterexample>,
}

impl VerifyReport {
    pub fn all_ok(&self) -> bool {
        self.injective && self.roundtrip_ok && self.thm32_ok && self.prop31_ok
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} paths={} injective={} roundtrip={} thm32={} prop31={}",
            self.n,
            self.path_count,
            self.injective,
            self.roundtrip_ok,
            self.thm32_ok,
            self.prop31_ok
        )
    }
}

fn level_bounds(n: usize) -> (Level, Level) {
    let n = n as Level;
    (2 * n, 2 * n * n)
}

/// Exhaustively checks the right-to-left sweep for one `n`.
pub fn verify_bijectivity(n: usize) -> VerifyReport {
    let (lo, hi) = level_bounds(n);
    let mut report = VerifyReport {
        n,
        path_count: 0,
        injective: true,
        roundtrip_ok: true,
        thm32_ok: true,
        prop31_ok: true,
        counterexamples: Vec::new(),
    };
    let mut seen: HashMap<Vec<Label>, DyckPath> = HashMap::new();

    for path in enumerate_paths(n) {
        report.path_count += 1;
        let swept = sweep_map(&path, ScanDirection::RightToLeft);
        let mut fail = |kind, detail: String| {
            report.counterexamples.push(Counterexample {
                path: path.to_string(),
                kind,
                detail,
            })
        };

        let path_max = path.max_level();
        let sweep_max = swept.tau.max().unwrap_or(0);
        if !(lo..=hi).contains(&path_max) || !(lo..=hi).contains(&sweep_max) {
            report.prop31_ok = false;
            fail(
                FailureKind::Prop31,
                format!("max level {path_max}, max tau {sweep_max}, bounds [{lo}, {hi}]"),
            );
        }

        let verdict = check_theorem_3_2(&swept);
        if !verdict.passed() {
            report.thm32_ok = false;
            fail(
                FailureKind::Thm32,
                format!("violations at {:?}", verdict.violations),
            );
        }

        match invert_sweep(&swept.sigma) {
            Ok(back) if back == path => {}
            Ok(back) => {
                report.roundtrip_ok = false;
                fail(FailureKind::RoundTrip, format!("inverted to {back}"));
            }
            Err(err) => {
                report.roundtrip_ok = false;
                fail(FailureKind::RoundTrip, format!("{}: {err}", err.code()));
            }
        }

        if let Some(other) = seen.get(&swept.sigma) {
            report.injective = false;
            fail(
                FailureKind::NotInjective,
                format!("shares sigma {} with {other}", swept.sigma_string()),
            );
        } else {
            seen.insert(swept.sigma.clone(), path.clone());
        }
    }
    report
}

/// A sweep word with more than one left-to-right preimage.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Collision {
    pub sigma: String,
    pub preimages: Vec<String>,
}

impl Collision {
    pub fn count(&self) -> usize {
        self.preimages.len()
    }
}

/// Groups all paths by their left-to-right sweep word and keeps groups of
/// size at least two, ordered by sigma.
pub fn l2r_collision_census(n: usize) -> Vec<Collision> {
    let mut groups: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for path in enumerate_paths(n) {
        let sigma = labels_to_string(&sweep_map(&path, ScanDirection::LeftToRight).sigma);
        groups.entry(sigma).or_default().push(path.to_string());
    }
    groups
        .into_iter()
        .filter(|(_, preimages)| preimages.len() >= 2)
        .map(|(sigma, preimages)| Collision { sigma, preimages })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::parse_labels;

    #[test]
    fn brute_force_preimages() {
        let found = brute_force_invert(&parse_labels("SWSSWWWWW").unwrap(), 3);
        let words: Vec<_> = found.iter().map(|p| p.to_string()).collect();
        assert_eq!(words, ["NENEENEEE"]);
        assert_eq!(
            brute_force_invert(&parse_labels("SWW").unwrap(), 1).len(),
            1
        );
        assert!(brute_force_invert(&parse_labels("WSSWWW").unwrap(), 2).is_empty());
        assert!(brute_force_invert(&parse_labels("SWW").unwrap(), 2).is_empty());
    }

    #[test]
    fn small_reports() {
        let r1 = verify_bijectivity(1);
        assert_eq!(r1.path_count, 1);
        assert!(r1.all_ok() && r1.counterexamples.is_empty());
        let r3 = verify_bijectivity(3);
        assert_eq!(r3.path_count, 12);
        assert!(r3.all_ok());
        assert_eq!(
            verify_bijectivity(2).to_string(),
            "n=2 paths=3 injective=true roundtrip=true thm32=true prop31=true"
        );
    }

    #[test]
    fn census_small() {
        assert!(l2r_collision_census(1).is_empty());
        let census = l2r_collision_census(2);
        let hit = census.iter().find(|c| c.sigma == "SSWWWW").unwrap();
        assert!(hit.count() >= 2);
        assert!(hit.preimages.contains(&"NEENEE".to_string()));
        assert!(hit.preimages.contains(&"NENEEE".to_string()));
        assert!(l2r_collision_census(3)
            .iter()
            .any(|c| c.sigma == "SSSWWWWWW"));
    }
}
