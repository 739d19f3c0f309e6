//! (2n,n)-Dyck paths: validation, levels, west-south labels and enumeration.
//!
//! A path is a word over `{N, E}` with `n` north steps and `2n` east steps.
//! A north step raises the level by `2n`, an east step lowers it by `n`, and
//! no prefix may drop below level 0. Levels are kept as raw integers
//! (multiples of `n`), never normalized.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A level on the lattice, `2n*y - n*x`.
pub type Level = i64;

/// A single path step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    North,
    East,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::North => 'N',
            Step::East => 'E',
        }
    }

    /// The label this step receives under the west-south convention.
    pub fn label(self) -> Label {
        match self {
            Step::North => Label::S,
            Step::East => Label::W,
        }
    }
}

/// A sweep-word letter: `S` marks the south end of a north step, `W` the
/// west end of an east step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    S,
    W,
}

impl Label {
    pub fn as_char(self) -> char {
        match self {
            Label::S => 'S',
            Label::W => 'W',
        }
    }

    /// Reads the letter back as a step (`S -> N`, `W -> E`).
    pub fn step(self) -> Step {
        match self {
            Label::S => Step::North,
            Label::W => Step::East,
        }
    }
}

/// Errors raised while validating a path word.
///
/// Positions are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("n must be at least 1")]
    ZeroN,
    #[error("unexpected letter {letter:?} at position {position}, expected one of {expected}")]
    InvalidLetter {
        letter: char,
        position: usize,
        expected: &'static str,
    },
    #[error("word has length {found}, expected 3n = {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("word has {north} north and {east} east steps, expected {n} and {}", 2 * n)]
    WrongCounts { n: usize, north: usize, east: usize },
    #[error("prefix level drops below zero at position {position}")]
    BelowZero { position: usize },
}

impl PathError {
    /// Stable machine-readable token for this error.
    pub fn code(&self) -> &'static str {
        match self {
            PathError::ZeroN => "ZERO_N",
            PathError::InvalidLetter { .. } => "INVALID_LETTER",
            PathError::WrongLength { .. } => "WRONG_LENGTH",
            PathError::WrongCounts { .. } => "WRONG_COUNTS",
            PathError::BelowZero { .. } => "BELOW_ZERO",
        }
    }
}

/// Parses an ASCII word over `{N, E}`.
pub fn parse_steps(word: &str) -> Result<Vec<Step>, PathError> {
    word.chars()
        .enumerate()
        .map(|(i, c)| match c {
            'N' => Ok(Step::North),
            'E' => Ok(Step::East),
            letter => Err(PathError::InvalidLetter {
                letter,
                position: i + 1,
                expected: "{N,E}",
            }),
        })
        .collect()
}

/// Parses an ASCII word over `{S, W}`.
pub fn parse_labels(word: &str) -> Result<Vec<Label>, PathError> {
    word.chars()
        .enumerate()
        .map(|(i, c)| match c {
            'S' => Ok(Label::S),
            'W' => Ok(Label::W),
            letter => Err(PathError::InvalidLetter {
                letter,
                position: i + 1,
                expected: "{S,W}",
            }),
        })
        .collect()
}

pub fn labels_to_string(labels: &[Label]) -> String {
    labels.iter().map(|l| l.as_char()).collect()
}

/// A step together with the level of its starting point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LabeledStep {
    pub letter: Label,
    pub level: Level,
}

/// A validated (2n,n)-Dyck path.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    n: usize,
    steps: Vec<Step>,
}

impl DyckPath {
    /// Validates `steps` as a (2n,n)-Dyck path.
    ///
    /// Checks run in order: length, letter counts, prefix levels. The first
    /// violation is reported.
    pub fn new(n: usize, steps: Vec<Step>) -> Result<Self, PathError> {
        if n == 0 {
            return Err(PathError::ZeroN);
        }
        if steps.len() != 3 * n {
            return Err(PathError::WrongLength {
                expected: 3 * n,
                found: steps.len(),
            });
        }
        let north = steps.iter().filter(|&&s| s == Step::North).count();
        let east = steps.len() - north;
        if north != n || east != 2 * n {
            return Err(PathError::WrongCounts { n, north, east });
        }
        let (up, down) = (2 * n as Level, n as Level);
        let mut level: Level = 0;
        for (i, step) in steps.iter().enumerate() {
            level += match step {
                Step::North => up,
                Step::East => -down,
            };
            if level < 0 {
                return Err(PathError::BelowZero { position: i + 1 });
            }
        }
        Ok(DyckPath { n, steps })
    }

    /// Parses and validates a `{N, E}` word for the given `n`.
    pub fn parse(n: usize, word: &str) -> Result<Self, PathError> {
        DyckPath::new(n, parse_steps(word)?)
    }

    /// Builds a path from a `{S, W}` word, reading each letter as its step.
    pub fn from_labels(n: usize, labels: &[Label]) -> Result<Self, PathError> {
        DyckPath::new(n, labels.iter().map(|l| l.step()).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Levels of all `3n + 1` lattice points visited, starting and ending at 0.
    pub fn level_profile(&self) -> Vec<Level> {
        let (up, down) = (2 * self.n as Level, self.n as Level);
        let mut profile = Vec::with_capacity(self.steps.len() + 1);
        let mut level = 0;
        profile.push(level);
        for step in &self.steps {
            level += match step {
                Step::North => up,
                Step::East => -down,
            };
            profile.push(level);
        }
        profile
    }

    pub fn max_level(&self) -> Level {
        self.level_profile().into_iter().max().unwrap_or(0)
    }

    /// West-south labels in path order. Each step carries the level of its
    /// starting point.
    pub fn step_labels(&self) -> Vec<LabeledStep> {
        self.steps
            .iter()
            .zip(self.level_profile())
            .map(|(step, level)| LabeledStep {
                letter: step.label(),
                level,
            })
            .collect()
    }

    /// `(N E E)^n`, the path that never rises above level `2n`.
    pub fn sawtooth(n: usize) -> Result<Self, PathError> {
        let steps = [Step::North, Step::East, Step::East]
            .iter()
            .copied()
            .cycle()
            .take(3 * n)
            .collect();
        DyckPath::new(n, steps)
    }

    /// `N^n E^(2n)`, the path that reaches level `2n^2`.
    pub fn staircase(n: usize) -> Result<Self, PathError> {
        let mut steps = vec![Step::North; n];
        steps.resize(3 * n, Step::East);
        DyckPath::new(n, steps)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            write!(f, "{}", step.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = PathError;

    /// Parses a `{N, E}` word, inferring `n` from its length.
    fn from_str(word: &str) -> Result<Self, Self::Err> {
        let steps = parse_steps(word)?;
        let n = infer_n(steps.len())?;
        DyckPath::new(n, steps)
    }
}

/// Infers `n` from a word length, which must be a positive multiple of 3.
pub fn infer_n(len: usize) -> Result<usize, PathError> {
    if len == 0 {
        return Err(PathError::ZeroN);
    }
    if !len.is_multiple_of(3) {
        return Err(PathError::WrongLength {
            expected: 3 * (len / 3 + 1),
            found: len,
        });
    }
    Ok(len / 3)
}

/// All (2n,n)-Dyck paths in lexicographic order of their words, with `N < E`.
pub fn enumerate_paths(n: usize) -> Paths {
    Paths::new(n)
}

/// Iterator over all paths for one `n`; see [`enumerate_paths`].
///
/// Walks successors directly: the smallest word is `N^n E^(2n)`, and the
/// successor of a word flips its right-most flippable `N` to `E` and then
/// writes the smallest completion (all remaining `N`s, then all `E`s), which
/// is always a valid suffix.
#[derive(Clone, Debug)]
pub struct Paths {
    n: usize,
    current: Option<Vec<Step>>,
}

impl Paths {
    fn new(n: usize) -> Self {
        let current = if n == 0 {
            None
        } else {
            let mut first = vec![Step::North; n];
            first.resize(3 * n, Step::East);
            Some(first)
        };
        Paths { n, current }
    }

    fn successor(n: usize, word: &[Step]) -> Option<Vec<Step>> {
        let (up, down) = (2 * n as Level, n as Level);
        let mut prefix_levels = Vec::with_capacity(word.len());
        let mut level = 0;
        for step in word {
            prefix_levels.push(level);
            level += match step {
                Step::North => up,
                Step::East => -down,
            };
        }
        let mut north_before = word.iter().filter(|&&s| s == Step::North).count();
        for i in (0..word.len()).rev() {
            if word[i] == Step::North {
                north_before -= 1;
                let east_before = i - north_before;
                if prefix_levels[i] >= down && east_before < 2 * n {
                    let mut next = word[..i].to_vec();
                    next.push(Step::East);
                    next.resize(next.len() + (n - north_before), Step::North);
                    next.resize(3 * n, Step::East);
                    return Some(next);
                }
            }
        }
        None
    }
}

impl Iterator for Paths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let word = self.current.take()?;
        self.current = Paths::successor(self.n, &word);
        Some(DyckPath {
            n: self.n,
            steps: word,
        })
    }
}

/// `(1 / (2n+1)) * C(3n, n)`, the number of (2n,n)-Dyck paths.
pub fn fuss_catalan(n: usize) -> u128 {
    let mut binom: u128 = 1;
    for k in 0..n as u128 {
        binom = binom * (3 * n as u128 - k) / (k + 1);
    }
    binom / (2 * n as u128 + 1)
}
