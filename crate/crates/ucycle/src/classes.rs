//! Restricted word classes and their enumeration.
//!
//! A [`ClassSpec`] pairs an alphabet with a word length and a [`ClassKind`]
//! predicate. Enumeration walks all `n^k` candidate words in rank order and
//! filters by membership, guarded by an explicit candidate budget so that
//! oversized requests fail with the required budget instead of running away.

use crate::alphabet::OrderedAlphabet;
use crate::error::{Error, Result};
use crate::lattice::{endpoint_of_letters, StepTable};
use crate::word::{rank_space, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassKind {
    /// Every word. Universal cycles of this class are de Bruijn sequences.
    AllWords,
    /// No letter repeats.
    Injective,
    /// Every letter of the alphabet appears.
    Onto,
    /// Binary words whose zero and one counts differ by at most one; for even
    /// lengths the counts must be exactly equal.
    NearBalancedBinary,
    /// Every letter appears floor(k/n) or ceil(k/n) times.
    Equitable,
    /// Some rotation of the word is non-decreasing.
    Monotone,
    /// Consecutive letters at most `c` apart in the cyclic letter metric.
    Lipschitz { c: usize },
    /// Consecutive letters step through the alphabet categories in cyclic
    /// order; the starting category is free.
    CyclicCategories,
    /// Every letter appears at least `min_occurs` and at most `max_occurs`
    /// times.
    AugmentedOnto {
        min_occurs: usize,
        max_occurs: usize,
    },
    /// Walks on the integer lattice that finish within `radius` of the origin
    /// in the l1 norm.
    LatticePath { dimension: usize, radius: usize },
}

impl ClassKind {
    pub fn name(&self) -> &'static str {
        match self {
            ClassKind::AllWords => "all-words",
            ClassKind::Injective => "injective",
            ClassKind::Onto => "onto",
            ClassKind::NearBalancedBinary => "near-balanced",
            ClassKind::Equitable => "equitable",
            ClassKind::Monotone => "monotone",
            ClassKind::Lipschitz { .. } => "lipschitz",
            ClassKind::CyclicCategories => "cyclic-categories",
            ClassKind::AugmentedOnto { .. } => "augmented-onto",
            ClassKind::LatticePath { .. } => "lattice",
        }
    }
}

/// What the existence table says about a parameter point: a cycle is claimed
/// to exist, claimed not to exist, or the point is not covered. Claims carry
/// the identifier of the rule that produced them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExistenceClaim {
    ClaimedExists { rule: &'static str },
    ClaimedNotExists { rule: &'static str },
    Unstated,
}

impl ExistenceClaim {
    pub fn rule(&self) -> Option<&'static str> {
        match self {
            ExistenceClaim::ClaimedExists { rule } => Some(rule),
            ExistenceClaim::ClaimedNotExists { rule } => Some(rule),
            ExistenceClaim::Unstated => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            ExistenceClaim::ClaimedExists { .. } => "exists",
            ExistenceClaim::ClaimedNotExists { .. } => "not-exists",
            ExistenceClaim::Unstated => "unstated",
        }
    }
}

/// Count of cyclic descents: positions whose letter exceeds the next one,
/// wrapping from the last letter back to the first. A word has some
/// non-decreasing rotation exactly when this count is at most one.
pub fn cyclic_descents(word: &Word) -> usize {
    descents(word.letters())
}

pub(crate) fn descents(w: &[usize]) -> usize {
    let k = w.len();
    (0..k).filter(|&i| w[i] > w[(i + 1) % k]).count()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSpec {
    alphabet: OrderedAlphabet,
    word_length: usize,
    kind: ClassKind,
    steps: Option<StepTable>,
}

impl ClassSpec {
    pub fn new(alphabet: OrderedAlphabet, word_length: usize, kind: ClassKind) -> Result<Self> {
        if word_length == 0 {
            return Err(Error::ZeroWordLength);
        }
        let mut steps = None;
        match &kind {
            ClassKind::NearBalancedBinary if alphabet.len() != 2 => {
                return Err(Error::NeedsBinaryAlphabet(alphabet.len()));
            }
            ClassKind::Lipschitz { c } => {
                if *c == 0 {
                    return Err(Error::BadLipschitzBound);
                }
                if !alphabet.is_cyclic() {
                    return Err(Error::NeedsCyclicAlphabet);
                }
            }
            ClassKind::CyclicCategories if alphabet.categories().is_none() => {
                return Err(Error::NeedsCategories);
            }
            ClassKind::AugmentedOnto {
                min_occurs,
                max_occurs,
            } => {
                if *min_occurs < 1 || min_occurs >= max_occurs {
                    return Err(Error::BadOccurrenceBounds {
                        min: *min_occurs,
                        max: *max_occurs,
                    });
                }
            }
            ClassKind::LatticePath { dimension, radius } => {
                if *radius == 0 {
                    return Err(Error::BadRadius);
                }
                steps = Some(StepTable::for_alphabet(&alphabet, *dimension)?);
            }
            _ => {}
        }
        Ok(ClassSpec {
            alphabet,
            word_length,
            kind,
            steps,
        })
    }

    pub fn alphabet(&self) -> &OrderedAlphabet {
        &self.alphabet
    }

    pub fn word_length(&self) -> usize {
        self.word_length
    }

    pub fn kind(&self) -> &ClassKind {
        &self.kind
    }

    pub fn step_table(&self) -> Option<&StepTable> {
        self.steps.as_ref()
    }

    /// Non-fatal oddities of the parameters, such as a Lipschitz bound so
    /// large that every word qualifies.
    pub fn warnings(&self) -> Vec<String> {
        let mut notes = Vec::new();
        if let ClassKind::Lipschitz { c } = self.kind {
            if 2 * c + 1 > self.alphabet.len() {
                notes.push(format!(
                    "lipschitz bound {} admits every word over {} symbols (2c+1 > n)",
                    c,
                    self.alphabet.len()
                ));
            }
        }
        notes
    }

    /// Membership test for a word of the right length over this alphabet.
    pub fn is_member(&self, word: &Word) -> Result<bool> {
        if word.len() != self.word_length {
            return Err(Error::WordLengthMismatch {
                expected: self.word_length,
                actual: word.len(),
            });
        }
        for &letter in word.letters() {
            if letter >= self.alphabet.len() {
                return Err(Error::LetterOutOfRange {
                    letter,
                    size: self.alphabet.len(),
                });
            }
        }
        Ok(self.admits(word.letters()))
    }

    /// The membership predicate on raw letters, assumed in range.
    pub(crate) fn admits(&self, w: &[usize]) -> bool {
        let n = self.alphabet.len();
        match &self.kind {
            ClassKind::AllWords => true,
            ClassKind::Injective => {
                let mut seen = vec![false; n];
                w.iter().all(|&l| !std::mem::replace(&mut seen[l], true))
            }
            ClassKind::Onto => {
                let mut seen = vec![false; n];
                for &l in w {
                    seen[l] = true;
                }
                seen.iter().all(|&s| s)
            }
            ClassKind::NearBalancedBinary => {
                let ones = w.iter().filter(|&&l| l == 1).count();
                let zeros = w.len() - ones;
                let (lo, hi) = (w.len() / 2, w.len().div_ceil(2));
                (zeros == lo && ones == hi) || (zeros == hi && ones == lo)
            }
            ClassKind::Equitable => {
                let k = w.len();
                let (lo, hi) = (k / n, k.div_ceil(n));
                let mut counts = vec![0usize; n];
                for &l in w {
                    counts[l] += 1;
                }
                counts.iter().all(|&c| c >= lo && c <= hi)
            }
            ClassKind::Monotone => {
                let k = w.len();
                (0..k).any(|r| (0..k - 1).all(|i| w[(r + i) % k] <= w[(r + i + 1) % k]))
            }
            ClassKind::Lipschitz { c } => w.windows(2).all(|pair| {
                let gap = pair[0].abs_diff(pair[1]);
                gap.min(n - gap) <= *c
            }),
            ClassKind::CyclicCategories => {
                let cats = self.alphabet.category_count().expect("validated");
                w.windows(2).all(|pair| {
                    let here = self.alphabet.category_of(pair[0]).expect("validated");
                    let next = self.alphabet.category_of(pair[1]).expect("validated");
                    next == (here + 1) % cats
                })
            }
            ClassKind::AugmentedOnto {
                min_occurs,
                max_occurs,
            } => {
                let mut counts = vec![0usize; n];
                for &l in w {
                    counts[l] += 1;
                }
                counts.iter().all(|&c| c >= *min_occurs && c <= *max_occurs)
            }
            ClassKind::LatticePath { radius, .. } => {
                let table = self.steps.as_ref().expect("validated");
                let end = endpoint_of_letters(w, table).expect("letters in range");
                end.l1_norm() <= *radius as u64
            }
        }
    }

    /// Runs `visit(rank, letters)` over every member word in rank order.
    pub(crate) fn for_each_member<F>(&self, budget: u64, mut visit: F) -> Result<()>
    where
        F: FnMut(u64, &[usize]),
    {
        let n = self.alphabet.len();
        let k = self.word_length;
        let space = rank_space(n, k).ok_or(Error::BudgetExceeded {
            required: u64::MAX,
            budget,
        })?;
        if space > budget {
            return Err(Error::BudgetExceeded {
                required: space,
                budget,
            });
        }
        let mut w = vec![0usize; k];
        for rank in 0..space {
            if self.admits(&w) {
                visit(rank, &w);
            }
            for digit in (0..k).rev() {
                w[digit] += 1;
                if w[digit] < n {
                    break;
                }
                w[digit] = 0;
            }
        }
        Ok(())
    }

    /// All member words in rank order.
    pub fn enumerate(&self, budget: u64) -> Result<Vec<Word>> {
        let mut members = Vec::new();
        self.for_each_member(budget, |_, w| members.push(Word::from_raw(w.to_vec())))?;
        Ok(members)
    }

    /// Number of member words.
    pub fn count(&self, budget: u64) -> Result<u64> {
        let mut total = 0u64;
        self.for_each_member(budget, |_, _| total += 1)?;
        Ok(total)
    }

    /// What the existence table claims for these parameters.
    pub fn existence_claim(&self) -> ExistenceClaim {
        use ExistenceClaim::{ClaimedExists, ClaimedNotExists, Unstated};
        let n = self.alphabet.len();
        let k = self.word_length;
        match &self.kind {
            ClassKind::AllWords => ClaimedExists { rule: "de-bruijn" },
            ClassKind::Injective => {
                if k < n {
                    ClaimedExists { rule: "injective" }
                } else {
                    ClaimedNotExists { rule: "injective" }
                }
            }
            ClassKind::Onto => {
                if k > n {
                    ClaimedExists { rule: "onto" }
                } else {
                    ClaimedNotExists { rule: "onto" }
                }
            }
            ClassKind::NearBalancedBinary => {
                if k % 2 == 1 {
                    ClaimedExists {
                        rule: "near-balanced",
                    }
                } else {
                    ClaimedNotExists {
                        rule: "near-balanced",
                    }
                }
            }
            ClassKind::Equitable => {
                if !k.is_multiple_of(n) {
                    ClaimedExists { rule: "equitable" }
                } else {
                    ClaimedNotExists { rule: "equitable" }
                }
            }
            ClassKind::Monotone => ClaimedExists { rule: "monotone" },
            ClassKind::Lipschitz { c } => {
                if 2 * c < n {
                    ClaimedExists { rule: "lipschitz" }
                } else {
                    // the bound no longer constrains anything
                    ClaimedExists { rule: "de-bruijn" }
                }
            }
            ClassKind::CyclicCategories => {
                let groups = self.alphabet.categories().expect("validated");
                let c = groups.len();
                let equal_sizes = groups.windows(2).all(|g| g[0].len() == g[1].len());
                if c == 2 && (k.is_multiple_of(2) || equal_sizes) {
                    ClaimedExists {
                        rule: "alternating-categories",
                    }
                } else if k >= c + 2 && (k - 2).is_multiple_of(c) {
                    ClaimedExists {
                        rule: "cyclic-categories",
                    }
                } else {
                    Unstated
                }
            }
            ClassKind::AugmentedOnto {
                min_occurs,
                max_occurs,
            } => {
                let (a, b) = (*min_occurs, *max_occurs);
                if a * n < k && k < b * n {
                    if (a, b) == (1, 2) {
                        ClaimedExists {
                            rule: "augmented-onto-1-2",
                        }
                    } else {
                        ClaimedExists {
                            rule: "augmented-onto-general",
                        }
                    }
                } else {
                    Unstated
                }
            }
            ClassKind::LatticePath { dimension, radius } => {
                if k <= *radius {
                    // the radius bound cannot be violated by a k-step walk
                    ClaimedExists { rule: "de-bruijn" }
                } else if *dimension == 3 && *radius >= 3 && k > *radius {
                    ClaimedExists { rule: "lattice-3d" }
                } else {
                    Unstated
                }
            }
        }
    }

    /// Count and claim bundled for reporting.
    pub fn summarize(&self, budget: u64) -> Result<ClassSummary> {
        Ok(ClassSummary {
            count: self.count(budget)?,
            claim: self.existence_claim(),
            spec: self.clone(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSummary {
    pub spec: ClassSpec,
    pub count: u64,
    pub claim: ExistenceClaim,
}
