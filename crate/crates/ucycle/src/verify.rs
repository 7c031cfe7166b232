//! Independent verification of claimed universal cycles.
//!
//! Verification never consults the digraph or the construction. It reads the
//! cycle's windows directly and checks four separate conditions: the length
//! equals the class count, every window is a member word, no window repeats,
//! and every member word appears. A cycle shorter than the window length
//! yields no windows at all and never verifies.
//!
//! [`exhaustive_nonexistence`] is the matching brute-force certificate: it
//! tries every candidate string of the right length and confirms that none
//! of them is a universal cycle.

use crate::classes::ClassSpec;
use crate::error::{Error, Result};
use crate::word::{rank_space, CyclicString, Word};

pub const DEFAULT_FAILURE_CAP: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureKind {
    /// The window is not a member of the class.
    NotMember,
    /// The window already occurred at an earlier position.
    Duplicate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowFailure {
    /// Starting offset of the window in the cycle.
    pub position: usize,
    pub window: Word,
    pub kind: FailureKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// Conjunction of the four condition flags.
    pub ok: bool,
    /// Cycle length equals the number of member words.
    pub length_ok: bool,
    /// Every window is a member word.
    pub all_windows_valid: bool,
    /// No window occurs twice.
    pub all_distinct: bool,
    /// Every member word occurs as a window.
    pub coverage_complete: bool,
    /// Offending windows, capped; the flags above still cover the whole
    /// cycle even when this list is truncated.
    pub failures: Vec<WindowFailure>,
}

struct Bitset {
    blocks: Vec<u64>,
}

impl Bitset {
    fn new(bits: u64) -> Self {
        Bitset {
            blocks: vec![0; bits.div_ceil(64) as usize],
        }
    }

    /// Sets the bit and reports whether it was already set.
    fn insert(&mut self, bit: u64) -> bool {
        let block = (bit / 64) as usize;
        let mask = 1u64 << (bit % 64);
        let old = self.blocks[block] & mask != 0;
        self.blocks[block] |= mask;
        old
    }

    fn contains(&self, bit: u64) -> bool {
        self.blocks[(bit / 64) as usize] & (1u64 << (bit % 64)) != 0
    }
}

pub fn verify(cycle: &CyclicString, spec: &ClassSpec, budget: u64) -> Result<VerificationReport> {
    verify_with_cap(cycle, spec, budget, DEFAULT_FAILURE_CAP)
}

pub fn verify_with_cap(
    cycle: &CyclicString,
    spec: &ClassSpec,
    budget: u64,
    failure_cap: usize,
) -> Result<VerificationReport> {
    let n = spec.alphabet().len();
    let k = spec.word_length();
    for &letter in cycle.letters() {
        if letter >= n {
            return Err(Error::LetterOutOfRange { letter, size: n });
        }
    }
    let count = spec.count(budget)?;
    let length_ok = cycle.len() as u64 == count;

    if k > cycle.len() {
        return Ok(VerificationReport {
            ok: false,
            length_ok,
            all_windows_valid: false,
            all_distinct: false,
            coverage_complete: false,
            failures: Vec::new(),
        });
    }

    let space = rank_space(n, k).expect("count() already walked this space");
    let mut seen = Bitset::new(space);
    let mut covered = Bitset::new(space);
    let mut all_windows_valid = true;
    let mut all_distinct = true;
    let mut failures = Vec::new();
    let push = |failures: &mut Vec<WindowFailure>, f: WindowFailure| {
        if failures.len() < failure_cap {
            failures.push(f);
        }
    };

    let letters = cycle.letters();
    let length = letters.len();
    let mut window = vec![0usize; k];
    for position in 0..length {
        for (i, slot) in window.iter_mut().enumerate() {
            *slot = letters[(position + i) % length];
        }
        let member = spec.admits(&window);
        let rank = window
            .iter()
            .fold(0u64, |acc, &l| acc * n as u64 + l as u64);
        if !member {
            all_windows_valid = false;
            push(
                &mut failures,
                WindowFailure {
                    position,
                    window: Word::from_raw(window.clone()),
                    kind: FailureKind::NotMember,
                },
            );
        } else {
            covered.insert(rank);
        }
        if seen.insert(rank) {
            all_distinct = false;
            push(
                &mut failures,
                WindowFailure {
                    position,
                    window: Word::from_raw(window.clone()),
                    kind: FailureKind::Duplicate,
                },
            );
        }
    }

    let mut coverage_complete = true;
    spec.for_each_member(budget, |rank, _| {
        if !covered.contains(rank) {
            coverage_complete = false;
        }
    })?;

    Ok(VerificationReport {
        ok: length_ok && all_windows_valid && all_distinct && coverage_complete,
        length_ok,
        all_windows_valid,
        all_distinct,
        coverage_complete,
        failures,
    })
}

/// Certifies by brute force that the class admits no universal cycle at all:
/// every string of the correct length fails. The search space has `n^count`
/// candidates and must fit the budget. Returns `true` when no candidate
/// works, `false` when some string is a universal cycle.
pub fn exhaustive_nonexistence(spec: &ClassSpec, budget: u64) -> Result<bool> {
    let n = spec.alphabet().len();
    let k = spec.word_length();
    let count = spec.count(budget)?;
    if count == 0 {
        return Ok(true);
    }
    if count < k as u64 {
        // too short to carry even one window
        return Ok(true);
    }
    let length = count as usize;
    let candidates = match rank_space(n, length) {
        Some(c) if c <= budget => c,
        _ => {
            return Err(Error::BudgetExceeded {
                required: rank_space(n, length).unwrap_or(u64::MAX),
                budget,
            })
        }
    };

    let space = rank_space(n, k).expect("within the checked candidate space");
    // stamping with the candidate id avoids clearing between candidates
    let mut stamp = vec![u64::MAX; space as usize];
    let mut letters = vec![0usize; length];
    let mut window = vec![0usize; k];
    for candidate in 0..candidates {
        let mut is_cycle = true;
        for position in 0..length {
            for (i, slot) in window.iter_mut().enumerate() {
                *slot = letters[(position + i) % length];
            }
            if !spec.admits(&window) {
                is_cycle = false;
                break;
            }
            let rank = window
                .iter()
                .fold(0u64, |acc, &l| acc * n as u64 + l as u64);
            if stamp[rank as usize] == candidate {
                is_cycle = false;
                break;
            }
            stamp[rank as usize] = candidate;
        }
        if is_cycle {
            return Ok(false);
        }
        for digit in (0..length).rev() {
            letters[digit] += 1;
            if letters[digit] < n {
                break;
            }
            letters[digit] = 0;
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::OrderedAlphabet;
    use crate::classes::ClassKind;
    use crate::DEFAULT_BUDGET;

    fn binary() -> OrderedAlphabet {
        OrderedAlphabet::from_symbols(["0", "1"]).unwrap()
    }

    fn check(spec: &ClassSpec, text: &str) -> VerificationReport {
        let cycle = CyclicString::parse(text, spec.alphabet()).unwrap();
        verify(&cycle, spec, DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn known_good_cycles_verify() {
        let all = ClassSpec::new(binary(), 3, ClassKind::AllWords).unwrap();
        assert!(check(&all, "11101000").ok);

        let nb = ClassSpec::new(binary(), 3, ClassKind::NearBalancedBinary).unwrap();
        let report = check(&nb, "011010");
        assert!(report.ok);
        assert!(report.failures.is_empty());

        let mono2 = ClassSpec::new(binary(), 4, ClassKind::Monotone).unwrap();
        assert!(check(&mono2, "00010011110110").ok);

        let abc = OrderedAlphabet::from_symbols(["A", "B", "C"]).unwrap();
        let mono3 = ClassSpec::new(abc, 3, ClassKind::Monotone).unwrap();
        assert!(check(&mono3, "AABABBBCCBCBBAACACCCABCA").ok);
    }

    #[test]
    fn corrupted_cycle_fails_with_positions() {
        let all = ClassSpec::new(binary(), 3, ClassKind::AllWords).unwrap();
        // flip one letter of the good cycle: length stays right, windows
        // duplicate and coverage breaks
        let report = check(&all, "11111000");
        assert!(!report.ok);
        assert!(report.length_ok);
        assert!(report.all_windows_valid); // every binary word is a member
        assert!(!report.all_distinct);
        assert!(!report.coverage_complete);
        assert!(!report.failures.is_empty());
        for f in &report.failures {
            assert!(f.position < 8);
            assert_eq!(f.kind, FailureKind::Duplicate);
        }
    }

    #[test]
    fn non_member_windows_are_reported() {
        let nb = ClassSpec::new(binary(), 3, ClassKind::NearBalancedBinary).unwrap();
        let report = check(&nb, "011110");
        assert!(!report.ok);
        assert!(!report.all_windows_valid);
        assert!(report
            .failures
            .iter()
            .any(|f| f.kind == FailureKind::NotMember));
    }

    #[test]
    fn wrong_length_alone_fails() {
        let all = ClassSpec::new(binary(), 3, ClassKind::AllWords).unwrap();
        let report = check(&all, "0011");
        assert!(!report.ok);
        assert!(!report.length_ok);
        assert!(report.all_windows_valid);
        assert!(report.all_distinct);
        assert!(!report.coverage_complete);
    }

    #[test]
    fn short_cycles_have_no_windows() {
        let mono = ClassSpec::new(binary(), 4, ClassKind::Monotone).unwrap();
        let report = check(&mono, "001");
        assert!(!report.ok);
        assert!(!report.all_windows_valid);
        assert!(!report.all_distinct);
        assert!(!report.coverage_complete);
        assert!(report.failures.is_empty());
    }

    #[test]
    fn failure_cap_truncates_the_list_not_the_flags() {
        let nb = ClassSpec::new(binary(), 3, ClassKind::NearBalancedBinary).unwrap();
        let cycle = CyclicString::parse("111111", nb.alphabet()).unwrap();
        let capped = verify_with_cap(&cycle, &nb, DEFAULT_BUDGET, 2).unwrap();
        assert_eq!(capped.failures.len(), 2);
        assert!(!capped.all_windows_valid);
        assert!(!capped.all_distinct);
        let full = verify(&cycle, &nb, DEFAULT_BUDGET).unwrap();
        assert!(full.failures.len() > 2);
    }

    #[test]
    fn single_letter_windows_verify() {
        let a = OrderedAlphabet::generic(3).unwrap();
        let spec = ClassSpec::new(a.clone(), 1, ClassKind::AllWords).unwrap();
        let report = check(&spec, "abc");
        assert!(report.ok);
        let bad = check(&spec, "aab");
        assert!(!bad.ok);
        assert!(!bad.all_distinct);
        assert!(!bad.coverage_complete);
    }

    #[test]
    fn foreign_letters_are_rejected_outright() {
        let all = ClassSpec::new(binary(), 3, ClassKind::AllWords).unwrap();
        let wide = OrderedAlphabet::generic(4).unwrap();
        let cycle = CyclicString::parse("aadd", &wide).unwrap();
        assert_eq!(
            verify(&cycle, &all, DEFAULT_BUDGET),
            Err(Error::LetterOutOfRange { letter: 3, size: 2 })
        );
    }

    #[test]
    fn nonexistence_search_agrees_with_the_digraph_verdict() {
        // the equitable binary class of length 4 splits in two components;
        // no string of length 6 works
        let eq = ClassSpec::new(binary(), 4, ClassKind::Equitable).unwrap();
        assert_eq!(exhaustive_nonexistence(&eq, DEFAULT_BUDGET), Ok(true));

        // de Bruijn cycles exist
        let all = ClassSpec::new(binary(), 2, ClassKind::AllWords).unwrap();
        assert_eq!(exhaustive_nonexistence(&all, DEFAULT_BUDGET), Ok(false));

        let nb = ClassSpec::new(binary(), 3, ClassKind::NearBalancedBinary).unwrap();
        assert_eq!(exhaustive_nonexistence(&nb, DEFAULT_BUDGET), Ok(false));
    }

    #[test]
    fn nonexistence_shortcuts() {
        let empty = ClassSpec::new(
            OrderedAlphabet::generic(3).unwrap(),
            4,
            ClassKind::Injective,
        )
        .unwrap();
        assert_eq!(exhaustive_nonexistence(&empty, DEFAULT_BUDGET), Ok(true));

        // one word of length three: too few letters to carry a window
        let tiny =
            ClassSpec::new(OrderedAlphabet::generic(1).unwrap(), 3, ClassKind::AllWords).unwrap();
        assert_eq!(exhaustive_nonexistence(&tiny, DEFAULT_BUDGET), Ok(true));
    }

    #[test]
    fn nonexistence_respects_the_budget() {
        let all = ClassSpec::new(binary(), 2, ClassKind::AllWords).unwrap();
        assert_eq!(
            exhaustive_nonexistence(&all, 10),
            Err(Error::BudgetExceeded {
                required: 16,
                budget: 10
            })
        );
    }

    #[test]
    fn generated_cycles_pass_verification() {
        let spec = ClassSpec::new(
            OrderedAlphabet::generic(3).unwrap(),
            4,
            ClassKind::AugmentedOnto {
                min_occurs: 1,
                max_occurs: 2,
            },
        )
        .unwrap();
        match crate::euler::generate(&spec, DEFAULT_BUDGET).unwrap() {
            crate::euler::GenerateOutcome::Cycle(report) => {
                let verdict = verify(&report.cycle, &spec, DEFAULT_BUDGET).unwrap();
                assert!(verdict.ok, "{verdict:?}");
                assert_eq!(report.cycle.len(), 36);
            }
            crate::euler::GenerateOutcome::NonEulerian(r) => {
                panic!("expected a cycle, got {r:?}")
            }
        }
    }
}
