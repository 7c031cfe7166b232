//! Words and cyclic strings over an ordered alphabet.
//!
//! A [`Word`] is a fixed finite letter sequence; a [`CyclicString`] is a
//! letter sequence read cyclically, where rotation-equivalent strings denote
//! the same cycle. Words of length `k` over `n` symbols biject with the ranks
//! `0..n^k` through big-endian mixed-radix encoding, which is how enumeration
//! and the transition digraph index them.

use crate::alphabet::OrderedAlphabet;
use crate::error::{Error, Result};

/// Number of `length`-letter words over `size` symbols, if it fits in `u64`.
pub fn rank_space(size: usize, length: usize) -> Option<u64> {
    let mut space: u64 = 1;
    for _ in 0..length {
        space = space.checked_mul(size as u64)?;
    }
    Some(space)
}

fn check_letters(letters: &[usize], alphabet: &OrderedAlphabet) -> Result<()> {
    if letters.is_empty() {
        return Err(Error::EmptyWord);
    }
    for &letter in letters {
        if letter >= alphabet.len() {
            return Err(Error::LetterOutOfRange {
                letter,
                size: alphabet.len(),
            });
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>, alphabet: &OrderedAlphabet) -> Result<Self> {
        check_letters(&letters, alphabet)?;
        Ok(Word { letters })
    }

    pub(crate) fn from_raw(letters: Vec<usize>) -> Self {
        debug_assert!(!letters.is_empty());
        Word { letters }
    }

    pub fn parse(text: &str, alphabet: &OrderedAlphabet) -> Result<Self> {
        let letters = alphabet.parse_letters(text)?;
        Self::new(letters, alphabet)
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn display(&self, alphabet: &OrderedAlphabet) -> String {
        alphabet.format_letters(&self.letters)
    }

    /// Big-endian mixed-radix value of the word: the first letter is the most
    /// significant digit.
    pub fn rank(&self, alphabet: &OrderedAlphabet) -> Result<u64> {
        check_letters(&self.letters, alphabet)?;
        let n = alphabet.len() as u64;
        let mut rank: u64 = 0;
        for &letter in &self.letters {
            rank = rank
                .checked_mul(n)
                .and_then(|r| r.checked_add(letter as u64))
                .ok_or(Error::RankSpaceOverflow {
                    size: alphabet.len(),
                    length: self.letters.len(),
                })?;
        }
        Ok(rank)
    }

    /// Inverse of [`rank`](Self::rank) for words of the given length.
    pub fn unrank(rank: u64, length: usize, alphabet: &OrderedAlphabet) -> Result<Self> {
        if length == 0 {
            return Err(Error::EmptyWord);
        }
        let n = alphabet.len() as u64;
        if let Some(space) = rank_space(alphabet.len(), length) {
            if rank >= space {
                return Err(Error::RankOutOfRange {
                    rank,
                    size: alphabet.len(),
                    length,
                });
            }
        }
        let mut letters = vec![0usize; length];
        let mut rest = rank;
        for slot in letters.iter_mut().rev() {
            *slot = (rest % n) as usize;
            rest /= n;
        }
        Ok(Word { letters })
    }
}

/// Index of the lexicographically least rotation of `s` (Booth-style
/// two-pointer scan, linear time).
pub(crate) fn least_rotation(s: &[usize]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = s[(i + k) % n];
        let b = s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

#[derive(Debug, Clone, Eq)]
pub struct CyclicString {
    letters: Vec<usize>,
}

impl CyclicString {
    pub fn new(letters: Vec<usize>, alphabet: &OrderedAlphabet) -> Result<Self> {
        check_letters(&letters, alphabet)?;
        Ok(CyclicString { letters })
    }

    pub(crate) fn from_raw(letters: Vec<usize>) -> Self {
        debug_assert!(!letters.is_empty());
        CyclicString { letters }
    }

    pub fn parse(text: &str, alphabet: &OrderedAlphabet) -> Result<Self> {
        let letters = alphabet.parse_letters(text)?;
        Self::new(letters, alphabet)
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn display(&self, alphabet: &OrderedAlphabet) -> String {
        alphabet.format_letters(&self.letters)
    }

    /// The same cycle started `by` positions later.
    pub fn rotated(&self, by: usize) -> CyclicString {
        let n = self.letters.len();
        let by = by % n;
        let mut letters = Vec::with_capacity(n);
        letters.extend_from_slice(&self.letters[by..]);
        letters.extend_from_slice(&self.letters[..by]);
        CyclicString { letters }
    }

    /// The lexicographically least rotation, used for display and comparison.
    pub fn canonical(&self) -> CyclicString {
        self.rotated(least_rotation(&self.letters))
    }

    /// All `length`-letter windows, one per starting position.
    pub fn windows(&self, length: usize) -> Result<Vec<Word>> {
        if length == 0 {
            return Err(Error::EmptyWord);
        }
        let n = self.letters.len();
        if length > n {
            return Err(Error::WindowTooLong {
                window: length,
                cycle: n,
            });
        }
        Ok((0..n)
            .map(|start| {
                let letters = (0..length)
                    .map(|off| self.letters[(start + off) % n])
                    .collect();
                Word::from_raw(letters)
            })
            .collect())
    }
}

/// Cyclic strings compare as cycles: equal iff one is a rotation of the other.
impl PartialEq for CyclicString {
    fn eq(&self, other: &Self) -> bool {
        self.letters.len() == other.letters.len()
            && self.canonical().letters == other.canonical().letters
    }
}
