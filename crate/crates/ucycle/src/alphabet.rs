//! Finite ordered alphabets.
//!
//! Letters are `usize` indices into an ordered list of printable symbols. The
//! ordering fixes lexicographic comparisons, word ranks, and canonical cycle
//! rotations, so everything downstream is deterministic. An alphabet may
//! additionally carry a cyclic letter metric (distance wraps around the ends)
//! and an ordered partition of its letters into categories.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedAlphabet {
    symbols: Vec<String>,
    cyclic: bool,
    categories: Option<Vec<Vec<usize>>>,
    category_of: Vec<usize>,
}

impl OrderedAlphabet {
    /// Builds an alphabet from distinct, nonempty symbol tokens.
    pub fn from_symbols<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || symbols[..i].contains(s) {
                return Err(Error::BadSymbol(s.clone()));
            }
        }
        Ok(OrderedAlphabet {
            symbols,
            cyclic: false,
            categories: None,
            category_of: Vec::new(),
        })
    }

    /// An `n`-symbol alphabet named `a..z`, then `s0`, `s1`, ...
    pub fn generic(n: usize) -> Result<Self> {
        let symbols = (0..n).map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("s{}", i - 26)
            }
        });
        Self::from_symbols(symbols)
    }

    /// Turns on the cyclic letter metric.
    pub fn with_cyclic_metric(mut self) -> Self {
        self.cyclic = true;
        self
    }

    /// Attaches an ordered partition of the letters into categories.
    pub fn with_categories(mut self, categories: Vec<Vec<usize>>) -> Result<Self> {
        let mut cover = vec![0usize; self.symbols.len()];
        for group in &categories {
            for &letter in group {
                if letter >= self.symbols.len() {
                    return Err(Error::LetterOutOfRange {
                        letter,
                        size: self.symbols.len(),
                    });
                }
                cover[letter] += 1;
            }
        }
        if let Some(letter) = cover.iter().position(|&c| c != 1) {
            return Err(Error::BadCategoryCover {
                letter,
                times: cover[letter],
            });
        }
        let mut category_of = vec![0usize; self.symbols.len()];
        for (ci, group) in categories.iter().enumerate() {
            for &letter in group {
                category_of[letter] = ci;
            }
        }
        self.categories = Some(categories);
        self.category_of = category_of;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, letter: usize) -> &str {
        &self.symbols[letter]
    }

    pub fn index_of(&self, symbol: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == symbol)
    }

    pub fn categories(&self) -> Option<&[Vec<usize>]> {
        self.categories.as_deref()
    }

    pub fn category_count(&self) -> Option<usize> {
        self.categories.as_ref().map(Vec::len)
    }

    pub fn category_of(&self, letter: usize) -> Option<usize> {
        self.categories.as_ref()?;
        self.category_of.get(letter).copied()
    }

    /// Distance between two letters: plain index difference, or the shorter
    /// way around when the alphabet is cyclic.
    pub fn letter_distance(&self, a: usize, b: usize) -> Result<usize> {
        let n = self.symbols.len();
        for letter in [a, b] {
            if letter >= n {
                return Err(Error::LetterOutOfRange { letter, size: n });
            }
        }
        let gap = a.abs_diff(b);
        Ok(if self.cyclic { gap.min(n - gap) } else { gap })
    }

    /// True when every symbol renders as a single character, in which case
    /// words print without separators.
    pub fn single_char_symbols(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Renders a letter sequence as a token string.
    pub fn format_letters(&self, letters: &[usize]) -> String {
        let sep = if self.single_char_symbols() { "" } else { "," };
        letters
            .iter()
            .map(|&l| self.symbols[l].as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Parses a token string produced by [`format_letters`]: one character per
    /// letter when all symbols are single characters, comma-separated tokens
    /// otherwise. Digit strings fall back to raw letter indices so that
    /// `"0110"` works against any alphabet of at most ten symbols.
    pub fn parse_letters(&self, text: &str) -> Result<Vec<usize>> {
        let parsed: Result<Vec<usize>> = if self.single_char_symbols() && !text.contains(',') {
            text.chars()
                .map(|c| {
                    self.index_of(&c.to_string())
                        .ok_or_else(|| Error::UnknownSymbol(c.to_string()))
                })
                .collect()
        } else {
            text.split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    self.index_of(tok)
                        .ok_or_else(|| Error::UnknownSymbol(tok.to_string()))
                })
                .collect()
        };
        match parsed {
            Ok(letters) => Ok(letters),
            Err(err) => {
                let digits: Option<Vec<usize>> = text
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize))
                    .collect();
                match digits {
                    Some(letters) if letters.iter().all(|&l| l < self.len()) => Ok(letters),
                    _ => Err(err),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generic_naming_runs_past_z() {
        let a = OrderedAlphabet::generic(28).unwrap();
        assert_eq!(a.symbol(0), "a");
        assert_eq!(a.symbol(25), "z");
        assert_eq!(a.symbol(26), "s0");
        assert_eq!(a.symbol(27), "s1");
    }

    #[test]
    fn rejects_empty_and_repeated_symbols() {
        assert_eq!(
            OrderedAlphabet::from_symbols(Vec::<String>::new()),
            Err(Error::EmptyAlphabet)
        );
        assert_eq!(
            OrderedAlphabet::from_symbols(["a", ""]),
            Err(Error::BadSymbol(String::new()))
        );
        assert_eq!(
            OrderedAlphabet::from_symbols(["a", "b", "a"]),
            Err(Error::BadSymbol("a".into()))
        );
    }

    #[test]
    fn linear_distance() {
        let a = OrderedAlphabet::generic(10).unwrap();
        assert_eq!(a.letter_distance(0, 9).unwrap(), 9);
        assert_eq!(a.letter_distance(9, 0).unwrap(), 9);
        assert_eq!(a.letter_distance(4, 4).unwrap(), 0);
        assert_eq!(
            a.letter_distance(0, 10),
            Err(Error::LetterOutOfRange {
                letter: 10,
                size: 10
            })
        );
    }

    #[test]
    fn cyclic_distance_wraps() {
        let a = OrderedAlphabet::generic(10).unwrap().with_cyclic_metric();
        assert_eq!(a.letter_distance(0, 9).unwrap(), 1);
        assert_eq!(a.letter_distance(2, 7).unwrap(), 5);
        assert_eq!(a.letter_distance(7, 2).unwrap(), 5);
    }

    #[test]
    fn categories_must_partition() {
        let a = OrderedAlphabet::generic(4).unwrap();
        assert!(a
            .clone()
            .with_categories(vec![vec![0, 1], vec![2, 3]])
            .is_ok());
        assert_eq!(
            a.clone().with_categories(vec![vec![0, 1], vec![1, 2, 3]]),
            Err(Error::BadCategoryCover {
                letter: 1,
                times: 2
            })
        );
        assert_eq!(
            a.clone().with_categories(vec![vec![0, 1]]),
            Err(Error::BadCategoryCover {
                letter: 2,
                times: 0
            })
        );
        assert_eq!(
            a.with_categories(vec![vec![0, 1, 2, 3, 4]]),
            Err(Error::LetterOutOfRange { letter: 4, size: 4 })
        );
    }

    #[test]
    fn category_lookup() {
        let a = OrderedAlphabet::generic(4)
            .unwrap()
            .with_categories(vec![vec![0, 2], vec![1, 3]])
            .unwrap();
        assert_eq!(a.category_of(0), Some(0));
        assert_eq!(a.category_of(3), Some(1));
        assert_eq!(a.category_count(), Some(2));
        let plain = OrderedAlphabet::generic(4).unwrap();
        assert_eq!(plain.category_of(0), None);
    }

    #[test]
    fn single_char_format_round_trip() {
        let a = OrderedAlphabet::from_symbols(["0", "1"]).unwrap();
        assert_eq!(a.format_letters(&[1, 1, 0, 1]), "1101");
        assert_eq!(a.parse_letters("1101").unwrap(), vec![1, 1, 0, 1]);
    }

    #[test]
    fn multi_char_format_round_trip() {
        let a = OrderedAlphabet::from_symbols(["x+", "y+", "x-", "y-"]).unwrap();
        assert_eq!(a.format_letters(&[0, 3, 1]), "x+,y-,y+");
        assert_eq!(a.parse_letters("x+,y-,y+").unwrap(), vec![0, 3, 1]);
        assert_eq!(a.parse_letters(" x+, y- "), Ok(vec![0, 3]));
        assert_eq!(
            a.parse_letters("x+,q"),
            Err(Error::UnknownSymbol("q".into()))
        );
    }

    #[test]
    fn digit_fallback_parses_indices() {
        let a = OrderedAlphabet::generic(2).unwrap();
        assert_eq!(a.parse_letters("11101000").unwrap().len(), 8);
        assert_eq!(a.parse_letters("01").unwrap(), vec![0, 1]);
        // out-of-range digits do not fall back
        assert!(a.parse_letters("012").is_err());
        // symbol parse wins when it succeeds
        let b = OrderedAlphabet::from_symbols(["1", "0"]).unwrap();
        assert_eq!(b.parse_letters("10").unwrap(), vec![0, 1]);
    }
}
