//! Lattice-path geometry for step alphabets.
//!
//! A word over a `2m`-symbol step alphabet walks the integer lattice `Z^m`,
//! one unit step per letter. Dimensions 2 and 3 use compass names: `E`/`W`
//! move along the first axis, `N`/`S` along the second, `U`/`D` along the
//! third. Higher dimensions use generated names `x1+`, `x1-`, `x2+`, ... in
//! axis order.

use crate::alphabet::OrderedAlphabet;
use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePoint {
    coords: Vec<i64>,
}

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticePoint { coords }
    }

    pub fn origin(dimension: usize) -> Self {
        LatticePoint {
            coords: vec![0; dimension],
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }

    pub fn l1_norm(&self) -> u64 {
        self.coords.iter().map(|&c| c.unsigned_abs()).sum()
    }

    pub fn zero_coordinates(&self) -> usize {
        self.coords.iter().filter(|&&c| c == 0).count()
    }
}

/// Where a point sits relative to the closed l1 ball of a given radius:
/// strictly inside, on the boundary sphere (classified by how many
/// coordinates vanish), or outside.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stratum {
    Interior,
    /// On the sphere with no zero coordinate.
    Face,
    /// On the sphere with exactly one zero coordinate.
    Edge,
    /// On the sphere with two zero coordinates, i.e. on an axis.
    Corner,
    Outside,
}

/// Classifies a three-dimensional point against the l1 ball of `radius`.
pub fn boundary_stratum(point: &LatticePoint, radius: usize) -> Result<Stratum> {
    if point.dimension() != 3 {
        return Err(Error::StratumDimension(point.dimension()));
    }
    let d = point.l1_norm();
    let r = radius as u64;
    Ok(if d < r {
        Stratum::Interior
    } else if d > r {
        Stratum::Outside
    } else {
        match point.zero_coordinates() {
            0 => Stratum::Face,
            1 => Stratum::Edge,
            _ => Stratum::Corner,
        }
    })
}

/// Per-letter unit steps of a `2m`-symbol alphabet: `steps[letter]` is the
/// axis moved and the direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepTable {
    dimension: usize,
    steps: Vec<(usize, i64)>,
}

const COMPASS: [(&str, usize, i64); 6] = [
    ("N", 1, 1),
    ("S", 1, -1),
    ("E", 0, 1),
    ("W", 0, -1),
    ("U", 2, 1),
    ("D", 2, -1),
];

impl StepTable {
    /// Interprets an alphabet as unit steps in `dimension` axes. Compass
    /// symbol sets keep their geographic meaning; any other symbols are read
    /// positionally, pair `i` moving axis `i` (`+` first).
    pub fn for_alphabet(alphabet: &OrderedAlphabet, dimension: usize) -> Result<Self> {
        if dimension < 2 {
            return Err(Error::BadDimension(dimension));
        }
        if alphabet.len() != 2 * dimension {
            return Err(Error::StepAlphabetSize {
                dimension,
                expected: 2 * dimension,
                actual: alphabet.len(),
            });
        }
        let compass: Vec<Option<(usize, i64)>> = alphabet
            .symbols()
            .iter()
            .map(|s| {
                COMPASS
                    .iter()
                    .find(|(name, _, _)| name == s)
                    .map(|&(_, axis, dir)| (axis, dir))
            })
            .collect();
        let steps = if dimension <= 3 && compass.iter().all(Option::is_some) {
            compass.into_iter().map(Option::unwrap).collect()
        } else {
            (0..2 * dimension)
                .map(|letter| (letter / 2, if letter % 2 == 0 { 1 } else { -1 }))
                .collect()
        };
        Ok(StepTable { dimension, steps })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn step(&self, letter: usize) -> Result<(usize, i64)> {
        self.steps
            .get(letter)
            .copied()
            .ok_or(Error::LetterOutOfRange {
                letter,
                size: self.steps.len(),
            })
    }
}

/// The canonical step alphabet for a dimension: `N,S,E,W` in the plane,
/// `N,S,E,W,U,D` in space, `x1+,x1-,...` beyond.
pub fn step_alphabet(dimension: usize) -> Result<OrderedAlphabet> {
    if dimension < 2 {
        return Err(Error::BadDimension(dimension));
    }
    match dimension {
        2 => OrderedAlphabet::from_symbols(["N", "S", "E", "W"]),
        3 => OrderedAlphabet::from_symbols(["N", "S", "E", "W", "U", "D"]),
        _ => OrderedAlphabet::from_symbols((0..2 * dimension).map(|letter| {
            format!(
                "x{}{}",
                letter / 2 + 1,
                if letter % 2 == 0 { "+" } else { "-" }
            )
        })),
    }
}

pub(crate) fn endpoint_of_letters(letters: &[usize], table: &StepTable) -> Result<LatticePoint> {
    let mut coords = vec![0i64; table.dimension];
    for &letter in letters {
        let (axis, dir) = table.step(letter)?;
        coords[axis] += dir;
    }
    Ok(LatticePoint { coords })
}

/// Where a walk finishes, starting from the origin.
pub fn endpoint(word: &Word, table: &StepTable) -> Result<LatticePoint> {
    endpoint_of_letters(word.letters(), table)
}
