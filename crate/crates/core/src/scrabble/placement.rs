use std::fmt;

use arrayvec::ArrayVec;

use super::board::Direction;
use super::dictionary::{letter_char, Letter, MAX_WORD_LEN};
use crate::error::{Error, Result};

pub const RACK_SIZE: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tile {
    pub letter: Letter,
    pub row: u8,
    pub col: u8,
}

impl Tile {
    pub fn new(letter: char, row: usize, col: usize) -> Self {
        Tile { letter: letter.to_ascii_uppercase() as u8 - b'A', row: row as u8, col: col as u8 }
    }

    pub fn letter_char(&self) -> char {
        letter_char(self.letter)
    }
}

/// A word laid on the board. `row`/`col` is the first cell of the main word,
/// which may be an existing tile.
///
/// A single tile that forms words both ways is always reported `Across`; a
/// `Down` single tile has no horizontal neighbours.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Placement {
    pub(crate) row: u8,
    pub(crate) col: u8,
    pub(crate) direction: Direction,
    pub(crate) word: ArrayVec<Letter, MAX_WORD_LEN>,
    pub(crate) tiles: ArrayVec<Tile, RACK_SIZE>,
}

impl Placement {
    pub fn new(word: &str, row: usize, col: usize, direction: Direction, tiles: &[Tile]) -> Result<Self> {
        let letters = super::dictionary::normalize(word)
            .ok_or_else(|| Error::input(format!("{word:?} is not a playable word")))?;
        if tiles.is_empty() || tiles.len() > RACK_SIZE {
            return Err(Error::input("a placement uses 1..=7 tiles"));
        }
        Ok(Placement {
            row: row as u8,
            col: col as u8,
            direction,
            word: letters.into_iter().collect(),
            tiles: tiles.iter().copied().collect(),
        })
    }

    pub fn word(&self) -> String {
        self.word.iter().map(|&l| letter_char(l)).collect()
    }

    pub fn word_len(&self) -> usize {
        self.word.len()
    }

    pub fn row(&self) -> usize {
        self.row as usize
    }

    pub fn col(&self) -> usize {
        self.col as usize
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// Tiles taken from the rack, in board order.
    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = match self.direction {
            Direction::Across => 'A',
            Direction::Down => 'D',
        };
        write!(f, "{}@{},{}{}", self.word(), self.row, self.col, d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ScrabbleMove {
    Place(Placement),
    Pass,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rack {
    counts: [u8; 26],
    len: u8,
}

impl Rack {
    pub fn from_letters(s: &str) -> Result<Self> {
        let mut rack = Rack::default();
        for ch in s.chars() {
            if !ch.is_ascii_alphabetic() {
                return Err(Error::input(format!("rack letter {ch:?} is not A-Z")));
            }
            if rack.len() == RACK_SIZE {
                return Err(Error::input("rack holds at most 7 tiles"));
            }
            rack.add(ch.to_ascii_uppercase() as u8 - b'A');
        }
        Ok(rack)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn count(&self, l: Letter) -> u8 {
        self.counts[l as usize]
    }

    pub(crate) fn counts(&self) -> [u8; 26] {
        self.counts
    }

    pub(crate) fn add(&mut self, l: Letter) {
        self.counts[l as usize] += 1;
        self.len += 1;
    }

    pub(crate) fn take(&mut self, l: Letter) -> bool {
        if self.counts[l as usize] == 0 {
            return false;
        }
        self.counts[l as usize] -= 1;
        self.len -= 1;
        true
    }

    pub fn letters(&self) -> String {
        (0..26u8)
            .flat_map(|l| std::iter::repeat_n(letter_char(l), self.count(l) as usize))
            .collect()
    }
}
