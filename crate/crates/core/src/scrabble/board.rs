use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::dictionary::{letter_char, letters_of, Letter};
use crate::error::{Error, Result};

pub const STANDARD_SIZE: usize = 15;
pub const EMPTY: u8 = u8::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Across,
    Down,
}

impl Direction {
    pub fn step(self) -> (usize, usize) {
        match self {
            Direction::Across => (0, 1),
            Direction::Down => (1, 0),
        }
    }

    pub fn other(self) -> Direction {
        match self {
            Direction::Across => Direction::Down,
            Direction::Down => Direction::Across,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Bonus {
    #[default]
    None,
    DoubleLetter,
    TripleLetter,
    DoubleWord,
    TripleWord,
}

impl Bonus {
    pub fn letter_multiplier(self) -> u32 {
        match self {
            Bonus::DoubleLetter => 2,
            Bonus::TripleLetter => 3,
            _ => 1,
        }
    }

    pub fn word_multiplier(self) -> u32 {
        match self {
            Bonus::DoubleWord => 2,
            Bonus::TripleWord => 3,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BonusLayout {
    size: usize,
    cells: Vec<Bonus>,
}

impl BonusLayout {
    /// The standard 15x15 board.
    pub fn standard() -> Self {
        // Top-left quadrant (rows and columns 0..=7); the rest is mirrored.
        const TW: &[(usize, usize)] = &[(0, 0), (0, 7), (7, 0)];
        const DW: &[(usize, usize)] = &[(1, 1), (2, 2), (3, 3), (4, 4), (7, 7)];
        const TL: &[(usize, usize)] = &[(1, 5), (5, 1), (5, 5)];
        const DL: &[(usize, usize)] =
            &[(0, 3), (2, 6), (3, 0), (3, 7), (6, 2), (6, 6), (7, 3)];
        let n = STANDARD_SIZE;
        let mut cells = vec![Bonus::None; n * n];
        for (list, bonus) in [
            (TW, Bonus::TripleWord),
            (DW, Bonus::DoubleWord),
            (TL, Bonus::TripleLetter),
            (DL, Bonus::DoubleLetter),
        ] {
            for &(r, c) in list {
                for (rr, cc) in [(r, c), (r, n - 1 - c), (n - 1 - r, c), (n - 1 - r, n - 1 - c)] {
                    cells[rr * n + cc] = bonus;
                }
            }
        }
        BonusLayout { size: n, cells }
    }

    /// No bonuses except a double-word centre.
    pub fn plain(size: usize) -> Self {
        let mut cells = vec![Bonus::None; size * size];
        cells[(size / 2) * size + size / 2] = Bonus::DoubleWord;
        BonusLayout { size, cells }
    }

    pub fn from_cells(size: usize, cells: Vec<Bonus>) -> Result<Self> {
        if size == 0 || size > STANDARD_SIZE || cells.len() != size * size {
            return Err(Error::input(format!(
                "bonus layout needs {size}x{size} cells and size in 1..=15"
            )));
        }
        Ok(BonusLayout { size, cells })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn at(&self, row: usize, col: usize) -> Bonus {
        self.cells[row * self.size + col]
    }

    pub fn center(&self) -> (usize, usize) {
        (self.size / 2, self.size / 2)
    }
}

/// Letter scores and the initial bag contents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TileSet {
    values: [u8; 26],
    counts: [u8; 26],
}

impl TileSet {
    /// English letter values and distribution without blanks: 98 tiles.
    pub fn standard() -> Self {
        const VALUES: [u8; 26] = [
            1, 3, 3, 2, 1, 4, 2, 4, 1, 8, 5, 1, 3, 1, 1, 3, 10, 1, 1, 1, 1, 4, 4, 8, 4, 10,
        ];
        const COUNTS: [u8; 26] = [
            9, 2, 2, 4, 12, 2, 3, 2, 9, 1, 1, 4, 2, 6, 8, 2, 1, 6, 4, 6, 4, 2, 2, 1, 2, 1,
        ];
        TileSet { values: VALUES, counts: COUNTS }
    }

    pub fn new(values: [u8; 26], counts: [u8; 26]) -> Self {
        TileSet { values, counts }
    }

    #[inline]
    pub fn value(&self, l: Letter) -> u32 {
        self.values[l as usize] as u32
    }

    pub fn value_of(&self, c: char) -> Option<u32> {
        c.is_ascii_alphabetic().then(|| self.value(c.to_ascii_uppercase() as u8 - b'A'))
    }

    pub fn counts(&self) -> &[u8; 26] {
        &self.counts
    }

    pub fn total_tiles(&self) -> usize {
        self.counts.iter().map(|&c| c as usize).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Board {
    size: usize,
    cells: Vec<u8>,
    layout: Arc<BonusLayout>,
    tiles: usize,
}

impl Board {
    pub fn new(layout: Arc<BonusLayout>) -> Self {
        let size = layout.size();
        Board { size, cells: vec![EMPTY; size * size], layout, tiles: 0 }
    }

    pub fn standard() -> Self {
        Board::new(Arc::new(BonusLayout::standard()))
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn layout(&self) -> &BonusLayout {
        &self.layout
    }

    #[inline]
    pub fn bonus(&self, row: usize, col: usize) -> Bonus {
        self.layout.at(row, col)
    }

    #[inline]
    pub(crate) fn raw(&self, row: usize, col: usize) -> u8 {
        self.cells[row * self.size + col]
    }

    #[inline]
    pub fn letter(&self, row: usize, col: usize) -> Option<char> {
        let v = self.raw(row, col);
        (v != EMPTY).then(|| letter_char(v))
    }

    #[inline]
    pub fn is_filled(&self, row: usize, col: usize) -> bool {
        self.raw(row, col) != EMPTY
    }

    pub fn is_empty(&self) -> bool {
        self.tiles == 0
    }

    pub fn tile_count(&self) -> usize {
        self.tiles
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, l: Letter) {
        let cell = &mut self.cells[row * self.size + col];
        debug_assert_eq!(*cell, EMPTY, "tiles never move once placed");
        *cell = l;
        self.tiles += 1;
    }

    /// Letters currently on the board as counts per letter.
    pub fn letter_counts(&self) -> [u32; 26] {
        let mut out = [0; 26];
        for &c in &self.cells {
            if c != EMPTY {
                out[c as usize] += 1;
            }
        }
        out
    }

    /// Writes `word` onto empty cells or over matching letters, for setting up
    /// positions. No dictionary or connectivity check is made.
    pub fn write_word(&mut self, row: usize, col: usize, dir: Direction, word: &str) -> Result<()> {
        let (dr, dc) = dir.step();
        for (i, l) in letters_of(word).into_iter().enumerate() {
            let (r, c) = (row + dr * i, col + dc * i);
            if r >= self.size || c >= self.size || l >= 26 {
                return Err(Error::input(format!("{word} does not fit at ({row},{col})")));
            }
            match self.raw(r, c) {
                EMPTY => self.set(r, c, l),
                x if x == l => {}
                _ => return Err(Error::input(format!("{word} clashes at ({r},{c})"))),
            }
        }
        Ok(())
    }
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.size {
            for c in 0..self.size {
                let ch = self.letter(r, c).unwrap_or('.');
                write!(f, "{ch}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
