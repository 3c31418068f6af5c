//! Placement validation and scoring.

use arrayvec::ArrayVec;

use super::board::{Board, Direction, TileSet, STANDARD_SIZE};
use super::dictionary::{letter_char, Dictionary, Letter};
use super::placement::{Placement, Rack, Tile};
use crate::error::{Error, Result};

fn illegal(p: &Placement, why: &str) -> Error {
    Error::contract(format!("illegal placement {p}: {why}"))
}

struct View<'a> {
    board: &'a Board,
    tiles: &'a [Tile],
}

impl View<'_> {
    fn new_tile(&self, r: usize, c: usize) -> Option<Letter> {
        self.tiles
            .iter()
            .find(|t| t.row as usize == r && t.col as usize == c)
            .map(|t| t.letter)
    }

    fn at(&self, r: usize, c: usize) -> Option<Letter> {
        self.new_tile(r, c).or_else(|| {
            let v = self.board.raw(r, c);
            (v != super::board::EMPTY).then_some(v)
        })
    }

    /// Maximal run through `(r, c)` along `dir`: its start cell and letters.
    fn run(&self, r: usize, c: usize, dir: Direction) -> ((usize, usize), ArrayVec<Letter, STANDARD_SIZE>) {
        let n = self.board.size();
        let (dr, dc) = dir.step();
        let (mut sr, mut sc) = (r, c);
        while sr >= dr && sc >= dc && self.at(sr - dr, sc - dc).is_some() {
            sr -= dr;
            sc -= dc;
        }
        let mut letters = ArrayVec::new();
        let (mut rr, mut cc) = (sr, sc);
        while rr < n && cc < n {
            match self.at(rr, cc) {
                Some(l) => letters.push(l),
                None => break,
            }
            rr += dr;
            cc += dc;
        }
        ((sr, sc), letters)
    }

    /// Score of the run starting at `start`, with bonuses on new tiles only.
    fn score_run(&self, start: (usize, usize), len: usize, dir: Direction, values: &TileSet) -> u32 {
        let (dr, dc) = dir.step();
        let mut sum = 0;
        let mut word_mult = 1;
        for i in 0..len {
            let (r, c) = (start.0 + dr * i, start.1 + dc * i);
            let l = self.at(r, c).expect("run cells are filled");
            if self.new_tile(r, c).is_some() {
                let bonus = self.board.bonus(r, c);
                sum += values.value(l) * bonus.letter_multiplier();
                word_mult *= bonus.word_multiplier();
            } else {
                sum += values.value(l);
            }
        }
        sum * word_mult
    }
}

/// Checks that `p` is legal for a player holding `rack` and returns its score:
/// the main word plus every new cross word, letter and word bonuses counted
/// only on cells covered by this placement.
pub fn validate_and_score(
    board: &Board,
    rack: &Rack,
    dict: &Dictionary,
    values: &TileSet,
    p: &Placement,
) -> Result<u32> {
    let n = board.size();
    let tiles = p.tiles();
    if tiles.is_empty() {
        return Err(illegal(p, "no tiles placed"));
    }
    let mut remaining = *rack;
    for (i, t) in tiles.iter().enumerate() {
        let (r, c) = (t.row as usize, t.col as usize);
        if r >= n || c >= n {
            return Err(illegal(p, "tile off the board"));
        }
        if board.is_filled(r, c) {
            return Err(illegal(p, "tile on an occupied cell"));
        }
        if tiles[..i].iter().any(|o| o.row == t.row && o.col == t.col) {
            return Err(illegal(p, "two tiles on one cell"));
        }
        let in_line = match p.direction() {
            Direction::Across => r == p.row(),
            Direction::Down => c == p.col(),
        };
        if !in_line {
            return Err(illegal(p, "tiles not in one line"));
        }
        if !remaining.take(t.letter) {
            return Err(illegal(p, &format!("rack has no {}", letter_char(t.letter))));
        }
    }

    let view = View { board, tiles };
    let dir = p.direction();
    let (start, main) = view.run(tiles[0].row as usize, tiles[0].col as usize, dir);
    if start != (p.row(), p.col()) || main.as_slice() != p.word.as_slice() {
        return Err(illegal(p, "word does not match the board"));
    }
    let (dr, dc) = dir.step();
    let covered = |t: &Tile| {
        let (r, c) = (t.row as usize, t.col as usize);
        r >= start.0 && c >= start.1 && (r - start.0) * dr + (c - start.1) * dc < main.len()
    };
    if !tiles.iter().all(covered) {
        return Err(illegal(p, "tiles are not contiguous"));
    }
    if main.len() < 2 || !dict.contains_letters(&main) {
        return Err(illegal(p, "main word not in dictionary"));
    }

    let mut score = view.score_run(start, main.len(), dir, values);
    for t in tiles {
        let (cstart, cross) = view.run(t.row as usize, t.col as usize, dir.other());
        if cross.len() < 2 {
            continue;
        }
        if tiles.len() == 1 && dir == Direction::Down {
            return Err(illegal(p, "a lone tile with a horizontal word is an Across play"));
        }
        if !dict.contains_letters(&cross) {
            return Err(illegal(p, "cross word not in dictionary"));
        }
        score += view.score_run(cstart, cross.len(), dir.other(), values);
    }

    let connected = if board.is_empty() {
        let center = board.layout().center();
        tiles.iter().any(|t| (t.row as usize, t.col as usize) == center)
    } else {
        tiles.iter().any(|t| {
            let (r, c) = (t.row as usize, t.col as usize);
            (r > 0 && board.is_filled(r - 1, c))
                || (r + 1 < n && board.is_filled(r + 1, c))
                || (c > 0 && board.is_filled(r, c - 1))
                || (c + 1 < n && board.is_filled(r, c + 1))
        })
    };
    if !connected {
        return Err(illegal(p, if board.is_empty() { "first word must cover the centre" } else { "not connected" }));
    }
    Ok(score)
}
