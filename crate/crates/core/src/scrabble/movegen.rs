//! Legal placement generation.
//!
//! Each row (and then each column) is treated as a line. For every empty
//! cell we precompute which letters keep the perpendicular word valid, and
//! which cells are anchors (empty and next to a tile, or the centre on an
//! empty board). A depth-first walk of the dictionary trie from every viable
//! start cell then lays rack tiles and absorbs existing tiles; a word is kept
//! when it ends against an empty cell or the edge, uses at least one rack tile
//! and covers an anchor.

use arrayvec::ArrayVec;

use super::board::{Board, Direction, EMPTY, STANDARD_SIZE};
use super::dictionary::{Dictionary, Letter, NO_NODE};
use super::placement::{Placement, Rack, Tile, RACK_SIZE};

const ALL_LETTERS: u32 = (1 << 26) - 1;

#[inline]
fn cell(dir: Direction, line: usize, pos: usize) -> (usize, usize) {
    match dir {
        Direction::Across => (line, pos),
        Direction::Down => (pos, line),
    }
}

/// Letters that may go in the empty cell `(r, c)` without breaking the word
/// formed in direction `perp`, and whether such a word exists at all.
fn cross_check(board: &Board, dict: &Dictionary, r: usize, c: usize, perp: Direction) -> (u32, bool) {
    let n = board.size();
    let (dr, dc) = perp.step();
    let mut before: ArrayVec<Letter, STANDARD_SIZE> = ArrayVec::new();
    let (mut rr, mut cc) = (r, c);
    while rr >= dr && cc >= dc && board.is_filled(rr - dr, cc - dc) {
        rr -= dr;
        cc -= dc;
        before.push(board.raw(rr, cc));
    }
    before.reverse();
    let mut after: ArrayVec<Letter, STANDARD_SIZE> = ArrayVec::new();
    let (mut rr, mut cc) = (r + dr, c + dc);
    while rr < n && cc < n && board.is_filled(rr, cc) {
        after.push(board.raw(rr, cc));
        rr += dr;
        cc += dc;
    }
    if before.is_empty() && after.is_empty() {
        return (ALL_LETTERS, false);
    }
    let Some(node) = dict.walk(dict.root(), before.iter().copied()) else {
        return (0, true);
    };
    let mut mask = 0;
    for l in 0..26u8 {
        let next = dict.child(node, l);
        if next == NO_NODE {
            continue;
        }
        if dict.walk(next, after.iter().copied()).is_some_and(|t| dict.is_terminal(t)) {
            mask |= 1 << l;
        }
    }
    (mask, true)
}

fn anchors(board: &Board) -> Vec<bool> {
    let n = board.size();
    let mut out = vec![false; n * n];
    if board.is_empty() {
        let (r, c) = board.layout().center();
        out[r * n + c] = true;
        return out;
    }
    for r in 0..n {
        for c in 0..n {
            if board.is_filled(r, c) {
                continue;
            }
            let near = (r > 0 && board.is_filled(r - 1, c))
                || (r + 1 < n && board.is_filled(r + 1, c))
                || (c > 0 && board.is_filled(r, c - 1))
                || (c + 1 < n && board.is_filled(r, c + 1));
            out[r * n + c] = near;
        }
    }
    out
}

struct Line {
    letters: [u8; STANDARD_SIZE],
    masks: [u32; STANDARD_SIZE],
    has_cross: [bool; STANDARD_SIZE],
    anchor: [bool; STANDARD_SIZE],
    /// Rack tiles needed from each position to cover the next anchor.
    reach: [usize; STANDARD_SIZE],
    len: usize,
}

struct Walker<'a> {
    dict: &'a Dictionary,
    line: &'a Line,
    dir: Direction,
    line_index: usize,
    start: usize,
    rack: [u8; 26],
    rack_mask: u32,
    rack_len: usize,
    word: ArrayVec<Letter, STANDARD_SIZE>,
    placed: ArrayVec<(usize, Letter), RACK_SIZE>,
    out: &'a mut Vec<Placement>,
}

impl Walker<'_> {
    fn walk(&mut self, pos: usize, node: u32, touched_anchor: bool) {
        let line = self.line;
        let at_end = pos == line.len || line.letters[pos] == EMPTY;
        if at_end && touched_anchor && self.word.len() >= 2 && self.dict.is_terminal(node) {
            self.emit();
        }
        if pos == line.len {
            return;
        }
        let existing = line.letters[pos];
        if existing != EMPTY {
            let next = self.dict.child(node, existing);
            if next != NO_NODE {
                self.word.push(existing);
                self.walk(pos + 1, next, touched_anchor);
                self.word.pop();
            }
            return;
        }
        let left = self.rack_len - self.placed.len();
        if left == 0 || (!touched_anchor && line.reach[pos] > left) {
            return;
        }
        let mut candidates = line.masks[pos] & self.rack_mask & self.dict.child_mask(node);
        while candidates != 0 {
            let l = candidates.trailing_zeros() as u8;
            candidates &= candidates - 1;
            let next = self.dict.child(node, l);
            self.take(l);
            self.word.push(l);
            self.placed.push((pos, l));
            self.walk(pos + 1, next, touched_anchor || line.anchor[pos]);
            self.placed.pop();
            self.word.pop();
            self.give_back(l);
        }
    }

    #[inline]
    fn take(&mut self, l: Letter) {
        self.rack[l as usize] -= 1;
        if self.rack[l as usize] == 0 {
            self.rack_mask &= !(1 << l);
        }
    }

    #[inline]
    fn give_back(&mut self, l: Letter) {
        self.rack[l as usize] += 1;
        self.rack_mask |= 1 << l;
    }

    fn emit(&mut self) {
        // A lone tile with neighbours both ways is reported once, as Across.
        if self.dir == Direction::Down && self.placed.len() == 1 {
            let (pos, _) = self.placed[0];
            if self.line.has_cross[pos] {
                return;
            }
        }
        let (row, col) = cell(self.dir, self.line_index, self.start);
        let tiles = self
            .placed
            .iter()
            .map(|&(pos, letter)| {
                let (r, c) = cell(self.dir, self.line_index, pos);
                Tile { letter, row: r as u8, col: c as u8 }
            })
            .collect();
        self.out.push(Placement {
            row: row as u8,
            col: col as u8,
            direction: self.dir,
            word: self.word.clone(),
            tiles,
        });
    }
}

fn rack_mask(rack: &Rack) -> u32 {
    (0..26u8).filter(|&l| rack.count(l) > 0).fold(0, |m, l| m | 1 << l)
}

/// Every legal placement of tiles from `rack` on `board`, across lines first.
pub fn generate_placements(board: &Board, rack: &Rack, dict: &Dictionary) -> Vec<Placement> {
    let mut out = Vec::new();
    if rack.is_empty() || dict.is_empty() {
        return out;
    }
    let n = board.size();
    let anchor = anchors(board);
    for dir in [Direction::Across, Direction::Down] {
        for line_index in 0..n {
            let mut line = Line {
                letters: [EMPTY; STANDARD_SIZE],
                masks: [0; STANDARD_SIZE],
                has_cross: [false; STANDARD_SIZE],
                anchor: [false; STANDARD_SIZE],
                reach: [usize::MAX; STANDARD_SIZE],
                len: n,
            };
            let mut any_anchor = false;
            for pos in 0..n {
                let (r, c) = cell(dir, line_index, pos);
                line.letters[pos] = board.raw(r, c);
                line.anchor[pos] = anchor[r * n + c];
                any_anchor |= line.anchor[pos];
                if line.letters[pos] == EMPTY {
                    let (mask, has) = cross_check(board, dict, r, c, dir.other());
                    line.masks[pos] = mask;
                    line.has_cross[pos] = has;
                }
            }
            if !any_anchor {
                continue;
            }
            // Empty cells needed to reach the nearest anchor at or after each position.
            let reach = &mut line.reach;
            let mut next_anchor_cost = usize::MAX;
            for pos in (0..n).rev() {
                if line.anchor[pos] {
                    next_anchor_cost = 1;
                } else if line.letters[pos] == EMPTY && next_anchor_cost != usize::MAX {
                    next_anchor_cost += 1;
                }
                reach[pos] = next_anchor_cost;
            }
            for start in 0..n {
                if start > 0 && line.letters[start - 1] != EMPTY {
                    continue;
                }
                if line.reach[start] > rack.len() {
                    continue;
                }
                let mut walker = Walker {
                    dict,
                    line: &line,
                    dir,
                    line_index,
                    start,
                    rack: rack.counts(),
                    rack_mask: rack_mask(rack),
                    rack_len: rack.len(),
                    word: ArrayVec::new(),
                    placed: ArrayVec::new(),
                    out: &mut out,
                };
                walker.walk(start, dict.root(), false);
            }
        }
    }
    out
}
