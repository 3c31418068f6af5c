//! Brute-force Scrabble move enumerator: every dictionary word at every cell
//! and direction, checked letter by letter and rescored from scratch.

use std::collections::BTreeMap;
use std::sync::Arc;

use playsim::scrabble::{
    Board, Bonus, BonusLayout, Dictionary, Direction, Placement, Rack, Scrabble, ScrabbleMove, ScrabbleState,
    TileSet, DEFAULT_DICTIONARY,
};
use playsim::{spawn_game_rng, PlayerId};
use rand::seq::IndexedRandom;
use rand::Rng;

pub type Key = (String, usize, usize, Direction, Vec<(char, usize, usize)>);

fn step(dir: Direction) -> (usize, usize) {
    match dir {
        Direction::Across => (0, 1),
        Direction::Down => (1, 0),
    }
}

fn other(dir: Direction) -> Direction {
    match dir {
        Direction::Across => Direction::Down,
        Direction::Down => Direction::Across,
    }
}

pub struct Oracle<'a> {
    pub board: &'a Board,
    pub words: &'a [String],
    pub values: &'a TileSet,
}

impl Oracle<'_> {
    fn filled(&self, r: isize, c: isize) -> Option<char> {
        let n = self.board.size() as isize;
        if r < 0 || c < 0 || r >= n || c >= n {
            return None;
        }
        self.board.letter(r as usize, c as usize)
    }

    fn value(&self, ch: char) -> u32 {
        self.values.value_of(ch).unwrap()
    }

    /// The perpendicular word through a new tile and its score, if longer than one letter.
    fn cross(&self, r: usize, c: usize, ch: char, dir: Direction) -> Option<(String, u32)> {
        let (dr, dc) = step(dir);
        let (dr, dc) = (dr as isize, dc as isize);
        let (r, c) = (r as isize, c as isize);
        let mut k = 1;
        let mut before = String::new();
        while let Some(x) = self.filled(r - dr * k, c - dc * k) {
            before.insert(0, x);
            k += 1;
        }
        let mut after = String::new();
        k = 1;
        while let Some(x) = self.filled(r + dr * k, c + dc * k) {
            after.push(x);
            k += 1;
        }
        if before.is_empty() && after.is_empty() {
            return None;
        }
        let word = format!("{before}{ch}{after}");
        let bonus = self.board.bonus(r as usize, c as usize);
        let old: u32 = before.chars().chain(after.chars()).map(|x| self.value(x)).sum();
        let score = (old + self.value(ch) * bonus.letter_multiplier()) * bonus.word_multiplier();
        Some((word, score))
    }

    pub fn enumerate(&self, rack: &str) -> BTreeMap<Key, u32> {
        let n = self.board.size();
        let empty_board = (0..n).all(|r| (0..n).all(|c| !self.board.is_filled(r, c)));
        let mut out = BTreeMap::new();
        for dir in [Direction::Across, Direction::Down] {
            let (dr, dc) = step(dir);
            for r in 0..n {
                for c in 0..n {
                    'word: for w in self.words {
                        let len = w.len();
                        let (er, ec) = (r + dr * (len - 1), c + dc * (len - 1));
                        if er >= n || ec >= n {
                            continue;
                        }
                        let (r0, c0) = (r as isize, c as isize);
                        if self.filled(r0 - dr as isize, c0 - dc as isize).is_some()
                            || self.filled(er as isize + dr as isize, ec as isize + dc as isize).is_some()
                        {
                            continue;
                        }
                        let mut pool: Vec<char> = rack.chars().collect();
                        let mut tiles = Vec::new();
                        for (i, ch) in w.chars().enumerate() {
                            let (rr, cc) = (r + dr * i, c + dc * i);
                            match self.board.letter(rr, cc) {
                                Some(x) if x == ch => {}
                                Some(_) => continue 'word,
                                None => {
                                    let Some(pos) = pool.iter().position(|&x| x == ch) else {
                                        continue 'word;
                                    };
                                    pool.swap_remove(pos);
                                    tiles.push((ch, rr, cc));
                                }
                            }
                        }
                        if tiles.is_empty() {
                            continue;
                        }
                        let connected = if empty_board {
                            tiles.iter().any(|&(_, rr, cc)| (rr, cc) == (n / 2, n / 2))
                        } else {
                            tiles.iter().any(|&(_, rr, cc)| {
                                let (rr, cc) = (rr as isize, cc as isize);
                                [(-1, 0), (1, 0), (0, -1), (0, 1)]
                                    .iter()
                                    .any(|&(a, b)| self.filled(rr + a, cc + b).is_some())
                            })
                        };
                        if !connected {
                            continue;
                        }
                        if dir == Direction::Down && tiles.len() == 1 {
                            let (ch, rr, cc) = tiles[0];
                            if self.cross(rr, cc, ch, Direction::Across).is_some() {
                                continue;
                            }
                        }
                        let mut main = 0;
                        let mut mult = 1;
                        for (i, ch) in w.chars().enumerate() {
                            let (rr, cc) = (r + dr * i, c + dc * i);
                            if self.board.is_filled(rr, cc) {
                                main += self.value(ch);
                            } else {
                                let b = self.board.bonus(rr, cc);
                                main += self.value(ch) * b.letter_multiplier();
                                mult *= b.word_multiplier();
                            }
                        }
                        let mut score = main * mult;
                        for &(ch, rr, cc) in &tiles {
                            if let Some((cw, cs)) = self.cross(rr, cc, ch, other(dir)) {
                                if !self.words.contains(&cw) {
                                    continue 'word;
                                }
                                score += cs;
                            }
                        }
                        out.insert((w.clone(), r, c, dir, tiles), score);
                    }
                }
            }
        }
        out
    }
}

pub fn key(p: &Placement) -> Key {
    let tiles = p
        .tiles()
        .iter()
        .map(|t| (t.letter_char(), t.row as usize, t.col as usize))
        .collect();
    (p.word(), p.row(), p.col(), p.direction(), tiles)
}

fn random_layout<R: Rng>(n: usize, rng: &mut R) -> BonusLayout {
    let kinds = [
        Bonus::None,
        Bonus::None,
        Bonus::None,
        Bonus::DoubleLetter,
        Bonus::TripleLetter,
        Bonus::DoubleWord,
        Bonus::TripleWord,
    ];
    let cells = (0..n * n).map(|_| *kinds.choose(rng).unwrap()).collect();
    BonusLayout::from_cells(n, cells).unwrap()
}

fn random_rack<R: Rng>(words: &[String], rng: &mut R) -> String {
    let letters: Vec<char> = words.iter().flat_map(|w| w.chars()).collect();
    let mut rack: String = words.choose(rng).unwrap().chars().filter(|_| rng.random_bool(0.8)).collect();
    let len = rng.random_range(rack.len().max(1)..=7);
    while rack.len() < len {
        rack.push(*letters.choose(rng).unwrap());
    }
    rack
}

#[derive(Debug, Default)]
pub struct OracleStats {
    pub states: usize,
    pub with_moves: usize,
    pub total_moves: usize,
    pub mismatches: usize,
    pub first_mismatch: Option<String>,
}

/// Compares generator and scorer against [`Oracle`] on at least `min_states`
/// random positions: 4x4 to 7x7 boards, random bonus layouts and 50-word
/// dictionaries drawn from the shipped word list.
pub fn compare(min_states: usize, seed: u64) -> OracleStats {
    let pool: Vec<String> = DEFAULT_DICTIONARY
        .lines()
        .map(str::trim)
        .filter(|w| (2..=5).contains(&w.len()))
        .map(str::to_owned)
        .collect();
    let mut rng = spawn_game_rng(seed, 0);
    let mut stats = OracleStats::default();
    while stats.states < min_states {
        let mut words: Vec<String> = pool.choose_multiple(&mut rng, 50).cloned().collect();
        words.sort();
        let dict = Arc::new(Dictionary::from_words(words.iter().map(String::as_str)));
        let n = rng.random_range(4..=7);
        let layout = random_layout(n, &mut rng);
        let game = Scrabble::new(dict).with_layout(layout);
        let mut board = game.empty_board();
        let plies = rng.random_range(0..=6);
        for _ in 0..=plies {
            let rack = random_rack(&words, &mut rng);
            let oracle = Oracle { board: &board, words: &words, values: game.tiles() };
            let expected = oracle.enumerate(&rack);
            let state = ScrabbleState::new(
                board.clone(),
                [Rack::from_letters(&rack).unwrap(), Rack::default()],
                "",
                [0, 0],
                PlayerId::FIRST,
            )
            .unwrap();
            let moves = game.generate_moves(&state);
            let mut got = BTreeMap::new();
            let mut clean = moves.last() == Some(&ScrabbleMove::Pass);
            for mv in &moves[..moves.len().saturating_sub(1)] {
                match mv {
                    ScrabbleMove::Place(p) => {
                        let score = game.score_placement(&state, p).unwrap_or(u32::MAX);
                        clean &= got.insert(key(p), score).is_none();
                    }
                    ScrabbleMove::Pass => clean = false,
                }
            }
            stats.states += 1;
            if !clean || got != expected {
                stats.mismatches += 1;
                if stats.first_mismatch.is_none() {
                    let missing: Vec<_> = expected.iter().filter(|(k, v)| got.get(*k) != Some(*v)).take(3).collect();
                    let extra: Vec<_> = got.iter().filter(|(k, v)| expected.get(*k) != Some(*v)).take(3).collect();
                    stats.first_mismatch =
                        Some(format!("rack {rack} on\n{board}\nmissing {missing:?}\nextra {extra:?}"));
                }
            }
            stats.total_moves += expected.len();
            if expected.is_empty() {
                break;
            }
            stats.with_moves += 1;
            let (k, _) = expected.iter().nth(rng.random_range(0..expected.len())).unwrap();
            board.write_word(k.1, k.2, k.3, &k.0).unwrap();
        }
    }
    stats
}
