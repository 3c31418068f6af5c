//! Perfect-information Scrabble played to a target score.
//!
//! Both racks are visible, there are no blanks, exchanges or bingo bonuses.
//! A player wins immediately on reaching the target score (150 by default).
//! Otherwise the game ends on two consecutive passes, or when the bag is
//! empty and the player who just moved has emptied their rack; the higher
//! score then wins and equal scores draw.

mod board;
mod dictionary;
mod movegen;
mod placement;
mod scoring;

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;

pub use board::{Board, Bonus, BonusLayout, Direction, TileSet, STANDARD_SIZE};
pub use dictionary::{Dictionary, MAX_WORD_LEN, MIN_WORD_LEN};
pub use movegen::generate_placements;
pub use placement::{Placement, Rack, ScrabbleMove, Tile, RACK_SIZE};

use crate::error::{Error, Result};
use crate::game::{Game, MoveLabel, Outcome, PlayerId, PASS_LABEL};
use dictionary::Letter;

pub const DEFAULT_TARGET_SCORE: u32 = 150;

/// Word list shipped with the crate (about six thousand common words).
pub const DEFAULT_DICTIONARY: &str = include_str!("../../data/dictionary.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScrabbleState {
    board: Board,
    racks: [Rack; 2],
    bag: Vec<Letter>,
    scores: [u32; 2],
    to_move: PlayerId,
    consecutive_passes: u8,
    moves_made: u32,
}

impl ScrabbleState {
    /// Builds a position directly. `bag` holds letters A-Z.
    pub fn new(board: Board, racks: [Rack; 2], bag: &str, scores: [u32; 2], to_move: PlayerId) -> Result<Self> {
        let bag = bag
            .chars()
            .map(|ch| {
                ch.is_ascii_alphabetic()
                    .then(|| ch.to_ascii_uppercase() as u8 - b'A')
                    .ok_or_else(|| Error::input(format!("bag letter {ch:?} is not A-Z")))
            })
            .collect::<Result<_>>()?;
        let moves_made = if board.is_empty() && scores == [0, 0] { 0 } else { 1 };
        Ok(ScrabbleState { board, racks, bag, scores, to_move, consecutive_passes: 0, moves_made })
    }

    pub fn board(&self) -> &Board {
        &self.board
    }

    pub fn rack(&self, p: PlayerId) -> &Rack {
        &self.racks[p.index()]
    }

    pub fn score(&self, p: PlayerId) -> u32 {
        self.scores[p.index()]
    }

    pub fn scores(&self) -> [u32; 2] {
        self.scores
    }

    pub fn bag_len(&self) -> usize {
        self.bag.len()
    }

    pub fn to_move(&self) -> PlayerId {
        self.to_move
    }

    pub fn consecutive_passes(&self) -> u8 {
        self.consecutive_passes
    }

    pub fn set_consecutive_passes(&mut self, n: u8) {
        self.consecutive_passes = n;
        self.moves_made = self.moves_made.max(n as u32);
    }

    /// Letter counts over bag, both racks and board.
    pub fn tile_inventory(&self) -> [u32; 26] {
        let mut out = self.board.letter_counts();
        for &l in &self.bag {
            out[l as usize] += 1;
        }
        for rack in &self.racks {
            for (l, slot) in out.iter_mut().enumerate() {
                *slot += rack.count(l as u8) as u32;
            }
        }
        out
    }

    fn refill<R: Rng + ?Sized>(&mut self, p: PlayerId, rng: &mut R) {
        let rack = &mut self.racks[p.index()];
        while rack.len() < RACK_SIZE && !self.bag.is_empty() {
            let i = rng.random_range(0..self.bag.len());
            rack.add(self.bag.swap_remove(i));
        }
    }
}

/// Rules plus the shared, read-only resources of a Scrabble match.
#[derive(Clone, Debug)]
pub struct Scrabble {
    dict: Arc<Dictionary>,
    layout: Arc<BonusLayout>,
    tiles: TileSet,
    target_score: u32,
}

impl Scrabble {
    pub fn new(dict: Arc<Dictionary>) -> Self {
        Scrabble {
            dict,
            layout: Arc::new(BonusLayout::standard()),
            tiles: TileSet::standard(),
            target_score: DEFAULT_TARGET_SCORE,
        }
    }

    pub fn with_default_dictionary() -> Self {
        let dict = Dictionary::load(DEFAULT_DICTIONARY.as_bytes()).expect("bundled dictionary is valid");
        Scrabble::new(Arc::new(dict))
    }

    pub fn with_layout(mut self, layout: BonusLayout) -> Self {
        self.layout = Arc::new(layout);
        self
    }

    pub fn with_tiles(mut self, tiles: TileSet) -> Self {
        self.tiles = tiles;
        self
    }

    pub fn with_target_score(mut self, target: u32) -> Self {
        self.target_score = target;
        self
    }

    pub fn dictionary(&self) -> &Dictionary {
        &self.dict
    }

    pub fn tiles(&self) -> &TileSet {
        &self.tiles
    }

    pub fn target_score(&self) -> u32 {
        self.target_score
    }

    pub fn empty_board(&self) -> Board {
        Board::new(self.layout.clone())
    }

    /// Every legal placement for the player to move, then `Pass`.
    pub fn generate_moves(&self, state: &ScrabbleState) -> Vec<ScrabbleMove> {
        let mut moves: Vec<ScrabbleMove> =
            generate_placements(&state.board, state.rack(state.to_move), &self.dict)
                .into_iter()
                .map(ScrabbleMove::Place)
                .collect();
        moves.push(ScrabbleMove::Pass);
        moves
    }

    /// Points the player to move would earn for `p`; errors if `p` is illegal.
    pub fn score_placement(&self, state: &ScrabbleState, p: &Placement) -> Result<u32> {
        scoring::validate_and_score(&state.board, state.rack(state.to_move), &self.dict, &self.tiles, p)
    }

    pub fn evaluate_state(&self, state: &ScrabbleState) -> Outcome {
        if state.moves_made == 0 {
            return Outcome::Ongoing;
        }
        let last = state.to_move.opponent();
        for p in [last, state.to_move] {
            if state.score(p) >= self.target_score {
                return Outcome::Win(p);
            }
        }
        let exhausted = state.bag.is_empty() && state.rack(last).is_empty();
        if state.consecutive_passes >= 2 || exhausted {
            return match state.scores[0].cmp(&state.scores[1]) {
                std::cmp::Ordering::Greater => Outcome::Win(PlayerId::FIRST),
                std::cmp::Ordering::Less => Outcome::Win(PlayerId::SECOND),
                std::cmp::Ordering::Equal => Outcome::Draw,
            };
        }
        Outcome::Ongoing
    }
}

impl Game for Scrabble {
    type State = ScrabbleState;
    type Move = ScrabbleMove;

    fn domain(&self) -> &'static str {
        "scrabble"
    }

    fn new_game<R: Rng + ?Sized>(&self, rng: &mut R) -> ScrabbleState {
        let bag = self
            .tiles
            .counts()
            .iter()
            .enumerate()
            .flat_map(|(l, &n)| std::iter::repeat_n(l as Letter, n as usize))
            .collect();
        let mut state = ScrabbleState {
            board: self.empty_board(),
            racks: [Rack::default(); 2],
            bag,
            scores: [0; 2],
            to_move: PlayerId::FIRST,
            consecutive_passes: 0,
            moves_made: 0,
        };
        for p in PlayerId::BOTH {
            state.refill(p, rng);
        }
        state
    }

    fn legal_moves(&self, state: &ScrabbleState) -> Vec<ScrabbleMove> {
        self.generate_moves(state)
    }

    fn play<R: Rng + ?Sized>(&self, state: &mut ScrabbleState, mv: &ScrabbleMove, rng: &mut R) -> Result<()> {
        if self.evaluate_state(state).is_terminal() {
            return Err(Error::contract("move on a finished game"));
        }
        let mover = state.to_move;
        match mv {
            ScrabbleMove::Pass => {
                state.consecutive_passes = state.consecutive_passes.saturating_add(1);
            }
            ScrabbleMove::Place(p) => {
                let points = self.score_placement(state, p)?;
                for t in p.tiles() {
                    state.board.set(t.row as usize, t.col as usize, t.letter);
                    state.racks[mover.index()].take(t.letter);
                }
                state.scores[mover.index()] += points;
                state.consecutive_passes = 0;
                state.refill(mover, rng);
            }
        }
        state.moves_made += 1;
        state.to_move = mover.opponent();
        Ok(())
    }

    fn current_player(&self, state: &ScrabbleState) -> PlayerId {
        state.to_move
    }

    fn outcome(&self, state: &ScrabbleState) -> Outcome {
        self.evaluate_state(state)
    }

    fn move_label(&self, mv: &ScrabbleMove) -> MoveLabel {
        match mv {
            ScrabbleMove::Place(p) => MoveLabel::new(p.word()),
            ScrabbleMove::Pass => MoveLabel::new(PASS_LABEL),
        }
    }

    fn state_summary(&self, state: &ScrabbleState) -> BTreeMap<String, i64> {
        BTreeMap::from([
            ("score0".to_owned(), state.scores[0] as i64),
            ("score1".to_owned(), state.scores[1] as i64),
            ("bag".to_owned(), state.bag.len() as i64),
            ("board_tiles".to_owned(), state.board.tile_count() as i64),
        ])
    }
}
