//! The two-player, perfect-information game contract.
//!
//! Both shipped domains implement [`Game`] and the search agent only talks to
//! this trait. A game object carries the immutable rule resources (dictionary,
//! card set) and is shared read-only across worker threads; states are plain
//! values owned by whoever is simulating.

use std::collections::BTreeMap;
use std::fmt::{self, Debug};
use std::hash::Hash;

use rand::seq::IndexedRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Seat index. Player 0 always takes the first turn.
#[derive(
    Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(try_from = "u8", into = "u8")]
pub struct PlayerId(u8);

impl PlayerId {
    pub const FIRST: PlayerId = PlayerId(0);
    pub const SECOND: PlayerId = PlayerId(1);
    pub const BOTH: [PlayerId; 2] = [PlayerId::FIRST, PlayerId::SECOND];

    pub fn new(index: usize) -> Result<Self> {
        match index {
            0 | 1 => Ok(PlayerId(index as u8)),
            _ => Err(Error::input(format!("player index {index} is not 0 or 1"))),
        }
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn opponent(self) -> PlayerId {
        PlayerId(1 - self.0)
    }
}

impl TryFrom<u8> for PlayerId {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        PlayerId::new(v as usize)
    }
}

impl From<PlayerId> for u8 {
    fn from(p: PlayerId) -> u8 {
        p.0
    }
}

impl fmt::Display for PlayerId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Win(PlayerId),
    Draw,
    Ongoing,
}

impl Outcome {
    #[inline]
    pub fn is_terminal(self) -> bool {
        !matches!(self, Outcome::Ongoing)
    }

    /// +1 for a win, -1 for a loss, 0 for a draw; `None` while the game is running.
    #[inline]
    pub fn reward_for(self, player: PlayerId) -> Option<i32> {
        match self {
            Outcome::Win(w) if w == player => Some(1),
            Outcome::Win(_) => Some(-1),
            Outcome::Draw => Some(0),
            Outcome::Ongoing => None,
        }
    }

    pub fn winner(self) -> Option<PlayerId> {
        match self {
            Outcome::Win(p) => Some(p),
            _ => None,
        }
    }
}

/// Label of a Scrabble pass.
pub const PASS_LABEL: &str = "pass";
/// Label of a Cardonomicon end-of-turn.
pub const END_TURN_LABEL: &str = "end";

/// Aggregation key for a move: a word, `play:<card>`, `attack:<a>><t>`, ...
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MoveLabel(String);

impl MoveLabel {
    pub fn new(text: impl Into<String>) -> Self {
        MoveLabel(text.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Pass and end-of-turn moves carry no design content and are left out of
    /// atom, chain and uniqueness counts.
    pub fn is_bookkeeping(&self) -> bool {
        self.0 == PASS_LABEL || self.0 == END_TURN_LABEL
    }
}

impl fmt::Display for MoveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for MoveLabel {
    fn from(s: &str) -> Self {
        MoveLabel(s.to_owned())
    }
}

impl AsRef<str> for MoveLabel {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// Domain contract consumed by the search agent and the experiment runner.
///
/// `legal_moves` must be non-empty for every non-terminal state and its order
/// must depend on the state only. `play` must consume randomness only from the
/// supplied generator.
pub trait Game: Send + Sync {
    type State: Clone + Debug + Send + Sync;
    type Move: Clone + Debug + Eq + Hash + Send + Sync;

    /// Short identifier written into traces (`scrabble`, `cardonomicon`).
    fn domain(&self) -> &'static str;

    fn new_game<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::State;

    fn legal_moves(&self, state: &Self::State) -> Vec<Self::Move>;

    /// Applies `mv` in place. Fails with [`Error::Contract`] if the move is not legal.
    fn play<R: Rng + ?Sized>(
        &self,
        state: &mut Self::State,
        mv: &Self::Move,
        rng: &mut R,
    ) -> Result<()>;

    fn current_player(&self, state: &Self::State) -> PlayerId;

    fn outcome(&self, state: &Self::State) -> Outcome;

    fn move_label(&self, mv: &Self::Move) -> MoveLabel;

    /// Scalar snapshot recorded at the end of every turn.
    fn state_summary(&self, state: &Self::State) -> BTreeMap<String, i64>;

    fn apply_move<R: Rng + ?Sized>(
        &self,
        state: &Self::State,
        mv: &Self::Move,
        rng: &mut R,
    ) -> Result<Self::State> {
        let mut next = state.clone();
        self.play(&mut next, mv, rng)?;
        Ok(next)
    }

    /// Uniformly random legal move, `None` on terminal states.
    fn random_move<R: Rng + ?Sized>(&self, state: &Self::State, rng: &mut R) -> Option<Self::Move> {
        if self.outcome(state).is_terminal() {
            return None;
        }
        self.legal_moves(state).choose(rng).cloned()
    }
}

/// Terminal reward of `player`: +1 win, -1 loss, 0 draw.
pub fn reward<G: Game>(game: &G, state: &G::State, player: PlayerId) -> Result<i32> {
    game.outcome(state)
        .reward_for(player)
        .ok_or_else(|| Error::contract("reward requested for a non-terminal state"))
}
