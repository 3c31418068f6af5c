//! Simulated playtesting for turn-based two-player games.
//!
//! Agents are budget-limited Monte-Carlo Tree Search players whose rollout
//! count stands in for skill. Simulated games are recorded as playtraces and
//! reduced to four families of design metrics: summaries, atoms, chains and
//! action spaces. Two domains ship with the crate: a perfect-information
//! Scrabble variant and Cardonomicon, a small creature-combat card game.

pub mod cardonomicon;
pub mod error;
pub mod game;
pub mod harness;
pub mod mcts;
pub mod metrics;
pub mod rng;
pub mod scalar;
pub mod scrabble;
pub mod toy;
pub mod trace;

pub use error::{Error, Result};
pub use game::{reward, Game, MoveLabel, Outcome, PlayerId};
pub use rng::{spawn_game_rng, GameRng};
pub use scalar::Scalar;

/// Search statistics in double precision, the default everywhere.
pub type SearchTree<M> = mcts::SearchTree<M, f64>;
pub type SearchNode<M> = mcts::SearchNode<M, f64>;
pub type MctsAgent = mcts::MctsAgent<f64>;
pub type ExplorationConstant = mcts::ExplorationConstant<f64>;

/// Single-precision search statistics.
pub type SearchTreeF32<M> = mcts::SearchTree<M, f32>;
pub type MctsAgentF32 = mcts::MctsAgent<f32>;
