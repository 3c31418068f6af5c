//! Design metrics computed from playtraces.
//!
//! * summaries: win rates and game lengths per pairing
//! * atoms: how often each action is chosen when it is available
//! * chains: frequent combinations of actions within a turn (combos) and
//!   across an opponent's turn and the reply (counters)
//! * action spaces: how many options a player has at each turn
//!
//! Every report depends only on the multiset of traces, never their order.
//! Bookkeeping labels (`pass`, `end`) are left out of atoms, chains and
//! unique-label counts.

mod action_space;
mod apriori;
mod atoms;
mod chains;
mod summary;

use serde::{Deserialize, Serialize};

use crate::game::PlayerId;
use crate::trace::{GameTrace, TurnRecord};

pub use action_space::{action_space_report, ActionSpaceRow};
pub use apriori::{mine_frequent_itemsets, FrequentItemset};
pub use atoms::{atom_report, AtomRow, Projection};
pub use chains::{chain_report, chain_transactions, ChainKind, ChainReport, ChainRow, OPP_TAG, SELF_TAG};
pub use summary::{summarize, PairingSummary};

pub const DEFAULT_MIN_SUPPORT: f64 = 0.05;

/// How per-player statistics are bucketed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Grouping {
    /// By the rollout budget of the player who acted.
    #[default]
    BySkill,
    /// Everything in one bucket.
    Pooled,
}

impl Grouping {
    pub(crate) fn key(self, trace: &GameTrace, player: PlayerId) -> Option<u32> {
        match self {
            Grouping::BySkill => Some(trace.budget_of(player)),
            Grouping::Pooled => None,
        }
    }
}

/// Non-bookkeeping labels chosen during a turn, in order.
pub(crate) fn chosen_labels(turn: &TurnRecord) -> impl Iterator<Item = &str> {
    turn.moves
        .iter()
        .filter(|m| !m.chosen.is_bookkeeping())
        .map(|m| m.chosen.as_str())
}

/// Median of a non-empty sample; the mean of the middle pair for even sizes.
pub(crate) fn median(values: &mut [u64]) -> f64 {
    values.sort_unstable();
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2] as f64
    } else {
        (values[n / 2 - 1] + values[n / 2]) as f64 / 2.0
    }
}

pub(crate) fn mean(values: &[u64]) -> f64 {
    values.iter().sum::<u64>() as f64 / values.len() as f64
}

/// Zero when `den` is zero.
pub(crate) fn ratio(num: u64, den: u64) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}
