use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{mean, median, ratio};
use crate::error::{Error, Result};
use crate::game::{Outcome, PlayerId};
use crate::trace::GameTrace;

/// Results of one ordered pairing. Player 0 always takes the first turn, so
/// `first_player_win_rate` equals `p0_win_rate`; both are kept for readability.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairingSummary {
    pub p0_rollouts: u32,
    pub p1_rollouts: u32,
    pub games: u64,
    pub p0_wins: u64,
    pub p1_wins: u64,
    pub draws: u64,
    pub p0_win_rate: f64,
    pub p1_win_rate: f64,
    pub draw_rate: f64,
    pub first_player_win_rate: f64,
    pub second_player_win_rate: f64,
    pub mean_turns: f64,
    pub median_turns: f64,
}

/// One row per `(p0 budget, p1 budget)`, sorted by the budgets.
pub fn summarize(traces: &[GameTrace]) -> Result<Vec<PairingSummary>> {
    if let Some(first) = traces.first() {
        if let Some(other) = traces.iter().find(|t| t.domain != first.domain) {
            return Err(Error::input(format!(
                "cannot summarize mixed domains {} and {}",
                first.domain, other.domain
            )));
        }
    }
    let mut groups: BTreeMap<[u32; 2], Vec<&GameTrace>> = BTreeMap::new();
    for t in traces {
        groups.entry(t.budgets).or_default().push(t);
    }
    Ok(groups
        .into_iter()
        .map(|(budgets, games)| {
            let n = games.len() as u64;
            let count = |o: Outcome| games.iter().filter(|t| t.winner == o).count() as u64;
            let p0_wins = count(Outcome::Win(PlayerId::FIRST));
            let p1_wins = count(Outcome::Win(PlayerId::SECOND));
            let draws = n - p0_wins - p1_wins;
            let mut lengths: Vec<u64> = games.iter().map(|t| t.turns.len() as u64).collect();
            PairingSummary {
                p0_rollouts: budgets[0],
                p1_rollouts: budgets[1],
                games: n,
                p0_wins,
                p1_wins,
                draws,
                p0_win_rate: ratio(p0_wins, n),
                p1_win_rate: ratio(p1_wins, n),
                draw_rate: ratio(draws, n),
                first_player_win_rate: ratio(p0_wins, n),
                second_player_win_rate: ratio(p1_wins, n),
                mean_turns: mean(&lengths),
                median_turns: median(&mut lengths),
            }
        })
        .collect())
}
