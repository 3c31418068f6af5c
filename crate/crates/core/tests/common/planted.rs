//! Synthetic Scrabble traces with a planted reply pattern.

use std::collections::BTreeSet;

use playsim::trace::{GameTrace, MoveRecord, TurnRecord};
use playsim::{MoveLabel, Outcome, PlayerId};
use rand::seq::{IndexedRandom, SliceRandom};

const FILLER: &[&str] = &["CAT", "DOG", "ZAP", "QUIT", "TREE", "ICE", "CONE", "ON", "IN", "AXE"];

fn turn(index: u32, player: PlayerId, word: &str) -> TurnRecord {
    let available: BTreeSet<MoveLabel> =
        FILLER.iter().chain(["CON", "ICON", "pass"].iter()).map(|w| MoveLabel::new(*w)).collect();
    TurnRecord {
        turn_index: index,
        player,
        moves: vec![MoveRecord { chosen: MoveLabel::new(word), available_count: available.len(), available }],
        state: Default::default(),
    }
}

/// Two-turn games, so each game yields one opposing turn pair. Exactly
/// `round(rate * games)` of them are CON answered by ICON; the rest use
/// filler words.
pub fn counter_traces(games: usize, rate: f64, seed: u64) -> Vec<GameTrace> {
    let mut rng = playsim::spawn_game_rng(seed, 0);
    let planted = (rate * games as f64).round() as usize;
    let mut flags: Vec<bool> = (0..games).map(|i| i < planted).collect();
    flags.shuffle(&mut rng);
    flags
        .into_iter()
        .enumerate()
        .map(|(g, hit)| {
            let (a, b) = if hit {
                ("CON", "ICON")
            } else {
                (*FILLER.choose(&mut rng).unwrap(), *FILLER.choose(&mut rng).unwrap())
            };
            let mut t = GameTrace::new("scrabble", [50, 50], seed, g as u64);
            t.turns.push(turn(1, PlayerId::FIRST, a));
            t.turns.push(turn(2, PlayerId::SECOND, b));
            t.winner = Outcome::Win(PlayerId::SECOND);
            t
        })
        .collect()
}
