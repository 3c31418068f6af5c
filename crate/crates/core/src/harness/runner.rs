use std::fs::File;
use std::io::BufReader;
use std::sync::Arc;

use rayon::prelude::*;

use super::config::{Domain, ExperimentConfig};
use crate::cardonomicon::{CardSet, Cardonomicon};
use crate::error::{Error, Result};
use crate::game::Game;
use crate::mcts::{ExplorationConstant, MctsAgent, SearchBudget};
use crate::rng::spawn_game_rng;
use crate::scrabble::{Dictionary, Scrabble};
use crate::trace::{GameTrace, MoveRecord, TurnRecord};

/// Plays one game between two search agents and records every decision.
pub fn play_game<G: Game>(
    game: &G,
    budgets: [u32; 2],
    exploration_c: f64,
    depth_cap: u32,
    master_seed: u64,
    game_index: u64,
) -> Result<GameTrace> {
    let c = ExplorationConstant::new(exploration_c)?;
    let agents = [
        MctsAgent::new(SearchBudget::new(budgets[0], depth_cap)?, c),
        MctsAgent::new(SearchBudget::new(budgets[1], depth_cap)?, c),
    ];
    let mut rng = spawn_game_rng(master_seed, game_index);
    let mut state = game.new_game(&mut rng);
    let mut trace = GameTrace::new(game.domain(), budgets, master_seed, game_index);
    let mut turn: Option<TurnRecord> = None;

    while !game.outcome(&state).is_terminal() {
        let player = game.current_player(&state);
        let legal = game.legal_moves(&state);
        let mv = agents[player.index()].choose_move(game, &state, &mut rng)?;
        let record = MoveRecord {
            chosen: game.move_label(&mv),
            available: legal.iter().map(|m| game.move_label(m)).collect(),
            available_count: legal.len(),
        };
        turn.get_or_insert_with(|| TurnRecord {
            turn_index: trace.turns.len() as u32 + 1,
            player,
            moves: Vec::new(),
            state: Default::default(),
        })
        .moves
        .push(record);
        game.play(&mut state, &mv, &mut rng)?;
        if game.outcome(&state).is_terminal() || game.current_player(&state) != player {
            let mut done = turn.take().expect("turn in progress");
            done.state = game.state_summary(&state);
            trace.turns.push(done);
        }
    }
    trace.winner = game.outcome(&state);
    Ok(trace)
}

/// Global index of game `i` of pairing `pairing`.
pub fn game_index(cfg: &ExperimentConfig, pairing: usize, i: u32) -> u64 {
    pairing as u64 * cfg.games_per_pairing as u64 + i as u64
}

fn run_grid<G: Game>(game: &G, cfg: &ExperimentConfig, threads: Option<usize>) -> Result<Vec<GameTrace>> {
    let jobs: Vec<([u32; 2], u64)> = cfg
        .pairings
        .iter()
        .enumerate()
        .flat_map(|(p, &budgets)| (0..cfg.games_per_pairing).map(move |i| (budgets, p, i)))
        .map(|(budgets, p, i)| (budgets, game_index(cfg, p, i)))
        .collect();
    let run = || {
        jobs.par_iter()
            .map(|&(budgets, idx)| play_game(game, budgets, cfg.exploration_c, cfg.depth_cap, cfg.master_seed, idx))
            .collect::<Result<Vec<_>>>()
    };
    match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::input(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    }
}

pub fn load_scrabble(cfg: &ExperimentConfig) -> Result<Scrabble> {
    let game = match &cfg.dictionary {
        Some(path) => {
            let file = File::open(path)
                .map_err(|e| Error::input(format!("cannot open dictionary {}: {e}", path.display())))?;
            let dict = Dictionary::load(BufReader::new(file))?;
            if dict.is_empty() {
                return Err(Error::input(format!("dictionary {} has no playable words", path.display())));
            }
            Scrabble::new(Arc::new(dict))
        }
        None => Scrabble::with_default_dictionary(),
    };
    Ok(game.with_target_score(cfg.target_score))
}

pub fn load_cardonomicon(cfg: &ExperimentConfig) -> Result<Cardonomicon> {
    let cards = match &cfg.cardset {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::input(format!("cannot read card set {}: {e}", path.display())))?;
            CardSet::load(&text)?
        }
        None => CardSet::default_set(),
    };
    Ok(Cardonomicon::new(Arc::new(cards))
        .with_starting_hand(cfg.starting_hand)
        .with_turn_cap(cfg.turn_cap))
}

/// Plays every pairing `games_per_pairing` times. Game `i` of pairing `p`
/// uses the stream `(master_seed, p * games_per_pairing + i)`, so the result
/// does not depend on `threads` (`None` uses all cores). Traces come back in
/// pairing order, then game order.
pub fn run_experiment(cfg: &ExperimentConfig, threads: Option<usize>) -> Result<Vec<GameTrace>> {
    match cfg.domain {
        Domain::Scrabble => run_grid(&load_scrabble(cfg)?, cfg, threads),
        Domain::Cardonomicon => run_grid(&load_cardonomicon(cfg)?, cfg, threads),
    }
}
