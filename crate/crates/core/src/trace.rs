//! Playtraces and their JSON-lines encoding.
//!
//! Every line of a trace file is one [`GameTrace`] object. Each object
//! carries `schema_version`; readers reject versions they do not know.

use std::collections::{BTreeMap, BTreeSet};
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{MoveLabel, Outcome, PlayerId};

pub const TRACE_SCHEMA_VERSION: u32 = 1;

/// One decision: what was chosen and what could have been chosen.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveRecord {
    pub chosen: MoveLabel,
    /// Distinct labels of the legal moves.
    pub available: BTreeSet<MoveLabel>,
    /// Number of legal moves before label de-duplication.
    pub available_count: usize,
}

/// A player's full turn, ending when play passes or the game ends.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TurnRecord {
    /// 1-based, counting both players' turns.
    pub turn_index: u32,
    pub player: PlayerId,
    pub moves: Vec<MoveRecord>,
    /// Domain snapshot taken after the turn's last move.
    pub state: BTreeMap<String, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameTrace {
    pub schema_version: u32,
    pub domain: String,
    /// Rollout budgets of player 0 and player 1.
    pub budgets: [u32; 2],
    pub master_seed: u64,
    pub game_index: u64,
    pub winner: Outcome,
    pub turns: Vec<TurnRecord>,
}

impl GameTrace {
    pub fn new(domain: &str, budgets: [u32; 2], master_seed: u64, game_index: u64) -> Self {
        GameTrace {
            schema_version: TRACE_SCHEMA_VERSION,
            domain: domain.to_owned(),
            budgets,
            master_seed,
            game_index,
            winner: Outcome::Ongoing,
            turns: Vec::new(),
        }
    }

    pub fn budget_of(&self, p: PlayerId) -> u32 {
        self.budgets[p.index()]
    }

    pub fn len_turns(&self) -> usize {
        self.turns.len()
    }
}

/// Writes one JSON object per line.
pub fn write_traces<W: Write>(traces: &[GameTrace], mut sink: W) -> Result<()> {
    for t in traces {
        serde_json::to_writer(&mut sink, t)?;
        sink.write_all(b"\n")?;
    }
    sink.flush()?;
    Ok(())
}

/// Reads traces written by [`write_traces`]. Blank lines are skipped; any
/// other unparsable line fails with its 1-based line number.
pub fn read_traces<R: BufRead>(source: R) -> Result<Vec<GameTrace>> {
    let mut out = Vec::new();
    for (i, line) in source.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let trace: GameTrace = serde_json::from_str(&line)
            .map_err(|e| Error::TraceLine { line: line_no, message: e.to_string() })?;
        if trace.schema_version != TRACE_SCHEMA_VERSION {
            return Err(Error::TraceLine {
                line: line_no,
                message: format!("unsupported schema_version {}", trace.schema_version),
            });
        }
        out.push(trace);
    }
    Ok(out)
}
