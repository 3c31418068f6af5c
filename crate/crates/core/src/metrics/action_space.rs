use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{chosen_labels, mean, median, Grouping};
use crate::trace::GameTrace;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ActionSpaceRow {
    pub skill: Option<u32>,
    pub turn_index: u32,
    /// Games that reached this turn.
    pub samples: u64,
    /// Over the legal-move counts at each turn's first decision.
    pub median_available: f64,
    pub mean_available: f64,
    /// Distinct labels chosen at this turn across all games.
    pub unique_chosen: u64,
}

/// Option counts and distinct chosen labels for one (skill, turn) cell.
type Bucket<'a> = (Vec<u64>, BTreeSet<&'a str>);

pub fn action_space_report(traces: &[GameTrace], grouping: Grouping) -> Vec<ActionSpaceRow> {
    let mut table: BTreeMap<(Option<u32>, u32), Bucket> = BTreeMap::new();
    for trace in traces {
        for turn in &trace.turns {
            let Some(first) = turn.moves.first() else { continue };
            let entry = table.entry((grouping.key(trace, turn.player), turn.turn_index)).or_default();
            entry.0.push(first.available_count as u64);
            entry.1.extend(chosen_labels(turn));
        }
    }
    table
        .into_iter()
        .map(|((skill, turn_index), (mut counts, labels))| ActionSpaceRow {
            skill,
            turn_index,
            samples: counts.len() as u64,
            mean_available: mean(&counts),
            median_available: median(&mut counts),
            unique_chosen: labels.len() as u64,
        })
        .collect()
}
