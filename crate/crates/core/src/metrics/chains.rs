use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{chosen_labels, mine_frequent_itemsets, Grouping};
use crate::error::{Error, Result};
use crate::trace::GameTrace;

pub const OPP_TAG: &str = "opp:";
pub const SELF_TAG: &str = "self:";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainKind {
    /// Actions taken together within one player's turn.
    Combo,
    /// An opponent's turn followed by the reply.
    Counter,
}

impl fmt::Display for ChainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChainKind::Combo => "combo",
            ChainKind::Counter => "counter",
        })
    }
}

impl FromStr for ChainKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "combo" => Ok(ChainKind::Combo),
            "counter" => Ok(ChainKind::Counter),
            _ => Err(Error::input(format!("unknown chain kind {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChainRow {
    pub skill: Option<u32>,
    /// Items joined by `|`.
    pub itemset: String,
    pub size: usize,
    pub count: u64,
    pub transactions: u64,
    pub support: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChainReport {
    pub kind: ChainKind,
    pub min_support: f64,
    /// Sorted by skill, then support descending.
    pub rows: Vec<ChainRow>,
}

/// Transactions per skill bucket.
///
/// A combo transaction is the set of labels a player chose in one turn with
/// at least two non-bookkeeping moves. A counter transaction joins the labels
/// of one turn, prefixed `opp:`, with those of the opponent's next turn,
/// prefixed `self:`; it is bucketed by the replying player.
pub fn chain_transactions(
    traces: &[GameTrace],
    kind: ChainKind,
    grouping: Grouping,
) -> BTreeMap<Option<u32>, Vec<BTreeSet<String>>> {
    let mut out: BTreeMap<Option<u32>, Vec<BTreeSet<String>>> = BTreeMap::new();
    for trace in traces {
        match kind {
            ChainKind::Combo => {
                for turn in &trace.turns {
                    let labels: Vec<&str> = chosen_labels(turn).collect();
                    if labels.len() >= 2 {
                        let set = labels.into_iter().map(str::to_owned).collect();
                        out.entry(grouping.key(trace, turn.player)).or_default().push(set);
                    }
                }
            }
            ChainKind::Counter => {
                for pair in trace.turns.windows(2) {
                    let (prev, next) = (&pair[0], &pair[1]);
                    if prev.player == next.player {
                        continue;
                    }
                    let set = chosen_labels(prev)
                        .map(|l| format!("{OPP_TAG}{l}"))
                        .chain(chosen_labels(next).map(|l| format!("{SELF_TAG}{l}")))
                        .collect();
                    out.entry(grouping.key(trace, next.player)).or_default().push(set);
                }
            }
        }
    }
    out
}

/// Frequent combos (itemsets of two or more actions) or counters (itemsets
/// with at least one `opp:` and one `self:` item).
pub fn chain_report(traces: &[GameTrace], kind: ChainKind, grouping: Grouping, min_support: f64) -> Result<ChainReport> {
    if !(min_support > 0.0 && min_support <= 1.0) {
        return Err(Error::input(format!("min_support must be in (0, 1], got {min_support}")));
    }
    let mut rows = Vec::new();
    for (skill, txs) in chain_transactions(traces, kind, grouping) {
        for f in mine_frequent_itemsets(&txs, min_support)? {
            let keep = match kind {
                ChainKind::Combo => f.items.len() >= 2,
                ChainKind::Counter => {
                    f.items.iter().any(|i| i.starts_with(OPP_TAG)) && f.items.iter().any(|i| i.starts_with(SELF_TAG))
                }
            };
            if keep {
                rows.push(ChainRow {
                    skill,
                    itemset: f.items.join("|"),
                    size: f.items.len(),
                    count: f.count,
                    transactions: txs.len() as u64,
                    support: f.support,
                });
            }
        }
    }
    Ok(ChainReport { kind, min_support, rows })
}
