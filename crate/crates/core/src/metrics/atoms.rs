use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{ratio, Grouping};
use crate::trace::GameTrace;

/// Maps a label to the key atoms are counted under.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Projection {
    /// The label itself.
    #[default]
    Label,
    /// Character count of the label, e.g. word length in Scrabble.
    WordLength,
    /// The part before the first `:` (`play`, `attack`), or the whole label.
    Action,
}

impl Projection {
    pub fn apply(self, label: &str) -> String {
        match self {
            Projection::Label => label.to_owned(),
            Projection::WordLength => label.chars().count().to_string(),
            Projection::Action => label.split(':').next().unwrap_or(label).to_owned(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AtomRow {
    pub skill: Option<u32>,
    pub key: String,
    pub times_chosen: u64,
    /// Decision points where some available label projected to `key`.
    pub opportunities: u64,
    pub usage_rate: f64,
}

/// Per-key usage against availability. Keys never available do not appear.
pub fn atom_report(traces: &[GameTrace], grouping: Grouping, projection: Projection) -> Vec<AtomRow> {
    let mut table: BTreeMap<(Option<u32>, String), (u64, u64)> = BTreeMap::new();
    for trace in traces {
        for turn in &trace.turns {
            let skill = grouping.key(trace, turn.player);
            for m in &turn.moves {
                let keys: BTreeSet<String> = m
                    .available
                    .iter()
                    .filter(|l| !l.is_bookkeeping())
                    .map(|l| projection.apply(l.as_str()))
                    .collect();
                for k in keys {
                    table.entry((skill, k)).or_default().1 += 1;
                }
                if !m.chosen.is_bookkeeping() {
                    table.entry((skill, projection.apply(m.chosen.as_str()))).or_default().0 += 1;
                }
            }
        }
    }
    table
        .into_iter()
        .map(|((skill, key), (chosen, avail))| AtomRow {
            skill,
            key,
            times_chosen: chosen,
            opportunities: avail,
            usage_rate: ratio(chosen, avail),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::Outcome;
    use crate::metrics::fixtures::{decision, game, words};

    #[test]
    fn usage_rate_counts_decision_points() {
        let t = game(
            [7, 7],
            Outcome::Draw,
            vec![
                vec![decision("CAT", &["CAT", "DOG"])],
                vec![decision("DOG", &["CAT", "DOG"])],
                vec![decision("CAT", &["CAT"])],
                vec![decision("pass", &["CAT", "pass"])],
            ],
        );
        let rows = atom_report(&[t], Grouping::Pooled, Projection::Label);
        let cat = rows.iter().find(|r| r.key == "CAT").unwrap();
        assert_eq!((cat.times_chosen, cat.opportunities, cat.usage_rate), (2, 4, 0.5));
        assert!(rows.iter().all(|r| r.key != "pass"));
    }

    #[test]
    fn word_length_projection() {
        let t = words([1, 1], Outcome::Draw, &["CAT", "DOG", "ICON"]);
        let rows = atom_report(&[t], Grouping::Pooled, Projection::WordLength);
        let chosen: BTreeMap<&str, u64> = rows.iter().map(|r| (r.key.as_str(), r.times_chosen)).collect();
        assert_eq!(chosen, BTreeMap::from([("3", 2), ("4", 1)]));
    }

    #[test]
    fn never_available_is_absent() {
        let t = words([1, 1], Outcome::Draw, &["CAT"]);
        let rows = atom_report(&[t], Grouping::Pooled, Projection::Label);
        assert!(rows.iter().all(|r| r.key != "ZEBRA"));
    }

    #[test]
    fn grouped_by_acting_player_budget() {
        let t = words([5, 9], Outcome::Draw, &["CAT", "DOG", "CAT"]);
        let rows = atom_report(&[t], Grouping::BySkill, Projection::Label);
        let keys: Vec<(Option<u32>, &str, u64)> =
            rows.iter().map(|r| (r.skill, r.key.as_str(), r.times_chosen)).collect();
        assert_eq!(keys, vec![(Some(5), "CAT", 2), (Some(9), "DOG", 1)]);
    }

    #[test]
    fn action_projection() {
        assert_eq!(Projection::Action.apply("attack:Knight>HERO"), "attack");
        assert_eq!(Projection::Action.apply("ICON"), "ICON");
    }
}
