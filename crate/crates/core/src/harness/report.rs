//! Report selection and output.
//!
//! CSV files, one per report, all with a header row:
//!
//! | file                 | columns |
//! |----------------------|---------|
//! | `summaries.csv`      | p0_rollouts, p1_rollouts, games, p0_wins, p1_wins, draws, p0_win_rate, p1_win_rate, draw_rate, first_player_win_rate, second_player_win_rate, mean_turns, median_turns |
//! | `atoms.csv`          | skill, key, times_chosen, opportunities, usage_rate |
//! | `chains_combo.csv`   | skill, itemset, size, count, transactions, support |
//! | `chains_counter.csv` | skill, itemset, size, count, transactions, support |
//! | `action_space.csv`   | skill, turn_index, samples, median_available, mean_available, unique_chosen |
//!
//! `skill` is the acting player's rollout budget, empty when pooled. Itemset
//! items are joined with `|`. `reports.json` holds the same rows under the
//! keys `summaries`, `atoms`, `chains_combo`, `chains_counter` and
//! `action_space`.

use std::fmt;
use std::fs::File;
use std::io::BufWriter;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::{
    action_space_report, atom_report, chain_report, summarize, ActionSpaceRow, AtomRow, ChainKind, ChainReport,
    Grouping, PairingSummary, Projection, DEFAULT_MIN_SUPPORT,
};
use crate::trace::GameTrace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ReportKind {
    Summaries,
    Atoms,
    ChainsCombo,
    ChainsCounter,
    ActionSpace,
}

impl ReportKind {
    pub const ALL: [ReportKind; 5] = [
        ReportKind::Summaries,
        ReportKind::Atoms,
        ReportKind::ChainsCombo,
        ReportKind::ChainsCounter,
        ReportKind::ActionSpace,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReportKind::Summaries => "summaries",
            ReportKind::Atoms => "atoms",
            ReportKind::ChainsCombo => "chains-combo",
            ReportKind::ChainsCounter => "chains-counter",
            ReportKind::ActionSpace => "action-space",
        }
    }

    pub fn file_stem(self) -> String {
        self.name().replace('-', "_")
    }

    /// Parses a comma-separated list; `all` selects every report.
    pub fn parse_list(s: &str) -> Result<Vec<ReportKind>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(ReportKind::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        if out.is_empty() {
            return Err(Error::input("no reports selected"));
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for ReportKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ReportKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ReportKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| {
            Error::input(format!(
                "unknown report {s:?} (expected summaries, atoms, chains-combo, chains-counter, action-space or all)"
            ))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    /// One CSV per report plus `reports.json`.
    Csv,
    /// `reports.json` only.
    Json,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            _ => Err(Error::input(format!("unknown format {s:?} (expected csv or json)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReportOptions {
    pub min_support: f64,
    pub grouping: Grouping,
    pub projection: Projection,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            min_support: DEFAULT_MIN_SUPPORT,
            grouping: Grouping::BySkill,
            projection: Projection::Label,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ReportBundle {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub summaries: Option<Vec<PairingSummary>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub atoms: Option<Vec<AtomRow>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub chains_combo: Option<ChainReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub chains_counter: Option<ChainReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub action_space: Option<Vec<ActionSpaceRow>>,
}

pub fn build_reports(traces: &[GameTrace], selections: &[ReportKind], opts: &ReportOptions) -> Result<ReportBundle> {
    let mut b = ReportBundle::default();
    for &kind in selections {
        match kind {
            ReportKind::Summaries => b.summaries = Some(summarize(traces)?),
            ReportKind::Atoms => b.atoms = Some(atom_report(traces, opts.grouping, opts.projection)),
            ReportKind::ChainsCombo => {
                b.chains_combo = Some(chain_report(traces, ChainKind::Combo, opts.grouping, opts.min_support)?)
            }
            ReportKind::ChainsCounter => {
                b.chains_counter = Some(chain_report(traces, ChainKind::Counter, opts.grouping, opts.min_support)?)
            }
            ReportKind::ActionSpace => b.action_space = Some(action_space_report(traces, opts.grouping)),
        }
    }
    Ok(b)
}

fn write_csv<T: Serialize>(path: &Path, header: &[&str], rows: &[T]) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_path(path)?;
    w.write_record(header)?;
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

const SUMMARY_COLUMNS: &[&str] = &[
    "p0_rollouts",
    "p1_rollouts",
    "games",
    "p0_wins",
    "p1_wins",
    "draws",
    "p0_win_rate",
    "p1_win_rate",
    "draw_rate",
    "first_player_win_rate",
    "second_player_win_rate",
    "mean_turns",
    "median_turns",
];
const ATOM_COLUMNS: &[&str] = &["skill", "key", "times_chosen", "opportunities", "usage_rate"];
const CHAIN_COLUMNS: &[&str] = &["skill", "itemset", "size", "count", "transactions", "support"];
const ACTION_SPACE_COLUMNS: &[&str] =
    &["skill", "turn_index", "samples", "median_available", "mean_available", "unique_chosen"];

/// Writes the selected reports into `dir` (created if missing) and returns the files written.
pub fn emit_reports(
    traces: &[GameTrace],
    selections: &[ReportKind],
    format: ReportFormat,
    dir: &Path,
    opts: &ReportOptions,
) -> Result<Vec<PathBuf>> {
    let bundle = build_reports(traces, selections, opts)?;
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    if format == ReportFormat::Csv {
        for &kind in selections {
            let path = dir.join(format!("{}.csv", kind.file_stem()));
            match kind {
                ReportKind::Summaries => write_csv(&path, SUMMARY_COLUMNS, bundle.summaries.as_deref().unwrap_or(&[]))?,
                ReportKind::Atoms => write_csv(&path, ATOM_COLUMNS, bundle.atoms.as_deref().unwrap_or(&[]))?,
                ReportKind::ChainsCombo => {
                    write_csv(&path, CHAIN_COLUMNS, bundle.chains_combo.as_ref().map_or(&[][..], |r| &r.rows))?
                }
                ReportKind::ChainsCounter => {
                    write_csv(&path, CHAIN_COLUMNS, bundle.chains_counter.as_ref().map_or(&[][..], |r| &r.rows))?
                }
                ReportKind::ActionSpace => {
                    write_csv(&path, ACTION_SPACE_COLUMNS, bundle.action_space.as_deref().unwrap_or(&[]))?
                }
            }
            written.push(path);
        }
    }
    let path = dir.join("reports.json");
    let w = BufWriter::new(File::create(&path)?);
    serde_json::to_writer_pretty(w, &bundle)?;
    written.push(path);
    Ok(written)
}
