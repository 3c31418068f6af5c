//! Experiment configuration, batch simulation and report output.

mod config;
mod report;
mod runner;

pub use config::{
    BudgetSpec, Domain, ExperimentConfig, Overrides, Presets, Profile, RawConfig, DEFAULT_GAMES_PER_PAIRING,
    DESK_BUDGET_DIVISOR, DESK_GAMES_PER_PAIRING,
};
pub use report::{build_reports, emit_reports, ReportBundle, ReportFormat, ReportKind, ReportOptions};
pub use runner::{game_index, load_cardonomicon, load_scrabble, play_game, run_experiment};
