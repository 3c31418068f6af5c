//! Report invariants on simulated and synthetic traces.

mod common;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use playsim::harness::{
    emit_reports, run_experiment, ExperimentConfig, ReportFormat, ReportKind, ReportOptions,
};
use playsim::metrics::{
    action_space_report, atom_report, chain_report, chain_transactions, summarize, ChainKind, Grouping, Projection,
};
use playsim::trace::{read_traces, write_traces, GameTrace};
use playsim::{spawn_game_rng, Outcome};
use proptest::prelude::*;
use rand::seq::SliceRandom;

fn card_traces() -> &'static [GameTrace] {
    static T: OnceLock<Vec<GameTrace>> = OnceLock::new();
    T.get_or_init(|| {
        let cfg = ExperimentConfig::parse(
            "domain = \"cardonomicon\"\npairings = [[4, 4], [4, 12], [12, 4]]\ngames_per_pairing = 6\nmaster_seed = 3",
        )
        .unwrap();
        run_experiment(&cfg, Some(1)).unwrap()
    })
}

fn scrabble_traces() -> &'static [GameTrace] {
    static T: OnceLock<Vec<GameTrace>> = OnceLock::new();
    T.get_or_init(|| {
        let cfg = ExperimentConfig::parse(
            "domain = \"scrabble\"\npairings = [[2, 2], [2, 4]]\ngames_per_pairing = 3\nmaster_seed = 8",
        )
        .unwrap();
        run_experiment(&cfg, Some(1)).unwrap()
    })
}

#[test]
fn summary_rates_partition_games() {
    for traces in [card_traces(), scrabble_traces()] {
        for s in summarize(traces).unwrap() {
            assert_eq!(s.p0_wins + s.p1_wins + s.draws, s.games);
            assert!((s.p0_win_rate + s.p1_win_rate + s.draw_rate - 1.0).abs() < 1e-12);
            assert_eq!(s.first_player_win_rate, s.p0_win_rate);
            let n = traces.iter().filter(|t| t.budgets == [s.p0_rollouts, s.p1_rollouts]).count();
            assert_eq!(s.games as usize, n);
        }
    }
}

#[test]
fn atom_counts_cover_every_chosen_action() {
    for traces in [card_traces(), scrabble_traces()] {
        let chosen = traces
            .iter()
            .flat_map(|t| &t.turns)
            .flat_map(|turn| &turn.moves)
            .filter(|m| !m.chosen.is_bookkeeping())
            .count() as u64;
        for projection in [Projection::Label, Projection::Action, Projection::WordLength] {
            let rows = atom_report(traces, Grouping::Pooled, projection);
            assert_eq!(rows.iter().map(|r| r.times_chosen).sum::<u64>(), chosen);
            for r in &rows {
                assert!(r.times_chosen <= r.opportunities);
                assert!((r.usage_rate - r.times_chosen as f64 / r.opportunities as f64).abs() < 1e-12);
            }
        }
        let by_skill: u64 = atom_report(traces, Grouping::BySkill, Projection::Label).iter().map(|r| r.times_chosen).sum();
        assert_eq!(by_skill, chosen);
    }
}

#[test]
fn action_space_counts_every_turn() {
    let traces = card_traces();
    let rows = action_space_report(traces, Grouping::Pooled);
    let turns: usize = traces.iter().map(|t| t.turns.len()).sum();
    assert_eq!(rows.iter().map(|r| r.samples as usize).sum::<usize>(), turns);
    for r in &rows {
        assert!(r.median_available >= 1.0 && r.mean_available >= 1.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn reports_ignore_trace_order(seed in any::<u64>()) {
        let mut shuffled = card_traces().to_vec();
        shuffled.shuffle(&mut spawn_game_rng(seed, 0));
        let opts = ReportOptions::default();
        let a = playsim::harness::build_reports(card_traces(), &ReportKind::ALL, &opts).unwrap();
        let b = playsim::harness::build_reports(&shuffled, &ReportKind::ALL, &opts).unwrap();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn traces_round_trip() {
    for traces in [card_traces(), scrabble_traces()] {
        let mut buf = Vec::new();
        write_traces(traces, &mut buf).unwrap();
        assert_eq!(buf.iter().filter(|&&b| b == b'\n').count(), traces.len());
        let back = read_traces(&buf[..]).unwrap();
        assert_eq!(back, traces);
    }
}

#[test]
fn planted_counter_is_recovered() {
    let traces = common::planted::counter_traces(1000, 0.7, 4);
    let report = chain_report(&traces, ChainKind::Counter, Grouping::Pooled, 0.05).unwrap();
    let row = report.rows.iter().find(|r| r.itemset == "opp:CON|self:ICON").expect("planted pattern found");
    assert!((row.support - 0.70).abs() <= 0.01, "support {}", row.support);
    assert_eq!(row.transactions, 1000);
    let by_skill = chain_report(&traces, ChainKind::Counter, Grouping::BySkill, 0.05).unwrap();
    assert!(by_skill.rows.iter().any(|r| r.skill == Some(50) && r.itemset == "opp:CON|self:ICON"));
}

#[test]
fn combos_have_two_or_more_actions() {
    let txs = chain_transactions(card_traces(), ChainKind::Combo, Grouping::Pooled);
    let n = txs[&None].len();
    assert!(txs[&None].iter().all(|t| t.len() >= 2));
    let support = 1.0 / n as f64;
    let report = chain_report(card_traces(), ChainKind::Combo, Grouping::Pooled, support).unwrap();
    assert!(!report.rows.is_empty());
    for r in &report.rows {
        assert!(r.size >= 2);
        assert_eq!(r.itemset.split('|').count(), r.size);
        assert_eq!(r.transactions as usize, n);
        assert!(r.support >= support);
    }
    // Scrabble turns hold one move, so there are no combos.
    let none = chain_report(scrabble_traces(), ChainKind::Combo, Grouping::Pooled, 0.05).unwrap();
    assert!(none.rows.is_empty());
}

#[test]
fn draw_only_games_summarize() {
    let mut t = GameTrace::new("scrabble", [1, 1], 0, 0);
    t.winner = Outcome::Draw;
    let s = &summarize(&[t]).unwrap()[0];
    assert_eq!((s.draws, s.draw_rate), (1, 1.0));
}

fn csv_rows(path: &std::path::Path) -> Vec<BTreeMap<String, String>> {
    let mut r = csv::Reader::from_path(path).unwrap();
    let header = r.headers().unwrap().clone();
    r.records()
        .map(|rec| header.iter().zip(rec.unwrap().iter()).map(|(h, v)| (h.to_owned(), v.to_owned())).collect())
        .collect()
}

fn same_cell(csv: &str, json: &serde_json::Value) -> bool {
    match json {
        serde_json::Value::Null => csv.is_empty(),
        serde_json::Value::String(s) => s == csv,
        serde_json::Value::Number(n) => csv.parse::<f64>().ok() == n.as_f64(),
        _ => false,
    }
}

#[test]
fn csv_and_json_carry_the_same_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let opts = ReportOptions { min_support: 0.01, ..Default::default() };
    emit_reports(card_traces(), &ReportKind::ALL, ReportFormat::Csv, dir.path(), &opts).unwrap();
    let json: serde_json::Value =
        serde_json::from_reader(std::fs::File::open(dir.path().join("reports.json")).unwrap()).unwrap();
    for kind in ReportKind::ALL {
        let stem = kind.file_stem();
        let rows = csv_rows(&dir.path().join(format!("{stem}.csv")));
        let jrows = match kind {
            ReportKind::ChainsCombo | ReportKind::ChainsCounter => &json[&stem]["rows"],
            _ => &json[&stem],
        };
        let jrows = jrows.as_array().unwrap();
        assert_eq!(rows.len(), jrows.len(), "{stem}");
        assert!(!rows.is_empty() || kind == ReportKind::ChainsCombo, "{stem}");
        for (c, j) in rows.iter().zip(jrows) {
            for (k, v) in c {
                assert!(same_cell(v, &j[k]), "{stem}.{k}: csv {v:?} json {}", j[k]);
            }
        }
    }
    let jdir = tempfile::tempdir().unwrap();
    let files = emit_reports(card_traces(), &ReportKind::ALL, ReportFormat::Json, jdir.path(), &opts).unwrap();
    assert_eq!(files, vec![jdir.path().join("reports.json")]);
    assert_eq!(
        std::fs::read(jdir.path().join("reports.json")).unwrap(),
        std::fs::read(dir.path().join("reports.json")).unwrap()
    );
}
