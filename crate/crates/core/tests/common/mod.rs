//! Helpers shared by the integration tests and the acceptance binary.
#![allow(dead_code)]

pub mod apriori;
pub mod minimax;
pub mod planted;
pub mod scrabble;

use playsim::harness::{run_experiment, ExperimentConfig};
use playsim::trace::write_traces;

/// Runs `cfg` on one thread and on `threads` threads and returns both JSONL outputs.
pub fn jsonl_both_ways(cfg: &ExperimentConfig, threads: usize) -> (Vec<u8>, Vec<u8>) {
    let mut out = [Vec::new(), Vec::new()];
    for (buf, n) in out.iter_mut().zip([1, threads]) {
        let traces = run_experiment(cfg, Some(n)).expect("experiment runs");
        write_traces(&traces, &mut *buf).expect("in-memory write");
    }
    let [a, b] = out;
    (a, b)
}
