//! Exhaustive frequent-itemset enumeration over every subset of the item universe.

use std::collections::BTreeSet;

use playsim::metrics::{mine_frequent_itemsets, FrequentItemset};
use rand::Rng;

pub fn exhaustive(transactions: &[BTreeSet<String>], min_support: f64) -> Vec<FrequentItemset> {
    let universe: Vec<&String> = transactions.iter().flatten().collect::<BTreeSet<_>>().into_iter().collect();
    let n = transactions.len();
    let mut out = Vec::new();
    for mask in 1u32..(1 << universe.len()) {
        let items: Vec<String> =
            (0..universe.len()).filter(|i| mask >> i & 1 == 1).map(|i| universe[i].clone()).collect();
        let count = transactions.iter().filter(|t| items.iter().all(|x| t.contains(x))).count();
        if count > 0 && count as f64 / n as f64 >= min_support {
            out.push(FrequentItemset { items, count: count as u64, support: count as f64 / n as f64 });
        }
    }
    out.sort_by(|a, b| b.count.cmp(&a.count).then(a.items.len().cmp(&b.items.len())).then(a.items.cmp(&b.items)));
    out
}

pub fn random_transactions<R: Rng>(rng: &mut R) -> Vec<BTreeSet<String>> {
    let items = rng.random_range(1..=12);
    let density = rng.random_range(0.1..0.7);
    (0..rng.random_range(1..=40))
        .map(|_| (0..items).filter(|_| rng.random_bool(density)).map(|i| format!("i{i}")).collect())
        .collect()
}

/// Number of random transaction sets on which mining and enumeration disagree.
pub fn mismatches(sets: usize, seed: u64) -> usize {
    let mut rng = playsim::spawn_game_rng(seed, 0);
    let mut bad = 0;
    for _ in 0..sets {
        let tx = random_transactions(&mut rng);
        let min_support = [0.05, 0.1, 0.2, 0.25, 0.5, 1.0][rng.random_range(0..6)];
        let got = mine_frequent_itemsets(&tx, min_support).expect("valid support");
        if got != exhaustive(&tx, min_support) {
            bad += 1;
        }
    }
    bad
}
