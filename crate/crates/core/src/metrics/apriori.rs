//! Apriori frequent itemset mining.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FrequentItemset {
    /// Sorted ascending.
    pub items: Vec<String>,
    /// Transactions containing every item.
    pub count: u64,
    pub support: f64,
}

fn is_subset(small: &[u32], big: &[u32]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.by_ref().any(|y| y == x))
}

/// Every itemset whose support `count / transactions.len()` is at least
/// `min_support`, sorted by support descending, then size, then items.
pub fn mine_frequent_itemsets(transactions: &[BTreeSet<String>], min_support: f64) -> Result<Vec<FrequentItemset>> {
    if !(min_support > 0.0 && min_support <= 1.0) {
        return Err(Error::input(format!("min_support must be in (0, 1], got {min_support}")));
    }
    if transactions.is_empty() {
        return Ok(Vec::new());
    }
    let n = transactions.len() as f64;
    let frequent = |count: u64| count as f64 / n >= min_support;

    let names: Vec<&str> = transactions
        .iter()
        .flatten()
        .map(String::as_str)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let index: HashMap<&str, u32> = names.iter().enumerate().map(|(i, &s)| (s, i as u32)).collect();
    let encoded: Vec<Vec<u32>> = transactions
        .iter()
        .map(|t| t.iter().map(|s| index[s.as_str()]).collect())
        .collect();

    let mut singles: BTreeMap<u32, u64> = BTreeMap::new();
    for t in &encoded {
        for &i in t {
            *singles.entry(i).or_default() += 1;
        }
    }
    let mut level: Vec<(Vec<u32>, u64)> = singles
        .into_iter()
        .filter(|&(_, c)| frequent(c))
        .map(|(i, c)| (vec![i], c))
        .collect();
    let mut found = Vec::new();

    while !level.is_empty() {
        let known: HashSet<&[u32]> = level.iter().map(|(s, _)| s.as_slice()).collect();
        let mut candidates: Vec<Vec<u32>> = Vec::new();
        for (i, (a, _)) in level.iter().enumerate() {
            for (b, _) in &level[i + 1..] {
                let k = a.len();
                if a[..k - 1] != b[..k - 1] {
                    break;
                }
                let mut c = a.clone();
                c.push(b[k - 1]);
                let pruned = (0..c.len()).any(|skip| {
                    let sub: Vec<u32> =
                        c.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &x)| x).collect();
                    !known.contains(sub.as_slice())
                });
                if !pruned {
                    candidates.push(c);
                }
            }
        }
        let mut next = Vec::new();
        for c in candidates {
            let count = encoded.iter().filter(|t| is_subset(&c, t)).count() as u64;
            if frequent(count) {
                next.push((c, count));
            }
        }
        found.append(&mut level);
        level = next;
    }

    let mut out: Vec<FrequentItemset> = found
        .into_iter()
        .map(|(ids, count)| FrequentItemset {
            items: ids.iter().map(|&i| names[i as usize].to_owned()).collect(),
            count,
            support: count as f64 / n,
        })
        .collect();
    out.sort_by(|a, b| {
        b.count
            .cmp(&a.count)
            .then(a.items.len().cmp(&b.items.len()))
            .then_with(|| a.items.cmp(&b.items))
    });
    Ok(out)
}
