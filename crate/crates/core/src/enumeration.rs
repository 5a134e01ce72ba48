//! Exact counts of total dominating sets by cardinality.
//!
//! Two independent routes are provided: a pruned include/exclude search
//! over the vertices, and the alternating sum
//! `D_t(G, x) = Σ_{S ⊆ V} (-1)^{|S|} (x + 1)^{n - |N(S)|}`.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Result};
use crate::graph::{Graph, DEFAULT_ENUMERATION_CAP};
use crate::polynomial::{deserialize_bigints, serialize_bigints, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationConfig {
    /// Largest graph order accepted (at most 63).
    pub cap: usize,
    /// Number of leading search levels expanded into parallel tasks.
    pub split_depth: usize,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            cap: DEFAULT_ENUMERATION_CAP,
            split_depth: 8,
        }
    }
}

impl EnumerationConfig {
    pub fn with_cap(cap: usize) -> Self {
        EnumerationConfig {
            cap,
            ..Self::default()
        }
    }
}

/// `counts[i]` is the number of total dominating sets of size `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    counts: Vec<BigInt>,
}

impl CountTable {
    pub fn order(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    pub fn total(&self) -> BigInt {
        self.counts.iter().sum()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(self.counts.clone())
    }

    /// Smallest `i` with a nonzero count.
    pub fn total_domination_number(&self) -> Option<usize> {
        self.counts.iter().position(|c| !c.is_zero())
    }

    /// Indices `i < n/2` with `counts[i] > counts[i+1]`.
    pub fn monotonicity_violations(&self) -> Vec<usize> {
        let n = self.order();
        (0..n)
            .take_while(|&i| 2 * i < n)
            .filter(|&i| self.counts[i] > self.counts[i + 1])
            .collect()
    }
}

impl Serialize for CountTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_bigints(&self.counts, s)
    }
}

impl<'de> Deserialize<'de> for CountTable {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let counts = deserialize_bigints(d)?;
        if counts.is_empty() {
            return Err(serde::de::Error::custom("count table needs n + 1 entries"));
        }
        Ok(CountTable { counts })
    }
}

fn checked_adjacency(g: &Graph, cfg: &EnumerationConfig) -> Result<Vec<u64>> {
    if g.order() == 0 {
        return invalid("enumeration needs a graph with at least one vertex");
    }
    g.word_adjacency(cfg.cap)
}

fn binomial_table(n: usize) -> Vec<Vec<u128>> {
    let mut t = vec![vec![0u128; n + 1]; n + 1];
    for i in 0..=n {
        t[i][0] = 1;
        for j in 1..=i {
            t[i][j] = t[i - 1][j - 1] + if j < i { t[i - 1][j] } else { 0 };
        }
    }
    t
}

/// Search state shared by every task: vertices in descending-degree order.
struct Search {
    n: usize,
    full: u64,
    adj: Vec<u64>,
    /// `reach[k]` = union of neighbourhoods of ordered vertices `k..n`.
    reach: Vec<u64>,
    binom: Vec<Vec<u128>>,
}

impl Search {
    fn new(adj_by_label: &[u64]) -> Self {
        let n = adj_by_label.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(adj_by_label[v].count_ones()));
        let adj: Vec<u64> = order.iter().map(|&v| adj_by_label[v]).collect();
        let mut reach = vec![0u64; n + 1];
        for k in (0..n).rev() {
            reach[k] = reach[k + 1] | adj[k];
        }
        Search {
            n,
            full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            adj,
            reach,
            binom: binomial_table(n),
        }
    }

    /// Counts completions of a partial choice over ordered vertices `0..k`.
    fn descend(&self, k: usize, size: usize, cov: u64, counts: &mut [u128]) {
        if cov == self.full {
            // Every superset of a total dominating set is one.
            let rest = self.n - k;
            for j in 0..=rest {
                counts[size + j] += self.binom[rest][j];
            }
            return;
        }
        if k == self.n || cov | self.reach[k] != self.full {
            return;
        }
        self.descend(k + 1, size + 1, cov | self.adj[k], counts);
        self.descend(k + 1, size, cov, counts);
    }

    /// Expands the first `depth` levels, returning the open frontier states;
    /// states resolved on the way are counted into `counts`.
    fn frontier(&self, depth: usize, counts: &mut [u128]) -> Vec<(usize, u64)> {
        let mut states = vec![(0usize, 0u64)];
        for k in 0..depth.min(self.n) {
            let mut next = Vec::with_capacity(states.len() * 2);
            for (size, cov) in states {
                if cov == self.full {
                    self.descend(k, size, cov, counts);
                    continue;
                }
                if cov | self.reach[k] != self.full {
                    continue;
                }
                next.push((size + 1, cov | self.adj[k]));
                next.push((size, cov));
            }
            states = next;
        }
        states
    }
}

fn add_into(mut a: Vec<u128>, b: Vec<u128>) -> Vec<u128> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// `d_t(G, i)` for `i = 0..=n`, by pruned exhaustive search.
pub fn count_total_dominating_sets(g: &Graph, cfg: &EnumerationConfig) -> Result<CountTable> {
    let adj = checked_adjacency(g, cfg)?;
    let search = Search::new(&adj);
    let n = search.n;
    let depth = cfg.split_depth.min(n);

    let mut base = vec![0u128; n + 1];
    let frontier = search.frontier(depth, &mut base);
    let counts = frontier
        .par_iter()
        .fold(
            || vec![0u128; n + 1],
            |mut acc, &(size, cov)| {
                search.descend(depth, size, cov, &mut acc);
                acc
            },
        )
        .reduce(|| vec![0u128; n + 1], add_into);
    let counts = add_into(base, counts);
    Ok(CountTable {
        counts: counts.into_iter().map(BigInt::from).collect(),
    })
}

pub fn total_domination_polynomial(g: &Graph, cfg: &EnumerationConfig) -> Result<Polynomial> {
    Ok(count_total_dominating_sets(g, cfg)?.to_polynomial())
}

/// `γ_t(G)`, or `None` when `G` has no total dominating set.
pub fn total_domination_number(g: &Graph, cfg: &EnumerationConfig) -> Result<Option<usize>> {
    Ok(count_total_dominating_sets(g, cfg)?.total_domination_number())
}

/// Signed subset counts bucketed by `n - |N(S)|`.
fn ie_buckets(adj: &[u64], depth: usize) -> Vec<i128> {
    let n = adj.len();

    fn walk(adj: &[u64], k: usize, odd: bool, union: u64, buckets: &mut [i128]) {
        if k == adj.len() {
            let e = adj.len() - union.count_ones() as usize;
            buckets[e] += if odd { -1 } else { 1 };
            return;
        }
        walk(adj, k + 1, !odd, union | adj[k], buckets);
        walk(adj, k + 1, odd, union, buckets);
    }

    let depth = depth.min(n);
    let prefixes: Vec<(bool, u64)> = (0u64..1 << depth)
        .map(|bits| {
            let union = (0..depth)
                .filter(|&k| bits >> k & 1 == 1)
                .fold(0u64, |u, k| u | adj[k]);
            (bits.count_ones() % 2 == 1, union)
        })
        .collect();
    prefixes
        .par_iter()
        .fold(
            || vec![0i128; n + 1],
            |mut acc, &(odd, union)| {
                walk(adj, depth, odd, union, &mut acc);
                acc
            },
        )
        .reduce(
            || vec![0i128; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

/// `D_t(G, x)` through the inclusion–exclusion sum over all `2^n` subsets.
pub fn total_domination_polynomial_ie(g: &Graph, cfg: &EnumerationConfig) -> Result<Polynomial> {
    let adj = checked_adjacency(g, cfg)?;
    let buckets = ie_buckets(&adj, cfg.split_depth);
    let mut acc = Polynomial::zero();
    for (e, &c) in buckets.iter().enumerate() {
        if c != 0 {
            acc = &acc + &Polynomial::binomial_shift(e).scale(&BigInt::from(c));
        }
    }
    Ok(acc)
}
