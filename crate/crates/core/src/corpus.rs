//! Seeded Erdős–Rényi `G(n, p)` corpora.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct CorpusConfig {
    pub seed: u64,
    pub min_order: usize,
    pub max_order: usize,
    pub probabilities: Vec<f64>,
    pub per_cell: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            seed: 42,
            min_order: 4,
            max_order: 14,
            probabilities: vec![0.2, 0.5, 0.8],
            per_cell: 200,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CorpusGraph {
    pub order: usize,
    pub probability: f64,
    pub index: usize,
    pub graph: Graph,
}

impl CorpusGraph {
    pub fn label(&self) -> String {
        format!("G({},{})#{}", self.order, self.probability, self.index)
    }
}

fn cell_seed(seed: u64, order: usize, p_index: usize) -> u64 {
    // splitmix64 finaliser over the cell coordinates
    let mut z = seed
        .wrapping_add((order as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
        .wrapping_add((p_index as u64 + 1).wrapping_mul(0xD1B5_4A32_D192_ED03));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// One `G(n, p)` sample: each of the `C(n, 2)` pairs is an edge independently
/// with probability `p`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("generated edges are in range")
}

/// All corpus graphs, ordered by order, then probability, then index. Each
/// `(order, p)` cell draws from its own stream, so the cells are independent
/// of the ranges requested.
pub fn generate(cfg: &CorpusConfig) -> Vec<CorpusGraph> {
    let mut out = Vec::new();
    for order in cfg.min_order..=cfg.max_order {
        for (pi, &p) in cfg.probabilities.iter().enumerate() {
            let mut rng = ChaCha8Rng::seed_from_u64(cell_seed(cfg.seed, order, pi));
            for index in 0..cfg.per_cell {
                out.push(CorpusGraph {
                    order,
                    probability: p,
                    index,
                    graph: gnp(order, p, &mut rng),
                });
            }
        }
    }
    out
}
