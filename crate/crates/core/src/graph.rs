//! Simple undirected graphs stored as per-vertex open-neighbourhood bitsets,
//! together with constructors for the graph families and products used
//! throughout the crate.
//!
//! Labels are fixed per family so that fixtures are reproducible; graph
//! equality compares labelled adjacency, not isomorphism classes.

use std::fmt;

use crate::error::{invalid, Error, Result};

/// Default bound on the order of graphs accepted by exponential-time
/// operations.
pub const DEFAULT_ENUMERATION_CAP: usize = 26;

/// Hard upper limit for the enumeration cap: search state is a single `u64`.
pub const MAX_ENUMERATION_CAP: usize = 63;

const WORD: usize = 64;

/// A set of vertices `{0, .., n-1}` stored as a multi-word bitmask.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            words: vec![0; n.div_ceil(WORD)],
        }
    }

    /// The whole vertex set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_vertices(n: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    /// Builds a set from the low `n` bits of a single word.
    pub fn from_word(n: usize, bits: u64) -> Self {
        let mut s = Self::empty(n.max(1));
        s.words[0] = bits;
        s.words.truncate(n.div_ceil(WORD));
        s
    }

    /// The set as a single word, if every member is below 64.
    pub fn to_word(&self) -> Option<u64> {
        match self.words.split_first() {
            None => Some(0),
            Some((first, rest)) if rest.iter().all(|&w| w == 0) => Some(*first),
            _ => None,
        }
    }

    pub fn insert(&mut self, v: usize) {
        let (w, b) = (v / WORD, v % WORD);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << b;
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / WORD)
            .is_some_and(|w| w >> (v % WORD) & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// True when every vertex of `self` lies below `n`.
    pub fn fits(&self, n: usize) -> bool {
        self.iter().all(|v| v < n)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + b)
            })
        })
    }

    /// Set equality ignoring trailing zero words.
    pub fn same_members(&self, other: &VertexSet) -> bool {
        let len = self.words.len().max(other.words.len());
        (0..len).all(|i| {
            self.words.get(i).copied().unwrap_or(0) == other.words.get(i).copied().unwrap_or(0)
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    fn with_order(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
        }
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::with_order(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return invalid(format!("edge ({u}, {v}) has an endpoint outside 0..{n}"));
            }
            if u == v {
                return invalid(format!("self-loop at vertex {u}"));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                self.adj[u]
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn min_degree(&self) -> Result<usize> {
        (0..self.n)
            .map(|v| self.degree(v))
            .min()
            .ok_or_else(|| Error::InvalidInput("minimum degree of the empty graph".into()))
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n).any(|v| self.adj[v].is_empty())
    }

    /// `N(S)`: the union of the open neighbourhoods of the members of `s`.
    pub fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// `N[S] = N(S) ∪ S`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = self.open_neighborhood(s);
        out.union_with(s);
        out
    }

    /// True iff every vertex has a neighbour in `d`.
    pub fn is_total_dominating(&self, d: &VertexSet) -> bool {
        self.open_neighborhood(d).len() == self.n
    }

    /// Adjacency as single-word masks, refusing graphs above `cap`.
    pub fn word_adjacency(&self, cap: usize) -> Result<Vec<u64>> {
        let cap = cap.min(MAX_ENUMERATION_CAP);
        if self.n > cap {
            return Err(Error::CapExceeded { order: self.n, cap });
        }
        Ok(self
            .adj
            .iter()
            .map(|s| s.to_word().expect("order below 64 fits one word"))
            .collect())
    }

    /// Checks the simple-graph invariants: no loops, symmetric adjacency,
    /// no vertex outside `0..n`.
    pub fn is_well_formed(&self) -> bool {
        self.adj.len() == self.n
            && (0..self.n).all(|v| {
                !self.adj[v].contains(v)
                    && self.adj[v].fits(self.n)
                    && self.adj[v].iter().all(|u| self.adj[u].contains(v))
            })
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        invalid(msg)
    }
}

/// `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    require(n >= 1, "complete graph needs n >= 1")?;
    let mut g = Graph::with_order(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// `P_n`: `0 - 1 - .. - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    require(n >= 1, "path needs n >= 1")?;
    let mut g = Graph::with_order(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    Ok(g)
}

/// `C_n`: the path closed by the edge `(n-1, 0)`.
pub fn cycle(n: usize) -> Result<Graph> {
    require(n >= 3, "cycle needs n >= 3")?;
    let mut g = path(n)?;
    g.add_edge(n - 1, 0);
    Ok(g)
}

/// `K_{1,n}` on `n + 1` vertices with the centre at index 0.
pub fn star(n: usize) -> Result<Graph> {
    require(n >= 1, "star needs n >= 1")?;
    let mut g = Graph::with_order(n + 1);
    for v in 1..=n {
        g.add_edge(0, v);
    }
    Ok(g)
}

/// The edgeless graph `K̄_n`.
pub fn empty_graph(n: usize) -> Result<Graph> {
    require(n >= 1, "empty graph needs n >= 1")?;
    Ok(Graph::with_order(n))
}

/// `F_n`: `n` triangles sharing vertex 0; triangle `i` uses `2i-1, 2i`.
pub fn friendship(n: usize) -> Result<Graph> {
    require(n >= 1, "friendship graph needs n >= 1")?;
    let mut g = Graph::with_order(2 * n + 1);
    for i in 1..=n {
        g.add_edge(0, 2 * i - 1);
        g.add_edge(0, 2 * i);
        g.add_edge(2 * i - 1, 2 * i);
    }
    Ok(g)
}

/// `B_n`: `n` four-cycles sharing the spine edge `0 - 1`. Page `i` adds
/// vertex `2i` (adjacent to 0) and `2i+1` (adjacent to 1), joined together.
pub fn book(n: usize) -> Result<Graph> {
    require(n >= 1, "book graph needs n >= 1")?;
    let mut g = Graph::with_order(2 * n + 2);
    g.add_edge(0, 1);
    for i in 1..=n {
        g.add_edge(2 * i, 0);
        g.add_edge(2 * i + 1, 1);
        g.add_edge(2 * i, 2 * i + 1);
    }
    Ok(g)
}

/// `K_{m,n}` with parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    require(m >= 1 && n >= 1, "complete bipartite graph needs m, n >= 1")?;
    let mut g = Graph::with_order(m + n);
    for u in 0..m {
        for v in m..m + n {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// The corona `G ∘ H`: vertex `i` of `g` keeps index `i` and is joined to
/// every vertex of copy `i` of `h`, stored at `n + i*m .. n + (i+1)*m`.
/// Copies keep their internal edges.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph> {
    require(g.n >= 1 && h.n >= 1, "corona needs two nonempty graphs")?;
    let (n, m) = (g.n, h.n);
    let mut out = Graph::with_order(n * (1 + m));
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for i in 0..n {
        let base = n + i * m;
        for j in 0..m {
            out.add_edge(i, base + j);
        }
        for (a, b) in h.edges() {
            out.add_edge(base + a, base + b);
        }
    }
    Ok(out)
}

/// The join `G ∨ H`: `g` on `0..n`, `h` shifted to `n..n+m`, plus all cross
/// edges.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    require(g.n >= 1 && h.n >= 1, "join needs two nonempty graphs")?;
    let (n, m) = (g.n, h.n);
    let mut out = Graph::with_order(n + m);
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for (a, b) in h.edges() {
        out.add_edge(n + a, n + b);
    }
    for u in 0..n {
        for v in n..n + m {
            out.add_edge(u, v);
        }
    }
    Ok(out)
}

/// Disjoint union, `h` shifted after `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let n = g.n;
    let mut out = Graph::with_order(n + h.n);
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for (a, b) in h.edges() {
        out.add_edge(n + a, n + b);
    }
    out
}
