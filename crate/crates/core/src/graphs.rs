//! Simple undirected graphs, seeded random generators and the edge-list text format.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Restarts allowed for one call of a random generator.
pub const MAX_GENERATION_RETRIES: usize = 10_000;

/// Deterministic stream selector for every randomized routine in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Seed(pub u64);

impl Seed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }

    /// Independent generator for sub-task `stream` (restart, edge, repeat...).
    /// Uses the ChaCha stream counter, so the result does not depend on the
    /// order in which sub-tasks are run.
    pub fn stream(self, stream: u64) -> ChaCha8Rng {
        let mut rng = self.rng();
        rng.set_stream(stream);
        rng
    }

    /// Derive a child seed, splitmix64 over `seed ^ index`.
    pub fn child(self, index: u64) -> Seed {
        let mut z = (self.0 ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15)).wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        Seed(z ^ (z >> 31))
    }
}

impl From<u64> for Seed {
    fn from(v: u64) -> Self {
        Seed(v)
    }
}

/// Unweighted, undirected simple graph on nodes `0..n`.
///
/// Edges are stored canonically as `(u, v)` with `u < v`, sorted, so two graphs
/// with the same edge set compare equal regardless of construction order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::param(format!("self-loop on node {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::param(format!("edge ({u}, {v}) has an endpoint >= n = {n}")));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::param(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(Self::from_canonical(n, set.into_iter().collect()))
    }

    fn from_canonical(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::from_canonical(n, edges)
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
    }

    /// Cycle on `n >= 3` nodes.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::param("a cycle needs at least 3 nodes"));
        }
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v))).collect();
        Self::from_canonical(a + b, edges)
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Self::new(10, outer.chain(spokes).chain(inner)).expect("petersen is simple")
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|a| a.len() == d)
    }

    /// Position of `(u, v)` in [`Graph::edges`], in either orientation.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Relabel nodes: node `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::param("permutation length differs from node count"));
        }
        Self::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }
}

/// Random graph with the given degree sequence.
///
/// Pairing model: node stubs are shuffled and paired; pairs that would form a
/// loop or a repeated edge are returned to the pool and re-paired. A restart
/// happens when the leftover stubs admit no valid pair.
pub fn random_with_degrees(degrees: &[usize], seed: Seed) -> Result<Graph> {
    let n = degrees.len();
    let total: usize = degrees.iter().sum();
    if !total.is_multiple_of(2) {
        return Err(Error::param(format!("degree sum {total} is odd")));
    }
    if let Some(v) = degrees.iter().position(|&d| d >= n.max(1) && d > 0) {
        return Err(Error::param(format!("node {v} has degree {} >= n = {n}", degrees[v])));
    }
    let mut rng = seed.rng();
    let base: Vec<usize> = degrees.iter().enumerate().flat_map(|(v, &d)| std::iter::repeat_n(v, d)).collect();

    for _ in 0..MAX_GENERATION_RETRIES {
        if let Some(edges) = try_pairing(&base, &mut rng) {
            return Ok(Graph::from_canonical(n, edges.into_iter().collect()));
        }
    }
    Err(Error::Generation(format!(
        "no simple graph realised the degree sequence after {MAX_GENERATION_RETRIES} restarts"
    )))
}

fn try_pairing(base: &[usize], rng: &mut ChaCha8Rng) -> Option<BTreeSet<(usize, usize)>> {
    let mut edges = BTreeSet::new();
    let mut stubs = base.to_vec();
    while !stubs.is_empty() {
        let mut leftover: BTreeMap<usize, usize> = BTreeMap::new();
        stubs.shuffle(rng);
        for pair in stubs.chunks_exact(2) {
            let (a, b) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if a != b && !edges.contains(&(a, b)) {
                edges.insert((a, b));
            } else {
                *leftover.entry(a).or_default() += 1;
                *leftover.entry(b).or_default() += 1;
            }
        }
        if !leftover.is_empty() {
            let nodes: Vec<usize> = leftover.keys().copied().collect();
            let pairable =
                nodes.iter().enumerate().any(|(i, &a)| nodes[i + 1..].iter().any(|&b| !edges.contains(&(a, b))));
            if !pairable {
                return None;
            }
        }
        stubs = leftover.into_iter().flat_map(|(v, c)| std::iter::repeat_n(v, c)).collect();
    }
    Some(edges)
}

/// Random `d`-regular graph on `n` nodes.
pub fn random_regular(n: usize, d: usize, seed: Seed) -> Result<Graph> {
    if !(n * d).is_multiple_of(2) {
        return Err(Error::param(format!("n*d = {} is odd", n * d)));
    }
    if d >= n && d > 0 {
        return Err(Error::param(format!("degree {d} must be smaller than n = {n}")));
    }
    random_with_degrees(&vec![d; n], seed)
}

/// Random simple graph with exactly `m` edges and maximum degree at most `d_max`.
///
/// Candidate pairs are drawn uniformly; those breaking simplicity or the degree
/// cap are rejected. A dead end (no admissible pair left) restarts the draw.
pub fn random_bounded(n: usize, m: usize, d_max: usize, seed: Seed) -> Result<Graph> {
    if m > n * d_max / 2 {
        return Err(Error::param(format!("m = {m} exceeds n*d_max/2 = {}", n * d_max / 2)));
    }
    if m > n * n.saturating_sub(1) / 2 {
        return Err(Error::param(format!("m = {m} exceeds n(n-1)/2 = {}", n * n.saturating_sub(1) / 2)));
    }
    if m == 0 {
        return Ok(Graph::empty(n));
    }
    let mut rng = seed.rng();
    'restart: for _ in 0..MAX_GENERATION_RETRIES {
        let mut deg = vec![0usize; n];
        let mut edges = BTreeSet::new();
        let mut misses = 0usize;
        while edges.len() < m {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            let key = (u.min(v), u.max(v));
            if u == v || deg[u] >= d_max || deg[v] >= d_max || edges.contains(&key) {
                misses += 1;
                if misses > 16 * n * n {
                    let open: Vec<usize> = (0..n).filter(|&x| deg[x] < d_max).collect();
                    let stuck =
                        !open.iter().enumerate().any(|(i, &a)| open[i + 1..].iter().any(|&b| !edges.contains(&(a, b))));
                    if stuck {
                        continue 'restart;
                    }
                    misses = 0;
                }
                continue;
            }
            edges.insert(key);
            deg[u] += 1;
            deg[v] += 1;
            misses = 0;
        }
        return Ok(Graph::from_canonical(n, edges.into_iter().collect()));
    }
    Err(Error::Generation(format!("no bounded-degree graph after {MAX_GENERATION_RETRIES} restarts")))
}

/// Parse the edge-list format: node count on the first line, then one `u v`
/// pair per line. Blank lines and lines starting with `#` are ignored.
pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Parse { line: 1, message: "missing node count".into() })?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::Parse { line: header_line, message: format!("expected node count, found {header:?}") })?;

    let mut seen = BTreeSet::new();
    for (line, body) in lines {
        let err = |message: String| Error::Parse { line, message };
        let mut parts = body.split_whitespace();
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(err(format!("expected \"u v\", found {body:?}")));
        };
        let u: usize = a.parse().map_err(|_| err(format!("bad node index {a:?}")))?;
        let v: usize = b.parse().map_err(|_| err(format!("bad node index {b:?}")))?;
        if u == v {
            return Err(err(format!("self-loop on node {u}")));
        }
        if u >= n || v >= n {
            return Err(err(format!("node index out of range for n = {n}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(format!("duplicate edge ({u}, {v})")));
        }
    }
    Ok(Graph::from_canonical(n, seen.into_iter().collect()))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(8 * (g.edge_count() + 1));
    let _ = writeln!(out, "{}", g.node_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
