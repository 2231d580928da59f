//! Per-edge lightcone subgraphs and the isomorphism classes of p=1 lightcones.
//!
//! At depth `p` the expectation `<Z_j Z_k>` only depends on the edges that touch
//! a node within distance `p - 1` of `{j, k}`. For `p = 1` that is the set of
//! edges incident to `j` or `k`: a double star on the central edge where `t`
//! outer nodes are shared. The triple `(d1, d2, t)` pins it down up to
//! isomorphism.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graphs::Graph;

/// Lightcone subgraph of one edge. Local node 0 and 1 are the central pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lightcone {
    pub subgraph: Graph,
    pub central_edge: (usize, usize),
    /// Edge of the parent graph this lightcone was cut around.
    pub origin: (usize, usize),
    pub depth: usize,
    /// `nodes[local] = parent index`.
    pub nodes: Vec<usize>,
}

impl Lightcone {
    pub fn qubits(&self) -> usize {
        self.subgraph.node_count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LightconeClass {
    pub d1: usize,
    pub d2: usize,
    pub t: usize,
}

impl LightconeClass {
    pub fn new(d1: usize, d2: usize, t: usize) -> Result<Self> {
        if d1 < 1 || d1 > d2 || t >= d1 {
            return Err(Error::param(format!(
                "invalid lightcone class ({d1}, {d2}, {t}): need 1 <= d1 <= d2 and t < d1"
            )));
        }
        Ok(LightconeClass { d1, d2, t })
    }

    pub fn is_regular(&self) -> bool {
        self.d1 == self.d2
    }

    /// Nodes in the realized lightcone.
    pub fn node_count(&self) -> usize {
        self.d1 + self.d2 - self.t
    }

    /// Edges in the realized lightcone.
    pub fn edge_count(&self) -> usize {
        self.d1 + self.d2 - 1
    }

    /// `Some(0)` for all-even degrees, `Some(1)` for all-odd, `None` when mixed.
    pub fn parity(&self) -> Option<usize> {
        (self.d1 % 2 == self.d2 % 2).then_some(self.d1 % 2)
    }
}

impl fmt::Display for LightconeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}-{}", self.d1, self.d2, self.t)
    }
}

impl FromStr for LightconeClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split('-').collect();
        let bad = || Error::param(format!("bad class token {s:?}, expected d1-d2-t"));
        if parts.len() != 3 {
            return Err(bad());
        }
        let nums: Vec<usize> = parts.iter().map(|p| p.parse().map_err(|_| bad())).collect::<Result<_>>()?;
        LightconeClass::new(nums[0], nums[1], nums[2])
    }
}

impl Serialize for LightconeClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LightconeClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Cut the depth-`p` lightcone of `edge` out of `g`.
pub fn extract(g: &Graph, edge: (usize, usize), p: usize) -> Result<Lightcone> {
    let (j, k) = edge;
    if !g.has_edge(j, k) {
        return Err(Error::param(format!("({j}, {k}) is not an edge of the graph")));
    }
    if p == 0 {
        return Err(Error::param("lightcone depth must be at least 1"));
    }

    let mut dist = vec![usize::MAX; g.node_count()];
    let mut queue = VecDeque::new();
    for s in [j, k] {
        dist[s] = 0;
        queue.push_back(s);
    }
    while let Some(u) = queue.pop_front() {
        if dist[u] + 1 > p - 1 {
            continue;
        }
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }

    let inner = |v: usize| dist[v] < p;
    let kept: Vec<(usize, usize)> = g.edges().iter().copied().filter(|&(u, v)| inner(u) || inner(v)).collect();

    let mut nodes = vec![j, k];
    let mut others: Vec<usize> = kept.iter().flat_map(|&(u, v)| [u, v]).filter(|&v| v != j && v != k).collect();
    others.sort_unstable();
    others.dedup();
    nodes.extend(others);

    let mut local = BTreeMap::new();
    for (i, &v) in nodes.iter().enumerate() {
        local.insert(v, i);
    }
    let subgraph = Graph::new(nodes.len(), kept.iter().map(|&(u, v)| (local[&u], local[&v])))?;

    Ok(Lightcone { subgraph, central_edge: (0, 1), origin: edge, depth: p, nodes })
}

pub fn classify(lc: &Lightcone) -> Result<LightconeClass> {
    if lc.depth != 1 {
        return Err(Error::UnsupportedDepth(lc.depth));
    }
    let (a, b) = lc.central_edge;
    let g = &lc.subgraph;
    let shared = g.neighbors(a).iter().filter(|&&w| g.has_edge(b, w)).count();
    let (da, db) = (g.degree(a), g.degree(b));
    LightconeClass::new(da.min(db), da.max(db), shared)
}

/// Smallest graph whose p=1 lightcone at edge (0, 1) has class `c`.
///
/// Layout: `0, 1` central, then `t` shared neighbours, then the private
/// neighbours of node 0, then those of node 1.
pub fn realize(c: LightconeClass) -> Result<Lightcone> {
    let c = LightconeClass::new(c.d1, c.d2, c.t)?;
    let n = c.node_count();
    let mut edges = vec![(0, 1)];
    let mut next = 2;
    for _ in 0..c.t {
        edges.push((0, next));
        edges.push((1, next));
        next += 1;
    }
    for _ in 0..c.d1 - 1 - c.t {
        edges.push((0, next));
        next += 1;
    }
    for _ in 0..c.d2 - 1 - c.t {
        edges.push((1, next));
        next += 1;
    }
    debug_assert_eq!(next, n);
    Ok(Lightcone {
        subgraph: Graph::new(n, edges)?,
        central_edge: (0, 1),
        origin: (0, 1),
        depth: 1,
        nodes: (0..n).collect(),
    })
}

/// Classes `(d, d, t)` of regular graphs, `2 <= d <= d_max`, ordered by `(d, t)`.
pub fn enumerate_regular(d_max: usize) -> Vec<LightconeClass> {
    (2..=d_max).flat_map(|d| (0..d).map(move |t| LightconeClass { d1: d, d2: d, t })).collect()
}

/// All classes with `1 <= d1 <= d2 <= d_max`, ordered by `(d1, d2, t)`.
pub fn enumerate_general(d_max: usize) -> Vec<LightconeClass> {
    (1..=d_max)
        .flat_map(|d1| (d1..=d_max).flat_map(move |d2| (0..d1).map(move |t| LightconeClass { d1, d2, t })))
        .collect()
}

/// Occurrence count of every p=1 lightcone class over the edges of a graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ClassHistogram {
    pub counts: BTreeMap<LightconeClass, usize>,
}

impl ClassHistogram {
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn classes(&self) -> impl Iterator<Item = LightconeClass> + '_ {
        self.counts.keys().copied()
    }

    pub fn tokens(&self) -> Vec<String> {
        self.classes().map(|c| c.to_string()).collect()
    }
}

pub fn histogram(g: &Graph, p: usize) -> Result<ClassHistogram> {
    if p != 1 {
        return Err(Error::UnsupportedDepth(p));
    }
    let mut h = ClassHistogram::default();
    for &e in g.edges() {
        let c = classify(&extract(g, e, 1)?)?;
        *h.counts.entry(c).or_default() += 1;
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{random_bounded, Seed};
    use proptest::prelude::*;

    fn class(d1: usize, d2: usize, t: usize) -> LightconeClass {
        LightconeClass::new(d1, d2, t).unwrap()
    }

    #[test]
    fn extract_examples() {
        let tri = Graph::complete(3);
        let lc = extract(&tri, (0, 1), 1).unwrap();
        assert_eq!(lc.subgraph, tri);
        assert_eq!(classify(&lc).unwrap(), class(2, 2, 1));

        let k4 = Graph::complete(4);
        for &e in k4.edges() {
            assert_eq!(classify(&extract(&k4, e, 1).unwrap()).unwrap(), class(3, 3, 2));
        }

        // 6-cycle around (0,1): path 5-0-1-2.
        let c6 = Graph::cycle(6).unwrap();
        let lc = extract(&c6, (0, 1), 1).unwrap();
        assert_eq!(lc.nodes, vec![0, 1, 2, 5]);
        let parent_edges: Vec<_> = lc
            .subgraph
            .edges()
            .iter()
            .map(|&(u, v)| (lc.nodes[u].min(lc.nodes[v]), lc.nodes[u].max(lc.nodes[v])))
            .collect();
        assert_eq!(parent_edges.len(), 3);
        for e in [(0, 1), (1, 2), (0, 5)] {
            assert!(parent_edges.contains(&e));
        }
        assert_eq!(classify(&lc).unwrap(), class(2, 2, 0));

        assert!(matches!(extract(&c6, (0, 3), 1), Err(Error::Parameter(_))));
        assert!(matches!(extract(&c6, (0, 1), 0), Err(Error::Parameter(_))));
    }

    #[test]
    fn classify_examples() {
        let edge = Graph::path(2);
        assert_eq!(classify(&extract(&edge, (0, 1), 1).unwrap()).unwrap(), class(1, 1, 0));
        let pet = Graph::petersen();
        for &e in pet.edges() {
            assert_eq!(classify(&extract(&pet, e, 1).unwrap()).unwrap(), class(3, 3, 0));
        }
        let deep = extract(&pet, (0, 1), 2).unwrap();
        assert_eq!(classify(&deep), Err(Error::UnsupportedDepth(2)));
    }

    #[test]
    fn realize_examples() {
        let lc = realize(class(1, 1, 0)).unwrap();
        assert_eq!(lc.subgraph, Graph::path(2));

        let lc = realize(class(3, 3, 2)).unwrap();
        assert_eq!(lc.qubits(), 4);
        assert_eq!(lc.subgraph.edge_count(), 5);
        assert!(!lc.subgraph.has_edge(2, 3));

        assert!(realize(LightconeClass { d1: 2, d2: 2, t: 2 }).is_err());
        assert!(realize(LightconeClass { d1: 3, d2: 2, t: 0 }).is_err());
        assert!(realize(LightconeClass { d1: 0, d2: 2, t: 0 }).is_err());
    }

    #[test]
    fn classify_realize_round_trip() {
        for c in enumerate_general(8) {
            let lc = realize(c).unwrap();
            assert_eq!(lc.qubits(), 2 + c.t + (c.d1 - 1 - c.t) + (c.d2 - 1 - c.t));
            assert_eq!(classify(&lc).unwrap(), c);
        }
    }

    #[test]
    fn enumeration_counts() {
        let reg = enumerate_regular(8);
        assert_eq!(reg.len(), 35);
        assert_eq!(reg.iter().filter(|c| c.d1 == 3).count(), 3);
        assert_eq!(enumerate_regular(3).len(), 5);
        assert_eq!(enumerate_regular(2), vec![class(2, 2, 0), class(2, 2, 1)]);
        for d_max in 2..=10 {
            assert_eq!(enumerate_regular(d_max).len(), (2..=d_max).sum::<usize>());
        }

        assert_eq!(enumerate_general(1), vec![class(1, 1, 0)]);
        assert_eq!(enumerate_general(2), vec![class(1, 1, 0), class(1, 2, 0), class(2, 2, 0), class(2, 2, 1)]);
        // Brute force over all triples for d_max = 6.
        let mut brute = Vec::new();
        for d1 in 0..=7 {
            for d2 in 0..=7 {
                for t in 0..=7 {
                    if let Ok(c) = LightconeClass::new(d1, d2, t) {
                        if c.d2 <= 6 {
                            brute.push(c);
                        }
                    }
                }
            }
        }
        brute.sort();
        let general = enumerate_general(6);
        assert_eq!(general, brute);
        assert_eq!(general.len(), 56);
        assert_eq!(general.iter().filter(|c| c.d1 >= 2).count(), 50);
    }

    #[test]
    fn tokens() {
        assert_eq!(class(3, 3, 1).to_string(), "3-3-1");
        assert_eq!("3-5-2".parse::<LightconeClass>().unwrap(), class(3, 5, 2));
        assert!("3-3".parse::<LightconeClass>().is_err());
        assert!("3-2-0".parse::<LightconeClass>().is_err());
        let json = serde_json::to_string(&class(2, 4, 1)).unwrap();
        assert_eq!(json, "\"2-4-1\"");
    }

    #[test]
    fn histogram_examples() {
        let h = histogram(&Graph::complete(3), 1).unwrap();
        assert_eq!(h.counts, BTreeMap::from([(class(2, 2, 1), 3)]));
        let h = histogram(&Graph::complete(4), 1).unwrap();
        assert_eq!(h.counts, BTreeMap::from([(class(3, 3, 2), 6)]));
        let h = histogram(&Graph::cycle(6).unwrap(), 1).unwrap();
        assert_eq!(h.counts, BTreeMap::from([(class(2, 2, 0), 6)]));
        assert_eq!(serde_json::to_string(&h).unwrap(), r#"{"2-2-0":6}"#);
        assert!(histogram(&Graph::complete(3), 2).is_err());
        assert_eq!(histogram(&Graph::empty(4), 1).unwrap().total(), 0);
    }

    fn brute_lightcone_edges(g: &Graph, (j, k): (usize, usize), p: usize) -> Vec<(usize, usize)> {
        // Floyd-Warshall distances, independent of the BFS in `extract`.
        let n = g.node_count();
        let inf = usize::MAX / 4;
        let mut d = vec![vec![inf; n]; n];
        for v in 0..n {
            d[v][v] = 0;
        }
        for &(u, v) in g.edges() {
            d[u][v] = 1;
            d[v][u] = 1;
        }
        for w in 0..n {
            for u in 0..n {
                for v in 0..n {
                    d[u][v] = d[u][v].min(d[u][w] + d[w][v]);
                }
            }
        }
        let near = |v: usize| d[j][v].min(d[k][v]) < p;
        g.edges().iter().copied().filter(|&(u, v)| near(u) || near(v)).collect()
    }

    proptest! {
        #[test]
        fn extract_matches_brute_force(n in 3usize..=12, frac in 0.1f64..0.9, p in 1usize..=3, seed in any::<u64>(), pick in any::<usize>()) {
            let m = (((n * (n - 1) / 2) as f64 * frac) as usize).max(1);
            let g = random_bounded(n, m, n - 1, Seed(seed)).unwrap();
            let e = g.edges()[pick % g.edge_count()];
            let lc = extract(&g, e, p).unwrap();
            let mut got: Vec<(usize, usize)> = lc.subgraph.edges().iter()
                .map(|&(u, v)| { let (a, b) = (lc.nodes[u], lc.nodes[v]); (a.min(b), a.max(b)) })
                .collect();
            got.sort_unstable();
            prop_assert_eq!(got, brute_lightcone_edges(&g, e, p));
            prop_assert!(lc.subgraph.has_edge(0, 1));
        }

        #[test]
        fn histogram_invariant_under_relabeling(n in 3usize..=14, frac in 0.1f64..0.8, seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            let m = (((n * (n - 1) / 2) as f64 * frac) as usize).max(1);
            let g = random_bounded(n, m, 6.min(n - 1), Seed(seed)).unwrap_or_else(|_| Graph::path(n));
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut Seed(seed).rng());
            let h = histogram(&g, 1).unwrap();
            prop_assert_eq!(h.total(), g.edge_count());
            prop_assert_eq!(histogram(&g.relabel(&perm).unwrap(), 1).unwrap(), h);
        }
    }
}
