//! Exact MaxCut: exhaustive enumeration for small graphs and branch-and-bound
//! with a time budget beyond that.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::Graph;

pub const BRUTE_FORCE_MAX_NODES: usize = 28;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutSolution {
    pub value: usize,
    /// Side of each node.
    pub assignment: Vec<bool>,
}

impl CutSolution {
    /// Assignment as a `0`/`1` string, node 0 first.
    pub fn assignment_string(&self) -> String {
        self.assignment.iter().map(|&s| if s { '1' } else { '0' }).collect()
    }
}

pub fn cut_value(g: &Graph, assignment: &[bool]) -> usize {
    g.edges().iter().filter(|&&(u, v)| assignment[u] != assignment[v]).count()
}

/// Optimal cut by enumerating all `2^(n-1)` assignments with node 0 on side 0,
/// in Gray-code order so every step flips one node.
pub fn brute_force(g: &Graph) -> Result<CutSolution> {
    let n = g.node_count();
    if n > BRUTE_FORCE_MAX_NODES {
        return Err(Error::Capacity(format!("brute force is limited to {BRUTE_FORCE_MAX_NODES} nodes, got {n}")));
    }
    if n <= 1 {
        return Ok(CutSolution { value: 0, assignment: vec![false; n] });
    }
    let masks: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u)).collect();
    let mut x = 0u32;
    let mut cut: i64 = 0;
    let (mut best, mut best_x) = (0i64, 0u32);
    for i in 1u64..(1u64 << (n - 1)) {
        let v = i.trailing_zeros() as usize + 1;
        let ones = (masks[v] & x).count_ones() as i64;
        let deg = masks[v].count_ones() as i64;
        let same = if x >> v & 1 == 1 { ones } else { deg - ones };
        cut += 2 * same - deg;
        x ^= 1 << v;
        if cut > best {
            best = cut;
            best_x = x;
        }
    }
    Ok(CutSolution { value: best as usize, assignment: (0..n).map(|v| best_x >> v & 1 == 1).collect() })
}

/// Greedy placement followed by single-node flips until no flip improves the cut.
pub fn local_search(g: &Graph) -> CutSolution {
    let n = g.node_count();
    let mut side = vec![false; n];
    let mut placed = vec![false; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for &v in &order {
        let (mut on0, mut on1) = (0, 0);
        for &u in g.neighbors(v) {
            if placed[u] {
                if side[u] {
                    on1 += 1
                } else {
                    on0 += 1
                }
            }
        }
        side[v] = on0 > on1;
        placed[v] = true;
    }
    loop {
        let mut improved = false;
        for v in 0..n {
            let same = g.neighbors(v).iter().filter(|&&u| side[u] == side[v]).count();
            if 2 * same > g.degree(v) {
                side[v] = !side[v];
                improved = true;
            }
        }
        if !improved {
            break;
        }
    }
    if n > 0 && side[0] {
        side.iter_mut().for_each(|s| *s = !*s);
    }
    CutSolution { value: cut_value(g, &side), assignment: side }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BnbOutcome {
    pub solution: CutSolution,
    /// `true` when the search finished within budget.
    pub optimal: bool,
    /// Proven upper bound on the optimum; equals `solution.value` when optimal.
    pub upper_bound: usize,
    pub nodes_explored: u64,
}

/// Branch-and-bound in a fixed highest-degree-first order.
///
/// The bound at a search node is the decided cut, plus for every undecided
/// node the better of its two sides against the decided ones, plus the exact
/// MaxCut of the subgraph induced by the undecided nodes. That last term is
/// available because suffixes of the order are solved smallest first, each
/// solve reusing the smaller ones.
pub fn branch_and_bound(g: &Graph, budget: Option<Duration>) -> BnbOutcome {
    let n = g.node_count();
    if n == 0 {
        return BnbOutcome {
            solution: CutSolution { value: 0, assignment: Vec::new() },
            optimal: true,
            upper_bound: 0,
            nodes_explored: 0,
        };
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // Adjacency in position space, later neighbours only.
    let later: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let mut a: Vec<usize> = g.neighbors(order[i]).iter().map(|&u| pos[u]).filter(|&j| j > i).collect();
            a.sort_unstable();
            a
        })
        .collect();
    let better_side = |i: usize, side: &[bool]| {
        let ones = later[i].iter().filter(|&&j| side[j]).count();
        let zeros = later[i].len() - ones;
        (zeros > ones, zeros.max(ones))
    };

    let mut search = Search {
        n,
        later: &later,
        suffix_opt: vec![0; n + 1],
        side: vec![false; n],
        w: vec![[0; 2]; n],
        best: 0,
        best_side: vec![false; n],
        nodes: 0,
        deadline: budget.map(|b| Instant::now() + b),
        timed_out: false,
    };
    let ls = local_search(g);

    // Best known assignment of the current suffix, in position space.
    let mut suffix_side = vec![false; n];
    let mut solved_from = n;
    for k in (0..n).rev() {
        let (s, gain) = better_side(k, &suffix_side);
        suffix_side[k] = s;
        let mut seed_value = search.suffix_opt[k + 1] + gain;
        if k == 0 && ls.value > seed_value {
            for i in 0..n {
                suffix_side[i] = ls.assignment[order[i]];
            }
            seed_value = ls.value;
        }
        match search.solve_suffix(k, seed_value, &suffix_side) {
            Some(side) => {
                suffix_side[k..].copy_from_slice(&side[k..]);
                search.suffix_opt[k] = search.best;
                solved_from = k;
            }
            None => {
                suffix_side[k..].copy_from_slice(&search.best_side[k..]);
                break;
            }
        }
    }

    let optimal = solved_from == 0;
    if !optimal {
        // The timed-out suffix starts at solved_from - 1; fill the rest greedily.
        for i in (0..solved_from - 1).rev() {
            suffix_side[i] = better_side(i, &suffix_side).0;
        }
    }
    let mut assignment = vec![false; n];
    for i in 0..n {
        assignment[order[i]] = suffix_side[i];
    }
    if assignment[0] {
        assignment.iter_mut().for_each(|s| *s = !*s);
    }
    let mut solution = CutSolution { value: cut_value(g, &assignment), assignment };
    if ls.value > solution.value {
        solution = ls;
    }

    let upper_bound = if optimal {
        solution.value
    } else {
        // Solved suffix optimum plus every edge from an earlier node.
        let prefix_edges: usize = later[..solved_from].iter().map(Vec::len).sum();
        (search.suffix_opt[solved_from] + prefix_edges).min(g.edge_count()).max(solution.value)
    };
    BnbOutcome { solution, optimal, upper_bound, nodes_explored: search.nodes }
}

struct Search<'a> {
    n: usize,
    later: &'a [Vec<usize>],
    /// Exact MaxCut of the subgraph induced by positions `k..n`, once solved.
    suffix_opt: Vec<usize>,
    side: Vec<bool>,
    /// Decided neighbours of each undecided position, per side.
    w: Vec<[usize; 2]>,
    best: usize,
    best_side: Vec<bool>,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl Search<'_> {
    /// Exact MaxCut of the suffix starting at `k`; `None` on timeout.
    fn solve_suffix(&mut self, k: usize, incumbent: usize, incumbent_side: &[bool]) -> Option<Vec<bool>> {
        self.best = incumbent;
        self.best_side.copy_from_slice(incumbent_side);
        for w in &mut self.w[k..] {
            *w = [0, 0];
        }
        self.dfs(k, k, 0, 0);
        if self.timed_out {
            None
        } else {
            Some(self.best_side.clone())
        }
    }

    fn dfs(&mut self, k: usize, depth: usize, cut: usize, slack: usize) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        if self.timed_out {
            return;
        }
        if depth == self.n {
            if cut > self.best {
                self.best = cut;
                self.best_side[k..].copy_from_slice(&self.side[k..]);
            }
            return;
        }
        // slack = sum over undecided u of max(w0, w1).
        if depth > k && cut + slack + self.suffix_opt[depth] <= self.best {
            return;
        }
        let v = depth;
        let sides: &[bool] = if depth == k { &[false] } else { &[false, true] };
        for &s in sides {
            let gain = self.w[v][usize::from(!s)];
            let mut new_slack = slack - self.w[v][0].max(self.w[v][1]);
            self.side[v] = s;
            for &u in &self.later[v] {
                let before = self.w[u][0].max(self.w[u][1]);
                self.w[u][usize::from(s)] += 1;
                new_slack = new_slack + self.w[u][0].max(self.w[u][1]) - before;
            }
            self.dfs(k, depth + 1, cut + gain, new_slack);
            for &u in &self.later[v] {
                self.w[u][usize::from(s)] -= 1;
            }
            if self.timed_out {
                return;
            }
        }
    }
}
