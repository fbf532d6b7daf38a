//! Rank- and multiplicity-preserving isomorphism search.
//!
//! Vertices are first split by an invariant (rank, sorted lower and upper
//! multiplicities, path count) and then matched by backtracking in
//! rank-then-label order, so the first bijection found is deterministic.

use num_bigint::BigUint;

use super::{GradedGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Invariant {
    rank: usize,
    down: Vec<u64>,
    up: Vec<u64>,
    paths: BigUint,
}

fn invariants(g: &GradedGraph) -> Vec<Invariant> {
    let e = g.path_counts();
    (0..g.vertex_count())
        .map(|v| {
            let mut down: Vec<u64> = g.down(v).iter().map(|&(_, m)| m).collect();
            let mut up: Vec<u64> = g.up(v).iter().map(|&(_, m)| m).collect();
            down.sort_unstable();
            up.sort_unstable();
            Invariant {
                rank: g.rank_of(v),
                down,
                up,
                paths: e[v].clone(),
            }
        })
        .collect()
}

/// A bijection from the vertices of one graph onto another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    /// `forward[v]` is the image of vertex `v` of the first graph.
    pub forward: Vec<VertexId>,
}

impl Isomorphism {
    pub fn label_pairs<'a>(&self, p: &'a GradedGraph, q: &'a GradedGraph) -> Vec<(&'a str, &'a str)> {
        self.forward
            .iter()
            .enumerate()
            .map(|(v, &w)| (p.label(v), q.label(w)))
            .collect()
    }

    /// Edge-by-edge validation of the bijection.
    pub fn validates(&self, p: &GradedGraph, q: &GradedGraph) -> bool {
        if self.forward.len() != p.vertex_count() || p.vertex_count() != q.vertex_count() {
            return false;
        }
        let mut seen = vec![false; q.vertex_count()];
        for (v, &w) in self.forward.iter().enumerate() {
            if w >= seen.len() || seen[w] || p.rank_of(v) != q.rank_of(w) {
                return false;
            }
            seen[w] = true;
        }
        p.edge_count() == q.edge_count()
            && p
                .edges()
                .all(|(lo, hi, m)| q.multiplicity(self.forward[lo], self.forward[hi]) == m)
    }
}

pub fn graphs_isomorphic(p: &GradedGraph, q: &GradedGraph) -> Option<Isomorphism> {
    if p.rank_sizes() != q.rank_sizes() || p.edge_count() != q.edge_count() {
        return None;
    }
    let inv_p = invariants(p);
    let inv_q = invariants(q);
    let mut sorted_p = inv_p.clone();
    let mut sorted_q = inv_q.clone();
    sorted_p.sort();
    sorted_q.sort();
    if sorted_p != sorted_q {
        return None;
    }

    let mut order: Vec<VertexId> = (0..p.vertex_count()).collect();
    order.sort_by(|&a, &b| (p.rank_of(a), p.label(a)).cmp(&(p.rank_of(b), p.label(b))));
    let candidates: Vec<Vec<VertexId>> = order
        .iter()
        .map(|&v| {
            let mut c: Vec<VertexId> = q
                .rank(p.rank_of(v))
                .iter()
                .copied()
                .filter(|&w| inv_q[w] == inv_p[v])
                .collect();
            c.sort_by(|&a, &b| q.label(a).cmp(q.label(b)));
            c
        })
        .collect();

    let mut search = Search {
        p,
        q,
        order: &order,
        candidates: &candidates,
        forward: vec![usize::MAX; p.vertex_count()],
        used: vec![false; q.vertex_count()],
    };
    search.extend(0).then_some(Isomorphism {
        forward: search.forward,
    })
}

struct Search<'a> {
    p: &'a GradedGraph,
    q: &'a GradedGraph,
    order: &'a [VertexId],
    candidates: &'a [Vec<VertexId>],
    forward: Vec<VertexId>,
    used: Vec<bool>,
}

impl Search<'_> {
    // Vertices are placed in rank order, so every lower cover of `v` is
    // already mapped and each edge is checked exactly once, from above.
    fn consistent(&self, v: VertexId, w: VertexId) -> bool {
        let below_p = self.p.down(v);
        let below_q = self.q.down(w);
        below_p.len() == below_q.len()
            && below_p
                .iter()
                .all(|&(x, m)| self.q.multiplicity(self.forward[x], w) == m)
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for &w in &self.candidates[depth] {
            if self.used[w] || !self.consistent(v, w) {
                continue;
            }
            self.forward[v] = w;
            self.used[w] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[w] = false;
            self.forward[v] = usize::MAX;
        }
        false
    }
}
