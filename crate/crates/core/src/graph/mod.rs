//! Ranked multigraphs with integer edge multiplicities.
//!
//! A [`GradedGraph`] has a unique vertex of rank zero, finite non-empty ranks
//! `0..=max_rank`, and edges only between consecutive ranks. The up operator
//! sends `x` to `sum m(x, y) y` over the covers `y` of `x`; the down operator
//! is its adjoint. Everything here is exact integer arithmetic.

mod io;
mod iso;

pub use io::{EdgeJson, GraphJson, VertexJson};
pub use iso::{graphs_isomorphic, Isomorphism};

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("edge `{a}` -- `{b}` is listed more than once")]
    DuplicateEdge { a: String, b: String },
    #[error("edge `{a}` -- `{b}` joins ranks {rank_a} and {rank_b}, which are not consecutive")]
    NonConsecutiveEdge {
        a: String,
        b: String,
        rank_a: usize,
        rank_b: usize,
    },
    #[error("a graded graph needs exactly one vertex of rank 0, found {0}")]
    RankZeroCount(usize),
    #[error("rank {0} has no vertices")]
    EmptyRank(usize),
    #[error("rank {rank} is out of bounds (max rank {max_rank})")]
    RankOutOfBounds { rank: usize, max_rank: usize },
    #[error("window [{from}, {to}] is invalid for a graph of max rank {max_rank}")]
    WindowOutOfBounds {
        from: usize,
        to: usize,
        max_rank: usize,
    },
    #[error("multiple edge `{a}` -- `{b}` (multiplicity {m}) inside the checked range")]
    MultipleEdge { a: String, b: String, m: u64 },
    #[error("malformed graph JSON: {0}")]
    Json(String),
}

/// A finite truncation of a graded graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedGraph {
    labels: Vec<String>,
    rank_of: Vec<usize>,
    by_rank: Vec<Vec<VertexId>>,
    // position of each vertex inside its rank
    position: Vec<usize>,
    index: HashMap<String, VertexId>,
    // sorted by vertex id
    down: Vec<Vec<(VertexId, u64)>>,
    up: Vec<Vec<(VertexId, u64)>>,
}

impl GradedGraph {
    /// Validates vertex and edge lists and builds the graph.
    ///
    /// Vertex ids are assigned rank by rank, keeping the input order inside a
    /// rank. Edges of multiplicity zero are dropped.
    pub fn build<S, T>(vertices: &[(S, usize)], edges: &[(T, T, u64)]) -> Result<Self, GraphError>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let mut order: Vec<usize> = (0..vertices.len()).collect();
        order.sort_by_key(|&i| vertices[i].1);

        let mut labels = Vec::with_capacity(vertices.len());
        let mut rank_of = Vec::with_capacity(vertices.len());
        let mut index = HashMap::with_capacity(vertices.len());
        for &i in &order {
            let (label, rank) = (vertices[i].0.as_ref(), vertices[i].1);
            if index.insert(label.to_string(), labels.len()).is_some() {
                return Err(GraphError::DuplicateLabel(label.to_string()));
            }
            labels.push(label.to_string());
            rank_of.push(rank);
        }

        let max_rank = rank_of.iter().copied().max().unwrap_or(0);
        let mut by_rank = vec![Vec::new(); max_rank + 1];
        let mut position = vec![0; labels.len()];
        for (v, &rank) in rank_of.iter().enumerate() {
            position[v] = by_rank[rank].len();
            by_rank[rank].push(v);
        }
        if by_rank[0].len() != 1 {
            return Err(GraphError::RankZeroCount(by_rank[0].len()));
        }
        if let Some(rank) = by_rank.iter().position(Vec::is_empty) {
            return Err(GraphError::EmptyRank(rank));
        }

        let mut down = vec![Vec::new(); labels.len()];
        let mut up = vec![Vec::new(); labels.len()];
        for (a, b, m) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = *index
                .get(a)
                .ok_or_else(|| GraphError::UnknownVertex(a.to_string()))?;
            let ib = *index
                .get(b)
                .ok_or_else(|| GraphError::UnknownVertex(b.to_string()))?;
            let (lo, hi) = match (rank_of[ia], rank_of[ib]) {
                (ra, rb) if ra + 1 == rb => (ia, ib),
                (ra, rb) if rb + 1 == ra => (ib, ia),
                (ra, rb) => {
                    return Err(GraphError::NonConsecutiveEdge {
                        a: a.to_string(),
                        b: b.to_string(),
                        rank_a: ra,
                        rank_b: rb,
                    })
                }
            };
            if *m == 0 {
                continue;
            }
            if down[hi].iter().any(|&(w, _)| w == lo) {
                return Err(GraphError::DuplicateEdge {
                    a: a.to_string(),
                    b: b.to_string(),
                });
            }
            down[hi].push((lo, *m));
            up[lo].push((hi, *m));
        }
        for list in down.iter_mut().chain(up.iter_mut()) {
            list.sort_unstable();
        }

        Ok(GradedGraph {
            labels,
            rank_of,
            by_rank,
            position,
            index,
            down,
            up,
        })
    }

    pub fn max_rank(&self) -> usize {
        self.by_rank.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.down.iter().map(Vec::len).sum()
    }

    /// The unique vertex of rank zero.
    pub fn bottom(&self) -> VertexId {
        self.by_rank[0][0]
    }

    /// Vertices of rank `n`, or an empty slice past the top rank.
    pub fn rank(&self, n: usize) -> &[VertexId] {
        self.by_rank.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn rank_sizes(&self) -> Vec<usize> {
        self.by_rank.iter().map(Vec::len).collect()
    }

    pub fn rank_of(&self, v: VertexId) -> usize {
        self.rank_of[v]
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn id(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    fn require(&self, label: &str) -> Result<VertexId, GraphError> {
        self.id(label)
            .ok_or_else(|| GraphError::UnknownVertex(label.to_string()))
    }

    /// Index of `v` inside its rank; rows and columns of rank matrices use it.
    pub fn position(&self, v: VertexId) -> usize {
        self.position[v]
    }

    /// Lower covers of `v` with multiplicities.
    pub fn down(&self, v: VertexId) -> &[(VertexId, u64)] {
        &self.down[v]
    }

    /// Upper covers of `v` with multiplicities.
    pub fn up(&self, v: VertexId) -> &[(VertexId, u64)] {
        &self.up[v]
    }

    /// `m(a, b)` in either orientation; zero when no edge exists.
    pub fn multiplicity(&self, a: VertexId, b: VertexId) -> u64 {
        let (lo, hi) = if self.rank_of[a] < self.rank_of[b] {
            (a, b)
        } else {
            (b, a)
        };
        self.down[hi]
            .binary_search_by_key(&lo, |&(w, _)| w)
            .map(|i| self.down[hi][i].1)
            .unwrap_or(0)
    }

    /// All edges as `(lower, upper, multiplicity)`, ordered by upper then lower id.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, u64)> + '_ {
        self.down
            .iter()
            .enumerate()
            .flat_map(|(hi, list)| list.iter().map(move |&(lo, m)| (lo, hi, m)))
    }

    /// The induced subgraph on ranks `0..=max_rank`.
    pub fn truncate(&self, max_rank: usize) -> GradedGraph {
        let vertices: Vec<(&str, usize)> = (0..self.vertex_count())
            .filter(|&v| self.rank_of[v] <= max_rank)
            .map(|v| (self.label(v), self.rank_of[v]))
            .collect();
        let edges: Vec<(&str, &str, u64)> = self
            .edges()
            .filter(|&(_, hi, _)| self.rank_of[hi] <= max_rank)
            .map(|(lo, hi, m)| (self.label(lo), self.label(hi), m))
            .collect();
        GradedGraph::build(&vertices, &edges).expect("truncation of a valid graph is valid")
    }

    /// Same vertices, every multiplicity replaced by `f(m)`.
    pub(crate) fn map_multiplicities(&self, f: impl Fn(u64) -> u64) -> GradedGraph {
        let mut out = self.clone();
        for list in out.down.iter_mut().chain(out.up.iter_mut()) {
            for entry in list.iter_mut() {
                entry.1 = f(entry.1);
            }
        }
        out
    }

    fn check_rank(&self, rank: usize, limit: usize) -> Result<(), GraphError> {
        if rank > limit {
            return Err(GraphError::RankOutOfBounds {
                rank,
                max_rank: self.max_rank(),
            });
        }
        Ok(())
    }

    /// Matrix of `U` from rank `n` to rank `n + 1`: entry `(y, x) = m(x, y)`.
    pub fn up_matrix(&self, n: usize) -> Result<RankMatrix, GraphError> {
        if n >= self.max_rank() {
            return Err(GraphError::RankOutOfBounds {
                rank: n,
                max_rank: self.max_rank(),
            });
        }
        let mut m = RankMatrix::zeros(n, n + 1, self.rank(n + 1).len(), self.rank(n).len());
        for &x in self.rank(n) {
            for &(y, mult) in self.up(x) {
                m.entries[self.position(y)][self.position(x)] = BigUint::from(mult);
            }
        }
        Ok(m)
    }

    /// Matrix of `D` from rank `n` to rank `n - 1`: entry `(x, y) = m(x, y)`.
    pub fn down_matrix(&self, n: usize) -> Result<RankMatrix, GraphError> {
        if n == 0 {
            return Err(GraphError::RankOutOfBounds {
                rank: 0,
                max_rank: self.max_rank(),
            });
        }
        self.check_rank(n, self.max_rank())?;
        let mut m = RankMatrix::zeros(n, n - 1, self.rank(n - 1).len(), self.rank(n).len());
        for &y in self.rank(n) {
            for &(x, mult) in self.down(y) {
                m.entries[self.position(x)][self.position(y)] = BigUint::from(mult);
            }
        }
        Ok(m)
    }

    /// Checks `DU - UD = rI` on every rank in `[from, to]`.
    ///
    /// `to` must be below the top rank, since the up operator out of the top
    /// rank of a truncation is unknown. At rank 0 the `UD` term vanishes.
    pub fn check_duality(&self, r: u64, from: usize, to: usize) -> Result<DualityReport, GraphError> {
        if from > to || to >= self.max_rank() {
            return Err(GraphError::WindowOutOfBounds {
                from,
                to,
                max_rank: self.max_rank(),
            });
        }
        let mut violations = Vec::new();
        for n in from..=to {
            let upper = self.up_matrix(n)?;
            let lower = if n > 0 { Some(self.up_matrix(n - 1)?) } else { None };
            let size = self.rank(n).len();
            for i in 0..size {
                for j in 0..size {
                    let du: BigUint = (0..upper.rows())
                        .map(|y| &upper.entries[y][i] * &upper.entries[y][j])
                        .sum();
                    let ud: BigUint = match &lower {
                        Some(l) => (0..l.cols())
                            .map(|w| &l.entries[i][w] * &l.entries[j][w])
                            .sum(),
                        None => BigUint::zero(),
                    };
                    let lhs = BigInt::from(du) - BigInt::from(ud);
                    let rhs = if i == j { BigInt::from(r) } else { BigInt::zero() };
                    if lhs != rhs {
                        let (x, y) = (self.rank(n)[i], self.rank(n)[j]);
                        violations.push(DualityViolation {
                            rank: n,
                            x: self.label(x).to_string(),
                            y: self.label(y).to_string(),
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
        Ok(DualityReport {
            r,
            checked_ranks: (from..=to).collect(),
            violations,
        })
    }

    /// Duality over the whole checkable window `[0, max_rank - 1]`.
    pub fn check_duality_full(&self, r: u64) -> Result<DualityReport, GraphError> {
        if self.max_rank() == 0 {
            return Err(GraphError::WindowOutOfBounds {
                from: 0,
                to: 0,
                max_rank: 0,
            });
        }
        self.check_duality(r, 0, self.max_rank() - 1)
    }

    /// Multiplicity-weighted upward path counts `e(x)` for every vertex.
    pub fn path_counts(&self) -> Vec<BigUint> {
        let mut e = vec![BigUint::zero(); self.vertex_count()];
        e[self.bottom()] = BigUint::one();
        for n in 1..=self.max_rank() {
            for &y in self.rank(n) {
                let total: BigUint = self.down(y).iter().map(|&(x, m)| &e[x] * m).sum();
                e[y] = total;
            }
        }
        e
    }

    pub fn path_count(&self, label: &str) -> Result<BigUint, GraphError> {
        let v = self.require(label)?;
        Ok(self.path_counts().swap_remove(v))
    }

    /// `sum of e(x)^2` over the vertices of rank `n`.
    pub fn sum_of_squares(&self, n: usize) -> Result<BigUint, GraphError> {
        self.check_rank(n, self.max_rank())?;
        let e = self.path_counts();
        Ok(self.rank(n).iter().map(|&x| &e[x] * &e[x]).sum())
    }

    /// Structural facts every `r`-dual graded graph without multiple edges on
    /// ranks `0..=m` must satisfy, for pairs `x != y` of rank `m`:
    /// at most one common cover, and any common cover `z` comes with a common
    /// lower cover `w` and unit multiplicities on the square `w, x, y, z`.
    pub fn lemma_checks(&self, m: usize) -> Result<Vec<LemmaViolation>, GraphError> {
        self.check_rank(m, self.max_rank())?;
        for (lo, hi, mult) in self.edges() {
            if self.rank_of(hi) <= m && mult > 1 {
                return Err(GraphError::MultipleEdge {
                    a: self.label(lo).to_string(),
                    b: self.label(hi).to_string(),
                    m: mult,
                });
            }
        }
        let mut violations = Vec::new();
        let level = self.rank(m);
        for (i, &x) in level.iter().enumerate() {
            for &y in &level[i + 1..] {
                let common: Vec<VertexId> = self
                    .up(x)
                    .iter()
                    .filter(|&&(z, _)| self.multiplicity(y, z) > 0)
                    .map(|&(z, _)| z)
                    .collect();
                if common.len() > 1 {
                    violations.push(LemmaViolation::SeveralCommonCovers {
                        x: self.label(x).to_string(),
                        y: self.label(y).to_string(),
                        covers: common.iter().map(|&z| self.label(z).to_string()).collect(),
                    });
                }
                for &z in &common {
                    let w = self
                        .down(x)
                        .iter()
                        .map(|&(w, _)| w)
                        .find(|&w| self.multiplicity(w, y) > 0);
                    let Some(w) = w else {
                        violations.push(LemmaViolation::NoCommonLowerCover {
                            x: self.label(x).to_string(),
                            y: self.label(y).to_string(),
                            z: self.label(z).to_string(),
                        });
                        continue;
                    };
                    let square = [
                        self.multiplicity(x, z),
                        self.multiplicity(y, z),
                        self.multiplicity(w, x),
                        self.multiplicity(w, y),
                    ];
                    if square.iter().any(|&m| m != 1) {
                        violations.push(LemmaViolation::NonUnitSquare {
                            w: self.label(w).to_string(),
                            x: self.label(x).to_string(),
                            y: self.label(y).to_string(),
                            z: self.label(z).to_string(),
                            multiplicities: square,
                        });
                    }
                }
            }
        }
        Ok(violations)
    }
}

/// Dense matrix of an up or down operator between two adjacent ranks.
///
/// Rows are indexed by vertices of `target_rank`, columns by vertices of
/// `source_rank`, both in [`GradedGraph::position`] order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankMatrix {
    pub source_rank: usize,
    pub target_rank: usize,
    pub entries: Vec<Vec<BigUint>>,
}

impl RankMatrix {
    fn zeros(source_rank: usize, target_rank: usize, rows: usize, cols: usize) -> Self {
        RankMatrix {
            source_rank,
            target_rank,
            entries: vec![vec![BigUint::zero(); cols]; rows],
        }
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn transpose(&self) -> RankMatrix {
        let mut t = RankMatrix::zeros(self.target_rank, self.source_rank, self.cols(), self.rows());
        for (i, row) in self.entries.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                t.entries[j][i] = v.clone();
            }
        }
        t
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityViolation {
    pub rank: usize,
    pub x: String,
    pub y: String,
    /// Entry of `DU - UD`.
    pub lhs: BigInt,
    /// Entry of `rI`.
    pub rhs: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub r: u64,
    pub checked_ranks: Vec<usize>,
    pub violations: Vec<DualityViolation>,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LemmaViolation {
    SeveralCommonCovers {
        x: String,
        y: String,
        covers: Vec<String>,
    },
    NoCommonLowerCover {
        x: String,
        y: String,
        z: String,
    },
    NonUnitSquare {
        w: String,
        x: String,
        y: String,
        z: String,
        multiplicities: [u64; 4],
    },
}
