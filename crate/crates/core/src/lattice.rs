//! Integer partitions, Young's lattice and the graphs built from it.
//!
//! Labels follow one grammar throughout the crate: a partition is its parts
//! joined by commas (`"3,1"`), the empty partition is `"-"`, and a tuple of
//! partitions joins its components with semicolons (`"2;-;1"`). Products of
//! graphs join the factor labels the same way, so `Y x Y` is labelled by
//! pairs of partitions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::graph::GradedGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("cannot parse `{0}` as a partition")]
    Parse(String),
    #[error("scale factor must be positive")]
    ZeroScale,
    #[error("wreath graph needs at least one dimension")]
    EmptyDims,
    #[error("dimensions must be positive")]
    ZeroDim,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, LatticeError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(LatticeError::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `i`, zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Rows to which a box can be added.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.len())
            .filter(|&i| i == 0 || self.row(i - 1) > self.row(i))
            .collect()
    }

    /// Rows from which a box can be removed.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.row(i) > self.row(i + 1))
            .collect()
    }

    /// Adds a box at the end of row `i`; `None` if the result is not a partition.
    pub fn add_box(&self, i: usize) -> Option<Partition> {
        if i > self.len() || (i > 0 && self.row(i - 1) <= self.row(i)) {
            return None;
        }
        let mut parts = self.parts.clone();
        if i == parts.len() {
            parts.push(1);
        } else {
            parts[i] += 1;
        }
        Some(Partition { parts })
    }

    pub fn remove_box(&self, i: usize) -> Option<Partition> {
        if i >= self.len() || self.row(i) <= self.row(i + 1) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[i] -= 1;
        if parts[i] == 0 {
            parts.pop();
        }
        Some(Partition { parts })
    }

    /// Whether the diagram of `other` sits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.row(i) <= self.row(i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = LatticeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| LatticeError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// An `r`-tuple of partitions, a vertex of `Y^r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionTuple {
    components: Vec<Partition>,
}

impl PartitionTuple {
    pub fn new(components: Vec<Partition>) -> Self {
        PartitionTuple { components }
    }

    pub fn empty(r: usize) -> Self {
        PartitionTuple {
            components: vec![Partition::empty(); r],
        }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn total_size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    /// Adds a box in row `row` of component `k`.
    pub fn add_box(&self, k: usize, row: usize) -> Option<PartitionTuple> {
        let grown = self.components.get(k)?.add_box(row)?;
        let mut components = self.components.clone();
        components[k] = grown;
        Some(PartitionTuple { components })
    }

    /// The `(component, row)` of the single box separating `self` from a cover.
    pub fn covered_step(&self, upper: &PartitionTuple) -> Option<(usize, usize)> {
        if self.r() != upper.r() || upper.total_size() != self.total_size() + 1 {
            return None;
        }
        let k = (0..self.r()).find(|&k| self.components[k] != upper.components[k])?;
        if self.components[k + 1..] != upper.components[k + 1..] {
            return None;
        }
        let (lo, hi) = (&self.components[k], &upper.components[k]);
        let row = (0..hi.len()).find(|&i| lo.row(i) != hi.row(i))?;
        (lo.add_box(row).as_ref() == Some(hi)).then_some((k, row))
    }
}

impl fmt::Display for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for PartitionTuple {
    type Err = LatticeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let components = s
            .split(';')
            .map(str::parse)
            .collect::<Result<Vec<Partition>, _>>()?;
        Ok(PartitionTuple { components })
    }
}

/// All `r`-tuples of partitions with total size `n`.
pub fn partition_tuples(r: usize, n: usize) -> Vec<PartitionTuple> {
    fn go(r: usize, remaining: usize, prefix: &mut Vec<Partition>, out: &mut Vec<PartitionTuple>) {
        if prefix.len() + 1 == r {
            for p in partitions_of(remaining) {
                let mut components = prefix.clone();
                components.push(p);
                out.push(PartitionTuple { components });
            }
            return;
        }
        for size in (0..=remaining).rev() {
            for p in partitions_of(size) {
                prefix.push(p);
                go(r, remaining - size, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if r == 0 {
        if n == 0 {
            out.push(PartitionTuple { components: vec![] });
        }
        return out;
    }
    go(r, n, &mut Vec::new(), &mut out);
    out
}

/// Young's lattice truncated at `max_rank`.
pub fn young_lattice(max_rank: usize) -> GradedGraph {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for n in 0..=max_rank {
        for p in partitions_of(n) {
            if n < max_rank {
                for row in p.addable_rows() {
                    let q = p.add_box(row).expect("addable row");
                    edges.push((p.to_string(), q.to_string(), 1));
                }
            }
            vertices.push((p.to_string(), n));
        }
    }
    GradedGraph::build(&vertices, &edges).expect("Young's lattice is a graded graph")
}

/// Cartesian product of graded graphs: a cover moves exactly one coordinate
/// and inherits that coordinate's multiplicity. Truncated at the smaller of
/// the two top ranks.
pub fn product(p: &GradedGraph, q: &GradedGraph) -> GradedGraph {
    let top = p.max_rank().min(q.max_rank());
    let pair = |x: usize, y: usize| format!("{};{}", p.label(x), q.label(y));
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for n in 0..=top {
        for a in 0..=n {
            for &x in p.rank(a) {
                for &y in q.rank(n - a) {
                    vertices.push((pair(x, y), n));
                    if n == top {
                        continue;
                    }
                    for &(x2, m) in p.up(x) {
                        edges.push((pair(x, y), pair(x2, y), m));
                    }
                    for &(y2, m) in q.up(y) {
                        edges.push((pair(x, y), pair(x, y2), m));
                    }
                }
            }
        }
    }
    GradedGraph::build(&vertices, &edges).expect("product labels are distinct")
}

/// Multiplies every edge multiplicity by `d`.
pub fn scale(p: &GradedGraph, d: u64) -> Result<GradedGraph, LatticeError> {
    if d == 0 {
        return Err(LatticeError::ZeroScale);
    }
    Ok(p.map_multiplicities(|m| m * d))
}

/// `(d_1 Y) x ... x (d_k Y)` truncated at `max_rank`.
pub fn wreath_graph(dims: &[u64], max_rank: usize) -> Result<GradedGraph, LatticeError> {
    let (&first, rest) = dims.split_first().ok_or(LatticeError::EmptyDims)?;
    if dims.contains(&0) {
        return Err(LatticeError::ZeroDim);
    }
    let y = young_lattice(max_rank);
    let mut g = scale(&y, first)?;
    for &d in rest {
        g = product(&g, &scale(&y, d)?);
    }
    Ok(g)
}

/// `Y^r` truncated at `max_rank`.
pub fn young_power(r: usize, max_rank: usize) -> GradedGraph {
    wreath_graph(&vec![1; r.max(1)], max_rank).expect("unit dimensions")
}

/// Number of standard Young tableaux of shape `shape`, counted as upward
/// paths to `shape` in Young's lattice.
pub fn syt_count(shape: &Partition) -> BigUint {
    young_lattice(shape.size())
        .path_count(&shape.to_string())
        .expect("every partition is a vertex of Young's lattice")
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Multinomial coefficient of the component sizes times the product of the
/// standard tableau counts of the components.
pub fn wreath_dim(shape: &PartitionTuple) -> BigUint {
    let multinomial = shape
        .components()
        .iter()
        .fold(factorial(shape.total_size()), |acc, p| acc / factorial(p.size()));
    shape
        .components()
        .iter()
        .fold(multinomial, |acc, p| acc * syt_count(p))
}
