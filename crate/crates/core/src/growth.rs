//! Robinson–Schensted by row insertion and by growth diagrams, and its
//! colored version: a bijection between `r`-colored permutations of `n` and
//! pairs of saturated chains in `Y^r` with a common top.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::lattice::{Partition, PartitionTuple};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrowthError {
    #[error("not a permutation of 1..n: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error("colors must lie in 0..{r}, got {color}")]
    ColorOutOfRange { color: usize, r: usize },
    #[error("{0} colors for a permutation of length {1}")]
    ColorCount(usize, usize),
    #[error("r must be positive")]
    ZeroColors,
    #[error("paths have lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("paths end at different shapes")]
    EndpointMismatch,
    #[error("step {step} of a path is not a cover in Y^{r}")]
    NotACover { step: usize, r: usize },
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self, GrowthError> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(GrowthError::NotAPermutation(word));
            }
            seen[v] = true;
        }
        Ok(Permutation(word))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut word: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation(word.clone()));
            // next permutation
            let Some(i) = (1..n).rev().find(|&i| word[i - 1] < word[i]) else {
                return out;
            };
            let j = (i..n).rev().find(|&j| word[j] > word[i - 1]).expect("pivot");
            word.swap(i - 1, j);
            word[i..].reverse();
        }
    }
}

impl FromStr for Permutation {
    type Err = GrowthError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let word = s
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<usize>, _>>()
            .map_err(|_| GrowthError::Parse(s.to_string()))?;
        Permutation::new(word)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&words.join(" "))
    }
}

/// An element of `(Z/rZ) wr S_n`: position `i` carries value `sigma(i)` and color `colors[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredPermutation {
    sigma: Permutation,
    colors: Vec<usize>,
    r: usize,
}

impl ColoredPermutation {
    pub fn new(sigma: Permutation, colors: Vec<usize>, r: usize) -> Result<Self, GrowthError> {
        if r == 0 {
            return Err(GrowthError::ZeroColors);
        }
        if colors.len() != sigma.len() {
            return Err(GrowthError::ColorCount(colors.len(), sigma.len()));
        }
        if let Some(&color) = colors.iter().find(|&&c| c >= r) {
            return Err(GrowthError::ColorOutOfRange { color, r });
        }
        Ok(ColoredPermutation { sigma, colors, r })
    }

    /// Parses `"3^0 1^1 2^0"`; a bare value has color 0.
    pub fn parse(s: &str, r: usize) -> Result<Self, GrowthError> {
        let mut word = Vec::new();
        let mut colors = Vec::new();
        for token in s.split_whitespace() {
            let (v, c) = token.split_once('^').unwrap_or((token, "0"));
            let parse = |x: &str| x.parse::<usize>().map_err(|_| GrowthError::Parse(token.to_string()));
            word.push(parse(v)?);
            colors.push(parse(c)?);
        }
        ColoredPermutation::new(Permutation::new(word)?, colors, r)
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    /// All `r^n n!` colored permutations, permutation-major.
    pub fn all(n: usize, r: usize) -> Vec<ColoredPermutation> {
        let mut out = Vec::new();
        for sigma in Permutation::all(n) {
            let total = r.pow(n as u32);
            for code in 0..total {
                let colors: Vec<usize> = (0..n).map(|i| code / r.pow(i as u32) % r).collect();
                out.push(ColoredPermutation {
                    sigma: sigma.clone(),
                    colors,
                    r,
                });
            }
        }
        out
    }
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self
            .sigma
            .word()
            .iter()
            .zip(&self.colors)
            .map(|(v, c)| format!("{v}^{c}"))
            .collect();
        f.write_str(&words.join(" "))
    }
}

/// A tableau stored as increasing rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("tableau rows shrink")
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Self {
        Tableau { rows }
    }

    /// Cell `(row, column)` holding `entry`.
    pub fn find(&self, entry: usize) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(i, row)| row.iter().position(|&e| e == entry).map(|j| (i, j)))
    }

    /// Row-inserts `value` and returns the row where the new box appeared.
    fn insert(&mut self, mut value: usize) -> usize {
        for (i, row) in self.rows.iter_mut().enumerate() {
            match row.iter().position(|&e| e > value) {
                Some(j) => value = std::mem::replace(&mut row[j], value),
                None => {
                    row.push(value);
                    return i;
                }
            }
        }
        self.rows.push(vec![value]);
        self.rows.len() - 1
    }

    fn place(&mut self, row: usize, value: usize) {
        if row == self.rows.len() {
            self.rows.push(Vec::new());
        }
        self.rows[row].push(value);
    }

    /// Removes the box at the end of `row` and reverse-bumps up to the first
    /// row, returning the value ejected from it.
    fn uninsert(&mut self, row: usize) -> usize {
        let mut value = self.rows[row].pop().expect("corner box");
        if self.rows[row].is_empty() {
            self.rows.pop();
        }
        for i in (0..row).rev() {
            let r = &mut self.rows[i];
            let j = r.iter().rposition(|&e| e < value).expect("reverse bump");
            value = std::mem::replace(&mut r[j], value);
        }
        value
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(usize::to_string).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// RSK on a two-line array: values are row-inserted in order, keys recorded.
fn insert_pairs(pairs: &[(usize, usize)]) -> (Tableau, Tableau) {
    let mut p = Tableau::default();
    let mut q = Tableau::default();
    for &(key, value) in pairs {
        let row = p.insert(value);
        q.place(row, key);
    }
    (p, q)
}

/// Inverse of [`insert_pairs`] for tableaux of equal shape.
fn uninsert_pairs(mut p: Tableau, mut q: Tableau) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    while let Some(key) = q.rows.iter().flatten().copied().max() {
        let (row, _) = q.find(key).expect("max entry present");
        q.rows[row].pop();
        if q.rows[row].is_empty() {
            q.rows.pop();
        }
        pairs.push((key, p.uninsert(row)));
    }
    pairs.reverse();
    pairs
}

/// Classical Schensted row insertion: `(P, Q)` of equal shape.
pub fn rsk_insert(sigma: &Permutation) -> (Tableau, Tableau) {
    let pairs: Vec<(usize, usize)> = sigma.word().iter().enumerate().map(|(i, &v)| (i + 1, v)).collect();
    insert_pairs(&pairs)
}

/// Inverse of [`rsk_insert`].
pub fn rsk_inverse(p: &Tableau, q: &Tableau) -> Result<Permutation, GrowthError> {
    let word = uninsert_pairs(p.clone(), q.clone()).into_iter().map(|(_, v)| v).collect();
    Permutation::new(word)
}

/// Pair of saturated chains from the bottom of `Y^r` to a common shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathPair {
    pub p_path: Vec<PartitionTuple>,
    pub q_path: Vec<PartitionTuple>,
}

impl PathPair {
    pub fn shape(&self) -> Option<&PartitionTuple> {
        self.p_path.last()
    }
}

impl fmt::Display for PathPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "P path:")?;
        for s in &self.p_path {
            writeln!(f, "{s}")?;
        }
        writeln!(f, "Q path:")?;
        for s in &self.q_path {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Shape chain of a tableau: the shapes of its restrictions to the `k`
/// smallest entries, for each `k`.
pub fn shape_chain(t: &Tableau) -> Vec<Partition> {
    let mut entries: Vec<usize> = t.rows.iter().flatten().copied().collect();
    entries.sort_unstable();
    let mut chain = vec![Partition::empty()];
    for k in 1..=entries.len() {
        let bound = entries[k - 1];
        let rows: Vec<usize> = t
            .rows
            .iter()
            .map(|r| r.iter().filter(|&&e| e <= bound).count())
            .filter(|&c| c > 0)
            .collect();
        chain.push(Partition::new(rows).expect("restriction of a tableau"));
    }
    chain
}

fn single(p: Partition) -> PartitionTuple {
    PartitionTuple::new(vec![p])
}

/// Local growth rule at one cell of the diagram.
///
/// `below` is the shape at the lower-left corner, `left` and `right` the two
/// shapes adjacent to it, `marked` whether the cell holds a point of the
/// permutation.
fn grow(below: &Partition, left: &Partition, right: &Partition, marked: bool) -> Partition {
    if left != right {
        // union of the two diagrams
        let len = left.len().max(right.len());
        let parts = (0..len).map(|i| left.row(i).max(right.row(i))).collect();
        return Partition::new(parts).expect("union of partitions");
    }
    if left == below {
        return if marked {
            below.add_box(0).expect("first row is addable")
        } else {
            below.clone()
        };
    }
    let row = (0..left.len())
        .find(|&i| left.row(i) != below.row(i))
        .expect("left covers below");
    left.add_box(row + 1).expect("box in next row")
}

/// Fomin's growth diagram of the permutation matrix. The shapes along the
/// last column give the recording chain, those along the last row the
/// insertion chain.
pub fn rsk_growth(sigma: &Permutation) -> PathPair {
    let n = sigma.len();
    // grid[i][j]: positions <= i, values <= j
    let mut grid = vec![vec![Partition::empty(); n + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=n {
            let marked = sigma.word()[i - 1] == j;
            grid[i][j] = grow(&grid[i - 1][j - 1], &grid[i - 1][j], &grid[i][j - 1], marked);
        }
    }
    PathPair {
        q_path: (0..=n).map(|i| single(grid[i][n].clone())).collect(),
        p_path: (0..=n).map(|j| single(grid[n][j].clone())).collect(),
    }
}

/// Colored RSK: each color class of positions is inserted separately, and the
/// chains interleave the boxes of the per-color tableaux by position (for
/// `Q`) and by value (for `P`).
pub fn colored_rsk(w: &ColoredPermutation) -> PathPair {
    let n = w.len();
    let r = w.r();
    let tableaux: Vec<(Tableau, Tableau)> = (0..r)
        .map(|k| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .filter(|&i| w.colors()[i] == k)
                .map(|i| (i + 1, w.sigma().word()[i]))
                .collect();
            insert_pairs(&pairs)
        })
        .collect();

    let mut color_of_value = vec![0; n + 1];
    for i in 0..n {
        color_of_value[w.sigma().word()[i]] = w.colors()[i];
    }

    let walk = |step_color: &dyn Fn(usize) -> usize, pick: &dyn Fn(&(Tableau, Tableau)) -> &Tableau| {
        let mut path = vec![PartitionTuple::empty(r)];
        for step in 1..=n {
            let k = step_color(step);
            let (row, _) = pick(&tableaux[k]).find(step).expect("entry present");
            let next = path[step - 1].add_box(k, row).expect("tableau growth");
            path.push(next);
        }
        path
    };
    let q_path = walk(&|i| w.colors()[i - 1], &|t| &t.1);
    let p_path = walk(&|j| color_of_value[j], &|t| &t.0);
    PathPair { p_path, q_path }
}

fn steps(path: &[PartitionTuple], r: usize) -> Result<Vec<(usize, usize)>, GrowthError> {
    if path.first() != Some(&PartitionTuple::empty(r)) {
        return Err(GrowthError::NotACover { step: 0, r });
    }
    path.windows(2)
        .enumerate()
        .map(|(i, w)| w[0].covered_step(&w[1]).ok_or(GrowthError::NotACover { step: i + 1, r }))
        .collect()
}

/// Recovers the colored permutation whose image under [`colored_rsk`] is `pp`.
pub fn colored_rsk_inverse(pp: &PathPair, r: usize) -> Result<ColoredPermutation, GrowthError> {
    if r == 0 {
        return Err(GrowthError::ZeroColors);
    }
    if pp.p_path.len() != pp.q_path.len() {
        return Err(GrowthError::LengthMismatch(pp.p_path.len(), pp.q_path.len()));
    }
    let p_steps = steps(&pp.p_path, r)?;
    let q_steps = steps(&pp.q_path, r)?;
    if pp.p_path.last() != pp.q_path.last() {
        return Err(GrowthError::EndpointMismatch);
    }
    let n = p_steps.len();

    let mut ps = vec![Tableau::default(); r];
    let mut qs = vec![Tableau::default(); r];
    for (j, &(k, row)) in p_steps.iter().enumerate() {
        ps[k].place(row, j + 1);
    }
    for (i, &(k, row)) in q_steps.iter().enumerate() {
        qs[k].place(row, i + 1);
    }

    let mut word = vec![0; n];
    let mut colors = vec![0; n];
    for (k, (p, q)) in ps.into_iter().zip(qs).enumerate() {
        for (position, value) in uninsert_pairs(p, q) {
            word[position - 1] = value;
            colors[position - 1] = k;
        }
    }
    ColoredPermutation::new(Permutation::new(word)?, colors, r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn tuple(s: &str) -> PartitionTuple {
        s.parse().unwrap()
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
        assert!("1 x".parse::<Permutation>().is_err());
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::all(0).len(), 1);
    }

    #[test]
    fn rsk_examples() {
        let (p, q) = rsk_insert(&Permutation::identity(4));
        assert_eq!(p.rows(), &[vec![1, 2, 3, 4]]);
        assert_eq!(p, q);

        let (p, q) = rsk_insert(&perm("2 1"));
        assert_eq!(p.rows(), &[vec![1], vec![2]]);
        assert_eq!(q.rows(), &[vec![1], vec![2]]);

        let (p, q) = rsk_insert(&perm("3 1 2"));
        assert_eq!(p.to_string(), "[[1,2],[3]]");
        assert_eq!(q.to_string(), "[[1,3],[2]]");
    }

    #[test]
    fn rsk_inverse_round_trip() {
        for sigma in Permutation::all(5) {
            let (p, q) = rsk_insert(&sigma);
            assert_eq!(rsk_inverse(&p, &q).unwrap(), sigma);
        }
    }

    #[test]
    fn growth_examples() {
        let pp = rsk_growth(&Permutation::identity(3));
        let expected: Vec<PartitionTuple> = ["-", "1", "2", "3"].iter().map(|s| tuple(s)).collect();
        assert_eq!(pp.p_path, expected);
        assert_eq!(pp.q_path, expected);

        let pp = rsk_growth(&perm("2 1"));
        let expected: Vec<PartitionTuple> = ["-", "1", "1,1"].iter().map(|s| tuple(s)).collect();
        assert_eq!(pp.p_path, expected);
        assert_eq!(pp.q_path, expected);
    }

    #[test]
    fn growth_agrees_with_insertion_on_s4() {
        for sigma in Permutation::all(4) {
            let (p, q) = rsk_insert(&sigma);
            let pp = rsk_growth(&sigma);
            let wrap = |c: Vec<Partition>| c.into_iter().map(single).collect::<Vec<_>>();
            assert_eq!(pp.p_path, wrap(shape_chain(&p)), "{sigma}");
            assert_eq!(pp.q_path, wrap(shape_chain(&q)), "{sigma}");
        }
    }

    #[test]
    fn colored_single_box() {
        let w = ColoredPermutation::parse("1^1", 2).unwrap();
        let pp = colored_rsk(&w);
        assert_eq!(pp.p_path, vec![tuple("-;-"), tuple("-;1")]);
        assert_eq!(pp.q_path, pp.p_path);
    }

    #[test]
    fn one_color_matches_growth() {
        for sigma in Permutation::all(4) {
            let w = ColoredPermutation::new(sigma.clone(), vec![0; 4], 1).unwrap();
            assert_eq!(colored_rsk(&w), rsk_growth(&sigma));
        }
    }

    #[test]
    fn colored_parse_and_display() {
        let w = ColoredPermutation::parse("3^0 1^1 2^0", 2).unwrap();
        assert_eq!(w.to_string(), "3^0 1^1 2^0");
        assert_eq!(w.colors(), &[0, 1, 0]);
        assert!(ColoredPermutation::parse("1^2", 2).is_err());
        assert!(ColoredPermutation::parse("1^a", 2).is_err());
        assert_eq!(ColoredPermutation::all(2, 2).len(), 8);
    }

    #[test]
    fn inverse_errors() {
        let good = colored_rsk(&ColoredPermutation::parse("2^0 1^1", 2).unwrap());
        let mut short = good.clone();
        short.q_path.pop();
        assert!(matches!(colored_rsk_inverse(&short, 2), Err(GrowthError::LengthMismatch(3, 2))));

        let mut jump = good.clone();
        jump.p_path[1] = tuple("2;-");
        assert!(matches!(colored_rsk_inverse(&jump, 2), Err(GrowthError::NotACover { .. })));

        let other = colored_rsk(&ColoredPermutation::parse("1^0 2^0", 2).unwrap());
        let mixed = PathPair {
            p_path: good.p_path.clone(),
            q_path: other.q_path,
        };
        assert!(matches!(colored_rsk_inverse(&mixed, 2), Err(GrowthError::EndpointMismatch)));
    }

    #[test]
    fn empty_permutation() {
        let pp = PathPair {
            p_path: vec![tuple("-;-")],
            q_path: vec![tuple("-;-")],
        };
        let w = colored_rsk_inverse(&pp, 2).unwrap();
        assert!(w.is_empty());
        assert_eq!(colored_rsk(&w), pp);
    }

    #[test]
    fn round_trip_n3_r2() {
        for w in ColoredPermutation::all(3, 2) {
            assert_eq!(colored_rsk_inverse(&colored_rsk(&w), 2).unwrap(), w);
        }
    }
}
