//! Towers of finite groups `{e} = G_0 < G_1 < ...`, their Bratteli
//! diagrams, and the relation `Res Ind - Ind Res = rI`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{graphs_isomorphic, GradedGraph, GraphError};
use crate::group::catalog::{by_name, catalog_order_2r2, fingerprint, Fingerprint};
use crate::group::field::{dixon_prime, is_prime};
use crate::group::{
    character_table_mod, restriction_matrix, subgroups_of_order, CharacterTable, Embedding, FiniteGroup,
    GroupError, Subgroup, WreathCoordinates, MAX_TABLE_ORDER,
};
use crate::lattice::{wreath_graph, young_power, LatticeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TowerError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("a tower needs at least one level")]
    Empty,
    #[error("level 0 must be trivial, found order {0}")]
    NontrivialBase(usize),
    #[error("{levels} levels need {expected} embeddings, found {found}")]
    EmbeddingCount { levels: usize, expected: usize, found: usize },
    #[error("embedding {0} does not connect levels {0} and {next}", next = .0 + 1)]
    EmbeddingMismatch(usize),
    #[error("the base group must have its identity at index 0")]
    BaseIdentity,
    #[error("tower JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone)]
pub struct Tower {
    levels: Vec<Arc<FiniteGroup>>,
    embeddings: Vec<Embedding>,
}

impl Tower {
    pub fn new(levels: Vec<Arc<FiniteGroup>>, embeddings: Vec<Embedding>) -> Result<Self, TowerError> {
        let base = levels.first().ok_or(TowerError::Empty)?;
        if base.order() != 1 {
            return Err(TowerError::NontrivialBase(base.order()));
        }
        if embeddings.len() + 1 != levels.len() {
            return Err(TowerError::EmbeddingCount {
                levels: levels.len(),
                expected: levels.len() - 1,
                found: embeddings.len(),
            });
        }
        for (i, e) in embeddings.iter().enumerate() {
            if **e.source() != *levels[i] || **e.target() != *levels[i + 1] {
                return Err(TowerError::EmbeddingMismatch(i));
            }
        }
        Ok(Tower { levels, embeddings })
    }

    /// Validates every map as an injective homomorphism.
    pub fn from_maps(levels: Vec<FiniteGroup>, maps: Vec<Vec<usize>>) -> Result<Self, TowerError> {
        let levels: Vec<Arc<FiniteGroup>> = levels.into_iter().map(Arc::new).collect();
        if maps.len() + 1 != levels.len() {
            return Err(TowerError::EmbeddingCount {
                levels: levels.len(),
                expected: levels.len().saturating_sub(1),
                found: maps.len(),
            });
        }
        let embeddings = maps
            .into_iter()
            .enumerate()
            .map(|(i, map)| Embedding::new(levels[i].clone(), levels[i + 1].clone(), map))
            .collect::<Result<_, _>>()?;
        Tower::new(levels, embeddings)
    }

    /// `A wr S_0 < A wr S_1 < ... < A wr S_max_level`.
    pub fn wreath(a: &FiniteGroup, max_level: usize) -> Result<Self, TowerError> {
        if a.identity() != 0 {
            return Err(TowerError::BaseIdentity);
        }
        let levels: Vec<FiniteGroup> = (0..=max_level).map(|n| FiniteGroup::wreath_symmetric(a, n)).collect();
        let maps = (0..max_level)
            .map(|n| WreathCoordinates::new(a.order(), n).standard_embedding())
            .collect();
        Tower::from_maps(levels, maps)
    }

    /// `S_0 < S_1 < ... < S_max_level`.
    pub fn symmetric(max_level: usize) -> Result<Self, TowerError> {
        Tower::wreath(&FiniteGroup::trivial(), max_level)
    }

    pub fn levels(&self) -> &[Arc<FiniteGroup>] {
        &self.levels
    }

    pub fn level(&self, i: usize) -> &FiniteGroup {
        &self.levels[i]
    }

    pub fn embeddings(&self) -> &[Embedding] {
        &self.embeddings
    }

    /// Index of the top level.
    pub fn height(&self) -> usize {
        self.levels.len() - 1
    }

    /// Character tables of every level over one shared prime, and the
    /// restriction matrices between consecutive levels.
    pub fn branching(&self) -> Result<Branching, TowerError> {
        for g in &self.levels {
            if g.order() > MAX_TABLE_ORDER {
                return Err(GroupError::TooLarge {
                    order: g.order(),
                    bound: MAX_TABLE_ORDER,
                }
                .into());
            }
        }
        let top = &self.levels[self.height()];
        // exponents of the lower levels divide the top exponent
        let exponent = top.exponent() as u64;
        let mut p = dixon_prime(exponent, top.order() as u64);
        let mut attempts = 0;
        let tables = loop {
            let tables: Result<Vec<CharacterTable>, GroupError> =
                self.levels.iter().map(|g| character_table_mod(g, p)).collect();
            match tables {
                Err(GroupError::SplitFailure(_)) if attempts < 8 => {
                    attempts += 1;
                    p += exponent;
                    while !is_prime(p) {
                        p += exponent;
                    }
                }
                other => break other?,
            }
        };
        let restrictions = self
            .embeddings
            .iter()
            .enumerate()
            .map(|(i, e)| restriction_matrix(e, &tables[i + 1], &tables[i]))
            .collect::<Result<_, _>>()?;
        Ok(Branching { tables, restrictions })
    }
}

#[derive(Debug, Clone)]
pub struct Branching {
    pub tables: Vec<CharacterTable>,
    /// `restrictions[i][psi][chi]`: multiplicity of `psi in Irr(G_i)` in the
    /// restriction of `chi in Irr(G_{i+1})`.
    pub restrictions: Vec<Vec<Vec<u64>>>,
}

impl Branching {
    /// Rank-`n` vertices are labelled `n:k`, `k` the canonical index in
    /// `Irr(G_n)`.
    pub fn bratteli(&self) -> Result<GradedGraph, GraphError> {
        let vertices: Vec<(String, usize)> = self
            .tables
            .iter()
            .enumerate()
            .flat_map(|(n, t)| (0..t.len()).map(move |k| (format!("{n}:{k}"), n)))
            .collect();
        let mut edges = Vec::new();
        for (i, r) in self.restrictions.iter().enumerate() {
            for (psi, row) in r.iter().enumerate() {
                for (chi, &m) in row.iter().enumerate() {
                    if m > 0 {
                        edges.push((format!("{i}:{psi}"), format!("{}:{chi}", i + 1), m));
                    }
                }
            }
        }
        GradedGraph::build(&vertices, &edges)
    }

    /// `Res Ind - Ind Res` on `Irr(G_level)`, for `level < height`.
    pub fn commutator(&self, level: usize) -> Vec<Vec<i64>> {
        let k = self.tables[level].len();
        let up = &self.restrictions[level];
        let mut out = vec![vec![0i64; k]; k];
        for (a, row) in out.iter_mut().enumerate() {
            for (b, entry) in row.iter_mut().enumerate() {
                let res_ind: u64 = up[a].iter().zip(&up[b]).map(|(x, y)| x * y).sum();
                let ind_res: u64 = if level == 0 {
                    0
                } else {
                    let down = &self.restrictions[level - 1];
                    down.iter().map(|r| r[a] * r[b]).sum()
                };
                *entry = res_ind as i64 - ind_res as i64;
            }
        }
        out
    }
}

pub fn build_bratteli(t: &Tower) -> Result<GradedGraph, TowerError> {
    Ok(t.branching()?.bratteli()?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutatorViolation {
    pub chi: usize,
    pub psi: usize,
    pub value: i64,
    pub expected: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum LevelVerdict {
    Holds { level: usize },
    Fails { level: usize, violations: Vec<CommutatorViolation> },
    NotCheckable { level: usize },
}

impl LevelVerdict {
    pub fn level(&self) -> usize {
        match self {
            LevelVerdict::Holds { level }
            | LevelVerdict::Fails { level, .. }
            | LevelVerdict::NotCheckable { level } => *level,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderCheck {
    pub level: usize,
    pub order: usize,
    /// `r^n n!`, as a decimal string.
    pub expected: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionCheck {
    pub level: usize,
    /// Whether every degree at this level equals its path count `e`.
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerReport {
    pub r: u64,
    pub orders: Vec<usize>,
    pub levels: Vec<LevelVerdict>,
    pub order_checks: Vec<OrderCheck>,
    pub dimension_checks: Vec<DimensionCheck>,
}

impl TowerReport {
    pub fn commutator_holds(&self) -> bool {
        !self.levels.iter().any(|v| matches!(v, LevelVerdict::Fails { .. }))
    }

    pub fn orders_hold(&self) -> bool {
        self.order_checks.iter().all(|c| c.holds)
    }

    pub fn passes(&self) -> bool {
        self.commutator_holds() && self.orders_hold()
    }
}

impl fmt::Display for TowerReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "r = {}", self.r)?;
        writeln!(f, "{:>5}  {:>6}  {:>12}  {:<17}  {:<8}  e = dim", "level", "order", "r^n n!", "Res Ind - Ind Res", "order")?;
        for (i, v) in self.levels.iter().enumerate() {
            let commutator = match v {
                LevelVerdict::Holds { .. } => "= rI".to_string(),
                LevelVerdict::Fails { violations, .. } => format!("FAILS ({})", violations.len()),
                LevelVerdict::NotCheckable { .. } => "not checkable".to_string(),
            };
            let oc = &self.order_checks[i];
            let dims = self.dimension_checks.get(i).map_or("-", |d| if d.holds { "yes" } else { "no" });
            writeln!(
                f,
                "{:>5}  {:>6}  {:>12}  {:<17}  {:<8}  {}",
                i,
                oc.order,
                oc.expected,
                commutator,
                if oc.holds { "ok" } else { "FAILS" },
                dims
            )?;
        }
        for v in &self.levels {
            if let LevelVerdict::Fails { level, violations } = v {
                for x in violations {
                    writeln!(
                        f,
                        "level {level}: entry ({}, {}) is {}, expected {}",
                        x.chi, x.psi, x.value, x.expected
                    )?;
                }
            }
        }
        write!(f, "verdict: {}", if self.passes() { "PASS" } else { "FAIL" })
    }
}

fn power_factorial(r: u64, n: usize) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for k in 1..=n {
        acc *= r;
        acc *= k;
    }
    acc
}

/// Checks the commutator relation on every level below the top, the order
/// condition `|G_n| = r^n n!` on every level, and `e = dim` on the Bratteli
/// diagram.
pub fn check_dual_tower(t: &Tower, r: u64) -> Result<TowerReport, TowerError> {
    let branching = t.branching()?;
    Ok(report_from(t, &branching, r)?)
}

fn report_from(t: &Tower, branching: &Branching, r: u64) -> Result<TowerReport, GraphError> {
    let height = t.height();
    let levels = (0..=height)
        .map(|level| {
            if level == height {
                return LevelVerdict::NotCheckable { level };
            }
            let m = branching.commutator(level);
            let violations: Vec<CommutatorViolation> = m
                .iter()
                .enumerate()
                .flat_map(|(chi, row)| {
                    row.iter().enumerate().filter_map(move |(psi, &value)| {
                        let expected = if chi == psi { r as i64 } else { 0 };
                        (value != expected).then_some(CommutatorViolation { chi, psi, value, expected })
                    })
                })
                .collect();
            if violations.is_empty() {
                LevelVerdict::Holds { level }
            } else {
                LevelVerdict::Fails { level, violations }
            }
        })
        .collect();
    let orders: Vec<usize> = t.levels.iter().map(|g| g.order()).collect();
    let order_checks = orders
        .iter()
        .enumerate()
        .map(|(level, &order)| {
            let expected = power_factorial(r, level);
            OrderCheck {
                level,
                order,
                holds: expected == BigUint::from(order),
                expected: expected.to_string(),
            }
        })
        .collect();
    let graph = branching.bratteli()?;
    let e = graph.path_counts();
    let dimension_checks = (0..=height)
        .map(|level| DimensionCheck {
            level,
            holds: graph
                .rank(level)
                .iter()
                .enumerate()
                .all(|(k, &v)| e[v] == BigUint::from(branching.tables[level].degree(k))),
        })
        .collect();
    Ok(TowerReport {
        r,
        orders,
        levels,
        order_checks,
        dimension_checks,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Rank2Candidate {
    pub group: String,
    pub subgroup: Vec<usize>,
    pub report: TowerReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct Survivor {
    pub group: String,
    pub fingerprint: Fingerprint,
    /// Conjugacy classes of order-`r` subgroups giving a passing tower.
    pub subgroup_classes: usize,
    /// Whether the Bratteli diagram is isomorphic to `(Y^r)_[0,2]`.
    pub matches_young_power: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub r: usize,
    pub candidates: Vec<Rank2Candidate>,
    pub survivors: Vec<Survivor>,
}

type SubgroupOf = (Arc<FiniteGroup>, Vec<usize>);

/// Every tower `{e} < C_r < G` with `G` of order `2r^2`, one per conjugacy
/// class of cyclic order-`r` subgroups, in catalog order.
fn rank2_towers(r: usize) -> Result<Vec<SubgroupOf>, TowerError> {
    let mut out = Vec::new();
    for g in catalog_order_2r2(r)? {
        let g = Arc::new(g);
        for s in subgroups_of_order(&g, r)? {
            let cyclic = s.elements().iter().any(|&x| g.element_order(x) == r);
            if cyclic {
                out.push((g.clone(), s.elements().to_vec()));
            }
        }
    }
    Ok(out)
}

fn evaluate(r: usize, g: &Arc<FiniteGroup>, elements: &[usize]) -> Result<(Rank2Candidate, GradedGraph), TowerError> {
    let sub = Subgroup::new(g, elements)?;
    let inclusion = sub.inclusion(g.clone());
    let bottom = Embedding::from_trivial(inclusion.source().clone());
    let tower = Tower::new(
        vec![bottom.source().clone(), inclusion.source().clone(), g.clone()],
        vec![bottom, inclusion],
    )?;
    let branching = tower.branching()?;
    let report = report_from(&tower, &branching, r as u64)?;
    Ok((
        Rank2Candidate {
            group: g.display_name(),
            subgroup: elements.to_vec(),
            report,
        },
        branching.bratteli()?,
    ))
}

/// Runs every rank-2 candidate for `r` and collects the passing groups.
/// With `threads > 1` candidates are evaluated concurrently; the output does
/// not depend on the schedule.
pub fn classify_rank2(r: usize, threads: usize) -> Result<Classification, TowerError> {
    let towers = rank2_towers(r)?;
    let results: Vec<Result<(Rank2Candidate, GradedGraph), TowerError>> = if threads > 1 {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| TowerError::Group(GroupError::InvalidParameter(e.to_string())))?;
        pool.install(|| towers.par_iter().map(|(g, s)| evaluate(r, g, s)).collect())
    } else {
        towers.iter().map(|(g, s)| evaluate(r, g, s)).collect()
    };
    let target = young_power(r, 2);
    let mut candidates = Vec::new();
    let mut survivors: Vec<Survivor> = Vec::new();
    for (result, (g, _)) in results.into_iter().zip(&towers) {
        let (candidate, graph) = result?;
        if candidate.report.passes() {
            let print = fingerprint(g)?;
            let matches = graphs_isomorphic(&graph, &target).is_some();
            match survivors.iter_mut().find(|s| s.fingerprint == print) {
                Some(s) => {
                    s.subgroup_classes += 1;
                    s.matches_young_power &= matches;
                }
                None => survivors.push(Survivor {
                    group: g.display_name(),
                    fingerprint: print,
                    subgroup_classes: 1,
                    matches_young_power: matches,
                }),
            }
        }
        candidates.push(candidate);
    }
    Ok(Classification {
        r,
        candidates,
        survivors,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct WreathReport {
    pub base: String,
    pub degrees: Vec<u64>,
    pub max_level: usize,
    pub duality: TowerReport,
    /// Whether the Bratteli diagram is isomorphic to the product of scaled
    /// Young lattices over the degrees of the base group.
    pub matches_wreath_graph: bool,
}

impl WreathReport {
    pub fn passes(&self) -> bool {
        self.duality.passes() && self.matches_wreath_graph
    }
}

/// Builds `H wr S_n` for `n <= max_level` and checks it with `r = |H|`.
pub fn verify_wreath_tower(h: &FiniteGroup, max_level: usize) -> Result<WreathReport, TowerError> {
    let top = (1..=max_level).try_fold(1usize, |acc, n| acc.checked_mul(h.order())?.checked_mul(n));
    match top {
        Some(order) if order <= MAX_TABLE_ORDER => {}
        order => {
            return Err(GroupError::TooLarge {
                order: order.unwrap_or(usize::MAX),
                bound: MAX_TABLE_ORDER,
            }
            .into())
        }
    }
    let tower = Tower::wreath(h, max_level)?;
    let branching = tower.branching()?;
    let duality = report_from(&tower, &branching, h.order() as u64)?;
    let degrees = branching.tables[1].degrees().to_vec();
    let graph = branching.bratteli()?;
    let matches_wreath_graph = if max_level == 0 {
        graph.vertex_count() == 1
    } else {
        graphs_isomorphic(&graph, &wreath_graph(&degrees, max_level)?).is_some()
    };
    Ok(WreathReport {
        base: h.display_name(),
        degrees: if max_level == 0 { Vec::new() } else { degrees },
        max_level,
        duality,
        matches_wreath_graph,
    })
}

/// A group in tower JSON: a catalog name or an inline group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Name(String),
    Cayley { cayley: Vec<Vec<usize>> },
    Permutations { permutations: Vec<Vec<usize>> },
}

impl GroupRef {
    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupRef::Name(n) if n == "e" || n == "1" => Ok(FiniteGroup::trivial()),
            GroupRef::Name(n) => by_name(n),
            GroupRef::Cayley { cayley } => FiniteGroup::from_cayley(cayley),
            GroupRef::Permutations { permutations } => FiniteGroup::from_permutations(permutations),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerSpec {
    pub levels: Vec<GroupRef>,
    pub embeddings: Vec<Vec<usize>>,
}

impl TowerSpec {
    pub fn from_json(text: &str) -> Result<Self, TowerError> {
        serde_json::from_str(text).map_err(|e| TowerError::Json(e.to_string()))
    }

    pub fn build(&self) -> Result<Tower, TowerError> {
        let levels = self.levels.iter().map(GroupRef::build).collect::<Result<_, _>>()?;
        Tower::from_maps(levels, self.embeddings.clone())
    }
}
