use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use super::{Embedding, FiniteGroup, GroupError};

/// Largest order `subgroups_of_order` will search for.
pub const MAX_SUBGROUP_SEARCH_ORDER: usize = 16;

/// A subgroup, as the sorted list of its element indices in the ambient group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    pub(crate) fn from_sorted(elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup { elements }
    }

    /// Validates that `elements` is closed under the group law.
    pub fn new(g: &FiniteGroup, elements: &[usize]) -> Result<Self, GroupError> {
        let mut sorted = elements.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.iter().any(|&x| x >= g.order()) || sorted.binary_search(&g.identity()).is_err() {
            return Err(GroupError::NotSubgroup);
        }
        let sub = Subgroup { elements: sorted };
        let closed = sub
            .elements
            .iter()
            .all(|&a| sub.elements.iter().all(|&b| sub.contains(g.mul(a, g.inv(b)))));
        if closed {
            Ok(sub)
        } else {
            Err(GroupError::NotSubgroup)
        }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Subgroup::from_sorted((0..g.order()).collect())
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Subgroup::from_sorted(vec![g.identity()])
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// `x S x^-1`
    pub fn conjugate(&self, g: &FiniteGroup, x: usize) -> Subgroup {
        let mut elements: Vec<usize> = self.elements.iter().map(|&s| g.conjugate(x, s)).collect();
        elements.sort_unstable();
        Subgroup { elements }
    }

    pub fn is_normal(&self, g: &FiniteGroup) -> bool {
        (0..g.order()).all(|x| self.elements.iter().all(|&s| self.contains(g.conjugate(x, s))))
    }

    pub fn normalizer(&self, g: &FiniteGroup) -> Subgroup {
        let elements = (0..g.order())
            .filter(|&x| self.elements.iter().all(|&s| self.contains(g.conjugate(x, s))))
            .collect();
        Subgroup { elements }
    }

    /// Lexicographically least conjugate; equal for conjugate subgroups.
    pub fn canonical_conjugate(&self, g: &FiniteGroup) -> Subgroup {
        (0..g.order())
            .map(|x| self.conjugate(g, x))
            .min()
            .expect("groups are non-empty")
    }

    /// The subgroup as a group in its own right: element `i` is the `i`-th
    /// smallest ambient index.
    pub fn to_group(&self, g: &FiniteGroup) -> FiniteGroup {
        let table: Vec<Vec<usize>> = self
            .elements
            .iter()
            .map(|&a| {
                self.elements
                    .iter()
                    .map(|&b| self.elements.binary_search(&g.mul(a, b)).expect("closed"))
                    .collect()
            })
            .collect();
        FiniteGroup::from_cayley(&table).expect("subgroup table")
    }

    /// The subgroup together with its inclusion into `g`.
    pub fn inclusion(&self, g: Arc<FiniteGroup>) -> Embedding {
        let sub = Arc::new(self.to_group(&g));
        Embedding::new(sub, g, self.elements.clone()).expect("inclusion is an embedding")
    }
}

/// Every subgroup of order `k`, one representative per conjugacy class (the
/// lexicographically least one), sorted.
pub fn subgroups_of_order(g: &FiniteGroup, k: usize) -> Result<Vec<Subgroup>, GroupError> {
    if k > MAX_SUBGROUP_SEARCH_ORDER {
        return Err(GroupError::SubgroupOrderTooLarge {
            order: k,
            bound: MAX_SUBGROUP_SEARCH_ORDER,
        });
    }
    if k == 0 || !g.order().is_multiple_of(k) {
        return Err(GroupError::OrderDoesNotDivide {
            order: k,
            group_order: g.order(),
        });
    }
    let found: BTreeSet<Subgroup> = grow(g, Some(k))
        .into_iter()
        .filter(|s| s.order() == k)
        .map(|s| s.canonical_conjugate(g))
        .collect();
    Ok(found.into_iter().collect())
}

/// Every subgroup of `g`, sorted. Exhaustive, so meant for small groups.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut all: Vec<Subgroup> = grow(g, None).into_iter().collect();
    all.sort();
    all
}

/// Subgroups reachable from the trivial one by adjoining one element at a
/// time, staying within orders that divide `limit`.
fn grow(g: &FiniteGroup, limit: Option<usize>) -> HashSet<Subgroup> {
    let start = Subgroup::trivial(g);
    let mut seen = HashSet::from([start.clone()]);
    let mut stack = vec![start];
    while let Some(s) = stack.pop() {
        for x in 0..g.order() {
            if s.contains(x) {
                continue;
            }
            let mut gens = s.elements.clone();
            gens.push(x);
            let t = Subgroup::from_sorted(g.closure(&gens));
            if limit.is_some_and(|k| k % t.order() != 0) {
                continue;
            }
            if seen.insert(t.clone()) {
                stack.push(t);
            }
        }
    }
    seen
}
