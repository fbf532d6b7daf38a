//! Finite groups given by full multiplication tables, and exact character
//! theory over a prime field.

pub mod catalog;
mod character;
mod classes;
mod clifford;
pub mod field;
mod restrict;
mod subgroup;

pub use character::{character_table, character_table_mod, CharacterTable, MAX_TABLE_ORDER};
pub use classes::{conjugacy_classes, ConjugacyClasses};
pub use clifford::{clifford_analysis, clifford_check, CliffordVerdict};
pub use restrict::{
    induce_class_function, induction_matrix, inner_product, restriction_matrix,
};
pub use subgroup::{all_subgroups, subgroups_of_order, Subgroup, MAX_SUBGROUP_SEARCH_ORDER};

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use thiserror::Error;

/// Orders above this are never checked for associativity element by element.
pub const ASSOCIATIVITY_CHECK_BOUND: usize = 200;
/// Default cap on permutation-group closures.
pub const DEFAULT_CLOSURE_BOUND: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("multiplication table is not square")]
    NotSquare,
    #[error("table entry {0} is out of range")]
    EntryOutOfRange(usize),
    #[error("table has no identity element")]
    NoIdentity,
    #[error("table is not a latin square, so some element has no inverse")]
    NotLatin,
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("generators must be permutations of one common set: {0}")]
    BadPermutation(String),
    #[error("closure exceeds {0} elements")]
    ClosureTooLarge(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("group of order {order} exceeds the bound {bound}")]
    TooLarge { order: usize, bound: usize },
    #[error("{0} is not a suitable prime for this group")]
    UnsuitablePrime(u64),
    #[error("eigenspace splitting failed over F_{0}")]
    SplitFailure(u64),
    #[error("character tables use different primes ({0} and {1})")]
    PrimeMismatch(u64, u64),
    #[error("inner product {value} over F_{prime} does not lift to a multiplicity")]
    NonIntegralLift { value: u64, prime: u64 },
    #[error("not an injective homomorphism: {0}")]
    BadEmbedding(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("element set is not a subgroup")]
    NotSubgroup,
    #[error("subgroup search is limited to order {bound}, asked for {order}")]
    SubgroupOrderTooLarge { order: usize, bound: usize },
    #[error("{order} does not divide the group order {group_order}")]
    OrderDoesNotDivide { order: usize, group_order: usize },
    #[error("unknown group name `{0}`")]
    UnknownName(String),
    #[error("no catalog for r = {0}")]
    UnsupportedR(usize),
    #[error("character index {0} out of range")]
    NoSuchCharacter(usize),
}

/// A finite group on the element indices `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    generators: Option<Vec<usize>>,
    name: Option<String>,
}

impl FiniteGroup {
    /// Builds a group from a Cayley table `table[a][b] = a * b`.
    pub fn from_cayley(table: &[Vec<usize>]) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 || table.iter().any(|row| row.len() != n) {
            return Err(GroupError::NotSquare);
        }
        if let Some(&bad) = table.iter().flatten().find(|&&x| x >= n) {
            return Err(GroupError::EntryOutOfRange(bad));
        }
        let flat: Vec<usize> = table.iter().flatten().copied().collect();
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| flat[e * n + x] == x && flat[x * n + e] == x))
            .ok_or(GroupError::NoIdentity)?;
        let mut seen = vec![false; n];
        for a in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..n {
                let c = flat[a * n + b];
                if std::mem::replace(&mut seen[c], true) {
                    return Err(GroupError::NotLatin);
                }
            }
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..n {
                let c = flat[b * n + a];
                if std::mem::replace(&mut seen[c], true) {
                    return Err(GroupError::NotLatin);
                }
            }
        }
        if n <= ASSOCIATIVITY_CHECK_BOUND {
            for a in 0..n {
                for b in 0..n {
                    let ab = flat[a * n + b];
                    for c in 0..n {
                        if flat[ab * n + c] != flat[a * n + flat[b * n + c]] {
                            return Err(GroupError::NotAssociative(a, b, c));
                        }
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| flat[a * n + b] == identity)
                    .expect("latin square has inverses")
            })
            .collect();
        Ok(FiniteGroup {
            order: n,
            table: flat,
            identity,
            inverse,
            generators: None,
            name: None,
        })
    }

    /// Closure of permutations given by 0-based one-line images, with the
    /// default closure bound.
    pub fn from_permutations(generators: &[Vec<usize>]) -> Result<Self, GroupError> {
        Self::from_permutations_bounded(generators, DEFAULT_CLOSURE_BOUND)
    }

    /// Orbit enumeration of the identity under right multiplication by the
    /// generators. Element 0 is the identity; the rest follow in BFS order.
    pub fn from_permutations_bounded(generators: &[Vec<usize>], bound: usize) -> Result<Self, GroupError> {
        let degree = generators.first().map_or(0, Vec::len);
        for g in generators {
            if g.len() != degree {
                return Err(GroupError::BadPermutation(format!("{g:?} has the wrong degree")));
            }
            let mut seen = vec![false; degree];
            for &x in g {
                if x >= degree || std::mem::replace(&mut seen[x], true) {
                    return Err(GroupError::BadPermutation(format!("{g:?}")));
                }
            }
        }
        let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { b.iter().map(|&x| a[x]).collect() };

        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let next = compose(&elements[i], g);
                if !index.contains_key(&next) {
                    if elements.len() == bound {
                        return Err(GroupError::ClosureTooLarge(bound));
                    }
                    index.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        let table: Vec<Vec<usize>> = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&compose(a, b)]).collect())
            .collect();
        let mut group = FiniteGroup::from_cayley(&table)?;
        group.generators = Some(generators.iter().map(|g| index[g]).collect());
        Ok(group)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn display_name(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("group of order {}", self.order))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn generators(&self) -> Option<&[usize]> {
        self.generators.as_deref()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g x g^-1`
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn cayley_table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1, |acc, g| lcm(acc, self.element_order(g)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order];
        inside[self.identity] = true;
        let mut elements = vec![self.identity];
        let mut i = 0;
        while i < elements.len() {
            let x = elements[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    elements.push(y);
                }
            }
            i += 1;
        }
        elements.sort_unstable();
        elements
    }

    /// The commutator subgroup.
    pub fn derived_subgroup(&self) -> Subgroup {
        let mut comms: Vec<usize> = (0..self.order)
            .flat_map(|a| (0..self.order).map(move |b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        comms.sort_unstable();
        comms.dedup();
        Subgroup::from_sorted(self.closure(&comms))
    }

    // Constructors. Every one goes through `from_cayley`, so tables are
    // validated; element 0 is always the identity.

    pub fn trivial() -> Self {
        FiniteGroup::from_cayley(&[vec![0]]).expect("trivial group").with_name("C1")
    }

    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidParameter("cyclic group of order 0".into()));
        }
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Ok(FiniteGroup::from_cayley(&table)?.with_name(format!("C{n}")))
    }

    /// Symmetries of the `n`-gon, order `2n`; element `e * n + k` is `s^e r^k`.
    pub fn dihedral(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidParameter("dihedral group of a 0-gon".into()));
        }
        let cyclic = FiniteGroup::cyclic(n)?;
        Ok(FiniteGroup::generalized_dihedral(&cyclic)?.with_name(format!("D{n}")))
    }

    pub fn quaternion8() -> Self {
        // units 1, i, j, k; element sign * 4 + unit
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let table: Vec<Vec<usize>> = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| {
                        let (s, u) = UNIT[a % 4][b % 4];
                        ((s + a / 4 + b / 4) % 2) * 4 + u
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_cayley(&table).expect("quaternion table").with_name("Q8")
    }

    /// `G x H`; element `g * |H| + h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let (m, n) = (g.order, h.order);
        let table: Vec<Vec<usize>> = (0..m * n)
            .map(|a| {
                (0..m * n)
                    .map(|b| g.mul(a / n, b / n) * n + h.mul(a % n, b % n))
                    .collect()
            })
            .collect();
        let group = FiniteGroup::from_cayley(&table).expect("direct product");
        match (g.name(), h.name()) {
            (Some(a), Some(b)) => group.with_name(format!("{a}x{b}")),
            _ => group,
        }
    }

    /// `A x| C2` with the involution acting by inversion; `A` must be abelian.
    /// Element `e * |A| + a`.
    pub fn generalized_dihedral(a: &FiniteGroup) -> Result<Self, GroupError> {
        if !a.is_abelian() {
            return Err(GroupError::InvalidParameter(
                "generalized dihedral group needs an abelian group".into(),
            ));
        }
        let n = a.order;
        let table: Vec<Vec<usize>> = (0..2 * n)
            .map(|x| {
                (0..2 * n)
                    .map(|y| {
                        let (ex, ax) = (x / n, x % n);
                        let (ey, ay) = (y / n, y % n);
                        let ay = if ex == 1 { a.inv(ay) } else { ay };
                        ((ex + ey) % 2) * n + a.mul(ax, ay)
                    })
                    .collect()
            })
            .collect();
        let group = FiniteGroup::from_cayley(&table)?;
        Ok(match a.name() {
            Some(name) => group.with_name(format!("Dih({name})")),
            None => group,
        })
    }

    pub fn wreath_with_s2(a: &FiniteGroup) -> Self {
        FiniteGroup::wreath_symmetric(a, 2)
    }

    pub fn symmetric(n: usize) -> Self {
        FiniteGroup::wreath_symmetric(&FiniteGroup::trivial(), n).with_name(format!("S{n}"))
    }

    /// `A wr S_n`, order `|A|^n n!`. See [`WreathCoordinates`] for the element
    /// numbering.
    pub fn wreath_symmetric(a: &FiniteGroup, n: usize) -> Self {
        let coords = WreathCoordinates::new(a.order, n);
        let size = coords.order();
        let decoded: Vec<(Vec<usize>, usize)> = (0..size).map(|x| coords.decode(x)).collect();
        let table: Vec<Vec<usize>> = decoded
            .iter()
            .map(|(xa, xp)| {
                let pi = &coords.perms[*xp];
                let pi_inv = invert(pi);
                decoded
                    .iter()
                    .map(|(ya, yp)| {
                        let sigma = &coords.perms[*yp];
                        // (a; pi)(b; sigma) = (c; pi sigma), c_j = a_j b_{pi^-1(j)}
                        let base: Vec<usize> = (0..n).map(|j| a.mul(xa[j], ya[pi_inv[j]])).collect();
                        let perm: Vec<usize> = sigma.iter().map(|&i| pi[i]).collect();
                        coords.encode(&base, coords.perm_index[&perm])
                    })
                    .collect()
            })
            .collect();
        let group = FiniteGroup::from_cayley(&table).expect("wreath product table");
        match a.name() {
            Some("C1") if n > 0 => group.with_name(format!("S{n}")),
            Some(name) => group.with_name(format!("{name}wrS{n}")),
            None => group,
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// Element numbering of `A wr S_n`: `(a_0, ..., a_{n-1}; pi)` has index
/// `perm_index(pi) * |A|^n + sum a_i |A|^i`, with permutations of `0..n` in
/// lexicographic order. The identity of `A` must be its element 0.
#[derive(Debug, Clone)]
pub struct WreathCoordinates {
    base_order: usize,
    n: usize,
    perms: Vec<Vec<usize>>,
    perm_index: HashMap<Vec<usize>, usize>,
}

impl WreathCoordinates {
    pub fn new(base_order: usize, n: usize) -> Self {
        let mut perms = Vec::new();
        let mut p: Vec<usize> = (0..n).collect();
        loop {
            perms.push(p.clone());
            let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("pivot");
            p.swap(i - 1, j);
            p[i..].reverse();
        }
        let perm_index = perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        WreathCoordinates {
            base_order,
            n,
            perms,
            perm_index,
        }
    }

    pub fn order(&self) -> usize {
        self.base_order.pow(self.n as u32) * self.perms.len()
    }

    fn base_size(&self) -> usize {
        self.base_order.pow(self.n as u32)
    }

    pub fn encode(&self, base: &[usize], perm: usize) -> usize {
        let mut code = 0;
        for &a in base.iter().rev() {
            code = code * self.base_order + a;
        }
        perm * self.base_size() + code
    }

    pub fn decode(&self, x: usize) -> (Vec<usize>, usize) {
        let mut code = x % self.base_size();
        let base = (0..self.n)
            .map(|_| {
                let a = code % self.base_order;
                code /= self.base_order;
                a
            })
            .collect();
        (base, x / self.base_size())
    }

    pub fn perm(&self, index: usize) -> &[usize] {
        &self.perms[index]
    }

    /// Image of every element of `A wr S_n` in `A wr S_{n+1}`, fixing the new
    /// point and putting the identity in the new coordinate.
    pub fn standard_embedding(&self) -> Vec<usize> {
        let up = WreathCoordinates::new(self.base_order, self.n + 1);
        (0..self.order())
            .map(|x| {
                let (mut base, p) = self.decode(x);
                base.push(0);
                let mut perm = self.perms[p].clone();
                perm.push(self.n);
                up.encode(&base, up.perm_index[&perm])
            })
            .collect()
    }
}

/// An injective homomorphism `source -> target`, stored as an element map.
#[derive(Debug, Clone)]
pub struct Embedding {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    map: Vec<usize>,
}

impl Embedding {
    /// Checks injectivity and the homomorphism law on all pairs.
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, map: Vec<usize>) -> Result<Self, GroupError> {
        if map.len() != source.order() {
            return Err(GroupError::BadEmbedding(format!(
                "map has {} entries for a group of order {}",
                map.len(),
                source.order()
            )));
        }
        let mut hit = vec![false; target.order()];
        for &y in &map {
            if y >= target.order() || std::mem::replace(&mut hit[y], true) {
                return Err(GroupError::BadEmbedding(format!("image {y} is repeated or out of range")));
            }
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(GroupError::BadEmbedding(format!(
                        "f({a} * {b}) != f({a}) * f({b})"
                    )));
                }
            }
        }
        Ok(Embedding { source, target, map })
    }

    pub fn identity(group: Arc<FiniteGroup>) -> Self {
        let map = (0..group.order()).collect();
        Embedding {
            source: group.clone(),
            target: group,
            map,
        }
    }

    /// The trivial group mapped to the identity of `target`.
    pub fn from_trivial(target: Arc<FiniteGroup>) -> Self {
        Embedding {
            source: Arc::new(FiniteGroup::trivial()),
            map: vec![target.identity()],
            target,
        }
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }
}
