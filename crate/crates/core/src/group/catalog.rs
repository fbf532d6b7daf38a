//! Named groups: the groups of order `2r^2` for small `r`, and a parser for
//! names such as `D4`, `C3wrS2` or `Dih(C3xC3)`.

use serde::Serialize;

use super::character::character_table;
use super::classes::conjugacy_classes;
use super::{FiniteGroup, GroupError};

/// Groups built from names are capped at this order.
pub const MAX_NAMED_ORDER: usize = 1000;

/// Every group of order `2r^2` up to isomorphism, for `r` in `{1, 2, 3, 5}`.
pub fn catalog_order_2r2(r: usize) -> Result<Vec<FiniteGroup>, GroupError> {
    let names: Vec<String> = match r {
        1 => vec!["C2".into()],
        2 => ["C8", "C4xC2", "C2xC2xC2", "D4", "Q8"].map(String::from).to_vec(),
        3 | 5 => vec![
            format!("C{}", 2 * r * r),
            format!("C{r}xC{}", 2 * r),
            format!("D{}", r * r),
            format!("C{r}wrS2"),
            format!("Dih(C{r}xC{r})"),
        ],
        _ => return Err(GroupError::UnsupportedR(r)),
    };
    names.iter().map(|n| by_name(n)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Expr {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Quaternion,
    GenDihedral(Box<Expr>),
    Wreath(Box<Expr>, usize),
    Product(Vec<Expr>),
}

impl Expr {
    fn order(&self) -> Option<usize> {
        match self {
            Expr::Cyclic(n) => Some(*n),
            Expr::Dihedral(n) => n.checked_mul(2),
            Expr::Symmetric(n) => (1..=*n).try_fold(1usize, |acc, k| acc.checked_mul(k)),
            Expr::Quaternion => Some(8),
            Expr::GenDihedral(a) => a.order()?.checked_mul(2),
            Expr::Wreath(a, n) => {
                let base = a.order()?.checked_pow(u32::try_from(*n).ok()?)?;
                base.checked_mul(Expr::Symmetric(*n).order()?)
            }
            Expr::Product(parts) => parts.iter().try_fold(1usize, |acc, p| acc.checked_mul(p.order()?)),
        }
    }

    fn build(&self) -> Result<FiniteGroup, GroupError> {
        match self {
            Expr::Cyclic(n) => FiniteGroup::cyclic(*n),
            Expr::Dihedral(n) => FiniteGroup::dihedral(*n),
            Expr::Symmetric(n) => Ok(FiniteGroup::symmetric(*n)),
            Expr::Quaternion => Ok(FiniteGroup::quaternion8()),
            Expr::GenDihedral(a) => FiniteGroup::generalized_dihedral(&a.build()?),
            Expr::Wreath(a, n) => Ok(FiniteGroup::wreath_symmetric(&a.build()?, *n)),
            Expr::Product(parts) => {
                let mut it = parts.iter();
                let first = it.next().expect("non-empty product").build()?;
                it.try_fold(first, |acc, p| Ok(FiniteGroup::direct_product(&acc, &p.build()?)))
            }
        }
    }
}

/// Splits at `sep` occurrences outside parentheses.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn parse(s: &str) -> Option<Expr> {
    let s = s.trim();
    let factors = split_top(s, 'x');
    if factors.len() > 1 {
        return factors.into_iter().map(parse).collect::<Option<Vec<_>>>().map(Expr::Product);
    }
    if let Some(inner) = s.strip_prefix("Dih(").and_then(|t| t.strip_suffix(')')) {
        return parse(inner).map(|a| Expr::GenDihedral(Box::new(a)));
    }
    if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        return parse(inner);
    }
    if let Some(at) = s.rfind("wrS") {
        let n = s[at + 3..].parse().ok()?;
        return parse(&s[..at]).map(|a| Expr::Wreath(Box::new(a), n));
    }
    let number = |prefix: &str| s.strip_prefix(prefix).and_then(|t| t.parse::<usize>().ok());
    if s == "Q8" {
        Some(Expr::Quaternion)
    } else if let Some(n) = number("C") {
        (n > 0).then_some(Expr::Cyclic(n))
    } else if let Some(n) = number("D") {
        (n > 0).then_some(Expr::Dihedral(n))
    } else {
        number("S").map(Expr::Symmetric)
    }
}

/// Builds a group from its name. Recognised forms: `Cn`, `Dn` (order `2n`),
/// `Sn`, `Q8`, `Dih(A)`, `AwrSn`, and products `AxB`, with parentheses for
/// grouping.
pub fn by_name(name: &str) -> Result<FiniteGroup, GroupError> {
    let expr = parse(name).ok_or_else(|| GroupError::UnknownName(name.to_string()))?;
    match expr.order() {
        Some(order) if order <= MAX_NAMED_ORDER => {}
        order => {
            return Err(GroupError::TooLarge {
                order: order.unwrap_or(usize::MAX),
                bound: MAX_NAMED_ORDER,
            })
        }
    }
    Ok(expr.build()?.with_name(name.trim()))
}

/// Isomorphism invariants used to tell catalog groups apart.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub class_sizes: Vec<usize>,
    pub degrees: Vec<u64>,
    pub element_orders: Vec<usize>,
}

pub fn fingerprint(g: &FiniteGroup) -> Result<Fingerprint, GroupError> {
    let mut class_sizes = conjugacy_classes(g).sizes();
    class_sizes.sort_unstable();
    let mut degrees = character_table(g)?.degrees().to_vec();
    degrees.sort_unstable();
    let mut element_orders: Vec<usize> = (0..g.order()).map(|x| g.element_order(x)).collect();
    element_orders.sort_unstable();
    Ok(Fingerprint {
        order: g.order(),
        class_sizes,
        degrees,
        element_orders,
    })
}
