//! Character tables by Dixon's method.
//!
//! The class sums of `G` span the centre of the group algebra, and each
//! irreducible `chi` gives a central character
//! `omega(C) = |C| chi(g_C) / chi(1)`. These are the common eigenvectors of
//! the class multiplication matrices. Over `F_p` with `p = 1 (mod exp G)` all
//! eigenvalues lie in the field and the common eigenspaces are lines, so the
//! whole table can be computed exactly with modular linear algebra.

use super::classes::{conjugacy_classes, ConjugacyClasses};
use super::field::{dixon_prime, is_prime, PrimeField};
use super::{FiniteGroup, GroupError};

/// Largest group order the engine accepts.
pub const MAX_TABLE_ORDER: usize = 200;
const PRIME_ATTEMPTS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    order: usize,
    prime: u64,
    classes: ConjugacyClasses,
    // irreducible x class
    values: Vec<Vec<u64>>,
    degrees: Vec<u64>,
}

/// Table over the smallest Dixon prime of `g`, moving to the next suitable
/// prime if the eigenspaces fail to split.
pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable, GroupError> {
    check_size(g)?;
    let exponent = g.exponent() as u64;
    let mut p = dixon_prime(exponent, g.order() as u64);
    let mut last = None;
    for _ in 0..PRIME_ATTEMPTS {
        match character_table_mod(g, p) {
            Err(err @ GroupError::SplitFailure(_)) => last = Some(err),
            other => return other,
        }
        p += exponent;
        while !is_prime(p) {
            p += exponent;
        }
    }
    Err(last.expect("at least one attempt"))
}

fn check_size(g: &FiniteGroup) -> Result<(), GroupError> {
    if g.order() > MAX_TABLE_ORDER {
        return Err(GroupError::TooLarge {
            order: g.order(),
            bound: MAX_TABLE_ORDER,
        });
    }
    Ok(())
}

/// Table over a given prime, which must satisfy `p = 1 (mod exp G)` and
/// `p > 2|G|` so that degrees and multiplicities lift unambiguously.
pub fn character_table_mod(g: &FiniteGroup, p: u64) -> Result<CharacterTable, GroupError> {
    check_size(g)?;
    let order = g.order() as u64;
    if !is_prime(p) || !(p - 1).is_multiple_of(g.exponent() as u64) || p <= 2 * order || p >= 1 << 31 {
        return Err(GroupError::UnsuitablePrime(p));
    }
    let field = PrimeField::new(p);
    let classes = conjugacy_classes(g);
    let k = classes.len();

    // constants[i][j][l] = #{x in C_i : x^-1 z_l in C_j}, z_l the representative of C_l
    let mut constants = vec![vec![vec![0u64; k]; k]; k];
    for l in 0..k {
        let z = classes.representative(l);
        for x in 0..g.order() {
            let i = classes.class_of(x);
            let j = classes.class_of(g.mul(g.inv(x), z));
            constants[i][j][l] += 1;
        }
    }

    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| {
            let mut e = vec![0; k];
            e[i] = 1;
            e
        })
        .collect()];
    for class_matrix in constants.iter().skip(1) {
        if spaces.len() == k {
            break;
        }
        let mut next = Vec::with_capacity(k);
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            next.extend(split(field, class_matrix, &basis)?);
        }
        spaces = next;
    }
    if spaces.len() != k {
        return Err(GroupError::SplitFailure(p));
    }

    let sizes: Vec<u64> = classes.sizes().iter().map(|&s| s as u64).collect();
    let max_degree = (1..).take_while(|d| d * d <= order).last().unwrap_or(1);
    let mut rows: Vec<(u64, Vec<u64>)> = Vec::with_capacity(k);
    for space in spaces {
        let v = &space[0];
        if v[0] == 0 {
            return Err(GroupError::SplitFailure(p));
        }
        let scale = field.inv(v[0]);
        let omega: Vec<u64> = v.iter().map(|&x| field.mul(x, scale)).collect();
        // chi(1)^2 * sum_j omega_j omega_j* / |C_j| = |G|
        let s = (0..k).fold(0, |acc, j| {
            let term = field.mul(omega[j], omega[classes.inverse_class(j)]);
            field.add(acc, field.mul(term, field.inv(sizes[j] % p)))
        });
        if s == 0 {
            return Err(GroupError::SplitFailure(p));
        }
        let degree_sq = field.mul(order % p, field.inv(s));
        let degree = (1..=max_degree)
            .find(|&d| d * d % p == degree_sq)
            .ok_or(GroupError::SplitFailure(p))?;
        let values = (0..k)
            .map(|j| field.mul(field.mul(omega[j], degree), field.inv(sizes[j] % p)))
            .collect();
        rows.push((degree, values));
    }
    rows.sort();

    let table = CharacterTable {
        order: g.order(),
        prime: p,
        classes,
        degrees: rows.iter().map(|r| r.0).collect(),
        values: rows.into_iter().map(|r| r.1).collect(),
    };
    if table.degrees.iter().map(|d| d * d).sum::<u64>() != order {
        return Err(GroupError::SplitFailure(p));
    }
    Ok(table)
}

fn apply(field: PrimeField, m: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(0, |acc, (&a, &b)| field.add(acc, field.mul(a, b))))
        .collect()
}

/// Splits an invariant subspace (given by a basis) into eigenspaces of `m`.
fn split(field: PrimeField, m: &[Vec<u64>], basis: &[Vec<u64>]) -> Result<Vec<Vec<Vec<u64>>>, GroupError> {
    let k = m.len();
    let d = basis.len();
    let images: Vec<Vec<u64>> = basis.iter().map(|b| apply(field, m, b)).collect();
    let mut pieces = Vec::new();
    let mut found = 0;
    for lambda in 0..field.modulus() {
        let shifted: Vec<Vec<u64>> = (0..k)
            .map(|row| {
                (0..d)
                    .map(|t| field.sub(images[t][row], field.mul(lambda, basis[t][row])))
                    .collect()
            })
            .collect();
        let kernel = field.null_space(&shifted, d);
        if kernel.is_empty() {
            continue;
        }
        found += kernel.len();
        pieces.push(
            kernel
                .iter()
                .map(|c| {
                    (0..k)
                        .map(|row| {
                            (0..d).fold(0, |acc, t| field.add(acc, field.mul(c[t], basis[t][row])))
                        })
                        .collect()
                })
                .collect(),
        );
        if found == d {
            return Ok(pieces);
        }
    }
    Err(GroupError::SplitFailure(field.modulus()))
}

impl CharacterTable {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.prime)
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        &self.classes
    }

    /// Number of irreducible characters, equal to the number of classes.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn degree(&self, chi: usize) -> u64 {
        self.degrees[chi]
    }

    /// Values of `chi` on the classes, in class order.
    pub fn row(&self, chi: usize) -> &[u64] {
        &self.values[chi]
    }

    pub fn value(&self, chi: usize, class: usize) -> u64 {
        self.values[chi][class]
    }

    pub fn value_at(&self, chi: usize, g: usize) -> u64 {
        self.values[chi][self.classes.class_of(g)]
    }

    /// `<a, b> = (1/|G|) sum_g a(g) b(g^-1)` for class functions given on classes.
    pub fn inner_product(&self, a: &[u64], b: &[u64]) -> u64 {
        let f = self.field();
        let sum = (0..self.classes.len()).fold(0, |acc, c| {
            let term = f.mul(a[c], b[self.classes.inverse_class(c)]);
            f.add(acc, f.mul(term, self.classes.size(c) as u64))
        });
        f.mul(sum, f.inv(self.order as u64 % self.prime))
    }

    pub fn row_orthogonality_holds(&self) -> bool {
        (0..self.len()).all(|a| {
            (0..self.len()).all(|b| self.inner_product(self.row(a), self.row(b)) == u64::from(a == b))
        })
    }

    /// `sum_chi chi(g_i) chi(g_j^-1) = delta_ij |C_G(g_i)|`
    pub fn column_orthogonality_holds(&self) -> bool {
        let f = self.field();
        let k = self.classes.len();
        (0..k).all(|i| {
            (0..k).all(|j| {
                let jinv = self.classes.inverse_class(j);
                let sum = (0..self.len()).fold(0, |acc, chi| f.add(acc, f.mul(self.value(chi, i), self.value(chi, jinv))));
                let expected = if i == j {
                    (self.order / self.classes.size(i)) as u64 % self.prime
                } else {
                    0
                };
                sum == expected
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_is_all_linear() {
        let t = character_table(&FiniteGroup::cyclic(3).unwrap()).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 1]);
        assert_eq!(t.row(0), &[1, 1, 1]);
        assert!(t.row_orthogonality_holds());
        assert!(t.column_orthogonality_holds());
    }

    #[test]
    fn s3_degrees() {
        let t = character_table(&FiniteGroup::symmetric(3)).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 2]);
        assert_eq!(t.prime(), 13);
        // the 2-dimensional character: 2, 0, -1 on (e, transpositions, 3-cycles)
        assert_eq!(t.row(2), &[2, 0, 12]);
    }

    #[test]
    fn d4_degrees() {
        let t = character_table(&FiniteGroup::dihedral(4).unwrap()).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 1, 1, 2]);
        assert!(t.row_orthogonality_holds());
        assert!(t.column_orthogonality_holds());
    }

    #[test]
    fn trivial_group() {
        let t = character_table(&FiniteGroup::trivial()).unwrap();
        assert_eq!(t.degrees(), &[1]);
    }

    #[test]
    fn prime_validation() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(character_table_mod(&s3, 7), Err(GroupError::UnsuitablePrime(7)));
        assert_eq!(character_table_mod(&s3, 15), Err(GroupError::UnsuitablePrime(15)));
        assert!(character_table_mod(&s3, 19).is_ok());
        let big = FiniteGroup::symmetric(6);
        assert!(matches!(character_table(&big), Err(GroupError::TooLarge { .. })));
    }
}
