//! Restriction and induction multiplicities along an embedding `H -> G`.

use std::borrow::Cow;

use super::character::{character_table_mod, CharacterTable};
use super::{Embedding, GroupError};

/// `<a, b>` in the table's field.
pub fn inner_product(table: &CharacterTable, a: &[u64], b: &[u64]) -> u64 {
    table.inner_product(a, b)
}

fn check_shapes(e: &Embedding, g: &CharacterTable, h: &CharacterTable) -> Result<(), GroupError> {
    if g.order() != e.target().order() || h.order() != e.source().order() {
        return Err(GroupError::InvalidParameter(
            "character tables do not match the embedding".into(),
        ));
    }
    Ok(())
}

/// The subgroup table over `g`'s prime, recomputing it if needed.
fn aligned<'a>(e: &Embedding, g: &CharacterTable, h: &'a CharacterTable) -> Result<Cow<'a, CharacterTable>, GroupError> {
    check_shapes(e, g, h)?;
    if g.prime() == h.prime() {
        return Ok(Cow::Borrowed(h));
    }
    match character_table_mod(e.source(), g.prime()) {
        Ok(t) => Ok(Cow::Owned(t)),
        Err(GroupError::UnsuitablePrime(_) | GroupError::SplitFailure(_)) => {
            Err(GroupError::PrimeMismatch(g.prime(), h.prime()))
        }
        Err(other) => Err(other),
    }
}

fn lift(value: u64, bound: u64, prime: u64) -> Result<u64, GroupError> {
    if value > bound {
        Err(GroupError::NonIntegralLift { value, prime })
    } else {
        Ok(value)
    }
}

/// `R[psi][chi] = <Res chi, psi>_H`, rows indexed by `Irr(H)` and columns by
/// `Irr(G)`, both in canonical order.
pub fn restriction_matrix(
    e: &Embedding,
    ct_g: &CharacterTable,
    ct_h: &CharacterTable,
) -> Result<Vec<Vec<u64>>, GroupError> {
    let h_table = aligned(e, ct_g, ct_h)?;
    let h_classes = h_table.classes();
    let restricted: Vec<Vec<u64>> = (0..ct_g.len())
        .map(|chi| {
            (0..h_classes.len())
                .map(|c| ct_g.value_at(chi, e.apply(h_classes.representative(c))))
                .collect()
        })
        .collect();
    (0..h_table.len())
        .map(|psi| {
            (0..ct_g.len())
                .map(|chi| {
                    let value = h_table.inner_product(&restricted[chi], h_table.row(psi));
                    lift(value, ct_g.degree(chi), ct_g.prime())
                })
                .collect()
        })
        .collect()
}

/// Induces a class function of `H` (values on `H`'s classes) to `G`:
/// `Ind f(g) = (1/|H|) sum_{x in G} f(x g x^-1)`, with `f` zero off `H`.
pub fn induce_class_function(
    e: &Embedding,
    ct_g: &CharacterTable,
    ct_h: &CharacterTable,
    f: &[u64],
) -> Result<Vec<u64>, GroupError> {
    let h_table = aligned(e, ct_g, ct_h)?;
    let g = e.target();
    let field = ct_g.field();
    let mut preimage = vec![None; g.order()];
    for h in 0..e.source().order() {
        preimage[e.apply(h)] = Some(h);
    }
    let scale = field.inv(e.source().order() as u64 % ct_g.prime());
    let classes = ct_g.classes();
    Ok((0..classes.len())
        .map(|c| {
            let rep = classes.representative(c);
            let sum = (0..g.order()).fold(0, |acc, x| match preimage[g.conjugate(x, rep)] {
                Some(h) => field.add(acc, f[h_table.classes().class_of(h)] % ct_g.prime()),
                None => acc,
            });
            field.mul(sum, scale)
        })
        .collect())
}

/// `I[chi][psi] = <Ind psi, chi>_G`, computed by inducing characters rather
/// than by transposing the restriction matrix.
pub fn induction_matrix(
    e: &Embedding,
    ct_g: &CharacterTable,
    ct_h: &CharacterTable,
) -> Result<Vec<Vec<u64>>, GroupError> {
    let h_table = aligned(e, ct_g, ct_h)?;
    let induced: Vec<Vec<u64>> = (0..h_table.len())
        .map(|psi| induce_class_function(e, ct_g, &h_table, h_table.row(psi)))
        .collect::<Result<_, _>>()?;
    let index = (e.target().order() / e.source().order()) as u64;
    (0..ct_g.len())
        .map(|chi| {
            (0..h_table.len())
                .map(|psi| {
                    let value = ct_g.inner_product(&induced[psi], ct_g.row(chi));
                    lift(value, index * h_table.degree(psi), ct_g.prime())
                })
                .collect()
        })
        .collect()
}
