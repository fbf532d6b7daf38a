//! Clifford's theorem, checked on characters.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use super::character::{character_table_mod, CharacterTable};
use super::restrict::restriction_matrix;
use super::subgroup::Subgroup;
use super::{FiniteGroup, GroupError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliffordVerdict {
    pub chi: usize,
    /// Order of the group acting on `Irr(N)` by conjugation.
    pub acting_order: usize,
    /// `(psi, multiplicity)` for every constituent of the restriction.
    pub constituents: Vec<(usize, u64)>,
    /// Orbits of the action that meet the constituents.
    pub orbits: Vec<Vec<usize>>,
    pub single_orbit: bool,
    pub equal_degrees: bool,
    pub equal_multiplicities: bool,
    /// If the trivial character occurs, it is the only constituent.
    pub trivial_rule: bool,
}

impl CliffordVerdict {
    pub fn holds(&self) -> bool {
        self.single_orbit && self.equal_degrees && self.equal_multiplicities && self.trivial_rule
    }
}

/// Checks the constituents of `Res^G_N chi` for a normal subgroup `N`.
pub fn clifford_check(
    g: &FiniteGroup,
    ct_g: &CharacterTable,
    n: &Subgroup,
    chi: usize,
) -> Result<CliffordVerdict, GroupError> {
    if !n.is_normal(g) {
        return Err(GroupError::NotNormal);
    }
    clifford_analysis(g, ct_g, n, chi)
}

/// The same analysis for an arbitrary subgroup `H`, with its normalizer
/// acting on `Irr(H)`. For normal `H` this is `clifford_check`.
pub fn clifford_analysis(
    g: &FiniteGroup,
    ct_g: &CharacterTable,
    h: &Subgroup,
    chi: usize,
) -> Result<CliffordVerdict, GroupError> {
    if chi >= ct_g.len() {
        return Err(GroupError::NoSuchCharacter(chi));
    }
    let big = Arc::new(g.clone());
    let inclusion = h.inclusion(big);
    let ct_h = character_table_mod(inclusion.source(), ct_g.prime())?;
    let restriction = restriction_matrix(&inclusion, ct_g, &ct_h)?;
    let constituents: Vec<(usize, u64)> = (0..ct_h.len())
        .map(|psi| (psi, restriction[psi][chi]))
        .filter(|&(_, m)| m > 0)
        .collect();

    let acting = h.normalizer(g);
    let position = |x: usize| h.elements().binary_search(&x).expect("element of H");
    // psi^x(y) = psi(x^-1 y x)
    let conjugate_character = |psi: usize, x: usize| -> usize {
        let values: Vec<u64> = (0..ct_h.classes().len())
            .map(|c| {
                let y = h.elements()[ct_h.classes().representative(c)];
                ct_h.value_at(psi, position(g.conjugate(g.inv(x), y)))
            })
            .collect();
        (0..ct_h.len())
            .find(|&phi| ct_h.row(phi) == values.as_slice())
            .expect("conjugation permutes irreducibles")
    };
    let orbit_of = |psi: usize| -> BTreeSet<usize> {
        acting.elements().iter().map(|&x| conjugate_character(psi, x)).collect()
    };

    let support: BTreeSet<usize> = constituents.iter().map(|&(psi, _)| psi).collect();
    let mut orbits: Vec<BTreeSet<usize>> = Vec::new();
    for &psi in &support {
        if !orbits.iter().any(|o| o.contains(&psi)) {
            orbits.push(orbit_of(psi));
        }
    }
    let single_orbit = orbits.len() == 1 && orbits[0] == support;
    let equal_degrees = constituents
        .windows(2)
        .all(|w| ct_h.degree(w[0].0) == ct_h.degree(w[1].0));
    let equal_multiplicities = constituents.windows(2).all(|w| w[0].1 == w[1].1);
    let trivial_rule = !support.contains(&0) || support.len() == 1;
    Ok(CliffordVerdict {
        chi,
        acting_order: acting.order(),
        constituents,
        orbits: orbits.into_iter().map(|o| o.into_iter().collect()).collect(),
        single_orbit,
        equal_degrees,
        equal_multiplicities,
        trivial_rule,
    })
}
