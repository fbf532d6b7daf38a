use std::sync::Arc;

use dual_towers::graph::{graphs_isomorphic, GradedGraph};
use dual_towers::group::{
    all_subgroups, character_table, character_table_mod, induction_matrix, restriction_matrix, FiniteGroup,
};
use dual_towers::growth::{colored_rsk, colored_rsk_inverse, rsk_growth, rsk_insert, shape_chain, ColoredPermutation, Permutation};
use dual_towers::lattice::{product, scale, young_lattice};
use num_bigint::BigUint;
use proptest::prelude::*;
use proptest::sample::{select, subsequence};

/// Rank sizes, and for each vertex above rank 0 a list of
/// `(lower position, multiplicity)` choices.
fn graph_recipe() -> impl Strategy<Value = Vec<Vec<Vec<(usize, u64)>>>> {
    prop::collection::vec(1usize..=3, 1..=4).prop_flat_map(|sizes| {
        let mut below = vec![1usize];
        below.extend(sizes.iter().copied());
        let ranks: Vec<_> = sizes
            .iter()
            .enumerate()
            .map(|(i, &size)| {
                let lower = below[i];
                prop::collection::vec(prop::collection::vec((0..lower, 1u64..=3), 1..=3), size)
            })
            .collect();
        ranks
    })
}

fn build(recipe: &[Vec<Vec<(usize, u64)>>]) -> GradedGraph {
    let mut vertices = vec![("0:0".to_string(), 0)];
    let mut edges = Vec::new();
    for (i, rank) in recipe.iter().enumerate() {
        let n = i + 1;
        for (k, downs) in rank.iter().enumerate() {
            vertices.push((format!("{n}:{k}"), n));
            let mut seen = Vec::new();
            for &(lo, m) in downs {
                if !seen.contains(&lo) {
                    seen.push(lo);
                    edges.push((format!("{}:{lo}", n - 1), format!("{n}:{k}"), m));
                }
            }
        }
    }
    GradedGraph::build(&vertices, &edges).unwrap()
}

/// Weighted path count by explicit depth-first enumeration of paths.
fn enumerate_paths(g: &GradedGraph, v: usize) -> BigUint {
    if g.rank_of(v) == 0 {
        return BigUint::from(1u32);
    }
    g.down(v)
        .iter()
        .map(|&(w, m)| enumerate_paths(g, w) * m)
        .sum()
}

fn permutation() -> impl Strategy<Value = Permutation> {
    (0usize..=8)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

fn colored_permutation() -> impl Strategy<Value = ColoredPermutation> {
    (permutation(), 1usize..=3).prop_flat_map(|(sigma, r)| {
        let n = sigma.len();
        prop::collection::vec(0..r, n)
            .prop_map(move |colors| ColoredPermutation::new(sigma.clone(), colors, r).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn path_counts_match_enumeration(recipe in graph_recipe()) {
        let g = build(&recipe);
        let e = g.path_counts();
        for v in 0..g.vertex_count() {
            prop_assert_eq!(&e[v], &enumerate_paths(&g, v));
        }
        for n in 0..=g.max_rank() {
            let sum: BigUint = g.rank(n).iter().map(|&v| &e[v] * &e[v]).sum();
            prop_assert_eq!(g.sum_of_squares(n).unwrap(), sum);
        }
    }

    #[test]
    fn down_is_transpose_of_up(recipe in graph_recipe()) {
        let g = build(&recipe);
        for n in 0..g.max_rank() {
            let up = g.up_matrix(n).unwrap();
            let down = g.down_matrix(n + 1).unwrap();
            prop_assert_eq!(down, up.transpose());
        }
    }

    #[test]
    fn json_round_trip_and_relabelled_isomorphism(recipe in graph_recipe()) {
        let g = build(&recipe);
        let back = GradedGraph::from_json(&g.to_json()).unwrap();
        prop_assert_eq!(back.to_json(), g.to_json());
        // reverse the vertex order inside each rank and rename everything
        let vertices: Vec<(String, usize)> = (0..g.vertex_count())
            .rev()
            .map(|v| (format!("v{v}"), g.rank_of(v)))
            .collect();
        let edges: Vec<(String, String, u64)> = g.edges().map(|(a, b, m)| (format!("v{a}"), format!("v{b}"), m)).collect();
        let h = GradedGraph::build(&vertices, &edges).unwrap();
        let iso = graphs_isomorphic(&g, &h);
        prop_assert!(iso.is_some());
        prop_assert!(iso.unwrap().validates(&g, &h));
    }

    #[test]
    fn scaled_products_are_dual(d1 in 1u64..=3, d2 in 1u64..=3, rank in 1usize..=4) {
        let p = product(&scale(&young_lattice(rank), d1).unwrap(), &scale(&young_lattice(rank), d2).unwrap());
        prop_assert!(p.check_duality_full(d1 * d1 + d2 * d2).unwrap().holds());
    }

    #[test]
    fn product_is_associative(d in prop::collection::vec(1u64..=2, 3), rank in 1usize..=3) {
        let y: Vec<GradedGraph> = d.iter().map(|&k| scale(&young_lattice(rank), k).unwrap()).collect();
        let left = product(&product(&y[0], &y[1]), &y[2]);
        let right = product(&y[0], &product(&y[1], &y[2]));
        prop_assert!(graphs_isomorphic(&left, &right).is_some());
    }

    #[test]
    fn growth_agrees_with_insertion(sigma in permutation()) {
        let (p, q) = rsk_insert(&sigma);
        let growth = rsk_growth(&sigma);
        let p_chain: Vec<_> = growth.p_path.iter().map(|t| t.components()[0].clone()).collect();
        let q_chain: Vec<_> = growth.q_path.iter().map(|t| t.components()[0].clone()).collect();
        prop_assert_eq!(p_chain, shape_chain(&p));
        prop_assert_eq!(q_chain, shape_chain(&q));
    }

    #[test]
    fn colored_rsk_round_trip(w in colored_permutation()) {
        let pair = colored_rsk(&w);
        prop_assert_eq!(pair.p_path.last(), pair.q_path.last());
        prop_assert_eq!(colored_rsk_inverse(&pair, w.r()).unwrap(), w);
    }
}

fn small_group() -> impl Strategy<Value = FiniteGroup> {
    select(vec!["S3", "D4", "Q8", "S4", "C3wrS2", "C4xC2", "Dih(C3xC3)", "C2wrS3"])
        .prop_map(|name| dual_towers::group::catalog::by_name(name).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn frobenius_on_generated_subgroups(g in small_group(), picks in subsequence((0usize..48).collect::<Vec<_>>(), 0..3)) {
        let g = Arc::new(g);
        let gens: Vec<usize> = picks.into_iter().map(|x| x % g.order()).collect();
        let sub = dual_towers::group::Subgroup::new(&g, &g.closure(&gens)).unwrap();
        let e = sub.inclusion(g.clone());
        let ct_g = character_table(&g).unwrap();
        let ct_h = character_table_mod(e.source(), ct_g.prime()).unwrap();
        let r = restriction_matrix(&e, &ct_g, &ct_h).unwrap();
        let ind = induction_matrix(&e, &ct_g, &ct_h).unwrap();
        for (psi, row) in r.iter().enumerate() {
            for (chi, &m) in row.iter().enumerate() {
                prop_assert_eq!(ind[chi][psi], m);
            }
        }
        // Res chi has dimension chi(1)
        for chi in 0..ct_g.len() {
            let dim: u64 = (0..ct_h.len()).map(|psi| r[psi][chi] * ct_h.degree(psi)).sum();
            prop_assert_eq!(dim, ct_g.degree(chi));
        }
        prop_assert!(all_subgroups(&g).contains(&sub));
    }

    #[test]
    fn tables_of_products(a in 1usize..=4, b in 1usize..=4, twist in any::<bool>()) {
        let x = FiniteGroup::cyclic(a).unwrap();
        let y = if twist { FiniteGroup::dihedral(b).unwrap() } else { FiniteGroup::cyclic(b).unwrap() };
        let g = FiniteGroup::direct_product(&x, &y);
        let t = character_table(&g).unwrap();
        prop_assert!(t.row_orthogonality_holds());
        prop_assert!(t.column_orthogonality_holds());
        prop_assert_eq!(t.degrees().iter().map(|d| d * d).sum::<u64>(), g.order() as u64);
        // degrees of a product are products of degrees
        let (tx, ty) = (character_table(&x).unwrap(), character_table(&y).unwrap());
        let mut expected: Vec<u64> = tx.degrees().iter().flat_map(|&p| ty.degrees().iter().map(move |&q| p * q)).collect();
        let mut got = t.degrees().to_vec();
        expected.sort_unstable();
        got.sort_unstable();
        prop_assert_eq!(got, expected);
    }
}
