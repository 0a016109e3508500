mod common;

use proptest::prelude::*;

use steiner_cliques::builtin::BuiltinName;
use steiner_cliques::srg::{Degeneracy, SrgError};
use steiner_cliques::{
    build_block_graph, builtin_design, delsarte_bound, srg_from_design_params, validate_2design,
    verify_srg, Design,
};

fn non_symmetric() -> [BuiltinName; 4] {
    [
        BuiltinName::Main66,
        BuiltinName::AppendixA66,
        BuiltinName::AppendixB66,
        BuiltinName::Ag23,
    ]
}

#[test]
fn main66_block_graph() {
    let d = builtin_design(BuiltinName::Main66);
    let g = build_block_graph(&d);
    assert_eq!(g.v(), 143);
    assert!((0..143).all(|a| g.degree(a) == 72));
    let srg = verify_srg(&g).unwrap();
    assert_eq!(
        (srg.v, srg.k, srg.lambda, srg.mu, srg.s_eig),
        (143, 72, 36, 36, -6)
    );
    assert_eq!(delsarte_bound(&srg), Some(13));
}

#[test]
fn srg_agrees_with_brute_force_and_closed_form() {
    for name in non_symmetric() {
        let d = builtin_design(name);
        let g = build_block_graph(&d);
        let oracle =
            common::brute_force_srg(g.v(), |a, b| common::blocks_meet(d.block(a), d.block(b)))
                .unwrap();
        let srg = verify_srg(&g).unwrap();
        assert_eq!(
            (
                srg.v as usize,
                srg.k as usize,
                srg.lambda as usize,
                srg.mu as usize
            ),
            oracle,
            "{name}"
        );
        assert_eq!(
            srg_from_design_params(d.n() as u64, d.m() as u64).unwrap(),
            srg,
            "{name}"
        );
        assert_eq!(srg.s_eig, -(d.m() as i64), "{name}");
        let r = validate_2design(&d).params.unwrap().r_value().unwrap();
        assert_eq!(delsarte_bound(&srg), Some(r), "{name}");
    }
}

#[test]
fn ag23_block_graph() {
    let g = build_block_graph(&builtin_design(BuiltinName::Ag23));
    let srg = verify_srg(&g).unwrap();
    assert_eq!(
        (srg.v, srg.k, srg.lambda, srg.mu, srg.s_eig),
        (12, 9, 6, 9, -3)
    );
    assert_eq!(delsarte_bound(&srg), Some(4));
    assert_eq!(srg_from_design_params(9, 3).unwrap(), srg);
}

#[test]
fn symmetric_designs_are_degenerate() {
    for name in [BuiltinName::Fano, BuiltinName::Pg23] {
        let g = build_block_graph(&builtin_design(name));
        assert!(g.is_complete());
        assert_eq!(
            verify_srg(&g),
            Err(SrgError::Degenerate(Degeneracy::Complete))
        );
    }
    assert!(matches!(
        srg_from_design_params(7, 3),
        Err(SrgError::Symmetric { .. })
    ));
    assert!(matches!(
        srg_from_design_params(39, 6),
        Err(SrgError::Inadmissible { .. })
    ));
}

#[test]
fn single_block_graph() {
    let d = Design::new(
        vec!["a".into(), "b".into(), "c".into()],
        vec![vec![0, 1, 2]],
    )
    .unwrap();
    let g = build_block_graph(&d);
    assert_eq!((g.v(), g.edge_count()), (1, 0));
    assert_eq!(
        verify_srg(&g),
        Err(SrgError::Degenerate(Degeneracy::TooSmall))
    );
}

#[test]
fn flipping_one_edge_breaks_regularity() {
    let g = build_block_graph(&builtin_design(BuiltinName::Main66));
    let broken = g.with_toggled_edge(0, 1);
    assert!(verify_srg(&broken).is_err());
}

#[test]
fn exports_are_canonical() {
    let g = build_block_graph(&builtin_design(BuiltinName::Ag23));
    let edges = g.edge_list_text();
    assert_eq!(edges.lines().count(), g.edge_count());
    let matrix = g.upper_triangular_text();
    let ones: usize = matrix.chars().filter(|&c| c == '1').count();
    assert_eq!(ones, g.edge_count());
}

proptest! {
    #[test]
    fn adjacency_is_symmetric_and_irreflexive(a in 0usize..143, b in 0usize..143) {
        let d = builtin_design(BuiltinName::Main66);
        let g = build_block_graph(&d);
        prop_assert!(!g.adjacent(a, a));
        prop_assert_eq!(g.adjacent(a, b), g.adjacent(b, a));
        if a != b {
            prop_assert_eq!(g.adjacent(a, b), common::blocks_meet(d.block(a), d.block(b)));
        }
    }

    #[test]
    fn handshake_on_induced_subgraphs(vs in prop::sample::subsequence((0..143).collect::<Vec<_>>(), 0..40)) {
        let g = build_block_graph(&builtin_design(BuiltinName::Main66)).induced_subgraph(&vs);
        let degrees: usize = (0..g.v()).map(|a| g.degree(a)).sum();
        prop_assert_eq!(degrees, 2 * g.edge_count());
    }

    #[test]
    fn eigenvalue_identities(m in 2u64..9, r in 2u64..40) {
        // n = 1 + r(m-1) makes r integral; b may still fail.
        let n = 1 + r * (m - 1);
        if let Ok(p) = srg_from_design_params(n, m) {
            prop_assert_eq!(p.r_eig * p.s_eig, p.mu - p.k);
            prop_assert_eq!(p.r_eig + p.s_eig, p.lambda - p.mu);
            prop_assert_eq!(p.k * (p.k - p.lambda - 1), (p.v - p.k - 1) * p.mu);
            prop_assert_eq!(p.s_eig, -(m as i64));
            prop_assert_eq!(delsarte_bound(&p), Some(r));
        }
    }
}
