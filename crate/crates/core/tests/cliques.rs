mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use steiner_cliques::builtin::{
    main66_base_blocks, main66_development, representative_clique, BuiltinName, MAIN66_C1,
    MAIN66_C1_BLOCKS, MAIN66_C1_CORE, MAIN66_C2_BASE,
};
use steiner_cliques::clique::{
    census_report, classify_clique, clique_number, clique_support, core_restriction,
    enumerate_maximum_cliques, enumerate_maximum_cliques_with, point_multiplicity_profile,
    subdesign_test, Clique, CliqueClassification, CliqueError, SearchOptions,
};
use steiner_cliques::develop::Development;
use steiner_cliques::{
    build_block_graph, builtin_design, delsarte_bound, validate_2design, verify_srg, BlockGraph,
    Design,
};

fn translates(dev: &Development, base: usize) -> Clique {
    Clique::new((0..13).map(|e| dev.block_index(base, e).unwrap()).collect())
}

fn c1(dev: &Development, shift: u8) -> Clique {
    Clique::new(
        MAIN66_C1
            .iter()
            .map(|&(base, s)| dev.block_index(base, (s + shift) % 13).unwrap())
            .collect(),
    )
}

fn oracle_cliques(g: &BlockGraph) -> (usize, Vec<Vec<usize>>) {
    common::brute_force_maximum_cliques(g.v(), |a, b| g.adjacent(a, b))
}

fn as_lists(cliques: &[Clique]) -> Vec<Vec<usize>> {
    cliques.iter().map(|c| c.members().to_vec()).collect()
}

#[test]
fn published_c1_listing_matches_the_translates() {
    let dev = main66_development();
    let d = dev.design();
    let listed: Vec<usize> = MAIN66_C1_BLOCKS
        .iter()
        .map(|b| {
            let tokens: Vec<&str> = b.split_whitespace().collect();
            d.find_block_by_tokens(&tokens).unwrap().unwrap()
        })
        .collect();
    assert_eq!(Clique::new(listed), c1(&dev, 0));
}

#[test]
fn c1_is_a_non_canonical_maximum_clique_with_a_plane_core() {
    let dev = main66_development();
    let d = dev.design();
    let c = c1(&dev, 0);
    assert_eq!(c.len(), 13);
    assert_eq!(
        classify_clique(d, &c),
        Ok(CliqueClassification::NonCanonical)
    );
    assert_eq!(clique_support(d, &c).len(), 39);
    let core = core_restriction(d, &c);
    let mut tokens: Vec<&str> = core.core_points.iter().map(|&p| d.label(p)).collect();
    let mut listed: Vec<&str> = MAIN66_C1_CORE.split_whitespace().collect();
    tokens.sort();
    listed.sort();
    assert_eq!(tokens, listed);
    let params = core.restricted_params.unwrap();
    assert_eq!((params.n, params.m), (13, 4));
    assert!(core.extension_sizes.iter().all(|&e| e == 2));
    // The restricted blocks are a projective plane: any two meet in one point.
    let local: Vec<Vec<usize>> = core
        .restricted_blocks
        .iter()
        .map(|b| {
            b.iter()
                .map(|p| core.core_points.binary_search(p).unwrap())
                .collect()
        })
        .collect();
    assert!(common::is_steiner_system(13, &local));
    let verdict = subdesign_test(d, &c);
    assert_eq!(verdict.support_size, 39);
    assert!(!verdict.admissible());
    assert!(!verdict.candidate_params.unwrap().r_integral);
    assert!(!verdict.is_design);
}

#[test]
fn c2_translates_of_b8() {
    let dev = main66_development();
    let d = dev.design();
    let c = translates(&dev, MAIN66_C2_BASE);
    assert_eq!(
        classify_clique(d, &c),
        Ok(CliqueClassification::NonCanonical)
    );
    let profile = point_multiplicity_profile(d, &c);
    assert_eq!(profile.len(), 26);
    assert!(profile.values().all(|&k| k == 3));
    let verdict = subdesign_test(d, &c);
    assert_eq!(verdict.support_size, 26);
    assert!(!verdict.candidate_params.as_ref().unwrap().b_integral);
    assert!(!verdict.is_design);
}

#[test]
fn blocks_through_infinity_are_canonical() {
    let dev = main66_development();
    let d = dev.design();
    let infinity_base = main66_base_blocks()
        .iter()
        .position(|b| b.iter().any(|p| p.tag().is_none()))
        .unwrap();
    let c = translates(&dev, infinity_base);
    let inf = d.point_index("inf").unwrap();
    assert_eq!(
        classify_clique(d, &c),
        Ok(CliqueClassification::Canonical { witness: inf })
    );
    let profile = point_multiplicity_profile(d, &c);
    assert_eq!(profile[&inf], 13);
    assert!(profile
        .iter()
        .filter(|(&p, _)| p != inf)
        .all(|(_, &k)| k == 1));
    let core = core_restriction(d, &c);
    assert_eq!(core.core_points, vec![inf]);
    assert!(core.restricted_blocks.iter().all(|b| b == &vec![inf]));
    assert!(core.restricted_params.is_none());
}

#[test]
fn main66_census() {
    let dev = main66_development();
    let d = dev.design();
    let census = census_report(d, SearchOptions::default()).unwrap();
    assert_eq!(census.clique_number, 13);
    assert_eq!(
        (census.total(), census.canonical(), census.non_canonical()),
        (80, 66, 14)
    );
    let cliques = census.cliques();
    // All 13 translates of C1 and the B8 orbit are in the output.
    for e in 0..13 {
        assert!(cliques.contains(&c1(&dev, e)), "C1 shifted by {e}");
    }
    assert!(cliques.contains(&translates(&dev, MAIN66_C2_BASE)));
    let non_canonical: BTreeSet<Clique> = census
        .records
        .iter()
        .filter(|r| !r.classification.is_canonical())
        .map(|r| r.clique.clone())
        .collect();
    let mut expected: BTreeSet<Clique> = (0..13).map(|e| c1(&dev, e)).collect();
    expected.insert(translates(&dev, MAIN66_C2_BASE));
    assert_eq!(non_canonical, expected);
    assert!(census
        .records
        .iter()
        .filter(|r| !r.classification.is_canonical())
        .all(|r| !r.subdesign.is_design));
    // One canonical clique per point, each the star of its witness.
    let witnesses: BTreeSet<usize> = census
        .records
        .iter()
        .filter_map(|r| match r.classification {
            CliqueClassification::Canonical { witness } => Some(witness),
            CliqueClassification::NonCanonical => None,
        })
        .collect();
    assert_eq!(witnesses.len(), 66);
    let stars = d.point_blocks();
    for r in &census.records {
        if let CliqueClassification::Canonical { witness } = r.classification {
            assert_eq!(r.clique.members(), stars[witness].as_slice());
        }
    }
}

#[test]
fn appendix_censuses_and_representatives() {
    for name in [BuiltinName::AppendixA66, BuiltinName::AppendixB66] {
        let d = builtin_design(name);
        let census = census_report(&d, SearchOptions::default()).unwrap();
        assert_eq!(
            (census.canonical(), census.non_canonical()),
            (66, 14),
            "{name}"
        );
        let rep = representative_clique(name).unwrap();
        let members: Vec<usize> = rep
            .blocks
            .iter()
            .map(|b| {
                let tokens: Vec<String> = b.iter().map(u32::to_string).collect();
                d.find_block_by_tokens(&tokens).unwrap().unwrap()
            })
            .collect();
        let c = Clique::new(members);
        assert!(census.cliques().contains(&c), "{name}");
        let core = core_restriction(&d, &c);
        let mut labels: Vec<u32> = core
            .core_points
            .iter()
            .map(|&p| d.label(p).parse().unwrap())
            .collect();
        labels.sort();
        assert_eq!(labels, rep.core.to_vec(), "{name}");
        let params = core.restricted_params.unwrap();
        assert_eq!((params.n, params.m), (13, 4));
    }
}

#[test]
fn ag23_matches_brute_force() {
    let d = builtin_design(BuiltinName::Ag23);
    let g = build_block_graph(&d);
    let (omega, oracle) = oracle_cliques(&g);
    assert_eq!((omega, oracle.len()), (4, 81));
    assert_eq!(clique_number(&g), 4);
    let found = enumerate_maximum_cliques(&g);
    assert_eq!(as_lists(&found), oracle);
    let canonical = found
        .iter()
        .filter(|c| classify_clique(&d, c).unwrap().is_canonical())
        .count();
    assert_eq!(canonical, 9);
    let census = census_report(&d, SearchOptions::default()).unwrap();
    assert_eq!(
        (census.total(), census.canonical(), census.non_canonical()),
        (81, 9, 72)
    );
}

#[test]
fn complete_and_trivial_graphs() {
    let g = build_block_graph(&builtin_design(BuiltinName::Fano));
    assert_eq!(
        enumerate_maximum_cliques(&g),
        vec![Clique::new((0..7).collect())]
    );
    let single = BlockGraph::complete(1);
    assert_eq!(clique_number(&single), 1);
    assert_eq!(enumerate_maximum_cliques(&single).len(), 1);
}

#[test]
fn pg23_is_its_own_subdesign() {
    let d = builtin_design(BuiltinName::Pg23);
    let whole = Clique::new((0..13).collect());
    let verdict = subdesign_test(&d, &whole);
    assert_eq!(verdict.support_size, 13);
    assert!(verdict.is_design);
    let sub = d.sub_collection(whole.members()).unwrap();
    assert!(validate_2design(&sub).valid);
}

#[test]
fn bound_consistency_on_builtins() {
    for name in BuiltinName::ALL {
        let d = builtin_design(name);
        let g = build_block_graph(&d);
        let omega = clique_number(&g);
        let r = validate_2design(&d).params.unwrap().r_value().unwrap() as usize;
        if let Ok(srg) = verify_srg(&g) {
            let bound = delsarte_bound(&srg).unwrap() as usize;
            assert!(omega <= bound, "{name}");
            assert_eq!(omega, bound, "{name}");
        }
        if omega == r {
            let census = census_report(&d, SearchOptions::default()).unwrap();
            assert!(census.canonical() >= d.n().min(census.total()), "{name}");
            if !g.is_complete() {
                assert_eq!(census.canonical(), d.n(), "{name}");
            }
        }
    }
}

#[test]
fn classification_errors() {
    let d = builtin_design(BuiltinName::Main66);
    let disjoint = (1..d.b())
        .find(|&j| !common::blocks_meet(d.block(0), d.block(j)))
        .unwrap();
    assert_eq!(
        classify_clique(&d, &Clique::new(vec![0, disjoint])),
        Err(CliqueError::NotAClique { a: 0, b: disjoint })
    );
    assert_eq!(
        classify_clique(&d, &Clique::new(vec![])),
        Err(CliqueError::Empty)
    );
    assert!(classify_clique(&d, &Clique::new(vec![500])).is_err());
}

#[test]
fn worker_counts_do_not_change_the_output() {
    let g = build_block_graph(&builtin_design(BuiltinName::AppendixB66));
    let one = enumerate_maximum_cliques_with(&g, SearchOptions { workers: Some(1) });
    let four = enumerate_maximum_cliques_with(&g, SearchOptions { workers: Some(4) });
    assert_eq!(one, four);
    assert!(one.windows(2).all(|w| w[0] < w[1]));
}

fn main_graph() -> (Design, BlockGraph) {
    let d = builtin_design(BuiltinName::Main66);
    let g = build_block_graph(&d);
    (d, g)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn induced_subgraphs_match_brute_force(vs in prop::sample::subsequence((0..143).collect::<Vec<_>>(), 1..=20)) {
        let (_, g) = main_graph();
        let sub = g.induced_subgraph(&vs);
        let (omega, oracle) = oracle_cliques(&sub);
        prop_assert_eq!(clique_number(&sub), omega);
        prop_assert_eq!(as_lists(&enumerate_maximum_cliques(&sub)), oracle);
    }

    #[test]
    fn random_graphs_match_brute_force(
        v in 1usize..=16,
        density in 0.1f64..0.95,
        bits in prop::collection::vec(any::<u16>(), 120),
    ) {
        let threshold = (density * f64::from(u16::MAX)) as u16;
        let mut edges = Vec::new();
        let mut k = 0;
        for a in 0..v {
            for b in a + 1..v {
                if bits[k] < threshold {
                    edges.push((a, b));
                }
                k += 1;
            }
        }
        let g = BlockGraph::from_edges(v, &edges).unwrap();
        let (omega, oracle) = oracle_cliques(&g);
        prop_assert_eq!(clique_number(&g), omega);
        prop_assert_eq!(as_lists(&enumerate_maximum_cliques(&g)), oracle);
    }

    #[test]
    fn classification_dichotomy(index in 0usize..80) {
        let (d, _) = main_graph();
        let census = census_report(&d, SearchOptions::default()).unwrap();
        let r = &census.records[index];
        match r.classification {
            CliqueClassification::Canonical { witness } => {
                prop_assert!(r.clique.members().iter().all(|&b| d.block(b).contains(&witness)));
            }
            CliqueClassification::NonCanonical => {
                let common: Vec<usize> = (0..d.n())
                    .filter(|p| r.clique.members().iter().all(|&b| d.block(b).contains(p)))
                    .collect();
                prop_assert!(common.is_empty());
            }
        }
        if r.subdesign.is_design {
            let sub = d.sub_collection(r.clique.members()).unwrap();
            prop_assert!(validate_2design(&sub).valid);
        }
    }
}
