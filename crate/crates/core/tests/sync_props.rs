mod common;

use common::*;
use proptest::prelude::*;
use sofic::classify::{
    are_isomorphic, follower_separation, is_follower_separated, is_sft_sync, m_step_bound,
};
use sofic::exact::{action_monoid, action_of_word, decide_sft, decide_subshift, is_intrinsically_sync_relation, Caps};
use sofic::fixtures::*;
use sofic::oracle::{image_of_word, is_word_synchronizing, lang_equal_upto, lang_subset_upto, language_upto, singleton_reachable};
use sofic::sync::{is_synchronizing, pair_synchronizing_word, separating_word, sync_word_to_vertex, synchronizing_word_irreducible};
use sofic::{LabeledGraph, VertexId};

fn sync_presentation() -> impl Strategy<Value = LabeledGraph> {
    essential_graph(5, 3).prop_filter("synchronizing", |g| is_synchronizing(g).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn sync_word_exists_iff_singleton_reachable(g in irreducible_graph(6, 3)) {
        let found = synchronizing_word_irreducible(&g).unwrap();
        prop_assert_eq!(found.is_some(), !singleton_reachable(&g).is_empty());
        if let Some(x) = found {
            prop_assert!(is_word_synchronizing(&g, &x).is_some());
        }
    }

    #[test]
    fn pair_words_fall_in_one_case(g in irreducible_graph(5, 3)) {
        let synchronizable = !singleton_reachable(&g).is_empty();
        for p in g.vertices() {
            for q in g.vertices().iter().filter(|q| *q != p) {
                let found = pair_synchronizing_word(&g, p, q).unwrap();
                if synchronizable {
                    prop_assert!(found.is_some());
                }
                if let Some(x) = found {
                    let (a, b) = (g.step(p, &x).unwrap(), g.step(q, &x).unwrap());
                    let cases = [
                        a.is_some() && b.is_none(),
                        a.is_none() && b.is_some(),
                        a.is_some() && a == b,
                    ];
                    prop_assert_eq!(cases.iter().filter(|c| **c).count(), 1);
                }
            }
        }
    }

    #[test]
    fn separating_word_matches_containment(g in irreducible_graph(5, 3), h in essential_graph(5, 3)) {
        let sep = separating_word(&g, &h).unwrap();
        let exact = decide_subshift(&g, &h, &Caps::default()).unwrap();
        let bounded = lang_subset_upto(&g, &h, 12);
        prop_assert_eq!(sep.is_none(), exact && bounded);
        if exact {
            prop_assert!(bounded);
        }
        if let Some(x) = sep {
            prop_assert!(!image_of_word(&g, &x).is_empty());
            prop_assert!(image_of_word(&h, &x).is_empty());
        }
    }

    #[test]
    fn synchronizing_matches_per_vertex_definition(g in essential_graph(6, 3)) {
        let every = singleton_reachable(&g).len() == g.num_vertices();
        prop_assert_eq!(is_synchronizing(&g).unwrap(), every);
    }

    #[test]
    fn sync_to_vertex_reaches_it(g in sync_presentation()) {
        for r in g.vertices() {
            let x = sync_word_to_vertex(&g, r).unwrap();
            prop_assert_eq!(is_word_synchronizing(&g, &x), Some(r.clone()));
        }
    }

    #[test]
    fn follower_separation_preserves(g in essential_graph(5, 2)) {
        let f = follower_separation(&g).unwrap();
        prop_assert!(f.is_deterministic());
        prop_assert!(f.is_essential());
        prop_assert!(is_follower_separated(&f).unwrap());
        prop_assert_eq!(language_upto(&f, 12), language_upto(&g, 12));
        if is_synchronizing(&g).unwrap() {
            prop_assert!(is_synchronizing(&f).unwrap());
        }
    }

    #[test]
    fn isomorphism_implies_equal_languages(g in essential_graph(4, 2), h in essential_graph(4, 2), shift in 0usize..4) {
        let (g, h) = (follower_separation(&g).unwrap(), follower_separation(&h).unwrap());
        if let Some(map) = are_isomorphic(&g, &h).unwrap() {
            prop_assert_eq!(g.num_vertices(), h.num_vertices());
            prop_assert_eq!(map.len(), g.num_vertices());
            prop_assert!(lang_equal_upto(&g, &h, 12));
        }
        let n = g.num_vertices();
        let renamed = g.map_vertices(|q| {
            let i = g.vertex_index(q).unwrap();
            v(&format!("r{}", (i + shift) % n))
        }).unwrap();
        let map = are_isomorphic(&g, &renamed).unwrap().unwrap();
        for (a, b) in &map {
            let i = g.vertex_index(a).unwrap();
            prop_assert_eq!(b, &v(&format!("r{}", (i + shift) % n)));
        }
    }

    #[test]
    fn sft_tests_agree(g in sync_presentation()) {
        let f = follower_separation(&g).unwrap();
        prop_assert_eq!(is_sft_sync(&f).unwrap(), decide_sft(&f, &Caps::default()).unwrap());
        prop_assert_eq!(is_sft_sync(&g).unwrap(), decide_sft(&g, &Caps::default()).unwrap());
    }

    #[test]
    fn synchronizing_iff_intrinsically(g in sync_presentation()) {
        let f = follower_separation(&g).unwrap();
        let m = action_monoid(&f, 1 << 16).unwrap();
        for x in all_words(&f.alphabet(), 6) {
            let r = action_of_word(&f, &x).unwrap();
            if r.is_empty() {
                continue;
            }
            let sync = is_word_synchronizing(&f, &x).is_some();
            prop_assert_eq!(sync, is_intrinsically_sync_relation(&m, &r).unwrap(), "word {}", x);
        }
    }
}

#[test]
fn sync_to_vertex_length_is_bounded_on_fixtures() {
    for g in [gm(), ev(), full1(), h_fig1()] {
        let n = g.num_vertices();
        for r in g.vertices() {
            let x = sync_word_to_vertex(&g, r).unwrap();
            assert!(x.len() <= 4 * n * n * n);
            assert_eq!(is_word_synchronizing(&g, &x).as_ref(), Some(r));
        }
    }
}

#[test]
fn isomorphism_fails_on_the_figure_pair() {
    assert!(are_isomorphic(&fig1(), &h_fig1()).unwrap().is_none());
    assert!(lang_equal_upto(&fig1(), &h_fig1(), 12));
}

#[test]
fn long_words_of_sfts_are_intrinsically_synchronizing() {
    for g in [gm(), full1()] {
        let m = action_monoid(&g, 1 << 10).unwrap();
        let bound = m_step_bound(&g).unwrap();
        assert!(bound <= 6);
        for x in all_words(&g.alphabet(), bound) {
            if x.len() != bound {
                continue;
            }
            let r = action_of_word(&g, &x).unwrap();
            if !r.is_empty() {
                assert!(is_intrinsically_sync_relation(&m, &r).unwrap(), "word {x}");
            }
        }
    }
}

#[test]
fn every_vertex_of_a_fixture_has_a_word() {
    let g = h_fig1();
    let targets: Vec<VertexId> = g.vertices().to_vec();
    for r in &targets {
        assert!(sync_word_to_vertex(&g, r).is_ok());
    }
}
