mod common;

use std::collections::HashSet;

use common::*;
use proptest::prelude::*;
use sofic::classify::follower_separation;
use sofic::exact::*;
use sofic::oracle::{lang_subset_upto, language_upto, shortest_sync_len};
use sofic::sync::is_synchronizing;
use sofic::LabeledGraph;

fn caps() -> Caps {
    Caps::default()
}

/// Intrinsic synchronization straight from the definition, over all pairs
/// of monoid elements.
fn intrinsic_by_pairs(m: &ActionMonoid, r: &ActionRelation) -> bool {
    m.elements().iter().all(|s| {
        m.elements().iter().all(|t| {
            let sr = compose(s, r).unwrap();
            let rt = compose(r, t).unwrap();
            sr.is_empty() || rt.is_empty() || !compose(&sr, t).unwrap().is_empty()
        })
    })
}

/// Actions of all words, by length, until a length adds nothing new.
fn actions_until_stable(g: &LabeledGraph, max_len: usize) -> Option<HashSet<ActionRelation>> {
    let alphabet = g.alphabet();
    let mut seen: HashSet<ActionRelation> = HashSet::new();
    for len in 0..=max_len {
        let before = seen.len();
        for x in all_words(&alphabet, len).into_iter().filter(|x| x.len() == len) {
            seen.insert(action_of_word(g, &x).unwrap());
        }
        if len > 0 && seen.len() == before {
            return Some(seen);
        }
    }
    None
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn morphism_law(g in det_graph(5, 3), u in word(4), x in word(4)) {
        let uv = action_of_word(&g, &u.concat(&x)).unwrap();
        let composed = compose(&action_of_word(&g, &u).unwrap(), &action_of_word(&g, &x).unwrap()).unwrap();
        prop_assert_eq!(&uv, &composed);
        let id = ActionRelation::identity(&g);
        prop_assert_eq!(&compose(&id, &uv).unwrap(), &uv);
        prop_assert_eq!(&compose(&uv, &id).unwrap(), &uv);
    }

    #[test]
    fn nonempty_action_iff_in_language(g in essential_graph(5, 2)) {
        let lang = language_upto(&g, 8);
        for x in all_words(&g.alphabet(), 8) {
            prop_assert_eq!(!action_of_word(&g, &x).unwrap().is_empty(), lang.contains(&x));
        }
    }

    #[test]
    fn monoid_is_every_action(g in det_graph(4, 2)) {
        let m = action_monoid(&g, 1 << 16).unwrap();
        if let Some(brute) = actions_until_stable(&g, 12) {
            let ours: HashSet<ActionRelation> = m.elements().iter().cloned().collect();
            prop_assert_eq!(ours, brute);
        }
        for r in m.elements() {
            prop_assert_eq!(&action_of_word(&g, &m.witness(r).unwrap()).unwrap(), r);
        }
    }

    #[test]
    fn intrinsic_scan_matches_definition(g in essential_graph(4, 2)) {
        let m = action_monoid(&g, 1 << 16).unwrap();
        for r in m.elements() {
            prop_assert_eq!(is_intrinsically_sync_relation(&m, r).unwrap(), intrinsic_by_pairs(&m, r));
            let preceded = m.elements().iter().any(|s| intrinsic_by_pairs(&m, s) && !compose(s, r).unwrap().is_empty());
            prop_assert_eq!(preceded_by_intrinsic_sync(&m, r).unwrap(), preceded);
        }
    }

    #[test]
    fn shortest_sync_word_is_shortest(g in essential_graph(6, 3)) {
        let found = shortest_sync_word(&g, &caps()).unwrap();
        prop_assert_eq!(found.as_ref().map(|x| x.len()), shortest_sync_len(&g));
        if let Some(x) = found {
            prop_assert_eq!(g.subset_step(&g.all_vertices(), &x).unwrap().len(), 1);
        }
        let expected: std::collections::BTreeSet<_> = sofic::oracle::singleton_reachable(&g);
        prop_assert_eq!(synchronizing_vertices(&g, &caps()).unwrap(), expected);
    }

    #[test]
    fn irreducible_shifts_have_sync_presentations(g in irreducible_graph(5, 2)) {
        prop_assert!(decide_sdp_exists(&g, &caps()).unwrap());
        prop_assert!(decide_irreducibility(&g, &caps()).unwrap());
    }

    #[test]
    fn minimal_size_is_the_follower_separation(g in irreducible_graph(4, 2)) {
        prop_assume!(is_synchronizing(&g).unwrap());
        let k = follower_separation(&g).unwrap().num_vertices();
        prop_assert!(decide_minimality(&g, k, &caps()).unwrap());
        if k > 1 {
            prop_assert!(!decide_minimality(&g, k - 1, &caps()).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn containment_agrees_with_bounded_check(g in essential_graph(5, 2), h in essential_graph(5, 2)) {
        check_containment(&g, &h, 12)?;
    }

    #[test]
    fn containment_agrees_on_three_labels(g in essential_graph(5, 3), h in essential_graph(5, 3)) {
        check_containment(&g, &h, 8)?;
    }
}

fn check_containment(g: &LabeledGraph, h: &LabeledGraph, len: usize) -> Result<(), TestCaseError> {
    let sub = decide_subshift(g, h, &caps()).unwrap();
    let witness = subshift_witness(g, h, &caps()).unwrap();
    prop_assert_eq!(sub, witness.is_none());
    if sub {
        prop_assert!(lang_subset_upto(g, h, len));
    }
    if let Some(x) = witness {
        prop_assert!(!action_of_word(g, &x).unwrap().is_empty());
        prop_assert!(action_of_word(h, &x).unwrap().is_empty());
        if x.len() <= len {
            prop_assert!(!lang_subset_upto(g, h, len));
        }
    }
    let eq = decide_equality(g, h, &caps()).unwrap();
    prop_assert_eq!(eq, sub && decide_subshift(h, g, &caps()).unwrap());
    if eq {
        prop_assert!(sofic::oracle::lang_equal_upto(g, h, len));
    }
    Ok(())
}
