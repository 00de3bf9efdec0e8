#![allow(dead_code)]

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::Rng;
use sofic::constructions::Dfa;
use sofic::{Edge, Label, LabeledGraph, VertexId, Word};

pub fn v(s: &str) -> VertexId {
    VertexId::new(s).unwrap()
}

pub fn l(s: &str) -> Label {
    Label::new(s).unwrap()
}

pub fn w(s: &str) -> Word {
    Word::parse(s).unwrap()
}

const LABELS: [&str; 3] = ["a", "b", "c"];

/// A deterministic graph on `targets.len() / m` vertices; slot `q * m + a`
/// holds the `a`-successor of `q`, if any.
pub fn det_from_slots(m: usize, targets: &[Option<usize>]) -> LabeledGraph {
    let n = targets.len() / m;
    let vertices: Vec<VertexId> = (0..n).map(|i| v(&format!("q{i}"))).collect();
    let edges = targets.iter().enumerate().filter_map(|(k, t)| {
        t.map(|d| Edge {
            src: vertices[k / m].clone(),
            label: l(LABELS[k % m]),
            dst: vertices[d].clone(),
        })
    });
    LabeledGraph::new(vertices.clone(), edges).unwrap()
}

pub fn random_det(rng: &mut StdRng, max_n: usize, max_m: usize, density: f64) -> LabeledGraph {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(1..=max_m);
    let slots: Vec<Option<usize>> = (0..n * m)
        .map(|_| rng.gen_bool(density).then(|| rng.gen_range(0..n)))
        .collect();
    det_from_slots(m, &slots)
}

pub fn random_essential(rng: &mut StdRng, max_n: usize, max_m: usize) -> LabeledGraph {
    loop {
        let g = random_det(rng, max_n, max_m, 0.7).essentialize();
        if !g.is_empty() {
            return g;
        }
    }
}

pub fn random_irreducible(rng: &mut StdRng, max_n: usize, max_m: usize) -> LabeledGraph {
    loop {
        let g = random_det(rng, max_n, max_m, 0.75);
        if g.is_irreducible() && g.is_essential() {
            return g;
        }
    }
}

/// A DFA over `{a, b}` with at most `max_states` states.
pub fn random_dfa(rng: &mut StdRng, max_states: usize) -> Dfa {
    let n = rng.gen_range(1..=max_states);
    let names: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
    let mut edges = Vec::new();
    for q in &names {
        for a in ["a", "b"] {
            edges.push((q.clone(), a, names[rng.gen_range(0..n)].clone()));
        }
    }
    let accepting: Vec<&str> = names.iter().filter(|_| rng.gen_bool(0.5)).map(String::as_str).collect();
    let states: Vec<&str> = names.iter().map(String::as_str).collect();
    let edges: Vec<(&str, &str, &str)> = edges.iter().map(|(s, a, d)| (s.as_str(), *a, d.as_str())).collect();
    Dfa::from_strs(&states, "s0", &accepting, &edges).unwrap()
}

/// Every word over `alphabet` of length at most `max_len`, shortest first.
pub fn all_words(alphabet: &[Label], max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for u in &layer {
            for a in alphabet {
                let mut x = u.clone();
                x.push(a.clone());
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn det_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = LabeledGraph> {
    (1..=max_n, 1..=max_m).prop_flat_map(|(n, m)| {
        proptest::collection::vec(proptest::option::weighted(0.7, 0..n), n * m)
            .prop_map(move |slots| det_from_slots(m, &slots))
    })
}

pub fn essential_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = LabeledGraph> {
    det_graph(max_n, max_m)
        .prop_map(|g| g.essentialize())
        .prop_filter("nonempty", |g| !g.is_empty())
}

pub fn irreducible_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = LabeledGraph> {
    (1..=max_n, 1..=max_m).prop_flat_map(|(n, m)| {
        proptest::collection::vec(proptest::option::weighted(0.8, 0..n), n * m)
            .prop_map(move |slots| det_from_slots(m, &slots))
            .prop_filter("irreducible and essential", |g| g.is_irreducible() && g.is_essential())
    })
}

pub fn word(max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(0..LABELS.len(), 0..=max_len)
        .prop_map(|xs| Word::from_labels(xs.into_iter().map(|x| l(LABELS[x])).collect()))
}
