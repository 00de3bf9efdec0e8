//! Brute-force reference implementations for cross-checking.
//!
//! Nothing here calls into the algorithms it is meant to check: graphs are
//! read through their public edge list into a private adjacency map, and
//! automata through [`Dfa::next`]. Everything is deliberately naive.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::constructions::Dfa;
use crate::graph::{Label, LabeledGraph, VertexId, Word};

/// Largest word length accepted by the enumerating oracles.
pub const MAX_LEN: usize = 14;

struct Adjacency {
    vertices: BTreeSet<VertexId>,
    labels: Vec<Label>,
    out: HashMap<(VertexId, Label), Vec<VertexId>>,
}

impl Adjacency {
    fn new(g: &LabeledGraph) -> Self {
        let mut out: HashMap<(VertexId, Label), Vec<VertexId>> = HashMap::new();
        let mut labels = BTreeSet::new();
        for e in g.edges() {
            labels.insert(e.label.clone());
            out.entry((e.src, e.label)).or_default().push(e.dst);
        }
        Adjacency {
            vertices: g.vertices().iter().cloned().collect(),
            labels: labels.into_iter().collect(),
            out,
        }
    }

    fn advance(&self, set: &BTreeSet<VertexId>, l: &Label) -> BTreeSet<VertexId> {
        let mut next = BTreeSet::new();
        for q in set {
            if let Some(ds) = self.out.get(&(q.clone(), l.clone())) {
                next.extend(ds.iter().cloned());
            }
        }
        next
    }

    fn eval(&self, set: &BTreeSet<VertexId>, w: &Word) -> BTreeSet<VertexId> {
        w.labels().iter().fold(set.clone(), |s, l| self.advance(&s, l))
    }
}

/// All words of length at most `max_len` (clamped to [`MAX_LEN`]) labeling
/// some path of `g`.
pub fn language_upto(g: &LabeledGraph, max_len: usize) -> BTreeSet<Word> {
    let adj = Adjacency::new(g);
    let mut out = BTreeSet::new();
    if adj.vertices.is_empty() {
        return out;
    }
    let mut layer = vec![(Word::empty(), adj.vertices.clone())];
    for depth in 0..=max_len.min(MAX_LEN) {
        let mut next = Vec::new();
        for (w, set) in layer {
            if depth < max_len.min(MAX_LEN) {
                for l in &adj.labels {
                    let s = adj.advance(&set, l);
                    if !s.is_empty() {
                        let mut w2 = w.clone();
                        w2.push(l.clone());
                        next.push((w2, s));
                    }
                }
            }
            out.insert(w);
        }
        layer = next;
    }
    out
}

/// Words of length at most `max_len` (clamped) labeling a path from `q`.
pub fn follower_words(g: &LabeledGraph, q: &VertexId, max_len: usize) -> BTreeSet<Word> {
    let adj = Adjacency::new(g);
    let mut out = BTreeSet::new();
    let mut stack = vec![(Word::empty(), BTreeSet::from([q.clone()]))];
    while let Some((w, set)) = stack.pop() {
        if w.len() < max_len.min(MAX_LEN) {
            for l in &adj.labels {
                let s = adj.advance(&set, l);
                if !s.is_empty() {
                    let mut w2 = w.clone();
                    w2.push(l.clone());
                    stack.push((w2, s));
                }
            }
        }
        out.insert(w);
    }
    out
}

/// Whether every word of length at most `max_len` in the language of `g` is
/// in the language of `h`. Explores words of `g` depth-first without storing them.
pub fn lang_subset_upto(g: &LabeledGraph, h: &LabeledGraph, max_len: usize) -> bool {
    let (ag, ah) = (Adjacency::new(g), Adjacency::new(h));
    if ag.vertices.is_empty() {
        return true;
    }
    if ah.vertices.is_empty() {
        return false;
    }
    let mut stack = vec![(0usize, ag.vertices.clone(), ah.vertices.clone())];
    while let Some((len, sg, sh)) = stack.pop() {
        if len == max_len.min(MAX_LEN) {
            continue;
        }
        for l in &ag.labels {
            let ng = ag.advance(&sg, l);
            if ng.is_empty() {
                continue;
            }
            let nh = ah.advance(&sh, l);
            if nh.is_empty() {
                return false;
            }
            stack.push((len + 1, ng, nh));
        }
    }
    true
}

/// Bounded language equality.
pub fn lang_equal_upto(g: &LabeledGraph, h: &LabeledGraph, max_len: usize) -> bool {
    lang_subset_upto(g, h, max_len) && lang_subset_upto(h, g, max_len)
}

fn shared_labels(dfas: &[Dfa]) -> Vec<Label> {
    dfas.first().map(|d| d.alphabet().to_vec()).unwrap_or_default()
}

/// Breadth-first search over tuples of DFA states for the shortest word
/// whose state tuple satisfies `goal`.
fn product_search(dfas: &[Dfa], goal: impl Fn(&[VertexId]) -> bool) -> Option<Word> {
    let labels = shared_labels(dfas);
    let start: Vec<VertexId> = dfas.iter().map(|d| d.start().clone()).collect();
    let mut prev: BTreeMap<Vec<VertexId>, Option<(Vec<VertexId>, Label)>> = BTreeMap::new();
    prev.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    while let Some(tuple) = queue.pop_front() {
        if goal(&tuple) {
            let mut word = Vec::new();
            let mut cur = tuple;
            while let Some(Some((p, l))) = prev.get(&cur) {
                word.push(l.clone());
                cur = p.clone();
            }
            word.reverse();
            return Some(Word::from_labels(word));
        }
        for l in &labels {
            let next: Vec<VertexId> = dfas
                .iter()
                .zip(&tuple)
                .map(|(d, q)| d.next(q, l).expect("complete automaton").clone())
                .collect();
            if !prev.contains_key(&next) {
                prev.insert(next.clone(), Some((tuple.clone(), l.clone())));
                queue.push_back(next);
            }
        }
    }
    None
}

/// A shortest word accepted by every DFA, if any.
pub fn dfa_intersection_shortest(dfas: &[Dfa]) -> Option<Word> {
    product_search(dfas, |t| dfas.iter().zip(t).all(|(d, q)| d.is_accepting(q)))
}

/// Whether every word is accepted by some DFA; otherwise a shortest word
/// rejected by all of them.
pub fn dfa_union_universal(dfas: &[Dfa]) -> (bool, Option<Word>) {
    match product_search(dfas, |t| dfas.iter().zip(t).all(|(d, q)| !d.is_accepting(q))) {
        Some(w) => (false, Some(w)),
        None => (true, None),
    }
}

/// The vertex `r` if `Q · w = {r}`.
pub fn is_word_synchronizing(g: &LabeledGraph, w: &Word) -> Option<VertexId> {
    let adj = Adjacency::new(g);
    let image = adj.eval(&adj.vertices, w);
    match image.len() {
        1 => image.into_iter().next(),
        _ => None,
    }
}

/// `Q · w` by edge scanning.
pub fn image_of_word(g: &LabeledGraph, w: &Word) -> BTreeSet<VertexId> {
    let adj = Adjacency::new(g);
    adj.eval(&adj.vertices, w)
}

/// Vertices `r` such that `{r}` is reachable from `Q` in the subset automaton.
pub fn singleton_reachable(g: &LabeledGraph) -> BTreeSet<VertexId> {
    let adj = Adjacency::new(g);
    let mut seen = BTreeSet::from([adj.vertices.clone()]);
    let mut stack = vec![adj.vertices.clone()];
    while let Some(set) = stack.pop() {
        for l in &adj.labels {
            let next = adj.advance(&set, l);
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    seen.into_iter()
        .filter(|s| s.len() == 1)
        .flat_map(|s| s.into_iter())
        .collect()
}

/// Length of a shortest synchronizing word, by value iteration of
/// `d(S) = 1 + min_a d(S · a)` over every subset of vertices.
///
/// # Panics
/// If `g` has more than 16 vertices.
pub fn shortest_sync_len(g: &LabeledGraph) -> Option<usize> {
    let adj = Adjacency::new(g);
    let vs: Vec<VertexId> = adj.vertices.iter().cloned().collect();
    let n = vs.len();
    assert!(n <= 16, "subset oracle is limited to 16 vertices");
    if n == 0 {
        return None;
    }
    let pos: HashMap<&VertexId, usize> = vs.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let masks: Vec<Vec<u32>> = adj
        .labels
        .iter()
        .map(|l| {
            (0..n)
                .map(|i| {
                    let img = adj.advance(&BTreeSet::from([vs[i].clone()]), l);
                    img.iter().fold(0u32, |m, v| m | 1 << pos[v])
                })
                .collect()
        })
        .collect();
    let full = (1u32 << n) - 1;
    let mut dist: Vec<Option<usize>> = (0..=full)
        .map(|s| (s.count_ones() == 1).then_some(0))
        .collect();
    loop {
        let mut changed = false;
        for s in 1..=full {
            for m in &masks {
                let t = (0..n).filter(|i| s >> i & 1 == 1).fold(0u32, |acc, i| acc | m[i]);
                if let Some(dt) = dist[t as usize] {
                    if dist[s as usize].is_none_or(|ds| dt + 1 < ds) {
                        dist[s as usize] = Some(dt + 1);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return dist[full as usize];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::family_mik;
    use crate::fixtures::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn words(ws: &[&str]) -> BTreeSet<Word> {
        ws.iter().map(|s| w(s)).collect()
    }

    #[test]
    fn language_examples() {
        assert_eq!(language_upto(&gm(), 2), words(&["", "0", "1", "0 0", "0 1", "1 0"]));
        assert_eq!(language_upto(&full1(), 1), words(&["", "0", "1"]));
        assert!(language_upto(&LabeledGraph::empty(), 3).is_empty());
    }

    #[test]
    fn bounded_comparisons() {
        assert!(lang_subset_upto(&gm(), &full1(), 12));
        assert!(lang_equal_upto(&fig1(), &h_fig1(), 12));
        assert!(!lang_subset_upto(&full1(), &gm(), 12));
    }

    #[test]
    fn dfa_products() {
        assert_eq!(dfa_intersection_shortest(&family_mik(3)).unwrap().len(), 8);
        let one = Dfa::from_strs(&["s", "t", "d"], "s", &["t"], &[
            ("s", "a", "t"), ("s", "b", "d"), ("t", "a", "d"), ("t", "b", "d"), ("d", "a", "d"), ("d", "b", "d"),
        ])
        .unwrap();
        let other = Dfa::from_strs(&["s", "t", "d"], "s", &["t"], &[
            ("s", "b", "t"), ("s", "a", "d"), ("t", "a", "d"), ("t", "b", "d"), ("d", "a", "d"), ("d", "b", "d"),
        ])
        .unwrap();
        assert_eq!(dfa_intersection_shortest(&[one, other]), None);
        let all = Dfa::from_strs(&["s"], "s", &["s"], &[("s", "a", "s")]).unwrap();
        assert_eq!(dfa_intersection_shortest(&[all.clone()]), Some(Word::empty()));
        assert_eq!(dfa_union_universal(&[all]), (true, None));
    }

    #[test]
    fn union_examples() {
        let eps = Dfa::from_strs(&["s", "d"], "s", &["s"], &[("s", "a", "d"), ("d", "a", "d")]).unwrap();
        assert_eq!(dfa_union_universal(&[eps]), (false, Some(w("a"))));
        let even = Dfa::from_strs(&["e", "o"], "e", &["e"], &[("e", "a", "o"), ("o", "a", "e")]).unwrap();
        let odd = Dfa::from_strs(&["e", "o"], "e", &["o"], &[("e", "a", "o"), ("o", "a", "e")]).unwrap();
        assert_eq!(dfa_union_universal(&[even, odd]), (true, None));
    }

    #[test]
    fn word_sync_examples() {
        assert_eq!(is_word_synchronizing(&fig1(), &w("1")), Some(VertexId::new("q2").unwrap()));
        assert_eq!(is_word_synchronizing(&fig1(), &w("0")), None);
        assert_eq!(is_word_synchronizing(&gm(), &Word::empty()), None);
    }

    #[test]
    fn subset_oracles() {
        assert_eq!(singleton_reachable(&fig1()).len(), 2);
        assert_eq!(shortest_sync_len(&gm()), Some(1));
        assert_eq!(shortest_sync_len(&p2()), None);
        assert_eq!(shortest_sync_len(&full1()), Some(0));
    }
}
