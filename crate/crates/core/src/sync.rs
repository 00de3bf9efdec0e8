//! Polynomial-time procedures on deterministic graphs: synchronizing words for
//! irreducible graphs, separating words, recognition of synchronizing
//! presentations and words that synchronize to a chosen vertex.
//!
//! Wherever a procedure may pick "any" vertex it picks the smallest one, and
//! every sub-search is a breadth-first search, so results are reproducible and
//! each sub-word is a shortest one.

use crate::auxgraph::{bfs_word, product, sink_completion, Product, SinkGraph};
use crate::error::{Error, Result};
use crate::graph::{Label, LabeledGraph, VertexId, Word};

fn step_indices(g: &LabeledGraph, set: &[usize], w: &Word) -> Vec<usize> {
    let mut cur = set.to_vec();
    for l in w.labels() {
        let mut next: Vec<usize> = cur.iter().filter_map(|&q| g.successor(q, l)).collect();
        next.sort_unstable();
        next.dedup();
        cur = next;
    }
    cur
}

fn step_index(g: &LabeledGraph, q: usize, w: &Word) -> Option<usize> {
    w.labels().iter().try_fold(q, |cur, l| g.successor(cur, l))
}

/// The product of the sink-vertex graph of `g` with itself, prepared for
/// repeated pair searches.
struct PairSearch {
    sink: SinkGraph,
    product: Product,
    // index in the sink graph of each vertex of `g`
    embed: Vec<usize>,
}

impl PairSearch {
    fn new(g: &LabeledGraph) -> Result<Self> {
        let sink = sink_completion(g, &g.alphabet())?;
        let product = product(&sink.graph, &sink.graph);
        let embed = g
            .vertices()
            .iter()
            .map(|v| sink.graph.vertex_index(v).expect("sink graph keeps vertices"))
            .collect();
        Ok(PairSearch { sink, product, embed })
    }

    fn word(&self, p: usize, q: usize) -> Option<Word> {
        let n0 = self.sink.graph.num_vertices();
        let z = self.sink.sink;
        let start = self.product.index(n0, self.embed[p], self.embed[q]);
        let pairs = &self.product.pairs;
        bfs_word(&self.product.graph, &[start], |k| {
            let (a, b) = pairs[k];
            (a == z) != (b == z) || (a == b && a != z)
        })
        .map(|(w, _)| w)
    }
}

/// A shortest word `w` with `|{p, q} · w| = 1`, if one exists.
pub fn pair_synchronizing_word(g: &LabeledGraph, p: &VertexId, q: &VertexId) -> Result<Option<Word>> {
    g.require_deterministic()?;
    let (pi, qi) = (g.index_of(p)?, g.index_of(q)?);
    if pi == qi {
        return Err(Error::SameVertex);
    }
    Ok(PairSearch::new(g)?.word(pi, qi))
}

/// A synchronizing word for an irreducible deterministic graph, built by
/// repeatedly merging the two smallest vertices of the current image.
/// Returns `None` iff the graph has no synchronizing word.
pub fn synchronizing_word_irreducible(g: &LabeledGraph) -> Result<Option<Word>> {
    g.require_deterministic()?;
    if !g.is_irreducible() {
        return Err(Error::NotIrreducible);
    }
    let search = PairSearch::new(g)?;
    let mut x: Vec<usize> = (0..g.num_vertices()).collect();
    let mut u = Word::empty();
    while x.len() > 1 {
        let Some(w) = search.word(x[0], x[1]) else {
            return Ok(None);
        };
        x = step_indices(g, &x, &w);
        u = u.concat(&w);
    }
    Ok(Some(u))
}

/// Separating word search; also returns `p0 · u` where `p0` is the smallest
/// vertex of `g`.
fn separate(g: &LabeledGraph, h: &LabeledGraph) -> Result<Option<(Word, usize)>> {
    g.require_deterministic()?;
    h.require_deterministic()?;
    if !g.is_irreducible() {
        return Err(Error::NotIrreducible);
    }
    let mut gamma: Vec<Label> = g.alphabet();
    gamma.extend(h.alphabet());
    let h0 = sink_completion(h, &gamma)?;
    let prod = product(g, &h0.graph);
    let n0 = h0.graph.num_vertices();
    let embed: Vec<usize> = h
        .vertices()
        .iter()
        .map(|v| h0.graph.vertex_index(v).expect("sink graph keeps vertices"))
        .collect();
    let mut p = 0;
    let mut x: Vec<usize> = (0..h.num_vertices()).collect();
    let mut u = Word::empty();
    while let Some(&q) = x.first() {
        let start = prod.index(n0, p, embed[q]);
        let found = bfs_word(&prod.graph, &[start], |k| prod.pairs[k].1 == h0.sink);
        let Some((w, end)) = found else {
            return Ok(None);
        };
        p = prod.pairs[end].0;
        x = step_indices(h, &x, &w);
        u = u.concat(&w);
    }
    Ok(Some((u, p)))
}

/// A word `w` with `Q_g · w ≠ ∅` and `Q_h · w = ∅`, if one exists.
///
/// `g` must be irreducible; `h` may be empty or nonessential. For essential
/// inputs, `None` means the shift of `g` is contained in the shift of `h`.
pub fn separating_word(g: &LabeledGraph, h: &LabeledGraph) -> Result<Option<Word>> {
    Ok(separate(g, h)?.map(|(w, _)| w))
}

/// Per initial component: its members, a synchronizing word for it, and a
/// separating word from the rest of the graph with its endpoint.
struct ComponentWitness {
    members: Vec<usize>,
    sync: Word,
    separator: Word,
    // endpoint (in the induced subgraph) of the separator from its smallest vertex
    separator_end: usize,
    sub: LabeledGraph,
}

fn component_witness(g: &LabeledGraph, members: Vec<usize>) -> Result<Option<ComponentWitness>> {
    let mut inside = vec![false; g.num_vertices()];
    for &q in &members {
        inside[q] = true;
    }
    let outside: Vec<bool> = inside.iter().map(|b| !b).collect();
    let sub = g.induced_by_mask(&inside);
    let rest = g.induced_by_mask(&outside);
    let Some(sync) = synchronizing_word_irreducible(&sub)? else {
        return Ok(None);
    };
    let Some((separator, separator_end)) = separate(&sub, &rest)? else {
        return Ok(None);
    };
    Ok(Some(ComponentWitness {
        members,
        sync,
        separator,
        separator_end,
        sub,
    }))
}

fn initial_components(g: &LabeledGraph) -> Vec<Vec<usize>> {
    let (comp, count) = g.scc_indices();
    let mut initial = vec![true; count];
    for (s, _, d) in g.indexed_edges() {
        if comp[*s] != comp[*d] {
            initial[comp[*d]] = false;
        }
    }
    let mut members = vec![Vec::new(); count];
    for (q, &c) in comp.iter().enumerate() {
        members[c].push(q);
    }
    members
        .into_iter()
        .enumerate()
        .filter(|(c, _)| initial[*c])
        .map(|(_, m)| m)
        .collect()
}

/// True iff every vertex of `g` is synchronizing, decided component by
/// component: each initial irreducible component must have a synchronizing
/// word and be separable from the rest of the graph. The empty graph is
/// synchronizing.
pub fn is_synchronizing(g: &LabeledGraph) -> Result<bool> {
    g.require_deterministic()?;
    for members in initial_components(g) {
        if component_witness(g, members)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A word `w` with `Q · w = {r}` for a synchronizing graph.
///
/// The word is `u x w y`: `u` synchronizes an initial component `C` from which
/// `r` is reachable, `x` leads to the smallest vertex of `C`, `w` separates `C`
/// from the rest of the graph, and `y` leads on to `r`.
pub fn sync_word_to_vertex(g: &LabeledGraph, r: &VertexId) -> Result<Word> {
    g.require_deterministic()?;
    let ri = g.index_of(r)?;
    if !is_synchronizing(g)? {
        return Err(Error::NotSynchronizing);
    }
    let members = initial_components(g)
        .into_iter()
        .find(|m| g.reachable_from(&m[..1])[ri])
        .expect("every vertex is reachable from an initial component");
    let c = component_witness(g, members)?.ok_or(Error::NotSynchronizing)?;
    let all: Vec<usize> = (0..c.sub.num_vertices()).collect();
    let p = step_indices(&c.sub, &all, &c.sync)[0];
    let (x, _) = bfs_word(&c.sub, &[p], |k| k == 0).expect("component is strongly connected");
    debug_assert_eq!(step_index(&c.sub, 0, &c.separator), Some(c.separator_end));
    let end = c.members[c.separator_end];
    let (y, _) = bfs_word(g, &[end], |k| k == ri).expect("r is reachable from the component");
    Ok(c.sync.concat(&x).concat(&c.separator).concat(&y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::graph::SubsetState;

    fn v(s: &str) -> VertexId {
        VertexId::new(s).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn image(g: &LabeledGraph, word: &Word) -> SubsetState {
        g.subset_step(&g.all_vertices(), word).unwrap()
    }

    #[test]
    fn pair_sync_examples() {
        assert_eq!(pair_synchronizing_word(&gm(), &v("A"), &v("B")).unwrap(), Some(w("0")));
        assert_eq!(pair_synchronizing_word(&p2(), &v("A"), &v("B")).unwrap(), None);
        assert_eq!(pair_synchronizing_word(&fig1(), &v("q1"), &v("q3")).unwrap(), Some(w("1")));
        assert_eq!(pair_synchronizing_word(&gm(), &v("A"), &v("A")), Err(Error::SameVertex));
    }

    #[test]
    fn sync_word_examples() {
        assert_eq!(synchronizing_word_irreducible(&full1()).unwrap(), Some(Word::empty()));
        let u = synchronizing_word_irreducible(&gm()).unwrap().unwrap();
        assert_eq!(image(&gm(), &u).len(), 1);
        assert_eq!(synchronizing_word_irreducible(&p2()).unwrap(), None);
        assert_eq!(synchronizing_word_irreducible(&fig1()), Err(Error::NotIrreducible));
        assert_eq!(synchronizing_word_irreducible(&LabeledGraph::empty()), Err(Error::NotIrreducible));
    }

    #[test]
    fn separating_examples() {
        assert_eq!(separating_word(&gm(), &full1()).unwrap(), None);
        let s = separating_word(&full1(), &gm()).unwrap().unwrap();
        assert_eq!(s, w("1 1"));
        assert_eq!(separating_word(&h_fig1(), &fig1()).unwrap(), None);
        assert_eq!(separating_word(&gm(), &LabeledGraph::empty()).unwrap(), Some(Word::empty()));
        assert_eq!(separating_word(&fig1(), &gm()), Err(Error::NotIrreducible));
    }

    #[test]
    fn synchronizing_examples() {
        assert!(is_synchronizing(&h_fig1()).unwrap());
        assert!(!is_synchronizing(&fig1()).unwrap());
        assert!(is_synchronizing(&gm()).unwrap());
        assert!(!is_synchronizing(&p2()).unwrap());
        assert!(is_synchronizing(&LabeledGraph::empty()).unwrap());
    }

    #[test]
    fn sync_to_vertex_examples() {
        let x = sync_word_to_vertex(&h_fig1(), &v("q3")).unwrap();
        assert_eq!(image(&h_fig1(), &x), SubsetState::new([v("q3")]));
        assert_eq!(sync_word_to_vertex(&full1(), &v("v")).unwrap(), Word::empty());
        let x = sync_word_to_vertex(&gm(), &v("B")).unwrap();
        assert_eq!(image(&gm(), &x), SubsetState::new([v("B")]));
        assert_eq!(sync_word_to_vertex(&fig1(), &v("q2")), Err(Error::NotSynchronizing));
        assert!(matches!(sync_word_to_vertex(&gm(), &v("Z")), Err(Error::UnknownVertex(_))));
    }
}
