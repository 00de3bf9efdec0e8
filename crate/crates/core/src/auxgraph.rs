//! Auxiliary graphs: sink-vertex completion, label products, the hat graph,
//! and shortest-word path search.
//!
//! Product vertices are named `(p|q)`; the sink vertex is named `0`, or `0'`,
//! `0''`, ... when `0` is already a vertex of the input.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{fresh_name, pair_name, Label, LabeledGraph, VertexId, Word};

/// A sink-completed graph together with the index of its sink vertex.
pub(crate) struct SinkGraph {
    pub graph: LabeledGraph,
    pub sink: usize,
}

/// A label product together with the operand indices of each vertex.
pub(crate) struct Product {
    pub graph: LabeledGraph,
    pub pairs: Vec<(usize, usize)>,
    // rank[i * nh + j] is the vertex index of (i, j)
    rank: Vec<usize>,
}

impl Product {
    pub fn index(&self, nh: usize, i: usize, j: usize) -> usize {
        self.rank[i * nh + j]
    }
}

pub(crate) fn sink_completion(g: &LabeledGraph, gamma: &[Label]) -> Result<SinkGraph> {
    g.require_deterministic()?;
    let mut gamma = gamma.to_vec();
    gamma.sort();
    gamma.dedup();
    if g.alphabet().iter().any(|l| gamma.binary_search(l).is_err()) {
        return Err(Error::AlphabetMismatch);
    }
    let sink_name = fresh_name(g, "0");
    let n = g.num_vertices();
    let mut names: Vec<VertexId> = g.vertices().to_vec();
    names.push(sink_name.clone());
    let mut edges: Vec<(usize, Label, usize)> = g.indexed_edges().to_vec();
    for q in 0..=n {
        for l in &gamma {
            if q == n || g.successor(q, l).is_none() {
                edges.push((q, l.clone(), n));
            }
        }
    }
    let graph = LabeledGraph::from_unsorted(names, edges);
    let sink = graph.vertex_index(&sink_name).expect("sink was added");
    Ok(SinkGraph { graph, sink })
}

/// The sink-vertex graph of `g` over `gamma`: a fresh sink absorbs every
/// missing transition, so the result is fully deterministic over `gamma`.
pub fn sink_vertex_graph(g: &LabeledGraph, gamma: &[Label]) -> Result<LabeledGraph> {
    Ok(sink_completion(g, gamma)?.graph)
}

pub(crate) fn product(g: &LabeledGraph, h: &LabeledGraph) -> Product {
    let (ng, nh) = (g.num_vertices(), h.num_vertices());
    let mut names = Vec::with_capacity(ng * nh);
    for p in g.vertices() {
        for q in h.vertices() {
            names.push(pair_name(p, q));
        }
    }
    let mut edges = Vec::new();
    for i in 0..ng {
        let ge = g.out_edges(i);
        for j in 0..nh {
            let he = h.out_edges(j);
            let (mut a, mut b) = (0, 0);
            while a < ge.len() && b < he.len() {
                match ge[a].1.cmp(&he[b].1) {
                    std::cmp::Ordering::Less => a += 1,
                    std::cmp::Ordering::Greater => b += 1,
                    std::cmp::Ordering::Equal => {
                        let l = &ge[a].1;
                        let a_end = a + ge[a..].iter().take_while(|e| &e.1 == l).count();
                        let b_end = b + he[b..].iter().take_while(|e| &e.1 == l).count();
                        for x in &ge[a..a_end] {
                            for y in &he[b..b_end] {
                                edges.push((i * nh + j, l.clone(), x.2 * nh + y.2));
                            }
                        }
                        a = a_end;
                        b = b_end;
                    }
                }
            }
        }
    }
    let by_name: HashMap<VertexId, usize> = names.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();
    let graph = LabeledGraph::from_unsorted(names, edges);
    let mut pairs = vec![(0, 0); ng * nh];
    let mut rank = vec![0; ng * nh];
    for (idx, name) in graph.vertices().iter().enumerate() {
        let k = by_name[name];
        pairs[idx] = (k / nh, k % nh);
        rank[k] = idx;
    }
    Product { graph, pairs, rank }
}

/// The label product `g * h`.
pub fn label_product(g: &LabeledGraph, h: &LabeledGraph) -> LabeledGraph {
    product(g, h).graph
}

/// `g * g` with the diagonal vertices `(q|q)` and their edges removed.
pub fn hat_graph(g: &LabeledGraph) -> Result<LabeledGraph> {
    g.require_deterministic()?;
    let p = product(g, g);
    let keep: Vec<bool> = p.pairs.iter().map(|(a, b)| a != b).collect();
    Ok(p.graph.induced_by_mask(&keep))
}

/// Shortest word labeling a path from some source to a vertex satisfying
/// `target`, with ties broken by label order. Returns the word and the
/// vertex it reaches.
pub(crate) fn bfs_word(
    g: &LabeledGraph,
    sources: &[usize],
    target: impl Fn(usize) -> bool,
) -> Option<(Word, usize)> {
    let n = g.num_vertices();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for &s in sources {
        if !seen[s] {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(q) = queue.pop_front() {
        if target(q) {
            let mut labels = Vec::new();
            let mut cur = q;
            while let Some((prev, e)) = parent[cur] {
                labels.push(g.out_edges(prev)[e].1.clone());
                cur = prev;
            }
            labels.reverse();
            return Some((Word::from_labels(labels), q));
        }
        for (e, (_, _, d)) in g.out_edges(q).iter().enumerate() {
            if !seen[*d] {
                seen[*d] = true;
                parent[*d] = Some((q, e));
                queue.push_back(*d);
            }
        }
    }
    None
}

/// A shortest word labeling a path from one of `sources` to a vertex
/// satisfying `target`; ties are broken by label order.
pub fn find_word_to(
    g: &LabeledGraph,
    sources: &[VertexId],
    target: impl Fn(&VertexId) -> bool,
) -> Result<Option<Word>> {
    let idx = sources
        .iter()
        .map(|v| g.index_of(v))
        .collect::<Result<Vec<_>>>()?;
    Ok(bfs_word(g, &idx, |q| target(&g.vertices()[q])).map(|(w, _)| w))
}
