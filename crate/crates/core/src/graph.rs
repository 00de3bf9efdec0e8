//! Edge-labeled directed multigraphs and the transition action of
//! deterministic graphs.
//!
//! Vertices are kept sorted by name and edges sorted by `(source, label,
//! target)`, so every traversal in the crate visits things in the same order
//! run to run. Identical edge triples collapse on construction.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::hash::{DefaultHasher, Hash, Hasher};
use std::sync::Arc;

use crate::bits::BitSet;
use crate::error::{Error, Result};

fn check_token(s: &str, what: &'static str) -> Result<()> {
    if s.is_empty() {
        return Err(Error::InvalidToken(s.to_string(), what));
    }
    if s.chars().any(char::is_whitespace) {
        return Err(Error::InvalidToken(s.to_string(), "contains whitespace"));
    }
    Ok(())
}

/// An edge label. Labels are ordered lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label(Arc<str>);

impl Label {
    pub fn new(s: &str) -> Result<Self> {
        check_token(s, "empty label")?;
        Ok(Label(Arc::from(s)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl std::str::FromStr for Label {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Label::new(s)
    }
}

/// A vertex name.
///
/// Besides being a non-empty whitespace-free token, parentheses must balance
/// and `|` may only occur inside parentheses. Product graphs name the pair
/// `(p, q)` as `(p|q)`, and the restriction keeps those names unambiguous.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(Arc<str>);

impl VertexId {
    pub fn new(s: &str) -> Result<Self> {
        check_token(s, "empty vertex name")?;
        let mut depth = 0usize;
        for c in s.chars() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth = depth
                        .checked_sub(1)
                        .ok_or(Error::InvalidToken(s.to_string(), "unbalanced parentheses"))?
                }
                '|' if depth == 0 => {
                    return Err(Error::InvalidToken(
                        s.to_string(),
                        "'|' is reserved for product vertex names",
                    ))
                }
                _ => {}
            }
        }
        if depth != 0 {
            return Err(Error::InvalidToken(s.to_string(), "unbalanced parentheses"));
        }
        Ok(VertexId(Arc::from(s)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl std::str::FromStr for VertexId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        VertexId::new(s)
    }
}

/// A finite word over labels. The empty word is valid.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Label>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_labels(labels: Vec<Label>) -> Self {
        Word(labels)
    }

    /// Parses space-separated label tokens; `ε` or a blank string is the empty word.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "ε" {
            return Ok(Word::empty());
        }
        s.split_whitespace()
            .map(Label::new)
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, l: Label) {
        self.0.push(l);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(l.as_str())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// An edge in name form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub src: VertexId,
    pub label: Label,
    pub dst: VertexId,
}

/// A set of vertices of some host graph: the value of `S · w`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetState(BTreeSet<VertexId>);

impl SubsetState {
    pub fn new(members: impl IntoIterator<Item = VertexId>) -> Self {
        SubsetState(members.into_iter().collect())
    }

    pub fn members(&self) -> &BTreeSet<VertexId> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.0.contains(v)
    }

    pub fn union(&self, other: &SubsetState) -> SubsetState {
        SubsetState(self.0.union(&other.0).cloned().collect())
    }
}

/// One strongly connected component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<VertexId>,
    /// No edge enters the component from outside.
    pub initial: bool,
    /// No edge leaves the component.
    pub terminal: bool,
}

/// Which operand of a disjoint union a vertex came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug)]
pub struct DisjointUnion {
    pub graph: LabeledGraph,
    /// Maps each vertex of the union back to its operand and original name.
    pub provenance: BTreeMap<VertexId, (Side, VertexId)>,
}

/// An edge-labeled directed multigraph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    vertices: Vec<VertexId>,
    // sorted by (src, label, dst); src/dst index into `vertices`
    edges: Vec<(usize, Label, usize)>,
    // edges[offsets[q]..offsets[q + 1]] leave q
    offsets: Vec<usize>,
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LabeledGraph")
            .field("vertices", &self.vertices)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl LabeledGraph {
    pub fn empty() -> Self {
        Self::from_indexed(Vec::new(), Vec::new())
    }

    /// Builds a graph from vertex names and named edges. Duplicate edges
    /// collapse; duplicate vertices and edges with unknown endpoints are errors.
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self> {
        let mut vs: Vec<VertexId> = vertices.into_iter().collect();
        vs.sort();
        if let Some(w) = vs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0].to_string()));
        }
        let index: HashMap<&VertexId, usize> = vs.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut es = Vec::new();
        for e in edges {
            let s = *index
                .get(&e.src)
                .ok_or_else(|| Error::UnknownVertex(e.src.to_string()))?;
            let d = *index
                .get(&e.dst)
                .ok_or_else(|| Error::UnknownVertex(e.dst.to_string()))?;
            es.push((s, e.label, d));
        }
        Ok(Self::from_indexed(vs, es))
    }

    /// Convenience constructor from string slices.
    pub fn from_strs(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Result<Self> {
        let vs = vertices
            .iter()
            .map(|v| VertexId::new(v))
            .collect::<Result<Vec<_>>>()?;
        let es = edges
            .iter()
            .map(|(s, l, d)| {
                Ok(Edge {
                    src: VertexId::new(s)?,
                    label: Label::new(l)?,
                    dst: VertexId::new(d)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(vs, es)
    }

    /// `vertices` must be sorted and unique.
    pub(crate) fn from_indexed(vertices: Vec<VertexId>, mut edges: Vec<(usize, Label, usize)>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        edges.sort();
        edges.dedup();
        let mut offsets = vec![0; vertices.len() + 1];
        for (s, _, _) in &edges {
            offsets[s + 1] += 1;
        }
        for i in 0..vertices.len() {
            offsets[i + 1] += offsets[i];
        }
        LabeledGraph {
            vertices,
            edges,
            offsets,
        }
    }

    /// Builds from arbitrary (possibly unsorted) unique names and indexed edges.
    pub(crate) fn from_unsorted(names: Vec<VertexId>, edges: Vec<(usize, Label, usize)>) -> Self {
        let mut order: Vec<usize> = (0..names.len()).collect();
        order.sort_by(|&a, &b| names[a].cmp(&names[b]));
        let mut rank = vec![0; names.len()];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        let sorted: Vec<VertexId> = order.iter().map(|&i| names[i].clone()).collect();
        let es = edges
            .into_iter()
            .map(|(s, l, d)| (rank[s], l, rank[d]))
            .collect();
        Self::from_indexed(sorted, es)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_index(&self, v: &VertexId) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub(crate) fn index_of(&self, v: &VertexId) -> Result<usize> {
        self.vertex_index(v)
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))
    }

    pub fn contains_vertex(&self, v: &VertexId) -> bool {
        self.vertex_index(v).is_some()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().map(|(s, l, d)| Edge {
            src: self.vertices[*s].clone(),
            label: l.clone(),
            dst: self.vertices[*d].clone(),
        })
    }

    pub(crate) fn indexed_edges(&self) -> &[(usize, Label, usize)] {
        &self.edges
    }

    pub(crate) fn out_edges(&self, q: usize) -> &[(usize, Label, usize)] {
        &self.edges[self.offsets[q]..self.offsets[q + 1]]
    }

    /// The labels appearing on edges, sorted.
    pub fn alphabet(&self) -> Vec<Label> {
        let set: BTreeSet<&Label> = self.edges.iter().map(|(_, l, _)| l).collect();
        set.into_iter().cloned().collect()
    }

    /// True iff no vertex has two outgoing edges with the same label.
    pub fn is_deterministic(&self) -> bool {
        (0..self.vertices.len()).all(|q| {
            self.out_edges(q)
                .windows(2)
                .all(|w| w[0].1 != w[1].1)
        })
    }

    pub(crate) fn require_deterministic(&self) -> Result<()> {
        if self.is_deterministic() {
            Ok(())
        } else {
            Err(Error::NotDeterministic)
        }
    }

    /// True iff every vertex has an incoming and an outgoing edge.
    pub fn is_essential(&self) -> bool {
        let mut has_in = vec![false; self.vertices.len()];
        let mut has_out = vec![false; self.vertices.len()];
        for (s, _, d) in &self.edges {
            has_out[*s] = true;
            has_in[*d] = true;
        }
        has_in.iter().zip(&has_out).all(|(a, b)| *a && *b)
    }

    /// Removes stranded vertices until none remain.
    pub fn essentialize(&self) -> LabeledGraph {
        let n = self.vertices.len();
        let mut alive = vec![true; n];
        let mut indeg = vec![0usize; n];
        let mut outdeg = vec![0usize; n];
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (s, _, d) in &self.edges {
            outdeg[*s] += 1;
            indeg[*d] += 1;
            preds[*d].push(*s);
        }
        let mut stack: Vec<usize> = (0..n).filter(|&q| indeg[q] == 0 || outdeg[q] == 0).collect();
        while let Some(q) = stack.pop() {
            if !alive[q] {
                continue;
            }
            alive[q] = false;
            for (_, _, d) in self.out_edges(q) {
                if alive[*d] {
                    indeg[*d] -= 1;
                    if indeg[*d] == 0 {
                        stack.push(*d);
                    }
                }
            }
            for &p in &preds[q] {
                if alive[p] {
                    outdeg[p] -= 1;
                    if outdeg[p] == 0 {
                        stack.push(p);
                    }
                }
            }
        }
        self.induced_by_mask(&alive)
    }

    pub(crate) fn induced_by_mask(&self, keep: &[bool]) -> LabeledGraph {
        let mut new_index = vec![usize::MAX; self.vertices.len()];
        let mut vs = Vec::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if keep[i] {
                new_index[i] = vs.len();
                vs.push(v.clone());
            }
        }
        let es = self
            .edges
            .iter()
            .filter(|(s, _, d)| keep[*s] && keep[*d])
            .map(|(s, l, d)| (new_index[*s], l.clone(), new_index[*d]))
            .collect();
        LabeledGraph::from_indexed(vs, es)
    }

    /// The subgraph induced by `p`.
    pub fn induced_subgraph<'a>(&self, p: impl IntoIterator<Item = &'a VertexId>) -> Result<LabeledGraph> {
        let mut keep = vec![false; self.vertices.len()];
        for v in p {
            keep[self.index_of(v)?] = true;
        }
        Ok(self.induced_by_mask(&keep))
    }

    /// `q · w`: the end of the path labeled `w` from `q`, if there is one.
    pub fn step(&self, q: &VertexId, w: &Word) -> Result<Option<VertexId>> {
        self.require_deterministic()?;
        let mut cur = self.index_of(q)?;
        for l in w.labels() {
            match self.successor(cur, l) {
                Some(d) => cur = d,
                None => return Ok(None),
            }
        }
        Ok(Some(self.vertices[cur].clone()))
    }

    /// The target of the first `l`-edge out of `q`.
    pub(crate) fn successor(&self, q: usize, l: &Label) -> Option<usize> {
        let out = self.out_edges(q);
        let i = out.partition_point(|(_, el, _)| el < l);
        out.get(i).filter(|(_, el, _)| el == l).map(|(_, _, d)| *d)
    }

    /// `S · w`.
    pub fn subset_step(&self, s: &SubsetState, w: &Word) -> Result<SubsetState> {
        self.require_deterministic()?;
        let mut cur: Vec<usize> = s
            .members()
            .iter()
            .map(|v| self.index_of(v))
            .collect::<Result<_>>()?;
        for l in w.labels() {
            let mut next: Vec<usize> = cur.iter().filter_map(|&q| self.successor(q, l)).collect();
            next.sort_unstable();
            next.dedup();
            cur = next;
        }
        Ok(SubsetState::new(cur.into_iter().map(|i| self.vertices[i].clone())))
    }

    /// The whole vertex set as a subset state.
    pub fn all_vertices(&self) -> SubsetState {
        SubsetState::new(self.vertices.iter().cloned())
    }

    /// Strongly connected component index of every vertex, numbered in
    /// order of each component's smallest vertex.
    pub(crate) fn scc_indices(&self) -> (Vec<usize>, usize) {
        let n = self.vertices.len();
        let raw = tarjan(n, |q| self.out_edges(q).iter().map(|e| e.2));
        // renumber by smallest member
        let mut remap = vec![usize::MAX; n];
        let mut count = 0;
        let mut comp = vec![0; n];
        for q in 0..n {
            let c = raw[q];
            if remap[c] == usize::MAX {
                remap[c] = count;
                count += 1;
            }
            comp[q] = remap[c];
        }
        (comp, count)
    }

    /// Irreducible components with initial/terminal flags.
    pub fn irreducible_components(&self) -> Vec<Component> {
        let (comp, count) = self.scc_indices();
        let mut members = vec![Vec::new(); count];
        for (q, &c) in comp.iter().enumerate() {
            members[c].push(self.vertices[q].clone());
        }
        let mut initial = vec![true; count];
        let mut terminal = vec![true; count];
        for (s, _, d) in &self.edges {
            if comp[*s] != comp[*d] {
                terminal[comp[*s]] = false;
                initial[comp[*d]] = false;
            }
        }
        members
            .into_iter()
            .enumerate()
            .map(|(c, vertices)| Component {
                vertices,
                initial: initial[c],
                terminal: terminal[c],
            })
            .collect()
    }

    /// Strongly connected and nonempty.
    pub fn is_irreducible(&self) -> bool {
        !self.is_empty() && self.scc_indices().1 == 1
    }

    /// Vertices reachable from `from` (including `from`).
    pub(crate) fn reachable_from(&self, from: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.vertices.len()];
        let mut stack: Vec<usize> = from.to_vec();
        for &q in from {
            seen[q] = true;
        }
        while let Some(q) = stack.pop() {
            for (_, _, d) in self.out_edges(q) {
                if !seen[*d] {
                    seen[*d] = true;
                    stack.push(*d);
                }
            }
        }
        seen
    }

    /// Renames vertices through `f`; the new names must stay distinct.
    pub fn map_vertices(&self, mut f: impl FnMut(&VertexId) -> VertexId) -> Result<LabeledGraph> {
        let names: Vec<VertexId> = self.vertices.iter().map(&mut f).collect();
        let mut check = names.clone();
        check.sort();
        if let Some(w) = check.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0].to_string()));
        }
        Ok(LabeledGraph::from_unsorted(names, self.edges.clone()))
    }

    /// Stable identity of the graph's content, used to tag relations.
    pub(crate) fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.vertices.hash(&mut h);
        self.edges.hash(&mut h);
        h.finish()
    }

    /// Subset transitions over a fixed alphabet, for deterministic graphs.
    pub(crate) fn det_table(&self, alphabet: &[Label]) -> Result<DetTable> {
        self.require_deterministic()?;
        let m = alphabet.len();
        let mut next = vec![None; self.vertices.len() * m];
        for (s, l, d) in &self.edges {
            if let Ok(a) = alphabet.binary_search(l) {
                next[s * m + a] = Some(*d);
            }
        }
        Ok(DetTable {
            n: self.vertices.len(),
            labels: alphabet.to_vec(),
            next,
        })
    }
}

/// Disjoint union. Left names are kept; colliding right names get primes
/// appended until fresh.
pub fn disjoint_union(g: &LabeledGraph, h: &LabeledGraph) -> DisjointUnion {
    let mut taken: BTreeSet<VertexId> = g.vertices.iter().cloned().collect();
    let mut provenance = BTreeMap::new();
    let mut names: Vec<VertexId> = g.vertices.clone();
    for v in &g.vertices {
        provenance.insert(v.clone(), (Side::Left, v.clone()));
    }
    for v in &h.vertices {
        let mut name = v.clone();
        while taken.contains(&name) {
            name = VertexId(Arc::from(format!("{name}'")));
        }
        taken.insert(name.clone());
        provenance.insert(name.clone(), (Side::Right, v.clone()));
        names.push(name);
    }
    let off = g.vertices.len();
    let mut edges = g.edges.clone();
    edges.extend(h.edges.iter().map(|(s, l, d)| (s + off, l.clone(), d + off)));
    DisjointUnion {
        graph: LabeledGraph::from_unsorted(names, edges),
        provenance,
    }
}

/// Picks a name not used by `g`, starting from `base` and appending primes.
pub(crate) fn fresh_name(g: &LabeledGraph, base: &str) -> VertexId {
    let mut name = base.to_string();
    while g.contains_vertex(&VertexId(Arc::from(name.as_str()))) {
        name.push('\'');
    }
    VertexId(Arc::from(name))
}

/// Name `(left|right)` for product vertices.
pub(crate) fn pair_name(a: &VertexId, b: &VertexId) -> VertexId {
    VertexId(Arc::from(format!("({a}|{b})")))
}

/// Iterative Tarjan; returns a component id per vertex.
pub(crate) fn tarjan<I: Iterator<Item = usize>>(n: usize, succ: impl Fn(usize) -> I) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;
    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        let mut call: Vec<(usize, Vec<usize>, usize)> = Vec::new();
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        call.push((root, succ(root).collect(), 0));
        while let Some((v, children, pos)) = call.last_mut() {
            let v = *v;
            if *pos < children.len() {
                let w = children[*pos];
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, succ(w).collect(), 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some((parent, _, _)) = call.last() {
                    low[*parent] = low[*parent].min(low[v]);
                }
                if low[v] == index[v] {
                    while let Some(w) = stack.pop() {
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
            }
        }
    }
    comp
}

/// Dense transition table of a deterministic graph over a chosen alphabet.
#[derive(Clone, Debug)]
pub(crate) struct DetTable {
    pub n: usize,
    pub labels: Vec<Label>,
    next: Vec<Option<usize>>,
}

impl DetTable {
    pub fn m(&self) -> usize {
        self.labels.len()
    }

    pub fn next(&self, q: usize, a: usize) -> Option<usize> {
        self.next[q * self.labels.len() + a]
    }

    pub fn step_set(&self, s: &BitSet, a: usize) -> BitSet {
        let mut out = BitSet::new(self.n);
        for q in s.iter() {
            if let Some(d) = self.next(q, a) {
                out.insert(d);
            }
        }
        out
    }
}
