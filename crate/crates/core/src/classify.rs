//! Follower equivalence, isomorphism, and the polynomial tests that apply to
//! synchronizing presentations: equality, SFT, irreducibility, and
//! universality.

use std::collections::{BTreeMap, HashMap};

use crate::auxgraph::hat_graph;
use crate::error::{Error, Result};
use crate::graph::{disjoint_union, tarjan, Label, LabeledGraph, Side, VertexId};
use crate::sync::{is_synchronizing, separating_word};

/// Partition of a graph's vertices by follower set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FollowerPartition {
    /// Blocks with members sorted, ordered by smallest member.
    pub classes: Vec<Vec<VertexId>>,
}

impl FollowerPartition {
    pub fn block_of(&self, v: &VertexId) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(v))
    }

    /// True iff every block is a singleton.
    pub fn is_discrete(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }
}

/// Block index per vertex, blocks numbered by smallest member.
///
/// Moore refinement on the completion of `g` by a sink state, with every
/// non-sink state accepting.
pub(crate) fn follower_classes(g: &LabeledGraph) -> Result<(Vec<usize>, usize)> {
    let n = g.num_vertices();
    let table = g.det_table(&g.alphabet())?;
    let sink = n;
    let succ = |q: usize, a: usize| if q == sink { sink } else { table.next(q, a).unwrap_or(sink) };
    let mut class: Vec<usize> = (0..=n).map(|q| usize::from(q == sink)).collect();
    let mut count = if n == 0 { 1 } else { 2 };
    loop {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut next = vec![0; n + 1];
        for q in 0..=n {
            let mut sig = Vec::with_capacity(table.m() + 1);
            sig.push(class[q]);
            sig.extend((0..table.m()).map(|a| class[succ(q, a)]));
            let fresh = ids.len();
            next[q] = *ids.entry(sig).or_insert(fresh);
        }
        let new_count = ids.len();
        class = next;
        if new_count == count {
            break;
        }
        count = new_count;
    }
    // renumber by smallest member, dropping the sink's block
    let mut remap: HashMap<usize, usize> = HashMap::new();
    let mut out = Vec::with_capacity(n);
    for &c in &class[..n] {
        let fresh = remap.len();
        out.push(*remap.entry(c).or_insert(fresh));
    }
    Ok((out, remap.len()))
}

/// Partition of the vertices of a deterministic graph into follower-equivalence classes.
pub fn follower_partition(g: &LabeledGraph) -> Result<FollowerPartition> {
    let (class, count) = follower_classes(g)?;
    let mut classes = vec![Vec::new(); count];
    for (q, &c) in class.iter().enumerate() {
        classes[c].push(g.vertices()[q].clone());
    }
    Ok(FollowerPartition { classes })
}

/// True iff distinct vertices have distinct follower sets.
pub fn is_follower_separated(g: &LabeledGraph) -> Result<bool> {
    let (_, count) = follower_classes(g)?;
    Ok(count == g.num_vertices())
}

/// Quotient of `g` by follower equivalence. Each block is named by its
/// smallest member.
pub fn follower_separation(g: &LabeledGraph) -> Result<LabeledGraph> {
    g.require_deterministic()?;
    if !g.is_essential() {
        return Err(Error::NotEssential);
    }
    Ok(quotient(g, &follower_classes(g)?))
}

pub(crate) fn quotient(g: &LabeledGraph, (class, count): &(Vec<usize>, usize)) -> LabeledGraph {
    let mut names: Vec<Option<VertexId>> = vec![None; *count];
    for (q, &c) in class.iter().enumerate() {
        names[c].get_or_insert_with(|| g.vertices()[q].clone());
    }
    let names = names.into_iter().map(|n| n.expect("blocks are nonempty")).collect();
    let edges = g
        .indexed_edges()
        .iter()
        .map(|(s, l, d)| (class[*s], l.clone(), class[*d]))
        .collect();
    LabeledGraph::from_unsorted(names, edges)
}

/// An isomorphism between two follower-separated deterministic graphs, read
/// off the follower partition of their disjoint union.
pub fn are_isomorphic(g: &LabeledGraph, h: &LabeledGraph) -> Result<Option<BTreeMap<VertexId, VertexId>>> {
    g.require_deterministic()?;
    h.require_deterministic()?;
    if !is_follower_separated(g)? || !is_follower_separated(h)? {
        return Err(Error::NotFollowerSeparated);
    }
    if g.num_vertices() != h.num_vertices() {
        return Ok(None);
    }
    let u = disjoint_union(g, h);
    let part = follower_partition(&u.graph)?;
    let mut map = BTreeMap::new();
    for block in &part.classes {
        let [a, b] = &block[..] else {
            return Ok(None);
        };
        let (sa, oa) = &u.provenance[a];
        let (sb, ob) = &u.provenance[b];
        match (sa, sb) {
            (Side::Left, Side::Right) => map.insert(oa.clone(), ob.clone()),
            (Side::Right, Side::Left) => map.insert(ob.clone(), oa.clone()),
            _ => return Ok(None),
        };
    }
    Ok(Some(map))
}

fn require_sync_presentation(g: &LabeledGraph) -> Result<()> {
    g.require_deterministic()?;
    if !g.is_essential() {
        return Err(Error::NotEssential);
    }
    if !is_synchronizing(g)? {
        return Err(Error::NotSynchronizing);
    }
    Ok(())
}

/// Shift equality for synchronizing presentations: their follower
/// separations must be isomorphic.
pub fn equal_sync(g: &LabeledGraph, h: &LabeledGraph) -> Result<bool> {
    require_sync_presentation(g)?;
    require_sync_presentation(h)?;
    Ok(are_isomorphic(&follower_separation(g)?, &follower_separation(h)?)?.is_some())
}

fn is_acyclic(g: &LabeledGraph) -> bool {
    let comp = tarjan(g.num_vertices(), |q| g.out_edges(q).iter().map(|e| e.2));
    let mut sizes = vec![0usize; g.num_vertices()];
    for &c in &comp {
        sizes[c] += 1;
    }
    sizes.iter().all(|&s| s <= 1) && g.indexed_edges().iter().all(|(s, _, d)| s != d)
}

/// True iff a synchronizing presentation presents a shift of finite type:
/// the hat graph of its follower separation must be acyclic.
pub fn is_sft_sync(g: &LabeledGraph) -> Result<bool> {
    require_sync_presentation(g)?;
    Ok(is_acyclic(&hat_graph(&follower_separation(g)?)?))
}

/// `n² − n`, a step bound for the SFT presented by a follower-separated
/// synchronizing presentation with `n` vertices.
pub fn m_step_bound(g: &LabeledGraph) -> Result<usize> {
    require_sync_presentation(g)?;
    if !is_follower_separated(g)? {
        return Err(Error::NotFollowerSeparated);
    }
    if !is_sft_sync(g)? {
        return Err(Error::NotSft);
    }
    let n = g.num_vertices();
    Ok(n * n - n)
}

/// Shift irreducibility for synchronizing presentations: the graph itself
/// must be irreducible. The empty presentation counts as irreducible.
pub fn is_irreducible_shift_sync(g: &LabeledGraph) -> Result<bool> {
    require_sync_presentation(g)?;
    Ok(g.is_empty() || g.is_irreducible())
}

/// One vertex with a loop for every label.
pub fn full_shift_graph(alphabet: &[Label]) -> LabeledGraph {
    let v = VertexId::new("v").expect("valid name");
    LabeledGraph::from_indexed(vec![v], alphabet.iter().map(|l| (0, l.clone(), 0)).collect())
}

/// True iff `g` presents the full shift over its own alphabet.
pub fn is_universal(g: &LabeledGraph) -> Result<bool> {
    g.require_deterministic()?;
    if !g.is_essential() {
        return Err(Error::NotEssential);
    }
    if g.is_empty() {
        return Ok(true);
    }
    Ok(separating_word(&full_shift_graph(&g.alphabet()), g)?.is_none())
}
