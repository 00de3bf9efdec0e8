//! Exact deciders for general deterministic presentations.
//!
//! The action of a word `w` is the relation `{(p, q) : p · w = q}`; actions
//! compose like the words that generate them, and the finitely many actions
//! form the action monoid. Language questions are answered by breadth-first
//! search over subset states or over the monoid, bounded by [`Caps`].

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::bits::BitSet;
use crate::classify::{follower_separation, is_universal};
use crate::error::{Error, Result};
use crate::graph::{tarjan, DetTable, Label, LabeledGraph, VertexId, Word};

/// Limits on explicit state-space searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of subset states or monoid elements.
    pub states: usize,
    /// Maximum number of candidate presentations enumerated by minimality.
    pub candidates: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            states: 1 << 18,
            candidates: 1_000_000,
        }
    }
}

fn require_presentation(g: &LabeledGraph) -> Result<()> {
    g.require_deterministic()?;
    if g.is_essential() {
        Ok(())
    } else {
        Err(Error::NotEssential)
    }
}

/// The action of a word on the vertices of a host graph.
#[derive(Clone)]
pub struct ActionRelation {
    host: u64,
    names: Arc<[VertexId]>,
    rows: Vec<BitSet>,
}

impl PartialEq for ActionRelation {
    fn eq(&self, other: &Self) -> bool {
        self.host == other.host && self.rows == other.rows
    }
}

impl Eq for ActionRelation {}

impl Hash for ActionRelation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.host.hash(state);
        self.rows.hash(state);
    }
}

impl fmt::Debug for ActionRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

impl ActionRelation {
    fn blank(g: &LabeledGraph) -> Self {
        let n = g.num_vertices();
        ActionRelation {
            host: g.fingerprint(),
            names: g.vertices().into(),
            rows: vec![BitSet::new(n); n],
        }
    }

    /// `⟦ε⟧`, the identity relation.
    pub fn identity(g: &LabeledGraph) -> Self {
        let mut r = Self::blank(g);
        for (p, row) in r.rows.iter_mut().enumerate() {
            row.insert(p);
        }
        r
    }

    /// The empty relation.
    pub fn empty(g: &LabeledGraph) -> Self {
        Self::blank(g)
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(BitSet::is_empty)
    }

    pub fn contains(&self, p: &VertexId, q: &VertexId) -> bool {
        let find = |v: &VertexId| self.names.binary_search(v).ok();
        match (find(p), find(q)) {
            (Some(a), Some(b)) => self.rows[a].contains(b),
            _ => false,
        }
    }

    /// All pairs, in vertex order.
    pub fn pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(p, row)| row.iter().map(move |q| (self.names[p].clone(), self.names[q].clone())))
            .collect()
    }

    fn n(&self) -> usize {
        self.rows.len()
    }

    fn domain(&self) -> BitSet {
        let mut d = BitSet::new(self.n());
        for (p, row) in self.rows.iter().enumerate() {
            if !row.is_empty() {
                d.insert(p);
            }
        }
        d
    }

    fn range(&self) -> BitSet {
        self.image(&BitSet::full(self.n()))
    }

    /// `{q : (p, q) ∈ R for some p ∈ set}`.
    fn image(&self, set: &BitSet) -> BitSet {
        let mut out = BitSet::new(self.n());
        for p in set.iter() {
            out.union_with(&self.rows[p]);
        }
        out
    }

    fn then(&self, other: &ActionRelation) -> ActionRelation {
        ActionRelation {
            host: self.host,
            names: self.names.clone(),
            rows: self.rows.iter().map(|row| other.image(row)).collect(),
        }
    }

    fn generator(g: &LabeledGraph, table: &DetTable, a: usize) -> Self {
        let mut r = Self::blank(g);
        for p in 0..table.n {
            if let Some(q) = table.next(p, a) {
                r.rows[p].insert(q);
            }
        }
        r
    }
}

/// `⟦w⟧ = {(p, q) : p · w = q}`.
pub fn action_of_word(g: &LabeledGraph, w: &Word) -> Result<ActionRelation> {
    g.require_deterministic()?;
    let mut r = ActionRelation::blank(g);
    for p in 0..g.num_vertices() {
        let end = w.labels().iter().try_fold(p, |q, l| g.successor(q, l));
        if let Some(q) = end {
            r.rows[p].insert(q);
        }
    }
    Ok(r)
}

/// Relational composition `r ; s`.
pub fn compose(r: &ActionRelation, s: &ActionRelation) -> Result<ActionRelation> {
    if r.host != s.host {
        return Err(Error::HostMismatch);
    }
    Ok(r.then(s))
}

/// All actions of words, found by breadth-first search from `⟦ε⟧` in label order.
pub struct ActionMonoid {
    host: u64,
    labels: Vec<Label>,
    generators: Vec<ActionRelation>,
    elements: Vec<ActionRelation>,
    index: HashMap<ActionRelation, usize>,
    // cayley[e * |labels| + a] = index of elements[e] ; ⟦a⟧
    cayley: Vec<usize>,
    parent: Vec<Option<(usize, usize)>>,
    ranges: Vec<BitSet>,
    domains: Vec<BitSet>,
    intrinsic: RefCell<Vec<Option<bool>>>,
}

impl fmt::Debug for ActionMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ActionMonoid")
            .field("labels", &self.labels)
            .field("len", &self.elements.len())
            .finish()
    }
}

/// Enumerates the action monoid; fails with [`Error::CapExceeded`] past `cap` elements.
pub fn action_monoid(g: &LabeledGraph, cap: usize) -> Result<ActionMonoid> {
    g.require_deterministic()?;
    let labels = g.alphabet();
    let table = g.det_table(&labels)?;
    let m = labels.len();
    let generators: Vec<ActionRelation> = (0..m).map(|a| ActionRelation::generator(g, &table, a)).collect();
    let id = ActionRelation::identity(g);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0)]);
    let mut parent = vec![None];
    let mut cayley = Vec::new();
    let mut e = 0;
    while e < elements.len() {
        for (a, letter) in generators.iter().enumerate() {
            let next = elements[e].then(letter);
            let k = match index.get(&next) {
                Some(&k) => k,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded {
                            what: "action monoid",
                            limit: cap,
                        });
                    }
                    let k = elements.len();
                    index.insert(next.clone(), k);
                    elements.push(next);
                    parent.push(Some((e, a)));
                    k
                }
            };
            cayley.push(k);
        }
        e += 1;
    }
    let distinct = |sets: Vec<BitSet>| sets.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    let ranges = distinct(elements.iter().map(ActionRelation::range).collect());
    let domains = distinct(elements.iter().map(ActionRelation::domain).collect());
    let len = elements.len();
    Ok(ActionMonoid {
        host: g.fingerprint(),
        labels,
        generators,
        elements,
        index,
        cayley,
        parent,
        ranges,
        domains,
        intrinsic: RefCell::new(vec![None; len]),
    })
}

impl ActionMonoid {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in discovery order; the first is the identity.
    pub fn elements(&self) -> &[ActionRelation] {
        &self.elements
    }

    pub fn generators(&self) -> impl Iterator<Item = (&Label, &ActionRelation)> {
        self.labels.iter().zip(&self.generators)
    }

    pub fn contains(&self, r: &ActionRelation) -> bool {
        self.index.contains_key(r)
    }

    /// The image of an element under right multiplication by a generator.
    pub fn cayley_step(&self, r: &ActionRelation, a: &Label) -> Option<&ActionRelation> {
        let e = *self.index.get(r)?;
        let a = self.labels.binary_search(a).ok()?;
        Some(&self.elements[self.cayley[e * self.labels.len() + a]])
    }

    /// The shortlex-least word generating `r`.
    pub fn witness(&self, r: &ActionRelation) -> Option<Word> {
        self.index.get(r).map(|&e| self.word_of(e))
    }

    fn word_of(&self, mut e: usize) -> Word {
        let mut labels = Vec::new();
        while let Some((prev, a)) = self.parent[e] {
            labels.push(self.labels[a].clone());
            e = prev;
        }
        labels.reverse();
        Word::from_labels(labels)
    }

    fn element_index(&self, r: &ActionRelation) -> Result<usize> {
        if r.host != self.host {
            return Err(Error::HostMismatch);
        }
        self.index.get(r).copied().ok_or(Error::NotAnElement)
    }

    /// Whether `S;R ≠ ∅ ∧ R;T ≠ ∅ ⇒ S;R;T ≠ ∅` for all elements `S`, `T`.
    ///
    /// `S;R` is nonempty iff `range S` meets `dom R`, and `S;R;T` is nonempty
    /// iff `R` relates some point of `range S` to some point of `dom T`, so
    /// it suffices to scan the distinct ranges and domains.
    fn intrinsic_at(&self, e: usize) -> bool {
        if let Some(known) = self.intrinsic.borrow()[e] {
            return known;
        }
        let r = &self.elements[e];
        let range = r.range();
        let relevant: Vec<&BitSet> = self.domains.iter().filter(|y| y.intersects(&range)).collect();
        let verdict = self.ranges.iter().all(|x| {
            let img = r.image(x);
            img.is_empty() || relevant.iter().all(|y| img.intersects(y))
        });
        self.intrinsic.borrow_mut()[e] = Some(verdict);
        verdict
    }
}

/// Whether `r` is intrinsically synchronizing within `m`.
pub fn is_intrinsically_sync_relation(m: &ActionMonoid, r: &ActionRelation) -> Result<bool> {
    Ok(m.intrinsic_at(m.element_index(r)?))
}

/// Whether some intrinsically synchronizing element `S` has `S;R ≠ ∅`.
pub fn preceded_by_intrinsic_sync(m: &ActionMonoid, r: &ActionRelation) -> Result<bool> {
    let e = m.element_index(r)?;
    let dom = m.elements[e].domain();
    Ok((0..m.len()).any(|s| m.elements[s].range().intersects(&dom) && m.intrinsic_at(s)))
}

/// Whether the shift has a synchronizing deterministic presentation: every
/// nonempty action must be preceded by an intrinsically synchronizing one.
pub fn decide_sdp_exists(g: &LabeledGraph, caps: &Caps) -> Result<bool> {
    require_presentation(g)?;
    let m = action_monoid(g, caps.states)?;
    let mut domains: BTreeSet<BitSet> = m
        .elements
        .iter()
        .filter(|r| !r.is_empty())
        .map(ActionRelation::domain)
        .collect();
    for s in 0..m.len() {
        if domains.is_empty() {
            break;
        }
        let range = m.elements[s].range();
        if domains.iter().any(|d| d.intersects(&range)) && m.intrinsic_at(s) {
            domains.retain(|d| !d.intersects(&range));
        }
    }
    Ok(domains.is_empty())
}

/// Whether the shift is of finite type.
///
/// A language word is long enough to matter exactly when its action lies
/// downstream of a cycle of the monoid's Cayley graph; the shift is an SFT
/// iff every nonempty such action is intrinsically synchronizing.
pub fn decide_sft(g: &LabeledGraph, caps: &Caps) -> Result<bool> {
    require_presentation(g)?;
    let m = action_monoid(g, caps.states)?;
    let k = m.labels.len();
    let n = m.len();
    let succ = |e: usize| m.cayley[e * k..(e + 1) * k].iter().copied();
    let comp = tarjan(n, succ);
    let mut size = vec![0usize; n];
    for &c in &comp {
        size[c] += 1;
    }
    let mut seen: Vec<bool> = (0..n)
        .map(|e| size[comp[e]] > 1 || succ(e).any(|d| d == e))
        .collect();
    let mut stack: Vec<usize> = (0..n).filter(|&e| seen[e]).collect();
    while let Some(e) = stack.pop() {
        for d in succ(e) {
            if !seen[d] {
                seen[d] = true;
                stack.push(d);
            }
        }
    }
    Ok((0..n).all(|e| !seen[e] || m.elements[e].is_empty() || m.intrinsic_at(e)))
}

/// Breadth-first search over subset states reached from `start`.
struct SubsetSearch {
    states: Vec<BitSet>,
    parent: Vec<Option<(usize, usize)>>,
    found: Option<usize>,
}

impl SubsetSearch {
    fn run(table: &DetTable, start: BitSet, cap: usize, stop: impl Fn(&BitSet) -> bool) -> Result<Self> {
        let mut states = vec![start.clone()];
        let mut index = HashMap::from([(start, 0)]);
        let mut parent = vec![None];
        let mut e = 0;
        while e < states.len() {
            if stop(&states[e]) {
                return Ok(SubsetSearch {
                    states,
                    parent,
                    found: Some(e),
                });
            }
            for a in 0..table.m() {
                let next = table.step_set(&states[e], a);
                if !index.contains_key(&next) {
                    if states.len() >= cap {
                        return Err(Error::CapExceeded {
                            what: "subset states",
                            limit: cap,
                        });
                    }
                    index.insert(next.clone(), states.len());
                    states.push(next);
                    parent.push(Some((e, a)));
                }
            }
            e += 1;
        }
        Ok(SubsetSearch {
            states,
            parent,
            found: None,
        })
    }

    fn word(&self, table: &DetTable, mut e: usize) -> Word {
        let mut labels = Vec::new();
        while let Some((prev, a)) = self.parent[e] {
            labels.push(table.labels[a].clone());
            e = prev;
        }
        labels.reverse();
        Word::from_labels(labels)
    }
}

/// Vertices `q` with `Q · w = {q}` for some word `w`.
pub fn synchronizing_vertices(g: &LabeledGraph, caps: &Caps) -> Result<BTreeSet<VertexId>> {
    require_presentation(g)?;
    let table = g.det_table(&g.alphabet())?;
    let search = SubsetSearch::run(&table, BitSet::full(g.num_vertices()), caps.states, |_| false)?;
    Ok(search
        .states
        .iter()
        .filter(|s| s.len() == 1)
        .map(|s| g.vertices()[s.first().expect("singleton")].clone())
        .collect())
}

/// A shortest synchronizing word, least in label order among the shortest.
pub fn shortest_sync_word(g: &LabeledGraph, caps: &Caps) -> Result<Option<Word>> {
    require_presentation(g)?;
    let table = g.det_table(&g.alphabet())?;
    let search = SubsetSearch::run(&table, BitSet::full(g.num_vertices()), caps.states, |s| s.len() == 1)?;
    Ok(search.found.map(|e| search.word(&table, e)))
}

/// A word in the language of `g` but not of `h`, if any: a shortest word
/// with `Q_g · w ≠ ∅` and `Q_h · w = ∅`.
pub fn subshift_witness(g: &LabeledGraph, h: &LabeledGraph, caps: &Caps) -> Result<Option<Word>> {
    require_presentation(g)?;
    require_presentation(h)?;
    let labels = g.alphabet();
    let tg = g.det_table(&labels)?;
    let th = h.det_table(&labels)?;
    let start = (BitSet::full(g.num_vertices()), BitSet::full(h.num_vertices()));
    let mut states = vec![start.clone()];
    let mut index = HashMap::from([(start, 0)]);
    let mut parent: Vec<Option<(usize, usize)>> = vec![None];
    let mut e = 0;
    while e < states.len() {
        let (x, y) = states[e].clone();
        if !x.is_empty() && y.is_empty() {
            let mut word = Vec::new();
            let mut cur = e;
            while let Some((prev, a)) = parent[cur] {
                word.push(labels[a].clone());
                cur = prev;
            }
            word.reverse();
            return Ok(Some(Word::from_labels(word)));
        }
        if !x.is_empty() {
            for a in 0..labels.len() {
                let next = (tg.step_set(&x, a), th.step_set(&y, a));
                if !index.contains_key(&next) {
                    if states.len() >= caps.states {
                        return Err(Error::CapExceeded {
                            what: "subset pairs",
                            limit: caps.states,
                        });
                    }
                    index.insert(next.clone(), states.len());
                    states.push(next);
                    parent.push(Some((e, a)));
                }
            }
        }
        e += 1;
    }
    Ok(None)
}

/// Whether `shift(g) ⊆ shift(h)`.
pub fn decide_subshift(g: &LabeledGraph, h: &LabeledGraph, caps: &Caps) -> Result<bool> {
    Ok(subshift_witness(g, h, caps)?.is_none())
}

/// Whether `shift(g) = shift(h)`.
pub fn decide_equality(g: &LabeledGraph, h: &LabeledGraph, caps: &Caps) -> Result<bool> {
    Ok(decide_subshift(g, h, caps)? && decide_subshift(h, g, caps)?)
}

/// Whether the shift is irreducible: after follower separation, the
/// synchronizing vertices must form one terminal component whose subgraph
/// presents the whole shift.
pub fn decide_irreducibility(g: &LabeledGraph, caps: &Caps) -> Result<bool> {
    require_presentation(g)?;
    if g.is_empty() {
        return Ok(true);
    }
    let f = follower_separation(g)?;
    let sync = synchronizing_vertices(&f, caps)?;
    let terminal = f
        .irreducible_components()
        .into_iter()
        .any(|c| c.terminal && c.vertices.iter().cloned().collect::<BTreeSet<_>>() == sync);
    if !terminal {
        return Ok(false);
    }
    let h = f.induced_subgraph(&sync)?;
    decide_equality(&f, &h, caps)
}

/// Language of words of length 1 and 2 over `m` labels, as a bit per word.
fn short_words(n: usize, m: usize, next: impl Fn(usize, usize) -> Option<usize>, alive: &[bool]) -> Vec<bool> {
    let mut out = vec![false; m + m * m];
    for q in (0..n).filter(|&q| alive[q]) {
        for a in 0..m {
            if let Some(r) = next(q, a).filter(|&r| alive[r]) {
                out[a] = true;
                for b in 0..m {
                    if next(r, b).is_some_and(|s| alive[s]) {
                        out[m + a * m + b] = true;
                    }
                }
            }
        }
    }
    out
}

/// Whether the shift has a deterministic presentation with at most `k` vertices.
///
/// For `k ≥ |Q|` the answer is yes; for `k = 1` it is universality. Otherwise
/// every deterministic graph on `k` vertices over the same alphabet is tried.
pub fn decide_minimality(g: &LabeledGraph, k: usize, caps: &Caps) -> Result<bool> {
    require_presentation(g)?;
    let n = g.num_vertices();
    if k >= n {
        return Ok(true);
    }
    if k == 0 {
        return Ok(false);
    }
    if k == 1 {
        return is_universal(g);
    }
    let labels = g.alphabet();
    let m = labels.len();
    let slots = k * m;
    let total = (k as u128 + 1).checked_pow(slots as u32);
    if total.is_none_or(|t| t > caps.candidates as u128) {
        return Err(Error::CapExceeded {
            what: "minimality candidates",
            limit: caps.candidates,
        });
    }
    let table = g.det_table(&labels)?;
    let target = short_words(n, m, |q, a| table.next(q, a), &vec![true; n]);
    let names: Vec<VertexId> = (0..k)
        .map(|i| VertexId::new(&format!("c{i}")).expect("valid name"))
        .collect();
    // digit k encodes a missing transition
    let mut digits = vec![0usize; slots];
    loop {
        let next = |q: usize, a: usize| Some(digits[q * m + a]).filter(|&d| d < k);
        let alive = essential_part(k, m, &next);
        let used = (0..m).all(|a| (0..k).any(|q| alive[q] && next(q, a).is_some_and(|d| alive[d])));
        if used && short_words(k, m, next, &alive) == target {
            let edges = (0..k)
                .filter(|&q| alive[q])
                .flat_map(|q| (0..m).map(move |a| (q, a)))
                .filter_map(|(q, a)| next(q, a).filter(|&d| alive[d]).map(|d| (q, labels[a].clone(), d)))
                .collect();
            let candidate = LabeledGraph::from_indexed(names.clone(), edges).induced_by_mask(&alive);
            if decide_equality(g, &candidate, caps)? {
                return Ok(true);
            }
        }
        let mut i = 0;
        while i < slots && digits[i] == k {
            digits[i] = 0;
            i += 1;
        }
        if i == slots {
            return Ok(false);
        }
        digits[i] += 1;
    }
}

fn essential_part(k: usize, m: usize, next: &impl Fn(usize, usize) -> Option<usize>) -> Vec<bool> {
    let mut alive = vec![true; k];
    loop {
        let mut has_in = vec![false; k];
        let mut has_out = vec![false; k];
        for q in (0..k).filter(|&q| alive[q]) {
            for a in 0..m {
                if let Some(d) = next(q, a).filter(|&d| alive[d]) {
                    has_out[q] = true;
                    has_in[d] = true;
                }
            }
        }
        let mut changed = false;
        for q in 0..k {
            if alive[q] && !(has_in[q] && has_out[q]) {
                alive[q] = false;
                changed = true;
            }
        }
        if !changed {
            return alive;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{reduction_irred, reduction_sft, reduction_sync, family_mik, Dfa};
    use crate::fixtures::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn v(s: &str) -> VertexId {
        VertexId::new(s).unwrap()
    }

    fn caps() -> Caps {
        Caps::default()
    }

    fn act(g: &LabeledGraph, s: &str) -> ActionRelation {
        action_of_word(g, &w(s)).unwrap()
    }

    fn all_a() -> Dfa {
        Dfa::from_strs(&["s"], "s", &["s"], &[("s", "a", "s")]).unwrap()
    }

    fn eps_only() -> Dfa {
        Dfa::from_strs(&["s", "d"], "s", &["s"], &[("s", "a", "d"), ("d", "a", "d")]).unwrap()
    }

    #[test]
    fn action_examples() {
        let g = gm();
        assert_eq!(act(&g, "").pairs(), vec![(v("A"), v("A")), (v("B"), v("B"))]);
        assert_eq!(act(&g, "0").pairs(), vec![(v("A"), v("A")), (v("B"), v("A"))]);
        assert!(act(&g, "1 1").is_empty());
    }

    #[test]
    fn compose_examples() {
        let g = gm();
        let id = ActionRelation::identity(&g);
        assert_eq!(compose(&id, &act(&g, "0")).unwrap(), act(&g, "0"));
        let c = compose(&act(&g, "0"), &act(&g, "1")).unwrap();
        assert_eq!(c, act(&g, "0 1"));
        assert_eq!(c.pairs(), vec![(v("A"), v("B")), (v("B"), v("B"))]);
        assert!(compose(&ActionRelation::empty(&g), &c).unwrap().is_empty());
        assert_eq!(compose(&id, &act(&ev(), "0")), Err(Error::HostMismatch));
    }

    #[test]
    fn monoid_examples() {
        // ε, 0, 1, 01, 10 and the empty action of 11
        let m = action_monoid(&gm(), 100).unwrap();
        assert_eq!(m.len(), 6);
        assert!(m.contains(&act(&gm(), "1 1")));
        assert_eq!(action_monoid(&full1(), 100).unwrap().len(), 1);
        assert_eq!(action_monoid(&p2(), 100).unwrap().len(), 2);
        for r in m.elements() {
            assert_eq!(&action_of_word(&gm(), &m.witness(r).unwrap()).unwrap(), r);
        }
        assert!(matches!(action_monoid(&gm(), 3), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn intrinsic_examples() {
        let g = gm();
        let m = action_monoid(&g, 100).unwrap();
        assert!(is_intrinsically_sync_relation(&m, &act(&g, "1")).unwrap());
        assert!(is_intrinsically_sync_relation(&m, &ActionRelation::empty(&g)).unwrap());
        let e = ev();
        let me = action_monoid(&e, 100).unwrap();
        assert!(!is_intrinsically_sync_relation(&me, &act(&e, "0")).unwrap());
        assert_eq!(
            is_intrinsically_sync_relation(&m, &act(&e, "0")),
            Err(Error::HostMismatch)
        );
    }

    #[test]
    fn preceded_examples() {
        let g = gm();
        let m = action_monoid(&g, 100).unwrap();
        assert!(preceded_by_intrinsic_sync(&m, &ActionRelation::identity(&g)).unwrap());
        assert!(!preceded_by_intrinsic_sync(&m, &ActionRelation::empty(&g)).unwrap());
        let (r1, _) = reduction_irred(&[eps_only()]).unwrap();
        let m1 = action_monoid(&r1, 1 << 16).unwrap();
        assert!(preceded_by_intrinsic_sync(&m1, &act(&r1, "st")).unwrap());
        assert!(!preceded_by_intrinsic_sync(&m1, &act(&r1, "lm a rm")).unwrap());
    }

    #[test]
    fn sdp_examples() {
        assert!(decide_sdp_exists(&gm(), &caps()).unwrap());
        assert!(decide_sdp_exists(&fig1(), &caps()).unwrap());
        let (g, _) = reduction_irred(&[eps_only()]).unwrap();
        assert!(!decide_sdp_exists(&g, &caps()).unwrap());
    }

    #[test]
    fn sft_examples() {
        assert!(decide_sft(&gm(), &caps()).unwrap());
        assert!(!decide_sft(&ev(), &caps()).unwrap());
        let (g, _) = reduction_sft(&[all_a()]).unwrap();
        assert!(decide_sft(&g, &caps()).unwrap());
    }

    #[test]
    fn sync_vertex_examples() {
        let names = |s: BTreeSet<VertexId>| s.into_iter().map(|v| v.to_string()).collect::<Vec<_>>();
        assert_eq!(names(synchronizing_vertices(&fig1(), &caps()).unwrap()), ["q2", "q3"]);
        assert_eq!(names(synchronizing_vertices(&gm(), &caps()).unwrap()), ["A", "B"]);
        assert!(synchronizing_vertices(&p2(), &caps()).unwrap().is_empty());
    }

    #[test]
    fn irreducibility_examples() {
        assert!(decide_irreducibility(&fig1(), &caps()).unwrap());
        assert!(decide_irreducibility(&gm(), &caps()).unwrap());
        let (g, _) = reduction_irred(&[eps_only()]).unwrap();
        assert!(!decide_irreducibility(&g, &caps()).unwrap());
    }

    #[test]
    fn subshift_examples() {
        assert!(decide_subshift(&gm(), &full1(), &caps()).unwrap());
        assert_eq!(subshift_witness(&full1(), &gm(), &caps()).unwrap(), Some(w("1 1")));
        assert!(decide_subshift(&fig1(), &h_fig1(), &caps()).unwrap());
    }

    #[test]
    fn equality_examples() {
        assert!(decide_equality(&fig1(), &h_fig1(), &caps()).unwrap());
        assert!(!decide_equality(&gm(), &ev(), &caps()).unwrap());
        assert!(decide_equality(&p2(), &p2(), &caps()).unwrap());
    }

    #[test]
    fn shortest_sync_examples() {
        assert_eq!(shortest_sync_word(&gm(), &caps()).unwrap(), Some(w("0")));
        assert_eq!(shortest_sync_word(&p2(), &caps()).unwrap(), None);
        let g = reduction_sync(&family_mik(1)).unwrap();
        assert_eq!(shortest_sync_word(&g, &caps()).unwrap().unwrap().len(), 4);
    }

    #[test]
    fn minimality_examples() {
        assert!(decide_minimality(&full1(), 1, &caps()).unwrap());
        assert!(!decide_minimality(&gm(), 1, &caps()).unwrap());
        let (g, _) = reduction_sft(&[all_a()]).unwrap();
        assert!(decide_minimality(&g, 2, &caps()).unwrap());
        let (g, _) = reduction_sft(&[eps_only()]).unwrap();
        assert!(!decide_minimality(&g, 2, &caps()).unwrap());
        assert!(decide_minimality(&dup_gm(), 2, &caps()).unwrap());
        let tight = Caps { states: 1 << 18, candidates: 10 };
        assert!(matches!(decide_minimality(&dup_gm(), 2, &tight), Err(Error::CapExceeded { .. })));
    }
}
