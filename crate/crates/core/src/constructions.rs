//! Finite automata and instance generators: the three DFA-to-presentation
//! reductions, the multiple-entry blowup, a DFA family whose intersection has
//! only exponentially long words, and the padded family built from it.
//!
//! Reserved labels are the tokens [`LM`], [`RM`], [`ST`], [`TER`] and [`ELL`].
//! Embedded DFA states are named `state@i` for the `i`-th input automaton
//! (1-based); the added vertices are `p1, p2, ...`, `r1, r2, ...`, `t`,
//! `pstar`, `sstar` and `pad1, pad2, ...`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::graph::{Label, LabeledGraph, VertexId, Word};

/// Left marker.
pub const LM: &str = "lm";
/// Right marker.
pub const RM: &str = "rm";
/// Pre-initial loop label.
pub const ST: &str = "st";
/// Terminal loop label.
pub const TER: &str = "ter";
/// Delay label.
pub const ELL: &str = "ell";

fn label(s: &str) -> Label {
    Label::new(s).expect("reserved labels are valid")
}

fn vid(s: impl AsRef<str>) -> VertexId {
    VertexId::new(s.as_ref()).expect("generated names are valid")
}

/// A fully deterministic labeled graph with accepting states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automaton {
    states: Vec<VertexId>,
    alphabet: Vec<Label>,
    // delta[q * |alphabet| + a]
    delta: Vec<usize>,
    accepting: Vec<bool>,
}

impl Automaton {
    fn new(
        states: Vec<VertexId>,
        alphabet: Vec<Label>,
        transitions: Vec<(VertexId, Label, VertexId)>,
        accepting: &[VertexId],
    ) -> Result<Self> {
        let mut states = states;
        states.sort();
        if let Some(w) = states.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0].to_string()));
        }
        let mut alphabet = alphabet;
        alphabet.sort();
        alphabet.dedup();
        let m = alphabet.len();
        let find = |v: &VertexId| {
            states
                .binary_search(v)
                .map_err(|_| Error::UnknownVertex(v.to_string()))
        };
        let mut delta = vec![usize::MAX; states.len() * m];
        for (s, l, d) in &transitions {
            let (si, di) = (find(s)?, find(d)?);
            let a = alphabet
                .binary_search(l)
                .map_err(|_| Error::InvalidAutomaton(format!("label {l} is not in the alphabet")))?;
            let slot = &mut delta[si * m + a];
            if *slot != usize::MAX && *slot != di {
                return Err(Error::InvalidAutomaton(format!("two {l}-transitions leave {s}")));
            }
            *slot = di;
        }
        if let Some(k) = delta.iter().position(|&d| d == usize::MAX) {
            return Err(Error::InvalidAutomaton(format!(
                "no {}-transition leaves {}",
                alphabet[k % m],
                states[k / m]
            )));
        }
        let mut acc = vec![false; states.len()];
        for f in accepting {
            acc[find(f)?] = true;
        }
        Ok(Automaton {
            states,
            alphabet,
            delta,
            accepting: acc,
        })
    }

    pub fn states(&self) -> &[VertexId] {
        &self.states
    }

    pub fn alphabet(&self) -> &[Label] {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn is_accepting(&self, q: &VertexId) -> bool {
        self.index(q).is_some_and(|i| self.accepting[i])
    }

    pub fn accepting(&self) -> Vec<VertexId> {
        self.states
            .iter()
            .zip(&self.accepting)
            .filter(|(_, a)| **a)
            .map(|(q, _)| q.clone())
            .collect()
    }

    /// `δ(q, a)`; `None` if `q` or `a` is unknown.
    pub fn next(&self, q: &VertexId, a: &Label) -> Option<&VertexId> {
        let qi = self.index(q)?;
        let ai = self.alphabet.binary_search(a).ok()?;
        Some(&self.states[self.next_idx(qi, ai)])
    }

    /// All transitions `(q, a, δ(q, a))`.
    pub fn transitions(&self) -> impl Iterator<Item = (VertexId, Label, VertexId)> + '_ {
        let m = self.alphabet.len();
        self.delta.iter().enumerate().map(move |(k, &d)| {
            (self.states[k / m].clone(), self.alphabet[k % m].clone(), self.states[d].clone())
        })
    }

    /// The transition graph, without start or accepting information.
    pub fn to_graph(&self) -> LabeledGraph {
        let m = self.alphabet.len();
        let edges = self
            .delta
            .iter()
            .enumerate()
            .map(|(k, &d)| (k / m, self.alphabet[k % m].clone(), d))
            .collect();
        LabeledGraph::from_indexed(self.states.clone(), edges)
    }

    pub(crate) fn index(&self, q: &VertexId) -> Option<usize> {
        self.states.binary_search(q).ok()
    }

    pub(crate) fn next_idx(&self, q: usize, a: usize) -> usize {
        self.delta[q * self.alphabet.len() + a]
    }

    pub(crate) fn accepting_idx(&self, q: usize) -> bool {
        self.accepting[q]
    }

    fn run(&self, from: usize, w: &Word) -> Option<usize> {
        w.labels().iter().try_fold(from, |q, l| {
            let a = self.alphabet.binary_search(l).ok()?;
            Some(self.next_idx(q, a))
        })
    }

    fn reachable(&self, from: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.states.len()];
        let mut stack = from.to_vec();
        for &q in from {
            seen[q] = true;
        }
        while let Some(q) = stack.pop() {
            for a in 0..self.alphabet.len() {
                let d = self.next_idx(q, a);
                if !seen[d] {
                    seen[d] = true;
                    stack.push(d);
                }
            }
        }
        seen
    }

    /// Keeps only the states marked in `keep`, which must be closed under transitions.
    fn restrict(&self, keep: &[bool]) -> (Automaton, Vec<usize>) {
        let mut new_index = vec![usize::MAX; self.states.len()];
        let mut states = Vec::new();
        for (q, v) in self.states.iter().enumerate() {
            if keep[q] {
                new_index[q] = states.len();
                states.push(v.clone());
            }
        }
        let m = self.alphabet.len();
        let mut delta = Vec::with_capacity(states.len() * m);
        let mut accepting = Vec::with_capacity(states.len());
        for q in (0..self.states.len()).filter(|&q| keep[q]) {
            delta.extend((0..m).map(|a| new_index[self.next_idx(q, a)]));
            accepting.push(self.accepting[q]);
        }
        let a = Automaton {
            states,
            alphabet: self.alphabet.clone(),
            delta,
            accepting,
        };
        (a, new_index)
    }
}

/// A complete deterministic finite automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    automaton: Automaton,
    start: usize,
}

impl Deref for Dfa {
    type Target = Automaton;
    fn deref(&self) -> &Automaton {
        &self.automaton
    }
}

impl Dfa {
    /// Every `(state, label)` pair over `alphabet` needs exactly one transition.
    pub fn new(
        states: Vec<VertexId>,
        alphabet: Vec<Label>,
        transitions: Vec<(VertexId, Label, VertexId)>,
        start: &VertexId,
        accepting: &[VertexId],
    ) -> Result<Self> {
        let automaton = Automaton::new(states, alphabet, transitions, accepting)?;
        let start = automaton
            .index(start)
            .ok_or_else(|| Error::UnknownVertex(start.to_string()))?;
        Ok(Dfa { automaton, start })
    }

    /// Builds a DFA whose alphabet is the set of labels on `edges`.
    pub fn from_strs(states: &[&str], start: &str, accepting: &[&str], edges: &[(&str, &str, &str)]) -> Result<Self> {
        let (states, alphabet, transitions, accepting) = parts(states, accepting, edges)?;
        Dfa::new(states, alphabet, transitions, &VertexId::new(start)?, &accepting)
    }

    pub fn start(&self) -> &VertexId {
        &self.automaton.states[self.start]
    }

    pub(crate) fn start_idx(&self) -> usize {
        self.start
    }

    pub fn automaton(&self) -> &Automaton {
        &self.automaton
    }

    pub fn accepts(&self, w: &Word) -> bool {
        self.automaton
            .run(self.start, w)
            .is_some_and(|q| self.automaton.accepting[q])
    }

    /// The same DFA restricted to the states reachable from the start.
    pub fn restrict_reachable(&self) -> Dfa {
        let keep = self.automaton.reachable(&[self.start]);
        let (automaton, idx) = self.automaton.restrict(&keep);
        Dfa {
            automaton,
            start: idx[self.start],
        }
    }

    pub fn is_language_empty(&self) -> bool {
        let seen = self.automaton.reachable(&[self.start]);
        !seen.iter().zip(&self.automaton.accepting).any(|(s, a)| *s && *a)
    }

    /// The minimal complete DFA for the same language, by Moore refinement.
    /// Each state is named after the smallest member of its class.
    pub fn minimize(&self) -> Dfa {
        let r = self.restrict_reachable();
        let a = &r.automaton;
        let (n, m) = (a.num_states(), a.alphabet.len());
        let mut class: Vec<usize> = a.accepting.iter().map(|&f| usize::from(f)).collect();
        let mut count = class.iter().collect::<BTreeSet<_>>().len();
        loop {
            let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
            let mut next = vec![0; n];
            for q in 0..n {
                let mut sig = vec![class[q]];
                sig.extend((0..m).map(|x| class[a.next_idx(q, x)]));
                let fresh = ids.len();
                next[q] = *ids.entry(sig).or_insert(fresh);
            }
            class = next;
            if ids.len() == count {
                break;
            }
            count = ids.len();
        }
        let mut rep: HashMap<usize, usize> = HashMap::new();
        for q in 0..n {
            rep.entry(class[q]).or_insert(q);
        }
        let name = |q: usize| a.states[rep[&class[q]]].clone();
        let states: BTreeSet<VertexId> = (0..n).map(name).collect();
        let transitions = (0..n)
            .flat_map(|q| (0..m).map(move |x| (q, x)))
            .map(|(q, x)| (name(q), a.alphabet[x].clone(), name(a.next_idx(q, x))))
            .collect();
        let accepting: Vec<VertexId> = (0..n).filter(|&q| a.accepting[q]).map(name).collect();
        Dfa::new(
            states.into_iter().collect(),
            a.alphabet.clone(),
            transitions,
            &name(r.start),
            &accepting,
        )
        .expect("quotient of a complete DFA is complete")
    }
}

type Parts = (Vec<VertexId>, Vec<Label>, Vec<(VertexId, Label, VertexId)>, Vec<VertexId>);

fn parts(states: &[&str], accepting: &[&str], edges: &[(&str, &str, &str)]) -> Result<Parts> {
    let states = states.iter().map(|s| VertexId::new(s)).collect::<Result<Vec<_>>>()?;
    let accepting = accepting.iter().map(|s| VertexId::new(s)).collect::<Result<Vec<_>>>()?;
    let transitions = edges
        .iter()
        .map(|(s, l, d)| Ok((VertexId::new(s)?, Label::new(l)?, VertexId::new(d)?)))
        .collect::<Result<Vec<_>>>()?;
    let alphabet = transitions.iter().map(|t| t.1.clone()).collect::<BTreeSet<_>>();
    Ok((states, alphabet.into_iter().collect(), transitions, accepting))
}

/// A complete deterministic automaton with an ordered list of entry states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiEntryDfa {
    automaton: Automaton,
    starts: Vec<usize>,
}

impl Deref for MultiEntryDfa {
    type Target = Automaton;
    fn deref(&self) -> &Automaton {
        &self.automaton
    }
}

impl MultiEntryDfa {
    pub fn new(
        states: Vec<VertexId>,
        alphabet: Vec<Label>,
        transitions: Vec<(VertexId, Label, VertexId)>,
        starts: &[VertexId],
        accepting: &[VertexId],
    ) -> Result<Self> {
        let automaton = Automaton::new(states, alphabet, transitions, accepting)?;
        if starts.is_empty() {
            return Err(Error::InvalidAutomaton("no entry states".into()));
        }
        let starts = starts
            .iter()
            .map(|s| automaton.index(s).ok_or_else(|| Error::UnknownVertex(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(MultiEntryDfa { automaton, starts })
    }

    /// Builds an automaton whose alphabet is the set of labels on `edges`.
    pub fn from_strs(states: &[&str], starts: &[&str], accepting: &[&str], edges: &[(&str, &str, &str)]) -> Result<Self> {
        let (states, alphabet, transitions, accepting) = parts(states, accepting, edges)?;
        let starts = starts.iter().map(|s| VertexId::new(s)).collect::<Result<Vec<_>>>()?;
        MultiEntryDfa::new(states, alphabet, transitions, &starts, &accepting)
    }

    /// The one-entry automaton of a DFA.
    pub fn from_dfa(d: &Dfa) -> Self {
        MultiEntryDfa {
            automaton: d.automaton.clone(),
            starts: vec![d.start],
        }
    }

    pub fn starts(&self) -> Vec<VertexId> {
        self.starts.iter().map(|&s| self.automaton.states[s].clone()).collect()
    }

    pub fn automaton(&self) -> &Automaton {
        &self.automaton
    }

    /// Accepted iff some entry state reaches an accepting state on `w`.
    pub fn accepts(&self, w: &Word) -> bool {
        self.starts.iter().any(|&s| {
            self.automaton
                .run(s, w)
                .is_some_and(|q| self.automaton.accepting[q])
        })
    }

    /// Subset construction from the set of entries. States are named
    /// `{a,b,...}` after their members.
    pub fn determinize(&self) -> Dfa {
        let a = &self.automaton;
        let m = a.alphabet.len();
        let name = |set: &BTreeSet<usize>| {
            let inner: Vec<&str> = set.iter().map(|&q| a.states[q].as_str()).collect();
            vid(format!("{{{}}}", inner.join(",")))
        };
        let start: BTreeSet<usize> = self.starts.iter().copied().collect();
        let mut seen: HashMap<BTreeSet<usize>, VertexId> = HashMap::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone(), name(&start));
        queue.push_back(start.clone());
        let mut transitions = Vec::new();
        let mut accepting = Vec::new();
        while let Some(set) = queue.pop_front() {
            let here = seen[&set].clone();
            if set.iter().any(|&q| a.accepting[q]) {
                accepting.push(here.clone());
            }
            for x in 0..m {
                let next: BTreeSet<usize> = set.iter().map(|&q| a.next_idx(q, x)).collect();
                let there = seen
                    .entry(next.clone())
                    .or_insert_with(|| {
                        queue.push_back(next.clone());
                        name(&next)
                    })
                    .clone();
                transitions.push((here.clone(), a.alphabet[x].clone(), there));
            }
        }
        let states = seen.values().cloned().collect();
        Dfa::new(states, a.alphabet.clone(), transitions, &name(&start), &accepting)
            .expect("subset construction of a complete automaton is complete")
    }
}

fn shared_alphabet<'a>(autos: impl IntoIterator<Item = &'a Automaton>, reserved: &[&str]) -> Result<Vec<Label>> {
    let mut sigma: Option<&[Label]> = None;
    for a in autos {
        match sigma {
            None => sigma = Some(&a.alphabet),
            Some(s) if s != a.alphabet.as_slice() => {
                return Err(Error::InvalidAutomaton("automata must share one alphabet".into()))
            }
            _ => {}
        }
    }
    let sigma = sigma.unwrap_or(&[]).to_vec();
    if let Some(l) = sigma.iter().find(|l| reserved.contains(&l.as_str())) {
        return Err(Error::AlphabetClash(l.to_string()));
    }
    Ok(sigma)
}

/// Accumulates named vertices and edges for a generated graph.
#[derive(Default)]
struct Builder {
    names: Vec<VertexId>,
    index: HashMap<VertexId, usize>,
    edges: Vec<(usize, Label, usize)>,
}

impl Builder {
    fn vertex(&mut self, name: VertexId) -> usize {
        let next = self.names.len();
        *self.index.entry(name.clone()).or_insert_with(|| {
            self.names.push(name);
            next
        })
    }

    fn edge(&mut self, s: usize, l: &Label, d: usize) {
        self.edges.push((s, l.clone(), d));
    }

    /// Embeds the transition graph of `a` with states renamed `q@i`; returns
    /// the vertex of each state.
    fn embed(&mut self, a: &Automaton, i: usize) -> Vec<usize> {
        let ids: Vec<usize> = a
            .states
            .iter()
            .map(|q| self.vertex(vid(format!("{q}@{i}"))))
            .collect();
        for q in 0..a.num_states() {
            for (x, l) in a.alphabet.iter().enumerate() {
                self.edge(ids[q], l, ids[a.next_idx(q, x)]);
            }
        }
        ids
    }

    fn build(self) -> LabeledGraph {
        LabeledGraph::from_unsorted(self.names, self.edges)
    }
}

/// Reduction from DFA union-universality to containment, equality,
/// irreducibility and SDP existence.
///
/// Returns `(G, H)` with `H` the subgraph of `G` without `pstar`. The union of
/// the languages is everything iff `shift(G) = shift(H)`. Automata are first
/// restricted to reachable states and those with empty language dropped.
pub fn reduction_irred(dfas: &[Dfa]) -> Result<(LabeledGraph, LabeledGraph)> {
    let sigma = shared_alphabet(dfas.iter().map(|d| d.automaton()), &[LM, RM, ST, ELL])?;
    let kept: Vec<Dfa> = dfas
        .iter()
        .map(Dfa::restrict_reachable)
        .filter(|d| !d.is_language_empty())
        .collect();
    if kept.is_empty() {
        return Err(Error::AllLanguagesEmpty);
    }
    let (lm, rm, st, ell) = (label(LM), label(RM), label(ST), label(ELL));
    let mut b = Builder::default();
    let n = kept.len();
    let p: Vec<usize> = (1..=n).map(|i| b.vertex(vid(format!("p{i}")))).collect();
    for (i, d) in kept.iter().enumerate() {
        let ids = b.embed(d.automaton(), i + 1);
        let s = ids[d.start_idx()];
        b.edge(p[i], &st, p[i]);
        b.edge(p[i], &lm, s);
        for (q, &id) in ids.iter().enumerate() {
            if d.accepting_idx(q) {
                b.edge(id, &rm, p[0]);
            }
            b.edge(id, &ell, s);
        }
    }
    let pstar = b.vertex(vid("pstar"));
    let sstar = b.vertex(vid("sstar"));
    b.edge(pstar, &st, pstar);
    b.edge(pstar, &lm, sstar);
    b.edge(sstar, &rm, p[0]);
    for a in &sigma {
        b.edge(sstar, a, sstar);
    }
    for i in 0..n - 1 {
        b.edge(p[i], &ell, p[i + 1]);
    }
    b.edge(p[n - 1], &ell, sstar);
    let g = b.build();
    let rest: Vec<VertexId> = g.vertices().iter().filter(|v| v.as_str() != "pstar").cloned().collect();
    let h = g.induced_subgraph(&rest)?;
    Ok((g, h))
}

/// The fixed two-vertex graph `q1 → q2` paired with [`reduction_sft`].
pub fn reduction_sft_target(sigma: &[Label]) -> LabeledGraph {
    let mut b = Builder::default();
    let q1 = b.vertex(vid("q1"));
    let q2 = b.vertex(vid("q2"));
    for l in sigma.iter().cloned().chain([label(LM), label(ELL)]) {
        b.edge(q1, &l, q1);
    }
    b.edge(q1, &label(RM), q2);
    b.edge(q2, &label(TER), q2);
    b.build()
}

/// Reduction from DFA union-universality to SFT testing and minimality.
///
/// Returns `(G, H2)`; `shift(G) ⊆ shift(H2)` always, with equality iff the
/// union of the languages is everything.
pub fn reduction_sft(dfas: &[Dfa]) -> Result<(LabeledGraph, LabeledGraph)> {
    let sigma = shared_alphabet(dfas.iter().map(|d| d.automaton()), &[LM, RM, ELL, TER])?;
    let (lm, rm, ell, ter) = (label(LM), label(RM), label(ELL), label(TER));
    let mut b = Builder::default();
    let t = b.vertex(vid("t"));
    let sstar = b.vertex(vid("sstar"));
    b.edge(t, &ter, t);
    for a in sigma.iter().chain([&ell]) {
        b.edge(sstar, a, sstar);
    }
    b.edge(sstar, &rm, t);
    for (i, d) in dfas.iter().enumerate() {
        let ids = b.embed(d.automaton(), i + 1);
        let s = ids[d.start_idx()];
        for (q, &id) in ids.iter().enumerate() {
            b.edge(id, &lm, s);
            if d.accepting_idx(q) {
                b.edge(id, &rm, t);
            }
            b.edge(id, &ell, id);
        }
    }
    Ok((b.build(), reduction_sft_target(&sigma)))
}

/// Reduction from DFA intersection-nonemptiness to synchronizing-word
/// existence. A single automaton is duplicated; automata are restricted to
/// reachable states so the result is essential.
///
/// Synchronizing words are exactly `v lm w rm^k` with `k ≥ 1` and `w` in every
/// language.
pub fn reduction_sync(dfas: &[Dfa]) -> Result<LabeledGraph> {
    let sigma = shared_alphabet(dfas.iter().map(|d| d.automaton()), &[LM, RM])?;
    let mut list: Vec<Dfa> = dfas.iter().map(Dfa::restrict_reachable).collect();
    match list.len() {
        0 => return Err(Error::InvalidAutomaton("at least one automaton is needed".into())),
        1 => list.push(list[0].clone()),
        _ => {}
    }
    let (lm, rm) = (label(LM), label(RM));
    let mut b = Builder::default();
    let t = b.vertex(vid("t"));
    b.edge(t, &rm, t);
    for (i, d) in list.iter().enumerate() {
        let p = b.vertex(vid(format!("p{}", i + 1)));
        let r = b.vertex(vid(format!("r{}", i + 1)));
        b.edge(p, &rm, p);
        b.edge(r, &rm, r);
        for a in &sigma {
            b.edge(p, a, p);
        }
        let ids = b.embed(d.automaton(), i + 1);
        b.edge(p, &lm, ids[d.start_idx()]);
        for (q, &id) in ids.iter().enumerate() {
            b.edge(id, &rm, if d.accepting_idx(q) { t } else { r });
        }
    }
    Ok(b.build())
}

/// Embeds a multiple-entry automaton behind pre-initial vertices. Its minimal
/// synchronizing presentation follows the minimal DFA of the automaton's
/// language. The automaton is restricted to states reachable from its entries.
pub fn sdp_blowup(n: &MultiEntryDfa) -> Result<LabeledGraph> {
    shared_alphabet([n.automaton()], &[LM, RM, ST, TER])?;
    let keep = n.automaton.reachable(&n.starts);
    let (a, idx) = n.automaton.restrict(&keep);
    let (lm, rm, st, ter) = (label(LM), label(RM), label(ST), label(TER));
    let mut b = Builder::default();
    let ids = b.embed(&a, 1);
    let t = b.vertex(vid("t"));
    b.edge(t, &ter, t);
    for (i, &s) in n.starts.iter().enumerate() {
        let p = b.vertex(vid(format!("p{}", i + 1)));
        b.edge(p, &st, p);
        b.edge(p, &lm, ids[idx[s]]);
    }
    for (q, &id) in ids.iter().enumerate() {
        if a.accepting[q] {
            b.edge(id, &rm, t);
        }
    }
    Ok(b.build())
}

/// The `k + 1` three-state automata `M_{0,k}, ..., M_{k,k}` over `{0, ..., k}`
/// whose languages intersect only in words of length at least `2^k`.
pub fn family_mik(k: usize) -> Vec<Dfa> {
    let states = [vid("q0"), vid("q1"), vid("q*")];
    let alphabet: Vec<Label> = (0..=k).map(|j| label(&j.to_string())).collect();
    (0..=k)
        .map(|i| {
            let delta = |q: usize, j: usize| -> usize {
                match (i, q) {
                    (_, 2) => 2,
                    (0, 0) => if j == 0 { 1 } else { 2 },
                    (0, _) => if j != 0 { 1 } else { 2 },
                    (_, 0) => if j > i { 0 } else if j < i { 1 } else { 2 },
                    _ => if j == i { 0 } else if j > i { 1 } else { 2 },
                }
            };
            let transitions = (0..3)
                .flat_map(|q| (0..=k).map(move |j| (q, j)))
                .map(|(q, j)| (states[q].clone(), label(&j.to_string()), states[delta(q, j)].clone()))
                .collect();
            let accept = if i == 0 { &states[1] } else { &states[0] };
            Dfa::new(states.to_vec(), alphabet.clone(), transitions, &states[0], &[accept.clone()])
                .expect("family automata are complete")
        })
        .collect()
}

/// `w_0 = 0`, `w_{k+1}` = `w_k` with `k+1` inserted after every symbol.
pub fn word_wk(k: usize) -> Word {
    let mut w = vec![0usize];
    for j in 1..=k {
        w = w.into_iter().flat_map(|x| [x, j]).collect();
    }
    Word::from_labels(w.into_iter().map(|x| label(&x.to_string())).collect())
}

/// An `n`-vertex presentation whose shortest synchronizing word has length
/// `2^k + 2` with `k = ⌊(n − 6) / 5⌋`: [`reduction_sync`] on [`family_mik`]
/// plus padding vertices with loops on every symbol and `lm` and an `rm`-edge
/// to `t`.
pub fn padded_family_gn(n: usize) -> Result<LabeledGraph> {
    if n < 11 {
        return Err(Error::TooSmall(format!("n = {n}; at least 11 vertices are needed")));
    }
    let k = (n - 6) / 5;
    let base = reduction_sync(&family_mik(k))?;
    let pad = n - base.num_vertices();
    let t = base.index_of(&vid("t"))?;
    let mut names = base.vertices().to_vec();
    let mut edges = base.indexed_edges().to_vec();
    let mut loops: Vec<Label> = (0..=k).map(|j| label(&j.to_string())).collect();
    loops.push(label(LM));
    for j in 1..=pad {
        let v = names.len();
        names.push(vid(format!("pad{j}")));
        for l in &loops {
            edges.push((v, l.clone(), v));
        }
        edges.push((v, label(RM), t));
    }
    Ok(LabeledGraph::from_unsorted(names, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sync::is_synchronizing;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn all_a() -> Dfa {
        Dfa::from_strs(&["s"], "s", &["s"], &[("s", "a", "s")]).unwrap()
    }

    fn eps_only() -> Dfa {
        Dfa::from_strs(&["s", "d"], "s", &["s"], &[("s", "a", "d"), ("d", "a", "d")]).unwrap()
    }

    #[test]
    fn dfa_validation() {
        assert!(matches!(
            Dfa::from_strs(&["s", "d"], "s", &[], &[("s", "a", "d")]),
            Err(Error::InvalidAutomaton(_))
        ));
        assert!(matches!(
            Dfa::from_strs(&["s"], "x", &[], &[("s", "a", "s")]),
            Err(Error::UnknownVertex(_))
        ));
        assert!(eps_only().accepts(&Word::empty()));
        assert!(!eps_only().accepts(&w("a")));
    }

    #[test]
    fn reduction_irred_shape() {
        let (g, h) = reduction_irred(&[all_a()]).unwrap();
        let names: Vec<&str> = g.vertices().iter().map(|v| v.as_str()).collect();
        assert_eq!(names, vec!["p1", "pstar", "s@1", "sstar"]);
        assert!(g.is_deterministic() && g.is_essential());
        assert!(h.is_irreducible());
        assert!(is_synchronizing(&h).unwrap());
        let image = h.subset_step(&h.all_vertices(), &w("rm")).unwrap();
        assert_eq!(image.members().iter().map(|v| v.as_str()).collect::<Vec<_>>(), vec!["p1"]);
    }

    #[test]
    fn reduction_irred_preprocessing() {
        let empty = Dfa::from_strs(&["s"], "s", &[], &[("s", "a", "s")]).unwrap();
        assert_eq!(reduction_irred(&[empty.clone()]), Err(Error::AllLanguagesEmpty));
        let (g, _) = reduction_irred(&[empty, all_a()]).unwrap();
        assert_eq!(g.num_vertices(), 4);
        let clash = Dfa::from_strs(&["s"], "s", &["s"], &[("s", "st", "s")]).unwrap();
        assert_eq!(reduction_irred(&[clash]), Err(Error::AlphabetClash("st".into())));
    }

    #[test]
    fn reduction_sft_shape() {
        let (g, h2) = reduction_sft(&[eps_only()]).unwrap();
        assert!(g.is_deterministic() && g.is_essential());
        assert_eq!(g.num_vertices(), 4);
        assert_eq!(h2.num_vertices(), 2);
        assert_eq!(h2.num_edges(), 5);
    }

    #[test]
    fn reduction_sync_shape() {
        let g = reduction_sync(&[all_a()]).unwrap();
        assert_eq!(g.num_vertices(), 7);
        assert!(g.is_deterministic() && g.is_essential());
        for k in 1..4 {
            let g = reduction_sync(&family_mik(k)).unwrap();
            assert_eq!(g.num_vertices(), 5 * k + 6);
            assert!(g.is_essential());
        }
        assert_eq!(reduction_sync(&family_mik(0)).unwrap().num_vertices(), 11);
    }

    #[test]
    fn blowup_shape() {
        let g = sdp_blowup(&MultiEntryDfa::from_dfa(&all_a())).unwrap();
        assert_eq!(g.num_vertices(), 3);
        assert!(g.is_deterministic() && g.is_essential());
    }

    #[test]
    fn mik_tables() {
        let m = family_mik(3);
        assert_eq!(m.len(), 4);
        let q = |s: &str| VertexId::new(s).unwrap();
        let l = |s: &str| Label::new(s).unwrap();
        let m1 = &m[1];
        assert_eq!(m1.next(&q("q0"), &l("0")), Some(&q("q1")));
        assert_eq!(m1.next(&q("q1"), &l("1")), Some(&q("q0")));
        for j in ["2", "3"] {
            assert_eq!(m1.next(&q("q0"), &l(j)), Some(&q("q0")));
            assert_eq!(m1.next(&q("q1"), &l(j)), Some(&q("q1")));
        }
        assert_eq!(m1.next(&q("q0"), &l("1")), Some(&q("q*")));
        assert_eq!(m[2].next(&q("q0"), &l("1")), Some(&q("q1")));
        assert_eq!(m[3].next(&q("q1"), &l("3")), Some(&q("q0")));
        assert_eq!(m[0].next(&q("q1"), &l("3")), Some(&q("q1")));
        assert!(family_mik(0)[0].accepts(&w("0")));
    }

    #[test]
    fn wk_words() {
        assert_eq!(word_wk(0), w("0"));
        assert_eq!(word_wk(1), w("0 1"));
        assert_eq!(word_wk(2), w("0 2 1 2"));
        for k in 0..6 {
            let wk = word_wk(k);
            assert_eq!(wk.len(), 1 << k);
            assert!(family_mik(k).iter().all(|d| d.accepts(&wk)));
        }
    }

    #[test]
    fn padded_sizes() {
        assert_eq!(padded_family_gn(11).unwrap().num_vertices(), 11);
        assert_eq!(padded_family_gn(13).unwrap().num_vertices(), 13);
        assert_eq!(padded_family_gn(16).unwrap().num_vertices(), 16);
        assert!(padded_family_gn(16).unwrap().is_essential());
        assert!(matches!(padded_family_gn(10), Err(Error::TooSmall(_))));
    }

    #[test]
    fn determinize_and_minimize() {
        let n = MultiEntryDfa::from_strs(
            &["x", "y"],
            &["x", "y"],
            &["x"],
            &[("x", "a", "y"), ("y", "a", "x")],
        )
        .unwrap();
        let d = n.determinize();
        assert_eq!(d.num_states(), 1);
        assert!(d.accepts(&w("a")) && d.accepts(&Word::empty()));
        let m = eps_only().minimize();
        assert_eq!(m.num_states(), 2);
        let redundant = Dfa::from_strs(
            &["a", "b"],
            "a",
            &["a", "b"],
            &[("a", "x", "b"), ("b", "x", "a")],
        )
        .unwrap();
        assert_eq!(redundant.minimize().num_states(), 1);
    }
}
