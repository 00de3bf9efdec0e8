//! Line-oriented text format for graphs and automata.
//!
//! ```text
//! # golden mean shift
//! graph GM
//! vertex A
//! vertex B
//! edge A 0 A
//! edge A 1 B
//! edge B 0 A
//!
//! dfa D
//! vertex s
//! start s
//! accept s
//! edge s a s
//! ```
//!
//! A document starts with `graph NAME`, `dfa NAME` or `medfa NAME` and runs
//! to the next header. Automata also take `start` (repeatable for `medfa`,
//! in entry order) and `accept NAME...`; their alphabet is the set of labels
//! on their edges, and every state needs one edge per label.

use std::fmt::Write;

use crate::constructions::{Dfa, MultiEntryDfa};
use crate::error::{Error, Result};
use crate::graph::{Edge, Label, LabeledGraph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Graph { name: String, graph: LabeledGraph },
    Dfa { name: String, dfa: Dfa },
    MultiEntryDfa { name: String, dfa: MultiEntryDfa },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Graph,
    Dfa,
    MultiEntryDfa,
}

impl Document {
    pub fn name(&self) -> &str {
        match self {
            Document::Graph { name, .. } | Document::Dfa { name, .. } | Document::MultiEntryDfa { name, .. } => name,
        }
    }

    pub fn kind(&self) -> Kind {
        match self {
            Document::Graph { .. } => Kind::Graph,
            Document::Dfa { .. } => Kind::Dfa,
            Document::MultiEntryDfa { .. } => Kind::MultiEntryDfa,
        }
    }
}

struct Pending {
    kind: Kind,
    name: String,
    header_line: usize,
    vertices: Vec<(usize, VertexId)>,
    edges: Vec<(usize, VertexId, Label, VertexId)>,
    starts: Vec<(usize, VertexId)>,
    accepts: Vec<(usize, VertexId)>,
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn at_line<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::InvalidToken(..) | Error::InvalidAutomaton(_) => err(line, e.to_string()),
        other => other,
    })
}

impl Pending {
    fn finish(self) -> Result<Document> {
        let mut names: Vec<&VertexId> = self.vertices.iter().map(|(_, v)| v).collect();
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0].to_string()));
        }
        let known = |v: &VertexId| names.binary_search(&v).is_ok();
        for (_, s, _, d) in &self.edges {
            for v in [s, d] {
                if !known(v) {
                    return Err(Error::UnknownVertex(v.to_string()));
                }
            }
        }
        for (_, v) in self.starts.iter().chain(&self.accepts) {
            if !known(v) {
                return Err(Error::UnknownVertex(v.to_string()));
            }
        }
        let vertices: Vec<VertexId> = self.vertices.iter().map(|(_, v)| v.clone()).collect();
        let name = self.name;
        match self.kind {
            Kind::Graph => {
                let edges = self.edges.into_iter().map(|(_, src, label, dst)| Edge { src, label, dst });
                Ok(Document::Graph {
                    name,
                    graph: LabeledGraph::new(vertices, edges)?,
                })
            }
            Kind::Dfa | Kind::MultiEntryDfa => {
                let mut alphabet: Vec<Label> = self.edges.iter().map(|e| e.2.clone()).collect();
                alphabet.sort();
                alphabet.dedup();
                let transitions = self.edges.into_iter().map(|(_, s, l, d)| (s, l, d)).collect();
                let accepts: Vec<VertexId> = self.accepts.into_iter().map(|(_, v)| v).collect();
                let starts: Vec<VertexId> = self.starts.into_iter().map(|(_, v)| v).collect();
                let line = self.header_line;
                if self.kind == Kind::Dfa {
                    let [start] = &starts[..] else {
                        return Err(err(line, "a dfa needs exactly one start state"));
                    };
                    let dfa = at_line(line, Dfa::new(vertices, alphabet, transitions, start, &accepts))?;
                    Ok(Document::Dfa { name, dfa })
                } else {
                    if starts.is_empty() {
                        return Err(err(line, "a medfa needs at least one start state"));
                    }
                    let dfa = at_line(line, MultiEntryDfa::new(vertices, alphabet, transitions, &starts, &accepts))?;
                    Ok(Document::MultiEntryDfa { name, dfa })
                }
            }
        }
    }
}

/// Parses every document in `text`.
pub fn parse(text: &str) -> Result<Vec<Document>> {
    let mut docs = Vec::new();
    let mut cur: Option<Pending> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        let Some((&head, args)) = toks.split_first() else {
            continue;
        };
        let kind = match head {
            "graph" => Some(Kind::Graph),
            "dfa" => Some(Kind::Dfa),
            "medfa" => Some(Kind::MultiEntryDfa),
            _ => None,
        };
        if let Some(kind) = kind {
            let [name] = args else {
                return Err(err(line, format!("expected `{head} NAME`")));
            };
            if let Some(p) = cur.take() {
                docs.push(p.finish()?);
            }
            cur = Some(Pending {
                kind,
                name: name.to_string(),
                header_line: line,
                vertices: Vec::new(),
                edges: Vec::new(),
                starts: Vec::new(),
                accepts: Vec::new(),
            });
            continue;
        }
        let Some(p) = cur.as_mut() else {
            return Err(err(line, format!("`{head}` before any document header")));
        };
        let vid = |s: &str| at_line(line, VertexId::new(s));
        match (head, args) {
            ("vertex", [v]) => p.vertices.push((line, vid(v)?)),
            ("edge", [s, l, d]) => p.edges.push((line, vid(s)?, at_line(line, Label::new(l))?, vid(d)?)),
            ("start", [v]) if p.kind != Kind::Graph => p.starts.push((line, vid(v)?)),
            ("accept", vs) if p.kind != Kind::Graph => {
                for v in vs {
                    p.accepts.push((line, vid(v)?));
                }
            }
            ("vertex" | "edge" | "start", _) => return Err(err(line, format!("wrong number of fields for `{head}`"))),
            _ => return Err(err(line, format!("unknown directive `{head}`"))),
        }
    }
    if let Some(p) = cur.take() {
        docs.push(p.finish()?);
    }
    Ok(docs)
}

fn write_graph_body(out: &mut String, vertices: &[VertexId], edges: impl Iterator<Item = (VertexId, Label, VertexId)>) {
    for v in vertices {
        let _ = writeln!(out, "vertex {v}");
    }
    for (s, l, d) in edges {
        let _ = writeln!(out, "edge {s} {l} {d}");
    }
}

/// Canonical text of a graph document.
pub fn print_graph(name: &str, g: &LabeledGraph) -> String {
    let mut out = format!("graph {name}\n");
    write_graph_body(&mut out, g.vertices(), g.edges().map(|e| (e.src, e.label, e.dst)));
    out
}

/// Canonical text of one document.
pub fn print(doc: &Document) -> String {
    match doc {
        Document::Graph { name, graph } => print_graph(name, graph),
        Document::Dfa { name, dfa } => {
            let mut out = format!("dfa {name}\n");
            write_automaton(&mut out, dfa, &[dfa.start().clone()]);
            out
        }
        Document::MultiEntryDfa { name, dfa } => {
            let mut out = format!("medfa {name}\n");
            write_automaton(&mut out, dfa, &dfa.starts());
            out
        }
    }
}

fn write_automaton(out: &mut String, a: &crate::constructions::Automaton, starts: &[VertexId]) {
    for v in a.states() {
        let _ = writeln!(out, "vertex {v}");
    }
    for s in starts {
        let _ = writeln!(out, "start {s}");
    }
    let acc = a.accepting();
    if !acc.is_empty() {
        let names: Vec<String> = acc.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "accept {}", names.join(" "));
    }
    let mut edges: Vec<_> = a.transitions().collect();
    edges.sort();
    for (s, l, d) in edges {
        let _ = writeln!(out, "edge {s} {l} {d}");
    }
}

/// Canonical text of several documents, separated by blank lines.
pub fn print_all(docs: &[Document]) -> String {
    docs.iter().map(print).collect::<Vec<_>>().join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn parse_graph() {
        let docs = parse("graph FULL1\nvertex v\nedge v 0 v\nedge v 1 v").unwrap();
        assert_eq!(docs, vec![Document::Graph { name: "FULL1".into(), graph: full1() }]);
    }

    #[test]
    fn parse_dfa() {
        let docs = parse("dfa D\nvertex a\nstart a\naccept a\nedge a x a").unwrap();
        let Document::Dfa { dfa, .. } = &docs[0] else { panic!("expected a dfa") };
        assert_eq!(dfa.num_states(), 1);
        assert!(dfa.accepts(&crate::Word::parse("x x").unwrap()));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            parse("graph G\nvertex a\nedge a x b"),
            Err(Error::UnknownVertex("b".into()))
        );
        assert_eq!(parse("graph G\nvertex a\nvertex a"), Err(Error::DuplicateVertex("a".into())));
        assert!(matches!(parse("graph G\nfoo a"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("vertex a"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("graph G\nedge a b"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("graph G\nstart a"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(
            parse("dfa D\nvertex a\nvertex b\nstart a\nedge a x b"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn round_trip() {
        let text = print_all(&[
            Document::Graph { name: "FIG1".into(), graph: fig1() },
            Document::Graph { name: "EMPTY".into(), graph: LabeledGraph::empty() },
        ]);
        let docs = parse(&text).unwrap();
        assert_eq!(print_all(&docs), text);
        assert_eq!(docs.len(), 2);
    }

    #[test]
    fn comments_and_blank_lines() {
        let docs = parse("# header\n\ngraph G # trailing\nvertex v\nedge v a v # loop\n").unwrap();
        assert_eq!(docs.len(), 1);
    }
}
