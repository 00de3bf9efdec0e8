//! Command-line front end.
//!
//! [`run`] parses arguments, reads inputs and returns the exit status with
//! the rendered report, so the binary is a thin wrapper and tests can drive
//! it in-process. Exit status 0 means the property holds or output was
//! produced, 1 means it fails, 2 means an error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write;
use std::io::Read;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::classify;
use crate::constructions::{self, Dfa, MultiEntryDfa};
use crate::error::Error;
use crate::exact::{self, Caps};
use crate::format::{self, Document};
use crate::graph::{LabeledGraph, VertexId, Word};
use crate::oracle;
use crate::sync;

/// Version of the `--json` object layout.
pub const JSON_SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "sofic", version, about = "Deterministic presentations of sofic shifts")]
struct Cli {
    /// Emit one JSON object {result, witness?, details} instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Cap on subset states and monoid elements for exact procedures.
    #[arg(long, global = true, default_value_t = Caps::default().states)]
    max_states: usize,
    /// Cap on candidate presentations enumerated by `minimal`.
    #[arg(long, global = true, default_value_t = Caps::default().candidates)]
    max_candidates: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct One {
    /// Input file, `-` for stdin.
    #[arg(default_value = "-")]
    file: String,
}

#[derive(Args, Debug)]
struct Two {
    /// Two files, or one file holding two graph documents.
    #[arg(num_args = 1..=2, default_value = "-")]
    files: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report determinism, essentiality, irreducibility and synchronization.
    Check(One),
    /// Print the essential part.
    Essential(One),
    /// List irreducible components with initial/terminal flags.
    Components(One),
    /// Find a synchronizing word.
    Syncword {
        #[command(flatten)]
        input: One,
        /// Shortest word by subset search; any deterministic graph.
        #[arg(long)]
        exact: bool,
    },
    /// Find a word of shift(G) that is not in shift(H), G irreducible.
    Separate(Two),
    /// Decide shift(G) ⊆ shift(H).
    Subshift {
        #[command(flatten)]
        input: Two,
        #[arg(long)]
        exact: bool,
    },
    /// Decide shift(G) = shift(H).
    Equal {
        #[command(flatten)]
        input: Two,
        #[arg(long)]
        exact: bool,
    },
    /// Decide whether the shift is of finite type.
    IsSft {
        #[command(flatten)]
        input: One,
        #[arg(long)]
        exact: bool,
    },
    /// Decide whether the shift is irreducible.
    IsIrreducible {
        #[command(flatten)]
        input: One,
        #[arg(long)]
        exact: bool,
    },
    /// Decide whether some synchronizing deterministic presentation exists.
    HasSdp(One),
    /// Decide whether the graph presents the full shift on its alphabet.
    Universal(One),
    /// Decide whether some deterministic presentation has at most K vertices.
    Minimal {
        #[command(flatten)]
        input: One,
        #[arg(long)]
        k: usize,
    },
    /// Find a word sending every vertex to the given vertex.
    SyncTo {
        #[command(flatten)]
        input: One,
        #[arg(long)]
        vertex: String,
    },
    /// Print the follower separation.
    FollowerSep(One),
    /// Decide isomorphism and print the vertex map.
    Iso(Two),
    /// Generate instances.
    #[command(subcommand)]
    Gen(Gen),
    /// Brute-force reference computations.
    #[command(subcommand)]
    Oracle(OracleCmd),
}

#[derive(Subcommand, Debug)]
enum Gen {
    /// DFA intersection nonemptiness to shift irreducibility (prints G and H).
    RedIrred(One),
    /// DFA union universality to SFT-ness (prints G and H).
    RedSft(One),
    /// DFA intersection nonemptiness to synchronization (prints G).
    RedSync(One),
    /// Multi-entry DFA to a graph with a synchronizing presentation question.
    SdpBlowup(One),
    /// The DFA family with shortest common word of length 2^K.
    Mik {
        #[arg(long)]
        k: usize,
    },
    /// The padded presentation with N vertices.
    Padded {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCmd {
    /// List the words of length at most L.
    Lang {
        #[command(flatten)]
        input: One,
        #[arg(long)]
        max_len: usize,
    },
    /// Shortest word accepted by every DFA.
    DfaInt(One),
    /// Decide whether every word is accepted by some DFA.
    DfaUnion(One),
}

/// Exit status and rendered streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    holds: Option<bool>,
    result: Value,
    witness: Option<Word>,
    details: Map<String, Value>,
    text: String,
}

impl Report {
    fn decision(holds: bool, witness: Option<Word>) -> Self {
        let mut text = holds.to_string();
        if let Some(w) = &witness {
            let _ = write!(text, "\nwitness: {w}");
        }
        Report {
            holds: Some(holds),
            result: Value::Bool(holds),
            witness,
            details: Map::new(),
            text,
        }
    }

    fn output(text: String, result: Value) -> Self {
        Report {
            holds: None,
            result,
            witness: None,
            details: Map::new(),
            text,
        }
    }

    fn detail(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.details.insert(key.to_string(), value.into());
        self
    }

    fn status(&self) -> i32 {
        if self.holds == Some(false) {
            1
        } else {
            0
        }
    }

    fn render(mut self, as_json: bool) -> String {
        if !as_json {
            let mut t = self.text;
            if !t.ends_with('\n') {
                t.push('\n');
            }
            return t;
        }
        self.details.insert("schema".into(), JSON_SCHEMA_VERSION.into());
        let mut obj = Map::new();
        obj.insert("result".into(), self.result);
        if let Some(w) = &self.witness {
            obj.insert("witness".into(), Value::String(tokens(w)));
        }
        obj.insert("details".into(), Value::Object(self.details));
        format!("{}\n", Value::Object(obj))
    }
}

/// Space-separated label tokens; the empty word is the empty string.
fn tokens(w: &Word) -> String {
    w.labels().iter().map(|l| l.as_str()).collect::<Vec<_>>().join(" ")
}

struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    cached: Option<String>,
}

impl Inputs<'_> {
    fn read(&mut self, path: &str) -> Result<String, String> {
        if path == "-" {
            if self.cached.is_none() {
                let mut s = String::new();
                self.stdin
                    .read_to_string(&mut s)
                    .map_err(|e| format!("<stdin>: {e}"))?;
                self.cached = Some(s);
            }
            return Ok(self.cached.clone().unwrap_or_default());
        }
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    }

    fn docs(&mut self, path: &str) -> Result<Vec<Document>, String> {
        let text = self.read(path)?;
        format::parse(&text).map_err(|e| format!("{}: {e}", display_path(path)))
    }

    fn graphs(&mut self, path: &str) -> Result<Vec<(String, LabeledGraph)>, String> {
        let graphs: Vec<_> = self
            .docs(path)?
            .into_iter()
            .filter_map(|d| match d {
                Document::Graph { name, graph } => Some((name, graph)),
                _ => None,
            })
            .collect();
        Ok(graphs)
    }

    fn one_graph(&mut self, path: &str) -> Result<(String, LabeledGraph), String> {
        self.graphs(path)?
            .into_iter()
            .next()
            .ok_or_else(|| format!("{}: no graph document", display_path(path)))
    }

    fn two_graphs(&mut self, files: &[String]) -> Result<(LabeledGraph, LabeledGraph), String> {
        match files {
            [a, b] => Ok((self.one_graph(a)?.1, self.one_graph(b)?.1)),
            [a] => {
                let mut gs = self.graphs(a)?.into_iter();
                match (gs.next(), gs.next()) {
                    (Some(g), Some(h)) => Ok((g.1, h.1)),
                    _ => Err(format!("{}: expected two graph documents", display_path(a))),
                }
            }
            _ => Err("expected one or two input files".into()),
        }
    }

    fn dfas(&mut self, path: &str) -> Result<Vec<Dfa>, String> {
        let mut out = Vec::new();
        for d in self.docs(path)? {
            match d {
                Document::Dfa { dfa, .. } => out.push(dfa),
                other => {
                    return Err(format!(
                        "{}: document {} is not a dfa",
                        display_path(path),
                        other.name()
                    ))
                }
            }
        }
        Ok(out)
    }

    fn medfa(&mut self, path: &str) -> Result<MultiEntryDfa, String> {
        for d in self.docs(path)? {
            match d {
                Document::MultiEntryDfa { dfa, .. } => return Ok(dfa),
                Document::Dfa { dfa, .. } => return Ok(MultiEntryDfa::from_dfa(&dfa)),
                Document::Graph { .. } => {}
            }
        }
        Err(format!("{}: no automaton document", display_path(path)))
    }
}

fn display_path(path: &str) -> &str {
    if path == "-" {
        "<stdin>"
    } else {
        path
    }
}

fn ctx(files: &[&str]) -> impl Fn(Error) -> String {
    let names: Vec<&str> = files.iter().map(|f| display_path(f)).collect();
    let names = names.join(", ");
    move |e| format!("{names}: {e}")
}

fn graph_doc(name: &str, g: &LabeledGraph) -> Report {
    let text = format::print_graph(name, g);
    Report::output(text.clone(), Value::String(text))
        .detail("vertices", g.num_vertices())
        .detail("edges", g.num_edges())
}

fn docs_report(docs: Vec<Document>) -> Report {
    let text = format::print_all(&docs);
    Report::output(text.clone(), Value::String(text)).detail("documents", docs.len())
}

fn names(vs: impl IntoIterator<Item = VertexId>) -> Vec<String> {
    vs.into_iter().map(|v| v.to_string()).collect()
}

fn execute(cli: &Cli, inputs: &mut Inputs) -> Result<Report, String> {
    let caps = Caps {
        states: cli.max_states,
        candidates: cli.max_candidates,
    };
    let report = match &cli.command {
        Command::Check(One { file }) => {
            let (name, g) = inputs.one_graph(file)?;
            let deterministic = g.is_deterministic();
            let essential = g.is_essential();
            let irreducible = g.is_irreducible();
            let synchronizing = if deterministic {
                Some(sync::is_synchronizing(&g).map_err(ctx(&[file]))?)
            } else {
                None
            };
            let sync_text = synchronizing.map_or("n/a".to_string(), |s| s.to_string());
            let text = format!(
                "graph {name}: {} vertices, {} edges\ndeterministic: {deterministic}\nessential: {essential}\nirreducible: {irreducible}\nsynchronizing: {sync_text}",
                g.num_vertices(),
                g.num_edges()
            );
            Report::output(text, json!({
                "deterministic": deterministic,
                "essential": essential,
                "irreducible": irreducible,
                "synchronizing": synchronizing,
            }))
            .detail("vertices", g.num_vertices())
            .detail("edges", g.num_edges())
        }
        Command::Essential(One { file }) => {
            let (name, g) = inputs.one_graph(file)?;
            graph_doc(&name, &g.essentialize())
        }
        Command::Components(One { file }) => {
            let (_, g) = inputs.one_graph(file)?;
            let comps = g.irreducible_components();
            let mut text = String::new();
            let mut arr = Vec::new();
            for (i, c) in comps.iter().enumerate() {
                let vs = names(c.vertices.iter().cloned());
                let mut flags = String::new();
                if c.initial {
                    flags.push_str(" initial");
                }
                if c.terminal {
                    flags.push_str(" terminal");
                }
                let _ = writeln!(text, "component {i}: {}{flags}", vs.join(" "));
                arr.push(json!({"vertices": vs, "initial": c.initial, "terminal": c.terminal}));
            }
            Report::output(text, Value::Array(arr)).detail("count", comps.len())
        }
        Command::Syncword { input, exact } => {
            let (_, g) = inputs.one_graph(&input.file)?;
            let w = if *exact {
                exact::shortest_sync_word(&g, &caps)
            } else {
                sync::synchronizing_word_irreducible(&g)
            }
            .map_err(ctx(&[&input.file]))?;
            let target = w.as_ref().and_then(|w| oracle::is_word_synchronizing(&g, w));
            let r = Report::decision(w.is_some(), w);
            match target {
                Some(t) => r.detail("target", t.to_string()),
                None => r,
            }
        }
        Command::Separate(Two { files }) => {
            let (g, h) = inputs.two_graphs(files)?;
            let w = sync::separating_word(&g, &h).map_err(ctx(&refs(files)))?;
            Report::decision(w.is_some(), w)
        }
        Command::Subshift { input, exact } => {
            let (g, h) = inputs.two_graphs(&input.files)?;
            let w = if *exact {
                exact::subshift_witness(&g, &h, &caps)
            } else {
                sync::separating_word(&g, &h)
            }
            .map_err(ctx(&refs(&input.files)))?;
            Report::decision(w.is_none(), w)
        }
        Command::Equal { input, exact } => {
            let (g, h) = inputs.two_graphs(&input.files)?;
            let c = ctx(&refs(&input.files));
            if *exact {
                let w = match exact::subshift_witness(&g, &h, &caps).map_err(&c)? {
                    Some(w) => Some((w, "left")),
                    None => exact::subshift_witness(&h, &g, &caps).map_err(&c)?.map(|w| (w, "right")),
                };
                let side = w.as_ref().map(|(_, s)| *s);
                let r = Report::decision(w.is_none(), w.map(|(w, _)| w));
                match side {
                    Some(s) => r.detail("witness_in", s),
                    None => r,
                }
            } else {
                Report::decision(classify::equal_sync(&g, &h).map_err(&c)?, None)
            }
        }
        Command::IsSft { input, exact } => {
            let (_, g) = inputs.one_graph(&input.file)?;
            let c = ctx(&[&input.file]);
            if *exact {
                Report::decision(exact::decide_sft(&g, &caps).map_err(&c)?, None)
            } else {
                let holds = classify::is_sft_sync(&g).map_err(&c)?;
                let r = Report::decision(holds, None);
                if holds {
                    let fs = classify::follower_separation(&g).map_err(&c)?;
                    r.detail("step_bound", classify::m_step_bound(&fs).map_err(&c)?)
                } else {
                    r
                }
            }
        }
        Command::IsIrreducible { input, exact } => {
            let (_, g) = inputs.one_graph(&input.file)?;
            let holds = if *exact {
                exact::decide_irreducibility(&g, &caps)
            } else {
                classify::is_irreducible_shift_sync(&g)
            }
            .map_err(ctx(&[&input.file]))?;
            Report::decision(holds, None)
        }
        Command::HasSdp(One { file }) => {
            let (_, g) = inputs.one_graph(file)?;
            Report::decision(exact::decide_sdp_exists(&g, &caps).map_err(ctx(&[file]))?, None)
        }
        Command::Universal(One { file }) => {
            let (_, g) = inputs.one_graph(file)?;
            Report::decision(classify::is_universal(&g).map_err(ctx(&[file]))?, None)
        }
        Command::Minimal { input, k } => {
            let (_, g) = inputs.one_graph(&input.file)?;
            let holds = exact::decide_minimality(&g, *k, &caps).map_err(ctx(&[&input.file]))?;
            Report::decision(holds, None).detail("k", *k)
        }
        Command::SyncTo { input, vertex } => {
            let (_, g) = inputs.one_graph(&input.file)?;
            let c = ctx(&[&input.file]);
            let r = VertexId::new(vertex).map_err(&c)?;
            let w = sync::sync_word_to_vertex(&g, &r).map_err(&c)?;
            Report::decision(true, Some(w)).detail("target", vertex.as_str())
        }
        Command::FollowerSep(One { file }) => {
            let (name, g) = inputs.one_graph(file)?;
            graph_doc(&name, &classify::follower_separation(&g).map_err(ctx(&[file]))?)
        }
        Command::Iso(Two { files }) => {
            let (g, h) = inputs.two_graphs(files)?;
            let map = classify::are_isomorphic(&g, &h).map_err(ctx(&refs(files)))?;
            let mut r = Report::decision(map.is_some(), None);
            if let Some(map) = map {
                let m: BTreeMap<String, String> = map.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
                for (a, b) in &m {
                    let _ = write!(r.text, "\n{a} -> {b}");
                }
                r = r.detail("mapping", json!(m));
            }
            r
        }
        Command::Gen(what) => gen(what, inputs)?,
        Command::Oracle(what) => run_oracle(what, inputs)?,
    };
    Ok(report)
}

fn refs(files: &[String]) -> Vec<&str> {
    files.iter().map(String::as_str).collect()
}

fn graph_docs(pairs: &[(&str, LabeledGraph)]) -> Report {
    docs_report(
        pairs
            .iter()
            .map(|(n, g)| Document::Graph {
                name: n.to_string(),
                graph: g.clone(),
            })
            .collect(),
    )
}

fn gen(what: &Gen, inputs: &mut Inputs) -> Result<Report, String> {
    Ok(match what {
        Gen::RedIrred(One { file }) => {
            let (g, h) = constructions::reduction_irred(&inputs.dfas(file)?).map_err(ctx(&[file]))?;
            graph_docs(&[("G", g), ("H", h)])
        }
        Gen::RedSft(One { file }) => {
            let (g, h) = constructions::reduction_sft(&inputs.dfas(file)?).map_err(ctx(&[file]))?;
            graph_docs(&[("G", g), ("H", h)])
        }
        Gen::RedSync(One { file }) => {
            let g = constructions::reduction_sync(&inputs.dfas(file)?).map_err(ctx(&[file]))?;
            graph_docs(&[("G", g)])
        }
        Gen::SdpBlowup(One { file }) => {
            let g = constructions::sdp_blowup(&inputs.medfa(file)?).map_err(ctx(&[file]))?;
            graph_docs(&[("G", g)])
        }
        Gen::Mik { k } => docs_report(
            constructions::family_mik(*k)
                .into_iter()
                .enumerate()
                .map(|(i, dfa)| Document::Dfa {
                    name: format!("M{i}"),
                    dfa,
                })
                .collect(),
        ),
        Gen::Padded { n } => {
            let g = constructions::padded_family_gn(*n).map_err(|e| e.to_string())?;
            graph_docs(&[(&format!("G{n}"), g)])
        }
    })
}

fn run_oracle(what: &OracleCmd, inputs: &mut Inputs) -> Result<Report, String> {
    Ok(match what {
        OracleCmd::Lang { input, max_len } => {
            let (_, g) = inputs.one_graph(&input.file)?;
            let mut words: Vec<Word> = oracle::language_upto(&g, *max_len).into_iter().collect();
            words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            let text: Vec<String> = words.iter().map(|w| w.to_string()).collect();
            let list: Vec<String> = words.iter().map(tokens).collect();
            Report::output(text.join("\n"), json!(list)).detail("count", words.len())
        }
        OracleCmd::DfaInt(One { file }) => {
            let dfas = inputs.dfas(file)?;
            let w = oracle::dfa_intersection_shortest(&dfas);
            let mut r = Report::decision(w.is_some(), None);
            match w {
                Some(w) => {
                    r.text = format!("nonempty: shortest common word has length {}: {w}", w.len());
                    r.details.insert("length".into(), w.len().into());
                    r.witness = Some(w);
                }
                None => r.text = "empty: no word is accepted by every automaton".into(),
            }
            r
        }
        OracleCmd::DfaUnion(One { file }) => {
            let dfas = inputs.dfas(file)?;
            let (universal, w) = oracle::dfa_union_universal(&dfas);
            Report::decision(universal, w)
        }
    })
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if status == 0 {
                Outcome { status, stdout: text, stderr: String::new() }
            } else {
                Outcome { status, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut inputs = Inputs { stdin, cached: None };
    match execute(&cli, &mut inputs) {
        Ok(report) => Outcome {
            status: report.status(),
            stdout: report.render(cli.json),
            stderr: String::new(),
        },
        Err(message) => Outcome {
            status: 2,
            stdout: if cli.json {
                format!("{}\n", json!({"result": Value::Null, "details": {"error": message, "schema": JSON_SCHEMA_VERSION}}))
            } else {
                String::new()
            },
            stderr: format!("error: {message}\n"),
        },
    }
}
