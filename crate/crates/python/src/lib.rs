//! Python bindings for the `sofic` crate.
//!
//! Graphs are built from vertex names and `(src, label, dst)` triples, words
//! are lists of label strings, and every decision procedure is a module-level
//! function. Library errors raise `sofic_py.SoficError`.

use std::collections::BTreeMap;
use std::io::Cursor;

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use sofic::classify;
use sofic::constructions::{self, Dfa as CoreDfa};
use sofic::exact::{self, Caps};
use sofic::format::{self, Document};
use sofic::sync;
use sofic::{Edge, Label, LabeledGraph, VertexId, Word};

create_exception!(sofic_py, SoficError, PyException);

fn err(e: sofic::Error) -> PyErr {
    SoficError::new_err(e.to_string())
}

fn vid(s: &str) -> PyResult<VertexId> {
    VertexId::new(s).map_err(err)
}

fn word(labels: Vec<String>) -> PyResult<Word> {
    labels
        .iter()
        .map(|l| Label::new(l))
        .collect::<sofic::Result<Vec<_>>>()
        .map(Word::from_labels)
        .map_err(err)
}

fn labels(w: &Word) -> Vec<String> {
    w.labels().iter().map(|l| l.to_string()).collect()
}

fn caps(max_states: Option<usize>, max_candidates: Option<usize>) -> Caps {
    let d = Caps::default();
    Caps {
        states: max_states.unwrap_or(d.states),
        candidates: max_candidates.unwrap_or(d.candidates),
    }
}

/// An edge-labeled directed graph.
#[pyclass(name = "Graph", module = "sofic_py", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: LabeledGraph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(vertices: Vec<String>, edges: Vec<(String, String, String)>) -> PyResult<Self> {
        let vs = vertices.iter().map(|v| vid(v)).collect::<PyResult<Vec<_>>>()?;
        let es = edges
            .iter()
            .map(|(s, l, d)| {
                Ok(Edge {
                    src: vid(s)?,
                    label: Label::new(l).map_err(err)?,
                    dst: vid(d)?,
                })
            })
            .collect::<PyResult<Vec<_>>>()?;
        Ok(PyGraph {
            inner: LabeledGraph::new(vs, es).map_err(err)?,
        })
    }

    /// Every graph document in `text`, in order.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Vec<PyGraph>> {
        Ok(format::parse(text)
            .map_err(err)?
            .into_iter()
            .filter_map(|d| match d {
                Document::Graph { graph, .. } => Some(PyGraph { inner: graph }),
                _ => None,
            })
            .collect())
    }

    fn to_text(&self, name: &str) -> String {
        format::print_graph(name, &self.inner)
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.inner.vertices().iter().map(|v| v.to_string()).collect()
    }

    #[getter]
    fn edges(&self) -> Vec<(String, String, String)> {
        self.inner
            .edges()
            .map(|e| (e.src.to_string(), e.label.to_string(), e.dst.to_string()))
            .collect()
    }

    #[getter]
    fn alphabet(&self) -> Vec<String> {
        self.inner.alphabet().iter().map(|l| l.to_string()).collect()
    }

    fn is_deterministic(&self) -> bool {
        self.inner.is_deterministic()
    }

    fn is_essential(&self) -> bool {
        self.inner.is_essential()
    }

    fn is_irreducible(&self) -> bool {
        self.inner.is_irreducible()
    }

    fn essentialize(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.essentialize(),
        }
    }

    /// `q · w`, or `None` when the path does not exist.
    fn step(&self, q: &str, w: Vec<String>) -> PyResult<Option<String>> {
        Ok(self.inner.step(&vid(q)?, &word(w)?).map_err(err)?.map(|v| v.to_string()))
    }

    /// Each irreducible component as `(vertices, initial, terminal)`.
    fn components(&self) -> Vec<(Vec<String>, bool, bool)> {
        self.inner
            .irreducible_components()
            .into_iter()
            .map(|c| (c.vertices.iter().map(|v| v.to_string()).collect(), c.initial, c.terminal))
            .collect()
    }

    fn __len__(&self) -> usize {
        self.inner.num_vertices()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph({} vertices, {} edges)",
            self.inner.num_vertices(),
            self.inner.num_edges()
        )
    }
}

/// A complete deterministic finite automaton.
#[pyclass(name = "Dfa", module = "sofic_py", frozen, from_py_object)]
#[derive(Clone)]
struct PyDfa {
    inner: CoreDfa,
}

#[pymethods]
impl PyDfa {
    /// The alphabet is the set of labels on `edges`; every state needs one edge per label.
    #[new]
    fn new(states: Vec<String>, start: &str, accepting: Vec<String>, edges: Vec<(String, String, String)>) -> PyResult<Self> {
        let states: Vec<&str> = states.iter().map(String::as_str).collect();
        let accepting: Vec<&str> = accepting.iter().map(String::as_str).collect();
        let edges: Vec<(&str, &str, &str)> = edges.iter().map(|(s, l, d)| (s.as_str(), l.as_str(), d.as_str())).collect();
        Ok(PyDfa {
            inner: CoreDfa::from_strs(&states, start, &accepting, &edges).map_err(err)?,
        })
    }

    fn accepts(&self, w: Vec<String>) -> PyResult<bool> {
        Ok(self.inner.accepts(&word(w)?))
    }

    fn __repr__(&self) -> String {
        format!("Dfa({} states)", self.inner.num_states())
    }
}

fn graphs(pair: (LabeledGraph, LabeledGraph)) -> (PyGraph, PyGraph) {
    (PyGraph { inner: pair.0 }, PyGraph { inner: pair.1 })
}

fn dfas(list: Vec<PyDfa>) -> Vec<CoreDfa> {
    list.into_iter().map(|d| d.inner).collect()
}

#[pyfunction]
fn is_synchronizing(g: &PyGraph) -> PyResult<bool> {
    sync::is_synchronizing(&g.inner).map_err(err)
}

/// A synchronizing word of an irreducible deterministic graph, or `None`.
#[pyfunction]
fn synchronizing_word(g: &PyGraph) -> PyResult<Option<Vec<String>>> {
    Ok(sync::synchronizing_word_irreducible(&g.inner).map_err(err)?.as_ref().map(labels))
}

#[pyfunction]
fn pair_synchronizing_word(g: &PyGraph, p: &str, q: &str) -> PyResult<Option<Vec<String>>> {
    Ok(sync::pair_synchronizing_word(&g.inner, &vid(p)?, &vid(q)?)
        .map_err(err)?
        .as_ref()
        .map(labels))
}

/// A word of `shift(g)` outside `shift(h)`, with `g` irreducible, or `None`.
#[pyfunction]
fn separating_word(g: &PyGraph, h: &PyGraph) -> PyResult<Option<Vec<String>>> {
    Ok(sync::separating_word(&g.inner, &h.inner).map_err(err)?.as_ref().map(labels))
}

#[pyfunction]
fn sync_word_to_vertex(g: &PyGraph, r: &str) -> PyResult<Vec<String>> {
    Ok(labels(&sync::sync_word_to_vertex(&g.inner, &vid(r)?).map_err(err)?))
}

#[pyfunction]
fn follower_separation(g: &PyGraph) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: classify::follower_separation(&g.inner).map_err(err)?,
    })
}

#[pyfunction]
fn are_isomorphic(g: &PyGraph, h: &PyGraph) -> PyResult<Option<BTreeMap<String, String>>> {
    Ok(classify::are_isomorphic(&g.inner, &h.inner)
        .map_err(err)?
        .map(|m| m.into_iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()))
}

#[pyfunction]
fn equal_sync(g: &PyGraph, h: &PyGraph) -> PyResult<bool> {
    classify::equal_sync(&g.inner, &h.inner).map_err(err)
}

#[pyfunction]
fn is_sft_sync(g: &PyGraph) -> PyResult<bool> {
    classify::is_sft_sync(&g.inner).map_err(err)
}

#[pyfunction]
fn is_universal(g: &PyGraph) -> PyResult<bool> {
    classify::is_universal(&g.inner).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, h, max_states=None))]
fn decide_subshift(g: &PyGraph, h: &PyGraph, max_states: Option<usize>) -> PyResult<bool> {
    exact::decide_subshift(&g.inner, &h.inner, &caps(max_states, None)).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, h, max_states=None))]
fn subshift_witness(g: &PyGraph, h: &PyGraph, max_states: Option<usize>) -> PyResult<Option<Vec<String>>> {
    Ok(exact::subshift_witness(&g.inner, &h.inner, &caps(max_states, None))
        .map_err(err)?
        .as_ref()
        .map(labels))
}

#[pyfunction]
#[pyo3(signature = (g, h, max_states=None))]
fn decide_equality(g: &PyGraph, h: &PyGraph, max_states: Option<usize>) -> PyResult<bool> {
    exact::decide_equality(&g.inner, &h.inner, &caps(max_states, None)).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, max_states=None))]
fn decide_sft(g: &PyGraph, max_states: Option<usize>) -> PyResult<bool> {
    exact::decide_sft(&g.inner, &caps(max_states, None)).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, max_states=None))]
fn decide_irreducibility(g: &PyGraph, max_states: Option<usize>) -> PyResult<bool> {
    exact::decide_irreducibility(&g.inner, &caps(max_states, None)).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, max_states=None))]
fn decide_sdp_exists(g: &PyGraph, max_states: Option<usize>) -> PyResult<bool> {
    exact::decide_sdp_exists(&g.inner, &caps(max_states, None)).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, k, max_states=None, max_candidates=None))]
fn decide_minimality(g: &PyGraph, k: usize, max_states: Option<usize>, max_candidates: Option<usize>) -> PyResult<bool> {
    exact::decide_minimality(&g.inner, k, &caps(max_states, max_candidates)).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, max_states=None))]
fn shortest_sync_word(g: &PyGraph, max_states: Option<usize>) -> PyResult<Option<Vec<String>>> {
    Ok(exact::shortest_sync_word(&g.inner, &caps(max_states, None))
        .map_err(err)?
        .as_ref()
        .map(labels))
}

#[pyfunction]
#[pyo3(signature = (g, max_states=None))]
fn synchronizing_vertices(g: &PyGraph, max_states: Option<usize>) -> PyResult<Vec<String>> {
    Ok(exact::synchronizing_vertices(&g.inner, &caps(max_states, None))
        .map_err(err)?
        .iter()
        .map(|v| v.to_string())
        .collect())
}

#[pyfunction]
fn reduction_irred(list: Vec<PyDfa>) -> PyResult<(PyGraph, PyGraph)> {
    Ok(graphs(constructions::reduction_irred(&dfas(list)).map_err(err)?))
}

#[pyfunction]
fn reduction_sft(list: Vec<PyDfa>) -> PyResult<(PyGraph, PyGraph)> {
    Ok(graphs(constructions::reduction_sft(&dfas(list)).map_err(err)?))
}

#[pyfunction]
fn reduction_sync(list: Vec<PyDfa>) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: constructions::reduction_sync(&dfas(list)).map_err(err)?,
    })
}

#[pyfunction]
fn family_mik(k: usize) -> Vec<PyDfa> {
    constructions::family_mik(k).into_iter().map(|inner| PyDfa { inner }).collect()
}

#[pyfunction]
fn word_wk(k: usize) -> Vec<String> {
    labels(&constructions::word_wk(k))
}

#[pyfunction]
fn padded_family_gn(n: usize) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: constructions::padded_family_gn(n).map_err(err)?,
    })
}

/// Length-ordered words of length at most `max_len` in the language of `g`.
#[pyfunction]
fn language_upto(g: &PyGraph, max_len: usize) -> Vec<Vec<String>> {
    let mut words: Vec<Word> = sofic::oracle::language_upto(&g.inner, max_len).into_iter().collect();
    words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    words.iter().map(labels).collect()
}

#[pyfunction]
fn dfa_intersection_shortest(list: Vec<PyDfa>) -> Option<Vec<String>> {
    sofic::oracle::dfa_intersection_shortest(&dfas(list)).as_ref().map(labels)
}

/// Runs the command-line front end; returns `(status, stdout, stderr)`.
#[pyfunction]
#[pyo3(signature = (args, stdin=""))]
fn run_cli(args: Vec<String>, stdin: &str) -> (i32, String, String) {
    let argv = std::iter::once("sofic".to_string()).chain(args);
    let out = sofic::cli::run(argv, &mut Cursor::new(stdin.as_bytes().to_vec()));
    (out.status, out.stdout, out.stderr)
}

#[pymodule]
fn sofic_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("SoficError", m.py().get_type::<SoficError>())?;
    m.add_class::<PyGraph>()?;
    m.add_class::<PyDfa>()?;
    m.add_function(wrap_pyfunction!(is_synchronizing, m)?)?;
    m.add_function(wrap_pyfunction!(synchronizing_word, m)?)?;
    m.add_function(wrap_pyfunction!(pair_synchronizing_word, m)?)?;
    m.add_function(wrap_pyfunction!(separating_word, m)?)?;
    m.add_function(wrap_pyfunction!(sync_word_to_vertex, m)?)?;
    m.add_function(wrap_pyfunction!(follower_separation, m)?)?;
    m.add_function(wrap_pyfunction!(are_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(equal_sync, m)?)?;
    m.add_function(wrap_pyfunction!(is_sft_sync, m)?)?;
    m.add_function(wrap_pyfunction!(is_universal, m)?)?;
    m.add_function(wrap_pyfunction!(decide_subshift, m)?)?;
    m.add_function(wrap_pyfunction!(subshift_witness, m)?)?;
    m.add_function(wrap_pyfunction!(decide_equality, m)?)?;
    m.add_function(wrap_pyfunction!(decide_sft, m)?)?;
    m.add_function(wrap_pyfunction!(decide_irreducibility, m)?)?;
    m.add_function(wrap_pyfunction!(decide_sdp_exists, m)?)?;
    m.add_function(wrap_pyfunction!(decide_minimality, m)?)?;
    m.add_function(wrap_pyfunction!(shortest_sync_word, m)?)?;
    m.add_function(wrap_pyfunction!(synchronizing_vertices, m)?)?;
    m.add_function(wrap_pyfunction!(reduction_irred, m)?)?;
    m.add_function(wrap_pyfunction!(reduction_sft, m)?)?;
    m.add_function(wrap_pyfunction!(reduction_sync, m)?)?;
    m.add_function(wrap_pyfunction!(family_mik, m)?)?;
    m.add_function(wrap_pyfunction!(word_wk, m)?)?;
    m.add_function(wrap_pyfunction!(padded_family_gn, m)?)?;
    m.add_function(wrap_pyfunction!(language_upto, m)?)?;
    m.add_function(wrap_pyfunction!(dfa_intersection_shortest, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
