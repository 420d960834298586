//! Python bindings for the chaincheck library.
//!
//! Exposes the graph type plus the main entry points. Structured
//! results cross the boundary as plain dicts and lists mirroring the
//! CLI's JSON report, so Python callers see the same schema.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use pyo3::IntoPyObjectExt;

use chaincheck::oracle::{fixture, FIXTURES};
use chaincheck::{
    build_report, check_from, decompose_checked, ChainKind, GraphFormat, Verdict,
};

/// An immutable undirected simple graph.
#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    inner: chaincheck::Graph,
}

fn bad_value<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn checked_root(g: &chaincheck::Graph, root: usize) -> PyResult<usize> {
    if g.vertex_count() > 0 && root >= g.vertex_count() {
        return Err(PyValueError::new_err(format!(
            "root {} is out of range for {} vertices",
            root,
            g.vertex_count()
        )));
    }
    Ok(root)
}

#[pymethods]
impl PyGraph {
    /// Graph(n, edges): n vertices 0..n, edges as (u, v) pairs.
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = chaincheck::Graph::build(n, &edges).map_err(bad_value)?;
        Ok(PyGraph { inner })
    }

    /// Parse a graph from text; format is "edgelist" or "dimacs".
    #[staticmethod]
    #[pyo3(signature = (text, format = "edgelist"))]
    fn parse(text: &str, format: &str) -> PyResult<Self> {
        let format = match format {
            "edgelist" => GraphFormat::EdgeList,
            "dimacs" => GraphFormat::Dimacs,
            other => {
                return Err(PyValueError::new_err(format!(
                    "unknown format {other:?}; expected \"edgelist\" or \"dimacs\""
                )))
            }
        };
        let inner = chaincheck::Graph::parse(text, format).map_err(bad_value)?;
        Ok(PyGraph { inner })
    }

    /// One of the built-in named graphs; see fixture_names().
    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        let inner = fixture(name).ok_or_else(|| {
            PyValueError::new_err(format!(
                "unknown fixture {name:?}; known: {}",
                FIXTURES.join(", ")
            ))
        })?;
        Ok(PyGraph { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.edge_count()
    }

    /// Edges as (u, v) pairs in id order.
    fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.inner.edge_count())
            .map(|e| {
                let edge = self.inner.edge(e);
                (edge.u, edge.v)
            })
            .collect()
    }

    fn to_edge_list(&self) -> String {
        self.inner.to_edge_list()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, m={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

/// Classify a graph. Returns one of "2-CONNECTED",
/// "2-EDGE-CONNECTED BUT NOT 2-CONNECTED", "NOT 2-EDGE-CONNECTED",
/// "NOT CONNECTED".
#[pyfunction]
#[pyo3(signature = (g, root = 0))]
fn check(g: &PyGraph, root: usize) -> PyResult<String> {
    let root = checked_root(&g.inner, root)?;
    let verdict = if g.inner.vertex_count() == 0 {
        Verdict::NotConnected
    } else {
        check_from(&g.inner, root)
    };
    Ok(verdict.as_str().to_string())
}

fn json_to_py(py: Python<'_>, v: &serde_json::Value) -> PyResult<Py<PyAny>> {
    use serde_json::Value;
    match v {
        Value::Null => Ok(py.None()),
        Value::Bool(b) => b.into_py_any(py),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_py_any(py)
            } else if let Some(u) = n.as_u64() {
                u.into_py_any(py)
            } else {
                n.as_f64().expect("JSON number fits f64").into_py_any(py)
            }
        }
        Value::String(s) => s.into_py_any(py),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_py_any(py)
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (key, val) in map {
                dict.set_item(key, json_to_py(py, val)?)?;
            }
            dict.into_py_any(py)
        }
    }
}

/// Full analysis as a dict: verdict, bridges, cut vertices,
/// 2-edge-connected components, blocks, block-cut tree, and (when the
/// graph is 2-edge-connected) the ear decomposition certificate.
/// Pass chains=True to include the chain list.
#[pyfunction]
#[pyo3(signature = (g, root = 0, chains = false))]
fn report(py: Python<'_>, g: &PyGraph, root: usize, chains: bool) -> PyResult<Py<PyAny>> {
    let root = checked_root(&g.inner, root)?;
    let report = build_report(&g.inner, "python", root, chains);
    let value = serde_json::to_value(&report).map_err(bad_value)?;
    json_to_py(py, &value)
}

/// The chain decomposition as a list of dicts, one per chain:
/// {"index", "kind", "vertices", "edges"}. Raises ValueError when the
/// graph has fewer than 3 vertices or is disconnected.
#[pyfunction]
#[pyo3(signature = (g, root = 0))]
fn chains(py: Python<'_>, g: &PyGraph, root: usize) -> PyResult<Py<PyAny>> {
    let root = checked_root(&g.inner, root)?;
    let c = decompose_checked(&g.inner, root).map_err(bad_value)?;
    let list = PyList::empty(py);
    for chain in c.chains() {
        let d = PyDict::new(py);
        d.set_item("index", chain.index)?;
        d.set_item(
            "kind",
            match chain.kind {
                ChainKind::Cycle => "cycle",
                ChainKind::Path => "path",
            },
        )?;
        d.set_item("vertices", chain.vertices.clone())?;
        d.set_item("edges", chain.edge_ids.clone())?;
        list.append(d)?;
    }
    list.into_py_any(py)
}

/// Names accepted by Graph.fixture().
#[pyfunction]
fn fixture_names() -> Vec<&'static str> {
    FIXTURES.to_vec()
}

#[pymodule]
fn chaincheck_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(report, m)?)?;
    m.add_function(wrap_pyfunction!(chains, m)?)?;
    m.add_function(wrap_pyfunction!(fixture_names, m)?)?;
    Ok(())
}
