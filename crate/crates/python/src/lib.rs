//! Python bindings for `relroots`.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyTuple;

use relroots::enumerate::enum_connected_simple;
use relroots::multigraph::FamilySpec;
use relroots::relpoly::{h_vector as core_h_vector, reliability_poly};
use relroots::rootlab::{parse_rational, rational_roots as core_rational_roots, root_set};
use relroots::survey::survey_record;
use relroots::{parse_graph, GraphFormat, Multigraph, ReliabilityEngine};

fn err(e: relroots::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An undirected multigraph on vertices `0..n`; loops and parallel edges allowed.
#[pyclass(name = "Graph", module = "relroots", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph(Multigraph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Multigraph::new(n, edges).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        parse_graph(text.trim().as_bytes(), GraphFormat::Graph6).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn from_sparse6(text: &str) -> PyResult<Self> {
        parse_graph(text.trim().as_bytes(), GraphFormat::Sparse6).map(PyGraph).map_err(err)
    }

    /// Build a named family member such as `"cycle:5"` or `"theta:1,2,3"`.
    #[staticmethod]
    fn family(spec: &str) -> PyResult<Self> {
        let spec: FamilySpec = spec.parse().map_err(err)?;
        spec.build().map(PyGraph).map_err(err)
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().to_vec()
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn graph6(&self) -> PyResult<String> {
        self.0.to_graph6().map_err(err)
    }

    fn sparse6(&self) -> String {
        self.0.to_sparse6()
    }

    fn canonical_key(&self) -> String {
        self.0.canonical_key().to_hex()
    }

    fn is_isomorphic(&self, other: &PyGraph) -> bool {
        self.0.is_isomorphic(&other.0)
    }

    fn classes(&self) -> Vec<String> {
        self.0.classify().into_iter().map(|c| c.tag().to_string()).collect()
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Graph({}, {:?})", self.0.order(), self.0.edges())
    }
}

/// Coefficients of `Rel(G; q)`, constant term first.
#[pyfunction]
fn reliability(g: &PyGraph) -> Vec<BigInt> {
    reliability_poly(&g.0).into_coeffs()
}

/// Exact `Rel(G; q)` at a rational `q` given as text, e.g. `"-1/3"`; returns `"p/q"`.
#[pyfunction]
fn reliability_at(g: &PyGraph, q: &str) -> PyResult<String> {
    let q = parse_rational(q).map_err(err)?;
    let v = reliability_poly(&g.0).eval_exact(&q);
    Ok(format!("{}/{}", v.numer(), v.denom()))
}

#[pyfunction]
fn h_vector(g: &PyGraph) -> PyResult<Vec<BigInt>> {
    core_h_vector(&g.0).map(|h| h.0).map_err(err)
}

/// Roots of `H(G; q)` as `(re, im, multiplicity)`; the root 1 of `Rel` is not included.
#[pyfunction]
fn roots(g: &PyGraph) -> PyResult<Vec<(f64, f64, usize)>> {
    let rs = root_set(&g.0).map_err(err)?;
    Ok(rs.roots.iter().map(|z| (z.re, z.im, z.multiplicity)).collect())
}

#[pyfunction]
fn min_modulus(g: &PyGraph) -> PyResult<Option<f64>> {
    Ok(root_set(&g.0).map_err(err)?.min_modulus())
}

/// Exactly confirmed rational roots of `Rel(G; q)` as `fractions.Fraction`, ascending.
#[pyfunction]
fn rational_roots<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let fraction = py.import("fractions")?.getattr("Fraction")?;
    let rr = core_rational_roots(&g.0).map_err(err)?;
    rr.roots
        .iter()
        .map(|r| fraction.call1(PyTuple::new(py, [r.numer().clone(), r.denom().clone()])?))
        .collect()
}

/// All connected simple graphs of order `n` up to isomorphism, in canonical form.
#[pyfunction]
fn connected_graphs(n: usize) -> PyResult<Vec<PyGraph>> {
    let s = enum_connected_simple(n).map_err(err)?;
    Ok(s.into_graphs().into_iter().map(PyGraph).collect())
}

/// The full survey record of one graph as a JSON string.
#[pyfunction]
fn survey_json(g: &PyGraph) -> PyResult<String> {
    let mut engine = ReliabilityEngine::default();
    let rec = survey_record(&mut engine, &g.0).map_err(err)?;
    serde_json::to_string(&rec).map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pymodule]
#[pyo3(name = "relroots")]
fn relroots_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(reliability, m)?)?;
    m.add_function(wrap_pyfunction!(reliability_at, m)?)?;
    m.add_function(wrap_pyfunction!(h_vector, m)?)?;
    m.add_function(wrap_pyfunction!(roots, m)?)?;
    m.add_function(wrap_pyfunction!(min_modulus, m)?)?;
    m.add_function(wrap_pyfunction!(rational_roots, m)?)?;
    m.add_function(wrap_pyfunction!(connected_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(survey_json, m)?)?;
    Ok(())
}
