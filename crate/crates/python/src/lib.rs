//! Python bindings. Reports and witnesses cross the boundary as plain
//! dicts and lists, built from the same JSON the CLI prints.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyTuple;
use serde::Serialize;

use ramsey_witness::enumerate;
use ramsey_witness::invariants;
use ramsey_witness::scan::{self, Theorem};
use ramsey_witness::{FamilyKind, FamilySpec, Witness};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py>(py: Python<'py>, value: &impl Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(value_error)?;
    py.import("json")?.call_method1("loads", (text,))
}

fn from_py<T: serde::de::DeserializeOwned>(value: &Bound<'_, PyAny>) -> PyResult<T> {
    let text: String = match value.extract::<String>() {
        Ok(s) => s,
        Err(_) => value.py().import("json")?.call_method1("dumps", (value,))?.extract()?,
    };
    serde_json::from_str(&text).map_err(value_error)
}

fn theorem(name: &str) -> PyResult<Theorem> {
    match name.replace('_', "-").as_str() {
        "independence" => Ok(Theorem::Independence),
        "induced-matching" => Ok(Theorem::InducedMatching),
        "matching" => Ok(Theorem::Matching),
        other => Err(value_error(format!("unknown theorem {other:?}"))),
    }
}

fn family_kind(name: &str, l: Option<usize>) -> PyResult<FamilyKind> {
    Ok(match name.replace('_', "-").as_str() {
        "path" => FamilyKind::Path,
        "clique" => FamilyKind::Clique,
        "star" => FamilyKind::Star,
        "biclique" => FamilyKind::Biclique,
        "hairy-clique" => FamilyKind::HairyClique { l: l.unwrap_or(1) },
        "triangle-clique" => FamilyKind::TriangleClique,
        "spider" => FamilyKind::Spider { l: l.unwrap_or(2) },
        "friendship" => FamilyKind::Friendship,
        other => return Err(value_error(format!("unknown family {other:?}"))),
    })
}

/// A simple undirected graph on vertices `0..order`.
#[pyclass(name = "Graph", module = "ramsey_witness_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph(ramsey_witness::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (order, edges = Vec::new()))]
    fn new(order: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        ramsey_witness::Graph::from_edges(order, &edges).map(PyGraph).map_err(value_error)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        ramsey_witness::parse_graph6(text.trim()).map(PyGraph).map_err(value_error)
    }

    fn to_graph6(&self) -> String {
        ramsey_witness::write_graph6(&self.0)
    }

    fn to_dot(&self) -> String {
        self.0.to_dot(None)
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges()
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        u < self.0.order() && v < self.0.order() && self.0.adjacent(u, v)
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.0.check_vertex(v).map_err(value_error)?;
        Ok(self.0.neighbors(v).collect())
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn cut_vertices(&self) -> PyResult<Vec<usize>> {
        self.0.cut_vertices().map(|s| s.into_vec()).map_err(value_error)
    }

    fn canonical_graph6(&self) -> String {
        enumerate::canonical_graph6(&self.0)
    }

    fn __len__(&self) -> usize {
        self.0.order()
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", self.to_graph6())
    }

    fn __getnewargs__<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyTuple>> {
        PyTuple::new(py, [self.0.order().into_pyobject(py)?.into_any(), self.edges().into_pyobject(py)?])
    }
}

/// Member of a named family, e.g. `generate("hairy-clique", 4, l=2)`.
#[pyfunction]
#[pyo3(signature = (family, n, l = None))]
fn generate(family: &str, n: usize, l: Option<usize>) -> PyResult<PyGraph> {
    let spec = match (family_kind(family, l)?, l) {
        (FamilyKind::Biclique, Some(m)) => FamilySpec::biclique(n, m),
        (kind, _) => kind.with_n(n),
    };
    ramsey_witness::generate(&spec).map(PyGraph).map_err(value_error)
}

/// Exact parameters as a dict, with the fractional matching number as a
/// `fractions.Fraction`.
#[pyfunction]
fn parameters<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    let g = &g.0;
    let (alpha, mis) = invariants::independence_number(g);
    let (nu, matching) = invariants::maximum_matching(g);
    let (induced, im) = invariants::induced_matching_number(g);
    let frac = invariants::fractional_matching_number(g);
    let fraction = py.import("fractions")?.getattr("Fraction")?.call1((*frac.numer(), *frac.denom()))?;
    let out = to_py(
        py,
        &serde_json::json!({
            "order": g.order(),
            "size": g.size(),
            "independence_number": alpha,
            "maximum_independent_set": mis.into_vec(),
            "matching_number": nu,
            "maximum_matching": matching.as_slice(),
            "induced_matching_number": induced,
            "maximum_induced_matching": im.as_slice(),
            "vertex_cover_number": invariants::vertex_cover_number(g),
        }),
    )?;
    out.set_item("fractional_matching_number", fraction)?;
    Ok(out)
}

/// Embedding of `pattern` as an induced subgraph of `host`, if any.
#[pyfunction]
fn contains_induced(host: &PyGraph, pattern: &PyGraph) -> Option<Vec<usize>> {
    ramsey_witness::contains_induced(&host.0, &pattern.0)
}

/// Largest parameter of an induced family member, with its witness.
#[pyfunction]
#[pyo3(signature = (host, family, l = None))]
fn max_family_parameter<'py>(
    py: Python<'py>,
    host: &PyGraph,
    family: &str,
    l: Option<usize>,
) -> PyResult<(usize, Bound<'py, PyAny>)> {
    let (k, w) = ramsey_witness::max_family_parameter(&host.0, family_kind(family, l)?);
    Ok((k, to_py(py, &w)?))
}

/// Run one extraction pipeline; returns the report dict. A pipeline that
/// finds nothing reports `outcome.status == "failed"`; invalid input raises.
#[pyfunction]
#[pyo3(signature = (g, theorem, n, r = None))]
fn extract<'py>(py: Python<'py>, g: &PyGraph, theorem: &str, n: usize, r: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
    let report = scan::run_extraction_on(&g.0, self::theorem(theorem)?, n, r).map_err(value_error)?;
    to_py(py, &report)
}

/// Check a witness (dict or JSON string) against a host graph.
#[pyfunction]
fn verify_witness(host: &PyGraph, witness: &Bound<'_, PyAny>) -> PyResult<bool> {
    let w: Witness = from_py(witness)?;
    Ok(ramsey_witness::verify_witness(&host.0, &w))
}

/// Every connected graph with at most `max_order` vertices, canonically labelled.
#[pyfunction]
fn connected_graphs(max_order: usize) -> Vec<PyGraph> {
    enumerate::connected_graphs(max_order).into_iter().map(PyGraph).collect()
}

fn graphs_of(graphs: &[PyRef<'_, PyGraph>]) -> Vec<ramsey_witness::Graph> {
    graphs.iter().map(|g| g.0.clone()).collect()
}

#[pyfunction]
#[pyo3(signature = (graphs, jobs = 1, records = false))]
fn scan_invariants<'py>(
    py: Python<'py>,
    graphs: Vec<PyRef<'py, PyGraph>>,
    jobs: usize,
    records: bool,
) -> PyResult<Bound<'py, PyAny>> {
    let graphs = graphs_of(&graphs);
    let report = py.detach(|| scan::scan_invariant_graphs(&graphs, jobs, records)).map_err(value_error)?;
    to_py(py, &report)
}

#[pyfunction]
#[pyo3(signature = (graphs, theorem, n, jobs = 1))]
fn empirical_threshold<'py>(
    py: Python<'py>,
    graphs: Vec<PyRef<'py, PyGraph>>,
    theorem: &str,
    n: usize,
    jobs: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let graphs = graphs_of(&graphs);
    let theorem = self::theorem(theorem)?;
    let report = py.detach(|| scan::empirical_threshold_graphs(&graphs, theorem, n, jobs)).map_err(value_error)?;
    to_py(py, &report)
}

#[pymodule]
fn ramsey_witness_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(parameters, m)?)?;
    m.add_function(wrap_pyfunction!(contains_induced, m)?)?;
    m.add_function(wrap_pyfunction!(max_family_parameter, m)?)?;
    m.add_function(wrap_pyfunction!(extract, m)?)?;
    m.add_function(wrap_pyfunction!(verify_witness, m)?)?;
    m.add_function(wrap_pyfunction!(connected_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(scan_invariants, m)?)?;
    m.add_function(wrap_pyfunction!(empirical_threshold, m)?)?;
    Ok(())
}
