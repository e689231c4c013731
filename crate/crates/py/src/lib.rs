use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use itkit::certify::{self, CrossValidation};
use itkit::construct::{self, CertifiedBuilder, Construction};
use itkit::decompose::{self as dec, ComponentSearch};
use itkit::graph::PartitionedGraph;
use itkit::listcover::{self, ListInstance};
use itkit::transversal::{self, ItOutcome, SearchBudget};

create_exception!(itkit_py, ItkitError, PyException);
create_exception!(itkit_py, BudgetError, ItkitError);

fn err(e: impl std::fmt::Display) -> PyErr {
    ItkitError::new_err(e.to_string())
}

fn budget(nodes: Option<u64>, millis: Option<u64>) -> SearchBudget {
    let b = nodes.map_or_else(SearchBudget::default, SearchBudget::nodes);
    match millis {
        Some(ms) => b.with_millis(ms),
        None => b,
    }
}

/// A graph whose vertex set is split into blocks.
#[pyclass(name = "Graph", module = "itkit_py", frozen)]
struct PyGraph {
    inner: PartitionedGraph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>, blocks: Vec<Vec<usize>>) -> PyResult<Self> {
        let inner = PartitionedGraph::new(n, edges, blocks).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = PartitionedGraph::from_json_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(Self { inner })
    }

    fn to_json(&self) -> String {
        self.inner.to_json_string()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn r(&self) -> usize {
        self.inner.r()
    }

    fn blocks(&self) -> Vec<Vec<usize>> {
        self.inner.blocks().to_vec()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn block_of(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.block_of(v))
    }

    fn stats<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let s = self.inner.stats();
        let d = PyDict::new(py);
        d.set_item("max_degree", s.max_degree)?;
        d.set_item("local_degree", s.local_degree)?;
        d.set_item("multiplicity", s.multiplicity)?;
        d.set_item("component_count", s.component_count)?;
        d.set_item("block_sizes", s.block_sizes)?;
        Ok(d)
    }

    fn to_dot(&self) -> String {
        itkit::dot::to_dot(&self.inner)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, r={}, edges={})", self.inner.n(), self.inner.r(), self.inner.edge_count())
    }
}

/// A replayable construction proof.
#[pyclass(name = "Certificate", module = "itkit_py", frozen)]
struct PyCertificate {
    inner: certify::Certificate,
}

#[pymethods]
impl PyCertificate {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = certify::Certificate::from_json_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(Self { inner })
    }

    fn to_json(&self) -> String {
        self.inner.to_json_string()
    }

    #[getter]
    fn steps(&self) -> usize {
        self.inner.steps.len()
    }

    /// Replays the certificate and returns the graph it builds.
    #[pyo3(signature = (budget_nodes=None, millis=None))]
    fn verify(&self, budget_nodes: Option<u64>, millis: Option<u64>) -> PyResult<PyGraph> {
        let (inner, _) = certify::verify_certificate(&self.inner, &budget(budget_nodes, millis)).map_err(err)?;
        Ok(PyGraph { inner })
    }

    /// Replays and also searches the result directly. Returns `None` when
    /// both agree, otherwise the transversal found.
    #[pyo3(signature = (budget_nodes=None, millis=None))]
    fn cross_validate(&self, budget_nodes: Option<u64>, millis: Option<u64>) -> PyResult<Option<Vec<usize>>> {
        let (_, cv) = certify::cross_validate(&self.inner, &budget(budget_nodes, millis)).map_err(err)?;
        Ok(match cv {
            CrossValidation::Agree { .. } => None,
            CrossValidation::Counterexample(t) => Some(t.vertices().into_iter().collect()),
        })
    }

    fn __repr__(&self) -> String {
        format!("Certificate(steps={})", self.inner.steps.len())
    }
}

fn pair(c: Construction) -> (PyGraph, PyCertificate) {
    (PyGraph { inner: c.graph }, PyCertificate { inner: c.certificate })
}

fn need(v: Option<usize>, name: &str) -> PyResult<usize> {
    v.ok_or_else(|| PyValueError::new_err(format!("parameter {name} is required")))
}

/// Builds a named family and returns `(graph, certificate)`.
#[pyfunction]
#[pyo3(signature = (family, d=None, m=None, k=None, n=None, r=None, a=None, b=None, lengths=None))]
#[allow(clippy::too_many_arguments)]
fn generate(
    family: &str,
    d: Option<usize>,
    m: Option<usize>,
    k: Option<usize>,
    n: Option<usize>,
    r: Option<usize>,
    a: Option<usize>,
    b: Option<usize>,
    lengths: Option<(usize, usize, usize)>,
) -> PyResult<(PyGraph, PyCertificate)> {
    let c = match family {
        "complete-bipartite" => {
            CertifiedBuilder::new(construct::gen_complete_bipartite(need(a, "a")?, need(b, "b")?).map_err(err)?)
                .finish()
        }
        "multipartite" => {
            CertifiedBuilder::new(construct::gen_multipartite_base(need(r, "r")?, need(m, "m")?).map_err(err)?).finish()
        }
        "szabo-tardos" => construct::gen_szabo_tardos(need(d, "d")?).map_err(err)?,
        "yuster" => construct::gen_yuster(need(d, "d")?).map_err(err)?,
        "cycle-partition" => construct::gen_cycle_partition(need(r, "r")?).map_err(err)?,
        "three-cycles" => {
            let (l1, l2, l3) = lengths.ok_or_else(|| PyValueError::new_err("parameter lengths is required"))?;
            construct::gen_three_cycles(l1, l2, l3).map_err(err)?
        }
        "locally-sparse" => construct::gen_locally_sparse(need(d, "d")?, need(m, "m")?).map_err(err)?,
        "list-coloring" => construct::gen_list_coloring_cx(need(d, "d")?).map_err(err)?,
        "star-free" => construct::gen_star_free_cx(need(k, "k")?, need(m, "m")?).map_err(err)?.0,
        "ahhs" => construct::gen_ahhs_cx(need(d, "d")?).map_err(err)?,
        "general-szabo-tardos" => construct::gen_general_szabo_tardos(need(n, "n")?, need(r, "r")?).map_err(err)?,
        other => return Err(PyValueError::new_err(format!("unknown family {other:?}"))),
    };
    Ok(pair(c))
}

/// Joins copies of `seed` until every block has at least `n` vertices.
#[pyfunction]
#[pyo3(signature = (seed, n, copies=None))]
fn join_power(seed: &PyGraph, n: usize, copies: Option<usize>) -> PyResult<(PyGraph, PyCertificate)> {
    let (c, _) = construct::gen_join_power(&seed.inner, n, copies, &SearchBudget::default()).map_err(err)?;
    Ok(pair(c))
}

/// An independent transversal as a sorted vertex list, or `None`.
#[pyfunction]
#[pyo3(signature = (g, budget_nodes=None, millis=None))]
fn find_it(g: &PyGraph, budget_nodes: Option<u64>, millis: Option<u64>) -> PyResult<Option<Vec<usize>>> {
    match transversal::find_it(&g.inner, &budget(budget_nodes, millis)) {
        ItOutcome::Found(t) => Ok(Some(t.vertices().into_iter().collect())),
        ItOutcome::NoneExists { .. } => Ok(None),
        ItOutcome::BudgetExceeded { nodes } => Err(BudgetError::new_err(format!("gave up after {nodes} nodes"))),
    }
}

#[pyfunction]
#[pyo3(signature = (g, budget_nodes=None, millis=None))]
fn count_its(g: &PyGraph, budget_nodes: Option<u64>, millis: Option<u64>) -> PyResult<u128> {
    transversal::count_its(&g.inner, &budget(budget_nodes, millis)).map_err(|e| BudgetError::new_err(e.to_string()))
}

#[pyfunction]
#[pyo3(signature = (g, budget_nodes=None, millis=None))]
fn is_block_minimal(g: &PyGraph, budget_nodes: Option<u64>, millis: Option<u64>) -> PyResult<bool> {
    transversal::is_block_minimal(&g.inner, &budget(budget_nodes, millis))
        .map_err(|e| BudgetError::new_err(e.to_string()))
}

/// The three structural conditions as `(a, b, c)`.
#[pyfunction]
fn check_abc(g: &PyGraph) -> PyResult<(bool, bool, bool)> {
    let abc = dec::check_abc(&g.inner, &SearchBudget::default()).map_err(|e| BudgetError::new_err(e.to_string()))?;
    Ok((abc.a, abc.b, abc.c))
}

/// Returns `(certificate, relabel)` where `relabel[v]` is the input id of
/// vertex `v` of the replayed graph.
#[pyfunction]
#[pyo3(signature = (g, imc=false))]
fn decompose(g: &PyGraph, imc: bool) -> PyResult<(PyCertificate, Vec<usize>)> {
    let search = if imc { ComponentSearch::Imc } else { ComponentSearch::Scan };
    let d = dec::decompose_to_certificate_with(&g.inner, &SearchBudget::default(), search).map_err(err)?;
    Ok((PyCertificate { inner: d.certificate }, d.relabel))
}

/// Cover graph of a list-colouring instance given as JSON.
#[pyfunction]
fn cover_graph(instance: &str) -> PyResult<PyGraph> {
    let inst = ListInstance::from_json_str(instance).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(PyGraph { inner: listcover::cover_graph(&inst).map_err(err)? })
}

/// The list instance behind a cover graph, as JSON.
#[pyfunction]
fn recover_instance(g: &PyGraph) -> PyResult<String> {
    Ok(listcover::recover_instance(&g.inner).map_err(err)?.to_json_string())
}

#[pymodule]
fn itkit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("ItkitError", m.py().get_type::<ItkitError>())?;
    m.add("BudgetError", m.py().get_type::<BudgetError>())?;
    m.add_class::<PyGraph>()?;
    m.add_class::<PyCertificate>()?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(join_power, m)?)?;
    m.add_function(wrap_pyfunction!(find_it, m)?)?;
    m.add_function(wrap_pyfunction!(count_its, m)?)?;
    m.add_function(wrap_pyfunction!(is_block_minimal, m)?)?;
    m.add_function(wrap_pyfunction!(check_abc, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(cover_graph, m)?)?;
    m.add_function(wrap_pyfunction!(recover_instance, m)?)?;
    Ok(())
}
