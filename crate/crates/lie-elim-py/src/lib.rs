//! Python bindings. Reports cross the boundary as plain dicts and lists.

use std::collections::BTreeMap;

use lie::cli::{run_command, CommandKind, Format, GraphFile, RunConfig};
use lie::core_lie::{witt_ranks as witt, Alphabet, LieElement};
use lie::pcommute::{graphs_up_to_iso, validate};
use lie::LieError;
use num_bigint::BigInt;
use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

fn err(e: LieError) -> PyErr {
    match e {
        LieError::Overflow { .. } => PyOverflowError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_py<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

/// A symmetric commutation relation on vertices 1..=n.
#[pyclass(name = "PartialCommutation", frozen)]
struct PyTheta {
    inner: lie::pcommute::PartialCommutation,
}

#[pymethods]
impl PyTheta {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyTheta {
            inner: lie::pcommute::PartialCommutation::new(n, &edges).map_err(err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.delta()
    }

    fn is_chordal(&self) -> bool {
        self.inner.is_chordal()
    }

    fn has_triangle(&self) -> bool {
        self.inner.has_triangle()
    }

    /// Vertex order chosen for elimination, as original labels.
    fn relabel(&self) -> Vec<usize> {
        validate(&self.inner).original_label
    }

    fn raag_ranks(&self, py: Python<'_>, max_degree: u32) -> PyResult<Py<PyAny>> {
        to_py(
            py,
            &lie::pcommute::raag_ranks(&self.inner, max_degree).map_err(err)?,
        )
    }

    fn eliminate(&self, py: Python<'_>, max_degree: u32) -> PyResult<Py<PyAny>> {
        to_py(
            py,
            &lie::pcommute::eliminate(&self.inner, max_degree).map_err(err)?,
        )
    }

    fn fp_graded_ranks(&self, py: Python<'_>, max_degree: u32) -> PyResult<Py<PyAny>> {
        to_py(
            py,
            &lie::fp_ideal::fp_graded_ranks(&self.inner, max_degree).map_err(err)?,
        )
    }

    fn decompose_j(&self, py: Python<'_>, max_degree: u32) -> PyResult<Py<PyAny>> {
        to_py(
            py,
            &lie::fp_ideal::decompose_j(&self.inner, max_degree).map_err(err)?,
        )
    }

    fn relator_magnus_check(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(
            py,
            &lie::fp_ideal::relator_magnus_check(&self.inner).map_err(err)?,
        )
    }

    fn __repr__(&self) -> String {
        format!(
            "PartialCommutation({}, {:?})",
            self.inner.n(),
            self.inner.delta()
        )
    }
}

/// Hall basis of the free Lie algebra on named generators, truncated at a degree.
/// Elements are dicts mapping basis index to integer coefficient.
#[pyclass(name = "HallBasis", frozen)]
struct PyHallBasis {
    inner: lie::core_lie::HallBasis,
}

fn element(u: BTreeMap<usize, BigInt>) -> LieElement {
    LieElement::from_terms(u)
}

fn to_dict(u: &LieElement) -> BTreeMap<usize, BigInt> {
    u.terms().map(|(i, c)| (i, c.clone())).collect()
}

#[pymethods]
impl PyHallBasis {
    /// `generators` is a list of names (all of degree 1) or of (name, degree) pairs.
    #[new]
    fn new(generators: Bound<'_, PyAny>, max_degree: u32) -> PyResult<Self> {
        let gens: Vec<(String, u32)> = match generators.extract::<Vec<String>>() {
            Ok(names) => names.into_iter().map(|s| (s, 1)).collect(),
            Err(_) => generators.extract()?,
        };
        let alphabet = Alphabet::new(gens).map_err(err)?;
        Ok(PyHallBasis {
            inner: lie::core_lie::HallBasis::new(alphabet, max_degree).map_err(err)?,
        })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    #[getter]
    fn max_degree(&self) -> u32 {
        self.inner.max_degree()
    }

    fn graded_rank(&self, d: u32) -> PyResult<usize> {
        self.inner.graded_rank(d).map_err(err)
    }

    fn degree(&self, index: usize) -> PyResult<u32> {
        self.check(index)?;
        Ok(self.inner.degree_of_index(index))
    }

    fn element_name(&self, index: usize) -> PyResult<String> {
        self.check(index)?;
        Ok(self.inner.render_index(index))
    }

    fn generator(&self, id: usize) -> PyResult<BTreeMap<usize, BigInt>> {
        if id >= self.inner.alphabet().len() {
            return Err(PyValueError::new_err(format!("no generator {id}")));
        }
        Ok(to_dict(&self.inner.generator(id)))
    }

    fn bracket(
        &self,
        u: BTreeMap<usize, BigInt>,
        v: BTreeMap<usize, BigInt>,
    ) -> PyResult<BTreeMap<usize, BigInt>> {
        self.check_all(&u)?;
        self.check_all(&v)?;
        Ok(to_dict(
            &self.inner.bracket(&element(u), &element(v)).map_err(err)?,
        ))
    }

    fn left_normed(
        &self,
        parts: Vec<BTreeMap<usize, BigInt>>,
    ) -> PyResult<BTreeMap<usize, BigInt>> {
        for p in &parts {
            self.check_all(p)?;
        }
        let parts: Vec<LieElement> = parts.into_iter().map(element).collect();
        Ok(to_dict(&self.inner.left_normed(&parts).map_err(err)?))
    }

    fn render(&self, u: BTreeMap<usize, BigInt>) -> PyResult<String> {
        self.check_all(&u)?;
        Ok(self.inner.render(&element(u)))
    }
}

impl PyHallBasis {
    fn check(&self, index: usize) -> PyResult<()> {
        if index < self.inner.len() {
            Ok(())
        } else {
            Err(PyValueError::new_err(format!(
                "index {index} outside a basis of size {}",
                self.inner.len()
            )))
        }
    }

    fn check_all(&self, u: &BTreeMap<usize, BigInt>) -> PyResult<()> {
        u.keys().try_for_each(|&i| self.check(i))
    }
}

#[pyfunction]
fn witt_ranks(degrees: Vec<u32>, max_degree: u32) -> Vec<usize> {
    witt(&degrees, max_degree)
}

#[pyfunction]
fn graphs(n: usize, max_edges: usize) -> Vec<PyTheta> {
    graphs_up_to_iso(n, max_edges)
        .into_iter()
        .map(|inner| PyTheta { inner })
        .collect()
}

/// Runs one of the command-line reports on a graph file's text and returns
/// the rendered report and whether every check passed.
#[pyfunction]
#[pyo3(signature = (command, graph_text, max_degree = None, format = "json", seed = 0))]
fn run_report(
    command: &str,
    graph_text: &str,
    max_degree: Option<u32>,
    format: &str,
    seed: u64,
) -> PyResult<(String, bool)> {
    let kind = match command {
        "ranks" => CommandKind::Ranks,
        "fp" => CommandKind::Fp,
        "eliminate" => CommandKind::Eliminate,
        "verify" => CommandKind::Verify,
        _ => {
            return Err(PyValueError::new_err(format!(
                "unknown command {command:?}"
            )))
        }
    };
    let format = match format {
        "text" => Format::Text,
        "csv" => Format::Csv,
        "json" => Format::Json,
        _ => return Err(PyValueError::new_err(format!("unknown format {format:?}"))),
    };
    let graph = GraphFile::parse(graph_text).map_err(err)?;
    let mut cfg = RunConfig::new(kind, &graph, max_degree).map_err(err)?;
    cfg.format = format;
    cfg.seed = seed;
    let report = run_command(kind, &graph, &cfg).map_err(err)?;
    Ok((report.render(format, false), report.ok()))
}

#[pymodule]
fn lie_elim(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTheta>()?;
    m.add_class::<PyHallBasis>()?;
    m.add_function(wrap_pyfunction!(witt_ranks, m)?)?;
    m.add_function(wrap_pyfunction!(graphs, m)?)?;
    m.add_function(wrap_pyfunction!(run_report, m)?)?;
    Ok(())
}
