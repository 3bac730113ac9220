//! Python bindings. Subsets cross the boundary as lists of point indices;
//! profiles, reports and witnesses as plain dicts.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyType;

use semitopo_core::document::WitnessDocument;
use semitopo_core::search::{self, Query};
use semitopo_core::{classify_space, SetFamily, Space, SpaceDocument, Subset};

create_exception!(semitopo, SpaceError, PyValueError, "Invalid space, subset or query.");

fn err(kind: &str, e: impl std::fmt::Display) -> PyErr {
    SpaceError::new_err(format!("{kind}: {e}"))
}

fn to_py(py: Python<'_>, value: &impl serde::Serialize) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| err("Serialize", e))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn points(s: Subset) -> Vec<usize> {
    s.points().collect()
}

fn family(f: &SetFamily) -> Vec<Vec<usize>> {
    f.iter().map(points).collect()
}

/// A finite topological space on points `0..n`.
#[pyclass(name = "Space", module = "semitopo", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PySpace {
    inner: Space,
}

impl PySpace {
    fn subset(&self, a: Vec<usize>) -> PyResult<Subset> {
        Subset::from_points(self.inner.n(), a).map_err(|e| err(e.kind(), e))
    }
}

#[pymethods]
impl PySpace {
    #[new]
    fn new(n: usize, opens: Vec<Vec<usize>>) -> PyResult<Self> {
        let doc = SpaceDocument { points: (0..n).map(|i| i.to_string()).collect(), opens };
        let inner = doc.to_space().map_err(|e| err(e.kind(), e))?;
        Ok(PySpace { inner })
    }

    #[classmethod]
    fn discrete(_cls: &Bound<'_, PyType>, n: usize) -> Self {
        PySpace { inner: Space::discrete(n) }
    }

    #[classmethod]
    fn indiscrete(_cls: &Bound<'_, PyType>, n: usize) -> Self {
        PySpace { inner: Space::indiscrete(n) }
    }

    #[classmethod]
    fn sierpinski(_cls: &Bound<'_, PyType>) -> Self {
        PySpace { inner: Space::sierpinski() }
    }

    /// Decodes a `{"points": [...], "opens": [...]}` document.
    #[classmethod]
    fn from_json(_cls: &Bound<'_, PyType>, text: &str) -> PyResult<Self> {
        let doc = SpaceDocument::from_json(text).map_err(|e| err(e.kind(), e))?;
        let inner = doc.to_space().map_err(|e| err(e.kind(), e))?;
        Ok(PySpace { inner })
    }

    fn to_json(&self) -> String {
        SpaceDocument::from_space(&self.inner).to_json()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn opens(&self) -> Vec<Vec<usize>> {
        family(self.inner.opens())
    }

    fn semi_open_family(&self) -> Vec<Vec<usize>> {
        family(self.inner.semi_open_family())
    }

    fn semi_closed_family(&self) -> Vec<Vec<usize>> {
        family(self.inner.semi_closed_family())
    }

    fn closure(&self, a: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(points(self.inner.closure(self.subset(a)?)))
    }

    fn interior(&self, a: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(points(self.inner.interior(self.subset(a)?)))
    }

    fn semi_closure(&self, a: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(points(self.inner.semi_closure(self.subset(a)?)))
    }

    fn semi_interior(&self, a: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(points(self.inner.semi_interior(self.subset(a)?)))
    }

    fn semi_derived(&self, a: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(points(self.inner.semi_derived(self.subset(a)?)))
    }

    fn kernel(&self, a: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(points(self.inner.kernel(self.subset(a)?)))
    }

    fn covee(&self, a: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(points(self.inner.covee(self.subset(a)?)))
    }

    fn sg_star_closure(&self, a: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(points(self.inner.sg_star_closure(self.subset(a)?)))
    }

    fn semi_separated(&self, a: Vec<usize>, b: Vec<usize>) -> PyResult<bool> {
        let (a, b) = (self.subset(a)?, self.subset(b)?);
        self.inner.semi_separated(a, b).map_err(|e| err("EmptyArgument", e))
    }

    fn is_semi_open(&self, a: Vec<usize>) -> PyResult<bool> {
        Ok(self.inner.is_semi_open(self.subset(a)?))
    }

    fn is_semi_closed(&self, a: Vec<usize>) -> PyResult<bool> {
        Ok(self.inner.is_semi_closed(self.subset(a)?))
    }

    fn is_sg_star_closed(&self, a: Vec<usize>) -> PyResult<bool> {
        Ok(self.inner.is_sg_star_closed(self.subset(a)?))
    }

    fn is_slambda_closed(&self, a: Vec<usize>) -> PyResult<bool> {
        Ok(self.inner.is_slambda_closed(self.subset(a)?))
    }

    fn is_slambda_open(&self, a: Vec<usize>) -> PyResult<bool> {
        Ok(self.inner.is_slambda_open(self.subset(a)?))
    }

    /// Every set-class flag of one subset.
    fn classify_subset(&self, py: Python<'_>, a: Vec<usize>) -> PyResult<Py<PyAny>> {
        to_py(py, &self.inner.classify_subset(self.subset(a)?))
    }

    /// The axiom profile with the verdict of every evaluation route.
    fn classify(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let profile = classify_space(&self.inner).map_err(|e| err("DualPathDisagreement", e))?;
        to_py(py, &profile)
    }

    /// Hex encoding of the canonical form; equal iff homeomorphic.
    fn canonical_form(&self) -> PyResult<String> {
        self.inner.canonical_form().map(|c| c.to_hex()).map_err(|e| err(e.kind(), e))
    }

    fn is_homeomorphic(&self, other: &PySpace) -> PyResult<bool> {
        self.inner.is_homeomorphic(&other.inner).map_err(|e| err(e.kind(), e))
    }

    fn __repr__(&self) -> String {
        format!("Space(n={}, opens={:?})", self.inner.n(), family(self.inner.opens()))
    }
}

/// All topologies on `n` points, or one canonical representative per
/// homeomorphism class.
#[pyfunction]
#[pyo3(signature = (n, up_to_homeo = false))]
fn enumerate_topologies(n: usize, up_to_homeo: bool) -> PyResult<Vec<PySpace>> {
    let spaces = search::enumerate_topologies(n, up_to_homeo).map_err(|e| err(e.kind(), e))?;
    Ok(spaces.into_iter().map(|inner| PySpace { inner }).collect())
}

/// Witness document for `query`; `witness` is None when the search is
/// exhausted.
#[pyfunction]
#[pyo3(signature = (query, n_max = 4))]
fn find_witness(py: Python<'_>, query: &str, n_max: usize) -> PyResult<Py<PyAny>> {
    let parsed = Query::parse(query).map_err(|e| err(e.kind(), e))?;
    let outcome = search::find_witness(&parsed, n_max).map_err(|e| err(e.kind(), e))?;
    to_py(py, &WitnessDocument::new(query, n_max, &outcome))
}

#[pyfunction]
#[pyo3(signature = (n_max = 4))]
fn verify_theorems(py: Python<'_>, n_max: usize) -> PyResult<Py<PyAny>> {
    let report = search::verify_theorems(n_max).map_err(|e| err(e.kind(), e))?;
    to_py(py, &report)
}

#[pymodule]
fn semitopo(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySpace>()?;
    m.add("SpaceError", m.py().get_type::<SpaceError>())?;
    m.add_function(wrap_pyfunction!(enumerate_topologies, m)?)?;
    m.add_function(wrap_pyfunction!(find_witness, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorems, m)?)?;
    Ok(())
}
