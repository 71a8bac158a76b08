//! Python bindings. Graphs cross the boundary as JSON text in the same file
//! format the CLI reads; reports are returned as JSON text.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use fbga::covering::CuttingSet;
use fbga::format::parse_cut_file;
use fbga::invariants::Verdict;
use fbga::reconstruct::parse_loewy;

fn err(e: fbga::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize")
}

/// An admissible fractional Brauer graph.
#[pyclass(name = "Afbg", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyAfbg(fbga::Afbg);

#[pymethods]
impl PyAfbg {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        fbga::Afbg::from_json(text).map(PyAfbg).map_err(err)
    }

    fn to_json(&self) -> String {
        self.0.to_spec().to_json()
    }

    #[getter]
    fn num_vertices(&self) -> usize {
        self.0.graph().num_vertices()
    }

    #[getter]
    fn num_edges(&self) -> usize {
        self.0.graph().num_edges()
    }

    /// Sorted multiplicities as exact fractions `"p/q"`.
    fn multiplicities(&self) -> Vec<String> {
        self.0.multiplicity_multiset().iter().map(ToString::to_string).collect()
    }

    fn nakayama_order(&self) -> usize {
        self.0.nakayama_order()
    }

    fn dimension(&self) -> usize {
        fbga::dimension(&self.0)
    }

    /// Relations with arrows written left to right in composition order.
    fn relations(&self) -> Vec<String> {
        fbga::build_presentation(&self.0).relation_strings(" ").into_iter().collect()
    }

    fn presentation(&self) -> String {
        fbga::build_presentation(&self.0).to_text()
    }

    fn reduced_form(&self) -> Self {
        PyAfbg(self.0.reduced_form())
    }

    /// Cover with `r` sheets; without a cut file each vertex is cut before its
    /// first half-edge.
    #[pyo3(signature = (r, cut=None))]
    fn cover(&self, r: usize, cut: Option<&str>) -> PyResult<Self> {
        let g = self.0.graph();
        let cut = match cut {
            Some(text) => CuttingSet::from_entries(g, &parse_cut_file(text).map_err(err)?).map_err(err)?,
            None => CuttingSet::before_first(g),
        };
        fbga::cover_finite(&self.0, &cut, r).map(|c| PyAfbg(c.afbg)).map_err(err)
    }

    fn fingerprint(&self) -> String {
        json(&fbga::fingerprint(&self.0))
    }

    fn loewy(&self) -> String {
        json(&fbga::loewy_input(&self.0))
    }

    fn is_isomorphic(&self, other: &PyAfbg) -> PyResult<bool> {
        self.0.is_isomorphic_to(&other.0).map(|m| m.is_some()).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Afbg({} vertices, {} edges)", self.num_vertices(), self.num_edges())
    }
}

/// `None` when no invariant separates the two, else the first differing field.
#[pyfunction]
fn compare(a: &PyAfbg, b: &PyAfbg) -> Option<String> {
    match fbga::compare(&fbga::fingerprint(&a.0), &fbga::fingerprint(&b.0)) {
        Verdict::Consistent => None,
        Verdict::Distinguished(field) => Some(field.to_string()),
    }
}

/// The r-fold trivial extension of a gentle algebra: its graph and presentation.
#[pyfunction]
#[pyo3(signature = (gentle, r=1))]
fn gentle_trivext(gentle: &str, r: usize) -> PyResult<(PyAfbg, String)> {
    let g = fbga::Gentle::from_json(gentle).map_err(err)?;
    let (a, p) = g.r_fold_trivial_extension(r).map_err(err)?;
    Ok((PyAfbg(a), p.to_text()))
}

#[pyfunction]
fn reconstruct(loewy: &str) -> PyResult<PyAfbg> {
    let entries = parse_loewy(loewy).map_err(err)?;
    fbga::reconstruct_afbg(&entries).map(|r| PyAfbg(r.afbg)).map_err(err)
}

#[pymodule]
fn fbga_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAfbg>()?;
    m.add_function(wrap_pyfunction!(compare, m)?)?;
    m.add_function(wrap_pyfunction!(gentle_trivext, m)?)?;
    m.add_function(wrap_pyfunction!(reconstruct, m)?)?;
    Ok(())
}
