//! Python bindings: root systems, Weyl group elements, cells and smoothness.
//!
//! Library errors surface as `ValueError`.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use weylsmooth::cells::{self, Side};
use weylsmooth::weyl::DEFAULT_INTERVAL_CAP;
use weylsmooth::{av, patterns, smoothness, tableaux, RootSystem, SignedSequence, WeylElement};

fn value_error(e: weylsmooth::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn wrap(elements: Vec<WeylElement>) -> Vec<PyWeylElement> {
    elements.into_iter().map(|inner| PyWeylElement { inner }).collect()
}

#[pyclass(name = "RootSystem", module = "pyweylsmooth", frozen)]
struct PyRootSystem {
    inner: Arc<RootSystem>,
}

#[pymethods]
impl PyRootSystem {
    /// `cartan_type` is a string such as `"A3"`, `"e6"` or `"D_5"`.
    #[new]
    fn new(cartan_type: &str) -> PyResult<Self> {
        let ct = cartan_type.parse().map_err(value_error)?;
        Ok(PyRootSystem { inner: RootSystem::shared(ct) })
    }

    #[getter]
    fn cartan_type(&self) -> String {
        self.inner.cartan_type().to_string()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        self.inner.cartan_matrix().to_vec()
    }

    /// Positive roots in simple-root coordinates, by height.
    fn positive_roots(&self) -> Vec<Vec<i32>> {
        self.inner.positive_roots().iter().map(|r| r.coords().to_vec()).collect()
    }

    fn identity(&self) -> PyWeylElement {
        PyWeylElement { inner: WeylElement::identity(&self.inner) }
    }

    fn longest_element(&self) -> PyWeylElement {
        PyWeylElement { inner: WeylElement::longest(&self.inner) }
    }

    /// Parses `"3 2 3"`, `"w0 2 1"` or a one-line form `"(-2,-3,1)"`.
    fn element(&self, text: &str) -> PyResult<PyWeylElement> {
        let inner = WeylElement::parse(&self.inner, text).map_err(value_error)?;
        Ok(PyWeylElement { inner })
    }

    #[pyo3(name = "from_word")]
    fn element_from_word(&self, word: Vec<usize>) -> PyResult<PyWeylElement> {
        let inner = WeylElement::from_word(&self.inner, &word).map_err(value_error)?;
        Ok(PyWeylElement { inner })
    }

    #[pyo3(name = "from_one_line")]
    fn element_from_one_line(&self, entries: Vec<i32>) -> PyResult<PyWeylElement> {
        let seq = SignedSequence::new(entries).map_err(value_error)?;
        let inner = WeylElement::from_one_line(&self.inner, &seq).map_err(value_error)?;
        Ok(PyWeylElement { inner })
    }

    /// Elements of `C_i` (`side="c"`) or `w0 C_i` (`side="w0"`), by length then word.
    #[pyo3(signature = (node, side = "c"))]
    fn cell(&self, node: usize, side: &str) -> PyResult<Vec<PyWeylElement>> {
        let side: Side = side.parse().map_err(value_error)?;
        let cell = cells::cell(&self.inner, node, side).map_err(value_error)?;
        Ok(wrap(cell.elements))
    }

    #[pyo3(signature = (node, extended = false))]
    fn smooth_elements_of_cell(&self, node: usize, extended: bool) -> PyResult<Vec<PyWeylElement>> {
        smoothness::smooth_elements_of_cell(&self.inner, node, extended).map(wrap).map_err(value_error)
    }

    /// `(node, matches)` per node, or `None` where no closed form exists.
    #[pyo3(signature = (extended = false))]
    fn verify_smooth_cells(&self, extended: bool) -> PyResult<Option<Vec<(usize, bool)>>> {
        let reports = smoothness::verify_smooth_cells(&self.inner, extended).map_err(value_error)?;
        Ok(reports.map(|rs| rs.iter().map(|r| (r.node, r.matches)).collect()))
    }

    /// `k_i` with `w0(alpha_i) = -alpha_{k_i}`, listed for `i = 1..rank`.
    fn opposition(&self) -> Vec<usize> {
        av::opposition(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("RootSystem('{}')", self.inner.cartan_type())
    }
}

#[pyclass(name = "WeylElement", module = "pyweylsmooth", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyWeylElement {
    inner: WeylElement,
}

#[pymethods]
impl PyWeylElement {
    #[getter]
    fn cartan_type(&self) -> String {
        self.inner.cartan_type().to_string()
    }

    /// Lexicographically smallest reduced word.
    fn word(&self) -> Vec<usize> {
        self.inner.reduced_word().to_vec()
    }

    /// Signed one-line form; `None` outside the classical types.
    fn one_line(&self) -> Option<Vec<i32>> {
        self.inner.one_line().ok().map(|s| s.entries().to_vec())
    }

    fn length(&self) -> usize {
        self.inner.length()
    }

    fn inverse(&self) -> PyWeylElement {
        PyWeylElement { inner: self.inner.inverse() }
    }

    fn left_descents(&self) -> Vec<usize> {
        self.inner.left_descents()
    }

    fn right_descents(&self) -> Vec<usize> {
        self.inner.right_descents()
    }

    fn bruhat_leq(&self, other: &PyWeylElement) -> PyResult<bool> {
        self.inner.bruhat_leq(&other.inner).map_err(value_error)
    }

    #[pyo3(signature = (extended = false))]
    fn is_smooth(&self, extended: bool) -> PyResult<PySmoothnessVerdict> {
        let v = smoothness::is_smooth(&self.inner, extended).map_err(value_error)?;
        Ok(PySmoothnessVerdict {
            smooth: v.smooth,
            engine: v.engine.to_string(),
            witness: v.witness.map(|w| w.to_string()),
        })
    }

    /// Coefficients of the Poincaré polynomial of the lower interval.
    #[pyo3(signature = (cap = DEFAULT_INTERVAL_CAP))]
    fn poincare(&self, cap: usize) -> PyResult<Vec<u64>> {
        smoothness::poincare(&self.inner, cap).map(|p| p.coefficients).map_err(value_error)
    }

    fn av_representative(&self) -> PyResult<PyAvResult> {
        let r = av::av_representative(&self.inner).map_err(value_error)?;
        Ok(PyAvResult {
            node: r.node,
            representative_min: PyWeylElement { inner: r.representative_min },
            representative_max: r.representative_max.map(|inner| PyWeylElement { inner }),
            irreducible: r.irreducible,
        })
    }

    fn __mul__(&self, other: &PyWeylElement) -> PyResult<PyWeylElement> {
        let inner = self.inner.multiply(&other.inner).map_err(value_error)?;
        Ok(PyWeylElement { inner })
    }

    fn __eq__(&self, other: &PyWeylElement) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("WeylElement('{}', {:?})", self.inner.cartan_type(), self.inner.reduced_word())
    }
}

#[pyclass(name = "SmoothnessVerdict", module = "pyweylsmooth", frozen, get_all)]
struct PySmoothnessVerdict {
    smooth: bool,
    engine: String,
    witness: Option<String>,
}

#[pymethods]
impl PySmoothnessVerdict {
    fn __repr__(&self) -> String {
        format!("SmoothnessVerdict(smooth={}, engine='{}', witness={:?})", self.smooth, self.engine, self.witness)
    }
}

#[pyclass(name = "AvResult", module = "pyweylsmooth", frozen, get_all)]
struct PyAvResult {
    node: usize,
    representative_min: PyWeylElement,
    representative_max: Option<PyWeylElement>,
    irreducible: bool,
}

type Rows = Vec<Vec<i32>>;

/// Insertion and recording tableaux as lists of rows.
#[pyfunction]
fn rs_insert(seq: Vec<i32>) -> PyResult<(Rows, Rows)> {
    let (p, q) = tableaux::rs_insert(&seq).map_err(value_error)?;
    Ok((p.rows, q.rows))
}

/// Flattening of a signed sequence to a signed pattern.
#[pyfunction]
fn fl(seq: Vec<i32>) -> PyResult<Vec<i32>> {
    patterns::fl(&seq).map(|p| p.entries().to_vec()).map_err(value_error)
}

#[pymodule]
fn pyweylsmooth(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRootSystem>()?;
    m.add_class::<PyWeylElement>()?;
    m.add_class::<PySmoothnessVerdict>()?;
    m.add_class::<PyAvResult>()?;
    m.add_function(wrap_pyfunction!(rs_insert, m)?)?;
    m.add_function(wrap_pyfunction!(fl, m)?)?;
    Ok(())
}
