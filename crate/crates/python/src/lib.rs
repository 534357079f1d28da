//! Python bindings: `Structure`, `Element` and the kernel operations.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use garside::{self as kernel, GarsideError, InstanceSpec, QuotientOrder, Rational, StructureTable};
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

create_exception!(pygarside, KernelError, PyException);

fn to_py(e: GarsideError) -> PyErr {
    KernelError::new_err(e.to_string())
}

fn ratio(r: Rational) -> (i64, i64) {
    (*r.numer(), *r.denom())
}

/// A validated finite Garside structure.
#[pyclass(name = "Structure", module = "pygarside", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyStructure {
    inner: Arc<StructureTable>,
}

#[pymethods]
impl PyStructure {
    /// Build from an instance string such as `braid:4` or `custom:path`.
    #[staticmethod]
    fn from_instance(spec: &str) -> PyResult<Self> {
        let spec: InstanceSpec = spec.parse().map_err(to_py)?;
        Ok(PyStructure { inner: spec.build().map_err(to_py)? })
    }

    #[staticmethod]
    fn braid(n: usize) -> PyResult<Self> {
        Ok(PyStructure { inner: kernel::braid_classical(n).map_err(to_py)? })
    }

    #[staticmethod]
    fn torus(a: usize, b: usize) -> PyResult<Self> {
        Ok(PyStructure { inner: kernel::torus(a, b).map_err(to_py)? })
    }

    #[staticmethod]
    fn free_abelian(rank: usize) -> PyResult<Self> {
        Ok(PyStructure { inner: kernel::free_abelian(rank).map_err(to_py)? })
    }

    /// Parse the `garside-structure v1` text format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyStructure { inner: Arc::new(kernel::load_structure(text.as_bytes()).map_err(to_py)?) })
    }

    fn serialize(&self) -> String {
        kernel::serialize(&self.inner)
    }

    #[getter]
    fn simple_count(&self) -> usize {
        self.inner.simple_count()
    }

    #[getter]
    fn atoms(&self) -> Vec<String> {
        self.inner.atoms().iter().map(|&a| self.inner.name(a).to_string()).collect()
    }

    #[getter]
    fn delta(&self) -> String {
        self.inner.name(self.inner.delta()).to_string()
    }

    #[getter]
    fn garside_norm(&self) -> usize {
        self.inner.garside_norm()
    }

    #[getter]
    fn central_exponent(&self) -> usize {
        self.inner.central_exponent()
    }

    fn element(&self, word: &str) -> PyResult<PyElement> {
        Ok(PyElement { inner: kernel::Element::parse(&self.inner, word).map_err(to_py)? })
    }

    fn identity(&self) -> PyElement {
        PyElement { inner: kernel::Element::identity(&self.inner) }
    }

    fn delta_power(&self, k: i64) -> PyElement {
        PyElement { inner: kernel::Element::delta_power(&self.inner, k) }
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("{:?}", self.inner)
    }
}

/// A group element in left normal form.
#[pyclass(name = "Element", module = "pygarside", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyElement {
    inner: kernel::Element,
}

fn wrap(e: kernel::Element) -> PyElement {
    PyElement { inner: e }
}

#[pymethods]
impl PyElement {
    #[getter]
    fn inf(&self) -> i64 {
        self.inner.inf()
    }

    #[getter]
    fn sup(&self) -> i64 {
        self.inner.sup()
    }

    #[getter]
    fn canonical_length(&self) -> usize {
        self.inner.canonical_length()
    }

    #[getter]
    fn factors(&self) -> Vec<String> {
        self.inner.factor_names()
    }

    #[getter]
    fn structure(&self) -> PyStructure {
        PyStructure { inner: self.inner.table().clone() }
    }

    fn word(&self) -> String {
        self.inner.to_word_text()
    }

    fn inverse(&self) -> PyElement {
        wrap(self.inner.inverse())
    }

    fn power(&self, n: i64) -> PyElement {
        wrap(self.inner.power(n))
    }

    fn tau(&self, k: i64) -> PyElement {
        wrap(self.inner.tau(k))
    }

    /// `w⁻¹·self·w`.
    fn conjugate_by(&self, w: &PyElement) -> PyResult<PyElement> {
        if !self.inner.same_table(&w.inner) {
            return Err(to_py(GarsideError::TableMismatch));
        }
        Ok(wrap(self.inner.conjugate_by(&w.inner)))
    }

    fn commutes_with(&self, other: &PyElement) -> bool {
        self.inner.commutes_with(&other.inner)
    }

    fn is_identity(&self) -> bool {
        self.inner.is_identity()
    }

    fn __mul__(&self, other: &PyElement) -> PyResult<PyElement> {
        self.inner.multiply(&other.inner).map(wrap).map_err(to_py)
    }

    fn __pow__(&self, n: i64, _modulo: Option<i64>) -> PyElement {
        wrap(self.inner.power(n))
    }

    fn __eq__(&self, other: &PyElement) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.inner.to_word_text()
    }

    fn __repr__(&self) -> String {
        format!("Element({:?})", self.inner.to_word_text())
    }
}

/// `(infs, sups, lens, representative, conjugator)`.
#[pyfunction]
fn summit_invariants(g: &PyElement) -> (i64, i64, i64, PyElement, PyElement) {
    let s = kernel::summit_invariants(&g.inner);
    (s.infs, s.sups, s.lens, wrap(s.representative), wrap(s.conjugator))
}

#[pyfunction]
#[pyo3(signature = (g, cap = kernel::DEFAULT_CAP))]
fn super_summit_set(g: &PyElement, cap: usize) -> PyResult<Vec<PyElement>> {
    Ok(kernel::super_summit_set(&g.inner, cap).map_err(to_py)?.into_iter().map(wrap).collect())
}

/// A conjugator `w` with `w⁻¹·g·w = h`, or `None`.
#[pyfunction]
#[pyo3(signature = (g, h, cap = kernel::DEFAULT_CAP))]
fn is_conjugate(g: &PyElement, h: &PyElement, cap: usize) -> PyResult<Option<PyElement>> {
    Ok(kernel::is_conjugate(&g.inner, &h.inner, cap).map_err(to_py)?.map(wrap))
}

/// `((inf_num, inf_den), (sup_num, sup_den))`.
#[pyfunction]
fn translation_numbers(g: &PyElement) -> ((i64, i64), (i64, i64)) {
    let t = kernel::translation_numbers(&g.inner);
    (ratio(t.inf), ratio(t.sup))
}

#[pyfunction]
fn is_periodic(g: &PyElement) -> bool {
    kernel::is_periodic(&g.inner)
}

/// `(p, q, conjugator)` for a periodic element, else `None`.
#[pyfunction]
fn periodicity_class(g: &PyElement) -> PyResult<Option<(i64, i64, PyElement)>> {
    Ok(kernel::periodicity_class(&g.inner).map_err(to_py)?.map(|r| (r.p, r.q, wrap(r.conjugator))))
}

#[pyfunction]
fn lens_profile(g: &PyElement, kmax: usize) -> PyResult<Vec<i64>> {
    kernel::lens_profile(&g.inner, kmax).map_err(to_py)
}

/// `(p, q, conjugator)` with `conjugator⁻¹·g^q·conjugator = Δ^p`.
#[pyfunction]
fn delta_root_certificate(g: &PyElement, a: i64, b: i64) -> PyResult<(i64, i64, PyElement)> {
    let c = kernel::delta_root_certificate(&g.inner, a, b).map_err(to_py)?;
    Ok((c.p, c.q, wrap(c.conjugator)))
}

/// `(d, e, conjugator)` with `conjugator⁻¹·g^d·conjugator = Δ^e`.
#[pyfunction]
fn gcd_periodic_exponent(g: &PyElement, a: i64, b: i64) -> PyResult<(i64, i64, PyElement)> {
    let c = kernel::gcd_periodic_exponent(&g.inner, a, b).map_err(to_py)?;
    Ok((c.d, c.e, wrap(c.conjugator)))
}

#[pyfunction]
fn is_central(g: &PyElement) -> bool {
    kernel::is_central(&g.inner)
}

#[pyfunction]
fn is_garside_element(c: &PyElement) -> PyResult<bool> {
    kernel::is_garside_element(&c.inner).map_err(to_py)
}

#[pyfunction]
fn garside_element_from_central(g: &PyElement) -> PyResult<(i64, PyElement)> {
    let (k, c) = kernel::garside_element_from_central(&g.inner).map_err(to_py)?;
    Ok((k, wrap(c)))
}

#[pyfunction]
#[pyo3(signature = (g, h, bound = 10))]
fn commensurable(g: &PyElement, h: &PyElement, bound: i64) -> PyResult<Option<(i64, i64)>> {
    kernel::commensurable(&g.inner, &h.inner, bound).map_err(to_py)
}

/// Order in the central quotient; `None` when infinite.
#[pyfunction]
fn quotient_order(g: &PyElement) -> PyResult<Option<u64>> {
    Ok(match kernel::quotient_order(&g.inner).map_err(to_py)? {
        QuotientOrder::Finite(n) => Some(n),
        QuotientOrder::Infinite => None,
    })
}

/// List of `(u, a, q, element, order)`; `q` is `None` for pure Δ-powers.
#[pyfunction]
fn enumerate_type_i(structure: &PyStructure) -> PyResult<Vec<(i64, String, Option<i64>, PyElement, u64)>> {
    let table = &structure.inner;
    Ok(kernel::enumerate_type_i(table)
        .map_err(to_py)?
        .into_iter()
        .map(|g| (g.u, table.name(g.a).to_string(), g.q, wrap(g.element), g.order))
        .collect())
}

#[pyfunction]
fn inf_additivity_check(g: &PyElement, h: &PyElement) -> PyResult<bool> {
    kernel::inf_additivity_check(&g.inner, &h.inner).map_err(to_py)
}

/// `(generator, order)` of the cyclic subgroup of the central quotient
/// generated by the given elements.
#[pyfunction]
#[pyo3(signature = (generators, cap = kernel::DEFAULT_CAP))]
fn certify_cyclic(generators: Vec<PyElement>, cap: usize) -> PyResult<(PyElement, u64)> {
    let gens: Vec<kernel::Element> = generators.into_iter().map(|g| g.inner).collect();
    let (g, order) = kernel::certify_cyclic(&gens, cap).map_err(to_py)?;
    Ok((wrap(g), order))
}

#[pymodule]
fn pygarside(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyStructure>()?;
    m.add_class::<PyElement>()?;
    m.add("KernelError", m.py().get_type::<KernelError>())?;
    m.add_function(wrap_pyfunction!(summit_invariants, m)?)?;
    m.add_function(wrap_pyfunction!(super_summit_set, m)?)?;
    m.add_function(wrap_pyfunction!(is_conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(translation_numbers, m)?)?;
    m.add_function(wrap_pyfunction!(is_periodic, m)?)?;
    m.add_function(wrap_pyfunction!(periodicity_class, m)?)?;
    m.add_function(wrap_pyfunction!(lens_profile, m)?)?;
    m.add_function(wrap_pyfunction!(delta_root_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(gcd_periodic_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(is_central, m)?)?;
    m.add_function(wrap_pyfunction!(is_garside_element, m)?)?;
    m.add_function(wrap_pyfunction!(garside_element_from_central, m)?)?;
    m.add_function(wrap_pyfunction!(commensurable, m)?)?;
    m.add_function(wrap_pyfunction!(quotient_order, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_type_i, m)?)?;
    m.add_function(wrap_pyfunction!(inf_additivity_check, m)?)?;
    m.add_function(wrap_pyfunction!(certify_cyclic, m)?)?;
    Ok(())
}
