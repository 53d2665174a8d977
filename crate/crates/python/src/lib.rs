//! Python bindings: rings, sequences, inverses, transforms, the exponent
//! isomorphism, and binomial-type families, all exact.
//!
//! Terms cross the boundary as Python ints where the ring allows it and as
//! canonical literal strings otherwise; nothing is ever rounded.

use num_bigint::BigInt;
use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;
use pyo3::IntoPyObjectExt;

use hurwitz_core as core;
use hurwitz_core::{PolySeq, RingValue, UnitSeq};

fn err(e: core::Error) -> PyErr {
    match e {
        core::Error::Io(io) => PyIOError::new_err(io.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

/// A commutative ring with identity: Z, Q, Z/n, or polynomials over another.
#[pyclass(name = "Ring", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyRing {
    inner: core::Ring,
}

#[pymethods]
impl PyRing {
    /// Parse a descriptor such as "Z", "Q", "Zmod:12", "Poly:x:Z".
    #[new]
    fn new(descriptor: &str) -> PyResult<Self> {
        Ok(PyRing {
            inner: core::Ring::parse(descriptor).map_err(err)?,
        })
    }

    #[staticmethod]
    fn integers() -> Self {
        PyRing {
            inner: core::Ring::integers(),
        }
    }

    #[staticmethod]
    fn rationals() -> Self {
        PyRing {
            inner: core::Ring::rationals(),
        }
    }

    #[staticmethod]
    fn integers_mod(modulus: u64) -> PyResult<Self> {
        Ok(PyRing {
            inner: core::Ring::integers_mod(modulus).map_err(err)?,
        })
    }

    #[staticmethod]
    fn polynomials(base: &PyRing, variable: &str) -> PyResult<Self> {
        Ok(PyRing {
            inner: core::Ring::polynomials(&base.inner, variable).map_err(err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!("Ring({:?})", self.inner.to_string())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }
}

/// A finite sequence of ring elements, term n read as a coefficient of t^n/n!.
#[pyclass(name = "Seq", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PySeq {
    inner: core::Seq,
}

fn wrap(inner: core::Seq) -> PySeq {
    PySeq { inner }
}

fn value_from_py(ring: &core::Ring, term: &Bound<'_, PyAny>) -> PyResult<RingValue> {
    if let Ok(i) = term.extract::<BigInt>() {
        return Ok(ring.from_integer(&i));
    }
    let text = term
        .extract::<String>()
        .map_err(|_| PyValueError::new_err("terms must be ints or literal strings"))?;
    core::parse_value_literal(ring, &text).map_err(err)
}

fn value_to_py(py: Python<'_>, value: &RingValue) -> PyResult<Py<PyAny>> {
    if let Some(i) = value.as_integer() {
        return i.clone().into_py_any(py);
    }
    if let Some(r) = value.as_residue() {
        return r.clone().into_py_any(py);
    }
    value.to_string().into_py_any(py)
}

fn poly_seq(seq: &PySeq) -> PyResult<PolySeq> {
    PolySeq::new(seq.inner.clone()).map_err(err)
}

fn unit_seq(seq: &PySeq) -> PyResult<UnitSeq> {
    UnitSeq::new(seq.inner.clone()).map_err(err)
}

#[pymethods]
impl PySeq {
    #[new]
    fn new(ring: &PyRing, terms: Vec<Bound<'_, PyAny>>) -> PyResult<Self> {
        let values = terms
            .iter()
            .map(|t| value_from_py(&ring.inner, t))
            .collect::<PyResult<Vec<_>>>()?;
        Ok(wrap(
            core::Seq::new(ring.inner.clone(), values).map_err(err)?,
        ))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(wrap(core::parse_seq(text).map_err(err)?))
    }

    #[staticmethod]
    fn ones(ring: &PyRing, n: usize) -> Self {
        wrap(core::Seq::ones(&ring.inner, n))
    }

    #[staticmethod]
    fn zeros(ring: &PyRing, n: usize) -> Self {
        wrap(core::Seq::zeros(&ring.inner, n))
    }

    #[staticmethod]
    fn hurwitz_identity(ring: &PyRing, n: usize) -> Self {
        wrap(core::Seq::hurwitz_identity(&ring.inner, n))
    }

    #[staticmethod]
    fn composition_identity(ring: &PyRing, n: usize) -> PyResult<Self> {
        if n < 2 {
            return Err(PyValueError::new_err("need at least two terms"));
        }
        Ok(wrap(core::Seq::composition_identity(&ring.inner, n)))
    }

    #[staticmethod]
    fn factorials(ring: &PyRing, n: usize) -> Self {
        wrap(core::Seq::factorials(&ring.inner, n))
    }

    #[getter]
    fn ring(&self) -> PyRing {
        PyRing {
            inner: self.inner.ring().clone(),
        }
    }

    /// Terms as Python ints where exact, else canonical literal strings.
    fn terms(&self, py: Python<'_>) -> PyResult<Vec<Py<PyAny>>> {
        self.inner
            .terms()
            .iter()
            .map(|t| value_to_py(py, t))
            .collect()
    }

    fn to_json(&self) -> String {
        core::serialize_seq(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        let terms: Vec<String> = self.inner.terms().iter().map(|t| t.to_string()).collect();
        format!("Seq[{}]({})", self.inner.ring(), terms.join(", "))
    }

    fn add(&self, other: &PySeq) -> PyResult<Self> {
        Ok(wrap(self.inner.add(&other.inner).map_err(err)?))
    }

    fn neg(&self) -> Self {
        wrap(self.inner.neg())
    }

    fn sub(&self, other: &PySeq) -> PyResult<Self> {
        Ok(wrap(self.inner.sub(&other.inner).map_err(err)?))
    }

    fn hurwitz(&self, other: &PySeq) -> PyResult<Self> {
        Ok(wrap(self.inner.hurwitz(&other.inner).map_err(err)?))
    }

    fn cauchy(&self, other: &PySeq) -> PyResult<Self> {
        Ok(wrap(self.inner.cauchy(&other.inner).map_err(err)?))
    }

    fn hadamard(&self, other: &PySeq) -> PyResult<Self> {
        Ok(wrap(self.inner.hadamard(&other.inner).map_err(err)?))
    }

    fn compose_egf(&self, other: &PySeq) -> PyResult<Self> {
        Ok(wrap(self.inner.compose_egf(&other.inner).map_err(err)?))
    }

    fn compose_ogf(&self, other: &PySeq) -> PyResult<Self> {
        Ok(wrap(self.inner.compose_ogf(&other.inner).map_err(err)?))
    }

    fn hurwitz_power(&self, m: u64) -> Self {
        wrap(self.inner.hurwitz_power(m))
    }

    fn gamma(&self) -> Self {
        wrap(self.inner.gamma())
    }

    fn gamma_inv(&self) -> PyResult<Self> {
        Ok(wrap(self.inner.gamma_inv().map_err(err)?))
    }

    fn shift_minus(&self) -> PyResult<Self> {
        Ok(wrap(self.inner.shift_minus().map_err(err)?))
    }

    /// Prepend a term (given as int or literal string).
    fn shift_plus(&self, head: &Bound<'_, PyAny>) -> PyResult<Self> {
        let value = value_from_py(self.inner.ring(), head)?;
        Ok(wrap(self.inner.shift_plus(value).map_err(err)?))
    }

    fn truncate(&self, n: usize) -> PyResult<Self> {
        Ok(wrap(self.inner.truncate(n).map_err(err)?))
    }
}

#[pyfunction]
fn hurwitz_inverse(a: &PySeq) -> PyResult<PySeq> {
    Ok(wrap(core::hurwitz_inverse(&a.inner).map_err(err)?))
}

#[pyfunction]
fn hurwitz_inverse_bell(a: &PySeq) -> PyResult<PySeq> {
    Ok(wrap(core::hurwitz_inverse_bell(&a.inner).map_err(err)?))
}

#[pyfunction]
fn hurwitz_inverse_via_relinv(a: &PySeq) -> PyResult<PySeq> {
    Ok(wrap(
        core::hurwitz_inverse_via_relinv(&a.inner).map_err(err)?,
    ))
}

#[pyfunction]
fn comp_inverse(a: &PySeq) -> PyResult<PySeq> {
    Ok(wrap(core::comp_inverse(&a.inner).map_err(err)?))
}

#[pyfunction]
fn comp_inverse_closed(a: &PySeq) -> PyResult<PySeq> {
    Ok(wrap(core::comp_inverse_closed(&a.inner).map_err(err)?))
}

#[pyfunction]
fn comp_inverse_via_cinv(a: &PySeq) -> PyResult<PySeq> {
    Ok(wrap(core::comp_inverse_via_cinv(&a.inner).map_err(err)?))
}

#[pyfunction]
fn alt_sign(a: &PySeq) -> PySeq {
    wrap(core::alt_sign(&a.inner))
}

#[pyfunction]
fn stirling(a: &PySeq) -> PySeq {
    wrap(core::stirling(&a.inner))
}

#[pyfunction]
fn stirling_inverse(a: &PySeq) -> PySeq {
    wrap(core::stirling_inverse(&a.inner))
}

/// Apply a transform given by its spec string, e.g. "beta:2" or "stirling".
#[pyfunction]
fn apply_transform(spec: &str, a: &PySeq) -> PyResult<PySeq> {
    let t = core::TransformSpec::parse(spec, a.inner.ring()).map_err(err)?;
    Ok(wrap(t.apply(&a.inner).map_err(err)?))
}

/// Invert a transform spec string over the given ring.
#[pyfunction]
fn invert_transform(spec: &str, ring: &PyRing) -> PyResult<String> {
    let t = core::TransformSpec::parse(spec, &ring.inner).map_err(err)?;
    Ok(t.inverted().map_err(err)?.to_string())
}

#[pyfunction]
#[pyo3(signature = (x, n=None))]
fn tau_forward(x: &PySeq, n: Option<usize>) -> PyResult<PySeq> {
    let n = n.unwrap_or(x.inner.len() + 1);
    Ok(wrap(
        core::tau_forward(&x.inner, n).map_err(err)?.seq().clone(),
    ))
}

#[pyfunction]
fn tau_inverse(a: &PySeq) -> PyResult<PySeq> {
    Ok(wrap(core::tau_inverse(&unit_seq(a)?).map_err(err)?))
}

#[pyfunction]
fn basis_power(i: usize, exponent: &Bound<'_, PyAny>, ring: &PyRing, n: usize) -> PyResult<PySeq> {
    let e = value_from_py(&ring.inner, exponent)?;
    Ok(wrap(core::basis_power(i, &e, n)))
}

#[pyfunction]
#[pyo3(signature = (u, n=None))]
fn binomial_from_u(u: &PySeq, n: Option<usize>) -> PyResult<PySeq> {
    let n = n.unwrap_or(u.inner.len() + 1);
    Ok(wrap(
        core::binomial_from_u(&u.inner, n)
            .map_err(err)?
            .seq()
            .clone(),
    ))
}

#[pyfunction]
#[pyo3(signature = (q, verify=true))]
fn u_from_binomial(q: &PySeq, verify: bool) -> PyResult<PySeq> {
    let q = poly_seq(q)?;
    let u = if verify {
        core::u_from_binomial(&q)
    } else {
        core::u_from_binomial_unchecked(&q)
    };
    Ok(wrap(u.map_err(err)?))
}

#[pyfunction]
#[pyo3(signature = (a, n=None))]
fn pa_polynomials(a: &PySeq, n: Option<usize>) -> PyResult<PySeq> {
    let n = n.unwrap_or(a.inner.len());
    let a = unit_seq(a)?;
    Ok(wrap(
        core::pa_polynomials(&a, n).map_err(err)?.seq().clone(),
    ))
}

#[pyfunction]
fn pa_coefficient(py: Python<'_>, a: &PySeq, n: usize, j: usize) -> PyResult<Py<PyAny>> {
    let a = unit_seq(a)?;
    value_to_py(py, &core::pa_coefficient(&a, n, j).map_err(err)?)
}

/// Returns (holds, failing_index_or_None).
#[pyfunction]
fn is_binomial_type(q: &PySeq) -> PyResult<(bool, Option<usize>)> {
    let report = core::is_binomial_type(&poly_seq(q)?).map_err(err)?;
    let index = report.failure.as_ref().map(|f| f.index);
    Ok((report.holds, index))
}

#[pyfunction]
fn a_from_binomial(q: &PySeq) -> PyResult<PySeq> {
    Ok(wrap(
        core::a_from_binomial(&poly_seq(q)?)
            .map_err(err)?
            .seq()
            .clone(),
    ))
}

/// Generate a named family: powers, laguerre, touchard, abel, pochhammer.
#[pyfunction]
fn family(name: &str, n: usize) -> PyResult<PySeq> {
    let f: core::Family = name
        .parse()
        .map_err(|_| PyValueError::new_err(format!("unknown family {name:?}")))?;
    Ok(wrap(core::family(f, n).map_err(err)?.seq().clone()))
}

/// Search the bundled catalog snapshot ("offline") or the live service
/// ("online"); "disabled" always fails.
#[pyfunction]
#[pyo3(signature = (prefix, mode="offline"))]
fn oeis_lookup(py: Python<'_>, prefix: Vec<BigInt>, mode: &str) -> PyResult<Vec<Py<PyAny>>> {
    let mode = match mode {
        "disabled" => core::OeisMode::Disabled,
        "offline" => core::OeisMode::Fixture,
        "online" => core::OeisMode::Online,
        other => {
            return Err(PyValueError::new_err(format!(
                "mode must be disabled/offline/online, got {other:?}"
            )))
        }
    };
    let hits = core::oeis_lookup(&prefix, mode).map_err(err)?;
    hits.iter()
        .map(|h| {
            let d = PyDict::new(py);
            d.set_item("id", &h.id)?;
            d.set_item("name", &h.name)?;
            d.set_item("offset", h.offset)?;
            d.into_py_any(py)
        })
        .collect()
}

#[pymodule]
fn hurwitz_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRing>()?;
    m.add_class::<PySeq>()?;
    m.add_function(wrap_pyfunction!(hurwitz_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(hurwitz_inverse_bell, m)?)?;
    m.add_function(wrap_pyfunction!(hurwitz_inverse_via_relinv, m)?)?;
    m.add_function(wrap_pyfunction!(comp_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(comp_inverse_closed, m)?)?;
    m.add_function(wrap_pyfunction!(comp_inverse_via_cinv, m)?)?;
    m.add_function(wrap_pyfunction!(alt_sign, m)?)?;
    m.add_function(wrap_pyfunction!(stirling, m)?)?;
    m.add_function(wrap_pyfunction!(stirling_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(apply_transform, m)?)?;
    m.add_function(wrap_pyfunction!(invert_transform, m)?)?;
    m.add_function(wrap_pyfunction!(tau_forward, m)?)?;
    m.add_function(wrap_pyfunction!(tau_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(basis_power, m)?)?;
    m.add_function(wrap_pyfunction!(binomial_from_u, m)?)?;
    m.add_function(wrap_pyfunction!(u_from_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(pa_polynomials, m)?)?;
    m.add_function(wrap_pyfunction!(pa_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(is_binomial_type, m)?)?;
    m.add_function(wrap_pyfunction!(a_from_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(oeis_lookup, m)?)?;
    Ok(())
}
