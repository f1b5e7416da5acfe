//! Python bindings.
//!
//! Codes cross the boundary as the canonical JSON documents of the core
//! crate; reports come back as plain dicts and lists.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use serde_json::Value;

use flagcode::cdc::{self, ConstantDimensionCode};
use flagcode::cli;
use flagcode::equiv;
use flagcode::fixtures;
use flagcode::flags::{FlagCode, TypeVector};
use flagcode::genset::{self, CodeProduct};
use flagcode::gf::Field;
use flagcode::grassmann::{AmbientSpace, GroupElement, Mode};
use flagcode::incdec;
use flagcode::io::{self, Document};
use flagcode::random::{self, Profile};
use flagcode::search::SearchBudget;
use flagcode::Error;

create_exception!(pyflagcode, FlagcodeError, PyException);
create_exception!(pyflagcode, SearchTooLarge, FlagcodeError);

fn py_err(e: Error) -> PyErr {
    let msg = format!("{}: {e}", e.kind());
    match e {
        Error::TooLarge { .. } => SearchTooLarge::new_err(msg),
        _ => FlagcodeError::new_err(msg),
    }
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

fn parse_mode(mode: &str) -> PyResult<Mode> {
    match mode {
        "linear" => Ok(Mode::Linear),
        "semilinear" => Ok(Mode::Semilinear),
        other => Err(FlagcodeError::new_err(format!("unknown mode {other:?}"))),
    }
}

fn budget(max_candidates: Option<u128>) -> SearchBudget {
    max_candidates.map_or_else(SearchBudget::default, SearchBudget::new)
}

fn elements<'py>(py: Python<'py>, g: &[GroupElement]) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &Value::Array(g.iter().map(io::group_element_value).collect()))
}

/// A flag code over a finite field.
#[pyclass(name = "FlagCode", module = "pyflagcode", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyFlagCode {
    inner: FlagCode,
}

#[pymethods]
impl PyFlagCode {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        match Document::from_json(text).map_err(py_err)? {
            Document::FlagCode(inner) => Ok(PyFlagCode { inner }),
            other => Err(FlagcodeError::new_err(format!(
                "expected a flagcode payload, found {}",
                other.kind()
            ))),
        }
    }

    #[staticmethod]
    #[pyo3(signature = (name, q=None))]
    fn fixture(name: &str, q: Option<u64>) -> PyResult<Self> {
        Self::from_json(&fixtures::fixture(name, q).map_err(py_err)?.to_json())
    }

    #[staticmethod]
    #[pyo3(signature = (seed, q, n, dims, size, profile="generic"))]
    fn random(seed: u64, q: u64, n: usize, dims: Vec<usize>, size: usize, profile: &str) -> PyResult<Self> {
        let amb = AmbientSpace::new(&Field::with_order(q).map_err(py_err)?, n).map_err(py_err)?;
        let tv = TypeVector::new(&amb, &dims).map_err(py_err)?;
        let profile = Profile::parse(profile).map_err(py_err)?;
        let inner = random::random_flagcode(seed, &tv, size, profile).map_err(py_err)?;
        Ok(PyFlagCode { inner })
    }

    fn to_json(&self) -> String {
        Document::FlagCode(self.inner.clone()).to_json()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "FlagCode(q={}, n={}, type={:?}, size={})",
            self.inner.ambient().field().q(),
            self.inner.ambient().n(),
            self.inner.typevec().dims(),
            self.inner.len()
        )
    }

    #[getter]
    fn q(&self) -> usize {
        self.inner.ambient().field().q()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.ambient().n()
    }

    #[getter]
    fn dims(&self) -> Vec<usize> {
        self.inner.typevec().dims().to_vec()
    }

    /// Each flag as a list of reduced row echelon bases.
    fn flags(&self) -> Vec<Vec<Vec<Vec<u8>>>> {
        self.inner
            .flags()
            .iter()
            .map(|f| f.spaces().iter().map(|u| u.basis().to_rows()).collect())
            .collect()
    }

    fn min_distance(&self) -> usize {
        self.inner.min_distance()
    }

    fn distance_bound(&self) -> usize {
        self.inner.distance_bound()
    }

    fn projected_sizes(&self) -> Vec<usize> {
        self.inner.projected_sizes()
    }

    fn projected_codes(&self) -> Vec<PyCdc> {
        self.inner
            .projected_codes()
            .into_iter()
            .map(|inner| PyCdc { inner })
            .collect()
    }

    fn is_disjoint(&self) -> bool {
        self.inner.is_disjoint()
    }

    fn is_odfc(&self) -> bool {
        self.inner.is_odfc_direct()
    }

    fn is_sic(&self) -> bool {
        genset::is_sic(&self.inner).sic
    }

    fn is_determined(&self) -> bool {
        genset::is_determined(&self.inner).determined
    }

    fn is_increasing(&self) -> bool {
        incdec::is_increasing(&self.inner).holds
    }

    fn is_decreasing(&self) -> bool {
        incdec::is_decreasing(&self.inner).holds
    }

    fn multiplicities(&self) -> Vec<Vec<usize>> {
        genset::multiplicities(&self.inner).rows
    }

    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &cli::classification_value(&self.inner))
    }

    /// The SIC code generated by this code's projected codes.
    fn sic_closure(&self) -> PyResult<Self> {
        let inner = genset::sic_closure(&CodeProduct::of_projected(&self.inner)).map_err(py_err)?;
        Ok(PyFlagCode { inner })
    }

    #[pyo3(signature = (mode="linear", max_candidates=None))]
    fn automorphisms<'py>(
        &self,
        py: Python<'py>,
        mode: &str,
        max_candidates: Option<u128>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let g = equiv::aut_flagcode(&self.inner, parse_mode(mode)?, budget(max_candidates)).map_err(py_err)?;
        elements(py, &g)
    }

    /// Intersection of the projected stabilizers, with the level sizes and SIC flag.
    #[pyo3(signature = (mode="linear", max_candidates=None))]
    fn automorphisms_via_projected<'py>(
        &self,
        py: Python<'py>,
        mode: &str,
        max_candidates: Option<u128>,
    ) -> PyResult<(Bound<'py, PyAny>, Vec<usize>, bool)> {
        let rep = equiv::aut_via_projected(&self.inner, parse_mode(mode)?, budget(max_candidates)).map_err(py_err)?;
        Ok((elements(py, &rep.elements)?, rep.level_sizes, rep.sic))
    }

    #[pyo3(signature = (other, mode="linear", max_candidates=None))]
    fn equivalence<'py>(
        &self,
        py: Python<'py>,
        other: &PyFlagCode,
        mode: &str,
        max_candidates: Option<u128>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let rep = equiv::are_equivalent_flagcodes(&self.inner, &other.inner, parse_mode(mode)?, budget(max_candidates))
            .map_err(py_err)?;
        to_py(py, &cli::equivalence_value(&rep))
    }
}

/// A constant dimension code.
#[pyclass(
    name = "ConstantDimensionCode",
    module = "pyflagcode",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
struct PyCdc {
    inner: ConstantDimensionCode,
}

#[pymethods]
impl PyCdc {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        match Document::from_json(text).map_err(py_err)? {
            Document::Cdc(inner) => Ok(PyCdc { inner }),
            other => Err(FlagcodeError::new_err(format!(
                "expected a cdc payload, found {}",
                other.kind()
            ))),
        }
    }

    #[staticmethod]
    #[pyo3(signature = (name, q=None))]
    fn fixture(name: &str, q: Option<u64>) -> PyResult<Self> {
        Self::from_json(&fixtures::fixture(name, q).map_err(py_err)?.to_json())
    }

    fn to_json(&self) -> String {
        Document::Cdc(self.inner.clone()).to_json()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "ConstantDimensionCode(q={}, n={}, k={}, size={})",
            self.inner.ambient().field().q(),
            self.inner.n(),
            self.inner.k(),
            self.inner.len()
        )
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn words(&self) -> Vec<Vec<Vec<u8>>> {
        self.inner.words().iter().map(|u| u.basis().to_rows()).collect()
    }

    fn min_distance(&self) -> usize {
        self.inner.min_distance()
    }

    fn is_max_distance(&self) -> bool {
        self.inner.is_max_distance()
    }

    #[pyo3(signature = (mode="linear", max_candidates=None))]
    fn automorphisms<'py>(
        &self,
        py: Python<'py>,
        mode: &str,
        max_candidates: Option<u128>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let g = cdc::automorphism_group(&self.inner, parse_mode(mode)?, budget(max_candidates)).map_err(py_err)?;
        elements(py, &g)
    }

    #[pyo3(signature = (other, mode="linear", max_candidates=None))]
    fn equivalence<'py>(
        &self,
        py: Python<'py>,
        other: &PyCdc,
        mode: &str,
        max_candidates: Option<u128>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let rep = equiv::are_equivalent_cdcs(&self.inner, &other.inner, parse_mode(mode)?, budget(max_candidates))
            .map_err(py_err)?;
        to_py(py, &cli::equivalence_value(&rep))
    }
}

#[pyfunction]
fn fixture_names() -> Vec<&'static str> {
    fixtures::FIXTURE_NAMES.to_vec()
}

/// Runs the command-line front end; returns `(exit_code, stdout, stderr)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String, String) {
    let out = cli::run(std::iter::once("flagcode".to_string()).chain(args));
    (out.code, out.stdout, out.stderr)
}

#[pymodule]
fn pyflagcode(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFlagCode>()?;
    m.add_class::<PyCdc>()?;
    m.add_function(wrap_pyfunction!(fixture_names, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    m.add("FlagcodeError", m.py().get_type::<FlagcodeError>())?;
    m.add("SearchTooLarge", m.py().get_type::<SearchTooLarge>())?;
    Ok(())
}
