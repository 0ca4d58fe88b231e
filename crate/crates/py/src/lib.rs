//! Python bindings. Structured results (axiom reports, invariants, verdicts,
//! comodule summaries) are returned as plain dicts with the same layout as the
//! CLI's structured output. Basis indices are flat integer lists
//! `[y_1, ..., y_s, x]` and scalars are rendered as strings.

use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

use gk2hopf_core::algebra::{BasisIndex, Element};
use gk2hopf_core::comodule::{default_quotient, summarize, QuotientSpec};
use gk2hopf_core::families::{parse_instance, InstanceSpec};
use gk2hopf_core::invariants::{canonicalize, invariant_vector, isomorphic, ISO_BOUND};
use gk2hopf_core::verify::{run_suite, SuiteConfig};
use gk2hopf_core::{build, FamilyParams, Instance, InvalidParams};

fn to_py<'py>(py: Python<'py>, value: &impl Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn invalid(e: InvalidParams) -> PyErr {
    if e.pointer.is_empty() {
        PyValueError::new_err(e.message)
    } else {
        PyValueError::new_err(format!("at {}: {}", e.pointer, e.message))
    }
}

fn flat(idx: &BasisIndex) -> Vec<i64> {
    idx.y.iter().copied().chain([idx.x]).collect()
}

type Terms = Vec<(Vec<i64>, String)>;

fn terms(e: &Element) -> Terms {
    e.iter().map(|(k, c)| (flat(k), c.to_string())).collect()
}

/// A validated instance of one of the families.
#[pyclass(module = "gk2hopf", frozen)]
struct HopfAlgebra {
    params: FamilyParams,
    alg: Instance,
}

impl HopfAlgebra {
    fn from_params(params: FamilyParams) -> PyResult<Self> {
        let alg = build(&params).map_err(invalid)?;
        Ok(HopfAlgebra { params, alg })
    }

    fn index(&self, flat: Vec<i64>) -> PyResult<BasisIndex> {
        let (x, y) = flat.split_last().ok_or_else(|| PyValueError::new_err("empty basis index"))?;
        let idx = BasisIndex::multi(y, *x);
        if !self.alg.contains(&idx) {
            return Err(PyValueError::new_err(format!("{flat:?} is not a basis index of {}", self.alg.name())));
        }
        Ok(idx)
    }
}

#[pymethods]
impl HopfAlgebra {
    /// Parses an instance spec given as JSON text.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Self::from_params(parse_instance(text).map_err(invalid)?)
    }

    /// Reads an instance spec file.
    #[staticmethod]
    fn from_file(path: std::path::PathBuf) -> PyResult<Self> {
        let text = std::fs::read_to_string(&path).map_err(|e| PyValueError::new_err(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Builds from a dict with the same layout as an instance spec file.
    #[staticmethod]
    fn from_spec(py: Python<'_>, spec: Bound<'_, PyAny>) -> PyResult<Self> {
        let text: String = py.import("json")?.call_method1("dumps", (spec,))?.extract()?;
        Self::from_json(&text)
    }

    #[getter]
    fn name(&self) -> String {
        self.params.to_string()
    }

    #[getter]
    fn canonical_name(&self) -> String {
        canonicalize(self.alg.params()).to_string()
    }

    /// Canonical parameters as an instance spec dict.
    fn canonical_spec<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &InstanceSpec::from_params(&canonicalize(self.alg.params())))
    }

    /// Generator names with their basis indices.
    fn generators(&self) -> Vec<(String, Vec<i64>)> {
        self.alg.generators().iter().map(|g| (g.name.to_string(), flat(&g.index))).collect()
    }

    /// Basis indices with every exponent in `[-bound, bound]`.
    fn window(&self, bound: i64) -> Vec<Vec<i64>> {
        self.alg.window(bound).iter().map(flat).collect()
    }

    fn multiply(&self, left: Vec<i64>, right: Vec<i64>) -> PyResult<Terms> {
        Ok(terms(&self.alg.multiply_basis(&self.index(left)?, &self.index(right)?)))
    }

    fn coproduct(&self, index: Vec<i64>) -> PyResult<Vec<(Vec<i64>, Vec<i64>, String)>> {
        let t = self.alg.coproduct_basis(&self.index(index)?);
        Ok(t.iter().map(|((a, b), c)| (flat(a), flat(b), c.to_string())).collect())
    }

    fn counit(&self, index: Vec<i64>) -> PyResult<String> {
        Ok(self.alg.counit_basis(&self.index(index)?).to_string())
    }

    fn antipode(&self, index: Vec<i64>) -> PyResult<Terms> {
        Ok(terms(&self.alg.antipode_basis(&self.index(index)?)))
    }

    /// Runs the axiom suite; the result has a boolean `passed` key.
    #[pyo3(signature = (window = 3, assoc_window = 2, seed = 0))]
    fn verify<'py>(&self, py: Python<'py>, window: i64, assoc_window: i64, seed: u64) -> PyResult<Bound<'py, PyAny>> {
        if window < 1 || assoc_window < 1 {
            return Err(PyValueError::new_err("windows must be at least 1"));
        }
        let config = SuiteConfig { window, associativity_window: assoc_window, seed, ..SuiteConfig::default() };
        let alg = self.alg.clone();
        let report = py.detach(move || run_suite(alg.as_ref(), &config));
        let out = to_py(py, &report)?;
        out.set_item("passed", report.passed())?;
        Ok(out)
    }

    fn invariants<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let alg = self.alg.clone();
        let v = py.detach(move || invariant_vector(alg.as_ref(), ISO_BOUND));
        to_py(py, &v)
    }

    /// Isomorphism verdict against another instance.
    fn isomorphic<'py>(&self, py: Python<'py>, other: &HopfAlgebra) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &isomorphic(&self.params, &other.params).map_err(invalid)?)
    }

    /// Comodule summary for a built-in quotient (the family default if omitted).
    #[pyo3(signature = (quotient = None, window = 3))]
    fn comodule<'py>(&self, py: Python<'py>, quotient: Option<String>, window: i64) -> PyResult<Bound<'py, PyAny>> {
        let name = match quotient {
            Some(q) => q,
            None => default_quotient(self.alg.params())
                .ok_or_else(|| PyKeyError::new_err(format!("no default quotient for {}", self.alg.name())))?
                .to_string(),
        };
        let spec = QuotientSpec::builtin(self.alg.as_ref(), &name).map_err(|e| PyValueError::new_err(e.to_string()))?;
        let summary = summarize(self.alg.as_ref(), &spec, window);
        let out = to_py(py, &summary)?;
        out.set_item("passed", summary.passed())?;
        Ok(out)
    }

    fn __repr__(&self) -> String {
        format!("HopfAlgebra({})", self.params)
    }
}

#[pymodule]
fn gk2hopf(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<HopfAlgebra>()?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
