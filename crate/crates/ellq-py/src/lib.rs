//! Python module `ellq`: Weyl groups, elliptic fake degrees, Fourier
//! matrices, the affine G2 computation and the verification suites.

use std::sync::Arc;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use ellq_core::affine::{affine_formal_degree, ef_affine_elliptic, nu_function, EllipticCharacterTable};
use ellq_core::elliptic::{elliptic_fake_degree, independence_check};
use ellq_core::exactq::{parse_rational, ratfunc_to_factored_report, RatFunc as CoreRatFunc};
use ellq_core::fixtures::Fixtures;
use ellq_core::fourier::SmallGroup;
use ellq_core::verify::{mx_report, run_verify, VerificationReport};
use ellq_core::weylgrp::{CartanType, WeylGroup as CoreWeyl};
use ellq_core::Error;

fn err(e: Error) -> PyErr {
    match e {
        Error::Parse(_) | Error::Invalid(_) => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn fixtures(dir: Option<&str>) -> Fixtures {
    dir.map(Fixtures::with_dir).unwrap_or_default()
}

/// An exact rational function of q.
#[pyclass(frozen, eq, skip_from_py_object, module = "ellq")]
#[derive(Clone, PartialEq)]
pub struct RatFunc(CoreRatFunc);

#[pymethods]
impl RatFunc {
    /// Cyclotomically factored form, e.g. "(q-1)^2 * Phi5 / (Phi2^2 Phi3 Phi6)".
    fn factored(&self) -> String {
        self.0.factored()
    }

    /// Numerator and denominator as expanded polynomials.
    fn raw(&self) -> String {
        self.0.to_string()
    }

    /// Value at a rational q, given as int or "a/b"; returned as "a/b".
    fn eval(&self, q: &Bound<'_, PyAny>) -> PyResult<String> {
        let x = parse_rational(&q.str()?.to_string()).map_err(err)?;
        Ok(self.0.eval(&x).map_err(err)?.to_string())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The factored JSON report used by the command-line tool.
    fn to_json(&self) -> String {
        ratfunc_to_factored_report(&self.0).to_string()
    }

    fn __str__(&self) -> String {
        self.0.factored()
    }

    fn __repr__(&self) -> String {
        format!("RatFunc({})", self.0.factored())
    }
}

/// A finite Weyl group, enumerated with its character table.
#[pyclass(frozen, module = "ellq")]
pub struct WeylGroup(Arc<CoreWeyl>);

impl WeylGroup {
    fn chi(&self, label: &str) -> PyResult<Vec<ellq_core::exactq::Rational>> {
        self.0.character_by_label(label).map_err(err)
    }
}

#[pymethods]
impl WeylGroup {
    #[new]
    fn new(cartan_type: &str) -> PyResult<Self> {
        Ok(WeylGroup(CoreWeyl::parse(cartan_type).map_err(err)?))
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    #[getter]
    fn exponents(&self) -> Vec<u32> {
        self.0.exponents()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.0.labels().to_vec()
    }

    /// (size, characteristic polynomial, elliptic) for every class.
    fn classes(&self) -> Vec<(usize, String, bool)> {
        (0..self.0.num_classes())
            .map(|c| (self.0.class_size(c), self.0.charpoly(c).to_string(), self.0.is_elliptic(c)))
            .collect()
    }

    fn elliptic_classes(&self) -> Vec<usize> {
        self.0.elliptic_classes()
    }

    /// Character values, one per class.
    fn character(&self, label: &str) -> PyResult<Vec<i64>> {
        let i = self.0.irrep_index(label).map_err(err)?;
        Ok(self.0.table().values[i].clone())
    }

    fn fake_degree(&self, label: &str) -> PyResult<RatFunc> {
        Ok(RatFunc(self.0.fake_degree(&self.chi(label)?)))
    }

    fn elliptic_fake_degree(&self, label: &str) -> PyResult<RatFunc> {
        Ok(RatFunc(elliptic_fake_degree(&self.0, &self.chi(label)?)))
    }

    /// (number of elliptic classes, rank of {1/det(1-qw)} on them).
    fn independence(&self) -> (usize, usize) {
        let r = independence_check(&self.0);
        (r.elliptic_classes, r.rank)
    }

    fn __repr__(&self) -> String {
        format!("WeylGroup({})", self.0.spec())
    }
}

/// Labels and entries ("a/b", or a cyclotomic expression) of the Fourier matrix of M(Γ).
#[pyfunction]
fn fourier_matrix(gamma: &str) -> PyResult<(Vec<String>, Vec<Vec<String>>)> {
    let b = SmallGroup::parse(gamma).and_then(|g| g.fourier_matrix()).map_err(err)?;
    let rows = b
        .matrix
        .iter()
        .map(|r| r.iter().map(|c| c.to_rational().map_or_else(|| format!("{c:?}"), |x| x.to_string())).collect())
        .collect();
    Ok((b.labels, rows))
}

fn rows(r: Vec<VerificationReport>) -> Vec<(String, String, String)> {
    r.into_iter().map(|r| (r.check_id, r.status.to_string(), r.notes)).collect()
}

/// (check id, status, notes) for each check of a suite.
#[pyfunction]
#[pyo3(signature = (suite, fixtures_dir=None))]
fn verify(suite: &str, fixtures_dir: Option<&str>) -> PyResult<Vec<(String, String, String)>> {
    Ok(rows(run_verify(suite, &fixtures(fixtures_dir)).map_err(err)?))
}

/// The same suite as a JSON array of reports.
#[pyfunction]
#[pyo3(signature = (suite, fixtures_dir=None))]
fn verify_json(suite: &str, fixtures_dir: Option<&str>) -> PyResult<String> {
    let r = run_verify(suite, &fixtures(fixtures_dir)).map_err(err)?;
    serde_json::to_string(&r).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

/// (status, computed m_x) for a named case such as "g2-a1-s1".
#[pyfunction]
fn mx(case: &str) -> PyResult<(String, String)> {
    let r = mx_report(case, &Fixtures::embedded()).map_err(err)?;
    let text = r.computed.get("text").and_then(|t| t.as_str()).unwrap_or_default().to_string();
    Ok((r.status.to_string(), text))
}

/// Affine Weyl group with trivial Ω.
#[pyclass(frozen, module = "ellq")]
pub struct AffineDatum(ellq_core::affine::AffineDatum);

impl AffineDatum {
    fn g2_table(&self, fx: &Fixtures) -> PyResult<EllipticCharacterTable> {
        if self.0.base() != CartanType::G2 {
            return Err(PyValueError::new_err(format!("no elliptic character table for {}", self.0.base())));
        }
        EllipticCharacterTable::g2(fx).map_err(err)
    }
}

#[pymethods]
impl AffineDatum {
    #[new]
    fn new(cartan_type: &str) -> PyResult<Self> {
        Ok(AffineDatum(ellq_core::affine::AffineDatum::parse(cartan_type).map_err(err)?))
    }

    /// (label, maximal parahoric, its type, element order, μ_el) per elliptic class.
    fn classes(&self) -> PyResult<Vec<(String, String, String, u32, String)>> {
        let ps = self.0.maximal_parabolics().map_err(err)?;
        Ok(self
            .0
            .elliptic_classes()
            .map_err(err)?
            .into_iter()
            .map(|c| {
                let p = &ps[c.parabolic];
                (c.label, p.name(), p.spec.to_string(), c.element_order, c.mu.to_string())
            })
            .collect())
    }

    fn nu(&self) -> PyResult<Vec<RatFunc>> {
        Ok(nu_function(&self.0, &Fixtures::embedded()).map_err(err)?.values.into_iter().map(RatFunc).collect())
    }

    /// EF^a on the elliptic discrete series of type G2, in the basis v1..v5.
    fn ef_affine(&self) -> PyResult<Vec<Vec<String>>> {
        let fx = Fixtures::embedded();
        let t = self.g2_table(&fx)?;
        let m = ef_affine_elliptic(&self.0, &fx, &t.basis()).map_err(err)?;
        Ok(m.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect())
    }

    /// (name, formal degree) for the elliptic discrete series v1..v5 of type G2.
    fn formal_degrees(&self) -> PyResult<Vec<(String, RatFunc)>> {
        let fx = Fixtures::embedded();
        let t = self.g2_table(&fx)?;
        let cls = self.0.elliptic_classes().map_err(err)?;
        let nu = nu_function(&self.0, &fx).map_err(err)?;
        t.characters
            .iter()
            .map(|c| Ok((c.name.clone(), RatFunc(affine_formal_degree(&cls, &c.class_function(), &nu).map_err(err)?))))
            .collect()
    }
}

#[pymodule]
fn ellq(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<RatFunc>()?;
    m.add_class::<WeylGroup>()?;
    m.add_class::<AffineDatum>()?;
    m.add_function(wrap_pyfunction!(fourier_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(verify_json, m)?)?;
    m.add_function(wrap_pyfunction!(mx, m)?)?;
    Ok(())
}
