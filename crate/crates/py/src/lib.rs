use ::asgenus::asnorm::{normalize as normalize_as, NormalizedAS};
use ::asgenus::gf::Fq;
use ::asgenus::invariants;
use ::asgenus::parse::parse_expression;
use ::asgenus::poly::DEFAULT_SEED;
use ::asgenus::ratfunc::{FqPoly, FunctionField, RationalFunction};
use ::asgenus::report::{build_field, run, Options};
use ::asgenus::symbols::{self, DEFAULT_SEARCH_BOUND};
use ::asgenus::zeta::{self, DEFAULT_BUDGET};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(asgenus, AsGenusError, PyValueError);

fn err(e: impl std::fmt::Display) -> PyErr {
    AsGenusError::new_err(e.to_string())
}

/// A finite field F_q given by a spec such as "2", "9", "3^2" or "2^3:1,1,0,1".
#[pyclass(name = "Field", frozen)]
struct PyField {
    kf: FunctionField,
}

#[pymethods]
impl PyField {
    #[new]
    #[pyo3(signature = (spec, modulus=None, seed=DEFAULT_SEED))]
    fn new(spec: &str, modulus: Option<&str>, seed: u64) -> PyResult<Self> {
        let field = build_field(spec, modulus).map_err(err)?;
        Ok(PyField {
            kf: FunctionField::with_seed(field, seed),
        })
    }

    #[getter]
    fn p(&self) -> u64 {
        self.field().desc().p
    }

    #[getter]
    fn n(&self) -> usize {
        self.field().n()
    }

    #[getter]
    fn q(&self) -> u64 {
        self.field().q()
    }

    #[getter]
    fn modulus(&self) -> Vec<u64> {
        self.field().desc().modulus.clone()
    }

    /// Parses an expression in t and returns it in canonical form.
    fn parse(&self, expr: &str) -> PyResult<String> {
        Ok(self.kf.format(&self.rational(expr)?))
    }

    /// Monic irreducible factors of a polynomial, as (factor, multiplicity) pairs.
    fn factor(&self, expr: &str) -> PyResult<Vec<(String, usize)>> {
        let f = self.polynomial(expr)?;
        let r = self.kf.ring();
        let fac = r.factorize(&f).map_err(err)?;
        Ok(fac.factors.iter().map(|(g, e)| (r.format(g), *e)).collect())
    }

    fn irreducibles(&self, max_degree: usize) -> Vec<String> {
        let r = self.kf.ring();
        r.irreducibles_up_to(max_degree)
            .iter()
            .map(|g| r.format(g))
            .collect()
    }

    fn __repr__(&self) -> String {
        format!("Field('{}')", self.field().desc())
    }
}

impl PyField {
    fn field(&self) -> &Fq {
        self.kf.field()
    }

    fn rational(&self, expr: &str) -> PyResult<RationalFunction> {
        parse_expression(expr, &self.kf).map_err(err)
    }

    fn polynomial(&self, expr: &str) -> PyResult<FqPoly> {
        let d = self.rational(expr)?;
        if !d.is_polynomial() {
            return Err(err(format!("{expr} is not a polynomial")));
        }
        Ok(d.num().clone())
    }

    fn normalized(&self, d: &str) -> PyResult<NormalizedAS> {
        normalize_as(&self.kf, &self.rational(d)?).map_err(err)
    }
}

/// Normal form of D: parts, polynomial part, classification and witness B.
#[pyfunction]
fn normalize<'py>(py: Python<'py>, field: &PyField, d: &str) -> PyResult<Bound<'py, PyDict>> {
    let kf = &field.kf;
    let norm = field.normalized(d)?;
    let out = PyDict::new(py);
    let parts: Vec<(String, usize, String)> = norm
        .parts
        .iter()
        .map(|part| {
            (
                kf.ring().format(&part.place),
                part.e,
                kf.ring().format(&part.numer),
            )
        })
        .collect();
    out.set_item("parts", parts)?;
    out.set_item("f", kf.ring().format(&norm.poly))?;
    out.set_item("d", kf.format(&norm.value(kf)))?;
    out.set_item("witness", kf.format(&norm.witness))?;
    out.set_item("classification", norm.classification.name())?;
    out.set_item("m", norm.m())?;
    Ok(out)
}

/// The Hasse symbol {D/P} in 0..p at a monic irreducible P.
#[pyfunction]
fn hasse_symbol(field: &PyField, d: &str, place: &str) -> PyResult<u64> {
    symbols::hasse_symbol(&field.kf, &field.rational(d)?, &field.polynomial(place)?).map_err(err)
}

/// {D/P} from the power-sum congruence, an independent computation.
#[pyfunction]
fn hasse_symbol_powersum(field: &PyField, d: &str, place: &str) -> PyResult<u64> {
    symbols::hasse_symbol_powersum(&field.kf, &field.rational(d)?, &field.polynomial(place)?)
        .map_err(err)
}

/// True when P splits completely, found by searching for a root of T^p - T - D mod P.
#[pyfunction]
#[pyo3(signature = (field, d, place, bound=DEFAULT_SEARCH_BOUND))]
fn splits_completely(field: &PyField, d: &str, place: &str, bound: u64) -> PyResult<bool> {
    let s = symbols::splitting_oracle(
        &field.kf,
        &field.rational(d)?,
        &field.polynomial(place)?,
        bound,
    )
    .map_err(err)?;
    Ok(s == symbols::Splitting::SplitsCompletely)
}

/// The Redei matrix as (place labels, rows).
#[pyfunction]
fn redei_matrix(field: &PyField, d: &str) -> PyResult<(Vec<String>, Vec<Vec<u64>>)> {
    let norm = field.normalized(d)?;
    let m = invariants::redei_matrix(&field.kf, &norm);
    Ok((
        m.places.iter().map(|p| field.kf.ring().format(p)).collect(),
        m.entries,
    ))
}

/// (lambda1, rank, lambda2).
#[pyfunction]
fn lambdas(field: &PyField, d: &str) -> PyResult<(usize, usize, usize)> {
    let norm = field.normalized(d)?;
    let rep = invariants::invariants(&field.kf, &norm).map_err(err)?;
    Ok((rep.lambda1, rep.rank, rep.lambda2))
}

#[pyfunction]
fn genus(field: &PyField, d: &str) -> PyResult<usize> {
    Ok(zeta::genus(&field.kf, &field.normalized(d)?))
}

/// Point counts N_1..N_k of the smooth projective curve y^p - y = D.
#[pyfunction]
#[pyo3(signature = (field, d, k, budget=DEFAULT_BUDGET))]
fn point_counts(field: &PyField, d: &str, k: usize, budget: u64) -> PyResult<Vec<u64>> {
    let norm = field.normalized(d)?;
    (1..=k)
        .map(|i| zeta::point_count(&field.kf, &norm, i, budget).map_err(err))
        .collect()
}

/// Coefficients a_0..a_2g of the L-polynomial.
#[pyfunction]
#[pyo3(signature = (field, d, budget=DEFAULT_BUDGET))]
fn l_polynomial(field: &PyField, d: &str, budget: u64) -> PyResult<Vec<i128>> {
    let norm = field.normalized(d)?;
    Ok(zeta::l_polynomial(&field.kf, &norm, budget)
        .map_err(err)?
        .coeffs)
}

#[pyfunction]
#[pyo3(signature = (field, d, budget=DEFAULT_BUDGET))]
fn class_number(field: &PyField, d: &str, budget: u64) -> PyResult<i128> {
    let norm = field.normalized(d)?;
    zeta::class_number(&field.kf, &norm, budget).map_err(err)
}

/// The full report as a dict, matching the command-line JSON output.
#[pyfunction]
#[pyo3(signature = (field, d, zeta=false, budget=DEFAULT_BUDGET, modulus=None, seed=DEFAULT_SEED))]
fn analyze<'py>(
    py: Python<'py>,
    field: &str,
    d: &str,
    zeta: bool,
    budget: u64,
    modulus: Option<&str>,
    seed: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let opts = Options { zeta, budget, seed };
    let report = run(field, modulus, d, &opts).map_err(err)?;
    py.import("json")?
        .call_method1("loads", (report.to_json(),))
}

#[pymodule]
fn asgenus(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("AsGenusError", m.py().get_type::<AsGenusError>())?;
    m.add_class::<PyField>()?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(hasse_symbol, m)?)?;
    m.add_function(wrap_pyfunction!(hasse_symbol_powersum, m)?)?;
    m.add_function(wrap_pyfunction!(splits_completely, m)?)?;
    m.add_function(wrap_pyfunction!(redei_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(lambdas, m)?)?;
    m.add_function(wrap_pyfunction!(genus, m)?)?;
    m.add_function(wrap_pyfunction!(point_counts, m)?)?;
    m.add_function(wrap_pyfunction!(l_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(class_number, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    Ok(())
}
