//! Python bindings: `Matroid`, `Ideal` and `AffineSpace`, plus `report`,
//! which returns the same JSON as the `matlin` command.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use matlin::activities::{f_vector, h_polynomial, tutte};
use matlin::affine::{
    affine_bidegrees, enumerate_affine_initial_ideals, initial_ideal_affine, lasvergnas_tutte, matroid_triple,
    MatroidTriple,
};
use matlin::ideal::{bidegree, enumerate_initial_ideals, initial_ideal, multidegree};
use matlin::io::MatroidInput;
use matlin::polytope::{cocircuit_polytope, summand_check};
use matlin::simplicial::{betti_from_mobius, cm_from_betti, hochster_betti, primary_decomposition};
use matlin::{
    BettiTable, ElemSet, LinearOrder, Rat, RatMatrix, SquarefreeMonomialIdeal, VarSet, AFFINE_SWEEP_CUTOFF,
    LINEAR_SWEEP_CUTOFF,
};
use matlin_cli::{run_with_jobs, Command, Format, Input, JobSpec};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Python ints directly, anything else through `str` (so `Fraction` and
/// `"p/q"` both work).
fn rat(obj: &Bound<'_, PyAny>) -> PyResult<Rat> {
    if let Ok(v) = obj.extract::<i64>() {
        return Ok(Rat::from_int(v));
    }
    obj.str()?.to_str()?.trim().parse::<Rat>().map_err(err)
}

fn matrix(rows: &Bound<'_, PyAny>) -> PyResult<RatMatrix> {
    let mut out = Vec::new();
    for row in rows.try_iter()? {
        out.push(row?.try_iter()?.map(|v| rat(&v?)).collect::<PyResult<Vec<_>>>()?);
    }
    RatMatrix::from_rows(out).map_err(err)
}

fn elems(s: &[u32]) -> ElemSet {
    s.iter().copied().collect()
}

fn sets(list: &[ElemSet]) -> Vec<Vec<u32>> {
    list.iter().map(|s| s.to_vec()).collect()
}

fn monomial(v: VarSet) -> String {
    v.to_string()
}

fn order_on(ground: ElemSet, seq: Option<Vec<u32>>) -> PyResult<LinearOrder> {
    match seq {
        Some(seq) => LinearOrder::on(ground, seq).map_err(err),
        None => Ok(LinearOrder::natural(ground)),
    }
}

fn betti_rows<D: matlin::simplicial::Degree>(t: &BettiTable<D>) -> (Vec<u64>, Vec<Vec<u64>>) {
    (t.totals(), t.graded())
}

#[pyclass(module = "matlin_py", name = "Matroid", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyMatroid(matlin::Matroid);

#[pymethods]
impl PyMatroid {
    /// Column matroid of a rational matrix given as rows of ints, strings
    /// or fractions.
    #[staticmethod]
    fn from_matrix(rows: &Bound<'_, PyAny>) -> PyResult<Self> {
        matlin::Matroid::from_matrix(&matrix(rows)?).map(PyMatroid).map_err(err)
    }

    #[staticmethod]
    fn from_bases(n: u32, bases: Vec<Vec<u32>>) -> PyResult<Self> {
        let input = MatroidInput::Bases { n, bases };
        input.build().map(PyMatroid).map_err(err)
    }

    #[staticmethod]
    fn uniform(r: usize, n: u32) -> Self {
        PyMatroid(matlin::Matroid::uniform(r, n))
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    #[getter]
    fn ground(&self) -> Vec<u32> {
        self.0.ground().to_vec()
    }

    fn rank_of(&self, s: Vec<u32>) -> usize {
        self.0.rank_of(elems(&s))
    }

    fn closure(&self, s: Vec<u32>) -> Vec<u32> {
        self.0.closure(elems(&s)).to_vec()
    }

    fn is_basis(&self, s: Vec<u32>) -> bool {
        self.0.is_basis(elems(&s))
    }

    fn bases(&self) -> Vec<Vec<u32>> {
        sets(self.0.bases())
    }

    fn circuits(&self) -> Vec<Vec<u32>> {
        sets(self.0.circuits())
    }

    fn cocircuits(&self) -> Vec<Vec<u32>> {
        sets(self.0.cocircuits())
    }

    fn flats(&self) -> Vec<Vec<u32>> {
        sets(self.0.flats())
    }

    fn loops(&self) -> Vec<u32> {
        self.0.loops().to_vec()
    }

    fn coloops(&self) -> Vec<u32> {
        self.0.coloops().to_vec()
    }

    fn dual(&self) -> Self {
        PyMatroid(self.0.dual())
    }

    fn delete(&self, s: Vec<u32>) -> Self {
        PyMatroid(self.0.delete(elems(&s)))
    }

    fn contract(&self, s: Vec<u32>) -> Self {
        PyMatroid(self.0.contract(elems(&s)))
    }

    fn mobius_number(&self) -> i64 {
        self.0.flat_lattice().mobius_number()
    }

    fn f_vector(&self) -> Vec<u64> {
        f_vector(&self.0)
    }

    /// Coefficients of `h(x)`, constant term first.
    fn h_polynomial(&self) -> Vec<i64> {
        h_polynomial(&self.0).coeffs().to_vec()
    }

    /// Tutte polynomial as `{(i, j): coefficient of x^i y^j}`.
    fn tutte(&self) -> BTreeMap<(u32, u32), i64> {
        tutte(&self.0).terms().collect()
    }

    fn tutte_str(&self) -> String {
        tutte(&self.0).to_string()
    }

    /// Initial ideal of the cocircuit forms; `order` defaults to `1 < ... < n`.
    #[pyo3(signature = (order=None))]
    fn initial_ideal(&self, order: Option<Vec<u32>>) -> PyResult<PyIdeal> {
        Ok(PyIdeal(initial_ideal(&self.0, &order_on(self.0.ground(), order)?)))
    }

    /// Distinct initial ideals over all orders, each with the first order
    /// producing it.
    #[pyo3(signature = (cutoff=LINEAR_SWEEP_CUTOFF))]
    fn initial_ideals(&self, py: Python<'_>, cutoff: usize) -> PyResult<Vec<(PyIdeal, Vec<u32>)>> {
        let census = py.detach(|| enumerate_initial_ideals(&self.0, cutoff)).map_err(err)?;
        Ok(census
            .ideals
            .into_iter()
            .map(|(i, o)| (PyIdeal(i), o.elements().to_vec()))
            .collect())
    }

    /// `(totals, graded)` predicted from the lattice of flats.
    fn betti_prediction(&self) -> (Vec<u64>, Vec<Vec<u64>>) {
        betti_rows(&betti_from_mobius(&self.0))
    }

    /// Vertices of the cocircuit polytope, coordinates as `"p/q"` strings.
    #[pyo3(signature = (cutoff=LINEAR_SWEEP_CUTOFF))]
    fn polytope_vertices(&self, py: Python<'_>, cutoff: usize) -> PyResult<Vec<Vec<String>>> {
        let p = py.detach(|| cocircuit_polytope(&self.0, cutoff)).map_err(err)?;
        Ok(p.vertices()
            .iter()
            .map(|v| v.iter().map(|x| x.to_string()).collect())
            .collect())
    }

    fn summand_check(&self) -> bool {
        summand_check(&self.0).is_ok()
    }

    fn __repr__(&self) -> String {
        format!(
            "Matroid(size={}, rank={}, bases={})",
            self.0.size(),
            self.0.rank(),
            self.0.bases().len()
        )
    }
}

#[pyclass(module = "matlin_py", name = "Ideal", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyIdeal(SquarefreeMonomialIdeal);

#[pymethods]
impl PyIdeal {
    /// Minimal generators as strings such as `"x1y2y6"`.
    fn generators(&self) -> Vec<String> {
        self.0.generators().iter().map(|&g| monomial(g)).collect()
    }

    /// Generators of the minimal primes, one monomial per component.
    fn components(&self) -> Vec<String> {
        primary_decomposition(&self.0).into_iter().map(monomial).collect()
    }

    /// `(totals, graded)` from Hochster's formula.
    fn betti(&self) -> (Vec<u64>, Vec<Vec<u64>>) {
        betti_rows(&hochster_betti(&self.0))
    }

    fn is_cohen_macaulay(&self) -> bool {
        cm_from_betti(&self.0, &hochster_betti(&self.0)).cohen_macaulay
    }

    /// The multidegree as `(support, coefficient)` pairs.
    fn multidegree(&self) -> PyResult<Vec<(Vec<u32>, i64)>> {
        let m = multidegree(&self.0).map_err(err)?;
        Ok(m.terms().map(|(s, c)| (s.to_vec(), c)).collect())
    }

    fn bidegree(&self) -> PyResult<String> {
        Ok(bidegree(&self.0).map_err(err)?.display_in("s", "t"))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Ideal({})", self.0)
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.0.vertices().hash(&mut h);
        self.0.generators().hash(&mut h);
        h.finish()
    }
}

/// The affine space `A x = b`, as the triple of matroids on `0..=n`.
#[pyclass(module = "matlin_py", name = "AffineSpace", frozen)]
struct PyAffineSpace(MatroidTriple);

#[pymethods]
impl PyAffineSpace {
    #[new]
    fn new(rows: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>) -> PyResult<Self> {
        let rhs = b.try_iter()?.map(|v| rat(&v?)).collect::<PyResult<Vec<_>>>()?;
        matroid_triple(&matrix(rows)?, &rhs).map(PyAffineSpace).map_err(err)
    }

    fn hom(&self) -> PyMatroid {
        PyMatroid(self.0.hom().clone())
    }

    fn matroid(&self) -> PyMatroid {
        PyMatroid(self.0.m().clone())
    }

    fn contracted(&self) -> PyMatroid {
        PyMatroid(self.0.mprime().clone())
    }

    /// Initial ideal for an order on `0..=n`.
    fn initial_ideal(&self, order: Vec<u32>) -> PyResult<PyIdeal> {
        let o = LinearOrder::on(self.0.hom().ground(), order).map_err(err)?;
        Ok(PyIdeal(initial_ideal_affine(&self.0, &o)))
    }

    /// `(affine, homogenized)` counts of distinct initial ideals.
    #[pyo3(signature = (cutoff=AFFINE_SWEEP_CUTOFF))]
    fn counts(&self, py: Python<'_>, cutoff: usize) -> PyResult<(usize, usize)> {
        let c = py
            .detach(|| enumerate_affine_initial_ideals(&self.0, cutoff))
            .map_err(err)?;
        Ok((c.affine.count(), c.hom.count()))
    }

    /// Bidegrees for `0` last and `0` first.
    fn bidegrees(&self) -> PyResult<(String, String)> {
        let (top, bottom) = affine_bidegrees(&self.0).map_err(err)?;
        Ok((top.display_in("s", "t"), bottom.display_in("s", "t")))
    }

    fn lasvergnas(&self) -> PyResult<String> {
        Ok(lasvergnas_tutte(&self.0).map_err(err)?.to_string())
    }
}

/// Runs a `matlin` subcommand on JSON input and returns the JSON report.
#[pyfunction]
#[pyo3(signature = (command, input=None, b=None, order=None, show=None, count=false, cutoff=None, jobs=0))]
#[allow(clippy::too_many_arguments)]
fn report(
    py: Python<'_>,
    command: &str,
    input: Option<String>,
    b: Option<String>,
    order: Option<String>,
    show: Option<String>,
    count: bool,
    cutoff: Option<usize>,
    jobs: usize,
) -> PyResult<String> {
    let command = match command {
        "analyze" => Command::Analyze,
        "ideal" => Command::Ideal,
        "initial-ideals" => Command::InitialIdeals,
        "betti" => Command::Betti,
        "polytope" => Command::Polytope,
        "tutte" => Command::Tutte,
        "affine" => Command::Affine,
        "selftest" => Command::Selftest,
        other => return Err(PyValueError::new_err(format!("unknown command {other:?}"))),
    };
    let input = match input {
        None => Input::Absent,
        Some(text) => match MatroidInput::from_json(&text).map_err(err)? {
            MatroidInput::Bases { .. } => Input::Bases(text),
            MatroidInput::Matrix { .. } => Input::Matrix(text),
        },
    };
    let job = JobSpec {
        b,
        order,
        show,
        count,
        format: Format::Json,
        cutoff,
        ..JobSpec::new(command, input)
    };
    let out = py.detach(|| run_with_jobs(&job, jobs)).map_err(|e| err(e.to_json()))?;
    Ok(out.render(Format::Json))
}

#[pymodule]
fn matlin_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMatroid>()?;
    m.add_class::<PyIdeal>()?;
    m.add_class::<PyAffineSpace>()?;
    m.add_function(wrap_pyfunction!(report, m)?)?;
    Ok(())
}
