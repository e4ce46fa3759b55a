//! Python bindings: permutations, statistics, the bijections, catalog
//! sequences and the verifier.

use cudlab::bijections as bij;
use cudlab::matchings::render_arc_diagram;
use cudlab::oracle;
use cudlab::series::formulas;
use cudlab::{CudError, CycleDecomposition, Family, MinMaxPattern, SequenceId, Stat};
use num_bigint::BigInt;
use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};

fn err(e: CudError) -> PyErr {
    match e {
        CudError::CapExceeded { .. } => PyOverflowError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

trait OrPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> OrPy<T> for cudlab::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(err)
    }
}

#[pyclass(name = "Permutation", module = "cudlab", frozen, eq, ord, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct PyPermutation(cudlab::Permutation);

#[pymethods]
impl PyPermutation {
    #[new]
    fn new(word: Vec<u32>) -> PyResult<Self> {
        Ok(Self(cudlab::Permutation::new(word).py()?))
    }

    /// One-line word (`"3 1 2"`) or cycle notation (`"(1,3,2)"`).
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Self(cudlab::Permutation::parse_any(text).py()?))
    }

    #[getter]
    fn word(&self) -> Vec<u32> {
        self.0.word().to_vec()
    }

    fn cycles(&self) -> String {
        self.0.to_cycles().to_string()
    }

    fn switch(&self) -> Self {
        Self(self.0.switch())
    }

    fn is_up_down(&self) -> bool {
        self.0.is_up_down()
    }

    fn is_member(&self, family: &str) -> PyResult<bool> {
        cudlab::perm::is_member(&self.0, family.parse().py()?).py()
    }

    fn stats<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let v = cudlab::stats::stats(&self.0);
        let d = PyDict::new(py);
        for s in Stat::ALL {
            d.set_item(s.name(), s.of(&v))?;
        }
        Ok(d)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation({:?})", self.0.word())
    }
}

fn cycles(text: &str) -> PyResult<CycleDecomposition> {
    Ok(cudlab::Permutation::parse_any(text).py()?.to_cycles())
}

/// Up-down word of even length to cycle notation; cycles count LR minima.
#[pyfunction]
fn g(p: &PyPermutation) -> PyResult<String> {
    Ok(bij::g_even(&p.0).py()?.to_string())
}

#[pyfunction]
fn g_inverse(c: &str) -> PyResult<PyPermutation> {
    Ok(PyPermutation(bij::g_even_inverse(&cycles(c)?).py()?))
}

/// Up-down word of odd length to odd CUD cycles; cycles count `st`.
#[pyfunction]
fn f(p: &PyPermutation) -> PyResult<String> {
    Ok(bij::f_odd(&p.0).py()?.to_string())
}

#[pyfunction]
fn f_inverse(c: &str) -> PyResult<PyPermutation> {
    Ok(PyPermutation(bij::f_odd_inverse(&cycles(c)?).py()?))
}

#[pyfunction]
fn phi(p: &PyPermutation) -> PyResult<String> {
    Ok(bij::phi(&p.0).py()?.to_string())
}

#[pyfunction]
fn phi_inverse(c: &str) -> PyResult<PyPermutation> {
    Ok(PyPermutation(bij::phi_inverse(&cycles(c)?).py()?))
}

#[pyfunction]
fn jbij(p: &PyPermutation) -> PyResult<String> {
    Ok(bij::jbij(&p.0).py()?.to_string())
}

#[pyfunction]
fn jbij_inverse(c: &str) -> PyResult<PyPermutation> {
    Ok(PyPermutation(bij::jbij_inverse(&cycles(c)?).py()?))
}

#[pyfunction]
#[pyo3(signature = (p, pattern = "min,max,..."))]
fn h(p: &PyPermutation, pattern: &str) -> PyResult<PyPermutation> {
    let s: MinMaxPattern = pattern.parse().py()?;
    Ok(PyPermutation(bij::h_map(&p.0, &s)))
}

#[pyfunction]
fn ell(p: &PyPermutation, bits: &str) -> PyResult<PyPermutation> {
    Ok(PyPermutation(bij::ell_map(&p.0, &bits.parse().py()?).py()?))
}

#[pyfunction]
fn ell_inverse(q: &PyPermutation) -> PyResult<(PyPermutation, String)> {
    let (p, s) = bij::ell_inverse(&q.0).py()?;
    Ok((PyPermutation(p), s.to_string()))
}

/// Integer terms `a_0 .. a_n` of a plain catalog sequence.
#[pyfunction]
fn sequence(id: &str, n: usize) -> PyResult<Vec<BigInt>> {
    let id: SequenceId = id.parse().py()?;
    cudlab::catalog(id, n)
        .py()?
        .integer_terms()
        .ok_or_else(|| PyValueError::new_err(format!("`{id}` has no integer terms")))
}

/// Terms of any catalog entry, rendered as text (polynomials for marked ones).
#[pyfunction]
fn sequence_text(id: &str, n: usize) -> PyResult<Vec<String>> {
    let id: SequenceId = id.parse().py()?;
    Ok(cudlab::catalog(id, n).py()?.egf_polys().iter().map(|p| p.to_string()).collect())
}

#[pyfunction]
fn count(family: &str, n: usize) -> PyResult<u64> {
    oracle::count(family.parse::<Family>().py()?, n).py()
}

#[pyfunction]
fn enumerate(family: &str, n: usize) -> PyResult<Vec<PyPermutation>> {
    let ps = oracle::enumerate(family.parse::<Family>().py()?, n).py()?;
    Ok(ps.into_iter().map(PyPermutation).collect())
}

/// Joint distribution as `{(v1, v2, ...): count}`.
#[pyfunction]
fn distribution<'py>(py: Python<'py>, family: &str, n: usize, stats: &str) -> PyResult<Bound<'py, PyDict>> {
    let table = oracle::distribution(family.parse().py()?, n, &Stat::parse_list(stats).py()?).py()?;
    let d = PyDict::new(py);
    for (key, c) in table.rows {
        d.set_item(PyTuple::new(py, key)?, c)?;
    }
    Ok(d)
}

/// `(passed, report_json)` for the full verification suite.
#[pyfunction]
fn verify(n_cap: usize) -> PyResult<(bool, String)> {
    let report = oracle::verify::verify_all(n_cap).py()?;
    Ok((report.passed(), report.to_json().to_string()))
}

/// Mean number of up-down cycles over `S_n`, as `(numerator, denominator)`.
#[pyfunction]
fn expected_ud_cycles(n: usize) -> (BigInt, BigInt) {
    let r = formulas::expected_ud_cycles(n);
    (r.numer().clone(), r.denom().clone())
}

#[pyfunction]
fn arc_diagram(p: &PyPermutation) -> PyResult<String> {
    render_arc_diagram(&p.0).py()
}

#[pymodule(name = "cudlab")]
fn cudlab_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPermutation>()?;
    m.add_function(wrap_pyfunction!(g, m)?)?;
    m.add_function(wrap_pyfunction!(g_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(f, m)?)?;
    m.add_function(wrap_pyfunction!(f_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(phi, m)?)?;
    m.add_function(wrap_pyfunction!(phi_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(jbij, m)?)?;
    m.add_function(wrap_pyfunction!(jbij_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(h, m)?)?;
    m.add_function(wrap_pyfunction!(ell, m)?)?;
    m.add_function(wrap_pyfunction!(ell_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(sequence, m)?)?;
    m.add_function(wrap_pyfunction!(sequence_text, m)?)?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(distribution, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(expected_ud_cycles, m)?)?;
    m.add_function(wrap_pyfunction!(arc_diagram, m)?)?;
    Ok(())
}
