//! Python bindings: the `postgroup_lab` extension module.
//!
//! Malformed input raises `ValueError`; a failed algebraic check raises
//! `postgroup_lab.CheckError` carrying the witness.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

use postgroup_core::action_postgroup::DEFAULT_SIZE_CAP;
use postgroup_core::finite_postgroup::{full_check, PostGroupTable};
use postgroup_core::free_postgroup::FreePostGroup as CoreFreePostGroup;
use postgroup_core::group::GroupTable;
use postgroup_core::io::{self, ActionFile, BraceFile, IoError, MagmaFile, PostGroupFile};
use postgroup_core::magma::MagmaTable;
use postgroup_core::magnus::magnus_report;
use postgroup_core::report::CheckLine;
use postgroup_core::selftest::{run_all, Level};
use postgroup_core::tensor::{
    self, antipode_star, gl_star, is_primitive, kmap_tensor, kmap_tensor_inverse, Generators, TensorPoly, TensorWord,
    DEFAULT_DEGREE_CAP,
};
use postgroup_core::words::{ReducedWord, WordError};

create_exception!(postgroup_lab, CheckError, PyException, "An algebraic check failed; the message is the witness.");

fn io_err(e: IoError) -> PyErr {
    if e.is_input_error() {
        PyValueError::new_err(e.to_string())
    } else {
        CheckError::new_err(e.to_string())
    }
}

fn value_err(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn word_err(e: WordError) -> PyErr {
    value_err(e)
}

/// Check lines as `(name, passed, witness)` tuples.
fn lines_to_tuples(lines: &[CheckLine]) -> Vec<(String, bool, Option<String>)> {
    lines
        .iter()
        .map(|l| (l.name.clone(), l.passed(), l.outcome.clone().err()))
        .collect()
}

/// The free post-group over a diagonal left-regular magma.
#[pyclass(name = "FreePostGroup", module = "postgroup_lab", frozen)]
struct PyFreePostGroup {
    inner: CoreFreePostGroup,
}

impl PyFreePostGroup {
    fn parse(&self, text: &str) -> PyResult<ReducedWord> {
        self.inner.magma().alphabet().parse_word(text).map_err(word_err)
    }

    fn format(&self, w: &ReducedWord) -> String {
        self.inner.magma().alphabet().format_word(w)
    }

    fn binary(
        &self,
        u: &str,
        v: &str,
        op: impl Fn(&CoreFreePostGroup, &ReducedWord, &ReducedWord) -> Result<ReducedWord, WordError>,
    ) -> PyResult<String> {
        let (u, v) = (self.parse(u)?, self.parse(v)?);
        Ok(self.format(&op(&self.inner, &u, &v).map_err(word_err)?))
    }

    fn unary(
        &self,
        u: &str,
        op: impl Fn(&CoreFreePostGroup, &ReducedWord) -> Result<ReducedWord, WordError>,
    ) -> PyResult<String> {
        let u = self.parse(u)?;
        Ok(self.format(&op(&self.inner, &u).map_err(word_err)?))
    }
}

#[pymethods]
impl PyFreePostGroup {
    /// Builds from element names and the magma table `triangle[a][b] = a ▷ b`.
    #[new]
    fn new(elements: Vec<String>, triangle: Vec<Vec<String>>) -> PyResult<Self> {
        let magma = MagmaTable::from_names(elements, triangle).map_err(|e| io_err(IoError::from(e)))?;
        Ok(Self { inner: CoreFreePostGroup::new(magma) })
    }

    /// Builds from the JSON text of a magma file.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let magma = io::parse_json::<MagmaFile>("magma", text).and_then(MagmaFile::into_magma).map_err(io_err)?;
        Ok(Self { inner: CoreFreePostGroup::new(magma) })
    }

    /// The magma `a ▷ b = b + 1 mod n` on generators `x0..x{n-1}`.
    #[staticmethod]
    fn cyclic_shift(n: usize) -> PyResult<Self> {
        if n == 0 {
            return Err(value_err("the magma needs at least one element"));
        }
        Ok(Self { inner: CoreFreePostGroup::new(MagmaTable::cyclic_shift(n)) })
    }

    #[getter]
    fn elements(&self) -> Vec<String> {
        self.inner.magma().alphabet().names().to_vec()
    }

    fn to_json(&self) -> String {
        io::to_json(&MagmaFile::from_magma(self.inner.magma()))
    }

    /// `u ▷ v`.
    fn act(&self, u: &str, v: &str) -> PyResult<String> {
        self.binary(u, v, CoreFreePostGroup::act)
    }

    /// The word `w` with `u ▷ w = v`.
    fn inverse_act(&self, u: &str, v: &str) -> PyResult<String> {
        self.binary(u, v, CoreFreePostGroup::inverse_act)
    }

    /// The Grossman–Larson product `u * v = u.(u ▷ v)`.
    fn star(&self, u: &str, v: &str) -> PyResult<String> {
        self.binary(u, v, CoreFreePostGroup::gl_product)
    }

    fn star_inverse(&self, u: &str) -> PyResult<String> {
        self.unary(u, CoreFreePostGroup::gl_inverse)
    }

    fn jmap(&self, u: &str) -> PyResult<String> {
        self.unary(u, CoreFreePostGroup::jmap)
    }

    fn kmap(&self, u: &str) -> PyResult<String> {
        self.unary(u, CoreFreePostGroup::kmap)
    }

    /// Reduces a word of whitespace-separated letters, `'` marking an inverse.
    fn reduce(&self, u: &str) -> PyResult<String> {
        Ok(self.format(&self.parse(u)?))
    }

    fn __repr__(&self) -> String {
        format!("FreePostGroup(elements={:?})", self.elements())
    }
}

/// A finite post-group given by its `.` and `▷` tables.
#[pyclass(name = "PostGroup", module = "postgroup_lab", frozen)]
struct PyPostGroup {
    inner: PostGroupTable,
}

impl PyPostGroup {
    fn index(&self, name: &str) -> PyResult<usize> {
        self.inner
            .names()
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| value_err(format!("unknown element `{name}`")))
    }

    fn wrap(inner: PostGroupTable) -> Self {
        Self { inner }
    }
}

fn group_from(elements: Vec<String>, table: Vec<Vec<String>>) -> PyResult<GroupTable> {
    GroupTable::from_names(elements, &table).map_err(|e| io_err(IoError::from(e)))
}

#[pymethods]
impl PyPostGroup {
    #[new]
    fn new(elements: Vec<String>, dot: Vec<Vec<String>>, triangle: Vec<Vec<String>>) -> PyResult<Self> {
        let pg = PostGroupFile { elements, dot, triangle }.into_postgroup().map_err(io_err)?;
        Ok(Self::wrap(pg))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let pg = io::parse_json::<PostGroupFile>("post-group", text)
            .and_then(PostGroupFile::into_postgroup)
            .map_err(io_err)?;
        Ok(Self::wrap(pg))
    }

    /// The post-group with `a ▷ b = b` on a group.
    #[staticmethod]
    fn trivial(elements: Vec<String>, table: Vec<Vec<String>>) -> PyResult<Self> {
        Ok(Self::wrap(PostGroupTable::trivial(&group_from(elements, table)?)))
    }

    /// The post-group with `a ▷ b = a.b.a⁻¹` on a group.
    #[staticmethod]
    fn conjugation(elements: Vec<String>, table: Vec<Vec<String>>) -> PyResult<Self> {
        Ok(Self::wrap(PostGroupTable::conjugation(&group_from(elements, table)?)))
    }

    /// The post-group of a skew brace given as JSON `{elements, dot, star}`.
    #[staticmethod]
    fn from_brace_json(text: &str) -> PyResult<Self> {
        let brace = io::parse_json::<BraceFile>("skew brace", text).and_then(BraceFile::into_brace).map_err(io_err)?;
        let pg = brace.to_postgroup().map_err(|e| io_err(IoError::from(e)))?;
        Ok(Self::wrap(pg))
    }

    /// The gauge post-group of an action given as JSON `{group, set, action}`.
    #[staticmethod]
    fn from_action_json(text: &str) -> PyResult<Self> {
        let action = io::parse_json::<ActionFile>("action", text).and_then(ActionFile::into_action).map_err(io_err)?;
        let pg = action.build_gauge_postgroup(DEFAULT_SIZE_CAP).map_err(|e| io_err(IoError::from(e)))?;
        Ok(Self::wrap(pg))
    }

    #[getter]
    fn elements(&self) -> Vec<String> {
        self.inner.names().to_vec()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn dot(&self, a: &str, b: &str) -> PyResult<String> {
        let (a, b) = (self.index(a)?, self.index(b)?);
        Ok(self.inner.name(self.inner.dot(a, b)).to_string())
    }

    fn triangle(&self, a: &str, b: &str) -> PyResult<String> {
        let (a, b) = (self.index(a)?, self.index(b)?);
        Ok(self.inner.name(self.inner.tri(a, b)).to_string())
    }

    /// The Grossman–Larson product `a * b = a.(a ▷ b)`.
    fn star(&self, a: &str, b: &str) -> PyResult<String> {
        let (a, b) = (self.index(a)?, self.index(b)?);
        Ok(self.inner.name(self.inner.gl(a, b)).to_string())
    }

    fn is_pregroup(&self) -> bool {
        self.inner.is_pregroup()
    }

    /// Every identity check as `(name, passed, witness)`.
    fn check(&self) -> Vec<(String, bool, Option<String>)> {
        lines_to_tuples(&full_check(&self.inner))
    }

    /// The braiding as a list of `((g, h), (g', h'))`; pass it to `dict` for lookups.
    fn braiding(&self) -> Vec<((String, String), (String, String))> {
        let sigma = self.inner.braiding();
        let name = |i: usize| self.inner.name(i).to_string();
        let mut out = Vec::with_capacity(self.inner.len() * self.inner.len());
        for g in 0..self.inner.len() {
            for h in 0..self.inner.len() {
                let (a, b) = sigma.apply(g, h);
                out.push(((name(g), name(h)), (name(a), name(b))));
            }
        }
        out
    }

    /// Bijectivity, braid equation and Yang–Baxter equation of the braiding.
    fn ybe(&self) -> Vec<(String, bool, Option<String>)> {
        let sigma = self.inner.braiding();
        lines_to_tuples(&[
            CheckLine::new("σ bijective", sigma.check_bijective().map_err(|e| e.to_string())),
            CheckLine::new("braid equation", sigma.check_braid_equation().map_err(|w| w.to_string())),
            CheckLine::new("Yang-Baxter (R = P∘σ)", sigma.check_ybe().map_err(|w| w.to_string())),
        ])
    }

    fn opposite(&self) -> Self {
        Self::wrap(self.inner.opposite())
    }

    fn to_json(&self) -> String {
        io::to_json(&PostGroupFile::from_postgroup(&self.inner))
    }

    fn to_brace_json(&self) -> String {
        io::to_json(&BraceFile::from_brace(&self.inner.to_skew_brace()))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("PostGroup(elements={:?})", self.elements())
    }
}

/// The tensor algebra over the free magma on n generators, with exact rational coefficients.
#[pyclass(name = "TensorAlgebra", module = "postgroup_lab", frozen)]
struct PyTensorAlgebra {
    gens: Generators,
}

impl PyTensorAlgebra {
    fn parse(&self, text: &str) -> PyResult<TensorPoly> {
        let p = self.gens.parse_poly(text).map_err(value_err)?;
        check_degree(p.max_degree().unwrap_or(0))?;
        Ok(p)
    }

    fn map(&self, text: &str, f: impl Fn(&TensorPoly) -> TensorPoly) -> PyResult<String> {
        Ok(self.gens.format_poly(&f(&self.parse(text)?)))
    }

    fn pair(&self, a: &str, b: &str, f: impl Fn(&TensorPoly, &TensorPoly) -> TensorPoly) -> PyResult<String> {
        let (a, b) = (self.parse(a)?, self.parse(b)?);
        check_degree(a.max_degree().unwrap_or(0) + b.max_degree().unwrap_or(0))?;
        Ok(self.gens.format_poly(&f(&a, &b)))
    }
}

fn check_degree(degree: usize) -> PyResult<()> {
    if degree > DEFAULT_DEGREE_CAP {
        return Err(value_err(tensor::TensorError::DegreeCap { requested: degree, cap: DEFAULT_DEGREE_CAP }));
    }
    Ok(())
}

#[pymethods]
impl PyTensorAlgebra {
    /// Generators are named `x` for one generator and `x1..xn` otherwise.
    #[new]
    #[pyo3(signature = (generators = 2))]
    fn new(generators: usize) -> PyResult<Self> {
        Ok(Self { gens: Generators::standard(generators).map_err(value_err)? })
    }

    #[getter]
    fn generators(&self) -> Vec<String> {
        self.gens.names().to_vec()
    }

    /// Canonical form of a polynomial.
    fn normalize(&self, p: &str) -> PyResult<String> {
        self.map(p, TensorPoly::clone)
    }

    fn kmap(&self, p: &str) -> PyResult<String> {
        self.map(p, kmap_tensor)
    }

    fn kmap_inverse(&self, p: &str) -> PyResult<String> {
        self.map(p, kmap_tensor_inverse)
    }

    fn star_antipode(&self, p: &str) -> PyResult<String> {
        self.map(p, antipode_star)
    }

    /// The extended action `A ▷ B`.
    fn triangle(&self, a: &str, b: &str) -> PyResult<String> {
        self.pair(a, b, tensor::triangle)
    }

    /// The Grossman–Larson product `A * B`.
    fn star(&self, a: &str, b: &str) -> PyResult<String> {
        self.pair(a, b, gl_star)
    }

    fn is_primitive(&self, p: &str) -> PyResult<bool> {
        Ok(is_primitive(&self.parse(p)?))
    }

    /// Every tensor word of the given degree.
    fn basis(&self, degree: usize) -> PyResult<Vec<String>> {
        check_degree(degree)?;
        Ok(TensorWord::all_of_degree(self.gens.len(), degree).iter().map(|w| self.gens.format_word(w)).collect())
    }

    fn __repr__(&self) -> String {
        format!("TensorAlgebra(generators={})", self.gens.len())
    }
}

/// The series α(tx), the flow `K(exp(tx))` and `Ω_*(α(tx))` up to `order`, with their checks.
///
/// Returns a dict with keys `alpha`, `flow`, `omega_star` (lists of
/// coefficient strings, index = power of t) and `checks`.
#[pyfunction]
#[pyo3(signature = (order = 5))]
fn magnus(py: Python<'_>, order: usize) -> PyResult<Py<pyo3::types::PyDict>> {
    if order + 1 > DEFAULT_DEGREE_CAP {
        return Err(value_err(format!(
            "order {order} needs leaf degree {} above the cap {DEFAULT_DEGREE_CAP}",
            order + 1
        )));
    }
    let gens = Generators::standard(1).map_err(value_err)?;
    let report = magnus_report(order).map_err(|e| CheckError::new_err(e.to_string()))?;
    let coeffs = |s: &postgroup_core::magnus::TruncatedSeries| -> Vec<String> {
        s.coeffs().iter().map(|p| gens.format_poly(p)).collect()
    };
    let out = pyo3::types::PyDict::new(py);
    out.set_item("alpha", coeffs(&report.alpha))?;
    out.set_item("flow", coeffs(&report.flow))?;
    out.set_item("omega_star", coeffs(&report.omega_star))?;
    out.set_item("checks", lines_to_tuples(&report.checks))?;
    Ok(out.unbind())
}

/// Runs the acceptance battery; one `(id, title, passed, seconds, failures)` per criterion.
#[pyfunction]
#[pyo3(signature = (seed = 0, level = "quick"))]
fn selftest(
    py: Python<'_>,
    seed: u64,
    level: &str,
) -> PyResult<Vec<(usize, String, bool, f64, Vec<(String, bool, Option<String>)>)>> {
    let level: Level = level.parse().map_err(value_err)?;
    let results = py.detach(|| run_all(seed, level));
    Ok(results
        .iter()
        .map(|c| {
            let failures: Vec<CheckLine> = c.failures().into_iter().cloned().collect();
            (c.id, c.title.to_string(), c.passed(), c.elapsed.as_secs_f64(), lines_to_tuples(&failures))
        })
        .collect())
}

#[pymodule]
fn postgroup_lab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("CheckError", m.py().get_type::<CheckError>())?;
    m.add_class::<PyFreePostGroup>()?;
    m.add_class::<PyPostGroup>()?;
    m.add_class::<PyTensorAlgebra>()?;
    m.add_function(wrap_pyfunction!(magnus, m)?)?;
    m.add_function(wrap_pyfunction!(selftest, m)?)?;
    Ok(())
}
