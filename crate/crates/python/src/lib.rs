//! Python bindings: posets, finite spaces, ordinals, Hechler conditions and
//! game sessions against the Galvin 2-tactic.

use bmgl_core::game::BaireClopen;
use bmgl_core::hechler::{EvFun, HechlerCond};
use bmgl_core::poset::{for_each_poset, Separativity, Verdict};
use bmgl_core::session::{self as core_session, SessionConfig, SessionError};
use bmgl_core::text::{parse_raw_poset, parse_space};
use bmgl_core::{CardinalSym, ExtendedCardinal, FinitePoset, FiniteSpace};
use pyo3::basic::CompareOp;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyString;
use serde::Serialize;
use serde_json::{json, Value};

create_exception!(bmgl, BmglError, PyException, "Base class for lab errors.");
create_exception!(
    bmgl,
    IllegalMoveError,
    BmglError,
    "An EMPTY move the referee rejected."
);
create_exception!(
    bmgl,
    GameOverError,
    BmglError,
    "A move after the last round."
);

fn value_error<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn session_error(e: SessionError) -> PyErr {
    match e {
        SessionError::IllegalMove { .. } => IllegalMoveError::new_err(e.to_string()),
        SessionError::Finished => GameOverError::new_err(e.to_string()),
        other => value_error(other),
    }
}

/// Serde data as plain Python objects, via the `json` module.
fn to_py<T: Serialize>(py: Python<'_>, v: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(v).map_err(value_error)?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

/// Finite values as `int`, alephs as `"aleph_k"`.
fn card(c: ExtendedCardinal) -> Value {
    match c {
        ExtendedCardinal::Finite(n) => json!(n),
        ExtendedCardinal::Aleph(_) => json!(c.to_string()),
    }
}

/// A sequence literal (`"[1,0,7]"`, `"1 0 7"`) or a list of naturals.
fn clopen(u: &Bound<'_, PyAny>) -> PyResult<BaireClopen> {
    if let Ok(s) = u.cast::<PyString>() {
        return s.to_str()?.parse().map_err(value_error);
    }
    let text: String = u
        .py()
        .import("json")?
        .call_method1("dumps", (u,))?
        .extract()?;
    serde_json::from_str(&text).map_err(value_error)
}

/// A finite poset, read from the line format (`elements`, `leq`, `closure`).
#[pyclass(name = "Poset", frozen)]
struct PyPoset {
    name: Option<String>,
    inner: FinitePoset,
}

#[pymethods]
impl PyPoset {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        let raw = parse_raw_poset(text).map_err(value_error)?;
        let inner = FinitePoset::validate(&raw).map_err(value_error)?;
        Ok(PyPoset {
            name: raw.name,
            inner,
        })
    }

    /// The m-element chain `c0 < c1 < ...`.
    #[staticmethod]
    fn chain(m: usize) -> PyResult<Self> {
        Ok(PyPoset {
            name: None,
            inner: FinitePoset::chain(m).map_err(value_error)?,
        })
    }

    #[getter]
    fn name(&self) -> Option<String> {
        self.name.clone()
    }

    #[getter]
    fn elements(&self) -> Vec<String> {
        self.inner.ids().to_vec()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    /// Does `q` extend `p`?
    fn leq(&self, q: &str, p: &str) -> PyResult<bool> {
        let q = self.inner.index_of(q).map_err(value_error)?;
        let p = self.inner.index_of(p).map_err(value_error)?;
        Ok(self.inner.leq(q, p))
    }

    fn is_separative(&self) -> bool {
        self.inner.is_separative()
    }

    /// `(p, q)` with `q` not below `p` yet compatible with every extension, or `None`.
    fn separativity_witness(&self) -> Option<(String, String)> {
        match self.inner.separativity() {
            Separativity::Separative => None,
            Separativity::Counterexample(p, q) => {
                Some((self.inner.id(p).to_string(), self.inner.id(q).to_string()))
            }
        }
    }

    fn minimal_elements(&self) -> Vec<String> {
        self.inner.ids_of(self.inner.minimal_elements())
    }

    fn max_antichain(&self) -> Vec<String> {
        self.inner.ids_of(self.inner.max_antichain().members())
    }

    fn is_dense(&self, ids: Vec<String>) -> PyResult<bool> {
        let d = self.inner.subset_of_ids(&ids).map_err(value_error)?;
        Ok(self.inner.is_dense(d))
    }

    fn down_set(&self, ids: Vec<String>) -> PyResult<Vec<String>> {
        let q = self.inner.subset_of_ids(&ids).map_err(value_error)?;
        Ok(self.inner.ids_of(self.inner.down_set(q)))
    }

    fn souslin_number(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &card(self.inner.souslin_number()))
    }

    fn noetherian_type(&self, py: Python<'_>, ids: Vec<String>) -> PyResult<Py<PyAny>> {
        let d = self.inner.subset_of_ids(&ids).map_err(value_error)?;
        to_py(
            py,
            &card(self.inner.noetherian_type(d).map_err(value_error)?),
        )
    }

    #[pyo3(signature = (exhaustive = false))]
    fn pi_noetherian_type(&self, py: Python<'_>, exhaustive: bool) -> PyResult<Py<PyAny>> {
        let pi = self
            .inner
            .pi_noetherian_type(exhaustive)
            .map_err(value_error)?;
        to_py(
            py,
            &json!({
                "value": card(pi.value),
                "dense": self.inner.ids_of(pi.dense),
                "exhaustive": pi.exhaustive.map(card),
            }),
        )
    }

    /// Compare pi-Noetherian type with the Souslin number.
    fn check_nabla(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let r = self.inner.check_nabla().map_err(value_error)?;
        to_py(
            py,
            &json!({
                "souslin_number": card(r.souslin_number),
                "pi_noetherian_type": card(r.pi_noetherian_type),
                "holds": r.verdict == Verdict::Holds,
            }),
        )
    }

    fn __repr__(&self) -> String {
        format!(
            "Poset({}, {} elements)",
            self.name.as_deref().unwrap_or("?"),
            self.inner.len()
        )
    }
}

/// Number of labeled posets on `n` elements and how many fail the nabla check.
#[pyfunction]
fn survey(n: usize) -> PyResult<(usize, usize)> {
    if n == 0 || n > 6 {
        return Err(PyValueError::new_err("survey size must be between 1 and 6"));
    }
    let mut violations = 0;
    let count = for_each_poset(n, |p| {
        if !matches!(p.check_nabla(), Ok(r) if r.verdict == Verdict::Holds) {
            violations += 1;
        }
    })
    .map_err(value_error)?;
    Ok((count, violations))
}

/// A finite topological space, read from the line format (`points`, `subbasis`).
#[pyclass(name = "Space", frozen)]
struct PySpace {
    name: Option<String>,
    inner: FiniteSpace,
}

#[pymethods]
impl PySpace {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        let named = parse_space(text).map_err(value_error)?;
        Ok(PySpace {
            name: named.name,
            inner: named.space,
        })
    }

    #[getter]
    fn name(&self) -> Option<String> {
        self.name.clone()
    }

    #[getter]
    fn points(&self) -> Vec<String> {
        self.inner.points().to_vec()
    }

    fn opens(&self) -> Vec<Vec<String>> {
        self.inner
            .opens()
            .iter()
            .map(|&u| self.inner.names(u))
            .collect()
    }

    fn predicates(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &self.inner.predicates())
    }

    fn invariants(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let inv = self.inner.invariants().map_err(value_error)?;
        to_py(
            py,
            &json!({
                "souslin_number": card(inv.souslin_number),
                "pi_noetherian_type": card(inv.pi_noetherian_type),
                "pi_base": inv.pi_base,
            }),
        )
    }

    /// Space invariants against those of its regular-open poset.
    fn check_translation(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let r = self.inner.check_translation().map_err(value_error)?;
        to_py(
            py,
            &json!({
                "asserted": r.asserted,
                "equal": r.equal,
                "violated": r.violated(),
                "regular_open": [card(r.regular_open.0), card(r.regular_open.1)],
            }),
        )
    }

    fn __repr__(&self) -> String {
        format!(
            "Space({}, {} points)",
            self.name.as_deref().unwrap_or("?"),
            self.inner.points().len()
        )
    }
}

/// An ordinal below the first fixed point, e.g. `Ordinal("w_1*2 + w*3 + 4")`.
#[pyclass(name = "Ordinal", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyOrdinal(bmgl_core::Ordinal);

fn lambda(s: &str) -> PyResult<CardinalSym> {
    s.parse().map_err(value_error)
}

#[pymethods]
impl PyOrdinal {
    #[new]
    fn new(expr: &str) -> PyResult<Self> {
        expr.parse().map(PyOrdinal).map_err(value_error)
    }

    fn __add__(&self, other: &PyOrdinal) -> PyOrdinal {
        PyOrdinal(self.0.add(&other.0))
    }

    fn __mul__(&self, other: &PyOrdinal) -> PyOrdinal {
        PyOrdinal(self.0.mul(&other.0))
    }

    fn __richcmp__(&self, other: &PyOrdinal, op: CompareOp) -> bool {
        op.matches(self.0.cmp(&other.0))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Ordinal('{}')", self.0)
    }

    /// `|α|` as `"aleph_k"`, `"aleph_0"` or `None` for finite ordinals.
    fn cardinal(&self) -> Option<String> {
        self.0.cardinal().map(|c| c.to_string())
    }

    fn is_cardinally_even(&self) -> bool {
        self.0.is_cardinally_even()
    }

    /// Cardinally even terms with strictly decreasing cardinalities.
    fn cnf(&self) -> Vec<PyOrdinal> {
        self.0.cnf().into_iter().map(PyOrdinal).collect()
    }

    #[pyo3(signature = (lam = "w_1"))]
    fn truncated_cnf(&self, lam: &str) -> PyResult<Vec<PyOrdinal>> {
        let t = self.0.truncated_cnf(&lambda(lam)?).map_err(value_error)?;
        Ok(t.into_iter().map(PyOrdinal).collect())
    }

    #[pyo3(signature = (lam = "w_1"))]
    fn daleth(&self, lam: &str) -> PyResult<usize> {
        self.0.daleth(&lambda(lam)?).map_err(value_error)
    }

    #[pyo3(signature = (j, lam = "w_1"))]
    fn normal_segment(&self, j: usize, lam: &str) -> PyResult<PyOrdinal> {
        self.0
            .normal_segment(j, &lambda(lam)?)
            .map(PyOrdinal)
            .map_err(value_error)
    }
}

/// A Hechler condition, e.g. `HechlerCond("([3,4], {0:7} + 2n+1)")`.
#[pyclass(name = "HechlerCond", frozen)]
struct PyHechlerCond(HechlerCond);

#[pymethods]
impl PyHechlerCond {
    #[new]
    fn new(literal: &str) -> PyResult<Self> {
        literal.parse().map(PyHechlerCond).map_err(value_error)
    }

    #[getter]
    fn stem(&self) -> Vec<u64> {
        self.0.stem.clone()
    }

    /// Does `self` extend `weaker`?
    fn leq(&self, weaker: &PyHechlerCond) -> bool {
        self.0.leq(&weaker.0)
    }

    /// A common extension, or `None`.
    fn compatible(&self, other: &PyHechlerCond) -> Option<PyHechlerCond> {
        self.0.compatible(&other.0).map(PyHechlerCond)
    }

    fn __eq__(&self, other: &PyHechlerCond) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("HechlerCond('{}')", self.0)
    }
}

/// Is `f` eventually dominated by `g`? Functions as literals like `{0:7} + 2n+1`.
#[pyfunction]
fn ev_leq_star(f: &str, g: &str) -> PyResult<bool> {
    let f: EvFun = f.parse().map_err(value_error)?;
    let g: EvFun = g.parse().map_err(value_error)?;
    Ok(f.leq_star(&g))
}

/// A Banach-Mazur game on Baire space: you move for EMPTY, the Galvin
/// 2-tactic answers for NONEMPTY.
#[pyclass(name = "GameSession", unsendable)]
struct PyGameSession(core_session::GameSession);

#[pymethods]
impl PyGameSession {
    #[new]
    #[pyo3(signature = (horizon = 16, seed = 0, system = "baire", sigma = "closure"))]
    fn new(horizon: usize, seed: u64, system: &str, sigma: &str) -> PyResult<Self> {
        let config = SessionConfig {
            system: system.into(),
            horizon,
            seed,
            sigma: sigma.into(),
        };
        core_session::GameSession::new("python", config)
            .map(PyGameSession)
            .map_err(session_error)
    }

    /// Play `u` (a literal or a list of naturals); returns the round reply.
    fn submit(&mut self, py: Python<'_>, u: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
        let reply = self.0.submit(clopen(u)?).map_err(session_error)?;
        to_py(py, &reply)
    }

    /// Let the seeded EMPTY player move.
    fn auto_move(&mut self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let reply = self.0.auto_move().map_err(session_error)?;
        to_py(py, &reply)
    }

    fn is_over(&self) -> bool {
        self.0.is_over()
    }

    fn state(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &self.0.state())
    }

    fn transcript(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &self.0.transcript_view())
    }

    /// The transcript as JSON lines, as printed by `bmgl game run`.
    fn json_lines(&self) -> String {
        self.0.transcript().to_json_lines()
    }
}

/// One complete play against the 2-tactic; returns `(json_lines, audit)`.
#[pyfunction]
#[pyo3(signature = (seed = 0, horizon = 16, moves = None))]
fn run_galvin(
    py: Python<'_>,
    seed: u64,
    horizon: usize,
    moves: Option<Vec<Bound<'_, PyAny>>>,
) -> PyResult<(String, Py<PyAny>)> {
    let moves = moves
        .map(|ms| ms.iter().map(clopen).collect::<PyResult<Vec<_>>>())
        .transpose()?;
    let (t, audit) = core_session::run_galvin(seed, horizon, moves).map_err(value_error)?;
    Ok((t.to_json_lines(), to_py(py, &audit)?))
}

#[pymodule]
fn bmgl(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoset>()?;
    m.add_class::<PySpace>()?;
    m.add_class::<PyOrdinal>()?;
    m.add_class::<PyHechlerCond>()?;
    m.add_class::<PyGameSession>()?;
    m.add_function(wrap_pyfunction!(survey, m)?)?;
    m.add_function(wrap_pyfunction!(ev_leq_star, m)?)?;
    m.add_function(wrap_pyfunction!(run_galvin, m)?)?;
    m.add("BmglError", m.py().get_type::<BmglError>())?;
    m.add("IllegalMoveError", m.py().get_type::<IllegalMoveError>())?;
    m.add("GameOverError", m.py().get_type::<GameOverError>())?;
    Ok(())
}
