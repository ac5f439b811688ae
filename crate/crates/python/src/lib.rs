//! Python bindings for `monomial_depth`.
//!
//! Structured results (summaries, Betti data, command documents) are handed
//! over as plain dictionaries decoded from the same JSON the CLI prints.

use monomial_depth::graph::{cm_square_predicates, Graph as CoreGraph};
use monomial_depth::homology::{betti_table, depth, homological_summary};
use monomial_depth::io::{self, Command, Flags, Session as CoreSession};
use monomial_depth::polarization::polarize_full;
use monomial_depth::{Caps, Error, Field, Monomial, MonomialIdeal, VarContext};
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(mdepth, ParseError, PyValueError);
create_exception!(mdepth, PreconditionError, PyValueError);
create_exception!(mdepth, ResourceError, PyRuntimeError);

fn to_py(err: Error) -> PyErr {
    match err {
        Error::Parse { .. } => ParseError::new_err(err.to_string()),
        Error::Resource { .. } => ResourceError::new_err(err.to_string()),
        other => PreconditionError::new_err(other.to_string()),
    }
}

fn caps() -> PyResult<Caps> {
    Caps::from_env().map_err(to_py)
}

fn field(characteristic: u32) -> PyResult<Field> {
    Field::with_characteristic(characteristic).map_err(to_py)
}

fn json_to_dict<'py>(py: Python<'py>, value: &serde_json::Value) -> PyResult<Bound<'py, PyDict>> {
    let text = serde_json::to_string(value).expect("values serialize");
    py.import("json")?
        .call_method1("loads", (text,))?
        .cast_into::<PyDict>()
        .map_err(Into::into)
}

fn serialize<T: serde::Serialize>(value: &T) -> serde_json::Value {
    serde_json::to_value(value).expect("results serialize")
}

/// A monomial ideal in a polynomial ring with named variables.
#[pyclass(name = "Ideal", module = "mdepth", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct Ideal {
    inner: MonomialIdeal,
}

impl Ideal {
    fn wrap(inner: MonomialIdeal) -> Self {
        Ideal { inner }
    }
}

#[pymethods]
impl Ideal {
    /// `Ideal(["x", "y", "z"], "x^2*y, y*z")`
    #[new]
    fn new(variables: Vec<String>, generators: &str) -> PyResult<Self> {
        let ctx = VarContext::new(variables).map_err(to_py)?;
        MonomialIdeal::parse(&ctx, generators).map(Ideal::wrap).map_err(to_py)
    }

    fn variables(&self) -> Vec<String> {
        self.inner.ctx().names().to_vec()
    }

    fn generators(&self) -> Vec<String> {
        self.inner.gens().iter().map(Monomial::to_string).collect()
    }

    fn exponents(&self) -> Vec<Vec<u32>> {
        self.inner.gens().iter().map(|g| g.exps().to_vec()).collect()
    }

    fn __len__(&self) -> usize {
        self.inner.num_gens()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Ideal({})", self.inner)
    }

    fn contains(&self, monomial: &str) -> PyResult<bool> {
        let m = Monomial::parse(self.inner.ctx(), monomial).map_err(to_py)?;
        self.inner.contains(&m).map_err(to_py)
    }

    fn __add__(&self, other: &Ideal) -> PyResult<Ideal> {
        self.inner.sum(&other.inner).map(Ideal::wrap).map_err(to_py)
    }

    fn __mul__(&self, other: &Ideal) -> PyResult<Ideal> {
        self.inner.product_with(&other.inner, &caps()?).map(Ideal::wrap).map_err(to_py)
    }

    fn intersect(&self, other: &Ideal) -> PyResult<Ideal> {
        self.inner.intersect_with(&other.inner, &caps()?).map(Ideal::wrap).map_err(to_py)
    }

    /// Colon by a monomial given as text, or by another ideal.
    fn colon(&self, by: &Bound<'_, PyAny>) -> PyResult<Ideal> {
        let result = if let Ok(other) = by.cast::<Ideal>() {
            self.inner.colon_ideal(&other.get().inner, &caps()?)
        } else {
            let text: String = by.extract()?;
            Monomial::parse(self.inner.ctx(), &text).and_then(|m| self.inner.colon(&m))
        };
        result.map(Ideal::wrap).map_err(to_py)
    }

    fn power(&self, k: u32) -> PyResult<Ideal> {
        self.inner.power_with(k, &caps()?).map(Ideal::wrap).map_err(to_py)
    }

    fn symbolic_power(&self, k: u32) -> PyResult<Ideal> {
        self.inner.symbolic_power_with(k, &caps()?).map(Ideal::wrap).map_err(to_py)
    }

    fn radical(&self) -> Ideal {
        Ideal::wrap(self.inner.radical())
    }

    fn alexander_dual(&self) -> PyResult<Ideal> {
        self.inner.alexander_dual().map(Ideal::wrap).map_err(to_py)
    }

    fn polarize(&self) -> PyResult<Ideal> {
        polarize_full(&self.inner).map(|p| Ideal::wrap(p.ideal)).map_err(to_py)
    }

    fn height(&self) -> PyResult<usize> {
        self.inner.height().map_err(to_py)
    }

    #[pyo3(signature = (characteristic = 0))]
    fn depth(&self, py: Python<'_>, characteristic: u32) -> PyResult<usize> {
        let (f, c) = (field(characteristic)?, caps()?);
        py.detach(|| depth(&self.inner, f, &c)).map_err(to_py)
    }

    /// Castelnuovo–Mumford regularity of the ideal itself.
    #[pyo3(signature = (characteristic = 0))]
    fn regularity(&self, py: Python<'_>, characteristic: u32) -> PyResult<i64> {
        let (f, c) = (field(characteristic)?, caps()?);
        py.detach(|| betti_table(&self.inner, f, &c))
            .map(|t| t.ideal_reg())
            .map_err(to_py)
    }

    #[pyo3(signature = (characteristic = 0))]
    fn betti_numbers(&self, py: Python<'_>, characteristic: u32) -> PyResult<Vec<(usize, u64, usize)>> {
        let (f, c) = (field(characteristic)?, caps()?);
        let table = py.detach(|| betti_table(&self.inner, f, &c)).map_err(to_py)?;
        Ok(table.graded().into_iter().map(|((i, j), b)| (i, j, b)).collect())
    }

    #[pyo3(signature = (characteristic = 0))]
    fn summary<'py>(&self, py: Python<'py>, characteristic: u32) -> PyResult<Bound<'py, PyDict>> {
        let (f, c) = (field(characteristic)?, caps()?);
        let s = py.detach(|| homological_summary(&self.inner, f, &c)).map_err(to_py)?;
        json_to_dict(py, &serialize(&s))
    }

    #[pyo3(signature = (characteristic = 0))]
    fn is_cohen_macaulay(&self, py: Python<'_>, characteristic: u32) -> PyResult<bool> {
        let (f, c) = (field(characteristic)?, caps()?);
        py.detach(|| homological_summary(&self.inner, f, &c))
            .map(|s| s.is_cohen_macaulay)
            .map_err(to_py)
    }
}

/// A simple graph whose vertices are ring variables.
#[pyclass(name = "Graph", module = "mdepth", frozen, skip_from_py_object)]
#[derive(Clone)]
struct Graph {
    inner: CoreGraph,
}

#[pymethods]
impl Graph {
    /// `Graph(["a", "b", "c"], [("a", "b"), ("b", "c")])`
    #[new]
    fn new(variables: Vec<String>, edges: Vec<(String, String)>) -> PyResult<Self> {
        let ctx = VarContext::new(variables).map_err(to_py)?;
        let index = |name: &str| {
            ctx.index_of(name)
                .ok_or_else(|| PreconditionError::new_err(format!("unknown vertex `{name}`")))
        };
        let pairs = edges
            .iter()
            .map(|(a, b)| Ok((index(a)?, index(b)?)))
            .collect::<PyResult<Vec<_>>>()?;
        CoreGraph::new(&ctx, pairs).map(|inner| Graph { inner }).map_err(to_py)
    }

    fn edges(&self) -> Vec<(String, String)> {
        let ctx = self.inner.ctx();
        self.inner
            .edges()
            .iter()
            .map(|&(a, b)| (ctx.name(a).to_string(), ctx.name(b).to_string()))
            .collect()
    }

    fn edge_ideal(&self) -> Ideal {
        Ideal::wrap(self.inner.edge_ideal())
    }

    fn cover_ideal(&self) -> Ideal {
        Ideal::wrap(self.inner.clutter().cover_ideal())
    }

    fn is_bipartite(&self) -> bool {
        self.inner.is_bipartite()
    }

    /// Combinatorial and homological tests for Cohen–Macaulayness of the
    /// square of the edge ideal.
    #[pyo3(signature = (characteristic = 0))]
    fn cm_square<'py>(&self, py: Python<'py>, characteristic: u32) -> PyResult<Bound<'py, PyDict>> {
        let (f, c) = (field(characteristic)?, caps()?);
        let record = py.detach(|| cm_square_predicates(&self.inner, f, &c)).map_err(to_py)?;
        json_to_dict(py, &serialize(&record))
    }

    fn __repr__(&self) -> String {
        format!("Graph({})", self.inner.display_edges())
    }
}

/// A parsed input file: one ring plus named ideals, graphs, clutters and digraphs.
#[pyclass(name = "Session", module = "mdepth", frozen)]
struct Session {
    inner: CoreSession,
}

#[pymethods]
impl Session {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        CoreSession::parse(text).map(|inner| Session { inner }).map_err(to_py)
    }

    fn names(&self) -> Vec<String> {
        self.inner.bindings().iter().map(|(n, _)| n.clone()).collect()
    }

    fn kind(&self, name: &str) -> Option<&'static str> {
        self.inner.get(name).map(|b| b.kind())
    }

    fn ideal(&self, name: &str) -> PyResult<Ideal> {
        use monomial_depth::io::Binding;
        let ideal = match self.inner.get(name) {
            Some(Binding::Ideal(i)) => i.clone(),
            Some(Binding::Graph(g)) => g.edge_ideal(),
            Some(Binding::Clutter(c)) => c.edge_ideal(),
            Some(Binding::Digraph(d)) => monomial_depth::polarization::weighted_digraph_ideal(d),
            None => return Err(PreconditionError::new_err(format!("no object named `{name}`"))),
        };
        Ok(Ideal::wrap(ideal))
    }

    fn graph(&self, name: &str) -> PyResult<Graph> {
        match self.inner.get(name) {
            Some(io::Binding::Graph(g)) => Ok(Graph { inner: g.clone() }),
            _ => Err(PreconditionError::new_err(format!("no graph named `{name}`"))),
        }
    }

    /// Run a command-line operation and return its result document.
    #[pyo3(signature = (command, args, characteristic = 0, max_k = 3, caps = None, symbolic = false))]
    fn run<'py>(
        &self,
        py: Python<'py>,
        command: &str,
        args: Vec<String>,
        characteristic: u32,
        max_k: u32,
        caps: Option<&str>,
        symbolic: bool,
    ) -> PyResult<Bound<'py, PyDict>> {
        let command = parse_command(command)?;
        let base = self::caps()?;
        let caps = match caps {
            Some(spec) => base.with_overrides(spec).map_err(to_py)?,
            None => base,
        };
        let flags = Flags { characteristic, max_k, caps, symbolic };
        let doc = py
            .detach(|| io::run(command, &self.inner, &args, &flags))
            .map_err(to_py)?;
        json_to_dict(py, &serialize(&doc))
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }
}

fn parse_command(name: &str) -> PyResult<Command> {
    <Command as clap::ValueEnum>::from_str(name, true)
        .map_err(|_| PyValueError::new_err(format!("unknown command `{name}`")))
}

/// Run the reproduction suite and return its result document.
#[pyfunction]
fn paper_suite<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
    let flags = Flags { caps: caps()?, ..Flags::default() };
    let doc = py.detach(|| io::paper_suite(&flags));
    json_to_dict(py, &serialize(&doc))
}

#[pymodule]
fn mdepth(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Ideal>()?;
    m.add_class::<Graph>()?;
    m.add_class::<Session>()?;
    m.add_function(wrap_pyfunction!(paper_suite, m)?)?;
    m.add("ParseError", m.py().get_type::<ParseError>())?;
    m.add("PreconditionError", m.py().get_type::<PreconditionError>())?;
    m.add("ResourceError", m.py().get_type::<ResourceError>())?;
    Ok(())
}
