use pyo3::exceptions::{PyArithmeticError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use dunkl_core::cli::{self, Params, Setup, SuiteConfig};
use dunkl_core::groups::GroupKind;
use dunkl_core::invariants::{canonical_invariant, elementary_invariant, limit_at, CanonicalInvariant, GeneratorSet};
use dunkl_core::polyring::{poly_to_json, Poly};
use dunkl_core::scalars::{Cyclotomic, RatFun, Rational, Scalar};
use dunkl_core::Error;

type Q = RatFun<Rational>;
type C = RatFun<Cyclotomic>;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Pole { denominator } => PyArithmeticError::new_err(format!("pole: {denominator}")),
        Error::Parse(_) | Error::InvalidArgument(_) | Error::ArityMismatch { .. } => PyValueError::new_err(e.to_string()),
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

#[derive(Clone)]
enum AnyPoly {
    Q(Poly<Q>),
    C(Poly<C>),
}

/// A polynomial over rational functions in the multiplicity parameters.
#[pyclass(module = "dunkl", frozen, skip_from_py_object)]
#[derive(Clone)]
struct Polynomial {
    poly: AnyPoly,
    vars: Vec<String>,
    params: Vec<String>,
    zeta_order: Option<u32>,
}

impl Polynomial {
    fn text(&self) -> String {
        match &self.poly {
            AnyPoly::Q(p) => p.fmt_vars(&self.vars, |c| c.fmt_params(&self.params)),
            AnyPoly::C(p) => p.fmt_vars(&self.vars, |c| c.fmt_params(&self.params)),
        }
    }

    fn with(&self, poly: AnyPoly) -> Self {
        Polynomial { poly, ..self.clone() }
    }

    fn binop(&self, other: &Polynomial, op: char) -> PyResult<Polynomial> {
        let out = match (&self.poly, &other.poly) {
            (AnyPoly::Q(a), AnyPoly::Q(b)) => AnyPoly::Q(apply(a, b, op).map_err(py_err)?),
            (AnyPoly::C(a), AnyPoly::C(b)) => AnyPoly::C(apply(a, b, op).map_err(py_err)?),
            _ => return Err(PyValueError::new_err("polynomials belong to different groups")),
        };
        Ok(self.with(out))
    }
}

fn apply<S: Scalar>(a: &Poly<S>, b: &Poly<S>, op: char) -> dunkl_core::Result<Poly<S>> {
    match op {
        '+' => a.try_add(b),
        '-' => a.try_sub(b),
        _ => a.try_mul(b),
    }
}

#[pymethods]
impl Polynomial {
    fn __repr__(&self) -> String {
        format!("Polynomial({})", self.text())
    }

    fn __str__(&self) -> String {
        self.text()
    }

    fn __add__(&self, other: PyRef<'_, Polynomial>) -> PyResult<Polynomial> {
        self.binop(&other, '+')
    }

    fn __sub__(&self, other: PyRef<'_, Polynomial>) -> PyResult<Polynomial> {
        self.binop(&other, '-')
    }

    fn __mul__(&self, other: PyRef<'_, Polynomial>) -> PyResult<Polynomial> {
        self.binop(&other, '*')
    }

    fn __pow__(&self, e: u32, _modulo: Option<u32>) -> Polynomial {
        self.with(match &self.poly {
            AnyPoly::Q(p) => AnyPoly::Q(p.pow(e)),
            AnyPoly::C(p) => AnyPoly::C(p.pow(e)),
        })
    }

    fn __eq__(&self, other: PyRef<'_, Polynomial>) -> bool {
        match (&self.poly, &other.poly) {
            (AnyPoly::Q(a), AnyPoly::Q(b)) => a == b,
            (AnyPoly::C(a), AnyPoly::C(b)) => a == b,
            _ => false,
        }
    }

    fn is_zero(&self) -> bool {
        match &self.poly {
            AnyPoly::Q(p) => p.is_zero(),
            AnyPoly::C(p) => p.is_zero(),
        }
    }

    /// Interchange JSON: arity, params and graded-lex descending terms.
    fn to_json(&self) -> String {
        let j = match &self.poly {
            AnyPoly::Q(p) => poly_to_json(p, &self.params, self.zeta_order),
            AnyPoly::C(p) => poly_to_json(p, &self.params, self.zeta_order),
        };
        serde_json::to_string(&j).expect("serializable")
    }
}

/// A canonical invariant `b_a` with its expansion in the generators.
#[pyclass(module = "dunkl", frozen, skip_from_py_object)]
struct Invariant {
    #[pyo3(get)]
    index: Vec<u32>,
    /// `(exponents, monomial name, coefficient)`, largest monomial first.
    #[pyo3(get)]
    expansion: Vec<(Vec<u32>, String, String)>,
    #[pyo3(get)]
    poly: Py<Polynomial>,
    group: String,
}

#[pymethods]
impl Invariant {
    fn __repr__(&self) -> String {
        let terms: Vec<String> = self.expansion.iter().map(|(_, m, c)| format!("({c})*{m}")).collect();
        format!("Invariant({}, {:?}: {})", self.group, self.index, terms.join(" + "))
    }
}

/// A reflection group with a multiplicity function.
#[pyclass(module = "dunkl", frozen, skip_from_py_object)]
struct Group {
    kind: GroupKind,
    setup: Setup,
}

impl Group {
    fn wrap<S: Scalar>(&self, ctx_vars: Vec<String>, params: Vec<String>, p: Poly<S>, lift: fn(Poly<S>) -> AnyPoly) -> Polynomial {
        Polynomial { poly: lift(p), vars: ctx_vars, params, zeta_order: self.setup.zeta_order() }
    }

    fn invariant<S: Scalar>(
        &self,
        py: Python<'_>,
        b: CanonicalInvariant<S>,
        gens: &GeneratorSet<S>,
        vars: Vec<String>,
        params: Vec<String>,
        lift: fn(Poly<S>) -> AnyPoly,
    ) -> PyResult<Invariant> {
        let expansion = b
            .expansion
            .iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(a, c)| (a.clone(), gens.monomial_name(a), c.fmt_params(&params)))
            .collect();
        let poly = Py::new(py, self.wrap(vars, params, b.poly, lift))?;
        Ok(Invariant { index: b.index, expansion, poly, group: self.kind.to_string() })
    }
}

macro_rules! on_setup {
    ($self:expr, $ctx:ident, $gens:ident, $lift:ident, $body:block) => {
        match &$self.setup {
            Setup::Symmetric($ctx, $gens) => {
                let $lift: fn(Poly<Q>) -> AnyPoly = AnyPoly::Q;
                $body
            }
            Setup::Dihedral($ctx, $gens) => {
                let $lift: fn(Poly<C>) -> AnyPoly = AnyPoly::C;
                $body
            }
        }
    };
}

fn unwrap_q(p: &Polynomial) -> PyResult<&Poly<Q>> {
    match &p.poly {
        AnyPoly::Q(q) => Ok(q),
        AnyPoly::C(_) => Err(PyValueError::new_err("expected a polynomial of a symmetric group")),
    }
}

fn unwrap_c(p: &Polynomial) -> PyResult<&Poly<C>> {
    match &p.poly {
        AnyPoly::C(q) => Ok(q),
        AnyPoly::Q(_) => Err(PyValueError::new_err("expected a polynomial of a dihedral group")),
    }
}

#[pymethods]
impl Group {
    /// `spec` is `Sn:n`, `Sn0:n` or `I2:m`; `params` is `symbolic`, `equal`
    /// or comma-separated rationals.
    #[new]
    #[pyo3(signature = (spec, params = "symbolic"))]
    fn new(spec: &str, params: &str) -> PyResult<Self> {
        let kind: GroupKind = spec.parse().map_err(py_err)?;
        let params: Params = params.parse().map_err(py_err)?;
        let setup = Setup::new(kind, &params).map_err(py_err)?;
        Ok(Group { kind, setup })
    }

    fn __repr__(&self) -> String {
        format!("Group({})", self.kind)
    }

    #[getter]
    fn rank(&self) -> usize {
        on_setup!(self, ctx, _g, _l, { ctx.dim() })
    }

    #[getter]
    fn params(&self) -> Vec<String> {
        on_setup!(self, ctx, _g, _l, { ctx.param_names().to_vec() })
    }

    #[getter]
    fn degrees(&self) -> Vec<u32> {
        on_setup!(self, _ctx, g, _l, { g.degrees.clone() })
    }

    /// `h_c` as a canonical string.
    fn h_c(&self) -> String {
        on_setup!(self, ctx, _g, _l, { ctx.h_c().fmt_params(ctx.param_names()) })
    }

    /// Coordinate function `i`.
    fn var(&self, i: usize) -> PyResult<Polynomial> {
        on_setup!(self, ctx, _g, lift, {
            if i >= ctx.dim() {
                return Err(PyValueError::new_err(format!("variable index {i} out of range")));
            }
            Ok(self.wrap(ctx.group.var_names(), ctx.param_names().to_vec(), Poly::var(i, ctx.dim()), lift))
        })
    }

    /// Generator `k` of the invariant ring (0-based).
    fn generator(&self, k: usize) -> PyResult<Polynomial> {
        on_setup!(self, ctx, g, lift, {
            let p = g.gens.get(k).cloned().ok_or_else(|| PyValueError::new_err("generator index out of range"))?;
            Ok(self.wrap(ctx.group.var_names(), ctx.param_names().to_vec(), p, lift))
        })
    }

    /// The Dunkl operator in coordinate direction `j`.
    fn dunkl(&self, j: usize, f: PyRef<'_, Polynomial>) -> PyResult<Polynomial> {
        let out = match &self.setup {
            Setup::Symmetric(ctx, _) => AnyPoly::Q(ctx.dunkl_apply(j, unwrap_q(&f)?).map_err(py_err)?),
            Setup::Dihedral(ctx, _) => AnyPoly::C(ctx.dunkl_apply(j, unwrap_c(&f)?).map_err(py_err)?),
        };
        Ok(f.with(out))
    }

    /// The Dunkl Laplacian.
    fn laplacian(&self, f: PyRef<'_, Polynomial>) -> PyResult<Polynomial> {
        let out = match &self.setup {
            Setup::Symmetric(ctx, _) => AnyPoly::Q(ctx.laplacian(unwrap_q(&f)?).map_err(py_err)?),
            Setup::Dihedral(ctx, _) => AnyPoly::C(ctx.laplacian(unwrap_c(&f)?).map_err(py_err)?),
        };
        Ok(f.with(out))
    }

    /// `(f, g)_c` as a canonical string.
    fn pairing(&self, f: PyRef<'_, Polynomial>, g: PyRef<'_, Polynomial>) -> PyResult<String> {
        match &self.setup {
            Setup::Symmetric(ctx, _) => {
                let v = ctx.pairing(unwrap_q(&f)?, unwrap_q(&g)?).map_err(py_err)?;
                Ok(v.fmt_params(ctx.param_names()))
            }
            Setup::Dihedral(ctx, _) => {
                let v = ctx.pairing(unwrap_c(&f)?, unwrap_c(&g)?).map_err(py_err)?;
                Ok(v.fmt_params(ctx.param_names()))
            }
        }
    }

    /// The canonical invariant `b_a`.
    fn canonical(&self, py: Python<'_>, a: Vec<u32>) -> PyResult<Invariant> {
        on_setup!(self, ctx, g, lift, {
            let b = canonical_invariant(&a, g, ctx).map_err(py_err)?;
            self.invariant(py, b, g, ctx.group.var_names(), ctx.param_names().to_vec(), lift)
        })
    }

    /// The elementary canonical invariant of weighted degree `d`.
    fn elementary(&self, py: Python<'_>, d: u32) -> PyResult<Invariant> {
        on_setup!(self, ctx, g, lift, {
            let b = elementary_invariant(d, g, ctx).map_err(py_err)?;
            self.invariant(py, b, g, ctx.group.var_names(), ctx.param_names().to_vec(), lift)
        })
    }

    /// `elementary(d)` with every parameter set to `at`; raises `ArithmeticError` on a pole.
    fn limit(&self, d: u32, at: &str) -> PyResult<Polynomial> {
        let q: Rational = at.parse().map_err(py_err)?;
        on_setup!(self, ctx, g, lift, {
            let b = elementary_invariant(d, g, ctx).map_err(py_err)?;
            let point = vec![q.clone(); ctx.mult.values.len()];
            let p = limit_at(&b, g, &point).map_err(py_err)?;
            Ok(self.wrap(ctx.group.var_names(), Vec::new(), p, lift))
        })
    }
}

/// Runs a verification suite; returns the report as JSON.
#[pyfunction]
#[allow(clippy::too_many_arguments)]
#[pyo3(signature = (suite, group, params = "symbolic", max_degree = None, order = None, seed = 42, samples = None))]
fn verify(
    py: Python<'_>,
    suite: &str,
    group: &str,
    params: &str,
    max_degree: Option<u32>,
    order: Option<u32>,
    seed: u64,
    samples: Option<usize>,
) -> PyResult<String> {
    let cfg = SuiteConfig {
        group: group.parse().map_err(py_err)?,
        params: params.parse().map_err(py_err)?,
        max_degree,
        order,
        seed,
        samples,
    };
    let report = py.detach(|| cli::run_suite(suite, &cfg)).map_err(py_err)?;
    Ok(serde_json::to_string(&report).expect("serializable"))
}

/// Runs the command-line front end; returns `(exit code, stdout, stderr)`.
#[pyfunction]
fn run_cli(py: Python<'_>, args: Vec<String>) -> (i32, String, String) {
    let out = py.detach(|| cli::run(std::iter::once("dunkl".to_string()).chain(args)));
    (out.code, out.stdout, out.stderr)
}

#[pymodule]
fn dunkl(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Group>()?;
    m.add_class::<Polynomial>()?;
    m.add_class::<Invariant>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    m.add("SUITES", cli::SUITES.to_vec())?;
    Ok(())
}
