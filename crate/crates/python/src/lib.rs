//! Python bindings: closed-form spectra, radial wave functions and the
//! Numerov shooting cross-check, mirroring the Rust API.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use hellmann_core::model::{PotentialParams, QuantumNumbers, RelativisticSetup, SymmetryLimit};
use hellmann_core::nu;
use hellmann_core::oracle::{
    self, EffectiveEquation, EquationForm, ProblemKind,
};
use hellmann_core::wavefunctions;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_limit(limit: &str) -> PyResult<SymmetryLimit> {
    match limit {
        "spin" => Ok(SymmetryLimit::Spin),
        "pspin" => Ok(SymmetryLimit::PSpin),
        other => Err(PyValueError::new_err(format!(
            "limit must be 'spin' or 'pspin', got '{other}'"
        ))),
    }
}

/// Hellmann potential parameters plus the tensor strength H.
#[pyclass(name = "PotentialParams", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPotentialParams {
    inner: PotentialParams,
}

#[pymethods]
impl PyPotentialParams {
    #[new]
    #[pyo3(signature = (a, b, delta, h = 0.0))]
    fn new(a: f64, b: f64, delta: f64, h: f64) -> PyResult<Self> {
        Ok(Self { inner: PotentialParams::new(a, b, delta, h).map_err(err)? })
    }

    #[getter]
    fn a(&self) -> f64 {
        self.inner.a
    }
    #[getter]
    fn b(&self) -> f64 {
        self.inner.b
    }
    #[getter]
    fn delta(&self) -> f64 {
        self.inner.delta
    }
    #[getter]
    fn h(&self) -> f64 {
        self.inner.h
    }

    /// V(r) = -a/r + b e^{-delta r}/r.
    fn potential(&self, r: f64) -> PyResult<f64> {
        hellmann_core::hellmann_potential(r, &self.inner).map_err(err)
    }

    /// The screened 1/r approximation of the potential.
    fn approx_potential(&self, r: f64) -> PyResult<f64> {
        hellmann_core::approx_potential(r, &self.inner).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "PotentialParams(a={}, b={}, delta={}, h={})",
            self.inner.a, self.inner.b, self.inner.delta, self.inner.h
        )
    }
}

/// Mass, symmetry constant and limit ('spin' or 'pspin') of the Dirac problem.
#[pyclass(name = "RelativisticSetup", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PySetup {
    inner: RelativisticSetup,
}

#[pymethods]
impl PySetup {
    #[new]
    fn new(mass: f64, c_sym: f64, limit: &str) -> PyResult<Self> {
        let limit = parse_limit(limit)?;
        Ok(Self { inner: RelativisticSetup::new(mass, c_sym, limit).map_err(err)? })
    }

    #[getter]
    fn mass(&self) -> f64 {
        self.inner.mass
    }
    #[getter]
    fn c_sym(&self) -> f64 {
        self.inner.c_sym
    }
    #[getter]
    fn limit(&self) -> &'static str {
        match self.inner.limit {
            SymmetryLimit::Spin => "spin",
            SymmetryLimit::PSpin => "pspin",
        }
    }

    /// Open interval of representable bound-state energies.
    fn energy_window(&self) -> (f64, f64) {
        self.inner.energy_window()
    }

    fn __repr__(&self) -> String {
        format!(
            "RelativisticSetup(mass={}, c_sym={}, limit='{}')",
            self.inner.mass,
            self.inner.c_sym,
            self.limit()
        )
    }
}

/// One solved bound state.
#[pyclass(name = "EnergyLevel", frozen)]
struct PyEnergyLevel {
    #[pyo3(get)]
    energy: f64,
    #[pyo3(get)]
    n: u32,
    #[pyo3(get)]
    kappa: i32,
    #[pyo3(get)]
    label: String,
    #[pyo3(get)]
    residual: f64,
}

#[pymethods]
impl PyEnergyLevel {
    fn __repr__(&self) -> String {
        format!(
            "EnergyLevel(energy={}, n={}, kappa={}, label='{}')",
            self.energy, self.n, self.kappa, self.label
        )
    }
}

/// All closed-form roots of the energy condition for (n, kappa), ascending.
#[pyfunction]
fn solve_levels(
    p: &PyPotentialParams,
    setup: &PySetup,
    n: u32,
    kappa: i32,
) -> PyResult<Vec<PyEnergyLevel>> {
    let qn = QuantumNumbers::new(n, kappa).map_err(err)?;
    let levels = nu::solve_levels(&p.inner, &setup.inner, &qn, None).map_err(err)?;
    Ok(levels
        .into_iter()
        .map(|l| PyEnergyLevel {
            energy: l.energy,
            n: l.qn.n,
            kappa: l.qn.kappa,
            label: l.label.full_name(l.qn.n),
            residual: l.residual_at_root,
        })
        .collect())
}

/// Closed-form Schroedinger energy; returns (energy, bound).
#[pyfunction]
fn nonrel_energy(n: u32, l: u32, a: f64, b: f64, delta: f64, mass: f64) -> PyResult<(f64, bool)> {
    let level = nu::nonrel_energy(n, l, a, b, delta, mass).map_err(err)?;
    Ok((level.energy, level.bound))
}

/// Pure-Coulomb level -m a^2 / (2 (n+l+1)^2).
#[pyfunction]
fn coulomb_energy(n: u32, l: u32, a: f64, mass: f64) -> f64 {
    nu::coulomb_energy(n, l, a, mass)
}

/// A normalized radial function, callable at any radius.
#[pyclass(name = "RadialFunction", frozen)]
struct PyRadialFunction {
    inner: wavefunctions::RadialFunction,
}

#[pymethods]
impl PyRadialFunction {
    fn __call__(&self, r: f64) -> f64 {
        self.inner.eval(r)
    }

    fn eval(&self, r: f64) -> f64 {
        self.inner.eval(r)
    }

    /// Analytic derivative (solved components only).
    fn derivative(&self, r: f64) -> PyResult<f64> {
        self.inner.eval_derivative(r).map_err(err)
    }

    fn sample(&self, radii: Vec<f64>) -> Vec<(f64, f64)> {
        self.inner.sample(&radii)
    }

    /// Radius where the exponential tail drops below 1e-12.
    fn tail_radius(&self) -> f64 {
        self.inner.tail_radius()
    }

    /// Interior sign changes over a uniform probe grid.
    #[pyo3(signature = (points = 100_000))]
    fn nodes(&self, points: usize) -> usize {
        wavefunctions::count_nodes(&self.inner, points)
    }
}

/// Spin-limit spinor pair (F, G) at a closed-form root energy, normalized
/// so that the integral of F^2 + G^2 is one.
#[pyfunction]
fn spin_wavefunctions(
    energy: f64,
    p: &PyPotentialParams,
    setup: &PySetup,
    n: u32,
    kappa: i32,
) -> PyResult<(PyRadialFunction, PyRadialFunction)> {
    let qn = QuantumNumbers::new(n, kappa).map_err(err)?;
    let f = wavefunctions::upper_component(energy, &p.inner, &setup.inner, &qn).map_err(err)?;
    let g = wavefunctions::lower_component(&f, energy, &p.inner, &setup.inner, kappa)
        .map_err(err)?;
    let (f, g) = wavefunctions::normalize_spinor(&f, &g).map_err(err)?;
    Ok((PyRadialFunction { inner: f }, PyRadialFunction { inner: g }))
}

/// The solved component at a root energy (F in the spin limit, G in the
/// p-spin limit), normalized to unit single-component norm.
#[pyfunction]
fn solved_component(
    energy: f64,
    p: &PyPotentialParams,
    setup: &PySetup,
    n: u32,
    kappa: i32,
) -> PyResult<PyRadialFunction> {
    let qn = QuantumNumbers::new(n, kappa).map_err(err)?;
    let f = wavefunctions::solved_component(energy, &p.inner, &setup.inner, &qn).map_err(err)?;
    Ok(PyRadialFunction { inner: f })
}

/// Normalized non-relativistic radial function at the closed-form level.
#[pyfunction]
fn nonrel_wavefunction(
    n: u32,
    l: u32,
    a: f64,
    b: f64,
    delta: f64,
    mass: f64,
) -> PyResult<PyRadialFunction> {
    let energy = nu::nonrel_energy(n, l, a, b, delta, mass).map_err(err)?.energy;
    let f = wavefunctions::nonrel_radial(n, l, a, b, delta, mass, energy).map_err(err)?;
    Ok(PyRadialFunction { inner: f })
}

/// Numerov shooting eigenvalue of the relativistic radial equation.
/// `form` is 'approx' or 'exact'; the search window defaults to a band
/// around the closed-form energy `near`.
#[pyfunction]
#[pyo3(signature = (p, setup, kappa, n_target, near, form = "approx"))]
fn shoot_relativistic(
    p: &PyPotentialParams,
    setup: &PySetup,
    kappa: i32,
    n_target: usize,
    near: f64,
    form: &str,
) -> PyResult<f64> {
    let form = match form {
        "approx" => EquationForm::Approximated,
        "exact" => EquationForm::Exact,
        other => {
            return Err(PyValueError::new_err(format!(
                "form must be 'approx' or 'exact', got '{other}'"
            )))
        }
    };
    let eq = EffectiveEquation {
        form,
        kind: ProblemKind::Relativistic { setup: setup.inner, kappa },
        potential: p.inner,
    };
    let window = oracle::comparison_window(near, &setup.inner);
    let grid = oracle::default_grid(&eq, window).map_err(err)?;
    oracle::shoot_eigenvalue(&eq, n_target, window, &grid).map_err(err)
}

/// Numerov shooting eigenvalue of the non-relativistic radial equation.
#[pyfunction]
#[pyo3(signature = (n, l, a, b, delta, mass, form = "approx"))]
fn shoot_nonrel(
    n: u32,
    l: u32,
    a: f64,
    b: f64,
    delta: f64,
    mass: f64,
    form: &str,
) -> PyResult<f64> {
    let form = match form {
        "approx" => EquationForm::Approximated,
        "exact" => EquationForm::Exact,
        other => {
            return Err(PyValueError::new_err(format!(
                "form must be 'approx' or 'exact', got '{other}'"
            )))
        }
    };
    let e_nu = nu::nonrel_energy(n, l, a, b, delta, mass).map_err(err)?.energy;
    if !(e_nu < 0.0) {
        return Err(PyValueError::new_err(format!(
            "state (n={n}, l={l}) is not bound (E = {e_nu})"
        )));
    }
    let eq = EffectiveEquation {
        form,
        kind: ProblemKind::Nonrel { mass, l },
        potential: PotentialParams::new(a, b, delta, 0.0).map_err(err)?,
    };
    let window = (1.5 * e_nu, 0.5 * e_nu);
    let grid = oracle::default_grid(&eq, window).map_err(err)?;
    oracle::shoot_eigenvalue(&eq, n as usize, window, &grid).map_err(err)
}

/// Spectroscopic label for kappa in a given limit, e.g. (-2, 'spin') -> 'p3/2'.
#[pyfunction]
fn kappa_label(kappa: i32, limit: &str) -> PyResult<String> {
    let limit = parse_limit(limit)?;
    Ok(hellmann_core::kappa_label(kappa, limit).map_err(err)?.name)
}

#[pymodule]
fn hellmann_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPotentialParams>()?;
    m.add_class::<PySetup>()?;
    m.add_class::<PyEnergyLevel>()?;
    m.add_class::<PyRadialFunction>()?;
    m.add_function(wrap_pyfunction!(solve_levels, m)?)?;
    m.add_function(wrap_pyfunction!(nonrel_energy, m)?)?;
    m.add_function(wrap_pyfunction!(coulomb_energy, m)?)?;
    m.add_function(wrap_pyfunction!(spin_wavefunctions, m)?)?;
    m.add_function(wrap_pyfunction!(solved_component, m)?)?;
    m.add_function(wrap_pyfunction!(nonrel_wavefunction, m)?)?;
    m.add_function(wrap_pyfunction!(shoot_relativistic, m)?)?;
    m.add_function(wrap_pyfunction!(shoot_nonrel, m)?)?;
    m.add_function(wrap_pyfunction!(kappa_label, m)?)?;
    Ok(())
}
