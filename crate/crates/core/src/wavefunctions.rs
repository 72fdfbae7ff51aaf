//! Closed-form radial wave functions: Jacobi polynomials by three-term
//! recurrence, assembly of the solved and derived relativistic components,
//! the non-relativistic radial function, and Simpson normalization.

use crate::error::{Error, Result};
use crate::model::{PotentialParams, QuantumNumbers, RelativisticSetup, SymmetryLimit};
use crate::nu::{effective_problem, energy_residual, nonrel_energy};

/// Jacobi polynomial P_n^{(alpha, beta)}(x) by forward recurrence.
pub fn jacobi(n: u32, alpha: f64, beta: f64, x: f64) -> Result<f64> {
    if !(alpha > -1.0) || !(beta > -1.0) {
        return Err(Error::Domain(format!(
            "Jacobi parameters must exceed -1, got alpha = {alpha}, beta = {beta}"
        )));
    }
    Ok(jacobi_unchecked(n, alpha, beta, x))
}

fn jacobi_unchecked(n: u32, alpha: f64, beta: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut p_prev = 1.0;
    let mut p = (alpha + 1.0) + (alpha + beta + 2.0) * (x - 1.0) / 2.0;
    for k in 2..=n {
        let k = k as f64;
        let ab = alpha + beta;
        let c1 = 2.0 * k * (k + ab) * (2.0 * k + ab - 2.0);
        let c2 = (2.0 * k + ab - 1.0)
            * ((2.0 * k + ab) * (2.0 * k + ab - 2.0) * x + alpha * alpha - beta * beta);
        let c3 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + ab);
        let p_next = (c2 * p - c3 * p_prev) / c1;
        p_prev = p;
        p = p_next;
    }
    p
}

/// d/dx P_n^{(alpha, beta)}(x) = ((n + alpha + beta + 1)/2) P_{n-1}^{(alpha+1, beta+1)}(x).
pub fn jacobi_derivative(n: u32, alpha: f64, beta: f64, x: f64) -> Result<f64> {
    if !(alpha > -1.0) || !(beta > -1.0) {
        return Err(Error::Domain(format!(
            "Jacobi parameters must exceed -1, got alpha = {alpha}, beta = {beta}"
        )));
    }
    if n == 0 {
        return Ok(0.0);
    }
    Ok(0.5 * (n as f64 + alpha + beta + 1.0) * jacobi_unchecked(n - 1, alpha + 1.0, beta + 1.0, x))
}

/// Which radial component this function represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadialKind {
    UpperF,
    LowerG,
    NonrelR,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct DerivedLower {
    /// kappa - H from the (d/dr + kappa/r - U) operator.
    coupling: f64,
    /// 1/(M + E - C_s).
    prefactor: f64,
    /// Normalization of the parent upper component.
    parent_norm: f64,
}

/// A sampled-or-evaluable radial function
/// N e^{-delta sqrt(C) r} (1 - e^{-delta r})^{eta} P_n^{(2 sqrt(C), 2 eta - 1)}(1 - 2 e^{-delta r}),
/// or the derived lower component built from it.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialFunction {
    pub kind: RadialKind,
    pub n: u32,
    pub delta: f64,
    /// Decay exponent sqrt(C): the tail behaves as e^{-delta sqrt(C) r}.
    pub sqrt_c: f64,
    /// Power of (1 - e^{-delta r}); l + 1 in the non-relativistic case.
    pub eta_eff: f64,
    pub norm: f64,
    derived: Option<DerivedLower>,
}

impl RadialFunction {
    fn shape(n: u32, delta: f64, sqrt_c: f64, eta_eff: f64, kind: RadialKind) -> Self {
        Self { kind, n, delta, sqrt_c, eta_eff, norm: 1.0, derived: None }
    }

    /// Unnormalized envelope value at r > 0.
    fn envelope(&self, r: f64) -> f64 {
        let s = (-self.delta * r).exp();
        let one_minus_s = -(-self.delta * r).exp_m1();
        s.powf(self.sqrt_c)
            * one_minus_s.powf(self.eta_eff)
            * jacobi_unchecked(self.n, 2.0 * self.sqrt_c, 2.0 * self.eta_eff - 1.0, 1.0 - 2.0 * s)
    }

    /// Analytic d/dr of the envelope.
    fn envelope_deriv(&self, r: f64) -> f64 {
        let d = self.delta;
        let s = (-d * r).exp();
        let one_minus_s = -(-d * r).exp_m1();
        let alpha = 2.0 * self.sqrt_c;
        let beta = 2.0 * self.eta_eff - 1.0;
        let poly = jacobi_unchecked(self.n, alpha, beta, 1.0 - 2.0 * s);
        let dpoly = if self.n == 0 {
            0.0
        } else {
            0.5 * (self.n as f64 + alpha + beta + 1.0)
                * jacobi_unchecked(self.n - 1, alpha + 1.0, beta + 1.0, 1.0 - 2.0 * s)
        };
        let base = s.powf(self.sqrt_c) * one_minus_s.powf(self.eta_eff);
        d * base
            * ((-self.sqrt_c + self.eta_eff * s / one_minus_s) * poly + 2.0 * s * dpoly)
    }

    /// Function value at r >= 0 (r > 0 for a derived lower component with
    /// eta_eff < 1, whose origin limit diverges).
    pub fn eval(&self, r: f64) -> f64 {
        match self.derived {
            None => {
                if r == 0.0 {
                    return 0.0; // (1 - e^{-delta r})^{eta_eff} -> 0 for eta_eff > 0
                }
                self.norm * self.envelope(r)
            }
            Some(lower) => {
                if r == 0.0 {
                    // Leading small-r behavior: G ~ r^{eta_eff - 1}.
                    if self.eta_eff > 1.0 {
                        return 0.0;
                    }
                    let poly_at_origin = jacobi_unchecked(
                        self.n,
                        2.0 * self.sqrt_c,
                        2.0 * self.eta_eff - 1.0,
                        -1.0,
                    );
                    if self.eta_eff == 1.0 {
                        return self.norm
                            * lower.prefactor
                            * lower.parent_norm
                            * (self.eta_eff + lower.coupling)
                            * self.delta
                            * poly_at_origin;
                    }
                    return f64::INFINITY * (lower.prefactor * poly_at_origin).signum();
                }
                self.norm
                    * lower.prefactor
                    * lower.parent_norm
                    * (self.envelope_deriv(r) + lower.coupling / r * self.envelope(r))
            }
        }
    }

    /// Analytic d/dr of the function (solved components only).
    pub fn eval_derivative(&self, r: f64) -> Result<f64> {
        if self.derived.is_some() {
            return Err(Error::Domain(
                "analytic derivative is only provided for solved components".into(),
            ));
        }
        if !(r > 0.0) {
            return Err(Error::Domain(format!("r must be > 0, got {r}")));
        }
        Ok(self.norm * self.envelope_deriv(r))
    }

    /// Sample on an explicit radial grid.
    pub fn sample(&self, r_values: &[f64]) -> Vec<(f64, f64)> {
        r_values.iter().map(|&r| (r, self.eval(r))).collect()
    }

    /// Radius beyond which the tail e^{-delta sqrt(C) r} drops below 1e-12.
    pub fn tail_radius(&self) -> f64 {
        12.0 * std::f64::consts::LN_10 / (self.delta * self.sqrt_c)
    }

    fn with_norm(&self, norm: f64) -> Self {
        Self { norm, ..self.clone() }
    }
}

/// Tolerance on |energy residual| for accepting E as a root.
const ROOT_RESIDUAL_TOL: f64 = 1e-4;

/// Build the solved component at a root energy: the upper component F in
/// the spin limit, the lower component G in the p-spin limit. Returned
/// normalized to unit single-component norm.
pub fn solved_component(
    energy: f64,
    p: &PotentialParams,
    setup: &RelativisticSetup,
    qn: &QuantumNumbers,
) -> Result<RadialFunction> {
    let residual = energy_residual(energy, p, setup, qn)?;
    if residual.abs() > ROOT_RESIDUAL_TOL {
        return Err(Error::Domain(format!(
            "E = {energy} is not a root (residual {residual})"
        )));
    }
    let prob = effective_problem(energy, p, setup, qn.kappa)?;
    if !(prob.coef_c > 0.0) {
        return Err(Error::NotBound(format!("sqrt(C) is not positive (C = {})", prob.coef_c)));
    }
    let kind = match setup.limit {
        SymmetryLimit::Spin => RadialKind::UpperF,
        SymmetryLimit::PSpin => RadialKind::LowerG,
    };
    let f = RadialFunction::shape(qn.n, p.delta, prob.coef_c.sqrt(), prob.eta_eff, kind);
    normalize(&f)
}

/// Spin-limit upper component F at a root energy (normalized).
pub fn upper_component(
    energy: f64,
    p: &PotentialParams,
    setup: &RelativisticSetup,
    qn: &QuantumNumbers,
) -> Result<RadialFunction> {
    if setup.limit != SymmetryLimit::Spin {
        return Err(Error::Domain("upper_component requires the spin limit".into()));
    }
    solved_component(energy, p, setup, qn)
}

/// Lower component G = (d/dr + kappa/r - H/r) F / (M + E - C_s), evaluated
/// from the analytic derivative of F.
pub fn lower_component(
    f: &RadialFunction,
    energy: f64,
    p: &PotentialParams,
    setup: &RelativisticSetup,
    kappa: i32,
) -> Result<RadialFunction> {
    if setup.limit != SymmetryLimit::Spin || f.kind != RadialKind::UpperF {
        return Err(Error::Domain(
            "lower_component derives G from a spin-limit upper component".into(),
        ));
    }
    let denom = setup.mass + energy - setup.c_sym;
    if denom.abs() < 1e-12 {
        return Err(Error::SingularLowerComponent(denom.abs()));
    }
    let mut g = RadialFunction::shape(f.n, f.delta, f.sqrt_c, f.eta_eff, RadialKind::LowerG);
    g.derived = Some(DerivedLower {
        coupling: kappa as f64 - p.h,
        prefactor: 1.0 / denom,
        parent_norm: f.norm,
    });
    Ok(g)
}

/// Non-relativistic radial function for E = nonrel_energy(n, l, ...),
/// normalized so that the integral of R^2 dr is 1.
pub fn nonrel_radial(
    n: u32,
    l: u32,
    a: f64,
    b: f64,
    delta: f64,
    m: f64,
    energy: f64,
) -> Result<RadialFunction> {
    let expected = nonrel_energy(n, l, a, b, delta, m)?;
    if (energy - expected.energy).abs() > 1e-8 * expected.energy.abs().max(1.0) {
        return Err(Error::Domain(format!(
            "E = {energy} is not the closed-form level {}",
            expected.energy
        )));
    }
    let lf = l as f64;
    let radicand = -2.0 * m * (energy + delta * a) / (delta * delta) + lf * (lf + 1.0);
    if radicand < 0.0 {
        return Err(Error::NotBound(format!(
            "negative decay radicand {radicand} for (n, l) = ({n}, {l})"
        )));
    }
    let f = RadialFunction::shape(n, delta, radicand.sqrt(), lf + 1.0, RadialKind::NonrelR);
    normalize(&f)
}

/// Relative convergence target for the panel-doubling quadrature.
const QUAD_REL_TOL: f64 = 1e-10;

/// Composite-Simpson integral of f over [lo, hi] with panel doubling.
fn simpson_adaptive(f: &dyn Fn(f64) -> f64, lo: f64, hi: f64) -> Result<f64> {
    let mut panels = 512usize;
    let mut prev = simpson(f, lo, hi, panels);
    loop {
        panels *= 2;
        let next = simpson(f, lo, hi, panels);
        if (next - prev).abs() <= QUAD_REL_TOL * next.abs().max(f64::MIN_POSITIVE) {
            return Ok(next);
        }
        if panels >= 1 << 22 {
            return Err(Error::Numeric(format!(
                "quadrature did not converge ({prev} vs {next} at {panels} panels)"
            )));
        }
        prev = next;
    }
}

fn simpson(f: &dyn Fn(f64) -> f64, lo: f64, hi: f64, panels: usize) -> f64 {
    let h = (hi - lo) / panels as f64;
    let mut sum = f(lo) + f(hi);
    for i in 1..panels {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(lo + h * i as f64);
    }
    sum * h / 3.0
}

fn norm_integral(f: &RadialFunction) -> Result<f64> {
    if !(f.sqrt_c > 0.0) {
        return Err(Error::NotBound(format!("non-decaying tail (sqrt(C) = {})", f.sqrt_c)));
    }
    let r_max = f.tail_radius();
    // Start just off the origin; the omitted mass scales as r^{2 eta_eff + 1}.
    let r_lo = r_max * 1e-9;
    simpson_adaptive(&|r| f.eval(r).powi(2), r_lo, r_max)
}

/// Rescale so that the integral of f^2 dr over (0, r_max) is 1.
pub fn normalize(f: &RadialFunction) -> Result<RadialFunction> {
    let integral = norm_integral(f)?;
    if !(integral > 0.0) || !integral.is_finite() {
        return Err(Error::Numeric(format!("norm integral {integral} is unusable")));
    }
    Ok(f.with_norm(f.norm / integral.sqrt()))
}

/// Rescale a spinor pair so that the integral of F^2 + G^2 dr is 1. The
/// relative weight of the two components is preserved.
pub fn normalize_spinor(
    f: &RadialFunction,
    g: &RadialFunction,
) -> Result<(RadialFunction, RadialFunction)> {
    let total = norm_integral(f)? + norm_integral(g)?;
    if !(total > 0.0) || !total.is_finite() {
        return Err(Error::Numeric(format!("spinor norm integral {total} is unusable")));
    }
    let scale = 1.0 / total.sqrt();
    Ok((f.with_norm(f.norm * scale), g.with_norm(g.norm * scale)))
}

/// Count strict sign changes of f over a uniform grid on (0, r_max).
pub fn count_nodes(f: &RadialFunction, points: usize) -> usize {
    let r_max = f.tail_radius();
    let mut nodes = 0;
    let mut prev = 0.0f64;
    for i in 1..=points {
        let r = r_max * i as f64 / (points + 1) as f64;
        let v = f.eval(r);
        if prev != 0.0 && v != 0.0 && prev.signum() != v.signum() {
            nodes += 1;
        }
        if v != 0.0 {
            prev = v;
        }
    }
    nodes
}
