//! Independent numerical eigensolver: Numerov integration of
//! u'' = W(r; E) u with two-sided shooting, Sturm node counting, and
//! log-derivative matching at the outermost classical turning point.
//! Used to cross-check the closed-form spectra and wave functions.

use crate::error::{Error, Result};
use crate::model::{approx_potential, hellmann_potential, PotentialParams, RelativisticSetup, SymmetryLimit};
use crate::nu::eta_effective;

/// Uniform radial grid for the shooting integrator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGrid {
    pub r_min: f64,
    pub r_max: f64,
    pub n: usize,
}

impl RadialGrid {
    pub fn new(r_min: f64, r_max: f64, n: usize) -> Result<Self> {
        if !(r_min > 0.0) || !(r_min < r_max) {
            return Err(Error::Domain(format!(
                "need 0 < r_min < r_max, got ({r_min}, {r_max})"
            )));
        }
        if n < 1000 {
            return Err(Error::Domain(format!("grid needs at least 1000 points, got {n}")));
        }
        Ok(Self { r_min, r_max, n })
    }

    pub fn spacing(&self) -> f64 {
        (self.r_max - self.r_min) / (self.n - 1) as f64
    }

    pub fn point(&self, i: usize) -> f64 {
        self.r_min + self.spacing() * i as f64
    }

    /// Same span with twice as many intervals.
    pub fn refined(&self) -> Self {
        Self { n: 2 * self.n - 1, ..*self }
    }
}

/// Which radial equation the centrifugal and potential terms come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquationForm {
    /// Greene-Aldrich form: 1/r replaced by delta/(1 - e^{-delta r}).
    Approximated,
    /// The unapproximated radial equation.
    Exact,
}

/// The physical problem behind W(r; E).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProblemKind {
    Relativistic { setup: RelativisticSetup, kappa: i32 },
    Nonrel { mass: f64, l: u32 },
}

/// Defines W(r; E) such that the radial equation is u'' = W(r; E) u.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveEquation {
    pub form: EquationForm,
    pub kind: ProblemKind,
    pub potential: PotentialParams,
}

impl EffectiveEquation {
    /// Centrifugal index: eta_eff in the relativistic limits, l + 1 nonrel.
    pub fn centrifugal_index(&self) -> f64 {
        match self.kind {
            ProblemKind::Relativistic { setup, kappa } => {
                let raw = match setup.limit {
                    SymmetryLimit::Spin => kappa as f64 + self.potential.h + 1.0,
                    SymmetryLimit::PSpin => kappa as f64 + self.potential.h,
                };
                eta_effective(raw)
            }
            ProblemKind::Nonrel { l, .. } => l as f64 + 1.0,
        }
    }

    /// Asymptotic decay rate sqrt(W(inf; E)) of the bound tail.
    pub fn tail_rate(&self, energy: f64) -> Result<f64> {
        let w_inf = match self.kind {
            ProblemKind::Relativistic { setup, kappa: _ } => match setup.limit {
                SymmetryLimit::Spin => (setup.mass - energy) * (setup.mass + energy - setup.c_sym),
                SymmetryLimit::PSpin => (setup.mass + energy) * (setup.mass - energy + setup.c_sym),
            },
            ProblemKind::Nonrel { mass, .. } => -2.0 * mass * energy,
        };
        if !(w_inf > 0.0) {
            return Err(Error::NotBound(format!(
                "no decaying tail at E = {energy} (W(inf) = {w_inf})"
            )));
        }
        Ok(w_inf.sqrt())
    }
}

/// W(r; E) for the configured equation.
pub fn effective_w(eq: &EffectiveEquation, energy: f64, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("r must be > 0, got {r}")));
    }
    let p = &eq.potential;
    let centrifugal = {
        let idx = eq.centrifugal_index();
        let strength = idx * (idx - 1.0);
        match eq.form {
            EquationForm::Exact => strength / (r * r),
            EquationForm::Approximated => {
                let one_minus_s = -(-p.delta * r).exp_m1();
                strength * p.delta * p.delta / (one_minus_s * one_minus_s)
            }
        }
    };
    let v = match eq.form {
        EquationForm::Exact => hellmann_potential(r, p)?,
        EquationForm::Approximated => approx_potential(r, p)?,
    };
    Ok(match eq.kind {
        ProblemKind::Relativistic { setup, kappa: _ } => {
            let (gamma, beta2) = match setup.limit {
                SymmetryLimit::Spin => (
                    setup.mass + energy - setup.c_sym,
                    (setup.mass - energy) * (setup.mass + energy - setup.c_sym),
                ),
                SymmetryLimit::PSpin => (
                    energy - setup.mass - setup.c_sym,
                    (setup.mass + energy) * (setup.mass - energy + setup.c_sym),
                ),
            };
            centrifugal + gamma * v + beta2
        }
        ProblemKind::Nonrel { mass, .. } => centrifugal + 2.0 * mass * (v - energy),
    })
}

const RENORM_THRESHOLD: f64 = 1e100;

/// Outward Numerov sweep. Returns the solution values and the interior
/// sign-change count (Sturm node count).
fn sweep_outward(w: &[f64], h: f64, grid: &RadialGrid, eta: f64) -> (Vec<f64>, usize) {
    let n = w.len();
    let mut u = vec![0.0; n];
    u[0] = grid.point(0).powf(eta);
    u[1] = grid.point(1).powf(eta);
    let h2 = h * h;
    let mut nodes = 0;
    for i in 1..n - 1 {
        let next = (2.0 * u[i] * (1.0 + 5.0 * h2 * w[i] / 12.0)
            - u[i - 1] * (1.0 - h2 * w[i - 1] / 12.0))
            / (1.0 - h2 * w[i + 1] / 12.0);
        u[i + 1] = next;
        if u[i] != 0.0 && next != 0.0 && u[i].signum() != next.signum() {
            nodes += 1;
        }
        if next.abs() > RENORM_THRESHOLD {
            let scale = 1.0 / RENORM_THRESHOLD;
            for v in u[..=i + 1].iter_mut() {
                *v *= scale;
            }
        }
    }
    (u, nodes)
}

/// Inward Numerov sweep seeded with the decaying tail e^{-k r}.
fn sweep_inward(w: &[f64], h: f64, grid: &RadialGrid, k: f64, down_to: usize) -> Vec<f64> {
    let n = w.len();
    let mut u = vec![0.0; n];
    let r_ref = grid.point(n - 1);
    u[n - 1] = (-k * (grid.point(n - 1) - r_ref)).exp();
    u[n - 2] = (-k * (grid.point(n - 2) - r_ref)).exp();
    let h2 = h * h;
    for i in (down_to + 1..n - 1).rev() {
        let next = (2.0 * u[i] * (1.0 + 5.0 * h2 * w[i] / 12.0)
            - u[i + 1] * (1.0 - h2 * w[i + 1] / 12.0))
            / (1.0 - h2 * w[i - 1] / 12.0);
        u[i - 1] = next;
        if next.abs() > RENORM_THRESHOLD {
            let scale = 1.0 / RENORM_THRESHOLD;
            for v in u[i - 1..].iter_mut() {
                *v *= scale;
            }
        }
    }
    u
}

/// Matching index: the outermost classical turning point (last sign change
/// of W), clamped away from the grid ends.
fn matching_index(w: &[f64]) -> usize {
    let n = w.len();
    let mut m = n / 2;
    for i in (1..n).rev() {
        if w[i] > 0.0 && w[i - 1] <= 0.0 {
            m = i;
            break;
        }
    }
    m.clamp(2, n - 3)
}

fn build_w(eq: &EffectiveEquation, energy: f64, grid: &RadialGrid) -> Result<Vec<f64>> {
    (0..grid.n).map(|i| effective_w(eq, energy, grid.point(i))).collect()
}

/// Integrate outward and inward at trial energy E; return the Sturm node
/// count of the outward solution and the log-derivative mismatch
/// (outward minus inward) at the matching point.
pub fn numerov_count_nodes(
    eq: &EffectiveEquation,
    energy: f64,
    grid: &RadialGrid,
) -> Result<(usize, f64)> {
    let w = build_w(eq, energy, grid)?;
    let h = grid.spacing();
    let eta = eq.centrifugal_index();
    let k = eq.tail_rate(energy)?;
    let m = matching_index(&w);
    let (u_out, nodes) = sweep_outward(&w, h, grid, eta);
    let u_in = sweep_inward(&w, h, grid, k, m.saturating_sub(2));
    let ld_out = (u_out[m + 1] - u_out[m - 1]) / (2.0 * h * u_out[m]);
    let ld_in = (u_in[m + 1] - u_in[m - 1]) / (2.0 * h * u_in[m]);
    Ok((nodes, ld_out - ld_in))
}

/// Locate the eigenvalue with `n_target` radial nodes inside `window` on a
/// fixed grid, bisecting to |dE| < tol. Node-count bisection brackets the
/// level; the log-derivative mismatch refines it when it brackets a sign
/// change, otherwise the node count carries the bisection to tolerance.
pub fn shoot_eigenvalue_on_grid(
    eq: &EffectiveEquation,
    n_target: usize,
    window: (f64, f64),
    grid: &RadialGrid,
    tol: f64,
) -> Result<f64> {
    let (mut lo, mut hi) = window;
    if !(lo < hi) {
        return Err(Error::Domain(format!("empty window ({lo}, {hi})")));
    }
    let count = |e: f64| -> Result<usize> { Ok(numerov_count_nodes(eq, e, grid)?.0) };
    let c_lo = count(lo)?;
    let c_hi = count(hi)?;
    // The node count is monotone along the window, but its direction depends
    // on the E-dependence of W: increasing for the spin and non-relativistic
    // problems, decreasing in the p-spin window.
    let above_at_hi = if c_lo <= n_target && n_target < c_hi {
        true
    } else if c_hi <= n_target && n_target < c_lo {
        false
    } else {
        return Err(Error::EigenvalueNotFound { nodes: n_target, lo, hi });
    };
    let past = |c: usize| -> bool {
        if above_at_hi {
            c > n_target
        } else {
            c <= n_target
        }
    };
    // Narrow by node count until the bracket holds exactly one transition.
    let coarse = (tol * 256.0).max((hi - lo) * 1e-6);
    while hi - lo > coarse {
        let mid = 0.5 * (lo + hi);
        if past(count(mid)?) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    // Mismatch refinement inside the bracket.
    let mismatch = |e: f64| -> Result<f64> { Ok(numerov_count_nodes(eq, e, grid)?.1) };
    let f_lo = mismatch(lo)?;
    let f_hi = mismatch(hi)?;
    if f_lo.is_finite() && f_hi.is_finite() && f_lo * f_hi < 0.0 {
        let mut f_lo = f_lo;
        while hi - lo > tol {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let f_mid = mismatch(mid)?;
            if f_lo * f_mid <= 0.0 {
                hi = mid;
            } else {
                lo = mid;
                f_lo = f_mid;
            }
        }
    } else {
        while hi - lo > tol {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if past(count(mid)?) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Relative change accepted by the built-in grid-refinement check.
const RICHARDSON_REL_TOL: f64 = 1e-6;

/// As `shoot_eigenvalue_on_grid` with the default tolerance
/// 1e-8 x window width, plus a Richardson check: the grid is refined until
/// halving h moves the eigenvalue by less than 1e-6 relative.
pub fn shoot_eigenvalue(
    eq: &EffectiveEquation,
    n_target: usize,
    window: (f64, f64),
    grid: &RadialGrid,
) -> Result<f64> {
    let tol = 1e-8 * (window.1 - window.0);
    let mut grid = *grid;
    let mut energy = shoot_eigenvalue_on_grid(eq, n_target, window, &grid, tol)?;
    for _ in 0..3 {
        let finer = grid.refined();
        let refined = shoot_eigenvalue_on_grid(eq, n_target, window, &finer, tol)?;
        let scale = refined.abs().max(1e-30);
        if (refined - energy).abs() < RICHARDSON_REL_TOL * scale {
            return Ok(refined);
        }
        grid = finer;
        energy = refined;
    }
    Err(Error::Numeric(format!(
        "eigenvalue did not settle under grid refinement (last {energy})"
    )))
}

/// Default grid for an equation and search window: r_min = min(1e-6/delta, 1e-5),
/// r_max from the slowest bound tail inside the window, N = 20000.
pub fn default_grid(eq: &EffectiveEquation, window: (f64, f64)) -> Result<RadialGrid> {
    let (lo, hi) = window;
    let mut k_min = f64::INFINITY;
    for frac in [0.05, 0.5, 0.95] {
        let e = lo + frac * (hi - lo);
        if let Ok(k) = eq.tail_rate(e) {
            k_min = k_min.min(k);
        }
    }
    if !k_min.is_finite() || !(k_min > 0.0) {
        return Err(Error::NotBound("no decaying tail anywhere in the window".into()));
    }
    // The inner truncation error scales as u(r_min)^2 ~ r_min^{2 eta}; keep
    // r_min small enough that it stays below the grid discretization error.
    let r_min = (1e-6 / eq.potential.delta).min(1e-5);
    let r_max = (40.0 / k_min).max(r_min * 1e4);
    RadialGrid::new(r_min, r_max, 20_000)
}

/// Normalized eigenfunction u(r) at a converged eigenvalue: outward and
/// inward sweeps matched at the turning point, trapezoid-normalized, with
/// the outward branch sign (positive near the origin).
pub fn numerov_eigenfunction(
    eq: &EffectiveEquation,
    energy: f64,
    grid: &RadialGrid,
) -> Result<Vec<(f64, f64)>> {
    let w = build_w(eq, energy, grid)?;
    let h = grid.spacing();
    let m = matching_index(&w);
    let (u_out, _) = sweep_outward(&w, h, grid, eq.centrifugal_index());
    let u_in = sweep_inward(&w, h, grid, eq.tail_rate(energy)?, m.saturating_sub(2));
    if u_in[m] == 0.0 {
        return Err(Error::Numeric("inward solution vanishes at the matching point".into()));
    }
    let scale = u_out[m] / u_in[m];
    let mut u: Vec<f64> = (0..grid.n)
        .map(|i| if i <= m { u_out[i] } else { u_in[i] * scale })
        .collect();
    let mut norm2 = 0.0;
    for i in 1..grid.n {
        norm2 += 0.5 * (u[i - 1] * u[i - 1] + u[i] * u[i]) * h;
    }
    if !(norm2 > 0.0) || !norm2.is_finite() {
        return Err(Error::Numeric(format!("unusable eigenfunction norm {norm2}")));
    }
    let sign = if u[grid.n / 8] < 0.0 { -1.0 } else { 1.0 };
    let inv = sign / norm2.sqrt();
    for v in u.iter_mut() {
        *v *= inv;
    }
    Ok((0..grid.n).map(|i| (grid.point(i), u[i])).collect())
}

/// One row of the closed-form vs shooting comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct CompareRow {
    pub n: u32,
    pub kappa: i32,
    pub e_nu: f64,
    pub e_oracle_approx: f64,
    pub e_oracle_exact: Option<f64>,
    pub deviation: f64,
}

/// Compare closed-form relativistic levels against the shooting solver on
/// both the approximated and the exact radial equation.
pub fn compare_nu_vs_oracle(
    p: &PotentialParams,
    setup: &RelativisticSetup,
    states: &[crate::model::QuantumNumbers],
) -> Result<Vec<CompareRow>> {
    let mut rows = Vec::with_capacity(states.len());
    for qn in states {
        let levels = crate::nu::solve_levels(p, setup, qn, None)?;
        let level = levels.first().ok_or_else(|| Error::NotBound(format!(
            "no closed-form level for (n, kappa) = ({}, {})",
            qn.n, qn.kappa
        )))?;
        let e_nu = level.energy;
        let eq_approx = EffectiveEquation {
            form: EquationForm::Approximated,
            kind: ProblemKind::Relativistic { setup: *setup, kappa: qn.kappa },
            potential: *p,
        };
        let window = comparison_window(e_nu, setup);
        let grid = default_grid(&eq_approx, window)?;
        let e_approx = shoot_eigenvalue(&eq_approx, qn.n as usize, window, &grid)?;
        let eq_exact = EffectiveEquation { form: EquationForm::Exact, ..eq_approx };
        let e_exact = shoot_eigenvalue(&eq_exact, qn.n as usize, window, &grid).ok();
        rows.push(CompareRow {
            n: qn.n,
            kappa: qn.kappa,
            e_nu,
            e_oracle_approx: e_approx,
            e_oracle_exact: e_exact,
            deviation: (e_nu - e_approx).abs(),
        });
    }
    Ok(rows)
}

/// Search window around a closed-form level, clipped to the physical window.
pub fn comparison_window(e_nu: f64, setup: &RelativisticSetup) -> (f64, f64) {
    let (lo, hi) = setup.energy_window();
    let pad = 1e-4 * (hi - lo);
    let half = 0.05 * (hi - lo);
    ((e_nu - half).max(lo + pad), (e_nu + half).min(hi - pad))
}
