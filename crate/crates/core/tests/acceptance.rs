//! Acceptance gate: eight criteria, one pass/fail line each.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines;
//! any failed criterion also fails the test run.

use hellmann_core::model::{PotentialParams, QuantumNumbers, RelativisticSetup, SymmetryLimit};
use hellmann_core::nu::{coulomb_energy, energy_residual, nonrel_energy, solve_levels};
use hellmann_core::oracle::{
    comparison_window, default_grid, numerov_eigenfunction, shoot_eigenvalue,
    shoot_eigenvalue_on_grid, EffectiveEquation, EquationForm, ProblemKind, RadialGrid,
};
use hellmann_core::reference::{
    pspin_benchmark_setup, spin_benchmark_setup, CellStatus, NonrelCell, RelativisticCell,
    NONREL_A, NONREL_CELLS, NONREL_MASS, PSPIN_CELLS, SPIN_CELLS,
};
use hellmann_core::wavefunctions::{
    count_nodes, lower_component, nonrel_radial, solved_component,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn report(id: u32, what: &str, result: Result<(), String>) {
    match result {
        Ok(()) => println!("criterion {id} ({what}): PASS"),
        Err(msg) => {
            println!("criterion {id} ({what}): FAIL — {msg}");
            panic!("criterion {id} failed: {msg}");
        }
    }
}

/// Closed-form root nearest to a reference energy.
fn nearest_root(
    p: &PotentialParams,
    setup: &RelativisticSetup,
    qn: &QuantumNumbers,
    near: f64,
) -> Result<f64, String> {
    let levels = solve_levels(p, setup, qn, None)
        .map_err(|e| format!("(n, kappa) = ({}, {}): {e}", qn.n, qn.kappa))?;
    levels
        .iter()
        .map(|l| l.energy)
        .min_by(|x, y| (x - near).abs().total_cmp(&(y - near).abs()))
        .ok_or_else(|| format!("no root for (n, kappa) = ({}, {})", qn.n, qn.kappa))
}

fn check_relativistic_table(
    cells: &[RelativisticCell],
    p0: &PotentialParams,
    setup: &RelativisticSetup,
    tol: f64,
) -> Result<(), String> {
    for cell in cells {
        let qn = QuantumNumbers::new(cell.n, cell.kappa).unwrap();
        for (h, reference) in [(1.0, cell.e_tensor), (0.0, cell.e_plain)] {
            let p = PotentialParams::new(p0.a, p0.b, p0.delta, h).unwrap();
            let e = nearest_root(&p, setup, &qn, reference)?;
            if (e - reference).abs() > tol {
                return Err(format!(
                    "(n, kappa, H) = ({}, {}, {h}): {e:.9} vs reference {reference:.9}",
                    cell.n, cell.kappa
                ));
            }
        }
    }
    Ok(())
}

#[test]
fn criterion_1_spin_spectrum() {
    let (p, setup) = spin_benchmark_setup();
    report(
        1,
        "spin-limit benchmark spectrum, 16 cells x {H=1, H=0}, |dE| <= 1e-6",
        check_relativistic_table(SPIN_CELLS, &p, &setup, 1e-6),
    );
}

#[test]
fn criterion_2_pspin_spectrum() {
    let (p, setup) = pspin_benchmark_setup();
    report(
        2,
        "p-spin-limit benchmark spectrum, 16 cells x {H=1, H=0}, |dE| <= 1e-6",
        check_relativistic_table(PSPIN_CELLS, &p, &setup, 1e-6),
    );
}

/// Search window for a non-relativistic shooting run around a closed-form
/// level (all benchmark levels are negative).
fn nonrel_window(e: f64) -> (f64, f64) {
    (1.5 * e, 0.5 * e)
}

fn nonrel_equation(cell: &NonrelCell, form: EquationForm) -> EffectiveEquation {
    EffectiveEquation {
        form,
        kind: ProblemKind::Nonrel { mass: NONREL_MASS, l: cell.l },
        potential: PotentialParams::new(NONREL_A, cell.b, cell.delta, 0.0).unwrap(),
    }
}

fn shoot_nonrel(cell: &NonrelCell, e_closed: f64, grid_n: usize) -> Result<f64, String> {
    let eq = nonrel_equation(cell, EquationForm::Approximated);
    let window = nonrel_window(e_closed);
    let base = default_grid(&eq, window).map_err(|e| format!("{}: {e}", cell.state))?;
    let ctx = format!("{} b={} delta={}", cell.state, cell.b, cell.delta);
    if grid_n == 0 {
        // Production comparison: refine the grid until the eigenvalue settles.
        shoot_eigenvalue(&eq, cell.n as usize, window, &base).map_err(|e| format!("{ctx}: {e}"))
    } else {
        // Fixed coarse grid with a bisection tolerance tight enough that the
        // grid discretization error dominates.
        let grid = RadialGrid::new(base.r_min, base.r_max, grid_n).unwrap();
        let tol = 1e-12 * (window.1 - window.0);
        shoot_eigenvalue_on_grid(&eq, cell.n as usize, window, &grid, tol)
            .map_err(|e| format!("{ctx}: {e}"))
    }
}

#[test]
fn criterion_3_nonrel_table() {
    let run = || -> Result<(), String> {
        for cell in NONREL_CELLS {
            let e = nonrel_energy(cell.n, cell.l, NONREL_A, cell.b, cell.delta, NONREL_MASS)
                .map_err(|err| format!("{}: {err}", cell.state))?
                .energy;
            match cell.status {
                CellStatus::Match => {
                    if (e - cell.published).abs() > 1e-5 {
                        return Err(format!(
                            "{} b={} delta={}: {e:.6} vs published {:.6}",
                            cell.state, cell.b, cell.delta, cell.published
                        ));
                    }
                }
                CellStatus::DiscrepantL | CellStatus::Misprint => {
                    // The published value is inconsistent with the closed
                    // form; require the flag to be justified and the closed
                    // form to agree with the shooting solver instead.
                    if (e - cell.published).abs() <= 1e-5 {
                        return Err(format!(
                            "{} b={} delta={}: flagged discrepant but closed form {e:.6} \
                             matches published {:.6}",
                            cell.state, cell.b, cell.delta, cell.published
                        ));
                    }
                    let e_oracle = shoot_nonrel(cell, e, 0)?;
                    if (e - e_oracle).abs() > 1e-4 {
                        return Err(format!(
                            "{} b={} delta={}: closed form {e:.6} vs oracle {e_oracle:.6}",
                            cell.state, cell.b, cell.delta
                        ));
                    }
                }
            }
        }
        Ok(())
    };
    report(
        3,
        "non-relativistic benchmark: s-states <= 1e-5, flagged cells oracle-checked <= 1e-4",
        run(),
    );
}

fn shoot_relativistic(
    p: &PotentialParams,
    setup: &RelativisticSetup,
    qn: &QuantumNumbers,
    e_nu: f64,
    grid_n: usize,
) -> Result<f64, String> {
    let eq = EffectiveEquation {
        form: EquationForm::Approximated,
        kind: ProblemKind::Relativistic { setup: *setup, kappa: qn.kappa },
        potential: *p,
    };
    let window = comparison_window(e_nu, setup);
    let ctx = format!("(n, kappa, H) = ({}, {}, {})", qn.n, qn.kappa, p.h);
    let base = default_grid(&eq, window).map_err(|e| format!("{ctx}: {e}"))?;
    if grid_n == 0 {
        shoot_eigenvalue(&eq, qn.n as usize, window, &base).map_err(|e| format!("{ctx}: {e}"))
    } else {
        let grid = RadialGrid::new(base.r_min, base.r_max, grid_n).unwrap();
        let tol = 1e-12 * (window.1 - window.0);
        shoot_eigenvalue_on_grid(&eq, qn.n as usize, window, &grid, tol)
            .map_err(|e| format!("{ctx}: {e}"))
    }
}

#[test]
fn criterion_4_oracle_equivalence() {
    let run = || -> Result<(), String> {
        // Relativistic states from criteria 1 and 2.
        for (cells, mk) in [
            (SPIN_CELLS, spin_benchmark_setup as fn() -> _),
            (PSPIN_CELLS, pspin_benchmark_setup as fn() -> _),
        ] {
            let (p0, setup): (PotentialParams, RelativisticSetup) = mk();
            for cell in cells {
                let qn = QuantumNumbers::new(cell.n, cell.kappa).unwrap();
                for (h, reference) in [(1.0, cell.e_tensor), (0.0, cell.e_plain)] {
                    let p = PotentialParams::new(p0.a, p0.b, p0.delta, h).unwrap();
                    let e_nu = nearest_root(&p, &setup, &qn, reference)?;
                    let e_oracle = shoot_relativistic(&p, &setup, &qn, e_nu, 0)?;
                    if (e_nu - e_oracle).abs() > 1e-4 {
                        return Err(format!(
                            "(n, kappa, H) = ({}, {}, {h}): closed form {e_nu:.9} vs \
                             oracle {e_oracle:.9}",
                            cell.n, cell.kappa
                        ));
                    }
                    let dev_coarse =
                        (e_nu - shoot_relativistic(&p, &setup, &qn, e_nu, 1000)?).abs();
                    let dev_fine =
                        (e_nu - shoot_relativistic(&p, &setup, &qn, e_nu, 1999)?).abs();
                    if !(dev_fine < dev_coarse) {
                        return Err(format!(
                            "(n, kappa, H) = ({}, {}, {h}): deviation did not decrease \
                             under grid doubling ({dev_coarse:.3e} -> {dev_fine:.3e})",
                            cell.n, cell.kappa
                        ));
                    }
                }
            }
        }
        // Non-relativistic states from criterion 3.
        for cell in NONREL_CELLS {
            let e_nu = nonrel_energy(cell.n, cell.l, NONREL_A, cell.b, cell.delta, NONREL_MASS)
                .map_err(|err| format!("{}: {err}", cell.state))?
                .energy;
            let e_oracle = shoot_nonrel(cell, e_nu, 0)?;
            if (e_nu - e_oracle).abs() > 1e-4 {
                return Err(format!(
                    "{} b={} delta={}: closed form {e_nu:.6} vs oracle {e_oracle:.6}",
                    cell.state, cell.b, cell.delta
                ));
            }
            let dev_coarse = (e_nu - shoot_nonrel(cell, e_nu, 1000)?).abs();
            let dev_fine = (e_nu - shoot_nonrel(cell, e_nu, 1999)?).abs();
            if !(dev_fine < dev_coarse) {
                return Err(format!(
                    "{} b={} delta={}: deviation did not decrease under grid doubling \
                     ({dev_coarse:.3e} -> {dev_fine:.3e})",
                    cell.state, cell.b, cell.delta
                ));
            }
        }
        Ok(())
    };
    report(
        4,
        "closed form vs shooting oracle <= 1e-4 for all 184 states, monotone under refinement",
        run(),
    );
}

#[test]
fn criterion_5_coulomb_limit() {
    let run = || -> Result<(), String> {
        for n in 0..3u32 {
            let e = nonrel_energy(n, 0, 2.0, 0.0, 1e-6, 0.5)
                .map_err(|err| format!("n' = {}: {err}", n + 1))?
                .energy;
            let e_coulomb = coulomb_energy(n, 0, 2.0, 0.5);
            if ((e - e_coulomb) / e_coulomb).abs() > 1e-4 {
                return Err(format!(
                    "n' = {}: {e:.9} vs Coulomb {e_coulomb:.9}",
                    n + 1
                ));
            }
        }
        Ok(())
    };
    report(5, "Coulomb limit b=0, delta->0 reproduces -ma^2/(2 n'^2) to rel 1e-4", run());
}

/// Tensor-doublet pairs: (kappa_a, kappa_b, n) tracked over tensor strength.
const SPIN_SPLIT_PAIRS: &[(i32, i32, u32)] = &[(-2, 1, 1), (-4, 3, 1)];
const PSPIN_SPLIT_PAIRS: &[(i32, i32, u32)] = &[(-3, 4, 1), (-4, 5, 2)];

#[test]
fn criterion_6_degeneracy_and_splitting() {
    let run = || -> Result<(), String> {
        // Exact doublet degeneracy at H = 0.
        let (p_spin, spin) = spin_benchmark_setup();
        let (p_pspin, pspin) = pspin_benchmark_setup();
        for n in 0..2u32 {
            for kappa in [-5, -4, -3, -2] {
                let qn = QuantumNumbers::new(n, kappa).unwrap();
                let partner = QuantumNumbers::new(n, -kappa - 1).unwrap();
                let e1 = solve_levels(&p_spin, &spin, &qn, None).map_err(|e| e.to_string())?;
                let e2 =
                    solve_levels(&p_spin, &spin, &partner, None).map_err(|e| e.to_string())?;
                if e1.len() != e2.len() {
                    return Err(format!("spin doublet kappa = {kappa}: root counts differ"));
                }
                for (a, b) in e1.iter().zip(&e2) {
                    if (a.energy - b.energy).abs() >= 1e-10 {
                        return Err(format!(
                            "spin doublet (n, kappa) = ({n}, {kappa}) split at H = 0: \
                             {} vs {}",
                            a.energy, b.energy
                        ));
                    }
                }
            }
        }
        for n in 1..3u32 {
            for kappa in [-4, -3, -2, -1] {
                let qn = QuantumNumbers::new(n, kappa).unwrap();
                let partner = QuantumNumbers::new(n, 1 - kappa).unwrap();
                let e1 = solve_levels(&p_pspin, &pspin, &qn, None).map_err(|e| e.to_string())?;
                let e2 =
                    solve_levels(&p_pspin, &pspin, &partner, None).map_err(|e| e.to_string())?;
                if e1.len() != e2.len() {
                    return Err(format!("p-spin doublet kappa = {kappa}: root counts differ"));
                }
                for (a, b) in e1.iter().zip(&e2) {
                    if (a.energy - b.energy).abs() >= 1e-10 {
                        return Err(format!(
                            "p-spin doublet (n, kappa) = ({n}, {kappa}) split at H = 0: \
                             {} vs {}",
                            a.energy, b.energy
                        ));
                    }
                }
            }
        }
        // Splitting grows strictly with the tensor strength.
        let cases: [(&PotentialParams, &RelativisticSetup, &[(i32, i32, u32)], &str); 2] = [
            (&p_spin, &spin, SPIN_SPLIT_PAIRS, "spin"),
            (&p_pspin, &pspin, PSPIN_SPLIT_PAIRS, "p-spin"),
        ];
        for (p0, setup, pairs, tag) in cases {
            for &(ka, kb, n) in pairs {
                let qa = QuantumNumbers::new(n, ka).unwrap();
                let qb = QuantumNumbers::new(n, kb).unwrap();
                let mut prev_split = 0.0f64;
                let mut near_a = f64::NAN;
                let mut near_b = f64::NAN;
                for (i, h) in [0.0, 0.25, 0.5, 0.75, 1.0].into_iter().enumerate() {
                    let p = PotentialParams::new(p0.a, p0.b, p0.delta, h).unwrap();
                    // Track each level continuously from its H = 0 value.
                    let ea = if i == 0 {
                        let levels =
                            solve_levels(&p, setup, &qa, None).map_err(|e| e.to_string())?;
                        levels
                            .first()
                            .ok_or_else(|| format!("{tag} kappa = {ka}: no root"))?
                            .energy
                    } else {
                        nearest_root(&p, setup, &qa, near_a)?
                    };
                    let eb = if i == 0 {
                        ea // degenerate partner
                    } else {
                        nearest_root(&p, setup, &qb, near_b)?
                    };
                    near_a = ea;
                    near_b = eb;
                    let split = (ea - eb).abs();
                    if i == 0 {
                        prev_split = 0.0;
                        continue;
                    }
                    if !(split > prev_split && split > 0.0) {
                        return Err(format!(
                            "{tag} pair (kappa {ka}/{kb}, n = {n}): splitting not \
                             strictly increasing at H = {h} ({prev_split:.6} -> {split:.6})"
                        ));
                    }
                    prev_split = split;
                }
            }
        }
        Ok(())
    };
    report(
        6,
        "exact doublet degeneracy at H=0; splitting strictly increasing in H",
        run(),
    );
}

fn simpson_fixed(f: &dyn Fn(f64) -> f64, lo: f64, hi: f64, panels: usize) -> f64 {
    let h = (hi - lo) / panels as f64;
    let mut sum = f(lo) + f(hi);
    for i in 1..panels {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(lo + h * i as f64);
    }
    sum * h / 3.0
}

#[test]
fn criterion_7_wavefunctions() {
    let run = || -> Result<(), String> {
        let (p, setup) = spin_benchmark_setup();

        // Node-count law and independently checked normalization,
        // relativistic upper components.
        for (n, kappa, reference) in [(0u32, -2, 2.266823746), (1, -2, 3.167838743)] {
            let qn = QuantumNumbers::new(n, kappa).unwrap();
            let e = nearest_root(&p, &setup, &qn, reference)?;
            let f = solved_component(e, &p, &setup, &qn).map_err(|err| err.to_string())?;
            let nodes = count_nodes(&f, 100_000);
            if nodes != n as usize {
                return Err(format!(
                    "upper component (n, kappa) = ({n}, {kappa}): {nodes} nodes"
                ));
            }
            let r_max = f.tail_radius();
            let norm = simpson_fixed(&|r| f.eval(r).powi(2), r_max * 1e-9, r_max, 1 << 16);
            if (norm - 1.0).abs() > 1e-8 {
                return Err(format!(
                    "upper component (n, kappa) = ({n}, {kappa}): norm {norm:.12}"
                ));
            }
            // Analytic vs central-difference derivative.
            let r_char = 1.0 / (f.delta * (f.sqrt_c + f.eta_eff));
            let h = 1e-4 * r_char;
            for frac in [0.3, 1.0, 2.5, 5.0] {
                let r = frac * r_char;
                let analytic = f.eval_derivative(r).map_err(|err| err.to_string())?;
                let fd = (f.eval(r + h) - f.eval(r - h)) / (2.0 * h);
                let scale = analytic.abs().max(f.eval(r).abs() / r_char).max(1e-12);
                if ((analytic - fd) / scale).abs() > 1e-5 {
                    return Err(format!(
                        "derivative mismatch at r = {r:.3}: analytic {analytic:.9e} \
                         vs finite-difference {fd:.9e}"
                    ));
                }
            }
        }

        // Non-relativistic states: nodes, normalization, same-l orthogonality.
        let (b, delta) = (-1.0, 0.01);
        let mut s_states = Vec::new();
        for n in 0..4u32 {
            let e = nonrel_energy(n, 0, NONREL_A, b, delta, NONREL_MASS)
                .map_err(|err| err.to_string())?
                .energy;
            let f = nonrel_radial(n, 0, NONREL_A, b, delta, NONREL_MASS, e)
                .map_err(|err| err.to_string())?;
            let nodes = count_nodes(&f, 100_000);
            if nodes != n as usize {
                return Err(format!("nonrel n = {n}, l = 0: {nodes} nodes"));
            }
            let r_max = f.tail_radius();
            let norm = simpson_fixed(&|r| f.eval(r).powi(2), r_max * 1e-9, r_max, 1 << 16);
            if (norm - 1.0).abs() > 1e-8 {
                return Err(format!("nonrel n = {n}, l = 0: norm {norm:.12}"));
            }
            s_states.push(f);
        }
        for i in 0..s_states.len() {
            for j in (i + 1)..s_states.len() {
                let (fi, fj) = (&s_states[i], &s_states[j]);
                let r_max = fi.tail_radius().max(fj.tail_radius());
                let overlap =
                    simpson_fixed(&|r| fi.eval(r) * fj.eval(r), r_max * 1e-9, r_max, 1 << 16);
                if overlap.abs() > 1e-6 {
                    return Err(format!(
                        "nonrel l = 0 states {i} and {j}: overlap {overlap:.3e}"
                    ));
                }
            }
        }

        // Pointwise agreement with the oracle eigenfunction: relativistic
        // ground state of the benchmark setup.
        {
            let qn = QuantumNumbers::new(0, -2).unwrap();
            let e_nu = nearest_root(&p, &setup, &qn, 2.266823746)?;
            let f = solved_component(e_nu, &p, &setup, &qn).map_err(|err| err.to_string())?;
            let eq = EffectiveEquation {
                form: EquationForm::Approximated,
                kind: ProblemKind::Relativistic { setup, kappa: qn.kappa },
                potential: p,
            };
            let window = comparison_window(e_nu, &setup);
            let grid = default_grid(&eq, window).map_err(|err| err.to_string())?;
            let e = shoot_eigenvalue_on_grid(&eq, 0, window, &grid, 1e-8 * (window.1 - window.0))
                .map_err(|err| err.to_string())?;
            let u = numerov_eigenfunction(&eq, e, &grid).map_err(|err| err.to_string())?;
            let peak = u.iter().fold(0.0f64, |m, &(_, v)| m.max(v.abs()));
            for &(r, v) in u.iter().step_by(7) {
                if (f.eval(r) - v).abs() > 1e-3 * peak {
                    return Err(format!(
                        "relativistic ground state: |F - u| = {:.3e} at r = {r:.4} \
                         (peak {peak:.3e})",
                        (f.eval(r) - v).abs()
                    ));
                }
            }
        }
        // ... and the non-relativistic ground state.
        {
            let e_nu = nonrel_energy(0, 0, NONREL_A, b, delta, NONREL_MASS)
                .map_err(|err| err.to_string())?
                .energy;
            let f = nonrel_radial(0, 0, NONREL_A, b, delta, NONREL_MASS, e_nu)
                .map_err(|err| err.to_string())?;
            let eq = EffectiveEquation {
                form: EquationForm::Approximated,
                kind: ProblemKind::Nonrel { mass: NONREL_MASS, l: 0 },
                potential: PotentialParams::new(NONREL_A, b, delta, 0.0).unwrap(),
            };
            let window = nonrel_window(e_nu);
            let grid = default_grid(&eq, window).map_err(|err| err.to_string())?;
            let e = shoot_eigenvalue_on_grid(&eq, 0, window, &grid, 1e-8 * (window.1 - window.0))
                .map_err(|err| err.to_string())?;
            let u = numerov_eigenfunction(&eq, e, &grid).map_err(|err| err.to_string())?;
            let peak = u.iter().fold(0.0f64, |m, &(_, v)| m.max(v.abs()));
            for &(r, v) in u.iter().step_by(7) {
                if (f.eval(r) - v).abs() > 1e-3 * peak {
                    return Err(format!(
                        "nonrel ground state: |R - u| = {:.3e} at r = {r:.4} (peak {peak:.3e})",
                        (f.eval(r) - v).abs()
                    ));
                }
            }
        }

        // The derived lower component exists and is finite on the benchmark
        // ground state.
        {
            let qn = QuantumNumbers::new(0, -2).unwrap();
            let e = nearest_root(&p, &setup, &qn, 2.266823746)?;
            let f = solved_component(e, &p, &setup, &qn).map_err(|err| err.to_string())?;
            let g = lower_component(&f, e, &p, &setup, qn.kappa).map_err(|err| err.to_string())?;
            let probe = g.eval(1.0);
            if !probe.is_finite() {
                return Err(format!("lower component not finite at r = 1 ({probe})"));
            }
        }
        Ok(())
    };
    report(
        7,
        "wave functions: nodes, norm 1e-8, orthogonality 1e-6, derivatives 1e-5, oracle shape 1e-3",
        run(),
    );
}

#[test]
fn criterion_8_dual_route_consistency() {
    // `energy_residual` evaluates both the compact corrected condition and
    // the generic constant pipeline on every call and asserts agreement to
    // 1e-9 relative; here both limits are probed at random parameters.
    let run = || -> Result<(), String> {
        let mut rng = StdRng::seed_from_u64(0x48454C4C);
        for limit in [SymmetryLimit::Spin, SymmetryLimit::PSpin] {
            let mut accepted = 0;
            let mut attempts = 0;
            while accepted < 100 {
                attempts += 1;
                if attempts > 100_000 {
                    return Err(format!("{limit:?}: could not draw 100 valid probes"));
                }
                let mass = rng.gen_range(1.0..10.0);
                let c_sym = match limit {
                    SymmetryLimit::Spin => rng.gen_range(0.0..1.5) * mass,
                    SymmetryLimit::PSpin => -rng.gen_range(0.0..1.5) * mass,
                };
                let setup = match RelativisticSetup::new(mass, c_sym, limit) {
                    Ok(s) => s,
                    Err(_) => continue,
                };
                let p = match PotentialParams::new(
                    rng.gen_range(-2.0..2.0),
                    rng.gen_range(-5.0..5.0),
                    rng.gen_range(0.005..0.05),
                    rng.gen_range(-1.0..1.0),
                ) {
                    Ok(p) => p,
                    Err(_) => continue,
                };
                let kappa = *[-4, -3, -2, -1, 1, 2, 3, 4]
                    .iter()
                    .nth(rng.gen_range(0..8))
                    .unwrap();
                let qn = match QuantumNumbers::new(rng.gen_range(0..4), kappa) {
                    Ok(q) => q,
                    Err(_) => continue,
                };
                let (lo, hi) = setup.energy_window();
                let e = lo + rng.gen_range(0.01..0.99) * (hi - lo);
                // The call panics if the two routes disagree beyond 1e-9.
                if energy_residual(e, &p, &setup, &qn).is_ok() {
                    accepted += 1;
                }
            }
        }
        Ok(())
    };
    report(
        8,
        "compact condition vs generic constant pipeline agree to 1e-9 at 100 probes per limit",
        run(),
    );
}
