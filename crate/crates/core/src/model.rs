//! Domain types, potential evaluation, the Greene-Aldrich approximation,
//! and the kappa <-> (l, j) / (l~, j) maps.
//!
//! Units are hbar = c = 1 throughout; relativistic quantities carry fm^-1.

use crate::error::{Error, Result};

/// Hellmann potential strengths plus the Coulomb-like tensor strength H.
///
/// V(r) = -a/r + b e^{-delta r}/r; the tensor term U(r) = H/r enters the
/// radial equations only through the shifted centrifugal index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialParams {
    pub a: f64,
    pub b: f64,
    pub delta: f64,
    pub h: f64,
}

impl PotentialParams {
    pub fn new(a: f64, b: f64, delta: f64, h: f64) -> Result<Self> {
        if !(delta > 0.0) {
            return Err(Error::Domain(format!("delta must be > 0, got {delta}")));
        }
        for (name, v) in [("a", a), ("b", b), ("H", h)] {
            if !v.is_finite() {
                return Err(Error::Domain(format!("{name} must be finite, got {v}")));
            }
        }
        Ok(Self { a, b, delta, h })
    }
}

/// Which exact symmetry of the Dirac Hamiltonian is imposed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymmetryLimit {
    /// V - S = C_s constant; the upper component F is solved.
    Spin,
    /// V + S = C_ps constant; the lower component G is solved.
    PSpin,
}

/// Mass and symmetry constant defining the relativistic problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelativisticSetup {
    /// Fermion mass M (fm^-1).
    pub mass: f64,
    /// C_s in the spin limit, C_ps in the p-spin limit (fm^-1).
    pub c_sym: f64,
    pub limit: SymmetryLimit,
}

impl RelativisticSetup {
    pub fn new(mass: f64, c_sym: f64, limit: SymmetryLimit) -> Result<Self> {
        if !(mass > 0.0) {
            return Err(Error::Domain(format!("mass must be > 0, got {mass}")));
        }
        let setup = Self { mass, c_sym, limit };
        let (lo, hi) = setup.energy_window();
        if !(lo < hi) {
            return Err(Error::Domain(format!(
                "empty bound-state window ({lo}, {hi}) for {limit:?}"
            )));
        }
        Ok(setup)
    }

    /// Open interval of energies where beta^2 > 0 (bound states).
    pub fn energy_window(&self) -> (f64, f64) {
        match self.limit {
            SymmetryLimit::Spin => (self.c_sym - self.mass, self.mass),
            SymmetryLimit::PSpin => (-self.mass, self.mass + self.c_sym),
        }
    }

    pub fn contains(&self, energy: f64) -> bool {
        let (lo, hi) = self.energy_window();
        lo < energy && energy < hi
    }
}

/// Radial node count n of the solved component and spin-orbit integer kappa.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    pub n: u32,
    pub kappa: i32,
}

impl QuantumNumbers {
    pub fn new(n: u32, kappa: i32) -> Result<Self> {
        if kappa == 0 {
            return Err(Error::Domain("kappa must be nonzero".into()));
        }
        Ok(Self { n, kappa })
    }
}

/// Spectroscopic identification of a kappa state.
///
/// `l` is the orbital quantum number in the spin limit and the
/// pseudo-orbital quantum number l~ in the p-spin limit. The display name
/// always uses the upper-component orbital letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectroscopicLabel {
    pub l: u32,
    /// Twice the total angular momentum, so j = two_j / 2.
    pub two_j: u32,
    /// e.g. "p3/2" (radial quantum number prepended by the caller).
    pub name: String,
}

impl SpectroscopicLabel {
    /// Full name such as "0p3/2".
    pub fn full_name(&self, n_display: u32) -> String {
        format!("{n_display}{}", self.name)
    }
}

const ORBITAL_LETTERS: &[u8] = b"spdfghiklmnoq";

fn orbital_letter(l: u32) -> char {
    ORBITAL_LETTERS
        .get(l as usize)
        .map(|&c| c as char)
        .unwrap_or('?')
}

/// Map kappa to (l or l~, j) and the upper-component display name.
pub fn kappa_label(kappa: i32, limit: SymmetryLimit) -> Result<SpectroscopicLabel> {
    if kappa == 0 {
        return Err(Error::Domain("kappa must be nonzero".into()));
    }
    // The display (l, j) pair is fixed by kappa alone:
    // kappa < 0 -> l = -kappa - 1, j = l + 1/2; kappa > 0 -> l = kappa, j = l - 1/2.
    let (display_l, two_j) = if kappa < 0 {
        let l = (-kappa - 1) as u32;
        (l, 2 * l + 1)
    } else {
        let l = kappa as u32;
        (l, 2 * l - 1)
    };
    let l = match limit {
        SymmetryLimit::Spin => display_l,
        SymmetryLimit::PSpin => {
            if kappa < 0 {
                (-kappa) as u32
            } else {
                (kappa - 1) as u32
            }
        }
    };
    Ok(SpectroscopicLabel {
        l,
        two_j,
        name: format!("{}{}/2", orbital_letter(display_l), two_j),
    })
}

/// V(r) = -a/r + b e^{-delta r}/r.
pub fn hellmann_potential(r: f64, p: &PotentialParams) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("r must be > 0, got {r}")));
    }
    Ok(-p.a / r + p.b * (-p.delta * r).exp() / r)
}

/// Greene-Aldrich approximated potential,
/// V(r) ~ -delta a/(1 - e^{-delta r}) + delta b e^{-delta r}/(1 - e^{-delta r}).
pub fn approx_potential(r: f64, p: &PotentialParams) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("r must be > 0, got {r}")));
    }
    let s = (-p.delta * r).exp();
    let denom = 1.0 - s;
    Ok(p.delta * (-p.a + p.b * s) / denom)
}

/// One row of the exact-vs-approximated potential comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialComparison {
    pub r: f64,
    pub v_exact: f64,
    pub v_approx: f64,
}

/// Pair exact and approximated values over a list of radii.
pub fn approximation_error_scan(
    p: &PotentialParams,
    r_values: &[f64],
) -> Result<Vec<PotentialComparison>> {
    r_values
        .iter()
        .map(|&r| {
            Ok(PotentialComparison {
                r,
                v_exact: hellmann_potential(r, p)?,
                v_approx: approx_potential(r, p)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn params(a: f64, b: f64, delta: f64) -> PotentialParams {
        PotentialParams::new(a, b, delta, 0.0).unwrap()
    }

    #[test]
    fn rejects_nonpositive_delta() {
        assert!(PotentialParams::new(1.0, 1.0, 0.0, 0.0).is_err());
        assert!(PotentialParams::new(1.0, 1.0, -0.5, 0.0).is_err());
        assert!(PotentialParams::new(1.0, f64::NAN, 0.1, 0.0).is_err());
    }

    #[test]
    fn hellmann_pure_coulomb() {
        let p = params(2.0, 0.0, 0.5);
        assert_relative_eq!(hellmann_potential(0.5, &p).unwrap(), -4.0);
        for &r in &[0.1, 1.0, 7.3] {
            assert_relative_eq!(hellmann_potential(r, &p).unwrap(), -2.0 / r);
        }
    }

    #[test]
    fn hellmann_at_unity() {
        // a=2, b=-4, delta=0.01, r=1 -> -2 - 4 e^{-0.01}
        let p = params(2.0, -4.0, 0.01);
        let expected = -2.0 - 4.0 * (-0.01f64).exp();
        assert_relative_eq!(hellmann_potential(1.0, &p).unwrap(), expected, epsilon = 1e-12);
        assert!((expected - (-5.96020)).abs() < 1e-4);
    }

    #[test]
    fn hellmann_vanishes_at_large_r() {
        let p = params(2.0, -4.0, 0.01);
        assert!(hellmann_potential(1e9, &p).unwrap().abs() < 1e-8);
    }

    #[test]
    fn hellmann_rejects_nonpositive_r() {
        let p = params(1.0, 1.0, 0.1);
        assert!(hellmann_potential(0.0, &p).is_err());
        assert!(hellmann_potential(-1.0, &p).is_err());
        assert!(approx_potential(0.0, &p).is_err());
    }

    #[test]
    fn approx_coulomb_value() {
        // a=2, b=0, delta=0.01, r=1 -> -0.02/(1 - e^{-0.01})
        let p = params(2.0, 0.0, 0.01);
        let expected = -0.02 / (1.0 - (-0.01f64).exp());
        assert_relative_eq!(approx_potential(1.0, &p).unwrap(), expected, epsilon = 1e-12);
        assert!((expected - (-2.01000)).abs() < 2e-4);
    }

    #[test]
    fn approx_zero_potential() {
        let p = params(0.0, 0.0, 0.3);
        assert_eq!(approx_potential(5.0, &p).unwrap(), 0.0);
    }

    #[test]
    fn approx_matches_exact_for_small_delta_r() {
        let p = params(2.0, -4.0, 0.01);
        // delta r = 1e-3: leading error delta r / 2 = 5e-4
        let r = 0.1;
        let exact = hellmann_potential(r, &p).unwrap();
        let approx = approx_potential(r, &p).unwrap();
        assert!(((approx - exact) / exact).abs() < 1e-3);
        // delta r = 1e-6
        let r = 1e-4;
        let exact = hellmann_potential(r, &p).unwrap();
        let approx = approx_potential(r, &p).unwrap();
        assert!(((approx - exact) / exact).abs() < 1e-5);
    }

    #[test]
    fn scan_pairs_both_forms() {
        let p = params(2.0, -4.0, 0.01);
        let rs: Vec<f64> = (1..=50).map(|i| i as f64).collect();
        let rows = approximation_error_scan(&p, &rs).unwrap();
        assert_eq!(rows.len(), 50);
        // The relative approximation error grows with delta r
        let rel = |row: &PotentialComparison| ((row.v_exact - row.v_approx) / row.v_exact).abs();
        assert!(rel(&rows[49]) > rel(&rows[0]));
        assert!(approximation_error_scan(&p, &[]).unwrap().is_empty());
    }

    #[test]
    fn window_invariants() {
        assert!(RelativisticSetup::new(5.0, 5.5, SymmetryLimit::Spin).is_ok());
        assert!(RelativisticSetup::new(5.0, 10.0, SymmetryLimit::Spin).is_err());
        assert!(RelativisticSetup::new(5.0, -5.5, SymmetryLimit::PSpin).is_ok());
        assert!(RelativisticSetup::new(5.0, -10.0, SymmetryLimit::PSpin).is_err());
        assert!(RelativisticSetup::new(0.0, 0.0, SymmetryLimit::Spin).is_err());
    }

    #[test]
    fn kappa_zero_rejected() {
        assert!(kappa_label(0, SymmetryLimit::Spin).is_err());
        assert!(QuantumNumbers::new(0, 0).is_err());
    }

    #[test]
    fn spin_labels_match_table_rows() {
        let l = kappa_label(-2, SymmetryLimit::Spin).unwrap();
        assert_eq!((l.l, l.two_j, l.name.as_str()), (1, 3, "p3/2"));
        assert_eq!(l.full_name(0), "0p3/2");
        let l = kappa_label(1, SymmetryLimit::Spin).unwrap();
        assert_eq!((l.l, l.two_j, l.name.as_str()), (1, 1, "p1/2"));
        let l = kappa_label(-1, SymmetryLimit::Spin).unwrap();
        assert_eq!((l.l, l.two_j, l.name.as_str()), (0, 1, "s1/2"));
    }

    #[test]
    fn pspin_labels_use_upper_component_letter() {
        let l = kappa_label(-1, SymmetryLimit::PSpin).unwrap();
        assert_eq!((l.l, l.two_j, l.name.as_str()), (1, 1, "s1/2"));
        let l = kappa_label(2, SymmetryLimit::PSpin).unwrap();
        assert_eq!((l.l, l.two_j, l.name.as_str()), (1, 3, "d3/2"));
        let l = kappa_label(3, SymmetryLimit::PSpin).unwrap();
        assert_eq!((l.l, l.two_j, l.name.as_str()), (2, 5, "f5/2"));
    }

    #[test]
    fn kappa_centrifugal_identities() {
        for kappa in [-6i32, -3, -1, 1, 2, 5] {
            let spin = kappa_label(kappa, SymmetryLimit::Spin).unwrap();
            let l = spin.l as i64;
            assert_eq!((kappa as i64) * (kappa as i64 + 1), l * (l + 1));
            let pspin = kappa_label(kappa, SymmetryLimit::PSpin).unwrap();
            let lt = pspin.l as i64;
            assert_eq!((kappa as i64) * (kappa as i64 - 1), lt * (lt + 1));
        }
    }
}
