//! Bound states of the Hellmann potential with a Coulomb-like tensor
//! coupling, in the spin- and pseudospin-symmetric Dirac limits and the
//! non-relativistic limit.
//!
//! The closed-form spectra come from the parametric Nikiforov-Uvarov
//! quantization condition applied to the Greene-Aldrich-approximated radial
//! equation; wave functions are Jacobi-polynomial envelopes; an independent
//! Numerov shooting solver cross-checks both.

pub mod error;
pub mod model;
pub mod nu;
pub mod oracle;
pub mod reference;
pub mod wavefunctions;

pub use error::{Error, Result};
pub use model::{
    approx_potential, approximation_error_scan, hellmann_potential, kappa_label,
    PotentialParams, QuantumNumbers, RelativisticSetup, SpectroscopicLabel, SymmetryLimit,
};
pub use nu::{
    coulomb_energy, derive_constants, effective_problem, energy_residual, nonrel_energy,
    nu_energy_residual, solve_levels, EffectiveProblem, EnergyLevel, NonrelEnergy,
    NuCoefficients, NuConstants,
};
pub use oracle::{
    compare_nu_vs_oracle, default_grid, effective_w, numerov_count_nodes,
    numerov_eigenfunction, shoot_eigenvalue, shoot_eigenvalue_on_grid, CompareRow,
    EffectiveEquation, EquationForm, ProblemKind, RadialGrid,
};
pub use wavefunctions::{
    count_nodes, jacobi, jacobi_derivative, lower_component, nonrel_radial, normalize,
    normalize_spinor, solved_component, upper_component, RadialFunction, RadialKind,
};
