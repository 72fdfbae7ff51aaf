use thiserror::Error;

/// Errors shared across the solver, wave-function, and oracle layers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An input fell outside its mathematical domain (r <= 0, kappa = 0, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A square-root argument in the NU constants went negative; the
    /// candidate energy lies outside the representable region.
    #[error("outside representable region: {constant} = {value} < 0")]
    OutsideRepresentable { constant: &'static str, value: f64 },

    /// The quadratic coefficient C is negative at this energy, so s^{sqrt(C)}
    /// has no real exponent. Treated as non-bracketing by the scanner.
    #[error("no real sqrt(C) at E = {energy} (C = {c})")]
    NegativeC { energy: f64, c: f64 },

    /// The energy residual is undefined everywhere in the search window.
    #[error("no representable region inside the energy window ({0}, {1})")]
    NoRepresentableRegion(f64, f64),

    /// The lower-component prefactor 1/(M + E - C_s) blew up.
    #[error("singular lower component: |M + E - C_sym| = {0} < 1e-12")]
    SingularLowerComponent(f64),

    /// The requested state has no normalizable solution.
    #[error("not bound: {0}")]
    NotBound(String),

    /// A quadrature or iteration failed to converge.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// The shooting solver found no eigenvalue with the requested node count.
    #[error("no eigenvalue with {nodes} nodes in ({lo}, {hi})")]
    EigenvalueNotFound { nodes: usize, lo: f64, hi: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
