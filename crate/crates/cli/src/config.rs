//! Flag definitions, the optional JSON config file, and the merge of the
//! two into a resolved run configuration. Flags always win over the file.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "hellmann-spectra",
    version,
    about = "Bound states of the Hellmann potential with a Coulomb-like tensor term: \
             closed-form spectra, benchmark tables, wave functions, and shooting-solver \
             cross-checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Closed-form spectrum over ranges of quantum numbers.
    Spectrum(SpectrumArgs),
    /// Reproduce a published benchmark table (2, 3 or 4) and self-check it.
    Tables(TablesArgs),
    /// Sample a normalized radial wave function on a grid.
    Wavefunction(WavefunctionArgs),
    /// Exact-vs-approximated potential scan and closed-form vs shooting energies.
    Compare(CompareArgs),
    /// Doublet splitting as a function of the tensor strength.
    Doublets(DoubletsArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitArg {
    Spin,
    Pspin,
    Nonrel,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct IoArgs {
    /// JSON file mirroring the flags; explicit flags override its values.
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Output file; omit or use '-' for stdout.
    #[arg(long, short, value_name = "PATH")]
    pub output: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Args, Debug, Clone)]
pub struct PhysicsArgs {
    /// Symmetry limit: spin, pspin or nonrel.
    #[arg(long, value_enum)]
    pub limit: Option<LimitArg>,
    /// Coulomb strength a.
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    /// Yukawa strength b.
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<f64>,
    /// Screening parameter delta (> 0).
    #[arg(long, allow_negative_numbers = true)]
    pub delta: Option<f64>,
    /// Tensor strength H of U = H/r.
    #[arg(long = "H", allow_negative_numbers = true)]
    pub tensor: Option<f64>,
    /// Mass M (relativistic) or m (non-relativistic).
    #[arg(long = "M", visible_alias = "mass", allow_negative_numbers = true)]
    pub mass: Option<f64>,
    /// Symmetry constant: C_s for spin, C_ps for pspin.
    #[arg(long = "Cs", visible_alias = "c-sym", allow_negative_numbers = true)]
    pub c_sym: Option<f64>,
}

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub io: IoArgs,
    #[command(flatten)]
    pub phys: PhysicsArgs,
    /// Radial quantum numbers, e.g. `0,1` or `0..2`.
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<String>,
    /// Kappa values (relativistic), e.g. `-5..-1,1..4`.
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: Option<String>,
    /// Orbital quantum numbers (non-relativistic), e.g. `0..3`.
    #[arg(long, allow_hyphen_values = true)]
    pub l: Option<String>,
}

#[derive(Args, Debug)]
pub struct TablesArgs {
    #[command(flatten)]
    pub io: IoArgs,
    /// Benchmark table id: 2 (spin), 3 (pspin) or 4 (non-relativistic).
    #[arg(long)]
    pub table: Option<u32>,
}

#[derive(Args, Debug)]
pub struct WavefunctionArgs {
    #[command(flatten)]
    pub io: IoArgs,
    #[command(flatten)]
    pub phys: PhysicsArgs,
    /// Radial quantum number n.
    #[arg(long)]
    pub n: Option<u32>,
    /// Kappa (relativistic limits).
    #[arg(long, allow_negative_numbers = true)]
    pub kappa: Option<i32>,
    /// Orbital quantum number l (non-relativistic).
    #[arg(long)]
    pub l: Option<u32>,
    /// Pick the closed-form root nearest to this energy (default: lowest root).
    #[arg(long, allow_negative_numbers = true)]
    pub energy_near: Option<f64>,
    /// Number of sample points.
    #[arg(long)]
    pub points: Option<usize>,
    /// Largest sampled radius (default: where the tail drops below 1e-12).
    #[arg(long)]
    pub r_max: Option<f64>,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    #[command(flatten)]
    pub io: IoArgs,
    #[command(flatten)]
    pub phys: PhysicsArgs,
    /// Radial quantum numbers for the energy section.
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<String>,
    /// Kappa list (relativistic).
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: Option<String>,
    /// Orbital quantum numbers (non-relativistic).
    #[arg(long, allow_hyphen_values = true)]
    pub l: Option<String>,
    /// Number of radii in the potential-comparison section.
    #[arg(long)]
    pub r_points: Option<usize>,
    /// Largest radius in the potential-comparison section (default 1/delta).
    #[arg(long)]
    pub r_max: Option<f64>,
}

#[derive(Args, Debug)]
pub struct DoubletsArgs {
    #[command(flatten)]
    pub io: IoArgs,
    #[command(flatten)]
    pub phys: PhysicsArgs,
    /// Radial quantum numbers of the doublet pairs.
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<String>,
    /// Negative kappa members; partners are derived per limit.
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: Option<String>,
    /// Tensor strengths to sweep, e.g. `0,0.25,0.5,0.75,1`.
    #[arg(long, allow_hyphen_values = true)]
    pub h_values: Option<String>,
}

/// Flat JSON mirror of the flags.
#[derive(Deserialize, Debug, Default, Clone)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub limit: Option<String>,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub delta: Option<f64>,
    #[serde(alias = "H")]
    pub tensor: Option<f64>,
    #[serde(alias = "M")]
    pub mass: Option<f64>,
    #[serde(alias = "Cs")]
    pub c_sym: Option<f64>,
    pub n: Option<String>,
    pub kappa: Option<String>,
    pub l: Option<String>,
    pub table: Option<u32>,
    pub energy_near: Option<f64>,
    pub points: Option<usize>,
    pub r_points: Option<usize>,
    pub r_max: Option<f64>,
    pub h_values: Option<String>,
    pub format: Option<String>,
    pub output: Option<String>,
}

pub fn load_file_config(io: &IoArgs) -> Result<FileConfig, CliError> {
    let Some(path) = &io.config else {
        return Ok(FileConfig::default());
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("invalid config {}: {e}", path.display())))
}

/// Flag value if present, else the config-file value.
pub fn merge<T: Clone>(flag: &Option<T>, file: &Option<T>) -> Option<T> {
    flag.clone().or_else(|| file.clone())
}

pub fn require<T: Clone>(value: Option<T>, name: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("missing required value: {name}")))
}

pub fn parse_limit(flag: Option<LimitArg>, file: &Option<String>) -> Result<LimitArg, CliError> {
    if let Some(l) = flag {
        return Ok(l);
    }
    match file.as_deref() {
        Some("spin") => Ok(LimitArg::Spin),
        Some("pspin") => Ok(LimitArg::Pspin),
        Some("nonrel") => Ok(LimitArg::Nonrel),
        Some(other) => Err(CliError::Usage(format!("unknown limit in config: {other}"))),
        None => Err(CliError::Usage("missing required value: limit".into())),
    }
}

pub fn parse_format(flag: Option<Format>, file: &Option<String>) -> Result<Format, CliError> {
    if let Some(f) = flag {
        return Ok(f);
    }
    match file.as_deref() {
        Some("csv") | None => Ok(Format::Csv),
        Some("json") => Ok(Format::Json),
        Some(other) => Err(CliError::Usage(format!("unknown format in config: {other}"))),
    }
}

pub fn resolve_output(io: &IoArgs, file: &FileConfig) -> Option<PathBuf> {
    io.output
        .clone()
        .or_else(|| file.output.as_ref().map(PathBuf::from))
        .filter(|p| p.as_os_str() != "-")
}

fn parse_scalar<T: std::str::FromStr>(tok: &str, what: &str) -> Result<T, CliError> {
    tok.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("cannot parse {what} value `{tok}`")))
}

/// Comma-separated list of integers or inclusive `lo..hi` ranges; hyphens
/// allowed for negative bounds, e.g. `-5..-1,1..4`.
pub fn parse_range_list(spec: &str, what: &str) -> Result<Vec<i64>, CliError> {
    let mut out = Vec::new();
    for tok in spec.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        // Find the `..` separator, skipping a leading sign.
        if let Some(pos) = tok[1..].find("..").map(|p| p + 1).or_else(|| {
            if tok.starts_with("..") {
                None
            } else {
                tok.find("..")
            }
        }) {
            let lo: i64 = parse_scalar(&tok[..pos], what)?;
            let hi: i64 = parse_scalar(&tok[pos + 2..], what)?;
            if lo > hi {
                return Err(CliError::Usage(format!("empty range `{tok}` in {what}")));
            }
            out.extend(lo..=hi);
        } else {
            out.push(parse_scalar(tok, what)?);
        }
    }
    Ok(out)
}

pub fn parse_u32_list(spec: &str, what: &str) -> Result<Vec<u32>, CliError> {
    parse_range_list(spec, what)?
        .into_iter()
        .map(|v| {
            u32::try_from(v)
                .map_err(|_| CliError::Usage(format!("{what} must be non-negative, got {v}")))
        })
        .collect()
}

pub fn parse_f64_list(spec: &str, what: &str) -> Result<Vec<f64>, CliError> {
    spec.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| parse_scalar(t, what))
        .collect()
}
