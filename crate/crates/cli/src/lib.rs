//! The `groth` command line: argument types, dispatch and exit codes.
//!
//! Exit codes are 0 on success, 1 when a verification check fails, 2 for
//! malformed input and 3 when a library precondition is violated.

pub mod render;

use std::fmt;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grothendieck::kpoly::{self, default_rows, GrothendieckSpec, Method};
use grothendieck::pieri::{self, PartitionCombo};
use grothendieck::symfunc::{Basis, Partition, SymmetricElement, TruncationCaps};
use grothendieck::verify::{self, Suite, VerifyConfig, DEFAULT_INSTANCES, DEFAULT_SEED};

use render::{CapsJson, ElementJson, ExpansionJson, ExpansionParams, Format};

pub const CAPS_ENV: &str = "GROTH_DEFAULT_CAPS";

#[derive(Debug, Parser)]
#[command(
    name = "groth",
    version,
    about = "Grothendieck polynomials, their duals and Pieri expansions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute G_λ or g_λ by one route.
    Compute(ComputeArgs),
    /// Expand a product in the G or g basis.
    Expand(ExpandArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "G")]
    Big,
    #[value(name = "g")]
    Dual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Bialternant,
    JacobiTrudi,
    Fermionic,
    AnotherDeterminant,
    Gr,
    Determinant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Schur,
    Monomial,
    Complete,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Latex,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExpansionArg {
    #[value(name = "sG")]
    SBig,
    #[value(name = "sg")]
    SDual,
    PieriE,
    PieriH,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    pub family: FamilyArg,
    /// Comma-separated parts; the empty string is the empty partition.
    #[arg(long, default_value = "", value_parser = parse_partition)]
    pub shape: Partition,
    /// Defaults to bialternant for G and determinant for g.
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
    #[arg(long)]
    pub vars: Option<usize>,
    #[arg(long)]
    pub degree: Option<u32>,
    /// Row count for the gr route and the g routes.
    #[arg(long)]
    pub rows: Option<usize>,
    /// Basis for JSON and LaTeX output; text prints the polynomial in x_1..x_n.
    #[arg(long, value_enum, default_value = "schur")]
    pub basis: BasisArg,
    #[arg(long, value_enum, default_value = "text")]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    pub kind: ExpansionArg,
    /// The Schur factor for sG and sg.
    #[arg(long, default_value = "", value_parser = parse_partition)]
    pub s: Partition,
    #[arg(long, default_value = "", value_parser = parse_partition)]
    pub mu: Partition,
    /// The shape acted on by pieri-e and pieri-h.
    #[arg(long, default_value = "", value_parser = parse_partition)]
    pub shape: Partition,
    #[arg(long)]
    pub rows: Option<usize>,
    #[arg(long)]
    pub cols: Option<usize>,
    /// Series coefficient index for pieri-e and pieri-h.
    #[arg(long)]
    pub i: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long)]
    pub max_weight: Option<u32>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_INSTANCES)]
    pub instances: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed input; exit code 2.
    Usage(String),
    /// A library precondition failed; exit code 3.
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Precondition(m) => write!(f, "{m}"),
        }
    }
}

impl From<grothendieck::Error> for CliError {
    fn from(e: grothendieck::Error) -> Self {
        match e {
            grothendieck::Error::InvalidPartition(_) => CliError::Usage(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

/// What a command writes to standard out, and whether it succeeded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub ok: bool,
}

fn format_of(f: FormatArg) -> Format {
    match f {
        FormatArg::Json => Format::Json,
        FormatArg::Latex => Format::Latex,
        FormatArg::Text => Format::Text,
    }
}

/// Parses `"n,D"`.
pub fn parse_caps(s: &str) -> Result<(usize, u32), CliError> {
    let bad = || CliError::Usage(format!("{CAPS_ENV} must look like \"n,D\", got {s:?}"));
    let (n, d) = s.split_once(',').ok_or_else(bad)?;
    Ok((
        n.trim().parse().map_err(|_| bad())?,
        d.trim().parse().map_err(|_| bad())?,
    ))
}

/// Caps from the flags, else from `env_caps`, else `n = max(6, |λ|+2)` and
/// `D = |λ|+4`.
pub fn resolve_caps(
    lam: &Partition,
    vars: Option<usize>,
    degree: Option<u32>,
    env_caps: Option<&str>,
) -> Result<TruncationCaps, CliError> {
    let w = lam.weight();
    let (mut n, mut d) = (6.max(w as usize + 2), w + 4);
    if let Some(s) = env_caps {
        (n, d) = parse_caps(s)?;
    }
    Ok(TruncationCaps::new(vars.unwrap_or(n), degree.unwrap_or(d)))
}

pub fn run(cli: &Cli, env_caps: Option<&str>) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Compute(a) => compute(a, env_caps),
        Command::Expand(a) => expand(a),
        Command::Verify(a) => run_verify(a),
    }
}

fn method_name(m: MethodArg) -> &'static str {
    match m {
        MethodArg::Bialternant => "bialternant",
        MethodArg::JacobiTrudi => "jacobi-trudi",
        MethodArg::Fermionic => "fermionic",
        MethodArg::AnotherDeterminant => "another-determinant",
        MethodArg::Gr => "gr",
        MethodArg::Determinant => "determinant",
    }
}

fn compute(a: &ComputeArgs, env_caps: Option<&str>) -> Result<Outcome, CliError> {
    let lam = &a.shape;
    let caps = resolve_caps(lam, a.vars, a.degree, env_caps)?;
    let (family, method) = match a.family {
        FamilyArg::Big => ("G", a.method.unwrap_or(MethodArg::Bialternant)),
        FamilyArg::Dual => ("g", a.method.unwrap_or(MethodArg::Determinant)),
    };
    let rows = a.rows.unwrap_or(lam.len());
    let elem: SymmetricElement = match (a.family, method) {
        (FamilyArg::Big, m) => {
            let m = match m {
                MethodArg::Bialternant => Method::Bialternant,
                MethodArg::JacobiTrudi => Method::JacobiTrudi,
                MethodArg::Fermionic => Method::Fermionic,
                MethodArg::AnotherDeterminant => Method::AnotherDeterminant,
                MethodArg::Gr => Method::Gr(a.rows.unwrap_or(default_rows(lam, caps))),
                MethodArg::Determinant => {
                    return Err(CliError::Precondition(
                        "G has no \"determinant\" route; use jacobi-trudi or another-determinant".into(),
                    ))
                }
            };
            GrothendieckSpec::new(lam.clone(), m, caps).compute()?
        }
        (FamilyArg::Dual, MethodArg::Determinant) => kpoly::dual_determinant(lam, rows, caps)?,
        (FamilyArg::Dual, MethodArg::Fermionic) => kpoly::dual_fermionic(lam, rows, caps)?,
        (FamilyArg::Dual, m) => {
            return Err(CliError::Precondition(format!(
                "g supports the determinant and fermionic routes, not {}",
                method_name(m)
            )))
        }
    };
    let (basis, basis_name, symbol) = match a.basis {
        BasisArg::Schur => (Basis::Schur, "schur", "s"),
        BasisArg::Monomial => (Basis::Monomial, "monomial", "m"),
        BasisArg::Complete => (Basis::CompleteH, "complete", "h"),
    };
    let stdout = match format_of(a.format) {
        Format::Text => format!("{}\n", elem.to_polynomial()),
        f => {
            let elem = elem.to_basis(basis)?;
            if f == Format::Latex {
                render::element_latex(symbol, elem.canonical_terms())
            } else {
                render::to_json(&ElementJson {
                    family: family.into(),
                    shape: lam.parts().to_vec(),
                    method: method_name(method).into(),
                    basis: basis_name.into(),
                    terms: render::terms_json(elem.canonical_terms()),
                    caps: CapsJson {
                        n_vars: caps.n_vars,
                        max_degree: caps.max_degree,
                    },
                })
            }
        }
    };
    Ok(Outcome { stdout, ok: true })
}

fn expand(a: &ExpandArgs) -> Result<Outcome, CliError> {
    let mut params = ExpansionParams::default();
    let (family, name, combo): (&str, &str, PartitionCombo) = match a.kind {
        ExpansionArg::SBig => {
            let r = a.rows.unwrap_or(a.s.len().max(a.mu.len()));
            params.s = Some(a.s.parts().to_vec());
            params.mu = Some(a.mu.parts().to_vec());
            params.rows = Some(r);
            ("G", "sG", pieri::expand_sG(&a.s, &a.mu, r)?)
        }
        ExpansionArg::SDual => {
            let r = a.rows.unwrap_or(a.mu.len());
            let s = a.cols.unwrap_or(a.s.len());
            params.s = Some(a.s.parts().to_vec());
            params.mu = Some(a.mu.parts().to_vec());
            params.rows = Some(r);
            params.cols = Some(s);
            ("g", "sg", pieri::expand_sg(&a.s, &a.mu, r, s)?)
        }
        ExpansionArg::PieriE | ExpansionArg::PieriH => {
            let i =
                a.i.ok_or_else(|| CliError::Usage("--i is required for pieri-e and pieri-h".into()))?;
            params.shape = Some(a.shape.parts().to_vec());
            params.i = Some(i);
            let (name, series) = if a.kind == ExpansionArg::PieriE {
                ("pieri-e", pieri::pieri_e_g(i, &a.shape))
            } else {
                ("pieri-h", pieri::pieri_h_g(i, &a.shape))
            };
            ("g", name, series.into_iter().nth(i).expect("series has i + 1 terms"))
        }
    };
    let stdout = match format_of(a.format) {
        Format::Json => render::to_json(&ExpansionJson {
            family: family.into(),
            expansion: name.into(),
            params,
            terms: render::terms_json(combo.canonical_terms()),
        }),
        f => render::combo_text(family, combo.canonical_terms(), f),
    };
    Ok(Outcome { stdout, ok: true })
}

fn run_verify(a: &VerifyArgs) -> Result<Outcome, CliError> {
    let suite: Suite = a.suite.parse().map_err(|_| {
        CliError::Usage(format!(
            "unknown suite {:?}; expected routes, duality, knuth, wick, pieri, stability or all",
            a.suite
        ))
    })?;
    let cfg = VerifyConfig {
        max_weight: a.max_weight,
        seed: a.seed,
        instances: a.instances,
    };
    let reports = verify::run_suite(suite, &cfg);
    let mut stdout = String::new();
    for r in &reports {
        stdout.push_str(&r.to_string());
        stdout.push('\n');
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    Ok(Outcome {
        stdout,
        ok: failed == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use grothendieck::symfunc::part;

    #[test]
    fn caps_resolution() {
        let lam = part(&[2, 1]);
        assert_eq!(resolve_caps(&lam, None, None, None).unwrap(), TruncationCaps::new(6, 7));
        assert_eq!(
            resolve_caps(&lam, Some(2), None, Some("4,5")).unwrap(),
            TruncationCaps::new(2, 5)
        );
        assert_eq!(parse_caps(" 3 , 9").unwrap(), (3, 9));
        assert!(matches!(parse_caps("3"), Err(CliError::Usage(_))));
        assert!(matches!(parse_caps("a,b"), Err(CliError::Usage(_))));
    }
}
