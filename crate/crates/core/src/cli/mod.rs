//! The `sccodes` command line: enumerators, cardinalities, verification
//! sweeps, reference tables and MacWilliams reports.

mod table;
pub mod verify;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::codes::{make_family, Budget, CodeSpec, FamilyParams, TenengoltsVariant};
use crate::enumerators::{
    extended_enumerator, lc_hamming, oracle_extended, theorem1_extended, variant_cardinality, variant_hamming,
    Enumerator, Kind,
};
use crate::error::{Error, Result};
use crate::macwilliams::{build_code, parse_matrix, verify_macwilliams};

/// Exit status for a verification that ran but found a disagreement.
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INTEGRALITY: i32 = 4;

/// Exit status for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } | Error::ExponentOverflow => EXIT_BUDGET,
        Error::NotAnInteger | Error::NonDivisible { .. } | Error::OrderMismatch { .. } => EXIT_INTEGRALITY,
        _ => EXIT_USAGE,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(name = "sccodes", version, about = "Exact weight enumerators of simultaneous-congruence codes")]
pub struct Cli {
    /// Output format (default: json for macwilliams, text otherwise)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Maximum number of words any brute-force step may visit
    #[arg(long, global = true, env = "CODES_BUDGET", default_value_t = Budget::DEFAULT.0)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a weight enumerator
    Enum {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value = "hamming")]
        kind: KindArg,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
    },
    /// Print the number of codewords
    Card {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
    },
    /// Compare closed forms and the character-sum engine against brute force
    Verify(verify::VerifyArgs),
    /// Print a reference table of small Tenengolts codes
    Table {
        #[arg(value_enum)]
        which: table::TableName,
    },
    /// Check the MacWilliams identity for the code with parity-check matrix H
    Macwilliams {
        #[arg(long)]
        r: u32,
        /// Rows separated by ';', entries by ',' (e.g. "1,1;0,1")
        #[arg(long = "H", allow_hyphen_values = true)]
        h: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Extended,
    Complete,
    Hamming,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Extended => Kind::Extended,
            KindArg::Complete => Kind::Complete,
            KindArg::Hamming => Kind::Hamming,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Oracle,
    CharacterSum,
    ClosedForm,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// Code family: one of the named families, or "spec" with --spec
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    a: Option<u64>,
    #[arg(long)]
    a1: Option<u64>,
    #[arg(long)]
    a2: Option<u64>,
    #[arg(long)]
    b: Option<u64>,
    #[arg(long)]
    c: Option<u64>,
    #[arg(long)]
    t: Option<u64>,
    #[arg(long)]
    p: Option<u64>,
    /// Weights, comma-separated
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    h: Option<Vec<i64>>,
    /// Parity-check matrix for linear_code, e.g. "1,1;0,1"
    #[arg(long = "H", allow_hyphen_values = true)]
    matrix: Option<String>,
    /// Tenengolts comparison: gt, ge, lt or le
    #[arg(long, default_value = "gt")]
    variant: String,
    /// CodeSpec JSON, inline or as @path
    #[arg(long)]
    spec: Option<String>,
}

impl FamilyArgs {
    fn variant(&self) -> Result<TenengoltsVariant> {
        self.variant.parse()
    }

    fn name(&self) -> String {
        self.family.replace('-', "_")
    }

    fn build(&self) -> Result<CodeSpec> {
        if self.name() == "spec" {
            let text = self
                .spec
                .as_deref()
                .ok_or_else(|| Error::invalid("family spec needs --spec"))?;
            let json = match text.strip_prefix('@') {
                Some(path) => std::fs::read_to_string(path)
                    .map_err(|e| Error::invalid(format!("cannot read {path}: {e}")))?,
                None => text.to_string(),
            };
            return CodeSpec::from_json(&json);
        }
        let matrix = self.matrix.as_deref().map(parse_matrix).transpose()?;
        let params = FamilyParams {
            n: self.n,
            r: self.r,
            m: self.m,
            a: self.a,
            a1: self.a1,
            a2: self.a2,
            b: self.b,
            c: self.c,
            t: self.t,
            p: self.p,
            h: self.h.clone(),
            matrix,
            variant: self.variant()?,
        };
        make_family(&self.family, &params)
    }
}

/// Parses `argv` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<S: AsRef<str>>(argv: &[S], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv.iter().map(AsRef::as_ref)) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let code = exit_code(&e);
            let prefix = if code == EXIT_INTEGRALITY { "internal integrality violation: " } else { "error: " };
            let _ = writeln!(err, "{prefix}{e}");
            code
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::invalid(format!("write failed: {e}"))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let budget = Budget(cli.budget);
    let format = cli.format;
    match &cli.command {
        Command::Enum { family, kind, method } => {
            let e = compute_enumerator(family, (*kind).into(), *method, budget)?;
            write_enumerator(&e, format.unwrap_or(Format::Text), out)?;
            Ok(0)
        }
        Command::Card { family, method } => {
            let (card, how) = compute_cardinality(family, *method, budget)?;
            write_cardinality(&card, how, format.unwrap_or(Format::Text), out)?;
            Ok(0)
        }
        Command::Verify(args) => verify::run(args, budget, format.unwrap_or(Format::Text), out),
        Command::Table { which } => {
            table::render(*which, budget, format.unwrap_or(Format::Text), out)?;
            Ok(0)
        }
        Command::Macwilliams { r, h } => {
            let code = build_code(*r, &parse_matrix(h)?, budget)?;
            let report = verify_macwilliams(&code)?;
            match format.unwrap_or(Format::Json) {
                Format::Json => writeln!(out, "{}", report.to_json()).map_err(io)?,
                Format::Text => {
                    let right = report.right.as_ref().map_or("null".to_string(), ToString::to_string);
                    writeln!(out, "left: {}", report.left).map_err(io)?;
                    writeln!(out, "right: {right}").map_err(io)?;
                    writeln!(out, "verified: {}", report.verified).map_err(io)?;
                    writeln!(out, "dual_size: {}", report.dual_size).map_err(io)?;
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    let right = report.right.as_ref().map_or(String::new(), ToString::to_string);
                    w.write_record(["left", "right", "verified", "dual_size"]).map_err(csv_err)?;
                    w.write_record([
                        report.left.to_string(),
                        right,
                        report.verified.to_string(),
                        report.dual_size.to_string(),
                    ])
                    .map_err(csv_err)?;
                    out.write_all(&w.into_inner().map_err(|e| Error::invalid(e.to_string()))?)
                        .map_err(io)?;
                }
            }
            let ok = report.verified || report.rank_deficient();
            Ok(if ok { 0 } else { EXIT_MISMATCH })
        }
    }
}

pub(crate) fn csv_err(e: csv::Error) -> Error {
    Error::invalid(format!("csv: {e}"))
}

fn compute_enumerator(f: &FamilyArgs, kind: Kind, method: MethodArg, budget: Budget) -> Result<Enumerator> {
    let name = f.name();
    let closed = kind == Kind::Hamming && matches!(name.as_str(), "tenengolts" | "lc" | "blc");
    match method {
        MethodArg::Auto | MethodArg::ClosedForm if closed => {
            let spec = f.build()?;
            if name == "tenengolts" {
                let n = spec.n();
                variant_hamming(f.variant()?, n, spec.r(), f.a1.unwrap_or(0), f.a2.unwrap_or(0))
            } else {
                let c = &spec.constraints()[0];
                let h = match &c.stat {
                    crate::codes::Statistic::Linear(h) => h.clone(),
                    _ => unreachable!("lc specs are linear"),
                };
                lc_hamming(spec.n(), c.modulus, spec.r(), &h, c.residue as i64)
            }
        }
        MethodArg::ClosedForm => Err(Error::Unsupported(format!(
            "no closed form for the {kind} enumerator of family {name}"
        ))),
        MethodArg::Auto => extended_enumerator(&f.build()?, budget)?.specialize(kind),
        MethodArg::Oracle => oracle_extended(&f.build()?, budget)?.specialize(kind),
        MethodArg::CharacterSum => theorem1_extended(&f.build()?, budget)?.specialize(kind),
    }
}

fn compute_cardinality(f: &FamilyArgs, method: MethodArg, budget: Budget) -> Result<(BigInt, &'static str)> {
    let name = f.name();
    if name == "tenengolts" && matches!(method, MethodArg::Auto | MethodArg::ClosedForm) {
        let spec = f.build()?;
        let c = variant_cardinality(f.variant()?, spec.n(), spec.r(), f.a1.unwrap_or(0), f.a2.unwrap_or(0))?;
        return Ok((c, "closed_form"));
    }
    let e = compute_enumerator(f, Kind::Hamming, method, budget)?;
    Ok((e.cardinality(), e.method().name()))
}

fn write_enumerator(e: &Enumerator, format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Text => writeln!(out, "{e}").map_err(io),
        Format::Json => writeln!(out, "{}", e.to_json()).map_err(io),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header: Vec<String> = e.poly().vars().to_vec();
            header.push("coef".into());
            w.write_record(&header).map_err(csv_err)?;
            for (m, c) in e.poly().terms() {
                let mut row: Vec<String> = m.exponents().iter().map(u64::to_string).collect();
                row.push(c.to_string());
                w.write_record(&row).map_err(csv_err)?;
            }
            out.write_all(&w.into_inner().map_err(|e| Error::invalid(e.to_string()))?)
                .map_err(io)
        }
    }
}

fn write_cardinality(card: &BigInt, method: &str, format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Text => writeln!(out, "{card}"),
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::json!({"cardinality": card.to_string(), "method": method})
        ),
        Format::Csv => writeln!(out, "cardinality,method\n{card},{method}"),
    }
    .map_err(io)
}
