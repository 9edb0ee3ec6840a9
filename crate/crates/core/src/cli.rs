//! Command-line surface. Exit codes: 0 success, 1 a checked bound or
//! identity failed, 2 usage or input error.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{bound_report, region_table, BoundReport};
use crate::catalog::{check_catalog, derive_records, lookup};
use crate::constructions::{abelian, free_nilpotent, heisenberg, witt_dim};
use crate::homology::multiplier_dim;
use crate::io::{parse_algebra_file, parse_subspace, write_algebra_file};
use crate::lie::LieAlgebra;
use crate::relative::{
    central_quotient_check, check_pair_bounds, complement_central_check, triple_inequality_check,
    PairContext, TripleContext,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERTION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "lieschur",
    version,
    about = "Schur multipliers and multiplier bounds for nilpotent Lie algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the Lie axioms of an algebra file.
    Validate { file: PathBuf },
    /// Print dim M(L). SRC is a file path or catalog:NAME.
    Multiplier { src: String },
    /// Evaluate every multiplier bound against dim M(L).
    Bounds {
        src: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Pair multiplier and its bounds for an ideal N with a complement.
    Pair {
        src: String,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        complement: Option<String>,
        /// Central K inside N for the complement/central inequality.
        #[arg(long)]
        k: Option<String>,
        /// Assume K lies in the epicenter and check the implied equality.
        #[arg(long)]
        assume_epicentral: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Triple multiplier for L = I + J with I ∩ J = 0.
    Triple {
        src: String,
        #[arg(long = "i")]
        i: String,
        #[arg(long = "j")]
        j: String,
        #[arg(long)]
        k: Option<String>,
        #[arg(long)]
        assume_epicentral: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Double inequality for the quotient by a central subspace Z.
    CentralCheck {
        src: String,
        #[arg(long)]
        z: String,
        #[arg(long)]
        assume_epicentral: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Witt dimension l_N(D).
    Witt { n: u64, d: u64 },
    /// Write a named algebra as an algebra file.
    Construct {
        #[command(subcommand)]
        family: Family,
        #[arg(short = 'o', long = "output", global = true)]
        output: Option<PathBuf>,
    },
    /// Compare the nice and salemkar bounds over a parameter grid.
    Region {
        #[arg(long)]
        n_max: u64,
        #[arg(long)]
        csv: bool,
    },
    /// List or check the built-in catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum Family {
    Abelian { n: usize },
    Heisenberg { m: usize },
    FreeNilpotent { n: usize, c: usize },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List {
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    Check,
}

/// Failure of a command, carrying its exit status.
#[derive(Debug)]
pub struct CommandError {
    pub code: i32,
    pub message: String,
}

fn input_error(e: impl std::fmt::Display) -> CommandError {
    CommandError {
        code: EXIT_INPUT,
        message: e.to_string(),
    }
}

type CmdResult = Result<(String, i32), CommandError>;

fn load(src: &str) -> Result<LieAlgebra, CommandError> {
    if let Some(name) = src.strip_prefix("catalog:") {
        let entry = lookup(name).map_err(input_error)?;
        return entry.build().map_err(input_error);
    }
    let text = std::fs::read_to_string(src).map_err(|e| input_error(format!("{src}: {e}")))?;
    parse_algebra_file(&text).map_err(|e| input_error(format!("{src}: {e}")))
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

fn status(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_ASSERTION
    }
}

fn yes_no(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

fn render_bounds(r: &BoundReport) -> String {
    let mut s = String::new();
    let p = r.profile;
    writeln!(s, "algebra: {}", r.name.as_deref().unwrap_or("-")).unwrap();
    writeln!(
        s,
        "profile: n={} m={} d={} c={} gens={}",
        p.n, p.m, p.d, p.c, p.gens
    )
    .unwrap();
    writeln!(s, "multiplier: {}", r.multiplier).unwrap();
    writeln!(
        s,
        "{:<10} {:>8}  {:<8}  {:<5}  {:<8}",
        "bound", "value", "asserted", "holds", "equality"
    )
    .unwrap();
    for e in &r.entries {
        writeln!(
            s,
            "{:<10} {:>8}  {:<8}  {:<5}  {:<8}",
            e.name.label(),
            e.value.to_string(),
            if e.asserted { "yes" } else { "no" },
            yes_no(e.holds),
            yes_no(e.equality)
        )
        .unwrap();
    }
    s
}

fn render_fields<T: Serialize>(title: &str, v: &T) -> String {
    let value = serde_json::to_value(v).expect("report types serialize");
    let mut s = format!("{title}\n");
    if let serde_json::Value::Object(map) = value {
        for (k, v) in map {
            let text = match v {
                serde_json::Value::Null => "-".to_owned(),
                serde_json::Value::Object(inner) => inner
                    .iter()
                    .map(|(a, b)| format!("{a}={b}"))
                    .collect::<Vec<_>>()
                    .join(" "),
                other => other.to_string(),
            };
            writeln!(s, "  {k:<26} {text}").unwrap();
        }
    }
    s
}

fn emit<T: Serialize>(format: Format, title: &str, v: &T) -> String {
    match format {
        Format::Json => to_json(v),
        Format::Table => render_fields(title, v),
    }
}

fn cmd_pair(
    src: &str,
    ideal: &str,
    complement: Option<&str>,
    k: Option<&str>,
    assume: bool,
    format: Format,
) -> CmdResult {
    let l = load(src)?;
    let n = l.dim();
    let ideal = parse_subspace(ideal, n).map_err(input_error)?;
    let complement = complement
        .map(|c| parse_subspace(c, n))
        .transpose()
        .map_err(input_error)?;
    if complement.is_none() {
        return Err(input_error(
            "--complement is required: the pair multiplier is only computed for complemented ideals",
        ));
    }
    let ctx = PairContext::new(l, ideal, complement).map_err(input_error)?;
    let bounds = check_pair_bounds(&ctx).map_err(input_error)?;
    let mut ok = bounds.holds;
    let mut out = emit(format, "pair bounds", &bounds);
    if let Some(k) = k {
        let k = parse_subspace(k, n).map_err(input_error)?;
        let r = complement_central_check(&ctx, &k, assume).map_err(input_error)?;
        ok &= r.holds && r.epicenter.as_ref().is_none_or(|e| e.consistent);
        out.push_str(&emit(format, "complement/central inequality", &r));
    }
    Ok((out, status(ok)))
}

fn cmd_triple(
    src: &str,
    i: &str,
    j: &str,
    k: Option<&str>,
    assume: bool,
    format: Format,
) -> CmdResult {
    let l = load(src)?;
    let n = l.dim();
    let i = parse_subspace(i, n).map_err(input_error)?;
    let j = parse_subspace(j, n).map_err(input_error)?;
    let k = k
        .map(|k| parse_subspace(k, n))
        .transpose()
        .map_err(input_error)?;
    let ctx = TripleContext::new(l, i, j, k).map_err(input_error)?;
    let r = triple_inequality_check(&ctx, assume).map_err(input_error)?;
    let ok = r.holds && r.epicenter.as_ref().is_none_or(|e| e.consistent);
    Ok((emit(format, "triple", &r), status(ok)))
}

fn cmd_central(src: &str, z: &str, assume: bool, format: Format) -> CmdResult {
    let l = load(src)?;
    let z = parse_subspace(z, l.dim()).map_err(input_error)?;
    let r = central_quotient_check(&l, &z, assume).map_err(input_error)?;
    let ok = r.holds && r.epicenter.as_ref().is_none_or(|e| e.consistent);
    Ok((emit(format, "central quotient", &r), status(ok)))
}

fn cmd_region(n_max: u64, csv: bool) -> CmdResult {
    let rows = region_table(n_max);
    let counterexamples = rows
        .iter()
        .filter(|r| r.region_flag && !r.dominance)
        .count();
    let mut s = String::new();
    if csv {
        s.push_str("n,m,d,nice,salemkar,region_flag,dominance\n");
        for r in &rows {
            writeln!(
                s,
                "{},{},{},{},{},{},{}",
                r.n, r.m, r.d, r.nice, r.salemkar, r.region_flag, r.dominance
            )
            .unwrap();
        }
    } else {
        let in_region = rows.iter().filter(|r| r.region_flag).count();
        let dominated = rows.iter().filter(|r| r.dominance).count();
        writeln!(s, "triples evaluated: {}", rows.len()).unwrap();
        writeln!(s, "inside region: {in_region}").unwrap();
        writeln!(s, "nice <= salemkar: {dominated}").unwrap();
        writeln!(s, "region without dominance: {counterexamples}").unwrap();
        if let Some(w) = rows.iter().find(|r| !r.region_flag && r.dominance) {
            writeln!(
                s,
                "dominance outside region, first: n={} m={} d={} (nice {} <= salemkar {})",
                w.n, w.m, w.d, w.nice, w.salemkar
            )
            .unwrap();
        }
    }
    Ok((s, status(counterexamples == 0)))
}

fn cmd_catalog(action: &CatalogAction) -> CmdResult {
    match action {
        CatalogAction::List { format } => {
            let records = derive_records().map_err(input_error)?;
            match format {
                Format::Json => Ok((to_json(&records), EXIT_OK)),
                Format::Table => {
                    let mut s = format!(
                        "{:<16} {:>4} {:>4} {:>4} {:>5} {:>10}\n",
                        "name", "dim", "m", "d", "class", "multiplier"
                    );
                    for r in records {
                        let e = r.expected;
                        writeln!(
                            s,
                            "{:<16} {:>4} {:>4} {:>4} {:>5} {:>10}",
                            r.name, e.dim, e.derived_dim, e.center_dim, e.class, e.multiplier
                        )
                        .unwrap();
                    }
                    Ok((s, EXIT_OK))
                }
            }
        }
        CatalogAction::Check => {
            let results = check_catalog();
            let mut s = String::new();
            for r in &results {
                let tag = if r.ok() { "ok  " } else { "FAIL" };
                writeln!(s, "{tag} {:<16} {} checks", r.name, r.checks).unwrap();
                for f in &r.failures {
                    writeln!(s, "     {f}").unwrap();
                }
            }
            let failed = results.iter().filter(|r| !r.ok()).count();
            writeln!(s, "{} entries, {} failed", results.len(), failed).unwrap();
            Ok((s, status(failed == 0)))
        }
    }
}

pub fn execute(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Validate { file } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| input_error(format!("{}: {e}", file.display())))?;
            let l = parse_algebra_file(&text)
                .map_err(|e| input_error(format!("{}: {e}", file.display())))?;
            Ok((format!("ok: dim {}\n", l.dim()), EXIT_OK))
        }
        Command::Multiplier { src } => {
            let l = load(src)?;
            Ok((format!("{}\n", multiplier_dim(&l)), EXIT_OK))
        }
        Command::Bounds { src, format } => {
            let l = load(src)?;
            let r = bound_report(&l).map_err(input_error)?;
            let text = match format {
                Format::Json => to_json(&r),
                Format::Table => render_bounds(&r),
            };
            Ok((text, status(r.all_hold())))
        }
        Command::Pair {
            src,
            ideal,
            complement,
            k,
            assume_epicentral,
            format,
        } => cmd_pair(
            src,
            ideal,
            complement.as_deref(),
            k.as_deref(),
            *assume_epicentral,
            *format,
        ),
        Command::Triple {
            src,
            i,
            j,
            k,
            assume_epicentral,
            format,
        } => cmd_triple(src, i, j, k.as_deref(), *assume_epicentral, *format),
        Command::CentralCheck {
            src,
            z,
            assume_epicentral,
            format,
        } => cmd_central(src, z, *assume_epicentral, *format),
        Command::Witt { n, d } => {
            let v = witt_dim(*n, *d).map_err(input_error)?;
            Ok((format!("{v}\n"), EXIT_OK))
        }
        Command::Construct { family, output } => {
            let l = match family {
                Family::Abelian { n } => abelian(*n),
                Family::Heisenberg { m } => heisenberg(*m).map_err(input_error)?,
                Family::FreeNilpotent { n, c } => free_nilpotent(*n, *c).map_err(input_error)?,
            };
            let text = write_algebra_file(&l);
            match output {
                Some(path) => {
                    std::fs::write(path, &text)
                        .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
                    Ok((String::new(), EXIT_OK))
                }
                None => Ok((text, EXIT_OK)),
            }
        }
        Command::Region { n_max, csv } => cmd_region(*n_max, *csv),
        Command::Catalog { action } => cmd_catalog(action),
    }
}

/// Parses `args` (including the program name), runs the command, and
/// writes to the given streams. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}
