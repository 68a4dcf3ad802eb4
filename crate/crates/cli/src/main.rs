//! `skewrec` — exact verification of minimal spectral radii for
//! skew-reciprocal integer matrices.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 on verification failures.

mod reproduce;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_rational::BigRational;
use serde_json::json;

use skewrec_core::digraph::Digraph;
use skewrec_core::error::Error;
use skewrec_core::families::{family_poly, FamilyTag};
use skewrec_core::matrix::{char_poly, companion, IntMatrix};
use skewrec_core::poly::roots::largest_real_root_isolated;
use skewrec_core::poly::{check_coefficient_constraints, is_skew_reciprocal, IntPoly};
use skewrec_core::rat::{format_rational, parse_rational, rat, to_f64};
use skewrec_core::search::g3::g3_case_enumeration;
use skewrec_core::search::minimality::{verify_minimum, Mode};
use skewrec_core::search::sequences::{monotonicity_check, sequence_table};

#[derive(Parser)]
#[command(
    name = "skewrec",
    version,
    about = "Exact arithmetic for minimal spectral radii of skew-reciprocal integer matrices"
)]
struct Cli {
    /// Bracket tolerance as an exact rational: `1/1000000`, `1e-9` or `0.001`.
    #[arg(long, global = true)]
    tol: Option<String>,

    /// Cap for cycle and clique enumeration.
    #[arg(long, global = true)]
    cap: Option<usize>,

    /// Emit JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Emit CSV (where the command supports it).
    #[arg(long, global = true)]
    csv: bool,

    /// Write the report to a file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a monic degree-2g polynomial against the coefficient
    /// constraints for skew-reciprocity.
    CheckPoly {
        /// Ascending comma-separated coefficients, e.g. `-1,-1,0,-1,1`.
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        g: usize,
    },
    /// Exact characteristic polynomial of a matrix file, or of the companion
    /// matrix of a polynomial.
    Charpoly {
        /// Matrix file: first line `n`, then `n` rows of integers.
        #[arg(long, conflicts_with = "poly")]
        matrix: Option<PathBuf>,
        /// Build the companion matrix of this polynomial instead.
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
    },
    /// Clique polynomial of the curve graph of a digraph file.
    Cliquepoly {
        /// Digraph file: `v <count>` then `e <src> <dst> <weight> <mult>`.
        #[arg(long)]
        graph: PathBuf,
        /// Also emit a JSON breakdown of all cliques.
        #[arg(long)]
        explain: bool,
    },
    /// A family polynomial with its skew-reciprocity verdict, Perron bracket
    /// and normalized value, as JSON.
    Family {
        /// `lambda` or `mu`.
        #[arg(long)]
        tag: String,
        #[arg(long)]
        g: usize,
    },
    /// Verify that the family candidate minimizes the spectral radius at
    /// genus g over the classification shapes.
    Verify {
        #[arg(long)]
        g: usize,
        /// `irreducible` or `primitive`.
        #[arg(long)]
        mode: String,
    },
    /// Strictly increasing largest roots of `t^2g - t^(g+d) - t^(g-d) - 1`.
    Monotonicity {
        #[arg(long)]
        g: usize,
    },
    /// The dimension-six enumeration: 231 candidates, 3 window survivors,
    /// 1 maximal-modulus survivor.
    G3Case,
    /// Normalized sequence table for `1 <= g <= gmax`.
    Sequence {
        #[arg(long)]
        gmax: usize,
    },
    /// Run every claim end to end, printing one PASS/FAIL line per claim.
    ReproducePaper,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not usage errors.
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(&cli) {
        Ok(output) => {
            if let Err(e) = emit(&cli.out, &output) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(RunError::Failure(text, e)) => {
            let _ = emit(&cli.out, &text);
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::VerificationFailure { .. } => 2,
                _ => 1,
            })
        }
    }
}

enum RunError {
    Failure(String, Error),
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Failure(String::new(), e)
    }
}

type RunResult = std::result::Result<String, RunError>;

fn emit(out: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            if !text.is_empty() {
                print!("{text}");
                if !text.ends_with('\n') {
                    println!();
                }
            }
            Ok(())
        }
    }
}

/// Canonical JSON: serialize through `serde_json::Value` so keys are sorted
/// and a parse/re-serialize round trip is byte-identical.
fn canonical_json<T: serde::Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    serde_json::to_string_pretty(&v).expect("valid json")
}

fn tolerance(cli: &Cli) -> Result<BigRational, Error> {
    match &cli.tol {
        Some(t) => {
            let v = parse_rational(t)?;
            if v <= rat(0, 1) {
                return Err(Error::invalid("tolerance must be positive"));
            }
            Ok(v)
        }
        None => Ok(rat(1, 1_000_000_000_000)),
    }
}

fn run(cli: &Cli) -> RunResult {
    match &cli.command {
        Cmd::CheckPoly { poly, g } => check_poly(cli, poly, *g),
        Cmd::Charpoly { matrix, poly } => charpoly_cmd(cli, matrix, poly),
        Cmd::Cliquepoly { graph, explain } => cliquepoly_cmd(cli, graph, *explain),
        Cmd::Family { tag, g } => family_cmd(cli, tag, *g),
        Cmd::Verify { g, mode } => verify_cmd(cli, *g, mode),
        Cmd::Monotonicity { g } => monotonicity_cmd(cli, *g),
        Cmd::G3Case => g3_cmd(cli),
        Cmd::Sequence { gmax } => sequence_cmd(cli, *gmax),
        Cmd::ReproducePaper => reproduce::run(),
    }
}

fn check_poly(cli: &Cli, poly: &str, g: usize) -> RunResult {
    let p = IntPoly::parse(poly)?;
    let report = check_coefficient_constraints(&p, g)?;
    if cli.json {
        return Ok(canonical_json(&report));
    }
    let mut out = format!(
        "polynomial: {} ({})\ncase: {}\n",
        p.to_coeff_string(),
        p.pretty(),
        serde_json::to_value(report.case).unwrap().as_str().unwrap()
    );
    for c in &report.checks {
        out.push_str(&format!(
            "  t^{} vs t^{}: {} -> {}\n",
            c.d,
            2 * g - c.d,
            match c.relation {
                skewrec_core::poly::PairRelation::Equal => "equal",
                skewrec_core::poly::PairRelation::SignFlip => "sign-flip",
            },
            if c.ok { "ok" } else { "VIOLATED" }
        ));
    }
    out.push_str(&format!(
        "middle coefficient must vanish: {}\nverdict: {}\n",
        report.middle_must_vanish,
        if report.verdict {
            "skew-reciprocal"
        } else {
            "not skew-reciprocal"
        }
    ));
    Ok(out)
}

fn charpoly_cmd(cli: &Cli, matrix: &Option<PathBuf>, poly: &Option<String>) -> RunResult {
    let m = match (matrix, poly) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::invalid(format!("cannot read {path:?}: {e}")))?;
            IntMatrix::parse(&text)?
        }
        (None, Some(p)) => companion(&IntPoly::parse(p)?)?,
        _ => {
            return Err(Error::invalid("pass exactly one of --matrix or --poly").into());
        }
    };
    let cp = char_poly(&m);
    if cli.json {
        return Ok(canonical_json(&json!({
            "dim": m.dim(),
            "char_poly": cp.to_coeff_string(),
            "pretty": cp.pretty(),
        })));
    }
    Ok(format!("{}\n", cp.to_coeff_string()))
}

fn cliquepoly_cmd(cli: &Cli, graph: &PathBuf, explain: bool) -> RunResult {
    let text = std::fs::read_to_string(graph)
        .map_err(|e| Error::invalid(format!("cannot read {graph:?}: {e}")))?;
    let g = Digraph::parse(&text)?;
    let cap = cli.cap.unwrap_or(skewrec_core::digraph::DEFAULT_CYCLE_CAP);
    let cg = g.curve_graph_capped(cap)?;
    let q = cg.clique_polynomial_capped(cap)?;
    let mut out = format!("{}\n", q.to_coeff_string());
    if explain {
        let cliques = cg.cliques_explain(cap)?;
        let breakdown = json!({
            "clique_poly": q.to_coeff_string(),
            "pretty": q.pretty(),
            "curve_vertices": cg.weights(),
            "curve_edges": cg.edge_list(),
            "cliques": cliques,
        });
        out.push_str(&canonical_json(&breakdown));
        out.push('\n');
    }
    Ok(out)
}

fn family_cmd(cli: &Cli, tag: &str, g: usize) -> RunResult {
    let tag = match tag {
        "lambda" => FamilyTag::Lambda,
        "mu" => FamilyTag::Mu,
        other => return Err(Error::invalid(format!("unknown family tag {other:?}")).into()),
    };
    let p = family_poly(tag, g)?;
    let skew = is_skew_reciprocal(&p)?;
    let tol = tolerance(cli)?;
    let mut iso = largest_real_root_isolated(&p)?
        .ok_or_else(|| Error::invalid("family polynomial has no positive root"))?;
    iso.refine_to(&tol);
    while iso.lo() <= &rat(0, 1) {
        iso.refine_step();
    }
    let bracket = iso.to_bracket();
    let (nlo, nhi) = iso.pow_interval(2 * g);
    let value = json!({
        "tag": tag,
        "g": g,
        "poly": p.to_coeff_string(),
        "pretty": p.pretty(),
        "skew_reciprocal": skew,
        "perron": bracket,
        "normalized": {
            "lo": format_rational(&nlo),
            "hi": format_rational(&nhi),
            "decimal": to_f64(&((&nlo + &nhi) / rat(2, 1))),
        },
    });
    Ok(canonical_json(&value))
}

fn verify_cmd(cli: &Cli, g: usize, mode: &str) -> RunResult {
    let mode: Mode = mode.parse()?;
    let report = verify_minimum(g, mode)?;
    if cli.json {
        return Ok(canonical_json(&report));
    }
    let mut out = format!(
        "g = {}, mode = {}\ncandidate: {} (largest root ~ {:.12})\n",
        report.g,
        report.mode,
        report.candidate_poly,
        report.candidate_bracket.to_f64()
    );
    out.push_str(&format!(
        "realizability: nonnegative={} irreducible={} cycles={:?} gcd={:?}\n",
        report.realizability.nonnegative,
        report.realizability.irreducible,
        report.realizability.cycle_lengths,
        report.realizability.cycle_gcd
    ));
    out.push_str(&format!(
        "scanned findings: {} skew-reciprocal assignments, {} constraint-excluded classes\n",
        report.findings.len(),
        report.exclusions.len()
    ));
    out.push_str(&format!(
        "minimum normalized: {:.12}\nminimizers: {}\n",
        report.minimum_normalized,
        report.minimizers.join(" ; ")
    ));
    Ok(out)
}

fn monotonicity_cmd(cli: &Cli, g: usize) -> RunResult {
    let report = monotonicity_check(g)?;
    if cli.json {
        return Ok(canonical_json(&report));
    }
    let mut out = format!("g = {}: largest roots strictly increase in d\n", report.g);
    for row in &report.rows {
        out.push_str(&format!(
            "  d = {}: {} root ~ {:.12}\n",
            row.d,
            row.poly,
            row.bracket.to_f64()
        ));
    }
    Ok(out)
}

fn g3_cmd(cli: &Cli) -> RunResult {
    let report = g3_case_enumeration()?;
    if cli.json {
        return Ok(canonical_json(&report));
    }
    if cli.csv {
        let mut out =
            String::from("a,b,c,poly,window_root_lo,window_root_hi,window_root_is_maximal\n");
        for e in &report.stage1 {
            let (lo, hi) = e
                .window_roots
                .first()
                .map(|b| (format_rational(&b.lo), format_rational(&b.hi)))
                .unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},\"{}\",{},{},{}\n",
                e.a,
                e.b,
                e.c,
                e.poly,
                lo,
                hi,
                e.window_root_is_maximal.unwrap_or(false)
            ));
        }
        return Ok(out);
    }
    let mut out = format!(
        "candidates: {}\nwindow survivors (modulus in (1.41, 1.42)): {}\n",
        report.total, report.stage1_count
    );
    for e in &report.stage1 {
        out.push_str(&format!(
            "  (a,b,c) = ({},{},{}):  {}  maximal-in-modulus: {}\n",
            e.a,
            e.b,
            e.c,
            e.poly,
            e.window_root_is_maximal.unwrap_or(false)
        ));
    }
    out.push_str(&format!(
        "maximal-modulus survivors: {}\nsurvivor: {}\n",
        report.stage2_count,
        report.survivor.as_deref().unwrap_or("-")
    ));
    Ok(out)
}

fn sequence_cmd(cli: &Cli, gmax: usize) -> RunResult {
    let table = sequence_table(gmax)?;
    if cli.csv {
        return Ok(table.to_csv());
    }
    if cli.json {
        return Ok(canonical_json(&table));
    }
    let mut out = String::from(
        "  g | lambda^(2g)        | mu^(2g)\n----+--------------------+--------------------\n",
    );
    for row in &table.rows {
        out.push_str(&format!(
            "{:>3} | {:<18.12} | {}\n",
            row.g,
            row.lambda.norm,
            row.mu
                .as_ref()
                .map(|m| format!("{:<18.12}", m.norm))
                .unwrap_or_else(|| "-".to_string())
        ));
    }
    out.push_str(&format!(
        "phi^2 = {:.12}, phi^4 = {:.12}, 3+2*sqrt(2) = {:.12}\n",
        table.phi_squared, table.phi_fourth, table.silver_squared
    ));
    Ok(out)
}
