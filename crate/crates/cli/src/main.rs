//! `segre-bn`: feasibility verdicts for canonical curves on Segre
//! embeddings, with table, JSON and CSV output.
//!
//! Exit codes: 0 success, 1 usage error, 2 sweep discrepancy found,
//! 3 node budget exceeded.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use brill_noether::{
    canonical_segre_verdict, classify_triples, prop4_lower_bound_weak, rho, splitting_feasible,
    theorem2_bound, two_factor_witness, verify_sweep, wrd_nonempty_general, BNIndex, DegreeRule,
    Error, Reason, SplitSpec, SweepConfig, SweepReport, WitnessData, DEFAULT_NODE_BUDGET,
};

const BUDGET_ENV: &str = "SEGRE_BN_BUDGET";

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_DISCREPANCY: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "segre-bn",
    version,
    about = "Decides whether the canonical image of a general genus-g curve can lie on a Segre embedding"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the Brill-Noether number rho(g,r,d) and whether W^r_d is
    /// nonempty on a general curve.
    Rho { g: i64, r: i64, d: i64 },

    /// Verdict: can the canonical image of a general genus-G curve lie on
    /// the Segre embedding of P^r1 x ... x P^rn?
    Verdict {
        g: i64,
        #[arg(required = true)]
        ranks: Vec<i64>,
    },

    /// List all two-factor Segre factorizations of G and all feasible
    /// canonical rank triples.
    Enumerate { g: i64 },

    /// Cross-check closed-form verdicts against the brute-force oracle
    /// over a genus/rank grid.
    Verify {
        #[arg(long, default_value_t = 3)]
        gmin: i64,
        #[arg(long, default_value_t = 50)]
        gmax: i64,
        #[arg(long, default_value_t = 4)]
        maxn: usize,
        #[arg(long, default_value_t = 4)]
        maxrank: i64,
        /// Node budget per sweep cell (default: SEGRE_BN_BUDGET or 10^8).
        #[arg(long)]
        budget: Option<u64>,
        /// Total degree rule: "canonical" for D = 2g-2, or a fixed integer.
        #[arg(long, default_value = "canonical")]
        degree: String,
    },

    /// Print the sharp three-factor bound and the weakened splitting
    /// lower bound for the given ranks and q = floor(D/g).
    Bound {
        #[arg(long, default_value_t = 1)]
        q: i64,
        #[arg(required = true)]
        ranks: Vec<i64>,
    },
}

/// One record per invocation; field order is the stable JSON layout.
#[derive(Serialize, Deserialize)]
struct OutputRecord {
    command: String,
    inputs: Value,
    result: Value,
    citations: Vec<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not usage errors.
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(EXIT_USAGE);
            }
            print!("{e}");
            return ExitCode::from(EXIT_OK);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::SearchSpaceTooLarge { .. } | Error::SweepBudgetExceeded { .. } => {
                    EXIT_BUDGET
                }
                _ => EXIT_USAGE,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    match &cli.command {
        Command::Rho { g, r, d } => {
            let record = cmd_rho(*g, *r, *d)?;
            emit(&record, cli.format, None);
            Ok(EXIT_OK)
        }
        Command::Verdict { g, ranks } => {
            let record = cmd_verdict(*g, ranks)?;
            emit(&record, cli.format, None);
            Ok(EXIT_OK)
        }
        Command::Enumerate { g } => {
            let record = cmd_enumerate(*g)?;
            emit(&record, cli.format, None);
            Ok(EXIT_OK)
        }
        Command::Verify {
            gmin,
            gmax,
            maxn,
            maxrank,
            budget,
            degree,
        } => {
            let budget = budget.unwrap_or_else(default_budget);
            let degree = parse_degree_rule(degree)?;
            let start = Instant::now();
            let (record, report) = cmd_verify(*gmin, *gmax, *maxn, *maxrank, budget, degree)?;
            emit(&record, cli.format, Some(start.elapsed().as_secs_f64()));
            if report.discrepancies.is_empty() {
                Ok(EXIT_OK)
            } else {
                Ok(EXIT_DISCREPANCY)
            }
        }
        Command::Bound { q, ranks } => {
            let record = cmd_bound(*q, ranks)?;
            emit(&record, cli.format, None);
            Ok(EXIT_OK)
        }
    }
}

fn default_budget() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_NODE_BUDGET)
}

fn parse_degree_rule(s: &str) -> Result<DegreeRule, Error> {
    if s == "canonical" {
        return Ok(DegreeRule::Canonical);
    }
    match s.parse::<i64>() {
        Ok(d) if d >= 0 => Ok(DegreeRule::Fixed(d)),
        Ok(d) => Err(Error::NegativeDegree(d)),
        Err(_) => Err(Error::InvalidSweepConfig(
            "--degree must be \"canonical\" or a nonnegative integer",
        )),
    }
}

fn cmd_rho(g: i64, r: i64, d: i64) -> Result<OutputRecord, Error> {
    let idx = BNIndex::new(g, r, d)?;
    let value = rho(idx);
    Ok(OutputRecord {
        command: "rho".into(),
        inputs: json!({ "g": g, "r": r, "d": d }),
        result: json!({ "rho": value, "wrd_nonempty": wrd_nonempty_general(idx) }),
        citations: tags(&["Thm4a", "Thm6a"]),
    })
}

fn cmd_verdict(g: i64, ranks: &[i64]) -> Result<OutputRecord, Error> {
    let verdict = canonical_segre_verdict(g, ranks)?;
    let citations = match &verdict.reason {
        Reason::ProductMismatch { .. } => tags(&["Prop1"]),
        Reason::TooManyFactors { .. } => tags(&["Prop4", "Cor3b"]),
        Reason::BoundViolated { .. } => tags(&["Thm2", "Cor3b"]),
        Reason::DegreeInfeasible { .. } => tags(&["Prop4", "Cor3b"]),
        Reason::Witness {
            witness: WitnessData::TwoFactor(_),
        } => tags(&["Prop1", "Cor3a"]),
        Reason::Witness { .. } => tags(&["Prop1"]),
    };
    Ok(OutputRecord {
        command: "verdict".into(),
        inputs: json!({ "g": g, "ranks": ranks }),
        result: serde_json::to_value(&verdict).expect("verdict serializes"),
        citations,
    })
}

fn cmd_enumerate(g: i64) -> Result<OutputRecord, Error> {
    if g < 3 {
        return Err(Error::GenusTooSmall(g));
    }
    let mut two_factor = Vec::new();
    for a in 2..g {
        if g % a == 0 && g / a >= 2 {
            let w = two_factor_witness(g, a - 1, g / a - 1)?;
            two_factor.push(json!({ "r1": w.r1, "r2": w.r2, "d1": w.d1, "d2": w.d2 }));
        }
    }
    let mut triples = Vec::new();
    for t in classify_triples(g)? {
        let spec = SplitSpec::canonical(g, t.to_vec())?;
        let verdict = splitting_feasible(&spec);
        let degrees = match verdict.reason {
            Reason::Witness {
                witness: WitnessData::Degrees(d),
            } => d,
            _ => unreachable!("classify_triples only returns feasible triples"),
        };
        triples.push(json!({ "ranks": t, "degrees": degrees }));
    }
    Ok(OutputRecord {
        command: "enumerate".into(),
        inputs: json!({ "g": g }),
        result: json!({ "two_factor": two_factor, "triples": triples }),
        citations: tags(&["Cor3a", "Thm2"]),
    })
}

fn cmd_verify(
    gmin: i64,
    gmax: i64,
    maxn: usize,
    maxrank: i64,
    budget: u64,
    degree: DegreeRule,
) -> Result<(OutputRecord, SweepReport), Error> {
    let config = SweepConfig {
        g_min: gmin,
        g_max: gmax,
        max_n: maxn,
        max_rank: maxrank,
        degree,
        budget,
    };
    let report = verify_sweep(&config)?;
    let record = OutputRecord {
        command: "verify".into(),
        inputs: serde_json::to_value(&config).expect("config serializes"),
        result: serde_json::to_value(&report).expect("report serializes"),
        citations: tags(&["Prop4", "Thm2", "Cor3a", "Cor3b"]),
    };
    Ok((record, report))
}

fn cmd_bound(q: i64, ranks: &[i64]) -> Result<OutputRecord, Error> {
    let theorem2 = if let [r1, r2, r3] = ranks {
        match theorem2_bound(*r1, *r2, *r3) {
            Ok(b) => json!(b),
            Err(Error::NonpositiveDenominator) => {
                json!({ "error": "nonpositive-denominator" })
            }
            Err(e) => return Err(e),
        }
    } else {
        Value::Null
    };
    let prop4 = match prop4_lower_bound_weak(q, ranks) {
        Ok(b) => json!(b),
        Err(Error::NonpositiveDenominator) => json!({ "error": "nonpositive-denominator" }),
        Err(e) => return Err(e),
    };
    Ok(OutputRecord {
        command: "bound".into(),
        inputs: json!({ "q": q, "ranks": ranks }),
        result: json!({ "theorem2_bound": theorem2, "prop4_weak_bound": prop4 }),
        citations: tags(&["Thm2", "Prop4"]),
    })
}

fn tags(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn emit(record: &OutputRecord, format: Format, elapsed_secs: Option<f64>) {
    match format {
        Format::Json => {
            // Compact single line: the stable machine interface. Wall time
            // is deliberately excluded so identical inputs give identical
            // bytes.
            println!(
                "{}",
                serde_json::to_string(record).expect("record serializes")
            );
        }
        Format::Csv => emit_csv(record),
        Format::Table => emit_table(record, elapsed_secs),
    }
}

/// Fixed column order: command, inputs, result, citations. Nested values
/// are rendered `key=value` joined with `;`, deeper nesting as compact
/// JSON, citations joined with `|`.
fn emit_csv(record: &OutputRecord) {
    let mut w = csv::Writer::from_writer(std::io::stdout());
    w.write_record(["command", "inputs", "result", "citations"])
        .expect("csv header");
    w.write_record([
        record.command.clone(),
        flatten(&record.inputs),
        flatten(&record.result),
        record.citations.join("|"),
    ])
    .expect("csv row");
    w.flush().expect("csv flush");
}

fn flatten(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", compact(v)))
            .collect::<Vec<_>>()
            .join(";"),
        other => compact(other),
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => serde_json::to_string(other).expect("value serializes"),
    }
}

fn emit_table(record: &OutputRecord, elapsed_secs: Option<f64>) {
    println!("command:   {}", record.command);
    println!("inputs:    {}", flatten(&record.inputs));
    if let Value::Object(map) = &record.result {
        println!("result:");
        for (k, v) in map {
            println!("  {k}: {}", compact(v));
        }
    } else {
        println!("result:    {}", compact(&record.result));
    }
    println!("citations: {}", record.citations.join(", "));
    if let Some(secs) = elapsed_secs {
        println!("wall time: {secs:.3}s");
    }
}
