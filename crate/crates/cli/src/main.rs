use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use isoacm::acm::{is_acm, normalize_initialized, verify_equivalence};
use isoacm::bbw::cohomology;
use isoacm::enumerate::{
    atlas_rows, enumerate_acm_with_jobs, validate_corollaries, write_rows, AtlasFormat, Claim,
};
use isoacm::lie::{FlagSpace, Group, LieType, WeightFW};
use isoacm::step_matrix::{build, render, Format};
use isoacm::Error;

#[derive(Parser)]
#[command(
    name = "isoacm",
    version,
    about = "ACM bundles on isotropic Grassmannians of types B, C, D"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the step matrix of E_λ.
    StepMatrix(WeightArgs),
    /// Decide whether E_λ is ACM.
    Check(WeightArgs),
    /// Cohomology of E_λ(-t) by Borel-Weil-Bott.
    Cohomology {
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
    },
    /// List every initialized ACM weight (all k if --k is omitted).
    Enumerate(SpaceArgs),
    /// Compare the step-matrix criterion against the direct oracle.
    Verify {
        #[command(flatten)]
        s: SpaceArgs,
        #[arg(long, default_value_t = 4)]
        sum_bound: i64,
    },
    /// Check the closed-form ACM families against the decision procedure.
    Corollaries {
        #[command(flatten)]
        s: SpaceArgs,
        /// Extra sweep range beyond each family's box.
        #[arg(long, default_value_t = 2)]
        margin: i64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Plain,
    Json,
    Latex,
    Csv,
}

#[derive(Args)]
struct Common {
    #[arg(long = "type", value_parser = parse_type)]
    lie_type: LieType,
    #[arg(long)]
    rank: usize,
    #[arg(long, value_enum, default_value_t = OutFormat::Plain)]
    format: OutFormat,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Also print gaps, witnesses and per-weight detail.
    #[arg(long)]
    verbose: bool,
}

#[derive(Args)]
struct WeightArgs {
    #[command(flatten)]
    c: Common,
    #[arg(long)]
    k: usize,
    /// Full coefficient list a_1,...,a_N, including a_k.
    #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
    weight: WeightFW,
}

#[derive(Args)]
struct SpaceArgs {
    #[command(flatten)]
    c: Common,
    #[arg(long)]
    k: Option<usize>,
}

fn parse_type(s: &str) -> Result<LieType, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_weight(s: &str) -> Result<WeightFW, String> {
    s.split(',')
        .map(|a| {
            a.trim()
                .parse::<i64>()
                .map_err(|_| format!("bad coefficient '{a}'"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(WeightFW::new)
}

enum Failure {
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

/// Output text and whether every internal consistency check held.
type Run = Result<(String, bool), Failure>;

fn unsupported(f: OutFormat, cmd: &str) -> Failure {
    let name = f.to_possible_value().unwrap().get_name().to_string();
    Failure::Invalid(format!("format '{name}' not supported by {cmd}"))
}

fn space(c: &Common, k: usize) -> Result<FlagSpace, Failure> {
    Ok(FlagSpace::new(c.lie_type, c.rank, k)?)
}

fn spaces(s: &SpaceArgs) -> Result<Vec<FlagSpace>, Failure> {
    match s.k {
        Some(k) => Ok(vec![space(&s.c, k)?]),
        None => Ok(FlagSpace::all_in(Group::new(s.c.lie_type, s.c.rank)?)),
    }
}

fn json_line<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable") + "\n"
}

fn step_matrix(a: &WeightArgs) -> Run {
    let sp = space(&a.c, a.k)?;
    let (initialized, twist) = normalize_initialized(&sp, &a.weight)?;
    let sm = build(&sp, &initialized)?;
    let format = match a.c.format {
        OutFormat::Plain => Format::Plain,
        OutFormat::Json => Format::Json,
        OutFormat::Latex => Format::Latex,
        f => return Err(unsupported(f, "step-matrix")),
    };
    let mut out = String::new();
    if twist != 0 && format == Format::Plain {
        let _ = writeln!(out, "twist removed: a_{}={twist}", sp.requested_k());
    }
    out.push_str(&render(&sm, format));
    Ok((out, true))
}

fn check(a: &WeightArgs) -> Run {
    let sp = space(&a.c, a.k)?;
    let v = is_acm(&sp, &a.weight)?;
    let out = match a.c.format {
        OutFormat::Json => json_line(&v),
        OutFormat::Plain => {
            let mut out = v.summary() + "\n";
            if v.twist_applied != 0 {
                let _ = writeln!(
                    out,
                    "twist removed: a_{}={}, initialized λ={}",
                    sp.requested_k(),
                    v.twist_applied,
                    v.lambda
                );
            }
            if a.c.verbose {
                if let Some(k) = v.remapped_to_k {
                    let _ = writeln!(out, "evaluated as k={k} with a_{} and a_{k} swapped", k - 1);
                }
                let _ = writeln!(out, "dim = {}", v.dim);
                let _ = writeln!(out, "gaps: {:?}", v.gaps());
                for (l, pos) in &v.witnesses {
                    let _ = writeln!(out, "l={l} at {pos}");
                }
            }
            out
        }
        f => return Err(unsupported(f, "check")),
    };
    Ok((out, true))
}

fn cohomology_cmd(a: &WeightArgs, t: i64) -> Run {
    let sp = space(&a.c, a.k)?;
    let r = cohomology(&sp, &a.weight, t)?;
    let out = match a.c.format {
        OutFormat::Plain => format!("{r}\n"),
        OutFormat::Json => json_line(&r),
        f => return Err(unsupported(f, "cohomology")),
    };
    Ok((out, true))
}

fn enumerate(s: &SpaceArgs) -> Run {
    let spaces = spaces(s)?;
    let mut out = String::new();
    match s.c.format {
        OutFormat::Csv | OutFormat::Json => {
            let rows = atlas_rows(&spaces, s.c.jobs)?;
            let format = if s.c.format == OutFormat::Csv {
                AtlasFormat::Csv
            } else {
                AtlasFormat::JsonLines
            };
            let mut buf = Vec::new();
            write_rows(&mut buf, &rows, format).expect("write to memory");
            out = String::from_utf8(buf).expect("utf-8");
        }
        OutFormat::Plain => {
            for sp in &spaces {
                let r = enumerate_acm_with_jobs(sp, s.c.jobs)?;
                let _ = writeln!(
                    out,
                    "{sp}: {} ACM weights of {} candidates",
                    r.acm_weights.len(),
                    r.candidates_scanned
                );
                if s.c.verbose {
                    let _ = writeln!(out, "  bound: {}", r.bound_used);
                }
                for lambda in &r.acm_weights {
                    let _ = writeln!(out, "  {lambda}");
                }
            }
        }
        f => return Err(unsupported(f, "enumerate")),
    }
    Ok((out, true))
}

fn verify(s: &SpaceArgs, sum_bound: i64) -> Run {
    if sum_bound < 0 {
        return Err(Failure::Invalid(format!(
            "--sum-bound must be >= 0, got {sum_bound}"
        )));
    }
    let mut out = String::new();
    let mut ok = true;
    for sp in spaces(s)? {
        let report = verify_equivalence(&sp, sum_bound, s.c.jobs)?;
        ok &= report.mismatch_count() == 0;
        match s.c.format {
            OutFormat::Json => out.push_str(&report.to_json_lines()),
            OutFormat::Plain => {
                let _ = writeln!(
                    out,
                    "{sp}: {} weights with Σa <= {sum_bound}, {} ACM, {} mismatches",
                    report.records.len(),
                    report.acm_weights().len(),
                    report.mismatch_count()
                );
                for r in report.mismatches() {
                    let _ = writeln!(
                        out,
                        "  MISMATCH λ={} theorem={} oracle={} M={} dim={}",
                        r.lambda, r.acm_theorem, r.acm_oracle, r.max, r.dim
                    );
                }
            }
            f => return Err(unsupported(f, "verify")),
        }
    }
    Ok((out, ok))
}

fn corollaries(s: &SpaceArgs, margin: i64) -> Run {
    if margin < 0 {
        return Err(Failure::Invalid(format!(
            "--margin must be >= 0, got {margin}"
        )));
    }
    let mut out = String::new();
    let mut ok = true;
    for sp in spaces(s)? {
        let report = validate_corollaries(&sp, margin)?;
        ok &= report.passed();
        match s.c.format {
            OutFormat::Json => out.push_str(&json_line(&report)),
            OutFormat::Plain => {
                for c in &report.checks {
                    let claim = match c.claim {
                        Claim::Iff => "iff",
                        Claim::Sufficient => "sufficient",
                    };
                    let _ = writeln!(
                        out,
                        "{} {sp} [{claim}] {}: swept {}, predicted {}, {} violations",
                        if c.passed() { "PASS" } else { "FAIL" },
                        c.name,
                        c.swept,
                        c.predicted_acm,
                        c.violations.len()
                    );
                    for v in &c.violations {
                        let _ = writeln!(
                            out,
                            "  λ={} predicted={} actual={}",
                            v.lambda, v.predicted, v.actual
                        );
                    }
                }
            }
            f => return Err(unsupported(f, "corollaries")),
        }
    }
    Ok((out, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, out_path) = match &cli.command {
        Command::StepMatrix(a) => (step_matrix(a), &a.c.out),
        Command::Check(a) => (check(a), &a.c.out),
        Command::Cohomology { w, t } => (cohomology_cmd(w, *t), &w.c.out),
        Command::Enumerate(s) => (enumerate(s), &s.c.out),
        Command::Verify { s, sum_bound } => (verify(s, *sum_bound), &s.c.out),
        Command::Corollaries { s, margin } => (corollaries(s, *margin), &s.c.out),
    };
    let (text, consistent) = match result {
        Ok(r) => r,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match out_path {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if consistent {
        ExitCode::SUCCESS
    } else {
        eprintln!("error: decision procedure disagrees with an independent check");
        ExitCode::from(1)
    }
}
