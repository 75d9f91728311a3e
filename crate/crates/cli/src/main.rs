use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use corridor::enumerate::{enumerate_paths_capped, DEFAULT_ENUM_CAP};
use corridor::verify::{
    check_bijections, check_engines, check_identities, check_mohanty_mapping, compare,
    diagnose_theorem_out_of_domain, golden_compare, reference, render_table, sequence, EngineSweep,
    Exec, SweepReport,
};
use corridor::{
    alt_flip_reverse, alt_full_reverse, cf_count_endpoint, cf_count_window, correspond,
    dp_count_endpoint, dp_count_window, ta_encode, tm_count_vector, tm_count_window, Corridor,
    Count, Error, Instance, Path, Variant, Window,
};

#[derive(Parser)]
#[command(
    name = "corridor",
    version,
    about = "Exact counts and bijections for diagonal paths in a strip 0 <= y <= h"
)]
struct Cli {
    /// Emit a JSON document instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count paths from a start to an endpoint or window.
    Count {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Engine::Dp)]
        engine: Engine,
    },
    /// List paths, one per line.
    Enumerate {
        #[arg(long)]
        h: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_negative_numbers = true)]
        start: i64,
        #[arg(long, allow_negative_numbers = true)]
        end: Option<i64>,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Map a path to its counterpart with start and window half-width swapped.
    Map {
        #[arg(long)]
        h: u32,
        #[arg(long, allow_negative_numbers = true)]
        center: i64,
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
        #[arg(long, allow_negative_numbers = true)]
        j: i64,
        #[arg(long)]
        path: String,
        /// main, reverse or flip-reverse
        #[arg(long, default_value = "main")]
        variant: String,
    },
    /// Terms of a counting sequence, optionally checked against a catalogue entry.
    Sequence {
        #[arg(long)]
        h: u32,
        #[arg(long, allow_negative_numbers = true)]
        start: i64,
        #[arg(long, allow_negative_numbers = true, requires = "halfwidth")]
        center: Option<i64>,
        #[arg(long, requires = "center", allow_negative_numbers = true)]
        halfwidth: Option<i64>,
        /// Number of terms, lengths 0..T-1.
        #[arg(long)]
        terms: u32,
        #[arg(long = "ref")]
        reference: Option<String>,
    },
    /// Endpoint count table as CSV.
    Table {
        #[arg(long)]
        h: u32,
        #[arg(long)]
        nmax: u32,
        /// Compare against the stored table.
        #[arg(long)]
        golden: bool,
    },
    /// Run verification sweeps and print JSON reports.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long)]
        hmax: Option<u32>,
        #[arg(long)]
        nmax: Option<u32>,
        /// Also compare instances outside the symmetry bounds (never fails the run).
        #[arg(long)]
        diagnose: bool,
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Args)]
struct Target {
    #[arg(long)]
    h: u32,
    #[arg(long)]
    n: u32,
    #[arg(long, allow_negative_numbers = true)]
    start: i64,
    #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["center", "halfwidth"], required_unless_present_all = ["center", "halfwidth"])]
    end: Option<i64>,
    #[arg(long, allow_negative_numbers = true, requires = "halfwidth")]
    center: Option<i64>,
    #[arg(long, requires = "center", allow_negative_numbers = true)]
    halfwidth: Option<i64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    Dp,
    Cf,
    Tm,
    Oracle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Identities,
    Engines,
    Bijections,
    All,
}

/// Non-error outcomes: payload plus whether a check failed.
struct Outcome {
    text: String,
    json: Value,
    failed: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome {
            text,
            json,
            failed: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let as_json = cli.json;
    let result = run(cli.cmd);
    let mut out = io::stdout().lock();
    match result {
        Ok(o) => {
            let _ = if as_json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&o.json).expect("json")
                )
            } else {
                write!(out, "{}", o.text)
            };
            if o.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            if as_json {
                let _ = writeln!(out, "{}", json!({ "error": e.to_string() }));
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> corridor::Result<Outcome> {
    match cmd {
        Cmd::Count { target, engine } => count(target, engine),
        Cmd::Enumerate {
            h,
            n,
            start,
            end,
            limit,
        } => enumerate(h, n, start, end, limit),
        Cmd::Map {
            h,
            center,
            i,
            j,
            path,
            variant,
        } => map(h, center, i, j, &path, &variant),
        Cmd::Sequence {
            h,
            start,
            center,
            halfwidth,
            terms,
            reference,
        } => sequence_cmd(h, start, center.zip(halfwidth), terms, reference.as_deref()),
        Cmd::Table { h, nmax, golden } => table(h, nmax, golden),
        Cmd::Verify {
            suite,
            hmax,
            nmax,
            diagnose,
            sequential,
        } => {
            let exec = if sequential {
                Exec::Sequential
            } else {
                Exec::Parallel
            };
            Ok(verify(suite, hmax, nmax, diagnose, exec))
        }
    }
}

fn enum_cap() -> corridor::Result<u64> {
    match std::env::var("CORRIDOR_ENUM_CAP") {
        Ok(v) => v.trim().parse().map_err(|_| Error::Parse {
            what: "CORRIDOR_ENUM_CAP",
            input: v,
        }),
        Err(_) => Ok(DEFAULT_ENUM_CAP),
    }
}

fn check_start(h: u32, start: i64) -> corridor::Result<()> {
    if Corridor::new(h).contains(start) {
        Ok(())
    } else {
        Err(Error::StartOutsideCorridor { start, h })
    }
}

fn count(t: Target, engine: Engine) -> corridor::Result<Outcome> {
    check_start(t.h, t.start)?;
    let c = match (t.end, t.center.zip(t.halfwidth)) {
        (Some(ell), _) => {
            if !Corridor::new(t.h).contains(ell) {
                return Err(Error::Domain(format!(
                    "endpoint {ell} outside [0..{}]",
                    t.h
                )));
            }
            match engine {
                Engine::Dp => dp_count_endpoint(t.h, t.start, ell, t.n),
                Engine::Cf => cf_count_endpoint(t.h, t.start, ell, t.n)?,
                Engine::Tm => tm_count_vector(t.h, t.start, u64::from(t.n))[ell as usize].clone(),
                Engine::Oracle => oracle(t.h, t.start, t.n, &[ell])?,
            }
        }
        (None, Some((k, j))) => {
            if j < -1 {
                return Err(Error::InvalidHalfWidth(j));
            }
            match engine {
                Engine::Dp => dp_count_window(t.h, t.start, k, j, t.n),
                Engine::Cf => cf_count_window(t.h, t.start, k, j, t.n)?,
                Engine::Tm => tm_count_window(t.h, t.start, k, j, t.n),
                Engine::Oracle => {
                    let ends = corridor::corridor::feasible_endpoints(&Instance::new(
                        t.h, t.n, t.start, k, j,
                    ));
                    oracle(t.h, t.start, t.n, &ends)?
                }
            }
        }
        (None, None) => unreachable!("clap requires a target"),
    };
    Ok(Outcome::ok(
        format!("{c}\n"),
        json!({ "count": c.to_string() }),
    ))
}

fn oracle(h: u32, start: i64, n: u32, ends: &[i64]) -> corridor::Result<Count> {
    let listed = enumerate_paths_capped(h, start, n, Some(ends), enum_cap()?)?.count();
    Ok(Count::from(listed as u64))
}

fn enumerate(
    h: u32,
    n: u32,
    start: i64,
    end: Option<i64>,
    limit: Option<usize>,
) -> corridor::Result<Outcome> {
    check_start(h, start)?;
    let ends = end.map(|e| vec![e]);
    let cap = if limit.is_some() {
        u64::MAX
    } else {
        enum_cap()?
    };
    let paths: Vec<String> = enumerate_paths_capped(h, start, n, ends.as_deref(), cap)?
        .take(limit.unwrap_or(usize::MAX))
        .map(|p| p.to_string())
        .collect();
    let mut text = paths.join("\n");
    if !text.is_empty() {
        text.push('\n');
    }
    Ok(Outcome::ok(text, json!(paths)))
}

fn map(h: u32, k: i64, i: i64, j: i64, path: &str, variant: &str) -> corridor::Result<Outcome> {
    let p: Path = path.parse()?;
    let variant: Variant = variant.parse()?;
    let (q, case) = match variant {
        Variant::Main => {
            let (q, case) = correspond(&p, h, k, i, j)?;
            (q, Some(case))
        }
        Variant::FullReverse => (alt_full_reverse(&p, h, k, i, j)?, None),
        Variant::FlipReverse => (alt_flip_reverse(&p, h, k, i, j)?, None),
    };
    let (pw, qw) = (ta_encode(&p, k), ta_encode(&q, k));
    let mut text = format!("source {p} {pw}\ntarget {q} {qw}\n");
    if let Some(c) = case {
        text.push_str(&format!("case {c}\n"));
    }
    let json = json!({
        "variant": variant.to_string(),
        "source": p.to_string(),
        "source_word": pw.to_string(),
        "target": q.to_string(),
        "target_word": qw.to_string(),
        "case": case.map(|c| c.to_string()),
    });
    Ok(Outcome::ok(text, json))
}

fn sequence_cmd(
    h: u32,
    start: i64,
    window: Option<(i64, i64)>,
    terms: u32,
    label: Option<&str>,
) -> corridor::Result<Outcome> {
    check_start(h, start)?;
    if terms == 0 {
        return Err(Error::Domain("--terms must be at least 1".into()));
    }
    let (k, j) = window.unwrap_or_else(|| {
        let w = Window::full(Corridor::new(h));
        (w.k, w.j)
    });
    if j < -1 {
        return Err(Error::InvalidHalfWidth(j));
    }
    let seq = sequence(h, start, k, j, terms - 1);
    let listed: Vec<String> = seq.iter().map(|c| c.to_string()).collect();
    let mut text = format!("{}\n", listed.join(","));
    let mut json = json!({ "terms": listed });
    let mut failed = false;
    if let Some(label) = label {
        let r = reference(label).ok_or_else(|| Error::UnknownReference(label.to_string()))?;
        let rep = compare(&r, &seq);
        failed = !rep.passed();
        match rep.failures.first() {
            None => text.push_str(&format!("{}: match ({} terms)\n", r.label, rep.checked)),
            Some(f) => text.push_str(&format!(
                "{}: mismatch at {}: computed {}, listed {}\n",
                r.label, f.instance, f.lhs, f.rhs
            )),
        }
        json["reference"] = serde_json::to_value(&rep).expect("json");
    }
    Ok(Outcome { text, json, failed })
}

fn table(h: u32, nmax: u32, golden: bool) -> corridor::Result<Outcome> {
    if !golden {
        let csv = render_table(h, nmax);
        return Ok(Outcome::ok(csv.clone(), json!({ "csv": csv })));
    }
    let rep = golden_compare(h, nmax)?;
    let text = match rep.failures.first() {
        None => format!("table h={h}: match ({} lines)\n", rep.checked),
        Some(f) => format!(
            "table h={h}: mismatch at {}: rendered {:?}, stored {:?}\n",
            f.instance, f.lhs, f.rhs
        ),
    };
    let failed = !rep.passed();
    Ok(Outcome {
        text,
        json: serde_json::to_value(&rep).expect("json"),
        failed,
    })
}

fn verify(
    suite: Suite,
    hmax: Option<u32>,
    nmax: Option<u32>,
    diagnose: bool,
    exec: Exec,
) -> Outcome {
    let mut reports: Vec<SweepReport> = Vec::new();
    let wants = |s: Suite| suite == s || suite == Suite::All;
    if wants(Suite::Identities) {
        reports.extend(check_identities(
            hmax.unwrap_or(6),
            nmax.unwrap_or(14),
            exec,
        ));
    }
    if wants(Suite::Engines) {
        let d = EngineSweep::default();
        let params = EngineSweep {
            h_max: hmax.unwrap_or(d.h_max),
            n_max: nmax.unwrap_or(d.n_max),
            oracle_h_max: hmax.map_or(d.oracle_h_max, |h| h.min(d.oracle_h_max)),
            oracle_n_max: nmax.map_or(d.oracle_n_max, |n| n.min(d.oracle_n_max)),
        };
        reports.push(check_engines(params, exec));
        reports.push(check_mohanty_mapping(
            hmax.unwrap_or(6),
            nmax.unwrap_or(14),
            exec,
        ));
    }
    if wants(Suite::Bijections) {
        reports.extend(check_bijections(
            hmax.unwrap_or(5),
            nmax.unwrap_or(10),
            exec,
        ));
    }
    let failed = reports.iter().any(|r| !r.passed());
    if diagnose {
        reports.push(diagnose_theorem_out_of_domain(
            hmax.unwrap_or(6),
            nmax.unwrap_or(14),
            exec,
        ));
    }
    let json = serde_json::to_value(&reports).expect("json");
    let text = format!("{}\n", serde_json::to_string_pretty(&json).expect("json"));
    Outcome { text, json, failed }
}
