//! Command-line front end for the orthoposet toolkit.
//!
//! Exit codes: 0 when everything requested holds, 1 when a check or law
//! fails (or a search finds nothing), 2 on usage or input errors.

use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use orthoposet::checks::{Checker, IdentitySelect, Property, SubsetMode, Witness};
use orthoposet::laws::{LawReport, RunMode, Status, Suite, Verifier};
use orthoposet::models::{self, ENUMERATION_LIMIT};
use orthoposet::ops::OpId;
use orthoposet::query::Expr;
use orthoposet::{export_dot, parse_poset, serialize_poset, OrthoPoset, ReportDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "oposet",
    version,
    about = "Check finite orthoposets against structural properties and laws"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check structural properties of a poset file.
    Check(CheckArgs),
    /// Run law suites on a poset file.
    Verify(VerifyArgs),
    /// Print an operator table.
    Ops(OpsArgs),
    /// Print a built-in model as a poset document.
    Gen(GenArgs),
    /// Enumerate small orthoposets matching a property expression.
    Search(SearchArgs),
    /// Print the Hasse diagram in DOT.
    Dot(FileArg),
}

#[derive(Args, Debug)]
struct FileArg {
    /// Poset document, or `-` for standard input.
    file: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Subsets,
    Antichains,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    input: FileArg,
    /// Property to check; repeatable. Defaults to all.
    #[arg(long = "property", short = 'p')]
    properties: Vec<String>,
    /// Quantification for the strong skew property.
    #[arg(long, value_enum, default_value = "antichains")]
    mode: ModeArg,
    /// Distributive identity for the Boolean check: 1, 2, 3, 4 or all.
    #[arg(long, default_value = "all")]
    identity: String,
    /// Property expression the poset must satisfy.
    #[arg(long)]
    require: Option<String>,
    #[arg(long)]
    all_witnesses: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    input: FileArg,
    /// Suite to run; repeatable. Defaults to all.
    #[arg(long = "suite", short = 's')]
    suites: Vec<String>,
    /// Evaluate laws whose hypothesis fails and keep their counterexamples.
    #[arg(long)]
    informational: bool,
    #[arg(long)]
    all_witnesses: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct OpsArgs {
    #[command(flatten)]
    input: FileArg,
    /// One of S, F, c, T, conj, impl.
    #[arg(long)]
    op: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct GenArgs {
    /// example1, benzene, fig3 or powerset.
    model: String,
    /// Size parameter for example1 and powerset.
    n: Option<usize>,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long, default_value_t = 8)]
    max_size: usize,
    #[arg(long, default_value_t = 2)]
    min_size: usize,
    #[arg(long)]
    require: Option<String>,
    /// Stop after this many matches.
    #[arg(long)]
    limit: Option<usize>,
}

struct Failure(i32, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(EXIT_USAGE, format!("error: {e}"))
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut buf = String::new();
    let code = match dispatch(cli.command, stdin, &mut buf) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "{msg}");
            code
        }
    };
    let _ = out.write_all(buf.as_bytes());
    code
}

fn dispatch(cmd: Command, stdin: &mut dyn Read, out: &mut String) -> Result<i32, Failure> {
    match cmd {
        Command::Check(a) => check(a, stdin, out),
        Command::Verify(a) => verify(a, stdin, out),
        Command::Ops(a) => ops(a, stdin, out),
        Command::Gen(a) => gen(a, out),
        Command::Search(a) => search(a, out),
        Command::Dot(a) => {
            out.push_str(&export_dot(&load(&a, stdin)?));
            Ok(EXIT_OK)
        }
    }
}

fn load(arg: &FileArg, stdin: &mut dyn Read) -> Result<OrthoPoset, Failure> {
    let text = if arg.file == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(&arg.file).map_err(|e| Failure(EXIT_USAGE, format!("error: {}: {e}", arg.file)))?
    };
    parse_poset(&text).map_err(|e| Failure(EXIT_USAGE, format!("error: {}: {e}", arg.file)))
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure(EXIT_USAGE, format!("error: {}", msg.into()))
}

fn render_witness(o: &OrthoPoset, w: &Witness) -> String {
    let labels: Vec<&str> = w.elements.iter().map(|&e| o.label(e)).collect();
    let mut s = format!("({})", labels.join(", "));
    if !w.note.is_empty() {
        let _ = write!(s, " {}", w.note);
    }
    for (name, m) in &w.sets {
        let _ = write!(s, "; {name} = {{{}}}", o.labels(*m).join(", "));
    }
    s
}

fn verdict(holds: bool) -> &'static str {
    if holds {
        "PASS"
    } else {
        "FAIL"
    }
}

fn check(a: CheckArgs, stdin: &mut dyn Read, out: &mut String) -> Result<i32, Failure> {
    let o = load(&a.input, stdin)?;
    let mut properties = Vec::new();
    for p in &a.properties {
        properties.push(Property::parse(p).ok_or_else(|| usage(format!("unknown property {p:?}")))?);
    }
    if properties.is_empty() && a.require.is_none() {
        properties = Property::ALL.to_vec();
    }
    let require = a.require.as_deref().map(Expr::parse).transpose()?;
    let identity = match a.identity.as_str() {
        "all" => IdentitySelect::All,
        k => match k.parse::<u8>() {
            Ok(k @ 1..=4) => IdentitySelect::One(k),
            _ => return Err(usage(format!("identity must be 1, 2, 3, 4 or all, not {k:?}"))),
        },
    };
    let mode = match a.mode {
        ModeArg::Subsets => SubsetMode::AllSubsets,
        ModeArg::Antichains => SubsetMode::Antichains,
    };
    let checker = if a.all_witnesses {
        Checker::new(&o).all_witnesses()
    } else {
        Checker::new(&o)
    };
    let run = |p: Property| -> orthoposet::Result<_> {
        match p {
            Property::StrongSkewOmp => checker.strong_skew_omp(mode),
            Property::Boolean => Ok(checker.boolean(identity)),
            p => checker.check(p),
        }
    };

    let mut doc = ReportDocument::new(&o);
    let mut reports = Vec::new();
    for p in properties {
        reports.push(run(p)?);
    }
    let required = match &require {
        Some(e) => Some(e.eval_with(&mut |p| Ok(run(p)?.holds))?),
        None => None,
    };
    let mut ok = required.unwrap_or(true);
    for r in &reports {
        ok &= r.holds;
        doc.push_check(&o, r);
    }
    if a.json {
        out.push_str(&doc.to_json());
    } else {
        let _ = writeln!(out, "poset {}", o.name());
        for r in &reports {
            let _ = writeln!(out, "  {} {} [{}]", verdict(r.holds), r.property, r.mode);
            for w in &r.witnesses {
                let _ = writeln!(out, "    witness {}", render_witness(&o, w));
            }
            for n in &r.notes {
                let _ = writeln!(out, "    note {n}");
            }
        }
        if let (Some(e), Some(v)) = (&require, required) {
            let _ = writeln!(out, "  {} require {e}", verdict(v));
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}

fn status_text(r: &LawReport) -> &'static str {
    match (r.status, r.holds) {
        (Status::Checked, true) => "PASS",
        (Status::Checked, false) => "FAIL",
        (Status::SkippedHypothesis, _) => "SKIP (hypothesis fails)",
        (Status::OutsideHypothesis, _) => "INFO (outside hypothesis)",
        (Status::SkippedSize, _) => "SKIP (too large)",
    }
}

fn verify(a: VerifyArgs, stdin: &mut dyn Read, out: &mut String) -> Result<i32, Failure> {
    let o = load(&a.input, stdin)?;
    let mut suites = Vec::new();
    for s in &a.suites {
        suites.push(Suite::parse(s).ok_or_else(|| usage(format!("unknown suite {s:?}")))?);
    }
    let mut v = Verifier::new(&o);
    if a.informational {
        v = v.mode(RunMode::Informational);
    }
    if a.all_witnesses {
        v = v.all_witnesses();
    }
    let reports = if suites.is_empty() {
        v.run_all()
    } else {
        let mut all = Vec::new();
        for s in suites {
            all.extend(v.run(s)?);
        }
        all
    };
    let mut doc = ReportDocument::new(&o);
    for r in &reports {
        doc.push_law(&o, r);
    }
    if a.json {
        out.push_str(&doc.to_json());
    } else {
        let _ = writeln!(out, "poset {}", o.name());
        for r in &reports {
            let reading = r.reading.map(|x| format!(" [{}]", reading_name(x))).unwrap_or_default();
            let _ = writeln!(out, "  {} {}{reading}", status_text(r), r.law);
            for w in &r.witnesses {
                let _ = writeln!(out, "    witness {}", render_witness(&o, w));
            }
        }
    }
    Ok(if doc.all_hold() { EXIT_OK } else { EXIT_FAILED })
}

fn reading_name(r: orthoposet::Reading) -> &'static str {
    match r {
        orthoposet::Reading::Literal => "literal",
        orthoposet::Reading::MinBothSides => "min-both-sides",
        orthoposet::Reading::Extended => "extended",
    }
}

fn ops(a: OpsArgs, stdin: &mut dyn Read, out: &mut String) -> Result<i32, Failure> {
    let o = load(&a.input, stdin)?;
    let op = OpId::parse(&a.op)
        .ok_or_else(|| usage(format!("unknown operator {:?}; use S, F, c, T, conj or impl", a.op)))?;
    let table = o.table(op);
    let vars = ["x", "y", "z"];
    if a.json {
        let rows: Vec<serde_json::Value> = table
            .rows()
            .map(|(args, v)| {
                serde_json::json!({
                    "args": args.iter().map(|&e| o.label(e)).collect::<Vec<_>>(),
                    "value": o.labels(v),
                })
            })
            .collect();
        let doc = serde_json::json!({ "poset": o.name(), "op": op.as_str(), "rows": rows });
        out.push_str(&serde_json::to_string_pretty(&doc)?);
        out.push('\n');
    } else {
        let k = table.arity();
        let _ = writeln!(out, "{}\t{}({})", vars[..k].join("\t"), op, vars[..k].join(","));
        for (args, v) in table.rows() {
            let labels: Vec<&str> = args.iter().map(|&e| o.label(e)).collect();
            let _ = writeln!(out, "{}\t{{{}}}", labels.join("\t"), o.labels(v).join(","));
        }
    }
    Ok(EXIT_OK)
}

fn gen(a: GenArgs, out: &mut String) -> Result<i32, Failure> {
    let need = |what: &str| a.n.ok_or_else(|| usage(format!("{what} needs a size argument")));
    let o = match a.model.as_str() {
        "example1" => models::example1(need("example1")?)?,
        "benzene" => models::benzene(),
        "fig3" => models::fig3(),
        "powerset" | "power_set" => models::power_set(need("powerset")?)?,
        m => {
            return Err(usage(format!(
                "unknown model {m:?}; use example1, benzene, fig3 or powerset"
            )))
        }
    };
    out.push_str(&serialize_poset(&o));
    Ok(EXIT_OK)
}

fn search(a: SearchArgs, out: &mut String) -> Result<i32, Failure> {
    if a.max_size > ENUMERATION_LIMIT {
        return Err(usage(format!("--max-size {} exceeds {ENUMERATION_LIMIT}", a.max_size)));
    }
    let require = a.require.as_deref().map(Expr::parse).transpose()?;
    let mut found = 0;
    for o in models::enumerate_orthoposets(a.max_size, true)? {
        if o.len() < a.min_size {
            continue;
        }
        if let Some(e) = &require {
            if !e.eval(&o)? {
                continue;
            }
        }
        if found > 0 {
            out.push('\n');
        }
        out.push_str(&serialize_poset(&o));
        found += 1;
        if a.limit.is_some_and(|l| found >= l) {
            break;
        }
    }
    if found == 0 {
        out.push_str("none found\n");
        return Ok(EXIT_FAILED);
    }
    Ok(EXIT_OK)
}
