use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use quatrefl::classify::{
    classify, corollary_pair_search, dicyclic_record, order_scan, render_table, run_suite, ClassificationRecord,
    CorollaryKind, CorollaryPair, IndexQuadruple, NonIsoCertificate, SUITES,
};
use quatrefl::groups::{build_group, element_order_census, FiniteGroup, GroupTag};
use quatrefl::refsystems::enumerate_systems;
use quatrefl::Error;

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "quatrefl", version, about = "Imprimitive quaternionic reflection groups of rank two")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a finite group of unit quaternions.
    Group {
        #[command(flatten)]
        k: KArgs,
        #[arg(long, value_enum, default_value_t = Emit::Summary)]
        emit: Emit,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// List the reflection systems of K up to equivalence.
    Systems {
        #[command(flatten)]
        k: KArgs,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Classify the canonical reflection groups for K, one index, or one order.
    #[command(group(clap::ArgGroup::new("selector").required(true).multiple(false)))]
    Classify {
        #[command(flatten)]
        select: Selector,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Check computed results against the golden fixtures.
    Verify {
        #[arg(long, value_parser = SUITES)]
        suite: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Search for index pairs with equal order and reflection count.
    IsoSearch {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        max_n: u64,
        #[arg(long = "type", value_enum)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Args)]
struct KArgs {
    /// cyclic, dicyclic, T, O or I.
    #[arg(long)]
    k: String,
    #[arg(long)]
    n: Option<u64>,
}

impl KArgs {
    fn tag(&self) -> Result<GroupTag, Error> {
        GroupTag::from_args(&self.k, self.n)
    }
}

#[derive(Args)]
struct Selector {
    #[arg(long, group = "selector")]
    k: Option<String>,
    #[arg(long, requires = "k")]
    n: Option<u64>,
    /// `n,a,b,r`.
    #[arg(long, group = "selector")]
    index: Option<String>,
    #[arg(long, group = "selector")]
    order: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Summary,
    Elements,
    Cayley,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    I,
    Ii,
}

/// Outcome of a command: text for stdout and whether verification passed.
struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, ok: true }
    }
}

fn json_doc(command: &str, body: Value) -> String {
    let mut doc = json!({ "schema_version": SCHEMA_VERSION, "command": command });
    if let (Value::Object(d), Value::Object(b)) = (&mut doc, body) {
        d.extend(b);
    }
    serde_json::to_string_pretty(&doc).expect("json") + "\n"
}

fn cmd_group(tag: GroupTag, emit: Emit, format: Format) -> Result<Output, Error> {
    let g = build_group(tag)?;
    let text = match (emit, format) {
        (Emit::Summary, Format::Table) => {
            let census: Vec<String> =
                element_order_census(g.as_ref()).iter().map(|(o, c)| format!("{o}:{c}")).collect();
            format!("group={}\norder={}\nelement_orders={}\n", tag, g.order(), census.join(" "))
        }
        (Emit::Summary, Format::Json) => {
            let census: serde_json::Map<String, Value> =
                element_order_census(g.as_ref()).iter().map(|(o, c)| (o.to_string(), json!(c))).collect();
            json_doc("group", json!({ "group": g.to_json(false, false), "element_orders": census }))
        }
        (Emit::Elements, _) => json_doc("group", json!({ "group": g.to_json(true, false) })),
        (Emit::Cayley, _) => json_doc("group", json!({ "group": g.to_json(false, true) })),
    };
    Ok(Output::ok(text))
}

fn cmd_systems(tag: GroupTag, format: Format) -> Result<Output, Error> {
    let classes = enumerate_systems(tag)?;
    let rows: Vec<Value> = classes
        .iter()
        .map(|c| {
            let k = c.system.parent.as_ref();
            let mut orbits: Vec<usize> = c.system.orbit_partition().iter().map(|o| o.len()).collect();
            orbits.sort();
            json!({
                "size": c.system.size(),
                "copies": c.copies,
                "generators": c.system.generators.iter().map(|&x| k.element_label(x)).collect::<Vec<_>>(),
                "orbit_sizes": orbits,
            })
        })
        .collect();
    let text = match format {
        Format::Json => json_doc("systems", json!({ "K": tag.name(), "systems": rows })),
        Format::Table => {
            let mut s = String::from("size  copies  orbits  generators\n");
            for r in &rows {
                let orbits: Vec<String> = r["orbit_sizes"].as_array().unwrap().iter().map(|v| v.to_string()).collect();
                let gens: Vec<&str> = r["generators"].as_array().unwrap().iter().filter_map(Value::as_str).collect();
                let _ =
                    writeln!(s, "{:<4}  {:<6}  {:<6}  {}", r["size"], r["copies"], orbits.join("+"), gens.join(", "));
            }
            s
        }
    };
    Ok(Output::ok(text))
}

fn records_output(records: &[ClassificationRecord], format: Format, body: Value) -> String {
    match format {
        Format::Table => render_table(records),
        Format::Json => {
            let mut b = body;
            b["records"] = serde_json::to_value(records).expect("json");
            json_doc("classify", b)
        }
    }
}

fn cmd_classify(select: &Selector, format: Format) -> Result<Output, Error> {
    if let Some(idx) = &select.index {
        let q: IndexQuadruple = idx.parse()?;
        let rec = dicyclic_record(q)?;
        return Ok(Output::ok(records_output(&[rec], format, json!({ "index": q.to_string() }))));
    }
    if let Some(order) = select.order {
        let recs = order_scan(order)?;
        return Ok(Output::ok(records_output(&recs, format, json!({ "order": order }))));
    }
    let k = select.k.as_deref().expect("clap enforces a selector");
    let tag = GroupTag::from_args(k, select.n)?;
    let recs = classify(tag)?;
    Ok(Output::ok(records_output(&recs, format, json!({ "K": tag.name() }))))
}

fn cmd_verify(suite: &str, format: Format) -> Result<Output, Error> {
    let report = run_suite(suite)?;
    let passed = report.rows.iter().filter(|r| r.pass).count();
    let text = match format {
        Format::Json => json_doc(
            "verify",
            json!({ "suite": suite, "passed": report.passed(), "rows": serde_json::to_value(&report.rows).expect("json") }),
        ),
        Format::Table => {
            let mut s = String::new();
            for r in &report.rows {
                let _ = writeln!(s, "{}  {}  {}", if r.pass { "PASS" } else { "FAIL" }, r.item, r.detail);
            }
            let _ = writeln!(s, "suite {suite}: {passed}/{} rows passed", report.rows.len());
            s
        }
    };
    Ok(Output { text, ok: report.passed() })
}

fn certificate_text(c: &NonIsoCertificate) -> String {
    match c {
        NonIsoCertificate::OrbitTypes { left, right } => format!("orbit types {left} vs {right}"),
        NonIsoCertificate::SearchExhausted => "map search exhausted".into(),
        NonIsoCertificate::Unresolved { order } => format!("unresolved at order {order}"),
    }
}

fn cmd_iso_search(max_n: u64, kind: Kind, format: Format) -> Result<Output, Error> {
    let kind = match kind {
        Kind::I => CorollaryKind::I,
        Kind::Ii => CorollaryKind::II,
    };
    let pairs: Vec<CorollaryPair> = corollary_pair_search(max_n, kind)?;
    let text = match format {
        Format::Json => json_doc(
            "iso-search",
            json!({ "max_n": max_n, "type": kind, "pairs": serde_json::to_value(&pairs).expect("json") }),
        ),
        Format::Table => {
            let mut s = String::new();
            for p in &pairs {
                let _ = writeln!(
                    s,
                    "{} {}  c={}  order={}  refs={}  {}",
                    p.left,
                    p.right,
                    p.c,
                    p.order,
                    p.reflections,
                    certificate_text(&p.certificate)
                );
            }
            let _ = writeln!(s, "{} pairs with n <= {max_n}", pairs.len());
            s
        }
    };
    Ok(Output::ok(text))
}

fn run(cli: Cli) -> Result<Output, Error> {
    match cli.command {
        Command::Group { k, emit, format } => cmd_group(k.tag()?, emit, format),
        Command::Systems { k, format } => cmd_systems(k.tag()?, format),
        Command::Classify { select, format } => cmd_classify(&select, format),
        Command::Verify { suite, format } => cmd_verify(&suite, format),
        Command::IsoSearch { max_n, kind, format } => cmd_iso_search(max_n, kind, format),
    }
}

/// 2 for bad arguments, 3 for well-formed requests with no answer.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidArgument(_) => 2,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
