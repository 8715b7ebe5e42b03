//! Command-line front end: classification table, enumeration, theory
//! verification, duality, lattice operations, conjecture checks and
//! counting formulas.

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use sctheory::carrier::Gp2;
use sctheory::conjecture::{self, Verdict};
use sctheory::counting;
use sctheory::enumerate::{self, Catalog};
use sctheory::group::{self, GroupElement};
use sctheory::refine::structure_count;
use sctheory::{ElemSet, Prime, Sct, SetPartition};

mod table;

const EXIT_COUNTEREXAMPLE: i32 = 2;
const EXIT_SKIPPED: i32 = 3;
const EXIT_USAGE: i32 = 64;
const EXIT_DATA: i32 = 65;
const EXIT_INTERNAL: i32 = 70;

#[derive(Parser)]
#[command(name = "sct", about = "Supercharacter theories of C_p x C_p", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Pretty,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    All,
    Automorphic,
    Partition,
    Products,
}

#[derive(Subcommand)]
enum Command {
    /// Per-type classification counts for a supported prime
    Table {
        #[arg(long)]
        prime: u64,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
        /// Recompute the rows from a fresh enumeration (p <= 5) and fail
        /// on any mismatch with the built-in values
        #[arg(long)]
        recompute: bool,
    },
    /// Enumerate theories and emit them as JSON lines
    Enumerate {
        #[arg(long)]
        prime: u64,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Output file; stdout when omitted
        #[arg(long)]
        out: Option<String>,
        /// Allow long runs (p = 11 automorphic)
        #[arg(long)]
        extended: bool,
    },
    /// Validate a theory file and report its invariants
    Verify {
        #[arg(long = "in")]
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Dual theory of a theory file
    Dual {
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Meet (coarsest common refinement that is a theory) of two files
    Meet {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        out: Option<String>,
        /// Compare the result against this file instead of printing
        #[arg(long)]
        expect: Option<String>,
    },
    /// Join (mutual coarsening) of two theory files
    Join {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        out: Option<String>,
        #[arg(long)]
        expect: Option<String>,
    },
    /// Run a conjecture verification, one JSON report per line
    Conjecture {
        #[command(subcommand)]
        which: ConjectureCmd,
    },
    /// Counting formulas: product counts and the per-shape partition counts
    Count {
        #[arg(long)]
        prime: u64,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Classify an assembled catalog by type and provenance
    Classify {
        #[arg(long)]
        prime: u64,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum ConjectureCmd {
    /// Squared-primitive-root closure check
    Reduction {
        /// Primes, e.g. "3..23" or "5,7,11"
        #[arg(long)]
        primes: String,
        /// Raise the allowed range to p <= 47
        #[arg(long)]
        extended: bool,
    },
    /// Three-normal-lines check over a full catalog
    ThreeSubs {
        #[arg(long)]
        prime: u64,
    },
    /// Power-map-refinement check over a full catalog
    Coarse {
        #[arg(long)]
        prime: u64,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            std::process::exit(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(exit_code_for(&e));
        }
    }
}

fn exit_code_for(e: &anyhow::Error) -> i32 {
    for cause in e.chain() {
        if let Some(err) = cause.downcast_ref::<sctheory::Error>() {
            return match err {
                sctheory::Error::NotPrime(_)
                | sctheory::Error::PrimeOutOfRange(..)
                | sctheory::Error::InvalidArgument(_)
                | sctheory::Error::Infeasible(_)
                | sctheory::Error::DegeneratePrime => EXIT_USAGE,
                sctheory::Error::GroundSetMismatch(..)
                | sctheory::Error::InvalidPartition(_)
                | sctheory::Error::InvalidTheory(_) => EXIT_DATA,
            };
        }
        if cause.downcast_ref::<serde_json::Error>().is_some()
            || cause.downcast_ref::<std::io::Error>().is_some()
        {
            return EXIT_DATA;
        }
    }
    EXIT_INTERNAL
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::Table {
            prime,
            format,
            recompute,
        } => cmd_table(prime, format, recompute),
        Command::Enumerate {
            prime,
            mode,
            out,
            extended,
        } => cmd_enumerate(prime, mode, out, extended),
        Command::Verify { input, format } => cmd_verify(&input, format),
        Command::Dual { input, out } => cmd_dual(&input, out),
        Command::Meet { a, b, out, expect } => cmd_lattice(&a, &b, out, expect, true),
        Command::Join { a, b, out, expect } => cmd_lattice(&a, &b, out, expect, false),
        Command::Conjecture { which } => cmd_conjecture(which),
        Command::Count { prime, format } => cmd_count(prime, format),
        Command::Classify { prime, format } => cmd_classify(prime, format),
    }
}

fn write_out(out: Option<String>, content: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(&path, content).context(path)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn cmd_table(prime: u64, format: Format, recompute: bool) -> anyhow::Result<i32> {
    let rows = table::golden_rows(prime)
        .ok_or_else(|| anyhow!(sctheory::Error::Infeasible(format!(
            "classification table covers p in {{2, 3, 5, 7, 11}}, got {prime}"
        ))))?;
    if recompute {
        if prime > 5 {
            return Err(anyhow!(sctheory::Error::Infeasible(
                "recomputation needs the complete catalog, available for p <= 5".into()
            )));
        }
        let catalog = Catalog::assemble(Prime::new(prime)?)?;
        let computed: Vec<table::Row> = catalog
            .classify()
            .into_iter()
            .map(|r| table::Row {
                prime,
                type_n: r.type_n as u64,
                product: r.product,
                automorphic: r.automorphic,
                partition: r.partition,
                total: r.total,
            })
            .collect();
        if computed != rows {
            return Err(anyhow!(sctheory::Error::InvalidTheory(
                "recomputed classification disagrees with the built-in table".into()
            )));
        }
    }
    print!("{}", table::render(&rows, matches!(format, Format::Csv | Format::Json).then(|| format == Format::Csv)));
    Ok(0)
}

fn cmd_enumerate(
    prime: u64,
    mode: Mode,
    out: Option<String>,
    extended: bool,
) -> anyhow::Result<i32> {
    let p = Prime::new(prime)?;
    let theories = match mode {
        Mode::All => enumerate::enumerate_all(p)?,
        Mode::Automorphic => {
            if p.get() == 11 && !extended {
                return Err(anyhow!(sctheory::Error::Infeasible(
                    "p = 11 automorphic enumeration runs for minutes; pass --extended".into()
                )));
            }
            enumerate::enumerate_automorphic(p)?
        }
        Mode::Partition => enumerate::enumerate_partition_theories(p)?,
        Mode::Products => enumerate::enumerate_products(p)?,
    };
    let catalog = Catalog::from_batches(p, vec![theories], false);
    write_out(out, &catalog.to_json_lines())?;
    Ok(0)
}

fn read_theory_parts(path: &str) -> anyhow::Result<(Prime, SetPartition)> {
    let text = std::fs::read_to_string(path).context(path.to_string())?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    let p = Prime::new(
        value
            .get("p")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| anyhow!(sctheory::Error::InvalidPartition("missing \"p\"".into())))?,
    )?;
    let classes = value
        .get("classes")
        .and_then(|v| v.as_array())
        .ok_or_else(|| anyhow!(sctheory::Error::InvalidPartition("missing \"classes\"".into())))?;
    let mut parts = Vec::new();
    for class in classes {
        let class = class
            .as_array()
            .ok_or_else(|| anyhow!(sctheory::Error::InvalidPartition("class is not an array".into())))?;
        let mut set = ElemSet::empty(p.order());
        for pair in class {
            let pair = pair.as_array().filter(|a| a.len() == 2).ok_or_else(|| {
                anyhow!(sctheory::Error::InvalidPartition("element is not [a, b]".into()))
            })?;
            let a = pair[0].as_i64().unwrap_or(-1);
            let b = pair[1].as_i64().unwrap_or(-1);
            if a < 0 || b < 0 {
                return Err(anyhow!(sctheory::Error::InvalidPartition(
                    "exponents must be nonnegative integers".into()
                )));
            }
            set.insert(GroupElement::new(p, a, b).index(p));
        }
        parts.push(set);
    }
    Ok((p, SetPartition::new(p.order(), parts)?))
}

fn read_theory(path: &str) -> anyhow::Result<Sct> {
    let (p, parts) = read_theory_parts(path)?;
    Ok(Sct::from_classes(p, parts)?)
}

fn cmd_verify(input: &str, format: Format) -> anyhow::Result<i32> {
    let (p, parts) = read_theory_parts(input)?;
    match Sct::from_classes(p, parts.clone()) {
        Ok(sct) => {
            let mut report = sct.to_json();
            report["valid"] = serde_json::json!(true);
            match format {
                Format::Json | Format::Csv => println!("{report}"),
                Format::Pretty => {
                    println!("valid theory, p = {}", p.get());
                    println!("classes: {}", sct.classes().len());
                    println!("type: T_{}", sct.type_n());
                    println!("center order: {}", sct.center().order(p));
                    println!("commutator order: {}", sct.commutator().order(p));
                }
            }
            Ok(0)
        }
        Err(err) => {
            let witness = violation_witness(p, &parts);
            match format {
                Format::Json | Format::Csv => println!(
                    "{}",
                    serde_json::json!({ "valid": false, "reason": err.to_string(), "witness": witness })
                ),
                Format::Pretty => {
                    println!("invalid: {err}");
                    if let Some(w) = witness {
                        println!("witness: {w}");
                    }
                }
            }
            Ok(EXIT_COUNTEREXAMPLE)
        }
    }
}

/// Pinpoint a violated axiom: a non-constant structure count, a missing
/// inverse class, or the identity not being isolated.
fn violation_witness(p: Prime, parts: &SetPartition) -> Option<serde_json::Value> {
    let carrier = Gp2(p);
    if parts.part_of(0).len() != 1 {
        return Some(serde_json::json!({ "axiom": "identity-isolated" }));
    }
    for part in parts.parts() {
        let inv = ElemSet::from_indices(
            p.order(),
            part.iter().map(|i| group::inv(p, GroupElement::from_index(p, i)).index(p)),
        );
        if !parts.has_part(&inv) {
            return Some(serde_json::json!({
                "axiom": "inverse-closed",
                "class": part_text(p, part),
            }));
        }
    }
    for k in parts.parts() {
        for l in parts.parts() {
            for part in parts.parts() {
                let mut it = part.iter();
                let g = it.next().unwrap();
                let cg = structure_count(&carrier, k, l, g);
                for h in it {
                    let ch = structure_count(&carrier, k, l, h);
                    if ch != cg {
                        return Some(serde_json::json!({
                            "axiom": "constant-structure-counts",
                            "K": part_text(p, k),
                            "L": part_text(p, l),
                            "g": GroupElement::from_index(p, g).text(),
                            "count_g": cg,
                            "h": GroupElement::from_index(p, h).text(),
                            "count_h": ch,
                        }));
                    }
                }
            }
        }
    }
    None
}

fn part_text(p: Prime, part: &ElemSet) -> Vec<String> {
    part.iter()
        .map(|i| GroupElement::from_index(p, i).text())
        .collect()
}

fn cmd_dual(input: &str, out: Option<String>) -> anyhow::Result<i32> {
    let sct = read_theory(input)?;
    let dual = sct.dual()?;
    write_out(out, &format!("{}\n", dual.to_json()))?;
    Ok(0)
}

fn cmd_lattice(
    a: &str,
    b: &str,
    out: Option<String>,
    expect: Option<String>,
    meet: bool,
) -> anyhow::Result<i32> {
    let sa = read_theory(a)?;
    let sb = read_theory(b)?;
    let result = if meet {
        sctheory::construct::sct_meet(&sa, &sb)?
    } else {
        sctheory::construct::sct_join(&sa, &sb)?
    };
    if let Some(expect) = expect {
        let expected = read_theory(&expect)?;
        if result == expected {
            println!("match");
            return Ok(0);
        }
        println!("mismatch");
        return Ok(EXIT_COUNTEREXAMPLE);
    }
    write_out(out, &format!("{}\n", result.to_json()))?;
    Ok(0)
}

fn parse_primes(spec: &str) -> anyhow::Result<Vec<u64>> {
    fn is_prime(n: u64) -> bool {
        n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
    }
    if let Some((lo, hi)) = spec.split_once("..") {
        let lo: u64 = lo.parse()?;
        let hi: u64 = hi.parse()?;
        return Ok((lo..=hi).filter(|&n| is_prime(n)).collect());
    }
    spec.split(',')
        .map(|s| s.trim().parse::<u64>().map_err(Into::into))
        .collect()
}

fn cmd_conjecture(which: ConjectureCmd) -> anyhow::Result<i32> {
    match which {
        ConjectureCmd::Reduction { primes, extended } => {
            let cap = if extended { 47 } else { 23 };
            let mut worst = 0;
            for q in parse_primes(&primes)? {
                if q > cap {
                    return Err(anyhow!(sctheory::Error::PrimeOutOfRange(q, cap)));
                }
                let report = conjecture::check_reduction(Prime::new(q)?);
                println!("{}", serde_json::to_string(&report)?);
                worst = worst.max(match report.verdict {
                    Verdict::Verified => 0,
                    Verdict::SkippedDegenerate => EXIT_SKIPPED,
                    Verdict::Counterexample => EXIT_COUNTEREXAMPLE,
                });
            }
            Ok(worst)
        }
        ConjectureCmd::ThreeSubs { prime } => {
            catalog_conjecture(prime, conjecture::check_three_subs)
        }
        ConjectureCmd::Coarse { prime } => {
            catalog_conjecture(prime, conjecture::check_coarse_theories)
        }
    }
}

fn catalog_conjecture(
    prime: u64,
    check: impl Fn(&Sct) -> conjecture::ConjectureReport,
) -> anyhow::Result<i32> {
    let p = Prime::new(prime)?;
    let catalog = Catalog::assemble(p)?;
    let mut counterexamples = 0usize;
    let mut name = String::new();
    for sct in &catalog.theories {
        let report = check(sct);
        name = report.conjecture.clone();
        if report.verdict == Verdict::Counterexample {
            counterexamples += 1;
            println!("{}", serde_json::to_string(&report)?);
        }
    }
    println!(
        "{}",
        serde_json::json!({
            "conjecture": name,
            "p": prime,
            "checked": catalog.theories.len(),
            "complete_catalog": catalog.complete,
            "counterexamples": counterexamples,
        })
    );
    Ok(if counterexamples > 0 { EXIT_COUNTEREXAMPLE } else { 0 })
}

fn cmd_count(prime: u64, format: Format) -> anyhow::Result<i32> {
    let p = Prime::new(prime)?;
    let star = counting::star_count(p);
    let direct = counting::direct_count(p);
    let cyclic = counting::cyclic_sct_count(p);
    let bell = counting::bell(p.get() as usize + 1);
    let shapes = counting::shapes(p.get() as u64 + 1);
    match format {
        Format::Json => {
            let shape_rows: Vec<serde_json::Value> = shapes
                .iter()
                .map(|s| {
                    serde_json::json!({
                        "shape": s.multiplicities,
                        "count": counting::shape_count(s, p).unwrap().to_string(),
                        "type": s.singletons(),
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::json!({
                    "p": prime,
                    "cyclic": cyclic,
                    "star": star,
                    "direct": direct,
                    "bell": bell.to_string(),
                    "shapes": shape_rows,
                })
            );
        }
        Format::Csv => {
            println!("shape,count,type");
            for s in &shapes {
                println!(
                    "{},{},{}",
                    shape_text(s),
                    counting::shape_count(s, p).unwrap(),
                    s.singletons()
                );
            }
        }
        Format::Pretty => {
            println!("p = {prime}");
            println!("cyclic theories: {cyclic}");
            println!("star products: {star}");
            println!("direct products (incl. finest): {direct}");
            println!("partition theories: {bell}");
            println!("{:<24} {:>12} {:>6}", "shape", "count", "type");
            for s in &shapes {
                println!(
                    "{:<24} {:>12} {:>6}",
                    shape_text(s),
                    counting::shape_count(s, p).unwrap().to_string(),
                    s.singletons()
                );
            }
        }
    }
    Ok(0)
}

/// `1^2+2^2` style shape notation.
fn shape_text(s: &counting::Shape) -> String {
    let terms: Vec<String> = s
        .multiplicities
        .iter()
        .enumerate()
        .filter(|(_, &n)| n > 0)
        .map(|(i, &n)| format!("{}^{}", i + 1, n))
        .collect();
    terms.join("+")
}

fn cmd_classify(prime: u64, format: Format) -> anyhow::Result<i32> {
    let p = Prime::new(prime)?;
    let catalog = Catalog::assemble(p)?;
    let rows: Vec<table::Row> = catalog
        .classify()
        .into_iter()
        .map(|r| table::Row {
            prime,
            type_n: r.type_n as u64,
            product: r.product,
            automorphic: r.automorphic,
            partition: r.partition,
            total: r.total,
        })
        .collect();
    print!("{}", table::render(&rows, matches!(format, Format::Csv | Format::Json).then(|| format == Format::Csv)));
    Ok(0)
}
