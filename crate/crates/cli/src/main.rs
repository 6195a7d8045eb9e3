use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use polar_core::catalog::{families, family_member, is_minimal_obstruction_cotree, pc_classes, Catalog};
use polar_core::certify::{certify, certify_with_oracle, validate_certificate};
use polar_core::cograph::{enumerate_cographs, MAX_ENUMERATION_ORDER};
use polar_core::expr::{eval_expr, parse_expr};
use polar_core::graph::{from_edge_list, from_graph6, to_graph6};
use polar_core::verify::{check_ids, run_check, Level, Report};
use polar_core::Graph;
use serde_json::json;

/// Exit code for I/O, parse and usage errors; 0 to 2 carry certificate outcomes.
const ERROR_EXIT: u8 = 3;

#[derive(Parser)]
#[command(name = "polar", version, about = "Certifying recognition of (s,k)-polar cographs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide (s,k)-polarity of one graph and print a JSON certificate.
    ///
    /// Exit code 0 means polar, 1 obstruction, 2 not a cograph.
    Certify {
        /// Input file; standard input when omitted.
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "g6")]
        format: Format,
        #[arg(long, default_value_t = 2)]
        s: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Use exhaustive search instead of the cotree dynamic program
        /// (at most 12 vertices, accepts non-cographs).
        #[arg(long)]
        oracle: bool,
    },
    /// List the obstruction catalog (k = 2) or the family members at k.
    Catalog {
        #[arg(long, default_value_t = 2)]
        k: i64,
        /// Only entries with more than one component.
        #[arg(long)]
        disconnected: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print every cograph on N vertices as graph6, one per line.
    Enumerate {
        n: usize,
        /// Keep only minimal (s,k)-polar obstructions.
        #[arg(long)]
        filter_obstructions: bool,
        #[arg(long, default_value_t = 2)]
        s: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Partial-complementation classes of the given seeds.
    ///
    /// A seed is a catalog id, an expression (evaluated at --k) or graph6.
    Closure {
        #[arg(required = true)]
        seeds: Vec<String>,
        #[arg(long, default_value_t = 2)]
        k: i64,
        #[arg(long)]
        json: bool,
    },
    /// Re-run the verification suite; exits nonzero if any check fails.
    Verify {
        #[arg(long, value_enum, default_value = "fast")]
        level: LevelArg,
        /// Run only these checks (repeatable).
        #[arg(long = "check")]
        checks: Vec<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    G6,
    El,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Fast,
    Full,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(ERROR_EXIT) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(ERROR_EXIT)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Certify { file, format, s, k, oracle } => cmd_certify(file, format, s, k, oracle),
        Command::Catalog { k, disconnected, json } => cmd_catalog(k, disconnected, json),
        Command::Enumerate { n, filter_obstructions, s, k } => cmd_enumerate(n, filter_obstructions.then_some((s, k))),
        Command::Closure { seeds, k, json } => cmd_closure(&seeds, k, json),
        Command::Verify { level, checks, json } => cmd_verify(level, checks, json),
    }
}

fn read_input(file: Option<PathBuf>) -> Result<String> {
    match file {
        Some(path) => std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display())),
        None => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text).context("reading standard input")?;
            Ok(text)
        }
    }
}

fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    Ok(match format {
        Format::G6 => {
            let line = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
            from_graph6(line)?
        }
        Format::El => from_edge_list(text)?,
    })
}

fn cmd_certify(file: Option<PathBuf>, format: Format, s: usize, k: usize, oracle: bool) -> Result<u8> {
    let graph = parse_graph(&read_input(file)?, format)?;
    let catalog = Catalog::load()?;
    let cert = if oracle { certify_with_oracle(&graph, s, k, &catalog)? } else { certify(&graph, s, k, &catalog) };
    if let Err(e) = validate_certificate(&graph, s, k, &cert, &catalog) {
        bail!("internal error: certificate failed validation: {e}");
    }
    println!("{}", serde_json::to_string(&cert)?);
    Ok(cert.exit_code() as u8)
}

fn cmd_catalog(k: i64, disconnected: bool, json: bool) -> Result<u8> {
    let mut out = io::stdout().lock();
    if k == 2 {
        let catalog = Catalog::load()?;
        let entries: Vec<_> = catalog.entries().iter().filter(|e| !disconnected || !e.is_connected()).collect();
        if json {
            writeln!(out, "{}", serde_json::to_string_pretty(&entries)?)?;
        } else {
            for e in entries {
                let expression = e.expression.as_deref().unwrap_or("derived");
                writeln!(out, "{}\t{}\t{}\t{}\t{}", e.id, expression, e.graph6, e.order, e.generator)?;
            }
        }
        return Ok(0);
    }
    if k < 2 {
        bail!("k must be at least 2");
    }
    let mut rows = Vec::new();
    for family in families() {
        let g = family_member(family.index, k)?;
        if disconnected && g.is_connected() {
            continue;
        }
        rows.push((family, to_graph6(&g), g.order()));
    }
    if json {
        let list: Vec<_> = rows
            .iter()
            .map(|(f, g6, n)| json!({"id": f.id, "expression": f.text, "graph6": g6, "order": n}))
            .collect();
        writeln!(out, "{}", serde_json::to_string_pretty(&json!({"k": k, "complete": false, "entries": list}))?)?;
    } else {
        for (f, g6, n) in rows {
            writeln!(out, "{}\t{}\t{}\t{}\tincomplete list", f.id, f.text, g6, n)?;
        }
    }
    Ok(0)
}

fn cmd_enumerate(n: usize, filter: Option<(usize, usize)>) -> Result<u8> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        bail!("n must be between 1 and {MAX_ENUMERATION_ORDER}");
    }
    let mut out = io::BufWriter::new(io::stdout().lock());
    for t in enumerate_cographs(n) {
        if filter.is_none_or(|(s, k)| is_minimal_obstruction_cotree(&t, s, k)) {
            writeln!(out, "{}", to_graph6(&t.to_graph()))?;
        }
    }
    out.flush()?;
    Ok(0)
}

fn parse_seed(seed: &str, k: i64, catalog: &Catalog) -> Result<Graph> {
    if let Some(entry) = catalog.get(seed) {
        return Ok(entry.graph.clone());
    }
    if let Ok(e) = parse_expr(seed) {
        return Ok(eval_expr(&e, k)?);
    }
    from_graph6(seed).with_context(|| format!("seed {seed:?} is not a catalog id, expression or graph6"))
}

fn cmd_closure(seeds: &[String], k: i64, json: bool) -> Result<u8> {
    let catalog = Catalog::load()?;
    let graphs = seeds.iter().map(|s| parse_seed(s, k, &catalog)).collect::<Result<Vec<_>>>()?;
    let classes = pc_classes(&graphs)?;
    let total: usize = classes.iter().map(|c| c.members.len()).sum();
    let mut out = io::stdout().lock();
    let id_of = |g: &Graph| catalog.identify(g).unwrap_or("-").to_string();
    if json {
        let list: Vec<_> = classes
            .iter()
            .map(|c| {
                let members: Vec<_> = c
                    .members
                    .iter()
                    .map(|g| json!({"id": id_of(g), "graph6": to_graph6(g), "order": g.order()}))
                    .collect();
                json!({"generator": seeds[c.seed], "members": members})
            })
            .collect();
        writeln!(out, "{}", serde_json::to_string_pretty(&json!({"total": total, "classes": list}))?)?;
    } else {
        for c in &classes {
            writeln!(out, "# class of {} ({} members)", seeds[c.seed], c.members.len())?;
            for g in &c.members {
                writeln!(out, "{}\t{}\t{}\t{}", id_of(g), to_graph6(g), g.order(), seeds[c.seed])?;
            }
        }
        writeln!(out, "# {total} members in {} classes", classes.len())?;
    }
    Ok(0)
}

fn cmd_verify(level: LevelArg, checks: Vec<String>, json: bool) -> Result<u8> {
    let level = match level {
        LevelArg::Fast => Level::Fast,
        LevelArg::Full => Level::Full,
    };
    let ids: Vec<String> = if checks.is_empty() { check_ids().iter().map(|s| s.to_string()).collect() } else { checks };
    let catalog = match Catalog::load() {
        Ok(c) => c,
        Err(e) => {
            println!("catalog FAIL: {e}");
            return Ok(1);
        }
    };
    let mut report = Report { level, checks: Vec::new() };
    for id in &ids {
        let outcome = run_check(id, level, &catalog).with_context(|| {
            format!("unknown check {id:?}; known: {}", check_ids().join(", "))
        })?;
        if !json {
            let verdict = if outcome.passed { "PASS" } else { "FAIL" };
            println!("{:<8} {verdict} [{:.2}s] {}: {}", outcome.id, outcome.seconds, outcome.title, outcome.detail);
        }
        report.checks.push(outcome);
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        let failed: Vec<&str> = report.checks.iter().filter(|c| !c.passed).map(|c| c.id).collect();
        if failed.is_empty() {
            println!("all checks passed");
        } else {
            println!("failed: {}", failed.join(", "));
        }
    }
    Ok(if report.passed() { 0 } else { 1 })
}
