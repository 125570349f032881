mod args;
mod ledger;
mod lists;
mod render;
mod report;
mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::Parser;
use serde_json::json;
use supercong::analytic::eta_q_expansion;
use supercong::search::{search_cubic, search_quadratic, IntRange};
use supercong::sequences::{eval_catalog, SequenceCache, SequenceId};
use supercong::Exec;

use args::{Cli, Command, Format, Global, Model};
use ledger::Entry;

/// Exit status for failed checks; errors of any kind exit with 2.
const EXIT_FAILED: u8 = 1;
const EXIT_ERROR: u8 = 2;

fn executor(g: &Global) -> Result<Exec> {
    match g.jobs {
        Some(1) => Ok(Exec::Sequential),
        #[cfg(feature = "parallel")]
        Some(n) => {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n as usize)
                .build_global()
                .map_err(|e| anyhow!("configuring {n} workers: {e}"))?;
            Ok(Exec::Parallel)
        }
        #[cfg(not(feature = "parallel"))]
        Some(_) => Ok(Exec::Sequential),
        None => Ok(Exec::default()),
    }
}

fn sink(g: &Global) -> Result<Box<dyn Write>> {
    Ok(match &g.output {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn record(g: &Global, entries: &[Entry]) -> Result<()> {
    if let Some(path) = &g.ledger {
        ledger::append(path, entries)?;
    }
    Ok(())
}

fn parse_sequence(name: &str) -> Result<SequenceId> {
    name.parse().map_err(|e| {
        let names: Vec<&str> = SequenceId::catalog_names().collect();
        anyhow!(
            "{e}\ncatalog: {}\nfamilies: S:a,b,c  T:a,b,c,d,e  U:eps,a,b",
            names.join(", ")
        )
    })
}

fn compute(g: &Global, a: &args::ComputeArgs, exec: Exec) -> Result<u8> {
    let id = parse_sequence(&a.sequence)?;
    let ns = lists::parse_u64_list(&a.n)?;
    let values = match &g.cache_dir {
        Some(dir) => SequenceCache::new(dir)?.values(id, &ns)?,
        None => exec.map(&ns, |&n| eval_catalog(id, n)),
    };
    let mut out = sink(g)?;
    match g.format.unwrap_or(Format::Text) {
        Format::Text => {
            for (n, v) in ns.iter().zip(&values) {
                writeln!(out, "{n}\t{v}")?;
            }
        }
        Format::Csv => {
            writeln!(out, "n,value")?;
            for (n, v) in ns.iter().zip(&values) {
                writeln!(out, "{n},{v}")?;
            }
        }
        Format::Json => {
            for (n, v) in ns.iter().zip(&values) {
                writeln!(
                    out,
                    "{}",
                    json!({"n": n, "sequence": id.to_string(), "value": v.to_string()})
                )?;
            }
        }
    }
    out.flush()?;
    Ok(0)
}

fn verify_cmd(g: &Global, a: &args::VerifyArgs, exec: Exec) -> Result<u8> {
    let entries = verify::run(a, g.deep, exec)?;
    record(g, &entries)?;
    let mut out = sink(g)?;
    let format = g.format.unwrap_or(Format::Text);
    render::write_entries(&mut out, &entries, format)?;
    let failed = entries.iter().filter(|e| !e.pass()).count();
    let fatal = entries.iter().filter(|e| e.is_fatal(g.strict)).count();
    let extra = verify::run_level_failures(a, &entries);
    let summary = format!("{} checks, {failed} failed, {fatal} fatal", entries.len());
    if format == Format::Text {
        for x in &extra {
            writeln!(out, "FAIL {x}")?;
        }
        writeln!(out, "{summary}")?;
    } else {
        for x in &extra {
            eprintln!("FAIL {x}");
        }
        eprintln!("{summary}");
    }
    out.flush()?;
    Ok(if fatal == 0 && extra.is_empty() {
        0
    } else {
        EXIT_FAILED
    })
}

fn search_cmd(g: &Global, a: &args::SearchArgs, exec: Exec) -> Result<u8> {
    let hits = match a.model {
        Model::Cubic => {
            let c = a.c.unwrap_or(IntRange { lo: -200, hi: 200 });
            search_cubic(a.a, a.b, c, a.d, a.nmax, g.deep, exec)?
        }
        Model::Quadratic => {
            let c = a.c.unwrap_or(IntRange { lo: -100, hi: 100 });
            search_quadratic(a.a, a.b, c, a.nmax, g.deep, exec)?
        }
    };
    let entries: Vec<Entry> = hits.into_iter().map(Entry::SearchHit).collect();
    record(g, &entries)?;
    let mut out = sink(g)?;
    render::write_entries(&mut out, &entries, g.format.unwrap_or(Format::Json))?;
    out.flush()?;
    Ok(0)
}

fn eta_cmd(g: &Global, a: &args::EtaArgs) -> Result<u8> {
    let e = eta_q_expansion(a.nmax.max(1));
    let mut out = sink(g)?;
    let coeffs = &e.coefficients()[..=a.nmax];
    match g.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            writeln!(out, "n,a(n)")?;
            for (n, c) in coeffs.iter().enumerate() {
                writeln!(out, "{n},{c}")?;
            }
        }
        Format::Text => {
            for (n, c) in coeffs.iter().enumerate() {
                writeln!(out, "{n}\t{c}")?;
            }
        }
        Format::Json => {
            for (n, c) in coeffs.iter().enumerate() {
                writeln!(out, "{}", json!({"a": c.to_string(), "n": n}))?;
            }
        }
    }
    out.flush()?;
    Ok(0)
}

fn report_cmd(g: &Global, a: &args::ReportArgs) -> Result<u8> {
    let text = std::fs::read_to_string(&a.ledger_file)
        .with_context(|| format!("reading {}", a.ledger_file.display()))?;
    let rep = report::build(&text, g.strict);
    let mut out = sink(g)?;
    report::write(&mut out, &rep, g.format.unwrap_or(Format::Text))?;
    out.flush()?;
    Ok(0)
}

fn run(cli: Cli) -> Result<u8> {
    let exec = executor(&cli.global)?;
    let g = &cli.global;
    match &cli.command {
        Command::Compute(a) => compute(g, a, exec),
        Command::Verify(a) => verify_cmd(g, a, exec),
        Command::Search(a) => search_cmd(g, a, exec),
        Command::Eta(a) => eta_cmd(g, a),
        Command::Report(a) => report_cmd(g, a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
