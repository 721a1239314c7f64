use std::collections::BTreeSet;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::sync::Arc;

use monodromy_core::enumerate::{
    analyze, brute_force_oracle, enumerate_parallel, enumerate_parallel_with, Orbit, DEGREE_CAP, MIN_DEGREE,
    ORACLE_MAX_DEGREE,
};
use monodromy_core::perm::MAX_DEGREE;
use monodromy_core::{existence_verdict, invariants_for, EnumerationResult, SearchOptions, SolutionTuple};

use crate::args::{Cli, Command, Format, RunArgs};
use crate::report::{table_text, write_json, write_records, OracleRow, OrbitRow, SolutionLine, SolutionRow, TableRow};
use crate::CliError;

/// Degrees from which a search needs `--confirm-long`.
pub const LONG_DEGREE: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    /// The oracle disagreed with the pruned search.
    Mismatch,
}

struct Context {
    workers: usize,
    opts: SearchOptions,
    collect: bool,
}

impl Context {
    fn options_for(&self, n: usize) -> SearchOptions {
        let mut opts = self.opts.clone();
        if n >= LONG_DEGREE {
            opts.progress = Some(Arc::new(move |done, total| eprintln!("n={n}: {done}/{total} slices")));
        }
        opts
    }

    fn summarize(&self, n: usize) -> Result<(EnumerationResult, Vec<Orbit>), CliError> {
        let opts = self.options_for(n);
        if !self.collect {
            return Ok((enumerate_parallel(n, self.workers, &opts)?, Vec::new()));
        }
        let mut found = Vec::new();
        let mut result = enumerate_parallel_with(n, self.workers, &opts, &mut |t| found.push(*t))?;
        let orbits = analyze(&mut result, &found)?;
        Ok((result, orbits))
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn validate(command: &Command) -> Result<Context, CliError> {
    let args = command.args();
    let name = command.name();
    if args.seed.is_some() {
        return Err(usage("--seed is not accepted: every computation is deterministic"));
    }
    let max = match command {
        Command::Oracle(_) => ORACLE_MAX_DEGREE,
        _ if args.allow_large => MAX_DEGREE,
        _ => DEGREE_CAP,
    };
    if args.n.start < MIN_DEGREE || args.n.end > max {
        let hint = if matches!(command, Command::Oracle(_)) || args.allow_large { "" } else { " (see --allow-large)" };
        return Err(usage(format!("{name}: --n {} outside {MIN_DEGREE}..{max}{hint}", args.n)));
    }
    if matches!(command, Command::Count(_) | Command::Orbits(_) | Command::List(_)) && args.n.single().is_none() {
        return Err(usage(format!("{name} takes a single degree, got {}", args.n)));
    }
    let searches = !matches!(command, Command::Invariants(_) | Command::Oracle(_));
    if searches && args.n.end >= LONG_DEGREE && !args.confirm_long {
        return Err(usage(format!("{name}: degree {} can run for minutes or more; pass --confirm-long", args.n.end)));
    }
    let workers = args.workers.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |w| w.get()));
    Ok(Context {
        workers,
        opts: SearchOptions { allow_large: args.allow_large, progress: None },
        collect: args.collect || matches!(command, Command::Orbits(_)),
    })
}

fn open_output(args: &RunArgs) -> Result<Box<dyn Write>, CliError> {
    match &args.out {
        Some(path) => {
            let file =
                File::create(path).map_err(|source| CliError::Output { path: path.display().to_string(), source })?;
            Ok(Box::new(BufWriter::new(file)))
        }
        None => Ok(Box::new(BufWriter::new(io::stdout().lock()))),
    }
}

/// Runs one command, writing its artifact to `--out` or standard output.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let ctx = validate(&cli.command)?;
    let args = cli.command.args();
    let mut out = open_output(args)?;
    let outcome = match &cli.command {
        Command::Count(_) => count(&ctx, args, &mut out),
        Command::Table(_) => table(&ctx, args, &mut out),
        Command::Orbits(_) => orbits(&ctx, args, &mut out),
        Command::List(_) => list(&ctx, args, &mut out),
        Command::Oracle(_) => oracle(args, &mut out),
        Command::Invariants(_) => invariants(args, &mut out),
    }?;
    out.flush()?;
    Ok(outcome)
}

fn count(ctx: &Context, args: &RunArgs, w: &mut dyn Write) -> Result<Outcome, CliError> {
    let n = args.n.start;
    let (result, _) = ctx.summarize(n)?;
    match args.format {
        Format::Json => write_json(&result, w)?,
        Format::Csv => write_records(&[TableRow::new(&result, &invariants_for(n).expect("n >= 2"))], Format::Csv, w)?,
        Format::Text => {
            writeln!(w, "n = {n}")?;
            writeln!(w, "fixed-sigma solutions: {}", result.fixed_count)?;
            writeln!(w, "transpositions: {}", result.transpositions)?;
            writeln!(w, "total: {}", result.total_count)?;
            if let (Some(orbits), Some(sizes)) = (result.orbit_count, &result.orbit_size_histogram) {
                let sizes: Vec<String> = sizes.iter().map(|(s, c)| format!("{c} of size {s}")).collect();
                writeln!(w, "orbits: {orbits} ({})", sizes.join(", "))?;
            }
            if let Some(images) = &result.image_histogram {
                let images: Vec<String> = images.iter().map(|(name, c)| format!("{name} x {c}")).collect();
                writeln!(w, "image groups: {}", images.join(", "))?;
            }
            let verdict = existence_verdict(n, &result).expect("result is for n");
            writeln!(w, "{}", verdict.summary)?;
        }
    }
    Ok(Outcome::Success)
}

fn table(ctx: &Context, args: &RunArgs, w: &mut dyn Write) -> Result<Outcome, CliError> {
    let mut rows = Vec::new();
    for n in args.n.iter() {
        let (result, _) = ctx.summarize(n)?;
        rows.push(TableRow::new(&result, &invariants_for(n).expect("n >= 2")));
    }
    match args.format {
        Format::Text => table_text(&rows, w)?,
        f => write_records(&rows, f, w)?,
    }
    Ok(Outcome::Success)
}

fn orbits(ctx: &Context, args: &RunArgs, w: &mut dyn Write) -> Result<Outcome, CliError> {
    let n = args.n.start;
    let (result, orbits) = ctx.summarize(n)?;
    let rows: Vec<OrbitRow> = orbits.iter().enumerate().map(|(i, o)| OrbitRow::new(i + 1, o)).collect();
    match args.format {
        Format::Text => {
            writeln!(w, "n = {n}: {} orbits, {} solutions", rows.len(), result.total_count)?;
            for r in &rows {
                writeln!(
                    w,
                    "{:>5}  {} {} {} {} {}  fixed {} full {}  {}",
                    r.index, r.sigma, r.a1, r.a2, r.b1, r.b2, r.fixed_size, r.full_size, r.image
                )?;
            }
        }
        f => write_records(&rows, f, w)?,
    }
    Ok(Outcome::Success)
}

enum ListSink<'a> {
    Csv(Box<csv::Writer<&'a mut dyn Write>>),
    Json(&'a mut dyn Write),
    Text(&'a mut dyn Write),
}

impl ListSink<'_> {
    fn emit(&mut self, t: &SolutionTuple) -> Result<(), CliError> {
        let line = SolutionLine::new(t);
        match self {
            ListSink::Csv(out) => out.serialize(SolutionRow::from(&line))?,
            ListSink::Json(w) => {
                serde_json::to_writer(&mut **w, &line)?;
                writeln!(w)?;
            }
            ListSink::Text(w) => {
                writeln!(w, "{} {} {} {} {} {}", line.sigma, line.a1, line.a2, line.b1, line.b2, line.image.label())?
            }
        }
        Ok(())
    }

    fn finish(self) -> Result<(), CliError> {
        if let ListSink::Csv(mut out) = self {
            out.flush()?;
        }
        Ok(())
    }
}

fn list(ctx: &Context, args: &RunArgs, w: &mut dyn Write) -> Result<Outcome, CliError> {
    let n = args.n.start;
    let mut sink = match args.format {
        Format::Csv => ListSink::Csv(Box::new(csv::Writer::from_writer(w))),
        Format::Json => ListSink::Json(w),
        Format::Text => ListSink::Text(w),
    };
    let mut failure = None;
    enumerate_parallel_with(n, ctx.workers, &ctx.options_for(n), &mut |t| {
        if failure.is_none() {
            failure = sink.emit(t).err();
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => {
            sink.finish()?;
            Ok(Outcome::Success)
        }
    }
}

fn oracle(args: &RunArgs, w: &mut dyn Write) -> Result<Outcome, CliError> {
    let mut rows = Vec::new();
    for n in args.n.iter() {
        let (_, expected) = brute_force_oracle(n)?;
        let mut found = Vec::new();
        enumerate_parallel_with(n, 1, &SearchOptions::default(), &mut |t| found.push(*t))?;
        let a: BTreeSet<SolutionTuple> = expected.into_iter().collect();
        let b: BTreeSet<SolutionTuple> = found.into_iter().collect();
        rows.push(OracleRow {
            n,
            oracle_count: a.len() as u64,
            pruned_count: b.len() as u64,
            only_in_oracle: a.difference(&b).count() as u64,
            only_in_pruned: b.difference(&a).count() as u64,
            matched: a == b,
        });
    }
    match args.format {
        Format::Text => {
            for r in &rows {
                if args.n.single().is_some() {
                    writeln!(w, "{}", r.line())?;
                } else {
                    writeln!(w, "n = {}: {}", r.n, r.line())?;
                }
            }
        }
        f => write_records(&rows, f, w)?,
    }
    Ok(if rows.iter().all(|r| r.matched) { Outcome::Success } else { Outcome::Mismatch })
}

fn invariants(args: &RunArgs, w: &mut dyn Write) -> Result<Outcome, CliError> {
    let rows: Vec<_> = args.n.iter().map(|n| invariants_for(n).expect("n >= 2")).collect();
    match args.format {
        Format::Text => {
            writeln!(
                w,
                "{:>3} {:>4} {:>4} {:>4} {:>5} {:>7} {:>4} {:>7} {:>4} {:>4} {:>4} {:>5} {:>8}  {:<13} z_reducible",
                "n",
                "chi",
                "K2",
                "c2",
                "pa_z",
                "Gamma2",
                "Z2",
                "GammaZ",
                "R2",
                "RZ",
                "RR0",
                "R0_2",
                "GammaR0",
                "general_type"
            )?;
            for i in &rows {
                writeln!(
                    w,
                    "{:>3} {:>4} {:>4} {:>4} {:>5} {:>7} {:>4} {:>7} {:>4} {:>4} {:>4} {:>5} {:>8}  {:<13} {}",
                    i.n,
                    i.chi,
                    i.k2,
                    i.c2,
                    i.pa_z,
                    i.gamma2,
                    i.z2,
                    i.gamma_z,
                    i.r2,
                    i.rz,
                    i.rr0,
                    i.r0_2,
                    i.gamma_r0,
                    i.general_type,
                    i.z_reducible_forced
                )?;
            }
        }
        f => write_records(&rows, f, w)?,
    }
    Ok(Outcome::Success)
}
