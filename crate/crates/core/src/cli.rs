//! Command-line front end. The `nomination` binary only forwards to [`run`].
//!
//! Exit codes: 0 yes (or success), 1 no (or a witness that fails), 2 a budget,
//! precondition or generator failure, 3 malformed input or usage.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::election::{copeland_scores, maximin_scores, winners, Election, NominationInstance, Rule};
use crate::error::{Error, Result};
use crate::flat::generate_flat;
use crate::io::{
    election_to_json, instance_to_json, parse_election, parse_instance, parse_witness, witness_to_json, Metadata,
};
use crate::reductions::{
    gen_3col_copeland_2v, gen_3col_llull_4v, gen_3sat_maximin_4v, gen_3sat_maximin_5v, gen_mcq_copeland,
    gen_mmc_copeland_3v, mmc_normalize, Cnf, Graph, MmcInstance,
};
use crate::solvers::{dispatch, solve_with, verify_nomination, Algorithm, Decision, SolverConfig};
use crate::Alpha;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;
pub const EXIT_MALFORMED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "nomination", version, about = "Possible President under Copeland^alpha and Maximin")]
struct Cli {
    /// Print a JSON run report on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for the solvers (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Co-winners and per-candidate scores of an election.
    Winners {
        file: PathBuf,
        /// copeland:<alpha>, copeland, llull or maximin.
        #[arg(long)]
        rule: Rule,
    },
    /// Decide whether the distinguished party can nominate the unique winner.
    Solve(SolveArgs),
    /// Write a generated election.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Check a witness nomination against an instance.
    Verify {
        instance: PathBuf,
        witness: PathBuf,
        #[arg(long)]
        rule: Rule,
    },
}

#[derive(Args, Debug)]
struct SolveArgs {
    file: PathBuf,
    #[arg(long)]
    rule: Rule,
    #[arg(long, value_enum, default_value_t = AlgorithmArg::Auto)]
    algorithm: AlgorithmArg,
    /// Largest number of nominations the exhaustive solver may search.
    #[arg(long, default_value_t = 1 << 24)]
    budget: u128,
    /// Largest party count for the Maximin parameterized solver.
    #[arg(long, default_value_t = 8)]
    fpt_parties: usize,
    /// Accept any verified witness instead of the first in branch order.
    #[arg(long)]
    any_witness: bool,
    /// Also write the witness to this file.
    #[arg(long)]
    witness_out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum AlgorithmArg {
    Auto,
    Brute,
    Llull2v,
    Maximin2v,
    Maximin3v,
    MaximinFpt,
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// The flat three-voter election on 3^q candidates.
    Flat {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// An instance produced by one of the hardness reductions.
    Reduce {
        #[arg(long, value_enum)]
        from: Source,
        #[arg(long = "in")]
        input: PathBuf,
        /// Tie weight for `mcq`, as "p/q", "0" or "1".
        #[arg(long)]
        alpha: Option<Alpha>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Source {
    #[value(name = "3col2v")]
    Col2v,
    #[value(name = "3col4v")]
    Col4v,
    Mcq,
    #[value(name = "3sat4v")]
    Sat4v,
    #[value(name = "3sat5v")]
    Sat5v,
    #[value(name = "mmc3v")]
    Mmc3v,
    MmcNormalize,
}

impl Source {
    fn tag(self) -> &'static str {
        match self {
            Source::Col2v => "3col2v",
            Source::Col4v => "3col4v",
            Source::Mcq => "mcq",
            Source::Sat4v => "3sat4v",
            Source::Sat5v => "3sat5v",
            Source::Mmc3v => "mmc3v",
            Source::MmcNormalize => "mmc-normalize",
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Stats {
    pub voters: usize,
    pub candidates: usize,
    pub parties: usize,
    pub max_party_size: usize,
}

impl Stats {
    fn of(inst: &NominationInstance) -> Self {
        Stats {
            voters: inst.election().num_voters(),
            candidates: inst.election().num_candidates(),
            parties: inst.num_parties(),
            max_party_size: inst.max_party_size(),
        }
    }

    fn of_election(e: &Election) -> Self {
        Stats {
            voters: e.num_voters(),
            candidates: e.num_candidates(),
            parties: e.num_candidates(),
            max_party_size: 1,
        }
    }
}

/// What one command did, printed as JSON under `--json`.
#[derive(Serialize, Debug, Clone, Default)]
pub struct RunReport {
    pub command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decision: Option<Decision>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algorithm: Option<String>,
    pub wall_time_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<Stats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub winners: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scores: Option<BTreeMap<String, String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub exit_code: i32,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Precondition(_)
        | Error::TooLarge { .. }
        | Error::Budget(_)
        | Error::Generator(_)
        | Error::MaximinUndefined => EXIT_FAILURE,
        _ => EXIT_MALFORMED,
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_YES };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let mut report = RunReport {
        command: args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect(),
        ..RunReport::default()
    };
    let start = Instant::now();
    // A generated document meant for stdout comes back in `doc`.
    let mut doc = None;
    let outcome = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&cli.command, &mut report, cli.json, &mut doc)),
            Err(e) => Err(Error::Precondition(format!("cannot start {n} threads: {e}"))),
        },
        None => execute(&cli.command, &mut report, cli.json, &mut doc),
    };
    report.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    if let Some(text) = doc {
        let _ = out.write_all(text.as_bytes());
    }
    report.exit_code = match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            report.error = Some(e.to_string());
            exit_code(&e)
        }
    };
    if cli.json {
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("serializable"));
    } else if report.error.is_none() {
        print_text(&report, out);
    }
    report.exit_code
}

fn print_text(r: &RunReport, out: &mut dyn Write) {
    let mut lines = Vec::new();
    if let Some(w) = &r.winners {
        lines.push(format!("winners: {}", w.join(" ")));
    }
    if let Some(scores) = &r.scores {
        lines.extend(scores.iter().map(|(c, s)| format!("score {c} {s}")));
    }
    if let Some(d) = r.decision {
        lines.push(format!("decision: {}", if d == Decision::Yes { "yes" } else { "no" }));
    }
    if let Some(a) = &r.algorithm {
        lines.push(format!("algorithm: {a}"));
    }
    if let Some(w) = &r.witness {
        lines.push(format!("witness: {}", w.join(" ")));
    }
    if let Some(o) = &r.output {
        lines.push(format!("wrote {o}"));
    }
    if r.decision.is_some() {
        if let Some(s) = &r.stats {
            lines.push(format!(
                "stats: n={} m={} t={} sigma={}",
                s.voters, s.candidates, s.parties, s.max_party_size
            ));
        }
        lines.push(format!("time: {:.3} ms", r.wall_time_ms));
    }
    for l in lines {
        let _ = writeln!(out, "{l}");
    }
}

fn execute(cmd: &Command, report: &mut RunReport, json: bool, doc: &mut Option<String>) -> Result<i32> {
    match cmd {
        Command::Winners { file, rule } => cmd_winners(file, *rule, report),
        Command::Solve(args) => cmd_solve(args, report),
        Command::Gen(g) => cmd_gen(g, report, json, doc),
        Command::Verify { instance, witness, rule } => cmd_verify(instance, witness, *rule, report),
    }
}

fn cmd_winners(file: &Path, rule: Rule, report: &mut RunReport) -> Result<i32> {
    let (e, _) = parse_election(&read(file)?)?;
    let scores: Vec<String> = match rule {
        Rule::Copeland(alpha) => copeland_scores(&e).into_iter().map(|s| s.render(alpha)).collect(),
        Rule::Maximin if e.num_candidates() == 1 => vec!["inf".into()],
        Rule::Maximin => maximin_scores(&e)?.into_iter().map(|s| s.to_string()).collect(),
    };
    report.winners = Some(winners(&e, rule).into_iter().map(|c| e.name(c).to_owned()).collect());
    report.scores = Some(e.candidates().iter().cloned().zip(scores).collect());
    report.stats = Some(Stats::of_election(&e));
    Ok(EXIT_YES)
}

fn cmd_solve(args: &SolveArgs, report: &mut RunReport) -> Result<i32> {
    let (inst, _) = parse_instance(&read(&args.file)?)?;
    report.stats = Some(Stats::of(&inst));
    let config = SolverConfig {
        max_combinations: args.budget,
        max_fpt_parties: args.fpt_parties,
        force: false,
        deterministic: !args.any_witness,
    };
    let algorithm = match args.algorithm {
        AlgorithmArg::Auto => None,
        AlgorithmArg::Brute => Some(Algorithm::BruteForce),
        AlgorithmArg::Llull2v => Some(Algorithm::Llull2v),
        AlgorithmArg::Maximin2v => Some(Algorithm::Maximin2v),
        AlgorithmArg::Maximin3v => Some(Algorithm::Maximin3v),
        AlgorithmArg::MaximinFpt => Some(Algorithm::MaximinFpt),
    };
    let result = match algorithm {
        None => dispatch(&inst, args.rule, &config)?,
        Some(a) => solve_with(&inst, args.rule, a, &config)?,
    };
    report.decision = Some(result.decision);
    report.algorithm = Some(result.algorithm.tag().into());
    let Some(w) = &result.witness else {
        return Ok(EXIT_NO);
    };
    if !verify_nomination(&inst, args.rule, w)? {
        return Err(Error::Precondition(format!(
            "{} returned a witness that does not verify",
            result.algorithm
        )));
    }
    report.witness = Some(w.iter().map(|&c| inst.election().name(c).to_owned()).collect());
    if let Some(path) = &args.witness_out {
        write(path, &witness_to_json(&inst, w))?;
    }
    Ok(EXIT_YES)
}

fn cmd_verify(instance: &Path, witness: &Path, rule: Rule, report: &mut RunReport) -> Result<i32> {
    let (inst, _) = parse_instance(&read(instance)?)?;
    let w = parse_witness(&inst, &read(witness)?)?;
    report.stats = Some(Stats::of(&inst));
    report.witness = Some(w.iter().map(|&c| inst.election().name(c).to_owned()).collect());
    let ok = verify_nomination(&inst, rule, &w)?;
    report.decision = Some(if ok { Decision::Yes } else { Decision::No });
    Ok(if ok { EXIT_YES } else { EXIT_NO })
}

fn cmd_gen(cmd: &GenCommand, report: &mut RunReport, json: bool, doc: &mut Option<String>) -> Result<i32> {
    let (text, dest) = match cmd {
        GenCommand::Flat { q, out } => {
            let e = generate_flat(*q)?;
            report.stats = Some(Stats::of_election(&e));
            let meta = Metadata::new("flat").with_param("q", q);
            (election_to_json(&e, Some(&meta)), out)
        }
        GenCommand::Reduce { from, input, alpha, out } => (reduce(*from, input, *alpha, report)?, out),
    };
    match dest {
        Some(path) => {
            write(path, &text)?;
            report.output = Some(path.display().to_string());
        }
        None if json => {
            return Err(Error::Precondition("--json with gen needs --out for the generated file".into()));
        }
        None => *doc = Some(text),
    }
    Ok(EXIT_YES)
}

fn reduce(from: Source, input: &Path, alpha: Option<Alpha>, report: &mut RunReport) -> Result<String> {
    let text = read(input)?;
    let mut meta = Metadata::new(from.tag()).with_source(text.as_bytes());
    if alpha.is_some() && from != Source::Mcq {
        return Err(Error::Precondition(format!("--alpha only applies to mcq, not {}", from.tag())));
    }
    let inst = match from {
        Source::Col2v => gen_3col_copeland_2v(&Graph::parse(&text)?)?,
        Source::Col4v => gen_3col_llull_4v(&Graph::parse(&text)?)?,
        Source::Mcq => {
            let alpha = alpha.unwrap_or(Alpha::ZERO);
            meta = meta.with_param("alpha", alpha);
            gen_mcq_copeland(&Graph::parse(&text)?, alpha)?
        }
        Source::Sat4v => gen_3sat_maximin_4v(&Cnf::parse_dimacs(&text)?)?,
        Source::Sat5v => gen_3sat_maximin_5v(&Cnf::parse_dimacs(&text)?)?,
        Source::Mmc3v => gen_mmc_copeland_3v(&MmcInstance::from_json(&text)?)?,
        Source::MmcNormalize => {
            let n = mmc_normalize(&MmcInstance::from_json(&text)?);
            meta = meta
                .with_param("padding", n.padding)
                .with_param("rule_applications", n.applications.len())
                .with_param("rejected", n.rejected);
            return Ok(n.instance.to_json_with(Some(&meta)) + "\n");
        }
    };
    report.stats = Some(Stats::of(&inst));
    Ok(instance_to_json(&inst, Some(&meta)))
}
