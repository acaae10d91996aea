use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pillar_core::braid::{
    is_trivial_braid_within, psi_action_within, verify_artin_restriction, verify_psi_relations_within,
};
use pillar_core::mcg::{
    pillar_switching_action, pillar_switching_inverse, replay_proof_chains, verify_basis_change,
    verify_relator_invariance, verify_twist_factorizations_within, TwistWord, VerificationReport,
};
use pillar_core::{Basis, BraidWord, Error, FreeEndomorphism, Word, DEFAULT_BUDGET};
use rayon::prelude::*;
use serde_json::json;

#[derive(Parser)]
#[command(name = "pillar", version)]
#[command(about = "Verify pillar-switching, Dehn-twist and braid identities on surface groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification checks over a range of genera
    Verify(VerifyArgs),
    /// Apply a mapping class to a word in x1..xg, y1..yg
    Act(ActArgs),
    /// Decide whether a braid word is trivial (exit 0) or not (exit 1)
    BraidTrivial(BraidArgs),
    /// Print the generator images of a mapping class
    Export(ExportArgs),
}

#[derive(Args)]
struct Common {
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Worker threads for independent checks
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
    /// Longest total image length any intermediate map may reach
    #[arg(long, default_value_t = DEFAULT_BUDGET as u64, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Seed for randomized checks
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// A genus `N` or an inclusive range `A..B`
    #[arg(long, value_parser = parse_range)]
    genus: (u32, u32),
    /// Checks to run (repeatable)
    #[arg(long, value_enum, required_unless_present = "all")]
    which: Vec<Check>,
    /// Run every check
    #[arg(long, conflicts_with = "which")]
    all: bool,
    /// Random words per basis for the yz round trip
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
enum Check {
    #[value(alias = "thm22")]
    Factorization,
    Chains,
    Relations,
    Relator,
    ArtinRestriction,
    YzRoundtrip,
}

impl Check {
    fn name(self) -> &'static str {
        match self {
            Check::Factorization => "factorization",
            Check::Chains => "chains",
            Check::Relations => "relations",
            Check::Relator => "relator",
            Check::ArtinRestriction => "artin-restriction",
            Check::YzRoundtrip => "yz-roundtrip",
        }
    }

    fn min_genus(self) -> u32 {
        match self {
            Check::Relator | Check::YzRoundtrip => 1,
            _ => 2,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Object {
    TwistWord,
    Sigma,
    BraidPsi,
}

#[derive(Args)]
struct ActArgs {
    #[arg(value_enum)]
    object: Object,
    /// Twist word, sigma index (optionally `^-1`) or braid word
    definition: String,
    #[arg(long)]
    genus: u32,
    /// Word to act on
    #[arg(long)]
    on: String,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct BraidArgs {
    word: String,
    #[arg(long)]
    strands: u32,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(value_enum)]
    object: Object,
    definition: String,
    #[arg(long)]
    genus: u32,
    #[command(flatten)]
    common: Common,
}

fn parse_range(text: &str) -> Result<(u32, u32), String> {
    let bad = |_| format!("expected a genus `N` or range `A..B`, got `{text}`");
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(bad)?, b.trim_start_matches('=').trim().parse().map_err(bad)?),
        None => {
            let n = text.trim().parse().map_err(bad)?;
            (n, n)
        }
    };
    if lo == 0 || lo > hi {
        return Err(format!("genus range `{text}` must satisfy 1 <= A <= B"));
    }
    Ok((lo, hi))
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } | Error::Json(_) => Failure::Runtime(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<ExitCode, Failure>;

fn pool(jobs: u64) -> Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new().num_threads(jobs as usize).build().map_err(|e| Failure::Runtime(e.to_string()))
}

fn run_check(check: Check, genus: u32, args: &VerifyArgs) -> pillar_core::Result<VerificationReport> {
    let budget = args.common.budget as usize;
    match check {
        Check::Factorization => verify_twist_factorizations_within(genus, budget),
        Check::Chains => replay_proof_chains(genus),
        Check::Relations => verify_psi_relations_within(genus, budget),
        Check::Relator => verify_relator_invariance(genus),
        Check::ArtinRestriction => verify_artin_restriction(genus),
        Check::YzRoundtrip => verify_basis_change(genus, args.samples, args.common.seed),
    }
}

fn cmd_verify(args: &VerifyArgs) -> Outcome {
    let mut checks = if args.all {
        vec![
            Check::Factorization,
            Check::Chains,
            Check::Relations,
            Check::Relator,
            Check::ArtinRestriction,
            Check::YzRoundtrip,
        ]
    } else {
        args.which.clone()
    };
    checks.sort();
    checks.dedup();
    let (lo, hi) = args.genus;
    for &c in &checks {
        if lo < c.min_genus() {
            return Err(Failure::Usage(format!("check `{}` needs genus at least {}", c.name(), c.min_genus())));
        }
    }
    let tasks: Vec<(Check, u32)> = checks.iter().flat_map(|&c| (lo..=hi).map(move |g| (c, g))).collect();
    let results: Vec<_> =
        pool(args.common.jobs)?.install(|| tasks.par_iter().map(|&(c, g)| run_check(c, g, args)).collect());

    let mut all = true;
    let mut out = Vec::new();
    for (&(check, genus), result) in tasks.iter().zip(results) {
        let report = match result {
            Ok(r) => r,
            Err(e @ Error::BudgetExceeded { .. }) => {
                all = false;
                if args.common.json {
                    out.push(json!({"check": check.name(), "genus": genus, "holds": false, "error": e.to_string()}));
                } else {
                    println!("FAIL {} g={genus}: {e}", check.name());
                }
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        let holds = report.holds();
        all &= holds;
        if args.common.json {
            let value = serde_json::to_value(&report).map_err(|e| Failure::Runtime(e.to_string()))?;
            out.push(json!({"check": check.name(), "genus": genus, "holds": holds, "report": value}));
        } else {
            let failed = report.failures().count();
            println!(
                "{} {} g={genus} ({} cases, {failed} failed)",
                if holds { "PASS" } else { "FAIL" },
                check.name(),
                report.cases.len()
            );
            for case in report.failures() {
                println!("  case {}", case.name);
                for m in &case.mismatches {
                    println!("    {}: got {} expected {}", m.generator, m.lhs, m.rhs);
                }
            }
        }
    }
    if args.common.json {
        let doc = json!({"holds": all, "results": out});
        println!("{}", serde_json::to_string_pretty(&doc).map_err(|e| Failure::Runtime(e.to_string()))?);
    } else {
        println!("{}", if all { "all checks hold" } else { "some checks FAILED" });
    }
    Ok(if all { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn sigma_definition(definition: &str, genus: u32) -> pillar_core::Result<FreeEndomorphism> {
    let trimmed = definition.trim();
    let (digits, inverse) = match trimmed.strip_suffix("^-1") {
        Some(d) => (d, true),
        None => (trimmed, false),
    };
    let index: u32 = digits.trim_start_matches("sigma").parse().map_err(|_| Error::Syntax {
        position: 0,
        message: format!("expected a pillar index such as `0` or `1^-1`, got `{definition}`"),
    })?;
    if inverse {
        pillar_switching_inverse(index, genus)
    } else {
        pillar_switching_action(index, genus)
    }
}

fn build(object: Object, definition: &str, genus: u32, budget: usize) -> pillar_core::Result<FreeEndomorphism> {
    match object {
        Object::TwistWord => TwistWord::parse(definition, genus)?.evaluate_within(budget),
        Object::Sigma => sigma_definition(definition, genus),
        Object::BraidPsi => psi_action_within(&BraidWord::parse(definition, genus)?, genus, budget),
    }
}

fn cmd_act(args: &ActArgs) -> Outcome {
    let budget = args.common.budget as usize;
    let f = build(args.object, &args.definition, args.genus, budget)?;
    let word = Word::parse(&args.on, Basis::Xy(args.genus))?;
    let image = f.apply_within(&word, budget)?;
    if args.common.json {
        println!("{}", json!({"input": word.to_string(), "image": image.to_string()}));
    } else {
        println!("{image}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_braid_trivial(args: &BraidArgs) -> Outcome {
    let b = BraidWord::parse(&args.word, args.strands)?;
    let trivial = is_trivial_braid_within(&b, args.common.budget as usize)?;
    if args.common.json {
        println!("{}", json!({"braid": b.to_string(), "strands": args.strands, "trivial": trivial}));
    } else {
        println!("{}", if trivial { "trivial" } else { "nontrivial" });
    }
    Ok(if trivial { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_export(args: &ExportArgs) -> Outcome {
    let f = build(args.object, &args.definition, args.genus, args.common.budget as usize)?;
    let doc = f.to_json();
    if args.common.json {
        println!("{}", serde_json::to_string_pretty(&doc).map_err(|e| Failure::Runtime(e.to_string()))?);
    } else {
        for (name, image) in &doc.images {
            println!("{name} -> {image}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Act(a) => cmd_act(a),
        Command::BraidTrivial(a) => cmd_braid_trivial(a),
        Command::Export(a) => cmd_export(a),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
