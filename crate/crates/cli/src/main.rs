use std::collections::BTreeMap;
use std::io::Read;
use std::process::ExitCode;

use argscc::constructive::{finitary_order, greedy_cf15, lex_greedy_stage, lex_scc_stg15};
use argscc::criteria::{
    check_directionality, check_i_maximality, check_reinstatement, check_skepticism_adequacy,
    Criterion, CriterionReport, Reinstatement, Skepticism,
};
use argscc::generators::{truncation_study, Generator};
use argscc::io::{self, Format, Mode};
use argscc::scc_semantics::{enumerate_semantics, is_extension};
use argscc::{oracle, ArgSet, Error, Framework, Limits, Semantics};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

/// SCC-based abstract argumentation semantics.
#[derive(Parser)]
#[command(name = "argscc", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Largest framework or component enumerated exhaustively.
    #[arg(long, global = true, env = "ARGSCC_MAX_ARGS", default_value_t = 24)]
    max_args: usize,
    /// Cap on unattacked sets tested for directionality.
    #[arg(
        long,
        global = true,
        env = "ARGSCC_UNATTACKED_CAP",
        default_value_t = 4096
    )]
    unattacked_cap: usize,
    /// Step budget for witness searches.
    #[arg(
        long,
        global = true,
        env = "ARGSCC_SEARCH_STEPS",
        default_value_t = 1_000_000
    )]
    search_steps: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Apx,
    Tgf,
}

#[derive(Args)]
struct Input {
    /// Framework file, or `-` for standard input.
    #[arg(long, short)]
    input: String,
    /// Input format; guessed from the file extension when omitted.
    #[arg(long, value_enum)]
    format: Option<InputFormat>,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate extensions or decide acceptance of one argument.
    Solve {
        #[arg(long, short)]
        semantics: Semantics,
        #[command(flatten)]
        input: Input,
        /// List all extensions (the default).
        #[arg(long, conflicts_with_all = ["credulous", "skeptical"])]
        enumerate: bool,
        /// Is ARG in some extension?
        #[arg(long, value_name = "ARG", conflicts_with = "skeptical")]
        credulous: Option<String>,
        /// Is ARG in every extension?
        #[arg(long, value_name = "ARG")]
        skeptical: Option<String>,
    },
    /// Evaluate a criterion on a framework.
    Check {
        #[arg(long, short)]
        criterion: Criterion,
        #[command(flatten)]
        input: Input,
        /// Semantics to check, comma-separated; defaults to the eight
        /// naive-based semantics.
        #[arg(long, short, value_delimiter = ',')]
        semantics: Vec<Semantics>,
        /// Unattacked set for directionality (comma-separated labels);
        /// all unattacked sets when omitted.
        #[arg(long, value_delimiter = ',')]
        unattacked: Option<Vec<String>>,
        /// Second framework G for skepticism adequacy.
        #[arg(long, value_name = "FILE")]
        against: Option<String>,
        /// Skepticism relations, comma-separated.
        #[arg(long, value_delimiter = ',', default_values = ["cap", "weak"])]
        relation: Vec<Skepticism>,
        /// Exit with status 3 when a criterion fails.
        #[arg(long = "assert")]
        assert_holds: bool,
    },
    /// Compare the fast enumerators with the brute-force oracle on random
    /// frameworks.
    Oracle {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 9)]
        max_args: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Exit with status 3 on any mismatch.
        #[arg(long = "assert")]
        assert_holds: bool,
    },
    /// Track acceptance over growing truncations of an infinite family.
    Infinite {
        #[arg(long)]
        family: String,
        /// Family parameters as KEY=VALUE.
        #[arg(long, num_args = 0.., value_parser = parse_param)]
        params: Vec<(String, String)>,
        #[arg(long, value_delimiter = ',', required = true)]
        levels: Vec<usize>,
        #[arg(long, short)]
        semantics: Semantics,
        /// Labels to track, comma-separated.
        #[arg(long, value_delimiter = ',', required = true)]
        track: Vec<String>,
        /// Trailing verdicts that must agree to count as stabilized.
        #[arg(long, env = "ARGSCC_STABILIZE_K", default_value_t = 3)]
        window: usize,
    },
    /// Run one of the existence constructions.
    Construct {
        #[arg(long, short, value_enum)]
        algorithm: Algorithm,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    #[value(name = "greedy-cf1.5")]
    GreedyCf15,
    #[value(name = "lex-stg1.5")]
    LexStg15,
    #[value(name = "lex-stage")]
    LexStage,
}

impl Algorithm {
    fn name(self) -> &'static str {
        match self {
            Algorithm::GreedyCf15 => "greedy-cf1.5",
            Algorithm::LexStg15 => "lex-stg1.5",
            Algorithm::LexStage => "lex-stage",
        }
    }

    fn semantics(self) -> Semantics {
        match self {
            Algorithm::GreedyCf15 => Semantics::Cf15,
            Algorithm::LexStg15 => Semantics::Stg15,
            Algorithm::LexStage => Semantics::Stage,
        }
    }
}

fn parse_param(s: &str) -> Result<(String, String), String> {
    s.split_once('=')
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .ok_or_else(|| format!("expected KEY=VALUE, got `{s}`"))
}

enum Failure {
    Usage(String),
    Lib(Error),
    Violation,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn read_framework(input: &Input) -> Result<Framework, Failure> {
    let text = if input.input == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("cannot read standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(&input.input)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", input.input)))?
    };
    let format = match input.format {
        Some(InputFormat::Apx) => Format::Apx,
        Some(InputFormat::Tgf) => Format::Tgf,
        None => Format::from_path(&input.input),
    };
    Ok(io::parse(&text, format)?)
}

fn argument(f: &Framework, label: &str) -> Result<usize, Failure> {
    f.index_of(label)
        .ok_or_else(|| Failure::Usage(format!("unknown argument `{label}`")))
}

fn run(cli: Cli) -> Result<String, Failure> {
    let g = &cli.global;
    let limits = Limits {
        max_args: g.max_args,
        unattacked_cap: g.unattacked_cap,
        search_steps: g.search_steps,
    };
    let json = g.output == Output::Json;
    match cli.command {
        Command::Solve {
            semantics,
            input,
            enumerate: _,
            credulous,
            skeptical,
        } => {
            let f = read_framework(&input)?;
            let es = enumerate_semantics(&f, semantics, &limits)?;
            let query = credulous
                .map(|a| (Mode::Credulous, a))
                .or(skeptical.map(|a| (Mode::Skeptical, a)));
            Ok(match query {
                None if json => io::extensions_json(&f, semantics, &es),
                None => io::extensions_text(&f, semantics, &es),
                Some((mode, label)) => {
                    let a = argument(&f, &label)?;
                    let accepted = match mode {
                        Mode::Credulous => es.credulously_accepts(a),
                        Mode::Skeptical => es.skeptically_accepts(a),
                    };
                    if json {
                        io::acceptance_json(semantics, mode, &label, accepted)
                    } else {
                        io::acceptance_text(semantics, mode, &label, accepted)
                    }
                }
            })
        }
        Command::Check {
            criterion,
            input,
            semantics,
            unattacked,
            against,
            relation,
            assert_holds,
        } => {
            let f = read_framework(&input)?;
            let semantics = if semantics.is_empty() {
                Semantics::COMPARED.to_vec()
            } else {
                semantics
            };
            let u = unattacked.map(|labels| f.set_of(&labels)).transpose()?;
            let other = match &against {
                Some(path) => Some(read_framework(&Input {
                    input: path.clone(),
                    format: input.format,
                })?),
                None => None,
            };
            let mut reports = Vec::new();
            for &which in &semantics {
                let report = |r: CriterionReport| CriterionReport {
                    semantics: Some(which),
                    ..r
                };
                match criterion {
                    Criterion::IMaximality => reports.push(report(check_i_maximality(
                        &enumerate_semantics(&f, which, &limits)?,
                    ))),
                    Criterion::Reinstatement
                    | Criterion::WeakReinstatement
                    | Criterion::CfReinstatement => {
                        let variant = match criterion {
                            Criterion::Reinstatement => Reinstatement::Plain,
                            Criterion::WeakReinstatement => Reinstatement::Weak,
                            _ => Reinstatement::ConflictFree,
                        };
                        let es = enumerate_semantics(&f, which, &limits)?;
                        reports.push(report(check_reinstatement(&f, &es, variant)));
                    }
                    Criterion::Directionality => {
                        reports.push(check_directionality(&f, which, u.as_ref(), &limits)?)
                    }
                    Criterion::SkepticismAdequacy => {
                        let other = other.as_ref().ok_or_else(|| {
                            Failure::Usage("skepticism-adequacy needs --against FILE".into())
                        })?;
                        for &rel in &relation {
                            reports
                                .push(check_skepticism_adequacy(&f, other, which, rel, &limits)?);
                        }
                    }
                }
            }
            let out = if json {
                io::reports_json(&f, &reports)
            } else {
                reports.iter().map(|r| io::report_text(&f, r)).collect()
            };
            if assert_holds && reports.iter().any(|r| !r.holds) {
                print!("{out}");
                return Err(Failure::Violation);
            }
            Ok(out)
        }
        Command::Oracle {
            trials,
            max_args,
            seed,
            assert_holds,
        } => {
            let corpus = oracle::corpus(trials, max_args, seed)?;
            let mut mismatches = Vec::new();
            for (i, f) in corpus.iter().enumerate() {
                for which in Semantics::ALL {
                    if enumerate_semantics(f, which, &limits)? != oracle::brute_force(f, which)? {
                        mismatches.push((i, which));
                    }
                }
            }
            let out = if json {
                let listed: Vec<_> = mismatches
                    .iter()
                    .map(|(i, s)| json!({ "trial": i, "semantics": s }))
                    .collect();
                let v = json!({
                    "schema": io::SCHEMA,
                    "trials": trials,
                    "max_args": max_args,
                    "seed": seed,
                    "semantics": Semantics::ALL,
                    "mismatches": listed,
                });
                serde_json::to_string_pretty(&v).expect("json values serialize")
            } else {
                let mut s = format!(
                    "{trials} frameworks (<= {max_args} arguments, seed {seed}), {} semantics: {} mismatch(es)\n",
                    Semantics::ALL.len(),
                    mismatches.len()
                );
                for (i, which) in &mismatches {
                    s.push_str(&format!("  trial {i}: {which}\n"));
                }
                s
            };
            if assert_holds && !mismatches.is_empty() {
                print!("{out}");
                return Err(Failure::Violation);
            }
            Ok(out)
        }
        Command::Infinite {
            family,
            params,
            levels,
            semantics,
            track,
            window,
        } => {
            let params: BTreeMap<String, String> = params.into_iter().collect();
            let gen = Generator::builtin(&family, &params)?;
            let report = truncation_study(&gen, semantics, &levels, &track, window, &limits)?;
            Ok(if json {
                io::truncation_json(&report)
            } else {
                io::truncation_text(&report)
            })
        }
        Command::Construct { algorithm, input } => {
            let f = read_framework(&input)?;
            let ord = finitary_order(&f, f.len())?;
            let s: ArgSet = match algorithm {
                Algorithm::GreedyCf15 => greedy_cf15(&f, &ord),
                Algorithm::LexStg15 => lex_scc_stg15(&f, &ord, &limits)?,
                Algorithm::LexStage => lex_greedy_stage(&f, &ord, &limits)?,
            };
            let which = algorithm.semantics();
            let verified = is_extension(&f, which, &s, &limits)?;
            let order: Vec<&str> = ord.order.iter().map(|&a| f.label(a)).collect();
            Ok(if json {
                let v = json!({
                    "schema": io::SCHEMA,
                    "algorithm": algorithm.name(),
                    "order": order,
                    "extension": f.labels_of(&s),
                    "semantics": which,
                    "verified": verified,
                });
                serde_json::to_string_pretty(&v).expect("json values serialize")
            } else {
                format!(
                    "{}: {{{}}}\norder: {}\n{} extension: {}\n",
                    algorithm.name(),
                    f.labels_of(&s).join(", "),
                    order.join(" "),
                    which,
                    if verified { "yes" } else { "NO" }
                )
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Violation) => ExitCode::from(3),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::SizeLimit { .. }
                | Error::TooManyUnattackedSets { .. }
                | Error::SearchLimit { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
