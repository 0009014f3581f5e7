use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sbaf::baf::SupportRule;
use sbaf::error::Error;
use sbaf::report::{self, Mode, SemanticsTag, SolveOptions};
use sbaf::verify::suite::{run_suite, PropositionId, SuiteConfig};
use sbaf::{io as fmt_io, DEFAULT_ARG_CAP, DEFAULT_SENT_CAP};

#[derive(Parser)]
#[command(
    name = "sbaf",
    about = "Extension solver for structured bipolar argumentation frameworks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// Write to a file instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,

    /// One extension per line as comma-joined ids instead of JSON.
    #[arg(long)]
    plain: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the extensions of a framework under a semantics.
    Solve {
        file: PathBuf,

        /// conflict-free, admissible, complete, preferred,
        /// strongly-coherent, weakly-coherent, strongly-adequate,
        /// weakly-adequate, d-admissible, d-complete or d-preferred.
        #[arg(short, long)]
        semantics: SemanticsTag,

        /// arguments or language; inferred from the semantics when omitted.
        #[arg(short, long)]
        mode: Option<Mode>,

        /// Keep only the ⊆-maximal (confident) extensions.
        #[arg(long)]
        confident: bool,

        /// Cap on the number of arguments for exhaustive enumeration.
        #[arg(long, default_value_t = DEFAULT_ARG_CAP)]
        max_args: usize,

        /// Cap on the number of used sentences for language enumeration.
        #[arg(long, default_value_t = DEFAULT_SENT_CAP)]
        max_sents: usize,

        /// How binary support edges are read off the framework:
        /// conclusion or singleton.
        #[arg(long, default_value_t = SupportRule::Conclusion)]
        support_rule: SupportRule,

        #[command(flatten)]
        out: OutputArgs,
    },

    /// Check one extension against a semantics and explain the verdict.
    Check {
        file: PathBuf,

        /// Comma-separated argument ids (or sentence ids for the
        /// language-level semantics).
        #[arg(short, long, value_delimiter = ',', num_args = 0.., default_value = "")]
        extension: Vec<String>,

        #[arg(short, long)]
        semantics: SemanticsTag,

        #[arg(long, default_value_t = SupportRule::Conclusion)]
        support_rule: SupportRule,

        #[command(flatten)]
        out: OutputArgs,
    },

    /// Close the framework under minimal arguments for conflicting and
    /// undercutting sentences, emitting a re-parseable file.
    Saturate {
        file: PathBuf,

        /// Produce the strong closure; this is also the default, the weak
        /// variant exists only as a predicate.
        #[arg(long)]
        strong: bool,

        #[arg(short, long)]
        output: Option<PathBuf>,
    },

    /// Render the framework as a DOT digraph: solid attack edges, dashed
    /// support edges.
    Dot {
        file: PathBuf,

        #[arg(long, default_value_t = SupportRule::Conclusion)]
        support_rule: SupportRule,

        #[arg(short, long)]
        output: Option<PathBuf>,
    },

    /// Report structural diagnostics, including both saturation flags.
    Props { file: PathBuf },

    /// Run the seeded random property suite and report violations.
    Suite {
        /// Comma-separated proposition names; defaults to all of them.
        #[arg(long, value_delimiter = ',')]
        propositions: Vec<PropositionId>,

        #[arg(long, default_value_t = 100)]
        trials: usize,

        #[arg(long, default_value_t = 0)]
        seed: u64,

        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn write_out(output: Option<&PathBuf>, text: &str) -> sbaf::Result<()> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|source| Error::Io {
                    path: "<stdout>".to_string(),
                    source,
                })
        }
    }
}

fn run(cli: Cli) -> sbaf::Result<bool> {
    match cli.command {
        Command::Solve {
            file,
            semantics,
            mode,
            confident,
            max_args,
            max_sents,
            support_rule,
            out,
        } => {
            let sb = fmt_io::parse_path(&file)?;
            let doc = report::solve(
                &sb,
                &SolveOptions {
                    semantics,
                    mode,
                    confident,
                    max_args,
                    max_sents,
                    support_rule,
                },
            )?;
            let text = if out.plain {
                doc.to_plain()
            } else {
                let mut t = doc.to_json();
                t.push('\n');
                t
            };
            write_out(out.output.as_ref(), &text)?;
            Ok(true)
        }
        Command::Check {
            file,
            extension,
            semantics,
            support_rule,
            out,
        } => {
            let sb = fmt_io::parse_path(&file)?;
            let ids: Vec<String> = extension.into_iter().filter(|s| !s.is_empty()).collect();
            let report = report::check(&sb, &ids, semantics, support_rule)?;
            let text = if out.plain {
                format!(
                    "{}: {}\n",
                    if report.verdict { "true" } else { "false" },
                    report.explanation
                )
            } else {
                let mut t = serde_json::to_string_pretty(&report).expect("reports serialize");
                t.push('\n');
                t
            };
            write_out(out.output.as_ref(), &text)?;
            Ok(true)
        }
        Command::Saturate { file, strong: _, output } => {
            let sb = fmt_io::parse_path(&file)?;
            let saturated = sb.strongly_saturate()?;
            write_out(output.as_ref(), &fmt_io::emit(&saturated))?;
            Ok(true)
        }
        Command::Dot {
            file,
            support_rule,
            output,
        } => {
            let sb = fmt_io::parse_path(&file)?;
            write_out(output.as_ref(), &fmt_io::dot(&sb, support_rule))?;
            Ok(true)
        }
        Command::Props { file } => {
            let sb = fmt_io::parse_path(&file)?;
            let mut text =
                serde_json::to_string_pretty(&report::props(&sb)).expect("reports serialize");
            text.push('\n');
            write_out(None, &text)?;
            Ok(true)
        }
        Command::Suite {
            propositions,
            trials,
            seed,
            output,
        } => {
            let ids: Vec<PropositionId> = if propositions.is_empty() {
                PropositionId::all().to_vec()
            } else {
                propositions
            };
            let reports = run_suite(
                &ids,
                &SuiteConfig {
                    trials,
                    base_seed: seed,
                },
            );
            let mut text = serde_json::to_string_pretty(&reports).expect("reports serialize");
            text.push('\n');
            write_out(output.as_ref(), &text)?;
            Ok(reports.iter().all(|r| r.violations.is_empty()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::CapExceeded { .. } => 2,
                Error::Io { .. } => 3,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}
