use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use morsewidth::reduction::{explore, reduce, ExploreOptions, NODE_BUDGET_ENV};
use morsewidth::report::{cmd_cable, cmd_width, Input};
use morsewidth::verify::{verify, VerifyConfig};
use morsewidth::{corpus, enumerate_zhat, CableParams, Error, MorseDiagram, MorseWord, Sign};
use serde_json::json;

#[derive(Parser)]
#[command(name = "morsewidth", version, about = "Width, bridge number and cabling of knots in Morse position")]
struct Cli {
    /// Output style: readable text, or one JSON record per line.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Check Ẑ membership of a word or the invariants of a diagram.
    Validate { input: String },
    /// Width by all three formulas, bridge number and bridge-thinness.
    Width { input: String },
    /// Critical word (cups as m, caps as M) of a diagram.
    Word { input: String },
    /// Cable a word or diagram and check the q² and q scaling.
    Cable {
        input: String,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value_t = 0)]
        twists: usize,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        sign: Sign,
        /// Write the cabled object here instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Greedy type I / type II reduction, printed as a move trace.
    Reduce { input: String },
    /// Breadth-first search of the move graph for the least reachable width.
    Explore {
        input: String,
        #[arg(long, default_value_t = 0)]
        budget: usize,
        #[arg(long)]
        cap: Option<u64>,
        #[arg(long, env = NODE_BUDGET_ENV)]
        node_budget: Option<usize>,
    },
    /// List Ẑ words in the enumeration order.
    Enumerate {
        #[arg(long)]
        max_bridge: usize,
        #[arg(long)]
        max_blocks: usize,
    },
    /// Check the width identities on every enumerated word.
    Verify {
        #[arg(long)]
        max_bridge: usize,
        #[arg(long)]
        max_blocks: usize,
        #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
        q: Vec<usize>,
        #[arg(long, env = NODE_BUDGET_ENV)]
        node_budget: Option<usize>,
    },
}

/// `corpus:<name>`, a path to a diagram file, or `-` for a diagram on
/// standard input; anything else is read as a word.
fn resolve(arg: &str) -> anyhow::Result<Input> {
    if let Some(name) = arg.strip_prefix("corpus:") {
        let entry = corpus::get(name).with_context(|| {
            let names: Vec<_> = corpus::ENTRIES.iter().map(|e| e.name).collect();
            format!("no corpus entry {name:?} (have {})", names.join(", "))
        })?;
        return Ok(Input::Diagram { name: arg.to_string(), diagram: entry.diagram() });
    }
    let text = if arg == "-" {
        Some(std::io::read_to_string(std::io::stdin()).context("reading standard input")?)
    } else if Path::new(arg).is_file() {
        Some(std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?)
    } else {
        None
    };
    match text {
        Some(text) => {
            let diagram = MorseDiagram::parse(&text).with_context(|| format!("parsing diagram {arg}"))?;
            Ok(Input::Diagram { name: arg.to_string(), diagram })
        }
        None => {
            let word: MorseWord = arg.parse().with_context(|| format!("parsing word {arg:?}"))?;
            Ok(Input::Word(word))
        }
    }
}

fn word_of(input: &Input) -> anyhow::Result<MorseWord> {
    match input {
        Input::Word(w) => Ok(w.clone()),
        Input::Diagram { diagram, .. } => Ok(diagram.critical_word()?),
    }
}

fn record(value: serde_json::Value) {
    println!("{value}");
}

/// Outcome of a command: whether every check it ran passed.
type Status = anyhow::Result<bool>;

fn run(cli: Cli) -> Status {
    let records = cli.format == Format::Records;
    match cli.command {
        Command::Validate { input } => {
            let input = resolve(&input)?;
            let verdict = match &input {
                Input::Word(w) => match w.validate_zhat() {
                    Ok(blocks) => Ok(json!({ "kind": "word", "blocks": blocks.len() })),
                    Err(v) => Err((serde_json::to_value(&v)?, v.to_string())),
                },
                Input::Diagram { diagram, .. } => match diagram.validate() {
                    Ok(()) => Ok(json!({
                        "kind": "diagram",
                        "events": diagram.events().len(),
                        "components": diagram.component_count()?,
                    })),
                    Err(v) => Err((serde_json::to_value(v)?, v.to_string())),
                },
            };
            match verdict {
                Ok(info) => {
                    if records {
                        record(json!({ "input": input.identifier(), "valid": true, "info": info }));
                    } else {
                        println!("{}: valid {info}", input.identifier());
                    }
                    Ok(true)
                }
                Err((value, text)) => {
                    if records {
                        record(json!({ "input": input.identifier(), "valid": false, "violation": value }));
                    } else {
                        println!("{}: invalid", input.identifier());
                    }
                    eprintln!("error: {text}");
                    Ok(false)
                }
            }
        }
        Command::Width { input } => {
            let report = cmd_width(&resolve(&input)?)?;
            if records {
                record(serde_json::to_value(&report)?);
            } else {
                print!("{report}");
            }
            Ok(report.is_consistent())
        }
        Command::Word { input } => {
            let input = resolve(&input)?;
            let word = word_of(&input)?;
            if records {
                record(json!({ "input": input.identifier(), "word": word, "caret": word.to_caret_string() }));
            } else {
                println!("{word}");
            }
            Ok(true)
        }
        Command::Cable { input, q, twists, sign, output } => {
            let params = CableParams::new(q, twists, sign)?;
            let input = resolve(&input)?;
            if matches!(input, Input::Word(_)) && twists > 0 {
                eprintln!("warning: --twists only applies to diagrams; ignored for a word");
            }
            let (report, cabled) = cmd_cable(&input, params)?;
            let rendered =
                if records { format!("{}\n", serde_json::to_value(&report)?) } else { report.to_string() };
            match output {
                Some(path) => {
                    std::fs::write(&path, cabled.emit()).with_context(|| format!("writing {}", path.display()))?;
                    print!("{rendered}");
                }
                None => {
                    print!("{}", cabled.emit());
                    eprint!("{rendered}");
                }
            }
            if let Some(warning) = report.cable.as_ref().and_then(|c| c.warning.as_ref()) {
                eprintln!("warning: {warning}");
            }
            Ok(report.is_consistent())
        }
        Command::Reduce { input } => {
            let word = word_of(&resolve(&input)?)?;
            let (_, trace) = reduce(&word)?;
            if records {
                for step in &trace.steps {
                    record(json!({ "move": step.mv.to_string(), "word": step.word, "delta": step.delta }));
                }
            } else {
                print!("{}", trace.to_records());
            }
            Ok(trace.verify().is_ok())
        }
        Command::Explore { input, budget, cap, node_budget } => {
            let word = word_of(&resolve(&input)?)?;
            let cap = cap.unwrap_or(word.width()?);
            let mut options = ExploreOptions::new(budget, cap);
            if let Some(bound) = node_budget {
                options.node_bound = bound;
            }
            let outcome = explore(&word, options)?;
            if records {
                record(serde_json::to_value(&outcome)?);
            } else {
                println!("min width {} over {} states", outcome.min_width, outcome.states_visited);
                print!("{}", outcome.witness.to_records());
            }
            Ok(true)
        }
        Command::Enumerate { max_bridge, max_blocks } => {
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            for word in enumerate_zhat(max_bridge, max_blocks) {
                if records {
                    let blocks = word.block_form()?;
                    let value = json!({
                        "word": word,
                        "bridge": blocks.bridge_number(),
                        "blocks": blocks.len(),
                        "width": blocks.width()?,
                    });
                    writeln!(out, "{value}")?;
                } else {
                    writeln!(out, "{word}")?;
                }
            }
            Ok(true)
        }
        Command::Verify { max_bridge, max_blocks, q, node_budget } => {
            if max_bridge == 0 || max_blocks == 0 {
                bail!("--max-bridge and --max-blocks must be at least 1");
            }
            let mut config = VerifyConfig::new(max_bridge, max_blocks, q);
            if let Some(bound) = node_budget {
                config.node_bound = bound;
            }
            let summary = verify(&config)?;
            if records {
                record(serde_json::to_value(&summary)?);
            } else {
                println!("words checked:       {}", summary.words_checked);
                println!("word-q pairs:        {}", summary.pairs_checked);
                println!("single-block words:  {}", summary.single_block_words);
                println!("result:              {}", if summary.passed() { "all identities hold" } else { "FAILED" });
            }
            if let Some(c) = &summary.counterexample {
                eprintln!("counterexample: {c}");
            }
            Ok(summary.passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(err) => {
            match err.downcast_ref::<Error>() {
                Some(Error::NodeBudget(n)) => {
                    eprintln!("error: resource limit: more than {n} states (raise {NODE_BUDGET_ENV})")
                }
                _ => eprintln!("error: {err:#}"),
            }
            ExitCode::FAILURE
        }
    }
}
