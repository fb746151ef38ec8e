use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ncfdb::checks::Suite;
use ncfdb::series::{left_inverse, right_inverse, verify_inverse, NCSeries, Side};
use ncfdb::trees::enumerate_trees;
use ncfdb::{AlgebraElement, Antipode, Color, ColorWord, Generator, HopfAlgebra, TreeClass};
use serde_json::json;

/// Enumeration beyond this many leaves needs `--force`.
const LEAF_CAP: usize = 6;

#[derive(Parser)]
#[command(
    name = "ncfdb",
    version,
    about = "Antipodes, planar trees and series inversion over colored interval partitions"
)]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Config {
    /// Number of colors N (inferred from the input when omitted)
    #[arg(long, global = true)]
    n: Option<u32>,
    /// Series truncation order D
    #[arg(long, global = true)]
    order: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 4)]
    max_leaves: usize,
    /// Allow enumerations past the leaf cap
    #[arg(long, global = true)]
    force: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Action {
    Count,
    List,
    Census,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Antipode of a generator `Y^i_u`
    Antipode {
        generator: String,
        #[arg(long, default_value = "recursive")]
        algorithm: String,
        /// Run the five S_H algorithms and compare them
        #[arg(long)]
        all: bool,
    },
    /// Enumerate planar trees with leaf word `u` and root color `i`
    Trees {
        u: String,
        i: String,
        #[arg(value_enum)]
        action: Action,
        /// layered, reduced, simple or ost
        #[arg(long, default_value = "layered")]
        class: String,
    },
    /// Run an invariant suite: hopf-axioms, cancellation, bijection or duality
    Verify { suite: String },
    /// Left and right substitutional inverses of a series given as JSON
    Invert {
        /// Path to the series, or `-` for stdin
        file: Option<String>,
        #[arg(long, value_enum, default_value_t = SideArg::Both)]
        side: SideArg,
        /// Use a seeded random series instead of a file
        #[arg(long, conflicts_with = "file")]
        random: bool,
        /// Check this series as the inverse instead of computing one
        #[arg(long)]
        candidate: Option<String>,
    },
}

enum Failure {
    /// Bad arguments or input; exit code 2.
    Usage(String),
    /// A verification did not hold; exit code 1.
    Check,
}

impl From<ncfdb::Error> for Failure {
    fn from(e: ncfdb::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Antipode { generator, algorithm, all } => cmd_antipode(&cli.config, generator, algorithm, *all),
        Command::Trees { u, i, action, class } => cmd_trees(&cli.config, u, i, *action, class),
        Command::Verify { suite } => cmd_verify(&cli.config, suite),
        Command::Invert { file, side, random, candidate } => {
            cmd_invert(&cli.config, file.as_deref(), *side, *random, candidate.as_deref())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn render(config: &Config, a: &AlgebraElement) -> String {
    match config.format {
        Format::Text => a.to_string(),
        Format::Json => a.to_json().to_string(),
        Format::Latex => a.to_latex(),
    }
}

fn no_latex(config: &Config, what: &str) -> Outcome {
    if config.format == Format::Latex {
        return Err(Failure::Usage(format!("no LaTeX form for {what}")));
    }
    Ok(())
}

fn cmd_antipode(config: &Config, literal: &str, algorithm: &str, all: bool) -> Outcome {
    let g: Generator = literal.parse()?;
    let inferred = g.lower().letters().iter().map(|c| c.0).chain([g.upper().0]).max().unwrap_or(1);
    let h = HopfAlgebra::new(config.n.unwrap_or(inferred))?;
    g.check(h.n())?;
    if !all {
        let kind: Antipode = algorithm.parse()?;
        println!("{}", render(config, &h.antipode_generator(kind, &g)?));
        return Ok(());
    }
    let results: Vec<(Antipode, AlgebraElement)> =
        Antipode::FIVE.iter().map(|&k| Ok((k, h.antipode_generator(k, &g)?))).collect::<ncfdb::Result<_>>()?;
    let agreeing = results.iter().map(|(_, a)| results.iter().filter(|(_, b)| a == b).count()).max().unwrap_or(0);
    let total = results.len();
    if config.format == Format::Json {
        let map: serde_json::Map<String, serde_json::Value> =
            results.iter().map(|(k, a)| (k.name().to_string(), a.to_json())).collect();
        println!("{}", json!({ "results": map, "equal": agreeing, "total": total }));
    } else {
        for (k, a) in &results {
            println!("{}: {}", k.name(), render(config, a));
        }
        println!("{agreeing}/{total} equal");
    }
    if agreeing == total {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn cmd_trees(config: &Config, u: &str, i: &str, action: Action, class: &str) -> Outcome {
    no_latex(config, "trees")?;
    let parse_n = config.n.unwrap_or(9);
    let u = ColorWord::parse(u, parse_n)?;
    let i: Color = i.parse()?;
    let inferred = u.letters().iter().map(|c| c.0).chain([i.0]).max().unwrap_or(1);
    let n = config.n.unwrap_or(inferred);
    i.check(n)?;
    u.check(n)?;
    if u.len() > LEAF_CAP && !config.force {
        return Err(Failure::Usage(format!("{} leaves exceeds the cap of {LEAF_CAP}; pass --force", u.len())));
    }
    match action {
        Action::Census => {
            let classes = [TreeClass::Layered, TreeClass::Reduced, TreeClass::Simple, TreeClass::Ost];
            let counts: Vec<(&str, usize)> = ["layered", "reduced", "simple", "ost"]
                .into_iter()
                .zip(classes)
                .map(|(name, c)| Ok((name, enumerate_trees(&u, i, c, n)?.len())))
                .collect::<ncfdb::Result<_>>()?;
            if config.format == Format::Json {
                let map: serde_json::Map<String, serde_json::Value> =
                    counts.iter().map(|(k, c)| (k.to_string(), json!(c))).collect();
                println!("{}", serde_json::Value::Object(map));
            } else {
                let line: Vec<String> = counts.iter().map(|(k, c)| format!("{k} {c}")).collect();
                println!("{}", line.join("  "));
            }
        }
        Action::Count => {
            let class: TreeClass = class.parse()?;
            let count = enumerate_trees(&u, i, class, n)?.len();
            match config.format {
                Format::Json => println!("{}", json!({ "count": count })),
                _ => println!("{count}"),
            }
        }
        Action::List => {
            let class: TreeClass = class.parse()?;
            let trees = enumerate_trees(&u, i, class, n)?;
            if config.format == Format::Json {
                let list: Vec<serde_json::Value> = trees.iter().map(|t| t.to_json()).collect();
                println!("{}", serde_json::Value::Array(list));
            } else {
                for t in trees {
                    println!("{}", t.to_term());
                }
            }
        }
    }
    Ok(())
}

fn cmd_verify(config: &Config, suite: &str) -> Outcome {
    no_latex(config, "reports")?;
    let suite: Suite = suite.parse()?;
    if config.max_leaves > LEAF_CAP && !config.force {
        return Err(Failure::Usage(format!(
            "--max-leaves {} exceeds the cap of {LEAF_CAP}; pass --force",
            config.max_leaves
        )));
    }
    let report = suite.run(config.n.unwrap_or(2), config.max_leaves)?;
    match config.format {
        Format::Json => println!("{}", report.to_json()),
        _ => println!("{report}"),
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn read_text(file: &str) -> Result<String, Failure> {
    if file == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(file).map_err(|e| Failure::Usage(format!("{file}: {e}")))
}

fn read_series(config: &Config, file: Option<&str>, random: bool) -> Result<NCSeries, Failure> {
    if random {
        let n = config.n.unwrap_or(1);
        let order = config.order.unwrap_or(4);
        return Ok(NCSeries::random(n, order, &["a", "b", "c"], config.seed)?);
    }
    let text = read_text(file.ok_or_else(|| Failure::Usage("a series file, `-`, or --random is required".into()))?)?;
    let mut f = NCSeries::from_json_str(&text)?;
    if let Some(n) = config.n {
        if n != f.n() {
            return Err(Failure::Usage(format!("--n {n} but the series has n = {}", f.n())));
        }
    }
    if let Some(order) = config.order {
        f = f.with_order(order)?;
    }
    Ok(f)
}

fn show_series(config: &Config, label: &str, s: &NCSeries) {
    match config.format {
        Format::Json => println!("{}", s.to_json()),
        _ => print!("{label}\n{s}"),
    }
}

fn cmd_invert(config: &Config, file: Option<&str>, side: SideArg, random: bool, candidate: Option<&str>) -> Outcome {
    no_latex(config, "series")?;
    let f = read_series(config, file, random)?;
    if let Some(path) = candidate {
        let which = match side {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
            SideArg::Both => return Err(Failure::Usage("--candidate needs --side left or --side right".into())),
        };
        let c = NCSeries::from_json_str(&read_text(path)?)?;
        let c = match config.order {
            Some(order) => c.with_order(order)?,
            None => c,
        };
        let ok = verify_inverse(&c, &f, which)?;
        let name = if which == Side::Left { "left" } else { "right" };
        match config.format {
            Format::Json => println!("{}", json!({ "side": name, "inverse": ok })),
            _ => println!("{} {name} inverse", if ok { "is a" } else { "is not a" }),
        }
        return if ok { Ok(()) } else { Err(Failure::Check) };
    }
    match side {
        SideArg::Left => show_series(config, "left inverse", &left_inverse(&f)?),
        SideArg::Right => show_series(config, "right inverse", &right_inverse(&f)?),
        SideArg::Both => {
            let g = left_inverse(&f)?;
            let h = right_inverse(&f)?;
            let first = g.first_disagreement(&h)?;
            if config.format == Format::Json {
                println!("{}", json!({ "left": g.to_json(), "right": h.to_json(), "first_disagreement": first }));
            } else {
                show_series(config, "left inverse", &g);
                show_series(config, "right inverse", &h);
                match first {
                    Some(k) => println!("first disagreement at order {k}"),
                    None => println!("identical through order {}", f.order()),
                }
            }
        }
    }
    Ok(())
}
