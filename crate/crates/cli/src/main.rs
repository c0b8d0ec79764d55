use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use csf_core::engine::{csf, Engine, EngineConfig};
use csf_core::graph::GraphFile;
use csf_core::verify::{run_check, search_equal_trees, summarize, Check, CheckOptions};
use csf_core::{Basis, CsfError, SymFunc};

const SEARCH_VERTEX_BOUND: usize = 10;

#[derive(Parser)]
#[command(name = "csf", version, about = "Chromatic symmetric functions of vertex-weighted graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineChoice {
    All,
    Stable,
    Subsets,
    Delcon,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the CSF of a graph file.
    Compute {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        engine: EngineChoice,
        #[arg(long, default_value = "p")]
        basis: Basis,
        /// Aligned coefficient table instead of JSON.
        #[arg(long)]
        pretty: bool,
    },
    /// Run a verifier (or all of them) over a generated corpus.
    Verify {
        /// Check name, or "all".
        check: String,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        maxw: u32,
        /// Use a random corpus from this seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Random corpus size, or a cap on the exhaustive corpus.
        #[arg(long)]
        count: Option<usize>,
        /// Where failing witnesses are written.
        #[arg(long, default_value = "csf-witnesses")]
        witness_dir: PathBuf,
    },
    /// Look for non-isomorphic weighted trees with equal CSF.
    SearchTrees {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        maxw: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Re-express a symmetric-function JSON file in another basis.
    Convert {
        file: PathBuf,
        #[arg(long)]
        basis: Basis,
        #[arg(long)]
        pretty: bool,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<CsfError> for Failure {
    fn from(e: CsfError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn render(f: &SymFunc, pretty: bool) -> String {
    if !pretty {
        return f.to_json().to_string();
    }
    let rows: Vec<(String, String)> = f
        .terms()
        .iter()
        .map(|(l, c)| (c.to_string(), format!("{}{l}", f.basis().symbol())))
        .collect();
    let width = rows.iter().map(|(c, _)| c.len()).max().unwrap_or(1);
    let mut out = format!("basis {}  degree {}  terms {}\n", f.basis(), f.degree(), rows.len());
    for (c, l) in rows {
        out.push_str(&format!("{c:>width$}  {l}\n"));
    }
    out.trim_end().to_string()
}

fn write_witness(dir: &Path, name: &str, body: &Value) -> Result<PathBuf, Failure> {
    fs::create_dir_all(dir).map_err(|e| Failure::Usage(format!("{}: {e}", dir.display())))?;
    let path = dir.join(name);
    let text = serde_json::to_string_pretty(body).expect("witness serializes");
    fs::write(&path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(path)
}

fn compute(file: &Path, engine: EngineChoice, basis: Basis, pretty: bool) -> Result<(), Failure> {
    let (g, _) = GraphFile::parse(&read(file)?)?.build()?;
    let config = EngineConfig::from_env();
    let chosen: Vec<Engine> = match engine {
        EngineChoice::All => Engine::ALL.to_vec(),
        EngineChoice::Stable => vec![Engine::Stable],
        EngineChoice::Subsets => vec![Engine::Subsets],
        EngineChoice::Delcon => vec![Engine::Delcon],
    };
    let mut values = Vec::new();
    for e in chosen {
        values.push((e, csf(&g, e, &config)?.value));
    }
    if values.iter().any(|(_, v)| *v != values[0].1) {
        let mut witness = json!({"graph": GraphFile::from_graph(&g, None)});
        for (e, v) in &values {
            witness[e.name()] = v.to_json();
        }
        let path = write_witness(Path::new("csf-witnesses"), "compute-disagreement.json", &witness)?;
        return Err(Failure::Verification(format!(
            "engines disagree; witness written to {}",
            path.display()
        )));
    }
    println!("{}", render(&values[0].1.convert(basis), pretty));
    Ok(())
}

fn verify(check: &str, opts: CheckOptions, witness_dir: &Path) -> Result<(), Failure> {
    let checks: Vec<Check> = if check == "all" {
        Check::ALL.to_vec()
    } else {
        vec![check.parse::<Check>()?]
    };
    let mut reports = Vec::new();
    for c in checks {
        match run_check(c, &opts) {
            Ok(r) => reports.extend(r),
            Err(e) => return Err(Failure::Usage(format!("{c}: {e}"))),
        }
    }
    let mut failed = 0;
    for (i, r) in reports.iter().enumerate() {
        let line = r.to_json();
        println!("{line}");
        if !r.pass {
            failed += 1;
            let path = write_witness(witness_dir, &format!("{}-{i}.json", r.check), &line)?;
            eprintln!("{} failed; witness written to {}", r.check, path.display());
        }
    }
    println!("{}", summarize(&reports));
    if failed > 0 {
        Err(Failure::Verification(format!("{failed} of {} reports failed", reports.len())))
    } else {
        Ok(())
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Compute {
            file,
            engine,
            basis,
            pretty,
        } => compute(&file, engine, basis, pretty),
        Command::Verify {
            check,
            n,
            maxw,
            seed,
            count,
            witness_dir,
        } => {
            if maxw == 0 {
                return Err(Failure::Usage("--maxw must be at least 1".into()));
            }
            let opts = CheckOptions {
                n,
                max_weight: maxw,
                seed,
                count,
            };
            verify(&check, opts, &witness_dir)
        }
        Command::SearchTrees { n, maxw, seed } => {
            if n == 0 || n > SEARCH_VERTEX_BOUND || maxw == 0 {
                return Err(Failure::Usage(format!(
                    "need 1 <= n <= {SEARCH_VERTEX_BOUND} and maxw >= 1"
                )));
            }
            println!("{}", search_equal_trees(n, maxw, seed).to_json());
            Ok(())
        }
        Command::Convert {
            file,
            basis,
            pretty,
        } => {
            let value: Value = serde_json::from_str(&read(&file)?)
                .map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
            let f = SymFunc::from_json(&value)?;
            println!("{}", render(&f.convert(basis), pretty));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("csf: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("csf: {msg}");
            ExitCode::from(2)
        }
    }
}
