use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use setdist_cli::{build_matrix, emit, load_documents, CliError, Document, Encoding, Format};
use setdist_core::lz76;
use setdist_core::mappers::DEFAULT_SYMBOL_WIDTH;
use setdist_core::verify::suites::{run_all, VerifyConfig};
use setdist_core::{dist, map_string, MapperConfig};

#[derive(Parser, Debug)]
#[command(name = "setdist", version)]
#[command(about = "Combinatorial information set-distance between files")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the set a file maps to, one element per line
    Map {
        file: PathBuf,
        #[command(flatten)]
        mapper: MapperArgs,
    },
    /// Print the distance between two files
    Dist {
        file_a: PathBuf,
        file_b: PathBuf,
        #[command(flatten)]
        mapper: MapperArgs,
    },
    /// Pairwise distance matrix over files and/or directories
    Matrix {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        mapper: MapperArgs,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
        /// Drop documents whose mapped set has fewer than 2 elements instead of failing
        #[arg(long)]
        skip_degenerate: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the distance's properties exhaustively and on random trials
    Verify {
        /// Randomized trials for the triangle and max-combination suites
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        /// Universe size for the exhaustive set suites (2..=7)
        #[arg(long, default_value_t = 5)]
        universe: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mapper {
    Chunk,
    Window,
    Lz76,
}

#[derive(Args, Debug)]
struct MapperArgs {
    #[arg(long, value_enum)]
    mapper: Mapper,
    /// Word length in bits (chunk)
    #[arg(long)]
    k: Option<usize>,
    /// Bits per symbol (window)
    #[arg(long, default_value_t = DEFAULT_SYMBOL_WIDTH)]
    symbol_width: usize,
    /// Symbols per window (window)
    #[arg(long)]
    window: Option<usize>,
    /// Symbols to advance between windows (window)
    #[arg(long, default_value_t = 1)]
    stride: usize,
    #[arg(long, value_enum, default_value = "bits")]
    encoding: Encoding,
}

impl MapperArgs {
    fn config(&self) -> Result<MapperConfig, CliError> {
        let cfg = match self.mapper {
            Mapper::Chunk => MapperConfig::Chunk {
                k: self
                    .k
                    .ok_or_else(|| CliError::Usage("--mapper chunk requires --k".into()))?,
            },
            Mapper::Window => MapperConfig::Window {
                symbol_width: self.symbol_width,
                window_symbols: self
                    .window
                    .ok_or_else(|| CliError::Usage("--mapper window requires --window".into()))?,
                stride_symbols: self.stride,
            },
            Mapper::Lz76 => MapperConfig::Lz76,
        };
        cfg.validate().map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(cfg)
    }
}

fn read_document(path: &PathBuf, encoding: Encoding) -> Result<Document, CliError> {
    let raw = fs::read(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    Document::from_bytes(path.display().to_string(), &raw, encoding)
}

fn map_document(doc: &Document, cfg: &MapperConfig) -> Result<setdist_core::FiniteSet, CliError> {
    map_string(&doc.payload, cfg).map_err(|source| CliError::Map {
        label: doc.label.clone(),
        source,
    })
}

fn write_stdout(bytes: &[u8]) -> Result<(), CliError> {
    std::io::stdout()
        .write_all(bytes)
        .map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        })
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Map { file, mapper } => {
            let cfg = mapper.config()?;
            let doc = read_document(&file, mapper.encoding)?;
            let set = map_document(&doc, &cfg)?;
            let mut out = String::new();
            for e in &set {
                out.push_str(&e.to_string());
                out.push('\n');
            }
            out.push_str(&format!("cardinality: {}\n", set.cardinality()));
            if cfg == MapperConfig::Lz76 {
                let components = lz76::complexity(doc.payload.bits());
                out.push_str(&format!("components: {components}\n"));
            }
            write_stdout(out.as_bytes())
        }
        Command::Dist {
            file_a,
            file_b,
            mapper,
        } => {
            let cfg = mapper.config()?;
            let a = map_document(&read_document(&file_a, mapper.encoding)?, &cfg)?;
            let b = map_document(&read_document(&file_b, mapper.encoding)?, &cfg)?;
            let d = dist(&a, &b).expect("mapped sets are non-empty");
            write_stdout(format!("{:.6}\n", d.bits()).as_bytes())
        }
        Command::Matrix {
            inputs,
            mapper,
            format,
            skip_degenerate,
            output,
        } => {
            let cfg = mapper.config()?;
            let docs = load_documents(&inputs, mapper.encoding)?;
            let outcome = build_matrix(&docs, &cfg, skip_degenerate)?;
            for label in &outcome.skipped {
                eprintln!("warning: skipped {label}: mapped set has fewer than 2 elements");
            }
            let emitted = emit(&outcome.matrix, format);
            for w in &emitted.warnings {
                eprintln!("warning: {w}");
            }
            match output {
                Some(path) => {
                    fs::write(&path, &emitted.bytes).map_err(|source| CliError::Io { path, source })
                }
                None => write_stdout(&emitted.bytes),
            }
        }
        Command::Verify {
            trials,
            universe,
            seed,
            json,
        } => {
            if !(2..=7).contains(&universe) {
                return Err(CliError::Usage("--universe must be between 2 and 7".into()));
            }
            let cfg = VerifyConfig {
                trials,
                universe,
                seed,
                ..VerifyConfig::default()
            };
            let reports = run_all(&cfg);
            let failed = reports.iter().filter(|r| !r.passed).count();
            let out = if json {
                let value = serde_json::json!({
                    "seed": seed,
                    "passed": failed == 0,
                    "reports": reports,
                });
                format!("{value:#}\n")
            } else {
                let mut out = format!("seed: {seed}\n");
                for r in &reports {
                    out.push_str(&format!("{r}\n"));
                }
                out
            };
            write_stdout(out.as_bytes())?;
            if failed > 0 {
                return Err(CliError::Violation { failed });
            }
            Ok(())
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
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
