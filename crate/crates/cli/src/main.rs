//! `gspec`: analyze finite graded-module instances, run the theorem
//! verification suite, and export specialization orders.
//!
//! Exit codes: 0 on success with no verification failures, 1 when the
//! suite reports failures, 2 on input errors.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gspec_core::instance::{catalog, Limits, LoadedInstance, Loader};
use gspec_core::topology::export_dot;
use gspec_core::verify::{
    analyze_instance, render_analysis_machine, render_analysis_text, render_suite_machine,
    render_suite_text, run_many, VerifyOptions,
};
use gspec_core::Spectrum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Parser)]
#[command(name = "gspec", version, about = "workbench for finite graded spectra")]
struct Cli {
    /// Override the ring and module carrier bounds.
    #[arg(long, global = true)]
    max_size: Option<u32>,

    /// Seed for the deterministic subset sampler.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to a file instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the spectrum, fibers, ideal comparison table and flags.
    Analyze {
        /// Catalog name or instance file.
        instance: String,
    },
    /// Run the theorem verification suite.
    Verify {
        /// Catalog name or instance file.
        instance: Option<String>,
        /// Run the whole built-in catalog.
        #[arg(long)]
        all: bool,
    },
    /// Export the specialization order as DOT.
    ExportDot {
        /// Catalog name or instance file.
        instance: String,
    },
    /// Catalog operations.
    Catalog {
        #[command(subcommand)]
        op: CatalogOp,
    },
}

#[derive(Subcommand)]
enum CatalogOp {
    /// List the built-in instances.
    List,
}

fn limits(max_size: Option<u32>) -> Limits {
    let mut l = Limits::default();
    if let Some(n) = max_size {
        l.max_ring = n;
        l.max_module = n;
    }
    l
}

/// A name is resolved against the catalog unless it names an existing file.
fn load_instances(loader: &mut Loader, name: &str) -> gspec_core::Result<Vec<LoadedInstance>> {
    let path = std::path::Path::new(name);
    if path.exists() {
        loader.load_file(path)
    } else {
        Ok(vec![loader.resolve(name)?])
    }
}

fn emit(output: &Option<PathBuf>, content: &str) -> std::io::Result<()> {
    match output {
        Some(path) => std::fs::write(path, content),
        None => std::io::stdout().write_all(content.as_bytes()),
    }
}

fn run() -> Result<bool, gspec_core::Error> {
    let cli = Cli::parse();
    let mut loader = Loader::new(limits(cli.max_size));
    let opts = VerifyOptions {
        seed: cli.seed,
        ..VerifyOptions::default()
    };

    match &cli.command {
        Command::Analyze { instance } => {
            let instances = load_instances(&mut loader, instance)?;
            let mut out = String::new();
            for inst in &instances {
                let analysis = analyze_instance(inst, &opts)?;
                out.push_str(&match cli.format {
                    Format::Text => render_analysis_text(&analysis),
                    Format::Machine => render_analysis_machine(&analysis),
                });
            }
            emit(&cli.output, &out)?;
            Ok(false)
        }
        Command::Verify { instance, all } => {
            let instances = if *all {
                let mut v = Vec::new();
                for entry in catalog() {
                    v.push(loader.resolve(&entry.spec.name)?);
                }
                v
            } else {
                let name = instance.as_deref().ok_or_else(|| {
                    gspec_core::Error::Invalid(
                        "verify needs an instance name or --all".to_string(),
                    )
                })?;
                load_instances(&mut loader, name)?
            };
            let report = run_many(&instances, &opts)?;
            let rendered = match cli.format {
                Format::Text => render_suite_text(&report),
                Format::Machine => render_suite_machine(&report),
            };
            emit(&cli.output, &rendered)?;
            Ok(report.has_failures())
        }
        Command::ExportDot { instance } => {
            let instances = load_instances(&mut loader, instance)?;
            let mut out = String::new();
            for inst in &instances {
                let spectrum = Spectrum::compute(inst.module.clone())?;
                out.push_str(&export_dot(&spectrum)?);
            }
            emit(&cli.output, &out)?;
            Ok(false)
        }
        Command::Catalog { op: CatalogOp::List } => {
            let mut out = String::new();
            for entry in catalog() {
                out.push_str(&format!("{:22} {}\n", entry.spec.name, entry.description));
            }
            emit(&cli.output, &out)?;
            Ok(false)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(false) => ExitCode::from(0),
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
