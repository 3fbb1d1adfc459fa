use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use modlab::cache::ProfileCache;
use modlab::catalog::{enumerate_modules, Policy};
use modlab::error::{HarnessError, Result};
use modlab::oracle::{run_oracle, OracleCheck};
use modlab::rings::{self, BUILTIN};
use modlab::run::{minimal_witnesses, run_all, RunConfig, EXIT_CONFIG};
use modlab_core::hom::iso_invariants;
use modlab_core::json::ModuleDescription;
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "modlab",
    version,
    about = "Finite modules, cosingular radicals and lifting-type predicates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct PolicyArgs {
    /// Largest number of generators of catalog modules.
    #[arg(long = "gens", default_value_t = 2)]
    gens: usize,
    /// Largest catalog module size.
    #[arg(long = "max-size", default_value_t = 256)]
    max_size: usize,
}

impl PolicyArgs {
    fn policy(self) -> Policy {
        Policy {
            max_generators: self.gens,
            max_size: self.max_size,
        }
    }
}

#[derive(Subcommand)]
enum RingCommand {
    /// List the built-in rings.
    List,
    /// Print structure data for one ring.
    Show { id: String },
}

#[derive(Subcommand)]
enum Command {
    /// Inspect the built-in rings.
    #[command(subcommand)]
    Ring(RingCommand),
    /// Print the module catalog of a ring.
    Enumerate {
        #[arg(long)]
        ring: String,
        #[command(flatten)]
        policy: PolicyArgs,
        /// Emit JSON module descriptions instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Evaluate every predicate on one module.
    Profile {
        #[arg(long)]
        ring: String,
        /// A catalog index or a JSON module description file.
        #[arg(long)]
        module: String,
        #[command(flatten)]
        policy: PolicyArgs,
    },
    /// Run verification suites and write the report bundle.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Vec<String>,
        #[arg(long, default_value = "all")]
        ring: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[command(flatten)]
        policy: PolicyArgs,
    },
    /// Cross-check fast paths against definitions.
    Oracle {
        #[arg(long)]
        check: OracleCheck,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0x6d6f646c)]
        seed: u64,
        #[command(flatten)]
        policy: PolicyArgs,
    },
}

fn print_json(v: &impl Serialize) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

#[derive(Serialize)]
struct CatalogEntry {
    index: usize,
    size: usize,
    additive_invariants: Vec<u32>,
    fingerprint: String,
    module: ModuleDescription,
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Ring(RingCommand::List) => {
            for id in BUILTIN {
                let r = rings::builtin(id)?;
                println!("{id:<6} {:<10} |R| = {}", r.name(), r.size());
            }
        }
        Command::Ring(RingCommand::Show { id }) => print_json(&rings::describe(&id)?)?,
        Command::Enumerate { ring, policy, json } => {
            let r = rings::builtin(&ring)?;
            let c = enumerate_modules(&ring, &r, policy.policy())?;
            let entries: Vec<CatalogEntry> = c
                .modules
                .iter()
                .enumerate()
                .map(|(index, m)| CatalogEntry {
                    index,
                    size: m.size(),
                    additive_invariants: iso_invariants(m).1,
                    fingerprint: m.fingerprint_hex(),
                    module: ModuleDescription::of(m),
                })
                .collect();
            if json {
                print_json(&entries)?;
            } else {
                for e in &entries {
                    println!(
                        "{:>4} {:>5} {:?} {}",
                        e.index,
                        e.size,
                        e.additive_invariants,
                        &e.fingerprint[..16]
                    );
                }
                for s in &c.skipped {
                    eprintln!("skipped: {s}");
                }
            }
        }
        Command::Profile {
            ring,
            module,
            policy,
        } => {
            let r = rings::builtin(&ring)?;
            let m = match module.parse::<usize>() {
                Ok(i) => {
                    let c = enumerate_modules(&ring, &r, policy.policy())?;
                    c.modules.get(i).cloned().ok_or_else(|| {
                        HarnessError::InvalidConfig(format!(
                            "catalog index {i} out of range ({})",
                            c.modules.len()
                        ))
                    })?
                }
                Err(_) => {
                    let text = std::fs::read_to_string(&module)
                        .map_err(|e| HarnessError::io(&module, e))?;
                    ModuleDescription::parse(&text)?.build(&r)?
                }
            };
            print_json(&ProfileCache::from_env().profile(&ring, &m)?)?;
        }
        Command::Verify {
            suite,
            ring,
            out,
            jobs,
            policy,
        } => {
            let cfg = RunConfig {
                rings: ring,
                suites: suite,
                policy: policy.policy(),
                out,
                jobs,
            };
            let outcome = run_all(&cfg)?;
            for r in &outcome.reports {
                println!(
                    "{:<6} {:<6} instances {:>5}  disagreements {:>3}  skipped {:>3}",
                    r.suite,
                    r.ring,
                    r.summary.instances,
                    r.summary.disagreements,
                    r.summary.skipped
                );
            }
            for ring in &outcome.summary.rings {
                for f in &ring.consistency_flags {
                    eprintln!("flag {} module {}: {}", ring.ring, f.module, f.flag);
                }
            }
            for (suite, ring, inst) in minimal_witnesses(&outcome) {
                eprintln!(
                    "disagreement {suite} on {ring}: {}",
                    serde_json::to_string(inst)?
                );
            }
            println!("status: {}", outcome.summary.status);
            return Ok(ExitCode::from(outcome.exit_code() as u8));
        }
        Command::Oracle {
            check,
            samples,
            seed,
            policy,
        } => {
            let mut catalogs = Vec::new();
            for id in BUILTIN {
                catalogs.push(enumerate_modules(
                    id,
                    &rings::builtin(id)?,
                    policy.policy(),
                )?);
            }
            let report = run_oracle(check, &catalogs, samples, seed)?;
            print_json(&report)?;
            return Ok(ExitCode::from(u8::from(!report.passed())));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_config() { EXIT_CONFIG as u8 } else { 1 })
        }
    }
}
