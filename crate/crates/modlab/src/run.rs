//! `run_all`: catalogs, suites, consistency flags and the report bundle.

use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{enumerate_modules, Policy};
use crate::error::{HarnessError, Result};
use crate::profile::profile_analysis;
use crate::rings;
use crate::suites::{self, Ctx, Instance, Outcome, Part, Skip};

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub rings: Vec<String>,
    pub suites: Vec<String>,
    pub policy: Policy,
    pub out: Option<PathBuf>,
    /// Worker threads; zero lets rayon decide.
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            rings: vec!["all".into()],
            suites: vec!["all".into()],
            policy: Policy::default(),
            out: None,
            jobs: 0,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub instances: usize,
    pub subjects: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub suite: String,
    pub ring: String,
    pub title: String,
    pub scope: String,
    pub parts: Vec<Part>,
    pub instances: Vec<Instance>,
    pub skipped: Vec<Skip>,
    pub summary: Summary,
}

impl TheoremReport {
    pub fn file_name(&self) -> String {
        format!("{}-{}.json", self.suite, self.ring)
    }

    pub fn disagreements(&self) -> impl Iterator<Item = &Instance> {
        self.instances.iter().filter(|i| !i.agree)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FlagRecord {
    pub module: usize,
    pub fingerprint: String,
    pub flag: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RingRun {
    pub ring: String,
    pub catalog_size: usize,
    pub catalog_skipped: Vec<String>,
    pub consistency_flags: Vec<FlagRecord>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportLine {
    pub suite: String,
    pub ring: String,
    pub file: String,
    pub instances: usize,
    pub disagreements: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunSummary {
    pub policy: Policy,
    pub note: String,
    pub rings: Vec<RingRun>,
    pub reports: Vec<ReportLine>,
    pub disagreements: usize,
    pub consistency_flags: usize,
    pub status: String,
}

pub struct RunOutcome {
    pub reports: Vec<TheoremReport>,
    pub summary: RunSummary,
}

impl RunOutcome {
    pub fn exit_code(&self) -> i32 {
        i32::from(self.summary.disagreements + self.summary.consistency_flags > 0)
    }
}

fn scope(policy: &Policy, ring: &str, modules: usize) -> String {
    format!(
        "catalog over {ring}: {modules} modules up to isomorphism, quotients of R^n for n <= {} of size <= {}, \
         closed under summands; statements about all modules are checked on this bounded catalog only",
        policy.max_generators, policy.max_size
    )
}

/// Exit status for a configuration error.
pub const EXIT_CONFIG: i32 = 2;

pub fn run_all(cfg: &RunConfig) -> Result<RunOutcome> {
    let ring_ids = rings::resolve(&cfg.rings)?;
    let suite_ids = suites::resolve(&cfg.suites)?;
    cfg.policy.validate()?;
    if ring_ids.is_empty() || suite_ids.is_empty() {
        return Err(HarnessError::InvalidConfig(
            "no rings or no suites selected".into(),
        ));
    }
    let specs: Vec<_> = suite_ids
        .iter()
        .map(|s| suites::suite(s))
        .collect::<Result<_>>()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| HarnessError::InvalidConfig(e.to_string()))?;
    pool.install(|| {
        let mut reports = Vec::new();
        let mut ring_runs = Vec::new();
        for id in &ring_ids {
            let clock = Instant::now();
            let ring = rings::builtin(id)?;
            let catalog = enumerate_modules(id, &ring, cfg.policy)?;
            let analyses = suites::analyses(&catalog)?;
            let ctx = Ctx::new(&catalog, &analyses);

            let flags: Vec<FlagRecord> = analyses
                .par_iter()
                .enumerate()
                .map(|(i, an)| -> Result<Vec<FlagRecord>> {
                    let Some(an) = an else { return Ok(Vec::new()) };
                    let p = profile_analysis(id, an)?;
                    Ok(p.flags
                        .into_iter()
                        .map(|flag| FlagRecord {
                            module: i,
                            fingerprint: p.module.fingerprint.clone(),
                            flag,
                        })
                        .collect())
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .collect();

            let tasks: Vec<(usize, usize)> = specs
                .iter()
                .enumerate()
                .filter(|(_, s)| !s.ring_level)
                .flat_map(|(k, _)| (0..catalog.modules.len()).map(move |i| (k, i)))
                .collect();
            let outcomes: Vec<Outcome> = tasks.par_iter().map(|&(k, i)| ctx.run_module(&specs[k], i)).collect();
            let mut per_suite: Vec<(Vec<Instance>, Vec<Skip>)> = vec![(Vec::new(), Vec::new()); specs.len()];
            for (&(k, _), o) in tasks.iter().zip(outcomes) {
                match o {
                    Outcome::Instances(v) => per_suite[k].0.extend(v),
                    Outcome::Skipped(s) => per_suite[k].1.push(s),
                }
            }
            for (k, spec) in specs.iter().enumerate() {
                if spec.ring_level {
                    per_suite[k] = ctx.run_ring(spec);
                }
            }
            for (spec, (instances, skipped)) in specs.iter().zip(per_suite) {
                let disagreements = instances.iter().filter(|i| !i.agree).count();
                reports.push(TheoremReport {
                    suite: spec.id.to_string(),
                    ring: id.clone(),
                    title: spec.title.to_string(),
                    scope: scope(&cfg.policy, id, catalog.modules.len()),
                    parts: spec.parts.clone(),
                    summary: Summary {
                        instances: instances.len(),
                        subjects: instances.iter().map(|i| i.subjects).sum(),
                        agreements: instances.len() - disagreements,
                        disagreements,
                        skipped: skipped.len(),
                    },
                    instances,
                    skipped,
                });
            }
            eprintln!(
                "{id}: {} modules, {} flags, {:.1}s",
                catalog.modules.len(),
                flags.len(),
                clock.elapsed().as_secs_f64()
            );
            ring_runs.push(RingRun {
                ring: id.clone(),
                catalog_size: catalog.modules.len(),
                catalog_skipped: catalog.skipped.clone(),
                consistency_flags: flags,
            });
        }
        let disagreements = reports.iter().map(|r| r.summary.disagreements).sum();
        let consistency_flags = ring_runs.iter().map(|r| r.consistency_flags.len()).sum();
        let summary = RunSummary {
            policy: cfg.policy,
            note: "bounded verification: an all-agree result is evidence over the catalogs, not a proof".into(),
            reports: reports
                .iter()
                .map(|r| ReportLine {
                    suite: r.suite.clone(),
                    ring: r.ring.clone(),
                    file: r.file_name(),
                    instances: r.summary.instances,
                    disagreements: r.summary.disagreements,
                    skipped: r.summary.skipped,
                })
                .collect(),
            rings: ring_runs,
            disagreements,
            consistency_flags,
            status: if disagreements + consistency_flags == 0 {
                "ok".into()
            } else {
                "disagreement".into()
            },
        };
        let outcome = RunOutcome { reports, summary };
        if let Some(dir) = &cfg.out {
            write_bundle(&outcome, dir)?;
        }
        Ok(outcome)
    })
}

fn write_json(path: &Path, value: &impl Serialize) -> Result<()> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    std::fs::write(path, bytes).map_err(|e| HarnessError::io(path, e))
}

pub fn write_bundle(outcome: &RunOutcome, dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| HarnessError::io(dir, e))?;
    for r in &outcome.reports {
        write_json(&dir.join(r.file_name()), r)?;
    }
    write_json(&dir.join("summary.json"), &outcome.summary)
}

/// The first disagreement of each report, smallest module first.
pub fn minimal_witnesses(outcome: &RunOutcome) -> Vec<(String, String, &Instance)> {
    outcome
        .reports
        .iter()
        .filter_map(|r| {
            r.disagreements()
                .next()
                .map(|i| (r.suite.clone(), r.ring.clone(), i))
        })
        .collect()
}
