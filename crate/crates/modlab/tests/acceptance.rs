//! Acceptance gate: one PASS/FAIL line per criterion. Criteria 3 to 5 read
//! the report bundle written by the first of the two CLI runs used for the
//! determinism check.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use modlab::catalog::{enumerate_modules, ModuleCatalog, Policy};
use modlab::fixtures::zmod;
use modlab::oracle::{run_oracle, OracleCheck};
use modlab::profile::profile_module;
use modlab::rings::{self, BUILTIN};
use modlab_core::hom::is_isomorphic;
use modlab_core::lattice::is_essential;
use modlab_core::module::regular_module;
use modlab_core::structure::{character_dual, injective_hull, is_injective};
use modlab_core::ttheory::{Analysis, Status};
use serde_json::Value;

struct Gate {
    failures: usize,
}

impl Gate {
    fn report(&mut self, n: usize, what: &str, outcome: Result<String, String>) {
        match outcome {
            Ok(detail) => println!("criterion {n} PASS  {what}: {detail}"),
            Err(detail) => {
                self.failures += 1;
                println!("criterion {n} FAIL  {what}: {detail}");
            }
        }
    }
}

fn within(limit: Duration, start: Instant) -> Result<String, String> {
    let t = start.elapsed();
    if t <= limit {
        Ok(format!("{:.2}s", t.as_secs_f64()))
    } else {
        Err(format!(
            "took {:.2}s, limit {:.0}s",
            t.as_secs_f64(),
            limit.as_secs_f64()
        ))
    }
}

fn lifting_examples() -> Result<String, String> {
    let start = Instant::now();
    let want = |ring: &str, orders: &[u32], expect: &[(&str, Status)]| -> Result<(), String> {
        let r = rings::builtin(ring).map_err(|e| e.to_string())?;
        let p = profile_module(ring, &zmod(&r, orders)).map_err(|e| e.to_string())?;
        for (k, v) in expect {
            if p.predicates[*k] != *v {
                return Err(format!(
                    "{ring} {orders:?}: {k} = {:?}, expected {v:?}",
                    p.predicates[*k]
                ));
            }
        }
        Ok(())
    };
    want(
        "Z4",
        &[2, 4],
        &[("lifting", Status::True), ("t_lifting", Status::True)],
    )?;
    want(
        "Z8",
        &[2, 8],
        &[
            ("lifting", Status::False),
            ("amply_supplemented", Status::True),
            ("t_lifting", Status::True),
        ],
    )?;
    within(Duration::from_secs(10), start)
}

fn dual_baer_example() -> Result<String, String> {
    let start = Instant::now();
    let m = regular_module(&rings::builtin("Z4").map_err(|e| e.to_string())?);
    let an = Analysis::new(&m).map_err(|e| e.to_string())?;
    let w = an
        .dual_baer_witness()
        .map_err(|e| e.to_string())?
        .ok_or("R_R reported dual Baer")?;
    let end = an.end_ring().map_err(|e| e.to_string())?;
    let mut images: Vec<u32> = w.members.iter().map(|&p| end.get(p).images()[0]).collect();
    images.sort_unstable();
    if images != [0, 2] {
        return Err(format!("witness ideal maps 1 to {images:?}, expected 2S"));
    }
    if !an.tdual_baer().map_err(|e| e.to_string())? {
        return Err("R_R reported not t-dual Baer".into());
    }
    within(Duration::from_secs(5), start)
}

fn read_json(path: &Path) -> Result<Value, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Zero disagreements and zero skips for every (suite, ring) report.
fn suites_clean(dir: &Path, suites: &[&str]) -> Result<String, String> {
    let mut subjects = 0;
    for suite in suites {
        for ring in BUILTIN {
            let r = read_json(&dir.join(format!("{suite}-{ring}.json")))?;
            let s = &r["summary"];
            let (d, k) = (s["disagreements"].as_u64(), s["skipped"].as_u64());
            if d != Some(0) || k != Some(0) {
                return Err(format!(
                    "{suite} on {ring}: disagreements {d:?}, skipped {k:?}"
                ));
            }
            if s["instances"].as_u64() == Some(0) {
                return Err(format!("{suite} on {ring}: no instances"));
            }
            subjects += s["subjects"].as_u64().unwrap_or(0);
        }
    }
    Ok(format!(
        "{} suites x 6 rings, {subjects} subjects",
        suites.len()
    ))
}

fn ring_wide(dir: &Path) -> Result<String, String> {
    for ring in BUILTIN {
        let r = read_json(&dir.join(format!("T3.12-{ring}.json")))?;
        let inst = &r["instances"][0];
        if inst["agree"] != Value::Bool(true) {
            return Err(format!("statements disagree on {ring}: {}", inst["truth"]));
        }
        if ring == "F2xZ4" && inst["truth"] != serde_json::json!([1, 1, 1, 1, 1, 1, 1]) {
            return Err(format!("F2xZ4 vector {}", inst["truth"]));
        }
    }
    Ok("all seven true over F2xZ4, pairwise agreement on all six rings".into())
}

fn oracles(catalogs: &[ModuleCatalog]) -> Result<String, String> {
    let mut parts = Vec::new();
    for (check, samples) in [
        (OracleCheck::Small, 1000),
        (OracleCheck::Summand, 1000),
        (OracleCheck::Zbar, 0),
    ] {
        let r = run_oracle(check, catalogs, samples, 0x6d6f646c).map_err(|e| e.to_string())?;
        if !r.passed() {
            return Err(format!("{check:?}: {}", r.mismatches[0]));
        }
        if r.random_cases < samples {
            return Err(format!("{check:?}: only {} random cases", r.random_cases));
        }
        parts.push(format!("{check:?} {}+{}", r.catalog_cases, r.random_cases));
    }
    Ok(parts.join(", "))
}

fn duality(catalogs: &[ModuleCatalog]) -> Result<String, String> {
    let mut n = 0;
    for c in catalogs {
        for (i, m) in c.modules.iter().enumerate() {
            let e = |x: modlab_core::error::AlgebraError| format!("{} #{i}: {x}", c.ring_id);
            let dd = character_dual(&character_dual(m).map_err(e)?).map_err(e)?;
            if !is_isomorphic(&dd, m).map_err(e)? {
                return Err(format!("{} #{i}: D(D(M)) not isomorphic to M", c.ring_id));
            }
            let h = injective_hull(m).map_err(e)?;
            if !h.embedding.is_injective()
                || !is_essential(&h.module, &h.embedding.image()).map_err(e)?
            {
                return Err(format!("{} #{i}: M not essential in E(M)", c.ring_id));
            }
            if !is_injective(&h.module).map_err(e)? {
                return Err(format!("{} #{i}: E(M) not injective", c.ring_id));
            }
            n += 1;
        }
    }
    Ok(format!("{n} catalog modules"))
}

fn verify_run(out: &Path) -> Result<Duration, String> {
    let start = Instant::now();
    let status = Command::new(env!("CARGO_BIN_EXE_modlab"))
        .args(["verify", "--suite", "all", "--ring", "all", "--out"])
        .arg(out)
        .stdout(std::process::Stdio::null())
        .status()
        .map_err(|e| e.to_string())?;
    if !status.success() {
        return Err(format!("verify exited with {status}"));
    }
    Ok(start.elapsed())
}

fn bundle(dir: &Path) -> Result<BTreeMap<String, Vec<u8>>, String> {
    let mut files = BTreeMap::new();
    for entry in std::fs::read_dir(dir).map_err(|e| e.to_string())? {
        let path = entry.map_err(|e| e.to_string())?.path();
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        files.insert(name, std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    Ok(files)
}

fn main() {
    let mut gate = Gate { failures: 0 };
    let root: PathBuf =
        std::env::temp_dir().join(format!("modlab-acceptance-{}", std::process::id()));
    let (first, second) = (root.join("run1"), root.join("run2"));

    gate.report(1, "lifting versus t-lifting examples", lifting_examples());
    gate.report(
        2,
        "regular module of Z/4 is t-dual Baer but not dual Baer",
        dual_baer_example(),
    );

    let run1 = verify_run(&first);
    let equivalence = ["P2.2", "P2.6", "T2.11", "T3.2", "T3.9", "C3.10"];
    let structural = [
        "L2.5", "C2.7", "C2.8", "P2.13", "C3.3", "C3.4", "P3.5", "T3.6", "P3.8",
    ];
    match &run1 {
        Ok(t) => {
            let limit = Duration::from_secs(30 * 60);
            let timed = suites_clean(&first, &equivalence).and_then(|s| {
                if *t <= limit {
                    Ok(format!("{s}; full run {:.1}s", t.as_secs_f64()))
                } else {
                    Err(format!("full run took {:.1}s", t.as_secs_f64()))
                }
            });
            gate.report(3, "equivalence suites agree on the default catalogs", timed);
            gate.report(
                4,
                "structural suites hold on the default catalogs",
                suites_clean(&first, &structural),
            );
            gate.report(5, "ring-wide statements", ring_wide(&first));
        }
        Err(e) => {
            for (n, what) in [
                (3, "equivalence suites"),
                (4, "structural suites"),
                (5, "ring-wide statements"),
            ] {
                gate.report(n, what, Err(format!("verify run failed: {e}")));
            }
        }
    }

    let catalogs: Result<Vec<ModuleCatalog>, String> = BUILTIN
        .iter()
        .map(|id| {
            let r = rings::builtin(id).map_err(|e| e.to_string())?;
            enumerate_modules(id, &r, Policy::default()).map_err(|e| e.to_string())
        })
        .collect();
    match &catalogs {
        Ok(c) => {
            gate.report(6, "fast paths agree with definitions", oracles(c));
            gate.report(7, "duality and injective hulls", duality(c));
        }
        Err(e) => {
            gate.report(6, "fast paths agree with definitions", Err(e.clone()));
            gate.report(7, "duality and injective hulls", Err(e.clone()));
        }
    }

    let determinism = run1.and_then(|_| verify_run(&second)).and_then(|_| {
        let (a, b) = (bundle(&first)?, bundle(&second)?);
        if a.is_empty() {
            return Err("empty bundle".into());
        }
        if a != b {
            let diff: Vec<&String> = a.keys().filter(|k| a.get(*k) != b.get(*k)).collect();
            return Err(format!("bundles differ in {diff:?}"));
        }
        Ok(format!("{} files byte-identical", a.len()))
    });
    gate.report(8, "two verify runs produce identical bundles", determinism);

    let _ = std::fs::remove_dir_all(&root);
    println!("acceptance: {} of 8 criteria passed", 8 - gate.failures);
    if gate.failures > 0 {
        std::process::exit(1);
    }
}
