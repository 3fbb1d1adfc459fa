//! Verification suites. A suite evaluates a family of statements on every
//! catalog module (or on the catalog as a whole) and records whether the
//! statements agree. Implications `P ⇒ Q` are encoded as the pair
//! `[P, P ∧ Q]`, so a disagreement is exactly a counterexample.

use std::collections::HashMap;
use std::sync::Mutex;

use modlab_core::error::AlgebraError;
use modlab_core::json::ModuleDescription;
use modlab_core::module::{sub_as_module, Module};
use modlab_core::structure::is_injective;
use modlab_core::ttheory::{Analysis, Status};
use serde::Serialize;

use crate::catalog::ModuleCatalog;
use crate::error::{HarnessError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// All statements hold or fail together on each subject.
    Equivalence,
    /// `[P, P ∧ Q]`.
    Implication,
    /// Each statement quantifies over the whole catalog.
    Universal,
    /// Expected values of a worked example; every statement must hold.
    Example,
}

#[derive(Debug, Clone, Serialize)]
pub struct Part {
    pub label: &'static str,
    pub relation: Relation,
    /// What a single subject of this part is.
    pub subject: &'static str,
    pub statements: Vec<&'static str>,
}

pub struct SuiteSpec {
    pub id: &'static str,
    pub title: &'static str,
    pub parts: Vec<Part>,
    /// Evaluated once per ring rather than per module.
    pub ring_level: bool,
}

fn part(
    label: &'static str,
    relation: Relation,
    subject: &'static str,
    statements: &[&'static str],
) -> Part {
    Part {
        label,
        relation,
        subject,
        statements: statements.to_vec(),
    }
}

use Relation::*;

pub const SUITE_IDS: [&str; 18] = [
    "P2.2", "L2.5", "P2.6", "C2.7", "C2.8", "T2.11", "P2.13", "T3.2", "C3.3", "C3.4", "P3.5",
    "T3.6", "P3.8", "T3.9", "C3.10", "T3.12", "E2.12", "E3.11",
];

pub fn suite(id: &str) -> Result<SuiteSpec> {
    let (title, parts, ring_level) = match id {
        "P2.2" => (
            "characterisations of t-small submodules",
            vec![part(
                "",
                Equivalence,
                "submodule A",
                &[
                    "A is t-small in M",
                    "A ∩ Z̄²(M) is small in Z̄²(M)",
                    "A ∩ Z̄²(M) is small in M",
                    "Z̄²(A) = 0",
                ],
            )],
            false,
        ),
        "L2.5" => (
            "basic behaviour of t-coclosed submodules",
            vec![
                part("(1)", Implication, "submodule C", &["C is t-coclosed", "and C ⊆ Z̄²(M)"]),
                part("(2)", Equivalence, "module", &["M is t-coclosed in M", "M is noncosingular"]),
                part(
                    "(3)",
                    Implication,
                    "pair A ⊆ C",
                    &["C is t-coclosed in M", "and C/A is t-coclosed in M/A"],
                ),
                part(
                    "(4)",
                    Implication,
                    "pair A ⊆ C",
                    &["C/A is t-coclosed in M/A and A is t-coclosed in M", "and C is t-coclosed in M"],
                ),
                part(
                    "(5)",
                    Equivalence,
                    "pair A ⊆ C with C amply supplemented",
                    &["A is t-coclosed in M", "A is t-coclosed in C"],
                ),
            ],
            false,
        ),
        "P2.6" => (
            "characterisations of t-coclosed submodules",
            vec![part(
                "",
                Equivalence,
                "submodule C",
                &[
                    "C is minimal with Z̄²(M) ⊆ C + S for some S",
                    "C is t-coclosed in M",
                    "C ⊆ Z̄²(M) and C is coclosed in Z̄²(M)",
                    "C ⊆ Z̄²(M) and C is coclosed in M",
                    "C is noncosingular",
                ],
            )],
            false,
        ),
        "C2.7" => (
            "t-coclosed submodules under endomorphisms",
            vec![
                part("(1)", Implication, "module", &["M is amply supplemented", "and Z̄²(M) is t-coclosed"]),
                part(
                    "(2)",
                    Implication,
                    "pair (φ, C)",
                    &["C is t-coclosed", "and φ(C) is t-coclosed"],
                ),
            ],
            false,
        ),
        "C2.8" => (
            "sums of t-coclosed submodules",
            vec![part(
                "",
                Implication,
                "pair (C1, C2)",
                &["C1 and C2 are t-coclosed", "and C1 + C2 is t-coclosed"],
            )],
            false,
        ),
        "T2.11" => (
            "characterisations of t-lifting modules",
            vec![part(
                "",
                Equivalence,
                "module",
                &[
                    "M is t-lifting",
                    "every A is N ⊕ N' with N a summand of M and N' t-small",
                    "every t-coclosed submodule is a summand",
                    "Z̄²(A) is a summand for every A",
                    "Z̄²(A) is a summand for every coclosed A",
                    "Z̄²(M) is a lifting summand",
                    "every A ⊆ Z̄²(M) lies over a summand N with A/N small in M/N",
                ],
            )],
            false,
        ),
        "P2.13" => (
            "t-lifting passes to submodules and fully invariant quotients",
            vec![
                part(
                    "(1)",
                    Implication,
                    "amply supplemented submodule A",
                    &["M is t-lifting", "and A is t-lifting"],
                ),
                part(
                    "(2)",
                    Implication,
                    "fully invariant submodule L",
                    &["M is t-lifting", "and M/L is t-lifting"],
                ),
            ],
            false,
        ),
        "T3.2" => (
            "characterisations of t-dual Baer modules",
            vec![part(
                "",
                Equivalence,
                "module",
                &[
                    "M is t-dual Baer",
                    "Z̄²(M) is a dual Baer summand",
                    "summands inside Z̄²(M) are closed under sums and every φ(Z̄²(M)) is a summand",
                    "every sum of images φ(Z̄²(M)) is a summand",
                ],
            )],
            false,
        ),
        "C3.3" => (
            "summand sums and regularity give t-dual Baer",
            vec![part(
                "",
                Implication,
                "module",
                &["summands inside Z̄²(M) are closed under sums and M is regular", "and M is t-dual Baer"],
            )],
            false,
        ),
        "C3.4" => (
            "regular t-dual Baer modules have semisimple Z̄²",
            vec![part(
                "",
                Implication,
                "module",
                &["M is regular and t-dual Baer", "and Z̄²(M) is semisimple"],
            )],
            false,
        ),
        "P3.5" => (
            "dual Baer with Z̄² a summand versus t-dual Baer",
            vec![part(
                "",
                Equivalence,
                "module",
                &[
                    "M is dual Baer and Z̄²(M) is a summand",
                    "M is t-dual Baer and I(M)/I(Z̄²(M)) is a summand of M/I(Z̄²(M)) for every right ideal I",
                ],
            )],
            false,
        ),
        "T3.6" => (
            "summands of t-dual Baer modules",
            vec![part(
                "",
                Implication,
                "direct summand N",
                &["M is t-dual Baer", "and N is t-dual Baer"],
            )],
            false,
        ),
        "P3.8" => (
            "t-K modules",
            vec![
                part(
                    "(1)",
                    Equivalence,
                    "module",
                    &["M is t-K", "T_S(N) = T_S(0) forces N small for every N ⊆ Z̄²(M)"],
                ),
                part("(2)", Implication, "module", &["M is t-K", "and Z̄²(M) is K"]),
            ],
            false,
        ),
        "T3.9" => (
            "t-lifting through endomorphism sets",
            vec![part(
                "",
                Equivalence,
                "module",
                &[
                    "M is t-lifting",
                    "M is t-dual Baer and t-K",
                    "M is t-dual Baer and C = T_S(C)(Z̄²(M)) for every t-coclosed C",
                    "M is t-dual Baer and T_S(C) = T_S(0) forces C = 0 for every t-coclosed C",
                ],
            )],
            false,
        ),
        "C3.10" => (
            "noncosingular lifting through endomorphism sets",
            vec![part(
                "",
                Equivalence,
                "module",
                &[
                    "M is noncosingular and lifting",
                    "M is t-dual Baer and strongly t-K",
                    "M is t-dual Baer and C = T_S(C)(Z̄²(M)) for every coclosed C",
                    "M is t-dual Baer and T_S(C) = T_S(0) forces C = 0 for every coclosed C",
                ],
            )],
            false,
        ),
        "T3.12" => (
            "ring-wide equivalences, quantified over the catalog",
            vec![part(
                "",
                Universal,
                "catalog",
                &[
                    "every noncosingular module is injective",
                    "every Z̄²(M) is an injective summand",
                    "every module is t-dual Baer",
                    "every module is t-lifting",
                    "every injective module is t-lifting",
                    "every noncosingular module is dual Baer and every Z̄²(M) is a summand",
                    "every noncosingular module is lifting and every Z̄²(M) is a summand",
                ],
            )],
            true,
        ),
        "E2.12" => (
            "lifting versus t-lifting on Z/2 ⊕ Z/4 and Z/2 ⊕ Z/8",
            vec![
                part("Z4", Example, "Z/2 ⊕ Z/4", &["M is lifting", "M is t-lifting"]),
                part(
                    "Z8",
                    Example,
                    "Z/2 ⊕ Z/8",
                    &["M is not lifting", "M is amply supplemented", "M is t-lifting"],
                ),
            ],
            true,
        ),
        "E3.11" => (
            "dual Baer versus t-dual Baer on the regular module of Z/4",
            vec![part(
                "Z4",
                Example,
                "regular module",
                &["M is not dual Baer", "the failing right ideal is 2S", "M is t-dual Baer"],
            )],
            true,
        ),
        _ => return Err(HarnessError::UnknownSuite(id.to_string())),
    };
    Ok(SuiteSpec {
        id: SUITE_IDS.iter().find(|s| **s == id).expect("listed"),
        title,
        parts,
        ring_level,
    })
}

/// Expands `all` and validates every id.
pub fn resolve(ids: &[String]) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for id in ids {
        if id == "all" {
            out.extend(SUITE_IDS.iter().map(|s| s.to_string()));
        } else {
            suite(id)?;
            out.push(id.clone());
        }
    }
    out.dedup();
    Ok(out)
}

/// Enough data to rebuild the instance: the module and the submodules or
/// endomorphisms it was evaluated on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub ring: String,
    pub module: ModuleDescription,
    /// Element codes of each submodule involved.
    pub submodules: Vec<Vec<u32>>,
    /// Images of the module basis under each endomorphism involved.
    pub endomorphisms: Vec<Vec<u32>>,
    pub values: Vec<bool>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Instance {
    /// Catalog index, absent for catalog-wide instances.
    pub module: Option<usize>,
    pub part: usize,
    pub subjects: usize,
    /// For each statement, the number of subjects on which it held.
    pub truth: Vec<usize>,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairwise: Option<Vec<Vec<bool>>>,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skip {
    pub module: Option<usize>,
    pub reason: String,
}

/// Accumulates the subjects of one part on one module.
struct Tally {
    part: usize,
    subjects: usize,
    truth: Vec<usize>,
    witness: Option<(Vec<usize>, Vec<usize>, Vec<bool>)>,
}

impl Tally {
    fn new(part: usize, n: usize) -> Self {
        Tally {
            part,
            subjects: 0,
            truth: vec![0; n],
            witness: None,
        }
    }

    fn add(&mut self, nodes: &[usize], endos: &[usize], values: &[bool]) {
        self.subjects += 1;
        for (t, &v) in self.truth.iter_mut().zip(values) {
            *t += usize::from(v);
        }
        if self.witness.is_none() && values.iter().any(|&v| v != values[0]) {
            self.witness = Some((nodes.to_vec(), endos.to_vec(), values.to_vec()));
        }
    }

    fn implication(&mut self, nodes: &[usize], endos: &[usize], p: bool, q: bool) {
        self.add(nodes, endos, &[p, p && q]);
    }

    fn finish(self, ctx: &Ctx, module: usize, an: &Analysis) -> Instance {
        let agree = self.witness.is_none();
        let witness = self.witness.map(|(nodes, endos, values)| {
            let end = an.end_ring().ok();
            Witness {
                ring: ctx.catalog.ring_id.clone(),
                module: ModuleDescription::of(an.module()),
                submodules: nodes
                    .iter()
                    .map(|&a| an.node(a).elements().to_vec())
                    .collect(),
                endomorphisms: endos
                    .iter()
                    .filter_map(|&p| end.as_ref().map(|e| e.get(p).images().to_vec()))
                    .collect(),
                values,
                note: String::new(),
            }
        });
        Instance {
            module: Some(module),
            part: self.part,
            subjects: self.subjects,
            truth: self.truth,
            agree,
            pairwise: None,
            witness,
        }
    }
}

/// Everything shared by the suites on one ring.
pub struct Ctx<'a> {
    pub catalog: &'a ModuleCatalog,
    pub analyses: &'a [Option<Analysis>],
    memo: Mutex<HashMap<([u8; 32], &'static str), Status>>,
}

/// Per-module outcome of a suite.
pub enum Outcome {
    Instances(Vec<Instance>),
    Skipped(Skip),
}

fn limited<T>(
    r: std::result::Result<T, AlgebraError>,
) -> std::result::Result<Option<T>, AlgebraError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(AlgebraError::SizeLimitExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

type Eval<T> = std::result::Result<T, EvalError>;

/// Limit breaches skip an instance; anything else is reported.
enum EvalError {
    Limit,
    Other(AlgebraError),
}

impl From<AlgebraError> for EvalError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::SizeLimitExceeded { .. } => EvalError::Limit,
            e => EvalError::Other(e),
        }
    }
}

fn known(s: Status) -> Eval<bool> {
    s.as_bool().ok_or(EvalError::Limit)
}

impl<'a> Ctx<'a> {
    pub fn new(catalog: &'a ModuleCatalog, analyses: &'a [Option<Analysis>]) -> Self {
        Ctx {
            catalog,
            analyses,
            memo: Mutex::new(HashMap::new()),
        }
    }

    /// A predicate of a derived module, memoised by content.
    fn derived(
        &self,
        m: &Module,
        key: &'static str,
        f: impl FnOnce(&Analysis) -> Eval<bool>,
    ) -> Eval<bool> {
        let k = (*m.fingerprint(), key);
        if let Some(&s) = self.memo.lock().unwrap_or_else(|e| e.into_inner()).get(&k) {
            return known(s);
        }
        let s = match Analysis::new(m)
            .map_err(EvalError::from)
            .and_then(|an| f(&an))
        {
            Ok(v) => Status::from_result(Ok(v)).expect("plain value"),
            Err(EvalError::Limit) => Status::Unevaluated,
            Err(e) => return Err(e),
        };
        self.memo
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .insert(k, s);
        known(s)
    }

    /// Runs a per-module suite on catalog entry `i`.
    pub fn run_module(&self, spec: &SuiteSpec, i: usize) -> Outcome {
        let skip = |reason: String| {
            Outcome::Skipped(Skip {
                module: Some(i),
                reason,
            })
        };
        let Some(an) = &self.analyses[i] else {
            return skip("submodule lattice above the configured limit".into());
        };
        if !an.amply_supplemented() {
            return skip("hypothesis failed: module is not amply supplemented".into());
        }
        match self.evaluate(spec.id, an) {
            Ok(tallies) => {
                Outcome::Instances(tallies.into_iter().map(|t| t.finish(self, i, an)).collect())
            }
            Err(EvalError::Limit) => skip("endomorphism ring above the configured limit".into()),
            Err(EvalError::Other(e)) => skip(format!("evaluation error: {e}")),
        }
    }

    fn evaluate(&self, id: &str, an: &Analysis) -> Eval<Vec<Tally>> {
        let sec = an.sections();
        let lat = sec.lattice();
        let top = an.top();
        let z2 = an.zbar2();
        let nodes: Vec<usize> = an.nodes().collect();
        let pairs = || {
            nodes
                .iter()
                .flat_map(move |&c| sec.interval(0, c).into_iter().map(move |a| (a, c)))
                .collect::<Vec<_>>()
        };
        let tcc: Vec<bool> = nodes
            .iter()
            .map(|&c| an.tcoclosed(c))
            .collect::<std::result::Result<_, _>>()?;
        let mut out = Vec::new();
        match id {
            "P2.2" => {
                let mut t = Tally::new(0, 4);
                for &a in &nodes {
                    t.add(&[a], &[], &an.tsmall_routes(a)?);
                }
                out.push(t);
            }
            "L2.5" => {
                let mut t1 = Tally::new(0, 2);
                for &c in &nodes {
                    t1.implication(&[c], &[], tcc[c], lat.leq(c, z2));
                }
                let mut t2 = Tally::new(1, 2);
                t2.add(&[top], &[], &[tcc[top], an.noncosingular()]);
                let mut t3 = Tally::new(2, 2);
                let mut t4 = Tally::new(3, 2);
                let mut t5 = Tally::new(4, 2);
                for (a, c) in pairs() {
                    let quot = sec.tcoclosed(c, a, top)?;
                    t3.implication(&[a, c], &[], tcc[c], quot);
                    t4.implication(&[a, c], &[], quot && tcc[a], tcc[c]);
                    if sec.amply_supplemented(0, c) {
                        t5.add(&[a, c], &[], &[tcc[a], sec.tcoclosed(a, 0, c)?]);
                    }
                }
                out.extend([t1, t2, t3, t4, t5]);
            }
            "P2.6" => {
                let mut t = Tally::new(0, 5);
                for &c in &nodes {
                    t.add(&[c], &[], &an.tcoclosed_routes(c)?);
                }
                out.push(t);
            }
            "C2.7" => {
                let mut t1 = Tally::new(0, 2);
                t1.implication(&[z2], &[], an.amply_supplemented(), tcc[z2]);
                let mut t2 = Tally::new(1, 2);
                let n = an.end_ring()?.len();
                for &c in nodes.iter().filter(|&&c| tcc[c]) {
                    for phi in 0..n {
                        let img = an.image_node(phi, c)?;
                        t2.implication(&[c, img], &[phi], true, tcc[img]);
                    }
                }
                out.extend([t1, t2]);
            }
            "C2.8" => {
                let mut t = Tally::new(0, 2);
                let closed: Vec<usize> = nodes.iter().copied().filter(|&c| tcc[c]).collect();
                for (k, &c1) in closed.iter().enumerate() {
                    for &c2 in &closed[k..] {
                        t.implication(&[c1, c2], &[], true, tcc[lat.join(c1, c2)]);
                    }
                }
                out.push(t);
            }
            "T2.11" => {
                let mut t = Tally::new(0, 7);
                t.add(&[], &[], &an.tlifting_routes()?);
                out.push(t);
            }
            "P2.13" => {
                let tl = an.tlifting()?;
                let mut t1 = Tally::new(0, 2);
                for &a in &nodes {
                    if sec.amply_supplemented(0, a) {
                        t1.implication(&[a], &[], tl, sec.tlifting(0, a)?);
                    }
                }
                let mut t2 = Tally::new(1, 2);
                for l in an.fully_invariant()? {
                    t2.implication(&[l], &[], tl, sec.tlifting(l, top)?);
                }
                out.extend([t1, t2]);
            }
            "T3.2" => {
                let mut t = Tally::new(0, 4);
                t.add(&[], &[], &an.tdual_baer_routes()?);
                out.push(t);
            }
            "C3.3" => {
                let mut t = Tally::new(0, 2);
                let p = an.sssp_in_zbar2() && an.regular();
                let q = if p { an.tdual_baer()? } else { true };
                t.implication(&[], &[], p, q);
                out.push(t);
            }
            "C3.4" => {
                let mut t = Tally::new(0, 2);
                let p = an.regular() && an.tdual_baer()?;
                t.implication(&[z2], &[], p, sec.semisimple(0, z2));
                out.push(t);
            }
            "P3.5" => {
                let mut t = Tally::new(0, 2);
                let left = an.dual_baer()? && an.summand(z2);
                let quotients = an
                    .ideal_images()?
                    .into_iter()
                    .all(|(full, part)| sec.complement(full, part, top).is_some());
                t.add(&[z2], &[], &[left, an.tdual_baer()? && quotients]);
                out.push(t);
            }
            "T3.6" => {
                let mut t = Tally::new(0, 2);
                let tdb = an.tdual_baer()?;
                for n in sec.summands(0, top) {
                    let q = if tdb {
                        let sub = sub_as_module(an.module(), an.node(n))?.module;
                        self.derived(&sub, "t_dual_baer", |x| Ok(x.tdual_baer()?))?
                    } else {
                        true
                    };
                    t.implication(&[n], &[], tdb, q);
                }
                out.push(t);
            }
            "P3.8" => {
                let tk = an.k_class()?.t_k;
                let mut t1 = Tally::new(0, 2);
                t1.add(&[], &[], &[tk, an.t_k_inside_zbar2()?]);
                let mut t2 = Tally::new(1, 2);
                let q = if tk {
                    self.derived(&an.zbar2_module()?, "k", |x| Ok(x.k_class()?.k))?
                } else {
                    true
                };
                t2.implication(&[z2], &[], tk, q);
                out.extend([t1, t2]);
            }
            "T3.9" => {
                let mut t = Tally::new(0, 4);
                t.add(&[], &[], &an.tlifting_endo_routes()?);
                out.push(t);
            }
            "C3.10" => {
                let mut t = Tally::new(0, 4);
                t.add(&[], &[], &an.noncosingular_lifting_routes()?);
                out.push(t);
            }
            other => unreachable!("{other} is evaluated per ring"),
        }
        Ok(out)
    }

    /// Runs a ring-level suite.
    pub fn run_ring(&self, spec: &SuiteSpec) -> (Vec<Instance>, Vec<Skip>) {
        let r = match spec.id {
            "T3.12" => self.ring_wide(),
            "E2.12" => self.example_lifting(),
            "E3.11" => self.example_dual_baer(),
            other => unreachable!("{other} is evaluated per module"),
        };
        match r {
            Ok(v) => v,
            Err(e) => (
                Vec::new(),
                vec![Skip {
                    module: None,
                    reason: format!("evaluation error: {e}"),
                }],
            ),
        }
    }

    fn ring_wide(&self) -> Result<(Vec<Instance>, Vec<Skip>)> {
        let mut fails: Vec<Vec<usize>> = vec![Vec::new(); 7];
        let mut skipped = Vec::new();
        let mut subjects = 0;
        for (i, an) in self.analyses.iter().enumerate() {
            let Some(an) = an else {
                skipped.push(Skip {
                    module: Some(i),
                    reason: "submodule lattice above the configured limit".into(),
                });
                continue;
            };
            let m = an.module();
            let row = (|| -> Eval<[bool; 7]> {
                let noncos = an.noncosingular();
                let z2_summand = an.summand(an.zbar2());
                let injective = is_injective(m)?;
                let z2_injective = is_injective(&an.zbar2_module()?)?;
                let tl = an.tlifting()?;
                Ok([
                    !noncos || injective,
                    z2_summand && z2_injective,
                    an.tdual_baer()?,
                    tl,
                    !injective || tl,
                    (!noncos || an.dual_baer()?) && z2_summand,
                    (!noncos || an.lifting()) && z2_summand,
                ])
            })();
            match row {
                Ok(row) => {
                    subjects += 1;
                    for (k, ok) in row.iter().enumerate() {
                        if !ok {
                            fails[k].push(i);
                        }
                    }
                }
                Err(EvalError::Limit) => skipped.push(Skip {
                    module: Some(i),
                    reason: "endomorphism ring above the configured limit".into(),
                }),
                Err(EvalError::Other(e)) => return Err(e.into()),
            }
        }
        let truth: Vec<bool> = fails.iter().map(|f| f.is_empty()).collect();
        let agree = truth.iter().all(|&v| v == truth[0]);
        let pairwise = truth
            .iter()
            .map(|&a| truth.iter().map(|&b| a == b).collect())
            .collect();
        let witness = (!agree).then(|| {
            let first = fails
                .iter()
                .flatten()
                .min()
                .copied()
                .expect("some statement failed");
            let an = self.analyses[first].as_ref().expect("evaluated");
            let note = fails
                .iter()
                .enumerate()
                .filter(|(_, f)| !f.is_empty())
                .map(|(k, f)| format!("statement {} fails on catalog modules {:?}", k + 1, f))
                .collect::<Vec<_>>()
                .join("; ");
            Witness {
                ring: self.catalog.ring_id.clone(),
                module: ModuleDescription::of(an.module()),
                submodules: vec![an.node(an.zbar2()).elements().to_vec()],
                endomorphisms: Vec::new(),
                values: truth.clone(),
                note,
            }
        });
        let inst = Instance {
            module: None,
            part: 0,
            subjects,
            truth: truth.iter().map(|&v| usize::from(v)).collect(),
            agree,
            pairwise: Some(pairwise),
            witness,
        };
        Ok((vec![inst], skipped))
    }

    fn example_instance(
        &self,
        part: usize,
        orders: &[u32],
        values: impl FnOnce(&Analysis) -> Eval<Vec<bool>>,
    ) -> Result<(Vec<Instance>, Vec<Skip>)> {
        let m = crate::fixtures::zmod(&self.catalog.ring, orders);
        let index = self.catalog.find(&m)?;
        let local;
        let an = match index.and_then(|i| self.analyses[i].as_ref()) {
            Some(an) => an,
            None => {
                local = Analysis::new(&m)?;
                &local
            }
        };
        let values = match values(an) {
            Ok(v) => v,
            Err(EvalError::Limit) => {
                return Ok((
                    Vec::new(),
                    vec![Skip {
                        module: index,
                        reason: "endomorphism ring above the configured limit".into(),
                    }],
                ))
            }
            Err(EvalError::Other(e)) => return Err(e.into()),
        };
        let agree = values.iter().all(|&v| v);
        let witness = (!agree).then(|| Witness {
            ring: self.catalog.ring_id.clone(),
            module: ModuleDescription::of(an.module()),
            submodules: Vec::new(),
            endomorphisms: Vec::new(),
            values: values.clone(),
            note: "expected every statement to hold".into(),
        });
        Ok((
            vec![Instance {
                module: index,
                part,
                subjects: 1,
                truth: values.iter().map(|&v| usize::from(v)).collect(),
                agree,
                pairwise: None,
                witness,
            }],
            Vec::new(),
        ))
    }

    fn example_lifting(&self) -> Result<(Vec<Instance>, Vec<Skip>)> {
        match self.catalog.ring_id.as_str() {
            "Z4" => self.example_instance(0, &[2, 4], |an| Ok(vec![an.lifting(), an.tlifting()?])),
            "Z8" => self.example_instance(1, &[2, 8], |an| {
                Ok(vec![!an.lifting(), an.amply_supplemented(), an.tlifting()?])
            }),
            _ => Ok((Vec::new(), Vec::new())),
        }
    }

    fn example_dual_baer(&self) -> Result<(Vec<Instance>, Vec<Skip>)> {
        if self.catalog.ring_id != "Z4" {
            return Ok((Vec::new(), Vec::new()));
        }
        self.example_instance(0, &[4], |an| {
            let witness = an.dual_baer_witness()?;
            let end = an.end_ring()?;
            let is_2s = witness.as_ref().is_some_and(|w| {
                let mut images: Vec<u32> =
                    w.members.iter().map(|&p| end.get(p).images()[0]).collect();
                images.sort_unstable();
                images == [0, 2]
            });
            Ok(vec![witness.is_some(), is_2s, an.tdual_baer()?])
        })
    }
}

/// Builds the analysis of every catalog module; `None` marks limit breaches.
pub fn analyses(catalog: &ModuleCatalog) -> Result<Vec<Option<Analysis>>> {
    use rayon::prelude::*;
    catalog
        .modules
        .par_iter()
        .map(|m| limited(Analysis::new(m)).map_err(HarnessError::from))
        .collect()
}
