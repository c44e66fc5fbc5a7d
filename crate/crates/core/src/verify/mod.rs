//! The claim catalog, the runner that evaluates it over instance and witness
//! populations, and counterexample search.
//!
//! Every assertion the library's operations are supposed to satisfy lives in
//! one catalog entry with a stable id, a hypothesis filter, and a witness
//! kind.  The runner evaluates entries over a population of instances,
//! counts every case and skip, and on failure captures a witness that can be
//! re-evaluated from its serialized form alone.  Reports are deterministic:
//! identical inputs and seed give byte-identical output.

mod catalog;
mod instance;
mod report;
mod runner;
mod subsets;

pub use catalog::{catalog, CheckEntry};
pub use instance::InstanceData;
pub use report::{render_failure, render_json, render_text};
pub use runner::{
    reevaluate, run_check, run_suite, search_counterexample, SearchOutcome, SearchReport,
};
pub use subsets::{default_lattice, parse_lattice, SubsetParams};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::InputError;
use crate::fuzzy::{characteristic_pair, CrispSubset, IFSubset};
use crate::semigroup::GammaSemigroup;

/// Instance-level precondition of a catalog entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    None,
    BothUnities,
    Commutative,
    CommutativeUnities,
}

impl Hypothesis {
    pub fn name(self) -> &'static str {
        match self {
            Hypothesis::None => "none",
            Hypothesis::BothUnities => "both-unities",
            Hypothesis::Commutative => "commutative",
            Hypothesis::CommutativeUnities => "commutative+unities",
        }
    }

    /// Admits the instance or names the first failing requirement.
    pub fn admits(self, inst: &InstanceData) -> Result<(), &'static str> {
        let unities = |inst: &InstanceData| {
            if inst.ctx().unities().left.is_none() {
                return Err("no left unity");
            }
            if inst.ctx().unities().right.is_none() {
                return Err("no right unity");
            }
            Ok(())
        };
        match self {
            Hypothesis::None => Ok(()),
            Hypothesis::BothUnities => unities(inst),
            Hypothesis::Commutative if !inst.commutative() => Err("not commutative"),
            Hypothesis::Commutative => Ok(()),
            Hypothesis::CommutativeUnities => {
                if !inst.commutative() {
                    return Err("not commutative");
                }
                unities(inst)
            }
        }
    }
}

/// What a catalog entry draws its witnesses from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    CrispSubsets,
    FuzzySubsets,
    FuzzyIdealSubsets,
    IdealFamilies,
}

impl WitnessKind {
    pub fn name(self) -> &'static str {
        match self {
            WitnessKind::CrispSubsets => "crisp subsets",
            WitnessKind::FuzzySubsets => "fuzzy subsets",
            WitnessKind::FuzzyIdealSubsets => "fuzzy-ideal subsets",
            WitnessKind::IdealFamilies => "ideal families",
        }
    }
}

/// Outcome of one check over a population.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// Every potential case was skipped; nothing was actually verified.
    Vacuous,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Vacuous => "VACUOUS",
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// One serialized subset participating in a failure, with its role in the
/// violated identity.  Crisp subsets are serialized as characteristic pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessPart {
    pub role: String,
    pub ifs: String,
}

/// A failing case, re-evaluable from the serialized fields alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// Position of the instance in the population (presentation only).
    pub instance_index: usize,
    /// Position of the case within (check, instance); deterministic.
    pub case_index: u64,
    pub instance_gsg: String,
    pub parts: Vec<WitnessPart>,
    pub detail: String,
}

/// Receives case verdicts and skips while a check runs over one instance.
pub struct CaseSink<'a> {
    inst: &'a InstanceData,
    instance_index: usize,
    mutate: bool,
    salt: u64,
    cases: u64,
    skipped: u64,
    reasons: BTreeMap<&'static str, u64>,
    failure: Option<Failure>,
}

impl<'a> CaseSink<'a> {
    pub(crate) fn new(
        inst: &'a InstanceData,
        instance_index: usize,
        id: &str,
        mutate: bool,
    ) -> Self {
        CaseSink {
            inst,
            instance_index,
            mutate,
            salt: subsets::fnv1a(id.bytes()),
            cases: 0,
            skipped: 0,
            reasons: BTreeMap::new(),
            failure: None,
        }
    }

    /// Stable per-check salt for witness draws inside assertions.
    pub fn salt(&self) -> u64 {
        self.salt
    }

    /// Records one evaluated case; `witness` is rendered only on the first
    /// failure.  In mutation mode the verdict is negated before recording.
    pub fn case(&mut self, ok: bool, witness: impl FnOnce() -> (Vec<WitnessPart>, String)) {
        let index = self.cases;
        self.cases += 1;
        let ok = if self.mutate { !ok } else { ok };
        if !ok && self.failure.is_none() {
            let (parts, detail) = witness();
            self.failure = Some(Failure {
                instance_index: self.instance_index,
                case_index: index,
                instance_gsg: self.inst.gsg().to_string(),
                parts,
                detail,
            });
        }
    }

    pub fn skip(&mut self, reason: &'static str) {
        self.skipped += 1;
        *self.reasons.entry(reason).or_insert(0) += 1;
    }

    pub(crate) fn into_outcome(self) -> InstanceOutcome {
        InstanceOutcome {
            cases: self.cases,
            skipped: self.skipped,
            reasons: self.reasons,
            failure: self.failure,
        }
    }
}

/// Per-instance tallies, merged in population order by the runner.
pub(crate) struct InstanceOutcome {
    pub cases: u64,
    pub skipped: u64,
    pub reasons: BTreeMap<&'static str, u64>,
    pub failure: Option<Failure>,
}

/// Serializes a fuzzy witness part.
pub fn part_fuzzy(role: &str, a: &IFSubset) -> WitnessPart {
    WitnessPart {
        role: role.to_string(),
        ifs: crate::format::serialize_ifs(a),
    }
}

/// Serializes a crisp witness part through its characteristic pair.
pub fn part_crisp(role: &str, p: &CrispSubset) -> WitnessPart {
    WitnessPart {
        role: format!("{role} (characteristic pair)"),
        ifs: crate::format::serialize_ifs(&characteristic_pair(p)),
    }
}

/// Braced member list of a crisp subset, for failure details.
pub fn fmt_crisp(p: &CrispSubset) -> String {
    let inner: Vec<String> = p.members().iter().map(|m| m.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// One skip reason with its tally.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkipReason {
    pub reason: String,
    pub count: u64,
}

/// Result of one check over a population.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub verdict: Verdict,
    /// Instances the check saw (including hypothesis-skipped ones).
    pub instances: u64,
    /// Assertion cases actually evaluated.
    pub cases: u64,
    /// Cases skipped for hypothesis or emptiness reasons.
    pub skipped: u64,
    pub skip_reasons: Vec<SkipReason>,
    pub witness: Option<Failure>,
}

/// Everything configurable about a run; identical configs and populations
/// give byte-identical reports.
#[derive(Clone, Debug, Default)]
pub struct RunConfig {
    pub subsets: SubsetParams,
    /// Id of the single entry whose assertion is negated (self-test mode).
    pub mutated: Option<String>,
}

/// The instances a run evaluates, with shared caches.
pub struct Population {
    pub instances: Vec<InstanceData>,
    pub description: String,
    /// True when an enumeration limit cut the population short.
    pub truncated: bool,
}

impl Population {
    pub fn from_instances(
        description: impl Into<String>,
        instances: Vec<GammaSemigroup>,
        truncated: bool,
        cfg: &RunConfig,
    ) -> Result<Self, InputError> {
        let instances = instances
            .into_iter()
            .map(|s| {
                Ok(InstanceData::new(
                    crate::operator::Context::new(s)?,
                    cfg.subsets.clone(),
                ))
            })
            .collect::<Result<Vec<_>, InputError>>()?;
        Ok(Population {
            instances,
            description: description.into(),
            truncated,
        })
    }

    /// A single parsed instance.
    pub fn single(s: GammaSemigroup, cfg: &RunConfig) -> Result<Self, InputError> {
        let description = format!("single instance S={} G={}", s.s_size(), s.g_size());
        Population::from_instances(description, vec![s], false, cfg)
    }

    /// Every instance with sizes `1..=s_max` by `1..=g_max`, smallest sizes
    /// first; `limit` caps the total and marks the population truncated.
    pub fn enumerate_to(
        s_max: usize,
        g_max: usize,
        limit: Option<usize>,
        cfg: &RunConfig,
    ) -> Result<Self, InputError> {
        let mut tables = Vec::new();
        let mut truncated = false;
        'outer: for s in 1..=s_max {
            for g in 1..=g_max {
                let remaining = match limit {
                    Some(l) => {
                        if tables.len() >= l {
                            truncated = true;
                            break 'outer;
                        }
                        Some(l - tables.len())
                    }
                    None => None,
                };
                let opts = crate::enumerate::EnumerateOptions {
                    filters: Vec::new(),
                    limit: remaining,
                };
                let part = crate::enumerate::enumerate(s, g, &opts)?;
                truncated |= part.truncated;
                tables.extend(part.instances);
            }
        }
        let description = format!("enumerated instances up to S={s_max} G={g_max}");
        Population::from_instances(description, tables, truncated, cfg)
    }

    /// Quotient-relation mode over the population: `weak` when no instance
    /// carries an operator-valued table, `strong` when all do, else `mixed`.
    pub fn rho(&self) -> &'static str {
        let with = self
            .instances
            .iter()
            .filter(|i| i.ctx().s().has_gamma_table())
            .count();
        if with == 0 {
            "weak"
        } else if with == self.instances.len() {
            "strong"
        } else {
            "mixed"
        }
    }
}

/// Which catalog entries a suite run evaluates.
#[derive(Clone, Debug)]
pub enum CheckFilter {
    All,
    Ids(Vec<String>),
}

impl CheckFilter {
    /// Catalog entries selected by the filter, in catalog order.
    pub fn select(&self) -> Result<Vec<&'static CheckEntry>, InputError> {
        let all = catalog();
        match self {
            CheckFilter::All => Ok(all.iter().collect()),
            CheckFilter::Ids(ids) => {
                for id in ids {
                    if !all.iter().any(|e| e.id == id) {
                        return Err(InputError::UnknownCheck { id: id.clone() });
                    }
                }
                Ok(all
                    .iter()
                    .filter(|e| ids.iter().any(|i| i == e.id))
                    .collect())
            }
        }
    }
}

/// A full suite outcome: config echo, population facts, per-check results.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub lattice: Vec<String>,
    pub cap: u64,
    pub sample: u64,
    pub family_cap: u64,
    pub pair_cap: u64,
    pub seed: u64,
    pub mutated: Option<String>,
    pub population: String,
    pub population_instances: u64,
    pub truncated: bool,
    pub rho: String,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

impl Report {
    pub(crate) fn new(pop: &Population, cfg: &RunConfig, checks: Vec<CheckResult>) -> Self {
        let pass = checks.iter().all(|c| c.verdict != Verdict::Fail);
        Report {
            lattice: cfg.subsets.lattice.iter().map(|g| g.to_string()).collect(),
            cap: cfg.subsets.cap,
            sample: cfg.subsets.sample,
            family_cap: cfg.subsets.family_cap,
            pair_cap: cfg.subsets.pair_cap,
            seed: cfg.subsets.seed,
            mutated: cfg.mutated.clone(),
            population: pop.description.clone(),
            population_instances: pop.instances.len() as u64,
            truncated: pop.truncated,
            rho: pop.rho().to_string(),
            checks,
            pass,
        }
    }
}
