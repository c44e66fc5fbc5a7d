//! Evaluates catalog entries over populations, reproduces serialized
//! failures, and searches enumerations for counterexamples.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::error::InputError;
use crate::operator::Context;

use super::catalog::{catalog, CheckEntry};
use super::instance::InstanceData;
use super::{
    CaseSink, CheckFilter, CheckResult, Failure, Population, Report, RunConfig, SkipReason, Verdict,
};

fn entry_by_id(id: &str) -> Result<&'static CheckEntry, InputError> {
    catalog()
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| InputError::UnknownCheck { id: id.to_string() })
}

/// Runs one entry over the whole population.  Instances are evaluated in
/// parallel and merged in population order, so the reported failure is the
/// first one by (instance, case) position regardless of scheduling.
fn evaluate_entry(entry: &CheckEntry, pop: &Population, cfg: &RunConfig) -> CheckResult {
    let mutate = cfg.mutated.as_deref() == Some(entry.id);
    let outcomes: Vec<_> = pop
        .instances
        .par_iter()
        .enumerate()
        .map(|(index, inst)| {
            let mut sink = CaseSink::new(inst, index, entry.id, mutate);
            match entry.hypothesis.admits(inst) {
                Ok(()) => (entry.run)(inst, &mut sink),
                Err(reason) => sink.skip(reason),
            }
            sink.into_outcome()
        })
        .collect();

    let mut cases = 0;
    let mut skipped = 0;
    let mut reasons: BTreeMap<&'static str, u64> = BTreeMap::new();
    let mut witness = None;
    for outcome in outcomes {
        cases += outcome.cases;
        skipped += outcome.skipped;
        for (reason, count) in outcome.reasons {
            *reasons.entry(reason).or_insert(0) += count;
        }
        if witness.is_none() {
            witness = outcome.failure;
        }
    }
    let verdict = if witness.is_some() {
        Verdict::Fail
    } else if cases == 0 {
        Verdict::Vacuous
    } else {
        Verdict::Pass
    };
    CheckResult {
        id: entry.id.to_string(),
        verdict,
        instances: pop.instances.len() as u64,
        cases,
        skipped,
        skip_reasons: reasons
            .into_iter()
            .map(|(reason, count)| SkipReason {
                reason: reason.to_string(),
                count,
            })
            .collect(),
        witness,
    }
}

/// Evaluates the entry named `id` over the population.
pub fn run_check(id: &str, pop: &Population, cfg: &RunConfig) -> Result<CheckResult, InputError> {
    Ok(evaluate_entry(entry_by_id(id)?, pop, cfg))
}

/// Evaluates the selected entries, in catalog order, into a report.
pub fn run_suite(
    pop: &Population,
    cfg: &RunConfig,
    filter: &CheckFilter,
) -> Result<Report, InputError> {
    let entries = filter.select()?;
    let checks = entries
        .iter()
        .map(|entry| evaluate_entry(entry, pop, cfg))
        .collect();
    Ok(Report::new(pop, cfg, checks))
}

/// Re-runs a failure from its serialized instance alone and confirms the
/// same case fails the same way under the same configuration.
pub fn reevaluate(id: &str, failure: &Failure, cfg: &RunConfig) -> Result<bool, InputError> {
    let instance = crate::format::parse_gsg(&failure.instance_gsg)?;
    let pop = Population::single(instance, cfg)?;
    let result = run_check(id, &pop, cfg)?;
    Ok(match result.witness {
        Some(got) => {
            got.case_index == failure.case_index
                && got.parts == failure.parts
                && got.detail == failure.detail
        }
        None => false,
    })
}

/// Outcome of a counterexample search.
pub enum SearchOutcome {
    /// A failing case, serialized for re-evaluation.
    Witness(Box<Failure>),
    /// The whole bounded enumeration was scanned without a failure.
    Exhausted,
    /// The scan limit was reached first.
    Inconclusive,
}

pub struct SearchReport {
    pub outcome: SearchOutcome,
    /// Instances actually evaluated.
    pub scanned: u64,
}

/// Scans the enumeration up to the size bounds for an instance failing the
/// entry named `id`.  With `drop_hypothesis` the entry also runs on
/// instances outside its hypothesis, probing whether the hypothesis is
/// load-bearing.
pub fn search_counterexample(
    id: &str,
    drop_hypothesis: bool,
    s_max: usize,
    g_max: usize,
    limit: Option<u64>,
    cfg: &RunConfig,
) -> Result<SearchReport, InputError> {
    let entry = entry_by_id(id)?;
    let mutate = cfg.mutated.as_deref() == Some(entry.id);
    let mut scanned = 0u64;
    let mut found: Option<Failure> = None;
    let mut limited = false;
    'sizes: for s in 1..=s_max {
        for g in 1..=g_max {
            let complete = crate::enumerate::enumerate_each(s, g, &[], |table| {
                if limit == Some(scanned) {
                    limited = true;
                    return ControlFlow::Break(());
                }
                let ctx = Context::new(table).expect("enumerated instances are valid");
                let inst = InstanceData::new(ctx, cfg.subsets.clone());
                let mut sink = CaseSink::new(&inst, scanned as usize, entry.id, mutate);
                scanned += 1;
                if drop_hypothesis || entry.hypothesis.admits(&inst).is_ok() {
                    (entry.run)(&inst, &mut sink);
                }
                if let Some(failure) = sink.into_outcome().failure {
                    found = Some(failure);
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            })?;
            if !complete {
                break 'sizes;
            }
        }
    }
    let outcome = match found {
        Some(failure) => SearchOutcome::Witness(Box::new(failure)),
        None if limited => SearchOutcome::Inconclusive,
        None => SearchOutcome::Exhausted,
    };
    Ok(SearchReport { outcome, scanned })
}
