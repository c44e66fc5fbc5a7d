//! Deterministic text and JSON renderings of a run report.
//!
//! The text format is line-oriented so shell tooling can grep verdicts:
//! one `CHECK` line per entry, `SKIP` lines tallying each skip reason,
//! `WITNESS` blocks carrying re-evaluable serialized failures, and a final
//! `SUITE` line.  The JSON form mirrors the same data field for field.

use std::fmt::Write as _;

use super::{Failure, Report};

fn push_block(out: &mut String, tag: &str, body: &str) {
    out.push_str("BEGIN ");
    out.push_str(tag);
    out.push('\n');
    out.push_str(body);
    if !body.ends_with('\n') {
        out.push('\n');
    }
    out.push_str("END ");
    out.push_str(tag);
    out.push('\n');
}

fn push_witness(out: &mut String, id: &str, failure: &Failure) {
    let _ = writeln!(
        out,
        "WITNESS {id} instance={} case={}",
        failure.instance_index, failure.case_index
    );
    push_block(out, "GSG", &failure.instance_gsg);
    for part in &failure.parts {
        push_block(out, &format!("IFS {}", part.role), &part.ifs);
    }
    let _ = writeln!(out, "DETAIL {}", failure.detail);
}

/// Renders one failure as the same `WITNESS` block a suite report uses.
pub fn render_failure(id: &str, failure: &Failure) -> String {
    let mut out = String::new();
    push_witness(&mut out, id, failure);
    out
}

/// Renders the line-oriented text report.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let _ = write!(
        out,
        "CONFIG lattice={} cap={} sample={} family_cap={} pair_cap={} seed={}",
        report.lattice.join(","),
        report.cap,
        report.sample,
        report.family_cap,
        report.pair_cap,
        report.seed
    );
    if let Some(mutated) = &report.mutated {
        let _ = write!(out, " mutated={mutated}");
    }
    out.push('\n');
    let _ = writeln!(
        out,
        "POPULATION \"{}\" instances={} truncated={} rho={}",
        report.population, report.population_instances, report.truncated, report.rho
    );
    for check in &report.checks {
        let _ = writeln!(
            out,
            "CHECK {} {} instances={} cases={} skipped={}",
            check.id,
            check.verdict.name(),
            check.instances,
            check.cases,
            check.skipped
        );
        for skip in &check.skip_reasons {
            let _ = writeln!(out, "SKIP {} \"{}\" {}", check.id, skip.reason, skip.count);
        }
        if let Some(failure) = &check.witness {
            push_witness(&mut out, &check.id, failure);
        }
    }
    let _ = writeln!(
        out,
        "SUITE {} checks={}",
        if report.pass { "PASS" } else { "FAIL" },
        report.checks.len()
    );
    out
}

/// Renders the same report as pretty-printed JSON.
pub fn render_json(report: &Report) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("reports serialize without errors");
    text.push('\n');
    text
}
