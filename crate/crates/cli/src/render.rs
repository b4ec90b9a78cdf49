use std::fmt::Write;

use asreg::catalog::{SweepReport, VerificationReport};
use asreg::quadratic::Standardness;
use asreg::regularity::RegularityReport;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;

pub fn envelope(command: &str, field: &str, ok: bool, result: Value) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "field": field,
        "ok": ok,
        "result": result,
    })
}

pub fn regularity_json(r: &RegularityReport) -> Value {
    let standard = r.standard.as_ref().map(|s| match s {
        Standardness::Standard { change, matrix } => json!({
            "kind": "standard",
            "change": change.to_string(),
            "matrix": matrix.to_string(),
        }),
        Standardness::NotStandard => json!({ "kind": "not_standard" }),
        Standardness::Undetermined => json!({ "kind": "undetermined" }),
    });
    let minors = r.minors.as_ref().map(|m| {
        m.iter()
            .map(|row| row.iter().map(|p| p.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>()
    });
    let groebner = r.groebner.as_ref().map(|g| {
        json!({
            "generators": g.generators.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "leading_monomials": g.leading_monomials().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        })
    });
    json!({
        "verdict": r.verdict,
        "relation_dim": r.relation_dim,
        "standard": standard,
        "minors": minors,
        "groebner": groebner,
    })
}

pub fn regularity_text(r: &RegularityReport) -> String {
    let mut s = String::new();
    writeln!(s, "relations: dim {}", r.relation_dim).unwrap();
    match &r.standard {
        Some(Standardness::Standard { change, matrix }) => {
            writeln!(s, "standard: yes, P = {change}").unwrap();
            writeln!(s, "M = {matrix}").unwrap();
        }
        Some(Standardness::NotStandard) => writeln!(s, "standard: no").unwrap(),
        Some(Standardness::Undetermined) => writeln!(s, "standard: undetermined").unwrap(),
        None => {}
    }
    if let Some(m) = &r.minors {
        writeln!(s, "minors:").unwrap();
        for (i, row) in m.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                writeln!(s, "  D{}{} = {p}", i + 1, j + 1).unwrap();
            }
        }
    }
    if let Some(g) = &r.groebner {
        let lm: Vec<String> = g.leading_monomials().iter().map(|m| m.to_string()).collect();
        writeln!(s, "groebner leading monomials: {}", lm.join(", ")).unwrap();
    }
    writeln!(s, "verdict: {}", r.verdict).unwrap();
    s
}

pub fn report_markdown(reports: &[VerificationReport]) -> String {
    let mut s = String::new();
    writeln!(s, "| row | parameters | stages | result |").unwrap();
    writeln!(s, "|---|---|---|---|").unwrap();
    for r in reports {
        let params: Vec<String> = r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let stages: Vec<String> = r
            .stages
            .iter()
            .map(|st| {
                let name = serde_json::to_value(st.stage).unwrap();
                format!("{}:{}", name.as_str().unwrap_or("?"), if st.passed { "ok" } else { "FAIL" })
            })
            .collect();
        writeln!(
            s,
            "| {} | {} | {} | {} |",
            r.row,
            params.join(", "),
            stages.join(" "),
            if r.passed() { "pass" } else { "fail" }
        )
        .unwrap();
    }
    for r in reports {
        if let Some(st) = r.first_failure() {
            writeln!(s, "\n{} ({}): {}", r.row, st.detail, st.mismatch.as_deref().unwrap_or("")).unwrap();
        }
    }
    s
}

pub fn sweep_markdown(r: &SweepReport) -> String {
    let mut s = report_markdown(&r.reports);
    for (row, e) in &r.errors {
        writeln!(s, "\n{row}: {e}").unwrap();
    }
    let passed = r.reports.iter().filter(|x| x.passed()).count();
    writeln!(s, "\n{passed}/{} instances passed", r.reports.len() + r.errors.len()).unwrap();
    s
}
