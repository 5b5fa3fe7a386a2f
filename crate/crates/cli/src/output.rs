use std::io::Write;

use serde_json::{Map, Value};
use strictpoly::harness::{CaseRecord, VerificationReport};

pub struct Table {
    enabled: bool,
    header_done: bool,
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn params(p: &Map<String, Value>) -> String {
    p.iter().map(|(k, v)| format!("{k}={}", compact(v))).collect::<Vec<_>>().join(" ")
}

impl Table {
    pub fn new(enabled: bool) -> Self {
        Table { enabled, header_done: false }
    }

    pub fn row(&mut self, r: &CaseRecord) {
        if !self.enabled {
            return;
        }
        if !self.header_done {
            println!("{:<40} {:<6} {:>7}  notes", "case", "status", "checks");
            self.header_done = true;
        }
        let passed = r.checks.iter().filter(|c| c.pass).count();
        let notes: Vec<String> = r
            .failed_checks()
            .map(|c| format!("{}: computed {} vs {}", c.name, compact(&c.computed), compact(&c.claimed)))
            .collect();
        println!(
            "{:<40} {:<6} {:>7}  {}",
            params(&r.params),
            if r.pass { "PASS" } else { "FAIL" },
            format!("{passed}/{}", r.checks.len()),
            notes.join("; ")
        );
    }

    pub fn finish(&self, report: &VerificationReport) {
        let s = &report.summary;
        println!(
            "{}: {} cases, {} passed, {} failed ({} checks, {} failed) in {} ms",
            report.campaign, s.cases, s.passed, s.failed, s.checks, s.checks_failed, report.duration_ms
        );
    }
}

pub fn write_csv(report: &VerificationReport, sink: impl Write) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(["campaign", "case", "check", "relation", "computed", "claimed", "pass"])?;
    for r in &report.records {
        let case = params(&r.params);
        for c in &r.checks {
            let relation = compact(&serde_json::to_value(c.relation).expect("relation serializes"));
            w.write_record([
                report.campaign.as_str(),
                &case,
                &c.name,
                &relation,
                &compact(&c.computed),
                &compact(&c.claimed),
                if c.pass { "true" } else { "false" },
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}
