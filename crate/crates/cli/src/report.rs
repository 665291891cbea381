use serde_json::{json, Value};

use crate::config::{Format, Suite};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellRecord {
    pub n: usize,
    pub k: usize,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cells: Vec<CellRecord>,
    pub passed: usize,
    pub failed: usize,
    pub wall_time_ms: u128,
}

impl SuiteReport {
    pub fn new(suite: Suite, cells: Vec<CellRecord>, wall_time_ms: u128) -> Self {
        let passed = cells.iter().filter(|c| c.pass).count();
        SuiteReport {
            suite,
            failed: cells.len() - passed,
            passed,
            cells,
            wall_time_ms,
        }
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} cells, {} passed, {} failed ({} ms)",
            self.suite.name(),
            self.cells.len(),
            self.passed,
            self.failed,
            self.wall_time_ms
        )
    }
}

/// Serializes cell records. CSV carries a leading `suite` column only when several
/// suites share one table; JSON lines always name the suite and keep keys sorted.
pub fn emit_table(reports: &[SuiteReport], format: Format) -> Vec<u8> {
    match format {
        Format::Csv => emit_csv(reports),
        Format::Json => emit_json(reports),
    }
}

fn emit_csv(reports: &[SuiteReport]) -> Vec<u8> {
    let tagged = reports.len() > 1;
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let mut header = vec!["n", "k", "pass", "detail"];
    if tagged {
        header.insert(0, "suite");
    }
    w.write_record(&header).expect("in-memory write");
    for report in reports {
        for c in &report.cells {
            let mut row = vec![c.n.to_string(), c.k.to_string(), c.pass.to_string(), c.detail.clone()];
            if tagged {
                row.insert(0, report.suite.name().to_string());
            }
            w.write_record(&row).expect("in-memory write");
        }
    }
    w.into_inner().expect("in-memory flush")
}

fn emit_json(reports: &[SuiteReport]) -> Vec<u8> {
    let mut out = Vec::new();
    for report in reports {
        for c in &report.cells {
            let line: Value = json!({
                "suite": report.suite.name(),
                "n": c.n,
                "k": c.k,
                "pass": c.pass,
                "detail": c.detail,
            });
            out.extend_from_slice(line.to_string().as_bytes());
            out.push(b'\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cell(n: usize, k: usize, pass: bool, detail: &str) -> CellRecord {
        CellRecord {
            n,
            k,
            pass,
            detail: detail.into(),
        }
    }

    #[test]
    fn empty_report_is_header_only() {
        let r = SuiteReport::new(Suite::Theorem1, vec![], 0);
        assert_eq!(emit_table(std::slice::from_ref(&r), Format::Csv), b"n,k,pass,detail\n");
        assert!(emit_table(&[r], Format::Json).is_empty());
    }

    #[test]
    fn one_passing_cell() {
        let r = SuiteReport::new(Suite::Cnk, vec![cell(2, 0, true, "exact")], 5);
        assert_eq!((r.passed, r.failed), (1, 0));
        let csv = String::from_utf8(emit_table(std::slice::from_ref(&r), Format::Csv)).unwrap();
        assert_eq!(csv, "n,k,pass,detail\n2,0,true,exact\n");
        let json = String::from_utf8(emit_table(&[r], Format::Json)).unwrap();
        assert_eq!(json, "{\"detail\":\"exact\",\"k\":0,\"n\":2,\"pass\":true,\"suite\":\"cnk\"}\n");
    }

    #[test]
    fn details_with_commas_are_quoted() {
        let r = SuiteReport::new(Suite::Darboux, vec![cell(1, 1, false, "a, b")], 0);
        let csv = String::from_utf8(emit_table(&[r], Format::Csv)).unwrap();
        assert!(csv.ends_with("1,1,false,\"a, b\"\n"));
    }

    #[test]
    fn several_suites_get_a_suite_column() {
        let a = SuiteReport::new(Suite::Base, vec![cell(1, 0, true, "x")], 0);
        let b = SuiteReport::new(Suite::Lemma1, vec![cell(1, 1, true, "y")], 0);
        let csv = String::from_utf8(emit_table(&[a, b], Format::Csv)).unwrap();
        assert_eq!(csv, "suite,n,k,pass,detail\nbase,1,0,true,x\nlemma1,1,1,true,y\n");
    }
}
