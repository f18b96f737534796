//! Sweep reports: a summary object plus one row per violation (or, for
//! tightness searches, per witness), serialised as newline-delimited JSON.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

/// The domain a sweep covered, echoed into its report.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DomainSpec {
    /// `"enumeration"` or `"stream"`.
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_min: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_from: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_to: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub biconnected: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
}

/// One offending graph. The graph6 string is the canonical labeling, and all
/// vertex numbers refer to it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    pub n: usize,
    pub q: usize,
    pub min_degree: usize,
    pub connectivity: usize,
    pub longest_cycle: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub off_cycle_edge: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorRow {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub kind: String,
    pub domain: DomainSpec,
    pub graphs_scanned: usize,
    /// Graphs meeting the hypotheses.
    pub applicable: usize,
    /// Individual checks performed (cycles, triples, cut components...).
    pub instances: usize,
    /// Applicable checks whose conclusion held.
    pub confirmed: usize,
    pub violations: usize,
    pub errors: usize,
    pub wall_time_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub summary: Summary,
    pub violations: Vec<Violation>,
    pub errors: Vec<ErrorRow>,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// Appends unreadable-input rows.
    pub fn with_errors(mut self, rows: Vec<ErrorRow>) -> VerificationReport {
        self.errors.extend(rows);
        self.summary.errors = self.errors.len();
        self
    }

    /// The report with its timing zeroed, for comparing runs.
    pub fn untimed(&self) -> VerificationReport {
        let mut r = self.clone();
        r.summary.wall_time_ms = 0;
        r
    }

    /// Violation rows, then error rows, then the summary, one JSON object per line.
    pub fn write_ndjson<W: Write>(&self, mut out: W) -> io::Result<()> {
        #[derive(Serialize)]
        #[serde(tag = "type", rename_all = "snake_case")]
        enum Line<'a> {
            Violation(&'a Violation),
            Error(&'a ErrorRow),
            Summary(&'a Summary),
        }
        let lines = self
            .violations
            .iter()
            .map(Line::Violation)
            .chain(self.errors.iter().map(Line::Error))
            .chain(std::iter::once(Line::Summary(&self.summary)));
        for line in lines {
            serde_json::to_writer(&mut out, &line)?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }

    /// Human-readable summary.
    pub fn render(&self) -> String {
        let s = &self.summary;
        let rows = if s.kind == "tightness" {
            "witnesses"
        } else {
            "violations"
        };
        let mut text = format!(
            "{kind}: scanned {scanned} graphs, {applicable} applicable, {instances} checks, {confirmed} confirmed, {violations} {rows}",
            kind = s.kind,
            scanned = s.graphs_scanned,
            applicable = s.applicable,
            instances = s.instances,
            confirmed = s.confirmed,
            violations = s.violations,
        );
        if s.errors > 0 {
            text.push_str(&format!(", {} unreadable lines", s.errors));
        }
        text.push_str(&format!(" ({} ms)\n", s.wall_time_ms));
        for v in &self.violations {
            text.push_str(&format!(
                "  {} n={} q={} δ={} κ={} longest={}",
                v.graph6, v.n, v.q, v.min_degree, v.connectivity, v.longest_cycle
            ));
            if let Some(c) = &v.cycle {
                text.push_str(&format!(" cycle={c:?}"));
            }
            if let Some([a, b]) = v.off_cycle_edge {
                text.push_str(&format!(" off-cycle edge {a}-{b}"));
            }
            if let Some(d) = &v.detail {
                text.push_str(&format!(" {d}"));
            }
            text.push('\n');
        }
        for e in &self.errors {
            text.push_str(&format!("  line {}: {}\n", e.line, e.message));
        }
        text
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ndjson_layout() {
        let report = VerificationReport {
            summary: Summary {
                kind: "theorem1".into(),
                domain: DomainSpec {
                    source: "stream".into(),
                    ..Default::default()
                },
                graphs_scanned: 1,
                applicable: 0,
                instances: 0,
                confirmed: 0,
                violations: 1,
                errors: 1,
                wall_time_ms: 3,
            },
            violations: vec![Violation {
                graph6: "GhEK?c".into(),
                n: 8,
                q: 9,
                min_degree: 2,
                connectivity: 2,
                longest_cycle: 6,
                cycle: Some(vec![0, 1, 2, 3, 4, 5]),
                off_cycle_edge: Some([6, 7]),
                detail: None,
            }],
            errors: vec![ErrorRow {
                line: 4,
                message: "empty line".into(),
            }],
        };
        let mut buf = Vec::new();
        report.write_ndjson(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<serde_json::Value> = text
            .lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0]["type"], "violation");
        assert_eq!(lines[0]["graph6"], "GhEK?c");
        assert_eq!(lines[0]["off_cycle_edge"], serde_json::json!([6, 7]));
        assert_eq!(lines[1]["type"], "error");
        assert_eq!(lines[2]["type"], "summary");
        assert_eq!(lines[2]["domain"]["source"], "stream");
        assert!(lines[2]["domain"].get("delta").is_none());
        assert!(report.render().contains("off-cycle edge 6-7"));
    }
}
