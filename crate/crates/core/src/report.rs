//! Scan reports and their CSV form.

use std::io::{self, Write};

use crate::ineq::IneqCase;

pub const TOOL_VERSION: &str = concat!("hgf ", env!("CARGO_PKG_VERSION"));

/// What a suite expects to find.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Expectation {
    NoViolations,
    Exactly(usize),
    /// Rows are grouped by `param`; groups with `param < threshold` must contain
    /// at least one violation, the others none.
    ViolationsBelow {
        param: &'static str,
        threshold: f64,
    },
    /// Search mode: any outcome is acceptable.
    Any,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub total: usize,
    pub passes: usize,
    pub violations: usize,
    pub min_margin: f64,
    pub argmin: Vec<(&'static str, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub tol: f64,
    pub grid: String,
    pub params: Vec<&'static str>,
    pub expectation: Expectation,
    pub rows: Vec<IneqCase>,
}

/// 17 significant digits, enough to round-trip any `f64`.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

impl Report {
    pub fn summary(&self) -> Summary {
        let violations = self.rows.iter().filter(|r| !r.pass).count();
        let worst = self
            .rows
            .iter()
            .min_by(|a, b| a.margin.total_cmp(&b.margin));
        Summary {
            total: self.rows.len(),
            passes: self.rows.len() - violations,
            violations,
            min_margin: worst.map_or(f64::INFINITY, |r| r.margin),
            argmin: worst.map(|r| r.params.clone()).unwrap_or_default(),
        }
    }

    pub fn meets_expectation(&self) -> bool {
        let s = self.summary();
        match self.expectation {
            Expectation::NoViolations => s.violations == 0,
            Expectation::Exactly(n) => s.violations == n,
            Expectation::Any => true,
            Expectation::ViolationsBelow { param, threshold } => {
                let mut groups: Vec<(f64, bool)> = Vec::new();
                for row in &self.rows {
                    let Some(v) = row.param(param) else {
                        return false;
                    };
                    match groups.iter_mut().find(|(g, _)| *g == v) {
                        Some((_, any)) => *any |= !row.pass,
                        None => groups.push((v, !row.pass)),
                    }
                }
                groups
                    .iter()
                    .all(|&(v, violated)| violated == (v < threshold))
            }
        }
    }

    pub fn expectation_text(&self) -> String {
        match self.expectation {
            Expectation::NoViolations => "0 violations".into(),
            Expectation::Exactly(n) => format!("exactly {n} violation(s)"),
            Expectation::Any => "search (no expectation)".into(),
            Expectation::ViolationsBelow { param, threshold } => {
                format!(">= 1 violation for {param} < {threshold}, none otherwise")
            }
        }
    }

    /// Combines two reports of the same suite. Rows are put in a canonical
    /// order (by parameter values), so merging is associative and commutative.
    pub fn merge(mut self, other: Report) -> Report {
        self.rows.extend(other.rows);
        self.rows.sort_by(|a, b| {
            let ka = a.params.iter().map(|p| p.1);
            let kb = b.params.iter().map(|p| p.1);
            ka.zip(kb)
                .map(|(x, y)| x.total_cmp(&y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.margin.total_cmp(&b.margin))
        });
        self
    }

    /// Comment lines (`# ...`) carrying the run metadata, then the header row
    /// `suite,<params>,lhs,rhs,margin,pass`, then one record per case.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "# {TOOL_VERSION}")?;
        writeln!(
            out,
            "# suite={} seed={} tol={} expect={}",
            self.suite,
            self.seed,
            fmt_f64(self.tol),
            self.expectation_text()
        )?;
        writeln!(out, "# grid {}", self.grid)?;
        let mut w = csv::Writer::from_writer(out);
        let mut header = vec!["suite"];
        header.extend(self.params.iter().copied());
        header.extend(["lhs", "rhs", "margin", "pass"]);
        w.write_record(&header)?;
        for row in &self.rows {
            let mut rec = vec![self.suite.clone()];
            rec.extend(
                self.params
                    .iter()
                    .map(|p| row.param(p).map(fmt_f64).unwrap_or_default()),
            );
            rec.extend([fmt_f64(row.lhs), fmt_f64(row.rhs), fmt_f64(row.margin)]);
            rec.push(row.pass.to_string());
            w.write_record(&rec)?;
        }
        w.flush()
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("CSV output is UTF-8")
    }

    /// Human-readable summary lines.
    pub fn summary_text(&self) -> String {
        let s = self.summary();
        let argmin: Vec<String> = s.argmin.iter().map(|(n, v)| format!("{n}={v}")).collect();
        format!(
            "suite {}: {} cases, {} pass, {} violations (expected {})\nmin margin {:e} at {}\nverdict: {}",
            self.suite,
            s.total,
            s.passes,
            s.violations,
            self.expectation_text(),
            s.min_margin,
            argmin.join(" "),
            if self.meets_expectation() { "OK" } else { "UNEXPECTED" }
        )
    }
}
