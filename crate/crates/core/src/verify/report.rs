use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;

use super::config::Category;

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CategoryStats {
    pub run: u64,
    pub failed: u64,
    pub skipped: u64,
    pub max_abs_residual: f64,
    pub max_rel_residual: f64,
}

impl CategoryStats {
    fn merge(&mut self, other: &CategoryStats) {
        self.run += other.run;
        self.failed += other.failed;
        self.skipped += other.skipped;
        self.max_abs_residual = self.max_abs_residual.max(other.max_abs_residual);
        self.max_rel_residual = self.max_rel_residual.max(other.max_rel_residual);
    }
}

/// How often the `(r - s - 1) V0` summation constant disagreed with direct
/// summation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SignDiagnostic {
    pub checks: u64,
    pub counterexamples: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub categories: BTreeMap<Category, CategoryStats>,
    pub errata: BTreeSet<String>,
    pub printed_sign: SignDiagnostic,
    pub seed: u64,
}

#[derive(Serialize)]
struct JsonCategory {
    run: u64,
    failed: u64,
    skipped: u64,
    max_rel_residual: f64,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    categories: BTreeMap<&'static str, JsonCategory>,
    errata: Vec<&'a str>,
    seed: u64,
}

impl VerificationReport {
    pub fn empty(seed: u64) -> Self {
        VerificationReport {
            categories: Category::ALL
                .into_iter()
                .map(|c| (c, CategoryStats::default()))
                .collect(),
            errata: BTreeSet::new(),
            printed_sign: SignDiagnostic::default(),
            seed,
        }
    }

    pub fn stats(&self, cat: Category) -> &CategoryStats {
        &self.categories[&cat]
    }

    pub(crate) fn stats_mut(&mut self, cat: Category) -> &mut CategoryStats {
        self.categories.entry(cat).or_default()
    }

    /// Records one check. `residual` is `(abs, rel)`; the check fails when
    /// `rel` exceeds `tol` (for exact categories: when `equal` is false).
    pub(crate) fn record(&mut self, cat: Category, passed: bool, abs: f64, rel: f64) {
        let s = self.stats_mut(cat);
        s.run += 1;
        if !passed {
            s.failed += 1;
        }
        s.max_abs_residual = s.max_abs_residual.max(abs);
        s.max_rel_residual = s.max_rel_residual.max(rel);
    }

    pub(crate) fn skip(&mut self, cat: Category, count: u64) {
        self.stats_mut(cat).skipped += count;
    }

    /// Order-independent merge; parallel and serial runs agree.
    pub fn merge(mut self, other: VerificationReport) -> Self {
        for (cat, st) in &other.categories {
            self.stats_mut(*cat).merge(st);
        }
        self.errata.extend(other.errata);
        self.printed_sign.checks += other.printed_sign.checks;
        self.printed_sign.counterexamples += other.printed_sign.counterexamples;
        self
    }

    pub fn total_failures(&self) -> u64 {
        self.categories.values().map(|s| s.failed).sum()
    }

    pub fn passed(&self) -> bool {
        self.total_failures() == 0
    }

    pub fn to_json(&self) -> String {
        let report = JsonReport {
            categories: self
                .categories
                .iter()
                .map(|(c, s)| {
                    (
                        c.name(),
                        JsonCategory {
                            run: s.run,
                            failed: s.failed,
                            skipped: s.skipped,
                            max_rel_residual: s.max_rel_residual,
                        },
                    )
                })
                .collect(),
            errata: self.errata.iter().map(String::as_str).collect(),
            seed: self.seed,
        };
        serde_json::to_string_pretty(&report).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:<20} {:>8} {:>7} {:>8} {:>12} {:>12}",
            "category", "run", "failed", "skipped", "max_abs", "max_rel"
        );
        for (cat, st) in &self.categories {
            let _ = writeln!(
                s,
                "{:<20} {:>8} {:>7} {:>8} {:>12.3e} {:>12.3e}",
                cat.name(),
                st.run,
                st.failed,
                st.skipped,
                st.max_abs_residual,
                st.max_rel_residual
            );
        }
        for e in &self.errata {
            let _ = writeln!(s, "erratum: {e}");
        }
        let _ = writeln!(s, "seed: {}", self.seed);
        let _ = write!(s, "result: {}", if self.passed() { "PASS" } else { "FAIL" });
        s
    }
}
