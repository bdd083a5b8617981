use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reference::ReferenceTables;
use crate::sequence::{Preset, RecurrenceParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Category {
    Recurrence,
    CompanionIdentity,
    ScalarSum,
    OctonionSum,
    GenfuncTable,
    GenfuncRoundTrip,
    SumTable,
    ShiftIdentity,
    BinetScalar,
    BinetOctonion,
    NormFormula,
    QuadraticApprox,
}

impl Category {
    pub const ALL: [Category; 12] = [
        Category::Recurrence,
        Category::CompanionIdentity,
        Category::ScalarSum,
        Category::OctonionSum,
        Category::GenfuncTable,
        Category::GenfuncRoundTrip,
        Category::SumTable,
        Category::ShiftIdentity,
        Category::BinetScalar,
        Category::BinetOctonion,
        Category::NormFormula,
        Category::QuadraticApprox,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Category::Recurrence => "recurrence",
            Category::CompanionIdentity => "companion-identity",
            Category::ScalarSum => "scalar-sum",
            Category::OctonionSum => "octonion-sum",
            Category::GenfuncTable => "genfunc-table",
            Category::GenfuncRoundTrip => "genfunc-roundtrip",
            Category::SumTable => "sum-table",
            Category::ShiftIdentity => "shift-identity",
            Category::BinetScalar => "binet-scalar",
            Category::BinetOctonion => "binet-octonion",
            Category::NormFormula => "norm-formula",
            Category::QuadraticApprox => "quadratic-approx",
        }
    }

    /// Exact categories compare with equality and never touch floats.
    pub fn is_exact(self) -> bool {
        !matches!(
            self,
            Category::BinetScalar
                | Category::BinetOctonion
                | Category::NormFormula
                | Category::QuadraticApprox
        )
    }

    pub fn default_tolerance(self) -> f64 {
        match self {
            Category::NormFormula => 1e-6,
            c if c.is_exact() => 0.0,
            _ => 1e-8,
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Upper bounds on `n` for the root-based checks; the effective bound is
/// the smaller of these and `n_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NumericWindows {
    pub binet: usize,
    pub norm: usize,
    pub quadratic: usize,
}

impl Default for NumericWindows {
    fn default() -> Self {
        NumericWindows {
            binet: 40,
            norm: 25,
            quadratic: 30,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub presets: Vec<Preset>,
    pub custom: Vec<RecurrenceParams<BigRational>>,
    pub n_max: usize,
    pub m_max: usize,
    /// Seeded random integer parameter sets, used for the exact categories.
    pub random_sets: usize,
    pub seed: u64,
    /// Relative tolerances for the floating-point categories.
    pub tolerances: BTreeMap<Category, f64>,
    pub windows: NumericWindows,
    pub reference: ReferenceTables,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            presets: Preset::ALL.to_vec(),
            custom: Vec::new(),
            n_max: 40,
            m_max: 20,
            random_sets: 50,
            seed: 1,
            tolerances: Category::ALL
                .into_iter()
                .filter(|c| !c.is_exact())
                .map(|c| (c, c.default_tolerance()))
                .collect(),
            windows: NumericWindows::default(),
            reference: ReferenceTables::published(),
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_max < 3 {
            return Err(Error::InvalidConfig(format!(
                "n_max must be at least 3, got {}",
                self.n_max
            )));
        }
        if self.m_max < 3 {
            return Err(Error::InvalidConfig(format!(
                "m_max must be at least 3, got {}",
                self.m_max
            )));
        }
        for (cat, tol) in &self.tolerances {
            if cat.is_exact() {
                return Err(Error::InvalidConfig(format!(
                    "{cat} is exact and takes no tolerance"
                )));
            }
            if !(*tol > 0.0 && tol.is_finite()) {
                return Err(Error::InvalidConfig(format!(
                    "tolerance for {cat} must be positive, got {tol}"
                )));
            }
        }
        if self.presets.is_empty() && self.custom.is_empty() && self.random_sets == 0 {
            return Err(Error::InvalidConfig("no parameter sets to check".into()));
        }
        Ok(())
    }

    pub fn tolerance(&self, cat: Category) -> f64 {
        if cat.is_exact() {
            return 0.0;
        }
        self.tolerances
            .get(&cat)
            .copied()
            .unwrap_or_else(|| cat.default_tolerance())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(SuiteConfig::default().validate().is_ok());
        let mut c = SuiteConfig {
            n_max: 2,
            ..SuiteConfig::default()
        };
        assert!(c.validate().is_err());
        c.n_max = 10;
        c.tolerances.insert(Category::NormFormula, 0.0);
        assert!(c.validate().is_err());
        c.tolerances.insert(Category::NormFormula, 1e-6);
        c.tolerances.insert(Category::Recurrence, 1e-3);
        assert!(c.validate().is_err());
    }
}
