use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Dimensions of cohomology groups by degree, tagged with the calculator
/// that produced them.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CohomologyTable {
    pub context: String,
    pub entries: BTreeMap<i64, usize>,
}

impl CohomologyTable {
    pub fn new(context: impl Into<String>) -> Self {
        CohomologyTable { context: context.into(), entries: BTreeMap::new() }
    }

    /// Table with `dims[k]` in degree `lo + k`.
    pub fn from_dims(context: impl Into<String>, lo: i64, dims: &[usize]) -> Self {
        let entries = dims.iter().enumerate().map(|(k, &d)| (lo + k as i64, d)).collect();
        CohomologyTable { context: context.into(), entries }
    }

    pub fn set(&mut self, degree: i64, dim: usize) {
        self.entries.insert(degree, dim);
    }

    /// Dimension in `degree`, zero when absent.
    pub fn get(&self, degree: i64) -> usize {
        self.entries.get(&degree).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.entries.iter().map(|(&d, &v)| if d.rem_euclid(2) == 0 { v as i64 } else { -(v as i64) }).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.values().all(|&v| v == 0)
    }

    /// Dimensions for the consecutive degrees `lo..=hi`.
    pub fn dims(&self, lo: i64, hi: i64) -> Vec<usize> {
        (lo..=hi).map(|d| self.get(d)).collect()
    }
}

impl fmt::Display for CohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|(d, v)| format!("H^{d}={v}")).collect();
        write!(f, "{}: {}", self.context, parts.join(" "))
    }
}
