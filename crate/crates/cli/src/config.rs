//! Optional TOML configuration: defaults for the global flags, degree
//! sweeps, and explicit scenario lists for `suite`.

use std::path::Path;

use gaussian_core::scenario::ScenarioSpec;
use gaussian_core::FieldSpec;
use serde::Deserialize;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub field: Option<FieldSpec>,
    pub timeout_secs: Option<u64>,
    pub max_reductions: Option<u64>,
    pub jobs: Option<usize>,
    /// Degree tuples for commands whose degrees are not given as flags.
    #[serde(default)]
    pub sweep: Vec<Vec<usize>>,
    /// Scenarios run by `suite` instead of the built-in battery.
    #[serde(default)]
    pub scenario: Vec<ScenarioSpec>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}
