//! Command line and HTTP front end. Both paths go through [`appraise`] so a
//! scenario gives the same report bytes either way.

pub mod cli;
pub mod server;

use std::path::{Path, PathBuf};

use roi_forge_core::report::{diagnostics_json, report_json};
use roi_forge_core::scenario::{parse_scenario, Parsed};
use roi_forge_core::{evaluate, Diagnostic, Evaluation, Scenario, BASELINE_JSON};

/// Environment variable naming a scenario file to use instead of the
/// bundled baseline.
pub const BASELINE_ENV: &str = "ROI_FORGE_BASELINE";

#[derive(Debug)]
pub enum LoadError {
    Io(String),
    Invalid(Vec<Diagnostic>),
}

impl LoadError {
    pub fn exit_code(&self) -> i32 {
        match self {
            LoadError::Io(_) => 1,
            LoadError::Invalid(_) => 2,
        }
    }
}

/// A parsed scenario plus the parser's warnings.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub scenario: Scenario,
    pub warnings: Vec<Diagnostic>,
}

/// Parses scenario text. A `history_csv` sidecar is resolved against
/// `base_dir`; without one it is an error.
pub fn load_text(text: &str, base_dir: Option<&Path>) -> Result<Loaded, LoadError> {
    let Parsed { mut scenario, diagnostics } = parse_scenario(text).map_err(LoadError::Invalid)?;
    if let Some(sidecar) = scenario.enrollment.history_csv.clone() {
        let Some(dir) = base_dir else {
            return Err(LoadError::Invalid(vec![Diagnostic::error(
                "enrollment.history_csv",
                "sidecar files are only read from the command line; inline the history",
            )]));
        };
        let path = dir.join(&sidecar);
        let csv = std::fs::read_to_string(&path)
            .map_err(|e| LoadError::Io(format!("cannot read {}: {e}", path.display())))?;
        scenario
            .inline_history(&csv)
            .map_err(|e| LoadError::Invalid(e.diagnostics()))?;
    }
    Ok(Loaded { scenario, warnings: diagnostics })
}

pub fn load_file(path: &Path) -> Result<Loaded, LoadError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| LoadError::Io(format!("cannot read {}: {e}", path.display())))?;
    load_text(&text, Some(path.parent().unwrap_or(Path::new("."))))
}

/// The bundled baseline, or the file named by `ROI_FORGE_BASELINE`.
pub fn load_baseline() -> Result<Loaded, LoadError> {
    match std::env::var_os(BASELINE_ENV) {
        Some(path) if !path.is_empty() => load_file(&PathBuf::from(path)),
        _ => load_text(BASELINE_JSON, None),
    }
}

/// Evaluates a loaded scenario; parser warnings lead the report's
/// diagnostics.
pub fn evaluate_loaded(loaded: &Loaded) -> Result<Evaluation, Vec<Diagnostic>> {
    match evaluate(&loaded.scenario) {
        Ok(mut e) => {
            let mut diags = loaded.warnings.clone();
            diags.append(&mut e.diagnostics);
            e.diagnostics = diags;
            Ok(e)
        }
        Err(err) => {
            let mut diags = loaded.warnings.clone();
            diags.extend(err.diagnostics());
            Err(diags)
        }
    }
}

/// JSON report text, or the diagnostics body when the scenario is rejected.
pub fn appraise(loaded: &Loaded) -> Result<String, String> {
    let e = evaluate_loaded(loaded).map_err(|d| diagnostics_json(&d))?;
    report_json(&e).map_err(|err| diagnostics_json(&err.diagnostics()))
}
