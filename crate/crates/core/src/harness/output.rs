use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use super::{Format, HarnessError};

pub const CSV_HEADER: [&str; 10] = ["experiment", "dim", "N", "seed", "fidelity", "survival", "deficit", "analytic_bound", "slope", "extra"];

/// One output row. `extra` carries experiment-specific fields; it is a JSON
/// object in JSON output and a JSON-encoded string in CSV output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub experiment: String,
    pub dim: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub seed: u64,
    pub fidelity: f64,
    pub survival: f64,
    pub deficit: f64,
    pub analytic_bound: f64,
    pub slope: Option<f64>,
    pub extra: Map<String, Value>,
}

/// Scientific notation with 17 significant digits.
fn sci(x: f64) -> String {
    format!("{x:.16e}")
}

fn to_csv(rows: &[Row]) -> Result<String, HarnessError> {
    let io = |e: csv::Error| HarnessError::Io(e.to_string());
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in rows {
        let extra = serde_json::to_string(&r.extra).map_err(|e| HarnessError::Io(e.to_string()))?;
        w.write_record([
            r.experiment.clone(),
            r.dim.to_string(),
            r.n.to_string(),
            r.seed.to_string(),
            sci(r.fidelity),
            sci(r.survival),
            sci(r.deficit),
            sci(r.analytic_bound),
            r.slope.map(sci).unwrap_or_default(),
            extra,
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| HarnessError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| HarnessError::Io(e.to_string()))
}

pub fn render(rows: &[Row], format: Format) -> Result<String, HarnessError> {
    match format {
        Format::Csv => to_csv(rows),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rows).map_err(|e| HarnessError::Io(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
    }
}

pub fn parse_json(text: &str) -> Result<Vec<Row>, HarnessError> {
    serde_json::from_str(text).map_err(|e| HarnessError::Io(e.to_string()))
}
