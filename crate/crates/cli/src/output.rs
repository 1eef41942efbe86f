//! Record formatting. JSON objects follow a fixed schema; CSV carries the
//! same fields under a fixed header. Floats are printed with 17 significant
//! digits so records round-trip bit-exactly.

use clap::ValueEnum;
use std::io::Write;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// One computed value with its provenance.
pub struct Record {
    pub quantity: &'static str,
    pub c: Option<f64>,
    pub s: Option<f64>,
    pub method: &'static str,
    pub value: Option<f64>,
    pub error_estimate: Option<f64>,
    pub evaluations: u64,
    pub status: &'static str,
}

/// 17 significant digits, always round-trippable.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn json_opt(x: Option<f64>) -> String {
    match x {
        Some(v) => fmt_f64(v),
        None => "null".to_string(),
    }
}

fn csv_opt(x: Option<f64>) -> String {
    match x {
        Some(v) => fmt_f64(v),
        None => String::new(),
    }
}

impl Record {
    pub fn to_json(&self) -> String {
        format!(
            "{{\"quantity\":\"{}\",\"c\":{},\"s\":{},\"method\":\"{}\",\"value\":{},\"error_estimate\":{},\"evaluations\":{},\"status\":\"{}\"}}",
            self.quantity,
            json_opt(self.c),
            json_opt(self.s),
            self.method,
            json_opt(self.value),
            json_opt(self.error_estimate),
            self.evaluations,
            self.status,
        )
    }

    pub const CSV_HEADER: &'static str =
        "quantity,c,s,method,value,error_estimate,evaluations,status";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.quantity,
            csv_opt(self.c),
            csv_opt(self.s),
            self.method,
            csv_opt(self.value),
            csv_opt(self.error_estimate),
            self.evaluations,
            self.status,
        )
    }
}

/// Render a block of records in the chosen format (CSV gets its header).
pub fn render(records: &[Record], format: Format) -> String {
    let mut out = String::new();
    if format == Format::Csv {
        out.push_str(Record::CSV_HEADER);
        out.push('\n');
    }
    for r in records {
        out.push_str(&match format {
            Format::Json => r.to_json(),
            Format::Csv => r.to_csv(),
        });
        out.push('\n');
    }
    out
}

/// Write to `--out FILE` when given, standard output otherwise.
pub fn emit(text: &str, out: &Option<std::path::PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}
