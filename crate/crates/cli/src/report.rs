use std::io::{self, Write};

use detpinv::{
    count_subsets, count_subsets_containing, ExactMatrix, GaussianRational, LsSolution,
    PenroseReport, RankProfile,
};
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputMode {
    Exact,
    /// Rounded to `k` fractional digits, half away from zero.
    Decimal(usize),
    Json,
}

enum Item {
    Note(String, String),
    Matrix(String, ExactMatrix),
    Line(String),
}

/// Ordered diagnostics plus at most one result matrix.
pub(crate) struct Report {
    mode: OutputMode,
    items: Vec<Item>,
    result: Option<(String, ExactMatrix)>,
}

impl Report {
    pub(crate) fn new(mode: OutputMode) -> Self {
        Self {
            mode,
            items: Vec::new(),
            result: None,
        }
    }

    pub(crate) fn note(&mut self, key: &str, value: &str) {
        self.items.push(Item::Note(key.into(), value.into()));
    }

    pub(crate) fn matrix(&mut self, label: &str, x: &ExactMatrix) {
        self.items.push(Item::Matrix(label.into(), x.clone()));
    }

    /// Free-form comment line; omitted from JSON.
    pub(crate) fn line(&mut self, text: &str) {
        self.items.push(Item::Line(text.into()));
    }

    pub(crate) fn result(&mut self, label: &str, x: &ExactMatrix) {
        self.result = Some((label.into(), x.clone()));
    }

    pub(crate) fn profile(&mut self, key: &str, p: &RankProfile) {
        self.note(key, &p.to_string());
    }

    pub(crate) fn subset_counts(&mut self, p: &RankProfile) {
        if p.rank == 0 {
            return;
        }
        let (n, m, r) = (p.cols, p.rows, p.rank);
        let c = |n| count_subsets(r, n).unwrap_or(0);
        let cc = |n| count_subsets_containing(r, n).unwrap_or(0);
        self.note("subsets", &format!("|L_{{{r},{n}}}|={} |J_{{{r},{n}}}{{i}}|={} |L_{{{r},{m}}}|={} |I_{{{r},{m}}}{{j}}|={}", c(n), cc(n), c(m), cc(m)));
    }

    pub(crate) fn solution(&mut self, sol: &LsSolution) {
        self.note("case", &sol.case_tag.to_string());
        self.note("residual_sq", &sol.residual_sq.to_string());
        self.note("norm_sq", &sol.norm_sq.to_string());
        self.result("x_ls", &sol.x);
    }

    pub(crate) fn penrose(&mut self, rep: &PenroseReport) {
        for (k, ok) in rep.passed().iter().enumerate() {
            self.note(
                &format!("penrose {}", k + 1),
                if *ok { "pass" } else { "fail" },
            );
        }
        for (k, r) in &rep.residuals {
            self.note(
                &format!("residual_sq {k}"),
                &r.frobenius_norm_sq().to_string(),
            );
        }
        let summary = if rep.all_pass() {
            "Penrose 1–4: pass".to_string()
        } else {
            let failed: Vec<String> = rep.residuals.iter().map(|(k, _)| k.to_string()).collect();
            format!("Penrose: fail ({})", failed.join(", "))
        };
        self.items.push(Item::Note("summary".into(), summary));
    }

    pub(crate) fn write(&self, out: &mut dyn Write) -> io::Result<()> {
        match self.mode {
            OutputMode::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.to_json())?;
                writeln!(out)
            }
            mode => self.write_text(out, mode),
        }
    }

    fn write_text(&self, out: &mut dyn Write, mode: OutputMode) -> io::Result<()> {
        for item in &self.items {
            match item {
                Item::Note(k, v) if k == "summary" => writeln!(out, "{v}")?,
                Item::Note(k, v) => writeln!(out, "# {k}: {v}")?,
                Item::Line(t) => writeln!(out, "# {t}")?,
                Item::Matrix(label, x) => {
                    writeln!(out, "# {label}:")?;
                    for line in render(x, mode).lines() {
                        writeln!(out, "#   {line}")?;
                    }
                }
            }
        }
        if let Some((_, x)) = &self.result {
            out.write_all(render(x, mode).as_bytes())?;
        }
        Ok(())
    }

    fn to_json(&self) -> Value {
        let mut diagnostics = Map::new();
        let mut intermediates = Map::new();
        for item in &self.items {
            match item {
                Item::Note(k, v) => {
                    diagnostics.insert(k.clone(), Value::String(v.clone()));
                }
                Item::Matrix(label, x) => {
                    intermediates.insert(label.clone(), matrix_json(x));
                }
                Item::Line(_) => {}
            }
        }
        let mut obj = Map::new();
        obj.insert("diagnostics".into(), Value::Object(diagnostics));
        if !intermediates.is_empty() {
            obj.insert("intermediates".into(), Value::Object(intermediates));
        }
        if let Some((label, x)) = &self.result {
            obj.insert(
                "result".into(),
                json!({ "name": label, "matrix": matrix_json(x) }),
            );
        }
        Value::Object(obj)
    }
}

fn scalar_json(z: &GaussianRational) -> Value {
    json!({ "re": z.re().to_string(), "im": z.im().to_string() })
}

pub(crate) fn matrix_json(x: &ExactMatrix) -> Value {
    let rows: Vec<Value> = (0..x.rows())
        .map(|r| Value::Array(x.row_slice(r).iter().map(scalar_json).collect()))
        .collect();
    json!({ "rows": x.rows(), "cols": x.cols(), "entries": rows })
}

/// Matrix text in the given mode. Exact output re-parses to `x`.
pub(crate) fn render(x: &ExactMatrix, mode: OutputMode) -> String {
    match mode {
        OutputMode::Decimal(k) => {
            let mut s = format!("{} {}\n", x.rows(), x.cols());
            for r in 0..x.rows() {
                let line: Vec<String> = x
                    .row_slice(r)
                    .iter()
                    .map(|z| z.to_decimal_string(k))
                    .collect();
                s.push_str(&line.join(" "));
                s.push('\n');
            }
            s
        }
        _ => x.to_text(),
    }
}
