use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Map, Value as Json};

use super::registry;
use super::{Status, Verdict};
use crate::error::{Error, Result};
use crate::scalar::fmt_rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    MarkdownSummary,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "markdown-summary" => Ok(Format::MarkdownSummary),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

pub fn render(verdicts: &[Verdict], format: Format) -> String {
    match format {
        Format::Json => render_json(verdicts),
        Format::Csv => render_csv(verdicts),
        Format::MarkdownSummary => render_markdown(verdicts),
    }
}

pub fn verdict_json(v: &Verdict) -> Json {
    let mut obj = Map::new();
    obj.insert("identity_id".into(), json!(v.identity_id));
    obj.insert(
        "params".into(),
        json!({
            "a": fmt_rat(&v.params.a),
            "b": fmt_rat(&v.params.b),
            "p": fmt_rat(&v.params.p),
            "q": fmt_rat(&v.params.q),
        }),
    );
    obj.insert("n".into(), json!(v.n));
    obj.insert("status".into(), json!(v.status.as_str()));
    if let Some(w) = &v.witness {
        obj.insert(
            "witness".into(),
            json!({ "lhs": w.lhs.to_json(), "rhs": w.rhs.to_json() }),
        );
    }
    if let Some(r) = &v.reason {
        obj.insert("reason".into(), json!(r));
    }
    Json::Object(obj)
}

/// A JSON array with one verdict object per line.
fn render_json(verdicts: &[Verdict]) -> String {
    if verdicts.is_empty() {
        return "[]\n".into();
    }
    let mut out = String::from("[\n");
    for (i, v) in verdicts.iter().enumerate() {
        out.push_str("  ");
        out.push_str(&verdict_json(v).to_string());
        out.push_str(if i + 1 == verdicts.len() { "\n" } else { ",\n" });
    }
    out.push_str("]\n");
    out
}

fn render_csv(verdicts: &[Verdict]) -> String {
    let mut w = csv::WriterBuilder::new()
        .quote_style(csv::QuoteStyle::Always)
        .from_writer(Vec::new());
    w.write_record([
        "identity_id",
        "a",
        "b",
        "p",
        "q",
        "n",
        "status",
        "witness_lhs",
        "witness_rhs",
        "reason",
    ])
    .expect("in-memory write");
    for v in verdicts {
        let (lhs, rhs) = match &v.witness {
            Some(w) => (w.lhs.to_json().to_string(), w.rhs.to_json().to_string()),
            None => (String::new(), String::new()),
        };
        w.write_record([
            v.identity_id.clone(),
            fmt_rat(&v.params.a),
            fmt_rat(&v.params.b),
            fmt_rat(&v.params.p),
            fmt_rat(&v.params.q),
            v.n.to_string(),
            v.status.as_str().to_string(),
            lhs,
            rhs,
            v.reason.clone().unwrap_or_default(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

#[derive(Default)]
struct Tally {
    matched: usize,
    mismatched: usize,
    inapplicable: usize,
}

fn render_markdown(verdicts: &[Verdict]) -> String {
    let mut tallies: BTreeMap<&str, Tally> = BTreeMap::new();
    let mut first_mismatch: BTreeMap<&str, &Verdict> = BTreeMap::new();
    for v in verdicts {
        let t = tallies.entry(&v.identity_id).or_default();
        match v.status {
            Status::Match => t.matched += 1,
            Status::Mismatch => {
                t.mismatched += 1;
                first_mismatch.entry(&v.identity_id).or_insert(v);
            }
            Status::Inapplicable => t.inapplicable += 1,
        }
    }

    let mut out = String::from("# Identity verification summary\n\n");
    let _ = writeln!(out, "{} verdicts over {} identities.\n", verdicts.len(), tallies.len());
    out.push_str("| identity | source | match | mismatch | inapplicable | result |\n");
    out.push_str("|---|---|---:|---:|---:|---|\n");
    for (id, t) in &tallies {
        let source = registry::find(id).map(|i| i.source.as_str()).unwrap_or("unknown");
        let applicable = t.matched + t.mismatched;
        let result = if applicable == 0 {
            "never applicable".to_string()
        } else {
            format!("{}/{} match", t.matched, applicable)
        };
        let _ = writeln!(
            out,
            "| {id} | {source} | {} | {} | {} | {result} |",
            t.matched, t.mismatched, t.inapplicable
        );
    }

    if !first_mismatch.is_empty() {
        out.push_str("\n## Example witnesses\n");
        for (id, v) in &first_mismatch {
            let w = v.witness.as_ref().expect("mismatch carries a witness");
            let _ = write!(
                out,
                "\n### {id}\n\nAt `(a, b, p, q) = ({})`, `n = {}`:\n\n- lhs: `{}`\n- rhs: `{}`\n",
                v.params.key().replace(',', ", "),
                v.n,
                w.lhs,
                w.rhs
            );
        }
    }
    out
}
