//! `verify`: re-checks artifacts written by the other verbs.
//!
//! The file type is taken from the extension, and for JSON from the fields
//! present. Unreadable or unparsable files end the run with status 1; files
//! that parse but violate an invariant with status 4.

use std::path::{Path, PathBuf};

use clap::Args;
use cs_codes::{parse_alist, parse_symplectic, CodeError};
use cs_core::{homology_dims, verify_complex, CellComplex, F2Matrix};
use cs_meshgraph::parse_edge_list;
use cs_surgery::AuditReport;
use serde_json::Value;

use crate::cone::ConeAudit;
use crate::config::read;
use crate::error::CliError;
use crate::graph::Certificate;
use crate::scale::check_csv;

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Artifacts to check.
    #[arg(required = true)]
    pub files: Vec<PathBuf>,
}

/// What a file turned out to be, with any violated invariants.
struct Checked {
    kind: &'static str,
    summary: String,
    problems: Vec<String>,
}

impl Checked {
    fn ok(kind: &'static str, summary: String) -> Self {
        Self {
            kind,
            summary,
            problems: Vec::new(),
        }
    }
}

fn extension(path: &Path) -> String {
    path.extension()
        .and_then(|e| e.to_str())
        .unwrap_or("")
        .to_ascii_lowercase()
}

fn check_file(path: &Path) -> Result<Checked, CliError> {
    let text = read(path)?;
    let parse = |e: &dyn std::fmt::Display| CliError::parse(path, e.to_string());
    match extension(path).as_str() {
        "edges" => {
            let (g, _) = parse_edge_list(&text).map_err(|e| parse(&e))?;
            let mut c = Checked::ok(
                "edge list",
                format!("{} vertices, {} edges", g.n_vertices(), g.n_edges()),
            );
            if g.n_vertices() > 1 && !g.is_connected() {
                c.problems.push("graph is not connected".into());
            }
            Ok(c)
        }
        "dot" => check_dot(&text).map_err(|e| parse(&e)),
        "alist" => {
            let h = parse_alist(&text).map_err(|e| parse(&e))?;
            Ok(Checked::ok("alist", format!("{}x{}", h.rows(), h.cols())))
        }
        "symplectic" => match parse_symplectic(&text) {
            Ok(code) => Ok(Checked::ok(
                "stabilizer code",
                format!("n = {}, k = {}", code.n(), code.k()),
            )),
            Err(e @ CodeError::NonCommuting(..)) => Ok(Checked {
                kind: "stabilizer code",
                summary: String::new(),
                problems: vec![e.to_string()],
            }),
            Err(e) => Err(parse(&e)),
        },
        "csv" => {
            let problems = check_csv(&text).map_err(|e| parse(&e))?;
            Ok(Checked {
                kind: "scale table",
                summary: format!("{} rows", text.lines().count().saturating_sub(1)),
                problems,
            })
        }
        "json" => check_json(path, &text),
        _ => {
            let m = F2Matrix::from_text(&text).map_err(|e| parse(&e))?;
            Ok(Checked::ok("matrix", format!("{}x{}", m.rows(), m.cols())))
        }
    }
}

fn check_dot(text: &str) -> Result<Checked, String> {
    let body = text.trim();
    if !body.starts_with("graph") || !body.ends_with('}') {
        return Err("not an undirected DOT graph".into());
    }
    let edges = body.lines().filter(|l| l.contains("--")).count();
    Ok(Checked::ok("dot graph", format!("{edges} edges")))
}

fn check_json(path: &Path, text: &str) -> Result<Checked, CliError> {
    let parse = |e: &dyn std::fmt::Display| CliError::parse(path, e.to_string());
    let value: Value = serde_json::from_str(text).map_err(|e| parse(&e))?;
    let has = |k: &str| value.get(k).is_some();
    if has("labels2") && has("d2") {
        let c = CellComplex::from_json(text).map_err(|e| parse(&e))?;
        let mut out = Checked::ok(
            "cell complex",
            format!(
                "{} / {} / {} cells, homology {}",
                c.dim(2),
                c.dim(1),
                c.dim(0),
                homology_dims(&c)
            ),
        );
        if !verify_complex(&c) {
            out.problems.push("boundary of boundary is nonzero".into());
        }
        Ok(out)
    } else if has("n_before") && has("kind") {
        let a = AuditReport::from_json(text).map_err(|e| parse(&e))?;
        Ok(Checked {
            kind: "deformation audit",
            summary: format!(
                "k {} -> {}",
                a.k_before,
                a.k_after.map_or("?".into(), |k| k.to_string())
            ),
            problems: a.failures(),
        })
    } else if has("embeds_graph") {
        let a: ConeAudit = serde_json::from_value(value).map_err(|e| parse(&e))?;
        let mut problems = a.problems();
        if a.pass != problems.is_empty() {
            problems.push("recorded verdict disagrees with the recorded numbers".into());
        }
        Ok(Checked {
            kind: "cone audit",
            summary: format!("homology {}", a.homology),
            problems,
        })
    } else if has("meets_target") {
        let c: Certificate = serde_json::from_value(value).map_err(|e| parse(&e))?;
        Ok(Checked {
            kind: "expansion certificate",
            summary: match (&c.exact, c.value) {
                (Some(h), _) => format!("{} h = {h}", c.method),
                (None, Some(v)) => format!("{} h ≥ {v:.4}", c.method),
                (None, None) => c.method.clone(),
            },
            problems: c.problems(),
        })
    } else if has("vertices") && has("edges") {
        check_sidecar(&value).map_err(|e| parse(&e))
    } else {
        Err(parse(&"unrecognized JSON artifact"))
    }
}

fn check_sidecar(v: &Value) -> Result<Checked, String> {
    let vertices = v["vertices"]
        .as_object()
        .ok_or("\"vertices\" is not an object")?;
    let edges = v["edges"].as_array().ok_or("\"edges\" is not an array")?;
    let mut problems = Vec::new();
    for (j, e) in edges.iter().enumerate() {
        let ends = e["endpoints"]
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| format!("edge {j}: bad endpoints"))?;
        for end in ends {
            let name = end
                .as_str()
                .ok_or_else(|| format!("edge {j}: bad endpoint"))?;
            if !vertices.contains_key(name) {
                problems.push(format!("edge {j}: endpoint {name:?} has no vertex image"));
            }
        }
        if e["path"].as_array().map_or(true, |p| p.is_empty()) && e["cell"].is_null() {
            problems.push(format!("edge {j}: neither a cell nor a path"));
        }
    }
    Ok(Checked {
        kind: "cone sidecar",
        summary: format!("{} vertices, {} edges", vertices.len(), edges.len()),
        problems,
    })
}

pub fn run(args: &VerifyArgs) -> Result<(), CliError> {
    let mut first_parse_error = None;
    let mut problems = Vec::new();
    for path in &args.files {
        match check_file(path) {
            Ok(c) if c.problems.is_empty() => {
                println!("{}: ok ({}: {})", path.display(), c.kind, c.summary)
            }
            Ok(c) => {
                for p in &c.problems {
                    println!("{}: FAIL ({}) {p}", path.display(), c.kind);
                    problems.push(format!("{}: {p}", path.display()));
                }
            }
            Err(e) => {
                println!("{}: unreadable: {e}", path.display());
                first_parse_error.get_or_insert(e);
            }
        }
    }
    if let Some(e) = first_parse_error {
        return Err(e);
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(CliError::Invariant(problems))
    }
}
