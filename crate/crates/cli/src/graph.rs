//! `graph`: the certified measurement graph of a logical.

use clap::Args;
use cs_codes::LocalClifford;
use cs_meshgraph::MeasurementGraph;
use cs_surgery::prepare_measurement_graph;
use serde::{Deserialize, Serialize};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::inputs::{CodeArgs, LogicalArgs};

#[derive(Args, Debug)]
pub struct GraphArgs {
    #[command(flatten)]
    pub code: CodeArgs,
    #[command(flatten)]
    pub logical: LogicalArgs,
}

/// `certificate.json`: how the measurement graph's expansion was certified.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: u32,
    pub vertices: usize,
    pub edges: usize,
    pub check_edges: usize,
    pub augmentation_edges: usize,
    pub max_degree: usize,
    /// `exact`, `spectral` or `trivial` (a single vertex has no cuts).
    pub method: String,
    pub value: Option<f64>,
    pub exact: Option<String>,
    pub target: String,
    pub meets_target: bool,
    /// Per-qubit Clifford taking the logical to X-type, when one was needed.
    pub reduction: Option<Vec<String>>,
}

impl Certificate {
    pub fn new(
        mg: &MeasurementGraph,
        cfg: &RunConfig,
        reduction: Option<&[LocalClifford]>,
    ) -> Self {
        let g = mg.graph();
        let cert = mg.certificate();
        Self {
            schema: 1,
            vertices: g.n_vertices(),
            edges: g.n_edges(),
            check_edges: g.n_edges() - mg.augmentation_edges(),
            augmentation_edges: mg.augmentation_edges(),
            max_degree: g.max_degree(),
            method: cert.map_or("trivial".into(), |c| c.method.to_string()),
            value: cert.map(|c| c.value),
            exact: cert.and_then(|c| c.exact).map(|h| h.to_string()),
            target: cfg.target_h.to_string(),
            meets_target: cert.map_or(true, |c| c.meets(cfg.target_h)),
            reduction: reduction.map(|r| r.iter().map(|c| c.to_string()).collect()),
        }
    }

    /// Internal consistency of a certificate read back from disk.
    pub fn problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.schema != 1 {
            out.push(format!("unsupported schema {}", self.schema));
        }
        if self.check_edges + self.augmentation_edges != self.edges {
            out.push("edge counts do not add up".into());
        }
        if !matches!(self.method.as_str(), "exact" | "spectral" | "trivial") {
            out.push(format!("unknown method {:?}", self.method));
        }
        if self.method == "exact" && self.exact.is_none() {
            out.push("exact certificate without an exact value".into());
        }
        if !self.meets_target {
            out.push(format!(
                "certified value does not reach the target {}",
                self.target
            ));
        }
        out
    }
}

pub fn run(args: &GraphArgs, cfg: &RunConfig) -> Result<(), CliError> {
    let job = args.logical.resolve(args.code.load()?, cfg.distance_cap)?;
    let (mg, reduction) = prepare_measurement_graph(job.measured(), &cfg.deform_options())?;
    let cert = Certificate::new(&mg, cfg, reduction.as_ref().map(|r| r.cliffords.as_slice()));
    if !cert.meets_target {
        return Err(CliError::Certification(format!(
            "certified value {} is below the target {}",
            cert.value.unwrap_or(0.0),
            cfg.target_h
        )));
    }
    if reduction.is_some() {
        println!("logical reduced to X-type by local Cliffords (see certificate.json)");
    }
    let tags = mg.edge_checks();
    let g = mg.graph();
    cfg.write("graph.edges", &g.to_edge_list(Some(tags)))?;
    cfg.write("graph.dot", &g.to_dot(Some(tags)))?;
    let json = serde_json::to_string_pretty(&cert).expect("certificate serialization");
    let path = cfg.write("certificate.json", &json)?;
    println!(
        "measurement graph: {} vertices, {} edges ({} augmentation), max degree {}",
        cert.vertices, cert.edges, cert.augmentation_edges, cert.max_degree
    );
    println!(
        "cheeger ({}): {}",
        cert.method,
        cert.exact
            .clone()
            .or(cert.value.map(|v| format!("{v:.4}")))
            .unwrap_or_else(|| "n/a".into())
    );
    println!("wrote {}", path.display());
    Ok(())
}
