//! `cone`: the cellulated cone of a graph read from an edge list.

use std::path::PathBuf;

use clap::Args;
use cs_cones::{cellulated_cone_with, ConeError, ConeResult};
use cs_core::{homology_dims, verify_complex, weight_audit, Homology, WeightDiagram};
use cs_meshgraph::{parse_edge_list, Graph};
use serde::{Deserialize, Serialize};

use crate::config::{read, RunConfig};
use crate::error::CliError;

#[derive(Args, Debug)]
pub struct ConeArgs {
    /// Edge list of the graph to cone (as written by `graph`).
    #[arg(long)]
    pub graph: PathBuf,
}

/// `cone-audit.json`: homology and weights of a cone against the bounds
/// `w21 ≤ 5`, `q21 ≤ 4 + Δ`, `w10 ≤ 2`, `q10 ≤ 9 + Δ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConeAudit {
    pub schema: u32,
    pub variant: String,
    pub graph_vertices: usize,
    pub graph_edges: usize,
    pub graph_max_degree: usize,
    pub cells: [usize; 3],
    pub boundary_ok: bool,
    pub homology: Homology,
    pub weights: WeightDiagram,
    pub bounds: WeightDiagram,
    pub embeds_graph: bool,
    pub pass: bool,
}

impl ConeAudit {
    pub fn new(g: &Graph, cone: &ConeResult, variant: &str) -> Self {
        let c = &cone.complex;
        let delta = g.max_degree();
        let bounds = WeightDiagram {
            w21: 5,
            q21: 4 + delta,
            w10: 2,
            q10: 9 + delta,
        };
        let mut audit = Self {
            schema: 1,
            variant: variant.to_string(),
            graph_vertices: g.n_vertices(),
            graph_edges: g.n_edges(),
            graph_max_degree: delta,
            cells: [c.dim(0), c.dim(1), c.dim(2)],
            boundary_ok: verify_complex(c),
            homology: homology_dims(c),
            weights: weight_audit(c),
            bounds,
            embeds_graph: cone.embeds_base(),
            pass: false,
        };
        audit.pass = audit.problems().is_empty();
        audit
    }

    /// Every violated property, judged from the recorded numbers alone.
    pub fn problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.schema != 1 {
            out.push(format!("unsupported schema {}", self.schema));
        }
        if !self.boundary_ok {
            out.push("boundary of boundary is nonzero".into());
        }
        if self.homology != Homology::POINT {
            out.push(format!("homology {} is not that of a point", self.homology));
        }
        let (w, b) = (self.weights, self.bounds);
        for (name, value, bound) in [
            ("w21", w.w21, b.w21),
            ("q21", w.q21, b.q21),
            ("w10", w.w10, b.w10),
            ("q10", w.q10, b.q10),
        ] {
            if value > bound {
                out.push(format!("{name} = {value} exceeds {bound}"));
            }
        }
        if !self.embeds_graph {
            out.push("the graph is not a subgraph of the cone".into());
        }
        out
    }
}

pub fn run(args: &ConeArgs, cfg: &RunConfig) -> Result<(), CliError> {
    let (g, _) =
        parse_edge_list(&read(&args.graph)?).map_err(|e| CliError::parse(&args.graph, e))?;
    let cone = cellulated_cone_with(&g, cfg.variant.into()).map_err(|e| match e {
        ConeError::Input(_) => CliError::parse(&args.graph, e),
        other => CliError::Internal(format!("cone construction: {other}")),
    })?;
    let audit = ConeAudit::new(&g, &cone, cfg.variant.name());
    cfg.write("cone.json", &cone.complex.to_json())?;
    cfg.write("cone.sidecar.json", &cone.sidecar_json())?;
    let json = serde_json::to_string_pretty(&audit).expect("audit serialization");
    cfg.write("cone-audit.json", &json)?;
    println!(
        "cone: {} vertices, {} edges, {} faces; homology {}; {}",
        audit.cells[0], audit.cells[1], audit.cells[2], audit.homology, audit.weights
    );
    let problems = audit.problems();
    if problems.is_empty() {
        println!("cone audit: pass");
        Ok(())
    } else {
        for p in &problems {
            println!("cone audit: FAIL {p}");
        }
        if cfg.strict {
            Err(CliError::Invariant(problems))
        } else {
            Ok(())
        }
    }
}
