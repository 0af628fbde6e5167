//! `deform`: the deformed code that measures a logical, with its audit.

use clap::Args;
use cs_codes::{to_alist, to_symplectic_text};
use cs_surgery::{deform, DeformedForm};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::inputs::{CodeArgs, LogicalArgs};

#[derive(Args, Debug)]
pub struct DeformArgs {
    #[command(flatten)]
    pub code: CodeArgs,
    #[command(flatten)]
    pub logical: LogicalArgs,
}

/// Artifacts are always written; `--strict` then turns a failed audit into
/// exit status 4 so the failing output can still be inspected.
pub fn run(args: &DeformArgs, cfg: &RunConfig) -> Result<(), CliError> {
    let job = args.logical.resolve(args.code.load()?, cfg.distance_cap)?;
    let out = deform(job.measured(), &cfg.deform_options())?;
    match &out.form {
        DeformedForm::Css(complex) => {
            let css = out
                .css()
                .ok_or_else(|| CliError::Internal("deformed complex is not a CSS code".into()))?;
            cfg.write("deformed.hx.alist", &to_alist(css.hx()))?;
            cfg.write("deformed.hz.alist", &to_alist(css.hz()))?;
            cfg.write("deformed.complex.json", &complex.to_json())?;
        }
        DeformedForm::Stabilizer(code) => {
            cfg.write("deformed.symplectic", &to_symplectic_text(code))?;
        }
    }
    cfg.write("cone.sidecar.json", &out.cone.sidecar_json())?;
    cfg.write("audit.json", &out.audit.to_json())?;

    if out.reduction.is_some() {
        println!("logical reduced to X-type by local Cliffords; original bases restored");
    }
    let a = &out.audit;
    let k_after = a.k_after.map_or("?".into(), |k| k.to_string());
    println!(
        "deformed code: n {} -> {}, k {} -> {}",
        a.n_before, a.n_after, a.k_before, k_after
    );
    println!(
        "ancilla: {} vertex checks, {} qubits, {} face checks",
        out.provenance.ancilla[0], out.provenance.ancilla[1], out.provenance.ancilla[2]
    );
    for c in &a.distance.checks {
        let bound = c.bound.map_or(String::new(), |b| format!(" (bound {b})"));
        println!("distance {}: {}{} [{:?}]", c.side, c.value, bound, c.status);
    }
    let failures = a.failures();
    if failures.is_empty() {
        println!("audit: pass");
        return Ok(());
    }
    for f in &failures {
        println!("audit: FAIL {f}");
    }
    if cfg.strict {
        Err(CliError::Invariant(failures))
    } else {
        Ok(())
    }
}
