//! `scale`: cone sizes and weights over a family of random graphs.

use clap::{Args, ValueEnum};
use cs_cones::{cellulated_cone_with, naive_apex_cone};
use cs_core::weight_audit;
use cs_meshgraph::random_regular;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::config::RunConfig;
use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    RandomRegular,
}

#[derive(Args, Debug)]
pub struct ScaleArgs {
    #[arg(long, value_enum, default_value_t = Family::RandomRegular)]
    pub family: Family,
    /// Ascending vertex counts.
    #[arg(long, default_value = "16,32,64,128,256,512,1024")]
    pub sizes: String,
    #[arg(long, default_value_t = 5)]
    pub trials: usize,
    #[arg(long, default_value_t = 3)]
    pub degree: usize,
}

pub const HEADER: &str = "n,trials,mean_c0,mean_c1,mean_c2,max_w21,max_q21,max_w10,max_q10,ratio,naive_c0,naive_c1,naive_apex_degree";

#[derive(Clone, Copy, Debug)]
struct Sample {
    cells: [usize; 3],
    weights: [usize; 4],
    naive: [usize; 2],
}

fn parse_sizes(s: &str) -> Result<Vec<usize>, CliError> {
    let sizes = s
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::Usage(format!("--sizes {s:?} is not a comma-separated list")))?;
    if sizes.is_empty() || sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Usage(format!(
            "--sizes {s:?} must be nonempty and strictly ascending"
        )));
    }
    Ok(sizes)
}

/// Per-trial seed, independent of scheduling.
fn trial_seed(seed: u64, n: usize, trial: usize) -> u64 {
    seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)
        ^ (trial as u64).wrapping_mul(0xc2b2_ae3d_27d4_eb4f)
}

fn sample(n: usize, trial: usize, args: &ScaleArgs, cfg: &RunConfig) -> Result<Sample, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(cfg.seed, n, trial));
    let g = match args.family {
        Family::RandomRegular => random_regular(n, args.degree, &mut rng)
            .map_err(|e| CliError::Usage(format!("random graph with n = {n}: {e}")))?,
    };
    let cone = cellulated_cone_with(&g, cfg.variant.into())
        .map_err(|e| CliError::Internal(format!("cone for n = {n}: {e}")))?;
    let c = &cone.complex;
    let w = weight_audit(c);
    let naive = naive_apex_cone(&g).map_err(|e| CliError::Internal(e.to_string()))?;
    Ok(Sample {
        cells: [c.dim(0), c.dim(1), c.dim(2)],
        weights: [w.w21, w.q21, w.w10, w.q10],
        naive: [naive.dim(0), naive.dim(1)],
    })
}

fn row(n: usize, samples: &[Sample]) -> String {
    let t = samples.len() as f64;
    let mean = |d: usize| samples.iter().map(|s| s.cells[d]).sum::<usize>() as f64 / t;
    let max = |i: usize| samples.iter().map(|s| s.weights[i]).max().unwrap_or(0);
    let nlogn = n as f64 * (n as f64).log2();
    let ratio = if nlogn > 0.0 {
        mean(0) / nlogn
    } else {
        f64::NAN
    };
    format!(
        "{n},{},{:.1},{:.1},{:.1},{},{},{},{},{:.4},{},{},{n}",
        samples.len(),
        mean(0),
        mean(1),
        mean(2),
        max(0),
        max(1),
        max(2),
        max(3),
        ratio,
        samples[0].naive[0],
        samples[0].naive[1],
    )
}

pub fn run(args: &ScaleArgs, cfg: &RunConfig) -> Result<(), CliError> {
    let sizes = parse_sizes(&args.sizes)?;
    if args.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let jobs: Vec<(usize, usize)> = sizes
        .iter()
        .flat_map(|&n| (0..args.trials).map(move |t| (n, t)))
        .collect();
    let samples: Vec<Sample> = jobs
        .par_iter()
        .map(|&(n, t)| sample(n, t, args, cfg))
        .collect::<Result<_, _>>()?;
    let mut csv = format!("{HEADER}\n");
    for (i, &n) in sizes.iter().enumerate() {
        let chunk = &samples[i * args.trials..(i + 1) * args.trials];
        csv.push_str(&row(n, chunk));
        csv.push('\n');
    }
    cfg.write("scale.csv", &csv)?;
    print!("{csv}");
    Ok(())
}

/// Checks a `scale.csv`: header, column count, ascending sizes, and weights
/// within the cone bounds for the recorded family.
pub fn check_csv(text: &str) -> Result<Vec<String>, String> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    if lines.next() != Some(HEADER) {
        return Err("missing or unexpected header".into());
    }
    let mut problems = Vec::new();
    let mut last = 0usize;
    for (i, l) in lines.enumerate() {
        let f: Vec<&str> = l.split(',').collect();
        if f.len() != HEADER.split(',').count() {
            return Err(format!("row {}: expected 13 fields", i + 1));
        }
        let num = |j: usize| {
            f[j].parse::<f64>()
                .map_err(|_| format!("row {}: field {j}", i + 1))
        };
        let n = num(0)? as usize;
        if n <= last {
            problems.push(format!("row {}: sizes are not ascending", i + 1));
        }
        last = n;
        if num(5)? > 5.0 {
            problems.push(format!("row {}: face size above 5", i + 1));
        }
        if num(7)? > 2.0 {
            problems.push(format!("row {}: edge with more than 2 endpoints", i + 1));
        }
    }
    Ok(problems)
}
