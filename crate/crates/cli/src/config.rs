//! Flags shared by every verb.

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use cs_cones::Variant;
use cs_surgery::{AuditOptions, DeformOptions};
use num_rational::Ratio;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Full,
    Pruned,
    #[value(alias = "pruned_star")]
    PrunedStar,
}

impl VariantArg {
    pub fn name(self) -> &'static str {
        match self {
            VariantArg::Full => "full",
            VariantArg::Pruned => "pruned",
            VariantArg::PrunedStar => "pruned-star",
        }
    }
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Full => Variant::Full,
            VariantArg::Pruned => Variant::Pruned,
            VariantArg::PrunedStar => Variant::PrunedStar,
        }
    }
}

/// Parses `3`, `1/2` or `0.75` into an exact nonnegative ratio.
pub fn parse_ratio(s: &str) -> Result<Ratio<u64>, String> {
    let s = s.trim();
    let bad = || format!("{s:?} is not a nonnegative rational (use 1, 1/2 or 0.5)");
    if let Some((num, den)) = s.split_once('/') {
        let num: u64 = num.trim().parse().map_err(|_| bad())?;
        let den: u64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(Ratio::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let int: u64 = if int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| bad())?
        };
        let den = 10u64.pow(frac.len() as u32);
        let frac: u64 = frac.parse().map_err(|_| bad())?;
        let num = int
            .checked_mul(den)
            .and_then(|x| x.checked_add(frac))
            .ok_or_else(bad)?;
        return Ok(Ratio::new(num, den));
    }
    s.parse::<u64>().map(Ratio::from_integer).map_err(|_| bad())
}

#[derive(Args, Clone, Debug)]
pub struct RunConfig {
    /// Seed for augmentation and random instances.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Tree variant used for the cone.
    #[arg(long, global = true, value_enum, default_value_t = VariantArg::PrunedStar)]
    pub variant: VariantArg,
    /// Maximum degree of the augmented measurement graph (default: max(w·q, Δ+1)).
    #[arg(long, global = true)]
    pub degree_cap: Option<usize>,
    /// Cheeger constant the measurement graph must certify.
    #[arg(long, global = true, default_value = "1", value_parser = parse_ratio)]
    pub target_h: Ratio<u64>,
    /// Largest logical weight searched by the distance audit.
    #[arg(long, global = true, default_value_t = 24)]
    pub distance_cap: usize,
    /// Exit with status 4 when any audited invariant fails.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Directory the artifacts are written to.
    #[arg(long, global = true, default_value = ".")]
    pub out_dir: PathBuf,
    /// Skip expander augmentation (the distance guarantee then lapses).
    #[arg(long, global = true)]
    pub no_augment: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "CONE_SURGEON_THREADS")]
    pub threads: Option<usize>,
}

impl RunConfig {
    pub fn deform_options(&self) -> DeformOptions {
        DeformOptions {
            seed: self.seed,
            degree_cap: self.degree_cap,
            target_h: self.target_h,
            augment: !self.no_augment,
            variant: self.variant.into(),
            audit: AuditOptions {
                distance_cap: self.distance_cap,
                ..AuditOptions::default()
            },
            strict: false,
        }
    }

    /// Writes `contents` to `name` inside the output directory.
    pub fn write(&self, name: &str, contents: &str) -> Result<PathBuf, CliError> {
        std::fs::create_dir_all(&self.out_dir).map_err(|e| CliError::io(&self.out_dir, e))?;
        let path = self.out_dir.join(name);
        std::fs::write(&path, contents).map_err(|e| CliError::io(&path, e))?;
        Ok(path)
    }
}

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}
