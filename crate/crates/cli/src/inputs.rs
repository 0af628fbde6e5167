//! Loading codes and logical operators from the command line.

use std::path::{Path, PathBuf};

use clap::Args;
use cs_codes::{
    fixtures, min_weight_logical, parse_alist, parse_symplectic, CssCode, Distance, PauliOp, Side,
    StabilizerCode,
};
use cs_core::{F2Matrix, F2Vector};
use cs_surgery::Measured;

use crate::config::read;
use crate::error::CliError;

#[derive(Args, Clone, Debug, Default)]
pub struct CodeArgs {
    /// X-check matrix (alist, or `rows cols` / `r c` text).
    #[arg(long, requires = "hz", conflicts_with_all = ["code", "fixture"])]
    pub hx: Option<PathBuf>,
    /// Z-check matrix (alist, or `rows cols` / `r c` text).
    #[arg(long, requires = "hx")]
    pub hz: Option<PathBuf>,
    /// Stabilizer code as a symplectic `(x | z)` matrix in text format.
    #[arg(long, conflicts_with = "fixture")]
    pub code: Option<PathBuf>,
    /// Built-in code: four-two-two, steane, toric-L, five-qubit.
    #[arg(long)]
    pub fixture: Option<String>,
}

#[derive(Args, Clone, Debug, Default)]
pub struct LogicalArgs {
    /// File holding a Pauli string (`XIZY…`) or a qubit support list.
    #[arg(long, conflicts_with_all = ["pauli", "support", "min_weight"])]
    pub logical: Option<PathBuf>,
    /// The logical as a Pauli string.
    #[arg(long, conflicts_with_all = ["support", "min_weight"])]
    pub pauli: Option<String>,
    /// Support of an X-type logical, e.g. `0,1,4`.
    #[arg(long, conflicts_with = "min_weight")]
    pub support: Option<String>,
    /// Measure the minimum-weight X logical found under the distance cap.
    #[arg(long)]
    pub min_weight: bool,
}

/// A loaded code.
#[derive(Clone, Debug)]
pub enum Code {
    Css(CssCode),
    Stabilizer(StabilizerCode),
}

/// What to measure, owning its data.
#[derive(Clone, Debug)]
pub enum Job {
    Css {
        code: CssCode,
        ell: F2Vector,
    },
    Stabilizer {
        code: StabilizerCode,
        logical: PauliOp,
    },
}

impl Job {
    pub fn measured(&self) -> Measured<'_> {
        match self {
            Job::Css { code, ell } => Measured::Css { code, ell },
            Job::Stabilizer { code, logical } => Measured::Stabilizer { code, logical },
        }
    }
}

/// Reads a parity-check matrix: alist when the extension says so, otherwise
/// the sparse text format with alist as a fallback.
pub fn load_matrix(path: &Path) -> Result<F2Matrix, CliError> {
    let text = read(path)?;
    let is_alist = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("alist"));
    if is_alist {
        return parse_alist(&text).map_err(|e| CliError::parse(path, e));
    }
    match F2Matrix::from_text(&text) {
        Ok(m) => Ok(m),
        Err(text_err) => parse_alist(&text)
            .map_err(|_| CliError::parse(path, format!("not a matrix file: {text_err}"))),
    }
}

pub fn fixture(name: &str) -> Result<Code, CliError> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "four-two-two" | "422" => Ok(Code::Css(fixtures::four_two_two())),
        "steane" => Ok(Code::Css(fixtures::steane())),
        "five-qubit" | "513" => Ok(Code::Stabilizer(fixtures::five_qubit())),
        _ => match lower.strip_prefix("toric-").map(str::parse::<usize>) {
            Some(Ok(l)) if l >= 2 => Ok(Code::Css(fixtures::toric(l))),
            _ => Err(CliError::Usage(format!(
                "unknown fixture {name:?} (four-two-two, steane, toric-L with L ≥ 2, five-qubit)"
            ))),
        },
    }
}

impl CodeArgs {
    pub fn load(&self) -> Result<Code, CliError> {
        if let (Some(hx), Some(hz)) = (&self.hx, &self.hz) {
            let (mx, mz) = (load_matrix(hx)?, load_matrix(hz)?);
            return CssCode::new(mx, mz)
                .map(Code::Css)
                .map_err(|e| CliError::parse(hz, e));
        }
        if let Some(path) = &self.code {
            let code = parse_symplectic(&read(path)?).map_err(|e| CliError::parse(path, e))?;
            return Ok(Code::Stabilizer(code));
        }
        if let Some(name) = &self.fixture {
            return fixture(name);
        }
        Err(CliError::Usage(
            "no code given: use --hx/--hz, --code or --fixture".into(),
        ))
    }
}

/// A logical as written: a Pauli string or an X support.
enum Spec {
    Pauli(PauliOp),
    Support(Vec<usize>),
}

fn parse_support(s: &str, n: usize) -> Result<Vec<usize>, String> {
    let mut out = Vec::new();
    for t in s.split(|c: char| c == ',' || c.is_whitespace()) {
        if t.is_empty() {
            continue;
        }
        let q: usize = t
            .parse()
            .map_err(|_| format!("{t:?} is not a qubit index"))?;
        if q >= n {
            return Err(format!("qubit {q} is out of range for {n} qubits"));
        }
        out.push(q);
    }
    if out.is_empty() {
        return Err("the support is empty".into());
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn looks_like_pauli(s: &str) -> bool {
    let mut chars = s.chars().filter(|c| !c.is_whitespace()).peekable();
    chars.peek().is_some() && chars.all(|c| matches!(c, 'I' | 'X' | 'Y' | 'Z' | '_'))
}

fn parse_spec(text: &str, n: usize) -> Result<Spec, String> {
    let body: String = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect::<Vec<_>>()
        .join(" ");
    if looks_like_pauli(&body) {
        let p: PauliOp = body.replace('_', "I").parse().map_err(|e| format!("{e}"))?;
        if p.n() != n {
            return Err(format!(
                "Pauli string has {} qubits, the code has {n}",
                p.n()
            ));
        }
        return Ok(Spec::Pauli(p));
    }
    parse_support(&body, n).map(Spec::Support)
}

impl LogicalArgs {
    /// Pairs the code with the logical to measure. A CSS code measured with a
    /// non-X Pauli goes through the stabilizer route.
    pub fn resolve(&self, code: Code, distance_cap: usize) -> Result<Job, CliError> {
        let n = match &code {
            Code::Css(c) => c.n(),
            Code::Stabilizer(s) => s.n(),
        };
        let spec = if let Some(path) = &self.logical {
            parse_spec(&read(path)?, n).map_err(|e| CliError::parse(path, e))?
        } else if let Some(p) = &self.pauli {
            match parse_spec(p, n).map_err(CliError::Usage)? {
                Spec::Pauli(p) => Spec::Pauli(p),
                Spec::Support(_) => {
                    return Err(CliError::Usage(format!("{p:?} is not a Pauli string")))
                }
            }
        } else if let Some(s) = &self.support {
            Spec::Support(parse_support(s, n).map_err(CliError::Usage)?)
        } else if self.min_weight {
            return min_weight_job(code, distance_cap);
        } else {
            return Err(CliError::Usage(
                "no logical given: use --logical, --pauli, --support or --min-weight".into(),
            ));
        };
        Ok(match (code, spec) {
            (Code::Css(code), Spec::Support(s)) => Job::Css {
                ell: F2Vector::from_support(n, s).expect("indices checked"),
                code,
            },
            (Code::Css(code), Spec::Pauli(p)) if p.is_x_type() => Job::Css {
                ell: p.x().clone(),
                code,
            },
            (Code::Css(code), Spec::Pauli(p)) => {
                eprintln!("note: {p} is not X-type; measuring through the stabilizer route");
                Job::Stabilizer {
                    code: code.to_stabilizer(),
                    logical: p,
                }
            }
            (Code::Stabilizer(code), Spec::Pauli(p)) => Job::Stabilizer { code, logical: p },
            (Code::Stabilizer(code), Spec::Support(s)) => Job::Stabilizer {
                logical: PauliOp::x_type(F2Vector::from_support(n, s).expect("indices checked")),
                code,
            },
        })
    }
}

fn min_weight_job(code: Code, cap: usize) -> Result<Job, CliError> {
    let css = match code {
        Code::Css(c) => c,
        Code::Stabilizer(s) => s.as_css().ok_or_else(|| {
            CliError::Usage("--min-weight needs a CSS code; give the logical explicitly".into())
        })?,
    };
    let search = min_weight_logical(&css, Side::X, Some(cap))
        .map_err(|e| CliError::Usage(format!("minimum-weight search failed: {e}")))?;
    match (search.distance, search.witness) {
        (_, Some(ell)) => {
            eprintln!(
                "note: measuring the minimum-weight X logical {:?}",
                ell.support()
            );
            Ok(Job::Css { code: css, ell })
        }
        (Distance::NoLogicals, None) => {
            Err(CliError::Usage("the code encodes no logical qubits".into()))
        }
        (d, None) => Err(CliError::Usage(format!(
            "no X logical of weight ≤ {cap} (distance {d}); raise --distance-cap"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs() {
        assert!(matches!(parse_spec("XXII\n", 4), Ok(Spec::Pauli(_))));
        assert!(matches!(parse_spec("# ell\n0, 1\n", 4), Ok(Spec::Support(s)) if s == [0, 1]));
        assert!(parse_spec("XX", 4).is_err());
        assert!(parse_spec("0 7", 4).is_err());
        assert!(parse_spec("", 4).is_err());
    }

    #[test]
    fn fixtures_by_name() {
        assert!(matches!(fixture("422"), Ok(Code::Css(c)) if c.n() == 4));
        assert!(matches!(fixture("toric-3"), Ok(Code::Css(c)) if c.n() == 18));
        assert!(matches!(fixture("five-qubit"), Ok(Code::Stabilizer(_))));
        assert!(fixture("toric-1").is_err());
        assert!(fixture("golay").is_err());
    }

    #[test]
    fn css_with_y_logical_takes_stabilizer_route() {
        let args = LogicalArgs {
            pauli: Some("YYII".into()),
            ..Default::default()
        };
        // Y⊗Y on the first two qubits of [[4,2,2]] commutes with XXXX and ZZZZ.
        let job = args.resolve(fixture("422").unwrap(), 8).unwrap();
        assert!(matches!(job, Job::Stabilizer { .. }));
        let args = LogicalArgs {
            min_weight: true,
            ..Default::default()
        };
        let job = args.resolve(fixture("steane").unwrap(), 8).unwrap();
        assert!(matches!(job, Job::Css { ell, .. } if ell.weight() == 3));
    }
}
