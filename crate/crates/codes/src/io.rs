//! File formats: MacKay alist and symplectic stabilizer matrices.
//!
//! alist layout (1-based indices, zero padding allowed on list lines):
//!
//! ```text
//! N M                 columns, rows
//! max_col max_row
//! w_1 … w_N           column weights
//! r_1 … r_M           row weights
//! N lines             row indices of each column
//! M lines             column indices of each row
//! ```

use cs_core::F2Matrix;

use crate::{CodeError, StabilizerCode};

fn parse_line(line: usize, text: &str) -> Result<Vec<usize>, CodeError> {
    text.split_whitespace()
        .map(|t| {
            t.parse::<usize>().map_err(|e| CodeError::Parse {
                line,
                msg: format!("{t:?}: {e}"),
            })
        })
        .collect()
}

fn expect_len(line: usize, v: &[usize], n: usize, what: &str) -> Result<(), CodeError> {
    if v.len() != n {
        return Err(CodeError::Parse {
            line,
            msg: format!("expected {n} {what}, found {}", v.len()),
        });
    }
    Ok(())
}

/// Parses an alist file into an `M × N` matrix, cross-checking the column
/// and row lists.
pub fn parse_alist(text: &str) -> Result<F2Matrix, CodeError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mut next = |what: &str| {
        let (line, l) = lines.next().ok_or_else(|| CodeError::Parse {
            line: 0,
            msg: format!("unexpected end of input reading {what}"),
        })?;
        Ok::<_, CodeError>((line, parse_line(line, l)?))
    };
    let (line, header) = next("the header")?;
    expect_len(line, &header, 2, "header fields")?;
    let (n, m) = (header[0], header[1]);
    let (line, maxima) = next("the maximum weights")?;
    expect_len(line, &maxima, 2, "maximum weights")?;
    // A zero-length weight list occupies no line.
    let col_w = if n == 0 {
        Vec::new()
    } else {
        next("column weights")?.1
    };
    expect_len(line, &col_w, n, "column weights")?;
    let row_w = if m == 0 {
        Vec::new()
    } else {
        next("row weights")?.1
    };
    expect_len(line, &row_w, m, "row weights")?;

    let mut entries = Vec::new();
    for (c, &w) in col_w.iter().enumerate() {
        let (line, list) = next("a column list")?;
        let rows: Vec<usize> = list.into_iter().filter(|&x| x != 0).collect();
        expect_len(line, &rows, w, "row indices")?;
        for r in rows {
            if r > m {
                return Err(CodeError::Parse {
                    line,
                    msg: format!("row index {r} exceeds {m}"),
                });
            }
            entries.push((r - 1, c));
        }
    }
    let mut from_rows = Vec::new();
    for (r, &w) in row_w.iter().enumerate() {
        let (line, list) = next("a row list")?;
        let cols: Vec<usize> = list.into_iter().filter(|&x| x != 0).collect();
        expect_len(line, &cols, w, "column indices")?;
        for c in cols {
            if c > n {
                return Err(CodeError::Parse {
                    line,
                    msg: format!("column index {c} exceeds {n}"),
                });
            }
            from_rows.push((r, c - 1));
        }
    }
    let mut a = entries.clone();
    a.sort_unstable();
    from_rows.sort_unstable();
    if a != from_rows {
        return Err(CodeError::Parse {
            line: 0,
            msg: "column and row lists disagree".into(),
        });
    }
    Ok(F2Matrix::from_entries(m, n, entries)?)
}

/// Renders a matrix as alist. Lists are unpadded except that an empty list
/// is written as a single `0`.
pub fn to_alist(h: &F2Matrix) -> String {
    let (m, n) = (h.rows(), h.cols());
    let rows = h.row_supports();
    let join = |v: &mut dyn Iterator<Item = usize>| {
        let s = v.map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        if s.is_empty() {
            "0".to_string()
        } else {
            s
        }
    };
    let mut out = format!("{n} {m}\n{} {}\n", h.max_col_weight(), h.max_row_weight());
    if n > 0 {
        out += &join(&mut (0..n).map(|c| h.col_weight(c)));
        out.push('\n');
    }
    if m > 0 {
        out += &join(&mut rows.iter().map(Vec::len));
        out.push('\n');
    }
    for c in 0..n {
        out += &join(&mut h.column(c).iter().map(|r| r + 1));
        out.push('\n');
    }
    for row in &rows {
        out += &join(&mut row.iter().map(|c| c + 1));
        out.push('\n');
    }
    out
}

/// Parses a stabilizer code from a `2n`-column matrix in the `rows cols` /
/// `r c` text format, one generator `(x | z)` per row.
pub fn parse_symplectic(text: &str) -> Result<StabilizerCode, CodeError> {
    StabilizerCode::from_symplectic_matrix(&F2Matrix::from_text(text)?)
}

pub fn to_symplectic_text(code: &StabilizerCode) -> String {
    code.symplectic_matrix().to_text()
}
