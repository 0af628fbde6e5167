//! Sparse matrices and vectors over GF(2).
//!
//! [`F2Matrix`] stores each column as a sorted list of row positions, which is
//! the natural layout for boundary matrices (a column is the boundary of one
//! cell). Elimination runs on one of two engines:
//!
//! - a word-packed dense engine, used for kernels, linear solves and for the
//!   rank of small matrices; pivots are chosen deterministically (lowest
//!   column first, lowest remaining row within it), so kernels are
//!   reproducible;
//! - a sparse engine for the rank of large matrices, which pivots on the
//!   sparsest column and keeps fill-in low on the tree- and graph-like
//!   boundary matrices produced by the cone constructions.
//!
//! The text format is `rows cols` on the first line followed by one `r c`
//! pair per nonzero entry (0-indexed, whitespace separated).

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised by GF(2) matrix and vector operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum F2Error {
    /// An entry lies outside the declared shape.
    #[error("entry ({row}, {col}) lies outside a {rows}x{cols} matrix")]
    OutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    /// The same position was given twice where a set was expected.
    #[error("duplicate entry ({row}, {col})")]
    Duplicate { row: usize, col: usize },
    /// A vector position lies outside the vector length.
    #[error("position {pos} lies outside a vector of length {len}")]
    VectorOutOfRange { pos: usize, len: usize },
    /// Operand shapes do not agree.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// Malformed matrix text.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A vector over GF(2), stored as its sorted support.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct F2Vector {
    len: usize,
    support: Vec<usize>,
}

impl F2Vector {
    /// The zero vector of length `len`.
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            support: Vec::new(),
        }
    }

    /// The `i`-th standard basis vector.
    pub fn unit(len: usize, i: usize) -> Result<Self, F2Error> {
        Self::from_support(len, [i])
    }

    /// Builds a vector from a set of positions. Duplicates are rejected.
    pub fn from_support(
        len: usize,
        positions: impl IntoIterator<Item = usize>,
    ) -> Result<Self, F2Error> {
        let mut support: Vec<usize> = positions.into_iter().collect();
        support.sort_unstable();
        for w in support.windows(2) {
            if w[0] == w[1] {
                return Err(F2Error::Duplicate { row: w[0], col: 0 });
            }
        }
        if let Some(&pos) = support.last() {
            if pos >= len {
                return Err(F2Error::VectorOutOfRange { pos, len });
            }
        }
        Ok(Self { len, support })
    }

    /// Builds a vector from positions with XOR semantics: a position listed an
    /// even number of times cancels.
    pub fn from_toggles(
        len: usize,
        positions: impl IntoIterator<Item = usize>,
    ) -> Result<Self, F2Error> {
        let mut all: Vec<usize> = positions.into_iter().collect();
        all.sort_unstable();
        let support = cancel_pairs(&all);
        if let Some(&pos) = support.last() {
            if pos >= len {
                return Err(F2Error::VectorOutOfRange { pos, len });
            }
        }
        Ok(Self { len, support })
    }

    /// Builds a vector from dense bits.
    pub fn from_bits(bits: &[bool]) -> Self {
        Self {
            len: bits.len(),
            support: bits
                .iter()
                .enumerate()
                .filter_map(|(i, &b)| b.then_some(i))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.support.len()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// Sorted nonzero positions.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn get(&self, i: usize) -> bool {
        self.support.binary_search(&i).is_ok()
    }

    /// Dense bit representation.
    pub fn to_bits(&self) -> Vec<bool> {
        let mut bits = vec![false; self.len];
        for &i in &self.support {
            bits[i] = true;
        }
        bits
    }

    /// Sum over GF(2).
    pub fn add(&self, other: &Self) -> Result<Self, F2Error> {
        if self.len != other.len {
            return Err(F2Error::DimensionMismatch(format!(
                "adding vectors of lengths {} and {}",
                self.len, other.len
            )));
        }
        Ok(Self {
            len: self.len,
            support: sym_diff(&self.support, &other.support),
        })
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &Self) -> Result<bool, F2Error> {
        if self.len != other.len {
            return Err(F2Error::DimensionMismatch(format!(
                "dot product of lengths {} and {}",
                self.len, other.len
            )));
        }
        Ok(sorted_intersection_count(&self.support, &other.support) % 2 == 1)
    }

    /// The same support embedded in a longer vector (zero padding at the end).
    pub fn padded(&self, new_len: usize) -> Result<Self, F2Error> {
        if new_len < self.len {
            return Err(F2Error::DimensionMismatch(format!(
                "cannot pad length {} down to {}",
                self.len, new_len
            )));
        }
        Ok(Self {
            len: new_len,
            support: self.support.clone(),
        })
    }
}

impl fmt::Display for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.to_bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// A sparse matrix over GF(2), stored column by column.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SparseRepr", into = "SparseRepr")]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<usize>>,
}

/// Serialized form: shape plus an `[row, col]` entry list.
#[derive(Serialize, Deserialize)]
struct SparseRepr {
    rows: usize,
    cols: usize,
    entries: Vec<[usize; 2]>,
}

impl From<F2Matrix> for SparseRepr {
    fn from(m: F2Matrix) -> Self {
        SparseRepr {
            rows: m.rows,
            cols: m.cols,
            entries: m.entries().map(|(r, c)| [r, c]).collect(),
        }
    }
}

impl TryFrom<SparseRepr> for F2Matrix {
    type Error = F2Error;
    fn try_from(s: SparseRepr) -> Result<Self, F2Error> {
        F2Matrix::from_entries(s.rows, s.cols, s.entries.into_iter().map(|[r, c]| (r, c)))
    }
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            columns: (0..n).map(|i| vec![i]).collect(),
        }
    }

    /// Builds a matrix from a set of nonzero positions. Duplicates and
    /// out-of-range positions are errors.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, F2Error> {
        let mut columns = vec![Vec::new(); cols];
        for (r, c) in entries {
            if r >= rows || c >= cols {
                return Err(F2Error::OutOfRange {
                    row: r,
                    col: c,
                    rows,
                    cols,
                });
            }
            columns[c].push(r);
        }
        for (c, col) in columns.iter_mut().enumerate() {
            col.sort_unstable();
            if let Some(w) = col.windows(2).find(|w| w[0] == w[1]) {
                return Err(F2Error::Duplicate { row: w[0], col: c });
            }
        }
        Ok(Self {
            rows,
            cols,
            columns,
        })
    }

    /// Builds a matrix by toggling positions: repeated positions cancel in
    /// pairs, as in a sum over GF(2).
    pub fn from_toggles(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, F2Error> {
        let mut columns = vec![Vec::new(); cols];
        for (r, c) in entries {
            if r >= rows || c >= cols {
                return Err(F2Error::OutOfRange {
                    row: r,
                    col: c,
                    rows,
                    cols,
                });
            }
            columns[c].push(r);
        }
        for col in columns.iter_mut() {
            col.sort_unstable();
            *col = cancel_pairs(col);
        }
        Ok(Self {
            rows,
            cols,
            columns,
        })
    }

    /// Builds a matrix from per-column row lists (set semantics).
    pub fn from_columns(rows: usize, columns: Vec<Vec<usize>>) -> Result<Self, F2Error> {
        let cols = columns.len();
        Self::from_entries(
            rows,
            cols,
            columns
                .into_iter()
                .enumerate()
                .flat_map(|(c, col)| col.into_iter().map(move |r| (r, c))),
        )
    }

    /// Builds a matrix from per-row column lists (set semantics).
    pub fn from_rows(cols: usize, rows: &[Vec<usize>]) -> Result<Self, F2Error> {
        Self::from_entries(
            rows.len(),
            cols,
            rows.iter()
                .enumerate()
                .flat_map(|(r, row)| row.iter().map(move |&c| (r, c))),
        )
    }

    /// Builds a matrix from dense 0/1 rows. All rows must have equal length.
    pub fn from_dense(rows: &[Vec<u8>]) -> Result<Self, F2Error> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(F2Error::DimensionMismatch("ragged dense rows".into()));
        }
        Self::from_entries(
            rows.len(),
            cols,
            rows.iter().enumerate().flat_map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .filter_map(move |(c, &v)| (v & 1 == 1).then_some((r, c)))
            }),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        col < self.cols && self.columns[col].binary_search(&row).is_ok()
    }

    /// Sorted row positions of column `c`.
    pub fn column(&self, c: usize) -> &[usize] {
        &self.columns[c]
    }

    /// Column `c` as a vector.
    pub fn column_vector(&self, c: usize) -> F2Vector {
        F2Vector {
            len: self.rows,
            support: self.columns[c].clone(),
        }
    }

    /// All nonzero positions in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&r| (r, c)))
    }

    pub fn col_weight(&self, c: usize) -> usize {
        self.columns[c].len()
    }

    pub fn row_weights(&self) -> Vec<usize> {
        let mut w = vec![0; self.rows];
        for col in &self.columns {
            for &r in col {
                w[r] += 1;
            }
        }
        w
    }

    /// Maximum number of nonzeros in a column (0 for an empty matrix).
    pub fn max_col_weight(&self) -> usize {
        self.columns.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Maximum number of nonzeros in a row (0 for an empty matrix).
    pub fn max_row_weight(&self) -> usize {
        self.row_weights().into_iter().max().unwrap_or(0)
    }

    /// Per-row sorted column positions.
    pub fn row_supports(&self) -> Vec<Vec<usize>> {
        let mut rows = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &r in col {
                rows[r].push(c);
            }
        }
        rows
    }

    /// Row `r` as a vector (costs a full scan).
    pub fn row_vector(&self, r: usize) -> F2Vector {
        F2Vector {
            len: self.cols,
            support: (0..self.cols).filter(|&c| self.get(r, c)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self {
            rows: self.cols,
            cols: self.rows,
            columns: self.row_supports(),
        }
    }

    /// A copy with the entry at `(row, col)` flipped.
    pub fn with_toggled(&self, row: usize, col: usize) -> Result<Self, F2Error> {
        if row >= self.rows || col >= self.cols {
            return Err(F2Error::OutOfRange {
                row,
                col,
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut out = self.clone();
        let column = &mut out.columns[col];
        match column.binary_search(&row) {
            Ok(i) => {
                column.remove(i);
            }
            Err(i) => column.insert(i, row),
        }
        Ok(out)
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &Self) -> Result<Self, F2Error> {
        if self.cols != rhs.rows {
            return Err(F2Error::DimensionMismatch(format!(
                "multiplying {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut parity = vec![false; self.rows];
        let mut touched = Vec::new();
        let mut columns = Vec::with_capacity(rhs.cols);
        for rcol in &rhs.columns {
            for &k in rcol {
                for &r in &self.columns[k] {
                    if !parity[r] {
                        touched.push(r);
                    }
                    parity[r] = !parity[r];
                }
            }
            touched.sort_unstable();
            touched.dedup();
            let col: Vec<usize> = touched.iter().copied().filter(|&r| parity[r]).collect();
            for &r in &touched {
                parity[r] = false;
            }
            touched.clear();
            columns.push(col);
        }
        Ok(Self {
            rows: self.rows,
            cols: rhs.cols,
            columns,
        })
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &F2Vector) -> Result<F2Vector, F2Error> {
        if self.cols != v.len {
            return Err(F2Error::DimensionMismatch(format!(
                "multiplying {}x{} by a vector of length {}",
                self.rows, self.cols, v.len
            )));
        }
        let mut rows: Vec<usize> = v
            .support
            .iter()
            .flat_map(|&c| self.columns[c].iter().copied())
            .collect();
        rows.sort_unstable();
        Ok(F2Vector {
            len: self.rows,
            support: cancel_pairs(&rows),
        })
    }

    /// Sum of two matrices of equal shape.
    pub fn add(&self, other: &Self) -> Result<Self, F2Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(F2Error::DimensionMismatch(format!(
                "adding {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            columns: self
                .columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| sym_diff(a, b))
                .collect(),
        })
    }

    /// Horizontal concatenation `[a | b | ...]`.
    pub fn hstack(blocks: &[&Self]) -> Result<Self, F2Error> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        if blocks.iter().any(|b| b.rows != rows) {
            return Err(F2Error::DimensionMismatch(
                "hstack row counts differ".into(),
            ));
        }
        let columns: Vec<Vec<usize>> = blocks
            .iter()
            .flat_map(|b| b.columns.iter().cloned())
            .collect();
        Ok(Self {
            rows,
            cols: columns.len(),
            columns,
        })
    }

    /// Vertical concatenation `[a; b; ...]`.
    pub fn vstack(blocks: &[&Self]) -> Result<Self, F2Error> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        if blocks.iter().any(|b| b.cols != cols) {
            return Err(F2Error::DimensionMismatch(
                "vstack column counts differ".into(),
            ));
        }
        let mut columns = vec![Vec::new(); cols];
        let mut offset = 0;
        for b in blocks {
            for (c, col) in b.columns.iter().enumerate() {
                columns[c].extend(col.iter().map(|&r| r + offset));
            }
            offset += b.rows;
        }
        Ok(Self {
            rows: offset,
            cols,
            columns,
        })
    }

    /// Block matrix `[[a, b], [c, d]]`; blocks must have compatible shapes.
    pub fn block2x2(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self, F2Error> {
        let top = Self::hstack(&[a, b])?;
        let bottom = Self::hstack(&[c, d])?;
        Self::vstack(&[&top, &bottom])
    }

    /// Block-diagonal matrix.
    pub fn block_diag(blocks: &[&Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut columns = Vec::new();
        let mut offset = 0;
        for b in blocks {
            for col in &b.columns {
                columns.push(col.iter().map(|&r| r + offset).collect());
            }
            offset += b.rows;
        }
        Self {
            rows,
            cols: columns.len(),
            columns,
        }
    }

    /// Rank over GF(2).
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        if (self.rows as u64) * (self.cols as u64) <= DENSE_RANK_LIMIT {
            self.rank_dense()
        } else {
            self.rank_sparse()
        }
    }

    /// Rank by word-packed dense elimination.
    pub fn rank_dense(&self) -> usize {
        let mut m = BitMatrix::from_rows_of(self);
        m.eliminate(false).len()
    }

    /// Rank by sparse elimination pivoting on the sparsest column.
    pub fn rank_sparse(&self) -> usize {
        sparse_rank(self)
    }

    /// A basis of the null space `{v : M v = 0}`, one vector per free column
    /// in increasing column order.
    pub fn kernel_basis(&self) -> Vec<F2Vector> {
        let mut m = BitMatrix::from_rows_of(self);
        let pivots = m.eliminate(true);
        let mut is_pivot = vec![false; self.cols];
        for &(_, c) in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut support = vec![f];
                for &(r, c) in &pivots {
                    if m.get(r, f) {
                        support.push(c);
                    }
                }
                support.sort_unstable();
                F2Vector {
                    len: self.cols,
                    support,
                }
            })
            .collect()
    }

    /// Some `x` with `M x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &F2Vector) -> Result<Option<F2Vector>, F2Error> {
        if b.len != self.rows {
            return Err(F2Error::DimensionMismatch(format!(
                "right-hand side of length {} for a matrix with {} rows",
                b.len, self.rows
            )));
        }
        let aug = Self::hstack(&[
            self,
            &Self {
                rows: self.rows,
                cols: 1,
                columns: vec![b.support.clone()],
            },
        ])?;
        let mut m = BitMatrix::from_rows_of(&aug);
        let pivots = m.eliminate(true);
        if pivots.iter().any(|&(_, c)| c == self.cols) {
            return Ok(None);
        }
        let mut support: Vec<usize> = pivots
            .iter()
            .filter(|&&(r, _)| m.get(r, self.cols))
            .map(|&(_, c)| c)
            .collect();
        support.sort_unstable();
        Ok(Some(F2Vector {
            len: self.cols,
            support,
        }))
    }

    /// Parses the `rows cols` / `r c` text format.
    pub fn from_text(text: &str) -> Result<Self, F2Error> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, header) = lines.next().ok_or(F2Error::Parse {
            line: 0,
            msg: "empty input".into(),
        })?;
        let [rows, cols] = parse_pair(line, header)?;
        let mut entries = Vec::new();
        for (line, l) in lines {
            let [r, c] = parse_pair(line, l)?;
            entries.push((r, c));
        }
        Self::from_entries(rows, cols, entries)
    }

    /// Renders the text format, entries sorted by row then column.
    pub fn to_text(&self) -> String {
        let mut entries: Vec<(usize, usize)> = self.entries().collect();
        entries.sort_unstable();
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for (r, c) in entries {
            out.push_str(&format!("{r} {c}\n"));
        }
        out
    }
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2], F2Error> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(F2Error::Parse {
            line,
            msg: format!("expected two integers, found {:?}", text),
        });
    }
    let parse = |s: &str| {
        s.parse::<usize>().map_err(|e| F2Error::Parse {
            line,
            msg: format!("{s:?}: {e}"),
        })
    };
    Ok([parse(fields[0])?, parse(fields[1])?])
}

/// Matrices with at most this many cells use the dense rank engine.
const DENSE_RANK_LIMIT: u64 = 1 << 22;

/// Removes equal adjacent pairs from a sorted list (GF(2) cancellation).
fn cancel_pairs(sorted: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(sorted.len());
    for &x in sorted {
        if out.last() == Some(&x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

fn sym_diff<T: Ord + Copy>(a: &[T], b: &[T]) -> Vec<T> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(a.len() + b.len());
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn sorted_intersection_count(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Row-major word-packed matrix used by the dense engine.
struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    fn from_rows_of(m: &F2Matrix) -> Self {
        let words = m.cols.div_ceil(64).max(1);
        let mut data = vec![0u64; words * m.rows];
        for (c, col) in m.columns.iter().enumerate() {
            for &r in col {
                data[r * words + c / 64] |= 1 << (c % 64);
            }
        }
        Self {
            rows: m.rows,
            cols: m.cols,
            words,
            data,
        }
    }

    fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    /// XORs row `src` into row `dst`, starting at word `from`.
    fn xor_row(&mut self, src: usize, dst: usize, from: usize) {
        let w = self.words;
        let (s, d) = (src * w, dst * w);
        for k in from..w {
            let v = self.data[s + k];
            self.data[d + k] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            let w = self.words;
            for k in 0..w {
                self.data.swap(a * w + k, b * w + k);
            }
        }
    }

    /// Gaussian elimination with deterministic pivots: columns in increasing
    /// order, and within a column the lowest-indexed remaining row. With
    /// `full` the result is in reduced row echelon form. Returns the
    /// `(row, col)` pivot positions.
    fn eliminate(&mut self, full: bool) -> Vec<(usize, usize)> {
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..self.cols {
            if next == self.rows {
                break;
            }
            let Some(p) = (next..self.rows).find(|&r| self.get(r, c)) else {
                continue;
            };
            self.swap_rows(p, next);
            let from = c / 64;
            let start = if full { 0 } else { next + 1 };
            for r in start..self.rows {
                if r != next && self.get(r, c) {
                    self.xor_row(next, r, from);
                }
            }
            pivots.push((next, c));
            next += 1;
        }
        pivots
    }
}

/// Sparse rank: repeatedly pivots on a column with the fewest nonzeros,
/// choosing the sparsest row within it, and eliminates that column from the
/// other rows. On boundary matrices of trees and graphs this is a peeling
/// process with little fill-in.
fn sparse_rank(m: &F2Matrix) -> usize {
    let mut rows: Vec<Vec<u32>> = m
        .row_supports()
        .into_iter()
        .map(|r| r.into_iter().map(|c| c as u32).collect())
        .collect();
    let mut col_rows: Vec<HashSet<u32>> = m
        .columns
        .iter()
        .map(|col| col.iter().map(|&r| r as u32).collect())
        .collect();
    let mut heap: BinaryHeap<Reverse<(usize, u32)>> = col_rows
        .iter()
        .enumerate()
        .filter(|(_, s)| !s.is_empty())
        .map(|(c, s)| Reverse((s.len(), c as u32)))
        .collect();
    let mut rank = 0;
    while let Some(Reverse((count, c))) = heap.pop() {
        let members = &col_rows[c as usize];
        if members.len() != count || count == 0 {
            continue;
        }
        let pivot = *members
            .iter()
            .min_by_key(|&&r| (rows[r as usize].len(), r))
            .expect("nonempty column");
        let others: Vec<u32> = members.iter().copied().filter(|&r| r != pivot).collect();
        let prow = std::mem::take(&mut rows[pivot as usize]);
        for &pc in &prow {
            col_rows[pc as usize].remove(&pivot);
        }
        for r in others {
            let old = std::mem::take(&mut rows[r as usize]);
            let new = sym_diff(&old, &prow);
            for &pc in &prow {
                let set = &mut col_rows[pc as usize];
                if !set.remove(&r) {
                    set.insert(r);
                }
            }
            rows[r as usize] = new;
        }
        rank += 1;
        for &pc in &prow {
            let n = col_rows[pc as usize].len();
            if n > 0 {
                heap.push(Reverse((n, pc)));
            }
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[u8]]) -> F2Matrix {
        F2Matrix::from_dense(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    /// Independent oracle: enumerate all vectors and count the kernel.
    fn kernel_size_by_enumeration(a: &F2Matrix) -> usize {
        (0u32..1 << a.cols())
            .filter(|&bits| {
                let v =
                    F2Vector::from_support(a.cols(), (0..a.cols()).filter(|&i| bits >> i & 1 == 1))
                        .unwrap();
                a.mul_vec(&v).unwrap().is_zero()
            })
            .count()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(F2Matrix::zeros(0, 0).rank(), 0);
        assert_eq!(F2Matrix::identity(3).rank(), 3);
        assert_eq!(m(&[&[1, 1], &[1, 1]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(F2Matrix::identity(2).kernel_basis().is_empty());
        assert_eq!(F2Matrix::zeros(2, 3).kernel_basis().len(), 3);
        let k = m(&[&[1, 1, 0], &[0, 1, 1]]).kernel_basis();
        assert_eq!(k, vec![F2Vector::from_support(3, [0, 1, 2]).unwrap()]);
    }

    #[test]
    fn solve_examples() {
        let b = F2Vector::from_support(2, [0]).unwrap();
        assert_eq!(F2Matrix::identity(2).solve(&b).unwrap(), Some(b.clone()));
        assert_eq!(F2Matrix::zeros(2, 2).solve(&b).unwrap(), None);
        let a = m(&[&[1, 1]]);
        let one = F2Vector::from_support(1, [0]).unwrap();
        let x = a.solve(&one).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), one);
        assert!(F2Matrix::identity(2).solve(&F2Vector::zeros(3)).is_err());
    }

    #[test]
    fn text_round_trip_and_errors() {
        let a = m(&[&[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(F2Matrix::from_text(&a.to_text()).unwrap(), a);
        assert!(matches!(
            F2Matrix::from_text("2 2\n0 5\n"),
            Err(F2Error::OutOfRange { .. })
        ));
        assert!(matches!(
            F2Matrix::from_text("2 2\n0 x\n"),
            Err(F2Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            F2Matrix::from_text("2 2\n0 1\n0 1\n"),
            Err(F2Error::Duplicate { .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let a = m(&[&[1, 0, 1], &[0, 1, 1]]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(serde_json::from_str::<F2Matrix>(&s).unwrap(), a);
    }

    #[test]
    fn toggles_cancel() {
        let a = F2Matrix::from_toggles(2, 2, [(0, 0), (0, 0), (1, 1)]).unwrap();
        assert_eq!(a.nnz(), 1);
        assert!(a.get(1, 1));
        let t = a.with_toggled(1, 1).unwrap();
        assert!(t.is_zero());
    }

    #[test]
    fn sparse_rank_on_large_path_incidence() {
        // Incidence of a long path: rank = vertices - 1.
        let n = 5000;
        let cols: Vec<Vec<usize>> = (0..n - 1).map(|i| vec![i, i + 1]).collect();
        let a = F2Matrix::from_columns(n, cols).unwrap();
        assert_eq!(a.rank(), n - 1);
    }

    fn arb_matrix(max: usize) -> impl Strategy<Value = F2Matrix> {
        (0..=max, 0..=max).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::bool::weighted(0.3), r * c).prop_map(move |bits| {
                F2Matrix::from_entries(
                    r,
                    c,
                    bits.iter()
                        .enumerate()
                        .filter(|(_, &b)| b)
                        .map(|(i, _)| (i / c.max(1), i % c.max(1))),
                )
                .unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rank_is_transpose_invariant(a in arb_matrix(12)) {
            prop_assert_eq!(a.rank(), a.transpose().rank());
        }

        #[test]
        fn engines_agree(a in arb_matrix(40)) {
            prop_assert_eq!(a.rank_dense(), a.rank_sparse());
        }

        #[test]
        fn kernel_is_a_basis(a in arb_matrix(10)) {
            let k = a.kernel_basis();
            prop_assert_eq!(k.len(), a.cols() - a.rank());
            for v in &k {
                prop_assert!(a.mul_vec(v).unwrap().is_zero());
            }
            let stacked = F2Matrix::from_columns(
                a.cols(), k.iter().map(|v| v.support().to_vec()).collect()).unwrap();
            prop_assert_eq!(stacked.rank(), k.len());
            prop_assert_eq!(1usize << k.len(), kernel_size_by_enumeration(&a));
        }

        #[test]
        fn solve_is_exact(a in arb_matrix(10), seed in any::<u64>()) {
            let b = F2Vector::from_support(
                a.rows(), (0..a.rows()).filter(|i| seed >> (i % 64) & 1 == 1)).unwrap();
            let aug = F2Matrix::hstack(&[&a, &F2Matrix::from_columns(
                a.rows(), vec![b.support().to_vec()]).unwrap()]).unwrap();
            match a.solve(&b).unwrap() {
                Some(x) => prop_assert_eq!(a.mul_vec(&x).unwrap(), b),
                None => prop_assert!(aug.rank() > a.rank()),
            }
        }

        #[test]
        fn product_matches_dense((a, b) in arb_matrix(8).prop_flat_map(|a| {
            let k = a.cols();
            (Just(a), (0usize..8).prop_flat_map(move |c| {
                proptest::collection::vec(proptest::bool::weighted(0.3), k * c).prop_map(move |bits| {
                    F2Matrix::from_entries(k, c, bits.iter().enumerate()
                        .filter(|(_, &b)| b).map(|(i, _)| (i / c, i % c))).unwrap()
                })
            }))
        })) {
            let p = a.mul(&b).unwrap();
            for i in 0..a.rows() {
                for j in 0..b.cols() {
                    let mut s = false;
                    for k in 0..a.cols() { s ^= a.get(i, k) && b.get(k, j); }
                    prop_assert_eq!(p.get(i, j), s);
                }
            }
        }
    }
}
