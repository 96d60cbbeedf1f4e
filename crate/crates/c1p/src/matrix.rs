//! Binary matrices, the matrix text format, column-ordering checks and the
//! brute-force C1P oracle.
//!
//! All row and column indices exposed by this crate are 1-based, matching the
//! usual `c_1 .. c_n` labelling of columns.

use std::fmt;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Default cap on the column count accepted by [`BinaryMatrix::brute_force_c1p`].
/// 9! ~ 3.6e5 permutation checks stay well under a second.
pub const DEFAULT_ORACLE_CAP: usize = 9;

/// An immutable m x n 0/1 matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u8>, // row-major
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatrix({}x{})", self.rows, self.cols)?;
        for r in 1..=self.rows {
            write!(f, " [")?;
            for c in 1..=self.cols {
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl BinaryMatrix {
    /// Builds a matrix from row slices. Every entry must be 0 or 1.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::InvalidParameter("empty matrix".into()));
        }
        let cols = rows[0].len();
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::InvalidParameter(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    cols
                )));
            }
            for &e in row {
                if e > 1 {
                    return Err(Error::InvalidParameter(format!("entry {e} is not 0/1")));
                }
                entries.push(e);
            }
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at 1-based (row, col).
    pub fn get(&self, row: usize, col: usize) -> u8 {
        assert!(row >= 1 && row <= self.rows && col >= 1 && col <= self.cols);
        self.entries[(row - 1) * self.cols + (col - 1)]
    }

    /// Parses the matrix file format: a "m n" header line followed by m rows
    /// of n space-separated 0/1 tokens.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| Error::Parse {
            line: 1,
            msg: "missing header line".into(),
        })?;
        let dims: Vec<&str> = header.split_whitespace().collect();
        if dims.len() != 2 {
            return Err(Error::Parse {
                line: 1,
                msg: format!("header must be \"m n\", got {header:?}"),
            });
        }
        let parse_dim = |s: &str, what: &str| -> Result<usize> {
            s.parse::<usize>().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("{what} count {s:?} is not a positive integer"),
            })
        };
        let m = parse_dim(dims[0], "row")?;
        let n = parse_dim(dims[1], "column")?;
        if m == 0 || n == 0 {
            return Err(Error::Parse {
                line: 1,
                msg: format!("empty matrix ({m}x{n})"),
            });
        }
        let mut entries = Vec::with_capacity(m * n);
        for r in 1..=m {
            let line = lines.next().ok_or_else(|| Error::Parse {
                line: r + 1,
                msg: format!("missing row {r} of {m}"),
            })?;
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != n {
                return Err(Error::Parse {
                    line: r + 1,
                    msg: format!("row {r} has {} token(s), expected {n}", tokens.len()),
                });
            }
            for tok in tokens {
                match tok {
                    "0" => entries.push(0),
                    "1" => entries.push(1),
                    other => {
                        return Err(Error::Parse {
                            line: r + 1,
                            msg: format!("token {other:?} is not 0 or 1"),
                        })
                    }
                }
            }
        }
        for (i, line) in lines.enumerate() {
            if !line.trim().is_empty() {
                return Err(Error::Parse {
                    line: m + 2 + i,
                    msg: format!("unexpected extra content {line:?}"),
                });
            }
        }
        Ok(Self {
            rows: m,
            cols: n,
            entries,
        })
    }

    /// Serializes to the matrix file format, newline-terminated.
    pub fn serialize(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for r in 1..=self.rows {
            let row = (1..=self.cols).map(|c| self.get(r, c).to_string()).join(" ");
            out.push_str(&row);
            out.push('\n');
        }
        out
    }

    /// True iff under column order `p` every row's 1s form a contiguous block.
    pub fn check_ordering(&self, p: &ColumnPermutation) -> Result<bool> {
        if p.len() != self.cols {
            return Err(Error::InvalidPermutation(format!(
                "permutation length {} != column count {}",
                p.len(),
                self.cols
            )));
        }
        // position[c] = where column c lands under p (1-based)
        let mut position = vec![0usize; self.cols + 1];
        for (pos, &c) in p.order().iter().enumerate() {
            position[c] = pos + 1;
        }
        for r in 1..=self.rows {
            let mut min = usize::MAX;
            let mut max = 0usize;
            let mut count = 0usize;
            #[allow(clippy::needless_range_loop)]
            for c in 1..=self.cols {
                if self.get(r, c) == 1 {
                    let pos = position[c];
                    min = min.min(pos);
                    max = max.max(pos);
                    count += 1;
                }
            }
            if count > 0 && max - min + 1 != count {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exhaustive C1P oracle: the lexicographically first column permutation
    /// making all rows consecutive, or `None` if the matrix is not C1P.
    ///
    /// Refuses matrices wider than [`DEFAULT_ORACLE_CAP`]; use
    /// [`BinaryMatrix::brute_force_c1p_capped`] to change the cap.
    pub fn brute_force_c1p(&self) -> Result<Option<ColumnPermutation>> {
        self.brute_force_c1p_capped(DEFAULT_ORACLE_CAP)
    }

    pub fn brute_force_c1p_capped(&self, cap: usize) -> Result<Option<ColumnPermutation>> {
        if self.cols > cap {
            return Err(Error::OracleLimitExceeded { n: self.cols, cap });
        }
        // itertools yields permutations of a sorted input in lexicographic order
        for perm in (1..=self.cols).permutations(self.cols) {
            let p = ColumnPermutation::new(perm, self.cols)?;
            if self.check_ordering(&p)? {
                return Ok(Some(p));
            }
        }
        Ok(None)
    }

    /// Submatrix selection; indices are 1-based, order-preserving as given.
    pub fn submatrix(&self, row_set: &[usize], col_set: &[usize]) -> Result<Self> {
        check_index_set(row_set, self.rows, "row")?;
        check_index_set(col_set, self.cols, "column")?;
        let mut entries = Vec::with_capacity(row_set.len() * col_set.len());
        for &r in row_set {
            for &c in col_set {
                entries.push(self.get(r, c));
            }
        }
        Ok(Self {
            rows: row_set.len(),
            cols: col_set.len(),
            entries,
        })
    }

    /// Seeded Bernoulli matrix; a pure function of its arguments.
    pub fn random(m: usize, n: usize, density: f64, seed: u64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidParameter("empty matrix".into()));
        }
        if !(0.0..=1.0).contains(&density) {
            return Err(Error::InvalidParameter(format!(
                "density {density} outside [0, 1]"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let entries = (0..m * n)
            .map(|_| u8::from(rng.gen::<f64>() < density))
            .collect();
        Ok(Self {
            rows: m,
            cols: n,
            entries,
        })
    }
}

fn check_index_set(set: &[usize], limit: usize, what: &str) -> Result<()> {
    if set.is_empty() {
        return Err(Error::InvalidParameter(format!("empty {what} set")));
    }
    let mut seen = vec![false; limit + 1];
    for &i in set {
        if i < 1 || i > limit {
            return Err(Error::IndexOutOfRange(format!(
                "{what} index {i} not in 1..={limit}"
            )));
        }
        if seen[i] {
            return Err(Error::DuplicateIndex(format!("{what} index {i}")));
        }
        seen[i] = true;
    }
    Ok(())
}

/// A permutation of the column indices 1..n; `order[p]` is the column placed
/// at position p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnPermutation {
    order: Vec<usize>,
}

impl ColumnPermutation {
    pub fn new(order: Vec<usize>, n: usize) -> Result<Self> {
        if order.len() != n {
            return Err(Error::InvalidPermutation(format!(
                "length {} != {n}",
                order.len()
            )));
        }
        let mut seen = vec![false; n + 1];
        for &c in &order {
            if c < 1 || c > n || seen[c] {
                return Err(Error::InvalidPermutation(format!(
                    "not a permutation of 1..={n}: {order:?}"
                )));
            }
            seen[c] = true;
        }
        Ok(Self { order })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            order: (1..=n).collect(),
        }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

impl fmt::Display for ColumnPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.order.iter().join(" "))
    }
}
