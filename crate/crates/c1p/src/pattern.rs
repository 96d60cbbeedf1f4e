//! Generators for the five Tucker patterns, the minimal forbidden
//! submatrices of non-C1P matrices.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;

/// One of the five Tucker pattern families. Kinds I-III are parameterized by
/// a size `k`; kinds IV and V are fixed 4x5 and 4x6 matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TuckerKind {
    /// k x k, k >= 3: a cyclic chain of overlapping 1-pairs.
    I { k: usize },
    /// k x k, k >= 4.
    II { k: usize },
    /// (k-1) x k, k >= 4.
    III { k: usize },
    /// Fixed 4 x 5.
    IV,
    /// Fixed 4 x 6.
    V,
}

impl TuckerKind {
    pub fn name(&self) -> &'static str {
        match self {
            TuckerKind::I { .. } => "I",
            TuckerKind::II { .. } => "II",
            TuckerKind::III { .. } => "III",
            TuckerKind::IV => "IV",
            TuckerKind::V => "V",
        }
    }

    pub fn k(&self) -> Option<usize> {
        match *self {
            TuckerKind::I { k } | TuckerKind::II { k } | TuckerKind::III { k } => Some(k),
            _ => None,
        }
    }

    /// (rows, cols) of the canonical pattern.
    pub fn dims(&self) -> Result<(usize, usize)> {
        self.validate()?;
        Ok(match *self {
            TuckerKind::I { k } | TuckerKind::II { k } => (k, k),
            TuckerKind::III { k } => (k - 1, k),
            TuckerKind::IV => (4, 5),
            TuckerKind::V => (4, 6),
        })
    }

    fn validate(&self) -> Result<()> {
        let (min, got) = match *self {
            TuckerKind::I { k } => (3, k),
            TuckerKind::II { k } | TuckerKind::III { k } => (4, k),
            _ => return Ok(()),
        };
        if got < min {
            return Err(Error::PatternParameter {
                kind: self.name(),
                min,
                got,
            });
        }
        Ok(())
    }

    /// Parses "I".."V" plus an optional k, as used by the CLI `gen` command.
    pub fn from_name(name: &str, k: Option<usize>) -> Result<Self> {
        let kind = match (name, k) {
            ("I", Some(k)) => TuckerKind::I { k },
            ("II", Some(k)) => TuckerKind::II { k },
            ("III", Some(k)) => TuckerKind::III { k },
            ("IV", None) => TuckerKind::IV,
            ("V", None) => TuckerKind::V,
            ("IV", Some(_)) | ("V", Some(_)) => {
                return Err(Error::InvalidParameter(format!(
                    "kind {name} is fixed-size and takes no k"
                )))
            }
            ("I" | "II" | "III", None) => {
                return Err(Error::InvalidParameter(format!("kind {name} requires k")))
            }
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "unknown pattern kind {name:?} (expected I, II, III, IV or V)"
                )))
            }
        };
        kind.validate()?;
        Ok(kind)
    }
}

impl fmt::Display for TuckerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k() {
            Some(k) => write!(f, "T_{}({k})", self.name()),
            None => write!(f, "T_{}", self.name()),
        }
    }
}

/// Builds the canonical pattern matrix in the fixed column order.
pub fn tucker_pattern(kind: TuckerKind) -> Result<BinaryMatrix> {
    let (rows, cols) = kind.dims()?;
    let mut m = vec![vec![0u8; cols]; rows];
    match kind {
        TuckerKind::I { k } => {
            for i in 0..k - 1 {
                m[i][i] = 1;
                m[i][i + 1] = 1;
            }
            m[k - 1][0] = 1;
            m[k - 1][k - 1] = 1;
        }
        TuckerKind::II { k } => {
            for i in 0..k - 2 {
                m[i][i] = 1;
                m[i][i + 1] = 1;
            }
            // row k-1: 1s at columns 1..k-2 and k
            m[k - 2][..k - 2].fill(1);
            m[k - 2][k - 1] = 1;
            // row k: 1s at columns 2..k
            m[k - 1][1..k].fill(1);
        }
        TuckerKind::III { k } => {
            for i in 0..k - 2 {
                m[i][i] = 1;
                m[i][i + 1] = 1;
            }
            // final row: 1s at columns 2..k-2 and k, 0s at columns 1 and k-1
            m[k - 2][1..k - 2].fill(1);
            m[k - 2][k - 1] = 1;
        }
        TuckerKind::IV => {
            m = rows_of(&["11000", "11110", "00110", "10011"]);
        }
        TuckerKind::V => {
            m = rows_of(&["110000", "001100", "000011", "010101"]);
        }
    }
    BinaryMatrix::from_rows(&m)
}

fn rows_of(rows: &[&str]) -> Vec<Vec<u8>> {
    rows.iter()
        .map(|r| r.bytes().map(|b| b - b'0').collect())
        .collect()
}

/// All legal kinds with k in `k_range` (for I-III) plus the fixed kinds.
pub fn all_kinds(k_max: usize) -> Vec<TuckerKind> {
    let mut out = Vec::new();
    for k in 3..=k_max {
        out.push(TuckerKind::I { k });
    }
    for k in 4..=k_max {
        out.push(TuckerKind::II { k });
    }
    for k in 4..=k_max {
        out.push(TuckerKind::III { k });
    }
    out.push(TuckerKind::IV);
    out.push(TuckerKind::V);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(m: &BinaryMatrix) -> Vec<String> {
        (1..=m.rows())
            .map(|r| (1..=m.cols()).map(|c| m.get(r, c).to_string()).collect())
            .collect()
    }

    #[test]
    fn t_iii_4_is_the_counterexample_matrix() {
        let m = tucker_pattern(TuckerKind::III { k: 4 }).unwrap();
        assert_eq!(rows(&m), vec!["1100", "0110", "0101"]);
    }

    #[test]
    fn t_i_3_rows() {
        let m = tucker_pattern(TuckerKind::I { k: 3 }).unwrap();
        assert_eq!(rows(&m), vec!["110", "011", "101"]);
    }

    #[test]
    fn t_ii_5_rows() {
        let m = tucker_pattern(TuckerKind::II { k: 5 }).unwrap();
        assert_eq!(rows(&m), vec!["11000", "01100", "00110", "11101", "01111"]);
    }

    #[test]
    fn fixed_patterns() {
        let m4 = tucker_pattern(TuckerKind::IV).unwrap();
        assert_eq!(rows(&m4), vec!["11000", "11110", "00110", "10011"]);
        let m5 = tucker_pattern(TuckerKind::V).unwrap();
        assert_eq!(rows(&m5), vec!["110000", "001100", "000011", "010101"]);
    }

    #[test]
    fn dimensions_match_the_families() {
        for k in 3..=8 {
            let m = tucker_pattern(TuckerKind::I { k }).unwrap();
            assert_eq!((m.rows(), m.cols()), (k, k));
        }
        for k in 4..=8 {
            let m = tucker_pattern(TuckerKind::II { k }).unwrap();
            assert_eq!((m.rows(), m.cols()), (k, k));
            let m = tucker_pattern(TuckerKind::III { k }).unwrap();
            assert_eq!((m.rows(), m.cols()), (k - 1, k));
        }
    }

    #[test]
    fn k_below_minimum_is_rejected() {
        assert!(tucker_pattern(TuckerKind::I { k: 2 }).is_err());
        assert!(tucker_pattern(TuckerKind::II { k: 3 }).is_err());
        assert!(tucker_pattern(TuckerKind::III { k: 3 }).is_err());
    }

    #[test]
    fn from_name_parsing() {
        assert_eq!(
            TuckerKind::from_name("III", Some(4)).unwrap(),
            TuckerKind::III { k: 4 }
        );
        assert_eq!(TuckerKind::from_name("IV", None).unwrap(), TuckerKind::IV);
        assert!(TuckerKind::from_name("IV", Some(4)).is_err());
        assert!(TuckerKind::from_name("I", None).is_err());
        assert!(TuckerKind::from_name("VI", None).is_err());
    }

    #[test]
    fn patterns_are_not_c1p_and_row_deletion_restores_c1p() {
        // k <= 5 here; the full k <= 8 sweep is in the acceptance suite
        for kind in all_kinds(5) {
            let m = tucker_pattern(kind).unwrap();
            assert!(
                m.brute_force_c1p().unwrap().is_none(),
                "{kind} should not be C1P"
            );
            let all_cols: Vec<usize> = (1..=m.cols()).collect();
            for drop in 1..=m.rows() {
                let keep: Vec<usize> = (1..=m.rows()).filter(|&r| r != drop).collect();
                let sub = m.submatrix(&keep, &all_cols).unwrap();
                assert!(
                    sub.brute_force_c1p().unwrap().is_some(),
                    "{kind} minus row {drop} should be C1P"
                );
            }
        }
    }
}
