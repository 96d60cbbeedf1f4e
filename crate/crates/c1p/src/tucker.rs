//! Locating a Tucker pattern inside a non-C1P matrix: greedy minimal
//! row/column reduction followed by classification against the five
//! canonical families.

use std::fmt::Write as _;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{build_incompatibility_graph, is_bipartite};
use crate::matrix::BinaryMatrix;
use crate::pattern::{tucker_pattern, TuckerKind};

/// A located Tucker pattern: host row/column index sets plus the permutations
/// mapping the selected submatrix onto the canonical pattern.
///
/// `row_perm[i]` / `col_perm[j]` give the 1-based position within
/// `row_indices` / `col_indices` whose row/column becomes row i / column j of
/// the canonical pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuckerMatch {
    pub kind: TuckerKind,
    pub row_indices: Vec<usize>,
    pub col_indices: Vec<usize>,
    pub row_perm: Vec<usize>,
    pub col_perm: Vec<usize>,
}

impl TuckerMatch {
    /// Applies the permutations to the selected submatrix; by construction
    /// this equals `tucker_pattern(self.kind)`.
    pub fn permuted_submatrix(&self, host: &BinaryMatrix) -> Result<BinaryMatrix> {
        let rows: Vec<usize> = self.row_perm.iter().map(|&p| self.row_indices[p - 1]).collect();
        let cols: Vec<usize> = self.col_perm.iter().map(|&p| self.col_indices[p - 1]).collect();
        host.submatrix(&rows, &cols)
    }

    /// The text report format used by the CLI.
    pub fn report(&self) -> String {
        let mut out = String::new();
        match self.kind.k() {
            Some(k) => {
                let _ = writeln!(out, "kind={} k={}", self.kind.name(), k);
            }
            None => {
                let _ = writeln!(out, "kind={}", self.kind.name());
            }
        }
        let list = |v: &[usize]| v.iter().join(",");
        let _ = writeln!(out, "rows={}", list(&self.row_indices));
        let _ = writeln!(out, "cols={}", list(&self.col_indices));
        let _ = writeln!(out, "row_perm={}", list(&self.row_perm));
        let _ = writeln!(out, "col_perm={}", list(&self.col_perm));
        out
    }
}

fn non_c1p(m: &BinaryMatrix) -> bool {
    !is_bipartite(&build_incompatibility_graph(m)).is_bipartite()
}

/// Greedy minimal row reduction: a row subset R with M[R] non-C1P but every
/// single-row deletion C1P. Rows are tried for deletion in ascending order.
pub fn minimal_nonc1p_rows(m: &BinaryMatrix) -> Result<Vec<usize>> {
    if !non_c1p(m) {
        return Err(Error::MatrixIsC1p("cannot reduce a C1P matrix".into()));
    }
    let all_cols: Vec<usize> = (1..=m.cols()).collect();
    let mut kept: Vec<usize> = (1..=m.rows()).collect();
    for r in 1..=m.rows() {
        if kept.len() == 1 {
            break;
        }
        let trial: Vec<usize> = kept.iter().copied().filter(|&x| x != r).collect();
        if non_c1p(&m.submatrix(&trial, &all_cols)?) {
            kept = trial;
        }
    }
    Ok(kept)
}

/// Greedy minimal column reduction over the given row set.
pub fn minimal_nonc1p_cols(m: &BinaryMatrix, rows: &[usize]) -> Result<Vec<usize>> {
    let all_cols: Vec<usize> = (1..=m.cols()).collect();
    if !non_c1p(&m.submatrix(rows, &all_cols)?) {
        return Err(Error::MatrixIsC1p(
            "row restriction is C1P; nothing to reduce".into(),
        ));
    }
    let mut kept = all_cols;
    for c in 1..=m.cols() {
        if kept.len() == 1 {
            break;
        }
        let trial: Vec<usize> = kept.iter().copied().filter(|&x| x != c).collect();
        if non_c1p(&m.submatrix(rows, &trial)?) {
            kept = trial;
        }
    }
    Ok(kept)
}

/// Dimension-compatible pattern candidates for an r x c matrix.
fn candidates(r: usize, c: usize) -> Vec<TuckerKind> {
    let mut out = Vec::new();
    if r == c && r >= 3 {
        out.push(TuckerKind::I { k: r });
    }
    if r == c && r >= 4 {
        out.push(TuckerKind::II { k: r });
    }
    if c == r + 1 && c >= 4 {
        out.push(TuckerKind::III { k: c });
    }
    if (r, c) == (4, 5) {
        out.push(TuckerKind::IV);
    }
    if (r, c) == (4, 6) {
        out.push(TuckerKind::V);
    }
    out
}

/// If some row and column permutation of `m` equals a canonical pattern,
/// returns the kind and the permutations (position lists as in
/// [`TuckerMatch`]). Dimensions prune candidates; rows are matched by
/// backtracking with row-sum pruning, columns by exact vector matching.
pub fn classify_pattern(m: &BinaryMatrix) -> Option<(TuckerKind, Vec<usize>, Vec<usize>)> {
    for kind in candidates(m.rows(), m.cols()) {
        let pattern = tucker_pattern(kind).expect("candidate kinds are legal");
        if let Some((rp, cp)) = match_onto(m, &pattern) {
            return Some((kind, rp, cp));
        }
    }
    None
}

/// Searches for permutations with pattern[i][j] == m[rp[i]][cp[j]].
fn match_onto(m: &BinaryMatrix, pattern: &BinaryMatrix) -> Option<(Vec<usize>, Vec<usize>)> {
    let rows = m.rows();
    let row_sum = |mat: &BinaryMatrix, r: usize| -> usize {
        (1..=mat.cols()).map(|c| mat.get(r, c) as usize).sum()
    };
    let m_sums: Vec<usize> = (1..=rows).map(|r| row_sum(m, r)).collect();
    let p_sums: Vec<usize> = (1..=rows).map(|r| row_sum(pattern, r)).collect();
    {
        let mut a = m_sums.clone();
        let mut b = p_sums.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
    }
    let mut assignment: Vec<usize> = Vec::with_capacity(rows); // assignment[i] = m row for pattern row i+1
    let mut used = vec![false; rows + 1];
    backtrack_rows(m, pattern, &m_sums, &p_sums, &mut assignment, &mut used)
}

fn backtrack_rows(
    m: &BinaryMatrix,
    pattern: &BinaryMatrix,
    m_sums: &[usize],
    p_sums: &[usize],
    assignment: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let rows = m.rows();
    if assignment.len() == rows {
        return column_match(m, pattern, assignment).map(|cp| (assignment.clone(), cp));
    }
    let target = p_sums[assignment.len()];
    for r in 1..=rows {
        if used[r] || m_sums[r - 1] != target {
            continue;
        }
        used[r] = true;
        assignment.push(r);
        if let Some(found) = backtrack_rows(m, pattern, m_sums, p_sums, assignment, used) {
            return Some(found);
        }
        assignment.pop();
        used[r] = false;
    }
    None
}

/// With rows fixed, pattern columns are concrete 0/1 vectors; match m's
/// columns to them by exact equality, ascending index within equal groups.
fn column_match(m: &BinaryMatrix, pattern: &BinaryMatrix, row_assignment: &[usize]) -> Option<Vec<usize>> {
    let cols = m.cols();
    let m_col = |c: usize| -> Vec<u8> { row_assignment.iter().map(|&r| m.get(r, c)).collect() };
    let p_col = |c: usize| -> Vec<u8> { (1..=pattern.rows()).map(|r| pattern.get(r, c)).collect() };
    let mut taken = vec![false; cols + 1];
    let mut perm = Vec::with_capacity(cols);
    for pc in 1..=cols {
        let want = p_col(pc);
        let found = (1..=cols).find(|&mc| !taken[mc] && m_col(mc) == want)?;
        taken[found] = true;
        perm.push(found);
    }
    Some(perm)
}

/// Row reduction, column reduction, then classification. A classification
/// failure after minimal reduction would contradict Tucker's theorem and is
/// surfaced as an internal consistency error.
pub fn find_tucker(m: &BinaryMatrix) -> Result<TuckerMatch> {
    let rows = minimal_nonc1p_rows(m)?;
    let cols = minimal_nonc1p_cols(m, &rows)?;
    let sub = m.submatrix(&rows, &cols)?;
    let (kind, row_perm, col_perm) =
        classify_pattern(&sub).ok_or(Error::ClassificationFailure {
            rows: sub.rows(),
            cols: sub.cols(),
        })?;
    let found = TuckerMatch {
        kind,
        row_indices: rows,
        col_indices: cols,
        row_perm,
        col_perm,
    };
    debug_assert_eq!(
        found.permuted_submatrix(m)?,
        tucker_pattern(kind)?,
        "match invariant"
    );
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::all_kinds;

    #[test]
    fn minimal_rows_of_t_v_is_everything() {
        let m = tucker_pattern(TuckerKind::V).unwrap();
        assert_eq!(minimal_nonc1p_rows(&m).unwrap(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn duplicated_row_is_dropped() {
        // T_III(4) with row 2 duplicated at the end
        let m = BinaryMatrix::parse("4 4\n1 1 0 0\n0 1 1 0\n0 1 0 1\n0 1 1 0").unwrap();
        let rows = minimal_nonc1p_rows(&m).unwrap();
        assert_eq!(rows.len(), 3);
        let sub = m.submatrix(&rows, &[1, 2, 3, 4]).unwrap();
        assert!(sub.brute_force_c1p().unwrap().is_none());
    }

    #[test]
    fn c1p_matrix_is_rejected() {
        let m = BinaryMatrix::parse("3 3\n1 0 0\n0 1 0\n0 0 1").unwrap();
        assert!(matches!(
            minimal_nonc1p_rows(&m),
            Err(Error::MatrixIsC1p(_))
        ));
    }

    #[test]
    fn column_reduction_strips_padding() {
        // T_III(4) with an all-zero column inserted at position 5
        let m = BinaryMatrix::parse("3 5\n1 1 0 0 0\n0 1 1 0 0\n0 1 0 1 0").unwrap();
        let rows = minimal_nonc1p_rows(&m).unwrap();
        let cols = minimal_nonc1p_cols(&m, &rows).unwrap();
        assert_eq!(cols, vec![1, 2, 3, 4]);
    }

    #[test]
    fn column_reduction_keeps_t_iv_whole() {
        let m = tucker_pattern(TuckerKind::IV).unwrap();
        let rows = minimal_nonc1p_rows(&m).unwrap();
        assert_eq!(minimal_nonc1p_cols(&m, &rows).unwrap(), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn column_reduction_rejects_c1p_restriction() {
        let m = tucker_pattern(TuckerKind::IV).unwrap();
        assert!(minimal_nonc1p_cols(&m, &[1, 2]).is_err());
    }

    #[test]
    fn classify_the_counterexample() {
        let m = BinaryMatrix::parse("3 4\n1 1 0 0\n0 1 1 0\n0 1 0 1").unwrap();
        let (kind, _, _) = classify_pattern(&m).unwrap();
        assert_eq!(kind, TuckerKind::III { k: 4 });
    }

    #[test]
    fn classify_is_permutation_invariant() {
        // same matrix with columns listed in order (2,1,3,4)
        let m = BinaryMatrix::parse("3 4\n1 1 0 0\n1 0 1 0\n1 0 0 1").unwrap();
        let (kind, rp, cp) = classify_pattern(&m).unwrap();
        assert_eq!(kind, TuckerKind::III { k: 4 });
        // applying the permutations reproduces the canonical pattern
        let found = TuckerMatch {
            kind,
            row_indices: vec![1, 2, 3],
            col_indices: vec![1, 2, 3, 4],
            row_perm: rp,
            col_perm: cp,
        };
        assert_eq!(
            found.permuted_submatrix(&m).unwrap(),
            tucker_pattern(kind).unwrap()
        );
    }

    #[test]
    fn classify_rejects_c1p() {
        let m = BinaryMatrix::parse("2 2\n1 1\n1 1").unwrap();
        assert!(classify_pattern(&m).is_none());
    }

    #[test]
    fn find_tucker_on_canonical_patterns() {
        for kind in all_kinds(6) {
            let m = tucker_pattern(kind).unwrap();
            let found = find_tucker(&m).unwrap();
            assert_eq!(found.kind, kind, "expected {kind}, got {}", found.kind);
            assert_eq!(
                found.permuted_submatrix(&m).unwrap(),
                tucker_pattern(found.kind).unwrap()
            );
        }
    }

    #[test]
    fn find_tucker_in_an_embedded_host() {
        // T_IV on columns (1,2,4,5,6), all-zero columns at 3 and 7, plus a
        // duplicated row and an all-zero row
        let host = BinaryMatrix::parse(concat!(
            "6 7\n",
            "1 1 0 0 0 0 0\n",
            "1 1 0 1 1 0 0\n",
            "0 0 0 1 1 0 0\n",
            "1 0 0 0 1 1 0\n",
            "0 0 0 1 1 0 0\n",
            "0 0 0 0 0 0 0\n"
        ))
        .unwrap();
        let found = find_tucker(&host).unwrap();
        assert_eq!(
            found.permuted_submatrix(&host).unwrap(),
            tucker_pattern(found.kind).unwrap()
        );
        assert_eq!(found.kind, TuckerKind::IV);
    }

    #[test]
    fn find_tucker_report_format() {
        let m = tucker_pattern(TuckerKind::I { k: 3 }).unwrap();
        let found = find_tucker(&m).unwrap();
        let report = found.report();
        assert!(report.starts_with("kind=I k=3\n"), "{report}");
        assert!(report.contains("rows=1,2,3\n"));
        assert!(report.contains("cols=1,2,3\n"));
    }
}
