//! Odd-cycle and forcing-path certificates of non-C1P: shortest searches,
//! the conversions between the two certificate forms, independent
//! verification against the matrix, and the certificate file format.
//!
//! The verifiers deliberately do not reuse the graph-build edge sets; they
//! re-derive adjacency from the matrix itself, so a construction bug in
//! `graph` cannot hide a bad certificate.

use std::collections::VecDeque;

use itertools::Itertools;
use thiserror::Error;

use crate::error::{Error, Result};
use crate::graph::{ForcingGraph, IncompatGraph, PairVertex};
use crate::matrix::BinaryMatrix;

/// An odd cycle in `G_M`: a cyclic sequence of pairwise-distinct vertices of
/// odd length, consecutive ones (cyclically) adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycleCertificate {
    pub n: usize,
    pub vertices: Vec<PairVertex>,
}

impl OddCycleCertificate {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// A path in `F_M` from `(i,j)` to `(j,i)`: a chain of forcings ending in a
/// contradiction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingPathCertificate {
    pub n: usize,
    pub vertices: Vec<PairVertex>,
}

impl ForcingPathCertificate {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Why a certificate was rejected. This is a verification result, not a
/// library error.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertificateViolation {
    #[error("cycle length {0} is even")]
    EvenLength(usize),
    #[error("cycle length {0} is below 3")]
    TooShort(usize),
    #[error("vertex {position} {vertex} is out of range for {n} columns")]
    OutOfRange {
        position: usize,
        vertex: PairVertex,
        n: usize,
    },
    #[error("vertex {vertex} appears at positions {first} and {second}")]
    RepeatedVertex {
        vertex: PairVertex,
        first: usize,
        second: usize,
    },
    #[error("edge {position} ({u} - {v}) is not an incompatibility edge")]
    NotIncompatEdge {
        position: usize,
        u: PairVertex,
        v: PairVertex,
    },
    #[error("edge {position} ({u} - {v}) is not a forcing edge")]
    NotForcingEdge {
        position: usize,
        u: PairVertex,
        v: PairVertex,
    },
    #[error("endpoints {start} and {end} are not mutual reversals")]
    BadEndpoints { start: PairVertex, end: PairVertex },
    #[error("path is empty")]
    EmptyPath,
}

/// Edge rule of `G_M` checked directly against the matrix.
fn incompat_adjacent(m: &BinaryMatrix, x: PairVertex, y: PairVertex) -> bool {
    if y == x.reversed() {
        return true;
    }
    let witnessed = |a: usize, j: usize, b: usize| {
        a != b
            && (1..=m.rows()).any(|r| m.get(r, a) == 1 && m.get(r, b) == 1 && m.get(r, j) == 0)
    };
    (x.second == y.first && witnessed(x.first, x.second, y.second))
        || (y.second == x.first && witnessed(y.first, y.second, x.second))
}

/// Edge rule of `F_M` checked directly against the matrix.
fn forcing_adjacent(m: &BinaryMatrix, x: PairVertex, y: PairVertex) -> bool {
    if x == y {
        return false;
    }
    let witnessed = |a: usize, j: usize, b: usize| {
        a != b
            && (1..=m.rows()).any(|r| m.get(r, a) == 1 && m.get(r, b) == 1 && m.get(r, j) == 0)
    };
    (x.second == y.second && witnessed(x.first, x.second, y.first))
        || (x.first == y.first && witnessed(x.second, x.first, y.second))
}

/// Accepts iff the cycle is odd, in range, duplicate-free and every cyclic
/// consecutive pair satisfies edge rule 1 or 2 against `m` itself.
pub fn verify_odd_cycle(
    m: &BinaryMatrix,
    cert: &OddCycleCertificate,
) -> std::result::Result<(), CertificateViolation> {
    let len = cert.vertices.len();
    if len < 3 {
        return Err(CertificateViolation::TooShort(len));
    }
    if len.is_multiple_of(2) {
        return Err(CertificateViolation::EvenLength(len));
    }
    check_range_and_distinct(&cert.vertices, m.cols(), true)?;
    for pos in 0..len {
        let u = cert.vertices[pos];
        let v = cert.vertices[(pos + 1) % len];
        if !incompat_adjacent(m, u, v) {
            return Err(CertificateViolation::NotIncompatEdge {
                position: pos + 1,
                u,
                v,
            });
        }
    }
    Ok(())
}

/// Accepts iff the endpoints are mutual reversals and every consecutive pair
/// is a forcing edge witnessed by some row of `m`.
pub fn verify_forcing_path(
    m: &BinaryMatrix,
    cert: &ForcingPathCertificate,
) -> std::result::Result<(), CertificateViolation> {
    let verts = &cert.vertices;
    if verts.is_empty() {
        return Err(CertificateViolation::EmptyPath);
    }
    check_range_and_distinct(verts, m.cols(), false)?;
    let (start, end) = (verts[0], *verts.last().unwrap());
    if end != start.reversed() {
        return Err(CertificateViolation::BadEndpoints { start, end });
    }
    for (pos, pair) in verts.windows(2).enumerate() {
        if !forcing_adjacent(m, pair[0], pair[1]) {
            return Err(CertificateViolation::NotForcingEdge {
                position: pos + 1,
                u: pair[0],
                v: pair[1],
            });
        }
    }
    Ok(())
}

fn check_range_and_distinct(
    verts: &[PairVertex],
    n: usize,
    distinct: bool,
) -> std::result::Result<(), CertificateViolation> {
    for (pos, &v) in verts.iter().enumerate() {
        if !v.in_range(n) {
            return Err(CertificateViolation::OutOfRange {
                position: pos + 1,
                vertex: v,
                n,
            });
        }
        if distinct {
            if let Some(prev) = verts[..pos].iter().position(|&w| w == v) {
                return Err(CertificateViolation::RepeatedVertex {
                    vertex: v,
                    first: prev + 1,
                    second: pos + 1,
                });
            }
        }
    }
    Ok(())
}

/// Breadth-first search in the bipartite double cover from `source`,
/// neighbors in ascending id order. `dist[2 * v + p]` is the shortest walk
/// from `source` to `v` with parity `p`; parents allow walk extraction.
struct DoubleCoverBfs {
    dist: Vec<usize>,
    parent: Vec<usize>,
}

const UNSEEN: usize = usize::MAX;

fn bfs_from(g: &IncompatGraph, source: usize) -> DoubleCoverBfs {
    let states = g.vertex_count() * 2;
    let mut dist = vec![UNSEEN; states];
    let mut parent = vec![UNSEEN; states];
    let start = source * 2;
    dist[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        let (v, p) = (s / 2, s % 2);
        for &w in g.neighbors(v) {
            let t = w * 2 + (1 - p);
            if dist[t] == UNSEEN {
                dist[t] = dist[s] + 1;
                parent[t] = s;
                queue.push_back(t);
            }
        }
    }
    DoubleCoverBfs { dist, parent }
}

/// Shortest odd cycle of `G_M`, or `None` if the graph is bipartite.
///
/// Runs a parity-layered search from every vertex; the minimum odd closed
/// walk length equals the minimum odd cycle length, and a simple cycle is
/// extracted by splitting the walk at repeated vertices (exactly one part is
/// odd and no longer than the original). Deterministic: among the extracted
/// minimum-length cycles the lexicographically least canonical sequence wins.
pub fn shortest_odd_cycle(g: &IncompatGraph) -> Option<OddCycleCertificate> {
    let count = g.vertex_count();
    // pass 1: minimum odd closed-walk length over all sources
    let walk_len: Vec<usize> = (0..count)
        .map(|source| bfs_from(g, source).dist[source * 2 + 1])
        .collect();
    let min_len = *walk_len.iter().min()?;
    if min_len == UNSEEN {
        return None;
    }
    // pass 2: extract from the sources that attain the minimum; splitting a
    // minimum odd walk at repeats cannot shorten it, so lengths are exact
    let mut best: Option<Vec<PairVertex>> = None;
    for source in (0..count).filter(|&s| walk_len[s] == min_len) {
        let bfs = bfs_from(g, source);
        let cycle = simplify_closed_walk(extract_walk(g, &bfs, source));
        debug_assert_eq!(cycle.len(), min_len);
        let canon = canonicalize_cycle(cycle.into_iter().map(|id| g.vertex(id)).collect());
        if best.as_ref().is_none_or(|b| &canon < b) {
            best = Some(canon);
        }
    }
    best.map(|vertices| OddCycleCertificate {
        n: g.n(),
        vertices,
    })
}

/// Walk ids from (source, 0) to (source, 1), as a closed vertex sequence
/// without the duplicated endpoint.
fn extract_walk(g: &IncompatGraph, bfs: &DoubleCoverBfs, source: usize) -> Vec<usize> {
    let _ = g;
    let mut states = Vec::new();
    let mut s = source * 2 + 1;
    loop {
        states.push(s);
        if s == source * 2 {
            break;
        }
        s = bfs.parent[s];
    }
    states.reverse();
    states.pop(); // drop the repeated closing vertex
    states.into_iter().map(|s| s / 2).collect()
}

/// Reduces a closed odd walk (cyclic vertex list) to a simple cycle of the
/// same length when the walk is minimum: a repeat splits the walk into two
/// closed walks whose lengths sum to the original, so the odd part is kept.
fn simplify_closed_walk<T: PartialEq + Copy>(mut walk: Vec<T>) -> Vec<T> {
    'outer: loop {
        let len = walk.len();
        for i in 0..len {
            for j in i + 1..len {
                if walk[i] == walk[j] {
                    let inner: Vec<T> = walk[i..j].to_vec();
                    let outer: Vec<T> =
                        walk[j..].iter().chain(walk[..i].iter()).copied().collect();
                    walk = if inner.len() % 2 == 1 { inner } else { outer };
                    continue 'outer;
                }
            }
        }
        return walk;
    }
}

/// Rotates the cycle so its least vertex comes first and picks the
/// lexicographically smaller of the two directions.
fn canonicalize_cycle(cycle: Vec<PairVertex>) -> Vec<PairVertex> {
    let len = cycle.len();
    let start = (0..len).min_by_key(|&i| cycle[i]).unwrap();
    let forward: Vec<PairVertex> = (0..len).map(|i| cycle[(start + i) % len]).collect();
    let backward: Vec<PairVertex> = (0..len)
        .map(|i| cycle[(start + len - i) % len])
        .collect();
    forward.min(backward)
}

/// Shortest path (by vertex count) from `(i,j)` to `(j,i)` in `F_M`.
pub fn forcing_path(f: &ForcingGraph, i: usize, j: usize) -> Result<Option<ForcingPathCertificate>> {
    let n = f.n();
    if i == j || i < 1 || i > n || j < 1 || j > n {
        return Err(Error::InvalidParameter(format!(
            "column pair ({i},{j}) is not a valid ordered pair for n = {n}"
        )));
    }
    let source = f.id(PairVertex::new(i, j));
    let target = f.id(PairVertex::new(j, i));
    let mut parent = vec![UNSEEN; f.vertex_count()];
    let mut seen = vec![false; f.vertex_count()];
    seen[source] = true;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        if u == target {
            let mut path = Vec::new();
            let mut v = target;
            loop {
                path.push(f.vertex(v));
                if v == source {
                    break;
                }
                v = parent[v];
            }
            path.reverse();
            return Ok(Some(ForcingPathCertificate {
                n,
                vertices: path,
            }));
        }
        for &w in f.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    Ok(None)
}

fn check_path_shape(p: &ForcingPathCertificate) -> Result<()> {
    if p.vertices.len() < 2 {
        return Err(Error::InvalidCertificate(format!(
            "forcing path needs at least 2 vertices, got {}",
            p.vertices.len()
        )));
    }
    for (pos, v) in p.vertices.iter().enumerate() {
        if !v.in_range(p.n) {
            return Err(Error::InvalidCertificate(format!(
                "vertex {} {v} out of range for n = {}",
                pos + 1,
                p.n
            )));
        }
    }
    let (start, end) = (p.vertices[0], *p.vertices.last().unwrap());
    if end != start.reversed() {
        return Err(Error::InvalidCertificate(format!(
            "endpoints {start} and {end} are not mutual reversals"
        )));
    }
    Ok(())
}

/// The path-to-cycle direction of the certificate equivalence: reverse every
/// even-position vertex of the path. With m path vertices the resulting odd
/// closed walk has length m-1 (m even; the final vertex closes onto the
/// first) or m (m odd; a type-1 edge closes the cycle). Should the walk
/// revisit a vertex, the odd part of the split is kept, so the returned
/// cycle is always simple (and then shorter than the law's value; this can
/// happen for some shortest paths of the larger patterns).
pub fn path_to_cycle(p: &ForcingPathCertificate) -> Result<OddCycleCertificate> {
    check_path_shape(p)?;
    let m = p.vertices.len();
    let mut vertices = Vec::with_capacity(m);
    for (idx, &v) in p.vertices.iter().enumerate() {
        let position = idx + 1;
        let u = if position % 2 == 0 { v.reversed() } else { v };
        vertices.push(u);
    }
    if m.is_multiple_of(2) {
        // last vertex equals the first; drop it
        debug_assert_eq!(vertices.last(), vertices.first());
        vertices.pop();
    }
    Ok(OddCycleCertificate {
        n: p.n,
        vertices: simplify_closed_walk(vertices),
    })
}

/// The cycle-to-path direction: starting from the least vertex, reverse every
/// even-position vertex and close with the reversal of the start; type-1
/// cycle edges collapse to repeated vertices and are contracted away. The
/// result has at most m+1 vertices for a length-m cycle.
pub fn cycle_to_path(c: &OddCycleCertificate) -> Result<ForcingPathCertificate> {
    let m = c.vertices.len();
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::InvalidCertificate(format!(
            "odd cycle must have odd length >= 3, got {m}"
        )));
    }
    for (pos, v) in c.vertices.iter().enumerate() {
        if !v.in_range(c.n) {
            return Err(Error::InvalidCertificate(format!(
                "vertex {} {v} out of range for n = {}",
                pos + 1,
                c.n
            )));
        }
    }
    let start = (0..m).min_by_key(|&i| c.vertices[i]).unwrap();
    let rotated: Vec<PairVertex> = (0..m).map(|i| c.vertices[(start + i) % m]).collect();
    let mut path = Vec::with_capacity(m + 1);
    for (idx, &v) in rotated.iter().enumerate() {
        let position = idx + 1;
        path.push(if position % 2 == 0 { v.reversed() } else { v });
    }
    path.push(rotated[0].reversed());
    path.dedup();
    Ok(ForcingPathCertificate {
        n: c.n,
        vertices: path,
    })
}

/// A certificate read from the certificate file format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    OddCycle(OddCycleCertificate),
    ForcingPath(ForcingPathCertificate),
}

const CERT_MAGIC: &str = "c1p-cert 1";

/// Serializes to the certificate file format: "c1p-cert 1", then
/// "odd-cycle L" or "forcing-path L", then L lines "i j".
pub fn serialize_certificate(cert: &Certificate) -> String {
    let (tag, verts) = match cert {
        Certificate::OddCycle(c) => ("odd-cycle", &c.vertices),
        Certificate::ForcingPath(p) => ("forcing-path", &p.vertices),
    };
    let mut out = format!("{CERT_MAGIC}\n{tag} {}\n", verts.len());
    for v in verts {
        out.push_str(&format!("{} {}\n", v.first, v.second));
    }
    out
}

/// Parses the certificate file format; `n` is the column count of the matrix
/// the certificate refers to.
pub fn parse_certificate(text: &str, n: usize) -> Result<Certificate> {
    let mut lines = text.lines();
    let magic = lines.next().unwrap_or_default();
    if magic.trim_end() != CERT_MAGIC {
        return Err(Error::Parse {
            line: 1,
            msg: format!("expected {CERT_MAGIC:?} header, got {magic:?}"),
        });
    }
    let header = lines.next().ok_or_else(|| Error::Parse {
        line: 2,
        msg: "missing certificate kind line".into(),
    })?;
    let (kind, count_str) = header.split_whitespace().collect_tuple().ok_or_else(|| {
        Error::Parse {
            line: 2,
            msg: format!("expected \"odd-cycle L\" or \"forcing-path L\", got {header:?}"),
        }
    })?;
    let count: usize = count_str.parse().map_err(|_| Error::Parse {
        line: 2,
        msg: format!("bad vertex count {count_str:?}"),
    })?;
    let mut vertices = Vec::with_capacity(count);
    for idx in 0..count {
        let line_no = idx + 3;
        let line = lines.next().ok_or_else(|| Error::Parse {
            line: line_no,
            msg: format!("missing vertex {} of {count}", idx + 1),
        })?;
        let (i, j) = line
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect_tuple()
            .and_then(|(a, b)| Some((a.ok()?, b.ok()?)))
            .ok_or_else(|| Error::Parse {
                line: line_no,
                msg: format!("expected \"i j\", got {line:?}"),
            })?;
        if i == j {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("vertex ({i},{j}) has equal coordinates"),
            });
        }
        vertices.push(PairVertex { first: i, second: j });
    }
    match kind {
        "odd-cycle" => Ok(Certificate::OddCycle(OddCycleCertificate { n, vertices })),
        "forcing-path" => Ok(Certificate::ForcingPath(ForcingPathCertificate {
            n,
            vertices,
        })),
        other => Err(Error::Parse {
            line: 2,
            msg: format!("unknown certificate kind {other:?}"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_forcing_graph, build_incompatibility_graph};
    use crate::pattern::{all_kinds, tucker_pattern, TuckerKind};

    fn pv(i: usize, j: usize) -> PairVertex {
        PairVertex::new(i, j)
    }

    fn soc_len(kind: TuckerKind) -> usize {
        let m = tucker_pattern(kind).unwrap();
        let g = build_incompatibility_graph(&m);
        let c = shortest_odd_cycle(&g).expect("pattern must be non-bipartite");
        verify_odd_cycle(&m, &c).expect("certificate must verify");
        c.len()
    }

    #[test]
    fn shortest_cycle_lengths_of_the_paper() {
        assert_eq!(soc_len(TuckerKind::III { k: 4 }), 7);
        assert_eq!(soc_len(TuckerKind::IV), 5);
        assert_eq!(soc_len(TuckerKind::V), 9);
        assert_eq!(soc_len(TuckerKind::I { k: 5 }), 5);
        assert_eq!(soc_len(TuckerKind::I { k: 6 }), 7);
    }

    #[test]
    fn c1p_matrix_has_no_odd_cycle() {
        let m = BinaryMatrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        let g = build_incompatibility_graph(&m);
        assert!(shortest_odd_cycle(&g).is_none());
    }

    #[test]
    fn shortest_cycle_is_deterministic() {
        let m = tucker_pattern(TuckerKind::III { k: 5 }).unwrap();
        let g = build_incompatibility_graph(&m);
        let a = shortest_odd_cycle(&g).unwrap();
        let b = shortest_odd_cycle(&g).unwrap();
        assert_eq!(a, b);
        // canonical form: least vertex first
        assert_eq!(a.vertices.iter().min(), a.vertices.first());
    }

    #[test]
    fn forcing_path_vertex_counts_of_the_paper() {
        // T_I(k): (c1, c_{k-1}) to (c_{k-1}, c1) has k+1 vertices
        for k in 3..=8 {
            let m = tucker_pattern(TuckerKind::I { k }).unwrap();
            let f = build_forcing_graph(&m);
            let p = forcing_path(&f, 1, k - 1).unwrap().unwrap();
            assert_eq!(p.len(), k + 1, "T_I({k})");
            verify_forcing_path(&m, &p).unwrap();
        }
        // T_III(k): (c1, ck) to (ck, c1) has k+3 vertices
        for k in 4..=8 {
            let m = tucker_pattern(TuckerKind::III { k }).unwrap();
            let f = build_forcing_graph(&m);
            let p = forcing_path(&f, 1, k).unwrap().unwrap();
            assert_eq!(p.len(), k + 3, "T_III({k})");
            verify_forcing_path(&m, &p).unwrap();
        }
        // T_V: (c2, c3) to (c3, c2) has 10 vertices
        let m = tucker_pattern(TuckerKind::V).unwrap();
        let f = build_forcing_graph(&m);
        let p = forcing_path(&f, 2, 3).unwrap().unwrap();
        assert_eq!(p.len(), 10);
        verify_forcing_path(&m, &p).unwrap();
    }

    #[test]
    fn forcing_path_rejects_bad_endpoints() {
        let m = tucker_pattern(TuckerKind::I { k: 4 }).unwrap();
        let f = build_forcing_graph(&m);
        assert!(forcing_path(&f, 2, 2).is_err());
        assert!(forcing_path(&f, 0, 1).is_err());
        assert!(forcing_path(&f, 1, 9).is_err());
    }

    #[test]
    fn forcing_path_absent_when_disconnected() {
        // single row [1 1]: F has no edges at all
        let m = BinaryMatrix::from_rows(&[vec![1, 1]]).unwrap();
        let f = build_forcing_graph(&m);
        assert!(forcing_path(&f, 1, 2).unwrap().is_none());
    }

    #[test]
    fn path_to_cycle_length_law() {
        // T_IV: path with 6 vertices (even) -> cycle of length 5
        let m = tucker_pattern(TuckerKind::IV).unwrap();
        let f = build_forcing_graph(&m);
        let p = forcing_path(&f, 1, 3).unwrap().unwrap();
        assert_eq!(p.len(), 6);
        let c = path_to_cycle(&p).unwrap();
        assert_eq!(c.len(), 5);
        verify_odd_cycle(&m, &c).unwrap();

        // T_III(4): path with 7 vertices (odd) -> cycle of length 7
        let m = tucker_pattern(TuckerKind::III { k: 4 }).unwrap();
        let f = build_forcing_graph(&m);
        // the shortest (1,4)->(4,1) path has k+3 = 7 vertices
        let p = forcing_path(&f, 1, 4).unwrap().unwrap();
        assert_eq!(p.len(), 7);
        let c = path_to_cycle(&p).unwrap();
        assert_eq!(c.len(), 7);
        verify_odd_cycle(&m, &c).unwrap();

        // T_V: path with 10 vertices -> cycle of length 9
        let m = tucker_pattern(TuckerKind::V).unwrap();
        let f = build_forcing_graph(&m);
        let p = forcing_path(&f, 2, 3).unwrap().unwrap();
        let c = path_to_cycle(&p).unwrap();
        assert_eq!(c.len(), 9);
        verify_odd_cycle(&m, &c).unwrap();
    }

    #[test]
    fn cycle_to_path_on_t_i_3() {
        let m = tucker_pattern(TuckerKind::I { k: 3 }).unwrap();
        let cycle = OddCycleCertificate {
            n: 3,
            vertices: vec![pv(1, 3), pv(3, 2), pv(2, 1)],
        };
        verify_odd_cycle(&m, &cycle).unwrap();
        let p = cycle_to_path(&cycle).unwrap();
        assert!(p.len() <= 4);
        verify_forcing_path(&m, &p).unwrap();
    }

    #[test]
    fn round_trip_over_patterns() {
        for kind in all_kinds(6) {
            let m = tucker_pattern(kind).unwrap();
            let g = build_incompatibility_graph(&m);
            let c = shortest_odd_cycle(&g).unwrap();
            let p = cycle_to_path(&c).unwrap();
            assert!(p.len() <= c.len() + 1, "{kind}");
            verify_forcing_path(&m, &p).unwrap();
            let c2 = path_to_cycle(&p).unwrap();
            verify_odd_cycle(&m, &c2).unwrap();
            assert!(c2.len() <= c.len(), "{kind}");
        }
    }

    #[test]
    fn lemma_3_3_path_of_t_ii_5_verifies() {
        let m = tucker_pattern(TuckerKind::II { k: 5 }).unwrap();
        let p = ForcingPathCertificate {
            n: 5,
            vertices: vec![pv(1, 5), pv(2, 5), pv(3, 5), pv(4, 5), pv(4, 1), pv(5, 1)],
        };
        verify_forcing_path(&m, &p).unwrap();
    }

    #[test]
    fn verifier_rejects_perturbed_cycle() {
        let m = tucker_pattern(TuckerKind::III { k: 4 }).unwrap();
        let g = build_incompatibility_graph(&m);
        let mut c = shortest_odd_cycle(&g).unwrap();
        c.vertices[2] = pv(1, 2);
        match verify_odd_cycle(&m, &c) {
            Err(CertificateViolation::NotIncompatEdge { .. })
            | Err(CertificateViolation::RepeatedVertex { .. }) => {}
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn verifier_rejects_even_cycle() {
        let m = tucker_pattern(TuckerKind::III { k: 4 }).unwrap();
        // four consecutive vertices of the 12-cycle closed by the chord
        // (the type-1 edge between reversals)
        let g = build_incompatibility_graph(&m);
        // find any 4-cycle: u - v - u' ... instead assert parity is reported
        let c = OddCycleCertificate {
            n: 4,
            vertices: vec![pv(1, 2), pv(2, 1), pv(1, 2), pv(2, 1)],
        };
        assert!(matches!(
            verify_odd_cycle(&m, &c),
            Err(CertificateViolation::EvenLength(4))
        ));
        let _ = g;
    }

    #[test]
    fn verifier_rejects_bad_path_endpoints() {
        let m = tucker_pattern(TuckerKind::I { k: 5 }).unwrap();
        let p = ForcingPathCertificate {
            n: 5,
            vertices: vec![pv(1, 4), pv(4, 2)],
        };
        assert!(matches!(
            verify_forcing_path(&m, &p),
            Err(CertificateViolation::BadEndpoints { .. })
        ));
    }

    #[test]
    fn certificate_file_round_trip() {
        let m = tucker_pattern(TuckerKind::IV).unwrap();
        let g = build_incompatibility_graph(&m);
        let c = shortest_odd_cycle(&g).unwrap();
        let text = serialize_certificate(&Certificate::OddCycle(c.clone()));
        assert!(text.starts_with("c1p-cert 1\nodd-cycle 5\n"));
        match parse_certificate(&text, 5).unwrap() {
            Certificate::OddCycle(parsed) => assert_eq!(parsed, c),
            _ => panic!("wrong kind"),
        }
        assert!(parse_certificate("bogus", 5).is_err());
        assert!(parse_certificate("c1p-cert 1\nodd-cycle 2\n1 2\n", 5).is_err());
        assert!(parse_certificate("c1p-cert 1\nodd-cycle 1\n2 2\n", 5).is_err());
    }
}
