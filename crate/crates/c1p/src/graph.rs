//! The incompatibility graph `G_M` and forcing graph `F_M` of a binary
//! matrix, with per-edge evidence, the V1/V2 split, critical edges,
//! bipartiteness testing and DOT export.
//!
//! Both graphs live on the n(n-1) ordered column pairs. The vertex `(i,j)`
//! reads "column i placed before column j". Vertices are enumerated row-major
//! (i ascending, then j ascending, skipping i = j); all deterministic output
//! follows that order.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;

use crate::matrix::BinaryMatrix;

/// An ordered column pair, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairVertex {
    pub first: usize,
    pub second: usize,
}

impl PairVertex {
    pub fn new(first: usize, second: usize) -> Self {
        debug_assert_ne!(first, second);
        Self { first, second }
    }

    pub fn reversed(&self) -> Self {
        Self {
            first: self.second,
            second: self.first,
        }
    }

    /// True iff the vertex lies in V1 = {(i,j) | i < j}.
    pub fn in_v1(&self) -> bool {
        self.first < self.second
    }

    pub fn in_range(&self, n: usize) -> bool {
        self.first >= 1
            && self.first <= n
            && self.second >= 1
            && self.second <= n
            && self.first != self.second
    }
}

impl fmt::Display for PairVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

/// Why an edge exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeEvidence {
    /// Rule 1: the endpoints are mutual reversals.
    Type1,
    /// Rule 2: `row` has 1s at columns `a` and `b` and a 0 at column `j`
    /// (triple stored with a < b).
    Type2 { row: usize, a: usize, j: usize, b: usize },
}

#[derive(Clone, Copy)]
struct PairIndexer {
    n: usize,
}

impl PairIndexer {
    fn count(&self) -> usize {
        self.n * (self.n - 1)
    }

    fn id(&self, v: PairVertex) -> usize {
        let skip = usize::from(v.second > v.first);
        (v.first - 1) * (self.n - 1) + (v.second - 1) - skip
    }

    fn vertex(&self, id: usize) -> PairVertex {
        let first = id / (self.n - 1) + 1;
        let mut second = id % (self.n - 1) + 1;
        if second >= first {
            second += 1;
        }
        PairVertex { first, second }
    }
}

/// Shared guts of both graphs: a simple undirected graph on the pair
/// vertices with evidence lists, kept both as an edge map (membership,
/// deterministic iteration) and adjacency lists (traversal).
#[derive(Clone)]
struct PairGraph {
    indexer: PairIndexer,
    adj: Vec<Vec<usize>>,
    edges: BTreeMap<(usize, usize), Vec<EdgeEvidence>>,
}

impl PairGraph {
    fn new(n: usize) -> Self {
        let indexer = PairIndexer { n };
        Self {
            indexer,
            adj: vec![Vec::new(); indexer.count()],
            edges: BTreeMap::new(),
        }
    }

    fn add_edge(&mut self, u: PairVertex, v: PairVertex, ev: EdgeEvidence) {
        let (a, b) = (self.indexer.id(u), self.indexer.id(v));
        debug_assert_ne!(a, b);
        let key = (a.min(b), a.max(b));
        self.edges.entry(key).or_default().push(ev);
    }

    fn finish(&mut self) {
        for &(a, b) in self.edges.keys() {
            self.adj[a].push(b);
            self.adj[b].push(a);
        }
        for list in &mut self.adj {
            list.sort_unstable();
            list.dedup();
        }
    }
}

macro_rules! graph_common {
    () => {
        /// Column count of the source matrix.
        pub fn n(&self) -> usize {
            self.inner.indexer.n
        }

        /// Always n(n-1).
        pub fn vertex_count(&self) -> usize {
            self.inner.indexer.count()
        }

        pub fn edge_count(&self) -> usize {
            self.inner.edges.len()
        }

        pub fn id(&self, v: PairVertex) -> usize {
            self.inner.indexer.id(v)
        }

        pub fn vertex(&self, id: usize) -> PairVertex {
            self.inner.indexer.vertex(id)
        }

        /// All vertices in the fixed enumeration order.
        pub fn vertices(&self) -> impl Iterator<Item = PairVertex> + '_ {
            (0..self.vertex_count()).map(move |id| self.vertex(id))
        }

        /// Neighbor ids in ascending order.
        pub fn neighbors(&self, id: usize) -> &[usize] {
            &self.inner.adj[id]
        }

        pub fn has_edge(&self, u: PairVertex, v: PairVertex) -> bool {
            self.evidence(u, v).is_some()
        }

        pub fn evidence(&self, u: PairVertex, v: PairVertex) -> Option<&[EdgeEvidence]> {
            let (a, b) = (self.id(u), self.id(v));
            self.inner
                .edges
                .get(&(a.min(b), a.max(b)))
                .map(|e| e.as_slice())
        }

        /// Edges as vertex pairs (lower enumeration id first), sorted.
        pub fn edges(&self) -> impl Iterator<Item = (PairVertex, PairVertex)> + '_ {
            self.inner
                .edges
                .keys()
                .map(move |&(a, b)| (self.vertex(a), self.vertex(b)))
        }
    };
}

/// The incompatibility graph `G_M`.
#[derive(Clone)]
pub struct IncompatGraph {
    inner: PairGraph,
}

/// The forcing graph `F_M`.
#[derive(Clone)]
pub struct ForcingGraph {
    inner: PairGraph,
}

impl IncompatGraph {
    graph_common!();
}

impl ForcingGraph {
    graph_common!();

    /// True iff the edge joins V1 and V2.
    pub fn is_crossing(&self, u: PairVertex, v: PairVertex) -> bool {
        u.in_v1() != v.in_v1()
    }

    /// The critical edges, i.e. exactly the edges crossing between V1 and V2,
    /// in edge enumeration order.
    pub fn critical_edges(&self) -> Vec<(PairVertex, PairVertex)> {
        self.edges().filter(|&(u, v)| self.is_crossing(u, v)).collect()
    }
}

/// For each row, the 1-columns and 0-columns.
fn row_profiles(m: &BinaryMatrix) -> Vec<(Vec<usize>, Vec<usize>)> {
    (1..=m.rows())
        .map(|r| {
            let mut ones = Vec::new();
            let mut zeros = Vec::new();
            for c in 1..=m.cols() {
                if m.get(r, c) == 1 {
                    ones.push(c);
                } else {
                    zeros.push(c);
                }
            }
            (ones, zeros)
        })
        .collect()
}

/// Builds `G_M`: a type-1 edge {(i,j),(j,i)} for every unordered column pair,
/// plus the two edges {(a,j),(j,b)} and {(b,j),(j,a)} for every row triple
/// with 1s at a, b and 0 at j.
pub fn build_incompatibility_graph(m: &BinaryMatrix) -> IncompatGraph {
    let n = m.cols();
    let mut g = PairGraph::new(n);
    for i in 1..=n {
        for j in i + 1..=n {
            g.add_edge(PairVertex::new(i, j), PairVertex::new(j, i), EdgeEvidence::Type1);
        }
    }
    for (ri, (ones, zeros)) in row_profiles(m).iter().enumerate() {
        let row = ri + 1;
        for (ai, &a) in ones.iter().enumerate() {
            for &b in &ones[ai + 1..] {
                for &j in zeros {
                    let ev = EdgeEvidence::Type2 { row, a, j, b };
                    g.add_edge(PairVertex::new(a, j), PairVertex::new(j, b), ev);
                    g.add_edge(PairVertex::new(b, j), PairVertex::new(j, a), ev);
                }
            }
        }
    }
    g.finish();
    IncompatGraph { inner: g }
}

/// Builds `F_M`: for every row triple as above, the edges {(a,j),(b,j)} and
/// {(j,a),(j,b)}. F_M has no type-1 edges.
pub fn build_forcing_graph(m: &BinaryMatrix) -> ForcingGraph {
    let n = m.cols();
    let mut g = PairGraph::new(n);
    for (ri, (ones, zeros)) in row_profiles(m).iter().enumerate() {
        let row = ri + 1;
        for (ai, &a) in ones.iter().enumerate() {
            for &b in &ones[ai + 1..] {
                for &j in zeros {
                    let ev = EdgeEvidence::Type2 { row, a, j, b };
                    g.add_edge(PairVertex::new(a, j), PairVertex::new(b, j), ev);
                    g.add_edge(PairVertex::new(j, a), PairVertex::new(j, b), ev);
                }
            }
        }
    }
    g.finish();
    ForcingGraph { inner: g }
}

/// Outcome of the bipartiteness test.
pub enum Bipartiteness {
    /// A proper 2-coloring, one color per vertex id.
    TwoColoring(Vec<u8>),
    /// A closed walk of odd length (first vertex repeated at the end),
    /// disproving bipartiteness. Not necessarily shortest or simple.
    OddClosedWalk(Vec<PairVertex>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::TwoColoring(_))
    }
}

/// Breadth-first 2-coloring per component; on a conflict returns the odd
/// closed walk through the tree paths of the conflicting edge.
pub fn is_bipartite(g: &IncompatGraph) -> Bipartiteness {
    let count = g.vertex_count();
    let mut color = vec![u8::MAX; count];
    let mut parent = vec![usize::MAX; count];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..count {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return Bipartiteness::OddClosedWalk(odd_walk(g, &parent, u, w));
                }
            }
        }
    }
    Bipartiteness::TwoColoring(color)
}

fn odd_walk(g: &IncompatGraph, parent: &[usize], u: usize, w: usize) -> Vec<PairVertex> {
    let path_to_root = |mut v: usize| {
        let mut p = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            p.push(v);
        }
        p
    };
    // u -> root -> w -> u: depths of u and w have equal parity, so the walk
    // length depth(u) + depth(w) + 1 is odd
    let up = path_to_root(u);
    let wp = path_to_root(w);
    let mut walk: Vec<usize> = up;
    walk.extend(wp.iter().rev().skip(1));
    walk.push(u);
    walk.into_iter().map(|id| g.vertex(id)).collect()
}

fn dot_label(v: PairVertex) -> String {
    format!("\"{},{}\"", v.first, v.second)
}

/// DOT text of `G_M`, deterministic given the vertex enumeration order.
pub fn incompat_to_dot(g: &IncompatGraph) -> String {
    let mut out = String::from("graph incompatibility {\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {};", dot_label(v));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", dot_label(u), dot_label(v));
    }
    out.push_str("}\n");
    out
}

/// DOT text of `F_M`; critical edges are styled bold.
pub fn forcing_to_dot(f: &ForcingGraph) -> String {
    let mut out = String::from("graph forcing {\n");
    for v in f.vertices() {
        let _ = writeln!(out, "  {};", dot_label(v));
    }
    for (u, v) in f.edges() {
        let style = if f.is_crossing(u, v) { " [style=bold]" } else { "" };
        let _ = writeln!(out, "  {} -- {}{};", dot_label(u), dot_label(v), style);
    }
    out.push_str("}\n");
    out
}
