//! Simple undirected graphs with the predicates the algebra layer consumes:
//! chordality via simplicial-vertex elimination, minimal vertex covers via
//! maximal independent sets, complements, and induced subgraphs.
//!
//! Vertices are dense 1-based labels `1..=n`. Everything is immutable after
//! construction and all operations are pure.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `1..=n`, `n <= 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Adjacency bitmask per vertex; bit `v-1` of `adj[u-1]` means edge `{u, v}`.
    adj: Vec<u64>,
}

fn bit(v: usize) -> u64 {
    1u64 << (v - 1)
}

/// Iterates the 1-based vertex labels stored in a bitmask.
pub(crate) fn mask_vertices(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize + 1;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub(crate) fn vertices_mask(vs: &[usize]) -> u64 {
    vs.iter()
        .filter(|&&v| (1..=64).contains(&v))
        .fold(0u64, |m, &v| m | bit(v))
}

impl Graph {
    /// Builds a graph from an edge list. Rejects loops and out-of-range
    /// endpoints; duplicate edges collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > 64 {
            return Err(Error::TooLarge(n));
        }
        let mut adj = vec![0u64; n];
        for &(i, j) in edges {
            if i == j {
                return Err(Error::LoopEdge { i, j });
            }
            for v in [i, j] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            adj[i - 1] |= bit(j);
            adj[j - 1] |= bit(i);
        }
        Ok(Graph { n, adj })
    }

    /// The graph on `n` vertices with no edges. `n = 0` is allowed.
    pub fn edgeless(n: usize) -> Result<Self> {
        Graph::new(n, &[])
    }

    /// The complete graph on `n >= 1` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::VertexCount { min: 1, got: n });
        }
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                edges.push((i, j));
            }
        }
        Graph::new(n, &edges)
    }

    /// The cycle `1-2-...-n-1` for `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::VertexCount { min: 3, got: n });
        }
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((1, n));
        Graph::new(n, &edges)
    }

    /// The path `1-2-...-n` for `n >= 1`.
    pub fn path(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::VertexCount { min: 1, got: n });
        }
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && i <= self.n && j <= self.n && i != j && self.adj[i - 1] & bit(j) != 0
    }

    /// Edges as ordered pairs `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in mask_vertices(self.adj[i - 1]) {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&m| m == 0)
    }

    /// True when every pair of (distinct) vertices is an edge. `n <= 1` counts
    /// as complete.
    pub fn is_complete(&self) -> bool {
        (1..=self.n).all(|v| self.adj[v - 1] == self.full_mask() & !bit(v))
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v - 1].count_ones() as usize)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    /// Neighbors of `x`, ascending. Never contains `x`.
    pub fn neighbors(&self, x: usize) -> Result<Vec<usize>> {
        self.check_vertex(x)?;
        Ok(mask_vertices(self.adj[x - 1]).collect())
    }

    /// Same vertex set, complemented edge set.
    pub fn complement(&self) -> Graph {
        let full = self.full_mask();
        let adj = (1..=self.n)
            .map(|v| full & !self.adj[v - 1] & !bit(v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Induced subgraph on the vertex set `s`, relabeled canonically by
    /// increasing original index. Returns the graph together with the label
    /// map: entry `k` is the original label of new vertex `k + 1`.
    pub fn induced_subgraph(&self, s: &[usize]) -> (Graph, Vec<usize>) {
        let mut keep: Vec<usize> = s
            .iter()
            .copied()
            .filter(|&v| v >= 1 && v <= self.n)
            .collect();
        keep.sort_unstable();
        keep.dedup();
        let mut g = Graph {
            n: keep.len(),
            adj: vec![0; keep.len()],
        };
        for (a, &va) in keep.iter().enumerate() {
            for (b, &vb) in keep.iter().enumerate().skip(a + 1) {
                if self.has_edge(va, vb) {
                    g.adj[a] |= bit(b + 1);
                    g.adj[b] |= bit(a + 1);
                }
            }
        }
        (g, keep)
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.adj[v - 1] == 0).collect()
    }

    /// True when the vertices of `mask` are pairwise adjacent.
    pub(crate) fn is_clique_mask(&self, mask: u64) -> bool {
        mask_vertices(mask).all(|v| mask & !bit(v) & !self.adj[v - 1] == 0)
    }

    pub fn is_clique(&self, s: &[usize]) -> bool {
        if s.iter().any(|&v| v == 0 || v > self.n) {
            return false;
        }
        self.is_clique_mask(vertices_mask(s))
    }

    /// Smallest vertex outside `clique` whose neighborhood induces a complete
    /// subgraph, if any. When the graph is chordal and `clique` is a proper
    /// clique, such a vertex always exists.
    pub fn find_simplicial_vertex(&self, clique: &[usize]) -> Option<usize> {
        let excluded = vertices_mask(clique);
        (1..=self.n)
            .find(|&x| excluded & bit(x) == 0 && self.is_clique_mask(self.adj[x - 1]))
    }

    /// Deletes a vertex with clique neighborhood (smallest first) until the
    /// graph empties; the deletion order certifies chordality. `None` when the
    /// graph is not chordal.
    pub fn elimination_order(&self) -> Option<Vec<usize>> {
        let mut remaining = self.full_mask();
        let mut order = Vec::with_capacity(self.n);
        while remaining != 0 {
            let v = mask_vertices(remaining)
                .find(|&v| self.is_clique_mask(self.adj[v - 1] & remaining))?;
            remaining &= !bit(v);
            order.push(v);
        }
        Some(order)
    }

    pub fn is_chordal(&self) -> bool {
        self.elimination_order().is_some()
    }

    /// True when the graph has no cycles.
    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.component_count() == self.n
    }

    fn component_count(&self) -> usize {
        let mut seen = 0u64;
        let mut count = 0;
        for v in 1..=self.n {
            if seen & bit(v) != 0 {
                continue;
            }
            count += 1;
            let mut stack = vec![v];
            seen |= bit(v);
            while let Some(u) = stack.pop() {
                for w in mask_vertices(self.adj[u - 1] & !seen) {
                    seen |= bit(w);
                    stack.push(w);
                }
            }
        }
        count
    }

    pub fn is_vertex_cover(&self, s: &[usize]) -> bool {
        let mask = vertices_mask(s);
        self.is_vertex_cover_mask(mask)
    }

    pub(crate) fn is_vertex_cover_mask(&self, mask: u64) -> bool {
        // every vertex outside the cover has all neighbors inside it
        (1..=self.n).all(|v| mask & bit(v) != 0 || self.adj[v - 1] & !mask == 0)
    }

    /// All maximal independent sets, as masks, via Bron-Kerbosch with pivoting
    /// on the complement adjacency.
    pub(crate) fn maximal_independent_sets(&self, universe: u64) -> Vec<u64> {
        // non-adjacency within the universe
        let non_adj: Vec<u64> = (1..=self.n)
            .map(|v| universe & !self.adj[v - 1] & !bit(v))
            .collect();
        let mut out = Vec::new();
        fn expand(non_adj: &[u64], r: u64, p: u64, x: u64, out: &mut Vec<u64>) {
            if p == 0 && x == 0 {
                out.push(r);
                return;
            }
            let pivot = mask_vertices(p | x)
                .max_by_key(|&u| (non_adj[u - 1] & p).count_ones())
                .unwrap();
            let mut candidates = p & !non_adj[pivot - 1];
            let mut p = p;
            let mut x = x;
            while candidates != 0 {
                let v = candidates.trailing_zeros() as usize + 1;
                let vb = 1u64 << (v - 1);
                candidates &= !vb;
                expand(non_adj, r | vb, p & non_adj[v - 1], x & non_adj[v - 1], out);
                p &= !vb;
                x |= vb;
            }
        }
        expand(&non_adj, 0, universe, 0, &mut out);
        out
    }

    pub(crate) fn minimal_cover_masks(&self) -> Vec<u64> {
        let non_isolated = (1..=self.n)
            .filter(|&v| self.adj[v - 1] != 0)
            .fold(0u64, |m, v| m | bit(v));
        let mut covers: Vec<u64> = self
            .maximal_independent_sets(non_isolated)
            .into_iter()
            .map(|mis| non_isolated & !mis)
            .collect();
        covers.sort_unstable_by_key(|&c| (c.count_ones(), seq_lex_key(c)));
        covers.dedup();
        covers
    }

    /// All inclusion-minimal vertex covers, none containing an isolated
    /// vertex, ordered by size then lexicographically.
    pub fn minimal_vertex_covers(&self) -> Vec<Vec<usize>> {
        self.minimal_cover_masks()
            .into_iter()
            .map(|m| mask_vertices(m).collect())
            .collect()
    }

    /// Parses the edge-list text format: first non-comment line is `n`, then
    /// one `i j` pair per line. Lines starting with `#` are ignored.
    pub fn from_edge_list_text(text: &str) -> Result<Graph> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim_end();
            let trimmed = line.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let col_of = |tok: &str| raw.find(tok).map(|c| c + 1).unwrap_or(1);
            let mut tokens = trimmed.split_whitespace();
            match n {
                None => {
                    let tok = tokens.next().unwrap();
                    let value: usize = tok.parse().map_err(|_| Error::Parse {
                        line: line_no,
                        col: col_of(tok),
                        msg: format!("expected vertex count, got `{tok}`"),
                    })?;
                    if let Some(extra) = tokens.next() {
                        return Err(Error::Parse {
                            line: line_no,
                            col: col_of(extra),
                            msg: format!("unexpected token `{extra}` after vertex count"),
                        });
                    }
                    n = Some(value);
                }
                Some(count) => {
                    let mut pair = [0usize; 2];
                    for slot in &mut pair {
                        let tok = tokens.next().ok_or(Error::Parse {
                            line: line_no,
                            col: line.len() + 1,
                            msg: "expected two endpoints".into(),
                        })?;
                        *slot = tok.parse().map_err(|_| Error::Parse {
                            line: line_no,
                            col: col_of(tok),
                            msg: format!("expected vertex label, got `{tok}`"),
                        })?;
                        if *slot == 0 || *slot > count {
                            return Err(Error::Parse {
                                line: line_no,
                                col: col_of(tok),
                                msg: format!("vertex {slot} out of range 1..={count}"),
                            });
                        }
                    }
                    if let Some(extra) = tokens.next() {
                        return Err(Error::Parse {
                            line: line_no,
                            col: col_of(extra),
                            msg: format!("unexpected token `{extra}`"),
                        });
                    }
                    if pair[0] == pair[1] {
                        return Err(Error::Parse {
                            line: line_no,
                            col: 1,
                            msg: format!("loop edge ({}, {})", pair[0], pair[1]),
                        });
                    }
                    edges.push((pair[0], pair[1]));
                }
            }
        }
        let n = n.ok_or(Error::Parse {
            line: text.lines().count().max(1),
            col: 1,
            msg: "missing vertex count line".into(),
        })?;
        Graph::new(n, &edges)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "edges": self.edges(),
        })
    }
}

/// Key ordering masks like their sorted index sequences: `{1,3} < {1,4} < {2,3}`.
pub(crate) fn seq_lex_key(mask: u64) -> u64 {
    !mask.reverse_bits()
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.n)?;
        for (i, j) in self.edges() {
            write!(f, "\n{i} {j}")?;
        }
        Ok(())
    }
}

/// Deduplicates a list of graphs up to isomorphism, used by tests and the
/// survey command. Canonical form is the minimum edge-set key over all vertex
/// relabelings that sort degrees in nonincreasing order.
pub fn canonical_key(g: &Graph) -> u64 {
    let n = g.n();
    if n < 2 {
        return 0;
    }
    let mut verts: Vec<usize> = (1..=n).collect();
    verts.sort_by_key(|&v| std::cmp::Reverse(g.degree(v).unwrap()));
    let groups: Vec<Vec<usize>> = {
        let mut gs: Vec<Vec<usize>> = Vec::new();
        for &v in &verts {
            match gs.last_mut() {
                Some(last) if g.degree(*last.last().unwrap()).unwrap() == g.degree(v).unwrap() => {
                    last.push(v)
                }
                _ => gs.push(vec![v]),
            }
        }
        gs
    };
    let mut best = u64::MAX;
    let mut assignment = Vec::with_capacity(n);
    fn go(g: &Graph, groups: &[Vec<usize>], assignment: &mut Vec<usize>, best: &mut u64) {
        match groups.split_first() {
            None => {
                *best = (*best).min(edge_key(g, assignment));
            }
            Some((first, rest)) => {
                permute(first.clone(), &mut |perm| {
                    let len = assignment.len();
                    assignment.extend_from_slice(perm);
                    go(g, rest, assignment, best);
                    assignment.truncate(len);
                });
            }
        }
    }
    go(g, &groups, &mut assignment, &mut best);
    best
}

/// Edge-set key of the relabeled graph: bit `t` set iff the new pair with
/// triangular index `t` is an edge. `order[k]` is the old vertex placed at new
/// position `k + 1`.
fn edge_key(g: &Graph, order: &[usize]) -> u64 {
    let mut key = 0u64;
    let mut t = 0;
    for a in 0..order.len() {
        for b in (a + 1)..order.len() {
            if g.has_edge(order[a], order[b]) {
                key |= 1u64 << t;
            }
            t += 1;
        }
    }
    key
}

/// Rebuilds a graph on `n` vertices from an `edge_key` produced with the
/// identity ordering.
pub(crate) fn graph_from_key(n: usize, key: u64) -> Graph {
    let mut edges = Vec::new();
    let mut t = 0;
    for a in 1..=n {
        for b in (a + 1)..=n {
            if key & (1u64 << t) != 0 {
                edges.push((a, b));
            }
            t += 1;
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn permute(mut items: Vec<usize>, f: &mut impl FnMut(&[usize])) {
    // Heap's algorithm
    let k = items.len();
    let mut c = vec![0usize; k];
    f(&items);
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            f(&items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// All non-isomorphic simple graphs on exactly `n` vertices (`n <= 8`),
/// deterministic order. Built by extending each (n-1)-vertex representative by
/// one vertex with every possible neighborhood and deduplicating canonically.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n >= 1 && n <= 8, "enumeration supported for 1..=8 vertices");
    let mut level: Vec<u64> = vec![0]; // keys of graphs on 1 vertex
    for k in 2..=n {
        let mut next: HashSet<u64> = HashSet::new();
        for &key in &level {
            let base = graph_from_key(k - 1, key);
            for nbrs in 0u64..(1u64 << (k - 1)) {
                let mut edges = base.edges();
                for v in mask_vertices(nbrs) {
                    edges.push((v, k));
                }
                let g = Graph::new(k, &edges).unwrap();
                next.insert(canonical_key(&g));
            }
        }
        let mut keys: Vec<u64> = next.into_iter().collect();
        keys.sort_unstable();
        level = keys;
    }
    level.into_iter().map(|k| graph_from_key(n, k)).collect()
}
