//! Simple undirected graphs on `0..n` and proper colorings.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is kept as one bit row per vertex; rows are kept symmetric and
/// the diagonal is always clear.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<FixedBitSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            m: 0,
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// Builds a graph from an edge list, rejecting loops, out-of-range ids
    /// and repeated pairs.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `{u, v}`; errors on a loop, an out-of-range id or a duplicate.
    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Argument(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Argument(format!("self-loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::Argument(format!("duplicate edge ({u}, {v})")));
        }
        self.insert_edge(u, v);
        Ok(())
    }

    /// Adds `{u, v}` if absent. Panics on a loop or out-of-range vertex.
    pub fn insert_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at vertex {u}");
        if !self.adj[u].contains(v) {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
            self.m += 1;
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u != v && self.adj[u].contains(v) {
            self.adj[u].set(v, false);
            self.adj[v].set(u, false);
            self.m -= 1;
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Open neighborhood of `v` as a bit row.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .ones()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| !self.adj[u].contains(v))
                .map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn complement(&self) -> Graph {
        let mut c = Graph::new(self.n);
        for (u, v) in self.non_edges() {
            c.insert_edge(u, v);
        }
        c
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut h = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.insert_edge(i, j);
                }
            }
        }
        h
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.adj[u].ones() {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Proper 2-coloring if the graph is bipartite (BFS, smallest vertex of
    /// each component gets color 0).
    pub fn two_coloring(&self) -> Option<Vec<usize>> {
        let mut color = vec![usize::MAX; self.n];
        for s in 0..self.n {
            if color[s] != usize::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.adj[u].ones() {
                    if color[v] == usize::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    /// Some induced K_{1,3} as `[center, a, b, c]`, if one exists.
    pub fn find_claw(&self) -> Option<[usize; 4]> {
        for c in 0..self.n {
            let nb: Vec<usize> = self.adj[c].ones().collect();
            for (i, &a) in nb.iter().enumerate() {
                for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    for &d in &nb[j + 1..] {
                        if !self.has_edge(a, d) && !self.has_edge(b, d) {
                            return Some([c, a, b, d]);
                        }
                    }
                }
            }
        }
        None
    }

    /// Edge set packed into a `u64`, bit index of `(u, v)` with `u < v`
    /// given by [`pair_index`]. Only for `n ≤ 11`.
    pub fn edge_mask(&self) -> u64 {
        assert!(self.n <= 11, "edge mask needs n <= 11");
        let mut mask = 0u64;
        for (u, v) in self.edges() {
            mask |= 1 << pair_index(u, v);
        }
        mask
    }

    /// Inverse of [`Graph::edge_mask`].
    pub fn from_edge_mask(n: usize, mask: u64) -> Graph {
        let mut g = Graph::new(n);
        for v in 1..n {
            for u in 0..v {
                if mask >> pair_index(u, v) & 1 == 1 {
                    g.insert_edge(u, v);
                }
            }
        }
        g
    }
}

/// Column-major index of the pair `u < v` in the upper triangle:
/// `(0,1), (0,2), (1,2), (0,3), ...`. This is also graph6 bit order.
#[inline]
pub fn pair_index(u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    v * (v - 1) / 2 + u
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A proper vertex coloring with colors `0..chi_used`, each color used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProperColoring {
    colors: Vec<usize>,
    chi_used: usize,
}

impl ProperColoring {
    /// Validates `colors` against `g`.
    pub fn new(g: &Graph, colors: Vec<usize>) -> Result<Self> {
        if colors.len() != g.n() {
            return Err(Error::Argument(format!(
                "coloring has {} entries for {} vertices",
                colors.len(),
                g.n()
            )));
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| colors[u] == colors[v]) {
            return Err(Error::Argument(format!("edge ({u}, {v}) is monochromatic")));
        }
        let chi_used = colors.iter().max().map_or(0, |&c| c + 1);
        let mut used = vec![false; chi_used];
        for &c in &colors {
            used[c] = true;
        }
        if let Some(c) = used.iter().position(|&u| !u) {
            return Err(Error::Argument(format!("color {c} is never used")));
        }
        Ok(ProperColoring { colors, chi_used })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn chi_used(&self) -> usize {
        self.chi_used
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    /// Color classes in color order, members ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.chi_used];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    /// True when every edge of `g` joins two colors.
    pub fn is_proper_for(&self, g: &Graph) -> bool {
        self.colors.len() == g.n() && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }
}
