//! Exact independence number, exact and greedy coloring, diameter.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, ProperColoring};

/// Size of a maximum independent set.
pub fn exact_independence_number(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

/// A maximum independent set, sorted. Branch and bound over the complement
/// (maximum clique with a greedy-coloring bound).
pub fn maximum_independent_set(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let comp: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut row = g.neighbors(v).clone();
            row.toggle_range(..);
            row.set(v, false);
            row
        })
        .collect();

    let mut best = Vec::new();
    let mut current = Vec::new();
    let mut cand = FixedBitSet::with_capacity(n);
    cand.insert_range(..);
    clique_expand(&comp, cand, &mut current, &mut best);
    best.sort_unstable();
    best
}

/// Orders `cand` by greedy color classes; returns (vertex, color bound) with
/// non-decreasing bounds.
fn color_sort(adj: &[FixedBitSet], cand: &FixedBitSet) -> Vec<(usize, usize)> {
    let mut uncolored = cand.clone();
    let mut out = Vec::with_capacity(cand.count_ones(..));
    let mut color = 0;
    while !uncolored.is_clear() {
        color += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = avail.minimum() {
            uncolored.set(v, false);
            avail.set(v, false);
            avail.difference_with(&adj[v]);
            out.push((v, color));
        }
    }
    out
}

fn clique_expand(
    adj: &[FixedBitSet],
    mut cand: FixedBitSet,
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    let order = color_sort(adj, &cand);
    for &(v, bound) in order.iter().rev() {
        if current.len() + bound <= best.len() {
            return;
        }
        current.push(v);
        let mut next = cand.clone();
        next.intersect_with(&adj[v]);
        if next.is_clear() {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            clique_expand(adj, next, current, best);
        }
        current.pop();
        cand.set(v, false);
    }
}

/// Greedy coloring in the given vertex order (smallest free color).
pub fn greedy_coloring(g: &Graph, order: &[usize]) -> Result<ProperColoring> {
    let n = g.n();
    let mut seen = vec![false; n];
    if order.len() != n
        || order
            .iter()
            .any(|&v| v >= n || std::mem::replace(&mut seen[v], true))
    {
        return Err(Error::Argument(
            "order is not a permutation of the vertices".into(),
        ));
    }
    let mut colors = vec![usize::MAX; n];
    let mut taken = Vec::new();
    for &v in order {
        taken.clear();
        taken.resize(n + 1, false);
        for u in g.neighbors(v).ones() {
            if colors[u] != usize::MAX {
                taken[colors[u]] = true;
            }
        }
        colors[v] = taken.iter().position(|&t| !t).expect("a free color exists");
    }
    ProperColoring::new(g, colors)
}

/// A proper coloring with exactly χ(g) colors.
///
/// Edgeless and bipartite graphs are handled directly; everything else goes
/// through DSATUR branch and bound seeded with a greedy clique lower bound.
/// Colors are renumbered by first appearance in vertex order, so the result
/// is canonical for a given graph.
pub fn exact_chromatic_coloring(g: &Graph) -> ProperColoring {
    let n = g.n();
    let colors = if g.edge_count() == 0 {
        vec![0; n]
    } else if let Some(two) = g.two_coloring() {
        two
    } else {
        dsatur_exact(g)
    };
    ProperColoring::new(g, canonical_colors(&colors)).expect("search yields a proper coloring")
}

pub fn chromatic_number(g: &Graph) -> usize {
    exact_chromatic_coloring(g).chi_used()
}

fn canonical_colors(colors: &[usize]) -> Vec<usize> {
    let mut map = std::collections::HashMap::new();
    colors
        .iter()
        .map(|&c| {
            let next = map.len();
            *map.entry(c).or_insert(next)
        })
        .collect()
}

fn greedy_clique(g: &Graph) -> usize {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best = 0;
    for &s in &order {
        let mut clique = vec![s];
        let mut cand = g.neighbors(s).clone();
        for &v in &order {
            if cand.contains(v) {
                clique.push(v);
                cand.intersect_with(g.neighbors(v));
            }
        }
        best = best.max(clique.len());
    }
    best
}

struct Dsatur<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    // neighbor_colors[v][c] = number of colored neighbors of v with color c
    neighbor_colors: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    // number of uncolored neighbors
    free_degree: Vec<usize>,
    best: Vec<usize>,
    best_count: usize,
    lower: usize,
}

const UNCOLORED: usize = usize::MAX;

impl Dsatur<'_> {
    fn pick(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.colors[v] == UNCOLORED)
            .max_by_key(|&v| {
                (
                    self.saturation[v],
                    self.free_degree[v],
                    std::cmp::Reverse(v),
                )
            })
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for u in self.g.neighbors(v).ones() {
            if self.neighbor_colors[u][c] == 0 {
                self.saturation[u] += 1;
            }
            self.neighbor_colors[u][c] += 1;
            self.free_degree[u] -= 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = std::mem::replace(&mut self.colors[v], UNCOLORED);
        for u in self.g.neighbors(v).ones() {
            self.neighbor_colors[u][c] -= 1;
            self.free_degree[u] += 1;
            if self.neighbor_colors[u][c] == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    fn search(&mut self, used: usize) {
        if self.best_count <= self.lower {
            return;
        }
        let Some(v) = self.pick() else {
            if used < self.best_count {
                self.best_count = used;
                self.best = self.colors.clone();
            }
            return;
        };
        let limit = (used + 1).min(self.best_count - 1);
        for c in 0..limit {
            if self.neighbor_colors[v][c] != 0 {
                continue;
            }
            self.assign(v, c);
            self.search(used.max(c + 1));
            self.unassign(v);
            if self.best_count <= self.lower {
                return;
            }
        }
    }
}

fn dsatur_exact(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut state = Dsatur {
        g,
        colors: vec![UNCOLORED; n],
        neighbor_colors: vec![vec![0; n + 1]; n],
        saturation: vec![0; n],
        free_degree: (0..n).map(|v| g.degree(v)).collect(),
        best: Vec::new(),
        best_count: n + 1,
        lower: greedy_clique(g),
    };
    state.search(0);
    state.best
}

/// Diameter of a graph, taken per component when disconnected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Diameter {
    /// Largest finite eccentricity over all components.
    pub value: usize,
    pub connected: bool,
}

fn bfs_distances(g: &Graph, s: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for v in g.neighbors(u).ones() {
            if dist[v].is_none() {
                dist[v] = Some(d + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// All-pairs BFS diameter.
pub fn diameter(g: &Graph) -> Diameter {
    let mut value = 0;
    let mut connected = true;
    for s in 0..g.n() {
        for d in bfs_distances(g, s) {
            match d {
                Some(d) => value = value.max(d),
                None => connected = false,
            }
        }
    }
    Diameter { value, connected }
}
