//! Exact boxicity and cubicity for small graphs, with certificates.
//!
//! Every supergraph of `g` is obtained by adding a subset of its non-edges.
//! A supergraph that is interval (unit interval) "breaks" the non-edges it
//! keeps; `box(g)` (`cub(g)`) is the least number of such break sets that
//! together contain every non-edge. Only inclusion-maximal break sets are
//! used for the cover search, which branches on the lowest uncovered
//! non-edge with memoized cover numbers.
//!
//! For `n ≤ 6` the interval / unit-interval status of every labeled graph is
//! tabulated once per process. Larger graphs (up to 11 vertices when the
//! caller raises the limit) are searched vertex by vertex, pruning
//! supergraphs whose fixed prefix already fails.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::{pair_index, Graph};
use crate::interval::{
    clique_path, find_interval_representation, find_unit_interval_representation,
    BoxRepresentation, CubeRepresentation,
};
use crate::scalar::Coord;

pub const DEFAULT_ORACLE_LIMIT: usize = 7;

const TABLE_MAX_N: usize = 6;
// Edge masks are 64-bit, so the search stops at 11 vertices even when the
// caller raises the limit further.
const MAX_SEARCH_N: usize = 11;

const INTERVAL: u8 = 1;
const UNIT: u8 = 2;

fn classify(g: &Graph) -> u8 {
    match clique_path(g) {
        None => 0,
        Some(_) if g.find_claw().is_some() => INTERVAL,
        Some(_) => INTERVAL | UNIT,
    }
}

static TABLES: [OnceLock<Vec<u8>>; TABLE_MAX_N + 1] = [const { OnceLock::new() }; TABLE_MAX_N + 1];

/// Flags for every labeled graph on `n ≤ 6` vertices, indexed by edge mask.
fn table(n: usize) -> &'static [u8] {
    TABLES[n].get_or_init(|| {
        let size = 1usize << (n * n.saturating_sub(1) / 2);
        let mut flags = vec![0u8; size];
        let workers = std::thread::available_parallelism()
            .map_or(1, |p| p.get())
            .min(16);
        let chunk = size.div_ceil(workers).max(1);
        std::thread::scope(|s| {
            for (i, part) in flags.chunks_mut(chunk).enumerate() {
                s.spawn(move || {
                    for (j, f) in part.iter_mut().enumerate() {
                        *f = classify(&Graph::from_edge_mask(n, (i * chunk + j) as u64));
                    }
                });
            }
        });
        flags
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Target {
    Interval,
    Unit,
}

impl Target {
    fn flag(self) -> u8 {
        match self {
            Target::Interval => INTERVAL,
            Target::Unit => UNIT,
        }
    }
}

/// Minimum cover of the non-edges by break sets. Returns the supergraphs
/// whose break sets form the lexicographically first minimum cover (sets
/// compared as bit masks over the non-edges in lexicographic pair order).
fn minimum_cover(g: &Graph, target: Target, max_n: usize) -> Result<Vec<Graph>> {
    let n = g.n();
    if n > max_n {
        return Err(Error::OracleLimit { n, max_n });
    }
    let non_edges: Vec<(usize, usize)> = g.non_edges().collect();
    let u = non_edges.len();
    if u == 0 {
        return Ok(Vec::new());
    }
    let flag = target.flag();
    // the only break set containing every non-edge is g itself
    if classify(g) & flag != 0 {
        return Ok(vec![g.clone()]);
    }
    if n > MAX_SEARCH_N {
        return Err(Error::Argument(format!(
            "exhaustive search supports at most {MAX_SEARCH_N} vertices, got {n}"
        )));
    }
    let full: u64 = if u == 64 { u64::MAX } else { (1u64 << u) - 1 };
    let supergraph = |kept: u64| {
        let mut h = g.clone();
        for (e, &(a, b)) in non_edges.iter().enumerate() {
            if kept >> e & 1 == 0 {
                h.insert_edge(a, b);
            }
        }
        h
    };

    let (maximal, below) = if n <= TABLE_MAX_N {
        dense_maximal_break_sets(g, &non_edges, flag)
    } else {
        (sparse_maximal_break_sets(g, &non_edges, flag), None)
    };

    let mut cover = CoverSearch {
        sets: &maximal,
        below: below.as_deref(),
        memo: HashMap::new(),
    };
    let k = cover.cover_number(full);

    let mut chosen = Vec::with_capacity(k);
    let mut rest = full;
    let mut from = 0;
    while rest != 0 {
        let left = k - chosen.len();
        let idx = (from..maximal.len())
            .find(|&i| {
                let s = maximal[i];
                s & rest != 0 && cover.cover_number(rest & !s) < left
            })
            .expect("a minimum cover extends the current prefix");
        chosen.push(maximal[idx]);
        rest &= !maximal[idx];
        from = idx + 1;
    }
    debug_assert_eq!(chosen.len(), k);
    Ok(chosen.into_iter().map(supergraph).collect())
}

/// Maximal break sets in increasing mask order, plus the down-closure
/// `below[X]` (X is contained in some break set), from the lookup table.
fn dense_maximal_break_sets(
    g: &Graph,
    non_edges: &[(usize, usize)],
    flag: u8,
) -> (Vec<u64>, Option<Vec<bool>>) {
    let u = non_edges.len();
    let full: u64 = (1u64 << u) - 1;
    let tab = table(g.n());
    let base = g.edge_mask();
    let bits: Vec<u64> = non_edges
        .iter()
        .map(|&(a, b)| 1u64 << pair_index(a, b))
        .collect();

    // breaks[X]: the supergraph keeping exactly the non-edges X is of the
    // target class
    let mut breaks = vec![false; 1 << u];
    for kept in 0..=full {
        let mut mask = base;
        let mut added = full & !kept;
        while added != 0 {
            mask |= bits[added.trailing_zeros() as usize];
            added &= added - 1;
        }
        breaks[kept as usize] = tab[mask as usize] & flag != 0;
    }

    let mut below = breaks.clone();
    for x in (0..=full).rev() {
        if !below[x as usize] {
            let mut free = full & !x;
            while free != 0 {
                let e = free.trailing_zeros();
                if below[(x | 1 << e) as usize] {
                    below[x as usize] = true;
                    break;
                }
                free &= free - 1;
            }
        }
    }

    let maximal: Vec<u64> = (1..=full)
        .filter(|&x| {
            breaks[x as usize] && {
                let mut free = full & !x;
                let mut ok = true;
                while free != 0 {
                    let e = free.trailing_zeros();
                    if below[(x | 1 << e) as usize] {
                        ok = false;
                        break;
                    }
                    free &= free - 1;
                }
                ok
            }
        })
        .collect();
    (maximal, Some(below))
}

/// Maximal break sets in increasing mask order for graphs above the table
/// size. Supergraphs are built one vertex at a time, and a branch is cut as
/// soon as the prefix it has fixed leaves the target class: interval and
/// unit interval graphs are closed under induced subgraphs.
fn sparse_maximal_break_sets(g: &Graph, non_edges: &[(usize, usize)], flag: u8) -> Vec<u64> {
    let n = g.n();
    // non-edges to earlier vertices, grouped by their later endpoint
    let mut back: Vec<Vec<(usize, u64)>> = vec![Vec::new(); n];
    for (e, &(a, b)) in non_edges.iter().enumerate() {
        back[b].push((e, 1u64 << pair_index(a, b)));
    }
    let search = HereditarySearch {
        base: g.edge_mask(),
        back: &back,
        flag,
        n,
    };

    // grow the frontier breadth-first until there is enough independent
    // work, then split it across threads and concatenate in a fixed order
    let mut frontier: Vec<(u64, u64)> = vec![(0, 0)];
    let mut j = 1;
    while j < n && frontier.len() < 256 {
        frontier = frontier
            .iter()
            .flat_map(|&(m, k)| search.extend(j, m, k))
            .collect();
        j += 1;
    }
    let workers = std::thread::available_parallelism()
        .map_or(1, |p| p.get())
        .min(16);
    let chunk = frontier.len().div_ceil(workers).max(1);
    let mut found: Vec<Vec<u64>> = vec![Vec::new(); frontier.len().div_ceil(chunk)];
    std::thread::scope(|s| {
        for (slot, part) in found.iter_mut().zip(frontier.chunks(chunk)) {
            let search = &search;
            s.spawn(move || {
                for &(m, k) in part {
                    search.collect(j, m, k, slot);
                }
            });
        }
    });
    let mut sets: Vec<u64> = found.into_iter().flatten().collect();

    sets.sort_unstable_by_key(|x| std::cmp::Reverse(x.count_ones()));
    let mut maximal: Vec<u64> = Vec::new();
    for x in sets {
        if maximal.iter().all(|&m| x & !m != 0) {
            maximal.push(x);
        }
    }
    maximal.sort_unstable();
    maximal
}

struct HereditarySearch<'a> {
    base: u64,
    back: &'a [Vec<(usize, u64)>],
    flag: u8,
    n: usize,
}

impl HereditarySearch<'_> {
    /// Every way to settle vertex `j`'s non-edges to earlier vertices that
    /// keeps the prefix `0..=j` in the target class, as `(mask, kept)`
    /// where `mask` holds the added pairs.
    fn extend(&self, j: usize, mask: u64, kept: u64) -> Vec<(u64, u64)> {
        let back = &self.back[j];
        let prefix_bits = (j + 1) * j / 2;
        let prefix = |m: u64| (self.base | m) & ((1u64 << prefix_bits) - 1);
        (0..1u64 << back.len())
            .filter_map(|choice| {
                let mut m = mask;
                let mut k = kept;
                for (i, &(e, bit)) in back.iter().enumerate() {
                    if choice >> i & 1 == 1 {
                        k |= 1 << e;
                    } else {
                        m |= bit;
                    }
                }
                let flags = if j < TABLE_MAX_N {
                    table(j + 1)[prefix(m) as usize]
                } else {
                    classify(&Graph::from_edge_mask(j + 1, prefix(m)))
                };
                (flags & self.flag != 0).then_some((m, k))
            })
            .collect()
    }

    fn collect(&self, j: usize, mask: u64, kept: u64, out: &mut Vec<u64>) {
        if j == self.n {
            out.push(kept);
            return;
        }
        for (m, k) in self.extend(j, mask, kept) {
            self.collect(j + 1, m, k, out);
        }
    }
}

struct CoverSearch<'a> {
    sets: &'a [u64],
    below: Option<&'a [bool]>,
    memo: HashMap<u64, usize>,
}

impl CoverSearch<'_> {
    fn within_one(&self, rest: u64) -> bool {
        match self.below {
            Some(below) => below[rest as usize],
            None => self.sets.iter().any(|&s| rest & !s == 0),
        }
    }

    fn cover_number(&mut self, rest: u64) -> usize {
        if rest == 0 {
            return 0;
        }
        if self.within_one(rest) {
            return 1;
        }
        if let Some(&k) = self.memo.get(&rest) {
            return k;
        }
        let e = rest.trailing_zeros();
        let mut best = usize::MAX;
        for i in 0..self.sets.len() {
            let s = self.sets[i];
            if s >> e & 1 == 1 {
                best = best.min(self.cover_number(rest & !s).saturating_add(1));
            }
        }
        self.memo.insert(rest, best);
        best
    }
}

/// `box(g)` with a witness, by exhaustive search. Refuses `n > max_n`.
pub fn exact_boxicity<T: Coord>(g: &Graph, max_n: usize) -> Result<(usize, BoxRepresentation<T>)> {
    let dims = minimum_cover(g, Target::Interval, max_n)?
        .iter()
        .map(|h| find_interval_representation(h).expect("break set supergraph is interval"))
        .collect::<Vec<_>>();
    Ok((dims.len(), BoxRepresentation::new(g.n(), dims)?))
}

/// `cub(g)` with a witness, by exhaustive search. Refuses `n > max_n`.
pub fn exact_cubicity<T: Coord>(g: &Graph, max_n: usize) -> Result<(usize, CubeRepresentation<T>)> {
    let dims = minimum_cover(g, Target::Unit, max_n)?
        .iter()
        .map(|h| {
            find_unit_interval_representation(h).expect("break set supergraph is unit interval")
        })
        .collect::<Vec<_>>();
    Ok((dims.len(), CubeRepresentation::new(g.n(), dims)?))
}

/// Boxicity without the size limit where it is decidable directly: 0 for
/// complete graphs, 1 for other interval graphs; otherwise the exact
/// oracle.
pub fn known_boxicity<T: Coord>(g: &Graph, max_n: usize) -> Result<(usize, BoxRepresentation<T>)> {
    if g.is_complete() {
        return Ok((0, BoxRepresentation::new(g.n(), Vec::new())?));
    }
    if let Some(rep) = find_interval_representation(g) {
        return Ok((1, BoxRepresentation::new(g.n(), vec![rep])?));
    }
    exact_boxicity(g, max_n)
}

/// Cubicity counterpart of [`known_boxicity`].
pub fn known_cubicity<T: Coord>(g: &Graph, max_n: usize) -> Result<(usize, CubeRepresentation<T>)> {
    if g.is_complete() {
        return Ok((0, CubeRepresentation::new(g.n(), Vec::new())?));
    }
    if let Some(rep) = find_unit_interval_representation(g) {
        return Ok((1, CubeRepresentation::new(g.n(), vec![rep])?));
    }
    exact_cubicity(g, max_n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_family, Family};
    use crate::interval::verify_representation;
    use crate::Rational;

    fn boxicity(g: &Graph) -> usize {
        let (b, rep) = exact_boxicity::<Rational>(g, DEFAULT_ORACLE_LIMIT).unwrap();
        assert!(verify_representation(&rep, g).unwrap().is_equal());
        b
    }

    fn cubicity(g: &Graph) -> usize {
        let (k, rep) = exact_cubicity::<Rational>(g, DEFAULT_ORACLE_LIMIT).unwrap();
        assert!(verify_representation(&rep, g).unwrap().is_equal());
        k
    }

    #[test]
    fn oracle_examples() {
        let k22 = make_family(&Family::CompleteMultipartite(vec![2, 2])).unwrap();
        assert_eq!(boxicity(&k22), 2);
        assert_eq!(cubicity(&k22), 2);
        let star4 = make_family(&Family::Star(4)).unwrap();
        assert_eq!(boxicity(&star4), 1);
        assert_eq!(cubicity(&star4), 2);
        assert_eq!(boxicity(&Graph::complete(6)), 0);
        assert_eq!(cubicity(&Graph::complete(6)), 0);
    }

    #[test]
    fn limit_is_enforced() {
        let g = Graph::new(8);
        assert_eq!(
            exact_boxicity::<Rational>(&g, DEFAULT_ORACLE_LIMIT).unwrap_err(),
            Error::OracleLimit { n: 8, max_n: 7 }
        );
        // raised limit, classified on the fly
        let c8 = Graph::from_edges(8, (0..8).map(|i| (i, (i + 1) % 8))).unwrap();
        let (b, rep) = exact_boxicity::<Rational>(&c8, 8).unwrap();
        assert_eq!(b, 2);
        assert!(verify_representation(&rep, &c8).unwrap().is_equal());
    }

    #[test]
    fn witnesses_are_deterministic() {
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let a = exact_boxicity::<Rational>(&c5, 7).unwrap();
        let b = exact_boxicity::<Rational>(&c5, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.0, 2);
    }

    #[test]
    fn known_values_skip_the_limit() {
        let glued = make_family(&Family::PathStarGlue(4)).unwrap();
        assert_eq!(known_boxicity::<Rational>(&glued, 7).unwrap().0, 1);
        assert!(known_cubicity::<Rational>(&glued, 7).is_err());
        assert_eq!(
            known_cubicity::<Rational>(&Graph::complete(12), 7)
                .unwrap()
                .0,
            0
        );
    }

    #[test]
    fn prefix_search_matches_table() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..40 {
            let g = crate::families::random_graph(TABLE_MAX_N, 0.5, &mut rng);
            let non_edges: Vec<_> = g.non_edges().collect();
            if non_edges.is_empty() {
                continue;
            }
            for flag in [INTERVAL, UNIT] {
                let (dense, _) = dense_maximal_break_sets(&g, &non_edges, flag);
                assert_eq!(
                    sparse_maximal_break_sets(&g, &non_edges, flag),
                    dense,
                    "{g:?}"
                );
            }
        }
    }

    #[test]
    fn nine_vertex_star() {
        let star = make_family(&Family::Star(8)).unwrap();
        let (k, rep) = exact_cubicity::<Rational>(&star, 9).unwrap();
        assert_eq!(k, 3);
        assert!(verify_representation(&rep, &star).unwrap().is_equal());
    }
}
