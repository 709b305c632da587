//! Simple labeled graphs on at most 64 vertices with bitset adjacency, and
//! GF(2) linear algebra on bit rows.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Dense matrix over GF(2), one `u64` per row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GF2Matrix {
    rows: Vec<u64>,
    cols: usize,
}

impl GF2Matrix {
    pub fn new(rows: Vec<u64>, cols: usize) -> Result<Self> {
        if cols > 64 {
            return Err(Error::TooLarge { size: cols, max: 64 });
        }
        let mask = if cols == 64 { u64::MAX } else { (1u64 << cols) - 1 };
        Ok(GF2Matrix {
            rows: rows.into_iter().map(|r| r & mask).collect(),
            cols,
        })
    }

    pub fn from_bits(bits: &[Vec<bool>]) -> Result<Self> {
        let cols = bits.first().map_or(0, Vec::len);
        if bits.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse("ragged matrix".into()));
        }
        let rows = bits
            .iter()
            .map(|r| r.iter().rev().fold(0u64, |acc, &b| acc << 1 | b as u64))
            .collect();
        GF2Matrix::new(rows, cols)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    /// Rank by Gaussian elimination on bit rows.
    pub fn rank(&self) -> usize {
        rank_of_rows(self.rows.clone())
    }

    /// `n - rank` of a square matrix.
    pub fn corank(&self) -> Result<usize> {
        if self.rows.len() != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows.len(),
                cols: self.cols,
            });
        }
        Ok(self.cols - self.rank())
    }

    /// Principal submatrix on the indices selected by `mask`, compacted.
    pub fn principal_submatrix(&self, mask: u64) -> GF2Matrix {
        let rows = ones(mask)
            .filter(|&i| i < self.rows.len())
            .map(|i| compress(self.rows[i], mask))
            .collect();
        GF2Matrix {
            rows,
            cols: mask.count_ones() as usize,
        }
    }
}

pub(crate) fn rank_of_rows(mut rows: Vec<u64>) -> usize {
    let mut rank = 0;
    for r in 0..rows.len() {
        let Some(piv_row) = (r..rows.len())
            .filter(|&i| rows[i] != 0)
            .min_by_key(|&i| rows[i].trailing_zeros())
        else {
            break;
        };
        rows.swap(r, piv_row);
        let piv = rows[r];
        let bit = piv & piv.wrapping_neg();
        for row in rows.iter_mut().skip(r + 1) {
            if *row & bit != 0 {
                *row ^= piv;
            }
        }
        rank += 1;
    }
    rank
}

/// Indices of set bits, ascending.
pub(crate) fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Packs the bits of `x` selected by `mask` into the low bits.
pub(crate) fn compress(x: u64, mask: u64) -> u64 {
    let mut out = 0;
    for (k, i) in ones(mask).enumerate() {
        out |= (x >> i & 1) << k;
    }
    out
}

/// Simple graph: symmetric adjacency bit rows, zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        Graph { adj: vec![0; n] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for (i, j) in (0..n).tuple_combinations() {
            g.add_edge_unchecked(i, j);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge_unchecked(i - 1, i);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge_unchecked(0, n - 1);
        }
        g
    }

    /// From 1-based edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { size: n, max: MAX_VERTICES });
        }
        let mut g = Graph::empty(n);
        for &(a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange(v));
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            if g.has_edge(a - 1, b - 1) {
                return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
            }
            g.add_edge_unchecked(a - 1, b - 1);
        }
        Ok(g)
    }

    /// Graph on `n` vertices whose edges are the set bits of `code` in
    /// lexicographic pair order; used for exhaustive enumeration.
    pub fn from_code(n: usize, code: u64) -> Self {
        let mut g = Graph::empty(n);
        for (k, (i, j)) in (0..n).tuple_combinations().enumerate() {
            if code >> k & 1 == 1 {
                g.add_edge_unchecked(i, j);
            }
        }
        g
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertex_mask(&self) -> u64 {
        let n = self.adj.len();
        if n == 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub(crate) fn add_edge_unchecked(&mut self, i: usize, j: usize) {
        debug_assert!(i != j);
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
    }

    pub fn toggle_edge(&mut self, i: usize, j: usize) {
        assert!(i != j, "loops are not allowed");
        self.adj[i] ^= 1 << j;
        self.adj[j] ^= 1 << i;
    }

    /// Edges as 0-based `(i, j)`, `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.adj.len())
            .flat_map(|i| ones(self.adj[i] >> i).filter(|&d| d > 0).map(move |d| (i, i + d)))
            .collect()
    }

    pub fn first_edge(&self) -> Option<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .find_map(|(i, &r)| {
                let up = if i == 63 { 0 } else { r >> (i + 1) << (i + 1) };
                (up != 0).then(|| (i, up.trailing_zeros() as usize))
            })
    }

    pub fn adjacency(&self) -> GF2Matrix {
        GF2Matrix {
            rows: self.adj.clone(),
            cols: self.adj.len(),
        }
    }

    /// Corank over GF(2) of the adjacency matrix.
    pub fn corank(&self) -> usize {
        self.adj.len() - rank_of_rows(self.adj.clone())
    }

    /// Corank of the adjacency matrix of the induced subgraph on `mask`.
    pub fn corank_of(&self, mask: u64) -> usize {
        let rows: Vec<u64> = ones(mask).map(|i| self.adj[i] & mask).collect();
        rows.len() - rank_of_rows(rows)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.corank() == 0
    }

    /// `G|_U`, vertices renumbered preserving order.
    pub fn induced(&self, mask: u64) -> Graph {
        Graph {
            adj: ones(mask & self.vertex_mask())
                .map(|i| compress(self.adj[i], mask))
                .collect(),
        }
    }

    pub fn remove_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertex_mask() & !(1u64 << v))
    }

    /// `G^{ab}`: toggles every edge between distinct classes among
    /// {adjacent to both, only to `a`, only to `b`}.
    pub fn pivot(&self, a: usize, b: usize) -> Result<Graph> {
        let n = self.num_vertices();
        for v in [a, b] {
            if v >= n {
                return Err(Error::VertexOutOfRange(v + 1));
            }
        }
        if a == b || !self.has_edge(a, b) {
            return Err(Error::NotAnEdge(a + 1, b + 1));
        }
        let ab = 1u64 << a | 1u64 << b;
        let na = self.adj[a] & !ab;
        let nb = self.adj[b] & !ab;
        let classes = [na & nb, na & !nb, nb & !na];
        let mut g = self.clone();
        for (i, j) in (0..3).tuple_combinations() {
            for u in ones(classes[i]) {
                g.adj[u] ^= classes[j];
                for v in ones(classes[j]) {
                    g.adj[v] ^= 1 << u;
                }
            }
        }
        Ok(g)
    }

    /// `(G'_ab, G~_ab, G~'_ab)` of the graph 4-term relation.
    pub fn four_term_images(&self, a: usize, b: usize) -> Result<[Graph; 3]> {
        let n = self.num_vertices();
        for v in [a, b] {
            if v >= n {
                return Err(Error::VertexOutOfRange(v + 1));
            }
        }
        if a == b {
            return Err(Error::Loop(a + 1));
        }
        let mut prime = self.clone();
        prime.toggle_edge(a, b);
        let tilde = self.tilde(a, b);
        let mut tilde_prime = tilde.clone();
        tilde_prime.toggle_edge(a, b);
        Ok([prime, tilde, tilde_prime])
    }

    /// Toggles the adjacency to `a` of every vertex adjacent to `b`.
    fn tilde(&self, a: usize, b: usize) -> Graph {
        let mut g = self.clone();
        for v in ones(self.adj[b] & !(1u64 << a)) {
            g.toggle_edge(a, v);
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.num_vertices();
        assert!(n + other.num_vertices() <= MAX_VERTICES);
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << n));
        Graph { adj }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        if n == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in ones(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.vertex_mask()
    }
}

/// All labeled graphs on `n` vertices (`2^(n choose 2)` of them).
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    assert!(pairs < 64);
    (0..1u64 << pairs).map(move |code| Graph::from_code(n, code))
}

impl fmt::Display for Graph {
    /// `n=3; edges=1-2,1-3,2-3`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={}; edges={}",
            self.num_vertices(),
            self.edges()
                .iter()
                .map(|&(i, j)| format!("{}-{}", i + 1, j + 1))
                .join(",")
        )
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected `n=<count>; edges=a-b,…`, got `{s}`"));
        let (n_part, e_part) = s.split_once(';').ok_or_else(bad)?;
        let n: usize = n_part
            .trim()
            .strip_prefix("n=")
            .ok_or_else(bad)?
            .trim()
            .parse()
            .map_err(|_| bad())?;
        let list = e_part.trim().strip_prefix("edges=").ok_or_else(bad)?;
        let edges = list
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                let (a, b) = t.split_once('-').ok_or_else(bad)?;
                let a = a.trim().parse().map_err(|_| bad())?;
                let b = b.trim().parse().map_err(|_| bad())?;
                Ok((a, b))
            })
            .collect::<Result<Vec<_>>>()?;
        Graph::from_edges(n, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Graph {
        s.parse().unwrap()
    }

    #[test]
    fn corank_examples() {
        assert_eq!(GF2Matrix::new(vec![], 0).unwrap().corank().unwrap(), 0);
        assert_eq!(Graph::complete(3).adjacency().corank().unwrap(), 1);
        assert_eq!(Graph::complete(2).adjacency().corank().unwrap(), 0);
        let m = GF2Matrix::new(vec![1, 2], 3).unwrap();
        assert_eq!(m.corank(), Err(Error::NonSquare { rows: 2, cols: 3 }));
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn nondegeneracy() {
        assert!(!Graph::empty(1).is_nondegenerate());
        assert!(Graph::complete(2).is_nondegenerate());
        assert!(!Graph::complete(3).is_nondegenerate());
        assert!(Graph::empty(0).is_nondegenerate());
    }

    #[test]
    fn induced_subgraphs() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.induced(0b111), k3);
        assert_eq!(k3.induced(0b101), Graph::complete(2));
        assert_eq!(Graph::path(3).induced(0b101), Graph::empty(2));
    }

    #[test]
    fn pivot_is_an_involution() {
        let d = g("n=4; edges=1-2,1-3,1-4,2-4,3-4");
        let p = d.pivot(0, 1).unwrap();
        assert_eq!(p.pivot(0, 1).unwrap(), d);
        assert_eq!(d.pivot(1, 2), Err(Error::NotAnEdge(2, 3)));
    }

    #[test]
    fn pivot_toggles_between_classes() {
        // a=0, b=1; 2 adjacent to both, 3 only to a, 4 only to b, 5 to neither
        let h = g("n=6; edges=1-2,1-3,2-3,1-4,2-5");
        let p = h.pivot(0, 1).unwrap();
        assert_eq!(p.to_string(), "n=6; edges=1-2,1-3,1-4,2-3,2-5,3-4,3-5,4-5");
    }

    #[test]
    fn four_term_images_basics() {
        let h = g("n=3; edges=1-3");
        // b = vertex 2 has no neighbours
        let [prime, tilde, tilde_prime] = h.four_term_images(0, 1).unwrap();
        assert_eq!(tilde, h);
        assert_eq!(prime.to_string(), "n=3; edges=1-2,1-3");
        assert_eq!(tilde_prime, prime);
        let p3 = Graph::path(3);
        let [_, t, _] = p3.four_term_images(0, 1).unwrap();
        assert_eq!(t.tilde(0, 1), p3);
    }

    #[test]
    fn text_format() {
        assert_eq!(g("n=3; edges=1-2,1-3,2-3"), Graph::complete(3));
        assert_eq!(g("n=2; edges="), Graph::empty(2));
        assert_eq!(g("n=3; edges=2-3, 2-1").to_string(), "n=3; edges=1-2,2-3");
        assert!(matches!("n=2; edges=1-3".parse::<Graph>(), Err(Error::VertexOutOfRange(3))));
        assert!(matches!("n=2; edges=1-1".parse::<Graph>(), Err(Error::Loop(1))));
        assert!(matches!("n=2; edges=1-2,2-1".parse::<Graph>(), Err(Error::DuplicateEdge(1, 2))));
        assert!(matches!("edges=1-2".parse::<Graph>(), Err(Error::Parse(_))));
    }

    #[test]
    fn first_edge_is_lexicographic() {
        assert_eq!(g("n=4; edges=3-4,2-4,2-3").first_edge(), Some((1, 2)));
        assert_eq!(Graph::empty(3).first_edge(), None);
    }

    #[test]
    fn graph_counts() {
        assert_eq!(all_graphs(4).count(), 64);
        assert_eq!(all_graphs(0).count(), 1);
    }
}
