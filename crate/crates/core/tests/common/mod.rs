//! Small independent oracles: plain loops over `Vec<bool>` and `Vec<usize>`,
//! sharing no code with the library.
#![allow(dead_code)]

use wsys_core::{Graph, Perm};

pub fn cycles_of(img: &[usize]) -> usize {
    let mut seen = vec![false; img.len()];
    let mut count = 0;
    for s in 0..img.len() {
        if !seen[s] {
            count += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = img[x];
            }
        }
    }
    count
}

/// Cycles of `i ↦ α⁻¹(i) + 1 mod m`; 1 on the empty permutation.
pub fn faces(a: &Perm) -> usize {
    let img = a.images();
    let m = img.len();
    if m == 0 {
        return 1;
    }
    let phi: Vec<usize> = (0..m)
        .map(|i| (img.iter().position(|&x| x == i).unwrap() + 1) % m)
        .collect();
    cycles_of(&phi)
}

/// `α|_U` by walking each cycle until it re-enters `U`.
pub fn restrict(a: &Perm, keep: &[bool]) -> Vec<usize> {
    let img = a.images();
    let pts: Vec<usize> = (0..img.len()).filter(|&i| keep[i]).collect();
    pts.iter()
        .map(|&p| {
            let mut q = img[p];
            while !keep[q] {
                q = img[q];
            }
            pts.iter().position(|&x| x == q).unwrap()
        })
        .collect()
}

pub fn corank(mut rows: Vec<Vec<bool>>) -> usize {
    let n = rows.len();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..n).find(|&r| rows[r][col]) else { continue };
        rows.swap(rank, p);
        for r in 0..n {
            if r != rank && rows[r][col] {
                let pivot = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    n - rank
}

pub fn induced_corank(g: &Graph, keep: &[bool]) -> usize {
    let vs: Vec<usize> = (0..g.num_vertices()).filter(|&i| keep[i]).collect();
    corank(vs.iter().map(|&i| vs.iter().map(|&j| g.has_edge(i, j)).collect()).collect())
}

pub fn subset(n: usize, code: u64) -> Vec<bool> {
    (0..n).map(|i| code >> i & 1 == 1).collect()
}

/// Chords of a fixed-point-free involution, by first point.
pub fn chords(a: &Perm) -> Vec<(usize, usize)> {
    let img = a.images();
    (0..img.len()).filter(|&i| i < img[i]).map(|i| (i, img[i])).collect()
}

pub fn intersection_graph(a: &Perm) -> Graph {
    let ch = chords(a);
    let mut edges = Vec::new();
    for i in 0..ch.len() {
        for j in i + 1..ch.len() {
            let (p, q) = ch[i];
            let inside = |x: usize| p < x && x < q;
            if inside(ch[j].0) != inside(ch[j].1) {
                edges.push((i + 1, j + 1));
            }
        }
    }
    Graph::from_edges(ch.len(), &edges).unwrap()
}
