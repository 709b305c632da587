//! Projection to primitives, computed as the logarithm of the identity in the
//! convolution algebra.

use num_traits::One;

use crate::algebra::{ratio, Coef, Poly, Var};
use crate::error::{Error, Result};
use crate::glws::WglEngine;
use crate::graphs::Graph;
use crate::perm::ChordDiag;

/// Ordered partitions of a bitmask set into nonempty blocks, all block
/// counts, each exactly once. The empty set has no partitions here.
pub struct OrderedPartitionStream {
    // (elements still to place before this block, this block)
    stack: Vec<(u64, u64)>,
    fresh: bool,
}

impl OrderedPartitionStream {
    pub fn new(set: u64) -> Self {
        OrderedPartitionStream {
            stack: if set == 0 { Vec::new() } else { vec![(set, set)] },
            fresh: true,
        }
    }

    fn advance(&mut self) -> bool {
        while let Some((rest, block)) = self.stack.pop() {
            let next = (block - 1) & rest;
            if next != 0 {
                let tail = rest & !next;
                self.stack.push((rest, next));
                self.stack.push((tail, tail));
                return true;
            }
        }
        false
    }
}

impl Iterator for OrderedPartitionStream {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.fresh {
            self.fresh = false;
        } else if !self.advance() {
            return None;
        }
        (!self.stack.is_empty()).then(|| self.stack.iter().map(|&(_, b)| b).collect())
    }
}

/// Objects whose restrictions to subsets of a ground set are again objects
/// of the same kind: vertices of graphs, chords of diagrams.
pub trait Restrict {
    fn ground_size(&self) -> usize;
    fn restrict_to(&self, mask: u64) -> Self;
}

impl Restrict for Graph {
    fn ground_size(&self) -> usize {
        self.num_vertices()
    }

    fn restrict_to(&self, mask: u64) -> Self {
        self.induced(mask)
    }
}

impl Restrict for ChordDiag {
    fn ground_size(&self) -> usize {
        self.num_chords()
    }

    fn restrict_to(&self, mask: u64) -> Self {
        self.restrict(mask)
    }
}

/// `(f ∘ π)(B) = Σ_k (-1)^{k-1}/k Σ_{(U_1..U_k)} Π_j f(B|_{U_j})`.
pub fn primitive_eval<T: Restrict>(f: impl Fn(&T) -> Poly, b: &T) -> Poly {
    let n = b.ground_size();
    assert!(n < 20);
    let full = (1u64 << n) - 1;
    let values: Vec<Poly> = (0..=full).map(|u| f(&b.restrict_to(u))).collect();
    // Σ of products grouped by block count
    let mut by_k: Vec<Poly> = vec![Poly::zero(); n + 1];
    for blocks in OrderedPartitionStream::new(full) {
        let mut prod = Poly::one();
        for &u in &blocks {
            prod = &prod * &values[u as usize];
        }
        by_k[blocks.len()] += prod;
    }
    let mut acc = Poly::zero();
    for (k, s) in by_k.into_iter().enumerate().skip(1) {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        acc += s.scale(&ratio(sign, k as i64));
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsCheck {
    pub eps_free: bool,
    /// `F_ε(π(B))`
    pub value: Poly,
    /// `F(π(B))` with `F` the standard-representation specialization.
    pub standard: Poly,
}

impl EpsCheck {
    pub fn holds(&self) -> bool {
        self.eps_free && self.value == self.standard
    }
}

/// Evaluates `F_ε ∘ π` and `F ∘ π` on `b`.
pub fn eps_independence_check(engine: &WglEngine, b: &ChordDiag) -> Result<EpsCheck> {
    if b.num_chords() < 2 {
        return Err(Error::TooFewChords { need: 2, got: b.num_chords() });
    }
    if b.perm().len() > engine.cap() {
        return Err(Error::CapExceeded { m: b.perm().len(), cap: engine.cap() });
    }
    let value = primitive_eval(|d: &ChordDiag| engine.feps(d.perm()).expect("within cap"), b);
    let standard = primitive_eval(|d: &ChordDiag| engine.spec_standard(d.perm()).expect("within cap"), b);
    Ok(EpsCheck {
        eps_free: !value.contains_var(Var::Eps),
        value,
        standard,
    })
}

/// Number of ordered partitions of an `n`-set into `k` blocks, `k! S(n, k)`.
pub fn ordered_partition_count(n: usize, k: usize) -> Coef {
    // S(n, k) by the triangle recurrence
    let mut s = vec![vec![Coef::from_integer(0.into()); k + 1]; n + 1];
    s[0][0] = Coef::one();
    for i in 1..=n {
        for j in 1..=k.min(i) {
            s[i][j] = &s[i - 1][j - 1] + &s[i - 1][j] * Coef::from_integer(j.into());
        }
    }
    let fact: Coef = (1..=k).map(|j| Coef::from_integer(j.into())).product();
    &s[n][k] * fact
}
