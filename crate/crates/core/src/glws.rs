//! The universal gl-weight system on permutations and its specializations.
//!
//! `w(α)` is computed by the Recurrence Rule at a pair of neighbouring points
//! `l, l+1`:
//!
//! ```text
//! w(α) - w(τατ) = w(merge_{l+1}(α∘τ)) - w(merge_l(α∘τ)),   τ = (l l+1)
//! ```
//!
//! where `merge_p(β)` deletes the point `p` from its cycle of `β` (a deleted
//! fixed point is a free loop and contributes a factor `N`). The
//! degenerate configurations (edges between `l` and `l+1`, fixed points) are
//! all covered by this form. Normal forms are concatenations of standard
//! cycles, `w = C_{k1} C_{k2} …`, and fixed points factor out as `C_1`.

use std::collections::HashMap;
use std::sync::RwLock;

use num_traits::Zero;

use crate::algebra::{binomial, coef, ratio, subst_rat, Coef, Poly, RatFunc, Var};
use crate::error::{Error, Result};
use crate::invariants;
use crate::perm::{ChordDiag, Perm};

pub const DEFAULT_CAP: usize = 10;

/// Memoized evaluator of the universal gl-weight system.
///
/// The memo table is shared behind a read-write lock, so one engine can serve
/// parallel verification workers.
#[derive(Debug)]
pub struct WglEngine {
    cap: usize,
    rotation_canonical: bool,
    memo: RwLock<HashMap<Box<[u8]>, Poly>>,
}

impl Default for WglEngine {
    fn default() -> Self {
        WglEngine::new()
    }
}

/// Result of deleting a point from a permutation during a merge.
struct Merged {
    perm: Vec<usize>,
    free_loop: bool,
}

/// Deletes point `p` from its cycle of `img`, renumbering points above `p`.
fn delete_point(img: &[usize], p: usize) -> Merged {
    let free_loop = img[p] == p;
    let succ = img[p];
    let fix = |x: usize| if x > p { x - 1 } else { x };
    let perm = img
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != p)
        .map(|(_, &j)| fix(if j == p { succ } else { j }))
        .collect();
    Merged { perm, free_loop }
}

/// `α∘τ` with `τ = (l l+1)`.
fn compose_swap(img: &[usize], l: usize) -> Vec<usize> {
    let mut out = img.to_vec();
    out.swap(l, l + 1);
    out
}

fn swap_adjacent(img: &[usize], l: usize) -> Vec<usize> {
    let t = |x: usize| {
        if x == l {
            l + 1
        } else if x == l + 1 {
            l
        } else {
            x
        }
    };
    let mut out = vec![0; img.len()];
    for (i, &j) in img.iter().enumerate() {
        out[t(i)] = t(j);
    }
    out
}

/// The three permutations the Recurrence Rule relates to `α` at `l`:
/// `(τατ, merge₁, merge₂)` with merge flags marking free loops.
pub struct RuleTerms {
    pub swapped: Perm,
    pub merge1: Perm,
    pub merge1_loop: bool,
    pub merge2: Perm,
    pub merge2_loop: bool,
}

/// Terms of the Recurrence Rule at 0-based `l` (requires `l + 1 < m`).
pub fn rule_terms(alpha: &Perm, l: usize) -> RuleTerms {
    let img = alpha.images();
    assert!(l + 1 < img.len());
    let composed = compose_swap(img, l);
    let m1 = delete_point(&composed, l + 1);
    let m2 = delete_point(&composed, l);
    RuleTerms {
        swapped: Perm::from_images_unchecked(swap_adjacent(img, l)),
        merge1: Perm::from_images_unchecked(m1.perm),
        merge1_loop: m1.free_loop,
        merge2: Perm::from_images_unchecked(m2.perm),
        merge2_loop: m2.free_loop,
    }
}

/// Progress of the reduction: how many leading points already form an
/// ascending run of the cycle through point 0, and how far away the next
/// point of that cycle sits. `None` when that cycle is a standard block.
fn progress(img: &[usize]) -> Option<(usize, usize)> {
    let m = img.len();
    let mut c = img[0];
    let mut j = 1;
    while c == j {
        c = img[c];
        j += 1;
    }
    (c != 0).then_some((j, m - c))
}

/// Length of the shortest nonempty prefix `0..j` mapped into itself.
fn first_block(img: &[usize]) -> usize {
    let mut reach = 0;
    for (i, &j) in img.iter().enumerate() {
        reach = reach.max(j);
        if reach == i {
            return i + 1;
        }
    }
    img.len()
}

fn rotated(img: &[usize], k: usize) -> Vec<usize> {
    let m = img.len();
    let mut out = vec![0; m];
    for (i, &j) in img.iter().enumerate() {
        out[(i + k) % m] = (j + k) % m;
    }
    out
}

impl WglEngine {
    pub fn new() -> Self {
        WglEngine::with_cap(DEFAULT_CAP)
    }

    pub fn with_cap(cap: usize) -> Self {
        WglEngine {
            cap,
            rotation_canonical: true,
            memo: RwLock::new(HashMap::new()),
        }
    }

    /// Memoize on exact one-line encodings only, without identifying cyclic
    /// shifts.
    pub fn without_rotation(mut self) -> Self {
        self.rotation_canonical = false;
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    pub fn clear(&self) {
        self.memo.write().unwrap().clear();
    }

    /// Value of the universal gl-weight system, a polynomial in `N` and the
    /// Casimirs `C_k`.
    pub fn wgl(&self, alpha: &Perm) -> Result<Poly> {
        if alpha.len() > self.cap {
            return Err(Error::CapExceeded { m: alpha.len(), cap: self.cap });
        }
        Ok(self.eval(alpha.images()))
    }

    fn eval(&self, img: &[usize]) -> Poly {
        let m = img.len();
        if m == 0 {
            return Poly::one();
        }
        let fixed = img.iter().enumerate().filter(|&(i, &j)| i == j).count();
        if fixed > 0 {
            let rest: Vec<usize> = {
                let keep: Vec<usize> = (0..m).filter(|&i| img[i] != i).collect();
                let mut rank = vec![0; m];
                for (k, &i) in keep.iter().enumerate() {
                    rank[i] = k;
                }
                keep.iter().map(|&i| rank[img[i]]).collect()
            };
            let c1 = Poly::casimir(1).pow(fixed as u32);
            return &c1 * &self.eval(&rest);
        }

        let rotations = if self.rotation_canonical { m } else { 1 };
        let mut best: Option<((usize, usize), Vec<usize>)> = None;
        for k in 0..rotations {
            let r = if k == 0 { img.to_vec() } else { rotated(img, k) };
            let b = first_block(&r);
            if b < m {
                return &self.eval(&r[..b]) * &self.eval(&r[b..].iter().map(|&j| j - b).collect::<Vec<_>>());
            }
            let Some(score) = progress(&r) else {
                // the cycle through 0 is a standard block spanning everything
                return Poly::casimir(m as u32);
            };
            let better = match &best {
                None => true,
                Some((s, v)) => score > *s || (score == *s && r < *v),
            };
            if better {
                best = Some((score, r));
            }
        }
        let (_, rep) = best.expect("m > 0");

        let key: Box<[u8]> = rep.iter().map(|&j| j as u8).collect();
        if let Some(p) = self.memo.read().unwrap().get(&key) {
            return p.clone();
        }
        let value = self.reduce(&rep);
        self.memo.write().unwrap().insert(key, value.clone());
        value
    }

    /// One application of the Recurrence Rule, moving the next point of the
    /// cycle through 0 one step to the left.
    fn reduce(&self, img: &[usize]) -> Poly {
        let (j, gap) = progress(img).expect("not a standard block");
        let p = img.len() - gap;
        debug_assert!(p > j);
        let l = p - 1;
        let composed = compose_swap(img, l);
        let mut value = self.eval(&swap_adjacent(img, l));
        value += self.merged(delete_point(&composed, l + 1));
        value -= self.merged(delete_point(&composed, l));
        value
    }

    fn merged(&self, m: Merged) -> Poly {
        let v = self.eval(&m.perm);
        if m.free_loop {
            v.mul_monomial(&crate::algebra::Monomial::var(Var::N, 1))
        } else {
            v
        }
    }

    /// Value of a Recurrence Rule term, including the free-loop factor.
    pub fn term_value(&self, p: &Perm, free_loop: bool) -> Poly {
        self.merged(Merged {
            perm: p.images().to_vec(),
            free_loop,
        })
    }

    /// `F(α)`: `C_k ↦ N^{k-1}`.
    pub fn spec_standard(&self, alpha: &Perm) -> Result<Poly> {
        Ok(subst_casimirs(&self.wgl(alpha)?, |k| Poly::var_pow(Var::N, k - 1)))
    }

    /// `F_ε(α)` via the Casimir substitution.
    pub fn feps(&self, alpha: &Perm) -> Result<Poly> {
        Ok(subst_casimirs(&self.wgl(alpha)?, feps_casimir))
    }

    /// gl(1|1) specialization at `C_1 = 1, C_2 = u`: `N ↦ 0`,
    /// `C_k ↦ k (u/2)^{k-1}`.
    pub fn gl11_skewchar(&self, alpha: &Perm) -> Result<Poly> {
        let w = self.wgl(alpha)?;
        let mut b = casimir_bindings(&w, gl11_casimir);
        b.insert(Var::N, Poly::zero());
        Ok(w.subst(&b))
    }

    /// `C_k ↦ N` for all `k`.
    pub fn casimir_to_n(&self, alpha: &Perm) -> Result<Poly> {
        Ok(subst_casimirs(&self.wgl(alpha)?, |_| Poly::var(Var::N)))
    }

    /// `F_ε(B)` written as a polynomial in `v = 2ε + Nε²` and `N`: the
    /// refined skew characteristic polynomial `Q̄_{γ(B)}(v, N)`. Fails with
    /// a panic-free mismatch report if the two routes disagree.
    pub fn feps_in_v(&self, b: &ChordDiag) -> Result<std::result::Result<Poly, FepsMismatch>> {
        let q = invariants::refined_skew_char_graph(&b.intersection_graph());
        let in_v = q.subst(&HashMap::from([(Var::U, Poly::var(Var::V)), (Var::W, Poly::var(Var::N))]));
        let expanded = in_v.subst(&HashMap::from([(Var::V, v_in_eps())]));
        let direct = self.feps(b.perm())?;
        Ok(if expanded == direct {
            Ok(in_v)
        } else {
            Err(FepsMismatch { in_v, expanded, direct })
        })
    }

    /// `L(α)`: `F_ε(α)` at `N = z² - 1`, `ε = 1/(1 - z)`.
    pub fn interlace_perm(&self, alpha: &Perm) -> Result<RatFunc> {
        interlace_substitution(&self.feps(alpha)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FepsMismatch {
    pub in_v: Poly,
    pub expanded: Poly,
    pub direct: Poly,
}

/// `v = 2ε + Nε²`
pub fn v_in_eps() -> Poly {
    let eps = Poly::var(Var::Eps);
    &eps.scale(&coef(2)) + &(&Poly::var(Var::N) * &eps.pow(2))
}

/// `C_k ↦ Nε^k + Σ_{i=1..k} binom(k, i) N^{i-1} ε^{k-i}`, the expansion of
/// `((N + ε)^k - (1 - N²) ε^k) / N`.
pub fn feps_casimir(k: u32) -> Poly {
    let mut p = Poly::var(Var::N) * Poly::var_pow(Var::Eps, k);
    for i in 1..=k {
        let c = Coef::from_integer(binomial(k as u64, i as u64));
        p += Poly::var_pow(Var::N, i - 1).mul_monomial(&crate::algebra::Monomial::var(Var::Eps, k - i)).scale(&c);
    }
    p
}

/// `C_k ↦ k (u/2)^{k-1}`.
pub fn gl11_casimir(k: u32) -> Poly {
    let c = coef(k as i64) * num_traits::pow(ratio(1, 2), (k - 1) as usize);
    Poly::var_pow(Var::U, k - 1).scale(&c)
}

fn casimir_bindings(p: &Poly, f: impl Fn(u32) -> Poly) -> HashMap<Var, Poly> {
    p.vars()
        .into_iter()
        .filter_map(|v| match v {
            Var::Casimir(k) => Some((v, f(k))),
            _ => None,
        })
        .collect()
}

/// Substitutes `f(k)` for every Casimir `C_k` occurring in `p`.
pub fn subst_casimirs(p: &Poly, f: impl Fn(u32) -> Poly) -> Poly {
    p.subst(&casimir_bindings(p, f))
}

/// `N ↦ z² - 1`, `ε ↦ 1/(1 - z)`.
pub fn interlace_substitution(p: &Poly) -> Result<RatFunc> {
    let n = RatFunc::from_dense(vec![coef(-1), Coef::zero(), coef(1)], 0);
    let eps = RatFunc::pole(1);
    subst_rat(p, &HashMap::from([(Var::N, n), (Var::Eps, eps)]))
}

/// `F_ε(α) = Σ_U N^{c(α) - c(α|_U) + f(α|_U) - 1} ε^{m - |U|}` summed over all
/// `2^m` subsets of points.
pub fn feps_direct(alpha: &Perm) -> Poly {
    let m = alpha.len();
    assert!(m < 64);
    let c = alpha.cycle_count() as i64;
    let mut counts: HashMap<(u32, u32), i64> = HashMap::new();
    for u in 0..1u64 << m {
        let sub = alpha.subperm(u);
        let n_exp = c - sub.cycle_count() as i64 + sub.face_count() as i64 - 1;
        debug_assert!(n_exp >= 0);
        let e_exp = m as u32 - u.count_ones();
        *counts.entry((n_exp as u32, e_exp)).or_default() += 1;
    }
    Poly::from_terms(counts.into_iter().map(|((a, b), k)| {
        (
            crate::algebra::Monomial::from_pairs([(Var::N, a), (Var::Eps, b)]),
            coef(k),
        )
    }))
}

/// `L(α)` computed from the subset-sum form of `F_ε`.
pub fn interlace_perm_direct(alpha: &Perm) -> Result<RatFunc> {
    interlace_substitution(&feps_direct(alpha))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Perm {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn wgl_of_132() {
        let e = WglEngine::new();
        assert_eq!(e.wgl(&perm("(1 3 2)")).unwrap(), p("C3 + C1^2 - N*C2"));
    }

    #[test]
    fn wgl_of_standard_cycles() {
        let e = WglEngine::new();
        for m in 1..=6 {
            assert_eq!(e.wgl(&Perm::standard_cycle(m)).unwrap(), Poly::casimir(m as u32));
        }
    }

    #[test]
    fn wgl_of_k3_diagram() {
        let e = WglEngine::new();
        assert_eq!(
            e.wgl(&perm("(1 4)(2 5)(3 6)")).unwrap(),
            p("C2^3 + 3*C1^2*C2 - 3*N*C2^2 + 2*N^2*C2 - 2*N*C1^2")
        );
    }

    #[test]
    fn rotation_off_agrees() {
        let a = WglEngine::new();
        let b = WglEngine::new().without_rotation();
        for alpha in crate::perm::all_perms(5) {
            assert_eq!(a.wgl(&alpha).unwrap(), b.wgl(&alpha).unwrap(), "{alpha}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        let e = WglEngine::with_cap(3);
        assert_eq!(
            e.wgl(&Perm::identity(4)),
            Err(Error::CapExceeded { m: 4, cap: 3 })
        );
    }

    #[test]
    fn feps_casimirs_match_printed_values() {
        assert_eq!(feps_casimir(1), p("1 + N*eps"));
        assert_eq!(feps_casimir(2), p("N + 2*eps + N*eps^2"));
        assert_eq!(feps_casimir(3), p("N^2 + 3*N*eps + 3*eps^2 + N*eps^3"));
    }

    #[test]
    fn gl11_casimirs() {
        assert_eq!(gl11_casimir(1), Poly::one());
        assert_eq!(gl11_casimir(2), Poly::var(Var::U));
        assert_eq!(gl11_casimir(3), p("3/4*u^2"));
        assert_eq!(gl11_casimir(4), p("1/2*u^3"));
    }

    #[test]
    fn feps_examples() {
        let e = WglEngine::new();
        assert_eq!(e.feps(&perm("(1 2)")).unwrap(), p("N + 2*eps + N*eps^2"));
        assert_eq!(
            e.feps(&perm("(1 3)(2 4)")).unwrap(),
            p("N^2*eps^4 + 4*N*eps^3 + 2*N^2*eps^2 + 4*eps^2 + 4*N*eps + 1")
        );
        assert_eq!(
            e.feps(&perm("(1 4)(2 5)(3 6)")).unwrap(),
            p("N + 6*eps + 15*N*eps^2 + 8*eps^3 + 12*N^2*eps^3 + 12*N*eps^4 + 3*N^3*eps^4 + 6*N^2*eps^5 + N^3*eps^6")
        );
    }

    #[test]
    fn feps_direct_examples() {
        assert_eq!(feps_direct(&perm("(1,2,3)")), p("N*eps^3 + 3*eps^2 + 3*N*eps + N^2"));
        assert_eq!(feps_direct(&perm("(1,3,2)")), p("N*eps^3 + 3*eps^2 + 3*N*eps + 1"));
    }

    #[test]
    fn spec_standard_examples() {
        let e = WglEngine::new();
        assert_eq!(e.spec_standard(&perm("(1 3 2)")).unwrap(), Poly::one());
        assert_eq!(e.spec_standard(&perm("(1 3)(2 4)")).unwrap(), Poly::one());
        for m in 1..=5 {
            assert_eq!(
                e.spec_standard(&Perm::standard_cycle(m)).unwrap(),
                Poly::var_pow(Var::N, m as u32 - 1)
            );
        }
    }

    #[test]
    fn casimir_to_n_examples() {
        let e = WglEngine::new();
        assert_eq!(e.casimir_to_n(&Perm::standard_cycle(4)).unwrap(), Poly::var(Var::N));
        assert_eq!(e.casimir_to_n(&perm("(1 3)(2 4)")).unwrap(), p("N^2"));
        assert_eq!(e.casimir_to_n(&perm("(1 3 2)")).unwrap(), p("N"));
    }

    #[test]
    fn gl11_examples() {
        let e = WglEngine::new();
        assert_eq!(e.gl11_skewchar(&perm("(1 3)(2 4)")).unwrap(), p("u^2 + 1"));
        assert_eq!(e.gl11_skewchar(&perm("(1 2)")).unwrap(), p("u"));
    }

    #[test]
    fn feps_in_v_examples() {
        let e = WglEngine::new();
        let d = |s: &str| ChordDiag::new(perm(s)).unwrap();
        assert_eq!(e.feps_in_v(&d("(1 3)(2 4)")).unwrap().unwrap(), p("v^2 + 2*N*v + 1"));
        assert_eq!(e.feps_in_v(&d("(1 2)")).unwrap().unwrap(), p("v + N"));
        assert_eq!(e.feps_in_v(&d("(1 2)(3 4)")).unwrap().unwrap(), p("v^2 + 2*N*v + N^2"));
    }

    #[test]
    fn interlace_perm_examples() {
        let e = WglEngine::new();
        // z^2 (z - 2)(z^3 - z - 1) = z^6 - 2z^5 - z^4 + z^3 + 2z^2
        let l123 = e.interlace_perm(&perm("(1,2,3)")).unwrap();
        assert_eq!(l123.dpow(), 2);
        assert_eq!(l123.numerator(), p("z^6 - 2*z^5 - z^4 + z^3 + 2*z^2"));
        // -z^2 (3z - 4)
        let l132 = e.interlace_perm(&perm("(1,3,2)")).unwrap();
        assert_eq!(l132.dpow(), 2);
        assert_eq!(l132.numerator(), p("-3*z^3 + 4*z^2"));
    }

    #[test]
    fn rule_terms_of_132() {
        let t = rule_terms(&perm("(1 3 2)"), 1);
        assert_eq!(t.swapped, Perm::standard_cycle(3));
        assert_eq!(t.merge1, Perm::identity(2));
        assert!(!t.merge1_loop);
        assert_eq!(t.merge2, perm("(1 2)"));
        assert!(t.merge2_loop);
    }
}
