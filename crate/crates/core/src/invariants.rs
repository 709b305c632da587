//! Skew-characteristic and interlace polynomials of graphs and delta-matroids.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{coef, Monomial, Poly, Var};
use crate::dmat::DMat;
use crate::graphs::{ones, Graph};

/// Builds `Σ count · a^i b^j` from exponent-pair counts.
fn from_counts(a: Var, b: Var, counts: HashMap<(u32, u32), i64>) -> Poly {
    Poly::from_terms(
        counts
            .into_iter()
            .map(|((i, j), k)| (Monomial::from_pairs([(a, i), (b, j)]), coef(k))),
    )
}

fn count_subsets(n: usize, mut f: impl FnMut(u64) -> (u32, u32)) -> HashMap<(u32, u32), i64> {
    let mut counts = HashMap::new();
    for u in 0..1u64 << n {
        *counts.entry(f(u)).or_default() += 1;
    }
    counts
}

/// `Q_G(u) = Σ_{U nondegenerate} u^{|V| - |U|}`.
pub fn skew_char(g: &Graph) -> Poly {
    let n = g.num_vertices();
    let mut counts = vec![0i64; n + 1];
    for u in 0..1u64 << n {
        if g.corank_of(u) == 0 {
            counts[n - u.count_ones() as usize] += 1;
        }
    }
    Poly::from_terms(
        counts
            .into_iter()
            .enumerate()
            .filter(|&(_, k)| k != 0)
            .map(|(e, k)| (Monomial::var(Var::U, e as u32), coef(k))),
    )
}

/// `Q̄_G(u, w) = Σ_U u^{|V| - |U|} w^{corank A_U}`.
pub fn refined_skew_char_graph(g: &Graph) -> Poly {
    let n = g.num_vertices();
    let counts = count_subsets(n, |u| (n as u32 - u.count_ones(), g.corank_of(u) as u32));
    from_counts(Var::U, Var::W, counts)
}

/// `Q̄_D(u, w) = Σ_U u^{|E| - |U|} w^{d_D(U)}`.
pub fn refined_skew_char_dmat(d: &DMat) -> Poly {
    let n = d.ground_size();
    let counts = count_subsets(n, |u| (n as u32 - u.count_ones(), d.distance(u as u32)));
    from_counts(Var::U, Var::W, counts)
}

/// `L_D(x) = Σ_U x^{d_D(U)}`.
pub fn interlace_dmat(d: &DMat) -> Poly {
    let counts = count_subsets(d.ground_size(), |u| (d.distance(u as u32), 0));
    from_counts(Var::X, Var::Y, counts)
}

/// `L̄_D(x, y) = Σ_U x^{|U|} y^{d_D(U)}`.
pub fn two_var_interlace(d: &DMat) -> Poly {
    let counts = count_subsets(d.ground_size(), |u| (u.count_ones(), d.distance(u as u32)));
    from_counts(Var::X, Var::Y, counts)
}

/// Which edge the vertex recursion eliminates next.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgePolicy {
    First,
    Random(u64),
}

/// `L_G(x)` by `L_G = L_{G∖a} + L_{G^{ab}∖b}` with `L = (x+1)^n` on
/// edgeless graphs.
pub fn interlace_graph_recursive(g: &Graph) -> Poly {
    interlace_graph_with(g, EdgePolicy::First)
}

pub fn interlace_graph_with(g: &Graph, policy: EdgePolicy) -> Poly {
    let mut rec = Recursion {
        memo: HashMap::new(),
        rng: match policy {
            EdgePolicy::First => None,
            EdgePolicy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        },
    };
    rec.eval(g)
}

struct Recursion {
    memo: HashMap<Graph, Poly>,
    rng: Option<ChaCha8Rng>,
}

impl Recursion {
    fn eval(&mut self, g: &Graph) -> Poly {
        let edge = match &mut self.rng {
            None => g.first_edge(),
            Some(rng) => g.edges().choose(rng).copied(),
        };
        let Some((a, b)) = edge else {
            let x1 = &Poly::var(Var::X) + &Poly::one();
            return x1.pow(g.num_vertices() as u32);
        };
        if let Some(p) = self.memo.get(g) {
            return p.clone();
        }
        let pivoted = g.pivot(a, b).expect("edge").remove_vertex(b);
        let value = &self.eval(&g.remove_vertex(a)) + &self.eval(&pivoted);
        self.memo.insert(g.clone(), value.clone());
        value
    }
}

/// `x ↦ x - 1`, the normalization with `x^n` on edgeless graphs.
pub fn shifted(p: &Poly) -> Poly {
    p.subst(&HashMap::from([(Var::X, &Poly::var(Var::X) - &Poly::one())]))
}

/// Outcome of checking one element against the two-variable recurrences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementKind {
    Loop,
    Coloop,
    Ordinary,
}

/// Checks the deletion recurrence for `L̄` at every element of `d`:
/// loop `(1 + xy) L̄_{D∖e}`, coloop `(x + y) L̄_{D*e∖e}`, otherwise
/// `L̄_{D∖e} + x L̄_{D*e∖e}`. Returns the elements where it fails.
pub fn abs04_failures(d: &DMat) -> Vec<(usize, ElementKind)> {
    let lhs = two_var_interlace(d);
    let (x, y) = (Poly::var(Var::X), Poly::var(Var::Y));
    let mut bad = Vec::new();
    for e in 0..d.ground_size() {
        let dual_del = || two_var_interlace(&d.partial_dual(1 << e).delete(e).expect("not a coloop after dual"));
        let (kind, rhs) = if d.is_loop(e) {
            let del = two_var_interlace(&d.delete(e).expect("loop"));
            (ElementKind::Loop, &(&Poly::one() + &(&x * &y)) * &del)
        } else if d.is_coloop(e) {
            (ElementKind::Coloop, &(&x + &y) * &dual_del())
        } else {
            let del = two_var_interlace(&d.delete(e).expect("not a coloop"));
            (ElementKind::Ordinary, &del + &(&x * &dual_del()))
        };
        if rhs != lhs {
            bad.push((e, kind));
        }
    }
    bad
}

/// `L̄_D(u^{-1}, v) · u^{|E|}` with `y` renamed to `w`, comparable with
/// [`refined_skew_char_dmat`].
pub fn two_var_to_refined(d: &DMat) -> Poly {
    let n = d.ground_size() as u32;
    let l = two_var_interlace(d);
    Poly::from_terms(l.terms().map(|(m, c)| {
        let i = m.exponent(Var::X);
        let j = m.exponent(Var::Y);
        (Monomial::from_pairs([(Var::U, n - i), (Var::W, j)]), c.clone())
    }))
}

/// A named graph invariant, usable as a first-class value.
#[derive(Clone)]
pub struct GraphInvariant {
    name: String,
    f: Arc<dyn Fn(&Graph) -> Poly + Send + Sync>,
}

impl fmt::Debug for GraphInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GraphInvariant({})", self.name)
    }
}

impl GraphInvariant {
    pub fn new(name: impl Into<String>, f: impl Fn(&Graph) -> Poly + Send + Sync + 'static) -> Self {
        GraphInvariant { name: name.into(), f: Arc::new(f) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, g: &Graph) -> Poly {
        (self.f)(g)
    }

    pub fn skew_char() -> Self {
        Self::new("skew_char", skew_char)
    }

    pub fn refined_skew_char() -> Self {
        Self::new("refined_skew_char", refined_skew_char_graph)
    }

    pub fn interlace() -> Self {
        Self::new("interlace", interlace_graph_recursive)
    }

    /// 1 on nondegenerate graphs, 0 otherwise.
    pub fn nondegeneracy() -> Self {
        Self::new("nondegeneracy", |g| if g.is_nondegenerate() { Poly::one() } else { Poly::zero() })
    }

    /// `u^{|V|}`
    pub fn u_power() -> Self {
        Self::new("u^|V|", |g| Poly::var_pow(Var::U, g.num_vertices() as u32))
    }

    /// `w^{corank A_G}`
    pub fn w_corank() -> Self {
        Self::new("w^corank", |g| Poly::var_pow(Var::W, g.corank() as u32))
    }

    /// Convolution unit: 1 on the empty graph, 0 elsewhere.
    pub fn unit() -> Self {
        Self::new("unit", |g| if g.num_vertices() == 0 { Poly::one() } else { Poly::zero() })
    }
}

/// `(f ∘ g)(G) = Σ_{U ⊆ V} f(G|_U) g(G|_{V∖U})`.
pub fn convolution(f: &GraphInvariant, g: &GraphInvariant, graph: &Graph) -> Poly {
    let all = graph.vertex_mask();
    let mut acc = Poly::zero();
    for u in 0..=all {
        let a = f.eval(&graph.induced(u));
        if a.is_zero() {
            continue;
        }
        acc += &a * &g.eval(&graph.induced(all & !u));
    }
    acc
}

/// `f(G) - f(G'_ab) = f(G~_ab) - f(G~'_ab)`.
pub fn graph_4t_check(f: &GraphInvariant, g: &Graph, a: usize, b: usize) -> crate::Result<bool> {
    let [prime, tilde, tilde_prime] = g.four_term_images(a, b)?;
    Ok(&f.eval(g) - &f.eval(&prime) == &f.eval(&tilde) - &f.eval(&tilde_prime))
}

/// Vertex set of `g` split into the masks of its connected components.
pub fn components(g: &Graph) -> Vec<u64> {
    let mut left = g.vertex_mask();
    let mut out = Vec::new();
    while left != 0 {
        let mut seen = left & left.wrapping_neg();
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in ones(frontier) {
                next |= g.neighbors(v);
            }
            frontier = next & !seen;
            seen |= next;
        }
        out.push(seen);
        left &= !seen;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::all_graphs;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn diamond() -> Graph {
        Graph::from_edges(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn skew_char_small() {
        assert_eq!(skew_char(&Graph::empty(1)), p("u"));
        assert_eq!(skew_char(&Graph::complete(2)), p("u^2 + 1"));
        assert_eq!(skew_char(&Graph::empty(0)), Poly::one());
    }

    #[test]
    fn refined_small() {
        assert_eq!(refined_skew_char_graph(&Graph::complete(2)), p("u^2 + 2*u*w + 1"));
        assert_eq!(refined_skew_char_graph(&Graph::empty(1)), p("u + w"));
        assert_eq!(refined_skew_char_graph(&Graph::empty(3)), p("u + w").pow(3));
        let d = DMat::from_graph(&Graph::complete(2)).unwrap();
        assert_eq!(refined_skew_char_dmat(&d), p("u^2 + 2*u*w + 1"));
    }

    #[test]
    fn interlace_small() {
        assert_eq!(interlace_graph_recursive(&diamond()), p("2*x^2 + 8*x + 6"));
        assert_eq!(interlace_graph_recursive(&Graph::complete(3)), p("4*x + 4"));
        assert_eq!(interlace_dmat(&DMat::from_graph(&Graph::complete(3)).unwrap()), p("4*x + 4"));
        assert_eq!(interlace_graph_recursive(&Graph::empty(3)), p("x + 1").pow(3));
        assert_eq!(shifted(&p("4*x + 4")), p("4*x"));
    }

    #[test]
    fn random_policy_agrees() {
        for g in all_graphs(5) {
            let a = interlace_graph_recursive(&g);
            assert_eq!(a, interlace_graph_with(&g, EdgePolicy::Random(7)), "{g}");
        }
    }

    #[test]
    fn two_var_small() {
        let k1 = DMat::from_graph(&Graph::empty(1)).unwrap();
        assert_eq!(two_var_interlace(&k1), p("1 + x*y"));
        let k2 = DMat::from_graph(&Graph::complete(2)).unwrap();
        assert_eq!(two_var_interlace(&k2), p("1 + 2*x*y + x^2"));
        assert!(abs04_failures(&k2).is_empty());
        assert_eq!(two_var_to_refined(&k2), refined_skew_char_dmat(&k2));
    }

    #[test]
    fn convolution_laws() {
        for n in 0..=4 {
            for g in all_graphs(n) {
                let q = convolution(&GraphInvariant::nondegeneracy(), &GraphInvariant::u_power(), &g);
                assert_eq!(q, skew_char(&g));
                let r = convolution(&GraphInvariant::w_corank(), &GraphInvariant::u_power(), &g);
                assert_eq!(r, refined_skew_char_graph(&g));
                let s = GraphInvariant::skew_char();
                assert_eq!(convolution(&s, &GraphInvariant::unit(), &g), skew_char(&g));
            }
        }
    }

    #[test]
    fn skew_char_then_corank_overcounts_on_k2() {
        let g = Graph::complete(2);
        let r = convolution(&GraphInvariant::skew_char(), &GraphInvariant::w_corank(), &g);
        assert_eq!(r, p("u^2 + 2*u*w + 2"));
        assert_eq!(refined_skew_char_graph(&g), p("u^2 + 2*u*w + 1"));
    }

    #[test]
    fn four_term_for_interlace_on_diamond() {
        let f = GraphInvariant::interlace();
        let g = diamond();
        for a in 0..4 {
            for b in 0..4 {
                if a != b {
                    assert!(graph_4t_check(&f, &g, a, b).unwrap());
                }
            }
        }
    }

    #[test]
    fn component_split() {
        let g = Graph::complete(2).disjoint_union(&Graph::path(3));
        assert_eq!(components(&g), vec![0b00011, 0b11100]);
        assert_eq!(components(&Graph::empty(0)), Vec::<u64>::new());
    }
}
