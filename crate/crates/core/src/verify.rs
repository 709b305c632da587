//! Exhaustive and randomized verification suites.

use std::collections::HashMap;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Poly, Var};
use crate::dmat::DMat;
use crate::error::{Error, Result};
use crate::glws::{self, rule_terms, WglEngine, DEFAULT_CAP};
use crate::graphs::{all_graphs, Graph};
use crate::hopf::{eps_independence_check, primitive_eval};
use crate::invariants::{self as inv, EdgePolicy, GraphInvariant};
use crate::perm::{all_chord_diagrams, all_perms, ChordDiag, Perm};

pub const SUITES: [&str; 19] = [
    "tgl-soundness",
    "tfe",
    "tsr",
    "trsc",
    "tis",
    "fourterm-graphs",
    "fourterm-diagrams",
    "pivot-invariance",
    "perm-recurrence",
    "hopf-eps",
    "dmat-axiom",
    "distance-corank",
    "distance-faces",
    "gl11-skewchar",
    "interlace-equivalence",
    "abs04",
    "partial-dual-invariance",
    "casimir-N",
    "positivity-experiment",
];

/// Suites that report findings and never fail.
pub const EXPERIMENTS: [&str; 2] = ["perm-recurrence", "positivity-experiment"];

/// Enumeration bounds; `None` selects the suite's own default.
#[derive(Debug, Clone, Default)]
pub struct Bounds {
    pub max_m: Option<usize>,
    pub max_chords: Option<usize>,
    pub max_vertices: Option<usize>,
    pub order: Option<usize>,
    pub random: Option<usize>,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifySuiteReport {
    pub suite: String,
    pub instances: usize,
    pub failures: Vec<String>,
    pub findings: Vec<String>,
    pub experiment: bool,
    pub wall_seconds: f64,
}

impl VerifySuiteReport {
    pub fn passed(&self) -> bool {
        self.experiment || self.failures.is_empty()
    }
}

/// Runs `f` over `items` in parallel; failures come back in input order.
fn check<T: Sync>(items: &[T], f: impl Fn(&T) -> Option<String> + Sync + Send) -> (usize, Vec<String>) {
    let failures = items.par_iter().filter_map(f).collect();
    (items.len(), failures)
}

fn perms_up_to(max_m: usize) -> Vec<Perm> {
    (0..=max_m).flat_map(all_perms).collect()
}

fn diagrams(min: usize, max: usize) -> Vec<ChordDiag> {
    (min..=max).flat_map(all_chord_diagrams).collect()
}

fn graphs_up_to(max_n: usize) -> Vec<Graph> {
    (0..=max_n).flat_map(all_graphs).collect()
}

fn random_perms(m: usize, count: usize, seed: u64) -> Vec<Perm> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ m as u64);
    (0..count)
        .map(|_| {
            let mut img: Vec<usize> = (0..m).collect();
            img.shuffle(&mut rng);
            Perm::from_images_unchecked(img)
        })
        .collect()
}

fn n_pow(e: usize) -> Poly {
    Poly::var_pow(Var::N, e as u32)
}

/// `p(x)` at `x = z^2`.
fn in_z_squared(p: &Poly) -> Poly {
    p.subst(&HashMap::from([(Var::X, Poly::var_pow(Var::Z, 2))]))
}

/// Adjacent ends of distinct chords, 1-based, including the pair
/// `(2n, 1)` across the base point.
fn adjacent_end_pairs(b: &ChordDiag) -> Vec<(usize, usize)> {
    let m = b.perm().len();
    (0..m)
        .map(|p| (p, (p + 1) % m))
        .filter(|&(p, q)| m > 2 && b.perm().apply(p) != q)
        .map(|(p, q)| (p + 1, q + 1))
        .collect()
}

struct Outcome {
    instances: usize,
    failures: Vec<String>,
    findings: Vec<String>,
}

impl From<(usize, Vec<String>)> for Outcome {
    fn from((instances, failures): (usize, Vec<String>)) -> Self {
        Outcome { instances, failures, findings: Vec::new() }
    }
}

pub fn run_suite(name: &str, bounds: &Bounds) -> Result<VerifySuiteReport> {
    if !SUITES.contains(&name) {
        return Err(Error::UnknownSuite(name.to_string()));
    }
    let start = Instant::now();
    let b = bounds;
    let max_m = |d: usize| b.max_m.unwrap_or(d);
    let max_chords = |d: usize| b.max_chords.unwrap_or(d);
    let max_vertices = b.max_vertices.unwrap_or(5);
    let order = b.order.unwrap_or(12);
    let random = b.random.unwrap_or(100);
    let engine_for = |m: usize| WglEngine::with_cap(m.max(DEFAULT_CAP));

    let out: Outcome = match name {
        "tgl-soundness" => tgl_soundness(max_m(6), &engine_for(max_m(6))),
        "tfe" => {
            let m = max_m(7);
            let engine = engine_for(m + 2);
            let mut items = perms_up_to(m);
            items.extend(random_perms(m + 1, random, b.seed));
            items.extend(random_perms(m + 2, random, b.seed));
            check(&items, |a| (engine.feps(a).unwrap() != glws::feps_direct(a)).then(|| a.to_string())).into()
        }
        "tsr" => {
            let engine = engine_for(max_m(7));
            check(&perms_up_to(max_m(7)), |a| {
                (engine.spec_standard(a).unwrap() != n_pow(a.face_count() - 1)).then(|| a.to_string())
            })
            .into()
        }
        "trsc" => {
            let n = max_chords(5);
            let engine = engine_for(2 * n);
            check(&diagrams(0, n), |d| engine.feps_in_v(d).unwrap().is_err().then(|| d.to_string())).into()
        }
        "tis" => tis(max_chords(5), &engine_for(2 * max_chords(5))),
        "fourterm-graphs" => {
            let invs = [GraphInvariant::skew_char(), GraphInvariant::refined_skew_char(), GraphInvariant::interlace()];
            let gs = graphs_up_to(max_vertices);
            let mut instances = 0;
            let mut failures = Vec::new();
            for f in &invs {
                let (n, bad) = check(&gs, |g| {
                    let n = g.num_vertices();
                    let bad: Vec<String> = (0..n)
                        .flat_map(|a| (0..n).map(move |c| (a, c)))
                        .filter(|&(a, c)| a != c && !inv::graph_4t_check(f, g, a, c).unwrap())
                        .map(|(a, c)| format!("{} {g} a={} b={}", f.name(), a + 1, c + 1))
                        .collect();
                    (!bad.is_empty()).then(|| bad.join("; "))
                });
                instances += n;
                failures.extend(bad);
            }
            (instances, failures).into()
        }
        "fourterm-diagrams" => {
            let n = max_chords(3);
            let engine = engine_for(2 * n);
            check(&diagrams(2, n), |d| {
                let bad: Vec<String> = adjacent_end_pairs(d)
                    .into_iter()
                    .filter(|&(e, f)| !four_term_holds(&engine, d, e, f))
                    .map(|(e, f)| format!("{d} ends {e},{f}"))
                    .collect();
                (!bad.is_empty()).then(|| bad.join("; "))
            })
            .into()
        }
        "pivot-invariance" => {
            let m = max_m(8);
            let engine = engine_for(m);
            let items: Vec<Perm> = perms_up_to(m)
                .into_iter()
                .filter(|a| !a.interlacing_two_cycle_pairs().is_empty())
                .collect();
            check(&items, |a| {
                let l = engine.interlace_perm(a).unwrap();
                let bad: Vec<String> = a
                    .interlacing_two_cycle_pairs()
                    .into_iter()
                    .filter(|&(x, y)| engine.interlace_perm(&a.pivot_tracked(x, y).0).unwrap() != l)
                    .map(|(x, y)| format!("{a} a={},{} b={},{}", x.0 + 1, x.1 + 1, y.0 + 1, y.1 + 1))
                    .collect();
                (!bad.is_empty()).then(|| bad.join("; "))
            })
            .into()
        }
        "perm-recurrence" => perm_recurrence(max_m(7), &engine_for(max_m(7))),
        "hopf-eps" => {
            let n = max_chords(4);
            let engine = engine_for(2 * n);
            let mut out: Outcome = check(&diagrams(2, n), |d| {
                let c = eps_independence_check(&engine, d).unwrap();
                (!c.holds()).then(|| format!("{d} -> {}", c.value))
            })
            .into();
            let k1 = ChordDiag::new(Perm::standard_cycle(2)).unwrap();
            let v = primitive_eval(|d: &ChordDiag| engine.feps(d.perm()).unwrap(), &k1);
            out.instances += 1;
            if v != glws::feps_casimir(2) {
                out.failures.push(format!("{k1} -> {v}"));
            }
            let k2 = ChordDiag::new("(1 3)(2 4)".parse().unwrap()).unwrap();
            if let Ok(c) = eps_independence_check(&engine, &k2) {
                out.findings.push(format!("value on {k2}: {}", c.value));
            }
            out
        }
        "dmat-axiom" => check(&graphs_up_to(max_vertices), |g| {
            (!DMat::from_graph(g).unwrap().check_symmetric_exchange()).then(|| g.to_string())
        })
        .into(),
        "distance-corank" => check(&graphs_up_to(max_vertices), |g| {
            let d = DMat::from_graph(g).unwrap();
            let ok = d.subsets().all(|u| d.distance(u) as usize == g.corank_of(u as u64))
                && inv::refined_skew_char_dmat(&d) == inv::refined_skew_char_graph(g);
            (!ok).then(|| g.to_string())
        })
        .into(),
        "distance-faces" => check(&diagrams(0, max_chords(5)), |b| {
            let d = DMat::from_chord_diagram(b).unwrap();
            let ok = d.subsets().all(|u| d.distance(u) as usize + 1 == b.restrict(u as u64).face_count());
            (!ok).then(|| b.to_string())
        })
        .into(),
        "gl11-skewchar" => {
            let n = max_chords(5);
            let engine = engine_for(2 * n);
            let mut out: Outcome = check(&diagrams(0, n), |d| {
                (engine.gl11_skewchar(d.perm()).unwrap() != inv::skew_char(&d.intersection_graph()))
                    .then(|| d.to_string())
            })
            .into();
            let (n, bad) = check(&graphs_up_to(max_vertices), |g| {
                let q = inv::convolution(&GraphInvariant::nondegeneracy(), &GraphInvariant::u_power(), g);
                (q != inv::skew_char(g)).then(|| format!("convolution {g}"))
            });
            out.instances += n;
            out.failures.extend(bad);
            out.findings.extend(refined_convolution_findings(max_vertices));
            out
        }
        "interlace-equivalence" => {
            let mut gs = graphs_up_to(max_vertices);
            for n in max_vertices + 1..=6 {
                gs.extend([Graph::path(n), Graph::cycle(n)]);
            }
            check(&gs, |g| {
                let r = inv::interlace_graph_recursive(g);
                let ok = d_interlace(g) == r && inv::interlace_graph_with(g, EdgePolicy::Random(17)) == r;
                (!ok).then(|| g.to_string())
            })
            .into()
        }
        "abs04" => check(&graphs_up_to(max_vertices), |g| {
            let d = DMat::from_graph(g).unwrap();
            let bad = inv::abs04_failures(&d);
            let ok = bad.is_empty() && inv::two_var_to_refined(&d) == inv::refined_skew_char_dmat(&d);
            (!ok).then(|| format!("{g} {bad:?}"))
        })
        .into(),
        "partial-dual-invariance" => check(&graphs_up_to(max_vertices), |g| {
            let d = DMat::from_graph(g).unwrap();
            let l = inv::interlace_dmat(&d);
            let bad: Vec<u32> = d.subsets().filter(|&s| inv::interlace_dmat(&d.partial_dual(s)) != l).collect();
            (!bad.is_empty()).then(|| format!("{g} S={bad:?}"))
        })
        .into(),
        "casimir-N" => casimir_n(max_m(7), &engine_for(max_m(7))),
        "positivity-experiment" => positivity(max_m(7), order, &engine_for(max_m(7))),
        _ => unreachable!(),
    };

    Ok(VerifySuiteReport {
        suite: name.to_string(),
        instances: out.instances,
        failures: out.failures,
        findings: out.findings,
        experiment: EXPERIMENTS.contains(&name),
        wall_seconds: start.elapsed().as_secs_f64(),
    })
}

fn d_interlace(g: &Graph) -> Poly {
    inv::interlace_dmat(&DMat::from_graph(g).unwrap())
}

/// Every Recurrence Rule instance, checked with an engine that shares nothing
/// with the one under test; also multiplicativity and shift invariance.
fn tgl_soundness(max_m: usize, engine: &WglEngine) -> Outcome {
    let plain = WglEngine::with_cap(engine.cap()).without_rotation();
    let items = perms_up_to(max_m);
    let (mut instances, mut failures) = check(&items, |a| {
        let m = a.len();
        let w = engine.wgl(a).unwrap();
        let mut bad = Vec::new();
        for l in 0..m.saturating_sub(1) {
            let t = rule_terms(a, l);
            let lhs = &w - &plain.wgl(&t.swapped).unwrap();
            let rhs = &plain.term_value(&t.merge1, t.merge1_loop) - &plain.term_value(&t.merge2, t.merge2_loop);
            if lhs != rhs {
                bad.push(format!("rule {a} l={}", l + 1));
            }
        }
        for k in 1..m {
            if plain.wgl(&a.rotate(k)).unwrap() != w {
                bad.push(format!("shift {a} k={k}"));
            }
        }
        (!bad.is_empty()).then(|| bad.join("; "))
    });
    let pairs: Vec<(Perm, Perm)> = (1..max_m)
        .flat_map(|i| (1..=max_m - i).map(move |j| (i, j)))
        .flat_map(|(i, j)| all_perms(i).flat_map(move |a| all_perms(j).map(move |b| (a.clone(), b))))
        .collect();
    let (n, bad) = check(&pairs, |(a, b)| {
        let ok = plain.wgl(&a.concat(b)).unwrap() == &engine.wgl(a).unwrap() * &engine.wgl(b).unwrap();
        (!ok).then(|| format!("concat {a} | {b}"))
    });
    instances += n;
    failures.extend(bad);
    (instances, failures).into()
}

fn four_term_holds(engine: &WglEngine, d: &ChordDiag, e: usize, f: usize) -> bool {
    let words = d.four_term_words(e, f).unwrap();
    let w: Vec<Poly> = words.iter().map(|x| engine.wgl(x.to_diag().perm()).unwrap()).collect();
    // the chord pair (x, y) of the relation, as chord identities
    let x = words[0].word()[e - 1];
    let y = words[0].word()[f - 1];
    let g = words[0].intersection_graph();
    let images = g.four_term_images(x, y).unwrap();
    let graphs_match = (1..4).all(|i| words[i].intersection_graph() == images[i - 1]);
    graphs_match && &w[0] - &w[1] == &w[2] - &w[3]
}

/// `L(B)` against the interlace polynomial of the intersection graph at
/// `x = z²`, for diagrams with at least two chords. A single chord is
/// reported as a finding.
fn tis(max_chords: usize, engine: &WglEngine) -> Outcome {
    let items = diagrams(2, max_chords);
    let mut out: Outcome = check(&items, |d| {
        let l = engine.interlace_perm(d.perm()).unwrap();
        let expect = in_z_squared(&inv::interlace_graph_recursive(&d.intersection_graph()));
        (!l.is_polynomial() || l.numerator() != expect).then(|| format!("{d}: L = {l}, expected {expect}"))
    })
    .into();
    let shifted = items
        .par_iter()
        .filter(|d| {
            let l = engine.interlace_perm(d.perm()).unwrap();
            let g = inv::interlace_graph_recursive(&d.intersection_graph());
            let at = g.subst(&HashMap::from([(Var::X, &Poly::var_pow(Var::Z, 2) - &Poly::one())]));
            l.is_polynomial() && l.numerator() == at
        })
        .count();
    out.findings.push(format!(
        "L(B) = L_G(z^2 - 1) on {shifted} of {} diagrams with 2..{max_chords} chords",
        items.len()
    ));
    if max_chords >= 1 {
        let k1 = ChordDiag::new(Perm::standard_cycle(2)).unwrap();
        let l = engine.interlace_perm(k1.perm()).unwrap();
        out.findings.push(format!("single chord: L = {l}, L_K1(z^2) = z^2 + 1"));
    }
    out
}

/// Readings of the restriction recurrence for `L` over pivots, with the
/// 2-cycles of `α^{ab}` identified by where the block exchange carries them:
type PivotSite = (Perm, (usize, usize), (usize, usize));

/// `all`: drop the points of both 2-cycles in both terms;
/// `split`: drop `a` from `α`, and `b` from `α^{ab}`;
/// `same`: drop `a` from both. The block exchange realizes the graph pivot
/// with the labels `a`, `b` exchanged, so `same` is the graph recursion.
fn perm_recurrence(max_m: usize, engine: &WglEngine) -> Outcome {
    let items: Vec<PivotSite> = perms_up_to(max_m)
        .into_iter()
        .flat_map(|a| {
            a.interlacing_two_cycle_pairs()
                .into_iter()
                .flat_map(|(x, y)| [(x, y), (y, x)])
                .map(move |(x, y)| (a.clone(), x, y))
        })
        .collect();
    let tally: Vec<(bool, bool, bool, bool)> = items
        .par_iter()
        .map(|(a, x, y)| {
            let l = engine.interlace_perm(a).unwrap();
            let (piv, pos) = a.pivot_tracked(*x, *y);
            let full = (1u64 << a.len()) - 1;
            let pts = |p: (usize, usize)| 1u64 << p.0 | 1u64 << p.1;
            let moved = |p: (usize, usize)| 1u64 << pos[p.0] | 1u64 << pos[p.1];
            let lp = |p: &Perm, drop: u64| engine.interlace_perm(&p.subperm(full & !drop)).unwrap();
            let both = lp(a, pts(*x) | pts(*y)).add(&lp(&piv, moved(*x) | moved(*y)));
            let split = lp(a, pts(*x)).add(&lp(&piv, moved(*y)));
            let same = lp(a, pts(*x)).add(&lp(&piv, moved(*x)));
            (a.is_fixed_point_free_involution(), both == l, split == l, same == l)
        })
        .collect();
    let mut findings = Vec::new();
    for (label, diag) in [("chord diagrams", true), ("other permutations", false)] {
        let rows: Vec<_> = tally.iter().filter(|t| t.0 == diag).collect();
        let both = rows.iter().filter(|t| t.1).count();
        let split = rows.iter().filter(|t| t.2).count();
        let same = rows.iter().filter(|t| t.3).count();
        findings.push(format!(
            "{label}: {} ordered pivot pairs; `all` holds on {both}, `split` on {split}, `same` on {same}",
            rows.len()
        ));
    }
    Outcome { instances: items.len(), failures: Vec::new(), findings }
}

/// `C_k ↦ N` against `N^{c(α)}`: asserted on chord diagrams, measured on all
/// permutations.
fn casimir_n(max_m: usize, engine: &WglEngine) -> Outcome {
    let items = perms_up_to(max_m);
    let ok: Vec<bool> = items
        .par_iter()
        .map(|a| engine.casimir_to_n(a).unwrap() == n_pow(a.cycle_count()))
        .collect();
    let failures: Vec<String> = items
        .iter()
        .zip(&ok)
        .filter(|(a, ok)| a.is_fixed_point_free_involution() && !**ok)
        .map(|(a, _)| a.to_string())
        .collect();
    let general_bad: Vec<&Perm> = items.iter().zip(&ok).filter(|(_, ok)| !**ok).map(|(a, _)| a).collect();
    let mut findings = vec![format!(
        "N^c(α) holds on {} of {} permutations with m <= {max_m}",
        items.len() - general_bad.len(),
        items.len()
    )];
    if let Some(a) = general_bad.first() {
        findings.push(format!("first counterexample: {a} -> {}", engine.casimir_to_n(a).unwrap()));
    }
    Outcome { instances: items.len(), failures, findings }
}

/// Signs of the series coefficients of `L(α)` up to `order`.
fn positivity(max_m: usize, order: usize, engine: &WglEngine) -> Outcome {
    let items = perms_up_to(max_m);
    let negative: Vec<(bool, String)> = items
        .par_iter()
        .filter_map(|a| {
            let s = engine.interlace_perm(a).unwrap().series(order);
            let k = s.iter().position(|c| c < &crate::algebra::coef(0))?;
            let free = a.images().iter().enumerate().all(|(i, &j)| i != j);
            Some((free, format!("{a}: coefficient of z^{k} is {}", s[k])))
        })
        .collect();
    let fpf: Vec<&(bool, String)> = negative.iter().filter(|(free, _)| *free).collect();
    let mut findings = vec![
        format!(
            "{} of {} permutations with m <= {max_m} have a negative coefficient up to z^{order}",
            negative.len(),
            items.len()
        ),
        format!(
            "{} of {} fixed-point-free permutations have one",
            fpf.len(),
            items.iter().filter(|a| a.images().iter().enumerate().all(|(i, &j)| i != j)).count()
        ),
    ];
    findings.extend(fpf.iter().take(5).map(|(_, s)| s.clone()));
    findings.extend(negative.iter().filter(|(free, _)| !free).take(5).map(|(_, s)| s.clone()));
    Outcome { instances: items.len(), failures: Vec::new(), findings }
}

/// The refined polynomial as a convolution: `skew_char ∘ w^corank` and
/// `w^corank ∘ u^|V|`, counted over all graphs.
pub fn refined_convolution_findings(max_vertices: usize) -> Vec<String> {
    let gs = graphs_up_to(max_vertices);
    let count = |f: &GraphInvariant, g: &GraphInvariant| {
        gs.par_iter()
            .filter(|x| inv::convolution(f, g, x) == inv::refined_skew_char_graph(x))
            .count()
    };
    let corank = GraphInvariant::w_corank();
    vec![
        format!(
            "skew_char * w^corank equals the refined polynomial on {} of {} graphs",
            count(&GraphInvariant::skew_char(), &corank),
            gs.len()
        ),
        format!(
            "w^corank * u^|V| equals the refined polynomial on {} of {} graphs",
            count(&corank, &GraphInvariant::u_power()),
            gs.len()
        ),
    ]
}
