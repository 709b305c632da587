//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fail.

mod common;

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wsys_core::algebra::{format_series, Monomial};
use wsys_core::glws::{feps_direct, WglEngine};
use wsys_core::graphs::all_graphs;
use wsys_core::hopf::{eps_independence_check, primitive_eval};
use wsys_core::invariants::{self as inv, GraphInvariant};
use wsys_core::perm::{all_chord_diagrams, all_perms};
use wsys_core::verify::{run_suite, Bounds, SUITES};
use wsys_core::{ChordDiag, DMat, Graph, Perm, Poly, Var};

type Check = Result<String, String>;

fn p(s: &str) -> Poly {
    s.parse().unwrap()
}

fn perm(s: &str) -> Perm {
    s.parse().unwrap()
}

fn diag(s: &str) -> ChordDiag {
    ChordDiag::new(perm(s)).unwrap()
}

fn expect_eq<T: PartialEq + std::fmt::Display>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, want {want}"))
    }
}

fn within(what: &str, t: Duration, limit: Duration) -> Result<(), String> {
    if t <= limit {
        Ok(())
    } else {
        Err(format!("{what} took {t:?}, limit {limit:?}"))
    }
}

fn graphs_up_to(n: usize) -> Vec<Graph> {
    (0..=n).flat_map(all_graphs).collect()
}

fn diagrams(lo: usize, hi: usize) -> Vec<ChordDiag> {
    (lo..=hi).flat_map(all_chord_diagrams).collect()
}

fn golden_values() -> Check {
    let start = Instant::now();
    let e = WglEngine::new();
    expect_eq("wgl (1 3 2)", e.wgl(&perm("(1 3 2)")).unwrap(), p("C3 + C1^2 - N*C2"))?;
    for m in 1..=6 {
        expect_eq("standard cycle", e.wgl(&Perm::standard_cycle(m)).unwrap(), Poly::casimir(m as u32))?;
    }
    expect_eq(
        "wgl (14)(25)(36)",
        e.wgl(&perm("(1 4)(2 5)(3 6)")).unwrap(),
        p("C2^3 + 3*C1^2*C2 - 3*N*C2^2 + 2*N^2*C2 - 2*N*C1^2"),
    )?;
    let feps = [
        ("(1 3)(2 4)", "N^2*eps^4 + 4*N*eps^3 + (2*N^2 + 4)*eps^2 + 4*N*eps + 1"),
        ("(1 4)(2 5)(3 6)", "N + 6*eps + 15*N*eps^2 + 4*(2 + 3*N^2)*eps^3 + 3*N*(4 + N^2)*eps^4 + 6*N^2*eps^5 + N^3*eps^6"),
        ("(1 2)", "N + 2*eps + N*eps^2"),
        ("(1,2,3)", "N*eps^3 + 3*eps^2 + 3*N*eps + N^2"),
        ("(1,3,2)", "N*eps^3 + 3*eps^2 + 3*N*eps + 1"),
    ];
    for (a, want) in feps {
        expect_eq(&format!("F_eps {a}"), e.feps(&perm(a)).unwrap(), p(want))?;
    }
    within("golden values", start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("{:?}", start.elapsed()))
}

fn random_perms(m: usize, count: usize, seed: u64) -> Vec<Perm> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut v: Vec<usize> = (0..m).collect();
            v.shuffle(&mut rng);
            Perm::from_images(v).unwrap()
        })
        .collect()
}

fn feps_equivalence() -> Check {
    let start = Instant::now();
    let e = WglEngine::new();
    let mut items: Vec<Perm> = (0..=7).flat_map(all_perms).collect();
    let exhaustive = items.len();
    items.extend(random_perms(9, 100, 9));
    for a in &items {
        expect_eq(&format!("{a}"), e.feps(a).unwrap(), feps_direct(a))?;
    }
    within("t-fe", start.elapsed(), Duration::from_secs(120))?;
    Ok(format!("{exhaustive} exhaustive + 100 random at m=9"))
}

fn standard_specialization() -> Check {
    let e = WglEngine::new();
    let mut n = 0;
    for a in (0..=7).flat_map(all_perms) {
        let want = Poly::var_pow(Var::N, common::faces(&a) as u32 - 1);
        expect_eq(&format!("{a}"), e.spec_standard(&a).unwrap(), want)?;
        n += 1;
    }
    Ok(format!("{n} permutations"))
}

fn refined_skew_char() -> Check {
    let start = Instant::now();
    let e = WglEngine::new();
    let mut n = 0;
    for b in diagrams(0, 5) {
        let g = common::intersection_graph(b.perm());
        let k = g.num_vertices();
        // Q̄_G(v, N) from the independent corank oracle
        let mut q = Poly::zero();
        for code in 0..1u64 << k {
            let keep = common::subset(k, code);
            let size = keep.iter().filter(|&&x| x).count() as u32;
            let c = common::induced_corank(&g, &keep) as u32;
            q += Poly::term(wsys_core::algebra::coef(1), Monomial::from_pairs([(Var::V, k as u32 - size), (Var::N, c)]));
        }
        let v = &p("2*eps") + &p("N*eps^2");
        let expanded = q.subst(&HashMap::from([(Var::V, v)]));
        expect_eq(&format!("{b}"), expanded, e.feps(b.perm()).unwrap())?;
        n += 1;
    }
    within("t-rsc", start.elapsed(), Duration::from_secs(120))?;
    Ok(format!("{n} diagrams"))
}

fn interlace_of_diagrams() -> Check {
    let e = WglEngine::new();
    let mut n = 0;
    for b in diagrams(2, 5) {
        let l = e.interlace_perm(b.perm()).unwrap();
        if !l.is_polynomial() {
            return Err(format!("{b}: L = {l} has a pole"));
        }
        let lg = inv::interlace_graph_recursive(&common::intersection_graph(b.perm()));
        let want = lg.subst(&HashMap::from([(Var::X, Poly::var_pow(Var::Z, 2))]));
        expect_eq(&format!("{b}"), l.numerator(), want)?;
        n += 1;
    }
    let single = e.interlace_perm(diag("(1 2)").perm()).unwrap();
    if single.numerator() == p("z^2 + 1") {
        return Err("single chord unexpectedly equals z^2 + 1".into());
    }
    Ok(format!("{n} diagrams"))
}

fn interlace_equivalence() -> Check {
    let gs = graphs_up_to(5);
    for g in &gs {
        expect_eq(
            &format!("{g}"),
            inv::interlace_graph_recursive(g),
            inv::interlace_dmat(&DMat::from_graph(g).unwrap()),
        )?;
    }
    let diamond = Graph::from_edges(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap();
    expect_eq("diamond", inv::interlace_graph_recursive(&diamond), p("2*x^2 + 8*x + 6"))?;
    expect_eq("K3", inv::interlace_graph_recursive(&Graph::complete(3)), p("4*x + 4"))?;
    Ok(format!("{} graphs", gs.len()))
}

fn four_term() -> Check {
    let invs = [GraphInvariant::skew_char(), GraphInvariant::refined_skew_char(), GraphInvariant::interlace()];
    let mut checks = 0;
    for g in graphs_up_to(5) {
        let n = g.num_vertices();
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                for f in &invs {
                    if !inv::graph_4t_check(f, &g, a, b).unwrap() {
                        return Err(format!("{} on {g}, a={}, b={}", f.name(), a + 1, b + 1));
                    }
                    checks += 1;
                }
            }
        }
    }
    let e = WglEngine::new();
    let mut quads = 0;
    for d in diagrams(2, 3) {
        let m = d.perm().len();
        for i in 1..=m {
            let j = i % m + 1;
            let Ok(q) = d.four_term_quadruple(i, j) else { continue };
            let w: Vec<Poly> = q.iter().map(|x| e.wgl(x.perm()).unwrap()).collect();
            let alt = &(&w[0] - &w[1]) - &(&w[2] - &w[3]);
            if !alt.is_zero() {
                return Err(format!("4T sum {alt} on {d} at {i},{j}"));
            }
            quads += 1;
        }
    }
    Ok(format!("{checks} graph checks, {quads} diagram quadruples"))
}

fn delta_matroids() -> Check {
    let gs = graphs_up_to(5);
    for g in &gs {
        let d = DMat::from_graph(g).unwrap();
        if !d.check_symmetric_exchange() {
            return Err(format!("symmetric exchange on {g}"));
        }
        let n = g.num_vertices();
        for u in d.subsets() {
            let oracle = common::induced_corank(g, &common::subset(n, u as u64));
            expect_eq(&format!("distance {g} {u:b}"), d.distance(u) as usize, oracle)?;
        }
        let l = inv::interlace_dmat(&d);
        for s in d.subsets() {
            expect_eq(&format!("partial dual {g} {s:b}"), inv::interlace_dmat(&d.partial_dual(s)), l.clone())?;
        }
        if !inv::abs04_failures(&d).is_empty() {
            return Err(format!("ABS04 on {g}"));
        }
        expect_eq(&format!("Q̄ via L̄ {g}"), inv::two_var_to_refined(&d), inv::refined_skew_char_dmat(&d))?;
    }
    let bs = diagrams(0, 5);
    for b in &bs {
        let d = DMat::from_chord_diagram(b).unwrap();
        for u in d.subsets() {
            let ch = common::chords(b.perm());
            let mut keep = vec![false; b.perm().len()];
            for (i, &(x, y)) in ch.iter().enumerate() {
                if u >> i & 1 == 1 {
                    keep[x] = true;
                    keep[y] = true;
                }
            }
            let sub = Perm::from_images(common::restrict(b.perm(), &keep)).unwrap();
            expect_eq(&format!("faces {b} {u:b}"), d.distance(u) as usize + 1, common::faces(&sub))?;
        }
    }
    Ok(format!("{} graphs, {} diagrams", gs.len(), bs.len()))
}

fn gl11() -> Check {
    let e = WglEngine::new();
    for b in diagrams(0, 5) {
        expect_eq(
            &format!("gl11 {b}"),
            e.gl11_skewchar(b.perm()).unwrap(),
            inv::skew_char(&common::intersection_graph(b.perm())),
        )?;
    }
    let corank = GraphInvariant::new("N^corank", |g: &Graph| Poly::var_pow(Var::W, g.corank() as u32));
    for g in graphs_up_to(5) {
        let q = inv::convolution(&GraphInvariant::nondegeneracy(), &GraphInvariant::u_power(), &g);
        expect_eq(&format!("Q convolution {g}"), q, inv::skew_char(&g))?;
        let r = inv::convolution(&GraphInvariant::skew_char(), &corank, &g);
        expect_eq(&format!("Q̄ = Q * N^corank on {g}"), r, inv::refined_skew_char_graph(&g))?;
    }
    Ok("diagrams <= 5 chords, graphs <= 5 vertices".into())
}

fn hopf() -> Check {
    let e = WglEngine::new();
    let mut n = 0;
    for b in diagrams(2, 4) {
        let c = eps_independence_check(&e, &b).unwrap();
        if !c.eps_free {
            return Err(format!("{b}: F_eps(pi) = {} depends on eps", c.value));
        }
        expect_eq(&format!("F_eps(pi) = F(pi) on {b}"), c.value, c.standard)?;
        n += 1;
    }
    let f = |d: &ChordDiag| e.feps(d.perm()).unwrap();
    expect_eq("K1", primitive_eval(f, &diag("(1 2)")), p("N + 2*eps + N*eps^2"))?;
    expect_eq("K2", primitive_eval(f, &diag("(1 3)(2 4)")), p("1 - N^2"))?;
    Ok(format!("{n} diagrams"))
}

fn section_four_three() -> Check {
    let e = WglEngine::new();
    let a = perm("3,5,6,7,2,8,4,9,1");
    let piv = a.pivot((2, 5), (4, 7)).unwrap();
    expect_eq("pivot", piv.clone(), perm("6,5,8,7,2,3,4,9,1"))?;
    let num = p("z^2*(6 - 2*z + 7*z^2 + z^3 + z^4 - 8*z^5 - 3*z^6 - z^7 + 10*z^8 - 6*z^9 + z^10)");
    for x in [&a, &piv] {
        let l = e.interlace_perm(x).unwrap();
        expect_eq("pivot L numerator", l.numerator(), num.clone())?;
        expect_eq("pivot L pole", l.dpow(), 4)?;
    }
    // (z - 1)^2 = (1 - z)^2
    let l123 = e.interlace_perm(&perm("(1,2,3)")).unwrap();
    expect_eq("L((1,2,3))", l123.numerator(), p("z^2*(z - 2)*(z^3 - z - 1)"))?;
    expect_eq("L((1,2,3)) pole", l123.dpow(), 2)?;
    expect_eq("series (1,2,3)", format_series(&l123.series(7)), "2z^2+5z^3+7z^4+7z^5+8z^6+9z^7".into())?;
    let l132 = e.interlace_perm(&perm("(1,3,2)")).unwrap();
    expect_eq("L((1,3,2))", l132.numerator(), p("-z^2*(3*z - 4)"))?;
    expect_eq("series (1,3,2)", format_series(&l132.series(7)), "4z^2+5z^3+6z^4+7z^5+8z^6+9z^7".into())?;

    let mut pairs = 0;
    for a in (0..=8).flat_map(all_perms) {
        let ps = a.interlacing_two_cycle_pairs();
        if ps.is_empty() {
            continue;
        }
        let l = e.interlace_perm(&a).unwrap();
        for ((a1, a2), (b1, b2)) in ps {
            let q = a.pivot((a1 + 1, a2 + 1), (b1 + 1, b2 + 1)).unwrap();
            if e.interlace_perm(&q).unwrap() != l {
                return Err(format!("pivot invariance fails on {a}"));
            }
            pairs += 1;
        }
    }
    let bounds = Bounds { max_m: Some(7), order: Some(12), ..Bounds::default() };
    let report = run_suite("positivity-experiment", &bounds).unwrap();
    Ok(format!("{pairs} pivots; positivity finding: {}", report.findings.join(" / ")))
}

fn performance() -> Check {
    let mut worst = Duration::ZERO;
    for a in random_perms(10, 20, 10) {
        let start = Instant::now();
        WglEngine::new().wgl(&a).unwrap();
        worst = worst.max(start.elapsed());
    }
    within("wgl m=10", worst, Duration::from_secs(60))?;
    let start = Instant::now();
    for s in SUITES {
        run_suite(s, &Bounds::default()).unwrap();
    }
    let battery = start.elapsed();
    within("default battery", battery, Duration::from_secs(15 * 60))?;
    Ok(format!("worst wgl m=10 {worst:?}, battery {battery:?}"))
}

type Criterion = (&'static str, fn() -> Check);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("golden values", golden_values),
        ("F_eps two routes", feps_equivalence),
        ("standard specialization", standard_specialization),
        ("refined skew characteristic", refined_skew_char),
        ("interlace of chord diagrams", interlace_of_diagrams),
        ("interlace equivalence", interlace_equivalence),
        ("4-term relations", four_term),
        ("delta-matroid battery", delta_matroids),
        ("gl(1|1) and convolutions", gl11),
        ("Hopf projection", hopf),
        ("interlace of permutations", section_four_three),
        ("performance envelope", performance),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
