use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use wsys_core::algebra::format_series;
use wsys_core::glws::{self, WglEngine, DEFAULT_CAP};
use wsys_core::invariants as inv;
use wsys_core::verify::{self, Bounds, VerifySuiteReport, SUITES};
use wsys_core::{ChordDiag, DMat, Error, Graph, Perm};

#[derive(Parser)]
#[command(name = "wsys", version, about = "gl-weight systems, interlace and skew-characteristic polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PermArg {
    /// One-line `3,1,2` or cycle notation `(1 3 2)`
    #[arg(long)]
    perm: String,
    /// Number of points, for cycle notation with trailing fixed points
    #[arg(long)]
    m: Option<usize>,
}

impl PermArg {
    fn parse(&self) -> Result<Perm, Error> {
        Perm::parse(&self.perm, self.m)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Universal gl-weight system
    Wgl {
        #[command(flatten)]
        perm: PermArg,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Number of faces f(α)
    Faces {
        #[command(flatten)]
        perm: PermArg,
    },
    /// F_ε specialization
    Feps {
        #[command(flatten)]
        perm: PermArg,
        /// Sum over point subsets instead of the Casimir substitution
        #[arg(long)]
        direct: bool,
        /// Chord diagrams only: print in v = 2ε + Nε² and N
        #[arg(long, conflicts_with = "direct")]
        in_v: bool,
    },
    /// Interlace polynomial of a graph, delta-matroid or permutation
    #[command(group = clap::ArgGroup::new("src").required(true))]
    Interlace {
        #[arg(long, group = "src")]
        graph: Option<String>,
        #[arg(long, group = "src")]
        dmat: Option<String>,
        #[arg(long, group = "src")]
        perm: Option<String>,
        #[arg(long)]
        m: Option<usize>,
        /// Apply x ↦ x - 1 (x^n on edgeless graphs)
        #[arg(long, conflicts_with = "perm")]
        shifted: bool,
        /// Two-variable polynomial in x, y (delta-matroids)
        #[arg(long, requires = "dmat")]
        two_var: bool,
    },
    /// Skew-characteristic polynomial of a graph or chord diagram
    #[command(group = clap::ArgGroup::new("src").required(true))]
    Skewchar {
        #[arg(long, group = "src")]
        graph: Option<String>,
        #[arg(long, group = "src")]
        dmat: Option<String>,
        /// Chord diagram; evaluated through the gl(1|1) substitution
        #[arg(long, group = "src")]
        perm: Option<String>,
        /// Q̄ in u and w
        #[arg(long, conflicts_with = "perm")]
        refined: bool,
    },
    /// Delta-matroid of a graph or chord diagram
    #[command(group = clap::ArgGroup::new("src").required(true))]
    Dmat {
        #[arg(long, group = "src")]
        graph: Option<String>,
        #[arg(long, group = "src")]
        perm: Option<String>,
        /// Also report the symmetric exchange axiom
        #[arg(long)]
        check: bool,
    },
    /// Pivot a permutation along two interlacing 2-cycles
    Pivot {
        #[command(flatten)]
        perm: PermArg,
        #[arg(long, value_name = "I,J")]
        a: String,
        #[arg(long, value_name = "K,L")]
        b: String,
    },
    /// L(α) as a rational function and its power series
    Series {
        #[command(flatten)]
        perm: PermArg,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// Run a verification suite, or `all`
    Verify {
        suite: String,
        #[arg(long)]
        max_m: Option<usize>,
        #[arg(long)]
        max_chords: Option<usize>,
        #[arg(long)]
        max_vertices: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
        /// Random permutations per size, where a suite samples
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
        /// Include wall time in text output
        #[arg(long)]
        timing: bool,
    },
}

enum Failure {
    Core(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn pair(s: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::Parse(format!("expected `i,j`, got `{s}`"));
    let (i, j) = s.split_once(',').ok_or_else(bad)?;
    Ok((i.trim().parse().map_err(|_| bad())?, j.trim().parse().map_err(|_| bad())?))
}

fn print_report(r: &VerifySuiteReport, timing: bool) {
    let status = match (r.experiment, r.failures.is_empty()) {
        (true, _) => "REPORT",
        (false, true) => "PASS",
        (false, false) => "FAIL",
    };
    print!("{status} {} instances={} failures={}", r.suite, r.instances, r.failures.len());
    if timing {
        print!(" time={:.2}s", r.wall_seconds);
    }
    println!();
    for f in r.failures.iter().take(10) {
        println!("  failure: {f}");
    }
    if r.failures.len() > 10 {
        println!("  ... {} more failures", r.failures.len() - 10);
    }
    for f in &r.findings {
        println!("  finding: {f}");
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Wgl { perm, cap } => {
            println!("{}", WglEngine::with_cap(cap).wgl(&perm.parse()?)?);
        }
        Command::Faces { perm } => println!("{}", perm.parse()?.face_count()),
        Command::Feps { perm, direct, in_v } => {
            let a = perm.parse()?;
            let engine = WglEngine::new();
            if direct {
                println!("{}", glws::feps_direct(&a));
            } else if in_v {
                match engine.feps_in_v(&ChordDiag::new(a)?)? {
                    Ok(p) => println!("{p}"),
                    Err(m) => {
                        eprintln!("mismatch: {} expands to {}, but F_eps is {}", m.in_v, m.expanded, m.direct);
                        return Err(Failure::Verification);
                    }
                }
            } else {
                println!("{}", engine.feps(&a)?);
            }
        }
        Command::Interlace { graph, dmat, perm, m, shifted, two_var } => {
            let shift = |p| if shifted { inv::shifted(&p) } else { p };
            if let Some(p) = perm {
                println!("{}", WglEngine::new().interlace_perm(&Perm::parse(&p, m)?)?);
            } else if let Some(d) = dmat {
                let d: DMat = d.parse()?;
                if two_var {
                    println!("{}", inv::two_var_interlace(&d));
                } else {
                    println!("{}", shift(inv::interlace_dmat(&d)));
                }
            } else {
                let g: Graph = graph.expect("one source is required").parse()?;
                println!("{}", shift(inv::interlace_graph_recursive(&g)));
            }
        }
        Command::Skewchar { graph, dmat, perm, refined } => {
            if let Some(p) = perm {
                let b = ChordDiag::new(Perm::parse(&p, None)?)?;
                println!("{}", WglEngine::new().gl11_skewchar(b.perm())?);
            } else if let Some(d) = dmat {
                let d: DMat = d.parse()?;
                if refined {
                    println!("{}", inv::refined_skew_char_dmat(&d));
                } else {
                    let q = inv::refined_skew_char_dmat(&d);
                    let at_zero = q.subst(&[(wsys_core::Var::W, wsys_core::Poly::zero())].into());
                    println!("{at_zero}");
                }
            } else {
                let g: Graph = graph.expect("one source is required").parse()?;
                if refined {
                    println!("{}", inv::refined_skew_char_graph(&g));
                } else {
                    println!("{}", inv::skew_char(&g));
                }
            }
        }
        Command::Dmat { graph, perm, check } => {
            let d = match &perm {
                Some(p) => DMat::from_chord_diagram(&ChordDiag::new(Perm::parse(p, None)?)?)?,
                None => DMat::from_graph(&graph.expect("one source is required").parse()?)?,
            };
            println!("{d}");
            if check {
                println!("symmetric exchange: {}", d.check_symmetric_exchange());
            }
        }
        Command::Pivot { perm, a, b } => {
            let p = perm.parse()?.pivot(pair(&a)?, pair(&b)?)?;
            println!("{p}");
        }
        Command::Series { perm, order } => {
            let l = WglEngine::with_cap(DEFAULT_CAP).interlace_perm(&perm.parse()?)?;
            println!("{l}");
            println!("{}", format_series(&l.series(order)));
        }
        Command::Verify { suite, max_m, max_chords, max_vertices, order, random, seed, json, timing } => {
            let bounds = Bounds { max_m, max_chords, max_vertices, order, random, seed };
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut reports = Vec::new();
            for name in names {
                let r = verify::run_suite(name, &bounds)?;
                if !json {
                    print_report(&r, timing);
                }
                reports.push(r);
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&reports).expect("serializable"));
            }
            if !reports.iter().all(VerifySuiteReport::passed) {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(3),
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_parse() { 1 } else { 2 })
        }
    }
}
