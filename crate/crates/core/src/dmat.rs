//! Set systems and delta-matroids, stored extensionally as bitmasks.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graphs::{ones, Graph};
use crate::perm::ChordDiag;

pub const MAX_GROUND: usize = 20;

/// A proper set system `(E; Φ)` on `E = {0, …, ground_size - 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DMat {
    ground: usize,
    // sorted, deduplicated
    admissible: Vec<u32>,
}

impl DMat {
    pub fn new(ground: usize, admissible: impl IntoIterator<Item = u32>) -> Result<Self> {
        if ground > MAX_GROUND {
            return Err(Error::TooLarge { size: ground, max: MAX_GROUND });
        }
        let mut sets: Vec<u32> = admissible.into_iter().collect();
        if let Some(&bad) = sets.iter().find(|&&s| s >> ground != 0) {
            return Err(Error::VertexOutOfRange(32 - bad.leading_zeros() as usize));
        }
        sets.sort_unstable();
        sets.dedup();
        if sets.is_empty() {
            return Err(Error::EmptySetSystem);
        }
        Ok(DMat { ground, admissible: sets })
    }

    /// `U` is admissible iff `G|_U` is nondegenerate over GF(2).
    pub fn from_graph(g: &Graph) -> Result<Self> {
        let n = g.num_vertices();
        if n > MAX_GROUND {
            return Err(Error::TooLarge { size: n, max: MAX_GROUND });
        }
        let sets = (0..1u32 << n).filter(|&u| g.corank_of(u as u64) == 0);
        DMat::new(n, sets)
    }

    /// Delta-matroid of the intersection graph of `b`. The same system arises
    /// from the one-vertex embedded graph: `U` admissible iff `b|_U` has a
    /// single face; both constructions are evaluated and must agree.
    pub fn from_chord_diagram(b: &ChordDiag) -> Result<Self> {
        let d = DMat::from_graph(&b.intersection_graph())?;
        let n = b.num_chords();
        let by_faces = DMat::new(n, (0..1u32 << n).filter(|&u| b.restrict(u as u64).face_count() == 1))?;
        assert_eq!(d, by_faces, "graph and embedded-graph delta-matroids differ for {b}");
        Ok(d)
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn admissible(&self) -> &[u32] {
        &self.admissible
    }

    pub fn is_admissible(&self, u: u32) -> bool {
        self.admissible.binary_search(&u).is_ok()
    }

    fn full(&self) -> u32 {
        ((1u64 << self.ground) - 1) as u32
    }

    /// Symmetric Exchange Axiom, by brute force over all `(φ, ψ, x)`; `y = x`
    /// is allowed.
    pub fn check_symmetric_exchange(&self) -> bool {
        self.admissible.iter().all(|&phi| {
            self.admissible.iter().all(|&psi| {
                let diff = phi ^ psi;
                ones(diff as u64).all(|x| {
                    ones(diff as u64).any(|y| {
                        let step = if y == x { 1 << x } else { 1 << x | 1 << y };
                        self.is_admissible(phi ^ step)
                    })
                })
            })
        })
    }

    /// `d_D(U) = min_φ |U Δ φ|`.
    pub fn distance(&self, u: u32) -> u32 {
        self.admissible
            .iter()
            .map(|&phi| (u ^ phi).count_ones())
            .min()
            .expect("proper set system")
    }

    /// `D * S`.
    pub fn partial_dual(&self, s: u32) -> DMat {
        let mut admissible: Vec<u32> = self.admissible.iter().map(|&phi| phi ^ s).collect();
        admissible.sort_unstable();
        DMat { ground: self.ground, admissible }
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.admissible.iter().all(|&phi| phi >> e & 1 == 0)
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.admissible.iter().all(|&phi| phi >> e & 1 == 1)
    }

    /// `D \ e`: admissible sets avoiding `e`, elements above `e` shifted down.
    pub fn delete(&self, e: usize) -> Result<DMat> {
        if e >= self.ground {
            return Err(Error::VertexOutOfRange(e + 1));
        }
        if self.is_coloop(e) {
            return Err(Error::DeleteColoop(e + 1));
        }
        let low = (1u32 << e) - 1;
        let sets = self
            .admissible
            .iter()
            .filter(|&&phi| phi >> e & 1 == 0)
            .map(|&phi| (phi & low) | ((phi >> (e + 1)) << e));
        DMat::new(self.ground - 1, sets)
    }

    /// All subsets of the ground set as masks.
    pub fn subsets(&self) -> impl Iterator<Item = u32> {
        0..=self.full()
    }
}

impl fmt::Display for DMat {
    /// `E=3; phi={},{1,2},{1,3},{2,3}`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sets = self.admissible.clone();
        sets.sort_by_key(|&s| (s.count_ones(), ones(s as u64).collect::<Vec<_>>()));
        write!(
            f,
            "E={}; phi={}",
            self.ground,
            sets.iter()
                .map(|&s| format!("{{{}}}", ones(s as u64).map(|i| i + 1).join(",")))
                .join(",")
        )
    }
}

impl FromStr for DMat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected `E=<n>; phi={{…}},…`, got `{s}`"));
        let (e_part, phi_part) = s.split_once(';').ok_or_else(bad)?;
        let ground: usize = e_part
            .trim()
            .strip_prefix("E=")
            .ok_or_else(bad)?
            .trim()
            .parse()
            .map_err(|_| bad())?;
        let mut rest = phi_part.trim().strip_prefix("phi=").ok_or_else(bad)?.trim();
        let mut sets = Vec::new();
        while !rest.is_empty() {
            let (body, tail) = rest
                .strip_prefix('{')
                .and_then(|r| r.split_once('}'))
                .ok_or_else(bad)?;
            let mut mask = 0u32;
            for t in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let e: usize = t.parse().map_err(|_| bad())?;
                if e == 0 || e > ground {
                    return Err(Error::VertexOutOfRange(e));
                }
                mask |= 1 << (e - 1);
            }
            sets.push(mask);
            rest = tail.trim_start();
            rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
        }
        DMat::new(ground, sets)
    }
}
