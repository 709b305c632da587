//! Permutations, chord diagrams, and the combinatorics on them that the
//! weight-system recurrence and its specializations need.
//!
//! Points are 0-based internally; text forms are 1-based.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graphs::Graph;

/// Largest permutation size accepted anywhere (subsets are `u64` masks).
pub const MAX_POINTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<usize>,
}

impl Perm {
    pub fn identity(m: usize) -> Self {
        Perm { img: (0..m).collect() }
    }

    pub fn empty() -> Self {
        Perm { img: Vec::new() }
    }

    /// The standard cycle `1 -> 2 -> … -> m -> 1`.
    pub fn standard_cycle(m: usize) -> Self {
        Perm {
            img: (0..m).map(|i| (i + 1) % m).collect(),
        }
    }

    /// Builds from 0-based images, checking bijectivity.
    pub fn from_images(img: Vec<usize>) -> Result<Self> {
        let m = img.len();
        if m > MAX_POINTS {
            return Err(Error::TooLarge { size: m, max: MAX_POINTS });
        }
        let mut seen = vec![false; m];
        for &j in &img {
            if j >= m {
                return Err(Error::PointOutOfRange { point: j + 1, m });
            }
            if std::mem::replace(&mut seen[j], true) {
                return Err(Error::NotBijection(j + 1));
            }
        }
        Ok(Perm { img })
    }

    pub(crate) fn from_images_unchecked(img: Vec<usize>) -> Self {
        debug_assert!(Perm::from_images(img.clone()).is_ok());
        Perm { img }
    }

    /// Builds from 1-based one-line notation.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        let m = one_line.len();
        let img = one_line
            .iter()
            .map(|&p| {
                if p == 0 || p > m {
                    Err(Error::PointOutOfRange { point: p, m })
                } else {
                    Ok(p - 1)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Perm::from_images(img)
    }

    /// Builds from 1-based cycles on `m` points; unlisted points are fixed.
    pub fn from_cycles(m: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut img: Vec<Option<usize>> = vec![None; m];
        for cyc in cycles {
            for (k, &p) in cyc.iter().enumerate() {
                let q = cyc[(k + 1) % cyc.len()];
                for x in [p, q] {
                    if x == 0 || x > m {
                        return Err(Error::PointOutOfRange { point: x, m });
                    }
                }
                if img[p - 1].replace(q - 1).is_some() {
                    return Err(Error::NotBijection(p));
                }
            }
        }
        Perm::from_images(img.iter().enumerate().map(|(i, j)| j.unwrap_or(i)).collect())
    }

    /// Parses cycle notation `"(1 4)(2 5)"` (also `"(1,2,3)"`) or one-line
    /// notation `"3,5,6,7,2,8,4,9,1"`. `m` pads cycle notation with fixed
    /// points; it must match the length of one-line input.
    pub fn parse(text: &str, m: Option<usize>) -> Result<Self> {
        let text = text.trim();
        if text.contains('(') {
            let mut cycles = Vec::new();
            let mut rest = text;
            while !rest.is_empty() {
                let body = rest
                    .strip_prefix('(')
                    .and_then(|r| r.split_once(')'))
                    .ok_or_else(|| Error::Parse(format!("malformed cycle notation `{text}`")))?;
                let cyc = parse_points(body.0)?;
                cycles.push(cyc);
                rest = body.1.trim_start();
            }
            let max = cycles.iter().flatten().copied().max().unwrap_or(0);
            let m = match m {
                Some(m) if m < max => return Err(Error::PointOutOfRange { point: max, m }),
                Some(m) => m,
                None => max,
            };
            if cycles.iter().flatten().any(|&p| p == 0) {
                return Err(Error::PointOutOfRange { point: 0, m });
            }
            Perm::from_cycles(m, &cycles)
        } else {
            let pts = parse_points(text)?;
            if let Some(m) = m {
                if m != pts.len() {
                    return Err(Error::Parse(format!(
                        "one-line notation has {} points, expected {m}",
                        pts.len()
                    )));
                }
            }
            Perm::from_one_line(&pts)
        }
    }

    pub fn len(&self) -> usize {
        self.img.len()
    }

    pub fn is_empty(&self) -> bool {
        self.img.is_empty()
    }

    /// 0-based images.
    pub fn images(&self) -> &[usize] {
        &self.img
    }

    pub fn apply(&self, i: usize) -> usize {
        self.img[i]
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.img.iter().map(|&j| j + 1).collect()
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.img.iter().enumerate() {
            inv[j] = i;
        }
        Perm { img: inv }
    }

    /// `self ∘ other`, i.e. `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len());
        Perm {
            img: other.img.iter().map(|&j| self.img[j]).collect(),
        }
    }

    /// Cycles as 0-based point lists, each starting at its smallest point,
    /// ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i);
                i = self.img[i];
            }
            out.push(cyc);
        }
        out
    }

    /// `c(α)`: number of cycles, fixed points included; 0 for the empty
    /// permutation.
    pub fn cycle_count(&self) -> usize {
        count_cycles(&self.img)
    }

    /// `f(α)`: number of cycles of `σ ∘ α⁻¹` with `σ(i) = i + 1 mod m`.
    /// The empty permutation has one face.
    pub fn face_count(&self) -> usize {
        let m = self.len();
        if m == 0 {
            return 1;
        }
        let mut phi = vec![0; m];
        for (i, &j) in self.img.iter().enumerate() {
            // α⁻¹(j) = i, so φ(j) = σ(i)
            phi[j] = (i + 1) % m;
        }
        count_cycles(&phi)
    }

    /// `α|_U`: each `u ∈ U` goes to the next point of its cycle lying in
    /// `U`; points renumbered `0..|U|` preserving order. Bit `i` of `mask`
    /// selects point `i`.
    pub fn subperm(&self, mask: u64) -> Perm {
        let m = self.len();
        debug_assert!(m == 64 || mask >> m == 0);
        let mut rank = [usize::MAX; MAX_POINTS];
        let mut k = 0;
        for (i, r) in rank.iter_mut().enumerate().take(m) {
            if mask >> i & 1 == 1 {
                *r = k;
                k += 1;
            }
        }
        let mut img = Vec::with_capacity(k);
        for i in 0..m {
            if mask >> i & 1 == 1 {
                let mut j = self.img[i];
                while mask >> j & 1 == 0 {
                    j = self.img[j];
                }
                img.push(rank[j]);
            }
        }
        Perm { img }
    }

    /// Subpermutation on 1-based points.
    pub fn subperm_points(&self, points: &[usize]) -> Result<Perm> {
        let mut mask = 0u64;
        for &p in points {
            if p == 0 || p > self.len() {
                return Err(Error::PointOutOfRange { point: p, m: self.len() });
            }
            mask |= 1 << (p - 1);
        }
        Ok(self.subperm(mask))
    }

    /// `self` followed by `other` with `other`'s points shifted up.
    pub fn concat(&self, other: &Perm) -> Perm {
        let m = self.len();
        let mut img = self.img.clone();
        img.extend(other.img.iter().map(|&j| j + m));
        Perm { img }
    }

    /// Conjugation by the transposition `(l l+1)`, 0-based `l`.
    pub fn swap_adjacent(&self, l: usize) -> Perm {
        let t = |x: usize| {
            if x == l {
                l + 1
            } else if x == l + 1 {
                l
            } else {
                x
            }
        };
        let mut img = vec![0; self.len()];
        for (i, &j) in self.img.iter().enumerate() {
            img[t(i)] = t(j);
        }
        Perm { img }
    }

    /// Conjugation by the rotation `i -> i + k mod m`.
    pub fn rotate(&self, k: usize) -> Perm {
        let m = self.len();
        if m == 0 {
            return self.clone();
        }
        let mut img = vec![0; m];
        for (i, &j) in self.img.iter().enumerate() {
            img[(i + k) % m] = (j + k) % m;
        }
        Perm { img }
    }

    /// 2-cycles as 0-based pairs `(p, q)` with `p < q`.
    pub fn two_cycles(&self) -> Vec<(usize, usize)> {
        self.img
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i < j && self.img[j] == i)
            .map(|(i, &j)| (i, j))
            .collect()
    }

    /// Pairs of interlacing 2-cycles, each pair listed once.
    pub fn interlacing_two_cycle_pairs(&self) -> Vec<((usize, usize), (usize, usize))> {
        self.two_cycles()
            .into_iter()
            .tuple_combinations()
            .filter(|&(a, b)| interlace(a, b))
            .collect()
    }

    /// Pivot along two interlacing 2-cycles (1-based pairs): the circular
    /// word `A a1 B b1 C a2 D b2 E` becomes `A a1 D b1 C a2 B b2 E` and the
    /// permutation is carried along.
    pub fn pivot(&self, a: (usize, usize), b: (usize, usize)) -> Result<Perm> {
        let m = self.len();
        let check = |(p, q): (usize, usize)| -> Result<(usize, usize)> {
            for x in [p, q] {
                if x == 0 || x > m {
                    return Err(Error::PointOutOfRange { point: x, m });
                }
            }
            let (p0, q0) = (p - 1, q - 1);
            if p0 == q0 || self.img[p0] != q0 || self.img[q0] != p0 {
                return Err(Error::NotTwoCycle(p, q));
            }
            Ok((p0.min(q0), p0.max(q0)))
        };
        let a0 = check(a)?;
        let b0 = check(b)?;
        if !interlace(a0, b0) {
            return Err(Error::NotInterlacing(a.0, a.1, b.0, b.1));
        }
        Ok(self.pivot_unchecked(a0, b0))
    }

    pub(crate) fn pivot_unchecked(&self, a: (usize, usize), b: (usize, usize)) -> Perm {
        self.pivot_tracked(a, b).0
    }

    /// Pivot along two interlacing 2-cycles (0-based, unchecked), also
    /// returning where every old point went.
    pub fn pivot_tracked(&self, a: (usize, usize), b: (usize, usize)) -> (Perm, Vec<usize>) {
        let mut pts = [a.0, a.1, b.0, b.1];
        pts.sort_unstable();
        let [p1, p2, p3, p4] = pts;
        let m = self.len();
        let mut seq = Vec::with_capacity(m);
        seq.extend(0..p1);
        seq.push(p1);
        seq.extend(p3 + 1..p4);
        seq.push(p2);
        seq.extend(p2 + 1..p3);
        seq.push(p3);
        seq.extend(p1 + 1..p2);
        seq.push(p4);
        seq.extend(p4 + 1..m);
        let mut pos = vec![0; m];
        for (k, &x) in seq.iter().enumerate() {
            pos[x] = k;
        }
        let img = seq.iter().map(|&x| pos[self.img[x]]).collect();
        (Perm { img }, pos)
    }

    pub fn is_fixed_point_free_involution(&self) -> bool {
        self.img
            .iter()
            .enumerate()
            .all(|(i, &j)| j != i && self.img[j] == i)
    }

    /// Cycle notation, fixed points omitted; `()` for the identity.
    pub fn cycle_notation(&self) -> String {
        let s: String = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| format!("({})", c.iter().map(|&p| p + 1).join(" ")))
            .collect();
        if s.is_empty() {
            "()".into()
        } else {
            s
        }
    }

    /// Compact byte key for memo tables.
    pub fn key(&self) -> Box<[u8]> {
        self.img.iter().map(|&j| j as u8).collect()
    }
}

fn interlace(a: (usize, usize), b: (usize, usize)) -> bool {
    (a.0 < b.0 && b.0 < a.1 && a.1 < b.1) || (b.0 < a.0 && a.0 < b.1 && b.1 < a.1)
}

fn count_cycles(img: &[usize]) -> usize {
    let mut seen = vec![false; img.len()];
    let mut c = 0;
    for s in 0..img.len() {
        if seen[s] {
            continue;
        }
        c += 1;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = img[i];
        }
    }
    c
}

fn parse_points(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad point `{t}`")))
        })
        .collect()
}

impl fmt::Display for Perm {
    /// Canonical one-line form, `3,1,2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.img.iter().map(|&j| j + 1).join(","))
    }
}

impl FromStr for Perm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Perm::parse(s, None)
    }
}

/// All permutations of `m` points in lexicographic one-line order.
pub fn all_perms(m: usize) -> impl Iterator<Item = Perm> {
    (0..m)
        .permutations(m)
        .map(Perm::from_images_unchecked)
}

/// A chord diagram: a fixed-point-free involution on `2n` points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChordDiag(Perm);

impl ChordDiag {
    pub fn new(p: Perm) -> Result<Self> {
        if p.len() % 2 == 1 || !p.is_fixed_point_free_involution() {
            return Err(Error::NotChordDiagram);
        }
        Ok(ChordDiag(p))
    }

    /// From 1-based chord endpoint pairs.
    pub fn from_chords(chords: &[(usize, usize)]) -> Result<Self> {
        let cycles: Vec<Vec<usize>> = chords.iter().map(|&(a, b)| vec![a, b]).collect();
        ChordDiag::new(Perm::from_cycles(2 * chords.len(), &cycles)?)
    }

    pub fn perm(&self) -> &Perm {
        &self.0
    }

    pub fn into_perm(self) -> Perm {
        self.0
    }

    pub fn num_chords(&self) -> usize {
        self.0.len() / 2
    }

    /// Chords as 0-based `(p, q)` with `p < q`, ordered by `p`.
    pub fn chords(&self) -> Vec<(usize, usize)> {
        self.0.two_cycles()
    }

    pub fn intersection_graph(&self) -> Graph {
        let chords = self.chords();
        let mut g = Graph::empty(chords.len());
        for (i, j) in (0..chords.len()).tuple_combinations() {
            if interlace(chords[i], chords[j]) {
                g.add_edge_unchecked(i, j);
            }
        }
        g
    }

    /// Sub-diagram on the chords selected by `mask` (chord order as in
    /// [`ChordDiag::chords`]).
    pub fn restrict(&self, mask: u64) -> ChordDiag {
        let mut pts = 0u64;
        for (i, (p, q)) in self.chords().into_iter().enumerate() {
            if mask >> i & 1 == 1 {
                pts |= 1 << p | 1 << q;
            }
        }
        ChordDiag(self.0.subperm(pts))
    }

    pub fn face_count(&self) -> usize {
        self.0.face_count()
    }

    /// Pivot on two interlacing chords given by chord index.
    pub fn pivot_chords(&self, a: usize, b: usize) -> Result<ChordDiag> {
        let ch = self.chords();
        let (ca, cb) = (ch[a], ch[b]);
        let p = self.0.pivot((ca.0 + 1, ca.1 + 1), (cb.0 + 1, cb.1 + 1))?;
        Ok(ChordDiag(p))
    }

    /// The four diagrams of a 4-term relation at the adjacent ends `e`, `e2`
    /// (1-based points) of distinct chords `x ∋ e` and `y ∋ e2`:
    /// `B`, `B` with `e`, `e2` exchanged, and each of those with `e` slid
    /// along `y` to its far end without crossing `y`.
    pub fn four_term_quadruple(&self, e: usize, e2: usize) -> Result<[ChordDiag; 4]> {
        let words = self.four_term_words(e, e2)?;
        Ok(words.map(|w| w.to_diag()))
    }

    /// As [`ChordDiag::four_term_quadruple`], keeping chord identities.
    pub fn four_term_words(&self, e: usize, e2: usize) -> Result<[ChordWord; 4]> {
        let len = self.0.len();
        for x in [e, e2] {
            if x == 0 || x > len {
                return Err(Error::PointOutOfRange { point: x, m: len });
            }
        }
        let (e0, f0) = (e - 1, e2 - 1);
        if (e0 + 1) % len != f0 && (f0 + 1) % len != e0 {
            return Err(Error::NotAdjacent(e, e2));
        }
        if self.0.apply(e0) == f0 {
            return Err(Error::SameChord(e, e2));
        }
        let b1 = ChordWord::from_diag(self);
        let mut b2 = b1.clone();
        b2.word.swap(e0, f0);
        let b3 = b1.slide(e0, f0);
        let b4 = b2.slide(f0, e0);
        Ok([b1, b2, b3, b4])
    }
}

/// A chord diagram as the circular word of chord identities read from
/// point 1; every identity occurs exactly twice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordWord {
    word: Vec<usize>,
}

impl ChordWord {
    pub fn from_diag(d: &ChordDiag) -> Self {
        let mut word = vec![0; d.0.len()];
        for (i, (p, q)) in d.chords().into_iter().enumerate() {
            word[p] = i;
            word[q] = i;
        }
        ChordWord { word }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn num_chords(&self) -> usize {
        self.word.len() / 2
    }

    fn ends(&self, c: usize) -> (usize, usize) {
        let mut it = self.word.iter().positions(|&x| x == c);
        (it.next().unwrap(), it.next().unwrap())
    }

    /// Moves the end at position `e` (adjacent to position `near`, an end of
    /// another chord `y`) next to the far end of `y`, staying on the same
    /// side of `y`.
    fn slide(&self, e: usize, near: usize) -> ChordWord {
        let len = self.word.len();
        let x = self.word[e];
        let y = self.word[near];
        let (y1, y2) = self.ends(y);
        let far = if y1 == near { y2 } else { y1 };
        // circular order starting at `near`
        let order: Vec<usize> = (0..len).map(|k| (near + k) % len).collect();
        let kf = order.iter().position(|&p| p == far).unwrap();
        let ke = order.iter().position(|&p| p == e).unwrap();
        let mut labels: Vec<usize> = order.iter().map(|&p| self.word[p]).collect();
        labels.remove(ke);
        let kf = if ke < kf { kf - 1 } else { kf };
        if ke < kf + 1 {
            // e sits between `near` and `far`: land just before `far`
            labels.insert(kf, x);
        } else {
            labels.insert(kf + 1, x);
        }
        // restore reading from the original point 1
        let mut word = vec![0; len];
        for (k, l) in labels.into_iter().enumerate() {
            word[(near + k) % len] = l;
        }
        ChordWord { word }
    }

    pub fn to_diag(&self) -> ChordDiag {
        let len = self.word.len();
        let mut img = vec![0; len];
        for c in 0..len / 2 {
            let (p, q) = self.ends(c);
            img[p] = q;
            img[q] = p;
        }
        ChordDiag(Perm::from_images_unchecked(img))
    }

    /// Intersection graph with vertex `i` the chord with identity `i`.
    pub fn intersection_graph(&self) -> Graph {
        let n = self.num_chords();
        let ends: Vec<_> = (0..n).map(|c| self.ends(c)).collect();
        let mut g = Graph::empty(n);
        for (i, j) in (0..n).tuple_combinations() {
            if interlace(ends[i], ends[j]) {
                g.add_edge_unchecked(i, j);
            }
        }
        g
    }
}

impl fmt::Display for ChordDiag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.cycle_notation())
    }
}

/// All chord diagrams with `n` chords (`(2n-1)!!` of them).
pub fn all_chord_diagrams(n: usize) -> Vec<ChordDiag> {
    fn rec(img: &mut Vec<usize>, out: &mut Vec<ChordDiag>) {
        let Some(p) = img.iter().position(|&j| j == usize::MAX) else {
            out.push(ChordDiag(Perm::from_images_unchecked(img.clone())));
            return;
        };
        for q in p + 1..img.len() {
            if img[q] == usize::MAX {
                img[p] = q;
                img[q] = p;
                rec(img, out);
                img[p] = usize::MAX;
                img[q] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![usize::MAX; 2 * n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn parse_cycle_notation() {
        assert_eq!(Perm::parse("(1 3 2)", Some(3)).unwrap().one_line(), vec![3, 1, 2]);
        assert_eq!(Perm::parse("(1 2)(3)", Some(3)).unwrap().one_line(), vec![2, 1, 3]);
        assert_eq!(Perm::parse("(1 2)", Some(4)).unwrap().one_line(), vec![2, 1, 3, 4]);
        assert_eq!(perm("(1,2,3)").one_line(), vec![2, 3, 1]);
    }

    #[test]
    fn parse_one_line() {
        let p = perm("3,5,6,7,2,8,4,9,1");
        assert_eq!(p.len(), 9);
        assert_eq!(p.to_string(), "3,5,6,7,2,8,4,9,1");
        assert_eq!(perm("").len(), 0);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("1,1,2".parse::<Perm>(), Err(Error::NotBijection(1))));
        assert!(matches!("1,4,2".parse::<Perm>(), Err(Error::PointOutOfRange { .. })));
        assert!(matches!("(1 2".parse::<Perm>(), Err(Error::Parse(_))));
        assert!(matches!("(1 2)(2 3)".parse::<Perm>(), Err(Error::NotBijection(2))));
        assert!(matches!("a,b".parse::<Perm>(), Err(Error::Parse(_))));
        assert!(matches!(Perm::parse("(1 5)", Some(3)), Err(Error::PointOutOfRange { .. })));
        assert!(matches!("(0 1)".parse::<Perm>(), Err(Error::PointOutOfRange { .. })));
    }

    #[test]
    fn cycle_counts() {
        assert_eq!(Perm::identity(3).cycle_count(), 3);
        assert_eq!(perm("(1 3)(2 4)").cycle_count(), 2);
        assert_eq!(perm("(1 3 2)").cycle_count(), 1);
        assert_eq!(Perm::empty().cycle_count(), 0);
    }

    #[test]
    fn face_counts() {
        for m in 1..=6 {
            assert_eq!(Perm::standard_cycle(m).face_count(), m);
        }
        assert_eq!(perm("(1 3 2)").face_count(), 1);
        assert_eq!(perm("(1 4)(2 5)(3 6)").face_count(), 2);
        assert_eq!(Perm::empty().face_count(), 1);
    }

    #[test]
    fn subperms() {
        let a = perm("(1 3 2)");
        assert_eq!(a.subperm(0b101), perm("(1 2)"));
        assert_eq!(a.subperm(0b111), a);
        assert_eq!(perm("(1 3)(2 4)").subperm(0b0011), Perm::identity(2));
        assert_eq!(a.subperm(0), Perm::empty());
    }

    #[test]
    fn concatenation() {
        let t = perm("(1 2)");
        assert_eq!(t.concat(&t), perm("(1 2)(3 4)"));
        assert_eq!(Perm::empty().concat(&t), t);
    }

    #[test]
    fn intersection_graphs() {
        let k3 = ChordDiag::new(perm("(1 4)(2 5)(3 6)")).unwrap().intersection_graph();
        assert_eq!(k3, Graph::complete(3));
        let g = ChordDiag::new(perm("(1 2)(3 4)")).unwrap().intersection_graph();
        assert_eq!(g, Graph::empty(2));
        let k2 = ChordDiag::new(perm("(1 3)(2 4)")).unwrap().intersection_graph();
        assert_eq!(k2, Graph::complete(2));
    }

    #[test]
    fn pivot_nine_point_example() {
        let a = perm("3,5,6,7,2,8,4,9,1");
        let p = a.pivot((2, 5), (4, 7)).unwrap();
        assert_eq!(p.to_string(), "6,5,8,7,2,3,4,9,1");
        assert_eq!(p.pivot((2, 5), (4, 7)).unwrap(), a);
        // argument order does not matter
        assert_eq!(a.pivot((7, 4), (5, 2)).unwrap(), p);
    }

    #[test]
    fn pivot_errors() {
        let a = perm("3,5,6,7,2,8,4,9,1");
        assert!(matches!(a.pivot((1, 3), (4, 7)), Err(Error::NotTwoCycle(1, 3))));
        let b = perm("(1 2)(3 4)");
        assert!(matches!(b.pivot((1, 2), (3, 4)), Err(Error::NotInterlacing(..))));
    }

    #[test]
    fn chord_diagram_counts() {
        let counts: Vec<_> = (0..=5).map(|n| all_chord_diagrams(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 15, 105, 945]);
    }

    #[test]
    fn four_term_errors() {
        let b = ChordDiag::new(perm("(1 3)(2 4)")).unwrap();
        assert!(matches!(b.four_term_quadruple(1, 3), Err(Error::NotAdjacent(1, 3))));
        let c = ChordDiag::new(perm("(1 2)(3 4)")).unwrap();
        assert!(matches!(c.four_term_quadruple(1, 2), Err(Error::SameChord(1, 2))));
        assert!(b.four_term_quadruple(4, 1).is_ok());
    }

    #[test]
    fn not_a_chord_diagram() {
        assert_eq!(ChordDiag::new(perm("(1 2 3)")), Err(Error::NotChordDiagram));
        assert_eq!(ChordDiag::new(Perm::identity(2)), Err(Error::NotChordDiagram));
    }
}
