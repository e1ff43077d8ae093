//! Parallelogram polyominoes, their area-word encoding, and the three
//! statistics area, dinv and bounce, plus brute-force generating polynomials.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::dyck;
use crate::error::{Error, Result};
use crate::qtpoly::QTPolynomial;

/// A step of a monotone lattice path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    N,
    E,
}

/// A barred or unbarred natural number, the alphabet of area words.
///
/// The total order 0̄ < 1 < 1̄ < 2 < 2̄ < ... is realized by `rank`:
/// rank(k̄) = 2k, rank(k) = 2k - 1. Unbarred letters have value >= 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    rank: u32,
}

impl Letter {
    pub fn barred(value: u32) -> Letter {
        Letter { rank: 2 * value }
    }

    pub fn unbarred(value: u32) -> Letter {
        assert!(value >= 1, "unbarred letters start at 1");
        Letter { rank: 2 * value - 1 }
    }

    pub fn from_rank(rank: u32) -> Letter {
        Letter { rank }
    }

    pub fn rank(self) -> u32 {
        self.rank
    }

    pub fn is_barred(self) -> bool {
        self.rank % 2 == 0
    }

    pub fn value(self) -> u32 {
        (self.rank + 1) / 2
    }

    /// The next letter in the total order.
    pub fn successor(self) -> Letter {
        Letter { rank: self.rank + 1 }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_barred() {
            write!(f, "{}b", self.value())
        } else {
            write!(f, "{}", self.value())
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Letter> {
        let (digits, barred) = match s.strip_suffix('b') {
            Some(d) => (d, true),
            None => (s, false),
        };
        let value: u32 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad letter token '{s}'")))?;
        if !barred && value == 0 {
            return Err(Error::Parse("unbarred letters start at 1".into()));
        }
        Ok(if barred {
            Letter::barred(value)
        } else {
            Letter::unbarred(value)
        })
    }
}

/// A validated area word of a parallelogram polyomino.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AreaWord {
    letters: Vec<Letter>,
    m: u32,
    n: u32,
}

impl AreaWord {
    /// Validate the three characterization conditions and construct.
    pub fn new(letters: Vec<Letter>) -> Result<AreaWord> {
        let (m, n) = dyck::validate_area_word(&letters)?;
        Ok(AreaWord { letters, m, n })
    }

    pub(crate) fn new_unchecked(letters: Vec<Letter>, m: u32, n: u32) -> AreaWord {
        AreaWord { letters, m, n }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Width of the bounding box (count of unbarred letters).
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Height of the bounding box (count of barred letters).
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Sum of the letter values, bars disregarded.
    pub fn area(&self) -> u64 {
        self.letters.iter().map(|l| l.value() as u64).sum()
    }

    /// Number of pairs i < j where the later letter is the immediate
    /// successor of the earlier one in the alphabet order.
    pub fn dinv(&self) -> u64 {
        let mut count = 0u64;
        for i in 0..self.letters.len() {
            for j in i + 1..self.letters.len() {
                if self.letters[j].rank() == self.letters[i].rank() + 1 {
                    count += 1;
                }
            }
        }
        count
    }

    /// Number of dinv pairs in which one of the two letters sits at
    /// position `index`.
    pub fn dinv_pairs_involving(&self, index: usize) -> u64 {
        let mut count = 0u64;
        for i in 0..self.letters.len() {
            for j in i + 1..self.letters.len() {
                if self.letters[j].rank() == self.letters[i].rank() + 1 && (i == index || j == index)
                {
                    count += 1;
                }
            }
        }
        count
    }

    /// (number of 1's, number of 1̄'s).
    pub fn one_counts(&self) -> (u32, u32) {
        let r = self.letters.iter().filter(|l| l.rank() == 1).count() as u32;
        let s = self.letters.iter().filter(|l| l.rank() == 2).count() as u32;
        (r, s)
    }
}

impl fmt::Display for AreaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", tokens.join(" "))
    }
}

impl FromStr for AreaWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<AreaWord> {
        let letters: Vec<Letter> = s
            .split_whitespace()
            .map(|tok| tok.parse())
            .collect::<Result<_>>()?;
        AreaWord::new(letters)
    }
}

/// A parallelogram polyomino: two non-touching monotone paths from (0,0)
/// to (m,n).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polyomino {
    m: u32,
    n: u32,
    upper: Vec<Step>,
    lower: Vec<Step>,
}

fn path_points(steps: &[Step]) -> Vec<(u32, u32)> {
    let mut pts = vec![(0u32, 0u32)];
    let (mut x, mut y) = (0u32, 0u32);
    for s in steps {
        match s {
            Step::N => y += 1,
            Step::E => x += 1,
        }
        pts.push((x, y));
    }
    pts
}

impl Polyomino {
    /// Validate a pair of paths and build the polyomino.
    pub fn from_paths(upper: Vec<Step>, lower: Vec<Step>) -> Result<Polyomino> {
        let count = |steps: &[Step], which: Step| steps.iter().filter(|&&s| s == which).count();
        let m = count(&upper, Step::E) as u32;
        let n = count(&upper, Step::N) as u32;
        if m == 0 || n == 0 {
            return Err(Error::InvalidPolyomino(
                "bounding box must have positive width and height".into(),
            ));
        }
        if count(&lower, Step::E) as u32 != m || count(&lower, Step::N) as u32 != n {
            return Err(Error::InvalidPolyomino(
                "upper and lower paths must end at the same corner".into(),
            ));
        }
        let upper_pts = path_points(&upper);
        let lower_pts: HashSet<(u32, u32)> = path_points(&lower).into_iter().collect();
        for &p in upper_pts.iter() {
            if p != (0, 0) && p != (m, n) && lower_pts.contains(&p) {
                return Err(Error::InvalidPolyomino(format!(
                    "paths touch at interior point {p:?}"
                )));
            }
        }
        Ok(Polyomino { m, n, upper, lower })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn upper(&self) -> &[Step] {
        &self.upper
    }

    pub fn lower(&self) -> &[Step] {
        &self.lower
    }

    /// Height of the upper path over the cell column [i, i+1], i.e. the
    /// y-coordinate of its unique E-step spanning that column.
    pub(crate) fn upper_heights(&self) -> Vec<u32> {
        heights(&self.upper)
    }

    pub(crate) fn lower_heights(&self) -> Vec<u32> {
        heights(&self.lower)
    }

    /// x-position of the lower path's N-step from height y-1 to y, for
    /// y = 1..=n (index y-1).
    pub(crate) fn lower_rise_positions(&self) -> Vec<u32> {
        rise_positions(&self.lower)
    }

    /// Number of interior cells, counted directly column by column.
    pub fn interior_cells(&self) -> u64 {
        let up = self.upper_heights();
        let lo = self.lower_heights();
        up.iter()
            .zip(lo.iter())
            .map(|(&u, &l)| (u - l) as u64)
            .sum()
    }

    /// The two-stage labeling of the perimeter followed by the
    /// antidiagonal sweep.
    pub fn area_word(&self) -> AreaWord {
        let up = self.upper_heights();
        let lo = self.lower_heights();
        let m = self.m as usize;

        // Stage 1: one NW diagonal per lower E-step; record crossed cells.
        let mut crossed: HashSet<(u32, u32)> = HashSet::new();
        let mut lower_labels: Vec<u32> = Vec::with_capacity(m);
        for i in 0..m {
            let mut d = 0u32;
            loop {
                if d as usize > i {
                    break;
                }
                let col = i as u32 - d;
                let row = lo[i] + d;
                if row >= up[col as usize] {
                    break;
                }
                crossed.insert((col, row));
                d += 1;
            }
            lower_labels.push(d);
        }

        // Stage 2: for each upper N-step, count interior cells in its row,
        // East of it, left untouched by stage 1.
        let mut upper_labels: Vec<u32> = Vec::with_capacity(self.n as usize);
        let upper_rises = rise_positions(&self.upper);
        for (j, &x) in upper_rises.iter().enumerate() {
            // N-step from (x, j) to (x, j+1); its row is j.
            let mut dots = 0u32;
            for col in x as usize..m {
                let interior = lo[col] <= j as u32 && (j as u32) < up[col];
                if interior && !crossed.contains(&(col as u32, j as u32)) {
                    dots += 1;
                }
            }
            upper_labels.push(dots);
        }

        // Sweep by the antidiagonal index of each step's SW endpoint, which
        // equals the step's 0-based position along its path; on ties the
        // upper-path label comes first.
        let mut events: Vec<(u32, u8, Letter)> = Vec::new();
        let mut rise_idx = 0usize;
        for (pos, s) in self.upper.iter().enumerate() {
            if *s == Step::N {
                events.push((pos as u32, 0, Letter::barred(upper_labels[rise_idx])));
                rise_idx += 1;
            }
        }
        let mut e_idx = 0usize;
        for (pos, s) in self.lower.iter().enumerate() {
            if *s == Step::E {
                let v = lower_labels[e_idx];
                // The first cell of every diagonal is interior on a valid
                // polyomino, so labels are never zero.
                assert!(v >= 1, "zero stage-1 label on a valid polyomino");
                events.push((pos as u32, 1, Letter::unbarred(v)));
                e_idx += 1;
            }
        }
        events.sort_by_key(|&(pos, side, _)| (pos, side));
        let letters: Vec<Letter> = events.into_iter().map(|(_, _, l)| l).collect();
        AreaWord::new_unchecked(letters, self.m, self.n)
    }

    /// The deterministic ray-walk bounce path.
    pub fn bounce_path(&self) -> BouncePath {
        let up = self.upper_heights();
        let rise_x = self.lower_rise_positions();
        let (m, n) = (self.m, self.n);

        let mut horizontal_runs = vec![1u32];
        let mut vertical_runs: Vec<u32> = Vec::new();
        let (mut x, mut y) = (1u32, 0u32);
        while (x, y) != (m, n) {
            // North until the East endpoint of the upper E-step over [x-1, x].
            let target = up[(x - 1) as usize];
            assert!(target > y, "bounce path must make progress");
            vertical_runs.push(target - y);
            y = target;
            if (x, y) == (m, n) {
                break;
            }
            // East until the North endpoint of the lower N-step ending at height y.
            let target_x = rise_x[(y - 1) as usize];
            assert!(target_x > x, "bounce path must make progress");
            horizontal_runs.push(target_x - x);
            x = target_x;
        }
        BouncePath {
            horizontal_runs,
            vertical_runs,
        }
    }

    /// Label-sum of the bounce path, bars disregarded.
    pub fn bounce(&self) -> u64 {
        self.bounce_path().label_sum()
    }

    /// (r, s) = lengths of the first vertical and first horizontal run after
    /// the initial East step; s is 0 when the walk ends on its first climb.
    pub fn bounce_one_counts(&self) -> (u32, u32) {
        let bp = self.bounce_path();
        let r = bp.vertical_runs[0];
        let s = bp.horizontal_runs.get(1).copied().unwrap_or(0);
        (r, s)
    }
}

fn heights(steps: &[Step]) -> Vec<u32> {
    let mut out = Vec::new();
    let mut y = 0u32;
    for s in steps {
        match s {
            Step::N => y += 1,
            Step::E => out.push(y),
        }
    }
    out
}

fn rise_positions(steps: &[Step]) -> Vec<u32> {
    let mut out = Vec::new();
    let mut x = 0u32;
    for s in steps {
        match s {
            Step::N => out.push(x),
            Step::E => x += 1,
        }
    }
    out
}

/// Run-length description of a bounce path. The i-th vertical run carries
/// the unbarred label i (from 1); the i-th horizontal run carries the
/// barred label ī (from 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BouncePath {
    pub horizontal_runs: Vec<u32>,
    pub vertical_runs: Vec<u32>,
}

impl BouncePath {
    pub fn label_sum(&self) -> u64 {
        let vert: u64 = self
            .vertical_runs
            .iter()
            .enumerate()
            .map(|(i, &r)| (i as u64 + 1) * r as u64)
            .sum();
        let horiz: u64 = self
            .horizontal_runs
            .iter()
            .enumerate()
            .map(|(i, &s)| i as u64 * s as u64)
            .sum();
        vert + horiz
    }
}

/// The Narayana number N(a,b) = (1/a) C(a,b) C(a,b-1).
pub fn narayana_count(a: u32, b: u32) -> Result<BigInt> {
    if b == 0 || b > a {
        return Err(Error::OutOfRange(format!(
            "narayana_count requires 1 <= b <= a, got a={a}, b={b}"
        )));
    }
    let c1 = binomial(a, b);
    let c2 = binomial(a, b - 1);
    let prod = c1 * c2;
    debug_assert!((&prod % BigInt::from(a)) == BigInt::from(0u32));
    Ok(prod / BigInt::from(a))
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut out = BigInt::from(1u32);
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

/// All valid area words for the m x n box, generated recursively from the
/// characterization conditions.
pub fn enumerate_area_words(m: u32, n: u32) -> Result<Vec<AreaWord>> {
    if m == 0 || n == 0 {
        return Err(Error::OutOfRange(
            "enumeration requires m >= 1 and n >= 1".into(),
        ));
    }
    let mut out = Vec::new();
    let mut prefix = vec![Letter::barred(0)];
    // budgets after the leading 0̄
    extend(&mut prefix, 0, m, n - 1, &mut out, m, n);
    Ok(out)
}

fn extend(
    prefix: &mut Vec<Letter>,
    last_rank: u32,
    unbarred_left: u32,
    barred_left: u32,
    out: &mut Vec<AreaWord>,
    m: u32,
    n: u32,
) {
    if unbarred_left == 0 && barred_left == 0 {
        out.push(AreaWord::new_unchecked(prefix.clone(), m, n));
        return;
    }
    for rank in 1..=last_rank + 1 {
        let barred = rank % 2 == 0;
        if barred && barred_left == 0 {
            continue;
        }
        if !barred && unbarred_left == 0 {
            continue;
        }
        prefix.push(Letter::from_rank(rank));
        let (u, b) = if barred {
            (unbarred_left, barred_left - 1)
        } else {
            (unbarred_left - 1, barred_left)
        };
        extend(prefix, rank, u, b, out, m, n);
        prefix.pop();
    }
}

/// Every polyomino of the m x n box, each exactly once.
pub fn enumerate_polyominoes(m: u32, n: u32) -> Result<Vec<Polyomino>> {
    Ok(enumerate_area_words(m, n)?
        .iter()
        .map(dyck::word_to_polyomino)
        .collect::<Result<_>>()?)
}

/// Nara_{m,n}(q,t) = sum over Polyo_{m,n} of t^area q^dinv, optionally
/// restricted to area words with r many 1's and s many 1̄'s.
pub fn nara_enum(m: u32, n: u32, rs_filter: Option<(u32, u32)>) -> Result<QTPolynomial> {
    let mut out = QTPolynomial::zero();
    for w in enumerate_area_words(m, n)? {
        if let Some(rs) = rs_filter {
            if w.one_counts() != rs {
                continue;
            }
        }
        out.add_term(w.dinv() as u32, w.area() as u32, BigInt::from(1u32));
    }
    Ok(out)
}

/// tilde-Nara_{m,n}(q,t) = sum over Polyo_{m,n} of t^bounce q^area,
/// optionally restricted by the first two bounce-run lengths.
pub fn tilde_nara_enum(m: u32, n: u32, rs_filter: Option<(u32, u32)>) -> Result<QTPolynomial> {
    let mut out = QTPolynomial::zero();
    for p in enumerate_polyominoes(m, n)? {
        if let Some(rs) = rs_filter {
            if p.bounce_one_counts() != rs {
                continue;
            }
        }
        let area = p.area_word().area();
        out.add_term(area as u32, p.bounce() as u32, BigInt::from(1u32));
    }
    Ok(out)
}
