//! Refined recursions for the three polynomial families, memoized
//! evaluation, the area-word peel behind the bounce recursion, and the
//! nabla-pairing accessor.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::parking::para_poly;
use crate::polyomino::{nara_enum, tilde_nara_enum, AreaWord, Letter};
use crate::qtpoly::{q_binomial, q_binomial_or_zero, QTPolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    TildeNara,
    Nara,
    Para,
}

/// A memo key: family, box, and the (r, s) refinement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RecursionKey {
    pub family: Family,
    pub boxdim: (u32, u32),
    pub refinement: (u32, u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Enumeration,
    Recursion,
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Method> {
        match s {
            "enumerate" | "enumeration" => Ok(Method::Enumeration),
            "recursion" => Ok(Method::Recursion),
            other => Err(Error::Parse(format!("unknown method {other:?}"))),
        }
    }
}

/// Recursion evaluator with an optional memo table. Memoized and
/// unmemoized evaluation agree; the table only short-circuits repeats.
pub struct Evaluator {
    cache: Option<HashMap<RecursionKey, QTPolynomial>>,
}

impl Default for Evaluator {
    fn default() -> Self {
        Evaluator::new()
    }
}

impl Evaluator {
    pub fn new() -> Evaluator {
        Evaluator {
            cache: Some(HashMap::new()),
        }
    }

    pub fn unmemoized() -> Evaluator {
        Evaluator { cache: None }
    }

    fn eval(&mut self, key: RecursionKey) -> QTPolynomial {
        if let Some(cache) = &self.cache {
            if let Some(v) = cache.get(&key) {
                return v.clone();
            }
        }
        let (r, s) = key.refinement;
        let v = match key.family {
            Family::TildeNara => {
                let (m, n) = key.boxdim;
                self.tilde_nara(m, n, r, s)
            }
            Family::Nara => {
                let (a, b) = key.boxdim;
                self.nara(a, b, r, s)
            }
            Family::Para => {
                let (a, b) = key.boxdim;
                self.para(a, b, r, s)
            }
        };
        if let Some(cache) = &mut self.cache {
            cache.insert(key, v.clone());
        }
        v
    }

    // tildeNara^{(r,s)}_{m,n}, the (bounce, area) polynomial over the
    // polyominoes of Polyo_{m,n} whose bounce path starts with r North
    // steps and s East steps after the initial one.
    fn tilde_nara(&mut self, m: u32, n: u32, r: u32, s: u32) -> QTPolynomial {
        debug_assert!(m >= 1 && (1..=n).contains(&r) && s < m);
        if r == n {
            return if s == m - 1 {
                corner(m + n, m)
            } else {
                QTPolynomial::zero()
            };
        }
        if m == 1 {
            // A single column bounces in one vertical run, so r = n there.
            return QTPolynomial::zero();
        }
        let outer = q_binomial(s + r - 1, s).expect("in range");
        let mut acc = QTPolynomial::zero();
        for h in 1..=n - r {
            let factor = q_binomial_or_zero(s + h - 1, h);
            let mut inner = QTPolynomial::zero();
            for k in 0..=m - s - 1 {
                inner = inner.add(&self.eval(RecursionKey {
                    family: Family::TildeNara,
                    boxdim: (m - s, n - r),
                    refinement: (h, k),
                }));
            }
            acc = acc.add(&factor.mul(&inner));
        }
        outer.mul(&acc).monomial_shift(r + s, m + n - 1)
    }

    // Nara^{(r,s)}_{a,b}, the (area, dinv) polynomial over Polyo_{a,b}
    // refined by (number of 1's, number of 1bar's) in the area word.
    fn nara(&mut self, a: u32, b: u32, r: u32, s: u32) -> QTPolynomial {
        debug_assert!(b >= 1 && (1..=a).contains(&r) && s < b);
        if r == a {
            return if s == b - 1 {
                corner(a + b, b)
            } else {
                QTPolynomial::zero()
            };
        }
        if b == 1 {
            return QTPolynomial::zero();
        }
        let outer = q_binomial(s + r - 1, s).expect("in range");
        let mut acc = QTPolynomial::zero();
        for h in 1..=a - r {
            let factor = q_binomial_or_zero(s + h - 1, h);
            let mut inner = QTPolynomial::zero();
            for k in 0..=b - s - 1 {
                inner = inner.add(&self.eval(RecursionKey {
                    family: Family::Nara,
                    boxdim: (a - r, b - s),
                    refinement: (h, k),
                }));
            }
            acc = acc.add(&factor.mul(&inner));
        }
        outer.mul(&acc).monomial_shift(r + s, a + b - 1)
    }

    // Para^{(r,s)}_{a,b}, the (dinv, area) polynomial over Park_{a,b}
    // refined by the level-0 letter counts. The empty corner is 1.
    fn para(&mut self, a: u32, b: u32, r: u32, s: u32) -> QTPolynomial {
        debug_assert!(r <= a && s <= b);
        if a == 0 && b == 0 {
            return if (r, s) == (0, 0) {
                QTPolynomial::one()
            } else {
                QTPolynomial::zero()
            };
        }
        if s == b {
            return if r == a {
                q_binomial(a + b, a).expect("in range")
            } else {
                QTPolynomial::zero()
            };
        }
        if (r, s) == (0, 0) || a == 0 {
            return QTPolynomial::zero();
        }
        let outer = q_binomial(r + s, r).expect("in range");
        let mut acc = QTPolynomial::zero();
        for k in 1..=b - s {
            let factor = q_binomial_or_zero(r + k - 1, k);
            let mut inner = QTPolynomial::zero();
            for h in 0..=a - r {
                inner = inner.add(&self.eval(RecursionKey {
                    family: Family::Para,
                    boxdim: (a - r, b - s - 1),
                    refinement: (h, k - 1),
                }));
            }
            acc = acc.add(&factor.mul(&inner));
        }
        outer.mul(&acc).monomial_shift(0, a + b - r - s)
    }
}

// (qt)^{total-1} [total-2 choose second-1]_q, the shared corner value of
// the two Nara-family initial conditions.
fn corner(total: u32, second: u32) -> QTPolynomial {
    q_binomial(total - 2, second - 1)
        .expect("in range")
        .monomial_shift(total - 1, total - 1)
}

fn check_nara_range(first: u32, second: u32, r: u32, s: u32) -> Result<()> {
    if first < 1 || second < 1 || r < 1 || r > first || s >= second {
        return Err(Error::OutOfRange(format!(
            "refinement ({r},{s}) out of range for box ({first},{second}): need 1 <= r <= {first}, 0 <= s <= {}",
            second as i64 - 1
        )));
    }
    Ok(())
}

/// tildeNara^{(r,s)}_{m,n} by the bounce recursion.
pub fn tilde_nara_rs(m: u32, n: u32, r: u32, s: u32) -> Result<QTPolynomial> {
    check_nara_range(n, m, r, s)?;
    Ok(Evaluator::new().eval(RecursionKey {
        family: Family::TildeNara,
        boxdim: (m, n),
        refinement: (r, s),
    }))
}

/// Nara^{(r,s)}_{a,b} by the area recursion.
pub fn nara_rs(a: u32, b: u32, r: u32, s: u32) -> Result<QTPolynomial> {
    check_nara_range(a, b, r, s)?;
    Ok(Evaluator::new().eval(RecursionKey {
        family: Family::Nara,
        boxdim: (a, b),
        refinement: (r, s),
    }))
}

/// Para^{(r,s)}_{a,b} by the parking-function recursion.
pub fn para_rs_rec(a: u32, b: u32, r: u32, s: u32) -> Result<QTPolynomial> {
    if r > a || s > b {
        return Err(Error::OutOfRange(format!(
            "refinement ({r},{s}) out of range for box ({a},{b})"
        )));
    }
    Ok(Evaluator::new().eval(RecursionKey {
        family: Family::Para,
        boxdim: (a, b),
        refinement: (r, s),
    }))
}

/// Subtract 1 from every letter, drop the resulting 0's and 0bar's, and
/// turn the leading letter back into 0bar. Returns the peeled word (None
/// when everything is removed) and (h, k) = the counts of 2's and 2bar's
/// in the input.
pub fn word_peel(w: &AreaWord) -> Result<(Option<AreaWord>, u32, u32)> {
    let h = w.letters().iter().filter(|l| **l == Letter::unbarred(2)).count() as u32;
    let k = w.letters().iter().filter(|l| **l == Letter::barred(2)).count() as u32;
    let mut letters: Vec<Letter> = vec![Letter::barred(0)];
    for &l in &w.letters()[1..] {
        if l.value() >= 2 {
            letters.push(if l.is_barred() {
                Letter::barred(l.value() - 1)
            } else {
                Letter::unbarred(l.value() - 1)
            });
        }
    }
    if letters.len() == 1 {
        return Ok((None, h, k));
    }
    Ok((Some(AreaWord::new(letters)?), h, k))
}

fn refinement_range(family: Family, boxdim: (u32, u32)) -> Vec<(u32, u32)> {
    let (first, second) = boxdim;
    match family {
        Family::TildeNara => {
            // box (m, n): 1 <= r <= n, 0 <= s <= m-1
            let mut out = Vec::new();
            for r in 1..=second {
                for s in 0..first {
                    out.push((r, s));
                }
            }
            out
        }
        Family::Nara => {
            let mut out = Vec::new();
            for r in 1..=first {
                for s in 0..second {
                    out.push((r, s));
                }
            }
            out
        }
        Family::Para => {
            let mut out = Vec::new();
            for r in 0..=first {
                for s in 0..=second {
                    out.push((r, s));
                }
            }
            out
        }
    }
}

/// Sum of the refined values over the whole refinement range.
pub fn total_by_recursion(family: Family, boxdim: (u32, u32)) -> Result<QTPolynomial> {
    let mut ev = Evaluator::new();
    let mut acc = QTPolynomial::zero();
    if family == Family::Para && boxdim == (0, 0) {
        return Ok(QTPolynomial::one());
    }
    for refinement in refinement_range(family, boxdim) {
        acc = acc.add(&ev.eval(RecursionKey {
            family,
            boxdim,
            refinement,
        }));
    }
    Ok(acc)
}

/// Nara_{m,n}(q,t), by direct enumeration or by summing the recursion.
pub fn nara_total(m: u32, n: u32, method: Method) -> Result<QTPolynomial> {
    if m < 1 || n < 1 {
        return Err(Error::OutOfRange("box sides must be at least 1".into()));
    }
    match method {
        Method::Enumeration => nara_enum(m, n, None),
        Method::Recursion => total_by_recursion(Family::Nara, (m, n)),
    }
}

/// tildeNara_{m,n}(q,t), by direct enumeration or the recursion.
pub fn tilde_nara_total(m: u32, n: u32, method: Method) -> Result<QTPolynomial> {
    if m < 1 || n < 1 {
        return Err(Error::OutOfRange("box sides must be at least 1".into()));
    }
    match method {
        Method::Enumeration => tilde_nara_enum(m, n, None),
        Method::Recursion => total_by_recursion(Family::TildeNara, (m, n)),
    }
}

/// The pairing of nabla of an elementary symmetric function against
/// h_{m-1} h_{n-1}, represented by its combinatorial equal Para_{n-1,m-1}.
pub fn nabla_pairing(m: u32, n: u32) -> Result<QTPolynomial> {
    if m < 1 || n < 1 {
        return Err(Error::OutOfRange("box sides must be at least 1".into()));
    }
    para_poly(n - 1, m - 1, None)
}
