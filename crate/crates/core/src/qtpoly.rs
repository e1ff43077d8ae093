//! Exact bivariate polynomials in q and t with big-integer coefficients,
//! together with the q-analogues [n]_q, [n]_q! and the Gaussian binomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A sparse polynomial in q and t over the integers.
///
/// Terms are keyed by `(q_exp, t_exp)`; the map never stores a zero
/// coefficient, and the `BTreeMap` key order is exactly the canonical
/// lexicographic serialization order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QTPolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl QTPolynomial {
    pub fn zero() -> Self {
        QTPolynomial::default()
    }

    pub fn one() -> Self {
        QTPolynomial::monomial(0, 0)
    }

    /// The single term q^a t^b with coefficient 1.
    pub fn monomial(q_exp: u32, t_exp: u32) -> Self {
        Self::term(q_exp, t_exp, BigInt::one())
    }

    pub fn term(q_exp: u32, t_exp: u32, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((q_exp, t_exp), coeff);
        }
        QTPolynomial { terms }
    }

    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), BigInt)>,
    {
        let mut p = QTPolynomial::zero();
        for ((a, b), c) in iter {
            p.add_term(a, b, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (q_exp, t_exp) order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, q_exp: u32, t_exp: u32) -> BigInt {
        self.terms
            .get(&(q_exp, t_exp))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, q_exp: u32, t_exp: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((q_exp, t_exp)).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(q_exp, t_exp));
        }
    }

    pub fn add(&self, other: &QTPolynomial) -> QTPolynomial {
        let mut out = self.clone();
        for (&(a, b), c) in other.terms.iter() {
            out.add_term(a, b, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &QTPolynomial) -> QTPolynomial {
        let mut out = QTPolynomial::zero();
        for (&(a1, b1), c1) in self.terms.iter() {
            for (&(a2, b2), c2) in other.terms.iter() {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }

    /// Multiply by q^a t^b.
    pub fn monomial_shift(&self, a: u32, b: u32) -> QTPolynomial {
        QTPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&(x, y), c)| ((x + a, y + b), c.clone()))
                .collect(),
        }
    }

    /// Sum of coefficients, i.e. the evaluation at q = t = 1.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exchange q and t. An involution.
    pub fn swap_qt(&self) -> QTPolynomial {
        QTPolynomial {
            terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect(),
        }
    }

    /// Render as LaTeX, terms joined by `+`. Display-only, not parseable back.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| {
                let mut s = String::new();
                if !c.is_one() || (a == 0 && b == 0) {
                    s.push_str(&c.to_string());
                }
                if a > 0 {
                    s.push_str(&format!("q^{{{a}}}"));
                }
                if b > 0 {
                    s.push_str(&format!("t^{{{b}}}"));
                }
                s
            })
            .collect();
        parts.join("+")
    }
}

impl Add for &QTPolynomial {
    type Output = QTPolynomial;
    fn add(self, rhs: &QTPolynomial) -> QTPolynomial {
        QTPolynomial::add(self, rhs)
    }
}

impl Mul for &QTPolynomial {
    type Output = QTPolynomial;
    fn mul(self, rhs: &QTPolynomial) -> QTPolynomial {
        QTPolynomial::mul(self, rhs)
    }
}

impl fmt::Display for QTPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b), c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            if !c.is_one() || (a == 0 && b == 0) {
                factors.push(c.to_string());
            }
            match a {
                0 => {}
                1 => factors.push("q".to_string()),
                _ => factors.push(format!("q^{a}")),
            }
            match b {
                0 => {}
                1 => factors.push("t".to_string()),
                _ => factors.push(format!("t^{b}")),
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl FromStr for QTPolynomial {
    type Err = Error;

    /// Parse the `Display` form, e.g. `1 + 2*q + q^3*t^3`.
    fn from_str(s: &str) -> Result<QTPolynomial> {
        let s = s.trim();
        if s == "0" {
            return Ok(QTPolynomial::zero());
        }
        let mut out = QTPolynomial::zero();
        for part in s.split(" + ") {
            let mut coeff = BigInt::one();
            let mut q_exp = 0u32;
            let mut t_exp = 0u32;
            let mut saw_any = false;
            for factor in part.trim().split('*') {
                let factor = factor.trim();
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in term '{part}'")));
                }
                saw_any = true;
                if let Some(rest) = factor.strip_prefix("q^") {
                    q_exp = rest
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in '{factor}'")))?;
                } else if factor == "q" {
                    q_exp = 1;
                } else if let Some(rest) = factor.strip_prefix("t^") {
                    t_exp = rest
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in '{factor}'")))?;
                } else if factor == "t" {
                    t_exp = 1;
                } else {
                    coeff = factor
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient '{factor}'")))?;
                }
            }
            if !saw_any {
                return Err(Error::Parse(format!("empty term in '{s}'")));
            }
            out.add_term(q_exp, t_exp, coeff);
        }
        Ok(out)
    }
}

/// [n]_q = 1 + q + ... + q^{n-1}, with [0]_q = 1.
pub fn q_integer(n: u32) -> QTPolynomial {
    if n == 0 {
        return QTPolynomial::one();
    }
    QTPolynomial::from_terms((0..n).map(|i| ((i, 0), BigInt::one())))
}

/// [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
pub fn q_factorial(n: u32) -> QTPolynomial {
    let mut out = QTPolynomial::one();
    for i in 1..=n {
        out = out.mul(&q_integer(i));
    }
    out
}

/// The Gaussian binomial [n choose k]_q, computed by the Pascal recurrence
/// [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q.
pub fn q_binomial(n: u32, k: u32) -> Result<QTPolynomial> {
    if k > n {
        return Err(Error::OutOfRange(format!(
            "q_binomial requires k <= n, got n={n}, k={k}"
        )));
    }
    // row-by-row Pascal triangle in q
    let mut row: Vec<QTPolynomial> = vec![QTPolynomial::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        next.push(QTPolynomial::one());
        for j in 1..m {
            let shifted = row[j as usize].monomial_shift(j, 0);
            next.push(row[j as usize - 1].add(&shifted));
        }
        next.push(QTPolynomial::one());
        row = next;
    }
    Ok(row[k as usize].clone())
}

/// Gaussian binomial extended by zero for k > n; the form the recursion
/// summations need.
pub fn q_binomial_or_zero(n: u32, k: u32) -> QTPolynomial {
    if k > n {
        QTPolynomial::zero()
    } else {
        q_binomial(n, k).expect("k <= n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(s: &str) -> QTPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn q_integer_small() {
        assert_eq!(q_integer(0), QTPolynomial::one());
        assert_eq!(q_integer(1), QTPolynomial::one());
        assert_eq!(q_integer(3), poly("1 + q + q^2"));
    }

    #[test]
    fn q_factorial_small() {
        assert_eq!(q_factorial(0), QTPolynomial::one());
        assert_eq!(q_factorial(2), poly("1 + q"));
        assert_eq!(q_factorial(3), poly("1 + 2*q + 2*q^2 + q^3"));
    }

    #[test]
    fn q_binomial_small() {
        assert_eq!(q_binomial(5, 0).unwrap(), QTPolynomial::one());
        assert_eq!(q_binomial(2, 1).unwrap(), poly("1 + q"));
        assert_eq!(q_binomial(4, 2).unwrap(), poly("1 + q + 2*q^2 + q^3 + q^4"));
        assert!(q_binomial(3, 4).is_err());
    }

    #[test]
    fn q_binomial_matches_factorial_quotient() {
        // [n k]_q * [k]_q! * [n-k]_q! == [n]_q!  -- the definition, used as
        // an oracle for the Pascal computation.
        for n in 0..=12u32 {
            for k in 0..=n {
                let lhs = q_binomial(n, k)
                    .unwrap()
                    .mul(&q_factorial(k))
                    .mul(&q_factorial(n - k));
                assert_eq!(lhs, q_factorial(n), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn q_binomial_symmetry_and_counts() {
        for n in 0..=12u32 {
            for k in 0..=n {
                let b = q_binomial(n, k).unwrap();
                assert_eq!(b, q_binomial(n, n - k).unwrap());
                let mut binom = BigInt::from(1u32);
                for i in 0..k {
                    binom = binom * BigInt::from(n - i) / BigInt::from(i + 1);
                }
                assert_eq!(b.eval_ones(), binom, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn add_cancellation_prunes() {
        let p = QTPolynomial::monomial(1, 0);
        let neg = QTPolynomial::term(1, 0, BigInt::from(-1));
        assert!(p.add(&neg).is_zero());
        assert_eq!(poly("q").add(&poly("t")), poly("q + t"));
        assert_eq!(poly("1 + q").add(&poly("q")), poly("1 + 2*q"));
    }

    #[test]
    fn mul_basics() {
        assert_eq!(QTPolynomial::one().mul(&poly("q + t")), poly("q + t"));
        assert_eq!(poly("q").mul(&poly("t")), poly("q*t"));
        assert_eq!(poly("1 + q").mul(&poly("1 + q")), poly("1 + 2*q + q^2"));
    }

    #[test]
    fn shift_and_swap() {
        assert_eq!(poly("1 + q").monomial_shift(1, 1), poly("q*t + q^2*t"));
        assert_eq!(poly("1 + q").monomial_shift(0, 0), poly("1 + q"));
        assert_eq!(QTPolynomial::one().monomial_shift(3, 3), poly("q^3*t^3"));
        assert_eq!(poly("q^2*t").swap_qt(), poly("q*t^2"));
        assert_eq!(poly("q*t + q^2*t^2").swap_qt(), poly("q*t + q^2*t^2"));
    }

    #[test]
    fn eval_ones_basics() {
        assert_eq!(poly("1 + q + t").eval_ones(), BigInt::from(3));
        assert_eq!(QTPolynomial::zero().eval_ones(), BigInt::from(0));
    }

    #[test]
    fn display_zero_roundtrip() {
        assert_eq!(QTPolynomial::zero().to_string(), "0");
        assert_eq!(poly("0"), QTPolynomial::zero());
    }

    fn arb_poly() -> impl Strategy<Value = QTPolynomial> {
        proptest::collection::vec(((0u32..6, 0u32..6), -4i64..=4), 0..8).prop_map(|terms| {
            QTPolynomial::from_terms(
                terms
                    .into_iter()
                    .map(|((a, b), c)| ((a, b), BigInt::from(c))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_laws(p in arb_poly(), r in arb_poly(), s in arb_poly()) {
            prop_assert_eq!(p.add(&r), r.add(&p));
            prop_assert_eq!(p.mul(&r), r.mul(&p));
            prop_assert_eq!(p.mul(&r).mul(&s), p.mul(&r.mul(&s)));
            prop_assert_eq!(p.add(&r).add(&s), p.add(&r.add(&s)));
            prop_assert_eq!(p.mul(&r.add(&s)), p.mul(&r).add(&p.mul(&s)));
        }

        #[test]
        fn swap_is_involution(p in arb_poly()) {
            prop_assert_eq!(p.swap_qt().swap_qt(), p);
        }

        #[test]
        fn display_parse_roundtrip(p in arb_poly()) {
            let s = p.to_string();
            let back: QTPolynomial = s.parse().unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
