//! Parking functions, reading words, the shuffle condition, the refined
//! generating polynomials of Haglund's pairing, the two-letter reduction,
//! and the level-peeling map behind the parking-function recursion.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::qtpoly::QTPolynomial;

/// A parking function: cars over the levels of a Dyck area word, with cars
/// increasing across every strict level rise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParkingFunction {
    cars: Vec<u32>,
    levels: Vec<u32>,
}

fn check_dyck_levels(levels: &[u32]) -> Result<()> {
    if levels.first().map(|&b| b != 0).unwrap_or(false) {
        return Err(Error::InvalidParkingFunction(
            "first level must be 0".into(),
        ));
    }
    for (i, pair) in levels.windows(2).enumerate() {
        if pair[1] > pair[0] + 1 {
            return Err(Error::InvalidParkingFunction(format!(
                "level jump greater than one at position {}",
                i + 2
            )));
        }
    }
    Ok(())
}

impl ParkingFunction {
    pub fn new(dominoes: Vec<(u32, u32)>) -> Result<ParkingFunction> {
        let cars: Vec<u32> = dominoes.iter().map(|d| d.0).collect();
        let levels: Vec<u32> = dominoes.iter().map(|d| d.1).collect();
        check_dyck_levels(&levels)?;
        let k = cars.len();
        let mut seen = vec![false; k + 1];
        for &c in &cars {
            if c == 0 || c as usize > k || seen[c as usize] {
                return Err(Error::InvalidParkingFunction(format!(
                    "cars must be a permutation of 1..{k}"
                )));
            }
            seen[c as usize] = true;
        }
        for i in 0..k.saturating_sub(1) {
            if levels[i] < levels[i + 1] && cars[i] >= cars[i + 1] {
                return Err(Error::InvalidParkingFunction(format!(
                    "cars must increase across the rise at position {}",
                    i + 1
                )));
            }
        }
        Ok(ParkingFunction { cars, levels })
    }

    pub fn size(&self) -> usize {
        self.cars.len()
    }

    pub fn cars(&self) -> &[u32] {
        &self.cars
    }

    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    /// Cars read by decreasing level, ties right to left.
    pub fn reading_word(&self) -> Vec<u32> {
        let mut idx: Vec<usize> = (0..self.cars.len()).collect();
        idx.sort_by(|&i, &j| {
            self.levels[j]
                .cmp(&self.levels[i])
                .then_with(|| j.cmp(&i))
        });
        idx.into_iter().map(|i| self.cars[i]).collect()
    }

    pub fn area(&self) -> u64 {
        self.levels.iter().map(|&b| b as u64).sum()
    }

    pub fn dinv(&self) -> u64 {
        let mut count = 0u64;
        for i in 0..self.cars.len() {
            for j in i + 1..self.cars.len() {
                let same = self.levels[i] == self.levels[j] && self.cars[i] < self.cars[j];
                let step = self.levels[i] == self.levels[j] + 1 && self.cars[i] > self.cars[j];
                if same || step {
                    count += 1;
                }
            }
        }
        count
    }
}

/// True iff the values <= a form the increasing sequence 1..a and the
/// values > a form the increasing sequence a+1..a+b.
pub fn is_shuffle(word: &[u32], a: u32, b: u32) -> bool {
    if word.len() != (a + b) as usize {
        return false;
    }
    let low: Vec<u32> = word.iter().copied().filter(|&v| v <= a).collect();
    let high: Vec<u32> = word.iter().copied().filter(|&v| v > a).collect();
    low == (1..=a).collect::<Vec<_>>() && high == (a + 1..=a + b).collect::<Vec<_>>()
}

/// A parking function with its cars collapsed to 1 (car <= a) or 2
/// (car > a). In a shuffle parking function every strict level rise
/// carries the pair (1 below, 2 above); see `TwoLetterPF::new`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoLetterPF {
    letters: Vec<u8>,
    levels: Vec<u32>,
}

impl TwoLetterPF {
    pub fn new(dominoes: Vec<(u8, u32)>) -> Result<TwoLetterPF> {
        let letters: Vec<u8> = dominoes.iter().map(|d| d.0).collect();
        let levels: Vec<u32> = dominoes.iter().map(|d| d.1).collect();
        if letters.iter().any(|&l| l != 1 && l != 2) {
            return Err(Error::InvalidParkingFunction(
                "two-letter dominoes carry 1 or 2".into(),
            ));
        }
        check_dyck_levels(&levels)?;
        for i in 0..letters.len().saturating_sub(1) {
            if levels[i + 1] == levels[i] + 1 && (letters[i] != 1 || letters[i + 1] != 2) {
                return Err(Error::InvalidParkingFunction(format!(
                    "rise at position {} must carry letters (1, 2)",
                    i + 1
                )));
            }
        }
        Ok(TwoLetterPF { letters, levels })
    }

    pub fn size(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    pub fn area(&self) -> u64 {
        self.levels.iter().map(|&b| b as u64).sum()
    }

    /// Pairs i < j with equal levels and letters (1,2), or with the earlier
    /// level one higher and letters (2,1); the image of the full dinv under
    /// the order-preserving collapse.
    pub fn dinv(&self) -> u64 {
        let mut count = 0u64;
        for i in 0..self.letters.len() {
            for j in i + 1..self.letters.len() {
                let same = self.levels[i] == self.levels[j]
                    && self.letters[i] == 1
                    && self.letters[j] == 2;
                let step = self.levels[i] == self.levels[j] + 1
                    && self.letters[i] == 2
                    && self.letters[j] == 1;
                if same || step {
                    count += 1;
                }
            }
        }
        count
    }

    /// Count of dominoes with the given letter at the given level.
    pub fn count_at_level(&self, letter: u8, level: u32) -> u32 {
        self.letters
            .iter()
            .zip(self.levels.iter())
            .filter(|&(&l, &b)| l == letter && b == level)
            .count() as u32
    }

    /// (r, s) = counts of 1-dominoes and 2-dominoes at level 0.
    pub fn zero_level_counts(&self) -> (u32, u32) {
        (self.count_at_level(1, 0), self.count_at_level(2, 0))
    }

    /// The unique shuffle parking function over A = 1..a, B = a+1..a+b
    /// collapsing to this word: within each letter class, cars are handed
    /// out in reading order.
    pub fn lift(&self, a: u32, b: u32) -> Result<ParkingFunction> {
        if self.count(1) != a || self.count(2) != b {
            return Err(Error::OutOfRange(format!(
                "word has {} ones and {} twos, expected ({a}, {b})",
                self.count(1),
                self.count(2)
            )));
        }
        let mut idx: Vec<usize> = (0..self.letters.len()).collect();
        idx.sort_by(|&i, &j| self.levels[j].cmp(&self.levels[i]).then_with(|| j.cmp(&i)));
        let mut cars = vec![0u32; self.letters.len()];
        let mut next_a = 1u32;
        let mut next_b = a + 1;
        for i in idx {
            if self.letters[i] == 1 {
                cars[i] = next_a;
                next_a += 1;
            } else {
                cars[i] = next_b;
                next_b += 1;
            }
        }
        ParkingFunction::new(cars.into_iter().zip(self.levels.iter().copied()).collect())
    }

    fn count(&self, letter: u8) -> u32 {
        self.letters.iter().filter(|&&l| l == letter).count() as u32
    }
}

/// Collapse a shuffle parking function to its two-letter form. Preserves
/// area and dinv.
pub fn reduce_two_letter(pf: &ParkingFunction, a: u32, b: u32) -> Result<TwoLetterPF> {
    if !is_shuffle(&pf.reading_word(), a, b) {
        return Err(Error::InvalidParkingFunction(format!(
            "reading word is not a shuffle of 1..{a} and {}..{}",
            a + 1,
            a + b
        )));
    }
    TwoLetterPF::new(
        pf.cars
            .iter()
            .zip(pf.levels.iter())
            .map(|(&c, &l)| (if c <= a { 1 } else { 2 }, l))
            .collect(),
    )
}

/// Remove the level-0 dominoes, decrement the remaining levels, and drop
/// the forced leading (2/0) domino. Returns the peeled word together with
/// (r, s) = the removed level-0 counts.
pub fn peel(t: &TwoLetterPF) -> Result<(TwoLetterPF, u32, u32)> {
    let (r, s) = t.zero_level_counts();
    let intermediate: Vec<(u8, u32)> = t
        .letters
        .iter()
        .zip(t.levels.iter())
        .filter(|&(_, &b)| b > 0)
        .map(|(&l, &b)| (l, b - 1))
        .collect();
    match intermediate.first() {
        Some(&(2, 0)) => {}
        _ => {
            return Err(Error::Internal(
                "peeled word must start with a (2/0) domino".into(),
            ))
        }
    }
    if let Some(&(_, level)) = intermediate.get(1) {
        if level != 0 {
            return Err(Error::Internal(
                "the leading (2/0) must be followed by a level-0 domino".into(),
            ));
        }
    }
    let peeled = TwoLetterPF::new(intermediate[1..].to_vec())?;
    Ok((peeled, r, s))
}

/// All two-letter shuffle words with a ones and b twos.
pub fn enumerate_two_letter(a: u32, b: u32) -> Result<Vec<TwoLetterPF>> {
    if a + b == 0 {
        return Err(Error::OutOfRange(
            "enumeration requires a + b >= 1".into(),
        ));
    }
    let mut out = Vec::new();
    let mut prefix: Vec<(u8, u32)> = Vec::new();
    extend_two_letter(&mut prefix, a, b, &mut out);
    Ok(out)
}

fn extend_two_letter(prefix: &mut Vec<(u8, u32)>, ones: u32, twos: u32, out: &mut Vec<TwoLetterPF>) {
    if ones == 0 && twos == 0 {
        out.push(TwoLetterPF {
            letters: prefix.iter().map(|d| d.0).collect(),
            levels: prefix.iter().map(|d| d.1).collect(),
        });
        return;
    }
    let max_level = match prefix.last() {
        None => 0,
        Some(&(letter, level)) => {
            if letter == 1 {
                level + 1
            } else {
                level
            }
        }
    };
    for level in 0..=max_level {
        let rising = prefix
            .last()
            .map(|&(_, prev)| level == prev + 1)
            .unwrap_or(false);
        for letter in [1u8, 2u8] {
            if letter == 1 && ones == 0 || letter == 2 && twos == 0 {
                continue;
            }
            if rising && letter != 2 {
                continue;
            }
            prefix.push((letter, level));
            let (o, t) = if letter == 1 {
                (ones - 1, twos)
            } else {
                (ones, twos - 1)
            };
            extend_two_letter(prefix, o, t, out);
            prefix.pop();
        }
    }
}

/// All elements of Park_{a,b}, via the unique lift of each two-letter word.
pub fn enumerate_park(
    a: u32,
    b: u32,
    rs_filter: Option<(u32, u32)>,
) -> Result<Vec<ParkingFunction>> {
    enumerate_two_letter(a, b)?
        .into_iter()
        .filter(|t| rs_filter.map(|rs| t.zero_level_counts() == rs).unwrap_or(true))
        .map(|t| t.lift(a, b))
        .collect()
}

/// Para_{a,b}(q,t), the generating polynomial of (dinv, area) over
/// Park_{a,b}, optionally refined by the level-0 counts. The empty corner
/// Para_{0,0} is the single empty parking function, i.e. 1.
pub fn para_poly(a: u32, b: u32, rs_filter: Option<(u32, u32)>) -> Result<QTPolynomial> {
    if a + b == 0 {
        return Ok(match rs_filter {
            None | Some((0, 0)) => QTPolynomial::one(),
            Some(_) => QTPolynomial::zero(),
        });
    }
    let mut out = QTPolynomial::zero();
    for t in enumerate_two_letter(a, b)? {
        if let Some(rs) = rs_filter {
            if t.zero_level_counts() != rs {
                continue;
            }
        }
        out.add_term(t.dinv() as u32, t.area() as u32, BigInt::from(1u32));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qtpoly::q_binomial;
    use crate::testdata::{SIZE11_PF, SIZE16_PF};
    use std::collections::{HashMap, HashSet};

    fn pf(dominoes: &[(u32, u32)]) -> ParkingFunction {
        ParkingFunction::new(dominoes.to_vec()).unwrap()
    }

    fn size11() -> ParkingFunction {
        pf(&SIZE11_PF)
    }

    fn size16() -> ParkingFunction {
        pf(&SIZE16_PF)
    }

    #[test]
    fn validate_basics() {
        assert!(ParkingFunction::new(vec![(1, 0), (2, 1)]).is_ok());
        assert!(ParkingFunction::new(vec![(2, 0), (1, 1)]).is_err());
        assert!(ParkingFunction::new(vec![(1, 0), (2, 2)]).is_err());
        assert!(ParkingFunction::new(vec![(1, 1), (2, 0)]).is_err());
        size11();
    }

    #[test]
    fn reading_word_examples() {
        assert_eq!(
            size11().reading_word(),
            vec![2, 10, 7, 9, 4, 8, 1, 11, 3, 6, 5]
        );
        assert_eq!(pf(&[(1, 0), (2, 0)]).reading_word(), vec![2, 1]);
        assert_eq!(pf(&[(1, 0), (2, 1)]).reading_word(), vec![2, 1]);
    }

    #[test]
    fn statistics_examples() {
        assert_eq!(size11().area(), 14);
        assert_eq!(size11().dinv(), 8);
        let p = pf(&[(1, 0), (2, 0)]);
        assert_eq!(p.area(), 0);
        assert_eq!(p.dinv(), 1);
        assert_eq!(size16().area(), 18);
        assert_eq!(size16().dinv(), 32);
    }

    #[test]
    fn shuffle_examples() {
        assert!(is_shuffle(&[2, 1], 1, 1));
        assert!(is_shuffle(&[1, 2], 1, 1));
        assert!(!is_shuffle(&[2, 1, 3], 3, 0));
        assert!(is_shuffle(&[1, 2, 3], 3, 0));
    }

    #[test]
    fn size16_two_letter_form() {
        // Collapsing the size-16 cars at a = 8. Note the full example is
        // not itself a shuffle parking function (its reading word
        // interleaves 7 8 4 5 6 1 2 3 below 8), so its dinv of 32 is not
        // preserved; the two-letter word's own dinv is 16, shared with the
        // genuine shuffle lift below.
        let letters: Vec<u8> = vec![1, 2, 1, 2, 1, 1, 2, 2, 1, 2, 2, 1, 2, 1, 2, 1];
        let levels: Vec<u32> = size16().levels().to_vec();
        assert_eq!(
            size16()
                .cars()
                .iter()
                .map(|&c| if c <= 8 { 1u8 } else { 2 })
                .collect::<Vec<_>>(),
            letters
        );
        assert!(!is_shuffle(&size16().reading_word(), 8, 8));
        let two = TwoLetterPF::new(letters.iter().copied().zip(levels).collect()).unwrap();
        assert_eq!(two.area(), 18);
        assert_eq!(two.dinv(), 16);
        assert_eq!(two.zero_level_counts(), (3, 1));
        let lifted = two.lift(8, 8).unwrap();
        assert_eq!(lifted.area(), 18);
        assert_eq!(lifted.dinv(), 16);
    }

    #[test]
    fn size16_peel_intermediate() {
        let letters: Vec<u8> = vec![1, 2, 1, 2, 1, 1, 2, 2, 1, 2, 2, 1, 2, 1, 2, 1];
        let levels: Vec<u32> = size16().levels().to_vec();
        let two = TwoLetterPF::new(letters.into_iter().zip(levels).collect()).unwrap();
        let (peeled, r, s) = peel(&two).unwrap();
        assert_eq!((r, s), (3, 1));
        // The intermediate word, with its leading (2/0) dropped.
        assert_eq!(peeled.letters(), &[1, 2, 1, 1, 2, 2, 1, 2, 2, 2, 1]);
        assert_eq!(peeled.levels(), &[0, 1, 1, 1, 2, 0, 0, 1, 0, 0, 0]);
        assert_eq!(peeled.zero_level_counts(), (3, 3));
    }

    #[test]
    fn peel_smallest_case() {
        let two = TwoLetterPF::new(vec![(1, 0), (2, 1)]).unwrap();
        let (peeled, r, s) = peel(&two).unwrap();
        assert_eq!(peeled.size(), 0);
        assert_eq!((r, s), (1, 0));
    }

    #[test]
    fn enumerate_park_small() {
        assert_eq!(enumerate_park(1, 1, None).unwrap().len(), 3);
        assert!(enumerate_park(0, 0, None).is_err());
        for p in enumerate_park(3, 0, None).unwrap() {
            let w = p.reading_word();
            assert!(w.windows(2).all(|x| x[0] < x[1]));
        }
        assert_eq!(
            para_poly(1, 1, None).unwrap(),
            "1 + q + t".parse().unwrap()
        );
        assert_eq!(para_poly(2, 1, None).unwrap().eval_ones(), 6u32.into());
    }

    #[test]
    fn reduction_preserves_statistics() {
        for a in 0..=2u32 {
            for b in 0..=2u32 {
                if a + b == 0 {
                    continue;
                }
                for p in enumerate_park(a, b, None).unwrap() {
                    let two = reduce_two_letter(&p, a, b).unwrap();
                    assert_eq!(two.area(), p.area());
                    assert_eq!(two.dinv(), p.dinv());
                    assert_eq!(two.lift(a, b).unwrap(), p);
                }
            }
        }
    }

    /// Slow oracle: enumerate Park_{a,b} from first principles, trying every
    /// car permutation over every Dyck level word.
    fn enumerate_park_by_permutations(a: u32, b: u32) -> Vec<ParkingFunction> {
        let k = (a + b) as usize;
        let mut levels_out: Vec<Vec<u32>> = Vec::new();
        let mut prefix = Vec::new();
        fn levels_rec(prefix: &mut Vec<u32>, k: usize, out: &mut Vec<Vec<u32>>) {
            if prefix.len() == k {
                out.push(prefix.clone());
                return;
            }
            let max = prefix.last().map(|&b| b + 1).unwrap_or(0);
            for l in 0..=max {
                prefix.push(l);
                levels_rec(prefix, k, out);
                prefix.pop();
            }
        }
        levels_rec(&mut prefix, k, &mut levels_out);

        let mut cars: Vec<u32> = (1..=k as u32).collect();
        let mut out = Vec::new();
        permute(&mut cars, 0, &mut |perm| {
            for levels in &levels_out {
                if let Ok(p) =
                    ParkingFunction::new(perm.iter().copied().zip(levels.iter().copied()).collect())
                {
                    if is_shuffle(&p.reading_word(), a, b) {
                        out.push(p);
                    }
                }
            }
        });
        out
    }

    fn permute(vals: &mut Vec<u32>, i: usize, f: &mut impl FnMut(&[u32])) {
        if i == vals.len() {
            f(vals);
            return;
        }
        for j in i..vals.len() {
            vals.swap(i, j);
            permute(vals, i + 1, f);
            vals.swap(i, j);
        }
    }

    #[test]
    fn two_letter_enumeration_matches_full_oracle() {
        for a in 0..=3u32 {
            for b in 0..=3u32 {
                if a + b == 0 || a + b > 5 {
                    continue;
                }
                let fast: HashSet<Vec<(u32, u32)>> = enumerate_park(a, b, None)
                    .unwrap()
                    .into_iter()
                    .map(|p| {
                        p.cars()
                            .iter()
                            .copied()
                            .zip(p.levels().iter().copied())
                            .collect()
                    })
                    .collect();
                let slow: HashSet<Vec<(u32, u32)>> = enumerate_park_by_permutations(a, b)
                    .into_iter()
                    .map(|p| {
                        p.cars()
                            .iter()
                            .copied()
                            .zip(p.levels().iter().copied())
                            .collect()
                    })
                    .collect();
                assert_eq!(fast, slow, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn refined_sum_equals_total() {
        for a in 0..=4u32 {
            for b in 0..=4u32 {
                if a + b == 0 {
                    continue;
                }
                let total = para_poly(a, b, None).unwrap();
                let mut sum = QTPolynomial::zero();
                for r in 0..=a {
                    for s in 0..=b {
                        sum = sum.add(&para_poly(a, b, Some((r, s))).unwrap());
                    }
                }
                assert_eq!(sum, total, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn peel_fibers_match_qbinomial_factors() {
        // Group Park_{a,b} by (r, s, peeled image); each fiber's dinv
        // generating function is the image's dinv shifted by the two
        // Gaussian binomial factors, and the area drop is constant.
        for a in 1..=3u32 {
            for b in 1..=3u32 {
                let mut fibers: HashMap<(u32, u32, Vec<(u8, u32)>), QTPolynomial> = HashMap::new();
                let mut targets: HashMap<(u32, u32, Vec<(u8, u32)>), TwoLetterPF> = HashMap::new();
                for t in enumerate_two_letter(a, b).unwrap() {
                    if t.levels().iter().all(|&b| b == 0) {
                        continue;
                    }
                    let (peeled, r, s) = peel(&t).unwrap();
                    assert_eq!(
                        t.area(),
                        peeled.area() + (a - r + b - s) as u64,
                        "area drop"
                    );
                    let key = (
                        r,
                        s,
                        peeled
                            .letters()
                            .iter()
                            .copied()
                            .zip(peeled.levels().iter().copied())
                            .collect::<Vec<_>>(),
                    );
                    let entry = fibers.entry(key.clone()).or_insert_with(QTPolynomial::zero);
                    *entry = entry.add(&QTPolynomial::monomial(t.dinv() as u32, 0));
                    targets.insert(key, peeled);
                }
                for (key, fiber_sum) in fibers {
                    let target = &targets[&key];
                    let (r, s) = (key.0, key.1);
                    let k = target.count_at_level(2, 0) + 1;
                    let expected = q_binomial(r + s, r)
                        .unwrap()
                        .mul(&q_binomial(r + k - 1, k).unwrap())
                        .monomial_shift(target.dinv() as u32, 0);
                    assert_eq!(fiber_sum, expected, "a={a} b={b} r={r} s={s}");
                }
            }
        }
    }

    #[test]
    fn peel_remark_constraints() {
        // In any shuffle word, a (1/0) domino is followed by one of
        // (1/0), (2/0), (2/1); a (2/0) by one of (1/0), (2/0).
        for a in 1..=3u32 {
            for b in 1..=3u32 {
                for t in enumerate_two_letter(a, b).unwrap() {
                    let dominoes: Vec<(u8, u32)> = t
                        .letters()
                        .iter()
                        .copied()
                        .zip(t.levels().iter().copied())
                        .collect();
                    for pair in dominoes.windows(2) {
                        match pair[0] {
                            (1, 0) => assert!(matches!(pair[1], (1, 0) | (2, 0) | (2, 1))),
                            (2, 0) => assert!(matches!(pair[1], (1, 0) | (2, 0))),
                            _ => {}
                        }
                    }
                }
            }
        }
    }
}
