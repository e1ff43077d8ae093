//! Dyck paths, the bijection between polyominoes and a class of Dyck paths,
//! the row-label reading of area words, and the area-word validity check.

use crate::error::{AreaWordCondition, Error, Result};
use crate::polyomino::{AreaWord, Letter, Polyomino, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DyckStep {
    Rise,
    Fall,
}

/// A Dyck path in rise/fall form. Stored as the step sequence because the
/// parity of positions (odd = upper path, even = lower path) carries the
/// structure of the polyomino bijection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyckPath {
    steps: Vec<DyckStep>,
}

impl DyckPath {
    pub fn new(steps: Vec<DyckStep>) -> Result<DyckPath> {
        if steps.first() != Some(&DyckStep::Rise) {
            return Err(Error::InvalidDyckPath("path must start with a rise".into()));
        }
        let mut height = 0i64;
        for s in &steps {
            height += match s {
                DyckStep::Rise => 1,
                DyckStep::Fall => -1,
            };
            if height < 0 {
                return Err(Error::InvalidDyckPath(
                    "path crosses the starting line".into(),
                ));
            }
        }
        if height != 0 {
            return Err(Error::InvalidDyckPath(
                "path must return to the starting line".into(),
            ));
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[DyckStep] {
        &self.steps
    }

    /// Check the refinement cut out by the polyomino bijection: length
    /// 2(m+n), m rises in even positions, n rises in odd positions
    /// (1-indexed), and no internal return to the baseline. Returns (m, n).
    pub fn polyomino_shape(&self) -> Result<(u32, u32)> {
        let mut m = 0u32;
        let mut n = 0u32;
        let mut height = 0i64;
        for (idx, s) in self.steps.iter().enumerate() {
            match s {
                DyckStep::Rise => {
                    if (idx + 1) % 2 == 0 {
                        m += 1;
                    } else {
                        n += 1;
                    }
                    height += 1;
                }
                DyckStep::Fall => height -= 1,
            }
            if height == 0 && idx + 1 < self.steps.len() {
                return Err(Error::InvalidDyckPath(format!(
                    "path returns to the baseline at step {}",
                    idx + 1
                )));
            }
        }
        if m == 0 || n == 0 {
            return Err(Error::InvalidDyckPath(
                "path must have rises in both parities".into(),
            ));
        }
        Ok((m, n))
    }
}

/// Interleave the two boundary paths of a polyomino into a Dyck path:
/// upper-N and lower-E become rises, upper-E and lower-N become falls.
pub fn ptd(p: &Polyomino) -> DyckPath {
    let mut steps = Vec::with_capacity(2 * (p.m() + p.n()) as usize);
    for (u, l) in p.upper().iter().zip(p.lower().iter()) {
        steps.push(match u {
            Step::N => DyckStep::Rise,
            Step::E => DyckStep::Fall,
        });
        steps.push(match l {
            Step::E => DyckStep::Rise,
            Step::N => DyckStep::Fall,
        });
    }
    DyckPath::new(steps).expect("a valid polyomino interleaves to a valid Dyck path")
}

/// Rebuild the polyomino from a Dyck path in the image of `ptd`.
pub fn dtp(d: &DyckPath) -> Result<Polyomino> {
    d.polyomino_shape()?;
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for (idx, s) in d.steps().iter().enumerate() {
        if idx % 2 == 0 {
            upper.push(match s {
                DyckStep::Rise => Step::N,
                DyckStep::Fall => Step::E,
            });
        } else {
            lower.push(match s {
                DyckStep::Rise => Step::E,
                DyckStep::Fall => Step::N,
            });
        }
    }
    Polyomino::from_paths(upper, lower)
}

/// Read the area word off a Dyck path: row j carries the letter of rank j,
/// and the rises are read left to right.
pub fn dyck_to_area_word(d: &DyckPath) -> Result<AreaWord> {
    let (m, n) = d.polyomino_shape()?;
    let mut letters = Vec::with_capacity((m + n) as usize);
    let mut height = 0u32;
    for s in d.steps() {
        match s {
            DyckStep::Rise => {
                letters.push(Letter::from_rank(height));
                height += 1;
            }
            DyckStep::Fall => height -= 1,
        }
    }
    Ok(AreaWord::new_unchecked(letters, m, n))
}

/// The three characterization conditions for area words; returns (m, n).
pub fn validate_area_word(letters: &[Letter]) -> Result<(u32, u32)> {
    let zero = Letter::barred(0);
    if letters.first() != Some(&zero) {
        return Err(Error::InvalidAreaWord {
            condition: AreaWordCondition::LeadingZero,
            reason: "word must start with 0b".into(),
        });
    }
    if letters[1..].contains(&zero) {
        return Err(Error::InvalidAreaWord {
            condition: AreaWordCondition::LeadingZero,
            reason: "0b may appear only once".into(),
        });
    }
    let m = letters.iter().filter(|l| !l.is_barred()).count() as u32;
    let n = letters.iter().filter(|l| l.is_barred()).count() as u32;
    if m == 0 {
        return Err(Error::InvalidAreaWord {
            condition: AreaWordCondition::LetterCounts,
            reason: "word must contain at least one unbarred letter".into(),
        });
    }
    for (i, pair) in letters.windows(2).enumerate() {
        if pair[1].rank() > pair[0].rank() + 1 {
            return Err(Error::InvalidAreaWord {
                condition: AreaWordCondition::RankJump,
                reason: format!(
                    "letter {} at position {} exceeds the successor of {}",
                    pair[1],
                    i + 2,
                    pair[0]
                ),
            });
        }
    }
    Ok((m, n))
}

/// Draw the Dyck path of an area word (falls down to each letter's rank,
/// then a rise) and convert it back to a polyomino.
pub fn word_to_polyomino(w: &AreaWord) -> Result<Polyomino> {
    let mut steps = Vec::new();
    let mut height = 0u32;
    for l in w.letters() {
        while height > l.rank() {
            steps.push(DyckStep::Fall);
            height -= 1;
        }
        steps.push(DyckStep::Rise);
        height += 1;
    }
    while height > 0 {
        steps.push(DyckStep::Fall);
        height -= 1;
    }
    dtp(&DyckPath::new(steps)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyomino::{enumerate_area_words, enumerate_polyominoes, narayana_count};
    use num_bigint::BigInt;

    fn word(s: &str) -> AreaWord {
        s.parse().unwrap()
    }

    fn path(s: &str) -> DyckPath {
        DyckPath::new(
            s.chars()
                .map(|c| if c == 'R' { DyckStep::Rise } else { DyckStep::Fall })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn ptd_unit_square() {
        let p = word("0b 1");
        let poly = word_to_polyomino(&p).unwrap();
        assert_eq!(ptd(&poly), path("RRFF"));
    }

    #[test]
    fn ptd_l_shape() {
        let poly = word_to_polyomino(&word("0b 1 1 1b")).unwrap();
        assert_eq!(ptd(&poly), path("RRFRRFFF"));
    }

    #[test]
    fn ptd_running_example_length() {
        let poly = word_to_polyomino(&word(crate::testdata::EXAMPLE_WORD)).unwrap();
        assert_eq!(ptd(&poly).steps().len(), 38);
    }

    #[test]
    fn dtp_rejects_baseline_return() {
        let d = path("RRFFRRFF");
        assert!(dtp(&d).is_err());
        assert_eq!(
            dtp(&path("RRFF")).unwrap(),
            word_to_polyomino(&word("0b 1")).unwrap()
        );
    }

    #[test]
    fn dyck_row_reading() {
        assert_eq!(dyck_to_area_word(&path("RRFF")).unwrap(), word("0b 1"));
        assert_eq!(
            dyck_to_area_word(&path("RRRFFRFF")).unwrap(),
            word("0b 1 1b 1")
        );
    }

    #[test]
    fn validate_conditions() {
        assert!(word("0b 1 1b").letters().len() == 3);
        let w: std::result::Result<AreaWord, _> = "0b 1b 1".parse();
        match w {
            Err(Error::InvalidAreaWord { condition, .. }) => {
                assert_eq!(condition, AreaWordCondition::RankJump)
            }
            other => panic!("expected rank-jump rejection, got {other:?}"),
        }
        let w: std::result::Result<AreaWord, _> = "1 0b".parse();
        match w {
            Err(Error::InvalidAreaWord { condition, .. }) => {
                assert_eq!(condition, AreaWordCondition::LeadingZero)
            }
            other => panic!("expected leading-zero rejection, got {other:?}"),
        }
    }

    #[test]
    fn proposition_row_reading_matches_sweep() {
        for m in 1..=4u32 {
            for n in 1..=4u32 {
                for p in enumerate_polyominoes(m, n).unwrap() {
                    assert_eq!(dyck_to_area_word(&ptd(&p)).unwrap(), p.area_word());
                }
            }
        }
    }

    #[test]
    fn round_trips() {
        for m in 1..=4u32 {
            for n in 1..=4u32 {
                for w in enumerate_area_words(m, n).unwrap() {
                    let p = word_to_polyomino(&w).unwrap();
                    assert_eq!(p.area_word(), w);
                    assert_eq!(dtp(&ptd(&p)).unwrap(), p);
                }
            }
        }
    }

    #[test]
    fn ptd_image_characterization() {
        // The image of ptd is exactly the set of Dyck paths with the
        // parity/no-return shape: compare cardinalities.
        for m in 1..=3u32 {
            for n in 1..=3u32 {
                let polyos = enumerate_polyominoes(m, n).unwrap();
                let images: std::collections::HashSet<Vec<DyckStep>> = polyos
                    .iter()
                    .map(|p| ptd(p).steps().to_vec())
                    .collect();
                assert_eq!(BigInt::from(images.len()), narayana_count(m + n - 1, m).unwrap());

                let len = 2 * (m + n) as usize;
                let mut count = 0u32;
                for bits in 0..(1u32 << len) {
                    let steps: Vec<DyckStep> = (0..len)
                        .map(|i| {
                            if bits >> i & 1 == 1 {
                                DyckStep::Rise
                            } else {
                                DyckStep::Fall
                            }
                        })
                        .collect();
                    if let Ok(d) = DyckPath::new(steps) {
                        if matches!(d.polyomino_shape(), Ok(shape) if shape == (m, n)) {
                            assert!(images.contains(d.steps()));
                            count += 1;
                        }
                    }
                }
                assert_eq!(count as usize, images.len(), "m={m} n={n}");
            }
        }
    }
}
