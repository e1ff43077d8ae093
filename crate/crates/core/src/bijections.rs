//! The bijection from Polyo_{m,n} to Polyo_{n,m} sending (area, bounce) to
//! (dinv, area), its inverse, and the diagonal flip.

use crate::dyck;
use crate::error::{Error, Result};
use crate::polyomino::{AreaWord, Letter, Polyomino, Step};

/// Intermediate states of the label-merging construction, kept for
/// inspection and testing.
#[derive(Debug, Clone)]
pub struct DigammaTrace {
    /// One word per bounce-path turn, each over two consecutive letter
    /// types and starting with the smaller one.
    pub prescriptions: Vec<Vec<Letter>>,
    /// The partial word after each prescription has been merged in; the
    /// last entry is the area word of the image.
    pub partial_words: Vec<Vec<Letter>>,
    pub image: Polyomino,
}

/// Apply the bounce-to-area bijection, recording intermediate states.
pub fn digamma_trace(p: &Polyomino) -> Result<DigammaTrace> {
    let bp = p.bounce_path();

    // Vertical bounce labels 1^{r_1} 2^{r_2} ... and horizontal labels
    // 0̄ 1̄^{s_1} 2̄^{s_2} ...
    let mut vlabels: Vec<Letter> = Vec::new();
    for (i, &r) in bp.vertical_runs.iter().enumerate() {
        vlabels.extend(std::iter::repeat(Letter::unbarred(i as u32 + 1)).take(r as usize));
    }
    let mut hlabels: Vec<Letter> = Vec::new();
    for (i, &s) in bp.horizontal_runs.iter().enumerate() {
        hlabels.extend(std::iter::repeat(Letter::barred(i as u32)).take(s as usize));
    }

    // Transfer the bounce labels onto the two boundary paths by position.
    // The first lower E-step stays unlabeled: it mirrors the bounce path's
    // initial East step, whose 0̄ lives on the upper path.
    let label_path = |steps: &[Step], skip_first_e: bool| -> Vec<Option<Letter>> {
        let mut vs = vlabels.iter();
        let mut hs = hlabels.iter();
        if skip_first_e {
            hs.next();
        }
        let mut skipped = !skip_first_e;
        steps
            .iter()
            .map(|s| match s {
                Step::N => vs.next().copied(),
                Step::E => {
                    if !skipped {
                        skipped = true;
                        None
                    } else {
                        hs.next().copied()
                    }
                }
            })
            .collect()
    };
    let upper_labels = label_path(p.upper(), false);
    let lower_labels = label_path(p.lower(), true);

    let count_of = |l: Letter| -> u32 {
        if l.is_barred() {
            if l.value() == 0 {
                1
            } else {
                bp.horizontal_runs.get(l.value() as usize).copied().unwrap_or(0)
            }
        } else {
            bp.vertical_runs.get(l.value() as usize - 1).copied().unwrap_or(0)
        }
    };

    let mut prescriptions: Vec<Vec<Letter>> = Vec::new();
    let mut partial_words: Vec<Vec<Letter>> = Vec::new();
    let mut word: Vec<Letter> = Vec::new();
    for rho in 0u32.. {
        let small = Letter::from_rank(rho);
        let big = Letter::from_rank(rho + 1);
        if count_of(big) == 0 {
            break;
        }
        let labels = if rho % 2 == 0 { &upper_labels } else { &lower_labels };
        let hits: Vec<(usize, Letter)> = labels
            .iter()
            .enumerate()
            .filter_map(|(i, l)| (*l).filter(|&l| l == small || l == big).map(|l| (i, l)))
            .collect();
        // The two-type restriction must be one contiguous stretch of the
        // containing path.
        let contiguous = hits
            .windows(2)
            .all(|w| w[1].0 == w[0].0 + 1);
        if !contiguous {
            return Err(Error::Internal(format!(
                "two-type restriction for ranks {rho},{} is not contiguous",
                rho + 1
            )));
        }
        let presc: Vec<Letter> = hits.iter().rev().map(|&(_, l)| l).collect();
        if presc.first() != Some(&small) {
            return Err(Error::Internal(format!(
                "prescription for ranks {rho},{} does not start with the smaller type",
                rho + 1
            )));
        }
        if rho == 0 {
            word = presc.clone();
        } else {
            merge_prescription(&mut word, &presc, small, big)?;
        }
        prescriptions.push(presc);
        partial_words.push(word.clone());
    }

    let area_word = AreaWord::new(word)
        .map_err(|e| Error::Internal(format!("merged word is not a valid area word: {e}")))?;
    let image = dyck::word_to_polyomino(&area_word)?;
    Ok(DigammaTrace {
        prescriptions,
        partial_words,
        image,
    })
}

/// Insert the big-type letters of `presc` into `word`: the block following
/// the k-th small letter of the prescription goes right after the k-th
/// small letter of the word, preserving relative positions.
fn merge_prescription(
    word: &mut Vec<Letter>,
    presc: &[Letter],
    small: Letter,
    big: Letter,
) -> Result<()> {
    let mut blocks: Vec<u32> = Vec::new();
    for &l in presc {
        if l == small {
            blocks.push(0);
        } else if l == big {
            match blocks.last_mut() {
                Some(b) => *b += 1,
                None => {
                    return Err(Error::Internal(
                        "prescription starts with the larger type".into(),
                    ))
                }
            }
        } else {
            return Err(Error::Internal("foreign letter in prescription".into()));
        }
    }
    let positions: Vec<usize> = word
        .iter()
        .enumerate()
        .filter(|(_, &l)| l == small)
        .map(|(i, _)| i)
        .collect();
    if positions.len() != blocks.len() {
        return Err(Error::Internal(format!(
            "prescription has {} letters of type {small}, word has {}",
            blocks.len(),
            positions.len()
        )));
    }
    for (&pos, &cnt) in positions.iter().zip(blocks.iter()).rev() {
        for _ in 0..cnt {
            word.insert(pos + 1, big);
        }
    }
    Ok(())
}

/// The bounce-to-area bijection Polyo_{m,n} -> Polyo_{n,m}.
pub fn digamma(p: &Polyomino) -> Result<Polyomino> {
    Ok(digamma_trace(p)?.image)
}

/// Reconstruct the preimage from the relative positions of consecutive
/// letter types in the area word.
pub fn digamma_inverse(q: &Polyomino) -> Result<Polyomino> {
    let w = q.area_word();
    let mut upper: Vec<Step> = Vec::new();
    for i in 0u32.. {
        let small = Letter::barred(i);
        let big = Letter::unbarred(i + 1);
        let restriction: Vec<Letter> = w
            .letters()
            .iter()
            .copied()
            .filter(|&l| l == small || l == big)
            .collect();
        if restriction.is_empty() {
            break;
        }
        for l in restriction.into_iter().rev() {
            upper.push(if l == big { Step::N } else { Step::E });
        }
    }
    let mut lower: Vec<Step> = vec![Step::E];
    for i in 1u32.. {
        let small = Letter::unbarred(i);
        let big = Letter::barred(i);
        let restriction: Vec<Letter> = w
            .letters()
            .iter()
            .copied()
            .filter(|&l| l == small || l == big)
            .collect();
        if restriction.is_empty() {
            break;
        }
        for l in restriction.into_iter().rev() {
            lower.push(if l == small { Step::N } else { Step::E });
        }
    }
    Polyomino::from_paths(upper, lower)
}

/// Flip along the Southwest-to-Northeast diagonal: swap N and E in both
/// paths and exchange their roles. Preserves the area.
pub fn transpose_flip(p: &Polyomino) -> Polyomino {
    let swap = |steps: &[Step]| -> Vec<Step> {
        steps
            .iter()
            .map(|s| match s {
                Step::N => Step::E,
                Step::E => Step::N,
            })
            .collect()
    };
    Polyomino::from_paths(swap(p.lower()), swap(p.upper()))
        .expect("flip of a valid polyomino is valid")
}
