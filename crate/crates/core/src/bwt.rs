//! The Burrows-Wheeler transform, its inverse on conjugacy classes, and
//! clustering detection.
//!
//! `bwt` accepts non-primitive input (tied rotations sort stably by rotation
//! index, which never changes the image since tied rows are identical words).

use crate::error::{Error, Result};
use crate::word::{ParikhVector, Permutation, Word};

/// The word of last letters of the sorted cyclic rotations.
pub fn bwt(w: &Word) -> Word {
    let n = w.len();
    let letters: Vec<u8> = w
        .sorted_rotation_starts()
        .into_iter()
        .map(|s| w.letters()[(s + n - 1) % n])
        .collect();
    Word::new(letters, w.alphabet_size()).expect("same letters as input")
}

/// Outcome of a clustering test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterReport {
    pub is_clustering: bool,
    /// The clustering permutation on the reindexed occurring letters; present iff clustering.
    pub permutation: Option<Permutation>,
    pub perfect: bool,
    /// BWT image of the word reindexed to its occurring letters.
    pub bwt_image: Word,
    /// Letters of the original alphabet that occur in the word, ascending.
    pub occurring_letters: Vec<u8>,
}

/// Run-length decomposition: `(letter, run_length)` for each maximal run.
fn runs(w: &Word) -> Vec<(u8, usize)> {
    let mut out: Vec<(u8, usize)> = Vec::new();
    for &l in w.letters() {
        match out.last_mut() {
            Some((letter, len)) if *letter == l => *len += 1,
            _ => out.push((l, 1)),
        }
    }
    out
}

/// Decides whether `w` is pi-clustering: restricts to occurring letters,
/// reindexes them to `{1..d}`, and checks that the BWT image is a
/// concatenation of exactly `d` maximal runs, one per letter, with a
/// non-identity run order.
pub fn clustering_report(w: &Word) -> ClusterReport {
    let (restricted, occurring) = w.restrict_to_support();
    let d = occurring.len();
    let image = bwt(&restricted);
    let decomposed = runs(&image);
    let one_run_per_letter = decomposed.len() == d && {
        let mut seen = vec![false; d];
        decomposed.iter().all(|&(l, _)| {
            let slot = &mut seen[l as usize - 1];
            !std::mem::replace(slot, true)
        })
    };
    let permutation = if one_run_per_letter {
        let images: Vec<u8> = decomposed.iter().map(|&(l, _)| l).collect();
        let pi = Permutation::new(images).expect("each letter exactly once");
        (!pi.is_identity()).then_some(pi)
    } else {
        None
    };
    let perfect = permutation.as_ref().is_some_and(Permutation::is_reversal);
    ClusterReport {
        is_clustering: permutation.is_some(),
        permutation,
        perfect,
        bwt_image: image,
        occurring_letters: occurring,
    }
}

/// The word `(pi1)^{n_pi1} ... (pir)^{n_pir}`.
pub fn clustering_image(pi: &Permutation, parikh: &ParikhVector) -> Result<Word> {
    let r = pi.size() as usize;
    if parikh.counts().len() != r {
        return Err(Error::SizeMismatch { expected: r, got: parikh.counts().len() });
    }
    let mut letters = Vec::with_capacity(parikh.total());
    for &l in pi.images() {
        let count = parikh.counts()[l as usize - 1];
        if count == 0 {
            return Err(Error::ZeroCount(l));
        }
        letters.extend(std::iter::repeat(l).take(count));
    }
    Word::new(letters, r as u8)
}

/// Classification of the antecedents of a candidate BWT image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InverseResult {
    /// One antecedent conjugacy class, primitive; the canonical representative is given.
    PrimitiveAntecedent { antecedent: Word, cycle_words: Vec<Word> },
    /// Antecedents exist but are powers `u^k`, `k >= 2`, of the given primitive word.
    NonPrimitiveAntecedent { root: Word, power: usize, cycle_words: Vec<Word> },
    /// No word maps to the input under the (generalized) transform.
    NoAntecedent { cycle_words: Vec<Word> },
}

impl InverseResult {
    pub fn cycle_words(&self) -> &[Word] {
        match self {
            InverseResult::PrimitiveAntecedent { cycle_words, .. }
            | InverseResult::NonPrimitiveAntecedent { cycle_words, .. }
            | InverseResult::NoAntecedent { cycle_words } => cycle_words,
        }
    }

    pub fn has_primitive_antecedent(&self) -> bool {
        matches!(self, InverseResult::PrimitiveAntecedent { .. })
    }
}

/// Inverts the transform via the standard matching: the `j`-th occurrence of
/// each letter in the sorted first column corresponds to the `j`-th occurrence
/// of that letter in `b`. Cycles of that matching spell candidate antecedents,
/// which are verified by re-applying `bwt`.
pub fn inverse_bwt(b: &Word) -> InverseResult {
    let n = b.len();
    let mut first: Vec<u8> = b.letters().to_vec();
    first.sort_unstable();

    // sigma(i) = index in b of the occurrence matched with first[i]
    let mut occ_positions: Vec<Vec<usize>> = vec![Vec::new(); b.alphabet_size() as usize];
    for (i, &l) in b.letters().iter().enumerate() {
        occ_positions[l as usize - 1].push(i);
    }
    let mut next_rank = vec![0usize; b.alphabet_size() as usize];
    let mut sigma = vec![0usize; n];
    for (i, &l) in first.iter().enumerate() {
        let slot = l as usize - 1;
        sigma[i] = occ_positions[slot][next_rank[slot]];
        next_rank[slot] += 1;
    }

    // Cycles, each started from its least element; reading the first column
    // along a cycle spells the conjugate whose sorted array row starts there.
    let mut visited = vec![false; n];
    let mut cycle_words: Vec<Word> = Vec::new();
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut letters = Vec::new();
        let mut i = start;
        while !visited[i] {
            visited[i] = true;
            letters.push(first[i]);
            i = sigma[i];
        }
        let word = Word::new(letters, b.alphabet_size()).expect("cycle is nonempty");
        cycle_words.push(word.canonical_conjugate());
    }

    let k = cycle_words.len();
    if k == 1 {
        let candidate = cycle_words[0].clone();
        if bwt(&candidate) == *b && candidate.is_primitive() {
            return InverseResult::PrimitiveAntecedent { antecedent: candidate, cycle_words };
        }
        return InverseResult::NoAntecedent { cycle_words };
    }
    let root = &cycle_words[0];
    let uniform = cycle_words.iter().all(|c| c.len() == n / k && c == root);
    if uniform && n % k == 0 && root.is_primitive() {
        if let Ok(power) = root.repeat(k) {
            if bwt(&power) == *b {
                return InverseResult::NonPrimitiveAntecedent {
                    root: root.clone(),
                    power: k,
                    cycle_words,
                };
            }
        }
    }
    InverseResult::NoAntecedent { cycle_words }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn golden_transforms() {
        assert_eq!(bwt(&w("1322313223")), w("3333222211"));
        assert_eq!(bwt(&w("123131312")), w("323311112"));
        assert_eq!(bwt(&w("122131313")), w("333221111"));
        assert_eq!(bwt(&w("21")), w("21"));
    }

    #[test]
    fn parikh_is_preserved() {
        for s in ["122131313", "1322313223", "4123231312412"] {
            let word = w(s);
            assert_eq!(bwt(&word).parikh(), word.parikh());
        }
    }

    #[test]
    fn clustering_verdicts() {
        let rep = clustering_report(&w("122131313"));
        assert!(rep.is_clustering && rep.perfect);
        assert_eq!(rep.permutation, Some(Permutation::new(vec![3, 2, 1]).unwrap()));

        let rep = clustering_report(&w("4123231312412"));
        assert!(rep.is_clustering && !rep.perfect);
        assert_eq!(rep.permutation, Some(Permutation::new(vec![4, 3, 1, 2]).unwrap()));

        let rep = clustering_report(&w("11"));
        assert!(!rep.is_clustering);

        let rep = clustering_report(&w("5252434252516152516161525161"));
        assert!(rep.is_clustering && rep.perfect);
        assert_eq!(rep.occurring_letters, vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn clustering_verdict_depends_only_on_order_type() {
        // renaming letters through an increasing map leaves the verdict unchanged
        let word = w("122131313");
        let renamed = Word::from_letters(
            word.letters().iter().map(|&l| l * 2 + 1).collect(),
        )
        .unwrap();
        let a = clustering_report(&word);
        let b = clustering_report(&renamed);
        assert_eq!(a.is_clustering, b.is_clustering);
        assert_eq!(a.permutation, b.permutation);
        assert_eq!(a.perfect, b.perfect);
    }

    #[test]
    fn clustering_images() {
        let pi = Permutation::new(vec![3, 2, 1]).unwrap();
        let pv = ParikhVector(vec![4, 2, 3]);
        assert_eq!(clustering_image(&pi, &pv).unwrap(), w("333221111"));

        let id = Permutation::identity(2);
        assert_eq!(clustering_image(&id, &ParikhVector(vec![1, 1])).unwrap(), w("12"));

        let rev4 = Permutation::reversal(4);
        assert_eq!(
            clustering_image(&rev4, &ParikhVector(vec![3, 1, 2, 3])).unwrap(),
            w("444332111")
        );

        assert_eq!(
            clustering_image(&id, &ParikhVector(vec![1, 0])),
            Err(Error::ZeroCount(2))
        );
    }

    #[test]
    fn inverse_of_non_primitive_image() {
        match inverse_bwt(&w("3333222211")) {
            InverseResult::NonPrimitiveAntecedent { root, power, .. } => {
                assert!(root.is_conjugate(&w("13223")));
                assert_eq!(power, 2);
            }
            other => panic!("expected non-primitive antecedent, got {other:?}"),
        }
    }

    #[test]
    fn word_with_no_antecedent() {
        assert!(matches!(inverse_bwt(&w("32221")), InverseResult::NoAntecedent { .. }));
    }

    #[test]
    fn primitive_round_trip() {
        match inverse_bwt(&w("211")) {
            InverseResult::PrimitiveAntecedent { antecedent, .. } => {
                assert_eq!(antecedent, w("112"));
            }
            other => panic!("expected primitive antecedent, got {other:?}"),
        }
        match inverse_bwt(&bwt(&w("122131313"))) {
            InverseResult::PrimitiveAntecedent { antecedent, .. } => {
                assert_eq!(antecedent, w("122131313").canonical_conjugate());
            }
            other => panic!("expected primitive antecedent, got {other:?}"),
        }
    }

    #[test]
    fn report_matches_image_construction() {
        let word = w("122131313");
        let rep = clustering_report(&word);
        let pi = rep.permutation.as_ref().unwrap();
        let image = clustering_image(pi, &word.parikh()).unwrap();
        assert_eq!(bwt(&word), image);
    }
}
