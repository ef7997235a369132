//! Words over ordered alphabets: normalization, Parikh vectors, primitivity
//! and conjugate (cyclic rotation) machinery.
//!
//! Letters are stored as 1-based small integers; external tokens exist only
//! at the I/O boundary (see [`OrderedAlphabet`]).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An ordered alphabet of distinct external tokens, `a_1 < a_2 < ... < a_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedAlphabet {
    symbols: Vec<String>,
}

impl OrderedAlphabet {
    /// Builds an alphabet from tokens in their declared (strictly increasing) order.
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() || symbols.len() > u8::MAX as usize {
            return Err(Error::Parse(
                symbols.join(","),
                "alphabet must have between 1 and 255 symbols".into(),
            ));
        }
        for pair in symbols.windows(2) {
            if pair[0] >= pair[1] {
                return Err(Error::Parse(
                    symbols.join(","),
                    "alphabet symbols must be strictly increasing".into(),
                ));
            }
        }
        Ok(Self { symbols })
    }

    pub fn size(&self) -> u8 {
        self.symbols.len() as u8
    }

    /// Rank of a token, 1-based.
    pub fn rank(&self, token: &str) -> Option<u8> {
        self.symbols.iter().position(|s| s == token).map(|i| i as u8 + 1)
    }

    /// Token at a 1-based rank.
    pub fn token(&self, rank: u8) -> Option<&str> {
        self.symbols.get(rank as usize - 1).map(String::as_str)
    }
}

/// Per-letter occurrence counts `(n_1, ..., n_r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParikhVector(pub Vec<usize>);

impl ParikhVector {
    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// A bijection on `{1, ..., r}` given by its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn new(images: Vec<u8>) -> Result<Self> {
        let r = images.len();
        if r == 0 || r > u8::MAX as usize {
            return Err(Error::NotPermutation(images, r.min(255) as u8));
        }
        let mut seen = vec![false; r];
        for &v in &images {
            if v == 0 || v as usize > r || seen[v as usize - 1] {
                return Err(Error::NotPermutation(images, r as u8));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(r: u8) -> Self {
        Self { images: (1..=r).collect() }
    }

    /// The order-reversing permutation `i -> r + 1 - i`.
    pub fn reversal(r: u8) -> Self {
        Self { images: (1..=r).rev().collect() }
    }

    pub fn size(&self) -> u8 {
        self.images.len() as u8
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: u8) -> u8 {
        self.images[i as usize - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Self { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn is_reversal(&self) -> bool {
        let r = self.images.len();
        self.images.iter().enumerate().all(|(i, &v)| v as usize == r - i)
    }

    /// All permutations on `{1..r}`, in lexicographic order of their image lists.
    pub fn all(r: u8) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut images: Vec<u8> = (1..=r).collect();
        loop {
            out.push(Permutation { images: images.clone() });
            // next lexicographic permutation
            let n = images.len();
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
            images.swap(i, j);
            images[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u8>()
                    .map_err(|e| Error::Parse(s.into(), e.to_string()))
            })
            .collect::<Result<Vec<u8>>>()?;
        Permutation::new(images)
    }
}

/// Restricts a permutation on `{1..r}` to an occurring subset `{j_1 < ... < j_d}`,
/// producing the unique permutation `pi'` on `{1..d}` with
/// `pi'^{-1}(y) < pi'^{-1}(z)` iff `pi^{-1}(j_y) < pi^{-1}(j_z)`.
pub fn restrict_permutation(pi: &Permutation, occurring: &[u8]) -> Result<Permutation> {
    if occurring.is_empty() {
        return Err(Error::SizeMismatch { expected: 1, got: 0 });
    }
    let inv = pi.inverse();
    let positions: Vec<u8> = occurring.iter().map(|&j| inv.apply(j)).collect();
    // pi'^{-1}(y) = rank of positions[y-1] among all positions
    let d = positions.len();
    let mut inv_images = vec![0u8; d];
    for y in 0..d {
        let rank = positions.iter().filter(|&&p| p < positions[y]).count();
        inv_images[y] = rank as u8 + 1;
    }
    Ok(Permutation::new(inv_images)?.inverse())
}

/// A finite nonempty word over the internal alphabet `{1..r}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u8>,
    r: u8,
}

impl Word {
    /// A word over a declared alphabet `{1..r}`.
    pub fn new(letters: Vec<u8>, r: u8) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        for &l in &letters {
            if l == 0 || l > r {
                return Err(Error::LetterOutOfRange { letter: l, r });
            }
        }
        Ok(Self { letters, r })
    }

    /// A word whose alphabet size is the largest letter present.
    pub fn from_letters(letters: Vec<u8>) -> Result<Self> {
        let r = *letters.iter().max().ok_or(Error::EmptyWord)?;
        Self::new(letters, r)
    }

    /// Maps external tokens to their ranks in the alphabet.
    pub fn normalize<S: AsRef<str>>(tokens: &[S], alphabet: &OrderedAlphabet) -> Result<Self> {
        let letters = tokens
            .iter()
            .map(|t| {
                alphabet
                    .rank(t.as_ref())
                    .ok_or_else(|| Error::UnknownToken(t.as_ref().to_string()))
            })
            .collect::<Result<Vec<u8>>>()?;
        Self::new(letters, alphabet.size())
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Declared alphabet size.
    pub fn alphabet_size(&self) -> u8 {
        self.r
    }

    /// The distinct letters present, ascending.
    pub fn occurring_letters(&self) -> Vec<u8> {
        let mut seen = vec![false; self.r as usize];
        for &l in &self.letters {
            seen[l as usize - 1] = true;
        }
        (1..=self.r).filter(|&l| seen[l as usize - 1]).collect()
    }

    /// True when every letter of `{1..r}` occurs.
    pub fn has_full_support(&self) -> bool {
        self.occurring_letters().len() == self.r as usize
    }

    /// Re-expresses the word over its occurring letters reindexed to `{1..d}`.
    /// Returns the reindexed word and the occurring subset in ascending order.
    pub fn restrict_to_support(&self) -> (Word, Vec<u8>) {
        let occurring = self.occurring_letters();
        let mut rank = vec![0u8; self.r as usize];
        for (i, &l) in occurring.iter().enumerate() {
            rank[l as usize - 1] = i as u8 + 1;
        }
        let letters = self.letters.iter().map(|&l| rank[l as usize - 1]).collect();
        (
            Word { letters, r: occurring.len() as u8 },
            occurring,
        )
    }

    pub fn parikh(&self) -> ParikhVector {
        let mut counts = vec![0usize; self.r as usize];
        for &l in &self.letters {
            counts[l as usize - 1] += 1;
        }
        ParikhVector(counts)
    }

    /// The rotation starting at 1-based position `i`.
    pub fn rotation(&self, i: usize) -> Word {
        let n = self.len();
        let k = (i - 1) % n;
        let mut letters = Vec::with_capacity(n);
        letters.extend_from_slice(&self.letters[k..]);
        letters.extend_from_slice(&self.letters[..k]);
        Word { letters, r: self.r }
    }

    /// All `n` rotations, indexed by 1-based starting position.
    pub fn conjugates(&self) -> Vec<(usize, Word)> {
        (1..=self.len()).map(|i| (i, self.rotation(i))).collect()
    }

    /// Compares two rotations of this word without materializing them.
    fn cmp_rotations(&self, i: usize, j: usize) -> Ordering {
        let n = self.len();
        for k in 0..n {
            let a = self.letters[(i + k) % n];
            let b = self.letters[(j + k) % n];
            match a.cmp(&b) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// All rotations in ascending lexicographic order; ties (which occur only
    /// for non-primitive words) are broken by rotation index.
    pub fn sorted_conjugates(&self) -> Vec<(usize, Word)> {
        let n = self.len();
        let mut starts: Vec<usize> = (0..n).collect();
        starts.sort_by(|&i, &j| self.cmp_rotations(i, j).then(i.cmp(&j)));
        starts.into_iter().map(|s| (s + 1, self.rotation(s + 1))).collect()
    }

    /// 0-based sorted order of rotation starts (same ordering as
    /// [`sorted_conjugates`](Self::sorted_conjugates), without copying words).
    pub(crate) fn sorted_rotation_starts(&self) -> Vec<usize> {
        let n = self.len();
        let mut starts: Vec<usize> = (0..n).collect();
        starts.sort_by(|&i, &j| self.cmp_rotations(i, j).then(i.cmp(&j)));
        starts
    }

    /// The lexicographically least conjugate.
    pub fn canonical_conjugate(&self) -> Word {
        let n = self.len();
        let best = (1..n).fold(0, |best, i| {
            if self.cmp_rotations(i, best) == Ordering::Less {
                i
            } else {
                best
            }
        });
        self.rotation(best + 1)
    }

    /// True iff `w` is not a proper power. Uses the classic occurrence test:
    /// `w` is primitive iff it occurs in `ww` only at offsets 0 and `n`.
    pub fn is_primitive(&self) -> bool {
        let n = self.len();
        (1..n).all(|off| (0..n).any(|k| self.letters[(off + k) % n] != self.letters[k]))
    }

    /// Writes `w = u^k` with `u` primitive and `k` maximal.
    pub fn primitive_root(&self) -> (Word, usize) {
        let n = self.len();
        for p in 1..=n {
            if n % p != 0 {
                continue;
            }
            if (p..n).all(|k| self.letters[k] == self.letters[k - p]) {
                let root = Word {
                    letters: self.letters[..p].to_vec(),
                    r: self.r,
                };
                return (root, n / p);
            }
        }
        unreachable!("p = n always satisfies the period check");
    }

    /// True iff `other` is a cyclic rotation of `self`.
    pub fn is_conjugate(&self, other: &Word) -> bool {
        self.len() == other.len()
            && self.canonical_conjugate().letters == other.canonical_conjugate().letters
    }

    /// Concatenates `k` copies of the word.
    pub fn repeat(&self, k: usize) -> Result<Word> {
        if k == 0 {
            return Err(Error::EmptyWord);
        }
        Ok(Word { letters: self.letters.repeat(k), r: self.r })
    }

    /// Renders the word through an external alphabet.
    pub fn to_tokens(&self, alphabet: &OrderedAlphabet) -> Result<Vec<String>> {
        self.letters
            .iter()
            .map(|&l| {
                alphabet
                    .token(l)
                    .map(String::from)
                    .ok_or(Error::LetterOutOfRange { letter: l, r: alphabet.size() })
            })
            .collect()
    }
}

impl fmt::Display for Word {
    /// Digit form for `r <= 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r <= 9 {
            for &l in &self.letters {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses a bare digit string (`122131313`) or comma-separated letters (`10,2,10,1`).
    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptyWord);
        }
        let letters = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u8>()
                        .map_err(|e| Error::Parse(s.into(), e.to_string()))
                })
                .collect::<Result<Vec<u8>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&d| d >= 1)
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::Parse(s.into(), format!("bad digit `{c}`")))
                })
                .collect::<Result<Vec<u8>>>()?
        };
        Word::from_letters(letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn normalize_ranks_tokens() {
        let ab = OrderedAlphabet::new(["a", "b"]).unwrap();
        let word = Word::normalize(&["b", "a"], &ab).unwrap();
        assert_eq!(word.letters(), &[2, 1]);

        let abc = OrderedAlphabet::new(["a", "b", "c"]).unwrap();
        let word = Word::normalize(&["c", "c", "a"], &abc).unwrap();
        assert_eq!(word.letters(), &[3, 3, 1]);

        let digits = OrderedAlphabet::new(["1", "2", "3"]).unwrap();
        let word = Word::normalize(&["1", "3", "2"], &digits).unwrap();
        assert_eq!(word.letters(), &[1, 3, 2]);
    }

    #[test]
    fn normalize_rejects_unknown_token() {
        let ab = OrderedAlphabet::new(["a", "b"]).unwrap();
        let err = Word::normalize(&["a", "z"], &ab).unwrap_err();
        assert_eq!(err, Error::UnknownToken("z".into()));
    }

    #[test]
    fn parikh_counts() {
        assert_eq!(w("122131313").parikh().counts(), &[4, 2, 3]);
        assert_eq!(w("1").parikh().counts(), &[1]);
        assert_eq!(w("1322313223").parikh().counts(), &[2, 4, 4]);
    }

    #[test]
    fn primitivity() {
        assert!(!w("1322313223").is_primitive());
        assert!(w("1").is_primitive());
        assert!(w("122131313").is_primitive());
    }

    #[test]
    fn primitive_roots() {
        let (u, k) = w("1322313223").primitive_root();
        assert_eq!((u.to_string().as_str(), k), ("13223", 2));
        let (u, k) = w("121").primitive_root();
        assert_eq!((u.to_string().as_str(), k), ("121", 1));
        let (u, k) = w("111").primitive_root();
        assert_eq!((u.to_string().as_str(), k), ("1", 3));
    }

    #[test]
    fn conjugate_lists() {
        let cs = w("21").conjugates();
        assert_eq!(cs, vec![(1, w("21")), (2, w("12"))]);
        let cs = w("121").conjugates();
        assert_eq!(cs, vec![(1, w("121")), (2, w("211")), (3, w("112"))]);
        let cs = w("11").conjugates();
        assert_eq!(cs, vec![(1, w("11")), (2, w("11"))]);
    }

    #[test]
    fn sorted_conjugate_lists() {
        let cs = w("121").sorted_conjugates();
        assert_eq!(cs, vec![(3, w("112")), (1, w("121")), (2, w("211"))]);
        let cs = w("21").sorted_conjugates();
        assert_eq!(cs, vec![(2, w("12")), (1, w("21"))]);
        // first column of the sorted array of 1322313223 reads 1122223333
        let first: Vec<u8> = w("1322313223")
            .sorted_conjugates()
            .iter()
            .map(|(_, c)| c.letters()[0])
            .collect();
        assert_eq!(first, vec![1, 1, 2, 2, 2, 2, 3, 3, 3, 3]);
    }

    #[test]
    fn canonical_conjugates() {
        assert_eq!(w("211").canonical_conjugate(), w("112"));
        assert_eq!(w("1").canonical_conjugate(), w("1"));
        let word = w("122131313");
        assert_eq!(
            word.canonical_conjugate(),
            word.sorted_conjugates()[0].1
        );
    }

    #[test]
    fn restriction_of_reversal_is_reversal() {
        let pi = Permutation::reversal(4);
        let restricted = restrict_permutation(&pi, &[1, 4]).unwrap();
        assert_eq!(restricted, Permutation::reversal(2));
    }

    #[test]
    fn restriction_to_full_set_is_identity_transformation() {
        for pi in Permutation::all(4) {
            let full: Vec<u8> = (1..=4).collect();
            assert_eq!(restrict_permutation(&pi, &full).unwrap(), pi);
        }
    }

    #[test]
    fn restriction_orders_by_inverse_positions() {
        let pi = Permutation::new(vec![4, 3, 1, 2]).unwrap();
        // pi^{-1}(2) = 4, pi^{-1}(3) = 2, so 3 precedes 2 in the image order
        let restricted = restrict_permutation(&pi, &[2, 3]).unwrap();
        assert_eq!(restricted, Permutation::new(vec![2, 1]).unwrap());
    }

    #[test]
    fn word_text_round_trip() {
        assert_eq!(w("122131313").to_string(), "122131313");
        let big = Word::from_letters(vec![10, 2, 10, 1]).unwrap();
        assert_eq!(big.to_string(), "10,2,10,1");
        assert_eq!("10,2,10,1".parse::<Word>().unwrap(), big);
    }

    #[test]
    fn bad_word_text_is_rejected() {
        assert!("".parse::<Word>().is_err());
        assert!("120".parse::<Word>().is_err());
        assert!("1a2".parse::<Word>().is_err());
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![2, 2]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![3, 1, 2]).is_ok());
        assert_eq!(Permutation::all(3).len(), 6);
    }
}
