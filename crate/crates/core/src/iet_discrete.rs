//! Discrete r-interval exchange transformations on `n` labeled points:
//! orbits, minimality, trajectory words, and the construction from a
//! clustering word.
//!
//! Points are 1-based; "leftmost" means smallest index.

use crate::bwt::clustering_report;
use crate::error::{Error, Result};
use crate::word::{Permutation, Word};

/// A discrete r-interval exchange transformation: `n_i` points per interval,
/// each interval translated by `s_i = sum_{pi^-1(j) < pi^-1(i)} n_j - sum_{j < i} n_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteIet {
    lengths: Vec<usize>,
    permutation: Permutation,
    offsets: Vec<i64>,
    /// cell_start[i] = number of points strictly before interval i+1
    cell_start: Vec<usize>,
    n: usize,
}

/// Full cycle structure of the point map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDecomposition {
    /// Point cycles, each listed from its least point; cycles ordered by least point.
    pub cycles: Vec<Vec<usize>>,
    /// Trajectory word of each cycle, read from its least point.
    pub words: Vec<Word>,
}

impl DiscreteIet {
    pub fn new(lengths: Vec<usize>, permutation: Permutation) -> Result<Self> {
        let r = lengths.len();
        if r == 0 || lengths.iter().any(|&n| n == 0) {
            return Err(Error::NonPositiveLength);
        }
        if permutation.size() as usize != r {
            return Err(Error::SizeMismatch { expected: r, got: permutation.size() as usize });
        }
        let inv = permutation.inverse();
        let offsets: Vec<i64> = (1..=r)
            .map(|i| {
                let before_image: i64 = (1..=r)
                    .filter(|&j| inv.apply(j as u8) < inv.apply(i as u8))
                    .map(|j| lengths[j - 1] as i64)
                    .sum();
                let before: i64 = lengths[..i - 1].iter().map(|&n| n as i64).sum();
                before_image - before
            })
            .collect();
        let mut cell_start = Vec::with_capacity(r);
        let mut acc = 0usize;
        for &len in &lengths {
            cell_start.push(acc);
            acc += len;
        }
        let iet = Self { lengths, permutation, offsets, cell_start, n: acc };

        // the point map must be a bijection of {1..n}
        let mut hit = vec![false; iet.n];
        for k in 1..=iet.n {
            let image = k as i64 + iet.offsets[iet.letter_of(k) as usize - 1];
            if image < 1 || image > iet.n as i64 || hit[image as usize - 1] {
                return Err(Error::NotPermutation(
                    iet.permutation.images().to_vec(),
                    iet.permutation.size(),
                ));
            }
            hit[image as usize - 1] = true;
        }
        Ok(iet)
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn permutation(&self) -> &Permutation {
        &self.permutation
    }

    pub fn offsets(&self) -> &[i64] {
        &self.offsets
    }

    /// Total point count.
    pub fn point_count(&self) -> usize {
        self.n
    }

    pub fn interval_count(&self) -> u8 {
        self.lengths.len() as u8
    }

    /// Interval label of point `k`: the `i` with `sum_{j<i} n_j < k <= sum_{j<=i} n_j`.
    pub fn letter_of(&self, k: usize) -> u8 {
        debug_assert!(k >= 1 && k <= self.n);
        let idx = self.cell_start.partition_point(|&s| s < k);
        idx as u8
    }

    /// Image of point `k`.
    pub fn apply(&self, k: usize) -> Result<usize> {
        if k < 1 || k > self.n {
            return Err(Error::PointOutOfRange(k, self.n));
        }
        let image = k as i64 + self.offsets[self.letter_of(k) as usize - 1];
        Ok(image as usize)
    }

    pub fn orbit_decomposition(&self) -> OrbitDecomposition {
        let mut visited = vec![false; self.n];
        let mut cycles = Vec::new();
        let mut words = Vec::new();
        for start in 1..=self.n {
            if visited[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut letters = Vec::new();
            let mut k = start;
            while !visited[k - 1] {
                visited[k - 1] = true;
                cycle.push(k);
                letters.push(self.letter_of(k));
                k = self.apply(k).expect("orbit stays in range");
            }
            cycles.push(cycle);
            words.push(Word::new(letters, self.interval_count()).expect("cycle is nonempty"));
        }
        OrbitDecomposition { cycles, words }
    }

    /// True iff the point map is a single n-cycle (computed by explicit
    /// traversal, never by a closed form).
    pub fn is_minimal(&self) -> bool {
        let mut k = 1usize;
        let mut steps = 0usize;
        loop {
            k = self.apply(k).expect("orbit stays in range");
            steps += 1;
            if k == 1 {
                return steps == self.n;
            }
        }
    }

    /// The length-n trajectory word from point 1, if the map is minimal.
    pub fn clustering_word(&self) -> Option<Word> {
        self.is_minimal()
            .then(|| self.trajectory(1, self.n, None).expect("point 1 in range"))
    }

    /// Length-`len` coding of the forward orbit of `start`. `labels[i-1]`
    /// optionally replaces interval label `i` in the output; this exists only
    /// to reproduce relabeled (two-permutation) codings, which break the
    /// clustering correspondence.
    pub fn trajectory(&self, start: usize, len: usize, labels: Option<&[u8]>) -> Result<Word> {
        if start < 1 || start > self.n {
            return Err(Error::PointOutOfRange(start, self.n));
        }
        if let Some(map) = labels {
            if map.len() != self.lengths.len() {
                return Err(Error::SizeMismatch { expected: self.lengths.len(), got: map.len() });
            }
        }
        let mut letters = Vec::with_capacity(len);
        let mut k = start;
        for _ in 0..len {
            let interval = self.letter_of(k);
            let letter = match labels {
                Some(map) => map[interval as usize - 1],
                None => interval,
            };
            letters.push(letter);
            k = self.apply(k)?;
        }
        if letters.is_empty() {
            // the empty coding is available through trajectory_letters
            return Err(Error::EmptyWord);
        }
        let r = letters.iter().copied().max().unwrap().max(self.interval_count());
        Word::new(letters, r)
    }

    /// Like [`trajectory`](Self::trajectory) but returns raw letters, allowing length 0.
    pub fn trajectory_letters(&self, start: usize, len: usize, labels: Option<&[u8]>) -> Result<Vec<u8>> {
        if len == 0 {
            if start < 1 || start > self.n {
                return Err(Error::PointOutOfRange(start, self.n));
            }
            return Ok(Vec::new());
        }
        self.trajectory(start, len, labels).map(|w| w.letters().to_vec())
    }

    /// For a non-minimal map, the trajectory word of a shortest cycle (ties
    /// broken by least point). Its offset letter-sum is zero and its length is
    /// strictly below `n`.
    pub fn nonminimality_witness(&self) -> Option<Word> {
        let orbits = self.orbit_decomposition();
        if orbits.cycles.len() < 2 {
            return None;
        }
        let best = (0..orbits.cycles.len())
            .min_by_key(|&i| (orbits.cycles[i].len(), orbits.cycles[i][0]))
            .expect("at least two cycles");
        let word = orbits.words[best].clone();
        let offset_sum: i64 = word
            .letters()
            .iter()
            .map(|&l| self.offsets[l as usize - 1])
            .sum();
        assert_eq!(offset_sum, 0, "witness cycle must have zero offset sum");
        assert!(word.len() < self.n);
        Some(word)
    }
}

/// Closed-form minimality verdict for r = 3 (coprimality criteria; the three
/// permutations not covered by a criterion are never minimal, as is the identity).
pub fn minimality_criterion_r3(lengths: &[usize], pi: &Permutation) -> Result<bool> {
    if lengths.len() != 3 || pi.size() != 3 {
        return Err(Error::NotThreeIntervals);
    }
    if lengths.iter().any(|&n| n == 0) {
        return Err(Error::NonPositiveLength);
    }
    let (n1, n2, n3) = (lengths[0], lengths[1], lengths[2]);
    let verdict = match pi.images() {
        [3, 2, 1] => gcd(n1 + n2, n2 + n3) == 1,
        [2, 3, 1] => gcd(n1, n2 + n3) == 1,
        [3, 1, 2] => gcd(n3, n2 + n1) == 1,
        _ => false,
    };
    Ok(verdict)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// A primitive clustering word induces the discrete IET with lengths = its
/// Parikh vector (on the occurring letters) and its clustering permutation.
/// The first-to-last-column map of the sorted conjugate array is checked
/// against the constructed point map.
pub fn from_clustering_word(w: &Word) -> Result<DiscreteIet> {
    if !w.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let (restricted, _) = w.restrict_to_support();
    let report = clustering_report(w);
    let pi = report.permutation.clone().ok_or(Error::NotClustering)?;
    let iet = DiscreteIet::new(restricted.parikh().counts().to_vec(), pi)?;

    // Cross-check against the sorted conjugate array: occurrence ids are the
    // overall sorted-rotation ranks, and the point map must send the
    // last-column occurrence of each row to its first-column occurrence.
    let n = restricted.len();
    let starts = restricted.sorted_rotation_starts();
    let mut rank_of_start = vec![0usize; n];
    for (rank, &s) in starts.iter().enumerate() {
        rank_of_start[s] = rank + 1;
    }
    for (row, &s) in starts.iter().enumerate() {
        let last_occurrence = rank_of_start[(s + n - 1) % n];
        if iet.apply(last_occurrence)? != row + 1 {
            return Err(Error::NotClustering);
        }
    }
    Ok(iet)
}
