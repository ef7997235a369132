//! Continuous r-interval exchange transformations over exact arithmetic,
//! trajectory coding, Sturmian generation, and a Keane-condition collision
//! search.
//!
//! Interval convention is half-open, `[left, right)`, everywhere.
//!
//! Sturmian coding convention (fixed once, locked by the substitution-oracle
//! test): `sturmian_word(alpha, len)` codes the rotation `x -> x + alpha` on
//! the two intervals `[0, 1 - alpha) -> 1` and `[1 - alpha, 1) -> 2`, started
//! at `x = alpha`. With the golden slope `alpha = (3 - sqrt 5)/2` this is the
//! Fibonacci word, the fixed point of `1 -> 12, 2 -> 1`.

use num::{BigInt, BigRational};

use crate::error::{Error, Result};
use crate::exact::{common_radicand, ExactReal};
use crate::iet_discrete::DiscreteIet;
use crate::word::{Permutation, Word};

/// A continuous r-interval exchange transformation with exact endpoints:
/// `T x = x + tau_i` on `Delta_i`, where
/// `tau_i = sum_{pi^-1(j) < pi^-1(i)} alpha_j - sum_{j < i} alpha_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuousIet {
    alphas: Vec<ExactReal>,
    permutation: Permutation,
    taus: Vec<ExactReal>,
    /// Left endpoints `sum_{j < i} alpha_j` for i = 1..r.
    cuts: Vec<ExactReal>,
}

/// Result of a finite forward-orbit search over the interior cut points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KeaneVerdict {
    /// Exact certificate `T^steps gamma_from = gamma_to` (1-based cut indices).
    CollisionFound { from: usize, to: usize, steps: usize },
    NoCollisionUpTo(usize),
}

impl ContinuousIet {
    pub fn new(alphas: Vec<ExactReal>, permutation: Permutation) -> Result<Self> {
        let r = alphas.len();
        if r == 0 || permutation.size() as usize != r {
            return Err(Error::SizeMismatch { expected: r.max(1), got: permutation.size() as usize });
        }
        common_radicand(alphas.iter())?;
        if alphas.iter().any(|a| a.signum() <= 0) {
            return Err(Error::NonPositiveAlpha);
        }
        let total = alphas.iter().fold(ExactReal::zero(), |acc, a| &acc + a);
        if total != ExactReal::one() {
            return Err(Error::AlphaSumNotOne);
        }

        let inv = permutation.inverse();
        let taus: Vec<ExactReal> = (1..=r)
            .map(|i| {
                let before_image = (1..=r)
                    .filter(|&j| inv.apply(j as u8) < inv.apply(i as u8))
                    .fold(ExactReal::zero(), |acc, j| &acc + &alphas[j - 1]);
                let before = alphas[..i - 1]
                    .iter()
                    .fold(ExactReal::zero(), |acc, a| &acc + a);
                &before_image - &before
            })
            .collect();
        let mut cuts = Vec::with_capacity(r);
        let mut acc = ExactReal::zero();
        for a in &alphas {
            cuts.push(acc.clone());
            acc = &acc + a;
        }

        // tiling check: the image of the interval in position k under pi must
        // start exactly where the images of its predecessors end
        let mut image_left = ExactReal::zero();
        for k in 0..r {
            let i = permutation.apply(k as u8 + 1) as usize;
            let translated = &cuts[i - 1] + &taus[i - 1];
            if translated != image_left {
                return Err(Error::AlphaSumNotOne);
            }
            image_left = &image_left + &alphas[i - 1];
        }
        Ok(Self { alphas, permutation, taus, cuts })
    }

    pub fn alphas(&self) -> &[ExactReal] {
        &self.alphas
    }

    pub fn permutation(&self) -> &Permutation {
        &self.permutation
    }

    pub fn taus(&self) -> &[ExactReal] {
        &self.taus
    }

    pub fn interval_count(&self) -> u8 {
        self.alphas.len() as u8
    }

    /// Interior cut points `gamma_1 < ... < gamma_{r-1}`.
    pub fn interior_cuts(&self) -> &[ExactReal] {
        &self.cuts[1..]
    }

    /// Index (1-based) of the interval containing `x`.
    pub fn letter_of(&self, x: &ExactReal) -> Result<u8> {
        if x.signum() < 0 || *x >= ExactReal::one() {
            return Err(Error::PointOutsideUnitInterval);
        }
        let i = self.cuts.partition_point(|cut| cut <= x);
        Ok(i as u8)
    }

    pub fn apply(&self, x: &ExactReal) -> Result<ExactReal> {
        let i = self.letter_of(x)?;
        Ok(x + &self.taus[i as usize - 1])
    }

    /// Length-`len` symbolic coding of the forward orbit of `x`.
    pub fn trajectory(&self, x: &ExactReal, len: usize) -> Result<Vec<u8>> {
        let mut letters = Vec::with_capacity(len);
        let mut point = x.clone();
        if len == 0 {
            self.letter_of(&point)?; // still validate the starting point
        }
        for _ in 0..len {
            let i = self.letter_of(&point)?;
            letters.push(i);
            point = &point + &self.taus[i as usize - 1];
        }
        Ok(letters)
    }

    pub fn trajectory_word(&self, x: &ExactReal, len: usize) -> Result<Word> {
        Word::new(self.trajectory(x, len)?, self.interval_count())
    }

    /// Searches for an occurrence of `ww` within the first `horizon` letters of
    /// the trajectories of the given starting points. Returns the first
    /// `(start, offset)` found. A `None` is only "not found within the search
    /// budget", never a proof of absence.
    pub fn contains_square(
        &self,
        w: &Word,
        starts: &[ExactReal],
        horizon: usize,
    ) -> Result<Option<(ExactReal, usize)>> {
        let need = 2 * w.len();
        if horizon < need {
            return Err(Error::HorizonTooShort { horizon, need });
        }
        let mut square = w.letters().to_vec();
        square.extend_from_slice(w.letters());
        for start in starts {
            let coding = self.trajectory(start, horizon)?;
            if let Some(offset) = coding.windows(need).position(|win| win == square) {
                return Ok(Some((start.clone(), offset)));
            }
        }
        Ok(None)
    }

    /// Exact forward-orbit search: does some `T^m gamma_i` hit a cut point
    /// within `depth` steps?
    pub fn keane_check(&self, depth: usize) -> Result<KeaneVerdict> {
        let cuts = self.interior_cuts().to_vec();
        for (i, gamma) in cuts.iter().enumerate() {
            let mut point = gamma.clone();
            for m in 1..=depth {
                point = self.apply(&point)?;
                if let Some(j) = cuts.iter().position(|g| *g == point) {
                    return Ok(KeaneVerdict::CollisionFound { from: i + 1, to: j + 1, steps: m });
                }
            }
        }
        Ok(KeaneVerdict::NoCollisionUpTo(depth))
    }
}

/// The continuous transformation with probability vector `n_i / n` and the
/// same permutation; its trajectories from `(k-1)/n` replicate the discrete ones.
pub fn from_discrete(t: &DiscreteIet) -> ContinuousIet {
    let n = t.point_count() as i64;
    let alphas = t
        .lengths()
        .iter()
        .map(|&ni| ExactReal::from_rational(BigRational::new(BigInt::from(ni as i64), BigInt::from(n))))
        .collect();
    ContinuousIet::new(alphas, t.permutation().clone())
        .expect("discrete data always yields a valid probability vector")
}

/// The golden ratio conjugate `(sqrt 5 - 1)/2`.
pub fn golden_alpha() -> ExactReal {
    ExactReal::quadratic(
        BigRational::new(BigInt::from(-1), BigInt::from(2)),
        BigRational::new(BigInt::from(1), BigInt::from(2)),
        5,
    )
    .expect("5 is square-free")
}

/// The golden slope `(3 - sqrt 5)/2 = 1/phi^2`; [`sturmian_word`] with this
/// slope produces the Fibonacci word.
pub fn golden_slope() -> ExactReal {
    &ExactReal::one() - &golden_alpha()
}

/// The rotation by the golden ratio conjugate: probability vector
/// `(1 - alpha, alpha)` with the swap permutation, so `T x = x + alpha (mod 1)`.
pub fn golden_rotation() -> ContinuousIet {
    let alpha = golden_alpha();
    ContinuousIet::new(
        vec![&ExactReal::one() - &alpha, alpha],
        Permutation::new(vec![2, 1]).expect("valid swap"),
    )
    .expect("golden rotation data is valid")
}

/// The Sturmian coding of the rotation by `slope`, under the documented
/// convention (start `x = slope`, interval `[0, 1 - slope)` coded 1).
pub fn sturmian_word(slope: &ExactReal, len: usize) -> Result<Word> {
    if slope.signum() <= 0 || *slope >= ExactReal::one() {
        return Err(Error::SlopeOutOfRange);
    }
    let iet = ContinuousIet::new(
        vec![&ExactReal::one() - slope, slope.clone()],
        Permutation::new(vec![2, 1]).expect("valid swap"),
    )?;
    iet.trajectory_word(slope, len)
}

/// The first `len` letters of the Fibonacci word over `{1, 2}`.
pub fn fibonacci_word(len: usize) -> Word {
    sturmian_word(&golden_slope(), len).expect("golden slope lies in (0, 1)")
}
