//! Exact real arithmetic for interval exchange endpoints: arbitrary-precision
//! rationals and elements `a + b*sqrt(d)` of a real quadratic field.
//!
//! No floating point is used anywhere. Comparison of `a + b*sqrt(d)` against
//! zero is decided by sign analysis of `a`, `b` and `a^2 - b^2 d`.
//!
//! One radicand per context: mixing two different irrational radicands in an
//! arithmetic operation panics; constructors that combine user input
//! ([`common_radicand`]) report the mismatch as an error instead.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact number: a rational, or `a + b*sqrt(d)` with `b != 0` and `d`
/// square-free, `d >= 2`. Values are kept in canonical form, so structural
/// equality is numeric equality (within one radicand context).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExactReal {
    Rational(BigRational),
    Quadratic { a: BigRational, b: BigRational, d: u64 },
}

fn is_square_free(d: u64) -> bool {
    if d < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= d {
        if d % (p * p) == 0 {
            return false;
        }
        p += 1;
    }
    true
}

impl ExactReal {
    pub fn zero() -> Self {
        ExactReal::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactReal::Rational(BigRational::one())
    }

    pub fn from_int(v: i64) -> Self {
        ExactReal::Rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        ExactReal::Rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_rational(v: BigRational) -> Self {
        ExactReal::Rational(v)
    }

    /// Builds `a + b*sqrt(d)`, normalizing `b = 0` to a rational.
    pub fn quadratic(a: BigRational, b: BigRational, d: u64) -> Result<Self> {
        if !is_square_free(d) {
            return Err(Error::BadRadicand(d));
        }
        if b.is_zero() {
            Ok(ExactReal::Rational(a))
        } else {
            Ok(ExactReal::Quadratic { a, b, d })
        }
    }

    pub fn sqrt_of(d: u64) -> Result<Self> {
        Self::quadratic(BigRational::zero(), BigRational::one(), d)
    }

    /// The radicand this value depends on, if irrational.
    pub fn radicand(&self) -> Option<u64> {
        match self {
            ExactReal::Rational(_) => None,
            ExactReal::Quadratic { d, .. } => Some(*d),
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, ExactReal::Rational(_))
    }

    fn parts(&self) -> (BigRational, BigRational) {
        match self {
            ExactReal::Rational(a) => (a.clone(), BigRational::zero()),
            ExactReal::Quadratic { a, b, .. } => (a.clone(), b.clone()),
        }
    }

    fn join_radicand(&self, other: &ExactReal) -> u64 {
        match (self.radicand(), other.radicand()) {
            (Some(x), Some(y)) if x != y => {
                panic!("mixed quadratic contexts: sqrt({x}) vs sqrt({y})")
            }
            (Some(x), _) => x,
            (_, Some(y)) => y,
            (None, None) => 0, // unused: both rational
        }
    }

    fn build(a: BigRational, b: BigRational, d: u64) -> ExactReal {
        if b.is_zero() {
            ExactReal::Rational(a)
        } else {
            ExactReal::Quadratic { a, b, d }
        }
    }

    /// Sign: -1, 0 or +1.
    pub fn signum(&self) -> i32 {
        match self {
            ExactReal::Rational(a) => sign_of(a),
            ExactReal::Quadratic { a, b, d } => {
                let (sa, sb) = (sign_of(a), sign_of(b));
                debug_assert!(sb != 0, "canonical form has b != 0");
                if sa == 0 {
                    return sb;
                }
                if sa == sb {
                    return sa;
                }
                // opposite signs: compare a^2 against b^2 d
                let lhs = a * a;
                let rhs = b * b * BigRational::from_integer(BigInt::from(*d));
                match (sa, lhs.cmp(&rhs)) {
                    (_, Ordering::Equal) => unreachable!("sqrt(d) is irrational"),
                    (1, Ordering::Greater) => 1,
                    (1, Ordering::Less) => -1,
                    (-1, Ordering::Greater) => -1,
                    _ => 1,
                }
            }
        }
    }

    pub fn is_zero_value(&self) -> bool {
        self.signum() == 0
    }

    pub fn abs(&self) -> ExactReal {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn recip(&self) -> ExactReal {
        match self {
            ExactReal::Rational(a) => {
                assert!(!a.is_zero(), "division by zero");
                ExactReal::Rational(a.recip())
            }
            ExactReal::Quadratic { a, b, d } => {
                // 1 / (a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d)
                let norm = a * a - b * b * BigRational::from_integer(BigInt::from(*d));
                ExactReal::build(a / &norm, -(b / &norm), *d)
            }
        }
    }

    /// Decimal approximation for display purposes only; never used in comparisons.
    pub fn approx_f64(&self) -> f64 {
        fn ratio_f64(v: &BigRational) -> f64 {
            let num = v.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
            let den = v.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
            num / den
        }
        match self {
            ExactReal::Rational(a) => ratio_f64(a),
            ExactReal::Quadratic { a, b, d } => {
                ratio_f64(a) + ratio_f64(b) * (*d as f64).sqrt()
            }
        }
    }
}

fn sign_of(v: &BigRational) -> i32 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// The single radicand shared by a collection of values, or an error on a mix.
pub fn common_radicand<'a>(values: impl IntoIterator<Item = &'a ExactReal>) -> Result<Option<u64>> {
    let mut common: Option<u64> = None;
    for v in values {
        if let Some(d) = v.radicand() {
            match common {
                None => common = Some(d),
                Some(c) if c != d => return Err(Error::MixedRadicand(c, d)),
                _ => {}
            }
        }
    }
    Ok(common)
}

macro_rules! binop {
    ($trait:ident, $method:ident, |$a1:ident, $b1:ident, $a2:ident, $b2:ident, $d:ident| $body:expr) => {
        impl $trait for &ExactReal {
            type Output = ExactReal;
            fn $method(self, rhs: &ExactReal) -> ExactReal {
                let $d = self.join_radicand(rhs);
                let ($a1, $b1) = self.parts();
                let ($a2, $b2) = rhs.parts();
                $body
            }
        }
        impl $trait for ExactReal {
            type Output = ExactReal;
            fn $method(self, rhs: ExactReal) -> ExactReal {
                $trait::$method(&self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a1, b1, a2, b2, d| ExactReal::build(a1 + a2, b1 + b2, d));
binop!(Sub, sub, |a1, b1, a2, b2, d| ExactReal::build(a1 - a2, b1 - b2, d));
binop!(Mul, mul, |a1, b1, a2, b2, d| {
    let dd = BigRational::from_integer(BigInt::from(d));
    ExactReal::build(&a1 * &a2 + &b1 * &b2 * dd, &a1 * &b2 + &b1 * &a2, d)
});

impl Div for &ExactReal {
    type Output = ExactReal;
    fn div(self, rhs: &ExactReal) -> ExactReal {
        self * &rhs.recip()
    }
}

impl Div for ExactReal {
    type Output = ExactReal;
    fn div(self, rhs: ExactReal) -> ExactReal {
        &self / &rhs
    }
}

impl Neg for &ExactReal {
    type Output = ExactReal;
    fn neg(self) -> ExactReal {
        match self {
            ExactReal::Rational(a) => ExactReal::Rational(-a),
            ExactReal::Quadratic { a, b, d } => ExactReal::Quadratic { a: -a, b: -b, d: *d },
        }
    }
}

impl Neg for ExactReal {
    type Output = ExactReal;
    fn neg(self) -> ExactReal {
        -&self
    }
}

impl PartialOrd for ExactReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactReal {
    /// Total order within one radicand context (panics on a mix, which the
    /// constructors rule out).
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl fmt::Display for ExactReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactReal::Rational(a) => write!(f, "{a}"),
            ExactReal::Quadratic { a, b, d } => {
                if a.is_zero() {
                    if b.is_one() {
                        write!(f, "sqrt({d})")
                    } else {
                        write!(f, "{b}*sqrt({d})")
                    }
                } else if b.is_positive() {
                    write!(f, "{a}+{b}*sqrt({d})")
                } else {
                    write!(f, "{a}-{}*sqrt({d})", -b)
                }
            }
        }
    }
}

fn parse_rational(s: &str, whole: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = |m: &str| Error::Parse(whole.into(), m.into());
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad("bad numerator"))?;
        let q: BigInt = q.trim().parse().map_err(|_| bad("bad denominator"))?;
        if q.is_zero() {
            return Err(bad("zero denominator"));
        }
        Ok(BigRational::new(p, q))
    } else {
        let p: BigInt = s.parse().map_err(|_| bad("bad integer"))?;
        Ok(BigRational::from_integer(p))
    }
}

impl FromStr for ExactReal {
    type Err = Error;

    /// Grammar: `p/q` or `p` for rationals; `a+b*sqrt(d)`, `a-b*sqrt(d)`,
    /// `b*sqrt(d)`, `sqrt(d)` or `-sqrt(d)` for quadratics, with `a` and `b`
    /// themselves rationals.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |m: &str| Error::Parse(s.into(), m.into());
        let Some(idx) = trimmed.find("sqrt(") else {
            return Ok(ExactReal::Rational(parse_rational(&trimmed, s)?));
        };
        if !trimmed.ends_with(')') {
            return Err(bad("missing `)`"));
        }
        let d: u64 = trimmed[idx + 5..trimmed.len() - 1]
            .parse()
            .map_err(|_| bad("bad radicand"))?;
        let head = &trimmed[..idx];
        let coef = head.strip_suffix('*').unwrap_or(head);
        // split off an optional leading rational a at the last +/- separator
        let split = coef
            .char_indices()
            .rev()
            .find(|&(i, c)| (c == '+' || c == '-') && i > 0 && !"+-/".contains(coef.as_bytes()[i - 1] as char))
            .map(|(i, _)| i);
        let (a_str, b_str) = match split {
            Some(i) => (&coef[..i], &coef[i..]),
            None => ("", coef),
        };
        let a = if a_str.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(a_str, s)?
        };
        let b = match b_str {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other, s)?,
        };
        ExactReal::quadratic(a, b, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> ExactReal {
        s.parse().unwrap()
    }

    #[test]
    fn parsing_round_trips() {
        assert_eq!(q("4/9"), ExactReal::ratio(4, 9));
        assert_eq!(q("-3"), ExactReal::from_int(-3));
        assert_eq!(q("sqrt(5)"), ExactReal::sqrt_of(5).unwrap());
        let golden = q("-1/2+1/2*sqrt(5)");
        assert_eq!(
            golden,
            ExactReal::quadratic(
                BigRational::new(BigInt::from(-1), BigInt::from(2)),
                BigRational::new(BigInt::from(1), BigInt::from(2)),
                5
            )
            .unwrap()
        );
        for s in ["4/9", "-1/2+1/2*sqrt(5)", "3/2-1/2*sqrt(5)", "2*sqrt(3)", "-sqrt(2)"] {
            let v = q(s);
            assert_eq!(v.to_string().parse::<ExactReal>().unwrap(), v, "{s}");
        }
        assert!("sqrt(4)".parse::<ExactReal>().is_err());
        assert!("1/0".parse::<ExactReal>().is_err());
        assert!("abc".parse::<ExactReal>().is_err());
    }

    #[test]
    fn quadratic_normalizes_to_rational() {
        let v = ExactReal::quadratic(BigRational::one(), BigRational::zero(), 5).unwrap();
        assert!(v.is_rational());
    }

    #[test]
    fn sign_analysis() {
        // golden ratio conjugate: 0 < (sqrt 5 - 1)/2 < 1
        let alpha = q("-1/2+1/2*sqrt(5)");
        assert_eq!(alpha.signum(), 1);
        assert_eq!((&alpha - &ExactReal::one()).signum(), -1);
        // 3/2 - 1/2 sqrt(5) > 0 (since 9 > 5)
        assert_eq!(q("3/2-1/2*sqrt(5)").signum(), 1);
        // 1 - 1/2 sqrt(5) < 0 (since 4 < 5)
        assert_eq!(q("1-1/2*sqrt(5)").signum(), -1);
        assert_eq!(ExactReal::zero().signum(), 0);
    }

    #[test]
    fn golden_ratio_identity() {
        // alpha^2 = 1 - alpha for alpha = (sqrt 5 - 1)/2
        let alpha = q("-1/2+1/2*sqrt(5)");
        assert_eq!(&alpha * &alpha, &ExactReal::one() - &alpha);
        // and alpha * (alpha + 1) = 1
        assert_eq!(&alpha * &(&alpha + &ExactReal::one()), ExactReal::one());
        assert_eq!(alpha.recip(), &alpha + &ExactReal::one());
    }

    #[test]
    fn ordering_is_exact() {
        let alpha = q("-1/2+1/2*sqrt(5)");
        let mut values = vec![
            ExactReal::one(),
            ExactReal::zero(),
            alpha.clone(),
            q("3/2-1/2*sqrt(5)"),
            q("1/2"),
        ];
        values.sort();
        let shown: Vec<String> = values.iter().map(|v| v.to_string()).collect();
        assert_eq!(
            shown,
            vec!["0", "3/2-1/2*sqrt(5)", "1/2", "-1/2+1/2*sqrt(5)", "1"]
        );
    }

    #[test]
    fn mixed_radicands_are_detected() {
        let a = ExactReal::sqrt_of(2).unwrap();
        let b = ExactReal::sqrt_of(3).unwrap();
        assert_eq!(common_radicand([&a, &b]), Err(Error::MixedRadicand(2, 3)));
        assert_eq!(common_radicand([&a, &ExactReal::one()]), Ok(Some(2)));
        assert_eq!(common_radicand([&ExactReal::one()]), Ok(None));
    }

    #[test]
    #[should_panic(expected = "mixed quadratic contexts")]
    fn mixed_radicand_arithmetic_panics() {
        let _ = ExactReal::sqrt_of(2).unwrap() + ExactReal::sqrt_of(3).unwrap();
    }
}
