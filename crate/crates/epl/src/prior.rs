//! Bernoulli segmentation prior.
//!
//! A segmentation draws each split variable independently: a boundary stays
//! inside a token with probability `q` and separates two tokens with
//! probability `1-q`. The parameter is kept as an exact rational so that
//! enumeration-based quantities can be evaluated without rounding; a cached
//! `f64` view serves the floating-point paths.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Parameters of the segmentation prior: `q` is the probability that a
/// boundary does NOT split (the two adjacent words share a token).
#[derive(Debug, Clone, PartialEq)]
pub struct Prior {
    q: BigRational,
    q_f64: f64,
}

impl Prior {
    pub fn new(q: BigRational) -> Result<Self> {
        if q.is_negative() || q > BigRational::one() {
            return Err(Error::Config(format!("q must lie in [0,1], got {q}")));
        }
        let q_f64 = q.to_f64().unwrap_or(f64::NAN);
        Ok(Prior { q, q_f64 })
    }

    pub fn from_ratio(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::Config("q denominator is zero".into()));
        }
        Self::new(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The setting under which the approximation limit holds: `q = d/(d+1)`.
    pub fn for_window(d: usize) -> Self {
        Self::from_ratio(d as u64, d as u64 + 1).expect("d/(d+1) is a valid probability")
    }

    /// Parse `"2/3"` or a decimal literal such as `"0.65"` into an exact
    /// rational. Decimals are read digit-for-digit, not via `f64`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |_| Error::Config(format!("cannot parse prior parameter q from {s:?}"));
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(bad)?;
            let d: BigInt = d.trim().parse().map_err(bad)?;
            if d.is_zero() {
                return Err(Error::Config("q denominator is zero".into()));
            }
            return Self::new(BigRational::new(n, d));
        }
        if let Some((int, frac)) = s.split_once('.') {
            if !frac.chars().all(|c| c.is_ascii_digit()) || frac.is_empty() {
                return Err(Error::Config(format!(
                    "cannot parse prior parameter q from {s:?}"
                )));
            }
            let int: BigInt = if int.is_empty() { BigInt::zero() } else { int.parse().map_err(bad)? };
            let num: BigInt = frac.parse().map_err(bad)?;
            let den = BigInt::from(10u32).pow(frac.len() as u32);
            return Self::new(BigRational::new(int * &den + num, den));
        }
        let n: BigInt = s.parse().map_err(bad)?;
        Self::new(BigRational::from_integer(n))
    }

    /// `q` as a float.
    pub fn q(&self) -> f64 {
        self.q_f64
    }

    /// `q` as an exact rational.
    pub fn q_exact(&self) -> &BigRational {
        &self.q
    }

    pub fn one_minus_q(&self) -> f64 {
        1.0 - self.q_f64
    }

    pub fn one_minus_q_exact(&self) -> BigRational {
        BigRational::one() - &self.q
    }

    /// Probability of a specific split vector with `zeros` kept boundaries
    /// and `ones` separating boundaries: `q^zeros (1-q)^ones`.
    pub fn split_vector_prob(&self, zeros: usize, ones: usize) -> f64 {
        self.q_f64.powi(zeros as i32) * (1.0 - self.q_f64).powi(ones as i32)
    }

    pub fn split_vector_prob_exact(&self, zeros: usize, ones: usize) -> BigRational {
        pow_rat(&self.q, zeros) * pow_rat(&self.one_minus_q_exact(), ones)
    }
}

impl std::fmt::Display for Prior {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.q)
    }
}

/// Non-negative integer power of a rational.
pub fn pow_rat(x: &BigRational, e: usize) -> BigRational {
    let mut out = BigRational::one();
    let mut base = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            out *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    out
}

/// Rational from non-negative integers.
pub fn rat(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Format a rational as `num/den` (or `num` when the denominator is 1).
pub fn format_rat(x: &BigRational) -> String {
    if x.denom().is_one() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Every random stream in the crate is derived from one user seed plus a
/// label and an index, so a single `--seed` reproduces a whole run and
/// parallel workers never share state.
pub fn derive_rng(seed: u64, label: &str, index: u64) -> ChaCha8Rng {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(label.as_bytes());
    h.update(index.to_le_bytes());
    let digest = h.finalize();
    let mut key = [0u8; 32];
    key.copy_from_slice(&digest);
    ChaCha8Rng::from_seed(key)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms_agree() {
        let a = Prior::parse("2/3").unwrap();
        let b = Prior::from_ratio(2, 3).unwrap();
        assert_eq!(a.q_exact(), b.q_exact());
        let c = Prior::parse("0.5").unwrap();
        assert_eq!(c.q_exact(), &rat(1, 2));
        assert_eq!(Prior::parse("1").unwrap().q(), 1.0);
        assert!(Prior::parse("4/3").is_err());
        assert!(Prior::parse("-0.1").is_err());
        assert!(Prior::parse("x").is_err());
    }

    #[test]
    fn window_default_is_d_over_d_plus_one() {
        let p = Prior::for_window(2);
        assert_eq!(p.q_exact(), &rat(2, 3));
    }

    #[test]
    fn derived_rngs_are_stable_and_distinct() {
        use rand_chacha::rand_core::RngCore;
        let mut a = derive_rng(7, "mc-block", 0);
        let mut a2 = derive_rng(7, "mc-block", 0);
        let mut b = derive_rng(7, "mc-block", 1);
        let x = a.next_u64();
        assert_eq!(x, a2.next_u64());
        assert_ne!(x, b.next_u64());
    }
}
