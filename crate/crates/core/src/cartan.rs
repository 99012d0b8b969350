//! Type A_n root and weight bookkeeping.
//!
//! Weights live in the basis of fundamental weights `Λ_1..Λ_n`. Simple roots
//! are the columns of the Cartan matrix expressed in that basis.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Cartan datum of `A_n = sl_{n+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanDatum {
    rank: usize,
}

impl CartanDatum {
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::domain("rank must be at least 1"));
        }
        Ok(CartanDatum { rank })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Entry `a_ij` of the Cartan matrix, `1 <= i, j <= n`.
    pub fn entry(&self, i: usize, j: usize) -> Result<i64> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(match i.abs_diff(j) {
            0 => 2,
            1 => -1,
            _ => 0,
        })
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            return Err(Error::range("index", i, 1, self.rank as i64));
        }
        Ok(())
    }

    /// `α_i = Σ_j a_ji Λ_j`.
    pub fn simple_root(&self, i: usize) -> Result<Weight> {
        self.check_index(i)?;
        let coeffs = (1..=self.rank)
            .map(|j| self.entry(j, i))
            .collect::<Result<Vec<_>>>()?;
        Ok(Weight(coeffs))
    }

    pub fn fundamental_weight(&self, k: usize) -> Result<Weight> {
        self.check_index(k)?;
        let mut w = Weight::zero(self.rank);
        w.0[k - 1] = 1;
        Ok(w)
    }

    /// Dimension of the irreducible module of highest weight `λ`, i.e. the
    /// number of semistandard tableaux of shape `λ` in the alphabet `1..=n+1`.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<u128> {
        self.check_weight(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::domain(format!("weight {lambda} is not dominant")));
        }
        let mu = lambda.partition();
        let parts = |i: usize| if i < mu.len() { mu[i] as i128 } else { 0 };
        let overflow = || Error::domain(format!("dimension of {lambda} exceeds u128"));

        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for i in 0..=self.rank {
            for j in (i + 1)..=self.rank {
                let gap = (j - i) as i128;
                let factor = parts(i) - parts(j) + gap;
                num = num.checked_mul(factor as u128).ok_or_else(overflow)?;
                den = den.checked_mul(gap as u128).ok_or_else(overflow)?;
                let g = num.gcd(&den);
                num /= g;
                den /= g;
            }
        }
        if den != 1 {
            return Err(Error::internal(format!(
                "dimension product for {lambda} is not integral ({num}/{den})"
            )));
        }
        Ok(num)
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::domain(format!(
                "weight {w} has {} coefficients, expected {}",
                w.rank(),
                self.rank
            )));
        }
        Ok(())
    }

    /// All dominant weights with `a_1 + ... + a_n <= level`, in
    /// lexicographic order of the coefficient vector.
    pub fn dominant_weights_up_to(&self, level: u32) -> Vec<Weight> {
        fn rec(rank: usize, left: i64, acc: &mut Vec<i64>, out: &mut Vec<Weight>) {
            if acc.len() == rank {
                out.push(Weight(acc.clone()));
                return;
            }
            for a in 0..=left {
                acc.push(a);
                rec(rank, left - a, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        rec(self.rank, level as i64, &mut Vec::new(), &mut out);
        out
    }
}

/// Integer weight `a_1 Λ_1 + ... + a_n Λ_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Weight(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    /// `⟨h_i, w⟩`, the coefficient of `Λ_i`.
    pub fn pairing(&self, i: usize) -> Result<i64> {
        if i == 0 || i > self.rank() {
            return Err(Error::range("index", i, 1, self.rank() as i64));
        }
        Ok(self.0[i - 1])
    }

    /// Coefficient of `Λ_i` with `Λ_0 = Λ_{n+1} = 0` (and anything further
    /// out) contributing nothing.
    pub fn coeff(&self, i: usize) -> i64 {
        if i == 0 {
            0
        } else {
            self.0.get(i - 1).copied().unwrap_or(0)
        }
    }

    /// Adds `delta` to the coefficient of `Λ_i`; boundary indices are ignored.
    pub fn add_fundamental(&mut self, i: usize, delta: i64) {
        if i >= 1 && i <= self.rank() {
            self.0[i - 1] += delta;
        }
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    /// `a_1 + ... + a_n`.
    pub fn level(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Partition `μ_i = a_i + ... + a_n`, one part per index (zeros kept).
    pub fn partition(&self) -> Vec<i64> {
        let mut mu = vec![0; self.rank()];
        let mut acc = 0;
        for k in (0..self.rank()).rev() {
            acc += self.0[k];
            mu[k] = acc;
        }
        mu
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Comma-separated coefficients, e.g. `"1,2,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut coeffs = Vec::new();
        let mut offset = 0;
        for part in s.split(',') {
            let trimmed = part.trim();
            let value = trimmed.parse::<i64>().map_err(|e| Error::Parse {
                pos: offset + part.find(trimmed).unwrap_or(0),
                msg: format!("bad weight coefficient {trimmed:?}: {e}"),
            })?;
            coeffs.push(value);
            offset += part.len() + 1;
        }
        Ok(Weight(coeffs))
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        assert_eq!(self.rank(), rhs.rank(), "weights of different rank");
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        assert_eq!(self.rank(), rhs.rank(), "weights of different rank");
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Neg for Weight {
    type Output = Weight;

    fn neg(mut self) -> Weight {
        for a in &mut self.0 {
            *a = -*a;
        }
        self
    }
}
