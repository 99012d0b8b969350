//! Nakajima monomials: Laurent monomials in commuting variables `Y_i(n)`
//! with the crystal structure given by `wt`, `φ_i`, `ε_i` and multiplication
//! by the correction monomials `A_i(m)`.
//!
//! All statistics for color `i` only look at the factors `Y_i(·)` ordered by
//! their second index. For a step function `P(n) = Σ_{k <= n} e_{i,k}` (the
//! running exponent sum) we have `φ_i = max_n P(n)` (with `P(-∞) = 0`),
//! `ε_i = φ_i - P(+∞)`, `n_f` the smallest `n` with `P(n) = φ_i` and `n_e`
//! the largest such `n`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, MulAssign};

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanDatum, Weight};
use crate::crystal::Crystal;
use crate::error::{Error, Result};

/// `∏ Y_i(n)^{e}` with no zero exponents and no boundary variables
/// `Y_0`, `Y_{n+1}` stored.
///
/// Factors are keyed by `(n, i)` so iteration runs in canonical order:
/// second index ascending, then first index ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    factors: BTreeMap<(i64, usize), i64>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// Builds `∏ Y_i(n)^e` from `(i, n, e)` triples for rank `n`. Indices `0`
    /// and `rank + 1` stand for the trivial variable and are dropped.
    pub fn from_factors<I>(rank: usize, factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, i64, i64)>,
    {
        let mut m = Monomial::one();
        for (i, n, e) in factors {
            if i > rank + 1 {
                return Err(Error::range("variable index", i, 0, rank as i64 + 1));
            }
            if i == 0 || i == rank + 1 {
                continue;
            }
            m.bump(i, n, e);
        }
        Ok(m)
    }

    fn bump(&mut self, i: usize, n: i64, e: i64) {
        if e == 0 {
            return;
        }
        let slot = self.factors.entry((n, i)).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.factors.remove(&(n, i));
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// `(i, n, e)` in canonical order.
    pub fn factors(&self) -> impl Iterator<Item = (usize, i64, i64)> + '_ {
        self.factors.iter().map(|(&(n, i), &e)| (i, n, e))
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn exponent(&self, i: usize, n: i64) -> i64 {
        self.factors.get(&(n, i)).copied().unwrap_or(0)
    }

    /// Largest first index present, 0 for the trivial monomial.
    pub fn max_index(&self) -> usize {
        self.factors.keys().map(|&(_, i)| i).max().unwrap_or(0)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial {
            factors: self.factors.iter().map(|(&k, &e)| (k, -e)).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial {
            factors: self.factors.iter().map(|(&key, &e)| (key, e * k)).collect(),
        }
    }

    /// `wt(M) = Σ e Λ_i`.
    pub fn weight(&self, rank: usize) -> Weight {
        let mut w = Weight::zero(rank);
        for (i, _, e) in self.factors() {
            w.add_fundamental(i, e);
        }
        w
    }

    /// `(n, e)` for every factor `Y_i(n)^e`, `n` ascending.
    pub fn i_string(&self, i: usize) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.factors
            .iter()
            .filter(move |(&(_, j), _)| j == i)
            .map(|(&(n, _), &e)| (n, e))
    }

    pub fn phi(&self, i: usize) -> i64 {
        let mut best = 0;
        let mut sum = 0;
        for (_, e) in self.i_string(i) {
            sum += e;
            best = best.max(sum);
        }
        best
    }

    pub fn epsilon(&self, i: usize) -> i64 {
        let mut best = 0;
        let mut sum = 0;
        let string: Vec<_> = self.i_string(i).collect();
        for &(_, e) in string.iter().rev() {
            sum += e;
            best = best.max(-sum);
        }
        best
    }

    /// Smallest `n` with `Σ_{k <= n} e_{i,k} = φ_i(M)`. Requires `φ_i > 0`.
    pub fn n_f(&self, i: usize) -> Result<i64> {
        let phi = self.phi(i);
        if phi <= 0 {
            return Err(Error::domain(format!("n_f needs φ_{i} > 0 on {self}")));
        }
        let mut sum = 0;
        let mut found = None;
        for (n, e) in self.i_string(i) {
            sum += e;
            if sum == phi {
                found = Some(n);
                break;
            }
        }
        let n = found.ok_or_else(|| Error::internal("φ maximum not attained"))?;
        debug_assert_eq!(Some(n), self.n_f_from_suffixes(i));
        Ok(n)
    }

    /// Largest `n` with `Σ_{k <= n} e_{i,k} = φ_i(M)`. Requires `ε_i > 0`.
    ///
    /// The running sum is constant between consecutive factors, so the answer
    /// is one less than the position of the first factor after the last
    /// maximizing prefix (which may be the empty prefix).
    pub fn n_e(&self, i: usize) -> Result<i64> {
        let eps = self.epsilon(i);
        if eps <= 0 {
            return Err(Error::domain(format!("n_e needs ε_{i} > 0 on {self}")));
        }
        let phi = self.phi(i);
        let string: Vec<_> = self.i_string(i).collect();
        // last prefix length achieving the maximum; 0 is the empty prefix
        let mut last = if phi == 0 { Some(0) } else { None };
        let mut sum = 0;
        for (s, &(_, e)) in string.iter().enumerate() {
            sum += e;
            if sum == phi {
                last = Some(s + 1);
            }
        }
        let last = last.ok_or_else(|| Error::internal("φ maximum not attained"))?;
        let next = string
            .get(last)
            .ok_or_else(|| Error::internal("ε > 0 but no factor follows the maximum"))?;
        let n = next.0 - 1;
        debug_assert_eq!(Some(n), self.n_e_from_suffixes(i));
        Ok(n)
    }

    /// `n_f` through the `ε` characterization: smallest `n` with
    /// `-Σ_{k > n} e_{i,k} = ε_i`.
    fn n_f_from_suffixes(&self, i: usize) -> Option<i64> {
        let eps = self.epsilon(i);
        let string: Vec<_> = self.i_string(i).collect();
        let mut tail: i64 = string.iter().map(|&(_, e)| e).sum();
        for &(n, e) in &string {
            tail -= e;
            if -tail == eps {
                return Some(n);
            }
        }
        None
    }

    /// `n_e` through the `ε` characterization: largest `n` with
    /// `-Σ_{k > n} e_{i,k} = ε_i`.
    fn n_e_from_suffixes(&self, i: usize) -> Option<i64> {
        let eps = self.epsilon(i);
        let string: Vec<_> = self.i_string(i).collect();
        let mut tail = 0;
        // walk from the right; the suffix strictly after factor s-1
        for s in (0..string.len()).rev() {
            tail += string[s].1;
            if -tail == eps {
                return Some(string[s].0 - 1);
            }
        }
        None
    }

    /// Parses `Y1(1)^-1*Y2(0)` style text. `"1"` is the trivial monomial and
    /// whitespace is ignored. Indices `0` and `rank + 1` are accepted and
    /// dropped.
    pub fn parse(text: &str, rank: usize) -> Result<Monomial> {
        Parser::new(text).monomial(rank)
    }

    pub fn to_json(&self) -> MonomialJson {
        MonomialJson {
            factors: self
                .factors()
                .map(|(i, n, e)| FactorJson { i, n, e })
                .collect(),
        }
    }

    pub fn from_json(json: &MonomialJson, rank: usize) -> Result<Monomial> {
        Monomial::from_factors(rank, json.factors.iter().map(|f| (f.i, f.n, f.e)))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (i, n, e)) in self.factors().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "Y{i}({n})")?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        let mut out = self.clone();
        out *= rhs;
        out
    }
}

impl MulAssign<&Monomial> for Monomial {
    fn mul_assign(&mut self, rhs: &Monomial) {
        for (&(n, i), &e) in &rhs.factors {
            self.bump(i, n, e);
        }
    }
}

impl Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// `{"factors": [{"i": .., "n": .., "e": ..}, ...]}` in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub factors: Vec<FactorJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    pub i: usize,
    pub n: i64,
    pub e: i64,
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { text, pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.err(format!("expected '{c}', found '{found}'")),
                None => self.err(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn int(&mut self) -> Result<i64> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        self.skip_ws();
        let digits = self.text[self.pos..]
            .char_indices()
            .take_while(|(_, c)| c.is_ascii_digit())
            .last()
            .map_or(0, |(k, c)| k + c.len_utf8());
        if digits == 0 {
            return self.err("expected an integer");
        }
        let literal = &self.text[self.pos..self.pos + digits];
        let value: i64 = literal.parse().map_err(|_| Error::Parse {
            pos: start,
            msg: format!("integer {literal} out of range"),
        })?;
        self.pos += digits;
        Ok(if negative { -value } else { value })
    }

    fn monomial(mut self, rank: usize) -> Result<Monomial> {
        if self.peek() == Some('1') {
            self.pos += 1;
            if self.peek().is_some() {
                return self.err("unexpected input after '1'");
            }
            return Ok(Monomial::one());
        }
        let mut m = Monomial::one();
        loop {
            let at = {
                self.skip_ws();
                self.pos
            };
            self.expect('Y')?;
            let i = self.int()?;
            if i < 0 || i > rank as i64 + 1 {
                return Err(Error::Parse {
                    pos: at,
                    msg: format!("variable index {i} outside 0..={}", rank + 1),
                });
            }
            self.expect('(')?;
            let n = self.int()?;
            self.expect(')')?;
            let e = if self.eat('^') { self.int()? } else { 1 };
            let i = i as usize;
            if i != 0 && i != rank + 1 {
                m.bump(i, n, e);
            }
            if self.peek().is_none() {
                return Ok(m);
            }
            // factors may also be juxtaposed
            if self.peek() != Some('Y') {
                self.expect('*')?;
            }
        }
    }
}

/// Choice of `c_ij ∈ {0, 1}` for `i ≠ j` with `c_ij + c_ji = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CijChoice {
    rank: usize,
    // row-major, c[(i-1)*rank + (j-1)]; diagonal unused
    c: Vec<u8>,
}

impl CijChoice {
    /// `c_ij = 1` if `i < j`, `0` if `i > j`.
    pub fn standard(rank: usize) -> Self {
        Self::from_fn(rank, |i, j| (i < j) as u8).expect("standard choice is valid")
    }

    pub fn from_fn(rank: usize, f: impl Fn(usize, usize) -> u8) -> Result<Self> {
        let mut c = vec![0; rank * rank];
        for i in 1..=rank {
            for j in 1..=rank {
                if i != j {
                    c[(i - 1) * rank + (j - 1)] = f(i, j);
                }
            }
        }
        let choice = CijChoice { rank, c };
        for i in 1..=rank {
            for j in 1..=rank {
                if i != j && choice.get(i, j) + choice.get(j, i) != 1 {
                    return Err(Error::domain(format!("c_{i}{j} + c_{j}{i} must equal 1")));
                }
            }
        }
        Ok(choice)
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.c[(i - 1) * self.rank + (j - 1)]
    }

    pub fn is_standard(&self) -> bool {
        *self == Self::standard(self.rank)
    }
}

/// The crystal of all monomials for `A_n` under a fixed `c_ij` choice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialCrystal {
    cartan: CartanDatum,
    cij: CijChoice,
}

impl MonomialCrystal {
    pub fn new(rank: usize) -> Result<Self> {
        Ok(MonomialCrystal {
            cartan: CartanDatum::new(rank)?,
            cij: CijChoice::standard(rank),
        })
    }

    pub fn with_choice(rank: usize, cij: CijChoice) -> Result<Self> {
        if cij.rank != rank {
            return Err(Error::domain("c_ij choice has the wrong rank"));
        }
        Ok(MonomialCrystal {
            cartan: CartanDatum::new(rank)?,
            cij,
        })
    }

    pub fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    pub fn cij(&self) -> &CijChoice {
        &self.cij
    }

    /// Errors unless the standard `c_ij` choice is active.
    pub fn require_standard(&self) -> Result<()> {
        if self.cij.is_standard() {
            Ok(())
        } else {
            Err(Error::domain(
                "only the standard choice c_ij = [i < j] is supported here",
            ))
        }
    }

    pub fn y(&self, i: usize, n: i64) -> Result<Monomial> {
        Monomial::from_factors(self.rank(), [(i, n, 1)])
    }

    pub fn parse(&self, text: &str) -> Result<Monomial> {
        Monomial::parse(text, self.rank())
    }

    /// `A_i(m) = Y_i(m) Y_i(m+1) ∏_{j ≠ i} Y_j(m + c_ji)^{a_ji}`.
    pub fn a_monomial(&self, i: usize, m: i64) -> Result<Monomial> {
        self.cartan.check_index(i)?;
        let mut factors = vec![(i, m, 1), (i, m + 1, 1)];
        for j in 1..=self.rank() {
            if j != i {
                let a = self.cartan.entry(j, i)?;
                if a != 0 {
                    factors.push((j, m + self.cij.get(j, i) as i64, a));
                }
            }
        }
        Monomial::from_factors(self.rank(), factors)
    }

    /// `Y_1(0)^{a_1} ⋯ Y_n(0)^{a_n}`.
    pub fn highest_weight_monomial(&self, lambda: &Weight) -> Result<Monomial> {
        self.cartan.check_weight(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::domain(format!("weight {lambda} is not dominant")));
        }
        Monomial::from_factors(
            self.rank(),
            lambda
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, &a)| (k + 1, 0, a)),
        )
    }
}

impl Crystal for MonomialCrystal {
    type Elem = Monomial;

    fn rank(&self) -> usize {
        self.cartan.rank()
    }

    fn weight(&self, b: &Monomial) -> Weight {
        b.weight(self.rank())
    }

    fn epsilon(&self, b: &Monomial, i: usize) -> i64 {
        b.epsilon(i)
    }

    fn phi(&self, b: &Monomial, i: usize) -> i64 {
        b.phi(i)
    }

    fn e_tilde(&self, b: &Monomial, i: usize) -> Option<Monomial> {
        if b.epsilon(i) == 0 {
            return None;
        }
        let n = b.n_e(i).expect("ε > 0");
        Some(b * &self.a_monomial(i, n).expect("color in range"))
    }

    fn f_tilde(&self, b: &Monomial, i: usize) -> Option<Monomial> {
        if b.phi(i) == 0 {
            return None;
        }
        let n = b.n_f(i).expect("φ > 0");
        Some(b * &self.a_monomial(i, n).expect("color in range").inverse())
    }
}
