//! Closed-form membership tests for the connected components `ℳ(λ)`.
//!
//! Under `X_i(m) = Y_{i-1}(m+1)^{-1} Y_i(m)` every member of `ℳ(λ)` is a
//! product `∏ X_i(j)^{m_ij}` over `1 <= i <= n+1`, `0 <= j <= n-1`; the
//! exponent grid then satisfies a zero pattern, fixed column sums and nested
//! inequalities. The pair form `∏ Y_a(m)^{-1} Y_b(n)` with `a + m = b + n`
//! carries the equivalent `λ^±` conditions.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::Weight;
use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// `X_i(m) = Y_{i-1}(m+1)^{-1} Y_i(m)`, boundary variables dropped.
pub fn x_var(rank: usize, i: usize, m: i64) -> Result<Monomial> {
    if i == 0 || i > rank + 1 {
        return Err(Error::range("X index", i, 1, rank as i64 + 1));
    }
    Monomial::from_factors(rank, [(i - 1, m + 1, -1), (i, m, 1)])
}

/// Exponent grid `m_ij`, rows `i = 1..=n+1`, columns `j = 0..n-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct XMatrix {
    pub rank: usize,
    pub m: Vec<Vec<i64>>,
}

impl XMatrix {
    pub fn zeros(rank: usize) -> Self {
        XMatrix {
            rank,
            m: vec![vec![0; rank]; rank + 1],
        }
    }

    /// `m_ij`; zero outside the grid.
    pub fn get(&self, i: usize, j: i64) -> i64 {
        if i == 0 || i > self.rank + 1 || j < 0 || j >= self.rank as i64 {
            return 0;
        }
        self.m[i - 1][j as usize]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.m[i - 1][j] = value;
    }

    pub fn column_sum(&self, j: usize) -> i64 {
        self.m.iter().map(|row| row[j]).sum()
    }

    pub fn column_sums(&self) -> Vec<i64> {
        (0..self.rank).map(|j| self.column_sum(j)).collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.m.iter().flatten().all(|&x| x >= 0)
    }

    /// `m_ij = 0` whenever `i + j >= n + 2`.
    pub fn satisfies_zero_pattern(&self) -> bool {
        (1..=self.rank + 1)
            .all(|i| (0..self.rank).all(|j| i + j < self.rank + 2 || self.m[i - 1][j] == 0))
    }

    /// `∏ X_i(j)^{m_ij}`.
    pub fn to_monomial(&self) -> Monomial {
        let mut out = Monomial::one();
        for i in 1..=self.rank + 1 {
            for j in 0..self.rank {
                let e = self.m[i - 1][j];
                if e != 0 {
                    let x = x_var(self.rank, i, j as i64).expect("index in grid");
                    out *= &x.pow(e);
                }
            }
        }
        out
    }
}

impl fmt::Display for XMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .m
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for row in &self.m {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Solves `M = ∏ X_i(j)^{m_ij}` for the integer grid.
///
/// With `e_{i,m}` the exponent of `Y_i(m)`, `e_{i,m} = m_{i,m} - m_{i+1,m-1}`
/// couples entries on each anti-diagonal `d = i + j` only. Diagonals
/// `d <= n` are solved upward from `m_{d,0} = e_{d,0}`; diagonal `n+1`
/// downward from the absent `m_{1,n} = 0`. Entries may come out negative.
pub fn x_factorize(mono: &Monomial, rank: usize) -> Result<XMatrix> {
    let n = rank as i64;
    for (i, shift, e) in mono.factors() {
        if i > rank {
            return Err(Error::NotRepresentable(format!(
                "Y{i}({shift})^{e} beyond rank {rank}"
            )));
        }
        if shift < 0 || shift > n || i as i64 + shift > n + 1 {
            return Err(Error::NotRepresentable(format!(
                "Y{i}({shift})^{e} lies outside the X-variable range"
            )));
        }
    }
    let e = |i: usize, j: i64| mono.exponent(i, j);

    let mut x = XMatrix::zeros(rank);
    for d in 1..=rank {
        x.set(d, 0, e(d, 0));
        for i in (1..d).rev() {
            let j = d - i;
            let below = x.get(i + 1, j as i64 - 1);
            x.set(i, j, e(i, j as i64) + below);
        }
    }
    // d = n + 1, m_{1,n} = 0
    let mut above = 0;
    for i in 1..=rank {
        let j = rank + 1 - i;
        let value = above - e(i, j as i64);
        x.set(i + 1, j - 1, value);
        above = value;
    }

    if x.to_monomial() != *mono {
        return Err(Error::internal(format!(
            "X-factorization of {mono} does not reproduce it"
        )));
    }
    Ok(x)
}

/// Membership in `ℳ(Λ_k)` through the X-form: exactly one unit entry in each
/// column `j < k`, row indices strictly increasing as `j` runs from `k-1`
/// down to `0`, nothing else.
pub fn is_member_fundamental(mono: &Monomial, rank: usize, k: usize) -> Result<bool> {
    if k == 0 || k > rank {
        return Err(Error::range("k", k, 1, rank as i64));
    }
    let Ok(x) = x_factorize(mono, rank) else {
        return Ok(false);
    };
    let mut prev_row = 0;
    for j in (0..rank).rev() {
        let support: Vec<(usize, i64)> = (1..=rank + 1)
            .map(|i| (i, x.get(i, j as i64)))
            .filter(|&(_, v)| v != 0)
            .collect();
        if j >= k {
            if !support.is_empty() {
                return Ok(false);
            }
            continue;
        }
        match support[..] {
            [(row, 1)] if row > prev_row => prev_row = row,
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// Membership in `ℳ(Λ_k)` read directly off the Y-form
/// `∏_{t=1}^{r} Y_{a_t}(m_{t-1})^{-1} Y_{b_t}(m_t)` with
/// `0 <= a_1 < b_1 < a_2 < ... < b_r <= n+1`, `k = m_0 > ... > m_r = 0` and
/// `a_t + m_{t-1} = b_t + m_t`.
pub fn is_member_fundamental_pairs(mono: &Monomial, rank: usize, k: usize) -> Result<bool> {
    if k == 0 || k > rank {
        return Err(Error::range("k", k, 1, rank as i64));
    }
    // The indices are pairwise distinct, so every exponent is ±1 and the
    // factors sorted by first index alternate -, +, -, +, ...
    let mut by_index: Vec<(usize, i64, i64)> = mono.factors().collect();
    by_index.sort();
    if by_index.windows(2).any(|w| w[0].0 == w[1].0) {
        return Ok(false);
    }
    if by_index.iter().any(|f| f.2.abs() != 1) {
        return Ok(false);
    }
    let mut seq: Vec<(usize, i64, i64)> = Vec::with_capacity(by_index.len() + 2);
    if by_index.first().is_none_or(|f| f.2 == 1) {
        seq.push((0, k as i64, -1));
    }
    seq.extend(by_index);
    if seq.last().is_some_and(|f| f.2 == -1) {
        seq.push((rank + 1, 0, 1));
    }
    if !seq.len().is_multiple_of(2) {
        return Ok(false);
    }
    let mut shifts = Vec::new();
    for (t, pair) in seq.chunks(2).enumerate() {
        let ((a, ma, ea), (b, mb, eb)) = (pair[0], pair[1]);
        if ea != -1 || eb != 1 || a >= b {
            return Ok(false);
        }
        if a as i64 + ma != b as i64 + mb {
            return Ok(false);
        }
        if t == 0 {
            shifts.push(ma);
        } else if *shifts.last().unwrap() != ma {
            return Ok(false);
        }
        shifts.push(mb);
    }
    let strictly_decreasing = shifts.windows(2).all(|w| w[0] > w[1]);
    Ok(shifts.first() == Some(&(k as i64)) && shifts.last() == Some(&0) && strictly_decreasing)
}

/// A weakly decreasing integer sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DecreasingSeq(Vec<i64>);

impl DecreasingSeq {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!(
                "{entries:?} is not weakly decreasing"
            )));
        }
        Ok(DecreasingSeq(entries))
    }

    /// Sorts `entries` into weakly decreasing order.
    pub fn sorted(mut entries: Vec<i64>) -> Self {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        DecreasingSeq(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self ≺ other`: no longer than `other` and entrywise strictly smaller.
    pub fn precedes(&self, other: &DecreasingSeq) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(p, q)| p < q)
    }
}

/// [`DecreasingSeq::precedes`] on raw slices, validating monotonicity.
pub fn precedes(p: &[i64], q: &[i64]) -> Result<bool> {
    let p = DecreasingSeq::new(p.to_vec())?;
    let q = DecreasingSeq::new(q.to_vec())?;
    Ok(p.precedes(&q))
}

/// `Y_a(m)^{-1} Y_b(n)` with `a + m = b + n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YPair {
    pub a: usize,
    pub m: i64,
    pub b: usize,
    pub n: i64,
}

impl YPair {
    pub fn new(a: usize, m: i64, b: usize, n: i64) -> Self {
        YPair { a, m, b, n }
    }
}

impl fmt::Display for YPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y{}({})^-1*Y{}({})", self.a, self.m, self.b, self.n)
    }
}

/// A monomial written as a product of [`YPair`]s.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairDecomposition {
    rank: usize,
    pairs: Vec<YPair>,
}

impl PairDecomposition {
    /// Checks `a + m = b + n` and `0 <= a < b <= rank + 1` for every pair.
    pub fn new(rank: usize, pairs: Vec<YPair>) -> Result<Self> {
        for p in &pairs {
            if p.a as i64 + p.m != p.b as i64 + p.n {
                return Err(Error::domain(format!("pair {p} violates a + m = b + n")));
            }
            if p.a >= p.b || p.b > rank + 1 {
                return Err(Error::domain(format!(
                    "pair {p} violates 0 <= a < b <= {}",
                    rank + 1
                )));
            }
        }
        Ok(PairDecomposition { rank, pairs })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn pairs(&self) -> &[YPair] {
        &self.pairs
    }

    pub fn to_monomial(&self) -> Monomial {
        let factors = self
            .pairs
            .iter()
            .flat_map(|p| [(p.a, p.m, -1), (p.b, p.n, 1)]);
        Monomial::from_factors(self.rank, factors).expect("validated pair indices")
    }

    /// `λ^+(M(k))`: the `b`'s of pairs with `n = k`, decreasing.
    pub fn lambda_plus(&self, k: i64) -> DecreasingSeq {
        DecreasingSeq::sorted(
            self.pairs
                .iter()
                .filter(|p| p.n == k)
                .map(|p| p.b as i64)
                .collect(),
        )
    }

    /// `λ^-(M(k))`: the `a`'s of pairs with `m = k`, decreasing.
    pub fn lambda_minus(&self, k: i64) -> DecreasingSeq {
        DecreasingSeq::sorted(
            self.pairs
                .iter()
                .filter(|p| p.m == k)
                .map(|p| p.a as i64)
                .collect(),
        )
    }
}

impl fmt::Display for PairDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return f.write_str("1");
        }
        for (k, p) in self.pairs.iter().enumerate() {
            if k > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "({p})")?;
        }
        Ok(())
    }
}

fn check_lambda(rank: usize, lambda: &Weight) -> Result<()> {
    if lambda.rank() != rank {
        return Err(Error::domain(format!(
            "weight {lambda} does not have rank {rank}"
        )));
    }
    if !lambda.is_dominant() {
        return Err(Error::domain(format!("weight {lambda} is not dominant")));
    }
    Ok(())
}

/// The `λ^±` conditions on an explicit pair decomposition:
/// `λ^+(M(k)) ≺ λ^-(M(k))` for `k = 1..n-1`, and
/// `|λ^-(M(k))| - |λ^+(M(k))| = a_k` for `k = 1..n`.
pub fn is_member_theorem(decomposition: &PairDecomposition, lambda: &Weight) -> Result<bool> {
    let rank = decomposition.rank();
    check_lambda(rank, lambda)?;
    for k in 1..rank as i64 {
        let plus = decomposition.lambda_plus(k);
        let minus = decomposition.lambda_minus(k);
        if !plus.precedes(&minus) {
            return Ok(false);
        }
    }
    for k in 1..=rank {
        let plus = decomposition.lambda_plus(k as i64);
        let minus = decomposition.lambda_minus(k as i64);
        if minus.len() as i64 - plus.len() as i64 != lambda.coeff(k) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Canonical pair form of a nonnegative grid: on each anti-diagonal `d`,
/// the entries `m_{i,d-i}` are cut into maximal runs of consecutive rows
/// `a+1..=b`, each contributing `X_{a+1}(d-a-1) ⋯ X_b(d-b) = Y_a(d-a)^{-1} Y_b(d-b)`.
pub fn pair_decomposition(x: &XMatrix) -> Result<PairDecomposition> {
    if !x.is_nonnegative() {
        return Err(Error::domain("pair decomposition needs a nonnegative grid"));
    }
    let rank = x.rank;
    let mut pairs = Vec::new();
    for d in 1..=2 * rank {
        let mut open: Vec<usize> = Vec::new();
        for i in 1..=rank + 2 {
            let count = x.get(i, d as i64 - i as i64).max(0) as usize;
            while open.len() < count {
                open.push(i - 1);
            }
            while open.len() > count {
                let a = open.pop().unwrap();
                let b = i - 1;
                pairs.push(YPair::new(a, (d - a) as i64, b, d as i64 - b as i64));
            }
        }
    }
    pairs.sort();
    PairDecomposition::new(rank, pairs)
}

/// Grid conditions characterizing `ℳ(λ)`: nonnegativity, the zero pattern,
/// column sums `Σ_i m_ij = a_{j+1} + ... + a_n`, and
/// `Σ_{k>=i} m_{k,j} <= Σ_{k>=i+1} m_{k,j-1}`.
pub fn matrix_is_member(x: &XMatrix, lambda: &Weight) -> Result<bool> {
    check_lambda(x.rank, lambda)?;
    let rank = x.rank;
    if !x.is_nonnegative() || !x.satisfies_zero_pattern() {
        return Ok(false);
    }
    let mu = lambda.partition();
    if x.column_sums() != mu {
        return Ok(false);
    }
    for j in 1..rank {
        for i in 1..=rank + 1 {
            let upper: i64 = (i..=rank + 1).map(|k| x.get(k, j as i64)).sum();
            let lower: i64 = (i + 1..=rank + 1).map(|k| x.get(k, j as i64 - 1)).sum();
            if upper > lower {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `mono` lies in `ℳ(λ)`, the component of `Y_1(0)^{a_1} ⋯ Y_n(0)^{a_n}`.
pub fn is_member(mono: &Monomial, lambda: &Weight) -> Result<bool> {
    let rank = lambda.rank();
    check_lambda(rank, lambda)?;
    match x_factorize(mono, rank) {
        Ok(x) => matrix_is_member(&x, lambda),
        Err(Error::NotRepresentable(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Splits a member into one factor from `ℳ(Λ_k)` per column of length `k`
/// of its reverse tableau, rightmost column first. Each factor is
/// `X_{i_1}(k-1) ⋯ X_{i_k}(0)` with `i_1 < ... < i_k`.
pub fn column_factors(x: &XMatrix) -> Result<Vec<(usize, Monomial)>> {
    if !x.is_nonnegative() {
        return Err(Error::domain("column factors need a nonnegative grid"));
    }
    let rank = x.rank;
    // rows[j] = entries of row j+1 counted from the bottom, increasing
    let rows: Vec<Vec<usize>> = (0..rank)
        .map(|j| {
            (1..=rank + 1)
                .flat_map(|i| std::iter::repeat_n(i, x.get(i, j as i64) as usize))
                .collect()
        })
        .collect();
    let width = rows.first().map_or(0, Vec::len);
    let mut out = Vec::with_capacity(width);
    for c in 0..width {
        let mut factors = BTreeMap::new();
        let mut len = 0;
        for (j, row) in rows.iter().enumerate() {
            if row.len() <= c {
                break;
            }
            *factors.entry((row[row.len() - 1 - c], j)).or_insert(0) += 1;
            len += 1;
        }
        let mut mono = Monomial::one();
        for (&(i, j), &e) in &factors {
            mono *= &x_var(rank, i, j as i64)?.pow(e);
        }
        out.push((len, mono));
    }
    Ok(out)
}

/// Every nonnegative grid with the zero pattern and the column sums of `λ`,
/// in lexicographic order. A superset of the members of `ℳ(λ)`.
pub fn matrices_with_column_sums(lambda: &Weight) -> Vec<XMatrix> {
    let rank = lambda.rank();
    let mu = lambda.partition();

    fn compositions(total: i64, parts: usize) -> Vec<Vec<i64>> {
        if parts == 1 {
            return vec![vec![total]];
        }
        (0..=total)
            .flat_map(|first| {
                compositions(total - first, parts - 1)
                    .into_iter()
                    .map(move |mut rest| {
                        rest.insert(0, first);
                        rest
                    })
            })
            .collect()
    }

    let columns: Vec<Vec<Vec<i64>>> = (0..rank)
        .map(|j| compositions(mu[j], rank + 1 - j))
        .collect();
    let mut out = vec![XMatrix::zeros(rank)];
    for (j, options) in columns.iter().enumerate() {
        out = out
            .into_iter()
            .flat_map(|x| {
                options.iter().map(move |col| {
                    let mut x = x.clone();
                    for (r, &v) in col.iter().enumerate() {
                        x.set(r + 1, j, v);
                    }
                    x
                })
            })
            .collect();
    }
    out
}
