//! Explicit crystal isomorphisms `ℳ(λ) → S(λ) → T(λ)`.
//!
//! `ψ` reads the X-exponent grid of a member row by row into a reverse
//! tableau. `φ` column-inserts the columns of a reverse tableau, rightmost
//! first and each from the top, into a standard tableau; its inverse removes
//! boxes right to left, bottom to top, by reverse column bumping.

use crate::cartan::Weight;
use crate::error::{Error, Result};
use crate::membership::{is_member, x_factorize, x_var};
use crate::monomial::Monomial;
use crate::tableaux::{shape_of, Orientation, Tableau};

/// Row `j+1` from the bottom holds `i` with multiplicity `m_ij`.
pub fn psi(mono: &Monomial, lambda: &Weight) -> Result<Tableau> {
    if !is_member(mono, lambda)? {
        return Err(Error::domain(format!(
            "{mono} is not in the component of {lambda}"
        )));
    }
    let rank = lambda.rank();
    let x = x_factorize(mono, rank)?;
    let rows = (0..rank as i64)
        .map(|j| {
            (1..=rank + 1)
                .flat_map(|i| std::iter::repeat_n(i, x.get(i, j) as usize))
                .collect()
        })
        .collect();
    Ok(Tableau::reverse(rows))
}

/// `∏ X_i(j)` over entries `i` in row `j+1` from the bottom.
pub fn psi_inverse(s: &Tableau, rank: usize) -> Result<Monomial> {
    require(s, rank, Orientation::Reverse)?;
    let mut out = Monomial::one();
    for (j, row) in s.rows().iter().enumerate() {
        for &i in row {
            out *= &x_var(rank, i, j as i64)?;
        }
    }
    Ok(out)
}

fn require(t: &Tableau, rank: usize, orientation: Orientation) -> Result<()> {
    if t.orientation() != orientation {
        return Err(Error::domain(format!(
            "{t} is not a {orientation:?} tableau"
        )));
    }
    if !t.is_semistandard(rank)? {
        return Err(Error::domain(format!("{t} is not semistandard")));
    }
    Ok(())
}

/// Schensted column insertion: `x` replaces the smallest entry `>= x` of a
/// column and the displaced entry moves on to the next column.
fn column_insert(cols: &mut Vec<Vec<usize>>, mut x: usize) {
    for col in cols.iter_mut() {
        match col.iter().position(|&y| y >= x) {
            Some(k) => x = std::mem::replace(&mut col[k], x),
            None => {
                col.push(x);
                return;
            }
        }
    }
    cols.push(vec![x]);
}

fn from_columns(cols: &[Vec<usize>]) -> Tableau {
    let height = cols.first().map_or(0, Vec::len);
    let rows = (0..height)
        .map(|r| {
            cols.iter()
                .take_while(|c| c.len() > r)
                .map(|c| c[r])
                .collect()
        })
        .collect();
    Tableau::standard(rows)
}

/// The letters of a reverse tableau in insertion order: columns right to
/// left, each top to bottom.
pub fn column_word(s: &Tableau) -> Vec<usize> {
    s.columns().concat()
}

/// Column-inserts the columns of `S`, rightmost first, into an empty tableau.
pub fn varphi(s: &Tableau, rank: usize) -> Result<Tableau> {
    require(s, rank, Orientation::Reverse)?;
    let mut cols: Vec<Vec<usize>> = Vec::new();
    for x in column_word(s) {
        column_insert(&mut cols, x);
    }
    let t = from_columns(&cols);
    if t.shape()? != s.shape()? || !t.is_semistandard(rank)? {
        return Err(Error::internal(format!("insertion of {s} produced {t}")));
    }
    Ok(t)
}

/// Inverse of column insertion on the box at the bottom of column `c`:
/// the entry moves left, replacing the largest entry `<=` it in each
/// column, and whatever leaves the first column is returned.
fn remove_box(cols: &mut Vec<Vec<usize>>, c: usize) -> usize {
    let mut y = cols[c].pop().expect("nonempty column");
    if cols[c].is_empty() {
        cols.pop();
    }
    for col in cols[..c].iter_mut().rev() {
        let k = col
            .iter()
            .rposition(|&x| x <= y)
            .expect("a semistandard column always admits reverse bumping");
        y = std::mem::replace(&mut col[k], y);
    }
    y
}

/// The letters recovered by reverse bumping `T`, in the order they were
/// inserted. Boxes are removed right to left, bottom to top.
pub fn reverse_bumping_sequence(t: &Tableau, rank: usize) -> Result<Vec<usize>> {
    require(t, rank, Orientation::Standard)?;
    let mut cols = t.columns();
    let mut extracted = Vec::with_capacity(t.num_boxes());
    while let Some(c) = cols.len().checked_sub(1) {
        extracted.push(remove_box(&mut cols, c));
    }
    extracted.reverse();
    Ok(extracted)
}

/// Rebuilds the reverse tableau whose column insertion gives `T`.
pub fn varphi_inverse(t: &Tableau, rank: usize) -> Result<Tableau> {
    let word = reverse_bumping_sequence(t, rank)?;
    let lengths = t.shape()?.columns();
    let mut cols: Vec<&[usize]> = Vec::with_capacity(lengths.len());
    let mut rest = &word[..];
    for len in lengths {
        let (col, tail) = rest.split_at(len);
        if col.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::internal(format!(
                "reverse bumping of {t} gave column {col:?}"
            )));
        }
        cols.push(col);
        rest = tail;
    }
    // cols[c] is the c-th column from the right, listed top to bottom
    let height = cols.first().map_or(0, |c| c.len());
    let rows = (0..height)
        .map(|j| {
            let mut row: Vec<usize> = cols
                .iter()
                .take_while(|c| c.len() > j)
                .map(|c| c[c.len() - 1 - j])
                .collect();
            row.reverse();
            row
        })
        .collect();
    let s = Tableau::reverse(rows);
    if !s.is_semistandard(rank)? {
        return Err(Error::internal(format!("reverse bumping of {t} gave {s}")));
    }
    Ok(s)
}

/// `φ ∘ ψ : ℳ(λ) → T(λ)`.
pub fn phi_map(mono: &Monomial, lambda: &Weight) -> Result<Tableau> {
    varphi(&psi(mono, lambda)?, lambda.rank())
}

/// Checks that a standard or reverse tableau has the shape of `λ`.
pub fn has_shape(t: &Tableau, lambda: &Weight) -> Result<bool> {
    Ok(t.shape()? == shape_of(lambda)?)
}
