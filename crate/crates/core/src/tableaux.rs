//! Semistandard tableaux `T(λ)` and reverse semistandard tableaux `S(λ)`
//! with crystal operators from the tensor rule on a reading word.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::Weight;
use crate::crystal::{
    letter_weight, tensor_e_position, tensor_f_position, tensor_statistics, Crystal,
};
use crate::error::{Error, Result};

/// Row lengths `μ_1 >= μ_2 >= ... > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!(
                "row lengths {rows:?} are not weakly decreasing"
            )));
        }
        Ok(Shape(rows))
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn height(&self) -> usize {
        self.0.len()
    }

    pub fn width(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn boxes(&self) -> usize {
        self.0.iter().sum()
    }

    /// Column lengths, longest first.
    pub fn columns(&self) -> Vec<usize> {
        (0..self.width())
            .map(|c| self.0.iter().filter(|&&len| len > c).count())
            .collect()
    }
}

/// `μ_i = a_i + a_{i+1} + ... + a_n`.
pub fn shape_of(lambda: &Weight) -> Result<Shape> {
    if !lambda.is_dominant() {
        return Err(Error::domain(format!("weight {lambda} is not dominant")));
    }
    Shape::new(lambda.partition().into_iter().map(|m| m as usize).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Rows top-aligned and left-justified, stored top row first.
    Standard,
    /// Rows bottom-aligned and right-justified, stored bottom row first.
    Reverse,
}

/// Order in which boxes are read into `b_1 ⊗ b_2 ⊗ ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ReadingOrder {
    /// Columns right to left, each top to bottom.
    #[default]
    Columns,
    /// Rows top to bottom, each right to left.
    Rows,
}

#[derive(Deserialize)]
struct RawTableau {
    orientation: Orientation,
    rows: Vec<Vec<usize>>,
}

impl From<RawTableau> for Tableau {
    fn from(raw: RawTableau) -> Self {
        Tableau::new(raw.orientation, raw.rows)
    }
}

/// A filling of a (possibly reverse) Young diagram with letters `1..=n+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "RawTableau")]
pub struct Tableau {
    orientation: Orientation,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Rows in storage order; trailing empty rows are dropped.
    pub fn new(orientation: Orientation, mut rows: Vec<Vec<usize>>) -> Self {
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        Tableau { orientation, rows }
    }

    pub fn empty(orientation: Orientation) -> Self {
        Tableau {
            orientation,
            rows: Vec::new(),
        }
    }

    pub fn standard(rows: Vec<Vec<usize>>) -> Self {
        Tableau::new(Orientation::Standard, rows)
    }

    pub fn reverse(rows: Vec<Vec<usize>>) -> Self {
        Tableau::new(Orientation::Reverse, rows)
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Rows in storage order: top first for standard, bottom first for reverse.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Result<Shape> {
        Shape::new(self.rows.iter().map(Vec::len).collect())
    }

    pub fn num_boxes(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Columns, each listed top to bottom. Standard tableaux list them left
    /// to right, reverse tableaux right to left; longest first either way.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|c| match self.orientation {
                Orientation::Standard => self
                    .rows
                    .iter()
                    .take_while(|r| r.len() > c)
                    .map(|r| r[c])
                    .collect(),
                Orientation::Reverse => {
                    let mut col: Vec<usize> = self
                        .rows
                        .iter()
                        .take_while(|r| r.len() > c)
                        .map(|r| r[r.len() - 1 - c])
                        .collect();
                    col.reverse();
                    col
                }
            })
            .collect()
    }

    /// Storage coordinates `(row, index)` in reading order.
    fn reading_positions(&self, order: ReadingOrder) -> Vec<(usize, usize)> {
        let width = self.rows.first().map_or(0, Vec::len);
        let height = self.rows.len();
        let mut out = Vec::with_capacity(self.num_boxes());
        match (self.orientation, order) {
            (Orientation::Standard, ReadingOrder::Columns) => {
                for c in (0..width).rev() {
                    out.extend(
                        (0..height)
                            .take_while(|&r| self.rows[r].len() > c)
                            .map(|r| (r, c)),
                    );
                }
            }
            (Orientation::Standard, ReadingOrder::Rows) => {
                for (r, row) in self.rows.iter().enumerate() {
                    out.extend((0..row.len()).rev().map(|k| (r, k)));
                }
            }
            (Orientation::Reverse, ReadingOrder::Columns) => {
                for c in 0..width {
                    let depth = (0..height).take_while(|&r| self.rows[r].len() > c).count();
                    out.extend((0..depth).rev().map(|r| (r, self.rows[r].len() - 1 - c)));
                }
            }
            (Orientation::Reverse, ReadingOrder::Rows) => {
                for (r, row) in self.rows.iter().enumerate().rev() {
                    out.extend((0..row.len()).rev().map(|k| (r, k)));
                }
            }
        }
        out
    }

    pub fn reading_word(&self, order: ReadingOrder) -> Vec<usize> {
        self.reading_positions(order)
            .into_iter()
            .map(|(r, k)| self.rows[r][k])
            .collect()
    }

    /// Checks the row/column monotonicity for this orientation. Letters
    /// outside `1..=rank+1` or a non-diagram row profile are domain errors.
    pub fn is_semistandard(&self, rank: usize) -> Result<bool> {
        self.shape()?;
        if let Some(&bad) = self
            .rows
            .iter()
            .flatten()
            .find(|&&x| x == 0 || x > rank + 1)
        {
            return Err(Error::range("tableau entry", bad, 1, rank as i64 + 1));
        }
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .columns()
            .iter()
            .all(|c| c.windows(2).all(|w| w[0] < w[1]));
        Ok(rows_ok && cols_ok)
    }

    fn require_semistandard(&self, rank: usize) -> Result<()> {
        if self.is_semistandard(rank)? {
            Ok(())
        } else {
            Err(Error::domain(format!("{self} is not semistandard")))
        }
    }

    /// Box-drawn rendering, top row first.
    pub fn render_ascii(&self) -> String {
        if self.rows.is_empty() {
            return "(empty)\n".to_owned();
        }
        let cell = self
            .rows
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1)
            + 2;
        let width = self.rows.iter().map(Vec::len).max().unwrap_or(0);
        let top_down: Vec<&Vec<usize>> = match self.orientation {
            Orientation::Standard => self.rows.iter().collect(),
            Orientation::Reverse => self.rows.iter().rev().collect(),
        };
        let offset = |len: usize| match self.orientation {
            Orientation::Standard => 0,
            Orientation::Reverse => width - len,
        };
        let border = |len: usize| {
            let mut s = " ".repeat(offset(len) * (cell + 1));
            for _ in 0..len {
                s.push('+');
                s.push_str(&"-".repeat(cell));
            }
            s.push_str("+\n");
            s
        };
        let mut out = String::new();
        let mut prev = 0;
        for row in &top_down {
            out.push_str(&border(prev.max(row.len())));
            out.push_str(&" ".repeat(offset(row.len()) * (cell + 1)));
            for x in row.iter() {
                out.push_str(&format!("|{x:^cell$}"));
            }
            out.push_str("|\n");
            prev = row.len();
        }
        out.push_str(&border(prev));
        out
    }
}

/// Compact label listing rows top to bottom, e.g. `[1124|223|4]`.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.rows.iter().flatten().any(|&x| x > 9);
        let sep = if wide { "," } else { "" };
        let top_down: Vec<&Vec<usize>> = match self.orientation {
            Orientation::Standard => self.rows.iter().collect(),
            Orientation::Reverse => self.rows.iter().rev().collect(),
        };
        f.write_str("[")?;
        for (k, row) in top_down.iter().enumerate() {
            if k > 0 {
                f.write_str("|")?;
            }
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            f.write_str(&cells.join(sep))?;
        }
        f.write_str("]")
    }
}

fn signature_stats(word: &[usize], i: usize) -> Vec<(i64, i64)> {
    word.iter()
        .map(|&k| ((k == i) as i64, (k == i + 1) as i64))
        .collect()
}

fn apply_at(
    t: &Tableau,
    rank: usize,
    order: ReadingOrder,
    i: usize,
    raise: bool,
) -> Result<Option<Tableau>> {
    if i == 0 || i > rank {
        return Err(Error::range("color", i, 1, rank as i64));
    }
    t.require_semistandard(rank)?;
    let positions = t.reading_positions(order);
    let word: Vec<usize> = positions.iter().map(|&(r, k)| t.rows[r][k]).collect();
    let stats = signature_stats(&word, i);
    let pos = if raise {
        tensor_e_position(&stats)
    } else {
        tensor_f_position(&stats)
    };
    let Some(pos) = pos else {
        return Ok(None);
    };
    let (r, k) = positions[pos];
    let mut out = t.clone();
    out.rows[r][k] = if raise { i } else { i + 1 };
    if !out.is_semistandard(rank)? {
        return Err(Error::internal(format!(
            "{} of {t} under {order:?} reading gave non-semistandard {out}",
            if raise { "e" } else { "f" },
        )));
    }
    Ok(Some(out))
}

/// `f̃_i` by the tensor rule on the reading word.
pub fn tableau_f(
    t: &Tableau,
    rank: usize,
    order: ReadingOrder,
    i: usize,
) -> Result<Option<Tableau>> {
    apply_at(t, rank, order, i, false)
}

/// `ẽ_i` by the tensor rule on the reading word.
pub fn tableau_e(
    t: &Tableau,
    rank: usize,
    order: ReadingOrder,
    i: usize,
) -> Result<Option<Tableau>> {
    apply_at(t, rank, order, i, true)
}

/// Sum of letter weights `Λ_k - Λ_{k-1}`.
pub fn weight_of_tableau(t: &Tableau, rank: usize) -> Weight {
    let mut w = Weight::zero(rank);
    for &k in t.rows.iter().flatten() {
        w += &letter_weight(rank, k);
    }
    w
}

/// Row `i` filled with `i`.
pub fn highest_tableau(lambda: &Weight) -> Result<Tableau> {
    let shape = shape_of(lambda)?;
    let rows = shape
        .rows()
        .iter()
        .enumerate()
        .map(|(r, &len)| vec![r + 1; len])
        .collect();
    Ok(Tableau::standard(rows))
}

/// Row `j+1` from the bottom holds `i` with multiplicity `a_{i+j}`.
pub fn highest_reverse_tableau(lambda: &Weight) -> Result<Tableau> {
    shape_of(lambda)?;
    let rank = lambda.rank();
    let rows = (0..rank)
        .map(|j| {
            (1..=rank - j)
                .flat_map(|i| std::iter::repeat_n(i, lambda.coeff(i + j) as usize))
                .collect()
        })
        .collect();
    Ok(Tableau::reverse(rows))
}

/// Tableaux of one orientation with crystal structure from a reading order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableauCrystal {
    rank: usize,
    orientation: Orientation,
    order: ReadingOrder,
}

impl TableauCrystal {
    pub fn new(rank: usize, orientation: Orientation) -> Self {
        Self::with_order(rank, orientation, ReadingOrder::default())
    }

    pub fn with_order(rank: usize, orientation: Orientation, order: ReadingOrder) -> Self {
        TableauCrystal {
            rank,
            orientation,
            order,
        }
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn order(&self) -> ReadingOrder {
        self.order
    }

    pub fn highest(&self, lambda: &Weight) -> Result<Tableau> {
        if lambda.rank() != self.rank {
            return Err(Error::domain(format!(
                "weight {lambda} does not have rank {}",
                self.rank
            )));
        }
        match self.orientation {
            Orientation::Standard => highest_tableau(lambda),
            Orientation::Reverse => highest_reverse_tableau(lambda),
        }
    }

    fn stats(&self, t: &Tableau, i: usize) -> Vec<(i64, i64)> {
        signature_stats(&t.reading_word(self.order), i)
    }
}

impl Crystal for TableauCrystal {
    type Elem = Tableau;

    fn rank(&self) -> usize {
        self.rank
    }

    fn weight(&self, t: &Tableau) -> Weight {
        weight_of_tableau(t, self.rank)
    }

    fn epsilon(&self, t: &Tableau, i: usize) -> i64 {
        tensor_statistics(&self.stats(t, i)).0
    }

    fn phi(&self, t: &Tableau, i: usize) -> i64 {
        tensor_statistics(&self.stats(t, i)).1
    }

    fn e_tilde(&self, t: &Tableau, i: usize) -> Option<Tableau> {
        tableau_e(t, self.rank, self.order, i).unwrap_or_else(|e| panic!("{e}"))
    }

    fn f_tilde(&self, t: &Tableau, i: usize) -> Option<Tableau> {
        tableau_f(t, self.rank, self.order, i).unwrap_or_else(|e| panic!("{e}"))
    }
}

/// Every semistandard tableau of `shape` over `1..=rank+1`, by backtracking.
pub fn enumerate_semistandard(
    shape: &Shape,
    rank: usize,
    orientation: Orientation,
) -> Vec<Tableau> {
    let rows = shape.rows();
    let top = rank + 1;
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&len| vec![0; len]).collect();
    let mut out = Vec::new();

    fn fill(
        grid: &mut Vec<Vec<usize>>,
        cell: usize,
        cells: &[(usize, usize)],
        top: usize,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        let Some(&(r, c)) = cells.get(cell) else {
            out.push(grid.clone());
            return;
        };
        let left = if c > 0 { grid[r][c - 1] } else { 1 };
        let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        // room left below this box for a strictly increasing column
        let below = (r + 1..grid.len())
            .take_while(|&s| grid[s].len() > c)
            .count();
        for v in left.max(above)..=top.saturating_sub(below) {
            grid[r][c] = v;
            fill(grid, cell + 1, cells, top, out);
        }
        grid[r][c] = 0;
    }

    let cells: Vec<(usize, usize)> = rows
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut fillings = Vec::new();
    fill(&mut grid, 0, &cells, top, &mut fillings);
    for g in fillings {
        out.push(match orientation {
            Orientation::Standard => Tableau::standard(g),
            // rotate by 180 degrees and complement x -> n+2-x
            Orientation::Reverse => Tableau::reverse(
                g.into_iter()
                    .map(|row| row.into_iter().rev().map(|x| top + 1 - x).collect())
                    .collect(),
            ),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::cartan::CartanDatum;
    use crate::crystal::{generate, GenerateOptions};

    pub(crate) fn sample_reverse() -> Tableau {
        Tableau::reverse(vec![vec![2, 2, 4, 4], vec![1, 1, 3], vec![2]])
    }

    pub(crate) fn sample_standard() -> Tableau {
        Tableau::standard(vec![vec![1, 1, 2, 4], vec![2, 2, 3], vec![4]])
    }

    #[test]
    fn shapes() {
        assert_eq!(
            shape_of(&Weight::new(vec![1, 2, 1])).unwrap().rows(),
            &[4, 3, 1]
        );
        assert_eq!(
            shape_of(&Weight::new(vec![0, 1, 0])).unwrap().rows(),
            &[1, 1]
        );
        assert!(shape_of(&Weight::zero(3)).unwrap().rows().is_empty());
        assert!(shape_of(&Weight::new(vec![1, -1])).is_err());
        assert_eq!(
            Shape::new(vec![4, 3, 1]).unwrap().columns(),
            vec![3, 2, 2, 1]
        );
        assert!(Shape::new(vec![1, 2]).is_err());
    }

    #[test]
    fn semistandard_checks() {
        assert!(sample_reverse().is_semistandard(3).unwrap());
        assert!(sample_standard().is_semistandard(3).unwrap());
        assert!(!Tableau::standard(vec![vec![1], vec![1]])
            .is_semistandard(2)
            .unwrap());
        assert!(!Tableau::reverse(vec![vec![1], vec![1]])
            .is_semistandard(2)
            .unwrap());
        assert!(!Tableau::standard(vec![vec![2, 1]])
            .is_semistandard(2)
            .unwrap());
        assert!(matches!(
            Tableau::standard(vec![vec![1], vec![1, 2]]).is_semistandard(2),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            Tableau::standard(vec![vec![4]]).is_semistandard(2),
            Err(Error::Range { .. })
        ));
        // the reverse tableau is right-justified: 1 sits above the 4 on its right
        assert!(Tableau::reverse(vec![vec![2, 4], vec![1]])
            .is_semistandard(3)
            .unwrap());
        assert!(!Tableau::reverse(vec![vec![4, 2], vec![1]])
            .is_semistandard(3)
            .unwrap());
        assert!(!Tableau::reverse(vec![vec![3, 4], vec![4]])
            .is_semistandard(3)
            .unwrap());
    }

    #[test]
    fn columns_and_reading_words() {
        let s = sample_reverse();
        assert_eq!(
            s.columns(),
            vec![vec![2, 3, 4], vec![1, 4], vec![1, 2], vec![2]]
        );
        assert_eq!(
            s.reading_word(ReadingOrder::Columns),
            vec![2, 3, 4, 1, 4, 1, 2, 2]
        );
        assert_eq!(
            s.reading_word(ReadingOrder::Rows),
            vec![2, 3, 1, 1, 4, 4, 2, 2]
        );

        let t = sample_standard();
        assert_eq!(
            t.columns(),
            vec![vec![1, 2, 4], vec![1, 2], vec![2, 3], vec![4]]
        );
        assert_eq!(
            t.reading_word(ReadingOrder::Columns),
            vec![4, 2, 3, 1, 2, 1, 2, 4]
        );
        assert_eq!(
            t.reading_word(ReadingOrder::Rows),
            vec![4, 2, 1, 1, 3, 2, 2, 4]
        );

        let single = Tableau::standard(vec![vec![3]]);
        assert_eq!(single.reading_word(ReadingOrder::Columns), vec![3]);
    }

    #[test]
    fn weights() {
        let a2 = Tableau::standard(vec![vec![2]]);
        assert_eq!(weight_of_tableau(&a2, 2), Weight::new(vec![-1, 1]));
        assert_eq!(
            weight_of_tableau(&sample_standard(), 3),
            Weight::new(vec![-1, 2, -1])
        );
        for lambda in [vec![1, 2, 1], vec![0, 0, 2], vec![3, 0, 0]] {
            let lambda = Weight::new(lambda);
            assert_eq!(
                weight_of_tableau(&highest_tableau(&lambda).unwrap(), 3),
                lambda
            );
            assert_eq!(
                weight_of_tableau(&highest_reverse_tableau(&lambda).unwrap(), 3),
                lambda
            );
        }
    }

    #[test]
    fn highest_tableaux_are_killed_by_every_raising_operator() {
        let cartan = CartanDatum::new(3).unwrap();
        for lambda in cartan.dominant_weights_up_to(3) {
            for order in [ReadingOrder::Columns, ReadingOrder::Rows] {
                for orientation in [Orientation::Standard, Orientation::Reverse] {
                    let c = TableauCrystal::with_order(3, orientation, order);
                    let t = c.highest(&lambda).unwrap();
                    assert!(t.is_semistandard(3).unwrap());
                    assert!(c.is_highest(&t), "{t} under {order:?}");
                }
            }
        }
        assert_eq!(
            highest_reverse_tableau(&Weight::new(vec![1, 2, 1])).unwrap(),
            Tableau::reverse(vec![vec![1, 2, 2, 3], vec![1, 1, 2], vec![1]])
        );
    }

    #[test]
    fn operators_on_small_cases() {
        let c = TableauCrystal::new(2, Orientation::Standard);
        let one = Tableau::standard(vec![vec![1]]);
        assert_eq!(c.f_tilde(&one, 1), Some(Tableau::standard(vec![vec![2]])));
        assert_eq!(c.f_tilde(&Tableau::standard(vec![vec![3]]), 1), None);
        assert_eq!(c.f_tilde(&Tableau::standard(vec![vec![3]]), 2), None);
        assert!(matches!(
            tableau_f(&one, 2, ReadingOrder::Columns, 3),
            Err(Error::Range { .. })
        ));
        assert!(matches!(
            tableau_f(
                &Tableau::standard(vec![vec![2, 1]]),
                2,
                ReadingOrder::Columns,
                1
            ),
            Err(Error::Domain(_))
        ));

        let g = generate(
            &c,
            Tableau::standard(vec![vec![1, 1], vec![2]]),
            GenerateOptions::default(),
        )
        .unwrap();
        assert_eq!(g.len(), 8);
    }

    #[test]
    fn generated_graphs_stay_semistandard_and_match_brute_force() {
        for rank in 1..=3 {
            let cartan = CartanDatum::new(rank).unwrap();
            for lambda in cartan.dominant_weights_up_to(3) {
                let shape = shape_of(&lambda).unwrap();
                for orientation in [Orientation::Standard, Orientation::Reverse] {
                    let c = TableauCrystal::new(rank, orientation);
                    let g = generate(&c, c.highest(&lambda).unwrap(), GenerateOptions::default())
                        .unwrap();
                    let all: HashSet<Tableau> = enumerate_semistandard(&shape, rank, orientation)
                        .into_iter()
                        .collect();
                    assert_eq!(g.len() as u128, cartan.weyl_dim(&lambda).unwrap());
                    let nodes: HashSet<Tableau> = g.nodes().iter().cloned().collect();
                    assert_eq!(nodes, all, "{lambda} {orientation:?}");
                    for t in g.nodes() {
                        for i in 1..=rank {
                            let pairing = c.weight(t).pairing(i).unwrap();
                            assert_eq!(c.phi(t, i) - c.epsilon(t, i), pairing);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn brute_force_is_semistandard() {
        let shape = Shape::new(vec![3, 2, 1]).unwrap();
        for orientation in [Orientation::Standard, Orientation::Reverse] {
            let all = enumerate_semistandard(&shape, 3, orientation);
            assert_eq!(all.len(), 64);
            assert!(all.iter().all(|t| t.is_semistandard(3).unwrap()));
        }
    }

    #[test]
    fn json_and_rendering() {
        let s = sample_reverse();
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(
            text,
            r#"{"orientation":"reverse","rows":[[2,2,4,4],[1,1,3],[2]]}"#
        );
        let back: Tableau = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        let padded: Tableau =
            serde_json::from_str(r#"{"orientation":"standard","rows":[[1],[]]}"#).unwrap();
        assert_eq!(padded, Tableau::standard(vec![vec![1]]));

        assert_eq!(s.to_string(), "[2|113|2244]");
        assert_eq!(sample_standard().to_string(), "[1124|223|4]");
        let expected = [
            "            +---+",
            "            | 2 |",
            "    +---+---+---+",
            "    | 1 | 1 | 3 |",
            "+---+---+---+---+",
            "| 2 | 2 | 4 | 4 |",
            "+---+---+---+---+",
        ]
        .map(|l| format!("{l}\n"))
        .concat();
        assert_eq!(s.render_ascii(), expected);
        assert_eq!(
            Tableau::empty(Orientation::Standard).render_ascii(),
            "(empty)\n"
        );
    }
}
