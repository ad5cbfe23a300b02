//! Partition shapes and their 0-1 fillings.
//!
//! Shapes are bottom-justified: column `i` (counted from the left, starting
//! at 1) has `λ_i` cells, and the column heights are weakly increasing from
//! left to right. Cells are addressed `(column, row)` with rows counted from the
//! bottom. A filling stores, for every column, the set of rows holding a dot.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::objects::permutation::split_at_cuts;
use crate::posset::{PosSet, MAX_ELEMENT};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct PartitionShape {
    columns: Vec<usize>,
}

impl TryFrom<Vec<usize>> for PartitionShape {
    type Error = Error;
    fn try_from(columns: Vec<usize>) -> Result<Self> {
        PartitionShape::new(columns)
    }
}

impl From<PartitionShape> for Vec<usize> {
    fn from(s: PartitionShape) -> Self {
        s.columns
    }
}

impl PartitionShape {
    pub fn new(columns: Vec<usize>) -> Result<Self> {
        if columns.is_empty() {
            return Err(Error::InvalidShape("a shape needs at least one column".into()));
        }
        if columns[0] == 0 {
            return Err(Error::InvalidShape("column heights must be positive".into()));
        }
        if columns.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidShape(format!(
                "column heights {columns:?} are not weakly increasing"
            )));
        }
        let tallest = *columns.last().unwrap();
        if columns.len() > MAX_ELEMENT || tallest > MAX_ELEMENT {
            return Err(Error::TooLarge {
                size: columns.len().max(tallest),
                max: MAX_ELEMENT,
            });
        }
        Ok(PartitionShape { columns })
    }

    /// The staircase `(1, 2, ..., len)`.
    pub fn staircase(len: usize) -> Result<Self> {
        Self::new((1..=len).collect())
    }

    pub fn square(len: usize) -> Result<Self> {
        Self::new(vec![len; len])
    }

    /// The flat shape of length `len` whose lazy set is `lazy`.
    pub fn flat(len: usize, lazy: PosSet) -> Result<Self> {
        if lazy.contains(1) || lazy.last().is_some_and(|m| m > len) {
            return Err(Error::InvalidShape(format!(
                "lazy set {lazy:?} is not a subset of 2..={len}"
            )));
        }
        let mut columns = Vec::with_capacity(len);
        let mut h = 0;
        for i in 1..=len {
            if !lazy.contains(i) {
                h += 1;
            }
            columns.push(h);
        }
        Self::new(columns)
    }

    /// Number of columns, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn heights(&self) -> &[usize] {
        &self.columns
    }

    /// `λ_i` for one-based `i`.
    pub fn height(&self, i: usize) -> usize {
        self.columns[i - 1]
    }

    /// Number of rows, i.e. the height of the last column.
    pub fn num_rows(&self) -> usize {
        *self.columns.last().unwrap()
    }

    /// Number of cells in row `j`.
    pub fn row_length(&self, j: usize) -> usize {
        self.columns.iter().filter(|&&h| h >= j).count()
    }

    /// Leftmost column reaching row `j`.
    pub fn row_start(&self, j: usize) -> usize {
        self.len() + 1 - self.row_length(j)
    }

    pub fn cells(&self) -> usize {
        self.columns.iter().sum()
    }

    /// The lazy set `{ i : λ_{i-1} = λ_i }`.
    pub fn lazy_set(&self) -> PosSet {
        (2..=self.len())
            .filter(|&i| self.height(i - 1) == self.height(i))
            .collect()
    }

    /// Rows have distinct lengths: every height from 1 to the top occurs.
    pub fn is_flat(&self) -> bool {
        self.columns[0] == 1 && self.columns.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// Columns have distinct lengths.
    pub fn is_steep(&self) -> bool {
        self.columns.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_staircase(&self) -> bool {
        self.is_flat() && self.is_steep()
    }

    pub fn is_square(&self) -> bool {
        self.columns.iter().all(|&h| h == self.len())
    }

    pub fn direct_sum(&self, other: &PartitionShape) -> PartitionShape {
        let top = self.num_rows();
        let mut columns = self.columns.clone();
        columns.extend(other.columns.iter().map(|h| h + top));
        PartitionShape { columns }
    }
}

impl fmt::Debug for PartitionShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.columns)
    }
}

/// The boolean attributes of a filling.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FillingPredicates {
    pub column_positive: bool,
    pub column_strict: bool,
    pub row_positive: bool,
    pub row_strict: bool,
    pub positive: bool,
    pub strict: bool,
    pub flat: bool,
    pub steep: bool,
    pub staircase: bool,
    pub enriched_permutation: bool,
}

/// A 0-1 filling of a partition shape.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FillingRepr", into = "FillingRepr")]
pub struct Filling {
    shape: PartitionShape,
    /// `alpha[i-1]` is the set of rows with a dot in column `i`.
    alpha: Vec<PosSet>,
}

#[derive(Serialize, Deserialize)]
struct FillingRepr {
    shape: PartitionShape,
    dots: Vec<(usize, usize)>,
}

impl TryFrom<FillingRepr> for Filling {
    type Error = Error;
    fn try_from(r: FillingRepr) -> Result<Self> {
        Filling::new(r.shape, r.dots)
    }
}

impl From<Filling> for FillingRepr {
    fn from(t: Filling) -> Self {
        FillingRepr {
            dots: t.dots().collect(),
            shape: t.shape,
        }
    }
}

impl Filling {
    /// Builds a filling from its dot set; every dot must lie inside the shape.
    pub fn new(shape: PartitionShape, dots: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut alpha = vec![PosSet::EMPTY; shape.len()];
        for (i, j) in dots {
            if i == 0 || i > shape.len() || j == 0 || j > shape.height(i) {
                return Err(Error::InvalidFilling(format!(
                    "dot ({i},{j}) lies outside shape {shape:?}"
                )));
            }
            alpha[i - 1].insert(j);
        }
        Ok(Filling { shape, alpha })
    }

    pub fn from_columns(shape: PartitionShape, alpha: Vec<PosSet>) -> Result<Self> {
        if alpha.len() != shape.len() {
            return Err(Error::InvalidFilling(format!(
                "{} column sets for a shape with {} columns",
                alpha.len(),
                shape.len()
            )));
        }
        for (k, col) in alpha.iter().enumerate() {
            if col.last().is_some_and(|m| m > shape.height(k + 1)) {
                return Err(Error::InvalidFilling(format!(
                    "column {} has a dot above its top",
                    k + 1
                )));
            }
        }
        Ok(Filling { shape, alpha })
    }

    /// Column-strict filling with one dot per column at the given rows.
    pub fn column_strict(shape: PartitionShape, rows: &[usize]) -> Result<Self> {
        Self::new(shape, rows.iter().enumerate().map(|(k, &j)| (k + 1, j)))
    }

    pub(crate) fn from_columns_unchecked(shape: PartitionShape, alpha: Vec<PosSet>) -> Self {
        debug_assert!(Filling::from_columns(shape.clone(), alpha.clone()).is_ok());
        Filling { shape, alpha }
    }

    pub fn shape(&self) -> &PartitionShape {
        &self.shape
    }

    /// `ℓ(T)`.
    pub fn len(&self) -> usize {
        self.shape.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `n(T)`, the number of dots.
    pub fn n(&self) -> usize {
        self.alpha.iter().map(|c| c.len()).sum()
    }

    /// `α(T)`: the rows of the dots, column by column.
    pub fn alpha(&self) -> &[PosSet] {
        &self.alpha
    }

    /// `α_i` as a single row, when column `i` holds exactly one dot.
    pub fn alpha_single(&self, i: usize) -> Option<usize> {
        let c = self.alpha[i - 1];
        (c.len() == 1).then(|| c.first().unwrap())
    }

    /// `α(T)` as integers, for column-strict fillings.
    pub fn alpha_rows(&self) -> Option<Vec<usize>> {
        (1..=self.len()).map(|i| self.alpha_single(i)).collect()
    }

    pub fn lazy_set(&self) -> PosSet {
        self.shape.lazy_set()
    }

    pub fn has_dot(&self, i: usize, j: usize) -> bool {
        i >= 1 && i <= self.len() && self.alpha[i - 1].contains(j)
    }

    /// All dots `(column, row)`, column-major.
    pub fn dots(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.alpha
            .iter()
            .enumerate()
            .flat_map(|(k, col)| col.iter().map(move |j| (k + 1, j)))
    }

    /// Columns holding a dot in row `j`.
    pub fn row(&self, j: usize) -> PosSet {
        (1..=self.len()).filter(|&i| self.alpha[i - 1].contains(j)).collect()
    }

    pub fn predicates(&self) -> FillingPredicates {
        let rows = self.shape.num_rows();
        let row_counts: Vec<usize> = (1..=rows).map(|j| self.row(j).len()).collect();
        let column_positive = self.alpha.iter().all(|c| !c.is_empty());
        let column_strict = self.alpha.iter().all(|c| c.len() == 1);
        let row_positive = row_counts.iter().all(|&c| c > 0);
        let row_strict = row_counts.iter().all(|&c| c == 1);
        let positive = column_positive && row_positive;
        FillingPredicates {
            column_positive,
            column_strict,
            row_positive,
            row_strict,
            positive,
            strict: column_strict && row_strict,
            flat: self.shape.is_flat(),
            steep: self.shape.is_steep(),
            staircase: self.shape.is_staircase(),
            enriched_permutation: self.shape.is_square() && positive && self.leftmost_is_topmost(),
        }
    }

    pub fn is_enriched_permutation(&self) -> bool {
        self.predicates().enriched_permutation
    }

    // For positive fillings: the dots that are leftmost in their row are
    // exactly the dots that are topmost in their column.
    fn leftmost_is_topmost(&self) -> bool {
        let mut leftmost: Vec<(usize, usize)> = (1..=self.shape.num_rows())
            .filter_map(|j| self.row(j).first().map(|i| (i, j)))
            .collect();
        let mut topmost: Vec<(usize, usize)> = self
            .alpha
            .iter()
            .enumerate()
            .filter_map(|(k, c)| c.last().map(|j| (k + 1, j)))
            .collect();
        leftmost.sort_unstable();
        topmost.sort_unstable();
        leftmost == topmost
    }

    /// `T ⊕ T'`: `T'` placed north-east of `T`, with empty cells below it.
    pub fn direct_sum(&self, other: &Filling) -> Filling {
        let top = self.shape.num_rows();
        let mut alpha = self.alpha.clone();
        alpha.extend(other.alpha.iter().map(|c| c.shift_up(top)));
        Filling {
            shape: self.shape.direct_sum(&other.shape),
            alpha,
        }
    }

    /// Columns `c` after which the filling splits as a direct sum.
    fn cut_points(&self) -> Vec<usize> {
        let l = self.len();
        // lowest dot in columns c+1..=l
        let mut suffix_low = vec![usize::MAX; l + 1];
        for c in (0..l).rev() {
            suffix_low[c] = suffix_low[c + 1].min(self.alpha[c].first().unwrap_or(usize::MAX));
        }
        (1..l)
            .filter(|&c| {
                let h = self.shape.height(c);
                self.shape.height(c + 1) > h && suffix_low[c] > h
            })
            .collect()
    }

    fn columns_slice(&self, lo: usize, hi: usize) -> Filling {
        let base = if lo == 0 { 0 } else { self.shape.height(lo) };
        Filling {
            shape: PartitionShape {
                columns: self.shape.columns[lo..hi].iter().map(|h| h - base).collect(),
            },
            alpha: self.alpha[lo..hi].iter().map(|c| c.shift_down(base)).collect(),
        }
    }

    pub fn components(&self) -> Vec<Filling> {
        split_at_cuts(self.len(), &self.cut_points(), |lo, hi| self.columns_slice(lo, hi))
    }

    /// Number of irreducible components.
    pub fn comp(&self) -> usize {
        self.cut_points().len() + 1
    }

    /// Boxed sum of enriched permutation fillings: `other` north-east of
    /// `self`, padded with empty rectangles to a square.
    pub fn boxed_sum(&self, other: &Filling) -> Result<Filling> {
        for t in [self, other] {
            if !t.is_enriched_permutation() {
                return Err(Error::Precondition(format!(
                    "boxed sum needs enriched permutation fillings, got {t:?}"
                )));
            }
        }
        let l = self.len();
        let total = l + other.len();
        let mut alpha = self.alpha.clone();
        alpha.extend(other.alpha.iter().map(|c| c.shift_up(l)));
        Ok(Filling {
            shape: PartitionShape {
                columns: vec![total; total],
            },
            alpha,
        })
    }

    fn box_cut_points(&self) -> Vec<usize> {
        let l = self.len();
        let mut prefix_high = 0;
        let mut suffix_low = vec![usize::MAX; l + 1];
        for c in (0..l).rev() {
            suffix_low[c] = suffix_low[c + 1].min(self.alpha[c].first().unwrap_or(usize::MAX));
        }
        let mut cuts = Vec::new();
        for c in 1..l {
            prefix_high = prefix_high.max(self.alpha[c - 1].last().unwrap_or(0));
            if prefix_high <= c && suffix_low[c] > c {
                cuts.push(c);
            }
        }
        cuts
    }

    /// Decomposition into box-irreducible enriched permutation fillings.
    pub fn box_components(&self) -> Result<Vec<Filling>> {
        if !self.is_enriched_permutation() {
            return Err(Error::Precondition(format!(
                "box components need an enriched permutation filling, got {self:?}"
            )));
        }
        Ok(split_at_cuts(self.len(), &self.box_cut_points(), |lo, hi| Filling {
            shape: PartitionShape {
                columns: vec![hi - lo; hi - lo],
            },
            alpha: self.alpha[lo..hi].iter().map(|c| c.shift_down(lo)).collect(),
        }))
    }

    pub fn boxcomp(&self) -> Result<usize> {
        self.box_components().map(|c| c.len())
    }

    /// Reflection of a square filling in its north-west to south-east
    /// diagonal: `(i, j) -> (ℓ+1-j, ℓ+1-i)`.
    pub fn transpose(&self) -> Result<Filling> {
        if !self.shape.is_square() {
            return Err(Error::Precondition("transpose needs a square shape".into()));
        }
        let l = self.len();
        let mut alpha = vec![PosSet::EMPTY; l];
        for (i, j) in self.dots() {
            alpha[l - j].insert(l + 1 - i);
        }
        Ok(Filling {
            shape: self.shape.clone(),
            alpha,
        })
    }
}

impl fmt::Debug for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dots: Vec<_> = self.dots().collect();
        write!(f, "Filling {{ shape: {:?}, dots: {:?} }}", self.shape, dots)
    }
}

/// Draws the filling with the top row first: `•` is a dot, `·` an empty cell.
impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in (1..=self.shape.num_rows()).rev() {
            for i in 1..=self.len() {
                let c = if self.shape.height(i) < j {
                    ' '
                } else if self.has_dot(i, j) {
                    '•'
                } else {
                    '·'
                };
                write!(f, "{c}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
