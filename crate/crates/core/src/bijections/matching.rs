//! Matchings without left nestings and flat column-strict fillings.
//!
//! Walking the border of a shape from its south-west to its north-east
//! corner labels every row (by its vertical edge) and every column (by its
//! horizontal edge) with a point of `[2n]`. Rows become openers, columns
//! become closers, and a dot in row `r`, column `c` is the arc from the label
//! of `r` to the label of `c`.

use crate::error::{Error, Result};
use crate::objects::{Endpoint, Filling, MarkedMatching, Matching, PartitionShape};
use crate::posset::PosSet;

fn reject_left_nesting(m: &Matching, name: &str) -> Result<()> {
    if m.has_left_nesting() {
        return Err(Error::Precondition(format!(
            "{name} needs a matching without left nestings, got {m}"
        )));
    }
    Ok(())
}

/// Column heights and dot rows of the filling whose rows are the blocks of
/// consecutive openers (`group_openers`) or the single openers.
fn border_filling(m: &Matching, group_openers: bool) -> Filling {
    let mut row_of_point = vec![0; 2 * m.size() + 1];
    let mut rows = 0;
    let mut heights = Vec::with_capacity(m.size());
    let mut prev_opener = false;
    for (p, e) in m.endpoints().into_iter().enumerate().skip(1) {
        match e {
            Endpoint::Opener(_) => {
                if !(group_openers && prev_opener) {
                    rows += 1;
                }
                row_of_point[p] = rows;
                prev_opener = true;
            }
            Endpoint::Closer(_) => {
                heights.push(rows);
                prev_opener = false;
            }
        }
    }
    let alpha: Vec<usize> = m.arcs().iter().map(|&(o, _)| row_of_point[o]).collect();
    let shape = PartitionShape::new(heights).expect("closers follow their openers");
    Filling::column_strict(shape, &alpha).expect("openers precede closers")
}

/// The strict filling in bijection with `m` (no restriction on nestings).
pub fn psi_strict(m: &Matching) -> Filling {
    border_filling(m, false)
}

/// `ψ(M)`: the flattening of the strict filling of `M`. Rows of equal length
/// are runs of consecutive openers, so they are merged directly.
pub fn psi(m: &Matching) -> Result<Filling> {
    reject_left_nesting(m, "psi")?;
    Ok(border_filling(m, true))
}

/// `ψ⁻¹(T)` for a flat, column-strict, row-positive `T`. A row with `d` dots
/// stands for `d` consecutive openers, assigned to its dots from left to
/// right; this is the only order that avoids a left nesting.
pub fn psi_inv(t: &Filling) -> Result<Matching> {
    let p = t.predicates();
    if !(p.flat && p.column_strict && p.row_positive) {
        return Err(Error::Precondition(format!(
            "psi_inv needs a flat, column-strict, row-positive filling, got {t:?}"
        )));
    }
    let l = t.len();
    let mut opener = vec![0; l + 1];
    let mut arcs = Vec::with_capacity(l);
    let mut point = 0;
    let mut rows_opened = 0;
    for i in 1..=l {
        while rows_opened < t.shape().height(i) {
            rows_opened += 1;
            for c in t.row(rows_opened) {
                point += 1;
                opener[c] = point;
            }
        }
        point += 1;
        arcs.push((opener[i], point));
    }
    Ok(Matching::from_sorted_unchecked(arcs))
}

/// Deletes the empty rows of a filling.
pub fn remove_empty_rows(t: &Filling) -> Filling {
    let rows = t.shape().num_rows();
    let mut new_row = vec![0; rows + 1];
    let mut kept = 0;
    for (j, slot) in new_row.iter_mut().enumerate().skip(1) {
        if !t.row(j).is_empty() {
            kept += 1;
        }
        *slot = kept;
    }
    let heights = t.shape().heights().iter().map(|&h| new_row[h]).collect();
    let alpha = t
        .alpha()
        .iter()
        .map(|c| c.iter().map(|j| new_row[j]).collect())
        .collect();
    Filling::from_columns_unchecked(PartitionShape::new(heights).expect("nonempty first row"), alpha)
}

/// `f(T)`: remove the empty rows, apply `ψ⁻¹`, and mark the lazy set of `T`.
pub fn f_marked(t: &Filling) -> Result<MarkedMatching> {
    let p = t.predicates();
    if !(p.flat && p.column_strict) {
        return Err(Error::Precondition(format!(
            "f needs a flat column-strict filling, got {t:?}"
        )));
    }
    let m = psi_inv(&remove_empty_rows(t))?;
    MarkedMatching::new(m, t.lazy_set())
}

/// `f⁻¹(M̄)`: the shape is the flat shape with lazy set `X(M̄)`, and the rows
/// of `ψ(M)` are placed at the rows of that shape starting in the same
/// column. The empty rows fall where they must.
pub fn f_marked_inv(mm: &MarkedMatching) -> Result<Filling> {
    let compact = psi(mm.base())?;
    let shape = PartitionShape::flat(mm.size(), mm.marks())?;
    let row_at_start: Vec<(usize, usize)> = (1..=shape.num_rows()).map(|j| (shape.row_start(j), j)).collect();
    let lift = |k: usize| {
        let s = compact.shape().row_start(k);
        row_at_start
            .iter()
            .find(|&&(start, _)| start == s)
            .map(|&(_, j)| j)
            .expect("marks are lazy in the compact shape")
    };
    let alpha: Vec<PosSet> = compact.alpha().iter().map(|c| c.iter().map(lift).collect()).collect();
    Filling::from_columns(shape, alpha)
}
