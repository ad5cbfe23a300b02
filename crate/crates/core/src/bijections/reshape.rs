use crate::error::{Error, Result};
use crate::objects::{Filling, PartitionShape};
use crate::posset::PosSet;

/// Merges all columns of equal length into one column.
///
/// Defined whenever no two dots of equal-length columns share a row, which
/// covers every row-strict filling.
pub fn steepen(t: &Filling) -> Result<Filling> {
    let mut heights: Vec<usize> = Vec::new();
    let mut alpha: Vec<PosSet> = Vec::new();
    for (i, &h) in t.shape().heights().iter().enumerate() {
        let col = t.alpha()[i];
        if heights.last() == Some(&h) {
            let merged = alpha.last_mut().unwrap();
            if !merged.is_disjoint(col) {
                return Err(Error::Precondition(format!(
                    "steepen: two dots in row {} of columns of length {h}",
                    merged.intersection(col).first().unwrap()
                )));
            }
            *merged = merged.union(col);
        } else {
            heights.push(h);
            alpha.push(col);
        }
    }
    Filling::from_columns(PartitionShape::new(heights)?, alpha)
}

/// Merges all rows of equal length into one row.
///
/// Defined whenever no column has two dots in rows of equal length, which
/// covers every column-strict filling.
pub fn flatten(t: &Filling) -> Result<Filling> {
    let shape = t.shape();
    // Rows j-1 and j have equal length iff no column ends at row j-1.
    let mut group = vec![0; shape.num_rows() + 1];
    for j in 1..=shape.num_rows() {
        let new_group = j == 1 || shape.heights().contains(&(j - 1));
        group[j] = group[j - 1] + usize::from(new_group);
    }
    let heights = shape.heights().iter().map(|&h| group[h]).collect();
    let mut alpha = Vec::with_capacity(t.len());
    for (i, col) in t.alpha().iter().enumerate() {
        let merged: PosSet = col.iter().map(|j| group[j]).collect();
        if merged.len() != col.len() {
            return Err(Error::Precondition(format!(
                "flatten: column {} has two dots in rows of equal length",
                i + 1
            )));
        }
        alpha.push(merged);
    }
    Filling::from_columns(PartitionShape::new(heights)?, alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::filling::tests::filling;

    #[test]
    fn steepen_figure() {
        let t = filling(&[1, 1, 2, 4, 4, 6], &[(2, 1), (4, 2), (5, 4), (6, 3), (6, 5), (6, 6)]);
        let s = filling(&[1, 2, 4, 6], &[(1, 1), (3, 2), (3, 4), (4, 3), (4, 5), (4, 6)]);
        assert_eq!(steepen(&t).unwrap(), s);
        assert_eq!(steepen(&s).unwrap(), s);
    }

    #[test]
    fn staircase_figure() {
        let t = filling(
            &[1, 2, 3, 3, 4, 5, 5],
            &[(1, 1), (2, 1), (3, 3), (4, 1), (5, 3), (6, 3), (7, 2)],
        );
        let s = filling(
            &[1, 2, 3, 4, 5],
            &[(1, 1), (2, 1), (3, 1), (3, 3), (4, 3), (5, 2), (5, 3)],
        );
        assert_eq!(steepen(&t).unwrap(), s);
    }

    #[test]
    fn flatten_strict_figure() {
        let strict = filling(
            &[5, 7, 7, 8, 8, 8, 9, 9, 9],
            &[(1, 1), (2, 6), (3, 2), (4, 7), (5, 3), (6, 4), (7, 5), (8, 8), (9, 9)],
        );
        let flat = filling(
            &[1, 2, 2, 3, 3, 3, 4, 4, 4],
            &[(1, 1), (2, 2), (3, 1), (4, 2), (5, 1), (6, 1), (7, 1), (8, 3), (9, 4)],
        );
        assert_eq!(flatten(&strict).unwrap(), flat);
        assert_eq!(flatten(&flat).unwrap(), flat);
    }

    #[test]
    fn preconditions() {
        assert!(steepen(&filling(&[1, 1], &[(1, 1), (2, 1)])).is_err());
        assert!(flatten(&filling(&[2], &[(1, 1), (1, 2)])).is_err());
    }
}
