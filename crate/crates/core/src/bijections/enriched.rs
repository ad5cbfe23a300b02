//! Column-positive staircase fillings and enriched permutation fillings.

use crate::error::{Error, Result};
use crate::objects::{Filling, PartitionShape};
use crate::posset::PosSet;

fn is_column_positive_staircase(t: &Filling) -> bool {
    let p = t.predicates();
    p.staircase && p.column_positive
}

/// `g(T)`, built column by column: before column `i` of `T` is appended, an
/// empty row is inserted into the square built so far so that it becomes
/// row number `max α_i`, pushing that row and the ones above it up.
pub fn g(t: &Filling) -> Result<Filling> {
    if !is_column_positive_staircase(t) {
        return Err(Error::Precondition(format!(
            "g needs a column-positive staircase filling, got {t:?}"
        )));
    }
    let l = t.len();
    let mut cols: Vec<PosSet> = Vec::with_capacity(l);
    for col in t.alpha() {
        let at = col.last().unwrap();
        for c in cols.iter_mut() {
            let below = c.intersection(PosSet::range(1, at - 1));
            *c = below.union(c.difference(below).shift_up(1));
        }
        cols.push(*col);
    }
    Filling::from_columns(PartitionShape::square(l)?, cols)
}

/// `g⁻¹(ρ)`: delete every cell left of the leftmost dot of its row and let
/// the remaining cells fall down.
pub fn g_inv(rho: &Filling) -> Result<Filling> {
    if !rho.is_enriched_permutation() {
        return Err(Error::Precondition(format!(
            "g_inv needs an enriched permutation filling, got {rho:?}"
        )));
    }
    let l = rho.len();
    let leftmost: Vec<usize> = (1..=l).map(|j| rho.row(j).first().unwrap()).collect();
    let mut cols = Vec::with_capacity(l);
    for (c, col) in rho.alpha().iter().enumerate() {
        let c = c + 1;
        // rank of a dot's row among the rows still present in column c
        let kept: Vec<usize> = (1..=l).filter(|&j| leftmost[j - 1] <= c).collect();
        cols.push(
            col.iter()
                .map(|j| kept.iter().position(|&k| k == j).unwrap() + 1)
                .collect(),
        );
    }
    Filling::from_columns(PartitionShape::staircase(l)?, cols)
}

/// `ι(T) = g⁻¹(g(T)ᵀ)`.
pub fn iota(t: &Filling) -> Result<Filling> {
    g_inv(&g(t)?.transpose()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::filling::tests::filling;

    fn top() -> Filling {
        filling(
            &[1, 2, 3, 4, 5],
            &[(1, 1), (2, 1), (3, 1), (3, 3), (4, 3), (5, 2), (5, 3)],
        )
    }

    fn bottom() -> Filling {
        filling(
            &[1, 2, 3, 4, 5],
            &[(1, 1), (2, 1), (3, 1), (4, 1), (4, 4), (5, 3), (5, 4)],
        )
    }

    #[test]
    fn g_figure() {
        let rho = filling(&[5; 5], &[(1, 2), (2, 1), (3, 1), (3, 5), (4, 4), (5, 2), (5, 3)]);
        assert_eq!(g(&top()).unwrap(), rho);
        assert_eq!(g_inv(&rho).unwrap(), top());
        let sigma = filling(&[5; 5], &[(1, 3), (2, 2), (3, 1), (4, 1), (4, 5), (5, 3), (5, 4)]);
        assert_eq!(g(&bottom()).unwrap(), sigma);
    }

    #[test]
    fn iota_figure() {
        assert_eq!(iota(&top()).unwrap(), bottom());
        assert_eq!(iota(&bottom()).unwrap(), top());
    }

    #[test]
    fn single_dot_is_fixed() {
        let dot = filling(&[1], &[(1, 1)]);
        assert_eq!(g(&dot).unwrap(), dot);
        assert_eq!(iota(&dot).unwrap(), dot);
    }

    #[test]
    fn preconditions() {
        assert!(g(&filling(&[1, 2], &[(1, 1)])).is_err());
        assert!(g(&filling(&[1, 1], &[(1, 1), (2, 1)])).is_err());
        assert!(g_inv(&filling(&[2, 2], &[(1, 1), (1, 2), (2, 1)])).is_err());
    }
}
