//! Flat column-strict fillings to barred and hatted permutations.
//!
//! Both maps read the columns of `T` from left to right and grow a sequence
//! of blocks; each block is a run of values whose first entry is unmarked.
//! Concatenating the blocks gives the permutation.

use crate::error::{Error, Result};
use crate::objects::{BarredPermutation, Filling, HattedPermutation, PartitionShape, Permutation};
use crate::posset::PosSet;

type Block = Vec<usize>;

fn flat_column_strict(t: &Filling, name: &str) -> Result<Vec<usize>> {
    if !t.shape().is_flat() {
        return Err(Error::Precondition(format!("{name} needs a flat filling, got {t:?}")));
    }
    t.alpha_rows()
        .ok_or_else(|| Error::Precondition(format!("{name} needs a column-strict filling, got {t:?}")))
}

fn dissolve(blocks: Vec<Block>) -> Vec<usize> {
    blocks.into_iter().flatten().collect()
}

/// `φ(T)`. Column `i` in the lazy set is appended, barred, to the end of
/// block `α_i`; any other column opens a new block `[i]` in front of block
/// `α_i` (or at the end when `α_i = λ_i`).
pub fn phi(t: &Filling) -> Result<BarredPermutation> {
    let alpha = flat_column_strict(t, "phi")?;
    let x = t.lazy_set();
    let mut blocks: Vec<Block> = vec![vec![1]];
    for i in 2..=t.len() {
        let a = alpha[i - 1];
        if x.contains(i) {
            blocks[a - 1].push(i);
        } else {
            blocks.insert(a - 1, vec![i]);
        }
    }
    let base = Permutation::from_word_unchecked(dissolve(blocks));
    BarredPermutation::new(base, x)
}

/// `φ⁻¹`: the lazy set is the set of bars, and `α_i` counts the unbarred
/// entries weakly left of `i` that are at most `i`.
pub fn phi_inv(p: &BarredPermutation) -> Result<Filling> {
    let n = p.size();
    let bars = p.bars();
    let shape = PartitionShape::flat(n, bars)?;
    let mut alpha = vec![0; n];
    let mut seen = PosSet::EMPTY;
    for &v in p.base().word() {
        if !bars.contains(v) {
            seen.insert(v);
        }
        alpha[v - 1] = seen.intersection(PosSet::range(1, v)).len();
    }
    Filling::column_strict(shape, &alpha)
}

/// `φ_silly(T)`. Starting from the block `[0]`, value `i` is appended, hatted,
/// to block `α_i` when `i + 1` is in the lazy set, and otherwise opens a new
/// block right after block `α_i`. The leading zero is dropped at the end.
pub fn phi_silly(t: &Filling) -> Result<HattedPermutation> {
    let alpha = flat_column_strict(t, "phi_silly")?;
    let x = t.lazy_set();
    let n = t.len();
    let mut blocks: Vec<Block> = vec![vec![0]];
    for i in 1..=n {
        let a = alpha[i - 1];
        if x.contains(i + 1) {
            blocks[a - 1].push(i);
        } else {
            blocks.insert(a, vec![i]);
        }
    }
    let word: Vec<usize> = dissolve(blocks).into_iter().skip(1).collect();
    HattedPermutation::new(Permutation::from_word_unchecked(word), x.shift_down(1))
}

/// `φ_silly⁻¹`: the lazy set is the set of hats shifted up by one, and
/// `α_i` is one more than the number of unhatted entries left of `i` that
/// are smaller than `i`.
pub fn phi_silly_inv(p: &HattedPermutation) -> Result<Filling> {
    let n = p.size();
    let hats = p.hats();
    let shape = PartitionShape::flat(n, hats.shift_up(1))?;
    let mut alpha = vec![0; n];
    let mut seen = PosSet::EMPTY;
    for &v in p.base().word() {
        alpha[v - 1] = 1 + seen.intersection(PosSet::range(1, v)).len();
        if !hats.contains(v) {
            seen.insert(v);
        }
    }
    Filling::column_strict(shape, &alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::filling::tests::{filling, running_example};

    #[test]
    fn phi_running_example() {
        let t = running_example();
        let p = phi(&t).unwrap();
        assert_eq!(p.base().word(), &[7, 3, 5, 6, 4, 1, 8, 9, 2]);
        assert_eq!(p.bars(), PosSet::from([5, 6, 8]));
        assert_eq!(phi_inv(&p).unwrap(), t);
    }

    #[test]
    fn phi_silly_running_example() {
        let t = running_example();
        let p = phi_silly(&t).unwrap();
        assert_eq!(p.base().word(), &[5, 7, 6, 3, 4, 1, 8, 9, 2]);
        assert_eq!(p.hats(), PosSet::from([4, 5, 7]));
        assert_eq!(phi_silly_inv(&p).unwrap(), t);
    }

    #[test]
    fn single_dot() {
        let t = filling(&[1], &[(1, 1)]);
        assert_eq!(phi(&t).unwrap().to_string(), "1");
        assert_eq!(phi_silly(&t).unwrap().to_string(), "1");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(phi(&filling(&[1, 2], &[(1, 1), (2, 1), (2, 2)])).is_err());
        assert!(phi(&filling(&[2, 2], &[(1, 1), (2, 1)])).is_err());
        assert!(phi_silly(&filling(&[1, 3], &[(1, 1), (2, 1)])).is_err());
    }
}
