//! Exhaustive generators. Every generator yields each object once, in a
//! fixed order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::objects::{Filling, Matching, PartitionShape, Permutation};
use crate::posset::PosSet;

/// Largest size any exhaustive generator accepts.
pub const MAX_N: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Perms,
    NlmMatchings,
}

impl Family {
    pub fn parse(s: &str) -> Result<Family> {
        match s {
            "perms" | "permutations" => Ok(Family::Perms),
            "nlm" | "nlm_matchings" | "nlm-matchings" | "matchings" => Ok(Family::NlmMatchings),
            _ => Err(Error::Unknown(format!("family {s}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Perms => "perms",
            Family::NlmMatchings => "nlm_matchings",
        }
    }
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        Err(Error::BoundExceeded { n, bound })
    } else {
        Ok(())
    }
}

/// All inversion tables `(α_1, …, α_n)` with `1 ≤ α_j ≤ j`, in
/// lexicographic order.
pub fn inversion_tables(n: usize) -> Result<Vec<Vec<usize>>> {
    check_bound(n, MAX_N)?;
    let mut out = Vec::new();
    let mut alpha = vec![1; n];
    loop {
        out.push(alpha.clone());
        // odometer, last position fastest
        let mut j = n;
        loop {
            if j == 0 {
                return Ok(out);
            }
            j -= 1;
            if alpha[j] < j + 1 {
                alpha[j] += 1;
                break;
            }
            alpha[j] = 1;
        }
    }
}

/// Inserts `j` at position `α_j` from the left, for `j = 1, …, n`.
pub fn perm_from_inversion_table(alpha: &[usize]) -> Result<Permutation> {
    let mut word = Vec::with_capacity(alpha.len());
    for (j, &a) in alpha.iter().enumerate() {
        if a == 0 || a > j + 1 {
            return Err(Error::InvalidPermutation(format!("bad inversion table {alpha:?}")));
        }
        word.insert(a - 1, j + 1);
    }
    Permutation::new(word)
}

/// Adds arc `j` with its closer at the far right and its opener immediately
/// left of the `α_j`-th closer from the left.
pub fn matching_from_inversion_table(alpha: &[usize]) -> Result<Matching> {
    // points as signed arc labels: +j opener, -j closer
    let mut points: Vec<i64> = Vec::with_capacity(2 * alpha.len());
    for (j, &a) in alpha.iter().enumerate() {
        let j = j as i64 + 1;
        if a == 0 || a as i64 > j {
            return Err(Error::InvalidMatching(format!("bad inversion table {alpha:?}")));
        }
        points.push(-j);
        let at = points.iter().enumerate().filter(|(_, &p)| p < 0).nth(a - 1).unwrap().0;
        points.insert(at, j);
    }
    let n = alpha.len();
    let mut pairs = vec![(0, 0); n];
    for (pos, &p) in points.iter().enumerate() {
        let arc = p.unsigned_abs() as usize - 1;
        if p > 0 {
            pairs[arc].0 = pos + 1;
        } else {
            pairs[arc].1 = pos + 1;
        }
    }
    Matching::new(pairs)
}

/// `S_n` in lexicographic order.
pub fn perms(n: usize) -> Result<Vec<Permutation>> {
    check_bound(n, MAX_N)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut word: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    loop {
        out.push(Permutation::new(word.clone())?);
        // next permutation in lexicographic order
        let Some(i) = (1..n).rev().find(|&i| word[i - 1] < word[i]) else {
            return Ok(out);
        };
        let j = (i..n).rev().find(|&j| word[j] > word[i - 1]).unwrap();
        word.swap(i - 1, j);
        word[i..].reverse();
    }
}

/// Matchings of `[2n]` without left nestings, in the order of their
/// inversion tables.
pub fn nlm_matchings(n: usize) -> Result<Vec<Matching>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    inversion_tables(n)?
        .iter()
        .map(|a| matching_from_inversion_table(a))
        .collect()
}

/// All matchings of `[2n]`, keeping those without left nestings. Slow;
/// only for cross-checking [`nlm_matchings`].
pub fn nlm_matchings_by_filter(n: usize) -> Result<Vec<Matching>> {
    check_bound(n, 6)?;
    let mut out = Vec::new();
    let mut partner = vec![0usize; 2 * n + 1];
    fn rec(partner: &mut Vec<usize>, n: usize, out: &mut Vec<Matching>) -> Result<()> {
        let Some(first) = (1..=2 * n).find(|&p| partner[p] == 0) else {
            let pairs = (1..=2 * n)
                .filter(|&p| partner[p] > p)
                .map(|p| (p, partner[p]))
                .collect();
            let m = Matching::new(pairs)?;
            if !m.has_left_nesting() {
                out.push(m);
            }
            return Ok(());
        };
        for q in first + 1..=2 * n {
            if partner[q] == 0 {
                partner[first] = q;
                partner[q] = first;
                rec(partner, n, out)?;
                partner[first] = 0;
                partner[q] = 0;
            }
        }
        Ok(())
    }
    rec(&mut partner, n, &mut out)?;
    out.sort();
    Ok(out)
}

/// Every 0-1 filling of `shape` accepted by `keep`, by brute force over all
/// `2^cells` fillings.
pub fn fillings_of_shape(shape: &PartitionShape, keep: impl Fn(&Filling) -> bool) -> Result<Vec<Filling>> {
    let cells = shape.cells();
    check_bound(cells, 24)?;
    let heights = shape.heights().to_vec();
    let mut out = Vec::new();
    for bits in 0u64..1 << cells {
        let mut rest = bits;
        let cols: Vec<PosSet> = heights
            .iter()
            .map(|&h| {
                let c = PosSet::from_bits((rest & ((1 << h) - 1)) << 1);
                rest >>= h;
                c
            })
            .collect();
        let f = Filling::from_columns(shape.clone(), cols)?;
        if keep(&f) {
            out.push(f);
        }
    }
    Ok(out)
}

/// Every column-strict filling of `shape`: one dot per column.
pub fn column_strict_fillings(shape: &PartitionShape) -> Result<Vec<Filling>> {
    let heights = shape.heights();
    let mut out = Vec::new();
    let mut rows = vec![1usize; heights.len()];
    loop {
        out.push(Filling::column_strict(shape.clone(), &rows)?);
        let mut i = heights.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if rows[i] < heights[i] {
                rows[i] += 1;
                break;
            }
            rows[i] = 1;
        }
    }
}

/// Flat shapes with `len` columns, one for each lazy set `X ⊆ {2, …, len}`.
pub fn flat_shapes(len: usize) -> Result<Vec<PartitionShape>> {
    check_bound(len, MAX_N)?;
    if len == 0 {
        return Ok(Vec::new());
    }
    let candidates = PosSet::range(2, len);
    candidates.subsets().map(|x| PartitionShape::flat(len, x)).collect()
}

/// Flat column-strict fillings with exactly `len` columns.
pub fn flat_column_strict_fillings(len: usize) -> Result<Vec<Filling>> {
    let mut out = Vec::new();
    for shape in flat_shapes(len)? {
        out.extend(column_strict_fillings(&shape)?);
    }
    Ok(out)
}

/// Column-positive fillings of the staircase with `len` columns.
pub fn staircase_column_positive_fillings(len: usize) -> Result<Vec<Filling>> {
    check_bound(len, 6)?;
    let shape = PartitionShape::staircase(len)?;
    let mut out = Vec::new();
    let mut cols: Vec<u64> = vec![1; len];
    loop {
        let alpha = cols.iter().map(|&b| PosSet::from_bits(b << 1)).collect();
        out.push(Filling::from_columns(shape.clone(), alpha)?);
        let mut i = len;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if cols[i] < (1 << (i + 1)) - 1 {
                cols[i] += 1;
                break;
            }
            cols[i] = 1;
        }
    }
}
