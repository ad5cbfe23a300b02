use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::posset::{PosSet, MAX_ELEMENT};

/// A permutation of `1..=n` in single-row notation, `n >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PermutationRepr", into = "PermutationRepr")]
pub struct Permutation {
    word: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PermutationRepr {
    word: Vec<usize>,
}

impl TryFrom<PermutationRepr> for Permutation {
    type Error = Error;
    fn try_from(r: PermutationRepr) -> Result<Self> {
        Permutation::new(r.word)
    }
}

impl From<Permutation> for PermutationRepr {
    fn from(p: Permutation) -> Self {
        PermutationRepr { word: p.word }
    }
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty permutation".into()));
        }
        if n > MAX_ELEMENT {
            return Err(Error::TooLarge {
                size: n,
                max: MAX_ELEMENT,
            });
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{word:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new((1..=n).collect())
    }

    pub fn size(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `π(j)` for one-based `j`.
    pub fn at(&self, j: usize) -> usize {
        self.word[j - 1]
    }

    /// `pos[v]` is the one-based position of value `v` (index 0 unused).
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.size() + 1];
        for (j, &v) in self.word.iter().enumerate() {
            pos[v] = j + 1;
        }
        pos
    }

    /// Ascent tops: values `π(j)` with `π(j-1) < π(j)`.
    pub fn ascent_tops(&self) -> PosSet {
        self.word.windows(2).filter(|w| w[0] < w[1]).map(|w| w[1]).collect()
    }

    /// Silly ascents: `π(j)` with (`j = 1` or `π(j-1) < π(j)`) and `π(j) < n`.
    pub fn silly_ascents(&self) -> PosSet {
        let n = self.size();
        let mut s = self.ascent_tops();
        s.insert(self.word[0]);
        s.remove(n);
        s
    }

    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let n = self.size();
        let mut word = self.word.clone();
        word.extend(other.word.iter().map(|v| v + n));
        Permutation { word }
    }

    /// Cut points `c` (`1 <= c < n`) where the prefix of length `c` is a
    /// permutation of `1..=c`.
    pub(crate) fn cut_points(&self) -> Vec<usize> {
        let mut cuts = Vec::new();
        let mut running_max = 0;
        for (j, &v) in self.word.iter().enumerate().take(self.size() - 1) {
            running_max = running_max.max(v);
            if running_max == j + 1 {
                cuts.push(j + 1);
            }
        }
        cuts
    }

    /// Restriction to positions `lo+1..=hi`, with values shifted down by `lo`.
    /// Only meaningful between cut points.
    pub(crate) fn slice(&self, lo: usize, hi: usize) -> Permutation {
        Permutation {
            word: self.word[lo..hi].iter().map(|v| v - lo).collect(),
        }
    }

    pub fn components(&self) -> Vec<Permutation> {
        split_at_cuts(self.size(), &self.cut_points(), |lo, hi| self.slice(lo, hi))
    }

    pub fn comp(&self) -> usize {
        self.cut_points().len() + 1
    }

    /// Rotation by 180 degrees: `j -> n+1-j`, `v -> n+1-v`.
    pub fn rotate(&self) -> Permutation {
        let n = self.size();
        Permutation {
            word: self.word.iter().rev().map(|v| n + 1 - v).collect(),
        }
    }
}

pub(crate) fn split_at_cuts<T>(n: usize, cuts: &[usize], mut piece: impl FnMut(usize, usize) -> T) -> Vec<T> {
    let mut out = Vec::with_capacity(cuts.len() + 1);
    let mut lo = 0;
    for &c in cuts.iter().chain(std::iter::once(&n)) {
        out.push(piece(lo, c));
        lo = c;
    }
    out
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.size() > 9 { " " } else { "" };
        for (j, v) in self.word.iter().enumerate() {
            if j > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A permutation with a marked subset of its ascent tops.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "DecoratedRepr", into = "DecoratedRepr")]
pub struct BarredPermutation {
    base: Permutation,
    bars: PosSet,
}

/// A permutation with a marked subset of its silly ascents.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "DecoratedRepr", into = "DecoratedRepr")]
pub struct HattedPermutation {
    base: Permutation,
    hats: PosSet,
}

#[derive(Serialize, Deserialize)]
struct DecoratedRepr {
    word: Vec<usize>,
    marks: PosSet,
}

impl TryFrom<DecoratedRepr> for BarredPermutation {
    type Error = Error;
    fn try_from(r: DecoratedRepr) -> Result<Self> {
        BarredPermutation::new(Permutation::new(r.word)?, r.marks)
    }
}

impl From<BarredPermutation> for DecoratedRepr {
    fn from(p: BarredPermutation) -> Self {
        DecoratedRepr {
            word: p.base.word,
            marks: p.bars,
        }
    }
}

impl TryFrom<DecoratedRepr> for HattedPermutation {
    type Error = Error;
    fn try_from(r: DecoratedRepr) -> Result<Self> {
        HattedPermutation::new(Permutation::new(r.word)?, r.marks)
    }
}

impl From<HattedPermutation> for DecoratedRepr {
    fn from(p: HattedPermutation) -> Self {
        DecoratedRepr {
            word: p.base.word,
            marks: p.hats,
        }
    }
}

impl BarredPermutation {
    pub fn new(base: Permutation, bars: PosSet) -> Result<Self> {
        if !bars.is_subset(base.ascent_tops()) {
            return Err(Error::InvalidDecoration(format!(
                "bars {bars:?} are not all ascent tops of {base}"
            )));
        }
        Ok(BarredPermutation { base, bars })
    }

    pub fn base(&self) -> &Permutation {
        &self.base
    }

    /// The barred values, `X(π̄)`.
    pub fn bars(&self) -> PosSet {
        self.bars
    }

    pub fn size(&self) -> usize {
        self.base.size()
    }

    pub fn direct_sum(&self, other: &BarredPermutation) -> BarredPermutation {
        BarredPermutation {
            base: self.base.direct_sum(&other.base),
            bars: self.bars.union(other.bars.shift_up(self.size())),
        }
    }

    // A cut is admissible only if the first entry after it is unbarred: that
    // entry starts a new summand, where it cannot be an ascent top.
    fn cut_points(&self) -> Vec<usize> {
        self.base
            .cut_points()
            .into_iter()
            .filter(|&c| !self.bars.contains(self.base.at(c + 1)))
            .collect()
    }

    pub fn components(&self) -> Vec<BarredPermutation> {
        split_at_cuts(self.size(), &self.cut_points(), |lo, hi| BarredPermutation {
            base: self.base.slice(lo, hi),
            bars: self.bars.intersection(PosSet::range(lo + 1, hi)).shift_down(lo),
        })
    }

    /// Number of irreducible barred components.
    pub fn bcomp(&self) -> usize {
        self.cut_points().len() + 1
    }
}

impl HattedPermutation {
    pub fn new(base: Permutation, hats: PosSet) -> Result<Self> {
        if !hats.is_subset(base.silly_ascents()) {
            return Err(Error::InvalidDecoration(format!(
                "hats {hats:?} are not all silly ascents of {base}"
            )));
        }
        Ok(HattedPermutation { base, hats })
    }

    pub fn base(&self) -> &Permutation {
        &self.base
    }

    /// The hatted values, `X(π̂)`.
    pub fn hats(&self) -> PosSet {
        self.hats
    }

    /// `X⁺(π̂) = X(π̂) + 1`.
    pub fn hats_plus(&self) -> PosSet {
        self.hats.shift_up(1)
    }

    pub fn size(&self) -> usize {
        self.base.size()
    }

    pub fn direct_sum(&self, other: &HattedPermutation) -> HattedPermutation {
        HattedPermutation {
            base: self.base.direct_sum(&other.base),
            hats: self.hats.union(other.hats.shift_up(self.size())),
        }
    }

    // The largest value `c` of a summand is never a silly ascent inside it,
    // so a cut after a prefix with maximum `c` needs `c` unhatted.
    fn cut_points(&self) -> Vec<usize> {
        self.base
            .cut_points()
            .into_iter()
            .filter(|&c| !self.hats.contains(c))
            .collect()
    }

    pub fn components(&self) -> Vec<HattedPermutation> {
        split_at_cuts(self.size(), &self.cut_points(), |lo, hi| HattedPermutation {
            base: self.base.slice(lo, hi),
            hats: self.hats.intersection(PosSet::range(lo + 1, hi)).shift_down(lo),
        })
    }

    pub fn bcomp(&self) -> usize {
        self.cut_points().len() + 1
    }
}

fn fmt_decorated(f: &mut fmt::Formatter<'_>, p: &Permutation, marks: PosSet, mark: char) -> fmt::Result {
    for (j, v) in p.word().iter().enumerate() {
        if j > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{v}")?;
        if marks.contains(*v) {
            write!(f, "{mark}")?;
        }
    }
    Ok(())
}

impl fmt::Debug for BarredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Barred({self})")
    }
}

/// Barred entries are followed by a combining macron.
impl fmt::Display for BarredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_decorated(f, &self.base, self.bars, '\u{0304}')
    }
}

impl fmt::Debug for HattedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hatted({self})")
    }
}

/// Hatted entries are followed by a combining circumflex.
impl fmt::Display for HattedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_decorated(f, &self.base, self.hats, '\u{0302}')
    }
}
