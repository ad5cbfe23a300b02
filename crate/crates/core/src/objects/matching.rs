use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::objects::permutation::split_at_cuts;
use crate::posset::{PosSet, MAX_ELEMENT};

/// A perfect matching on `1..=2n`, arcs indexed `1..=n` by increasing closer.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MatchingRepr", into = "MatchingRepr")]
pub struct Matching {
    /// `(opener, closer)` sorted by closer.
    arcs: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct MatchingRepr {
    arcs: Vec<(usize, usize)>,
}

impl TryFrom<MatchingRepr> for Matching {
    type Error = Error;
    fn try_from(r: MatchingRepr) -> Result<Self> {
        Matching::new(r.arcs)
    }
}

impl From<Matching> for MatchingRepr {
    fn from(m: Matching) -> Self {
        MatchingRepr { arcs: m.arcs }
    }
}

/// What sits at a point of the ground set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Endpoint {
    Opener(usize),
    Closer(usize),
}

impl Matching {
    /// Builds a matching from unordered pairs; endpoints of each pair may be
    /// given in either order.
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self> {
        let n = pairs.len();
        if n == 0 {
            return Err(Error::InvalidMatching("empty matching".into()));
        }
        if n > MAX_ELEMENT {
            return Err(Error::TooLarge {
                size: n,
                max: MAX_ELEMENT,
            });
        }
        let mut seen = vec![false; 2 * n + 1];
        let mut arcs = Vec::with_capacity(n);
        for (a, b) in pairs {
            let (o, c) = if a < b { (a, b) } else { (b, a) };
            for p in [o, c] {
                if p == 0 || p > 2 * n || seen[p] {
                    return Err(Error::InvalidMatching(format!(
                        "endpoint {p} is repeated or outside 1..={}",
                        2 * n
                    )));
                }
                seen[p] = true;
            }
            if o == c {
                return Err(Error::InvalidMatching(format!("degenerate arc at {o}")));
            }
            arcs.push((o, c));
        }
        arcs.sort_by_key(|&(_, c)| c);
        Ok(Matching { arcs })
    }

    pub(crate) fn from_sorted_unchecked(arcs: Vec<(usize, usize)>) -> Self {
        debug_assert!(arcs.windows(2).all(|w| w[0].1 < w[1].1));
        debug_assert!(Matching::new(arcs.clone()).is_ok());
        Matching { arcs }
    }

    pub fn size(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Opener of arc `M_i` (one-based).
    pub fn opener(&self, i: usize) -> usize {
        self.arcs[i - 1].0
    }

    pub fn closer(&self, i: usize) -> usize {
        self.arcs[i - 1].1
    }

    /// `table[p]` describes point `p` (index 0 unused).
    pub fn endpoints(&self) -> Vec<Endpoint> {
        let mut table = vec![Endpoint::Opener(0); 2 * self.size() + 1];
        for (k, &(o, c)) in self.arcs.iter().enumerate() {
            table[o] = Endpoint::Opener(k + 1);
            table[c] = Endpoint::Closer(k + 1);
        }
        table
    }

    /// Indices `i >= 2` with `closer(M_{i-1}) + 1 = closer(M_i)`.
    pub fn right_adjacencies(&self) -> PosSet {
        (2..=self.size())
            .filter(|&i| self.closer(i - 1) + 1 == self.closer(i))
            .collect()
    }

    /// A left nesting is a pair of arcs with adjacent openers where the arc
    /// opened second closes first.
    pub fn has_left_nesting(&self) -> bool {
        let table = self.endpoints();
        table[1..].windows(2).any(|w| match (w[0], w[1]) {
            (Endpoint::Opener(a), Endpoint::Opener(b)) => self.closer(b) < self.closer(a),
            _ => false,
        })
    }

    pub fn direct_sum(&self, other: &Matching) -> Matching {
        let shift = 2 * self.size();
        let mut arcs = self.arcs.clone();
        arcs.extend(other.arcs.iter().map(|&(o, c)| (o + shift, c + shift)));
        Matching { arcs }
    }

    /// Arc counts `c` (`1 <= c < n`) such that points `1..=2c` carry exactly
    /// the arcs `M_1..M_c`.
    fn cut_points(&self) -> Vec<usize> {
        let mut cuts = Vec::new();
        let mut open = 0usize;
        let mut closed = 0usize;
        for e in &self.endpoints()[1..] {
            match e {
                Endpoint::Opener(_) => open += 1,
                Endpoint::Closer(_) => {
                    open -= 1;
                    closed += 1;
                    if open == 0 && closed < self.size() {
                        cuts.push(closed);
                    }
                }
            }
        }
        cuts
    }

    fn slice(&self, lo: usize, hi: usize) -> Matching {
        let shift = 2 * lo;
        Matching {
            arcs: self.arcs[lo..hi].iter().map(|&(o, c)| (o - shift, c - shift)).collect(),
        }
    }

    pub fn components(&self) -> Vec<Matching> {
        split_at_cuts(self.size(), &self.cut_points(), |lo, hi| self.slice(lo, hi))
    }

    pub fn comp(&self) -> usize {
        self.cut_points().len() + 1
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matching{self}")
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (o, c)) in self.arcs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{{{o},{c}}}")?;
        }
        f.write_str("}")
    }
}

/// A matching without left nestings together with a marked subset of its
/// right adjacencies.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MarkedRepr", into = "MarkedRepr")]
pub struct MarkedMatching {
    base: Matching,
    marks: PosSet,
}

#[derive(Serialize, Deserialize)]
struct MarkedRepr {
    arcs: Vec<(usize, usize)>,
    marks: PosSet,
}

impl TryFrom<MarkedRepr> for MarkedMatching {
    type Error = Error;
    fn try_from(r: MarkedRepr) -> Result<Self> {
        MarkedMatching::new(Matching::new(r.arcs)?, r.marks)
    }
}

impl From<MarkedMatching> for MarkedRepr {
    fn from(m: MarkedMatching) -> Self {
        MarkedRepr {
            arcs: m.base.arcs,
            marks: m.marks,
        }
    }
}

impl MarkedMatching {
    pub fn new(base: Matching, marks: PosSet) -> Result<Self> {
        if base.has_left_nesting() {
            return Err(Error::InvalidDecoration(format!(
                "marked matchings may not have left nestings: {base}"
            )));
        }
        if !marks.is_subset(base.right_adjacencies()) {
            return Err(Error::InvalidDecoration(format!(
                "marks {marks:?} are not all right adjacencies of {base}"
            )));
        }
        Ok(MarkedMatching { base, marks })
    }

    pub fn base(&self) -> &Matching {
        &self.base
    }

    pub fn marks(&self) -> PosSet {
        self.marks
    }

    pub fn size(&self) -> usize {
        self.base.size()
    }

    pub fn direct_sum(&self, other: &MarkedMatching) -> MarkedMatching {
        MarkedMatching {
            base: self.base.direct_sum(&other.base),
            marks: self.marks.union(other.marks.shift_up(self.size())),
        }
    }

    // The first arc of a summand never closes right after the last arc of the
    // previous one, so marks never straddle a cut.
    pub fn components(&self) -> Vec<MarkedMatching> {
        split_at_cuts(self.size(), &self.base.cut_points(), |lo, hi| MarkedMatching {
            base: self.base.slice(lo, hi),
            marks: self.marks.intersection(PosSet::range(lo + 1, hi)).shift_down(lo),
        })
    }

    pub fn comp(&self) -> usize {
        self.base.comp()
    }
}

impl fmt::Debug for MarkedMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Marked({} marks {:?})", self.base, self.marks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fig3() -> Matching {
        Matching::new(vec![
            (1, 6),
            (7, 9),
            (2, 10),
            (8, 12),
            (3, 13),
            (4, 14),
            (5, 16),
            (11, 17),
            (15, 18),
        ])
        .unwrap()
    }

    #[test]
    fn arcs_sorted_by_closer() {
        let m = Matching::new(vec![(2, 7), (1, 3), (5, 8), (4, 6)]).unwrap();
        assert_eq!(m.arcs(), &[(1, 3), (4, 6), (2, 7), (5, 8)]);
        assert_eq!(m.opener(3), 2);
    }

    #[test]
    fn validation() {
        assert!(Matching::new(vec![]).is_err());
        assert!(Matching::new(vec![(1, 1)]).is_err());
        assert!(Matching::new(vec![(1, 2), (2, 3)]).is_err());
        assert!(Matching::new(vec![(1, 5), (2, 3)]).is_err());
    }

    #[test]
    fn fig3_is_irreducible() {
        assert_eq!(fig3().comp(), 1);
        assert!(!fig3().has_left_nesting());
    }

    #[test]
    fn direct_sum_and_components() {
        // the two summands drawn in the direct-sum figure
        let a = Matching::new(vec![(1, 3), (2, 5), (4, 6)]).unwrap();
        let b = Matching::new(vec![(1, 3), (2, 6), (4, 7), (5, 8)]).unwrap();
        let s = a.direct_sum(&b);
        assert_eq!(
            s,
            Matching::new(vec![(1, 3), (2, 5), (4, 6), (7, 9), (8, 12), (10, 13), (11, 14)]).unwrap()
        );
        assert_eq!(s.components(), vec![a, b]);
        let one = Matching::new(vec![(1, 2)]).unwrap();
        assert_eq!(one.direct_sum(&one).comp(), 2);
    }

    #[test]
    fn left_nesting_detection() {
        assert!(Matching::new(vec![(1, 4), (2, 3)]).unwrap().has_left_nesting());
        assert!(!Matching::new(vec![(1, 3), (2, 4)]).unwrap().has_left_nesting());
        assert!(MarkedMatching::new(Matching::new(vec![(1, 4), (2, 3)]).unwrap(), PosSet::EMPTY).is_err());
    }
}
