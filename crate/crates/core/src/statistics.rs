//! Set-valued statistics on permutations, matchings and fillings.
//!
//! Counts are always derived from the sets, so every numeric statistic has a
//! position-refined counterpart computed by the same code.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::objects::{Endpoint, Filling, Matching, Permutation};
use crate::posset::PosSet;

/// Statistics of a permutation. All sets hold values, not positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PermStats {
    pub n: usize,
    /// Ascent tops.
    pub asc: PosSet,
    /// Descent bottoms.
    pub des: PosSet,
    /// Ascent tops `π(j)` with `π(j) - 1` to the right of `π(j)`.
    pub p: PosSet,
    /// Ascent tops `π(j)` with `π(j) - 1` to the left of `π(j-1)`.
    pub q: PosSet,
    /// Short ascents: `π(j-1) = π(j) - 1`.
    pub r: PosSet,
    pub asc_silly: PosSet,
    /// Silly ascents `π(j)` with `π(j) + 1` to the left.
    pub p_silly: PosSet,
    /// Silly ascents `π(j)` with `π(j) + 1` to the right.
    pub q_silly: PosSet,
    pub rmin: PosSet,
    pub rmax: PosSet,
    /// Ascent bottoms `π(j) < π(j+1)`.
    pub ascbottom: PosSet,
    /// Ascent bottoms with `π(j) < π(j+1) - 1`.
    pub ascbottom_long: PosSet,
    pub comp: usize,
}

impl PermStats {
    pub fn asc_count(&self) -> usize {
        self.asc.len()
    }

    pub fn des_count(&self) -> usize {
        self.des.len()
    }

    /// Short ascent bottoms, `R - 1`.
    pub fn ascbottom_short(&self) -> PosSet {
        self.r.shift_down(1)
    }
}

pub fn perm_stats(pi: &Permutation) -> PermStats {
    let n = pi.size();
    let w = pi.word();
    let pos = pi.positions();

    let mut s = PermStats {
        n,
        asc: PosSet::EMPTY,
        des: PosSet::EMPTY,
        p: PosSet::EMPTY,
        q: PosSet::EMPTY,
        r: PosSet::EMPTY,
        asc_silly: pi.silly_ascents(),
        p_silly: PosSet::EMPTY,
        q_silly: PosSet::EMPTY,
        rmin: PosSet::EMPTY,
        rmax: PosSet::EMPTY,
        ascbottom: PosSet::EMPTY,
        ascbottom_long: PosSet::EMPTY,
        comp: pi.comp(),
    };

    for j in 2..=n {
        let (a, b) = (w[j - 2], w[j - 1]);
        if a < b {
            s.asc.insert(b);
            s.ascbottom.insert(a);
            if a + 1 < b {
                s.ascbottom_long.insert(a);
            }
            if a + 1 == b {
                s.r.insert(b);
            } else if pos[b - 1] > j {
                s.p.insert(b);
            } else {
                s.q.insert(b);
            }
        } else {
            s.des.insert(b);
        }
    }

    for v in s.asc_silly {
        if pos[v + 1] < pos[v] {
            s.p_silly.insert(v);
        } else {
            s.q_silly.insert(v);
        }
    }

    let (mut lo, mut hi) = (usize::MAX, 0);
    for &v in w.iter().rev() {
        if v < lo {
            lo = v;
            s.rmin.insert(v);
        }
        if v > hi {
            hi = v;
            s.rmax.insert(v);
        }
    }
    s
}

/// Statistics of a matching. All sets hold arc indices (arcs are indexed by
/// increasing closer); left adjacencies are indexed by the arc whose opener
/// comes first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MatchStats {
    pub n: usize,
    pub radj: PosSet,
    pub ladj: PosSet,
    pub rne: PosSet,
    pub rcr: PosSet,
    pub lcr: PosSet,
    pub lrcr: PosSet,
    pub rcr_single: PosSet,
    pub lcr_single: PosSet,
    pub min: PosSet,
    pub comp: usize,
    pub has_left_nesting: bool,
}

impl MatchStats {
    pub fn min_count(&self) -> usize {
        self.min.len()
    }

    pub fn inter(&self) -> usize {
        self.n - self.radj.len()
    }
}

pub fn match_stats(m: &Matching) -> MatchStats {
    let n = m.size();
    let radj = m.right_adjacencies();
    let mut s = MatchStats {
        n,
        radj,
        ladj: PosSet::EMPTY,
        rne: PosSet::EMPTY,
        rcr: PosSet::EMPTY,
        lcr: PosSet::EMPTY,
        lrcr: PosSet::EMPTY,
        rcr_single: PosSet::EMPTY,
        lcr_single: PosSet::EMPTY,
        min: PosSet::EMPTY,
        comp: m.comp(),
        has_left_nesting: false,
    };

    for i in radj {
        let (prev, cur) = (m.opener(i - 1), m.opener(i));
        if cur < prev {
            s.rne.insert(i);
        } else {
            s.rcr.insert(i);
            if prev + 1 == cur {
                s.lrcr.insert(i);
            }
        }
    }

    let table = m.endpoints();
    for w in table[1..].windows(2) {
        if let (Endpoint::Opener(a), Endpoint::Opener(b)) = (w[0], w[1]) {
            s.ladj.insert(a);
            if m.closer(a) < m.closer(b) {
                s.lcr.insert(a);
            } else {
                s.has_left_nesting = true;
            }
        }
    }

    s.rcr_single = s.rcr.difference(s.lrcr);
    s.lcr_single = s.lcr.difference(s.lrcr.shift_down(1));
    let first_close = m.closer(1);
    s.min = (1..=n).filter(|&i| m.opener(i) < first_close).collect();
    s
}

/// Statistics of a filling. Sets hold column indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FillStats {
    pub n: usize,
    /// The lazy set of the shape.
    pub x: PosSet,
    pub min: PosSet,
    pub max: PosSet,
    pub rmax_count: usize,
    pub lmin_count: usize,
    /// Column-strict fillings only.
    pub rmax: Option<PosSet>,
    pub des: Option<PosSet>,
    pub asc: Option<PosSet>,
    pub rep: Option<PosSet>,
}

impl FillStats {
    fn column_strict<T>(v: Option<T>, what: &str) -> Result<T> {
        v.ok_or_else(|| Error::Precondition(format!("{what} needs a column-strict filling")))
    }

    pub fn rmax_set(&self) -> Result<PosSet> {
        Self::column_strict(self.rmax, "Rmax")
    }

    pub fn des_set(&self) -> Result<PosSet> {
        Self::column_strict(self.des, "Des")
    }

    pub fn asc_set(&self) -> Result<PosSet> {
        Self::column_strict(self.asc, "Asc")
    }

    pub fn rep_set(&self) -> Result<PosSet> {
        Self::column_strict(self.rep, "Rep")
    }
}

pub fn fill_stats(t: &Filling) -> FillStats {
    let l = t.len();
    let shape = t.shape();
    let mut s = FillStats {
        n: t.n(),
        x: t.lazy_set(),
        min: PosSet::EMPTY,
        max: PosSet::EMPTY,
        rmax_count: rmax(t),
        lmin_count: lmin(t),
        rmax: None,
        des: None,
        asc: None,
        rep: None,
    };
    for i in 1..=l {
        if t.has_dot(i, 1) {
            s.min.insert(i);
        }
        if t.has_dot(i, shape.height(i)) {
            s.max.insert(i);
        }
    }
    if let Some(alpha) = t.alpha_rows() {
        let (mut des, mut asc, mut rep) = (PosSet::EMPTY, PosSet::EMPTY, PosSet::EMPTY);
        for i in 2..=l {
            match alpha[i - 2].cmp(&alpha[i - 1]) {
                std::cmp::Ordering::Greater => des.insert(i),
                std::cmp::Ordering::Less => asc.insert(i),
                std::cmp::Ordering::Equal => rep.insert(i),
            }
        }
        let mut rmax = PosSet::EMPTY;
        let mut best = usize::MAX;
        for i in (1..=l).rev() {
            let depth = shape.height(i) - alpha[i - 1];
            if depth < best {
                rmax.insert(i);
                best = depth;
            }
        }
        s.des = Some(des);
        s.asc = Some(asc);
        s.rep = Some(rep);
        s.rmax = Some(rmax);
    }
    s
}

/// Dots strictly closer to the top of their column than every dot strictly
/// to the right.
pub fn rmax(t: &Filling) -> usize {
    let shape = t.shape();
    let mut count = 0;
    let mut best = usize::MAX;
    for i in (1..=t.len()).rev() {
        let col = t.alpha()[i - 1];
        let h = shape.height(i);
        count += col.iter().filter(|&j| h - j < best).count();
        if let Some(top) = col.last() {
            best = best.min(h - top);
        }
    }
    count
}

/// Dots strictly to the left of every dot strictly below.
pub fn lmin(t: &Filling) -> usize {
    let mut count = 0;
    let mut leftmost_below = usize::MAX;
    for j in 1..=t.shape().num_rows() {
        let row = t.row(j);
        count += row.iter().filter(|&i| i < leftmost_below).count();
        if let Some(i) = row.first() {
            leftmost_below = leftmost_below.min(i);
        }
    }
    count
}
