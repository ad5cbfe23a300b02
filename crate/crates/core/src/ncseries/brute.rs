//! Position-refined generating series built by enumeration.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{NCSeries, Word};
use crate::error::Result;
use crate::oracle::enumerate::{nlm_matchings, perms};
use crate::poly::{Monomial, Poly, Var};
use crate::posset::PosSet;
use crate::statistics::{match_stats, perm_stats};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesFamily {
    Perms,
    NlmMatchings,
}

/// Which sets mark the letters of each object's word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Refinement {
    /// `[x^P y^Q z^R; t]` and `[x^Rne y^Rcr′ z^LRcr; t]`.
    Pqr,
    /// `s^rmin [x^P y^(Q∪R); t]` and `s^min [x^Rne y^Rcr; t]`.
    SillyS,
    /// `s^rmin [x^(P_silly⁺) y^(Q_silly⁺); t]`; on matchings the same as
    /// [`Refinement::SillyS`].
    SillyHatS,
    /// `[υ^Ascbottom′ z^(R-1); t]` and `[υ^Lcr′ z^(LRcr-1); t]`.
    AscentBottom,
}

impl Refinement {
    pub fn alphabet(self) -> &'static [&'static str] {
        match self {
            Refinement::Pqr => &["x", "y", "z", "t"],
            Refinement::SillyS | Refinement::SillyHatS => &["x", "y", "t"],
            Refinement::AscentBottom => &["υ", "z", "t"],
        }
    }
}

/// One word per object: letter `k` of the marking sets at the positions in
/// `sets[k]`, and the last letter of the alphabet everywhere else.
fn word(n: usize, sets: &[PosSet]) -> Word {
    let rest = sets.len() as u8;
    Word::from_indices(
        (1..=n)
            .map(|i| sets.iter().position(|s| s.contains(i)).map_or(rest, |k| k as u8))
            .collect(),
    )
}

fn s_power(k: usize) -> Poly {
    Poly::term(Monomial::var_pow(Var::S, k as u8), 1)
}

fn marks(family: SeriesFamily, n: usize, refinement: Refinement) -> Result<Vec<(Word, Poly)>> {
    Ok(match family {
        SeriesFamily::Perms => perms(n)?
            .par_iter()
            .map(|pi| {
                let st = perm_stats(pi);
                match refinement {
                    Refinement::Pqr => (word(n, &[st.p, st.q, st.r]), Poly::one()),
                    Refinement::SillyS => (word(n, &[st.p, st.q.union(st.r)]), s_power(st.rmin.len())),
                    Refinement::SillyHatS => (
                        word(n, &[st.p_silly.shift_up(1), st.q_silly.shift_up(1)]),
                        s_power(st.rmin.len()),
                    ),
                    Refinement::AscentBottom => (word(n, &[st.ascbottom_long, st.ascbottom_short()]), Poly::one()),
                }
            })
            .collect(),
        SeriesFamily::NlmMatchings => nlm_matchings(n)?
            .par_iter()
            .map(|m| {
                let st = match_stats(m);
                match refinement {
                    Refinement::Pqr => (word(n, &[st.rne, st.rcr_single, st.lrcr]), Poly::one()),
                    Refinement::SillyS | Refinement::SillyHatS => (word(n, &[st.rne, st.rcr]), s_power(st.min.len())),
                    Refinement::AscentBottom => (word(n, &[st.lcr_single, st.lrcr.shift_down(1)]), Poly::one()),
                }
            })
            .collect(),
    })
}

/// `Σ_{n ≤ n_max} Σ_objects coefficient · word`, over the alphabet of
/// `refinement` and truncated at degree `n_max`.
pub fn brute_series(family: SeriesFamily, n_max: usize, refinement: Refinement) -> Result<NCSeries> {
    let mut out = NCSeries::zero(refinement.alphabet(), n_max);
    for n in 1..=n_max {
        let mut terms: BTreeMap<Word, Poly> = BTreeMap::new();
        for (w, c) in marks(family, n, refinement)? {
            *terms.entry(w).or_insert_with(Poly::zero) += &c;
        }
        for (w, c) in terms {
            out.add_term(w, &c);
        }
    }
    Ok(out)
}
