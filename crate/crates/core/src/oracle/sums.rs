//! Weighted sums over whole families, the enumeration side of every
//! commutative identity.

use rayon::prelude::*;

use super::enumerate::{nlm_matchings, perms};
use crate::error::Result;
use crate::poly::Poly;
use crate::statistics::{match_stats, perm_stats, MatchStats, PermStats};

fn merge(mut a: Poly, b: Poly) -> Poly {
    a += &b;
    a
}

/// `Σ_{π ∈ S_n} weight(π)`.
pub fn perm_sum(n: usize, weight: impl Fn(&PermStats) -> Poly + Sync) -> Result<Poly> {
    Ok(perms(n)?
        .par_iter()
        .map(|pi| weight(&perm_stats(pi)))
        .reduce(Poly::zero, merge))
}

/// `Σ_{M ∈ N_n} weight(M)` over matchings without left nestings.
pub fn matching_sum(n: usize, weight: impl Fn(&MatchStats) -> Poly + Sync) -> Result<Poly> {
    Ok(nlm_matchings(n)?
        .par_iter()
        .map(|m| weight(&match_stats(m)))
        .reduce(Poly::zero, merge))
}
