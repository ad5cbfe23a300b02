use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{nlm_matchings, perms, Family};
use super::stats::{lookup, Stat, StatValue};
use crate::error::Result;
use crate::objects::{Matching, Permutation};
use crate::statistics::{match_stats, perm_stats};

pub type Key = Vec<StatValue>;

/// Joint distribution of a list of statistics over one family and size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Distribution {
    pub family: Family,
    pub n: usize,
    pub key_schema: Vec<String>,
    #[serde(serialize_with = "serialize_counts")]
    pub counts: BTreeMap<Key, u64>,
}

fn serialize_counts<S: serde::Serializer>(
    counts: &BTreeMap<Key, u64>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a> {
        key: &'a [StatValue],
        count: u64,
    }
    serializer.collect_seq(counts.iter().map(|(k, &count)| Entry { key: k, count }))
}

fn merge(mut a: BTreeMap<Key, u64>, b: BTreeMap<Key, u64>) -> BTreeMap<Key, u64> {
    for (k, c) in b {
        *a.entry(k).or_insert(0) += c;
    }
    a
}

fn tally<T: Sync>(items: &[T], key: impl Fn(&T) -> Key + Sync) -> BTreeMap<Key, u64> {
    items
        .par_iter()
        .fold(BTreeMap::new, |mut acc, t| {
            *acc.entry(key(t)).or_insert(0) += 1;
            acc
        })
        .reduce(BTreeMap::new, merge)
}

fn perm_key(stats: &[Stat], pi: &Permutation) -> Key {
    let st = perm_stats(pi);
    stats
        .iter()
        .map(|s| match s {
            Stat::Perm(f) => f(&st),
            Stat::Match(_) => unreachable!("perm schema"),
        })
        .collect()
}

fn match_key(stats: &[Stat], m: &Matching) -> Key {
    let st = match_stats(m);
    stats
        .iter()
        .map(|s| match s {
            Stat::Match(f) => f(&st),
            Stat::Perm(_) => unreachable!("matching schema"),
        })
        .collect()
}

fn resolve(family: Family, schema: &[&str]) -> Result<Vec<Stat>> {
    schema.iter().map(|s| lookup(family, s)).collect()
}

fn build(family: Family, n: usize, schema: &[&str], counts: BTreeMap<Key, u64>) -> Distribution {
    Distribution {
        family,
        n,
        key_schema: schema.iter().map(|s| s.to_string()).collect(),
        counts,
    }
}

/// Keys of all objects of `family` of size `n`, counted.
pub fn distribution(family: Family, n: usize, schema: &[&str]) -> Result<Distribution> {
    let stats = resolve(family, schema)?;
    let counts = match family {
        Family::Perms => tally(&perms(n)?, |pi| perm_key(&stats, pi)),
        Family::NlmMatchings => tally(&nlm_matchings(n)?, |m| match_key(&stats, m)),
    };
    Ok(build(family, n, schema, counts))
}

/// As [`distribution`], over an explicit list of matchings of size `n`.
pub fn matching_distribution(n: usize, matchings: &[Matching], schema: &[&str]) -> Result<Distribution> {
    let stats = resolve(Family::NlmMatchings, schema)?;
    let counts = tally(matchings, |m| match_key(&stats, m));
    Ok(build(Family::NlmMatchings, n, schema, counts))
}

impl Distribution {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// A key as text: entries joined by `|`.
    pub fn key_string(key: &[StatValue]) -> String {
        key.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("|")
    }

    /// Rows `(n, key, count)` in key order.
    pub fn rows(&self) -> Vec<(usize, String, u64)> {
        self.counts
            .iter()
            .map(|(k, &c)| (self.n, Self::key_string(k), c))
            .collect()
    }

    /// First key whose multiplicity differs between the two distributions,
    /// with both multiplicities.
    pub fn first_difference(&self, other: &Distribution) -> Option<(Key, u64, u64)> {
        let keys: std::collections::BTreeSet<&Key> = self.counts.keys().chain(other.counts.keys()).collect();
        keys.into_iter().find_map(|k| {
            let a = self.counts.get(k).copied().unwrap_or(0);
            let b = other.counts.get(k).copied().unwrap_or(0);
            (a != b).then(|| (k.clone(), a, b))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::posset::PosSet;

    #[test]
    fn small_cases() {
        let d = distribution(Family::Perms, 2, &["p_silly"]).unwrap();
        assert_eq!(d.counts, BTreeMap::from([(vec![StatValue::Count(0)], 2)]));
        let d = distribution(Family::Perms, 1, &["P", "Q", "R"]).unwrap();
        let empty = StatValue::Set(PosSet::new());
        assert_eq!(d.counts, BTreeMap::from([(vec![empty; 3], 1)]));
    }

    #[test]
    fn totals_are_factorials() {
        assert_eq!(distribution(Family::Perms, 5, &["Asc", "rmin"]).unwrap().total(), 120);
        assert_eq!(
            distribution(Family::NlmMatchings, 5, &["Lcr", "min"]).unwrap().total(),
            120
        );
    }

    #[test]
    fn rne_matches_p_silly_at_seven() {
        let m = distribution(Family::NlmMatchings, 7, &["rne"]).unwrap();
        let p = distribution(Family::Perms, 7, &["p_silly"]).unwrap();
        assert_eq!(m.counts, p.counts);
        assert_eq!(m.counts[&vec![StatValue::Count(0)]], 1014);
        let six = distribution(Family::NlmMatchings, 6, &["rne"]).unwrap();
        assert_eq!(six.counts[&vec![StatValue::Count(0)]], 217);
    }

    #[test]
    fn filtered_matchings_give_the_same_distribution() {
        let ms = super::super::enumerate::nlm_matchings_by_filter(5).unwrap();
        let a = matching_distribution(5, &ms, &["Lcr", "rcr"]).unwrap();
        assert_eq!(a, distribution(Family::NlmMatchings, 5, &["Lcr", "rcr"]).unwrap());
    }

    #[test]
    fn difference_report() {
        let a = distribution(Family::Perms, 3, &["asc"]).unwrap();
        let b = distribution(Family::Perms, 3, &["des"]).unwrap();
        assert!(a.first_difference(&b).is_none());
        let c = distribution(Family::Perms, 3, &["rmin"]).unwrap();
        assert!(a.first_difference(&c).is_some());
    }
}
