//! Named statistics for distribution keys. Lowercase names are counts,
//! capitalized names are sets.

use std::fmt;

use serde::{Serialize, Serializer};

use super::enumerate::Family;
use crate::error::{Error, Result};
use crate::posset::PosSet;
use crate::statistics::{MatchStats, PermStats};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StatValue {
    Count(usize),
    Set(PosSet),
}

impl fmt::Display for StatValue {
    /// Counts print as numbers, sets as sorted comma-joined elements.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatValue::Count(k) => write!(f, "{k}"),
            StatValue::Set(s) => {
                let parts: Vec<String> = s.iter().map(|i| i.to_string()).collect();
                f.write_str(&parts.join(","))
            }
        }
    }
}

impl Serialize for StatValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            StatValue::Count(k) => serializer.serialize_u64(*k as u64),
            StatValue::Set(s) => s.serialize(serializer),
        }
    }
}

fn perm_set(name: &str) -> Option<fn(&PermStats) -> PosSet> {
    Some(match name {
        "Asc" => |s| s.asc,
        "Des" => |s| s.des,
        "P" => |s| s.p,
        "Q" => |s| s.q,
        "R" | "AdjAsc" => |s| s.r,
        "Asc_proper" => |s| s.p.union(s.q),
        "Asc_silly" => |s| s.asc_silly,
        "P_silly" => |s| s.p_silly,
        "Q_silly" => |s| s.q_silly,
        "P_silly+" => |s| s.p_silly.shift_up(1),
        "Q_silly+" => |s| s.q_silly.shift_up(1),
        "Rmin" => |s| s.rmin,
        "Rmax" => |s| s.rmax,
        "Ascbottom" => |s| s.ascbottom,
        "Ascbottom_long" => |s| s.ascbottom_long,
        "Ascbottom_short" => |s| s.ascbottom_short(),
        _ => return None,
    })
}

fn match_set(name: &str) -> Option<fn(&MatchStats) -> PosSet> {
    Some(match name {
        "Radj" => |s| s.radj,
        "Ladj" => |s| s.ladj,
        "Rne" => |s| s.rne,
        "Rcr" => |s| s.rcr,
        "Lcr" => |s| s.lcr,
        "LRcr" => |s| s.lrcr,
        "Rcr_single" => |s| s.rcr_single,
        "Lcr_single" => |s| s.lcr_single,
        "Min" => |s| s.min,
        _ => return None,
    })
}

/// Lowercase count names map to the set of the same name, plus a few
/// counts without a set.
fn capitalize(name: &str) -> String {
    match name {
        "adjasc" => "AdjAsc".into(),
        "lrcr" => "LRcr".into(),
        "asc_proper" | "ascproper" => "Asc_proper".into(),
        "rcr'" | "rcr_proper" => "Rcr_single".into(),
        "lcr'" | "lcr_proper" => "Lcr_single".into(),
        "ascbottom'" => "Ascbottom_long".into(),
        _ => {
            let mut c = name.chars();
            match c.next() {
                Some(f) => f.to_uppercase().chain(c).collect(),
                None => String::new(),
            }
        }
    }
}

type Getter<T> = Box<dyn Fn(&T) -> StatValue + Send + Sync>;

fn count_of<T: 'static>(set: Option<fn(&T) -> PosSet>) -> Option<Getter<T>> {
    set.map(|f| Box::new(move |s: &T| StatValue::Count(f(s).len())) as Getter<T>)
}

/// A statistic of one family, looked up by name.
pub enum Stat {
    Perm(Getter<PermStats>),
    Match(Getter<MatchStats>),
}

pub fn lookup(family: Family, name: &str) -> Result<Stat> {
    let unknown = || Error::Unknown(format!("statistic `{name}` for {}", family.name()));
    let is_count = name.chars().next().is_some_and(|c| c.is_lowercase());
    match family {
        Family::Perms => {
            let f: Getter<PermStats> = match name {
                "comp" => Box::new(|s| StatValue::Count(s.comp)),
                "n" => Box::new(|s| StatValue::Count(s.n)),
                _ if is_count => count_of(perm_set(&capitalize(name))).ok_or_else(unknown)?,
                _ => {
                    let g = perm_set(name).ok_or_else(unknown)?;
                    Box::new(move |s| StatValue::Set(g(s)))
                }
            };
            Ok(Stat::Perm(f))
        }
        Family::NlmMatchings => {
            let f: Getter<MatchStats> = match name {
                "comp" => Box::new(|s| StatValue::Count(s.comp)),
                "n" => Box::new(|s| StatValue::Count(s.n)),
                "inter" => Box::new(|s| StatValue::Count(s.inter())),
                _ if is_count => count_of(match_set(&capitalize(name))).ok_or_else(unknown)?,
                _ => {
                    let g = match_set(name).ok_or_else(unknown)?;
                    Box::new(move |s| StatValue::Set(g(s)))
                }
            };
            Ok(Stat::Match(f))
        }
    }
}

/// Every statistic name accepted for `family`.
pub fn names(family: Family) -> Vec<&'static str> {
    let sets: &[&str] = match family {
        Family::Perms => &[
            "Asc",
            "Des",
            "P",
            "Q",
            "R",
            "Asc_proper",
            "Asc_silly",
            "P_silly",
            "Q_silly",
            "P_silly+",
            "Q_silly+",
            "Rmin",
            "Rmax",
            "Ascbottom",
            "Ascbottom_long",
            "Ascbottom_short",
        ],
        Family::NlmMatchings => &[
            "Radj",
            "Ladj",
            "Rne",
            "Rcr",
            "Lcr",
            "LRcr",
            "Rcr_single",
            "Lcr_single",
            "Min",
        ],
    };
    let counts: &[&str] = match family {
        Family::Perms => &[
            "n",
            "comp",
            "asc",
            "des",
            "p",
            "q",
            "r",
            "adjasc",
            "asc_proper",
            "asc_silly",
            "p_silly",
            "q_silly",
            "rmin",
            "rmax",
            "ascbottom",
            "ascbottom_long",
            "ascbottom_short",
        ],
        Family::NlmMatchings => &[
            "n",
            "comp",
            "inter",
            "radj",
            "ladj",
            "rne",
            "rcr",
            "lcr",
            "lrcr",
            "rcr_single",
            "lcr_single",
            "min",
        ],
    };
    counts.iter().chain(sets).copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_name_resolves() {
        for family in [Family::Perms, Family::NlmMatchings] {
            for name in names(family) {
                assert!(lookup(family, name).is_ok(), "{name}");
            }
        }
        assert!(lookup(Family::Perms, "Rne").is_err());
        assert!(lookup(Family::NlmMatchings, "bogus").is_err());
    }

    #[test]
    fn display() {
        assert_eq!(StatValue::Count(3).to_string(), "3");
        assert_eq!(StatValue::Set(PosSet::from([1, 4])).to_string(), "1,4");
        assert_eq!(StatValue::Set(PosSet::new()).to_string(), "");
    }
}
