use crate::error::{Error, Result};
use crate::objects::{Endpoint, Matching, Permutation};

/// Bijection from matchings without left nestings to permutations taking
/// left crossings to ascent bottoms.
///
/// Arcs are added in order of their closers. When arc `i` opens right before
/// the closer of arc `j`:
/// - if `j = i`, value `i` goes to the far left;
/// - if the point before the opener of arc `i` is a closer, `i` goes
///   immediately left of `j`;
/// - otherwise that point opens some arc `k`, and `i` goes immediately right
///   of `k`.
pub fn leftcross_to_perm(m: &Matching) -> Result<Permutation> {
    if m.has_left_nesting() {
        return Err(Error::Precondition(format!(
            "leftcross_to_perm needs a matching without left nestings, got {m}"
        )));
    }
    let n = m.size();
    let table = m.endpoints();
    // Points of later arcs are ignored; earlier arcs keep their relative
    // order, so neighbours are looked up by skipping later arcs' points.
    let mut word: Vec<usize> = Vec::with_capacity(n);
    for i in 1..=n {
        let o = m.opener(i);
        let live = |p: usize| match table[p] {
            Endpoint::Opener(a) | Endpoint::Closer(a) => a <= i,
        };
        let next = (o + 1..=m.closer(i)).find(|&p| live(p)).unwrap();
        let j = match table[next] {
            Endpoint::Closer(j) => j,
            Endpoint::Opener(_) => unreachable!("a live opener after arc {i} would nest"),
        };
        let prev = (1..o).rev().find(|&p| live(p)).map(|p| table[p]);
        let at = if j == i {
            0
        } else {
            match prev {
                Some(Endpoint::Opener(k)) => word.iter().position(|&v| v == k).unwrap() + 1,
                _ => word.iter().position(|&v| v == j).unwrap(),
            }
        };
        word.insert(at, i);
    }
    Permutation::new(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::posset::PosSet;
    use crate::statistics::{match_stats, perm_stats};

    #[test]
    fn single_arc() {
        let m = Matching::new(vec![(1, 2)]).unwrap();
        assert_eq!(leftcross_to_perm(&m).unwrap().word(), &[1]);
    }

    #[test]
    fn figure_matching() {
        let m = Matching::new(vec![
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
        .unwrap();
        let pi = leftcross_to_perm(&m).unwrap();
        assert_eq!(perm_stats(&pi).ascbottom, match_stats(&m).lcr);
        assert_eq!(match_stats(&m).lcr, PosSet::from([1, 2, 3, 5, 6]));
    }
}
