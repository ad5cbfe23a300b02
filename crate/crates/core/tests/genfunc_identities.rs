use equistat::genfunc::{
    eval_conj20_formula, eval_conj21_identity, eval_fishburn, eval_leftcrossing, eval_theorem_main_sxy,
    eval_theorem_main_xyz, CommSeries, LeftCrossingVariant,
};
use equistat::ncseries::{eval_ascentbottom_nc, eval_main, Variant};
use equistat::oracle::enumerate::{nlm_matchings, perms};
use equistat::poly::{Poly, Var};
use equistat::statistics::{match_stats, perm_stats, MatchStats, PermStats};
use num_bigint::BigInt;

fn over_perms(n: usize, w: impl Fn(&PermStats) -> Vec<(Var, usize)>) -> Poly {
    let mut total = Poly::zero();
    for pi in perms(n).unwrap() {
        total += &Poly::monomial(&w(&perm_stats(&pi)));
    }
    total
}

fn over_matchings(n: usize, w: impl Fn(&MatchStats) -> Vec<(Var, usize)>) -> Poly {
    let mut total = Poly::zero();
    for m in nlm_matchings(n).unwrap() {
        total += &Poly::monomial(&w(&match_stats(&m)));
    }
    total
}

use Var::{Upsilon as U, R, S, W, X, Y, Z};

#[test]
fn main_xyz_matches_enumeration() {
    let f = eval_theorem_main_xyz(6).unwrap();
    for n in 1..=6 {
        let p = over_perms(n, |s| vec![(X, s.p.len()), (Y, s.q.len()), (Z, s.r.len())]);
        let m = over_matchings(n, |s| {
            vec![(X, s.rne.len()), (Y, s.rcr_single.len()), (Z, s.lrcr.len())]
        });
        assert_eq!(p, m, "n = {n}");
        assert_eq!(f.coeff(n), p, "n = {n}");
    }
}

#[test]
fn main_sxy_matches_enumeration() {
    let f = eval_theorem_main_sxy(6).unwrap();
    for n in 1..=6 {
        let p = over_perms(n, |s| {
            vec![(S, s.rmin.len()), (X, s.p.len()), (Y, s.q.len() + s.r.len())]
        });
        let silly = over_perms(n, |s| {
            vec![(S, s.rmin.len()), (X, s.p_silly.len()), (Y, s.q_silly.len())]
        });
        let m = over_matchings(n, |s| vec![(S, s.min.len()), (X, s.rne.len()), (Y, s.rcr.len())]);
        assert_eq!(p, silly, "n = {n}");
        assert_eq!(p, m, "n = {n}");
        assert_eq!(f.coeff(n), p, "n = {n}");
        let rmin_only = over_perms(n, |s| vec![(S, s.rmin.len())]);
        assert_eq!(f.coeff(n).eval_var(X, 1).eval_var(Y, 1), rmin_only);
    }
}

#[test]
fn conj20_matches_enumeration() {
    let f = eval_conj20_formula(6).unwrap();
    for n in 1..=6 {
        let p = over_perms(n, |s| vec![(R, s.comp), (S, s.rmax.len()), (X, s.p_silly.len())]);
        let m = over_matchings(n, |s| vec![(R, s.comp), (S, s.min.len()), (X, s.rne.len())]);
        assert_eq!(p, m, "n = {n}");
        assert_eq!(f.coeff(n), p, "n = {n}");
    }
}

#[test]
fn fishburn_matches_enumeration() {
    let f = eval_fishburn(8);
    for n in 1..=7 {
        let p = perms(n)
            .unwrap()
            .iter()
            .filter(|pi| perm_stats(pi).p.is_empty())
            .count();
        let m = nlm_matchings(n)
            .unwrap()
            .iter()
            .filter(|m| match_stats(m).rne.is_empty())
            .count();
        assert_eq!(BigInt::from(p), f[n]);
        assert_eq!(BigInt::from(m), f[n]);
    }
}

#[test]
fn conj21_tables_agree() {
    for n in 1..=6 {
        let (p, m) = eval_conj21_identity(n).unwrap();
        assert_eq!(p, m, "n = {n}");
        let direct = over_perms(n, |s| {
            vec![(S, s.rmin.len()), (X, s.p_silly.len()), (W, s.n - 1 - s.asc.len())]
        });
        assert_eq!(p, direct);
    }
}

#[test]
fn leftcrossing_matches_enumeration() {
    let xyzu = eval_leftcrossing(6, LeftCrossingVariant::Xyzu).unwrap();
    let sxyu = eval_leftcrossing(6, LeftCrossingVariant::Sxyu).unwrap();
    for n in 1..=6 {
        let p = over_perms(n, |s| {
            vec![
                (X, s.p.len()),
                (Y, s.q.len()),
                (Z, s.r.len()),
                (U, s.p.len() + s.q.len()),
            ]
        });
        let m = over_matchings(n, |s| {
            vec![
                (X, s.rne.len()),
                (Y, s.rcr_single.len()),
                (Z, s.lrcr.len()),
                (U, s.lcr_single.len()),
            ]
        });
        assert_eq!(p, m, "n = {n}");
        assert_eq!(xyzu.coeff(n), p, "n = {n}");

        let p = over_perms(n, |s| {
            vec![
                (S, s.rmin.len()),
                (X, s.p_silly.len()),
                (Y, s.q_silly.len()),
                (U, s.asc.len()),
            ]
        });
        let m = over_matchings(n, |s| {
            vec![(S, s.min.len()), (X, s.rne.len()), (Y, s.rcr.len()), (U, s.lcr.len())]
        });
        assert_eq!(p, m, "n = {n}");
        assert_eq!(sxyu.coeff(n), p, "n = {n}");
    }
    // υ = 1 gives back the main formula
    assert_eq!(
        xyzu.substitute(|v| if v == U { Poly::one() } else { Poly::var(v) }),
        eval_theorem_main_xyz(6).unwrap()
    );
}

fn letter_images(max_n: usize, polys: &[Poly]) -> Vec<CommSeries> {
    polys
        .iter()
        .map(|p| CommSeries::monomial(max_n, p.clone(), 1))
        .collect()
}

#[test]
fn abelianized_noncommutative_series_agree() {
    let d = 5;
    let x = Poly::var(X);
    let y = Poly::var(Y);
    let z = Poly::var(Z);
    let one = Poly::one();
    // u → (x-y)t, v → (y-1)t, w → (z-y)t, t → t
    let images = letter_images(d, &[&x - &y, &y - &one, &z - &y, one.clone()]);
    let nc = eval_main(Variant::GeneralW, d).unwrap();
    assert_eq!(
        CommSeries::abelianize(&nc, &images).unwrap(),
        eval_theorem_main_xyz(d).unwrap()
    );

    let images = letter_images(d, &[&x - &y, &y - &one, one.clone()]);
    let nc = eval_main(Variant::SillyS, d).unwrap();
    assert_eq!(
        CommSeries::abelianize(&nc, &images).unwrap(),
        eval_theorem_main_sxy(d).unwrap()
    );

    // υ → υt, z → zt against the υ-theorem at x = y = 1
    let u = Poly::var(U);
    let images = letter_images(d, &[u, z, one]);
    let nc = eval_ascentbottom_nc(d).unwrap();
    let lc = eval_leftcrossing(d, LeftCrossingVariant::Xyzu)
        .unwrap()
        .substitute(|v| if v == X || v == Y { Poly::one() } else { Poly::var(v) });
    assert_eq!(CommSeries::abelianize(&nc, &images).unwrap(), lc);
}
