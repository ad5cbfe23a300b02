//! Commutative generating functions: power series in `t` whose coefficients
//! are polynomials in the statistic variables.
//!
//! Quotients by `x - y`, `y - 1` and similar factors are exact polynomial
//! divisions; a coefficient that fails to divide is an error.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ncseries::NCSeries;
use crate::oracle::sums::{matching_sum, perm_sum};
use crate::poly::{Poly, Var};

/// A power series in `t` truncated after `t^max_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommSeries {
    max_n: usize,
    coeffs: Vec<Poly>,
}

impl CommSeries {
    pub fn zero(max_n: usize) -> Self {
        CommSeries {
            max_n,
            coeffs: vec![Poly::zero(); max_n + 1],
        }
    }

    pub fn constant(max_n: usize, c: Poly) -> Self {
        let mut s = Self::zero(max_n);
        s.coeffs[0] = c;
        s
    }

    pub fn one(max_n: usize) -> Self {
        Self::constant(max_n, Poly::one())
    }

    /// `c · t^k`.
    pub fn monomial(max_n: usize, c: Poly, k: usize) -> Self {
        let mut s = Self::zero(max_n);
        if k <= max_n {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn t(max_n: usize) -> Self {
        Self::monomial(max_n, Poly::one(), 1)
    }

    /// Builds a series from the coefficients of `t^0, t^1, …`.
    pub fn from_coeffs(max_n: usize, coeffs: Vec<Poly>) -> Self {
        let mut s = Self::zero(max_n);
        for (k, c) in coeffs.into_iter().enumerate().take(max_n + 1) {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// Coefficient of `t^n`; zero beyond the truncation.
    pub fn coeff(&self, n: usize) -> Poly {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn add(&self, other: &CommSeries) -> CommSeries {
        let max_n = self.max_n.min(other.max_n);
        CommSeries {
            max_n,
            coeffs: (0..=max_n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect(),
        }
    }

    pub fn sub(&self, other: &CommSeries) -> CommSeries {
        let max_n = self.max_n.min(other.max_n);
        CommSeries {
            max_n,
            coeffs: (0..=max_n).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect(),
        }
    }

    pub fn mul(&self, other: &CommSeries) -> CommSeries {
        let max_n = self.max_n.min(other.max_n);
        let mut out = Self::zero(max_n);
        for i in 0..=max_n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=max_n - i {
                out.coeffs[i + j].add_product(&self.coeffs[i], &other.coeffs[j]);
            }
        }
        out
    }

    pub fn scale(&self, c: &Poly) -> CommSeries {
        CommSeries {
            max_n: self.max_n,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> CommSeries {
        let mut acc = Self::one(self.max_n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; the constant term must be `±1`.
    pub fn inverse(&self) -> Result<CommSeries> {
        let c0 = self.coeffs[0]
            .as_constant()
            .filter(|c| c == &BigInt::from(1) || c == &BigInt::from(-1))
            .ok_or_else(|| Error::NonUnitConstant(self.coeffs[0].to_string()))?;
        let mut out = Self::zero(self.max_n);
        out.coeffs[0] = Poly::constant(c0.clone());
        for k in 1..=self.max_n {
            let mut acc = Poly::zero();
            for j in 1..=k {
                acc.add_product(&self.coeffs[j], &out.coeffs[k - j]);
            }
            // c0 = ±1, so dividing by c0 is multiplying by it
            out.coeffs[k] = acc.scale(&-c0.clone());
        }
        Ok(out)
    }

    /// Divides every coefficient exactly by `d`.
    pub fn div_exact(&self, d: &Poly) -> Result<CommSeries> {
        Ok(CommSeries {
            max_n: self.max_n,
            coeffs: self.coeffs.iter().map(|a| a.div_exact(d)).collect::<Result<_>>()?,
        })
    }

    pub fn substitute(&self, image: impl Fn(Var) -> Poly) -> CommSeries {
        CommSeries {
            max_n: self.max_n,
            coeffs: self.coeffs.iter().map(|a| a.substitute(&image)).collect(),
        }
    }

    /// Replaces each letter of a noncommutative series by a commutative
    /// series. `images` is indexed like the series' alphabet.
    pub fn abelianize(s: &NCSeries, images: &[CommSeries]) -> Result<CommSeries> {
        let alphabet = s.alphabet();
        if images.len() != alphabet.len() {
            return Err(Error::Precondition(format!(
                "{} images for an alphabet of {} letters",
                images.len(),
                alphabet.len()
            )));
        }
        let max_n = images.iter().map(|i| i.max_n).min().unwrap_or(0);
        let mut out = Self::zero(max_n);
        for (w, c) in s.terms() {
            let mut term = Self::constant(max_n, c.clone());
            for &l in w.letters() {
                term = term.mul(&images[l as usize]);
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Rows `(n, monomial, coefficient)` for `n ≥ 1`, monomials in
    /// increasing order.
    pub fn table(&self) -> Vec<TableRow> {
        let mut rows = Vec::new();
        for (n, c) in self.coeffs.iter().enumerate().skip(1) {
            for (m, k) in c.terms() {
                rows.push(TableRow {
                    n,
                    monomial: m.to_csv(),
                    coefficient: k.to_string(),
                });
            }
        }
        rows
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: usize,
    pub monomial: String,
    pub coefficient: String,
}

fn var(v: Var) -> Poly {
    Poly::var(v)
}

fn c(k: i64) -> Poly {
    Poly::constant(k)
}

/// `Σ_{m≥1} Π_{k=1..m} factor(k)`; every factor starts at `t^1`, so `m`
/// stops at `max_n`.
fn sum_of_products(max_n: usize, factor: impl Fn(u32) -> Result<CommSeries>) -> Result<CommSeries> {
    let mut total = CommSeries::zero(max_n);
    let mut product = CommSeries::one(max_n);
    for k in 1..=max_n as u32 {
        product = product.mul(&factor(k)?);
        total = total.add(&product);
    }
    Ok(total)
}

/// `(1/b)[(1 - (b/a)·H)⁻¹ - 1]` where `H` has zero constant term and every
/// coefficient divisible by `a`.
fn block_factor(h: &CommSeries, a: &Poly, b: &Poly) -> Result<CommSeries> {
    let g = h.div_exact(a)?.scale(b);
    let one = CommSeries::one(h.max_n);
    one.sub(&g).inverse()?.sub(&one).div_exact(b)
}

/// `H_k = (1 + a·t/(1 - c·t))^k - 1`.
fn h_general(max_n: usize, k: u32, a: &Poly, cc: &Poly) -> Result<CommSeries> {
    let one = CommSeries::one(max_n);
    let t = CommSeries::t(max_n);
    let inner = one.sub(&t.scale(cc)).inverse()?;
    Ok(one.add(&t.mul(&inner).scale(a)).pow(k).sub(&one))
}

/// `H_k = (1 + a·t)^(k-1)(1 + a·s·t) - 1`.
fn h_silly(max_n: usize, k: u32, a: &Poly, s: &Poly) -> CommSeries {
    let one = CommSeries::one(max_n);
    let t = CommSeries::t(max_n);
    one.add(&t.scale(a))
        .pow(k - 1)
        .mul(&one.add(&t.scale(&(a * s))))
        .sub(&one)
}

/// `Σ_π x^p y^q z^adjasc t^n`, from the closed product formula.
pub fn eval_theorem_main_xyz(max_n: usize) -> Result<CommSeries> {
    let a = &var(Var::X) - &var(Var::Y);
    let b = &var(Var::Y) - &c(1);
    let cc = &var(Var::Z) - &var(Var::Y);
    sum_of_products(max_n, |k| block_factor(&h_general(max_n, k, &a, &cc)?, &a, &b))
}

/// `Σ_M s^min x^rne y^rcr t^n`, from the closed product formula.
pub fn eval_theorem_main_sxy(max_n: usize) -> Result<CommSeries> {
    let a = &var(Var::X) - &var(Var::Y);
    let b = &var(Var::Y) - &c(1);
    sum_of_products(max_n, |k| block_factor(&h_silly(max_n, k, &a, &var(Var::S)), &a, &b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LeftCrossingVariant {
    /// `x^rne y^rcr′ z^lrcr υ^lcr′`.
    Xyzu,
    /// `s^min x^rne y^rcr υ^lcr`.
    Sxyu,
}

/// The `υ`-refined versions of the two main formulas (without the constant
/// term).
pub fn eval_leftcrossing(max_n: usize, variant: LeftCrossingVariant) -> Result<CommSeries> {
    let u = var(Var::Upsilon);
    let a = &u * &(&var(Var::X) - &var(Var::Y));
    let b = &(&u * &var(Var::Y)) - &c(1);
    match variant {
        LeftCrossingVariant::Xyzu => {
            let cc = &var(Var::Z) - &(&var(Var::Y) * &u);
            sum_of_products(max_n, |k| block_factor(&h_general(max_n, k, &a, &cc)?, &a, &b))
        }
        LeftCrossingVariant::Sxyu => {
            sum_of_products(max_n, |k| block_factor(&h_silly(max_n, k, &a, &var(Var::S)), &a, &b))
        }
    }
}

/// `J(s) = Σ_m Π_k ((1 + t(x-1))^(k-1)(1 + st(x-1)) - 1)/(x - 1)`.
fn conj20_j(max_n: usize, s: &Poly) -> Result<CommSeries> {
    let a = &var(Var::X) - &c(1);
    sum_of_products(max_n, |k| h_silly(max_n, k, &a, s).div_exact(&a))
}

/// `r·J(s) / (1 + (1 - r)·J(1))`: `Σ_π r^comp s^rmax x^p_silly t^n`.
pub fn eval_conj20_formula(max_n: usize) -> Result<CommSeries> {
    let r = var(Var::R);
    let js = conj20_j(max_n, &var(Var::S))?;
    let j1 = conj20_j(max_n, &c(1))?;
    let denom = CommSeries::one(max_n).add(&j1.scale(&(&c(1) - &r)));
    Ok(js.scale(&r).mul(&denom.inverse()?))
}

/// The first `count` Fishburn numbers: coefficients of `t^0 … t^(count-1)`
/// in `Σ_{m≥0} Π_{k=1..m} (1 - (1-t)^k)`. Entry `n` counts the
/// permutations of size `n` with `p = 0`.
pub fn eval_fishburn(count: usize) -> Vec<BigInt> {
    if count == 0 {
        return Vec::new();
    }
    let max_n = count - 1;
    let one = CommSeries::one(max_n);
    let one_minus_t = one.sub(&CommSeries::t(max_n));
    let s = sum_of_products(max_n, |k| Ok(one.sub(&one_minus_t.pow(k)))).expect("no division");
    s.add(&one).coeffs.iter().map(|p| p.constant_term()).collect()
}

/// Both sides of the size-`n` identity
/// `Σ_π s^rmin x^p_silly w^des = Σ_M s^min x^rne w^(inter-1)`.
pub fn eval_conj21_identity(n: usize) -> Result<(Poly, Poly)> {
    let perms = perm_sum(n, |st| {
        Poly::monomial(&[
            (Var::S, st.rmin.len()),
            (Var::X, st.p_silly.len()),
            (Var::W, st.des_count()),
        ])
    })?;
    let matchings = matching_sum(n, |st| {
        Poly::monomial(&[(Var::S, st.min.len()), (Var::X, st.rne.len()), (Var::W, st.inter() - 1)])
    })?;
    Ok((perms, matchings))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fishburn_numbers() {
        let f: Vec<i64> = eval_fishburn(7).iter().map(|c| i64::try_from(c).unwrap()).collect();
        assert_eq!(f, [1, 1, 2, 5, 15, 53, 217]);
    }

    #[test]
    fn first_coefficients() {
        assert_eq!(eval_theorem_main_xyz(3).unwrap().coeff(1), c(1));
        assert_eq!(eval_theorem_main_sxy(3).unwrap().coeff(1), var(Var::S));
        assert_eq!(eval_conj20_formula(3).unwrap().coeff(1), &var(Var::R) * &var(Var::S));
    }

    #[test]
    fn factorials_at_one() {
        let ones = |_| c(1);
        let xyz = eval_theorem_main_xyz(7).unwrap().substitute(ones);
        let conj20 = eval_conj20_formula(6).unwrap().substitute(ones);
        let mut f = 1i64;
        for n in 1..=7 {
            f *= n as i64;
            assert_eq!(xyz.coeff(n), c(f));
            if n <= 6 {
                assert_eq!(conj20.coeff(n), c(f));
            }
        }
    }

    #[test]
    fn conj21_small() {
        let (p, m) = eval_conj21_identity(1).unwrap();
        assert_eq!(p, var(Var::S));
        assert_eq!(m, var(Var::S));
        let (p, m) = eval_conj21_identity(2).unwrap();
        assert_eq!(p, m);
    }

    #[test]
    fn inverse_multiplies_back() {
        let s = CommSeries::from_coeffs(4, vec![c(1), var(Var::X), &var(Var::Y) - &c(2), c(3)]);
        assert_eq!(s.mul(&s.inverse().unwrap()), CommSeries::one(4));
        assert!(CommSeries::constant(3, c(2)).inverse().is_err());
    }

    #[test]
    fn table_rows() {
        let rows = eval_theorem_main_sxy(2).unwrap().table();
        assert_eq!(
            rows[0],
            TableRow {
                n: 1,
                monomial: "s^1".into(),
                coefficient: "1".into()
            }
        );
    }
}
