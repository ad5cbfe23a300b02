//! Closed-form noncommutative series.

use serde::{Deserialize, Serialize};

use super::NCSeries;
use crate::error::Result;
use crate::poly::{Poly, Var};

/// Which specialization of the block series to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// `s = 1`, `w` kept. Alphabet `u, v, w, t`.
    GeneralW,
    /// `w = 0`, `s` kept as a commutative variable. Alphabet `u, v, t`.
    SillyS,
    /// Both `s` and `w` kept. Alphabet `u, v, w, t`.
    Full,
}

impl Variant {
    pub fn alphabet(self) -> &'static [&'static str] {
        match self {
            Variant::SillyS => &["u", "v", "t"],
            Variant::GeneralW | Variant::Full => &["u", "v", "w", "t"],
        }
    }

    fn s(self) -> Poly {
        match self {
            Variant::GeneralW => Poly::one(),
            _ => Poly::var(Var::S),
        }
    }

    fn has_w(self) -> bool {
        self != Variant::SillyS
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Extremum {
    Min,
    Max,
}

/// `F_k^μ` truncated at degree `d`:
/// `(1 - v·u⁻¹(G))⁻¹ - 1` with `G = AB - 1` for max and `BA - 1` for min,
/// `A = 1 + s·u(1 - s·w)⁻¹` and `B = (1 + u(1 - w)⁻¹)^(k-1)`.
pub fn eval_f(k: u32, mu: Extremum, variant: Variant, d: usize) -> Result<NCSeries> {
    assert!(k >= 1, "block height must be positive");
    let alpha = variant.alphabet();
    let inner = d + 1;
    let one = NCSeries::one(alpha, inner);
    let u = NCSeries::letter(alpha, inner, "u")?;
    let s = variant.s();
    // (1 - c·w)⁻¹, or 1 when w is specialized to zero
    let geometric_w = |c: &Poly| -> Result<NCSeries> {
        if variant.has_w() {
            let w = NCSeries::letter(alpha, inner, "w")?;
            one.sub(&w.scale(c))?.inverse()
        } else {
            Ok(one.clone())
        }
    };
    let a = one.add(&u.mul(&geometric_w(&s)?)?.scale(&s))?;
    let b = one.add(&u.mul(&geometric_w(&Poly::one())?)?)?.pow(k - 1)?;
    let g = match mu {
        Extremum::Max => a.mul(&b)?,
        Extremum::Min => b.mul(&a)?,
    }
    .sub(&one)?;
    let v = NCSeries::letter(alpha, d, "v")?;
    let vx = v.mul(&g.left_strip("u")?)?;
    NCSeries::one(alpha, d)
        .sub(&vx)?
        .inverse()?
        .sub(&NCSeries::one(alpha, d))
}

/// `Σ_{m≥1} Π_{k=1..m} t·v⁻¹(F_k)`, truncated at degree `d`. Every factor
/// has degree at least one, so `m` stops at `d`. `F_k` is the same for min
/// and max in both specializations; max is used.
pub fn eval_main(variant: Variant, d: usize) -> Result<NCSeries> {
    let alpha = variant.alphabet();
    let t = NCSeries::letter(alpha, d, "t")?;
    let mut total = NCSeries::zero(alpha, d);
    let mut product = NCSeries::one(alpha, d);
    for k in 1..=d as u32 {
        let f = eval_f(k, Extremum::Max, variant, d + 1)?;
        product = product.mul(&t.mul(&f.left_strip("v")?)?)?;
        total = total.add(&product)?;
    }
    Ok(total)
}

/// `Σ_{m≥1} Π_{k=1..m} (m+1-k)[1 - (m+1-k)·C·(υ - t)]⁻¹·C·t` with
/// `C = (1 - (z - υ))⁻¹`, over the alphabet `υ, z, t`.
pub fn eval_ascentbottom_nc(d: usize) -> Result<NCSeries> {
    let alpha = ["υ", "z", "t"];
    let one = NCSeries::one(&alpha, d);
    let ups = NCSeries::letter(&alpha, d, "υ")?;
    let z = NCSeries::letter(&alpha, d, "z")?;
    let t = NCSeries::letter(&alpha, d, "t")?;
    let c = one.sub(&z.sub(&ups)?)?.inverse()?;
    let c_ups_t = c.mul(&ups.sub(&t)?)?;
    let ct = c.mul(&t)?;
    let mut total = NCSeries::zero(&alpha, d);
    for m in 1..=d as i64 {
        let mut product = one.clone();
        for k in 1..=m {
            let j = Poly::constant(m + 1 - k);
            let bracket = one.sub(&c_ups_t.scale(&j))?.inverse()?;
            product = product.mul(&bracket.scale(&j).mul(&ct)?)?;
        }
        total = total.add(&product)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::PartitionShape;
    use crate::oracle::enumerate::column_strict_fillings;
    use crate::poly::Monomial;

    /// `Σ_T s^μ(T) [(u+v)^Des (v+w)^Rep; v]` over column-strict fillings of
    /// `k × ℓ` rectangles with `ℓ ≤ d`.
    fn f_by_fillings(k: usize, mu: Extremum, d: usize) -> NCSeries {
        let alpha = Variant::Full.alphabet();
        let l = |n: &str| NCSeries::letter(alpha, d, n).unwrap();
        let mut total = NCSeries::zero(alpha, d);
        for len in 1..=d {
            let shape = PartitionShape::new(vec![k; len]).unwrap();
            for t in column_strict_fillings(&shape).unwrap() {
                let rows = t.alpha_rows().unwrap();
                let mut term = l("v");
                for i in 1..len {
                    let letter = if rows[i - 1] > rows[i] {
                        l("u").add(&l("v")).unwrap()
                    } else if rows[i - 1] == rows[i] {
                        l("v").add(&l("w")).unwrap()
                    } else {
                        l("v")
                    };
                    term = term.mul(&letter).unwrap();
                }
                let special = match mu {
                    Extremum::Max => k,
                    Extremum::Min => 1,
                };
                let e = rows.iter().filter(|&&r| r == special).count();
                total = total
                    .add(&term.scale(&Poly::term(Monomial::var_pow(Var::S, e as u8), 1)))
                    .unwrap();
            }
        }
        total
    }

    #[test]
    fn block_series_match_rectangular_fillings() {
        for k in 1..=3 {
            for mu in [Extremum::Min, Extremum::Max] {
                assert_eq!(eval_f(k as u32, mu, Variant::Full, 4).unwrap(), f_by_fillings(k, mu, 4));
            }
        }
    }

    #[test]
    fn block_series_inverse_multiplies_back() {
        let d = 5;
        let alpha = Variant::Full.alphabet();
        let one = NCSeries::one(alpha, d);
        let f = eval_f(3, Extremum::Min, Variant::Full, d).unwrap();
        let g = f_by_fillings(3, Extremum::Min, d);
        assert_eq!(f, g);
        let inv = one.add(&f).unwrap().inverse().unwrap();
        assert_eq!(one.add(&f).unwrap().mul(&inv).unwrap(), one);
    }

    #[test]
    fn degree_one_is_t() {
        assert_eq!(eval_main(Variant::GeneralW, 1).unwrap().to_ncs_text(), "t\t1\n");
        assert_eq!(eval_main(Variant::SillyS, 1).unwrap().to_ncs_text(), "t\ts\n");
        assert_eq!(eval_ascentbottom_nc(1).unwrap().to_ncs_text(), "t\t1\n");
    }

    #[test]
    fn first_block_silly() {
        // k = 1, w = 0: F = (1 - v·s)⁻¹ - 1
        let f = eval_f(1, Extremum::Max, Variant::SillyS, 3).unwrap();
        assert_eq!(f.to_ncs_text(), "v\ts\nv·v\ts^2\nv·v·v\ts^3\n");
    }

    #[test]
    fn min_and_max_agree_when_s_or_w_is_specialized() {
        for v in [Variant::GeneralW, Variant::SillyS] {
            for k in 1..=3 {
                assert_eq!(
                    eval_f(k, Extremum::Max, v, 4).unwrap(),
                    eval_f(k, Extremum::Min, v, 4).unwrap()
                );
            }
        }
    }

    #[test]
    fn min_and_max_differ_in_full_series() {
        let max = eval_f(2, Extremum::Max, Variant::Full, 4).unwrap();
        let min = eval_f(2, Extremum::Min, Variant::Full, 4).unwrap();
        assert_ne!(max, min);
    }
}
