//! Truncated noncommutative power series with polynomial coefficients.
//!
//! A series lives over an ordered alphabet of noncommuting letters and keeps
//! only the words of length at most `max_degree`. Coefficients are [`Poly`]s
//! in the commutative variables.

mod brute;
mod formulas;

pub use brute::{brute_series, Refinement, SeriesFamily};
pub use formulas::{eval_ascentbottom_nc, eval_f, eval_main, Extremum, Variant};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::poly::Poly;

/// A word over an alphabet, stored as letter indices. Words compare by
/// length first, then lexicographically by alphabet position.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_indices(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.0)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct NCSeries {
    alphabet: Arc<[String]>,
    max_degree: usize,
    terms: BTreeMap<Word, Poly>,
}

impl NCSeries {
    pub fn zero(alphabet: &[&str], max_degree: usize) -> Self {
        NCSeries {
            alphabet: alphabet.iter().map(|s| s.to_string()).collect(),
            max_degree,
            terms: BTreeMap::new(),
        }
    }

    fn zero_like(&self, max_degree: usize) -> Self {
        NCSeries {
            alphabet: self.alphabet.clone(),
            max_degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(alphabet: &[&str], max_degree: usize, c: Poly) -> Self {
        let mut s = Self::zero(alphabet, max_degree);
        s.add_term(Word::empty(), &c);
        s
    }

    pub fn one(alphabet: &[&str], max_degree: usize) -> Self {
        Self::constant(alphabet, max_degree, Poly::one())
    }

    /// The series consisting of the single letter `name`.
    pub fn letter(alphabet: &[&str], max_degree: usize, name: &str) -> Result<Self> {
        let mut s = Self::zero(alphabet, max_degree);
        let i = s.letter_index(name)?;
        s.add_term(Word(vec![i]), &Poly::one());
        Ok(s)
    }

    /// Builds a series from `(word, coefficient)` pairs, words spelled as
    /// letter names.
    pub fn from_terms<'a>(
        alphabet: &[&str],
        max_degree: usize,
        terms: impl IntoIterator<Item = (&'a [&'a str], Poly)>,
    ) -> Result<Self> {
        let mut s = Self::zero(alphabet, max_degree);
        for (letters, c) in terms {
            let w = s.word(letters)?;
            s.add_term(w, &c);
        }
        Ok(s)
    }

    pub fn alphabet(&self) -> Vec<&str> {
        self.alphabet.iter().map(|s| s.as_str()).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn letter_index(&self, name: &str) -> Result<u8> {
        self.alphabet
            .iter()
            .position(|l| l == name)
            .map(|i| i as u8)
            .ok_or_else(|| Error::Unknown(format!("letter `{name}` in alphabet {:?}", self.alphabet)))
    }

    pub fn word(&self, letters: &[&str]) -> Result<Word> {
        letters
            .iter()
            .map(|l| self.letter_index(l))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn coeff(&self, w: &Word) -> Poly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Coefficient of a word spelled as letter names.
    pub fn coeff_of(&self, letters: &[&str]) -> Result<Poly> {
        Ok(self.coeff(&self.word(letters)?))
    }

    pub fn constant_term(&self) -> Poly {
        self.coeff(&Word::empty())
    }

    /// Nonzero terms in canonical word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Poly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn spell(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.0.iter()
            .map(|&i| self.alphabet[i as usize].as_str())
            .collect::<Vec<_>>()
            .join("·")
    }

    fn add_term(&mut self, w: Word, c: &Poly) {
        if w.len() > self.max_degree || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    fn add_product_term(&mut self, w: Word, a: &Poly, b: &Poly) {
        let slot = self.terms.entry(w).or_default();
        slot.add_product(a, b);
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
    }

    fn check_alphabet(&self, other: &NCSeries) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch(self.alphabet.to_vec(), other.alphabet.to_vec()));
        }
        Ok(())
    }

    /// Drops every word longer than `d` (and lowers the bound to `d`).
    pub fn truncate(&self, d: usize) -> NCSeries {
        let d = d.min(self.max_degree);
        let mut out = self.zero_like(d);
        out.terms = self
            .terms
            .iter()
            .filter(|(w, _)| w.len() <= d)
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        out
    }

    pub fn add(&self, other: &NCSeries) -> Result<NCSeries> {
        self.check_alphabet(other)?;
        let mut out = self.truncate(other.max_degree);
        for (w, c) in &other.terms {
            if w.len() <= out.max_degree {
                *out.terms.entry(w.clone()).or_default() += c;
            }
        }
        out.prune();
        Ok(out)
    }

    pub fn neg(&self) -> NCSeries {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }

    pub fn sub(&self, other: &NCSeries) -> Result<NCSeries> {
        self.add(&other.neg())
    }

    /// Product truncated at the smaller of the two degree bounds.
    pub fn mul(&self, other: &NCSeries) -> Result<NCSeries> {
        self.check_alphabet(other)?;
        let d = self.max_degree.min(other.max_degree);
        let mut out = self.zero_like(d);
        for (wa, ca) in &self.terms {
            if wa.len() > d {
                break;
            }
            for (wb, cb) in &other.terms {
                if wa.len() + wb.len() > d {
                    break;
                }
                out.add_product_term(wa.concat(wb), ca, cb);
            }
        }
        out.prune();
        Ok(out)
    }

    pub fn scale(&self, c: &Poly) -> NCSeries {
        let mut out = self.zero_like(self.max_degree);
        for (w, a) in &self.terms {
            out.add_term(w.clone(), &(a * c));
        }
        out
    }

    /// Applies `f` to every coefficient.
    pub fn map_coefficients(&self, f: impl Fn(&Poly) -> Poly) -> NCSeries {
        let mut out = self.zero_like(self.max_degree);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &f(c));
        }
        out
    }

    pub fn pow(&self, k: u32) -> Result<NCSeries> {
        let mut acc = self.zero_like(self.max_degree);
        acc.add_term(Word::empty(), &Poly::one());
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Multiplicative inverse; the constant term must be `1` or `-1`.
    ///
    /// With `S = α(1 - N)`, the inverse is `α⁻¹ R` where `R = 1 + N R`,
    /// which determines the coefficients of `R` word by word in order of
    /// length.
    pub fn inverse(&self) -> Result<NCSeries> {
        let alpha = self.constant_term();
        let unit = alpha
            .as_constant()
            .filter(|c| c.abs().is_one())
            .ok_or_else(|| Error::NonUnitConstant(alpha.to_string()))?;
        let inv = Poly::constant(unit.clone());
        // N = 1 - α⁻¹ S, without its (zero) constant term
        let n_terms: Vec<(Word, Poly)> = self
            .terms
            .iter()
            .filter(|(w, _)| !w.is_empty())
            .map(|(w, c)| (w.clone(), -&c.scale(&unit)))
            .collect();
        let d = self.max_degree;
        let mut by_len: Vec<Vec<(Word, Poly)>> = vec![Vec::new(); d + 1];
        by_len[0].push((Word::empty(), Poly::one()));
        for len in 1..=d {
            let mut acc: BTreeMap<Word, Poly> = BTreeMap::new();
            for (a, ca) in &n_terms {
                if a.len() > len {
                    break;
                }
                for (b, cb) in &by_len[len - a.len()] {
                    acc.entry(a.concat(b)).or_default().add_product(ca, cb);
                }
            }
            by_len[len] = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        let mut out = self.zero_like(d);
        out.terms = by_len.into_iter().flatten().map(|(w, c)| (w, &c * &inv)).collect();
        Ok(out)
    }

    /// Removes a leading `letter` from every word. The constant term must be
    /// zero and every word must start with `letter`; the degree bound drops
    /// by one.
    pub fn left_strip(&self, letter: &str) -> Result<NCSeries> {
        let i = self.letter_index(letter)?;
        let mut out = self.zero_like(self.max_degree.saturating_sub(1));
        for (w, c) in &self.terms {
            if w.0.first() != Some(&i) {
                return Err(Error::StripViolation {
                    letter: letter.into(),
                    word: self.spell(w),
                });
            }
            out.terms.insert(Word(w.0[1..].to_vec()), c.clone());
        }
        Ok(out)
    }

    /// The algebra homomorphism sending each letter to a series over
    /// `target`. `images` is indexed like this series' alphabet.
    pub fn substitute(&self, target: &[&str], images: &[NCSeries]) -> Result<NCSeries> {
        if images.len() != self.alphabet.len() {
            return Err(Error::Precondition(format!(
                "{} images for an alphabet of {} letters",
                images.len(),
                self.alphabet.len()
            )));
        }
        let d = self.max_degree;
        let mut out = NCSeries::zero(target, d);
        let one = NCSeries::one(target, d);
        for img in images {
            out.check_alphabet(img)?;
        }
        // Images of prefixes are shared through a cache keyed by word.
        let mut cache: BTreeMap<Word, NCSeries> = BTreeMap::new();
        cache.insert(Word::empty(), one);
        for (w, c) in &self.terms {
            let mut k = w.len();
            while !cache.contains_key(&Word(w.0[..k].to_vec())) {
                k -= 1;
            }
            let mut image = cache[&Word(w.0[..k].to_vec())].clone();
            for j in k..w.len() {
                image = image.mul(&images[w.0[j] as usize])?;
                cache.insert(Word(w.0[..=j].to_vec()), image.clone());
            }
            for (w2, c2) in &image.terms {
                out.add_product_term(w2.clone(), c2, c);
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    /// One line per term: letters joined by `·`, a tab, the coefficient.
    pub fn to_ncs_text(&self) -> String {
        let mut s = String::new();
        for (w, c) in &self.terms {
            s.push_str(&self.spell(w));
            s.push('\t');
            s.push_str(&c.to_string());
            s.push('\n');
        }
        s
    }

    /// Words of the series together with integer coefficients, when all
    /// coefficients are constants.
    pub fn integer_terms(&self) -> Option<Vec<(String, BigInt)>> {
        self.terms
            .iter()
            .map(|(w, c)| c.as_constant().map(|k| (self.spell(w), k)))
            .collect()
    }
}

impl fmt::Debug for NCSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCSeries[{:?}; ≤{}] ", self.alphabet, self.max_degree)?;
        f.debug_map()
            .entries(self.terms.iter().map(|(w, c)| (self.spell(w), c.to_string())))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const XY: [&str; 2] = ["x", "y"];

    fn letter(l: &str, d: usize) -> NCSeries {
        NCSeries::letter(&XY, d, l).unwrap()
    }

    #[test]
    fn product_is_concatenation() {
        let xy = letter("x", 3).mul(&letter("y", 3)).unwrap();
        assert_eq!(xy.coeff_of(&["x", "y"]).unwrap(), Poly::one());
        assert_eq!(xy.num_terms(), 1);
        let yx = letter("y", 3).mul(&letter("x", 3)).unwrap();
        assert_ne!(xy, yx);
    }

    #[test]
    fn truncation_takes_smaller_bound() {
        let a = NCSeries::one(&XY, 5).add(&letter("x", 5)).unwrap();
        let b = NCSeries::one(&XY, 2).add(&letter("y", 2)).unwrap();
        let p = a.mul(&b).unwrap();
        assert_eq!(p.max_degree(), 2);
        assert_eq!(p.num_terms(), 4);
    }

    #[test]
    fn geometric_inverse() {
        let t = NCSeries::letter(&["t"], 3, "t").unwrap();
        let s = NCSeries::one(&["t"], 3).sub(&t).unwrap();
        let inv = s.inverse().unwrap();
        assert_eq!(inv.to_ncs_text(), "1\t1\nt\t1\nt·t\t1\nt·t·t\t1\n");
        assert_eq!(NCSeries::one(&XY, 4).inverse().unwrap(), NCSeries::one(&XY, 4));
        let neg = NCSeries::constant(&XY, 3, Poly::constant(-1))
            .add(&letter("x", 3))
            .unwrap();
        assert_eq!(neg.mul(&neg.inverse().unwrap()).unwrap(), NCSeries::one(&XY, 3));
        assert!(letter("x", 3).inverse().is_err());
        assert!(NCSeries::constant(&XY, 3, Poly::constant(2)).inverse().is_err());
    }

    #[test]
    fn strip() {
        let vx = NCSeries::from_terms(
            &["v", "x", "y"],
            3,
            [(&["v", "x"][..], Poly::one()), (&["v", "y"][..], Poly::one())],
        )
        .unwrap();
        let stripped = vx.left_strip("v").unwrap();
        assert_eq!(stripped.to_ncs_text(), "x\t1\ny\t1\n");
        assert_eq!(stripped.max_degree(), 2);
        let x = NCSeries::letter(&["v", "x"], 3, "x").unwrap();
        assert!(matches!(x.left_strip("v"), Err(Error::StripViolation { .. })));
        assert!(NCSeries::one(&["v"], 2).left_strip("v").is_err());
    }

    #[test]
    fn mismatched_alphabets() {
        let a = letter("x", 2);
        let b = NCSeries::letter(&["x"], 2, "x").unwrap();
        assert!(matches!(a.mul(&b), Err(Error::AlphabetMismatch(..))));
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn substitution_is_multiplicative() {
        // x -> x + y, y -> y on x·y gives x·y + y·y
        let target = ["x", "y"];
        let xy = letter("x", 3).mul(&letter("y", 3)).unwrap();
        let images = [letter("x", 3).add(&letter("y", 3)).unwrap(), letter("y", 3)];
        let out = xy.substitute(&target, &images).unwrap();
        assert_eq!(out.to_ncs_text(), "x·y\t1\ny·y\t1\n");
    }
}
