//! Multivariate polynomials with arbitrary-precision integer coefficients.
//!
//! The variables are the commutative statistic markers used throughout the
//! crate. Monomials compare lexicographically by exponent in the variable
//! order `s, r, x, y, z, w, υ`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    S,
    R,
    X,
    Y,
    Z,
    W,
    Upsilon,
}

pub const NUM_VARS: usize = 7;

impl Var {
    pub const ALL: [Var; NUM_VARS] = [Var::S, Var::R, Var::X, Var::Y, Var::Z, Var::W, Var::Upsilon];

    pub fn name(self) -> &'static str {
        match self {
            Var::S => "s",
            Var::R => "r",
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::W => "w",
            Var::Upsilon => "υ",
        }
    }

    pub fn parse(name: &str) -> Result<Var> {
        Var::ALL
            .into_iter()
            .find(|v| v.name() == name)
            .or((name == "upsilon").then_some(Var::Upsilon))
            .ok_or_else(|| Error::Unknown(format!("variable `{name}`")))
    }
}

/// Exponent vector indexed by [`Var`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub [u8; NUM_VARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NUM_VARS]);

    pub fn var(v: Var) -> Self {
        let mut e = [0; NUM_VARS];
        e[v as usize] = 1;
        Monomial(e)
    }

    pub fn var_pow(v: Var, e: u8) -> Self {
        let mut m = Monomial::ONE;
        m.0[v as usize] = e;
        m
    }

    pub fn exponent(&self, v: Var) -> u8 {
        self.0[v as usize]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a = a.checked_add(b).expect("exponent overflow");
        }
        Monomial(e)
    }

    fn divide(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a = a.checked_sub(b)?;
        }
        Some(Monomial(e))
    }

    /// Space-separated factors with explicit exponents, e.g. `s^2 x^1`; the
    /// empty monomial is `1`.
    pub fn to_csv(&self) -> String {
        let parts: Vec<String> = Var::ALL
            .iter()
            .filter(|&&v| self.exponent(v) > 0)
            .map(|&v| format!("{}^{}", v.name(), self.exponent(v)))
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(v.name())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Poly::term(Monomial::ONE, c)
    }

    pub fn var(v: Var) -> Self {
        Poly::term(Monomial::var(v), 1)
    }

    /// The monomial `Π v^e` with coefficient 1.
    pub fn monomial(powers: &[(Var, usize)]) -> Self {
        let mut m = Monomial::ONE;
        for &(v, e) in powers {
            m.0[v as usize] += u8::try_from(e).expect("exponent overflow");
        }
        Poly::term(m, 1)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms.get(&Monomial::ONE).cloned().unwrap_or_default()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_in(&self, v: Var) -> u8 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += a * b`, the inner step of every series product.
    pub fn add_product(&mut self, a: &Poly, b: &Poly) {
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(ma.times(mb), &(ca * cb));
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces each variable by a polynomial.
    pub fn substitute(&self, image: impl Fn(Var) -> Poly) -> Poly {
        let images: Vec<Poly> = Var::ALL.iter().map(|&v| image(v)).collect();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for v in Var::ALL {
                let e = m.exponent(v);
                if e > 0 {
                    t = &t * &images[v as usize].pow(u32::from(e));
                }
            }
            out += &t;
        }
        out
    }

    /// Sets one variable to an integer.
    pub fn eval_var(&self, v: Var, value: i64) -> Poly {
        self.substitute(|u| if u == v { Poly::constant(value) } else { Poly::var(u) })
    }

    /// Exact quotient `self / d`. Fails unless `d` divides `self`.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        let (lead_m, lead_c) = d
            .terms
            .iter()
            .next_back()
            .ok_or_else(|| Error::NotDivisible("division by zero".into()))?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.terms.iter().next_back() {
            let qm = m.divide(lead_m);
            let (qc, r) = c.div_rem(lead_c);
            let Some(qm) = qm.filter(|_| r.is_zero()) else {
                return Err(Error::NotDivisible(format!("{self} by {d}")));
            };
            let q = Poly::term(qm, qc);
            rem -= &(&q * d);
            quot += &q;
        }
        Ok(quot)
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Self {
        Poly::constant(c)
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Self {
        Poly::var(v)
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c);
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, &-c);
        }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        out.add_product(self, rhs);
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// Terms from the highest monomial down, e.g. `2*s^2*x + s - 1`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let (sign, abs) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            match (k, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
