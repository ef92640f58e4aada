//! Laurent polynomials in one variable `y` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Sparse `exponent -> coefficient` table; zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(BigRational::from_integer(BigInt::from(c)), 0)
    }

    pub fn monomial(coef: BigRational, exp: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(exp, coef);
        out
    }

    /// `y^k` with coefficient 1.
    pub fn y_pow(k: i64) -> Self {
        Self::monomial(BigRational::one(), k)
    }

    /// `y^k - 1`.
    pub fn y_pow_minus_one(k: i64) -> Self {
        Self::y_pow(k) - Self::one()
    }

    /// The `y`-integer `[h]_y = 1 + y + ... + y^(h-1)`, for `h >= 1`.
    pub fn q_integer(h: u64) -> Self {
        let mut out = Self::zero();
        for k in 0..h as i64 {
            out.add_term(k, BigRational::one());
        }
        out
    }

    /// Builds a polynomial from `(exponent, integer coefficient)` pairs.
    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        let mut out = Self::zero();
        for &(e, c) in terms {
            out.add_term(e, BigRational::from_integer(BigInt::from(c)));
        }
        out
    }

    fn add_term(&mut self, exp: i64, coef: BigRational) {
        if coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *entry += coef;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms
            .get(&exp)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max_exp - min_exp`; zero for the zero polynomial.
    pub fn span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    /// Exact quotient `self / divisor` in the Laurent ring.
    pub fn exact_divide(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (Some(d_lo), Some(d_hi)) = (divisor.min_exp(), divisor.max_exp()) else {
            return Err(Error::InexactDivision);
        };
        let lead = divisor.coeff(d_hi);
        let monic = lead.is_one();
        let mut rem = self.terms.clone();
        let mut quotient = LaurentPoly::zero();
        while let Some((&r_hi, top)) = rem.last_key_value() {
            let r_lo = *rem.keys().next().expect("nonempty");
            if r_hi - r_lo < d_hi - d_lo {
                return Err(Error::InexactDivision);
            }
            let c = if monic { top.clone() } else { top / &lead };
            let shift = r_hi - d_hi;
            for (&e, dc) in &divisor.terms {
                let key = e + shift;
                let entry = rem.entry(key).or_insert_with(BigRational::zero);
                *entry -= dc * &c;
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            quotient.add_term(shift, c);
        }
        Ok(quotient)
    }

    /// Multiplies in place by `y^k - 1`.
    pub fn mul_y_pow_minus_one(&mut self, k: i64) {
        let old = std::mem::take(&mut self.terms);
        for (e, c) in &old {
            self.add_term(e + k, c.clone());
        }
        for (e, c) in old {
            self.add_term(e, -c);
        }
    }

    /// Multiplies in place by `1 + y^step + ... + y^{(h-1) step}`.
    pub fn mul_q_integer(&mut self, h: u64, step: i64) {
        let old = std::mem::take(&mut self.terms);
        for k in 0..h as i64 {
            for (e, c) in &old {
                self.add_term(e + k * step, c.clone());
            }
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut out = LaurentPoly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// `(exp, num/den)` pairs separated by spaces, or `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "({e}, {}/{})", c.numer(), c.denom())?;
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(i64, String)> = self
            .terms()
            .map(|(e, c)| (e, format!("{}/{}", c.numer(), c.denom())))
            .collect();
        pairs.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<(i64, String)>::deserialize(de)?;
        let mut out = LaurentPoly::zero();
        for (e, c) in pairs {
            let q: BigRational = c.parse().map_err(serde::de::Error::custom)?;
            out.add_term(e, q);
        }
        Ok(out)
    }
}

/// Laurent polynomials in `y` over the group ring `Q[Z/l]`, whose
/// generator `ω` stands for a primitive `l`-th root of unity. Equal values
/// here stay equal after `ω -> η_l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwistedLaurent {
    order: u32,
    /// `(y-exponent, ω-exponent) -> coefficient`.
    terms: BTreeMap<(i64, u32), BigRational>,
}

impl TwistedLaurent {
    pub fn one(order: u32) -> Self {
        Self::monomial(order, BigRational::one(), 0, 0)
    }

    /// `coef · y^exp · ω^twist`.
    pub fn monomial(order: u32, coef: BigRational, exp: i64, twist: i64) -> Self {
        let mut out = Self {
            order,
            terms: BTreeMap::new(),
        };
        out.add_term(exp, twist, coef);
        out
    }

    fn add_term(&mut self, exp: i64, twist: i64, coef: BigRational) {
        if coef.is_zero() {
            return;
        }
        let key = (exp, twist.rem_euclid(self.order as i64) as u32);
        let entry = self.terms.entry(key).or_insert_with(BigRational::zero);
        *entry += coef;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Embeds an untwisted polynomial.
    pub fn from_laurent(order: u32, p: &LaurentPoly) -> Self {
        let mut out = Self {
            order,
            terms: BTreeMap::new(),
        };
        for (e, c) in p.terms() {
            out.add_term(e, 0, c.clone());
        }
        out
    }

    /// `ω^twist y^exp - 1`.
    pub fn twisted_minus_one(order: u32, exp: i64, twist: i64) -> Self {
        let mut out = Self::monomial(order, BigRational::one(), exp, twist);
        out.add_term(0, 0, -BigRational::one());
        out
    }

    /// Multiplies in place by `ω^twist y^exp - 1`.
    pub fn mul_twisted_minus_one(&mut self, exp: i64, twist: i64) {
        let old = std::mem::take(&mut self.terms);
        for (&(e, t), c) in &old {
            self.add_term(e + exp, t as i64 + twist, c.clone());
        }
        for ((e, t), c) in old {
            self.add_term(e, t as i64, -c);
        }
    }

    /// Multiplies in place by `1 + y^step + ... + y^{(h-1) step}`.
    pub fn mul_q_integer(&mut self, h: u64, step: i64) {
        let old = std::mem::take(&mut self.terms);
        for k in 0..h as i64 {
            for (&(e, t), c) in &old {
                self.add_term(e + k * step, t as i64, c.clone());
            }
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            order: self.order,
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.order != rhs.order {
            return Err(Error::OrderMismatch(self.order as u64, rhs.order as u64));
        }
        let mut out = Self {
            order: self.order,
            terms: BTreeMap::new(),
        };
        for (&(e1, t1), c1) in &self.terms {
            for (&(e2, t2), c2) in &rhs.terms {
                out.add_term(e1 + e2, t1 as i64 + t2 as i64, c1 * c2);
            }
        }
        Ok(out)
    }
}

/// `(exp, twist, num/den)` triples, or `0`.
impl fmt::Display for TwistedLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let items: Vec<String> = self
            .terms
            .iter()
            .map(|(&(e, t), c)| format!("({e}, w^{t}, {}/{})", c.numer(), c.denom()))
            .collect();
        f.write_str(&items.join(" "))
    }
}

/// The `e`-th cyclotomic polynomial `Φ_e(y)`.
pub fn cyclotomic_poly(e: u32) -> Result<LaurentPoly> {
    if e == 0 {
        return Err(Error::InvalidModulus { e, min: 1 });
    }
    let mut out = LaurentPoly::y_pow_minus_one(e as i64);
    for d in 1..e {
        if e.is_multiple_of(d) {
            out = out.exact_divide(&cyclotomic_poly(d)?)?;
        }
    }
    Ok(out)
}

/// Multiplicity of `Φ_e` as a factor of `p`.
pub fn nu_phi(p: &LaurentPoly, e: u32) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let phi = cyclotomic_poly(e)?;
    let mut current = p.clone();
    let mut k = 0;
    while let Ok(q) = current.exact_divide(&phi) {
        current = q;
        k += 1;
    }
    Ok(k)
}
