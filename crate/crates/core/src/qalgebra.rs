//! Exact q-polynomials and bigraded characters.
//!
//! A [`GradedCharacter`] term keyed by `(du1, du2)` stands for
//! `u1^(lambda1 + du1) * u2^du2`: the h1-weight is carried as an offset from
//! a formal baseline, the h2-weight is absolute.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Sparse univariate polynomial in `q` with big-integer coefficients.
///
/// Zero coefficients are never stored, so derived equality is mathematical
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: BTreeMap<u32, BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    /// `coeff * q^exp`.
    pub fn monomial(exp: u32, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// Builds `c[0] + c[1] q + c[2] q^2 + ...`.
    pub fn from_coeffs<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        let mut p = Self::zero();
        for (exp, c) in coeffs.iter().enumerate() {
            p.add_term(exp as u32, c.clone().into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: u32) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn low_degree(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    pub fn add_term(&mut self, exp: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    /// Multiplies by `q^dq`.
    pub fn shift(&self, dq: u32) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + dq, c.clone())).collect(),
        }
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// True when the coefficient sequence reads the same from both ends.
    pub fn is_palindromic(&self) -> bool {
        let (Some(lo), Some(hi)) = (self.low_degree(), self.degree()) else {
            return true;
        };
        (lo..=hi).all(|e| self.coeff(e) == self.coeff(lo + hi - e))
    }

    /// Exact quotient by `1 - q^i`, or `None` if the division leaves a remainder.
    fn div_one_minus_pow(&self, i: u32) -> Option<Self> {
        debug_assert!(i > 0);
        let Some(deg) = self.degree() else {
            return Some(Self::zero());
        };
        if deg < i {
            return None;
        }
        // p = (1 - q^i) r  =>  r_k = p_k + r_{k-i}
        let top = deg - i;
        let mut quotient: Vec<BigInt> = Vec::with_capacity(top as usize + 1);
        for k in 0..=top {
            let mut c = self.coeff(k);
            if k >= i {
                c += &quotient[(k - i) as usize];
            }
            quotient.push(c);
        }
        let q = Self::from_coeffs(&quotient);
        let back = &q + &(-q.shift(i));
        (back == *self).then_some(q)
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: QPolynomial) -> QPolynomial {
        &self + &rhs
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = QPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}

impl Neg for QPolynomial {
    type Output = QPolynomial;

    fn neg(self) -> QPolynomial {
        QPolynomial {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}q^{e}")?,
            }
        }
        Ok(())
    }
}

pub fn qpoly_add(p: &QPolynomial, r: &QPolynomial) -> QPolynomial {
    p + r
}

pub fn qpoly_mul(p: &QPolynomial, r: &QPolynomial) -> QPolynomial {
    p * r
}

/// Gaussian binomial `[n choose r]_q`; zero when `r < 0` or `r > n`.
///
/// Computed from the defining quotient
/// `(1-q^n)...(1-q^(n-r+1)) / ((1-q)...(1-q^r))` by exact division.
pub fn qbinom(n: u32, r: i64) -> QPolynomial {
    if r < 0 || r > i64::from(n) {
        return QPolynomial::zero();
    }
    let r = r as u32;
    let r = r.min(n - r);
    let one_minus = |i: u32| QPolynomial::one() + -QPolynomial::monomial(i, 1);
    let mut acc = QPolynomial::one();
    for i in (n - r + 1)..=n {
        acc = &acc * &one_minus(i);
    }
    for i in 1..=r {
        acc = acc
            .div_one_minus_pow(i)
            .expect("q-factorial divides the falling q-product");
    }
    acc
}

/// Sparse map from `(du1, du2)` to a nonzero [`QPolynomial`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedCharacter {
    terms: BTreeMap<(i64, i64), QPolynomial>,
}

impl GradedCharacter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn get(&self, du1: i64, du2: i64) -> Option<&QPolynomial> {
        self.terms.get(&(du1, du2))
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &QPolynomial)> {
        self.terms.iter().map(|(k, p)| (*k, p))
    }

    pub fn add_term(&mut self, du1: i64, du2: i64, poly: &QPolynomial) {
        if poly.is_zero() {
            return;
        }
        let slot = self.terms.entry((du1, du2)).or_default();
        *slot = &*slot + poly;
        if slot.is_zero() {
            self.terms.remove(&(du1, du2));
        }
    }

    /// Adds `q^grade * u1^du1 * u2^du2`.
    pub fn add_monomial(&mut self, du1: i64, du2: i64, grade: u32) {
        self.add_term(du1, du2, &QPolynomial::monomial(grade, 1));
    }

    /// Largest q-exponent appearing anywhere.
    pub fn max_grade(&self) -> Option<u32> {
        self.terms.values().filter_map(QPolynomial::degree).max()
    }
}

pub fn char_add(a: &GradedCharacter, b: &GradedCharacter) -> GradedCharacter {
    let mut out = a.clone();
    for ((du1, du2), p) in b.terms() {
        out.add_term(du1, du2, p);
    }
    out
}

/// Multiplies every term by `p * q^dq * u1^du1 * u2^du2`.
pub fn char_scale(
    a: &GradedCharacter,
    p: &QPolynomial,
    du1: i64,
    du2: i64,
    dq: u32,
) -> GradedCharacter {
    let factor = p.shift(dq);
    let mut out = GradedCharacter::new();
    for ((a1, a2), poly) in a.terms() {
        out.add_term(a1 + du1, a2 + du2, &(poly * &factor));
    }
    out
}

pub fn specialize_q1(a: &GradedCharacter) -> BTreeMap<(i64, i64), BigInt> {
    a.terms()
        .map(|(k, p)| (k, p.eval_one()))
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

pub fn total_dimension(a: &GradedCharacter) -> BigInt {
    a.terms().map(|(_, p)| p.eval_one()).sum()
}

#[derive(Serialize, Deserialize)]
struct CharacterRecord {
    du1: i64,
    du2: i64,
    poly: Vec<(u32, String)>,
}

impl Serialize for GradedCharacter {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let records: Vec<CharacterRecord> = self
            .terms()
            .map(|((du1, du2), p)| CharacterRecord {
                du1,
                du2,
                poly: p.terms().map(|(e, c)| (e, c.to_string())).collect(),
            })
            .collect();
        records.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GradedCharacter {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let records = Vec::<CharacterRecord>::deserialize(deserializer)?;
        let mut out = GradedCharacter::new();
        for rec in records {
            let mut p = QPolynomial::zero();
            for (e, c) in rec.poly {
                let c: BigInt = c.parse().map_err(serde::de::Error::custom)?;
                p.add_term(e, c);
            }
            out.add_term(rec.du1, rec.du2, &p);
        }
        Ok(out)
    }
}
