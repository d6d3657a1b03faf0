//! Sparse integer Laurent polynomials in one variable `t`, plus residue
//! classes modulo the set of integer multiples of a fixed polynomial.
//!
//! Coefficients are arbitrary-precision integers so no computation can
//! overflow. The map never stores a zero coefficient.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut p = Self::default();
        p.add_term(exp, BigInt::from(coeff));
        p
    }

    /// `t^k - 1`; zero when `k == 0`.
    pub fn monomial_minus_one(k: i64) -> Self {
        let mut p = Self::default();
        p.add_term(k, BigInt::from(1));
        p.add_term(0, BigInt::from(-1));
        p
    }

    /// Sums duplicate exponents.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(it: I) -> Self {
        let mut p = Self::default();
        for (e, c) in it {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn scale<T: Into<BigInt>>(&self, m: T) -> Self {
        let m = m.into();
        if m.is_zero() {
            return Self::zero();
        }
        let mut p = Self::default();
        for (e, c) in &self.terms {
            p.terms.insert(*e, c * &m);
        }
        p
    }

    /// `t -> t^-1`.
    pub fn substitute_inverse(&self) -> Self {
        let mut p = Self::default();
        for (e, c) in &self.terms {
            p.terms.insert(-e, c.clone());
        }
        p
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// `max_degree - min_degree`; `None` for the zero polynomial.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_degree()? - self.min_degree()?)
    }

    pub fn is_reciprocal(&self) -> bool {
        self.terms
            .iter()
            .all(|(e, c)| self.terms.get(&-e) == Some(c))
    }

    fn abs_coeff_sum(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).sum()
    }

    fn max_abs_coeff(&self) -> BigInt {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut out = LaurentPoly::zero();
        for p in iter {
            for (e, c) in p.terms {
                out.add_term(e, c);
            }
        }
        out
    }
}

/// Canonical text form: strictly descending exponents, ASCII, coefficient 1
/// omitted next to `t`, exponent 1 written bare, e.g. `-2t^3+4t^2-2t`,
/// `t^-1`, `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if c.is_negative() {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let a = c.abs();
            let one = a == BigInt::from(1);
            if *e == 0 {
                write!(f, "{a}")?;
            } else {
                if !one {
                    write!(f, "{a}")?;
                }
                if *e == 1 {
                    f.write_str("t")?;
                } else {
                    write!(f, "t^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum PolyParseError {
    #[error("empty polynomial text")]
    Empty,
    #[error("unexpected character {0:?} at byte {1}")]
    Unexpected(char, usize),
    #[error("integer out of range at byte {0}")]
    IntRange(usize),
}

impl FromStr for LaurentPoly {
    type Err = PolyParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let b: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if b.is_empty() {
            return Err(PolyParseError::Empty);
        }
        let mut p = LaurentPoly::zero();
        let mut i = 0;
        let mut first = true;
        while i < b.len() {
            let neg = match b[i] {
                '+' if !first => {
                    i += 1;
                    false
                }
                '-' => {
                    i += 1;
                    true
                }
                _ if first => false,
                c => return Err(PolyParseError::Unexpected(c, i)),
            };
            first = false;
            let start = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            let coeff: BigInt = if i > start {
                b[start..i].iter().collect::<String>().parse().unwrap()
            } else {
                BigInt::from(1)
            };
            let mut exp = 0i64;
            let mut has_t = false;
            if i < b.len() && b[i] == 't' {
                has_t = true;
                i += 1;
                exp = 1;
                if i < b.len() && b[i] == '^' {
                    i += 1;
                    let estart = i;
                    if i < b.len() && b[i] == '-' {
                        i += 1;
                    }
                    while i < b.len() && b[i].is_ascii_digit() {
                        i += 1;
                    }
                    if i == estart || (i == estart + 1 && b[estart] == '-') {
                        let c = b.get(i).copied().unwrap_or(' ');
                        return Err(PolyParseError::Unexpected(c, i));
                    }
                    exp = b[estart..i]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| PolyParseError::IntRange(estart))?;
                }
            }
            if !has_t && i == start {
                let c = b.get(i).copied().unwrap_or(' ');
                return Err(PolyParseError::Unexpected(c, i));
            }
            p.add_term(exp, if neg { -coeff } else { coeff });
        }
        Ok(p)
    }
}

/// Residue class `representative + m * modulus` over all integers `m`.
/// `modulus == 0` degenerates to a single polynomial.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentClass {
    representative: LaurentPoly,
    modulus: LaurentPoly,
}

impl LaurentClass {
    pub fn new(representative: LaurentPoly, modulus: LaurentPoly) -> Self {
        Self {
            representative,
            modulus,
        }
    }

    pub fn representative(&self) -> &LaurentPoly {
        &self.representative
    }

    pub fn modulus(&self) -> &LaurentPoly {
        &self.modulus
    }

    /// Same residue set. Moduli must agree up to a global sign (`mod h` and
    /// `mod -h` define the same relation); anything else is a caller bug and
    /// panics.
    pub fn class_equal(&self, other: &Self) -> bool {
        assert!(
            self.modulus == other.modulus || self.modulus == -&other.modulus,
            "class_equal: incompatible moduli {} vs {}",
            self.modulus,
            other.modulus
        );
        let diff = &self.representative - &other.representative;
        is_integer_multiple(&diff, &self.modulus)
    }

    pub fn is_zero_class(&self) -> bool {
        is_integer_multiple(&self.representative, &self.modulus)
    }

    /// Whether both classes quotient by the same relation, so `class_equal`
    /// is safe to call.
    pub fn same_relation(&self, other: &Self) -> bool {
        self.modulus == other.modulus || self.modulus == -&other.modulus
    }

    /// Representative minimizing span, then absolute coefficient sum, with
    /// remaining ties broken by the smallest term sequence in exponent
    /// order. Every part of that key is a property of the polynomial alone,
    /// so equal classes canonicalize identically no matter which
    /// representative they were built from.
    pub fn canonical_representative(&self) -> LaurentPoly {
        if self.modulus.is_zero() {
            return self.representative.clone();
        }
        // Beyond |m| = max|rep coeff| + 2 every modulus-supported term is
        // alive with strictly growing coefficients, so all key-minimal class
        // members sit inside the window whichever representative is stored.
        let bound: i64 = (self.representative.max_abs_coeff() + BigInt::from(2))
            .try_into()
            .expect("representative coefficients exceed i64");
        let key = |p: &LaurentPoly| {
            (
                p.span().unwrap_or(i64::MIN),
                p.abs_coeff_sum(),
                p.terms
                    .iter()
                    .map(|(e, c)| (*e, c.clone()))
                    .collect::<Vec<_>>(),
            )
        };
        (-bound..=bound)
            .map(|m| &self.representative - &self.modulus.scale(m))
            .min_by_key(key)
            .unwrap()
    }

    /// Largest `max_degree` over the residue set; `None` only for the class
    /// of the zero polynomial with zero modulus.
    pub fn max_degree(&self) -> Option<i64> {
        match (self.representative.max_degree(), self.modulus.max_degree()) {
            (None, None) => None,
            (a, b) => Some(a.unwrap_or(i64::MIN).max(b.unwrap_or(i64::MIN))),
        }
    }
}

impl fmt::Debug for LaurentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.representative, self.modulus)
    }
}

fn is_integer_multiple(p: &LaurentPoly, h: &LaurentPoly) -> bool {
    if p.is_zero() {
        return true;
    }
    if h.is_zero() {
        return false;
    }
    if p.max_degree() != h.max_degree() || p.min_degree() != h.min_degree() {
        return false;
    }
    let e = p.max_degree().unwrap();
    let (pl, hl) = (p.coeff(e), h.coeff(e));
    if (&pl % &hl) != BigInt::zero() {
        return false;
    }
    *p == h.scale(pl / hl)
}
