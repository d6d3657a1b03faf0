//! Compact table notations for Laurent polynomials.
//!
//! Braced style lists coefficients from the lowest exponent upward:
//! `{n}(a0+a1+...+am)` stands for `a0*t^n + a1*t^(n+1) + ... + am*t^(n+m)`
//! with `a0` and `am` nonzero and interior zeros written `+0`. Symmetric
//! style applies to reciprocal polynomials only: `[b0+b1+b2...` stands for
//! `b0 + b1*(t+1/t) + b2*(t^2+1/t^2) + ...` and has no closing bracket.
//! The zero polynomial renders as `0` in both styles, and a single-term
//! polynomial gets the degenerate braced form `{n}(a0)`.

use crate::laurent::LaurentPoly;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::fmt::Write;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AppendixStyle {
    Braced,
    Symmetric,
}

#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum AppendixError {
    #[error("symmetric notation requires a reciprocal polynomial")]
    NotReciprocal,
    #[error("malformed notation at byte {0}")]
    Malformed(usize),
}

pub fn format_appendix(p: &LaurentPoly, style: AppendixStyle) -> Result<String, AppendixError> {
    if p.is_zero() {
        return Ok("0".to_string());
    }
    match style {
        AppendixStyle::Braced => {
            let lo = p.min_degree().unwrap();
            let hi = p.max_degree().unwrap();
            let mut out = format!("{{{lo}}}(");
            for e in lo..=hi {
                push_coeff(&mut out, &p.coeff(e), e == lo);
            }
            out.push(')');
            Ok(out)
        }
        AppendixStyle::Symmetric => {
            if !p.is_reciprocal() {
                return Err(AppendixError::NotReciprocal);
            }
            let hi = p.max_degree().unwrap().max(0);
            let mut out = String::from("[");
            for e in 0..=hi {
                push_coeff(&mut out, &p.coeff(e), e == 0);
            }
            Ok(out)
        }
    }
}

fn push_coeff(out: &mut String, c: &BigInt, first: bool) {
    if !first && !c.is_negative() {
        out.push('+');
    }
    let _ = write!(out, "{c}");
}

pub fn parse_appendix(s: &str, style: AppendixStyle) -> Result<LaurentPoly, AppendixError> {
    let t = s.trim();
    if t == "0" {
        return Ok(LaurentPoly::zero());
    }
    match style {
        AppendixStyle::Braced => parse_braced(t),
        AppendixStyle::Symmetric => parse_symmetric(t),
    }
}

struct Scanner<'a> {
    b: &'a [u8],
    i: usize,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Self {
        Self {
            b: s.as_bytes(),
            i: 0,
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), AppendixError> {
        if self.b.get(self.i) == Some(&c) {
            self.i += 1;
            Ok(())
        } else {
            Err(AppendixError::Malformed(self.i))
        }
    }

    fn int(&mut self) -> Result<BigInt, AppendixError> {
        let start = self.i;
        if matches!(self.b.get(self.i), Some(b'+') | Some(b'-')) {
            self.i += 1;
        }
        let digits = self.i;
        while self.b.get(self.i).is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        if self.i == digits {
            return Err(AppendixError::Malformed(self.i));
        }
        std::str::from_utf8(&self.b[start..self.i])
            .unwrap()
            .parse()
            .map_err(|_| AppendixError::Malformed(start))
    }

    fn done(&self) -> bool {
        self.i == self.b.len()
    }

    fn peek_sign(&self) -> bool {
        matches!(self.b.get(self.i), Some(b'+') | Some(b'-'))
    }
}

fn coeff_sequence(sc: &mut Scanner, stop: Option<u8>) -> Result<Vec<BigInt>, AppendixError> {
    let mut coeffs = vec![sc.int()?];
    loop {
        match stop {
            Some(c) if sc.b.get(sc.i) == Some(&c) => break,
            None if sc.done() => break,
            _ => {}
        }
        if !sc.peek_sign() {
            return Err(AppendixError::Malformed(sc.i));
        }
        coeffs.push(sc.int()?);
    }
    Ok(coeffs)
}

fn parse_braced(s: &str) -> Result<LaurentPoly, AppendixError> {
    let mut sc = Scanner::new(s);
    sc.expect(b'{')?;
    let n = sc.int()?;
    let n: i64 = n.try_into().map_err(|_| AppendixError::Malformed(0))?;
    sc.expect(b'}')?;
    sc.expect(b'(')?;
    let coeffs = coeff_sequence(&mut sc, Some(b')'))?;
    sc.expect(b')')?;
    if !sc.done() {
        return Err(AppendixError::Malformed(sc.i));
    }
    let mut p = LaurentPoly::zero();
    for (k, c) in coeffs.into_iter().enumerate() {
        p = p + monomial_big(n + k as i64, c);
    }
    Ok(p)
}

fn parse_symmetric(s: &str) -> Result<LaurentPoly, AppendixError> {
    let mut sc = Scanner::new(s);
    sc.expect(b'[')?;
    let coeffs = coeff_sequence(&mut sc, None)?;
    let mut p = LaurentPoly::zero();
    for (k, c) in coeffs.into_iter().enumerate() {
        if k == 0 {
            p = p + monomial_big(0, c);
        } else {
            p = p + monomial_big(k as i64, c.clone()) + monomial_big(-(k as i64), c);
        }
    }
    Ok(p)
}

fn monomial_big(exp: i64, c: BigInt) -> LaurentPoly {
    if c.is_zero() {
        return LaurentPoly::zero();
    }
    // scale carries the BigInt coefficient onto t^exp
    LaurentPoly::monomial(exp, 1).scale(c)
}
