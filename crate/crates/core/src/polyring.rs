//! Univariate polynomials over `ℤ` with arbitrary-precision coefficients,
//! exact division, and divisibility in `ℤ[t]` versus `ℕ₀[t]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A polynomial in `t`; `coeffs[i]` is the coefficient of `t^i`.
///
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        IntPoly::new(vec![BigInt::from(c)])
    }

    /// `c · t^e`.
    pub fn monomial(c: i64, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = BigInt::from(c);
        IntPoly::new(coeffs)
    }

    /// `1 + t^e`.
    pub fn one_plus_t_pow(e: usize) -> Self {
        &IntPoly::one() + &IntPoly::monomial(1, e)
    }

    /// `t^e − 1`.
    pub fn t_pow_minus_one(e: usize) -> Self {
        &IntPoly::monomial(1, e) - &IntPoly::one()
    }

    /// `1 + t^step + t^{2·step} + … + t^{(terms−1)·step}`.
    pub fn geometric(step: usize, terms: usize) -> Self {
        (0..terms).fold(IntPoly::zero(), |acc, k| &acc + &IntPoly::monomial(1, k * step))
    }

    /// `Σ t^e` over the given exponents, with multiplicity.
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut coeffs: Vec<BigInt> = vec![];
        for e in exps {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::zero());
            }
            coeffs[e] += 1;
        }
        IntPoly::new(coeffs)
    }

    pub fn product<'a, I: IntoIterator<Item = &'a IntPoly>>(factors: I) -> Self {
        factors.into_iter().fold(IntPoly::one(), |acc, f| &acc * f)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Divides by `t^k`; `None` unless the low `k` coefficients vanish.
    pub fn unshift(&self, k: usize) -> Option<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    pub fn is_palindromic(&self) -> bool {
        let c = &self.coeffs;
        (0..c.len() / 2).all(|i| c[i] == c[c.len() - 1 - i])
    }

    /// Exact division in `ℤ[t]`.
    ///
    /// `Ok(q)` when `self = divisor · q`. Otherwise `Err(r)` with the
    /// remainder at the point the long division stopped: either a nonzero
    /// final remainder or a partial remainder whose leading coefficient is
    /// not divisible by that of `divisor`.
    pub fn try_div_exact(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let dlead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let dd = divisor.degree().unwrap_or(0);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(dd).max(1)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let lead = &rem[top];
            if lead.is_zero() {
                rem.pop();
                continue;
            }
            if !(lead % dlead).is_zero() {
                return Err(Error::NonExactDivision {
                    remainder: IntPoly::new(rem),
                });
            }
            let q = lead / dlead;
            let k = top - dd;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * dc;
            }
            quot[k] = q;
            rem.pop();
        }
        let rem = IntPoly::new(rem);
        if rem.is_zero() {
            Ok(IntPoly::new(quot))
        } else {
            Err(Error::NonExactDivision { remainder: rem })
        }
    }

    /// Parses sums of monomials like `1 + t^3 - 2t^5` or `t^8-1`.
    pub fn parse(s: &str) -> Result<Self> {
        s.parse()
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if e == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |why: &str| Error::Parse(format!("bad polynomial {s:?}: {why}"));
        if src.is_empty() {
            return Err(bad("empty"));
        }
        let mut total = IntPoly::zero();
        let mut rest = src.as_str();
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'+' => (false, &rest[1..]),
                b'-' => (true, &rest[1..]),
                _ => (false, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            if term.is_empty() {
                return Err(bad("dangling sign"));
            }
            let (coef_str, exp) = match term.find('t') {
                None => (term, 0usize),
                Some(pos) => {
                    let after = &term[pos + 1..];
                    let exp = if after.is_empty() {
                        1
                    } else {
                        after
                            .strip_prefix('^')
                            .and_then(|x| x.parse().ok())
                            .ok_or_else(|| bad("exponent"))?
                    };
                    (term[..pos].trim_end_matches('*'), exp)
                }
            };
            let mut coef: BigInt = if coef_str.is_empty() {
                BigInt::one()
            } else {
                coef_str.parse().map_err(|_| bad("coefficient"))?
            };
            if negative {
                coef = -coef;
            }
            let mut coeffs = vec![BigInt::zero(); exp + 1];
            coeffs[exp] = coef;
            total = &total + &IntPoly::new(coeffs);
        }
        Ok(total)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    coeffs: Vec<String>,
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    /// Accepts decimal strings or plain JSON integers.
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coef {
            Str(String),
            Int(i64),
        }
        #[derive(Deserialize)]
        struct Raw {
            coeffs: Vec<Coef>,
        }
        let raw = Raw::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .into_iter()
            .map(|c| match c {
                Coef::Int(i) => Ok(BigInt::from(i)),
                Coef::Str(s) => s
                    .parse::<BigInt>()
                    .map_err(|_| serde::de::Error::custom(format!("bad coefficient {s:?}"))),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

/// Multiplies out numerator and denominator factors and divides exactly.
///
/// Fails with [`Error::NonExactDivision`] carrying the remainder when the
/// quotient is not a polynomial in `ℤ[t]`.
pub fn eval_rational(numerator: &[IntPoly], denominator: &[IntPoly]) -> Result<IntPoly> {
    let num = IntPoly::product(numerator);
    let den = IntPoly::product(denominator);
    num.try_div_exact(&den)
}

/// `Some(p / q)` iff `q` divides `p` in `ℤ[t]`.
pub fn divides_ring(p: &IntPoly, q: &IntPoly) -> Result<Option<IntPoly>> {
    match p.try_div_exact(q) {
        Ok(quot) => Ok(Some(quot)),
        Err(Error::NonExactDivision { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// `Some(r)` iff `p = q · r` with every coefficient of `r` nonnegative.
///
/// `q` must be nonzero with nonnegative coefficients. A factor `t^s` of `q`
/// is split off first; since `ℤ[t]` is a domain the `ℤ[t]` quotient is the
/// only candidate for `r`.
pub fn divides_semiring(p: &IntPoly, q: &IntPoly) -> Result<Option<IntPoly>> {
    let shift = q.low_degree().ok_or(Error::DivisionByZero)?;
    if !q.has_nonnegative_coeffs() {
        return Err(Error::Precondition(format!(
            "semiring divisor {q} has a negative coefficient"
        )));
    }
    let q0 = q.unshift(shift).expect("shift is the low degree of q");
    let Some(p0) = p.unshift(shift) else {
        return Ok(None);
    };
    Ok(divides_ring(&p0, &q0)?.filter(IntPoly::has_nonnegative_coeffs))
}

pub fn is_palindromic(p: &IntPoly) -> bool {
    p.is_palindromic()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&p("1+t^3") * &p("1+t^5"), p("1+t^3+t^5+t^8"));
        assert!((&p("1+t") * &IntPoly::zero()).is_zero());
        assert_eq!(&p("1+t") - &p("1+t"), IntPoly::zero());
        assert_eq!(-p("t-1"), p("1-t"));
        let n = &IntPoly::one_plus_t_pow(9) * &p("1+t+t^4+t^6+t^8+t^12+t^16+t^18+t^20+t^23+t^24");
        assert_eq!(n.degree(), Some(33));
        assert_eq!(n.value_at_one(), BigInt::from(22));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("t^8-1"), IntPoly::t_pow_minus_one(8));
        assert_eq!(p("2t^5 - 3*t + 7").to_string(), "7 - 3t + 2t^5");
        assert_eq!(p("-t").coeffs(), &[BigInt::zero(), BigInt::from(-1)]);
        assert_eq!(p("0"), IntPoly::zero());
        assert!("1+".parse::<IntPoly>().is_err());
        assert!("t^x".parse::<IntPoly>().is_err());
        assert!("".parse::<IntPoly>().is_err());
    }

    #[test]
    fn eval_rational_exact_and_inexact() {
        assert_eq!(eval_rational(&[p("t^2-1")], &[p("t-1")]).unwrap(), p("1+t"));
        match eval_rational(&[p("t^2+1")], &[p("t-1")]) {
            Err(Error::NonExactDivision { remainder }) => assert_eq!(remainder, p("2")),
            other => panic!("expected remainder, got {other:?}"),
        }
        assert!(matches!(
            eval_rational(&[p("t")], &[IntPoly::zero()]),
            Err(Error::DivisionByZero)
        ));
        // Non-unit leading coefficient.
        assert!(eval_rational(&[p("t")], &[p("2t")]).is_err());
        assert_eq!(eval_rational(&[p("4t^2")], &[p("2t")]).unwrap(), p("2t"));
    }

    #[test]
    fn ring_divisibility() {
        assert_eq!(divides_ring(&p("1+t^5"), &p("1+t^3")).unwrap(), None);
        let x = p("3 + t^2 - 5t^7");
        assert_eq!(divides_ring(&x, &x).unwrap(), Some(IntPoly::one()));
        assert!(divides_ring(&x, &IntPoly::zero()).is_err());
        assert_eq!(divides_ring(&IntPoly::zero(), &x).unwrap(), Some(IntPoly::zero()));
    }

    #[test]
    fn semiring_divisibility() {
        let prod = &p("1+t^3") * &p("1+t^5");
        assert_eq!(divides_semiring(&prod, &p("1+t^3")).unwrap(), Some(p("1+t^5")));
        // 1 - t + t^2 has a negative coefficient: divisible in ℤ[t] only.
        let q = p("1+t");
        let x = p("1+t^3");
        assert!(divides_ring(&x, &q).unwrap().is_some());
        assert_eq!(divides_semiring(&x, &q).unwrap(), None);
        // Shift normalisation.
        assert_eq!(divides_semiring(&p("t^2+t^5"), &p("t+t^4")).unwrap(), Some(p("t")));
        assert_eq!(divides_semiring(&p("1+t^5"), &p("t+t^4")).unwrap(), None);
        assert!(divides_semiring(&x, &p("1-t")).is_err());
        assert!(divides_semiring(&x, &IntPoly::zero()).is_err());
    }

    #[test]
    fn palindromes() {
        assert!(p("1+t^3").is_palindromic());
        assert!(!p("1+t+t^3").is_palindromic());
        assert!(IntPoly::zero().is_palindromic());
    }

    #[test]
    fn json_form() {
        let x = p("1 - 2t^2");
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"coeffs":["1","0","-2"]}"#);
        assert_eq!(serde_json::from_str::<IntPoly>(&s).unwrap(), x);
        let y: IntPoly = serde_json::from_str(r#"{"coeffs":[1,0,0,0]}"#).unwrap();
        assert_eq!(y, IntPoly::one());
    }

    #[test]
    fn big_coefficients() {
        let x = IntPoly::one_plus_t_pow(1);
        let big = (0..200).fold(IntPoly::one(), |acc, _| &acc * &x);
        assert_eq!(big.value_at_one(), BigInt::from(2).pow(200));
        assert_eq!(big.try_div_exact(&x.clone()).unwrap().degree(), Some(199));
    }
}
