//! Univariate polynomials in `t` over the rationals and rational functions,
//! used for Hilbert and Molien series.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Dense coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_ints(&[1])
    }

    /// `1 - t^k`.
    pub fn one_minus_t_pow(k: usize) -> Self {
        let mut c = vec![BigRational::zero(); k + 1];
        c[0] = BigRational::one();
        c[k] -= BigRational::one();
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = &rem[top] / &lead;
            if !c.is_zero() {
                let shift = top - dd;
                for (j, b) in d.coeffs.iter().enumerate() {
                    rem[shift + j] -= &c * b;
                }
                quot[shift] = c;
            }
            rem.pop();
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * t + c)
    }
}

fn fmt_rational_coeff(c: &BigRational) -> String {
    c.to_string()
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let cs = fmt_rational_coeff(&abs);
            match i {
                0 => write!(f, "{cs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{cs}*")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Univariate rational function `num / den` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    /// Builds and normalizes `num / den`.
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        rational_function_normalize(&Self { num, den })
    }

    /// `num / den` kept exactly as given (not normalized).
    pub fn raw(num: UniPoly, den: UniPoly) -> Self {
        Self { num, den }
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    /// `deg num - deg den`; `None` for the zero function.
    pub fn degree(&self) -> Option<i64> {
        Some(self.num.degree()? as i64 - self.den.degree()? as i64)
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        Self::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }

    pub fn scale(&self, c: &BigRational) -> Result<Self> {
        Self::new(self.num.scale(c), self.den.clone())
    }

    /// Same function (cross-multiplied polynomial identity).
    pub fn same_function(&self, o: &Self) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }

    /// First `n + 1` power series coefficients; requires a nonzero constant
    /// term in the denominator.
    pub fn series(&self, n: usize) -> Result<Vec<BigRational>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::Input("rational function has a pole at t = 0".into()));
        }
        let inv0 = d0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.num.coeff(k);
            for j in 1..=k.min(self.den.coeffs.len().saturating_sub(1)) {
                acc -= self.den.coeff(j) * &out[k - j];
            }
            out.push(acc * &inv0);
        }
        Ok(out)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strs.serialize(s)
    }
}

/// Cancels the gcd and scales so the denominator has constant term 1
/// (leading coefficient 1 if its constant term vanishes).
pub fn rational_function_normalize(f: &RationalFunction) -> Result<RationalFunction> {
    if f.den.is_zero() {
        return Err(Error::Input("rational function with zero denominator".into()));
    }
    if f.num.is_zero() {
        return Ok(RationalFunction { num: UniPoly::zero(), den: UniPoly::one() });
    }
    let g = f.num.gcd(&f.den);
    let (num, _) = f.num.div_rem(&g);
    let (den, _) = f.den.div_rem(&g);
    let c0 = den.coeff(0);
    let scale = if !c0.is_zero() { c0.recip() } else { den.leading().unwrap().recip() };
    Ok(RationalFunction { num: num.scale(&scale), den: den.scale(&scale) })
}

/// `Π (1 - t^{d_i})`.
pub fn product_one_minus(degrees: &[u32]) -> UniPoly {
    degrees.iter().fold(UniPoly::one(), |acc, &d| acc.mul(&UniPoly::one_minus_t_pow(d as usize)))
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn telescoping_factor_cancels() {
        let f = RationalFunction::new(UniPoly::one_minus_t_pow(2), UniPoly::one_minus_t_pow(1)).unwrap();
        assert_eq!(f.numerator(), &UniPoly::from_ints(&[1, 1]));
        assert_eq!(f.denominator(), &UniPoly::one());
    }

    #[test]
    fn symmetric_group_series_degree() {
        let den = product_one_minus(&[1, 2, 3]);
        let f = RationalFunction::new(UniPoly::one(), den.clone()).unwrap();
        assert_eq!(f.denominator(), &den);
        assert_eq!(f.degree(), Some(-6));
    }

    #[test]
    fn alternating_group_series_degree() {
        // (1 + t^3) / ((1-t)(1-t^2)(1-t^3)): 3 - 6 = -3
        let f = RationalFunction::new(UniPoly::from_ints(&[1, 0, 0, 1]), product_one_minus(&[1, 2, 3])).unwrap();
        assert_eq!(f.degree(), Some(-3));
        // and it equals (1 - t^6) / ((1-t)(1-t^2)(1-t^3)^2)
        let g = RationalFunction::new(UniPoly::one_minus_t_pow(6), product_one_minus(&[1, 2, 3, 3])).unwrap();
        assert_eq!(f, g);
        // expansion: dims 1,1,2,4,5,7,...
        let s: Vec<BigRational> = f.series(5).unwrap();
        assert_eq!(s, [1, 1, 2, 4, 5, 7].iter().map(|&v| int(v)).collect::<Vec<_>>());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RationalFunction::new(UniPoly::one(), UniPoly::zero()).is_err());
    }

    #[test]
    fn normalization_preserves_function() {
        let num = UniPoly::from_ints(&[2, 0, -2]);
        let den = UniPoly::from_ints(&[0, 4, 4]);
        let raw = RationalFunction::raw(num, den);
        let n = rational_function_normalize(&raw).unwrap();
        assert!(n.same_function(&raw));
        assert_eq!(n.degree(), Some(0));
        // (2 - 2t^2) / (4t + 4t^2) = (1 - t) / (2t)
        assert_eq!(n.numerator(), &UniPoly::new(vec![int(1) / int(2), int(-1) / int(2)]));
    }

    #[test]
    fn div_rem_and_gcd() {
        let a = UniPoly::from_ints(&[-1, 0, 1]); // t^2 - 1
        let b = UniPoly::from_ints(&[1, 1]); // t + 1
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, UniPoly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&UniPoly::from_ints(&[-1, 1])), UniPoly::from_ints(&[-1, 1]));
    }
}
