//! Exact arithmetic in the field Q(p), with q = p^2.
//!
//! A [`Scalar`] is stored as `p^shift * num(p) / den(p)` with `num` and `den`
//! coprime and not divisible by `p`. The denominator is kept factored into
//! cyclotomic polynomials times a cyclotomic-free remainder with constant
//! term 1. That form is unique, so derived equality and hashing are the
//! mathematical ones.

mod cyclo;
mod parse;
mod poly;

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use parse::ParseScalarError;
pub use poly::{rat, Poly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at p = {0}")]
    PoleAtPoint(String),
}

/// Laurent polynomial `p^shift * poly` with `poly(0) != 0` unless zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    shift: i64,
    poly: Poly,
}

impl LaurentPoly {
    pub fn new(shift: i64, poly: Poly) -> Self {
        if poly.is_zero() {
            return LaurentPoly { shift: 0, poly };
        }
        let k = poly.low_order();
        LaurentPoly {
            shift: shift + k as i64,
            poly: poly.shift_down(k),
        }
    }

    pub fn lowest_exponent(&self) -> i64 {
        self.shift
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.poly
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (k as i64 + self.shift, c))
    }
}

/// `p^shift * num / (Π Φ_m(p)^e * rest)`.
///
/// Invariants: `num(0) != 0`; `rest(0) = 1` and `rest` has no cyclotomic
/// factor; `num` is coprime to the whole denominator; zero is stored with
/// empty factor list and `rest = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    shift: i64,
    num: Poly,
    cyc: Vec<(u32, u32)>,
    rest: Poly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            shift: 0,
            num: Poly::zero(),
            cyc: Vec::new(),
            rest: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * p^e`.
    pub fn monomial(c: Rational, e: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Scalar {
            shift: e,
            num: Poly::constant(c),
            cyc: Vec::new(),
            rest: Poly::one(),
        }
    }

    /// `p^e`.
    pub fn p_pow(e: i64) -> Self {
        Self::monomial(Rational::one(), e)
    }

    /// `q^e = p^(2e)`.
    pub fn q_pow(e: i64) -> Self {
        Self::p_pow(2 * e)
    }

    pub fn p() -> Self {
        Self::p_pow(1)
    }

    pub fn q() -> Self {
        Self::p_pow(2)
    }

    pub fn from_laurent(l: &LaurentPoly) -> Self {
        Self::from_parts(l.shift, l.poly.clone(), Poly::one())
    }

    /// Builds and canonicalizes `p^shift * num / den`.
    pub fn from_parts(shift: i64, num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let kd = den.low_order();
        let (cyc, rest) = cyclo::split(&den.shift_down(kd));
        Self::build(shift - kd as i64, num, cyc, rest)
    }

    /// Canonicalizes given a cyclotomic-free `rest` with `rest(0) != 0`.
    fn build(shift: i64, num: Poly, cyc: Vec<(u32, u32)>, rest: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let kn = num.low_order();
        let shift = shift + kn as i64;
        let (mut num, cyc) = cyclo::cancel(num.shift_down(kn), &cyc);
        let mut rest = rest;
        if rest.degree().unwrap_or(0) > 0 {
            let g = Poly::gcd(&num, &rest);
            if g.degree().unwrap_or(0) > 0 {
                num = num.exact_div(&g);
                rest = rest.exact_div(&g);
            }
        }
        Self::normalized(shift, num, cyc, rest)
    }

    fn normalized(shift: i64, num: Poly, cyc: Vec<(u32, u32)>, rest: Poly) -> Self {
        let c = &rest.coeffs()[0];
        if c.is_one() {
            return Scalar {
                shift,
                num,
                cyc,
                rest,
            };
        }
        let inv = c.recip();
        Scalar {
            shift,
            num: num.scale(&inv),
            cyc,
            rest: rest.scale(&inv),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.cyc.is_empty() && self.rest.is_one()
    }

    /// True when the value is a Laurent polynomial in `p`.
    pub fn is_laurent(&self) -> bool {
        self.cyc.is_empty() && self.rest.is_one()
    }

    /// If the value is `c * p^e`, returns `(c, e)`.
    pub fn as_monomial(&self) -> Option<(Rational, i64)> {
        (self.is_laurent() && self.num.coeffs().len() == 1)
            .then(|| (self.num.coeffs()[0].clone(), self.shift))
    }

    /// Numerator and denominator polynomials, scaled so the denominator has
    /// constant term 1.
    fn expanded(&self) -> (Poly, Poly) {
        let den = &cyclo::expand(&self.cyc) * &self.rest;
        let c = den.coeffs()[0].clone();
        if c.is_one() {
            (self.num.clone(), den)
        } else {
            let inv = c.recip();
            (self.num.scale(&inv), den.scale(&inv))
        }
    }

    pub fn numerator(&self) -> LaurentPoly {
        LaurentPoly::new(self.shift, self.expanded().0)
    }

    pub fn denominator(&self) -> LaurentPoly {
        LaurentPoly::new(0, self.expanded().1)
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let num = &cyclo::expand(&self.cyc) * &self.rest;
        let (cyc, rest) = cyclo::split(&self.num);
        Ok(Self::normalized(-self.shift, num, cyc, rest))
    }

    pub fn pow(&self, e: i64) -> Scalar {
        let base = if e < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut acc = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Multiplies by `p^e`.
    pub fn shift_p(&self, e: i64) -> Scalar {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = self.clone();
        out.shift += e;
        out
    }

    pub fn eval_at(&self, p0: &Rational) -> Result<Rational, ScalarError> {
        let (num, den) = self.expanded();
        let d = den.eval(p0);
        if d.is_zero() || (p0.is_zero() && self.shift < 0) {
            return Err(ScalarError::PoleAtPoint(poly::fmt_rational(p0)));
        }
        let mut v = num.eval(p0) / d;
        if self.shift != 0 {
            let base = if self.shift > 0 {
                p0.clone()
            } else {
                p0.recip()
            };
            for _ in 0..self.shift.unsigned_abs() {
                v *= &base;
            }
        }
        Ok(v)
    }
}

/// The q-integer `[n]_q = (q^n - 1)/(q - 1)`, for any integer `n`.
pub fn q_int(n: i64) -> Scalar {
    // [n]_q = sum_{k=0}^{n-1} q^k for n >= 0, and -q^n [-n]_q for n < 0.
    let m = n.unsigned_abs() as usize;
    let mut coeffs = vec![Rational::zero(); 2 * m.max(1) - 1];
    for k in 0..m {
        coeffs[2 * k] = Rational::one();
    }
    let pos = Scalar::from_parts(0, Poly::from_coeffs(coeffs), Poly::one());
    if n >= 0 {
        pos
    } else {
        -(pos.shift_p(2 * n))
    }
}

/// `[n]_{1/q}`.
pub fn q_int_inv(n: i64) -> Scalar {
    q_int(n).shift_p(-2 * (n - 1))
}

/// `[n]_q!`
pub fn q_factorial(n: usize) -> Scalar {
    (1..=n as i64).map(q_int).product()
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(c: Rational) -> Self {
        Scalar::from_rational(c)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let s = self.shift.min(rhs.shift);
        let mut a = self.num.shift_up((self.shift - s) as usize);
        let mut b = rhs.num.shift_up((rhs.shift - s) as usize);
        let cyc = if self.cyc == rhs.cyc {
            self.cyc.clone()
        } else {
            let l = cyclo::merge(&self.cyc, &rhs.cyc, u32::max);
            a = &a * &cyclo::cofactor(&l, &self.cyc);
            b = &b * &cyclo::cofactor(&l, &rhs.cyc);
            l
        };
        let rest = if self.rest == rhs.rest {
            self.rest.clone()
        } else {
            let g = if self.rest.is_one() || rhs.rest.is_one() {
                Poly::one()
            } else {
                Poly::gcd(&self.rest, &rhs.rest)
            };
            let ca = rhs.rest.exact_div(&g);
            let cb = self.rest.exact_div(&g);
            a = &a * &ca;
            b = &b * &cb;
            &self.rest * &ca
        };
        Scalar::build(s, &a + &b, cyc, rest)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let mut out = self.clone();
        out.num = -&out.num;
        out
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        let shift = self.shift + rhs.shift;
        if self.is_laurent() && rhs.is_laurent() {
            return Scalar {
                shift,
                num: &self.num * &rhs.num,
                cyc: Vec::new(),
                rest: Poly::one(),
            };
        }
        // Cross-cancel before multiplying to keep degrees small.
        let (mut na, left_b) = cyclo::cancel(self.num.clone(), &rhs.cyc);
        let (mut nb, left_a) = cyclo::cancel(rhs.num.clone(), &self.cyc);
        let mut ra = self.rest.clone();
        let mut rb = rhs.rest.clone();
        if !rb.is_one() {
            let g = Poly::gcd(&na, &rb);
            if g.degree().unwrap_or(0) > 0 {
                na = na.exact_div(&g);
                rb = rb.exact_div(&g);
            }
        }
        if !ra.is_one() {
            let g = Poly::gcd(&nb, &ra);
            if g.degree().unwrap_or(0) > 0 {
                nb = nb.exact_div(&g);
                ra = ra.exact_div(&g);
            }
        }
        let cyc = cyclo::merge(&left_a, &left_b, |x, y| x + y);
        Scalar::normalized(shift, &na * &nb, cyc, &ra * &rb)
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |a, b| a * b)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            return write!(f, "{}", poly::fmt_laurent(&self.num, self.shift));
        }
        let (num, den) = self.expanded();
        write!(
            f,
            "({})/({})",
            poly::fmt_laurent(&num, self.shift),
            poly::fmt_laurent(&den, 0)
        )
    }
}

impl FromStr for Scalar {
    type Err = ParseScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse_scalar(s)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_integers() {
        assert_eq!(q_int(3), Scalar::one() + Scalar::q() + Scalar::q_pow(2));
        assert!(q_int(0).is_zero());
        assert_eq!(q_int(1), Scalar::one());
        // [-r]_q = -q^{-r} [r]_q
        for r in 1..5 {
            assert_eq!(q_int(-r), -(Scalar::q_pow(-r) * q_int(r)));
        }
    }

    #[test]
    fn q_int_matches_closed_form_at_p3() {
        let p0 = rat(3);
        let q0 = rat(9);
        for n in -4i64..=4 {
            let lhs = q_int(n).eval_at(&p0).unwrap();
            let qn = if n >= 0 {
                num_traits::pow(q0.clone(), n as usize)
            } else {
                num_traits::pow(q0.recip(), (-n) as usize)
            };
            assert_eq!(lhs, (qn - rat(1)) / (q0.clone() - rat(1)), "n = {n}");
        }
    }

    #[test]
    fn canonical_forms() {
        let q = Scalar::q();
        let x = (&q * &q - Scalar::one()) / (&q - Scalar::one());
        assert_eq!(x, q + Scalar::one());
        assert_eq!(q_int(2).inv().unwrap() * q_int(2), Scalar::one());
        assert_eq!(Scalar::p() * Scalar::p(), Scalar::q());
        assert_eq!(Scalar::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn evaluation() {
        assert_eq!(q_int(2).eval_at(&rat(2)).unwrap(), rat(5));
        assert_eq!(Scalar::p_pow(4).eval_at(&rat(1)).unwrap(), rat(1));
        let k21 = Scalar::q() / q_int(3);
        assert_eq!(
            k21.eval_at(&rat(2)).unwrap(),
            Rational::new(4.into(), 21.into())
        );
        let pole = (Scalar::q() - Scalar::one()).inv().unwrap();
        assert!(matches!(
            pole.eval_at(&rat(-1)),
            Err(ScalarError::PoleAtPoint(_))
        ));
    }

    #[test]
    fn shifted_q_integer_identity() {
        for m in -6..=6 {
            for n in -6..=6 {
                assert_eq!(q_int(m) * Scalar::q_pow(n) + q_int(n), q_int(m + n));
            }
        }
    }

    #[test]
    fn q_int_inverse_base() {
        // [2]_{1/q} = 1 + q^{-1}
        assert_eq!(q_int_inv(2), Scalar::one() + Scalar::q_pow(-1));
        assert_eq!(
            q_int_inv(3),
            Scalar::one() + Scalar::q_pow(-1) + Scalar::q_pow(-2)
        );
    }

    #[test]
    fn display_round_trip() {
        let x = (Scalar::q() - Scalar::one()) / q_int(3) * Scalar::p_pow(-3);
        let s = x.to_string();
        assert_eq!(s.parse::<Scalar>().unwrap(), x);
        assert_eq!("q".parse::<Scalar>().unwrap(), Scalar::q());
        assert_eq!(
            "p^2-1".parse::<Scalar>().unwrap(),
            Scalar::q() - Scalar::one()
        );
    }
}
