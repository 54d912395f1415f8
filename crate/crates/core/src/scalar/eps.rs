//! Rational functions in one formal regulator `eps`.
//!
//! Canonical form: numerator and denominator share no polynomial factor and
//! the denominator is monic, so equality is plain field-wise comparison. The
//! exact limit `eps -> 0` realizes coinciding-parameter limits such as the
//! norm limit `s -> t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::RatPoly;
use super::{Error, Rat, Result, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct EpsRat {
    num: RatPoly,
    den: RatPoly,
}

impl EpsRat {
    /// Builds `num/den` in canonical form; `den` must not be the zero polynomial.
    pub fn new(num: RatPoly, den: RatPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: RatPoly, den: RatPoly) -> Self {
        if num.is_zero() {
            return EpsRat {
                num: RatPoly::zero(),
                den: RatPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lead = den.leading_coeff().expect("nonzero denominator").clone();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        EpsRat { num, den }
    }

    pub fn from_poly(p: RatPoly) -> Self {
        EpsRat {
            num: p,
            den: RatPoly::one(),
        }
    }

    /// The regulator variable itself.
    pub fn eps() -> Self {
        EpsRat::from_poly(RatPoly::x())
    }

    pub fn numerator(&self) -> &RatPoly {
        &self.num
    }

    pub fn denominator(&self) -> &RatPoly {
        &self.den
    }

    /// Exact value of `lim_{eps -> 0}`, or `PoleAtZero` if the canonical
    /// denominator vanishes at the origin.
    pub fn limit_at_zero(&self) -> Result<Rat> {
        let d0 = self.den.constant_term();
        if d0.is_zero() {
            return Err(Error::PoleAtZero);
        }
        Ok(self.num.constant_term() / d0)
    }

    /// Pointwise evaluation at a rational `x`.
    pub fn eval_at(&self, x: &Rat) -> Result<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::PoleAtPoint(x.to_string()));
        }
        Ok(self.num.eval(x) / d)
    }

    /// Residue at the origin: `lim eps * self`, erroring unless the pole there
    /// is at most simple.
    pub fn residue_at_zero(&self) -> Result<Rat> {
        (EpsRat::eps() * self.clone()).limit_at_zero()
    }

    /// Derivative in `eps`, exact via the quotient rule.
    pub fn derivative(&self) -> Self {
        let num = self
            .num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()));
        let den = self.den.mul(&self.den);
        EpsRat::reduced(num, den)
    }

    /// The value as a plain rational if the function is constant.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.den.degree() == Some(0) && self.num.degree().map_or(true, |d| d == 0) {
            Some(self.num.constant_term() / self.den.constant_term())
        } else {
            None
        }
    }
}

impl fmt::Display for EpsRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |p: &RatPoly| {
            p.coeffs()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "[{}]/[{}]", side(&self.num), side(&self.den))
    }
}

impl Add for EpsRat {
    type Output = EpsRat;
    fn add(self, rhs: EpsRat) -> EpsRat {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        EpsRat::reduced(num, den)
    }
}

impl Sub for EpsRat {
    type Output = EpsRat;
    fn sub(self, rhs: EpsRat) -> EpsRat {
        self + (-rhs)
    }
}

impl Mul for EpsRat {
    type Output = EpsRat;
    fn mul(self, rhs: EpsRat) -> EpsRat {
        EpsRat::reduced(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Neg for EpsRat {
    type Output = EpsRat;
    fn neg(self) -> EpsRat {
        EpsRat {
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl Zero for EpsRat {
    fn zero() -> Self {
        EpsRat::from_poly(RatPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for EpsRat {
    fn one() -> Self {
        EpsRat::from_poly(RatPoly::one())
    }
}

impl Scalar for EpsRat {
    fn from_rat(q: &Rat) -> Self {
        EpsRat::from_poly(RatPoly::constant(q.clone()))
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(EpsRat::reduced(
            self.num.mul(&rhs.den),
            self.den.mul(&rhs.num),
        ))
    }

    fn memo_key(&self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::super::{q, qi};
    use super::*;

    fn shifted(a: i64) -> EpsRat {
        // eps + a
        EpsRat::eps() + EpsRat::from_rat(&qi(a))
    }

    #[test]
    fn gcd_cancellation_is_automatic() {
        // (eps^2 - 1)/(eps - 1) reduces to eps + 1
        let num = RatPoly::from_coeffs(vec![qi(-1), qi(0), qi(1)]);
        let den = RatPoly::from_coeffs(vec![qi(-1), qi(1)]);
        let r = EpsRat::new(num, den).unwrap();
        assert_eq!(r, shifted(1));
    }

    #[test]
    fn limit_at_zero_cases() {
        // (2 eps + 6)/(eps + 3) -> 2
        let r = (EpsRat::from_rat(&qi(2)) * shifted(3)).try_div(&shifted(3)).unwrap();
        assert_eq!(r.limit_at_zero().unwrap(), qi(2));

        // (eps^2 + eps)/eps -> 1 after cancellation
        let num = RatPoly::from_coeffs(vec![qi(0), qi(1), qi(1)]);
        let r = EpsRat::new(num, RatPoly::x()).unwrap();
        assert_eq!(r.limit_at_zero().unwrap(), qi(1));

        // 1/eps has a genuine pole
        let r = EpsRat::one().try_div(&EpsRat::eps()).unwrap();
        assert_eq!(r.limit_at_zero(), Err(Error::PoleAtZero));
        assert_eq!(r.residue_at_zero().unwrap(), qi(1));
    }

    #[test]
    fn eval_at_point() {
        // (eps + 1)/(eps - 2) at 0 -> -1/2
        let r = shifted(1).try_div(&shifted(-2)).unwrap();
        assert_eq!(r.eval_at(&qi(0)).unwrap(), q(-1, 2));
        let pole = EpsRat::one().try_div(&shifted(-2)).unwrap();
        assert_eq!(
            pole.eval_at(&qi(2)),
            Err(Error::PoleAtPoint("2".into()))
        );
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/deps [1/(eps+1)] = -1/(eps+1)^2, value -1 at 0
        let r = EpsRat::one().try_div(&shifted(1)).unwrap();
        assert_eq!(r.derivative().limit_at_zero().unwrap(), qi(-1));
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let r = shifted(2).try_div(&shifted(-5)).unwrap();
        let again = EpsRat::new(r.numerator().clone(), r.denominator().clone()).unwrap();
        assert_eq!(r, again);
    }
}
