//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored in ascending degree order; the representation is
//! canonical: empty vector for the zero polynomial, nonzero last coefficient
//! otherwise.

use num_traits::{One, Zero};

use super::{Rat, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = RatPoly { coeffs: vec![c] };
        p.normalize();
        p
    }

    /// The monomial `c * x^deg`.
    pub fn monomial(deg: usize, c: Rat) -> Self {
        if c.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        RatPoly { coeffs }
    }

    /// The variable itself.
    pub fn x() -> Self {
        RatPoly::monomial(1, Rat::one())
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = RatPoly { coeffs };
        p.normalize();
        p
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation with coefficients embedded into an arbitrary field.
    pub fn eval_in<S: Scalar>(&self, x: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + S::from_rat(c);
        }
        acc
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rat::from_integer(k.into()))
            .collect();
        RatPoly::from_coeffs(coeffs)
    }

    pub fn add(&self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        RatPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, rhs: &RatPoly) -> RatPoly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn div_rem(&self, div: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!div.is_zero(), "polynomial division by zero");
        let dd = div.degree().unwrap();
        let lead = div.leading_coeff().unwrap();
        let mut rem = self.clone();
        let mut quot = RatPoly::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading_coeff().unwrap() / lead;
            let term = RatPoly::monomial(rd - dd, c);
            quot = quot.add(&term);
            rem = rem.sub(&term.mul(div));
        }
        (quot, rem)
    }

    /// Monic greatest common divisor via the Euclidean algorithm. Remainders
    /// are renormalized to monic at each step to keep coefficients small.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone().into_monic();
        let mut b = other.clone().into_monic();
        if a.is_zero() {
            return b;
        }
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.into_monic();
        }
        a
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn into_monic(self) -> RatPoly {
        match self.leading_coeff() {
            None => self,
            Some(l) if l.is_one() => self,
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn constant_term(&self) -> Rat {
        self.coeffs.first().cloned().unwrap_or_else(Rat::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{q, qi};
    use super::*;

    fn p(cs: &[i64]) -> RatPoly {
        RatPoly::from_coeffs(cs.iter().map(|&k| qi(k)).collect())
    }

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        let a = RatPoly::from_coeffs(vec![qi(1), qi(0), qi(0)]);
        assert_eq!(a.degree(), Some(0));
        assert!(RatPoly::from_coeffs(vec![qi(0)]).is_zero());
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[-1, 0, 0, 1]); // x^3 - 1
        let b = p(&[-1, 1]); // x - 1
        let (quo, rem) = a.div_rem(&b);
        assert!(rem.is_zero());
        assert_eq!(quo, p(&[1, 1, 1]));
    }

    #[test]
    fn gcd_finds_common_factor() {
        let a = p(&[-1, 0, 1]); // (x-1)(x+1)
        let b = p(&[1, 2, 1]); // (x+1)^2
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert_eq!(p(&[2]).gcd(&p(&[0])), p(&[1]));
    }

    #[test]
    fn derivative_and_eval() {
        let a = p(&[1, -3, 0, 2]); // 2x^3 - 3x + 1
        assert_eq!(a.derivative(), p(&[-3, 0, 6]));
        assert_eq!(a.eval(&qi(2)), qi(11));
        assert_eq!(a.eval(&q(1, 2)), q(-1, 4));
    }
}
