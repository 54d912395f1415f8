//! Scalar fields the rest of the crate is generic over.
//!
//! Three instances are provided:
//! - [`Rat`]: exact arbitrary-precision rationals (the workhorse),
//! - [`EpsRat`]: univariate rational functions in a formal regulator `eps`,
//!   used to take exact limits such as `s -> t` in norm computations,
//! - [`num_complex::Complex64`]: double-precision complex numbers for the
//!   numerical Bethe solver.
//!
//! Rational-backed instances are exact: equality is decidable and all
//! operations return canonical forms.

mod eps;
mod poly;

use std::fmt::{Debug, Display};
use std::ops::{Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use eps::EpsRat;
pub use poly::RatPoly;

/// Exact rational number with reduced numerator/denominator.
pub type Rat = num_rational::BigRational;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at eps = 0")]
    PoleAtZero,
    #[error("pole at evaluation point {0}")]
    PoleAtPoint(String),
    #[error("kernel pole at coinciding arguments u = {u}, v = {v}")]
    KernelPole { u: String, v: String },
    #[error("index {index} out of range for {what} of size {len}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        len: usize,
    },
    #[error("cardinality mismatch in color {color}: {left} vs {right}")]
    CardinalityMismatch {
        color: usize,
        left: usize,
        right: usize,
    },
    #[error("colorings disagree: {0} colors vs {1}")]
    ColoringMismatch(usize, usize),
    #[error("color {0} is empty")]
    EmptyColor(usize),
    #[error("coinciding parameters within color {0}")]
    CoincidentParameters(usize),
    #[error("duplicate interpolation node {0}")]
    DuplicateNode(String),
    #[error("invalid grading: m = {m}, n = {n} (need m + n >= 2) or c = 0")]
    InvalidGrading { m: usize, n: usize },
    #[error("non-finite complex value encountered")]
    NonFinite,
    #[error("singular Jacobian at iteration {0}")]
    SingularJacobian(usize),
    #[error("kernel pole persisted after {0} damping retries")]
    PoleRetryExhausted(usize),
    #[error("config error: {0}")]
    Config(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Arithmetic contract shared by every scalar field instance.
///
/// Values are immutable and cheap to clone at desk scale; all operations are
/// pure, so scalars can be shared freely across threads.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Sub<Output = Self>
    + Neg<Output = Self>
{
    /// Faithful embedding of an exact rational.
    fn from_rat(q: &Rat) -> Self;

    /// Division; errors on a zero divisor instead of panicking.
    fn try_div(&self, rhs: &Self) -> Result<Self>;

    /// Canonical serialization used as a memo key. Equal values (in canonical
    /// form) must produce equal keys.
    fn memo_key(&self) -> String;

    fn from_int(k: i64) -> Self {
        Self::from_rat(&Rat::from_integer(k.into()))
    }

    /// `(-1)^k` as a field element.
    fn sign(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Self::one()
        } else {
            -Self::one()
        }
    }
}

impl Scalar for Rat {
    fn from_rat(q: &Rat) -> Self {
        q.clone()
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self / rhs)
    }

    fn memo_key(&self) -> String {
        self.to_string()
    }
}

impl Scalar for Complex64 {
    fn from_rat(q: &Rat) -> Self {
        Complex64::new(q.to_f64().expect("rational out of f64 range"), 0.0)
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let out = self / rhs;
        if out.re.is_finite() && out.im.is_finite() {
            Ok(out)
        } else {
            Err(Error::NonFinite)
        }
    }

    fn memo_key(&self) -> String {
        format!("{:x}:{:x}", self.re.to_bits(), self.im.to_bits())
    }
}

/// Parses a rational from the JSON wire form `"p/q"` or `"p"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| Error::Config(format!("bad rational {s:?}: {e}")))
}

/// Rational as its wire form: `p/q`, or bare `p` for integers.
pub fn rat_to_string(q: &Rat) -> String {
    q.to_string()
}

/// Complex number with finiteness enforced (no NaN/Inf admitted).
pub fn complex_checked(re: f64, im: f64) -> Result<Complex64> {
    if re.is_finite() && im.is_finite() {
        Ok(Complex64::new(re, im))
    } else {
        Err(Error::NonFinite)
    }
}

/// Product over an iterator of scalars; empty products are 1.
pub fn product<S: Scalar>(items: impl IntoIterator<Item = S>) -> S {
    items.into_iter().fold(S::one(), |acc, x| acc * x)
}

/// Small helper for tests and configs: `q(p, q) = p/q`.
pub fn q(num: i64, den: i64) -> Rat {
    Rat::new(num.into(), den.into())
}

/// `k` as a rational.
pub fn qi(k: i64) -> Rat {
    Rat::from_integer(k.into())
}

/// Absolute value helper for convergence diagnostics on rationals.
pub fn rat_abs(x: &Rat) -> Rat {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
        assert_eq!(q(1, 2).try_div(&q(1, 3)).unwrap(), q(3, 2));
        assert_eq!(q(4, 8), q(1, 2));
    }

    #[test]
    fn divide_by_zero_is_an_error() {
        assert_eq!(qi(1).try_div(&qi(0)), Err(Error::DivisionByZero));
        let z = Complex64::new(1.0, 2.0);
        assert_eq!(
            z.try_div(&Complex64::new(0.0, 0.0)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn wire_form_round_trips() {
        assert_eq!(parse_rat("3/4").unwrap(), q(3, 4));
        assert_eq!(parse_rat("-7").unwrap(), qi(-7));
        assert_eq!(rat_to_string(&q(-3, 4)), "-3/4");
        assert_eq!(rat_to_string(&qi(5)), "5");
    }

    #[test]
    fn complex_guard_rejects_non_finite() {
        assert!(complex_checked(1.0, f64::NAN).is_err());
        assert!(complex_checked(f64::INFINITY, 0.0).is_err());
        assert!(complex_checked(0.5, -1.5).is_ok());
    }

    #[test]
    fn sign_helper() {
        assert_eq!(Rat::sign(0), qi(1));
        assert_eq!(Rat::sign(3), qi(-1));
        assert_eq!(Rat::sign(-1), qi(-1));
        assert_eq!(Rat::sign(-2), qi(1));
    }
}
