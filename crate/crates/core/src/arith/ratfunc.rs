use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// A quotient of two Laurent polynomials.
///
/// Normalization strips the common integer content, makes the leading
/// coefficient of the denominator positive and shifts both parts so the
/// denominator has minimal exponent zero in each variable. When the denominator
/// divides the numerator exactly the denominator becomes `1`.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFunction { num: p, den: LaurentPoly::one() }
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::from_poly(LaurentPoly::zero());
        }
        if let Some(quot) = num.div_exact(&den) {
            return Self::from_poly(quot);
        }
        let mut g = num.content().gcd(&den.content());
        if den.terms().last().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            g = -g;
        }
        let (num, den) = (
            num.div_exact(&LaurentPoly::constant(g.clone())).unwrap_or(num),
            den.div_exact(&LaurentPoly::constant(g)).unwrap_or(den),
        );
        let (qlo, _) = den.q_range().unwrap_or((0, 0));
        let (tlo, _) = den.t_range().unwrap_or((0, 0));
        RationalFunction {
            num: num.shift(-qlo, -tlo),
            den: den.shift(-qlo, -tlo),
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a Laurent polynomial, when it is one.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.num.div_exact(&self.den)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.recip()?)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        &self + &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn reduces_to_polynomial_when_divisible() {
        let f = RationalFunction::new(p("1 + -1*t^2"), p("1 + t")).unwrap();
        assert_eq!(f.to_laurent(), Some(p("1 + -1*t")));
        assert_eq!(f.denominator(), &LaurentPoly::one());
    }

    #[test]
    fn normalization_is_canonical_up_to_units() {
        let f = RationalFunction::new(p("2*q"), p("-4*q^3*t + -4*q^3")).unwrap();
        assert_eq!(f.numerator(), &p("-1*q^-2"));
        assert_eq!(f.denominator(), &p("2 + 2*t"));
        assert!(f.to_laurent().is_none());
        assert_eq!(RationalFunction::new(p("1"), LaurentPoly::zero()).unwrap_err(), Error::ZeroDenominator);
    }

    #[test]
    fn field_operations() {
        let a = RationalFunction::new(p("1"), p("1 + t")).unwrap();
        let b = RationalFunction::new(p("t"), p("1 + t")).unwrap();
        assert_eq!((&a + &b).to_laurent(), Some(LaurentPoly::one()));
        let c = RationalFunction::new(p("q"), p("1 + -1*q")).unwrap();
        let prod = &c * &c.recip().unwrap();
        assert_eq!(prod.to_laurent(), Some(LaurentPoly::one()));
        assert!((&c - &c).is_zero());
        assert_eq!(a.checked_div(&b).unwrap().to_laurent(), Some(p("t^-1")));
    }
}
