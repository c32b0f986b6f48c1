//! Sparse Laurent polynomials in two variables over the integers.
//!
//! The two exponent slots are labelled `q` and `t` in text form. Burau matrices
//! only use the `t` slot; the BMW checks reuse the slots for `α` and `l`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent pair `(first, second)`, ordered lexicographically.
pub type Exponent = (i32, i32);

/// Exact rational numbers used as evaluation points.
pub type ExactRational = BigRational;

/// A Laurent polynomial with arbitrary precision integer coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficients, so structural
/// equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    terms: Vec<(Exponent, BigInt)>,
}

/// Image of a variable under a signed monomial substitution:
/// `sign · x^first · y^second` in the target variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonomialImage {
    pub negate: bool,
    pub first: i32,
    pub second: i32,
}

impl MonomialImage {
    pub fn new(negate: bool, first: i32, second: i32) -> Self {
        MonomialImage { negate, first, second }
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c · q^a · t^b`.
    pub fn monomial(c: impl Into<BigInt>, a: i32, b: i32) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![((a, b), c)] }
        }
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, C)>,
        C: Into<BigInt>,
    {
        let mut acc: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_insert_with(BigInt::zero) += c.into();
        }
        Self::from_map(acc)
    }

    fn from_map(map: BTreeMap<Exponent, BigInt>) -> Self {
        LaurentPoly {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(Exponent, BigInt)] {
        &self.terms
    }

    /// Number of nonzero terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    /// Coefficient of `q^a t^b`.
    pub fn coeff(&self, e: Exponent) -> BigInt {
        match self.terms.binary_search_by(|(x, _)| x.cmp(&e)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Returns `(±1, exponent)` when the polynomial is a unit of the Laurent ring.
    pub fn as_unit(&self) -> Option<(bool, Exponent)> {
        match self.terms.as_slice() {
            [(e, c)] if c.abs().is_one() => Some((c.is_negative(), *e)),
            _ => None,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `q^a t^b`.
    pub fn shift(&self, a: i32, b: i32) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|((x, y), c)| ((x + a, y + b), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Range of exponents in the second slot (`t`), or `None` for zero.
    pub fn t_range(&self) -> Option<(i32, i32)> {
        let lo = self.terms.iter().map(|((_, b), _)| *b).min()?;
        let hi = self.terms.iter().map(|((_, b), _)| *b).max()?;
        Some((lo, hi))
    }

    /// Range of exponents in the first slot (`q`), or `None` for zero.
    pub fn q_range(&self) -> Option<(i32, i32)> {
        let lo = self.terms.first()?.0 .0;
        let hi = self.terms.last()?.0 .0;
        Some((lo, hi))
    }

    /// The coefficient of `t^k`, as a polynomial in `q` alone.
    pub fn t_coefficient(&self, k: i32) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|((_, b), _)| *b == k)
                .map(|((a, _), c)| ((*a, 0), c.clone()))
                .collect(),
        }
    }

    /// Positive gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.terms
            .iter()
            .fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
    }

    /// Exact evaluation at nonzero rational points.
    pub fn eval(&self, q: &ExactRational, t: &ExactRational) -> Result<ExactRational> {
        let mut acc = ExactRational::zero();
        for ((a, b), c) in &self.terms {
            let term = ExactRational::from_integer(c.clone())
                * rational_pow(q, *a)?
                * rational_pow(t, *b)?;
            acc += term;
        }
        Ok(acc)
    }

    /// Evaluates the first variable only, leaving a polynomial in `t` with
    /// rational coefficients keyed by `t`-exponent.
    pub fn eval_q(&self, q: &ExactRational) -> Result<BTreeMap<i32, ExactRational>> {
        let mut out: BTreeMap<i32, ExactRational> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            let v = ExactRational::from_integer(c.clone()) * rational_pow(q, *a)?;
            *out.entry(*b).or_insert_with(ExactRational::zero) += v;
        }
        out.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    /// Ring homomorphism sending `q ↦ q_img`, `t ↦ t_img` where both images are
    /// signed monomials in the target variables.
    pub fn subst_monomial(&self, q_img: MonomialImage, t_img: MonomialImage) -> Self {
        Self::from_terms(self.terms.iter().map(|((a, b), c)| {
            let negative = (q_img.negate && a.rem_euclid(2) == 1) ^ (t_img.negate && b.rem_euclid(2) == 1);
            let e = (
                q_img.first * a + t_img.first * b,
                q_img.second * a + t_img.second * b,
            );
            (e, if negative { -c } else { c.clone() })
        }))
    }

    /// Exact quotient `self / d` in the Laurent ring, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let [((da, db), dc)] = d.terms.as_slice() {
            let mut terms = Vec::with_capacity(self.terms.len());
            for ((a, b), c) in &self.terms {
                let (quot, rem) = c.div_rem(dc);
                if !rem.is_zero() {
                    return None;
                }
                terms.push(((a - da, b - db), quot));
            }
            return Some(LaurentPoly { terms });
        }
        // Degrees add in both variables, so the quotient's support lies in a known box.
        let (sq0, sq1) = self.q_range()?;
        let (st0, st1) = self.t_range()?;
        let (dq0, dq1) = d.q_range()?;
        let (dt0, dt1) = d.t_range()?;
        let (qlo, qhi, tlo, thi) = (sq0 - dq0, sq1 - dq1, st0 - dt0, st1 - dt1);
        if qlo > qhi || tlo > thi {
            return None;
        }
        let (lead_e, lead_c) = d.terms.last().cloned()?;
        let mut rem = self.clone();
        let mut quot: Vec<(Exponent, BigInt)> = Vec::new();
        while let Some((re, rc)) = rem.terms.last().cloned() {
            let e = (re.0 - lead_e.0, re.1 - lead_e.1);
            if e.0 < qlo || e.0 > qhi || e.1 < tlo || e.1 > thi {
                return None;
            }
            let (c, r) = rc.div_rem(&lead_c);
            if !r.is_zero() {
                return None;
            }
            rem -= &d.shift(e.0, e.1).scale(&c);
            quot.push((e, c));
        }
        quot.reverse();
        Some(LaurentPoly { terms: quot })
    }

    /// Text form with custom variable names.
    pub fn display_with<'a>(&'a self, first: &'a str, second: &'a str) -> impl fmt::Display + 'a {
        Named { poly: self, first, second }
    }
}

fn rational_pow(x: &ExactRational, e: i32) -> Result<ExactRational> {
    if e == 0 {
        return Ok(ExactRational::one());
    }
    if x.is_zero() {
        return if e > 0 { Ok(ExactRational::zero()) } else { Err(Error::ZeroEvaluation) };
    }
    let base = if e < 0 { x.recip() } else { x.clone() };
    Ok(num_traits::pow(base, e.unsigned_abs() as usize))
}

struct Named<'a> {
    poly: &'a LaurentPoly,
    first: &'a str,
    second: &'a str,
}

impl fmt::Display for Named<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, ((a, b), c)) in self.poly.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*{}^{}*{}^{}", c, self.first, a, self.second, b)?;
        }
        Ok(())
    }
}

/// Canonical wire form: `c*q^a*t^b` terms joined by ` + `, sorted by `(a, b)`; zero is `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("q", "t"))
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Accepts the canonical form, and also terms with omitted factors such as `-3*t^2` or `q`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms: Vec<(Exponent, BigInt)> = Vec::new();
        for raw in s.split('+') {
            let raw = raw.trim();
            if raw.is_empty() {
                return Err(Error::Parse(format!("empty term in {s:?}")));
            }
            let mut coeff = BigInt::one();
            let mut e = (0i32, 0i32);
            for factor in raw.split('*') {
                let factor = factor.trim();
                let (var, exp) = match factor.split_once('^') {
                    Some((v, x)) => (
                        v.trim(),
                        x.trim()
                            .parse::<i32>()
                            .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                    ),
                    None => (factor, 1),
                };
                match var {
                    "q" => e.0 += exp,
                    "t" => e.1 += exp,
                    _ if !factor.contains('^') => {
                        let c: BigInt = factor
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad factor {factor:?}")))?;
                        coeff *= c;
                    }
                    _ => return Err(Error::Parse(format!("unknown variable in {factor:?}"))),
                }
            }
            terms.push((e, coeff));
        }
        Ok(Self::from_terms(terms))
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

fn merge(a: &[(Exponent, BigInt)], b: &[(Exponent, BigInt)], negate_b: bool) -> Vec<(Exponent, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
            out.push((b[j].0, c));
            j += 1;
        } else {
            let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
            if !c.is_zero() {
                out.push((a[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly { terms: merge(&self.terms, &rhs.terms, false) }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly { terms: merge(&self.terms, &rhs.terms, true) }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if self.terms.len() == 1 {
            let ((a, b), c) = &self.terms[0];
            return rhs.shift(*a, *b).scale(c);
        }
        if rhs.terms.len() == 1 {
            let ((a, b), c) = &rhs.terms[0];
            return self.shift(*a, *b).scale(c);
        }
        let mut acc: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                *acc.entry((a1 + a2, b1 + b2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        LaurentPoly::from_map(acc)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.terms = merge(&self.terms, &rhs.terms, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.terms = merge(&self.terms, &rhs.terms, true);
    }
}
