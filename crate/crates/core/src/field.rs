//! Scalar fields. Everything in the crate is generic over [`Field`]; the
//! default scalar is [`Rational`], and [`Fp`] gives prime fields for
//! exhaustive searches.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid scalar {text:?}: {reason}")]
pub struct ParseScalarError {
    pub text: String,
    pub reason: &'static str,
}

/// Exact field arithmetic. `Ord` is only a total order used for
/// deterministic sorting, not a field ordering.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Ord
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + AddAssign
    + for<'a> AddAssign<&'a Self>
    + SubAssign
    + for<'a> SubAssign<&'a Self>
    + MulAssign
    + for<'a> MulAssign<&'a Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_i64(n: i64) -> Self;
    /// Image of `num/den`; `None` when `den` vanishes in the field.
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self>;
    /// 0 for the rationals.
    fn characteristic() -> u32;
    /// Short name, e.g. `rational` or `fp7`.
    fn name() -> String;
    /// All elements, for finite fields.
    fn elements() -> Option<Vec<Self>> {
        None
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Parses `"p"` or `"p/q"` with decimal integers.
    fn parse(text: &str) -> Result<Self, ParseScalarError> {
        let (num, den) = parse_fraction(text)?;
        Self::from_ratio(&num, &den).ok_or(ParseScalarError {
            text: text.to_string(),
            reason: "denominator vanishes in this field",
        })
    }
}

/// Splits a decimal fraction string into numerator and denominator.
pub fn parse_fraction(text: &str) -> Result<(BigInt, BigInt), ParseScalarError> {
    let err = |reason| ParseScalarError {
        text: text.to_string(),
        reason,
    };
    let t = text.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let int = |s: &str| -> Result<BigInt, ParseScalarError> {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err("expected a decimal integer or fraction"));
        }
        BigInt::from_str(s).map_err(|_| err("expected a decimal integer or fraction"))
    };
    let num = int(n)?;
    let den = match d {
        Some(d) => int(d)?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok((num, den))
}

/// Arbitrary-precision rational number, always in lowest terms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn to_f64(&self) -> Option<f64> {
        self.0.to_f64()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Rational {
    type Err = ParseScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        <Rational as Field>::parse(s)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }
    fn from_i64(n: i64) -> Self {
        n.into()
    }
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(Rational(BigRational::new(num.clone(), den.clone())))
        }
    }
    fn characteristic() -> u32 {
        0
    }
    fn name() -> String {
        "rational".into()
    }
}

macro_rules! forward_ops {
    ($t:ty, $($gen:tt)*) => {
        impl<$($gen)*> Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t { self.add_ref(&rhs) }
        }
        impl<'a, $($gen)*> Add<&'a $t> for $t {
            type Output = $t;
            fn add(self, rhs: &'a $t) -> $t { self.add_ref(rhs) }
        }
        impl<$($gen)*> Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t { self.sub_ref(&rhs) }
        }
        impl<'a, $($gen)*> Sub<&'a $t> for $t {
            type Output = $t;
            fn sub(self, rhs: &'a $t) -> $t { self.sub_ref(rhs) }
        }
        impl<$($gen)*> Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t { self.mul_ref(&rhs) }
        }
        impl<'a, $($gen)*> Mul<&'a $t> for $t {
            type Output = $t;
            fn mul(self, rhs: &'a $t) -> $t { self.mul_ref(rhs) }
        }
        impl<$($gen)*> AddAssign for $t {
            fn add_assign(&mut self, rhs: $t) { *self = self.add_ref(&rhs); }
        }
        impl<'a, $($gen)*> AddAssign<&'a $t> for $t {
            fn add_assign(&mut self, rhs: &'a $t) { *self = self.add_ref(rhs); }
        }
        impl<$($gen)*> SubAssign for $t {
            fn sub_assign(&mut self, rhs: $t) { *self = self.sub_ref(&rhs); }
        }
        impl<'a, $($gen)*> SubAssign<&'a $t> for $t {
            fn sub_assign(&mut self, rhs: &'a $t) { *self = self.sub_ref(rhs); }
        }
        impl<$($gen)*> MulAssign for $t {
            fn mul_assign(&mut self, rhs: $t) { *self = self.mul_ref(&rhs); }
        }
        impl<'a, $($gen)*> MulAssign<&'a $t> for $t {
            fn mul_assign(&mut self, rhs: &'a $t) { *self = self.mul_ref(rhs); }
        }
    };
}

impl Rational {
    fn add_ref(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }
}

forward_ops!(Rational,);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

/// The prime field `Z/PZ`. `P` must be prime; only primes up to 251 are
/// wired into the command-line front end.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub fn new(n: i64) -> Self {
        Fp(n.rem_euclid(P as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        Fp(((self.0 as u64 + rhs.0 as u64) % P as u64) as u32)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        Fp(((self.0 as u64 + P as u64 - rhs.0 as u64) % P as u64) as u32)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        Fp(((self.0 as u64 * rhs.0 as u64) % P as u64) as u32)
    }

    fn pow(self, mut e: u32) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        acc
    }
}

forward_ops!(Fp<P>, const P: u32);

impl<const P: u32> Neg for Fp<P> {
    type Output = Fp<P>;
    fn neg(self) -> Fp<P> {
        Fp((P - self.0) % P)
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u32> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }
    fn from_i64(n: i64) -> Self {
        Fp::new(n)
    }
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        let p = BigInt::from(P);
        let reduce = |x: &BigInt| Fp::<P>(x.mod_floor(&p).to_u32().expect("residue fits"));
        reduce(den).inv().map(|d| reduce(num) * d)
    }
    fn characteristic() -> u32 {
        P
    }
    fn name() -> String {
        format!("fp{P}")
    }
    fn elements() -> Option<Vec<Self>> {
        Some((0..P).map(Fp).collect())
    }
}

/// Converts between fields through the rationals. Fails when a denominator
/// vanishes in the target.
pub fn rational_to<F: Field>(q: &Rational) -> Option<F> {
    F::from_ratio(q.numer(), q.denom())
}

/// Symmetric range of small integers `-k..=k`, used as search grids.
pub fn integer_grid<F: Field>(k: i64) -> Vec<F> {
    let mut out: Vec<F> = (-k..=k).map(F::from_i64).collect();
    out.sort();
    out.dedup();
    out
}

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d: &u32| d * d <= n).all(|d| n % d != 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Fp<7>;

    #[test]
    fn rational_parse_and_display_round_trip() {
        for (text, shown) in [("3", "3"), ("-6/4", "-3/2"), ("0/5", "0"), ("+2/1", "2")] {
            let q: Rational = text.parse().unwrap();
            assert_eq!(q.to_string(), shown);
        }
        for bad in ["", "1.5", "1/0", "x", "1/", "--1", "3e2"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad}");
        }
    }

    #[test]
    fn prime_field_inverses() {
        for a in F7::elements().unwrap() {
            match a.inv() {
                None => assert!(a.is_zero()),
                Some(b) => assert!((a * b).is_one()),
            }
        }
        assert_eq!(F7::parse("1/2").unwrap(), F7::new(4));
        assert_eq!(F7::parse("-1").unwrap(), F7::new(6));
        assert!(F7::parse("1/7").is_err());
    }

    #[test]
    fn conversion_through_rationals() {
        let q = Rational::new(3, 2);
        assert_eq!(rational_to::<F7>(&q), Some(F7::new(5)));
        assert_eq!(rational_to::<Fp<2>>(&q), None);
        assert_eq!(rational_to::<Rational>(&q), Some(q));
    }

    #[test]
    fn primes() {
        let small: Vec<u32> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
