//! Exact rational scalars.
//!
//! Values whose numerator and denominator fit in an `i64` are kept inline and
//! combined through `i128` intermediates; anything larger is promoted to a
//! heap-allocated [`BigRational`]. The representation is canonical: a value
//! that fits the inline form is never stored as a big rational, so derived
//! equality and hashing are structural.

use alloc::boxed::Box;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Lowest terms, `den > 0`, `num != i64::MIN`.
    Small { num: i64, den: i64 },
    Big(Box<BigRational>),
}

/// An exact rational number in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

impl Scalar {
    pub const ZERO: Scalar = Scalar(Repr::Small { num: 0, den: 1 });
    pub const ONE: Scalar = Scalar(Repr::Small { num: 1, den: 1 });

    /// Builds `num / den`. Returns `None` when `den == 0`.
    pub fn new(num: i64, den: i64) -> Option<Scalar> {
        if den == 0 {
            return None;
        }
        Some(Scalar::from_i128(num as i128, den as i128))
    }

    pub fn from_integer(n: i64) -> Scalar {
        Scalar::from_i128(n as i128, 1)
    }

    /// Builds a scalar from arbitrary-precision parts. Returns `None` when the
    /// denominator is zero.
    pub fn from_bigs(num: BigInt, den: BigInt) -> Option<Scalar> {
        if den.is_zero() {
            return None;
        }
        Some(Scalar::from_big(BigRational::new(num, den)))
    }

    fn from_i128(num: i128, den: i128) -> Scalar {
        debug_assert!(den != 0);
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) if n != i64::MIN => Scalar(Repr::Small { num: n, den: d }),
            _ => Scalar(Repr::Big(Box::new(BigRational::new_raw(
                BigInt::from(n),
                BigInt::from(d),
            )))),
        }
    }

    fn from_big(r: BigRational) -> Scalar {
        // `BigRational` arithmetic already keeps lowest terms with a positive
        // denominator; demote when the inline form can hold it.
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN {
                return Scalar(Repr::Small { num: n, den: d });
            }
        }
        Scalar(Repr::Big(Box::new(r)))
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => {
                BigRational::new_raw(BigInt::from(*num), BigInt::from(*den))
            }
            Repr::Big(r) => (**r).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small { num, .. } => BigInt::from(*num),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small { den, .. } => BigInt::from(*den),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    /// Numerator and denominator as `i64` when both fit.
    pub fn to_i64_parts(&self) -> Option<(i64, i64)> {
        match &self.0 {
            Repr::Small { num, den } => Some((*num, *den)),
            Repr::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small { num: 1, den: 1 })
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small { den, .. } => *den == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small { num, .. } => *num < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn abs(&self) -> Scalar {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small { num, den } => Scalar::from_i128(*den as i128, *num as i128),
            Repr::Big(r) => Scalar::from_big(r.recip()),
        })
    }

    /// `(-1)^k`.
    pub fn sign(negative: bool) -> Scalar {
        if negative {
            -Scalar::ONE
        } else {
            Scalar::ONE
        }
    }

    /// Greatest common divisor of two integers (non-negative). Both inputs
    /// must be integral.
    pub(crate) fn int_gcd(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: 1 }, Repr::Small { num: b, den: 1 }) => {
                Scalar::from_integer(a.gcd(b))
            }
            _ => Scalar::from_big(BigRational::from_integer(self.numer().gcd(&other.numer()))),
        }
    }

    /// Least common multiple of two positive integers.
    pub(crate) fn int_lcm(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: 1 }, Repr::Small { num: b, den: 1 }) => {
                let l = (*a as i128).lcm(&(*b as i128));
                Scalar::from_i128(l, 1)
            }
            _ => Scalar::from_big(BigRational::from_integer(self.numer().lcm(&other.numer()))),
        }
    }

    /// Denominator as a scalar.
    pub(crate) fn denom_scalar(&self) -> Scalar {
        match &self.0 {
            Repr::Small { den, .. } => Scalar::from_integer(*den),
            Repr::Big(r) => Scalar::from_big(BigRational::from_integer(r.denom().clone())),
        }
    }

    /// Renders as `n` or `n/d`.
    pub fn to_text(&self) -> String {
        use alloc::string::ToString;
        self.to_string()
    }
}

/// Returned when text is not of the form `n` or `n/d` with `d ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParseScalarError;

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected an integer or a fraction n/d with nonzero d")
    }
}

impl core::str::FromStr for Scalar {
    type Err = ParseScalarError;

    fn from_str(text: &str) -> Result<Scalar, ParseScalarError> {
        let parse = |t: &str| t.trim().parse::<BigInt>().map_err(|_| ParseScalarError);
        match text.split_once('/') {
            None => Scalar::from_bigs(parse(text)?, BigInt::one()).ok_or(ParseScalarError),
            Some((n, d)) => Scalar::from_bigs(parse(n)?, parse(d)?).ok_or(ParseScalarError),
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::ZERO
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_integer(n)
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Self {
        Scalar::from_integer(n as i64)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::from_big(r)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den: 1 } => write!(f, "{num}"),
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Big(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128)))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

fn add_ref(a: &Scalar, b: &Scalar) -> Scalar {
    match (&a.0, &b.0) {
        (Repr::Small { num: 0, .. }, _) => b.clone(),
        (_, Repr::Small { num: 0, .. }) => a.clone(),
        (Repr::Small { num: an, den: ad }, Repr::Small { num: bn, den: bd }) => {
            if ad == bd {
                Scalar::from_i128(*an as i128 + *bn as i128, *ad as i128)
            } else {
                let (an, ad, bn, bd) = (*an as i128, *ad as i128, *bn as i128, *bd as i128);
                Scalar::from_i128(an * bd + bn * ad, ad * bd)
            }
        }
        _ => Scalar::from_big(a.to_big() + b.to_big()),
    }
}

fn mul_ref(a: &Scalar, b: &Scalar) -> Scalar {
    match (&a.0, &b.0) {
        (Repr::Small { num: 0, .. }, _) | (_, Repr::Small { num: 0, .. }) => Scalar::ZERO,
        (Repr::Small { num: 1, den: 1 }, _) => b.clone(),
        (_, Repr::Small { num: 1, den: 1 }) => a.clone(),
        (Repr::Small { num: an, den: ad }, Repr::Small { num: bn, den: bd }) => Scalar::from_i128(
            *an as i128 * *bn as i128,
            *ad as i128 * *bd as i128,
        ),
        _ => Scalar::from_big(a.to_big() * b.to_big()),
    }
}

fn neg_ref(a: &Scalar) -> Scalar {
    match &a.0 {
        Repr::Small { num, den } => Scalar(Repr::Small { num: -num, den: *den }),
        Repr::Big(r) => Scalar::from_big(-(**r).clone()),
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident, $f:expr) => {
        impl<'a, 'b> $Trait<&'b Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'b Scalar) -> Scalar {
                $f(self, rhs)
            }
        }
        impl $Trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $f(&self, &rhs)
            }
        }
        impl<'b> $Trait<&'b Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'b Scalar) -> Scalar {
                $f(&self, rhs)
            }
        }
        impl<'a> $Trait<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $f(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, |a: &Scalar, b: &Scalar| add_ref(a, &neg_ref(b)));
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, |a: &Scalar, b: &Scalar| {
    mul_ref(a, &b.recip().expect("division by zero scalar"))
});

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        neg_ref(&self)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        neg_ref(self)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = add_ref(self, rhs);
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = add_ref(self, &rhs);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = add_ref(self, &neg_ref(rhs));
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = add_ref(self, &neg_ref(&rhs));
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = mul_ref(self, rhs);
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::ZERO, |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::ZERO, |acc, x| acc + x)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::ZERO
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::ONE
    }
}

/// `acc += a * b` without an intermediate clone when either factor is zero.
#[inline]
pub(crate) fn fma(acc: &mut Scalar, a: &Scalar, b: &Scalar) {
    if a.is_zero() || b.is_zero() {
        return;
    }
    *acc += mul_ref(a, b);
}
