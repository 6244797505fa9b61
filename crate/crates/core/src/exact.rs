//! Arbitrary-precision rational arithmetic, Bernoulli numbers, binomial
//! coefficients and factorial quotients.
//!
//! Every pairing the engine produces is a [`Rational`]; nothing in this
//! module ever rounds. Bernoulli numbers follow the convention
//! `B1 = -1/2`, i.e. they are computed from the defining recurrence
//! `sum_{j=0..m} C(m+1, j) * B_j = 0` with `B0 = 1`, and are memoized.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

/// Exact rational number, always in lowest terms with positive
/// denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// Build `num/den`, reducing to lowest terms. Panics if `den` is zero.
    pub fn new(num: BigInt, den: BigInt) -> Self {
        Rational(BigRational::new(num, den))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// `2^k` for `k >= 0`.
    pub fn pow_of_two(k: u32) -> Self {
        Rational::from_bigint(BigInt::one() << k)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
    }

    /// Canonical machine form `p/q`, with the denominator always written
    /// out (`4` renders as `4/1`).
    pub fn machine_form(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

/// Human-readable form: `p/q`, or just `p` when the denominator is 1.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `p`, `p/q` or `-p/q`; whitespace is not tolerated.
impl FromStr for Rational {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num = BigInt::from_str(num).map_err(|e| format!("bad numerator {num:?}: {e}"))?;
        let den = BigInt::from_str(den).map_err(|e| format!("bad denominator {den:?}: {e}"))?;
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(Rational::new(num, den))
    }
}

/// Serializes as `{"num": "...", "den": "..."}` so consumers never face
/// integer-width issues.
impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Rational", 2)?;
        s.serialize_field("num", &self.numer().to_string())?;
        s.serialize_field("den", &self.denom().to_string())?;
        s.end()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        self.0 -= rhs.0;
    }
}

impl MulAssign for Rational {
    fn mul_assign(&mut self, rhs: Rational) {
        self.0 *= rhs.0;
    }
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for t in 2..=n {
        acc *= t;
    }
    acc
}

/// Binomial coefficient `C(n, k)`; zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * (n - k + i) / i; // division is exact at every step
    }
    acc
}

/// Falling-factorial quotient `m!/j!`.
///
/// For `0 <= j` this is the product `m * (m-1) * ... * (j+1)` (so 1 when
/// `j >= m`); for `j < 0` it is 0, the reciprocal factorial of a negative
/// integer. That single convention is what makes the closed-form pairing
/// vanish whenever the exponent drops below `g - 1`.
pub fn factorial_quotient(m: u64, j: i64) -> Rational {
    if j < 0 {
        return Rational::zero();
    }
    let mut acc = BigInt::one();
    for t in (j as u64 + 1)..=m {
        acc *= t;
    }
    Rational::from_bigint(acc)
}

static BERNOULLI_MEMO: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();

/// The `k`-th Bernoulli number under the convention `B1 = -1/2`.
///
/// Computed from the defining recurrence and memoized; the table behind
/// the memo is grown under a lock and only ever appended to, so
/// concurrent readers are safe.
pub fn bernoulli(k: u32) -> Rational {
    let memo = BERNOULLI_MEMO.get_or_init(|| Mutex::new(vec![Rational::one()]));
    let mut table = memo.lock().expect("bernoulli memo poisoned");
    while table.len() <= k as usize {
        let m = table.len() as u64; // next index to fill
        let mut acc = Rational::zero();
        for (j, b) in table.iter().enumerate() {
            acc += Rational::from_bigint(binomial(m + 1, j as i64)) * b.clone();
        }
        let bm = -(acc / Rational::from_int(m as i64 + 1));
        table.push(bm);
    }
    table[k as usize].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn bernoulli_base_cases() {
        assert_eq!(bernoulli(0), rat("1"));
        assert_eq!(bernoulli(1), rat("-1/2"));
        assert_eq!(bernoulli(2), rat("1/6"));
        assert_eq!(bernoulli(7), Rational::zero());
        assert_eq!(bernoulli(12), rat("-691/2730"));
    }

    #[test]
    fn bernoulli_recurrence_holds() {
        for m in 1..=40u64 {
            let mut acc = Rational::zero();
            for j in 0..=m {
                acc += Rational::from_bigint(binomial(m + 1, j as i64)) * bernoulli(j as u32);
            }
            assert!(acc.is_zero(), "recurrence failed at m = {m}: {acc}");
        }
    }

    #[test]
    fn odd_bernoulli_vanish() {
        for k in 1..=15u32 {
            assert!(bernoulli(2 * k + 1).is_zero(), "B_{} != 0", 2 * k + 1);
        }
    }

    #[test]
    fn factorial_quotient_examples() {
        assert_eq!(factorial_quotient(3, 2), rat("3"));
        assert_eq!(factorial_quotient(0, 0), rat("1"));
        assert_eq!(factorial_quotient(2, -2), Rational::zero());
    }

    #[test]
    fn factorial_quotient_times_factorial() {
        for m in 0..=30u64 {
            for j in 0..=m {
                let lhs = factorial_quotient(m, j as i64) * Rational::from_bigint(factorial(j));
                assert_eq!(lhs, Rational::from_bigint(factorial(m)), "m={m} j={j}");
            }
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(3, 2), BigInt::from(3));
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(2, 3), BigInt::zero());
        assert_eq!(binomial(2, -1), BigInt::zero());
    }

    #[test]
    fn display_forms() {
        assert_eq!(rat("4").to_string(), "4");
        assert_eq!(rat("4").machine_form(), "4/1");
        assert_eq!(rat("-8/6").to_string(), "-4/3");
        assert_eq!(rat("3/-6").to_string(), "-1/2"); // sign moves to numerator
    }

    proptest! {
        #[test]
        fn string_round_trip(p in -10_000i64..10_000, q in 1i64..10_000) {
            let r = Rational::new(BigInt::from(p), BigInt::from(q));
            let human: Rational = r.to_string().parse().unwrap();
            let machine: Rational = r.machine_form().parse().unwrap();
            prop_assert_eq!(&human, &r);
            prop_assert_eq!(&machine, &r);
        }

        #[test]
        fn field_axioms_spot(p in -500i64..500, q in 1i64..500, r in -500i64..500, s in 1i64..500) {
            let x = Rational::new(BigInt::from(p), BigInt::from(q));
            let y = Rational::new(BigInt::from(r), BigInt::from(s));
            prop_assert_eq!(x.clone() + y.clone(), y.clone() + x.clone());
            prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
            if !y.is_zero() {
                prop_assert_eq!((x.clone() / y.clone()) * y.clone(), x.clone());
            }
        }
    }
}
