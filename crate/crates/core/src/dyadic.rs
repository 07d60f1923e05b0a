//! Exact dyadic rationals `p / 2^k`.
//!
//! Every Fourier coefficient, weight, influence and distance of a `±1`-valued
//! function on `n` bits has a power-of-two denominator, so this is the only
//! rational type the crate needs. Values are kept in lowest terms: the
//! numerator is odd whenever the exponent is positive, and zero is `0 / 2^0`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Dyadic {
    num: i128,
    exp: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, exp: 0 };
    pub const ONE: Dyadic = Dyadic { num: 1, exp: 0 };
    pub const HALF: Dyadic = Dyadic { num: 1, exp: 1 };

    /// The value `num / 2^exp`, reduced.
    pub fn new(num: i128, exp: u32) -> Self {
        if num == 0 {
            return Self::ZERO;
        }
        let shift = num.trailing_zeros().min(exp);
        Dyadic {
            num: num >> shift,
            exp: exp - shift,
        }
    }

    pub fn from_int(v: i64) -> Self {
        Dyadic {
            num: v as i128,
            exp: 0,
        }
    }

    /// `2^-k`.
    pub fn pow2_neg(k: u32) -> Self {
        Dyadic { num: 1, exp: k }
    }

    pub fn numerator(self) -> i128 {
        self.num
    }

    /// The denominator exponent `k` in `p / 2^k`.
    pub fn exponent(self) -> u32 {
        self.exp
    }

    pub fn denominator(self) -> i128 {
        1i128 << self.exp
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn is_negative(self) -> bool {
        self.num < 0
    }

    pub fn is_positive(self) -> bool {
        self.num > 0
    }

    pub fn abs(self) -> Self {
        Dyadic {
            num: self.num.abs(),
            exp: self.exp,
        }
    }

    /// Divide by `2^k` exactly.
    pub fn div_pow2(self, k: u32) -> Self {
        Self::new(self.num, self.exp + k)
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Both numerators brought to the common exponent.
    fn aligned(self, other: Self) -> (i128, i128, u32) {
        let exp = self.exp.max(other.exp);
        let a = self
            .num
            .checked_shl(exp - self.exp)
            .filter(|v| v >> (exp - self.exp) == self.num)
            .expect("dyadic numerator overflow");
        let b = other
            .num
            .checked_shl(exp - other.exp)
            .filter(|v| v >> (exp - other.exp) == other.num)
            .expect("dyadic numerator overflow");
        (a, b, exp)
    }
}

impl From<i64> for Dyadic {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: Dyadic) -> Dyadic {
        let (a, b, exp) = self.aligned(rhs);
        Dyadic::new(a.checked_add(b).expect("dyadic numerator overflow"), exp)
    }
}

impl AddAssign for Dyadic {
    fn add_assign(&mut self, rhs: Dyadic) {
        *self = *self + rhs;
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: Dyadic) -> Dyadic {
        self + (-rhs)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic {
            num: -self.num,
            exp: self.exp,
        }
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Dyadic) -> Dyadic {
        let num = self
            .num
            .checked_mul(rhs.num)
            .expect("dyadic numerator overflow");
        Dyadic::new(num, self.exp + rhs.exp)
    }
}

impl std::iter::Sum for Dyadic {
    fn sum<I: Iterator<Item = Dyadic>>(iter: I) -> Dyadic {
        iter.fold(Dyadic::ZERO, |acc, x| acc + x)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(*other);
        a.cmp(&b)
    }
}

/// Reduced `p/q`; integers keep the `/1` suffix.
impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.denominator())
    }
}

impl Serialize for Dyadic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
