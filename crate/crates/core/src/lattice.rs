//! Exact lattice arithmetic: integral vectors in Z² and arbitrary-precision
//! rationals.
//!
//! Edge derivatives live in Z²; vertex positions and edge lengths are
//! rationals. Rigidity is a rank condition over Q, so every operation here
//! is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator (the `num` representation guarantees both).
pub type Rat = BigRational;

/// Build a rational from an integer pair.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Build a rational from an integer.
pub fn rat_int(p: i64) -> Rat {
    Rat::from(BigInt::from(p))
}

/// Parse a rational from a `"p/q"` or `"p"` string.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let mk_err = || Error::Parse(format!("invalid rational literal {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| mk_err())?;
            let q: BigInt = q.trim().parse().map_err(|_| mk_err())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| mk_err())?;
            Ok(Rat::from(p))
        }
    }
}

/// An integral vector in Z², the derivative of a tropical edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVec2 {
    pub x: i64,
    pub y: i64,
}

impl IntVec2 {
    pub const ZERO: IntVec2 = IntVec2 { x: 0, y: 0 };

    pub fn new(x: i64, y: i64) -> Self {
        IntVec2 { x, y }
    }

    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    /// The wedge (determinant) `u.x·v.y − u.y·v.x`, computed in i128 so the
    /// product of any two i64 components cannot overflow.
    pub fn wedge(&self, other: IntVec2) -> i128 {
        self.x as i128 * other.y as i128 - self.y as i128 * other.x as i128
    }

    /// Write `u = k·u0` with `k ≥ 0` and `u0` primitive. The zero vector
    /// decomposes as `(0, (0,0))`; otherwise `u0` keeps the direction of
    /// `u` (the sign stays on `u0`, never on `k`).
    pub fn primitive_decompose(&self) -> (i64, IntVec2) {
        if self.is_zero() {
            return (0, IntVec2::ZERO);
        }
        let k = gcd_i64(self.x.unsigned_abs(), self.y.unsigned_abs()) as i64;
        (k, IntVec2::new(self.x / k, self.y / k))
    }

    pub fn scale(&self, k: i64) -> IntVec2 {
        IntVec2::new(self.x * k, self.y * k)
    }
}

fn gcd_i64(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

impl Add for IntVec2 {
    type Output = IntVec2;
    fn add(self, rhs: IntVec2) -> IntVec2 {
        IntVec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for IntVec2 {
    type Output = IntVec2;
    fn sub(self, rhs: IntVec2) -> IntVec2 {
        IntVec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for IntVec2 {
    type Output = IntVec2;
    fn neg(self) -> IntVec2 {
        IntVec2::new(-self.x, -self.y)
    }
}

impl Mul<i64> for IntVec2 {
    type Output = IntVec2;
    fn mul(self, k: i64) -> IntVec2 {
        self.scale(k)
    }
}

impl fmt::Display for IntVec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A point of the plane (or of the dual complex) with exact rational
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatPoint {
    pub x: Rat,
    pub y: Rat,
}

impl RatPoint {
    pub fn new(x: Rat, y: Rat) -> Self {
        RatPoint { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        RatPoint::new(rat_int(x), rat_int(y))
    }

    pub fn origin() -> Self {
        RatPoint::new(Rat::zero(), Rat::zero())
    }

    /// `self + t·v` for an integral direction `v`.
    pub fn translate(&self, v: IntVec2, t: &Rat) -> RatPoint {
        RatPoint::new(
            &self.x + t * rat_int(v.x),
            &self.y + t * rat_int(v.y),
        )
    }

    /// Exact wedge `u ∧ (other − self)` against an integral direction,
    /// used for point-on-line tests.
    pub fn wedge_from(&self, u: IntVec2, other: &RatPoint) -> Rat {
        rat_int(u.x) * (&other.y - &self.y) - rat_int(u.y) * (&other.x - &self.x)
    }
}

impl fmt::Display for RatPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Absolute value of a wedge as a `Rat`, convenient for multiplicities.
pub fn abs_wedge(u: IntVec2, v: IntVec2) -> Rat {
    let w = u.wedge(v);
    Rat::from(BigInt::from(w.unsigned_abs()))
}

/// Render a rational as `p/q` (or `p` when the denominator is one).
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True if `r` is a nonnegative rational.
pub fn rat_is_nonneg(r: &Rat) -> bool {
    !r.is_negative()
}
