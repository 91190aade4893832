//! Exact arithmetic for bound values of the shape a + b*sqrt(r) with
//! rational a, b, r (r >= 0).
//!
//! Every bound in the report is of this shape, so comparisons can be decided
//! by repeated squaring instead of floating point. Doubles are used for
//! display only.

use std::cmp::Ordering;
use std::fmt;

use num::rational::{BigRational, Ratio};
use num::{BigInt, Signed, ToPrimitive, Zero};

/// a + b * sqrt(r), exact.
#[derive(Clone, Debug)]
pub struct Exact {
    a: BigRational,
    b: BigRational,
    r: BigRational,
}

fn br(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

impl Exact {
    pub fn from_int(x: i64) -> Self {
        Exact {
            a: br(x),
            b: BigRational::zero(),
            r: BigRational::zero(),
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0);
        Exact {
            a: BigRational::new(BigInt::from(num), BigInt::from(den)),
            b: BigRational::zero(),
            r: BigRational::zero(),
        }
    }

    pub fn from_big(a: BigRational) -> Self {
        Exact {
            a,
            b: BigRational::zero(),
            r: BigRational::zero(),
        }
    }

    pub fn from_unsigned_ratio(x: Ratio<u64>) -> Self {
        Exact {
            a: BigRational::new(BigInt::from(*x.numer()), BigInt::from(*x.denom())),
            b: BigRational::zero(),
            r: BigRational::zero(),
        }
    }

    /// a + b * sqrt(r); r must be nonnegative.
    pub fn with_sqrt(a: BigRational, b: BigRational, r: BigRational) -> Self {
        assert!(!r.is_negative(), "radicand must be nonnegative");
        if b.is_zero() || r.is_zero() {
            Exact {
                a,
                b: BigRational::zero(),
                r: BigRational::zero(),
            }
        } else {
            Exact { a, b, r }
        }
    }

    /// n - self, for turning a nullity lower bound into a rank upper bound.
    pub fn subtracted_from_int(&self, n: i64) -> Exact {
        Exact {
            a: br(n) - &self.a,
            b: -self.b.clone(),
            r: self.r.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        if self.b.is_zero() {
            return a;
        }
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let r = self.r.to_f64().unwrap_or(f64::NAN);
        a + b * r.sqrt()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Sign of a + b*sqrt(r) relative to zero.
    fn sign(a: &BigRational, b: &BigRational, r: &BigRational) -> Ordering {
        if b.is_zero() || r.is_zero() {
            return a.cmp(&BigRational::zero());
        }
        let sa = a.cmp(&BigRational::zero());
        let sb = b.cmp(&BigRational::zero());
        if sa == Ordering::Equal {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // Opposite signs: |a| vs |b|sqrt(r) decides, by squaring.
        let a2 = a * a;
        let b2r = b * b * r;
        match a2.cmp(&b2r) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    /// Sign of a + u*sqrt(r1) + v*sqrt(r2).
    fn sign_two_radicals(
        a: &BigRational,
        u: &BigRational,
        r1: &BigRational,
        v: &BigRational,
        r2: &BigRational,
    ) -> Ordering {
        if u.is_zero() || r1.is_zero() {
            return Exact::sign(a, v, r2);
        }
        if v.is_zero() || r2.is_zero() {
            return Exact::sign(a, u, r1);
        }
        if r1 == r2 {
            return Exact::sign(a, &(u + v), r1);
        }
        // f = u*sqrt(r1) + v*sqrt(r2).
        let su = u.cmp(&BigRational::zero());
        let sv = v.cmp(&BigRational::zero());
        let u2r = u * u * r1;
        let v2r = v * v * r2;
        let sf = if su == sv {
            su
        } else {
            match u2r.cmp(&v2r) {
                Ordering::Greater => su,
                Ordering::Less => sv,
                Ordering::Equal => Ordering::Equal,
            }
        };
        let sa = a.cmp(&BigRational::zero());
        if sa == Ordering::Equal {
            return sf;
        }
        if sf == Ordering::Equal || sf == sa {
            return sa;
        }
        // Opposite signs: compare a^2 with f^2 = u^2 r1 + v^2 r2 +
        // 2uv*sqrt(r1 r2), one radical deep.
        let alpha = a * a - u2r - v2r;
        let beta = br(-2) * u * v;
        let gamma = r1 * r2;
        let d = Exact::sign(&alpha, &beta, &gamma);
        match (sa, d) {
            (_, Ordering::Equal) => Ordering::Equal,
            (Ordering::Greater, s) => s,
            (Ordering::Less, Ordering::Greater) => Ordering::Less,
            (Ordering::Less, Ordering::Less) => Ordering::Greater,
            _ => unreachable!("sa is nonzero here"),
        }
    }
}

impl PartialEq for Exact {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Exact {}

impl PartialOrd for Exact {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Exact {
    fn cmp(&self, other: &Self) -> Ordering {
        let a = &self.a - &other.a;
        Exact::sign_two_radicals(&a, &self.b, &self.r, &(-other.b.clone()), &other.r)
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.r)
        }
    }
}
