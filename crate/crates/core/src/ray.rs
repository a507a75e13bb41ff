//! Exact rays and 2-dimensional cone sectors.
//!
//! Boundary rays of the positive cone of an indefinite binary form have
//! slopes in Q(sqrt(D)) for D the form discriminant. All comparisons here
//! are exact: integral rays use integer cross products, irrational rays
//! use arithmetic in Q(sqrt(D)).

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Integer coordinate vector in a rank-2 lattice basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IVec2(pub BigInt, pub BigInt);

impl IVec2 {
    pub fn from_i64(x: i64, y: i64) -> Self {
        IVec2(BigInt::from(x), BigInt::from(y))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero() && self.1.is_zero()
    }

    pub fn neg(&self) -> Self {
        IVec2(-self.0.clone(), -self.1.clone())
    }

    pub fn add(&self, o: &IVec2) -> Self {
        IVec2(&self.0 + &o.0, &self.1 + &o.1)
    }

    pub fn sub(&self, o: &IVec2) -> Self {
        IVec2(&self.0 - &o.0, &self.1 - &o.1)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        IVec2(&self.0 * k, &self.1 * k)
    }

    pub fn cross(&self, o: &IVec2) -> BigInt {
        &self.0 * &o.1 - &self.1 * &o.0
    }

    pub fn dot(&self, o: &IVec2) -> BigInt {
        &self.0 * &o.0 + &self.1 * &o.1
    }

    pub fn content(&self) -> BigInt {
        self.0.gcd(&self.1)
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Primitive vector on the same ray.
    pub fn primitive(&self) -> IVec2 {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IVec2(&self.0 / &c, &self.1 / &c)
    }
}

impl fmt::Display for IVec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

/// Element a + b*sqrt(d) of Q(sqrt(d)); d = 0 encodes plain rationals.
/// Values with b != 0 always carry the same non-square d within one
/// computation (the form discriminant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadExt {
    pub a: BigRational,
    pub b: BigRational,
    pub d: BigInt,
}

impl QuadExt {
    pub fn rational(a: BigRational) -> Self {
        QuadExt {
            a,
            b: BigRational::zero(),
            d: BigInt::zero(),
        }
    }

    pub fn from_int(a: BigInt) -> Self {
        QuadExt::rational(BigRational::from(a))
    }

    pub fn sqrt_term(coeff: BigRational, d: BigInt) -> Self {
        QuadExt {
            a: BigRational::zero(),
            b: coeff,
            d,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn join_d(&self, other: &Self) -> BigInt {
        if self.b.is_zero() {
            other.d.clone()
        } else if other.b.is_zero() {
            self.d.clone()
        } else {
            assert_eq!(self.d, other.d, "mixed quadratic fields");
            self.d.clone()
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let d = self.join_d(o);
        QuadExt {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
            d,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let d = self.join_d(o);
        QuadExt {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
            d,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let d = self.join_d(o);
        let dr = BigRational::from(d.clone());
        QuadExt {
            a: &self.a * &o.a + &self.b * &o.b * &dr,
            b: &self.a * &o.b + &self.b * &o.a,
            d,
        }
    }

    pub fn neg(&self) -> Self {
        QuadExt {
            a: -self.a.clone(),
            b: -self.b.clone(),
            d: self.d.clone(),
        }
    }

    /// Exact sign of a + b*sqrt(d).
    pub fn sign(&self) -> Ordering {
        if self.b.is_zero() {
            return sign_of(&self.a);
        }
        if self.a.is_zero() {
            return sign_of(&self.b);
        }
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sa == sb {
            return sa;
        }
        // Opposite signs: compare a^2 with b^2 d; the sign of the larger
        // magnitude term wins (equality is impossible for non-square d).
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * BigRational::from(self.d.clone());
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    /// Rational enclosure [lo, hi] of the value, via integer bounds on
    /// sqrt(d).
    pub fn bounds(&self) -> (BigRational, BigRational) {
        if self.b.is_zero() {
            return (self.a.clone(), self.a.clone());
        }
        let s = self.d.sqrt();
        let s_lo = BigRational::from(s.clone());
        let s_hi = BigRational::from(s + BigInt::one());
        let (r_lo, r_hi) = if self.b.is_positive() {
            (&self.b * &s_lo, &self.b * &s_hi)
        } else {
            (&self.b * &s_hi, &self.b * &s_lo)
        };
        (&self.a + r_lo, &self.a + r_hi)
    }
}

fn sign_of(r: &BigRational) -> Ordering {
    if r.is_zero() {
        Ordering::Equal
    } else if r.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// A ray (half-line from the origin) in the rank-2 coordinate plane.
#[derive(Clone, Debug)]
pub enum Ray {
    /// Primitive integer direction.
    Lattice(IVec2),
    /// Direction with quadratic-irrational slope; only arises as a
    /// square-zero boundary of the positive cone.
    Irrational { x: QuadExt, y: QuadExt },
}

impl Ray {
    pub fn lattice(v: IVec2) -> Ray {
        Ray::Lattice(v.primitive())
    }

    pub fn coords(&self) -> (QuadExt, QuadExt) {
        match self {
            Ray::Lattice(v) => (
                QuadExt::from_int(v.0.clone()),
                QuadExt::from_int(v.1.clone()),
            ),
            Ray::Irrational { x, y } => (x.clone(), y.clone()),
        }
    }

    pub fn as_lattice(&self) -> Option<&IVec2> {
        match self {
            Ray::Lattice(v) => Some(v),
            Ray::Irrational { .. } => None,
        }
    }

    pub fn is_integral(&self) -> bool {
        matches!(self, Ray::Lattice(_))
    }

    pub fn neg(&self) -> Ray {
        match self {
            Ray::Lattice(v) => Ray::Lattice(v.neg()),
            Ray::Irrational { x, y } => Ray::Irrational {
                x: x.neg(),
                y: y.neg(),
            },
        }
    }

    pub fn cross_sign(&self, other: &Ray) -> Ordering {
        let (x1, y1) = self.coords();
        let (x2, y2) = other.coords();
        x1.mul(&y2).sub(&y1.mul(&x2)).sign()
    }

    pub fn cross_vec_sign(&self, v: &IVec2) -> Ordering {
        self.cross_sign(&Ray::Lattice(v.clone()))
    }

    /// Same direction (parallel with positive inner product).
    pub fn same_ray(&self, other: &Ray) -> bool {
        if self.cross_sign(other) != Ordering::Equal {
            return false;
        }
        let (x1, y1) = self.coords();
        let (x2, y2) = other.coords();
        x1.mul(&x2).add(&y1.mul(&y2)).sign() == Ordering::Greater
    }

    /// Sign of the linear functional ell evaluated on the ray direction.
    pub fn functional_sign(&self, ell: &IVec2) -> Ordering {
        let (x, y) = self.coords();
        QuadExt::from_int(ell.0.clone())
            .mul(&x)
            .add(&QuadExt::from_int(ell.1.clone()).mul(&y))
            .sign()
    }

    /// Rational enclosures of the coordinates, for outer bounding boxes.
    pub fn coord_bounds(&self) -> ((BigRational, BigRational), (BigRational, BigRational)) {
        let (x, y) = self.coords();
        (x.bounds(), y.bounds())
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let root = if self.b.abs().is_one() {
            format!("sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", self.b.abs(), self.d)
        };
        if self.a.is_zero() {
            if self.b.is_negative() {
                write!(f, "-{root}")
            } else {
                write!(f, "{root}")
            }
        } else if self.b.is_negative() {
            write!(f, "{} - {root}", self.a)
        } else {
            write!(f, "{} + {root}", self.a)
        }
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ray::Lattice(v) => write!(f, "{v}"),
            Ray::Irrational { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

/// A 2-dimensional cone given by two ordered boundary rays inside an open
/// halfplane, with open/closed flags per boundary.
#[derive(Clone, Debug)]
pub struct ConeSector {
    pub lo: Ray,
    pub hi: Ray,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl ConeSector {
    /// Angular membership of an integral vector. Boundary membership
    /// follows the closed flags.
    pub fn contains_vec(&self, v: &IVec2) -> bool {
        let lo = self.lo.cross_vec_sign(v);
        let hi_ray = Ray::Lattice(v.clone()).cross_sign(&self.hi);
        let lo_ok = lo == Ordering::Greater || (self.lo_closed && lo == Ordering::Equal);
        let hi_ok = hi_ray == Ordering::Greater || (self.hi_closed && hi_ray == Ordering::Equal);
        lo_ok && hi_ok
    }

    pub fn contains_vec_strict(&self, v: &IVec2) -> bool {
        self.lo.cross_vec_sign(v) == Ordering::Greater
            && Ray::Lattice(v.clone()).cross_sign(&self.hi) == Ordering::Greater
    }

    /// A ray lies angularly inside the open sector.
    pub fn ray_in_interior(&self, r: &Ray) -> bool {
        self.lo.cross_sign(r) == Ordering::Greater && r.cross_sign(&self.hi) == Ordering::Greater
    }

    pub fn same_sector(&self, other: &ConeSector) -> bool {
        self.lo.same_ray(&other.lo)
            && self.hi.same_ray(&other.hi)
            && self.lo_closed == other.lo_closed
            && self.hi_closed == other.hi_closed
    }

    /// Intersects the sector with the halfplane `ell . v > 0` (or >= 0 when
    /// `closed`). The wall direction is oriented into the sector. Returns
    /// `None` when the intersection has empty interior.
    pub fn cut(&self, ell: &IVec2, closed: bool) -> Option<ConeSector> {
        let s_lo = self.lo.functional_sign(ell);
        let s_hi = self.hi.functional_sign(ell);
        let mut out = self.clone();
        match (s_lo, s_hi) {
            (Ordering::Less, Ordering::Greater) => {
                out.lo = self.oriented_wall(ell);
                out.lo_closed = closed;
                Some(out)
            }
            (Ordering::Greater, Ordering::Less) => {
                out.hi = self.oriented_wall(ell);
                out.hi_closed = closed;
                Some(out)
            }
            (Ordering::Less, _) | (_, Ordering::Less) => None,
            (s_lo, s_hi) => {
                if s_lo == Ordering::Equal {
                    out.lo_closed = out.lo_closed && closed;
                }
                if s_hi == Ordering::Equal {
                    out.hi_closed = out.hi_closed && closed;
                }
                Some(out)
            }
        }
    }

    /// Kernel ray of `ell`, oriented into the sector interior. Only valid
    /// when the functional changes sign across the sector.
    fn oriented_wall(&self, ell: &IVec2) -> Ray {
        let wall = wall_ray(ell);
        if self.ray_in_interior(&wall) {
            wall
        } else {
            wall.neg()
        }
    }
}

/// The two directions spanning the kernel of `ell`; returns one of them,
/// callers orient it.
pub fn wall_ray(ell: &IVec2) -> Ray {
    Ray::lattice(IVec2(-ell.1.clone(), ell.0.clone()))
}

/// Strict angular order on rays inside one open halfplane: `a` before `b`
/// when the rotation from `a` to `b` is counterclockwise.
pub fn angular_cmp(a: &IVec2, b: &IVec2) -> Ordering {
    match b.cross(a).sign() {
        num_bigint::Sign::Plus => Ordering::Greater,
        num_bigint::Sign::Minus => Ordering::Less,
        num_bigint::Sign::NoSign => Ordering::Equal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn quadext_signs() {
        // 3 - 2*sqrt(2) > 0, 2 - 2*sqrt(2) < 0.
        let x = QuadExt {
            a: rat(3),
            b: rat(-2),
            d: BigInt::from(2),
        };
        assert_eq!(x.sign(), Ordering::Greater);
        let y = QuadExt {
            a: rat(2),
            b: rat(-2),
            d: BigInt::from(2),
        };
        assert_eq!(y.sign(), Ordering::Less);
        // (1 + sqrt(2))^2 = 3 + 2 sqrt(2)
        let z = QuadExt {
            a: rat(1),
            b: rat(1),
            d: BigInt::from(2),
        };
        let sq = z.mul(&z);
        assert_eq!(sq.a, rat(3));
        assert_eq!(sq.b, rat(2));
    }

    #[test]
    fn angular_order_in_halfplane() {
        let a = IVec2::from_i64(1, -1);
        let b = IVec2::from_i64(1, 0);
        let c = IVec2::from_i64(0, 1);
        assert_eq!(angular_cmp(&a, &b), Ordering::Less);
        assert_eq!(angular_cmp(&b, &c), Ordering::Less);
        assert_eq!(angular_cmp(&c, &c), Ordering::Equal);
    }

    #[test]
    fn sector_cut_replaces_violating_endpoint() {
        // Sector from (1,-1) to (1,1), cut by {y > 0}: new lo is (1,0).
        let sector = ConeSector {
            lo: Ray::lattice(IVec2::from_i64(1, -1)),
            hi: Ray::lattice(IVec2::from_i64(1, 1)),
            lo_closed: false,
            hi_closed: false,
        };
        let cut = sector.cut(&IVec2::from_i64(0, 1), false).unwrap();
        assert!(cut.lo.same_ray(&Ray::lattice(IVec2::from_i64(1, 0))));
        assert!(cut.hi.same_ray(&Ray::lattice(IVec2::from_i64(1, 1))));
        // Cutting with a halfplane containing the whole sector changes nothing.
        let same = cut.cut(&IVec2::from_i64(1, 0), false).unwrap();
        assert!(same.same_sector(&cut));
    }

    #[test]
    fn irrational_ray_comparisons() {
        // Boundary of 4x^2 - 2y^2: y = x*sqrt(2), ray (1, sqrt(2)).
        let boundary = Ray::Irrational {
            x: QuadExt::rational(rat(1)),
            y: QuadExt::sqrt_term(rat(1), BigInt::from(2)),
        };
        // (2,3) lies counterclockwise of it, (1,1) clockwise.
        assert_eq!(
            boundary.cross_vec_sign(&IVec2::from_i64(2, 3)),
            Ordering::Greater
        );
        assert_eq!(
            boundary.cross_vec_sign(&IVec2::from_i64(1, 1)),
            Ordering::Less
        );
    }
}
