//! Rank-2 Picard-lattice cone computations: enumeration of classes with a
//! given square, the distinguished class set E, nodal classes, the
//! predicted ample cone, Weyl reflections, the reflection-group
//! fundamental domain and its chamber decomposition.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::qlattice::{pair, square, DivisibilityProfile, GramLattice, LatticeVector};
use crate::ray::{angular_cmp, ConeSector, IVec2, QuadExt, Ray};

/// A rank-2 hyperbolic Picard lattice with divisibility profile and
/// polarization: the universe for all cone computations.
#[derive(Clone, Debug)]
pub struct Rank2Config {
    lattice: GramLattice,
    profile: DivisibilityProfile,
    g: IVec2,
}

impl Rank2Config {
    pub fn new(lattice: GramLattice, profile: DivisibilityProfile, g: IVec2) -> Result<Self> {
        if lattice.rank() != 2 {
            return Err(Error::Invalid(format!(
                "rank-2 configuration requires rank 2, got {}",
                lattice.rank()
            )));
        }
        if !lattice.is_even() {
            return Err(Error::OddLattice);
        }
        let sig = lattice.signature()?;
        if sig != (1, 1) {
            return Err(Error::NotHyperbolic {
                pos: sig.0,
                neg: sig.1,
            });
        }
        if profile.len() != 2 {
            return Err(Error::ProfileLength {
                rank: 2,
                found: profile.len(),
            });
        }
        let cfg = Rank2Config {
            lattice,
            profile,
            g,
        };
        let gsq = cfg.form_eval(&cfg.g);
        if !gsq.is_positive() {
            return Err(Error::NonPositivePolarization { square: gsq });
        }
        Ok(cfg)
    }

    pub fn lattice(&self) -> &GramLattice {
        &self.lattice
    }

    pub fn profile(&self) -> &DivisibilityProfile {
        &self.profile
    }

    pub fn polarization(&self) -> &IVec2 {
        &self.g
    }

    /// Form coefficients (a, b, c) with q(x, y) = a x^2 + 2 b x y + c y^2.
    fn coeffs(&self) -> (&BigInt, &BigInt, &BigInt) {
        (
            self.lattice.entry(0, 0),
            self.lattice.entry(0, 1),
            self.lattice.entry(1, 1),
        )
    }

    pub fn form_eval(&self, v: &IVec2) -> BigInt {
        let (a, b, c) = self.coeffs();
        a * &v.0 * &v.0 + BigInt::from(2) * b * &v.0 * &v.1 + c * &v.1 * &v.1
    }

    pub fn form_pair(&self, v: &IVec2, w: &IVec2) -> BigInt {
        let (a, b, c) = self.coeffs();
        a * &v.0 * &w.0 + b * (&v.0 * &w.1 + &v.1 * &w.0) + c * &v.1 * &w.1
    }

    /// Linear functional of pairing against `v` in coordinate form:
    /// (w, v) = ell . w.
    pub fn pairing_functional(&self, v: &IVec2) -> IVec2 {
        let (a, b, c) = self.coeffs();
        IVec2(a * &v.0 + b * &v.1, b * &v.0 + c * &v.1)
    }

    /// Functional of the positive halfspace {w : (w, g) > 0}.
    pub fn halfspace(&self) -> IVec2 {
        self.pairing_functional(&self.g)
    }

    pub fn in_positive_halfspace(&self, v: &IVec2) -> bool {
        self.halfspace().dot(v).is_positive()
    }

    pub fn divisibility(&self, v: &IVec2) -> BigInt {
        let d = self.profile.divisors();
        (&v.0 * &d[0]).gcd(&(&v.1 * &d[1]))
    }

    /// Form discriminant b^2 - ac; positive for signature (1,1).
    pub fn disc(&self) -> BigInt {
        let (a, b, c) = self.coeffs();
        b * b - a * c
    }

    pub fn lattice_vector(&self, v: &IVec2) -> LatticeVector {
        self.lattice
            .vector(vec![v.0.clone(), v.1.clone()])
            .expect("rank-2 coordinates")
    }
}

/// The three class kinds admitted into E.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EKind {
    MinusTwoDivOne,
    MinusTwoDivTwo,
    MinusTenDivTwo,
}

impl EKind {
    pub fn square(&self) -> i64 {
        match self {
            EKind::MinusTwoDivOne | EKind::MinusTwoDivTwo => -2,
            EKind::MinusTenDivTwo => -10,
        }
    }

    pub fn div(&self) -> i64 {
        match self {
            EKind::MinusTwoDivOne => 1,
            EKind::MinusTwoDivTwo | EKind::MinusTenDivTwo => 2,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            EKind::MinusTwoDivOne => "(-2, div 1)",
            EKind::MinusTwoDivTwo => "(-2, div 2)",
            EKind::MinusTenDivTwo => "(-10, div 2)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EClass {
    pub vector: IVec2,
    pub kind: EKind,
    pub nodal: bool,
}

/// All primitive vectors v with |x|, |y| <= bound, square(v) = c and
/// (v, g) > 0, in ascending angular order. For c = 0 the integral
/// square-zero rays are solved exactly instead of scanned.
pub fn enumerate_square(cfg: &Rank2Config, c: &BigInt, bound: u64) -> Vec<IVec2> {
    if c.is_zero() {
        let ib = BigInt::from(bound);
        return square_zero_classes(cfg)
            .into_iter()
            .filter(|v| v.0.abs() <= ib && v.1.abs() <= ib)
            .collect();
    }
    let (fa, fb, fc) = {
        let (a, b, cc) = cfg.coeffs();
        (a.clone(), b.clone(), cc.clone())
    };
    let ell = cfg.halfspace();
    let ib = BigInt::from(bound);
    let mut out: Vec<IVec2> = Vec::new();
    let mut push = |v: IVec2| {
        if v.1.abs() <= ib && v.is_primitive() && ell.dot(&v).is_positive() {
            out.push(v);
        }
    };
    let disc = cfg.disc();
    let mut x = -BigInt::from(bound);
    while x <= ib {
        if !fc.is_zero() {
            // c y^2 + 2 b x y + (a x^2 - c0) = 0, discriminant/4:
            // (b^2 - a c) x^2 + c c0.
            let d = &disc * &x * &x + &fc * c;
            if d.is_negative() {
                x += 1;
                continue;
            }
            let s = d.sqrt();
            if &s * &s == d {
                let mut roots = vec![(-&fb * &x + &s), (-&fb * &x - &s)];
                roots.dedup();
                for num in roots {
                    let (q, r) = num.div_rem(&fc);
                    if r.is_zero() {
                        push(IVec2(x.clone(), q));
                    }
                }
            }
        } else if !x.is_zero() {
            // x (a x + 2 b y) = c.
            let (q, r) = c.div_rem(&x);
            if r.is_zero() {
                let num = q - &fa * &x;
                let den = BigInt::from(2) * &fb;
                if !den.is_zero() {
                    let (y, r2) = num.div_rem(&den);
                    if r2.is_zero() {
                        push(IVec2(x.clone(), y));
                    }
                }
            }
        }
        x += 1;
    }
    out.sort_by(angular_cmp);
    out.dedup();
    out
}

/// Seed solutions and generating automorphism for the quadratic equation
/// 2n x^2 - 2 y^2 = c on the lattice diag(2n, -2).
///
/// Seeds are the distinct solutions up to the sign symmetries
/// (x, y) ~ (-x, y) ~ (x, -y) whose coordinates lie within one period of
/// the fundamental automorphism; every solution arises from a seed by
/// sign changes and repeated application of the automorphism. When n is a
/// perfect square the form is isotropic, the automorphism is trivial and
/// the seeds are the complete solution list (one primitive ray per
/// direction when c = 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PellFamily {
    pub seeds: Vec<(BigInt, BigInt)>,
    pub automorphism: [[BigInt; 2]; 2],
}

impl PellFamily {
    pub fn apply(&self, v: &(BigInt, BigInt)) -> (BigInt, BigInt) {
        let m = &self.automorphism;
        (
            &m[0][0] * &v.0 + &m[0][1] * &v.1,
            &m[1][0] * &v.0 + &m[1][1] * &v.1,
        )
    }

    pub fn is_trivial_automorphism(&self) -> bool {
        let m = &self.automorphism;
        m[0][0].is_one() && m[0][1].is_zero() && m[1][0].is_zero() && m[1][1].is_one()
    }

    /// All solutions with |x|, |y| <= bound, generated from the seeds by
    /// sign changes and the automorphism.
    pub fn expand(&self, bound: u64) -> Vec<IVec2> {
        let ib = BigInt::from(bound);
        let mut seen: BTreeSet<(BigInt, BigInt)> = BTreeSet::new();
        let in_box = |v: &(BigInt, BigInt)| v.0.abs() <= ib && v.1.abs() <= ib;
        for seed in &self.seeds {
            // Close each seed under the sign symmetries, then iterate the
            // automorphism forward until the box is left.
            let mut frontier: Vec<(BigInt, BigInt)> = sign_orbit(seed);
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for v in frontier {
                    if !in_box(&v) || !seen.insert(v.clone()) {
                        continue;
                    }
                    if !self.is_trivial_automorphism() {
                        let w = self.apply(&v);
                        next.extend(sign_orbit(&w));
                    }
                }
                frontier = next;
            }
        }
        seen.into_iter().map(|(x, y)| IVec2(x, y)).collect()
    }
}

fn sign_orbit(v: &(BigInt, BigInt)) -> Vec<(BigInt, BigInt)> {
    let mut out = vec![
        (v.0.clone(), v.1.clone()),
        (-v.0.clone(), v.1.clone()),
        (v.0.clone(), -v.1.clone()),
        (-v.0.clone(), -v.1.clone()),
    ];
    out.sort();
    out.dedup();
    out
}

/// Fundamental solution of u^2 - n v^2 = 1 (minimal u, v > 0) by the
/// continued-fraction expansion of sqrt(n). Requires non-square n.
fn pell_fundamental(n: &BigInt) -> (BigInt, BigInt) {
    let a0 = n.sqrt();
    let mut m = BigInt::zero();
    let mut d = BigInt::one();
    let mut a = a0.clone();
    let (mut h_prev, mut h) = (BigInt::one(), a0.clone());
    let (mut k_prev, mut k) = (BigInt::zero(), BigInt::one());
    loop {
        if &h * &h - n * &k * &k == BigInt::one() {
            return (h, k);
        }
        m = &d * &a - &m;
        d = (n - &m * &m) / &d;
        a = (&a0 + &m) / &d;
        let h_next = &a * &h + &h_prev;
        let k_next = &a * &k + &k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
}

pub fn pell_family(n: u64, c: &BigInt) -> PellFamily {
    assert!(n >= 1, "n must be positive");
    let nb = BigInt::from(n);
    let root = nb.sqrt();
    let is_square = &root * &root == nb;
    let identity = [
        [BigInt::one(), BigInt::zero()],
        [BigInt::zero(), BigInt::one()],
    ];
    if c.is_odd() {
        // The form only represents even numbers.
        let automorphism = if is_square {
            identity
        } else {
            let (u, v) = pell_fundamental(&nb);
            [[u.clone(), v.clone()], [&nb * &v, u]]
        };
        return PellFamily {
            seeds: vec![],
            automorphism,
        };
    }
    // 2n x^2 - 2 y^2 = c  <=>  y^2 - n x^2 = m with m = -c/2.
    let m = -(c / BigInt::from(2));
    if is_square {
        let k = root;
        let mut seeds: Vec<(BigInt, BigInt)> = Vec::new();
        if m.is_zero() {
            seeds.push((BigInt::one(), k));
        } else {
            // (y - kx)(y + kx) = m: enumerate divisor pairs.
            for d in divisors_signed(&m) {
                let q = &m / &d;
                let two = BigInt::from(2);
                let (y, ry) = (&d + &q).div_rem(&two);
                let (x, rx) = (&q - &d).div_rem(&(&two * &k));
                if ry.is_zero() && rx.is_zero() {
                    seeds.push((x.abs(), y.abs()));
                }
            }
            seeds.sort();
            seeds.dedup();
        }
        return PellFamily {
            seeds,
            automorphism: identity,
        };
    }
    let (u, v) = pell_fundamental(&nb);
    let automorphism = [[u.clone(), v.clone()], [&nb * &v, u.clone()]];
    // Scan x >= 0 for solutions y^2 = n x^2 + m. A cap derived from the
    // classical bounds on fundamental solutions limits the search when
    // nothing is represented; after the first hit the window extends to
    // the automorphism image of that solution.
    let cap = (m.abs() * (&u + BigInt::one())).sqrt() * (&v + BigInt::one()) + BigInt::one();
    let mut seeds = Vec::new();
    let mut x = BigInt::zero();
    let mut window: Option<BigInt> = None;
    loop {
        match &window {
            Some(end) => {
                if &x > end {
                    break;
                }
            }
            None => {
                if x > cap {
                    break;
                }
            }
        }
        let y2 = &nb * &x * &x + &m;
        if !y2.is_negative() {
            let y = y2.sqrt();
            if &y * &y == y2 {
                if window.is_none() {
                    window = Some(&u * &x + &v * &y);
                }
                seeds.push((x.clone(), y));
            }
        }
        x += 1;
    }
    PellFamily {
        seeds,
        automorphism,
    }
}

fn divisors_signed(m: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let abs = m.abs();
    let mut d = BigInt::one();
    while &d * &d <= abs {
        if (&abs % &d).is_zero() {
            let q = &abs / &d;
            out.push(d.clone());
            out.push(-d.clone());
            out.push(q.clone());
            out.push(-q);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

/// All E-classes within the coordinate bound: primitive positive-halfspace
/// classes with (square, divisibility) among (-2, 1), (-2, 2), (-10, 2).
/// Nodal flags are left false; `nodal_classes` fills them.
pub fn e_classes(cfg: &Rank2Config, bound: u64) -> Vec<EClass> {
    let mut out = Vec::new();
    for (c, kinds) in [(BigInt::from(-2), true), (BigInt::from(-10), false)] {
        for v in enumerate_square(cfg, &c, bound) {
            let div = cfg.divisibility(&v);
            let kind = if kinds {
                if div.is_one() {
                    Some(EKind::MinusTwoDivOne)
                } else if div == BigInt::from(2) {
                    Some(EKind::MinusTwoDivTwo)
                } else {
                    None
                }
            } else if div == BigInt::from(2) {
                Some(EKind::MinusTenDivTwo)
            } else {
                None
            };
            if let Some(kind) = kind {
                out.push(EClass {
                    vector: v,
                    kind,
                    nodal: false,
                });
            }
        }
    }
    out.sort_by(|a, b| angular_cmp(&a.vector, &b.vector));
    out
}

/// The positive cone: boundary rays of {v : (v,v) > 0} on the (v, g) > 0
/// side, as exact data. Rays are integral when the form discriminant is a
/// perfect square and quadratic-irrational otherwise. Open sector.
pub fn positive_cone(cfg: &Rank2Config) -> ConeSector {
    let (a, b, c) = cfg.coeffs();
    let disc = cfg.disc();
    let s = disc.sqrt();
    let ell = cfg.halfspace();
    let mut rays: Vec<Ray> = Vec::new();
    if &s * &s == disc {
        // Rational isotropic directions.
        for v in integral_isotropic(a, b, c, &s) {
            let r = Ray::lattice(v);
            rays.push(orient_into_halfspace(r, &ell));
        }
    } else if !c.is_zero() {
        for sign in [1i64, -1] {
            let r = Ray::Irrational {
                x: QuadExt::from_int(c.clone()),
                y: QuadExt {
                    a: BigRational::from(-b.clone()),
                    b: BigRational::from(BigInt::from(sign)),
                    d: disc.clone(),
                },
            };
            rays.push(orient_into_halfspace(r, &ell));
        }
    } else {
        for sign in [1i64, -1] {
            let r = Ray::Irrational {
                x: QuadExt {
                    a: BigRational::from(-b.clone()),
                    b: BigRational::from(BigInt::from(sign)),
                    d: disc.clone(),
                },
                y: QuadExt::from_int(a.clone()),
            };
            rays.push(orient_into_halfspace(r, &ell));
        }
    }
    debug_assert_eq!(rays.len(), 2);
    let (r0, r1) = (rays[0].clone(), rays[1].clone());
    let (lo, hi) = if r0.cross_sign(&r1) == Ordering::Greater {
        (r0, r1)
    } else {
        (r1, r0)
    };
    let sector = ConeSector {
        lo,
        hi,
        lo_closed: false,
        hi_closed: false,
    };
    debug_assert!(sector.contains_vec_strict(&cfg.g));
    sector
}

fn integral_isotropic(a: &BigInt, b: &BigInt, c: &BigInt, s: &BigInt) -> Vec<IVec2> {
    let mut dirs: Vec<IVec2> = Vec::new();
    if !c.is_zero() {
        for sign in [1i64, -1] {
            dirs.push(IVec2(c.clone(), -b + BigInt::from(sign) * s).primitive());
        }
    } else if !a.is_zero() {
        for sign in [1i64, -1] {
            dirs.push(IVec2(-b + BigInt::from(sign) * s, a.clone()).primitive());
        }
    } else {
        dirs.push(IVec2(BigInt::one(), BigInt::zero()));
        dirs.push(IVec2(BigInt::zero(), BigInt::one()));
    }
    dirs.dedup();
    dirs
}

fn orient_into_halfspace(r: Ray, ell: &IVec2) -> Ray {
    match r.functional_sign(ell) {
        Ordering::Less => r.neg(),
        _ => r,
    }
}

/// Primitive integral square-zero classes in the positive halfspace,
/// solved exactly; empty when the form discriminant is not a perfect
/// square.
pub fn square_zero_classes(cfg: &Rank2Config) -> Vec<IVec2> {
    let disc = cfg.disc();
    let s = disc.sqrt();
    if &s * &s != disc {
        return vec![];
    }
    let (a, b, c) = cfg.coeffs();
    let ell = cfg.halfspace();
    let mut out: Vec<IVec2> = integral_isotropic(a, b, c, &s)
        .into_iter()
        .map(|v| {
            if ell.dot(&v).is_negative() {
                v.neg()
            } else {
                v
            }
        })
        .filter(|v| ell.dot(v).is_positive())
        .collect();
    out.sort_by(angular_cmp);
    out.dedup();
    out
}

fn nodal_at_bound(cfg: &Rank2Config, bound: u64) -> Vec<EClass> {
    let classes = e_classes(cfg, bound);
    let cone = positive_cone(cfg);
    let mut below: Option<&EClass> = None;
    let mut above: Option<&EClass> = None;
    for cl in &classes {
        let r = Ray::Lattice(cl.vector.clone());
        if r.cross_sign(&cone.lo) == Ordering::Greater {
            // Angularly before the lower boundary.
            if below
                .map(|cur| angular_cmp(&cl.vector, &cur.vector) == Ordering::Less)
                .unwrap_or(true)
            {
                below = Some(cl);
            }
        } else if cone.hi.cross_sign(&r) == Ordering::Greater
            && above
                .map(|cur| angular_cmp(&cl.vector, &cur.vector) == Ordering::Greater)
                .unwrap_or(true)
        {
            above = Some(cl);
        }
        // Classes of negative square never lie inside the closed positive
        // cone, so every E-class lands on one side.
    }
    let mut out: Vec<EClass> = [below, above]
        .into_iter()
        .flatten()
        .cloned()
        .map(|mut cl| {
            cl.nodal = true;
            cl
        })
        .collect();
    out.sort_by(|a, b| angular_cmp(&a.vector, &b.vector));
    out
}

/// E-classes that are extremal in the hull of the positive cone and all
/// E-class rays. The result is recomputed at twice the bound and must
/// agree, otherwise the bound is reported as too small.
pub fn nodal_classes(cfg: &Rank2Config, bound: u64) -> Result<Vec<EClass>> {
    let now = nodal_at_bound(cfg, bound);
    let doubled = nodal_at_bound(cfg, bound * 2);
    if now != doubled {
        return Err(Error::Unstable {
            bound,
            doubled: bound * 2,
        });
    }
    Ok(now)
}

/// The cone of the conjectured effective-curve monoid: hull of the
/// positive cone and all E-class rays (closed).
pub fn effective_cone(cfg: &Rank2Config, bound: u64) -> Result<ConeSector> {
    let nodal = nodal_classes(cfg, bound)?;
    let cone = positive_cone(cfg);
    let mut lo = cone.lo;
    let mut hi = cone.hi;
    for cl in &nodal {
        let r = Ray::Lattice(cl.vector.clone());
        if r.cross_sign(&lo) == Ordering::Greater {
            lo = r;
        } else if hi.cross_sign(&r) == Ordering::Greater {
            hi = r;
        }
    }
    Ok(ConeSector {
        lo,
        hi,
        lo_closed: true,
        hi_closed: true,
    })
}

/// Decides whether v splits as a sum of two nonzero integral classes in
/// the (conjectured) effective cone, by exhaustive search over the
/// polytope of admissible summands. Returns a witness pair when found.
pub fn is_decomposable_in_monoid(
    cfg: &Rank2Config,
    v: &IVec2,
    bound: u64,
) -> Result<Option<(IVec2, IVec2)>> {
    let ell = cfg.halfspace();
    let level = ell.dot(v);
    if !level.is_positive() {
        return Err(Error::OutsideHalfspace { pairing: level });
    }
    let cone = effective_cone(cfg, bound)?;
    if !cone.contains_vec(v) {
        // Sums of cone elements stay in the (convex) cone.
        return Ok(None);
    }
    // Any summand a satisfies a in cone, v - a in cone, and
    // 0 < ell.a < ell.v; coordinates on that slab are bounded by the cone
    // ray directions.
    let mut coeff = BigRational::zero();
    for ray in [&cone.lo, &cone.hi] {
        let ((x_lo, x_hi), (y_lo, y_hi)) = ray.coord_bounds();
        let coord_max = [x_lo.abs(), x_hi.abs(), y_lo.abs(), y_hi.abs()]
            .into_iter()
            .max()
            .unwrap();
        // Lower bound for ell . ray using the enclosure.
        let (e_lo, _) = ray_functional_bounds(ray, &ell);
        if !e_lo.is_positive() {
            // Fall back to a generous slab when the enclosure is too
            // coarse; rays of the effective cone always pair positively
            // with g so a unit lower bound is safe for integral rays.
            coeff = coeff.max(coord_max);
            continue;
        }
        coeff = coeff.max(coord_max / e_lo);
    }
    let m: BigInt = (BigRational::from(level.clone()) * coeff)
        .ceil()
        .to_integer()
        + 1;
    let total: BigInt = (BigInt::from(2) * &m + BigInt::one()).pow(2u32);
    if total > BigInt::from(20_000_000u64) {
        return Err(Error::Invalid(format!(
            "decomposition search region too large ({total} points)"
        )));
    }
    let mut x = -m.clone();
    while x <= m {
        let mut y = -m.clone();
        while y <= m {
            let a = IVec2(x.clone(), y.clone());
            if !a.is_zero() {
                let la = ell.dot(&a);
                if la.is_positive() && la < level && cone.contains_vec(&a) {
                    let b = v.sub(&a);
                    if !b.is_zero() && cone.contains_vec(&b) {
                        return Ok(Some((a, b)));
                    }
                }
            }
            y += 1;
        }
        x += 1;
    }
    Ok(None)
}

fn ray_functional_bounds(ray: &Ray, ell: &IVec2) -> (BigRational, BigRational) {
    let ((x_lo, x_hi), (y_lo, y_hi)) = ray.coord_bounds();
    let e0 = BigRational::from(ell.0.clone());
    let e1 = BigRational::from(ell.1.clone());
    let tx = if e0.is_negative() {
        (&e0 * x_hi, &e0 * x_lo)
    } else {
        (&e0 * x_lo, &e0 * x_hi)
    };
    let ty = if e1.is_negative() {
        (&e1 * y_hi, &e1 * y_lo)
    } else {
        (&e1 * y_lo, &e1 * y_hi)
    };
    (tx.0 + ty.0, tx.1 + ty.1)
}

/// The predicted ample cone: the subsector of the positive cone cut out by
/// (lambda, rho) > 0 over all nodal rho. Open sector.
pub fn ample_cone(cfg: &Rank2Config, bound: u64) -> Result<ConeSector> {
    let nodal = nodal_classes(cfg, bound)?;
    let mut sector = positive_cone(cfg);
    for cl in &nodal {
        let ell = cfg.pairing_functional(&cl.vector);
        sector = sector
            .cut(&ell, false)
            .ok_or_else(|| Error::Invalid("ample cone is empty".into()))?;
    }
    debug_assert!(sector.contains_vec_strict(&cfg.g));
    Ok(sector)
}

/// Reflection in a (-2)-class: v + (v, rho) rho. Involutive, fixes the
/// wall rho-perp, preserves the form.
pub fn weyl_reflect(v: &LatticeVector, rho: &LatticeVector) -> Result<LatticeVector> {
    let rho_sq = square(rho);
    if rho_sq != BigInt::from(-2) {
        return Err(Error::NotMinusTwo { square: rho_sq });
    }
    let p = pair(v, rho)?;
    let coords = v
        .coords()
        .iter()
        .zip(rho.coords())
        .map(|(a, r)| a + &p * r)
        .collect();
    v.host().vector(coords)
}

#[derive(Clone, Debug)]
pub struct FundamentalDomain {
    pub sector: ConeSector,
    /// The (-2)-classes whose walls are active boundaries of the domain.
    pub walls: Vec<IVec2>,
}

fn fundamental_domain_at_bound(cfg: &Rank2Config, bound: u64) -> FundamentalDomain {
    let classes: Vec<EClass> = e_classes(cfg, bound)
        .into_iter()
        .filter(|cl| cl.kind.square() == -2)
        .collect();
    let mut sector = positive_cone(cfg);
    sector.lo_closed = true;
    sector.hi_closed = true;
    for cl in &classes {
        let ell = cfg.pairing_functional(&cl.vector);
        if let Some(next) = sector.cut(&ell, true) {
            sector = next;
        }
    }
    // Active walls: classes whose orthogonal line carries a boundary ray
    // of the final domain.
    let mut walls: Vec<IVec2> = classes
        .into_iter()
        .filter(|cl| {
            let ell = cfg.pairing_functional(&cl.vector);
            sector.lo.functional_sign(&ell) == Ordering::Equal
                || sector.hi.functional_sign(&ell) == Ordering::Equal
        })
        .map(|cl| cl.vector)
        .collect();
    walls.sort_by(angular_cmp);
    FundamentalDomain { sector, walls }
}

/// The fundamental domain of the (-2)-reflection group on the closed
/// positive cone: cut by (v, rho) >= 0 for every (-2)-class rho in E.
/// Stability-checked at twice the bound.
pub fn fundamental_domain(cfg: &Rank2Config, bound: u64) -> Result<FundamentalDomain> {
    let now = fundamental_domain_at_bound(cfg, bound);
    let doubled = fundamental_domain_at_bound(cfg, bound * 2);
    if !now.sector.same_sector(&doubled.sector) {
        return Err(Error::Unstable {
            bound,
            doubled: bound * 2,
        });
    }
    Ok(now)
}

#[derive(Clone, Debug)]
pub struct Reduction {
    pub reduced: IVec2,
    /// Reflection classes applied, in order.
    pub word: Vec<IVec2>,
}

/// Moves v into the fundamental domain by reflecting in violated
/// (-2)-walls, preferring the wall of smallest angular distance. The
/// returned word w satisfies reduced = w(v).
pub fn reduce_to_fundamental(
    cfg: &Rank2Config,
    v: &IVec2,
    max_iters: u64,
    bound: u64,
) -> Result<Reduction> {
    let vsq = cfg.form_eval(v);
    if !vsq.is_positive() {
        return Err(Error::NonPositiveSquare { square: vsq });
    }
    let ell_g = cfg.halfspace();
    if !ell_g.dot(v).is_positive() {
        return Err(Error::OutsideHalfspace {
            pairing: ell_g.dot(v),
        });
    }
    let domain = fundamental_domain(cfg, bound)?;
    let minus_two: Vec<IVec2> = e_classes(cfg, bound)
        .into_iter()
        .filter(|cl| cl.kind.square() == -2)
        .map(|cl| cl.vector)
        .collect();
    let mut current = v.clone();
    let mut word = Vec::new();
    for _ in 0..max_iters {
        let violated: Vec<&IVec2> = minus_two
            .iter()
            .filter(|rho| cfg.form_pair(&current, rho).is_negative())
            .collect();
        if violated.is_empty() {
            debug_assert!(domain.sector.contains_vec(&current));
            return Ok(Reduction {
                reduced: current,
                word,
            });
        }
        // Wall ray of each violated class, oriented into the halfspace;
        // pick the wall angularly closest to the current vector.
        let mut best: Option<(&IVec2, IVec2)> = None;
        for rho in violated {
            let ell = cfg.pairing_functional(rho);
            let mut w = IVec2(-ell.1.clone(), ell.0.clone()).primitive();
            if ell_g.dot(&w).is_negative() {
                w = w.neg();
            }
            let closer = match &best {
                None => true,
                Some((_, bw)) => angle_dist_cmp(&current, &w, bw) == Ordering::Less,
            };
            if closer {
                best = Some((rho, w));
            }
        }
        let (rho, _) = best.expect("nonempty violated set");
        let p = cfg.form_pair(&current, rho);
        current = current.add(&rho.scale(&p));
        word.push(rho.clone());
    }
    Err(Error::IterationCap {
        cap: max_iters,
        partial_len: word.len(),
        at: format!("{current}"),
    })
}

/// Exact comparison of angular distances from v to w1 and to w2
/// (coordinate angles in (0, pi)).
fn angle_dist_cmp(v: &IVec2, w1: &IVec2, w2: &IVec2) -> Ordering {
    let d1 = v.dot(w1);
    let d2 = v.dot(w2);
    // Smaller angle <=> larger cosine: compare d_i / sqrt(|w_i|^2).
    match (d1.is_negative(), d2.is_negative()) {
        (false, true) => return Ordering::Less,
        (true, false) => return Ordering::Greater,
        _ => {}
    }
    let n1 = w1.dot(w1);
    let n2 = w2.dot(w2);
    let lhs = &d1 * &d1 * n2;
    let rhs = &d2 * &d2 * n1;
    if d1.is_negative() {
        lhs.cmp(&rhs)
    } else {
        rhs.cmp(&lhs)
    }
}

#[derive(Clone, Debug)]
pub struct Chamber {
    pub sector: ConeSector,
    pub contains_g: bool,
}

fn chambers_at_bound(cfg: &Rank2Config, bound: u64) -> Vec<Chamber> {
    let domain = fundamental_domain_at_bound(cfg, bound);
    let mut wall_rays: Vec<IVec2> = Vec::new();
    for cl in e_classes(cfg, bound) {
        if cl.kind != EKind::MinusTenDivTwo {
            continue;
        }
        let ell = cfg.pairing_functional(&cl.vector);
        let mut w = IVec2(-ell.1.clone(), ell.0.clone()).primitive();
        if cfg.halfspace().dot(&w).is_negative() {
            w = w.neg();
        }
        if domain.sector.ray_in_interior(&Ray::Lattice(w.clone())) {
            wall_rays.push(w);
        }
    }
    wall_rays.sort_by(angular_cmp);
    wall_rays.dedup();
    let mut boundaries: Vec<Ray> = Vec::with_capacity(wall_rays.len() + 2);
    boundaries.push(domain.sector.lo.clone());
    boundaries.extend(wall_rays.into_iter().map(Ray::Lattice));
    boundaries.push(domain.sector.hi.clone());
    let mut out = Vec::new();
    for pair in boundaries.windows(2) {
        let sector = ConeSector {
            lo: pair[0].clone(),
            hi: pair[1].clone(),
            lo_closed: true,
            hi_closed: true,
        };
        let contains_g = sector.contains_vec(&cfg.g);
        out.push(Chamber { sector, contains_g });
    }
    // g sits on a wall only in degenerate configurations; flag a single
    // chamber deterministically in that case.
    let mut seen_g = false;
    for ch in out.iter_mut() {
        if ch.contains_g {
            if seen_g {
                ch.contains_g = false;
            }
            seen_g = true;
        }
    }
    out
}

/// Subdivision of the fundamental domain by the walls of (-10)-classes in
/// E that meet its interior; the chamber containing g is flagged.
/// Stability-checked at twice the bound.
pub fn chambers(cfg: &Rank2Config, bound: u64) -> Result<Vec<Chamber>> {
    let now = chambers_at_bound(cfg, bound);
    let doubled = chambers_at_bound(cfg, bound * 2);
    let same = now.len() == doubled.len()
        && now
            .iter()
            .zip(&doubled)
            .all(|(a, b)| a.sector.same_sector(&b.sector) && a.contains_g == b.contains_g);
    if !same {
        return Err(Error::Unstable {
            bound,
            doubled: bound * 2,
        });
    }
    Ok(now)
}

/// Square of a boundary ray: the exact form value for integral rays, and
/// zero for the irrational positive-cone boundaries.
pub fn ray_square(cfg: &Rank2Config, ray: &Ray) -> BigInt {
    match ray {
        Ray::Lattice(v) => cfg.form_eval(v),
        Ray::Irrational { .. } => BigInt::zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlattice::DivisibilityProfile;

    pub(crate) fn hilb(two_n: i64) -> Rank2Config {
        let lattice =
            GramLattice::from_rows(&[&[two_n, 0], &[0, -2]], &[&format!("f{two_n}"), "e"]);
        let profile = DivisibilityProfile::from_i64(&[1, 2], &lattice);
        let g = if two_n == 2 {
            IVec2::from_i64(2, -1)
        } else {
            IVec2::from_i64(1, -1)
        };
        Rank2Config::new(lattice, profile, g).unwrap()
    }

    pub(crate) fn fano(gram: [[i64; 2]; 2], labels: [&str; 2]) -> Rank2Config {
        let lattice = GramLattice::from_rows(&[&gram[0], &gram[1]], &labels);
        let profile = DivisibilityProfile::from_i64(&[2, 1], &lattice);
        Rank2Config::new(lattice, profile, IVec2::from_i64(1, 0)).unwrap()
    }

    fn vecs(items: &[(i64, i64)]) -> Vec<IVec2> {
        items.iter().map(|&(x, y)| IVec2::from_i64(x, y)).collect()
    }

    /// Independent brute-force oracle: scan the full coordinate box.
    pub(crate) fn enumerate_oracle(cfg: &Rank2Config, c: &BigInt, bound: i64) -> Vec<IVec2> {
        let mut out = Vec::new();
        let ell = cfg.halfspace();
        for x in -bound..=bound {
            for y in -bound..=bound {
                let v = IVec2::from_i64(x, y);
                if v.is_zero() {
                    continue;
                }
                if &cfg.form_eval(&v) == c && v.is_primitive() && ell.dot(&v).is_positive() {
                    out.push(v);
                }
            }
        }
        out.sort_by(angular_cmp);
        out
    }

    #[test]
    fn enumerate_degree_eight_hilbert_square() {
        let cfg = hilb(8);
        let minus2 = enumerate_square(&cfg, &BigInt::from(-2), 50);
        assert_eq!(minus2, vecs(&[(0, 1)]));
        let minus10 = enumerate_square(&cfg, &BigInt::from(-10), 50);
        assert_eq!(minus10, vecs(&[(1, -3), (1, 3)]));
        for v in &minus10 {
            assert_eq!(cfg.divisibility(v), BigInt::one());
        }
    }

    #[test]
    fn enumerate_degree_four_contains_pell_members() {
        let cfg = hilb(4);
        let found = enumerate_square(&cfg, &BigInt::from(-2), 20);
        for expected in vecs(&[(0, 1), (2, -3), (12, -17)]) {
            assert!(found.contains(&expected), "missing {expected}");
        }
    }

    #[test]
    fn enumerate_matches_oracle_on_presets() {
        for cfg in [
            hilb(2),
            hilb(4),
            hilb(8),
            fano([[6, 2], [2, -2]], ["g", "tau"]),
        ] {
            for c in [-10i64, -2, 0, 2, 6] {
                let c = BigInt::from(c);
                assert_eq!(
                    enumerate_square(&cfg, &c, 25),
                    enumerate_oracle(&cfg, &c, 25),
                    "mismatch at c = {c}"
                );
            }
        }
    }

    #[test]
    fn pell_family_degree_four() {
        let fam = pell_family(2, &BigInt::from(-2));
        assert_eq!(
            fam.seeds,
            vec![
                (BigInt::zero(), BigInt::one()),
                (BigInt::from(2), BigInt::from(3))
            ]
        );
        assert_eq!(
            fam.automorphism,
            [
                [BigInt::from(3), BigInt::from(2)],
                [BigInt::from(4), BigInt::from(3)]
            ]
        );
        let next = fam.apply(&(BigInt::from(2), BigInt::from(3)));
        assert_eq!(next, (BigInt::from(12), BigInt::from(17)));
    }

    #[test]
    fn pell_family_square_discriminants() {
        let fam = pell_family(4, &BigInt::from(-2));
        assert_eq!(fam.seeds, vec![(BigInt::zero(), BigInt::one())]);
        assert!(fam.is_trivial_automorphism());
        let ray = pell_family(4, &BigInt::zero());
        assert_eq!(ray.seeds, vec![(BigInt::one(), BigInt::from(2))]);
    }

    #[test]
    fn pell_expansion_equals_brute_force() {
        for (n, two_n) in [(1u64, 2i64), (2, 4), (4, 8)] {
            let cfg = hilb(two_n);
            for c in [-10i64, -2] {
                let c = BigInt::from(c);
                let fam = pell_family(n, &c);
                let bound = 10_000u64;
                let mut expanded: Vec<IVec2> = fam
                    .expand(bound)
                    .into_iter()
                    .filter(|v| v.is_primitive() && cfg.halfspace().dot(v).is_positive())
                    .collect();
                expanded.sort_by(angular_cmp);
                let enumerated = enumerate_square(&cfg, &c, bound);
                assert_eq!(expanded, enumerated, "n={n}, c={c}");
            }
        }
    }

    #[test]
    fn e_classes_per_preset() {
        let cfg = hilb(8);
        let classes = e_classes(&cfg, 50);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].vector, IVec2::from_i64(0, 1));
        assert_eq!(classes[0].kind, EKind::MinusTwoDivTwo);

        let f8 = fano([[6, 2], [2, -2]], ["g", "tau"]);
        let classes = e_classes(&f8, 50);
        let vectors: Vec<&IVec2> = classes.iter().map(|c| &c.vector).collect();
        assert!(vectors.contains(&&IVec2::from_i64(0, 1)));
        assert!(vectors.contains(&&IVec2::from_i64(1, -2)));

        let f20 = fano([[6, 8], [8, 4]], ["g", "v"]);
        let classes = e_classes(&f20, 1000);
        assert!(classes.iter().all(|c| c.kind == EKind::MinusTenDivTwo));
    }

    #[test]
    fn positive_cone_boundaries() {
        // Fano d=8: rays g - tau and g + 3 tau (printed as 3a+b>0, a-b>0).
        let f8 = fano([[6, 2], [2, -2]], ["g", "tau"]);
        let cone = positive_cone(&f8);
        assert!(cone.lo.same_ray(&Ray::lattice(IVec2::from_i64(1, -1))));
        assert!(cone.hi.same_ray(&Ray::lattice(IVec2::from_i64(1, 3))));

        let cfg = hilb(2);
        let cone = positive_cone(&cfg);
        assert!(cone.lo.same_ray(&Ray::lattice(IVec2::from_i64(1, -1))));
        assert!(cone.hi.same_ray(&Ray::lattice(IVec2::from_i64(1, 1))));

        let cfg = hilb(8);
        let cone = positive_cone(&cfg);
        assert!(cone.lo.same_ray(&Ray::lattice(IVec2::from_i64(1, -2))));
        assert!(cone.hi.same_ray(&Ray::lattice(IVec2::from_i64(1, 2))));

        let cfg = hilb(4);
        let cone = positive_cone(&cfg);
        assert!(!cone.lo.is_integral());
        assert!(!cone.hi.is_integral());
    }

    #[test]
    fn nodal_classes_on_hilbert_squares() {
        let cfg = hilb(2);
        let nodal = nodal_classes(&cfg, 200).unwrap();
        let v: Vec<&IVec2> = nodal.iter().map(|c| &c.vector).collect();
        assert_eq!(v, vec![&IVec2::from_i64(2, -3), &IVec2::from_i64(0, 1)]);

        let cfg = hilb(4);
        let nodal = nodal_classes(&cfg, 200).unwrap();
        let v: Vec<&IVec2> = nodal.iter().map(|c| &c.vector).collect();
        assert_eq!(v, vec![&IVec2::from_i64(2, -3), &IVec2::from_i64(0, 1)]);

        let cfg = hilb(8);
        let nodal = nodal_classes(&cfg, 200).unwrap();
        let v: Vec<&IVec2> = nodal.iter().map(|c| &c.vector).collect();
        assert_eq!(v, vec![&IVec2::from_i64(0, 1)]);
    }

    #[test]
    fn nodal_classes_on_fano_presets() {
        let cases: Vec<([[i64; 2]; 2], Vec<(i64, i64)>)> = vec![
            ([[6, 2], [2, -2]], vec![(1, -2), (0, 1)]),
            ([[6, 6], [6, 2]], vec![(3, -2), (-1, 2)]),
            ([[6, 8], [8, 6]], vec![(2, -1), (-1, 2)]),
            ([[6, 8], [8, 4]], vec![(19, -8), (-1, 2)]),
            ([[6, 10], [10, 8]], vec![(109, -38), (-1, 2)]),
        ];
        for (gram, expected) in cases {
            let cfg = fano(gram, ["g", "t"]);
            let nodal = nodal_classes(&cfg, 200).unwrap();
            let got: Vec<IVec2> = nodal.into_iter().map(|c| c.vector).collect();
            assert_eq!(got, vecs(&expected), "gram {gram:?}");
        }
    }

    #[test]
    fn nodal_instability_is_reported() {
        // d=26 at bound 60: the class (109, -38) is invisible, so doubling
        // the bound changes the nodal set.
        let cfg = fano([[6, 10], [10, 8]], ["g", "tau"]);
        assert!(matches!(
            nodal_classes(&cfg, 60),
            Err(Error::Unstable { .. })
        ));
    }

    #[test]
    fn ample_cones() {
        let cfg = hilb(2);
        let sector = ample_cone(&cfg, 200).unwrap();
        assert!(sector.lo.same_ray(&Ray::lattice(IVec2::from_i64(3, -2))));
        assert!(sector.hi.same_ray(&Ray::lattice(IVec2::from_i64(1, 0))));

        let cfg = hilb(4);
        let sector = ample_cone(&cfg, 200).unwrap();
        assert!(sector.lo.same_ray(&Ray::lattice(IVec2::from_i64(3, -4))));
        assert!(sector.hi.same_ray(&Ray::lattice(IVec2::from_i64(1, 0))));

        let cfg = hilb(8);
        let sector = ample_cone(&cfg, 200).unwrap();
        assert!(sector.lo.same_ray(&Ray::lattice(IVec2::from_i64(1, -2))));
        assert!(sector.hi.same_ray(&Ray::lattice(IVec2::from_i64(1, 0))));

        // Fano d=8: {a+b>0, a-3b>0} has rays 3g-tau and g+tau.
        let f8 = fano([[6, 2], [2, -2]], ["g", "tau"]);
        let sector = ample_cone(&f8, 200).unwrap();
        assert!(sector.lo.same_ray(&Ray::lattice(IVec2::from_i64(3, -1))));
        assert!(sector.hi.same_ray(&Ray::lattice(IVec2::from_i64(1, 1))));
    }

    #[test]
    fn decomposability_witnesses() {
        let cfg = hilb(4);
        let target = IVec2::from_i64(12, -17);
        let witness = is_decomposable_in_monoid(&cfg, &target, 200)
            .unwrap()
            .expect("decomposable");
        assert_eq!(witness.0.add(&witness.1), target);
        let cone = effective_cone(&cfg, 200).unwrap();
        assert!(cone.contains_vec(&witness.0));
        assert!(cone.contains_vec(&witness.1));

        let cfg = hilb(2);
        assert!(is_decomposable_in_monoid(&cfg, &IVec2::from_i64(0, 1), 200)
            .unwrap()
            .is_none());

        // 2w for w deep in the positive cone splits as w + w.
        let w = IVec2::from_i64(3, -1);
        let cfg = hilb(4);
        assert!(cfg.form_eval(&w) >= BigInt::from(8));
        let witness = is_decomposable_in_monoid(&cfg, &w.scale(&BigInt::from(2)), 200)
            .unwrap()
            .expect("2w is decomposable");
        assert_eq!(witness.0.add(&witness.1), w.scale(&BigInt::from(2)));
    }

    #[test]
    fn weyl_reflection_basics() {
        let cfg = hilb(2);
        let lat = cfg.lattice();
        let e = lat.vector_i64(&[0, 1]);
        let f = lat.vector_i64(&[1, 0]);
        // (f, e) = 0 so the reflection fixes f.
        assert_eq!(weyl_reflect(&f, &e).unwrap(), f);
        // s_rho(rho) = -rho.
        let me = weyl_reflect(&e, &e).unwrap();
        assert_eq!(me.coords(), &[BigInt::zero(), BigInt::from(-1)]);
        // Involution on an arbitrary vector.
        let v = lat.vector_i64(&[5, 7]);
        let rho = lat.vector_i64(&[2, -3]);
        assert_eq!(cfg.form_eval(&IVec2::from_i64(2, -3)), BigInt::from(-10));
        let minus2 = lat.vector_i64(&[0, 1]);
        let once = weyl_reflect(&v, &minus2).unwrap();
        let twice = weyl_reflect(&once, &minus2).unwrap();
        assert_eq!(twice, v);
        // Non-(-2) classes are rejected.
        assert!(matches!(
            weyl_reflect(&v, &rho),
            Err(Error::NotMinusTwo { .. })
        ));
    }

    #[test]
    fn fundamental_domains() {
        // Fano d=8: {a+b>=0, a-b>=0} has rays g-tau and g+tau.
        let f8 = fano([[6, 2], [2, -2]], ["g", "tau"]);
        let dom = fundamental_domain(&f8, 200).unwrap();
        assert!(dom
            .sector
            .lo
            .same_ray(&Ray::lattice(IVec2::from_i64(1, -1))));
        assert!(dom.sector.hi.same_ray(&Ray::lattice(IVec2::from_i64(1, 1))));
        assert_eq!(dom.walls, vecs(&[(0, 1)]));

        // d=20 has no (-2)-classes: domain is the closed positive cone.
        let f20 = fano([[6, 8], [8, 4]], ["g", "v"]);
        let dom = fundamental_domain(&f20, 200).unwrap();
        let cone = positive_cone(&f20);
        assert!(dom.sector.lo.same_ray(&cone.lo));
        assert!(dom.sector.hi.same_ray(&cone.hi));
        assert!(dom.walls.is_empty());

        // Degree 2: cut by the e-wall and bounded by the cone boundary.
        let cfg = hilb(2);
        let dom = fundamental_domain(&cfg, 200).unwrap();
        assert!(dom
            .sector
            .lo
            .same_ray(&Ray::lattice(IVec2::from_i64(1, -1))));
        assert!(dom.sector.hi.same_ray(&Ray::lattice(IVec2::from_i64(1, 0))));
        assert_eq!(dom.walls, vecs(&[(0, 1)]));

        // Degree 4: exactly the two walls of the nodal classes are active
        // even though infinitely many (-2)-classes exist.
        let cfg = hilb(4);
        let dom = fundamental_domain(&cfg, 200).unwrap();
        assert!(dom
            .sector
            .lo
            .same_ray(&Ray::lattice(IVec2::from_i64(3, -4))));
        assert!(dom.sector.hi.same_ray(&Ray::lattice(IVec2::from_i64(1, 0))));
        assert_eq!(dom.walls, vecs(&[(2, -3), (0, 1)]));
    }

    #[test]
    fn reduction_into_domain() {
        let f8 = fano([[6, 2], [2, -2]], ["g", "tau"]);
        // Already interior: empty word.
        let r = reduce_to_fundamental(&f8, &IVec2::from_i64(1, 0), 100, 200).unwrap();
        assert!(r.word.is_empty());
        assert_eq!(r.reduced, IVec2::from_i64(1, 0));

        // The tau-reflection of g needs exactly one reflection back.
        let v = IVec2::from_i64(1, 2);
        let r = reduce_to_fundamental(&f8, &v, 100, 200).unwrap();
        assert_eq!(r.word, vecs(&[(0, 1)]));
        assert_eq!(r.reduced, IVec2::from_i64(1, 0));

        // Reflecting an interior vector and reducing recovers it.
        let interior = IVec2::from_i64(2, 1);
        assert!(f8.form_eval(&interior).is_positive());
        let dom = fundamental_domain(&f8, 200).unwrap();
        assert!(dom.sector.contains_vec_strict(&interior));
        let tau = f8.lattice().vector_i64(&[0, 1]);
        let image = weyl_reflect(&f8.lattice_vector(&interior), &tau).unwrap();
        let image = IVec2(image.coords()[0].clone(), image.coords()[1].clone());
        let r = reduce_to_fundamental(&f8, &image, 100, 200).unwrap();
        assert_eq!(r.reduced, interior);
    }

    #[test]
    fn chamber_decompositions() {
        let f8 = fano([[6, 2], [2, -2]], ["g", "tau"]);
        let chs = chambers(&f8, 200).unwrap();
        assert_eq!(chs.len(), 2);
        assert!(!chs[0].contains_g);
        assert!(chs[1].contains_g);
        assert!(chs[0]
            .sector
            .lo
            .same_ray(&Ray::lattice(IVec2::from_i64(1, -1))));
        assert!(chs[0]
            .sector
            .hi
            .same_ray(&Ray::lattice(IVec2::from_i64(3, -1))));
        assert!(chs[1]
            .sector
            .hi
            .same_ray(&Ray::lattice(IVec2::from_i64(1, 1))));

        // No (-10)-classes in E for the degree 8 Hilbert square.
        let cfg = hilb(8);
        let chs = chambers(&cfg, 200).unwrap();
        assert_eq!(chs.len(), 1);
        assert!(chs[0].contains_g);

        let cfg = hilb(2);
        let chs = chambers(&cfg, 200).unwrap();
        assert_eq!(chs.len(), 2);
    }

    #[test]
    fn chamber_walls_accumulate_for_d12() {
        // The (-10)-family of this lattice is infinite and its walls
        // accumulate at the positive-cone boundary, so the full chamber
        // fan is infinite; the computation must refuse rather than return
        // a truncated decomposition.
        let f12 = fano([[6, 6], [6, 2]], ["g", "tau"]);
        assert!(matches!(chambers(&f12, 200), Err(Error::Unstable { .. })));
    }

    #[test]
    fn square_zero_examples() {
        let cfg = hilb(8);
        assert_eq!(square_zero_classes(&cfg), vecs(&[(1, -2), (1, 2)]));
        let cfg = hilb(2);
        let zs = square_zero_classes(&cfg);
        assert!(zs.contains(&IVec2::from_i64(1, -1)));
        let cfg = hilb(4);
        assert!(square_zero_classes(&cfg).is_empty());
        // Cross-check by brute force.
        assert!(enumerate_oracle(&hilb(4), &BigInt::zero(), 1000).is_empty());
    }

    #[test]
    fn degree_two_wall_consistency() {
        // (2f2 - 3e, f2 - e) = -2.
        let cfg = hilb(2);
        assert_eq!(
            cfg.form_pair(&IVec2::from_i64(2, -3), &IVec2::from_i64(1, -1)),
            BigInt::from(-2)
        );
    }
}
