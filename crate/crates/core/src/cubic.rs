//! Cubic-fourfold arithmetic: transfer of the middle intersection form to
//! the Fano variety of lines, the scroll calculus with its numerical
//! predictions, unirational-parametrization degrees and effectivity
//! decompositions.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cone::Rank2Config;
use crate::error::{Error, Result};
use crate::qlattice::{DivisibilityProfile, GramLattice};
use crate::ray::IVec2;

/// The saturated rank-2 sublattice <h^2, T> of the middle cohomology of a
/// special cubic fourfold: h^2.h^2 = 3, b = <h^2, T>, t_sq = <T, T>.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicLatticeData {
    pub b: BigInt,
    pub t_sq: BigInt,
}

impl CubicLatticeData {
    pub fn new(b: BigInt, t_sq: BigInt) -> Result<Self> {
        let data = CubicLatticeData { b, t_sq };
        let d = data.disc();
        if !admissible_discriminant(&d) {
            return Err(Error::InadmissibleDiscriminant { disc: d });
        }
        Ok(data)
    }

    pub fn from_i64(b: i64, t_sq: i64) -> Result<Self> {
        CubicLatticeData::new(BigInt::from(b), BigInt::from(t_sq))
    }

    /// Discriminant 3 t_sq - b^2 of [[3, b], [b, t_sq]].
    pub fn disc(&self) -> BigInt {
        BigInt::from(3) * &self.t_sq - &self.b * &self.b
    }
}

/// Discriminants of special cubic fourfolds are > 6 and congruent to 0 or
/// 2 modulo 6.
pub fn admissible_discriminant(d: &BigInt) -> bool {
    if d <= &BigInt::from(6) {
        return false;
    }
    let r = d.mod_floor(&BigInt::from(6));
    r.is_zero() || r == BigInt::from(2)
}

/// Transfers <h^2, T> to the Beauville form on (g, tau) via the incidence
/// correspondence: split T = (b/3) h^2 + T0 with T0 primitive, use
/// (g, g) = 2 <h^2, h^2> and (alpha(v), alpha(w)) = -<v, w> on the
/// primitive part. The resulting Gram is [[6, 2b], [2b, b^2 - t_sq]] with
/// divisibility profile (2, 1); its determinant is -2 disc.
pub fn abel_jacobi_transfer(data: &CubicLatticeData) -> (GramLattice, DivisibilityProfile) {
    let three = BigRational::from(BigInt::from(3));
    let b = BigRational::from(data.b.clone());
    let t_sq = BigRational::from(data.t_sq.clone());
    let g_sq = BigRational::from(BigInt::from(2 * 3)); // 2 <h^2, h^2>
    let ratio = &b / &three; // T = ratio h^2 + T0
                             // <T0, T0> = t_sq - ratio^2 <h^2,h^2>
    let t0_sq = &t_sq - &ratio * &ratio * &three;
    // (g, tau) = ratio (g, g); (tau, tau) = ratio^2 (g,g) - <T0, T0>.
    let g_tau = &ratio * &g_sq;
    let tau_tau = &ratio * &ratio * &g_sq - &t0_sq;
    assert!(g_tau.is_integer() && tau_tau.is_integer());
    let gram = vec![
        vec![BigInt::from(6), g_tau.to_integer()],
        vec![g_tau.to_integer(), tau_tau.to_integer()],
    ];
    let lattice =
        GramLattice::new(gram, vec!["g".into(), "tau".into()]).expect("transfer gram is symmetric");
    let profile = DivisibilityProfile::new(vec![BigInt::from(2), BigInt::one()], &lattice)
        .expect("g-row entries are even");
    (lattice, profile)
}

/// Fano cone configuration of a cubic preset: transferred lattice with
/// polarization g.
pub fn fano_config(data: &CubicLatticeData) -> Result<Rank2Config> {
    let (lattice, profile) = abel_jacobi_transfer(data);
    Rank2Config::new(lattice, profile, IVec2::from_i64(1, 0))
}

/// Self-intersection of a degree-n scroll with delta double points:
/// 3n - 2 + 2 delta.
pub fn scroll_self_intersection(n: u64, delta: u64) -> BigInt {
    BigInt::from(3) * BigInt::from(n) - BigInt::from(2) + BigInt::from(2) * BigInt::from(delta)
}

/// Number of double points forced by the ruling square:
/// delta = (n^2 - 6n + 4 - 2 (R,R)) / 4, which must be a nonnegative
/// integer.
pub fn delta_from_ruling(n: u64, r_square: &BigRational) -> Result<BigInt> {
    let n = BigInt::from(n);
    let num = BigRational::from(&n * &n - BigInt::from(6) * &n + BigInt::from(4))
        - BigRational::from(BigInt::from(2)) * r_square;
    let delta = num / BigRational::from(BigInt::from(4));
    if !delta.is_integer() || delta.is_negative() {
        return Err(Error::InvalidDelta {
            value: delta.to_string(),
        });
    }
    Ok(delta.to_integer())
}

/// Discriminant of the lattice spanned by h^2 and a degree-n scroll with
/// delta double points: 6 delta - (n^2 - 9n + 6).
pub fn scroll_discriminant(n: u64, delta: u64) -> BigInt {
    let n = BigInt::from(n);
    BigInt::from(6) * BigInt::from(delta) - (&n * &n - BigInt::from(9) * &n + BigInt::from(6))
}

/// Least delta with admissible discriminant:
/// ceil((n^2 - 9n + 6)/6 + 1), possibly negative for small n.
pub fn delta_min(n: u64) -> BigInt {
    let n = BigInt::from(n);
    let q = BigRational::new(
        &n * &n - BigInt::from(9) * &n + BigInt::from(6),
        BigInt::from(6),
    ) + BigRational::one();
    q.ceil().to_integer()
}

/// Double-point counts of nodal scrolls of degree n, derived from the
/// ruling squares: (R,R) = -2 for even n, (R,R) in {-1/2, -5/2} for odd
/// n. Sorted ascending; negative values are dropped.
pub fn nodal_deltas(n: u64) -> Vec<BigInt> {
    let squares: &[BigRational] = if n.is_multiple_of(2) {
        &[BigRational::from(BigInt::from(-2))]
    } else {
        &[
            BigRational::new(BigInt::from(-1), BigInt::from(2)),
            BigRational::new(BigInt::from(-5), BigInt::from(2)),
        ]
    };
    let mut out: Vec<BigInt> = squares
        .iter()
        .filter_map(|r| delta_from_ruling(n, r).ok())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// One row of the scroll calculus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScrollRecord {
    pub n: u64,
    pub delta: u64,
    pub self_int: BigInt,
    pub disc: BigInt,
    pub r_square: BigRational,
    pub unirat_deg: Option<BigInt>,
    pub warnings: Vec<String>,
}

fn binomial2(n: u64) -> BigInt {
    if n < 2 {
        return BigInt::zero();
    }
    BigInt::from(n) * BigInt::from(n - 1) / BigInt::from(2)
}

/// Scrolls ruled out by projection arguments in P^5 despite admissible
/// numerics.
const NONEXISTENT: &[(u64, u64)] = &[(5, 2), (6, 4), (6, 5), (7, 5)];

/// Builds the record for a direct (n, delta) query, attaching warnings
/// for inadmissible or speculative parameter pairs.
pub fn scroll_record(n: u64, delta: u64) -> ScrollRecord {
    let self_int = scroll_self_intersection(n, delta);
    let disc = scroll_discriminant(n, delta);
    // Invert delta = (n^2 - 6n + 4 - 2r)/4.
    let nb = BigInt::from(n);
    let r_square = BigRational::new(
        &nb * &nb - BigInt::from(6) * &nb + BigInt::from(4) - BigInt::from(4) * BigInt::from(delta),
        BigInt::from(2),
    );
    let unirat = binomial2(n.saturating_sub(2)) - BigInt::from(delta);
    let unirat_deg = if unirat.is_positive() {
        Some(unirat)
    } else {
        None
    };
    let mut warnings = Vec::new();
    if !admissible_discriminant(&disc) {
        warnings.push(format!("inadmissible discriminant {disc}"));
    }
    let nodal = nodal_deltas(n);
    let is_nodal = nodal.contains(&BigInt::from(delta));
    if !is_nodal {
        warnings.push("speculative: delta is not a nodal value for this degree".into());
        // Possible non-saturation: the true saturated discriminant could
        // be disc/4 (index-2 overlattice), as for the (8,5) pair.
        if (&disc % BigInt::from(4)).is_zero()
            && admissible_discriminant(&(&disc / BigInt::from(4)))
        {
            warnings.push(format!(
                "lattice may be non-saturated: an index-2 saturation would have discriminant {}",
                &disc / BigInt::from(4)
            ));
        }
    }
    if NONEXISTENT.contains(&(n, delta)) {
        warnings.push(
            "no scroll with these invariants exists: its normalization would force extra singular curves"
                .into(),
        );
    }
    ScrollRecord {
        n,
        delta,
        self_int,
        disc,
        r_square,
        unirat_deg,
        warnings,
    }
}

/// The table of numerical predictions for nodal scrolls of degree
/// 2..n_max.
pub fn nodal_scroll_table(n_max: u64) -> Vec<ScrollRecord> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for delta in nodal_deltas(n) {
            let delta = u64::try_from(&delta).expect("nonnegative small delta");
            out.push(scroll_record(n, delta));
        }
    }
    out
}

/// Speculative extension of the table: for each degree, `slack` extra
/// double-point counts beyond the largest nodal value (starting from
/// delta_min when no nodal value is admissible), marked by warnings.
pub fn speculative_scroll_rows(n_max: u64, slack: u64) -> Vec<ScrollRecord> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        let nodal = nodal_deltas(n);
        let start = match nodal.last() {
            Some(d) => u64::try_from(d).expect("small delta") + 1,
            None => u64::try_from(&delta_min(n).max(BigInt::zero())).expect("small delta"),
        };
        for delta in start..start + slack {
            out.push(scroll_record(n, delta));
        }
    }
    out
}

/// Fixed-order TSV serialization. Absent values print as "-", warnings
/// are joined with "; ".
pub fn records_to_tsv(records: &[ScrollRecord]) -> String {
    let mut s = String::from("n\tdelta\tself_int\tdisc\tr_square\tunirat_deg\twarnings\n");
    for r in records {
        let unirat = r
            .unirat_deg
            .as_ref()
            .map(|d| d.to_string())
            .unwrap_or_else(|| "-".into());
        let warnings = if r.warnings.is_empty() {
            "-".to_string()
        } else {
            r.warnings.join("; ")
        };
        s.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.n, r.delta, r.self_int, r.disc, r.r_square, unirat, warnings
        ));
    }
    s
}

/// Geometric hypotheses of the degree formula, asserted by the caller.
#[derive(Clone, Copy, Debug, Default)]
pub struct UnirationalAssumptions {
    pub not_cone: bool,
    pub isolated_singularities: bool,
}

#[derive(Clone, Debug)]
pub struct UnirationalDegree {
    pub degree: BigInt,
    pub warnings: Vec<String>,
}

/// Degree of the unirational parametrization induced by a degree-n scroll
/// with delta double points: C(n-2, 2) - delta. Refuses to compute unless
/// the caller asserts that the scroll is not a cone and has isolated
/// singularities, without which the double-point count is wrong.
pub fn unirational_degree(
    n: u64,
    delta: u64,
    assumptions: UnirationalAssumptions,
) -> Result<UnirationalDegree> {
    if !(assumptions.not_cone && assumptions.isolated_singularities) {
        return Err(Error::MissingAssumptions);
    }
    let degree = binomial2(n.saturating_sub(2)) - BigInt::from(delta);
    if !degree.is_positive() {
        return Err(Error::NonPositiveDegree { value: degree });
    }
    let warnings = scroll_record(n, delta).warnings;
    Ok(UnirationalDegree { degree, warnings })
}

/// The divisor class rho with pairings (rho, g) = 2n and (rho, tau) = 2t
/// (the divisibility-2 convention), solved exactly.
pub fn ruling_class(cfg: &Rank2Config, n: &BigInt, t: &BigInt) -> Result<IVec2> {
    let lat = cfg.lattice();
    let (a, b, c) = (lat.entry(0, 0), lat.entry(0, 1), lat.entry(1, 1));
    let det = a * c - b * b;
    if det.is_zero() {
        return Err(Error::DegenerateLattice);
    }
    // Solve [[a, b], [b, c]] rho = (2n, 2t).
    let rhs0 = BigInt::from(2) * n;
    let rhs1 = BigInt::from(2) * t;
    let num0 = c * &rhs0 - b * &rhs1;
    let num1 = a * &rhs1 - b * &rhs0;
    let (x, rx) = num0.div_rem(&det);
    let (y, ry) = num1.div_rem(&det);
    if !rx.is_zero() || !ry.is_zero() {
        return Err(Error::NonIntegralSolution);
    }
    Ok(IVec2(x, y))
}

/// Pairing data (n, t) = ((rho, g)/2, (rho, tau)/2) of a ruling class;
/// inverse of `ruling_class` on divisibility-2 classes.
pub fn ruling_pairings(cfg: &Rank2Config, rho: &IVec2) -> Result<(BigInt, BigInt)> {
    let ell_g = cfg.pairing_functional(&IVec2::from_i64(1, 0));
    let ell_t = cfg.pairing_functional(&IVec2::from_i64(0, 1));
    let two = BigInt::from(2);
    let (n, rn) = ell_g.dot(rho).div_rem(&two);
    let (t, rt) = ell_t.dot(rho).div_rem(&two);
    if !rn.is_zero() || !rt.is_zero() {
        return Err(Error::NonIntegralSolution);
    }
    Ok((n, t))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EffectivityVerdict {
    Inside,
    Outside,
}

impl fmt::Display for EffectivityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EffectivityVerdict::Inside => write!(f, "inside monoid (conjectural)"),
            EffectivityVerdict::Outside => write!(f, "outside monoid (conjectural)"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub coefficients: (BigRational, BigRational),
    pub verdict: EffectivityVerdict,
}

/// Writes rho = a n1 + b n2 in the nodal basis and decides conjectural
/// effectivity: a class of negative square outside the nonnegative span
/// of the nodal classes lies outside the predicted effective cone.
pub fn decompose_in_nodal_basis(
    cfg: &Rank2Config,
    rho: &IVec2,
    nodal: (&IVec2, &IVec2),
) -> Result<Decomposition> {
    let det = nodal.0.cross(nodal.1);
    if det.is_zero() {
        return Err(Error::DependentNodalPair);
    }
    let a = BigRational::new(rho.cross(nodal.1), det.clone());
    let b = BigRational::new(nodal.0.cross(rho), det);
    let square = cfg.form_eval(rho);
    let verdict = if (a.is_negative() || b.is_negative()) && square.is_negative() {
        EffectivityVerdict::Outside
    } else {
        EffectivityVerdict::Inside
    };
    Ok(Decomposition {
        coefficients: (a, b),
        verdict,
    })
}

/// True iff m^T gram m = gram for the 2x2 integer matrix m given as rows.
pub fn isometry_check(m: &[[BigInt; 2]; 2], lattice: &GramLattice) -> bool {
    let g = lattice.gram();
    let mut gm = vec![vec![BigInt::zero(); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            gm[i][j] = &g[i][0] * &m[0][j] + &g[i][1] * &m[1][j];
        }
    }
    for i in 0..2 {
        for j in 0..2 {
            let v = &m[0][i] * &gm[0][j] + &m[1][i] * &gm[1][j];
            if v != g[i][j] {
                return false;
            }
        }
    }
    true
}

/// Applies the 2x2 matrix (rows) to a coordinate column vector.
pub fn apply_matrix(m: &[[BigInt; 2]; 2], v: &IVec2) -> IVec2 {
    IVec2(
        &m[0][0] * &v.0 + &m[0][1] * &v.1,
        &m[1][0] * &v.0 + &m[1][1] * &v.1,
    )
}

/// The five worked discriminants: (b, t_sq) with disc 8, 12, 14, 20, 26.
pub fn cubic_presets() -> Vec<(u64, CubicLatticeData)> {
    [(8, 1, 3), (12, 3, 7), (14, 4, 10), (20, 4, 12), (26, 5, 17)]
        .into_iter()
        .map(|(d, b, t)| {
            let data = CubicLatticeData::from_i64(b, t).expect("preset is admissible");
            debug_assert_eq!(data.disc(), BigInt::from(d));
            (d, data)
        })
        .collect()
}
