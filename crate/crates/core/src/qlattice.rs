//! Integral quadratic lattices: Gram matrices, pairings, invariants,
//! discriminant groups and divisibility profiles.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::mat;

#[derive(Debug)]
struct Inner {
    rank: usize,
    gram: mat::IMat,
    labels: Vec<String>,
}

/// A finite-rank integral lattice presented by a symmetric Gram matrix
/// with labeled basis vectors. Immutable after construction.
#[derive(Clone, Debug)]
pub struct GramLattice {
    inner: Arc<Inner>,
}

impl PartialEq for GramLattice {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.gram == other.inner.gram
    }
}
impl Eq for GramLattice {}

impl GramLattice {
    pub fn new(gram: mat::IMat, labels: Vec<String>) -> Result<Self> {
        let rank = gram.len();
        for (i, row) in gram.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::RaggedGram {
                    row: i,
                    found: row.len(),
                    expected: rank,
                });
            }
        }
        for i in 0..rank {
            for j in i + 1..rank {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::AsymmetricGram { row: i, col: j });
                }
            }
        }
        if labels.len() != rank {
            return Err(Error::LabelMismatch {
                rank,
                found: labels.len(),
            });
        }
        Ok(GramLattice {
            inner: Arc::new(Inner { rank, gram, labels }),
        })
    }

    /// Convenience constructor for literal tables; panics on invalid input.
    pub fn from_rows(rows: &[&[i64]], labels: &[&str]) -> Self {
        let gram = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        GramLattice::new(gram, labels.iter().map(|s| s.to_string()).collect())
            .expect("invalid literal gram matrix")
    }

    pub fn rank(&self) -> usize {
        self.inner.rank
    }

    pub fn gram(&self) -> &mat::IMat {
        &self.inner.gram
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.inner.gram[i][j]
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.entry(i, i).is_even())
    }

    pub fn determinant(&self) -> BigInt {
        mat::determinant(&self.inner.gram)
    }

    pub fn is_degenerate(&self) -> bool {
        self.determinant().is_zero()
    }

    /// Exact signature (positive, negative) by rational congruent
    /// diagonalization. Rejects degenerate lattices.
    pub fn signature(&self) -> Result<(usize, usize)> {
        let (pos, neg, zero) = mat::congruent_signature(&self.inner.gram);
        if zero > 0 {
            return Err(Error::DegenerateLattice);
        }
        Ok((pos, neg))
    }

    /// Invariant factors of L*/L together with the discriminant form q
    /// evaluated on a generator of each cyclic factor, reduced into [0, 2).
    pub fn discriminant_group(&self) -> Result<DiscriminantGroup> {
        if self.is_degenerate() {
            return Err(Error::DegenerateLattice);
        }
        if !self.is_even() {
            return Err(Error::OddLattice);
        }
        let (d, u, _v) = mat::smith_normal_form(&self.inner.gram);
        // Dual generators in lattice coordinates: w_i = G^{-1} U^{-1} e_i;
        // q(w_i) is the (i,i) entry of U^{-T} G^{-1} U^{-1}.
        let g_inv = mat::invert_rational(&mat::to_rational(&self.inner.gram))
            .ok_or(Error::DegenerateLattice)?;
        let u_inv = mat::invert_rational(&mat::to_rational(&u)).ok_or(Error::DegenerateLattice)?;
        let n = self.rank();
        let mut orders = Vec::new();
        let mut q_values = Vec::new();
        let two = BigRational::from(BigInt::from(2));
        for (i, di) in d.iter().enumerate() {
            let order = di.abs();
            if order <= BigInt::one() {
                continue;
            }
            // q = (U^{-T} G^{-1} U^{-1})_{ii} = u_inv_col_i^T * G^{-1} * u_inv_col_i
            let col: Vec<BigRational> = (0..n).map(|r| u_inv[r][i].clone()).collect();
            let mut q = BigRational::zero();
            for r in 0..n {
                for c in 0..n {
                    q += &col[r] * &g_inv[r][c] * &col[c];
                }
            }
            // Reduce modulo 2Z into [0, 2).
            let shift = (&q / &two).floor() * &two;
            orders.push(order);
            q_values.push(q - shift);
        }
        Ok(DiscriminantGroup {
            cyclic_orders: orders,
            q_values,
        })
    }

    /// Block-diagonal sum with concatenated labels.
    pub fn orthogonal_sum(&self, other: &GramLattice) -> GramLattice {
        let n = self.rank();
        let m = other.rank();
        let mut gram = vec![vec![BigInt::zero(); n + m]; n + m];
        for i in 0..n {
            for j in 0..n {
                gram[i][j] = self.entry(i, j).clone();
            }
        }
        for i in 0..m {
            for j in 0..m {
                gram[n + i][n + j] = other.entry(i, j).clone();
            }
        }
        let mut labels = self.inner.labels.clone();
        labels.extend(other.inner.labels.iter().cloned());
        GramLattice::new(gram, labels).expect("sum of valid lattices is valid")
    }

    pub fn pair_coords(&self, v: &[BigInt], w: &[BigInt]) -> Result<BigInt> {
        if v.len() != self.rank() {
            return Err(Error::LengthMismatch {
                rank: self.rank(),
                found: v.len(),
            });
        }
        if w.len() != self.rank() {
            return Err(Error::LengthMismatch {
                rank: self.rank(),
                found: w.len(),
            });
        }
        let mut acc = BigInt::zero();
        for i in 0..self.rank() {
            if v[i].is_zero() {
                continue;
            }
            for j in 0..self.rank() {
                if !w[j].is_zero() {
                    acc += &v[i] * self.entry(i, j) * &w[j];
                }
            }
        }
        Ok(acc)
    }

    pub fn vector(&self, coords: Vec<BigInt>) -> Result<LatticeVector> {
        if coords.len() != self.rank() {
            return Err(Error::LengthMismatch {
                rank: self.rank(),
                found: coords.len(),
            });
        }
        Ok(LatticeVector {
            host: self.clone(),
            coords,
        })
    }

    pub fn vector_i64(&self, coords: &[i64]) -> LatticeVector {
        self.vector(coords.iter().map(|&x| BigInt::from(x)).collect())
            .expect("coordinate length mismatch")
    }
}

/// A coordinate vector tied to its host lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeVector {
    host: GramLattice,
    coords: Vec<BigInt>,
}

impl LatticeVector {
    pub fn host(&self) -> &GramLattice {
        &self.host
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn content(&self) -> BigInt {
        self.coords.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
    }
}

/// Beauville/intersection pairing v^T . gram . w.
pub fn pair(v: &LatticeVector, w: &LatticeVector) -> Result<BigInt> {
    if v.host != w.host {
        return Err(Error::HostMismatch);
    }
    v.host.pair_coords(&v.coords, &w.coords)
}

pub fn square(v: &LatticeVector) -> BigInt {
    v.host
        .pair_coords(&v.coords, &v.coords)
        .expect("vector length is validated at construction")
}

/// A nonzero vector is primitive when its coordinate gcd is 1.
pub fn is_primitive(v: &LatticeVector) -> Result<bool> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.content().is_one())
}

/// Per-basis-vector divisibility of an embedded sublattice: entry d_i is
/// the generator of the ideal of pairings of b_i against the ambient
/// lattice. Assumes the ambient pairing image is the diagonal sublattice
/// spanned by the d_i b_i^dual, so div(sum x_i b_i) = gcd_i(d_i x_i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityProfile {
    divisors: Vec<BigInt>,
}

impl DivisibilityProfile {
    /// Validates the necessary consistency d_i | (b_i, b_j) for all j.
    pub fn new(divisors: Vec<BigInt>, host: &GramLattice) -> Result<Self> {
        if divisors.len() != host.rank() {
            return Err(Error::ProfileLength {
                rank: host.rank(),
                found: divisors.len(),
            });
        }
        for (i, d) in divisors.iter().enumerate() {
            if !d.is_positive() {
                return Err(Error::Invalid(format!(
                    "profile entry d_{} must be positive, got {}",
                    i + 1,
                    d
                )));
            }
            for j in 0..host.rank() {
                if !(host.entry(i, j) % d).is_zero() {
                    return Err(Error::ProfileInconsistent {
                        index: i,
                        col: j,
                        divisor: d.clone(),
                        entry: host.entry(i, j).clone(),
                    });
                }
            }
        }
        Ok(DivisibilityProfile { divisors })
    }

    pub fn from_i64(divisors: &[i64], host: &GramLattice) -> Self {
        DivisibilityProfile::new(divisors.iter().map(|&d| BigInt::from(d)).collect(), host)
            .expect("invalid literal profile")
    }

    pub fn divisors(&self) -> &[BigInt] {
        &self.divisors
    }

    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.divisors.is_empty()
    }
}

/// Generator of the ideal (v, ambient lattice) under the diagonal profile
/// rule: gcd_i(d_i x_i). Rejects the zero vector.
pub fn divisibility(v: &LatticeVector, profile: &DivisibilityProfile) -> Result<BigInt> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    if profile.len() != v.host.rank() {
        return Err(Error::ProfileLength {
            rank: v.host.rank(),
            found: profile.len(),
        });
    }
    Ok(v.coords
        .iter()
        .zip(&profile.divisors)
        .fold(BigInt::zero(), |acc, (x, d)| acc.gcd(&(x * d))))
}

/// Invariant factors of L*/L and the discriminant quadratic form on each
/// cyclic generator, as exact rationals in [0, 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantGroup {
    pub cyclic_orders: Vec<BigInt>,
    pub q_values: Vec<BigRational>,
}

impl DiscriminantGroup {
    pub fn order(&self) -> BigInt {
        self.cyclic_orders.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.cyclic_orders.is_empty()
    }
}

impl fmt::Display for DiscriminantGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> = self
            .cyclic_orders
            .iter()
            .map(|d| format!("Z/{}", d))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Named standard lattices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardLattice {
    /// Hyperbolic plane [[0,1],[1,0]].
    U,
    /// Even unimodular positive-definite rank 8 lattice, presented by the
    /// Cartan matrix of the E8 root system.
    E8,
    /// Negated E8.
    MinusE8,
    /// Rank-1 lattice <k> for nonzero even k.
    Rank1(BigInt),
}

pub fn standard_lattice(name: StandardLattice) -> Result<GramLattice> {
    match name {
        StandardLattice::U => Ok(GramLattice::from_rows(&[&[0, 1], &[1, 0]], &["u", "v"])),
        StandardLattice::E8 => Ok(e8(false)),
        StandardLattice::MinusE8 => Ok(e8(true)),
        StandardLattice::Rank1(k) => {
            if k.is_zero() || k.is_odd() {
                return Err(Error::InvalidRankOne(k));
            }
            let label = format!("<{}>", k);
            GramLattice::new(vec![vec![k]], vec![label])
        }
    }
}

fn e8(negate: bool) -> GramLattice {
    // Dynkin diagram of E8 in Bourbaki numbering:
    // 1-3-4-5-6-7-8 with node 2 attached to node 4.
    let edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
    let mut gram = vec![vec![BigInt::zero(); 8]; 8];
    for (i, row) in gram.iter_mut().enumerate() {
        row[i] = BigInt::from(2);
    }
    for &(i, j) in &edges {
        gram[i][j] = BigInt::from(-1);
        gram[j][i] = BigInt::from(-1);
    }
    if negate {
        for row in gram.iter_mut() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
    }
    let prefix = if negate { "-e8." } else { "e8." };
    let labels = (1..=8).map(|i| format!("{prefix}{i}")).collect();
    GramLattice::new(gram, labels).expect("e8 gram is valid")
}

/// JSON schema for lattice files:
/// `{"rank": n, "gram": [[..]], "labels": [..], "even": bool, "profile": [..]}`
/// with `labels`, `even` and `profile` optional.
#[derive(Debug, Deserialize)]
pub struct LatticeFile {
    pub rank: usize,
    pub gram: Vec<Vec<i64>>,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    #[serde(default)]
    pub even: Option<bool>,
    #[serde(default)]
    pub profile: Option<Vec<i64>>,
}

pub fn parse_lattice_json(text: &str) -> Result<(GramLattice, Option<DivisibilityProfile>)> {
    let file: LatticeFile = serde_json::from_str(text).map_err(|e| {
        Error::LatticeFile(format!("{e} (line {}, column {})", e.line(), e.column()))
    })?;
    if file.gram.len() != file.rank {
        return Err(Error::LatticeFile(format!(
            "declared rank {} but gram has {} rows",
            file.rank,
            file.gram.len()
        )));
    }
    let gram: mat::IMat = file
        .gram
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let labels = file
        .labels
        .unwrap_or_else(|| (1..=file.rank).map(|i| format!("b{i}")).collect());
    let lattice = GramLattice::new(gram, labels)?;
    if file.even == Some(true) {
        for i in 0..lattice.rank() {
            if lattice.entry(i, i).is_odd() {
                return Err(Error::OddDiagonal {
                    index: i,
                    value: lattice.entry(i, i).clone(),
                });
            }
        }
    }
    let profile = match file.profile {
        Some(divs) => Some(DivisibilityProfile::new(
            divs.into_iter().map(BigInt::from).collect(),
            &lattice,
        )?),
        None => None,
    };
    Ok((lattice, profile))
}
