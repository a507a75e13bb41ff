//! Structures specific to fourfolds of K3^[2] type: the rank-23 second
//! cohomology lattice, orbit invariants of primitive vectors, curve-class
//! duality, Riemann-Roch, and Picard lattices of Hilbert squares built
//! from K3 data.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::qlattice::{
    divisibility, is_primitive, pair, square, standard_lattice, DivisibilityProfile, GramLattice,
    LatticeVector, StandardLattice,
};

/// The second cohomology lattice U^3 + (-E8)^2 + <-2> with its
/// distinguished exceptional class e.
#[derive(Clone, Debug)]
pub struct BeauvilleLattice {
    lattice: GramLattice,
    e_index: usize,
}

impl BeauvilleLattice {
    pub fn lattice(&self) -> &GramLattice {
        &self.lattice
    }

    pub fn e_index(&self) -> usize {
        self.e_index
    }

    pub fn e_vector(&self) -> LatticeVector {
        let mut coords = vec![BigInt::zero(); self.lattice.rank()];
        coords[self.e_index] = BigInt::one();
        self.lattice.vector(coords).expect("rank matches")
    }

    /// Divisibility profile of the full lattice: 1 on the unimodular part
    /// and 2 on e.
    pub fn profile(&self) -> DivisibilityProfile {
        let mut divs = vec![BigInt::one(); self.lattice.rank()];
        divs[self.e_index] = BigInt::from(2);
        DivisibilityProfile::new(divs, &self.lattice).expect("e row is divisible by 2")
    }
}

pub fn build_beauville_lattice() -> BeauvilleLattice {
    let u = standard_lattice(StandardLattice::U).expect("U");
    let me8 = standard_lattice(StandardLattice::MinusE8).expect("-E8");
    let m2 = standard_lattice(StandardLattice::Rank1(BigInt::from(-2))).expect("<-2>");
    let mut acc = u.clone();
    acc = acc.orthogonal_sum(&u);
    acc = acc.orthogonal_sum(&u);
    acc = acc.orthogonal_sum(&me8);
    acc = acc.orthogonal_sum(&me8);
    acc = acc.orthogonal_sum(&m2);
    // Relabel for readable output.
    let mut labels = Vec::with_capacity(23);
    for i in 1..=3 {
        labels.push(format!("u{i}a"));
        labels.push(format!("u{i}b"));
    }
    for block in ["x", "y"] {
        for i in 1..=8 {
            labels.push(format!("e8{block}{i}"));
        }
    }
    labels.push("e".to_string());
    let lattice = GramLattice::new(acc.gram().clone(), labels).expect("valid");
    BeauvilleLattice {
        lattice,
        e_index: 22,
    }
}

/// Complete orbit invariant (square, divisibility) of a primitive vector
/// under the isometry group: two primitive vectors are equivalent exactly
/// when these agree.
pub fn orbit_invariants(
    v: &LatticeVector,
    profile: &DivisibilityProfile,
) -> Result<(BigInt, BigInt)> {
    if !is_primitive(v)? {
        return Err(Error::NotPrimitive {
            content: v.content(),
        });
    }
    Ok((square(v), divisibility(v, profile)?))
}

pub fn same_orbit(
    a: &LatticeVector,
    b: &LatticeVector,
    profile: &DivisibilityProfile,
) -> Result<bool> {
    Ok(orbit_invariants(a, profile)? == orbit_invariants(b, profile)?)
}

/// Euler characteristic of a line bundle with the given square on a
/// fourfold of K3^[2] type: (q + 4)(q + 6)/8, integral for even q.
pub fn riemann_roch(q: &BigInt) -> Result<BigInt> {
    if q.is_odd() {
        return Err(Error::OddSquare(q.clone()));
    }
    let num = (q + BigInt::from(4)) * (q + BigInt::from(6));
    let (chi, rem) = num.div_rem(&BigInt::from(8));
    debug_assert!(rem.is_zero());
    Ok(chi)
}

/// Pairing of c2 of the tangent bundle against v.v: 30 (v, v).
pub fn c2_pairing(q: &BigInt) -> BigInt {
    BigInt::from(30) * q
}

/// A curve class dual to a divisor class rho: d R v = (v, rho) where d is
/// the divisibility of rho.
#[derive(Clone, Debug)]
pub struct CurveClass {
    pub rho: LatticeVector,
    pub div: BigInt,
    /// R . g
    pub degree: BigRational,
    /// (R, R) = (rho, rho) / div^2
    pub r_square: BigRational,
}

pub fn curve_class_from_divisor(
    rho: &LatticeVector,
    profile: &DivisibilityProfile,
    g: &LatticeVector,
) -> Result<CurveClass> {
    if !is_primitive(rho)? {
        return Err(Error::NotPrimitive {
            content: rho.content(),
        });
    }
    let deg_pairing = pair(rho, g)?;
    if !deg_pairing.is_positive() {
        return Err(Error::OutsideHalfspace {
            pairing: deg_pairing,
        });
    }
    let div = divisibility(rho, profile)?;
    if !div.is_one() && div != BigInt::from(2) {
        return Err(Error::DivisibilityOutOfRange { div });
    }
    let degree = BigRational::new(deg_pairing, div.clone());
    let r_square = BigRational::new(square(rho), &div * &div);
    Ok(CurveClass {
        rho: rho.clone(),
        div,
        degree,
        r_square,
    })
}

/// Picard lattice of the length-n Hilbert scheme of a K3 surface with
/// the given Picard form: k3 + <-2(n-1)>, with divisibility 1 on the K3
/// classes and 2 on the exceptional class.
pub fn hilbert_square_picard(
    k3_gram: &GramLattice,
    n: u64,
) -> Result<(GramLattice, DivisibilityProfile)> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { min: 2, got: n });
    }
    if !k3_gram.is_even() {
        return Err(Error::InvalidK3Gram);
    }
    let sig = k3_gram.signature().map_err(|_| Error::InvalidK3Gram)?;
    if sig != (1, k3_gram.rank() - 1) {
        return Err(Error::InvalidK3Gram);
    }
    let e_square = BigInt::from(-2) * (BigInt::from(n) - BigInt::one());
    let e = standard_lattice(StandardLattice::Rank1(e_square)).expect("even nonzero");
    let e = GramLattice::new(e.gram().clone(), vec!["e".to_string()]).expect("valid");
    let sum = k3_gram.orthogonal_sum(&e);
    let mut divs = vec![BigInt::one(); k3_gram.rank()];
    divs.push(BigInt::from(2));
    let profile = DivisibilityProfile::new(divs, &sum)?;
    Ok((sum, profile))
}

/// Rank-2 lattices of distinguished class pairs on Hilbert squares of
/// K3 double covers of the minimal rational surfaces F0, F1 and F4,
/// derived from the K3 Picard data rather than hard-coded.
#[derive(Clone, Debug)]
pub struct RuledSurfacePreset {
    pub name: &'static str,
    pub lattice: GramLattice,
    pub profile: DivisibilityProfile,
}

pub fn section6_presets() -> Vec<RuledSurfacePreset> {
    let cases: [(&'static str, [[i64; 2]; 2], [&str; 2], [[i64; 3]; 2]); 3] = [
        // Double cover of F0 branched in a (4,4)-curve: two elliptic
        // fibrations E1, E2; rho_i = E_i - e.
        (
            "sigma-F0",
            [[0, 2], [2, 0]],
            ["rho1", "rho2"],
            [[1, 0, -1], [0, 1, -1]],
        ),
        // Double cover of F1: elliptic fibration E and a (-2)-curve C;
        // rho_0 = E - e, rho_{-1} = 2C - e.
        (
            "sigma-F1",
            [[0, 2], [2, -2]],
            ["rho0", "rho-1"],
            [[1, 0, -1], [0, 2, -1]],
        ),
        // Double cover of F4: intersection E.C = 1; rho_0 = E - e,
        // rho_{-4} = 2C + e.
        (
            "sigma-F4",
            [[0, 1], [1, -2]],
            ["rho0", "rho-4"],
            [[1, 0, -1], [0, 2, 1]],
        ),
    ];
    cases
        .into_iter()
        .map(|(name, k3, labels, rho_coords)| {
            let k3 = GramLattice::from_rows(&[&k3[0], &k3[1]], &["a", "b"]);
            let (hilb, profile) = hilbert_square_picard(&k3, 2).expect("valid K3 gram");
            let rho: Vec<LatticeVector> = rho_coords.iter().map(|c| hilb.vector_i64(c)).collect();
            let gram: Vec<Vec<BigInt>> = rho
                .iter()
                .map(|a| rho.iter().map(|b| pair(a, b).expect("same host")).collect())
                .collect();
            let lattice = GramLattice::new(gram, labels.iter().map(|s| s.to_string()).collect())
                .expect("derived gram is symmetric");
            let divs: Vec<BigInt> = rho
                .iter()
                .map(|v| divisibility(v, &profile).expect("nonzero"))
                .collect();
            let profile2 =
                DivisibilityProfile::new(divs, &lattice).expect("derived profile is consistent");
            RuledSurfacePreset {
                name,
                lattice,
                profile: profile2,
            }
        })
        .collect()
}
