//! Property suites: bilinearity and symmetry of the pairing, signature
//! invariance under basis change, reflection isometry, enumeration
//! against a brute-force oracle, and divisibility consistency.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use k3cone_core::beauville::build_beauville_lattice;
use k3cone_core::cone::{self, enumerate_square, nodal_classes, weyl_reflect, Rank2Config};
use k3cone_core::preset::{hilb_config, resolve, Preset};
use k3cone_core::{
    divisibility, pair, square, standard_lattice, DivisibilityProfile, GramLattice, IVec2,
    StandardLattice,
};

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn symmetric_gram(n: usize) -> impl Strategy<Value = GramLattice> {
    proptest::collection::vec(-9i64..=9, n * n).prop_map(move |vals| {
        let mut gram = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in i..n {
                let v = big(vals[i * n + j]);
                gram[i][j] = v.clone();
                gram[j][i] = v;
            }
        }
        let labels = (0..n).map(|i| format!("b{i}")).collect();
        GramLattice::new(gram, labels).unwrap()
    })
}

fn coords(n: usize) -> impl Strategy<Value = Vec<BigInt>> {
    proptest::collection::vec(-20i64..=20, n).prop_map(|v| v.into_iter().map(big).collect())
}

/// Random unimodular matrix as a product of shears and signed swaps.
fn unimodular(n: usize) -> impl Strategy<Value = Vec<Vec<BigInt>>> {
    proptest::collection::vec((0..n, 0..n, -2i64..=2, proptest::bool::ANY), 0..12).prop_map(
        move |ops| {
            let mut m: Vec<Vec<BigInt>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            if i == j {
                                BigInt::one()
                            } else {
                                BigInt::zero()
                            }
                        })
                        .collect()
                })
                .collect();
            for (i, j, k, swap) in ops {
                if i == j {
                    continue;
                }
                if swap {
                    m.swap(i, j);
                    for x in m[i].iter_mut() {
                        *x = -x.clone();
                    }
                } else {
                    for col in 0..n {
                        let add = &m[j][col] * big(k);
                        m[i][col] += add;
                    }
                }
            }
            m
        },
    )
}

fn conjugate(gram: &GramLattice, m: &[Vec<BigInt>]) -> GramLattice {
    let n = gram.rank();
    // m^T * G * m
    let mut gm = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            for t in 0..n {
                let add = gram.entry(i, t) * &m[t][j];
                gm[i][j] += add;
            }
        }
    }
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            for t in 0..n {
                let add = &m[t][i] * &gm[t][j];
                out[i][j] += add;
            }
        }
    }
    let labels = (0..n).map(|i| format!("c{i}")).collect();
    GramLattice::new(out, labels).unwrap()
}

proptest! {
    #[test]
    fn pairing_is_symmetric_and_bilinear(
        lat in symmetric_gram(3),
        v in coords(3),
        u in coords(3),
        w in coords(3),
        a in -7i64..=7,
        b in -7i64..=7,
    ) {
        let vv = lat.vector(v.clone()).unwrap();
        let uu = lat.vector(u.clone()).unwrap();
        let ww = lat.vector(w.clone()).unwrap();
        prop_assert_eq!(pair(&vv, &ww).unwrap(), pair(&ww, &vv).unwrap());
        let combo: Vec<BigInt> = v
            .iter()
            .zip(&u)
            .map(|(x, y)| big(a) * x + big(b) * y)
            .collect();
        let combo = lat.vector(combo).unwrap();
        prop_assert_eq!(
            pair(&combo, &ww).unwrap(),
            big(a) * pair(&vv, &ww).unwrap() + big(b) * pair(&uu, &ww).unwrap()
        );
    }

    #[test]
    fn beauville_squares_are_even(v in coords(23)) {
        let b = build_beauville_lattice();
        let vec = b.lattice().vector(v).unwrap();
        prop_assert!((square(&vec) % big(2)).is_zero());
    }

    #[test]
    fn signature_is_basis_invariant(lat in symmetric_gram(4), m in unimodular(4)) {
        prop_assume!(!lat.is_degenerate());
        let conj = conjugate(&lat, &m);
        prop_assert_eq!(lat.signature().unwrap(), conj.signature().unwrap());
        prop_assert_eq!(lat.determinant(), conj.determinant());
    }

    #[test]
    fn divisibility_divides_every_pairing(
        vx in -30i64..=30, vy in -30i64..=30,
        wx in -10i64..=10, wy in -10i64..=10,
    ) {
        prop_assume!(vx != 0 || vy != 0);
        for name in ["k3-hilb-2", "k3-hilb-8", "cubic-8", "cubic-26"] {
            let preset = resolve(name).unwrap();
            let lat = preset.lattice().clone();
            let profile = preset.profile().unwrap().clone();
            let v = lat.vector_i64(&[vx, vy]);
            let w = lat.vector_i64(&[wx, wy]);
            let d = divisibility(&v, &profile).unwrap();
            prop_assert!((pair(&v, &w).unwrap() % d).is_zero());
        }
    }

    #[test]
    fn reflections_preserve_the_form(
        vx in -20i64..=20, vy in -20i64..=20,
        wx in -20i64..=20, wy in -20i64..=20,
    ) {
        // Reflect in the exceptional (-2)-class of a Hilbert square.
        let cfg = hilb_config(2).unwrap();
        let lat = cfg.lattice();
        let rho = lat.vector_i64(&[0, 1]);
        let v = lat.vector_i64(&[vx, vy]);
        let w = lat.vector_i64(&[wx, wy]);
        let sv = weyl_reflect(&v, &rho).unwrap();
        let sw = weyl_reflect(&w, &rho).unwrap();
        prop_assert_eq!(square(&sv), square(&v));
        prop_assert_eq!(pair(&sv, &sw).unwrap(), pair(&v, &w).unwrap());
        // Involution.
        prop_assert_eq!(weyl_reflect(&sv, &rho).unwrap(), v);
    }

    #[test]
    fn enumeration_matches_oracle_on_random_hyperbolic_forms(
        a in 1i64..=5,
        b in -4i64..=4,
        c in -5i64..=-1,
        target in -12i64..=12,
    ) {
        let gram = [[2 * a, b], [b, 2 * c]];
        prop_assume!(b * b - 4 * a * c > 0);
        let lat = GramLattice::from_rows(&[&gram[0], &gram[1]], &["x", "y"]);
        let profile = DivisibilityProfile::from_i64(&[1, 1], &lat);
        // (1, 0) has square 2a > 0.
        let cfg = Rank2Config::new(lat, profile, IVec2::from_i64(1, 0)).unwrap();
        let bound = 12i64;
        let fast = enumerate_square(&cfg, &big(target), bound as u64);
        let mut slow = Vec::new();
        let ell = cfg.halfspace();
        for x in -bound..=bound {
            for y in -bound..=bound {
                let v = IVec2::from_i64(x, y);
                if v.is_zero() || !v.is_primitive() {
                    continue;
                }
                if cfg.form_eval(&v) == big(target) && ell.dot(&v).is_positive() {
                    slow.push(v);
                }
            }
        }
        slow.sort_by(k3cone_core::ray::angular_cmp);
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn hilbert_square_picard_shape(a in 1i64..=9, b in 1i64..=9, c in 1i64..=9, n in 2u64..=6) {
        // Random rank-3 K3 Picard lattices of signature (1, 2).
        let k3 = GramLattice::from_rows(
            &[&[2 * a, 0, 0], &[0, -2 * b, 0], &[0, 0, -2 * c]],
            &["h", "c1", "c2"],
        );
        let (lat, profile) = k3cone_core::beauville::hilbert_square_picard(&k3, n).unwrap();
        prop_assert!(lat.is_even());
        prop_assert_eq!(lat.signature().unwrap(), (1, k3.rank()));
        let mut want = vec![BigInt::one(); k3.rank()];
        want.push(big(2));
        prop_assert_eq!(profile.divisors(), &want[..]);
    }

    #[test]
    fn ruling_round_trip(nx in -40i64..=40, ny in -40i64..=40) {
        prop_assume!(nx != 0 || ny != 0);
        let preset = resolve("cubic-26").unwrap();
        let cfg = preset.rank2_config().unwrap();
        // Make a divisibility-2 class: both pairings even means
        // gcd(2x, y) = 2, so take y even.
        let rho = IVec2::from_i64(nx, 2 * ny);
        let (n, t) = k3cone_core::cubic::ruling_pairings(cfg, &rho).unwrap();
        let back = k3cone_core::cubic::ruling_class(cfg, &n, &t).unwrap();
        prop_assert_eq!(back, rho);
    }
}

#[test]
fn discriminant_group_order_matches_determinant() {
    let beauville = build_beauville_lattice();
    let cases: Vec<GramLattice> = vec![
        standard_lattice(StandardLattice::U).unwrap(),
        standard_lattice(StandardLattice::E8).unwrap(),
        standard_lattice(StandardLattice::Rank1(big(8))).unwrap(),
        standard_lattice(StandardLattice::Rank1(big(-6))).unwrap(),
        beauville.lattice().clone(),
    ];
    for lat in cases {
        let d = lat.discriminant_group().unwrap();
        assert_eq!(d.order(), lat.determinant().abs());
    }
}

#[test]
fn nodal_sets_are_bound_stable_on_presets() {
    for name in [
        "k3-hilb-2",
        "k3-hilb-4",
        "k3-hilb-8",
        "cubic-8",
        "cubic-12",
        "cubic-14",
        "cubic-20",
        "cubic-26",
    ] {
        let preset = resolve(name).unwrap();
        let cfg = preset.rank2_config().unwrap();
        let at_200 = nodal_classes(cfg, 200).unwrap();
        let at_400 = nodal_classes(cfg, 400).unwrap();
        assert_eq!(at_200, at_400, "{name}");
    }
}

#[test]
fn containment_chain_on_presets() {
    for name in [
        "k3-hilb-2",
        "k3-hilb-4",
        "k3-hilb-8",
        "cubic-8",
        "cubic-14",
        "cubic-26",
    ] {
        let preset = resolve(name).unwrap();
        let cfg = preset.rank2_config().unwrap();
        let e_set = cone::e_classes(cfg, 200);
        let nodal = nodal_classes(cfg, 200).unwrap();
        for n in &nodal {
            assert!(
                e_set.iter().any(|c| c.vector == n.vector),
                "{name}: nodal class not in E"
            );
        }
        let domain = cone::fundamental_domain(cfg, 200).unwrap();
        let positive = cone::positive_cone(cfg);
        // Domain boundary rays lie in the closed positive cone.
        for ray in [&domain.sector.lo, &domain.sector.hi] {
            assert!(
                positive.ray_in_interior(ray)
                    || ray.same_ray(&positive.lo)
                    || ray.same_ray(&positive.hi),
                "{name}: domain exceeds positive cone"
            );
        }
        let chambers = cone::chambers(cfg, 200).unwrap();
        let mut flagged = 0;
        for ch in &chambers {
            for ray in [&ch.sector.lo, &ch.sector.hi] {
                assert!(
                    domain.sector.ray_in_interior(ray)
                        || ray.same_ray(&domain.sector.lo)
                        || ray.same_ray(&domain.sector.hi),
                    "{name}: chamber exceeds domain"
                );
            }
            if ch.contains_g {
                flagged += 1;
            }
        }
        assert_eq!(flagged, 1, "{name}: exactly one chamber holds g");
        // The ample cone is the interior of the g-chamber.
        let ample = cone::ample_cone(cfg, 200).unwrap();
        let g_chamber = chambers.iter().find(|c| c.contains_g).unwrap();
        assert!(ample.lo.same_ray(&g_chamber.sector.lo), "{name}");
        assert!(ample.hi.same_ray(&g_chamber.sector.hi), "{name}");
    }
}

#[test]
fn curve_square_taxonomy() {
    use num_rational::BigRational;
    // (square, div) -> (R, R) over the three admitted kinds.
    let cases = [
        ((-2i64, 2i64), BigRational::new(big(-1), big(2))),
        ((-2, 1), BigRational::from(big(-2))),
        ((-10, 2), BigRational::new(big(-5), big(2))),
    ];
    for ((sq, dv), expect) in &cases {
        let r = BigRational::new(big(*sq), big(dv * dv));
        assert_eq!(&r, expect);
    }
    // Pairs outside the admitted kinds either give a curve square outside
    // the set or fail the E membership constraints on (square, div).
    for (sq, dv) in [(-10i64, 1i64), (-4, 1), (-8, 2), (0, 1), (2, 1), (-12, 2)] {
        let in_e = matches!((sq, dv), (-2, 1) | (-2, 2) | (-10, 2));
        assert!(!in_e, "({sq}, {dv})");
        if sq == -8 && dv == 2 {
            // Same curve square as the (-2, 1) kind, but not an E-class.
            let r = BigRational::new(big(sq), big(dv * dv));
            assert_eq!(r, BigRational::from(big(-2)));
        }
    }
}

#[test]
fn sigma_presets_are_lattice_only() {
    for name in ["sigma-F0", "sigma-F1", "sigma-F4"] {
        let preset = resolve(name).unwrap();
        match preset {
            Preset::LatticeOnly { ref lattice, .. } => {
                assert_eq!(lattice.signature().unwrap(), (0, 2), "{name}");
            }
            _ => panic!("{name} should resolve to a lattice-only preset"),
        }
    }
}
