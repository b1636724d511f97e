use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use proptest::prelude::*;

use toric_core::layers::{self, PoincareRoute};
use toric_core::rootsys::{irreducible_types, type_invariants};
use toric_core::{oracle, subsys, verify};
use toric_core::{Capabilities, ProductType, RootSystem};

fn rs(s: &str) -> RootSystem {
    RootSystem::build(&s.parse::<ProductType>().unwrap())
}

#[test]
fn vertex_and_orbit_sums_agree_through_e8() {
    for t in irreducible_types(8) {
        let o = layers::point_orbits(t);
        assert_eq!(o.total, o.total_by_aut_orbits(), "{t}");
        assert_eq!(o.records.len(), t.rank() + 1);
        for r in &o.records {
            assert_eq!(r.stabilizer_order.clone() * &r.orbit_size, t_weyl(t));
        }
    }
}

fn t_weyl(t: toric_core::TypeSymbol) -> BigUint {
    ProductType::new(vec![t]).weyl_order()
}

#[test]
fn e_series_point_counts() {
    // mark-1 vertices give singletons, mark 2 gives A5xA1, mark 3 gives A2^3
    for (t, n) in [("E6", 3 + 3 * 36 + 240), ("G2", 6)] {
        let o = layers::point_orbits(t.parse().unwrap());
        let sizes: Vec<String> = o.records.iter().map(|r| r.orbit_size.to_string()).collect();
        assert_eq!(o.total, BigUint::from(n as u64), "{t}: {sizes:?}");
    }
}

#[test]
fn poincare_shape() {
    let caps = Capabilities::default();
    for t in ["A3", "B3", "C3", "G2", "F4", "A2xA1", "B2xG2"] {
        let r = rs(t);
        let p = layers::poincare(&r, PoincareRoute::ClosedForm, &caps).unwrap();
        assert_eq!(p.coeff(0), BigInt::one(), "{t}");
        assert_eq!(p.degree(), Some(r.rank()), "{t}");
        let sums = layers::closed_form_sums(&r, &caps).unwrap();
        let lead: BigUint = sums.iter().sum();
        assert_eq!(p.coeff(r.rank()), BigInt::from(lead), "{t}");
        assert!(p.coeffs().iter().all(|c| *c > BigInt::zero()));
    }
}

#[test]
fn products_are_multiplicative() {
    let caps = Capabilities::default();
    let pairs = [("A1", "A1"), ("A2", "B2"), ("G2", "A1"), ("A1", "C3")];
    for (a, b) in pairs {
        let (ra, rb) = (rs(a), rs(b));
        let rab = rs(&format!("{a}x{b}"));
        assert_eq!(
            layers::count_points(rab.product_type()),
            layers::count_points(ra.product_type()) * layers::count_points(rb.product_type())
        );
        let pa = layers::poincare(&ra, PoincareRoute::ClosedForm, &caps).unwrap();
        let pb = layers::poincare(&rb, PoincareRoute::ClosedForm, &caps).unwrap();
        let pab = layers::poincare(&rab, PoincareRoute::LayerSum, &caps).unwrap();
        assert_eq!(pab, &pa * &pb, "{a}x{b}");
    }
}

#[test]
fn n_theta_divides_center_order() {
    let caps = Capabilities::default();
    for t in ["A3", "B3", "C4", "D4", "A2xA2"] {
        let r = rs(t);
        for fam in subsys::enumerate_all(&r, &caps).unwrap() {
            for s in &fam.members {
                let n = layers::n_theta(&r, s).unwrap();
                let z = type_invariants(&s.ty).center_order;
                assert!((z % n).is_zero(), "{t} {}", s.ty);
            }
        }
    }
}

#[test]
fn census_counts_are_integral_and_consistent() {
    let caps = Capabilities::default();
    for t in ["B4", "C4", "D4", "A4", "A1xG2"] {
        let r = rs(t);
        let c = layers::layer_census(&r, &caps).unwrap();
        let dims: Vec<usize> = c.records.iter().map(|x| x.dim).collect();
        assert!(dims.windows(2).all(|w| w[0] <= w[1]));
        for rec in &c.records {
            let per: BigUint = rec.phi_c_types.iter().map(|(_, n)| n.clone()).sum();
            assert_eq!(per, rec.layer_count_per_theta);
            assert!(rec.phi_c_types.iter().any(|(ty, _)| *ty == rec.tangent_type));
        }
        assert_eq!(c.layer_count(0), layers::count_points(r.product_type()));
        assert_eq!(c.layer_count(r.rank()), BigUint::one());
    }
}

#[test]
fn verify_suite_on_products() {
    for t in ["A1xA2", "A1xA1xA1", "B2xA1"] {
        let report = verify::verify(&rs(t), &Capabilities::default());
        assert!(report.passed(), "{t}: {:?}", report.failures().collect::<Vec<_>>());
    }
}

#[test]
fn wz_stabilizers_in_d4() {
    // Z(D4) has order 4 and fixes the central vertex of the affine diagram
    let r = rs("D4");
    let pts = oracle::brute_points(&r, &Capabilities::default()).unwrap();
    for p in &pts.points {
        let central = p.ty.to_string() == "A1xA1xA1xA1";
        let factor = if central { 4u32 } else { 1 };
        assert_eq!(p.wz_stabilizer_order, p.stabilizer_order.clone() * factor);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn degree_identity_for_random_types(i in 0usize..31) {
        let types = irreducible_types(8);
        prop_assert!(layers::verify_degree_identity(types[i]).holds());
    }

    #[test]
    fn points_of_random_products(a in 0usize..12, b in 0usize..12) {
        let types = irreducible_types(4);
        let (ta, tb) = (types[a], types[b]);
        let prod = ProductType::new(vec![ta, tb]);
        prop_assert_eq!(
            layers::count_points(&prod),
            layers::point_orbits(ta).total * layers::point_orbits(tb).total
        );
    }
}
