//! Formula-versus-oracle checks for one root system.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::config::Capabilities;
use crate::error::{Error, Result};
use crate::layers::{self, PoincareRoute};
use crate::oracle;
use crate::rootsys::{ProductType, RootSystem};
use crate::subsys;
use crate::weyl;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// Beyond a capability bound.
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub outcome: Outcome,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Pass => write!(f, "pass  {}", self.name),
            Outcome::Fail(why) => write!(f, "FAIL  {}: {why}", self.name),
            Outcome::Skipped(why) => write!(f, "skip  {}: {why}", self.name),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub ty: ProductType,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        !self.checks.iter().any(|c| matches!(c.outcome, Outcome::Fail(_)))
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| matches!(c.outcome, Outcome::Fail(_)))
    }
}

fn outcome(r: Result<Option<String>>) -> Outcome {
    match r {
        Ok(None) => Outcome::Pass,
        Ok(Some(why)) => Outcome::Fail(why),
        Err(Error::Capability { what, bound }) => Outcome::Skipped(format!("{what} (bound: {bound})")),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn mismatch<T: fmt::Debug + PartialEq>(what: &str, formula: T, oracle: T) -> Option<String> {
    (formula != oracle).then(|| format!("{what}: formula {formula:?}, oracle {oracle:?}"))
}

/// Per W-orbit of points: `(orbit size, Φ(t) type, |W(t)|, W × Z stabilizer)`.
type OrbitSignature = (BigUint, ProductType, BigUint, BigUint);

/// Orbit signatures predicted from the affine diagrams, multiplied out over
/// the irreducible factors.
pub fn predicted_orbit_signatures(ty: &ProductType) -> BTreeMap<OrbitSignature, usize> {
    let mut acc: BTreeMap<OrbitSignature, usize> = BTreeMap::from([(
        (BigUint::one(), ProductType::empty(), BigUint::one(), BigUint::one()),
        1,
    )]);
    for &t in ty.factors() {
        let recs = layers::point_orbits(t).records;
        let mut next = BTreeMap::new();
        for ((size, pty, st, wz), c) in &acc {
            for r in &recs {
                let key = (
                    size * &r.orbit_size,
                    pty.times(&r.point_type),
                    st * &r.stabilizer_order,
                    wz * &r.stabilizer_order * BigUint::from(r.center_stabilizer_order),
                );
                *next.entry(key).or_insert(0) += c;
            }
        }
        acc = next;
    }
    acc
}

/// Orbit signatures read off the brute-force point scan.
pub fn observed_orbit_signatures(pts: &oracle::BrutePoints) -> Result<BTreeMap<OrbitSignature, usize>> {
    let mut sizes = vec![0u64; pts.num_orbits];
    for p in &pts.points {
        sizes[p.orbit] += 1;
    }
    let mut out = BTreeMap::new();
    for (o, &size) in sizes.iter().enumerate() {
        let p = pts.points.iter().find(|p| p.orbit == o).expect("nonempty orbit");
        if pts
            .points
            .iter()
            .filter(|q| q.orbit == o)
            .any(|q| q.ty != p.ty || q.wz_stabilizer_order != p.wz_stabilizer_order)
        {
            return Err(Error::Inexact(format!("W-orbit {o} is not homogeneous")));
        }
        let key = (
            BigUint::from(size),
            p.ty.clone(),
            p.stabilizer_order.clone(),
            p.wz_stabilizer_order.clone(),
        );
        *out.entry(key).or_insert(0) += 1;
    }
    Ok(out)
}

/// The three Iwahori–Matsumoto properties of `W_Z`, or the first violation.
pub fn check_iwahori_matsumoto(rs: &RootSystem) -> Result<Option<String>> {
    let wz = weyl::center_subgroup(rs)?;
    let vertex_roots = rs.affine_vertex_roots()?;
    for z in &wz[1..] {
        if z.element.apply(vertex_roots[0]) != vertex_roots[z.vertex] {
            return Ok(Some(format!("z_{} does not send α_0 to α_{}", z.vertex, z.vertex)));
        }
    }
    let z = rs.center_order();
    if BigUint::from(wz.len()) != z {
        return Ok(Some(format!("|W_Z| = {} but |Z(Φ)| = {z}", wz.len())));
    }
    // closed under composition, hence a subgroup
    for a in &wz {
        for b in &wz {
            let ab = a.element.compose(&b.element);
            if !wz.iter().any(|c| c.element == ab) {
                return Ok(Some("W_Z is not closed under composition".into()));
            }
        }
    }
    let nv = vertex_roots.len();
    let mut wz_orbits: Vec<Vec<usize>> = Vec::new();
    for p in 0..nv {
        if wz_orbits.iter().any(|o| o.contains(&p)) {
            continue;
        }
        let mut o: Vec<usize> = wz.iter().map(|z| z.diagram_permutation[p]).collect();
        o.sort_unstable();
        o.dedup();
        wz_orbits.push(o);
    }
    let (_, aut_orbits) = rs.affine_diagram()?.automorphisms();
    Ok(mismatch("vertex orbits", aut_orbits, wz_orbits))
}

fn check_points(rs: &RootSystem) -> Result<Option<String>> {
    let total = layers::count_points(rs.product_type());
    for &t in rs.product_type().factors() {
        let o = layers::point_orbits(t);
        if o.total != o.total_by_aut_orbits() {
            return Ok(Some(format!("{t}: vertex sum {} vs Aut(Γ)-orbit sum {}", o.total, o.total_by_aut_orbits())));
        }
    }
    let by_orbits: BigUint = predicted_orbit_signatures(rs.product_type())
        .iter()
        .map(|((s, ..), c)| s * BigUint::from(*c))
        .sum();
    Ok(mismatch("point count", total, by_orbits))
}

fn check_degree_identity(rs: &RootSystem) -> Result<Option<String>> {
    for &t in rs.product_type().factors() {
        let id = layers::verify_degree_identity(t);
        if !id.holds() {
            return Ok(Some(format!("{t}: sum is {}", id.sum)));
        }
    }
    Ok(None)
}

fn check_brute_points(rs: &RootSystem, caps: &Capabilities) -> Result<Option<String>> {
    let pts = oracle::brute_points(rs, caps)?;
    let total = layers::count_points(rs.product_type());
    if let Some(m) = mismatch("point count", total, BigUint::from(pts.len())) {
        return Ok(Some(m));
    }
    if let Some(m) = mismatch(
        "Φ(t) types",
        layers::point_type_multiset(rs.product_type()),
        pts.type_multiset(),
    ) {
        return Ok(Some(m));
    }
    for p in &pts.points {
        if p.stabilizer_order != p.ty.weyl_order() {
            return Ok(Some(format!("W({}) has order {}, not |W({})|", p.point, p.stabilizer_order, p.ty)));
        }
    }
    if let Some(m) = mismatch("|Z(Φ)|", rs.center_order(), BigUint::from(pts.center.len())) {
        return Ok(Some(m));
    }
    Ok(mismatch(
        "orbit signatures",
        predicted_orbit_signatures(rs.product_type()),
        observed_orbit_signatures(&pts)?,
    ))
}

fn check_layers(rs: &RootSystem, caps: &Capabilities) -> Result<Option<String>> {
    let census = layers::layer_census(rs, caps)?;
    for d in 0..=rs.rank() {
        let direct = layers::count_layers(rs, d, caps)?;
        if let Some(m) = mismatch(&format!("|C_{d}|"), direct, census.layer_count(d)) {
            return Ok(Some(m));
        }
    }
    Ok(mismatch(
        "|C_0| against point count",
        layers::count_points(rs.product_type()),
        census.layer_count(0),
    ))
}

fn check_component_counts(rs: &RootSystem, caps: &Capabilities) -> Result<Option<String>> {
    for fam in subsys::enumerate_all(rs, caps)? {
        for theta in &fam.members {
            let formula = layers::layers_with_tangent(rs, theta)?;
            let direct = oracle::component_count(rs, theta)?;
            if let Some(m) = mismatch(&format!("components for Θ = {} {:?}", theta.ty, theta.roots), formula, direct) {
                return Ok(Some(m));
            }
        }
    }
    Ok(None)
}

fn check_poincare(rs: &RootSystem, caps: &Capabilities) -> Result<Option<String>> {
    let closed = layers::poincare(rs, PoincareRoute::ClosedForm, caps)?;
    let sum = layers::poincare(rs, PoincareRoute::LayerSum, caps)?;
    if let Some(m) = mismatch("Poincaré polynomial", closed.to_string(), sum.to_string()) {
        return Ok(Some(m));
    }
    if closed.coeff(0) != BigInt::one() {
        return Ok(Some(format!("constant term {}", closed.coeff(0))));
    }
    let e = layers::euler_characteristic(rs, caps)?;
    Ok(mismatch("P(-1)", e.closed_form, closed.eval(&BigInt::from(-1))))
}

fn check_equivariant_euler(rs: &RootSystem, caps: &Capabilities) -> Result<Option<String>> {
    let k = layers::equivariant_euler(rs, caps)?.k;
    let expected = if rs.rank() % 2 == 0 { 1 } else { -1 };
    Ok(mismatch("k", expected, k))
}

fn check_poset(rs: &RootSystem, caps: &Capabilities) -> Result<Option<String>> {
    let poset = oracle::build_poset(rs, caps)?;
    if !poset.is_partial_order() {
        return Ok(Some("inclusion is not a partial order".into()));
    }
    if !poset.is_graded_by_dimension() {
        return Ok(Some("inclusion does not decrease dimension".into()));
    }
    let counts: Vec<BigUint> = (0..=rs.rank())
        .map(|d| layers::count_layers(rs, d, caps))
        .collect::<Result<_>>()?;
    let sizes: Vec<BigUint> = poset.level_sizes().into_iter().map(BigUint::from).collect();
    if let Some(m) = mismatch("level sizes", counts, sizes) {
        return Ok(Some(m));
    }
    let pts = oracle::brute_points(rs, &Capabilities {
        brute_rank: caps.brute_rank.max(rs.rank()),
        ..caps.clone()
    })?;
    let bases: Vec<&oracle::TorusPoint> = poset.layers.iter().filter(|l| l.dim == 0).map(|l| &l.base_point).collect();
    let mut sorted = bases.clone();
    sorted.sort();
    let brute: Vec<&oracle::TorusPoint> = pts.points.iter().map(|p| &p.point).collect();
    Ok(mismatch("0-dimensional layers", brute, sorted))
}

/// Runs every check that the capabilities allow.
pub fn verify(rs: &RootSystem, caps: &Capabilities) -> Report {
    let irreducible = rs.is_irreducible();
    let mut checks = vec![
        Check {
            name: "point-count",
            outcome: outcome(check_points(rs)),
        },
        Check {
            name: "degree-identity",
            outcome: outcome(check_degree_identity(rs)),
        },
    ];
    checks.push(Check {
        name: "iwahori-matsumoto",
        outcome: if irreducible {
            outcome(check_iwahori_matsumoto(rs))
        } else {
            Outcome::Skipped("reducible root system".into())
        },
    });
    checks.push(Check {
        name: "brute-points",
        outcome: outcome(check_brute_points(rs, caps)),
    });
    checks.push(Check {
        name: "layer-counts",
        outcome: outcome(check_layers(rs, caps)),
    });
    checks.push(Check {
        name: "component-counts",
        outcome: outcome(check_component_counts(rs, caps)),
    });
    checks.push(Check {
        name: "poincare-routes",
        outcome: outcome(check_poincare(rs, caps)),
    });
    checks.push(Check {
        name: "equivariant-euler",
        outcome: outcome(check_equivariant_euler(rs, caps)),
    });
    checks.push(Check {
        name: "layer-poset",
        outcome: outcome(check_poset(rs, caps)),
    });
    Report {
        ty: rs.product_type().clone(),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(&s.parse::<ProductType>().unwrap())
    }

    #[test]
    fn small_types_pass() {
        for t in ["A1", "A2", "B2", "G2", "A1xA1", "A1xB2"] {
            let r = verify(&rs(t), &Capabilities::default());
            assert!(r.passed(), "{t}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn large_types_skip_rather_than_fail() {
        let r = verify(&rs("E8"), &Capabilities::default());
        assert!(r.passed());
        let skipped = r.checks.iter().filter(|c| matches!(c.outcome, Outcome::Skipped(_))).count();
        assert_eq!(skipped, 5);
    }

    #[test]
    fn wz_stabilizers_follow_the_center_image() {
        // the full Aut(Γ) of A_2 is dihedral and fixes each vertex with a
        // reflection, while W × Z fixes a point only through W
        let sig = predicted_orbit_signatures(&"A2".parse().unwrap());
        assert!(sig.keys().all(|(_, _, st, wz)| st == wz));
        assert!(!sig.is_empty());
        let pts = oracle::brute_points(&rs("A2"), &Capabilities::default()).unwrap();
        assert_eq!(observed_orbit_signatures(&pts).unwrap(), sig);
    }
}
