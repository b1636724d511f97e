//! Brute-force counterparts of the counting formulas: torsion points found by
//! scanning a grid, layer components found by solving congruences, and the
//! explicit poset of layers at small rank.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, ToPrimitive, Zero};

use crate::config::Capabilities;
use crate::error::{Error, Result};
use crate::intlat::{self, IntMatrix};
use crate::rootsys::{ProductType, RootSystem};
use crate::subsys::{self, decompose_type, Subsystem};
use crate::weyl::{reduce_mod_one, WeylGroup};

/// A point of `T = h / <Φ^∨>` in simple-coroot coordinates, reduced mod 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusPoint {
    coords: Vec<Rational64>,
}

impl TorusPoint {
    pub fn new(coords: Vec<Rational64>) -> Self {
        TorusPoint {
            coords: coords.into_iter().map(reduce_mod_one).collect(),
        }
    }

    pub fn identity(rank: usize) -> Self {
        TorusPoint {
            coords: vec![Rational64::zero(); rank],
        }
    }

    pub fn coords(&self) -> &[Rational64] {
        &self.coords
    }

    /// Least common denominator of the coordinates.
    pub fn order(&self) -> i64 {
        self.coords.iter().fold(1, |m, c| m.lcm(c.denom()))
    }

    /// Value of a character given in fundamental-weight coordinates, mod 1.
    pub fn character(&self, weight: &[i64]) -> Rational64 {
        let v = weight
            .iter()
            .zip(&self.coords)
            .fold(Rational64::zero(), |s, (&w, c)| s + c * w);
        reduce_mod_one(v)
    }

    /// `Φ(t)`: indices of the roots with `e^β(t) = 1`.
    pub fn integral_roots(&self, rs: &RootSystem) -> Vec<u32> {
        (0..rs.num_roots())
            .filter(|&r| self.character(&rs.weight_coords(rs.root(r))).is_zero())
            .map(|r| r as u32)
            .collect()
    }

    pub fn translate(&self, other: &TorusPoint) -> TorusPoint {
        TorusPoint::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrutePoint {
    pub point: TorusPoint,
    /// `Φ(t)` as root indices.
    pub phi_t: Vec<u32>,
    pub ty: ProductType,
    /// Index of the W-orbit, in order of first appearance.
    pub orbit: usize,
    /// `|W(t)|`
    pub stabilizer_order: BigUint,
    /// Order of the stabilizer of `t` in `W × Z(Φ)`.
    pub wz_stabilizer_order: BigUint,
}

#[derive(Debug, Clone)]
pub struct BrutePoints {
    /// The grid is `(1/M) Z^n mod 1`.
    pub grid_order: i64,
    /// Sorted by coordinates.
    pub points: Vec<BrutePoint>,
    /// Indices of the points of `Z(Φ)`.
    pub center: Vec<usize>,
    pub num_orbits: usize,
}

impl BrutePoints {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn type_multiset(&self) -> BTreeMap<ProductType, BigUint> {
        let mut out: BTreeMap<ProductType, BigUint> = BTreeMap::new();
        for p in &self.points {
            *out.entry(p.ty.clone()).or_default() += 1u32;
        }
        out
    }

    pub fn find(&self, t: &TorusPoint) -> Option<usize> {
        self.points.binary_search_by(|p| p.point.cmp(t)).ok()
    }
}

/// `lcm(a_0, ..., a_n) · exp(Z(Φ))`: every point of `C_0(Φ)` has order
/// dividing it.
pub fn grid_order(rs: &RootSystem) -> i64 {
    let marks = rs.marks().iter().fold(1i64, |m, &a| m.lcm(&a));
    let e = rs.center_exponent().to_i64().expect("small center");
    marks * e
}

/// The points `t` with `rank Φ(t) = n`, found by scanning the `M^n` grid.
pub fn brute_points(rs: &RootSystem, caps: &Capabilities) -> Result<BrutePoints> {
    let n = rs.rank();
    if n > caps.brute_rank {
        return Err(Error::capability(
            format!("brute-force point scan in rank {n}"),
            format!("--brute-rank {}", caps.brute_rank),
        ));
    }
    let m = grid_order(rs);
    let weights: Vec<Vec<i64>> = (0..rs.num_positive())
        .map(|r| rs.weight_coords(rs.root(r)))
        .collect();

    let mut found: Vec<(TorusPoint, Vec<u32>)> = Vec::new();
    let mut k = vec![0i64; n];
    loop {
        let pos: Vec<usize> = (0..weights.len())
            .filter(|&r| weights[r].iter().zip(&k).map(|(w, x)| w * x).sum::<i64>() % m == 0)
            .collect();
        if pos.len() >= n && intlat::rank_i64(&pos.iter().map(|&r| rs.root(r)).collect::<Vec<_>>()) == n {
            let t = TorusPoint::new(k.iter().map(|&x| Rational64::new(x, m)).collect());
            let mut phi_t: Vec<u32> = pos
                .iter()
                .flat_map(|&r| [r as u32, rs.negative(r) as u32])
                .collect();
            phi_t.sort_unstable();
            found.push((t, phi_t));
        }
        // odometer
        let mut i = 0;
        while i < n {
            k[i] += 1;
            if k[i] < m {
                break;
            }
            k[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    found.sort();

    let index: HashMap<TorusPoint, usize> = found
        .iter()
        .enumerate()
        .map(|(i, (t, _))| (t.clone(), i))
        .collect();
    let center: Vec<usize> = found
        .iter()
        .enumerate()
        .filter(|(_, (_, phi))| phi.len() == rs.num_roots())
        .map(|(i, _)| i)
        .collect();

    let w = WeylGroup::new(rs, caps.max_group_order);
    let mut orbit_of = vec![usize::MAX; found.len()];
    let mut stab = vec![BigUint::zero(); found.len()];
    let mut num_orbits = 0;
    for i in 0..found.len() {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        let o = w.point_orbit(found[i].0.coords())?;
        for c in &o.points {
            let j = *index
                .get(&TorusPoint::new(c.clone()))
                .ok_or_else(|| Error::Inexact("W-orbit leaves the point set".into()))?;
            orbit_of[j] = num_orbits;
            stab[j] = o.stabilizer_order.clone();
        }
        num_orbits += 1;
    }

    // the W × Z orbit of t is the union of the W-orbits of the translates zt
    let group = rs.weyl_order() * BigUint::from(center.len());
    let mut points = Vec::with_capacity(found.len());
    for (i, (t, phi_t)) in found.iter().enumerate() {
        let orbits: BTreeSet<usize> = center
            .iter()
            .map(|&z| {
                let zt = t.translate(&found[z].0);
                index.get(&zt).map(|&j| orbit_of[j])
            })
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Inexact("Z(Φ) does not preserve the point set".into()))?;
        let orbit_size = rs.weyl_order() / &stab[i] * BigUint::from(orbits.len());
        points.push(BrutePoint {
            point: t.clone(),
            ty: decompose_type(rs, phi_t)?,
            phi_t: phi_t.clone(),
            orbit: orbit_of[i],
            stabilizer_order: stab[i].clone(),
            wz_stabilizer_order: &group / orbit_size,
        });
    }
    Ok(BrutePoints {
        grid_order: m,
        points,
        center,
        num_orbits,
    })
}

/// Coordinates on the quotient torus `T / K^0_Θ`, where `K^0_Θ` is the
/// identity component of the common kernel of the roots of `Θ`.
///
/// Its character lattice `X_Θ` is the saturation of `Z Θ` inside the weight
/// lattice; `basis` holds a basis of `X_Θ` in weight coordinates and
/// `root_coords` the coordinates of the roots of `Θ` in that basis.
#[derive(Debug, Clone)]
pub struct QuotientTorus {
    pub basis: Vec<Vec<i64>>,
    pub roots: Vec<u32>,
    pub root_coords: Vec<Vec<i64>>,
}

impl QuotientTorus {
    pub fn new(rs: &RootSystem, theta: &Subsystem) -> QuotientTorus {
        let roots: Vec<u32> = theta.positive_roots(rs).collect();
        let weights: Vec<Vec<i64>> = roots.iter().map(|&r| rs.weight_coords(rs.root(r as usize))).collect();
        if roots.is_empty() {
            return QuotientTorus {
                basis: Vec::new(),
                roots,
                root_coords: Vec::new(),
            };
        }
        let sat = intlat::saturate(&IntMatrix::from_rows(rs.rank(), &weights));
        let basis: Vec<Vec<i64>> = (0..sat.rank())
            .map(|i| sat.basis.row_i64(i).expect("small entries"))
            .collect();
        let root_coords = weights
            .iter()
            .map(|w| {
                let v: Vec<BigInt> = w.iter().map(|&x| x.into()).collect();
                sat.coordinates(&v)
                    .expect("a root lies in its own span")
                    .iter()
                    .map(|x| x.to_i64().expect("small entries"))
                    .collect()
            })
            .collect();
        QuotientTorus {
            basis,
            roots,
            root_coords,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Image of a point of `T`.
    pub fn project(&self, t: &TorusPoint) -> Vec<Rational64> {
        self.basis.iter().map(|b| t.character(b)).collect()
    }

    /// Positive roots of `Θ` that are trivial at `u`.
    pub fn integral_roots(&self, u: &[Rational64]) -> Vec<u32> {
        self.roots
            .iter()
            .zip(&self.root_coords)
            .filter(|(_, c)| {
                let v = c.iter().zip(u).fold(Rational64::zero(), |s, (&a, x)| s + x * a);
                v.is_integer()
            })
            .map(|(&r, _)| r)
            .collect()
    }

    /// The points `u` at which the roots of `Θ` have full rank: these are the
    /// images of the layers with tangent subsystem `Θ`. Sorted.
    pub fn full_rank_points(&self) -> Vec<Vec<Rational64>> {
        let r = self.dim();
        let mut out: BTreeSet<Vec<Rational64>> = BTreeSet::new();
        if r == 0 {
            out.insert(Vec::new());
            return out.into_iter().collect();
        }
        for subset in combinations(self.roots.len(), r) {
            let rows: Vec<&[i64]> = subset.iter().map(|&i| self.root_coords[i].as_slice()).collect();
            if intlat::rank_i64(&rows) < r {
                continue;
            }
            // A u ∈ Z^r with L A R = D gives u = R (k_i / d_i)
            let snf = intlat::smith_normal_form(&IntMatrix::from_rows(r, &rows));
            let d: Vec<i64> = snf.diagonal.iter().map(|x| x.to_i64().expect("small divisors")).collect();
            let right: Vec<Vec<i64>> = (0..r)
                .map(|i| snf.right.row_i64(i).expect("small entries"))
                .collect();
            let mut k = vec![0i64; r];
            loop {
                let u: Vec<Rational64> = (0..r)
                    .map(|i| {
                        let v = (0..r).fold(Rational64::zero(), |s, j| s + Rational64::new(right[i][j] * k[j], d[j]));
                        reduce_mod_one(v)
                    })
                    .collect();
                out.insert(u);
                let mut i = 0;
                while i < r {
                    k[i] += 1;
                    if k[i] < d[i] {
                        break;
                    }
                    k[i] = 0;
                    i += 1;
                }
                if i == r {
                    break;
                }
            }
        }
        out.into_iter().collect()
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

fn require_complete(rs: &RootSystem, theta: &Subsystem) -> Result<()> {
    if theta.complete && subsys::completion(rs, &theta.roots).roots == theta.roots {
        Ok(())
    } else {
        Err(Error::NotComplete)
    }
}

/// `|C^Φ_Θ|`, counted as the points of `T / K^0_Θ` where the roots of `Θ`
/// have full rank.
pub fn component_count(rs: &RootSystem, theta: &Subsystem) -> Result<BigUint> {
    require_complete(rs, theta)?;
    Ok(QuotientTorus::new(rs, theta).full_rank_points().len().into())
}

/// Number of connected components of `∩_{α ∈ Θ} ker e^α`: the torsion of the
/// weight lattice modulo `Z Θ`. These are the layers with `Φ_C = Θ`.
pub fn kernel_component_count(rs: &RootSystem, theta: &Subsystem) -> Result<BigUint> {
    require_complete(rs, theta)?;
    let weights: Vec<Vec<i64>> = theta
        .positive_roots(rs)
        .map(|r| rs.weight_coords(rs.root(r as usize)))
        .collect();
    if weights.is_empty() {
        return Ok(BigUint::one());
    }
    let t = intlat::quotient_torsion(&IntMatrix::from_rows(rs.rank(), &weights));
    Ok(t.to_biguint().expect("positive torsion"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitLayer {
    pub dim: usize,
    /// The tangent subsystem.
    pub theta: Vec<u32>,
    /// `Φ_C`: the roots trivial on the whole layer. Its completion is `theta`.
    pub phi_c: Vec<u32>,
    pub ty: ProductType,
    /// Lexicographically least point of `C_0(Φ)` on the layer.
    pub base_point: TorusPoint,
}

#[derive(Debug, Clone)]
pub struct LayerPoset {
    /// Sorted by dimension, then tangent subsystem, then base point.
    pub layers: Vec<ExplicitLayer>,
    /// Pairs `(a, b)` with `layers[a] ⊆ layers[b]`, reflexive pairs included.
    pub order: BTreeSet<(usize, usize)>,
    /// Covering pairs.
    pub covers: Vec<(usize, usize)>,
}

impl LayerPoset {
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order.contains(&(a, b))
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        let top = self.layers.iter().map(|l| l.dim).max().unwrap_or(0);
        (0..=top)
            .map(|d| self.layers.iter().filter(|l| l.dim == d).count())
            .collect()
    }

    /// Reflexive, antisymmetric and transitive.
    pub fn is_partial_order(&self) -> bool {
        let n = self.layers.len();
        let refl = (0..n).all(|a| self.leq(a, a));
        let anti = self.order.iter().all(|&(a, b)| a == b || !self.leq(b, a));
        let trans = self.order.iter().all(|&(a, b)| {
            self.order
                .range((b, 0)..(b + 1, 0))
                .all(|&(_, c)| self.leq(a, c))
        });
        refl && anti && trans
    }

    /// Strictly smaller elements have strictly smaller dimension.
    pub fn is_graded_by_dimension(&self) -> bool {
        self.order
            .iter()
            .all(|&(a, b)| a == b || self.layers[a].dim < self.layers[b].dim)
    }
}

/// The poset of layers, ordered by inclusion.
pub fn build_poset(rs: &RootSystem, caps: &Capabilities) -> Result<LayerPoset> {
    let n = rs.rank();
    if n > caps.poset_rank {
        return Err(Error::capability(
            format!("explicit layer poset in rank {n}"),
            format!("--poset-rank {}", caps.poset_rank),
        ));
    }
    let pts = brute_points(rs, &Capabilities {
        brute_rank: caps.brute_rank.max(n),
        ..caps.clone()
    })?;
    let families = subsys::enumerate_all(rs, caps)?;

    // per layer: its quotient torus and image point, for membership tests
    let mut layers: Vec<(ExplicitLayer, usize, Vec<Rational64>)> = Vec::new();
    let mut tori: Vec<QuotientTorus> = Vec::new();
    for fam in &families {
        for theta in &fam.members {
            let q = QuotientTorus::new(rs, theta);
            let projected: Vec<Vec<Rational64>> = pts.points.iter().map(|p| q.project(&p.point)).collect();
            for u in q.full_rank_points() {
                let base = projected
                    .iter()
                    .position(|v| *v == u)
                    .ok_or_else(|| Error::Inexact("layer without a point of C_0".into()))?;
                let pos = q.integral_roots(&u);
                let mut phi_c: Vec<u32> = pos.iter().flat_map(|&r| [r, rs.negative(r as usize) as u32]).collect();
                phi_c.sort_unstable();
                let layer = ExplicitLayer {
                    dim: fam.d,
                    theta: theta.roots.clone(),
                    ty: decompose_type(rs, &phi_c)?,
                    phi_c,
                    base_point: pts.points[base].point.clone(),
                };
                layers.push((layer, tori.len(), u));
            }
            tori.push(q);
        }
    }
    layers.sort_by(|a, b| {
        (a.0.dim, &a.0.theta, &a.0.base_point).cmp(&(b.0.dim, &b.0.theta, &b.0.base_point))
    });

    let mut order = BTreeSet::new();
    for (i, (small, _, _)) in layers.iter().enumerate() {
        for (j, (big, torus, u)) in layers.iter().enumerate() {
            let contained = big.theta.iter().all(|r| small.theta.binary_search(r).is_ok())
                && tori[*torus].project(&small.base_point) == *u;
            if contained {
                order.insert((i, j));
            }
        }
    }
    let covers = order
        .iter()
        .filter(|&&(a, b)| {
            a != b
                && !order
                    .range((a, 0)..(a + 1, 0))
                    .any(|&(_, c)| c != a && c != b && order.contains(&(c, b)))
        })
        .copied()
        .collect();
    Ok(LayerPoset {
        layers: layers.into_iter().map(|(l, _, _)| l).collect(),
        order,
        covers,
    })
}
