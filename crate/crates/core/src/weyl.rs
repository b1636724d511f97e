//! The Weyl group as a permutation group on the roots.

use std::collections::{HashMap, HashSet};
use std::hash::Hash;

use num_bigint::BigUint;
use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;

/// A Weyl group element, stored as the permutation it induces on root
/// indices: `perm[r]` is the index of `w(root r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    perm: Vec<u32>,
}

impl WeylElement {
    pub fn identity(num_roots: usize) -> Self {
        WeylElement {
            perm: (0..num_roots as u32).collect(),
        }
    }

    pub fn apply(&self, root: usize) -> usize {
        self.perm[root] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement {
            perm: other.perm.iter().map(|&r| self.perm[r as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut perm = vec![0; self.perm.len()];
        for (i, &j) in self.perm.iter().enumerate() {
            perm[j as usize] = i as u32;
        }
        WeylElement { perm }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn permutation(&self) -> &[u32] {
        &self.perm
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, rs: &RootSystem) -> usize {
        (0..rs.num_positive())
            .filter(|&r| !rs.is_positive(self.apply(r)))
            .count()
    }

    /// Image of a root subset, sorted.
    pub fn apply_set(&self, roots: &[u32]) -> Vec<u32> {
        let mut out: Vec<u32> = roots.iter().map(|&r| self.perm[r as usize]).collect();
        out.sort_unstable();
        out
    }

    /// Checks bijectivity and that the pairing `<α, β^∨>` is preserved.
    pub fn is_valid(&self, rs: &RootSystem) -> bool {
        let n = rs.num_roots();
        if self.perm.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &j in &self.perm {
            if seen[j as usize] {
                return false;
            }
            seen[j as usize] = true;
        }
        (0..n).all(|a| {
            (0..n).all(|b| {
                rs.pairing(rs.root(a), rs.root(b))
                    == rs.pairing(rs.root(self.apply(a)), rs.root(self.apply(b)))
            })
        })
    }

    /// Matrix of `w` on simple-coroot coordinates: column `k` holds the
    /// coroot coordinates of `w(α_k)^∨`.
    pub fn coroot_matrix(&self, rs: &RootSystem) -> Vec<Vec<i64>> {
        let n = rs.rank();
        let cols: Vec<Vec<i64>> = (0..n)
            .map(|k| rs.coroot_coords(rs.root(self.apply(k))))
            .collect();
        (0..n).map(|i| (0..n).map(|k| cols[k][i]).collect()).collect()
    }

    /// Action on a torus point given in simple-coroot coordinates, reduced
    /// mod 1.
    pub fn act_on_point(&self, rs: &RootSystem, point: &[Rational64]) -> Vec<Rational64> {
        act_with_matrix(&self.coroot_matrix(rs), point)
    }
}

pub(crate) fn act_with_matrix(m: &[Vec<i64>], point: &[Rational64]) -> Vec<Rational64> {
    m.iter()
        .map(|row| {
            let v: Rational64 = row
                .iter()
                .zip(point)
                .map(|(&a, c)| c * a)
                .fold(Rational64::zero(), |s, x| s + x);
            reduce_mod_one(v)
        })
        .collect()
}

pub(crate) fn reduce_mod_one(v: Rational64) -> Rational64 {
    v - v.floor()
}

/// `s_i` for `i` in `1..=rank`, numbered like the vertices of the affine
/// diagram.
pub fn simple_reflection(rs: &RootSystem, i: usize) -> Result<WeylElement> {
    if i == 0 || i > rs.rank() {
        return Err(Error::IndexOutOfRange {
            index: i,
            rank: rs.rank(),
        });
    }
    Ok(reflection(rs, i - 1))
}

/// Reflection in the root with index `r`.
pub fn reflection(rs: &RootSystem, r: usize) -> WeylElement {
    let alpha = rs.root(r);
    let perm = rs
        .roots()
        .iter()
        .map(|beta| {
            let k = rs.pairing(beta, alpha);
            let img: Vec<i64> = beta.iter().zip(alpha).map(|(b, a)| b - k * a).collect();
            rs.find(&img).expect("root system is closed under reflections") as u32
        })
        .collect();
    WeylElement { perm }
}

#[derive(Debug, Clone)]
pub struct Orbit<T> {
    /// Orbit points in discovery order (breadth first from the start point).
    pub points: Vec<T>,
    pub stabilizer_order: BigUint,
    /// Schreier generators of the stabilizer, without duplicates or the identity.
    pub stabilizer_generators: Vec<WeylElement>,
}

impl<T> Orbit<T> {
    pub fn size(&self) -> usize {
        self.points.len()
    }
}

/// The Weyl group, generated by the simple reflections.
#[derive(Debug, Clone)]
pub struct WeylGroup<'a> {
    rs: &'a RootSystem,
    generators: Vec<WeylElement>,
    max_order: u64,
}

impl<'a> WeylGroup<'a> {
    pub fn new(rs: &'a RootSystem, max_order: u64) -> Self {
        let generators = (0..rs.rank()).map(|i| reflection(rs, i)).collect();
        WeylGroup {
            rs,
            generators,
            max_order,
        }
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn generators(&self) -> &[WeylElement] {
        &self.generators
    }

    /// Order from the degree table.
    pub fn order(&self) -> BigUint {
        self.rs.weyl_order()
    }

    /// All elements in shortlex order of their reduced words.
    pub fn elements(&self) -> Result<Vec<WeylElement>> {
        let order = self.order();
        if order.to_u64().is_none_or(|o| o > self.max_order) {
            return Err(Error::capability(
                format!("enumerating a Weyl group of order {order}"),
                format!("--max-group-order {}", self.max_order),
            ));
        }
        let id = WeylElement::identity(self.rs.num_roots());
        let mut seen: HashSet<WeylElement> = HashSet::from([id.clone()]);
        let mut out = vec![id];
        let mut k = 0;
        while k < out.len() {
            for s in &self.generators {
                let w = out[k].compose(s);
                if seen.insert(w.clone()) {
                    out.push(w);
                }
            }
            k += 1;
            if out.len() as u64 > self.max_order {
                return Err(Error::capability("Weyl group enumeration", self.max_order));
            }
        }
        Ok(out)
    }

    /// Orbit and stabilizer of `start` under an action given on group
    /// elements. Only the generators are applied, so the group itself is
    /// never enumerated; the orbit size is bounded by `max_order`.
    pub fn orbit<T, F>(&self, start: T, act: F) -> Result<Orbit<T>>
    where
        T: Clone + Eq + Hash,
        F: Fn(&WeylElement, &T) -> T,
    {
        let id = WeylElement::identity(self.rs.num_roots());
        let mut index: HashMap<T, usize> = HashMap::from([(start.clone(), 0)]);
        let mut points = vec![start];
        let mut transversal = vec![id];
        let mut edges: Vec<(usize, usize, usize)> = Vec::new();
        let mut k = 0;
        while k < points.len() {
            for (g, s) in self.generators.iter().enumerate() {
                let y = act(s, &points[k]);
                match index.get(&y) {
                    Some(&j) => edges.push((k, g, j)),
                    None => {
                        if points.len() as u64 >= self.max_order {
                            return Err(Error::capability("explicit orbit", self.max_order));
                        }
                        index.insert(y.clone(), points.len());
                        transversal.push(s.compose(&transversal[k]));
                        points.push(y);
                    }
                }
            }
            k += 1;
        }
        let mut gens: Vec<WeylElement> = Vec::new();
        let mut seen = HashSet::new();
        for (x, g, y) in edges {
            // u_y^{-1} s u_x fixes the start point
            let h = transversal[y]
                .inverse()
                .compose(&self.generators[g])
                .compose(&transversal[x]);
            if !h.is_identity() && seen.insert(h.clone()) {
                gens.push(h);
            }
        }
        let stabilizer_order = self.order() / BigUint::from(points.len());
        Ok(Orbit {
            points,
            stabilizer_order,
            stabilizer_generators: gens,
        })
    }

    /// Orbit of a root subset (root indices).
    pub fn root_set_orbit(&self, roots: &[u32]) -> Result<Orbit<Vec<u32>>> {
        let mut start = roots.to_vec();
        start.sort_unstable();
        self.orbit(start, |w, s| w.apply_set(s))
    }

    /// Orbit of a torus point in simple-coroot coordinates.
    pub fn point_orbit(&self, point: &[Rational64]) -> Result<Orbit<Vec<Rational64>>> {
        let start: Vec<Rational64> = point.iter().map(|&c| reduce_mod_one(c)).collect();
        self.orbit(start, |w, p| w.act_on_point(self.rs, p))
    }
}

/// The longest element of `W` (`vertex = None`) or of the parabolic subgroup
/// generated by all simple reflections except `s_p` (`vertex = Some(p)`,
/// `p` in `1..=rank`).
pub fn longest_element(rs: &RootSystem, vertex: Option<usize>) -> Result<WeylElement> {
    if let Some(p) = vertex {
        if p == 0 || p > rs.rank() {
            return Err(Error::IndexOutOfRange {
                index: p,
                rank: rs.rank(),
            });
        }
    }
    let allowed: Vec<usize> = (0..rs.rank())
        .filter(|&i| vertex != Some(i + 1))
        .collect();
    let reflections: Vec<WeylElement> = allowed.iter().map(|&i| reflection(rs, i)).collect();
    let mut w = WeylElement::identity(rs.num_roots());
    // right multiplication by s_i lengthens w exactly when w(α_i) > 0
    while let Some(k) = allowed.iter().position(|&i| rs.is_positive(w.apply(i))) {
        w = w.compose(&reflections[k]);
    }
    Ok(w)
}

/// One element of the Iwahori–Matsumoto subgroup `W_Z`.
#[derive(Debug, Clone)]
pub struct CenterElement {
    /// Vertex `p` with mark 1 (0 for the identity).
    pub vertex: usize,
    pub element: WeylElement,
    /// Induced permutation of the affine diagram vertices.
    pub diagram_permutation: Vec<usize>,
}

/// `{1} ∪ {z_p = w_0^p w_0 : a_p = 1}` for an irreducible root system.
pub fn center_subgroup(rs: &RootSystem) -> Result<Vec<CenterElement>> {
    let vertex_roots = rs.affine_vertex_roots()?;
    let w0 = longest_element(rs, None)?;
    let mut out = vec![CenterElement {
        vertex: 0,
        element: WeylElement::identity(rs.num_roots()),
        diagram_permutation: (0..vertex_roots.len()).collect(),
    }];
    for p in 1..=rs.rank() {
        if rs.marks()[p - 1] != 1 {
            continue;
        }
        let z = longest_element(rs, Some(p))?.compose(&w0);
        let diagram_permutation = vertex_permutation(&z, &vertex_roots).ok_or_else(|| {
            Error::Inexact(format!("z_{p} does not permute the affine simple roots"))
        })?;
        out.push(CenterElement {
            vertex: p,
            element: z,
            diagram_permutation,
        });
    }
    Ok(out)
}

/// The permutation of affine vertices induced by `w`, if `w` permutes the
/// affine simple roots.
pub fn vertex_permutation(w: &WeylElement, vertex_roots: &[usize]) -> Option<Vec<usize>> {
    vertex_roots
        .iter()
        .map(|&r| {
            let img = w.apply(r);
            vertex_roots.iter().position(|&x| x == img)
        })
        .collect()
}
