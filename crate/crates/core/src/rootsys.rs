//! Root systems with integer data.
//!
//! Conventions used throughout the crate:
//!
//! - roots are integer vectors in the basis of simple roots;
//! - `cartan[i][j] = <α_j, α_i^∨>`, so `s_i(β) = β - <β, α_i^∨> α_i` with
//!   `<β, α_i^∨> = Σ_j β_j cartan[i][j]`;
//! - the symmetric form is scaled so that every squared length is an even
//!   integer (2 for short roots, 2/4/6 for long roots);
//! - simple roots follow the Bourbaki numbering.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};


use crate::error::{Error, Result};
use crate::intlat::{self, IntMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// An irreducible Cartan type in canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeSymbol {
    family: Family,
    rank: usize,
}

impl TypeSymbol {
    /// Validates the rank and normalises the low-rank coincidences
    /// B1 = C1 = A1, C2 = B2 and D3 = A3.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let invalid = |constraint| Error::InvalidType {
            family: family.letter(),
            rank,
            constraint,
        };
        let (family, rank) = match (family, rank) {
            (Family::A, r) if r >= 1 => (Family::A, r),
            (Family::A, _) => return Err(invalid("type A needs rank >= 1")),
            (Family::B | Family::C, 1) => (Family::A, 1),
            (Family::C, 2) => (Family::B, 2),
            (Family::B | Family::C, r) if r >= 2 => (family, r),
            (Family::B, _) => return Err(invalid("type B needs rank >= 2")),
            (Family::C, _) => return Err(invalid("type C needs rank >= 2")),
            (Family::D, 3) => (Family::A, 3),
            (Family::D, r) if r >= 3 => (Family::D, r),
            (Family::D, _) => return Err(invalid("type D needs rank >= 3")),
            (Family::E, 6..=8) => (Family::E, rank),
            (Family::E, _) => return Err(invalid("type E needs rank 6, 7 or 8")),
            (Family::F, 4) => (Family::F, 4),
            (Family::F, _) => return Err(invalid("type F needs rank 4")),
            (Family::G, 2) => (Family::G, 2),
            (Family::G, _) => return Err(invalid("type G needs rank 2")),
        };
        Ok(TypeSymbol { family, rank })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Degrees of the basic invariants of the Weyl group.
    pub fn degrees(self) -> Vec<u64> {
        let n = self.rank as u64;
        match self.family {
            Family::A => (2..=n + 1).collect(),
            Family::B | Family::C => (1..=n).map(|i| 2 * i).collect(),
            Family::D => {
                let mut d: Vec<u64> = (1..n).map(|i| 2 * i).collect();
                d.push(n);
                d.sort_unstable();
                d
            }
            Family::E => match n {
                6 => vec![2, 5, 6, 8, 9, 12],
                7 => vec![2, 6, 8, 10, 12, 14, 18],
                _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
            },
            Family::F => vec![2, 6, 8, 12],
            Family::G => vec![2, 6],
        }
    }

    pub fn num_positive_roots(self) -> usize {
        self.degrees().iter().map(|d| (d - 1) as usize).sum()
    }

    /// Squared lengths of the simple roots and the edges of the Dynkin
    /// diagram (0-based vertices).
    fn dynkin(self) -> (Vec<i64>, Vec<(usize, usize)>) {
        let n = self.rank;
        let path = |len: usize| (1..len).map(|i| (i - 1, i)).collect::<Vec<_>>();
        match self.family {
            Family::A => (vec![2; n], path(n)),
            Family::B => {
                let mut norms = vec![4; n];
                norms[n - 1] = 2;
                (norms, path(n))
            }
            Family::C => {
                let mut norms = vec![2; n];
                norms[n - 1] = 4;
                (norms, path(n))
            }
            Family::D => {
                let mut edges = path(n - 1);
                edges.push((n - 3, n - 1));
                (vec![2; n], edges)
            }
            Family::E => {
                // 1-3-4-5-6(-7-8), with 2 attached to 4
                let mut edges = vec![(0, 2), (1, 3), (2, 3)];
                edges.extend((3..n - 1).map(|i| (i, i + 1)));
                (vec![2; n], edges)
            }
            Family::F => (vec![4, 4, 2, 2], path(4)),
            Family::G => (vec![2, 6], path(2)),
        }
    }
}

impl fmt::Display for TypeSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for TypeSymbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::Parse(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(s.to_string()))?;
        TypeSymbol::new(family, rank)
    }
}

/// A product of irreducible types, kept sorted. The empty product is the
/// rank-0 system and prints as `A0`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProductType(Vec<TypeSymbol>);

impl ProductType {
    pub fn new(mut factors: Vec<TypeSymbol>) -> Self {
        factors.sort();
        ProductType(factors)
    }

    pub fn empty() -> Self {
        ProductType(Vec::new())
    }

    pub fn factors(&self) -> &[TypeSymbol] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(|t| t.rank).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.0.len() == 1
    }

    /// Concatenates the factors of both products.
    pub fn times(&self, other: &ProductType) -> ProductType {
        ProductType::new(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn degrees(&self) -> Vec<u64> {
        let mut d: Vec<u64> = self.0.iter().flat_map(|t| t.degrees()).collect();
        d.sort_unstable();
        d
    }

    /// Order of the Weyl group, the product of the degrees.
    pub fn weyl_order(&self) -> BigUint {
        self.degrees().iter().map(|&d| BigUint::from(d)).product()
    }

    /// Product of the exponents `d_i - 1`.
    pub fn exponent_product(&self) -> BigUint {
        self.degrees().iter().map(|&d| BigUint::from(d - 1)).product()
    }

    /// The same product with B and C swapped in every factor (the labels of
    /// the dual root system).
    pub fn dual(&self) -> ProductType {
        ProductType::new(
            self.0
                .iter()
                .map(|t| match t.family {
                    Family::B if t.rank > 2 => TypeSymbol { family: Family::C, rank: t.rank },
                    Family::C => TypeSymbol { family: Family::B, rank: t.rank },
                    _ => *t,
                })
                .collect(),
        )
    }
}

impl From<TypeSymbol> for ProductType {
    fn from(t: TypeSymbol) -> Self {
        ProductType(vec![t])
    }
}

impl fmt::Display for ProductType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "A0");
        }
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for ProductType {
    type Err = Error;

    /// Accepts factors separated by `x`, `X`, `*` or `×`; `A0` is the empty
    /// product.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse(s.to_string()));
        }
        let mut factors = Vec::new();
        for part in s.split(['x', 'X', '*', '×']) {
            if part.trim() == "A0" {
                continue;
            }
            factors.push(part.parse()?);
        }
        Ok(ProductType::new(factors))
    }
}

/// Per-type numerical data, from the tables and one Smith normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeInvariants {
    pub weyl_order: BigUint,
    pub degrees: Vec<u64>,
    pub exponent_product: BigUint,
    pub center_order: BigUint,
}

pub fn type_invariants(ty: &ProductType) -> TypeInvariants {
    let cartan = cartan_matrix(ty);
    TypeInvariants {
        weyl_order: ty.weyl_order(),
        degrees: ty.degrees(),
        exponent_product: ty.exponent_product(),
        center_order: center_order_of(&cartan),
    }
}

/// `|Z(Φ)|`: index of the root lattice in the weight lattice. The weight
/// coordinates of `α_j` form column `j` of the Cartan matrix.
fn center_order_of(cartan: &[Vec<i64>]) -> BigUint {
    let n = cartan.len();
    let m = IntMatrix::from_rows(n, cartan).transpose();
    intlat::quotient_torsion(&m)
        .to_biguint()
        .expect("torsion is positive")
}

fn norms_and_form(ty: &ProductType) -> (Vec<i64>, Vec<Vec<i64>>) {
    let n = ty.rank();
    let mut norms = Vec::with_capacity(n);
    let mut form = vec![vec![0i64; n]; n];
    let mut offset = 0;
    for t in ty.factors() {
        let (nm, edges) = t.dynkin();
        for (i, &x) in nm.iter().enumerate() {
            form[offset + i][offset + i] = x;
        }
        for (u, v) in edges {
            let s = -nm[u].max(nm[v]) / 2;
            form[offset + u][offset + v] = s;
            form[offset + v][offset + u] = s;
        }
        norms.extend(nm);
        offset += t.rank;
    }
    (norms, form)
}

/// Cartan matrix `C[i][j] = <α_j, α_i^∨>` of a product type, block diagonal.
pub fn cartan_matrix(ty: &ProductType) -> Vec<Vec<i64>> {
    let (norms, form) = norms_and_form(ty);
    let n = norms.len();
    (0..n)
        .map(|i| (0..n).map(|j| 2 * form[i][j] / norms[i]).collect())
        .collect()
}

/// One irreducible factor of a [`RootSystem`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub ty: TypeSymbol,
    /// Index of the factor's first simple root.
    pub offset: usize,
    /// Root index of the factor's highest root.
    pub highest_root: usize,
}

/// A (possibly reducible) root system. Roots `0..N` are positive, sorted by
/// height; root `N + i` is `-(root i)`. Roots `0..rank` are the simple roots.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: ProductType,
    factors: Vec<Factor>,
    cartan: Vec<Vec<i64>>,
    form: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    marks: Vec<i64>,
}

impl RootSystem {
    pub fn build(ty: &ProductType) -> RootSystem {
        let n = ty.rank();
        let (_, form) = norms_and_form(ty);
        let cartan = cartan_matrix(ty);

        // closure by root strings: β + α_i is a root iff q = p - <β, α_i^∨> > 0
        let mut set: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut layer: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect();
        set.extend(layer.iter().cloned());
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    let mut p = 0;
                    let mut v = beta.clone();
                    loop {
                        v[i] -= 1;
                        if set.contains(&v) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
                    if p - pairing > 0 {
                        let mut gamma = beta.clone();
                        gamma[i] += 1;
                        if set.insert(gamma.clone()) {
                            next.push(gamma);
                        }
                    }
                }
            }
            layer = next;
        }
        let mut positive: Vec<Vec<i64>> = set.into_iter().collect();
        positive.sort_by(|a, b| {
            let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|r| r.iter().map(|x| -x).collect()));
        let index = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();

        let mut factors = Vec::new();
        let mut marks = Vec::with_capacity(n);
        let mut offset = 0;
        for &t in ty.factors() {
            let block = offset..offset + t.rank;
            let highest_root = (0..positive.len())
                .rev()
                .find(|&r| {
                    positive[r]
                        .iter()
                        .enumerate()
                        .all(|(j, &x)| x == 0 || block.contains(&j))
                })
                .expect("every factor has a highest root");
            marks.extend_from_slice(&positive[highest_root][block.clone()]);
            factors.push(Factor {
                ty: t,
                offset,
                highest_root,
            });
            offset += t.rank;
        }

        RootSystem {
            ty: ty.clone(),
            factors,
            cartan,
            form,
            roots,
            index,
            marks,
        }
    }

    pub fn from_symbol(t: TypeSymbol) -> RootSystem {
        Self::build(&t.into())
    }

    pub fn product_type(&self) -> &ProductType {
        &self.ty
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Symmetric form on simple roots.
    pub fn form(&self) -> &[Vec<i64>] {
        &self.form
    }

    /// Coefficients of the highest root of each factor, concatenated.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.ty.degrees()
    }

    pub fn weyl_order(&self) -> BigUint {
        self.ty.weyl_order()
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots[..self.num_positive()]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.num_positive()
    }

    pub fn negative(&self, i: usize) -> usize {
        let n = self.num_positive();
        if i < n {
            i + n
        } else {
            i - n
        }
    }

    pub fn find(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn height(&self, i: usize) -> i64 {
        self.roots[i].iter().sum()
    }

    /// Root index of `α_0 = -θ` for the factor `f`.
    pub fn lowest_root(&self, f: usize) -> usize {
        self.negative(self.factors[f].highest_root)
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a[i] * self.form[i][j] * b[j];
            }
        }
        s
    }

    pub fn norm(&self, a: &[i64]) -> i64 {
        self.inner(a, a)
    }

    /// `<a, b^∨> = 2 (a, b) / (b, b)`.
    pub fn pairing(&self, a: &[i64], b: &[i64]) -> i64 {
        2 * self.inner(a, b) / self.norm(b)
    }

    /// `<β, α_i^∨>` for a simple root index `i` (0-based).
    pub fn simple_pairing(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter()
            .zip(&self.cartan[i])
            .map(|(b, c)| b * c)
            .sum()
    }

    /// Coordinates of `β^∨` in the basis of simple coroots.
    pub fn coroot_coords(&self, beta: &[i64]) -> Vec<i64> {
        let nb = self.norm(beta);
        beta.iter()
            .enumerate()
            .map(|(j, &m)| m * self.form[j][j] / nb)
            .collect()
    }

    /// Coordinates of `β` in the basis of fundamental weights.
    pub fn weight_coords(&self, beta: &[i64]) -> Vec<i64> {
        (0..self.rank())
            .map(|i| self.simple_pairing(beta, i))
            .collect()
    }

    /// `|Z(Φ)|` from the Smith normal form of the Cartan matrix.
    pub fn center_order(&self) -> BigUint {
        center_order_of(&self.cartan)
    }

    /// Exponent of `Z(Φ)`: the largest elementary divisor of the Cartan matrix.
    pub fn center_exponent(&self) -> BigInt {
        let m = IntMatrix::from_rows(self.rank(), &self.cartan).transpose();
        intlat::quotient_exponent(&m)
    }

    pub fn affine_diagram(&self) -> Result<AffineDiagram> {
        if !self.is_irreducible() {
            return Err(Error::Reducible("the affine Dynkin diagram"));
        }
        let n = self.rank();
        let mut vertex_roots: Vec<Vec<i64>> = vec![self.root(self.lowest_root(0)).to_vec()];
        vertex_roots.extend((0..n).map(|i| self.root(i).to_vec()));
        let norms: Vec<i64> = vertex_roots.iter().map(|r| self.norm(r)).collect();
        let cartan: Vec<Vec<i64>> = vertex_roots
            .iter()
            .map(|ai| vertex_roots.iter().map(|aj| self.pairing(aj, ai)).collect())
            .collect();
        let mut marks = vec![1];
        marks.extend_from_slice(&self.marks);
        Ok(AffineDiagram::new(self.factors[0].ty, cartan, norms, marks))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub multiplicity: u8,
    /// The endpoint the arrow points to (the shorter root), if the lengths differ.
    pub toward: Option<usize>,
}

/// The affine Dynkin diagram: vertex 0 is the lowest root, vertex `p >= 1` is
/// the simple root `α_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineDiagram {
    pub ty: TypeSymbol,
    /// Generalised Cartan matrix `cartan[i][j] = <α_j, α_i^∨>`, `i, j in 0..=n`.
    pub cartan: Vec<Vec<i64>>,
    pub norms: Vec<i64>,
    /// `a_0 = 1, a_1, .., a_n`.
    pub marks: Vec<i64>,
    pub edges: Vec<Edge>,
}

impl AffineDiagram {
    fn new(ty: TypeSymbol, cartan: Vec<Vec<i64>>, norms: Vec<i64>, marks: Vec<i64>) -> Self {
        let mut edges = Vec::new();
        let m = cartan.len();
        for u in 0..m {
            for v in u + 1..m {
                if cartan[u][v] == 0 {
                    continue;
                }
                let multiplicity = cartan[u][v].abs().max(cartan[v][u].abs()) as u8;
                let toward = match norms[u].cmp(&norms[v]) {
                    std::cmp::Ordering::Greater => Some(v),
                    std::cmp::Ordering::Less => Some(u),
                    std::cmp::Ordering::Equal => None,
                };
                edges.push(Edge {
                    u,
                    v,
                    multiplicity,
                    toward,
                });
            }
        }
        AffineDiagram {
            ty,
            cartan,
            norms,
            marks,
            edges,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.cartan.len()
    }

    /// Type of the subdiagram with vertex `p` removed.
    pub fn delete_vertex(&self, p: usize) -> Result<ProductType> {
        let keep: Vec<usize> = (0..self.num_vertices()).filter(|&v| v != p).collect();
        identify_diagram(&self.cartan, &self.norms, &keep)
    }

    /// All vertex permutations preserving the generalised Cartan matrix (so
    /// edges, multiplicities and arrows), the root lengths and the marks,
    /// together with the vertex orbits, sorted.
    pub fn automorphisms(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let m = self.num_vertices();
        let mut found = Vec::new();
        let mut image = vec![usize::MAX; m];
        let mut used = vec![false; m];
        self.extend_automorphism(0, &mut image, &mut used, &mut found);
        found.sort();

        let mut orbit_of = vec![usize::MAX; m];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for v in 0..m {
            if orbit_of[v] != usize::MAX {
                continue;
            }
            let orbit: BTreeSet<usize> = found.iter().map(|g| g[v]).collect();
            for &u in &orbit {
                orbit_of[u] = orbits.len();
            }
            orbits.push(orbit.into_iter().collect());
        }
        (found, orbits)
    }

    fn extend_automorphism(
        &self,
        v: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        found: &mut Vec<Vec<usize>>,
    ) {
        let m = self.num_vertices();
        if v == m {
            found.push(image.clone());
            return;
        }
        for w in 0..m {
            if used[w]
                || self.marks[w] != self.marks[v]
                || self.norms[w] != self.norms[v]
                || self.cartan[w][w] != self.cartan[v][v]
            {
                continue;
            }
            let consistent = (0..v).all(|u| {
                self.cartan[image[u]][w] == self.cartan[u][v]
                    && self.cartan[w][image[u]] == self.cartan[v][u]
            });
            if !consistent {
                continue;
            }
            image[v] = w;
            used[w] = true;
            self.extend_automorphism(v + 1, image, used, found);
            used[w] = false;
        }
        image[v] = usize::MAX;
    }
}

/// Splits the vertex subset `keep` of a diagram (given by its generalised
/// Cartan matrix and root lengths) into connected components and names each
/// one.
pub fn identify_diagram(cartan: &[Vec<i64>], norms: &[i64], keep: &[usize]) -> Result<ProductType> {
    let mut seen = vec![false; keep.len()];
    let mut factors = Vec::new();
    for start in 0..keep.len() {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let a = keep[comp[k]];
            for (j, &b) in keep.iter().enumerate() {
                if !seen[j] && cartan[a][b] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        let verts: Vec<usize> = comp.iter().map(|&i| keep[i]).collect();
        factors.push(identify_connected(cartan, norms, &verts)?);
    }
    Ok(ProductType::new(factors))
}

/// Names a connected finite-type Dynkin diagram.
///
/// Simply-laced diagrams are told apart by their branch arms. With a double
/// bond, B_n has more long simple roots than short ones and C_n the reverse;
/// a double bond between two interior vertices is F4.
fn identify_connected(cartan: &[Vec<i64>], norms: &[i64], verts: &[usize]) -> Result<TypeSymbol> {
    let n = verts.len();
    let describe = || {
        let sub: Vec<Vec<i64>> = verts
            .iter()
            .map(|&a| verts.iter().map(|&b| cartan[a][b]).collect())
            .collect();
        format!("{sub:?}")
    };
    let mut degree = vec![0usize; n];
    let mut max_mult = 0;
    let mut double_edge = None;
    let mut edges = 0;
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (cartan[verts[i]][verts[j]], cartan[verts[j]][verts[i]]);
            if a == 0 {
                continue;
            }
            edges += 1;
            degree[i] += 1;
            degree[j] += 1;
            let mult = a * b;
            max_mult = max_mult.max(mult);
            if mult == 2 {
                double_edge = Some((i, j));
            }
        }
    }
    if edges != n - 1 || max_mult > 3 {
        return Err(Error::UnknownDiagram(describe()));
    }
    let ty = match max_mult {
        3 if n == 2 => TypeSymbol::new(Family::G, 2),
        3 => return Err(Error::UnknownDiagram(describe())),
        2 => {
            let (i, j) = double_edge.expect("double edge recorded");
            if degree.iter().any(|&d| d > 2) {
                return Err(Error::UnknownDiagram(describe()));
            }
            if degree[i] == 2 && degree[j] == 2 {
                if n != 4 {
                    return Err(Error::UnknownDiagram(describe()));
                }
                TypeSymbol::new(Family::F, 4)
            } else {
                let long = verts.iter().map(|&v| norms[v]).max().unwrap_or(0);
                let n_long = verts.iter().filter(|&&v| norms[v] == long).count();
                if n_long * 2 >= n {
                    TypeSymbol::new(Family::B, n)
                } else {
                    TypeSymbol::new(Family::C, n)
                }
            }
        }
        _ => {
            let branches: Vec<usize> = (0..n).filter(|&i| degree[i] > 2).collect();
            match branches.as_slice() {
                [] => TypeSymbol::new(Family::A, n),
                [b] if degree[*b] == 3 => {
                    let mut arms = arm_lengths(cartan, verts, *b);
                    arms.sort_unstable();
                    match arms.as_slice() {
                        [1, 1, k] => TypeSymbol::new(Family::D, k + 3),
                        [1, 2, 2] => TypeSymbol::new(Family::E, 6),
                        [1, 2, 3] => TypeSymbol::new(Family::E, 7),
                        [1, 2, 4] => TypeSymbol::new(Family::E, 8),
                        _ => return Err(Error::UnknownDiagram(describe())),
                    }
                }
                _ => return Err(Error::UnknownDiagram(describe())),
            }
        }
    };
    ty
}

fn arm_lengths(cartan: &[Vec<i64>], verts: &[usize], branch: usize) -> Vec<usize> {
    let b = verts[branch];
    let neighbours = |x: usize| {
        verts
            .iter()
            .copied()
            .filter(move |&y| y != x && cartan[x][y] != 0)
    };
    neighbours(b)
        .map(|start| {
            let (mut prev, mut cur, mut len) = (b, start, 1);
            loop {
                match neighbours(cur).find(|&y| y != prev) {
                    Some(next) => {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    None => break len,
                }
            }
        })
        .collect()
}

/// Every irreducible type with rank at most `max_rank` (B from 2, C from 3,
/// D from 4), in canonical order.
pub fn irreducible_types(max_rank: usize) -> Vec<TypeSymbol> {
    let mut out = Vec::new();
    for rank in 1..=max_rank {
        out.push(TypeSymbol { family: Family::A, rank });
        if rank >= 2 {
            out.push(TypeSymbol { family: Family::B, rank });
        }
        if rank >= 3 {
            out.push(TypeSymbol { family: Family::C, rank });
        }
        if rank >= 4 {
            out.push(TypeSymbol { family: Family::D, rank });
        }
        if (6..=8).contains(&rank) {
            out.push(TypeSymbol { family: Family::E, rank });
        }
        if rank == 4 {
            out.push(TypeSymbol { family: Family::F, rank });
        }
        if rank == 2 {
            out.push(TypeSymbol { family: Family::G, rank });
        }
    }
    out.sort();
    out
}

impl RootSystem {
    /// Root indices of the affine simple roots `α_0, α_1, .., α_n` (irreducible
    /// systems only).
    pub fn affine_vertex_roots(&self) -> Result<Vec<usize>> {
        if !self.is_irreducible() {
            return Err(Error::Reducible("the affine Dynkin diagram"));
        }
        let mut v = vec![self.lowest_root(0)];
        v.extend(0..self.rank());
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ts(s: &str) -> TypeSymbol {
        s.parse().unwrap()
    }

    fn pt(s: &str) -> ProductType {
        s.parse().unwrap()
    }

    #[test]
    fn aliases_normalise() {
        assert_eq!(ts("B1"), ts("A1"));
        assert_eq!(ts("C1"), ts("A1"));
        assert_eq!(ts("C2"), ts("B2"));
        assert_eq!(ts("D3"), ts("A3"));
        assert!(matches!("D2".parse::<TypeSymbol>(), Err(Error::InvalidType { .. })));
        assert!(matches!("E5".parse::<TypeSymbol>(), Err(Error::InvalidType { .. })));
        assert!(matches!("F3".parse::<TypeSymbol>(), Err(Error::InvalidType { .. })));
        assert!(matches!("A0".parse::<TypeSymbol>(), Err(Error::InvalidType { .. })));
        assert!(matches!("Q3".parse::<TypeSymbol>(), Err(Error::Parse(_))));
    }

    #[test]
    fn product_parsing_is_canonical() {
        assert_eq!(pt("A3xA1"), pt("A1xA3"));
        assert_eq!(pt("C2*A1").to_string(), "A1xB2");
        assert_eq!(pt("A0").to_string(), "A0");
        assert_eq!(pt("A0").rank(), 0);
        let err = pt_err("A3xZ2");
        assert!(matches!(err, Error::Parse(_)));
    }

    fn pt_err(s: &str) -> Error {
        s.parse::<ProductType>().unwrap_err()
    }

    #[test]
    fn a1_is_smallest() {
        let rs = RootSystem::build(&pt("A1"));
        assert_eq!(rs.num_positive(), 1);
        assert_eq!(rs.cartan(), &[vec![2]]);
        assert_eq!(rs.marks(), &[1]);
    }

    #[test]
    fn positive_root_counts_match_degrees() {
        for t in irreducible_types(8) {
            let rs = RootSystem::from_symbol(t);
            assert_eq!(rs.num_positive(), t.num_positive_roots(), "{t}");
            let n = t.rank();
            let expected = match t.family() {
                Family::A => n * (n + 1) / 2,
                Family::B | Family::C => n * n,
                Family::D => n * (n - 1),
                Family::E => [36, 63, 120][n - 6],
                Family::F => 24,
                Family::G => 6,
            };
            assert_eq!(rs.num_positive(), expected, "{t}");
        }
    }

    #[test]
    fn highest_root_dominates_and_simple_roots_first() {
        for t in irreducible_types(8) {
            let rs = RootSystem::from_symbol(t);
            for i in 0..rs.rank() {
                let mut e = vec![0; rs.rank()];
                e[i] = 1;
                assert_eq!(rs.root(i), e.as_slice());
            }
            let theta = rs.root(rs.factors()[0].highest_root);
            assert_eq!(theta, rs.marks());
            for r in rs.positive_roots() {
                assert!(r.iter().all(|&x| x >= 0));
                assert!(r.iter().zip(theta).all(|(a, b)| a <= b), "{t}: {r:?}");
            }
        }
    }

    #[test]
    fn known_marks() {
        let marks = |s: &str| RootSystem::build(&pt(s)).marks().to_vec();
        assert_eq!(marks("F4"), vec![2, 3, 4, 2]);
        assert_eq!(marks("G2"), vec![3, 2]);
        assert_eq!(marks("D4"), vec![1, 2, 1, 1]);
        assert_eq!(marks("B3"), vec![1, 2, 2]);
        assert_eq!(marks("C3"), vec![2, 2, 1]);
        assert_eq!(marks("E8"), vec![2, 3, 4, 6, 5, 4, 3, 2]);
    }

    #[test]
    fn roots_closed_under_subsystem_axioms() {
        for t in irreducible_types(4) {
            let rs = RootSystem::from_symbol(t);
            for a in rs.roots() {
                let neg: Vec<i64> = a.iter().map(|x| -x).collect();
                assert!(rs.find(&neg).is_some());
                for b in rs.roots() {
                    // the reflection of b in a is a root
                    let k = rs.pairing(b, a);
                    let refl: Vec<i64> = b.iter().zip(a).map(|(x, y)| x - k * y).collect();
                    assert!(rs.find(&refl).is_some(), "{t}");
                }
            }
        }
    }

    #[test]
    fn b2_has_four_positive_roots_and_order_eight() {
        let rs = RootSystem::build(&pt("C2"));
        assert_eq!(rs.num_positive(), 4);
        assert_eq!(rs.degrees(), vec![2, 4]);
        assert_eq!(rs.weyl_order(), BigUint::from(8u32));
    }

    #[test]
    fn type_invariant_examples() {
        let inv = type_invariants(&pt("A1"));
        assert_eq!(inv.weyl_order, 2u32.into());
        assert_eq!(inv.degrees, vec![2]);
        assert_eq!(inv.exponent_product, 1u32.into());
        assert_eq!(inv.center_order, 2u32.into());

        let inv = type_invariants(&pt("F4"));
        assert_eq!(inv.weyl_order, 1152u32.into());
        assert_eq!(inv.exponent_product, 385u32.into());
        assert_eq!(inv.center_order, 1u32.into());

        let inv = type_invariants(&pt("A2"));
        assert_eq!(inv.weyl_order, 6u32.into());
        assert_eq!(inv.center_order, 3u32.into());
    }

    #[test]
    fn center_order_is_multiplicative() {
        let z = |s: &str| type_invariants(&pt(s)).center_order;
        for (a, b) in [("A2", "B3"), ("D4", "A3"), ("E6", "C3"), ("G2", "A1")] {
            assert_eq!(z(&format!("{a}x{b}")), z(a) * z(b));
        }
        assert_eq!(z("D4"), 4u32.into());
        assert_eq!(z("D5"), 4u32.into());
        assert_eq!(z("E7"), 2u32.into());
        assert_eq!(z("E8"), 1u32.into());
    }

    #[test]
    fn affine_a1_has_a_double_type_bond() {
        let g = RootSystem::build(&pt("A1")).affine_diagram().unwrap();
        assert_eq!(g.cartan[1][0], -2);
        assert_eq!(g.cartan[0][1], -2);
        assert_eq!(g.edges.len(), 1);
        assert_eq!(g.edges[0].multiplicity, 2);
        assert_eq!(g.edges[0].toward, None);
    }

    #[test]
    fn affine_f4_is_a_marked_path() {
        let g = RootSystem::build(&pt("F4")).affine_diagram().unwrap();
        let mut e: Vec<(usize, usize, u8)> = g.edges.iter().map(|e| (e.u, e.v, e.multiplicity)).collect();
        e.sort();
        assert_eq!(e, vec![(0, 1, 1), (1, 2, 1), (2, 3, 2), (3, 4, 1)]);
        assert_eq!(g.edges.iter().find(|e| e.multiplicity == 2).unwrap().toward, Some(3));
        assert_eq!(g.marks, vec![1, 2, 3, 4, 2]);
    }

    #[test]
    fn affine_d4_is_a_star() {
        let g = RootSystem::build(&pt("D4")).affine_diagram().unwrap();
        assert_eq!(g.marks, vec![1, 1, 2, 1, 1]);
        for e in &g.edges {
            assert!(e.u == 2 || e.v == 2);
        }
        assert_eq!(g.edges.len(), 4);
    }

    #[test]
    fn affine_diagram_needs_irreducible() {
        let rs = RootSystem::build(&pt("A1xA1"));
        assert_eq!(rs.affine_diagram(), Err(Error::Reducible("the affine Dynkin diagram")));
    }

    #[test]
    fn delete_vertex_examples() {
        let f4 = RootSystem::build(&pt("F4")).affine_diagram().unwrap();
        assert_eq!(f4.delete_vertex(0).unwrap(), pt("F4"));
        assert_eq!(f4.delete_vertex(2).unwrap(), pt("A2xA2"));
        assert_eq!(f4.delete_vertex(1).unwrap(), pt("A1xC3"));
        assert_eq!(f4.delete_vertex(3).unwrap(), pt("A3xA1"));
        assert_eq!(f4.delete_vertex(4).unwrap(), pt("B4"));

        let g2 = RootSystem::build(&pt("G2")).affine_diagram().unwrap();
        // vertex 0 is attached to the long simple root α_2
        assert_ne!(g2.cartan[0][2], 0);
        assert_eq!(g2.delete_vertex(2).unwrap(), pt("A1xA1"));
        assert_eq!(g2.delete_vertex(1).unwrap(), pt("A2"));
    }

    #[test]
    fn deleting_vertex_zero_gives_the_type() {
        for t in irreducible_types(8) {
            let g = RootSystem::from_symbol(t).affine_diagram().unwrap();
            assert_eq!(g.delete_vertex(0).unwrap(), t.into(), "{t}");
        }
    }

    #[test]
    fn automorphism_groups() {
        let aut = |s: &str| RootSystem::build(&pt(s)).affine_diagram().unwrap().automorphisms();
        for n in 2..=6 {
            let (g, q) = aut(&format!("A{n}"));
            assert_eq!(g.len(), 2 * (n + 1));
            assert_eq!(q.len(), 1);
        }
        assert_eq!(aut("A1").0.len(), 2);
        let (g, q) = aut("F4");
        assert_eq!(g.len(), 1);
        assert_eq!(q.len(), 5);
        for n in 3..=6 {
            let (g, _) = aut(&format!("C{n}"));
            assert_eq!(g.len(), 2);
            let swap = &g[1];
            for p in 0..=n {
                assert_eq!(swap[p], n - p);
            }
        }
        assert_eq!(aut("D4").0.len(), 24);
        assert_eq!(aut("D5").0.len(), 8);
        assert_eq!(aut("E6").0.len(), 6);
        assert_eq!(aut("E7").0.len(), 2);
        assert_eq!(aut("E8").0.len(), 1);
        assert_eq!(aut("G2").0.len(), 1);
        assert_eq!(aut("B3").0.len(), 2);
    }
}
