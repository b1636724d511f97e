//! Subsystems of a root system, their completions, and the families `K_d` of
//! complete subsystems of rank `n - d`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;

use crate::config::Capabilities;
use crate::error::{Error, Result};
use crate::intlat::{self, IntMatrix, Saturation};
use crate::rootsys::{identify_diagram, Family, ProductType, RootSystem};
use crate::weyl::WeylGroup;

/// A closed subsystem, as a sorted set of root indices of the ambient system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subsystem {
    pub roots: Vec<u32>,
    pub rank: usize,
    pub complete: bool,
    pub ty: ProductType,
    /// Saturated basis of the rational span, in Hermite normal form.
    pub span_basis: IntMatrix,
}

impl Subsystem {
    /// Validates closure and computes rank, type and completeness.
    pub fn new(rs: &RootSystem, roots: &[u32]) -> Result<Subsystem> {
        let mut roots = roots.to_vec();
        roots.sort_unstable();
        roots.dedup();
        let ty = decompose_type(rs, &roots)?;
        let sat = span_saturation(rs, &roots);
        let complete = completion_of_span(rs, &sat) == roots;
        Ok(Subsystem {
            rank: sat.rank(),
            complete,
            ty,
            span_basis: sat.basis,
            roots,
        })
    }

    pub fn positive_roots<'a>(&'a self, rs: &'a RootSystem) -> impl Iterator<Item = u32> + 'a {
        self.roots
            .iter()
            .copied()
            .filter(move |&r| rs.is_positive(r as usize))
    }

    /// Simple roots of the subsystem: the positive roots (for the ambient
    /// ordering) that are not a sum of two positive roots of the subsystem.
    pub fn simple_roots(&self, rs: &RootSystem) -> Vec<u32> {
        simple_roots_of(rs, &self.roots)
    }

    pub fn contains(&self, root: u32) -> bool {
        self.roots.binary_search(&root).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subsystem) -> bool {
        self.roots.iter().all(|&r| other.contains(r))
    }
}

fn span_saturation(rs: &RootSystem, roots: &[u32]) -> Saturation {
    let rows: Vec<&[i64]> = roots.iter().map(|&r| rs.root(r as usize)).collect();
    intlat::saturate(&IntMatrix::from_rows(rs.rank(), &rows))
}

fn completion_of_span(rs: &RootSystem, sat: &Saturation) -> Vec<u32> {
    (0..rs.num_roots() as u32)
        .filter(|&r| sat.contains(rs.root(r as usize)))
        .collect()
}

/// All roots in the rational span of `roots`.
pub fn completion(rs: &RootSystem, roots: &[u32]) -> Subsystem {
    let sat = span_saturation(rs, roots);
    let closed = completion_of_span(rs, &sat);
    let ty = decompose_type(rs, &closed).expect("a completion is closed");
    Subsystem {
        roots: closed,
        rank: sat.rank(),
        complete: true,
        ty,
        span_basis: sat.basis,
    }
}

fn check_closed(rs: &RootSystem, roots: &[u32]) -> Result<()> {
    let set: BTreeSet<u32> = roots.iter().copied().collect();
    for &a in roots {
        if !set.contains(&(rs.negative(a as usize) as u32)) {
            return Err(Error::NotClosed(format!(
                "missing the negative of {:?}",
                rs.root(a as usize)
            )));
        }
        for &b in roots {
            let sum: Vec<i64> = rs
                .root(a as usize)
                .iter()
                .zip(rs.root(b as usize))
                .map(|(x, y)| x + y)
                .collect();
            if let Some(c) = rs.find(&sum) {
                if !set.contains(&(c as u32)) {
                    return Err(Error::NotClosed(format!("missing the root {sum:?}")));
                }
            }
        }
    }
    Ok(())
}

fn simple_roots_of(rs: &RootSystem, roots: &[u32]) -> Vec<u32> {
    let positive: Vec<u32> = roots
        .iter()
        .copied()
        .filter(|&r| rs.is_positive(r as usize))
        .collect();
    let set: BTreeSet<u32> = positive.iter().copied().collect();
    positive
        .iter()
        .copied()
        .filter(|&g| {
            let gamma = rs.root(g as usize);
            !positive.iter().any(|&a| {
                let diff: Vec<i64> = gamma
                    .iter()
                    .zip(rs.root(a as usize))
                    .map(|(x, y)| x - y)
                    .collect();
                rs.find(&diff).is_some_and(|d| set.contains(&(d as u32)))
            })
        })
        .collect()
}

/// Type of a closed subsystem, read off the Dynkin diagram of its simple
/// roots.
pub fn decompose_type(rs: &RootSystem, roots: &[u32]) -> Result<ProductType> {
    check_closed(rs, roots)?;
    let simple = simple_roots_of(rs, roots);
    let vecs: Vec<&[i64]> = simple.iter().map(|&r| rs.root(r as usize)).collect();
    let cartan: Vec<Vec<i64>> = vecs
        .iter()
        .map(|a| vecs.iter().map(|b| rs.pairing(b, a)).collect())
        .collect();
    let norms: Vec<i64> = vecs.iter().map(|a| rs.norm(a)).collect();
    let all: Vec<usize> = (0..vecs.len()).collect();
    identify_diagram(&cartan, &norms, &all)
}

/// A W-orbit inside a [`CompleteFamily`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitClass {
    /// Index into `members` of the lexicographically least member.
    pub representative: usize,
    pub members: Vec<usize>,
}

impl OrbitClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[derive(Debug, Clone)]
pub struct CompleteFamily {
    pub d: usize,
    /// Sorted by root-index set.
    pub members: Vec<Subsystem>,
    /// Sorted by representative.
    pub orbits: Vec<OrbitClass>,
}

impl CompleteFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn representative(&self, orbit: &OrbitClass) -> &Subsystem {
        &self.members[orbit.representative]
    }
}

/// Refuses enumeration beyond the configured capability.
pub fn check_enumerable(ty: &ProductType, caps: &Capabilities) -> Result<()> {
    let factors = ty.factors();
    if factors.iter().any(|t| t.family() == Family::E && t.rank() >= 7) {
        return Err(Error::capability(
            format!("complete-subsystem enumeration for {ty}"),
            "E7 and E8 are formula-only",
        ));
    }
    let has_e6 = factors.iter().any(|t| t.family() == Family::E);
    if has_e6 {
        return if caps.allow_e6 {
            Ok(())
        } else {
            Err(Error::capability(
                format!("complete-subsystem enumeration for {ty}"),
                "E6 needs --allow-e6",
            ))
        };
    }
    let rank = ty.rank();
    let all_a = factors.iter().all(|t| t.family() == Family::A);
    if rank <= caps.enum_rank || (all_a && rank <= 7) {
        Ok(())
    } else {
        Err(Error::capability(
            format!("complete-subsystem enumeration for {ty} (rank {rank})"),
            format!("--enum-rank {} (type A up to rank 7)", caps.enum_rank),
        ))
    }
}

/// All complete subsystems, indexed by rank (`levels[r]` has rank `r`), each
/// level sorted by root-index set.
///
/// Rank `r + 1` complete subsystems are the completions of `Θ ∪ {β}` for
/// `Θ` of rank `r`; every one arises this way since its span contains a
/// rank-`r` span of roots.
pub fn complete_levels(rs: &RootSystem, max_rank: usize, caps: &Capabilities) -> Result<Vec<Vec<Subsystem>>> {
    check_enumerable(rs.product_type(), caps)?;
    let n = rs.rank();
    let max_rank = max_rank.min(n);
    let empty = Subsystem {
        roots: Vec::new(),
        rank: 0,
        complete: true,
        ty: ProductType::empty(),
        span_basis: IntMatrix::zeros(0, n),
    };
    let mut levels = vec![vec![empty]];
    for r in 0..max_rank {
        let mut next: BTreeMap<Vec<u32>, Subsystem> = BTreeMap::new();
        for theta in &levels[r] {
            let mut covered: BTreeSet<u32> = theta.roots.iter().copied().collect();
            for beta in 0..rs.num_positive() as u32 {
                if covered.contains(&beta) {
                    continue;
                }
                let extended = extend_completion(rs, theta, beta);
                covered.extend(extended.roots.iter().copied());
                next.entry(extended.roots.clone()).or_insert(extended);
            }
        }
        levels.push(next.into_values().collect());
    }
    Ok(levels)
}

fn extend_completion(rs: &RootSystem, theta: &Subsystem, beta: u32) -> Subsystem {
    let n = rs.rank();
    let mut rows: Vec<Vec<i64>> = (0..theta.span_basis.rows())
        .map(|i| theta.span_basis.row_i64(i).expect("small basis entries"))
        .collect();
    rows.push(rs.root(beta as usize).to_vec());
    let sat = intlat::saturate(&IntMatrix::from_rows(n, &rows));
    let roots = completion_of_span(rs, &sat);
    let ty = decompose_type(rs, &roots).expect("a completion is closed");
    Subsystem {
        roots,
        rank: sat.rank(),
        complete: true,
        ty,
        span_basis: sat.basis,
    }
}

/// `K_d`: complete subsystems of rank `n - d`, with their W-orbits.
pub fn enumerate_complete(rs: &RootSystem, d: usize, caps: &Capabilities) -> Result<CompleteFamily> {
    let n = rs.rank();
    if d > n {
        return Err(Error::IndexOutOfRange { index: d, rank: n });
    }
    let mut levels = complete_levels(rs, n - d, caps)?;
    let members = levels.swap_remove(n - d);
    let w = WeylGroup::new(rs, caps.max_group_order);
    let orbits = w_orbit_census(&members, &w)?;
    Ok(CompleteFamily { d, members, orbits })
}

/// Every `K_d`, indexed by `d`.
pub fn enumerate_all(rs: &RootSystem, caps: &Capabilities) -> Result<Vec<CompleteFamily>> {
    let n = rs.rank();
    let levels = complete_levels(rs, n, caps)?;
    let w = WeylGroup::new(rs, caps.max_group_order);
    let mut out = Vec::with_capacity(n + 1);
    for (r, members) in levels.into_iter().enumerate().rev() {
        let orbits = w_orbit_census(&members, &w)?;
        out.push(CompleteFamily {
            d: n - r,
            members,
            orbits,
        });
    }
    Ok(out)
}

/// Partition of `members` into W-orbits, via the generators' action on
/// root-index sets.
pub fn w_orbit_census(members: &[Subsystem], w: &WeylGroup<'_>) -> Result<Vec<OrbitClass>> {
    let index: HashMap<&[u32], usize> = members
        .iter()
        .enumerate()
        .map(|(i, s)| (s.roots.as_slice(), i))
        .collect();
    let mut assigned = vec![false; members.len()];
    let mut orbits = Vec::new();
    for i in 0..members.len() {
        if assigned[i] {
            continue;
        }
        let orbit = w.root_set_orbit(&members[i].roots)?;
        let mut ids: Vec<usize> = orbit
            .points
            .iter()
            .map(|p| {
                index.get(p.as_slice()).copied().ok_or_else(|| {
                    Error::Inexact("W-image of a complete subsystem is missing from K_d".into())
                })
            })
            .collect::<Result<_>>()?;
        ids.sort_unstable();
        for &j in &ids {
            assigned[j] = true;
        }
        orbits.push(OrbitClass {
            representative: ids[0],
            members: ids,
        });
    }
    Ok(orbits)
}

/// Canonical span key (saturated HNF basis, as machine integers) of an
/// arbitrary root subset.
pub fn span_key(rs: &RootSystem, roots: &[u32]) -> Vec<Vec<BigInt>> {
    let sat = span_saturation(rs, roots);
    (0..sat.basis.rows()).map(|i| sat.basis.row(i).to_vec()).collect()
}
