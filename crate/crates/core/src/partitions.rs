//! Integer partitions and the type A layer formulas written in terms of them.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::poly::IntPolynomial;

/// All partitions of `n`, parts in non-increasing order, listed in reverse
/// lexicographic order (`[n]` first).
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn factorial(k: u32) -> BigUint {
    (1..=k).map(BigUint::from).product()
}

/// `b_λ = Π_i (i!)^{b_i} b_i!` where `b_i` counts the parts equal to `i`.
pub fn b_lambda(lambda: &[u32]) -> BigUint {
    let mut out = BigUint::one();
    let mut k = 0;
    while k < lambda.len() {
        let part = lambda[k];
        let mult = lambda[k..].iter().take_while(|&&x| x == part).count() as u32;
        out *= factorial(part).pow(mult) * factorial(mult);
        k += mult as usize;
    }
    out
}

/// `g_λ`, the gcd of the parts.
pub fn g_lambda(lambda: &[u32]) -> u32 {
    lambda.iter().fold(0, |g, &x| g.gcd(&x))
}

/// Layer counts of the arrangement of type `A_{n-1}` in dimension `d`, per
/// partition of `n` into `d + 1` parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ASeriesCensus {
    pub total: BigUint,
    /// `(λ, n! g_λ / b_λ)`
    pub parts: Vec<(Vec<u32>, BigUint)>,
}

pub fn a_series_census(n: u32, d: usize) -> ASeriesCensus {
    let nf = factorial(n);
    let parts: Vec<(Vec<u32>, BigUint)> = partitions(n)
        .into_iter()
        .filter(|l| l.len() == d + 1)
        .map(|l| {
            let count = &nf * BigUint::from(g_lambda(&l)) / b_lambda(&l);
            (l, count)
        })
        .collect();
    ASeriesCensus {
        total: parts.iter().map(|(_, c)| c).sum(),
        parts,
    }
}

/// Poincaré polynomial of the complement for type `A_{n-1}` (rank `n - 1`):
/// `Σ_λ (q+1)^d q^{n-1-d} n! g_λ (λ_1-1)!..(λ_k-1)! / b_λ` with `d = |λ| - 1`.
pub fn a_series_poincare(n: u32) -> IntPolynomial {
    let rank = n as usize - 1;
    let nf = factorial(n);
    let mut p = IntPolynomial::zero();
    for l in partitions(n) {
        let d = l.len() - 1;
        let fact: BigUint = l.iter().map(|&x| factorial(x - 1)).product();
        let c = &nf * BigUint::from(g_lambda(&l)) * fact / b_lambda(&l);
        p = &p + &IntPolynomial::layer_term(rank, d).scale(&c.into());
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn b_and_g() {
        assert_eq!(b_lambda(&[3]), 6u32.into());
        assert_eq!(b_lambda(&[2, 1]), 2u32.into());
        assert_eq!(b_lambda(&[1, 1, 1]), 6u32.into());
        assert_eq!(b_lambda(&[2, 2]), 8u32.into());
        assert_eq!(g_lambda(&[4, 2]), 2);
        assert_eq!(g_lambda(&[3, 2]), 1);
    }

    #[test]
    fn a2_by_hand() {
        assert_eq!(a_series_census(3, 0).total, 3u32.into());
        assert_eq!(a_series_census(3, 1).total, 3u32.into());
        assert_eq!(a_series_census(3, 2).total, 1u32.into());
        assert_eq!(a_series_poincare(3), IntPolynomial::from_i64(&[1, 5, 10]));
        assert_eq!(a_series_poincare(2), IntPolynomial::from_i64(&[1, 3]));
    }

    #[test]
    fn number_of_flats_is_stirling() {
        // n!/b_λ summed over partitions with k parts is S(n, k)
        let s = |n: u32, d: usize| -> BigUint {
            let nf = factorial(n);
            partitions(n).into_iter().filter(|l| l.len() == d + 1).map(|l| &nf / b_lambda(&l)).sum()
        };
        assert_eq!(s(5, 1), 15u32.into());
        assert_eq!(s(5, 2), 25u32.into());
        assert_eq!(s(6, 2), 90u32.into());
    }
}
