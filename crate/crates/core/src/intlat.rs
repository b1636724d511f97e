//! Integer lattice algebra over arbitrary-precision integers.
//!
//! A lattice is always given by a matrix whose *rows* generate it inside
//! `Z^cols`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of machine integers. All rows must have
    /// length `cols`.
    pub fn from_rows<R: AsRef<[i64]>>(cols: usize, rows: &[R]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "row {i} has wrong length");
            for (j, &x) in r.iter().enumerate() {
                m[(i, j)] = BigInt::from(x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_i64(&self, i: usize) -> Option<Vec<i64>> {
        self.row(i).iter().map(|x| x.to_i64()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    pub fn rank(&self) -> usize {
        hermite_normal_form(self).rows
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self[(src, j)] * factor;
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self[(i, src)] * factor;
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// `left * m * right == diag(diagonal)` with `left`, `right` unimodular.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    pub left: IntMatrix,
    pub right: IntMatrix,
    pub left_inv: IntMatrix,
    pub right_inv: IntMatrix,
    /// `min(rows, cols)` entries; the nonzero ones come first and form a
    /// divisibility chain.
    pub diagonal: Vec<BigInt>,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().take_while(|d| !d.is_zero()).count()
    }

    pub fn elementary_divisors(&self) -> &[BigInt] {
        &self.diagonal[..self.rank()]
    }

    /// The diagonal matrix with the shape of the input.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.left.rows(), self.right.rows());
        for (i, x) in self.diagonal.iter().enumerate() {
            d[(i, i)] = x.clone();
        }
        d
    }
}

/// Smith normal form with transforms.
///
/// Pivots on the entry of least nonzero absolute value in the trailing block,
/// ties broken by lowest row and then lowest column, so the decomposition is
/// reproducible.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut left = IntMatrix::identity(rows);
    let mut left_inv = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);
    let mut right_inv = IntMatrix::identity(cols);

    let steps = rows.min(cols);
    for t in 0..steps {
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let v = &a[(i, j)];
                    if v.is_zero() {
                        continue;
                    }
                    match pivot {
                        Some((pi, pj)) if a[(pi, pj)].abs() <= v.abs() => {}
                        _ => pivot = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            a.swap_rows(t, pi);
            left.swap_rows(t, pi);
            left_inv.swap_cols(t, pi);
            a.swap_cols(t, pj);
            right.swap_cols(t, pj);
            right_inv.swap_rows(t, pj);

            let p = a[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&p);
                let nq = -&q;
                a.add_row(i, t, &nq);
                left.add_row(i, t, &nq);
                left_inv.add_col(t, i, &q);
                if !a[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&p);
                let nq = -&q;
                a.add_col(j, t, &nq);
                right.add_col(j, t, &nq);
                right_inv.add_row(t, j, &q);
                if !a[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into the pivot row
            let offending = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&p)));
            match offending {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row(t, i, &one);
                    left.add_row(t, i, &one);
                    left_inv.add_col(i, t, &(-one));
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            left.negate_row(t);
            left_inv.negate_col(t);
        }
    }

    let diagonal = (0..steps).map(|i| a[(i, i)].clone()).collect();
    SmithDecomposition {
        left,
        right,
        left_inv,
        right_inv,
        diagonal,
    }
}

/// Order of the torsion subgroup of `Z^cols / L` where `L` is spanned by the
/// rows of `generators`.
pub fn quotient_torsion(generators: &IntMatrix) -> BigInt {
    smith_normal_form(generators)
        .elementary_divisors()
        .iter()
        .product()
}

/// Exponent of the torsion subgroup of `Z^cols / L` (largest elementary
/// divisor, or 1 when torsion-free).
pub fn quotient_exponent(generators: &IntMatrix) -> BigInt {
    smith_normal_form(generators)
        .elementary_divisors()
        .last()
        .cloned()
        .unwrap_or_else(BigInt::one)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Saturation {
    /// Basis of `span_Q(L) ∩ Z^cols` in Hermite normal form.
    pub basis: IntMatrix,
    /// `[saturation : L]`.
    pub index: BigInt,
}

impl Saturation {
    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// Coordinates of `v` in the saturated basis, or `None` when `v` is not in
    /// the rational span.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        hermite_coordinates(&self.basis, v)
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        let v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.coordinates(&v).is_some()
    }
}

/// Saturation of the lattice spanned by the rows of `generators`.
pub fn saturate(generators: &IntMatrix) -> Saturation {
    let snf = smith_normal_form(generators);
    let r = snf.rank();
    // generators = left_inv * D * right_inv, so L is spanned by d_i times the
    // first r rows of right_inv, which extend to a basis of Z^cols.
    let mut basis = IntMatrix::zeros(r, generators.cols);
    for i in 0..r {
        for j in 0..generators.cols {
            basis[(i, j)] = snf.right_inv[(i, j)].clone();
        }
    }
    Saturation {
        basis: hermite_normal_form(&basis),
        index: snf.elementary_divisors().iter().product(),
    }
}

/// Row-style Hermite normal form of the lattice spanned by the rows: upper
/// echelon, positive pivots, entries above each pivot reduced into
/// `[0, pivot)`. Zero rows are dropped, so the result is a basis.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == rows {
            break;
        }
        // gcd-combine column c into row r
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows {
                if a[(i, c)].is_zero() {
                    continue;
                }
                if best.is_none_or(|b| a[(i, c)].abs() < a[(b, c)].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            a.swap_rows(r, b);
            let p = a[(r, c)].clone();
            let mut done = true;
            for i in r + 1..rows {
                if a[(i, c)].is_zero() {
                    continue;
                }
                let q = -a[(i, c)].div_floor(&p);
                a.add_row(i, r, &q);
                if !a[(i, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[(r, c)].is_zero() {
            continue;
        }
        if a[(r, c)].is_negative() {
            a.negate_row(r);
        }
        let p = a[(r, c)].clone();
        for i in 0..r {
            let q = -a[(i, c)].div_floor(&p);
            a.add_row(i, r, &q);
        }
        pivots.push(c);
        r += 1;
    }
    let mut out = IntMatrix::zeros(r, cols);
    for i in 0..r {
        for j in 0..cols {
            out[(i, j)] = a[(i, j)].clone();
        }
    }
    out
}

/// Integer coordinates of `v` with respect to an HNF basis, if `v` lies in
/// the lattice it spans.
pub fn hermite_coordinates(hnf: &IntMatrix, v: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(v.len(), hnf.cols);
    let mut rest = v.to_vec();
    let mut coords = Vec::with_capacity(hnf.rows);
    for i in 0..hnf.rows {
        let c = (0..hnf.cols).find(|&j| !hnf[(i, j)].is_zero())?;
        let (q, r) = rest[c].div_rem(&hnf[(i, c)]);
        if !r.is_zero() {
            return None;
        }
        for j in 0..hnf.cols {
            rest[j] -= &q * &hnf[(i, j)];
        }
        coords.push(q);
    }
    rest.iter().all(Zero::is_zero).then_some(coords)
}

/// Rank of a small machine-integer matrix by fraction-free elimination.
pub fn rank_i64<R: AsRef<[i64]>>(rows: &[R]) -> usize {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.as_ref().iter().map(|&x| x as i128).collect())
        .collect();
    let Some(cols) = a.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..a.len() {
            if a[i][c] == 0 {
                continue;
            }
            let (x, y) = (a[rank][c], a[i][c]);
            let mut g = 0i128;
            for j in 0..cols {
                a[i][j] = a[i][j] * x - a[rank][j] * y;
                g = g.gcd(&a[i][j]);
            }
            if g > 1 {
                a[i].iter_mut().for_each(|v| *v /= g);
            }
        }
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn divisors(rows: &[&[i64]]) -> Vec<i64> {
        let cols = rows[0].len();
        let m = IntMatrix::from_rows(cols, rows);
        smith_normal_form(&m)
            .diagonal
            .iter()
            .map(|d| d.to_i64().unwrap())
            .collect()
    }

    fn check_decomposition(m: &IntMatrix) {
        let s = smith_normal_form(m);
        assert_eq!(s.left.mul(m).mul(&s.right), s.diagonal_matrix());
        assert_eq!(s.left_inv.mul(&s.diagonal_matrix()).mul(&s.right_inv), *m);
        assert_eq!(s.left.mul(&s.left_inv), IntMatrix::identity(m.rows()));
        assert_eq!(s.right.mul(&s.right_inv), IntMatrix::identity(m.cols()));
        assert!(s.left.det().abs().is_one());
        assert!(s.right.det().abs().is_one());
        let r = s.rank();
        for w in s.diagonal[..r].windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        assert!(s.diagonal[r..].iter().all(Zero::is_zero));
        assert!(s.diagonal[..r].iter().all(|d| d.is_positive()));
    }

    #[test]
    fn smith_small_cases() {
        assert_eq!(divisors(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), vec![1, 1, 1]);
        assert_eq!(divisors(&[&[2, 0], &[0, 3]]), vec![1, 6]);
        assert_eq!(divisors(&[&[2, 1], &[0, 2]]), vec![1, 4]);
        assert_eq!(divisors(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]), vec![2, 6, 12]);
        assert_eq!(divisors(&[&[0, 0], &[0, 0]]), vec![0, 0]);
    }

    #[test]
    fn smith_is_reproducible() {
        let m = IntMatrix::from_rows(3, &[[4, 6, 2], [3, -3, 9]]);
        let a = smith_normal_form(&m);
        let b = smith_normal_form(&m);
        assert_eq!(a.left, b.left);
        assert_eq!(a.right, b.right);
        check_decomposition(&m);
    }

    #[test]
    fn torsion_examples() {
        assert_eq!(quotient_torsion(&IntMatrix::identity(4)), BigInt::one());
        assert_eq!(quotient_torsion(&IntMatrix::from_rows(2, &[[2, 0]])), BigInt::from(2));
        // B2 = C2 simple roots in the weight basis (columns of the Cartan matrix)
        let c2 = IntMatrix::from_rows(2, &[[2, -1], [-2, 2]]);
        assert_eq!(quotient_torsion(&c2), BigInt::from(2));
        assert_eq!(quotient_torsion(&IntMatrix::zeros(0, 3)), BigInt::one());
    }

    #[test]
    fn saturation_examples() {
        let s = saturate(&IntMatrix::from_rows(2, &[[2, 0]]));
        assert_eq!(s.basis, IntMatrix::from_rows(2, &[[1, 0]]));
        assert_eq!(s.index, BigInt::from(2));

        let s = saturate(&IntMatrix::from_rows(2, &[[1, 1], [0, 1]]));
        assert_eq!(s.index, BigInt::one());

        let s = saturate(&IntMatrix::from_rows(3, &[[1, 1, 0], [1, -1, 0]]));
        assert_eq!(s.index, BigInt::from(2));
        assert_eq!(s.basis, IntMatrix::from_rows(3, &[[1, 0, 0], [0, 1, 0]]));
        assert!(s.contains(&[5, -7, 0]));
        assert!(!s.contains(&[0, 0, 1]));
    }

    #[test]
    fn hermite_form_is_canonical() {
        let a = hermite_normal_form(&IntMatrix::from_rows(3, &[[1, 1, 0], [0, 1, 1]]));
        let b = hermite_normal_form(&IntMatrix::from_rows(3, &[[1, 2, 1], [-1, 0, 1], [0, 1, 1]]));
        assert_eq!(a, b);
        assert_eq!(a.rows(), 2);
    }

    #[test]
    fn det_and_rank() {
        let m = IntMatrix::from_rows(3, &[[2, -1, 0], [-1, 2, -1], [0, -1, 2]]);
        assert_eq!(m.det(), BigInt::from(4));
        assert_eq!(rank_i64(&[[1, 2, 3], [2, 4, 6], [0, 1, 1]]), 2);
        assert_eq!(rank_i64(&[[0, 0], [0, 0]]), 0);
    }

    fn small_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-9i64..=9, r * c).prop_map(move |v| {
                let rows: Vec<Vec<i64>> = v.chunks(c).map(<[i64]>::to_vec).collect();
                IntMatrix::from_rows(c, &rows)
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn smith_round_trip(m in small_matrix()) {
            check_decomposition(&m);
        }

        #[test]
        fn torsion_invariant_under_unimodular_ops(m in small_matrix(), f in -3i64..=3) {
            let base = quotient_torsion(&m);
            let mut n = m.clone();
            if n.rows() > 1 {
                n.add_row(1, 0, &BigInt::from(f));
                n.swap_rows(0, n.rows() - 1);
            }
            if n.cols() > 1 {
                n.add_col(0, n.cols() - 1, &BigInt::from(f));
                n.negate_col(1);
            }
            prop_assert_eq!(quotient_torsion(&n), base);
        }

        #[test]
        fn saturation_index_is_torsion_inside_saturation(m in small_matrix()) {
            let sat = saturate(&m);
            // express the generators in the saturated basis
            let mut coords = IntMatrix::zeros(m.rows(), sat.rank());
            for i in 0..m.rows() {
                let c = sat.coordinates(m.row(i)).expect("generator outside its own saturation");
                for (j, x) in c.into_iter().enumerate() {
                    coords[(i, j)] = x;
                }
            }
            prop_assert_eq!(quotient_torsion(&coords), sat.index.clone());
            prop_assert_eq!(coords.rank(), sat.rank());
            prop_assert_eq!(m.rank(), sat.rank());
        }
    }
}
