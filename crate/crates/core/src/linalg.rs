//! Dense matrices over Q(i): exact fraction-free rank, a tolerance-based
//! floating rank, and span dimensions.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::LinalgError;
use crate::scalar::Scalar;

/// Pivot threshold for the floating rank path.
pub const DEFAULT_FLOAT_TOL: f64 = 1e-9;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Builds a matrix from equal-length rows. An empty list gives a 0×0 matrix.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(LinalgError::LengthMismatch { expected: cols, found: bad.len() });
        }
        let n = rows.len();
        Ok(Mat { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must equal rows * cols");
        Mat { rows, cols, data: entries.iter().map(|&e| Scalar::from_i64(e)).collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, rhs: &Mat) -> Result<Mat, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::LengthMismatch { expected: self.cols, found: rhs.rows });
        }
        Ok(Mat::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| &self[(i, k)] * &rhs[(k, j)]).sum()
        }))
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    /// Exact rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        rank_of_rows(self.data.chunks(self.cols.max(1)).take(self.rows))
    }

    /// Rank on the floating path: rows are scaled to unit max-norm, then
    /// eliminated with complete pivoting; pivots of magnitude `<= tol` stop
    /// the count.
    pub fn rank_float(&self, tol: f64) -> usize {
        let mut a: Vec<Vec<(f64, f64)>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(Scalar::to_f64_pair).collect())
            .collect();
        for row in &mut a {
            let m = row.iter().map(|&z| cabs(z)).fold(0.0, f64::max);
            if m > 0.0 {
                for z in row.iter_mut() {
                    *z = (z.0 / m, z.1 / m);
                }
            }
        }
        let (n, c) = (self.rows, self.cols);
        let mut rank = 0;
        let mut col_perm: Vec<usize> = (0..c).collect();
        while rank < n.min(c) {
            let mut best = (0.0, rank, rank);
            for i in rank..n {
                for (jj, &j) in col_perm.iter().enumerate().skip(rank) {
                    let v = cabs(a[i][j]);
                    if v > best.0 {
                        best = (v, i, jj);
                    }
                }
            }
            if best.0 <= tol {
                break;
            }
            a.swap(rank, best.1);
            col_perm.swap(rank, best.2);
            let pc = col_perm[rank];
            let piv = a[rank][pc];
            for i in rank + 1..n {
                let f = cdiv(a[i][pc], piv);
                for &j in &col_perm[rank..] {
                    let p = cmul(f, a[rank][j]);
                    a[i][j] = (a[i][j].0 - p.0, a[i][j].1 - p.1);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Determinant by Gaussian elimination over the field.
    pub fn det(&self) -> Result<Scalar, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Scalar::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[(i, k)].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != k {
                for j in 0..n {
                    a.data.swap(p * n + j, k * n + j);
                }
                det = -det;
            }
            let piv = a[(k, k)].clone();
            det = &det * &piv;
            let inv = piv.inv().expect("nonzero pivot");
            for i in k + 1..n {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let f = &a[(i, k)] * &inv;
                for j in k..n {
                    let t = &f * &a[(k, j)];
                    a[(i, j)] -= t;
                }
            }
        }
        Ok(det)
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

/// Rank of the matrix whose rows are `vs`; all vectors must share a length.
pub fn span_dim(vs: &[Vec<Scalar>]) -> Result<usize, LinalgError> {
    if let Some(first) = vs.first() {
        if let Some(bad) = vs.iter().find(|v| v.len() != first.len()) {
            return Err(LinalgError::LengthMismatch { expected: first.len(), found: bad.len() });
        }
    }
    Ok(rank_of_rows(vs.iter().map(Vec::as_slice)))
}

/// Same as [`span_dim`] on the floating path.
pub fn span_dim_float(vs: &[Vec<Scalar>], tol: f64) -> Result<usize, LinalgError> {
    Ok(Mat::from_rows(vs.to_vec())?.rank_float(tol))
}

fn cabs(z: (f64, f64)) -> f64 {
    // max-norm; equivalent to the modulus within a factor of sqrt(2)
    let (a, b) = (if z.0 < 0.0 { -z.0 } else { z.0 }, if z.1 < 0.0 { -z.1 } else { z.1 });
    if a > b {
        a
    } else {
        b
    }
}

fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn cdiv(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    let d = b.0 * b.0 + b.1 * b.1;
    ((a.0 * b.0 + a.1 * b.1) / d, (a.1 * b.0 - a.0 * b.1) / d)
}

// ---------------------------------------------------------------------------
// Fraction-free elimination over Z and Z[i].

trait ExactDomain: Clone {
    fn is_zero(&self) -> bool;
    fn one() -> Self;
    fn zero() -> Self;
    /// `(a*d - b*c) / q`, where the division is known to be exact.
    fn bareiss_step(a: &Self, d: &Self, b: &Self, c: &Self, q: &Self) -> Self;
}

impl ExactDomain for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn one() -> Self {
        One::one()
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn bareiss_step(a: &Self, d: &Self, b: &Self, c: &Self, q: &Self) -> Self {
        let n = a * d - b * c;
        if q.is_one() {
            n
        } else {
            n / q
        }
    }
}

#[derive(Clone, Debug)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn mul(&self, o: &GaussInt) -> GaussInt {
        GaussInt { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
}

impl ExactDomain for GaussInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn one() -> Self {
        GaussInt { re: One::one(), im: Zero::zero() }
    }
    fn zero() -> Self {
        GaussInt { re: Zero::zero(), im: Zero::zero() }
    }
    fn bareiss_step(a: &Self, d: &Self, b: &Self, c: &Self, q: &Self) -> Self {
        let ad = a.mul(d);
        let bc = b.mul(c);
        let n = GaussInt { re: ad.re - bc.re, im: ad.im - bc.im };
        // n / q = n * conj(q) / |q|^2, exact in Z[i]
        let qn = &q.re * &q.re + &q.im * &q.im;
        let num = GaussInt { re: &n.re * &q.re + &n.im * &q.im, im: &n.im * &q.re - &n.re * &q.im };
        GaussInt { re: num.re / &qn, im: num.im / &qn }
    }
}

fn bareiss_rank<T: ExactDomain>(mut a: Vec<Vec<T>>) -> usize {
    let n = a.len();
    let Some(cols) = a.first().map(Vec::len) else { return 0 };
    let mut prev = T::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == n {
            break;
        }
        let Some(p) = (rank..n).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            for j in col + 1..cols {
                row[j] = T::bareiss_step(&pivot_row[col], &row[j], &row[col], &pivot_row[j], &prev);
            }
            row[col] = T::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Clears denominators row by row (row scaling preserves rank) and runs
/// Bareiss over Z when every entry is real, over Z[i] otherwise.
fn rank_of_rows<'a>(rows: impl Iterator<Item = &'a [Scalar]>) -> usize {
    let rows: Vec<&[Scalar]> = rows.filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    if rows.is_empty() {
        return 0;
    }
    let all_real = rows.iter().all(|r| r.iter().all(Scalar::is_real));
    let scaled: Vec<(BigInt, &[Scalar])> = rows
        .iter()
        .map(|r| {
            let l = r.iter().fold(<BigInt as One>::one(), |acc, x| {
                acc.lcm(x.re().denom()).lcm(x.im().denom())
            });
            (l, *r)
        })
        .collect();
    let as_int = |l: &BigInt, q: &num_rational::BigRational| -> BigInt { q.numer() * (l / q.denom()) };
    if all_real {
        let a: Vec<Vec<BigInt>> =
            scaled.iter().map(|(l, r)| r.iter().map(|x| as_int(l, x.re())).collect()).collect();
        bareiss_rank(a)
    } else {
        let a: Vec<Vec<GaussInt>> = scaled
            .iter()
            .map(|(l, r)| {
                r.iter().map(|x| GaussInt { re: as_int(l, x.re()), im: as_int(l, x.im()) }).collect()
            })
            .collect();
        bareiss_rank(a)
    }
}

/// Row-echelon accumulator: offers vectors one at a time and keeps those that
/// enlarge the span. Used to pick the first independent members of a family.
#[derive(Clone, Debug, Default)]
pub struct IncrementalBasis {
    /// Reduced rows with their pivot column; the pivot entry is 1.
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl IncrementalBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Returns `true` when `v` was independent of everything offered before.
    pub fn offer(&mut self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        for (p, r) in &self.rows {
            if w[*p].is_zero() {
                continue;
            }
            let f = w[*p].clone();
            for (wj, rj) in w.iter_mut().zip(r) {
                if !rj.is_zero() {
                    *wj -= &f * rj;
                }
            }
        }
        let Some(p) = w.iter().position(|x| !x.is_zero()) else { return false };
        let inv = w[p].inv().expect("nonzero pivot");
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        // keep earlier rows reduced against the new pivot
        for (_, r) in self.rows.iter_mut() {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (rj, wj) in r.iter_mut().zip(&w) {
                if !wj.is_zero() {
                    *rj -= &f * wj;
                }
            }
        }
        self.rows.push((p, w));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn s(n: i64) -> Scalar {
        Scalar::from_i64(n)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Mat::identity(3).rank(), 3);
        assert_eq!(Mat::from_i64(2, 3, &[1, 2, 3, 2, 4, 6]).rank(), 1);
        assert_eq!(Mat::zeros(4, 4).rank(), 0);
        assert_eq!(Mat::zeros(0, 0).rank(), 0);
    }

    #[test]
    fn span_examples() {
        let e1 = vec![s(1), s(0), s(0)];
        let e2 = vec![s(0), s(1), s(0)];
        let e12 = vec![s(1), s(1), s(0)];
        assert_eq!(span_dim(&[e1.clone(), e2, e12]).unwrap(), 2);
        assert_eq!(span_dim(&[]).unwrap(), 0);
        assert!(span_dim(&[e1, vec![s(1)]]).is_err());
    }

    #[test]
    fn complex_rank_uses_gaussian_path() {
        // [[1, i], [i, -1]] has rank 1 over C
        let i = Scalar::i();
        let m = Mat::from_rows(vec![vec![s(1), i.clone()], vec![i.clone(), s(-1)]]).unwrap();
        assert_eq!(m.rank(), 1);
        let m = Mat::from_rows(vec![vec![s(1), i.clone()], vec![i, s(1)]]).unwrap();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rational_entries_and_det() {
        let m = Mat::from_rows(vec![
            vec![Scalar::from_ratio(1, 2), Scalar::from_ratio(1, 3)],
            vec![Scalar::from_ratio(3, 2), s(1)],
        ])
        .unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m.det().unwrap(), Scalar::zero());
        let m = Mat::from_i64(3, 3, &[2, 0, 1, 1, 3, 2, 1, 1, 1]);
        // First-row expansion: 2·(3 - 2) + 1·(1 - 3).
        assert_eq!(m.det().unwrap(), Scalar::zero());
    }

    #[test]
    fn float_path_agrees_with_exact_on_small_integer_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let r = rng.random_range(1..=12);
            let c = rng.random_range(1..=12);
            // low-rank products exercise the interesting pivots
            let k = rng.random_range(1..=r.min(c));
            let a = Mat::from_fn(r, k, |_, _| Scalar::random_int(&mut rng, 9));
            let b = Mat::from_fn(k, c, |_, _| Scalar::random_int(&mut rng, 9));
            let m = if rng.random_bool(0.5) {
                a.mul(&b).unwrap()
            } else {
                Mat::from_fn(r, c, |_, _| Scalar::random_int(&mut rng, 9))
            };
            assert_eq!(m.rank_float(DEFAULT_FLOAT_TOL), m.rank(), "{m:?}");
        }
    }

    #[test]
    fn incremental_basis_tracks_rank() {
        let mut b = IncrementalBasis::new();
        assert!(b.offer(&[s(1), s(2), s(0)]));
        assert!(!b.offer(&[s(2), s(4), s(0)]));
        assert!(b.offer(&[s(0), s(1), s(1)]));
        assert!(!b.offer(&[s(1), s(3), s(1)]));
        assert!(b.offer(&[s(0), s(0), s(5)]));
        assert_eq!(b.dim(), 3);
    }
}
