#![allow(dead_code)]

use num_traits::One;
use wghz_core::Scalar;

/// Cayley's hyperdeterminant written out from the 2×2×2 array.
pub fn hyperdeterminant(c: &[Scalar]) -> Scalar {
    let a = |i: usize, j: usize, k: usize| c[4 * i + 2 * j + k].clone();
    let sq = |x: Scalar| &x * &x;
    let p = |xs: [Scalar; 4]| xs.into_iter().fold(Scalar::one(), |acc, x| &acc * &x);
    let first = sq(a(0, 0, 0) * a(1, 1, 1)) + sq(a(0, 0, 1) * a(1, 1, 0)) + sq(a(0, 1, 0) * a(1, 0, 1))
        + sq(a(1, 0, 0) * a(0, 1, 1));
    let second = p([a(0, 0, 0), a(1, 1, 1), a(0, 0, 1), a(1, 1, 0)])
        + p([a(0, 0, 0), a(1, 1, 1), a(0, 1, 0), a(1, 0, 1)])
        + p([a(0, 0, 0), a(1, 1, 1), a(1, 0, 0), a(0, 1, 1)])
        + p([a(0, 0, 1), a(1, 1, 0), a(0, 1, 0), a(1, 0, 1)])
        + p([a(0, 0, 1), a(1, 1, 0), a(1, 0, 0), a(0, 1, 1)])
        + p([a(0, 1, 0), a(1, 0, 1), a(1, 0, 0), a(0, 1, 1)]);
    let third = p([a(0, 0, 0), a(0, 1, 1), a(1, 0, 1), a(1, 1, 0)])
        + p([a(1, 1, 1), a(1, 0, 0), a(0, 1, 0), a(0, 0, 1)]);
    first - Scalar::from_i64(2) * second + Scalar::from_i64(4) * third
}

