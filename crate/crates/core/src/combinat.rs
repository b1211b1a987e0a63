use alloc::vec;
use alloc::vec::Vec;

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else { break };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

/// Position of a sorted `k`-subset of `0..n` in [`k_subsets`] order.
pub fn subset_index(n: usize, subset: &[usize]) -> usize {
    let k = subset.len();
    let mut idx = 0;
    let mut prev = 0;
    for (pos, &s) in subset.iter().enumerate() {
        for v in prev..s {
            idx += binomial(n - v - 1, k - pos - 1);
        }
        prev = s + 1;
    }
    idx
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Multisets of size `d` from `0..n` (non-decreasing index lists), lex order.
pub fn multisets(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut cur = vec![0; d];
    loop {
        out.push(cur.clone());
        let Some(i) = (0..d).rev().find(|&i| cur[i] != n - 1) else { break };
        cur[i] += 1;
        for j in i + 1..d {
            cur[j] = cur[i];
        }
    }
    out
}
