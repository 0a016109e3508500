//! Brute-force oracles that share no code with the library's algorithms.
#![allow(dead_code)]

use std::collections::BTreeSet;

/// All maximum cliques of a graph on at most 24 vertices, by a scan over
/// every vertex subset. Returns the clique number and the cliques as sorted
/// vertex lists in lexicographic order.
pub fn brute_force_maximum_cliques(
    v: usize,
    adjacent: impl Fn(usize, usize) -> bool,
) -> (usize, Vec<Vec<usize>>) {
    assert!(v <= 24, "brute force is exponential");
    let adj: Vec<u32> = (0..v)
        .map(|a| {
            (0..v)
                .filter(|&b| b != a && adjacent(a, b))
                .fold(0u32, |m, b| m | 1 << b)
        })
        .collect();
    let mut is_clique = vec![false; 1 << v];
    is_clique[0] = true;
    let mut best = 0;
    for mask in 1u32..(1 << v) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        is_clique[mask as usize] = is_clique[rest as usize] && adj[low] & rest == rest;
        if is_clique[mask as usize] {
            best = best.max(mask.count_ones() as usize);
        }
    }
    let mut cliques: Vec<Vec<usize>> = (0u32..(1 << v))
        .filter(|&m| is_clique[m as usize] && m.count_ones() as usize == best)
        .map(|m| (0..v).filter(|&i| m >> i & 1 == 1).collect())
        .collect();
    cliques.sort();
    (best, cliques)
}

/// Counts, for every unordered pair of `0..n`, the blocks containing it.
pub fn pair_coverage(n: usize, blocks: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut counts = vec![vec![0; n]; n];
    for block in blocks {
        for &a in block {
            for &b in block {
                if a < b {
                    counts[a][b] += 1;
                }
            }
        }
    }
    counts
}

/// Whether `blocks` form a 2-(n,k,1) design, by direct pair counting.
pub fn is_steiner_system(n: usize, blocks: &[Vec<usize>]) -> bool {
    let counts = pair_coverage(n, blocks);
    (0..n).all(|a| (a + 1..n).all(|b| counts[a][b] == 1))
}

pub fn blocks_meet(a: &[usize], b: &[usize]) -> bool {
    let a: BTreeSet<_> = a.iter().collect();
    b.iter().any(|x| a.contains(x))
}

/// `(v, k, lambda, mu)` by counting common neighbours of every pair, or
/// `None` if some count is not constant.
pub fn brute_force_srg(
    v: usize,
    adjacent: impl Fn(usize, usize) -> bool,
) -> Option<(usize, usize, usize, usize)> {
    let degree = |a: usize| (0..v).filter(|&b| b != a && adjacent(a, b)).count();
    let k = degree(0);
    let (mut lambda, mut mu) = (None, None);
    for a in 0..v {
        if degree(a) != k {
            return None;
        }
        for b in a + 1..v {
            let common = (0..v)
                .filter(|&c| c != a && c != b && adjacent(a, c) && adjacent(b, c))
                .count();
            let slot = if adjacent(a, b) { &mut lambda } else { &mut mu };
            if *slot.get_or_insert(common) != common {
                return None;
            }
        }
    }
    Some((v, k, lambda?, mu?))
}

/// Lines of AG(2,3) on points `3x + y`, written out independently of the library.
pub fn ag23_lines() -> Vec<Vec<usize>> {
    let mut lines = BTreeSet::new();
    let pts: Vec<(usize, usize)> = (0..3).flat_map(|x| (0..3).map(move |y| (x, y))).collect();
    for &(x0, y0) in &pts {
        for &(dx, dy) in &[(0, 1), (1, 0), (1, 1), (1, 2)] {
            let mut line: Vec<usize> = (0..3)
                .map(|t| 3 * ((x0 + t * dx) % 3) + (y0 + t * dy) % 3)
                .collect();
            line.sort();
            lines.insert(line);
        }
    }
    lines.into_iter().collect()
}
