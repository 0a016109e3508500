//! Exact maximum-clique search.
//!
//! Branch and bound over bit-vector candidate sets with greedy sequential
//! colouring as the upper bound. Vertices are renumbered by decreasing degree
//! (ties by index) so bit order is branching order. The enumeration variant
//! collects every clique of a fixed target size; it never prunes a branch
//! whose colour bound still reaches the target, so it is complete.

use std::cmp::Reverse;

use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::graph::BlockGraph;
use crate::srg::{delsarte_bound, verify_srg};

/// Sorted, duplicate-free set of vertex (block) indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clique(Vec<usize>);

impl Clique {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Clique(members)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// First non-adjacent member pair, if any.
    pub fn non_adjacent_pair(&self, graph: &BlockGraph) -> Option<(usize, usize)> {
        for (i, &a) in self.0.iter().enumerate() {
            if let Some(&b) = self.0[i + 1..].iter().find(|&&b| !graph.adjacent(a, b)) {
                return Some((a, b));
            }
        }
        None
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchOptions {
    /// Worker threads for enumeration; `None` uses the global pool.
    pub workers: Option<usize>,
}

struct Renumbered {
    /// `order[new] = old`.
    order: Vec<usize>,
    rows: Vec<BitSet>,
}

impl Renumbered {
    fn new(graph: &BlockGraph) -> Self {
        let v = graph.v();
        let mut order: Vec<usize> = (0..v).collect();
        order.sort_by_key(|&i| (Reverse(graph.degree(i)), i));
        let mut position = vec![0; v];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let rows = order
            .iter()
            .map(|&old| BitSet::from_indices(v, graph.neighbours(old).iter().map(|j| position[j])))
            .collect();
        Renumbered { order, rows }
    }

    fn original(&self, clique: &[usize]) -> Clique {
        Clique::new(clique.iter().map(|&i| self.order[i]).collect())
    }

    /// Vertices of `p` with greedy colour numbers, in non-decreasing colour order.
    fn colour_sort(&self, p: &BitSet) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(p.count());
        let mut uncoloured = p.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut available = uncoloured.clone();
            while let Some(v) = available.first() {
                available.remove(v);
                available.difference_with(&self.rows[v]);
                uncoloured.remove(v);
                out.push((v, colour));
            }
        }
        out
    }

    fn grow_maximum(
        &self,
        clique: &mut Vec<usize>,
        mut p: BitSet,
        best: &mut Vec<usize>,
        stop_at: usize,
    ) {
        let order = self.colour_sort(&p);
        for &(v, colour) in order.iter().rev() {
            if clique.len() + colour <= best.len() || best.len() >= stop_at {
                return;
            }
            clique.push(v);
            let next = p.intersection(&self.rows[v]);
            if next.is_empty() {
                if clique.len() > best.len() {
                    *best = clique.clone();
                }
            } else {
                self.grow_maximum(clique, next, best, stop_at);
            }
            clique.pop();
            p.remove(v);
        }
    }

    fn collect_target(
        &self,
        clique: &mut Vec<usize>,
        mut p: BitSet,
        target: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let order = self.colour_sort(&p);
        for &(v, colour) in order.iter().rev() {
            if clique.len() + colour < target {
                return;
            }
            clique.push(v);
            if clique.len() == target {
                out.push(clique.clone());
            } else {
                let next = p.intersection(&self.rows[v]);
                if !next.is_empty() {
                    self.collect_target(clique, next, target, out);
                }
            }
            clique.pop();
            p.remove(v);
        }
    }
}

/// One maximum clique, using `upper_bound` (if given) to stop as soon as it
/// is attained.
pub fn maximum_clique_with_bound(graph: &BlockGraph, upper_bound: Option<usize>) -> Clique {
    if graph.v() == 0 {
        return Clique::new(Vec::new());
    }
    let search = Renumbered::new(graph);
    let mut best = Vec::new();
    let stop_at = upper_bound.unwrap_or(usize::MAX);
    search.grow_maximum(&mut Vec::new(), BitSet::full(graph.v()), &mut best, stop_at);
    search.original(&best)
}

pub fn clique_number_with_bound(graph: &BlockGraph, upper_bound: Option<usize>) -> usize {
    maximum_clique_with_bound(graph, upper_bound).len()
}

/// Exact clique number. When the graph is strongly regular the Delsarte
/// bound is used to stop the search once attained.
pub fn clique_number(graph: &BlockGraph) -> usize {
    let bound = verify_srg(graph)
        .ok()
        .and_then(|p| delsarte_bound(&p))
        .map(|b| b as usize);
    clique_number_with_bound(graph, bound)
}

/// Every clique with exactly `size` vertices, sorted lexicographically.
pub fn enumerate_cliques_of_size(
    graph: &BlockGraph,
    size: usize,
    options: SearchOptions,
) -> Vec<Clique> {
    let v = graph.v();
    if size == 0 {
        return vec![Clique::new(Vec::new())];
    }
    if v == 0 {
        return Vec::new();
    }
    let search = Renumbered::new(graph);
    let full = BitSet::full(v);
    let top = search.colour_sort(&full);

    // Branch i takes top[i] with candidates restricted to top[..i].
    let branches: Vec<usize> = (0..top.len())
        .rev()
        .take_while(|&i| 1 + top[i].1 >= size)
        .collect();
    let run = |i: usize| -> Vec<Vec<usize>> {
        let (vertex, _) = top[i];
        let mut out = Vec::new();
        if size == 1 {
            out.push(vec![vertex]);
            return out;
        }
        let mut p = BitSet::from_indices(v, top[..i].iter().map(|&(u, _)| u));
        p.intersect_with(&search.rows[vertex]);
        if !p.is_empty() {
            search.collect_target(&mut vec![vertex], p, size, &mut out);
        }
        out
    };

    let raw: Vec<Vec<usize>> = match options.workers {
        Some(1) => branches.iter().flat_map(|&i| run(i)).collect(),
        Some(workers) => rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool")
            .install(|| branches.par_iter().flat_map_iter(|&i| run(i)).collect()),
        None => branches.par_iter().flat_map_iter(|&i| run(i)).collect(),
    };
    let mut cliques: Vec<Clique> = raw.iter().map(|c| search.original(c)).collect();
    cliques.sort();
    cliques
}

/// All maximum cliques, sorted lexicographically.
pub fn enumerate_maximum_cliques(graph: &BlockGraph) -> Vec<Clique> {
    enumerate_maximum_cliques_with(graph, SearchOptions::default())
}

pub fn enumerate_maximum_cliques_with(graph: &BlockGraph, options: SearchOptions) -> Vec<Clique> {
    if graph.v() == 0 {
        return Vec::new();
    }
    let omega = clique_number(graph);
    enumerate_cliques_of_size(graph, omega, options)
}
