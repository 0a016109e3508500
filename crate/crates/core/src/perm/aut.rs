//! Full automorphism groups by individualization and refinement.
//!
//! The search works on a vertex-coloured graph. An ordered partition is
//! refined to an equitable one (each vertex's neighbour counts into every
//! cell are constant on its cell, new cells ordered by those counts), then a
//! vertex of the first largest non-singleton cell is individualized and the
//! partition refined again, until it is discrete.
//!
//! The first path always individualizes the lowest-indexed vertex of the
//! target cell. Working from the deepest level up, for every other vertex
//! `w` of the target cell at level `i` the subtree below `w` is searched for
//! a leaf whose labelling maps the first leaf to it by an automorphism; only
//! nodes whose refinement trace matches the first path are entered. Such an
//! automorphism fixes the first `i` individualized vertices, so the orbit of
//! the level-`i` vertex under the pointwise stabilizer is found exactly and
//! the group order is the product of these orbit lengths.
//!
//! Block graphs of designs are strongly regular, where plain refinement
//! splits nothing. [`SeedInvariants`] therefore colours vertices by
//! isomorphism invariants and adds one extra vertex per maximum clique,
//! joined to its members. Every automorphism of the block graph permutes the
//! maximum cliques, so the augmented graph has the same automorphism group.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::bitset::BitSet;
use crate::clique::Clique;
use crate::design::Design;
use crate::graph::BlockGraph;
use crate::perm::group::DisjointSets;
use crate::perm::permutation::Permutation;

pub const DEFAULT_NODE_LIMIT: u64 = 2_000_000;

#[derive(Debug, Clone, Copy)]
pub struct AutOptions {
    /// Maximum number of refined search nodes.
    pub node_limit: u64,
}

impl Default for AutOptions {
    fn default() -> Self {
        AutOptions {
            node_limit: DEFAULT_NODE_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("search budget of {limit} nodes exhausted ({} generators found so far)", found.len())]
    BudgetExceeded { limit: u64, found: Vec<Permutation> },
    #[error("group order does not fit in 64 bits")]
    OrderOverflow,
}

#[derive(Debug, Clone)]
pub struct AutomorphismGroup {
    pub degree: usize,
    pub generators: Vec<Permutation>,
    pub order: u64,
    /// Search nodes refined.
    pub nodes: u64,
}

/// A graph with an initial vertex colouring.
#[derive(Debug, Clone)]
pub struct ColouredGraph {
    rows: Vec<BitSet>,
    colours: Vec<u64>,
}

impl ColouredGraph {
    pub fn new(rows: Vec<BitSet>, colours: Vec<u64>) -> Self {
        assert_eq!(rows.len(), colours.len());
        ColouredGraph { rows, colours }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    fn is_automorphism(&self, images: &[usize]) -> bool {
        (0..self.len()).all(|a| {
            let b = images[a];
            self.colours[a] == self.colours[b]
                && self.rows[a].count() == self.rows[b].count()
                && self.rows[a]
                    .iter()
                    .all(|x| self.rows[b].contains(images[x]))
        })
    }
}

struct Node {
    cells: Vec<Vec<usize>>,
    trace: u64,
}

struct Search<'a> {
    graph: &'a ColouredGraph,
    nodes: u64,
    limit: u64,
    found: Vec<Permutation>,
}

struct OutOfBudget;

fn target_cell(cells: &[Vec<usize>]) -> Option<usize> {
    let largest = cells.iter().map(Vec::len).max().filter(|&s| s > 1)?;
    cells.iter().position(|c| c.len() == largest)
}

fn individualize(cells: &[Vec<usize>], target: usize, v: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(cells.len() + 1);
    out.extend_from_slice(&cells[..target]);
    out.push(vec![v]);
    out.push(cells[target].iter().copied().filter(|&x| x != v).collect());
    out.extend_from_slice(&cells[target + 1..]);
    out
}

impl Search<'_> {
    fn refine(&mut self, mut cells: Vec<Vec<usize>>) -> Result<Node, OutOfBudget> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(OutOfBudget);
        }
        let n = self.graph.len();
        let mut hasher = DefaultHasher::new();
        loop {
            let sets: Vec<BitSet> = cells
                .iter()
                .map(|c| BitSet::from_indices(n, c.iter().copied()))
                .collect();
            let mut next = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let row = &self.graph.rows[v];
                        (
                            sets.iter()
                                .map(|s| row.intersection_count(s) as u32)
                                .collect(),
                            v,
                        )
                    })
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        keyed[start].0.hash(&mut hasher);
                        (i - start).hash(&mut hasher);
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            let stable = next.len() == cells.len();
            cells = next;
            if stable {
                break;
            }
        }
        for c in &cells {
            c.len().hash(&mut hasher);
        }
        Ok(Node {
            cells,
            trace: hasher.finish(),
        })
    }

    fn leaf_images(first: &[usize], leaf: &[Vec<usize>], n: usize) -> Vec<usize> {
        let mut images = vec![0; n];
        for (c, cell) in leaf.iter().enumerate() {
            images[first[c]] = cell[0];
        }
        images
    }

    /// Depth-first search below `node` (at `depth`) for a leaf equivalent to
    /// the first leaf under an automorphism.
    fn descend(
        &mut self,
        node: Node,
        depth: usize,
        path: &[Node],
        first_leaf: &[usize],
    ) -> Result<Option<Permutation>, OutOfBudget> {
        let reference = &path[depth];
        if node.trace != reference.trace || node.cells.len() != reference.cells.len() {
            return Ok(None);
        }
        let Some(t) = target_cell(&node.cells) else {
            let images = Self::leaf_images(first_leaf, &node.cells, self.graph.len());
            if self.graph.is_automorphism(&images) {
                return Ok(Some(
                    Permutation::from_images(images).expect("leaf labelling is a bijection"),
                ));
            }
            return Ok(None);
        };
        if depth + 1 >= path.len() {
            return Ok(None);
        }
        for &x in &node.cells[t] {
            let child = self.refine(individualize(&node.cells, t, x))?;
            if let Some(found) = self.descend(child, depth + 1, path, first_leaf)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }

    fn run(&mut self) -> Result<(Vec<Permutation>, u64), OutOfBudget> {
        let n = self.graph.len();
        let mut keys: Vec<u64> = self.graph.colours.clone();
        keys.sort_unstable();
        keys.dedup();
        let initial: Vec<Vec<usize>> = keys
            .iter()
            .map(|&k| (0..n).filter(|&v| self.graph.colours[v] == k).collect())
            .collect();

        let mut path = vec![self.refine(initial)?];
        let mut chosen = Vec::new();
        while let Some(t) = target_cell(&path.last().expect("root").cells) {
            let last = path.last().expect("root");
            let v = last.cells[t][0];
            let child = self.refine(individualize(&last.cells, t, v))?;
            chosen.push((t, v));
            path.push(child);
        }
        let first_leaf: Vec<usize> = path
            .last()
            .expect("leaf")
            .cells
            .iter()
            .map(|c| c[0])
            .collect();

        let mut order: u64 = 1;
        for level in (0..chosen.len()).rev() {
            let (t, v) = chosen[level];
            let cell = path[level].cells[t].clone();
            let mut sets = DisjointSets::new(n);
            for g in &self.found {
                sets.absorb(g);
            }
            let mut rejected: Vec<usize> = Vec::new();
            for &w in &cell {
                let root = sets.find(w);
                if root == sets.find(v) || rejected.iter().any(|&r| sets.find(r) == root) {
                    continue;
                }
                let child = self.refine(individualize(&path[level].cells, t, w))?;
                match self.descend(child, level + 1, &path, &first_leaf)? {
                    Some(g) => {
                        sets.absorb(&g);
                        self.found.push(g);
                    }
                    None => rejected.push(w),
                }
            }
            let root = sets.find(v);
            let orbit = cell.iter().filter(|&&w| sets.find(w) == root).count() as u64;
            order = order.checked_mul(orbit).unwrap_or(0);
        }
        Ok((self.found.clone(), order))
    }
}

fn restrict(p: &Permutation, degree: usize) -> Permutation {
    Permutation::from_images(p.images()[..degree].to_vec())
        .expect("automorphism preserves the first colour classes")
}

/// Automorphism group of a coloured graph, with generators restricted to the
/// first `domain` vertices. Those vertices must form a union of colour
/// classes that determines the rest of the graph up to automorphism.
pub fn coloured_automorphism_group(
    graph: &ColouredGraph,
    domain: usize,
    options: AutOptions,
) -> Result<AutomorphismGroup, AutError> {
    if graph.is_empty() {
        return Ok(AutomorphismGroup {
            degree: 0,
            generators: Vec::new(),
            order: 1,
            nodes: 0,
        });
    }
    let mut search = Search {
        graph,
        nodes: 0,
        limit: options.node_limit,
        found: Vec::new(),
    };
    match search.run() {
        Ok((_, 0)) => Err(AutError::OrderOverflow),
        Ok((generators, order)) => Ok(AutomorphismGroup {
            degree: domain,
            generators: generators.iter().map(|g| restrict(g, domain)).collect(),
            order,
            nodes: search.nodes,
        }),
        Err(OutOfBudget) => Err(AutError::BudgetExceeded {
            limit: options.node_limit,
            found: search.found.iter().map(|g| restrict(g, domain)).collect(),
        }),
    }
}

/// Isomorphism-invariant vertex data used to seed the colouring.
#[derive(Debug, Clone)]
pub struct SeedInvariants {
    /// Number of listed cliques through each vertex.
    pub clique_counts: Vec<usize>,
    /// Per vertex, the multiset of `(adjacent, common neighbours)` over all
    /// other vertices, as sorted `(adjacent, count, multiplicity)` triples.
    pub common_neighbour_profiles: Vec<Vec<(bool, usize, usize)>>,
    cliques: Vec<Clique>,
}

impl SeedInvariants {
    pub fn plain(graph: &BlockGraph) -> Self {
        Self::with_cliques(graph, &[])
    }

    /// `cliques` must be a family mapped to itself by every automorphism,
    /// such as the complete list of maximum cliques.
    pub fn with_cliques(graph: &BlockGraph, cliques: &[Clique]) -> Self {
        let v = graph.v();
        let mut clique_counts = vec![0; v];
        for c in cliques {
            for &b in c.members() {
                clique_counts[b] += 1;
            }
        }
        let common_neighbour_profiles = (0..v)
            .map(|a| {
                let mut tally: BTreeMap<(bool, usize), usize> = BTreeMap::new();
                for b in (0..v).filter(|&b| b != a) {
                    let common = graph.neighbours(a).intersection_count(graph.neighbours(b));
                    *tally.entry((graph.adjacent(a, b), common)).or_insert(0) += 1;
                }
                tally.into_iter().map(|((adj, c), k)| (adj, c, k)).collect()
            })
            .collect();
        SeedInvariants {
            clique_counts,
            common_neighbour_profiles,
            cliques: cliques.to_vec(),
        }
    }

    fn augmented(&self, graph: &BlockGraph) -> ColouredGraph {
        let v = graph.v();
        let total = v + self.cliques.len();
        let mut rows: Vec<BitSet> = (0..v)
            .map(|a| BitSet::from_indices(total, graph.neighbours(a).iter()))
            .collect();
        rows.extend((0..self.cliques.len()).map(|_| BitSet::new(total)));
        for (i, c) in self.cliques.iter().enumerate() {
            for &b in c.members() {
                rows[b].insert(v + i);
                rows[v + i].insert(b);
            }
        }

        #[derive(PartialEq, Eq, PartialOrd, Ord)]
        enum Key<'a> {
            Vertex(usize, &'a [(bool, usize, usize)]),
            Clique(usize),
        }
        let keys: Vec<Key> = (0..v)
            .map(|a| Key::Vertex(self.clique_counts[a], &self.common_neighbour_profiles[a]))
            .chain(self.cliques.iter().map(|c| Key::Clique(c.len())))
            .collect();
        let mut distinct: Vec<&Key> = keys.iter().collect();
        distinct.sort();
        distinct.dedup();
        let colours = keys
            .iter()
            .map(|k| distinct.binary_search(&k).expect("key present") as u64)
            .collect();
        ColouredGraph::new(rows, colours)
    }
}

/// Full automorphism group of a graph; generators act on its vertices.
pub fn graph_automorphism_group(
    graph: &BlockGraph,
    seeds: &SeedInvariants,
    options: AutOptions,
) -> Result<AutomorphismGroup, AutError> {
    coloured_automorphism_group(&seeds.augmented(graph), graph.v(), options)
}

/// Automorphism group of a design, computed on its point-block incidence
/// graph; generators act on points.
pub fn design_automorphism_group(
    design: &Design,
    options: AutOptions,
) -> Result<AutomorphismGroup, AutError> {
    let (n, b) = (design.n(), design.b());
    let mut rows = vec![BitSet::new(n + b); n + b];
    for (i, block) in design.blocks().iter().enumerate() {
        for &p in block {
            rows[p].insert(n + i);
            rows[n + i].insert(p);
        }
    }
    let colours = (0..n + b).map(|x| u64::from(x >= n)).collect();
    coloured_automorphism_group(&ColouredGraph::new(rows, colours), n, options)
}
