//! Materialised permutation groups, orbits and induced actions on blocks
//! and cliques.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::clique::Clique;
use crate::design::Design;
use crate::graph::BlockGraph;
use crate::perm::permutation::{compose, PermError, Permutation};

pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    abelian: bool,
}

impl PermGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    /// Same set of elements.
    pub fn same_elements(&self, other: &PermGroup) -> bool {
        let mine: HashSet<&Permutation> = self.elements.iter().collect();
        self.order() == other.order() && other.elements.iter().all(|e| mine.contains(e))
    }

    pub fn orbits(&self) -> OrbitPartition {
        point_orbits(self.degree, &self.generators)
    }
}

/// Breadth-first closure of `generators` acting on `0..degree`. Fails once
/// more than `cap` elements have been produced.
pub fn close_group(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<PermGroup, PermError> {
    if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
        return Err(PermError::DomainMismatch {
            left: degree,
            right: g.degree(),
        });
    }
    let identity = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
    let mut elements = vec![identity.clone()];
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = compose(&x, g)?;
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(PermError::CapExceeded(cap));
                }
                elements.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    let abelian = generators.iter().enumerate().all(|(i, a)| {
        generators[i + 1..]
            .iter()
            .all(|b| compose(a, b).ok() == compose(b, a).ok())
    });
    Ok(PermGroup {
        degree,
        generators: generators.to_vec(),
        elements,
        abelian,
    })
}

/// A partition of `0..domain_size` into orbits, each sorted, ordered by
/// smallest element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    pub domain_size: usize,
    pub orbits: Vec<Vec<usize>>,
}

impl OrbitPartition {
    pub fn lengths(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }

    /// Orbit lengths in decreasing order.
    pub fn sorted_lengths(&self) -> Vec<usize> {
        let mut l = self.lengths();
        l.sort_unstable_by(|a, b| b.cmp(a));
        l
    }

    pub fn orbit_of(&self, x: usize) -> Option<&[usize]> {
        self.orbits
            .iter()
            .find(|o| o.binary_search(&x).is_ok())
            .map(Vec::as_slice)
    }
}

/// Union-find over `0..n`.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    pub(crate) fn absorb(&mut self, p: &Permutation) {
        for i in 0..p.degree() {
            self.union(i, p.apply(i));
        }
    }

    pub(crate) fn partition(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for i in 0..n {
            let r = self.find(i);
            groups.entry(r).or_default().push(i);
        }
        let mut orbits: Vec<Vec<usize>> = groups.into_values().collect();
        orbits.sort_by_key(|o| o[0]);
        orbits
    }
}

/// Orbits of the group generated by `generators` on `0..degree`.
pub fn point_orbits(degree: usize, generators: &[Permutation]) -> OrbitPartition {
    let mut sets = DisjointSets::new(degree);
    for g in generators {
        sets.absorb(g);
    }
    OrbitPartition {
        domain_size: degree,
        orbits: sets.partition(),
    }
}

/// Decreasing orbit lengths of the flagged orbits and of the others. Each
/// orbit is classed by its smallest member.
pub fn coloured_orbit_split(orbits: &OrbitPartition, flags: &[bool]) -> (Vec<usize>, Vec<usize>) {
    let (mut yes, mut no): (Vec<usize>, Vec<usize>) = (Vec::new(), Vec::new());
    for o in &orbits.orbits {
        if flags[o[0]] {
            yes.push(o.len())
        } else {
            no.push(o.len())
        }
    }
    yes.sort_unstable_by(|a, b| b.cmp(a));
    no.sort_unstable_by(|a, b| b.cmp(a));
    (yes, no)
}

/// The permutation of block indices induced by a point permutation.
pub fn induced_block_action(design: &Design, perm: &Permutation) -> Result<Permutation, PermError> {
    if perm.degree() != design.n() {
        return Err(PermError::DomainMismatch {
            left: design.n(),
            right: perm.degree(),
        });
    }
    let images = design
        .blocks()
        .iter()
        .enumerate()
        .map(|(i, block)| {
            let image: Vec<usize> = block.iter().map(|&p| perm.apply(p)).collect();
            design
                .find_block(&image)
                .ok_or(PermError::NotAnAutomorphism { block: i })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Permutation::from_images(images)
}

/// The permutation of a clique list induced by a block permutation.
pub fn induced_clique_action(
    cliques: &[Clique],
    block_perm: &Permutation,
) -> Result<Permutation, PermError> {
    let index: HashMap<&Clique, usize> = cliques.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let images = cliques
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let image = Clique::new(c.members().iter().map(|&b| block_perm.apply(b)).collect());
            index
                .get(&image)
                .copied()
                .ok_or(PermError::CliqueActionUndefined { clique: i })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Permutation::from_images(images)
}

/// Orbits on blocks of the group generated by point permutations.
pub fn block_orbits(
    design: &Design,
    generators: &[Permutation],
) -> Result<OrbitPartition, PermError> {
    let induced = generators
        .iter()
        .map(|g| induced_block_action(design, g))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(point_orbits(design.b(), &induced))
}

/// Orbits on a clique list of the group generated by point permutations.
pub fn clique_orbits(
    design: &Design,
    cliques: &[Clique],
    generators: &[Permutation],
) -> Result<OrbitPartition, PermError> {
    let induced = generators
        .iter()
        .map(|g| induced_block_action(design, g).and_then(|b| induced_clique_action(cliques, &b)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(point_orbits(cliques.len(), &induced))
}

pub fn is_design_automorphism(design: &Design, perm: &Permutation) -> bool {
    induced_block_action(design, perm).is_ok()
}

pub fn is_graph_automorphism(graph: &BlockGraph, perm: &Permutation) -> bool {
    perm.degree() == graph.v()
        && (0..graph.v()).all(|a| {
            let image = graph.neighbours(perm.apply(a));
            graph.degree(a) == image.count()
                && graph
                    .neighbours(a)
                    .iter()
                    .all(|b| image.contains(perm.apply(b)))
        })
}

/// Recovers the point permutation behind a block permutation by matching
/// point stars (the blocks through each point). `None` if some star is not
/// mapped onto a star.
pub fn point_action_from_block_perm(
    design: &Design,
    block_perm: &Permutation,
) -> Option<Permutation> {
    let stars = design.point_blocks();
    let by_star: HashMap<&Vec<usize>, usize> =
        stars.iter().enumerate().map(|(p, s)| (s, p)).collect();
    if by_star.len() != stars.len() {
        return None;
    }
    let images = stars
        .iter()
        .map(|star| {
            let mut image: Vec<usize> = star.iter().map(|&b| block_perm.apply(b)).collect();
            image.sort_unstable();
            by_star.get(&image).copied()
        })
        .collect::<Option<Vec<_>>>()?;
    Permutation::from_images(images).ok()
}
