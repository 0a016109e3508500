//! Structure of a clique of blocks: its common point (if any), the points it
//! covers, the points covered at least twice, and whether its blocks form a
//! 2-design on their support.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::clique::search::Clique;
use crate::design::{Design, DesignParameters};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliqueError {
    #[error("empty clique")]
    Empty,
    #[error("block index {index} out of range for {b} blocks")]
    BlockOutOfRange { index: usize, b: usize },
    #[error("blocks {a} and {b} do not intersect")]
    NotAClique { a: usize, b: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CliqueClassification {
    /// All member blocks pass through `witness`.
    Canonical {
        witness: usize,
    },
    NonCanonical,
}

impl CliqueClassification {
    pub fn is_canonical(&self) -> bool {
        matches!(self, CliqueClassification::Canonical { .. })
    }
}

/// Checks that the members index blocks of `design` and meet pairwise.
pub fn check_clique(design: &Design, clique: &Clique) -> Result<(), CliqueError> {
    if clique.is_empty() {
        return Err(CliqueError::Empty);
    }
    if let Some(&index) = clique.members().iter().find(|&&i| i >= design.b()) {
        return Err(CliqueError::BlockOutOfRange {
            index,
            b: design.b(),
        });
    }
    let members = clique.members();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if !blocks_meet(design.block(a), design.block(b)) {
                return Err(CliqueError::NotAClique { a, b });
            }
        }
    }
    Ok(())
}

fn blocks_meet(a: &[usize], b: &[usize]) -> bool {
    a.iter().any(|p| b.binary_search(p).is_ok())
}

/// Canonical iff the member blocks share a point. The witness is the
/// smallest common point (unique once the clique has two blocks).
pub fn classify_clique(
    design: &Design,
    clique: &Clique,
) -> Result<CliqueClassification, CliqueError> {
    check_clique(design, clique)?;
    let members = clique.members();
    let first = design.block(members[0]);
    let witness = first.iter().copied().find(|p| {
        members[1..]
            .iter()
            .all(|&b| design.block(b).binary_search(p).is_ok())
    });
    Ok(match witness {
        Some(witness) => CliqueClassification::Canonical { witness },
        None => CliqueClassification::NonCanonical,
    })
}

/// Number of member blocks through each support point.
pub fn point_multiplicity_profile(design: &Design, clique: &Clique) -> BTreeMap<usize, usize> {
    let mut profile = BTreeMap::new();
    for &b in clique.members() {
        for &p in design.block(b) {
            *profile.entry(p).or_insert(0) += 1;
        }
    }
    profile
}

/// Union of the member blocks, ascending.
pub fn clique_support(design: &Design, clique: &Clique) -> Vec<usize> {
    point_multiplicity_profile(design, clique)
        .into_keys()
        .collect()
}

/// Counts, for the given blocks, how often every pair of `points` is covered.
/// Returns true iff each pair is covered exactly once.
fn covers_pairs_once(points: &[usize], blocks: &[Vec<usize>]) -> bool {
    let k = points.len();
    let position: BTreeMap<usize, usize> =
        points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut counts = vec![0u32; k * k];
    for block in blocks {
        for (i, p) in block.iter().enumerate() {
            for q in &block[i + 1..] {
                let (a, b) = (position[p], position[q]);
                let (a, b) = if a < b { (a, b) } else { (b, a) };
                counts[a * k + b] += 1;
            }
        }
    }
    (0..k).all(|a| (a + 1..k).all(|b| counts[a * k + b] == 1))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreRestriction {
    /// Points lying in at least two member blocks, ascending.
    pub core_points: Vec<usize>,
    /// Each member block intersected with the core, in member order.
    pub restricted_blocks: Vec<Vec<usize>>,
    /// Set when the restriction is a uniform 2-(|core|, m', 1) design.
    pub restricted_params: Option<DesignParameters>,
    /// Number of non-core points of each member block.
    pub extension_sizes: Vec<usize>,
}

pub fn core_restriction(design: &Design, clique: &Clique) -> CoreRestriction {
    let profile = point_multiplicity_profile(design, clique);
    let core_points: Vec<usize> = profile
        .iter()
        .filter(|(_, &c)| c >= 2)
        .map(|(&p, _)| p)
        .collect();
    let restricted_blocks: Vec<Vec<usize>> = clique
        .members()
        .iter()
        .map(|&b| {
            design
                .block(b)
                .iter()
                .copied()
                .filter(|p| core_points.binary_search(p).is_ok())
                .collect()
        })
        .collect();
    let extension_sizes = clique
        .members()
        .iter()
        .zip(&restricted_blocks)
        .map(|(&b, r)| design.block(b).len() - r.len())
        .collect();

    let restricted_params = restricted_blocks.first().and_then(|first| {
        let size = first.len();
        let uniform = restricted_blocks.iter().all(|r| r.len() == size);
        if !uniform || size < 2 || !covers_pairs_once(&core_points, &restricted_blocks) {
            return None;
        }
        let params = DesignParameters::compute(core_points.len() as u64, size as u64).ok()?;
        (params.b_value() == Some(restricted_blocks.len() as u64)).then_some(params)
    });

    CoreRestriction {
        core_points,
        restricted_blocks,
        restricted_params,
        extension_sizes,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdesignVerdict {
    pub support: Vec<usize>,
    pub support_size: usize,
    /// Parameters of a putative 2-(|support|, m, 1) design.
    pub candidate_params: Option<DesignParameters>,
    pub pair_coverage_ok: bool,
    pub is_design: bool,
}

impl SubdesignVerdict {
    pub fn admissible(&self) -> bool {
        self.candidate_params
            .as_ref()
            .is_some_and(DesignParameters::admissible)
    }
}

/// Whether the member blocks form a 2-design on their support. Divisibility
/// gives a quick negative; pair coverage is always checked as well.
pub fn subdesign_test(design: &Design, clique: &Clique) -> SubdesignVerdict {
    let support = clique_support(design, clique);
    let candidate_params = DesignParameters::compute(support.len() as u64, design.m() as u64).ok();
    let blocks: Vec<Vec<usize>> = clique
        .members()
        .iter()
        .map(|&b| design.block(b).to_vec())
        .collect();
    let pair_coverage_ok = covers_pairs_once(&support, &blocks);
    let is_design = pair_coverage_ok
        && candidate_params
            .as_ref()
            .is_some_and(|p| p.admissible() && p.b_value() == Some(clique.len() as u64));
    SubdesignVerdict {
        support_size: support.len(),
        support,
        candidate_params,
        pair_coverage_ok,
        is_design,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{builtin_design, BuiltinName};

    #[test]
    fn single_block_clique() {
        let d = builtin_design(BuiltinName::Main66);
        let c = Clique::new(vec![0]);
        assert_eq!(clique_support(&d, &c).len(), 6);
        assert!(point_multiplicity_profile(&d, &c).values().all(|&v| v == 1));
        assert!(classify_clique(&d, &c).unwrap().is_canonical());
    }

    #[test]
    fn errors() {
        let d = builtin_design(BuiltinName::Ag23);
        assert_eq!(
            classify_clique(&d, &Clique::new(vec![])),
            Err(CliqueError::Empty)
        );
        assert!(matches!(
            classify_clique(&d, &Clique::new(vec![0, 99])),
            Err(CliqueError::BlockOutOfRange { index: 99, .. })
        ));
        // Two parallel lines of AG(2,3) are disjoint.
        let star0 = &d.point_blocks()[0];
        let line = star0[0];
        let parallel = (0..d.b())
            .find(|&b| d.block(b).iter().all(|p| !d.block(line).contains(p)))
            .unwrap();
        assert!(matches!(
            classify_clique(&d, &Clique::new(vec![line, parallel])),
            Err(CliqueError::NotAClique { .. })
        ));
    }

    #[test]
    fn pg23_full_block_set_is_a_design() {
        let d = builtin_design(BuiltinName::Pg23);
        let all = Clique::new((0..d.b()).collect());
        let verdict = subdesign_test(&d, &all);
        assert_eq!(verdict.support_size, 13);
        assert!(verdict.is_design);
        assert_eq!(
            classify_clique(&d, &all).unwrap(),
            CliqueClassification::NonCanonical
        );
    }

    #[test]
    fn star_core_is_degenerate() {
        let d = builtin_design(BuiltinName::Ag23);
        let star = Clique::new(d.point_blocks()[4].clone());
        let core = core_restriction(&d, &star);
        assert_eq!(core.core_points, vec![4]);
        assert!(core.restricted_blocks.iter().all(|b| b == &vec![4]));
        assert_eq!(core.restricted_params, None);
        assert_eq!(core.extension_sizes, vec![2; 4]);
        assert_eq!(
            classify_clique(&d, &star).unwrap(),
            CliqueClassification::Canonical { witness: 4 }
        );
    }
}
