use std::collections::BTreeMap;

use crate::clique::analysis::{
    classify_clique, core_restriction, point_multiplicity_profile, subdesign_test,
    CliqueClassification, CliqueError, CoreRestriction, SubdesignVerdict,
};
use crate::clique::search::{
    clique_number_with_bound, enumerate_cliques_of_size, Clique, SearchOptions,
};
use crate::design::Design;
use crate::graph::BlockGraph;
use crate::srg::{delsarte_bound, verify_srg, SrgError, SrgParams};

#[derive(Debug, Clone)]
pub struct CliqueRecord {
    pub clique: Clique,
    pub classification: CliqueClassification,
    pub multiplicities: BTreeMap<usize, usize>,
    pub core: CoreRestriction,
    pub subdesign: SubdesignVerdict,
}

impl CliqueRecord {
    pub fn analyse(design: &Design, clique: Clique) -> Result<Self, CliqueError> {
        let classification = classify_clique(design, &clique)?;
        Ok(CliqueRecord {
            multiplicities: point_multiplicity_profile(design, &clique),
            core: core_restriction(design, &clique),
            subdesign: subdesign_test(design, &clique),
            classification,
            clique,
        })
    }

    /// The common multiplicity of every support point, if there is one.
    pub fn uniform_multiplicity(&self) -> Option<usize> {
        let mut values = self.multiplicities.values();
        let first = *values.next()?;
        values.all(|&v| v == first).then_some(first)
    }
}

/// Block graph, SRG data, clique number and the analysed list of maximum cliques.
#[derive(Debug, Clone)]
pub struct Census {
    pub graph: BlockGraph,
    pub srg: Result<SrgParams, SrgError>,
    pub delsarte_bound: Option<u64>,
    pub clique_number: usize,
    pub records: Vec<CliqueRecord>,
}

impl Census {
    pub fn total(&self) -> usize {
        self.records.len()
    }

    pub fn canonical(&self) -> usize {
        self.records
            .iter()
            .filter(|r| r.classification.is_canonical())
            .count()
    }

    pub fn non_canonical(&self) -> usize {
        self.total() - self.canonical()
    }

    pub fn cliques(&self) -> Vec<Clique> {
        self.records.iter().map(|r| r.clique.clone()).collect()
    }
}

/// Runs graph construction, SRG verification, the Delsarte bound, maximum
/// clique enumeration and per-clique analysis.
pub fn census_report(design: &Design, options: SearchOptions) -> Result<Census, CliqueError> {
    let graph = BlockGraph::from_design(design, "design");
    let srg = verify_srg(&graph);
    let bound = srg.as_ref().ok().and_then(delsarte_bound);
    let clique_number = clique_number_with_bound(&graph, bound.map(|b| b as usize));
    let cliques = if graph.v() == 0 {
        Vec::new()
    } else {
        enumerate_cliques_of_size(&graph, clique_number, options)
    };
    let records = cliques
        .into_iter()
        .map(|c| CliqueRecord::analyse(design, c))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Census {
        graph,
        srg,
        delsarte_bound: bound,
        clique_number,
        records,
    })
}
