//! Maximum cliques of block graphs and their classification.

pub mod analysis;
pub mod census;
pub mod search;

pub use analysis::{
    check_clique, classify_clique, clique_support, core_restriction, point_multiplicity_profile,
    subdesign_test, CliqueClassification, CliqueError, CoreRestriction, SubdesignVerdict,
};
pub use census::{census_report, Census, CliqueRecord};
pub use search::{
    clique_number, clique_number_with_bound, enumerate_cliques_of_size, enumerate_maximum_cliques,
    enumerate_maximum_cliques_with, maximum_clique_with_bound, Clique, SearchOptions,
};

use std::fmt::Write as _;

/// Clique file: one clique per line, space separated 0-based block indices.
pub fn write_clique_file(cliques: &[Clique]) -> String {
    let mut out = String::new();
    for c in cliques {
        let line: Vec<String> = c.members().iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

/// Parses a clique file; `#` starts a comment.
pub fn parse_clique_file(text: &str) -> Result<Vec<Clique>, String> {
    let mut cliques = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let members = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| format!("line {}: bad block index `{t}`", lineno + 1))
            })
            .collect::<Result<Vec<_>, _>>()?;
        cliques.push(Clique::new(members));
    }
    Ok(cliques)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_file_round_trip() {
        let cliques = vec![Clique::new(vec![0, 5, 9]), Clique::new(vec![1, 2])];
        let text = write_clique_file(&cliques);
        assert_eq!(text, "0 5 9\n1 2\n");
        assert_eq!(
            parse_clique_file(&format!("# header\n{text}\n")).unwrap(),
            cliques
        );
        assert!(parse_clique_file("1 x\n").is_err());
    }
}
