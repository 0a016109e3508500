//! Strongly regular graph parameters: exhaustive verification, the closed
//! form for block graphs of 2-(n,m,1) designs, and the Delsarte clique bound.
//!
//! Eigenvalues are the roots of `x^2 - (λ-μ)x - (k-μ) = 0`, computed over
//! the integers. Graphs whose non-principal eigenvalues are irrational are
//! rejected.

use std::fmt;

use thiserror::Error;

use crate::design::DesignParameters;
use crate::graph::BlockGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SrgParams {
    pub v: i64,
    pub k: i64,
    pub lambda: i64,
    pub mu: i64,
    /// Non-negative non-principal eigenvalue.
    pub r_eig: i64,
    /// Smallest eigenvalue `θ`.
    pub s_eig: i64,
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SRG({},{},{},{}) eigenvalues {}, {}",
            self.v, self.k, self.lambda, self.mu, self.r_eig, self.s_eig
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degeneracy {
    Complete,
    Empty,
    TooSmall,
}

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Degeneracy::Complete => "complete",
            Degeneracy::Empty => "empty",
            Degeneracy::TooSmall => "fewer than two vertices",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SrgError {
    #[error("degenerate graph ({0})")]
    Degenerate(Degeneracy),
    #[error("not regular: vertex {vertex} has degree {degree}, vertex 0 has {expected}")]
    NotRegular {
        vertex: usize,
        degree: usize,
        expected: usize,
    },
    #[error("adjacent pair ({a}, {b}) has {count} common neighbours, expected {expected}")]
    NonConstantLambda {
        a: usize,
        b: usize,
        count: usize,
        expected: usize,
    },
    #[error("non-adjacent pair ({a}, {b}) has {count} common neighbours, expected {expected}")]
    NonConstantMu {
        a: usize,
        b: usize,
        count: usize,
        expected: usize,
    },
    #[error("eigenvalues of ({k},{lambda},{mu}) are not integral")]
    NonIntegralEigenvalues { k: i64, lambda: i64, mu: i64 },
    #[error("parameters 2-({n},{m},1) are not admissible")]
    Inadmissible { n: u64, m: u64 },
    #[error("2-({n},{m},1) is symmetric (b = n); its block graph is complete")]
    Symmetric { n: u64, m: u64 },
}

fn isqrt(x: i64) -> Option<i64> {
    if x < 0 {
        return None;
    }
    let mut r = (x as f64).sqrt() as i64;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    (r * r == x).then_some(r)
}

/// Completes `(v, k, λ, μ)` with integral eigenvalues.
pub fn with_eigenvalues(v: i64, k: i64, lambda: i64, mu: i64) -> Result<SrgParams, SrgError> {
    let trace = lambda - mu;
    let disc = trace * trace + 4 * (k - mu);
    let root = isqrt(disc).ok_or(SrgError::NonIntegralEigenvalues { k, lambda, mu })?;
    if (trace + root) % 2 != 0 {
        return Err(SrgError::NonIntegralEigenvalues { k, lambda, mu });
    }
    Ok(SrgParams {
        v,
        k,
        lambda,
        mu,
        r_eig: (trace + root) / 2,
        s_eig: (trace - root) / 2,
    })
}

/// Exhaustive check of regularity and of the common-neighbour counts of
/// every vertex pair.
pub fn verify_srg(graph: &BlockGraph) -> Result<SrgParams, SrgError> {
    let v = graph.v();
    if v < 2 {
        return Err(SrgError::Degenerate(Degeneracy::TooSmall));
    }
    let k = graph.degree(0);
    if let Some(vertex) = (1..v).find(|&i| graph.degree(i) != k) {
        return Err(SrgError::NotRegular {
            vertex,
            degree: graph.degree(vertex),
            expected: k,
        });
    }
    if k == v - 1 {
        return Err(SrgError::Degenerate(Degeneracy::Complete));
    }
    if k == 0 {
        return Err(SrgError::Degenerate(Degeneracy::Empty));
    }

    let mut lambda = None;
    let mut mu = None;
    for a in 0..v {
        for b in a + 1..v {
            let count = graph.neighbours(a).intersection_count(graph.neighbours(b));
            if graph.adjacent(a, b) {
                match lambda {
                    None => lambda = Some(count),
                    Some(expected) if expected != count => {
                        return Err(SrgError::NonConstantLambda {
                            a,
                            b,
                            count,
                            expected,
                        })
                    }
                    _ => {}
                }
            } else {
                match mu {
                    None => mu = Some(count),
                    Some(expected) if expected != count => {
                        return Err(SrgError::NonConstantMu {
                            a,
                            b,
                            count,
                            expected,
                        })
                    }
                    _ => {}
                }
            }
        }
    }
    // A regular graph that is neither complete nor empty has both kinds of pair.
    let (lambda, mu) = (lambda.unwrap_or(0), mu.unwrap_or(0));
    with_eigenvalues(v as i64, k as i64, lambda as i64, mu as i64)
}

/// SRG parameters of the block graph of a non-symmetric 2-(n,m,1) design.
pub fn srg_from_design_params(n: u64, m: u64) -> Result<SrgParams, SrgError> {
    let params = DesignParameters::compute(n, m).map_err(|_| SrgError::Inadmissible { n, m })?;
    let (Some(r), Some(b)) = (params.r_value(), params.b_value()) else {
        return Err(SrgError::Inadmissible { n, m });
    };
    if b <= n {
        return Err(SrgError::Symmetric { n, m });
    }
    let (n, m, r, b) = (n as i64, m as i64, r as i64, b as i64);
    let k = m * (n - m) / (m - 1);
    let lambda = (m - 1) * (m - 1) + r - 2;
    let mu = m * m;
    with_eigenvalues(b, k, lambda, mu)
}

/// `floor(1 - k/θ)`; `None` unless `θ < 0`.
pub fn delsarte_bound(params: &SrgParams) -> Option<u64> {
    if params.s_eig >= 0 || params.k < 0 {
        return None;
    }
    Some(1 + (params.k / -params.s_eig) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{builtin_design, BuiltinName};
    use crate::graph::build_block_graph;

    #[test]
    fn closed_form_examples() {
        let p = srg_from_design_params(66, 6).unwrap();
        assert_eq!((p.v, p.k, p.lambda, p.mu, p.s_eig), (143, 72, 36, 36, -6));
        let p = srg_from_design_params(9, 3).unwrap();
        assert_eq!((p.v, p.k, p.lambda, p.mu, p.s_eig), (12, 9, 6, 9, -3));
        assert!(matches!(
            srg_from_design_params(7, 3),
            Err(SrgError::Symmetric { .. })
        ));
        assert!(matches!(
            srg_from_design_params(39, 6),
            Err(SrgError::Inadmissible { .. })
        ));
    }

    #[test]
    fn delsarte_examples() {
        let p = srg_from_design_params(66, 6).unwrap();
        assert_eq!(delsarte_bound(&p), Some(13));
        let p = srg_from_design_params(9, 3).unwrap();
        assert_eq!(delsarte_bound(&p), Some(4));
        // k = -θ: the bound is two.
        let edge_case = SrgParams {
            v: 4,
            k: 1,
            lambda: 0,
            mu: 0,
            r_eig: 1,
            s_eig: -1,
        };
        assert_eq!(delsarte_bound(&edge_case), Some(2));
        let no_negative = SrgParams {
            s_eig: 0,
            ..edge_case
        };
        assert_eq!(delsarte_bound(&no_negative), None);
    }

    #[test]
    fn verify_builtins() {
        let g = build_block_graph(&builtin_design(BuiltinName::Ag23));
        let p = verify_srg(&g).unwrap();
        assert_eq!(p, srg_from_design_params(9, 3).unwrap());

        let g = build_block_graph(&builtin_design(BuiltinName::Fano));
        assert_eq!(
            verify_srg(&g),
            Err(SrgError::Degenerate(Degeneracy::Complete))
        );
    }

    #[test]
    fn verify_rejects_irregular_and_non_srg() {
        let path = BlockGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            verify_srg(&path),
            Err(SrgError::NotRegular { .. })
        ));
        // The 6-cycle is regular but non-adjacent pairs have 2 or 0 common neighbours.
        let c6 =
            BlockGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert!(matches!(
            verify_srg(&c6),
            Err(SrgError::NonConstantMu { .. })
        ));
        let empty = BlockGraph::from_edges(3, &[]).unwrap();
        assert_eq!(
            verify_srg(&empty),
            Err(SrgError::Degenerate(Degeneracy::Empty))
        );
        assert_eq!(
            verify_srg(&BlockGraph::complete(1)),
            Err(SrgError::Degenerate(Degeneracy::TooSmall))
        );
    }

    #[test]
    fn petersen_and_pentagon() {
        let petersen = BlockGraph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        let p = verify_srg(&petersen).unwrap();
        assert_eq!(
            (p.v, p.k, p.lambda, p.mu, p.r_eig, p.s_eig),
            (10, 3, 0, 1, 1, -2)
        );
        // C5 is a conference graph with irrational eigenvalues.
        let c5 = BlockGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(matches!(
            verify_srg(&c5),
            Err(SrgError::NonIntegralEigenvalues { .. })
        ));
    }

    #[test]
    fn eigenvalue_identities_hold() {
        for (n, m) in [
            (66, 6),
            (9, 3),
            (13, 3),
            (15, 3),
            (16, 4),
            (25, 5),
            (28, 4),
            (21, 3),
        ] {
            let p = srg_from_design_params(n, m).unwrap();
            assert_eq!(p.r_eig * p.s_eig, p.mu - p.k);
            assert_eq!(p.r_eig + p.s_eig, p.lambda - p.mu);
            assert_eq!(p.k * (p.k - p.lambda - 1), (p.v - p.k - 1) * p.mu);
            assert_eq!(p.s_eig, -(m as i64));
            assert_eq!(delsarte_bound(&p), Some((n - 1) / (m - 1)));
        }
    }
}
