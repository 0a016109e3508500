//! Block designs with `λ = 1`, their arithmetic parameters and the
//! exhaustive pair-coverage validator.

use std::collections::HashMap;
use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DesignError {
    #[error("block {block} has {found} points, expected {expected}")]
    RaggedBlocks {
        block: usize,
        expected: usize,
        found: usize,
    },
    #[error("block {block} repeats point `{point}`")]
    DuplicatePoint { block: usize, point: String },
    #[error("duplicate block {{{0}}}")]
    DuplicateBlock(String),
    #[error("point index {index} out of range for {n} points")]
    PointOutOfRange { index: usize, n: usize },
    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),
    #[error("line {line}: unparseable token `{token}`")]
    UnparseableToken { line: usize, token: String },
    #[error("line {line}: {message}")]
    BadHeader { line: usize, message: String },
    #[error("malformed design document: {0}")]
    Json(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("parameters need n > m >= 2, got n = {n}, m = {m}")]
    BadParameters { n: u64, m: u64 },
}

/// Arithmetic parameters of a putative 2-(n,m,1) design.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignParameters {
    pub n: u64,
    pub m: u64,
    pub lambda: u64,
    /// Replication number `(n-1)/(m-1)`.
    pub r: Ratio<u64>,
    /// Block count `n(n-1)/(m(m-1))`.
    pub b: Ratio<u64>,
    pub r_integral: bool,
    pub b_integral: bool,
}

impl DesignParameters {
    /// Parameters for any `n >= m >= 2`, including the trivial one-block case.
    pub fn compute(n: u64, m: u64) -> Result<Self, DesignError> {
        if m < 2 || n < m {
            return Err(DesignError::BadParameters { n, m });
        }
        let r = Ratio::new(n - 1, m - 1);
        let b = Ratio::new(n * (n - 1), m * (m - 1));
        Ok(DesignParameters {
            n,
            m,
            lambda: 1,
            r_integral: r.is_integer(),
            b_integral: b.is_integer(),
            r,
            b,
        })
    }

    pub fn admissible(&self) -> bool {
        self.r_integral && self.b_integral
    }

    pub fn r_value(&self) -> Option<u64> {
        self.r_integral.then(|| self.r.to_integer())
    }

    pub fn b_value(&self) -> Option<u64> {
        self.b_integral.then(|| self.b.to_integer())
    }
}

impl fmt::Display for DesignParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "2-({},{},{}) r={} b={}",
            self.n, self.m, self.lambda, self.r, self.b
        )
    }
}

/// Necessary divisibility conditions for a 2-(n,m,1) design.
pub fn admissibility(n: u64, m: u64) -> Result<DesignParameters, DesignError> {
    if n <= m {
        return Err(DesignError::BadParameters { n, m });
    }
    DesignParameters::compute(n, m)
}

/// A design in canonical form: every block sorted ascending, block list
/// sorted lexicographically, labels indexed densely `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Design {
    m: usize,
    labels: Vec<String>,
    blocks: Vec<Vec<usize>>,
}

impl Design {
    /// Builds a design from labels and index blocks and canonicalizes it.
    pub fn new(labels: Vec<String>, blocks: Vec<Vec<usize>>) -> Result<Self, DesignError> {
        let n = labels.len();
        let mut seen = HashMap::with_capacity(n);
        for label in &labels {
            if seen.insert(label.as_str(), ()).is_some() {
                return Err(DesignError::DuplicateLabel(label.clone()));
            }
        }
        let m = blocks.first().map_or(0, Vec::len);
        let mut canonical = Vec::with_capacity(blocks.len());
        for (i, block) in blocks.into_iter().enumerate() {
            if block.len() != m {
                return Err(DesignError::RaggedBlocks {
                    block: i,
                    expected: m,
                    found: block.len(),
                });
            }
            let mut block = block;
            block.sort_unstable();
            if let Some(&index) = block.iter().find(|&&p| p >= n) {
                return Err(DesignError::PointOutOfRange { index, n });
            }
            if let Some(w) = block.windows(2).find(|w| w[0] == w[1]) {
                return Err(DesignError::DuplicatePoint {
                    block: i,
                    point: labels[w[0]].clone(),
                });
            }
            canonical.push(block);
        }
        canonical.sort();
        if let Some(w) = canonical.windows(2).find(|w| w[0] == w[1]) {
            let tokens: Vec<_> = w[0].iter().map(|&p| labels[p].as_str()).collect();
            return Err(DesignError::DuplicateBlock(tokens.join(",")));
        }
        Ok(Design {
            m,
            labels,
            blocks: canonical,
        })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn lambda(&self) -> usize {
        1
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, point: usize) -> &str {
        &self.labels[point]
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, index: usize) -> &[usize] {
        &self.blocks[index]
    }

    pub fn point_index(&self, token: &str) -> Option<usize> {
        let token = if token == "∞" { "inf" } else { token };
        self.labels.iter().position(|l| l == token)
    }

    /// Index of the block with exactly these points, in any order.
    pub fn find_block(&self, points: &[usize]) -> Option<usize> {
        let mut key = points.to_vec();
        key.sort_unstable();
        self.blocks.binary_search(&key).ok()
    }

    /// Block index for a list of point tokens.
    pub fn find_block_by_tokens<S: AsRef<str>>(
        &self,
        tokens: &[S],
    ) -> Result<Option<usize>, DesignError> {
        let points = tokens
            .iter()
            .map(|t| {
                self.point_index(t.as_ref())
                    .ok_or_else(|| DesignError::UnknownPoint(t.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.find_block(&points))
    }

    pub fn block_tokens(&self, index: usize) -> Vec<&str> {
        self.blocks[index]
            .iter()
            .map(|&p| self.labels[p].as_str())
            .collect()
    }

    /// Blocks through each point.
    pub fn point_blocks(&self) -> Vec<Vec<usize>> {
        let mut star = vec![Vec::new(); self.n()];
        for (i, block) in self.blocks.iter().enumerate() {
            for &p in block {
                star[p].push(i);
            }
        }
        star
    }

    /// The same design with one block removed (used for fault injection).
    pub fn without_block(&self, index: usize) -> Design {
        let mut blocks = self.blocks.clone();
        blocks.remove(index);
        Design {
            m: self.m,
            labels: self.labels.clone(),
            blocks,
        }
    }

    pub fn params(&self) -> Option<DesignParameters> {
        DesignParameters::compute(self.n() as u64, self.m as u64).ok()
    }

    /// The design's blocks restricted to a sub-collection, keeping the full
    /// point set.
    pub fn sub_collection(&self, blocks: &[usize]) -> Result<Design, DesignError> {
        Design::new(
            self.labels.clone(),
            blocks.iter().map(|&i| self.blocks[i].clone()).collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// An unordered point pair not covered exactly once.
    PairCoverage {
        a: usize,
        b: usize,
        count: usize,
    },
    /// A point whose replication differs from `r`.
    Replication {
        point: usize,
        count: usize,
        expected: usize,
    },
    BlockCount {
        count: usize,
        expected: usize,
    },
    /// `(n, m)` fails the divisibility conditions or `n < m`.
    Inadmissible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub valid: bool,
    pub params: Option<DesignParameters>,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn uncovered_pairs(&self) -> usize {
        self.violations
            .iter()
            .filter(|v| matches!(v, Violation::PairCoverage { count: 0, .. }))
            .count()
    }
}

/// Exhaustively checks the 2-(n,m,1) axioms: every point pair in exactly one
/// block, replication `r` at every point and `b = n(n-1)/(m(m-1))` blocks.
pub fn validate_2design(design: &Design) -> ValidationReport {
    let n = design.n();
    let params = design.params();
    let mut violations = Vec::new();

    let mut counts = vec![0usize; n * n];
    let mut replication = vec![0usize; n];
    for block in design.blocks() {
        for (i, &p) in block.iter().enumerate() {
            replication[p] += 1;
            for &q in &block[i + 1..] {
                counts[p * n + q] += 1;
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            let count = counts[a * n + b];
            if count != 1 {
                violations.push(Violation::PairCoverage { a, b, count });
            }
        }
    }

    match params.as_ref().filter(|p| p.admissible()) {
        Some(p) => {
            let r = p.r.to_integer() as usize;
            for (point, &count) in replication.iter().enumerate() {
                if count != r {
                    violations.push(Violation::Replication {
                        point,
                        count,
                        expected: r,
                    });
                }
            }
            let expected = p.b.to_integer() as usize;
            if design.b() != expected {
                violations.push(Violation::BlockCount {
                    count: design.b(),
                    expected,
                });
            }
        }
        None => violations.push(Violation::Inadmissible),
    }

    ValidationReport {
        valid: violations.is_empty(),
        params,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    fn fano() -> Design {
        let blocks = (0..7).map(|i| vec![i, (i + 1) % 7, (i + 3) % 7]).collect();
        Design::new(labels(7), blocks).unwrap()
    }

    #[test]
    fn canonical_form_sorts_blocks() {
        let d = Design::new(labels(4), vec![vec![3, 1], vec![2, 0]]).unwrap();
        assert_eq!(d.blocks(), &[vec![0, 2], vec![1, 3]]);
        let again = Design::new(d.labels().to_vec(), d.blocks().to_vec()).unwrap();
        assert_eq!(again, d);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            Design::new(labels(3), vec![vec![0, 1, 2], vec![0, 1]]),
            Err(DesignError::RaggedBlocks { block: 1, .. })
        ));
        assert!(matches!(
            Design::new(labels(3), vec![vec![0, 1, 1]]),
            Err(DesignError::DuplicatePoint { .. })
        ));
        assert!(matches!(
            Design::new(labels(3), vec![vec![0, 1, 2], vec![2, 1, 0]]),
            Err(DesignError::DuplicateBlock(_))
        ));
        assert!(matches!(
            Design::new(labels(3), vec![vec![0, 1, 5]]),
            Err(DesignError::PointOutOfRange { index: 5, n: 3 })
        ));
    }

    #[test]
    fn admissibility_examples() {
        let p = admissibility(66, 6).unwrap();
        assert!(p.admissible());
        assert_eq!((p.r_value(), p.b_value()), (Some(13), Some(143)));

        let p = admissibility(39, 6).unwrap();
        assert!(!p.r_integral);
        assert_eq!(p.r, Ratio::new(38, 5));
        assert!(!p.admissible());

        let p = admissibility(26, 6).unwrap();
        assert!(p.r_integral && !p.b_integral);
        assert_eq!(p.b, Ratio::new(650, 30));

        assert!(admissibility(6, 6).is_err());
        assert!(admissibility(5, 6).is_err());
    }

    #[test]
    fn fano_validates() {
        let report = validate_2design(&fano());
        assert!(report.valid, "{:?}", report.violations);
        let p = report.params.unwrap();
        assert_eq!((p.r_value(), p.b_value()), (Some(3), Some(7)));
    }

    #[test]
    fn missing_block_is_reported() {
        let d = fano().without_block(0);
        let report = validate_2design(&d);
        assert!(!report.valid);
        assert_eq!(report.uncovered_pairs(), 3);
        assert!(report.violations.contains(&Violation::BlockCount {
            count: 6,
            expected: 7
        }));
    }

    #[test]
    fn single_block_is_a_trivial_design() {
        let d = Design::new(labels(3), vec![vec![0, 1, 2]]).unwrap();
        assert!(validate_2design(&d).valid);
    }

    #[test]
    fn empty_design_is_not_valid() {
        let d = Design::new(Vec::new(), Vec::new()).unwrap();
        assert_eq!((d.n(), d.b()), (0, 0));
        assert!(!validate_2design(&d).valid);
    }
}
