//! Block intersection graphs stored as dense bit-vector adjacency rows.

use std::fmt::Write as _;

use thiserror::Error;

use crate::bitset::BitSet;
use crate::design::Design;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("adjacency row {row} has length {found}, expected {expected}")]
    BadRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("vertex {0} is adjacent to itself")]
    Loop(usize),
    #[error("adjacency is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockGraph {
    rows: Vec<BitSet>,
    design_ref: String,
}

impl BlockGraph {
    /// Vertex `i` is block `i`; two vertices are adjacent iff the blocks meet.
    pub fn from_design(design: &Design, design_ref: impl Into<String>) -> Self {
        let b = design.b();
        let incidence: Vec<BitSet> = design
            .blocks()
            .iter()
            .map(|block| BitSet::from_indices(design.n(), block.iter().copied()))
            .collect();
        let mut rows = vec![BitSet::new(b); b];
        for i in 0..b {
            for j in i + 1..b {
                if incidence[i].intersects(&incidence[j]) {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
            }
        }
        BlockGraph {
            rows,
            design_ref: design_ref.into(),
        }
    }

    /// General graph from adjacency rows; checks symmetry and irreflexivity.
    pub fn from_rows(rows: Vec<BitSet>, design_ref: impl Into<String>) -> Result<Self, GraphError> {
        let v = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != v {
                return Err(GraphError::BadRow {
                    row: i,
                    expected: v,
                    found: row.len(),
                });
            }
            if row.contains(i) {
                return Err(GraphError::Loop(i));
            }
            if let Some(j) = row.iter().find(|&j| !rows[j].contains(i)) {
                return Err(GraphError::Asymmetric(i, j));
            }
        }
        Ok(BlockGraph {
            rows,
            design_ref: design_ref.into(),
        })
    }

    pub fn from_edges(v: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut rows = vec![BitSet::new(v); v];
        for &(a, b) in edges {
            rows[a].insert(b);
            rows[b].insert(a);
        }
        BlockGraph::from_rows(rows, "edges")
    }

    pub fn complete(v: usize) -> Self {
        let rows = (0..v)
            .map(|i| {
                let mut r = BitSet::full(v);
                r.remove(i);
                r
            })
            .collect();
        BlockGraph {
            rows,
            design_ref: format!("K{v}"),
        }
    }

    pub fn v(&self) -> usize {
        self.rows.len()
    }

    pub fn design_ref(&self) -> &str {
        &self.design_ref
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    pub fn neighbours(&self, a: usize) -> &BitSet {
        &self.rows[a]
    }

    pub fn rows(&self) -> &[BitSet] {
        &self.rows
    }

    pub fn degree(&self, a: usize) -> usize {
        self.rows[a].count()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    pub fn is_complete(&self) -> bool {
        let v = self.v();
        self.rows.iter().all(|r| r.count() + 1 == v)
    }

    /// Subgraph induced on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> BlockGraph {
        let k = vertices.len();
        let rows = vertices
            .iter()
            .map(|&a| BitSet::from_indices(k, (0..k).filter(|&j| self.adjacent(a, vertices[j]))))
            .collect();
        BlockGraph {
            rows,
            design_ref: format!("{}[induced {}]", self.design_ref, k),
        }
    }

    /// A copy with the adjacency of `a` and `b` flipped.
    pub fn with_toggled_edge(&self, a: usize, b: usize) -> BlockGraph {
        assert_ne!(a, b);
        let mut g = self.clone();
        if g.adjacent(a, b) {
            g.rows[a].remove(b);
            g.rows[b].remove(a);
        } else {
            g.rows[a].insert(b);
            g.rows[b].insert(a);
        }
        g
    }

    /// Row `i` lists the entries `(i, j)` for `j > i` as `0`/`1` characters.
    pub fn upper_triangular_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.v() {
            for j in i + 1..self.v() {
                out.push(if self.adjacent(i, j) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    /// One `i j` line per edge with `i < j`, lexicographic.
    pub fn edge_list_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.v() {
            for j in self.rows[i].iter().filter(|&j| j > i) {
                let _ = writeln!(out, "{i} {j}");
            }
        }
        out
    }
}

pub fn build_block_graph(design: &Design) -> BlockGraph {
    BlockGraph::from_design(design, "design")
}
