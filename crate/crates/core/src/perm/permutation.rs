use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("permutations act on {left} and {right} points")]
    DomainMismatch { left: usize, right: usize },
    #[error("image list is not a bijection on 0..{0}")]
    NotBijective(usize),
    #[error("unknown point `{0}` in cycle notation")]
    UnknownToken(String),
    #[error("point `{0}` appears more than once")]
    RepeatedPoint(String),
    #[error("malformed cycle notation: {0}")]
    Malformed(String),
    #[error("group closure exceeded {0} elements")]
    CapExceeded(usize),
    #[error("not an automorphism: the image of block {block} is not a block")]
    NotAnAutomorphism { block: usize },
    #[error("the image of clique {clique} is not in the clique list")]
    CliqueActionUndefined { clique: usize },
}

/// A bijection on `0..n`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(PermError::NotBijective(n));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds from disjoint cycles over `0..n`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if a >= n {
                    return Err(PermError::NotBijective(n));
                }
                if std::mem::replace(&mut used[a], true) {
                    return Err(PermError::RepeatedPoint(a.to_string()));
                }
                images[a] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// Non-trivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.images[start];
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.images[next];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle notation using `labels[i]` for point `i`; `()` for the identity.
    pub fn to_cycle_string<S: AsRef<str>>(&self, labels: &[S]) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut out = String::new();
        for cycle in cycles {
            let tokens: Vec<&str> = cycle.iter().map(|&i| labels[i].as_ref()).collect();
            let _ = write!(out, "({})", tokens.join(" "));
        }
        out
    }

    /// Cycle notation over the indices themselves.
    pub fn to_index_cycle_string(&self) -> String {
        let labels: Vec<String> = (0..self.degree()).map(|i| i.to_string()).collect();
        self.to_cycle_string(&labels)
    }
}

/// `x ↦ q(p(x))`: apply `p` first, then `q`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation, PermError> {
    if p.degree() != q.degree() {
        return Err(PermError::DomainMismatch {
            left: p.degree(),
            right: q.degree(),
        });
    }
    Ok(Permutation {
        images: p.images.iter().map(|&i| q.images[i]).collect(),
    })
}

pub fn inverse(p: &Permutation) -> Permutation {
    p.inverse()
}

/// Parses cycle notation such as `(0_0 10_1 1_2)(1_0 0_1 10_2)` over the
/// given point labels. Separators inside a cycle may be whitespace, `,` or
/// `~`. Unlisted points are fixed; empty text is the identity.
pub fn parse_cycles<S: AsRef<str>>(text: &str, labels: &[S]) -> Result<Permutation, PermError> {
    let index: HashMap<&str, usize> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_ref(), i))
        .collect();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut used = vec![false; labels.len()];
    let mut current: Option<Vec<usize>> = None;
    let mut token = String::new();

    let mut flush =
        |token: &mut String, current: &mut Option<Vec<usize>>| -> Result<(), PermError> {
            if token.is_empty() {
                return Ok(());
            }
            let name = if token == "∞" {
                "inf"
            } else {
                token.as_str()
            };
            let Some(cycle) = current.as_mut() else {
                return Err(PermError::Malformed(format!("`{token}` outside a cycle")));
            };
            let &i = index
                .get(name)
                .ok_or_else(|| PermError::UnknownToken(token.clone()))?;
            if std::mem::replace(&mut used[i], true) {
                return Err(PermError::RepeatedPoint(token.clone()));
            }
            cycle.push(i);
            token.clear();
            Ok(())
        };

    for c in text.chars() {
        match c {
            '(' => {
                flush(&mut token, &mut current)?;
                if current.is_some() {
                    return Err(PermError::Malformed("nested `(`".into()));
                }
                current = Some(Vec::new());
            }
            ')' => {
                flush(&mut token, &mut current)?;
                let cycle = current
                    .take()
                    .ok_or_else(|| PermError::Malformed("unmatched `)`".into()))?;
                cycles.push(cycle);
            }
            c if c.is_whitespace() || c == ',' || c == '~' => flush(&mut token, &mut current)?,
            c => token.push(c),
        }
    }
    flush(&mut token, &mut current)?;
    if current.is_some() {
        return Err(PermError::Malformed("unclosed `(`".into()));
    }
    Permutation::from_cycles(labels.len(), &cycles)
}
