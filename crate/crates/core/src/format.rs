//! Text formats for designs.
//!
//! **Blocklist**: one block per line, whitespace separated point tokens,
//! `#` starts a comment, blank lines are ignored. Two optional headers may
//! precede the first block:
//!
//! ```text
//! points: 7
//! labels: 0 1 2 3 4 5 6
//! ```
//!
//! `points:` fixes `n` (missing points are padded with the smallest unused
//! positive integers); `labels:` fixes the dense index order. Without a
//! `labels:` header points are indexed in order of first appearance.
//! Serialization always writes both headers so that parsing it back
//! reproduces the design exactly.
//!
//! **Json**: `{"blocks":[[tokens..]..],"labels":[..],"lambda":1,"m":..,"n":..}`
//! with keys in sorted order.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::design::{Design, DesignError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DesignFormat {
    #[default]
    Blocklist,
    Json,
}

impl FromStr for DesignFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "blocklist" | "blk" => Ok(DesignFormat::Blocklist),
            "json" => Ok(DesignFormat::Json),
            other => Err(format!("unknown design format `{other}`")),
        }
    }
}

/// A token is a run of ASCII alphanumerics and `_ . - +`, or `∞`.
pub fn is_valid_token(token: &str) -> bool {
    token == "∞"
        || (!token.is_empty()
            && token
                .chars()
                .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '-' | '+')))
}

fn normalize(token: &str) -> &str {
    if token == "∞" {
        "inf"
    } else {
        token
    }
}

pub fn parse_design(text: &str, format: DesignFormat) -> Result<Design, DesignError> {
    match format {
        DesignFormat::Blocklist => parse_blocklist(text),
        DesignFormat::Json => parse_json(text),
    }
}

pub fn serialize_design(design: &Design, format: DesignFormat) -> String {
    match format {
        DesignFormat::Blocklist => serialize_blocklist(design),
        DesignFormat::Json => serialize_json(design),
    }
}

fn parse_blocklist(text: &str) -> Result<Design, DesignError> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut fixed_labels = false;
    let mut declared_points: Option<usize> = None;
    let mut blocks: Vec<Vec<usize>> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some((key, rest)) = line.split_once(':') {
            let key = key.trim();
            if !blocks.is_empty() {
                return Err(DesignError::BadHeader {
                    line: line_no,
                    message: format!("header `{key}` after the first block"),
                });
            }
            match key {
                "points" => {
                    let n = rest
                        .trim()
                        .parse::<usize>()
                        .map_err(|_| DesignError::BadHeader {
                            line: line_no,
                            message: format!("bad point count `{}`", rest.trim()),
                        })?;
                    declared_points = Some(n);
                }
                "labels" => {
                    for token in rest.split_whitespace() {
                        if !is_valid_token(token) {
                            return Err(DesignError::UnparseableToken {
                                line: line_no,
                                token: token.to_string(),
                            });
                        }
                        let token = normalize(token).to_string();
                        if index.insert(token.clone(), labels.len()).is_some() {
                            return Err(DesignError::DuplicateLabel(token));
                        }
                        labels.push(token);
                    }
                    fixed_labels = true;
                }
                other => {
                    return Err(DesignError::BadHeader {
                        line: line_no,
                        message: format!("unknown header `{other}`"),
                    })
                }
            }
            continue;
        }

        let mut block = Vec::new();
        for token in line.split_whitespace() {
            if !is_valid_token(token) {
                return Err(DesignError::UnparseableToken {
                    line: line_no,
                    token: token.to_string(),
                });
            }
            let token = normalize(token);
            let point = match index.get(token) {
                Some(&p) => p,
                None if fixed_labels => return Err(DesignError::UnknownPoint(token.to_string())),
                None => {
                    index.insert(token.to_string(), labels.len());
                    labels.push(token.to_string());
                    labels.len() - 1
                }
            };
            block.push(point);
        }
        blocks.push(block);
    }

    if let Some(n) = declared_points {
        if n < labels.len() {
            return Err(DesignError::BadHeader {
                line: 0,
                message: format!("`points: {n}` but {} distinct points appear", labels.len()),
            });
        }
        let mut next = 1usize;
        while labels.len() < n {
            while index.contains_key(&next.to_string()) {
                next += 1;
            }
            index.insert(next.to_string(), labels.len());
            labels.push(next.to_string());
        }
    }

    Design::new(labels, blocks)
}

fn serialize_blocklist(design: &Design) -> String {
    if design.n() == 0 {
        return String::new();
    }
    let mut out = String::new();
    let _ = writeln!(out, "points: {}", design.n());
    let _ = writeln!(out, "labels: {}", design.labels().join(" "));
    for i in 0..design.b() {
        out.push_str(&design.block_tokens(i).join(" "));
        out.push('\n');
    }
    out
}

// Field order is alphabetical so the derived serialization has sorted keys.
#[derive(Serialize, Deserialize)]
struct JsonDesign {
    blocks: Vec<Vec<String>>,
    labels: Vec<String>,
    lambda: usize,
    m: usize,
    n: usize,
}

fn parse_json(text: &str) -> Result<Design, DesignError> {
    let doc: JsonDesign =
        serde_json::from_str(text).map_err(|e| DesignError::Json(e.to_string()))?;
    if doc.lambda != 1 {
        return Err(DesignError::Json(format!(
            "lambda must be 1, got {}",
            doc.lambda
        )));
    }
    if doc.n != doc.labels.len() {
        return Err(DesignError::Json(format!(
            "n = {} but {} labels",
            doc.n,
            doc.labels.len()
        )));
    }
    let mut index = HashMap::new();
    for (i, label) in doc.labels.iter().enumerate() {
        if !is_valid_token(label) {
            return Err(DesignError::UnparseableToken {
                line: 0,
                token: label.clone(),
            });
        }
        if index.insert(normalize(label).to_string(), i).is_some() {
            return Err(DesignError::DuplicateLabel(label.clone()));
        }
    }
    let mut blocks = Vec::with_capacity(doc.blocks.len());
    for (i, block) in doc.blocks.iter().enumerate() {
        if block.len() != doc.m {
            return Err(DesignError::RaggedBlocks {
                block: i,
                expected: doc.m,
                found: block.len(),
            });
        }
        let points = block
            .iter()
            .map(|t| {
                index
                    .get(normalize(t))
                    .copied()
                    .ok_or_else(|| DesignError::UnknownPoint(t.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        blocks.push(points);
    }
    let labels = doc
        .labels
        .iter()
        .map(|l| normalize(l).to_string())
        .collect();
    Design::new(labels, blocks)
}

fn serialize_json(design: &Design) -> String {
    let doc = JsonDesign {
        blocks: (0..design.b())
            .map(|i| {
                design
                    .block_tokens(i)
                    .into_iter()
                    .map(String::from)
                    .collect()
            })
            .collect(),
        labels: design.labels().to_vec(),
        lambda: design.lambda(),
        m: design.m(),
        n: design.n(),
    };
    let mut out = serde_json::to_string(&doc).expect("design serializes");
    out.push('\n');
    out
}
