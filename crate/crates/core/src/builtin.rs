//! Embedded designs and the reference data that accompanies them.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::design::Design;
use crate::develop::Development;
use crate::format::{parse_design, DesignFormat};
use crate::point::{parse_points, StructuredPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuiltinName {
    /// The cyclic 2-(66,6,1) design developed from eleven base blocks mod 13.
    Main66,
    /// First listed 2-(66,6,1) design without a known cyclic description.
    AppendixA66,
    /// Second listed 2-(66,6,1) design.
    AppendixB66,
    /// 2-(7,3,1), the Fano plane.
    Fano,
    /// Lines of AG(2,3) as a 2-(9,3,1) design.
    Ag23,
    /// PG(2,3) as a 2-(13,4,1) design.
    Pg23,
}

impl BuiltinName {
    pub const ALL: [BuiltinName; 6] = [
        BuiltinName::Main66,
        BuiltinName::AppendixA66,
        BuiltinName::AppendixB66,
        BuiltinName::Fano,
        BuiltinName::Ag23,
        BuiltinName::Pg23,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BuiltinName::Main66 => "main66",
            BuiltinName::AppendixA66 => "appendixA66",
            BuiltinName::AppendixB66 => "appendixB66",
            BuiltinName::Fano => "fano",
            BuiltinName::Ag23 => "ag23",
            BuiltinName::Pg23 => "pg23",
        }
    }
}

impl fmt::Display for BuiltinName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown builtin design `{0}` (expected one of main66, appendixA66, appendixB66, fano, ag23, pg23)")]
pub struct UnknownBuiltin(pub String);

impl FromStr for BuiltinName {
    type Err = UnknownBuiltin;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BuiltinName::ALL
            .into_iter()
            .find(|b| b.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownBuiltin(s.to_string()))
    }
}

/// The eleven base blocks `B_1..B_11` (index 0 here is `B_1`).
pub const MAIN66_BASE_BLOCKS: [&str; 11] = [
    "2_0 5_0 4_1 9_1 0_a 6_a",
    "1_0 2_0 6_0 12_2 5_b 8_b",
    "6_1 2_1 12_2 1_2 0_a 5_a",
    "3_1 6_1 5_1 10_0 2_b 11_b",
    "5_2 6_2 10_0 3_0 0_a 2_a",
    "9_2 5_2 2_2 4_1 6_b 7_b",
    "7_0 9_0 10_1 1_2 3_a 4_b",
    "2_a 6_a 5_a 4_b 12_b 10_b",
    "8_1 1_1 4_2 3_0 9_a 12_b",
    "11_2 3_2 12_0 9_1 1_a 10_b",
    "inf 0_0 0_1 0_2 0_a 0_b",
];

/// The two published generators of the automorphism group of `main66`.
pub const MAIN66_GENERATORS: [&str; 2] = [
    "(0_0 10_1 1_2)(1_0 0_1 10_2)(2_0 3_1 6_2)(3_0 6_1 2_2)(4_0 9_1 11_2)(5_0 12_1 7_2)\
     (6_0 2_1 3_2)(7_0 5_1 12_2)(8_0 8_1 8_2)(9_0 11_1 4_2)(10_0 1_1 0_2)(11_0 4_1 9_2)(12_0 7_1 5_2)\
     (0_a 10_a 1_a)(2_a 3_a 6_a)(4_a 9_a 11_a)(5_a 12_a 7_a)\
     (0_b 10_b 1_b)(2_b 3_b 6_b)(4_b 9_b 11_b)(5_b 12_b 7_b)",
    "(0_0 1_0 2_0 3_0 4_0 5_0 6_0 7_0 8_0 9_0 10_0 11_0 12_0)\
     (0_1 1_1 2_1 3_1 4_1 5_1 6_1 7_1 8_1 9_1 10_1 11_1 12_1)\
     (0_2 1_2 2_2 3_2 4_2 5_2 6_2 7_2 8_2 9_2 10_2 11_2 12_2)\
     (0_a 1_a 2_a 3_a 4_a 5_a 6_a 7_a 8_a 9_a 10_a 11_a 12_a)\
     (0_b 1_b 2_b 3_b 4_b 5_b 6_b 7_b 8_b 9_b 10_b 11_b 12_b)",
];

/// The non-canonical clique `C1` as `(base block, shift)` pairs, base blocks
/// numbered from 0.
pub const MAIN66_C1: [(usize, u8); 13] = [
    (0, 11),
    (1, 1),
    (2, 1),
    (3, 10),
    (4, 10),
    (5, 11),
    (6, 6),
    (8, 12),
    (9, 4),
    (10, 0),
    (10, 2),
    (10, 3),
    (10, 7),
];

/// `C1` written out block by block.
pub const MAIN66_C1_BLOCKS: [&str; 13] = [
    "0_0 3_0 2_1 7_1 11_a 4_a",
    "2_0 3_0 7_0 0_2 6_b 9_b",
    "7_1 3_1 0_2 2_2 1_a 6_a",
    "0_1 3_1 2_1 7_0 12_b 8_b",
    "2_2 3_2 7_0 0_0 10_a 12_a",
    "7_2 3_2 0_2 2_1 4_b 5_b",
    "0_0 2_0 3_1 7_2 9_a 10_b",
    "7_1 0_1 3_2 2_0 8_a 11_b",
    "2_2 7_2 3_0 0_1 5_a 1_b",
    "inf 0_0 0_1 0_2 0_a 0_b",
    "inf 2_0 2_1 2_2 2_a 2_b",
    "inf 3_0 3_1 3_2 3_a 3_b",
    "inf 7_0 7_1 7_2 7_a 7_b",
];

/// Points of `C1` lying in at least two of its blocks.
pub const MAIN66_C1_CORE: &str = "inf 0_0 0_1 0_2 2_0 2_1 2_2 3_0 3_1 3_2 7_0 7_1 7_2";

/// Base block whose 13 translates form the clique `C2`.
pub const MAIN66_C2_BASE: usize = 7;

pub const APPENDIX_A66_TEXT: &str = include_str!("../data/appendix_a.blk");
pub const APPENDIX_B66_TEXT: &str = include_str!("../data/appendix_b.blk");

/// A listed non-canonical clique and its intersecting points.
#[derive(Debug, Clone, Copy)]
pub struct RepresentativeClique {
    pub blocks: [[u32; 6]; 13],
    pub core: [u32; 13],
}

pub const APPENDIX_A66_REPRESENTATIVE: RepresentativeClique = RepresentativeClique {
    blocks: [
        [1, 2, 15, 28, 41, 54],
        [9, 27, 32, 34, 54, 55],
        [1, 3, 16, 29, 42, 55],
        [20, 24, 28, 47, 55, 58],
        [1, 6, 19, 32, 45, 58],
        [12, 14, 28, 29, 34, 45],
        [17, 18, 28, 32, 42, 60],
        [1, 8, 21, 34, 47, 60],
        [11, 26, 29, 32, 41, 47],
        [4, 23, 41, 45, 55, 60],
        [22, 25, 34, 41, 42, 58],
        [7, 13, 42, 45, 47, 54],
        [5, 10, 29, 54, 58, 60],
    ],
    core: [1, 28, 29, 32, 34, 41, 42, 45, 47, 54, 55, 58, 60],
};

pub const APPENDIX_B66_REPRESENTATIVE: RepresentativeClique = RepresentativeClique {
    blocks: [
        [4, 19, 28, 38, 42, 62],
        [8, 26, 36, 41, 42, 64],
        [7, 13, 29, 54, 62, 64],
        [1, 2, 15, 28, 41, 54],
        [20, 21, 41, 51, 55, 62],
        [1, 3, 16, 29, 42, 55],
        [9, 11, 28, 29, 36, 51],
        [17, 27, 29, 38, 41, 49],
        [6, 14, 42, 49, 51, 54],
        [18, 22, 36, 38, 54, 55],
        [1, 10, 23, 36, 49, 62],
        [5, 24, 28, 49, 55, 64],
        [1, 12, 25, 38, 51, 64],
    ],
    core: [1, 28, 29, 36, 38, 41, 42, 49, 51, 54, 55, 62, 64],
};

pub fn representative_clique(name: BuiltinName) -> Option<&'static RepresentativeClique> {
    match name {
        BuiltinName::AppendixA66 => Some(&APPENDIX_A66_REPRESENTATIVE),
        BuiltinName::AppendixB66 => Some(&APPENDIX_B66_REPRESENTATIVE),
        _ => None,
    }
}

pub fn main66_base_blocks() -> Vec<Vec<StructuredPoint>> {
    MAIN66_BASE_BLOCKS
        .iter()
        .map(|b| parse_points(b).expect("embedded base block parses"))
        .collect()
}

/// The developed main design together with its `(base, shift)` bookkeeping.
pub fn main66_development() -> Development {
    Development::new(&main66_base_blocks(), 13).expect("embedded base blocks develop")
}

fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn fano() -> Design {
    let blocks = (0..7).map(|i| vec![i, (i + 1) % 7, (i + 3) % 7]).collect();
    Design::new(numbered(7), blocks).expect("fano plane")
}

/// Point `(x, y)` of AG(2,3) has label `3x + y`.
fn ag23() -> Design {
    let point = |x: usize, y: usize| 3 * (x % 3) + y % 3;
    let mut blocks = Vec::new();
    // y = a x + c
    for a in 0..3 {
        for c in 0..3 {
            blocks.push((0..3).map(|x| point(x, a * x + c)).collect());
        }
    }
    // x = c
    for c in 0..3 {
        blocks.push((0..3).map(|y| point(c, y)).collect());
    }
    Design::new(numbered(9), blocks).expect("affine plane")
}

/// Developed from the perfect difference set {0, 1, 3, 9} mod 13.
fn pg23() -> Design {
    let blocks = (0..13)
        .map(|i| [0, 1, 3, 9].iter().map(|d| (i + d) % 13).collect())
        .collect();
    Design::new(numbered(13), blocks).expect("projective plane")
}

pub fn builtin_design(name: BuiltinName) -> Design {
    match name {
        BuiltinName::Main66 => main66_development().into_design(),
        BuiltinName::AppendixA66 => {
            parse_design(APPENDIX_A66_TEXT, DesignFormat::Blocklist).expect("embedded listing")
        }
        BuiltinName::AppendixB66 => {
            parse_design(APPENDIX_B66_TEXT, DesignFormat::Blocklist).expect("embedded listing")
        }
        BuiltinName::Fano => fano(),
        BuiltinName::Ag23 => ag23(),
        BuiltinName::Pg23 => pg23(),
    }
}

pub fn builtin_design_by_name(name: &str) -> Result<Design, UnknownBuiltin> {
    name.parse().map(builtin_design)
}
