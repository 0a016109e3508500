//! Structured point labels `Z13 x {0,1,2,a,b} ∪ {∞}` used by the cyclic
//! 66-point construction.
//!
//! Tokens are written `<value>_<tag>` (for example `2_0`, `11_a`) and `inf`
//! for the point at infinity. `∞` is accepted on input.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Residues live in `0..RESIDUE_MODULUS`.
pub const RESIDUE_MODULUS: u8 = 13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    Zero,
    One,
    Two,
    A,
    B,
}

impl Tag {
    pub const ALL: [Tag; 5] = [Tag::Zero, Tag::One, Tag::Two, Tag::A, Tag::B];

    pub fn symbol(self) -> &'static str {
        match self {
            Tag::Zero => "0",
            Tag::One => "1",
            Tag::Two => "2",
            Tag::A => "a",
            Tag::B => "b",
        }
    }

    fn from_symbol(s: &str) -> Option<Tag> {
        Some(match s {
            "0" => Tag::Zero,
            "1" => Tag::One,
            "2" => Tag::Two,
            "a" => Tag::A,
            "b" => Tag::B,
            _ => return None,
        })
    }
}

/// A point of the structured point set.
///
/// The derived order is the fixed total order used for dense indexing:
/// residues compare by `(tag, value)` and `Infinity` is greatest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StructuredPoint {
    // Field order matters for the derived `Ord`.
    Residue { tag: Tag, value: u8 },
    Infinity,
}

impl StructuredPoint {
    pub fn residue(value: u8, tag: Tag) -> Result<Self, PointParseError> {
        if value >= RESIDUE_MODULUS {
            return Err(PointParseError::ValueOutOfRange(value as u64));
        }
        Ok(StructuredPoint::Residue { tag, value })
    }

    /// Adds `shift` to the residue component modulo `modulus`; infinity is fixed.
    pub fn shifted(self, shift: u8, modulus: u8) -> Self {
        match self {
            StructuredPoint::Residue { tag, value } => StructuredPoint::Residue {
                tag,
                value: ((value as u16 + shift as u16) % modulus as u16) as u8,
            },
            StructuredPoint::Infinity => StructuredPoint::Infinity,
        }
    }

    pub fn tag(self) -> Option<Tag> {
        match self {
            StructuredPoint::Residue { tag, .. } => Some(tag),
            StructuredPoint::Infinity => None,
        }
    }

    pub fn value(self) -> Option<u8> {
        match self {
            StructuredPoint::Residue { value, .. } => Some(value),
            StructuredPoint::Infinity => None,
        }
    }

    /// All 66 structured points in ascending order.
    pub fn universe() -> Vec<StructuredPoint> {
        let mut all: Vec<_> = Tag::ALL
            .iter()
            .flat_map(|&tag| {
                (0..RESIDUE_MODULUS).map(move |value| StructuredPoint::Residue { tag, value })
            })
            .collect();
        all.push(StructuredPoint::Infinity);
        all
    }
}

impl fmt::Display for StructuredPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructuredPoint::Residue { tag, value } => write!(f, "{}_{}", value, tag.symbol()),
            StructuredPoint::Infinity => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PointParseError {
    #[error("malformed structured point token `{0}`")]
    Malformed(String),
    #[error("residue value {0} is not below {RESIDUE_MODULUS}")]
    ValueOutOfRange(u64),
    #[error("unknown tag in token `{0}`")]
    UnknownTag(String),
}

impl FromStr for StructuredPoint {
    type Err = PointParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "inf" || s == "∞" {
            return Ok(StructuredPoint::Infinity);
        }
        let (value, tag) = s
            .split_once('_')
            .ok_or_else(|| PointParseError::Malformed(s.to_string()))?;
        let value: u64 = value
            .parse()
            .map_err(|_| PointParseError::Malformed(s.to_string()))?;
        let tag =
            Tag::from_symbol(tag).ok_or_else(|| PointParseError::UnknownTag(s.to_string()))?;
        if value >= RESIDUE_MODULUS as u64 {
            return Err(PointParseError::ValueOutOfRange(value));
        }
        StructuredPoint::residue(value as u8, tag)
    }
}

/// Parses a whitespace separated list of structured point tokens.
pub fn parse_points(text: &str) -> Result<Vec<StructuredPoint>, PointParseError> {
    text.split_whitespace().map(str::parse).collect()
}
