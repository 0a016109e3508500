//! Cyclic development of base blocks: every base block `B` yields the
//! translates `B^e`, `e in Z_modulus`, obtained by adding `e` to the residue
//! component of each finite point.

use std::collections::HashMap;

use thiserror::Error;

use crate::design::{Design, DesignError};
use crate::point::StructuredPoint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DevelopError {
    #[error("modulus must be between 1 and 13, got {0}")]
    BadModulus(u8),
    #[error("translate {shift} of base block {base} has {found} points, expected {expected}")]
    WrongBlockSize {
        base: usize,
        shift: u8,
        expected: usize,
        found: usize,
    },
    #[error("translate {shift} of base block {base} repeats translate {other_shift} of base block {other_base}")]
    DuplicateBlock {
        base: usize,
        shift: u8,
        other_base: usize,
        other_shift: u8,
    },
    #[error(transparent)]
    Design(#[from] DesignError),
}

/// Translate `block^shift`.
pub fn shift_block(block: &[StructuredPoint], shift: u8, modulus: u8) -> Vec<StructuredPoint> {
    let mut out: Vec<_> = block.iter().map(|p| p.shifted(shift, modulus)).collect();
    out.sort();
    out
}

/// A developed design that remembers which `(base, shift)` produced each block.
#[derive(Debug, Clone)]
pub struct Development {
    design: Design,
    points: Vec<StructuredPoint>,
    origins: Vec<(usize, u8)>,
    modulus: u8,
}

impl Development {
    pub fn new(base_blocks: &[Vec<StructuredPoint>], modulus: u8) -> Result<Self, DevelopError> {
        if modulus == 0 || modulus > crate::point::RESIDUE_MODULUS {
            return Err(DevelopError::BadModulus(modulus));
        }
        let expected = base_blocks.first().map_or(0, Vec::len);
        let mut seen: HashMap<Vec<StructuredPoint>, (usize, u8)> = HashMap::new();
        let mut translates = Vec::with_capacity(base_blocks.len() * modulus as usize);
        for (base, block) in base_blocks.iter().enumerate() {
            for shift in 0..modulus {
                let mut image = shift_block(block, shift, modulus);
                image.dedup();
                if image.len() != expected {
                    return Err(DevelopError::WrongBlockSize {
                        base,
                        shift,
                        expected,
                        found: image.len(),
                    });
                }
                if let Some(&(other_base, other_shift)) = seen.get(&image) {
                    return Err(DevelopError::DuplicateBlock {
                        base,
                        shift,
                        other_base,
                        other_shift,
                    });
                }
                seen.insert(image.clone(), (base, shift));
                translates.push(image);
            }
        }

        let mut points: Vec<StructuredPoint> = translates.iter().flatten().copied().collect();
        points.sort();
        points.dedup();
        let index: HashMap<StructuredPoint, usize> =
            points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let labels = points.iter().map(ToString::to_string).collect();
        let blocks = translates
            .iter()
            .map(|t| t.iter().map(|p| index[p]).collect())
            .collect();
        let design = Design::new(labels, blocks)?;

        let mut origins = vec![(0, 0); design.b()];
        for (image, origin) in seen {
            let idx: Vec<usize> = image.iter().map(|p| index[p]).collect();
            let b = design.find_block(&idx).expect("developed block present");
            origins[b] = origin;
        }
        Ok(Development {
            design,
            points,
            origins,
            modulus,
        })
    }

    pub fn design(&self) -> &Design {
        &self.design
    }

    pub fn into_design(self) -> Design {
        self.design
    }

    pub fn modulus(&self) -> u8 {
        self.modulus
    }

    /// Structured point for each dense point index.
    pub fn points(&self) -> &[StructuredPoint] {
        &self.points
    }

    /// `(base, shift)` that produced block `block`.
    pub fn origin(&self, block: usize) -> (usize, u8) {
        self.origins[block]
    }

    /// Block index of translate `B_base^shift`.
    pub fn block_index(&self, base: usize, shift: u8) -> Option<usize> {
        let shift = shift % self.modulus;
        self.origins.iter().position(|&o| o == (base, shift))
    }
}

pub fn develop_base_blocks(
    base_blocks: &[Vec<StructuredPoint>],
    modulus: u8,
) -> Result<Design, DevelopError> {
    Development::new(base_blocks, modulus).map(Development::into_design)
}
