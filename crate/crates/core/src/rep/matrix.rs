//! Square matrices over a building-block ring.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::classify::{BuildingBlock, MatrixAlgebraShape};
use crate::error::{Error, Result};
use crate::rep::ring::RingElement;
use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockMatrix {
    ring: BuildingBlock,
    size: usize,
    entries: Vec<RingElement>,
}

impl BlockMatrix {
    /// Builds a matrix from row-major entries, all over `ring`.
    pub fn new(ring: BuildingBlock, size: usize, entries: Vec<RingElement>) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::Dim(format!(
                "{size}x{size} matrix needs {} entries, got {}",
                size * size,
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| e.block() != ring) {
            return Err(Error::Ring(format!("entry over {} in a matrix over {ring}", bad.block())));
        }
        Ok(BlockMatrix { ring, size, entries })
    }

    pub fn zero(ring: BuildingBlock, size: usize) -> Self {
        BlockMatrix {
            ring,
            size,
            entries: vec![RingElement::zero(ring); size * size],
        }
    }

    pub fn identity(ring: BuildingBlock, size: usize) -> Self {
        let mut m = Self::zero(ring, size);
        for i in 0..size {
            m.entries[i * size + i] = RingElement::one(ring);
        }
        m
    }

    /// Assembles a `2s x 2s` matrix from a 2x2 array of `s x s` blocks.
    pub fn from_blocks(blocks: [[BlockMatrix; 2]; 2]) -> Result<Self> {
        let s = blocks[0][0].size;
        let ring = blocks[0][0].ring;
        for b in blocks.iter().flatten() {
            if b.size != s || b.ring != ring {
                return Err(Error::Dim("blocks differ in size or ring".into()));
            }
        }
        let n = 2 * s;
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                entries.push(blocks[r / s][c / s].get(r % s, c % s).clone());
            }
        }
        Ok(BlockMatrix { ring, size: n, entries })
    }

    pub fn ring(&self) -> BuildingBlock {
        self.ring
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn shape(&self) -> MatrixAlgebraShape {
        MatrixAlgebraShape {
            block: self.ring,
            size: self.size,
        }
    }

    pub fn entries(&self) -> &[RingElement] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> &RingElement {
        &self.entries[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: RingElement) -> Result<()> {
        if value.block() != self.ring {
            return Err(Error::Ring(format!("{} entry in a matrix over {}", value.block(), self.ring)));
        }
        if row >= self.size || col >= self.size {
            return Err(Error::Index(format!("({row}, {col}) in a {0}x{0} matrix", self.size)));
        }
        self.entries[row * self.size + col] = value;
        Ok(())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::Ring(format!("{} vs {}", self.ring, other.ring)));
        }
        if self.size != other.size {
            return Err(Error::Dim(format!("size {} vs {}", self.size, other.size)));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<_>>()?;
        Ok(BlockMatrix { entries, ..self.clone() })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.size;
        let mut out = Self::zero(self.ring, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let prod = a.try_mul(other.get(k, j))?;
                    let slot = &mut out.entries[i * n + j];
                    *slot = slot.try_add(&prod)?;
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        BlockMatrix {
            entries: self.entries.iter().map(|e| e.scale(r)).collect(),
            ..self.clone()
        }
    }

    pub fn neg(&self) -> Self {
        BlockMatrix {
            entries: self.entries.iter().map(RingElement::neg).collect(),
            ..self.clone()
        }
    }

    /// All real coordinates, row-major, for rank computations.
    pub fn flat_coords(&self) -> Vec<Rational> {
        self.entries.iter().flat_map(|e| e.coords().iter().cloned()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

impl fmt::Display for BlockMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        for row in cells.chunks(self.size) {
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", padded.join("  "))?;
        }
        Ok(())
    }
}

fn coord_text(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    ring: BuildingBlock,
    size: usize,
    entries: Vec<Vec<Vec<String>>>,
}

impl Serialize for BlockMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let entries = self
            .entries
            .chunks(self.size.max(1))
            .map(|row| row.iter().map(|e| e.coords().iter().map(coord_text).collect()).collect())
            .collect();
        Wire {
            ring: self.ring,
            size: self.size,
            entries,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BlockMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = Wire::deserialize(deserializer)?;
        let mut entries = Vec::new();
        for row in wire.entries {
            for cell in row {
                let coords = cell
                    .iter()
                    .map(|t| t.parse::<Rational>().map_err(D::Error::custom))
                    .collect::<Result<Vec<_>, _>>()?;
                entries.push(RingElement::new(wire.ring, coords).map_err(D::Error::custom)?);
            }
        }
        BlockMatrix::new(wire.ring, wire.size, entries).map_err(D::Error::custom)
    }
}
