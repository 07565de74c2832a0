//! Maps from binary strings to sets of substrings.
//!
//! Three mappings are provided:
//!
//! * [`chunk_map`]: non-overlapping `k`-bit words, the last one zero-padded.
//! * [`window_map`]: a window of `n` symbols slid across the string one
//!   stride at a time, collecting every `n`-gram.
//! * [`lz76_map`]: the distinct components of the exhaustive-history parse.
//!
//! Every mapping rejects outputs with fewer than two distinct elements.

use std::str::FromStr;

use crate::bits::{BinaryString, Element};
use crate::error::{Error, Result};
use crate::lz76;
use crate::measure::{dist, Distance};
use crate::set::FiniteSet;

/// Default bits per symbol for the sliding window (7-bit ASCII letters).
pub const DEFAULT_SYMBOL_WIDTH: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapperKind {
    Chunk,
    Window,
    Lz76,
}

impl FromStr for MapperKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chunk" => Ok(Self::Chunk),
            "window" => Ok(Self::Window),
            "lz76" => Ok(Self::Lz76),
            _ => Err(Error::InvalidConfig("mapper must be chunk, window or lz76")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapperConfig {
    Chunk {
        k: usize,
    },
    Window {
        symbol_width: usize,
        window_symbols: usize,
        stride_symbols: usize,
    },
    Lz76,
}

impl MapperConfig {
    pub fn chunk(k: usize) -> Self {
        Self::Chunk { k }
    }

    /// A window of `window_symbols` symbols with the default symbol width and a stride of one symbol.
    pub fn window(window_symbols: usize) -> Self {
        Self::Window {
            symbol_width: DEFAULT_SYMBOL_WIDTH,
            window_symbols,
            stride_symbols: 1,
        }
    }

    pub fn kind(&self) -> MapperKind {
        match self {
            Self::Chunk { .. } => MapperKind::Chunk,
            Self::Window { .. } => MapperKind::Window,
            Self::Lz76 => MapperKind::Lz76,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::Chunk { k: 0 } => Err(Error::InvalidConfig("k must be at least 1")),
            Self::Window {
                symbol_width: 0, ..
            } => Err(Error::InvalidConfig("symbol width must be at least 1")),
            Self::Window {
                window_symbols: 0, ..
            } => Err(Error::InvalidConfig("window must hold at least 1 symbol")),
            Self::Window {
                stride_symbols: 0, ..
            } => Err(Error::InvalidConfig("stride must be at least 1 symbol")),
            _ => Ok(()),
        }
    }
}

fn into_domain(set: FiniteSet) -> Result<FiniteSet> {
    if set.in_domain() {
        Ok(set)
    } else {
        Err(Error::Degenerate {
            cardinality: set.cardinality(),
        })
    }
}

fn element(bits: &[bool]) -> Element {
    Element::new(bits.to_vec()).expect("mapper words are non-empty")
}

/// Consecutive `k`-bit words of `x`, the last one right-padded with zeros.
pub fn chunk_map(x: &BinaryString, k: usize) -> Result<FiniteSet> {
    MapperConfig::chunk(k).validate()?;
    let set = x
        .bits()
        .chunks(k)
        .map(|word| {
            if word.len() == k {
                element(word)
            } else {
                let mut padded = word.to_vec();
                padded.resize(k, false);
                element(&padded)
            }
        })
        .collect();
    into_domain(set)
}

/// Windows of `window_symbols * symbol_width` bits starting at every multiple
/// of `stride_symbols * symbol_width` bits where the window still fits.
pub fn window_map(
    x: &BinaryString,
    symbol_width: usize,
    window_symbols: usize,
    stride_symbols: usize,
) -> Result<FiniteSet> {
    MapperConfig::Window {
        symbol_width,
        window_symbols,
        stride_symbols,
    }
    .validate()?;
    let window = window_symbols * symbol_width;
    let stride = stride_symbols * symbol_width;
    let bits = x.bits();
    if bits.len() < window {
        return Err(Error::ShorterThanWindow {
            len: bits.len(),
            window,
        });
    }
    let set = (0..=bits.len() - window)
        .step_by(stride)
        .map(|offset| element(&bits[offset..offset + window]))
        .collect();
    into_domain(set)
}

/// Distinct components of the exhaustive-history parse of `x`.
pub fn lz76_map(x: &BinaryString) -> Result<FiniteSet> {
    let bits = x.bits();
    let set = lz76::decompose(bits)
        .into_iter()
        .map(|range| element(&bits[range]))
        .collect();
    into_domain(set)
}

pub fn map_string(x: &BinaryString, cfg: &MapperConfig) -> Result<FiniteSet> {
    match *cfg {
        MapperConfig::Chunk { k } => chunk_map(x, k),
        MapperConfig::Window {
            symbol_width,
            window_symbols,
            stride_symbols,
        } => window_map(x, symbol_width, window_symbols, stride_symbols),
        MapperConfig::Lz76 => lz76_map(x),
    }
}

/// Distance between two strings as the distance between their mapped sets.
pub fn dist_strings(x: &BinaryString, y: &BinaryString, cfg: &MapperConfig) -> Result<Distance> {
    let a = map_string(x, cfg)?;
    let b = map_string(y, cfg)?;
    dist(&a, &b)
}
