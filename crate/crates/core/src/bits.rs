use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

fn parse_bits(s: &str) -> Result<Vec<bool>> {
    s.chars()
        .enumerate()
        .map(|(offset, c)| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            found => Err(Error::InvalidBit { offset, found }),
        })
        .collect()
}

fn write_bits(bits: &[bool], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for &b in bits {
        f.write_str(if b { "1" } else { "0" })?;
    }
    Ok(())
}

/// An immutable, non-empty bit sequence: a word or phrase that belongs to a set.
///
/// Equality covers both length and content, so `0001` and `001` are distinct.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(Box<[bool]>);

impl Element {
    pub fn new(bits: impl Into<Box<[bool]>>) -> Result<Self> {
        let bits = bits.into();
        if bits.is_empty() {
            return Err(Error::EmptyBits);
        }
        Ok(Self(bits))
    }

    /// Fixed-width big-endian encoding of `value` in `width` bits.
    pub fn from_uint(value: u64, width: usize) -> Result<Self> {
        let bits: Vec<bool> = (0..width)
            .rev()
            .map(|i| i < 64 && (value >> i) & 1 == 1)
            .collect();
        Self::new(bits)
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl FromStr for Element {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_bits(s)?)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bits(&self.0, f)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

/// A finite, non-empty binary string to be mapped onto a set.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryString {
    bits: Vec<bool>,
    label: Option<String>,
}

impl BinaryString {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::EmptyBits);
        }
        Ok(Self { bits, label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }
}

impl FromStr for BinaryString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_bits(s)?)
    }
}

impl fmt::Display for BinaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bits(&self.bits, f)
    }
}

impl fmt::Debug for BinaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(label) => write!(f, "BinaryString({label}: {self})"),
            None => write!(f, "BinaryString({self})"),
        }
    }
}
