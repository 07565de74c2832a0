use clap::ValueEnum;
use setdist_core::BinaryString;
use thiserror::Error;

/// How raw file bytes become a bit string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Encoding {
    /// Eight bits per byte, most significant first.
    Bits,
    /// ASCII `0`/`1` characters, whitespace ignored.
    BitstringText,
    /// Low seven bits of each ASCII byte, most significant first.
    Ascii7,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EncodeError {
    #[error("input contains no bits")]
    Empty,

    #[error("byte offset {offset}: expected '0', '1' or whitespace, found 0x{byte:02x}")]
    InvalidBitChar { offset: usize, byte: u8 },

    #[error("byte offset {offset}: 0x{byte:02x} is not 7-bit ASCII")]
    NotAscii { offset: usize, byte: u8 },
}

fn push_bits(out: &mut Vec<bool>, byte: u8, width: u32) {
    out.extend((0..width).rev().map(|i| byte >> i & 1 == 1));
}

pub fn encode(raw: &[u8], mode: Encoding) -> Result<BinaryString, EncodeError> {
    let mut bits = Vec::with_capacity(raw.len() * 8);
    match mode {
        Encoding::Bits => raw.iter().for_each(|&b| push_bits(&mut bits, b, 8)),
        Encoding::BitstringText => {
            for (offset, &byte) in raw.iter().enumerate() {
                match byte {
                    b'0' => bits.push(false),
                    b'1' => bits.push(true),
                    b if b.is_ascii_whitespace() => {}
                    byte => return Err(EncodeError::InvalidBitChar { offset, byte }),
                }
            }
        }
        Encoding::Ascii7 => {
            for (offset, &byte) in raw.iter().enumerate() {
                if !byte.is_ascii() {
                    return Err(EncodeError::NotAscii { offset, byte });
                }
                push_bits(&mut bits, byte, 7);
            }
        }
    }
    BinaryString::new(bits).map_err(|_| EncodeError::Empty)
}
