//! Splitting a long byte string into k field-sized pieces.
//!
//! The input is read as a big-endian bit string of `8 * len` bits and cut
//! into k chunks of `ceil(8 * len / k)` bits; the last chunk is zero-padded
//! on the right. Chunk 0 (the leading bits) becomes secret `s_0`.

use super::SecretSet;
use crate::error::{Error, Result};
use crate::field::PrimeModulus;

fn chunk_width(byte_len: usize, k: usize) -> usize {
    (8 * byte_len).div_ceil(k)
}

fn bit(bytes: &[u8], i: usize) -> u64 {
    bytes
        .get(i / 8)
        .map_or(0, |b| u64::from((b >> (7 - i % 8)) & 1))
}

pub fn chunk_secret(bytes: &[u8], k: usize, p: PrimeModulus) -> Result<SecretSet> {
    if k == 0 {
        return Err(Error::InvalidParams("cannot cut a secret into 0 chunks".into()));
    }
    let width = chunk_width(bytes.len(), k);
    if width > 64 {
        return Err(Error::ChunkExceedsModulus { index: 0, p: p.get() });
    }
    let mut values = Vec::with_capacity(k);
    for index in 0..k {
        let start = index * width;
        let v = (start..start + width).fold(0u64, |acc, i| (acc << 1) | bit(bytes, i));
        if v >= p.get() {
            return Err(Error::ChunkExceedsModulus { index, p: p.get() });
        }
        values.push(v);
    }
    SecretSet::from_values(&values, p)
}

/// Inverse of [`chunk_secret`]; `byte_len` is the original length.
pub fn unchunk_secret(secrets: &SecretSet, byte_len: usize) -> Result<Vec<u8>> {
    let k = secrets.k();
    let width = chunk_width(byte_len, k);
    let mut out = vec![0u8; byte_len];
    for (index, s) in secrets.values().into_iter().enumerate() {
        if width < 64 && s >> width != 0 {
            return Err(Error::InvalidParams(format!(
                "chunk {index} has more than {width} bits"
            )));
        }
        for j in 0..width {
            let bit = (s >> (width - 1 - j)) & 1;
            let pos = index * width + j;
            if pos < 8 * byte_len {
                out[pos / 8] |= (bit as u8) << (7 - pos % 8);
            } else if bit != 0 {
                return Err(Error::InvalidParams(format!(
                    "padding bits of chunk {index} are not zero"
                )));
            }
        }
    }
    Ok(out)
}
