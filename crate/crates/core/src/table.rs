//! Precomputed composite-index bitmaps and their cache-file codec.
//!
//! A [`CompositeIndexTable`] holds one bit per wheel index and candidate
//! class: bit `k` of the A map is set iff `6k - 1` is composite (S1 hits
//! `k`), bit `k` of the B map iff `6k + 1` is composite (S2 or S3 hits
//! `k`). Building the maps walks the rule solutions once; afterwards a
//! candidate's primality is a single bit read.
//!
//! Cache file layout, little-endian throughout:
//!
//! ```text
//! magic  b"P6TBL"          5 bytes
//! version 0x01             1 byte
//! kmax                     u64
//! A bitmap                 ceil(kmax / 8) bytes, bit (k-1) LSB-first
//! B bitmap                 same size and order
//! crc32 (IEEE) of all preceding bytes   u32
//! ```

use thiserror::Error;

use crate::error::{Error as DomainError, Result};
use crate::residue::CandidateClass;
use crate::selectors::{self, SelectorKind};

/// Magic bytes opening every table cache file.
pub const TABLE_MAGIC: [u8; 5] = *b"P6TBL";
/// Current cache file version.
pub const TABLE_VERSION: u8 = 0x01;
/// Ceiling on `kmax`: 12.5 MB per bitmap, desk scale.
pub const MAX_TABLE_KMAX: u64 = 100_000_000;

/// Cache-file decode failures.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodecError {
    #[error("bad magic bytes, not a table cache file")]
    BadMagic,
    #[error("unsupported table file version {0:#04x}")]
    VersionMismatch(u8),
    #[error("stream ends before the declared payload")]
    TruncatedStream,
    #[error("checksum mismatch: stored {stored:#010x}, computed {computed:#010x}")]
    CrcMismatch { stored: u32, computed: u32 },
    #[error("{0} unexpected bytes after the checksum")]
    TrailingBytes(usize),
    #[error("declared kmax {kmax} exceeds the supported ceiling {max}")]
    KmaxTooLarge { kmax: u64, max: u64 },
}

/// Fixed-width bitmap over wheel indices `1..=len`, stored LSB-first in
/// the exact byte layout the cache file uses.
#[derive(Debug, Clone, PartialEq, Eq)]
struct IndexBitmap {
    len: u64,
    bytes: Vec<u8>,
}

impl IndexBitmap {
    fn new(len: u64) -> Self {
        IndexBitmap {
            len,
            bytes: vec![0u8; len.div_ceil(8) as usize],
        }
    }

    /// Wrap raw bytes, clearing any padding bits past `len`.
    fn from_bytes(len: u64, mut bytes: Vec<u8>) -> Self {
        debug_assert_eq!(bytes.len() as u64, len.div_ceil(8));
        let tail = (len % 8) as u32;
        if tail != 0 {
            if let Some(last) = bytes.last_mut() {
                *last &= u8::MAX >> (8 - tail);
            }
        }
        IndexBitmap { len, bytes }
    }

    fn set(&mut self, k: u64) {
        debug_assert!(k >= 1 && k <= self.len);
        self.bytes[((k - 1) / 8) as usize] |= 1u8 << ((k - 1) % 8);
    }

    fn get(&self, k: u64) -> bool {
        debug_assert!(k >= 1 && k <= self.len);
        self.bytes[((k - 1) / 8) as usize] >> ((k - 1) % 8) & 1 == 1
    }

    fn count_ones(&self) -> u64 {
        self.bytes.iter().map(|b| b.count_ones() as u64).sum()
    }
}

/// Per-index compositeness bits for both candidate classes up to `kmax`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositeIndexTable {
    kmax: u64,
    a_bits: IndexBitmap,
    b_bits: IndexBitmap,
}

impl CompositeIndexTable {
    /// Walk all three rules up to `kmax` and record their hits.
    pub fn build(kmax: u64) -> Result<Self> {
        if kmax == 0 {
            return Err(DomainError::TooSmall {
                what: "kmax",
                min: 1,
                got: 0,
            });
        }
        if kmax > MAX_TABLE_KMAX {
            return Err(DomainError::TooLarge {
                what: "kmax",
                got: kmax,
                max: MAX_TABLE_KMAX,
            });
        }
        let mut a_bits = IndexBitmap::new(kmax);
        let mut b_bits = IndexBitmap::new(kmax);
        for k in selectors::enumerate_selector_indices(SelectorKind::S1, kmax) {
            a_bits.set(k);
        }
        for kind in [SelectorKind::S2, SelectorKind::S3] {
            for k in selectors::enumerate_selector_indices(kind, kmax) {
                b_bits.set(k);
            }
        }
        Ok(CompositeIndexTable {
            kmax,
            a_bits,
            b_bits,
        })
    }

    pub fn kmax(&self) -> u64 {
        self.kmax
    }

    /// Is the candidate of `class` at wheel index `k` composite?
    pub fn is_composite(&self, class: CandidateClass, k: u64) -> Result<bool> {
        if k == 0 {
            return Err(DomainError::TooSmall {
                what: "k",
                min: 1,
                got: 0,
            });
        }
        if k > self.kmax {
            return Err(DomainError::OutOfTableRange { k, kmax: self.kmax });
        }
        Ok(match class {
            CandidateClass::A => self.a_bits.get(k),
            CandidateClass::B => self.b_bits.get(k),
        })
    }

    /// Number of composite indices recorded for `class`.
    pub fn composite_count(&self, class: CandidateClass) -> u64 {
        match class {
            CandidateClass::A => self.a_bits.count_ones(),
            CandidateClass::B => self.b_bits.count_ones(),
        }
    }

    /// Encode to the cache-file byte layout.
    pub fn serialize(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(5 + 1 + 8 + 2 * self.a_bits.bytes.len() + 4);
        out.extend_from_slice(&TABLE_MAGIC);
        out.push(TABLE_VERSION);
        out.extend_from_slice(&self.kmax.to_le_bytes());
        out.extend_from_slice(&self.a_bits.bytes);
        out.extend_from_slice(&self.b_bits.bytes);
        let crc = crc32fast::hash(&out);
        out.extend_from_slice(&crc.to_le_bytes());
        out
    }

    /// Decode a cache-file byte stream, verifying magic, version, length
    /// and checksum.
    pub fn deserialize(bytes: &[u8]) -> std::result::Result<Self, CodecError> {
        const HEADER: usize = 5 + 1 + 8;
        if bytes.len() < 5 {
            // Too short to even hold the magic: report what failed first.
            if bytes.starts_with(&TABLE_MAGIC[..bytes.len()]) {
                return Err(CodecError::TruncatedStream);
            }
            return Err(CodecError::BadMagic);
        }
        if bytes[..5] != TABLE_MAGIC {
            return Err(CodecError::BadMagic);
        }
        if bytes.len() < 6 {
            return Err(CodecError::TruncatedStream);
        }
        if bytes[5] != TABLE_VERSION {
            return Err(CodecError::VersionMismatch(bytes[5]));
        }
        if bytes.len() < HEADER {
            return Err(CodecError::TruncatedStream);
        }
        let kmax = u64::from_le_bytes(bytes[6..HEADER].try_into().unwrap());
        if kmax == 0 || kmax > MAX_TABLE_KMAX {
            return Err(CodecError::KmaxTooLarge {
                kmax,
                max: MAX_TABLE_KMAX,
            });
        }
        let map_len = kmax.div_ceil(8) as usize;
        let total = HEADER + 2 * map_len + 4;
        if bytes.len() < total {
            return Err(CodecError::TruncatedStream);
        }
        if bytes.len() > total {
            return Err(CodecError::TrailingBytes(bytes.len() - total));
        }
        let payload_end = total - 4;
        let stored = u32::from_le_bytes(bytes[payload_end..].try_into().unwrap());
        let computed = crc32fast::hash(&bytes[..payload_end]);
        if stored != computed {
            return Err(CodecError::CrcMismatch { stored, computed });
        }
        let a_bytes = bytes[HEADER..HEADER + map_len].to_vec();
        let b_bytes = bytes[HEADER + map_len..payload_end].to_vec();
        Ok(CompositeIndexTable {
            kmax,
            a_bits: IndexBitmap::from_bytes(kmax, a_bytes),
            b_bits: IndexBitmap::from_bytes(kmax, b_bytes),
        })
    }
}
