//! File-level container formats: one FASTA record per DNA block plus a
//! JSON sidecar carrying the codec id and every parameter needed to
//! decode. All sidecar schemas are versioned with a `format` field.

use std::collections::BTreeMap;
use std::io::Write;

use flate2::write::{DeflateDecoder, DeflateEncoder};
use flate2::Compression;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::archival::church::{self, ChurchError, ChurchParams};
use crate::archival::goldman::{self, GoldmanError, Huffman3Codebook};
use crate::archival::grass::{self, Gf47, GrassError, ReedSolomon47};
use crate::correlation::{check_mutually_uncorrelated, CorrelationError};
use crate::fasta::FastaRecord;
use crate::prefix_sync::{assemble_block, disassemble_block, BlockLayout, GTable, PrefixSyncError};
use crate::seq::{Base, BitString, DnaSeq, SeqError, TritString};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum ContainerError {
    #[error("unsupported sidecar format {0}, expected {FORMAT_VERSION}")]
    Format(u32),
    #[error("church codec: {0}")]
    Church(#[from] ChurchError),
    #[error("goldman codec: {0}")]
    Goldman(#[from] GoldmanError),
    #[error("grass codec: {0}")]
    Grass(#[from] GrassError),
    #[error("prefix-sync codec: {0}")]
    PrefixSync(#[from] PrefixSyncError),
    #[error("address pool: {0}")]
    Correlation(#[from] CorrelationError),
    #[error("sequence: {0}")]
    Seq(#[from] SeqError),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("payload of {payload_bits} bits exceeds pool capacity of {capacity_bits} bits")]
    PayloadTooLarge {
        payload_bits: u64,
        capacity_bits: u64,
    },
    #[error("address pool must hold an even number (two per block) of at least 2, got {0}")]
    BadPoolSize(usize),
    #[error("address pool is not mutually uncorrelated (pair {left}, {right})")]
    PoolNotMu { left: usize, right: usize },
    #[error("too many blocks for the barcode space: {0}")]
    TooManyBlocks(usize),
    #[error("record {id}: missing or invalid index attribute")]
    BadIndex { id: String },
    #[error("expected {expected} blocks, found {found}")]
    BlockCount { expected: usize, found: usize },
    #[error("duplicate block index {0}")]
    DuplicateIndex(usize),
    #[error("missing block index {0}")]
    MissingIndex(usize),
    #[error("block {index}: {side} flank does not match the pool address")]
    FlankMismatch { index: usize, side: &'static str },
    #[error("block {index}, sub-block {sub}: value does not fit the payload width")]
    SubBlockOverflow { index: usize, sub: usize },
    #[error("block {index}: {source}")]
    Block {
        index: usize,
        source: PrefixSyncError,
    },
    #[error("block {index}: rs decode failed: {source}")]
    RsBlock { index: usize, source: GrassError },
    #[error("codebook hash mismatch: sidecar {expected}, computed {found}")]
    CodebookHash { expected: String, found: String },
    #[error("decoded length {found} does not match sidecar byte_len {expected}")]
    ByteLen { expected: usize, found: usize },
    #[error("duplicate or out-of-range barcode {0}")]
    BadBarcode(u64),
}

// ---------------------------------------------------------------------------
// Sidecar schema
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Sidecar {
    pub format: u32,
    pub byte_len: usize,
    pub block_count: usize,
    #[serde(flatten)]
    pub params: CodecParams,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "codec", rename_all = "lowercase")]
pub enum CodecParams {
    Church {
        seed: u64,
        max_run: usize,
        forward_primer: String,
        backward_primer: String,
    },
    Goldman {
        file_id: String,
        codebook: BTreeMap<u8, String>,
        codebook_sha256: String,
    },
    Grass {
        rs_n: usize,
        rs_k: usize,
        /// One zero symbol appended per block so words pair up (n odd).
        block_pad_symbol: bool,
    },
    Yazdi {
        address_len: usize,
        subblock_len: usize,
        subblock_count: usize,
        /// Compressed payload length in bits.
        payload_bits: u64,
        compression: String,
        /// Flank addresses, two per block: [left_0, right_0, left_1, ...].
        addresses: Vec<String>,
    },
}

impl Sidecar {
    pub fn codec_name(&self) -> &'static str {
        match self.params {
            CodecParams::Church { .. } => "church",
            CodecParams::Goldman { .. } => "goldman",
            CodecParams::Grass { .. } => "grass",
            CodecParams::Yazdi { .. } => "yazdi",
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("sidecar serializes")
    }

    pub fn from_json(json: &str) -> Result<Sidecar, serde_json::Error> {
        serde_json::from_str(json)
    }
}

#[derive(Debug, Clone)]
pub struct EncodeOutput {
    pub records: Vec<FastaRecord>,
    pub sidecar: Sidecar,
}

#[derive(Debug, Clone)]
pub struct DecodeOutput {
    pub bytes: Vec<u8>,
    pub warnings: Vec<String>,
}

fn block_record(codec: &str, index: usize, orientation: &str, seq: DnaSeq) -> FastaRecord {
    FastaRecord::new(format!("b{index:05}"), seq)
        .with_attr("codec", codec)
        .with_attr("index", index)
        .with_attr("orientation", orientation)
}

fn record_index(record: &FastaRecord) -> Result<usize, ContainerError> {
    record
        .attr("index")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| ContainerError::BadIndex {
            id: record.id.clone(),
        })
}

/// Order records by their index attribute, requiring exactly the indices
/// 0..expected once each.
fn ordered_blocks(
    records: &[FastaRecord],
    expected: usize,
) -> Result<Vec<&FastaRecord>, ContainerError> {
    if records.len() != expected {
        return Err(ContainerError::BlockCount {
            expected,
            found: records.len(),
        });
    }
    let mut slots: Vec<Option<&FastaRecord>> = vec![None; expected];
    for record in records {
        let index = record_index(record)?;
        if index >= expected {
            return Err(ContainerError::MissingIndex(index));
        }
        if slots[index].replace(record).is_some() {
            return Err(ContainerError::DuplicateIndex(index));
        }
    }
    Ok(slots
        .into_iter()
        .enumerate()
        .map(|(i, s)| s.ok_or(ContainerError::MissingIndex(i)))
        .collect::<Result<_, _>>()?)
}

// ---------------------------------------------------------------------------
// Church container
// ---------------------------------------------------------------------------

const CHURCH_BYTES_PER_BLOCK: usize = church::PAYLOAD_BITS / 8;

pub fn church_encode_file(data: &[u8], seed: u64) -> Result<EncodeOutput, ContainerError> {
    let block_count = data.len().div_ceil(CHURCH_BYTES_PER_BLOCK).max(1);
    // Barcodes are consecutive integers starting from 1.
    if block_count >= 1 << church::BARCODE_BITS {
        return Err(ContainerError::TooManyBlocks(block_count));
    }
    let mut records = Vec::with_capacity(block_count);
    for index in 0..block_count {
        let mut chunk = [0u8; CHURCH_BYTES_PER_BLOCK];
        let start = index * CHURCH_BYTES_PER_BLOCK;
        let end = (start + CHURCH_BYTES_PER_BLOCK).min(data.len());
        if start < data.len() {
            chunk[..end - start].copy_from_slice(&data[start..end]);
        }
        let barcode = BitString::from_value(index as u64 + 1, church::BARCODE_BITS);
        let params = ChurchParams::with_reference_primers(barcode, seed.wrapping_add(index as u64));
        let oligo = church::church_encode(&BitString::from_bytes(&chunk), &params);
        records.push(block_record("church", index, "fwd", oligo));
    }
    Ok(EncodeOutput {
        records,
        sidecar: Sidecar {
            format: FORMAT_VERSION,
            byte_len: data.len(),
            block_count,
            params: CodecParams::Church {
                seed,
                max_run: 3,
                forward_primer: church::FORWARD_PRIMER.to_string(),
                backward_primer: church::BACKWARD_PRIMER.to_string(),
            },
        },
    })
}

fn church_decode_file(
    sidecar: &Sidecar,
    records: &[FastaRecord],
    forward: &str,
    backward: &str,
    max_run: usize,
) -> Result<DecodeOutput, ContainerError> {
    let mut warnings = Vec::new();
    if records.len() != sidecar.block_count {
        return Err(ContainerError::BlockCount {
            expected: sidecar.block_count,
            found: records.len(),
        });
    }
    let params = ChurchParams::new(
        BitString::from_bits(vec![false; church::BARCODE_BITS]),
        DnaSeq::parse(forward)?,
        DnaSeq::parse(backward)?,
        max_run,
        0,
    )?;
    let mut payloads: Vec<Option<BitString>> = vec![None; sidecar.block_count];
    for record in records {
        if record.seq.len() != church::OLIGO_LEN {
            warnings.push(format!(
                "record {}: oligo length {} differs from the canonical {}",
                record.id,
                record.seq.len(),
                church::OLIGO_LEN
            ));
        }
        let decoded = church::church_decode(&record.seq, &params)?;
        let barcode = decoded.barcode.to_value();
        // Barcodes count from 1.
        if barcode == 0 || barcode > sidecar.block_count as u64 {
            return Err(ContainerError::BadBarcode(barcode));
        }
        let slot = (barcode - 1) as usize;
        if payloads[slot].replace(decoded.payload).is_some() {
            return Err(ContainerError::BadBarcode(barcode));
        }
    }
    let mut bits = BitString::new();
    for (i, payload) in payloads.into_iter().enumerate() {
        bits.extend_from(&payload.ok_or(ContainerError::MissingIndex(i))?);
    }
    let mut bytes = bits.to_bytes()?;
    bytes.truncate(sidecar.byte_len);
    if bytes.len() != sidecar.byte_len {
        return Err(ContainerError::ByteLen {
            expected: sidecar.byte_len,
            found: bytes.len(),
        });
    }
    Ok(DecodeOutput { bytes, warnings })
}

// ---------------------------------------------------------------------------
// Goldman container
// ---------------------------------------------------------------------------

fn codebook_sha256(codebook: &Huffman3Codebook) -> String {
    let mut hasher = Sha256::new();
    for (sym, code) in codebook.codes() {
        hasher.update([*sym]);
        hasher.update(b":");
        hasher.update(code.to_string().as_bytes());
        hasher.update(b"\n");
    }
    hex_string(&hasher.finalize())
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn goldman_encode_file(
    data: &[u8],
    file_id: &TritString,
) -> Result<EncodeOutput, ContainerError> {
    let codebook = Huffman3Codebook::from_bytes(data)?;
    let blocks = goldman::goldman_encode(data, &codebook, file_id)?;
    let records = blocks
        .into_iter()
        .enumerate()
        .map(|(i, b)| block_record("goldman", i, if i % 2 == 0 { "even" } else { "odd" }, b))
        .collect::<Vec<_>>();
    let codebook_map: BTreeMap<u8, String> = codebook
        .codes()
        .iter()
        .map(|(&sym, code)| (sym, code.to_string()))
        .collect();
    Ok(EncodeOutput {
        sidecar: Sidecar {
            format: FORMAT_VERSION,
            byte_len: data.len(),
            block_count: records.len(),
            params: CodecParams::Goldman {
                file_id: file_id.to_string(),
                codebook_sha256: codebook_sha256(&codebook),
                codebook: codebook_map,
            },
        },
        records,
    })
}

fn goldman_decode_file(
    sidecar: &Sidecar,
    records: &[FastaRecord],
    codebook_map: &BTreeMap<u8, String>,
    expected_hash: &str,
) -> Result<DecodeOutput, ContainerError> {
    let codes = codebook_map
        .iter()
        .map(|(&sym, code)| Ok((sym, TritString::parse(code)?)))
        .collect::<Result<BTreeMap<_, _>, ContainerError>>()?;
    let codebook = Huffman3Codebook::new(codes)?;
    let found = codebook_sha256(&codebook);
    if found != expected_hash {
        return Err(ContainerError::CodebookHash {
            expected: expected_hash.to_string(),
            found,
        });
    }
    let blocks: Vec<DnaSeq> = records.iter().map(|r| r.seq.clone()).collect();
    let mut warnings = Vec::new();
    if blocks.len() != sidecar.block_count {
        warnings.push(format!(
            "expected {} blocks, decoding from {}",
            sidecar.block_count,
            blocks.len()
        ));
    }
    let bytes = goldman::goldman_decode(&blocks, &codebook)?;
    if bytes.len() != sidecar.byte_len {
        return Err(ContainerError::ByteLen {
            expected: sidecar.byte_len,
            found: bytes.len(),
        });
    }
    Ok(DecodeOutput { bytes, warnings })
}

// ---------------------------------------------------------------------------
// Grass container
// ---------------------------------------------------------------------------

pub fn grass_encode_file(
    data: &[u8],
    rs_n: usize,
    rs_k: usize,
) -> Result<EncodeOutput, ContainerError> {
    let rs = ReedSolomon47::new(rs_n, rs_k)?;
    let mut padded = data.to_vec();
    if padded.len() % 2 != 0 {
        padded.push(0);
    }
    let mut symbols = grass::group_bytes(&padded)?;
    while symbols.len() % rs_k != 0 {
        symbols.push(Gf47::ZERO);
    }
    let block_pad_symbol = rs_n % 2 != 0;
    let mut records = Vec::new();
    for (index, message) in symbols.chunks(rs_k).enumerate() {
        let mut codeword = rs.encode(message)?;
        if block_pad_symbol {
            codeword.push(Gf47::ZERO);
        }
        let dna = grass::symbols_to_dna(&codeword)?;
        records.push(block_record("grass", index, "fwd", dna));
    }
    Ok(EncodeOutput {
        sidecar: Sidecar {
            format: FORMAT_VERSION,
            byte_len: data.len(),
            block_count: records.len(),
            params: CodecParams::Grass {
                rs_n,
                rs_k,
                block_pad_symbol,
            },
        },
        records,
    })
}

fn grass_decode_file(
    sidecar: &Sidecar,
    records: &[FastaRecord],
    rs_n: usize,
    rs_k: usize,
    block_pad_symbol: bool,
) -> Result<DecodeOutput, ContainerError> {
    let rs = ReedSolomon47::new(rs_n, rs_k)?;
    let ordered = ordered_blocks(records, sidecar.block_count)?;
    let mut warnings = Vec::new();
    let mut symbols = Vec::new();
    for record in ordered {
        let index = record_index(record)?;
        let (mut word, damaged) = grass::dna_to_symbols_lossy(&record.seq)
            .map_err(|source| ContainerError::RsBlock { index, source })?;
        if !damaged.is_empty() {
            warnings.push(format!(
                "block {index}: damaged words at offsets {damaged:?} treated as symbol errors"
            ));
        }
        if block_pad_symbol {
            word.pop();
        }
        let decoded = rs
            .decode(&word)
            .map_err(|source| ContainerError::RsBlock { index, source })?;
        if !decoded.corrected.is_empty() {
            warnings.push(format!(
                "block {index}: corrected symbol positions {:?}",
                decoded.corrected
            ));
        }
        symbols.extend(decoded.message);
    }
    let padded_len = sidecar.byte_len + sidecar.byte_len % 2;
    symbols.truncate(padded_len / 2 * 3);
    let mut bytes = grass::ungroup_symbols(&symbols)?;
    bytes.truncate(sidecar.byte_len);
    Ok(DecodeOutput { bytes, warnings })
}

// ---------------------------------------------------------------------------
// Yazdi container (prefix-synchronized blocks)
// ---------------------------------------------------------------------------

/// Validate a flank-address pool: even count, equal lengths, all ending in
/// G, mutually uncorrelated.
pub fn validate_address_pool(addresses: &[DnaSeq]) -> Result<(), ContainerError> {
    if addresses.len() < 2 || addresses.len() % 2 != 0 {
        return Err(ContainerError::BadPoolSize(addresses.len()));
    }
    for addr in addresses {
        if addr.bases().last() != Some(&Base::G) {
            return Err(ContainerError::PrefixSync(
                PrefixSyncError::AddressMustEndInG(*addr.bases().last().expect("nonempty")),
            ));
        }
    }
    match check_mutually_uncorrelated(addresses)? {
        c if c.is_uncorrelated() => Ok(()),
        c => {
            let w = c.witness().expect("violation");
            Err(ContainerError::PoolNotMu {
                left: w.left,
                right: w.right,
            })
        }
    }
}

fn deflate(data: &[u8]) -> Vec<u8> {
    let mut encoder = DeflateEncoder::new(Vec::new(), Compression::best());
    encoder.write_all(data).expect("in-memory deflate");
    encoder.finish().expect("in-memory deflate")
}

fn inflate(data: &[u8]) -> Result<Vec<u8>, std::io::Error> {
    let mut decoder = DeflateDecoder::new(Vec::new());
    decoder.write_all(data)?;
    decoder.finish()
}

/// Bits of `value`, big-endian, left-padded to `width`.
fn value_to_bits(value: &BigUint, width: u64) -> Vec<bool> {
    let mut bits = vec![false; width as usize];
    for i in 0..value.bits() {
        if value.bit(i) {
            bits[width as usize - 1 - i as usize] = true;
        }
    }
    bits
}

fn bits_to_value(bits: &[bool]) -> BigUint {
    let mut v = BigUint::default();
    for &b in bits {
        v = (v << 1u8) + u8::from(b);
    }
    v
}

/// Encode a byte stream into flanked datablocks over the whole address
/// pool: the payload is deflate-compressed, split into per-sub-block bit
/// budgets derived from each block's left (encoding) address, and padded
/// with zero bits so every pool address is used exactly once.
pub fn yazdi_encode_file(
    data: &[u8],
    addresses: &[DnaSeq],
    subblock_len: usize,
    subblock_count: usize,
) -> Result<EncodeOutput, ContainerError> {
    validate_address_pool(addresses)?;
    let block_count = addresses.len() / 2;
    let tables: Vec<GTable> = (0..block_count)
        .map(|i| GTable::build(addresses[2 * i].clone(), subblock_len))
        .collect::<Result<_, _>>()?;
    let capacity_bits: u64 = tables
        .iter()
        .map(|t| t.payload_bits(subblock_len) * subblock_count as u64)
        .sum();
    let compressed = deflate(data);
    let bits = BitString::from_bytes(&compressed);
    let payload_bits = bits.len() as u64;
    if payload_bits > capacity_bits {
        return Err(ContainerError::PayloadTooLarge {
            payload_bits,
            capacity_bits,
        });
    }
    let mut records = Vec::with_capacity(block_count);
    let mut cursor = 0usize;
    let all_bits = bits.bits();
    for (index, table) in tables.iter().enumerate() {
        let width = table.payload_bits(subblock_len) as usize;
        let mut subblocks = Vec::with_capacity(subblock_count);
        for _ in 0..subblock_count {
            let mut chunk = vec![false; width];
            let take = width.min(all_bits.len().saturating_sub(cursor));
            chunk[..take].copy_from_slice(&all_bits[cursor..cursor + take]);
            cursor += take;
            let value = bits_to_value(&chunk);
            subblocks.push(table.encode(subblock_len, &value)?);
        }
        let block = assemble_block(&addresses[2 * index], &addresses[2 * index + 1], &subblocks)?;
        records.push(block_record("yazdi", index, "fwd", block));
    }
    Ok(EncodeOutput {
        sidecar: Sidecar {
            format: FORMAT_VERSION,
            byte_len: data.len(),
            block_count,
            params: CodecParams::Yazdi {
                address_len: addresses[0].len(),
                subblock_len,
                subblock_count,
                payload_bits,
                compression: "deflate".to_string(),
                addresses: addresses.iter().map(|a| a.to_string()).collect(),
            },
        },
        records,
    })
}

#[allow(clippy::too_many_arguments)]
fn yazdi_decode_file(
    sidecar: &Sidecar,
    records: &[FastaRecord],
    address_len: usize,
    subblock_len: usize,
    subblock_count: usize,
    payload_bits: u64,
    addresses: &[String],
) -> Result<DecodeOutput, ContainerError> {
    let addresses: Vec<DnaSeq> = addresses
        .iter()
        .map(|a| DnaSeq::parse(a))
        .collect::<Result<_, _>>()?;
    validate_address_pool(&addresses)?;
    let layout = BlockLayout {
        address_len,
        subblock_len,
        subblock_count,
    };
    let ordered = ordered_blocks(records, sidecar.block_count)?;
    let mut bits: Vec<bool> = Vec::with_capacity(payload_bits as usize);
    for record in ordered {
        let index = record_index(record)?;
        let (left, right, subblocks) = disassemble_block(&record.seq, &layout)
            .map_err(|source| ContainerError::Block { index, source })?;
        if left != addresses[2 * index] {
            return Err(ContainerError::FlankMismatch {
                index,
                side: "left",
            });
        }
        if right != addresses[2 * index + 1] {
            return Err(ContainerError::FlankMismatch {
                index,
                side: "right",
            });
        }
        let table = GTable::build(left, subblock_len)
            .map_err(|source| ContainerError::Block { index, source })?;
        let width = table.payload_bits(subblock_len);
        for (sub, word) in subblocks.iter().enumerate() {
            let value = table
                .decode(word)
                .map_err(|source| ContainerError::Block { index, source })?;
            if value.bits() > width {
                return Err(ContainerError::SubBlockOverflow { index, sub });
            }
            bits.extend(value_to_bits(&value, width));
        }
    }
    if (bits.len() as u64) < payload_bits {
        return Err(ContainerError::PayloadTooLarge {
            payload_bits,
            capacity_bits: bits.len() as u64,
        });
    }
    bits.truncate(payload_bits as usize);
    // Compressed payloads are whole bytes.
    let compressed = BitString::from_bits(bits).to_bytes()?;
    let bytes = inflate(&compressed)?;
    if bytes.len() != sidecar.byte_len {
        return Err(ContainerError::ByteLen {
            expected: sidecar.byte_len,
            found: bytes.len(),
        });
    }
    Ok(DecodeOutput {
        bytes,
        warnings: Vec::new(),
    })
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

pub fn decode_file(
    sidecar: &Sidecar,
    records: &[FastaRecord],
) -> Result<DecodeOutput, ContainerError> {
    if sidecar.format != FORMAT_VERSION {
        return Err(ContainerError::Format(sidecar.format));
    }
    match &sidecar.params {
        CodecParams::Church {
            forward_primer,
            backward_primer,
            max_run,
            ..
        } => church_decode_file(sidecar, records, forward_primer, backward_primer, *max_run),
        CodecParams::Goldman {
            codebook,
            codebook_sha256,
            ..
        } => goldman_decode_file(sidecar, records, codebook, codebook_sha256),
        CodecParams::Grass {
            rs_n,
            rs_k,
            block_pad_symbol,
        } => grass_decode_file(sidecar, records, *rs_n, *rs_k, *block_pad_symbol),
        CodecParams::Yazdi {
            address_len,
            subblock_len,
            subblock_count,
            payload_bits,
            compression,
            addresses,
        } => {
            debug_assert_eq!(compression, "deflate");
            yazdi_decode_file(
                sidecar,
                records,
                *address_len,
                *subblock_len,
                *subblock_count,
                *payload_bits,
                addresses,
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::address::{generate_mu_addresses, ExpurgateConfig};

    fn sample_text(len: usize) -> Vec<u8> {
        let phrase = b"the archive keeps every record in quadruplicate coverage. ";
        phrase.iter().copied().cycle().take(len).collect()
    }

    fn pool(count: usize, length: usize) -> Vec<DnaSeq> {
        let mut cfg = ExpurgateConfig::new(length, count, 11);
        cfg.end_base = Some(Base::G);
        generate_mu_addresses(&cfg).unwrap().into_sequences()
    }

    #[test]
    fn church_container_round_trip() {
        let data = sample_text(1000);
        let out = church_encode_file(&data, 42).unwrap();
        assert_eq!(out.sidecar.block_count, 1000usize.div_ceil(12));
        assert!(out.records.iter().all(|r| r.seq.len() == 159));
        let decoded = decode_file(&out.sidecar, &out.records).unwrap();
        assert_eq!(decoded.bytes, data);
        assert!(decoded.warnings.is_empty());

        // Sidecar JSON survives a round trip.
        let json = out.sidecar.to_json();
        let parsed = Sidecar::from_json(&json).unwrap();
        assert_eq!(parsed, out.sidecar);
        assert_eq!(parsed.codec_name(), "church");

        // Shuffled records still decode (barcodes order the blocks).
        let mut shuffled = out.records.clone();
        shuffled.reverse();
        assert_eq!(decode_file(&out.sidecar, &shuffled).unwrap().bytes, data);
    }

    #[test]
    fn goldman_container_round_trip() {
        let data = sample_text(400);
        let out = goldman_encode_file(&data, &TritString::parse("12").unwrap()).unwrap();
        assert!(out.records.iter().all(|r| r.seq.len() == 117));
        let decoded = decode_file(&out.sidecar, &out.records).unwrap();
        assert_eq!(decoded.bytes, data);

        // A corrupted codebook hash is refused.
        let mut sidecar = out.sidecar.clone();
        if let CodecParams::Goldman {
            codebook_sha256, ..
        } = &mut sidecar.params
        {
            codebook_sha256.replace_range(0..4, "0000");
        }
        assert!(matches!(
            decode_file(&sidecar, &out.records),
            Err(ContainerError::CodebookHash { .. })
        ));
    }

    #[test]
    fn grass_container_round_trip_and_correction() {
        let data = sample_text(321); // odd length exercises byte padding
        let out = grass_encode_file(&data, 39, 33).unwrap();
        // 39 symbols + 1 pad symbol = 20 pairs = 120 nt per block.
        assert!(out.records.iter().all(|r| r.seq.len() == 120));
        let decoded = decode_file(&out.sidecar, &out.records).unwrap();
        assert_eq!(decoded.bytes, data);
        assert!(decoded.warnings.is_empty());

        // One corrupted 6-mer costs at most its two symbols, within the
        // correction radius of (39 - 33) / 2 = 3.
        let mut records = out.records.clone();
        let mut bases = records[0].seq.bases().to_vec();
        for pos in [7usize, 9] {
            bases[pos] = Base::ALL
                .into_iter()
                .find(|&b| {
                    b != bases[pos]
                        && (pos == 0 || b != bases[pos - 1])
                        && (pos + 1 >= bases.len() || b != bases[pos + 1])
                })
                .unwrap();
        }
        records[0] = FastaRecord {
            seq: DnaSeq::from_bases(bases),
            ..records[0].clone()
        };
        let decoded = decode_file(&out.sidecar, &records).unwrap();
        assert_eq!(decoded.bytes, data);
        assert!(!decoded.warnings.is_empty());
    }

    #[test]
    fn yazdi_container_round_trip() {
        let data = sample_text(500);
        let addresses = pool(8, 12);
        let out = yazdi_encode_file(&data, &addresses, 40, 6).unwrap();
        assert_eq!(out.sidecar.block_count, 4);
        assert!(out.records.iter().all(|r| r.seq.len() == 2 * 12 + 6 * 40));
        // No address occurs anywhere except as its own block's flanks.
        for record in &out.records {
            let interior = record.seq.subseq(12, record.seq.len() - 12);
            for addr in &addresses {
                assert!(!interior.contains(addr), "{addr} inside a block interior");
            }
        }
        let decoded = decode_file(&out.sidecar, &out.records).unwrap();
        assert_eq!(decoded.bytes, data);
    }

    #[test]
    fn yazdi_rejects_oversized_payload_and_bad_pools() {
        let addresses = pool(4, 10);
        let data = sample_text(100_000);
        assert!(matches!(
            yazdi_encode_file(&data, &addresses, 20, 4),
            Err(ContainerError::PayloadTooLarge { .. })
        ));

        let odd_pool = pool(3, 10);
        assert!(matches!(
            yazdi_encode_file(b"x", &odd_pool, 20, 4),
            Err(ContainerError::BadPoolSize(3))
        ));

        // Pool sequences must end in G.
        let mut bad = pool(4, 10);
        let mut bases = bad[0].bases().to_vec();
        *bases.last_mut().unwrap() = Base::A;
        bad[0] = DnaSeq::from_bases(bases);
        assert!(yazdi_encode_file(b"x", &bad, 20, 4).is_err());
    }

    #[test]
    fn yazdi_decode_detects_flank_damage() {
        let data = sample_text(80);
        let addresses = pool(4, 12);
        let out = yazdi_encode_file(&data, &addresses, 60, 6).unwrap();
        let mut records = out.records.clone();
        let mut bases = records[1].seq.bases().to_vec();
        bases[0] = match bases[0] {
            Base::A => Base::C,
            _ => Base::A,
        };
        records[1] = FastaRecord {
            seq: DnaSeq::from_bases(bases),
            ..records[1].clone()
        };
        assert!(matches!(
            decode_file(&out.sidecar, &records),
            Err(ContainerError::FlankMismatch { index: 1, side: "left" })
        ));
    }

    #[test]
    fn deflate_round_trip() {
        let data = sample_text(4096);
        let compressed = deflate(&data);
        assert!(compressed.len() < data.len() / 4);
        assert_eq!(inflate(&compressed).unwrap(), data);
    }
}
