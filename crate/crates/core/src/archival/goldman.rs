//! The Goldman et al. codec: ternary Huffman compression, a length field,
//! differential (homopolymer-free) base mapping, segmentation into
//! 100-nt blocks shifted by 25 nt for four-fold coverage, alternate-block
//! reverse complementation, and a per-block index with a single ternary
//! parity check.
//!
//! Block layout (117 nt): orientation base || 100-nt payload || 15 nt of
//! differentially encoded index (2 trits file id, 12 trits intra-file
//! location, 1 parity trit) || orientation base. Even blocks are framed
//! A...G, odd (reverse-complemented) blocks T...C.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::seq::{Base, DnaSeq, Trit, TritString};

pub const SEGMENT_LEN: usize = 100;
pub const SEGMENT_STRIDE: usize = 25;
pub const FILE_ID_TRITS: usize = 2;
pub const INTRA_TRITS: usize = 12;
pub const INDEX_TRITS: usize = FILE_ID_TRITS + INTRA_TRITS + 1;
pub const BLOCK_LEN: usize = 1 + SEGMENT_LEN + INDEX_TRITS + 1;
pub const LENGTH_FIELD_TRITS: usize = 20;
/// Differential coding starts from this virtual previous base.
pub const DIFFERENTIAL_START: Base = Base::A;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GoldmanError {
    #[error("codebook is empty")]
    EmptyCodebook,
    #[error("codebook is not prefix-free: code for {first:#04x} prefixes code for {second:#04x}")]
    NotPrefixFree { first: u8, second: u8 },
    #[error("byte {byte:#04x} at offset {offset} has no code")]
    UnknownSymbol { byte: u8, offset: usize },
    #[error("dangling suffix of {0} trits after the last full code")]
    DanglingSuffix(usize),
    #[error("message needs at least {LENGTH_FIELD_TRITS} length trits: {0} trits is too long")]
    MessageTooLong(usize),
    #[error("length field claims {claimed} trits but only {available} are present")]
    BadLengthField { claimed: usize, available: usize },
    #[error("padding between message and length field contains a nonzero trit")]
    BadPadding,
    #[error("adjacent equal bases at offset {0}: not a differential encoding")]
    RepeatedBase(usize),
    #[error("DNA string of {0} nt cannot be segmented (need >= {SEGMENT_LEN}, multiple of {SEGMENT_STRIDE})")]
    BadSegmentLength(usize),
    #[error("file id must be {FILE_ID_TRITS} trits")]
    BadFileId,
    #[error("intra-file index {0} does not fit in {INTRA_TRITS} trits")]
    IntraOutOfRange(usize),
    #[error("block has {0} nt, expected {BLOCK_LEN}")]
    BadBlockLength(usize),
    #[error("block starts with {0}, expected A (even) or T (odd)")]
    BadOrientation(Base),
    #[error("blocks carry mixed file ids")]
    MixedFileIds,
    #[error("no usable block covers position {0}")]
    CoverageGap(usize),
    #[error("irreconcilable overlap disagreement at position {0}")]
    AmbiguousOverlap(usize),
    #[error("no usable blocks")]
    NoUsableBlocks,
}

// ---------------------------------------------------------------------------
// Ternary Huffman
// ---------------------------------------------------------------------------

/// A prefix-free byte -> trit-string codebook.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Huffman3Codebook {
    codes: BTreeMap<u8, TritString>,
}

impl Huffman3Codebook {
    pub fn new(codes: BTreeMap<u8, TritString>) -> Result<Huffman3Codebook, GoldmanError> {
        if codes.is_empty() {
            return Err(GoldmanError::EmptyCodebook);
        }
        let entries: Vec<(&u8, &TritString)> = codes.iter().collect();
        for (i, (&a, ca)) in entries.iter().enumerate() {
            for (&b, cb) in entries.iter().skip(i + 1).map(|(s, c)| (*s, *c)) {
                let (short, long, first, second) = if ca.len() <= cb.len() {
                    (*ca, cb, a, b)
                } else {
                    (cb, *ca, b, a)
                };
                if long.trits()[..short.len()] == short.trits()[..] {
                    return Err(GoldmanError::NotPrefixFree { first, second });
                }
            }
        }
        Ok(Huffman3Codebook { codes })
    }

    /// The 13-symbol codebook of the reference worked example.
    pub fn worked_example() -> Huffman3Codebook {
        let entries: [(u8, &str); 13] = [
            (b'B', "20100"),
            (b'i', "20210"),
            (b'r', "10101"),
            (b'n', "00021"),
            (b'e', "20001"),
            (b'y', "222111"),
            (b' ', "02212"),
            (b'a', "01112"),
            (b'd', "22100"),
            (b'G', "222212"),
            (b'o', "02110"),
            (b'l', "02101"),
            (b'm', "11021"),
        ];
        let codes = entries
            .into_iter()
            .map(|(sym, code)| (sym, TritString::parse(code).expect("fixed codes")))
            .collect();
        Huffman3Codebook::new(codes).expect("fixture codebook is prefix-free")
    }

    /// Build an optimal ternary Huffman code for the byte frequencies of
    /// `data`. Deterministic: ties are broken by node creation order, with
    /// leaves ordered by symbol value.
    pub fn from_bytes(data: &[u8]) -> Result<Huffman3Codebook, GoldmanError> {
        let mut freq = [0u64; 256];
        for &b in data {
            freq[b as usize] += 1;
        }
        Huffman3Codebook::from_frequencies(&freq)
    }

    pub fn from_frequencies(freq: &[u64; 256]) -> Result<Huffman3Codebook, GoldmanError> {
        #[derive(Debug)]
        enum Node {
            Leaf(u8),
            Internal([usize; 3]),
            /// Zero-frequency filler so every merge takes exactly 3 nodes.
            Dummy,
        }
        let mut nodes: Vec<Node> = Vec::new();
        // (frequency, creation order) heap keys; BTreeMap iteration order
        // gives leaves ascending by symbol value.
        let mut heap: std::collections::BinaryHeap<std::cmp::Reverse<(u64, usize)>> =
            std::collections::BinaryHeap::new();
        for (sym, &f) in freq.iter().enumerate() {
            if f > 0 {
                let id = nodes.len();
                nodes.push(Node::Leaf(sym as u8));
                heap.push(std::cmp::Reverse((f, id)));
            }
        }
        if heap.is_empty() {
            return Err(GoldmanError::EmptyCodebook);
        }
        if heap.len() == 1 {
            // Degenerate single-symbol alphabet: one fixed trit.
            let sym = match &nodes[0] {
                Node::Leaf(s) => *s,
                _ => unreachable!(),
            };
            let mut codes = BTreeMap::new();
            codes.insert(sym, TritString::from_trits(vec![Trit::Zero]));
            return Huffman3Codebook::new(codes);
        }
        // A full ternary tree needs an odd leaf count.
        if heap.len() % 2 == 0 {
            let id = nodes.len();
            nodes.push(Node::Dummy);
            heap.push(std::cmp::Reverse((0, id)));
        }
        while heap.len() > 1 {
            let mut children = [0usize; 3];
            let mut total = 0u64;
            for slot in &mut children {
                let std::cmp::Reverse((f, id)) = heap.pop().expect("odd leaf count");
                total += f;
                *slot = id;
            }
            let id = nodes.len();
            nodes.push(Node::Internal(children));
            heap.push(std::cmp::Reverse((total, id)));
        }
        let std::cmp::Reverse((_, root)) = heap.pop().expect("nonempty");

        let mut codes = BTreeMap::new();
        let mut stack = vec![(root, TritString::new())];
        while let Some((id, prefix)) = stack.pop() {
            match &nodes[id] {
                Node::Leaf(sym) => {
                    codes.insert(*sym, prefix);
                }
                Node::Dummy => {}
                Node::Internal(children) => {
                    for (digit, &child) in children.iter().enumerate() {
                        let mut next = prefix.clone();
                        next.push(Trit::from_value(digit as u8).expect("digit < 3"));
                        stack.push((child, next));
                    }
                }
            }
        }
        Huffman3Codebook::new(codes)
    }

    pub fn codes(&self) -> &BTreeMap<u8, TritString> {
        &self.codes
    }

    pub fn encode(&self, data: &[u8]) -> Result<TritString, GoldmanError> {
        let mut out = TritString::new();
        for (offset, &byte) in data.iter().enumerate() {
            let code = self
                .codes
                .get(&byte)
                .ok_or(GoldmanError::UnknownSymbol { byte, offset })?;
            out.extend_from(code);
        }
        Ok(out)
    }

    pub fn decode(&self, trits: &TritString) -> Result<Vec<u8>, GoldmanError> {
        // Invert into a trie-free scan: codes are short (<= a dozen trits).
        let inverse: BTreeMap<&[Trit], u8> = self
            .codes
            .iter()
            .map(|(&sym, code)| (code.trits(), sym))
            .collect();
        let max_len = self.codes.values().map(TritString::len).max().unwrap_or(0);
        let mut out = Vec::new();
        let mut pos = 0;
        let all = trits.trits();
        while pos < all.len() {
            let mut matched = None;
            for len in 1..=max_len.min(all.len() - pos) {
                if let Some(&sym) = inverse.get(&all[pos..pos + len]) {
                    matched = Some((sym, len));
                    break;
                }
            }
            match matched {
                Some((sym, len)) => {
                    out.push(sym);
                    pos += len;
                }
                None => return Err(GoldmanError::DanglingSuffix(all.len() - pos)),
            }
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// Length field and differential coding
// ---------------------------------------------------------------------------

/// S1 || zero padding || 20-trit big-endian length of S1; padded so the
/// total is a multiple of 25.
pub fn append_length(s1: &TritString) -> Result<TritString, GoldmanError> {
    let len = s1.len();
    if len >= 3usize.pow(LENGTH_FIELD_TRITS as u32) {
        return Err(GoldmanError::MessageTooLong(len));
    }
    let pad = (SEGMENT_STRIDE - (len + LENGTH_FIELD_TRITS) % SEGMENT_STRIDE) % SEGMENT_STRIDE;
    let mut out = s1.clone();
    for _ in 0..pad {
        out.push(Trit::Zero);
    }
    out.extend_from(&trits_of_value(len, LENGTH_FIELD_TRITS));
    Ok(out)
}

/// Inverse of [`append_length`]: validates the zero padding and recovers S1.
pub fn strip_length(s4: &TritString) -> Result<TritString, GoldmanError> {
    if s4.len() < LENGTH_FIELD_TRITS {
        return Err(GoldmanError::BadLengthField {
            claimed: 0,
            available: s4.len(),
        });
    }
    let body = s4.len() - LENGTH_FIELD_TRITS;
    let claimed = value_of_trits(&s4.trits()[body..]);
    if claimed > body {
        return Err(GoldmanError::BadLengthField {
            claimed,
            available: body,
        });
    }
    if s4.trits()[claimed..body].iter().any(|t| *t != Trit::Zero) {
        return Err(GoldmanError::BadPadding);
    }
    Ok(TritString::from_trits(s4.trits()[..claimed].to_vec()))
}

fn trits_of_value(mut value: usize, width: usize) -> TritString {
    let mut digits = vec![Trit::Zero; width];
    for slot in digits.iter_mut().rev() {
        *slot = Trit::from_value((value % 3) as u8).expect("mod 3");
        value /= 3;
    }
    TritString::from_trits(digits)
}

fn value_of_trits(trits: &[Trit]) -> usize {
    trits
        .iter()
        .fold(0usize, |acc, t| acc * 3 + t.value() as usize)
}

/// Each trit selects one of the three bases differing from the previous
/// one, rotating forward in the cycle A -> C -> G -> T by (trit + 1).
/// The output therefore never repeats a base.
pub fn differential_encode(trits: &TritString, start: Base) -> DnaSeq {
    let mut prev = start;
    trits
        .trits()
        .iter()
        .map(|t| {
            prev = Base::from_index((prev as u8 + t.value() + 1) & 3);
            prev
        })
        .collect()
}

pub fn differential_decode(dna: &DnaSeq, start: Base) -> Result<TritString, GoldmanError> {
    let mut prev = start;
    let mut out = TritString::new();
    for (offset, b) in dna.iter().enumerate() {
        let step = (b as u8 + 4 - prev as u8) & 3;
        if step == 0 {
            return Err(GoldmanError::RepeatedBase(offset));
        }
        out.push(Trit::from_value(step - 1).expect("step in 1..=3"));
        prev = b;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Segmentation, indexing, blocks
// ---------------------------------------------------------------------------

/// Cut into 100-nt segments shifted by 25 nt (four-fold interior coverage)
/// and reverse-complement the odd-numbered ones.
pub fn segment(dna: &DnaSeq) -> Result<Vec<DnaSeq>, GoldmanError> {
    if dna.len() < SEGMENT_LEN || dna.len() % SEGMENT_STRIDE != 0 {
        return Err(GoldmanError::BadSegmentLength(dna.len()));
    }
    let count = (dna.len() - SEGMENT_LEN) / SEGMENT_STRIDE + 1;
    Ok((0..count)
        .map(|i| {
            let f = dna.subseq(i * SEGMENT_STRIDE, i * SEGMENT_STRIDE + SEGMENT_LEN);
            if i % 2 == 1 {
                f.reverse_complement()
            } else {
                f
            }
        })
        .collect())
}

/// Parity trit: sum of the trits at odd (1-indexed) locations of
/// file_id || intra, mod 3.
pub fn parity_trit(id_intra: &[Trit]) -> Trit {
    let sum: u8 = id_intra
        .iter()
        .step_by(2)
        .map(|t| t.value())
        .fold(0, |acc, v| (acc + v) % 3);
    Trit::from_value(sum).expect("mod 3")
}

/// Append the differentially encoded index section to a stored payload and
/// frame it with the orientation bases (A...G for even intra indices,
/// T...C for odd ones).
pub fn index_block(
    payload: &DnaSeq,
    file_id: &TritString,
    intra: usize,
) -> Result<DnaSeq, GoldmanError> {
    if payload.len() != SEGMENT_LEN {
        return Err(GoldmanError::BadSegmentLength(payload.len()));
    }
    if file_id.len() != FILE_ID_TRITS {
        return Err(GoldmanError::BadFileId);
    }
    if intra >= 3usize.pow(INTRA_TRITS as u32) {
        return Err(GoldmanError::IntraOutOfRange(intra));
    }
    let mut ix = file_id.clone();
    ix.extend_from(&trits_of_value(intra, INTRA_TRITS));
    let parity = parity_trit(ix.trits());
    ix.push(parity);
    let last = payload.bases()[SEGMENT_LEN - 1];
    let tail = differential_encode(&ix, last);
    let (head, foot) = if intra % 2 == 0 {
        (Base::A, Base::G)
    } else {
        (Base::T, Base::C)
    };
    let mut out = DnaSeq::new();
    out.push(head);
    out.extend_from(payload);
    out.extend_from(&tail);
    out.push(foot);
    Ok(out)
}

/// A parsed 117-nt block. `payload_stored` is the payload exactly as it
/// appears in the block (odd blocks therefore hold the reverse complement
/// of the underlying message segment).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldmanBlock {
    pub payload_stored: DnaSeq,
    pub orientation_odd: bool,
    /// Final orientation base agrees with the leading one.
    pub trailer_ok: bool,
    pub index: Option<BlockIndex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockIndex {
    pub file_id: TritString,
    pub intra: usize,
    pub parity: Trit,
    pub parity_ok: bool,
}

impl GoldmanBlock {
    /// Usable for reassembly: index decoded, parity consistent, and the
    /// orientation framing agrees with the intra index parity.
    pub fn is_usable(&self) -> bool {
        match &self.index {
            Some(ix) => ix.parity_ok && (ix.intra % 2 == 1) == self.orientation_odd,
            None => false,
        }
    }
}

pub fn parse_block(block: &DnaSeq) -> Result<GoldmanBlock, GoldmanError> {
    if block.len() != BLOCK_LEN {
        return Err(GoldmanError::BadBlockLength(block.len()));
    }
    let orientation_odd = match block[0] {
        Base::A => false,
        Base::T => true,
        other => return Err(GoldmanError::BadOrientation(other)),
    };
    let trailer_ok = block[BLOCK_LEN - 1] == if orientation_odd { Base::C } else { Base::G };
    let payload_stored = block.subseq(1, 1 + SEGMENT_LEN);
    let tail = block.subseq(1 + SEGMENT_LEN, 1 + SEGMENT_LEN + INDEX_TRITS);
    let last_payload = payload_stored.bases()[SEGMENT_LEN - 1];
    let index = differential_decode(&tail, last_payload).ok().map(|ix| {
        let trits = ix.trits();
        let file_id = TritString::from_trits(trits[..FILE_ID_TRITS].to_vec());
        let intra = value_of_trits(&trits[FILE_ID_TRITS..FILE_ID_TRITS + INTRA_TRITS]);
        let parity = trits[INDEX_TRITS - 1];
        let parity_ok = parity == parity_trit(&trits[..INDEX_TRITS - 1]);
        BlockIndex {
            file_id,
            intra,
            parity,
            parity_ok,
        }
    });
    Ok(GoldmanBlock {
        payload_stored,
        orientation_odd,
        trailer_ok,
        index,
    })
}

// ---------------------------------------------------------------------------
// Full pipeline
// ---------------------------------------------------------------------------

pub fn goldman_encode(
    data: &[u8],
    codebook: &Huffman3Codebook,
    file_id: &TritString,
) -> Result<Vec<DnaSeq>, GoldmanError> {
    if file_id.len() != FILE_ID_TRITS {
        return Err(GoldmanError::BadFileId);
    }
    let s1 = codebook.encode(data)?;
    let s4 = append_length(&s1)?;
    let s5 = differential_encode(&s4, DIFFERENTIAL_START);
    let segments = segment(&s5)?;
    if segments.len() > 3usize.pow(INTRA_TRITS as u32) {
        return Err(GoldmanError::IntraOutOfRange(segments.len() - 1));
    }
    segments
        .iter()
        .enumerate()
        .map(|(i, payload)| index_block(payload, file_id, i))
        .collect()
}

/// Decode a pool of blocks: order by intra index, undo the alternate
/// reverse complementation, merge the 75-nt overlaps by per-position
/// majority vote, then undo the differential, length-field and Huffman
/// stages. Blocks that fail parity or orientation checks are ignored;
/// coverage gaps and voting ties are hard errors.
pub fn goldman_decode(
    blocks: &[DnaSeq],
    codebook: &Huffman3Codebook,
) -> Result<Vec<u8>, GoldmanError> {
    let parsed: Vec<GoldmanBlock> = blocks
        .iter()
        .map(parse_block)
        .collect::<Result<_, _>>()?;
    let usable: Vec<&GoldmanBlock> = parsed.iter().filter(|b| b.is_usable()).collect();
    if usable.is_empty() {
        return Err(GoldmanError::NoUsableBlocks);
    }
    let file_id = &usable[0].index.as_ref().expect("usable").file_id;
    if usable
        .iter()
        .any(|b| &b.index.as_ref().expect("usable").file_id != file_id)
    {
        return Err(GoldmanError::MixedFileIds);
    }
    let max_intra = usable
        .iter()
        .map(|b| b.index.as_ref().expect("usable").intra)
        .max()
        .expect("nonempty");
    let total = SEGMENT_LEN + SEGMENT_STRIDE * max_intra;
    let mut votes = vec![[0u32; 4]; total];
    for block in &usable {
        let intra = block.index.as_ref().expect("usable").intra;
        let seg = if block.orientation_odd {
            block.payload_stored.reverse_complement()
        } else {
            block.payload_stored.clone()
        };
        for (k, b) in seg.iter().enumerate() {
            votes[SEGMENT_STRIDE * intra + k][b as usize] += 1;
        }
    }
    let mut merged = DnaSeq::new();
    for (pos, tally) in votes.iter().enumerate() {
        let best = *tally.iter().max().expect("4 entries");
        if best == 0 {
            return Err(GoldmanError::CoverageGap(pos));
        }
        if tally.iter().filter(|&&v| v == best).count() > 1 {
            return Err(GoldmanError::AmbiguousOverlap(pos));
        }
        let winner = tally.iter().position(|&v| v == best).expect("max exists");
        merged.push(Base::from_index(winner as u8));
    }
    let s4 = differential_decode(&merged, DIFFERENTIAL_START)?;
    let s1 = strip_length(&s4)?;
    codebook.decode(&s1)
}
