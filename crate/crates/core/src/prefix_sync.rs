//! Prefix-synchronized coding: bijective integer <-> DNA-word encoding
//! whose outputs avoid a designated address set, the exact G-table and
//! avoidance counters behind it, the long-prefix perturbation transform,
//! and the flanked datablock layout.
//!
//! Data words are built from {A,C,T} symbols plus verbatim prefixes of the
//! encoding address; every address is required to end in G, so a full
//! address can never occur inside a data word. For an address a of length
//! n, Abar_i = {A,C,T} \ {a_i} (kept in the order A < C < T) and
//!
//!   G_{n,l} = 3^l                                  for 0 <= l < n,
//!   G_{n,l} = sum_{i=1..n-1} |Abar_i| * G_{n,l-i}  for l >= n.
//!
//! Encode maps x in [0, G_{n,l}) to a word of length l; Decode inverts it.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::correlation::is_self_uncorrelated;
use crate::seq::{Base, DnaSeq};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PrefixSyncError {
    #[error("address must be at least 2 nt, got {0}")]
    AddressTooShort(usize),
    #[error("address must end in G, got {0}")]
    AddressMustEndInG(Base),
    #[error("address {0} is not self-uncorrelated")]
    AddressNotSelfUncorrelated(DnaSeq),
    #[error("word length {needed} exceeds table limit {limit}")]
    TableTooShort { needed: usize, limit: usize },
    #[error("value out of range: must be below G_{{n,{len}}}")]
    ValueOutOfRange { len: usize },
    #[error("ternary value out of range: must be below 3^{len}")]
    TernaryOutOfRange { len: usize },
    #[error("symbol {found} at offset {offset} is not a valid ternary digit")]
    BadTernarySymbol { found: Base, offset: usize },
    #[error("no valid prefix split at offset {offset}")]
    NoSplit { offset: usize },
    #[error("perturbation for this address/threshold is not uniquely decodable")]
    PerturbationNotUnique,
    #[error("input already contains a perturbed-prefix image; transform would not invert")]
    PerturbationNotInvertible,
    #[error("flanking addresses must have equal length: {left} vs {right}")]
    FlankMismatch { left: usize, right: usize },
    #[error("sub-block {index} has length {found}, expected {expected}")]
    SubBlockLength {
        index: usize,
        found: usize,
        expected: usize,
    },
    #[error("block length {found} does not match layout length {expected}")]
    BlockLength { found: usize, expected: usize },
}

// ---------------------------------------------------------------------------
// Ternary representation theta
// ---------------------------------------------------------------------------

fn digit_to_base(d: u8) -> Base {
    match d {
        0 => Base::A,
        1 => Base::T,
        _ => Base::C,
    }
}

fn base_to_digit(b: Base) -> Option<u8> {
    match b {
        Base::A => Some(0),
        Base::T => Some(1),
        Base::C => Some(2),
        Base::G => None,
    }
}

/// Length-`len` ternary representation of y over {A,T,C}, big-endian, with
/// the fixed digit map 0 -> A, 1 -> T, 2 -> C.
pub fn theta(len: usize, y: &BigUint) -> Result<DnaSeq, PrefixSyncError> {
    if *y >= BigUint::from(3u8).pow(len as u32) {
        return Err(PrefixSyncError::TernaryOutOfRange { len });
    }
    let three = BigUint::from(3u8);
    let mut digits = vec![Base::A; len];
    let mut rest = y.clone();
    for slot in digits.iter_mut().rev() {
        let (q, r) = rest.div_rem(&three);
        *slot = digit_to_base(r.to_u8().expect("remainder < 3"));
        rest = q;
    }
    Ok(DnaSeq::from_bases(digits))
}

/// Inverse of [`theta`]; rejects words containing G.
pub fn theta_inv(word: &DnaSeq) -> Result<BigUint, PrefixSyncError> {
    let mut value = BigUint::zero();
    for (offset, b) in word.iter().enumerate() {
        let d = base_to_digit(b).ok_or(PrefixSyncError::BadTernarySymbol { found: b, offset })?;
        value = value * 3u8 + d;
    }
    Ok(value)
}

// ---------------------------------------------------------------------------
// G-table and Encode/Decode
// ---------------------------------------------------------------------------

/// Per-address encoding table: the complements Abar_i and the exact
/// big-integer counts G_{n,0..lmax}. Immutable and shareable once built.
#[derive(Debug, Clone)]
pub struct GTable {
    address: DnaSeq,
    /// abar[i] = sorted {A,C,T} \ {a_{i+1}}; length 2, or 3 when a_{i+1} = G.
    abar: Vec<Vec<Base>>,
    g: Vec<BigUint>,
    /// weight[l][t-1] = |Abar_t| * G_{n,l-t}, defined for l >= n.
    weight: Vec<Vec<BigUint>>,
}

impl GTable {
    /// Build the table for word lengths up to `lmax`. The address must be
    /// self-uncorrelated, end in G and have length >= 2.
    pub fn build(address: DnaSeq, lmax: usize) -> Result<GTable, PrefixSyncError> {
        let n = address.len();
        if n < 2 {
            return Err(PrefixSyncError::AddressTooShort(n));
        }
        let last = address[n - 1];
        if last != Base::G {
            return Err(PrefixSyncError::AddressMustEndInG(last));
        }
        if !is_self_uncorrelated(&address) {
            return Err(PrefixSyncError::AddressNotSelfUncorrelated(address));
        }
        let abar: Vec<Vec<Base>> = address
            .bases()
            .iter()
            .take(n - 1)
            .map(|&a| {
                [Base::A, Base::C, Base::T]
                    .into_iter()
                    .filter(|&b| b != a)
                    .collect()
            })
            .collect();
        let mut g = Vec::with_capacity(lmax + 1);
        for l in 0..=lmax.max(n - 1) {
            if l < n {
                g.push(BigUint::from(3u8).pow(l as u32));
            } else {
                let total: BigUint = (1..n).map(|i| g[l - i].clone() * abar[i - 1].len()).sum();
                g.push(total);
            }
        }
        g.truncate(lmax + 1);
        let weight = (0..g.len())
            .map(|l| {
                if l < n {
                    Vec::new()
                } else {
                    (1..n).map(|t| g[l - t].clone() * abar[t - 1].len()).collect()
                }
            })
            .collect();
        Ok(GTable {
            address,
            abar,
            g,
            weight,
        })
    }

    pub fn address(&self) -> &DnaSeq {
        &self.address
    }

    pub fn address_len(&self) -> usize {
        self.address.len()
    }

    pub fn lmax(&self) -> usize {
        self.g.len() - 1
    }

    /// G_{n,l}: the number of encodable values at word length l.
    pub fn g(&self, l: usize) -> &BigUint {
        &self.g[l]
    }

    /// Largest b such that any b-bit value fits below G_{n,l}.
    pub fn payload_bits(&self, l: usize) -> u64 {
        self.g[l].bits().saturating_sub(1)
    }

    fn check_len(&self, len: usize) -> Result<(), PrefixSyncError> {
        if len > self.lmax() {
            return Err(PrefixSyncError::TableTooShort {
                needed: len,
                limit: self.lmax(),
            });
        }
        Ok(())
    }

    /// Encode x in [0, G_{n,len}) into a word of exactly `len` nt that
    /// avoids the address (and, for a mutually uncorrelated same-final-base
    /// address set, every other address of the set as well).
    pub fn encode(&self, len: usize, x: &BigUint) -> Result<DnaSeq, PrefixSyncError> {
        self.check_len(len)?;
        if x >= &self.g[len] {
            return Err(PrefixSyncError::ValueOutOfRange { len });
        }
        let n = self.address.len();
        let mut out: Vec<Base> = Vec::with_capacity(len);
        let mut l = len;
        let mut y = x.clone();
        while l >= n {
            let weights = &self.weight[l];
            let mut t = 1usize;
            while y >= weights[t - 1] {
                y -= &weights[t - 1];
                t += 1;
                debug_assert!(t < n, "x < G_(n,l) bounds the split position");
            }
            let (alpha, beta) = y.div_rem(&self.g[l - t]);
            let alpha = alpha.to_usize().expect("alpha < |Abar_t| <= 3");
            out.extend_from_slice(&self.address.bases()[..t - 1]);
            out.push(self.abar[t - 1][alpha]);
            y = beta;
            l -= t;
        }
        // Short tail: plain ternary digits over {A,T,C}.
        let tail = theta(l, &y)?;
        out.extend_from_slice(tail.bases());
        Ok(DnaSeq::from_bases(out))
    }

    /// Invert [`GTable::encode`]. Fails with the offending offset when the
    /// word is not in the code's image.
    pub fn decode(&self, word: &DnaSeq) -> Result<BigUint, PrefixSyncError> {
        self.check_len(word.len())?;
        let n = self.address.len();
        let bases = word.bases();
        let mut acc = BigUint::zero();
        let mut pos = 0usize;
        while word.len() - pos >= n {
            let l = word.len() - pos;
            let weights = &self.weight[l];
            let mut t = 1usize;
            loop {
                if t >= n {
                    return Err(PrefixSyncError::NoSplit {
                        offset: pos + n - 1,
                    });
                }
                let c = bases[pos + t - 1];
                if let Some(s) = self.abar[t - 1].iter().position(|&b| b == c) {
                    for i in 1..t {
                        acc += &weights[i - 1];
                    }
                    acc += self.g[l - t].clone() * s;
                    pos += t;
                    break;
                } else if c == self.address[t - 1] {
                    t += 1;
                } else {
                    return Err(PrefixSyncError::NoSplit {
                        offset: pos + t - 1,
                    });
                }
            }
        }
        let mut tail = BigUint::zero();
        for (k, &b) in bases[pos..].iter().enumerate() {
            let d = base_to_digit(b).ok_or(PrefixSyncError::BadTernarySymbol {
                found: b,
                offset: pos + k,
            })?;
            tail = tail * 3u8 + d;
        }
        Ok(acc + tail)
    }
}

// ---------------------------------------------------------------------------
// Avoidance counting
// ---------------------------------------------------------------------------

/// Exact sizes |C_A(l)| of the sets of length-l words avoiding all M
/// addresses of a mutually uncorrelated length-n set, via the linear
/// recurrence c_l = 4 c_{l-1} - M c_{l-n} (c_l = 4^l for l < n) that the
/// generating function 1/(1 - 4z + M z^n) induces.
#[derive(Debug, Clone)]
pub struct AvoidanceTable {
    addresses: u64,
    address_len: usize,
    counts: Vec<BigInt>,
}

impl AvoidanceTable {
    pub fn build(addresses: u64, address_len: usize, lmax: usize) -> AvoidanceTable {
        assert!(addresses >= 1, "need at least one address");
        assert!(address_len >= 2, "address length must be at least 2");
        let mut counts: Vec<BigInt> = Vec::with_capacity(lmax + 1);
        for l in 0..=lmax {
            if l < address_len {
                counts.push(BigInt::from(4u8).pow(l as u32));
            } else {
                let next =
                    4 * &counts[l - 1] - BigInt::from(addresses) * &counts[l - address_len];
                counts.push(next);
            }
        }
        AvoidanceTable {
            addresses,
            address_len,
            counts,
        }
    }

    pub fn addresses(&self) -> u64 {
        self.addresses
    }

    pub fn address_len(&self) -> usize {
        self.address_len
    }

    pub fn count(&self, l: usize) -> &BigInt {
        &self.counts[l]
    }
}

/// |C_A(l)| for M mutually uncorrelated addresses of length n. The value is
/// the formal series coefficient; it is a true count whenever such an
/// address set exists.
pub fn count_avoiding(addresses: u64, address_len: usize, l: usize) -> BigInt {
    AvoidanceTable::build(addresses, address_len, l)
        .count(l)
        .clone()
}

// ---------------------------------------------------------------------------
// Prefix perturbation
// ---------------------------------------------------------------------------

/// The long-prefix image: the first and last quarter (quarter = n/4 of the
/// address length) stay fixed and the middle section is cyclically shifted
/// left by half of its own length.
pub fn perturbed_prefix(address: &DnaSeq, len: usize) -> DnaSeq {
    let q = address.len() / 4;
    if len > address.len() || len <= 2 * q {
        return address.subseq(0, len.min(address.len()));
    }
    let bases = address.bases();
    let mid = &bases[q..len - q];
    let shift = mid.len() / 2;
    let mut out = Vec::with_capacity(len);
    out.extend_from_slice(&bases[..q]);
    out.extend_from_slice(&mid[shift..]);
    out.extend_from_slice(&mid[..shift]);
    out.extend_from_slice(&bases[len - q..len]);
    DnaSeq::from_bases(out)
}

/// Static uniqueness conditions for the perturbation transform: every
/// affected prefix must change under the shift, and no image may contain an
/// affected prefix (otherwise the rewritten text would still expose long
/// address prefixes and re-scanning would misfire).
pub fn verify_unique_perturbation(address: &DnaSeq, threshold: usize) -> bool {
    let n = address.len();
    if threshold < 4 || threshold + 1 > n {
        return false;
    }
    let prefixes: Vec<DnaSeq> = (threshold..n).map(|l| address.subseq(0, l)).collect();
    let images: Vec<DnaSeq> = (threshold..n)
        .map(|l| perturbed_prefix(address, l))
        .collect();
    for (img, pref) in images.iter().zip(&prefixes) {
        if img == pref {
            return false;
        }
    }
    for img in &images {
        for pref in &prefixes {
            if img.contains(pref) {
                return false;
            }
        }
    }
    true
}

/// Rewrites maximal occurrences of long address prefixes by their shifted
/// images (and back). Scans left to right; at each position the longest
/// match wins and matches do not overlap.
#[derive(Debug, Clone)]
pub struct PrefixPerturbation {
    address: DnaSeq,
    threshold: usize,
    images: Vec<DnaSeq>,
}

impl PrefixPerturbation {
    pub fn new(address: DnaSeq, threshold: usize) -> Result<PrefixPerturbation, PrefixSyncError> {
        if !verify_unique_perturbation(&address, threshold) {
            return Err(PrefixSyncError::PerturbationNotUnique);
        }
        let images = (threshold..address.len())
            .map(|l| perturbed_prefix(&address, l))
            .collect();
        Ok(PrefixPerturbation {
            address,
            threshold,
            images,
        })
    }

    fn longest_prefix_match(&self, bases: &[Base], at: usize) -> Option<usize> {
        let n = self.address.len();
        let cap = (bases.len() - at).min(n - 1);
        let mut l = 0;
        while l < cap && bases[at + l] == self.address[l] {
            l += 1;
        }
        (l >= self.threshold).then_some(l)
    }

    fn longest_image_match(&self, bases: &[Base], at: usize) -> Option<usize> {
        let n = self.address.len();
        let cap = (bases.len() - at).min(n - 1);
        for l in (self.threshold..=cap).rev() {
            let img = &self.images[l - self.threshold];
            if bases[at..at + l] == img.bases()[..] {
                return Some(l);
            }
        }
        None
    }

    fn rewrite(&self, x: &DnaSeq, forward: bool) -> DnaSeq {
        let bases = x.bases();
        let mut out = Vec::with_capacity(bases.len());
        let mut i = 0;
        while i < bases.len() {
            let hit = if forward {
                self.longest_prefix_match(bases, i)
            } else {
                self.longest_image_match(bases, i)
            };
            match hit {
                Some(l) => {
                    if forward {
                        out.extend_from_slice(self.images[l - self.threshold].bases());
                    } else {
                        out.extend_from_slice(&self.address.bases()[..l]);
                    }
                    i += l;
                }
                None => {
                    out.push(bases[i]);
                    i += 1;
                }
            }
        }
        DnaSeq::from_bases(out)
    }

    /// Rewrite long prefixes to their shifted images. The result is checked
    /// to un-perturb back to the input exactly; inputs that already contain
    /// an image (so the reverse scan would misfire) are rejected.
    pub fn perturb(&self, x: &DnaSeq) -> Result<DnaSeq, PrefixSyncError> {
        let out = self.rewrite(x, true);
        if self.rewrite(&out, false) != *x {
            return Err(PrefixSyncError::PerturbationNotInvertible);
        }
        Ok(out)
    }

    /// Rewrite shifted images back to the original prefixes.
    pub fn unperturb(&self, x: &DnaSeq) -> DnaSeq {
        self.rewrite(x, false)
    }
}

/// One-shot helpers around [`PrefixPerturbation`].
pub fn perturb_prefixes(
    x: &DnaSeq,
    address: &DnaSeq,
    threshold: usize,
) -> Result<DnaSeq, PrefixSyncError> {
    PrefixPerturbation::new(address.clone(), threshold)?.perturb(x)
}

pub fn unperturb_prefixes(
    x: &DnaSeq,
    address: &DnaSeq,
    threshold: usize,
) -> Result<DnaSeq, PrefixSyncError> {
    Ok(PrefixPerturbation::new(address.clone(), threshold)?.unperturb(x))
}

// ---------------------------------------------------------------------------
// Datablock layout
// ---------------------------------------------------------------------------

/// Geometry of a flanked datablock: address_len + m sub-blocks of
/// subblock_len + address_len, for a total of 2n + m*l nt.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockLayout {
    pub address_len: usize,
    pub subblock_len: usize,
    pub subblock_count: usize,
}

impl BlockLayout {
    pub fn block_len(&self) -> usize {
        2 * self.address_len + self.subblock_len * self.subblock_count
    }
}

/// left_address || sub_1 || ... || sub_m || right_address.
pub fn assemble_block(
    left: &DnaSeq,
    right: &DnaSeq,
    subblocks: &[DnaSeq],
) -> Result<DnaSeq, PrefixSyncError> {
    if left.len() != right.len() {
        return Err(PrefixSyncError::FlankMismatch {
            left: left.len(),
            right: right.len(),
        });
    }
    let expected = subblocks.first().map_or(0, |s| s.len());
    for (index, sub) in subblocks.iter().enumerate() {
        if sub.len() != expected {
            return Err(PrefixSyncError::SubBlockLength {
                index,
                found: sub.len(),
                expected,
            });
        }
    }
    let mut parts: Vec<&DnaSeq> = Vec::with_capacity(subblocks.len() + 2);
    parts.push(left);
    parts.extend(subblocks.iter());
    parts.push(right);
    Ok(DnaSeq::concat(&parts))
}

/// Split a block back into (left address, right address, sub-blocks) by the
/// known geometry.
pub fn disassemble_block(
    block: &DnaSeq,
    layout: &BlockLayout,
) -> Result<(DnaSeq, DnaSeq, Vec<DnaSeq>), PrefixSyncError> {
    if block.len() != layout.block_len() {
        return Err(PrefixSyncError::BlockLength {
            found: block.len(),
            expected: layout.block_len(),
        });
    }
    let n = layout.address_len;
    let l = layout.subblock_len;
    let left = block.subseq(0, n);
    let right = block.subseq(block.len() - n, block.len());
    let subblocks = (0..layout.subblock_count)
        .map(|j| block.subseq(n + j * l, n + (j + 1) * l))
        .collect();
    Ok((left, right, subblocks))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dna(s: &str) -> DnaSeq {
        DnaSeq::parse(s).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn g_table_reference_values() {
        // Worked example: G_{5,1..7} = (3, 9, 27, 81, 267, 849, 2715).
        let table = GTable::build(dna("AGCTG"), 7).unwrap();
        let got: Vec<u64> = (1..=7).map(|l| table.g(l).to_u64().unwrap()).collect();
        assert_eq!(got, [3, 9, 27, 81, 267, 849, 2715]);

        // All-|Abar|=2 address: G_{5,5} = 2*(81+27+9+3) = 240.
        let table = GTable::build(dna("ACCTG"), 5).unwrap();
        let got: Vec<u64> = (1..=5).map(|l| table.g(l).to_u64().unwrap()).collect();
        assert_eq!(got, [3, 9, 27, 81, 240]);

        // Base case: G_{n,l} = 3^l below the address length.
        let table = GTable::build(dna("ACGTG"), 4).unwrap();
        for l in 0..4 {
            assert_eq!(*table.g(l), BigUint::from(3u8).pow(l as u32));
        }
    }

    #[test]
    fn g_table_rejects_bad_addresses() {
        assert!(matches!(
            GTable::build(dna("ACCTA"), 5),
            Err(PrefixSyncError::AddressMustEndInG(Base::A))
        ));
        // GTAG: prefix G equals suffix G.
        assert!(matches!(
            GTable::build(dna("GTAG"), 5),
            Err(PrefixSyncError::AddressNotSelfUncorrelated(_))
        ));
        assert!(matches!(
            GTable::build(dna("G"), 5),
            Err(PrefixSyncError::AddressTooShort(1))
        ));
    }

    #[test]
    fn theta_reference_values() {
        assert_eq!(theta(4, &big(16)).unwrap(), dna("ATCT"));
        assert_eq!(theta(3, &big(0)).unwrap(), dna("AAA"));
        assert_eq!(theta(2, &big(5)).unwrap(), dna("TC"));
        assert_eq!(theta_inv(&dna("ATCT")).unwrap(), big(16));
        assert!(matches!(
            theta(2, &big(9)),
            Err(PrefixSyncError::TernaryOutOfRange { len: 2 })
        ));
        assert!(matches!(
            theta_inv(&dna("ATG")),
            Err(PrefixSyncError::BadTernarySymbol {
                found: Base::G,
                offset: 2
            })
        ));
        for y in 0..27u64 {
            assert_eq!(theta_inv(&theta(3, &big(y)).unwrap()).unwrap(), big(y));
        }
    }

    #[test]
    fn encode_decode_reference_values() {
        let table = GTable::build(dna("AGCTG"), 8).unwrap();
        assert_eq!(table.encode(8, &big(550)).unwrap(), dna("CCAAATCT"));
        assert_eq!(table.encode(4, &big(16)).unwrap(), dna("ATCT"));
        // Below the address length the encoding is plain ternary.
        assert_eq!(table.encode(2, &big(5)).unwrap(), dna("TC"));

        assert_eq!(table.decode(&dna("CCAAATCT")).unwrap(), big(550));
        assert_eq!(table.decode(&dna("ATCT")).unwrap(), big(16));

        assert!(matches!(
            table.encode(8, table.g(8)),
            Err(PrefixSyncError::ValueOutOfRange { len: 8 })
        ));
    }

    #[test]
    fn decode_rejects_words_outside_image() {
        let table = GTable::build(dna("AGCTG"), 8).unwrap();
        // Starts with the full address: no valid split exists.
        let err = table.decode(&dna("AGCTGAAA")).unwrap_err();
        assert!(matches!(err, PrefixSyncError::NoSplit { offset: 4 }));
        // G in the ternary tail.
        let err = table.decode(&dna("AG")).unwrap_err();
        assert!(matches!(
            err,
            PrefixSyncError::BadTernarySymbol {
                found: Base::G,
                offset: 1
            }
        ));
    }

    #[test]
    fn small_exhaustive_bijectivity_and_avoidance() {
        for addr in ["AAG", "ACG", "AACG", "AGCTG"] {
            let address = dna(addr);
            let table = GTable::build(address.clone(), 7).unwrap();
            for l in 0..=7usize {
                let total = table.g(l).to_u64().unwrap();
                let mut seen = std::collections::HashSet::new();
                for x in 0..total {
                    let word = table.encode(l, &big(x)).unwrap();
                    assert_eq!(word.len(), l);
                    assert!(!word.contains(&address), "{addr} in {word}");
                    assert_eq!(table.decode(&word).unwrap(), big(x));
                    assert!(seen.insert(word), "duplicate image");
                }
            }
        }
    }

    #[test]
    fn avoidance_counts_small_cases() {
        assert_eq!(count_avoiding(1, 2, 2), BigInt::from(15));
        assert_eq!(count_avoiding(1, 2, 3), BigInt::from(56));
        assert_eq!(count_avoiding(1, 2, 0), BigInt::from(1));
    }

    /// Brute force: count words of length l over {A,C,G,T} that avoid the
    /// fixed address, by enumerating all 4^l words in 2-bit packing.
    fn brute_force_avoiding(address: &DnaSeq, l: usize) -> u64 {
        let n = address.len();
        let addr_code: u64 = address
            .iter()
            .fold(0, |acc, b| (acc << 2) | b as u64);
        let mask = (1u64 << (2 * n)) - 1;
        let mut count = 0u64;
        for word in 0..(1u64 << (2 * l)) {
            let mut hit = false;
            if l >= n {
                for shift in 0..=(l - n) {
                    if (word >> (2 * shift)) & mask == addr_code {
                        hit = true;
                        break;
                    }
                }
            }
            count += !hit as u64;
        }
        count
    }

    #[test]
    fn avoidance_count_matches_brute_force() {
        for addr in ["AG", "AAG", "AACG", "AGCTG"] {
            let address = dna(addr);
            assert!(is_self_uncorrelated(&address));
            let table = AvoidanceTable::build(1, address.len(), 9);
            for l in 0..=9usize {
                assert_eq!(
                    *table.count(l),
                    BigInt::from(brute_force_avoiding(&address, l)),
                    "address {addr}, l = {l}"
                );
            }
        }
    }

    #[test]
    fn avoidance_count_experiment_scale() {
        // M=32 addresses of length 20 leave about 1.462e48 words of length
        // 80, a 160-bit count.
        let c = count_avoiding(32, 20, 80);
        let digits = c.to_string();
        assert_eq!(digits.len(), 49);
        assert!(digits.starts_with("146"), "got {digits}");
        let bits = c.to_biguint().unwrap().bits();
        assert!((159..=161).contains(&bits), "got {bits} bits");
    }

    #[test]
    fn perturbed_prefix_reference_value() {
        let address = dna("ACTAACTGTGCGACTGATGC");
        let p16 = perturbed_prefix(&address, 16);
        assert_eq!(p16, dna("ACTAATGCCTGGACTG"));
        assert!(verify_unique_perturbation(&address, 16));
        assert!(!verify_unique_perturbation(&dna("AAAAAAAAAAAAAAAAAAAA"), 16));
    }

    #[test]
    fn perturb_round_trip_and_no_op() {
        let address = dna("ACTAACTGTGCGACTGATGC");
        let p = PrefixPerturbation::new(address.clone(), 16).unwrap();

        // No long prefix: unchanged.
        let x = dna("ACGTACGTACGTACGT");
        assert_eq!(p.perturb(&x).unwrap(), x);

        // Embedded long prefix is rewritten and restored.
        let x = DnaSeq::concat(&[&dna("TTT"), &address.subseq(0, 17), &dna("CCC")]);
        let out = p.perturb(&x).unwrap();
        assert_ne!(out, x);
        assert!(!out.contains(&address.subseq(0, 16)));
        assert_eq!(p.unperturb(&out), x);
    }

    #[test]
    fn perturb_rejects_unverifiable_threshold() {
        let address = dna("ACTAACTGTGCGACTGATGC");
        assert!(matches!(
            perturb_prefixes(&dna("ACGT"), &address, 2),
            Err(PrefixSyncError::PerturbationNotUnique)
        ));
    }

    #[test]
    fn block_assembly() {
        let left = dna(&"A".repeat(19).to_string()) ;
        let left = DnaSeq::concat(&[&left, &dna("G")]);
        let right = dna(&"C".repeat(20));
        let subs: Vec<DnaSeq> = (0..12).map(|_| dna(&"ACGT".repeat(20))).collect();
        let block = assemble_block(&left, &right, &subs).unwrap();
        assert_eq!(block.len(), 1000);

        let layout = BlockLayout {
            address_len: 20,
            subblock_len: 80,
            subblock_count: 12,
        };
        let (l2, r2, s2) = disassemble_block(&block, &layout).unwrap();
        assert_eq!(l2, left);
        assert_eq!(r2, right);
        assert_eq!(s2, subs);

        // m = 0 degenerates to the two flanks.
        let block = assemble_block(&left, &right, &[]).unwrap();
        assert_eq!(block.len(), 40);

        assert!(assemble_block(&left, &dna("AC"), &[]).is_err());
        assert!(disassemble_block(&dna("ACGT"), &layout).is_err());
    }
}
