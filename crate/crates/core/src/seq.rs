//! Sequence primitives: the DNA alphabet, trit and bit strings, and the
//! elementary measures (GC prefix balance, homopolymer runs, Hamming
//! distance) that every codec in this crate builds on.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeqError {
    #[error("invalid base {found:?} at position {position}")]
    InvalidBase { found: char, position: usize },
    #[error("invalid trit {found:?} at position {position}")]
    InvalidTrit { found: char, position: usize },
    #[error("invalid bit {found:?} at position {position}")]
    InvalidBit { found: char, position: usize },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
}

/// One of the four DNA bases. Ordered lexicographically A < C < G < T.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Base {
    A = 0,
    C = 1,
    G = 2,
    T = 3,
}

impl Base {
    pub const ALL: [Base; 4] = [Base::A, Base::C, Base::G, Base::T];

    /// Watson-Crick complement (A<->T, C<->G).
    pub fn complement(self) -> Base {
        match self {
            Base::A => Base::T,
            Base::T => Base::A,
            Base::C => Base::G,
            Base::G => Base::C,
        }
    }

    /// True for G and C, the strongly-bonded pair.
    pub fn is_gc(self) -> bool {
        matches!(self, Base::G | Base::C)
    }

    /// Case-insensitive parse. Anything outside {A,C,G,T} (including IUPAC
    /// ambiguity codes such as N) is rejected.
    pub fn from_char(c: char) -> Option<Base> {
        match c.to_ascii_uppercase() {
            'A' => Some(Base::A),
            'C' => Some(Base::C),
            'G' => Some(Base::G),
            'T' => Some(Base::T),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Base::A => 'A',
            Base::C => 'C',
            Base::G => 'G',
            Base::T => 'T',
        }
    }

    pub fn from_index(i: u8) -> Base {
        match i & 3 {
            0 => Base::A,
            1 => Base::C,
            2 => Base::G,
            _ => Base::T,
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// An immutable-by-convention DNA sequence over {A,C,G,T}.
///
/// Parsing is case-insensitive; output is canonical upper case. The empty
/// sequence is legal everywhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct DnaSeq(Vec<Base>);

impl DnaSeq {
    pub fn new() -> DnaSeq {
        DnaSeq(Vec::new())
    }

    pub fn from_bases(bases: Vec<Base>) -> DnaSeq {
        DnaSeq(bases)
    }

    pub fn parse(s: &str) -> Result<DnaSeq, SeqError> {
        let mut bases = Vec::with_capacity(s.len());
        for (position, c) in s.chars().enumerate() {
            match Base::from_char(c) {
                Some(b) => bases.push(b),
                None => return Err(SeqError::InvalidBase { found: c, position }),
            }
        }
        Ok(DnaSeq(bases))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bases(&self) -> &[Base] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Base> + '_ {
        self.0.iter().copied()
    }

    pub fn push(&mut self, b: Base) {
        self.0.push(b);
    }

    pub fn extend_from(&mut self, other: &DnaSeq) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn concat(parts: &[&DnaSeq]) -> DnaSeq {
        let mut out = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
        for p in parts {
            out.extend_from_slice(&p.0);
        }
        DnaSeq(out)
    }

    pub fn subseq(&self, start: usize, end: usize) -> DnaSeq {
        DnaSeq(self.0[start..end].to_vec())
    }

    /// Watson-Crick reverse complement; an involution.
    pub fn reverse_complement(&self) -> DnaSeq {
        DnaSeq(self.0.iter().rev().map(|b| b.complement()).collect())
    }

    /// Max over all prefixes of |#{G,C} - #{A,T}|. Zero only for the empty
    /// sequence. This is the GC-prefix-balance measure: a sequence is
    /// D-GCPB iff this value is <= D.
    pub fn max_gc_prefix_imbalance(&self) -> usize {
        let mut balance: i64 = 0;
        let mut worst: i64 = 0;
        for b in &self.0 {
            balance += if b.is_gc() { 1 } else { -1 };
            worst = worst.max(balance.abs());
        }
        worst as usize
    }

    /// Signed #{G,C} - #{A,T} over the whole sequence.
    pub fn gc_imbalance(&self) -> i64 {
        self.0
            .iter()
            .map(|b| if b.is_gc() { 1i64 } else { -1 })
            .sum()
    }

    /// Length of the longest run of identical consecutive bases; 0 for the
    /// empty sequence.
    pub fn max_homopolymer_run(&self) -> usize {
        let mut best = 0usize;
        let mut run = 0usize;
        let mut prev: Option<Base> = None;
        for &b in &self.0 {
            run = if prev == Some(b) { run + 1 } else { 1 };
            best = best.max(run);
            prev = Some(b);
        }
        best
    }

    /// Number of disagreeing positions; errors on unequal lengths, which
    /// always indicates a caller bug.
    pub fn hamming_distance(&self, other: &DnaSeq) -> Result<usize, SeqError> {
        if self.len() != other.len() {
            return Err(SeqError::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .filter(|(a, b)| a != b)
            .count())
    }

    /// True iff `needle` occurs as a (contiguous) substring.
    pub fn contains(&self, needle: &DnaSeq) -> bool {
        self.find(needle).is_some()
    }

    /// Leftmost occurrence of `needle`, if any. Naive scan; all uses in this
    /// crate involve short needles.
    pub fn find(&self, needle: &DnaSeq) -> Option<usize> {
        if needle.is_empty() {
            return Some(0);
        }
        if needle.len() > self.len() {
            return None;
        }
        (0..=self.len() - needle.len()).find(|&i| self.0[i..i + needle.len()] == needle.0[..])
    }
}

impl fmt::Display for DnaSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{}", b.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for DnaSeq {
    type Err = SeqError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DnaSeq::parse(s)
    }
}

impl std::ops::Index<usize> for DnaSeq {
    type Output = Base;

    fn index(&self, i: usize) -> &Base {
        &self.0[i]
    }
}

impl FromIterator<Base> for DnaSeq {
    fn from_iter<T: IntoIterator<Item = Base>>(iter: T) -> Self {
        DnaSeq(iter.into_iter().collect())
    }
}

/// A symbol from {0,1,2}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Trit {
    Zero = 0,
    One = 1,
    Two = 2,
}

impl Trit {
    pub fn value(self) -> u8 {
        self as u8
    }

    pub fn from_value(v: u8) -> Option<Trit> {
        match v {
            0 => Some(Trit::Zero),
            1 => Some(Trit::One),
            2 => Some(Trit::Two),
            _ => None,
        }
    }
}

/// A string over {0,1,2}, the intermediate representation used by the
/// Goldman codec and by ternary positional encodings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TritString(Vec<Trit>);

impl TritString {
    pub fn new() -> TritString {
        TritString(Vec::new())
    }

    pub fn from_trits(trits: Vec<Trit>) -> TritString {
        TritString(trits)
    }

    /// Parse from a digit string like "20100".
    pub fn parse(s: &str) -> Result<TritString, SeqError> {
        let mut trits = Vec::with_capacity(s.len());
        for (position, c) in s.chars().enumerate() {
            let t = c
                .to_digit(10)
                .and_then(|d| Trit::from_value(d as u8))
                .ok_or(SeqError::InvalidTrit { found: c, position })?;
            trits.push(t);
        }
        Ok(TritString(trits))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn trits(&self) -> &[Trit] {
        &self.0
    }

    pub fn push(&mut self, t: Trit) {
        self.0.push(t);
    }

    pub fn extend_from(&mut self, other: &TritString) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn concat(parts: &[&TritString]) -> TritString {
        let mut out = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
        for p in parts {
            out.extend_from_slice(&p.0);
        }
        TritString(out)
    }
}

impl fmt::Display for TritString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.0 {
            write!(f, "{}", t.value())?;
        }
        Ok(())
    }
}

impl FromStr for TritString {
    type Err = SeqError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TritString::parse(s)
    }
}

impl std::ops::Index<usize> for TritString {
    type Output = Trit;

    fn index(&self, i: usize) -> &Trit {
        &self.0[i]
    }
}

impl FromIterator<Trit> for TritString {
    fn from_iter<T: IntoIterator<Item = Trit>>(iter: T) -> Self {
        TritString(iter.into_iter().collect())
    }
}

/// A string over {0,1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct BitString(Vec<bool>);

impl BitString {
    pub fn new() -> BitString {
        BitString(Vec::new())
    }

    pub fn from_bits(bits: Vec<bool>) -> BitString {
        BitString(bits)
    }

    pub fn parse(s: &str) -> Result<BitString, SeqError> {
        let mut bits = Vec::with_capacity(s.len());
        for (position, c) in s.chars().enumerate() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return Err(SeqError::InvalidBit { found: c, position }),
            }
        }
        Ok(BitString(bits))
    }

    /// Big-endian bit expansion of `value` into exactly `width` bits.
    pub fn from_value(value: u64, width: usize) -> BitString {
        let bits = (0..width).rev().map(|i| (value >> i) & 1 == 1).collect();
        BitString(bits)
    }

    /// Big-endian reassembly; panics if wider than 64 bits.
    pub fn to_value(&self) -> u64 {
        assert!(self.len() <= 64);
        self.0.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64)
    }

    /// MSB-first bit expansion of a byte slice.
    pub fn from_bytes(bytes: &[u8]) -> BitString {
        let bits = bytes
            .iter()
            .flat_map(|&byte| (0..8).rev().map(move |i| (byte >> i) & 1 == 1))
            .collect();
        BitString(bits)
    }

    /// MSB-first packing back into bytes; length must be a multiple of 8.
    pub fn to_bytes(&self) -> Result<Vec<u8>, SeqError> {
        if self.len() % 8 != 0 {
            return Err(SeqError::LengthMismatch {
                left: self.len(),
                right: self.len() / 8 * 8,
            });
        }
        Ok(self
            .0
            .chunks(8)
            .map(|chunk| chunk.iter().fold(0u8, |acc, &b| (acc << 1) | b as u8))
            .collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn push(&mut self, bit: bool) {
        self.0.push(bit);
    }

    pub fn extend_from(&mut self, other: &BitString) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn count_ones(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn hamming_distance(&self, other: &BitString) -> Result<usize, SeqError> {
        if self.len() != other.len() {
            return Err(SeqError::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count())
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl FromStr for BitString {
    type Err = SeqError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BitString::parse(s)
    }
}

impl std::ops::Index<usize> for BitString {
    type Output = bool;

    fn index(&self, i: usize) -> &bool {
        &self.0[i]
    }
}

impl FromIterator<bool> for BitString {
    fn from_iter<T: IntoIterator<Item = bool>>(iter: T) -> Self {
        BitString(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dna(s: &str) -> DnaSeq {
        DnaSeq::parse(s).unwrap()
    }

    #[test]
    fn parse_is_case_insensitive_and_strict() {
        assert_eq!(dna("acgt"), dna("ACGT"));
        assert_eq!(dna("AcGt").to_string(), "ACGT");
        let err = DnaSeq::parse("ACNGT").unwrap_err();
        assert_eq!(
            err,
            SeqError::InvalidBase {
                found: 'N',
                position: 2
            }
        );
    }

    #[test]
    fn reverse_complement_examples() {
        assert_eq!(dna("").reverse_complement(), dna(""));
        // Self-reverse-complementary word.
        assert_eq!(dna("ACGT").reverse_complement(), dna("ACGT"));
        // Goldman worked example: the odd-numbered data block before and
        // after reverse complementation.
        let f1_fwd = dna(
            "CATCTCGCAGCGAGATACGCTGCTACGCAGCATGCTGTGAGTATCGATGACGAGTGACTCT\
             GTACAGTACGTACGTACGTACGTACGTACGTACGACTAT",
        );
        let f1_rc = dna(
            "ATAGTCGTACGTACGTACGTACGTACGTACGTACTGTACAGAGTCACTCGTCATCGATACT\
             CACAGCATGCTGCGTAGCAGCGTATCTCGCTGCGAGATG",
        );
        assert_eq!(f1_fwd.reverse_complement(), f1_rc);
        assert_eq!(f1_rc.reverse_complement(), f1_fwd);
    }

    #[test]
    fn gc_prefix_imbalance_examples() {
        assert_eq!(dna("ACGT").max_gc_prefix_imbalance(), 1);
        assert_eq!(dna("GCGC").max_gc_prefix_imbalance(), 4);
        // Hand walk: prefix sums +1, 0, -1, 0, -1, -2, -1.
        assert_eq!(dna("GTAGTAG").max_gc_prefix_imbalance(), 2);
        assert_eq!(dna("").max_gc_prefix_imbalance(), 0);
    }

    #[test]
    fn homopolymer_run_examples() {
        assert_eq!(dna("").max_homopolymer_run(), 0);
        assert_eq!(dna("AATTT").max_homopolymer_run(), 3);
        assert_eq!(dna("ACGT").max_homopolymer_run(), 1);
    }

    #[test]
    fn hamming_distance_examples() {
        assert_eq!(dna("ACGT").hamming_distance(&dna("ACGT")).unwrap(), 0);
        assert_eq!(dna("AAAA").hamming_distance(&dna("TTTT")).unwrap(), 4);
        // Positions differ only at index 2.
        assert_eq!(dna("ACCTG").hamming_distance(&dna("AGCTG")).unwrap(), 1);
        assert!(dna("AC").hamming_distance(&dna("ACG")).is_err());
    }

    #[test]
    fn substring_search() {
        assert!(dna("ACGTACGT").contains(&dna("GTA")));
        assert!(!dna("ACGTACGT").contains(&dna("GGG")));
        assert_eq!(dna("ACGTACGT").find(&dna("CGT")), Some(1));
        assert!(dna("AC").contains(&dna("")));
    }

    #[test]
    fn trit_and_bit_strings_round_trip() {
        let t = TritString::parse("20100").unwrap();
        assert_eq!(t.to_string(), "20100");
        assert_eq!(t.len(), 5);
        assert!(TritString::parse("203").is_err());

        let b = BitString::parse("1000110111000110100").unwrap();
        assert_eq!(b.len(), 19);
        assert_eq!(b.to_string(), "1000110111000110100");
        assert_eq!(BitString::from_value(5, 4).to_string(), "0101");
        assert_eq!(BitString::parse("0101").unwrap().to_value(), 5);
        let bytes = vec![0xA5, 0x01];
        assert_eq!(BitString::from_bytes(&bytes).to_bytes().unwrap(), bytes);
    }
}
