//! Address-set design: Dyck-word and Manchester/BRDS constructions, exact
//! counters, size bounds, validation against the four design constraints
//! (GC prefix balance, pairwise distance, mutual uncorrelatedness, hairpin
//! heuristic), and the greedy expurgation pass.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::correlation::{check_mutually_uncorrelated, is_self_uncorrelated, MuCheck, MuViolation};
use crate::seq::{Base, BitString, DnaSeq};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AddressError {
    #[error("sequences must all have length {expected}, found {found} at index {index}")]
    MixedLengths {
        expected: usize,
        found: usize,
        index: usize,
    },
    #[error("duplicate sequence at index {index}")]
    Duplicate { index: usize },
    #[error("address set must be nonempty")]
    Empty,
    #[error("address length must be at least 2, got {0}")]
    LengthTooShort(usize),
    #[error("found only {found} of {wanted} addresses after {attempts} candidates")]
    Exhausted {
        found: usize,
        wanted: usize,
        attempts: u64,
    },
}

// ---------------------------------------------------------------------------
// Dyck words
// ---------------------------------------------------------------------------

/// A balanced binary word whose prefixes never contain more zeroes than
/// ones. Nonempty Dyck words start with 1 and end with 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyckWord(BitString);

impl DyckWord {
    pub fn from_bits(bits: BitString) -> Option<DyckWord> {
        let mut h: i64 = 0;
        for &b in bits.bits() {
            h += if b { 1 } else { -1 };
            if h < 0 {
                return None;
            }
        }
        (h == 0).then(|| DyckWord(bits))
    }

    pub fn bits(&self) -> &BitString {
        &self.0
    }

    /// Maximum prefix excess of ones over zeroes.
    pub fn height(&self) -> usize {
        let mut h: i64 = 0;
        let mut best: i64 = 0;
        for &b in self.0.bits() {
            h += if b { 1 } else { -1 };
            best = best.max(h);
        }
        best as usize
    }
}

impl std::fmt::Display for DyckWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Exact number of Dyck words of length 2m and height at most `height`
/// (`None` = unbounded). Dynamic program over (position, height).
pub fn count_dyck(m: usize, height: Option<usize>) -> BigUint {
    let d = height.unwrap_or(m).min(m);
    if m == 0 {
        return BigUint::one();
    }
    if d == 0 {
        return BigUint::zero();
    }
    let mut level = vec![BigUint::zero(); d + 1];
    level[0] = BigUint::one();
    for _ in 0..2 * m {
        let mut next = vec![BigUint::zero(); d + 1];
        for (h, ways) in level.iter().enumerate() {
            if ways.is_zero() {
                continue;
            }
            if h + 1 <= d {
                next[h + 1] += ways;
            }
            if h >= 1 {
                next[h - 1] += ways;
            }
        }
        level = next;
    }
    level[0].clone()
}

/// Lexicographically ordered stream (0 < 1) of Dyck words of length 2m and
/// height at most `height`.
pub fn enumerate_dyck(m: usize, height: Option<usize>) -> DyckIter {
    DyckIter {
        m,
        d: height.unwrap_or(m).min(m),
        word: Vec::new(),
        started: false,
        done: false,
    }
}

pub struct DyckIter {
    m: usize,
    d: usize,
    word: Vec<bool>,
    started: bool,
    done: bool,
}

impl DyckIter {
    /// A one at `pos` is feasible iff the height stays within [0, d] and a
    /// completion to a balanced word exists.
    fn feasible(&self, pos: usize, h_before: i64, one: bool) -> bool {
        let h = h_before + if one { 1 } else { -1 };
        let remaining = (2 * self.m - pos - 1) as i64;
        h >= 0 && h <= self.d as i64 && h <= remaining
    }

    /// Fill positions `from..2m` with the smallest feasible symbols.
    fn fill_smallest(&mut self, from: usize, mut h: i64) {
        for pos in from..2 * self.m {
            let one = !self.feasible(pos, h, false);
            debug_assert!(self.feasible(pos, h, one));
            if pos < self.word.len() {
                self.word[pos] = one;
            } else {
                self.word.push(one);
            }
            h += if one { 1 } else { -1 };
        }
    }
}

impl Iterator for DyckIter {
    type Item = DyckWord;

    fn next(&mut self) -> Option<DyckWord> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.m > 0 && self.d == 0 {
                self.done = true;
                return None;
            }
            self.fill_smallest(0, 0);
            return Some(DyckWord(BitString::from_bits(self.word.clone())));
        }
        // Successor: rightmost 0 that can flip to 1, then smallest suffix.
        let mut h: i64 = self.word.iter().map(|&b| if b { 1i64 } else { -1 }).sum();
        debug_assert_eq!(h, 0);
        for pos in (0..2 * self.m).rev() {
            h -= if self.word[pos] { 1 } else { -1 };
            if !self.word[pos] && self.feasible(pos, h, true) {
                self.word[pos] = true;
                self.fill_smallest(pos + 1, h + 1);
                return Some(DyckWord(BitString::from_bits(self.word.clone())));
            }
        }
        self.done = true;
        None
    }
}

// ---------------------------------------------------------------------------
// Address sets
// ---------------------------------------------------------------------------

/// Parameters of the naive hairpin heuristic: a sequence is flagged iff
/// some window of length `window` reappears in reverse-complement form at a
/// start-to-start distance of at least `min_loop`, i.e. the sequence could
/// fold back on itself and pair the two windows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HairpinParams {
    pub window: usize,
    pub min_loop: usize,
}

impl Default for HairpinParams {
    fn default() -> Self {
        HairpinParams {
            window: 6,
            min_loop: 3,
        }
    }
}

pub fn has_hairpin(s: &DnaSeq, params: HairpinParams) -> bool {
    let w = params.window;
    if w == 0 || s.len() < w {
        return false;
    }
    let windows: Vec<DnaSeq> = (0..=s.len() - w).map(|i| s.subseq(i, i + w)).collect();
    for i in 0..windows.len() {
        let stem = windows[i].reverse_complement();
        for (j, other) in windows.iter().enumerate().skip(i + params.min_loop) {
            debug_assert!(j - i >= params.min_loop);
            if *other == stem {
                return true;
            }
        }
    }
    false
}

/// A validated set of equal-length candidate addresses together with the
/// constraint measurements recomputed from the sequences themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AddressSet {
    sequences: Vec<DnaSeq>,
    d_min: Option<usize>,
    max_gc_prefix_imbalance: usize,
    mutually_uncorrelated: bool,
    mu_witness: Option<MuViolation>,
    hairpin_indices: Vec<usize>,
}

impl AddressSet {
    pub fn from_sequences(sequences: Vec<DnaSeq>) -> Result<AddressSet, AddressError> {
        AddressSet::with_hairpin_params(sequences, HairpinParams::default())
    }

    pub fn with_hairpin_params(
        sequences: Vec<DnaSeq>,
        params: HairpinParams,
    ) -> Result<AddressSet, AddressError> {
        if let Some(first) = sequences.first() {
            let n = first.len();
            for (index, s) in sequences.iter().enumerate() {
                if s.len() != n {
                    return Err(AddressError::MixedLengths {
                        expected: n,
                        found: s.len(),
                        index,
                    });
                }
                if sequences[..index].contains(s) {
                    return Err(AddressError::Duplicate { index });
                }
            }
        }
        let mut d_min = None;
        for i in 0..sequences.len() {
            for j in i + 1..sequences.len() {
                let d = sequences[i]
                    .hamming_distance(&sequences[j])
                    .expect("equal lengths checked above");
                d_min = Some(d_min.map_or(d, |m: usize| m.min(d)));
            }
        }
        let max_gc_prefix_imbalance = sequences
            .iter()
            .map(|s| s.max_gc_prefix_imbalance())
            .max()
            .unwrap_or(0);
        let (mutually_uncorrelated, mu_witness) = if sequences.is_empty() {
            (true, None)
        } else {
            match check_mutually_uncorrelated(&sequences).expect("validated nonempty, equal") {
                MuCheck::Uncorrelated => (true, None),
                MuCheck::Violation(w) => (false, Some(w)),
            }
        };
        let hairpin_indices = sequences
            .iter()
            .enumerate()
            .filter_map(|(i, s)| has_hairpin(s, params).then_some(i))
            .collect();
        Ok(AddressSet {
            sequences,
            d_min,
            max_gc_prefix_imbalance,
            mutually_uncorrelated,
            mu_witness,
            hairpin_indices,
        })
    }

    pub fn sequences(&self) -> &[DnaSeq] {
        &self.sequences
    }

    pub fn len(&self) -> usize {
        self.sequences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequences.is_empty()
    }

    /// Minimum pairwise Hamming distance; `None` when fewer than two
    /// sequences are present.
    pub fn d_min(&self) -> Option<usize> {
        self.d_min
    }

    pub fn max_gc_prefix_imbalance(&self) -> usize {
        self.max_gc_prefix_imbalance
    }

    pub fn is_mutually_uncorrelated(&self) -> bool {
        self.mutually_uncorrelated
    }

    pub fn mu_witness(&self) -> Option<&MuViolation> {
        self.mu_witness.as_ref()
    }

    pub fn hairpin_indices(&self) -> &[usize] {
        &self.hairpin_indices
    }

    pub fn has_hairpins(&self) -> bool {
        !self.hairpin_indices.is_empty()
    }

    pub fn into_sequences(self) -> Vec<DnaSeq> {
        self.sequences
    }
}

/// Outcome of checking an address set against explicit constraint bounds.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub set: AddressSet,
    pub gc_bound: usize,
    pub distance_bound: usize,
    pub passes_gc: bool,
    pub passes_distance: bool,
    pub passes_mu: bool,
    pub passes_hairpin: bool,
}

impl ValidationReport {
    pub fn passes(&self) -> bool {
        self.passes_gc && self.passes_distance && self.passes_mu && self.passes_hairpin
    }
}

/// Evaluate the four address constraints: prefix GC imbalance <= `gc_bound`,
/// pairwise distance >= `distance_bound`, mutual uncorrelatedness, and the
/// hairpin heuristic.
pub fn validate_address_set(
    sequences: Vec<DnaSeq>,
    gc_bound: usize,
    distance_bound: usize,
    params: HairpinParams,
) -> Result<ValidationReport, AddressError> {
    if sequences.is_empty() {
        return Err(AddressError::Empty);
    }
    let set = AddressSet::with_hairpin_params(sequences, params)?;
    Ok(ValidationReport {
        passes_gc: set.max_gc_prefix_imbalance() <= gc_bound,
        passes_distance: set.d_min().map_or(true, |d| d >= distance_bound),
        passes_mu: set.is_mutually_uncorrelated(),
        passes_hairpin: !set.has_hairpins(),
        gc_bound,
        distance_bound,
        set,
    })
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// Map a binary word to DNA with the fixed choice 0 -> A, 1 -> C. A word
/// with D-bounded running digital sum maps to a D-GC-prefix-balanced
/// sequence, and pairwise distances are preserved.
pub fn bits_to_dna(word: &BitString) -> DnaSeq {
    word.bits()
        .iter()
        .map(|&b| if b { Base::C } else { Base::A })
        .collect()
}

/// Prepend 1 to every Dyck word of length 2m and height at most `height`
/// and map to DNA. The result is a mutually uncorrelated set whose prefix
/// GC imbalance is at most `height` + 1.
pub fn dyck_to_mu_gcpb(m: usize, height: usize) -> AddressSet {
    let sequences: Vec<DnaSeq> = enumerate_dyck(m, Some(height))
        .map(|d| {
            let mut bits = BitString::new();
            bits.push(true);
            bits.extend_from(d.bits());
            bits_to_dna(&bits)
        })
        .collect();
    AddressSet::from_sequences(sequences).expect("construction yields distinct equal-length words")
}

/// Manchester expansion: each bit b becomes the pair (b, complement of b),
/// so 0 -> 01 and 1 -> 10. Doubles length and pairwise distance and bounds
/// the running digital sum of every output prefix by 1.
pub fn manchester_brds(code: &[BitString]) -> Vec<BitString> {
    code.iter()
        .map(|w| {
            w.bits()
                .iter()
                .flat_map(|&b| [b, !b])
                .collect::<BitString>()
        })
        .collect()
}

/// Map binary (BRDS) words to DNA addresses via the fixed 0 -> A, 1 -> C
/// choice, reporting the resulting constraint measurements.
pub fn brds_to_gcpb(words: &[BitString]) -> Result<AddressSet, AddressError> {
    AddressSet::from_sequences(words.iter().map(bits_to_dna).collect())
}

/// Greedy expurgation in input order: keep a candidate iff it is
/// self-uncorrelated and mutually uncorrelated with everything kept so far.
pub fn select_mu_subset(candidates: &[DnaSeq]) -> Result<AddressSet, AddressError> {
    if let Some(first) = candidates.first() {
        let n = first.len();
        for (index, c) in candidates.iter().enumerate() {
            if c.len() != n {
                return Err(AddressError::MixedLengths {
                    expected: n,
                    found: c.len(),
                    index,
                });
            }
        }
    }
    let mut kept: Vec<DnaSeq> = Vec::new();
    for cand in candidates {
        if !is_self_uncorrelated(cand) {
            continue;
        }
        let mut trial = kept.clone();
        trial.push(cand.clone());
        if check_mutually_uncorrelated(&trial)
            .expect("nonempty, equal lengths")
            .is_uncorrelated()
        {
            kept = trial;
        }
    }
    AddressSet::from_sequences(kept)
}

// ---------------------------------------------------------------------------
// Seeded semi-constructive generation
// ---------------------------------------------------------------------------

/// Knobs for the seeded random-candidate + greedy-expurgation generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpurgateConfig {
    pub length: usize,
    pub count: usize,
    pub seed: u64,
    /// Force the final base (prefix-synchronized pools need G).
    pub end_base: Option<Base>,
    /// Reject candidates whose prefix GC imbalance exceeds this.
    pub max_gc_imbalance: Option<usize>,
    /// Reject candidates with longer homopolymer runs.
    pub max_run: Option<usize>,
    /// Keep a candidate only at Hamming distance >= this from every kept one.
    pub min_distance: usize,
    /// Candidate budget before giving up.
    pub max_attempts: u64,
}

impl ExpurgateConfig {
    pub fn new(length: usize, count: usize, seed: u64) -> ExpurgateConfig {
        ExpurgateConfig {
            length,
            count,
            seed,
            end_base: None,
            max_gc_imbalance: Some(3),
            max_run: Some(3),
            min_distance: 1,
            max_attempts: 2_000_000,
        }
    }
}

/// Draw random candidates and keep the ones that are self-uncorrelated and
/// mutually uncorrelated (and distance-separated) with everything kept so
/// far, until `count` addresses are found.
pub fn generate_mu_addresses(cfg: &ExpurgateConfig) -> Result<AddressSet, AddressError> {
    use rand::Rng;
    use rand::SeedableRng;

    if cfg.length < 2 {
        return Err(AddressError::LengthTooShort(cfg.length));
    }
    let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(cfg.seed);
    let mut kept: Vec<DnaSeq> = Vec::with_capacity(cfg.count);
    let mut attempts = 0u64;
    while kept.len() < cfg.count {
        attempts += 1;
        if attempts > cfg.max_attempts {
            return Err(AddressError::Exhausted {
                found: kept.len(),
                wanted: cfg.count,
                attempts: cfg.max_attempts,
            });
        }
        let mut bases: Vec<Base> = (0..cfg.length)
            .map(|_| Base::from_index(rng.gen_range(0..4)))
            .collect();
        if let Some(end) = cfg.end_base {
            bases[cfg.length - 1] = end;
        }
        let cand = DnaSeq::from_bases(bases);
        if let Some(bound) = cfg.max_gc_imbalance {
            if cand.max_gc_prefix_imbalance() > bound {
                continue;
            }
        }
        if let Some(bound) = cfg.max_run {
            if cand.max_homopolymer_run() > bound {
                continue;
            }
        }
        if !is_self_uncorrelated(&cand) {
            continue;
        }
        if kept.contains(&cand) {
            continue;
        }
        if cfg.min_distance > 1
            && kept.iter().any(|k| {
                k.hamming_distance(&cand).expect("equal lengths") < cfg.min_distance
            })
        {
            continue;
        }
        let mut trial = kept.clone();
        trial.push(cand);
        if check_mutually_uncorrelated(&trial)
            .expect("nonempty, equal lengths")
            .is_uncorrelated()
        {
            kept = trial;
        }
    }
    AddressSet::from_sequences(kept)
}

// ---------------------------------------------------------------------------
// Bounds
// ---------------------------------------------------------------------------

/// Closed-form bracket on the maximum size of a mutually uncorrelated set
/// of length-n sequences: 3*4^n/(4en) from below and (4^n/n)(1-1/n)^(n-1)
/// from above. Kept exact by over-approximating e with a stated rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuSizeBounds {
    pub lower: BigRational,
    pub upper: BigRational,
    /// Rational stand-in for Euler's number used in the lower bound.
    pub e_approx: BigRational,
}

pub fn blackburn_bounds(n: usize) -> MuSizeBounds {
    assert!(n >= 2, "bounds require n >= 2");
    let e_approx = BigRational::new(BigInt::from(87), BigInt::from(32));
    let four_n = BigInt::from(4u8).pow(n as u32);
    let lower = BigRational::from(BigInt::from(3) * &four_n)
        / (BigRational::from(BigInt::from(4 * n as u64)) * &e_approx);
    let n_big = BigInt::from(n as u64);
    let upper = BigRational::new(
        four_n * (&n_big - BigInt::one()).pow(n as u32 - 1),
        n_big.pow(n as u32),
    );
    MuSizeBounds {
        lower,
        upper,
        e_approx,
    }
}

/// Leading-order asymptotic for the number of Dyck words of length 2m and
/// height at most D. Height-bounded Dyck words are closed walks on the path
/// graph over heights {0..D}; the dominant eigenvalue pair +-2cos(pi/(D+2))
/// gives
///
///   Dyck(m, D) ~ (4/(D+2)) * sin^2(pi/(D+2)) * (2 cos(pi/(D+2)))^(2m).
pub fn dyck_asymptotic(m: usize, height: usize) -> f64 {
    let q = (height + 2) as f64;
    let angle = std::f64::consts::PI / q;
    4.0 / q * angle.sin().powi(2) * (2.0 * angle.cos()).powi(2 * m as i32)
}
