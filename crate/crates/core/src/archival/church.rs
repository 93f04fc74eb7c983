//! The Church-Gao-Kosuri bit-per-nucleotide codec: bit 0 maps to A or C,
//! bit 1 to T or G. The free choice between the two carriers is spent on
//! GC balancing and on keeping homopolymer runs short; decoding collapses
//! the pairs again, so it is independent of the encoder's choices.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use thiserror::Error;

use crate::seq::{Base, BitString, DnaSeq};

/// Forward amplification primer of the reference implementation.
pub const FORWARD_PRIMER: &str = "CTACACGACGCTCTTCCGATCT";
/// Backward primer, stored verbatim as printed in the reference; note that
/// it is not the reverse complement of the forward primer.
pub const BACKWARD_PRIMER: &str = "AGATCGGAAGAGCGGTTCAGCA";

pub const BARCODE_BITS: usize = 19;
pub const PRIMER_LEN: usize = 22;
/// Information bits per oligo in the reference layout (12 ASCII bytes).
pub const PAYLOAD_BITS: usize = 96;
/// Full oligo length in the reference layout: 22 + 19 + 96 + 22.
pub const OLIGO_LEN: usize = 159;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChurchError {
    #[error("barcode must be {BARCODE_BITS} bits, got {0}")]
    BarcodeLength(usize),
    #[error("primers must be {PRIMER_LEN} nt, got {0}")]
    PrimerLength(usize),
    #[error("max_run must be at least 1")]
    MaxRunZero,
    #[error("{which} primer mismatch at offset {offset}")]
    PrimerMismatch { which: &'static str, offset: usize },
    #[error("oligo too short: {0} nt cannot hold primers and barcode")]
    OligoTooShort(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChurchParams {
    pub barcode: BitString,
    pub forward_primer: DnaSeq,
    pub backward_primer: DnaSeq,
    pub max_run: usize,
    pub rng_seed: u64,
}

impl ChurchParams {
    pub fn new(
        barcode: BitString,
        forward_primer: DnaSeq,
        backward_primer: DnaSeq,
        max_run: usize,
        rng_seed: u64,
    ) -> Result<ChurchParams, ChurchError> {
        if barcode.len() != BARCODE_BITS {
            return Err(ChurchError::BarcodeLength(barcode.len()));
        }
        if forward_primer.len() != PRIMER_LEN {
            return Err(ChurchError::PrimerLength(forward_primer.len()));
        }
        if backward_primer.len() != PRIMER_LEN {
            return Err(ChurchError::PrimerLength(backward_primer.len()));
        }
        if max_run == 0 {
            return Err(ChurchError::MaxRunZero);
        }
        Ok(ChurchParams {
            barcode,
            forward_primer,
            backward_primer,
            max_run,
            rng_seed,
        })
    }

    /// Reference primers, run limit 3.
    pub fn with_reference_primers(barcode: BitString, rng_seed: u64) -> ChurchParams {
        ChurchParams::new(
            barcode,
            DnaSeq::parse(FORWARD_PRIMER).expect("fixed primer"),
            DnaSeq::parse(BACKWARD_PRIMER).expect("fixed primer"),
            3,
            rng_seed,
        )
        .expect("reference geometry is valid")
    }
}

fn carriers(bit: bool) -> (Base, Base) {
    // (AT-side, GC-side) carrier for the bit.
    if bit {
        (Base::T, Base::G)
    } else {
        (Base::A, Base::C)
    }
}

/// forward_primer || map(barcode || payload) || backward_primer.
///
/// The carrier choice is greedy: prefer the base that shrinks the running
/// GC imbalance of the mapped region, break ties with a seeded coin, and
/// override the preference whenever it would extend a homopolymer run past
/// `max_run` (runs are tracked across the primer boundary as well).
pub fn church_encode(payload: &BitString, params: &ChurchParams) -> DnaSeq {
    let mut rng = ChaCha12Rng::seed_from_u64(params.rng_seed);
    let mut out = params.forward_primer.clone();

    let mut prev = out.bases().last().copied();
    let mut run = trailing_run(&out);
    let mut balance: i64 = 0;
    for &bit in params.barcode.bits().iter().chain(payload.bits()) {
        let (at, gc) = carriers(bit);
        let preferred = match balance.cmp(&0) {
            std::cmp::Ordering::Greater => at,
            std::cmp::Ordering::Less => gc,
            std::cmp::Ordering::Equal => {
                if rng.gen::<bool>() {
                    gc
                } else {
                    at
                }
            }
        };
        let choice = if Some(preferred) == prev && run >= params.max_run {
            if preferred == at {
                gc
            } else {
                at
            }
        } else {
            preferred
        };
        run = if Some(choice) == prev { run + 1 } else { 1 };
        prev = Some(choice);
        balance += if choice.is_gc() { 1 } else { -1 };
        out.push(choice);
    }
    out.extend_from(&params.backward_primer);
    out
}

fn trailing_run(s: &DnaSeq) -> usize {
    let bases = s.bases();
    match bases.last() {
        None => 0,
        Some(&last) => bases.iter().rev().take_while(|&&b| b == last).count(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChurchDecoded {
    pub barcode: BitString,
    pub payload: BitString,
}

/// Strip and verify the primers, collapse bases to bits (A,C -> 0 and
/// T,G -> 1), and split off the 19-bit barcode.
pub fn church_decode(oligo: &DnaSeq, params: &ChurchParams) -> Result<ChurchDecoded, ChurchError> {
    if oligo.len() < 2 * PRIMER_LEN + BARCODE_BITS {
        return Err(ChurchError::OligoTooShort(oligo.len()));
    }
    let bases = oligo.bases();
    let fwd = params.forward_primer.bases();
    if let Some(offset) = (0..PRIMER_LEN).find(|&i| bases[i] != fwd[i]) {
        return Err(ChurchError::PrimerMismatch {
            which: "forward",
            offset,
        });
    }
    let tail_at = oligo.len() - PRIMER_LEN;
    let bwd = params.backward_primer.bases();
    if let Some(offset) = (0..PRIMER_LEN).find(|&i| bases[tail_at + i] != bwd[i]) {
        return Err(ChurchError::PrimerMismatch {
            which: "backward",
            offset: tail_at + offset,
        });
    }
    let bits: BitString = bases[PRIMER_LEN..tail_at]
        .iter()
        .map(|b| matches!(b, Base::T | Base::G))
        .collect();
    let barcode = bits.bits()[..BARCODE_BITS].iter().copied().collect();
    let payload = bits.bits()[BARCODE_BITS..].iter().copied().collect();
    Ok(ChurchDecoded { barcode, payload })
}
