//! Golden fixtures: the worked examples printed in the publications behind
//! each codec, frozen verbatim, plus executable checks that re-derive them
//! from this crate's implementations. The CLI's `reproduce-paper-examples`
//! subcommand and the acceptance suite both run [`run_all`].

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::archival::church;
use crate::archival::goldman::{self, Huffman3Codebook};
use crate::archival::grass::{group_bytes, Gf47};
use crate::correlation::{check_mutually_uncorrelated, correlate};
use crate::prefix_sync::{count_avoiding, perturbed_prefix, theta, GTable};
use crate::seq::{Base, BitString, DnaSeq, TritString};

// ---------------------------------------------------------------------------
// Correlation worked example
// ---------------------------------------------------------------------------

pub const CORRELATION_X: &str = "GTAGTAG";
pub const CORRELATION_Y: &str = "TAGTAGCC";
pub const CORRELATION_X_Y: &str = "0100100";
pub const CORRELATION_Y_X: &str = "00000000";
pub const CORRELATION_X_X: &str = "1001001";

// ---------------------------------------------------------------------------
// Prefix-synchronized coding worked example
// ---------------------------------------------------------------------------

/// Address consistent with the published G values (3,9,27,81,267,849,2715)
/// and the encoding CCAAATCT; the companion text misprints it as ACCTG,
/// whose recursion would give G_{5,5} = 240 instead.
pub const PS_ADDRESS: &str = "AGCTG";
pub const PS_G_VALUES: [u64; 7] = [3, 9, 27, 81, 267, 849, 2715];
pub const PS_ENCODE_INPUT: u64 = 550;
pub const PS_ENCODE_LEN: usize = 8;
pub const PS_ENCODED: &str = "CCAAATCT";
pub const PS_THETA_LEN: usize = 4;
pub const PS_THETA_INPUT: u64 = 16;
pub const PS_THETA_OUTPUT: &str = "ATCT";

/// Avoidance count for the random-access experiment geometry: M=32
/// addresses of length 20 leave 1.4615e48 (160-bit) words of length 80,
/// printed as 1.462e48 after rounding to four significant digits.
pub const AVOID_M: u64 = 32;
pub const AVOID_N: usize = 20;
pub const AVOID_LEN: usize = 80;
pub const AVOID_LEADING_DIGITS: &str = "146";
pub const AVOID_DECIMAL_DIGITS: usize = 49;

/// Prefix-perturbation worked example.
pub const PERTURB_ADDRESS: &str = "ACTAACTGTGCGACTGATGC";
pub const PERTURB_PREFIX_LEN: usize = 16;
pub const PERTURB_IMAGE: &str = "ACTAATGCCTGGACTG";

// ---------------------------------------------------------------------------
// Church worked example
// ---------------------------------------------------------------------------

pub const CHURCH_TEXT: &str = "ferential DN";
pub const CHURCH_BARCODE: &str = "1000110111000110100";

/// The mapped region exactly as printed (114 nt). The printed oligo drops
/// one nucleotide: the 0-bit opening the ASCII 'i' (at region offset 67)
/// has no carrier, so the region is one short of the stated 115 nt.
pub const CHURCH_REGION_PRINTED: &str = "TAACGTCTTGCCCGGAGAAATGAATTCATTCATATATGTCAGAA\
TTCATAGCGGATGTAATGTCTACGTCTCATAGGCCCATAGTCTGCCACTACACCATACATAACTCCGTTA";

/// Offset (in the mapped region) of the dropped carrier.
pub const CHURCH_MISSING_OFFSET: usize = 67;

/// The 115-nt region with the missing 0-bit carrier restored as A. Both
/// candidate carriers (A and C) decode to the same bit, so every
/// bit-level assertion is independent of this choice.
pub fn church_region_restored() -> DnaSeq {
    let printed = DnaSeq::parse(CHURCH_REGION_PRINTED).expect("fixture");
    let mut bases = printed.bases().to_vec();
    bases.insert(CHURCH_MISSING_OFFSET, Base::A);
    DnaSeq::from_bases(bases)
}

/// Full restored oligo: forward primer || region || backward primer.
pub fn church_oligo_restored() -> DnaSeq {
    DnaSeq::concat(&[
        &DnaSeq::parse(church::FORWARD_PRIMER).expect("fixture"),
        &church_region_restored(),
        &DnaSeq::parse(church::BACKWARD_PRIMER).expect("fixture"),
    ])
}

/// The 115 bits the oligo carries: barcode || ASCII of the text.
pub fn church_expected_bits() -> BitString {
    let mut bits = BitString::parse(CHURCH_BARCODE).expect("fixture");
    bits.extend_from(&BitString::from_bytes(CHURCH_TEXT.as_bytes()));
    bits
}

// ---------------------------------------------------------------------------
// Goldman worked example
// ---------------------------------------------------------------------------

pub const GOLDMAN_TEXT: &str = "Birney and Goldman";

/// Huffman output S1, 92 trits.
pub const GOLDMAN_S1: &str = "2010020210101010002120001222111022120111200021\
2210002212222212021100210122100110210111200021";

/// S4 = S1 || 13 zero trits || 20-trit length field, 125 trits.
pub const GOLDMAN_S4: &str = "2010020210101010002120001222111022120111200021\
2210002212222212021100210122100110210111200021\
000000000000000000000000000010102";

/// Differential encoding of S4 from the virtual start base A.
pub const GOLDMAN_S5: &str = "TAGTATATCGACTAGTACAGCGTAGCATCTCGCAGCGAGAT\
ACGCTGCTACGCAGCATGCTGTGAGTATCGATGACGAGTGACTCTGTACAGTACGTACGTACGTACGTACGTACGTACGACTAT";

pub const GOLDMAN_F0: &str = "TAGTATATCGACTAGTACAGCGTAGCATCTCGCAGCGAGAT\
ACGCTGCTACGCAGCATGCTGTGAGTATCGATGACGAGTGACTCTGTACAGTACGTACG";

/// F1 after reverse complementation (as stored).
pub const GOLDMAN_F1_RC: &str = "ATAGTCGTACGTACGTACGTACGTACGTACGTACTGTACAG\
AGTCACTCGTCATCGATACTCACAGCATGCTGCGTAGCAGCGTATCTCGCTGCGAGATG";

pub const GOLDMAN_F0_PRIME: &str = "TAGTATATCGACTAGTACAGCGTAGCATCTCGCAGCGAGAT\
ACGCTGCTACGCAGCATGCTGTGAGTATCGATGACGAGTGACTCTGTACAGTACGTACGATACGTACGTACGTC";

pub const GOLDMAN_F1_PRIME: &str = "ATAGTCGTACGTACGTACGTACGTACGTACGTACTGTACAG\
AGTCACTCGTCATCGATACTCACAGCATGCTGCGTAGCAGCGTATCTCGCTGCGAGATGATACGTACGTACGAG";

pub const GOLDMAN_F0_DOUBLE_PRIME: &str = "ATAGTATATCGACTAGTACAGCGTAGCATCTCGCAGCGAGAT\
ACGCTGCTACGCAGCATGCTGTGAGTATCGATGACGAGTGACTCTGTACAGTACGTACGATACGTACGTACGTCG";

pub const GOLDMAN_F1_DOUBLE_PRIME: &str = "TATAGTCGTACGTACGTACGTACGTACGTACGTACTGTACAG\
AGTCACTCGTCATCGATACTCACAGCATGCTGCGTAGCAGCGTATCTCGCTGCGAGATGATACGTACGTACGAGC";

/// File id used in the worked example.
pub const GOLDMAN_FILE_ID: &str = "12";

// ---------------------------------------------------------------------------
// Grass grouping examples
// ---------------------------------------------------------------------------

pub const GRASS_GROUPING: [([u8; 2], [u8; 3]); 3] = [
    ([0, 0], [0, 0, 0]),
    ([0, 48], [0, 1, 1]),
    // 65535 = 29*2209 + 31*47 + 17; base-conversion oracle.
    ([255, 255], [29, 31, 17]),
];

// ---------------------------------------------------------------------------
// Check runner
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct GoldenCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(
    out: &mut Vec<GoldenCheck>,
    name: &'static str,
    run: impl FnOnce() -> Result<String, String>,
) {
    let (passed, detail) = match run() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    out.push(GoldenCheck {
        name,
        passed,
        detail,
    });
}

fn expect_eq<T: PartialEq + std::fmt::Display>(got: T, want: T) -> Result<String, String> {
    if got == want {
        Ok(format!("{got}"))
    } else {
        Err(format!("got {got}, want {want}"))
    }
}

/// Re-derive every frozen worked-example value and report each comparison.
pub fn run_all() -> Vec<GoldenCheck> {
    let mut out = Vec::new();
    let dna = |s: &str| DnaSeq::parse(s).expect("fixture");

    check(&mut out, "correlation X*Y", || {
        let c = correlate(&dna(CORRELATION_X), &dna(CORRELATION_Y)).map_err(|e| e.to_string())?;
        expect_eq(c.to_string(), CORRELATION_X_Y.to_string())
    });
    check(&mut out, "correlation Y*X", || {
        let c = correlate(&dna(CORRELATION_Y), &dna(CORRELATION_X)).map_err(|e| e.to_string())?;
        expect_eq(c.to_string(), CORRELATION_Y_X.to_string())
    });
    check(&mut out, "autocorrelation X*X", || {
        let c = correlate(&dna(CORRELATION_X), &dna(CORRELATION_X)).map_err(|e| e.to_string())?;
        expect_eq(c.to_string(), CORRELATION_X_X.to_string())
    });

    check(&mut out, "prefix-sync G table", || {
        let table = GTable::build(dna(PS_ADDRESS), 7).map_err(|e| e.to_string())?;
        let got: Vec<u64> = (1..=7).map(|l| table.g(l).to_u64().unwrap()).collect();
        expect_eq(format!("{got:?}"), format!("{:?}", PS_G_VALUES.to_vec()))
    });
    check(&mut out, "prefix-sync theta", || {
        let w = theta(PS_THETA_LEN, &BigUint::from(PS_THETA_INPUT)).map_err(|e| e.to_string())?;
        expect_eq(w.to_string(), PS_THETA_OUTPUT.to_string())
    });
    check(&mut out, "prefix-sync encode", || {
        let table = GTable::build(dna(PS_ADDRESS), 8).map_err(|e| e.to_string())?;
        let word = table
            .encode(PS_ENCODE_LEN, &BigUint::from(PS_ENCODE_INPUT))
            .map_err(|e| e.to_string())?;
        expect_eq(word.to_string(), PS_ENCODED.to_string())
    });
    check(&mut out, "prefix-sync decode", || {
        let table = GTable::build(dna(PS_ADDRESS), 8).map_err(|e| e.to_string())?;
        let x = table.decode(&dna(PS_ENCODED)).map_err(|e| e.to_string())?;
        expect_eq(x.to_string(), PS_ENCODE_INPUT.to_string())
    });
    check(&mut out, "avoidance count 32/20/80", || {
        let c = count_avoiding(AVOID_M, AVOID_N, AVOID_LEN).to_string();
        if c.len() == AVOID_DECIMAL_DIGITS && c.starts_with(AVOID_LEADING_DIGITS) {
            Ok(format!("{}... ({} digits)", &c[..4], c.len()))
        } else {
            Err(format!("got {c}"))
        }
    });
    check(&mut out, "prefix perturbation image", || {
        let img = perturbed_prefix(&dna(PERTURB_ADDRESS), PERTURB_PREFIX_LEN);
        expect_eq(img.to_string(), PERTURB_IMAGE.to_string())
    });

    check(&mut out, "church oligo decode", || {
        let params =
            church::ChurchParams::with_reference_primers(church_expected_bits_barcode(), 0);
        let decoded =
            church::church_decode(&church_oligo_restored(), &params).map_err(|e| e.to_string())?;
        let mut bits = decoded.barcode.clone();
        bits.extend_from(&decoded.payload);
        expect_eq(bits.to_string(), church_expected_bits().to_string())
    });
    check(&mut out, "church payload is the ASCII text", || {
        let params =
            church::ChurchParams::with_reference_primers(church_expected_bits_barcode(), 0);
        let decoded =
            church::church_decode(&church_oligo_restored(), &params).map_err(|e| e.to_string())?;
        let bytes = decoded.payload.to_bytes().map_err(|e| e.to_string())?;
        expect_eq(
            String::from_utf8_lossy(&bytes).to_string(),
            CHURCH_TEXT.to_string(),
        )
    });
    check(&mut out, "church re-encode round trip", || {
        let params =
            church::ChurchParams::with_reference_primers(church_expected_bits_barcode(), 1234);
        let payload = BitString::from_bytes(CHURCH_TEXT.as_bytes());
        let oligo = church::church_encode(&payload, &params);
        let region = oligo.subseq(church::PRIMER_LEN, oligo.len() - church::PRIMER_LEN);
        if region.max_homopolymer_run() > params.max_run {
            return Err("homopolymer run limit violated".into());
        }
        let decoded = church::church_decode(&oligo, &params).map_err(|e| e.to_string())?;
        expect_eq(decoded.payload.to_string(), payload.to_string())
    });

    check(&mut out, "goldman S1 huffman", || {
        let cb = Huffman3Codebook::worked_example();
        let s1 = cb.encode(GOLDMAN_TEXT.as_bytes()).map_err(|e| e.to_string())?;
        expect_eq(s1.to_string(), GOLDMAN_S1.to_string())
    });
    check(&mut out, "goldman S4 length field", || {
        let s1 = TritString::parse(GOLDMAN_S1).expect("fixture");
        let s4 = goldman::append_length(&s1).map_err(|e| e.to_string())?;
        expect_eq(s4.to_string(), GOLDMAN_S4.to_string())
    });
    check(&mut out, "goldman S5 differential", || {
        let s4 = TritString::parse(GOLDMAN_S4).expect("fixture");
        let s5 = goldman::differential_encode(&s4, goldman::DIFFERENTIAL_START);
        expect_eq(s5.to_string(), GOLDMAN_S5.to_string())
    });
    check(&mut out, "goldman segments F0/F1", || {
        let segments = goldman::segment(&dna(GOLDMAN_S5)).map_err(|e| e.to_string())?;
        if segments.len() != 2 {
            return Err(format!("expected 2 segments, got {}", segments.len()));
        }
        expect_eq(
            format!("{} {}", segments[0], segments[1]),
            format!("{GOLDMAN_F0} {GOLDMAN_F1_RC}"),
        )
    });
    check(&mut out, "goldman indexed blocks", || {
        let id = TritString::parse(GOLDMAN_FILE_ID).expect("fixture");
        let b0 = goldman::index_block(&dna(GOLDMAN_F0), &id, 0).map_err(|e| e.to_string())?;
        let b1 = goldman::index_block(&dna(GOLDMAN_F1_RC), &id, 1).map_err(|e| e.to_string())?;
        let f0p = b0.subseq(1, 1 + 115);
        let f1p = b1.subseq(1, 1 + 115);
        if f0p != dna(GOLDMAN_F0_PRIME) || f1p != dna(GOLDMAN_F1_PRIME) {
            return Err("indexed payload mismatch".into());
        }
        expect_eq(
            format!("{b0} {b1}"),
            format!("{GOLDMAN_F0_DOUBLE_PRIME} {GOLDMAN_F1_DOUBLE_PRIME}"),
        )
    });
    check(&mut out, "goldman parity", || {
        let id = TritString::parse("12").expect("fixture");
        let mut id_intra = id.trits().to_vec();
        id_intra.extend(std::iter::repeat(crate::seq::Trit::Zero).take(12));
        expect_eq(goldman::parity_trit(&id_intra).value() as u64, 1)
    });
    check(&mut out, "goldman decode round trip", || {
        let cb = Huffman3Codebook::worked_example();
        let blocks = vec![dna(GOLDMAN_F0_DOUBLE_PRIME), dna(GOLDMAN_F1_DOUBLE_PRIME)];
        let bytes = goldman::goldman_decode(&blocks, &cb).map_err(|e| e.to_string())?;
        expect_eq(
            String::from_utf8_lossy(&bytes).to_string(),
            GOLDMAN_TEXT.to_string(),
        )
    });

    check(&mut out, "grass grouping", || {
        for (bytes, symbols) in GRASS_GROUPING {
            let got = group_bytes(&bytes).map_err(|e| e.to_string())?;
            let want: Vec<Gf47> = symbols
                .iter()
                .map(|&v| Gf47::new(v).expect("fixture"))
                .collect();
            if got != want {
                return Err(format!("{bytes:?} grouped to {got:?}, want {want:?}"));
            }
        }
        Ok("3 pairs".into())
    });

    check(&mut out, "mutual uncorrelatedness of example pair", || {
        // The self-uncorrelated example word stands alone as an MU set.
        let set = [dna("ACCTG")];
        match check_mutually_uncorrelated(&set).map_err(|e| e.to_string())? {
            c if c.is_uncorrelated() => Ok("ACCTG".into()),
            _ => Err("ACCTG reported correlated".into()),
        }
    });

    out
}

fn church_expected_bits_barcode() -> BitString {
    BitString::parse(CHURCH_BARCODE).expect("fixture")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_lengths() {
        assert_eq!(CHURCH_REGION_PRINTED.len(), 114);
        assert_eq!(church_region_restored().len(), 115);
        assert_eq!(church_oligo_restored().len(), church::OLIGO_LEN);
        assert_eq!(church_expected_bits().len(), 115);
        assert_eq!(GOLDMAN_S1.len(), 92);
        assert_eq!(GOLDMAN_S4.len(), 125);
        assert_eq!(GOLDMAN_S5.len(), 125);
        assert_eq!(GOLDMAN_F0.len(), 100);
        assert_eq!(GOLDMAN_F1_RC.len(), 100);
        assert_eq!(GOLDMAN_F0_PRIME.len(), 115);
        assert_eq!(GOLDMAN_F1_PRIME.len(), 115);
        assert_eq!(GOLDMAN_F0_DOUBLE_PRIME.len(), 117);
        assert_eq!(GOLDMAN_F1_DOUBLE_PRIME.len(), 117);
    }

    #[test]
    fn all_golden_checks_pass() {
        let checks = run_all();
        let failures: Vec<&GoldenCheck> = checks.iter().filter(|c| !c.passed).collect();
        assert!(
            failures.is_empty(),
            "failing golden checks: {:#?}",
            failures
        );
    }

    #[test]
    fn printed_church_region_decodes_with_one_dropped_bit() {
        // The verbatim printed region maps to the expected 115 bits with
        // the bit at offset 67 removed.
        let printed = DnaSeq::parse(CHURCH_REGION_PRINTED).unwrap();
        let bits: BitString = printed
            .iter()
            .map(|b| matches!(b, Base::T | Base::G))
            .collect();
        let mut expected = church_expected_bits().bits().to_vec();
        let removed = expected.remove(CHURCH_MISSING_OFFSET);
        assert!(!removed, "the dropped carrier encodes a 0 bit");
        assert_eq!(bits.bits(), &expected[..]);
    }
}
