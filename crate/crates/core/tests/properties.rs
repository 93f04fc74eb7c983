//! Property tests for the invariants each module promises.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use proptest::prelude::*;

use dna_codec_core::address::{
    dyck_to_mu_gcpb, enumerate_dyck, manchester_brds, select_mu_subset,
};
use dna_codec_core::archival::church::{church_decode, church_encode, ChurchParams, PRIMER_LEN};
use dna_codec_core::archival::goldman::{goldman_decode, goldman_encode, Huffman3Codebook};
use dna_codec_core::archival::grass::{symbols_to_dna, dna_to_symbols, Gf47, ReedSolomon47};
use dna_codec_core::correlation::{
    check_mutually_uncorrelated, correlate, is_self_uncorrelated,
};
use dna_codec_core::prefix_sync::{theta, theta_inv, GTable, PrefixPerturbation};
use dna_codec_core::seq::{Base, BitString, DnaSeq, TritString};

fn base_strategy() -> impl Strategy<Value = Base> {
    prop_oneof![
        Just(Base::A),
        Just(Base::C),
        Just(Base::G),
        Just(Base::T)
    ]
}

fn dna_strategy(len: std::ops::Range<usize>) -> impl Strategy<Value = DnaSeq> {
    prop::collection::vec(base_strategy(), len).prop_map(DnaSeq::from_bases)
}

fn all_dna_of_len(n: usize) -> impl Iterator<Item = DnaSeq> {
    (0..4usize.pow(n as u32)).map(move |code| {
        (0..n)
            .map(|i| Base::from_index(((code >> (2 * i)) & 3) as u8))
            .collect()
    })
}

#[test]
fn reverse_complement_involution_exhaustive_up_to_6() {
    for n in 0..=6 {
        for s in all_dna_of_len(n) {
            assert_eq!(s.reverse_complement().reverse_complement(), s);
        }
    }
}

proptest! {
    #[test]
    fn reverse_complement_involution_random(s in dna_strategy(0..200)) {
        prop_assert_eq!(s.reverse_complement().reverse_complement(), s);
    }

    #[test]
    fn hamming_triangle_inequality(
        (a, b, c) in (1usize..40).prop_flat_map(|n| (
            dna_strategy(n..n + 1),
            dna_strategy(n..n + 1),
            dna_strategy(n..n + 1),
        ))
    ) {
        let ab = a.hamming_distance(&b).unwrap();
        let bc = b.hamming_distance(&c).unwrap();
        let ac = a.hamming_distance(&c).unwrap();
        prop_assert!(ac <= ab + bc);
        prop_assert_eq!(ab, b.hamming_distance(&a).unwrap());
    }

    #[test]
    fn gc_imbalance_bounds_and_prefix_monotonicity(s in dna_strategy(0..100), b in base_strategy()) {
        let max = s.max_gc_prefix_imbalance();
        prop_assert!(max as i64 >= s.gc_imbalance().abs());
        let mut longer = s.clone();
        longer.push(b);
        let grown = longer.max_gc_prefix_imbalance();
        prop_assert!(grown >= max && grown <= max + 1);
    }

    #[test]
    fn correlation_bits_recheck(
        (x, y) in (1usize..24, 1usize..24).prop_flat_map(|(n, m)| (
            dna_strategy(n..n + 1),
            dna_strategy(m..m + 1),
        ))
    ) {
        let c = correlate(&x, &y).unwrap();
        for (i, &bit) in c.bits().bits().iter().enumerate() {
            let overlap = (x.len() - i).min(y.len());
            let matches = x.bases()[i..i + overlap] == y.bases()[..overlap];
            prop_assert_eq!(bit, matches, "shift {}", i);
        }
        // The leading autocorrelation bit is always set.
        prop_assert!(correlate(&x, &x).unwrap().bits()[0]);
    }

    #[test]
    fn select_mu_subset_output_is_mutually_uncorrelated(
        pool in (2usize..7).prop_flat_map(|n| prop::collection::vec(dna_strategy(n..n + 1), 1..40))
    ) {
        let selected = select_mu_subset(&pool).unwrap();
        if !selected.is_empty() {
            prop_assert!(check_mutually_uncorrelated(selected.sequences())
                .unwrap()
                .is_uncorrelated());
        }
        prop_assert!(selected.is_mutually_uncorrelated());
    }

    #[test]
    fn manchester_images_are_brds_with_doubled_distance(
        code in (1usize..16).prop_flat_map(|n| prop::collection::vec(
            prop::collection::vec(any::<bool>(), n..n + 1).prop_map(BitString::from_bits),
            1..8,
        ))
    ) {
        let images = manchester_brds(&code);
        for (word, image) in code.iter().zip(&images) {
            prop_assert_eq!(image.len(), 2 * word.len());
            // Running digital sum of every prefix stays within 1.
            let mut sum = 0i64;
            for &bit in image.bits() {
                sum += if bit { 1 } else { -1 };
                prop_assert!(sum.abs() <= 1);
            }
        }
        for i in 0..code.len() {
            for j in i + 1..code.len() {
                prop_assert_eq!(
                    images[i].hamming_distance(&images[j]).unwrap(),
                    2 * code[i].hamming_distance(&code[j]).unwrap()
                );
            }
        }
    }

    #[test]
    fn theta_round_trip(l in 0usize..12, raw in 0u64..600_000) {
        let modulus = 3u64.pow(l as u32);
        let y = BigUint::from(raw % modulus);
        let word = theta(l, &y).unwrap();
        prop_assert_eq!(word.len(), l);
        prop_assert_eq!(theta_inv(&word).unwrap(), y);
    }

    #[test]
    fn church_round_trip_any_seed(
        payload in prop::collection::vec(any::<bool>(), 0..300).prop_map(BitString::from_bits),
        seed in any::<u64>(),
    ) {
        let params = ChurchParams::with_reference_primers(
            BitString::parse("1000110111000110100").unwrap(),
            seed,
        );
        let oligo = church_encode(&payload, &params);
        let region = oligo.subseq(PRIMER_LEN, oligo.len() - PRIMER_LEN);
        prop_assert!(region.max_homopolymer_run() <= params.max_run);
        let decoded = church_decode(&oligo, &params).unwrap();
        prop_assert_eq!(decoded.payload, payload);
        prop_assert_eq!(decoded.barcode, params.barcode);
    }

    #[test]
    fn goldman_pipeline_round_trip_fixture_codebook(
        symbols in prop::collection::vec(
            prop::sample::select(b"Birney andGolm".to_vec()),
            16..120,
        ),
        id_a in 0u8..3,
        id_b in 0u8..3,
    ) {
        let cb = Huffman3Codebook::worked_example();
        let file_id = TritString::parse(&format!("{id_a}{id_b}")).unwrap();
        let blocks = goldman_encode(&symbols, &cb, &file_id).unwrap();
        for block in &blocks {
            prop_assert_eq!(block.len(), 117);
            // Differential coding never repeats a base inside the payload
            // and index sections.
            let body = block.subseq(1, block.len() - 1);
            prop_assert!(body.max_homopolymer_run() <= 1);
        }
        prop_assert_eq!(goldman_decode(&blocks, &cb).unwrap(), symbols);
    }

    #[test]
    fn goldman_pipeline_round_trip_derived_codebook(
        data in prop::collection::vec(any::<u8>(), 40..400),
    ) {
        let cb = Huffman3Codebook::from_bytes(&data).unwrap();
        let blocks = goldman_encode(&data, &cb, &TritString::parse("20").unwrap()).unwrap();
        prop_assert_eq!(goldman_decode(&blocks, &cb).unwrap(), data);
    }

    #[test]
    fn grass_symbol_dna_round_trip(
        values in prop::collection::vec(0u8..47, 0..80),
    ) {
        let symbols: Vec<Gf47> = values.iter().map(|&v| Gf47::new(v).unwrap()).collect();
        let even = &symbols[..symbols.len() / 2 * 2];
        let dna = symbols_to_dna(even).unwrap();
        prop_assert!(dna.max_homopolymer_run() <= 2);
        prop_assert_eq!(dna_to_symbols(&dna).unwrap(), even.to_vec());
    }

    #[test]
    fn rs47_corrects_within_radius(
        msg in prop::collection::vec(0u8..47, 5),
        err_pos in prop::collection::btree_set(0usize..11, 0..=3),
        err_val in 1u8..47,
    ) {
        let rs = ReedSolomon47::new(11, 5).unwrap();
        let msg: Vec<Gf47> = msg.into_iter().map(|v| Gf47::new(v).unwrap()).collect();
        let word = rs.encode(&msg).unwrap();
        let mut damaged = word.clone();
        for &p in &err_pos {
            damaged[p] = damaged[p] + Gf47::new(err_val).unwrap();
        }
        let decoded = rs.decode(&damaged).unwrap();
        prop_assert_eq!(decoded.message, msg);
        prop_assert_eq!(decoded.corrected.len(), err_pos.len());
    }
}

#[test]
fn prefixed_dyck_words_are_self_uncorrelated_exhaustive() {
    for m in 1..=6 {
        for word in enumerate_dyck(m, None) {
            let mut bits = BitString::new();
            bits.push(true);
            bits.extend_from(word.bits());
            let dna: DnaSeq = bits
                .bits()
                .iter()
                .map(|&b| if b { Base::C } else { Base::A })
                .collect();
            assert!(is_self_uncorrelated(&dna), "1{} not self-uncorrelated", word);
        }
    }
}

#[test]
fn mu_sets_never_embed_members_in_concatenations() {
    // For an accepted MU set, no member occurs inside u || v except as the
    // left or right flank. Exhaustive over construction sets up to n = 7
    // and a greedily selected random set at n = 8.
    let mut sets: Vec<Vec<DnaSeq>> = Vec::new();
    for m in 1..=3 {
        sets.push(dyck_to_mu_gcpb(m, m).into_sequences());
    }
    let pool: Vec<DnaSeq> = all_dna_of_len(8)
        .filter(|s| s.bases()[0] == Base::A)
        .step_by(7)
        .take(4000)
        .collect();
    sets.push(select_mu_subset(&pool).unwrap().into_sequences());
    for set in sets {
        assert!(check_mutually_uncorrelated(&set).unwrap().is_uncorrelated());
        for u in &set {
            for v in &set {
                let cat = DnaSeq::concat(&[u, v]);
                for w in &set {
                    for start in 0..=cat.len() - w.len() {
                        let here = cat.subseq(start, start + w.len());
                        if here == *w {
                            let at_flank = (start == 0 && w == u)
                                || (start == cat.len() - w.len() && w == v);
                            assert!(at_flank, "{w} occurs inside {u}||{v} at {start}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn dyck_construction_meets_mu_and_imbalance_bounds() {
    for m in 1..=6 {
        for height in 1..=4 {
            let set = dyck_to_mu_gcpb(m, height);
            assert!(set.is_mutually_uncorrelated(), "m={m} D={height}");
            assert!(
                set.max_gc_prefix_imbalance() <= height + 1,
                "m={m} D={height}"
            );
            assert_eq!(
                BigUint::from(set.len()),
                dna_codec_core::address::count_dyck(m, Some(height))
            );
        }
    }
}

#[test]
fn prefix_sync_bijectivity_random_addresses() {
    // Denser check than the unit tests: every value in range for a few
    // addresses, all lengths to 9.
    for addr in ["ACTCG", "ATTCG", "AGGTG", "ACGAG"] {
        let address = DnaSeq::parse(addr).unwrap();
        let table = GTable::build(address.clone(), 9).unwrap();
        for l in 0..=9 {
            let total = table.g(l).to_u64().unwrap();
            for x in 0..total {
                let word = table.encode(l, &BigUint::from(x)).unwrap();
                assert!(!word.contains(&address));
                assert_eq!(table.decode(&word).unwrap(), BigUint::from(x));
            }
        }
    }
}

proptest! {
    #[test]
    fn perturbation_round_trip_on_encoder_output(
        xs in prop::collection::vec(0u64..1_000_000, 1..8),
        l in 20usize..40,
    ) {
        // Random encoder outputs (they may embed long address prefixes)
        // perturb and unperturb exactly.
        let address = DnaSeq::parse("ACTAACTGTGCGACTGATGC").unwrap();
        let table = GTable::build(address.clone(), 40).unwrap();
        let p = PrefixPerturbation::new(address, 16).unwrap();
        for &x in &xs {
            let x = BigUint::from(x) % table.g(l);
            let word = table.encode(l, &x).unwrap();
            let perturbed = p.perturb(&word).unwrap();
            prop_assert_eq!(p.unperturb(&perturbed), word);
        }
    }

    #[test]
    fn perturbation_round_trip_on_random_strings(s in dna_strategy(0..120)) {
        let address = DnaSeq::parse("ACTAACTGTGCGACTGATGC").unwrap();
        let p = PrefixPerturbation::new(address, 16).unwrap();
        // Random strings essentially never contain a 16-nt image; when
        // perturb accepts, the round trip must be exact.
        if let Ok(perturbed) = p.perturb(&s) {
            prop_assert_eq!(p.unperturb(&perturbed), s);
        }
    }
}
