//! The three archival codecs: Church-Gao-Kosuri (bit per nucleotide),
//! Goldman et al. (Huffman + differential coding + overlapping segments),
//! and Grass et al. (GF(47) grouping + Reed-Solomon + run-limited DNA
//! mapping).

pub mod church;
pub mod goldman;
pub mod grass;
