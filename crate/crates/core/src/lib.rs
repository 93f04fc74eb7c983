//! Constrained-coding toolkit for archival and random-access DNA data
//! storage: address design (mutually uncorrelated, GC-prefix-balanced,
//! distance-separated sets), prefix-synchronized integer encoding with
//! exact counting, the Church/Goldman/Grass archival codecs, a toy
//! substitution channel, and file-level container formats.

pub mod address;
pub mod archival;
pub mod channel;
pub mod container;
pub mod correlation;
pub mod fasta;
pub mod golden;
pub mod prefix_sync;
pub mod seq;

pub use seq::{Base, BitString, DnaSeq, Trit, TritString};
