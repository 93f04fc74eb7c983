//! Toy mutation channel: seeded i.i.d. substitutions (uniform over the
//! three other bases) with optional insertions/deletions. Used by tests
//! and the CLI to demonstrate robustness claims at desk scale.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use thiserror::Error;

use crate::seq::{Base, DnaSeq};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ChannelError {
    #[error("{name} must lie in [0, 1], got {value}")]
    RateOutOfRange { name: &'static str, value: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelSpec {
    pub sub_rate: f64,
    pub indel_rate: f64,
    pub seed: u64,
}

impl ChannelSpec {
    pub fn new(sub_rate: f64, indel_rate: f64, seed: u64) -> Result<ChannelSpec, ChannelError> {
        for (name, value) in [("sub_rate", sub_rate), ("indel_rate", indel_rate)] {
            if !(0.0..=1.0).contains(&value) || value.is_nan() {
                return Err(ChannelError::RateOutOfRange { name, value });
            }
        }
        Ok(ChannelSpec {
            sub_rate,
            indel_rate,
            seed,
        })
    }

    pub fn substitutions_only(sub_rate: f64, seed: u64) -> Result<ChannelSpec, ChannelError> {
        ChannelSpec::new(sub_rate, 0.0, seed)
    }
}

/// Apply the channel. Identical (sequence, spec) pairs always produce an
/// identical output. Per input base: delete with probability indel/2,
/// insert a uniform base before it with probability indel/2, and
/// substitute with probability sub_rate (choosing uniformly among the
/// three other bases).
pub fn mutate(s: &DnaSeq, spec: &ChannelSpec) -> DnaSeq {
    let mut rng = ChaCha12Rng::seed_from_u64(spec.seed);
    let mut out = DnaSeq::new();
    for b in s.iter() {
        if spec.indel_rate > 0.0 {
            if rng.gen::<f64>() < spec.indel_rate / 2.0 {
                continue; // deletion
            }
            if rng.gen::<f64>() < spec.indel_rate / 2.0 {
                out.push(Base::from_index(rng.gen_range(0..4)));
            }
        }
        if rng.gen::<f64>() < spec.sub_rate {
            // Uniform over the three other bases.
            let offset = rng.gen_range(1..4u8);
            out.push(Base::from_index(b as u8 + offset));
        } else {
            out.push(b);
        }
    }
    out
}
