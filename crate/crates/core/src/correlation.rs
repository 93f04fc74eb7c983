//! Sequence correlation and the (mutual) uncorrelatedness predicates.
//!
//! The correlation of X and Y is a bit vector of length |X| whose i-th bit
//! (1-indexed from the left) records whether Y, slid so that its first
//! character sits under the i-th character of X, agrees with X on the whole
//! overlap. A sequence is self-uncorrelated when its autocorrelation is
//! 1 followed by zeroes, i.e. no proper prefix equals a suffix. A set is
//! mutually uncorrelated when every member is self-uncorrelated and every
//! ordered pair of distinct members has an all-zero correlation.

use thiserror::Error;

use crate::seq::{BitString, DnaSeq, SeqError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorrelationError {
    #[error("correlation is undefined for empty sequences")]
    EmptyOperand,
    #[error("sequences must all have the same length: {0}")]
    MixedLengths(#[source] SeqError),
    #[error("set must be nonempty")]
    EmptySet,
}

/// The correlation vector X∘Y; always the length of the left operand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationVector(BitString);

impl CorrelationVector {
    pub fn bits(&self) -> &BitString {
        &self.0
    }

    /// True iff the vector is 10...0 (the autocorrelation pattern of a
    /// self-uncorrelated word).
    pub fn is_leading_one_only(&self) -> bool {
        let bits = self.0.bits();
        !bits.is_empty() && bits[0] && bits[1..].iter().all(|&b| !b)
    }

    pub fn is_all_zero(&self) -> bool {
        self.0.bits().iter().all(|&b| !b)
    }

    /// 0-based shifts at which the bit is set.
    pub fn set_shifts(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .bits()
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
    }
}

impl std::fmt::Display for CorrelationVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Compute X∘Y. Bit i (0-based here) is set iff the suffix of X starting at
/// position i equals the prefix of Y of the same overlap length.
pub fn correlate(x: &DnaSeq, y: &DnaSeq) -> Result<CorrelationVector, CorrelationError> {
    if x.is_empty() || y.is_empty() {
        return Err(CorrelationError::EmptyOperand);
    }
    let xb = x.bases();
    let yb = y.bases();
    let bits = (0..xb.len())
        .map(|i| {
            let overlap = (xb.len() - i).min(yb.len());
            xb[i..i + overlap] == yb[..overlap]
        })
        .collect::<BitString>();
    Ok(CorrelationVector(bits))
}

/// True iff X∘X = 10...0. Empty input is vacuously not self-uncorrelated.
pub fn is_self_uncorrelated(x: &DnaSeq) -> bool {
    match correlate(x, x) {
        Ok(c) => c.is_leading_one_only(),
        Err(_) => false,
    }
}

/// Where a mutual-uncorrelatedness check failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuViolation {
    /// Index of the left operand X in the input set.
    pub left: usize,
    /// Index of the right operand Y; equals `left` for a self-correlation.
    pub right: usize,
    /// 0-based shift at which X∘Y has a forbidden set bit.
    pub shift: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MuCheck {
    Uncorrelated,
    Violation(MuViolation),
}

impl MuCheck {
    pub fn is_uncorrelated(&self) -> bool {
        matches!(self, MuCheck::Uncorrelated)
    }

    pub fn witness(&self) -> Option<&MuViolation> {
        match self {
            MuCheck::Uncorrelated => None,
            MuCheck::Violation(w) => Some(w),
        }
    }
}

/// Check a set for mutual uncorrelatedness. All sequences must be nonempty
/// and of one common length; the first offending pair and shift are
/// reported so expurgation pipelines can act on them.
pub fn check_mutually_uncorrelated(set: &[DnaSeq]) -> Result<MuCheck, CorrelationError> {
    if set.is_empty() {
        return Err(CorrelationError::EmptySet);
    }
    let n = set[0].len();
    for s in set {
        if s.is_empty() {
            return Err(CorrelationError::EmptyOperand);
        }
        if s.len() != n {
            return Err(CorrelationError::MixedLengths(SeqError::LengthMismatch {
                left: n,
                right: s.len(),
            }));
        }
    }
    for (i, x) in set.iter().enumerate() {
        let auto = correlate(x, x)?;
        if !auto.is_leading_one_only() {
            let shift = auto.set_shifts().find(|&s| s > 0).expect("bit set past 0");
            return Ok(MuCheck::Violation(MuViolation {
                left: i,
                right: i,
                shift,
            }));
        }
    }
    for (i, x) in set.iter().enumerate() {
        for (j, y) in set.iter().enumerate() {
            if i == j {
                continue;
            }
            let c = correlate(x, y)?;
            if !c.is_all_zero() {
                let shift = c.set_shifts().next().expect("bit set");
                return Ok(MuCheck::Violation(MuViolation {
                    left: i,
                    right: j,
                    shift,
                }));
            }
        }
    }
    Ok(MuCheck::Uncorrelated)
}

/// Longest k such that a suffix of length k of one member equals a prefix
/// of another (or the same) member, excluding the trivial full self-match.
/// Zero for a mutually uncorrelated set; this is the relaxed-
/// uncorrelatedness metric.
pub fn longest_prefix_suffix_overlap(set: &[DnaSeq]) -> usize {
    let mut best = 0;
    for (i, x) in set.iter().enumerate() {
        for (j, y) in set.iter().enumerate() {
            if let Ok(c) = correlate(x, y) {
                for shift in c.set_shifts() {
                    if shift == 0 && i == j {
                        continue;
                    }
                    best = best.max(x.len() - shift);
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dna(s: &str) -> DnaSeq {
        DnaSeq::parse(s).unwrap()
    }

    #[test]
    fn correlation_worked_examples() {
        let x = dna("GTAGTAG");
        let y = dna("TAGTAGCC");
        assert_eq!(correlate(&x, &y).unwrap().to_string(), "0100100");
        assert_eq!(correlate(&y, &x).unwrap().to_string(), "00000000");
        assert_eq!(correlate(&x, &x).unwrap().to_string(), "1001001");
    }

    #[test]
    fn correlation_rejects_empty_operands() {
        assert_eq!(
            correlate(&dna(""), &dna("A")).unwrap_err(),
            CorrelationError::EmptyOperand
        );
        assert_eq!(
            correlate(&dna("A"), &dna("")).unwrap_err(),
            CorrelationError::EmptyOperand
        );
    }

    #[test]
    fn self_uncorrelated_examples() {
        assert!(is_self_uncorrelated(&dna("ACCTG")));
        assert!(!is_self_uncorrelated(&dna("GTAGTAG")));
        // Prefix "A" equals suffix "A".
        assert!(!is_self_uncorrelated(&dna("AA")));
        assert!(!is_self_uncorrelated(&dna("")));
        assert!(is_self_uncorrelated(&dna("A")));
    }

    #[test]
    fn mutual_uncorrelatedness_singleton_and_failure_witness() {
        let ok = check_mutually_uncorrelated(&[dna("ACCTG")]).unwrap();
        assert!(ok.is_uncorrelated());

        let bad = check_mutually_uncorrelated(&[dna("AA"), dna("AT")]).unwrap();
        let w = bad.witness().expect("AA is not self-uncorrelated");
        assert_eq!((w.left, w.right), (0, 0));
        assert_eq!(w.shift, 1);

        // Cross-pair violation: suffix "G" of CG equals prefix "G" of GT.
        let bad = check_mutually_uncorrelated(&[dna("CG"), dna("GT")]).unwrap();
        let w = bad.witness().unwrap();
        assert_eq!((w.left, w.right, w.shift), (0, 1, 1));
    }

    #[test]
    fn mixed_lengths_error() {
        let err = check_mutually_uncorrelated(&[dna("AA"), dna("ACCTG")]);
        assert!(matches!(err, Err(CorrelationError::MixedLengths(_))));
        assert!(matches!(
            check_mutually_uncorrelated(&[]),
            Err(CorrelationError::EmptySet)
        ));
    }

    #[test]
    fn overlap_metric() {
        // TAG suffix of GTAGTAG matches TAG prefix of TAGTAGCC (k up to 6).
        let set = [dna("GTAGTAG"), dna("TAGTAGC")];
        assert_eq!(longest_prefix_suffix_overlap(&set), 6);
        let mu = [dna("CCACA"), dna("CCCAA")];
        assert_eq!(longest_prefix_suffix_overlap(&mu), 0);
    }
}
