//! The Grass et al. codec components: byte-pair grouping into GF(47),
//! systematic Reed-Solomon coding over GF(47), and a homopolymer-free
//! mapping of symbol pairs onto 6-nt DNA words.
//!
//! A context-free per-symbol 3-nt table cannot exist: after a worst-case
//! left context only 45 run-limited triplets remain, fewer than the 47
//! field elements. Symbol pairs (47^2 = 2209 values) are therefore
//! unranked into the 2457 six-letter words that keep every homopolymer
//! run at length <= 2, with the first letter constrained to differ from
//! the previously emitted base.

use thiserror::Error;

use crate::seq::{Base, DnaSeq};

pub const FIELD_SIZE: u16 = 47;
/// 47^2 symbol-pair values.
pub const PAIR_VALUES: u16 = 2209;
/// Run-limited 6-nt words available per left context.
pub const WORDS_PER_CONTEXT: u16 = 2457;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrassError {
    #[error("byte count must be even, got {0}")]
    OddByteCount(usize),
    #[error("symbol count must be even, got {0}")]
    OddSymbolCount(usize),
    #[error("symbol count must be a multiple of 3, got {0}")]
    BadSymbolCount(usize),
    #[error("symbol triple at offset {0} exceeds the two-byte range")]
    TripleOutOfRange(usize),
    #[error("DNA length must be a multiple of 6, got {0}")]
    BadDnaLength(usize),
    #[error("6-nt word at offset {0} violates the run/context constraints")]
    InvalidWord(usize),
    #[error("6-nt word at offset {0} is outside the symbol-pair range")]
    WordOutOfRange(usize),
    #[error("invalid code parameters n={n}, k={k} (need 1 <= k <= n <= 47)")]
    BadCodeParams { n: usize, k: usize },
    #[error("message length {found} does not match k={k}")]
    BadMessageLength { found: usize, k: usize },
    #[error("received word length {found} does not match n={n}")]
    BadWordLength { found: usize, n: usize },
    #[error("more than {t} symbol errors: decoding failed")]
    TooManyErrors { t: usize },
}

// ---------------------------------------------------------------------------
// GF(47)
// ---------------------------------------------------------------------------

/// An element of the prime field with 47 elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf47(u8);

impl Gf47 {
    pub const ZERO: Gf47 = Gf47(0);
    pub const ONE: Gf47 = Gf47(1);

    pub fn new(value: u8) -> Option<Gf47> {
        (u16::from(value) < FIELD_SIZE).then_some(Gf47(value))
    }

    /// Reduce an arbitrary integer mod 47.
    pub fn from_u64(value: u64) -> Gf47 {
        Gf47((value % u64::from(FIELD_SIZE)) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn inv(self) -> Gf47 {
        debug_assert!(self.0 != 0, "zero has no inverse");
        // Fermat: a^(p-2) mod p.
        let mut acc = Gf47::ONE;
        let mut base = self;
        let mut e = FIELD_SIZE - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl std::ops::Add for Gf47 {
    type Output = Gf47;
    fn add(self, rhs: Gf47) -> Gf47 {
        Gf47(((u16::from(self.0) + u16::from(rhs.0)) % FIELD_SIZE) as u8)
    }
}

impl std::ops::Sub for Gf47 {
    type Output = Gf47;
    fn sub(self, rhs: Gf47) -> Gf47 {
        Gf47(((u16::from(self.0) + FIELD_SIZE - u16::from(rhs.0)) % FIELD_SIZE) as u8)
    }
}

impl std::ops::Mul for Gf47 {
    type Output = Gf47;
    fn mul(self, rhs: Gf47) -> Gf47 {
        Gf47(((u16::from(self.0) * u16::from(rhs.0)) % FIELD_SIZE) as u8)
    }
}

// ---------------------------------------------------------------------------
// Grouping: bytes <-> GF(47) symbols
// ---------------------------------------------------------------------------

/// Every byte pair becomes three field elements via base conversion from
/// 256^2 to 47^3 (big-endian digits).
pub fn group_bytes(bytes: &[u8]) -> Result<Vec<Gf47>, GrassError> {
    if bytes.len() % 2 != 0 {
        return Err(GrassError::OddByteCount(bytes.len()));
    }
    let mut out = Vec::with_capacity(bytes.len() / 2 * 3);
    for pair in bytes.chunks_exact(2) {
        let v = u32::from(pair[0]) * 256 + u32::from(pair[1]);
        let q = u32::from(PAIR_VALUES);
        out.push(Gf47((v / q) as u8));
        out.push(Gf47(((v / u32::from(FIELD_SIZE)) % u32::from(FIELD_SIZE)) as u8));
        out.push(Gf47((v % u32::from(FIELD_SIZE)) as u8));
    }
    Ok(out)
}

pub fn ungroup_symbols(symbols: &[Gf47]) -> Result<Vec<u8>, GrassError> {
    if symbols.len() % 3 != 0 {
        return Err(GrassError::BadSymbolCount(symbols.len()));
    }
    let mut out = Vec::with_capacity(symbols.len() / 3 * 2);
    for (i, triple) in symbols.chunks_exact(3).enumerate() {
        let v = u32::from(triple[0].0) * u32::from(PAIR_VALUES)
            + u32::from(triple[1].0) * u32::from(FIELD_SIZE)
            + u32::from(triple[2].0);
        if v > 0xFFFF {
            return Err(GrassError::TripleOutOfRange(3 * i));
        }
        out.push((v >> 8) as u8);
        out.push((v & 0xFF) as u8);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Reed-Solomon over GF(47)
// ---------------------------------------------------------------------------

/// Outcome of a successful decode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsDecoded {
    pub message: Vec<Gf47>,
    /// Positions whose symbols were corrected.
    pub corrected: Vec<usize>,
}

/// Systematic Reed-Solomon code of length n and dimension k over GF(47),
/// realized as polynomial evaluation at the points 0, 1, ..., n-1: the
/// codeword is (p(0), ..., p(n-1)) for the unique p of degree < k with
/// p(i) = message_i for i < k. Corrects floor((n-k)/2) symbol errors via
/// the Berlekamp-Welch system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReedSolomon47 {
    n: usize,
    k: usize,
}

impl ReedSolomon47 {
    pub fn new(n: usize, k: usize) -> Result<ReedSolomon47, GrassError> {
        if k == 0 || k > n || n > FIELD_SIZE as usize {
            return Err(GrassError::BadCodeParams { n, k });
        }
        Ok(ReedSolomon47 { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Guaranteed error-correction radius.
    pub fn t(&self) -> usize {
        (self.n - self.k) / 2
    }

    pub fn encode(&self, message: &[Gf47]) -> Result<Vec<Gf47>, GrassError> {
        if message.len() != self.k {
            return Err(GrassError::BadMessageLength {
                found: message.len(),
                k: self.k,
            });
        }
        let p = interpolate(message);
        Ok((0..self.n).map(|i| eval(&p, Gf47::from_u64(i as u64))).collect())
    }

    pub fn decode(&self, word: &[Gf47]) -> Result<RsDecoded, GrassError> {
        if word.len() != self.n {
            return Err(GrassError::BadWordLength {
                found: word.len(),
                n: self.n,
            });
        }
        let t = self.t();
        let fail = Err(GrassError::TooManyErrors { t });
        // Solve Q(x_i) = y_i * E(x_i) with E monic of degree t and
        // deg Q <= k - 1 + t. Unknowns: q_0..q_{k+t-1}, e_0..e_{t-1};
        // the monic leading term moves to the right-hand side.
        let cols = self.k + 2 * t;
        let mut rows = Vec::with_capacity(self.n);
        for (i, &y) in word.iter().enumerate() {
            let x = Gf47::from_u64(i as u64);
            let mut row = Vec::with_capacity(cols + 1);
            let mut pw = Gf47::ONE;
            for _ in 0..self.k + t {
                row.push(pw);
                pw = pw * x;
            }
            let mut pw = Gf47::ONE;
            for _ in 0..t {
                row.push(Gf47::ZERO - y * pw);
                pw = pw * x;
            }
            // pw is now x^t.
            row.push(y * pw);
            rows.push(row);
        }
        let solution = match solve(rows, cols) {
            Some(s) => s,
            None => return fail,
        };
        let q: Vec<Gf47> = solution[..self.k + t].to_vec();
        let mut e: Vec<Gf47> = solution[self.k + t..].to_vec();
        e.push(Gf47::ONE); // monic x^t term
        let (p, rem) = div_rem(&q, &e);
        if rem.iter().any(|&c| c != Gf47::ZERO) || p.len() > self.k {
            return fail;
        }
        let corrected: Vec<usize> = (0..self.n)
            .filter(|&i| eval(&p, Gf47::from_u64(i as u64)) != word[i])
            .collect();
        if corrected.len() > t {
            return fail;
        }
        let mut message: Vec<Gf47> = (0..self.k)
            .map(|i| eval(&p, Gf47::from_u64(i as u64)))
            .collect();
        message.truncate(self.k);
        Ok(RsDecoded { message, corrected })
    }
}

/// Lagrange interpolation through (0, m_0), ..., (k-1, m_{k-1});
/// coefficients in ascending degree order.
fn interpolate(values: &[Gf47]) -> Vec<Gf47> {
    let k = values.len();
    let mut acc = vec![Gf47::ZERO; k];
    for (j, &yj) in values.iter().enumerate() {
        if yj == Gf47::ZERO {
            continue;
        }
        let xj = Gf47::from_u64(j as u64);
        // Basis polynomial prod_{i != j} (x - x_i) / (x_j - x_i).
        let mut basis = vec![Gf47::ONE];
        let mut denom = Gf47::ONE;
        for i in 0..k {
            if i == j {
                continue;
            }
            let xi = Gf47::from_u64(i as u64);
            basis = mul_linear(&basis, xi);
            denom = denom * (xj - xi);
        }
        let scale = yj * denom.inv();
        for (slot, &c) in acc.iter_mut().zip(basis.iter()) {
            *slot = *slot + c * scale;
        }
    }
    acc
}

/// Multiply by (x - root).
fn mul_linear(poly: &[Gf47], root: Gf47) -> Vec<Gf47> {
    let mut out = vec![Gf47::ZERO; poly.len() + 1];
    for (i, &c) in poly.iter().enumerate() {
        out[i + 1] = out[i + 1] + c;
        out[i] = out[i] - c * root;
    }
    out
}

fn eval(poly: &[Gf47], x: Gf47) -> Gf47 {
    poly.iter()
        .rev()
        .fold(Gf47::ZERO, |acc, &c| acc * x + c)
}

fn div_rem(num: &[Gf47], den: &[Gf47]) -> (Vec<Gf47>, Vec<Gf47>) {
    let ddeg = den.len() - 1;
    debug_assert!(den[ddeg] == Gf47::ONE, "divisor is monic");
    let mut rem = num.to_vec();
    if rem.len() <= ddeg {
        return (vec![Gf47::ZERO], rem);
    }
    let mut quot = vec![Gf47::ZERO; rem.len() - ddeg];
    for lead in (ddeg..rem.len()).rev() {
        let c = rem[lead];
        if c == Gf47::ZERO {
            continue;
        }
        quot[lead - ddeg] = c;
        for (i, &d) in den.iter().enumerate() {
            rem[lead - ddeg + i] = rem[lead - ddeg + i] - c * d;
        }
    }
    rem.truncate(ddeg.max(1));
    while quot.len() > 1 && *quot.last().unwrap() == Gf47::ZERO {
        quot.pop();
    }
    (quot, rem)
}

/// Gaussian elimination over GF(47); rows are [coefficients..., rhs].
/// Returns any solution (free variables set to zero), or None if the
/// system is inconsistent.
fn solve(mut rows: Vec<Vec<Gf47>>, cols: usize) -> Option<Vec<Gf47>> {
    let mut pivot_of_col = vec![None; cols];
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != Gf47::ZERO) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv();
        for c in col..=cols {
            rows[rank][c] = rows[rank][c] * inv;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != Gf47::ZERO {
                let factor = rows[r][col];
                for c in col..=cols {
                    rows[r][c] = rows[r][c] - factor * rows[rank][c];
                }
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
    }
    // Inconsistent if any zero row has a nonzero rhs.
    for row in rows.iter().skip(rank) {
        if row[cols] != Gf47::ZERO {
            return None;
        }
    }
    let mut solution = vec![Gf47::ZERO; cols];
    for (col, pivot) in pivot_of_col.iter().enumerate() {
        if let Some(r) = pivot {
            solution[col] = rows[*r][cols];
        }
    }
    Some(solution)
}

// ---------------------------------------------------------------------------
// Symbol pairs <-> 6-nt DNA words
// ---------------------------------------------------------------------------

/// Completion counts for run-limited words: ways to extend a word by
/// `remaining` bases given the current run length (1 or 2).
fn completions(remaining: usize, run: usize) -> u32 {
    let mut c1 = 1u32; // run of 1
    let mut c2 = 1u32; // run of 2
    for _ in 0..remaining {
        let n1 = 3 * c1 + c2;
        let n2 = 3 * c1;
        c1 = n1;
        c2 = n2;
    }
    if run == 1 {
        c1
    } else {
        c2
    }
}

const WORD_LEN: usize = 6;

/// Unrank `value` into the lexicographically `value`-th 6-nt word with all
/// homopolymer runs <= 2 and first base != `context`.
fn unrank_word(mut value: u32, context: Option<Base>) -> [Base; 6] {
    let mut out = [Base::A; WORD_LEN];
    let mut prev: Option<Base> = None;
    let mut run = 0usize;
    for pos in 0..WORD_LEN {
        for cand in Base::ALL {
            let blocked = match prev {
                None => context == Some(cand),
                Some(p) => cand == p && run == 2,
            };
            if blocked {
                continue;
            }
            let new_run = if prev == Some(cand) { run + 1 } else { 1 };
            let ways = completions(WORD_LEN - pos - 1, new_run);
            if value < ways {
                out[pos] = cand;
                prev = Some(cand);
                run = new_run;
                break;
            }
            value -= ways;
        }
    }
    debug_assert_eq!(value, 0);
    out
}

/// Inverse of [`unrank_word`]; None when the word violates the run or
/// context constraints.
fn rank_word(word: &[Base], context: Option<Base>) -> Option<u32> {
    let mut rank = 0u32;
    let mut prev: Option<Base> = None;
    let mut run = 0usize;
    for (pos, &b) in word.iter().enumerate() {
        for cand in Base::ALL {
            let blocked = match prev {
                None => context == Some(cand),
                Some(p) => cand == p && run == 2,
            };
            if cand == b {
                if blocked {
                    return None;
                }
                break;
            }
            if !blocked {
                let new_run = if prev == Some(cand) { run + 1 } else { 1 };
                rank += completions(WORD_LEN - pos - 1, new_run);
            }
        }
        run = if prev == Some(b) { run + 1 } else { 1 };
        prev = Some(b);
    }
    Some(rank)
}

/// Map GF(47) symbol pairs to 6-nt words. The whole output keeps every
/// homopolymer run at length <= 2, including across word boundaries.
pub fn symbols_to_dna(symbols: &[Gf47]) -> Result<DnaSeq, GrassError> {
    if symbols.len() % 2 != 0 {
        return Err(GrassError::OddSymbolCount(symbols.len()));
    }
    let mut out = DnaSeq::new();
    for pair in symbols.chunks_exact(2) {
        let value = u32::from(pair[0].0) * u32::from(FIELD_SIZE) + u32::from(pair[1].0);
        let context = out.bases().last().copied();
        for b in unrank_word(value, context) {
            out.push(b);
        }
    }
    Ok(out)
}

pub fn dna_to_symbols(dna: &DnaSeq) -> Result<Vec<Gf47>, GrassError> {
    if dna.len() % WORD_LEN != 0 {
        return Err(GrassError::BadDnaLength(dna.len()));
    }
    let mut out = Vec::with_capacity(dna.len() / WORD_LEN * 2);
    let mut context: Option<Base> = None;
    for (i, word) in dna.bases().chunks_exact(WORD_LEN).enumerate() {
        let value =
            rank_word(word, context).ok_or(GrassError::InvalidWord(i * WORD_LEN))?;
        if value >= u32::from(PAIR_VALUES) {
            return Err(GrassError::WordOutOfRange(i * WORD_LEN));
        }
        out.push(Gf47((value / u32::from(FIELD_SIZE)) as u8));
        out.push(Gf47((value % u32::from(FIELD_SIZE)) as u8));
        context = word.last().copied();
    }
    Ok(out)
}

/// Like [`dna_to_symbols`], but words that violate the constraints (e.g.
/// after channel damage) become the placeholder pair (0, 0) instead of an
/// error; the affected word offsets are reported so a downstream
/// Reed-Solomon stage can treat them as symbol errors.
pub fn dna_to_symbols_lossy(dna: &DnaSeq) -> Result<(Vec<Gf47>, Vec<usize>), GrassError> {
    if dna.len() % WORD_LEN != 0 {
        return Err(GrassError::BadDnaLength(dna.len()));
    }
    let mut out = Vec::with_capacity(dna.len() / WORD_LEN * 2);
    let mut damaged = Vec::new();
    let mut context: Option<Base> = None;
    for (i, word) in dna.bases().chunks_exact(WORD_LEN).enumerate() {
        match rank_word(word, context).filter(|&v| v < u32::from(PAIR_VALUES)) {
            Some(value) => {
                out.push(Gf47((value / u32::from(FIELD_SIZE)) as u8));
                out.push(Gf47((value % u32::from(FIELD_SIZE)) as u8));
            }
            None => {
                damaged.push(i * WORD_LEN);
                out.push(Gf47::ZERO);
                out.push(Gf47::ZERO);
            }
        }
        context = word.last().copied();
    }
    Ok((out, damaged))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(v: u8) -> Gf47 {
        Gf47::new(v).unwrap()
    }

    #[test]
    fn grouping_reference_values() {
        assert_eq!(group_bytes(&[0, 0]).unwrap(), [sym(0), sym(0), sym(0)]);
        // 48 = 47 + 1.
        assert_eq!(group_bytes(&[0, 48]).unwrap(), [sym(0), sym(1), sym(1)]);
        // Base-conversion oracle: 65535 = 29*2209 + 31*47 + 17.
        assert_eq!(29 * 2209 + 31 * 47 + 17, 65535);
        assert_eq!(
            group_bytes(&[255, 255]).unwrap(),
            [sym(29), sym(31), sym(17)]
        );
        assert!(group_bytes(&[1]).is_err());
    }

    #[test]
    fn grouping_round_trip_exhaustive() {
        for v in 0..=0xFFFFu32 {
            let bytes = [(v >> 8) as u8, (v & 0xFF) as u8];
            let symbols = group_bytes(&bytes).unwrap();
            assert_eq!(ungroup_symbols(&symbols).unwrap(), bytes);
        }
        // Out-of-range triple: 46*2209 + 46*47 + 46 > 65535.
        assert!(ungroup_symbols(&[sym(46), sym(46), sym(46)]).is_err());
    }

    #[test]
    fn gf47_field_axioms_spot_checks() {
        for a in 1..47u8 {
            let x = sym(a);
            assert_eq!(x * x.inv(), Gf47::ONE);
        }
        assert_eq!(sym(40) + sym(10), sym(3));
        assert_eq!(sym(3) - sym(10), sym(40));
        assert_eq!(sym(46) * sym(46), Gf47::ONE); // (-1)^2
    }

    #[test]
    fn rs_zero_message_and_identity() {
        let rs = ReedSolomon47::new(7, 3).unwrap();
        let zero = rs.encode(&[Gf47::ZERO; 3]).unwrap();
        assert!(zero.iter().all(|&c| c == Gf47::ZERO));

        // n = k: no redundancy, encoding is the identity.
        let rs = ReedSolomon47::new(4, 4).unwrap();
        let msg = [sym(1), sym(7), sym(46), sym(0)];
        let word = rs.encode(&msg).unwrap();
        assert_eq!(word, msg);
        let decoded = rs.decode(&word).unwrap();
        assert_eq!(decoded.message, msg);
        assert!(decoded.corrected.is_empty());
    }

    #[test]
    fn rs_systematic_prefix() {
        let rs = ReedSolomon47::new(12, 5).unwrap();
        let msg: Vec<Gf47> = (0..5).map(|i| sym(i * 9 % 47)).collect();
        let word = rs.encode(&msg).unwrap();
        assert_eq!(&word[..5], &msg[..]);
    }

    #[test]
    fn rs_corrects_up_to_two_errors_at_n7_k3() {
        let rs = ReedSolomon47::new(7, 3).unwrap();
        let msg = [sym(13), sym(0), sym(42)];
        let word = rs.encode(&msg).unwrap();
        for i in 0..7 {
            for j in i + 1..7 {
                for di in [1u8, 23] {
                    for dj in [5u8, 46] {
                        let mut bad = word.clone();
                        bad[i] = bad[i] + sym(di);
                        bad[j] = bad[j] + sym(dj);
                        let decoded = rs.decode(&bad).unwrap();
                        assert_eq!(decoded.message, msg);
                        assert_eq!(decoded.corrected, vec![i, j]);
                    }
                }
            }
        }
        // Three errors exceed the radius: decoding must not claim success
        // with the original message (it either fails or miscorrects to a
        // different codeword).
        let mut bad = word.clone();
        bad[0] = bad[0] + sym(1);
        bad[1] = bad[1] + sym(2);
        bad[2] = bad[2] + sym(3);
        match rs.decode(&bad) {
            Err(GrassError::TooManyErrors { t: 2 }) => {}
            Ok(decoded) => assert_ne!(decoded.message, msg),
            Err(other) => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rs_full_length_47() {
        let rs = ReedSolomon47::new(47, 41).unwrap();
        let msg: Vec<Gf47> = (0..41).map(|i| sym((i * 11 + 3) as u8 % 47)).collect();
        let word = rs.encode(&msg).unwrap();
        let mut bad = word.clone();
        bad[0] = bad[0] + sym(9);
        bad[46] = bad[46] + sym(17);
        bad[20] = bad[20] + sym(1);
        let decoded = rs.decode(&bad).unwrap();
        assert_eq!(decoded.message, msg);
        assert_eq!(decoded.corrected, vec![0, 20, 46]);
    }

    #[test]
    fn words_per_context_matches_brute_force() {
        // Brute-force oracle: enumerate all 4^6 words, count the ones with
        // runs <= 2 and first base != context.
        let ctx = Base::G;
        let mut count = 0u32;
        for code in 0..4096u32 {
            let word: Vec<Base> = (0..6)
                .map(|i| Base::from_index(((code >> (2 * i)) & 3) as u8))
                .collect();
            let runs_ok = word.windows(3).all(|w| !(w[0] == w[1] && w[1] == w[2]));
            if runs_ok && word[0] != ctx {
                count += 1;
            }
        }
        assert_eq!(count, u32::from(WORDS_PER_CONTEXT));
        assert_eq!(3 * completions(5, 1), u32::from(WORDS_PER_CONTEXT));
        assert!(WORDS_PER_CONTEXT > PAIR_VALUES);
    }

    #[test]
    fn rank_unrank_round_trip_per_context() {
        for ctx in [None, Some(Base::A), Some(Base::T)] {
            let limit = if ctx.is_some() { 2457 } else { 3276 };
            for v in 0..limit {
                let word = unrank_word(v, ctx);
                assert_eq!(rank_word(&word, ctx), Some(v), "ctx {ctx:?} v {v}");
            }
        }
    }

    #[test]
    fn symbols_to_dna_round_trip_and_run_limit() {
        let symbols: Vec<Gf47> = (0..60u32)
            .map(|i| sym(((i * i + 5 * i) % 47) as u8))
            .collect();
        let dna = symbols_to_dna(&symbols).unwrap();
        assert_eq!(dna.len(), 60 / 2 * 6);
        assert!(dna.max_homopolymer_run() <= 2);
        assert_eq!(dna_to_symbols(&dna).unwrap(), symbols);

        assert_eq!(symbols_to_dna(&[]).unwrap(), DnaSeq::new());
        assert!(symbols_to_dna(&[Gf47::ZERO]).is_err());
    }
}
