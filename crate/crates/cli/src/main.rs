//! dna-codec: constrained-coding toolkit for DNA data storage.
//!
//! Address generation/validation, prefix-synchronized encoding of files
//! into flanked datablocks, the Church/Goldman/Grass archival codecs,
//! exact avoidance counters, a toy substitution channel, and golden
//! reproduction of the published worked examples.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use dna_codec_core::address::{
    brds_to_gcpb, dyck_to_mu_gcpb, generate_mu_addresses, manchester_brds, validate_address_set,
    AddressSet, ExpurgateConfig, HairpinParams,
};
use dna_codec_core::channel::{mutate, ChannelSpec};
use dna_codec_core::container::{
    church_encode_file, decode_file, goldman_encode_file, grass_encode_file, yazdi_encode_file,
    EncodeOutput, Sidecar,
};
use dna_codec_core::correlation::check_mutually_uncorrelated;
use dna_codec_core::fasta::{read_fasta, write_fasta, FastaRecord};
use dna_codec_core::golden;
use dna_codec_core::prefix_sync::count_avoiding;
use dna_codec_core::seq::{Base, BitString, DnaSeq, TritString};

#[derive(Parser)]
#[command(
    name = "dna-codec",
    version,
    about = "Constrained-coding toolkit for DNA data storage"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate an address set with one of the supported constructions.
    GenAddresses(GenAddressesArgs),
    /// Validate a FASTA of addresses against the design constraints.
    CheckAddresses(CheckAddressesArgs),
    /// Check a FASTA of sequences for mutual uncorrelatedness.
    CheckMu(CheckMuArgs),
    /// Exact count of length-len words avoiding M addresses of length n.
    Count(CountArgs),
    /// Encode a file into a FASTA block pool plus JSON sidecar.
    Encode(EncodeArgs),
    /// Decode a FASTA block pool back into the original bytes.
    Decode(DecodeArgs),
    /// Pass FASTA records through the seeded substitution/indel channel.
    Mutate(MutateArgs),
    /// Re-derive the published worked examples and print a pass/fail table.
    ReproducePaperExamples,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Construction {
    /// Prepend 1 to height-bounded Dyck words (mutually uncorrelated,
    /// GC-prefix-balanced).
    Dyck,
    /// Manchester-expand a random binary code (1-GCPB, doubled distance).
    Brds,
    /// Seeded random candidates expurgated to a mutually uncorrelated set.
    Expurgate,
}

#[derive(clap::Args)]
struct GenAddressesArgs {
    #[arg(long, value_enum)]
    construction: Construction,
    /// Address length in nt.
    #[arg(long)]
    n: usize,
    /// GC-prefix-imbalance bound (dyck: the construction keeps it <= D).
    #[arg(long, short = 'D')]
    d_gc: Option<usize>,
    /// Minimum pairwise Hamming distance.
    #[arg(long, short = 'd')]
    d_min: Option<usize>,
    /// Number of addresses to emit.
    #[arg(long)]
    count: Option<usize>,
    /// RNG seed (falls back to DNACODEC_SEED, then 0).
    #[arg(long)]
    seed: Option<u64>,
    /// Force the final base of every address (prefix-sync pools need G).
    #[arg(long)]
    end_base: Option<char>,
    /// Output FASTA path (stdout when omitted).
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

#[derive(clap::Args)]
struct CheckAddressesArgs {
    input: PathBuf,
    /// GC-prefix-imbalance bound to check against.
    #[arg(long, short = 'D')]
    d_gc: Option<usize>,
    /// Minimum pairwise Hamming distance to check against.
    #[arg(long, short = 'd')]
    d_min: Option<usize>,
    /// Hairpin heuristic window length.
    #[arg(long, default_value_t = 6)]
    window: usize,
    /// Hairpin heuristic minimum start-to-start loop distance.
    #[arg(long, default_value_t = 3)]
    min_loop: usize,
}

#[derive(clap::Args)]
struct CheckMuArgs {
    input: PathBuf,
}

#[derive(clap::Args)]
struct CountArgs {
    /// Number of (mutually uncorrelated) addresses.
    #[arg(long = "M")]
    addresses: u64,
    /// Address length in nt.
    #[arg(long)]
    n: usize,
    /// Word length to count.
    #[arg(long)]
    len: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Codec {
    Yazdi,
    Church,
    Goldman,
    Grass,
}

#[derive(clap::Args)]
struct EncodeArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value = "yazdi")]
    codec: Codec,
    /// FASTA of flank addresses, two per block (yazdi).
    #[arg(long)]
    address_file: Option<PathBuf>,
    /// Sub-block length in nt (yazdi).
    #[arg(long, default_value_t = 80)]
    subblock_len: usize,
    /// Sub-blocks per block (yazdi).
    #[arg(long = "subblocks", default_value_t = 12)]
    subblock_count: usize,
    /// RNG seed (church; falls back to DNACODEC_SEED, then 0).
    #[arg(long)]
    seed: Option<u64>,
    /// Two-trit file id (goldman).
    #[arg(long, default_value = "00")]
    file_id: String,
    /// Inner Reed-Solomon code length (grass).
    #[arg(long, default_value_t = 39)]
    rs_n: usize,
    /// Inner Reed-Solomon message length (grass).
    #[arg(long, default_value_t = 33)]
    rs_k: usize,
    /// Output FASTA path; the sidecar goes to <output>.json.
    #[arg(short = 'o', long)]
    output: PathBuf,
    /// Override the sidecar path.
    #[arg(long)]
    sidecar: Option<PathBuf>,
}

#[derive(clap::Args)]
struct DecodeArgs {
    input: PathBuf,
    /// Sidecar path (defaults to <input>.json).
    #[arg(long)]
    sidecar: Option<PathBuf>,
    /// Output path (stdout when omitted).
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

#[derive(clap::Args)]
struct MutateArgs {
    input: PathBuf,
    /// Per-base substitution probability.
    #[arg(long, default_value_t = 0.0)]
    sub_rate: f64,
    /// Per-base insertion/deletion probability.
    #[arg(long, default_value_t = 0.0)]
    indel_rate: f64,
    /// RNG seed (falls back to DNACODEC_SEED, then 0).
    #[arg(long)]
    seed: Option<u64>,
    /// Output FASTA path (stdout when omitted).
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let payload = serde_json::json!({
                "format": 1,
                "error": format!("{err:#}"),
            });
            eprintln!("{payload}");
            ExitCode::FAILURE
        }
    }
}

fn resolve_seed(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("DNACODEC_SEED")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(0)
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::GenAddresses(args) => gen_addresses(args),
        Cmd::CheckAddresses(args) => check_addresses(args),
        Cmd::CheckMu(args) => check_mu(args),
        Cmd::Count(args) => {
            if args.addresses < 1 || args.n < 2 {
                bail!("count requires --M >= 1 and --n >= 2");
            }
            println!("{}", count_avoiding(args.addresses, args.n, args.len));
            Ok(())
        }
        Cmd::Encode(args) => encode(args),
        Cmd::Decode(args) => decode(args),
        Cmd::Mutate(args) => mutate_cmd(args),
        Cmd::ReproducePaperExamples => reproduce(),
    }
}

// ---------------------------------------------------------------------------
// gen-addresses
// ---------------------------------------------------------------------------

fn gen_addresses(args: GenAddressesArgs) -> Result<()> {
    let seed = resolve_seed(args.seed);
    let set = match args.construction {
        Construction::Dyck => {
            if args.n % 2 == 0 || args.n < 3 {
                bail!("dyck construction needs odd --n >= 3 (words are 1 || Dyck word)");
            }
            let m = (args.n - 1) / 2;
            let bound = args.d_gc.unwrap_or(4);
            if bound < 2 {
                bail!("dyck construction needs --D >= 2 (the leading 1 costs one unit)");
            }
            let set = dyck_to_mu_gcpb(m, bound - 1);
            restrict(set, args.count, args.d_min)?
        }
        Construction::Brds => {
            if args.n % 2 != 0 {
                bail!("brds construction needs even --n (Manchester doubles the length)");
            }
            let count = args.count.unwrap_or(16);
            let distance = args.d_min.unwrap_or(2).div_ceil(2);
            let code = random_binary_code(args.n / 2, count, distance, seed)?;
            let set = brds_to_gcpb(&manchester_brds(&code))?;
            restrict(set, args.count, None)?
        }
        Construction::Expurgate => {
            let mut cfg = ExpurgateConfig::new(args.n, args.count.unwrap_or(16), seed);
            cfg.end_base = match args.end_base {
                None => None,
                Some(c) => {
                    Some(Base::from_char(c).ok_or_else(|| anyhow!("invalid --end-base {c:?}"))?)
                }
            };
            cfg.min_distance = args.d_min.unwrap_or(1);
            if let Some(bound) = args.d_gc {
                cfg.max_gc_imbalance = Some(bound);
            }
            generate_mu_addresses(&cfg)?
        }
    };
    let construction = match args.construction {
        Construction::Dyck => "dyck",
        Construction::Brds => "brds",
        Construction::Expurgate => "expurgate",
    };
    let records: Vec<FastaRecord> = set
        .sequences()
        .iter()
        .enumerate()
        .map(|(i, s)| {
            FastaRecord::new(format!("a{i:05}"), s.clone())
                .with_attr("construction", construction)
                .with_attr("index", i)
        })
        .collect();
    write_fasta_out(&records, args.output.as_deref())
}

/// Truncate to `count` and greedily enforce a pairwise distance bound.
fn restrict(set: AddressSet, count: Option<usize>, d_min: Option<usize>) -> Result<AddressSet> {
    let mut sequences: Vec<DnaSeq> = Vec::new();
    for cand in set.into_sequences() {
        if let Some(limit) = count {
            if sequences.len() == limit {
                break;
            }
        }
        if let Some(d) = d_min {
            if sequences
                .iter()
                .any(|k| k.hamming_distance(&cand).expect("equal lengths") < d)
            {
                continue;
            }
        }
        sequences.push(cand);
    }
    if let Some(limit) = count {
        if sequences.len() < limit {
            bail!(
                "construction yielded only {} of the requested {limit} addresses",
                sequences.len()
            );
        }
    }
    if sequences.is_empty() {
        bail!("construction yielded no addresses for these parameters");
    }
    Ok(AddressSet::from_sequences(sequences)?)
}

/// Greedy seeded binary code with a pairwise distance floor.
fn random_binary_code(
    length: usize,
    count: usize,
    distance: usize,
    seed: u64,
) -> Result<Vec<BitString>> {
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(seed);
    let mut kept: Vec<BitString> = Vec::new();
    for _ in 0..1_000_000u64 {
        if kept.len() == count {
            break;
        }
        let cand: BitString = (0..length).map(|_| rng.gen::<bool>()).collect();
        if kept
            .iter()
            .all(|k| k.hamming_distance(&cand).expect("equal lengths") >= distance)
        {
            kept.push(cand);
        }
    }
    if kept.len() < count {
        bail!(
            "found only {} of {count} binary codewords at distance {distance}",
            kept.len()
        );
    }
    Ok(kept)
}

// ---------------------------------------------------------------------------
// check-addresses / check-mu
// ---------------------------------------------------------------------------

fn read_fasta_path(path: &Path) -> Result<Vec<FastaRecord>> {
    let file = std::fs::File::open(path).with_context(|| format!("open {}", path.display()))?;
    Ok(read_fasta(std::io::BufReader::new(file))?)
}

fn check_addresses(args: CheckAddressesArgs) -> Result<()> {
    let records = read_fasta_path(&args.input)?;
    let sequences: Vec<DnaSeq> = records.iter().map(|r| r.seq.clone()).collect();
    let params = HairpinParams {
        window: args.window,
        min_loop: args.min_loop,
    };
    let report = validate_address_set(
        sequences,
        args.d_gc.unwrap_or(usize::MAX),
        args.d_min.unwrap_or(0),
        params,
    )?;
    let set = &report.set;
    let hairpins: Vec<&str> = set
        .hairpin_indices()
        .iter()
        .map(|&i| records[i].id.as_str())
        .collect();
    let payload = serde_json::json!({
        "format": 1,
        "count": set.len(),
        "length": set.sequences().first().map_or(0, |s| s.len()),
        "d_min": set.d_min(),
        "D_gcpb": set.max_gc_prefix_imbalance(),
        "mu": set.is_mutually_uncorrelated(),
        "mu_witness": set.mu_witness().map(|w| serde_json::json!({
            "left": records[w.left].id,
            "right": records[w.right].id,
            "shift": w.shift,
        })),
        "hairpins": hairpins,
        "pass": report.passes(),
    });
    println!("{}", serde_json::to_string_pretty(&payload)?);
    if report.passes() {
        Ok(())
    } else {
        bail!("address set failed validation");
    }
}

fn check_mu(args: CheckMuArgs) -> Result<()> {
    let records = read_fasta_path(&args.input)?;
    let sequences: Vec<DnaSeq> = records.iter().map(|r| r.seq.clone()).collect();
    let outcome = check_mutually_uncorrelated(&sequences)?;
    let payload = serde_json::json!({
        "format": 1,
        "count": sequences.len(),
        "mu": outcome.is_uncorrelated(),
        "witness": outcome.witness().map(|w| serde_json::json!({
            "left": records[w.left].id,
            "right": records[w.right].id,
            "shift": w.shift,
        })),
    });
    println!("{}", serde_json::to_string_pretty(&payload)?);
    if outcome.is_uncorrelated() {
        Ok(())
    } else {
        bail!("set is not mutually uncorrelated");
    }
}

// ---------------------------------------------------------------------------
// encode / decode / mutate
// ---------------------------------------------------------------------------

fn encode(args: EncodeArgs) -> Result<()> {
    let data =
        std::fs::read(&args.input).with_context(|| format!("read {}", args.input.display()))?;
    let out: EncodeOutput = match args.codec {
        Codec::Yazdi => {
            let path = args
                .address_file
                .as_ref()
                .ok_or_else(|| anyhow!("--codec yazdi requires --address-file"))?;
            let addresses: Vec<DnaSeq> = read_fasta_path(path)?
                .into_iter()
                .map(|r| r.seq)
                .collect();
            yazdi_encode_file(&data, &addresses, args.subblock_len, args.subblock_count)?
        }
        Codec::Church => church_encode_file(&data, resolve_seed(args.seed))?,
        Codec::Goldman => {
            let file_id = TritString::parse(&args.file_id)
                .map_err(|e| anyhow!("--file-id must be two trits: {e}"))?;
            goldman_encode_file(&data, &file_id)?
        }
        Codec::Grass => grass_encode_file(&data, args.rs_n, args.rs_k)?,
    };
    let mut fasta = Vec::new();
    write_fasta(&mut fasta, &out.records)?;
    std::fs::write(&args.output, fasta)
        .with_context(|| format!("write {}", args.output.display()))?;
    let sidecar_path = args
        .sidecar
        .unwrap_or_else(|| sidecar_path_for(&args.output));
    std::fs::write(&sidecar_path, out.sidecar.to_json())
        .with_context(|| format!("write {}", sidecar_path.display()))?;
    eprintln!(
        "encoded {} bytes into {} blocks ({})",
        out.sidecar.byte_len,
        out.sidecar.block_count,
        out.sidecar.codec_name()
    );
    Ok(())
}

fn sidecar_path_for(output: &Path) -> PathBuf {
    let mut os = output.as_os_str().to_owned();
    os.push(".json");
    PathBuf::from(os)
}

fn decode(args: DecodeArgs) -> Result<()> {
    let sidecar_path = args
        .sidecar
        .unwrap_or_else(|| sidecar_path_for(&args.input));
    let sidecar_json = std::fs::read_to_string(&sidecar_path)
        .with_context(|| format!("read {}", sidecar_path.display()))?;
    let sidecar = Sidecar::from_json(&sidecar_json)?;
    let records = read_fasta_path(&args.input)?;
    let decoded = decode_file(&sidecar, &records)?;
    for warning in &decoded.warnings {
        eprintln!("warning: {warning}");
    }
    match args.output {
        Some(path) => std::fs::write(&path, &decoded.bytes)
            .with_context(|| format!("write {}", path.display()))?,
        None => std::io::stdout().write_all(&decoded.bytes)?,
    }
    Ok(())
}

fn mutate_cmd(args: MutateArgs) -> Result<()> {
    let seed = resolve_seed(args.seed);
    let records = read_fasta_path(&args.input)?;
    let mutated: Vec<FastaRecord> = records
        .into_iter()
        .enumerate()
        .map(|(i, mut r)| {
            let spec =
                ChannelSpec::new(args.sub_rate, args.indel_rate, seed.wrapping_add(i as u64))?;
            r.seq = mutate(&r.seq, &spec);
            Ok(r)
        })
        .collect::<Result<_>>()?;
    write_fasta_out(&mutated, args.output.as_deref())
}

fn write_fasta_out(records: &[FastaRecord], path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => {
            let mut buf = Vec::new();
            write_fasta(&mut buf, records)?;
            std::fs::write(p, buf).with_context(|| format!("write {}", p.display()))?;
        }
        None => {
            let stdout = std::io::stdout();
            write_fasta(stdout.lock(), records)?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// reproduce-paper-examples
// ---------------------------------------------------------------------------

fn reproduce() -> Result<()> {
    let checks = golden::run_all();
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut failed = 0;
    for check in &checks {
        let status = if check.passed { "PASS" } else { "FAIL" };
        println!("{status}  {:width$}  {}", check.name, check.detail);
        if !check.passed {
            failed += 1;
        }
    }
    println!("{} checks, {} failed", checks.len(), failed);
    if failed > 0 {
        bail!("{failed} golden checks failed");
    }
    Ok(())
}
