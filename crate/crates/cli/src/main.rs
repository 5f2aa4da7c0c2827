//! `z4ca`: build, verify and lift quaternary constant-amplitude codes.
//!
//! Exit status: 0 when every check passes, 1 when a mathematical check
//! fails, 2 on usage, parameter or parse errors.

mod report;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use sha2::{Digest, Sha256};

use z4ca::algebra::Field;
use z4ca::codes::{
    distance, min_distance_exhaustive, quadratic_coset_min_weight, Bound, CodeBook, CodeMeta,
    DistanceReport, Family, LinearCode,
};
use z4ca::constructions::{nonsingular_quadratic_code, single_coset_code, MfCode, MfVariant};
use z4ca::format::{read_words, write_words, WordFile};
use z4ca::graymap::{gray, gray_inverse, lift_even, lift_gray_preimage, lift_odd_offset};
use z4ca::kerdock_dg::{dg, dg_subcode, kerdock, kerdock_subcode};
use z4ca::spectral::{degree_bound, is_bent, papr, spectrum_form_check};
use z4ca::table::{table1, RowStatus, Table1Options};
use z4ca::{Alphabet, Error, Word};

use report::{FileDigest, RunReport};

/// Largest number of lines any command writes to a word file.
const MAX_OUTPUT_WORDS: u128 = 1 << 22;

#[derive(Parser, Debug)]
#[command(name = "z4ca", version, about = "Quaternary constant-amplitude codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Number of variables; words have length 2^m.
    #[arg(long, global = true)]
    m: Option<u32>,
    /// Order of the Delsarte-Goethals family.
    #[arg(long, global = true)]
    t: Option<usize>,
    /// Output word file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Input word file.
    #[arg(long = "in", global = true)]
    input: Option<PathBuf>,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print the run report as JSON.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a code, write its words and a `<out>.json` metadata file.
    Construct {
        #[arg(long, value_enum)]
        name: ConstructionName,
        /// Write one representative per coset of ZRM(1,m) instead of every word.
        #[arg(long)]
        reps: bool,
    },
    /// Run exhaustive checks on every word of a file.
    Verify {
        #[arg(
            long,
            value_enum,
            value_delimiter = ',',
            default_value = "papr,bent,spectrum-form,degree-bound"
        )]
        checks: Vec<Check>,
    },
    /// Recompute the rate and minimum Lee distance table for m in {4, 5, 6}.
    Table1 {
        /// Binary constant-amplitude code used for the lifted rows.
        #[arg(long)]
        binary_ca: Option<PathBuf>,
        /// Representative pairs sampled when a code is too large for all pairs.
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
    },
    /// Lift binary words to quaternary words.
    Lift {
        #[arg(long, value_enum)]
        rule: LiftRule,
        /// Second file for the `b` half of each pair; defaults to `--in`.
        #[arg(long)]
        in2: Option<PathBuf>,
    },
    /// Gray map of every word, quaternary to binary.
    Gray {
        /// Map binary words back to quaternary ones.
        #[arg(long)]
        inverse: bool,
    },
    /// Exact minimum distance of the words in a file.
    Dist,
    /// Every word of a Reed-Muller type code.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        r: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum ConstructionName {
    /// Maiorana-McFarland bent words, cosets of RM4(1,m).
    Mf,
    /// Maiorana-McFarland bent words, cosets of ZRM(1,m).
    MfZrm,
    /// A single full-rank quadratic coset of ZRM(1,m).
    Coset,
    /// Nonsingular quadratic cosets, a subcode of ZRM(2,m).
    Zrm2,
    /// Nonsingular cosets of the Kerdock code.
    Kerdock,
    /// Nonsingular cosets of DG(t,m).
    Dg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Check {
    Papr,
    Bent,
    SpectrumForm,
    DegreeBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum LiftRule {
    OddOffset,
    Even,
    GrayPreimage,
}

enum Failure {
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<RunReport, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let start = Instant::now();
    let command: Vec<String> = std::env::args().skip(1).collect();
    let result = match &cli.command {
        Command::Construct { name, reps } => cmd_construct(&cli, *name, *reps),
        Command::Verify { checks } => cmd_verify(&cli, checks),
        Command::Table1 { binary_ca, samples } => cmd_table1(&cli, binary_ca.as_deref(), *samples),
        Command::Lift { rule, in2 } => cmd_lift(&cli, *rule, in2.as_deref()),
        Command::Gray { inverse } => cmd_gray(&cli, *inverse),
        Command::Dist => cmd_dist(&cli),
        Command::Gen { family, r } => cmd_gen(&cli, *family, *r),
    };
    match result {
        Ok(mut report) => {
            report.command = command;
            report.wall_time_ms = start.elapsed().as_millis() as u64;
            report.print(cli.json);
            ExitCode::from(if report.passed { 0 } else { 1 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn require_m(cli: &Cli) -> Result<u32, Failure> {
    cli.m.ok_or_else(|| usage("--m is required"))
}

fn require_out(cli: &Cli) -> Result<&Path, Failure> {
    cli.out.as_deref().ok_or_else(|| usage("--out is required"))
}

fn require_in(cli: &Cli) -> Result<&Path, Failure> {
    cli.input
        .as_deref()
        .ok_or_else(|| usage("--in is required"))
}

/// Reads and digests a word file.
fn load(path: &Path) -> Result<(WordFile, FileDigest), Failure> {
    let bytes =
        std::fs::read(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let digest = FileDigest {
        path: path.display().to_string(),
        sha256: hex::encode(Sha256::digest(&bytes)),
    };
    let file = read_words(&bytes[..]).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok((file, digest))
}

/// Forwards writes and hashes them.
struct HashingWriter<W: Write> {
    inner: W,
    hasher: Sha256,
}

impl<W: Write> Write for HashingWriter<W> {
    fn write(&mut self, buf: &[u8]) -> std::io::Result<usize> {
        let n = self.inner.write(buf)?;
        self.hasher.update(&buf[..n]);
        Ok(n)
    }

    fn flush(&mut self) -> std::io::Result<()> {
        self.inner.flush()
    }
}

fn save(
    path: &Path,
    alphabet: Alphabet,
    m: u32,
    words: impl IntoIterator<Item = Word>,
) -> Result<(u64, FileDigest), Failure> {
    let file =
        File::create(path).map_err(|e| usage(format!("cannot create {}: {e}", path.display())))?;
    let mut w = HashingWriter {
        inner: BufWriter::new(file),
        hasher: Sha256::new(),
    };
    let count = write_words(&mut w, alphabet, m, words)?;
    w.flush()?;
    Ok((
        count,
        FileDigest {
            path: path.display().to_string(),
            sha256: hex::encode(w.hasher.finalize()),
        },
    ))
}

fn save_bytes(path: &Path, bytes: &[u8]) -> Result<FileDigest, Failure> {
    std::fs::write(path, bytes)
        .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
    Ok(FileDigest {
        path: path.display().to_string(),
        sha256: hex::encode(Sha256::digest(bytes)),
    })
}

fn check_output_size(count: u128, what: &str) -> Result<(), Failure> {
    if count > MAX_OUTPUT_WORDS {
        return Err(usage(format!(
            "{what}: {count} words exceeds the limit of {MAX_OUTPUT_WORDS}"
        )));
    }
    Ok(())
}

fn build(name: ConstructionName, m: u32, t: usize) -> Result<CodeBook, Error> {
    Ok(match name {
        ConstructionName::Mf => CodeBook::MaioranaMcFarland(MfCode::new(m, MfVariant::Rm4)?),
        ConstructionName::MfZrm => CodeBook::MaioranaMcFarland(MfCode::new(m, MfVariant::Zrm)?),
        ConstructionName::Coset => CodeBook::Cosets(single_coset_code(m)?),
        ConstructionName::Zrm2 => CodeBook::Cosets(nonsingular_quadratic_code(m)?),
        ConstructionName::Kerdock => {
            CodeBook::Cosets(kerdock_subcode(Field::with_default_modulus(m)?)?)
        }
        ConstructionName::Dg => CodeBook::Cosets(dg_subcode(Field::with_default_modulus(m)?, t)?),
    })
}

/// Lower bound on the minimum Lee distance that the construction guarantees.
fn distance_floor(name: ConstructionName, book: &CodeBook, t: usize) -> Result<u32, Error> {
    let m = book.m();
    Ok(match (name, book) {
        (_, CodeBook::MaioranaMcFarland(c)) => c.min_distance_formula(),
        (ConstructionName::Coset, _) => 1 << m,
        (ConstructionName::Zrm2, _) => 1 << (m - 1),
        (ConstructionName::Kerdock, _) => kerdock(m)?.min_distance_formula(),
        _ => dg(t, m)?.min_distance_formula(),
    })
}

/// Exact distance when the pair scan is affordable, else a proven bound.
fn construct_distance(
    name: ConstructionName,
    book: &CodeBook,
    floor: u32,
) -> Result<DistanceReport, Error> {
    let m = book.m();
    let affordable = match book {
        CodeBook::Cosets(c) => {
            let n = c.coset_count() as u64;
            let pairs = n * n.saturating_sub(1) / 2;
            if pairs == 0 {
                true
            } else if c.forms().is_some() {
                pairs <= 1 << 32 && m <= 7
            } else {
                pairs << m <= 1 << 30
            }
        }
        CodeBook::MaioranaMcFarland(c) => c.k() <= 2,
        _ => true,
    };
    if affordable {
        return book.min_distance();
    }
    if name == ConstructionName::Zrm2 {
        return Ok(DistanceReport {
            value: quadratic_coset_min_weight(m)?,
            metric: "lee".into(),
            bound: Bound::AtLeast,
            method: "minimum weight over every nonzero quadratic coset".into(),
        });
    }
    Ok(DistanceReport {
        value: floor,
        metric: "lee".into(),
        bound: Bound::AtLeast,
        method: "construction bound; too many coset pairs to scan".into(),
    })
}

#[derive(Serialize)]
struct Sidecar<'a> {
    #[serde(flatten)]
    meta: &'a CodeMeta,
    /// `words` or `coset-representatives`.
    contents: &'static str,
    lines: u64,
}

fn cmd_construct(cli: &Cli, name: ConstructionName, reps: bool) -> CmdResult {
    let m = require_m(cli)?;
    let out = require_out(cli)?;
    let t = cli.t.unwrap_or(1);
    if cli.t.is_some() && name != ConstructionName::Dg {
        return Err(usage("--t applies only to --name dg"));
    }
    let book = build(name, m, t)?;
    let lines = if reps {
        book.coset_count().unwrap_or_else(|| book.size())
    } else {
        book.size()
    };
    let lines: u128 = lines.try_into().unwrap_or(u128::MAX);
    let hint = if reps { "" } else { " (try --reps)" };
    check_output_size(lines, &format!("{name:?} at m={m}{hint}"))?;

    let floor = distance_floor(name, &book, t)?;
    let label = name
        .to_possible_value()
        .expect("named")
        .get_name()
        .to_owned();
    let mut meta = book.meta(&label, false)?;
    let dist = construct_distance(name, &book, floor)?;
    let distance_ok = dist.value >= floor;
    meta.min_distance = Some(dist.clone());
    let papr = meta.max_papr.clone().expect("computed");
    let papr_ok = papr.numerator == papr.denominator;

    let words: Box<dyn Iterator<Item = Word>> = if reps {
        book.representatives()
    } else {
        book.words()
    };
    let (count, digest) = save(out, book.alphabet(), m, words)?;
    let sidecar = Sidecar {
        meta: &meta,
        contents: if reps {
            "coset-representatives"
        } else {
            "words"
        },
        lines: count,
    };
    let mut json = serde_json::to_string_pretty(&sidecar).expect("serializable");
    json.push('\n');
    let meta_path = PathBuf::from(format!("{}.json", out.display()));
    let meta_digest = save_bytes(&meta_path, json.as_bytes())?;

    let mut report = RunReport::new(papr_ok && distance_ok);
    report.outputs = vec![digest, meta_digest];
    report.line(format!("construction  {label} (m={m})"));
    report.line(format!("size          {}", meta.size));
    if let Some(c) = &meta.coset_count {
        report.line(format!("cosets        {c}"));
    }
    report.line(format!("rate          {}", meta.rate_display));
    report.line(format!(
        "min distance  {} ({}, {})",
        report::show_distance(&dist),
        dist.metric,
        dist.method
    ));
    report.line(format!("max PAPR      {} ({})", papr.display, papr.method));
    report.line(format!("PAPR witness  {}", papr.witness));
    report.line(format!("wrote         {count} lines to {}", out.display()));
    if !papr_ok {
        report.line("FAIL: a word has PAPR above 1".to_string());
    }
    if !distance_ok {
        report.line(format!("FAIL: minimum distance below {floor}"));
    }
    report.results = json!({
        "meta": meta,
        "distance_floor": floor,
        "lines": count,
        "contents": sidecar.contents,
    });
    Ok(report)
}

#[derive(Serialize)]
struct FirstFailure {
    index: usize,
    word: String,
    detail: String,
}

#[derive(Serialize)]
struct CheckResult {
    check: Check,
    /// `pass`, `fail` or `not-applicable`.
    status: &'static str,
    words_checked: usize,
    first_failure: Option<FirstFailure>,
    note: Option<String>,
}

/// `Ok(None)` passes, `Ok(Some(detail))` fails.
fn check_word(check: Check, w: &Word) -> Result<Option<String>, Error> {
    Ok(match check {
        Check::Papr => {
            let p = papr(w);
            (!p.is_one()).then(|| format!("PAPR {p}"))
        }
        Check::Bent => (!is_bent(w)).then(|| "spectrum magnitudes are not all 2^(m/2)".into()),
        Check::SpectrumForm => match spectrum_form_check(w) {
            Ok(true) => None,
            Ok(false) => Some("a spectral value is off the expected axes".into()),
            Err(Error::NotBent) => Some("not bent".into()),
            Err(e) => return Err(e),
        },
        Check::DegreeBound => match degree_bound(w) {
            Ok(d) if d.holds() => None,
            Ok(d) => Some(format!(
                "deg a = {}, deg b = {}, bound {}",
                d.degree_a, d.degree_b, d.bound
            )),
            Err(Error::NotBent) => Some("not bent".into()),
            Err(e) => return Err(e),
        },
    })
}

fn not_applicable(check: Check, file: &WordFile) -> Option<String> {
    match check {
        Check::SpectrumForm | Check::DegreeBound if file.alphabet == Alphabet::Binary => {
            Some("quaternary words only".into())
        }
        Check::DegreeBound if file.m <= 2 => Some("needs m > 2".into()),
        _ => None,
    }
}

fn cmd_verify(cli: &Cli, checks: &[Check]) -> CmdResult {
    let (file, digest) = load(require_in(cli)?)?;
    let mut results = Vec::new();
    for &check in checks {
        if let Some(note) = not_applicable(check, &file) {
            results.push(CheckResult {
                check,
                status: "not-applicable",
                words_checked: 0,
                first_failure: None,
                note: Some(note),
            });
            continue;
        }
        let mut first_failure = None;
        let mut checked = 0;
        for (index, w) in file.words.iter().enumerate() {
            checked += 1;
            if let Some(detail) = check_word(check, w)? {
                first_failure = Some(FirstFailure {
                    index,
                    word: w.to_string(),
                    detail,
                });
                break;
            }
        }
        results.push(CheckResult {
            check,
            status: if first_failure.is_some() {
                "fail"
            } else {
                "pass"
            },
            words_checked: checked,
            first_failure,
            note: None,
        });
    }
    let passed = results.iter().all(|r| r.status != "fail");
    let mut report = RunReport::new(passed);
    report.inputs.push(digest);
    report.line(format!(
        "{} {} words, m={}",
        file.words.len(),
        match file.alphabet {
            Alphabet::Binary => "binary",
            Alphabet::Quaternary => "quaternary",
        },
        file.m
    ));
    for r in &results {
        let name = r
            .check
            .to_possible_value()
            .expect("named")
            .get_name()
            .to_owned();
        let mut line = format!("{:<14}{}", name, r.status.to_uppercase());
        if let Some(f) = &r.first_failure {
            line += &format!(" at word {}: {} [{}]", f.index, f.detail, f.word);
        }
        if let Some(n) = &r.note {
            line += &format!(" ({n})");
        }
        report.line(line);
    }
    report.results = json!({ "alphabet": file.alphabet, "m": file.m, "words": file.words.len(), "checks": results });
    Ok(report)
}

fn cmd_table1(cli: &Cli, binary_ca: Option<&Path>, samples: u64) -> CmdResult {
    let m = require_m(cli)?;
    let mut inputs = Vec::new();
    let binary = match binary_ca {
        Some(path) => {
            let (file, digest) = load(path)?;
            inputs.push(digest);
            if file.alphabet != Alphabet::Binary {
                return Err(usage("--binary-ca needs a binary word file (h=1)"));
            }
            Some(file.words)
        }
        None => None,
    };
    let table = table1(
        m,
        &Table1Options {
            seed: cli.seed,
            samples,
            binary_ca: binary,
        },
    )?;
    let mut report = RunReport::new(table.all_pass());
    report.inputs = inputs;
    report.line(format!("m={m}, seed={}", cli.seed));
    for row in &table.rows {
        let got = match (&row.rate, &row.distance) {
            (Some(r), Some(d)) => format!("{r} : {}", report::show_distance(d)),
            _ => "-".into(),
        };
        let expected = format!("{}:{}", row.expected_rate, row.expected_distance);
        report.line(format!(
            "{:<22} expected {:<9} got {:<12} {}",
            row.status.to_string(),
            expected,
            got,
            row.construction
        ));
        if row.status != RowStatus::Pass
            || row
                .distance
                .as_ref()
                .is_some_and(|d| d.bound == Bound::AtLeast)
        {
            let method = row
                .distance
                .as_ref()
                .map(|d| d.method.as_str())
                .unwrap_or(&row.note);
            report.line(format!("    {method}"));
        }
    }
    report.results = serde_json::to_value(&table).expect("serializable");
    Ok(report)
}

fn cmd_lift(cli: &Cli, rule: LiftRule, in2: Option<&Path>) -> CmdResult {
    let out = require_out(cli)?;
    let (first, d1) = load(require_in(cli)?)?;
    let mut inputs = vec![d1];
    if first.alphabet != Alphabet::Binary {
        return Err(usage("lift needs binary input words (h=1)"));
    }
    let second = match in2 {
        Some(_) if rule == LiftRule::GrayPreimage => {
            return Err(usage("--in2 does not apply to --rule gray-preimage"))
        }
        Some(path) => {
            let (f, d) = load(path)?;
            inputs.push(d);
            if f.alphabet != Alphabet::Binary || f.m != first.m {
                return Err(usage("--in and --in2 need binary words of the same length"));
            }
            f.words
        }
        None => first.words.clone(),
    };
    let a = &first.words;
    let lifted: Vec<Word> = match rule {
        LiftRule::GrayPreimage => a.iter().map(lift_gray_preimage).collect::<Result<_, _>>()?,
        LiftRule::Even | LiftRule::OddOffset => {
            let per_pair = if rule == LiftRule::OddOffset { 2 } else { 1 };
            check_output_size((a.len() * second.len() * per_pair) as u128, "lifted code")?;
            let mut v = Vec::with_capacity(a.len() * second.len() * per_pair);
            for x in a {
                for y in &second {
                    if rule == LiftRule::Even {
                        v.push(lift_even(x, y)?);
                    } else {
                        v.push(lift_odd_offset(x, y, false)?);
                        v.push(lift_odd_offset(x, y, true)?);
                    }
                }
            }
            v
        }
    };
    let out_m = match rule {
        LiftRule::GrayPreimage => first.m - 1,
        LiftRule::Even => first.m,
        LiftRule::OddOffset => first.m + 1,
    };
    let inputs_bent = a.iter().chain(&second).all(is_bent);
    let outputs_bent = lifted.iter().all(is_bent);
    let passed = !inputs_bent || outputs_bent;
    let (count, digest) = save(out, Alphabet::Quaternary, out_m, lifted)?;
    let rule_name = rule
        .to_possible_value()
        .expect("named")
        .get_name()
        .to_owned();
    let mut report = RunReport::new(passed);
    report.inputs = inputs;
    report.outputs.push(digest);
    report.line(format!("rule                  {rule_name}"));
    report.line(format!(
        "wrote                 {count} quaternary words, m={out_m}"
    ));
    report.line(format!("inputs bent           {inputs_bent}"));
    report.line(format!("outputs bent          {outputs_bent}"));
    if !passed {
        report.line("FAIL: bent inputs gave a word that is not bent".to_string());
    }
    report.results = json!({
        "rule": rule,
        "words": count,
        "m": out_m,
        "inputs_bent": inputs_bent,
        "outputs_bent": outputs_bent,
    });
    Ok(report)
}

fn cmd_gray(cli: &Cli, inverse: bool) -> CmdResult {
    let out = require_out(cli)?;
    let (file, digest) = load(require_in(cli)?)?;
    let (expected, alphabet, out_m) = if inverse {
        if file.m == 0 {
            return Err(usage("inverse Gray map needs m >= 1"));
        }
        (Alphabet::Binary, Alphabet::Quaternary, file.m - 1)
    } else {
        (Alphabet::Quaternary, Alphabet::Binary, file.m + 1)
    };
    if file.alphabet != expected {
        return Err(usage(format!(
            "expected {} input words",
            if inverse { "binary" } else { "quaternary" }
        )));
    }
    let mapped: Vec<Word> = file
        .words
        .iter()
        .map(|w| if inverse { gray_inverse(w) } else { gray(w) })
        .collect::<Result<_, _>>()?;
    let (count, out_digest) = save(out, alphabet, out_m, mapped)?;
    let mut report = RunReport::new(true);
    report.inputs.push(digest);
    report.outputs.push(out_digest);
    report.line(format!("wrote {count} words, m={out_m}"));
    report.results = json!({ "words": count, "m": out_m, "inverse": inverse });
    Ok(report)
}

fn cmd_dist(cli: &Cli) -> CmdResult {
    let (file, digest) = load(require_in(cli)?)?;
    let d = min_distance_exhaustive(&file.words)?;
    let metric = match file.alphabet {
        Alphabet::Binary => "hamming",
        Alphabet::Quaternary => "lee",
    };
    // a pair attaining the minimum, for small files
    let mut witness = None;
    if file.words.len() <= 1 << 12 {
        'outer: for (i, u) in file.words.iter().enumerate() {
            for v in &file.words[i + 1..] {
                if u != v && distance(u, v)? == d {
                    witness = Some([u.to_string(), v.to_string()]);
                    break 'outer;
                }
            }
        }
    }
    let mut report = RunReport::new(true);
    report.inputs.push(digest);
    report.line(format!("min {metric} distance  {d}"));
    if let Some([u, v]) = &witness {
        report.line(format!("attained by          {u}"));
        report.line(format!("                     {v}"));
    }
    report.results = json!({ "metric": metric, "min_distance": d, "witness": witness });
    Ok(report)
}

fn cmd_gen(cli: &Cli, family: Family, r: u32) -> CmdResult {
    let m = require_m(cli)?;
    let out = require_out(cli)?;
    let code = LinearCode::new(family, r, m)?;
    if code.log2_size() > 22 {
        return Err(usage(format!(
            "{family}({r},{m}) has 2^{} words, above the limit of {MAX_OUTPUT_WORDS}",
            code.log2_size()
        )));
    }
    let (count, digest) = save(out, code.alphabet(), m, code.words())?;
    let mut report = RunReport::new(true);
    report.outputs.push(digest);
    report.line(format!(
        "{family}({r},{m}): {count} words, 2^{}",
        code.log2_size()
    ));
    let d = code.min_distance_formula();
    report.line(format!(
        "min distance  {}",
        d.map_or("- (single word)".into(), |d| d.to_string())
    ));
    report.results = json!({
        "family": family,
        "r": r,
        "m": m,
        "words": count,
        "min_distance": d,
    });
    Ok(report)
}
