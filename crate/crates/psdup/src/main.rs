//! Command-line front end: every table, decider and verifier of the library
//! behind stable machine-readable output.
//!
//! Conventions: table output is one line per position, `index<TAB>value`,
//! 1-based, with sentinel values printed literally and announced in a `#`
//! header comment; infinite distances print as `inf`. Word arguments are
//! taken literally, `-` reads the word from standard input and `@PATH` from
//! a file; `--alphabet ints` switches to space-separated integer symbols.
//!
//! Exit codes: 0 success, 1 negative decision (non-member, no ancestor,
//! infinite distance, ...), 2 usage or input error, 3 budget exceeded.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use psdup::ancestors::{
    bpsd_ancestor_coords, bpsd_ancestor_count, bpsd_longest_primitive_ancestor,
    bpsd_shortest_ancestor, common_ancestor, is_primitive_factor, psd_ancestor_coords,
    psd_membership, psdk_membership, pssc_ancestor_profile, pssc_membership, AncestorQuery,
    PrimTables,
};
use psdup::distance::{bpsd_distance, pssc_distance, INF};
use psdup::gapped::{lpal_lrep, lpf_bounded, lpf_func, lprf_bounded, lprf_func, GappedKind};
use psdup::index::build_index;
use psdup::lang::{closure_automaton, is_finite, language_distance, minimal_generator, Dfa};
use psdup::ops::{self, Family, Op};
use psdup::seq::{generate, verify_omega, SequenceName};
use psdup::squarefree::{
    count_pssf, enumerate_pssf, factor_into_runs, factor_into_squares, longest_pssf,
    longest_primitive_pssc_ancestor, max_square_factorization, FactorTag, Factorization, PsfKind,
};
use psdup::squares::{compute_runs, compute_square_tables};
use psdup::{Error, Word};

/// Default cap on the word length accepted by the brute-force twins; the
/// environment variable `PSDUP_ORACLE_MAX_LEN` overrides it.
const ORACLE_LEN_DEFAULT: usize = 64;

// ---------------------------------------------------------------------------
// Exit plumbing.
// ---------------------------------------------------------------------------

/// A command that ran to completion: either affirmatively or with a negative
/// decision (exit code 1).
enum Outcome {
    Success,
    Negative,
}

/// A command that failed: usage/input errors exit 2, budget overruns exit 3.
struct Fail {
    code: u8,
    msg: String,
}

type CliResult = Result<Outcome, Fail>;

fn usage(msg: impl Into<String>) -> Fail {
    Fail {
        code: 2,
        msg: msg.into(),
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        let code = match e {
            Error::BudgetExceeded(_) => 3,
            _ => 2,
        };
        Fail {
            code,
            msg: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    match run(&Cli::parse().cmd, false) {
        Ok(Outcome::Success) => ExitCode::from(0),
        Ok(Outcome::Negative) => ExitCode::from(1),
        Err(f) => {
            eprintln!("psdup: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

// ---------------------------------------------------------------------------
// Argument surface.
// ---------------------------------------------------------------------------

#[derive(Parser)]
#[command(name = "psdup", version, about = "Prefix-suffix duplication and square completion")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a per-position table of the word.
    Tables(TablesArgs),
    /// Decide whether `w` is derivable from `x` under the operation.
    Member(MemberArgs),
    /// Minimum number of operation steps turning `x` into `w`.
    Dist(DistArgs),
    /// Ancestors of the word under the operation.
    Anc(AncArgs),
    /// A common ancestor of two words.
    CommonAnc(CommonAncArgs),
    /// Prefix/suffix-square-free factors of the word.
    Sqfree(SqfreeArgs),
    /// Factor the word into structured blocks.
    Factorize(FactorizeArgs),
    /// Regular-language operations for bounded duplication (DFA text files).
    #[command(subcommand)]
    Lang(LangCmd),
    /// Generate classical sequences and verify prefix chains.
    #[command(subcommand)]
    Seq(SeqCmd),
    /// Run the brute-force twin of a decision subcommand.
    #[command(subcommand)]
    Oracle(OracleCmd),
}

fn run(cmd: &Cmd, oracle: bool) -> CliResult {
    match cmd {
        Cmd::Tables(a) => run_tables(a),
        Cmd::Member(a) => run_member(a, oracle),
        Cmd::Dist(a) => run_dist(a, oracle),
        Cmd::Anc(a) => run_anc(a, oracle),
        Cmd::CommonAnc(a) => run_common_anc(a),
        Cmd::Sqfree(a) => run_sqfree(a),
        Cmd::Factorize(a) => run_factorize(a),
        Cmd::Lang(c) => run_lang(c),
        Cmd::Seq(c) => run_seq(c),
        Cmd::Oracle(c) => match c {
            OracleCmd::Member(a) => run_member(a, true),
            OracleCmd::Dist(a) => run_dist(a, true),
            OracleCmd::Anc(a) => run_anc(a, true),
        },
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlphabetMode {
    /// Each byte of the argument is one symbol.
    Bytes,
    /// The argument is space-separated integer symbols.
    Ints,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OpName {
    Pd,
    Sd,
    Psd,
    Psc,
    Ssc,
    Pssc,
}

impl OpName {
    fn family(self) -> Family {
        match self {
            OpName::Pd => Family::Pd,
            OpName::Sd => Family::Sd,
            OpName::Psd => Family::Psd,
            OpName::Psc => Family::Psc,
            OpName::Ssc => Family::Ssc,
            OpName::Pssc => Family::Pssc,
        }
    }
}

fn make_op(name: OpName, k: Option<usize>) -> Result<Op, Fail> {
    if k == Some(0) {
        return Err(usage("--k must be positive"));
    }
    Ok(Op::new(name.family(), k))
}

/// Resolves a word argument: literal text, `-` for stdin, `@PATH` for a file.
fn read_source(tok: &str) -> Result<String, Fail> {
    if tok == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("reading stdin: {e}")))?;
        Ok(s)
    } else if let Some(path) = tok.strip_prefix('@') {
        fs::read_to_string(path).map_err(|e| usage(format!("reading {path}: {e}")))
    } else {
        Ok(tok.to_string())
    }
}

fn parse_word(tok: &str, mode: AlphabetMode) -> Result<Word, Fail> {
    let text = read_source(tok)?;
    let text = text.trim();
    if text.is_empty() {
        return Err(usage("empty word"));
    }
    match mode {
        AlphabetMode::Bytes => Ok(Word::from_bytes(text.as_bytes())),
        AlphabetMode::Ints => {
            let syms: Result<Vec<u32>, Fail> = text
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| usage(format!("bad symbol: {t}"))))
                .collect();
            Ok(Word::from_symbols(syms?)?)
        }
    }
}

fn oracle_guard(n: usize) -> Result<(), Fail> {
    let cap = std::env::var("PSDUP_ORACLE_MAX_LEN")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(ORACLE_LEN_DEFAULT);
    if n > cap {
        return Err(Fail {
            code: 3,
            msg: format!(
                "word length {n} exceeds the brute-force budget {cap} \
                 (override with PSDUP_ORACLE_MAX_LEN)"
            ),
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// tables
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Table {
    Sa,
    Lcp,
    Runs,
    LeftRight,
    Sc,
    Minrightend,
    Maxsqend,
    Lpf,
    Lprf,
    Lpal,
    Lrep,
}

#[derive(Args)]
struct TablesArgs {
    #[arg(value_enum)]
    which: Table,
    /// The word; `-` reads stdin, `@PATH` reads a file.
    word: String,
    #[arg(long, value_enum, default_value_t = AlphabetMode::Bytes)]
    alphabet: AlphabetMode,
    /// Minimum gap for lpf/lprf (bounded regime).
    #[arg(long = "g")]
    g: Option<usize>,
    /// Strict gap upper bound for lpf/lprf (bounded regime).
    #[arg(long = "G")]
    big_g: Option<usize>,
    /// File of per-position gap bounds for lpf/lprf (function regime).
    #[arg(long)]
    gfile: Option<String>,
}

fn print_table(values: impl IntoIterator<Item = usize>) {
    for (i, v) in values.into_iter().enumerate() {
        println!("{}\t{}", i + 1, v);
    }
}

fn gap_arms(a: &TablesArgs, w: &Word, reversed: bool) -> Result<Vec<usize>, Fail> {
    let table = if let Some(path) = &a.gfile {
        if a.g.is_some() || a.big_g.is_some() {
            return Err(usage("--gfile excludes --g/--G"));
        }
        let text = fs::read_to_string(path).map_err(|e| usage(format!("reading {path}: {e}")))?;
        let g: Result<Vec<usize>, Fail> = text
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| usage(format!("bad gap bound: {t}"))))
            .collect();
        let g = g?;
        if g.len() != w.len() {
            return Err(usage(format!(
                "gap file holds {} bounds for a word of length {}",
                g.len(),
                w.len()
            )));
        }
        if reversed {
            lprf_func(w, &g)?
        } else {
            lpf_func(w, &g)?
        }
    } else {
        let (g, big_g) = match (a.g, a.big_g) {
            (Some(g), Some(big_g)) => (g, big_g),
            _ => return Err(usage("this table needs --g and --G, or --gfile")),
        };
        if reversed {
            lprf_bounded(w, g, big_g)?
        } else {
            lpf_bounded(w, g, big_g)?
        }
    };
    Ok((1..=w.len()).map(|i| table.arm(i)).collect())
}

fn run_tables(a: &TablesArgs) -> CliResult {
    let w = parse_word(&a.word, a.alphabet)?;
    let n = w.len();
    match a.which {
        Table::Sa => {
            let idx = build_index(&w)?;
            print_table(idx.sa().iter().map(|&s| s as usize));
        }
        Table::Lcp => {
            let idx = build_index(&w)?;
            println!("# line i: lcp of the suffixes of rank i-2 and i-1 (line 1 is 0)");
            print_table(idx.lcp_array().iter().map(|&v| v as usize));
        }
        Table::Runs => {
            println!("# start\tend\tperiod");
            for r in compute_runs(&w)? {
                println!("{}\t{}\t{}", r.i, r.j, r.p);
            }
        }
        Table::LeftRight => {
            let t = compute_square_tables(&w)?;
            println!("# index\tleft\tright; sentinel-left=0 sentinel-right={}", n + 1);
            for i in 1..=n {
                println!("{}\t{}\t{}", i, t.left[i], t.right[i]);
            }
        }
        Table::Sc => {
            let t = compute_square_tables(&w)?;
            print_table((1..=n).map(|i| t.sc[i]));
        }
        Table::Minrightend => {
            let t = compute_square_tables(&w)?;
            println!("# sentinel-none={}", n + 1);
            print_table((1..=n).map(|i| t.min_right_end[i]));
        }
        Table::Maxsqend => {
            let t = compute_square_tables(&w)?;
            println!("# sentinel-none=0");
            print_table((1..=n).map(|i| t.max_sq_end[i]));
        }
        Table::Lpf => print_table(gap_arms(a, &w, false)?),
        Table::Lprf => print_table(gap_arms(a, &w, true)?),
        Table::Lpal => {
            let t = lpal_lrep(&w, GappedKind::Palindrome)?;
            print_table((1..=n).map(|i| t.arm(i)));
        }
        Table::Lrep => {
            let t = lpal_lrep(&w, GappedKind::Repeat)?;
            print_table((1..=n).map(|i| t.arm(i)));
        }
    }
    Ok(Outcome::Success)
}

// ---------------------------------------------------------------------------
// member / dist
// ---------------------------------------------------------------------------

#[derive(Args)]
struct MemberArgs {
    #[arg(value_enum)]
    op: OpName,
    /// Bound on the duplicated block length.
    #[arg(long)]
    k: Option<usize>,
    /// The candidate ancestor; `-` reads stdin, `@PATH` reads a file.
    x: String,
    /// The derived word.
    w: String,
    #[arg(long, value_enum, default_value_t = AlphabetMode::Bytes)]
    alphabet: AlphabetMode,
}

fn run_member(a: &MemberArgs, oracle: bool) -> CliResult {
    let op = make_op(a.op, a.k)?;
    let x = parse_word(&a.x, a.alphabet)?;
    let w = parse_word(&a.w, a.alphabet)?;
    let yes = if oracle {
        oracle_guard(w.len())?;
        ops::oracle_member(op, &x, &w)
    } else {
        match (op.family, op.k) {
            (Family::Psd, Some(k)) => psdk_membership(&w, &x, k)?,
            (Family::Psd, None) => psd_membership(&w, &x)?,
            (Family::Pssc, _) => pssc_membership(&w, &x)?,
            _ => {
                oracle_guard(w.len())?;
                ops::oracle_member(op, &x, &w)
            }
        }
    };
    println!("{}", if yes { "yes" } else { "no" });
    Ok(if yes { Outcome::Success } else { Outcome::Negative })
}

#[derive(Args)]
struct DistArgs {
    #[arg(value_enum)]
    op: OpName,
    #[arg(long)]
    k: Option<usize>,
    /// Take `x` as the factor `w[I..=J]` instead of a separate word.
    #[arg(long, value_name = "I:J")]
    x_range: Option<String>,
    /// The source word `x`, then the target `w`; with --x-range only `w`.
    words: Vec<String>,
    #[arg(long, value_enum, default_value_t = AlphabetMode::Bytes)]
    alphabet: AlphabetMode,
}

fn run_dist(a: &DistArgs, oracle: bool) -> CliResult {
    let op = make_op(a.op, a.k)?;
    let (x, w) = match &a.x_range {
        Some(range) => {
            let [w_tok] = &a.words[..] else {
                return Err(usage("--x-range takes exactly one word argument"));
            };
            let w = parse_word(w_tok, a.alphabet)?;
            let (i, j) = range
                .split_once(':')
                .and_then(|(i, j)| Some((i.parse().ok()?, j.parse().ok()?)))
                .ok_or_else(|| usage("--x-range wants I:J"))?;
            w.check_range(i, j)?;
            (w.factor(i, j), w)
        }
        None => {
            let [x_tok, w_tok] = &a.words[..] else {
                return Err(usage("expected the two words <x> <w>"));
            };
            (parse_word(x_tok, a.alphabet)?, parse_word(w_tok, a.alphabet)?)
        }
    };
    let d: Option<u64> = if oracle {
        oracle_guard(w.len())?;
        ops::oracle_distance(op, &x, &w).map(|d| d as u64)
    } else {
        match (op.family, op.k) {
            (Family::Psd, Some(k)) => match bpsd_distance(&x, &w, k)? {
                INF => None,
                d => Some(d as u64),
            },
            (Family::Pssc, _) => match pssc_distance(&x, &w)? {
                INF => None,
                d => Some(d as u64),
            },
            _ => {
                oracle_guard(w.len())?;
                ops::oracle_distance(op, &x, &w).map(|d| d as u64)
            }
        }
    };
    match d {
        Some(d) => {
            println!("{d}");
            Ok(Outcome::Success)
        }
        None => {
            println!("inf");
            Ok(Outcome::Negative)
        }
    }
}

// ---------------------------------------------------------------------------
// anc / common-anc
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AncWhat {
    All,
    Count,
    Shortest,
    LongestPrimitive,
}

#[derive(Args)]
struct AncArgs {
    #[arg(value_enum)]
    op: OpName,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum)]
    what: AncWhat,
    word: String,
    #[arg(long, value_enum, default_value_t = AlphabetMode::Bytes)]
    alphabet: AlphabetMode,
}

fn print_coord(c: (usize, usize)) {
    println!("{}\t{}", c.0, c.1);
}

fn answer_from_coords(
    w: &Word,
    coords: &[(usize, usize)],
    what: AncWhat,
    primitive: impl Fn(usize, usize) -> bool,
) -> CliResult {
    match what {
        AncWhat::All => {
            for &c in coords {
                print_coord(c);
            }
        }
        AncWhat::Count => println!("{}", coords.len()),
        AncWhat::Shortest => {
            let best = coords.iter().min_by_key(|&&(i, j)| (j - i, i));
            match best {
                Some(&c) => print_coord(c),
                None => {
                    println!("none");
                    return Ok(Outcome::Negative);
                }
            }
        }
        AncWhat::LongestPrimitive => {
            let best = coords
                .iter()
                .filter(|&&(i, j)| primitive(i, j))
                .max_by_key(|&&(i, j)| (j - i, std::cmp::Reverse(i)));
            match best {
                Some(&c) => print_coord(c),
                None => {
                    println!("none");
                    return Ok(Outcome::Negative);
                }
            }
        }
    }
    let _ = w;
    Ok(Outcome::Success)
}

fn run_anc(a: &AncArgs, oracle: bool) -> CliResult {
    let op = make_op(a.op, a.k)?;
    let w = parse_word(&a.word, a.alphabet)?;
    if oracle {
        oracle_guard(w.len())?;
        let coords: Vec<(usize, usize)> = ops::oracle_ancestor_coords(op, &w).into_iter().collect();
        return answer_from_coords(&w, &coords, a.what, |i, j| {
            ops::predecessors(op, &w.factor(i, j)).is_empty()
        });
    }
    match (op.family, op.k) {
        (Family::Psd, Some(k)) => match a.what {
            AncWhat::All => {
                for c in bpsd_ancestor_coords(&w, k)? {
                    print_coord(c);
                }
            }
            AncWhat::Count => println!("{}", bpsd_ancestor_count(&w, k)?),
            AncWhat::Shortest => print_coord(bpsd_shortest_ancestor(&w, k)?),
            AncWhat::LongestPrimitive => match bpsd_longest_primitive_ancestor(&w, k)? {
                Some(c) => print_coord(c),
                None => {
                    println!("none");
                    return Ok(Outcome::Negative);
                }
            },
        },
        (Family::Psd, None) => {
            let coords = psd_ancestor_coords(&w)?;
            let pt = PrimTables::build(&w, None)?;
            return answer_from_coords(&w, &coords, a.what, |i, j| {
                is_primitive_factor(&pt, i, j, Family::Psd)
            });
        }
        (Family::Pssc, _) => match a.what {
            AncWhat::All => {
                let p = pssc_ancestor_profile(&w)?;
                println!("# minimal ancestor end per start; sentinel-none={}", w.len() + 1);
                print_table((1..=w.len()).map(|i| p.j[i]));
            }
            AncWhat::Count => println!("{}", pssc_ancestor_profile(&w)?.count),
            AncWhat::Shortest => print_coord(pssc_ancestor_profile(&w)?.shortest),
            AncWhat::LongestPrimitive => print_coord(longest_primitive_pssc_ancestor(&w)?),
        },
        _ => {
            oracle_guard(w.len())?;
            let coords: Vec<(usize, usize)> =
                ops::oracle_ancestor_coords(op, &w).into_iter().collect();
            return answer_from_coords(&w, &coords, a.what, |i, j| {
                ops::predecessors(op, &w.factor(i, j)).is_empty()
            });
        }
    }
    Ok(Outcome::Success)
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CommonWhat {
    Any,
    Shortest,
    Longest,
}

#[derive(Args)]
struct CommonAncArgs {
    #[arg(value_enum)]
    op: OpName,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = CommonWhat::Any)]
    what: CommonWhat,
    x: String,
    y: String,
    #[arg(long, value_enum, default_value_t = AlphabetMode::Bytes)]
    alphabet: AlphabetMode,
}

fn run_common_anc(a: &CommonAncArgs) -> CliResult {
    let op = make_op(a.op, a.k)?;
    let x = parse_word(&a.x, a.alphabet)?;
    let y = parse_word(&a.y, a.alphabet)?;
    let what = match a.what {
        CommonWhat::Any => AncestorQuery::Any,
        CommonWhat::Shortest => AncestorQuery::Shortest,
        CommonWhat::Longest => AncestorQuery::Longest,
    };
    match common_ancestor(&x, &y, op, what)? {
        Some(z) => {
            println!("{}", z.display());
            Ok(Outcome::Success)
        }
        None => {
            println!("none");
            Ok(Outcome::Negative)
        }
    }
}

// ---------------------------------------------------------------------------
// sqfree / factorize
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SqfreeWhat {
    Enum,
    Count,
    Longest,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SqfreeKind {
    Prefix,
    Suffix,
    Both,
}

#[derive(Args)]
struct SqfreeArgs {
    #[arg(long, value_enum)]
    what: SqfreeWhat,
    /// Which end(s) must be square-free.
    #[arg(long, value_enum, default_value_t = SqfreeKind::Both)]
    kind: SqfreeKind,
    word: String,
    #[arg(long, value_enum, default_value_t = AlphabetMode::Bytes)]
    alphabet: AlphabetMode,
}

fn run_sqfree(a: &SqfreeArgs) -> CliResult {
    let w = parse_word(&a.word, a.alphabet)?;
    let kind = match a.kind {
        SqfreeKind::Prefix => PsfKind::Prefix,
        SqfreeKind::Suffix => PsfKind::Suffix,
        SqfreeKind::Both => PsfKind::Both,
    };
    match a.what {
        SqfreeWhat::Enum => {
            for (i, j) in enumerate_pssf(&w, kind)? {
                println!("{i}\t{j}");
            }
        }
        SqfreeWhat::Count => {
            if kind != PsfKind::Both {
                return Err(usage("count is defined for --kind both"));
            }
            println!("{}", count_pssf(&w)?);
        }
        SqfreeWhat::Longest => {
            if kind != PsfKind::Both {
                return Err(usage("longest is defined for --kind both"));
            }
            let (i, j) = longest_pssf(&w)?;
            println!("{i}\t{j}");
        }
    }
    Ok(Outcome::Success)
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FactorizeInto {
    Squares,
    Runs,
    MaxSquares,
}

#[derive(Args)]
struct FactorizeArgs {
    #[arg(long, value_enum)]
    into: FactorizeInto,
    word: String,
    #[arg(long, value_enum, default_value_t = AlphabetMode::Bytes)]
    alphabet: AlphabetMode,
}

fn print_cover(f: &Factorization, with_tags: bool) {
    for &(i, j, tag) in &f.factors {
        if with_tags {
            let t = match tag {
                FactorTag::Square => "square",
                FactorTag::Run => "run",
                FactorTag::Plain => "plain",
            };
            println!("{i}\t{j}\t{t}");
        } else {
            println!("{i}\t{j}");
        }
    }
}

fn run_factorize(a: &FactorizeArgs) -> CliResult {
    let w = parse_word(&a.word, a.alphabet)?;
    let found = match a.into {
        FactorizeInto::Squares => factor_into_squares(&w)?,
        FactorizeInto::Runs => factor_into_runs(&w)?,
        FactorizeInto::MaxSquares => {
            let f = max_square_factorization(&w)?;
            println!("# squares={}", f.square_count());
            print_cover(&f, true);
            return Ok(Outcome::Success);
        }
    };
    match found {
        Some(f) => {
            print_cover(&f, false);
            Ok(Outcome::Success)
        }
        None => {
            println!("none");
            Ok(Outcome::Negative)
        }
    }
}

// ---------------------------------------------------------------------------
// lang / seq
// ---------------------------------------------------------------------------

#[derive(Subcommand)]
enum LangCmd {
    /// DFA of the bounded-duplication closure of a word, printed as text.
    Closure {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = OpName::Psd)]
        op: OpName,
        word: String,
        #[arg(long, value_enum, default_value_t = AlphabetMode::Bytes)]
        alphabet: AlphabetMode,
    },
    /// Minimal generator of a duplication-closed DFA language.
    Mingen {
        #[arg(long)]
        k: usize,
        /// DFA text file; `-` reads stdin.
        dfa: String,
    },
    /// Decide whether the DFA's language is finite.
    Finite { dfa: String },
    /// Bounded-duplication distance between two DFA languages.
    Dist {
        #[arg(long)]
        k: usize,
        dfa1: String,
        dfa2: String,
    },
}

fn read_dfa(path: &str) -> Result<Dfa, Fail> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("reading stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("reading {path}: {e}")))?
    };
    Ok(Dfa::parse(&text)?)
}

fn run_lang(cmd: &LangCmd) -> CliResult {
    match cmd {
        LangCmd::Closure {
            k,
            op,
            word,
            alphabet,
        } => {
            let w = parse_word(word, *alphabet)?;
            let d = closure_automaton(&w, *k, op.family())?;
            print!("{}", d.to_text());
            Ok(Outcome::Success)
        }
        LangCmd::Mingen { k, dfa } => {
            let d = read_dfa(dfa)?;
            match minimal_generator(&d, *k) {
                Ok(m) => {
                    print!("{}", m.to_text());
                    Ok(Outcome::Success)
                }
                Err(Error::NotDuplicationClosed) => {
                    println!("not duplication-closed");
                    Ok(Outcome::Negative)
                }
                Err(e) => Err(e.into()),
            }
        }
        LangCmd::Finite { dfa } => {
            let d = read_dfa(dfa)?;
            if is_finite(&d) {
                println!("finite");
                Ok(Outcome::Success)
            } else {
                println!("infinite");
                Ok(Outcome::Negative)
            }
        }
        LangCmd::Dist { k, dfa1, dfa2 } => {
            let d1 = read_dfa(dfa1)?;
            let d2 = read_dfa(dfa2)?;
            match language_distance(&d1, &d2, *k)? {
                INF => {
                    println!("inf");
                    Ok(Outcome::Negative)
                }
                d => {
                    println!("{d}");
                    Ok(Outcome::Success)
                }
            }
        }
    }
}

#[derive(Subcommand)]
enum SeqCmd {
    /// Print the length-N prefix of a named sequence.
    Gen {
        /// fibonacci | thue_morse | period_doubling | stewart
        name: String,
        n: usize,
    },
    /// Search for a chain of sequence prefixes under the operation, from a
    /// short seed to the target length; prints the chain lengths.
    Verify {
        #[arg(value_enum)]
        op: OpName,
        #[arg(long)]
        k: Option<usize>,
        name: String,
        target_len: usize,
    },
}

fn run_seq(cmd: &SeqCmd) -> CliResult {
    match cmd {
        SeqCmd::Gen { name, n } => {
            let w = generate(SequenceName::parse(name)?, *n)?;
            println!("{}", w.display());
            Ok(Outcome::Success)
        }
        SeqCmd::Verify {
            op,
            k,
            name,
            target_len,
        } => {
            let op = make_op(*op, *k)?;
            match verify_omega(op, SequenceName::parse(name)?, *target_len)? {
                Some(chain) => {
                    print_table(chain.lengths.iter().copied());
                    Ok(Outcome::Success)
                }
                None => {
                    println!("no chain");
                    Ok(Outcome::Negative)
                }
            }
        }
    }
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Brute-force membership by breadth-first closure search.
    Member(MemberArgs),
    /// Brute-force distance by breadth-first closure search.
    Dist(DistArgs),
    /// Brute-force ancestors by exhaustive step undoing.
    Anc(AncArgs),
}
