//! Classical binary sequences (Thue–Morse, Fibonacci, period doubling,
//! Stewart's choral sequence) and chain search over their prefixes: which
//! prefixes of a sequence can be reached from a short prefix by repeated
//! applications of a duplication or square-completion operation, and an
//! explicit witness chain when one exists.
//!
//! The search works on the prefix graph of a finite target prefix `w`: the
//! nodes are the lengths `1..=|w|`, and there is an edge `m -> m + g` exactly
//! when `w[1..m+g]` is obtainable from `w[1..m]` by one application of the
//! operation. Each edge is decided in constant time after preprocessing:
//! suffix steps reduce to LCP queries and to the table of longest squares
//! ending at each position, prefix steps to the periods of the squares that
//! are prefixes of `w`.

use crate::index::{build_index, TextIndex};
use crate::ops::{Family, Op};
use crate::squares::compute_boundary_tables;
use crate::{Error, Result, Word};

/// Largest target length accepted by [`verify_omega`]; the prefix graph scan
/// is quadratic in the generated prefix length.
pub const OMEGA_BUDGET: usize = 1 << 13;

/// How many of the shortest prefixes are admitted as chain starting points.
pub const SEED_LIMIT: usize = 8;

/// The supported sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceName {
    /// Fixed point of `0 -> 01`, `1 -> 0`.
    Fibonacci,
    /// Fixed point of `0 -> 01`, `1 -> 10`.
    ThueMorse,
    /// Fixed point of `0 -> 01`, `1 -> 00`.
    PeriodDoubling,
    /// Limit of `s -> s s s*` where `s*` flips the middle letter of `s`.
    Stewart,
}

impl SequenceName {
    pub fn parse(name: &str) -> Result<SequenceName> {
        match name.replace('-', "_").as_str() {
            "fibonacci" => Ok(SequenceName::Fibonacci),
            "thue_morse" => Ok(SequenceName::ThueMorse),
            "period_doubling" => Ok(SequenceName::PeriodDoubling),
            "stewart" => Ok(SequenceName::Stewart),
            other => Err(Error::InvalidInput(format!("unknown sequence: {other}"))),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            SequenceName::Fibonacci => "fibonacci",
            SequenceName::ThueMorse => "thue_morse",
            SequenceName::PeriodDoubling => "period_doubling",
            SequenceName::Stewart => "stewart",
        }
    }
}

const ZERO: u32 = '0' as u32;
const ONE: u32 = '1' as u32;

fn flip(s: u32) -> u32 {
    ZERO + ONE - s
}

/// The length-`n` prefix of the named sequence, over the symbols `0` and `1`.
pub fn generate(name: SequenceName, n: usize) -> Result<Word> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let mut syms: Vec<u32> = match name {
        SequenceName::ThueMorse => (0..n)
            .map(|i| if (i as u64).count_ones() % 2 == 0 { ZERO } else { ONE })
            .collect(),
        SequenceName::Fibonacci => {
            // f_k = f_{k-1} f_{k-2}; every f_k is a prefix of the next.
            let mut prev = vec![ZERO];
            let mut cur = vec![ZERO, ONE];
            while cur.len() < n {
                let next = [cur.as_slice(), prev.as_slice()].concat();
                prev = cur;
                cur = next;
            }
            cur
        }
        SequenceName::PeriodDoubling => {
            let mut cur = vec![ZERO];
            while cur.len() < n {
                cur = cur
                    .iter()
                    .flat_map(|&s| if s == ZERO { [ZERO, ONE] } else { [ZERO, ZERO] })
                    .collect();
            }
            cur
        }
        SequenceName::Stewart => {
            let mut cur = vec![ZERO];
            while cur.len() < n {
                let mut star = cur.clone();
                let mid = star.len() / 2;
                star[mid] = flip(star[mid]);
                let mut next = cur.clone();
                next.extend_from_slice(&cur);
                next.extend_from_slice(&star);
                cur = next;
            }
            cur
        }
    };
    syms.truncate(n);
    Ok(Word::from(syms))
}

/// Constant-time edge tests for the prefix graph of one fixed word.
struct EdgeTester {
    idx: TextIndex,
    /// `max_sq_end[i]`: length of the longest square ending at `i` (0 if
    /// none); only populated for the square-completion families.
    max_sq_end: Vec<usize>,
    /// Sorted periods `p` such that `w[1..2p]` is a square; only populated
    /// for the prefix-completion families.
    front_periods: Vec<usize>,
}

impl EdgeTester {
    fn new(op: Op, w: &Word) -> Result<EdgeTester> {
        let idx = build_index(w)?;
        let max_sq_end = match op.family {
            Family::Ssc | Family::Pssc => compute_boundary_tables(w)?.2,
            _ => Vec::new(),
        };
        let front_periods = match op.family {
            Family::Psc | Family::Pssc => (1..=w.len() / 2)
                .filter(|&p| idx.lcp(1, p + 1) >= p)
                .collect(),
            _ => Vec::new(),
        };
        Ok(EdgeTester {
            idx,
            max_sq_end,
            front_periods,
        })
    }

    /// `w[1..m]` followed by `w[g+1..m+g]` equals `w[1..m+g]`, i.e. the
    /// extended prefix has period `g`; this is the shape of every prefix
    /// step, since the new word must both start with the added block and end
    /// with the old prefix.
    fn prefix_periodic(&self, m: usize, g: usize) -> bool {
        self.idx.lcp(1, g + 1) >= m
    }

    /// One step of `op` turns `w[1..m]` into `w[1..m+g]`.
    fn has_edge(&self, op: Op, m: usize, g: usize) -> bool {
        let e = m + g;
        let within_bound = op.k.map_or(true, |k| g <= k);
        let pd = || g <= m && within_bound && self.prefix_periodic(m, g);
        let sd = || g <= m && within_bound && self.idx.lcp(m - g + 1, m + 1) >= g;
        // A suffix completion appending `g` symbols exists iff some square of
        // period `>= g` ends at `m + g` (the square is `(yx)^2` with
        // `|x| = g`; its source `yxy` must lie inside the old prefix, which
        // is exactly the square fitting inside `w[1..m+g]`).
        let ssc = || self.max_sq_end[e] >= 2 * g;
        // A prefix completion prepending `g` symbols needs a square prefix
        // `(xy)^2` of the extended word with `|x| = g <= period <= (m+g)/2`,
        // and the extended word must still end with the old prefix.
        let psc = || {
            if !self.prefix_periodic(m, g) {
                return false;
            }
            let at = self.front_periods.partition_point(|&p| p < g);
            at < self.front_periods.len() && 2 * self.front_periods[at] <= e
        };
        match op.family {
            Family::Pd => pd(),
            Family::Sd => sd(),
            Family::Psd => sd() || pd(),
            Family::Ssc => ssc(),
            Family::Psc => psc(),
            Family::Pssc => ssc() || psc(),
        }
    }
}

/// Which prefix lengths of a word are reachable from a seed set under one
/// operation, with parent pointers for chain recovery.
pub struct PrefixReach {
    reach: Vec<bool>,
    parent: Vec<usize>,
}

impl PrefixReach {
    pub fn is_reached(&self, len: usize) -> bool {
        len < self.reach.len() && self.reach[len]
    }

    /// The longest reached prefix length.
    pub fn max_reached(&self) -> usize {
        (1..self.reach.len()).rev().find(|&m| self.reach[m]).unwrap_or(0)
    }

    /// The reached lengths on the chain ending at `len` (seed first), or
    /// `None` if `len` was not reached.
    pub fn chain_to(&self, len: usize) -> Option<Vec<usize>> {
        if !self.is_reached(len) {
            return None;
        }
        let mut chain = vec![len];
        let mut at = len;
        while self.parent[at] != 0 {
            at = self.parent[at];
            chain.push(at);
        }
        chain.reverse();
        Some(chain)
    }
}

/// Marks every prefix length of `w` reachable from the seed lengths by
/// repeated applications of `op`, where each intermediate word must again be
/// a prefix of `w`. Runs in `O(|w|^2)` edge tests, each `O(1)`.
pub fn prefix_reachability(op: Op, w: &Word, seeds: &[usize]) -> Result<PrefixReach> {
    let l = w.len();
    if l == 0 {
        return Err(Error::EmptyInput);
    }
    if l > 2 * OMEGA_BUDGET {
        return Err(Error::BudgetExceeded("prefix reachability"));
    }
    let tester = EdgeTester::new(op, w)?;
    let mut reach = vec![false; l + 1];
    let mut parent = vec![0usize; l + 1];
    for &s in seeds {
        if s == 0 || s > l {
            return Err(Error::InvalidInput(format!(
                "seed length {s} outside 1..={l}"
            )));
        }
        reach[s] = true;
    }
    for m in 1..=l {
        if !reach[m] {
            continue;
        }
        // Every operation at most doubles the length, and the added block is
        // sourced inside the old word, so g <= m always.
        for g in 1..=m.min(l - m) {
            if !reach[m + g] && tester.has_edge(op, m, g) {
                reach[m + g] = true;
                parent[m + g] = m;
            }
        }
    }
    Ok(PrefixReach { reach, parent })
}

/// A witness chain of prefixes of a sequence, each obtained from the
/// previous one by one application of the operation.
pub struct OmegaChain {
    pub op: Op,
    pub name: SequenceName,
    /// The generated prefix the chain lives in.
    pub prefix: Word,
    /// The chain as prefix lengths, increasing; the first entry is a seed of
    /// length at most [`SEED_LIMIT`].
    pub lengths: Vec<usize>,
}

impl OmegaChain {
    /// The chain as explicit words.
    pub fn words(&self) -> Vec<Word> {
        self.lengths.iter().map(|&m| self.prefix.factor(1, m)).collect()
    }
}

/// Searches for a chain of prefixes of the named sequence under `op`,
/// starting from a prefix of length at most [`SEED_LIMIT`] and reaching
/// length at least `target_len`. Returns `None` when no such chain exists
/// within the generated prefix (of length `2 * target_len`, so that the last
/// step may overshoot the target).
pub fn verify_omega(op: Op, name: SequenceName, target_len: usize) -> Result<Option<OmegaChain>> {
    if target_len == 0 {
        return Err(Error::EmptyInput);
    }
    if target_len > OMEGA_BUDGET {
        return Err(Error::BudgetExceeded("omega verification"));
    }
    let prefix = generate(name, 2 * target_len)?;
    let seeds: Vec<usize> = (1..=SEED_LIMIT.min(target_len)).collect();
    let r = prefix_reachability(op, &prefix, &seeds)?;
    for e in target_len..=prefix.len() {
        if r.is_reached(e) {
            let lengths = r.chain_to(e).expect("reached length has a chain");
            return Ok(Some(OmegaChain {
                op,
                name,
                prefix,
                lengths,
            }));
        }
    }
    Ok(None)
}

/// The Thue–Morse prefix-duplication ceiling: starting from any prefix of
/// the length-`2^n` prefix, chains of Thue–Morse prefixes under unbounded
/// prefix/suffix duplication never pass length `2^(n+1) + 2^(n-1)`. Returns
/// `(bound, longest reached length)`; the scan covers twice the bound, which
/// is enough to catch any violating step out of an in-bound length.
pub fn thue_morse_psd_limit(n: u32) -> Result<(usize, usize)> {
    if n == 0 || n > 12 {
        return Err(Error::InvalidInput(format!(
            "prefix exponent {n} outside 1..=12"
        )));
    }
    let bound = (1usize << (n + 1)) + (1usize << (n - 1));
    let prefix = generate(SequenceName::ThueMorse, 2 * bound)?;
    let seeds: Vec<usize> = (1..=(1usize << n)).collect();
    let r = prefix_reachability(Op::psd(), &prefix, &seeds)?;
    Ok((bound, r.max_reached()))
}
