//! Longest previous gapped factor and gapped palindrome tables.
//!
//! A *gapped repeat* at position `i` is a pair `(u, v)` with `uv` a suffix of
//! `w[1..i-1]` and `u` a prefix of `w[i..n]`; a *gapped palindrome* has
//! `u^R v` as the suffix instead. The tables report, per position, the
//! longest arm `|u|` under one of three gap regimes:
//!
//! * bounded: `g <= |v| < G` ([`lprf_bounded`], [`lpf_bounded`]);
//! * per-position lower bound: `g(i) <= |v|` ([`lprf_func`], [`lpf_func`]);
//! * long-armed: `|v| <= |u|` ([`lpal_lrep`]).
//!
//! Supporting structures: the leftmost-maximizer array `L` ([`l_array`]) whose
//! chains carry the optima of the per-position regime, and the exact sets of
//! maximal long-armed palindromes / repeats ([`maximal_long_armed`]) that
//! seed the weighted-interval cover behind [`lpal_lrep`].

use crate::index::{build_bidi_index, build_dbf, build_index, Rmq, TextIndex};
use crate::intervals::{cover_extremum, CoverMode, WeightedInterval};
use crate::squares::compute_center_tables;
use crate::word::Word;
use crate::{Error, Result};
use std::collections::BTreeSet;

/// Position cap for the quadratic maximal-structure scan.
pub const QUADRATIC_BUDGET: usize = 1 << 13;

/// Gap constraint under which a [`GapTable`] was built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GapRegime {
    /// `lo <= |v| < hi`.
    Bounded { lo: usize, hi: usize },
    /// `g[i] <= |v|`, one lower bound per position (1-based array).
    Func(Vec<usize>),
    /// `|v| <= |u|`.
    LongArmed,
}

/// Gapped palindromes (`u^R v u`) or gapped repeats (`u v u`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GappedKind {
    Palindrome,
    Repeat,
}

/// Longest-arm table: `arms[i]` is the longest `|u|` admissible at position
/// `i` under `regime` (0 when none exists). Index 0 is unused padding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapTable {
    pub arms: Vec<usize>,
    pub regime: GapRegime,
}

impl GapTable {
    /// The arm length at 1-based position `i`.
    pub fn arm(&self, i: usize) -> usize {
        self.arms[i]
    }
}

/// `l[i]` is the leftmost position `j < i` maximizing `LCP(w[j..n], w[i..n])`
/// (0 when `i = 1`). Index 0 is unused padding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LArray {
    pub l: Vec<usize>,
}

impl LArray {
    /// The chain `L[i], L[L[i]], ...` down to the first position.
    pub fn chain(&self, mut i: usize) -> Vec<usize> {
        let mut out = Vec::new();
        while self.l[i] != 0 {
            i = self.l[i];
            out.push(i);
        }
        out
    }
}

/// One maximal long-armed structure: arms `w[left..left+arm-1]` and
/// `w[right..right+arm-1]` (the left arm reversed for palindromes).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct LongArmedItem {
    pub left: usize,
    pub arm: usize,
    pub right: usize,
}

/// The set of maximal long-armed palindromes or repeats of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxLongArmed {
    pub kind: GappedKind,
    pub items: Vec<LongArmedItem>,
}

// ---------------------------------------------------------------------------
// Sliding-window nearest-rank maximization
// ---------------------------------------------------------------------------

/// Deletion-only nearest-rank neighbor structure over one candidate range.
///
/// Candidates are the positions `lo..=hi`, kept sorted by rank; a deleted
/// slot is skipped through path-compressed next/prev pointers, so a query
/// returns the two alive candidates whose ranks bracket the query rank.
struct NeighborList {
    base: usize,
    /// Candidate positions in rank order.
    by_rank: Vec<usize>,
    ranks: Vec<usize>,
    /// 1-based slot of each candidate in `by_rank`.
    slot: Vec<usize>,
    nxt: Vec<u32>,
    prv: Vec<u32>,
}

impl NeighborList {
    fn new(lo: usize, hi: usize, cand_rank: &dyn Fn(usize) -> usize) -> NeighborList {
        let mut pairs: Vec<(usize, usize)> = (lo..=hi).map(|j| (cand_rank(j), j)).collect();
        pairs.sort_unstable();
        let m = pairs.len();
        let mut slot = vec![0usize; m];
        for (s, &(_, j)) in pairs.iter().enumerate() {
            slot[j - lo] = s + 1;
        }
        NeighborList {
            base: lo,
            by_rank: pairs.iter().map(|&(_, j)| j).collect(),
            ranks: pairs.iter().map(|&(r, _)| r).collect(),
            slot,
            nxt: (0..=(m + 1) as u32).collect(),
            prv: (0..=(m + 1) as u32).collect(),
        }
    }

    fn next_alive(&mut self, i: usize) -> usize {
        let mut r = i;
        while self.nxt[r] as usize != r {
            r = self.nxt[r] as usize;
        }
        let mut c = i;
        while self.nxt[c] as usize != c {
            let t = self.nxt[c] as usize;
            self.nxt[c] = r as u32;
            c = t;
        }
        r
    }

    fn prev_alive(&mut self, i: usize) -> usize {
        let mut r = i;
        while self.prv[r] as usize != r {
            r = self.prv[r] as usize;
        }
        let mut c = i;
        while self.prv[c] as usize != c {
            let t = self.prv[c] as usize;
            self.prv[c] = r as u32;
            c = t;
        }
        r
    }

    fn delete(&mut self, pos: usize) {
        let s = self.slot[pos - self.base];
        self.nxt[s] = s as u32 + 1;
        self.prv[s] = s as u32 - 1;
    }

    /// The alive candidates with the largest rank `< qrank` and the smallest
    /// rank `> qrank`.
    fn query(&mut self, qrank: usize) -> (Option<usize>, Option<usize>) {
        let lt = self.ranks.partition_point(|&r| r < qrank);
        let l = self.prev_alive(lt);
        let r = self.next_alive(lt + 1);
        (
            (l != 0).then(|| self.by_rank[l - 1]),
            (r != self.ranks.len() + 1).then(|| self.by_rank[r - 1]),
        )
    }
}

/// For every `i in 1..=n`, the maximum of `lce(j, i)` over the candidates
/// `j` in the sliding window `[i - a_off, i - b_off]` (clamped to `[1, n]`;
/// `b_off >= 1` keeps `j < i`). Zero when the window is empty.
///
/// The positions are processed in blocks of the window width: inside a
/// block, each window splits at the first window's right end into a
/// deletion-only left part (processed forward) and an insertion-only right
/// part (processed backward, turning insertions into deletions), so both
/// parts run on [`NeighborList`]s. The LCE of the query with any candidate
/// set is maximized at the set's nearest-rank neighbors.
fn sliding_best(
    n: usize,
    a_off: usize,
    b_off: usize,
    cand_rank: &dyn Fn(usize) -> usize,
    query_rank: &dyn Fn(usize) -> usize,
    lce: &dyn Fn(usize, usize) -> usize,
) -> Vec<usize> {
    assert!(b_off >= 1 && a_off >= b_off);
    let width = (a_off - b_off + 1) as isize;
    let mut out = vec![0usize; n + 1];
    let mut s = 1usize;
    while s <= n {
        let e = (s + width as usize - 1).min(n);
        // Right end of the first window in the block: the split point.
        let cut = s as isize - b_off as isize;

        // Left parts [i - a_off, cut]: the left border advances with i.
        let lo = (s as isize - a_off as isize).max(1);
        let hi = cut.min(n as isize);
        if lo <= hi {
            let mut list = NeighborList::new(lo as usize, hi as usize, cand_rank);
            let mut deleted_upto = lo - 1;
            for i in s..=e {
                let first = i as isize - a_off as isize;
                while deleted_upto + 1 < first {
                    deleted_upto += 1;
                    list.delete(deleted_upto as usize);
                }
                let (a, b) = list.query(query_rank(i));
                for j in [a, b].into_iter().flatten() {
                    out[i] = out[i].max(lce(j, i));
                }
            }
        }

        // Right parts [cut + 1, i - b_off]: the right border recedes as i
        // decreases, so the backward sweep only deletes.
        let lo = (cut + 1).max(1);
        let hi = (e as isize - b_off as isize).min(n as isize);
        if lo <= hi {
            let mut list = NeighborList::new(lo as usize, hi as usize, cand_rank);
            let mut deleted_downto = hi + 1;
            for i in (s..=e).rev() {
                let last = i as isize - b_off as isize;
                while deleted_downto > lo && deleted_downto - 1 > last {
                    deleted_downto -= 1;
                    list.delete(deleted_downto as usize);
                }
                if last < lo {
                    continue;
                }
                let (a, b) = list.query(query_rank(i));
                for j in [a, b].into_iter().flatten() {
                    out[i] = out[i].max(lce(j, i));
                }
            }
        }

        s = e + 1;
    }
    out
}

// ---------------------------------------------------------------------------
// Bounded regime
// ---------------------------------------------------------------------------

fn check_bounds(n: usize, g: usize, big_g: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if g >= big_g || big_g > n {
        return Err(Error::InvalidInput(format!(
            "gap bounds must satisfy g < G <= n, got g={g}, G={big_g}, n={n}"
        )));
    }
    Ok(())
}

/// Longest previous reversed factor with bounded gap: `table[i]` is the
/// longest `|u|` with `u^R v` a suffix of `w[1..i-1]`, `u` a prefix of
/// `w[i..n]` and `g <= |v| < G`.
///
/// The end `j` of `u^R` determines the gap, so the answer at `i` is the best
/// LCE between the suffix at `i` and a reversed prefix ending in the window
/// `[i - G, i - g - 1]`; one sliding-window pass over the merged
/// suffix / reversed-prefix ranks computes all of them.
pub fn lprf_bounded(w: &Word, g: usize, big_g: usize) -> Result<GapTable> {
    let n = w.len();
    check_bounds(n, g, big_g)?;
    let bidi = build_bidi_index(w)?;
    let arms = sliding_best(
        n,
        big_g,
        g + 1,
        &|j| bidi.rank_rev(j),
        &|i| bidi.rank(i),
        &|j, i| bidi.lcp_suffix_revprefix(i, j),
    );
    Ok(GapTable {
        arms,
        regime: GapRegime::Bounded { lo: g, hi: big_g },
    })
}

/// Evaluates one candidate occurrence for [`lpf_bounded`]: the left arm
/// starts at `o`, may be cut to keep its end at most `i - g - 1`, and must
/// still end at or after `i - G`.
fn eval_lpf_occurrence(
    idx: &TextIndex,
    i: usize,
    o: usize,
    g: usize,
    big_g: usize,
    best: &mut usize,
) {
    let cand = idx.lcp(o, i).min(i - g - o);
    let need = i as isize - big_g as isize - o as isize + 1;
    if cand >= 1 && cand as isize >= need {
        *best = (*best).max(cand);
    }
}

/// Longest previous factor with bounded gap: `table[i]` is the longest `|u|`
/// with `uv` a suffix of `w[1..i-1]`, `u` a prefix of `w[i..n]` and
/// `g <= |v| < G`.
///
/// Arms are classified by the level `k` of their length. When the candidate
/// window for the level-`k` prefix of the left arm is short enough, one
/// dictionary-of-basic-factors window query yields every start; otherwise
/// the two window borders are queried the same way and the wide middle —
/// where every start gives an in-range gap — is handled by the sliding
/// nearest-rank pass with the arm capped below the next level.
pub fn lpf_bounded(w: &Word, g: usize, big_g: usize) -> Result<GapTable> {
    let n = w.len();
    check_bounds(n, g, big_g)?;
    let idx = build_index(w)?;
    let dbf = build_dbf(w)?;
    let delta = big_g - g;
    let mut arms = vec![0usize; n + 1];

    let query_window = |i: usize, k: usize, a: isize, b: isize, best: &mut usize| -> Result<()> {
        let flen = 1usize << k;
        let a = a.max(1) as usize;
        if b < a as isize {
            return Ok(());
        }
        let b = (b as usize).min(n);
        if b + 1 < a + flen {
            return Ok(());
        }
        for o in dbf.window_occurrences(i, k, (a, b))?.expand() {
            eval_lpf_occurrence(&idx, i, o, g, big_g, best);
        }
        Ok(())
    };

    let mut k = 0usize;
    while (1usize << k) <= n {
        let flen = 1usize << k;
        let fits = delta <= 8 * flen;
        if !fits {
            // Middle starts s in [i - G, i - g - 2*flen - 1]: any arm below
            // the level cap keeps the gap inside [g, G), so only the best
            // LCE matters.
            let mids = sliding_best(
                n,
                big_g,
                g + 2 * flen + 1,
                &|j| idx.rank(j),
                &|i| idx.rank(i),
                &|j, i| idx.lcp(j, i),
            );
            for i in 1..=n {
                let c = mids[i].min(2 * flen - 1);
                if c >= 1 {
                    arms[i] = arms[i].max(c);
                }
            }
        }
        for i in 1..=n {
            if i + flen - 1 > n {
                break;
            }
            let b = i as isize - g as isize - 1;
            if b < 1 {
                continue;
            }
            let far = i as isize - big_g as isize - 2 * flen as isize;
            if fits {
                query_window(i, k, far, b, &mut arms[i])?;
            } else {
                let near_far = i as isize - big_g as isize + 2 * flen as isize;
                query_window(i, k, far, b.min(near_far), &mut arms[i])?;
                query_window(i, k, i as isize - g as isize - 2 * flen as isize, b, &mut arms[i])?;
            }
        }
        k += 1;
    }
    Ok(GapTable {
        arms,
        regime: GapRegime::Bounded { lo: g, hi: big_g },
    })
}

// ---------------------------------------------------------------------------
// Per-position lower-bound regime
// ---------------------------------------------------------------------------

fn check_gap_array(n: usize, g: &[usize]) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if g.len() != n {
        return Err(Error::InvalidInput(format!(
            "gap array has length {}, word has length {n}",
            g.len()
        )));
    }
    if let Some(&bad) = g.iter().find(|&&x| x < 1 || x > n) {
        return Err(Error::InvalidInput(format!(
            "gap bound {bad} not in [1, {n}]"
        )));
    }
    Ok(())
}

/// Monotone rightmost-path tree with binary lifting.
///
/// Nodes carry strictly increasing position values along every root-to-leaf
/// path. Inserting `j` climbs the current rightmost path past all larger
/// values and hangs a new node there; the climbed-over nodes never return to
/// the rightmost path, so the climbs are amortized constant. A query walks
/// the lifting table to the deepest current-path value below a threshold.
struct MonotoneTree {
    vals: Vec<usize>,
    up: Vec<u32>,
    log: usize,
    cur: usize,
}

impl MonotoneTree {
    fn new(cap: usize) -> MonotoneTree {
        let log = usize::BITS as usize - (cap + 1).leading_zeros() as usize;
        let mut t = MonotoneTree {
            vals: Vec::with_capacity(cap + 1),
            up: Vec::with_capacity((cap + 1) * (log + 1)),
            log,
            cur: 0,
        };
        t.vals.push(0);
        t.up.extend(std::iter::repeat(0).take(log + 1));
        t
    }

    fn insert(&mut self, j: usize) {
        let stride = self.log + 1;
        let mut x = self.cur;
        while x != 0 && self.vals[x] > j {
            x = self.up[x * stride] as usize;
        }
        let id = self.vals.len();
        self.vals.push(j);
        self.up.push(x as u32);
        for p in 1..stride {
            let half = self.up[self.up[id * stride + p - 1] as usize * stride + p - 1];
            self.up.push(half);
        }
        self.cur = id;
    }

    /// The largest value `< m` on the current rightmost path.
    fn query(&self, m: isize) -> Option<usize> {
        if self.cur == 0 || m <= 1 {
            return None;
        }
        let m = m as usize;
        let stride = self.log + 1;
        let mut x = self.cur;
        if self.vals[x] < m {
            return Some(self.vals[x]);
        }
        for p in (0..stride).rev() {
            let a = self.up[x * stride + p] as usize;
            if a != 0 && self.vals[a] >= m {
                x = a;
            }
        }
        let pa = self.up[x * stride] as usize;
        (pa != 0).then(|| self.vals[pa])
    }
}

/// Longest previous reversed factor with per-position gap lower bound:
/// `table[i]` is the longest `|u|` with `u^R v` a suffix of `w[1..i-1]`, `u`
/// a prefix of `w[i..n]` and `g[i] <= |v|`.
///
/// Two sweeps over the merged suffix / reversed-prefix rank order (one per
/// side of the query rank) maintain the prefix-ends seen so far as a
/// monotone tree: among ends below the gap threshold, larger end means
/// closer rank, hence larger LCE, so each query is one threshold lookup.
pub fn lprf_func(w: &Word, g: &[usize]) -> Result<GapTable> {
    let n = w.len();
    check_gap_array(n, g)?;
    let bidi = build_bidi_index(w)?;
    let mut events: Vec<(usize, bool, usize)> = Vec::with_capacity(2 * n);
    for i in 1..=n {
        events.push((bidi.rank(i), true, i));
        events.push((bidi.rank_rev(i), false, i));
    }
    events.sort_unstable();

    let mut arms = vec![0usize; n + 1];
    for forward in [true, false] {
        let mut tree = MonotoneTree::new(n);
        let iter: Box<dyn Iterator<Item = &(usize, bool, usize)>> = if forward {
            Box::new(events.iter())
        } else {
            Box::new(events.iter().rev())
        };
        for &(_, is_query, pos) in iter {
            if is_query {
                let m = pos as isize - g[pos - 1] as isize;
                if let Some(j) = tree.query(m) {
                    arms[pos] = arms[pos].max(bidi.lcp_suffix_revprefix(pos, j));
                }
            } else {
                tree.insert(pos);
            }
        }
    }
    Ok(GapTable {
        arms,
        regime: GapRegime::Func(g.to_vec()),
    })
}

/// The leftmost-maximizer array: `L[i]` is the smallest `j < i` with
/// `LCP(w[j..n], w[i..n])` maximal.
///
/// A left-to-right sweep inserts suffix ranks into an ordered set; the two
/// rank neighbors of `i` among earlier positions give the maximal LCP `M`,
/// and the leftmost maximizer is the smallest suffix-array position inside
/// the rank interval around `i` whose internal LCPs stay at least `M`.
pub fn l_array(w: &Word) -> Result<LArray> {
    let n = w.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let idx = build_index(w)?;
    let sa: Vec<u64> = idx.sa().iter().map(|&p| p as u64).collect();
    let pos_rmq = Rmq::new(&sa);
    let mut l = vec![0usize; n + 1];
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    for i in 1..=n {
        let r = idx.rank(i);
        if i > 1 {
            let mut m = 0usize;
            if let Some(&p) = seen.range(..r).next_back() {
                m = m.max(idx.lcp_by_rank(p, r));
            }
            if let Some(&p) = seen.range(r + 1..).next() {
                m = m.max(idx.lcp_by_rank(p, r));
            }
            // Rank interval around r whose suffixes share a prefix of
            // length m; its smallest position is the leftmost maximizer.
            let (mut a, mut b) = (0usize, r);
            while a < b {
                let mid = (a + b) / 2;
                if idx.lcp_by_rank(mid, r) >= m {
                    b = mid;
                } else {
                    a = mid + 1;
                }
            }
            let lo = a;
            let (mut a, mut b) = (r, n - 1);
            while a < b {
                let mid = (a + b + 1) / 2;
                if idx.lcp_by_rank(r, mid) >= m {
                    a = mid;
                } else {
                    b = mid - 1;
                }
            }
            let hi = a;
            l[i] = pos_rmq.min(lo, hi) as usize;
            debug_assert!(l[i] < i);
        }
        seen.insert(r);
    }
    Ok(LArray { l })
}

/// Longest previous factor with per-position gap lower bound: `table[i]` is
/// the longest `|u|` with `uv` a suffix of `w[1..i-1]`, `u` a prefix of
/// `w[i..n]` and `g[i] <= |v|`.
///
/// The optimal left-arm start lies on the chain `L[i], L[L[i]], ...`, so
/// each position walks its chain and keeps the best of
/// `min(LCP(j, i), i - g[i] - j)` over the chain elements that end before
/// the gap.
pub fn lpf_func(w: &Word, g: &[usize]) -> Result<GapTable> {
    let n = w.len();
    check_gap_array(n, g)?;
    let idx = build_index(w)?;
    let la = l_array(w)?;
    let mut arms = vec![0usize; n + 1];
    for i in 1..=n {
        let m = i as isize - g[i - 1] as isize;
        let mut j = la.l[i];
        let mut best = 0usize;
        while j != 0 {
            if (j as isize) < m {
                let cand = idx.lcp(j, i).min((m - j as isize) as usize);
                best = best.max(cand);
            }
            j = la.l[j];
        }
        arms[i] = best;
    }
    Ok(GapTable {
        arms,
        regime: GapRegime::Func(g.to_vec()),
    })
}

// ---------------------------------------------------------------------------
// Long-armed regime
// ---------------------------------------------------------------------------

/// All maximal long-armed palindromes (`u^R v u`, `|v| <= |u|`, arms not
/// extendable at their outer ends nor into the gap) or maximal long-armed
/// repeats (`u v u`, `1 <= |v| <= |u|`, arms not extendable in either
/// direction) of `w`, by quadratic scan with O(1) extension queries.
pub fn maximal_long_armed(w: &Word, kind: GappedKind) -> Result<MaxLongArmed> {
    let n = w.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if n > QUADRATIC_BUDGET {
        return Err(Error::BudgetExceeded("quadratic scan"));
    }
    let mut items = Vec::new();
    match kind {
        GappedKind::Palindrome => {
            let bidi = build_bidi_index(w)?;
            // (j, r): inner end of the left arm and start of the right arm.
            for j in 1..n {
                for r in (j + 1)..=n {
                    let gap = r - j - 1;
                    let arm = bidi.lcp_suffix_revprefix(r, j);
                    if arm == 0 || gap > arm {
                        continue;
                    }
                    // Arms already outer-maximal; reject only elements whose
                    // arms can grow into the gap.
                    if gap >= 2 && w.at(j + 1) == w.at(r - 1) {
                        continue;
                    }
                    items.push(LongArmedItem {
                        left: j - arm + 1,
                        arm,
                        right: r,
                    });
                }
            }
        }
        GappedKind::Repeat => {
            // The repeat family requires a nonempty gap, so an extension
            // that would collapse the gap to zero does not disqualify an
            // element: arms at gap 1 are maximal regardless of the letters
            // around them.
            let idx = build_index(w)?;
            for s1 in 1..n {
                for s2 in (s1 + 1)..=n {
                    let reach = idx.lcp(s1, s2);
                    let span = s2 - s1;
                    if reach >= 1 && span > reach && span - reach <= reach {
                        let gap = span - reach;
                        let left_ext =
                            gap >= 2 && s1 >= 2 && w.at(s1 - 1) == w.at(s2 - 1);
                        if !left_ext {
                            items.push(LongArmedItem {
                                left: s1,
                                arm: reach,
                                right: s2,
                            });
                        }
                    }
                    // Shorter arm pinned by the minimal gap 1.
                    if span >= 2 && span - 1 < reach {
                        items.push(LongArmedItem {
                            left: s1,
                            arm: span - 1,
                            right: s2,
                        });
                    }
                }
            }
        }
    }
    Ok(MaxLongArmed { kind, items })
}

/// Longest long-armed palindrome (`LPal`) or repeat (`LRep`) table:
/// `table[i]` is the longest `|u|` with `u^R v` (resp. `uv`) a suffix of
/// `w[1..i-1]`, `u` a prefix of `w[i..n]` and `|v| <= |u|`.
///
/// Every long-armed structure arises from a maximal one `(left, arm, right)`
/// by moving the right arm's start forward by `r'` while shedding the same
/// amount from the structure; the gap grows by `2r'` for palindromes but
/// only `r'` for repeats (the left arm sheds outward there), so `r'` is
/// capped at `(arm - gap) / 3` resp. `/ 2`. Painting the start interval with
/// the fixed right-arm end as weight and taking the cover maximum yields the
/// table; for repeats the empty-gap squares enter through the square-center
/// arm table.
pub fn lpal_lrep(w: &Word, kind: GappedKind) -> Result<GapTable> {
    let n = w.len();
    let structures = maximal_long_armed(w, kind)?;
    let divisor = match kind {
        GappedKind::Palindrome => 3,
        GappedKind::Repeat => 2,
    };
    let mut ivs = Vec::with_capacity(structures.items.len());
    for it in &structures.items {
        let gap = it.right - it.left - it.arm;
        let r = (it.arm - gap) / divisor;
        ivs.push(WeightedInterval {
            a: it.right,
            b: it.right + r + 1,
            g: it.right + it.arm - 1,
        });
    }
    let h = cover_extremum(&ivs, n, CoverMode::Max)?;
    let mut arms = vec![0usize; n + 1];
    for i in 1..=n {
        arms[i] = (h[i - 1] + 1).saturating_sub(i);
    }
    if kind == GappedKind::Repeat {
        let (sc, _, _) = compute_center_tables(w)?;
        for i in 1..=n {
            arms[i] = arms[i].max(sc[i]);
        }
    }
    Ok(GapTable {
        arms,
        regime: GapRegime::LongArmed,
    })
}
