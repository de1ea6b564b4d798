//! Fast membership and ancestor computations for prefix-suffix duplication
//! (bounded and unbounded) and prefix-suffix square completion.
//!
//! The duplication side rests on two boolean flag arrays derived from
//! primitively rooted squares; the completion side on the per-start minimal
//! ancestor end profile `j_i` computed with the center square tables.

use std::collections::HashMap;

use crate::index::{build_index, find_occurrences, TextIndex};
use crate::ops::{Family, Op};
use crate::squares::{
    compute_boundary_tables_bounded, compute_center_tables_from_runs, compute_runs, prim_squares,
    PrimSquareLists, Run,
};
use crate::{Error, Result, Word};

/// Reachability flags for bounded duplication.
///
/// `s[j]` — the prefix `w[1..=j]` turns into `w` by suffix duplications of
/// blocks at most `k`; `p[i]` — the suffix `w[i..=n]` turns into `w` by
/// prefix duplications. Index 0 is unused.
pub struct FlagArrays {
    pub k: usize,
    pub s: Vec<bool>,
    pub p: Vec<bool>,
}

/// Computes both flag arrays in O(n log k) after the square lists.
///
/// One suffix duplication extends `w[1..=j]` to `w[1..=j+q]` exactly when a
/// square with arm `q <= k` ends at `j+q`; restricting to primitive roots
/// loses nothing because duplicating `t = r^m` equals `m` duplications of
/// `r`, all staying inside the same run.
pub fn sd_pd_flags(w: &Word, k: usize) -> Result<FlagArrays> {
    let n = w.len();
    if n == 0 || k == 0 {
        return Err(Error::EmptyInput);
    }
    let lists = prim_squares(w, k)?;
    Ok(flags_from_lists(&lists, n, k))
}

fn flags_from_lists(lists: &PrimSquareLists, n: usize, k: usize) -> FlagArrays {
    let mut s = vec![false; n + 1];
    let mut p = vec![false; n + 1];
    s[n] = true;
    for e in (2..=n).rev() {
        if s[e] {
            for &q in &lists.by_end[e] {
                s[e - q as usize] = true;
            }
        }
    }
    p[1] = true;
    for st in 1..=n {
        if p[st] {
            for &q in &lists.by_start[st] {
                p[st + q as usize] = true;
            }
        }
    }
    FlagArrays { k, s, p }
}

/// Membership-direction marking over short factors: `marked[l][i]` says the
/// factor `w[i..i+l-1]` (length `l <= max_len`) is derivable from one of the
/// seed occurrences under bounded duplication. The marking is exact for
/// every occurrence of every derivable word: the last duplication step of
/// any derivation appears in place as a primitively rooted square prefix or
/// suffix of the occurrence.
fn mark_upward(
    lists: &PrimSquareLists,
    n: usize,
    seeds: &[(usize, usize)],
    max_len: usize,
) -> Vec<Vec<bool>> {
    let mut marked: Vec<Vec<bool>> = (0..=max_len).map(|l| vec![false; n + 2 - l.min(n + 1)]).collect();
    for &(i, j) in seeds {
        let l = j - i + 1;
        if l <= max_len {
            marked[l][i] = true;
        }
    }
    for l in 1..=max_len {
        for i in 1..=n + 1 - l {
            if marked[l][i] {
                continue;
            }
            let hit = lists.by_start[i]
                .iter()
                .take_while(|&&q| 2 * (q as usize) <= l)
                .any(|&q| marked[l - q as usize][i + q as usize])
                || lists.by_end[i + l - 1]
                    .iter()
                    .take_while(|&&q| 2 * (q as usize) <= l)
                    .any(|&q| marked[l - q as usize][i]);
            if hit {
                marked[l][i] = true;
            }
        }
    }
    marked
}

/// Ancestor-direction marking: starting from seed factors known to derive
/// `w`, undo single duplication steps in place, closing each length level
/// under content equality before descending. Ancestry is a property of
/// content, and one in-place undo at any single occurrence already yields
/// every one-step predecessor content, so the alternation reaches exactly
/// the ancestor contents at every occurrence.
fn mark_downward(
    idx: &TextIndex,
    lists: &PrimSquareLists,
    n: usize,
    seeds: &[(usize, usize)],
    max_len: usize,
) -> Vec<Vec<bool>> {
    let mut marked: Vec<Vec<bool>> = (0..=max_len).map(|l| vec![false; n + 2 - l.min(n + 1)]).collect();
    for &(i, j) in seeds {
        let l = j - i + 1;
        if l <= max_len {
            marked[l][i] = true;
        }
    }
    for l in (1..=max_len).rev() {
        close_marks_by_content(idx, &mut marked[l], l);
        if l < 2 {
            continue;
        }
        for i in 1..=n + 1 - l {
            if !marked[l][i] {
                continue;
            }
            for &q in lists.by_start[i].iter().take_while(|&&q| 2 * (q as usize) <= l) {
                marked[l - q as usize][i + q as usize] = true;
            }
            for &q in lists.by_end[i + l - 1]
                .iter()
                .take_while(|&&q| 2 * (q as usize) <= l)
            {
                marked[l - q as usize][i] = true;
            }
        }
    }
    marked
}

/// Decides whether `w` is derivable from `x` by bounded prefix-suffix
/// duplication.
///
/// For `|x| >= k` an occurrence `(i, j)` works exactly when `p[i]` and
/// `s[j]` hold (derivations reorder into suffix steps then prefix steps).
/// Shorter seeds are grown through the length window `[k, 2k]` by the
/// in-place marking.
pub fn psdk_membership(w: &Word, x: &Word, k: usize) -> Result<bool> {
    let n = w.len();
    let m = x.len();
    if m == 0 || k == 0 {
        return Err(Error::EmptyInput);
    }
    if m > n {
        return Ok(false);
    }
    let occs = find_occurrences(w.symbols(), x.symbols());
    if occs.is_empty() {
        return Ok(false);
    }
    let lists = prim_squares(w, k)?;
    let flags = flags_from_lists(&lists, n, k);
    if m >= k {
        return Ok(occs.iter().any(|&i| flags.p[i] && flags.s[i + m - 1]));
    }
    let seeds: Vec<(usize, usize)> = occs.iter().map(|&i| (i, i + m - 1)).collect();
    Ok(short_seed_reaches(&lists, &flags, n, k, &seeds))
}

/// Shared tail of the short-seed membership tests: grow the seeds up to
/// length `2k` and check whether `w` is reachable from the grown factors.
fn short_seed_reaches(
    lists: &PrimSquareLists,
    flags: &FlagArrays,
    n: usize,
    k: usize,
    seeds: &[(usize, usize)],
) -> bool {
    let max_len = (2 * k).min(n);
    let marked = mark_upward(lists, n, seeds, max_len);
    if n <= max_len && marked[n][1] {
        return true;
    }
    for l in k.min(max_len)..=max_len {
        if l < k {
            continue;
        }
        for i in 1..=n + 1 - l {
            if marked[l][i] && flags.p[i] && flags.s[i + l - 1] {
                return true;
            }
        }
    }
    false
}

/// Decides whether `w` is derivable under bounded duplication from *some*
/// word of the language decided by `member` (evaluated on every factor).
pub fn psdk_language_membership(
    w: &Word,
    k: usize,
    member: &dyn Fn(&[u32]) -> bool,
) -> Result<bool> {
    let n = w.len();
    if n == 0 || k == 0 {
        return Err(Error::EmptyInput);
    }
    let lists = prim_squares(w, k)?;
    let flags = flags_from_lists(&lists, n, k);
    let mut short_seeds = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            if !member(w.slice(i, j)) {
                continue;
            }
            let l = j - i + 1;
            if l >= k {
                if flags.p[i] && flags.s[j] {
                    return Ok(true);
                }
            } else {
                short_seeds.push((i, j));
            }
        }
    }
    Ok(!short_seeds.is_empty() && short_seed_reaches(&lists, &flags, n, k, &short_seeds))
}

/// Decides whether `w` is derivable from `x` by unbounded prefix-suffix
/// duplication; quadratic marking over all factor occurrences.
pub fn psd_membership(w: &Word, x: &Word) -> Result<bool> {
    let n = w.len();
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    if x.len() > n {
        return Ok(false);
    }
    if n * n > (1 << 26) {
        return Err(Error::BudgetExceeded("quadratic membership"));
    }
    let occs = find_occurrences(w.symbols(), x.symbols());
    if occs.is_empty() {
        return Ok(false);
    }
    let lists = prim_squares(w, n)?;
    let seeds: Vec<(usize, usize)> = occs.iter().map(|&i| (i, i + x.len() - 1)).collect();
    let marked = mark_upward(&lists, n, &seeds, n);
    Ok(marked[n][1])
}

/// All PSD ancestor occurrences of `w`: `(i, j)` such that the content
/// `w[i..=j]` derives `w` under unbounded duplication. In-place undo steps
/// are exhaustive at content level because every derivation nests.
pub fn psd_ancestor_coords(w: &Word) -> Result<Vec<(usize, usize)>> {
    let n = w.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if n * n > (1 << 26) {
        return Err(Error::BudgetExceeded("quadratic ancestors"));
    }
    let lists = prim_squares(w, n)?;
    let idx = build_index(w)?;
    let marked = mark_downward(&idx, &lists, n, &[(1, n)], n);
    let mut out = Vec::new();
    for l in 1..=n {
        for i in 1..=n + 1 - l {
            if marked[l][i] {
                out.push((i, i + l - 1));
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// The minimum `i` such that `w` is derivable from its prefix `w[1..=i]` by
/// suffix square completions alone.
pub fn ssc_min_prefix(w: &Word) -> Result<usize> {
    let mut runs = compute_runs(w)?;
    Ok(min_prefix_from_runs(&mut runs, w.len()))
}

/// Run sweep behind [`ssc_min_prefix`].
///
/// The set of prefix lengths deriving `w` is a contiguous block `[m, n]`
/// (each extension interval contains its anchor), so only its left border
/// `m` is tracked. A run is useful only while its end is at least `m`; the
/// first skipped run ends the sweep, since `m` can no longer change.
/// Within a useful run of period `p` the chain of suffix completions walks
/// the border down to `i + p - 1`.
fn min_prefix_from_runs(runs: &mut [Run], n: usize) -> usize {
    runs.sort_unstable_by_key(|r| std::cmp::Reverse(r.j));
    let mut m = n;
    for r in runs.iter() {
        if r.j < m {
            break;
        }
        m = m.min(r.i + r.p - 1);
    }
    m
}

/// Fenwick tree over set bits, supporting "rightmost set position in
/// `[1, hi]`" via counting plus binary descent.
struct BitFenwick {
    t: Vec<u32>,
}

impl BitFenwick {
    fn new(n: usize) -> BitFenwick {
        BitFenwick { t: vec![0; n + 1] }
    }

    fn set(&mut self, mut pos: usize) {
        while pos < self.t.len() {
            self.t[pos] += 1;
            pos += pos & pos.wrapping_neg();
        }
    }

    fn prefix(&self, mut pos: usize) -> u32 {
        let mut s = 0;
        while pos > 0 {
            s += self.t[pos];
            pos -= pos & pos.wrapping_neg();
        }
        s
    }

    /// Position of the `k`-th set bit (1-based `k`), assuming it exists.
    fn kth(&self, mut k: u32) -> usize {
        let mut pos = 0usize;
        let mut step = self.t.len().next_power_of_two() / 2;
        while step > 0 {
            let next = pos + step;
            if next < self.t.len() && self.t[next] < k {
                k -= self.t[next];
                pos = next;
            }
            step /= 2;
        }
        pos + 1
    }
}

/// Per-start ancestor ends under prefix-suffix square completion.
pub struct AncestorProfile {
    /// `j[i]` — minimal end such that `w[i..=j[i]]` derives `w`
    /// (sentinel `n + 1` when no ancestor starts at `i`); `j[0]` unused.
    ///
    /// Derivability follows the factor's content, so neither monotonicity
    /// in `i` nor per-start interval structure holds: on "ababaaba",
    /// `j[5] = 8` but `j[6] = 7`; on "abaababa" the admissible ends at
    /// start 2 are `{3, 5, 6, 7, 8}` ("ba" derives the word, "baa" does
    /// not). `count` is therefore the exact occurrence count, not
    /// `Σ (n - j[i] + 1)`.
    pub j: Vec<usize>,
    /// Number of ancestor occurrences `(i, j)`.
    pub count: u64,
    /// Shortest ancestor occurrence, leftmost among equal lengths.
    pub shortest: (usize, usize),
}

/// Occurrence-local minimal ancestor ends: `jin[i]` is the least `j` such
/// that the occurrence `(i, j)` grows to `(1, n)` by completions staying at
/// this occurrence (sentinel `n + 1`). Unlike content-level ancestry the
/// in-place ends are monotone in `i` and interval-structured per start.
///
/// Recurrence for `i >= 2`, with `M = MinRightEnd[i-1]` (the closest end of
/// a square whose left root covers `i-1`, i.e. the nearest leftward
/// completion target): if `M` is the sentinel no ancestor starts at `i`;
/// otherwise `(i, j)` derives `w` exactly when `j >= jin_{i-1}` and every
/// column `q` in `(j, M]` satisfies `MaxLeftEnd[q] >= i` (a square starting
/// inside the factor passes over `q`, letting right completions travel to
/// `M`). The minimal such `j` is the rightmost violating column, found by
/// predecessor search over positions that became violating as `i` grew.
pub(crate) fn pssc_inplace_ends(w: &Word) -> Result<Vec<usize>> {
    let n = w.len();
    let mut runs = compute_runs(w)?;
    let (_, mre, mle) = compute_center_tables_from_runs(&runs, n)?;
    let j1 = min_prefix_from_runs(&mut runs, n);

    let mut j = vec![0usize; n + 1];
    j[1] = j1;
    // Position q becomes "violating" for all i > mle[q]; bucket activations.
    let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); n + 2];
    for q in 1..=n {
        buckets[mle[q] + 1].push(q as u32);
    }
    let mut fen = BitFenwick::new(n);
    let mut activated = 0usize;
    for i in 2..=n {
        while activated < i {
            activated += 1;
            for &q in &buckets[activated] {
                fen.set(q as usize);
            }
        }
        let jp = j[i - 1];
        let m = mre[i - 1];
        if jp == n + 1 || m == n + 1 {
            j[i] = n + 1;
            continue;
        }
        if m <= jp {
            j[i] = jp.max(i);
            continue;
        }
        let hi = fen.prefix(m);
        let lo = fen.prefix(jp);
        if hi == lo {
            j[i] = jp.max(i);
        } else {
            // Rightmost violating column in (jp, m].
            j[i] = fen.kth(hi);
        }
    }
    Ok(j)
}

/// Computes the content-level ancestor profile in linear time after the
/// suffix array.
///
/// Every derivation runs in place at some occurrence, so a length `l` is an
/// ancestor length at start `i` exactly when some occurrence `i2` of
/// `w[i..i+l-1]` satisfies `need[i2] <= l`, with `need[i2]` the in-place
/// minimal length. In the lcp-interval tree the occurrences of that factor
/// are the leaves below the unique ancestor node of `i` whose depth range
/// `(parent depth, depth]` contains `l`, so per node the admissible lengths
/// it governs are `[max(μ, parent depth + 1), depth]` with `μ` the subtree
/// minimum need. Minimal per-start lengths, the exact occurrence count and
/// the shortest occurrence all read off the tree in one pass.
pub fn pssc_ancestor_profile(w: &Word) -> Result<AncestorProfile> {
    let n = w.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let jin = pssc_inplace_ends(w)?;
    if n == 1 {
        return Ok(AncestorProfile {
            j: vec![0, 1],
            count: 1,
            shortest: (1, 1),
        });
    }
    let need = |i: usize| {
        if jin[i] <= n {
            jin[i] + 1 - i
        } else {
            usize::MAX
        }
    };
    let (sa, _, lcp) = crate::index::sa_rank_lcp(w.symbols());

    struct Node {
        depth: usize,
        parent: usize,
        min_need: usize,
        min_start: usize,
        leaves: u64,
    }
    const NONE: usize = usize::MAX;
    fn attach(nodes: &mut [Node], c: usize, p: usize) {
        nodes[c].parent = p;
        let (mn, ms, lv) = (nodes[c].min_need, nodes[c].min_start, nodes[c].leaves);
        let pn = &mut nodes[p];
        pn.min_need = pn.min_need.min(mn);
        pn.min_start = pn.min_start.min(ms);
        pn.leaves += lv;
    }

    let mut nodes: Vec<Node> = Vec::with_capacity(2 * n + 1);
    nodes.push(Node {
        depth: 0,
        parent: NONE,
        min_need: usize::MAX,
        min_start: usize::MAX,
        leaves: 0,
    });
    let mut stack: Vec<usize> = vec![0];
    let mut pop_order: Vec<usize> = Vec::with_capacity(2 * n);
    let mut leaf_id = vec![0usize; n];
    for r in 0..=n {
        if r > 0 {
            let h = if r < n { lcp[r] as usize } else { 0 };
            let mut child: Option<usize> = None;
            while nodes[*stack.last().unwrap()].depth > h {
                let v = stack.pop().unwrap();
                if let Some(c) = child {
                    attach(&mut nodes, c, v);
                }
                pop_order.push(v);
                child = Some(v);
            }
            if let Some(c) = child {
                let top = *stack.last().unwrap();
                if nodes[top].depth == h {
                    attach(&mut nodes, c, top);
                } else {
                    let u = nodes.len();
                    nodes.push(Node {
                        depth: h,
                        parent: NONE,
                        min_need: usize::MAX,
                        min_start: usize::MAX,
                        leaves: 0,
                    });
                    attach(&mut nodes, c, u);
                    stack.push(u);
                }
            }
        }
        if r < n {
            let s = sa[r] as usize;
            leaf_id[r] = nodes.len();
            nodes.push(Node {
                depth: n + 1 - s,
                parent: NONE,
                min_need: need(s),
                min_start: s,
                leaves: 1,
            });
            stack.push(leaf_id[r]);
        }
    }
    pop_order.push(0);

    // Children pop before parents, so the reverse order runs root-first.
    let mut minc = vec![usize::MAX; nodes.len()];
    let mut count = 0u64;
    let mut best_len = usize::MAX;
    let mut best_start = usize::MAX;
    for &v in pop_order.iter().rev() {
        let dp = if nodes[v].parent == NONE {
            0
        } else {
            nodes[nodes[v].parent].depth
        };
        let (dv, mu) = (nodes[v].depth, nodes[v].min_need);
        let cand = if mu != usize::MAX && mu.max(dp + 1) <= dv {
            mu.max(dp + 1)
        } else {
            usize::MAX
        };
        let up = if nodes[v].parent == NONE {
            usize::MAX
        } else {
            minc[nodes[v].parent]
        };
        minc[v] = cand.min(up);
        if cand != usize::MAX {
            count += nodes[v].leaves * (dv - cand + 1) as u64;
            if cand < best_len || (cand == best_len && nodes[v].min_start < best_start) {
                best_len = cand;
                best_start = nodes[v].min_start;
            }
        }
    }

    let mut j = vec![n + 1; n + 1];
    j[0] = 0;
    for r in 0..n {
        let s = sa[r] as usize;
        let l = minc[leaf_id[r]];
        if l != usize::MAX {
            j[s] = s + l - 1;
        }
    }
    Ok(AncestorProfile {
        j,
        count,
        shortest: (best_start, best_start + best_len - 1),
    })
}

/// Decides whether `w` is derivable from `x` by prefix-suffix square
/// completion: some occurrence of `x` must reach at least as far right as
/// its start's minimal in-place ancestor end. (The occurrence-local ends
/// suffice here because any derivation from the content of `x` runs in
/// place at one of its occurrences.)
pub fn pssc_membership(w: &Word, x: &Word) -> Result<bool> {
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    if x.len() > w.len() {
        return Ok(false);
    }
    let jin = pssc_inplace_ends(w)?;
    let m = x.len();
    Ok(find_occurrences(w.symbols(), x.symbols())
        .into_iter()
        .any(|i| jin[i] <= i + m - 1))
}

/// All ancestor occurrences of `w` under bounded prefix-suffix duplication,
/// sorted. Long factors (length at least `k`) come from the flag pairing
/// closed under content equality; shorter ones from undoing steps inside
/// the `[k, 2k]` window.
pub fn bpsd_ancestor_coords(w: &Word, k: usize) -> Result<Vec<(usize, usize)>> {
    let n = w.len();
    if n == 0 || k == 0 {
        return Err(Error::EmptyInput);
    }
    let lists = prim_squares(w, k)?;
    let flags = flags_from_lists(&lists, n, k);
    let idx = build_index(w)?;
    let mut out = Vec::new();
    for l in k..=n {
        let marks = closed_long_marks(&idx, &flags, l);
        for i in 1..=n + 1 - l {
            if marks[i] {
                out.push((i, i + l - 1));
            }
        }
    }
    if k >= 2 {
        let marked = short_ancestor_marks(&idx, &lists, &flags, n, k);
        let max_len = (2 * k).min(n);
        for l in 1..k.min(max_len + 1) {
            for i in 1..=n + 1 - l {
                if marked[l][i] {
                    out.push((i, i + l - 1));
                }
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Flag-pair marks of one length at least `k`, closed under content
/// equality. `p[i] && s[i+l-1]` characterizes derivability in place at the
/// occurrence; ancestry holds at every occurrence of a derivable content,
/// so the pairing alone is not content-closed (e.g. "abaababaa" with
/// `k = 3`: the length-4 factor "abaa" derives the word from its first
/// occurrence but not in place at its second).
fn closed_long_marks(idx: &TextIndex, flags: &FlagArrays, l: usize) -> Vec<bool> {
    let n = idx.len();
    let mut marks = vec![false; n + 2 - l];
    for i in 1..=n + 1 - l {
        marks[i] = flags.p[i] && flags.s[i + l - 1];
    }
    close_marks_by_content(idx, &mut marks, l);
    marks
}

/// Closes per-start marks for factors of fixed length `l` under content
/// equality: ancestry is a property of the factor's content, so every
/// occurrence of a marked factor becomes marked. Occurrences of one content
/// form a maximal suffix-array range whose internal adjacent LCPs are all
/// at least `l`.
fn close_marks_by_content(idx: &TextIndex, marks: &mut [bool], l: usize) {
    let n = idx.len();
    let sa = idx.sa();
    let lcp = idx.lcp_array();
    let mut r = 0usize;
    while r < n {
        let mut r2 = r;
        while r2 + 1 < n && lcp[r2 + 1] as usize >= l {
            r2 += 1;
        }
        let group = || {
            sa[r..=r2]
                .iter()
                .map(|&p| p as usize)
                .filter(|&p| p + l - 1 <= n)
        };
        if group().any(|p| marks[p]) {
            for p in group() {
                marks[p] = true;
            }
        }
        r = r2 + 1;
    }
}

/// Downward marking seeded with every ancestor of length in `[k, 2k]`
/// (including `w` itself when it is that short).
fn short_ancestor_marks(
    idx: &TextIndex,
    lists: &PrimSquareLists,
    flags: &FlagArrays,
    n: usize,
    k: usize,
) -> Vec<Vec<bool>> {
    let max_len = (2 * k).min(n);
    let mut seeds = Vec::new();
    for l in k..=max_len {
        for i in 1..=n + 1 - l {
            if flags.p[i] && flags.s[i + l - 1] {
                seeds.push((i, i + l - 1));
            }
        }
    }
    if n <= max_len {
        seeds.push((1, n));
    }
    mark_downward(idx, lists, n, &seeds, max_len)
}

/// Number of ancestor occurrences under bounded duplication.
pub fn bpsd_ancestor_count(w: &Word, k: usize) -> Result<u64> {
    let n = w.len();
    if n == 0 || k == 0 {
        return Err(Error::EmptyInput);
    }
    let lists = prim_squares(w, k)?;
    let flags = flags_from_lists(&lists, n, k);
    let idx = build_index(w)?;
    let mut count = 0u64;
    for l in k..=n {
        let marks = closed_long_marks(&idx, &flags, l);
        count += marks[1..].iter().filter(|&&m| m).count() as u64;
    }
    if k >= 2 {
        let marked = short_ancestor_marks(&idx, &lists, &flags, n, k);
        let max_len = (2 * k).min(n);
        for l in 1..k.min(max_len + 1) {
            for i in 1..=n + 1 - l {
                if marked[l][i] {
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

/// Shortest ancestor occurrence under bounded duplication (leftmost among
/// equal lengths).
pub fn bpsd_shortest_ancestor(w: &Word, k: usize) -> Result<(usize, usize)> {
    let n = w.len();
    if n == 0 || k == 0 {
        return Err(Error::EmptyInput);
    }
    let lists = prim_squares(w, k)?;
    let flags = flags_from_lists(&lists, n, k);
    let idx = build_index(w)?;
    if k >= 2 {
        let marked = short_ancestor_marks(&idx, &lists, &flags, n, k);
        let max_len = (2 * k).min(n);
        for l in 1..k.min(max_len + 1) {
            for i in 1..=n + 1 - l {
                if marked[l][i] {
                    return Ok((i, i + l - 1));
                }
            }
        }
    }
    for l in k..=n {
        let marks = closed_long_marks(&idx, &flags, l);
        if let Some(i) = (1..=n + 1 - l).find(|&i| marks[i]) {
            return Ok((i, i + l - 1));
        }
    }
    Ok((1, n))
}

/// Longest ancestor occurrence under bounded duplication that is itself
/// primitive for the operation (no bounded square prefix or suffix).
/// Ties broken leftmost.
pub fn bpsd_longest_primitive_ancestor(w: &Word, k: usize) -> Result<Option<(usize, usize)>> {
    let n = w.len();
    if n == 0 || k == 0 {
        return Err(Error::EmptyInput);
    }
    let lists = prim_squares(w, k)?;
    let flags = flags_from_lists(&lists, n, k);
    let (left_k, right_k, _) = compute_boundary_tables_bounded(w, Some(k))?;
    let primitive = |i: usize, j: usize| right_k[i] > j && left_k[j] < i;
    let idx = build_index(w)?;

    // Lengths descending, starts ascending: the first primitive hit wins.
    for l in (k..=n).rev() {
        let marks = closed_long_marks(&idx, &flags, l);
        for i in 1..=n + 1 - l {
            if marks[i] && primitive(i, i + l - 1) {
                return Ok(Some((i, i + l - 1)));
            }
        }
    }
    if k >= 2 {
        let marked = short_ancestor_marks(&idx, &lists, &flags, n, k);
        for l in (1..k.min(n + 1)).rev() {
            for i in 1..=n + 1 - l {
                if marked[l][i] && primitive(i, i + l - 1) {
                    return Ok(Some((i, i + l - 1)));
                }
            }
        }
    }
    Ok(None)
}

/// Bounded (or unbounded) shortest-square tables for primitivity testing.
pub struct PrimTables {
    pub n: usize,
    /// Start of the shortest admissible square ending at `j` (0 if none).
    pub left: Vec<usize>,
    /// End of the shortest admissible square starting at `i` (n+1 if none).
    pub right: Vec<usize>,
}

impl PrimTables {
    /// `root_bound = Some(k)` restricts to squares with primitive root at
    /// most `k` (the bounded-duplication notion of a square step).
    pub fn build(w: &Word, root_bound: Option<usize>) -> Result<PrimTables> {
        let (left, right, _) = compute_boundary_tables_bounded(w, root_bound)?;
        Ok(PrimTables {
            n: w.len(),
            left,
            right,
        })
    }
}

/// True iff the factor `w[i..=j]` cannot be obtained from a shorter word by
/// one step of the given family: prefix-only families forbid a square
/// prefix, suffix-only families a square suffix, combined families both.
pub fn is_primitive_factor(pt: &PrimTables, i: usize, j: usize, family: Family) -> bool {
    let no_prefix_square = pt.right[i] > j;
    let no_suffix_square = pt.left[j] < i;
    match family {
        Family::Pd | Family::Psc => no_prefix_square,
        Family::Sd | Family::Ssc => no_suffix_square,
        Family::Psd | Family::Pssc => no_prefix_square && no_suffix_square,
    }
}

/// One primitive root of `w` for the given operation: repeatedly peel the
/// root of the shortest admissible square suffix, then prefix, until the
/// remaining factor is primitive. Each removal undoes one operation step,
/// so the result is an ancestor.
pub fn primitive_root(w: &Word, op: Op) -> Result<(usize, usize)> {
    let n = w.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let (left, right, _) = compute_boundary_tables_bounded(w, op.k)?;
    let peel_suffix = matches!(op.family, Family::Sd | Family::Psd | Family::Ssc | Family::Pssc);
    let peel_prefix = matches!(op.family, Family::Pd | Family::Psd | Family::Psc | Family::Pssc);
    let (mut i, mut j) = (1usize, n);
    loop {
        if peel_suffix && left[j] >= i {
            j -= (j + 1 - left[j]) / 2;
            continue;
        }
        if peel_prefix && right[i] <= j {
            i += (right[i] + 1 - i) / 2;
            continue;
        }
        break;
    }
    Ok((i, j))
}

/// Which common ancestor to report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AncestorQuery {
    Any,
    Shortest,
    Longest,
}

/// A common ancestor of `x` and `y` under `op`, or `None` when the two
/// words share none.
///
/// Completion uses the suffix array of `x·#·y`: ancestry per start is
/// upward closed in the end, so a start pair admits a common ancestor of
/// length `l` exactly when `l` is at least both required minimal lengths
/// and at most the pair's longest common extension. Pairs are examined by
/// merging suffix-array blocks in decreasing order of adjacent LCP.
/// Duplication ancestry is not upward closed, so those families intersect
/// explicit ancestor sets through a trie keyed by factor content.
pub fn common_ancestor(
    x: &Word,
    y: &Word,
    op: Op,
    what: AncestorQuery,
) -> Result<Option<Word>> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptyInput);
    }
    match op.family {
        Family::Pssc => common_ancestor_pssc(x, y, what),
        Family::Psd => {
            let cx = match op.k {
                Some(k) => bpsd_ancestor_coords(x, k)?,
                None => psd_ancestor_coords(x)?,
            };
            let cy = match op.k {
                Some(k) => bpsd_ancestor_coords(y, k)?,
                None => psd_ancestor_coords(y)?,
            };
            Ok(common_by_trie(x, &cx, y, &cy, what))
        }
        _ => Err(Error::InvalidInput(format!(
            "common ancestor unsupported for {:?}",
            op.family
        ))),
    }
}

/// Intersects two ancestor coordinate sets by content. Ancestors sharing a
/// start are inserted along a single trie path per start, marking nodes at
/// the admissible depths, which keeps the total work quadratic.
fn common_by_trie(
    x: &Word,
    cx: &[(usize, usize)],
    y: &Word,
    cy: &[(usize, usize)],
    what: AncestorQuery,
) -> Option<Word> {
    // children[node] maps a symbol to the child node; mark[node] says the
    // path spelled to this node is an ancestor of x.
    let mut children: Vec<HashMap<u32, usize>> = vec![HashMap::new()];
    let mut mark: Vec<bool> = vec![false];

    let mut idx = 0usize;
    while idx < cx.len() {
        let start = cx[idx].0;
        let mut node = 0usize;
        let mut depth = 0usize;
        let mut q = idx;
        while q < cx.len() && cx[q].0 == start {
            let target = cx[q].1 - start + 1;
            while depth < target {
                let sym = x.at(start + depth);
                let next = match children[node].get(&sym) {
                    Some(&c) => c,
                    None => {
                        children.push(HashMap::new());
                        mark.push(false);
                        let c = children.len() - 1;
                        children[node].insert(sym, c);
                        c
                    }
                };
                node = next;
                depth += 1;
            }
            mark[node] = true;
            q += 1;
        }
        idx = q;
    }

    let mut best: Option<(usize, Word)> = None;
    let mut idx = 0usize;
    while idx < cy.len() {
        let start = cy[idx].0;
        let mut node = 0usize;
        let mut depth = 0usize;
        let mut alive = true;
        let mut q = idx;
        while q < cy.len() && cy[q].0 == start {
            let target = cy[q].1 - start + 1;
            while alive && depth < target {
                let sym = y.at(start + depth);
                match children[node].get(&sym) {
                    Some(&c) => {
                        node = c;
                        depth += 1;
                    }
                    None => alive = false,
                }
            }
            if !alive {
                while q < cy.len() && cy[q].0 == start {
                    q += 1;
                }
                break;
            }
            if mark[node] {
                let better = match (&best, what) {
                    (None, _) => true,
                    (Some((bl, _)), AncestorQuery::Shortest) => depth < *bl,
                    (Some((bl, _)), AncestorQuery::Longest) => depth > *bl,
                    (Some(_), AncestorQuery::Any) => false,
                };
                if better {
                    best = Some((depth, y.factor(start, start + depth - 1)));
                }
            }
            q += 1;
        }
        idx = q;
    }
    best.map(|(_, w)| w)
}

fn common_ancestor_pssc(x: &Word, y: &Word, what: AncestorQuery) -> Result<Option<Word>> {
    let (nx, ny) = (x.len(), y.len());
    let jx = pssc_inplace_ends(x)?;
    let jy = pssc_inplace_ends(y)?;
    const INF: usize = usize::MAX;
    // Minimal in-place ancestor length per start, per word. In-place needs
    // are the right notion here: a content is an ancestor of length `l` at
    // start `i` exactly when some start admits `l` in place, and in-place
    // admissible lengths per start form the interval `[need, suffix length]`
    // — the upward closure the block sweep relies on.
    let need_x: Vec<usize> = (1..=nx)
        .map(|i| if jx[i] <= nx { jx[i] - i + 1 } else { INF })
        .collect();
    let need_y: Vec<usize> = (1..=ny)
        .map(|i| if jy[i] <= ny { jy[i] - i + 1 } else { INF })
        .collect();

    let sep = x
        .symbols()
        .iter()
        .chain(y.symbols())
        .copied()
        .max()
        .unwrap_or(0)
        + 1;
    if sep >= crate::word::MAX_ALPHABET {
        return Err(Error::NoSeparator);
    }
    let mut syms = x.symbols().to_vec();
    syms.push(sep);
    syms.extend_from_slice(y.symbols());
    let cat = Word::from_symbols(syms)?;
    let idx = build_index(&cat)?;
    let total = cat.len();

    // Per suffix-array rank: required length if the suffix starts in x
    // (resp. y), INF otherwise.
    let sa = idx.sa();
    let mut lx = vec![INF; total];
    let mut ly = vec![INF; total];
    let mut posx = vec![0usize; total];
    let mut posy = vec![0usize; total];
    for r in 0..total {
        let p = sa[r] as usize;
        if p <= nx {
            lx[r] = need_x[p - 1];
            posx[r] = p;
        } else if p > nx + 1 {
            ly[r] = need_y[p - nx - 2];
            posy[r] = p - nx - 1;
        }
    }

    // Merge adjacent blocks by decreasing LCP; a block always spans a
    // contiguous rank range, so any x-start and y-start inside it share a
    // common extension of at least the current threshold.
    let lcp = idx.lcp_array();
    let mut order: Vec<usize> = (1..total).collect();
    order.sort_unstable_by_key(|&r| std::cmp::Reverse(lcp[r]));

    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut Vec<usize>, mut a: usize) -> usize {
        while parent[a] != a {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        a
    }

    let mut best: Option<(usize, usize, bool)> = None; // (length, pos, pos-in-x)
    let improve = |len: usize, pos: usize, in_x: bool, best: &mut Option<(usize, usize, bool)>| {
        let better = match (&best, what) {
            (None, _) => true,
            (Some((bl, _, _)), AncestorQuery::Shortest) => len < *bl,
            (Some((bl, _, _)), AncestorQuery::Longest) => len > *bl,
            (Some(_), AncestorQuery::Any) => false,
        };
        if better {
            *best = Some((len, pos, in_x));
        }
    };

    for &r in &order {
        let t = lcp[r] as usize;
        if t == 0 {
            break;
        }
        let a = find(&mut parent, r - 1);
        let b = find(&mut parent, r);
        if a != b {
            // Union by index; keep payload at the representative.
            let (root, other) = (a.min(b), a.max(b));
            parent[other] = root;
            if lx[other] < lx[root] {
                lx[root] = lx[other];
                posx[root] = posx[other];
            }
            if ly[other] < ly[root] {
                ly[root] = ly[other];
                posy[root] = posy[other];
            }
            let (rlx, rly) = (lx[root], ly[root]);
            if rlx != INF && rly != INF {
                let c = rlx.max(rly);
                if c <= t {
                    match what {
                        AncestorQuery::Longest => {
                            // First satisfying merge: t is the maximum
                            // feasible length; the witness pair realises it.
                            improve(t, posx[root], true, &mut best);
                            if best.map(|(l, _, _)| l) == Some(t) {
                                break;
                            }
                        }
                        _ => {
                            // The minima themselves form a feasible pair of
                            // length c.
                            improve(c, posx[root], true, &mut best);
                        }
                    }
                }
            }
        }
    }

    Ok(best.map(|(len, pos, in_x)| {
        if in_x {
            x.factor(pos, pos + len - 1)
        } else {
            y.factor(pos, pos + len - 1)
        }
    }))
}
