//! Prefix/suffix-square-free factor analytics — constant-time freeness
//! queries, enumeration, counting and longest factor — plus the three
//! square-driven factorizations (into squares, maximizing square factors,
//! into runs) and the longest primitive completion ancestor.

use crate::ancestors::pssc_inplace_ends;
use crate::index::Rmq;
use crate::intervals::{IntervalUnionFind, SegTree};
use crate::squares::{compute_boundary_tables, compute_runs, prim_squares};
use crate::{Error, Result, Word};

/// Which end of a factor must avoid a square occurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsfKind {
    /// No square prefix.
    Prefix,
    /// No square suffix.
    Suffix,
    /// Neither a square prefix nor a square suffix.
    Both,
}

/// Constant-time prefix/suffix-square-freeness queries over the factors of
/// one word.
///
/// `left[j]` is the start of the shortest square ending at `j` (0 when no
/// square ends there); `right[i]` is the end of the shortest square starting
/// at `i` (`n + 1` when none starts there). A factor `w[i..j]` is
/// suffix-square free iff `left[j] < i` and prefix-square free iff
/// `right[i] > j`.
pub struct PsfIndex {
    n: usize,
    left: Vec<usize>,
    right: Vec<usize>,
    rmq_left: Rmq,
}

/// Builds the freeness index in O(n) plus the RMQ table.
pub fn build_psf_index(w: &Word) -> Result<PsfIndex> {
    let n = w.len();
    let (left, right, _) = compute_boundary_tables(w)?;
    let vals: Vec<u64> = left[1..].iter().map(|&v| v as u64).collect();
    Ok(PsfIndex {
        n,
        left,
        right,
        rmq_left: Rmq::new(&vals),
    })
}

impl PsfIndex {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Start of the shortest square ending at `j`, 0 when none.
    pub fn left(&self, j: usize) -> usize {
        self.left[j]
    }

    /// End of the shortest square starting at `i`, `n + 1` when none.
    pub fn right(&self, i: usize) -> usize {
        self.right[i]
    }

    fn check(&self, i: usize, j: usize) -> Result<()> {
        if i >= 1 && i <= j && j <= self.n {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!("factor ({i}, {j}) of n={}", self.n)))
        }
    }

    /// Is `w[i..j]` free of a square at the requested end(s)? O(1).
    pub fn psf_query(&self, i: usize, j: usize, kind: PsfKind) -> Result<bool> {
        self.check(i, j)?;
        let p = || self.right[i] > j;
        let s = || self.left[j] < i;
        Ok(match kind {
            PsfKind::Prefix => p(),
            PsfKind::Suffix => s(),
            PsfKind::Both => p() && s(),
        })
    }

    /// (min of `left`, rightmost position attaining it) over `[j1, j2]`.
    fn rmq(&self, j1: usize, j2: usize) -> (usize, usize) {
        let (v, p) = self.rmq_left.min_pos(j1 - 1, j2 - 1);
        (v as usize, p + 1)
    }
}

/// Streams every factor free at the requested end(s), ordered by start then
/// end, without materializing the (possibly quadratic) result set.
///
/// For the two-sided kind, the ends admissible for a fixed start `i` are
/// found by recursive range-minimum splitting of `left` over
/// `[i + 1, right[i] - 1]`: a range whose minimum is `>= i` holds no
/// suffix-square-free end and is abandoned, otherwise the minimizer is
/// reported and both sides are searched. The work is proportional to the
/// output size.
pub fn enumerate_pssf_with(
    w: &Word,
    kind: PsfKind,
    mut report: impl FnMut(usize, usize),
) -> Result<()> {
    let idx = build_psf_index(w)?;
    let n = idx.n;
    match kind {
        PsfKind::Suffix => {
            for j in 1..=n {
                for i in idx.left[j] + 1..=j {
                    report(i, j);
                }
            }
        }
        PsfKind::Prefix => {
            for i in 1..=n {
                for j in i..idx.right[i].min(n + 1) {
                    report(i, j);
                }
            }
        }
        PsfKind::Both => {
            enum Task {
                Search(usize, usize),
                Emit(usize),
            }
            let mut stack: Vec<Task> = Vec::new();
            for i in 1..=n {
                // A single symbol is always free at both ends.
                report(i, i);
                if i + 1 <= idx.right[i].saturating_sub(1).min(n) {
                    stack.push(Task::Search(i + 1, idx.right[i] - 1));
                }
                while let Some(task) = stack.pop() {
                    match task {
                        Task::Emit(j) => report(i, j),
                        Task::Search(j1, j2) => {
                            if j1 > j2 {
                                continue;
                            }
                            let (v, pos) = idx.rmq(j1, j2);
                            if v >= i {
                                continue;
                            }
                            // In-order: left range, the found end, right range.
                            if pos < j2 {
                                stack.push(Task::Search(pos + 1, j2));
                            }
                            stack.push(Task::Emit(pos));
                            if j1 < pos {
                                stack.push(Task::Search(j1, pos - 1));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Materialized variant of [`enumerate_pssf_with`].
pub fn enumerate_pssf(w: &Word, kind: PsfKind) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    enumerate_pssf_with(w, kind, |i, j| out.push((i, j)))?;
    Ok(out)
}

/// Number of factors free of both a square prefix and a square suffix,
/// without enumerating them; O(n log n).
///
/// Counts the complement: factors starting with a square
/// (`Σ (n + 1 - right[i])`), plus factors ending with a square but not
/// starting with one. For the latter, a tree over `T[j] = |{i processed |
/// right[i] = j}|` is queried once per position: when the sweep reaches the
/// positions `i` with `left[i] = k`, `sum(i + 1, n)` counts exactly the
/// starts `j' <= k` whose shortest square ends beyond `i`.
pub fn count_pssf(w: &Word) -> Result<u64> {
    let n = w.len();
    let idx = build_psf_index(w)?;
    let total = (n as u64) * (n as u64 + 1) / 2;
    let start_with_square: u64 = (1..=n).map(|i| (n + 1 - idx.right[i]) as u64).sum();

    let mut by_left: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for i in 1..=n {
        if idx.left[i] >= 1 {
            by_left[idx.left[i]].push(i as u32);
        }
    }
    // Slot n + 1 holds the starts with no square at all, which also count
    // as "shortest square ends beyond i".
    let mut t = SegTree::new(n + 1);
    let mut end_only: u64 = 0;
    for k in 1..=n {
        t.add(idx.right[k], idx.right[k], 1)?;
        for &i in &by_left[k] {
            let i = i as usize;
            end_only += t.sum(i + 1, n + 1)? as u64;
        }
    }
    Ok(total - start_with_square - end_only)
}

/// A longest factor free at both ends, as `(start, end)`; O(n).
///
/// One left-to-right sweep maintains the rightmost end `j` reachable by a
/// factor starting at an already-considered position; at each start `i` the
/// end is pushed right through repeated range-minimum queries on `left`
/// over `(j, right[i])`. Every position answers at most one such query, so
/// the query count is linear.
pub fn longest_pssf(w: &Word) -> Result<(usize, usize)> {
    let idx = build_psf_index(w)?;
    let n = idx.n;
    let mut best = (1usize, 1usize);
    let mut j = 0usize;
    for i in 1..=n {
        let hi = (idx.right[i] - 1).min(n);
        loop {
            let lo = (j + 1).max(i);
            if lo > hi {
                break;
            }
            let (v, pos) = idx.rmq(lo, hi);
            if v >= i {
                break;
            }
            j = pos;
            if j - i > best.1 - best.0 {
                best = (i, j);
            }
        }
    }
    Ok(best)
}

/// A longest factor that derives `w` by iterated prefix/suffix square
/// completions and is itself free of square ends (so no completion can be
/// undone inside it); O(n log n).
///
/// For each start `i` the derivable ends form the upward-closed interval
/// `[need[i], n]` at that occurrence, so a segment tree holding 0 exactly at
/// the suffix-square-free ends (`left[j] < i`, maintained as `i` sweeps) is
/// queried for its rightmost zero in `[max(i, need[i]), right[i] - 1]`. A
/// longest such factor at *some* occurrence settles the content-level
/// optimum too: a derivation from any equal-content factor runs in place at
/// one of its occurrences, and freeness depends only on the content.
pub fn longest_primitive_pssc_ancestor(w: &Word) -> Result<(usize, usize)> {
    let idx = build_psf_index(w)?;
    let n = idx.n;
    let need = pssc_inplace_ends(w)?;
    let mut by_left: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for j in 1..=n {
        if idx.left[j] >= 1 {
            by_left[idx.left[j]].push(j as u32);
        }
    }
    // value 0 at j <=> left[j] < i for the current sweep position i.
    let init: Vec<i64> = (1..=n).map(|j| i64::from(idx.left[j] >= 1)).collect();
    let mut t = SegTree::from_values(&init);
    let mut best: Option<(usize, usize)> = None;
    for i in 1..=n {
        if i >= 2 {
            for &j in &by_left[i - 1] {
                t.add(j as usize, j as usize, -1)?;
            }
        }
        if need[i] > n {
            continue;
        }
        let lo = need[i].max(i);
        let hi = (idx.right[i] - 1).min(n);
        if lo > hi {
            continue;
        }
        if let Some(j) = t.rightmost_zero(lo, hi)? {
            if best.is_none_or(|(bi, bj)| j - i > bj - bi) {
                best = Some((i, j));
            }
        }
    }
    // Some minimal ancestor is always square-end free (otherwise undoing
    // the closing completion would yield a shorter one), so a candidate
    // exists for every nonempty word.
    best.ok_or(Error::EmptyInput)
}

/// How a factor of a [`Factorization`] is justified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorTag {
    /// Even length, first half equals second half.
    Square,
    /// Period at most half the length.
    Run,
    /// No structural claim.
    Plain,
}

/// A contiguous exact cover of a word by tagged factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// `(start, end, tag)` triples, 1-based inclusive, in order.
    pub factors: Vec<(usize, usize, FactorTag)>,
}

impl Factorization {
    /// Number of factors tagged as squares.
    pub fn square_count(&self) -> usize {
        self.factors
            .iter()
            .filter(|f| f.2 == FactorTag::Square)
            .count()
    }

    /// Verifies contiguity and every structural tag against `w`.
    pub fn check(&self, w: &Word) -> Result<()> {
        let n = w.len();
        let mut at = 1usize;
        for &(i, j, tag) in &self.factors {
            if i != at || j < i || j > n {
                return Err(Error::InvalidInput(format!(
                    "factor ({i}, {j}) breaks the cover at {at}"
                )));
            }
            let syms = &w.symbols()[i - 1..j];
            let l = j - i + 1;
            let ok = match tag {
                FactorTag::Square => l % 2 == 0 && syms[..l / 2] == syms[l / 2..],
                FactorTag::Run => crate::index::period(syms) * 2 <= l,
                FactorTag::Plain => true,
            };
            if !ok {
                return Err(Error::InvalidInput(format!(
                    "factor ({i}, {j}) fails its {tag:?} tag"
                )));
            }
            at = j + 1;
        }
        if at != n + 1 {
            return Err(Error::InvalidInput(format!("cover stops at {at}")));
        }
        Ok(())
    }
}

/// Factors `w` into squares, if possible; O(n log n).
///
/// If any square factorization exists, one using only primitively rooted
/// squares exists (a non-primitive square splits into primitive ones), so a
/// right-to-left reachability pass over the O(log n) primitively rooted
/// squares per start suffices. Among the feasible first squares at each
/// position the shortest is stored, making the output deterministic.
pub fn factor_into_squares(w: &Word) -> Result<Option<Factorization>> {
    let n = w.len();
    let lists = prim_squares(w, n)?;
    // succ[i] = end of the first square of a factorization of w[i..n].
    let mut succ = vec![0usize; n + 2];
    let mut can = vec![false; n + 2];
    can[n + 1] = true;
    for i in (1..=n).rev() {
        for &p in &lists.by_start[i] {
            let j = i + 2 * p as usize - 1;
            if j <= n && can[j + 1] {
                succ[i] = j;
                can[i] = true;
                break;
            }
        }
    }
    if !can[1] {
        return Ok(None);
    }
    let mut factors = Vec::new();
    let mut i = 1;
    while i <= n {
        factors.push((i, succ[i], FactorTag::Square));
        i = succ[i] + 1;
    }
    Ok(Some(Factorization { factors }))
}

/// A factorization of `w` maximizing the number of square factors; O(n).
///
/// Any factorization can be normalized without losing squares so that every
/// square factor is the shortest square at its start and every non-square
/// factor has length 1, so a two-choice dynamic program (shortest square at
/// `i`, or a singleton) over `right` is optimal.
pub fn max_square_factorization(w: &Word) -> Result<Factorization> {
    let n = w.len();
    let (_, right, _) = compute_boundary_tables(w)?;
    // best[i] = max square count over factorizations of w[i..n].
    let mut best = vec![0usize; n + 2];
    let mut first_end = vec![0usize; n + 1];
    for i in (1..=n).rev() {
        let single = best[i + 1];
        let mut pick = (single, i);
        if right[i] <= n {
            let sq = best[right[i] + 1] + 1;
            if sq > single {
                pick = (sq, right[i]);
            }
        }
        best[i] = pick.0;
        first_end[i] = pick.1;
    }
    let mut factors = Vec::new();
    let mut i = 1;
    while i <= n {
        let j = first_end[i];
        let tag = if j > i { FactorTag::Square } else { FactorTag::Plain };
        factors.push((i, j, tag));
        i = j + 1;
    }
    Ok(Factorization { factors })
}

/// Factors `w` into runs (period at most half the length), if possible;
/// O(n) after the run computation.
///
/// If the prefix `w[1..i]` is coverable and a maximal run `[s, f]` of
/// period `p` satisfies `s <= i + 1` and `i + 2p <= f`, every prefix
/// `w[1..m]` with `m` in `[i + 2p, f]` is coverable. The newly coverable
/// positions are claimed once each through an interval union-find, and each
/// run is examined at the first coverable position it touches.
pub fn factor_into_runs(w: &Word) -> Result<Option<Factorization>> {
    let n = w.len();
    let mut runs = compute_runs(w)?;
    runs.sort_by_key(|r| r.i);
    // prev[m] = coverable prefix end from which w[prev[m]+1 ..= m] is a run.
    const UNSET: usize = usize::MAX;
    let mut prev = vec![UNSET; n + 1];
    // Marked positions are merged rightward, so `find(q).1` is the first
    // unmarked position at or after q.
    let mut uf = IntervalUnionFind::new(n + 1);
    let mut marked = vec![false; n + 2];
    let mut ptr = 0usize;
    let mut i = 0usize;
    loop {
        while ptr < runs.len() && runs[ptr].i <= i + 1 {
            let r = &runs[ptr];
            ptr += 1;
            let lo = i + 2 * r.p;
            if lo > r.j {
                continue;
            }
            let mut q = lo;
            while q <= r.j {
                let (_, top) = uf.find(q)?;
                let u = if marked[q] { top } else { q };
                if u > r.j {
                    break;
                }
                if !marked[u] {
                    marked[u] = true;
                    prev[u] = i;
                    uf.union_with_right(u)?;
                }
                q = u + 1;
            }
        }
        // Advance to the next coverable prefix end.
        i += 1;
        while i <= n && prev[i] == UNSET {
            i += 1;
        }
        if i > n {
            break;
        }
    }
    if n == 0 || prev[n] == UNSET {
        return Ok(None);
    }
    let mut factors = Vec::new();
    let mut m = n;
    while m > 0 {
        factors.push((prev[m] + 1, m, FactorTag::Run));
        m = prev[m];
    }
    factors.reverse();
    Ok(Some(Factorization { factors }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::{oracle_ancestor_coords, Op};

    fn binary_words(n: usize) -> impl Iterator<Item = Word> {
        (0..(1u32 << n)).map(move |bits| {
            Word::from(
                (0..n)
                    .map(|i| ((bits >> i) & 1) + 'a' as u32)
                    .collect::<Vec<u32>>(),
            )
        })
    }

    fn random_word(seed: &mut u64, n: usize, sigma: u32) -> Word {
        Word::from(
            (0..n)
                .map(|_| {
                    *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    ((*seed >> 33) as u32) % sigma + 'a' as u32
                })
                .collect::<Vec<u32>>(),
        )
    }

    fn has_square_prefix(syms: &[u32]) -> bool {
        (1..=syms.len() / 2).any(|l| syms[..l] == syms[l..2 * l])
    }

    fn has_square_suffix(syms: &[u32]) -> bool {
        let n = syms.len();
        (1..=n / 2).any(|l| syms[n - 2 * l..n - l] == syms[n - l..])
    }

    fn naive_free(w: &Word, i: usize, j: usize, kind: PsfKind) -> bool {
        let syms = &w.symbols()[i - 1..j];
        match kind {
            PsfKind::Prefix => !has_square_prefix(syms),
            PsfKind::Suffix => !has_square_suffix(syms),
            PsfKind::Both => !has_square_prefix(syms) && !has_square_suffix(syms),
        }
    }

    #[test]
    fn queries_match_direct_scan() {
        for n in 1..=12 {
            for w in binary_words(n) {
                let idx = build_psf_index(&w).unwrap();
                for i in 1..=n {
                    for j in i..=n {
                        for kind in [PsfKind::Prefix, PsfKind::Suffix, PsfKind::Both] {
                            assert_eq!(
                                idx.psf_query(i, j, kind).unwrap(),
                                naive_free(&w, i, j, kind),
                                "{w:?} ({i},{j}) {kind:?}"
                            );
                        }
                    }
                }
            }
        }
        let idx = build_psf_index(&Word::from_str("aa")).unwrap();
        assert!(!idx.psf_query(1, 2, PsfKind::Prefix).unwrap());
        assert!(idx.psf_query(0, 1, PsfKind::Both).is_err());
    }

    #[test]
    fn enumeration_matches_direct_scan() {
        for n in 1..=11 {
            for w in binary_words(n) {
                for kind in [PsfKind::Prefix, PsfKind::Suffix, PsfKind::Both] {
                    let got = enumerate_pssf(&w, kind).unwrap();
                    let mut expect = Vec::new();
                    for i in 1..=n {
                        for j in i..=n {
                            if naive_free(&w, i, j, kind) {
                                expect.push((i, j));
                            }
                        }
                    }
                    let mut sorted = got.clone();
                    sorted.sort_unstable();
                    assert_eq!(sorted, expect, "{w:?} {kind:?}");
                    if kind == PsfKind::Both {
                        // Two-sided output is already ordered by start, end.
                        assert_eq!(got, expect, "{w:?} order");
                    }
                }
            }
        }
        assert_eq!(
            enumerate_pssf(&Word::from_str("aa"), PsfKind::Both).unwrap(),
            vec![(1, 1), (2, 2)]
        );
    }

    #[test]
    fn counting_matches_enumeration() {
        for n in 1..=11 {
            for w in binary_words(n) {
                assert_eq!(
                    count_pssf(&w).unwrap(),
                    enumerate_pssf(&w, PsfKind::Both).unwrap().len() as u64,
                    "{w:?}"
                );
            }
        }
        let mut seed = 0xfeed_5eed;
        for _ in 0..120 {
            let n = 2 + (seed % 299) as usize;
            let sigma = 2 + (seed % 3) as u32;
            let w = random_word(&mut seed, n, sigma);
            assert_eq!(
                count_pssf(&w).unwrap(),
                enumerate_pssf(&w, PsfKind::Both).unwrap().len() as u64
            );
        }
        // A square-free word has all n(n+1)/2 factors two-sided free.
        let sf = Word::from_str("abcbabcacb");
        assert_eq!(count_pssf(&sf).unwrap(), 55);
        assert_eq!(count_pssf(&Word::from_str("aa")).unwrap(), 2);
    }

    #[test]
    fn longest_factor_matches_enumeration() {
        for n in 1..=12 {
            for w in binary_words(n) {
                let (i, j) = longest_pssf(&w).unwrap();
                assert!(naive_free(&w, i, j, PsfKind::Both), "{w:?} ({i},{j})");
                let max = enumerate_pssf(&w, PsfKind::Both)
                    .unwrap()
                    .iter()
                    .map(|&(a, b)| b - a)
                    .max()
                    .unwrap();
                assert_eq!(j - i, max, "{w:?}");
            }
        }
        assert_eq!(longest_pssf(&Word::from_str("aabb")).unwrap(), (2, 3));
        assert_eq!(longest_pssf(&Word::from_str("abcbabcacb")).unwrap(), (1, 10));
    }

    #[test]
    fn longest_primitive_completion_ancestor_matches_oracle() {
        for n in 1..=10 {
            for w in binary_words(n) {
                let (i, j) = longest_primitive_pssc_ancestor(&w).unwrap();
                let coords = oracle_ancestor_coords(Op::pssc(), &w);
                let max = coords
                    .iter()
                    .filter(|&&(a, b)| naive_free(&w, a, b, PsfKind::Both))
                    .map(|&(a, b)| b - a)
                    .max()
                    .unwrap();
                assert!(coords.contains(&(i, j)), "{w:?} ({i},{j}) not an ancestor");
                assert!(naive_free(&w, i, j, PsfKind::Both), "{w:?} ({i},{j})");
                assert_eq!(j - i, max, "{w:?}");
            }
        }
        let w = Word::from_str("abcbabcacb");
        assert_eq!(longest_primitive_pssc_ancestor(&w).unwrap(), (1, 10));
        let (i, j) = longest_primitive_pssc_ancestor(&Word::from_str("aaaa")).unwrap();
        assert_eq!(j - i, 0);
    }

    fn naive_square_cover(syms: &[u32]) -> bool {
        let n = syms.len();
        let mut can = vec![false; n + 1];
        can[n] = true;
        for i in (0..n).rev() {
            for l in 1..=(n - i) / 2 {
                if syms[i..i + l] == syms[i + l..i + 2 * l] && can[i + 2 * l] {
                    can[i] = true;
                    break;
                }
            }
        }
        can[0]
    }

    #[test]
    fn square_factorization_matches_reachability() {
        for n in 1..=14 {
            for w in binary_words(n) {
                let got = factor_into_squares(&w).unwrap();
                assert_eq!(
                    got.is_some(),
                    naive_square_cover(w.symbols()),
                    "{w:?}"
                );
                if let Some(f) = got {
                    f.check(&w).unwrap();
                    assert!(f.factors.iter().all(|x| x.2 == FactorTag::Square));
                }
            }
        }
        let f = factor_into_squares(&Word::from_str("aabb")).unwrap().unwrap();
        assert_eq!(
            f.factors,
            vec![(1, 2, FactorTag::Square), (3, 4, FactorTag::Square)]
        );
        assert!(factor_into_squares(&Word::from_str("aab")).unwrap().is_none());
    }

    fn naive_max_squares(syms: &[u32]) -> usize {
        let n = syms.len();
        let mut best = vec![0usize; n + 1];
        for i in (0..n).rev() {
            best[i] = best[i + 1];
            for l in 1..=(n - i) / 2 {
                if syms[i..i + l] == syms[i + l..i + 2 * l] {
                    best[i] = best[i].max(best[i + 2 * l] + 1);
                }
            }
        }
        best[0]
    }

    #[test]
    fn max_square_count_matches_quadratic_search() {
        for n in 1..=12 {
            for w in binary_words(n) {
                let f = max_square_factorization(&w).unwrap();
                f.check(&w).unwrap();
                assert_eq!(f.square_count(), naive_max_squares(w.symbols()), "{w:?}");
                if let Some(sq) = factor_into_squares(&w).unwrap() {
                    assert!(f.square_count() >= sq.square_count());
                }
            }
        }
        assert_eq!(
            max_square_factorization(&Word::from_str("aabb"))
                .unwrap()
                .square_count(),
            2
        );
        let sf = max_square_factorization(&Word::from_str("abcbabcacb")).unwrap();
        assert_eq!(sf.square_count(), 0);
        assert_eq!(sf.factors.len(), 10);
    }

    fn naive_run_cover(syms: &[u32]) -> bool {
        let n = syms.len();
        let mut can = vec![false; n + 1];
        can[0] = true;
        for m in 1..=n {
            for i in 0..m {
                if can[i] && crate::index::period(&syms[i..m]) * 2 <= m - i {
                    can[m] = true;
                    break;
                }
            }
        }
        can[n]
    }

    #[test]
    fn run_factorization_matches_reachability() {
        for n in 1..=13 {
            for w in binary_words(n) {
                let got = factor_into_runs(&w).unwrap();
                assert_eq!(got.is_some(), naive_run_cover(w.symbols()), "{w:?}");
                if let Some(f) = got {
                    f.check(&w).unwrap();
                }
            }
        }
        let f = factor_into_runs(&Word::from_str("aaaa")).unwrap().unwrap();
        assert_eq!(f.factors, vec![(1, 4, FactorTag::Run)]);
        assert!(factor_into_runs(&Word::from_str("abcbabcacb"))
            .unwrap()
            .is_none());
    }
}
