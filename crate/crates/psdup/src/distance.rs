//! Distances under bounded duplication and square completion: per-prefix
//! and per-suffix duplication distance tables, the pairwise bounded
//! distance, the suffix-completion distance table, and the quadratic
//! prefix-suffix completion distance.

use std::collections::VecDeque;

use crate::index::find_occurrences;
use crate::squares::{compute_boundary_tables, compute_runs_bounded, Run};
use crate::{Error, Result, Word};

/// Infinity sentinel for distance values.
pub const INF: u32 = u32::MAX;

/// Default length cap for the quadratic completion-distance matrix.
pub const PSSC_DISTANCE_CAP: usize = 6000;

/// Which end duplications act on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Suffix,
    Prefix,
}

/// Distance table under one-sided bounded duplication.
///
/// For `Side::Suffix`, entry `i` is the minimum number of suffix
/// duplications of blocks at most `k` turning `w[1..=i]` into `w`
/// ([`INF`] if unreachable); for `Side::Prefix`, the same for the suffix
/// `w[i..=n]` under prefix duplications. Index 0 is unused.
pub fn dup_distance_tables(w: &Word, k: usize, side: Side) -> Result<Vec<u32>> {
    let n = w.len();
    if n == 0 || k == 0 {
        return Err(Error::EmptyInput);
    }
    if n < k {
        return Err(Error::OutOfRange(format!("bound {k} exceeds length {n}")));
    }
    match side {
        Side::Suffix => Ok(sdd_table(w, k)?),
        Side::Prefix => {
            let mut rev = sdd_table(&w.reversed(), k)?;
            rev[1..].reverse();
            Ok(rev)
        }
    }
}

/// The suffix-duplication table via the repetition-deque dynamic program.
///
/// One suffix duplication from prefix length `i` to length `j` appends a
/// block whose square sits inside a maximal repetition of primitive period
/// `p` dividing `j - i`; processing `i` downward, each repetition keeps one
/// monotone deque per residue class modulo `p` holding candidate targets
/// `(j, SDD[j])` with `SDD` decreasing towards the back, so the best
/// reachable target is always at the back after pruning targets that moved
/// out of range (the range bound is non-increasing as `i` decreases).
fn sdd_table(w: &Word, k: usize) -> Result<Vec<u32>> {
    let n = w.len();
    let runs = compute_runs_bounded(w, k)?;
    let mut sdd = vec![INF; n + 1];
    sdd[n] = 0;
    run_distance_sweep(&runs, n, k, &mut sdd);
    Ok(sdd)
}

/// Core deque sweep shared with the tests' reference variant; fills `sdd`
/// downward from position `n` (already seeded with 0).
fn run_distance_sweep(runs: &[Run], n: usize, k: usize, sdd: &mut [u32]) {
    // Deques indexed per (run, residue class mod p).
    let mut offset = Vec::with_capacity(runs.len() + 1);
    let mut total = 0usize;
    for r in runs {
        offset.push(total);
        total += r.p;
    }
    offset.push(total);
    let mut deques: Vec<VecDeque<(u32, u32)>> = vec![VecDeque::new(); total];

    // query[i]: runs usable as the step's repetition from prefix length i
    // (one whole root before and after i); insert[i]: runs for which i is a
    // possible step target (at least two roots of the repetition end at i).
    let mut query: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    let mut insert: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for (id, r) in runs.iter().enumerate() {
        for i in r.i + r.p - 1..=r.j - r.p {
            query[i].push(id as u32);
        }
        for i in r.i + 2 * r.p - 1..=r.j {
            insert[i].push(id as u32);
        }
    }

    for i in (1..=n).rev() {
        if i < n {
            let mut best = INF;
            for &id in &query[i] {
                let r = &runs[id as usize];
                let p = r.p;
                let d = &mut deques[offset[id as usize] + i % p];
                // Largest target: at most k symbols appended, at most as
                // many as the repetition holds on either side of i.
                let jmax = (i + p * (k / p))
                    .min(i + p * ((i - r.i + 1) / p))
                    .min(r.j - (r.j - i) % p);
                while d.back().is_some_and(|&(j, _)| j as usize > jmax) {
                    d.pop_back();
                }
                if let Some(&(_, v)) = d.back() {
                    best = best.min(v.saturating_add(1));
                }
            }
            sdd[i] = best;
        }
        if sdd[i] == INF {
            continue;
        }
        for &id in &insert[i] {
            let r = &runs[id as usize];
            let d = &mut deques[offset[id as usize] + i % r.p];
            while d.front().is_some_and(|&(_, v)| v >= sdd[i]) {
                d.pop_front();
            }
            d.push_front((i as u32, sdd[i]));
        }
    }
}

/// Straightforward quadratic counterpart of [`dup_distance_tables`] used
/// for differential testing: tries every legal appended block explicitly.
pub fn dup_distance_tables_naive(w: &Word, k: usize, side: Side) -> Result<Vec<u32>> {
    let n = w.len();
    if n == 0 || k == 0 {
        return Err(Error::EmptyInput);
    }
    if n < k {
        return Err(Error::OutOfRange(format!("bound {k} exceeds length {n}")));
    }
    let word = match side {
        Side::Suffix => w.clone(),
        Side::Prefix => w.reversed(),
    };
    let s = word.symbols();
    let mut sdd = vec![INF; n + 1];
    sdd[n] = 0;
    for i in (1..n).rev() {
        for l in 1..=k.min(i).min(n - i) {
            if s[i - l..i] == s[i..i + l] && sdd[i + l] != INF {
                sdd[i] = sdd[i].min(sdd[i + l] + 1);
            }
        }
    }
    if side == Side::Prefix {
        sdd[1..].reverse();
    }
    Ok(sdd)
}

/// Minimum number of bounded prefix-suffix duplication steps turning `x`
/// into `w`, or [`INF`].
///
/// Derivations normalize to suffix steps followed by prefix steps, so for
/// `|x| >= k` the distance through an occurrence `(i, j)` is
/// `SDD[j] + PDD[i]`. Shorter `x` first pays the exact number of steps `d`
/// to reach some intermediate factor of length in `[k, 2k]`.
pub fn bpsd_distance(x: &Word, w: &Word, k: usize) -> Result<u32> {
    let n = w.len();
    let m = x.len();
    if m == 0 || k == 0 {
        return Err(Error::EmptyInput);
    }
    if m > n {
        return Err(Error::OutOfRange(format!(
            "source length {m} exceeds target length {n}"
        )));
    }
    if n < k {
        return Err(Error::OutOfRange(format!("bound {k} exceeds length {n}")));
    }
    let occs = find_occurrences(w.symbols(), x.symbols());
    if occs.is_empty() {
        return Ok(INF);
    }
    let sdd = dup_distance_tables(w, k, Side::Suffix)?;
    let pdd = dup_distance_tables(w, k, Side::Prefix)?;
    let combine = |i: usize, j: usize, d: u32| -> u32 {
        if d == INF || sdd[j] == INF || pdd[i] == INF {
            INF
        } else {
            sdd[j] + pdd[i] + d
        }
    };
    if m >= k {
        return Ok(occs
            .iter()
            .map(|&i| combine(i, i + m - 1, 0))
            .min()
            .unwrap_or(INF));
    }

    // Exact step counts from x to every factor of length up to 2k; steps
    // strictly increase length, and distance is a property of the factor's
    // content, so each length level takes one relaxation pass followed by a
    // minimum over equal-content occurrences.
    let dist = short_factor_distances(w, x, k)?;
    let max_len = (2 * k).min(n);
    let mut best = if n <= max_len { dist[n][1] } else { INF };
    for l in k..=max_len {
        for i in 1..=n + 1 - l {
            best = best.min(combine(i, i + l - 1, dist[l][i]));
        }
    }
    Ok(best)
}

/// `dist[l][i]` — exact bounded prefix-suffix duplication distance from `x`
/// to the content of `w[i..i+l-1]`, for `l` up to `min(2k, n)`.
fn short_factor_distances(w: &Word, x: &Word, k: usize) -> Result<Vec<Vec<u32>>> {
    let n = w.len();
    let m = x.len();
    let max_len = (2 * k).min(n);
    let idx = crate::index::build_index(w)?;
    let mut dist: Vec<Vec<u32>> = (0..=max_len)
        .map(|l| vec![INF; n + 2 - l.min(n + 1)])
        .collect();
    if m <= max_len {
        for i in find_occurrences(w.symbols(), x.symbols()) {
            dist[m][i] = 0;
        }
    }
    let sa = idx.sa();
    let lcp = idx.lcp_array();
    for l in 1..=max_len {
        for i in 1..=n + 1 - l {
            // One undone duplication removes a block of any length a <= k
            // with 2a <= l; the block need not be primitively rooted, so
            // every arm is probed directly with a constant-time extension
            // query.
            let e = i + l - 1;
            let mut step = INF;
            for a in 1..=(l / 2).min(k) {
                if idx.lcp(i, i + a) >= a {
                    step = step.min(dist[l - a][i + a]);
                }
                if idx.lcp(e - 2 * a + 1, e - a + 1) >= a {
                    step = step.min(dist[l - a][i]);
                }
            }
            if step != INF {
                dist[l][i] = dist[l][i].min(step + 1);
            }
        }
        // Equal-content closure: spread the minimum over each suffix-array
        // group sharing the first l symbols.
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
            if let Some(m0) = group().map(|p| dist[l][p]).min() {
                if m0 != INF {
                    for p in group() {
                        dist[l][p] = m0;
                    }
                }
            }
            r = r2 + 1;
        }
    }
    Ok(dist)
}

/// `SSCD[i]` — minimum number of suffix square completions turning
/// `w[1..=i]` into `w`, or [`INF`]; index 0 unused.
///
/// One completion reaches `w[1..=j]` from `w[1..=i]` exactly when a square
/// of arm at least `j - i` ends at `j`, so the prefixes within distance `d`
/// form a growing suffix of positions delimited by a `Limit` array, each
/// new border being the minimum of `j - arm(j)` over the newly reachable
/// window.
pub fn sscd_table(w: &Word) -> Result<Vec<u32>> {
    let n = w.len();
    let (_, _, max_sq_end) = compute_boundary_tables(w)?;
    let mut sscd = vec![INF; n + 1];
    sscd[n] = 0;
    // Positions at distance at most d form the suffix [lo, n]; each round
    // scans only the newly reachable window, carrying the running minimum
    // of j - arm(j) over everything scanned so far.
    let mut lo = n;
    let mut hi = n;
    let mut reach = usize::MAX;
    let mut d = 0u32;
    loop {
        for j in lo..=hi {
            let arm = max_sq_end[j] / 2;
            if arm > 0 {
                reach = reach.min(j - arm);
            }
        }
        if reach >= lo {
            break;
        }
        d += 1;
        for i in reach..lo {
            sscd[i] = d;
        }
        hi = lo - 1;
        lo = reach;
        if lo == 1 {
            break;
        }
    }
    Ok(sscd)
}

/// `PSCD[i]` — minimum number of prefix square completions turning
/// `w[i..=n]` into `w`; mirror of [`sscd_table`].
pub fn pscd_table(w: &Word) -> Result<Vec<u32>> {
    let mut rev = sscd_table(&w.reversed())?;
    rev[1..].reverse();
    Ok(rev)
}

/// Distance matrix from every factor of `w` to `w` under prefix-suffix
/// square completion, stored triangularly.
pub struct PsscDistances {
    n: usize,
    row: Vec<usize>,
    d: Vec<u16>,
}

impl PsscDistances {
    /// Distance from `w[i..=j]` to `w` ([`INF`] when not an ancestor).
    pub fn get(&self, i: usize, j: usize) -> u32 {
        let v = self.d[self.row[i] + (j - i)];
        if v == u16::MAX {
            INF
        } else {
            u32::from(v)
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Maximal right extensions: `ext[row(i) + (j - i)]` is the largest `l`
/// such that one suffix completion extends the factor `(i, j)` to
/// `(i, j + l)`, i.e. some square contained in `w[i..]` ends at `j + l`
/// with its first half ending by `j`.
fn max_right_extensions(w: &Word, cap_check: bool) -> Result<(Vec<usize>, Vec<u16>)> {
    let n = w.len();
    if cap_check && n > PSSC_DISTANCE_CAP {
        return Err(Error::BudgetExceeded("quadratic completion distance"));
    }
    let runs = compute_runs_bounded(w, n / 2)?;
    // Squares grouped by start position: (half-end, end) pairs.
    let mut by_start: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n + 2];
    for r in &runs {
        let (a, b, p) = (r.i, r.j, r.p);
        for s in a..=b + 1 - 2 * p {
            let mut e = s + 2 * p - 1;
            while e <= b {
                let arm = (e + 1 - s) / 2;
                by_start[s].push(((s + arm - 1) as u32, e as u32));
                e += 2 * p;
            }
        }
    }

    let mut row = vec![0usize; n + 2];
    let mut total = 0usize;
    for i in 1..=n {
        row[i] = total;
        total += n - i + 1;
    }
    let mut ext = vec![0u16; total];
    // best[h]: max end among active squares whose first half ends at h;
    // activating starts in decreasing i keeps "start >= i" implicit.
    let mut best = vec![0u32; n + 1];
    let mut prefix = vec![0u32; n + 1];
    for i in (1..=n).rev() {
        for &(h, e) in &by_start[i] {
            let h = h as usize;
            if e > best[h] {
                best[h] = e;
            }
        }
        let mut running = 0u32;
        for j in i..=n {
            running = running.max(best[j]);
            prefix[j] = running;
        }
        for j in i..=n {
            let l = (prefix[j] as usize).saturating_sub(j);
            ext[row[i] + (j - i)] = l as u16;
        }
    }
    Ok((row, ext))
}

/// Distances from all factors to `w` under prefix-suffix square
/// completion, in quadratic time and space.
///
/// From a factor only the farthest one-step extension on each side needs an
/// edge: a longer factor is never farther from `w` than a contained one, so
/// `d(i,j) = 1 + min(d(i, j + R), d(i - L, j))` with `R`, `L` the maximal
/// single-step extensions.
pub fn pssc_distances(w: &Word) -> Result<PsscDistances> {
    let n = w.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let (row, right) = max_right_extensions(w, true)?;
    let (_, right_rev) = max_right_extensions(&w.reversed(), false)?;
    // Left extension of (i, j) = right extension of the mirrored factor.
    let left = |i: usize, j: usize| right_rev[row[n + 1 - j] + (j - i)] as usize;

    let mut d = vec![u16::MAX; row[n] + 1];
    d[row[1] + (n - 1)] = 0;
    for j in (1..=n).rev() {
        for i in 1..=j {
            if i == 1 && j == n {
                continue;
            }
            let r = right[row[i] + (j - i)] as usize;
            let l = left(i, j);
            let mut best = u16::MAX;
            if r > 0 {
                best = best.min(d[row[i] + (j + r - i)]);
            }
            if l > 0 {
                best = best.min(d[row[i - l] + (j - (i - l))]);
            }
            if best != u16::MAX {
                d[row[i] + (j - i)] = best + 1;
            }
        }
    }
    // Distance is a property of the factor's content, and any optimal
    // derivation runs in place at one occurrence, so the exact value at
    // every coordinate is the minimum of the in-place values over all
    // occurrences of the same factor: spread that minimum over each
    // suffix-array group per length.
    let idx = crate::index::build_index(w)?;
    let sa = idx.sa();
    let lcp = idx.lcp_array();
    for l in 1..=n {
        let mut r = 0usize;
        while r < n {
            let mut r2 = r;
            while r2 + 1 < n && lcp[r2 + 1] as usize >= l {
                r2 += 1;
            }
            if r2 > r {
                let starts = || {
                    sa[r..=r2]
                        .iter()
                        .map(|&p| p as usize)
                        .filter(|&p| p + l - 1 <= n)
                };
                let m0 = starts().map(|p| d[row[p] + l - 1]).min().unwrap_or(u16::MAX);
                if m0 != u16::MAX {
                    for p in starts() {
                        d[row[p] + l - 1] = m0;
                    }
                }
            }
            r = r2 + 1;
        }
    }
    Ok(PsscDistances { n, row, d })
}

/// Minimum number of prefix-suffix square completions turning `x` into
/// `w`, or [`INF`].
pub fn pssc_distance(x: &Word, w: &Word) -> Result<u32> {
    let m = x.len();
    if m == 0 {
        return Err(Error::EmptyInput);
    }
    if m > w.len() {
        return Err(Error::OutOfRange(format!(
            "source length {m} exceeds target length {}",
            w.len()
        )));
    }
    let occs = find_occurrences(w.symbols(), x.symbols());
    if occs.is_empty() {
        return Ok(INF);
    }
    let dm = pssc_distances(w)?;
    Ok(occs
        .into_iter()
        .map(|i| dm.get(i, i + m - 1))
        .min()
        .unwrap_or(INF))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::Family;
    use crate::ops::{self, Op};

    fn binary_words(n: usize) -> impl Iterator<Item = Word> {
        (0..(1u32 << n)).map(move |bits| {
            Word::from(
                (0..n)
                    .map(|i| ((bits >> i) & 1) + 'a' as u32)
                    .collect::<Vec<u32>>(),
            )
        })
    }

    fn to_opt(v: u32) -> Option<usize> {
        if v == INF {
            None
        } else {
            Some(v as usize)
        }
    }

    #[test]
    fn sdd_examples() {
        let t = dup_distance_tables(&Word::from_str("aaaa"), 2, Side::Suffix).unwrap();
        assert_eq!(&t[1..], &[2, 1, 1, 0]);
        let t = dup_distance_tables(&Word::from_str("aaaa"), 2, Side::Prefix).unwrap();
        assert_eq!(&t[1..], &[0, 1, 1, 2]);
        let t = dup_distance_tables(&Word::from_str("ababb"), 2, Side::Suffix).unwrap();
        assert_eq!(to_opt(t[2]), Some(2));
    }

    #[test]
    fn dup_tables_match_oracle() {
        for n in 1..=10 {
            for w in binary_words(n) {
                for k in 1..=3.min(n) {
                    let fast = dup_distance_tables(&w, k, Side::Suffix).unwrap();
                    let naive = dup_distance_tables_naive(&w, k, Side::Suffix).unwrap();
                    assert_eq!(fast, naive, "naive {w:?} k={k}");
                    for i in 1..=n {
                        let expect = ops::oracle_distance(
                            Op::new(Family::Sd, Some(k)),
                            &w.factor(1, i),
                            &w,
                        );
                        assert_eq!(to_opt(fast[i]), expect, "{w:?} k={k} i={i}");
                    }
                    let fast = dup_distance_tables(&w, k, Side::Prefix).unwrap();
                    assert_eq!(
                        fast,
                        dup_distance_tables_naive(&w, k, Side::Prefix).unwrap()
                    );
                    for i in 1..=n {
                        let expect = ops::oracle_distance(
                            Op::new(Family::Pd, Some(k)),
                            &w.factor(i, n),
                            &w,
                        );
                        assert_eq!(to_opt(fast[i]), expect, "P {w:?} k={k} i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn bpsd_distance_examples() {
        assert_eq!(
            bpsd_distance(&Word::from_str("ab"), &Word::from_str("abab"), 2).unwrap(),
            1
        );
        let w = Word::from_str("abab");
        assert_eq!(bpsd_distance(&w, &w, 2).unwrap(), 0);
        assert_eq!(
            bpsd_distance(&Word::from_str("b"), &Word::from_str("aa"), 1).unwrap(),
            INF
        );
    }

    #[test]
    fn bpsd_distance_matches_oracle() {
        for n in 1..=9 {
            for w in binary_words(n) {
                for k in 1..=3.min(n) {
                    for i in 1..=n {
                        for j in i..=n {
                            let x = w.factor(i, j);
                            let expect = ops::oracle_distance(Op::psd_k(k), &x, &w);
                            let got = bpsd_distance(&x, &w, k).unwrap();
                            assert_eq!(to_opt(got), expect, "{w:?} x={x:?} k={k}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sscd_examples() {
        let t = sscd_table(&Word::from_str("abacabac")).unwrap();
        assert_eq!(t[7], 1);
        assert_eq!(t[4], 1);
        assert_eq!(t[8], 0);
        let t = pscd_table(&Word::from_str("abacabac")).unwrap();
        assert_eq!(t[5], 1);
        let t = sscd_table(&Word::from_str("abc")).unwrap();
        assert_eq!(&t[1..], &[INF, INF, 0]);
    }

    #[test]
    fn sscd_matches_oracle() {
        let ssc = Op::new(Family::Ssc, None);
        let psc = Op::new(Family::Psc, None);
        for n in 1..=10 {
            for w in binary_words(n) {
                let t = sscd_table(&w).unwrap();
                let p = pscd_table(&w).unwrap();
                for i in 1..=n {
                    let expect = ops::oracle_distance(ssc, &w.factor(1, i), &w);
                    assert_eq!(to_opt(t[i]), expect, "S {w:?} i={i}");
                    let expect = ops::oracle_distance(psc, &w.factor(i, n), &w);
                    assert_eq!(to_opt(p[i]), expect, "P {w:?} i={i}");
                }
            }
        }
    }

    #[test]
    fn pssc_distance_examples() {
        let w = Word::from_str("abacabac");
        assert_eq!(pssc_distance(&w.factor(5, 7), &w).unwrap(), INF);
        assert_eq!(pssc_distance(&w, &w).unwrap(), 0);
        assert_eq!(
            pssc_distance(&Word::from_str("ab"), &Word::from_str("abab")).unwrap(),
            1
        );
    }

    #[test]
    fn pssc_distance_matches_oracle() {
        for n in 1..=10 {
            for w in binary_words(n) {
                let dm = pssc_distances(&w).unwrap();
                for i in 1..=n {
                    for j in i..=n {
                        let expect =
                            ops::oracle_distance(Op::pssc(), &w.factor(i, j), &w);
                        assert_eq!(to_opt(dm.get(i, j)), expect, "{w:?} ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn finite_distance_bounded_by_growth() {
        for n in 1..=8 {
            for w in binary_words(n) {
                for k in 1..=2.min(n) {
                    for i in 1..=n {
                        for j in i..=n {
                            let d = bpsd_distance(&w.factor(i, j), &w, k).unwrap();
                            if d != INF {
                                assert!(d as usize <= n - (j - i + 1));
                            }
                        }
                    }
                }
            }
        }
    }
}
