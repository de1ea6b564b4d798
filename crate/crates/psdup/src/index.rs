//! Text indexes: suffix array, ranks, LCP with constant-time range queries,
//! Lempel-Ziv factorization, and the dictionary of basic factors.

use crate::word::MAX_ALPHABET;
use crate::{Error, Result, Word};

/// Suffix array construction (SA-IS, linear time).
///
/// Returns 1-based suffix start positions in lexicographic order.
pub fn suffix_array(syms: &[u32]) -> Vec<u32> {
    let n = syms.len();
    if n == 0 {
        return Vec::new();
    }
    // Shift symbols by one and append a unique smallest sentinel.
    let mut s: Vec<usize> = Vec::with_capacity(n + 1);
    s.extend(syms.iter().map(|&c| c as usize + 1));
    s.push(0);
    let alpha = syms.iter().max().map_or(0, |&m| m as usize + 1) + 1;
    let sa = sais(&s, alpha);
    // Drop the sentinel suffix and convert to 1-based positions.
    sa.into_iter()
        .filter(|&p| p < n)
        .map(|p| p as u32 + 1)
        .collect()
}

/// Core SA-IS over `s`, which must end with a unique smallest symbol.
fn sais(s: &[usize], alpha: usize) -> Vec<usize> {
    let n = s.len();
    if n == 1 {
        return vec![0];
    }
    let mut is_s = vec![false; n];
    is_s[n - 1] = true;
    for i in (0..n - 1).rev() {
        is_s[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && is_s[i + 1]);
    }
    let is_lms = |i: usize| i > 0 && is_s[i] && !is_s[i - 1];

    let mut bucket = vec![0usize; alpha + 1];
    for &c in s {
        bucket[c + 1] += 1;
    }
    for i in 0..alpha {
        bucket[i + 1] += bucket[i];
    }

    // Induced sort from a given order of the LMS positions.
    let induce = |lms: &[usize]| -> Vec<usize> {
        let mut sa = vec![usize::MAX; n];
        let mut tail: Vec<usize> = (0..alpha).map(|c| bucket[c + 1]).collect();
        for &p in lms.iter().rev() {
            let c = s[p];
            tail[c] -= 1;
            sa[tail[c]] = p;
        }
        let mut head: Vec<usize> = (0..alpha).map(|c| bucket[c]).collect();
        for i in 0..n {
            let p = sa[i];
            if p != usize::MAX && p > 0 && !is_s[p - 1] {
                let c = s[p - 1];
                sa[head[c]] = p - 1;
                head[c] += 1;
            }
        }
        let mut tail: Vec<usize> = (0..alpha).map(|c| bucket[c + 1]).collect();
        for i in (0..n).rev() {
            let p = sa[i];
            if p != usize::MAX && p > 0 && is_s[p - 1] {
                let c = s[p - 1];
                tail[c] -= 1;
                sa[tail[c]] = p - 1;
            }
        }
        sa
    };

    let lms: Vec<usize> = (1..n).filter(|&i| is_lms(i)).collect();
    let sa = induce(&lms);

    // Name the LMS substrings in sorted order.
    let sorted_lms: Vec<usize> = sa.iter().copied().filter(|&p| is_lms(p)).collect();
    let mut names = vec![usize::MAX; n];
    let mut name = 0usize;
    let mut prev = usize::MAX;
    for &p in &sorted_lms {
        if prev != usize::MAX {
            let mut d = 0usize;
            let same = loop {
                if s[prev + d] != s[p + d] || is_s[prev + d] != is_s[p + d] {
                    break false;
                }
                if d > 0 && (is_lms(prev + d) || is_lms(p + d)) {
                    break is_lms(prev + d) && is_lms(p + d);
                }
                d += 1;
            };
            if !same {
                name += 1;
            }
        }
        names[p] = name;
        prev = p;
    }

    let reduced: Vec<usize> = lms.iter().map(|&p| names[p]).collect();
    let lms_order: Vec<usize> = if name + 1 == lms.len() {
        let mut order = vec![0usize; lms.len()];
        for (idx, &nm) in reduced.iter().enumerate() {
            order[nm] = lms[idx];
        }
        order
    } else {
        sais(&reduced, name + 1)
            .into_iter()
            .map(|ri| lms[ri])
            .collect()
    };
    induce(&lms_order)
}

/// Block-decomposed range minimum structure over a `u64` array: per-block
/// minima under a sparse table, partial blocks scanned directly. Linear
/// memory, constant-time queries up to the block scans.
///
/// Queries return the minimum over a closed 0-based range; the position
/// variant breaks ties toward the rightmost minimizer.
pub struct Rmq {
    values: Vec<u64>,
    /// `levels[k][b]` = (min value, rightmost minimizer) over the blocks
    /// `[b, b + 2^k - 1]`.
    levels: Vec<Vec<(u64, u32)>>,
}

const RMQ_BLOCK: usize = 8;

impl Rmq {
    pub fn new(values: &[u64]) -> Rmq {
        let n = values.len();
        let blocks = n.div_ceil(RMQ_BLOCK);
        let mut base = Vec::with_capacity(blocks);
        for b in 0..blocks {
            let l = b * RMQ_BLOCK;
            let r = (l + RMQ_BLOCK).min(n) - 1;
            base.push(Self::scan(values, l, r));
        }
        let mut levels = vec![base];
        let mut k = 0;
        while (1usize << (k + 1)) <= blocks {
            let half = 1usize << k;
            let prev = &levels[k];
            let mut next = Vec::with_capacity(blocks - 2 * half + 1);
            for i in 0..=(blocks - 2 * half) {
                let a = prev[i];
                let b = prev[i + half];
                // Rightmost tie-break: prefer the right block on equality.
                next.push(if b.0 <= a.0 { b } else { a });
            }
            levels.push(next);
            k += 1;
        }
        Rmq {
            values: values.to_vec(),
            levels,
        }
    }

    /// Direct scan of `[l, r]`, keeping the rightmost minimizer.
    fn scan(values: &[u64], l: usize, r: usize) -> (u64, u32) {
        let mut best = (values[l], l as u32);
        for (i, &v) in values.iter().enumerate().take(r + 1).skip(l + 1) {
            if v <= best.0 {
                best = (v, i as u32);
            }
        }
        best
    }

    /// Sparse-table minimum over the closed block range `[bl, br]`.
    fn block_min(&self, bl: usize, br: usize) -> (u64, u32) {
        let k = usize::BITS as usize - 1 - (br - bl + 1).leading_zeros() as usize;
        let a = self.levels[k][bl];
        let b = self.levels[k][br + 1 - (1 << k)];
        if b.0 <= a.0 {
            b
        } else {
            a
        }
    }

    /// Minimum value over the closed 0-based range `[l, r]`.
    pub fn min(&self, l: usize, r: usize) -> u64 {
        self.min_pos(l, r).0
    }

    /// (min value, rightmost 0-based minimizer) over `[l, r]`.
    pub fn min_pos(&self, l: usize, r: usize) -> (u64, usize) {
        debug_assert!(l <= r && r < self.values.len());
        let (bl, br) = (l / RMQ_BLOCK, r / RMQ_BLOCK);
        if bl == br {
            let best = Self::scan(&self.values, l, r);
            return (best.0, best.1 as usize);
        }
        let mut best = Self::scan(&self.values, l, (bl + 1) * RMQ_BLOCK - 1);
        if br - bl >= 2 {
            let mid = self.block_min(bl + 1, br - 1);
            if mid.0 <= best.0 {
                best = mid;
            }
        }
        let tail = Self::scan(&self.values, br * RMQ_BLOCK, r);
        if tail.0 <= best.0 {
            best = tail;
        }
        (best.0, best.1 as usize)
    }
}

/// Value-only sparse-table minimum over a `u32` array; the hot path behind
/// [`TextIndex::lcp`], kept lean (4 bytes per table entry) because index
/// clients fire tens of millions of random queries.
struct MinTable {
    levels: Vec<Vec<u32>>,
}

impl MinTable {
    fn new(values: &[u32]) -> MinTable {
        let n = values.len();
        let mut levels = vec![values.to_vec()];
        let mut k = 0;
        while (1usize << (k + 1)) <= n {
            let half = 1usize << k;
            let prev = &levels[k];
            let next: Vec<u32> = (0..=(n - 2 * half))
                .map(|i| prev[i].min(prev[i + half]))
                .collect();
            levels.push(next);
            k += 1;
        }
        MinTable { levels }
    }

    fn min(&self, l: usize, r: usize) -> u32 {
        let k = usize::BITS as usize - 1 - (r - l + 1).leading_zeros() as usize;
        self.levels[k][l].min(self.levels[k][r + 1 - (1 << k)])
    }
}

/// Suffix array, inverse ranks, and LCP array with O(1) range queries.
pub struct TextIndex {
    word: Word,
    sa: Vec<u32>,
    rank: Vec<u32>,
    lcp: Vec<u32>,
    rmq: Option<MinTable>,
}

/// Suffix array (1-based positions), ranks (0-based) and adjacent-suffix
/// LCP array of `syms`, without the range-minimum structure.
pub fn sa_rank_lcp(syms: &[u32]) -> (Vec<u32>, Vec<u32>, Vec<u32>) {
    let n = syms.len();
    let sa = suffix_array(syms);
    let mut rank = vec![0u32; n];
    for (r, &p) in sa.iter().enumerate() {
        rank[(p - 1) as usize] = r as u32;
    }
    // Kasai: lcp[r] = LCP(suffix sa[r-1], suffix sa[r]) for r >= 1.
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r > 0 {
            let j = (sa[r - 1] - 1) as usize;
            while i + h < n && j + h < n && syms[i + h] == syms[j + h] {
                h += 1;
            }
            lcp[r] = h as u32;
            h = h.saturating_sub(1);
        } else {
            h = 0;
        }
    }
    (sa, rank, lcp)
}

/// Builds the [`TextIndex`] of `w`.
pub fn build_index(w: &Word) -> Result<TextIndex> {
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = w.len();
    let (sa, rank, lcp) = sa_rank_lcp(w.symbols());
    let rmq = if n > 1 { Some(MinTable::new(&lcp[1..])) } else { None };
    Ok(TextIndex {
        word: w.clone(),
        sa,
        rank,
        lcp,
        rmq,
    })
}

impl TextIndex {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Suffix array as 1-based suffix start positions.
    pub fn sa(&self) -> &[u32] {
        &self.sa
    }

    /// 0-based rank of the suffix starting at 1-based position `i`.
    pub fn rank(&self, i: usize) -> usize {
        self.rank[i - 1] as usize
    }

    /// Adjacent-suffix LCP array: `lcp_array()[r]` for r >= 1 is the LCP of
    /// the suffixes of rank r-1 and r; entry 0 is 0.
    pub fn lcp_array(&self) -> &[u32] {
        &self.lcp
    }

    /// Length of the longest common prefix of `w[i..n]` and `w[j..n]`
    /// (1-based). No bounds checking; see [`TextIndex::lcp_query`].
    pub fn lcp(&self, i: usize, j: usize) -> usize {
        let n = self.word.len();
        if i == j {
            return n - i + 1;
        }
        let (ri, rj) = (self.rank[i - 1] as usize, self.rank[j - 1] as usize);
        let (lo, hi) = if ri < rj { (ri, rj) } else { (rj, ri) };
        self.rmq.as_ref().expect("n > 1").min(lo, hi - 1) as usize
    }

    /// LCP of the suffixes of ranks `r1` and `r2` (0-based ranks).
    pub fn lcp_by_rank(&self, r1: usize, r2: usize) -> usize {
        if r1 == r2 {
            return self.word.len() + 1 - self.sa[r1] as usize;
        }
        let (lo, hi) = if r1 < r2 { (r1, r2) } else { (r2, r1) };
        self.rmq.as_ref().expect("n > 1").min(lo, hi - 1) as usize
    }

    /// Checked variant of [`TextIndex::lcp`].
    pub fn lcp_query(&self, i: usize, j: usize) -> Result<usize> {
        let n = self.word.len();
        self.word.check_range(i.min(j).max(1), n)?;
        if i < 1 || j < 1 || i > n || j > n {
            return Err(Error::OutOfRange(format!("lcp_query({i}, {j}) on n={n}")));
        }
        Ok(self.lcp(i, j))
    }

    /// True iff `w[i..=j]` equals `w[i2..=i2+(j-i)]`.
    pub fn factor_eq(&self, i: usize, j: usize, i2: usize) -> bool {
        let len = j - i + 1;
        i2 + len - 1 <= self.len() && self.lcp(i, i2) >= len
    }
}

/// Index over `w · sep · w^R` answering mixed suffix / reversed-prefix
/// queries in O(1).
///
/// The separator is a fresh symbol that sorts below every alphabet symbol
/// (internally all symbols are shifted up by one).
pub struct BidiIndex {
    n: usize,
    idx: TextIndex,
}

/// Builds the [`BidiIndex`] of `w`.
pub fn build_bidi_index(w: &Word) -> Result<BidiIndex> {
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    if w.alphabet_size() >= MAX_ALPHABET {
        return Err(Error::NoSeparator);
    }
    let n = w.len();
    // Shift the alphabet up by one so symbol 0 is free for the separator.
    let mut syms: Vec<u32> = Vec::with_capacity(2 * n + 1);
    syms.extend(w.symbols().iter().map(|&c| c + 1));
    syms.push(0);
    syms.extend(w.symbols().iter().rev().map(|&c| c + 1));
    let concat = Word::from_symbols(syms)?;
    Ok(BidiIndex {
        n,
        idx: build_index(&concat)?,
    })
}

impl BidiIndex {
    /// Position of `w[1..=i]^R` inside the concatenation (1-based).
    fn rev_prefix_pos(&self, i: usize) -> usize {
        2 * self.n + 2 - i
    }

    /// 0-based rank (list position) of the suffix `w[i..n]`.
    pub fn rank(&self, i: usize) -> usize {
        self.idx.rank(i)
    }

    /// 0-based rank (list position) of the reversed prefix `w[1..=i]^R`.
    pub fn rank_rev(&self, i: usize) -> usize {
        self.idx.rank(self.rev_prefix_pos(i))
    }

    /// |longest common prefix of `w[i..n]` and `w[1..=j]^R`|.
    pub fn lcp_suffix_revprefix(&self, i: usize, j: usize) -> usize {
        self.idx.lcp(i, self.rev_prefix_pos(j))
    }

    /// |longest common prefix of `w[1..=i]^R` and `w[1..=j]^R`|, i.e. the
    /// longest common suffix of the prefixes `w[1..=i]` and `w[1..=j]`.
    pub fn lcs_prefixes(&self, i: usize, j: usize) -> usize {
        self.idx
            .lcp(self.rev_prefix_pos(i), self.rev_prefix_pos(j))
    }

    /// |longest common prefix of `w[i..n]` and `w[j..n]`|.
    pub fn lcp_suffixes(&self, i: usize, j: usize) -> usize {
        self.idx.lcp(i, j)
    }
}

/// One Lempel-Ziv factor: 1-based start and length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LzFactor {
    pub start: usize,
    pub len: usize,
}

/// Lempel-Ziv factorization of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LzFactorization {
    pub factors: Vec<LzFactor>,
}

/// Computes the Lempel-Ziv factorization.
///
/// Each factor is the longest prefix of the remaining text that occurs
/// earlier; a fresh letter forms a singleton factor. With `allow_overlap`
/// the earlier occurrence may run into the current factor, otherwise it must
/// lie entirely inside the strict prefix before the factor.
pub fn lz_factorize(w: &Word, allow_overlap: bool) -> Result<LzFactorization> {
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    let idx = build_index(w)?;
    let n = w.len();
    let mut factors = Vec::new();
    let mut pos = 1usize;
    while pos <= n {
        let mut best = 0usize;
        for j in 1..pos {
            let mut l = idx.lcp(j, pos);
            if !allow_overlap {
                l = l.min(pos - j);
            }
            best = best.max(l);
        }
        let len = best.max(1);
        factors.push(LzFactor { start: pos, len });
        pos += len;
    }
    Ok(LzFactorization { factors })
}

/// Dictionary of basic factors: per level `k`, equal factors of length `2^k`
/// share a label, and each label's occurrence positions are kept sorted.
pub struct Dbf {
    word: Word,
    /// `labels[k][i]` = label of `w[i+1 .. i+2^k]` (0-based storage).
    labels: Vec<Vec<u32>>,
    /// `occ[k][label]` = sorted 1-based occurrence positions.
    occ: Vec<Vec<Vec<u32>>>,
    /// Window constant c: query windows must have length <= c * 2^k.
    pub window_constant: usize,
}

/// Builds the dictionary of basic factors of `w` for all levels
/// `0 <= k <= log2 n`.
pub fn build_dbf(w: &Word) -> Result<Dbf> {
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = w.len();
    let syms = w.symbols();

    // Level 0: dense ranks of the symbols.
    let mut sorted: Vec<u32> = syms.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let level0: Vec<u32> = syms
        .iter()
        .map(|&c| sorted.binary_search(&c).unwrap() as u32)
        .collect();

    let mut labels = vec![level0];
    let mut k = 0usize;
    while 2 * (1usize << k) <= n {
        let half = 1usize << k;
        let prev = &labels[k];
        let m = n - 2 * half + 1;
        let mut pairs: Vec<(u32, u32, u32)> = (0..m)
            .map(|i| (prev[i], prev[i + half], i as u32))
            .collect();
        pairs.sort_unstable();
        let mut next = vec![0u32; m];
        let mut label = 0u32;
        for t in 0..m {
            if t > 0 && (pairs[t].0, pairs[t].1) != (pairs[t - 1].0, pairs[t - 1].1) {
                label += 1;
            }
            next[pairs[t].2 as usize] = label;
        }
        labels.push(next);
        k += 1;
    }

    let occ = labels
        .iter()
        .map(|lv| {
            let m = lv.iter().copied().max().map_or(0, |x| x as usize + 1);
            let mut lists: Vec<Vec<u32>> = vec![Vec::new(); m];
            for (i, &lab) in lv.iter().enumerate() {
                lists[lab as usize].push(i as u32 + 1);
            }
            lists
        })
        .collect();

    Ok(Dbf {
        word: w.clone(),
        labels,
        occ,
        window_constant: 10,
    })
}

/// Compact occurrence set: isolated positions plus arithmetic progressions
/// `(start, ratio, count)` with ratio equal to the factor's period.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CompactOccurrences {
    pub isolated: Vec<usize>,
    pub progressions: Vec<(usize, usize, usize)>,
}

impl CompactOccurrences {
    /// Expands back to the plain sorted occurrence list.
    pub fn expand(&self) -> Vec<usize> {
        let mut out = self.isolated.clone();
        for &(s, d, c) in &self.progressions {
            for t in 0..c {
                out.push(s + t * d);
            }
        }
        out.sort_unstable();
        out
    }
}

/// Smallest period of a symbol slice (KMP failure function).
pub fn period(v: &[u32]) -> usize {
    let m = v.len();
    let mut fail = vec![0usize; m + 1];
    let mut k = 0usize;
    for q in 1..m {
        while k > 0 && v[q] != v[k] {
            k = fail[k];
        }
        if v[q] == v[k] {
            k += 1;
        }
        fail[q + 1] = k;
    }
    m - fail[m]
}

/// All 1-based starting positions of `pat` inside `text`
/// (Knuth-Morris-Pratt).
pub fn find_occurrences(text: &[u32], pat: &[u32]) -> Vec<usize> {
    let m = pat.len();
    let mut out = Vec::new();
    if m == 0 || m > text.len() {
        return out;
    }
    let mut fail = vec![0usize; m + 1];
    let mut k = 0usize;
    for q in 1..m {
        while k > 0 && pat[q] != pat[k] {
            k = fail[k];
        }
        if pat[q] == pat[k] {
            k += 1;
        }
        fail[q + 1] = k;
    }
    let mut q = 0usize;
    for (idx, &c) in text.iter().enumerate() {
        while q > 0 && c != pat[q] {
            q = fail[q];
        }
        if c == pat[q] {
            q += 1;
        }
        if q == m {
            out.push(idx + 2 - m);
            q = fail[q];
        }
    }
    out
}

impl Dbf {
    pub fn max_level(&self) -> usize {
        self.labels.len() - 1
    }

    /// Label of the basic factor `w[i .. i + 2^k - 1]` (1-based start).
    pub fn label(&self, i: usize, k: usize) -> u32 {
        self.labels[k][i - 1]
    }

    /// Sorted 1-based occurrences of the basic factor starting at `i`,
    /// level `k`.
    pub fn occurrences(&self, i: usize, k: usize) -> &[u32] {
        &self.occ[k][self.labels[k][i - 1] as usize]
    }

    /// Occurrences of the basic factor `w[i..i+2^k-1]` lying entirely inside
    /// the 1-based closed window, compactly: isolated positions plus
    /// arithmetic progressions whose ratio is the factor period.
    pub fn window_occurrences(
        &self,
        i: usize,
        k: usize,
        window: (usize, usize),
    ) -> Result<CompactOccurrences> {
        let flen = 1usize << k;
        let (a, b) = window;
        self.word.check_range(a, b)?;
        if b - a + 1 > self.window_constant * flen {
            return Err(Error::WindowTooLong);
        }
        let per = period(&self.word.slice(i, i + flen - 1).to_vec());
        let list = self.occurrences(i, k);
        // An occurrence counts only when it fits entirely in the window.
        let last_start = (b + 1).saturating_sub(flen);
        let lo = list.partition_point(|&p| (p as usize) < a);
        let hi = list.partition_point(|&p| (p as usize) <= last_start);
        let hi = hi.max(lo);
        let hits: Vec<usize> = list[lo..hi].iter().map(|&p| p as usize).collect();

        let mut out = CompactOccurrences::default();
        let mut t = 0usize;
        while t < hits.len() {
            let mut u = t;
            while u + 1 < hits.len() && hits[u + 1] - hits[u] == per {
                u += 1;
            }
            if u > t {
                out.progressions.push((hits[t], per, u - t + 1));
            } else {
                out.isolated.push(hits[t]);
            }
            t = u + 1;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_sa(w: &Word) -> Vec<u32> {
        let n = w.len();
        let mut sa: Vec<u32> = (1..=n as u32).collect();
        sa.sort_by(|&a, &b| w.slice(a as usize, n).cmp(w.slice(b as usize, n)));
        sa
    }

    #[test]
    fn banana_suffix_array() {
        let idx = build_index(&Word::from_str("banana")).unwrap();
        assert_eq!(idx.sa(), &[6, 4, 2, 1, 5, 3]);
    }

    #[test]
    fn trivial_suffix_arrays() {
        assert_eq!(build_index(&Word::from_str("a")).unwrap().sa(), &[1]);
        assert_eq!(
            build_index(&Word::from_str("aaaa")).unwrap().sa(),
            &[4, 3, 2, 1]
        );
        assert_eq!(build_index(&Word::from_str("")).err(), Some(Error::EmptyInput));
    }

    #[test]
    fn sa_matches_naive_on_exhaustive_small_words() {
        for n in 1..=9usize {
            for bits in 0..(1u32 << n) {
                let syms: Vec<u32> = (0..n).map(|i| (bits >> i) & 1).collect();
                let w = Word::from_symbols(syms).unwrap();
                let idx = build_index(&w).unwrap();
                assert_eq!(idx.sa(), naive_sa(&w).as_slice(), "word {:?}", w);
            }
        }
    }

    #[test]
    fn lcp_queries() {
        let idx = build_index(&Word::from_str("banana")).unwrap();
        assert_eq!(idx.lcp_query(2, 4).unwrap(), 3);
        assert_eq!(idx.lcp_query(3, 3).unwrap(), 4);
        assert!(idx.lcp_query(0, 3).is_err());
        assert!(idx.lcp_query(1, 7).is_err());
        let idx = build_index(&Word::from_str("abacabac")).unwrap();
        assert_eq!(idx.lcp_query(1, 5).unwrap(), 4);
    }

    #[test]
    fn lcp_matches_naive() {
        let w = Word::from_str("abracadabraabracadabra");
        let idx = build_index(&w).unwrap();
        let n = w.len();
        for i in 1..=n {
            for j in 1..=n {
                let mut l = 0;
                while i + l <= n && j + l <= n && w.at(i + l) == w.at(j + l) {
                    l += 1;
                }
                assert_eq!(idx.lcp(i, j), l, "lcp({i},{j})");
            }
        }
    }

    #[test]
    fn bidi_queries() {
        let b = build_bidi_index(&Word::from_str("abba")).unwrap();
        // w[3..4] = "ba" vs w[1..2]^R = "ba"
        assert_eq!(b.lcp_suffix_revprefix(3, 2), 2);
        let b = build_bidi_index(&Word::from_str("ab")).unwrap();
        assert_eq!(b.lcp_suffix_revprefix(2, 1), 0);
        let b = build_bidi_index(&Word::from_str("aa")).unwrap();
        assert_eq!(b.lcp_suffix_revprefix(2, 1), 1);
    }

    #[test]
    fn bidi_requires_separator_room() {
        let w = Word::from_symbols(vec![MAX_ALPHABET - 1]).unwrap();
        assert_eq!(build_bidi_index(&w).err(), Some(Error::NoSeparator));
    }

    #[test]
    fn lz_modes() {
        // Strict mode on "aaaa": a | a | aa.
        let f = lz_factorize(&Word::from_str("aaaa"), false).unwrap();
        let lens: Vec<usize> = f.factors.iter().map(|x| x.len).collect();
        assert_eq!(lens, vec![1, 1, 2]);
        // Overlap mode: a | aaa.
        let f = lz_factorize(&Word::from_str("aaaa"), true).unwrap();
        let lens: Vec<usize> = f.factors.iter().map(|x| x.len).collect();
        assert_eq!(lens, vec![1, 3]);
        // Singleton.
        let f = lz_factorize(&Word::from_str("a"), false).unwrap();
        assert_eq!(f.factors.len(), 1);
    }

    #[test]
    fn lz_covers_word() {
        for w in ["abbaabbbbaaabab", "abracadabra", "aaaaaa"] {
            let word = Word::from_str(w);
            for mode in [false, true] {
                let f = lz_factorize(&word, mode).unwrap();
                let total: usize = f.factors.iter().map(|x| x.len).sum();
                assert_eq!(total, word.len());
                let mut pos = 1;
                for fac in &f.factors {
                    assert_eq!(fac.start, pos);
                    pos += fac.len;
                }
            }
        }
    }

    #[test]
    fn dbf_labels() {
        let dbf = build_dbf(&Word::from_str("abab")).unwrap();
        assert_eq!(dbf.label(1, 1), dbf.label(3, 1));
        assert_eq!(dbf.label(1, 0), dbf.label(3, 0));
        assert_ne!(dbf.label(1, 0), dbf.label(2, 0));
    }

    #[test]
    fn dbf_window() {
        let dbf = build_dbf(&Word::from_str("aaaaaa")).unwrap();
        let c = dbf.window_occurrences(1, 1, (1, 5)).unwrap();
        assert_eq!(c.progressions, vec![(1, 1, 4)]);
        assert!(c.isolated.is_empty());

        let dbf = build_dbf(&Word::from_str("abaababa")).unwrap();
        let c = dbf.window_occurrences(1, 1, (1, 8)).unwrap();
        assert_eq!(c.expand(), vec![1, 4, 6]);

        // Oversized window is rejected.
        let dbf = build_dbf(&Word::from_symbols(vec![0; 100]).unwrap()).unwrap();
        assert_eq!(
            dbf.window_occurrences(1, 0, (1, 50)).err(),
            Some(Error::WindowTooLong)
        );
    }

    #[test]
    fn dbf_window_expansion_matches_naive() {
        let w = Word::from_str("abaababaabaababaababa");
        let dbf = build_dbf(&w).unwrap();
        let n = w.len();
        for k in 0..=dbf.max_level() {
            let flen = 1usize << k;
            for i in 1..=(n - flen + 1) {
                for a in 1..=n {
                    let b = (a + dbf.window_constant * flen - 1).min(n);
                    let naive: Vec<usize> = (a..=b)
                        .filter(|&p| {
                            p + flen - 1 <= b && w.slice(p, p + flen - 1) == w.slice(i, i + flen - 1)
                        })
                        .collect();
                    let got = dbf.window_occurrences(i, k, (a, b)).unwrap();
                    let blocks = got.isolated.len() + got.progressions.len();
                    assert!(blocks <= 2 * dbf.window_constant + 1);
                    assert_eq!(got.expand(), naive);
                }
            }
        }
    }

    #[test]
    fn period_function() {
        assert_eq!(period(&[0, 1, 0, 1]), 2);
        assert_eq!(period(&[0, 0, 0]), 1);
        assert_eq!(period(&[0, 1, 2]), 3);
        assert_eq!(period(&[0, 1, 0]), 2);
    }
}
