//! Per-position square structure of a word: maximal runs, primitively rooted
//! square lists, and the center/boundary tables derived from them via the
//! weighted-interval cover.

use crate::index::{build_index, TextIndex};
use crate::intervals::{cover_extremum, CoverMode, WeightedInterval};
use crate::{Result, Word};

/// A maximal run: `w[i..=j]` has smallest period `p <= (j-i+1)/2` and cannot
/// be extended by one symbol on either side keeping that period.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Run {
    pub i: usize,
    pub j: usize,
    pub p: usize,
}

/// Computes all maximal runs, sorted by start position (then end).
///
/// For every candidate period `p` and anchor pair `(q, q+p)` with `q` a
/// multiple of `p`, the run is recovered by extending the match left and
/// right with O(1) longest-common-extension queries; duplicates from
/// non-minimal periods are removed by keeping the smallest period per
/// interval.
pub fn compute_runs(w: &Word) -> Result<Vec<Run>> {
    compute_runs_bounded(w, w.len() / 2)
}

/// Computes all maximal runs with period at most `max_period`; restricting
/// the period keeps the scan at O(n log max_period) extension queries.
pub fn compute_runs_bounded(w: &Word, max_period: usize) -> Result<Vec<Run>> {
    let n = w.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let fwd = build_index(w)?;
    let rev = build_index(&w.reversed())?;
    // lcs(a, b): longest common suffix of the prefixes w[1..=a], w[1..=b].
    let lcs = |a: usize, b: usize| -> usize {
        if a == 0 || b == 0 {
            0
        } else {
            rev.lcp(n + 1 - a, n + 1 - b)
        }
    };

    let mut cands: Vec<Run> = Vec::new();
    for p in 1..=max_period.min(n / 2) {
        let mut q = p;
        while q + p <= n {
            let l = lcs(q - 1, q + p - 1);
            // Candidates with l >= p are re-found from the previous anchor.
            if l < p {
                let r = fwd.lcp(q, q + p);
                if l + r >= p {
                    cands.push(Run {
                        i: q - l,
                        j: q + p + r - 1,
                        p,
                    });
                }
            }
            q += p;
        }
    }
    // Keep the minimal period per interval: that is the true period, and the
    // same interval listed with a multiple of it is not a distinct run.
    cands.sort_unstable_by_key(|r| (r.i, r.j, r.p));
    cands.dedup_by_key(|r| (r.i, r.j));
    cands.sort_unstable_by_key(|r| (r.i, r.j));
    debug_assert!(cands.len() <= n, "more runs than positions");
    Ok(cands)
}

/// Per-position lists of primitively rooted squares with bounded roots.
///
/// `by_start[i]` holds all root lengths `p <= k` such that `w[i..=i+2p-1]`
/// is a primitively rooted square; `by_end[j]` the symmetric lists for
/// squares ending at `j`. Lists are sorted increasingly.
pub struct PrimSquareLists {
    pub k: usize,
    pub by_start: Vec<Vec<u32>>,
    pub by_end: Vec<Vec<u32>>,
}

/// Enumerates all primitively rooted squares with root length at most `k`.
///
/// Every primitively rooted square of root `p` lies in the unique maximal
/// run whose period is exactly `p`, and every start position inside that run
/// (leaving room for `2p` symbols) carries one.
pub fn prim_squares(w: &Word, k: usize) -> Result<PrimSquareLists> {
    let n = w.len();
    let runs = compute_runs_bounded(w, k)?;
    let mut by_start: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    let mut by_end: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for r in &runs {
        if r.p > k {
            continue;
        }
        for s in r.i..=r.j + 1 - 2 * r.p {
            by_start[s].push(r.p as u32);
            by_end[s + 2 * r.p - 1].push(r.p as u32);
        }
    }
    for list in by_start.iter_mut().chain(by_end.iter_mut()) {
        list.sort_unstable();
    }
    Ok(PrimSquareLists { k, by_start, by_end })
}

/// The six per-position square tables. All positions are 1-based; index 0 of
/// each vector is unused padding.
///
/// Sentinels: `left`, `sc`, `max_left_end`, `max_sq_end` use 0;
/// `right`, `min_right_end` use `n + 1`.
pub struct SquareTables {
    pub n: usize,
    /// Arm length of the longest square centered at `i` (`u` both a suffix
    /// of `w[1..i-1]` and a prefix of `w[i..n]`).
    pub sc: Vec<usize>,
    /// Minimum end of a square whose left root contains `i`.
    pub min_right_end: Vec<usize>,
    /// Maximum start of a square whose right root contains `i`.
    pub max_left_end: Vec<usize>,
    /// Start of the shortest square ending at `i` (the maximal such start).
    pub left: Vec<usize>,
    /// End of the shortest square starting at `i` (the minimal such end).
    pub right: Vec<usize>,
    /// Length of the longest square ending at `i`.
    pub max_sq_end: Vec<usize>,
}

fn pad(mut v: Vec<usize>, front: usize) -> Vec<usize> {
    v.insert(0, front);
    v
}

/// Builds `SC`, `MinRightEnd` and `MaxLeftEnd` from the runs of `w`.
pub fn compute_center_tables(w: &Word) -> Result<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    let runs = compute_runs(w)?;
    compute_center_tables_from_runs(&runs, w.len())
}

/// As [`compute_center_tables`], reusing an already computed run list.
pub fn compute_center_tables_from_runs(
    runs: &[Run],
    n: usize,
) -> Result<(Vec<usize>, Vec<usize>, Vec<usize>)> {

    // SC: a square of arm a = m*p inside run [i, j] has its center anywhere
    // in [i+a, j-a+1]; cover with weight a, take the maximum.
    let mut sc_ivs = Vec::new();
    // MinRightEnd: only arm p matters. Type A (center-relative): for q in
    // [i+p-1, j-p] the minimal end is q + p, so cover q with weight p and add
    // q back. Type B: for q in [i, i+p-2] the minimal end is the constant
    // i + 2p - 1.
    let mut mre_rel = Vec::new();
    let mut mre_abs = Vec::new();
    // MaxLeftEnd symmetrically: type A for q in [i+p, j-p+1] gives start
    // q - p; type B for q in [j-p+2, j] gives the constant j - 2p + 1.
    let mut mle_rel = Vec::new();
    let mut mle_abs = Vec::new();

    for r in runs {
        let (i, j, p) = (r.i, r.j, r.p);
        let mut a = p;
        while 2 * a <= j - i + 1 {
            sc_ivs.push(WeightedInterval {
                a: i + a,
                b: j - a + 2,
                g: a,
            });
            a += p;
        }
        if i + p - 1 <= j - p {
            mre_rel.push(WeightedInterval {
                a: i + p - 1,
                b: j - p + 1,
                g: p,
            });
        }
        if p >= 2 {
            mre_abs.push(WeightedInterval {
                a: i,
                b: i + p - 1,
                g: i + 2 * p - 1,
            });
        }
        if i + p <= j - p + 1 {
            mle_rel.push(WeightedInterval {
                a: i + p,
                b: j - p + 2,
                g: p,
            });
        }
        if p >= 2 {
            mle_abs.push(WeightedInterval {
                a: j - p + 2,
                b: j + 1,
                g: j - 2 * p + 1,
            });
        }
    }

    let sc = cover_extremum(&sc_ivs, n, CoverMode::Max)?;

    let d = cover_extremum(&mre_rel, n, CoverMode::Min)?;
    let e = cover_extremum(&mre_abs, n, CoverMode::Min)?;
    let mre: Vec<usize> = (1..=n)
        .map(|q| {
            let rel = if d[q - 1] <= n { q + d[q - 1] } else { n + 1 };
            rel.min(e[q - 1])
        })
        .collect();

    let g = cover_extremum(&mle_rel, n, CoverMode::Min)?;
    let f = cover_extremum(&mle_abs, n, CoverMode::Max)?;
    let mle: Vec<usize> = (1..=n)
        .map(|q| {
            let rel = if g[q - 1] <= n { q - g[q - 1] } else { 0 };
            rel.max(f[q - 1])
        })
        .collect();

    Ok((pad(sc, 0), pad(mre, 0), pad(mle, 0)))
}

/// Builds `left`, `right` and `MaxSqEnd` from the runs of `w`.
///
/// With `root_bound = Some(k)` only squares whose primitive root is at most
/// `k` are considered (for the bounded-duplication variants).
pub fn compute_boundary_tables_bounded(
    w: &Word,
    root_bound: Option<usize>,
) -> Result<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    let n = w.len();
    let runs = compute_runs(w)?;
    let bound = root_bound.unwrap_or(n);

    let mut min_end_arm = Vec::new(); // squares ending at e: minimal arm
    let mut min_start_arm = Vec::new(); // squares starting at s: minimal arm
    let mut max_end_arm = Vec::new(); // squares ending at e: maximal arm

    for r in &runs {
        let (i, j, p) = (r.i, r.j, r.p);
        if p <= bound {
            min_end_arm.push(WeightedInterval {
                a: i + 2 * p - 1,
                b: j + 1,
                g: p,
            });
            min_start_arm.push(WeightedInterval {
                a: i,
                b: j - 2 * p + 2,
                g: p,
            });
        }
        let mut a = p;
        while 2 * a <= j - i + 1 {
            if root_bound.is_none() || a <= bound {
                max_end_arm.push(WeightedInterval {
                    a: i + 2 * a - 1,
                    b: j + 1,
                    g: a,
                });
            }
            a += p;
        }
    }

    let min_end = cover_extremum(&min_end_arm, n, CoverMode::Min)?;
    let min_start = cover_extremum(&min_start_arm, n, CoverMode::Min)?;
    let max_end = cover_extremum(&max_end_arm, n, CoverMode::Max)?;

    let left: Vec<usize> = (1..=n)
        .map(|e| {
            if min_end[e - 1] <= n {
                e + 1 - 2 * min_end[e - 1]
            } else {
                0
            }
        })
        .collect();
    let right: Vec<usize> = (1..=n)
        .map(|s| {
            if min_start[s - 1] <= n {
                s - 1 + 2 * min_start[s - 1]
            } else {
                n + 1
            }
        })
        .collect();
    let max_sq_end: Vec<usize> = (1..=n).map(|e| 2 * max_end[e - 1]).collect();

    Ok((pad(left, 0), pad(right, 0), pad(max_sq_end, 0)))
}

/// Unbounded variant of [`compute_boundary_tables_bounded`].
pub fn compute_boundary_tables(w: &Word) -> Result<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    compute_boundary_tables_bounded(w, None)
}

/// Builds all six tables at once.
pub fn compute_square_tables(w: &Word) -> Result<SquareTables> {
    let n = w.len();
    let (sc, min_right_end, max_left_end) = compute_center_tables(w)?;
    let (left, right, max_sq_end) = compute_boundary_tables(w)?;
    Ok(SquareTables {
        n,
        sc,
        min_right_end,
        max_left_end,
        left,
        right,
        max_sq_end,
    })
}

/// True iff `w[s..=e]` is a square, decided with one LCP query.
pub fn is_square_at(idx: &TextIndex, s: usize, e: usize) -> bool {
    let len = e + 1 - s;
    len >= 2 && len % 2 == 0 && idx.lcp(s, s + len / 2) >= len / 2
}

/// Naive reference implementations of every table, O(n^3); the fast
/// builders are tested against these.
pub mod naive {
    use super::SquareTables;
    use crate::Word;

    fn is_square(w: &Word, s: usize, e: usize) -> bool {
        let len = e + 1 - s;
        if len < 2 || len % 2 != 0 {
            return false;
        }
        let h = len / 2;
        (0..h).all(|t| w.at(s + t) == w.at(s + h + t))
    }

    pub fn square_tables(w: &Word) -> SquareTables {
        let n = w.len();
        let mut sc = vec![0; n + 1];
        let mut mre = vec![n + 1; n + 1];
        let mut mle = vec![0; n + 1];
        let mut left = vec![0; n + 1];
        let mut right = vec![n + 1; n + 1];
        let mut mse = vec![0; n + 1];
        mre[0] = 0; // padding slots
        right[0] = 0;
        for s in 1..=n {
            for e in s + 1..=n {
                if !is_square(w, s, e) {
                    continue;
                }
                let a = (e + 1 - s) / 2;
                sc[s + a] = sc[s + a].max(a);
                for q in s..s + a {
                    mre[q] = mre[q].min(e);
                }
                for q in s + a..=e {
                    mle[q] = mle[q].max(s);
                }
                left[e] = left[e].max(s);
                right[s] = right[s].min(e);
                mse[e] = mse[e].max(2 * a);
            }
        }
        SquareTables {
            n,
            sc,
            min_right_end: mre,
            max_left_end: mle,
            left,
            right,
            max_sq_end: mse,
        }
    }

    pub fn runs(w: &Word) -> Vec<super::Run> {
        let n = w.len();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                let len = j - i + 1;
                let per = crate::index::period(w.slice(i, j));
                if 2 * per > len {
                    continue;
                }
                let left_ext = i > 1 && w.at(i - 1) == w.at(i + per - 1);
                let right_ext = j < n && w.at(j + 1) == w.at(j - per + 1);
                if !left_ext && !right_ext {
                    out.push(super::Run { i, j, p: per });
                }
            }
        }
        out.sort_unstable();
        out
    }
}
