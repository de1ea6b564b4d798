//! The word operations themselves, plus exact brute-force oracles: one-step
//! images, bounded closures, derivations, ancestor sets and step distances
//! computed directly from the definitions. The fast algorithms elsewhere in
//! the crate are validated against these.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::{Error, Result, Word};

/// Node budget for closure and search oracles.
pub const ORACLE_BUDGET: usize = 1 << 22;

/// The operation families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Prefix duplication: `uy -> uuy`.
    Pd,
    /// Suffix duplication: `yu -> yuu`.
    Sd,
    /// Prefix or suffix duplication.
    Psd,
    /// Prefix square completion: `yxyw' -> xyxyw'`.
    Psc,
    /// Suffix square completion: `w'yxy -> w'yxyx`.
    Ssc,
    /// Prefix or suffix square completion.
    Pssc,
}

/// An operation: a family together with an optional bound on the length of
/// the duplicated prefix/suffix (meaningful for the duplication families).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Op {
    pub family: Family,
    pub k: Option<usize>,
}

impl Op {
    pub fn new(family: Family, k: Option<usize>) -> Op {
        Op { family, k }
    }

    pub fn psd() -> Op {
        Op::new(Family::Psd, None)
    }

    pub fn psd_k(k: usize) -> Op {
        Op::new(Family::Psd, Some(k))
    }

    pub fn pssc() -> Op {
        Op::new(Family::Pssc, None)
    }

    fn bound(&self, n: usize) -> usize {
        self.k.map_or(n, |k| k.min(n))
    }
}

fn push_unique(out: &mut BTreeSet<Word>, w: Word) {
    out.insert(w);
}

/// All words obtainable from `w` by one application of `op`. The result is
/// sorted and duplicate-free.
pub fn step(op: Op, w: &Word) -> Vec<Word> {
    let n = w.len();
    let mut out = BTreeSet::new();
    if n == 0 {
        return Vec::new();
    }
    let dup_bound = op.bound(n);
    if matches!(op.family, Family::Pd | Family::Psd) {
        for u in 1..=dup_bound {
            let mut syms = w.slice(1, u).to_vec();
            syms.extend_from_slice(w.symbols());
            push_unique(&mut out, Word::from(syms));
        }
    }
    if matches!(op.family, Family::Sd | Family::Psd) {
        for u in 1..=dup_bound {
            let mut syms = w.symbols().to_vec();
            syms.extend_from_slice(w.slice(n - u + 1, n));
            push_unique(&mut out, Word::from(syms));
        }
    }
    if matches!(op.family, Family::Psc | Family::Pssc) {
        // w = y x y w'; prepend x so that (xy)^2 becomes a prefix.
        for ylen in 0..=(n - 1) / 2 {
            for xlen in 1..=n - 2 * ylen {
                if w.slice(1, ylen) == w.slice(ylen + xlen + 1, ylen + xlen + ylen) {
                    let mut syms = w.slice(ylen + 1, ylen + xlen).to_vec();
                    syms.extend_from_slice(w.symbols());
                    push_unique(&mut out, Word::from(syms));
                }
            }
        }
    }
    if matches!(op.family, Family::Ssc | Family::Pssc) {
        // w = w' y x y; append x so that (yx)^2 becomes a suffix.
        for ylen in 0..=(n - 1) / 2 {
            for xlen in 1..=n - 2 * ylen {
                let xstart = n - ylen - xlen + 1;
                if w.slice(xstart + xlen, n) == w.slice(xstart - ylen, xstart - 1) {
                    let mut syms = w.symbols().to_vec();
                    syms.extend_from_slice(w.slice(xstart, xstart + xlen - 1));
                    push_unique(&mut out, Word::from(syms));
                }
            }
        }
    }
    out.into_iter().collect()
}

/// All words obtainable from `w` by undoing one application of `op`.
///
/// Every predecessor is a prefix or a suffix of `w`, cut at a square
/// boundary: undoing a prefix step removes `l <= a` symbols where `w` has a
/// square prefix of arm `a` (for plain duplication, exactly `l = a` with
/// `a <= k` if bounded), and symmetrically for suffix steps.
pub fn predecessors(op: Op, w: &Word) -> Vec<Word> {
    let n = w.len();
    let mut out = BTreeSet::new();
    let dup_bound = op.bound(n);
    let pref_arms: Vec<usize> = (1..=n / 2)
        .filter(|&a| w.slice(1, a) == w.slice(a + 1, 2 * a))
        .collect();
    let suf_arms: Vec<usize> = (1..=n / 2)
        .filter(|&a| w.slice(n - 2 * a + 1, n - a) == w.slice(n - a + 1, n))
        .collect();
    match op.family {
        Family::Pd | Family::Sd | Family::Psd => {
            if matches!(op.family, Family::Pd | Family::Psd) {
                for &a in pref_arms.iter().filter(|&&a| a <= dup_bound) {
                    push_unique(&mut out, w.factor(a + 1, n));
                }
            }
            if matches!(op.family, Family::Sd | Family::Psd) {
                for &a in suf_arms.iter().filter(|&&a| a <= dup_bound) {
                    push_unique(&mut out, w.factor(1, n - a));
                }
            }
        }
        Family::Psc | Family::Ssc | Family::Pssc => {
            if matches!(op.family, Family::Psc | Family::Pssc) {
                if let Some(&amax) = pref_arms.iter().max() {
                    for l in 1..=amax {
                        push_unique(&mut out, w.factor(l + 1, n));
                    }
                }
            }
            if matches!(op.family, Family::Ssc | Family::Pssc) {
                if let Some(&amax) = suf_arms.iter().max() {
                    for l in 1..=amax {
                        push_unique(&mut out, w.factor(1, n - l));
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// The closure of `x` under `op`, restricted to words of length at most
/// `max_len`. Fails with a budget error if more than [`ORACLE_BUDGET`]
/// words would be produced.
pub fn closure_upto(op: Op, x: &Word, max_len: usize) -> Result<BTreeSet<Word>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    if x.len() > max_len {
        return Ok(seen);
    }
    seen.insert(x.clone());
    queue.push_back(x.clone());
    while let Some(z) = queue.pop_front() {
        for s in step(op, &z) {
            if s.len() <= max_len && !seen.contains(&s) {
                if seen.len() >= ORACLE_BUDGET {
                    return Err(Error::BudgetExceeded("closure"));
                }
                seen.insert(s.clone());
                queue.push_back(s);
            }
        }
    }
    Ok(seen)
}

/// True iff `w` is derivable from `x` under `op` (including zero steps),
/// decided by breadth-first search restricted to factors of `w`.
///
/// The restriction is exact: undoing any step leaves a prefix or suffix, so
/// every word on a derivation ending in `w` occurs inside `w`.
pub fn oracle_member(op: Op, x: &Word, w: &Word) -> bool {
    oracle_distance(op, x, w).is_some()
}

/// Minimum number of `op` steps turning `x` into `w`, or `None` when `w` is
/// not derivable from `x`.
pub fn oracle_distance(op: Op, x: &Word, w: &Word) -> Option<usize> {
    oracle_derivation(op, x, w).map(|chain| chain.len() - 1)
}

/// A shortest derivation from `x` to `w` as the full chain of words, or
/// `None` when `w` is not derivable.
pub fn oracle_derivation(op: Op, x: &Word, w: &Word) -> Option<Vec<Word>> {
    if x.is_empty() || x.len() > w.len() {
        return None;
    }
    let is_factor = |z: &Word| -> bool {
        let (zs, ws) = (z.symbols(), w.symbols());
        ws.windows(zs.len()).any(|win| win == zs)
    };
    if !is_factor(x) {
        return None;
    }
    let mut parent: HashMap<Word, Option<Word>> = HashMap::new();
    parent.insert(x.clone(), None);
    let mut queue = VecDeque::new();
    queue.push_back(x.clone());
    while let Some(z) = queue.pop_front() {
        if z == *w {
            let mut chain = vec![z.clone()];
            let mut cur = z;
            while let Some(Some(p)) = parent.get(&cur).cloned() {
                chain.push(p.clone());
                cur = p;
            }
            chain.reverse();
            return Some(chain);
        }
        for s in step(op, &z) {
            if s.len() <= w.len() && is_factor(&s) && !parent.contains_key(&s) {
                parent.insert(s.clone(), Some(z.clone()));
                queue.push_back(s);
            }
        }
    }
    None
}

/// All ancestors of `w` under `op`: every word from which `w` is derivable.
/// Computed by undoing steps exhaustively; every ancestor is a factor of
/// `w`, so the search space is quadratic.
pub fn oracle_ancestors(op: Op, w: &Word) -> BTreeSet<Word> {
    let mut seen = BTreeSet::new();
    if w.is_empty() {
        return seen;
    }
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(z) = queue.pop_front() {
        for p in predecessors(op, &z) {
            if seen.insert(p.clone()) {
                queue.push_back(p);
            }
        }
    }
    seen
}

/// All ancestor occurrences of `w` under `op`: coordinate pairs `(i, j)`
/// such that `w` is derivable from the factor content `w[i..=j]`.
/// Membership is content-based, so every occurrence of an ancestor word is
/// listed (e.g. "aaaa" yields all n(n+1)/2 factors).
pub fn oracle_ancestor_coords(op: Op, w: &Word) -> BTreeSet<(usize, usize)> {
    let n = w.len();
    let mut memo: HashMap<Word, bool> = HashMap::new();
    let mut out = BTreeSet::new();
    for i in 1..=n {
        for j in i..=n {
            let z = w.factor(i, j);
            let good = *memo
                .entry(z.clone())
                .or_insert_with(|| oracle_member(op, &z, w));
            if good {
                out.insert((i, j));
            }
        }
    }
    out
}

/// Checks that `chain` is a valid derivation under `op`: each word must be
/// obtainable from its predecessor in one step.
pub fn verify_derivation(op: Op, chain: &[Word]) -> bool {
    chain
        .windows(2)
        .all(|pair| step(op, &pair[0]).contains(&pair[1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(ws: &[&str]) -> Vec<Word> {
        ws.iter().map(|s| Word::from_str(s)).collect()
    }

    #[test]
    fn duplication_steps() {
        assert_eq!(
            step(Op::psd(), &Word::from_str("ab")),
            words(&["aab", "abab", "abb"])
        );
        assert_eq!(
            step(Op::psd_k(1), &Word::from_str("ab")),
            words(&["aab", "abb"])
        );
        assert_eq!(
            step(Op::new(Family::Pd, None), &Word::from_str("ab")),
            words(&["aab", "abab"])
        );
        assert_eq!(
            step(Op::new(Family::Sd, None), &Word::from_str("ab")),
            words(&["abab", "abb"])
        );
    }

    #[test]
    fn square_completion_steps() {
        // "aba" ends with yxy for (y=ε,x=a), (y=ε,x=ba), (y=ε,x=aba),
        // (y=a,x=b), so SSC appends a, ba, aba or b.
        assert_eq!(
            step(Op::new(Family::Ssc, None), &Word::from_str("aba")),
            words(&["abaa", "abaaba", "abab", "ababa"])
        );
        assert_eq!(
            step(Op::new(Family::Psc, None), &Word::from_str("aba")),
            words(&["aaba", "abaaba", "ababa", "baba"])
        );
    }

    #[test]
    fn step_and_predecessors_are_inverse() {
        // Exhaustive over binary words: s in step(w) iff w in pred(s).
        for op in [
            Op::psd(),
            Op::psd_k(2),
            Op::pssc(),
            Op::new(Family::Psc, None),
            Op::new(Family::Ssc, None),
            Op::new(Family::Pd, Some(1)),
        ] {
            for n in 1..=6 {
                for bits in 0..(1u32 << n) {
                    let w = Word::from(
                        (0..n).map(|i| (bits >> i) & 1).collect::<Vec<u32>>(),
                    );
                    for s in step(op, &w) {
                        assert!(
                            predecessors(op, &s).contains(&w),
                            "{op:?} {w:?} -> {s:?}"
                        );
                    }
                    for p in predecessors(op, &w) {
                        assert!(
                            step(op, &p).contains(&w),
                            "{op:?} {p:?} -> {w:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn closure_containment_chain() {
        // PD and SD closures embed in PSD; bounded closures grow with k and
        // embed in the unbounded one; PSD embeds in PSSC (duplication is
        // square completion with y = ε ... u = x).
        let x = Word::from_str("ab");
        let pd = closure_upto(Op::new(Family::Pd, None), &x, 8).unwrap();
        let sd = closure_upto(Op::new(Family::Sd, None), &x, 8).unwrap();
        let psd = closure_upto(Op::psd(), &x, 8).unwrap();
        let pssc = closure_upto(Op::pssc(), &x, 8).unwrap();
        assert!(pd.is_subset(&psd));
        assert!(sd.is_subset(&psd));
        assert!(psd.is_subset(&pssc));
        let mut prev = closure_upto(Op::psd_k(1), &x, 8).unwrap();
        for k in 2..=8 {
            let cur = closure_upto(Op::psd_k(k), &x, 8).unwrap();
            assert!(prev.is_subset(&cur), "k={k}");
            prev = cur;
        }
        assert_eq!(prev, psd);
    }

    #[test]
    fn ancestors_are_factors() {
        for w in ["abaab", "aabbab", "abcabc"] {
            let w = Word::from_str(w);
            for op in [Op::psd(), Op::psd_k(2), Op::pssc()] {
                for anc in oracle_ancestors(op, &w) {
                    assert!(w
                        .symbols()
                        .windows(anc.len())
                        .any(|win| win == anc.symbols()));
                    assert!(oracle_member(op, &anc, &w));
                }
            }
        }
    }

    #[test]
    fn distances_and_derivations() {
        let x = Word::from_str("a");
        let w = Word::from_str("aaaa");
        assert_eq!(oracle_distance(Op::psd_k(1), &x, &w), Some(3));
        assert_eq!(oracle_distance(Op::psd(), &x, &w), Some(2));
        let chain = oracle_derivation(Op::psd(), &x, &w).unwrap();
        assert!(verify_derivation(Op::psd(), &chain));
        assert_eq!(chain.len(), 3);
        assert_eq!(
            oracle_distance(Op::psd(), &Word::from_str("b"), &w),
            None
        );
        // Zero steps.
        assert_eq!(oracle_distance(Op::pssc(), &w, &w), Some(0));
    }

    #[test]
    fn member_agrees_with_closure() {
        let x = Word::from_str("ab");
        for op in [Op::psd(), Op::psd_k(1), Op::pssc()] {
            let cl = closure_upto(op, &x, 7).unwrap();
            for n in 1..=7usize {
                for bits in 0..(1u32 << n) {
                    let w = Word::from(
                        (0..n)
                            .map(|i| ((bits >> i) & 1) + 'a' as u32)
                            .collect::<Vec<u32>>(),
                    );
                    assert_eq!(
                        oracle_member(op, &x, &w),
                        cl.contains(&w),
                        "{op:?} {w:?}"
                    );
                }
            }
        }
    }
}
