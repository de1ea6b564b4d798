//! Regular-language side of bounded duplication: closure automata, one-step
//! images, minimal generators, finiteness, and the bounded distance between
//! two regular languages.

use std::collections::HashMap;

use crate::distance::INF;
use crate::ops::Family;
use crate::{Error, Result, Word};

/// Budget on `|V|^k` for closure-automaton windows.
pub const WINDOW_BUDGET: usize = 1 << 18;
/// Budget on determinized automaton states.
pub const DFA_STATE_BUDGET: usize = 1 << 20;
/// Budget on tuple slots in [`language_distance`].
pub const TUPLE_BUDGET: usize = 1 << 26;

/// A total deterministic finite automaton over an explicit integer alphabet.
#[derive(Debug, Clone)]
pub struct Dfa {
    /// Sorted distinct symbols.
    pub alphabet: Vec<u32>,
    pub start: usize,
    pub finals: Vec<bool>,
    /// Row-major transitions: `trans[q * alphabet.len() + a]`.
    pub trans: Vec<usize>,
}

impl Dfa {
    pub fn num_states(&self) -> usize {
        self.finals.len()
    }

    fn sym_index(&self, s: u32) -> Option<usize> {
        self.alphabet.binary_search(&s).ok()
    }

    fn next(&self, q: usize, a: usize) -> usize {
        self.trans[q * self.alphabet.len() + a]
    }

    /// Runs the automaton; symbols outside the alphabet reject.
    pub fn accepts(&self, word: &[u32]) -> bool {
        let mut q = self.start;
        for &s in word {
            match self.sym_index(s) {
                Some(a) => q = self.next(q, a),
                None => return false,
            }
        }
        self.finals[q]
    }

    /// Chain automaton accepting exactly `{x}`.
    pub fn from_word(x: &Word) -> Result<Dfa> {
        Dfa::from_words(std::slice::from_ref(x))
    }

    /// Trie automaton accepting exactly the given finite set.
    pub fn from_words(words: &[Word]) -> Result<Dfa> {
        if words.iter().any(|w| w.is_empty()) {
            return Err(Error::EmptyInput);
        }
        let mut alphabet: Vec<u32> = words
            .iter()
            .flat_map(|w| w.symbols().iter().copied())
            .collect();
        alphabet.sort_unstable();
        alphabet.dedup();
        let b = alphabet.len().max(1);
        // State 0 is the trie root; a sink is appended at the end.
        let mut children: Vec<HashMap<usize, usize>> = vec![HashMap::new()];
        let mut finals = vec![false];
        for w in words {
            let mut q = 0usize;
            for &s in w.symbols() {
                let a = alphabet.binary_search(&s).unwrap();
                q = match children[q].get(&a) {
                    Some(&c) => c,
                    None => {
                        children.push(HashMap::new());
                        finals.push(false);
                        let c = children.len() - 1;
                        children[q].insert(a, c);
                        c
                    }
                };
            }
            finals[q] = true;
        }
        let sink = children.len();
        finals.push(false);
        let mut trans = vec![sink; (sink + 1) * b];
        for (q, ch) in children.iter().enumerate() {
            for (&a, &c) in ch {
                trans[q * b + a] = c;
            }
        }
        Ok(Dfa {
            alphabet,
            start: 0,
            finals,
            trans,
        })
    }

    /// Re-targets the automaton onto a superset alphabet (missing symbols go
    /// to a fresh rejecting sink).
    fn align(&self, alphabet: &[u32]) -> Dfa {
        if self.alphabet == alphabet {
            return self.clone();
        }
        let b = alphabet.len();
        let n = self.num_states();
        let sink = n;
        let mut trans = vec![sink; (n + 1) * b];
        for q in 0..n {
            for (a, &s) in alphabet.iter().enumerate() {
                if let Some(old) = self.sym_index(s) {
                    trans[q * b + a] = self.next(q, old);
                }
            }
        }
        let mut finals = self.finals.clone();
        finals.push(false);
        Dfa {
            alphabet: alphabet.to_vec(),
            start: self.start,
            finals,
            trans,
        }
    }

    fn union_alphabet(&self, other: &Dfa) -> Vec<u32> {
        let mut v: Vec<u32> = self
            .alphabet
            .iter()
            .chain(other.alphabet.iter())
            .copied()
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Product automaton with finals combined by `f`.
    fn product(&self, other: &Dfa, f: impl Fn(bool, bool) -> bool) -> Dfa {
        let alphabet = self.union_alphabet(other);
        let x = self.align(&alphabet);
        let y = other.align(&alphabet);
        let b = alphabet.len();
        let (nx, ny) = (x.num_states(), y.num_states());
        let mut trans = vec![0usize; nx * ny * b];
        let mut finals = vec![false; nx * ny];
        for p in 0..nx {
            for q in 0..ny {
                let id = p * ny + q;
                finals[id] = f(x.finals[p], y.finals[q]);
                for a in 0..b {
                    trans[id * b + a] = x.next(p, a) * ny + y.next(q, a);
                }
            }
        }
        Dfa {
            alphabet,
            start: x.start * ny + y.start,
            finals,
            trans,
        }
    }

    pub fn intersect(&self, other: &Dfa) -> Dfa {
        self.product(other, |a, b| a && b)
    }

    pub fn union(&self, other: &Dfa) -> Dfa {
        self.product(other, |a, b| a || b)
    }

    /// Words of `self` not accepted by `other`.
    pub fn difference(&self, other: &Dfa) -> Dfa {
        self.product(other, |a, b| a && !b)
    }

    fn reachable(&self) -> Vec<bool> {
        let b = self.alphabet.len();
        let mut seen = vec![false; self.num_states()];
        let mut stack = vec![self.start];
        seen[self.start] = true;
        while let Some(q) = stack.pop() {
            for a in 0..b {
                let t = self.next(q, a);
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }

    fn co_reachable(&self) -> Vec<bool> {
        let n = self.num_states();
        let b = self.alphabet.len();
        let mut rev: Vec<Vec<u32>> = vec![Vec::new(); n];
        for q in 0..n {
            for a in 0..b {
                rev[self.next(q, a)].push(q as u32);
            }
        }
        let mut seen = vec![false; n];
        let mut stack: Vec<usize> = (0..n).filter(|&q| self.finals[q]).collect();
        for &q in &stack {
            seen[q] = true;
        }
        while let Some(q) = stack.pop() {
            for &p in &rev[q] {
                if !seen[p as usize] {
                    seen[p as usize] = true;
                    stack.push(p as usize);
                }
            }
        }
        seen
    }

    /// True iff no word is accepted.
    pub fn is_empty_lang(&self) -> bool {
        let seen = self.reachable();
        !(0..self.num_states()).any(|q| seen[q] && self.finals[q])
    }

    /// Language equality via symmetric-difference emptiness.
    pub fn equivalent(&self, other: &Dfa) -> bool {
        self.difference(other).is_empty_lang() && other.difference(self).is_empty_lang()
    }

    /// All accepted words of length at most `max_len`, in length-then-lex
    /// order.
    pub fn enumerate_upto(&self, max_len: usize) -> Vec<Word> {
        let b = self.alphabet.len();
        let mut out = Vec::new();
        let mut layer: Vec<(usize, Vec<u32>)> = vec![(self.start, Vec::new())];
        for _ in 0..=max_len {
            let mut next_layer = Vec::new();
            for (q, w) in &layer {
                if self.finals[*q] && !w.is_empty() {
                    out.push(Word::from(w.clone()));
                }
                if w.len() < max_len {
                    for a in 0..b {
                        let mut w2 = w.clone();
                        w2.push(self.alphabet[a]);
                        next_layer.push((self.next(*q, a), w2));
                    }
                }
            }
            if next_layer.is_empty() {
                // Flush the final layer's acceptances before stopping.
                break;
            }
            layer = next_layer;
        }
        // The loop above flushes layers before extending; make sure the last
        // generated layer is also inspected.
        for (q, w) in &layer {
            if self.finals[*q] && !w.is_empty() && w.len() == max_len {
                out.push(Word::from(w.clone()));
            }
        }
        out.sort_by(|x, y| {
            (x.len(), x.symbols()).cmp(&(y.len(), y.symbols()))
        });
        out.dedup();
        out
    }

    /// Serializes to the plain text format: header `states symbols start`,
    /// final states, alphabet, then one `from symbol to` triple per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        use std::fmt::Write;
        let b = self.alphabet.len();
        writeln!(s, "{} {} {}", self.num_states(), b, self.start).unwrap();
        let finals: Vec<String> = (0..self.num_states())
            .filter(|&q| self.finals[q])
            .map(|q| q.to_string())
            .collect();
        writeln!(s, "{}", finals.join(" ")).unwrap();
        let syms: Vec<String> = self.alphabet.iter().map(|a| a.to_string()).collect();
        writeln!(s, "{}", syms.join(" ")).unwrap();
        for q in 0..self.num_states() {
            for a in 0..b {
                writeln!(s, "{} {} {}", q, self.alphabet[a], self.next(q, a)).unwrap();
            }
        }
        s
    }

    /// Parses the text format written by [`Dfa::to_text`]; `#` starts a
    /// comment line.
    pub fn parse(text: &str) -> Result<Dfa> {
        let bad = |m: &str| Error::InvalidInput(format!("automaton text: {m}"));
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| bad("missing header"))?;
        let hv: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad("bad header number")))
            .collect::<Result<_>>()?;
        let [n, b, start] = hv[..] else {
            return Err(bad("header needs `states symbols start`"));
        };
        if n == 0 || start >= n {
            return Err(bad("start state out of range"));
        }
        let mut finals = vec![false; n];
        for t in lines.next().ok_or_else(|| bad("missing finals"))?.split_whitespace() {
            let q: usize = t.parse().map_err(|_| bad("bad final state"))?;
            if q >= n {
                return Err(bad("final state out of range"));
            }
            finals[q] = true;
        }
        let alphabet: Vec<u32> = lines
            .next()
            .ok_or_else(|| bad("missing alphabet"))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad("bad symbol")))
            .collect::<Result<_>>()?;
        if alphabet.len() != b || !alphabet.windows(2).all(|w| w[0] < w[1]) {
            return Err(bad("alphabet must list `symbols` strictly increasing values"));
        }
        let mut trans = vec![usize::MAX; n * b];
        for line in lines {
            let tv: Vec<&str> = line.split_whitespace().collect();
            let [from, sym, to] = tv[..] else {
                return Err(bad("transition needs `from symbol to`"));
            };
            let from: usize = from.parse().map_err(|_| bad("bad state"))?;
            let to: usize = to.parse().map_err(|_| bad("bad state"))?;
            let sym: u32 = sym.parse().map_err(|_| bad("bad symbol"))?;
            let a = alphabet
                .binary_search(&sym)
                .map_err(|_| bad("transition symbol not in alphabet"))?;
            if from >= n || to >= n {
                return Err(bad("transition state out of range"));
            }
            trans[from * b + a] = to;
        }
        if trans.iter().any(|&t| t == usize::MAX) {
            return Err(bad("transition function not total"));
        }
        Ok(Dfa {
            alphabet,
            start,
            finals,
            trans,
        })
    }
}

/// True iff the accepted language is finite (no productive cycle).
pub fn is_finite(d: &Dfa) -> bool {
    let live: Vec<bool> = d
        .reachable()
        .iter()
        .zip(d.co_reachable().iter())
        .map(|(&a, &b)| a && b)
        .collect();
    // Cycle detection restricted to live states.
    let n = d.num_states();
    let b = d.alphabet.len();
    let mut color = vec![0u8; n]; // 0 new, 1 open, 2 done
    for s in 0..n {
        if !live[s] || color[s] != 0 {
            continue;
        }
        // Iterative DFS with explicit edge indices.
        let mut stack = vec![(s, 0usize)];
        color[s] = 1;
        while let Some(&mut (q, ref mut a)) = stack.last_mut() {
            if *a == b {
                color[q] = 2;
                stack.pop();
                continue;
            }
            let t = d.next(q, *a);
            *a += 1;
            if !live[t] {
                continue;
            }
            match color[t] {
                0 => {
                    color[t] = 1;
                    stack.push((t, 0));
                }
                1 => return false,
                _ => {}
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Window trie over V^{<=k}: purely arithmetic node ids in level order.
// ---------------------------------------------------------------------------

struct WinTrie {
    b: usize,
    k: usize,
    /// `pow[j] = b^j`.
    pow: Vec<usize>,
    /// `off[j]`: id of the first node at depth `j`.
    off: Vec<usize>,
    total: usize,
}

impl WinTrie {
    fn new(b: usize, k: usize) -> Result<WinTrie> {
        let mut pow = vec![1usize];
        let mut off = vec![0usize];
        for j in 0..=k {
            let p = pow[j]
                .checked_mul(b)
                .filter(|&p| p <= WINDOW_BUDGET)
                .ok_or(Error::BudgetExceeded("closure-automaton window"))?;
            pow.push(p);
            off.push(off[j] + pow[j]);
        }
        let total = off[k] + pow[k];
        Ok(WinTrie { b, k, pow, off, total })
    }

    fn root(&self) -> usize {
        0
    }

    /// Appends symbol index `a`, keeping the last `k` symbols.
    fn push(&self, id: usize, depth: usize, a: usize) -> (usize, usize) {
        let p = id - self.off[depth];
        if depth < self.k {
            (self.off[depth + 1] + p * self.b + a, depth + 1)
        } else {
            let p2 = p % self.pow[self.k - 1];
            (self.off[self.k] + p2 * self.b + a, self.k)
        }
    }

    /// Prefix-bounded append: grows only while shorter than `k`.
    fn push_pref(&self, id: usize, depth: usize, a: usize) -> (usize, usize) {
        if depth < self.k {
            let p = id - self.off[depth];
            (self.off[depth + 1] + p * self.b + a, depth + 1)
        } else {
            (id, depth)
        }
    }

    /// Symbol index at position `pos` (0-based) of the window's path.
    fn sym_at(&self, id: usize, depth: usize, pos: usize) -> usize {
        let p = id - self.off[depth];
        (p / self.pow[depth - 1 - pos]) % self.b
    }

}

// ---------------------------------------------------------------------------
// NFA with epsilon moves, determinized by subset construction.
// ---------------------------------------------------------------------------

struct Nfa {
    b: usize,
    starts: Vec<usize>,
    finals: Vec<bool>,
    trans: Vec<Vec<(u32, u32)>>,
    eps: Vec<Vec<u32>>,
}

impl Nfa {
    fn new(n: usize, b: usize) -> Nfa {
        Nfa {
            b,
            starts: Vec::new(),
            finals: vec![false; n],
            trans: vec![Vec::new(); n],
            eps: vec![Vec::new(); n],
        }
    }

    fn closure(&self, set: &mut Vec<u32>) {
        let mut i = 0;
        while i < set.len() {
            let q = set[i] as usize;
            for &t in &self.eps[q] {
                if !set.contains(&t) {
                    set.push(t);
                }
            }
            i += 1;
        }
        set.sort_unstable();
        set.dedup();
    }

    fn determinize(&self, alphabet: Vec<u32>, max_states: usize) -> Result<Dfa> {
        assert_eq!(alphabet.len(), self.b);
        let mut start: Vec<u32> = self.starts.iter().map(|&q| q as u32).collect();
        self.closure(&mut start);
        let mut ids: HashMap<Vec<u32>, usize> = HashMap::new();
        let mut subsets = vec![start.clone()];
        ids.insert(start, 0);
        let mut trans: Vec<usize> = Vec::new();
        let mut finals = Vec::new();
        let mut q = 0usize;
        while q < subsets.len() {
            let cur = subsets[q].clone();
            finals.push(cur.iter().any(|&s| self.finals[s as usize]));
            for a in 0..self.b {
                let mut next: Vec<u32> = Vec::new();
                for &s in &cur {
                    for &(sym, to) in &self.trans[s as usize] {
                        if sym as usize == a && !next.contains(&to) {
                            next.push(to);
                        }
                    }
                }
                self.closure(&mut next);
                let id = match ids.get(&next) {
                    Some(&id) => id,
                    None => {
                        if subsets.len() >= max_states {
                            return Err(Error::BudgetExceeded("automaton states"));
                        }
                        subsets.push(next.clone());
                        ids.insert(next, subsets.len() - 1);
                        subsets.len() - 1
                    }
                };
                trans.push(id);
            }
            q += 1;
        }
        Ok(Dfa {
            alphabet,
            start: 0,
            finals,
            trans,
        })
    }
}

/// Reverses a DFA's language (edge reversal plus re-determinization).
fn reverse_lang(d: &Dfa) -> Result<Dfa> {
    let n = d.num_states();
    let b = d.alphabet.len();
    let mut nfa = Nfa::new(n, b);
    for q in 0..n {
        for a in 0..b {
            nfa.trans[d.next(q, a)].push((a as u32, q as u32));
        }
        if d.finals[q] {
            nfa.starts.push(q);
        }
    }
    nfa.finals[d.start] = true;
    nfa.determinize(d.alphabet.clone(), DFA_STATE_BUDGET)
}

/// Suffix-duplication closure of a regular language: accepts
/// `SD_k^*(L(base))`.
///
/// The automaton tracks the window of the last up-to-`k` symbols. A
/// duplicated block of length `l <= k` is exactly a continuation of period
/// `l` for `l` more symbols, so after the base word is read each block is
/// verified symbol by symbol against the window.
fn sd_closure(base: &Dfa, k: usize) -> Result<Dfa> {
    let b = base.alphabet.len();
    if b == 0 {
        return Ok(base.clone());
    }
    let wt = WinTrie::new(b, k)?;
    let t = wt.total;
    let nq = base.num_states();
    // State layout: Base(q, win) | Idle(win) | Copy(win, l, rem).
    let idle0 = nq * t;
    let copy0 = idle0 + t;
    let copy_id = |win: usize, l: usize, rem: usize| copy0 + ((l - 2) * k + (rem - 1)) * t + win;
    let n = copy0 + k * k * t;
    if n > DFA_STATE_BUDGET {
        return Err(Error::BudgetExceeded("closure-automaton states"));
    }
    let mut nfa = Nfa::new(n, b);
    nfa.starts.push(base.start * t + wt.root());
    let depth_of = |win: usize| wt.off.partition_point(|&o| o <= win) - 1;
    for win in 0..t {
        let depth = depth_of(win);
        for q in 0..nq {
            let id = q * t + win;
            for a in 0..b {
                let (w2, _) = wt.push(win, depth, a);
                nfa.trans[id].push((a as u32, (base.next(q, a) * t + w2) as u32));
            }
            if base.finals[q] {
                nfa.finals[id] = true;
                nfa.eps[id].push((idle0 + win) as u32);
            }
        }
        // Idle: pick a block length and copy it against the window.
        let idle = idle0 + win;
        nfa.finals[idle] = true;
        for l in 1..=depth.min(k) {
            let a = wt.sym_at(win, depth, depth - l);
            let (w2, _) = wt.push(win, depth, a);
            let target = if l == 1 {
                idle0 + w2
            } else {
                copy_id(w2, l, l - 1)
            };
            nfa.trans[idle].push((a as u32, target as u32));
        }
        for l in 2..=k.min(depth) {
            for rem in 1..l {
                let id = copy_id(win, l, rem);
                let a = wt.sym_at(win, depth, depth - l);
                let (w2, _) = wt.push(win, depth, a);
                let target = if rem == 1 {
                    idle0 + w2
                } else {
                    copy_id(w2, l, rem - 1)
                };
                nfa.trans[id].push((a as u32, target as u32));
            }
        }
    }
    nfa.determinize(base.alphabet.clone(), DFA_STATE_BUDGET)
}

/// One-step suffix-duplication image: accepts `SD_k(L(base))` (exactly one
/// appended block).
fn sd_image(base: &Dfa, k: usize) -> Result<Dfa> {
    let b = base.alphabet.len();
    if b == 0 {
        return Ok(Dfa {
            alphabet: base.alphabet.clone(),
            start: 0,
            finals: vec![false],
            trans: Vec::new(),
        });
    }
    let wt = WinTrie::new(b, k)?;
    let t = wt.total;
    let nq = base.num_states();
    // State layout: Base(q, win) | Done(win) | Copy(win, l, rem).
    let done0 = nq * t;
    let copy0 = done0 + t;
    let copy_id = |win: usize, l: usize, rem: usize| copy0 + ((l - 2) * k + (rem - 1)) * t + win;
    let n = copy0 + k * k * t;
    if n > DFA_STATE_BUDGET {
        return Err(Error::BudgetExceeded("closure-automaton states"));
    }
    let mut nfa = Nfa::new(n, b);
    nfa.starts.push(base.start * t + wt.root());
    let depth_of = |win: usize| wt.off.partition_point(|&o| o <= win) - 1;
    for win in 0..t {
        let depth = depth_of(win);
        nfa.finals[done0 + win] = true;
        for q in 0..nq {
            let id = q * t + win;
            for a in 0..b {
                let (w2, _) = wt.push(win, depth, a);
                nfa.trans[id].push((a as u32, (base.next(q, a) * t + w2) as u32));
            }
            if base.finals[q] {
                // Begin the single duplicated block.
                for l in 1..=depth.min(k) {
                    let a = wt.sym_at(win, depth, depth - l);
                    let (w2, _) = wt.push(win, depth, a);
                    let target = if l == 1 {
                        done0 + w2
                    } else {
                        copy_id(w2, l, l - 1)
                    };
                    nfa.trans[id].push((a as u32, target as u32));
                }
            }
        }
        for l in 2..=k.min(depth) {
            for rem in 1..l {
                let id = copy_id(win, l, rem);
                let a = wt.sym_at(win, depth, depth - l);
                let (w2, _) = wt.push(win, depth, a);
                let target = if rem == 1 {
                    done0 + w2
                } else {
                    copy_id(w2, l, rem - 1)
                };
                nfa.trans[id].push((a as u32, target as u32));
            }
        }
    }
    nfa.determinize(base.alphabet.clone(), DFA_STATE_BUDGET)
}

/// Prefix-duplication closure via the mirror language.
fn pd_closure(base: &Dfa, k: usize) -> Result<Dfa> {
    reverse_lang(&sd_closure(&reverse_lang(base)?, k)?)
}

/// Automaton for the closure of a single word under one duplication family.
///
/// The combined family composes the one-sided closures in the
/// suffix-steps-then-prefix-steps normal form (every bounded prefix-suffix
/// derivation reorders into that shape).
pub fn closure_automaton(x: &Word, k: usize, family: Family) -> Result<Dfa> {
    if x.is_empty() || k == 0 {
        return Err(Error::EmptyInput);
    }
    let base = Dfa::from_word(x)?;
    match family {
        Family::Sd => sd_closure(&base, k),
        Family::Pd => pd_closure(&base, k),
        Family::Psd => pd_closure(&sd_closure(&base, k)?, k),
        _ => Err(Error::InvalidInput(format!(
            "closure automaton unsupported for {family:?}"
        ))),
    }
}

/// Accepts the one-step image `PSD_k(L)` (one duplication at either end).
pub fn one_step_image(l: &Dfa, k: usize) -> Result<Dfa> {
    if k == 0 {
        return Err(Error::EmptyInput);
    }
    let sd = sd_image(l, k)?;
    let pd = reverse_lang(&sd_image(&reverse_lang(l)?, k)?)?;
    Ok(sd.union(&pd))
}

/// Minimal generator `M_k(L) = L \ PSD_k(L)` of a duplication-closed
/// regular language.
pub fn minimal_generator(l: &Dfa, k: usize) -> Result<Dfa> {
    let image = one_step_image(l, k)?;
    if !image.difference(l).is_empty_lang() {
        return Err(Error::NotDuplicationClosed);
    }
    Ok(l.difference(&image))
}

// ---------------------------------------------------------------------------
// Bounded distance between two regular languages.
// ---------------------------------------------------------------------------

/// Minimum number of bounded prefix-suffix duplications between `l1` and
/// `l2` (either direction, as the distance is symmetric); [`INF`] when no
/// word of one derives a word of the other.
pub fn language_distance(l1: &Dfa, l2: &Dfa, k: usize) -> Result<u32> {
    if k == 0 {
        return Err(Error::EmptyInput);
    }
    let alphabet: Vec<u32> = l1.union_alphabet(l2);
    if alphabet.is_empty() {
        return Ok(INF);
    }
    let a1 = l1.align(&alphabet);
    let a2 = l2.align(&alphabet);
    let d1 = directed_distance(&a1, &a2, k)?;
    let d2 = directed_distance(&a2, &a1, k)?;
    Ok(d1.min(d2))
}

/// Minimum `d` with `L(a2) ∩ PSD_k^d(L(a1))` nonempty.
///
/// Tuples `(s1, s2, w1, w2)` assert the existence of a word `w`, derivable
/// in `j` steps from `L(a1)`, with `pref_k(w) = w1`, `suf_k(w) = w2`, and
/// `δ(s1, w) = s2` in `a2`; level sets grow by appending a suffix of `w2`
/// or prepending a prefix of `w1` (any duplicable block lies inside those
/// windows), and the search stops when a tuple runs from the start state of
/// `a2` into a final state.
fn directed_distance(a1: &Dfa, a2: &Dfa, k: usize) -> Result<u32> {
    let b = a1.alphabet.len();
    let wt = WinTrie::new(b, k)?;
    let t = wt.total;
    let (nq, ns) = (a1.num_states(), a2.num_states());
    if nq
        .checked_mul(ns * ns)
        .and_then(|v| v.checked_mul(t * t))
        .is_none_or(|v| v > TUPLE_BUDGET)
    {
        return Err(Error::BudgetExceeded("language-distance tuples"));
    }

    // Forward table: fwd2[s * t + win] = state of a2 after reading the
    // window's word from s; filled level by level.
    let mut fwd2 = vec![0u32; ns * t];
    for s in 0..ns {
        fwd2[s * t + wt.root()] = s as u32;
    }
    for win in 0..t {
        let depth = wt.off.partition_point(|&o| o <= win) - 1;
        if depth == k {
            continue;
        }
        for a in 0..b {
            let (w2, _) = wt.push_pref(win, depth, a);
            for s in 0..ns {
                let mid = fwd2[s * t + win] as usize;
                fwd2[s * t + w2] = a2.next(mid, a) as u32;
            }
        }
    }

    // Seed phase: 5-tuples (q, s, s1, win1, win2) reachable by words of
    // increasing length; a tuple with q final yields a level-0 entry.
    let mut seen5 = vec![false; nq * ns * ns * t * t];
    let idx5 = |q: usize, s: usize, s1: usize, w1: usize, w2: usize| {
        (((q * ns + s) * ns + s1) * t + w1) * t + w2
    };
    let mut seen4 = vec![false; ns * ns * t * t];
    let idx4 =
        |s1: usize, s2: usize, w1: usize, w2: usize| ((s1 * ns + s2) * t + w1) * t + w2;

    #[derive(Clone, Copy)]
    struct Tup {
        s1: u32,
        s2: u32,
        w1: u32,
        d1: u8,
        w2: u32,
        d2: u8,
    }
    let mut r0: Vec<Tup> = Vec::new();

    // Five-tuples carry both windows: while the word is shorter than k
    // they coincide, afterwards both have depth k and evolve separately.
    let mut frontier5: Vec<(u32, u32, u32, u32, u32)> = Vec::new();
    for s in 0..ns {
        for a in 0..b {
            let (w, _) = wt.push(wt.root(), 0, a);
            let q = a1.next(a1.start, a);
            let s1 = a2.next(s, a);
            let id = idx5(q, s, s1, w, w);
            if !seen5[id] {
                seen5[id] = true;
                frontier5.push((q as u32, s as u32, s1 as u32, w as u32, w as u32));
            }
        }
    }
    let depth_of = |win: usize| wt.off.partition_point(|&o| o <= win) - 1;
    let emit = |q: usize, s: usize, s1: usize, w1: usize, w2: usize,
                    r0: &mut Vec<Tup>,
                    seen4: &mut Vec<bool>| {
        if a1.finals[q] {
            let id = idx4(s, s1, w1, w2);
            if !seen4[id] {
                seen4[id] = true;
                r0.push(Tup {
                    s1: s as u32,
                    s2: s1 as u32,
                    w1: w1 as u32,
                    d1: depth_of(w1) as u8,
                    w2: w2 as u32,
                    d2: depth_of(w2) as u8,
                });
            }
        }
    };
    for &(q, s, s1, w1, w2) in &frontier5 {
        emit(q as usize, s as usize, s1 as usize, w1 as usize, w2 as usize, &mut r0, &mut seen4);
    }
    while !frontier5.is_empty() {
        let mut next5 = Vec::new();
        for &(q, s, s1, w1, w2) in &frontier5 {
            let (q, s, s1, w1, w2) = (q as usize, s as usize, s1 as usize, w1 as usize, w2 as usize);
            let d1 = depth_of(w1);
            let d2 = depth_of(w2);
            for a in 0..b {
                let (nw1, _) = wt.push_pref(w1, d1, a);
                let (nw2, _) = wt.push(w2, d2, a);
                let nq = a1.next(q, a);
                let ns1 = a2.next(s1, a);
                let id = idx5(nq, s, ns1, nw1, nw2);
                if !seen5[id] {
                    seen5[id] = true;
                    next5.push((nq as u32, s as u32, ns1 as u32, nw1 as u32, nw2 as u32));
                    emit(nq, s, ns1, nw1, nw2, &mut r0, &mut seen4);
                }
            }
        }
        frontier5 = next5;
    }
    drop(seen5);

    // Level iteration: R_{j+1} extends R_j by one duplication.
    let hit = |tup: &Tup| tup.s1 as usize == a2.start && a2.finals[tup.s2 as usize];
    let mut level = r0;
    let mut j = 0u32;
    while !level.is_empty() {
        if level.iter().any(hit) {
            return Ok(j);
        }
        let mut next: Vec<Tup> = Vec::new();
        for tup in &level {
            let (w1, d1) = (tup.w1 as usize, tup.d1 as usize);
            let (w2, d2) = (tup.w2 as usize, tup.d2 as usize);
            // Suffix duplication: append a nonempty suffix of w2.
            for l in 1..=d2 {
                let mut nw1 = (w1, d1);
                let mut nw2 = (w2, d2);
                let mut s2 = tup.s2 as usize;
                for pos in d2 - l..d2 {
                    let a = wt.sym_at(w2, d2, pos);
                    nw1 = wt.push_pref(nw1.0, nw1.1, a);
                    nw2 = wt.push(nw2.0, nw2.1, a);
                    s2 = a2.next(s2, a);
                }
                let id = idx4(tup.s1 as usize, s2, nw1.0, nw2.0);
                if !seen4[id] {
                    seen4[id] = true;
                    next.push(Tup {
                        s1: tup.s1,
                        s2: s2 as u32,
                        w1: nw1.0 as u32,
                        d1: nw1.1 as u8,
                        w2: nw2.0 as u32,
                        d2: nw2.1 as u8,
                    });
                }
            }
            // Prefix duplication: prepend a nonempty prefix of w1. The new
            // front block re-enters a2 earlier, so search the states that
            // reach s1 by that block.
            for l in 1..=d1 {
                let block = {
                    // Prefix of w1 of length l as a window node.
                    let mut node = wt.root();
                    let mut dep = 0;
                    for pos in 0..l {
                        let a = wt.sym_at(w1, d1, pos);
                        let (n2, nd) = wt.push(node, dep, a);
                        node = n2;
                        dep = nd;
                    }
                    node
                };
                // New windows: pref_k(block · w1), suf_k(block · w2).
                let mut nw1 = (block, l);
                for pos in 0..d1 {
                    let a = wt.sym_at(w1, d1, pos);
                    nw1 = wt.push_pref(nw1.0, nw1.1, a);
                }
                let mut nw2 = (w2, d2);
                if d2 < k {
                    // Only short words can change their suffix window.
                    nw2 = (block, l);
                    for pos in 0..d2 {
                        let a = wt.sym_at(w2, d2, pos);
                        nw2 = wt.push(nw2.0, nw2.1, a);
                    }
                }
                for s in 0..ns {
                    if fwd2[s * t + block] != tup.s1 {
                        continue;
                    }
                    let id = idx4(s, tup.s2 as usize, nw1.0, nw2.0);
                    if !seen4[id] {
                        seen4[id] = true;
                        next.push(Tup {
                            s1: s as u32,
                            s2: tup.s2,
                            w1: nw1.0 as u32,
                            d1: nw1.1 as u8,
                            w2: nw2.0 as u32,
                            d2: nw2.1 as u8,
                        });
                    }
                }
            }
        }
        level = next;
        j += 1;
    }
    Ok(INF)
}
