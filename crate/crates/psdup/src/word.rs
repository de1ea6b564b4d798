//! The universal input type: a finite sequence of integer symbols.

use crate::{Error, Result};

/// Maximum alphabet size: symbols are integers below this bound.
pub const MAX_ALPHABET: u32 = 1 << 16;

/// A finite word over a small integer alphabet.
///
/// Public accessors are 1-based with closed ranges, so `w.factor(i, j)`
/// is the factor `w[i..=j]` of the usual stringology notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    syms: Vec<u32>,
}

impl Word {
    /// Builds a word from raw symbols. Every symbol must be below
    /// [`MAX_ALPHABET`].
    pub fn from_symbols(syms: Vec<u32>) -> Result<Word> {
        if let Some(&s) = syms.iter().find(|&&s| s >= MAX_ALPHABET) {
            return Err(Error::InvalidInput(format!("symbol {s} too large")));
        }
        Ok(Word { syms })
    }

    /// Builds a word from a byte string, mapping each byte to its value.
    pub fn from_bytes(bytes: &[u8]) -> Word {
        Word {
            syms: bytes.iter().map(|&b| b as u32).collect(),
        }
    }

    /// Convenience constructor from ASCII text, used pervasively in tests.
    pub fn from_str(s: &str) -> Word {
        Word::from_bytes(s.as_bytes())
    }

    pub fn len(&self) -> usize {
        self.syms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syms.is_empty()
    }

    /// The symbol at 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.syms[i - 1]
    }

    /// The underlying 0-based symbol slice.
    pub fn symbols(&self) -> &[u32] {
        &self.syms
    }

    /// The factor `w[i..=j]` (1-based, closed) as a slice.
    pub fn slice(&self, i: usize, j: usize) -> &[u32] {
        &self.syms[i - 1..j]
    }

    /// The factor `w[i..=j]` (1-based, closed) as an owned word.
    pub fn factor(&self, i: usize, j: usize) -> Word {
        Word {
            syms: self.syms[i - 1..j].to_vec(),
        }
    }

    /// Checks that `1 <= i <= j <= n`.
    pub fn check_range(&self, i: usize, j: usize) -> Result<()> {
        if i >= 1 && i <= j && j <= self.len() {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!(
                "[{i}, {j}] not within [1, {}]",
                self.len()
            )))
        }
    }

    /// Smallest alphabet size containing every symbol (max symbol + 1).
    pub fn alphabet_size(&self) -> u32 {
        self.syms.iter().copied().max().map_or(0, |m| m + 1)
    }

    /// The reversed word.
    pub fn reversed(&self) -> Word {
        let mut syms = self.syms.clone();
        syms.reverse();
        Word { syms }
    }

    /// Renders the word: printable ASCII words as text, others as
    /// space-separated integers.
    pub fn display(&self) -> String {
        if !self.syms.is_empty()
            && self
                .syms
                .iter()
                .all(|&s| (0x20..0x7f).contains(&s))
        {
            self.syms.iter().map(|&s| s as u8 as char).collect()
        } else {
            let toks: Vec<String> = self.syms.iter().map(|s| s.to_string()).collect();
            toks.join(" ")
        }
    }
}

impl From<Vec<u32>> for Word {
    fn from(syms: Vec<u32>) -> Word {
        Word::from_symbols(syms).expect("symbols within alphabet bound")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_based_access() {
        let w = Word::from_str("banana");
        assert_eq!(w.len(), 6);
        assert_eq!(w.at(1), b'b' as u32);
        assert_eq!(w.at(6), b'a' as u32);
        assert_eq!(w.factor(2, 4), Word::from_str("ana"));
    }

    #[test]
    fn rejects_oversized_symbols() {
        assert!(Word::from_symbols(vec![0, MAX_ALPHABET]).is_err());
        assert!(Word::from_symbols(vec![0, MAX_ALPHABET - 1]).is_ok());
    }

    #[test]
    fn range_check() {
        let w = Word::from_str("ab");
        assert!(w.check_range(1, 2).is_ok());
        assert!(w.check_range(0, 2).is_err());
        assert!(w.check_range(1, 3).is_err());
        assert!(w.check_range(2, 1).is_err());
    }
}
