//! Words over the monoid `M_γ = ({0, …, γ}, max)` and the operad `T M_γ`.
//!
//! The arity of a word is its length; the partial composition `u ∘_i v`
//! inserts `v` at the `i`-th letter of `u`, multiplying every letter of
//! `v` on the left by `u_i` in the monoid, i.e. taking maxima.

use crate::{Error, Result};
use std::fmt;

/// A letter of the alphabet `{0, …, γ}`.
pub type Letter = u32;

/// The monoid product of `M_γ`: max, with `0` as unit.
pub fn max_join(a: Letter, b: Letter) -> Letter {
    a.max(b)
}

/// A nonempty word over `{0, …, γ}`, tagged with its ambient `γ`.
///
/// Words are immutable values; all operations return fresh words.
/// Positions are 1-based throughout.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    gamma: u32,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(gamma: u32, letters: Vec<Letter>) -> Result<Word> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        if let Some(&bad) = letters.iter().find(|&&l| l > gamma) {
            return Err(Error::LetterOutOfRange { letter: bad, gamma });
        }
        Ok(Word { gamma, letters })
    }

    /// The word "0", the unit of `T M_γ`.
    pub fn unit(gamma: u32) -> Word {
        Word { gamma, letters: vec![0] }
    }

    pub fn gamma(&self) -> u32 {
        self.gamma
    }

    pub fn arity(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// The letter at 1-based position `i`.
    pub fn letter(&self, i: usize) -> Letter {
        self.letters[i - 1]
    }

    /// Partial composition `self ∘_i v`: replaces the `i`-th letter `u_i`
    /// by the word `(u_i ↑ v_1) … (u_i ↑ v_m)`.
    pub fn compose(&self, i: usize, v: &Word) -> Result<Word> {
        if self.gamma != v.gamma {
            return Err(Error::GammaMismatch { left: self.gamma, right: v.gamma });
        }
        if i == 0 || i > self.arity() {
            return Err(Error::PositionOutOfRange { position: i, arity: self.arity() });
        }
        let ui = self.letters[i - 1];
        let mut letters = Vec::with_capacity(self.arity() + v.arity() - 1);
        letters.extend_from_slice(&self.letters[..i - 1]);
        letters.extend(v.letters.iter().map(|&l| max_join(ui, l)));
        letters.extend_from_slice(&self.letters[i..]);
        Ok(Word { gamma: self.gamma, letters })
    }

    /// Full composition `self ∘ (y_1, …, y_n)`, the right-to-left fold
    /// `(… ((x ∘_n y_n) ∘_{n−1} y_{n−1}) …) ∘_1 y_1`.
    pub fn full_compose(&self, ys: &[Word]) -> Result<Word> {
        if ys.len() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), got: ys.len() });
        }
        let mut acc = self.clone();
        for (i, y) in ys.iter().enumerate().rev() {
            acc = acc.compose(i + 1, y)?;
        }
        Ok(acc)
    }

    /// Concatenation; both words must share the same `γ`.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.gamma != other.gamma {
            return Err(Error::GammaMismatch { left: self.gamma, right: other.gamma });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word { gamma: self.gamma, letters })
    }

    /// Letter reversal.
    pub fn mirror(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { gamma: self.gamma, letters }
    }

    /// Reinterprets the word inside a larger alphabet, making the
    /// suboperad embedding `T M_γ ⊆ T M_{γ'}` explicit.
    pub fn widen(&self, gamma: u32) -> Result<Word> {
        if gamma < self.gamma {
            return Err(Error::LetterOutOfRange { letter: self.gamma, gamma });
        }
        Ok(Word { gamma, letters: self.letters.clone() })
    }

    /// Number of occurrences of a letter.
    pub fn count(&self, letter: Letter) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    /// Parses either the compact digit form ("2113") or the
    /// comma-separated form ("2,1,1,3").
    pub fn parse(s: &str, gamma: u32) -> Result<Word> {
        let s = s.trim();
        let letters: Vec<Letter> = if s.contains(',') {
            s.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::ParseWord(s.to_string()))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| Error::ParseWord(s.to_string())))
                .collect::<Result<_>>()?
        };
        Word::new(gamma, letters)
    }
}

impl fmt::Display for Word {
    /// Digit string for `γ ≤ 9`, comma-separated integers otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gamma <= 9 {
            for &l in &self.letters {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// All words of a given arity over `{0, …, γ}`, in lexicographic order.
/// Arity `0` yields nothing: words are nonempty.
pub fn all_words(gamma: u32, arity: usize) -> Vec<Word> {
    if arity == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = vec![0u32; arity];
    loop {
        out.push(Word { gamma, letters: current.clone() });
        // odometer increment
        let mut pos = arity;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if current[pos] < gamma {
                current[pos] += 1;
                for slot in current.iter_mut().skip(pos + 1) {
                    *slot = 0;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str, gamma: u32) -> Word {
        Word::parse(s, gamma).unwrap()
    }

    #[test]
    fn max_join_monoid() {
        assert_eq!(max_join(0, 3), 3);
        assert_eq!(max_join(2, 2), 2);
        assert_eq!(max_join(2, 0), 2);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(max_join(a, b), max_join(b, a));
                assert_eq!(max_join(a, 0), a);
                for c in 0..4 {
                    assert_eq!(max_join(max_join(a, b), c), max_join(a, max_join(b, c)));
                }
            }
        }
    }

    #[test]
    fn worked_compositions() {
        assert_eq!(w("211201", 4).compose(4, &w("31103", 4)).unwrap(), w("2113222301", 4));
        assert_eq!(w("111101", 2).compose(3, &w("20", 2)).unwrap(), w("1121101", 2));
        assert_eq!(w("1013", 3).compose(2, &w("210", 3)).unwrap(), w("121013", 3));
    }

    #[test]
    fn compose_rejects_bad_inputs() {
        assert_eq!(
            w("10", 2).compose(3, &w("0", 2)),
            Err(Error::PositionOutOfRange { position: 3, arity: 2 })
        );
        assert_eq!(
            w("10", 2).compose(1, &w("0", 3)),
            Err(Error::GammaMismatch { left: 2, right: 3 })
        );
        assert_eq!(Word::new(2, vec![]), Err(Error::EmptyWord));
        assert_eq!(Word::new(2, vec![3]), Err(Error::LetterOutOfRange { letter: 3, gamma: 2 }));
    }

    #[test]
    fn unit_axiom() {
        let x = w("102", 2);
        assert_eq!(Word::unit(2).compose(1, &x).unwrap(), x);
        for i in 1..=x.arity() {
            assert_eq!(x.compose(i, &Word::unit(2)).unwrap(), x);
        }
    }

    #[test]
    fn full_compose_matches_fold() {
        assert_eq!(Word::unit(2).full_compose(&[w("102", 2)]).unwrap(), w("102", 2));
        assert_eq!(
            w("10", 2).full_compose(&[w("0", 2), w("0", 2)]).unwrap(),
            w("10", 2)
        );
        // Fold computed by hand: (10 ∘_2 01) ∘_1 20 = 101 ∘_1 20 = 21 01.
        assert_eq!(
            w("10", 2).full_compose(&[w("20", 2), w("01", 2)]).unwrap(),
            w("2101", 2)
        );
        assert_eq!(
            w("10", 2).full_compose(&[w("20", 2)]),
            Err(Error::ArityMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn series_and_parallel_axioms_small() {
        // Exhaustive over all words of arity <= 3 with gamma <= 2.
        for gamma in 0..=2u32 {
            let mut words = Vec::new();
            for n in 1..=3 {
                words.extend(all_words(gamma, n));
            }
            for x in &words {
                for y in &words {
                    for z in &words {
                        let n = x.arity();
                        let m = y.arity();
                        for i in 1..=n {
                            for j in 1..=m {
                                let lhs = x.compose(i, y).unwrap().compose(i + j - 1, z).unwrap();
                                let rhs = x.compose(i, &y.compose(j, z).unwrap()).unwrap();
                                assert_eq!(lhs, rhs, "series axiom");
                            }
                            for jj in (i + 1)..=n {
                                let lhs =
                                    x.compose(i, y).unwrap().compose(jj + m - 1, z).unwrap();
                                let rhs = x.compose(jj, z).unwrap().compose(i, y).unwrap();
                                assert_eq!(lhs, rhs, "parallel axiom");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parse_and_display_roundtrip() {
        assert_eq!(w("2113222301", 4).to_string(), "2113222301");
        let big = Word::parse("2,11,0,3", 11).unwrap();
        assert_eq!(big.letters(), &[2, 11, 0, 3]);
        assert_eq!(big.to_string(), "2,11,0,3");
        assert_eq!(Word::parse("2,11,0,3", 11).unwrap(), big);
        assert!(Word::parse("1a2", 4).is_err());
    }

    #[test]
    fn widen_embeds() {
        let x = w("102", 2);
        let wide = x.widen(5).unwrap();
        assert_eq!(wide.gamma(), 5);
        assert_eq!(wide.letters(), x.letters());
        assert!(w("102", 2).widen(1).is_err());
    }

    #[test]
    fn all_words_counts_and_order() {
        let ws = all_words(2, 3);
        assert_eq!(ws.len(), 27);
        let mut sorted = ws.clone();
        sorted.sort();
        assert_eq!(ws, sorted);
    }
}
