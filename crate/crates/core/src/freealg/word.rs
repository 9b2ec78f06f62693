use std::cmp::Ordering;
use std::fmt;

use super::GenId;

/// An element of the free monoid `X*`: a finite sequence of generator ids.
///
/// The empty word is the two-sided identity for concatenation and plays the
/// role of the unit `1` of the algebra. The derived `Ord` compares by length
/// first and then lexicographically by raw id; this is the container order
/// used for canonical storage, not necessarily the ambient monomial order
/// (see [`MonomialOrder`](super::MonomialOrder) for order-aware comparisons).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<GenId>,
}

impl Word {
    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn single(id: GenId) -> Self {
        Word { letters: vec![id] }
    }

    pub fn from_letters<I: Into<Vec<GenId>>>(letters: I) -> Self {
        Word {
            letters: letters.into(),
        }
    }

    /// Number of letters; the empty word has degree 0.
    pub fn degree(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[GenId] {
        &self.letters
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Concatenation of an arbitrary number of words.
    pub fn concat_all<'a, I: IntoIterator<Item = &'a Word>>(parts: I) -> Word {
        let mut letters = Vec::new();
        for part in parts {
            letters.extend_from_slice(&part.letters);
        }
        Word { letters }
    }

    /// The contiguous subword covering letter positions `start..end`.
    pub fn subword(&self, start: usize, end: usize) -> Word {
        Word {
            letters: self.letters[start..end].to_vec(),
        }
    }

    /// Leftmost start position of `factor` inside `self`, if any.
    ///
    /// The empty word is a factor of every word at position 0.
    pub fn find_factor(&self, factor: &Word) -> Option<usize> {
        let n = factor.letters.len();
        if n == 0 {
            return Some(0);
        }
        if n > self.letters.len() {
            return None;
        }
        self.letters.windows(n).position(|win| win == factor.letters)
    }

    /// All start positions of `factor` inside `self`, leftmost first.
    /// Occurrences may overlap. `factor` must be nonempty.
    pub fn factor_positions(&self, factor: &Word) -> Vec<usize> {
        assert!(!factor.is_empty(), "factor must be nonempty");
        let n = factor.letters.len();
        if n > self.letters.len() {
            return Vec::new();
        }
        self.letters
            .windows(n)
            .enumerate()
            .filter_map(|(i, win)| (win == factor.letters).then_some(i))
            .collect()
    }

    pub fn ends_with(&self, suffix: &[GenId]) -> bool {
        self.letters.ends_with(suffix)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            write!(f, "Word(1)")
        } else {
            write!(f, "Word(")?;
            for (i, id) in self.letters.iter().enumerate() {
                if i > 0 {
                    write!(f, ".")?;
                }
                write!(f, "{id}")?;
            }
            write!(f, ")")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[GenId]) -> Word {
        Word::from_letters(letters.to_vec())
    }

    #[test]
    fn concat_is_associative_with_identity() {
        let u = w(&[0, 1]);
        let v = w(&[2]);
        let e = Word::empty();
        assert_eq!(u.concat(&e), u);
        assert_eq!(e.concat(&u), u);
        assert_eq!(u.concat(&v).concat(&u), u.concat(&v.concat(&u)));
        assert_eq!(u.concat(&v).degree(), 3);
    }

    #[test]
    fn find_factor_is_leftmost() {
        let abcabc = w(&[0, 1, 2, 0, 1, 2]);
        let abc = w(&[0, 1, 2]);
        assert_eq!(abcabc.find_factor(&abc), Some(0));
        assert_eq!(abcabc.factor_positions(&abc), vec![0, 3]);
        assert_eq!(w(&[1, 0]).find_factor(&abc), None);
    }

    #[test]
    fn overlapping_occurrences_are_reported() {
        let aaa = w(&[0, 0, 0]);
        let aa = w(&[0, 0]);
        assert_eq!(aaa.factor_positions(&aa), vec![0, 1]);
    }

    #[test]
    fn container_order_is_length_first() {
        assert!(w(&[2]) < w(&[0, 0]));
        assert!(w(&[0, 1]) < w(&[0, 2]));
        assert!(Word::empty() < w(&[0]));
    }
}
