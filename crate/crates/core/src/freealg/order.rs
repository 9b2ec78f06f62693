use std::cmp::Ordering;

use super::{FreeAlgError, GenId, Word};

/// The family a [`MonomialOrder`] belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[non_exhaustive]
pub enum OrderKind {
    /// Total degree first, ties broken left to right by generator precedence.
    DegLex,
}

/// A monomial ordering on words: total, well founded, multiplicative
/// (`u < v` implies `aub < avb`), with the empty word as minimum.
///
/// Only degree-lexicographic orders are implemented; the precedence is an
/// arbitrary permutation of the generator ids, smallest generator first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    /// `precedence[k]` is the generator id with rank `k` (smallest first).
    precedence: Vec<GenId>,
    /// `rank[id]` is the position of `id` in `precedence`.
    rank: Vec<u32>,
}

impl MonomialOrder {
    /// Degree-lexicographic order with the given precedence chain,
    /// smallest generator first. `precedence` must be a permutation of
    /// `0..precedence.len()`.
    pub fn deglex(precedence: Vec<GenId>) -> Result<Self, FreeAlgError> {
        let n = precedence.len();
        let mut rank = vec![u32::MAX; n];
        for (pos, &id) in precedence.iter().enumerate() {
            let slot = rank
                .get_mut(id as usize)
                .ok_or(FreeAlgError::BadPrecedence)?;
            if *slot != u32::MAX {
                return Err(FreeAlgError::BadPrecedence);
            }
            *slot = pos as u32;
        }
        Ok(MonomialOrder {
            kind: OrderKind::DegLex,
            precedence,
            rank,
        })
    }

    /// Degree-lexicographic order in generator-declaration order
    /// (generator 0 smallest).
    pub fn deglex_default(alphabet_size: usize) -> Self {
        MonomialOrder::deglex((0..alphabet_size as GenId).collect())
            .expect("identity precedence is a permutation")
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    /// Precedence chain, smallest generator first.
    pub fn precedence(&self) -> &[GenId] {
        &self.precedence
    }

    pub fn alphabet_size(&self) -> usize {
        self.rank.len()
    }

    fn rank_of(&self, id: GenId) -> Result<u32, FreeAlgError> {
        self.rank
            .get(id as usize)
            .copied()
            .ok_or(FreeAlgError::UnknownGenerator {
                id,
                alphabet_size: self.rank.len(),
            })
    }

    /// Compares two words, reporting an error if either uses a generator id
    /// outside this order's alphabet.
    pub fn try_compare(&self, u: &Word, v: &Word) -> Result<Ordering, FreeAlgError> {
        match u.degree().cmp(&v.degree()) {
            Ordering::Equal => {}
            other => {
                // Degrees decide, but still validate the letters.
                for &id in u.letters().iter().chain(v.letters()) {
                    self.rank_of(id)?;
                }
                return Ok(other);
            }
        }
        for (&x, &y) in u.letters().iter().zip(v.letters()) {
            let rx = self.rank_of(x)?;
            let ry = self.rank_of(y)?;
            match rx.cmp(&ry) {
                Ordering::Equal => {}
                other => return Ok(other),
            }
        }
        Ok(Ordering::Equal)
    }

    /// Compares two words.
    ///
    /// Panics if either word uses a generator id outside this order's
    /// alphabet; use [`try_compare`](Self::try_compare) to handle that case.
    pub fn compare(&self, u: &Word, v: &Word) -> Ordering {
        self.try_compare(u, v)
            .expect("words lie over the order's alphabet")
    }

    /// The maximal word of a nonempty collection, `None` for an empty one.
    pub fn max_word<'a, I: IntoIterator<Item = &'a Word>>(&self, words: I) -> Option<&'a Word> {
        words
            .into_iter()
            .max_by(|x, y| self.compare(x, y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[GenId]) -> Word {
        Word::from_letters(letters.to_vec())
    }

    // Over {a, b, c} with a < b < c: a = 0, b = 1, c = 2.
    fn abc_order() -> MonomialOrder {
        MonomialOrder::deglex_default(3)
    }

    #[test]
    fn degree_decides_first() {
        let ord = abc_order();
        // bc < bca
        assert_eq!(ord.compare(&w(&[1, 2]), &w(&[1, 2, 0])), Ordering::Less);
        // empty < a
        assert_eq!(ord.compare(&Word::empty(), &w(&[0])), Ordering::Less);
    }

    #[test]
    fn ties_break_left_to_right() {
        let ord = abc_order();
        // abc < cab: equal degree, first letters a < c
        assert_eq!(
            ord.compare(&w(&[0, 1, 2]), &w(&[2, 0, 1])),
            Ordering::Less
        );
        assert_eq!(ord.compare(&w(&[0, 1, 2]), &w(&[0, 1, 2])), Ordering::Equal);
    }

    #[test]
    fn custom_precedence_applies() {
        // c < a < b over ids a=0, b=1, c=2.
        let ord = MonomialOrder::deglex(vec![2, 0, 1]).unwrap();
        assert_eq!(ord.compare(&w(&[2]), &w(&[0])), Ordering::Less);
        assert_eq!(ord.compare(&w(&[1]), &w(&[0])), Ordering::Greater);
    }

    #[test]
    fn foreign_ids_are_reported() {
        let ord = abc_order();
        assert_eq!(
            ord.try_compare(&w(&[7]), &w(&[0])),
            Err(FreeAlgError::UnknownGenerator {
                id: 7,
                alphabet_size: 3
            })
        );
        // Degrees differ, the foreign letter must still be caught.
        assert!(ord.try_compare(&w(&[7, 0]), &w(&[0])).is_err());
    }

    #[test]
    fn bad_precedence_rejected() {
        assert_eq!(
            MonomialOrder::deglex(vec![0, 0]),
            Err(FreeAlgError::BadPrecedence)
        );
        assert_eq!(
            MonomialOrder::deglex(vec![1, 2]),
            Err(FreeAlgError::BadPrecedence)
        );
    }
}
