//! The free associative algebra `ℤ⟨X⟩`: generators, words, arbitrary-precision
//! integer coefficients, polynomials, and monomial orderings.

mod order;
mod poly;
mod word;

pub use order::{MonomialOrder, OrderKind};
pub use poly::Polynomial;
pub use word::Word;

use thiserror::Error;

/// Index of a generator inside its alphabet.
pub type GenId = u32;

/// Exact integer coefficient. Arithmetic never overflows or rounds.
pub type Coefficient = num_bigint::BigInt;

/// Errors from constructing or using alphabets and orderings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeAlgError {
    #[error("alphabet must contain at least one generator")]
    EmptyAlphabet,
    #[error("invalid generator name `{0}`: a name starts with a letter and contains only letters, digits and underscores")]
    InvalidName(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("generator id {id} is outside the alphabet of size {alphabet_size}")]
    UnknownGenerator { id: GenId, alphabet_size: usize },
    #[error("precedence list is not a permutation of the generator ids")]
    BadPrecedence,
}

/// A named generator of the free algebra.
///
/// Ids are consecutive from 0 in declaration order and names are unique
/// within one [`Alphabet`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    id: GenId,
    name: String,
}

impl Generator {
    pub fn id(&self) -> GenId {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

/// A nonempty, ordered list of named generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    gens: Vec<Generator>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    /// Builds an alphabet from generator names in declaration order.
    pub fn new<I, S>(names: I) -> Result<Self, FreeAlgError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut gens: Vec<Generator> = Vec::new();
        for name in names {
            let name = name.into();
            if !valid_name(&name) {
                return Err(FreeAlgError::InvalidName(name));
            }
            if gens.iter().any(|g| g.name == name) {
                return Err(FreeAlgError::DuplicateName(name));
            }
            gens.push(Generator {
                id: gens.len() as GenId,
                name,
            });
        }
        if gens.is_empty() {
            return Err(FreeAlgError::EmptyAlphabet);
        }
        Ok(Alphabet { gens })
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    /// Alphabets are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn name(&self, id: GenId) -> Option<&str> {
        self.gens.get(id as usize).map(|g| g.name.as_str())
    }

    pub fn id_of(&self, name: &str) -> Option<GenId> {
        self.gens.iter().find(|g| g.name == name).map(|g| g.id)
    }

    /// True when every letter of `w` is a generator of this alphabet.
    pub fn contains_word(&self, w: &Word) -> bool {
        w.letters().iter().all(|&id| (id as usize) < self.gens.len())
    }

    /// True when every word in the support of `p` lies over this alphabet.
    pub fn contains_polynomial(&self, p: &Polynomial) -> bool {
        p.support().all(|w| self.contains_word(w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_assigns_consecutive_ids() {
        let alpha = Alphabet::new(["a", "b", "c"]).unwrap();
        assert_eq!(alpha.len(), 3);
        assert_eq!(alpha.id_of("b"), Some(1));
        assert_eq!(alpha.name(2), Some("c"));
        assert_eq!(alpha.name(3), None);
    }

    #[test]
    fn alphabet_rejects_bad_input() {
        assert_eq!(
            Alphabet::new(Vec::<String>::new()),
            Err(FreeAlgError::EmptyAlphabet)
        );
        assert_eq!(
            Alphabet::new(["a", "a"]),
            Err(FreeAlgError::DuplicateName("a".into()))
        );
        assert_eq!(
            Alphabet::new(["1x"]),
            Err(FreeAlgError::InvalidName("1x".into()))
        );
        assert_eq!(
            Alphabet::new(["x y"]),
            Err(FreeAlgError::InvalidName("x y".into()))
        );
    }

    #[test]
    fn multi_character_names_are_fine() {
        let alpha = Alphabet::new(["alpha", "beta_2"]).unwrap();
        assert_eq!(alpha.id_of("beta_2"), Some(1));
    }
}
