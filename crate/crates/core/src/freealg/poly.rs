use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{Coefficient, GenId, MonomialOrder, Word};

/// An element of the free algebra `ℤ⟨X⟩`: a finite ℤ-linear combination of
/// words.
///
/// The representation is canonical: no duplicate words and no zero
/// coefficients are ever stored, and the zero polynomial is the empty map.
/// Structural equality therefore coincides with algebraic equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Word, Coefficient>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative identity: the empty-word monomial with
    /// coefficient 1.
    pub fn one() -> Self {
        Polynomial::monomial(Word::empty(), 1)
    }

    pub fn constant(n: impl Into<Coefficient>) -> Self {
        Polynomial::monomial(Word::empty(), n)
    }

    pub fn monomial(word: Word, coefficient: impl Into<Coefficient>) -> Self {
        let coefficient = coefficient.into();
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(word, coefficient);
        }
        Polynomial { terms }
    }

    /// Builds a polynomial from (word, coefficient) pairs, summing duplicate
    /// words and dropping zero coefficients.
    pub fn from_terms<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (Word, Coefficient)>,
    {
        let mut p = Polynomial::zero();
        for (word, coefficient) in pairs {
            p.add_term(&word, &coefficient);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The terms in the container order of [`Word`].
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Coefficient)> {
        self.terms.iter()
    }

    /// `Supp(p)`: the words with nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn get(&self, word: &Word) -> Option<&Coefficient> {
        self.terms.get(word)
    }

    /// Coefficient of `word`, zero if absent.
    pub fn coefficient(&self, word: &Word) -> Coefficient {
        self.terms.get(word).cloned().unwrap_or_else(Coefficient::zero)
    }

    /// Maximal degree over the support, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.support().map(Word::degree).max()
    }

    /// Largest generator id occurring in the support, `None` if no letters
    /// occur at all.
    pub fn max_gen_id(&self) -> Option<GenId> {
        self.support()
            .flat_map(|w| w.letters().iter().copied())
            .max()
    }

    /// The leading term `(lc(p), p̄)` under `ord`: the order-maximal word of
    /// the support with its coefficient. Returns `None` for the zero
    /// polynomial — callers must handle that case explicitly. A nonzero
    /// constant has leading word the empty word.
    pub fn leading_term<'a>(
        &'a self,
        ord: &MonomialOrder,
    ) -> Option<(&'a Coefficient, &'a Word)> {
        let word = ord.max_word(self.support())?;
        Some((&self.terms[word], word))
    }

    fn add_term(&mut self, word: &Word, coefficient: &Coefficient) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.get_mut(word) {
            Some(c) => {
                *c += coefficient;
                if c.is_zero() {
                    self.terms.remove(word);
                }
            }
            None => {
                self.terms.insert(word.clone(), coefficient.clone());
            }
        }
    }

    /// `k · p`.
    pub fn scaled(&self, k: &Coefficient) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c * k))
                .collect(),
        }
    }

    /// `left · p · right`: the polynomial with every support word framed by
    /// the given context words.
    pub fn in_context(&self, left: &Word, right: &Word) -> Polynomial {
        if left.is_empty() && right.is_empty() {
            return self.clone();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (Word::concat_all([left, w, right]), c.clone()))
                .collect(),
        }
    }

    /// In-place `self -= k · left · p · right`. This is the single-step
    /// rewrite kernel: subtracting a framed multiple of a rule.
    pub fn sub_mul_context(
        &mut self,
        k: &Coefficient,
        left: &Word,
        p: &Polynomial,
        right: &Word,
    ) {
        if k.is_zero() {
            return;
        }
        for (w, c) in &p.terms {
            let framed = Word::concat_all([left, w, right]);
            self.add_term(&framed, &(-(k * c)));
        }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "Polynomial(0)");
        }
        write!(f, "Polynomial(")?;
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·{w:?}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w, c);
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w, &-c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(&u.concat(v), &(a * b));
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}
