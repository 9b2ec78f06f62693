//! Computing with finitely presented associative algebras over the integers
//! via Gröbner-Shirshov bases.
//!
//! The crate works in the free algebra `ℤ⟨X⟩` over a finite alphabet `X`:
//! finite ℤ-linear combinations of words, with concatenation as the
//! (noncommutative) product. A presentation quotients the free algebra by
//! the two-sided ideal generated by a list of monic relations, and the
//! central computational tool is rewriting: a rule `g` with leading word
//! `g̅` eliminates an occurrence `a·g̅·b` inside a polynomial by subtracting
//! the matching multiple of `g`.
//!
//! The main entry points:
//!
//! * [`Presentation::parse`] reads a textual presentation (generators,
//!   ordering, relations) into a validated [`RuleSet`].
//! * [`RuleSet::normal_form`] reduces a polynomial to a normal form and
//!   records a replayable [`ReductionTrace`].
//! * [`gsb::check_gsb`] decides whether a rule set is a Gröbner-Shirshov
//!   basis by reducing all of its compositions; [`gsb::complete`] closes a
//!   rule set under compositions within explicit budgets.
//! * [`gsb::membership`] decides ideal membership on a verified basis and
//!   returns the reduction trace as a certificate.
//! * [`solver::invert_element`] searches for a two-sided inverse of an
//!   element by exact integer linear algebra over the irreducible-word
//!   basis up to a degree bound, then certifies the result by reduction.
//!
//! Every value is immutable after construction and every operation is a
//! pure function, so values can be shared and sent between threads freely;
//! reducing many polynomials against one shared [`RuleSet`] needs no
//! coordination.
//!
//! ```
//! use shirshov::{gsb, solver, InvertOutcome, Presentation};
//!
//! let pres = Presentation::parse(
//!     "generators: a b c\n\
//!      order: deglex a < b < c\n\
//!      relations:\n\
//!        (1 - a*b)*c = 1\n\
//!        c*(1 - a*b) = 1\n",
//! )
//! .unwrap();
//!
//! // The two defining relations already form a Gröbner-Shirshov basis.
//! let basis = gsb::Gsb::check(pres.rules().clone()).unwrap();
//!
//! // 1 - b*a is invertible, with inverse b*c*a + 1.
//! let u = pres.parse_polynomial("1 - b*a").unwrap();
//! match solver::invert_element(&u, &basis, 3).unwrap() {
//!     InvertOutcome::Inverse(cert) => {
//!         assert_eq!(pres.format_polynomial(&cert.inverse), "b*c*a + 1");
//!     }
//!     other => panic!("expected an inverse, got {other:?}"),
//! }
//! ```

pub mod freealg;
pub mod gsb;
pub mod rewrite;
pub mod solver;
pub mod text;

pub use freealg::{
    Alphabet, Coefficient, FreeAlgError, GenId, Generator, MonomialOrder, OrderKind, Polynomial,
    Word,
};
pub use gsb::{
    check_gsb, complete, find_compositions, membership, Combination, CompletionOutcome,
    CompletionResult, Composition, CompositionKind, Gsb, GsbEntry, GsbError, GsbReport,
    RuleOrigin, RuleProvenance,
};
pub use rewrite::{
    find_occurrence, reduce_once, Redex, ReductionMode, ReductionStep, ReductionTrace,
    RewriteError, RewriteRule, RuleSet,
};
pub use solver::{
    assemble_inverse_system, invert_element, solve_integer_linear, verify_inverse, IntMatrix,
    InverseCertificate, InvertOutcome, LinearSystem, SolverError, Verification,
};
pub use text::{format_polynomial, format_word, ParseError, ParseErrorKind, Presentation};
