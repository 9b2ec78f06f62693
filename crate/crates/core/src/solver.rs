//! Constructive two-sided inverses by degree-bounded linear algebra.
//!
//! To invert `u` modulo a Gröbner-Shirshov basis, write a candidate inverse
//! as `x = Σ αᵢ·uᵢ` over the irreducible words `u₁ > ⋯ > u_m` up to a degree
//! bound. Normal forms on a basis are ℤ-linear, so `u·x ≡ 1` and `x·u ≡ 1`
//! become the exact integer linear system `Σ αᵢ·NF(u·uᵢ) = 1`,
//! `Σ αᵢ·NF(uᵢ·u) = 1`, read coefficient-wise over every word that appears.
//! A solution is found (or ruled out) by Hermite-style column elimination
//! over ℤ, then certified independently by reducing `u·x - 1` and `x·u - 1`
//! to zero.
//!
//! No finite bound is complete: `NoSolutionUpToDegree` means "unknown beyond
//! this bound", never "not invertible".

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::freealg::{Coefficient, Polynomial, Word};
use crate::gsb::Gsb;
use crate::rewrite::{ReductionMode, ReductionTrace, RuleSet};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error("the element reduces to zero modulo the rules; zero is invertible only in the zero ring")]
    ZeroElement,
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// A dense matrix of arbitrary-precision integers, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Coefficient>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![Coefficient::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Coefficient::from(1));
        }
        m
    }

    /// Builds a matrix from rows, which must all have the same length.
    pub fn from_rows(rows: Vec<Vec<Coefficient>>) -> Self {
        let height = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(height * width);
        for row in rows {
            assert_eq!(row.len(), width, "rows must have equal length");
            data.extend(row);
        }
        IntMatrix {
            rows: height,
            cols: width,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Coefficient {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Coefficient) {
        self.data[r * self.cols + c] = value;
    }

    pub fn mul_vec(&self, x: &[Coefficient]) -> Vec<Coefficient> {
        assert_eq!(x.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Coefficient::zero();
                for (c, value) in x.iter().enumerate() {
                    acc += self.get(r, c) * value;
                }
                acc
            })
            .collect()
    }

    fn swap_cols(&mut self, c1: usize, c2: usize) {
        if c1 == c2 {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + c1, r * self.cols + c2);
        }
    }

    /// `col_target -= q · col_source`.
    fn col_sub_scaled(&mut self, target: usize, source: usize, q: &Coefficient) {
        for r in 0..self.rows {
            let delta = q * self.get(r, source);
            self.data[r * self.cols + target] -= delta;
        }
    }

    fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let value = -self.get(r, c);
            self.set(r, c, value);
        }
    }
}

/// Column-echelon (Hermite-style) form `h = a·u` with `u` unimodular.
/// Returns `(h, u, pivots)` where each pivot `(row, col)` is the first
/// nonzero entry of its column and pivot rows strictly increase.
fn column_echelon(a: &IntMatrix) -> (IntMatrix, IntMatrix, Vec<(usize, usize)>) {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.cols());
    let mut pivots = Vec::new();
    let mut pc = 0usize;
    for row in 0..h.rows() {
        if pc == h.cols() {
            break;
        }
        loop {
            let best = (pc..h.cols())
                .filter(|&c| !h.get(row, c).is_zero())
                .min_by(|&x, &y| h.get(row, x).abs().cmp(&h.get(row, y).abs()));
            let Some(best) = best else { break };
            h.swap_cols(pc, best);
            u.swap_cols(pc, best);
            let mut finished = true;
            for c in pc + 1..h.cols() {
                if h.get(row, c).is_zero() {
                    continue;
                }
                // Truncated division leaves |remainder| < |pivot|, so the
                // gcd sweep converges.
                let q = h.get(row, c) / h.get(row, pc);
                if !q.is_zero() {
                    h.col_sub_scaled(c, pc, &q);
                    u.col_sub_scaled(c, pc, &q);
                }
                if !h.get(row, c).is_zero() {
                    finished = false;
                }
            }
            if finished {
                break;
            }
        }
        if !h.get(row, pc).is_zero() {
            if h.get(row, pc).is_negative() {
                h.negate_col(pc);
                u.negate_col(pc);
            }
            pivots.push((row, pc));
            pc += 1;
        }
    }
    (h, u, pivots)
}

/// Finds some integer solution of `a·x = b`, or `None` when no integer
/// solution exists. The decision is exact: elimination uses unimodular
/// column operations only, and every returned vector is re-checked to
/// satisfy `a·x = b` by multiplication.
pub fn solve_integer_linear(a: &IntMatrix, b: &[Coefficient]) -> Option<Vec<Coefficient>> {
    assert_eq!(a.rows(), b.len(), "dimension mismatch");
    let (h, u, pivots) = column_echelon(a);
    let mut residue: Vec<Coefficient> = b.to_vec();
    let mut y = vec![Coefficient::zero(); a.cols()];
    for (row, col) in pivots {
        let pivot = h.get(row, col);
        let q = &residue[row] / pivot;
        if !(&residue[row] % pivot).is_zero() {
            return None;
        }
        if !q.is_zero() {
            // The pivot is the first nonzero entry of its column, so the
            // subtraction never touches earlier rows.
            for (r, value) in residue.iter_mut().enumerate().skip(row) {
                let delta = &q * h.get(r, col);
                *value -= delta;
            }
        }
        y[col] = q;
    }
    if residue.iter().any(|v| !v.is_zero()) {
        return None;
    }
    let x = u.mul_vec(&y);
    assert_eq!(
        a.mul_vec(&x).as_slice(),
        b,
        "integer solve must satisfy a·x = b exactly"
    );
    Some(x)
}

/// Which defining equation a system row came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquationSide {
    /// Rows of `Σ αᵢ·NF(u·uᵢ) = 1`.
    Left,
    /// Rows of `Σ αᵢ·NF(uᵢ·u) = 1`.
    Right,
}

/// The assembled coefficient system for an inverse search: one column per
/// basis word, one row per (side, word) pair that occurs in the normal
/// forms, with the right-hand side selecting the empty word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    pub matrix: IntMatrix,
    pub rhs: Vec<Coefficient>,
    pub row_labels: Vec<(EquationSide, Word)>,
    pub basis: Vec<Word>,
}

/// Assembles the two-sided inverse system for `u` over the given basis
/// words: `Σ αᵢ·NF(u·uᵢ) = 1` and `Σ αᵢ·NF(uᵢ·u) = 1`, coefficient-wise
/// over all words appearing.
pub fn assemble_inverse_system(
    u: &Polynomial,
    rules: &RuleSet,
    basis: &[Word],
) -> LinearSystem {
    let order = rules.order();
    let sides = [
        (
            EquationSide::Left,
            basis
                .iter()
                .map(|v| {
                    let product = u * &Polynomial::monomial(v.clone(), 1);
                    rules.normal_form(&product, ReductionMode::Full).0
                })
                .collect::<Vec<Polynomial>>(),
        ),
        (
            EquationSide::Right,
            basis
                .iter()
                .map(|v| {
                    let product = &Polynomial::monomial(v.clone(), 1) * u;
                    rules.normal_form(&product, ReductionMode::Full).0
                })
                .collect::<Vec<Polynomial>>(),
        ),
    ];

    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let mut row_labels = Vec::new();
    for (side, nfs) in &sides {
        let mut words: Vec<Word> = Vec::new();
        for nf in nfs {
            for w in nf.support() {
                if !words.contains(w) {
                    words.push(w.clone());
                }
            }
        }
        let empty = Word::empty();
        if !words.contains(&empty) {
            words.push(empty);
        }
        words.sort_by(|x, y| order.compare(y, x));
        for w in words {
            rows.push(nfs.iter().map(|nf| nf.coefficient(&w)).collect());
            rhs.push(if w.is_empty() {
                Coefficient::from(1)
            } else {
                Coefficient::zero()
            });
            row_labels.push((*side, w));
        }
    }
    LinearSystem {
        matrix: IntMatrix::from_rows(rows),
        rhs,
        row_labels,
        basis: basis.to_vec(),
    }
}

/// A certified two-sided inverse: `x` with both reductions `u·x - 1 → 0` and
/// `x·u - 1 → 0` recorded as traces. The inverse's support consists of
/// irreducible words of degree at most `degree_bound_used`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseCertificate {
    pub element: Polynomial,
    pub inverse: Polynomial,
    pub left_trace: ReductionTrace,
    pub right_trace: ReductionTrace,
    pub degree_bound_used: usize,
}

/// Outcome of [`invert_element`].
#[derive(Debug, Clone, PartialEq)]
pub enum InvertOutcome {
    Inverse(Box<InverseCertificate>),
    /// No inverse with support of degree ≤ `max_degree` exists. Larger
    /// bounds may still succeed; this is not a proof of non-invertibility.
    NoSolutionUpToDegree { max_degree: usize },
    /// The unit lies in the ideal, so the algebra is the zero ring: every
    /// element is invertible with inverse 0.
    TrivialRing,
}

/// Result of checking a candidate inverse by reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub ok: bool,
    pub left_trace: ReductionTrace,
    pub right_trace: ReductionTrace,
}

/// Reduces `u·x - 1` and `x·u - 1` to full normal form; `ok` holds exactly
/// when both are zero. The rules must form a Gröbner-Shirshov basis for a
/// negative answer to be conclusive.
pub fn verify_inverse(u: &Polynomial, x: &Polynomial, rules: &RuleSet) -> Verification {
    let one = Polynomial::one();
    let (left_nf, left_trace) = rules.normal_form(&(&(u * x) - &one), ReductionMode::Full);
    let (right_nf, right_trace) = rules.normal_form(&(&(x * u) - &one), ReductionMode::Full);
    Verification {
        ok: left_nf.is_zero() && right_nf.is_zero(),
        left_trace,
        right_trace,
    }
}

/// Searches for a two-sided inverse of `u` with support in the irreducible
/// words of degree at most `max_degree`.
///
/// The element is first reduced to normal form; a zero normal form is
/// rejected ([`SolverError::ZeroElement`]). The assembled integer system is
/// solved exactly; any solution is independently certified by
/// [`verify_inverse`] before being returned. A certified solution is the
/// unique inverse of `u` in the presented algebra. Verification failure
/// after a successful solve would indicate a linearity bug and aborts with
/// [`SolverError::Internal`].
pub fn invert_element(
    u: &Polynomial,
    gsb: &Gsb,
    max_degree: usize,
) -> Result<InvertOutcome, SolverError> {
    let rules = match gsb {
        Gsb::TrivialRing => return Ok(InvertOutcome::TrivialRing),
        Gsb::Basis(rules) => rules,
    };
    let (u_nf, _) = rules.normal_form(u, ReductionMode::Full);
    if u_nf.is_zero() {
        return Err(SolverError::ZeroElement);
    }
    let basis = rules.enumerate_irr(max_degree);
    let system = assemble_inverse_system(&u_nf, rules, &basis);
    let Some(solution) = solve_integer_linear(&system.matrix, &system.rhs) else {
        return Ok(InvertOutcome::NoSolutionUpToDegree { max_degree });
    };
    let inverse = Polynomial::from_terms(basis.into_iter().zip(solution));
    let verification = verify_inverse(u, &inverse, rules);
    if !verification.ok {
        return Err(SolverError::Internal(
            "a solution of the coefficient system failed reduction verification; \
             this indicates a normal-form linearity bug"
                .into(),
        ));
    }
    Ok(InvertOutcome::Inverse(Box::new(InverseCertificate {
        element: u.clone(),
        inverse,
        left_trace: verification.left_trace,
        right_trace: verification.right_trace,
        degree_bound_used: max_degree,
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::Presentation;

    const JACOBSON: &str = "\
generators: a b c
order: deglex a < b < c
relations:
  (1 - a*b)*c = 1
  c*(1 - a*b) = 1
";

    fn jacobson() -> Presentation {
        Presentation::parse(JACOBSON).unwrap()
    }

    fn big(n: i64) -> Coefficient {
        Coefficient::from(n)
    }

    fn vec_big(values: &[i64]) -> Vec<Coefficient> {
        values.iter().copied().map(Coefficient::from).collect()
    }

    #[test]
    fn solve_identity_system() {
        let a = IntMatrix::identity(2);
        let b = vec_big(&[3, -1]);
        assert_eq!(solve_integer_linear(&a, &b), Some(vec_big(&[3, -1])));
    }

    #[test]
    fn solve_detects_non_integer_systems() {
        let a = IntMatrix::from_rows(vec![vec_big(&[2])]);
        assert_eq!(solve_integer_linear(&a, &vec_big(&[1])), None);

        let inconsistent = IntMatrix::from_rows(vec![vec_big(&[1]), vec_big(&[1])]);
        assert_eq!(solve_integer_linear(&inconsistent, &vec_big(&[0, 1])), None);
    }

    #[test]
    fn solve_uses_column_combinations() {
        // 2x + y = 1 has integer solutions even though neither column
        // divides the target alone.
        let a = IntMatrix::from_rows(vec![vec_big(&[2, 1])]);
        let x = solve_integer_linear(&a, &vec_big(&[1])).unwrap();
        assert_eq!(a.mul_vec(&x), vec_big(&[1]));

        // gcd(2, 3) = 1.
        let a = IntMatrix::from_rows(vec![vec_big(&[2, 3])]);
        let x = solve_integer_linear(&a, &vec_big(&[1])).unwrap();
        assert_eq!(a.mul_vec(&x), vec_big(&[1]));

        // gcd(4, 6) = 2 does not reach 3.
        let a = IntMatrix::from_rows(vec![vec_big(&[4, 6])]);
        assert_eq!(solve_integer_linear(&a, &vec_big(&[3])), None);
    }

    #[test]
    fn two_unknown_jacobson_system() {
        // Restricting the basis to {bca, 1} reproduces the two-unknown
        // system whose unique solution selects both words with
        // coefficient 1.
        let p = jacobson();
        let u = p.parse_polynomial("1 - b*a").unwrap();
        let bca = p.parse_polynomial("b*c*a").unwrap();
        let (_, bca_word) = bca.leading_term(p.order()).unwrap();
        let basis = vec![bca_word.clone(), Word::empty()];
        let system = assemble_inverse_system(&u, p.rules(), &basis);
        assert_eq!(system.matrix.cols(), 2);
        let solution = solve_integer_linear(&system.matrix, &system.rhs).unwrap();
        assert_eq!(solution, vec_big(&[1, 1]));
        // Rows cover both sides and include the empty-word target rows.
        assert!(system
            .row_labels
            .iter()
            .any(|(side, w)| *side == EquationSide::Left && w.is_empty()));
        assert!(system
            .row_labels
            .iter()
            .any(|(side, w)| *side == EquationSide::Right && w.is_empty()));
    }

    #[test]
    fn inverts_one_minus_ba() {
        let p = jacobson();
        let basis = Gsb::check(p.rules().clone()).unwrap();
        let u = p.parse_polynomial("1 - b*a").unwrap();
        let outcome = invert_element(&u, &basis, 3).unwrap();
        let cert = match outcome {
            InvertOutcome::Inverse(cert) => cert,
            other => panic!("expected an inverse, got {other:?}"),
        };
        assert_eq!(p.format_polynomial(&cert.inverse), "b*c*a + 1");
        assert_eq!(cert.degree_bound_used, 3);
        // One application of the first rule on the left, the second on the
        // right.
        assert_eq!(cert.left_trace.len(), 1);
        assert_eq!(cert.left_trace.steps[0].rule_index, 0);
        assert_eq!(cert.right_trace.len(), 1);
        assert_eq!(cert.right_trace.steps[0].rule_index, 1);
        assert!(cert.left_trace.output.is_zero());
        assert!(cert.right_trace.output.is_zero());
        cert.left_trace.verify(p.rules()).unwrap();
        cert.right_trace.verify(p.rules()).unwrap();
        // Support lies inside the irreducible words and under the bound.
        assert!(p.rules().is_irreducible(&cert.inverse));
        assert!(cert.inverse.degree().unwrap() <= cert.degree_bound_used);
    }

    #[test]
    fn inverts_one_minus_ab_to_c() {
        let p = jacobson();
        let basis = Gsb::check(p.rules().clone()).unwrap();
        let u = p.parse_polynomial("1 - a*b").unwrap();
        match invert_element(&u, &basis, 3).unwrap() {
            InvertOutcome::Inverse(cert) => {
                assert_eq!(p.format_polynomial(&cert.inverse), "c");
            }
            other => panic!("expected an inverse, got {other:?}"),
        }
    }

    #[test]
    fn free_algebra_generator_is_not_invertible_up_to_degree() {
        let p = Presentation::parse("generators: a b\nrelations:\n").unwrap();
        let basis = Gsb::check(p.rules().clone()).unwrap();
        let u = p.parse_polynomial("a").unwrap();
        assert_eq!(
            invert_element(&u, &basis, 5).unwrap(),
            InvertOutcome::NoSolutionUpToDegree { max_degree: 5 }
        );
    }

    #[test]
    fn unit_inverts_to_itself() {
        let p = jacobson();
        let basis = Gsb::check(p.rules().clone()).unwrap();
        let one = p.parse_polynomial("1").unwrap();
        match invert_element(&one, &basis, 3).unwrap() {
            InvertOutcome::Inverse(cert) => {
                assert_eq!(cert.inverse, Polynomial::one());
                assert!(cert.left_trace.is_empty());
                assert!(cert.right_trace.is_empty());
            }
            other => panic!("expected an inverse, got {other:?}"),
        }
    }

    #[test]
    fn zero_element_is_rejected() {
        let p = jacobson();
        let basis = Gsb::check(p.rules().clone()).unwrap();
        let zero = Polynomial::zero();
        assert_eq!(
            invert_element(&zero, &basis, 3).unwrap_err(),
            SolverError::ZeroElement
        );
        // An element of the ideal reduces to zero as well.
        let f = p.parse_polynomial("a*b*c - c + 1").unwrap();
        assert_eq!(
            invert_element(&f, &basis, 3).unwrap_err(),
            SolverError::ZeroElement
        );
    }

    #[test]
    fn trivial_ring_short_circuits() {
        let p = jacobson();
        let u = p.parse_polynomial("a").unwrap();
        assert_eq!(
            invert_element(&u, &Gsb::TrivialRing, 3).unwrap(),
            InvertOutcome::TrivialRing
        );
    }

    #[test]
    fn verify_inverse_examples() {
        let p = jacobson();
        let rules = p.rules();
        let u = p.parse_polynomial("1 - b*a").unwrap();
        let x = p.parse_polynomial("b*c*a + 1").unwrap();
        let v = verify_inverse(&u, &x, rules);
        assert!(v.ok);
        assert_eq!(v.left_trace.steps[0].rule_index, 0);
        assert_eq!(v.right_trace.steps[0].rule_index, 1);

        let bad = verify_inverse(&u, &Polynomial::one(), rules);
        assert!(!bad.ok);
        assert_eq!(p.format_polynomial(&bad.left_trace.output), "-b*a");

        let trivial = verify_inverse(&Polynomial::one(), &Polynomial::one(), rules);
        assert!(trivial.ok);
    }

    #[test]
    fn inverse_is_stable_across_degree_bounds() {
        let p = jacobson();
        let basis = Gsb::check(p.rules().clone()).unwrap();
        let u = p.parse_polynomial("1 - b*a").unwrap();
        let mut inverses = Vec::new();
        for bound in [3, 4, 5] {
            match invert_element(&u, &basis, bound).unwrap() {
                InvertOutcome::Inverse(cert) => inverses.push(cert.inverse),
                other => panic!("expected an inverse at bound {bound}, got {other:?}"),
            }
        }
        for pair in inverses.windows(2) {
            // Supports lie in Irr(G), so equality modulo the ideal is
            // literal equality.
            assert_eq!(pair[0], pair[1]);
            let (nf, _) = p
                .rules()
                .normal_form(&(&pair[0] - &pair[1]), ReductionMode::Full);
            assert!(nf.is_zero());
        }
    }

    #[test]
    fn linearity_of_normal_forms_backs_the_system() {
        // NF(u·x - 1) computed directly equals Σ αᵢ·NF(u·uᵢ) - 1 for the
        // solved coefficients.
        let p = jacobson();
        let rules = p.rules();
        let u = p.parse_polynomial("1 - b*a").unwrap();
        let basis = rules.enumerate_irr(3);
        let coeffs: Vec<Coefficient> = (0..basis.len()).map(|i| big(i as i64 % 5 - 2)).collect();
        let x = Polynomial::from_terms(basis.iter().cloned().zip(coeffs.clone()));
        let direct = rules
            .normal_form(&(&(&u * &x) - &Polynomial::one()), ReductionMode::Full)
            .0;
        let mut assembled = Polynomial::zero();
        for (v, alpha) in basis.iter().zip(&coeffs) {
            let nf = rules
                .normal_form(&(&u * &Polynomial::monomial(v.clone(), 1)), ReductionMode::Full)
                .0;
            assembled = &assembled + &nf.scaled(alpha);
        }
        assembled = &assembled - &Polynomial::one();
        assert_eq!(direct, assembled);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            /// Random solvable systems are always solved, and exactly.
            #[test]
            fn solvable_systems_are_solved(
                entries in prop::collection::vec(-9i64..=9, 12),
                x0 in prop::collection::vec(-4i64..=4, 4),
            ) {
                let rows: Vec<Vec<Coefficient>> = entries
                    .chunks(4)
                    .map(|chunk| chunk.iter().copied().map(Coefficient::from).collect())
                    .collect();
                let a = IntMatrix::from_rows(rows);
                let x0: Vec<Coefficient> =
                    x0.into_iter().map(Coefficient::from).collect();
                let b = a.mul_vec(&x0);
                // solve_integer_linear asserts a·x = b internally.
                let x = solve_integer_linear(&a, &b);
                prop_assert!(x.is_some());
            }

            /// Products `u·v₁` that stay irreducible pin the leading term:
            /// a combination Σ αᵢ·u·vᵢ with v₁ the largest then cannot
            /// reduce to zero.
            #[test]
            fn irreducible_leading_products_block_reduction(
                u_letters in prop::collection::vec(0..3u32, 0..4),
                v_letters in prop::collection::vec(prop::collection::vec(0..3u32, 0..3), 1..4),
                alphas in prop::collection::vec(-5i64..=5, 4),
            ) {
                let p = jacobson();
                let rules = p.rules();
                let u = Word::from_letters(u_letters);
                prop_assume!(rules.is_irreducible_word(&u));
                let mut vs: Vec<Word> =
                    v_letters.into_iter().map(Word::from_letters).collect();
                vs.sort_by(|x, y| p.order().compare(y, x));
                vs.dedup();
                prop_assume!(vs.iter().all(|v| rules.is_irreducible_word(v)));
                prop_assume!(rules.is_irreducible_word(&u.concat(&vs[0])));

                let sum = Polynomial::from_terms(vs.iter().enumerate().map(|(i, v)| {
                    let alpha = alphas[i % alphas.len()];
                    let alpha = if alpha == 0 { 1 } else { alpha };
                    (u.concat(v), Coefficient::from(alpha))
                }));
                let (nf, _) = rules.normal_form(&sum, ReductionMode::Full);
                prop_assert!(!nf.is_zero());
            }
        }
    }
}
