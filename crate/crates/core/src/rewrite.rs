//! Reduction modulo a set of monic rewrite rules: single steps, chained
//! reduction to normal form, irreducibility, and replayable traces.
//!
//! A rule is a monic polynomial `g`; its leading word `g̅` rewrites. Reducing
//! a polynomial `p` at a support word `w = a·g̅·b` with coefficient `α`
//! subtracts `α·a·g·b`, which removes the term `α·w` and only introduces
//! words strictly smaller than `w`. Chains of such steps terminate because
//! the monomial order is well founded.

use num_traits::One;
use thiserror::Error;

use crate::freealg::{Alphabet, Coefficient, GenId, MonomialOrder, Polynomial, Word};

/// Errors from building rule sets or applying reductions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum RewriteError {
    #[error("rule {index} is not monic: leading coefficient {lc}")]
    NonMonicRule { index: usize, lc: Coefficient },
    #[error("rule {index} is a nonzero constant: it rewrites every word, so the presented algebra collapses")]
    ConstantRule { index: usize },
    #[error("rule {index} is the zero polynomial")]
    ZeroRule { index: usize },
    #[error("rules {first} and {second} are identical polynomials")]
    DuplicateRule { first: usize, second: usize },
    #[error("rule {index} uses generator id {id} outside the alphabet")]
    ForeignGenerator { index: usize, id: GenId },
    #[error("the order covers {order_size} generators but the alphabet has {alphabet_size}")]
    OrderMismatch {
        order_size: usize,
        alphabet_size: usize,
    },
    #[error("the target word is not in the polynomial's support")]
    TargetNotInSupport,
    #[error("the rule's leading word does not occur in the target word")]
    NoOccurrence,
    #[error("trace replay failed at step {step}: {reason}")]
    ReplayMismatch { step: usize, reason: String },
}

/// A monic rewrite rule: the polynomial, its cached leading word, and its
/// position in the owning [`RuleSet`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    poly: Polynomial,
    lead: Word,
    index: usize,
}

impl RewriteRule {
    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    /// The leading word `g̅`; never empty.
    pub fn lead(&self) -> &Word {
        &self.lead
    }

    pub fn index(&self) -> usize {
        self.index
    }
}

/// An alphabet, a monomial order, and an ordered list of monic rules.
///
/// Construction validates every invariant: the order covers the alphabet,
/// every rule is over the alphabet, nonzero, non-constant, has leading
/// coefficient exactly 1, and no two rules are identical polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSet {
    alphabet: Alphabet,
    order: MonomialOrder,
    rules: Vec<RewriteRule>,
}

/// Which terms a reduction chain is allowed to touch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionMode {
    /// Reduce only the leading term, stopping as soon as it is irreducible.
    Head,
    /// Keep reducing until every support word is irreducible.
    Full,
}

/// One admissible reduction site: `word` is a support word of the current
/// polynomial and the lead of rule `rule` starts at letter `position`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Redex {
    pub word: Word,
    pub position: usize,
    pub rule: usize,
}

/// One recorded reduction step: the term `coefficient · reduced_word` was
/// eliminated by subtracting `coefficient · left_context · g · right_context`
/// where `g` is the rule at `rule_index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub rule_index: usize,
    pub left_context: Word,
    pub right_context: Word,
    pub coefficient: Coefficient,
    pub reduced_word: Word,
}

/// A replayable chain of reduction steps from `input` to `output`.
///
/// `input - output` equals the explicit combination
/// `Σ coefficientᵢ · leftᵢ · gᵢ · rightᵢ` read off the steps, so a trace
/// doubles as a membership certificate for the ideal generated by the rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub input: Polynomial,
    pub steps: Vec<ReductionStep>,
    pub output: Polynomial,
}

impl ReductionTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays the steps on `input`, checking each one against the rule set,
    /// and returns the final polynomial.
    pub fn replay(&self, rules: &RuleSet) -> Result<Polynomial, RewriteError> {
        let mut current = self.input.clone();
        for (k, step) in self.steps.iter().enumerate() {
            let mismatch = |reason: String| RewriteError::ReplayMismatch { step: k, reason };
            let rule = rules
                .get(step.rule_index)
                .ok_or_else(|| mismatch(format!("rule index {} out of range", step.rule_index)))?;
            let framed = Word::concat_all([&step.left_context, &rule.lead, &step.right_context]);
            if framed != step.reduced_word {
                return Err(mismatch(
                    "context words do not frame the rule's leading word".into(),
                ));
            }
            match current.get(&step.reduced_word) {
                Some(c) if *c == step.coefficient => {}
                Some(c) => {
                    return Err(mismatch(format!(
                        "recorded coefficient {} but the polynomial carries {}",
                        step.coefficient, c
                    )))
                }
                None => return Err(mismatch("reduced word is not in the support".into())),
            }
            current.sub_mul_context(
                &step.coefficient,
                &step.left_context,
                &rule.poly,
                &step.right_context,
            );
        }
        Ok(current)
    }

    /// Checks that replaying the steps reproduces the recorded output.
    pub fn verify(&self, rules: &RuleSet) -> Result<(), RewriteError> {
        let replayed = self.replay(rules)?;
        if replayed != self.output {
            return Err(RewriteError::ReplayMismatch {
                step: self.steps.len(),
                reason: "replay does not reproduce the recorded output".into(),
            });
        }
        Ok(())
    }

    /// The explicit combination `Σ coefficientᵢ · leftᵢ · gᵢ · rightᵢ`;
    /// equals `input - output` for a valid trace.
    pub fn combination(&self, rules: &RuleSet) -> Polynomial {
        let mut sum = Polynomial::zero();
        for step in &self.steps {
            if let Some(rule) = rules.get(step.rule_index) {
                let mut framed = rule.poly.in_context(&step.left_context, &step.right_context);
                framed = framed.scaled(&step.coefficient);
                sum = &sum + &framed;
            }
        }
        sum
    }
}

/// The leftmost factorization `w = left · lead · right`, if `lead` occurs in
/// `w`. `lead` must be nonempty.
pub fn find_occurrence(w: &Word, lead: &Word) -> Option<(Word, Word)> {
    assert!(!lead.is_empty(), "rule leading words are nonempty");
    let pos = w.find_factor(lead)?;
    Some((
        w.subword(0, pos),
        w.subword(pos + lead.degree(), w.degree()),
    ))
}

/// Eliminates the term of `p` at `target` with rule `rule`, using the
/// leftmost occurrence of the rule's leading word inside `target`.
///
/// Every word the step introduces is strictly smaller than `target`.
pub fn reduce_once(
    p: &Polynomial,
    rule: &RewriteRule,
    target: &Word,
) -> Result<(Polynomial, ReductionStep), RewriteError> {
    let coefficient = p.get(target).ok_or(RewriteError::TargetNotInSupport)?.clone();
    let (left, right) = find_occurrence(target, &rule.lead).ok_or(RewriteError::NoOccurrence)?;
    let mut out = p.clone();
    out.sub_mul_context(&coefficient, &left, &rule.poly, &right);
    let step = ReductionStep {
        rule_index: rule.index,
        left_context: left,
        right_context: right,
        coefficient,
        reduced_word: target.clone(),
    };
    Ok((out, step))
}

impl RuleSet {
    /// Validates the polynomials and builds the rule set.
    pub fn new(
        alphabet: Alphabet,
        order: MonomialOrder,
        polys: Vec<Polynomial>,
    ) -> Result<Self, RewriteError> {
        if order.alphabet_size() != alphabet.len() {
            return Err(RewriteError::OrderMismatch {
                order_size: order.alphabet_size(),
                alphabet_size: alphabet.len(),
            });
        }
        let mut rules: Vec<RewriteRule> = Vec::new();
        for (index, poly) in polys.into_iter().enumerate() {
            if let Some(id) = poly
                .support()
                .flat_map(|w| w.letters().iter().copied())
                .find(|&id| id as usize >= alphabet.len())
            {
                return Err(RewriteError::ForeignGenerator { index, id });
            }
            let (lc, lead) = match poly.leading_term(&order) {
                None => return Err(RewriteError::ZeroRule { index }),
                Some((lc, lead)) => (lc.clone(), lead.clone()),
            };
            if lead.is_empty() {
                return Err(RewriteError::ConstantRule { index });
            }
            if !lc.is_one() {
                return Err(RewriteError::NonMonicRule { index, lc });
            }
            if let Some(first) = rules.iter().position(|r| r.poly == poly) {
                return Err(RewriteError::DuplicateRule {
                    first,
                    second: index,
                });
            }
            rules.push(RewriteRule { poly, lead, index });
        }
        Ok(RuleSet {
            alphabet,
            order,
            rules,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn get(&self, index: usize) -> Option<&RewriteRule> {
        self.rules.get(index)
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Largest degree over the rules' leading words, 0 for an empty set.
    pub fn max_lead_degree(&self) -> usize {
        self.rules.iter().map(|r| r.lead.degree()).max().unwrap_or(0)
    }

    /// The polynomials of the rules in order.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.rules.iter().map(|r| r.poly.clone()).collect()
    }

    /// True iff no rule's leading word occurs as a factor of `w`.
    pub fn is_irreducible_word(&self, w: &Word) -> bool {
        self.rules.iter().all(|r| w.find_factor(&r.lead).is_none())
    }

    /// True iff every support word of `p` is irreducible.
    pub fn is_irreducible(&self, p: &Polynomial) -> bool {
        p.support().all(|w| self.is_irreducible_word(w))
    }

    /// All admissible reduction sites inside the single word `w`, ordered by
    /// position and then rule index.
    fn word_redexes(&self, w: &Word) -> Vec<Redex> {
        let mut out = Vec::new();
        for position in 0..=w.degree() {
            for (rule, r) in self.rules.iter().enumerate() {
                let l = r.lead.degree();
                if position + l <= w.degree()
                    && w.letters()[position..position + l] == *r.lead.letters()
                {
                    out.push(Redex {
                        word: w.clone(),
                        position,
                        rule,
                    });
                }
            }
        }
        out
    }

    /// Admissible reduction sites of `p` under `mode`, in the canonical
    /// order: support word descending in the monomial order, then position
    /// ascending, then rule index ascending. The first entry is the choice
    /// of the deterministic strategy.
    pub fn redexes(&self, p: &Polynomial, mode: ReductionMode) -> Vec<Redex> {
        match mode {
            ReductionMode::Head => match p.leading_term(&self.order) {
                None => Vec::new(),
                Some((_, lead_word)) => self.word_redexes(lead_word),
            },
            ReductionMode::Full => {
                let mut words: Vec<&Word> = p.support().collect();
                words.sort_by(|x, y| self.order.compare(y, x));
                words.into_iter().flat_map(|w| self.word_redexes(w)).collect()
            }
        }
    }

    /// Reduces `p` with the deterministic strategy: always the largest
    /// reducible support word, its leftmost occurrence, and the matching
    /// rule of lowest index. Traces are therefore reproducible byte for
    /// byte.
    ///
    /// `Head` mode repeatedly reduces only the leading term until it is
    /// irreducible or the polynomial is 0. `Full` mode continues on lower
    /// terms until the whole support is irreducible.
    pub fn normal_form(
        &self,
        p: &Polynomial,
        mode: ReductionMode,
    ) -> (Polynomial, ReductionTrace) {
        self.normal_form_with(p, mode, |_| 0)
    }

    /// Like [`normal_form`](Self::normal_form) but lets `pick` choose among
    /// the admissible redexes at every step. On a Gröbner-Shirshov basis the
    /// result is independent of the strategy; in general only termination
    /// and soundness of the trace are guaranteed.
    pub fn normal_form_with<F>(
        &self,
        p: &Polynomial,
        mode: ReductionMode,
        mut pick: F,
    ) -> (Polynomial, ReductionTrace)
    where
        F: FnMut(&[Redex]) -> usize,
    {
        let mut current = p.clone();
        let mut steps = Vec::new();
        loop {
            let candidates = self.redexes(&current, mode);
            if candidates.is_empty() {
                break;
            }
            let choice = pick(&candidates);
            assert!(
                choice < candidates.len(),
                "strategy picked redex {choice} of {}",
                candidates.len()
            );
            let redex = &candidates[choice];
            let rule = &self.rules[redex.rule];
            let coefficient = current.coefficient(&redex.word);
            let left = redex.word.subword(0, redex.position);
            let right = redex
                .word
                .subword(redex.position + rule.lead.degree(), redex.word.degree());
            current.sub_mul_context(&coefficient, &left, &rule.poly, &right);
            steps.push(ReductionStep {
                rule_index: redex.rule,
                left_context: left,
                right_context: right,
                coefficient,
                reduced_word: redex.word.clone(),
            });
        }
        let trace = ReductionTrace {
            input: p.clone(),
            steps,
            output: current.clone(),
        };
        (current, trace)
    }

    /// All irreducible words of degree at most `max_degree`, sorted
    /// descending in the monomial order.
    pub fn enumerate_irr(&self, max_degree: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut prefix: Vec<GenId> = Vec::new();
        self.collect_irr(&mut prefix, max_degree, &mut out);
        out.sort_by(|x, y| self.order.compare(y, x));
        out
    }

    // A new occurrence of a lead in `prefix + id` must end at the last
    // letter, so extending an irreducible prefix only needs a suffix check.
    fn collect_irr(&self, prefix: &mut Vec<GenId>, max_degree: usize, out: &mut Vec<Word>) {
        out.push(Word::from_letters(prefix.clone()));
        if prefix.len() == max_degree {
            return;
        }
        for id in 0..self.alphabet.len() as GenId {
            prefix.push(id);
            if !self.rules.iter().any(|r| prefix.ends_with(r.lead.letters())) {
                self.collect_irr(prefix, max_degree, out);
            }
            prefix.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::FreeAlgError;

    fn w(letters: &[GenId]) -> Word {
        Word::from_letters(letters.to_vec())
    }

    fn big(n: i64) -> Coefficient {
        Coefficient::from(n)
    }

    // a = 0, b = 1, c = 2; f = abc - c + 1, g = cab - c + 1.
    fn f_poly() -> Polynomial {
        Polynomial::from_terms([
            (w(&[0, 1, 2]), big(1)),
            (w(&[2]), big(-1)),
            (Word::empty(), big(1)),
        ])
    }

    fn g_poly() -> Polynomial {
        Polynomial::from_terms([
            (w(&[2, 0, 1]), big(1)),
            (w(&[2]), big(-1)),
            (Word::empty(), big(1)),
        ])
    }

    fn jacobson_rules() -> RuleSet {
        let alphabet = Alphabet::new(["a", "b", "c"]).unwrap();
        let order = MonomialOrder::deglex_default(3);
        RuleSet::new(alphabet, order, vec![f_poly(), g_poly()]).unwrap()
    }

    #[test]
    fn occurrence_examples() {
        let abc = w(&[0, 1, 2]);
        // babca = b·abc·a
        assert_eq!(
            find_occurrence(&w(&[1, 0, 1, 2, 0]), &abc),
            Some((w(&[1]), w(&[0])))
        );
        assert_eq!(find_occurrence(&w(&[1, 0]), &abc), None);
        // leftmost convention on abcabc
        assert_eq!(
            find_occurrence(&w(&[0, 1, 2, 0, 1, 2]), &abc),
            Some((Word::empty(), abc.clone()))
        );
    }

    #[test]
    fn occurrence_leftmost_agrees_with_scan() {
        // Independent check of the leftmost convention: scan every split.
        let word = w(&[0, 1, 2, 0, 1, 2]);
        let abc = w(&[0, 1, 2]);
        let mut splits = Vec::new();
        for pos in 0..=word.degree() - abc.degree() {
            if word.letters()[pos..pos + abc.degree()] == *abc.letters() {
                splits.push((
                    word.subword(0, pos),
                    word.subword(pos + abc.degree(), word.degree()),
                ));
            }
        }
        assert_eq!(splits.len(), 2);
        assert_eq!(find_occurrence(&word, &abc), Some(splits[0].clone()));
    }

    #[test]
    fn reduce_once_examples() {
        let rules = jacobson_rules();
        let f = &rules.rules()[0];

        // babca + ba - bca reduces to 0 in one application of f
        let p = Polynomial::from_terms([
            (w(&[1, 0, 1, 2, 0]), big(1)),
            (w(&[1, 0]), big(1)),
            (w(&[1, 2, 0]), big(-1)),
        ]);
        let (h, step) = reduce_once(&p, f, &w(&[1, 0, 1, 2, 0])).unwrap();
        assert!(h.is_zero());
        assert_eq!(step.left_context, w(&[1]));
        assert_eq!(step.right_context, w(&[0]));
        assert_eq!(step.coefficient, big(1));

        // f reduces to 0 by itself
        let (h, _) = reduce_once(&f_poly(), f, &w(&[0, 1, 2])).unwrap();
        assert!(h.is_zero());

        // 3·abc -> 3c - 3; check by expanding 3·abc - 3·(abc - c + 1)
        let p = Polynomial::monomial(w(&[0, 1, 2]), 3);
        let (h, step) = reduce_once(&p, f, &w(&[0, 1, 2])).unwrap();
        let expected = &p - &f_poly().scaled(&big(3));
        assert_eq!(h, expected);
        assert_eq!(
            h,
            Polynomial::from_terms([(w(&[2]), big(3)), (Word::empty(), big(-3))])
        );
        assert_eq!(step.coefficient, big(3));
    }

    #[test]
    fn reduce_once_errors() {
        let rules = jacobson_rules();
        let f = &rules.rules()[0];
        let p = Polynomial::monomial(w(&[1, 0]), 1);
        assert_eq!(
            reduce_once(&p, f, &w(&[0, 1, 2])).unwrap_err(),
            RewriteError::TargetNotInSupport
        );
        assert_eq!(
            reduce_once(&p, f, &w(&[1, 0])).unwrap_err(),
            RewriteError::NoOccurrence
        );
    }

    #[test]
    fn normal_form_examples() {
        let rules = jacobson_rules();

        // babca + ba - bca -> 0
        let p = Polynomial::from_terms([
            (w(&[1, 0, 1, 2, 0]), big(1)),
            (w(&[1, 0]), big(1)),
            (w(&[1, 2, 0]), big(-1)),
        ]);
        let (nf, trace) = rules.normal_form(&p, ReductionMode::Full);
        assert!(nf.is_zero());
        assert_eq!(trace.len(), 1);

        // bcaba + ba - bca -> 0 using g
        let p = Polynomial::from_terms([
            (w(&[1, 2, 0, 1, 0]), big(1)),
            (w(&[1, 0]), big(1)),
            (w(&[1, 2, 0]), big(-1)),
        ]);
        let (nf, trace) = rules.normal_form(&p, ReductionMode::Full);
        assert!(nf.is_zero());
        assert_eq!(trace.len(), 1);
        assert_eq!(trace.steps[0].rule_index, 1);

        // babca - bca + 1 -> -ba + 1
        let p = Polynomial::from_terms([
            (w(&[1, 0, 1, 2, 0]), big(1)),
            (w(&[1, 2, 0]), big(-1)),
            (Word::empty(), big(1)),
        ]);
        let (nf, _) = rules.normal_form(&p, ReductionMode::Full);
        let expected =
            Polynomial::from_terms([(w(&[1, 0]), big(-1)), (Word::empty(), big(1))]);
        assert_eq!(nf, expected);

        // c is already irreducible
        let c = Polynomial::monomial(w(&[2]), 1);
        for mode in [ReductionMode::Head, ReductionMode::Full] {
            let (nf, trace) = rules.normal_form(&c, mode);
            assert_eq!(nf, c);
            assert!(trace.is_empty());
        }
    }

    #[test]
    fn head_mode_stops_at_irreducible_lead() {
        let rules = jacobson_rules();
        // ccc is irreducible and dominates abc, so head mode stops at once
        // while full mode still rewrites the tail.
        let p = Polynomial::from_terms([
            (w(&[2, 2, 2]), big(1)),
            (w(&[0, 1, 2]), big(1)),
        ]);
        let (head_nf, head_trace) = rules.normal_form(&p, ReductionMode::Head);
        assert_eq!(head_nf, p);
        assert!(head_trace.is_empty());

        let (full_nf, _) = rules.normal_form(&p, ReductionMode::Full);
        let expected = Polynomial::from_terms([
            (w(&[2, 2, 2]), big(1)),
            (w(&[2]), big(1)),
            (Word::empty(), big(-1)),
        ]);
        assert_eq!(full_nf, expected);
        assert!(rules.is_irreducible(&full_nf));
    }

    #[test]
    fn irreducible_word_examples() {
        let rules = jacobson_rules();
        assert!(rules.is_irreducible_word(&w(&[1, 0])));
        assert!(!rules.is_irreducible_word(&w(&[0, 1, 2])));
        assert!(rules.is_irreducible_word(&w(&[1, 2, 0])));
    }

    #[test]
    fn enumerate_irr_counts() {
        let rules = jacobson_rules();
        // Both leads have degree 3, so nothing of degree <= 2 is reducible.
        assert_eq!(rules.enumerate_irr(2).len(), 13);

        // Degree 3 excludes exactly the two leads; cross-check against a
        // brute-force subword scan over every degree-3 word.
        let irr3 = rules.enumerate_irr(3);
        assert_eq!(irr3.len(), 38);
        let mut brute = 0usize;
        for x in 0..3u32 {
            for y in 0..3u32 {
                for z in 0..3u32 {
                    if rules.is_irreducible_word(&w(&[x, y, z])) {
                        brute += 1;
                    }
                }
            }
        }
        assert_eq!(brute + 13, 38);
        assert!(!irr3.contains(&w(&[0, 1, 2])));
        assert!(!irr3.contains(&w(&[2, 0, 1])));

        // Empty rule set: everything is irreducible, sorted descending.
        let free = RuleSet::new(
            Alphabet::new(["a", "b", "c"]).unwrap(),
            MonomialOrder::deglex_default(3),
            Vec::new(),
        )
        .unwrap();
        assert_eq!(
            free.enumerate_irr(1),
            vec![w(&[2]), w(&[1]), w(&[0]), Word::empty()]
        );
    }

    #[test]
    fn ruleset_validation() {
        let alphabet = Alphabet::new(["a", "b", "c"]).unwrap();
        let order = MonomialOrder::deglex_default(3);

        let two_a = Polynomial::monomial(w(&[0]), 2);
        assert!(matches!(
            RuleSet::new(alphabet.clone(), order.clone(), vec![two_a]),
            Err(RewriteError::NonMonicRule { index: 0, .. })
        ));

        let constant = Polynomial::constant(1);
        assert!(matches!(
            RuleSet::new(alphabet.clone(), order.clone(), vec![constant]),
            Err(RewriteError::ConstantRule { index: 0 })
        ));

        assert!(matches!(
            RuleSet::new(alphabet.clone(), order.clone(), vec![Polynomial::zero()]),
            Err(RewriteError::ZeroRule { index: 0 })
        ));

        assert!(matches!(
            RuleSet::new(alphabet.clone(), order.clone(), vec![f_poly(), f_poly()]),
            Err(RewriteError::DuplicateRule {
                first: 0,
                second: 1
            })
        ));

        let foreign = Polynomial::monomial(w(&[5]), 1);
        assert!(matches!(
            RuleSet::new(alphabet.clone(), order.clone(), vec![foreign]),
            Err(RewriteError::ForeignGenerator { index: 0, id: 5 })
        ));

        let order2 = MonomialOrder::deglex_default(2);
        assert!(matches!(
            RuleSet::new(alphabet, order2, Vec::new()),
            Err(RewriteError::OrderMismatch { .. })
        ));
    }

    #[test]
    fn trace_replays_and_expands() {
        let rules = jacobson_rules();
        let p = Polynomial::from_terms([
            (w(&[1, 0, 1, 2, 0]), big(2)),
            (w(&[2, 0, 1, 2]), big(-3)),
            (w(&[1, 2, 0]), big(1)),
            (Word::empty(), big(4)),
        ]);
        let (nf, trace) = rules.normal_form(&p, ReductionMode::Full);
        assert!(rules.is_irreducible(&nf));
        trace.verify(&rules).unwrap();
        assert_eq!(trace.replay(&rules).unwrap(), nf);
        // input - output is the explicit combination of framed rules
        assert_eq!(&trace.input - &trace.output, trace.combination(&rules));
    }

    #[test]
    fn replay_rejects_tampered_traces() {
        let rules = jacobson_rules();
        let p = f_poly();
        let (_, mut trace) = rules.normal_form(&p, ReductionMode::Full);
        assert_eq!(trace.len(), 1);
        trace.steps[0].coefficient = big(7);
        assert!(matches!(
            trace.verify(&rules),
            Err(RewriteError::ReplayMismatch { step: 0, .. })
        ));
    }

    #[test]
    fn leading_word_never_increases() {
        let rules = jacobson_rules();
        let ord = rules.order();
        let p = Polynomial::from_terms([
            (w(&[0, 1, 2, 0, 1]), big(1)),
            (w(&[2, 0, 1]), big(5)),
            (w(&[1]), big(-2)),
        ]);
        let (nf, _) = rules.normal_form(&p, ReductionMode::Full);
        let (_, before) = p.leading_term(ord).unwrap();
        if let Some((_, after)) = nf.leading_term(ord) {
            assert_ne!(ord.compare(after, before), std::cmp::Ordering::Greater);
        }
    }

    #[test]
    fn foreign_letters_surface_via_order() {
        let ord = MonomialOrder::deglex_default(2);
        assert_eq!(
            ord.try_compare(&w(&[0]), &w(&[3])),
            Err(FreeAlgError::UnknownGenerator {
                id: 3,
                alphabet_size: 2
            })
        );
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
            prop::collection::vec(0..3u32, 0..=max_len).prop_map(Word::from_letters)
        }

        fn arb_poly() -> impl Strategy<Value = Polynomial> {
            prop::collection::vec((arb_word(5), -5i64..=5), 0..6).prop_map(|terms| {
                Polynomial::from_terms(
                    terms
                        .into_iter()
                        .map(|(word, c)| (word, Coefficient::from(c))),
                )
            })
        }

        /// Random monic rule sets: pick term lists, make the largest word
        /// the lead with coefficient one.
        fn arb_rules() -> impl Strategy<Value = RuleSet> {
            let rule = prop::collection::vec((arb_word(4), -3i64..=3), 1..4);
            prop::collection::vec(rule, 0..4).prop_map(|raw| {
                let alphabet = Alphabet::new(["a", "b", "c"]).unwrap();
                let order = MonomialOrder::deglex_default(3);
                let mut polys: Vec<Polynomial> = Vec::new();
                for terms in raw {
                    let p = Polynomial::from_terms(
                        terms
                            .into_iter()
                            .map(|(word, c)| (word, Coefficient::from(c))),
                    );
                    let Some((lc, lead)) = p.leading_term(&order) else {
                        continue;
                    };
                    if lead.is_empty() {
                        continue;
                    }
                    // force leading coefficient one
                    let lead = lead.clone();
                    let adjust = Coefficient::from(1) - lc;
                    let monic = &p + &Polynomial::monomial(lead, adjust);
                    if !polys.contains(&monic) {
                        polys.push(monic);
                    }
                }
                RuleSet::new(alphabet, order, polys).unwrap()
            })
        }

        proptest! {
            // Termination is implicit: a diverging chain would hang the
            // test. Soundness and irreducibility are asserted explicitly.
            #[test]
            fn reduction_terminates_soundly(p in arb_poly(), rules in arb_rules()) {
                let (nf, trace) = rules.normal_form(&p, ReductionMode::Full);
                prop_assert!(rules.is_irreducible(&nf));
                prop_assert!(trace.verify(&rules).is_ok());
                prop_assert_eq!(&trace.input - &trace.output, trace.combination(&rules));

                let ord = rules.order();
                if let (Some((_, before)), Some((_, after))) =
                    (p.leading_term(ord), nf.leading_term(ord))
                {
                    prop_assert_ne!(
                        ord.compare(after, before),
                        std::cmp::Ordering::Greater
                    );
                }
            }

            #[test]
            fn head_mode_leaves_irreducible_lead(p in arb_poly(), rules in arb_rules()) {
                let (nf, trace) = rules.normal_form(&p, ReductionMode::Head);
                prop_assert!(trace.verify(&rules).is_ok());
                if let Some((_, lead)) = nf.leading_term(rules.order()) {
                    prop_assert!(rules.is_irreducible_word(lead));
                }
            }

            // Multiplicativity of the order, exercised through random words.
            #[test]
            fn order_is_multiplicative(
                u in arb_word(4),
                v in arb_word(4),
                l in arb_word(3),
                r in arb_word(3),
            ) {
                let ord = MonomialOrder::deglex_default(3);
                let cmp = ord.compare(&u, &v);
                let framed_u = Word::concat_all([&l, &u, &r]);
                let framed_v = Word::concat_all([&l, &v, &r]);
                prop_assert_eq!(ord.compare(&framed_u, &framed_v), cmp);
            }

            // Ring axioms and leading-term multiplicativity over ℤ.
            #[test]
            fn ring_axioms_hold(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
                prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
                prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
                prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
                prop_assert_eq!(&(&q + &r) * &p, &(&q * &p) + &(&r * &p));
                let one = Polynomial::one();
                prop_assert_eq!(&p * &one, p.clone());
                prop_assert_eq!(&one * &p, p.clone());
                // Canonical-form closure: no stored zero coefficients.
                for result in [&p + &q, &p - &q, &p * &q] {
                    prop_assert!(result.terms().all(|(_, c)| !num_traits::Zero::is_zero(c)));
                }
            }

            #[test]
            fn leading_term_of_product_multiplies(p in arb_poly(), q in arb_poly()) {
                let ord = MonomialOrder::deglex_default(3);
                if let (Some((pc, pw)), Some((qc, qw))) =
                    (p.leading_term(&ord), q.leading_term(&ord))
                {
                    let prod = &p * &q;
                    let (lc, lw) = prod.leading_term(&ord).unwrap();
                    prop_assert_eq!(lc.clone(), pc * qc);
                    prop_assert_eq!(lw.clone(), pw.concat(qw));
                }
            }
        }
    }
}
