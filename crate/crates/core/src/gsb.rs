//! Compositions (critical pairs), Gröbner-Shirshov basis verification,
//! bounded completion over ℤ, and ideal membership.
//!
//! Two monic rules `f`, `g` compose wherever their leading words collide:
//! an *intersection* composition `f·b - a·g` at an ambiguity `w = f̅·b = a·g̅`
//! whose overlap is proper on both sides, or an *inclusion* composition
//! `f - a·g·b` at `w = f̅ = a·g̅·b`. A rule set is a Gröbner-Shirshov basis
//! when every composition reduces to zero; on such a basis a polynomial lies
//! in the generated ideal exactly when head reduction takes it to zero.
//!
//! Completion repeatedly adds reduced nonzero composition residuals as new
//! rules. Over ℤ a residual can be a nonzero constant or have leading
//! coefficient outside ±1; both are surfaced as explicit outcomes instead of
//! dividing, since division would change the ideal.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::freealg::{Alphabet, Coefficient, MonomialOrder, Polynomial, Word};
use crate::rewrite::{ReductionMode, ReductionTrace, RuleSet};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GsbError {
    #[error("not a Gröbner-Shirshov basis: the composition of rules {rule_left} and {rule_right} at ambiguity {ambiguity:?} leaves the nonzero residual {residual:?}")]
    NotAGsb {
        rule_left: usize,
        rule_right: usize,
        ambiguity: Word,
        residual: Polynomial,
    },
}

/// How two leading words collide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompositionKind {
    /// A proper suffix of the left lead equals a proper prefix of the right
    /// lead: `w = f̅·b = a·g̅` with `|w| < |f̅| + |g̅|`.
    Intersection,
    /// The right lead occurs inside the left lead: `f̅ = a·g̅·b` with distinct
    /// rules.
    Inclusion,
}

/// A composition of two rules at an ambiguity word.
///
/// For an intersection the polynomial is `f·b - a·g`; for an inclusion it is
/// `f - a·g·b`. When nonzero, its leading word is strictly smaller than the
/// ambiguity word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition {
    pub kind: CompositionKind,
    pub ambiguity: Word,
    pub rule_left: usize,
    pub rule_right: usize,
    /// Offset of the right rule's leading word inside the ambiguity word.
    pub offset: usize,
    pub poly: Polynomial,
}

/// One checked composition: the composition itself, its full normal form
/// modulo the rule set, and the reduction trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GsbEntry {
    pub composition: Composition,
    pub residual: Polynomial,
    pub trace: ReductionTrace,
}

/// Result of [`check_gsb`]: `is_gsb` holds exactly when every residual is
/// zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GsbReport {
    pub is_gsb: bool,
    pub entries: Vec<GsbEntry>,
}

/// All compositions of the rule set, including self-overlaps of a rule with
/// itself but excluding the trivial full overlap `w = f̅ = g̅` of a rule with
/// itself. Deterministic order: ambiguity word descending, then rule
/// indices, then offset.
pub fn find_compositions(rules: &RuleSet) -> Vec<Composition> {
    let order = rules.order();
    let mut out = Vec::new();
    for (i, ri) in rules.rules().iter().enumerate() {
        for (j, rj) in rules.rules().iter().enumerate() {
            let li = ri.lead().letters();
            let lj = rj.lead().letters();

            // Intersections: proper overlap on both sides, so the overlap
            // length stays below both lead lengths.
            for o in 1..li.len().min(lj.len()) {
                if li[li.len() - o..] == lj[..o] {
                    let mut letters = li.to_vec();
                    letters.extend_from_slice(&lj[o..]);
                    let ambiguity = Word::from_letters(letters);
                    let a = ri.lead().subword(0, li.len() - o);
                    let b = rj.lead().subword(o, lj.len());
                    let poly = &ri.poly().in_context(&Word::empty(), &b)
                        - &rj.poly().in_context(&a, &Word::empty());
                    out.push(Composition {
                        kind: CompositionKind::Intersection,
                        ambiguity,
                        rule_left: i,
                        rule_right: j,
                        offset: li.len() - o,
                        poly,
                    });
                }
            }

            // Inclusions: g̅ occurs inside f̅. For i = j the only occurrence
            // is the trivial full overlap, which is excluded.
            if i != j && lj.len() <= li.len() {
                for pos in ri.lead().factor_positions(rj.lead()) {
                    let a = ri.lead().subword(0, pos);
                    let b = ri.lead().subword(pos + lj.len(), li.len());
                    let poly = ri.poly() - &rj.poly().in_context(&a, &b);
                    out.push(Composition {
                        kind: CompositionKind::Inclusion,
                        ambiguity: ri.lead().clone(),
                        rule_left: i,
                        rule_right: j,
                        offset: pos,
                        poly,
                    });
                }
            }
        }
    }
    out.sort_by(|x, y| {
        order
            .compare(&y.ambiguity, &x.ambiguity)
            .then(x.rule_left.cmp(&y.rule_left))
            .then(x.rule_right.cmp(&y.rule_right))
            .then(x.offset.cmp(&y.offset))
    });
    out
}

/// Reduces every composition to full normal form modulo the rules.
pub fn check_gsb(rules: &RuleSet) -> GsbReport {
    let entries: Vec<GsbEntry> = find_compositions(rules)
        .into_iter()
        .map(|composition| {
            let (residual, trace) = rules.normal_form(&composition.poly, ReductionMode::Full);
            GsbEntry {
                composition,
                residual,
                trace,
            }
        })
        .collect();
    let is_gsb = entries.iter().all(|e| e.residual.is_zero());
    GsbReport { is_gsb, entries }
}

fn ensure_gsb(rules: &RuleSet) -> Result<(), GsbError> {
    let report = check_gsb(rules);
    match report.entries.into_iter().find(|e| !e.residual.is_zero()) {
        None => Ok(()),
        Some(entry) => Err(GsbError::NotAGsb {
            rule_left: entry.composition.rule_left,
            rule_right: entry.composition.rule_right,
            ambiguity: entry.composition.ambiguity,
            residual: entry.residual,
        }),
    }
}

/// A rule set confirmed to be a Gröbner-Shirshov basis, or the collapsed
/// state where the unit lies in the ideal and the presented algebra is the
/// zero ring.
#[derive(Debug, Clone, PartialEq)]
pub enum Gsb {
    Basis(RuleSet),
    TrivialRing,
}

impl Gsb {
    /// Verifies that `rules` is a Gröbner-Shirshov basis; the error names
    /// the failing composition.
    pub fn check(rules: RuleSet) -> Result<Self, GsbError> {
        ensure_gsb(&rules)?;
        Ok(Gsb::Basis(rules))
    }

    pub fn rules(&self) -> Option<&RuleSet> {
        match self {
            Gsb::Basis(rules) => Some(rules),
            Gsb::TrivialRing => None,
        }
    }
}

/// Decides whether `p` lies in the two-sided ideal generated by the rules.
///
/// Requires `rules` to be a Gröbner-Shirshov basis and verifies that first,
/// reporting the failing composition otherwise. The answer is `true` exactly
/// when head reduction takes `p` to zero; the returned trace is the
/// certificate (for a negative answer it ends at the irreducible-head
/// normal form).
pub fn membership(
    p: &Polynomial,
    rules: &RuleSet,
) -> Result<(bool, ReductionTrace), GsbError> {
    ensure_gsb(rules)?;
    let (nf, trace) = rules.normal_form(p, ReductionMode::Head);
    Ok((nf.is_zero(), trace))
}

// ---------------------------------------------------------------------------
// Completion
// ---------------------------------------------------------------------------

/// A formal ℤ-combination `Σ αᵢ · aᵢ · p_{kᵢ} · bᵢ` over an indexed base of
/// polynomials. Completion uses it to express every derived rule in terms of
/// the input rules, which makes provenance machine-checkable via
/// [`expand`](Self::expand).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Combination {
    terms: BTreeMap<(usize, Word, Word), Coefficient>,
}

impl Combination {
    pub fn zero() -> Self {
        Combination::default()
    }

    /// The combination `1 · ε · p_index · ε`.
    pub fn singleton(index: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((index, Word::empty(), Word::empty()), Coefficient::one());
        Combination { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Entries `((base index, left word, right word), coefficient)`.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, Word, Word), &Coefficient)> {
        self.terms.iter()
    }

    fn add_term(&mut self, key: (usize, Word, Word), c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    /// `self += k · left · other · right`.
    pub fn add_scaled_in_context(
        &mut self,
        other: &Combination,
        k: &Coefficient,
        left: &Word,
        right: &Word,
    ) {
        for ((index, l, r), c) in &other.terms {
            let key = (*index, left.concat(l), r.concat(right));
            self.add_term(key, k * c);
        }
    }

    /// `left · self · right`.
    pub fn in_context(&self, left: &Word, right: &Word) -> Combination {
        let mut out = Combination::zero();
        out.add_scaled_in_context(self, &Coefficient::one(), left, right);
        out
    }

    pub fn negated(&self) -> Combination {
        Combination {
            terms: self
                .terms
                .iter()
                .map(|(key, c)| (key.clone(), -c))
                .collect(),
        }
    }

    /// Evaluates the combination against the base polynomials.
    ///
    /// Panics if an entry references an index outside `base`.
    pub fn expand(&self, base: &[Polynomial]) -> Polynomial {
        let mut sum = Polynomial::zero();
        for ((index, left, right), c) in &self.terms {
            let p = base
                .get(*index)
                .expect("combination entry references a base polynomial");
            sum = &sum + &p.in_context(left, right).scaled(c);
        }
        sum
    }
}

/// Where a rule of a completed set came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleOrigin {
    /// Present in the input rule set (possibly rewritten by
    /// inter-reduction).
    Input { index: usize },
    /// Added as the reduced residual of a composition at this ambiguity
    /// word.
    Composition { ambiguity: Word },
}

/// Provenance of one rule: its origin and its expression as a combination of
/// the input rules. `combination.expand(input polynomials)` reproduces the
/// rule's polynomial exactly, witnessing that the rule lies in the input
/// ideal.
///
/// The stored trace (for composition-derived rules) is the reduction of the
/// composition polynomial to its residual. Its step indices refer to the
/// working rule set at the time of the reduction, so it is informational;
/// the combination is the machine-checkable witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleProvenance {
    pub origin: RuleOrigin,
    pub combination: Combination,
    pub trace: Option<ReductionTrace>,
}

/// Outcome of [`complete`].
#[derive(Debug, Clone, PartialEq)]
pub enum CompletionOutcome {
    /// The rule set is closed under compositions. If the input already was,
    /// it is returned unchanged; otherwise the completed rules are
    /// inter-reduced and sorted by leading word ascending.
    Completed(RuleSet),
    /// A residual was the constant ±1: the unit lies in the ideal, every
    /// polynomial is congruent to zero, and the presented algebra is the
    /// zero ring.
    TrivialRing,
    /// A residual was a nonzero constant `n` with `|n| ≥ 2` (reported as
    /// `|n|`). Over ℤ it can neither be discarded nor made monic.
    ConstantObstruction(Coefficient),
    /// A residual had leading coefficient outside ±1; dividing would change
    /// the ideal over ℤ, so completion stops and surfaces it.
    NonMonicObstruction(Polynomial),
    /// A nonzero residual arose at an ambiguity word beyond `max_degree`,
    /// or completion would have added more than `max_rules` new rules.
    /// Carries the rules accumulated so far.
    BudgetExhausted(RuleSet),
}

impl CompletionOutcome {
    /// The verified basis this outcome yields, if any.
    pub fn into_gsb(self) -> Option<Gsb> {
        match self {
            CompletionOutcome::Completed(rules) => Some(Gsb::Basis(rules)),
            CompletionOutcome::TrivialRing => Some(Gsb::TrivialRing),
            _ => None,
        }
    }
}

/// Outcome plus per-rule provenance.
///
/// For `Completed` and `BudgetExhausted` the provenance entries align with
/// the carried rule set; for the obstruction outcomes they describe the
/// working rules at the moment completion stopped.
#[derive(Debug, Clone, PartialEq)]
pub struct CompletionResult {
    pub outcome: CompletionOutcome,
    pub provenance: Vec<RuleProvenance>,
}

struct WorkingRule {
    poly: Polynomial,
    origin: RuleOrigin,
    combination: Combination,
    trace: Option<ReductionTrace>,
}

impl WorkingRule {
    fn provenance(&self) -> RuleProvenance {
        RuleProvenance {
            origin: self.origin.clone(),
            combination: self.combination.clone(),
            trace: self.trace.clone(),
        }
    }
}

enum Classified {
    Constant(Coefficient),
    Monic { poly: Polynomial, flipped: bool },
    NonMonic,
}

fn classify(residual: &Polynomial, order: &MonomialOrder) -> Classified {
    let (lc, lead) = residual
        .leading_term(order)
        .expect("residual is nonzero");
    if lead.is_empty() {
        // The leading word is the minimum, so the constant is the only term.
        Classified::Constant(lc.clone())
    } else if lc.is_one() {
        Classified::Monic {
            poly: residual.clone(),
            flipped: false,
        }
    } else if (-lc).is_one() {
        Classified::Monic {
            poly: -residual,
            flipped: true,
        }
    } else {
        Classified::NonMonic
    }
}

fn build_rules(alphabet: &Alphabet, order: &MonomialOrder, work: &[WorkingRule]) -> RuleSet {
    RuleSet::new(
        alphabet.clone(),
        order.clone(),
        work.iter().map(|w| w.poly.clone()).collect(),
    )
    .expect("completion maintains the rule-set invariants")
}

fn provenance_of(work: &[WorkingRule]) -> Vec<RuleProvenance> {
    work.iter().map(WorkingRule::provenance).collect()
}

/// The combination expressing a composition polynomial in terms of the
/// working rules' own combinations.
fn composition_combination(
    comp: &Composition,
    rules: &RuleSet,
    work: &[WorkingRule],
) -> Combination {
    let left_comb = &work[comp.rule_left].combination;
    let right_comb = &work[comp.rule_right].combination;
    let minus_one = -Coefficient::one();
    let mut comb;
    match comp.kind {
        CompositionKind::Intersection => {
            // f·b - a·g with a = w[..offset], b = w[|f̅|..]
            let left_lead_len = rules.rules()[comp.rule_left].lead().degree();
            let a = comp.ambiguity.subword(0, comp.offset);
            let b = comp
                .ambiguity
                .subword(left_lead_len, comp.ambiguity.degree());
            comb = left_comb.in_context(&Word::empty(), &b);
            comb.add_scaled_in_context(right_comb, &minus_one, &a, &Word::empty());
        }
        CompositionKind::Inclusion => {
            // f - a·g·b with a = w[..offset], b after the inner lead
            let right_lead_len = rules.rules()[comp.rule_right].lead().degree();
            let a = comp.ambiguity.subword(0, comp.offset);
            let b = comp
                .ambiguity
                .subword(comp.offset + right_lead_len, comp.ambiguity.degree());
            comb = left_comb.clone();
            comb.add_scaled_in_context(right_comb, &minus_one, &a, &b);
        }
    }
    comb
}

/// Inter-reduces the working set: every rule is replaced by its full normal
/// form modulo the others, rules reducing to zero are dropped, and the scan
/// repeats until stable. Returns an early outcome when a rewrite collapses
/// to a constant or loses monicity.
fn inter_reduce(
    alphabet: &Alphabet,
    order: &MonomialOrder,
    work: &mut Vec<WorkingRule>,
) -> Option<CompletionOutcome> {
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < work.len() {
            let mut polys = Vec::with_capacity(work.len() - 1);
            let mut map = Vec::with_capacity(work.len() - 1);
            for (j, wr) in work.iter().enumerate() {
                if j != i {
                    polys.push(wr.poly.clone());
                    map.push(j);
                }
            }
            let others = RuleSet::new(alphabet.clone(), order.clone(), polys)
                .expect("completion maintains the rule-set invariants");
            let (nf, trace) = others.normal_form(&work[i].poly, ReductionMode::Full);
            if nf == work[i].poly {
                i += 1;
                continue;
            }
            changed = true;
            let mut comb = work[i].combination.clone();
            for step in &trace.steps {
                let source = work[map[step.rule_index]].combination.clone();
                comb.add_scaled_in_context(
                    &source,
                    &-&step.coefficient,
                    &step.left_context,
                    &step.right_context,
                );
            }
            if nf.is_zero() {
                work.remove(i);
                continue;
            }
            match classify(&nf, order) {
                Classified::Constant(n) => {
                    return Some(if n.abs().is_one() {
                        CompletionOutcome::TrivialRing
                    } else {
                        CompletionOutcome::ConstantObstruction(n.abs())
                    });
                }
                Classified::Monic { poly, flipped } => {
                    work[i].poly = poly;
                    work[i].combination = if flipped { comb.negated() } else { comb };
                    i += 1;
                }
                Classified::NonMonic => {
                    return Some(CompletionOutcome::NonMonicObstruction(nf));
                }
            }
        }
        if !changed {
            return None;
        }
    }
}

/// Closes the rule set under compositions within explicit budgets.
///
/// Each round reduces every composition to full normal form, processing the
/// queue in ascending ambiguity order for reproducibility. A nonzero
/// residual is classified: a constant ±1 means the unit lies in the ideal
/// (`TrivialRing`); another nonzero constant `n` is reported as
/// `ConstantObstruction(|n|)`; a residual with leading coefficient ±1 is
/// sign-normalized, added as a rule, and the whole set is inter-reduced;
/// anything else is a `NonMonicObstruction`. Completion succeeds when every
/// composition reduces to zero.
///
/// `max_degree` bounds the ambiguity degree a new rule may be derived from
/// and `max_rules` bounds how many rules may be added; exceeding either
/// yields `BudgetExhausted`. A set whose compositions already all reduce to
/// zero is returned unchanged regardless of the budgets.
pub fn complete(input: &RuleSet, max_degree: usize, max_rules: usize) -> CompletionResult {
    let alphabet = input.alphabet().clone();
    let order = input.order().clone();
    let mut work: Vec<WorkingRule> = input
        .rules()
        .iter()
        .enumerate()
        .map(|(index, r)| WorkingRule {
            poly: r.poly().clone(),
            origin: RuleOrigin::Input { index },
            combination: Combination::singleton(index),
            trace: None,
        })
        .collect();
    let mut added = 0usize;
    let mut changed_anything = false;

    loop {
        let rules = build_rules(&alphabet, &order, &work);
        let mut comps = find_compositions(&rules);
        // Completion queue: ambiguity ascending.
        comps.sort_by(|x, y| {
            order
                .compare(&x.ambiguity, &y.ambiguity)
                .then(x.rule_left.cmp(&y.rule_left))
                .then(x.rule_right.cmp(&y.rule_right))
                .then(x.offset.cmp(&y.offset))
        });

        let mut acted = false;
        for comp in comps {
            let (residual, trace) = rules.normal_form(&comp.poly, ReductionMode::Full);
            if residual.is_zero() {
                continue;
            }
            match classify(&residual, &order) {
                Classified::Constant(n) => {
                    let outcome = if n.abs().is_one() {
                        CompletionOutcome::TrivialRing
                    } else {
                        CompletionOutcome::ConstantObstruction(n.abs())
                    };
                    return CompletionResult {
                        outcome,
                        provenance: provenance_of(&work),
                    };
                }
                Classified::NonMonic => {
                    return CompletionResult {
                        outcome: CompletionOutcome::NonMonicObstruction(residual),
                        provenance: provenance_of(&work),
                    };
                }
                Classified::Monic { poly, flipped } => {
                    if comp.ambiguity.degree() > max_degree || added >= max_rules {
                        return CompletionResult {
                            outcome: CompletionOutcome::BudgetExhausted(rules),
                            provenance: provenance_of(&work),
                        };
                    }
                    added += 1;
                    let mut comb = composition_combination(&comp, &rules, &work);
                    for step in &trace.steps {
                        let source = work[step.rule_index].combination.clone();
                        comb.add_scaled_in_context(
                            &source,
                            &-&step.coefficient,
                            &step.left_context,
                            &step.right_context,
                        );
                    }
                    if flipped {
                        comb = comb.negated();
                    }
                    work.push(WorkingRule {
                        poly,
                        origin: RuleOrigin::Composition {
                            ambiguity: comp.ambiguity.clone(),
                        },
                        combination: comb,
                        trace: Some(trace),
                    });
                    changed_anything = true;
                    if let Some(outcome) = inter_reduce(&alphabet, &order, &mut work) {
                        return CompletionResult {
                            outcome,
                            provenance: provenance_of(&work),
                        };
                    }
                    acted = true;
                    break;
                }
            }
        }

        if !acted {
            // Every composition reduces to zero.
            if !changed_anything {
                return CompletionResult {
                    outcome: CompletionOutcome::Completed(input.clone()),
                    provenance: provenance_of(&work),
                };
            }
            work.sort_by(|x, y| {
                let lx = x.poly.leading_term(&order).expect("rules are nonzero").1;
                let ly = y.poly.leading_term(&order).expect("rules are nonzero").1;
                order.compare(lx, ly)
            });
            let rules = build_rules(&alphabet, &order, &work);
            return CompletionResult {
                outcome: CompletionOutcome::Completed(rules),
                provenance: provenance_of(&work),
            };
        }
    }
}
