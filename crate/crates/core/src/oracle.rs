//! Brute-force certification: bounded search for factorizations into two
//! non-constant polynomials, exhaustive validation of the criterion over
//! finite semirings, and a hunt for cases where subtractivity matters.
//!
//! The search never consults the criterion. Coefficients are chosen index
//! by index (`b_k`, then `c_k`) and the product coefficient `a_k`, which
//! depends only on indices `<= k`, is compared with `f` before going deeper.
//!
//! Completeness of the coefficient range, per carrier:
//!
//! * finite tables: every element is a candidate;
//! * `nat`: every product `b_i·c_j` is a summand of `a_{i+j}`, and some
//!   `c_j >= 1`, so every `b_i` is at most the largest coefficient of `f`
//!   (symmetrically for `c`);
//! * `tropical-min`: `b_r + c_s = a_n`, and a non-leading coefficient
//!   above every finite coefficient of `f` never attains a minimum, so it
//!   behaves exactly like `inf`; candidates are `0..=max` and `inf`;
//! * `gcd-nat`: extreme coefficients divide `a_n` or `a_0`, so candidates
//!   are 0 and the divisors of the product of the nonzero coefficients.
//!   Middle coefficients are unconstrained, so only `(1, 1)` splits are
//!   complete.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::eisenstein::{check_eisenstein, proof_trace, TraceOutcome, TraceReport, Verdict};
use crate::error::{Error, Result};
use crate::finite::{enumerate_semirings, tuples, EnumerationBudget};
use crate::ideal::{ideal_closure, Ideal};
use crate::natural;
use crate::poly::Polynomial;
use crate::semiring::{CarrierKind, Check, Element, ExtNat, Semiring};

/// Largest explicit candidate range materialized for `nat` and
/// `tropical-min`; beyond it the search is reported incomplete.
const MAX_CANDIDATES: u64 = 1_000_000;

const MAX_VERIFY_ORDER: usize = 4;
const MAX_VERIFY_DEGREE: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Extra total degree explored on carriers with zero divisors.
    pub window: usize,
    /// Caps candidate coefficients on the infinite carriers.
    pub coeff_bound: Option<u64>,
    /// Maximum number of coefficient assignments tried.
    pub node_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            window: 2,
            coeff_bound: None,
            node_budget: 20_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoefficientBound {
    AllElements(usize),
    AtMost(BigUint),
    AtMostOrInfinity(BigUint),
    Divisors { candidates: usize, capped: bool },
}

impl fmt::Display for CoefficientBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientBound::AllElements(n) => write!(f, "all {n} elements"),
            CoefficientBound::AtMost(m) => write!(f, "coefficients <= {m}"),
            CoefficientBound::AtMostOrInfinity(m) => write!(f, "coefficients <= {m} or inf"),
            CoefficientBound::Divisors { candidates, capped } => write!(
                f,
                "0 and {candidates} divisors of the coefficient product{}",
                if *capped { " (capped)" } else { "" }
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorizationOutcome {
    Found {
        g: Polynomial,
        h: Polynomial,
    },
    NoneWithinBounds {
        complete: bool,
        degree_pairs: Vec<(usize, usize)>,
        coefficient_bound: CoefficientBound,
        budget_exhausted: bool,
    },
}

impl FactorizationOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, FactorizationOutcome::Found { .. })
    }

    pub fn is_complete_none(&self) -> bool {
        matches!(self, FactorizationOutcome::NoneWithinBounds { complete: true, .. })
    }
}

/// Searches for `f = g·h` with `g`, `h` non-constant.
pub fn search_factorizations(
    f: &Polynomial,
    window: usize,
    coeff_bound: Option<u64>,
) -> Result<FactorizationOutcome> {
    search_factorizations_with(
        f,
        &SearchConfig {
            window,
            coeff_bound,
            ..SearchConfig::default()
        },
    )
}

pub fn search_factorizations_with(f: &Polynomial, config: &SearchConfig) -> Result<FactorizationOutcome> {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::DegreeTooSmall),
    };
    let s = f.semiring().clone();
    let entire = s.flags().is_entire;
    let degree_pairs: Vec<(usize, usize)> = if entire {
        (1..n).map(|r| (r, n - r)).collect()
    } else {
        (n.max(2)..=n + config.window)
            .flat_map(|t| (1..t).map(move |r| (r, t - r)))
            .collect()
    };
    let (candidates, coefficient_bound, mut complete) = candidates_for(f, config.coeff_bound);
    if s.kind() == CarrierKind::GcdNaturals && degree_pairs.iter().any(|&p| p != (1, 1)) {
        complete = false;
    }

    let mut search = Search {
        s: &s,
        target: f.coefficients(),
        candidates: &candidates,
        b: Vec::new(),
        c: Vec::new(),
        r: 0,
        deg_c: 0,
        nodes: 0,
        budget: config.node_budget,
        exhausted: false,
    };
    for &(r, deg_c) in &degree_pairs {
        search.r = r;
        search.deg_c = deg_c;
        search.b = vec![s.zero(); r + 1];
        search.c = vec![s.zero(); deg_c + 1];
        if search.step(0) {
            let g = Polynomial::new(s.clone(), search.b.clone())?;
            let h = Polynomial::new(s.clone(), search.c.clone())?;
            debug_assert_eq!(g.mul(&h)?, *f);
            return Ok(FactorizationOutcome::Found { g, h });
        }
        if search.exhausted {
            break;
        }
    }
    Ok(FactorizationOutcome::NoneWithinBounds {
        complete: complete && !search.exhausted,
        degree_pairs,
        coefficient_bound,
        budget_exhausted: search.exhausted,
    })
}

fn candidates_for(f: &Polynomial, cap: Option<u64>) -> (Vec<Element>, CoefficientBound, bool) {
    let s = f.semiring();
    match s.kind() {
        CarrierKind::FiniteTable | CarrierKind::Booleans => {
            let elems = s.elements().expect("finite");
            let n = elems.len();
            (elems, CoefficientBound::AllElements(n), true)
        }
        CarrierKind::Naturals => {
            let max = f
                .coefficients()
                .iter()
                .filter_map(|c| match c {
                    Element::Nat(v) => Some(v.clone()),
                    _ => None,
                })
                .max()
                .unwrap_or_default();
            let (limit, complete) = bounded_range(&max, cap);
            let cands = (0..=limit).map(Element::nat).collect();
            (cands, CoefficientBound::AtMost(BigUint::from(limit)), complete)
        }
        CarrierKind::TropicalMin => {
            let max = f
                .coefficients()
                .iter()
                .filter_map(|c| match c {
                    Element::Ext(ExtNat::Fin(v)) => Some(v.clone()),
                    _ => None,
                })
                .max()
                .unwrap_or_default();
            let (limit, complete) = bounded_range(&max, cap);
            let cands = (0..=limit)
                .map(Element::ext)
                .chain(std::iter::once(Element::inf()))
                .collect();
            (cands, CoefficientBound::AtMostOrInfinity(BigUint::from(limit)), complete)
        }
        CarrierKind::GcdNaturals => {
            let product = f
                .coefficients()
                .iter()
                .filter_map(|c| match c {
                    Element::Nat(v) if !v.is_zero() => Some(v.clone()),
                    _ => None,
                })
                .fold(BigUint::one(), |acc, v| acc * v);
            let divisors = natural::divisors(&product);
            let total = divisors.len();
            let kept: Vec<BigUint> = match cap {
                Some(c) => divisors.into_iter().filter(|d| *d <= BigUint::from(c)).collect(),
                None => divisors,
            };
            let capped = kept.len() < total;
            let count = kept.len();
            let cands = std::iter::once(Element::nat(0u32))
                .chain(kept.into_iter().map(Element::Nat))
                .collect();
            (
                cands,
                CoefficientBound::Divisors {
                    candidates: count,
                    capped,
                },
                !capped,
            )
        }
    }
}

/// Candidate limit `min(max, cap, MAX_CANDIDATES)` and whether it still
/// covers `max`.
fn bounded_range(max: &BigUint, cap: Option<u64>) -> (u64, bool) {
    let max_small = max.to_u64().filter(|&m| m <= MAX_CANDIDATES);
    match (max_small, cap) {
        (Some(m), None) => (m, true),
        (Some(m), Some(c)) => (c.min(MAX_CANDIDATES), c >= m),
        (None, c) => (c.unwrap_or(MAX_CANDIDATES).min(MAX_CANDIDATES), false),
    }
}

struct Search<'a> {
    s: &'a Semiring,
    target: &'a [Element],
    candidates: &'a [Element],
    b: Vec<Element>,
    c: Vec<Element>,
    r: usize,
    deg_c: usize,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl Search<'_> {
    fn target(&self, k: usize) -> Element {
        self.target.get(k).cloned().unwrap_or_else(|| self.s.zero())
    }

    fn product_coeff(&self, k: usize) -> Element {
        let lo = k.saturating_sub(self.deg_c);
        let hi = k.min(self.r);
        (lo..=hi).fold(self.s.zero(), |acc, i| {
            self.s.add(&acc, &self.s.mul(&self.b[i], &self.c[k - i]))
        })
    }

    fn tick(&mut self) -> bool {
        if self.nodes >= self.budget {
            self.exhausted = true;
            return false;
        }
        self.nodes += 1;
        true
    }

    /// Assigns `b_k` and `c_k`; true once a full factorization is found.
    fn step(&mut self, k: usize) -> bool {
        let top = self.r.max(self.deg_c);
        if k > top {
            return (top + 1..=self.r + self.deg_c).all(|j| self.product_coeff(j) == self.target(j));
        }
        let b_choices = self.choices(k, self.r);
        let c_choices = self.choices(k, self.deg_c);
        for bi in &b_choices {
            if let Some(v) = bi {
                self.b[k] = v.clone();
            }
            for ci in &c_choices {
                if !self.tick() {
                    return false;
                }
                if let Some(v) = ci {
                    self.c[k] = v.clone();
                }
                if self.product_coeff(k) == self.target(k) && self.step(k + 1) {
                    return true;
                }
                if self.exhausted {
                    return false;
                }
            }
        }
        false
    }

    /// Candidates for coefficient `k` of a factor of degree `deg`; `None`
    /// when `k` is past the degree.
    fn choices(&self, k: usize, deg: usize) -> Vec<Option<Element>> {
        if k > deg {
            return vec![None];
        }
        self.candidates
            .iter()
            .filter(|v| k < deg || !self.s.is_zero(v))
            .map(|v| Some(v.clone()))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub f: Polynomial,
    pub ideal: Ideal,
    pub g: Polynomial,
    pub h: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremStats {
    pub semiring: String,
    pub ideals_found: usize,
    pub subtractive_primes: Vec<Ideal>,
    pub polynomials_scanned: usize,
    pub criterion_applicable: usize,
    pub violations: usize,
    pub violation_witnesses: Vec<Violation>,
    /// Satisfied cases whose search ran out of budget.
    pub incomplete_searches: usize,
}

/// Every polynomial over `semiring` with degree in `1..=max_degree`, in
/// order of degree and then lexicographic low-first coefficients.
pub fn all_polynomials(semiring: &Arc<Semiring>, max_degree: usize) -> Result<Vec<Polynomial>> {
    let t = semiring
        .table()
        .ok_or_else(|| Error::NotFinite(semiring.name().to_string()))?;
    let n = t.order();
    let mut out = Vec::new();
    for d in 1..=max_degree {
        for coeffs in tuples(n, d + 1) {
            if coeffs[d] == t.zero_index() {
                continue;
            }
            let elems = coeffs.into_iter().map(Element::Index).collect();
            out.push(Polynomial::new(semiring.clone(), elems)?);
        }
    }
    Ok(out)
}

/// Checks the criterion against exhaustive factorization search for every
/// subtractive prime ideal and every polynomial up to `max_degree`.
pub fn verify_theorem(semiring: &Arc<Semiring>, max_degree: usize, window: usize) -> Result<TheoremStats> {
    let t = semiring
        .table()
        .ok_or_else(|| Error::NotFinite(semiring.name().to_string()))?;
    if t.order() > MAX_VERIFY_ORDER {
        return Err(Error::OrderTooLarge {
            order: t.order(),
            max: MAX_VERIFY_ORDER,
        });
    }
    if max_degree > MAX_VERIFY_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: max_degree,
            max: MAX_VERIFY_DEGREE,
        });
    }
    let ideals: Vec<Ideal> = t
        .ideals_unchecked()
        .into_iter()
        .map(|members| {
            let gens: Vec<Element> = members.into_iter().map(Element::Index).collect();
            ideal_closure(semiring, &gens)
        })
        .collect::<Result<_>>()?;
    let mut subtractive_primes = Vec::new();
    for ideal in &ideals {
        if ideal.predicates(0)?.is_subtractive_prime() {
            subtractive_primes.push(ideal.clone());
        }
    }
    let polys = all_polynomials(semiring, max_degree)?;
    let config = SearchConfig {
        window,
        ..SearchConfig::default()
    };

    let mut stats = TheoremStats {
        semiring: semiring.name().to_string(),
        ideals_found: ideals.len(),
        subtractive_primes: subtractive_primes.clone(),
        polynomials_scanned: polys.len(),
        criterion_applicable: 0,
        violations: 0,
        violation_witnesses: Vec::new(),
        incomplete_searches: 0,
    };
    for ideal in &subtractive_primes {
        let outcomes: Vec<Option<FactorizationOutcome>> = polys
            .par_iter()
            .map(|f| -> Result<Option<FactorizationOutcome>> {
                let report = check_eisenstein(f, ideal, 0)?;
                if report.verdict != Verdict::Satisfied {
                    return Ok(None);
                }
                search_factorizations_with(f, &config).map(Some)
            })
            .collect::<Result<_>>()?;
        for (f, outcome) in polys.iter().zip(outcomes) {
            let Some(outcome) = outcome else { continue };
            stats.criterion_applicable += 1;
            match outcome {
                FactorizationOutcome::Found { g, h } => {
                    stats.violations += 1;
                    stats.violation_witnesses.push(Violation {
                        f: f.clone(),
                        ideal: ideal.clone(),
                        g,
                        h,
                    });
                }
                FactorizationOutcome::NoneWithinBounds { complete: false, .. } => {
                    stats.incomplete_searches += 1;
                }
                FactorizationOutcome::NoneWithinBounds { .. } => {}
            }
        }
    }
    Ok(stats)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Finding {
    /// A proper prime ideal that is not subtractive.
    NonSubtractivePrime {
        semiring: Arc<Semiring>,
        ideal: Ideal,
        witness: (Element, Element),
    },
    /// A product whose coefficient `a_m` lands in the ideal even though the
    /// term `b_0·c_m` does not. Only the first in enumeration order is kept.
    NearMiss {
        semiring: Arc<Semiring>,
        trace: TraceReport,
        occurrences: usize,
    },
    /// `f` meets all three conditions for a non-subtractive prime and still
    /// factors.
    Counterexample {
        semiring: Arc<Semiring>,
        ideal: Ideal,
        f: Polynomial,
        g: Polynomial,
        h: Polynomial,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HuntReport {
    pub findings: Vec<Finding>,
    pub semirings_examined: usize,
    /// True when the budget stopped the hunt early.
    pub partial: bool,
}

/// Looks, over every semiring of order `2..=max_order`, for evidence that
/// subtractivity cannot be dropped from the criterion's hypotheses.
///
/// The budget counts semirings, candidate polynomials and traces.
pub fn hunt_subtractivity(
    max_order: usize,
    max_degree: usize,
    budget: EnumerationBudget,
) -> Result<HuntReport> {
    if max_order < 2 {
        return Err(Error::OrderTooSmall { order: max_order, min: 2 });
    }
    if max_order > MAX_VERIFY_ORDER {
        return Err(Error::OrderTooLarge {
            order: max_order,
            max: MAX_VERIFY_ORDER,
        });
    }
    if max_degree > MAX_VERIFY_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: max_degree,
            max: MAX_VERIFY_DEGREE,
        });
    }
    let mut report = HuntReport {
        findings: Vec::new(),
        semirings_examined: 0,
        partial: false,
    };
    let mut remaining = budget.nodes;
    let mut spend = |report: &mut HuntReport| {
        if remaining == 0 {
            report.partial = true;
            false
        } else {
            remaining -= 1;
            true
        }
    };

    for order in 2..=max_order {
        let catalog = enumerate_semirings(order, EnumerationBudget::default())?;
        report.partial |= !catalog.complete;
        for (k, table) in catalog.semirings.into_iter().enumerate() {
            if !spend(&mut report) {
                return Ok(report);
            }
            report.semirings_examined += 1;
            let semiring = Arc::new(Semiring::finite(format!("order{order}-{k}"), table)?);
            let t = semiring.table().expect("finite");
            for members in t.ideals_unchecked() {
                let gens: Vec<Element> = members.into_iter().map(Element::Index).collect();
                let ideal = ideal_closure(&semiring, &gens)?;
                let preds = ideal.predicates(0)?;
                let witness = match (&preds.prime, &preds.subtractive) {
                    (Check::Holds, Check::Fails(w)) if preds.proper => w.clone(),
                    _ => continue,
                };
                report.findings.push(Finding::NonSubtractivePrime {
                    semiring: semiring.clone(),
                    ideal: ideal.clone(),
                    witness,
                });
                if !hunt_counterexamples(&semiring, &ideal, max_degree, &mut report, &mut spend)? {
                    return Ok(report);
                }
                if !hunt_near_misses(&semiring, &ideal, max_degree, &mut report, &mut spend)? {
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

fn hunt_counterexamples(
    semiring: &Arc<Semiring>,
    ideal: &Ideal,
    max_degree: usize,
    report: &mut HuntReport,
    spend: &mut impl FnMut(&mut HuntReport) -> bool,
) -> Result<bool> {
    let square = ideal.square()?;
    for f in all_polynomials(semiring, max_degree)? {
        if !spend(report) {
            return Ok(false);
        }
        let n = f.degree().expect("non-constant");
        let coeffs = f.coefficients();
        let conditions = !ideal.contains_unchecked(&coeffs[n])
            && coeffs[..n].iter().all(|a| ideal.contains_unchecked(a))
            && !square.contains_unchecked(&coeffs[0]);
        if !conditions {
            continue;
        }
        if let FactorizationOutcome::Found { g, h } = search_factorizations(&f, 2, None)? {
            report.findings.push(Finding::Counterexample {
                semiring: semiring.clone(),
                ideal: ideal.clone(),
                f,
                g,
                h,
            });
        }
    }
    Ok(true)
}

fn hunt_near_misses(
    semiring: &Arc<Semiring>,
    ideal: &Ideal,
    max_degree: usize,
    report: &mut HuntReport,
    spend: &mut impl FnMut(&mut HuntReport) -> bool,
) -> Result<bool> {
    let polys = all_polynomials(semiring, max_degree.saturating_sub(1))?;
    let mut first: Option<TraceReport> = None;
    let mut occurrences = 0;
    let mut finished = true;
    'outer: for g in polys.iter().filter(|g| !ideal.contains_unchecked(&g.coeff(0))) {
        for h in &polys {
            if g.degree().unwrap_or(0) + h.degree().unwrap_or(0) > max_degree {
                continue;
            }
            if h.coefficients().iter().all(|c| ideal.contains_unchecked(c)) {
                continue;
            }
            if !spend(report) {
                finished = false;
                break 'outer;
            }
            if let TraceOutcome::Trace(trace) = proof_trace(g, h, ideal)? {
                if trace.a_m_in_ideal {
                    occurrences += 1;
                    first.get_or_insert(trace);
                }
            }
        }
    }
    if let Some(trace) = first {
        report.findings.push(Finding::NearMiss {
            semiring: semiring.clone(),
            trace,
            occurrences,
        });
    }
    Ok(finished)
}
