//! Eisenstein's criterion over a subtractive prime ideal of a semiring,
//! its prime-element form, and a trace of the contradiction argument.
//!
//! For `f = a_n x^n + ... + a_0` and an ideal `P` that is proper, prime and
//! subtractive, the conditions are
//!
//! 1. `a_n ∉ P`,
//! 2. `a_i ∈ P` for every `i < n`,
//! 3. `a_0 ∉ P²`,
//!
//! and together they rule out any factorization of `f` into two
//! non-constant polynomials.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::{principal_ideal, Ideal, IdealPredicateReport};
use crate::poly::{same_semiring, Polynomial};
use crate::semiring::{Check, Element, PrimeFailure, Semiring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HypothesisFailure {
    Improper,
    NotPrime(PrimeFailure),
    /// `a + b ∈ P`, `a ∈ P`, `b ∉ P`.
    NotSubtractive(Element, Element),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// `f` has no factorization into two non-constant polynomials.
    Satisfied,
    /// The first failing condition (1, 2 or 3) and the coefficient index
    /// and value that fail it. No claim about `f` is made.
    NotApplicable {
        condition: u8,
        index: usize,
        coefficient: Element,
    },
    HypothesisNotEstablished(HypothesisFailure),
}

/// How the hypotheses on the ideal were accepted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HypothesisRoute {
    /// Predicates computed for this specific ideal.
    IdealCertificate,
    /// Weak Gaussian factorial semidomain flags plus a prime generator.
    SemiringFlags,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EisensteinReport {
    pub verdict: Verdict,
    pub degree: usize,
    pub ideal: Ideal,
    pub square: Ideal,
    /// `a_n ∈ P`; condition 1 holds when false.
    pub leading_in_ideal: bool,
    /// `a_i ∈ P` for `i = 0..n`.
    pub lower_in_ideal: Vec<bool>,
    /// `a_0 ∈ P²`; condition 3 holds when false.
    pub constant_in_square: bool,
    pub hypotheses: IdealPredicateReport,
    pub route: HypothesisRoute,
}

impl EisensteinReport {
    pub fn condition_holds(&self, condition: u8) -> bool {
        match condition {
            1 => !self.leading_in_ideal,
            2 => self.lower_in_ideal.iter().all(|&b| b),
            3 => !self.constant_in_square,
            _ => panic!("conditions are numbered 1 to 3"),
        }
    }
}

/// Runs the criterion for `f` against `ideal`.
///
/// `hypothesis_bound` limits the pair scans used to certify the ideal on
/// infinite carriers; it is ignored for finite ones.
pub fn check_eisenstein(
    f: &Polynomial,
    ideal: &Ideal,
    hypothesis_bound: u64,
) -> Result<EisensteinReport> {
    if !same_semiring(f.semiring(), ideal.semiring()) {
        return Err(Error::SemiringMismatch(format!(
            "polynomial over `{}`, ideal over `{}`",
            f.semiring().name(),
            ideal.semiring().name()
        )));
    }
    if !f.is_nonconstant() {
        return Err(Error::DegreeTooSmall);
    }
    let hypotheses = ideal.predicates(hypothesis_bound)?;
    check_eisenstein_with(f, ideal, hypotheses)
}

/// [`check_eisenstein`] with the ideal's predicate report already computed,
/// for checking many polynomials against one ideal.
pub fn check_eisenstein_with(
    f: &Polynomial,
    ideal: &Ideal,
    hypotheses: IdealPredicateReport,
) -> Result<EisensteinReport> {
    if !same_semiring(f.semiring(), ideal.semiring()) {
        return Err(Error::SemiringMismatch(format!(
            "polynomial over `{}`, ideal over `{}`",
            f.semiring().name(),
            ideal.semiring().name()
        )));
    }
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::DegreeTooSmall),
    };
    let square = ideal.square()?;

    let coeffs = f.coefficients();
    let leading_in_ideal = ideal.contains_unchecked(&coeffs[n]);
    let lower_in_ideal: Vec<bool> = coeffs[..n].iter().map(|a| ideal.contains_unchecked(a)).collect();
    let constant_in_square = square.contains_unchecked(&coeffs[0]);

    let hypothesis_failure = if !hypotheses.proper {
        Some(HypothesisFailure::Improper)
    } else if let Check::Fails(w) = &hypotheses.prime {
        Some(HypothesisFailure::NotPrime(w.clone()))
    } else if let Check::Fails((a, b)) = &hypotheses.subtractive {
        Some(HypothesisFailure::NotSubtractive(a.clone(), b.clone()))
    } else {
        None
    };

    let verdict = if let Some(failure) = hypothesis_failure {
        Verdict::HypothesisNotEstablished(failure)
    } else if leading_in_ideal {
        Verdict::NotApplicable {
            condition: 1,
            index: n,
            coefficient: coeffs[n].clone(),
        }
    } else if let Some(i) = lower_in_ideal.iter().position(|&inside| !inside) {
        Verdict::NotApplicable {
            condition: 2,
            index: i,
            coefficient: coeffs[i].clone(),
        }
    } else if constant_in_square {
        Verdict::NotApplicable {
            condition: 3,
            index: 0,
            coefficient: coeffs[0].clone(),
        }
    } else {
        Verdict::Satisfied
    };

    Ok(EisensteinReport {
        verdict,
        degree: n,
        ideal: ideal.clone(),
        square,
        leading_in_ideal,
        lower_in_ideal,
        constant_in_square,
        hypotheses,
        route: HypothesisRoute::IdealCertificate,
    })
}

/// Prime-element form: `p ∤ a_n`, `p | a_i` for `i < n`, `p² ∤ a_0`.
///
/// Lowers to [`check_eisenstein`] over `(p)`. When the semiring is flagged
/// as a weak Gaussian factorial semidomain, the hypothesis comes from the
/// flags; otherwise the per-ideal certificate that `(p)` is subtractive
/// and prime is used, which is what makes `nat` usable here even though it
/// is not weak Gaussian.
pub fn check_corollary(
    f: &Polynomial,
    p: &Element,
    hypothesis_bound: u64,
) -> Result<EisensteinReport> {
    let semiring: &Arc<Semiring> = f.semiring();
    semiring.check(p)?;
    let shown = semiring.format_element(p);
    if semiring.is_zero(p) {
        return Err(Error::NotPrimeElement(shown, "zero is excluded".into()));
    }
    if semiring.is_unit(p) {
        return Err(Error::NotPrimeElement(shown, "units generate the whole semiring".into()));
    }
    let ideal = principal_ideal(semiring, p)?;
    let mut report = check_eisenstein(f, &ideal, hypothesis_bound)?;
    if let Check::Fails(w) = &report.hypotheses.prime {
        let reason = match w {
            PrimeFailure::Improper => "(p) is not proper".to_string(),
            PrimeFailure::Pair(x, y) => format!(
                "p divides {} * {} but neither factor",
                semiring.format_element(x),
                semiring.format_element(y)
            ),
        };
        return Err(Error::NotPrimeElement(shown, reason));
    }
    let flags = semiring.flags();
    if flags.is_weak_gaussian && flags.is_factorial && flags.is_semidomain {
        report.route = HypothesisRoute::SemiringFlags;
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceTerm {
    pub b_index: usize,
    pub c_index: usize,
    pub value: Element,
    pub in_ideal: bool,
}

/// The contradiction argument, replayed on a concrete product `f = g·h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceReport {
    pub ideal: Ideal,
    /// Factor whose constant term lies outside `P`.
    pub b: Polynomial,
    /// The other factor.
    pub c: Polynomial,
    /// True when `h` plays `b`.
    pub swapped: bool,
    pub product: Polynomial,
    /// Least index with `c_m ∉ P`.
    pub m: usize,
    /// `b_0·c_m, b_1·c_{m-1}, ...` in summation order.
    pub terms: Vec<TraceTerm>,
    pub a_m: Element,
    pub a_m_in_ideal: bool,
    /// More than one term, so leaving `P` needs subtractivity.
    pub subtractivity_used: bool,
    /// Index of the first partial sum that lands in `P`, when `a_m ∈ P`.
    pub absorbed_at: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceOutcome {
    Trace(TraceReport),
    /// Both constant terms lie in `P`, so `a_0 ∈ P²`.
    RolesUnassignable { g_constant: Element, h_constant: Element },
}

pub fn proof_trace(g: &Polynomial, h: &Polynomial, ideal: &Ideal) -> Result<TraceOutcome> {
    if !same_semiring(g.semiring(), h.semiring()) || !same_semiring(g.semiring(), ideal.semiring()) {
        return Err(Error::SemiringMismatch("trace operands".into()));
    }
    if !g.is_nonconstant() || !h.is_nonconstant() {
        return Err(Error::TracePrecondition("both factors must be non-constant".into()));
    }
    let s = g.semiring().clone();
    let (g0, h0) = (g.coeff(0), h.coeff(0));
    let (b, c, swapped) = if !ideal.contains_unchecked(&g0) {
        (g, h, false)
    } else if !ideal.contains_unchecked(&h0) {
        (h, g, true)
    } else {
        return Ok(TraceOutcome::RolesUnassignable {
            g_constant: g0,
            h_constant: h0,
        });
    };
    let m = c
        .coefficients()
        .iter()
        .position(|x| !ideal.contains_unchecked(x))
        .ok_or_else(|| {
            Error::TracePrecondition("every coefficient of the second factor lies in the ideal".into())
        })?;
    let r = b.degree().expect("non-constant");

    let terms: Vec<TraceTerm> = (0..=m.min(r))
        .map(|i| {
            let value = s.mul(&b.coeff(i), &c.coeff(m - i));
            TraceTerm {
                b_index: i,
                c_index: m - i,
                in_ideal: ideal.contains_unchecked(&value),
                value,
            }
        })
        .collect();
    let mut partial = s.zero();
    let mut absorbed_at = None;
    for (k, t) in terms.iter().enumerate() {
        partial = s.add(&partial, &t.value);
        if absorbed_at.is_none() && ideal.contains_unchecked(&partial) {
            absorbed_at = Some(k);
        }
    }
    let product = b.mul_unchecked(c);
    let a_m = product.coeff(m);
    debug_assert_eq!(a_m, partial);
    let a_m_in_ideal = ideal.contains_unchecked(&a_m);
    Ok(TraceOutcome::Trace(TraceReport {
        ideal: ideal.clone(),
        b: b.clone(),
        c: c.clone(),
        swapped,
        product,
        m,
        subtractivity_used: terms.len() > 1,
        absorbed_at: if a_m_in_ideal { absorbed_at } else { None },
        terms,
        a_m,
        a_m_in_ideal,
    }))
}

impl fmt::Display for TraceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.b.semiring();
        let member = |inside: bool| if inside { "in P" } else { "not in P" };
        writeln!(f, "semiring: {}", s.name())?;
        writeln!(f, "ideal P: {}", self.ideal)?;
        writeln!(f, "b (constant term not in P): {}{}", self.b, if self.swapped { " [h]" } else { " [g]" })?;
        writeln!(f, "c: {}{}", self.c, if self.swapped { " [g]" } else { " [h]" })?;
        writeln!(f, "f = b*c: {}", self.product)?;
        writeln!(f, "m: {}", self.m)?;
        writeln!(f, "a_{} terms:", self.m)?;
        for t in &self.terms {
            writeln!(
                f,
                "  b_{}*c_{} = {} ({})",
                t.b_index,
                t.c_index,
                s.format_element(&t.value),
                member(t.in_ideal)
            )?;
        }
        writeln!(f, "a_{} = {} ({})", self.m, s.format_element(&self.a_m), member(self.a_m_in_ideal))?;
        writeln!(f, "subtractivity used: {}", if self.subtractivity_used { "yes" } else { "no" })?;
        match self.absorbed_at {
            Some(k) => writeln!(f, "absorbed at partial sum through term {k}"),
            None => writeln!(f, "absorbed: no"),
        }
    }
}
