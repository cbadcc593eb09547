//! Readable and JSON renderings of every command's result.
//!
//! JSON documents are built from structs so field order is fixed and the
//! output is byte-stable.

use std::fmt::Write as _;
use std::sync::Arc;

use eisenstein_core::{
    Axiom, Check, CoefficientBound, EisensteinReport, FactorizationOutcome, Finding,
    FiniteSemiring, HuntReport, HypothesisFailure, HypothesisRoute, Ideal, IdealPredicateReport,
    IdealRepr, Polynomial, PrimeFailure, SearchConfig, Semiring, TheoremStats, TraceOutcome,
    TraceReport, Verdict,
};
use serde::Serialize;

use crate::{Report, EXIT_ERROR, EXIT_NEGATIVE, EXIT_POSITIVE};

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Serialize)]
struct PolyDoc {
    text: String,
    /// Low degree first.
    coefficients: Vec<String>,
}

fn poly_doc(f: &Polynomial) -> PolyDoc {
    let s = f.semiring();
    PolyDoc {
        text: f.to_string(),
        coefficients: f.coefficients().iter().map(|c| s.format_element(c)).collect(),
    }
}

#[derive(Serialize)]
struct IdealDoc {
    text: String,
    generators: Vec<String>,
    members: Option<Vec<String>>,
}

fn ideal_doc(ideal: &Ideal) -> IdealDoc {
    let s = ideal.semiring();
    let t = s.table();
    let name = |i: usize| t.expect("finite").name(i).to_string();
    match ideal.repr() {
        IdealRepr::FiniteSet {
            members,
            generators,
        } => IdealDoc {
            text: ideal.to_string(),
            generators: generators.iter().map(|&i| name(i)).collect(),
            members: Some(members.iter().map(|&i| name(i)).collect()),
        },
        IdealRepr::Principal { generator } => IdealDoc {
            text: ideal.to_string(),
            generators: vec![s.format_element(generator)],
            members: None,
        },
    }
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
enum CheckDoc {
    Holds,
    VerifiedUpTo { bound: u64 },
    Fails { witness: Vec<String>, reason: String },
}

fn prime_doc(s: &Semiring, c: &Check<PrimeFailure>) -> CheckDoc {
    match c {
        Check::Holds => CheckDoc::Holds,
        Check::VerifiedUpTo(b) => CheckDoc::VerifiedUpTo { bound: *b },
        Check::Fails(w) => CheckDoc::Fails {
            witness: match w {
                PrimeFailure::Improper => Vec::new(),
                PrimeFailure::Pair(a, b) => vec![s.format_element(a), s.format_element(b)],
            },
            reason: prime_failure_text(s, w),
        },
    }
}

fn subtractive_doc(s: &Semiring, c: &Check<(eisenstein_core::Element, eisenstein_core::Element)>) -> CheckDoc {
    match c {
        Check::Holds => CheckDoc::Holds,
        Check::VerifiedUpTo(b) => CheckDoc::VerifiedUpTo { bound: *b },
        Check::Fails((a, b)) => CheckDoc::Fails {
            witness: vec![s.format_element(a), s.format_element(b)],
            reason: subtractive_failure_text(s, a, b),
        },
    }
}

fn check_text<W>(c: &Check<W>, fail: impl FnOnce(&W) -> String) -> String {
    match c {
        Check::Holds => "holds".into(),
        Check::VerifiedUpTo(b) => format!("verified up to {b}"),
        Check::Fails(w) => format!("fails: {}", fail(w)),
    }
}

fn prime_failure_text(s: &Semiring, w: &PrimeFailure) -> String {
    match w {
        PrimeFailure::Improper => "the ideal is not proper".into(),
        PrimeFailure::Pair(a, b) => format!(
            "{} * {} = {} is in P but neither factor is",
            s.format_element(a),
            s.format_element(b),
            s.format_element(&s.mul(a, b))
        ),
    }
}

fn subtractive_failure_text(
    s: &Semiring,
    a: &eisenstein_core::Element,
    b: &eisenstein_core::Element,
) -> String {
    format!(
        "{} + {} = {} and {} are in P but {} is not",
        s.format_element(a),
        s.format_element(b),
        s.format_element(&s.add(a, b)),
        s.format_element(a),
        s.format_element(b)
    )
}

#[derive(Serialize)]
struct HypothesesDoc {
    proper: bool,
    prime: CheckDoc,
    subtractive: CheckDoc,
    notes: Vec<String>,
}

fn hypotheses_doc(s: &Semiring, preds: &IdealPredicateReport) -> HypothesesDoc {
    HypothesesDoc {
        proper: preds.proper,
        prime: prime_doc(s, &preds.prime),
        subtractive: subtractive_doc(s, &preds.subtractive),
        notes: preds.notes.clone(),
    }
}

fn write_hypotheses(out: &mut String, s: &Semiring, preds: &IdealPredicateReport) {
    let _ = writeln!(out, "proper: {}", yes_no(preds.proper));
    let _ = writeln!(
        out,
        "prime: {}",
        check_text(&preds.prime, |w| prime_failure_text(s, w))
    );
    let _ = writeln!(
        out,
        "subtractive: {}",
        check_text(&preds.subtractive, |(a, b)| subtractive_failure_text(s, a, b))
    );
    for note in &preds.notes {
        let _ = writeln!(out, "  note: {note}");
    }
}

#[derive(Serialize)]
struct BoundsDoc {
    /// Applies to infinite carriers only.
    hypothesis_bound: Option<u64>,
}

fn bounds(s: &Semiring, bound: u64) -> BoundsDoc {
    BoundsDoc {
        hypothesis_bound: (!s.is_finite()).then_some(bound),
    }
}

#[derive(Serialize)]
struct AxiomDoc {
    axiom: &'static str,
    holds: bool,
    counterexample: Option<Vec<String>>,
    detail: Option<String>,
}

#[derive(Serialize)]
struct AxiomsDoc {
    command: &'static str,
    semiring: String,
    order: usize,
    passed: bool,
    axioms: Vec<AxiomDoc>,
}

/// The instance of `axiom` at `args`, spelled out so it can be re-checked
/// against the table by hand.
fn axiom_instance(t: &FiniteSemiring, axiom: Axiom, args: &[usize]) -> String {
    let n = |i: usize| t.name(i);
    let (z, o) = (t.zero_index(), t.one_index());
    match (axiom, args) {
        (Axiom::AddCommutative, &[a, b]) => format!(
            "{a} + {b} = {} but {b} + {a} = {}",
            n(t.add(a, b)),
            n(t.add(b, a)),
            a = n(a),
            b = n(b)
        ),
        (Axiom::MulCommutative, &[a, b]) => format!(
            "{a} * {b} = {} but {b} * {a} = {}",
            n(t.mul(a, b)),
            n(t.mul(b, a)),
            a = n(a),
            b = n(b)
        ),
        (Axiom::AddAssociative, &[a, b, c]) => format!(
            "({a} + {b}) + {c} = {} but {a} + ({b} + {c}) = {}",
            n(t.add(t.add(a, b), c)),
            n(t.add(a, t.add(b, c))),
            a = n(a),
            b = n(b),
            c = n(c)
        ),
        (Axiom::MulAssociative, &[a, b, c]) => format!(
            "({a} * {b}) * {c} = {} but {a} * ({b} * {c}) = {}",
            n(t.mul(t.mul(a, b), c)),
            n(t.mul(a, t.mul(b, c))),
            a = n(a),
            b = n(b),
            c = n(c)
        ),
        (Axiom::AddIdentity, &[a]) => format!(
            "{a} + {z} = {} and {z} + {a} = {}, expected {a}",
            n(t.add(a, z)),
            n(t.add(z, a)),
            a = n(a),
            z = n(z)
        ),
        (Axiom::MulIdentity, &[a]) => format!(
            "{a} * {o} = {} and {o} * {a} = {}, expected {a}",
            n(t.mul(a, o)),
            n(t.mul(o, a)),
            a = n(a),
            o = n(o)
        ),
        (Axiom::Distributive, &[a, b, c]) => format!(
            "{a} * ({b} + {c}) = {} but {a} * {b} + {a} * {c} = {}",
            n(t.mul(a, t.add(b, c))),
            n(t.add(t.mul(a, b), t.mul(a, c))),
            a = n(a),
            b = n(b),
            c = n(c)
        ),
        (Axiom::AbsorbingZero, &[a]) => format!(
            "{a} * {z} = {} and {z} * {a} = {}, expected {z}",
            n(t.mul(a, z)),
            n(t.mul(z, a)),
            a = n(a),
            z = n(z)
        ),
        _ => unreachable!("counterexamples have the axiom's arity"),
    }
}

pub(crate) fn axioms(name: &str, t: &FiniteSemiring) -> Report {
    let report = t.check_axioms();
    let mut human = format!("semiring: {name} (order {})\n", t.order());
    let mut docs = Vec::new();
    for check in &report.checks {
        let detail = check
            .counterexample
            .as_ref()
            .map(|args| axiom_instance(t, check.axiom, args));
        match &detail {
            None => {
                let _ = writeln!(human, "{}: ok", check.axiom);
            }
            Some(d) => {
                let _ = writeln!(human, "{}: FAIL: {d}", check.axiom);
            }
        }
        docs.push(AxiomDoc {
            axiom: check.axiom.name(),
            holds: check.counterexample.is_none(),
            counterexample: check
                .counterexample
                .as_ref()
                .map(|args| args.iter().map(|&i| t.name(i).to_string()).collect()),
            detail,
        });
    }
    let passed = report.passed();
    let _ = writeln!(human, "result: {}", if passed { "all axioms hold" } else { "axioms fail" });
    Report {
        code: if passed { EXIT_POSITIVE } else { EXIT_NEGATIVE },
        json: to_json(&AxiomsDoc {
            command: "axioms",
            semiring: name.to_string(),
            order: t.order(),
            passed,
            axioms: docs,
        }),
        human,
        diagnostic: None,
    }
}

#[derive(Serialize)]
struct IdealReportDoc {
    command: &'static str,
    semiring: String,
    ideal: IdealDoc,
    square: IdealDoc,
    subtractive_prime: bool,
    hypotheses: HypothesesDoc,
    bounds: BoundsDoc,
}

pub(crate) fn ideal(
    ideal: &Ideal,
    preds: &IdealPredicateReport,
    bound: u64,
) -> eisenstein_core::Result<Report> {
    let s = ideal.semiring();
    let square = ideal.square()?;
    let mut human = format!("semiring: {}\nideal: {ideal}\nsquare: {square}\n", s.name());
    write_hypotheses(&mut human, s, preds);
    let ok = preds.is_subtractive_prime();
    let _ = writeln!(
        human,
        "result: {}",
        if ok {
            "proper, prime and subtractive"
        } else {
            "not a subtractive prime"
        }
    );
    Ok(Report {
        code: if ok { EXIT_POSITIVE } else { EXIT_NEGATIVE },
        json: to_json(&IdealReportDoc {
            command: "ideal",
            semiring: s.name().to_string(),
            ideal: ideal_doc(ideal),
            square: ideal_doc(&square),
            subtractive_prime: ok,
            hypotheses: hypotheses_doc(s, preds),
            bounds: bounds(s, bound),
        }),
        human,
        diagnostic: None,
    })
}

#[derive(Serialize)]
struct CoefficientDoc {
    index: usize,
    value: String,
    in_ideal: bool,
    in_square: bool,
}

#[derive(Serialize)]
struct ConditionsDoc {
    leading_not_in_ideal: bool,
    lower_in_ideal: bool,
    constant_not_in_square: bool,
}

#[derive(Serialize)]
struct WitnessDoc {
    index: usize,
    coefficient: String,
}

#[derive(Serialize)]
struct EisensteinDoc {
    command: &'static str,
    semiring: String,
    polynomial: PolyDoc,
    degree: usize,
    ideal: IdealDoc,
    square: IdealDoc,
    verdict: &'static str,
    failed_condition: Option<u8>,
    witness: Option<WitnessDoc>,
    conditions: ConditionsDoc,
    coefficients: Vec<CoefficientDoc>,
    hypotheses: HypothesesDoc,
    hypothesis_failure: Option<String>,
    route: &'static str,
    bounds: BoundsDoc,
}

fn hypothesis_failure_text(s: &Semiring, ideal: &Ideal, w: &HypothesisFailure) -> String {
    match w {
        HypothesisFailure::Improper => format!("ideal {ideal} is not proper"),
        HypothesisFailure::NotPrime(p) => {
            format!("ideal {ideal} is not prime: {}", prime_failure_text(s, p))
        }
        HypothesisFailure::NotSubtractive(a, b) => format!(
            "ideal {ideal} is not subtractive: {}",
            subtractive_failure_text(s, a, b)
        ),
    }
}

pub(crate) fn eisenstein(
    command: &'static str,
    f: &Polynomial,
    report: &EisensteinReport,
    bound: u64,
) -> eisenstein_core::Result<Report> {
    let s = f.semiring();
    let n = report.degree;
    let (ideal, square) = (&report.ideal, &report.square);
    let mut coefficients = Vec::new();
    for (i, c) in f.coefficients().iter().enumerate() {
        coefficients.push(CoefficientDoc {
            index: i,
            value: s.format_element(c),
            in_ideal: ideal.contains(c)?,
            in_square: square.contains(c)?,
        });
    }
    let route = match report.route {
        HypothesisRoute::IdealCertificate => "ideal-certificate",
        HypothesisRoute::SemiringFlags => "semiring-flags",
    };

    let mut human = format!(
        "semiring: {}\nf = {f}\nideal P: {ideal}\nP^2: {square}\n",
        s.name()
    );
    write_hypotheses(&mut human, s, &report.hypotheses);
    let _ = writeln!(human, "hypothesis route: {route}");
    let holds = |b: bool| if b { "holds" } else { "fails" };
    let _ = writeln!(
        human,
        "condition 1 (a_{n} not in P): {}",
        holds(report.condition_holds(1))
    );
    let _ = writeln!(
        human,
        "condition 2 (a_i in P for i < {n}): {}",
        holds(report.condition_holds(2))
    );
    let _ = writeln!(
        human,
        "condition 3 (a_0 not in P^2): {}",
        holds(report.condition_holds(3))
    );

    let (verdict, failed_condition, witness, failure, code) = match &report.verdict {
        Verdict::Satisfied => {
            human.push_str("verdict: Satisfied (no factorization into two non-constant polynomials)\n");
            ("Satisfied", None, None, None, EXIT_POSITIVE)
        }
        Verdict::NotApplicable {
            condition,
            index,
            coefficient,
        } => {
            let value = s.format_element(coefficient);
            let _ = writeln!(
                human,
                "verdict: NotApplicable (condition {condition} fails at a_{index} = {value})"
            );
            (
                "NotApplicable",
                Some(*condition),
                Some(WitnessDoc {
                    index: *index,
                    coefficient: value,
                }),
                None,
                EXIT_NEGATIVE,
            )
        }
        Verdict::HypothesisNotEstablished(w) => {
            let text = hypothesis_failure_text(s, ideal, w);
            let _ = writeln!(human, "verdict: HypothesisNotEstablished ({text})");
            ("HypothesisNotEstablished", None, None, Some(text), EXIT_ERROR)
        }
    };
    Ok(Report {
        code,
        json: to_json(&EisensteinDoc {
            command,
            semiring: s.name().to_string(),
            polynomial: poly_doc(f),
            degree: n,
            ideal: ideal_doc(ideal),
            square: ideal_doc(square),
            verdict,
            failed_condition,
            witness,
            conditions: ConditionsDoc {
                leading_not_in_ideal: report.condition_holds(1),
                lower_in_ideal: report.condition_holds(2),
                constant_not_in_square: report.condition_holds(3),
            },
            coefficients,
            hypotheses: hypotheses_doc(s, &report.hypotheses),
            hypothesis_failure: failure.clone(),
            route,
            bounds: bounds(s, bound),
        }),
        human,
        diagnostic: failure.map(|t| format!("hypothesis not established: {t}")),
    })
}

#[derive(Serialize)]
struct FactorBoundsDoc {
    window: usize,
    coeff_bound: Option<u64>,
    node_budget: u64,
    coefficients: Option<String>,
}

#[derive(Serialize)]
struct FactorDoc {
    command: &'static str,
    semiring: String,
    polynomial: PolyDoc,
    result: &'static str,
    g: Option<PolyDoc>,
    h: Option<PolyDoc>,
    complete: Option<bool>,
    degree_pairs: Vec<[usize; 2]>,
    budget_exhausted: bool,
    bounds: FactorBoundsDoc,
}

fn coefficient_bound_text(b: &CoefficientBound) -> String {
    b.to_string()
}

pub(crate) fn factor(f: &Polynomial, config: &SearchConfig, outcome: &FactorizationOutcome) -> Report {
    let s = f.semiring();
    let mut human = format!("semiring: {}\nf = {f}\n", s.name());
    let mut doc = FactorDoc {
        command: "factor",
        semiring: s.name().to_string(),
        polynomial: poly_doc(f),
        result: "",
        g: None,
        h: None,
        complete: None,
        degree_pairs: Vec::new(),
        budget_exhausted: false,
        bounds: FactorBoundsDoc {
            window: config.window,
            coeff_bound: config.coeff_bound,
            node_budget: config.node_budget,
            coefficients: None,
        },
    };
    let code = match outcome {
        FactorizationOutcome::Found { g, h } => {
            let _ = writeln!(human, "result: found\ng = {g}\nh = {h}");
            doc.result = "found";
            doc.g = Some(poly_doc(g));
            doc.h = Some(poly_doc(h));
            EXIT_POSITIVE
        }
        FactorizationOutcome::NoneWithinBounds {
            complete,
            degree_pairs,
            coefficient_bound,
            budget_exhausted,
        } => {
            let pairs: Vec<String> = degree_pairs.iter().map(|(r, s)| format!("({r}, {s})")).collect();
            let _ = writeln!(
                human,
                "result: no factorization within bounds\ncomplete: {}\ndegree pairs: {}\ncoefficients: {coefficient_bound}\nbudget exhausted: {}",
                yes_no(*complete),
                if pairs.is_empty() { "none".to_string() } else { pairs.join(" ") },
                yes_no(*budget_exhausted)
            );
            doc.result = "none-within-bounds";
            doc.complete = Some(*complete);
            doc.degree_pairs = degree_pairs.iter().map(|&(r, s)| [r, s]).collect();
            doc.budget_exhausted = *budget_exhausted;
            doc.bounds.coefficients = Some(coefficient_bound_text(coefficient_bound));
            EXIT_NEGATIVE
        }
    };
    Report {
        code,
        json: to_json(&doc),
        human,
        diagnostic: None,
    }
}

#[derive(Serialize)]
struct TermDoc {
    b_index: usize,
    c_index: usize,
    value: String,
    in_ideal: bool,
}

#[derive(Serialize)]
struct TraceDoc {
    b: PolyDoc,
    c: PolyDoc,
    swapped: bool,
    product: PolyDoc,
    m: usize,
    terms: Vec<TermDoc>,
    a_m: String,
    a_m_in_ideal: bool,
    subtractivity_used: bool,
    absorbed_at: Option<usize>,
}

fn trace_doc(t: &TraceReport) -> TraceDoc {
    let s = t.b.semiring();
    TraceDoc {
        b: poly_doc(&t.b),
        c: poly_doc(&t.c),
        swapped: t.swapped,
        product: poly_doc(&t.product),
        m: t.m,
        terms: t
            .terms
            .iter()
            .map(|term| TermDoc {
                b_index: term.b_index,
                c_index: term.c_index,
                value: s.format_element(&term.value),
                in_ideal: term.in_ideal,
            })
            .collect(),
        a_m: s.format_element(&t.a_m),
        a_m_in_ideal: t.a_m_in_ideal,
        subtractivity_used: t.subtractivity_used,
        absorbed_at: t.absorbed_at,
    }
}

#[derive(Serialize)]
struct TraceReportDoc {
    command: &'static str,
    semiring: String,
    ideal: IdealDoc,
    outcome: &'static str,
    trace: Option<TraceDoc>,
    constant_terms: Option<[String; 2]>,
}

pub(crate) fn trace(s: &Arc<Semiring>, ideal: &Ideal, outcome: &TraceOutcome) -> Report {
    let mut doc = TraceReportDoc {
        command: "trace",
        semiring: s.name().to_string(),
        ideal: ideal_doc(ideal),
        outcome: "",
        trace: None,
        constant_terms: None,
    };
    let (human, code) = match outcome {
        TraceOutcome::Trace(t) => {
            doc.outcome = "trace";
            doc.trace = Some(trace_doc(t));
            let code = if t.a_m_in_ideal { EXIT_NEGATIVE } else { EXIT_POSITIVE };
            (t.to_string(), code)
        }
        TraceOutcome::RolesUnassignable {
            g_constant,
            h_constant,
        } => {
            doc.outcome = "roles-unassignable";
            let (g0, h0) = (s.format_element(g_constant), s.format_element(h_constant));
            let human = format!(
                "semiring: {}\nideal P: {ideal}\nroles unassignable: g_0 = {g0} and h_0 = {h0} both lie in P, so a_0 = g_0*h_0 lies in P^2\n",
                s.name()
            );
            doc.constant_terms = Some([g0, h0]);
            (human, EXIT_NEGATIVE)
        }
    };
    Report {
        code,
        json: to_json(&doc),
        human,
        diagnostic: None,
    }
}

#[derive(Serialize)]
struct ViolationDoc {
    f: PolyDoc,
    ideal: IdealDoc,
    g: PolyDoc,
    h: PolyDoc,
}

#[derive(Serialize)]
struct StatsDoc {
    ideals_found: usize,
    subtractive_primes: Vec<IdealDoc>,
    polynomials_scanned: usize,
    criterion_applicable: usize,
    violations: usize,
    incomplete_searches: usize,
}

#[derive(Serialize)]
struct VerifyDoc {
    command: &'static str,
    semiring: String,
    order: usize,
    max_degree: usize,
    window: usize,
    stats: StatsDoc,
    violation_witnesses: Vec<ViolationDoc>,
}

pub(crate) fn verify(s: &Arc<Semiring>, max_degree: usize, window: usize, stats: &TheoremStats) -> Report {
    let order = s.table().map_or(0, |t| t.order());
    let primes: Vec<String> = stats.subtractive_primes.iter().map(|p| p.to_string()).collect();
    let mut human = format!(
        "semiring: {} (order {order})\nmax degree: {max_degree}, window: {window}\nideals found: {}\nsubtractive primes: {}\npolynomials scanned: {}\ncriterion applicable: {}\nviolations: {}\nincomplete searches: {}\n",
        s.name(),
        stats.ideals_found,
        if primes.is_empty() { "none".to_string() } else { primes.join(" ") },
        stats.polynomials_scanned,
        stats.criterion_applicable,
        stats.violations,
        stats.incomplete_searches,
    );
    for v in &stats.violation_witnesses {
        let _ = writeln!(human, "violation: P = {}, f = {} = ({}) * ({})", v.ideal, v.f, v.g, v.h);
    }
    Report {
        code: if stats.violations == 0 { EXIT_POSITIVE } else { EXIT_NEGATIVE },
        json: to_json(&VerifyDoc {
            command: "verify-theorem",
            semiring: s.name().to_string(),
            order,
            max_degree,
            window,
            stats: StatsDoc {
                ideals_found: stats.ideals_found,
                subtractive_primes: stats.subtractive_primes.iter().map(ideal_doc).collect(),
                polynomials_scanned: stats.polynomials_scanned,
                criterion_applicable: stats.criterion_applicable,
                violations: stats.violations,
                incomplete_searches: stats.incomplete_searches,
            },
            violation_witnesses: stats
                .violation_witnesses
                .iter()
                .map(|v| ViolationDoc {
                    f: poly_doc(&v.f),
                    ideal: ideal_doc(&v.ideal),
                    g: poly_doc(&v.g),
                    h: poly_doc(&v.h),
                })
                .collect(),
        }),
        human,
        diagnostic: None,
    }
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum FindingDoc {
    NonSubtractivePrime {
        semiring: String,
        table: String,
        ideal: IdealDoc,
        witness: [String; 2],
        detail: String,
    },
    NearMiss {
        semiring: String,
        ideal: IdealDoc,
        occurrences: usize,
        trace: TraceDoc,
    },
    Counterexample {
        semiring: String,
        ideal: IdealDoc,
        f: PolyDoc,
        g: PolyDoc,
        h: PolyDoc,
    },
}

#[derive(Serialize)]
struct HuntDoc {
    command: &'static str,
    max_order: usize,
    max_degree: usize,
    budget: u64,
    semirings_examined: usize,
    partial: bool,
    findings: Vec<FindingDoc>,
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("    {l}\n")).collect()
}

pub(crate) fn hunt(max_order: usize, max_degree: usize, budget: u64, report: &HuntReport) -> Report {
    let mut human = format!(
        "semirings examined: {}\npartial: {}\nfindings: {}\n",
        report.semirings_examined,
        yes_no(report.partial),
        report.findings.len()
    );
    let mut docs = Vec::new();
    for finding in &report.findings {
        match finding {
            Finding::NonSubtractivePrime {
                semiring,
                ideal,
                witness: (a, b),
            } => {
                let table = semiring.table().expect("finite").to_file_string();
                let detail = subtractive_failure_text(semiring, a, b);
                let _ = write!(
                    human,
                    "non-subtractive prime in {}: P = {ideal}, {detail}\n  table:\n{}",
                    semiring.name(),
                    indent(&table)
                );
                docs.push(FindingDoc::NonSubtractivePrime {
                    semiring: semiring.name().to_string(),
                    table,
                    ideal: ideal_doc(ideal),
                    witness: [semiring.format_element(a), semiring.format_element(b)],
                    detail,
                });
            }
            Finding::NearMiss {
                semiring,
                trace,
                occurrences,
            } => {
                let _ = write!(
                    human,
                    "near miss in {} ({occurrences} products with a_m in P), first:\n{}",
                    semiring.name(),
                    indent(&trace.to_string())
                );
                docs.push(FindingDoc::NearMiss {
                    semiring: semiring.name().to_string(),
                    ideal: ideal_doc(&trace.ideal),
                    occurrences: *occurrences,
                    trace: trace_doc(trace),
                });
            }
            Finding::Counterexample {
                semiring,
                ideal,
                f,
                g,
                h,
            } => {
                let _ = writeln!(
                    human,
                    "counterexample in {}: P = {ideal}, f = {f} = ({g}) * ({h})",
                    semiring.name()
                );
                docs.push(FindingDoc::Counterexample {
                    semiring: semiring.name().to_string(),
                    ideal: ideal_doc(ideal),
                    f: poly_doc(f),
                    g: poly_doc(g),
                    h: poly_doc(h),
                });
            }
        }
    }
    Report {
        code: EXIT_POSITIVE,
        json: to_json(&HuntDoc {
            command: "hunt",
            max_order,
            max_degree,
            budget,
            semirings_examined: report.semirings_examined,
            partial: report.partial,
            findings: docs,
        }),
        human,
        diagnostic: None,
    }
}
