use std::sync::Arc;

use eisenstein_core::{
    builtin_semiring, check_corollary, check_eisenstein, principal_ideal, proof_trace,
    search_factorizations, Element, Error, FiniteSemiring, HypothesisRoute, Ideal, Polynomial,
    Semiring, TraceOutcome, Verdict,
};
use num_integer::Integer;
use proptest::prelude::*;

const INF: u64 = u64::MAX;

/// Plain integer model of the three infinite carriers, with `P` fixed.
#[derive(Clone, Copy, Debug)]
enum Model {
    Nat(u64),
    Gcd(u64),
    /// tropical-min with `P = (1)`.
    Trop,
}

impl Model {
    fn name(self) -> &'static str {
        match self {
            Model::Nat(_) => "nat",
            Model::Gcd(_) => "gcd-nat",
            Model::Trop => "tropical-min",
        }
    }

    fn zero(self) -> u64 {
        match self {
            Model::Trop => INF,
            _ => 0,
        }
    }

    fn one(self) -> u64 {
        match self {
            Model::Trop => 0,
            _ => 1,
        }
    }

    fn add(self, a: u64, b: u64) -> u64 {
        match self {
            Model::Nat(_) => a + b,
            Model::Gcd(_) => a.gcd(&b),
            Model::Trop => a.min(b),
        }
    }

    fn mul(self, a: u64, b: u64) -> u64 {
        match self {
            Model::Trop if a == INF || b == INF => INF,
            Model::Trop => a + b,
            _ => a * b,
        }
    }

    fn in_p(self, x: u64) -> bool {
        match self {
            Model::Nat(p) | Model::Gcd(p) => x.is_multiple_of(p),
            Model::Trop => x >= 1,
        }
    }

    /// A member of `P` derived from `x`.
    fn into_p(self, x: u64) -> u64 {
        match self {
            Model::Nat(p) | Model::Gcd(p) => x * p,
            Model::Trop => x.max(1),
        }
    }

    fn element(self, x: u64) -> Element {
        match self {
            Model::Trop if x == INF => Element::inf(),
            Model::Trop => Element::ext(x),
            _ => Element::nat(x),
        }
    }

    fn semiring(self) -> Arc<Semiring> {
        builtin_semiring(self.name()).unwrap()
    }

    fn ideal(self) -> Ideal {
        let p = match self {
            Model::Nat(p) | Model::Gcd(p) => Element::nat(p),
            Model::Trop => Element::ext(1u32),
        };
        principal_ideal(&self.semiring(), &p).unwrap()
    }

    fn poly(self, coeffs: &[u64]) -> Polynomial {
        Polynomial::new(self.semiring(), coeffs.iter().map(|&c| self.element(c)).collect()).unwrap()
    }

    fn convolve(self, b: &[u64], c: &[u64]) -> Vec<u64> {
        let mut out = vec![self.zero(); b.len() + c.len() - 1];
        for (i, &x) in b.iter().enumerate() {
            for (j, &y) in c.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        out
    }
}

fn coefficient(model: Model) -> BoxedStrategy<u64> {
    match model {
        Model::Trop => prop_oneof![5 => 0u64..=20, 1 => Just(INF)].boxed(),
        _ => (0u64..=20).boxed(),
    }
}

#[derive(Debug)]
struct LemmaCase {
    model: Model,
    b: Vec<u64>,
    c: Vec<u64>,
    m: usize,
    swap: bool,
}

/// `b_0 ∉ P`, `c_k ∈ P` for `k < m`, `c_m ∉ P`, both non-constant.
fn lemma_case() -> impl Strategy<Value = LemmaCase> {
    prop::sample::select(vec![Model::Nat(2), Model::Nat(3), Model::Gcd(2), Model::Trop])
        .prop_flat_map(|model| {
            let coeffs = prop::collection::vec(coefficient(model), 2..=5);
            (Just(model), coeffs.clone(), coeffs, any::<prop::sample::Index>(), any::<bool>())
        })
        .prop_map(|(model, mut b, mut c, m, swap)| {
            let m = m.index(c.len());
            if model.in_p(b[0]) {
                b[0] = model.one();
            }
            for x in c.iter_mut().take(m) {
                *x = model.into_p(*x);
            }
            if model.in_p(c[m]) {
                c[m] = model.one();
            }
            for v in [&mut b, &mut c] {
                let top = v.len() - 1;
                if v[top] == model.zero() {
                    v[top] = model.one();
                }
            }
            LemmaCase { model, b, c, m, swap }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn proof_engine_lemma(case in lemma_case()) {
        let LemmaCase { model, b, c, m, swap } = case;
        let ideal = model.ideal();
        let hyp = ideal.predicates(64).unwrap();
        prop_assert!(hyp.proper && hyp.prime.affirmed() && hyp.subtractive.affirmed());

        let (g, h) = if swap { (&c, &b) } else { (&b, &c) };
        let TraceOutcome::Trace(report) = proof_trace(&model.poly(g), &model.poly(h), &ideal).unwrap()
        else {
            return Err(TestCaseError::fail("roles unassignable with b_0 outside P"));
        };
        // Roles: g plays b unless its constant term lies in P.
        let (eb, ec) = if model.in_p(g[0]) { (h, g) } else { (g, h) };
        prop_assert_eq!(report.swapped, model.in_p(g[0]));
        prop_assert_eq!(&report.b, &model.poly(eb));
        let expected_m = ec.iter().position(|&x| !model.in_p(x)).unwrap();
        prop_assert_eq!(report.m, expected_m);
        if eb == &b {
            prop_assert_eq!(report.m, m);
        }
        let product = model.convolve(eb, ec);
        prop_assert_eq!(&report.product, &model.poly(&product));
        prop_assert_eq!(&report.a_m, &model.element(product[expected_m]));
        prop_assert!(!model.in_p(product[expected_m]));
        prop_assert!(!report.a_m_in_ideal);
        prop_assert_eq!(report.absorbed_at, None);
        for t in &report.terms {
            let v = model.mul(eb[t.b_index], ec[t.c_index]);
            prop_assert_eq!(t.b_index + t.c_index, expected_m);
            prop_assert_eq!(&t.value, &model.element(v));
            prop_assert_eq!(t.in_ideal, model.in_p(v));
        }
    }
}

fn divides(p: u64, x: u64) -> bool {
    x.is_multiple_of(p)
}

fn consistency_case() -> impl Strategy<Value = (Model, Vec<u64>)> {
    (
        prop::sample::select(vec![2u64, 3, 5, 7]),
        any::<bool>(),
        prop::collection::vec(0u64..=30, 2..=5),
    )
        .prop_map(|(p, gcd, mut coeffs)| {
            let top = coeffs.len() - 1;
            if coeffs[top] == 0 {
                coeffs[top] = 1;
            }
            (if gcd { Model::Gcd(p) } else { Model::Nat(p) }, coeffs)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn corollary_agrees_with_theorem_form((model, coeffs) in consistency_case()) {
        let (Model::Nat(p) | Model::Gcd(p)) = model else { unreachable!() };
        let f = model.poly(&coeffs);
        let cor = check_corollary(&f, &Element::nat(p), 16).unwrap();
        let thm = check_eisenstein(&f, &model.ideal(), 16).unwrap();
        prop_assert_eq!(&cor.verdict, &thm.verdict);
        prop_assert_eq!(
            cor.route,
            if matches!(model, Model::Gcd(_)) { HypothesisRoute::SemiringFlags } else { HypothesisRoute::IdealCertificate }
        );

        // Divisibility phrasing, evaluated directly.
        let n = coeffs.len() - 1;
        let c1 = !divides(p, coeffs[n]);
        let c2 = coeffs[..n].iter().all(|&a| divides(p, a));
        let c3 = !divides(p * p, coeffs[0]);
        prop_assert_eq!(thm.condition_holds(1), c1);
        prop_assert_eq!(thm.condition_holds(2), c2);
        prop_assert_eq!(thm.condition_holds(3), c3);
        prop_assert_eq!(thm.verdict == Verdict::Satisfied, c1 && c2 && c3);
    }

    #[test]
    fn evidence_is_monotone((model, coeffs) in consistency_case()) {
        let f = model.poly(&coeffs);
        let report = check_eisenstein(&f, &model.ideal(), 16).unwrap();
        match &report.verdict {
            Verdict::Satisfied => prop_assert!((1..=3).all(|k| report.condition_holds(k))),
            Verdict::NotApplicable { condition, index, coefficient } => {
                prop_assert!((1..*condition).all(|k| report.condition_holds(k)));
                prop_assert!(!report.condition_holds(*condition));
                prop_assert_eq!(coefficient, &f.coeff(*index));
                match condition {
                    1 => prop_assert_eq!(*index, report.degree),
                    2 => {
                        prop_assert!(!report.lower_in_ideal[*index]);
                        prop_assert!(report.lower_in_ideal[..*index].iter().all(|&b| b));
                    }
                    _ => prop_assert_eq!(*index, 0),
                }
            }
            Verdict::HypothesisNotEstablished(_) => prop_assert!(false, "(p) is a subtractive prime"),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn satisfied_implies_no_factorization_over_nat(
        p in prop::sample::select(vec![2u64, 3, 5]),
        coeffs in prop::collection::vec(0u64..=12, 2..=4),
    ) {
        let model = Model::Nat(p);
        // Bias toward the criterion: scale the lower coefficients into P.
        let n = coeffs.len() - 1;
        let mut coeffs = coeffs;
        for a in coeffs[..n].iter_mut() {
            *a *= p;
        }
        if coeffs[n] == 0 {
            coeffs[n] = 1;
        }
        let f = model.poly(&coeffs);
        let report = check_eisenstein(&f, &model.ideal(), 16).unwrap();
        if report.verdict == Verdict::Satisfied {
            let out = search_factorizations(&f, 2, None).unwrap();
            prop_assert!(out.is_complete_none(), "{}: {:?}", f, out);
        }
    }
}

fn nat(text: &str) -> Polynomial {
    Polynomial::parse(text, &builtin_semiring("nat").unwrap()).unwrap()
}

#[test]
fn spec_examples() {
    let nat2 = Model::Nat(2).ideal();
    assert_eq!(check_eisenstein(&nat("x^2 + 2*x + 2"), &nat2, 64).unwrap().verdict, Verdict::Satisfied);
    assert_eq!(
        check_eisenstein(&nat("x^2 + 2*x + 4"), &nat2, 64).unwrap().verdict,
        Verdict::NotApplicable { condition: 3, index: 0, coefficient: Element::nat(4u32) }
    );
    let r = check_corollary(&nat("x^3 + 2*x^2 + 4*x + 2"), &Element::nat(2u32), 64).unwrap();
    assert_eq!(r.verdict, Verdict::Satisfied);
    assert_eq!(r.route, HypothesisRoute::IdealCertificate);

    let t = builtin_semiring("tropical-min").unwrap();
    let f = Polynomial::parse("0*x^2 + 1*x + 1", &t).unwrap();
    assert_eq!(check_eisenstein(&f, &Model::Trop.ideal(), 64).unwrap().verdict, Verdict::Satisfied);

    let g = builtin_semiring("gcd-nat").unwrap();
    let f = Polynomial::parse("3*x^2 + 2*x + 2", &g).unwrap();
    let r = check_corollary(&f, &Element::nat(2u32), 64).unwrap();
    assert_eq!(r.verdict, Verdict::Satisfied);
    assert_eq!(r.route, HypothesisRoute::SemiringFlags);
    let f = Polynomial::parse("3*x^2 + 2*x + 4", &g).unwrap();
    assert!(matches!(
        check_corollary(&f, &Element::nat(2u32), 64).unwrap().verdict,
        Verdict::NotApplicable { condition: 3, .. }
    ));

    let b = builtin_semiring("bool").unwrap();
    let zero = principal_ideal(&b, &b.zero()).unwrap();
    for text in ["x", "x^2", "x^3"] {
        let f = Polynomial::parse(text, &b).unwrap();
        assert!(matches!(
            check_eisenstein(&f, &zero, 0).unwrap().verdict,
            Verdict::NotApplicable { condition: 3, .. }
        ));
    }
    // Lower coefficients outside {0} fail condition 2 first; none is Satisfied.
    for text in ["x^2 + x", "x^3 + x^2", "x^3 + x^2 + x"] {
        let f = Polynomial::parse(text, &b).unwrap();
        assert!(matches!(
            check_eisenstein(&f, &zero, 0).unwrap().verdict,
            Verdict::NotApplicable { condition: 2, .. }
        ));
    }
}

#[test]
fn linear_polynomials_are_accepted() {
    let r = check_eisenstein(&nat("x + 2"), &Model::Nat(2).ideal(), 64).unwrap();
    assert_eq!(r.verdict, Verdict::Satisfied);
    assert!(search_factorizations(&nat("x + 2"), 2, None).unwrap().is_complete_none());
}

#[test]
fn criterion_is_not_necessary() {
    let f = nat("x^2 + 4");
    assert!(matches!(
        check_eisenstein(&f, &Model::Nat(2).ideal(), 64).unwrap().verdict,
        Verdict::NotApplicable { .. }
    ));
    assert!(search_factorizations(&f, 2, None).unwrap().is_complete_none());
}

#[test]
fn errors() {
    let ideal = Model::Nat(2).ideal();
    assert_eq!(check_eisenstein(&nat("5"), &ideal, 64), Err(Error::DegreeTooSmall));
    assert_eq!(check_eisenstein(&nat("0"), &ideal, 64), Err(Error::DegreeTooSmall));
    assert!(matches!(
        check_eisenstein(&nat("x + 2"), &Model::Gcd(2).ideal(), 64),
        Err(Error::SemiringMismatch(_))
    ));
    for p in [0u32, 1, 4, 6] {
        assert!(matches!(
            check_corollary(&nat("x + 2"), &Element::nat(p), 64),
            Err(Error::NotPrimeElement(..))
        ));
    }
}

#[test]
fn non_subtractive_prime_is_refused() {
    let n3 = Arc::new(Semiring::finite("N3", FiniteSemiring::saturating(2)).unwrap());
    let p = eisenstein_core::ideal_closure(&n3, &[Element::Index(2)]).unwrap();
    let f = Polynomial::parse("x^2 + 2*x + 1", &n3).unwrap();
    let r = check_eisenstein(&f, &p, 0).unwrap();
    assert!(matches!(r.verdict, Verdict::HypothesisNotEstablished(_)));
}

#[test]
fn trace_is_symmetric_after_role_normalization() {
    let ideal = Model::Nat(2).ideal();
    let (g, h) = (nat("x + 1"), nat("x + 2"));
    let TraceOutcome::Trace(a) = proof_trace(&g, &h, &ideal).unwrap() else { panic!() };
    let TraceOutcome::Trace(mut b) = proof_trace(&h, &g, &ideal).unwrap() else { panic!() };
    assert!(!a.swapped && b.swapped);
    b.swapped = false;
    assert_eq!(a, b);
    assert_eq!(a.m, 1);
    assert_eq!(a.a_m, Element::nat(3u32));
    assert!(!a.terms[0].in_ideal);
    assert!(!a.a_m_in_ideal);
}

#[test]
fn trace_reports_unassignable_roles() {
    let ideal = Model::Nat(2).ideal();
    let out = proof_trace(&nat("x + 2"), &nat("x + 4"), &ideal).unwrap();
    assert_eq!(
        out,
        TraceOutcome::RolesUnassignable { g_constant: Element::nat(2u32), h_constant: Element::nat(4u32) }
    );
}
