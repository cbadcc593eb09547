//! Polynomials over commutative semirings and Eisenstein's irreducibility
//! criterion for them.
//!
//! The criterion: let `P` be a proper, prime, subtractive ideal of a
//! semiring `S` and `f = a_n x^n + ... + a_0` with `a_n ∉ P`, `a_i ∈ P` for
//! `i < n` and `a_0 ∉ P²`. Then `f` is not a product of two non-constant
//! polynomials in `S[x]`.
//!
//! [`check_eisenstein`] decides the conditions, [`proof_trace`] replays the
//! contradiction argument on a concrete product, and the [`oracle`] module
//! certifies verdicts by brute-force factorization search.
//!
//! ```
//! use eisenstein_core::{builtin_semiring, check_corollary, Element, Polynomial, Verdict};
//!
//! let nat = builtin_semiring("nat").unwrap();
//! let f = Polynomial::parse("x^2 + 2*x + 2", &nat).unwrap();
//! let report = check_corollary(&f, &Element::nat(2u32), 4096).unwrap();
//! assert_eq!(report.verdict, Verdict::Satisfied);
//! ```

mod error;
pub mod natural;

pub mod eisenstein;
pub mod finite;
pub mod ideal;
pub mod oracle;
pub mod poly;
pub mod semiring;

pub use eisenstein::{
    check_corollary, check_eisenstein, check_eisenstein_with, proof_trace, EisensteinReport, HypothesisFailure,
    HypothesisRoute, TraceOutcome, TraceReport, TraceTerm, Verdict,
};
pub use error::{Error, Result};
pub use finite::{
    enumerate_semirings, Axiom, AxiomCheck, AxiomReport, Enumeration, EnumerationBudget,
    FiniteSemiring, TableKind,
};
pub use ideal::{ideal_closure, principal_ideal, Ideal, IdealPredicateReport, IdealRepr};
pub use oracle::{
    hunt_subtractivity, search_factorizations, search_factorizations_with, verify_theorem,
    CoefficientBound, FactorizationOutcome, Finding, HuntReport, SearchConfig, TheoremStats,
    Violation,
};
pub use poly::{PolyOp, Polynomial};
pub use semiring::{
    builtin_semiring, CapabilityFlags, CarrierKind, Check, Element, ElementClass, ExtNat,
    IrreducibleFailure, OpKind, PrimeFailure, Semiring, BUILTIN_NAMES,
};
