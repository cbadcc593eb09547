//! Semiring descriptors, elements and element-level queries.
//!
//! A semiring here is commutative in both operations, has distinct
//! identities 0 and 1, and 0 absorbs under multiplication. Four infinite or
//! built-in carriers are provided alongside arbitrary finite tables:
//!
//! | name           | carrier   | +     | ·   | 0 | 1 |
//! |----------------|-----------|-------|-----|---|---|
//! | `nat`          | ℕ         | +     | ×   | 0 | 1 |
//! | `bool`         | {0, 1}    | OR    | AND | 0 | 1 |
//! | `tropical-min` | ℕ ∪ {∞}   | min   | +   | ∞ | 0 |
//! | `gcd-nat`      | ℕ         | gcd   | ×   | 0 | 1 |
//!
//! `gcd-nat` is the semiring of ideals of ℤ, with `n` standing for `nℤ`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::finite::{FiniteSemiring, MAX_TABLE_ORDER};
use crate::natural;

/// Natural number extended with a top element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtNat {
    Fin(BigUint),
    Inf,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    /// Index into a finite table.
    Index(usize),
    Nat(BigUint),
    Ext(ExtNat),
}

impl Element {
    pub fn nat(v: impl Into<BigUint>) -> Self {
        Element::Nat(v.into())
    }

    pub fn ext(v: impl Into<BigUint>) -> Self {
        Element::Ext(ExtNat::Fin(v.into()))
    }

    pub fn inf() -> Self {
        Element::Ext(ExtNat::Inf)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CarrierKind {
    FiniteTable,
    Naturals,
    Booleans,
    TropicalMin,
    GcdNaturals,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct CapabilityFlags {
    pub is_finite: bool,
    pub is_semidomain: bool,
    /// No zero divisors.
    pub is_entire: bool,
    pub decidable_divisibility: bool,
    pub all_ideals_subtractive: bool,
    pub is_factorial: bool,
    /// Every prime ideal is subtractive.
    pub is_weak_gaussian: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpKind {
    Add,
    Mul,
}

/// Outcome of a decision that may only be checkable up to a bound on
/// infinite carriers. `Fails` always carries a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check<W> {
    Holds,
    VerifiedUpTo(u64),
    Fails(W),
}

impl<W> Check<W> {
    /// True for both exact and bounded positive verdicts.
    pub fn affirmed(&self) -> bool {
        !matches!(self, Check::Fails(_))
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Check::Fails(w) => Some(w),
            _ => None,
        }
    }

    /// Weakens an exact `Holds` to `VerifiedUpTo(bound)`.
    pub fn up_to(self, bound: u64) -> Self {
        match self {
            Check::Holds => Check::VerifiedUpTo(bound),
            other => other,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semiring {
    name: String,
    kind: CarrierKind,
    table: Option<FiniteSemiring>,
    flags: CapabilityFlags,
}

pub const BUILTIN_NAMES: [&str; 4] = ["nat", "bool", "tropical-min", "gcd-nat"];

/// Looks up a built-in semiring by name.
pub fn builtin_semiring(name: &str) -> Result<Arc<Semiring>> {
    Semiring::builtin(name).map(Arc::new)
}

impl Semiring {
    /// Built-in descriptors. Flags for the infinite carriers are fixed; see
    /// `docs/builtin-flags.md` for the argument behind each one.
    pub fn builtin(name: &str) -> Result<Self> {
        let infinite = |kind, flags| Semiring {
            name: name.to_string(),
            kind,
            table: None,
            flags,
        };
        match name {
            "nat" => Ok(infinite(
                CarrierKind::Naturals,
                CapabilityFlags {
                    is_finite: false,
                    is_semidomain: true,
                    is_entire: true,
                    decidable_divisibility: true,
                    // ℕ∖{1} is a prime ideal, yet 2 + 1 ∈ it and 2 ∈ it while 1 ∉ it.
                    all_ideals_subtractive: false,
                    is_factorial: true,
                    is_weak_gaussian: false,
                },
            )),
            "tropical-min" => Ok(infinite(
                CarrierKind::TropicalMin,
                CapabilityFlags {
                    is_finite: false,
                    is_semidomain: true,
                    is_entire: true,
                    decidable_divisibility: true,
                    all_ideals_subtractive: true,
                    is_factorial: true,
                    is_weak_gaussian: true,
                },
            )),
            "gcd-nat" => Ok(infinite(
                CarrierKind::GcdNaturals,
                CapabilityFlags {
                    is_finite: false,
                    is_semidomain: true,
                    is_entire: true,
                    decidable_divisibility: true,
                    all_ideals_subtractive: true,
                    is_factorial: true,
                    is_weak_gaussian: true,
                },
            )),
            "bool" => {
                let mut s = Semiring::finite_unchecked("bool", FiniteSemiring::boolean());
                s.kind = CarrierKind::Booleans;
                Ok(s)
            }
            other => Err(Error::UnknownSemiring(other.to_string())),
        }
    }

    /// Wraps a table semiring after verifying every axiom. All flags are
    /// computed from the tables.
    pub fn finite(name: impl Into<String>, table: FiniteSemiring) -> Result<Self> {
        if table.order() > MAX_TABLE_ORDER {
            return Err(Error::OrderTooLarge {
                order: table.order(),
                max: MAX_TABLE_ORDER,
            });
        }
        let report = table.check_axioms();
        if let Some(fail) = report.failures().next() {
            return Err(Error::AxiomsFailed(fail.axiom.name().to_string()));
        }
        Ok(Self::finite_unchecked(&name.into(), table))
    }

    fn finite_unchecked(name: &str, table: FiniteSemiring) -> Self {
        let mut s = Semiring {
            name: name.to_string(),
            kind: CarrierKind::FiniteTable,
            table: Some(table),
            flags: CapabilityFlags::default(),
        };
        s.flags = s.compute_finite_flags();
        s
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> CarrierKind {
        self.kind
    }

    pub fn flags(&self) -> CapabilityFlags {
        self.flags
    }

    pub fn table(&self) -> Option<&FiniteSemiring> {
        self.table.as_ref()
    }

    pub fn is_finite(&self) -> bool {
        self.table.is_some()
    }

    pub fn zero(&self) -> Element {
        match self.kind {
            CarrierKind::FiniteTable | CarrierKind::Booleans => Element::Index(0),
            CarrierKind::Naturals | CarrierKind::GcdNaturals => Element::Nat(BigUint::zero()),
            CarrierKind::TropicalMin => Element::Ext(ExtNat::Inf),
        }
    }

    pub fn one(&self) -> Element {
        match self.kind {
            CarrierKind::FiniteTable | CarrierKind::Booleans => Element::Index(1),
            CarrierKind::Naturals | CarrierKind::GcdNaturals => Element::Nat(BigUint::one()),
            CarrierKind::TropicalMin => Element::Ext(ExtNat::Fin(BigUint::zero())),
        }
    }

    pub fn is_zero(&self, a: &Element) -> bool {
        *a == self.zero()
    }

    /// Every element, for finite carriers.
    pub fn elements(&self) -> Option<Vec<Element>> {
        self.table
            .as_ref()
            .map(|t| (0..t.order()).map(Element::Index).collect())
    }

    pub fn contains(&self, a: &Element) -> bool {
        match (self.kind, a) {
            (CarrierKind::FiniteTable | CarrierKind::Booleans, Element::Index(i)) => {
                *i < self.table.as_ref().map_or(0, |t| t.order())
            }
            (CarrierKind::Naturals | CarrierKind::GcdNaturals, Element::Nat(_)) => true,
            (CarrierKind::TropicalMin, Element::Ext(_)) => true,
            _ => false,
        }
    }

    pub fn check(&self, a: &Element) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::SemiringMismatch(format!(
                "{a:?} is not an element of `{}`",
                self.name
            )))
        }
    }

    pub fn binary_op(&self, kind: OpKind, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(match kind {
            OpKind::Add => self.add(a, b),
            OpKind::Mul => self.mul(a, b),
        })
    }

    /// Semiring addition. Both operands must belong to this semiring.
    pub fn add(&self, a: &Element, b: &Element) -> Element {
        match (self.kind, a, b) {
            (_, Element::Index(x), Element::Index(y)) => {
                Element::Index(self.table.as_ref().expect("finite carrier").add(*x, *y))
            }
            (CarrierKind::Naturals, Element::Nat(x), Element::Nat(y)) => Element::Nat(x + y),
            (CarrierKind::GcdNaturals, Element::Nat(x), Element::Nat(y)) => Element::Nat(x.gcd(y)),
            (CarrierKind::TropicalMin, Element::Ext(x), Element::Ext(y)) => {
                Element::Ext(x.min(y).clone())
            }
            _ => panic!("add: {a:?}, {b:?} do not belong to `{}`", self.name),
        }
    }

    /// Semiring multiplication. Both operands must belong to this semiring.
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        match (self.kind, a, b) {
            (_, Element::Index(x), Element::Index(y)) => {
                Element::Index(self.table.as_ref().expect("finite carrier").mul(*x, *y))
            }
            (CarrierKind::Naturals | CarrierKind::GcdNaturals, Element::Nat(x), Element::Nat(y)) => {
                Element::Nat(x * y)
            }
            (CarrierKind::TropicalMin, Element::Ext(x), Element::Ext(y)) => match (x, y) {
                (ExtNat::Fin(x), ExtNat::Fin(y)) => Element::Ext(ExtNat::Fin(x + y)),
                _ => Element::Ext(ExtNat::Inf),
            },
            _ => panic!("mul: {a:?}, {b:?} do not belong to `{}`", self.name),
        }
    }

    /// `a | b`: some `s` has `b = s·a`.
    pub fn divides(&self, a: &Element, b: &Element) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        if !(self.flags.decidable_divisibility || self.flags.is_finite) {
            return Err(Error::UndecidableDivisibility(self.name.clone()));
        }
        Ok(self.divides_unchecked(a, b))
    }

    pub(crate) fn divides_unchecked(&self, a: &Element, b: &Element) -> bool {
        match (self.kind, a, b) {
            (_, Element::Index(x), Element::Index(y)) => {
                let t = self.table.as_ref().expect("finite carrier");
                (0..t.order()).any(|s| t.mul(s, *x) == *y)
            }
            (_, Element::Nat(x), Element::Nat(y)) => {
                if x.is_zero() {
                    y.is_zero()
                } else {
                    (y % x).is_zero()
                }
            }
            (_, Element::Ext(x), Element::Ext(y)) => match (x, y) {
                (_, ExtNat::Inf) => true,
                (ExtNat::Inf, ExtNat::Fin(_)) => false,
                (ExtNat::Fin(x), ExtNat::Fin(y)) => y >= x,
            },
            _ => panic!("divides: mixed element kinds"),
        }
    }

    pub fn is_unit(&self, a: &Element) -> bool {
        self.divides_unchecked(a, &self.one())
    }

    /// Renders an element as its literal (table name, decimal, or `inf`).
    pub fn format_element(&self, a: &Element) -> String {
        match a {
            Element::Index(i) => match &self.table {
                Some(t) if *i < t.order() => t.name(*i).to_string(),
                _ => format!("#{i}"),
            },
            Element::Nat(n) => n.to_string(),
            Element::Ext(ExtNat::Fin(n)) => n.to_string(),
            Element::Ext(ExtNat::Inf) => "inf".to_string(),
        }
    }

    /// Parses a coefficient literal valid for this carrier.
    pub fn parse_element(&self, literal: &str) -> Result<Element> {
        let bad = || Error::Literal {
            literal: literal.to_string(),
            semiring: self.name.clone(),
        };
        let decimal = || {
            (!literal.is_empty() && literal.bytes().all(|b| b.is_ascii_digit()))
                .then(|| literal.parse::<BigUint>().ok())
                .flatten()
        };
        match self.kind {
            CarrierKind::FiniteTable | CarrierKind::Booleans => self
                .table
                .as_ref()
                .and_then(|t| t.index_of(literal))
                .map(Element::Index)
                .ok_or_else(bad),
            CarrierKind::Naturals | CarrierKind::GcdNaturals => {
                decimal().map(Element::Nat).ok_or_else(bad)
            }
            CarrierKind::TropicalMin if literal == "inf" => Ok(Element::inf()),
            CarrierKind::TropicalMin => decimal().map(Element::ext).ok_or_else(bad),
        }
    }

    /// Units, irreducibility and primality of `a`.
    ///
    /// Finite carriers are decided exactly. On `nat` and `gcd-nat` both
    /// properties reduce to integer primality and are exact. On
    /// `tropical-min`, failures carry witnesses and successes are
    /// [`Check::VerifiedUpTo`] the given bound.
    pub fn classify_element(&self, a: &Element, bound: u64) -> Result<ElementClass> {
        self.check(a)?;
        let is_zero = self.is_zero(a);
        let is_unit = self.is_unit(a);
        if !self.is_finite() && bound == 0 {
            return Err(Error::BoundRequired(self.name.clone()));
        }

        let (irreducible, prime) = match self.kind {
            CarrierKind::FiniteTable | CarrierKind::Booleans => {
                let elems = self.elements().expect("finite");
                (
                    self.irreducible_scan(a, is_zero, is_unit, &elems),
                    self.prime_scan(a, is_unit, &elems),
                )
            }
            CarrierKind::Naturals | CarrierKind::GcdNaturals => {
                let Element::Nat(n) = a else { unreachable!() };
                let irreducible = if is_zero {
                    Check::Fails(IrreducibleFailure::Zero)
                } else if is_unit {
                    Check::Fails(IrreducibleFailure::Unit)
                } else if let Some(d) = natural::smallest_factor(n) {
                    let e = n / &d;
                    Check::Fails(IrreducibleFailure::Factors(Element::Nat(d), Element::Nat(e)))
                } else {
                    Check::Holds
                };
                // (0) is prime because both carriers are entire.
                let prime = if is_unit {
                    Check::Fails(PrimeFailure::Improper)
                } else if is_zero || natural::is_prime(n) {
                    Check::Holds
                } else {
                    let d = natural::smallest_factor(n).expect("composite");
                    let e = n / &d;
                    Check::Fails(PrimeFailure::Pair(Element::Nat(d), Element::Nat(e)))
                };
                (irreducible, prime)
            }
            CarrierKind::TropicalMin => {
                let elems = tropical_candidates(bound);
                (
                    self.irreducible_scan(a, is_zero, is_unit, &elems),
                    self.prime_scan(a, is_unit, &elems),
                )
            }
        };
        let (irreducible, prime) = if self.kind == CarrierKind::TropicalMin {
            (irreducible.up_to(bound), prime.up_to(bound))
        } else {
            (irreducible, prime)
        };
        Ok(ElementClass {
            is_zero,
            is_unit,
            irreducible,
            prime,
        })
    }

    fn irreducible_scan(
        &self,
        a: &Element,
        is_zero: bool,
        is_unit: bool,
        candidates: &[Element],
    ) -> Check<IrreducibleFailure> {
        if is_zero {
            return Check::Fails(IrreducibleFailure::Zero);
        }
        if is_unit {
            return Check::Fails(IrreducibleFailure::Unit);
        }
        // Any factor of `a` divides it.
        let nonunits: Vec<&Element> = candidates
            .iter()
            .filter(|s| !self.is_unit(s) && self.divides_unchecked(s, a))
            .collect();
        for s1 in &nonunits {
            for s2 in &nonunits {
                if self.mul(s1, s2) == *a {
                    return Check::Fails(IrreducibleFailure::Factors((*s1).clone(), (*s2).clone()));
                }
            }
        }
        Check::Holds
    }

    fn prime_scan(
        &self,
        p: &Element,
        is_unit: bool,
        candidates: &[Element],
    ) -> Check<PrimeFailure> {
        if is_unit {
            return Check::Fails(PrimeFailure::Improper);
        }
        let outside: Vec<&Element> = candidates
            .iter()
            .filter(|x| !self.divides_unchecked(p, x))
            .collect();
        for x in &outside {
            for y in &outside {
                if self.divides_unchecked(p, &self.mul(x, y)) {
                    return Check::Fails(PrimeFailure::Pair((*x).clone(), (*y).clone()));
                }
            }
        }
        Check::Holds
    }

    /// Multiplicative cancellation: `ab = ac` with `a ≠ 0` forces `b = c`.
    ///
    /// Finite carriers are scanned exhaustively. Built-ins report their
    /// declared flag after re-checking every triple with entries `<= bound`
    /// (plus ∞ on `tropical-min`).
    pub fn semidomain_check(&self, bound: u64) -> Result<Check<[Element; 3]>> {
        let candidates = match self.kind {
            CarrierKind::FiniteTable | CarrierKind::Booleans => self.elements().expect("finite"),
            _ if bound == 0 => return Err(Error::BoundRequired(self.name.clone())),
            CarrierKind::Naturals | CarrierKind::GcdNaturals => {
                (0..=bound).map(Element::nat).collect()
            }
            CarrierKind::TropicalMin => tropical_candidates(bound),
        };
        for a in candidates.iter().filter(|a| !self.is_zero(a)) {
            for b in &candidates {
                for c in &candidates {
                    if b != c && self.mul(a, b) == self.mul(a, c) {
                        return Ok(Check::Fails([a.clone(), b.clone(), c.clone()]));
                    }
                }
            }
        }
        if self.is_finite() {
            return Ok(Check::Holds);
        }
        debug_assert!(self.flags.is_semidomain);
        Ok(Check::VerifiedUpTo(bound))
    }

    fn compute_finite_flags(&self) -> CapabilityFlags {
        let t = self.table.as_ref().expect("finite");
        let n = t.order();
        let semidomain = (1..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| b == c || t.mul(a, b) != t.mul(a, c)))
        });
        let entire = (1..n).all(|a| (1..n).all(|b| t.mul(a, b) != 0));

        let ideals = t.ideals_unchecked();
        let subtractive = |ideal: &[usize]| {
            let member = |x: usize| ideal.contains(&x);
            (0..n).all(|a| (0..n).all(|b| !(member(t.add(a, b)) && member(a)) || member(b)))
        };
        let prime = |ideal: &[usize]| {
            let member = |x: usize| ideal.contains(&x);
            ideal.len() < n
                && (0..n).all(|a| (0..n).all(|b| !member(t.mul(a, b)) || member(a) || member(b)))
        };
        let all_subtractive = ideals.iter().all(|i| subtractive(i));
        let weak_gaussian = ideals.iter().filter(|i| prime(i)).all(|i| subtractive(i));

        let unit = |a: usize| (0..n).any(|s| t.mul(s, a) == 1);
        let nonunits: Vec<usize> = (1..n).filter(|&a| !unit(a)).collect();
        let irreducibles: Vec<usize> = nonunits
            .iter()
            .copied()
            .filter(|&a| {
                !nonunits
                    .iter()
                    .any(|&x| nonunits.iter().any(|&y| t.mul(x, y) == a))
            })
            .collect();
        let divides = |p: usize, b: usize| (0..n).any(|s| t.mul(s, p) == b);
        let prime_element = |p: usize| {
            (0..n).all(|a| (0..n).all(|b| !divides(p, t.mul(a, b)) || divides(p, a) || divides(p, b)))
        };
        // Products of one or more irreducibles, by fixpoint.
        let mut products: Vec<bool> = vec![false; n];
        for &i in &irreducibles {
            products[i] = true;
        }
        loop {
            let mut changed = false;
            for a in 0..n {
                if !products[a] {
                    continue;
                }
                for &i in &irreducibles {
                    let p = t.mul(a, i);
                    if !products[p] {
                        products[p] = true;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let factorial = semidomain
            && irreducibles.iter().all(|&i| prime_element(i))
            && nonunits.iter().all(|&a| products[a]);

        CapabilityFlags {
            is_finite: true,
            is_semidomain: semidomain,
            is_entire: entire,
            decidable_divisibility: true,
            all_ideals_subtractive: all_subtractive,
            is_factorial: factorial,
            is_weak_gaussian: weak_gaussian,
        }
    }
}

/// `{0, ..., bound} ∪ {∞}` for bounded scans over `tropical-min`.
pub(crate) fn tropical_candidates(bound: u64) -> Vec<Element> {
    (0..=bound)
        .map(Element::ext)
        .chain(std::iter::once(Element::inf()))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrreducibleFailure {
    Zero,
    Unit,
    /// `a = s1·s2` with neither factor a unit.
    Factors(Element, Element),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeFailure {
    /// The principal ideal is the whole semiring.
    Improper,
    /// `p | xy` while `p ∤ x` and `p ∤ y`.
    Pair(Element, Element),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementClass {
    pub is_zero: bool,
    pub is_unit: bool,
    pub irreducible: Check<IrreducibleFailure>,
    pub prime: Check<PrimeFailure>,
}

impl fmt::Display for Semiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}
