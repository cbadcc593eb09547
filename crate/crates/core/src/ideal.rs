//! Membership-decidable ideals: closures of generator sets over finite
//! carriers, and principal ideals decided by divisibility.

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::natural;
use crate::semiring::{CarrierKind, Check, Element, ExtNat, PrimeFailure, Semiring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealRepr {
    /// Sorted member indices of a finite carrier.
    FiniteSet {
        members: Vec<usize>,
        generators: Vec<usize>,
    },
    /// `(p) = { s·p : s ∈ S }`.
    Principal { generator: Element },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    semiring: Arc<Semiring>,
    repr: IdealRepr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPredicateReport {
    pub proper: bool,
    pub prime: Check<PrimeFailure>,
    /// Failure witness `(a, b)`: `a + b ∈ I` and `a ∈ I` but `b ∉ I`.
    pub subtractive: Check<(Element, Element)>,
    /// Scan bound used for infinite carriers.
    pub bound: Option<u64>,
    pub notes: Vec<String>,
}

impl IdealPredicateReport {
    /// Proper, prime and subtractive (exactly or up to the bound).
    pub fn is_subtractive_prime(&self) -> bool {
        self.proper && self.prime.affirmed() && self.subtractive.affirmed()
    }
}

/// Smallest ideal containing `generators`, by fixpoint iteration.
pub fn ideal_closure(semiring: &Arc<Semiring>, generators: &[Element]) -> Result<Ideal> {
    let t = semiring
        .table()
        .ok_or_else(|| Error::GeneratorsNeedFiniteCarrier(semiring.name().to_string()))?;
    let mut gens = Vec::with_capacity(generators.len());
    for g in generators {
        semiring.check(g)?;
        let Element::Index(i) = g else { unreachable!() };
        gens.push(*i);
    }
    gens.sort_unstable();
    gens.dedup();
    let n = t.order();
    let mut member = vec![false; n];
    member[t.zero_index()] = true;
    for &g in &gens {
        member[g] = true;
    }
    loop {
        let current: Vec<usize> = (0..n).filter(|&i| member[i]).collect();
        let mut changed = false;
        for &a in &current {
            for &b in &current {
                let sum = t.add(a, b);
                if !member[sum] {
                    member[sum] = true;
                    changed = true;
                }
            }
            for s in 0..n {
                let prod = t.mul(s, a);
                if !member[prod] {
                    member[prod] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    Ok(Ideal {
        semiring: semiring.clone(),
        repr: IdealRepr::FiniteSet {
            members: (0..n).filter(|&i| member[i]).collect(),
            generators: gens,
        },
    })
}

/// `(p)`. Over finite carriers this is built as the closure of `{p}`.
pub fn principal_ideal(semiring: &Arc<Semiring>, p: &Element) -> Result<Ideal> {
    semiring.check(p)?;
    if semiring.is_finite() {
        return ideal_closure(semiring, std::slice::from_ref(p));
    }
    if !semiring.flags().decidable_divisibility {
        return Err(Error::UndecidableDivisibility(semiring.name().to_string()));
    }
    Ok(Ideal {
        semiring: semiring.clone(),
        repr: IdealRepr::Principal { generator: p.clone() },
    })
}

impl Ideal {
    pub fn semiring(&self) -> &Arc<Semiring> {
        &self.semiring
    }

    pub fn repr(&self) -> &IdealRepr {
        &self.repr
    }

    /// Member indices, for ideals over finite carriers.
    pub fn members(&self) -> Option<&[usize]> {
        match &self.repr {
            IdealRepr::FiniteSet { members, .. } => Some(members),
            IdealRepr::Principal { .. } => None,
        }
    }

    pub fn contains(&self, a: &Element) -> Result<bool> {
        self.semiring.check(a)?;
        Ok(self.contains_unchecked(a))
    }

    pub(crate) fn contains_unchecked(&self, a: &Element) -> bool {
        match (&self.repr, a) {
            (IdealRepr::FiniteSet { members, .. }, Element::Index(i)) => {
                members.binary_search(i).is_ok()
            }
            (IdealRepr::Principal { generator }, _) => self.semiring.divides_unchecked(generator, a),
            _ => false,
        }
    }

    /// The ideal generated by all products of pairs of members. For `(p)`
    /// on the infinite carriers this is `(p·p)`.
    pub fn square(&self) -> Result<Ideal> {
        match &self.repr {
            IdealRepr::FiniteSet { members, .. } => {
                let t = self.semiring.table().expect("finite");
                let mut products: Vec<Element> = members
                    .iter()
                    .flat_map(|&a| members.iter().map(move |&b| t.mul(a, b)))
                    .map(Element::Index)
                    .collect();
                products.sort();
                products.dedup();
                ideal_closure(&self.semiring, &products)
            }
            IdealRepr::Principal { generator } => Ok(Ideal {
                semiring: self.semiring.clone(),
                repr: IdealRepr::Principal {
                    generator: self.semiring.mul(generator, generator),
                },
            }),
        }
    }

    pub fn is_subset_of(&self, other: &Ideal) -> Option<bool> {
        let (a, b) = (self.members()?, other.members()?);
        Some(a.iter().all(|x| b.contains(x)))
    }

    /// Properness, primality and subtractivity.
    ///
    /// Ideals over finite carriers are decided exhaustively. For `(p)` over
    /// `nat` and `gcd-nat`, primality is integer primality (or `p = 0`) and
    /// subtractivity is scanned up to `bound` and then holds exactly, because
    /// `p | a + b` and `p | a` give `p | b` (for `gcd-nat`, `p | gcd(a, b)`
    /// already forces `p | b`). On `tropical-min` both are scans up to
    /// `bound` and are reported as such.
    pub fn predicates(&self, bound: u64) -> Result<IdealPredicateReport> {
        match &self.repr {
            IdealRepr::FiniteSet { members, .. } => Ok(self.finite_predicates(members)),
            IdealRepr::Principal { generator } => {
                if bound == 0 {
                    return Err(Error::BoundRequired(self.semiring.name().to_string()));
                }
                match (self.semiring.kind(), generator) {
                    (CarrierKind::Naturals | CarrierKind::GcdNaturals, Element::Nat(p)) => {
                        Ok(self.integer_predicates(p, bound))
                    }
                    (CarrierKind::TropicalMin, Element::Ext(p)) => {
                        Ok(self.tropical_predicates(p, bound))
                    }
                    _ => unreachable!("principal ideals exist only over infinite built-ins"),
                }
            }
        }
    }

    fn finite_predicates(&self, members: &[usize]) -> IdealPredicateReport {
        let t = self.semiring.table().expect("finite");
        let n = t.order();
        let inside = |x: usize| members.binary_search(&x).is_ok();
        let proper = members.len() < n;
        let prime = if !proper {
            Check::Fails(PrimeFailure::Improper)
        } else {
            pairs(n)
                .find(|&(a, b)| inside(t.mul(a, b)) && !inside(a) && !inside(b))
                .map_or(Check::Holds, |(a, b)| {
                    Check::Fails(PrimeFailure::Pair(Element::Index(a), Element::Index(b)))
                })
        };
        let subtractive = pairs(n)
            .find(|&(a, b)| inside(t.add(a, b)) && inside(a) && !inside(b))
            .map_or(Check::Holds, |(a, b)| {
                Check::Fails((Element::Index(a), Element::Index(b)))
            });
        IdealPredicateReport {
            proper,
            prime,
            subtractive,
            bound: None,
            notes: Vec::new(),
        }
    }

    fn integer_predicates(&self, p: &num_bigint::BigUint, bound: u64) -> IdealPredicateReport {
        let gcd_carrier = self.semiring.kind() == CarrierKind::GcdNaturals;
        let proper = p != &num_bigint::BigUint::from(1u32);
        let prime = if !proper {
            Check::Fails(PrimeFailure::Improper)
        } else if p.is_zero() || natural::is_prime(p) {
            Check::Holds
        } else {
            let d = natural::smallest_factor(p).expect("composite");
            let e = p / &d;
            Check::Fails(PrimeFailure::Pair(Element::Nat(d), Element::Nat(e)))
        };

        let small_p = p.to_u128();
        let inside = |x: u128| match small_p {
            Some(0) => x == 0,
            Some(p) => x.is_multiple_of(p),
            None => x == 0,
        };
        let mut subtractive = Check::Holds;
        'scan: for a in (0..=bound as u128).filter(|&a| inside(a)) {
            for b in 0..=bound as u128 {
                let sum = if gcd_carrier { a.gcd(&b) } else { a + b };
                if inside(sum) && !inside(b) {
                    subtractive = Check::Fails((Element::nat(a), Element::nat(b)));
                    break 'scan;
                }
            }
        }
        let mut notes = vec![format!(
            "subtractivity scanned for all a, b <= {bound}"
        )];
        if subtractive == Check::Holds {
            notes.push(if gcd_carrier {
                "subtractive exactly: p | gcd(a, b) implies p | b".to_string()
            } else {
                "subtractive exactly: p | a + b and p | a imply p | (a + b) - a = b".to_string()
            });
        }
        if prime == Check::Holds {
            notes.push("prime exactly: generator is 0 or a prime integer".to_string());
        }
        IdealPredicateReport {
            proper,
            prime,
            subtractive,
            bound: Some(bound),
            notes,
        }
    }

    fn tropical_predicates(&self, p: &ExtNat, bound: u64) -> IdealPredicateReport {
        // Candidates {0..=bound} ∪ {∞} as Option<u128>, None being ∞.
        let threshold: Option<u128> = match p {
            ExtNat::Inf => None,
            ExtNat::Fin(v) => Some(v.to_u128().unwrap_or(u128::MAX)),
        };
        let inside = |x: Option<u128>| match (x, threshold) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(x), Some(t)) => x >= t,
        };
        let cands: Vec<Option<u128>> = (0..=bound as u128).map(Some).chain([None]).collect();
        let elem = |x: Option<u128>| x.map_or(Element::inf(), Element::ext);

        let proper = threshold != Some(0);
        let mut prime = if proper { Check::Holds } else { Check::Fails(PrimeFailure::Improper) };
        if proper {
            'scan: for &x in cands.iter().filter(|&&x| !inside(x)) {
                for &y in cands.iter().filter(|&&y| !inside(y)) {
                    let product = x.zip(y).map(|(x, y)| x + y);
                    if inside(product) {
                        prime = Check::Fails(PrimeFailure::Pair(elem(x), elem(y)));
                        break 'scan;
                    }
                }
            }
        }
        let mut subtractive = Check::Holds;
        'scan: for &a in cands.iter().filter(|&&a| inside(a)) {
            for &b in cands.iter().filter(|&&b| !inside(b)) {
                let sum = match (a, b) {
                    (None, y) => y,
                    (x, None) => x,
                    (Some(x), Some(y)) => Some(x.min(y)),
                };
                if inside(sum) {
                    subtractive = Check::Fails((elem(a), elem(b)));
                    break 'scan;
                }
            }
        }
        IdealPredicateReport {
            proper,
            prime: prime.up_to(bound),
            subtractive: subtractive.up_to(bound),
            bound: Some(bound),
            notes: vec![
                format!("predicates scanned over {{0..{bound}}} and inf"),
                "(p) is an up-set of the order, so min(a, b) >= p forces b >= p".to_string(),
            ],
        }
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            IdealRepr::FiniteSet { members, .. } => {
                let t = self.semiring.table().expect("finite");
                let names: Vec<&str> = members.iter().map(|&i| t.name(i)).collect();
                write!(f, "{{{}}}", names.join(", "))
            }
            IdealRepr::Principal { generator } => {
                write!(f, "({})", self.semiring.format_element(generator))
            }
        }
    }
}
