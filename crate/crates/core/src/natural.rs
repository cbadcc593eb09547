//! Integer helpers shared by the `nat` and `gcd-nat` carriers.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Smallest nontrivial divisor of `n`, or `None` when `n` is 0, 1 or prime.
pub fn smallest_factor(n: &BigUint) -> Option<BigUint> {
    if let Some(small) = n.to_u64() {
        return smallest_factor_u64(small).map(BigUint::from);
    }
    let two = BigUint::from(2u32);
    if n.is_even() {
        return Some(two);
    }
    let mut d = BigUint::from(3u32);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return Some(d);
        }
        d += &two;
    }
    None
}

fn smallest_factor_u64(n: u64) -> Option<u64> {
    if n < 4 {
        return None;
    }
    if n.is_multiple_of(2) {
        return Some(2);
    }
    let mut d = 3u64;
    while (d as u128) * (d as u128) <= n as u128 {
        if n.is_multiple_of(d) {
            return Some(d);
        }
        d += 2;
    }
    None
}

/// Classical primality: `n >= 2` with no nontrivial divisor.
pub fn is_prime(n: &BigUint) -> bool {
    *n >= BigUint::from(2u32) && smallest_factor(n).is_none()
}

/// All positive divisors of a nonzero `n`, ascending.
pub fn divisors(n: &BigUint) -> Vec<BigUint> {
    assert!(!n.is_zero(), "divisors of zero are unbounded");
    let mut rest = n.clone();
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    while !rest.is_one() {
        let p = smallest_factor(&rest).unwrap_or_else(|| rest.clone());
        let mut e = 0;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        factors.push((p, e));
    }
    let mut out = vec![BigUint::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut power = d.clone();
            for _ in 0..=e {
                next.push(power.clone());
                power *= &p;
            }
        }
        out = next;
    }
    out.sort();
    out
}
