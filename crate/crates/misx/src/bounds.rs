//! Closed-form bounds for trees and subcubic trees, Fibonacci numbers,
//! and exact comparison of integers (and rationals) against powers of the
//! golden ratio.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The `n`-th Fibonacci number, `f(0) = 0, f(1) = 1`.
pub fn fib(n: usize) -> BigUint {
    let mut a = BigUint::zero();
    let mut b = BigUint::one();
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

/// Sharp bound on the number of maximum independent sets of a tree of
/// order `n >= 2` and independence number `alpha`: `2^(n-alpha-1)`, plus
/// one when `2*alpha = n`. Trees force `n/2 <= alpha <= n-1`.
pub fn tree_bound(n: usize, alpha: usize) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::InvalidParam(format!(
            "tree bound needs order >= 2, got {n}"
        )));
    }
    if 2 * alpha < n || alpha > n - 1 {
        return Err(Error::InvalidParam(format!(
            "independence number of a tree of order {n} lies in [{}, {}], got {alpha}",
            n.div_ceil(2),
            n - 1
        )));
    }
    let base = BigUint::from(2u32).pow((n - alpha - 1) as u32);
    Ok(if 2 * alpha == n {
        base + BigUint::one()
    } else {
        base
    })
}

/// Sharp bound `f(alpha + 2)` for subcubic trees with independence number
/// `alpha = n/2`, the smallest possible.
pub fn half_alpha_bound(alpha: usize) -> BigUint {
    fib(alpha + 2)
}

/// Largest independence number a subcubic tree of order `n` can have:
/// `floor((2n + 1) / 3)`.
pub fn subcubic_alpha_max(n: usize) -> usize {
    (2 * n + 1) / 3
}

/// The admissibility predicate behind [`subcubic_alpha_max`]:
/// `3 * alpha <= 2n + 1`, in integer arithmetic only.
pub fn subcubic_alpha_admissible(n: usize, alpha: usize) -> bool {
    3 * alpha <= 2 * n + 1
}

/// Exact comparison of the rational `num/den` against `phi^m` where
/// `phi = (1 + sqrt 5)/2`. Uses `phi^m = f(m)*phi + f(m-1)`, so the whole
/// comparison reduces to integers; no rounding anywhere. Equality is only
/// possible at `m = 0` since `phi^m` is irrational for `m >= 1`.
pub fn phi_power_compare_ratio(num: &BigUint, den: &BigUint, m: usize) -> Result<Ordering> {
    if den.is_zero() {
        return Err(Error::InvalidParam("zero denominator".into()));
    }
    if m == 0 {
        return Ok(num.cmp(den));
    }
    // num/den < f(m)*phi + f(m-1)
    //   <=>  2*num - den*(2*f(m-1) + f(m)) < den*f(m)*sqrt(5)
    let two = BigInt::from(2);
    let fm = BigInt::from(fib(m));
    let fm1 = BigInt::from(fib(m - 1));
    let den = BigInt::from(den.clone());
    let d: BigInt = BigInt::from(num.clone()) * &two - &den * (fm1 * &two + &fm);
    if d.sign() == num_bigint::Sign::Minus {
        return Ok(Ordering::Less);
    }
    let rhs = den * fm;
    match (&d * &d).cmp(&(rhs.clone() * rhs * 5)) {
        Ordering::Less => Ok(Ordering::Less),
        Ordering::Greater => Ok(Ordering::Greater),
        Ordering::Equal => unreachable!("phi^m is irrational for m >= 1"),
    }
}

/// Exact comparison of an integer `c` against `phi^m`.
pub fn phi_power_compare(c: &BigUint, m: usize) -> Ordering {
    phi_power_compare_ratio(c, &BigUint::one(), m).expect("denominator is one")
}

/// `floor(phi^m)`, via the Lucas numbers: `phi^m + psi^m = L(m)` with
/// `psi^m` in `(-1, 1)` alternating in sign.
pub fn phi_power_floor(m: usize) -> BigUint {
    if m == 0 {
        return BigUint::one();
    }
    let lucas = fib(m - 1) + fib(m + 1);
    if m.is_multiple_of(2) {
        lucas - BigUint::one()
    } else {
        lucas
    }
}
