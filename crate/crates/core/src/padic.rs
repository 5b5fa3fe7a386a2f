//! p-adic digit sums, valuations and the multinomial combinatorics built on them.
//!
//! The central quantity is `M(s, n)`, the gcd of all multinomial coefficients
//! `s! / (λ₁!⋯λₙ!)` over compositions `λ` of `s` into `n` positive parts. Its
//! `p`-adic valuation has a closed form in terms of the base-`p` digit sum of `s`,
//! and [`msn_bruteforce`] / [`msn_valuation_formula`] compute both sides.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A prime number, checked on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;

    fn try_from(p: u64) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// All primes `p <= bound`, ascending.
pub fn primes_up_to(bound: u64) -> Vec<Prime> {
    (2..=bound).filter(|&k| is_prime(k)).map(Prime).collect()
}

/// `Some((p, r))` when `s = p^r` with `r ≥ 1`.
pub fn prime_power_root(s: u64) -> Option<(Prime, u32)> {
    let p = (2..=s).find(|&d| s.is_multiple_of(d))?;
    let mut rest = s;
    let mut r = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        r += 1;
    }
    (rest == 1).then_some((Prime(p), r))
}

/// The exponent of a prime in the factorization of some integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValuationResult {
    pub prime: Prime,
    pub exponent: u64,
}

/// Sum of the base-`p` digits of `s`.
pub fn digit_sum(p: Prime, mut s: u64) -> u64 {
    let p = p.get();
    let mut total = 0;
    while s > 0 {
        total += s % p;
        s /= p;
    }
    total
}

/// Largest `e` with `p^e | x`.
pub fn valuation(p: Prime, x: &BigUint) -> Result<u64> {
    if x.is_zero() {
        return Err(Error::ZeroValuation);
    }
    let p = BigUint::from(p.get());
    let mut x = x.clone();
    let mut e = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return Ok(e);
        }
        x = q;
        e += 1;
    }
}

pub fn valuation_u64(p: Prime, x: u64) -> Result<u64> {
    valuation(p, &BigUint::from(x))
}

/// Number of carries when adding `a` and `b` in base `p`.
pub fn kummer_carries(p: Prime, mut a: u64, mut b: u64) -> u64 {
    let p = p.get();
    let mut carry = 0;
    let mut carries = 0;
    while a > 0 || b > 0 || carry > 0 {
        let digit = a % p + b % p + carry;
        carry = u64::from(digit >= p);
        carries += carry;
        a /= p;
        b /= p;
    }
    carries
}

/// Valuation of `s!`, computed as `(s - digit_sum(p, s)) / (p - 1)`.
pub fn legendre_valuation(p: Prime, s: u64) -> u64 {
    let numerator = s - digit_sum(p, s);
    debug_assert_eq!(numerator % (p.get() - 1), 0);
    numerator / (p.get() - 1)
}

/// An ordered tuple of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition {
    parts: Vec<usize>,
    total: usize,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParameter("composition must have at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidParameter(format!(
                "composition parts must be positive, got {parts:?}"
            )));
        }
        let total = parts.iter().sum();
        Ok(Composition { parts, total })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `(Σ parts)! / ∏ parts!`; zero parts are allowed and contribute `0! = 1`.
pub fn multinomial_coefficient(parts: &[usize]) -> BigUint {
    match small_multinomial(parts) {
        Some(x) => BigUint::from(x),
        None => {
            // Product of binomials C(running, part) keeps intermediates small.
            let mut running = 0usize;
            let mut acc = BigUint::one();
            for &part in parts {
                running += part;
                acc *= binomial(running, part);
            }
            acc
        }
    }
}

/// Machine-word fast path; `None` on overflow.
fn small_multinomial(parts: &[usize]) -> Option<u128> {
    let mut running = 0u128;
    let mut acc = 1u128;
    for &part in parts {
        let part = part as u128;
        running += part;
        acc = acc.checked_mul(small_binomial(running, part)?)?;
    }
    Some(acc)
}

fn small_binomial(n: u128, k: u128) -> Option<u128> {
    let k = k.min(n - k);
    let mut acc = 1u128;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// `s! / ∏ λᵢ!` for a composition of `s`.
pub fn multinomial(s: usize, parts: &Composition) -> Result<BigUint> {
    if parts.total() != s {
        return Err(Error::CompositionMismatch { expected: s, total: parts.total() });
    }
    Ok(multinomial_coefficient(parts.parts()))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

/// All compositions of `s` into `n` positive parts, in descending lexicographic order.
pub fn compositions(s: usize, n: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    if n == 0 || n > s {
        return out;
    }
    let mut current = Vec::with_capacity(n);
    fill_compositions(s, n, &mut current, &mut out);
    out
}

fn fill_compositions(remaining: usize, slots: usize, current: &mut Vec<usize>, out: &mut Vec<Composition>) {
    if slots == 1 {
        current.push(remaining);
        out.push(Composition { parts: current.clone(), total: current.iter().sum() });
        current.pop();
        return;
    }
    for first in (1..=remaining - (slots - 1)).rev() {
        current.push(first);
        fill_compositions(remaining - first, slots - 1, current, out);
        current.pop();
    }
}

fn check_msn_range(s: usize, n: usize) -> Result<()> {
    if n == 0 || s == 0 {
        return Err(Error::InvalidParameter(format!("M(s, n) needs s, n >= 1, got ({s}, {n})")));
    }
    if n > s {
        return Err(Error::InvalidParameter(format!("M(s, n) needs n <= s, got ({s}, {n})")));
    }
    Ok(())
}

/// gcd of `multinomial(s, λ)` over all compositions `λ` of `s` into `n` parts.
pub fn msn_bruteforce(s: usize, n: usize) -> Result<BigUint> {
    check_msn_range(s, n)?;
    let mut g = BigUint::zero();
    for lambda in compositions(s, n) {
        g = g.gcd(&multinomial_coefficient(lambda.parts()));
        if g.is_one() {
            break;
        }
    }
    Ok(g)
}

/// Closed form for the `p`-adic valuation of `M(s, n)`.
pub fn msn_valuation_formula(p: Prime, s: usize, n: usize) -> Result<u64> {
    check_msn_range(s, n)?;
    let dig = digit_sum(p, s as u64);
    let n = n as u64;
    if n <= dig {
        Ok(0)
    } else {
        Ok((n - dig).div_ceil(p.get() - 1))
    }
}

/// Per-prime valuations of `M(s, n)` for every prime `p <= s`.
pub fn msn_valuations(s: usize, n: usize) -> Result<Vec<ValuationResult>> {
    let m = msn_bruteforce(s, n)?;
    primes_up_to(s as u64)
        .into_iter()
        .map(|prime| Ok(ValuationResult { prime, exponent: valuation(prime, &m)? }))
        .collect()
}

/// The integers `n` with `digit_sum(p, s) <= n <= s` and `n ≡ s (mod p - 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionInterval {
    pub prime: Prime,
    pub weight: u64,
    pub members: Vec<u64>,
}

impl TorsionInterval {
    pub fn contains(&self, n: u64) -> bool {
        self.members.binary_search(&n).is_ok()
    }

    pub fn min(&self) -> u64 {
        self.members[0]
    }

    pub fn max(&self) -> u64 {
        *self.members.last().expect("interval is never empty")
    }
}

pub fn torsion_interval(p: Prime, s: u64) -> Result<TorsionInterval> {
    if s == 0 {
        return Err(Error::InvalidParameter("torsion interval needs s >= 1".into()));
    }
    let start = digit_sum(p, s);
    let step = (p.get() - 1) as usize;
    let members = (start..=s).step_by(step).collect();
    Ok(TorsionInterval { prime: p, weight: s, members })
}

/// Whether `s` is a sum of exactly `d` powers of `p` (repetitions allowed).
pub fn decomposition_exists(p: Prime, s: u64, d: u64) -> bool {
    let mut powers = Vec::new();
    let mut q = 1u64;
    while q <= s {
        powers.push(q);
        match q.checked_mul(p.get()) {
            Some(next) => q = next,
            None => break,
        }
    }
    let mut memo = HashMap::new();
    decomposes(s, d, &powers, &mut memo)
}

fn decomposes(s: u64, d: u64, powers: &[u64], memo: &mut HashMap<(u64, u64), bool>) -> bool {
    if d == 0 {
        return s == 0;
    }
    if s < d {
        return false;
    }
    if let Some(&known) = memo.get(&(s, d)) {
        return known;
    }
    let found = powers
        .iter()
        .take_while(|&&q| q <= s - (d - 1))
        .any(|&q| decomposes(s - q, d - 1, powers, memo));
    memo.insert((s, d), found);
    found
}
