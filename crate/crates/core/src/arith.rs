//! Exact integer number theory over `u64`: factorization, divisor lists,
//! Euler's totient, π-parts, Bézout coefficients, and the closed-form ψ of
//! cyclic groups. Overflow is detected and reported, never wrapped.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A set of primes π; the complement π′ is always taken relative to the
/// primes of the specific integer at hand.
pub type PrimeSet = BTreeSet<u64>;

/// Prime factorization with primes strictly increasing and exponents ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    /// `(prime, exponent)` pairs, ascending by prime.
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> PrimeSet {
        self.pairs.iter().map(|&(p, _)| p).collect()
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.pairs
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, a)| a)
    }

    /// Reconstructs the factored integer.
    pub fn value(&self) -> u64 {
        self.pairs
            .iter()
            .fold(1u64, |acc, &(p, a)| acc * p.pow(a))
    }
}

/// Trial-division factorization; intended for group orders, not crypto sizes.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let mut pairs = Vec::new();
    let mut m = n;
    let mut d = 2u64;
    while d.saturating_mul(d) <= m {
        if m.is_multiple_of(d) {
            let mut a = 0u32;
            while m.is_multiple_of(d) {
                m /= d;
                a += 1;
            }
            pairs.push((d, a));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        pairs.push((m, 1));
    }
    Ok(Factorization { pairs })
}

pub fn is_prime(n: u64) -> bool {
    n > 1 && factorize(n).is_ok_and(|f| f.pairs() == [(n, 1)])
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let f = factorize(n)?;
    let mut divs = vec![1u64];
    for &(p, a) in f.pairs() {
        let mut next = Vec::with_capacity(divs.len() * (a as usize + 1));
        for &d in &divs {
            let mut pk = 1u64;
            for _ in 0..=a {
                next.push(d * pk); // every product divides n, so no overflow
                pk *= p;
            }
        }
        divs = next;
    }
    divs.sort_unstable();
    Ok(divs)
}

/// Euler's totient via the factorization: Π p^{a−1}(p−1).
pub fn euler_phi(d: u64) -> Result<u64> {
    let f = factorize(d)?;
    // φ(d) ≤ d, so the unchecked products cannot overflow.
    Ok(f.pairs()
        .iter()
        .fold(1u64, |acc, &(p, a)| acc * p.pow(a - 1) * (p - 1)))
}

/// Largest divisor of `n` whose prime factors all lie in `pi`.
pub fn pi_part(n: u64, pi: &PrimeSet) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.pairs()
        .iter()
        .filter(|&&(p, _)| pi.contains(&p))
        .fold(1u64, |acc, &(p, a)| acc * p.pow(a)))
}

/// Primes of `n` not in `pi` — the complement π′ relative to π(n).
pub fn pi_complement(n: u64, pi: &PrimeSet) -> Result<PrimeSet> {
    Ok(factorize(n)?
        .primes()
        .difference(pi)
        .copied()
        .collect())
}

/// ψ of the cyclic group of order p^a: (p^{2a+1} + 1) / (p + 1).
fn psi_cyclic_prime_power(p: u64, a: u32) -> Result<u64> {
    let pw = p
        .checked_pow(2 * a + 1)
        .ok_or(Error::Overflow("psi_cyclic"))?;
    let num = pw.checked_add(1).ok_or(Error::Overflow("psi_cyclic"))?;
    // p + 1 divides p^{2a+1} + 1 exactly because the exponent is odd.
    Ok(num / (p + 1))
}

/// ψ(C_n) = Σ_{x ∈ C_n} o(x), multiplicative over coprime prime powers.
pub fn psi_cyclic(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    f.pairs().iter().try_fold(1u64, |acc, &(p, a)| {
        acc.checked_mul(psi_cyclic_prime_power(p, a)?)
            .ok_or(Error::Overflow("psi_cyclic"))
    })
}

/// ψ_π(C_n) = n_{π′} · ψ(C_{n_π}).
pub fn psi_pi_cyclic(n: u64, pi: &PrimeSet) -> Result<u64> {
    let np = pi_part(n, pi)?;
    (n / np)
        .checked_mul(psi_cyclic(np)?)
        .ok_or(Error::Overflow("psi_pi_cyclic"))
}

/// Extended Euclid: returns (g, s, t) with s·a + t·b = g = gcd(a, b).
pub fn bezout(a: u64, b: u64) -> (u64, i128, i128) {
    let (mut r0, mut r1) = (a as i128, b as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 as u64, s0, t0)
}

/// Parses a comma-separated list like `"2,3"` into a set of distinct primes.
pub fn parse_primes(input: &str) -> Result<PrimeSet> {
    let mut pi = PrimeSet::new();
    for tok in input.split(',').map(str::trim) {
        if tok.is_empty() {
            continue;
        }
        let p: u64 = tok.parse().map_err(|_| Error::BadPrimeSet {
            input: input.to_string(),
            msg: format!("{tok:?} is not an integer"),
        })?;
        if !is_prime(p) {
            return Err(Error::BadPrimeSet {
                input: input.to_string(),
                msg: format!("{p} is not prime"),
            });
        }
        if !pi.insert(p) {
            return Err(Error::BadPrimeSet {
                input: input.to_string(),
                msg: format!("{p} listed twice"),
            });
        }
    }
    Ok(pi)
}
