//! Order spectra, π-part decomposition of elements, and the order-sum
//! statistics ψ and ψ_π with their cyclic-group benchmarks.
//!
//! ψ_π is computed by two genuinely different routes — measuring o(x_π) for
//! the Bézout-constructed π-part, and measuring o(x^{n_{π′}}) directly — and
//! the verification paths insist the two agree.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::arith::{self, PrimeSet};
use crate::error::{Error, Result};
use crate::exec;
use crate::group::FiniteGroup;

/// Element-order multiset of a group: order d ↦ number of elements of
/// order d. Keys divide the group order; counts sum to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderSpectrum {
    order: u64,
    counts: BTreeMap<u64, u64>,
}

impl OrderSpectrum {
    pub fn group_order(&self) -> u64 {
        self.order
    }

    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    /// `(order, count)` pairs ascending by order.
    pub fn pairs(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.counts.iter().map(|(&d, &c)| (d, c))
    }

    pub fn count_of(&self, d: u64) -> u64 {
        self.counts.get(&d).copied().unwrap_or(0)
    }

    /// Largest element order present.
    pub fn max_order(&self) -> u64 {
        self.counts.keys().next_back().copied().unwrap_or(1)
    }
}

pub fn order_spectrum(g: &FiniteGroup) -> OrderSpectrum {
    let mut counts = BTreeMap::new();
    for &o in g.orders() {
        *counts.entry(o).or_insert(0) += 1;
    }
    OrderSpectrum {
        order: g.order() as u64,
        counts,
    }
}

/// The unique factorization x = x_π · x_{π′} into commuting parts of coprime
/// π- and π′-order, both powers of x.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PiDecomposition {
    pub x_pi: usize,
    pub x_pi_prime: usize,
    pub order_pi: u64,
    pub order_pi_prime: u64,
}

/// Splits x by the Bézout construction: with d = o(x), u the largest
/// divisor of d supported on π, v = d/u, and s·u + t·v = 1, the parts are
/// x_π = x^{t·v} and x_{π′} = x^{s·u}.
pub fn pi_decompose(g: &FiniteGroup, x: usize, pi: &PrimeSet) -> PiDecomposition {
    let d = g.element_order(x);
    let u = arith::pi_part(d, pi).expect("element order is positive");
    let v = d / u;
    let (gcd, s, t) = arith::bezout(u, v);
    debug_assert_eq!(gcd, 1, "pi-part and complement are coprime");
    let di = d as i128;
    let e_pi = (t * v as i128).rem_euclid(di) as u64;
    let e_pi_prime = (s * u as i128).rem_euclid(di) as u64;
    let x_pi = g.power(x, e_pi);
    let x_pi_prime = g.power(x, e_pi_prime);
    let dec = PiDecomposition {
        x_pi,
        x_pi_prime,
        order_pi: g.element_order(x_pi),
        order_pi_prime: g.element_order(x_pi_prime),
    };
    debug_assert_eq!(g.mul(dec.x_pi, dec.x_pi_prime), x);
    debug_assert_eq!(g.mul(dec.x_pi_prime, dec.x_pi), x);
    debug_assert_eq!(dec.order_pi * dec.order_pi_prime, d);
    debug_assert_eq!(dec.order_pi, u);
    debug_assert_eq!(dec.order_pi_prime, v);
    dec
}

/// ψ(G) = Σ_{x ∈ G} o(x).
pub fn psi(g: &FiniteGroup) -> Result<u64> {
    let orders = g.orders();
    exec::try_sum(g.order(), |x| orders[x]).ok_or(Error::Overflow("psi"))
}

/// ψ_π by the power formula: Σ_x o(x^{n_{π′}}), where n_{π′} is the part of
/// |G| away from π. Debug builds additionally recompute through
/// [`pi_decompose`] and flag any disagreement.
pub fn psi_pi(g: &FiniteGroup, pi: &PrimeSet) -> Result<u64> {
    let via_power = psi_pi_via_power(g, pi)?;
    #[cfg(debug_assertions)]
    {
        let via_decomposition = psi_pi_via_decomposition(g, pi)?;
        if via_decomposition != via_power {
            return Err(Error::PsiPiMismatch {
                via_decomposition,
                via_power,
            });
        }
    }
    Ok(via_power)
}

/// ψ_π with both routes computed and compared unconditionally; the
/// verification sweeps call this so the power identity is itself under test.
pub fn psi_pi_crosschecked(g: &FiniteGroup, pi: &PrimeSet) -> Result<u64> {
    let via_power = psi_pi_via_power(g, pi)?;
    let via_decomposition = psi_pi_via_decomposition(g, pi)?;
    if via_decomposition != via_power {
        return Err(Error::PsiPiMismatch {
            via_decomposition,
            via_power,
        });
    }
    Ok(via_power)
}

fn psi_pi_via_power(g: &FiniteGroup, pi: &PrimeSet) -> Result<u64> {
    let n = g.order() as u64;
    let m = n / arith::pi_part(n, pi)?;
    g.orders(); // fill the cache once, outside the element loop
    exec::try_sum(g.order(), |x| g.element_order(g.power(x, m)))
        .ok_or(Error::Overflow("psi_pi"))
}

fn psi_pi_via_decomposition(g: &FiniteGroup, pi: &PrimeSet) -> Result<u64> {
    g.orders();
    exec::try_sum(g.order(), |x| pi_decompose(g, x, pi).order_pi)
        .ok_or(Error::Overflow("psi_pi"))
}

/// One group × one π, measured against the cyclic benchmark.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct PsiReport {
    pub label: String,
    pub order: u64,
    pub pi: Vec<u64>,
    pub psi_pi: u64,
    /// ψ_π of the cyclic group of the same order.
    pub benchmark: u64,
    /// benchmark − ψ_π(G); negative would contradict the maximality of the
    /// cyclic group, so it is reported signed rather than assumed.
    pub deficit: i64,
    pub equality: bool,
}

/// Computes ψ_π (cross-checked) against ψ_π(C_n).
pub fn psi_report(g: &FiniteGroup, pi: &PrimeSet) -> Result<PsiReport> {
    let value = psi_pi_crosschecked(g, pi)?;
    let benchmark = arith::psi_pi_cyclic(g.order() as u64, pi)?;
    Ok(PsiReport {
        label: g.label().to_string(),
        order: g.order() as u64,
        pi: pi.iter().copied().collect(),
        psi_pi: value,
        benchmark,
        deficit: benchmark as i64 - value as i64,
        equality: value == benchmark,
    })
}
