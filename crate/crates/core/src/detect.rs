//! Structural classification of the equality case — a normal subgroup
//! carrying everything away from π, complemented by a cyclic subgroup of
//! full π-order — plus the corpus-wide verification sweep, the
//! cyclic-Sylow/solution-set search, and the exact-rational ratio scan.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::arith::{self, PrimeSet};
use crate::catalog::Corpus;
use crate::error::Result;
use crate::exec;
use crate::group::{ElementSet, FiniteGroup};
use crate::partition::{self, SolutionCount};
use crate::psi::{self, PsiReport};

/// The structural facts behind attaining the cyclic benchmark: writing
/// n = n_π · n_{π′}, the group attains ψ_π(C_n) exactly when the solutions
/// of x^{n_{π′}} = 1 form a normal subgroup of order n_{π′} and some element
/// has order n_π (a cyclic complement).
#[derive(Debug, Clone, Serialize)]
pub struct EqualityStructure {
    pub pi: Vec<u64>,
    pub n_pi: u64,
    pub n_pi_prime: u64,
    /// Smallest element index of order n_π, if any exists.
    pub witness: Option<usize>,
    /// The solution set {x : x^{n_{π′}} = 1}.
    #[serde(skip)]
    pub h_set: ElementSet,
    pub h_size: u64,
    pub h_is_subgroup: bool,
    pub h_is_normal: bool,
    /// All structure conditions met.
    pub classified: bool,
}

pub fn detect_equality_structure(g: &FiniteGroup, pi: &PrimeSet) -> EqualityStructure {
    let n = g.order() as u64;
    let n_pi = arith::pi_part(n, pi).expect("group order is positive");
    let n_pi_prime = n / n_pi;
    let orders = g.orders();
    let witness = (0..g.order()).find(|&x| orders[x] == n_pi);
    let h_set = partition::solution_set(g, n_pi_prime)
        .expect("the complementary part divides the order");
    let h_size = h_set.len() as u64;
    let h_is_subgroup = g.is_subgroup(&h_set);
    let h_is_normal = h_is_subgroup
        && g
            .is_normal(&h_set)
            .expect("normality test on a verified subgroup");
    let classified =
        witness.is_some() && h_size == n_pi_prime && h_is_subgroup && h_is_normal;
    EqualityStructure {
        pi: pi.iter().copied().collect(),
        n_pi,
        n_pi_prime,
        witness,
        h_set,
        h_size,
        h_is_subgroup,
        h_is_normal,
        classified,
    }
}

/// Which π sets a verification run covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PiPolicy {
    /// One singleton {p} per prime p dividing the order.
    AllPrimes,
    /// Every subset of the order's primes. With more than four primes, the
    /// subsets of the four smallest plus the full set (the cap never binds
    /// on orders below 2·3·5·7·11 = 2310).
    AllSubsets,
}

/// The π sets the policy prescribes for a group of order n, deterministic,
/// subsets ordered by bitmask over ascending primes.
pub fn pi_sets(n: u64, policy: PiPolicy) -> Result<Vec<PrimeSet>> {
    let primes: Vec<u64> = arith::factorize(n)?.primes().into_iter().collect();
    Ok(match policy {
        PiPolicy::AllPrimes => primes
            .iter()
            .map(|&p| PrimeSet::from([p]))
            .collect(),
        PiPolicy::AllSubsets => {
            let base: Vec<u64> = primes.iter().copied().take(4).collect();
            let mut sets: Vec<PrimeSet> = (0..1u32 << base.len())
                .map(|mask| {
                    base.iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &p)| p)
                        .collect()
                })
                .collect();
            if primes.len() > 4 {
                sets.push(primes.iter().copied().collect());
            }
            sets
        }
    })
}

/// One (group, π) verification record.
#[derive(Debug, Clone, Serialize)]
pub struct PiRecord {
    pub psi: PsiReport,
    pub structure: EqualityStructure,
    /// deficit ≥ 0: the cyclic benchmark is never beaten.
    pub inequality_ok: bool,
    /// deficit = 0 exactly when the structure is classified.
    pub biconditional_ok: bool,
}

/// Everything verified about one corpus group.
#[derive(Debug, Clone, Serialize)]
pub struct GroupReport {
    pub label: String,
    pub order: u64,
    pub pi_records: Vec<PiRecord>,
    pub frobenius: Vec<SolutionCount>,
    /// Every divisor's solution count is a positive multiple; exact counts
    /// form normal subgroups.
    pub frobenius_ok: bool,
    /// A partition certificate was produced and independently validated.
    pub partition_ok: bool,
    /// The certificate's image-order sums reproduce ψ(C_n) and every ψ_π(C_n).
    pub partition_psi_tie_ok: bool,
    /// For every π: both-sided equality implies the group is cyclic.
    pub corollary_ok: bool,
    /// π sets for which both ψ_π and ψ_{π′} met their benchmarks — the
    /// premise of the both-sided-equality implication.
    pub corollary_premise_at: Vec<Vec<u64>>,
    pub all_ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub groups: Vec<GroupReport>,
    pub passed: bool,
}

fn has_full_order_element(g: &FiniteGroup) -> bool {
    let n = g.order() as u64;
    g.orders().contains(&n)
}

/// Both-sided-equality implication for one π: if ψ_π and ψ_{π′} (π′ the
/// complement of π within the order's primes) both meet their cyclic
/// benchmarks, the group must be cyclic. Returns the implication's truth.
pub fn check_corollary(g: &FiniteGroup, pi: &PrimeSet) -> Result<bool> {
    let n = g.order() as u64;
    let pi_prime = arith::pi_complement(n, pi)?;
    let here = psi::psi_report(g, pi)?;
    let there = psi::psi_report(g, &pi_prime)?;
    if here.equality && there.equality {
        Ok(has_full_order_element(g))
    } else {
        Ok(true)
    }
}

fn group_report(g: &FiniteGroup, policy: PiPolicy) -> Result<GroupReport> {
    let n = g.order() as u64;
    let sets = pi_sets(n, policy)?;

    let mut pi_records = Vec::with_capacity(sets.len());
    for pi in &sets {
        let psi = psi::psi_report(g, pi)?;
        let structure = detect_equality_structure(g, pi);
        let inequality_ok = psi.deficit >= 0;
        let biconditional_ok = (psi.deficit == 0) == structure.classified;
        pi_records.push(PiRecord {
            psi,
            structure,
            inequality_ok,
            biconditional_ok,
        });
    }

    let frobenius = partition::frobenius_sweep(g)?;
    let frobenius_ok = frobenius.iter().all(|sc| {
        sc.multiple_of_divisor
            && (!sc.exact || (sc.subgroup == Some(true) && sc.normal == Some(true)))
    });

    let network = partition::build_network(g)?;
    let (partition_ok, partition_psi_tie_ok) = match partition::max_flow_partition(&network) {
        Ok(cert) => {
            let valid = partition::validate_certificate(g, &cert).is_empty();
            let mut ties = partition::certified_psi_sum(&cert)? == arith::psi_cyclic(n)?;
            for pi in &sets {
                ties = ties
                    && partition::certified_psi_pi_sum(&cert, pi)?
                        == arith::psi_pi_cyclic(n, pi)?;
            }
            (valid, ties)
        }
        Err(_) => (false, false),
    };

    let mut corollary_ok = true;
    let mut corollary_premise_at = Vec::new();
    for pi in &sets {
        let pi_prime = arith::pi_complement(n, pi)?;
        let here = psi::psi_report(g, pi)?;
        let there = psi::psi_report(g, &pi_prime)?;
        if here.equality && there.equality {
            corollary_premise_at.push(here.pi.clone());
            corollary_ok = corollary_ok && has_full_order_element(g);
        }
    }

    let all_ok = pi_records
        .iter()
        .all(|r| r.inequality_ok && r.biconditional_ok)
        && frobenius_ok
        && partition_ok
        && partition_psi_tie_ok
        && corollary_ok;

    Ok(GroupReport {
        label: g.label().to_string(),
        order: n,
        pi_records,
        frobenius,
        frobenius_ok,
        partition_ok,
        partition_psi_tie_ok,
        corollary_ok,
        corollary_premise_at,
        all_ok,
    })
}

/// Runs the full verification over a corpus: for every group and every π
/// under the policy, the benchmark inequality, the equality biconditional,
/// the solution-count sweep, the partition certificate with its independent
/// validation, and the both-sided-equality implication. Failures are report
/// content, never panics.
pub fn verify_main_theorem(corpus: &Corpus, policy: PiPolicy) -> Result<VerificationReport> {
    let groups = exec::map_slice(corpus.groups(), |g| group_report(g, policy))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let passed = groups.iter().all(|r| r.all_ok);
    Ok(VerificationReport { groups, passed })
}

/// One (group, prime) probe of the open question: when the Sylow subgroup
/// for p is cyclic and x^{n_{p′}} = 1 has exactly n_{p′} solutions, do the
/// solutions form a subgroup?
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct QuestionVerdict {
    pub label: String,
    pub prime: u64,
    /// An element of order p^a exists, p^a the full power of p in |G|.
    pub sylow_cyclic: bool,
    pub solution_set_size: u64,
    /// solution_set_size == n_{p′}.
    pub size_matches: bool,
    pub is_subgroup: bool,
    /// The question's premises hold but the conclusion fails.
    pub counterexample: bool,
}

pub fn search_question(corpus: &Corpus) -> Result<Vec<QuestionVerdict>> {
    let mut verdicts = Vec::new();
    for g in corpus.groups() {
        let n = g.order() as u64;
        for &p in arith::factorize(n)?.primes().iter() {
            let p_power = arith::pi_part(n, &PrimeSet::from([p]))?;
            let m = n / p_power;
            let orders = g.orders();
            let sylow_cyclic = orders.contains(&p_power);
            let set = partition::solution_set(g, m)?;
            let solution_set_size = set.len() as u64;
            let size_matches = solution_set_size == m;
            let is_subgroup = g.is_subgroup(&set);
            verdicts.push(QuestionVerdict {
                label: g.label().to_string(),
                prime: p,
                sylow_cyclic,
                solution_set_size,
                size_matches,
                is_subgroup,
                counterexample: sylow_cyclic && size_matches && !is_subgroup,
            });
        }
    }
    Ok(verdicts)
}

/// An exact reduced fraction; ordered by value, never by float.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Ratio {
    pub numer: u64,
    pub denom: u64,
}

impl Ratio {
    pub fn new(numer: u64, denom: u64) -> Self {
        assert!(denom != 0, "ratio denominator must be nonzero");
        let (g, _, _) = arith::bezout(numer, denom);
        if g == 0 {
            return Ratio { numer: 0, denom: 1 };
        }
        Ratio {
            numer: numer / g,
            denom: denom / g,
        }
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        let left = self.numer as u128 * other.denom as u128;
        let right = other.numer as u128 * self.denom as u128;
        left.cmp(&right)
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct RatioEntry {
    pub label: String,
    pub ratio: Ratio,
}

/// ψ_p(G) / ψ_p(C_|G|) for every corpus group, exact and sorted ascending
/// (ties broken by label). An exploratory probe: no threshold claim is made.
pub fn ratio_scan(corpus: &Corpus, p: u64) -> Result<Vec<RatioEntry>> {
    let pi = PrimeSet::from([p]);
    let mut entries = Vec::with_capacity(corpus.len());
    for g in corpus.groups() {
        let numer = psi::psi_pi(g, &pi)?;
        let denom = arith::psi_pi_cyclic(g.order() as u64, &pi)?;
        entries.push(RatioEntry {
            label: g.label().to_string(),
            ratio: Ratio::new(numer, denom),
        });
    }
    entries.sort_by(|a, b| a.ratio.cmp(&b.ratio).then_with(|| a.label.cmp(&b.label)));
    Ok(entries)
}
