//! Constructive order-divisibility partitions and solution counting.
//!
//! For a group of order n, a bijection onto the cyclic group C_n is built so
//! that every element's order divides its image's order. Feasibility is
//! decided by integer max-flow on a network compressed to order classes
//! (left) and divisors of n (right); a saturating flow expands
//! deterministically into an element-level certificate, and an infeasible
//! network — impossible for a genuine group, possible for a corrupted table —
//! yields an explicit violated-Hall-condition witness.
//!
//! The same module counts solutions of x^d = 1 per divisor d: the count is
//! always a positive multiple of d, and an exact count is tested for being a
//! (normal) subgroup.

use std::fmt;

use serde::Serialize;

use crate::arith::{self, PrimeSet};
use crate::error::{Error, Result};
use crate::exec;
use crate::group::{ElementSet, FiniteGroup};

/// Bipartite supply/demand network between order classes of a group and
/// divisor classes of the same-order cyclic group, with edges following
/// divisibility.
#[derive(Debug, Clone)]
pub struct DivisorFlowNetwork {
    /// Group order n = Σ supplies = Σ demands.
    pub(crate) order: u64,
    /// (element order d, number of elements of order d), ascending by d.
    pub(crate) supplies: Vec<(u64, u64)>,
    /// (divisor e of n, φ(e)), ascending by e.
    pub(crate) demands: Vec<(u64, u64)>,
    /// (supply index, demand index) wherever the order divides the divisor.
    pub(crate) edges: Vec<(usize, usize)>,
    /// Element indices per supply class, ascending.
    pub(crate) members: Vec<Vec<usize>>,
}

impl DivisorFlowNetwork {
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn supplies(&self) -> &[(u64, u64)] {
        &self.supplies
    }

    pub fn demands(&self) -> &[(u64, u64)] {
        &self.demands
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

pub fn build_network(g: &FiniteGroup) -> Result<DivisorFlowNetwork> {
    let n = g.order() as u64;
    let spectrum = crate::psi::order_spectrum(g);
    let supplies: Vec<(u64, u64)> = spectrum.pairs().collect();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); supplies.len()];
    for (x, &order) in g.orders().iter().enumerate() {
        let class = supplies
            .binary_search_by_key(&order, |&(d, _)| d)
            .expect("every element order appears in the spectrum");
        members[class].push(x);
    }

    let divisors = arith::divisors(n)?;
    let mut demands = Vec::with_capacity(divisors.len());
    for &e in &divisors {
        demands.push((e, arith::euler_phi(e)?));
    }

    let mut edges = Vec::new();
    for (i, &(d, _)) in supplies.iter().enumerate() {
        for (j, &(e, _)) in demands.iter().enumerate() {
            if e % d == 0 {
                edges.push((i, j));
            }
        }
    }
    Ok(DivisorFlowNetwork {
        order: n,
        supplies,
        demands,
        edges,
        members,
    })
}

/// One class of the certified partition: the elements assigned to divisor
/// `divisor` and their images (residues mod n of that exact order), aligned
/// index-for-index.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DivisorClass {
    pub divisor: u64,
    pub elements: Vec<usize>,
    pub images: Vec<u64>,
}

/// A verified witness for the order-divisibility partition: classes indexed
/// by the divisors of n (ascending) and the induced bijection onto residues
/// mod n.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct PartitionCertificate {
    pub order: u64,
    pub classes: Vec<DivisorClass>,
    /// Element index → residue mod n; a permutation of 0..n.
    pub bijection: Vec<u64>,
}

/// An infeasibility certificate: a set of divisor classes whose admissible
/// supplier classes cannot cover their demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallViolation {
    pub divisors: Vec<u64>,
    pub demand: u64,
    pub supplier_orders: Vec<u64>,
    pub supply: u64,
}

impl fmt::Display for HallViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "divisor classes {:?} demand {} elements but their admissible \
             order classes {:?} only supply {}",
            self.divisors, self.demand, self.supplier_orders, self.supply
        )
    }
}

/// Middle-edge capacity: effectively infinite, small enough that sums of
/// capacities never overflow u64.
const BIG: u64 = u64::MAX / 4;

/// Plain Dinic max-flow over a dense little graph; deterministic.
struct FlowGraph {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u64>,
    orig: Vec<u64>,
}

impl FlowGraph {
    fn new(nodes: usize) -> Self {
        FlowGraph {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            orig: Vec::new(),
        }
    }

    /// Returns the forward edge id; the paired reverse edge is id ^ 1.
    fn add_edge(&mut self, u: usize, v: usize, c: u64) -> usize {
        let id = self.to.len();
        self.to.push(v);
        self.cap.push(c);
        self.orig.push(c);
        self.adj[u].push(id);
        self.to.push(u);
        self.cap.push(0);
        self.orig.push(0);
        self.adj[v].push(id + 1);
        id
    }

    fn flow_on(&self, id: usize) -> u64 {
        self.orig[id] - self.cap[id]
    }

    fn levels(&self, s: usize) -> Vec<Option<u32>> {
        let mut level = vec![None; self.adj.len()];
        level[s] = Some(0);
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &id in &self.adj[u] {
                let v = self.to[id];
                if self.cap[id] > 0 && level[v].is_none() {
                    level[v] = Some(level[u].unwrap() + 1);
                    queue.push_back(v);
                }
            }
        }
        level
    }

    fn augment(
        &mut self,
        u: usize,
        t: usize,
        pushed: u64,
        level: &[Option<u32>],
        iter: &mut [usize],
    ) -> u64 {
        if u == t {
            return pushed;
        }
        while iter[u] < self.adj[u].len() {
            let id = self.adj[u][iter[u]];
            let v = self.to[id];
            if self.cap[id] > 0 && level[v] == level[u].map(|l| l + 1) {
                let d = self.augment(v, t, pushed.min(self.cap[id]), level, iter);
                if d > 0 {
                    self.cap[id] -= d;
                    self.cap[id ^ 1] += d;
                    return d;
                }
            }
            iter[u] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        let mut total = 0u64;
        loop {
            let level = self.levels(s);
            if level[t].is_none() {
                return total;
            }
            let mut iter = vec![0usize; self.adj.len()];
            loop {
                let pushed = self.augment(s, t, u64::MAX, &level, &mut iter);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }

    /// Nodes reachable from `s` in the final residual graph.
    fn reachable(&self, s: usize) -> Vec<bool> {
        self.levels(s).iter().map(Option::is_some).collect()
    }
}

/// Solves the network and expands a saturating flow into an element-level
/// certificate. Within each order class, elements are consumed in ascending
/// index order by divisor classes in ascending divisor order, and each
/// element is mapped to the smallest unused residue of the required order —
/// fully deterministic.
///
/// If no saturating flow exists the violated Hall condition is returned: a
/// set of divisor classes whose combined demand exceeds the total supply of
/// every order class allowed to feed them.
pub fn max_flow_partition(
    net: &DivisorFlowNetwork,
) -> std::result::Result<PartitionCertificate, HallViolation> {
    let nl = net.supplies.len();
    let nr = net.demands.len();
    let source = 0usize;
    let sink = nl + nr + 1;
    let left = |i: usize| 1 + i;
    let right = |j: usize| 1 + nl + j;

    let mut graph = FlowGraph::new(nl + nr + 2);
    for (i, &(_, count)) in net.supplies.iter().enumerate() {
        graph.add_edge(source, left(i), count);
    }
    let mut middle = Vec::with_capacity(net.edges.len());
    for &(i, j) in &net.edges {
        middle.push((i, j, graph.add_edge(left(i), right(j), BIG)));
    }
    for (j, &(_, phi)) in net.demands.iter().enumerate() {
        graph.add_edge(right(j), sink, phi);
    }

    let total = graph.max_flow(source, sink);
    if total != net.order {
        // Min-cut: divisor classes unreachable in the residual graph have,
        // collectively, too little admissible supply.
        let reach = graph.reachable(source);
        let starved: Vec<usize> = (0..nr).filter(|&j| !reach[right(j)]).collect();
        let mut suppliers: Vec<usize> = net
            .edges
            .iter()
            .filter(|&&(_, j)| starved.binary_search(&j).is_ok())
            .map(|&(i, _)| i)
            .collect();
        suppliers.sort_unstable();
        suppliers.dedup();
        return Err(HallViolation {
            divisors: starved.iter().map(|&j| net.demands[j].0).collect(),
            demand: starved.iter().map(|&j| net.demands[j].1).sum(),
            supplier_orders: suppliers.iter().map(|&i| net.supplies[i].0).collect(),
            supply: suppliers.iter().map(|&i| net.supplies[i].1).sum(),
        });
    }

    // Residues mod n grouped by their order in C_n, each list ascending.
    let n = net.order;
    let mut residues_of_order: std::collections::BTreeMap<u64, Vec<u64>> =
        std::collections::BTreeMap::new();
    for r in 0..n {
        let o = n / gcd(r, n);
        residues_of_order.entry(o).or_default().push(r);
    }

    let mut class_elements: Vec<Vec<usize>> = vec![Vec::new(); nr];
    let mut cursor: Vec<usize> = vec![0; nl];
    // Per left class, walk its middle edges in ascending divisor order
    // (edges were generated with j ascending within each i).
    for &(i, j, edge_id) in &middle {
        let take = graph.flow_on(edge_id) as usize;
        if take > 0 {
            let start = cursor[i];
            class_elements[j].extend_from_slice(&net.members[i][start..start + take]);
            cursor[i] += take;
        }
    }

    let mut classes = Vec::with_capacity(nr);
    let mut bijection = vec![0u64; n as usize];
    for (j, &(e, _)) in net.demands.iter().enumerate() {
        let mut elements = std::mem::take(&mut class_elements[j]);
        elements.sort_unstable();
        let images = residues_of_order[&e].clone();
        debug_assert_eq!(elements.len(), images.len());
        for (&x, &r) in elements.iter().zip(&images) {
            bijection[x] = r;
        }
        classes.push(DivisorClass {
            divisor: e,
            elements,
            images,
        });
    }
    Ok(PartitionCertificate {
        order: n,
        classes,
        bijection,
    })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Re-verifies a certificate from scratch, sharing nothing with the flow
/// solver. Returns human-readable violations; an empty list means the
/// certificate is valid. Checks, per class e: disjoint cover of the group,
/// |L_e| = φ(e), x^e = identity on L_e, images are exactly the residues of
/// order e, and every element's order divides its image's order.
pub fn validate_certificate(g: &FiniteGroup, cert: &PartitionCertificate) -> Vec<String> {
    let mut problems = Vec::new();
    let n = g.order() as u64;
    if cert.order != n {
        problems.push(format!(
            "certificate order {} does not match group order {n}",
            cert.order
        ));
        return problems;
    }

    let mut covered = vec![0u32; g.order()];
    for class in &cert.classes {
        for &x in &class.elements {
            if x >= g.order() {
                problems.push(format!("element index {x} out of range"));
            } else {
                covered[x] += 1;
            }
        }
    }
    if covered.iter().any(|&c| c != 1) {
        problems.push("classes do not partition the group".to_string());
    }

    let divisors: Vec<u64> = cert.classes.iter().map(|c| c.divisor).collect();
    match arith::divisors(n) {
        Ok(expect) if divisors == expect => {}
        _ => problems.push("class divisors are not the divisors of n, ascending".to_string()),
    }

    let mut seen_residues = vec![false; g.order()];
    for class in &cert.classes {
        let e = class.divisor;
        let phi = arith::euler_phi(e).expect("divisor is positive");
        if class.elements.len() as u64 != phi {
            problems.push(format!(
                "|L_{e}| = {}, expected phi({e}) = {phi}",
                class.elements.len()
            ));
        }
        if class.images.len() != class.elements.len() {
            problems.push(format!("class {e}: images misaligned with elements"));
        }
        for &x in &class.elements {
            if x < g.order() && g.power(x, e) != 0 {
                problems.push(format!("element {x} in L_{e} has x^{e} != identity"));
            }
            if x < g.order() && e % g.element_order(x) != 0 {
                problems.push(format!(
                    "element {x} of order {} mapped into class {e}",
                    g.element_order(x)
                ));
            }
        }
        for &r in &class.images {
            if r >= n || n / gcd(r, n) != e {
                problems.push(format!("residue {r} in class {e} has the wrong order"));
            } else if seen_residues[r as usize] {
                problems.push(format!("residue {r} used twice"));
            } else {
                seen_residues[r as usize] = true;
            }
        }
        for (&x, &r) in class.elements.iter().zip(&class.images) {
            if x < g.order() && cert.bijection.get(x) != Some(&r) {
                problems.push(format!("bijection[{x}] disagrees with class {e}"));
            }
        }
    }
    if cert.bijection.len() != g.order() || !seen_residues.iter().all(|&s| s) {
        problems.push("images do not exhaust the residues mod n".to_string());
    }
    problems
}

/// Σ over the certificate of the image's order in C_n — must equal ψ(C_n).
pub fn certified_psi_sum(cert: &PartitionCertificate) -> Result<u64> {
    let n = cert.order;
    cert.bijection
        .iter()
        .try_fold(0u64, |acc, &r| acc.checked_add(n / gcd(r, n)))
        .ok_or(Error::Overflow("certified_psi_sum"))
}

/// Σ over the certificate of the π-part of the image's order — must equal
/// ψ_π(C_n).
pub fn certified_psi_pi_sum(cert: &PartitionCertificate, pi: &PrimeSet) -> Result<u64> {
    let n = cert.order;
    let mut acc = 0u64;
    for &r in &cert.bijection {
        let o = n / gcd(r, n);
        acc = acc
            .checked_add(arith::pi_part(o, pi)?)
            .ok_or(Error::Overflow("certified_psi_pi_sum"))?;
    }
    Ok(acc)
}

/// The count of solutions of x^d = 1 with its divisibility and subgroup
/// verdicts.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SolutionCount {
    pub divisor: u64,
    pub count: u64,
    pub multiple_of_divisor: bool,
    /// count == divisor.
    pub exact: bool,
    /// Tested only when exact.
    pub subgroup: Option<bool>,
    /// Tested only when exact; a non-subgroup records false.
    pub normal: Option<bool>,
}

/// All x with x^d = identity, i.e. those whose order divides d.
pub fn solution_set(g: &FiniteGroup, d: u64) -> Result<ElementSet> {
    if d == 0 || !(g.order() as u64).is_multiple_of(d) {
        return Err(Error::NotADivisor {
            divisor: d,
            order: g.order() as u64,
        });
    }
    let orders = g.orders();
    let indices: Vec<usize> = (0..g.order()).filter(|&x| d.is_multiple_of(orders[x])).collect();
    ElementSet::new(g, indices)
}

pub fn count_solutions(g: &FiniteGroup, d: u64) -> Result<SolutionCount> {
    if d == 0 || !(g.order() as u64).is_multiple_of(d) {
        return Err(Error::NotADivisor {
            divisor: d,
            order: g.order() as u64,
        });
    }
    let orders = g.orders();
    let count = exec::count(g.order(), |x| d.is_multiple_of(orders[x]));
    let exact = count == d;
    let (subgroup, normal) = if exact {
        let set = solution_set(g, d)?;
        let sub = g.is_subgroup(&set);
        let norm = sub && g.is_normal(&set).expect("set verified as a subgroup");
        (Some(sub), Some(norm))
    } else {
        (None, None)
    };
    Ok(SolutionCount {
        divisor: d,
        count,
        multiple_of_divisor: count % d == 0 && count > 0,
        exact,
        subgroup,
        normal,
    })
}

/// One [`SolutionCount`] per divisor of |G|, ascending.
pub fn frobenius_sweep(g: &FiniteGroup) -> Result<Vec<SolutionCount>> {
    arith::divisors(g.order() as u64)?
        .into_iter()
        .map(|d| count_solutions(g, d))
        .collect()
}
