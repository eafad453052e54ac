//! Finite groups as dense Cayley tables, plus the permutation machinery used
//! to build them from generators.
//!
//! A [`FiniteGroup`] is immutable after construction: a flattened row-major
//! multiplication table over element indices `0..n`, with the identity at
//! index 0. Element orders are computed once on demand and cached.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exec;

/// Groups built from generators refuse to grow past this many elements
/// unless the caller raises the cap explicitly.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// Ingested multiplication tables are checked for associativity (an O(n³)
/// scan) only up to this order; larger tables are rejected rather than
/// trusted.
pub const ASSOC_CHECK_BOUND: usize = 512;

/// A permutation of `{0, …, degree−1}` in image form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Validates that `images` is a bijection on `0..images.len()`.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            let idx = im as usize;
            if idx >= n {
                return Err(Error::BadPermutation(format!(
                    "image {im} out of range for degree {n}"
                )));
            }
            if seen[idx] {
                return Err(Error::BadPermutation(format!("image {im} repeated")));
            }
            seen[idx] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// `self` then `other`: the result maps x ↦ other(self(x)).
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i as u32 == im)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation on 1-based points, fixed points omitted; identity is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.image(start) == start {
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
                first = false;
                p = self.image(p);
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A finite group given by its full multiplication table.
pub struct FiniteGroup {
    label: String,
    n: usize,
    /// Row-major: `table[a * n + b]` is the index of a·b.
    table: Vec<u32>,
    orders: OnceLock<Vec<u64>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.n)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Builds a group from an untrusted table, verifying the identity row and
    /// column, the Latin-square property, and — for orders up to
    /// [`ASSOC_CHECK_BOUND`] — full associativity. Larger untrusted tables
    /// are rejected with [`Error::UncheckableTable`].
    pub fn from_table(label: impl Into<String>, n: usize, table: Vec<u32>) -> Result<Self> {
        let g = Self::from_parts(label, n, table)?;
        if g.n > ASSOC_CHECK_BOUND {
            return Err(Error::UncheckableTable {
                order: g.n,
                bound: ASSOC_CHECK_BOUND,
            });
        }
        g.check_associativity()?;
        Ok(g)
    }

    /// Crate-internal constructor for tables that are associative by
    /// construction (closures of permutations, product tables). Identity and
    /// Latin-square checks still run; associativity is not re-verified.
    pub(crate) fn from_parts(
        label: impl Into<String>,
        n: usize,
        table: Vec<u32>,
    ) -> Result<Self> {
        let g = FiniteGroup {
            label: label.into(),
            n,
            table,
            orders: OnceLock::new(),
        };
        g.check_shape()?;
        g.check_identity_and_latin()?;
        Ok(g)
    }

    fn check_shape(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::ZeroInput);
        }
        if self.table.len() != self.n * self.n {
            return Err(Error::TableLaw {
                law: "shape",
                row: self.table.len(),
                col: self.n * self.n,
            });
        }
        if let Some(pos) = self.table.iter().position(|&v| v as usize >= self.n) {
            return Err(Error::TableLaw {
                law: "range",
                row: pos / self.n,
                col: pos % self.n,
            });
        }
        Ok(())
    }

    fn check_identity_and_latin(&self) -> Result<()> {
        let n = self.n;
        for a in 0..n {
            if self.table[a] as usize != a {
                return Err(Error::TableLaw {
                    law: "identity",
                    row: 0,
                    col: a,
                });
            }
            if self.table[a * n] as usize != a {
                return Err(Error::TableLaw {
                    law: "identity",
                    row: a,
                    col: 0,
                });
            }
        }
        let mut seen = vec![false; n];
        for a in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..n {
                let v = self.table[a * n + b] as usize;
                if seen[v] {
                    return Err(Error::TableLaw {
                        law: "row",
                        row: a,
                        col: b,
                    });
                }
                seen[v] = true;
            }
        }
        for b in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for a in 0..n {
                let v = self.table[a * n + b] as usize;
                if seen[v] {
                    return Err(Error::TableLaw {
                        law: "column",
                        row: a,
                        col: b,
                    });
                }
                seen[v] = true;
            }
        }
        Ok(())
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.table[a * n + b] as usize;
                for c in 0..n {
                    let bc = self.table[b * n + c] as usize;
                    if self.table[ab * n + c] != self.table[a * n + bc] {
                        return Err(Error::TableLaw {
                            law: "associativity",
                            row: a,
                            col: b,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Closes a generating set of permutations into a full group via
    /// breadth-first products, aborting once more than `cap` elements appear.
    /// Element 0 is the identity; new elements are numbered in discovery
    /// order, which makes the table deterministic for a fixed generator list.
    pub fn close_generators(
        label: impl Into<String>,
        generators: &[Permutation],
        cap: usize,
    ) -> Result<Self> {
        let degree = generators.first().map_or(0, Permutation::degree);
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }

        let mut elements = vec![Permutation::identity(degree)];
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);

        let mut frontier = 0usize;
        while frontier < elements.len() {
            let current = elements[frontier].clone();
            for g in generators {
                let next = current.compose(g)?;
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded {
                            order: elements.len() + 1,
                            cap,
                        });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            frontier += 1;
        }

        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let prod = elements[a].compose(&elements[b])?;
                table[a * n + b] = index[&prod] as u32;
            }
        }
        Self::from_parts(label, n, table)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        assert!(a < self.n && b < self.n, "element index out of range");
        self.table[a * self.n + b] as usize
    }

    /// a^k by binary exponentiation; a^0 is the identity.
    pub fn power(&self, a: usize, mut k: u64) -> usize {
        assert!(a < self.n, "element index out of range");
        let mut base = a;
        let mut acc = 0usize;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn inverse(&self, a: usize) -> usize {
        let o = self.element_order(a);
        self.power(a, o - 1)
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.orders()[a]
    }

    /// Orders of all elements, computed on first use and cached. Each order
    /// is found by repeated multiplication, so the cost is O(Σ o(x)).
    pub fn orders(&self) -> &[u64] {
        self.orders.get_or_init(|| {
            exec::map_indexed(self.n, |a| {
                let mut x = a;
                let mut o = 1u64;
                while x != 0 {
                    x = self.mul(x, a);
                    o += 1;
                }
                o
            })
        })
    }

    /// True when the subset is closed under products and inverses (and hence
    /// is a subgroup; nonempty subsets of a finite group need only closure
    /// under multiplication, which is what we test).
    pub fn is_subgroup(&self, subset: &ElementSet) -> bool {
        let members: Vec<bool> = {
            let mut m = vec![false; self.n];
            for &i in subset.indices() {
                m[i] = true;
            }
            m
        };
        if !members[0] {
            return false;
        }
        subset
            .indices()
            .iter()
            .all(|&a| subset.indices().iter().all(|&b| members[self.mul(a, b)]))
    }

    /// Whether a subgroup is normal: g·h·g⁻¹ stays inside for every g in the
    /// group and h in the subset. Errs if the subset is not a subgroup.
    pub fn is_normal(&self, subset: &ElementSet) -> Result<bool> {
        if !self.is_subgroup(subset) {
            return Err(Error::NotASubgroup);
        }
        let members: Vec<bool> = {
            let mut m = vec![false; self.n];
            for &i in subset.indices() {
                m[i] = true;
            }
            m
        };
        for g in 0..self.n {
            let ginv = self.inverse(g);
            for &h in subset.indices() {
                if !members[self.mul(self.mul(g, h), ginv)] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// A validated, sorted, duplicate-free set of element indices of one group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSet {
    indices: Vec<usize>,
}

impl ElementSet {
    pub fn new(group: &FiniteGroup, mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        indices.dedup();
        if let Some(&bad) = indices.iter().find(|&&i| i >= group.order()) {
            return Err(Error::IndexRange {
                index: bad,
                order: group.order(),
            });
        }
        Ok(ElementSet { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.indices.binary_search(&index).is_ok()
    }
}
