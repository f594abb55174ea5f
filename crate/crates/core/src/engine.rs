//! Brute-force alliance polynomial engine: exact index of a subset,
//! connected-subset testing, and enumeration of all nonempty subsets as
//! integer bit masks.

use std::sync::OnceLock;
use std::thread;

use thiserror::Error;

use crate::graph::Graph;
use crate::poly::AlliancePolynomial;

/// Default brute-force enumeration cap (vertices). Overridable via
/// [`EngineOptions`] and, in the CLI, the `ALLIANCE_CAP` environment
/// variable.
pub const DEFAULT_CAP: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("alliance index is undefined for the empty subset")]
    EmptySubset,
    #[error("order {order} exceeds the brute-force cap {cap}")]
    OrderExceedsCap { order: usize, cap: usize },
}

/// A set of vertices of a host graph, as a bit mask over `0..n-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexSubset(u64);

impl VertexSubset {
    pub const EMPTY: VertexSubset = VertexSubset(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSubset(bits)
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        VertexSubset(indices.iter().fold(0, |acc, &v| acc | 1 << v))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSubset(1 << v)
    }

    /// All vertices of a graph of order `n`.
    pub fn full(n: usize) -> Self {
        if n == 0 {
            VertexSubset(0)
        } else {
            VertexSubset(u64::MAX >> (64 - n))
        }
    }

    pub fn bits(&self) -> u64 {
        self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    /// Complement relative to a host graph of order `n`.
    pub fn complement(&self, n: usize) -> Self {
        VertexSubset(!self.0 & VertexSubset::full(n).0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }
}

/// The exact index `k_S` of a defensive alliance, an integer in
/// `[-Δ, Δ]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct AllianceIndex(i32);

impl AllianceIndex {
    pub fn new(k: i32) -> Self {
        AllianceIndex(k)
    }

    pub fn value(&self) -> i32 {
        self.0
    }
}

/// Enumeration controls for [`alliance_polynomial_with`].
#[derive(Clone, Copy, Debug)]
pub struct EngineOptions {
    /// Maximum graph order accepted for subset enumeration.
    pub cap: usize,
    /// Worker count; 0 picks the available parallelism.
    pub threads: usize,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            cap: DEFAULT_CAP,
            threads: 0,
        }
    }
}

/// Largest `k` such that `s` is a defensive `k`-alliance: the minimum
/// over members of `deg_inside - deg_outside`.
pub fn exact_alliance_index(g: &Graph, s: VertexSubset) -> Result<AllianceIndex, EngineError> {
    if s.is_empty() {
        return Err(EngineError::EmptySubset);
    }
    Ok(AllianceIndex(raw_index(g, s.bits())))
}

#[inline]
fn raw_index(g: &Graph, mask: u64) -> i32 {
    let mut k = i32::MAX;
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let inside = (g.row(v) & mask).count_ones() as i32;
        // deg_inside - deg_outside = 2*inside - deg(v)
        k = k.min(2 * inside - g.degree(v) as i32);
    }
    k
}

/// Whether the subgraph induced by `s` is connected (false for the empty
/// subset). Frontier expansion over adjacency rows masked with `s`.
pub fn is_connected_subset(g: &Graph, s: VertexSubset) -> bool {
    let bits = s.bits();
    if bits == 0 {
        return false;
    }
    connected_mask(g, bits)
}

#[inline]
fn connected_mask(g: &Graph, bits: u64) -> bool {
    let start = bits & bits.wrapping_neg();
    let mut reach = start;
    let mut frontier = start;
    while frontier != 0 {
        let mut expand = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            expand |= g.row(v);
        }
        frontier = expand & bits & !reach;
        reach |= frontier;
    }
    reach == bits
}

/// Alliance polynomial by exhaustive subset enumeration with default
/// options.
pub fn alliance_polynomial(g: &Graph) -> Result<AlliancePolynomial, EngineError> {
    alliance_polynomial_with(g, &EngineOptions::default())
}

/// Alliance polynomial by exhaustive subset enumeration.
///
/// Every nonempty connected subset contributes 1 to the coefficient of
/// `x^(n + k_S)`. The subset space may be partitioned into disjoint mask
/// ranges processed concurrently; partial counts merge by addition, so
/// the result is identical for every worker count.
pub fn alliance_polynomial_with(
    g: &Graph,
    options: &EngineOptions,
) -> Result<AlliancePolynomial, EngineError> {
    let n = g.order();
    if n > options.cap {
        return Err(EngineError::OrderExceedsCap {
            order: n,
            cap: options.cap,
        });
    }
    if n == 0 {
        return Ok(AlliancePolynomial::zero(0));
    }

    let full = VertexSubset::full(n).bits();
    let threads = resolve_threads(options.threads, full);
    let counts = if threads <= 1 {
        scan_range(g, 1, full)
    } else {
        // Disjoint contiguous ranges; merge order does not matter because
        // coefficients add exactly.
        let chunk = full / threads as u64 + 1;
        let mut merged = vec![0u128; 2 * n + 1];
        thread::scope(|scope| {
            let mut handles = Vec::with_capacity(threads);
            for t in 0..threads as u64 {
                let lo = 1 + t * chunk;
                let hi = (lo + chunk - 1).min(full);
                if lo > hi {
                    continue;
                }
                handles.push(scope.spawn(move || scan_range(g, lo, hi)));
            }
            for handle in handles {
                let partial = handle.join().expect("scan worker panicked");
                for (m, p) in merged.iter_mut().zip(partial) {
                    *m += p;
                }
            }
        });
        merged
    };

    let terms: Vec<(usize, u128)> = counts
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .collect();
    Ok(AlliancePolynomial::from_terms(n, &terms))
}

fn resolve_threads(requested: usize, masks: u64) -> usize {
    // Below ~64k subsets the spawn overhead dominates.
    if masks < 1 << 16 {
        return 1;
    }
    let t = if requested == 0 {
        default_parallelism()
    } else {
        requested
    };
    t.min(masks as usize)
}

/// `available_parallelism` reads cgroup files on Linux; cache it.
fn default_parallelism() -> usize {
    static PARALLELISM: OnceLock<usize> = OnceLock::new();
    *PARALLELISM.get_or_init(|| {
        thread::available_parallelism()
            .map(|p| p.get())
            .unwrap_or(1)
    })
}

/// Counts exact indices for every connected subset with mask in
/// `[lo, hi]`, returned as a dense exponent-indexed table.
fn scan_range(g: &Graph, lo: u64, hi: u64) -> Vec<u128> {
    let n = g.order();
    let mut counts = vec![0u128; 2 * n + 1];
    for mask in lo..=hi {
        if !connected_mask(g, mask) {
            continue;
        }
        let k = raw_index(g, mask);
        counts[(n as i32 + k) as usize] += 1;
    }
    counts
}
