//! Mechanical verification harnesses: join decomposition, basic
//! polynomial properties, wheel characterization over exhaustive labeled
//! corpora, coefficient-formula consistency, and unimodality sweeps.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::closed_forms::{self, ClosedFormError};
use crate::engine::{
    alliance_polynomial_with, exact_alliance_index, is_connected_subset, EngineError,
    EngineOptions, VertexSubset,
};
use crate::graph::{disjoint_union, join, Graph, GraphError};
use crate::poly::{AlliancePolynomial, PolyError};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    ClosedForm(#[from] ClosedFormError),
    #[error("join parts must be nonempty")]
    EmptyPart,
    #[error("decomposition residual differs from the direct mixed-subset enumeration")]
    ResidualMismatch {
        residual: AlliancePolynomial,
        direct: AlliancePolynomial,
    },
    #[error("labeled exhaustion supports order <= {max}, got {got}")]
    EnumerationTooLarge { max: usize, got: usize },
}

// ---------------------------------------------------------------------------
// Join decomposition
// ---------------------------------------------------------------------------

/// Decomposition of `A(G1+G2;x)` into the part polynomials plus the mixed
/// residual. The residual is recomputed independently from the subsets
/// meeting both parts; construction fails if the two routes disagree or a
/// negative coefficient appears.
#[derive(Clone, Debug)]
pub struct JoinReport {
    pub lhs: AlliancePolynomial,
    pub part1: AlliancePolynomial,
    pub part2: AlliancePolynomial,
    pub residual: AlliancePolynomial,
    pub residual_at_one: u128,
    /// `(2^n1 - 1)(2^n2 - 1)`.
    pub expected_at_one: u128,
    pub residual_degree: usize,
    /// Degree of `A(G1 ∪ G2;x)`, recorded alongside the residual degree
    /// for inspection; the two are not asserted equal.
    pub union_degree: usize,
}

impl JoinReport {
    pub fn passed(&self) -> bool {
        self.residual_at_one == self.expected_at_one
    }

    pub fn degrees_match(&self) -> bool {
        self.residual_degree == self.union_degree
    }
}

pub fn check_join_theorem(
    g1: &Graph,
    g2: &Graph,
    options: &EngineOptions,
) -> Result<JoinReport, VerifyError> {
    let n1 = g1.order();
    let n2 = g2.order();
    if n1 == 0 || n2 == 0 {
        return Err(VerifyError::EmptyPart);
    }
    let joined = join(g1, g2)?;
    let lhs = alliance_polynomial_with(&joined, options)?;
    let part1 = alliance_polynomial_with(g1, options)?;
    let part2 = alliance_polynomial_with(g2, options)?;
    // A negative coefficient here would falsify the decomposition.
    let residual = lhs.checked_sub(&part1)?.checked_sub(&part2)?;

    let direct = mixed_subset_polynomial(&joined, n1);
    if direct != residual {
        return Err(VerifyError::ResidualMismatch { residual, direct });
    }

    let union_poly = alliance_polynomial_with(&disjoint_union(g1, g2)?, options)?;
    let residual_at_one = residual.eval_at_one();
    let expected_at_one = ((1u128 << n1) - 1) * ((1u128 << n2) - 1);
    Ok(JoinReport {
        residual_degree: residual.degrees()?.0,
        union_degree: union_poly.degrees()?.0,
        lhs,
        part1,
        part2,
        residual,
        residual_at_one,
        expected_at_one,
    })
}

/// Direct enumeration of the subsets meeting both parts of a join. Such
/// subsets are automatically connected, every cross pair being adjacent.
fn mixed_subset_polynomial(joined: &Graph, n1: usize) -> AlliancePolynomial {
    let n = joined.order();
    let low = VertexSubset::full(n1).bits();
    let high = VertexSubset::full(n).bits() & !low;
    let mut terms = Vec::new();
    for mask in 1..=VertexSubset::full(n).bits() {
        if mask & low == 0 || mask & high == 0 {
            continue;
        }
        let s = VertexSubset::from_bits(mask);
        debug_assert!(is_connected_subset(joined, s));
        let k = exact_alliance_index(joined, s).expect("nonempty");
        terms.push(((n as i32 + k.value()) as usize, 1));
    }
    AlliancePolynomial::from_terms(n, &terms)
}

// ---------------------------------------------------------------------------
// Basic polynomial properties
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct LemmaCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Per-graph outcome of the basic-property suite.
#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Checks the basic coefficient identities of an alliance polynomial
/// against its host graph: the two lowest coefficients count maximum- and
/// next-to-maximum-degree vertices, the value at 1 counts connected
/// induced subgraphs (recomputed by an alliance-free counter) and stays
/// below `2^n`, the top coefficient counts regular components, and the
/// degree bounds hold for connected hosts.
pub fn check_basic_properties(
    g: &Graph,
    options: &EngineOptions,
) -> Result<LemmaReport, VerifyError> {
    let n = g.order();
    let p = alliance_polynomial_with(g, options)?;
    let max_deg = g.max_degree();
    let min_deg = g.min_degree();
    fn equals(name: &'static str, got: u128, want: u128) -> LemmaCheck {
        LemmaCheck {
            name,
            passed: got == want,
            detail: format!("got {got}, want {want}"),
        }
    }
    let count_degree = |d: usize| -> u128 { (0..n).filter(|&v| g.degree(v) == d).count() as u128 };

    let mut checks = Vec::new();
    checks.push(equals(
        "coefficient at n-max_degree counts max-degree vertices",
        p.coefficient(n - max_deg),
        count_degree(max_deg),
    ));
    let next_count = if max_deg == 0 {
        0
    } else {
        count_degree(max_deg - 1)
    };
    checks.push(equals(
        "coefficient at n-max_degree+1 counts next-degree vertices",
        p.coefficient(n - max_deg + 1),
        next_count,
    ));
    checks.push(equals(
        "value at 1 counts connected induced subgraphs",
        p.eval_at_one(),
        count_connected_induced_subgraphs(g),
    ));
    checks.push(LemmaCheck {
        name: "value at 1 below 2^n",
        passed: p.eval_at_one() < 1 << n,
        detail: format!("got {}, bound {}", p.eval_at_one(), 1u128 << n),
    });
    let regular = g
        .components()
        .iter()
        .filter(|&&comp| {
            VertexSubset::from_bits(comp)
                .iter()
                .all(|v| g.degree(v) == max_deg)
        })
        .count() as u128;
    checks.push(equals(
        "coefficient at n+max_degree counts regular components",
        p.coefficient(n + max_deg),
        regular,
    ));
    let (deg, deg_min) = p.degrees()?;
    checks.push(LemmaCheck {
        name: "minimum exponent is n-max_degree",
        passed: deg_min == n - max_deg,
        detail: format!("got {deg_min}, want {}", n - max_deg),
    });
    if g.is_connected() {
        checks.push(LemmaCheck {
            name: "degree within [n+min_degree, n+max_degree]",
            passed: n + min_deg <= deg && deg <= n + max_deg,
            detail: format!("got {deg}, bounds [{}, {}]", n + min_deg, n + max_deg),
        });
    }
    Ok(LemmaReport { checks })
}

/// Counts nonempty connected induced subgraphs without touching alliance
/// indices: plain adjacency-list depth-first search per subset.
pub fn count_connected_induced_subgraphs(g: &Graph) -> u128 {
    let n = g.order();
    let neighbors: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&w| g.has_edge(v, w)).collect())
        .collect();
    let mut count = 0u128;
    let mut stack = Vec::with_capacity(n);
    for mask in 1u64..=VertexSubset::full(n).bits() {
        let members: Vec<usize> = VertexSubset::from_bits(mask).iter().collect();
        stack.clear();
        stack.push(members[0]);
        let mut seen = 1u64 << members[0];
        while let Some(v) = stack.pop() {
            for &w in &neighbors[v] {
                if mask >> w & 1 == 1 && seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    stack.push(w);
                }
            }
        }
        if seen == mask {
            count += 1;
        }
    }
    count
}

// ---------------------------------------------------------------------------
// Labeled corpora and characterization
// ---------------------------------------------------------------------------

/// Maximum order for exhaustive labeled generation (`2^21` graphs at 7).
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// All `2^(n(n-1)/2)` labeled simple graphs on `n` vertices, one per
/// edge-mask integer, ascending.
pub fn enumerate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, VerifyError> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(VerifyError::EnumerationTooLarge {
            max: MAX_ENUMERATION_ORDER,
            got: n,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    Ok((0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(t, _)| mask >> t & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).expect("valid edge mask")
    }))
}

/// Corpus graphs grouped by alliance polynomial.
#[derive(Clone, Debug)]
pub struct CollisionReport {
    /// Canonical polynomial text -> corpus positions sharing it.
    pub groups: BTreeMap<String, Vec<usize>>,
    /// Corpus positions whose polynomial equals the target.
    pub target_matches: Vec<usize>,
    /// Positions skipped (graph order above the enumeration cap), with
    /// reasons.
    pub skipped: Vec<(usize, String)>,
}

/// Groups a graph corpus by alliance polynomial and singles out the
/// matches of `target`. Positions are 0-based stream indices. Graphs over
/// the enumeration cap are skipped and reported, not fatal.
pub fn characterize(
    corpus: impl IntoIterator<Item = Graph>,
    target: &AlliancePolynomial,
    options: &EngineOptions,
) -> CollisionReport {
    let mut groups: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    let mut target_matches = Vec::new();
    let mut skipped = Vec::new();
    let target_text = target.canonical_text();
    for (pos, g) in corpus.into_iter().enumerate() {
        match alliance_polynomial_with(&g, options) {
            Ok(p) => {
                let text = p.canonical_text();
                if text == target_text {
                    target_matches.push(pos);
                }
                groups.entry(text).or_default().push(pos);
            }
            Err(e) => skipped.push((pos, e.to_string())),
        }
    }
    CollisionReport {
        groups,
        target_matches,
        skipped,
    }
}

/// Whether `g` is a labeling of the wheel `W_n`: one vertex adjacent to
/// all others, the rest of degree 3 inducing a connected 2-regular
/// subgraph. `W_4` is the complete graph on 4 vertices.
pub fn is_wheel_labeling(g: &Graph, n: usize) -> bool {
    if g.order() != n || n < 4 {
        return false;
    }
    if n == 4 {
        return g.size() == 6;
    }
    let centers: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 1).collect();
    let [center] = centers[..] else {
        return false;
    };
    if (0..n).any(|v| v != center && g.degree(v) != 3) {
        return false;
    }
    let rim = VertexSubset::from_bits(VertexSubset::full(n).bits() & !(1 << center));
    let two_regular = rim
        .iter()
        .all(|v| (g.row(v) & rim.bits()).count_ones() == 2);
    two_regular && is_connected_subset(g, rim)
}

// ---------------------------------------------------------------------------
// Unimodality sweeps
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct UnimodalEntry {
    pub order: usize,
    pub unimodal: bool,
    pub mode_exponent: Option<usize>,
    pub expected_mode_exponent: usize,
    pub all_exponents_odd: bool,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct UnimodalReport {
    pub entries: Vec<UnimodalEntry>,
}

impl UnimodalReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }
}

/// For every even order `2n <= max_order`, asserts via closed forms that
/// `A(W_2n;x)` is unimodal with mode exponent `2n-1` (alliance index -1)
/// and only odd exponents.
pub fn check_wheel_unimodality(max_order: usize) -> Result<UnimodalReport, VerifyError> {
    let mut entries = Vec::new();
    let mut order = 4;
    while order <= max_order {
        let p = closed_forms::wheel_polynomial(order)?;
        let verdict = p.is_unimodal()?;
        let all_odd = p.coeffs().keys().all(|e| e % 2 == 1);
        let expected = order - 1;
        entries.push(UnimodalEntry {
            order,
            unimodal: verdict.unimodal,
            mode_exponent: verdict.mode_exponent,
            expected_mode_exponent: expected,
            all_exponents_odd: all_odd,
            passed: verdict.unimodal && verdict.mode_exponent == Some(expected) && all_odd,
        });
        order += 2;
    }
    Ok(UnimodalReport { entries })
}

#[derive(Clone, Debug)]
pub struct PathUnimodalEntry {
    pub order: usize,
    pub unimodal: bool,
    pub expected_unimodal: bool,
}

/// Brute-force check that `A(P_n;x)` is unimodal exactly for
/// `2 <= n <= 4`.
pub fn check_path_unimodality(
    max_order: usize,
    options: &EngineOptions,
) -> Result<Vec<PathUnimodalEntry>, VerifyError> {
    let mut entries = Vec::new();
    for n in 2..=max_order {
        let g = crate::graph::generate(crate::graph::GraphFamily::Path(n))?;
        let p = alliance_polynomial_with(&g, options)?;
        entries.push(PathUnimodalEntry {
            order: n,
            unimodal: p.is_unimodal()?.unimodal,
            expected_unimodal: (2..=4).contains(&n),
        });
    }
    Ok(entries)
}

// ---------------------------------------------------------------------------
// Coefficient-formula consistency
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct DominanceEntry {
    pub order: usize,
    /// `(r, a_{order,r-1}, b_{order,r})` triples violating the dominance.
    pub failures: Vec<(usize, u128, u128)>,
}

impl DominanceEntry {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `a_{m,r-1} >= b_{m,r}` for `3 <= r <= m-1` on every even table
/// order `m <= max_order`. Even orders only: the dominance underpins the
/// even-wheel mode comparison and already fails at the odd order 5
/// (`a_{5,3} = 2 < b_{5,4} = 4`).
pub fn check_coefficient_dominance(max_order: usize) -> Result<Vec<DominanceEntry>, VerifyError> {
    let mut entries = Vec::new();
    let mut m = 4;
    while m <= max_order {
        let mut failures = Vec::new();
        for r in 3..=m - 1 {
            let a = closed_forms::a_coeff(m, r - 1)?;
            let b = closed_forms::b_coeff(m, r)?;
            if a < b {
                failures.push((r, a, b));
            }
        }
        entries.push(DominanceEntry { order: m, failures });
        m += 2;
    }
    Ok(entries)
}

#[derive(Clone, Debug)]
pub struct BcoeffEntry {
    pub n: usize,
    pub k: usize,
    pub formula: u128,
    pub string_oracle: u128,
    pub case_sum: u128,
}

impl BcoeffEntry {
    pub fn passed(&self) -> bool {
        self.formula == self.string_oracle && self.formula == self.case_sum
    }
}

/// Checks `b_{n,k}` three ways for all `4 <= n <= max_n`,
/// `2 <= k <= n-1`: closed formula, exhaustive cyclic-string scan, and
/// the four-case binomial split.
pub fn bcoeff_consistency(max_n: usize) -> Result<Vec<BcoeffEntry>, VerifyError> {
    let mut entries = Vec::new();
    for n in 4..=max_n {
        for k in 2..=n - 1 {
            entries.push(BcoeffEntry {
                n,
                k,
                formula: closed_forms::b_coeff(n, k)?,
                string_oracle: closed_forms::cyclic_string_oracle(n, k)?,
                case_sum: closed_forms::case_sum(n, k),
            });
        }
    }
    Ok(entries)
}

// ---------------------------------------------------------------------------
// Seeded random instances
// ---------------------------------------------------------------------------

/// One G(n, p) draw; `p` itself is drawn per graph so densities vary.
pub fn random_graph(rng: &mut impl Rng, order: usize) -> Graph {
    let p: f64 = rng.random();
    let mut edges = Vec::new();
    for u in 0..order {
        for v in u + 1..order {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(order, &edges).expect("generated edges valid")
}

/// Deterministic suite of random graphs with orders in `1..=max_order`.
pub fn random_graph_suite(seed: u64, count: usize, max_order: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let order = rng.random_range(1..=max_order);
            random_graph(&mut rng, order)
        })
        .collect()
}

/// Deterministic suite of graph pairs with total order at most
/// `max_total_order` (each part nonempty).
pub fn random_pair_suite(seed: u64, count: usize, max_total_order: usize) -> Vec<(Graph, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n1 = rng.random_range(1..=max_total_order - 1);
            let n2 = rng.random_range(1..=max_total_order - n1);
            let g1 = random_graph(&mut rng, n1);
            let g2 = random_graph(&mut rng, n2);
            (g1, g2)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::{cycle_polynomial, wheel_polynomial};
    use crate::graph::{generate, GraphFamily};

    fn opts() -> EngineOptions {
        EngineOptions::default()
    }

    #[test]
    fn join_e1_c4() {
        let e1 = generate(GraphFamily::Empty(1)).unwrap();
        let c4 = generate(GraphFamily::Cycle(4)).unwrap();
        let report = check_join_theorem(&e1, &c4, &opts()).unwrap();
        assert_eq!(
            report.residual.canonical_text(),
            "4*x^3 + 2*x^4 + 4*x^5 + 4*x^6 + 1*x^8"
        );
        assert_eq!(report.residual_at_one, 15);
        assert_eq!(report.expected_at_one, 15);
        assert!(report.passed());
        // Known gap between the residual degree and the union degree.
        assert_eq!(report.residual_degree, 8);
        assert_eq!(report.union_degree, 7);
        assert!(!report.degrees_match());
    }

    #[test]
    fn join_e1_e1() {
        let e1 = generate(GraphFamily::Empty(1)).unwrap();
        let report = check_join_theorem(&e1, &e1, &opts()).unwrap();
        assert_eq!(report.lhs.canonical_text(), "2*x^1 + 1*x^3");
        assert_eq!(report.residual.canonical_text(), "1*x^3");
        assert_eq!(report.residual_at_one, 1);
    }

    #[test]
    fn join_e1_c5() {
        let e1 = generate(GraphFamily::Empty(1)).unwrap();
        let c5 = generate(GraphFamily::Cycle(5)).unwrap();
        let report = check_join_theorem(&e1, &c5, &opts()).unwrap();
        assert_eq!(report.residual_at_one, 31);
        assert!(report.passed());
    }

    #[test]
    fn join_rejects_empty_part() {
        let e0 = Graph::empty(0).unwrap();
        let c3 = generate(GraphFamily::Cycle(3)).unwrap();
        assert!(matches!(
            check_join_theorem(&e0, &c3, &opts()),
            Err(VerifyError::EmptyPart)
        ));
    }

    #[test]
    fn lemma_c4() {
        let c4 = generate(GraphFamily::Cycle(4)).unwrap();
        let report = check_basic_properties(&c4, &opts()).unwrap();
        assert!(report.passed(), "{:?}", report.checks);
    }

    #[test]
    fn lemma_w5() {
        let w5 = generate(GraphFamily::Wheel(5)).unwrap();
        let report = check_basic_properties(&w5, &opts()).unwrap();
        assert!(report.passed(), "{:?}", report.checks);
        // Degrees {4,3,3,3,3}: one max-degree vertex, four next.
        let p = alliance_polynomial_with(&w5, &opts()).unwrap();
        assert_eq!(p.coefficient(1), 1);
        assert_eq!(p.coefficient(2), 4);
    }

    #[test]
    fn lemma_disconnected() {
        let c3 = generate(GraphFamily::Cycle(3)).unwrap();
        let c4 = generate(GraphFamily::Cycle(4)).unwrap();
        let u = disjoint_union(&c3, &c4).unwrap();
        let report = check_basic_properties(&u, &opts()).unwrap();
        assert!(report.passed(), "{:?}", report.checks);
        // Two 2-regular components.
        let p = alliance_polynomial_with(&u, &opts()).unwrap();
        assert_eq!(p.coefficient(u.order() + 2), 2);
    }

    #[test]
    fn lemma_empty_graph() {
        let e4 = generate(GraphFamily::Empty(4)).unwrap();
        let report = check_basic_properties(&e4, &opts()).unwrap();
        assert!(report.passed(), "{:?}", report.checks);
    }

    #[test]
    fn independent_counter_simple_cases() {
        let c4 = generate(GraphFamily::Cycle(4)).unwrap();
        // 4 singletons + 4 arcs of 2 + 4 arcs of 3 + full cycle.
        assert_eq!(count_connected_induced_subgraphs(&c4), 13);
        let e3 = generate(GraphFamily::Empty(3)).unwrap();
        assert_eq!(count_connected_induced_subgraphs(&e3), 3);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled_graphs(2).unwrap().count(), 2);
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        let four: Vec<Graph> = enumerate_labeled_graphs(4).unwrap().collect();
        assert_eq!(four.len(), 64);
        let connected = four.iter().filter(|g| g.is_connected()).count();
        assert_eq!(connected, 38);
        assert!(enumerate_labeled_graphs(8).is_err());
    }

    #[test]
    fn characterize_order_4() {
        let corpus = enumerate_labeled_graphs(4).unwrap();
        let target = wheel_polynomial(4).unwrap();
        let report = characterize(corpus, &target, &opts());
        // The only labeled graph matching A(W_4;x) is the complete graph,
        // i.e. the all-ones edge mask.
        assert_eq!(report.target_matches, vec![63]);
        assert!(report.skipped.is_empty());
        let total: usize = report.groups.values().map(|v| v.len()).sum();
        assert_eq!(total, 64);
    }

    #[test]
    fn characterize_small_corpus() {
        let c6 = generate(GraphFamily::Cycle(6)).unwrap();
        let w6 = generate(GraphFamily::Wheel(6)).unwrap();
        let target = wheel_polynomial(6).unwrap();
        let report = characterize([c6, w6], &target, &opts());
        assert_eq!(report.target_matches, vec![1]);
        assert_eq!(report.groups.len(), 2);
    }

    #[test]
    fn characterize_skips_over_cap() {
        let big = generate(GraphFamily::Path(6)).unwrap();
        let small = generate(GraphFamily::Cycle(3)).unwrap();
        let target = cycle_polynomial(3).unwrap();
        let options = EngineOptions { cap: 4, threads: 1 };
        let report = characterize([big, small], &target, &options);
        assert_eq!(report.skipped.len(), 1);
        assert_eq!(report.skipped[0].0, 0);
        assert_eq!(report.target_matches, vec![1]);
    }

    #[test]
    fn wheel_labeling_recognizer() {
        for n in 4..=8 {
            let w = generate(GraphFamily::Wheel(n)).unwrap();
            assert!(is_wheel_labeling(&w, n), "W_{n}");
            assert!(!is_wheel_labeling(&w, n + 1));
        }
        let c6 = generate(GraphFamily::Cycle(6)).unwrap();
        assert!(!is_wheel_labeling(&c6, 6));
        let s6 = generate(GraphFamily::Star(6)).unwrap();
        assert!(!is_wheel_labeling(&s6, 6));
        // Right degree sequence, disconnected rim: E_1 + (C_3 ∪ C_4).
        let c3 = generate(GraphFamily::Cycle(3)).unwrap();
        let c4 = generate(GraphFamily::Cycle(4)).unwrap();
        let rim = disjoint_union(&c3, &c4).unwrap();
        let e1 = generate(GraphFamily::Empty(1)).unwrap();
        let g = join(&e1, &rim).unwrap();
        assert!(!is_wheel_labeling(&g, 8));
    }

    #[test]
    fn wheel_unimodality_sweep() {
        let report = check_wheel_unimodality(12).unwrap();
        assert!(report.passed(), "{:?}", report.entries);
        assert_eq!(report.entries.len(), 5); // 4, 6, 8, 10, 12
        assert_eq!(report.entries[1].mode_exponent, Some(5));
    }

    #[test]
    fn path_unimodality_sweep() {
        let entries = check_path_unimodality(10, &opts()).unwrap();
        for e in &entries {
            assert_eq!(e.unimodal, e.expected_unimodal, "P_{}", e.order);
        }
    }

    #[test]
    fn bcoeff_consistency_small() {
        let entries = bcoeff_consistency(12).unwrap();
        assert!(entries.iter().all(|e| e.passed()));
    }

    #[test]
    fn coefficient_dominance_even_orders() {
        let entries = check_coefficient_dominance(16).unwrap();
        assert_eq!(entries.len(), 7);
        for e in &entries {
            assert!(e.passed(), "order {}: {:?}", e.order, e.failures);
        }
    }

    #[test]
    fn random_suites_deterministic() {
        let a = random_graph_suite(7, 10, 8);
        let b = random_graph_suite(7, 10, 8);
        assert_eq!(a, b);
        for g in &a {
            g.check_invariants();
            assert!(g.order() >= 1 && g.order() <= 8);
        }
        let pairs = random_pair_suite(7, 10, 12);
        for (g1, g2) in &pairs {
            assert!(g1.order() + g2.order() <= 12);
            assert!(g1.order() >= 1 && g2.order() >= 1);
        }
    }

    #[test]
    fn disjoint_cycle_value_additivity_and_inequality() {
        // Compositions of n-1 into at least two parts, each part >= 3;
        // the union's subgraph count must stay below the single cycle's.
        fn compositions(total: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            if total == 0 {
                out.push(Vec::new());
                return out;
            }
            for first in 3..=total {
                for mut rest in compositions(total - first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        for n in 7..=16 {
            let single = ((n - 1) * (n - 1) - (n - 1) + 1) as u128;
            for parts in compositions(n - 1) {
                if parts.len() < 2 {
                    continue;
                }
                let mut g = generate(GraphFamily::Cycle(parts[0])).unwrap();
                for &p in &parts[1..] {
                    g = disjoint_union(&g, &generate(GraphFamily::Cycle(p)).unwrap()).unwrap();
                }
                let value = alliance_polynomial_with(&g, &opts()).unwrap().eval_at_one();
                let expected: u128 = parts.iter().map(|&p| (p * p - p + 1) as u128).sum();
                assert_eq!(value, expected, "additivity for {parts:?}");
                assert!(value < single, "inequality for {parts:?}");
            }
        }
    }
}
