//! Closed-form alliance polynomials for cycles and wheels.
//!
//! The wheel formula splits the subsets containing the center by whether
//! the rim part has an isolated vertex (`a` coefficients) or not (`b`
//! coefficients). `b_{n,k}` counts length-`(n-1)` labeled cyclic binary
//! strings with `k-1` ones and no isolated 1; [`cyclic_string_oracle`]
//! recounts them exhaustively and [`case_counts`] reproduces the four-case
//! split of that count.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::poly::AlliancePolynomial;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClosedFormError {
    #[error("{what} requires order >= {min}, got {got}")]
    OrderTooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },
    #[error("coefficient index k={k} outside 2..={max} for order {n}")]
    IndexOutOfRange { n: usize, k: usize, max: usize },
    #[error("b-coefficient sum for (n={n}, k={k}) is not an integer")]
    NonIntegralSum { n: usize, k: usize },
    #[error("a-coefficient for (n={n}, k={k}) would be negative")]
    NegativeCoefficient { n: usize, k: usize },
    #[error("string scan supports n <= {max}, got {got}")]
    ScanTooLarge { max: usize, got: usize },
}

/// Binomial coefficient with the convention `C(a,b) = 0` for `a < 0`,
/// `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> u128 {
    if a < 0 || b < 0 || b > a {
        return 0;
    }
    let (a, b) = (a as u128, b.min(a - b) as u128);
    let mut result = 1u128;
    for i in 1..=b {
        // Exact at every step: result holds C(a, i-1) * ... scaled so the
        // division below cannot truncate.
        result = result * (a - b + i) / i;
    }
    result
}

fn check_nk(n: usize, k: usize) -> Result<(), ClosedFormError> {
    if n < 4 {
        return Err(ClosedFormError::OrderTooSmall {
            what: "wheel coefficient",
            min: 4,
            got: n,
        });
    }
    if k < 2 || k > n - 1 {
        return Err(ClosedFormError::IndexOutOfRange { n, k, max: n - 1 });
    }
    Ok(())
}

/// `b_{n,k}`: subsets of the wheel `W_n` of size `k` containing the
/// center whose rim part has no isolated vertex. Evaluates
/// `(n-1) * sum_r C(n-k-1, r-1) * C(k-1-r, r) / (k-1-r)` in exact
/// rational arithmetic; individual terms need not be integers, so the sum
/// is only asserted integral at the end.
pub fn b_coeff(n: usize, k: usize) -> Result<u128, ClosedFormError> {
    check_nk(n, k)?;
    let (n, k) = (n as i64, k as i64);
    let mut total = BigRational::zero();
    for r in 1..=(k - 1) / 2 {
        let numerator =
            BigInt::from(binomial(n - k - 1, r - 1)) * BigInt::from(binomial(k - 1 - r, r));
        total += BigRational::new(numerator, BigInt::from(k - 1 - r));
    }
    total *= BigInt::from(n - 1);
    if !total.is_integer() || total.is_negative() {
        return Err(ClosedFormError::NonIntegralSum {
            n: n as usize,
            k: k as usize,
        });
    }
    Ok(total
        .to_integer()
        .to_u128()
        .expect("b coefficient bounded by C(61,30)"))
}

/// `a_{n,k} = C(n-1, k-1) - b_{n,k}`: the complementary count, rim part
/// containing at least one isolated vertex.
pub fn a_coeff(n: usize, k: usize) -> Result<u128, ClosedFormError> {
    check_nk(n, k)?;
    let choose = binomial(n as i64 - 1, k as i64 - 1);
    let b = b_coeff(n, k)?;
    choose
        .checked_sub(b)
        .ok_or(ClosedFormError::NegativeCoefficient { n, k })
}

/// Exhaustive recount of `b_{n,k}`: scans all `2^(n-1)` labeled binary
/// strings on a ring and keeps those with exactly `k-1` ones and no
/// cyclic `0,1,0` pattern. Rotated strings count separately.
pub fn cyclic_string_oracle(n: usize, k: usize) -> Result<u128, ClosedFormError> {
    const SCAN_MAX: usize = 26;
    check_nk(n, k)?;
    if n > SCAN_MAX {
        return Err(ClosedFormError::ScanTooLarge {
            max: SCAN_MAX,
            got: n,
        });
    }
    let len = n - 1;
    let ones = (k - 1) as u32;
    let mut count = 0u128;
    for string in 0u32..1 << len {
        if string.count_ones() != ones {
            continue;
        }
        let isolated = (0..len).any(|i| {
            string >> i & 1 == 1
                && string >> ((i + len - 1) % len) & 1 == 0
                && string >> ((i + 1) % len) & 1 == 0
        });
        if !isolated {
            count += 1;
        }
    }
    Ok(count)
}

/// The four binomial products that partition the no-isolated-one strings
/// with `r` blocks of ones, keyed by the first and last ring positions:
/// I both ends zero, II split block wrapping the seam with a single
/// leading 1, III block starting at the seam, IV block wrapping with two
/// or more leading 1s. Out-of-range binomials are zero.
pub fn case_counts(n: usize, k: usize, r: usize) -> (u128, u128, u128, u128) {
    let (n, k, r) = (n as i64, k as i64, r as i64);
    (
        binomial(n - k, r) * binomial(k - 2 - r, r - 1),
        binomial(n - k - 1, r - 1) * binomial(k - 2 - r, r - 1),
        binomial(n - k - 1, r - 1) * binomial(k - 2 - r, r - 1),
        binomial(n - k - 1, r - 1) * binomial(k - 2 - r, r),
    )
}

/// Sum of [`case_counts`] over the full block-count range
/// `1 <= r <= (k-1)/2`; equals `b_{n,k}`.
pub fn case_sum(n: usize, k: usize) -> u128 {
    (1..=(k - 1) / 2)
        .map(|r| {
            let (a, b, c, d) = case_counts(n, k, r);
            a + b + c + d
        })
        .sum()
}

/// The `a`/`b` coefficient table of a wheel, for `2 <= k <= n-1`.
#[derive(Clone, Debug)]
pub struct WheelCoefficientTable {
    n: usize,
    a: BTreeMap<usize, u128>,
    b: BTreeMap<usize, u128>,
}

impl WheelCoefficientTable {
    pub fn new(n: usize) -> Result<Self, ClosedFormError> {
        if n < 4 {
            return Err(ClosedFormError::OrderTooSmall {
                what: "wheel coefficient table",
                min: 4,
                got: n,
            });
        }
        let mut a = BTreeMap::new();
        let mut b = BTreeMap::new();
        for k in 2..=n - 1 {
            a.insert(k, a_coeff(n, k)?);
            b.insert(k, b_coeff(n, k)?);
        }
        Ok(WheelCoefficientTable { n, a, b })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Parity indicator: 1 for odd `n`, 0 for even `n`.
    pub fn xi(&self) -> u128 {
        (self.n % 2) as u128
    }

    pub fn a(&self, k: usize) -> u128 {
        self.a.get(&k).copied().unwrap_or(0)
    }

    pub fn b(&self, k: usize) -> u128 {
        self.b.get(&k).copied().unwrap_or(0)
    }

    pub fn a_entries(&self) -> &BTreeMap<usize, u128> {
        &self.a
    }

    pub fn b_entries(&self) -> &BTreeMap<usize, u128> {
        &self.b
    }
}

/// Closed-form `A(W_n;x)` for `n >= 4`, assembled from the single-vertex
/// and cycle polynomials, the binomial terms at odd exponents `2k-1`, the
/// collected `a` terms at `x^(n-1)`, the `b` terms at `x^n` (odd `n`
/// only) and `x^(n+1)`, and the leading `x^(n+3)`.
pub fn wheel_polynomial(n: usize) -> Result<AlliancePolynomial, ClosedFormError> {
    if n < 4 {
        return Err(ClosedFormError::OrderTooSmall {
            what: "wheel polynomial",
            min: 4,
            got: n,
        });
    }
    let table = WheelCoefficientTable::new(n)?;
    let mut terms: Vec<(usize, u128)> = vec![(1, 1)];
    // A(C_{n-1};x)
    terms.push((n - 3, (n - 1) as u128));
    terms.push((n - 1, ((n - 1) * (n - 3)) as u128));
    terms.push((n + 1, 1));
    for k in 2..=n / 2 {
        terms.push((2 * k - 1, binomial(n as i64 - 1, k as i64 - 1)));
    }
    let a_sum: u128 = (n / 2 + 1..=n - 1).map(|k| table.a(k)).sum();
    terms.push((n - 1, a_sum));
    if n % 2 == 1 {
        terms.push((n, table.b(n.div_ceil(2))));
    }
    let b_sum: u128 = (n.div_ceil(2) + 1..=n - 1).map(|k| table.b(k)).sum();
    terms.push((n + 1, b_sum));
    terms.push((n + 3, 1));
    Ok(AlliancePolynomial::from_terms(n, &terms))
}

/// Closed-form `A(C_n;x) = n x^(n-2) + n(n-2) x^n + x^(n+2)` for `n >= 3`.
pub fn cycle_polynomial(n: usize) -> Result<AlliancePolynomial, ClosedFormError> {
    if n < 3 {
        return Err(ClosedFormError::OrderTooSmall {
            what: "cycle polynomial",
            min: 3,
            got: n,
        });
    }
    Ok(AlliancePolynomial::from_terms(
        n,
        &[(n - 2, n as u128), (n, (n * (n - 2)) as u128), (n + 2, 1)],
    ))
}

/// `A(E_1;x) = x`.
pub fn e1_polynomial() -> AlliancePolynomial {
    AlliancePolynomial::from_terms(1, &[(1, 1)])
}

/// `A(K_n;x) = sum_k C(n,k) x^(2k-1)`: a size-`k` subset of the complete
/// graph is connected with exact index `2k-1-n`.
pub fn complete_polynomial(n: usize) -> Result<AlliancePolynomial, ClosedFormError> {
    if n < 1 {
        return Err(ClosedFormError::OrderTooSmall {
            what: "complete polynomial",
            min: 1,
            got: n,
        });
    }
    let terms: Vec<(usize, u128)> = (1..=n)
        .map(|k| (2 * k - 1, binomial(n as i64, k as i64)))
        .collect();
    Ok(AlliancePolynomial::from_terms(n, &terms))
}
