//! Exact sparse alliance polynomials and the parity-aware unimodality
//! test.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::engine::AllianceIndex;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("subtraction would produce a negative coefficient at x^{exponent}")]
    NegativeCoefficient { exponent: usize },
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
}

/// Alliance polynomial of a host graph of order `order`: a sparse map
/// from exponent `order + k` to the exact number of connected exact
/// defensive `k`-alliances.
///
/// Stored coefficients are always positive; an absent exponent means 0.
/// Equality compares the coefficient maps only, so polynomials of
/// different host orders can be tested for collision directly.
#[derive(Clone, Debug)]
pub struct AlliancePolynomial {
    order: usize,
    coeffs: BTreeMap<usize, u128>,
}

impl PartialEq for AlliancePolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for AlliancePolynomial {}

impl AlliancePolynomial {
    pub fn zero(order: usize) -> Self {
        AlliancePolynomial {
            order,
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds from an exponent -> count map; zero entries are dropped.
    pub fn from_coeffs(order: usize, coeffs: BTreeMap<usize, u128>) -> Self {
        AlliancePolynomial {
            order,
            coeffs: coeffs.into_iter().filter(|&(_, c)| c > 0).collect(),
        }
    }

    /// Builds from `(exponent, count)` pairs, summing repeats.
    pub fn from_terms(order: usize, terms: &[(usize, u128)]) -> Self {
        let mut coeffs: BTreeMap<usize, u128> = BTreeMap::new();
        for &(e, c) in terms {
            if c > 0 {
                *coeffs.entry(e).or_default() += c;
            }
        }
        AlliancePolynomial { order, coeffs }
    }

    /// Host graph order `n` (exponents encode `n + k`).
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, u128> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient at `x^exponent`; 0 if absent.
    pub fn coefficient(&self, exponent: usize) -> u128 {
        self.coeffs.get(&exponent).copied().unwrap_or(0)
    }

    /// `A_k`: coefficient at `x^(order + k)`.
    pub fn coefficient_at_index(&self, k: AllianceIndex) -> u128 {
        let e = self.order as i64 + i64::from(k.value());
        if e < 0 {
            0
        } else {
            self.coefficient(e as usize)
        }
    }

    /// Coefficient-wise sum. The result's order field is supplied by the
    /// caller since the operands may belong to different host graphs.
    pub fn add(&self, other: &Self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (&e, &c) in &other.coeffs {
            *coeffs.entry(e).or_default() += c;
        }
        AlliancePolynomial { order, coeffs }
    }

    /// Exact coefficient-wise difference; errors if any coefficient of
    /// `other` exceeds the matching coefficient of `self`. The result
    /// keeps `self`'s order.
    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        let mut coeffs = self.coeffs.clone();
        for (&e, &c) in &other.coeffs {
            let have = coeffs.get_mut(&e);
            match have {
                Some(h) if *h >= c => {
                    *h -= c;
                    if *h == 0 {
                        coeffs.remove(&e);
                    }
                }
                _ => return Err(PolyError::NegativeCoefficient { exponent: e }),
            }
        }
        Ok(AlliancePolynomial {
            order: self.order,
            coeffs,
        })
    }

    /// Sum of all coefficients, i.e. the value at `x = 1`.
    pub fn eval_at_one(&self) -> u128 {
        self.coeffs.values().sum()
    }

    /// `(Deg, Deg_min)`: maximum and minimum stored exponents.
    pub fn degrees(&self) -> Result<(usize, usize), PolyError> {
        let max = self.coeffs.keys().next_back();
        let min = self.coeffs.keys().next();
        match (max, min) {
            (Some(&max), Some(&min)) => Ok((max, min)),
            _ => Err(PolyError::ZeroPolynomial),
        }
    }

    /// Tests whether the sequence of nonzero coefficients, read in
    /// increasing exponent order with absent exponents skipped, is
    /// unimodal.
    pub fn is_unimodal(&self) -> Result<UnimodalityVerdict, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let seq: Vec<(usize, u128)> = self.coeffs.iter().map(|(&e, &c)| (e, c)).collect();
        let mut i = 0;
        while i + 1 < seq.len() && seq[i].1 <= seq[i + 1].1 {
            i += 1;
        }
        while i + 1 < seq.len() && seq[i].1 >= seq[i + 1].1 {
            i += 1;
        }
        if i + 1 < seq.len() {
            return Ok(UnimodalityVerdict {
                unimodal: false,
                mode_exponent: None,
                strict_mode: false,
            });
        }
        let max = seq.iter().map(|&(_, c)| c).max().expect("nonzero");
        let mode_exponent = seq.iter().find(|&&(_, c)| c == max).map(|&(e, _)| e);
        let strict_mode = seq.iter().filter(|&&(_, c)| c == max).count() == 1;
        Ok(UnimodalityVerdict {
            unimodal: true,
            mode_exponent,
            strict_mode,
        })
    }

    /// Canonical text form: `c*x^e` terms joined by ` + `, ascending
    /// exponents; `0` for the zero polynomial.
    pub fn canonical_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|(e, c)| format!("{c}*x^{e}"))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for AlliancePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text())
    }
}

/// Outcome of the unimodality test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnimodalityVerdict {
    pub unimodal: bool,
    /// Exponent of the first maximal coefficient; present iff unimodal.
    pub mode_exponent: Option<usize>,
    /// True when the maximal coefficient is attained exactly once.
    pub strict_mode: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(order: usize, terms: &[(usize, u128)]) -> AlliancePolynomial {
        AlliancePolynomial::from_terms(order, terms)
    }

    #[test]
    fn add_examples() {
        let x = poly(1, &[(1, 1)]);
        let c4 = poly(4, &[(2, 4), (4, 8), (6, 1)]);
        let sum = x.add(&c4, 5);
        assert_eq!(sum.canonical_text(), "1*x^1 + 4*x^2 + 8*x^4 + 1*x^6");
        assert_eq!(sum.order(), 5);

        let p = poly(3, &[(2, 5)]);
        assert_eq!(p.add(&AlliancePolynomial::zero(3), 3), p);
        assert_eq!(
            poly(1, &[(1, 2)]).add(&poly(1, &[(1, 1)]), 1),
            poly(1, &[(1, 3)])
        );
    }

    #[test]
    fn sub_examples() {
        let w5 = poly(
            5,
            &[(1, 1), (2, 4), (3, 4), (4, 10), (5, 4), (6, 5), (8, 1)],
        );
        let e1 = poly(1, &[(1, 1)]);
        let c4 = poly(4, &[(2, 4), (4, 8), (6, 1)]);
        let residual = w5.checked_sub(&e1).unwrap().checked_sub(&c4).unwrap();
        assert_eq!(
            residual.canonical_text(),
            "4*x^3 + 2*x^4 + 4*x^5 + 4*x^6 + 1*x^8"
        );

        let p = poly(2, &[(1, 2), (3, 1)]);
        assert!(p.checked_sub(&p).unwrap().is_zero());
        assert_eq!(
            poly(1, &[(1, 1)]).checked_sub(&poly(1, &[(2, 1)])),
            Err(PolyError::NegativeCoefficient { exponent: 2 })
        );
    }

    #[test]
    fn eval_at_one_examples() {
        let c4 = poly(4, &[(2, 4), (4, 8), (6, 1)]);
        assert_eq!(c4.eval_at_one(), 13);
        let w6 = poly(6, &[(1, 1), (3, 10), (5, 30), (7, 11), (9, 1)]);
        assert_eq!(w6.eval_at_one(), 53);
        assert_eq!(AlliancePolynomial::zero(4).eval_at_one(), 0);
    }

    #[test]
    fn coefficient_at_index_examples() {
        let w5 = poly(
            5,
            &[(1, 1), (2, 4), (3, 4), (4, 10), (5, 4), (6, 5), (8, 1)],
        );
        assert_eq!(w5.coefficient_at_index(AllianceIndex::new(-4)), 1);
        let c4 = poly(4, &[(2, 4), (4, 8), (6, 1)]);
        assert_eq!(c4.coefficient_at_index(AllianceIndex::new(2)), 1);
        assert_eq!(c4.coefficient_at_index(AllianceIndex::new(0)), 8);
        assert_eq!(c4.coefficient_at_index(AllianceIndex::new(-7)), 0);
    }

    #[test]
    fn degrees_examples() {
        let w6 = poly(6, &[(1, 1), (3, 10), (5, 30), (7, 11), (9, 1)]);
        assert_eq!(w6.degrees().unwrap(), (9, 1));
        let c5 = poly(5, &[(3, 5), (5, 15), (7, 1)]);
        assert_eq!(c5.degrees().unwrap(), (7, 3));
        assert_eq!(poly(1, &[(1, 1)]).degrees().unwrap(), (1, 1));
        assert_eq!(
            AlliancePolynomial::zero(3).degrees(),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn unimodal_examples() {
        let w6 = poly(6, &[(1, 1), (3, 10), (5, 30), (7, 11), (9, 1)]);
        let verdict = w6.is_unimodal().unwrap();
        assert!(verdict.unimodal);
        assert_eq!(verdict.mode_exponent, Some(5));
        assert!(verdict.strict_mode);

        // Brute-force A(P_5;x): coefficients 3, 2, 9, 1.
        let p5 = poly(5, &[(3, 3), (4, 2), (5, 9), (6, 1)]);
        let verdict = p5.is_unimodal().unwrap();
        assert!(!verdict.unimodal);
        assert_eq!(verdict.mode_exponent, None);

        let single = poly(3, &[(3, 1)]);
        let verdict = single.is_unimodal().unwrap();
        assert!(verdict.unimodal);
        assert_eq!(verdict.mode_exponent, Some(3));
        assert!(verdict.strict_mode);

        // Ties at the maximum: unimodal, first maximal exponent, not strict.
        let flat = poly(4, &[(1, 2), (2, 5), (4, 5), (6, 1)]);
        let verdict = flat.is_unimodal().unwrap();
        assert!(verdict.unimodal);
        assert_eq!(verdict.mode_exponent, Some(2));
        assert!(!verdict.strict_mode);

        assert_eq!(
            AlliancePolynomial::zero(2).is_unimodal(),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn equality_ignores_order_field() {
        assert_eq!(poly(4, &[(3, 1)]), poly(7, &[(3, 1)]));
        assert_ne!(poly(4, &[(3, 1)]), poly(4, &[(3, 2)]));
    }

    #[test]
    fn zero_coefficients_dropped() {
        let p = AlliancePolynomial::from_coeffs(3, BTreeMap::from([(1, 0), (2, 7)]));
        assert_eq!(p.coefficient(1), 0);
        assert_eq!(p.canonical_text(), "7*x^2");
    }
}
