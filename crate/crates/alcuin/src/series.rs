//! The counting sequence as generating-function coefficients.
//!
//! `T(p)` is the coefficient of `x^p` in
//!
//! ```text
//!          x^3                  x       x       x
//! --------------------- = ------- * ------- * -------
//! (1-x^2)(1-x^3)(1-x^4)    1-x^2     1-x^3     1-x^4
//! ```
//!
//! because subtracting the all-ones triple and regrouping turns a
//! perimeter-`p` triangle into a solution of `2x + 3z + 4y = p - 3` in
//! nonnegative integers, one part per factor. Two independent routes
//! compute the coefficients here:
//!
//! * [`representation_count`], a coin-change dynamic program over the
//!   part sizes {2, 3, 4}, and
//! * literal multiplication of the three truncated geometric series via
//!   [`series_multiply`].
//!
//! [`product_check`] confirms the two routes agree entrywise, which is
//! exactly the statement that the product above expands correctly.

use crate::{Error, Result};

/// A polynomial truncated at a fixed degree, with exact `i128`
/// coefficients. Index `d` holds the coefficient of `x^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<i128>,
}

impl TruncatedSeries {
    /// The zero series truncated at `max_degree`.
    pub fn zero(max_degree: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![0; max_degree + 1],
        }
    }

    /// Wraps explicit coefficients; index `d` is the coefficient of `x^d`.
    ///
    /// # Panics
    ///
    /// Panics on an empty vector: even the zero series has a degree-0 slot.
    pub fn from_coefficients(coeffs: Vec<i128>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series holds at least degree 0");
        TruncatedSeries { coeffs }
    }

    /// Highest degree the truncation retains.
    pub fn max_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^degree`.
    ///
    /// # Panics
    ///
    /// Panics past the truncation point, where the value is unknown.
    pub fn coefficient(&self, degree: usize) -> i128 {
        assert!(degree <= self.max_degree(), "degree beyond truncation");
        self.coeffs[degree]
    }

    /// All retained coefficients, degree 0 upward.
    pub fn coefficients(&self) -> &[i128] {
        &self.coeffs
    }

    fn nonzero_terms(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }
}

/// The truncation of `x / (1 - x^k)`: coefficient 1 at every degree
/// `d >= 1` with `d = 1 (mod k)`, zero elsewhere.
///
/// # Panics
///
/// Panics unless `k >= 1`.
pub fn geometric_series(k: usize, max_degree: usize) -> TruncatedSeries {
    assert!(k >= 1, "geometric series ratio exponent must be positive");
    let mut s = TruncatedSeries::zero(max_degree);
    let mut d = 1;
    while d <= max_degree {
        s.coeffs[d] = 1;
        d += k;
    }
    s
}

/// Exact Cauchy product of two series sharing a truncation degree; terms
/// past the truncation are dropped.
///
/// Fails with [`Error::Overflow`] if any product or partial sum leaves
/// the `i128` range.
///
/// # Panics
///
/// Panics if the operands have different truncation degrees.
pub fn series_multiply(s1: &TruncatedSeries, s2: &TruncatedSeries) -> Result<TruncatedSeries> {
    assert_eq!(
        s1.max_degree(),
        s2.max_degree(),
        "operands must share a truncation degree"
    );
    let n = s1.max_degree();
    // Put the sparser operand on the outside; a zero term contributes
    // nothing to any Cauchy sum, so skipping it is exact.
    let (outer, inner) = if s1.nonzero_terms() <= s2.nonzero_terms() {
        (s1, s2)
    } else {
        (s2, s1)
    };
    let mut coeffs = vec![0i128; n + 1];
    for (i, &ci) in outer.coeffs.iter().enumerate() {
        if ci == 0 {
            continue;
        }
        for (j, &cj) in inner.coeffs[..=n - i].iter().enumerate() {
            let term = ci.checked_mul(cj).ok_or(Error::Overflow)?;
            coeffs[i + j] = coeffs[i + j].checked_add(term).ok_or(Error::Overflow)?;
        }
    }
    Ok(TruncatedSeries { coeffs })
}

/// `T(p)` for every `p` up to a chosen maximum, as one table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    values: Vec<i128>,
}

impl CoefficientTable {
    /// Largest perimeter the table covers.
    pub fn max_degree(&self) -> usize {
        self.values.len() - 1
    }

    /// `T(p)`.
    ///
    /// # Panics
    ///
    /// Panics past the end of the table.
    pub fn coefficient(&self, p: usize) -> i128 {
        assert!(p <= self.max_degree(), "perimeter beyond table");
        self.values[p]
    }

    /// The whole table, `p = 0` upward.
    pub fn coefficients(&self) -> &[i128] {
        &self.values
    }
}

/// Number of ways to write `m` as `2x + 3z + 4y` with `x, z, y >= 0`;
/// equals `T(m + 3)`. By convention there is one way to write 0.
pub fn representation_count(m: usize) -> i128 {
    rep_counts_up_to(m)[m]
}

/// The coefficients of `x^3 / ((1-x^2)(1-x^3)(1-x^4))` up to
/// `max_degree`, computed by dynamic program: `T(p)` sits at index `p`,
/// with zeros below degree 3.
pub fn alcuin_coefficients(max_degree: usize) -> CoefficientTable {
    let mut values = vec![0i128; max_degree + 1];
    if max_degree >= 3 {
        for (m, &r) in rep_counts_up_to(max_degree - 3).iter().enumerate() {
            values[m + 3] = r;
        }
    }
    CoefficientTable { values }
}

/// Classic coin-change pass: after processing part `k`, `dp[m]` counts
/// the representations of `m` using parts up to `k`. Sums stay far below
/// `i128::MAX` (they are quadratic in `m`), so plain addition is safe.
fn rep_counts_up_to(m: usize) -> Vec<i128> {
    let mut dp = vec![0i128; m + 1];
    dp[0] = 1;
    for part in [2usize, 3, 4] {
        for amount in part..=m {
            dp[amount] += dp[amount - part];
        }
    }
    dp
}

/// Multiplies the three geometric factors and compares the result with
/// the dynamic-program table, entry by entry up to `max_degree`.
pub fn product_check(max_degree: usize) -> Result<bool> {
    let g2 = geometric_series(2, max_degree);
    let g3 = geometric_series(3, max_degree);
    let g4 = geometric_series(4, max_degree);
    let product = series_multiply(&series_multiply(&g2, &g3)?, &g4)?;
    Ok(product.coefficients() == alcuin_coefficients(max_degree).coefficients())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{count_bruteforce, SEQUENCE_PREFIX};

    #[test]
    fn geometric_patterns() {
        assert_eq!(
            geometric_series(2, 9).coefficients(),
            &[0, 1, 0, 1, 0, 1, 0, 1, 0, 1]
        );
        assert_eq!(
            geometric_series(3, 10).coefficients(),
            &[0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1]
        );
        assert_eq!(
            geometric_series(4, 6).coefficients(),
            &[0, 1, 0, 0, 0, 1, 0]
        );
        assert_eq!(geometric_series(5, 0).coefficients(), &[0]);
    }

    #[test]
    fn small_representation_counts() {
        // listed by hand: 0 has the empty representation, 1 has none,
        // 6 = 2+2+2 = 3+3 = 2+4
        let expected = [1, 0, 1, 1, 2, 1, 3, 2, 4, 3, 5, 4];
        for (m, &want) in expected.iter().enumerate() {
            assert_eq!(representation_count(m), want, "m={m}");
        }
    }

    #[test]
    fn coefficients_are_the_counting_sequence() {
        let table = alcuin_coefficients(24);
        assert_eq!(table.coefficients(), &SEQUENCE_PREFIX);
        assert_eq!(table.max_degree(), 24);
        assert_eq!(table.coefficient(12), 3);
        assert_eq!(table.coefficient(0), 0);
    }

    #[test]
    fn shifted_representation_matches_oracle() {
        for p in 3..=240i64 {
            assert_eq!(
                representation_count(p as usize - 3),
                count_bruteforce(p),
                "p={p}"
            );
        }
    }

    #[test]
    fn multiply_small_polynomials() {
        let one_plus_x = TruncatedSeries::from_coefficients(vec![1, 1, 0]);
        let sq = series_multiply(&one_plus_x, &one_plus_x).unwrap();
        assert_eq!(sq.coefficients(), &[1, 2, 1]);

        // truncation drops the x^2 term of x * x
        let x = TruncatedSeries::from_coefficients(vec![0, 1]);
        assert_eq!(series_multiply(&x, &x).unwrap().coefficients(), &[0, 0]);
    }

    #[test]
    fn multiply_is_commutative_and_associative_on_samples() {
        let a = TruncatedSeries::from_coefficients(vec![3, -1, 4, 1, -5]);
        let b = TruncatedSeries::from_coefficients(vec![2, 7, -1, 8, 2]);
        let c = TruncatedSeries::from_coefficients(vec![0, -3, 0, 0, 6]);
        let ab = series_multiply(&a, &b).unwrap();
        let ba = series_multiply(&b, &a).unwrap();
        assert_eq!(ab, ba);
        let ab_c = series_multiply(&ab, &c).unwrap();
        let bc = series_multiply(&b, &c).unwrap();
        let a_bc = series_multiply(&a, &bc).unwrap();
        assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn multiply_reports_overflow() {
        let big = TruncatedSeries::from_coefficients(vec![i128::MAX]);
        let two = TruncatedSeries::from_coefficients(vec![2]);
        assert!(matches!(series_multiply(&big, &two), Err(Error::Overflow)));
    }

    #[test]
    fn product_check_holds() {
        assert_eq!(product_check(0), Ok(true));
        assert_eq!(product_check(7), Ok(true));
        assert_eq!(product_check(1000), Ok(true));
    }

    #[test]
    #[should_panic(expected = "share a truncation degree")]
    fn multiply_rejects_mismatched_truncations() {
        let a = TruncatedSeries::zero(3);
        let b = TruncatedSeries::zero(4);
        let _ = series_multiply(&a, &b);
    }
}
