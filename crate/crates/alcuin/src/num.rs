//! Exact division helpers: floor, ceiling, and nearest-integer rounding
//! on rationals, plus Euclidean residue decomposition.
//!
//! Everything in this module is integer arithmetic. The counting formulas
//! elsewhere in the crate hinge on quotients like `p^2 / 48` being rounded
//! *exactly*, so none of these functions ever touch floating point.

use std::fmt;

/// An exact rational number with positive denominator.
///
/// Construction normalizes the sign into the numerator and reduces to
/// lowest terms, so derived equality and hashing are value equality:
/// `Rational::new(2, 4) == Rational::new(1, 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

impl Rational {
    /// Builds `num / den` in canonical form.
    ///
    /// # Panics
    ///
    /// Panics if `den == 0`.
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "rational denominator must be nonzero");
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i128;
        Rational {
            num: num / g,
            den: den / g,
        }
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// Greatest integer not exceeding `q`. Correct for negative values:
/// `floor(-7/2) == -4`.
pub fn floor_rat(q: Rational) -> i128 {
    q.num.div_euclid(q.den)
}

/// Least integer not less than `q`: the floor plus one unless `q` is an
/// integer. Satisfies `ceil_rat(q) == -floor_rat(-q)`.
pub fn ceil_rat(q: Rational) -> i128 {
    let d = q.num.div_euclid(q.den);
    if q.num.rem_euclid(q.den) == 0 {
        d
    } else {
        d + 1
    }
}

/// The integer nearest to `q`. An exact half rounds away from zero, so
/// `nearest_int(7/2) == 4` and `nearest_int(-7/2) == -4`.
///
/// The counting formulas this crate applies it to never produce a half
/// (`2 p^2` is never `48` mod `96`), so the tie rule is a declared
/// policy rather than a load-bearing choice; tests pin it anyway.
pub fn nearest_int(q: Rational) -> i128 {
    let den = q.den as u128;
    let mag = q.num.unsigned_abs();
    let (quot, rem) = (mag / den, mag % den);
    let round_up = rem != 0 && rem >= den - rem;
    let result = quot + round_up as u128;
    if q.num >= 0 {
        result as i128
    } else if result == 1u128 << 127 {
        // only reachable from i128::MIN / 1, which rounds to itself
        i128::MIN
    } else {
        -(result as i128)
    }
}

/// A perimeter split against a fixed modulus: `p = modulus * quotient + residue`
/// with `0 <= residue < modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResidueDecomposition {
    pub modulus: i64,
    pub quotient: i64,
    pub residue: i64,
}

/// Euclidean decomposition of `p` by `m`.
///
/// # Panics
///
/// Panics unless `p >= 0` and `m >= 1`.
pub fn decompose(p: i64, m: i64) -> ResidueDecomposition {
    assert!(p >= 0, "decompose requires p >= 0");
    assert!(m >= 1, "decompose requires modulus >= 1");
    ResidueDecomposition {
        modulus: m,
        quotient: p.div_euclid(m),
        residue: p.rem_euclid(m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_reduces_and_normalizes_sign() {
        assert_eq!(Rational::new(2, 4), Rational::new(1, 2));
        assert_eq!(Rational::new(3, -6), Rational::new(-1, 2));
        assert_eq!(Rational::new(-3, -6).numerator(), 1);
        assert_eq!(Rational::new(0, -5), Rational::new(0, 1));
        assert_eq!(Rational::new(-4, 2).to_string(), "-2");
        assert_eq!(Rational::new(7, 3).to_string(), "7/3");
    }

    #[test]
    #[should_panic(expected = "nonzero")]
    fn zero_denominator_panics() {
        let _ = Rational::new(1, 0);
    }

    #[test]
    fn floor_handles_negatives() {
        assert_eq!(floor_rat(Rational::new(7, 2)), 3);
        assert_eq!(floor_rat(Rational::new(-7, 2)), -4);
        assert_eq!(floor_rat(Rational::new(-6, 2)), -3);
        assert_eq!(floor_rat(Rational::new(6, 2)), 3);
        assert_eq!(floor_rat(Rational::new(0, 9)), 0);
    }

    #[test]
    fn ceil_is_negated_floor_of_negation() {
        for n in -50i128..=50 {
            for d in 1i128..=12 {
                let up = ceil_rat(Rational::new(n, d));
                let down = floor_rat(Rational::new(-n, d));
                assert_eq!(up, -down, "n={n} d={d}");
            }
        }
        assert_eq!(ceil_rat(Rational::new(7, 2)), 4);
        assert_eq!(ceil_rat(Rational::new(-7, 2)), -3);
    }

    #[test]
    fn nearest_rounds_to_closest() {
        assert_eq!(nearest_int(Rational::new(10, 3)), 3);
        assert_eq!(nearest_int(Rational::new(11, 3)), 4);
        assert_eq!(nearest_int(Rational::new(-10, 3)), -3);
        assert_eq!(nearest_int(Rational::new(-11, 3)), -4);
        assert_eq!(nearest_int(Rational::new(144, 48)), 3);
    }

    #[test]
    fn nearest_ties_round_away_from_zero() {
        assert_eq!(nearest_int(Rational::new(7, 2)), 4);
        assert_eq!(nearest_int(Rational::new(-7, 2)), -4);
        assert_eq!(nearest_int(Rational::new(1, 2)), 1);
        assert_eq!(nearest_int(Rational::new(-1, 2)), -1);
    }

    #[test]
    fn nearest_survives_extremes() {
        assert_eq!(nearest_int(Rational::new(i128::MAX, 1)), i128::MAX);
        assert_eq!(nearest_int(Rational::new(i128::MIN, 1)), i128::MIN);
        assert_eq!(nearest_int(Rational::new(i128::MIN + 1, 2)), -(1 << 126));
    }

    #[test]
    fn closed_form_inputs_never_tie() {
        // 2 p^2 mod 96 never hits 48, so p^2 / 48 has no half point.
        for p in 0i128..96 {
            assert_ne!((2 * p * p) % 96, 48, "p={p}");
        }
    }

    #[test]
    fn decompose_splits_perimeter() {
        let d = decompose(23, 12);
        assert_eq!((d.quotient, d.residue), (1, 11));
        let d = decompose(24, 12);
        assert_eq!((d.quotient, d.residue), (2, 0));
        let d = decompose(5, 12);
        assert_eq!((d.quotient, d.residue), (0, 5));
        let d = decompose(0, 3);
        assert_eq!((d.modulus, d.quotient, d.residue), (3, 0, 0));
    }
}
