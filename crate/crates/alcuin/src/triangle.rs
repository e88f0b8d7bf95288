//! Canonical side triples.

use std::fmt;

use crate::{Error, Result};

/// Side lengths of a genuine integer triangle, stored sorted as
/// `a <= b <= c`.
///
/// Construction rejects anything else: each side must be positive and the
/// strict inequality `a + b > c` must hold, so degenerate flat triples
/// like (1, 1, 2) are not representable. Two triples compare equal
/// exactly when they are the same triangle up to reordering of sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TriangleTriple {
    a: i64,
    b: i64,
    c: i64,
}

impl TriangleTriple {
    /// Builds the canonical triple for sides `a`, `b`, `c`, in any order.
    ///
    /// Fails with [`Error::NotATriangle`] when a side is nonpositive or
    /// the two shorter sides do not strictly exceed the longest, and with
    /// [`Error::Overflow`] when the perimeter exceeds the `i64` range.
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        let mut sides = [a, b, c];
        sides.sort_unstable();
        let [lo, mid, hi] = sides;
        if lo < 1 || (lo as i128) + (mid as i128) <= (hi as i128) {
            return Err(Error::NotATriangle { a, b, c });
        }
        if (lo as i128) + (mid as i128) + (hi as i128) > i64::MAX as i128 {
            return Err(Error::Overflow);
        }
        Ok(TriangleTriple {
            a: lo,
            b: mid,
            c: hi,
        })
    }

    /// Shortest side.
    pub fn a(&self) -> i64 {
        self.a
    }

    /// Middle side.
    pub fn b(&self) -> i64 {
        self.b
    }

    /// Longest side.
    pub fn c(&self) -> i64 {
        self.c
    }

    /// All three sides in canonical order.
    pub fn sides(&self) -> (i64, i64, i64) {
        (self.a, self.b, self.c)
    }

    /// `a + b + c`. Never overflows: construction bounds the sum.
    pub fn perimeter(&self) -> i64 {
        self.a + self.b + self.c
    }
}

impl fmt::Display for TriangleTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorts_sides_on_construction() {
        let t = TriangleTriple::new(5, 3, 4).unwrap();
        assert_eq!(t.sides(), (3, 4, 5));
        assert_eq!(t, TriangleTriple::new(4, 5, 3).unwrap());
        assert_eq!(t.perimeter(), 12);
        assert_eq!(t.to_string(), "(3, 4, 5)");
    }

    #[test]
    fn rejects_degenerate_and_impossible_sides() {
        assert!(matches!(
            TriangleTriple::new(1, 1, 2),
            Err(Error::NotATriangle { a: 1, b: 1, c: 2 })
        ));
        assert!(TriangleTriple::new(1, 2, 4).is_err());
        assert!(TriangleTriple::new(0, 1, 1).is_err());
        assert!(TriangleTriple::new(-3, 4, 5).is_err());
        assert!(TriangleTriple::new(2, 2, 3).is_ok());
        assert!(TriangleTriple::new(1, 1, 1).is_ok());
    }

    #[test]
    fn rejects_perimeter_beyond_i64() {
        let big = i64::MAX / 2;
        assert!(matches!(
            TriangleTriple::new(big, big, big),
            Err(Error::Overflow)
        ));
        // near the edge but summable
        let n = i64::MAX / 3 - 1;
        assert!(TriangleTriple::new(n, n, n).is_ok());
    }

    #[test]
    fn ordering_is_lexicographic_on_canonical_sides() {
        let smaller = TriangleTriple::new(2, 5, 5).unwrap();
        let larger = TriangleTriple::new(3, 4, 5).unwrap();
        assert!(smaller < larger);
    }
}
