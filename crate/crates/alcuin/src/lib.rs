//! Exact arithmetic for integer triangles of a fixed perimeter.
//!
//! An integer triangle has positive integer sides obeying the strict
//! triangle inequality; congruent triangles count once. This crate
//! counts, enumerates, and area-optimizes them for any perimeter `p`,
//! entirely over the integers:
//!
//! * [`counting`] computes the count `T(p)` five independent ways, from
//!   an O(1) closed form to the O(p^2) definitional scan.
//! * [`series`] realizes `T(p)` as the coefficient of `x^p` in
//!   `x^3 / ((1-x^2)(1-x^3)(1-x^4))` with exact truncated series.
//! * [`geometry`] works with Heron's formula in the cleared form
//!   `16 E^2` and pins the maximal-area triangle per perimeter.
//! * [`num`] supplies the floor, ceiling, and nearest-integer rounding
//!   the formulas lean on, plus residue decomposition.
//! * [`triangle`] defines the canonical sorted side triple.
//!
//! ```
//! use alcuin::counting::{count, enumerate_triples, CountMethod};
//! use alcuin::geometry::max_area_triple;
//!
//! // perimeter 12 has three triangles ...
//! assert_eq!(count(12, CountMethod::ClosedForm).unwrap(), 3);
//! let sides: Vec<_> = enumerate_triples(12).iter().map(|t| t.sides()).collect();
//! assert_eq!(sides, vec![(2, 5, 5), (3, 4, 5), (4, 4, 4)]);
//!
//! // ... and the equilateral one has the largest area
//! assert_eq!(max_area_triple(12).unwrap().triple.sides(), (4, 4, 4));
//! ```

use std::fmt;

pub mod counting;
pub mod geometry;
pub mod num;
pub mod series;
pub mod triangle;

pub use counting::CountMethod;
pub use triangle::TriangleTriple;

/// Everything that can go wrong across the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// The given sides do not form a triangle.
    NotATriangle { a: i64, b: i64, c: i64 },
    /// The perimeter admits no triangle at all (only 1, 2, and 4).
    NoTriangle { perimeter: i64 },
    /// An intermediate value left the 128-bit integer range.
    Overflow,
    /// A lemma check was applied to triples outside its hypothesis.
    HypothesisViolated {
        left: TriangleTriple,
        right: TriangleTriple,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotATriangle { a, b, c } => write!(
                f,
                "({a}, {b}, {c}) is not a triangle: sides must be positive and the \
                 two shorter must strictly exceed the longest"
            ),
            Error::NoTriangle { perimeter: 4 } => write!(
                f,
                "no triangle exists for perimeter 4: the only split into ordered \
                 sides is the degenerate (1, 1, 2), and the count formula agrees \
                 with a value of 0"
            ),
            Error::NoTriangle { perimeter } => {
                write!(f, "no triangle exists for perimeter {perimeter}")
            }
            Error::Overflow => write!(
                f,
                "arithmetic overflow: an intermediate value exceeds the 128-bit range"
            ),
            Error::HypothesisViolated { left, right } => write!(
                f,
                "range comparison needs triples sharing a perimeter and middle side, \
                 got {left} and {right}"
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_messages_name_the_failure() {
        let e = Error::NotATriangle { a: 1, b: 1, c: 2 };
        assert!(e.to_string().contains("(1, 1, 2) is not a triangle"));

        let e = Error::NoTriangle { perimeter: 4 };
        let msg = e.to_string();
        assert!(msg.contains("no triangle exists"));
        assert!(msg.contains("(1, 1, 2)"));
        assert!(msg.contains("0"));

        let e = Error::NoTriangle { perimeter: 2 };
        assert_eq!(e.to_string(), "no triangle exists for perimeter 2");

        assert!(Error::Overflow.to_string().contains("overflow"));

        let left = TriangleTriple::new(3, 4, 5).unwrap();
        let right = TriangleTriple::new(2, 5, 5).unwrap();
        let e = Error::HypothesisViolated { left, right };
        assert!(e.to_string().contains("(3, 4, 5)"));
        assert!(e.to_string().contains("(2, 5, 5)"));
    }
}
