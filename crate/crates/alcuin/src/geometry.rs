//! Exact Heron areas and the maximal-area triangle for a perimeter.
//!
//! Areas never touch floating point. For sides `a <= b <= c` with
//! perimeter `p`, Heron's formula clears denominators into
//!
//! ```text
//! 16 E^2 = p (-a+b+c) (a-b+c) (a+b-c)
//! ```
//!
//! a positive integer for every genuine triangle, so area comparisons
//! are exact integer comparisons. The perimeter-`p` maximum is the most
//! nearly equilateral triple, and its area satisfies the radical-free
//! identity
//!
//! ```text
//! 432 E^2 = (p + 2v)^2 (p - 4v) p,    v in {-1, 0, 1},  p = v (mod 3)
//! ```
//!
//! which all three residue cases share. The factor 432 is `27 * 16`, so
//! the identity pins `27` times the integer Heron value.

use std::cmp::Ordering;

use crate::counting::enumerate_triples;
use crate::num::decompose;
use crate::triangle::TriangleTriple;
use crate::{Error, Result};

/// Sixteen times a squared triangle area: the integer
/// `p(-a+b+c)(a-b+c)(a+b-c)`. Ordering agrees with ordering by area.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AreaSquared16(pub i128);

/// The maximal-area triangle for a perimeter, with the shift `v` that
/// selects its residue case and the exact value of `432 E^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaxAreaResult {
    pub triple: TriangleTriple,
    pub v: i64,
    pub area_sq_432: i128,
}

/// `16 E^2` for a triple, by Heron's formula in cleared form.
///
/// Fails with [`Error::Overflow`] when the four-factor product leaves
/// `i128`, which first happens near perimeter `3 * 10^9`.
pub fn heron_16esq(t: TriangleTriple) -> Result<AreaSquared16> {
    let (a, b, c) = t.sides();
    let (a, b, c) = (a as i128, b as i128, c as i128);
    let p = a + b + c;
    p.checked_mul(-a + b + c)
        .and_then(|x| x.checked_mul(a - b + c))
        .and_then(|x| x.checked_mul(a + b - c))
        .map(AreaSquared16)
        .ok_or(Error::Overflow)
}

/// Spread of a triple: longest side minus shortest.
pub fn range_of(t: TriangleTriple) -> i64 {
    t.c() - t.a()
}

/// The unique triangle of maximal area among all with perimeter `p`,
/// together with `v` and `432 E^2 = (p+2v)^2 (p-4v) p`.
///
/// Writing `p = 3n + v` with `v` in {-1, 0, 1}, the optimum is
///
/// * `(n, n, n)` when `v = 0`,
/// * `(n, n, n+1)` when `v = 1`,
/// * `(n, n+1, n+1)` when `v = -1`.
///
/// Fails with [`Error::NoTriangle`] for the empty perimeters 1, 2 and 4,
/// and with [`Error::Overflow`] once `(p+2v)^2 (p-4v) p` leaves `i128`.
///
/// # Panics
///
/// Panics unless `p >= 1`.
pub fn max_area_triple(p: i64) -> Result<MaxAreaResult> {
    assert!(p >= 1, "max-area requires p >= 1");
    if p == 1 || p == 2 || p == 4 {
        return Err(Error::NoTriangle { perimeter: p });
    }
    let d = decompose(p, 3);
    let n = d.quotient;
    let (triple, v) = match d.residue {
        0 => (TriangleTriple::new(n, n, n), 0i64),
        1 => (TriangleTriple::new(n, n, n + 1), 1),
        _ => (TriangleTriple::new(n, n + 1, n + 1), -1),
    };
    let triple = triple.expect("near-equilateral sides form a triangle for p >= 3, p != 4");
    let (pw, vw) = (p as i128, v as i128);
    let shifted = pw + 2 * vw;
    let area_sq_432 = shifted
        .checked_mul(shifted)
        .and_then(|x| x.checked_mul(pw - 4 * vw))
        .and_then(|x| x.checked_mul(pw))
        .ok_or(Error::Overflow)?;
    Ok(MaxAreaResult {
        triple,
        v,
        area_sq_432,
    })
}

/// The area maximizer found by scanning every triangle of perimeter `p`
/// and comparing exact Heron values. Quadratic; this is the oracle for
/// [`max_area_triple`].
///
/// Fails with [`Error::NoTriangle`] when the perimeter admits no
/// triangle, and propagates [`Error::Overflow`] from the area values.
///
/// # Panics
///
/// Panics unless `p >= 1`.
pub fn area_argmax_bruteforce(p: i64) -> Result<TriangleTriple> {
    assert!(p >= 1, "max-area requires p >= 1");
    let mut best: Option<(AreaSquared16, TriangleTriple)> = None;
    for t in enumerate_triples(p) {
        let area = heron_16esq(t)?;
        if best.map_or(true, |(top, _)| area > top) {
            best = Some((area, t));
        }
    }
    best.map(|(_, t)| t)
        .ok_or(Error::NoTriangle { perimeter: p })
}

/// Checks one instance of the squeeze that drives the maximal-area
/// argument: among triangles sharing a perimeter and a middle side, the
/// one with strictly smaller range has strictly larger area, and equal
/// ranges force equal triples.
///
/// With the base `b` and the leg sum `a + c` both fixed, the Heron
/// product varies only through `4ac = (a+c)^2 - (c-a)^2`, so area is
/// strictly decreasing in the range. This function verifies the
/// biconditional on one pair.
///
/// Fails with [`Error::HypothesisViolated`] unless the triples share
/// both perimeter and middle side.
pub fn range_lemma_holds(t1: TriangleTriple, t2: TriangleTriple) -> Result<bool> {
    if t1.perimeter() != t2.perimeter() || t1.b() != t2.b() {
        return Err(Error::HypothesisViolated {
            left: t1,
            right: t2,
        });
    }
    let area1 = heron_16esq(t1)?;
    let area2 = heron_16esq(t2)?;
    Ok(match range_of(t1).cmp(&range_of(t2)) {
        Ordering::Less => area1 > area2,
        Ordering::Greater => area1 < area2,
        Ordering::Equal => area1 == area2 && t1 == t2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_bruteforce;

    fn triple(a: i64, b: i64, c: i64) -> TriangleTriple {
        TriangleTriple::new(a, b, c).unwrap()
    }

    #[test]
    fn heron_reference_values() {
        assert_eq!(heron_16esq(triple(3, 4, 5)).unwrap(), AreaSquared16(576));
        assert_eq!(heron_16esq(triple(1, 1, 1)).unwrap(), AreaSquared16(3));
        assert_eq!(heron_16esq(triple(2, 2, 3)).unwrap(), AreaSquared16(63));
        assert_eq!(heron_16esq(triple(1, 3, 3)).unwrap(), AreaSquared16(35));
        assert_eq!(heron_16esq(triple(2, 4, 4)).unwrap(), AreaSquared16(240));
        assert_eq!(heron_16esq(triple(3, 3, 4)).unwrap(), AreaSquared16(320));
    }

    #[test]
    fn heron_overflows_near_the_i64_edge() {
        let n = i64::MAX / 3 - 1;
        assert_eq!(heron_16esq(triple(n, n, n)), Err(Error::Overflow));
    }

    #[test]
    fn range_measures_spread() {
        assert_eq!(range_of(triple(3, 4, 5)), 2);
        assert_eq!(range_of(triple(4, 4, 4)), 0);
        assert_eq!(range_of(triple(2, 5, 5)), 3);
    }

    #[test]
    fn max_area_small_cases() {
        let r = max_area_triple(3).unwrap();
        assert_eq!((r.triple.sides(), r.v, r.area_sq_432), ((1, 1, 1), 0, 81));

        let r = max_area_triple(5).unwrap();
        assert_eq!((r.triple.sides(), r.v, r.area_sq_432), ((1, 2, 2), -1, 405));

        let r = max_area_triple(7).unwrap();
        assert_eq!((r.triple.sides(), r.v, r.area_sq_432), ((2, 2, 3), 1, 1701));

        let r = max_area_triple(8).unwrap();
        assert_eq!((r.triple.sides(), r.v, r.area_sq_432), ((2, 3, 3), -1, 3456));

        let r = max_area_triple(12).unwrap();
        assert_eq!((r.triple.sides(), r.v, r.area_sq_432), ((4, 4, 4), 0, 20736));
    }

    #[test]
    fn no_triangle_exactly_for_the_three_gaps() {
        for p in 1..=60 {
            let got = max_area_triple(p);
            if p == 1 || p == 2 || p == 4 {
                assert_eq!(got, Err(Error::NoTriangle { perimeter: p }), "p={p}");
                assert!(area_argmax_bruteforce(p).is_err(), "p={p}");
            } else {
                assert!(got.is_ok(), "p={p}");
            }
        }
    }

    #[test]
    fn unified_identity_matches_heron_and_oracle() {
        for p in 3..=400 {
            if p == 4 {
                continue;
            }
            let closed = max_area_triple(p).unwrap();
            let by_scan = area_argmax_bruteforce(p).unwrap();
            assert_eq!(closed.triple, by_scan, "p={p}");
            let heron = heron_16esq(closed.triple).unwrap();
            assert_eq!(closed.area_sq_432, 27 * heron.0, "p={p}");
            assert_eq!((p as i128 - closed.v as i128).rem_euclid(3), 0, "p={p}");

            // maximum is unique: no other triple reaches it
            let ties = enumerate_triples(p)
                .into_iter()
                .filter(|&t| heron_16esq(t).unwrap() == heron)
                .count();
            assert_eq!(ties, 1, "p={p}");
            assert!(count_bruteforce(p) > 0, "p={p}");
        }
    }

    #[test]
    fn overflow_boundary_near_three_billion() {
        assert!(max_area_triple(3_000_000_000).is_ok());
        assert_eq!(max_area_triple(4_000_000_000), Err(Error::Overflow));
    }

    #[test]
    fn range_lemma_on_shared_base_pairs() {
        // perimeter 30, middle side 10: ranges 0, 2, 4 give areas in
        // strictly opposite order
        let t0 = triple(10, 10, 10);
        let t2 = triple(9, 10, 11);
        let t4 = triple(8, 10, 12);
        for (x, y) in [(t0, t2), (t0, t4), (t2, t4), (t2, t0), (t4, t0), (t4, t2)] {
            assert_eq!(range_lemma_holds(x, y), Ok(true));
        }
        assert_eq!(range_lemma_holds(t2, t2), Ok(true));
    }

    #[test]
    fn range_lemma_rejects_mismatched_pairs() {
        let err = range_lemma_holds(triple(3, 4, 5), triple(2, 2, 3));
        assert!(matches!(err, Err(Error::HypothesisViolated { .. })));
        // same perimeter, different middle side
        let err = range_lemma_holds(triple(2, 5, 5), triple(3, 4, 5));
        assert!(matches!(err, Err(Error::HypothesisViolated { .. })));
        // equal perimeters but canonical middles 3 vs 2, and 4 vs 3
        let err = range_lemma_holds(triple(1, 3, 3), triple(2, 3, 2));
        assert!(matches!(err, Err(Error::HypothesisViolated { .. })));
        let err = range_lemma_holds(triple(2, 4, 4), triple(3, 4, 3));
        assert!(matches!(err, Err(Error::HypothesisViolated { .. })));
    }

    #[test]
    fn equilateral_area_is_three_n_fourth() {
        for n in 1..=50i64 {
            let esq = heron_16esq(triple(n, n, n)).unwrap();
            assert_eq!(esq.0, 3 * (n as i128).pow(4), "n={n}");
        }
    }
}
