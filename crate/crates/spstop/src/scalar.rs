//! Scalar abstraction shared by the statistics and bound calculators.
//!
//! Every formula in this crate is a rational function of integer counts (or
//! of a threshold), so the same code can run in fast floating point or in
//! exact rational arithmetic. [`Real`](crate::Real) is the everyday
//! instantiation; [`Exact`](crate::Exact) and [`BigExact`](crate::BigExact)
//! make inequality checks near equality immune to rounding.

use std::fmt::Debug;

use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// Field-like scalar over which agreement statistics and bounds are computed.
///
/// Implemented by `f64`/`f32` and by `num_rational::Ratio` types.
pub trait Scalar: Num + Signed + FromPrimitive + ToPrimitive + PartialOrd + Clone + Debug {
    /// Lifts a nonnegative integer count into the scalar domain.
    fn from_count(count: u64) -> Self {
        Self::from_u64(count).expect("count representable in scalar type")
    }

    /// Exact-where-possible fraction `num / den` of two counts.
    fn count_ratio(num: u64, den: u64) -> Self {
        Self::from_count(num) / Self::from_count(den)
    }

    /// Two, used by the agreement formulas.
    fn two() -> Self {
        Self::one() + Self::one()
    }

    /// Four, used by the agreement formulas.
    fn four() -> Self {
        Self::two() * Self::two()
    }

    /// Half of `self`.
    fn halved(self) -> Self {
        self / Self::two()
    }
}

impl<T> Scalar for T where
    T: Num + Signed + FromPrimitive + ToPrimitive + PartialOrd + Clone + Debug
{
}

/// Debug-build check that two routes to the same quantity agree.
///
/// Exact scalar types must match exactly; floating point must match to
/// `1e-12`, the tolerance used throughout for dual-route self-checks.
#[cfg(debug_assertions)]
pub(crate) fn debug_check_close<T: Scalar>(lhs: &T, rhs: &T, what: &str) {
    let tol = T::from_f64(1e-12).expect("tolerance representable");
    let diff = (lhs.clone() - rhs.clone()).abs();
    debug_assert!(
        diff <= tol,
        "{what}: dual-route values diverge: {lhs:?} vs {rhs:?}"
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{BigExact, Exact};

    #[test]
    fn count_conversions_hold_for_all_instantiations() {
        assert_eq!(f64::from_count(41), 41.0);
        assert_eq!(Exact::from_count(41), Exact::new(41, 1));
        assert_eq!(
            BigExact::from_count(41),
            BigExact::from_u64(41).unwrap()
        );
        assert_eq!(f64::count_ratio(1, 4), 0.25);
        assert_eq!(Exact::count_ratio(2, 8), Exact::new(1, 4));
    }

    #[test]
    fn small_constants() {
        assert_eq!(f64::two(), 2.0);
        assert_eq!(f64::four(), 4.0);
        assert_eq!(Exact::four(), Exact::new(4, 1));
        assert_eq!(Exact::from_count(5).halved(), Exact::new(5, 2));
    }
}
