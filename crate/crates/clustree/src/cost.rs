//! Cost arithmetic with an absorbing infinity.
//!
//! All distances and objective values are unsigned integers. `u64::MAX`
//! stands in for "unreachable / undefined"; the helpers below keep it
//! absorbing under addition and multiplication so dynamic programs can mix
//! finite and infinite entries without branching at every use site.

/// Distance and objective value type.
pub type Cost = u64;

/// Sentinel for unreachable vertices and undefined table entries.
pub const INFINITY: Cost = u64::MAX;

/// True if `c` is an actual value rather than the unreachable sentinel.
#[inline]
pub fn is_finite(c: Cost) -> bool {
    c != INFINITY
}

/// Addition that absorbs [`INFINITY`] and never wraps.
#[inline]
pub fn add(a: Cost, b: Cost) -> Cost {
    a.saturating_add(b)
}

/// Multiplication that absorbs [`INFINITY`] and never wraps.
///
/// `0 * INFINITY` is defined as `0`, which is the convention the
/// dynamic programs rely on (an empty part contributes nothing).
#[inline]
pub fn mul(a: Cost, b: Cost) -> Cost {
    if a == 0 || b == 0 {
        0
    } else {
        a.saturating_mul(b)
    }
}

/// Minimum where [`INFINITY`] loses to any finite value.
#[inline]
pub fn min(a: Cost, b: Cost) -> Cost {
    a.min(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_absorbs() {
        assert_eq!(add(INFINITY, 7), INFINITY);
        assert_eq!(add(7, INFINITY), INFINITY);
        assert_eq!(mul(INFINITY, 2), INFINITY);
        assert_eq!(mul(0, INFINITY), 0);
        assert!(!is_finite(INFINITY));
        assert!(is_finite(0));
    }

    #[test]
    fn near_overflow_saturates() {
        assert_eq!(add(u64::MAX - 1, 5), INFINITY);
        assert_eq!(mul(u64::MAX / 2, 3), INFINITY);
    }
}
