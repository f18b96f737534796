//! Size bounds as functions of the minimum degree.

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("minimum degree {0} is below 2")]
pub struct DegreeTooSmall(pub usize);

/// Largest size `q` for which a 2-connected graph of minimum degree `delta`
/// is guaranteed to have only dominating longest cycles:
/// 8 for `delta = 2`, otherwise `floor((3(delta-1)(delta+2) - 1) / 2)`.
///
/// `(delta-1)(delta+2)` is always even, so for `delta >= 3` this equals
/// `3(delta-1)(delta+2)/2 - 1`.
pub fn q_max(delta: usize) -> Result<usize, DegreeTooSmall> {
    match delta {
        0 | 1 => Err(DegreeTooSmall(delta)),
        2 => Ok(8),
        d => Ok((3 * (d - 1) * (d + 2) - 1) / 2),
    }
}

/// Size at which the dichotomy for dense-degree 2-connected graphs switches
/// to its size branch: 9 for `delta = 2`, else `3(delta-1)(delta+2)/2`.
pub fn dominating_size_threshold(delta: usize) -> Result<usize, DegreeTooSmall> {
    match delta {
        0 | 1 => Err(DegreeTooSmall(delta)),
        2 => Ok(9),
        d => Ok(3 * (d - 1) * (d + 2) / 2),
    }
}

/// Largest order a graph with minimum degree `delta` and at most `q` edges can have.
pub fn max_order(delta: usize, q: usize) -> usize {
    (2 * q).checked_div(delta).unwrap_or(usize::MAX)
}

/// Size bound `delta^2 + delta - 1` under which every graph on at least three
/// vertices is hamiltonian. Returns `None` when the bound is negative.
pub fn hamiltonian_size_bound(delta: usize) -> Option<usize> {
    (delta * delta + delta).checked_sub(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_max_values() {
        assert_eq!(q_max(2), Ok(8));
        assert_eq!(q_max(3), Ok(14));
        assert_eq!(q_max(4), Ok(26));
        assert_eq!(q_max(5), Ok(41));
        assert_eq!(q_max(1), Err(DegreeTooSmall(1)));
    }

    #[test]
    fn q_max_sits_one_below_threshold() {
        for d in 3..60 {
            let three = 3 * (d - 1) * (d + 2);
            assert_eq!(three % 2, 0);
            assert_eq!(2 * q_max(d).unwrap() + 2, three);
            assert_eq!(q_max(d).unwrap() + 1, dominating_size_threshold(d).unwrap());
            assert!(q_max(d + 1).unwrap() > q_max(d).unwrap());
        }
        assert_eq!(q_max(2).unwrap() + 1, dominating_size_threshold(2).unwrap());
    }

    #[test]
    fn order_bounds() {
        assert_eq!(max_order(2, q_max(2).unwrap()), 8);
        assert_eq!(max_order(3, q_max(3).unwrap()), 9);
        assert_eq!(max_order(4, q_max(4).unwrap()), 13);
        assert_eq!(hamiltonian_size_bound(2), Some(5));
        assert_eq!(hamiltonian_size_bound(0), None);
    }
}
