//! Exact rational scalar used throughout the crate.
//!
//! Coordinates, pairings and eigenvalues are all small rationals; `i128`
//! numerators leave ample headroom for every computation except the Weyl
//! dimension product, which is done in `BigRational` where needed.

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Rat = Ratio<i128>;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n as i128)
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n as i128, d as i128)
}

pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

pub fn as_integer(x: &Rat) -> Option<i64> {
    if is_integer(x) {
        i64::try_from(*x.numer()).ok()
    } else {
        None
    }
}

/// Renders `p/q` (or just `p` when integral); the format used in structured output.
pub fn format_rat(x: &Rat) -> String {
    if is_integer(x) {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

pub fn dot_int(a: &[i64], b: &[i64]) -> i64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_nonneg(x: &Rat) -> bool {
    !x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting() {
        assert_eq!(format_rat(&ratio(7, 2)), "7/2");
        assert_eq!(format_rat(&ratio(-4, 2)), "-2");
        assert_eq!(format_rat(&rat(0)), "0");
    }

    #[test]
    fn integer_extraction() {
        assert_eq!(as_integer(&ratio(6, 3)), Some(2));
        assert_eq!(as_integer(&ratio(1, 2)), None);
    }
}
