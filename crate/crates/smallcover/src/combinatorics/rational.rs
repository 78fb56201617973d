//! Exact rational scalars.
//!
//! All geometry in this crate runs on arbitrary-precision rationals; no
//! floating point is involved anywhere. `BigRational` already maintains the
//! invariants we need (lowest terms, positive denominator, 0 = 0/1), so the
//! crate uses it directly and only adds the `"p/q"` text form used by points
//! files.

use num::BigInt;
use num::Zero;

use super::CombinatoricsError;

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = num::BigRational;

/// Parses `"p/q"` or `"p"` with decimal integer parts.
pub fn parse_rational(s: &str) -> Result<Rational, CombinatoricsError> {
    let bad = || CombinatoricsError::BadRational(s.to_string());
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer: BigInt = num_str.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = den_str.trim().parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// Formats a rational as `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
