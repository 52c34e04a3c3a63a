//! Exact fractions.
//!
//! Every average distance and every closed-form bound is carried as a reduced
//! fraction; nothing in the theorem checks ever touches a float.

use num_integer::Integer;
use num_traits::Signed;

/// Reduced fraction with a positive denominator.
pub type Rational = num_rational::Ratio<i64>;

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom)
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(value)
}

/// Always `p/q`, even for integers (`2/1`).
pub fn fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Decimal rendering rounded half away from zero to `places` digits.
pub fn decimal_string(r: &Rational, places: u32) -> String {
    let scale = 10i128.pow(places);
    let numer = *r.numer() as i128 * scale;
    let denom = *r.denom() as i128;
    let (q, rem) = numer.abs().div_rem(&denom);
    let rounded = if 2 * rem >= denom { q + 1 } else { q };
    let sign = if r.is_negative() && rounded != 0 { "-" } else { "" };
    if places == 0 {
        return format!("{sign}{rounded}");
    }
    let int_part = rounded / scale;
    let frac_part = rounded % scale;
    format!(
        "{sign}{int_part}.{frac_part:0width$}",
        width = places as usize
    )
}

pub(crate) mod serde_fraction {
    use super::{fraction_string, Rational};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fraction_string(r))
    }
}
