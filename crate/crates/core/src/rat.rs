//! Exact rational cost values.

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Cost scalar used everywhere: an exact rational over `i128`.
pub type Rat = Ratio<i128>;

/// Shorthand for an integer-valued cost.
pub fn rat(v: i128) -> Rat {
    Ratio::from_integer(v)
}

/// Parses `"p/q"` or a plain integer.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let bad = || Error::InvalidRational(text.to_string());
    let s = text.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: i128 = num.trim().parse().map_err(|_| bad())?;
        let d: i128 = den.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        Ok(Ratio::new(n, d))
    } else {
        let n: i128 = s.parse().map_err(|_| bad())?;
        Ok(Ratio::from_integer(n))
    }
}

/// Formats as a plain integer when the denominator is one, `"p/q"` otherwise.
pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Rescales a slice of rationals to integers over their common denominator.
///
/// Returns the scaled numerators and the scale factor, so that
/// `values[i] == scaled[i] / scale` exactly.
pub fn scale_to_integers(values: &[Rat]) -> (Vec<i128>, i128) {
    let mut scale: i128 = 1;
    for v in values {
        scale = num_integer::lcm(scale, *v.denom());
    }
    let scaled = values
        .iter()
        .map(|v| v.numer() * (scale / v.denom()))
        .collect();
    (scaled, scale)
}
