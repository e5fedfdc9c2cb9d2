//! Exact rational scalar helpers shared by the set machinery.
//!
//! All set-side quantities (endpoints, measures, covering scales) are
//! `BigRational` so that counts and measures carry no rounding error.
//! Floating point only enters when a value is handed to the numeric side.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar used for set endpoints, scales and measures.
pub type Q = BigRational;

/// `n` as an exact rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Exact `2^e` for any integer exponent.
pub fn pow2(e: i64) -> Q {
    let one = BigInt::one();
    if e >= 0 {
        Q::from_integer(one << (e as usize))
    } else {
        Q::new(one.clone(), one << ((-e) as usize))
    }
}

/// Exact rational `num/den`.
pub fn qr(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn q_to_f64(q: &Q) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Exact conversion of a finite `f64` (every finite float is a dyadic rational).
pub fn q_from_f64(x: f64) -> Option<Q> {
    Q::from_float(x)
}

/// Largest `e` with `2^e <= q`. Requires `q > 0`.
pub fn floor_log2(q: &Q) -> i64 {
    assert!(q.is_positive(), "floor_log2 requires a positive argument");
    let n_bits = q.numer().bits() as i64;
    let d_bits = q.denom().bits() as i64;
    // 2^(b-1) <= x < 2^b for a b-bit integer, so the true exponent is
    // within one of n_bits - d_bits.
    let mut e = n_bits - d_bits;
    while pow2(e) > *q {
        e -= 1;
    }
    while pow2(e + 1) <= *q {
        e += 1;
    }
    e
}

/// Smallest `e` with `2^e >= q`. Requires `q > 0`.
pub fn ceil_log2(q: &Q) -> i64 {
    let e = floor_log2(q);
    if pow2(e) == *q {
        e
    } else {
        e + 1
    }
}

/// Parses "3", "-1.25", "4/3" or "2^-7" into an exact rational.
pub fn parse_q(s: &str) -> Result<Q, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational literal".into());
    }
    if let Some(rest) = s.strip_prefix("2^") {
        let e: i64 = rest
            .parse()
            .map_err(|_| format!("bad power-of-two exponent in `{s}`"))?;
        return Ok(pow2(e));
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| format!("bad numerator in `{s}`"))?;
        let d: BigInt = d.trim().parse().map_err(|_| format!("bad denominator in `{s}`"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in `{s}`"));
        }
        return Ok(Q::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let sign = if int.trim_start().starts_with('-') { -1 } else { 1 };
        let int: BigInt = if int == "-" || int.is_empty() {
            BigInt::zero()
        } else {
            int.parse().map_err(|_| format!("bad decimal in `{s}`"))?
        };
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(format!("bad decimal fraction in `{s}`"));
        }
        let digits = frac.len() as u32;
        let fnum: BigInt = frac.parse().map_err(|_| format!("bad decimal fraction in `{s}`"))?;
        let den = BigInt::from(10u32).pow(digits);
        let frac_q = Q::new(fnum * sign, den);
        return Ok(Q::from_integer(int) + frac_q);
    }
    let n: BigInt = s.parse().map_err(|_| format!("bad rational literal `{s}`"))?;
    Ok(Q::from_integer(n))
}

/// Compact exact rendering: integers bare, otherwise "n/d".
pub fn fmt_q(q: &Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow2_roundtrip() {
        assert_eq!(pow2(0), qi(1));
        assert_eq!(pow2(3), qi(8));
        assert_eq!(pow2(-2), qr(1, 4));
    }

    #[test]
    fn log2_bounds() {
        assert_eq!(floor_log2(&qi(1)), 0);
        assert_eq!(floor_log2(&qi(7)), 2);
        assert_eq!(floor_log2(&qr(3, 4)), -1);
        assert_eq!(ceil_log2(&qi(8)), 3);
        assert_eq!(ceil_log2(&qi(9)), 4);
        assert_eq!(ceil_log2(&qr(1, 3)), -1);
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_q("4/3").unwrap(), qr(4, 3));
        assert_eq!(parse_q("1.25").unwrap(), qr(5, 4));
        assert_eq!(parse_q("-0.5").unwrap(), qr(-1, 2));
        assert_eq!(parse_q("2^-5").unwrap(), pow2(-5));
        assert_eq!(parse_q("7").unwrap(), qi(7));
        assert!(parse_q("1/0").is_err());
    }

    #[test]
    fn f64_exact() {
        let q = q_from_f64(0.1).unwrap();
        // 0.1 is not exactly 1/10 in binary; the conversion is exact, the
        // literal is not.
        assert_ne!(q, qr(1, 10));
        assert_eq!(q_from_f64(0.5).unwrap(), qr(1, 2));
    }
}
