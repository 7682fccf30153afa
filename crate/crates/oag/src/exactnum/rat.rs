//! Arbitrary-precision rationals and their `"p/q"` string form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number. Always stored reduced with a positive denominator
/// (`BigRational` maintains both invariants).
pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"` or `"p/q"`. Rejects zero denominators.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::input(format!("malformed rational {s:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::input(format!("malformed rational {s:?}")))?;
    if den.is_zero() {
        return Err(Error::input(format!("malformed rational {s:?}: zero denominator")));
    }
    Ok(Rat::new(num, den))
}

/// Canonical string form: `"n"` for integers, `"p/q"` otherwise.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Simplest rational in the open interval `(lo, hi)` (Stern–Brocot walk).
/// Requires `lo < hi`.
pub fn simplest_rational_between(lo: &Rat, hi: &Rat) -> Rat {
    assert!(lo < hi, "empty interval");
    // An integer in the gap is simplest; smallest magnitude wins.
    let fl = lo.floor();
    let candidate = &fl + Rat::one();
    if &candidate < hi {
        if lo.is_negative() && hi.is_positive() {
            return Rat::zero();
        }
        if lo < &candidate {
            return candidate;
        }
    }
    if lo == &fl && &fl + Rat::one() == *hi {
        // open unit interval (n, n+1): no integer inside, so n + 1/2.
        return fl + rat(1, 2);
    }
    // Stern–Brocot: invariant lo, hi > some integer base.
    let base = lo.floor();
    let lo_f = lo - &base;
    let hi_f = hi - &base;
    if lo_f.is_zero() {
        // (0, hi_f): pick 1/ceil(1/hi_f + 1)
        let inv = hi_f.recip();
        let d = inv.floor() + Rat::one();
        return base + d.recip();
    }
    // Both fractional parts in (0, 1]: mediant search via continued fractions.
    base + sb_unit(&lo_f, &hi_f)
}

/// Simplest rational strictly inside `(lo, hi)` with `0 <= lo < hi <= 1`-ish.
fn sb_unit(lo: &Rat, hi: &Rat) -> Rat {
    // Continued-fraction style: if there's an integer in (1/hi, 1/lo) the
    // reciprocal of it is the answer at this level.
    let one = Rat::one();
    if lo < &one && &one < hi {
        return one;
    }
    if hi <= &one {
        // Invert: simplest in (1/hi, 1/lo), reciprocal.
        let a = hi.recip();
        let b = lo.recip();
        return simplest_rational_between(&a, &b).recip();
    }
    // lo >= 1: shift down by floor(lo).
    let base = lo.floor();
    simplest_rational_between(&(lo - &base), &(hi - &base)) + base
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(format_rat(&parse_rat("3/6").unwrap()), "1/2");
        assert_eq!(format_rat(&parse_rat("-4/2").unwrap()), "-2");
        assert_eq!(format_rat(&parse_rat("7").unwrap()), "7");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn simplest_between() {
        let s = simplest_rational_between(&rat_int(0), &rat_int(10));
        assert_eq!(s, rat_int(1));
        let s = simplest_rational_between(&rat_int(-3), &rat_int(5));
        assert_eq!(s, rat_int(0));
        let s = simplest_rational_between(&rat(1, 1), &rat(3, 2));
        assert!(rat(1, 1) < s && s < rat(3, 2));
        let s = simplest_rational_between(&rat(2, 7), &rat(3, 7));
        assert!(rat(2, 7) < s && s < rat(3, 7));
        // (1, sqrt2-ish): simplest rational in (1, 1.41) should be 4/3 or similar
        let s = simplest_rational_between(&rat(1, 1), &rat(141, 100));
        assert!(rat(1, 1) < s && s < rat(141, 100));
    }
}
