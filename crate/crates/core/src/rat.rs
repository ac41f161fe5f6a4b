//! Small exact-rational helpers shared across modules: `p/q` string
//! (de)serialization, binomial coefficients, and integer powers of rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Parse a rational from `"p/q"` or `"p"` form (matching `BigRational`'s
/// `Display`). Whitespace around the string is tolerated; a zero denominator
/// is an error rather than a panic.
pub fn parse_ratio(s: &str) -> Result<BigRational, crate::Error> {
    let bad = || crate::Error::Parse(format!("bad rational {s:?}"));
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

/// Render a rational the way the JSON interfaces expect: `"p/q"`, or `"p"`
/// when the denominator is one.
pub fn ratio_string(q: &BigRational) -> String {
    q.to_string()
}

/// Binomial coefficient C(n, k) for nonnegative arguments.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// C(k, 2) = k(k-1)/2, valid for every integer k (always a nonnegative
/// integer).
pub fn choose2(k: i64) -> i64 {
    k * (k - 1) / 2
}

/// q^e for integer e of either sign; q must be nonzero when e < 0.
pub fn pow_i64(q: &BigRational, e: i64) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    let mut base = if e < 0 { q.recip() } else { q.clone() };
    let mut e = e.unsigned_abs();
    let mut acc = BigRational::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// True when the rational is an integer.
pub fn is_integer(q: &BigRational) -> bool {
    q.denom().is_one()
}

/// The integer value of a rational known to be integral.
pub fn to_i64(q: &BigRational) -> Option<i64> {
    if !is_integer(q) {
        return None;
    }
    let n = q.numer();
    i64::try_from(n.clone()).ok()
}

/// Sign as -1 / 0 / +1.
pub fn sign(q: &BigRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// Serde adapter: one `BigRational` as a `"p/q"` string.
pub mod qstr {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&ratio_string(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let raw = String::deserialize(d)?;
        parse_ratio(&raw).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter: `Vec<BigRational>` as a list of `"p/q"` strings.
pub mod qstr_vec {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(ratio_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| parse_ratio(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Serde adapter: a row-major rational matrix as nested `"p/q"` strings.
pub mod qstr_mat {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &[Vec<BigRational>], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(
            m.iter()
                .map(|row| row.iter().map(ratio_string).collect::<Vec<_>>()),
        )
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<Vec<Vec<BigRational>>, D::Error> {
        let raw = Vec::<Vec<String>>::deserialize(d)?;
        raw.iter()
            .map(|row| {
                row.iter()
                    .map(|s| parse_ratio(s).map_err(serde::de::Error::custom))
                    .collect()
            })
            .collect()
    }
}

/// Serde adapter: `Option<BigRational>` as an optional `"p/q"` string.
pub mod qstr_opt {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
        match q {
            Some(v) => s.serialize_some(&ratio_string(v)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<Option<BigRational>, D::Error> {
        let raw = Option::<String>::deserialize(d)?;
        raw.map(|s| parse_ratio(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_round_trip() {
        for s in ["3/4", "-3/4", "5", "0", "-12/7"] {
            let q = parse_ratio(s).unwrap();
            assert_eq!(ratio_string(&q), s);
        }
        assert_eq!(ratio_string(&parse_ratio("6/8").unwrap()), "3/4");
        assert!(parse_ratio("1/0").is_err());
        assert!(parse_ratio("x").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(3, 7), BigInt::from(0));
        assert_eq!(choose2(0), 0);
        assert_eq!(choose2(1), 0);
        assert_eq!(choose2(4), 6);
        assert_eq!(choose2(-1), 1);
    }

    #[test]
    fn powers() {
        let two = BigRational::from_integer(2.into());
        assert_eq!(pow_i64(&two, 10), BigRational::from_integer(1024.into()));
        assert_eq!(pow_i64(&two, -2), parse_ratio("1/4").unwrap());
        assert_eq!(pow_i64(&two, 0), BigRational::one());
    }
}
