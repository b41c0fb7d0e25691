//! Exact number helpers and their string serialization.
//!
//! Every mathematical integer or rational that leaves the library goes
//! through here so the JSON form is fixed: integers as decimal strings,
//! rationals as `"num/den"` in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    BigRational::new(num.into(), den.into())
}

pub fn from_int(v: &BigInt) -> Rational {
    BigRational::from_integer(v.clone())
}

/// `"num/den"`, always with the denominator, even when it is 1.
pub fn format_ratio(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn is_odd(v: &BigInt) -> bool {
    !(v % 2u32).is_zero()
}

/// Residue of `v` mod `m` in `0..m`.
pub fn residue(v: &BigInt, m: u64) -> u64 {
    let m = BigInt::from(m);
    let r = ((v % &m) + &m) % &m;
    u64::try_from(r).expect("residue fits")
}

pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::Integer::gcd(a, b)
}

pub fn is_coprime(a: &BigInt, b: &BigInt) -> bool {
    gcd(a, b).is_one()
}

pub fn abs_ratio(a: &BigInt, b: &BigInt) -> Option<Rational> {
    if b.is_zero() {
        None
    } else {
        Some(ratio(a.clone(), b.clone()).abs())
    }
}

pub mod int_string {
    use num_bigint::BigInt;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }
}

pub mod ratio_string {
    use super::{format_ratio, Rational};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_ratio(v))
    }
}

pub mod pair_string {
    use num_bigint::BigInt;
    use serde::ser::SerializeTuple;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &(BigInt, BigInt), s: S) -> Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&v.0.to_string())?;
        t.serialize_element(&v.1.to_string())?;
        t.end()
    }
}
