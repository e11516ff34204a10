//! Integer scalar abstraction and small vector helpers.
//!
//! Every algorithm in the crate is written against [`Int`], which is
//! implemented for any signed integer type from the `num` ecosystem
//! (`i64`, `i128`, `BigInt`, ...). Fixed-width types are convenient for
//! quick experiments; `BigInt` is the default used by the crate-root
//! aliases and the command line tool.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer usable as the scalar of lattices, cones and semigroups.
pub trait Int:
    Clone + Debug + Display + Hash + Ord + Send + Sync + Integer + Signed + FromPrimitive + ToPrimitive + 'static
{
}

impl<T> Int for T where
    T: Clone + Debug + Display + Hash + Ord + Send + Sync + Integer + Signed + FromPrimitive + ToPrimitive + 'static
{
}

/// Exact rationals over the integer scalar.
pub type Rational<Z> = Ratio<Z>;

/// Converts a machine integer into the scalar type.
pub fn int<Z: Int>(v: i64) -> Z {
    Z::from_i64(v).expect("scalar type cannot represent a small machine integer")
}

/// Converts a slice of machine integers into a scalar vector.
pub fn vector<Z: Int>(v: &[i64]) -> Vec<Z> {
    v.iter().map(|&x| int(x)).collect()
}

pub fn dot<Z: Int>(a: &[Z], b: &[Z]) -> Z {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Z::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn add<Z: Int>(a: &[Z], b: &[Z]) -> Vec<Z> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn sub<Z: Int>(a: &[Z], b: &[Z]) -> Vec<Z> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn neg<Z: Int>(a: &[Z]) -> Vec<Z> {
    a.iter().map(|x| -x.clone()).collect()
}

pub fn scale<Z: Int>(c: &Z, a: &[Z]) -> Vec<Z> {
    a.iter().map(|x| c.clone() * x.clone()).collect()
}

/// `a*u - b*v`, the workhorse of fraction-free elimination.
pub fn combine<Z: Int>(a: &Z, u: &[Z], b: &Z, v: &[Z]) -> Vec<Z> {
    u.iter().zip(v).map(|(x, y)| a.clone() * x.clone() - b.clone() * y.clone()).collect()
}

pub fn is_zero<Z: Int>(a: &[Z]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn zeros<Z: Int>(n: usize) -> Vec<Z> {
    vec![Z::zero(); n]
}

pub fn unit<Z: Int>(n: usize, i: usize) -> Vec<Z> {
    let mut v = zeros(n);
    v[i] = Z::one();
    v
}

/// Non-negative gcd of the entries (0 for the zero vector).
pub fn content<Z: Int>(a: &[Z]) -> Z {
    a.iter().fold(Z::zero(), |g, x| g.gcd(x))
}

/// Divides out the content. The zero vector is returned unchanged.
pub fn primitive<Z: Int>(a: &[Z]) -> Vec<Z> {
    let g = content(a);
    if g.is_zero() || g.is_one() {
        return a.to_vec();
    }
    a.iter().map(|x| x.clone() / g.clone()).collect()
}

/// Scales a rational vector to the primitive integer vector on the same ray.
pub fn primitive_from_rational<Z: Int>(a: &[Rational<Z>]) -> Vec<Z> {
    let lcm = a.iter().fold(Z::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<Z> = a.iter().map(|x| x.numer().clone() * (lcm.clone() / x.denom().clone())).collect();
    primitive(&ints)
}

pub fn to_rational<Z: Int>(a: &[Z]) -> Vec<Rational<Z>> {
    a.iter().map(|x| Rational::from_integer(x.clone())).collect()
}

/// Sum of absolute values.
pub fn l1_norm<Z: Int>(a: &[Z]) -> Z {
    a.iter().fold(Z::zero(), |s, x| s + x.abs())
}

/// Formats an integer vector as `[a,b,c]`.
pub fn fmt_vec<Z: Int>(a: &[Z]) -> String {
    let parts: Vec<String> = a.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

pub fn fmt_vecs<Z: Int>(vs: &[Vec<Z>]) -> String {
    let parts: Vec<String> = vs.iter().map(|v| fmt_vec(v)).collect();
    format!("[{}]", parts.join(","))
}

/// Converts between scalar types; panics if the value does not fit.
pub fn convert<A: Int, B: Int>(a: &A) -> B {
    if let Some(v) = a.to_i64() {
        return int(v);
    }
    let s = a.to_string();
    let neg = s.starts_with('-');
    let digits = s.trim_start_matches('-');
    let ten: B = int(10);
    let mut acc = B::zero();
    for ch in digits.chars() {
        let d = ch.to_digit(10).expect("decimal digit") as i64;
        acc = acc * ten.clone() + int(d);
    }
    if neg {
        -acc
    } else {
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn primitive_divides_content() {
        let v: Vec<i64> = vector(&[4, -6, 0]);
        assert_eq!(primitive(&v), vec![2, -3, 0]);
        assert_eq!(primitive(&zeros::<i64>(2)), vec![0, 0]);
    }

    #[test]
    fn rational_scaling() {
        let v = vec![Rational::new(1i64, 2), Rational::new(-1, 3)];
        assert_eq!(primitive_from_rational(&v), vec![3, -2]);
    }

    #[test]
    fn conversion_across_scalars() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let back: BigInt = convert::<BigInt, BigInt>(&big);
        assert_eq!(big, back);
        let small: i64 = convert::<BigInt, i64>(&BigInt::from(-42));
        assert_eq!(small, -42);
    }
}
