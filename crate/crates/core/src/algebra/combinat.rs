use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::{Error, Result};

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `n choose k`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Binomial with a possibly negative top index; zero whenever the top is negative.
pub fn binomial_signed(n: i64, k: u64) -> BigUint {
    if n < 0 {
        BigUint::zero()
    } else {
        binomial(n as u64, k)
    }
}

/// `(Σ parts)! / Π parts!`.
pub fn multinomial(parts: &[u64]) -> BigUint {
    let mut total = 0u64;
    let mut acc = BigUint::one();
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}

/// Converts a rational that must be a non-negative integer into a count.
pub fn rational_to_count(q: &Rational) -> Result<BigUint> {
    if !q.denom().is_one() || q.numer().is_negative() {
        return Err(Error::NonIntegral(q.to_string()));
    }
    Ok(q.numer().to_biguint().expect("non-negative"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(factorial(0), BigUint::from(1u32));
        assert_eq!(factorial(6), BigUint::from(720u32));
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(2, 5), BigUint::zero());
        assert_eq!(binomial_signed(-1, 0), BigUint::zero());
        assert_eq!(multinomial(&[1, 1, 0]), BigUint::from(2u32));
        assert_eq!(multinomial(&[2, 1, 1]), BigUint::from(12u32));
    }

    #[test]
    fn non_integral_is_rejected() {
        let half = Rational::new(1.into(), 2.into());
        assert!(rational_to_count(&half).is_err());
        assert_eq!(
            rational_to_count(&Rational::from_integer(7.into())).unwrap(),
            BigUint::from(7u32)
        );
    }
}
