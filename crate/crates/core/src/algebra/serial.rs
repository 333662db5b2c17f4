//! Canonical JSON records for polynomials and series.
//!
//! A polynomial is a list of term records in graded-lex order; a series wraps
//! that list with its truncation order. Integers that do not fit in an `i64`
//! are written as decimal strings.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Monomial, Polynomial, PowerSeries, Rational, Var};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub exponents: Vec<(Var, u32)>,
    #[serde(with = "big_int")]
    pub numerator: BigInt,
    #[serde(with = "big_int")]
    pub denominator: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRecord {
    pub order: u32,
    pub terms: Vec<TermRecord>,
}

impl Polynomial {
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms()
            .map(|(m, c)| TermRecord {
                exponents: m.powers().to_vec(),
                numerator: c.numer().clone(),
                denominator: c.denom().clone(),
            })
            .collect()
    }

    pub fn from_records(records: &[TermRecord]) -> Result<Polynomial> {
        let mut p = Polynomial::zero();
        for r in records {
            if !r.denominator.is_positive() {
                return Err(Error::invalid("term denominator must be positive"));
            }
            if r.exponents.iter().any(|&(_, e)| e == 0) {
                return Err(Error::invalid("zero exponents are not stored"));
            }
            let m = Monomial::from_powers(r.exponents.iter().copied());
            p.add_term(m, Rational::new(r.numerator.clone(), r.denominator.clone()));
        }
        Ok(p)
    }
}

impl PowerSeries {
    pub fn to_record(&self) -> SeriesRecord {
        SeriesRecord {
            order: self.order(),
            terms: self.body().to_records(),
        }
    }

    pub fn from_record(r: &SeriesRecord) -> Result<PowerSeries> {
        Ok(PowerSeries::new(Polynomial::from_records(&r.terms)?, r.order))
    }
}

mod big_int {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        match v.to_i64() {
            Some(k) => s.serialize_i64(k),
            None => s.serialize_str(&v.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
        struct IntVisitor;
        impl<'de> Visitor<'de> for IntVisitor {
            type Value = BigInt;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<BigInt, E> {
                Ok(v.into())
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<BigInt, E> {
                Ok(v.into())
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<BigInt, E> {
                v.parse().map_err(E::custom)
            }
        }
        d.deserialize_any(IntVisitor)
    }
}
