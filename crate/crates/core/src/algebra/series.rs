use std::collections::HashMap;

use num_traits::Zero;

use super::{Monomial, Polynomial, Rational, Var};

/// A multivariate power series known up to (but excluding) total degree `order`.
///
/// Every term of `body` has degree `< order`; arithmetic drops anything at or
/// above the order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    body: Polynomial,
    order: u32,
}

impl PowerSeries {
    pub fn new(body: Polynomial, order: u32) -> Self {
        PowerSeries {
            body: body.truncate(Some(order)),
            order,
        }
    }

    pub fn zero(order: u32) -> Self {
        PowerSeries::new(Polynomial::zero(), order)
    }

    pub fn body(&self) -> &Polynomial {
        &self.body
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.body.coefficient(m)
    }

    pub fn constant_term(&self) -> Rational {
        self.body.constant_term()
    }

    /// Re-truncates to a lower order. Raising the order is not possible and
    /// leaves the order unchanged.
    pub fn with_order(&self, order: u32) -> PowerSeries {
        PowerSeries::new(self.body.clone(), order.min(self.order))
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        PowerSeries::new(&self.body + &other.body, self.order.min(other.order))
    }

    pub fn sub(&self, other: &PowerSeries) -> PowerSeries {
        PowerSeries::new(&self.body - &other.body, self.order.min(other.order))
    }

    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order.min(other.order);
        PowerSeries {
            body: self.body.mul_truncated(&other.body, Some(order)),
            order,
        }
    }

    pub fn pow(&self, k: u32) -> PowerSeries {
        PowerSeries {
            body: self.body.pow_truncated(k, Some(self.order)),
            order: self.order,
        }
    }

    /// Formal partial derivative; the known order drops by one.
    pub fn partial_derivative(&self, v: Var) -> PowerSeries {
        let order = self.order.saturating_sub(1);
        PowerSeries::new(self.body.partial_derivative(v), order)
    }

    /// Multiplies by a single variable; the known order grows by one.
    pub fn shift(&self, v: Var) -> PowerSeries {
        PowerSeries {
            body: &self.body * &Polynomial::var(v),
            order: self.order + 1,
        }
    }

    /// Substitutes `args[k]` for `Plain(k + 1)`, truncating at `order`.
    ///
    /// Exact to `order` whenever every argument has zero constant term and is
    /// itself known to at least `order`.
    pub fn compose(&self, args: &[PowerSeries], order: u32) -> PowerSeries {
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in self.body.terms() {
            if m.degree() >= order
                && args.iter().all(|a| a.constant_term().is_zero())
            {
                // every argument raises degree, so this term cannot contribute
                continue;
            }
            let mut term = Polynomial::constant(c.clone());
            let mut rest = Vec::new();
            for &(v, e) in m.powers() {
                match v {
                    Var::Plain(k) if (k as usize) >= 1 && (k as usize) <= args.len() => {
                        let idx = k as usize - 1;
                        let p = powers
                            .entry((idx, e))
                            .or_insert_with(|| args[idx].body.pow_truncated(e, Some(order)))
                            .clone();
                        term = term.mul_truncated(&p, Some(order));
                    }
                    _ => rest.push((v, e)),
                }
            }
            if !rest.is_empty() {
                term = term.mul_truncated(
                    &Polynomial::term(Monomial::from_powers(rest), num_traits::One::one()),
                    Some(order),
                );
            }
            out = &out + &term;
        }
        PowerSeries::new(out, order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(t: u32) -> Polynomial {
        Polynomial::var(Var::Plain(t))
    }

    #[test]
    fn derivative_power_rule() {
        let s = PowerSeries::new((&x(1) + &x(2)).pow(3), 4);
        let d = s.partial_derivative(Var::Plain(1));
        assert_eq!(d.order(), 3);
        let expected = (&x(1) + &x(2)).pow(2).scale(&Rational::from_integer(3.into()));
        assert_eq!(d.body(), &expected);
        assert!(PowerSeries::new(Polynomial::from_int(4), 3)
            .partial_derivative(Var::Plain(1))
            .body()
            .is_zero());
    }

    #[test]
    fn multiplication_truncates() {
        let s = PowerSeries::new(&Polynomial::one() + &x(1), 3);
        let cube = s.pow(3);
        // (1 + x)^3 = 1 + 3x + 3x^2 + x^3, order 3 drops x^3
        assert_eq!(cube.body().num_terms(), 3);
        assert_eq!(cube.body().degree(), Some(2));
    }

    #[test]
    fn compose_geometric() {
        // 1/(1-y) at y = x, truncated
        let geo = PowerSeries::new(
            (0..5).fold(Polynomial::zero(), |acc, k| &acc + &x(1).pow(k)),
            5,
        );
        let arg = PowerSeries::new(x(1), 5);
        assert_eq!(geo.compose(&[arg], 5), geo);
    }
}
