use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{Polynomial, PowerSeries, TermRecord, Var};
use crate::{Error, Result};

/// `G_1, …, G_d` and optionally `G_{d+1}`, power series in `d` variables with
/// non-zero constant terms, known below total degree `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionalSystem {
    d: usize,
    g: Vec<PowerSeries>,
    order: u32,
}

/// JSON form: each `G_t` as a list of term records.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionalSystemRecord {
    pub d: usize,
    pub order: u32,
    pub g: Vec<Vec<TermRecord>>,
}

impl FunctionalSystem {
    /// `g` holds `d` or `d + 1` series; terms at or above `order` are dropped.
    pub fn new(d: usize, g: Vec<Polynomial>, order: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::invalid("a functional system needs at least one variable"));
        }
        if g.len() != d && g.len() != d + 1 {
            return Err(Error::invalid(format!("expected {d} or {} series, got {}", d + 1, g.len())));
        }
        if order == 0 {
            return Err(Error::precondition("truncation order must be at least 1"));
        }
        for (t, p) in g.iter().enumerate() {
            for (m, _) in p.terms() {
                for &(v, _) in m.powers() {
                    match v {
                        Var::Plain(k) if k >= 1 && k as usize <= d => {}
                        _ => return Err(Error::invalid(format!("G_{} uses variable {v} outside x1..x{d}", t + 1))),
                    }
                }
            }
            if p.constant_term().is_zero() {
                return Err(Error::precondition(format!("G_{} has zero constant term", t + 1)));
            }
        }
        Ok(FunctionalSystem {
            d,
            g: g.into_iter().map(|p| PowerSeries::new(p, order)).collect(),
            order,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `G_t`, `t ∈ [d]` or `t = d + 1` when present.
    pub fn g(&self, t: usize) -> &PowerSeries {
        &self.g[t - 1]
    }

    /// Whether `G_{d+1}` was given.
    pub fn has_output(&self) -> bool {
        self.g.len() == self.d + 1
    }

    pub(crate) fn output(&self) -> Result<&PowerSeries> {
        if !self.has_output() {
            return Err(Error::precondition(format!("the system has no G_{}", self.d + 1)));
        }
        Ok(&self.g[self.d])
    }

    /// Rejects multi-indices the truncation cannot resolve.
    pub(crate) fn check_index(&self, n: &[u32]) -> Result<()> {
        if n.len() != self.d {
            return Err(Error::invalid(format!("multi-index has {} entries, expected {}", n.len(), self.d)));
        }
        let total: u32 = n.iter().sum();
        if total >= self.order {
            return Err(Error::precondition(format!(
                "total degree {total} is not below the truncation order {}",
                self.order
            )));
        }
        Ok(())
    }

    pub fn to_record(&self) -> FunctionalSystemRecord {
        FunctionalSystemRecord {
            d: self.d,
            order: self.order,
            g: self.g.iter().map(|s| s.body().to_records()).collect(),
        }
    }

    pub fn from_record(r: &FunctionalSystemRecord) -> Result<Self> {
        let g = r.g.iter().map(|t| Polynomial::from_records(t)).collect::<Result<Vec<_>>>()?;
        FunctionalSystem::new(r.d, g, r.order)
    }
}

/// How the fixed point is reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Schedule {
    /// Substitute the whole truncated series `order` times.
    WholeSeries,
    /// Raise the known order by one per pass.
    DegreeByDegree,
}

fn step(system: &FunctionalSystem, f: &[PowerSeries], order: u32) -> Vec<PowerSeries> {
    (1..=system.d)
        .map(|t| {
            let inner = system.g(t).with_order(order).compose(f, order);
            inner.shift(Var::Plain(t as u32)).with_order(order + 1)
        })
        .collect()
}

/// `(f_1, …, f_d)` with `f_t = x_t G_t(f)`, by the given schedule.
pub fn solve_with(system: &FunctionalSystem, schedule: Schedule) -> Vec<PowerSeries> {
    let order = system.order;
    match schedule {
        Schedule::WholeSeries => {
            let mut f = vec![PowerSeries::zero(order); system.d];
            for _ in 0..order {
                f = step(system, &f, order).into_iter().map(|s| s.with_order(order)).collect();
            }
            f
        }
        Schedule::DegreeByDegree => {
            // f has no constant term, so it is exactly zero below order 1
            let mut f = vec![PowerSeries::zero(1); system.d];
            for k in 1..order {
                f = step(system, &f, k);
            }
            f.into_iter().map(|s| PowerSeries::new(s.body().clone(), order)).collect()
        }
    }
}

pub fn solve_functional_system(system: &FunctionalSystem) -> Vec<PowerSeries> {
    solve_with(system, Schedule::DegreeByDegree)
}

/// `f_t - x_t G_t(f)` for each `t`, at the system's order.
pub fn residual(system: &FunctionalSystem, f: &[PowerSeries]) -> Vec<PowerSeries> {
    let order = system.order;
    step(system, f, order)
        .iter()
        .zip(f)
        .map(|(rhs, ft)| ft.sub(&rhs.with_order(order)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Monomial, Rational};

    fn x(t: u32) -> Polynomial {
        Polynomial::var(Var::Plain(t))
    }

    fn geometric(t: u32, k: u32) -> Polynomial {
        (0..k).fold(Polynomial::zero(), |acc, e| &acc + &x(t).pow(e))
    }

    #[test]
    fn trivial_system() {
        let s = FunctionalSystem::new(1, vec![Polynomial::one()], 4).unwrap();
        assert_eq!(solve_functional_system(&s)[0].body(), &x(1));
    }

    #[test]
    fn catalan() {
        let s = FunctionalSystem::new(1, vec![geometric(1, 6)], 6).unwrap();
        let f = solve_functional_system(&s);
        let coeffs: Vec<Rational> = (1..6).map(|k| f[0].coefficient(&Monomial::from_powers([(Var::Plain(1), k)]))).collect();
        let expected: Vec<Rational> = [1, 1, 2, 5, 14].iter().map(|&c: &i64| Rational::from_integer(c.into())).collect();
        assert_eq!(coeffs, expected);
        assert_eq!(solve_with(&s, Schedule::WholeSeries), f);
        assert!(residual(&s, &f).iter().all(|r| r.body().is_zero()));
    }

    #[test]
    fn terminating_substitution() {
        let s = FunctionalSystem::new(2, vec![&Polynomial::one() + &x(2), Polynomial::one()], 5).unwrap();
        let f = solve_functional_system(&s);
        assert_eq!(f[1].body(), &x(2));
        assert_eq!(f[0].body(), &(&x(1) * &(&Polynomial::one() + &x(2))));
    }

    #[test]
    fn rejections() {
        assert!(matches!(FunctionalSystem::new(1, vec![x(1)], 4), Err(Error::Precondition(_))));
        assert!(matches!(FunctionalSystem::new(1, vec![&x(2) + &Polynomial::one()], 4), Err(Error::Invalid(_))));
        assert!(FunctionalSystem::new(2, vec![Polynomial::one()], 4).is_err());
    }

    #[test]
    fn record_round_trip() {
        let s = FunctionalSystem::new(1, vec![geometric(1, 4), Polynomial::from_int(2)], 4).unwrap();
        assert_eq!(FunctionalSystem::from_record(&s.to_record()).unwrap(), s);
    }
}
