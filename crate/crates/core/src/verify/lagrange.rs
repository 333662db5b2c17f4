use crate::algebra::{factorial, Monomial, Polynomial, Rational, Var};
use crate::lagrange::{
    direct_coefficient, lagrange_rhs_coefficient, residual, solve_with, tree_sum_coefficient, FunctionalSystem,
    Schedule,
};
use crate::Result;

use super::{compositions, Checker, VerifyConfig};

/// Coefficients up to this total degree are compared.
const MAX_DEGREE: u32 = 6;
const ORDER: u32 = MAX_DEGREE + 1;

fn y(t: u32) -> Polynomial {
    Polynomial::var(Var::Plain(t))
}

fn c(k: i64) -> Polynomial {
    Polynomial::from_int(k)
}

/// `Σ_{k < ORDER} p^k`, i.e. `1/(1 - p)` truncated.
fn geometric(p: &Polynomial) -> Polynomial {
    (1..ORDER).fold(Polynomial::one(), |acc, k| &acc + &p.pow(k)).truncate(Some(ORDER))
}

fn exp_truncated(p: &Polynomial) -> Polynomial {
    (1..ORDER).fold(Polynomial::one(), |acc, k| {
        let inv = Rational::new(1.into(), factorial(u64::from(k)).into());
        &acc + &p.pow(k).scale(&inv)
    })
}

/// The systems compared, each with an output series `G_{d+1}`.
pub(crate) fn battery() -> Vec<(&'static str, usize, Vec<Polynomial>)> {
    let sum3 = &(&y(1) + &y(2)) + &y(3);
    vec![
        ("catalan", 1, vec![geometric(&y(1)), geometric(&y(1))]),
        ("exponential", 1, vec![exp_truncated(&y(1)), &c(1) + &y(1)]),
        ("motzkin", 1, vec![&(&c(1) + &y(1)) + &y(1).pow(2), &c(1) + &y(1).scale(&Rational::from_integer(3.into()))]),
        (
            "two-type polynomial",
            2,
            vec![&c(1) + &y(2), &(&c(1) + &y(1)) + &(&y(1) * &y(2)), &(&c(1) + &y(1)) + &y(2)],
        ),
        (
            "two-type geometric",
            2,
            vec![geometric(&(&y(1) + &y(2))), &c(1) + &y(1).scale(&Rational::from_integer(2.into())), &c(1) + &(&y(1) * &y(2))],
        ),
        (
            "three-type polynomial",
            3,
            vec![&(&c(1) + &y(2)) + &y(3), &c(1) + &(&y(1) * &y(3)), (&c(1) + &y(1)).pow(2), &c(1) + &sum3],
        ),
        ("three-type geometric", 3, vec![geometric(&sum3), geometric(&sum3), geometric(&sum3), geometric(&sum3)]),
    ]
}

fn monomial(n: &[u32]) -> Monomial {
    Monomial::from_powers(n.iter().enumerate().map(|(t, &e)| (Var::Plain(t as u32 + 1), e)))
}

pub(crate) fn lagrange(ck: &mut Checker, cfg: &VerifyConfig) -> Result<()> {
    for (name, d, g) in battery() {
        if d > cfg.max_d {
            continue;
        }
        let system = FunctionalSystem::new(d, g, ORDER)?;
        let f = solve_with(&system, Schedule::DegreeByDegree);
        let whole = solve_with(&system, Schedule::WholeSeries);
        ck.holds(|| format!("{name}: both schedules agree"), f == whole);
        let res = residual(&system, &f);
        ck.holds(|| format!("{name}: residual vanishes"), res.iter().all(|r| r.body().is_zero()));
        if name == "catalan" {
            let got: Vec<Rational> = (1..=5).map(|k| f[0].coefficient(&monomial(&[k]))).collect();
            let want: Vec<Rational> = [1, 1, 2, 5, 14].iter().map(|&k| Rational::from_integer(k.into())).collect();
            ck.eq(|| "catalan numbers".into(), want, got);
        }
        for total in 1..=MAX_DEGREE {
            for n in compositions(total, d, 0) {
                let at = |what: &str| format!("{name}: {what} at {n:?}");
                for rho in 1..=d as u32 {
                    let solved = f[rho as usize - 1].coefficient(&monomial(&n));
                    ck.eq(|| at(&format!("f_{rho}")), solved, tree_sum_coefficient(&system, rho, &n, &cfg.bounds)?);
                }
                let direct = direct_coefficient(&system, &n)?;
                let trees = tree_sum_coefficient(&system, d as u32 + 1, &n, &cfg.bounds)?;
                ck.eq(|| at("output series, trees"), &direct, &trees);
                if n.iter().all(|&k| k > 0) {
                    let rhs = lagrange_rhs_coefficient(&system, &n, &cfg.bounds)?;
                    ck.eq(|| at("output series, inversion formula"), &direct, &rhs);
                }
            }
        }
    }
    Ok(())
}
