use std::collections::HashMap;

use super::Polynomial;
use crate::{Error, Result};

/// Determinant by Laplace expansion along successive rows.
///
/// Minors are memoized by their column set, so the cost is `O(2^n · n)`
/// polynomial products rather than `n!`.
pub fn determinant(m: &[Vec<Polynomial>], max_dim: usize) -> Result<Polynomial> {
    let n = m.len();
    Error::check_bound("matrix dimension", n, max_dim)?;
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::invalid("matrix is not square"));
    }
    if n == 0 {
        return Ok(Polynomial::one());
    }
    let mut memo: HashMap<u32, Polynomial> = HashMap::new();
    Ok(minor(m, 0, (1u32 << n) - 1, &mut memo))
}

/// Determinant of rows `row..n` restricted to the columns in `cols`.
fn minor(m: &[Vec<Polynomial>], row: usize, cols: u32, memo: &mut HashMap<u32, Polynomial>) -> Polynomial {
    if cols == 0 {
        return Polynomial::one();
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let mut acc = Polynomial::zero();
    let mut sign_positive = true;
    for c in 0..m.len() {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = &m[row][c];
        if !entry.is_zero() {
            let rest = minor(m, row + 1, cols & !(1 << c), memo);
            let term = entry * &rest;
            acc = if sign_positive { &acc + &term } else { &acc - &term };
        }
        sign_positive = !sign_positive;
    }
    memo.insert(cols, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Rational, Var};
    use proptest::prelude::*;

    fn c(k: i64) -> Polynomial {
        Polynomial::from_int(k)
    }

    #[test]
    fn small_cases() {
        let p = Polynomial::var(Var::Plain(1));
        assert_eq!(determinant(&[vec![p.clone()]], 8).unwrap(), p);
        let diag = vec![vec![p.clone(), c(0)], vec![c(0), c(3)]];
        assert_eq!(determinant(&diag, 8).unwrap(), p.scale(&Rational::from_integer(3.into())));
        let m = vec![vec![c(1), c(2)], vec![c(3), c(4)]];
        assert_eq!(determinant(&m, 8).unwrap(), c(-2));
    }

    #[test]
    fn size_bound() {
        let m = vec![vec![c(1); 3]; 3];
        assert!(matches!(determinant(&m, 2), Err(Error::SizeBound { .. })));
    }

    fn int_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(prop::collection::vec(-5i64..6, n), n)
    }

    fn lift(m: &[Vec<i64>]) -> Vec<Vec<Polynomial>> {
        m.iter().map(|r| r.iter().map(|&k| c(k)).collect()).collect()
    }

    proptest! {
        #[test]
        fn vanishes_on_equal_rows(mut m in int_matrix(4)) {
            m[2] = m[0].clone();
            prop_assert!(determinant(&lift(&m), 8).unwrap().is_zero());
        }

        #[test]
        fn multilinear_in_a_row(m in int_matrix(3), r in prop::collection::vec(-5i64..6, 3), k in -3i64..4) {
            // det(row0 = a + k·r) = det(row0 = a) + k·det(row0 = r)
            let mut mixed = m.clone();
            for j in 0..3 { mixed[0][j] = m[0][j] + k * r[j]; }
            let mut only_r = m.clone();
            only_r[0] = r.clone();
            let lhs = determinant(&lift(&mixed), 8).unwrap();
            let rhs = &determinant(&lift(&m), 8).unwrap()
                + &determinant(&lift(&only_r), 8).unwrap().scale(&Rational::from_integer(k.into()));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
