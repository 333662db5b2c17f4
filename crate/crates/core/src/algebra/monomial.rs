use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Variable identifiers.
///
/// * `Edge(s, t, i)` marks a child of type `s` hanging from vertex `(t, i)`.
/// * `Root(s)` marks a root vertex of type `s` in a forest.
/// * `Plain(t)` is the `t`-th variable of a series in `d` variables.
///
/// Types and labels are 1-based. The derived order (variant first, then fields)
/// is the variable order used by the graded-lex monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    Edge(u32, u32, u32),
    Root(u32),
    Plain(u32),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Var::Edge(s, t, i) => write!(f, "x[{s},{t},{i}]"),
            Var::Root(s) => write!(f, "z[{s}]"),
            Var::Plain(t) => write!(f, "x{t}"),
        }
    }
}

/// A monomial: sorted `(variable, exponent)` pairs with no zero exponents.
///
/// Ordered graded-lexicographically: total degree first, then the monomial
/// with the larger exponent on the first differing variable is larger.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    powers: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        Monomial {
            powers: vec![(v, 1)],
        }
    }

    /// Builds a monomial from arbitrary pairs; repeated variables are merged and
    /// zero exponents dropped.
    pub fn from_powers<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Self {
        let mut powers: Vec<(Var, u32)> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        powers.sort_by_key(|p| p.0);
        let mut merged: Vec<(Var, u32)> = Vec::with_capacity(powers.len());
        for (v, e) in powers {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { powers: merged }
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.powers
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.powers
            .binary_search_by_key(&v, |p| p.0)
            .map(|k| self.powers[k].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.powers.iter().map(|p| p.1).sum()
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.powers, &other.powers);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { powers: out }
    }

    /// Lowers the exponent of `v` by one; `None` if `v` does not occur.
    pub(crate) fn lower(&self, v: Var) -> Option<(u32, Monomial)> {
        let k = self.powers.binary_search_by_key(&v, |p| p.0).ok()?;
        let e = self.powers[k].1;
        let mut powers = self.powers.clone();
        if e == 1 {
            powers.remove(k);
        } else {
            powers[k].1 -= 1;
        }
        Some((e, Monomial { powers }))
    }

    /// Whether `other` divides `self`; returns the quotient.
    pub fn divide(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.powers.len());
        let mut j = 0;
        for &(v, e) in &self.powers {
            let mut e = e;
            if j < other.powers.len() && other.powers[j].0 == v {
                if other.powers[j].1 > e {
                    return None;
                }
                e -= other.powers[j].1;
                j += 1;
            } else if j < other.powers.len() && other.powers[j].0 < v {
                return None;
            }
            if e > 0 {
                out.push((v, e));
            }
        }
        if j < other.powers.len() {
            return None;
        }
        Some(Monomial { powers: out })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.powers.iter().zip(&other.powers) {
                if a.0 != b.0 {
                    // `self` carries the smaller variable, which `other` lacks.
                    return if a.0 < b.0 {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    };
                }
                if a.1 != b.1 {
                    return a.1.cmp(&b.1);
                }
            }
            self.powers.len().cmp(&other.powers.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.powers.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.powers.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(t: u32) -> Var {
        Var::Plain(t)
    }

    #[test]
    fn graded_lex_order() {
        let x1 = Monomial::var(x(1));
        let x2 = Monomial::var(x(2));
        let x1x1 = x1.mul(&x1);
        let x1x2 = x1.mul(&x2);
        let x2x2 = x2.mul(&x2);
        assert!(Monomial::one() < x2);
        assert!(x2 < x1);
        assert!(x1 < x2x2);
        assert!(x2x2 < x1x2);
        assert!(x1x2 < x1x1);
    }

    #[test]
    fn merge_and_divide() {
        let m = Monomial::from_powers([(x(2), 1), (x(1), 2), (x(2), 1), (x(3), 0)]);
        assert_eq!(m.powers(), &[(x(1), 2), (x(2), 2)]);
        let q = m.divide(&Monomial::var(x(1))).unwrap();
        assert_eq!(q.powers(), &[(x(1), 1), (x(2), 2)]);
        assert!(m.divide(&Monomial::var(x(3))).is_none());
        assert_eq!(m.exponent(x(3)), 0);
    }
}
