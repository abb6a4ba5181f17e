//! q-analogues: q-integers, q-binomials and q-multinomials as integer
//! polynomials in `q`, plus their exact values at primitive roots of unity.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{IntPoly, UniPoly};

/// A weak composition `t_0 + ... + t_{r-1} = n` with `r >= 1` parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u64>,
}

impl Composition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("a composition needs at least one part"));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// All compositions of `n` into exactly `r` non-negative parts, in
    /// lexicographic order.
    pub fn all(n: u64, r: usize) -> Vec<Composition> {
        fn go(n: u64, slots: usize, prefix: &mut Vec<u64>, out: &mut Vec<Composition>) {
            if slots == 1 {
                prefix.push(n);
                out.push(Composition {
                    parts: prefix.clone(),
                });
                prefix.pop();
                return;
            }
            for first in 0..=n {
                prefix.push(first);
                go(n - first, slots - 1, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if r > 0 {
            go(n, r, &mut Vec::with_capacity(r), &mut out);
        }
        out
    }
}

fn to_q_poly(u: &UniPoly) -> IntPoly {
    let terms = u
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| (vec![k as u64], c.clone()));
    IntPoly::from_terms(&["q"], terms).expect("one variable")
}

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_integer(n: i64) -> Result<IntPoly> {
    if n <= 0 {
        return Err(Error::invalid(format!("q-integer needs n >= 1, got {n}")));
    }
    Ok(to_q_poly(&q_integer_dense(n as u64)))
}

fn q_integer_dense(n: u64) -> UniPoly {
    UniPoly::new(vec![BigInt::one(); n as usize])
}

/// `[n]!_q` as a dense polynomial. Only small `n` should go through here.
pub fn q_factorial_dense(n: u64) -> UniPoly {
    (1..=n).fold(UniPoly::from_i64(&[1]), |acc, k| acc.mul(&q_integer_dense(k)))
}

/// Gaussian binomial `[a+b choose a]_q` as dense coefficients, by the
/// recurrence `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
pub fn q_binomial_dense(a: u64, b: u64) -> UniPoly {
    let (k, n) = (a.min(b) as usize, (a + b) as usize);
    // row[j] holds [i choose j]_q for the current i.
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for i in 1..=n {
        let top = k.min(i);
        let mut next: Vec<Vec<BigInt>> = Vec::with_capacity(top + 1);
        for j in 0..=top {
            let mut c: Vec<BigInt> = Vec::new();
            let add_at = |c: &mut Vec<BigInt>, src: &[BigInt], shift: usize| {
                if c.len() < src.len() + shift {
                    c.resize(src.len() + shift, BigInt::zero());
                }
                for (idx, v) in src.iter().enumerate() {
                    c[idx + shift] += v;
                }
            };
            if j > 0 {
                add_at(&mut c, &row[j - 1], 0);
            }
            if j < row.len() && j < i {
                add_at(&mut c, &row[j], j);
            }
            next.push(c);
        }
        row = next;
    }
    UniPoly::new(row[k].clone())
}

/// `[a+b choose a]_q`.
pub fn q_binomial(a: u64, b: u64) -> IntPoly {
    to_q_poly(&q_binomial_dense(a, b))
}

/// `[a+b choose a]_q` by exact division of q-factorials. Kept as a second
/// route for cross-checking the recurrence.
pub fn q_binomial_by_division(a: u64, b: u64) -> Result<IntPoly> {
    let num = q_factorial_dense(a + b);
    let den = q_factorial_dense(a).mul(&q_factorial_dense(b));
    let (q, r) = num.div_rem_monic(&den);
    if !r.is_zero() {
        return Err(Error::NonDivisible {
            value: format!("[{}]!_q", a + b),
            divisor: format!("[{a}]!_q [{b}]!_q"),
        });
    }
    Ok(to_q_poly(&q))
}

/// q-multinomial as dense coefficients, built as the telescoping product
/// `prod_{k=1}^{r-1} [t_0+...+t_k choose t_k]_q`.
pub fn q_multinomial_dense(t: &Composition) -> UniPoly {
    let mut acc = UniPoly::from_i64(&[1]);
    let mut prefix = t.parts[0];
    for &tk in &t.parts[1..] {
        acc = acc.mul(&q_binomial_dense(tk, prefix));
        prefix += tk;
    }
    acc
}

pub fn q_multinomial(t: &Composition) -> IntPoly {
    to_q_poly(&q_multinomial_dense(t))
}

/// Ordinary multinomial coefficient `(sum t)! / prod t_i!`.
pub fn multinomial(parts: &[u64]) -> BigInt {
    let mut acc = BigInt::one();
    let mut total = 0u64;
    for &t in parts {
        for j in 1..=t {
            total += 1;
            acc = acc * BigInt::from(total) / BigInt::from(j);
        }
    }
    acc
}

/// Value of the q-multinomial at a primitive `d`-th root of unity: the
/// multinomial of `t/d` when `d` divides every part, else zero. Requires
/// `d | sum t`.
pub fn q_multinomial_at_root(t: &Composition, d: u64) -> Result<BigInt> {
    if d == 0 || !t.total().is_multiple_of(d) {
        return Err(Error::invalid(format!(
            "root order {d} must divide the composition total {}",
            t.total()
        )));
    }
    if t.parts.iter().any(|&p| p % d != 0) {
        return Ok(BigInt::zero());
    }
    let reduced: Vec<u64> = t.parts.iter().map(|&p| p / d).collect();
    Ok(multinomial(&reduced))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::CycElement;

    fn comp(p: &[u64]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn q_integer_examples() {
        assert_eq!(q_integer(1).unwrap().to_string(), "1");
        assert_eq!(q_integer(3).unwrap().to_string(), "1 + q + q^2");
        let at_minus_one = q_integer(2)
            .unwrap()
            .evaluate_vars(&[("q", BigInt::from(-1))])
            .unwrap();
        assert!(at_minus_one.is_zero());
        assert!(q_integer(0).is_err());
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(1, 1).to_string(), "1 + q");
        assert_eq!(q_binomial(2, 1).to_string(), "1 + q + q^2");
        assert_eq!(q_binomial(0, 4).to_string(), "1");
        assert_eq!(q_binomial(2, 2).to_string(), "1 + q + 2*q^2 + q^3 + q^4");
    }

    #[test]
    fn recurrence_matches_division() {
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(q_binomial(a, b), q_binomial_by_division(a, b).unwrap());
                assert_eq!(q_binomial(a, b), q_binomial(b, a));
                let at_one = q_binomial(a, b).sum_coeffs();
                assert_eq!(at_one, multinomial(&[a, b]));
            }
        }
    }

    #[test]
    fn q_multinomial_examples() {
        assert_eq!(q_multinomial(&comp(&[1, 1, 1])).to_string(), "1 + 2*q + 2*q^2 + q^3");
        assert_eq!(q_multinomial(&comp(&[5])).to_string(), "1");
        assert_eq!(q_multinomial(&comp(&[2, 2])).sum_coeffs(), BigInt::from(6));
    }

    #[test]
    fn root_value_examples() {
        assert_eq!(q_multinomial_at_root(&comp(&[1, 1]), 2).unwrap(), BigInt::zero());
        assert_eq!(q_multinomial_at_root(&comp(&[2, 2]), 2).unwrap(), BigInt::from(2));
        assert_eq!(q_multinomial_at_root(&comp(&[3, 3, 3]), 3).unwrap(), BigInt::from(6));
        assert!(q_multinomial_at_root(&comp(&[1, 2]), 2).is_err());
    }

    #[test]
    fn root_values_against_polynomial_evaluation() {
        for t in [comp(&[2, 2]), comp(&[3, 3, 3]), comp(&[1, 1])] {
            let d = if t.parts()[0] == 3 { 3 } else { 2 };
            let coeffs = q_multinomial_dense(&t);
            let v = CycElement::evaluate_polynomial(coeffs.coeffs(), d, 1).unwrap();
            assert_eq!(v.to_integer().unwrap(), q_multinomial_at_root(&t, d).unwrap());
        }
    }

    #[test]
    fn compositions_are_complete() {
        let all = Composition::all(4, 3);
        assert_eq!(all.len(), 15);
        assert!(all.iter().all(|c| c.total() == 4));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Composition::all(0, 2), vec![comp(&[0, 0])]);
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(&[2, 2]), BigInt::from(6));
        assert_eq!(multinomial(&[1, 1, 1]), BigInt::from(6));
        assert_eq!(multinomial(&[]), BigInt::from(1));
        assert_eq!(multinomial(&[3, 0, 2]), BigInt::from(10));
    }
}
