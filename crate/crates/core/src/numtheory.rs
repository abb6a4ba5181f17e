//! Elementary arithmetic functions on machine integers.
//!
//! Inputs are desk-scale, so factorization is plain trial division.

use crate::error::{Error, Result};

/// Prime factorization `n = p_1^e_1 * ... * p_k^e_k`, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Distinct primes, ascending.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// The factored integer.
    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

fn require_positive(n: i64, what: &str) -> Result<u64> {
    if n <= 0 {
        return Err(Error::invalid(format!("{what} must be positive, got {n}")));
    }
    Ok(n as u64)
}

/// Greatest common divisor, always non-negative; `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> u64 {
    let (mut x, mut y) = (a.unsigned_abs(), b.unsigned_abs());
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a as i64, b as i64) * b
}

pub fn factorize(n: i64) -> Result<Factorization> {
    let mut n = require_positive(n, "factorize argument")?;
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((n, 1));
    }
    Ok(Factorization { factors })
}

/// Euler's totient.
pub fn euler_phi(n: i64) -> Result<u64> {
    let f = factorize(n)?;
    let mut phi = n as u64;
    for p in f.primes() {
        phi = phi / p * (p - 1);
    }
    Ok(phi)
}

/// Mobius function: `(-1)^k` for squarefree `n` with `k` prime factors, else 0.
pub fn mobius(n: i64) -> Result<i64> {
    let f = factorize(n)?;
    if !f.is_squarefree() {
        return Ok(0);
    }
    Ok(if f.factors().len() % 2 == 0 { 1 } else { -1 })
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: i64) -> Result<Vec<u64>> {
    let n = require_positive(n, "divisors argument")?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Ramanujan's sum `c_d(a)`, via `phi(d) mu(d/g) / phi(d/g)` with `g = (a mod d, d)`.
pub fn ramanujan_sum(d: i64, a: i64) -> Result<i64> {
    let d = require_positive(d, "Ramanujan sum modulus")? as i64;
    let g = gcd(a.rem_euclid(d), d) as i64;
    let k = d / g;
    let mu = mobius(k)?;
    if mu == 0 {
        return Ok(0);
    }
    let phi_d = euler_phi(d)? as i64;
    let phi_k = euler_phi(k)? as i64;
    debug_assert_eq!(phi_d % phi_k, 0);
    Ok(mu * (phi_d / phi_k))
}
