//! Integer combinations of roots of unity.
//!
//! A [`CycElement`] of order `L` is a vector `c` of length `L` standing for
//! `sum_j c[j] * zeta_L^j` in the group ring `Z[x]/(x^L - 1)`. Arithmetic stays
//! in that basis; reduction modulo the cyclotomic polynomial `Phi_L` happens
//! only when comparing values or extracting an integer.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{divisors, lcm};

/// Dense univariate integer polynomial, coefficients in ascending degree.
/// The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem_monic(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        assert!(divisor.coeffs[dd].is_one(), "divisor must be monic");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::new(Vec::new()), UniPoly::new(rem));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let lead = std::mem::take(&mut rem[top]);
            if lead.is_zero() {
                continue;
            }
            for (k, c) in divisor.coeffs[..dd].iter().enumerate() {
                if !c.is_zero() {
                    rem[top - dd + k] -= &lead * c;
                }
            }
            quot[top - dd] = lead;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }
}

type PhiCache = RwLock<HashMap<u64, Arc<UniPoly>>>;

fn phi_cache() -> &'static PhiCache {
    static CACHE: OnceLock<PhiCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The `order`-th cyclotomic polynomial, from `x^L - 1 = prod_{d | L} Phi_d`.
///
/// Results are memoized process-wide. Panics if `order == 0`.
pub fn cyclotomic_polynomial(order: u64) -> Arc<UniPoly> {
    assert!(order >= 1, "cyclotomic order must be positive");
    if let Some(p) = phi_cache().read().unwrap().get(&order) {
        return Arc::clone(p);
    }
    let mut xl_minus_1 = vec![BigInt::zero(); order as usize + 1];
    xl_minus_1[0] = BigInt::from(-1);
    xl_minus_1[order as usize] = BigInt::one();
    let mut quotient = UniPoly::new(xl_minus_1);
    for d in divisors(order as i64).expect("order is positive") {
        if d < order {
            let (q, r) = quotient.div_rem_monic(&cyclotomic_polynomial(d));
            debug_assert!(r.is_zero());
            quotient = q;
        }
    }
    let phi = Arc::new(quotient);
    // Concurrent fills compute the same value, so last writer wins harmlessly.
    phi_cache()
        .write()
        .unwrap()
        .entry(order)
        .or_insert_with(|| Arc::clone(&phi))
        .clone()
}

/// Element of `Z[x]/(x^L - 1)`, read as a cyclotomic integer at `x = e(1/L)`.
#[derive(Clone)]
pub struct CycElement {
    order: u64,
    coeffs: Vec<BigInt>,
}

impl CycElement {
    pub fn zero(order: u64) -> Result<Self> {
        if order == 0 {
            return Err(Error::invalid("root-of-unity order must be positive"));
        }
        Ok(CycElement {
            order,
            coeffs: vec![BigInt::zero(); order as usize],
        })
    }

    pub fn constant(order: u64, value: impl Into<BigInt>) -> Result<Self> {
        let mut out = Self::zero(order)?;
        out.coeffs[0] = value.into();
        Ok(out)
    }

    /// `zeta_L^numerator`, that is `e(numerator / L)`.
    pub fn root(order: u64, numerator: i64) -> Result<Self> {
        let mut out = Self::zero(order)?;
        let idx = numerator.rem_euclid(order as i64) as usize;
        out.coeffs[idx] = BigInt::one();
        Ok(out)
    }

    pub fn from_coeffs(order: u64, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() as u64 != order || order == 0 {
            return Err(Error::LengthMismatch {
                expected: order as usize,
                got: coeffs.len(),
            });
        }
        Ok(CycElement { order, coeffs })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Adds `value * zeta_L^exponent` in place.
    pub fn add_root_multiple(&mut self, exponent: i64, value: &BigInt) {
        let idx = exponent.rem_euclid(self.order as i64) as usize;
        self.coeffs[idx] += value;
    }

    fn check_order(&self, other: &CycElement) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    /// Ring addition; both operands must share the same order.
    pub fn checked_add(&self, other: &CycElement) -> Result<CycElement> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycElement {
            order: self.order,
            coeffs,
        })
    }

    /// Ring multiplication (cyclic convolution); orders must match.
    pub fn checked_mul(&self, other: &CycElement) -> Result<CycElement> {
        self.check_order(other)?;
        let l = self.order as usize;
        let mut coeffs = vec![BigInt::zero(); l];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[(i + j) % l] += a * b;
                }
            }
        }
        Ok(CycElement {
            order: self.order,
            coeffs,
        })
    }

    pub fn neg(&self) -> CycElement {
        CycElement {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> CycElement {
        CycElement {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// The same cyclotomic integer at an order that is a multiple of the current one.
    pub fn embed(&self, new_order: u64) -> Result<CycElement> {
        if new_order == 0 || !new_order.is_multiple_of(self.order) {
            return Err(Error::invalid(format!(
                "cannot embed order {} into order {new_order}",
                self.order
            )));
        }
        let stride = (new_order / self.order) as usize;
        let mut coeffs = vec![BigInt::zero(); new_order as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[j * stride] = c.clone();
        }
        Ok(CycElement {
            order: new_order,
            coeffs,
        })
    }

    /// Embeds both operands at the lcm of their orders.
    pub fn align(&self, other: &CycElement) -> (CycElement, CycElement) {
        if self.order == other.order {
            return (self.clone(), other.clone());
        }
        let l = lcm(self.order, other.order);
        (self.embed(l).unwrap(), other.embed(l).unwrap())
    }

    /// Remainder modulo `Phi_L`: the canonical representative, length < phi(L).
    pub fn reduced(&self) -> UniPoly {
        let phi = cyclotomic_polynomial(self.order);
        UniPoly::new(self.coeffs.clone()).div_rem_monic(&phi).1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero) || self.reduced().is_zero()
    }

    /// The rational integer this element equals, or `NotAnInteger`.
    pub fn to_integer(&self) -> Result<BigInt> {
        let red = self.reduced();
        match red.coeffs() {
            [] => Ok(BigInt::zero()),
            [c] => Ok(c.clone()),
            _ => Err(Error::NotAnInteger),
        }
    }

    /// Evaluates an integer polynomial (ascending coefficients) at `zeta_L^numerator`.
    pub fn evaluate_polynomial(coeffs: &[BigInt], order: u64, numerator: i64) -> Result<Self> {
        let mut out = Self::zero(order)?;
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.add_root_multiple((k as i64) * numerator, c);
            }
        }
        Ok(out)
    }
}

impl PartialEq for CycElement {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.align(other);
        let diff = a.checked_add(&b.neg()).expect("aligned orders");
        diff.is_zero()
    }
}

impl Eq for CycElement {}

impl fmt::Debug for CycElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc{}{:?}", self.order, self.coeffs)
    }
}

impl fmt::Display for CycElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.abs();
            match (j, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => write!(f, "e({j}/{})", self.order)?,
                (_, false) => write!(f, "{abs}*e({j}/{})", self.order)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
