use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{Enumerator, Kind, Method};
use crate::codes::{tenengolts, TenengoltsVariant};
use crate::error::{Error, Result};
use crate::exactalg::IntPoly;
use crate::numtheory::{divisors, gcd, ramanujan_sum};

fn check_params(n: usize, r: u32, a1: u64, a2: u64) -> Result<()> {
    if n == 0 || r == 0 {
        return Err(Error::invalid("n and r must be positive"));
    }
    if a1 >= n as u64 || a2 >= r as u64 {
        return Err(Error::invalid(format!(
            "need a1 in [0, {n}) and a2 in [0, {r}), got ({a1}, {a2})"
        )));
    }
    Ok(())
}

/// Hamming enumerator of `T_{a1,a2}(n, r)`:
/// `(1/nr) sum_{d|n} sum_{e|r} c_d(a1) c_e(a2) (1 - w^d + r w^d [e|d])^{n/d}`.
pub fn tenengolts_hamming(n: usize, r: u32, a1: u64, a2: u64) -> Result<Enumerator> {
    check_params(n, r, a1, a2)?;
    let w = ["w"];
    let mut total = IntPoly::zero(&w);
    for d in divisors(n as i64)? {
        let cd = ramanujan_sum(d as i64, a1 as i64)?;
        if cd == 0 {
            continue;
        }
        let wd = IntPoly::from_terms(&w, [(vec![d], BigInt::from(1))])?;
        let one = IntPoly::one(&w);
        // the two possible bases, by whether e divides d
        let mut powers: HashMap<bool, IntPoly> = HashMap::new();
        for e in divisors(r as i64)? {
            let ce = ramanujan_sum(e as i64, a2 as i64)?;
            if ce == 0 {
                continue;
            }
            let divides = d % e == 0;
            let pw = match powers.get(&divides) {
                Some(p) => p.clone(),
                None => {
                    let lead = if divides { i64::from(r) - 1 } else { -1 };
                    let base = one.add(&wd.scale_int(&BigInt::from(lead)));
                    let p = base.pow(n as u64 / d)?;
                    powers.insert(divides, p.clone());
                    p
                }
            };
            total = total.add(&pw.scale_int(&BigInt::from(cd * ce)));
        }
    }
    let poly = total.divide_exact(&BigInt::from(n as u64 * u64::from(r)))?;
    if poly.has_negative_coeffs() {
        return Err(Error::NotAnInteger);
    }
    let spec = tenengolts(n, r, a1, a2, TenengoltsVariant::Gt)?;
    Enumerator::new(Kind::Hamming, poly, Some(spec), Method::ClosedForm)
}

/// `|T_{a1,a2}(n, r)| = (1/nr) sum_{d|n} c_d(a1) r^{n/d} (r,d) [(r,d) | a2]`.
pub fn tenengolts_cardinality(n: usize, r: u32, a1: u64, a2: u64) -> Result<BigInt> {
    check_params(n, r, a1, a2)?;
    let mut total = BigInt::zero();
    for d in divisors(n as i64)? {
        let g = gcd(i64::from(r), d as i64);
        if !a2.is_multiple_of(g) {
            continue;
        }
        let cd = ramanujan_sum(d as i64, a1 as i64)?;
        total += BigInt::from(cd) * BigInt::from(r).pow((n as u64 / d) as u32) * BigInt::from(g);
    }
    let denom = BigInt::from(n as u64 * u64::from(r));
    let (q, rem) = total.div_rem(&denom);
    if !rem.is_zero() || q.is_negative() {
        return Err(Error::NonDivisible {
            value: total.to_string(),
            divisor: denom.to_string(),
        });
    }
    Ok(q)
}

/// A variant code as the base code with another `a1`, possibly reversed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VariantTransform {
    pub a1: u64,
    /// Codewords of the variant are the reversals of the base codewords.
    pub reversed: bool,
}

/// Parameters of the base code `T_{a1', a2}(n, r)` equivalent to the variant code.
pub fn tenengolts_variant_transform(variant: TenengoltsVariant, n: usize, a1: u64) -> Result<VariantTransform> {
    if n == 0 || a1 >= n as u64 {
        return Err(Error::invalid(format!("need a1 in [0, {n}), got {a1}")));
    }
    let n = n as u64;
    let bar = if a1 == 0 { 0 } else { n - a1 };
    let half = n / 2;
    let (a1, reversed) = match variant {
        TenengoltsVariant::Gt => (a1, false),
        TenengoltsVariant::Lt => (bar, true),
        TenengoltsVariant::Le if n % 2 == 1 => (bar, false),
        TenengoltsVariant::Le => (if a1 > half { half + n - a1 } else { half - a1 }, false),
        TenengoltsVariant::Ge if n % 2 == 1 => (a1, true),
        TenengoltsVariant::Ge => (if a1 >= half { half + a1 - n } else { half + a1 }, true),
    };
    Ok(VariantTransform { a1, reversed })
}

/// Hamming enumerator of `T^{(variant)}_{a1,a2}(n, r)` through the base closed form.
pub fn variant_hamming(variant: TenengoltsVariant, n: usize, r: u32, a1: u64, a2: u64) -> Result<Enumerator> {
    check_params(n, r, a1, a2)?;
    let t = tenengolts_variant_transform(variant, n, a1)?;
    let base = tenengolts_hamming(n, r, t.a1, a2)?;
    let spec = tenengolts(n, r, a1, a2, variant)?;
    Enumerator::new(Kind::Hamming, base.into_poly(), Some(spec), Method::ClosedForm)
}

pub fn variant_cardinality(variant: TenengoltsVariant, n: usize, r: u32, a1: u64, a2: u64) -> Result<BigInt> {
    check_params(n, r, a1, a2)?;
    let t = tenengolts_variant_transform(variant, n, a1)?;
    tenengolts_cardinality(n, r, t.a1, a2)
}

/// Every `(a1, a2)` attaining the largest cardinality, sorted.
pub fn argmax_cardinality(n: usize, r: u32, variant: TenengoltsVariant) -> Result<Vec<(u64, u64)>> {
    check_params(n, r, 0, 0)?;
    let mut best = BigInt::zero();
    let mut out = Vec::new();
    for a1 in 0..n as u64 {
        for a2 in 0..u64::from(r) {
            let c = variant_cardinality(variant, n, r, a1, a2)?;
            if c > best {
                best = c.clone();
                out.clear();
            }
            if c == best {
                out.push((a1, a2));
            }
        }
    }
    Ok(out)
}
