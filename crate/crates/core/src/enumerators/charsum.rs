use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::fullspace::{full_space_enumerator, FullSpaceForm};
use super::oracle::oracle_extended;
use super::{Enumerator, Kind, Method};
use crate::codes::{Budget, CodeSpec};
use crate::error::{Error, Result};
use crate::exactalg::{CycElement, IntPoly, MultiPoly};
use crate::numtheory::lcm;

/// `sum_{u in [m]} e(b u / m)`, evaluated in the cyclotomic field of order `m`.
fn residue_sum(m: u64, b: u64) -> Result<BigInt> {
    let mut acc = CycElement::zero(m)?;
    let one = BigInt::one();
    for u in 0..m {
        let e = (b as u128 * u as u128 % m as u128) as i64;
        acc.add_root_multiple(e, &one);
    }
    acc.to_integer()
}

fn product_of_moduli(moduli: &[u64], budget: Budget) -> Result<BigInt> {
    let p: BigInt = moduli.iter().map(|&m| BigInt::from(m)).product();
    if p > BigInt::from(budget.0) {
        return Err(Error::BudgetExceeded {
            needed: p.to_string(),
            budget: budget.0,
        });
    }
    Ok(p)
}

/// Extended enumerator by the character sum over `[m_1] x ... x [m_s]`.
///
/// The full-space enumerator comes from the product or MacMahon form when
/// one applies. The coefficient of `z^k w^tau` picks up
/// `prod_i sum_{u_i} e((k_i - a_i) u_i / m_i)`; each factor is evaluated as a
/// cyclotomic integer and memoized by residue. The total is divided exactly
/// by `prod m_i`, and any failure of integrality or divisibility is reported
/// as an error.
pub fn theorem1_extended(spec: &CodeSpec, budget: Budget) -> Result<Enumerator> {
    let moduli = spec.moduli();
    let residues = spec.residues();
    let denom = product_of_moduli(&moduli, budget)?;
    let full = full_space_enumerator(spec.n(), spec.r(), &spec.statistics(), budget)?;
    let s = spec.s();

    let mut keys: Vec<(usize, u64)> = Vec::new();
    for (m, _) in full.terms() {
        for i in 0..s {
            let b = (m.exponents()[i] + moduli[i] - residues[i] % moduli[i]) % moduli[i];
            keys.push((i, b));
        }
    }
    keys.sort_unstable();
    keys.dedup();
    let sums: HashMap<(usize, u64), BigInt> = keys
        .par_iter()
        .map(|&(i, b)| residue_sum(moduli[i], b).map(|v| ((i, b), v)))
        .collect::<Result<_>>()?;

    let mut terms = Vec::with_capacity(full.num_terms());
    for (m, c) in full.terms() {
        let mut v = c.clone();
        for i in 0..s {
            let b = (m.exponents()[i] + moduli[i] - residues[i] % moduli[i]) % moduli[i];
            v *= &sums[&(i, b)];
            if v.is_zero() {
                break;
            }
        }
        if v.is_negative() {
            return Err(Error::NotAnInteger);
        }
        terms.push((m.exponents().to_vec(), v));
    }
    let summed = IntPoly::from_terms(full.vars(), terms)?;
    let poly = summed.divide_exact(&denom)?;
    Enumerator::new(Kind::Extended, poly, Some(spec.clone()), Method::CharacterSum)
}

/// The same identity evaluated literally: substitute `z_i -> z_i e(u_i/m_i)`
/// into the full-space enumerator at order `lcm(m)`, weight by
/// `prod e(-a_i u_i / m_i)`, sum over the whole grid, then reduce and divide.
/// Quadratic in the grid size, so only for small codes.
pub fn theorem1_by_substitution(spec: &CodeSpec, budget: Budget) -> Result<Enumerator> {
    let moduli = spec.moduli();
    let residues = spec.residues();
    let denom = product_of_moduli(&moduli, budget)?;
    let order = moduli.iter().fold(1, |acc, &m| lcm(acc, m));
    let full = full_space_enumerator(spec.n(), spec.r(), &spec.statistics(), budget)?;
    let s = spec.s();

    let grid: Vec<Vec<u64>> = moduli.iter().fold(vec![vec![]], |acc, &m| {
        acc.into_iter()
            .flat_map(|prefix| {
                (0..m).map(move |u| {
                    let mut v = prefix.clone();
                    v.push(u);
                    v
                })
            })
            .collect()
    });
    let step: Vec<u64> = moduli.iter().map(|&m| order / m).collect();
    let zeros = CycElement::zero(order)?;
    let accumulated: HashMap<Vec<u64>, CycElement> = grid
        .par_iter()
        .fold(HashMap::new, |mut acc: HashMap<Vec<u64>, CycElement>, u| {
            let twist: u128 = (0..s)
                .map(|i| (order - residues[i] * step[i] % order) as u128 * u[i] as u128)
                .sum();
            for (m, c) in full.terms() {
                let k = m.exponents();
                let e: u128 = (0..s)
                    .map(|i| k[i] as u128 % order as u128 * step[i] as u128 * u[i] as u128)
                    .sum::<u128>()
                    + twist;
                acc.entry(k.to_vec())
                    .or_insert_with(|| zeros.clone())
                    .add_root_multiple((e % order as u128) as i64, c);
            }
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                match a.get_mut(&k) {
                    Some(x) => *x = x.checked_add(&v).expect("same order"),
                    None => {
                        a.insert(k, v);
                    }
                }
            }
            a
        });
    let cyc = MultiPoly::<CycElement>::from_terms(full.vars(), accumulated)?;
    let summed = cyc.to_integer_poly()?;
    if summed.has_negative_coeffs() {
        return Err(Error::NotAnInteger);
    }
    let poly = summed.divide_exact(&denom)?;
    Enumerator::new(Kind::Extended, poly, Some(spec.clone()), Method::CharacterSum)
}

/// Picks the cheapest exact route: residue filtering when the full space
/// would have to be brute-forced anyway, the character sum otherwise.
pub fn extended_enumerator(spec: &CodeSpec, budget: Budget) -> Result<Enumerator> {
    match FullSpaceForm::classify(spec.n(), &spec.statistics()) {
        FullSpaceForm::BruteForce => oracle_extended(spec, budget),
        _ => theorem1_extended(spec, budget),
    }
}

/// Hamming enumerator of the LC code `sum h_j x_j = a (mod m)` over `[r]^n`:
/// `(1/m) sum_u e(-a u/m) prod_j (1 + w sum_{k=1}^{r-1} e(h_j k u/m))`.
pub fn lc_hamming(n: usize, m: u64, r: u32, h: &[i64], a: i64) -> Result<Enumerator> {
    if m == 0 || r == 0 {
        return Err(Error::invalid("m and r must be positive"));
    }
    if h.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: h.len(),
        });
    }
    let mi = m as i128;
    let hm: Vec<i128> = h.iter().map(|&x| (x as i128).rem_euclid(mi)).collect();
    let a = (a as i128).rem_euclid(mi);
    let w = MultiPoly::<CycElement>::var("w");
    let terms: Vec<MultiPoly<CycElement>> = (0..m as i128)
        .into_par_iter()
        .map(|u| {
            let mut prod = MultiPoly::<CycElement>::constant(&["w"], CycElement::root(m, (-a * u % mi) as i64)?);
            for &hj in &hm {
                let mut inner = CycElement::zero(m)?;
                for k in 1..r as i128 {
                    inner.add_root_multiple((hj * k % mi * u % mi) as i64, &BigInt::one());
                }
                let factor = MultiPoly::one(&["w"]).add(&w.scale(&inner));
                prod = prod.mul(&factor)?;
            }
            Ok(prod)
        })
        .collect::<Result<_>>()?;
    let total = terms
        .iter()
        .fold(MultiPoly::<CycElement>::zero(&["w"]), |acc, t| acc.add(t));
    let poly = total.to_integer_poly()?.divide_exact(&BigInt::from(m))?;
    if poly.has_negative_coeffs() {
        return Err(Error::NotAnInteger);
    }
    Enumerator::new(Kind::Hamming, poly.with_vars(&["w"])?, None, Method::CharacterSum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{binary_vt, lc, tenengolts, Statistic, TenengoltsVariant};

    fn t(a1: u64, a2: u64) -> CodeSpec {
        tenengolts(3, 3, a1, a2, TenengoltsVariant::Gt).unwrap()
    }

    #[test]
    fn matches_oracle_on_t33() {
        for a1 in 0..3 {
            for a2 in 0..3 {
                let spec = t(a1, a2);
                let o = oracle_extended(&spec, Budget::DEFAULT).unwrap();
                let c = theorem1_extended(&spec, Budget::DEFAULT).unwrap();
                let l = theorem1_by_substitution(&spec, Budget::DEFAULT).unwrap();
                assert_eq!(o.poly(), c.poly());
                assert_eq!(o.poly(), l.poly());
            }
        }
        let c = theorem1_extended(&t(1, 0), Budget::DEFAULT).unwrap();
        assert_eq!(c.cardinality(), BigInt::from(2));
    }

    #[test]
    fn single_residue_class_is_whole_space() {
        let spec = CodeSpec::new(3, 2, vec![(Statistic::Linear(vec![1, 2, 3]), 1, 0)]).unwrap();
        let c = theorem1_extended(&spec, Budget::DEFAULT).unwrap();
        let full = full_space_enumerator(3, 2, &spec.statistics(), Budget::DEFAULT).unwrap();
        assert_eq!(c.poly(), &full);
    }

    #[test]
    fn brute_force_statistics_go_through_the_sum() {
        let spec = CodeSpec::new(
            4,
            3,
            vec![(Statistic::Delta, 2, 1), (Statistic::GammaGe, 4, 2), (Statistic::Omega, 5, 3)],
        )
        .unwrap();
        let o = oracle_extended(&spec, Budget::DEFAULT).unwrap();
        assert_eq!(theorem1_extended(&spec, Budget::DEFAULT).unwrap().poly(), o.poly());
        assert_eq!(theorem1_by_substitution(&spec, Budget::DEFAULT).unwrap().poly(), o.poly());
        assert_eq!(extended_enumerator(&spec, Budget::DEFAULT).unwrap().method(), Method::Oracle);
    }

    #[test]
    fn vt_hamming() {
        let e = lc_hamming(4, 5, 2, &[1, 2, 3, 4], 0).unwrap();
        assert_eq!(e.cardinality(), BigInt::from(4));
        assert_eq!(e.to_string(), "1 + 2*w^2 + w^4");
        let o = oracle_extended(&binary_vt(4, 0).unwrap(), Budget::DEFAULT).unwrap();
        assert_eq!(o.specialize(Kind::Hamming).unwrap().poly(), e.poly());
    }

    #[test]
    fn lc_trivial_cases() {
        let e = lc_hamming(3, 1, 4, &[5, 6, 7], 0).unwrap();
        assert_eq!(e.to_string(), "1 + 9*w + 27*w^2 + 27*w^3");
        assert_eq!(lc_hamming(1, 2, 2, &[1], 0).unwrap().to_string(), "1");
        assert!(lc_hamming(2, 2, 2, &[1], 0).is_err());
    }

    #[test]
    fn lc_matches_oracle_with_negative_weights() {
        let h = [3, -1, 0, 7, 2];
        for a in 0..6 {
            let spec = lc(5, 6, 3, &h, a).unwrap();
            let mut counts = [0i64; 6];
            for x in spec.enumerate_codewords(Budget::DEFAULT).unwrap() {
                counts[x.hamming_weight()] += 1;
            }
            let terms = counts.iter().enumerate().map(|(k, &c)| (vec![k as u64], BigInt::from(c)));
            let expected = IntPoly::from_terms(&["w"], terms).unwrap();
            assert_eq!(lc_hamming(5, 6, 3, &h, a as i64).unwrap().poly(), &expected);
        }
    }
}
