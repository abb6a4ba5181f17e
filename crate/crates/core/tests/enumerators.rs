use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use sccodes::codes::{nonbinary_svt, shifted_vt, tenengolts, Budget, CodeSpec, Statistic, TenengoltsVariant};
use sccodes::enumerators::{
    extended_enumerator, full_space_enumerator, oracle_extended, tenengolts_cardinality, tenengolts_hamming,
    theorem1_extended, variant_hamming, Enumerator, Kind,
};
use sccodes::exactalg::{CycElement, IntPoly};
use sccodes::numtheory::{gcd, lcm};

const B: Budget = Budget::DEFAULT;

fn agree(spec: &CodeSpec) -> Result<(), TestCaseError> {
    let oracle = oracle_extended(spec, B).unwrap();
    let sum = theorem1_extended(spec, B).unwrap();
    prop_assert_eq!(sum.poly(), oracle.poly());
    prop_assert_eq!(extended_enumerator(spec, B).unwrap().into_poly(), oracle.poly().clone());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn shifted_vt_matches_oracle(n in 1usize..=8, m in 1u64..=12, a in 0u64..12, p in 0u64..2) {
        agree(&shifted_vt(n, m, a % m, p).unwrap())?;
    }

    #[test]
    fn nonbinary_svt_matches_oracle(n in 1usize..=5, r in 1u32..=3, m in 1u64..=12, a in 0u64..12, b in 0u64..2, c in 0u64..3) {
        agree(&nonbinary_svt(n, r, m, a % m, b, c % u64::from(r)).unwrap())?;
    }

    #[test]
    fn tenengolts_variants_match_oracle(n in 1usize..=6, r in 1u32..=4, a1 in 0u64..6, a2 in 0u64..4, v in 0usize..4) {
        let (a1, a2) = (a1 % n as u64, a2 % u64::from(r));
        let variant = TenengoltsVariant::ALL[v];
        let spec = tenengolts(n, r, a1, a2, variant).unwrap();
        let oracle = oracle_extended(&spec, B).unwrap();
        let h = variant_hamming(variant, n, r, a1, a2).unwrap();
        prop_assert_eq!(h.into_poly(), oracle.specialize(Kind::Hamming).unwrap().into_poly());
    }

    #[test]
    fn enumerator_json_round_trip(n in 1usize..=4, r in 2u32..=3, a1 in 0u64..4, a2 in 0u64..3) {
        let spec = tenengolts(n, r, a1 % n as u64, a2 % u64::from(r), TenengoltsVariant::Gt).unwrap();
        let e = theorem1_extended(&spec, B).unwrap();
        for kind in [Kind::Extended, Kind::Complete, Kind::Hamming] {
            let s = e.specialize(kind).unwrap();
            let back = Enumerator::from_json(&s.to_json()).unwrap();
            prop_assert_eq!(back.poly(), s.poly());
            prop_assert_eq!(back.kind(), kind);
        }
    }
}

#[test]
fn partition_sum_and_max_at_origin() {
    for n in 1..=10usize {
        for r in 1..=5u32 {
            let origin = tenengolts_cardinality(n, r, 0, 0).unwrap();
            let mut total = BigInt::from(0);
            for a1 in 0..n as u64 {
                for a2 in 0..u64::from(r) {
                    let c = tenengolts_cardinality(n, r, a1, a2).unwrap();
                    assert!(c <= origin, "n={n} r={r} a=({a1},{a2})");
                    total += c;
                }
            }
            assert_eq!(total, BigInt::from(r).pow(n as u32), "n={n} r={r}");
        }
    }
}

#[test]
fn hamming_closed_form_sums_to_cardinality() {
    for n in 1..=8usize {
        for r in 1..=4u32 {
            for a1 in 0..n as u64 {
                for a2 in 0..u64::from(r) {
                    assert_eq!(
                        tenengolts_hamming(n, r, a1, a2).unwrap().cardinality(),
                        tenengolts_cardinality(n, r, a1, a2).unwrap()
                    );
                }
            }
        }
    }
}

/// `W([r]^n, (gamma, sigma); (e(u1/n), e(u2/r)), w)` from the full-space
/// polynomial, as a map from Hamming degree to integer coefficient.
fn evaluated_full_space(full: &IntPoly, n: u64, r: u64, u1: u64, u2: u64) -> BTreeMap<u64, BigInt> {
    let order = lcm(n, r);
    let mut acc: BTreeMap<u64, CycElement> = BTreeMap::new();
    for (m, c) in full.terms() {
        let e = m.exponents();
        let weight: u64 = e[3..].iter().sum();
        let k = (e[0] * (order / n) * u1 + e[1] * (order / r) * u2) % order;
        acc.entry(weight)
            .or_insert_with(|| CycElement::zero(order).unwrap())
            .add_root_multiple(k as i64, c);
    }
    acc.into_iter()
        .map(|(k, v)| (k, v.to_integer().unwrap()))
        .filter(|(_, v)| *v != BigInt::from(0))
        .collect()
}

#[test]
fn full_space_at_roots_of_unity() {
    for n in 1..=6u64 {
        for r in 1..=4u64 {
            let full =
                full_space_enumerator(n as usize, r as u32, &[Statistic::GammaGt, Statistic::Sigma], B).unwrap();
            assert_eq!(full.vars()[..3], ["z1", "z2", "w0"]);
            for u1 in 0..n {
                for u2 in 0..r {
                    let g = gcd(n as i64, u1 as i64);
                    let d = n / g;
                    let lead = if (d * u2).is_multiple_of(r) { r as i64 - 1 } else { -1 };
                    let base = IntPoly::one(&["w"])
                        .add(&IntPoly::from_terms(&["w"], [(vec![d], BigInt::from(lead))]).unwrap());
                    let want: BTreeMap<u64, BigInt> = base
                        .pow(g)
                        .unwrap()
                        .terms()
                        .map(|(m, c)| (m.exponents()[0], c.clone()))
                        .collect();
                    assert_eq!(evaluated_full_space(&full, n, r, u1, u2), want, "n={n} r={r} u=({u1},{u2})");
                }
            }
        }
    }
}
