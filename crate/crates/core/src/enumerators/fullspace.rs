use num_bigint::BigInt;

use super::extended_vars;
use super::oracle::tally;
use crate::codes::{Budget, Statistic};
use crate::error::{Error, Result};
use crate::exactalg::IntPoly;
use crate::qcalc::{q_multinomial_dense, Composition};

/// How the enumerator of the whole space `[r]^n` gets built.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FullSpaceForm {
    /// Every statistic is linear with non-negative weights: a product of
    /// one factor per position.
    Product,
    /// One descent (or ascent) major index plus any number of symbol sums:
    /// MacMahon's q-multinomial sum over compositions.
    MacMahon,
    /// Anything else: visit all `r^n` words.
    BruteForce,
}

impl FullSpaceForm {
    pub fn classify(n: usize, stats: &[Statistic]) -> FullSpaceForm {
        let linear_ok = stats.iter().all(|s| {
            s.linear_weights(n)
                .is_some_and(|h| h.iter().all(|&x| x >= 0))
        });
        if linear_ok {
            return FullSpaceForm::Product;
        }
        let major = stats
            .iter()
            .filter(|s| matches!(s, Statistic::GammaGt | Statistic::LambdaLt))
            .count();
        let rest_sigma = stats
            .iter()
            .all(|s| matches!(s, Statistic::GammaGt | Statistic::LambdaLt | Statistic::Sigma));
        if major == 1 && rest_sigma {
            FullSpaceForm::MacMahon
        } else {
            FullSpaceForm::BruteForce
        }
    }
}

/// `W([r]^n, stats; z, w)` in variables `z1..zs, w0..w_{r-1}`.
pub fn full_space_enumerator(n: usize, r: u32, stats: &[Statistic], budget: Budget) -> Result<IntPoly> {
    if r == 0 {
        return Err(Error::invalid("alphabet size must be positive"));
    }
    for s in stats {
        s.check_length(n)?;
    }
    match FullSpaceForm::classify(n, stats) {
        FullSpaceForm::Product => product_form(n, r, stats),
        FullSpaceForm::MacMahon => macmahon_form(n, r, stats),
        FullSpaceForm::BruteForce => tally(n, r, stats, |_| true, budget),
    }
}

fn product_form(n: usize, r: u32, stats: &[Statistic]) -> Result<IntPoly> {
    let s = stats.len();
    let vars = extended_vars(s, r);
    let weights: Vec<Vec<i64>> = stats.iter().map(|st| st.linear_weights(n).unwrap()).collect();
    let mut acc = IntPoly::one(&vars);
    for j in 0..n {
        let terms = (0..r as u64).map(|k| {
            let mut exps: Vec<u64> = weights.iter().map(|h| h[j] as u64 * k).collect();
            exps.resize(s + r as usize, 0);
            exps[s + k as usize] = 1;
            (exps, BigInt::from(1))
        });
        let factor = IntPoly::from_terms(&vars, terms)?;
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

fn macmahon_form(n: usize, r: u32, stats: &[Statistic]) -> Result<IntPoly> {
    let s = stats.len();
    let vars = extended_vars(s, r);
    let mut terms = Vec::new();
    for t in Composition::all(n as u64, r as usize) {
        let sigma: u64 = t.parts().iter().enumerate().map(|(j, &tj)| j as u64 * tj).sum();
        let q = q_multinomial_dense(&t);
        for (deg, c) in q.coeffs().iter().enumerate() {
            let mut exps: Vec<u64> = stats
                .iter()
                .map(|st| match st {
                    Statistic::Sigma => sigma,
                    _ => deg as u64,
                })
                .collect();
            exps.extend_from_slice(t.parts());
            terms.push((exps, c.clone()));
        }
    }
    IntPoly::from_terms(&vars, terms)
}
