//! Linear codes over `Z_r` given by a parity-check matrix, their duals, and
//! an exact check of the MacWilliams identity for complete weight enumerators.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use crate::codes::{AllWords, Budget, Word};
use crate::error::{Error, Result};
use crate::exactalg::{CycElement, IntPoly};

/// Parses `"1,1;0,1"` into rows.
pub fn parse_matrix(s: &str) -> Result<Vec<Vec<i64>>> {
    let rows: Vec<Vec<i64>> = s
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad matrix entry {t:?}")))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    if rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(Error::Parse("matrix rows have different lengths".into()));
    }
    Ok(rows)
}

/// `L = {x : H x^T = 0 (mod r)}` with its dual `{u H : u in Z_r^s}`.
#[derive(Debug, Clone)]
pub struct ZrLinearCode {
    r: u32,
    n: usize,
    h: Vec<Vec<u32>>,
    code: Vec<Word>,
    dual: Vec<Word>,
}

/// Materializes the kernel and the row span of `h` over `Z_r`.
pub fn build_code(r: u32, h: &[Vec<i64>], budget: Budget) -> Result<ZrLinearCode> {
    if r < 2 {
        return Err(Error::invalid("r must be at least 2"));
    }
    let n = h
        .first()
        .map(Vec::len)
        .ok_or_else(|| Error::invalid("parity-check matrix has no rows"))?;
    if n == 0 || h.iter().any(|row| row.len() != n) {
        return Err(Error::invalid("parity-check rows must be non-empty and of equal length"));
    }
    let s = h.len();
    budget.check_space(r, n.max(s))?;
    let h: Vec<Vec<u32>> = h
        .iter()
        .map(|row| row.iter().map(|&v| v.rem_euclid(i64::from(r)) as u32).collect())
        .collect();

    let dot = |row: &[u32], x: &[u32]| -> u64 {
        row.iter().zip(x).map(|(&a, &b)| u64::from(a) * u64::from(b)).sum::<u64>() % u64::from(r)
    };
    let code: Vec<Word> = AllWords::new(n, r)
        .filter(|x| h.iter().all(|row| dot(row, x.symbols()) == 0))
        .collect();
    let dual: BTreeSet<Word> = AllWords::new(s, r)
        .map(|u| {
            let y: Vec<u32> = (0..n)
                .map(|j| {
                    let v: u64 = u.symbols().iter().zip(&h).map(|(&ui, row)| u64::from(ui) * u64::from(row[j])).sum();
                    (v % u64::from(r)) as u32
                })
                .collect();
            Word::new(y, r).expect("symbols reduced mod r")
        })
        .collect();
    Ok(ZrLinearCode {
        r,
        n,
        h,
        code,
        dual: dual.into_iter().collect(),
    })
}

impl ZrLinearCode {
    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of parity-check rows.
    pub fn s(&self) -> usize {
        self.h.len()
    }

    /// The parity-check matrix with entries reduced mod `r`.
    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.h
    }

    /// Codewords in lexicographic order.
    pub fn codewords(&self) -> &[Word] {
        &self.code
    }

    /// Dual codewords in lexicographic order.
    pub fn dual(&self) -> &[Word] {
        &self.dual
    }

    /// `|dual| = r^s`, i.e. the rows are independent over `Z_r`.
    pub fn is_full_rank(&self) -> bool {
        BigInt::from(self.dual.len()) == BigInt::from(self.r).pow(self.s() as u32)
    }
}

fn w_names(r: u32) -> Vec<String> {
    (0..r).map(|j| format!("w{j}")).collect()
}

/// `sum_x prod_j w_j^{tau_j(x)}` in variables `w0..w_{r-1}`.
pub fn complete_weight_enumerator(words: &[Word], r: u32) -> Result<IntPoly> {
    let mut counts: HashMap<Vec<u64>, u64> = HashMap::new();
    for x in words {
        if x.alphabet() != r {
            return Err(Error::invalid("word alphabet does not match r"));
        }
        *counts.entry(x.composition()).or_insert(0) += 1;
    }
    IntPoly::from_terms(&w_names(r), counts.into_iter().map(|(k, v)| (k, BigInt::from(v))))
}

/// Expands `sum_tau c_tau prod_i v_i^{tau_i}` with `v_i = sum_k w_k e(ik/r)`,
/// coefficients living in the cyclotomic field of order `r`.
fn substitute_characters(poly: &IntPoly, r: u32) -> Result<IntPoly> {
    let rr = r as usize;
    let mut total: HashMap<Vec<u64>, CycElement> = HashMap::new();
    for (mono, c) in poly.terms() {
        let mut cur: HashMap<Vec<u64>, CycElement> = HashMap::new();
        cur.insert(vec![0; rr], CycElement::constant(u64::from(r), c.clone())?);
        for (i, &e) in mono.exponents().iter().enumerate() {
            for _ in 0..e {
                let mut next: HashMap<Vec<u64>, CycElement> = HashMap::with_capacity(cur.len() * rr);
                for (exps, coeff) in &cur {
                    for k in 0..rr {
                        let mut m = exps.clone();
                        m[k] += 1;
                        let entry = next.entry(m).or_insert_with(|| CycElement::zero(u64::from(r)).unwrap());
                        let shift = (i * k) % rr;
                        for (idx, v) in coeff.coeffs().iter().enumerate() {
                            if !v.is_zero() {
                                entry.add_root_multiple((idx + shift) as i64, v);
                            }
                        }
                    }
                }
                cur = next;
            }
        }
        for (m, v) in cur {
            match total.get_mut(&m) {
                Some(t) => *t = t.checked_add(&v)?,
                None => {
                    total.insert(m, v);
                }
            }
        }
    }
    let terms = total
        .into_iter()
        .map(|(m, v)| v.to_integer().map(|c| (m, c)))
        .collect::<Result<Vec<_>>>()?;
    IntPoly::from_terms(&w_names(r), terms)
}

/// Outcome of checking `W(L; w) = r^{-s} W(L_dual; v)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MacWilliamsReport {
    #[serde(serialize_with = "as_text")]
    pub left: IntPoly,
    /// `None` when the rows of `H` are dependent and the identity was skipped.
    #[serde(serialize_with = "as_opt_text")]
    pub right: Option<IntPoly>,
    pub verified: bool,
    pub dual_size: u64,
}

fn as_text<S: serde::Serializer>(p: &IntPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

fn as_opt_text<S: serde::Serializer>(p: &Option<IntPoly>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match p {
        Some(p) => s.serialize_str(&p.to_string()),
        None => s.serialize_none(),
    }
}

impl MacWilliamsReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// True when `H` had dependent rows, so no identity was checked.
    pub fn rank_deficient(&self) -> bool {
        self.right.is_none()
    }
}

/// Computes both sides exactly. A rank-deficient `H` yields a report with
/// `right = None`; integrality failures on a full-rank `H` are errors.
pub fn verify_macwilliams(code: &ZrLinearCode) -> Result<MacWilliamsReport> {
    let left = complete_weight_enumerator(&code.code, code.r)?;
    let dual_size = code.dual.len() as u64;
    if !code.is_full_rank() {
        return Ok(MacWilliamsReport {
            left,
            right: None,
            verified: false,
            dual_size,
        });
    }
    let dual_poly = complete_weight_enumerator(&code.dual, code.r)?;
    let expanded = substitute_characters(&dual_poly, code.r)?;
    let denom = BigInt::from(code.r).pow(code.s() as u32);
    let right = expanded.divide_exact(&denom)?;
    Ok(MacWilliamsReport {
        verified: right == left,
        left,
        right: Some(right),
        dual_size,
    })
}

/// Draws random `s x n` matrices over `Z_r` until one has independent rows.
pub fn random_full_rank(rng: &mut impl Rng, r: u32, n: usize, s: usize, budget: Budget) -> Result<ZrLinearCode> {
    if s == 0 || s > n {
        return Err(Error::invalid(format!("need 1 <= s <= n, got s={s} n={n}")));
    }
    for _ in 0..10_000 {
        let h: Vec<Vec<i64>> = (0..s)
            .map(|_| (0..n).map(|_| rng.random_range(0..i64::from(r))).collect())
            .collect();
        let code = build_code(r, &h, budget)?;
        if code.is_full_rank() {
            return Ok(code);
        }
    }
    Err(Error::invalid("no full-rank matrix found"))
}

/// `|code| * |dual| = r^n`.
pub fn sizes_consistent(code: &ZrLinearCode) -> bool {
    let lhs = code.code.len() as u128 * code.dual.len() as u128;
    BigInt::from(lhs) == BigInt::from(code.r).pow(code.n as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::linear_code;
    use crate::enumerators::{theorem1_extended, Kind};
    use crate::exactalg::MultiPoly;

    fn words(ws: &[Word]) -> Vec<String> {
        ws.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn parity_code_is_self_dual() {
        let c = build_code(2, &[vec![1, 1]], Budget::DEFAULT).unwrap();
        assert_eq!(words(c.codewords()), ["00", "11"]);
        assert_eq!(words(c.dual()), ["00", "11"]);
        let rep = verify_macwilliams(&c).unwrap();
        assert_eq!(rep.left.to_string(), "w0^2 + w1^2");
        assert!(rep.verified);
        assert_eq!(rep.to_json(), r#"{"left":"w0^2 + w1^2","right":"w0^2 + w1^2","verified":true,"dual_size":2}"#);
    }

    #[test]
    fn ternary_single_row() {
        let c = build_code(3, &[vec![1, 2]], Budget::DEFAULT).unwrap();
        assert_eq!(words(c.codewords()), ["00", "11", "22"]);
        assert_eq!(words(c.dual()), ["00", "12", "21"]);
        let left = complete_weight_enumerator(c.codewords(), 3).unwrap();
        assert_eq!(left.to_string(), "w0^2 + w1^2 + w2^2");
        assert!(verify_macwilliams(&c).unwrap().verified);
    }

    #[test]
    fn identity_matrix() {
        let c = build_code(2, &[vec![1, 0], vec![0, 1]], Budget::DEFAULT).unwrap();
        assert_eq!(words(c.codewords()), ["00"]);
        assert_eq!(c.dual().len(), 4);
        let rep = verify_macwilliams(&c).unwrap();
        assert_eq!(rep.left.to_string(), "w0^2");
        assert!(rep.verified);
        assert!(sizes_consistent(&c));
    }

    #[test]
    fn zero_row_is_rank_deficient() {
        let c = build_code(3, &[vec![0, 0, 0]], Budget::DEFAULT).unwrap();
        let rep = verify_macwilliams(&c).unwrap();
        assert!(rep.rank_deficient());
        assert!(!rep.verified);
        assert_eq!(rep.dual_size, 1);
        assert!(rep.to_json().contains(r#""right":null"#));
    }

    #[test]
    fn single_word() {
        let p = complete_weight_enumerator(&[Word::new(vec![0, 0, 0], 2).unwrap()], 2).unwrap();
        assert_eq!(p.to_string(), "w0^3");
    }

    #[test]
    fn composite_modulus() {
        let c = build_code(4, &[vec![1, 2, 3], vec![0, 1, 1]], Budget::DEFAULT).unwrap();
        assert!(c.is_full_rank());
        assert!(sizes_consistent(&c));
        assert!(verify_macwilliams(&c).unwrap().verified);
        // 2 is a zero divisor mod 4: the row (2,2) spans only {00, 22}
        let d = build_code(4, &[vec![2, 2]], Budget::DEFAULT).unwrap();
        assert!(!d.is_full_rank());
    }

    #[test]
    fn expansion_matches_generic_substitution() {
        let c = build_code(3, &[vec![1, 1, 2]], Budget::DEFAULT).unwrap();
        let dual = complete_weight_enumerator(c.dual(), 3).unwrap();
        let fast = substitute_characters(&dual, 3).unwrap();
        let v: Vec<MultiPoly<CycElement>> = (0..3)
            .map(|i| {
                (0..3).fold(MultiPoly::zero(&["w0", "w1", "w2"]), |acc, k| {
                    acc.add(&MultiPoly::var(&format!("w{k}")).scale(&CycElement::root(3, i * k).unwrap()))
                })
            })
            .collect();
        let subs: Vec<(&str, MultiPoly<CycElement>)> =
            ["w0", "w1", "w2"].iter().copied().zip(v).collect();
        let slow = dual.to_cyclotomic().substitute(&subs).unwrap().to_integer_poly().unwrap();
        assert_eq!(fast, slow);
    }

    #[test]
    fn agrees_with_character_sum_engine() {
        let h = vec![vec![1, 2, 0, 1], vec![0, 1, 1, 2]];
        let c = build_code(3, &h, Budget::DEFAULT).unwrap();
        let spec = linear_code(3, &h).unwrap();
        let e = theorem1_extended(&spec, Budget::DEFAULT).unwrap().specialize(Kind::Complete).unwrap();
        assert_eq!(e.poly(), &complete_weight_enumerator(c.codewords(), 3).unwrap());
    }

    #[test]
    fn matrix_parsing() {
        assert_eq!(parse_matrix("1,1;0,1").unwrap(), vec![vec![1, 1], vec![0, 1]]);
        assert_eq!(parse_matrix(" 1, -2 ").unwrap(), vec![vec![1, -2]]);
        assert!(parse_matrix("1,1;0").is_err());
        assert!(parse_matrix("1,x").is_err());
        let c = build_code(3, &parse_matrix("1,-1").unwrap(), Budget::DEFAULT).unwrap();
        assert_eq!(c.matrix(), &[vec![1, 2]]);
    }
}
