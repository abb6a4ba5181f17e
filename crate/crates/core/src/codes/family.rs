//! Constructors for the named code families that are special cases of SC codes.

use std::fmt;
use std::str::FromStr;

use super::spec::CodeSpec;
use super::statistic::{weight_sequence, Statistic};
use crate::error::{Error, Result};
use crate::numtheory::factorize;

/// Which adjacent-pair comparison the descent statistic of a Tenengolts code uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum TenengoltsVariant {
    /// `x_i > x_{i+1}`, the original code.
    #[default]
    Gt,
    Ge,
    Lt,
    Le,
}

impl TenengoltsVariant {
    pub const ALL: [TenengoltsVariant; 4] = [
        TenengoltsVariant::Gt,
        TenengoltsVariant::Ge,
        TenengoltsVariant::Lt,
        TenengoltsVariant::Le,
    ];

    pub fn statistic(self) -> Statistic {
        match self {
            TenengoltsVariant::Gt => Statistic::GammaGt,
            TenengoltsVariant::Ge => Statistic::GammaGe,
            TenengoltsVariant::Lt => Statistic::LambdaLt,
            TenengoltsVariant::Le => Statistic::LambdaLe,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            TenengoltsVariant::Gt => ">",
            TenengoltsVariant::Ge => ">=",
            TenengoltsVariant::Lt => "<",
            TenengoltsVariant::Le => "<=",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TenengoltsVariant::Gt => "gt",
            TenengoltsVariant::Ge => "ge",
            TenengoltsVariant::Lt => "lt",
            TenengoltsVariant::Le => "le",
        }
    }
}

impl fmt::Display for TenengoltsVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TenengoltsVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "gt" | ">" => TenengoltsVariant::Gt,
            "ge" | ">=" => TenengoltsVariant::Ge,
            "lt" | "<" => TenengoltsVariant::Lt,
            "le" | "<=" => TenengoltsVariant::Le,
            _ => return Err(Error::Parse(format!("unknown Tenengolts variant {s:?}"))),
        })
    }
}

fn check_residue(what: &str, a: u64, m: u64) -> Result<()> {
    if a >= m {
        return Err(Error::invalid(format!("{what} = {a} must lie in [0, {m})")));
    }
    Ok(())
}

fn check_positive(what: &str, v: u64) -> Result<()> {
    if v == 0 {
        return Err(Error::invalid(format!("{what} must be positive")));
    }
    Ok(())
}

fn pow2(e: u64) -> Result<u64> {
    1u64.checked_shl(e as u32)
        .filter(|_| e < 63)
        .ok_or_else(|| Error::invalid(format!("2^{e} does not fit in 64 bits")))
}

fn to_i64(v: &[u64]) -> Result<Vec<i64>> {
    v.iter()
        .map(|&x| i64::try_from(x).map_err(|_| Error::invalid("weight exceeds i64")))
        .collect()
}

fn single(n: usize, r: u32, h: Vec<i64>, m: u64, a: u64) -> Result<CodeSpec> {
    check_positive("modulus", m)?;
    check_residue("a", a, m)?;
    CodeSpec::new(n, r, vec![(Statistic::Linear(h), m, a as i64)])
}

/// Binary Varshamov-Tenengolts code: `omega = a (mod n+1)`.
pub fn binary_vt(n: usize, a: u64) -> Result<CodeSpec> {
    let m = n as u64 + 1;
    check_residue("a", a, m)?;
    CodeSpec::new(n, 2, vec![(Statistic::Omega, m, a as i64)])
}

/// Levenshtein code: `omega = a (mod m)`, binary.
pub fn levenshtein(n: usize, m: u64, a: u64) -> Result<CodeSpec> {
    check_positive("m", m)?;
    check_residue("a", a, m)?;
    CodeSpec::new(n, 2, vec![(Statistic::Omega, m, a as i64)])
}

/// Ternary integer code: weights `2^i - 1` (i = 1..n) modulo `2^{n+1} + 1`.
pub fn ternary_integer(n: usize, a: u64) -> Result<CodeSpec> {
    let h = (1..=n as u64).map(|i| pow2(i).map(|p| p - 1)).collect::<Result<Vec<_>>>()?;
    let m = pow2(n as u64 + 1)? + 1;
    single(n, 3, to_i64(&h)?, m, a)
}

/// Helberg code: binary, weights `g^{(t,2)}_1..g_n` modulo `g_{n+1}`.
pub fn helberg(n: usize, t: u64, a: u64) -> Result<CodeSpec> {
    le_nguyen(n, 2, t, a)
}

/// Le-Nguyen code: `r`-ary generalization of the Helberg code.
pub fn le_nguyen(n: usize, r: u32, t: u64, a: u64) -> Result<CodeSpec> {
    check_positive("r", r as u64)?;
    let g = weight_sequence(t, r as u64, n + 1)?;
    single(n, r, to_i64(&g[..n])?, g[n], a)
}

/// Odd-coefficient code: binary, weights `1, 3, ..., 2n-1` modulo `2m`.
pub fn odd_coefficient(n: usize, m: u64, a: u64) -> Result<CodeSpec> {
    check_positive("m", m)?;
    let h: Vec<i64> = (1..=n as i64).map(|i| 2 * i - 1).collect();
    single(n, 2, h, 2 * m, a)
}

/// AN code for a prime `p`: binary length `p-1`, weights `1, 2, ..., 2^{p-2}` modulo `p`.
pub fn an_code(p: u64, a: u64) -> Result<CodeSpec> {
    let f = factorize(p as i64)?;
    if p < 2 || f.factors() != [(p, 1)] {
        return Err(Error::invalid(format!("AN code modulus {p} must be prime")));
    }
    let h = (0..p - 1).map(pow2).collect::<Result<Vec<_>>>()?;
    single((p - 1) as usize, 2, to_i64(&h)?, p, a)
}

/// Exponential-coefficient code: binary, weights `1, 2, ..., 2^{n-1}` modulo `2^m + 1`.
pub fn exponential_coefficient(n: usize, m: u64, a: u64) -> Result<CodeSpec> {
    let h = (0..n as u64).map(pow2).collect::<Result<Vec<_>>>()?;
    single(n, 2, to_i64(&h)?, pow2(m)? + 1, a)
}

/// Shifted VT code: `omega = a (mod m)` and `sigma = parity (mod 2)`.
pub fn shifted_vt(n: usize, m: u64, a: u64, parity: u64) -> Result<CodeSpec> {
    check_positive("m", m)?;
    check_residue("a", a, m)?;
    check_residue("parity", parity, 2)?;
    CodeSpec::new(
        n,
        2,
        vec![(Statistic::Omega, m, a as i64), (Statistic::Sigma, 2, parity as i64)],
    )
}

/// Han Vinck-Morita code: `omega = a (mod n+1)` and `sigma = b (mod 3)`, binary.
pub fn han_vinck_morita(n: usize, a: u64, b: u64) -> Result<CodeSpec> {
    check_residue("a", a, n as u64 + 1)?;
    check_residue("b", b, 3)?;
    CodeSpec::new(
        n,
        2,
        vec![(Statistic::Omega, n as u64 + 1, a as i64), (Statistic::Sigma, 3, b as i64)],
    )
}

/// Non-binary Tenengolts code `T^{(variant)}_{a1,a2}(n, r)`.
pub fn tenengolts(n: usize, r: u32, a1: u64, a2: u64, variant: TenengoltsVariant) -> Result<CodeSpec> {
    check_positive("n", n as u64)?;
    check_positive("r", r as u64)?;
    check_residue("a1", a1, n as u64)?;
    check_residue("a2", a2, r as u64)?;
    CodeSpec::new(
        n,
        r,
        vec![
            (variant.statistic(), n as u64, a1 as i64),
            (Statistic::Sigma, r as u64, a2 as i64),
        ],
    )
}

/// Non-binary shifted VT code: `gamma = a (mod m)`, `delta = b (mod 2)`, `sigma = c (mod r)`.
pub fn nonbinary_svt(n: usize, r: u32, m: u64, a: u64, b: u64, c: u64) -> Result<CodeSpec> {
    check_positive("m", m)?;
    check_positive("r", r as u64)?;
    check_residue("a", a, m)?;
    check_residue("b", b, 2)?;
    check_residue("c", c, r as u64)?;
    CodeSpec::new(
        n,
        r,
        vec![
            (Statistic::GammaGt, m, a as i64),
            (Statistic::Delta, 2, b as i64),
            (Statistic::Sigma, r as u64, c as i64),
        ],
    )
}

/// Linear code over `Z_r` with parity-check rows `h`: one `(h_i . x = 0 mod r)` per row.
pub fn linear_code(r: u32, rows: &[Vec<i64>]) -> Result<CodeSpec> {
    check_positive("r", r as u64)?;
    let n = rows.first().map(Vec::len).ok_or_else(|| Error::invalid("empty parity-check matrix"))?;
    let cs = rows
        .iter()
        .map(|row| {
            let reduced: Vec<i64> = row.iter().map(|&v| v.rem_euclid(r as i64)).collect();
            (Statistic::Linear(reduced), r as u64, 0)
        })
        .collect();
    CodeSpec::new(n, r, cs)
}

/// `r`-ary linear congruence code `LC_a(n, m, r, h)`.
pub fn lc(n: usize, m: u64, r: u32, h: &[i64], a: u64) -> Result<CodeSpec> {
    check_positive("r", r as u64)?;
    if h.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: h.len(),
        });
    }
    single(n, r, h.to_vec(), m, a)
}

/// Binary linear congruence code `BLC_a(n, m, h)`.
pub fn blc(n: usize, m: u64, h: &[i64], a: u64) -> Result<CodeSpec> {
    lc(n, m, 2, h, a)
}

/// Loosely typed parameters for [`make_family`].
#[derive(Debug, Clone, Default)]
pub struct FamilyParams {
    pub n: Option<usize>,
    pub r: Option<u32>,
    pub m: Option<u64>,
    pub a: Option<u64>,
    pub a1: Option<u64>,
    pub a2: Option<u64>,
    pub b: Option<u64>,
    pub c: Option<u64>,
    pub t: Option<u64>,
    pub p: Option<u64>,
    pub h: Option<Vec<i64>>,
    pub matrix: Option<Vec<Vec<i64>>>,
    pub variant: TenengoltsVariant,
}

/// Family names accepted by [`make_family`].
pub const FAMILY_NAMES: &[&str] = &[
    "binary_vt",
    "levenshtein",
    "ternary_integer",
    "helberg",
    "le_nguyen",
    "odd_coefficient",
    "an",
    "exponential_coefficient",
    "shifted_vt",
    "han_vinck_morita",
    "tenengolts",
    "nonbinary_svt",
    "linear_code",
    "lc",
    "blc",
];

/// Builds a family by name. Residue-like parameters default to 0.
pub fn make_family(name: &str, p: &FamilyParams) -> Result<CodeSpec> {
    fn need<T: Clone>(v: &Option<T>, what: &str, family: &str) -> Result<T> {
        v.clone()
            .ok_or_else(|| Error::invalid(format!("family {family} needs parameter {what}")))
    }
    let name = name.replace('-', "_");
    let f = name.as_str();
    let a = p.a.unwrap_or(0);
    match f {
        "binary_vt" | "vt" => binary_vt(need(&p.n, "n", f)?, a),
        "levenshtein" => levenshtein(need(&p.n, "n", f)?, need(&p.m, "m", f)?, a),
        "ternary_integer" => ternary_integer(need(&p.n, "n", f)?, a),
        "helberg" => helberg(need(&p.n, "n", f)?, need(&p.t, "t", f)?, a),
        "le_nguyen" => le_nguyen(need(&p.n, "n", f)?, need(&p.r, "r", f)?, need(&p.t, "t", f)?, a),
        "odd_coefficient" => odd_coefficient(need(&p.n, "n", f)?, need(&p.m, "m", f)?, a),
        "an" => an_code(need(&p.p, "p", f)?, a),
        "exponential_coefficient" => exponential_coefficient(need(&p.n, "n", f)?, need(&p.m, "m", f)?, a),
        "shifted_vt" => shifted_vt(need(&p.n, "n", f)?, need(&p.m, "m", f)?, a, p.b.unwrap_or(0)),
        "han_vinck_morita" => han_vinck_morita(need(&p.n, "n", f)?, a, p.b.unwrap_or(0)),
        "tenengolts" => tenengolts(
            need(&p.n, "n", f)?,
            need(&p.r, "r", f)?,
            p.a1.unwrap_or(0),
            p.a2.unwrap_or(0),
            p.variant,
        ),
        "nonbinary_svt" | "svt" => nonbinary_svt(
            need(&p.n, "n", f)?,
            need(&p.r, "r", f)?,
            need(&p.m, "m", f)?,
            a,
            p.b.unwrap_or(0),
            p.c.unwrap_or(0),
        ),
        "linear_code" | "linear" => linear_code(need(&p.r, "r", f)?, &need(&p.matrix, "H", f)?),
        "lc" => lc(need(&p.n, "n", f)?, need(&p.m, "m", f)?, need(&p.r, "r", f)?, &need(&p.h, "h", f)?, a),
        "blc" => blc(need(&p.n, "n", f)?, need(&p.m, "m", f)?, &need(&p.h, "h", f)?, a),
        _ => Err(Error::invalid(format!("unknown code family {name:?}"))),
    }
}
