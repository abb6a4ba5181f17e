use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A word of `[r]^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<u32>,
    r: u32,
}

impl Word {
    pub fn new(symbols: Vec<u32>, r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::invalid("alphabet size must be positive"));
        }
        if let Some(&bad) = symbols.iter().find(|&&s| s >= r) {
            return Err(Error::invalid(format!("symbol {bad} outside alphabet [0, {r})")));
        }
        Ok(Word { symbols, r })
    }

    /// Parses a digit string such as `"012"` (alphabets up to 10) or a
    /// comma-separated list such as `"0,11,3"`.
    pub fn parse(s: &str, r: u32) -> Result<Self> {
        let s = s.trim();
        let symbols: Result<Vec<u32>> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad symbol {t:?}"))))
                .collect()
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(format!("bad symbol {c:?}"))))
                .collect()
        };
        Word::new(symbols?, r)
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn alphabet(&self) -> u32 {
        self.r
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word {
            symbols: self.symbols.iter().rev().copied().collect(),
            r: self.r,
        }
    }

    /// Symbol counts `tau_0 .. tau_{r-1}`.
    pub fn composition(&self) -> Vec<u64> {
        let mut tau = vec![0u64; self.r as usize];
        for &s in &self.symbols {
            tau[s as usize] += 1;
        }
        tau
    }

    /// Number of nonzero symbols.
    pub fn hamming_weight(&self) -> usize {
        self.symbols.iter().filter(|&&s| s != 0).count()
    }

    pub(crate) fn from_raw(symbols: Vec<u32>, r: u32) -> Word {
        Word { symbols, r }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r <= 10 {
            for s in &self.symbols {
                write!(f, "{s}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.symbols.iter().map(u32::to_string).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

type StatFn = dyn Fn(&[u32]) -> i64 + Send + Sync;

/// A user-supplied statistic. Only the brute-force enumerators accept it.
#[derive(Clone)]
pub struct CustomStatistic {
    name: String,
    f: Arc<StatFn>,
}

impl CustomStatistic {
    pub fn new(name: impl Into<String>, f: impl Fn(&[u32]) -> i64 + Send + Sync + 'static) -> Self {
        CustomStatistic {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

impl fmt::Debug for CustomStatistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Custom({})", self.name)
    }
}

impl PartialEq for CustomStatistic {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && Arc::ptr_eq(&self.f, &other.f)
    }
}

/// Integer-valued statistic of a word `x = x_1 .. x_n` (1-based positions).
#[derive(Debug, Clone, PartialEq)]
pub enum Statistic {
    /// `sum i * x_i`
    Omega,
    /// `sum x_i`
    Sigma,
    /// `sum i * [x_i > x_{i+1}]`
    GammaGt,
    /// `sum i * [x_i >= x_{i+1}]`
    GammaGe,
    /// `sum i * [x_i < x_{i+1}]`
    LambdaLt,
    /// `sum i * [x_i <= x_{i+1}]`
    LambdaLe,
    /// Number of descents, `sum [x_i > x_{i+1}]`.
    Delta,
    /// `sum h_i * x_i`
    Linear(Vec<i64>),
    Custom(CustomStatistic),
}

impl Statistic {
    /// Name used in the JSON schema; `None` for `Linear` and `Custom`.
    pub fn json_name(&self) -> Option<&'static str> {
        Some(match self {
            Statistic::Omega => "omega",
            Statistic::Sigma => "sigma",
            Statistic::GammaGt => "gamma_gt",
            Statistic::GammaGe => "gamma_ge",
            Statistic::LambdaLt => "lambda_lt",
            Statistic::LambdaLe => "lambda_le",
            Statistic::Delta => "delta",
            Statistic::Linear(_) | Statistic::Custom(_) => return None,
        })
    }

    pub fn from_json_name(name: &str) -> Option<Statistic> {
        Some(match name {
            "omega" => Statistic::Omega,
            "sigma" => Statistic::Sigma,
            "gamma_gt" | "gamma" => Statistic::GammaGt,
            "gamma_ge" => Statistic::GammaGe,
            "lambda_lt" => Statistic::LambdaLt,
            "lambda_le" => Statistic::LambdaLe,
            "delta" => Statistic::Delta,
            _ => return None,
        })
    }

    /// Checks the statistic can be applied to words of length `n`.
    pub fn check_length(&self, n: usize) -> Result<()> {
        match self {
            Statistic::Linear(h) if h.len() != n => Err(Error::LengthMismatch {
                expected: n,
                got: h.len(),
            }),
            _ => Ok(()),
        }
    }

    /// Weight vector when the statistic is linear in the symbols.
    pub fn linear_weights(&self, n: usize) -> Option<Vec<i64>> {
        match self {
            Statistic::Omega => Some((1..=n as i64).collect()),
            Statistic::Sigma => Some(vec![1; n]),
            Statistic::Linear(h) => Some(h.clone()),
            _ => None,
        }
    }

    /// Evaluates on raw symbols. Callers must have checked lengths.
    pub(crate) fn eval_symbols(&self, x: &[u32]) -> i64 {
        let adjacent = |pred: fn(u32, u32) -> bool, weighted: bool| -> i64 {
            x.windows(2)
                .enumerate()
                .filter(|(_, w)| pred(w[0], w[1]))
                .map(|(i, _)| if weighted { i as i64 + 1 } else { 1 })
                .sum()
        };
        match self {
            Statistic::Omega => x.iter().enumerate().map(|(i, &s)| (i as i64 + 1) * s as i64).sum(),
            Statistic::Sigma => x.iter().map(|&s| s as i64).sum(),
            Statistic::GammaGt => adjacent(|a, b| a > b, true),
            Statistic::GammaGe => adjacent(|a, b| a >= b, true),
            Statistic::LambdaLt => adjacent(|a, b| a < b, true),
            Statistic::LambdaLe => adjacent(|a, b| a <= b, true),
            Statistic::Delta => adjacent(|a, b| a > b, false),
            Statistic::Linear(h) => h.iter().zip(x).map(|(&hi, &s)| hi * s as i64).sum(),
            Statistic::Custom(c) => (c.f)(x),
        }
    }

    pub fn evaluate(&self, x: &Word) -> Result<i64> {
        self.check_length(x.len())?;
        Ok(self.eval_symbols(x.symbols()))
    }
}

/// Recursive weights `g_i = 1 + (r-1) sum_{j=1}^{t} g_{i-j} [i-j >= 1]`, for
/// `i = 1..=length`.
pub fn weight_sequence(t: u64, r: u64, length: usize) -> Result<Vec<u64>> {
    if t == 0 || r == 0 {
        return Err(Error::invalid("weight sequence needs t >= 1 and r >= 1"));
    }
    let mut g: Vec<u64> = Vec::with_capacity(length);
    for i in 0..length {
        let lo = i.saturating_sub(t as usize);
        let window = g[lo..i]
            .iter()
            .try_fold(0u64, |acc, &v| acc.checked_add(v))
            .and_then(|s| s.checked_mul(r - 1))
            .and_then(|s| s.checked_add(1))
            .ok_or_else(|| Error::invalid("weight sequence overflows u64"))?;
        g.push(window);
    }
    Ok(g)
}
