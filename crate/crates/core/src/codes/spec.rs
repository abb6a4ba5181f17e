use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::statistic::{Statistic, Word};
use crate::error::{Error, Result};

/// Maximum number of words a brute-force routine may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(10_000_000);

    /// Fails unless `r^n` words fit in the budget.
    pub fn check_space(&self, r: u32, n: usize) -> Result<u64> {
        let size = BigInt::from(r).pow(n as u32);
        match size.to_u64() {
            Some(s) if s <= self.0 => Ok(s),
            _ => Err(Error::BudgetExceeded {
                needed: size.to_string(),
                budget: self.0,
            }),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

/// One congruence `stat(x) = residue (mod modulus)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub stat: Statistic,
    pub modulus: u64,
    pub residue: u64,
}

/// A simultaneous-congruence code over `[r]^n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct CodeSpec {
    n: usize,
    r: u32,
    constraints: Vec<Constraint>,
}

impl CodeSpec {
    /// Builds a spec, reducing each residue into `[0, m)`.
    pub fn new(n: usize, r: u32, constraints: Vec<(Statistic, u64, i64)>) -> Result<Self> {
        if r == 0 {
            return Err(Error::invalid("alphabet size must be positive"));
        }
        if constraints.is_empty() {
            return Err(Error::invalid("a code needs at least one constraint"));
        }
        let mut out = Vec::with_capacity(constraints.len());
        for (stat, m, a) in constraints {
            if m == 0 {
                return Err(Error::invalid("moduli must be positive"));
            }
            stat.check_length(n)?;
            let residue = (a as i128).rem_euclid(m as i128) as u64;
            out.push(Constraint {
                stat,
                modulus: m,
                residue,
            });
        }
        Ok(CodeSpec {
            n,
            r,
            constraints: out,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Number of constraints `s`.
    pub fn s(&self) -> usize {
        self.constraints.len()
    }

    pub fn statistics(&self) -> Vec<Statistic> {
        self.constraints.iter().map(|c| c.stat.clone()).collect()
    }

    pub fn moduli(&self) -> Vec<u64> {
        self.constraints.iter().map(|c| c.modulus).collect()
    }

    pub fn residues(&self) -> Vec<u64> {
        self.constraints.iter().map(|c| c.residue).collect()
    }

    /// The same statistics and moduli with different residues.
    pub fn with_residues(&self, residues: &[i64]) -> Result<CodeSpec> {
        if residues.len() != self.s() {
            return Err(Error::LengthMismatch {
                expected: self.s(),
                got: residues.len(),
            });
        }
        let cs = self
            .constraints
            .iter()
            .zip(residues)
            .map(|(c, &a)| (c.stat.clone(), c.modulus, a))
            .collect();
        CodeSpec::new(self.n, self.r, cs)
    }

    pub(crate) fn contains_symbols(&self, x: &[u32]) -> bool {
        self.constraints.iter().all(|c| {
            let v = c.stat.eval_symbols(x) as i128;
            v.rem_euclid(c.modulus as i128) as u64 == c.residue
        })
    }

    /// True iff every congruence holds for `x`.
    pub fn is_member(&self, x: &Word) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        if x.alphabet() != self.r {
            return Err(Error::invalid(format!(
                "word alphabet {} does not match code alphabet {}",
                x.alphabet(),
                self.r
            )));
        }
        Ok(self.contains_symbols(x.symbols()))
    }

    /// Codewords in lexicographic order.
    pub fn enumerate_codewords(&self, budget: Budget) -> Result<impl Iterator<Item = Word> + '_> {
        budget.check_space(self.r, self.n)?;
        Ok(AllWords::new(self.n, self.r).filter(move |w| self.contains_symbols(w.symbols())))
    }

    /// Codewords whose first symbol is `lead`, for splitting work by prefix.
    pub fn enumerate_with_lead(
        &self,
        lead: u32,
        budget: Budget,
    ) -> Result<impl Iterator<Item = Word> + '_> {
        budget.check_space(self.r, self.n)?;
        if self.n == 0 || lead >= self.r {
            return Err(Error::invalid(format!("no words of length {} start with {lead}", self.n)));
        }
        Ok(AllWords::with_prefix(self.n, self.r, &[lead])
            .filter(move |w| self.contains_symbols(w.symbols())))
    }
}

/// Every word of `[r]^n` (optionally with a fixed prefix), lexicographically.
#[derive(Debug, Clone)]
pub struct AllWords {
    r: u32,
    fixed: usize,
    current: Option<Vec<u32>>,
}

impl AllWords {
    pub fn new(n: usize, r: u32) -> Self {
        Self::with_prefix(n, r, &[])
    }

    pub fn with_prefix(n: usize, r: u32, prefix: &[u32]) -> Self {
        let start = if r == 0 || prefix.len() > n || prefix.iter().any(|&s| s >= r) {
            None
        } else {
            let mut v = prefix.to_vec();
            v.resize(n, 0);
            Some(v)
        };
        AllWords {
            r,
            fixed: prefix.len(),
            current: start,
        }
    }
}

impl Iterator for AllWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let cur = self.current.as_mut()?;
        let out = Word::from_raw(cur.clone(), self.r);
        let mut i = cur.len();
        loop {
            if i == self.fixed {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] + 1 < self.r {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
        }
        Some(out)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawStat {
    Named(String),
    Linear { linear: Vec<i64> },
}

#[derive(Serialize, Deserialize)]
struct RawConstraint {
    stat: RawStat,
    m: u64,
    a: i64,
}

#[derive(Serialize, Deserialize)]
struct RawSpec {
    n: usize,
    r: u32,
    constraints: Vec<RawConstraint>,
}

impl TryFrom<RawSpec> for CodeSpec {
    type Error = Error;

    fn try_from(raw: RawSpec) -> Result<Self> {
        let cs = raw
            .constraints
            .into_iter()
            .map(|c| {
                let stat = match c.stat {
                    RawStat::Named(name) => Statistic::from_json_name(&name)
                        .ok_or_else(|| Error::Parse(format!("unknown statistic {name:?}")))?,
                    RawStat::Linear { linear } => Statistic::Linear(linear),
                };
                Ok((stat, c.m, c.a))
            })
            .collect::<Result<_>>()?;
        CodeSpec::new(raw.n, raw.r, cs)
    }
}

impl From<CodeSpec> for RawSpec {
    fn from(spec: CodeSpec) -> Self {
        RawSpec {
            n: spec.n,
            r: spec.r,
            constraints: spec
                .constraints
                .into_iter()
                .map(|c| RawConstraint {
                    stat: match &c.stat {
                        Statistic::Linear(h) => RawStat::Linear { linear: h.clone() },
                        Statistic::Custom(f) => RawStat::Named(format!("custom:{}", f.name())),
                        named => RawStat::Named(named.json_name().unwrap().to_string()),
                    },
                    m: c.modulus,
                    a: c.residue as i64,
                })
                .collect(),
        }
    }
}

impl CodeSpec {
    pub fn from_json(s: &str) -> Result<CodeSpec> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// JSON per the documented schema. Custom statistics cannot be expressed.
    pub fn to_json(&self) -> Result<String> {
        if self.constraints.iter().any(|c| matches!(c.stat, Statistic::Custom(_))) {
            return Err(Error::Unsupported("custom statistics have no JSON form".into()));
        }
        serde_json::to_string(self).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(spec: &CodeSpec) -> Vec<String> {
        spec.enumerate_codewords(Budget::DEFAULT)
            .unwrap()
            .map(|w| w.to_string())
            .collect()
    }

    #[test]
    fn all_words_is_lexicographic() {
        let all: Vec<String> = AllWords::new(2, 3).map(|w| w.to_string()).collect();
        assert_eq!(all, ["00", "01", "02", "10", "11", "12", "20", "21", "22"]);
        assert_eq!(AllWords::new(0, 3).count(), 1);
        let lead: Vec<String> = AllWords::with_prefix(3, 2, &[1]).map(|w| w.to_string()).collect();
        assert_eq!(lead, ["100", "101", "110", "111"]);
    }

    #[test]
    fn tenengolts_table_membership() {
        let t = CodeSpec::new(3, 3, vec![(Statistic::GammaGt, 3, 0), (Statistic::Sigma, 3, 0)]).unwrap();
        assert!(t.is_member(&Word::parse("012", 3).unwrap()).unwrap());
        assert!(!t.is_member(&Word::parse("001", 3).unwrap()).unwrap());
        assert_eq!(words(&t), ["000", "012", "111", "210", "222"]);
    }

    #[test]
    fn zero_word_with_zero_residues() {
        let spec = CodeSpec::new(
            4,
            3,
            vec![
                (Statistic::Omega, 7, 0),
                (Statistic::Delta, 2, 0),
                (Statistic::Linear(vec![3, 1, 4, 1]), 5, 0),
            ],
        )
        .unwrap();
        assert!(spec.is_member(&Word::new(vec![0; 4], 3).unwrap()).unwrap());
    }

    #[test]
    fn modulus_one_admits_everything() {
        let spec = CodeSpec::new(3, 2, vec![(Statistic::Omega, 1, 0)]).unwrap();
        assert_eq!(words(&spec).len(), 8);
    }

    #[test]
    fn residues_normalize() {
        let spec = CodeSpec::new(2, 3, vec![(Statistic::Sigma, 3, -1)]).unwrap();
        assert_eq!(spec.residues(), vec![2]);
        let spec = CodeSpec::new(2, 3, vec![(Statistic::Sigma, 3, 7)]).unwrap();
        assert_eq!(spec.residues(), vec![1]);
    }

    #[test]
    fn membership_errors() {
        let spec = CodeSpec::new(3, 3, vec![(Statistic::Sigma, 3, 0)]).unwrap();
        assert!(spec.is_member(&Word::parse("01", 3).unwrap()).is_err());
        assert!(spec.is_member(&Word::parse("011", 2).unwrap()).is_err());
        assert!(CodeSpec::new(3, 3, vec![]).is_err());
        assert!(CodeSpec::new(3, 3, vec![(Statistic::Sigma, 0, 0)]).is_err());
        assert!(CodeSpec::new(3, 3, vec![(Statistic::Linear(vec![1]), 2, 0)]).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let spec = CodeSpec::new(10, 4, vec![(Statistic::Sigma, 4, 0)]).unwrap();
        let err = spec.enumerate_codewords(Budget(1000)).err().unwrap();
        assert_eq!(
            err,
            Error::BudgetExceeded {
                needed: "1048576".into(),
                budget: 1000
            }
        );
    }

    #[test]
    fn json_schema() {
        let text = r#"{"n":3,"r":3,"constraints":[{"stat":"gamma_gt","m":3,"a":0},{"stat":{"linear":[1,1,1]},"m":3,"a":4}]}"#;
        let spec = CodeSpec::from_json(text).unwrap();
        assert_eq!(spec.residues(), vec![0, 1]);
        assert_eq!(spec.statistics()[1], Statistic::Linear(vec![1, 1, 1]));
        let again = CodeSpec::from_json(&spec.to_json().unwrap()).unwrap();
        assert_eq!(again, spec);
        assert!(CodeSpec::from_json(r#"{"n":3,"r":3,"constraints":[{"stat":"tau","m":3,"a":0}]}"#).is_err());
    }

    #[test]
    fn lead_partition_covers_code() {
        let spec = CodeSpec::new(4, 3, vec![(Statistic::GammaGt, 4, 1), (Statistic::Sigma, 3, 2)]).unwrap();
        let mut joined: Vec<Word> = Vec::new();
        for lead in 0..3 {
            joined.extend(spec.enumerate_with_lead(lead, Budget::DEFAULT).unwrap());
        }
        let whole: Vec<Word> = spec.enumerate_codewords(Budget::DEFAULT).unwrap().collect();
        assert_eq!(joined, whole);
    }
}
