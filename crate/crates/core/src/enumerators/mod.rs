//! Weight enumerators of SC codes: brute-force oracles, the character-sum
//! engine, the LC/BLC product formula and the Tenengolts closed forms.

mod charsum;
mod fullspace;
mod oracle;
mod tenengolts;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::codes::CodeSpec;
use crate::error::{Error, Result};
use crate::exactalg::IntPoly;

pub use charsum::{extended_enumerator, lc_hamming, theorem1_by_substitution, theorem1_extended};
pub use fullspace::{full_space_enumerator, FullSpaceForm};
pub use oracle::oracle_extended;
pub use tenengolts::{
    argmax_cardinality, tenengolts_cardinality, tenengolts_hamming, tenengolts_variant_transform,
    variant_cardinality, variant_hamming, VariantTransform,
};

/// Which specialization of the extended enumerator a polynomial is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Extended,
    Complete,
    Hamming,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Extended => "extended",
            Kind::Complete => "complete",
            Kind::Hamming => "hamming",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "extended" => Ok(Kind::Extended),
            "complete" => Ok(Kind::Complete),
            "hamming" => Ok(Kind::Hamming),
            _ => Err(Error::Parse(format!("unknown enumerator kind {s:?}"))),
        }
    }
}

/// How an enumerator was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Oracle,
    CharacterSum,
    ClosedForm,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::CharacterSum => "character_sum",
            Method::ClosedForm => "closed_form",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Method::Oracle),
            "character_sum" => Ok(Method::CharacterSum),
            "closed_form" => Ok(Method::ClosedForm),
            _ => Err(Error::Parse(format!("unknown enumerator method {s:?}"))),
        }
    }
}

pub(crate) fn z_vars(s: usize) -> Vec<String> {
    (1..=s).map(|i| format!("z{i}")).collect()
}

pub(crate) fn w_vars(r: u32) -> Vec<String> {
    (0..r).map(|j| format!("w{j}")).collect()
}

pub(crate) fn extended_vars(s: usize, r: u32) -> Vec<String> {
    let mut v = z_vars(s);
    v.extend(w_vars(r));
    v
}

/// A weight enumerator together with where it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct Enumerator {
    kind: Kind,
    poly: IntPoly,
    spec: Option<CodeSpec>,
    method: Method,
}

impl Enumerator {
    /// Wraps a polynomial, checking it has no negative coefficient and
    /// only the variables allowed for `kind`.
    pub fn new(kind: Kind, poly: IntPoly, spec: Option<CodeSpec>, method: Method) -> Result<Self> {
        if poly.has_negative_coeffs() {
            return Err(Error::invalid("enumerator has a negative coefficient"));
        }
        let ok = poly.vars().iter().all(|v| match kind {
            Kind::Extended => v.starts_with('z') || (v.starts_with('w') && v.len() > 1),
            Kind::Complete => v.starts_with('w') && v.len() > 1,
            Kind::Hamming => v == "w",
        });
        if !ok {
            return Err(Error::invalid(format!(
                "variables {:?} do not fit a {kind} enumerator",
                poly.vars()
            )));
        }
        Ok(Enumerator {
            kind,
            poly,
            spec,
            method,
        })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn into_poly(self) -> IntPoly {
        self.poly
    }

    pub fn spec(&self) -> Option<&CodeSpec> {
        self.spec.as_ref()
    }

    pub fn method(&self) -> Method {
        self.method
    }

    /// Value at the all-ones point, i.e. the number of codewords.
    pub fn cardinality(&self) -> BigInt {
        self.poly.sum_coeffs()
    }

    /// Moves down the chain Extended -> Complete -> Hamming.
    pub fn specialize(&self, target: Kind) -> Result<Enumerator> {
        if target < self.kind {
            return Err(Error::invalid(format!(
                "cannot specialize a {} enumerator to {target}",
                self.kind
            )));
        }
        let mut poly = self.poly.clone();
        if self.kind == Kind::Extended && target != Kind::Extended {
            let ones: Vec<(&str, BigInt)> = poly
                .vars()
                .iter()
                .filter(|v| v.starts_with('z'))
                .map(|v| (v.as_str(), BigInt::from(1)))
                .collect();
            poly = poly.evaluate_vars(&ones)?;
        }
        if target == Kind::Hamming && self.kind != Kind::Hamming {
            let w = IntPoly::var("w");
            let subs: Vec<(&str, IntPoly)> = poly
                .vars()
                .iter()
                .map(|v| {
                    let value = if v == "w0" { IntPoly::one::<&str>(&[]) } else { w.clone() };
                    (v.as_str(), value)
                })
                .collect();
            poly = poly.substitute(&subs)?.with_vars(&["w"])?;
        }
        Ok(Enumerator {
            kind: target,
            poly,
            spec: self.spec.clone(),
            method: self.method,
        })
    }

    pub fn to_json(&self) -> String {
        let raw = RawEnumerator {
            kind: self.kind.name().to_string(),
            variables: self.poly.vars().to_vec(),
            terms: self
                .poly
                .terms()
                .map(|(m, c)| RawTerm {
                    exp: m.exponents().to_vec(),
                    coef: c.to_string(),
                })
                .collect(),
            cardinality: self.cardinality().to_string(),
            method: self.method.name().to_string(),
        };
        serde_json::to_string(&raw).expect("enumerator serializes")
    }

    /// Parses the JSON form. The stored cardinality must match the terms.
    pub fn from_json(s: &str) -> Result<Enumerator> {
        let raw: RawEnumerator =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let kind: Kind = raw.kind.parse()?;
        let method: Method = raw.method.parse()?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| {
                let c: BigInt = t
                    .coef
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coef)))?;
                Ok((t.exp, c))
            })
            .collect::<Result<Vec<_>>>()?;
        let poly = IntPoly::from_terms(&raw.variables, terms)?;
        let card: BigInt = raw
            .cardinality
            .parse()
            .map_err(|_| Error::Parse(format!("bad cardinality {:?}", raw.cardinality)))?;
        if card.is_negative() || card != poly.sum_coeffs() {
            return Err(Error::Parse(format!(
                "cardinality {card} does not match the terms"
            )));
        }
        Enumerator::new(kind, poly, None, method)
    }
}

impl fmt::Display for Enumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.poly, f)
    }
}

#[derive(Serialize, Deserialize)]
struct RawTerm {
    exp: Vec<u64>,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct RawEnumerator {
    kind: String,
    variables: Vec<String>,
    terms: Vec<RawTerm>,
    cardinality: String,
    method: String,
}
