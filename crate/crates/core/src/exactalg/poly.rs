//! Sparse multivariate polynomials over exact coefficient rings.
//!
//! Variables are kept in a canonical order (`z1..zs`, then `w`/`w0..w{r-1}`,
//! then `q`, then anything else alphabetically), and terms iterate by total
//! degree ascending, ties broken by descending lexicographic exponent vector.
//! That is the order the text format prints in, e.g. `1 + 2*w^2 + 2*w^3` or
//! `w0^3 + 2*w0*w1*w2 + w1^3 + w2^3`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::CycElement;
use crate::error::{Error, Result};

/// Ring operations a polynomial coefficient needs.
pub trait Coefficient: Clone + fmt::Debug + PartialEq + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero_coeff(&self) -> bool;
    fn add_coeff(&self, other: &Self) -> Self;
    fn mul_coeff(&self, other: &Self) -> Self;
    fn neg_coeff(&self) -> Self;
    fn mul_int(&self, k: &BigInt) -> Self;
}

impl Coefficient for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero_coeff(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_coeff(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_coeff(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_coeff(&self) -> Self {
        -self
    }
    fn mul_int(&self, k: &BigInt) -> Self {
        self * k
    }
}

/// Mixed orders are embedded at their lcm.
impl Coefficient for CycElement {
    fn zero() -> Self {
        CycElement::zero(1).unwrap()
    }
    fn one() -> Self {
        CycElement::constant(1, 1).unwrap()
    }
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    fn add_coeff(&self, other: &Self) -> Self {
        let (a, b) = self.align(other);
        a.checked_add(&b).expect("aligned orders")
    }
    fn mul_coeff(&self, other: &Self) -> Self {
        let (a, b) = self.align(other);
        a.checked_mul(&b).expect("aligned orders")
    }
    fn neg_coeff(&self) -> Self {
        self.neg()
    }
    fn mul_int(&self, k: &BigInt) -> Self {
        self.scale(k)
    }
}

/// Exponent vector with the polynomial's term order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u64>);

impl Monomial {
    pub fn new(exps: Vec<u64>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u64] {
        &self.0
    }

    pub fn degree(&self) -> u128 {
        self.0.iter().map(|&e| e as u128).sum()
    }

    fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sort key placing variable names in canonical order.
fn var_rank(name: &str) -> (u8, u64, String) {
    let numbered = |prefix: &str| -> Option<u64> {
        let rest = name.strip_prefix(prefix)?;
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        rest.parse().ok()
    };
    if let Some(i) = numbered("z") {
        (0, i, String::new())
    } else if name == "w" {
        (1, 0, String::new())
    } else if let Some(i) = numbered("w") {
        (1, i + 1, String::new())
    } else if name == "q" {
        (2, 0, String::new())
    } else {
        (3, 0, name.to_string())
    }
}

fn canonical_vars<'a>(names: impl IntoIterator<Item = &'a str>) -> Vec<String> {
    let mut v: Vec<String> = names.into_iter().map(str::to_string).collect();
    v.sort_by_key(|n| var_rank(n));
    v.dedup();
    v
}

/// Sparse polynomial; no stored coefficient is zero.
#[derive(Clone, PartialEq)]
pub struct MultiPoly<C = BigInt> {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, C>,
}

/// Polynomial with arbitrary-precision integer coefficients.
pub type IntPoly = MultiPoly<BigInt>;

impl<C: Coefficient> MultiPoly<C> {
    /// The zero polynomial over the given variables.
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        MultiPoly {
            vars: canonical_vars(vars.iter().map(AsRef::as_ref)),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: C) -> Self {
        let mut p = Self::zero(vars);
        let n = p.vars.len();
        p.insert(Monomial(vec![0; n]), c);
        p
    }

    pub fn one<S: AsRef<str>>(vars: &[S]) -> Self {
        Self::constant(vars, C::one())
    }

    /// The single variable `name` with unit coefficient.
    pub fn var(name: &str) -> Self {
        let mut p = Self::zero(&[name]);
        p.insert(Monomial(vec![1]), C::one());
        p
    }

    /// Builds from `(exponents, coefficient)` pairs; exponents follow `vars`
    /// as given, which need not be canonical. Duplicates are summed.
    pub fn from_terms<S: AsRef<str>>(
        vars: &[S],
        terms: impl IntoIterator<Item = (Vec<u64>, C)>,
    ) -> Result<Self> {
        let given: Vec<&str> = vars.iter().map(AsRef::as_ref).collect();
        let mut p = Self::zero(&given);
        if p.vars.len() != given.len() {
            return Err(Error::invalid("duplicate variable name"));
        }
        let perm: Vec<usize> = p
            .vars
            .iter()
            .map(|v| given.iter().position(|g| g == v).unwrap())
            .collect();
        for (exps, c) in terms {
            if exps.len() != given.len() {
                return Err(Error::LengthMismatch {
                    expected: given.len(),
                    got: exps.len(),
                });
            }
            let mono = Monomial(perm.iter().map(|&i| exps[i]).collect());
            p.insert(mono, c);
        }
        Ok(p)
    }

    fn insert(&mut self, mono: Monomial, c: C) {
        if c.is_zero_coeff() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add_coeff(&c);
                if sum.is_zero_coeff() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    /// Coefficient at an exponent vector given in this polynomial's variable order.
    pub fn coeff(&self, exps: &[u64]) -> C {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// Coefficient of the monomial described by `(variable, exponent)` pairs;
    /// unnamed variables have exponent zero.
    pub fn coeff_of(&self, powers: &[(&str, u64)]) -> C {
        let mut exps = vec![0; self.vars.len()];
        for (name, e) in powers {
            match self.vars.iter().position(|v| v == name) {
                Some(i) => exps[i] = *e,
                None if *e == 0 => {}
                None => return C::zero(),
            }
        }
        self.coeff(&exps)
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Re-expresses this polynomial over a superset of its variables.
    pub fn with_vars<S: AsRef<str>>(&self, vars: &[S]) -> Result<Self> {
        let target = canonical_vars(
            vars.iter()
                .map(AsRef::as_ref)
                .chain(self.vars.iter().map(String::as_str)),
        );
        if target == self.vars {
            return Ok(self.clone());
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| target.iter().position(|t| t == v).unwrap())
            .collect();
        let mut out = MultiPoly {
            vars: target,
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            let mut exps = vec![0; out.vars.len()];
            for (i, &e) in m.0.iter().enumerate() {
                exps[map[i]] = e;
            }
            out.terms.insert(Monomial(exps), c.clone());
        }
        Ok(out)
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let a = self.with_vars(&other.vars).unwrap();
        let b = other.with_vars(&a.vars).unwrap();
        (a, b)
    }

    /// Drops variables that appear with exponent zero in every term.
    pub fn trim_vars(&self) -> Self {
        let keep: Vec<usize> = (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] != 0))
            .collect();
        let mut out = MultiPoly {
            vars: keep.iter().map(|&i| self.vars[i].clone()).collect(),
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            out.terms
                .insert(Monomial(keep.iter().map(|&i| m.0[i]).collect()), c.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.aligned(other);
        for (m, c) in b.terms {
            a.insert(m, c);
        }
        a
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg_coeff()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.aligned(other);
        let mut out = MultiPoly::zero(&a.vars);
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.insert(ma.checked_mul(mb)?, ca.mul_coeff(cb));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u64) -> Result<Self> {
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &C) -> Self {
        let mut out = MultiPoly::zero(&self.vars);
        for (m, k) in &self.terms {
            out.insert(m.clone(), k.mul_coeff(c));
        }
        out
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            out.insert(m.clone(), c.mul_int(k));
        }
        out
    }

    /// Simultaneously replaces each named variable by a polynomial. Replaced
    /// variables leave the variable list unless a replacement mentions them.
    pub fn substitute(&self, subs: &[(&str, MultiPoly<C>)]) -> Result<Self> {
        let mut idx = Vec::with_capacity(subs.len());
        for (name, _) in subs {
            match self.var_index(name) {
                Some(i) => idx.push(i),
                None => return Err(Error::invalid(format!("unknown variable {name}"))),
            }
        }
        let remaining: Vec<&str> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| !idx.contains(i))
            .map(|(_, v)| v.as_str())
            .collect();
        let mut out_vars: Vec<&str> = remaining.clone();
        for (_, p) in subs {
            out_vars.extend(p.vars.iter().map(String::as_str));
        }
        let out_vars = canonical_vars(out_vars);
        let values: Vec<MultiPoly<C>> = subs
            .iter()
            .map(|(_, p)| p.with_vars(&out_vars))
            .collect::<Result<_>>()?;
        let keep: Vec<(usize, usize)> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| !idx.contains(i))
            .map(|(i, v)| (i, out_vars.iter().position(|o| o == v).unwrap()))
            .collect();

        let mut powers: HashMap<(usize, u64), MultiPoly<C>> = HashMap::new();
        let mut out = MultiPoly::zero(&out_vars);
        for (m, c) in &self.terms {
            let mut exps = vec![0u64; out_vars.len()];
            for &(from, to) in &keep {
                exps[to] = m.0[from];
            }
            let mut term = MultiPoly {
                vars: out_vars.clone(),
                terms: BTreeMap::from([(Monomial(exps), c.clone())]),
            };
            for (k, &i) in idx.iter().enumerate() {
                let e = m.0[i];
                if e == 0 {
                    continue;
                }
                let pw = match powers.get(&(k, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = values[k].pow(e)?;
                        powers.insert((k, e), p.clone());
                        p
                    }
                };
                term = term.mul(&pw)?;
            }
            for (tm, tc) in term.terms {
                out.insert(tm, tc);
            }
        }
        Ok(out)
    }

    /// Replaces each named variable by a constant.
    pub fn evaluate_vars(&self, values: &[(&str, C)]) -> Result<Self> {
        let subs: Vec<(&str, MultiPoly<C>)> = values
            .iter()
            .map(|(n, c)| (*n, MultiPoly::constant::<&str>(&[], c.clone())))
            .collect();
        self.substitute(&subs)
    }

    /// Sum of all coefficients, i.e. the value at the all-ones point.
    pub fn sum_coeffs(&self) -> C {
        self.terms
            .values()
            .fold(C::zero(), |acc, c| acc.add_coeff(c))
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        self.try_map_coeffs(|c| Ok(f(c))).unwrap()
    }

    pub fn try_map_coeffs<D: Coefficient>(
        &self,
        f: impl Fn(&C) -> Result<D>,
    ) -> Result<MultiPoly<D>> {
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            out.insert(m.clone(), f(c)?);
        }
        Ok(out)
    }
}

impl IntPoly {
    /// Coefficient-wise exact division; `NonDivisible` if any remainder is nonzero.
    pub fn divide_exact(&self, k: &BigInt) -> Result<IntPoly> {
        if k.is_zero() {
            return Err(Error::invalid("division by zero"));
        }
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return Err(Error::NonDivisible {
                    value: c.to_string(),
                    divisor: k.to_string(),
                });
            }
            out.insert(m.clone(), q);
        }
        Ok(out)
    }

    /// Embeds integer coefficients as constant cyclotomic elements.
    pub fn to_cyclotomic(&self) -> MultiPoly<CycElement> {
        self.map_coeffs(|c| CycElement::constant(1, c.clone()).unwrap())
    }

    pub fn has_negative_coeffs(&self) -> bool {
        self.terms.values().any(Signed::is_negative)
    }
}

impl MultiPoly<CycElement> {
    /// Reduces every coefficient to a rational integer (`NotAnInteger` otherwise).
    pub fn to_integer_poly(&self) -> Result<IntPoly> {
        self.try_map_coeffs(CycElement::to_integer)
    }
}

impl<C: Coefficient> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultiPoly")
            .field("vars", &self.vars)
            .field("terms", &self.terms.iter().collect::<Vec<_>>())
            .finish()
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, vars: &[String], m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (v, &e) in vars.iter().zip(&m.0) {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

/// Canonical text: `c*v1^e1*v2^e2` terms joined by ` + ` (or ` - ` before a
/// negative coefficient), unit coefficients and zero exponents omitted, `0`
/// for the zero polynomial.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, &self.vars, m)?;
            }
        }
        Ok(())
    }
}

fn parse_term(s: &str) -> Result<(BigInt, Vec<(String, u64)>)> {
    let bad = || Error::Parse(format!("malformed term {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    let mut coeff = <BigInt as One>::one();
    let mut powers = Vec::new();
    for (i, factor) in s.split('*').enumerate() {
        if factor.is_empty() {
            return Err(bad());
        }
        if factor.bytes().all(|b| b.is_ascii_digit()) {
            if i != 0 {
                return Err(bad());
            }
            coeff = factor.parse().map_err(|_| bad())?;
            continue;
        }
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => (n, e.parse::<u64>().map_err(|_| bad())?),
            None => (factor, 1),
        };
        let valid = name
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic())
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid {
            return Err(bad());
        }
        powers.push((name.to_string(), exp));
    }
    Ok((coeff, powers))
}

impl FromStr for IntPoly {
    type Err = Error;

    /// Parses the canonical text format. Variables are taken from the text.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(IntPoly::zero::<&str>(&[]));
        }
        let mut signed_terms: Vec<(bool, &str)> = Vec::new();
        let mut rest = s;
        let mut neg = false;
        if let Some(r) = rest.strip_prefix('-') {
            neg = true;
            rest = r;
        }
        loop {
            let plus = rest.find(" + ");
            let minus = rest.find(" - ");
            let cut = match (plus, minus) {
                (Some(p), Some(m)) => Some((p.min(m), p < m)),
                (Some(p), None) => Some((p, true)),
                (None, Some(m)) => Some((m, false)),
                (None, None) => None,
            };
            match cut {
                Some((at, is_plus)) => {
                    signed_terms.push((neg, &rest[..at]));
                    neg = !is_plus;
                    rest = &rest[at + 3..];
                }
                None => {
                    signed_terms.push((neg, rest));
                    break;
                }
            }
        }
        let parsed: Vec<(BigInt, Vec<(String, u64)>)> = signed_terms
            .into_iter()
            .map(|(neg, t)| parse_term(t).map(|(c, p)| (if neg { -c } else { c }, p)))
            .collect::<Result<_>>()?;
        let vars = canonical_vars(
            parsed
                .iter()
                .flat_map(|(_, p)| p.iter().map(|(n, _)| n.as_str())),
        );
        let mut out = IntPoly::zero(&vars);
        for (c, powers) in parsed {
            let mut exps = vec![0u64; vars.len()];
            for (name, e) in powers {
                let i = vars.iter().position(|v| *v == name).unwrap();
                exps[i] = exps[i].checked_add(e).ok_or(Error::ExponentOverflow)?;
            }
            out.insert(Monomial(exps), c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn product_of_conjugates() {
        let a = p("1 + w");
        let b = p("1 - w");
        assert_eq!(a.mul(&b).unwrap().to_string(), "1 - w^2");
    }

    #[test]
    fn hamming_specialization_example() {
        let complete = p("w0^3 + 2*w0*w1*w2 + w1^3 + w2^3");
        let w = IntPoly::var("w");
        let h = complete
            .substitute(&[("w0", IntPoly::one::<&str>(&[])), ("w1", w.clone()), ("w2", w)])
            .unwrap();
        assert_eq!(h.to_string(), "1 + 2*w^2 + 2*w^3");
    }

    #[test]
    fn pow_zero_is_one() {
        assert_eq!(p("1 + q").pow(0).unwrap().to_string(), "1");
        assert_eq!(p("1 + q").pow(3).unwrap().to_string(), "1 + 3*q + 3*q^2 + q^3");
    }

    #[test]
    fn divide_exact_examples() {
        assert_eq!(p("3 + 6*w").divide_exact(&big(3)).unwrap().to_string(), "1 + 2*w");
        assert!(matches!(
            p("2 + 3*w").divide_exact(&big(2)),
            Err(Error::NonDivisible { .. })
        ));
        assert!(p("0").divide_exact(&big(5)).unwrap().is_zero());
    }

    #[test]
    fn term_order_matches_text_examples() {
        let c = IntPoly::from_terms(
            &["w0", "w1", "w2"],
            vec![
                (vec![0, 0, 3], big(1)),
                (vec![0, 3, 0], big(1)),
                (vec![1, 1, 1], big(2)),
                (vec![3, 0, 0], big(1)),
            ],
        )
        .unwrap();
        assert_eq!(c.to_string(), "w0^3 + 2*w0*w1*w2 + w1^3 + w2^3");
    }

    #[test]
    fn variables_sort_canonically() {
        let x = IntPoly::var("q").add(&IntPoly::var("w1")).add(&IntPoly::var("z2"));
        assert_eq!(x.vars(), &["z2", "w1", "q"]);
        let y = IntPoly::var("w10").add(&IntPoly::var("w2"));
        assert_eq!(y.vars(), &["w2", "w10"]);
    }

    #[test]
    fn zero_coefficients_are_never_stored() {
        let x = p("1 + w").add(&p("-1 - w"));
        assert!(x.is_zero());
        assert_eq!(x.to_string(), "0");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("1 + ".parse::<IntPoly>().is_err());
        assert!("2**w".parse::<IntPoly>().is_err());
        assert!("w^x".parse::<IntPoly>().is_err());
        assert!("w*3".parse::<IntPoly>().is_err());
    }

    #[test]
    fn cyclotomic_coefficients_reduce() {
        // (1 + e(1/2) w)(1 + w) over order-2 roots is 1 - w^2
        let half = CycElement::root(2, 1).unwrap();
        let a = MultiPoly::<CycElement>::one::<&str>(&[]).add(&MultiPoly::var("w").scale(&half));
        let b = MultiPoly::<CycElement>::one::<&str>(&[]).add(&MultiPoly::var("w"));
        let prod = a.mul(&b).unwrap().to_integer_poly().unwrap();
        assert_eq!(prod.to_string(), "1 - w^2");
    }

    #[test]
    fn mixed_orders_embed_at_lcm() {
        let x = MultiPoly::constant::<&str>(&[], CycElement::root(2, 1).unwrap());
        let y = MultiPoly::constant::<&str>(&[], CycElement::root(3, 1).unwrap());
        let prod = x.mul(&y).unwrap();
        let (_, c) = prod.terms().next().unwrap();
        assert_eq!(c.order(), 6);
        assert_eq!(*c, CycElement::root(6, 5).unwrap());
    }

    #[test]
    fn coeff_lookup_by_name() {
        let x = p("3*z1^2*w0 + w1");
        assert_eq!(x.coeff_of(&[("z1", 2), ("w0", 1)]), big(3));
        assert_eq!(x.coeff_of(&[("w1", 1)]), big(1));
        assert_eq!(x.coeff_of(&[("q", 1)]), big(0));
    }
}
