//! Exact multivariate polynomials over the rationals, reduced modulo
//! square-rewrite rules, plus a fraction layer for division.
//!
//! Every [`Scalar`] is kept in normal form: no monomial contains the square
//! of a ruled symbol. Normal forms are unique for triangular rule systems, so
//! equality and the zero test are structural.
//!
//! The quotient rings used in practice (`Q[s]/(s^2-3)`,
//! `Q[t0,t2]/(t0^2+t2^2-1)`, `Q[a,b,k]/(k^2-a^2+b^2)`) are integral domains.
//! [`Fraction`] relies on that when it cancels and compares by
//! cross-multiplication.

mod fraction;
mod parse;
mod poly;
mod table;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use fraction::Fraction;
pub use table::{SquareRule, SymbolTable};

pub(crate) use poly::{Monomial, Terms};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("invalid symbol name `{0}`")]
    InvalidSymbolName(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("symbol `{0}` already has a square rule")]
    DuplicateRule(String),
    #[error("rule for `{symbol}` mentions `{offending}`, which is not declared before it")]
    NonTriangularRule { symbol: String, offending: String },
    #[error("operands belong to different symbol tables")]
    MismatchedTables,
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator `{0}` is a zero divisor under the declared rules")]
    ZeroDivisor(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("`{0}` is not a polynomial")]
    NotPolynomial(String),
    #[error("binding `{symbol}` = {value} violates its rule `{symbol}^2 = {expected}`")]
    RuleViolation { symbol: String, value: String, expected: String },
    #[error("cannot check binding of `{0}`: its rule mentions unbound symbols")]
    UncheckableBinding(String),
}

/// A polynomial with rational coefficients in normal form.
///
/// Constants may be table-less; they adopt the table of whatever they are
/// combined with. Operator impls panic on mismatched tables, the `try_*`
/// methods report [`ScalarError::MismatchedTables`] instead.
#[derive(Clone)]
pub struct Scalar {
    table: Option<Arc<SymbolTable>>,
    terms: Terms,
}

pub(crate) fn merge_tables(
    a: &Option<Arc<SymbolTable>>,
    b: &Option<Arc<SymbolTable>>,
) -> Result<Option<Arc<SymbolTable>>, ScalarError> {
    match (a, b) {
        (None, t) | (t, None) => Ok(t.clone()),
        (Some(x), Some(y)) if Arc::ptr_eq(x, y) || x == y => Ok(Some(x.clone())),
        _ => Err(ScalarError::MismatchedTables),
    }
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Scalar {
    pub(crate) fn from_parts(table: Option<Arc<SymbolTable>>, terms: Terms) -> Self {
        let terms = match &table {
            Some(t) => t.normalize_terms(terms),
            None => terms,
        };
        Scalar { table, terms }
    }

    pub fn constant(value: BigRational) -> Self {
        let mut terms = Terms::new();
        poly::add_term(&mut terms, Monomial::one(), value);
        Scalar { table: None, terms }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::constant(rat(n))
    }

    pub fn symbol(table: &Arc<SymbolTable>, name: &str) -> Result<Self, ScalarError> {
        let index = table
            .index_of(name)
            .ok_or_else(|| ScalarError::UnknownSymbol(name.to_string()))?;
        let terms = [(Monomial::var(index), rat(1))].into_iter().collect();
        Ok(Scalar::from_parts(Some(table.clone()), terms))
    }

    /// Parses an expression such as `3/4*a - s*m^2 + (t0 - 1)`.
    pub fn parse(table: &Arc<SymbolTable>, text: &str) -> Result<Self, ScalarError> {
        parse::parse_scalar(table, text)
    }

    /// Re-normalises a raw term map; exposed for completeness of the normal
    /// form contract.
    pub fn normalize(&self) -> Scalar {
        Scalar::from_parts(self.table.clone(), self.terms.clone())
    }

    pub fn table(&self) -> Option<&Arc<SymbolTable>> {
        self.table.as_ref()
    }

    pub(crate) fn terms(&self) -> &Terms {
        &self.terms
    }

    /// Moves this scalar into a table that extends its own.
    pub fn lift(&self, table: &Arc<SymbolTable>) -> Result<Scalar, ScalarError> {
        match &self.table {
            Some(own) if !own.is_prefix_of(table) => Err(ScalarError::MismatchedTables),
            _ => Ok(Scalar { table: Some(table.clone()), terms: self.terms.clone() }),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The rational value when the scalar is free of symbols.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        let table = merge_tables(&self.table, &other.table)?;
        Ok(Scalar { table, terms: poly::add_terms(&self.terms, &other.terms) })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        let table = merge_tables(&self.table, &other.table)?;
        let raw = poly::mul_terms(&self.terms, &other.terms);
        Ok(Scalar::from_parts(table, raw))
    }

    pub fn scale(&self, k: &BigRational) -> Scalar {
        Scalar { table: self.table.clone(), terms: poly::scale_terms(&self.terms, k) }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar { table: self.table.clone(), terms: Scalar::from_int(1).terms };
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Index of the last-declared ruled symbol that occurs, if any.
    pub(crate) fn highest_ruled_symbol(&self) -> Option<usize> {
        let table = self.table.as_ref()?;
        self.terms
            .keys()
            .flat_map(|m| m.exponents().iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i))
            .filter(|i| table.is_ruled(*i))
            .max()
    }

    /// Evaluates the bound symbols at rational values and leaves the rest
    /// symbolic. Binding a ruled symbol requires its value to satisfy the
    /// rule exactly.
    pub fn substitute(&self, bindings: &BTreeMap<String, BigRational>) -> Result<Scalar, ScalarError> {
        let Some(table) = &self.table else {
            return Ok(self.clone());
        };
        let mut values: Vec<Option<BigRational>> = vec![None; table.len()];
        for (name, value) in bindings {
            let i = table
                .index_of(name)
                .ok_or_else(|| ScalarError::UnknownSymbol(name.clone()))?;
            values[i] = Some(value.clone());
        }
        for (i, v) in values.iter().enumerate() {
            let (Some(v), Some(rule)) = (v, table.rule_terms(i)) else { continue };
            let rhs = eval_terms(rule, &values);
            let expected = rhs
                .as_constant()
                .ok_or_else(|| ScalarError::UncheckableBinding(table.symbols()[i].clone()))?;
            if v * v != expected {
                return Err(ScalarError::RuleViolation {
                    symbol: table.symbols()[i].clone(),
                    value: v.to_string(),
                    expected: expected.to_string(),
                });
            }
        }
        Ok(Scalar::from_parts(Some(table.clone()), eval_terms(&self.terms, &values).terms))
    }

    /// Sign of the scalar when it is decidable: a rational constant, or
    /// `p + q*v` where `v` is ruled by `v^2 -> R` with `R` a positive
    /// rational. Such a symbol denotes the positive root `sqrt(R)`.
    pub fn sign(&self) -> Option<Ordering> {
        if let Some(c) = self.as_constant() {
            return Some(c.cmp(&BigRational::zero()));
        }
        let table = self.table.as_ref()?;
        let mut p = BigRational::zero();
        let mut root: Option<(usize, BigRational)> = None;
        for (m, c) in &self.terms {
            if m.is_one() {
                p = c.clone();
                continue;
            }
            if m.degree() != 1 {
                return None;
            }
            let v = m.exponents().len() - 1;
            if root.is_some() {
                return None;
            }
            root = Some((v, c.clone()));
        }
        let (v, q) = root?;
        let r = Scalar::from_parts(None, table.rule_terms(v)?.clone()).as_constant()?;
        if !r.is_positive() {
            return None;
        }
        let sign_p = p.cmp(&BigRational::zero());
        let sign_q = q.cmp(&BigRational::zero());
        if sign_p == Ordering::Equal || sign_p == sign_q {
            return Some(sign_q);
        }
        // opposite signs: compare p^2 with q^2 * R
        match (&p * &p).cmp(&(&q * &q * r)) {
            Ordering::Greater => Some(sign_p),
            Ordering::Less => Some(sign_q),
            Ordering::Equal => Some(Ordering::Equal),
        }
    }

    /// Splits `self = p + q*v` for a symbol `v` of exponent at most one.
    pub(crate) fn split_linear(&self, v: usize) -> (Scalar, Scalar) {
        let mut p = Terms::new();
        let mut q = Terms::new();
        for (m, c) in &self.terms {
            if m.exp(v) == 0 {
                poly::add_term(&mut p, m.clone(), c.clone());
            } else {
                poly::add_term(&mut q, m.with_exp(v, m.exp(v) - 1), c.clone());
            }
        }
        (
            Scalar { table: self.table.clone(), terms: p },
            Scalar { table: self.table.clone(), terms: q },
        )
    }

    pub(crate) fn with_terms(&self, terms: Terms) -> Scalar {
        Scalar { table: self.table.clone(), terms }
    }
}

fn eval_terms(terms: &Terms, values: &[Option<BigRational>]) -> Scalar {
    let mut out = Terms::new();
    for (m, c) in terms {
        let mut coeff = c.clone();
        let mut exps = m.exponents().to_vec();
        for (i, e) in exps.iter_mut().enumerate() {
            if let Some(Some(v)) = values.get(i) {
                coeff *= num_traits::pow(v.clone(), *e as usize);
                *e = 0;
            }
        }
        poly::add_term(&mut out, Monomial::from_exponents(exps), coeff);
    }
    Scalar { table: None, terms: out }
}

pub(crate) fn display_terms(terms: &Terms, names: &[String]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut ordered: Vec<(&Monomial, &BigRational)> = terms.iter().collect();
    ordered.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    let mut out = String::new();
    for (k, (m, c)) in ordered.into_iter().enumerate() {
        let negative = c.is_negative();
        let mag = c.abs();
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mut factors = Vec::new();
        if !mag.is_one() || m.is_one() {
            factors.push(mag.to_string());
        }
        for (i, e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(names[i].clone()),
                _ => factors.push(format!("{}^{}", names[i], e)),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.table.as_ref().map(|t| t.symbols()).unwrap_or(&[]);
        f.write_str(&display_terms(&self.terms, names))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        merge_tables(&self.table, &other.table).is_ok() && self.terms == other.terms
    }
}

impl Eq for Scalar {}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::constant(r)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { table: self.table.clone(), terms: poly::neg_terms(&self.terms) }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$try(rhs).expect("scalar operands share a symbol table")
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

scalar_binop!(Add, add, try_add);
scalar_binop!(Sub, sub, try_sub);
scalar_binop!(Mul, mul, try_mul);

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar { table: None, terms: Terms::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::from_int(1)
    }
}
