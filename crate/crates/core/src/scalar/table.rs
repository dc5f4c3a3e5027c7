use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;

use super::poly::{add_term, mul_terms, Monomial, Terms};
use super::{parse, Scalar, ScalarError};

/// Declared symbols and their square-rewrite rules.
///
/// A rule `v^2 -> p` may only mention symbols declared before `v`. The rules
/// therefore form a triangular system and rewriting to normal form is
/// confluent and terminating.
#[derive(Clone, PartialEq, Eq)]
pub struct SymbolTable {
    names: Vec<String>,
    rules: Vec<Option<Terms>>,
}

/// One square-rewrite rule, as reported by [`SymbolTable::rules`].
#[derive(Clone, Debug, PartialEq)]
pub struct SquareRule {
    pub symbol: String,
    pub replacement: Scalar,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl SymbolTable {
    /// A table with the given symbols and no rules.
    pub fn new<I, S>(symbols: I) -> Result<Self, ScalarError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut table = SymbolTable { names: Vec::new(), rules: Vec::new() };
        for s in symbols {
            table.push_symbol(s.into())?;
        }
        Ok(table)
    }

    fn push_symbol(&mut self, name: String) -> Result<(), ScalarError> {
        if !valid_name(&name) {
            return Err(ScalarError::InvalidSymbolName(name));
        }
        if self.names.contains(&name) {
            return Err(ScalarError::DuplicateSymbol(name));
        }
        self.names.push(name);
        self.rules.push(None);
        Ok(())
    }

    /// Adds the rule `symbol^2 -> replacement`, parsing `replacement` against
    /// this table.
    pub fn with_rule(mut self, symbol: &str, replacement: &str) -> Result<Self, ScalarError> {
        let index = self
            .index_of(symbol)
            .ok_or_else(|| ScalarError::UnknownSymbol(symbol.to_string()))?;
        if self.rules[index].is_some() {
            return Err(ScalarError::DuplicateRule(symbol.to_string()));
        }
        let shared = Arc::new(self.clone());
        let rhs = parse::parse_scalar(&shared, replacement)?;
        for m in rhs.terms().keys() {
            if let Some(bad) = m.exponents().iter().enumerate().skip(index).find(|(_, e)| **e > 0) {
                return Err(ScalarError::NonTriangularRule {
                    symbol: symbol.to_string(),
                    offending: self.names[bad.0].clone(),
                });
            }
        }
        self.rules[index] = Some(rhs.terms().clone());
        Ok(self)
    }

    /// Appends symbols (and rules over the enlarged table) to a copy of this
    /// table. Scalars of the original table stay valid in the result via
    /// [`Scalar::lift`], since existing exponent positions are unchanged.
    pub fn extended<I, S>(&self, symbols: I, rules: &[(&str, &str)]) -> Result<Self, ScalarError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut table = self.clone();
        for s in symbols {
            table.push_symbol(s.into())?;
        }
        for (sym, rhs) in rules {
            table = table.with_rule(sym, rhs)?;
        }
        Ok(table)
    }

    pub fn into_shared(self) -> Arc<Self> {
        Arc::new(self)
    }

    pub fn symbols(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_ruled(&self, index: usize) -> bool {
        self.rules.get(index).is_some_and(|r| r.is_some())
    }

    pub(crate) fn rule_terms(&self, index: usize) -> Option<&Terms> {
        self.rules.get(index).and_then(|r| r.as_ref())
    }

    /// `true` when `other` begins with exactly this table's symbols and rules.
    pub fn is_prefix_of(&self, other: &SymbolTable) -> bool {
        self.names.len() <= other.names.len()
            && self.names.iter().zip(&other.names).all(|(a, b)| a == b)
            && self.rules.iter().zip(&other.rules).all(|(a, b)| a == b)
    }

    pub fn rules(self: &Arc<Self>) -> Vec<SquareRule> {
        self.rules
            .iter()
            .enumerate()
            .filter_map(|(i, r)| {
                r.as_ref().map(|terms| SquareRule {
                    symbol: self.names[i].clone(),
                    replacement: Scalar::from_parts(Some(self.clone()), terms.clone()),
                })
            })
            .collect()
    }

    fn offending_symbol(&self, m: &Monomial) -> Option<usize> {
        m.exponents()
            .iter()
            .enumerate()
            .rev()
            .find(|(i, e)| **e >= 2 && self.is_ruled(*i))
            .map(|(i, _)| i)
    }

    pub(crate) fn normalize_terms(&self, terms: Terms) -> Terms {
        let mut out = Terms::new();
        for (m, c) in terms {
            match self.offending_symbol(&m) {
                None => add_term(&mut out, m, c),
                Some(v) => {
                    for (m2, c2) in self.reduce_monomial(&m, v) {
                        add_term(&mut out, m2, &c * c2);
                    }
                }
            }
        }
        out
    }

    fn reduce_monomial(&self, m: &Monomial, v: usize) -> Terms {
        let e = m.exp(v);
        let rest = m.with_exp(v, e % 2);
        let rhs = self.rule_terms(v).expect("offending symbol is ruled");
        let mut acc: Terms = [(rest, BigRational::from_integer(1.into()))].into_iter().collect();
        for _ in 0..e / 2 {
            acc = self.normalize_terms(mul_terms(&acc, rhs));
        }
        acc
    }
}

impl fmt::Debug for SymbolTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymbolTable{:?}", self.names)?;
        for (i, r) in self.rules.iter().enumerate() {
            if let Some(r) = r {
                write!(f, " {}^2->{}", self.names[i], super::display_terms(r, &self.names))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_tables() {
        assert!(matches!(SymbolTable::new(["a", "a"]), Err(ScalarError::DuplicateSymbol(_))));
        assert!(matches!(SymbolTable::new(["2x"]), Err(ScalarError::InvalidSymbolName(_))));
        let t = SymbolTable::new(["a", "b", "k"]).unwrap();
        assert!(matches!(
            t.clone().with_rule("a", "b + 1"),
            Err(ScalarError::NonTriangularRule { .. })
        ));
        assert!(matches!(t.clone().with_rule("k", "k + 1"), Err(ScalarError::NonTriangularRule { .. })));
        let t = t.with_rule("k", "a^2 - b^2").unwrap();
        assert!(matches!(t.with_rule("k", "1"), Err(ScalarError::DuplicateRule(_))));
    }

    #[test]
    fn extension_keeps_prefix() {
        let t = SymbolTable::new(["s"]).unwrap().with_rule("s", "3").unwrap();
        let u = t.extended(["x"], &[]).unwrap();
        assert!(t.is_prefix_of(&u));
        assert!(!u.is_prefix_of(&t));
    }
}
