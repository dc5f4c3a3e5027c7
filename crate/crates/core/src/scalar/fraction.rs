use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{self, Monomial, Terms};
use super::{merge_tables, Scalar, ScalarError, SymbolTable};

/// A quotient of two [`Scalar`]s with nonzero denominator.
///
/// On construction the denominator is rationalised (ruled symbols are
/// removed by multiplying through with conjugates), constant denominators
/// are folded into the numerator, and exact polynomial division is tried.
/// Remaining denominators are scaled so their leading coefficient is one.
#[derive(Clone)]
pub struct Fraction {
    num: Scalar,
    den: Scalar,
}

impl Fraction {
    pub fn new(num: Scalar, den: Scalar) -> Result<Self, ScalarError> {
        let table = merge_tables(&num.table, &den.table)?;
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let mut num = Scalar { table: table.clone(), terms: num.terms };
        let mut den = Scalar { table, terms: den.terms };
        if num.is_zero() {
            return Ok(Fraction::from_scalar(num.with_terms(Terms::new())));
        }

        while let Some(v) = den.highest_ruled_symbol() {
            let (p, q) = den.split_linear(v);
            let qv = q.with_terms(poly::mul_terms(&q.terms, &[(Monomial::var(v), super::rat(1))].into_iter().collect()));
            let conj = &p - &qv;
            let next = &den * &conj;
            if next.is_zero() {
                return Err(ScalarError::ZeroDivisor(den.to_string()));
            }
            num = &num * &conj;
            den = next;
        }

        if let Some(c) = den.as_constant() {
            let inv = c.recip();
            return Ok(Fraction { num: num.scale(&inv), den: den.with_terms(Scalar::from_int(1).terms) });
        }

        if let Some(q) = divide_by_unruled(&num, &den) {
            return Ok(Fraction { num: q, den: den.with_terms(Scalar::from_int(1).terms) });
        }

        let lead = den.terms.last_key_value().map(|(_, c)| c.recip()).expect("nonzero");
        Ok(Fraction { num: num.scale(&lead), den: den.scale(&lead) })
    }

    pub fn from_scalar(s: Scalar) -> Self {
        let one = s.with_terms(Scalar::from_int(1).terms);
        Fraction { num: s, den: one }
    }

    pub fn from_int(n: i64) -> Self {
        Fraction::from_scalar(Scalar::from_int(n))
    }

    pub fn constant(r: BigRational) -> Self {
        Fraction::from_scalar(Scalar::constant(r))
    }

    pub fn symbol(table: &Arc<SymbolTable>, name: &str) -> Result<Self, ScalarError> {
        Scalar::symbol(table, name).map(Fraction::from_scalar)
    }

    /// Parses an expression; unlike [`Scalar::parse`], arbitrary nonzero
    /// divisors are accepted.
    pub fn parse(table: &Arc<SymbolTable>, text: &str) -> Result<Self, ScalarError> {
        super::parse::parse_fraction(table, text)
    }

    pub fn numer(&self) -> &Scalar {
        &self.num
    }

    pub fn denom(&self) -> &Scalar {
        &self.den
    }

    pub fn table(&self) -> Option<&Arc<SymbolTable>> {
        self.num.table.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The numerator when the denominator is one.
    pub fn to_scalar(&self) -> Option<Scalar> {
        self.den.is_one().then(|| self.num.clone())
    }

    pub fn lift(&self, table: &Arc<SymbolTable>) -> Result<Fraction, ScalarError> {
        Ok(Fraction { num: self.num.lift(table)?, den: self.den.lift(table)? })
    }

    pub fn try_add(&self, other: &Fraction) -> Result<Fraction, ScalarError> {
        if self.den == other.den {
            return Fraction::new(self.num.try_add(&other.num)?, self.den.clone());
        }
        let num = self.num.try_mul(&other.den)?.try_add(&other.num.try_mul(&self.den)?)?;
        Fraction::new(num, self.den.try_mul(&other.den)?)
    }

    pub fn try_sub(&self, other: &Fraction) -> Result<Fraction, ScalarError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Fraction) -> Result<Fraction, ScalarError> {
        if self.is_zero() || other.is_zero() {
            merge_tables(&self.num.table, &other.num.table)?;
            return Ok(Fraction::from_int(0));
        }
        Fraction::new(self.num.try_mul(&other.num)?, self.den.try_mul(&other.den)?)
    }

    pub fn try_inv(&self) -> Result<Fraction, ScalarError> {
        if self.num.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Fraction::new(self.den.clone(), self.num.clone())
    }

    pub fn try_div(&self, other: &Fraction) -> Result<Fraction, ScalarError> {
        self.try_mul(&other.try_inv()?)
    }

    pub fn substitute(
        &self,
        bindings: &std::collections::BTreeMap<String, BigRational>,
    ) -> Result<Fraction, ScalarError> {
        Fraction::new(self.num.substitute(bindings)?, self.den.substitute(bindings)?)
    }

    pub fn sign(&self) -> Option<Ordering> {
        let n = self.num.sign()?;
        let d = self.den.sign()?;
        Some(if d == Ordering::Less { n.reverse() } else { n })
    }
}

/// `num / den` when `den` is free of ruled symbols and divides `num`
/// exactly. Monomials of `num` are grouped by their ruled part, so each group
/// is a plain polynomial division.
fn divide_by_unruled(num: &Scalar, den: &Scalar) -> Option<Scalar> {
    let table = num.table.as_ref()?;
    let ruled_part = |m: &Monomial| {
        Monomial::from_exponents(
            m.exponents()
                .iter()
                .enumerate()
                .map(|(i, e)| if table.is_ruled(i) { *e } else { 0 })
                .collect(),
        )
    };
    let mut groups: std::collections::BTreeMap<Monomial, Terms> = Default::default();
    for (m, c) in &num.terms {
        let r = ruled_part(m);
        let free = Monomial::from_exponents(
            m.exponents()
                .iter()
                .enumerate()
                .map(|(i, e)| if table.is_ruled(i) { 0 } else { *e })
                .collect(),
        );
        poly::add_term(groups.entry(r).or_default(), free, c.clone());
    }
    let mut out = Terms::new();
    for (r, group) in groups {
        let q = poly::divide_exact(&group, &den.terms)?;
        for (m, c) in q {
            poly::add_term(&mut out, m.mul(&r), c);
        }
    }
    Some(num.with_terms(out))
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |s: &Scalar, strict: bool| {
            let text = s.to_string();
            if s.term_count() > 1 || text.contains('/') || (strict && text.contains('*')) {
                format!("({text})")
            } else {
                text
            }
        };
        write!(f, "{}/{}", wrap(&self.num, false), wrap(&self.den, true))
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fraction({self})")
    }
}

impl PartialEq for Fraction {
    fn eq(&self, other: &Self) -> bool {
        if merge_tables(&self.num.table, &other.num.table).is_err() {
            return false;
        }
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for Fraction {}

impl From<Scalar> for Fraction {
    fn from(s: Scalar) -> Self {
        Fraction::from_scalar(s)
    }
}

impl From<i64> for Fraction {
    fn from(n: i64) -> Self {
        Fraction::from_int(n)
    }
}

impl Neg for &Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        -&self
    }
}

macro_rules! fraction_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Fraction> for &Fraction {
            type Output = Fraction;
            fn $method(self, rhs: &Fraction) -> Fraction {
                self.$try(rhs).unwrap_or_else(|e| panic!("fraction {}: {e}", stringify!($method)))
            }
        }
        impl $trait<Fraction> for Fraction {
            type Output = Fraction;
            fn $method(self, rhs: Fraction) -> Fraction {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Fraction> for Fraction {
            type Output = Fraction;
            fn $method(self, rhs: &Fraction) -> Fraction {
                (&self).$method(rhs)
            }
        }
    };
}

fraction_binop!(Add, add, try_add);
fraction_binop!(Sub, sub, try_sub);
fraction_binop!(Mul, mul, try_mul);
fraction_binop!(Div, div, try_div);

impl Zero for Fraction {
    fn zero() -> Self {
        Fraction::from_int(0)
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for Fraction {
    fn one() -> Self {
        Fraction::from_int(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> Arc<SymbolTable> {
        SymbolTable::new(["a", "b", "s", "k"])
            .unwrap()
            .with_rule("s", "3")
            .unwrap()
            .with_rule("k", "a^2 - b^2")
            .unwrap()
            .into_shared()
    }

    fn f(t: &Arc<SymbolTable>, e: &str) -> Fraction {
        Fraction::parse(t, e).unwrap()
    }

    #[test]
    fn inverse_of_two() {
        let t = table();
        assert_eq!(f(&t, "2").try_inv().unwrap(), f(&t, "1/2"));
        assert_eq!(f(&t, "2").try_inv().unwrap().to_string(), "1/2");
    }

    #[test]
    fn rationalises_quadratic_surds() {
        let t = table();
        // 1/((s/2)(s/2 + 1)) = 4s(2 - s)/3
        let k = f(&t, "s/2");
        let lambda = (&k * &(&k + &Fraction::from_int(1))).try_inv().unwrap();
        assert_eq!(lambda, f(&t, "4/3*s*(2 - s)"));
        assert!(lambda.to_scalar().is_some());
        // 1/(1 + s) = (s - 1)/2
        assert_eq!(f(&t, "1/(1 + s)"), f(&t, "(s - 1)/2"));
    }

    #[test]
    fn mu_minus_lambda_is_one() {
        let t = table();
        let k = f(&t, "k");
        let one = Fraction::from_int(1);
        let denom = &k * &(&k + &one);
        let lambda = &one / &denom;
        let mu = &(&(&one + &(&k * &k)) + &k) / &denom;
        assert_eq!(&mu - &lambda, one);
    }

    #[test]
    fn exact_division_cancels() {
        let t = table();
        let x = f(&t, "(a^2 - b^2)/(a + b)");
        assert_eq!(x.to_scalar(), Some(Scalar::parse(&t, "a - b").unwrap()));
        let y = f(&t, "(a + 1)/(a + b)");
        assert!(y.to_scalar().is_none());
        assert_eq!(&y * &f(&t, "a + b"), f(&t, "a + 1"));
    }

    #[test]
    fn errors() {
        let t = table();
        assert_eq!(f(&t, "0").try_inv(), Err(ScalarError::DivisionByZero));
        assert!(matches!(Fraction::parse(&t, "1/(s^2 - 3)"), Err(ScalarError::Parse { .. })));
        let zero = Fraction::parse(&t, "s^2 - 3").unwrap();
        assert_eq!(f(&t, "1").try_div(&zero), Err(ScalarError::DivisionByZero));
        let z = SymbolTable::new(["v"]).unwrap().with_rule("v", "4").unwrap().into_shared();
        assert!(matches!(Fraction::parse(&z, "1/(v - 2)"), Err(ScalarError::ZeroDivisor(_))));
    }

    #[test]
    fn display_round_trips() {
        let t = table();
        for e in ["(a + 1)/(a + b)", "-1/2*s", "a/(b^2 + 1)", "k/(a - 3)"] {
            let x = f(&t, e);
            assert_eq!(f(&t, &x.to_string()), x, "{e} -> {x}");
        }
    }
}
