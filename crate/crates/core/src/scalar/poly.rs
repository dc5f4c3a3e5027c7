//! Sparse monomials and raw term maps, with no knowledge of rewrite rules.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

/// Exponent vector, one entry per symbol, with trailing zeros trimmed so the
/// constant monomial is the empty vector regardless of table length.
///
/// The derived `Ord` is lexicographic with the first symbol most significant,
/// which is a monomial order (used by exact division).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct Monomial(Vec<u32>);

impl Monomial {
    pub(crate) fn one() -> Self {
        Monomial(Vec::new())
    }

    pub(crate) fn var(index: usize) -> Self {
        let mut exps = vec![0; index + 1];
        exps[index] = 1;
        Monomial(exps)
    }

    pub(crate) fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub(crate) fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub(crate) fn exp(&self, index: usize) -> u32 {
        self.0.get(index).copied().unwrap_or(0)
    }

    pub(crate) fn with_exp(&self, index: usize, e: u32) -> Self {
        let mut exps = self.0.clone();
        if exps.len() <= index {
            exps.resize(index + 1, 0);
        }
        exps[index] = e;
        Monomial::from_exponents(exps)
    }

    pub(crate) fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub(crate) fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut exps = long.0.clone();
        for (e, s) in exps.iter_mut().zip(short.0.iter()) {
            *e += s;
        }
        Monomial(exps)
    }

    pub(crate) fn divides(&self, other: &Monomial) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees `self.divides(other)`.
    pub(crate) fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut exps = other.0.clone();
        for (e, s) in exps.iter_mut().zip(self.0.iter()) {
            *e -= s;
        }
        Monomial::from_exponents(exps)
    }
}

pub(crate) type Terms = BTreeMap<Monomial, BigRational>;

pub(crate) fn add_term(acc: &mut Terms, mono: Monomial, coeff: BigRational) {
    if coeff.is_zero() {
        return;
    }
    match acc.entry(mono) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = o.get() + coeff;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

pub(crate) fn add_terms(a: &Terms, b: &Terms) -> Terms {
    let mut out = a.clone();
    for (m, c) in b {
        add_term(&mut out, m.clone(), c.clone());
    }
    out
}

pub(crate) fn neg_terms(a: &Terms) -> Terms {
    a.iter().map(|(m, c)| (m.clone(), -c)).collect()
}

pub(crate) fn scale_terms(a: &Terms, k: &BigRational) -> Terms {
    if k.is_zero() {
        return Terms::new();
    }
    a.iter().map(|(m, c)| (m.clone(), c * k)).collect()
}

pub(crate) fn mul_terms(a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            add_term(&mut out, ma.mul(mb), ca * cb);
        }
    }
    out
}

/// Exact division `f / d` in the plain polynomial ring.
///
/// `{d}` is a Gröbner basis of the ideal it generates, so the remainder of
/// single-divisor division vanishes iff `d | f`.
pub(crate) fn divide_exact(f: &Terms, d: &Terms) -> Option<Terms> {
    let (lead_m, lead_c) = d.last_key_value()?;
    let mut rem = f.clone();
    let mut quot = Terms::new();
    while let Some((m, c)) = rem.last_key_value() {
        if !lead_m.divides(m) {
            return None;
        }
        let qm = lead_m.quotient_of(m);
        let qc = c / lead_c;
        for (dm, dc) in d {
            add_term(&mut rem, dm.mul(&qm), -(dc * &qc));
        }
        add_term(&mut quot, qm, qc);
    }
    Some(quot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn trimmed_monomials_compare_as_padded() {
        let a = Monomial::from_exponents(vec![1, 0, 0]);
        assert_eq!(a, Monomial::var(0));
        assert!(Monomial::var(1) < Monomial::var(0));
        assert!(Monomial::one() < Monomial::var(2));
    }

    #[test]
    fn exact_division_detects_divisibility() {
        // (x + y)(x - y) / (x + y)
        let x = Monomial::var(0);
        let y = Monomial::var(1);
        let mut d = Terms::new();
        add_term(&mut d, x.clone(), q(1));
        add_term(&mut d, y.clone(), q(1));
        let mut e = Terms::new();
        add_term(&mut e, x.clone(), q(1));
        add_term(&mut e, y.clone(), q(-1));
        let f = mul_terms(&d, &e);
        assert_eq!(divide_exact(&f, &d), Some(e.clone()));
        let g = add_terms(&f, &[(Monomial::one(), q(1))].into_iter().collect());
        assert_eq!(divide_exact(&g, &d), None);
    }
}
