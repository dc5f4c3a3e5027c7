use crate::linalg::Vector;
use crate::Field;

use super::GeometryError;

/// A Lie algebra given by its structure constants on a fixed frame.
///
/// `bracket(i, j)` is the coordinate vector of `[e_i, e_j]`; the table is
/// antisymmetric by construction.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebraFrame<F: Field> {
    names: Vec<String>,
    table: Vec<Vector<F>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct JacobiFailure<F: Field> {
    pub indices: (usize, usize, usize),
    /// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`
    pub cyclic_sum: Vector<F>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct JacobiReport<F: Field> {
    pub failures: Vec<JacobiFailure<F>>,
}

impl<F: Field> JacobiReport<F> {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl<F: Field> LieAlgebraFrame<F> {
    /// Builds the frame from brackets `[e_i, e_j]` with `i < j`; unlisted
    /// pairs bracket to zero.
    pub fn new<I>(names: Vec<String>, brackets: I) -> Result<Self, GeometryError>
    where
        I: IntoIterator<Item = ((usize, usize), Vector<F>)>,
    {
        let n = names.len();
        let mut table = vec![Vector::zeros(n); n * n];
        let mut seen = vec![false; n * n];
        for ((i, j), v) in brackets {
            if i >= j || j >= n {
                return Err(GeometryError::BracketIndex { i, j, dim: n });
            }
            if v.len() != n {
                return Err(GeometryError::Dimension(format!(
                    "bracket [{i},{j}] has {} coordinates, expected {n}",
                    v.len()
                )));
            }
            if std::mem::replace(&mut seen[i * n + j], true) {
                return Err(GeometryError::DuplicateBracket { i, j });
            }
            table[j * n + i] = -&v;
            table[i * n + j] = v;
        }
        Ok(LieAlgebraFrame { names, table })
    }

    pub fn abelian(names: Vec<String>) -> Self {
        let n = names.len();
        LieAlgebraFrame { names, table: vec![Vector::zeros(n); n * n] }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// `[e_i, e_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &Vector<F> {
        &self.table[i * self.dim() + j]
    }

    /// Bracket of two constant-coefficient vectors.
    pub fn bracket(&self, u: &Vector<F>, v: &Vector<F>) -> Vector<F> {
        let n = self.dim();
        let mut out = Vector::zeros(n);
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if i == j || v[j].is_zero() {
                    continue;
                }
                let coeff = u[i].clone() * v[j].clone();
                out = &out + &self.structure(i, j).scale(&coeff);
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| v.is_zero())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> LieAlgebraFrame<G> {
        LieAlgebraFrame {
            names: self.names.clone(),
            table: self.table.iter().map(|v| v.map(&f)).collect(),
        }
    }
}

/// Checks the cyclic Jacobi sum on every triple `i < j < k`.
pub fn check_jacobi<F: Field>(frame: &LieAlgebraFrame<F>) -> JacobiReport<F> {
    let n = frame.dim();
    let mut failures = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let e = |q| Vector::basis(n, q);
                let t1 = frame.bracket(frame.structure(i, j), &e(k));
                let t2 = frame.bracket(frame.structure(j, k), &e(i));
                let t3 = frame.bracket(frame.structure(k, i), &e(j));
                let sum = &(&t1 + &t2) + &t3;
                if !sum.is_zero() {
                    failures.push(JacobiFailure { indices: (i, j, k), cyclic_sum: sum });
                }
            }
        }
    }
    JacobiReport { failures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("e{i}")).collect()
    }

    fn v(xs: &[i64]) -> Vector<Q> {
        Vector::new(xs.iter().map(|x| Q::from_int(*x)).collect())
    }

    #[test]
    fn abelian_passes() {
        assert!(check_jacobi(&LieAlgebraFrame::<Q>::abelian(names(4))).passed());
    }

    #[test]
    fn hand_expanded_failure() {
        // [e1,e2]=e1, [e1,e3]=e2, [e2,e3]=e3:
        //   [[e1,e2],e3] = e2, [[e2,e3],e1] = -e2, [[e3,e1],e2] = [-e2,e2] = 0
        let ok = LieAlgebraFrame::new(
            names(3),
            [((0, 1), v(&[1, 0, 0])), ((0, 2), v(&[0, 1, 0])), ((1, 2), v(&[0, 0, 1]))],
        )
        .unwrap();
        assert!(check_jacobi(&ok).passed());
        // [e1,e2]=e3 instead:
        //   [[e1,e2],e3] = 0, [[e2,e3],e1] = -e2, [[e3,e1],e2] = 0
        let bad = LieAlgebraFrame::new(
            names(3),
            [((0, 1), v(&[0, 0, 1])), ((0, 2), v(&[0, 1, 0])), ((1, 2), v(&[0, 0, 1]))],
        )
        .unwrap();
        let report = check_jacobi(&bad);
        assert_eq!(report.failures.len(), 1);
        assert_eq!(report.failures[0].indices, (0, 1, 2));
        assert_eq!(report.failures[0].cyclic_sum, v(&[0, -1, 0]));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            LieAlgebraFrame::new(names(2), [((1, 0), v(&[1, 0]))]),
            Err(GeometryError::BracketIndex { .. })
        ));
        assert!(matches!(
            LieAlgebraFrame::new(names(2), [((0, 1), v(&[1]))]),
            Err(GeometryError::Dimension(_))
        ));
        assert!(matches!(
            LieAlgebraFrame::new(names(2), [((0, 1), v(&[1, 0])), ((0, 1), v(&[0, 1]))]),
            Err(GeometryError::DuplicateBracket { .. })
        ));
    }

    #[test]
    fn bracket_is_bilinear_and_antisymmetric() {
        let f = LieAlgebraFrame::new(names(3), [((0, 1), v(&[0, 0, 1]))]).unwrap();
        assert_eq!(f.structure(1, 0), &v(&[0, 0, -1]));
        assert_eq!(f.bracket(&v(&[2, 0, 0]), &v(&[1, 3, 0])), v(&[0, 0, 6]));
    }
}
