use num_rational::BigRational;

use crate::linalg::{Tensor4, Vector};
use crate::Field;

use super::{GeometryError, LieAlgebraFrame, NordenMetric};

/// Christoffel table: `covariant(i, j)` is `∇_{e_i} e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConnectionTable<F: Field> {
    n: usize,
    gamma: Vec<Vector<F>>,
}

impl<F: Field> ConnectionTable<F> {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn covariant(&self, i: usize, j: usize) -> &Vector<F> {
        &self.gamma[i * self.n + j]
    }

    /// `∇_X Y` for constant-coefficient `X`, `Y`.
    pub fn apply(&self, x: &Vector<F>, y: &Vector<F>) -> Vector<F> {
        let mut out = Vector::zeros(self.n);
        for i in 0..self.n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.n {
                if y[j].is_zero() {
                    continue;
                }
                out = &out + &self.covariant(i, j).scale(&(x[i].clone() * y[j].clone()));
            }
        }
        out
    }

    /// Pairs `(i, j)` where `∇_i e_j - ∇_j e_i ≠ [e_i, e_j]`.
    pub fn torsion_defects(&self, frame: &LieAlgebraFrame<F>) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let t = &(self.covariant(i, j) - self.covariant(j, i)) - frame.structure(i, j);
                if !t.is_zero() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Triples `(i, j, k)` where `g(∇_i e_j, e_k) + g(e_j, ∇_i e_k) ≠ 0`.
    pub fn metric_defects(&self, metric: &NordenMetric<F>) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            let lowered: Vec<_> = (0..self.n).map(|j| metric.lower(self.covariant(i, j))).collect();
            for (j, row) in lowered.iter().enumerate() {
                for k in j..self.n {
                    if !(row[k].clone() + lowered[k][j].clone()).is_zero() {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }
}

/// Levi-Civita connection of a constant metric on a Lie algebra frame:
///
/// `2 g(∇_i e_j, e_k) = g([e_i,e_j],e_k) + g([e_k,e_i],e_j) + g([e_k,e_j],e_i)`
pub fn koszul_connection<F: Field>(
    frame: &LieAlgebraFrame<F>,
    metric: &NordenMetric<F>,
) -> Result<ConnectionTable<F>, GeometryError> {
    let n = frame.dim();
    if metric.dim() != n {
        return Err(GeometryError::Dimension(format!(
            "frame has dimension {n}, metric {}",
            metric.dim()
        )));
    }
    let half = F::from_rational(BigRational::new(1.into(), 2.into()));
    // lowered[i*n+j][k] = g([e_i,e_j], e_k)
    let lowered: Vec<Vector<F>> =
        (0..n * n).map(|ij| metric.lower(frame.structure(ij / n, ij % n))).collect();
    let mut gamma = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let low = Vector::new(
                (0..n)
                    .map(|k| {
                        half.clone()
                            * (lowered[i * n + j][k].clone()
                                + lowered[k * n + i][j].clone()
                                + lowered[k * n + j][i].clone())
                    })
                    .collect(),
            );
            gamma.push(metric.raise(&low));
        }
    }
    Ok(ConnectionTable { n, gamma })
}

/// `R(e_i,e_j)e_k = ∇_i ∇_j e_k - ∇_j ∇_i e_k - ∇_{[e_i,e_j]} e_k` and its
/// lowered form `R(i,j,k,l) = g(R(e_i,e_j)e_k, e_l)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Curvature<F: Field> {
    n: usize,
    endo: Vec<Vector<F>>,
    lowered: Tensor4<F>,
}

impl<F: Field> Curvature<F> {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// `R(e_i,e_j)e_k`.
    pub fn endomorphism(&self, i: usize, j: usize, k: usize) -> &Vector<F> {
        &self.endo[(i * self.n + j) * self.n + k]
    }

    pub fn lowered(&self) -> &Tensor4<F> {
        &self.lowered
    }

    /// Index tuples violating `R(i,j,k,l) = -R(j,i,k,l)`.
    pub fn pair_antisymmetry_defects(&self) -> Vec<[usize; 4]> {
        self.defects(|r, [i, j, k, l]| r[(i, j, k, l)].clone() + r[(j, i, k, l)].clone())
    }

    /// Index tuples violating `R(i,j,k,l) = -R(i,j,l,k)`.
    pub fn metric_antisymmetry_defects(&self) -> Vec<[usize; 4]> {
        self.defects(|r, [i, j, k, l]| r[(i, j, k, l)].clone() + r[(i, j, l, k)].clone())
    }

    /// Index tuples violating `R(i,j,k,l) + R(j,k,i,l) + R(k,i,j,l) = 0`.
    pub fn bianchi_defects(&self) -> Vec<[usize; 4]> {
        self.defects(|r, [i, j, k, l]| {
            r[(i, j, k, l)].clone() + r[(j, k, i, l)].clone() + r[(k, i, j, l)].clone()
        })
    }

    fn defects(&self, f: impl Fn(&Tensor4<F>, [usize; 4]) -> F) -> Vec<[usize; 4]> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        if !f(&self.lowered, [i, j, k, l]).is_zero() {
                            out.push([i, j, k, l]);
                        }
                    }
                }
            }
        }
        out
    }
}

pub fn curvature<F: Field>(
    conn: &ConnectionTable<F>,
    frame: &LieAlgebraFrame<F>,
    metric: &NordenMetric<F>,
) -> Curvature<F> {
    let n = conn.dim();
    let mut endo = Vec::with_capacity(n * n * n);
    let mut lowered = Tensor4::zeros(n);
    for i in 0..n {
        let ei = Vector::basis(n, i);
        for j in 0..n {
            let ej = Vector::basis(n, j);
            let bracket = frame.structure(i, j);
            for k in 0..n {
                let a = conn.apply(&ei, conn.covariant(j, k));
                let b = conn.apply(&ej, conn.covariant(i, k));
                let c = conn.apply(bracket, &Vector::basis(n, k));
                let r = &(&a - &b) - &c;
                let low = metric.lower(&r);
                for l in 0..n {
                    lowered[(i, j, k, l)] = low[l].clone();
                }
                endo.push(r);
            }
        }
    }
    Curvature { n, endo, lowered }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;

    type Q = BigRational;

    fn q(a: i64, b: i64) -> Q {
        Q::new(a.into(), b.into())
    }

    fn vq(xs: &[Q]) -> Vector<Q> {
        Vector::new(xs.to_vec())
    }

    fn heisenberg() -> (LieAlgebraFrame<Q>, NordenMetric<Q>) {
        let names = vec!["e1".into(), "e2".into(), "e3".into()];
        let f = LieAlgebraFrame::new(names, [((0, 1), Vector::basis(3, 2))]).unwrap();
        (f, NordenMetric::new(Matrix::identity(3)).unwrap())
    }

    #[test]
    fn heisenberg_christoffels() {
        // By hand from the Koszul formula with [e1,e2] = e3 orthonormal.
        let (f, g) = heisenberg();
        let c = koszul_connection(&f, &g).unwrap();
        let z = q(0, 1);
        let h = q(1, 2);
        let mh = q(-1, 2);
        let expected = [
            [[&z, &z, &z], [&z, &z, &h], [&z, &mh, &z]],
            [[&z, &z, &mh], [&z, &z, &z], [&h, &z, &z]],
            [[&z, &mh, &z], [&h, &z, &z], [&z, &z, &z]],
        ];
        for (i, row) in expected.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                let e = vq(&cell.iter().map(|x| (*x).clone()).collect::<Vec<_>>());
                assert_eq!(c.covariant(i, j), &e, "nabla_{i} e_{j}");
            }
        }
        assert!(c.torsion_defects(&f).is_empty());
        assert!(c.metric_defects(&g).is_empty());
    }

    #[test]
    fn heisenberg_curvature() {
        let (f, g) = heisenberg();
        let c = koszul_connection(&f, &g).unwrap();
        let r = curvature(&c, &f, &g);
        // R(e1,e2)e2 = -∇_2 (e3/2) - ∇_{e3} e2 = -e1/4 - e1/2
        assert_eq!(r.endomorphism(0, 1, 1), &vq(&[q(-3, 4), q(0, 1), q(0, 1)]));
        assert_eq!(r.lowered()[(0, 1, 1, 0)], q(-3, 4));
        assert_eq!(r.lowered()[(0, 2, 2, 0)], q(1, 4));
        assert!(r.pair_antisymmetry_defects().is_empty());
        assert!(r.metric_antisymmetry_defects().is_empty());
        assert!(r.bianchi_defects().is_empty());
    }

    #[test]
    fn abelian_is_flat() {
        let f = LieAlgebraFrame::<Q>::abelian(vec!["a".into(), "b".into()]);
        let g = NordenMetric::new(Matrix::diagonal(vec![q(1, 1), q(-3, 1)])).unwrap();
        let c = koszul_connection(&f, &g).unwrap();
        assert!((0..2).all(|i| (0..2).all(|j| c.covariant(i, j).is_zero())));
        assert!(curvature(&c, &f, &g).lowered().is_zero());
    }
}
