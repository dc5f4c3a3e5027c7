use num_rational::BigRational;

use crate::linalg::{Matrix, Tensor3, Vector};
use crate::Field;

use super::{ConnectionTable, LieAlgebraFrame, NordenMetric};

/// `F(e_i,e_j,e_k) = g(∇_i(φ e_j) - φ(∇_i e_j), e_k)` for a constant `φ`.
pub fn f_tensor_from_connection<F: Field>(
    conn: &ConnectionTable<F>,
    metric: &NordenMetric<F>,
    phi: &Matrix<F>,
) -> Tensor3<F> {
    let n = conn.dim();
    let mut out = Tensor3::zeros(n);
    for i in 0..n {
        let ei = Vector::basis(n, i);
        for j in 0..n {
            let d = &conn.apply(&ei, &phi.col(j)) - &phi.mul_vec(conn.covariant(i, j));
            let low = metric.lower(&d);
            for k in 0..n {
                out[(i, j, k)] = low[k].clone();
            }
        }
    }
    out
}

/// `F` from brackets alone:
///
/// ```text
/// 2F(X,Y,Z) = g([X,φY] - φ[X,Y], Z)
///           + g(φ[Z,X] - [φZ,X], Y)
///           + g([Z,φY] - [φZ,Y], X)
/// ```
///
/// This agrees with [`f_tensor_from_connection`] when `φ` is self-adjoint
/// for `g`, which every Norden structure satisfies.
pub fn f_tensor_lie<F: Field>(
    frame: &LieAlgebraFrame<F>,
    metric: &NordenMetric<F>,
    phi: &Matrix<F>,
) -> Tensor3<F> {
    let n = frame.dim();
    let half = F::from_rational(BigRational::new(1.into(), 2.into()));
    let e: Vec<_> = (0..n).map(|i| Vector::basis(n, i)).collect();
    let pe: Vec<_> = (0..n).map(|i| phi.col(i)).collect();
    let br = |u: &Vector<F>, v: &Vector<F>| frame.bracket(u, v);
    Tensor3::from_fn(n, |i, j, k| {
        let t1 = &br(&e[i], &pe[j]) - &phi.mul_vec(frame.structure(i, j));
        let t2 = &phi.mul_vec(frame.structure(k, i)) - &br(&pe[k], &e[i]);
        let t3 = &br(&e[k], &pe[j]) - &br(&pe[k], &e[j]);
        half.clone()
            * (metric.apply(&t1, &e[k]) + metric.apply(&t2, &e[j]) + metric.apply(&t3, &e[i]))
    })
}

/// Class `F₀`: `F` vanishes identically.
pub fn is_class_f0<F: Field>(f: &Tensor3<F>) -> bool {
    f.is_zero()
}

/// Components of a covariant 3-tensor in the frame `e'_i = Σ_k p[k][i] e_k`.
pub fn pull_back<F: Field>(f: &Tensor3<F>, p: &Matrix<F>) -> Tensor3<F> {
    let cols: Vec<_> = (0..p.cols()).map(|i| p.col(i)).collect();
    Tensor3::from_fn(p.cols(), |i, j, k| f.eval(&cols[i], &cols[j], &cols[k]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::koszul_connection;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    #[test]
    fn abelian_vanishes() {
        let f = LieAlgebraFrame::<Q>::abelian(vec!["a".into(), "b".into(), "c".into()]);
        let g = NordenMetric::new(Matrix::identity(3)).unwrap();
        let mut phi = Matrix::zeros(3, 3);
        phi[(0, 1)] = q(2);
        phi[(2, 2)] = q(-1);
        let c = koszul_connection(&f, &g).unwrap();
        assert!(is_class_f0(&f_tensor_from_connection(&c, &g, &phi)));
        assert!(is_class_f0(&f_tensor_lie(&f, &g, &phi)));
    }

    #[test]
    fn routes_agree_for_self_adjoint_phi() {
        // [e1,e2] = e3 + e1, [e1,e3] = e2, g = diag(1,-1,1), φ = G⁻¹S
        let names = vec!["e1".into(), "e2".into(), "e3".into()];
        let f = LieAlgebraFrame::new(
            names,
            [
                ((0, 1), Vector::new(vec![q(1), q(0), q(1)])),
                ((0, 2), Vector::new(vec![q(0), q(1), q(0)])),
            ],
        )
        .unwrap();
        let g = NordenMetric::new(Matrix::diagonal(vec![q(1), q(-1), q(1)])).unwrap();
        let s = Matrix::from_rows(vec![
            vec![q(1), q(2), q(0)],
            vec![q(2), q(0), q(-3)],
            vec![q(0), q(-3), q(5)],
        ])
        .unwrap();
        let phi = g.inverse() * &s;
        let c = koszul_connection(&f, &g).unwrap();
        let lie = f_tensor_lie(&f, &g, &phi);
        assert_eq!(f_tensor_from_connection(&c, &g, &phi), lie);
        assert!(!lie.is_zero());
    }
}
