#![allow(dead_code)]

use acn_core::geometry::{AlmostContactData, AmbientSpace, LieAlgebraFrame, NordenMetric};
use acn_core::{Matrix, Vector};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn mat(rows: &[Vec<i64>]) -> Matrix<Q> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
}

pub fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

/// `R ⋉_D R^{n-1}`: `[e1, e_{i}] = D e_{i}` for `i > 1`, all other brackets
/// zero. Satisfies Jacobi for every `D`.
pub fn semidirect(d: &Matrix<Q>) -> LieAlgebraFrame<Q> {
    let n = d.rows() + 1;
    let mut brackets = Vec::new();
    for j in 1..n {
        let mut v = vec![Q::zero()];
        v.extend(d.col(j - 1).iter().cloned());
        let v = Vector::new(v);
        if !v.is_zero() {
            brackets.push(((0, j), v));
        }
    }
    LieAlgebraFrame::new(names(n), brackets).unwrap()
}

/// The same Lie algebra in the basis given by the columns of `p`.
pub fn rebase(frame: &LieAlgebraFrame<Q>, p: &Matrix<Q>) -> LieAlgebraFrame<Q> {
    let inv = p.inverse().unwrap();
    let n = frame.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let v = inv.mul_vec(&frame.bracket(&p.col(i), &p.col(j)));
            if !v.is_zero() {
                brackets.push(((i, j), v));
            }
        }
    }
    LieAlgebraFrame::new(names(n), brackets).unwrap()
}

pub fn diag_metric(signs: &[bool]) -> NordenMetric<Q> {
    NordenMetric::new(Matrix::diagonal(signs.iter().map(|&s| if s { q(1) } else { q(-1) }).collect())).unwrap()
}

/// Flat structure on `R^{2k+1}`: `φe_i = e_{k+i}`, `φe_{k+i} = -e_i`,
/// `ξ = e_{2k+1}`, metric `diag(1..1, -1..-1, 1)`.
pub fn standard_structure(k: usize) -> (NordenMetric<Q>, AlmostContactData<Q>) {
    let n = 2 * k + 1;
    let mut g = Matrix::identity(n);
    let mut phi = Matrix::zeros(n, n);
    for i in 0..k {
        g[(k + i, k + i)] = -q(1);
        phi[(k + i, i)] = Q::one();
        phi[(i, k + i)] = -Q::one();
    }
    let xi = Vector::basis(n, n - 1);
    (NordenMetric::new(g).unwrap(), AlmostContactData::new(phi, xi.clone(), xi).unwrap())
}

pub fn standard_space(frame: LieAlgebraFrame<Q>) -> AmbientSpace<Q> {
    let (g, acd) = standard_structure(frame.dim() / 2);
    AmbientSpace::new(frame, g, acd).unwrap()
}

/// `G⁻¹S` for symmetric `S`: self-adjoint for `g`.
pub fn self_adjoint(g: &NordenMetric<Q>, s: &Matrix<Q>) -> Matrix<Q> {
    g.inverse() * s
}

pub fn symmetric_from(entries: &[i64], n: usize) -> Matrix<Q> {
    let mut s = Matrix::zeros(n, n);
    let mut it = entries.iter().cycle();
    for i in 0..n {
        for j in i..n {
            let v = q(*it.next().unwrap());
            s[(i, j)] = v.clone();
            s[(j, i)] = v;
        }
    }
    s
}

pub fn square_from(entries: &[i64], n: usize) -> Matrix<Q> {
    let mut m = Matrix::zeros(n, n);
    let mut it = entries.iter().cycle();
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = q(*it.next().unwrap());
        }
    }
    m
}
