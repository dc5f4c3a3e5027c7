use crate::geometry::{AlmostContactData, AmbientSpace, LieAlgebraFrame, NordenMetric};
use crate::linalg::Matrix;
use crate::Field;

use super::{Decomposition, DecompositionCase, NormalSection, SubmanifoldError};

/// Choice of `(λ, μ)` in the non-orthogonal construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `λ₁ = ε/(k(k+1))`, `μ₁ = ε(1+k²+k)/(k(k+1))`.
    Lambda1,
    /// `λ₂ = ε/(k(k-1))`, `μ₂ = ε(1+k²-k)/(k(k-1))`.
    Lambda2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchTag {
    KGeneralLambda1,
    KGeneralLambda2,
    KEqPlus1,
    KEqMinus1,
    Orthogonal,
}

#[derive(Clone, Debug, PartialEq)]
pub enum InducedParameters<F: Field> {
    NonOrthogonal { lambda: F, mu: F, epsilon: i64, k: F },
    Orthogonal { t0: F, t2: F },
}

#[derive(Clone, Debug, PartialEq)]
pub struct InducedStructure<F: Field> {
    /// `(φ, ξ, η)` in tangent coordinates.
    pub structure: AlmostContactData<F>,
    pub parameters: InducedParameters<F>,
    pub branch: BranchTag,
    /// Assumptions recorded but not verified.
    pub notes: Vec<String>,
}

/// `ξ = -(b/k)ξ₁ + (a/k)ξ₂`, `η = -(b/k)η¹ + (a/k)η²`, `φ = λφ³ + μφ`.
///
/// `k` must satisfy `k² = a² - b²` exactly; its sign is the caller's choice.
pub fn induce_nonorthogonal<F: Field>(
    dec: &Decomposition<F>,
    k: &F,
    branch: Branch,
    epsilon: i64,
) -> Result<InducedStructure<F>, SubmanifoldError> {
    if dec.case != DecompositionCase::NonOrthogonal {
        return Err(SubmanifoldError::WrongCase { expected: "non-orthogonal" });
    }
    if epsilon != 1 && epsilon != -1 {
        return Err(SubmanifoldError::BadEpsilon(epsilon));
    }
    let (a, b) = (&dec.a, &dec.b);
    if a.is_zero() {
        return Err(SubmanifoldError::ZeroA);
    }
    let k2 = k.clone() * k.clone();
    let expected = a.clone() * a.clone() - b.clone() * b.clone();
    if k2 != expected {
        return Err(SubmanifoldError::KMismatch {
            k_squared: k2.to_string(),
            expected: expected.to_string(),
        });
    }
    let one = F::one();
    let (shift, name, sign) = match branch {
        Branch::Lambda1 => (one.clone(), "lambda1", '+'),
        Branch::Lambda2 => (-one.clone(), "lambda2", '-'),
    };
    let denom = k.clone() * (k.clone() + shift.clone());
    let inv = denom.inv().ok_or_else(|| SubmanifoldError::SingularBranch {
        branch: name,
        k: k.to_string(),
        sign,
    })?;
    let eps = F::from_int(epsilon);
    let lambda = eps.clone() * inv.clone();
    let mu = eps * (one.clone() + k2 + shift * k.clone()) * inv;
    let k_inv = k.inv().expect("k^2 = a^2 - b^2 with k(k +/- 1) invertible");
    let cb = -(b.clone() * k_inv.clone());
    let ca = a.clone() * k_inv;
    let xi = &dec.xi1.scale(&cb) + &dec.xi2.scale(&ca);
    let eta = &dec.eta1.scale(&cb) + &dec.eta2.scale(&ca);
    let phi3 = dec.phi.pow(3);
    let phi = &phi3.scale(&lambda) + &dec.phi.scale(&mu);
    let tag = if *k == one {
        BranchTag::KEqPlus1
    } else if *k == -one {
        BranchTag::KEqMinus1
    } else if branch == Branch::Lambda1 {
        BranchTag::KGeneralLambda1
    } else {
        BranchTag::KGeneralLambda2
    };
    let notes = vec!["|a| > b is assumed, not checked".to_string()];
    Ok(InducedStructure {
        structure: AlmostContactData::new(phi, xi, eta)?,
        parameters: InducedParameters::NonOrthogonal { lambda, mu, epsilon, k: k.clone() },
        branch: tag,
        notes,
    })
}

/// `ξ = t₀ξ₀ - t₂ξ₂`, `η = t₀η⁰ - t₂η²`,
/// `φX = φX + t₀(η¹(X)ξ₂ + η²(X)ξ₁) + t₂(η⁰(X)ξ₁ + η¹(X)ξ₀)`,
/// after checking `t₀² + t₂² = 1`.
pub fn induce_orthogonal<F: Field>(
    dec: &Decomposition<F>,
    t0: &F,
    t2: &F,
) -> Result<InducedStructure<F>, SubmanifoldError> {
    let r = t0.clone() * t0.clone() + t2.clone() * t2.clone();
    if !r.is_one() {
        return Err(SubmanifoldError::OffCircle(r.to_string()));
    }
    induce_orthogonal_unchecked(dec, t0, t2)
}

/// [`induce_orthogonal`] without the circle condition, for exhibiting what
/// breaks off the circle.
pub fn induce_orthogonal_unchecked<F: Field>(
    dec: &Decomposition<F>,
    t0: &F,
    t2: &F,
) -> Result<InducedStructure<F>, SubmanifoldError> {
    if dec.case != DecompositionCase::Orthogonal {
        return Err(SubmanifoldError::WrongCase { expected: "orthogonal" });
    }
    let xi = &dec.xi0.scale(t0) - &dec.xi2.scale(t2);
    let eta = &dec.eta0.scale(t0) - &dec.eta2.scale(t2);
    let outer = Matrix::outer;
    let p0 = &outer(&dec.xi2, &dec.eta1) + &outer(&dec.xi1, &dec.eta2);
    let p2 = &outer(&dec.xi1, &dec.eta0) + &outer(&dec.xi0, &dec.eta1);
    let phi = &(&dec.phi + &p0.scale(t0)) + &p2.scale(t2);
    Ok(InducedStructure {
        structure: AlmostContactData::new(phi, xi, eta)?,
        parameters: InducedParameters::Orthogonal { t0: t0.clone(), t2: t2.clone() },
        branch: BranchTag::Orthogonal,
        notes: Vec::new(),
    })
}

/// The tangent space as a Lie algebra in its own spanning vectors. Fails
/// unless the tangent space is closed under the bracket.
pub fn restricted_frame<F: Field>(
    space: &AmbientSpace<F>,
    sec: &NormalSection<F>,
    names: Vec<String>,
) -> Result<LieAlgebraFrame<F>, SubmanifoldError> {
    sec.check_shape(space.dim())?;
    let m = sec.tangent_dim();
    if names.len() != m {
        return Err(SubmanifoldError::Dimension(format!(
            "{} names for {m} tangent vectors",
            names.len()
        )));
    }
    let split = sec.splitter()?;
    let mut brackets = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let br = space.frame.bracket(&sec.tangent[i], &sec.tangent[j]);
            let (tan, c1, c2) = split.split(&br);
            if !c1.is_zero() || !c2.is_zero() {
                return Err(SubmanifoldError::NotSubalgebra { i, j });
            }
            if !tan.is_zero() {
                brackets.push(((i, j), tan));
            }
        }
    }
    Ok(LieAlgebraFrame::new(names, brackets)?)
}

/// Packages the tangent space as a Lie algebra with the restricted metric
/// and the induced structure.
pub fn induced_geometry<F: Field>(
    space: &AmbientSpace<F>,
    dec: &Decomposition<F>,
    ind: &InducedStructure<F>,
    names: Vec<String>,
) -> Result<AmbientSpace<F>, SubmanifoldError> {
    let frame = restricted_frame(space, &dec.section, names)?;
    let metric = NordenMetric::new(dec.gram.clone())?;
    Ok(AmbientSpace::new(frame, metric, ind.structure.clone())?)
}
