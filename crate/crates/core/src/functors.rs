//! Classical strict polynomial functors evaluated on free modules and integer
//! matrices, and presentations of the cokernel functors `Q^s` and `C_{s,d+1}`.
//!
//! Basis conventions (fixed crate-wide):
//! - `Γ^d` and `S^d`: multi-indices of weight `d` in the monomial order of [`crate::divpow`].
//! - `Λ^d`: strictly decreasing index tuples `i₁ > … > i_d`, ordered by their
//!   indicator multi-index, i.e. `(1,0), (2,0), (2,1), …`.
//! - `⊗^d`: words in lexicographic order.
//! - tensor products: lexicographic product order of the factor bases.
//!
//! A matrix `A` with `n` rows and `m` columns is the map `ℤ^m → ℤ^n`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::divpow::{gamma_basis, multi_indices, multiplication_columns, MultiIndex, Tensor};
use crate::error::{Error, Result};
use crate::padic::{binomial, compositions};
use crate::zlinalg::{FPGroup, IntMatrix, SparseMatrix, SparseTriplets};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassicalFunctor {
    DividedPower(usize),
    Symmetric(usize),
    Exterior(usize),
    TensorPower(usize),
    TensorProduct(Vec<ClassicalFunctor>),
}

impl ClassicalFunctor {
    pub fn weight(&self) -> usize {
        match self {
            ClassicalFunctor::DividedPower(d)
            | ClassicalFunctor::Symmetric(d)
            | ClassicalFunctor::Exterior(d)
            | ClassicalFunctor::TensorPower(d) => *d,
            ClassicalFunctor::TensorProduct(fs) => fs.iter().map(ClassicalFunctor::weight).sum(),
        }
    }

    /// Weights of the basis vectors of `F(ℤⁿ)`, in basis order.
    pub fn basis_weights(&self, n: usize) -> Result<Vec<MultiIndex>> {
        check_rank(n)?;
        Ok(match self {
            ClassicalFunctor::DividedPower(d) | ClassicalFunctor::Symmetric(d) => multi_indices(n, *d),
            ClassicalFunctor::Exterior(d) => exterior_basis(n, *d).iter().map(|s| indicator(n, s)).collect(),
            ClassicalFunctor::TensorPower(d) => words(n, *d).iter().map(|w| MultiIndex::of_word(n, w)).collect(),
            ClassicalFunctor::TensorProduct(fs) => {
                let mut acc = vec![MultiIndex::zero(n)];
                for f in fs {
                    let next = f.basis_weights(n)?;
                    acc = acc.iter().flat_map(|a| next.iter().map(move |b| a.add(b))).collect();
                }
                acc
            }
        })
    }
}

impl fmt::Display for ClassicalFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassicalFunctor::DividedPower(d) => write!(f, "Gamma^{d}"),
            ClassicalFunctor::Symmetric(d) => write!(f, "S^{d}"),
            ClassicalFunctor::Exterior(d) => write!(f, "Lambda^{d}"),
            ClassicalFunctor::TensorPower(d) => write!(f, "T^{d}"),
            ClassicalFunctor::TensorProduct(fs) => {
                let parts: Vec<String> = fs.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(" (x) "))
            }
        }
    }
}

fn check_rank(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("rank must be at least 1".into()));
    }
    Ok(())
}

/// Rank of `F(ℤⁿ)`; `n = 0` gives the rank of `F(0)`.
pub fn eval_dim(f: &ClassicalFunctor, n: usize) -> BigUint {
    match f {
        ClassicalFunctor::DividedPower(d) | ClassicalFunctor::Symmetric(d) => {
            if n == 0 {
                BigUint::from(u8::from(*d == 0))
            } else {
                binomial(n + d - 1, *d)
            }
        }
        ClassicalFunctor::Exterior(d) => binomial(n, *d),
        ClassicalFunctor::TensorPower(d) => BigUint::from(n).pow(*d as u32),
        ClassicalFunctor::TensorProduct(fs) => fs.iter().map(|x| eval_dim(x, n)).product(),
    }
}

/// All words of length `d` over `0..n`, lexicographically.
fn words(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..n).map(move |letter| {
                    let mut w = w.clone();
                    w.push(letter);
                    w
                })
            })
            .collect();
    }
    out
}

/// `d`-subsets of `0..n` as ascending lists, ordered so that their indicator
/// multi-indices ascend in the monomial order.
fn exterior_basis(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = multi_indices(n, d)
        .into_iter()
        .filter(|m| m.entries().iter().all(|&x| x <= 1))
        .map(|m| m.entries().iter().enumerate().filter(|(_, &x)| x == 1).map(|(j, _)| j).collect())
        .collect();
    if n == 0 && d == 0 {
        out.push(Vec::new());
    }
    out
}

fn indicator(n: usize, subset: &[usize]) -> MultiIndex {
    MultiIndex::of_word(n, subset)
}

fn word_coefficient(a: &IntMatrix, target: &[usize], source: &[usize]) -> BigInt {
    target.iter().zip(source).map(|(&i, &j)| a[(i, j)].clone()).product()
}

/// Matrix of `F(A)` in the fixed bases.
pub fn eval_on_map(f: &ClassicalFunctor, a: &IntMatrix) -> Result<IntMatrix> {
    let (n, m) = (a.rows(), a.cols());
    check_rank(n).and(check_rank(m)).map_err(|_| {
        Error::DimensionMismatch(format!("functors are evaluated on maps between nonzero free modules, got {n}x{m}"))
    })?;
    Ok(match f {
        ClassicalFunctor::TensorPower(d) => {
            let mut acc = IntMatrix::identity(1);
            for _ in 0..*d {
                acc = acc.kron(a);
            }
            acc
        }
        ClassicalFunctor::DividedPower(d) => {
            // Image of the orbit sum γ_β, read at the first word of each target orbit.
            let rows = multi_indices(n, *d);
            let cols = multi_indices(m, *d);
            let mut out = IntMatrix::zeros(rows.len(), cols.len());
            for (j, beta) in cols.iter().enumerate() {
                let orbit = Tensor::orbit_sum(beta);
                for (i, alpha) in rows.iter().enumerate() {
                    let w = alpha.first_word();
                    out[(i, j)] = orbit.terms.keys().map(|u| word_coefficient(a, &w, u)).sum();
                }
            }
            out
        }
        ClassicalFunctor::Symmetric(d) => {
            // Image of any word of content β, projected onto monomials.
            let rows = multi_indices(n, *d);
            let cols = multi_indices(m, *d);
            let mut out = IntMatrix::zeros(rows.len(), cols.len());
            for (i, alpha) in rows.iter().enumerate() {
                let orbit = Tensor::orbit_sum(alpha);
                for (j, beta) in cols.iter().enumerate() {
                    let u = beta.first_word();
                    out[(i, j)] = orbit.terms.keys().map(|w| word_coefficient(a, w, &u)).sum();
                }
            }
            out
        }
        ClassicalFunctor::Exterior(d) => {
            let rows = exterior_basis(n, *d);
            let cols = exterior_basis(m, *d);
            let mut out = IntMatrix::zeros(rows.len(), cols.len());
            for (i, r) in rows.iter().enumerate() {
                for (j, c) in cols.iter().enumerate() {
                    out[(i, j)] = a.submatrix(r, c).determinant()?;
                }
            }
            out
        }
        ClassicalFunctor::TensorProduct(fs) => {
            let mut acc = IntMatrix::identity(1);
            for x in fs {
                acc = acc.kron(&eval_on_map(x, a)?);
            }
            acc
        }
    })
}

/// Which cokernel functor a presentation realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FunctorFamily {
    /// `Γ^s` itself, no relations.
    DividedPower { s: usize },
    /// `Q^s`: cokernel of `⊕_{0<k<s} Γ^k ⊗ Γ^{s−k} → Γ^s`.
    Q { s: usize },
    /// `C_{s,parts}`: cokernel of `⊕_{λ ∈ Comp(s, parts)} Γ^λ → Γ^s`.
    C { s: usize, parts: usize },
}

impl FunctorFamily {
    pub fn weight(&self) -> usize {
        match *self {
            FunctorFamily::DividedPower { s } | FunctorFamily::Q { s } | FunctorFamily::C { s, .. } => s,
        }
    }
}

impl fmt::Display for FunctorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctorFamily::DividedPower { s } => write!(f, "Gamma^{s}"),
            FunctorFamily::Q { s } => write!(f, "Q^{s}"),
            FunctorFamily::C { s, parts } => write!(f, "C_{{{s},{parts}}}"),
        }
    }
}

/// The value of a weight-`s` functor on `ℤⁿ` as a quotient of `Γ^s(ℤⁿ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentedFunctorValue {
    family: FunctorFamily,
    rank: usize,
    presentation: FPGroup,
    weight_labels: Vec<MultiIndex>,
}

impl PresentedFunctorValue {
    fn build(family: FunctorFamily, rank: usize, relations: SparseMatrix) -> Result<Self> {
        let basis = gamma_basis(rank, family.weight())?;
        let labels = basis.monomials().to_vec();
        let presentation =
            FPGroup::new(labels.len(), relations)?.with_labels(labels.iter().map(|m| m.to_string()).collect())?;
        let value = PresentedFunctorValue { family, rank, presentation, weight_labels: labels };
        value.check_weight_graded()?;
        Ok(value)
    }

    pub fn family(&self) -> FunctorFamily {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn weight(&self) -> usize {
        self.family.weight()
    }

    pub fn presentation(&self) -> &FPGroup {
        &self.presentation
    }

    pub fn weight_labels(&self) -> &[MultiIndex] {
        &self.weight_labels
    }

    /// Every relation column is supported on generators of a single weight.
    pub fn check_weight_graded(&self) -> Result<()> {
        for (j, col) in self.presentation.relations().columns().iter().enumerate() {
            if let Some(((first, _), rest)) = col.split_first() {
                let w = &self.weight_labels[*first];
                if let Some((bad, _)) = rest.iter().find(|(i, _)| &self.weight_labels[*i] != w) {
                    return Err(Error::Integrity(format!(
                        "relation {j} mixes weights {w} and {}",
                        self.weight_labels[*bad]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> PresentationJson {
        PresentationJson {
            family: self.family,
            rank: self.rank,
            generators: self.weight_labels.clone(),
            relations: SparseTriplets::from(self.presentation.relations()),
        }
    }

    /// Rebuild from the exported form, re-checking sizes and weight-gradedness.
    pub fn from_json(json: PresentationJson) -> Result<Self> {
        let relations = SparseMatrix::try_from(json.relations)?;
        let value = Self::build(json.family, json.rank, relations)?;
        if value.weight_labels != json.generators {
            return Err(Error::Integrity("generator labels do not match the gamma basis".into()));
        }
        Ok(value)
    }
}

/// JSON form of a presentation: generator multi-indices and sparse relations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    #[serde(flatten)]
    pub family: FunctorFamily,
    pub rank: usize,
    pub generators: Vec<MultiIndex>,
    pub relations: SparseTriplets,
}

/// `Γ^s(ℤⁿ)` with no relations.
pub fn gamma_presentation(s: usize, n: usize) -> Result<PresentedFunctorValue> {
    check_rank(n)?;
    let rows = gamma_basis(n, s)?.len();
    PresentedFunctorValue::build(FunctorFamily::DividedPower { s }, n, SparseMatrix::new(rows))
}

/// `Q^s(ℤⁿ)`.
pub fn q_presentation(s: usize, n: usize) -> Result<PresentedFunctorValue> {
    check_rank(n)?;
    if s == 0 {
        return Err(Error::InvalidParameter("Q^s needs s >= 1".into()));
    }
    let mut relations = SparseMatrix::new(gamma_basis(n, s)?.len());
    for k in 1..s {
        relations.extend(multiplication_columns(&[k, s - k], n)?)?;
    }
    PresentedFunctorValue::build(FunctorFamily::Q { s }, n, relations)
}

/// `C_{s,d+1}(ℤⁿ)`.
pub fn c_presentation(s: usize, d: usize, n: usize) -> Result<PresentedFunctorValue> {
    check_rank(n)?;
    if d == 0 || d >= s {
        return Err(Error::InvalidParameter(format!("C_{{s,d+1}} needs 1 <= d < s, got s = {s}, d = {d}")));
    }
    let mut relations = SparseMatrix::new(gamma_basis(n, s)?.len());
    for lambda in compositions(s, d + 1) {
        relations.extend(multiplication_columns(lambda.parts(), n)?)?;
    }
    PresentedFunctorValue::build(FunctorFamily::C { s, parts: d + 1 }, n, relations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};
    use crate::zlinalg::{ab_structure, AbGroup};
    use ClassicalFunctor::*;

    fn preserves_identity(f: &ClassicalFunctor, n: usize) -> bool {
        let id = eval_on_map(f, &IntMatrix::identity(n)).unwrap();
        BigUint::from(id.rows()) == eval_dim(f, n) && id == IntMatrix::identity(id.rows())
    }

    #[test]
    fn dimensions() {
        assert_eq!(eval_dim(&Symmetric(2), 3), BigUint::from(6u32));
        assert_eq!(eval_dim(&Exterior(2), 2), BigUint::one());
        assert_eq!(eval_dim(&TensorPower(3), 2), BigUint::from(8u32));
        assert_eq!(eval_dim(&TensorProduct(vec![Symmetric(2), Exterior(1)]), 3), BigUint::from(18u32));
        assert_eq!(eval_dim(&DividedPower(0), 0), BigUint::one());
        assert_eq!(eval_dim(&DividedPower(2), 0), BigUint::zero());
        assert_eq!(eval_dim(&TensorPower(0), 0), BigUint::one());
        for f in [DividedPower(3), Symmetric(2), Exterior(2), TensorPower(2)] {
            for n in 1..4 {
                assert_eq!(BigUint::from(f.basis_weights(n).unwrap().len()), eval_dim(&f, n));
            }
        }
    }

    #[test]
    fn kronecker_square() {
        let a = IntMatrix::from_rows(&[[1, 2], [-1, 3]]);
        assert_eq!(eval_on_map(&TensorPower(2), &a).unwrap(), a.kron(&a));
    }

    #[test]
    fn top_exterior_power_is_determinant() {
        let a = IntMatrix::from_rows(&[[2, 5], [1, 4]]);
        assert_eq!(eval_on_map(&Exterior(2), &a).unwrap(), IntMatrix::from_rows(&[[3]]));
    }

    #[test]
    fn divided_square_of_diagonal() {
        let a = IntMatrix::from_rows(&[[3, 0], [0, 5]]);
        assert_eq!(eval_on_map(&DividedPower(2), &a).unwrap(), IntMatrix::from_rows(&[[9, 0, 0], [0, 15, 0], [0, 0, 25]]));
    }

    #[test]
    fn divided_and_symmetric_differ_on_off_diagonal_maps() {
        // A = [[1],[1]] : ℤ → ℤ², e ↦ e₁ + e₂.
        let a = IntMatrix::from_rows(&[[1], [1]]);
        // γ₂(e) ↦ (e₁+e₂)⊗(e₁+e₂) = γ_(2,0) + γ_(1,1) + γ_(0,2)
        assert_eq!(eval_on_map(&DividedPower(2), &a).unwrap(), IntMatrix::from_rows(&[[1], [1], [1]]));
        // x² ↦ (x₁+x₂)² = x₁² + 2x₁x₂ + x₂²
        assert_eq!(eval_on_map(&Symmetric(2), &a).unwrap(), IntMatrix::from_rows(&[[1], [2], [1]]));
    }

    #[test]
    fn exterior_basis_order() {
        assert_eq!(exterior_basis(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert!(eval_on_map(&Exterior(3), &IntMatrix::identity(2)).unwrap().rows() == 0);
    }

    #[test]
    fn identity_maps() {
        for f in [DividedPower(3), Symmetric(3), Exterior(2), TensorPower(2), TensorProduct(vec![Exterior(1), Symmetric(2)])] {
            assert!(preserves_identity(&f, 3), "{f}");
        }
        assert!(eval_on_map(&Symmetric(1), &IntMatrix::zeros(0, 2)).is_err());
    }

    #[test]
    fn q_values() {
        assert_eq!(ab_structure(q_presentation(2, 1).unwrap().presentation()), AbGroup::cyclic(2));
        assert!(ab_structure(q_presentation(6, 1).unwrap().presentation()).is_trivial());
        let q22 = ab_structure(q_presentation(2, 2).unwrap().presentation());
        assert_eq!(q22, AbGroup::cyclic(2).direct_sum(&AbGroup::cyclic(2)));
        assert_eq!(ab_structure(q_presentation(1, 3).unwrap().presentation()), AbGroup::free(3));
    }

    #[test]
    fn c_values() {
        assert_eq!(ab_structure(c_presentation(4, 3, 1).unwrap().presentation()), AbGroup::cyclic(24));
        let c411 = c_presentation(4, 1, 1).unwrap();
        assert_eq!(c411.presentation().relations().cols(), 3);
        assert_eq!(ab_structure(c411.presentation()), AbGroup::cyclic(2));
        for n in 1..4 {
            let c = c_presentation(2, 1, n).unwrap();
            let q = q_presentation(2, n).unwrap();
            assert_eq!(c.presentation().relations(), q.presentation().relations());
        }
        assert!(c_presentation(4, 4, 1).is_err());
        assert!(c_presentation(4, 0, 1).is_err());
    }

    #[test]
    fn presentations_are_weight_graded() {
        for s in 1..6 {
            for n in 1..4 {
                q_presentation(s, n).unwrap().check_weight_graded().unwrap();
                for d in 1..s {
                    let c = c_presentation(s, d, n).unwrap();
                    c.check_weight_graded().unwrap();
                    assert_eq!(BigUint::from(c.presentation().generator_count()), binomial(n + s - 1, s));
                }
            }
        }
    }

    #[test]
    fn mixed_weight_relation_is_rejected() {
        let mut rel = SparseMatrix::new(3);
        rel.push_column([(0, BigInt::one()), (1, BigInt::one())]).unwrap();
        let err = PresentedFunctorValue::build(FunctorFamily::Q { s: 2 }, 2, rel).unwrap_err();
        assert!(matches!(err, Error::Integrity(_)));
    }

    #[test]
    fn json_round_trip() {
        let c = c_presentation(3, 1, 2).unwrap();
        let text = serde_json::to_string(&c.to_json()).unwrap();
        assert!(text.starts_with(r#"{"family":"c","s":3,"parts":2,"rank":2"#), "{text}");
        let back: PresentationJson = serde_json::from_str(&text).unwrap();
        assert_eq!(PresentedFunctorValue::from_json(back).unwrap(), c);
        assert_eq!(c.presentation().relations().columns()[0], vec![(0, BigInt::from(3))]);
    }
}
