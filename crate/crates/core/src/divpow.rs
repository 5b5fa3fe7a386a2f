//! Integer bases and structure maps of the divided power algebra `Γ(ℤⁿ)`.
//!
//! `Γ^d(ℤⁿ)` is the module of symmetric tensors of degree `d`. It is free with
//! basis the orbit sums `γ_α`, one for every multi-index `α` of weight `d`: `γ_α`
//! is the sum of all distinct tensor words in which the letter `j` occurs `α_j`
//! times.
//!
//! Multi-indices are ordered by the monomial order used everywhere in the crate:
//! lexicographic *descending* on the entry tuples, so `(2,0) < (1,1) < (0,2)`.

use std::borrow::Borrow;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::padic::{binomial, multinomial_coefficient, Composition};
use crate::zlinalg::{IntMatrix, SparseMatrix};

/// Largest tensor basis `n^m` the shuffle oracle will materialize.
pub const SHUFFLE_CAPACITY: u128 = 1_000_000;

/// Exponent tuple of a divided-power monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidParameter("multi-index must have length >= 1".into()));
        }
        Ok(MultiIndex(entries))
    }

    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of strictly positive entries.
    pub fn support_len(&self) -> usize {
        self.0.iter().filter(|&&x| x > 0).count()
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        assert_eq!(self.len(), other.len(), "multi-index lengths differ");
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Entrywise `self ≤ other`.
    pub fn le(&self, other: &MultiIndex) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self` followed by `other`, a multi-index on `ℤ^{n₁+n₂}`.
    pub fn concat(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().chain(&other.0).copied().collect())
    }

    /// The letters of the lexicographically first word in the orbit of `self`.
    pub fn first_word(&self) -> Vec<usize> {
        self.0.iter().enumerate().flat_map(|(j, &k)| std::iter::repeat_n(j, k)).collect()
    }

    /// Content of a word over the alphabet `0..n`.
    pub fn of_word(n: usize, word: &[usize]) -> MultiIndex {
        let mut entries = vec![0; n];
        for &letter in word {
            entries[letter] += 1;
        }
        MultiIndex(entries)
    }
}

impl Borrow<[usize]> for MultiIndex {
    fn borrow(&self) -> &[usize] {
        &self.0
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// All multi-indices of length `n` and weight `d`, ascending in the monomial order.
pub fn multi_indices(n: usize, d: usize) -> Vec<MultiIndex> {
    fn fill(remaining: usize, slots: usize, current: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
        if slots == 1 {
            current.push(remaining);
            out.push(MultiIndex(current.clone()));
            current.pop();
            return;
        }
        for first in (0..=remaining).rev() {
            current.push(first);
            fill(remaining - first, slots - 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        fill(d, n, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// Monomial basis of `Γ^d(ℤⁿ)`.
#[derive(Debug, Clone)]
pub struct GammaBasis {
    n: usize,
    degree: usize,
    monomials: Vec<MultiIndex>,
    index: HashMap<MultiIndex, usize>,
}

impl GammaBasis {
    pub fn variables(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn monomials(&self) -> &[MultiIndex] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, alpha: &MultiIndex) -> Option<usize> {
        self.index.get(alpha).copied()
    }
}

pub fn gamma_basis(n: usize, d: usize) -> Result<GammaBasis> {
    if n == 0 {
        return Err(Error::InvalidParameter("gamma basis needs n >= 1".into()));
    }
    let monomials = multi_indices(n, d);
    let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    Ok(GammaBasis { n, degree: d, monomials, index })
}

/// Basis of `Γ^{λ₁}(ℤⁿ) ⊗ … ⊗ Γ^{λ_k}(ℤⁿ)`: tuples of monomials in lexicographic
/// product order. Parts may be zero here (`Γ⁰ = ℤ`).
#[derive(Debug, Clone)]
pub struct TensorGammaBasis {
    n: usize,
    parts: Vec<usize>,
    factors: Vec<GammaBasis>,
}

impl TensorGammaBasis {
    pub fn new(n: usize, parts: &[usize]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParameter("tensor product needs at least one factor".into()));
        }
        let factors = parts.iter().map(|&d| gamma_basis(n, d)).collect::<Result<_>>()?;
        Ok(TensorGammaBasis { n, parts: parts.to_vec(), factors })
    }

    pub fn variables(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn factors(&self) -> &[GammaBasis] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.iter().map(GammaBasis::len).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Visit every basis tuple in order, passing its position and its factors.
    pub fn for_each(&self, mut visit: impl FnMut(usize, &[&MultiIndex])) {
        let k = self.factors.len();
        let mut odometer = vec![0usize; k];
        let mut tuple: Vec<&MultiIndex> = self.factors.iter().map(|f| &f.monomials[0]).collect();
        for position in 0..self.len() {
            visit(position, &tuple);
            for slot in (0..k).rev() {
                odometer[slot] += 1;
                if odometer[slot] < self.factors[slot].len() {
                    tuple[slot] = &self.factors[slot].monomials[odometer[slot]];
                    break;
                }
                odometer[slot] = 0;
                tuple[slot] = &self.factors[slot].monomials[0];
            }
        }
    }

    pub fn elements(&self) -> Vec<Vec<MultiIndex>> {
        let mut out = Vec::with_capacity(self.len());
        self.for_each(|_, t| out.push(t.iter().map(|&m| m.clone()).collect()));
        out
    }
}

/// The integer `c` with `γ_α · γ_β = c · γ_{α+β}`.
pub fn product_coefficient(alpha: &MultiIndex, beta: &MultiIndex) -> Result<BigUint> {
    if alpha.len() != beta.len() {
        return Err(Error::DimensionMismatch(format!(
            "multi-indices of lengths {} and {}",
            alpha.len(),
            beta.len()
        )));
    }
    Ok(alpha.0.iter().zip(&beta.0).map(|(&a, &b)| binomial(a + b, a)).product())
}

/// Coefficient of the iterated product `γ_{α⁽¹⁾} ⋯ γ_{α⁽ᵏ⁾}` on `γ_{Σα⁽ⁱ⁾}`.
pub fn iterated_product_coefficient(factors: &[&MultiIndex]) -> BigUint {
    let n = factors.first().map_or(0, |f| f.len());
    let mut column = Vec::with_capacity(factors.len());
    let mut acc = BigUint::one();
    for j in 0..n {
        column.clear();
        column.extend(factors.iter().map(|f| f.0[j]));
        acc *= multinomial_coefficient(&column);
    }
    acc
}

/// An element of `⊗^m(ℤⁿ)`: words over `0..n` with their coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Tensor {
    pub terms: BTreeMap<Vec<usize>, BigInt>,
}

impl Tensor {
    /// The orbit sum `γ_α` written out in the tensor basis.
    pub fn orbit_sum(alpha: &MultiIndex) -> Tensor {
        let mut terms = BTreeMap::new();
        let mut word = alpha.first_word();
        loop {
            terms.insert(word.clone(), BigInt::one());
            if !next_permutation(&mut word) {
                break;
            }
        }
        Tensor { terms }
    }

    pub fn scale(&self, c: &BigInt) -> Tensor {
        let terms = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect()
        };
        Tensor { terms }
    }

    /// Shuffle product: the sum over all `(a, b)`-shuffles of the concatenated words.
    pub fn shuffle(&self, other: &Tensor, a: usize, b: usize) -> Tensor {
        let mut terms: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
        for positions in subsets(a + b, a) {
            let mut in_first = vec![false; a + b];
            for &p in &positions {
                in_first[p] = true;
            }
            for (u, cu) in &self.terms {
                for (w, cw) in &other.terms {
                    let (mut iu, mut iw) = (u.iter(), w.iter());
                    let word: Vec<usize> = in_first
                        .iter()
                        .map(|&first| if first { *iu.next().unwrap() } else { *iw.next().unwrap() })
                        .collect();
                    *terms.entry(word).or_default() += cu * cw;
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Tensor { terms }
    }

    /// `Some(c)` when `self = c · other` and `other` is nonzero.
    pub fn ratio_to(&self, other: &Tensor) -> Option<BigInt> {
        let (w, x) = other.terms.iter().next()?;
        let c = self.terms.get(w).cloned().unwrap_or_default();
        if &c % x != BigInt::zero() {
            return None;
        }
        let c = c / x;
        (other.scale(&c) == *self).then_some(c)
    }
}

fn next_permutation(word: &mut [usize]) -> bool {
    let Some(i) = (1..word.len()).rev().find(|&i| word[i - 1] < word[i]) else {
        return false;
    };
    let j = (i..word.len()).rev().find(|&j| word[j] > word[i - 1]).unwrap();
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// All `k`-element subsets of `0..m` as sorted position lists.
fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn fill(start: usize, m: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..m {
            if m - i < k - current.len() {
                break;
            }
            current.push(i);
            fill(i + 1, m, k, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    fill(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Multiply `γ_α` and `γ_β` as explicit symmetric tensors under the shuffle product.
///
/// Independent of [`product_coefficient`]; used to check it.
pub fn shuffle_oracle(alpha: &MultiIndex, beta: &MultiIndex) -> Result<Tensor> {
    if alpha.len() != beta.len() {
        return Err(Error::DimensionMismatch(format!(
            "multi-indices of lengths {} and {}",
            alpha.len(),
            beta.len()
        )));
    }
    let n = alpha.len() as u128;
    let m = (alpha.weight() + beta.weight()) as u32;
    let required = n.checked_pow(m).unwrap_or(u128::MAX);
    if required > SHUFFLE_CAPACITY {
        return Err(Error::Capacity { required, limit: SHUFFLE_CAPACITY });
    }
    Ok(Tensor::orbit_sum(alpha).shuffle(&Tensor::orbit_sum(beta), alpha.weight(), beta.weight()))
}

/// The coefficient read off the shuffle oracle, or an integrity error when the
/// product is not a multiple of the orbit sum of `α + β`.
pub fn shuffle_product_coefficient(alpha: &MultiIndex, beta: &MultiIndex) -> Result<BigInt> {
    let product = shuffle_oracle(alpha, beta)?;
    product
        .ratio_to(&Tensor::orbit_sum(&alpha.add(beta)))
        .ok_or_else(|| Error::Integrity(format!("γ{alpha}·γ{beta} is not a multiple of γ{}", alpha.add(beta))))
}

/// Columns of the iterated product `Γ^λ(ℤⁿ) → Γ^s(ℤⁿ)`, one per basis tuple.
pub fn multiplication_columns(parts: &[usize], n: usize) -> Result<SparseMatrix> {
    let domain = TensorGammaBasis::new(n, parts)?;
    let target = gamma_basis(n, parts.iter().sum())?;
    let mut m = SparseMatrix::new(target.len());
    let mut sum = vec![0usize; n];
    let mut result = Ok(());
    domain.for_each(|_, tuple| {
        if result.is_err() {
            return;
        }
        sum.iter_mut().for_each(|x| *x = 0);
        for f in tuple {
            for (acc, x) in sum.iter_mut().zip(&f.0) {
                *acc += x;
            }
        }
        let row = target.index.get(sum.as_slice()).copied().expect("sum has the target weight");
        let c = BigInt::from(iterated_product_coefficient(tuple));
        result = m.push_column([(row, c)]);
    });
    result.map(|_| m)
}

/// Matrix of the iterated product `Γ^{λ₁} ⊗ … ⊗ Γ^{λ_k} → Γ^s` in the fixed bases.
pub fn multiplication_matrix(lambda: &Composition, n: usize) -> Result<IntMatrix> {
    Ok(multiplication_columns(lambda.parts(), n)?.to_dense())
}

/// Matrix of the iterated comultiplication `Γ^s(ℤⁿ) → Γ^{λ₁}(ℤⁿ) ⊗ … ⊗ Γ^{λ_k}(ℤⁿ)`,
/// `γ_α ↦ Σ γ_{α⁽¹⁾} ⊗ … ⊗ γ_{α⁽ᵏ⁾}` over all splittings `α = Σ α⁽ⁱ⁾` with `|α⁽ⁱ⁾| = λᵢ`.
pub fn iterated_comultiplication_matrix(parts: &[usize], n: usize) -> Result<IntMatrix> {
    let split = TensorGammaBasis::new(n, parts)?;
    let source = gamma_basis(n, parts.iter().sum())?;
    let mut m = IntMatrix::zeros(split.len(), source.len());
    split.for_each(|row, tuple| {
        let total = tuple.iter().skip(1).fold(tuple[0].clone(), |acc, f| acc.add(f));
        let col = source.index_of(&total).expect("sum has the source weight");
        m[(row, col)] = BigInt::one();
    });
    Ok(m)
}

/// Matrix of `Γ^{a+b}(ℤⁿ) → Γ^a(ℤⁿ) ⊗ Γ^b(ℤⁿ)`.
pub fn comultiplication_matrix(a: usize, b: usize, n: usize) -> Result<IntMatrix> {
    iterated_comultiplication_matrix(&[a, b], n)
}

/// The composite `Γ^s → Γ^λ → Γ^s` (comultiplication, then multiplication), which
/// must be multiplication by the multinomial `s!/∏λᵢ!`. Returns that scalar.
pub fn multinomial_composite_check(lambda: &Composition, n: usize) -> Result<BigUint> {
    let comult = iterated_comultiplication_matrix(lambda.parts(), n)?;
    let mult = multiplication_matrix(lambda, n)?;
    let composite = mult.mul(&comult)?;
    let scalar = composite
        .as_scalar()
        .ok_or_else(|| Error::Integrity(format!("composite through Γ^{lambda} is not scalar")))?;
    let (_, magnitude) = scalar.into_parts();
    Ok(magnitude)
}

/// Assemble the maps `Γ^t(ℤ^{n₁}) ⊗ Γ^{s−t}(ℤ^{n₂}) → Γ^s(ℤ^{n₁+n₂})`,
/// `γ_β ⊗ γ_δ ↦ γ_{(β,0)} · γ_{(0,δ)}`, for `t = 0..=s` into one square matrix.
pub fn direct_sum_matrix(s: usize, n1: usize, n2: usize) -> Result<IntMatrix> {
    let target = gamma_basis(n1 + n2, s)?;
    let mut columns = Vec::new();
    for t in 0..=s {
        let left = gamma_basis(n1, t)?;
        let right = gamma_basis(n2, s - t)?;
        for beta in left.monomials() {
            for delta in right.monomials() {
                let a = beta.concat(&MultiIndex::zero(n2));
                let b = MultiIndex::zero(n1).concat(delta);
                let c = product_coefficient(&a, &b)?;
                let row = target.index_of(&a.add(&b)).expect("weight s");
                columns.push((row, c));
            }
        }
    }
    let mut m = IntMatrix::zeros(target.len(), columns.len());
    for (j, (row, c)) in columns.into_iter().enumerate() {
        m[(row, j)] = BigInt::from(c);
    }
    Ok(m)
}

pub fn is_permutation_matrix(m: &IntMatrix) -> bool {
    if !m.is_square() {
        return false;
    }
    let one = BigInt::one();
    let row_ok = (0..m.rows()).all(|i| {
        let row = m.row(i);
        row.iter().filter(|x| !x.is_zero()).count() == 1 && row.contains(&one)
    });
    let col_ok = (0..m.cols()).all(|j| m.column(j).iter().filter(|x| !x.is_zero()).count() == 1);
    row_ok && col_ok
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(xs: &[usize]) -> MultiIndex {
        MultiIndex::new(xs.to_vec()).unwrap()
    }

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn bases() {
        let b = gamma_basis(2, 2).unwrap();
        assert_eq!(b.monomials(), &[mi(&[2, 0]), mi(&[1, 1]), mi(&[0, 2])]);
        assert_eq!(gamma_basis(1, 7).unwrap().monomials(), &[mi(&[7])]);
        assert_eq!(gamma_basis(3, 2).unwrap().len(), 6);
        assert_eq!(gamma_basis(4, 0).unwrap().monomials(), &[mi(&[0, 0, 0, 0])]);
        assert!(gamma_basis(0, 2).is_err());
        for n in 1..5 {
            for d in 0..6 {
                let b = gamma_basis(n, d).unwrap();
                assert_eq!(BigUint::from(b.len()), binomial(n + d - 1, d));
                assert!(b.monomials().windows(2).all(|w| w[0] < w[1]));
                for (i, m) in b.monomials().iter().enumerate() {
                    assert_eq!(b.index_of(m), Some(i));
                }
            }
        }
    }

    #[test]
    fn tensor_basis_order() {
        let t = TensorGammaBasis::new(2, &[1, 1]).unwrap();
        let e = t.elements();
        assert_eq!(e.len(), 4);
        assert_eq!(e[1], vec![mi(&[1, 0]), mi(&[0, 1])]);
        assert_eq!(e[2], vec![mi(&[0, 1]), mi(&[1, 0])]);
        assert_eq!(TensorGammaBasis::new(3, &[2, 1, 3]).unwrap().len(), 6 * 3 * 10);
    }

    #[test]
    fn product_coefficients_match_oracle_examples() {
        assert_eq!(product_coefficient(&mi(&[1, 0]), &mi(&[1, 0])).unwrap(), BigUint::from(2u32));
        assert_eq!(shuffle_product_coefficient(&mi(&[1, 0]), &mi(&[1, 0])).unwrap(), BigInt::from(2));
        assert_eq!(product_coefficient(&mi(&[1, 1]), &mi(&[1, 1])).unwrap(), BigUint::from(4u32));
        assert_eq!(shuffle_product_coefficient(&mi(&[1, 1]), &mi(&[1, 1])).unwrap(), BigInt::from(4));
        for a in 0..5 {
            for b in 0..5 {
                let c = shuffle_product_coefficient(&mi(&[a]), &mi(&[b])).unwrap();
                assert_eq!(c, BigInt::from(binomial(a + b, a)));
            }
        }
        assert!(product_coefficient(&mi(&[1]), &mi(&[1, 0])).is_err());
    }

    #[test]
    fn shuffle_oracle_examples() {
        let t = shuffle_oracle(&mi(&[1]), &mi(&[1])).unwrap();
        assert_eq!(t.terms.len(), 1);
        assert_eq!(t.terms[&vec![0, 0]], BigInt::from(2));
        let t = shuffle_oracle(&mi(&[1, 0]), &mi(&[0, 1])).unwrap();
        assert_eq!(t, Tensor::orbit_sum(&mi(&[1, 1])));
        assert_eq!(t.terms.len(), 2);
    }

    #[test]
    fn shuffle_oracle_capacity_guard() {
        let err = shuffle_oracle(&mi(&[10, 0, 0, 0]), &mi(&[0, 0, 0, 1])).unwrap_err();
        assert!(matches!(err, Error::Capacity { .. }));
    }

    #[test]
    fn multiplication_examples() {
        let m = multiplication_matrix(&comp(&[1, 1]), 1).unwrap();
        assert_eq!(m, IntMatrix::from_rows(&[[2]]));
        let m = multiplication_matrix(&comp(&[1, 3]), 1).unwrap();
        assert_eq!(m, IntMatrix::from_rows(&[[4]]));
        let m = multiplication_matrix(&comp(&[1, 1]), 2).unwrap();
        assert_eq!(m, IntMatrix::from_rows(&[[2, 0, 0, 0], [0, 1, 1, 0], [0, 0, 0, 2]]));
    }

    #[test]
    fn comultiplication_examples() {
        assert_eq!(comultiplication_matrix(1, 1, 1).unwrap(), IntMatrix::from_rows(&[[1]]));
        for n in 1..4 {
            for a in 0..4 {
                let m = comultiplication_matrix(a, 0, n).unwrap();
                assert_eq!(m, IntMatrix::identity(gamma_basis(n, a).unwrap().len()));
            }
        }
        // rows: γ10⊗γ10, γ10⊗γ01, γ01⊗γ10, γ01⊗γ01; columns: γ20, γ11, γ02
        let m = comultiplication_matrix(1, 1, 2).unwrap();
        assert_eq!(m, IntMatrix::from_rows(&[[1, 0, 0], [0, 1, 0], [0, 1, 0], [0, 0, 1]]));
    }

    #[test]
    fn composite_scalars() {
        assert_eq!(multinomial_composite_check(&comp(&[1, 1]), 1).unwrap(), BigUint::from(2u32));
        assert_eq!(multinomial_composite_check(&comp(&[2, 2]), 2).unwrap(), BigUint::from(6u32));
        assert_eq!(multinomial_composite_check(&comp(&[1, 1, 1, 1]), 1).unwrap(), BigUint::from(24u32));
    }

    #[test]
    fn direct_sum_is_permutation() {
        for s in 0..5 {
            for n1 in 1..3 {
                for n2 in 1..3 {
                    assert!(is_permutation_matrix(&direct_sum_matrix(s, n1, n2).unwrap()));
                }
            }
        }
        assert!(!is_permutation_matrix(&IntMatrix::from_rows(&[[2]])));
    }

    #[test]
    fn monomial_order_is_descending_lex() {
        assert!(mi(&[2, 0]) < mi(&[1, 1]));
        assert!(mi(&[1, 1, 0]) < mi(&[1, 0, 1]));
        assert_eq!(mi(&[0, 2, 1]).first_word(), vec![1, 1, 2]);
        assert_eq!(MultiIndex::of_word(3, &[2, 0, 2]), mi(&[1, 0, 2]));
        assert_eq!(mi(&[3, 0, 1]).support_len(), 2);
    }
}
