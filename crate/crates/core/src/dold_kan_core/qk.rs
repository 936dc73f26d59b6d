//! The Fin-abelian groups `QA = A ⊠ TV` and `KA = A ⊠ ΛV`.
//!
//! A map `α` acts by `α(a⊗x) = a⊗αx + da⊗v_{α(0)}αx`. The complex `A` is
//! read modulo `A^{>R}` with `R` the tensor-degree cutoff; since `A^{>R}`
//! is a subcomplex, `Q(A^{>R})` is a Fin-subgroup and every identity holds
//! exactly on the quotient.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

use crate::combo::Combo;
use crate::error::{Error, Result};
use crate::exact_linear::{BoundedComplex, CoeffRing, Matrix};
use crate::fin_maps::FinMap;
use crate::tensor_exterior::{act_word, concat, format_monomial, format_word, project_word, subsets, words, Word};

use super::cosimplicial::FinObject;

/// A basis element `e ⊗ x` with `e` the `idx`-th basis vector of `A^deg`
/// and `x` a word (or exterior monomial) of length `deg`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QKey {
    pub deg: usize,
    pub idx: usize,
    pub word: Word,
}

impl QKey {
    pub fn new(deg: usize, idx: usize, word: Word) -> Self {
        QKey { deg, idx, word }
    }
}

impl fmt::Debug for QKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}_{}⊗{}", self.deg, self.idx, format_word(&self.word))
    }
}

/// A complex cut at degree `R`, with the columns of `d` precomputed.
#[derive(Clone, Debug)]
pub struct BaseComplex {
    complex: BoundedComplex,
    dcols: Vec<Vec<Vec<(usize, BigInt)>>>,
}

impl BaseComplex {
    pub fn new(a: &BoundedComplex, r_max: usize) -> Self {
        let complex = a.truncate(r_max.min(a.top()));
        let dcols = (0..=complex.top())
            .map(|r| {
                let d = complex.differential(r);
                (0..complex.rank(r))
                    .map(|i| {
                        (0..d.rows())
                            .filter(|&k| !d[(k, i)].is_zero())
                            .map(|k| (k, d[(k, i)].clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        BaseComplex { complex, dcols }
    }

    pub fn complex(&self) -> &BoundedComplex {
        &self.complex
    }

    pub fn ring(&self) -> CoeffRing {
        self.complex.ring()
    }

    /// The cutoff `R`.
    pub fn top(&self) -> usize {
        self.complex.top()
    }

    pub fn rank(&self, r: usize) -> usize {
        self.complex.rank(r)
    }

    /// `d e_{r,i}` as `(index in degree r+1, coefficient)`; empty at the cutoff.
    pub fn d(&self, r: usize, i: usize) -> &[(usize, BigInt)] {
        if r >= self.top() {
            return &[];
        }
        &self.dcols[r][i]
    }
}

/// `QA`, levels unbounded, tensor degrees `≤ R`.
#[derive(Clone, Debug)]
pub struct QObject {
    base: BaseComplex,
}

impl QObject {
    pub fn new(a: &BoundedComplex, r_max: usize) -> Self {
        QObject {
            base: BaseComplex::new(a, r_max),
        }
    }

    pub fn from_base(base: BaseComplex) -> Self {
        QObject { base }
    }

    pub fn base(&self) -> &BaseComplex {
        &self.base
    }

    /// Basis of `F_s Q^n A = ⊕_{r ≥ s} A^r ⊗ T^r V^n`.
    pub fn filtration_basis(&self, n: usize, s: usize) -> Vec<QKey> {
        self.basis(n).into_iter().filter(|k| k.deg >= s).collect()
    }

    /// The unperturbed action `a⊗x ↦ a⊗αx` of the associated graded.
    pub fn graded_act_key(&self, alpha: &FinMap, key: &QKey) -> Combo<QKey> {
        act_word(alpha, &key.word).map_keys(|w| QKey::new(key.deg, key.idx, w.clone()))
    }

    pub fn random_element<R: Rng>(&self, n: usize, terms: usize, rng: &mut R) -> Combo<QKey> {
        random_element(&self.basis(n), terms, self.ring(), rng)
    }
}

pub(crate) fn random_element<K: Ord + Clone, R: Rng>(basis: &[K], terms: usize, ring: CoeffRing, rng: &mut R) -> Combo<K> {
    let mut c = Combo::zero();
    if basis.is_empty() {
        return c;
    }
    for _ in 0..terms {
        let k = basis[rng.gen_range(0..basis.len())].clone();
        c.add_term(k, BigInt::from(rng.gen_range(-3i64..=3)));
    }
    ring.reduce_combo(&mut c);
    c
}

/// `α(a⊗x)` on a tensor word, shared by `Q` and (after projection) `K`.
pub(crate) fn q_action(base: &BaseComplex, alpha: &FinMap, key: &QKey) -> Combo<QKey> {
    let image = act_word(alpha, &key.word);
    let mut out = image.map_keys(|w| QKey::new(key.deg, key.idx, w.clone()));
    let a0 = alpha.apply(0);
    if a0 != 0 {
        let shifted = image.map_keys(|w| concat(&[a0 as u8], w));
        for (k, c) in base.d(key.deg, key.idx) {
            for (w, x) in shifted.iter() {
                out.add_term(QKey::new(key.deg + 1, *k, w.clone()), c * x);
            }
        }
    }
    out
}

impl FinObject for QObject {
    type Key = QKey;

    fn ring(&self) -> CoeffRing {
        self.base.ring()
    }

    fn basis(&self, n: usize) -> Vec<QKey> {
        let mut out = Vec::new();
        for r in 0..=self.base.top() {
            let ws = words(r, n);
            for i in 0..self.base.rank(r) {
                out.extend(ws.iter().map(|w| QKey::new(r, i, w.clone())));
            }
        }
        out
    }

    fn act_key(&self, alpha: &FinMap, key: &QKey) -> Combo<QKey> {
        q_action(&self.base, alpha, key)
    }

    fn label(&self, key: &QKey) -> String {
        format!("{key:?}")
    }
}

/// `KA`, keys carry strictly increasing words.
#[derive(Clone, Debug)]
pub struct KObject {
    base: BaseComplex,
}

impl KObject {
    pub fn new(a: &BoundedComplex, r_max: usize) -> Self {
        KObject {
            base: BaseComplex::new(a, r_max),
        }
    }

    pub fn base(&self) -> &BaseComplex {
        &self.base
    }
}

impl FinObject for KObject {
    type Key = QKey;

    fn ring(&self) -> CoeffRing {
        self.base.ring()
    }

    fn basis(&self, n: usize) -> Vec<QKey> {
        let mut out = Vec::new();
        for r in 0..=self.base.top() {
            let ws = subsets(r, n);
            for i in 0..self.base.rank(r) {
                out.extend(ws.iter().map(|w| QKey::new(r, i, w.clone())));
            }
        }
        out
    }

    fn act_key(&self, alpha: &FinMap, key: &QKey) -> Combo<QKey> {
        p_hat(&q_action(&self.base, alpha, key))
    }

    fn label(&self, key: &QKey) -> String {
        format!("a{}_{}⊗{}", key.deg, key.idx, format_monomial(&key.word))
    }
}

/// `p̂ = 1 ⊗ p: QA → KA`.
pub fn p_hat(x: &Combo<QKey>) -> Combo<QKey> {
    x.map_linear(|k| project_word(&k.word).map_keys(|w| QKey::new(k.deg, k.idx, w.clone())))
}

/// `Q(g)` for a chain map given by its degree matrices.
pub fn q_of_map(g: &[Matrix], x: &Combo<QKey>) -> Combo<QKey> {
    x.map_linear(|k| {
        let mut out = Combo::zero();
        if let Some(m) = g.get(k.deg) {
            for row in 0..m.rows() {
                out.add_term(QKey::new(k.deg, row, k.word.clone()), m[(row, k.idx)].clone());
            }
        }
        out
    })
}

/// Rank of `K^n A`: `Σ_i C(n,i) rank A^i`.
pub fn k_rank(base: &BaseComplex, n: usize) -> usize {
    (0..=base.top().min(n)).map(|r| subsets(r, n).len() * base.rank(r)).sum()
}

/// Fails unless `a` and `b` have the same cutoff and ring.
pub fn compatible(a: &BaseComplex, b: &BaseComplex) -> Result<()> {
    if a.ring() != b.ring() || a.top() != b.top() {
        return Err(Error::Truncation("complexes cut at different degrees".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dold_kan_core::cosimplicial::{check_functorial, generator_pairs, normalize};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const Z: CoeffRing = CoeffRing::Integers;

    fn times_two() -> BoundedComplex {
        BoundedComplex::from_ranks(Z, &[1, 1], vec![Matrix::from_i64_rows(&[vec![2]]).unwrap()]).unwrap()
    }

    #[test]
    fn coface_on_degree_zero() {
        let q = QObject::new(&times_two(), 5);
        let d0 = FinMap::coface(0, 0).unwrap();
        let x = q.act_key(&d0, &QKey::new(0, 0, vec![]));
        assert_eq!(x.coeff(&QKey::new(0, 0, vec![])), BigInt::from(1));
        assert_eq!(x.coeff(&QKey::new(1, 0, vec![1])), BigInt::from(2));
    }

    #[test]
    fn zero_differential_gives_diagonal_action() {
        let a = BoundedComplex::from_ranks(Z, &[1, 2], vec![Matrix::zeros(2, 1)]).unwrap();
        let q = QObject::new(&a, 3);
        for alpha in FinMap::all(2, 2) {
            for key in q.basis(2) {
                assert_eq!(q.act_key(&alpha, &key), q.graded_act_key(&alpha, &key));
            }
        }
    }

    #[test]
    fn q_and_k_are_functorial() {
        let q = QObject::new(&times_two(), 3);
        check_functorial(&q, &generator_pairs(3, true)).unwrap();
        let k = KObject::new(&times_two(), 3);
        check_functorial(&k, &generator_pairs(3, true)).unwrap();
    }

    #[test]
    fn k_ranks_are_binomial_sums() {
        let k = KObject::new(&times_two(), 3);
        for n in 0..=4 {
            assert_eq!(k.basis(n).len(), k_rank(k.base(), n));
            assert_eq!(k.basis(n).len(), 1 + n);
        }
    }

    #[test]
    fn normalizing_k_returns_the_complex() {
        let a = times_two();
        let n = normalize(&KObject::new(&a, 5), a.top()).unwrap();
        assert_eq!(n.complex.ranks(), a.ranks());
        assert_eq!(n.complex.differentials(), a.differentials());
        assert!(!n.complex.is_truncated());
    }

    #[test]
    fn p_hat_commutes_with_random_maps() {
        let q = QObject::new(&times_two(), 3);
        let k = KObject::new(&times_two(), 3);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let alpha = FinMap::random(2, 3, &mut rng);
            let x = q.random_element(2, 4, &mut rng);
            assert_eq!(p_hat(&q.act(&alpha, &x)), k.act(&alpha, &p_hat(&x)));
        }
        assert!(p_hat(&Combo::basis(QKey::new(2, 0, vec![1, 1]))).is_zero());
    }
}
