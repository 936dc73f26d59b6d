//! The normalized complex of `QA` in its quotient form
//! `N^n QA = ⊕_r A^r ⊗ Z[sur_{r,n}]`, with the operators `∂`, `μ`, `B`,
//! the projection `p̂`, the map `l`, and the retraction data `j`, `h`.

use num_bigint::BigInt;
use num_traits::One;

use crate::combo::Combo;
use crate::error::{Error, Result};
use crate::exact_linear::{contraction, BoundedComplex, ChainMap, CoeffRing, Contraction, FreeModule, Matrix};
use crate::fin_maps::FinMap;
use crate::tensor_exterior::{act_word, concat, permutations, sort_sign, surjections, SurjectionBasis, Word};

use super::cosimplicial::LevelBasis;
use super::mixed::{MixedComplex, MixedMap};
use super::qk::{q_action, BaseComplex, QKey};

/// `(Z[sur_{r,*}], ∂_0)` with its projection onto `Z[r]` and a contraction.
#[derive(Clone, Debug)]
pub struct WordComplex {
    pub r: usize,
    pub bases: Vec<SurjectionBasis>,
    pub complex: BoundedComplex,
    pub p: ChainMap,
    pub target: BoundedComplex,
    pub retraction: Contraction,
}

/// `∂_0` on a word, read in the quotient by words missing a letter.
pub fn word_coboundary(n: usize, w: &[u8]) -> Combo<Word> {
    let d0 = FinMap::coface(n, 0).expect("coface");
    act_word(&d0, w).filtered(|u| crate::tensor_exterior::is_surjective(u, n + 1))
}

impl WordComplex {
    pub fn new(ring: CoeffRing, r: usize) -> Result<Self> {
        let bases: Vec<SurjectionBasis> = (0..=r).map(|n| SurjectionBasis::new(r, n)).collect();
        let modules = bases
            .iter()
            .map(|b| {
                FreeModule::new(b.words().iter().map(|w| crate::tensor_exterior::format_word(w)).collect())
            })
            .collect::<Result<Vec<_>>>()?;
        let d = (0..r)
            .map(|n| {
                let cols: Vec<Vec<BigInt>> = bases[n]
                    .words()
                    .iter()
                    .map(|w| bases[n + 1].reduce(&word_coboundary(n, w)))
                    .collect();
                Matrix::from_columns(bases[n + 1].len(), &cols)
            })
            .collect();
        let complex = BoundedComplex::new(ring, modules, d, false)?;
        let target = BoundedComplex::sphere(ring, r);
        let maps = (0..=r)
            .map(|n| {
                if n < r {
                    Matrix::zeros(0, bases[n].len())
                } else {
                    let row: Vec<BigInt> = bases[r]
                        .words()
                        .iter()
                        .map(|w| BigInt::from(sort_sign(w).expect("permutation").0))
                        .collect();
                    Matrix::from_rows(1, row.len(), row).expect("row")
                }
            })
            .collect();
        let p = ChainMap::new(&complex, &target, maps)?;
        let retraction = contraction(&complex, &target, &p)?;
        Ok(WordComplex {
            r,
            bases,
            complex,
            p,
            target,
            retraction,
        })
    }

    /// The generator of `ker p` in top degree: `∂_0` of `sur_{r,r-1}` spans it.
    pub fn kernel_of_p_is_boundary(&self) -> Result<bool> {
        use crate::exact_linear::smith;
        let r = self.r;
        if r == 0 {
            return Ok(true);
        }
        let ring = self.complex.ring();
        let p = self.p.maps[r].clone();
        let d = self.complex.differential(r - 1);
        if !p.dot(&d).is_zero_in(ring) {
            return Ok(false);
        }
        // the image is saturated of rank n! - 1
        let (rank, torsion) = smith::invariant_factors(&d);
        Ok(rank + 1 == self.bases[r].len() && torsion.is_empty())
    }
}

/// `N QA` for a complex cut at degree `R`.
#[derive(Clone, Debug)]
pub struct Nqa {
    base: BaseComplex,
    bases: Vec<LevelBasis<QKey>>,
    words: Vec<WordComplex>,
}

impl Nqa {
    pub fn new(base: BaseComplex) -> Result<Self> {
        let ring = base.ring();
        let top = base.top();
        let mut bases = Vec::new();
        for n in 0..=top {
            let mut keys = Vec::new();
            for r in n..=top {
                let sur = surjections(r, n);
                for i in 0..base.rank(r) {
                    keys.extend(sur.iter().map(|w| QKey::new(r, i, w.clone())));
                }
            }
            bases.push(LevelBasis::new(keys));
        }
        let words = (0..=top).map(|r| WordComplex::new(ring, r)).collect::<Result<_>>()?;
        Ok(Nqa { base, bases, words })
    }

    pub fn from_complex(a: &BoundedComplex, r_max: usize) -> Result<Self> {
        Self::new(BaseComplex::new(a, r_max))
    }

    pub fn base(&self) -> &BaseComplex {
        &self.base
    }

    pub fn ring(&self) -> CoeffRing {
        self.base.ring()
    }

    pub fn top(&self) -> usize {
        self.base.top()
    }

    pub fn basis(&self, n: usize) -> &LevelBasis<QKey> {
        &self.bases[n]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(LevelBasis::len).collect()
    }

    pub fn word_complex(&self, r: usize) -> &WordComplex {
        &self.words[r]
    }

    /// Matrix of a key-level operator from degree `from` to degree `to`.
    fn operator<F: Fn(&QKey) -> Combo<QKey>>(&self, from: usize, to: Option<usize>, f: F) -> Matrix {
        let src = &self.bases[from];
        let Some(tgt) = to.and_then(|t| self.bases.get(t)) else {
            return Matrix::zeros(0, src.len());
        };
        let cols: Vec<Vec<BigInt>> = src.keys().iter().map(|k| tgt.project(&f(k))).collect();
        Matrix::from_columns(tgt.len(), &cols).reduce(self.ring())
    }

    fn act(&self, alpha: &FinMap, x: &Combo<QKey>) -> Combo<QKey> {
        x.map_linear(|k| q_action(&self.base, alpha, k))
    }

    /// The coboundary induced by `∂_0`.
    pub fn coboundary(&self, n: usize) -> Matrix {
        let d0 = FinMap::coface(n, 0).expect("coface");
        self.operator(n, Some(n + 1), |k| q_action(&self.base, &d0, k))
    }

    /// The coboundary induced by the alternating sum of all cofaces.
    pub fn coboundary_alternating(&self, n: usize) -> Matrix {
        self.operator(n, Some(n + 1), |k| {
            let mut out = Combo::zero();
            for i in 0..=n + 1 {
                let c = q_action(&self.base, &FinMap::coface(n, i).expect("coface"), k);
                out.add_scaled(&c, &sign(i));
            }
            out
        })
    }

    pub fn complex(&self) -> Result<BoundedComplex> {
        let modules = self
            .bases
            .iter()
            .map(|b| FreeModule::new(b.keys().iter().map(|k| format!("{k:?}")).collect()))
            .collect::<Result<Vec<_>>>()?;
        let d = (0..self.top()).map(|n| self.coboundary(n)).collect();
        BoundedComplex::new(self.ring(), modules, d, false)
    }

    /// `μ = Σ_{i=0}^n (-1)^i μ_i`, with `μ_n` the map sending `n` to `0`.
    pub fn mu(&self, n: usize) -> Matrix {
        if n == 0 {
            return Matrix::zeros(0, self.bases[0].len());
        }
        self.operator(n, Some(n - 1), |k| {
            let mut out = Combo::zero();
            for i in 0..=n {
                let m = if i < n {
                    FinMap::codegeneracy(n, i).expect("codegeneracy")
                } else {
                    FinMap::mu_top(n).expect("mu_top")
                };
                out.add_scaled(&q_action(&self.base, &m, k), &sign(i));
            }
            out
        })
    }

    /// `B = ∂_0 ∘ Σ_i (-1)^{ni} t_n^i`, through the Fin action.
    pub fn connes_b(&self, n: usize) -> Matrix {
        let d0 = FinMap::coface(n, 0).expect("coface");
        self.operator(n, (n < self.top()).then_some(n + 1), |k| {
            let mut sum = Combo::zero();
            for i in 0..=n {
                let t = FinMap::cyclic_power(n, i);
                sum.add_scaled(&q_action(&self.base, &t, k), &sign(n * i));
            }
            self.act(&d0, &sum)
        })
    }

    /// `B(a⊗σ) = da ⊗ Σ_i (-1)^{in} c^i(1∐σ)`, `c` the cycle `(1 … n+1)`.
    pub fn connes_b_formula(&self, n: usize) -> Matrix {
        self.operator(n, (n < self.top()).then_some(n + 1), |k| {
            let mut out = Combo::zero();
            let shifted: Word = concat(&[1], &k.word.iter().map(|l| l + 1).collect::<Vec<_>>());
            for (j, c) in self.base.d(k.deg, k.idx) {
                for i in 0..=n {
                    let w: Word = shifted
                        .iter()
                        .map(|&l| ((l as usize - 1 + i) % (n + 1) + 1) as u8)
                        .collect();
                    out.add_term(QKey::new(k.deg + 1, *j, w), c * sign(i * n));
                }
            }
            out
        })
    }

    /// `p̂: N^n QA → A^n`, `a⊗σ ↦ sign(σ) a` on `A^n ⊗ Z[S_n]`.
    pub fn p_hat(&self, n: usize) -> Matrix {
        let src = &self.bases[n];
        let mut m = Matrix::zeros(self.base.rank(n), src.len());
        for (c, k) in src.keys().iter().enumerate() {
            if k.deg == n {
                m[(k.idx, c)] = BigInt::from(sort_sign(&k.word).expect("permutation").0);
            }
        }
        m
    }

    /// `l(a) = a ⊗ ε_n`.
    pub fn l(&self, n: usize) -> Matrix {
        let tgt = &self.bases[n];
        let perms = permutations(n);
        let cols: Vec<Vec<BigInt>> = (0..self.base.rank(n))
            .map(|i| {
                let x = Combo::from_terms(perms.iter().map(|(w, s)| (QKey::new(n, i, w.clone()), BigInt::from(*s))));
                tgt.project(&x)
            })
            .collect();
        Matrix::from_columns(tgt.len(), &cols)
    }

    /// `D = (n+1) d` on `A^n`.
    pub fn scaled_differential(&self, n: usize) -> Matrix {
        self.base.complex().differential(n).scale(&BigInt::from(n + 1))
    }

    /// `(N QA, μ, B)`.
    pub fn mixed(&self) -> Result<MixedComplex> {
        let top = self.top();
        MixedComplex::new(
            self.ring(),
            self.dims(),
            (0..=top).map(|n| self.mu(n)).collect(),
            (0..=top).map(|n| self.connes_b(n)).collect(),
        )
    }

    /// `l: (A, 0, d) → (N QA, μ, B)`.
    pub fn l_map(&self) -> MixedMap {
        MixedMap {
            maps: (0..=self.top()).map(|n| self.l(n)).collect(),
        }
    }

    /// `p̂: (N QA, μ, B) → (A, 0, D)`.
    pub fn p_hat_map(&self) -> MixedMap {
        MixedMap {
            maps: (0..=self.top()).map(|n| self.p_hat(n)).collect(),
        }
    }

    /// `(1/n!) p̂`, over a ring where every `n!` in range is invertible.
    pub fn rescaled_p_hat_map(&self) -> Result<MixedMap> {
        let ring = self.ring();
        let mut maps = Vec::new();
        let mut fact = BigInt::one();
        for n in 0..=self.top() {
            if n > 0 {
                fact *= n;
            }
            let inv = ring
                .inverse(&fact)
                .ok_or_else(|| Error::UnsupportedRing(format!("{n}! is not invertible in {ring}")))?;
            maps.push(self.p_hat(n).scale(&inv).reduce(ring));
        }
        Ok(MixedMap { maps })
    }

    /// `1 ⊗ j'`: `A^n → N^n`.
    fn j_prime(&self, n: usize) -> Matrix {
        let tgt = &self.bases[n];
        let wc = &self.words[n];
        let jn = &wc.retraction.j[n];
        let cols: Vec<Vec<BigInt>> = (0..self.base.rank(n))
            .map(|i| {
                let x = Combo::from_terms(
                    wc.bases[n]
                        .words()
                        .iter()
                        .enumerate()
                        .map(|(s, w)| (QKey::new(n, i, w.clone()), jn[(s, 0)].clone())),
                );
                tgt.project(&x)
            })
            .collect();
        Matrix::from_columns(tgt.len(), &cols)
    }

    /// `1 ⊗ h'`: `N^n → N^{n-1}`.
    fn h_prime(&self, n: usize) -> Matrix {
        if n == 0 {
            return Matrix::zeros(0, self.bases[0].len());
        }
        self.operator(n, Some(n - 1), |k| {
            let wc = &self.words[k.deg];
            let s = wc.bases[n].position(&k.word).expect("surjection");
            let h = &wc.retraction.h[n];
            Combo::from_terms(
                wc.bases[n - 1]
                    .words()
                    .iter()
                    .enumerate()
                    .map(|(t, w)| (QKey::new(k.deg, k.idx, w.clone()), h[(t, s)].clone())),
            )
        })
    }

    /// The perturbation `d ⊗ v_1 ∂_0`.
    fn vertical(&self, n: usize) -> Matrix {
        self.operator(n, (n < self.top()).then_some(n + 1), |k| {
            let mut out = Combo::zero();
            let w = word_coboundary(n, &k.word).map_keys(|u| concat(&[1], u));
            for (j, c) in self.base.d(k.deg, k.idx) {
                for (u, x) in w.iter() {
                    out.add_term(QKey::new(k.deg + 1, *j, u.clone()), c * x);
                }
            }
            out
        })
    }

    /// The basic perturbation lemma applied to `1 ⊗ (j', h')` with the
    /// perturbation `d ⊗ v_1 ∂_0`: `j = Σ (−h'Δ)^k j'`, `h = Σ (−h'Δ)^k h'`.
    pub fn retraction_series(&self) -> Result<Retraction> {
        let ring = self.ring();
        let top = self.top();
        let geometric = |n: usize, m: Matrix| -> Matrix {
            let mut term = m.clone();
            let mut total = m;
            if n < top {
                let step = self.h_prime(n + 1).dot(&self.vertical(n)).neg();
                for _ in 0..=top {
                    term = step.dot(&term).reduce(ring);
                    if term.is_zero() {
                        break;
                    }
                    total = total.plus(&term);
                }
            }
            total.reduce(ring)
        };
        let j = (0..=top).map(|n| geometric(n, self.j_prime(n))).collect();
        let mut h = vec![Matrix::zeros(0, self.bases[0].len())];
        for n in 1..=top {
            h.push(geometric(n - 1, self.h_prime(n)));
        }
        let r = Retraction { j, h };
        r.verify(self)?;
        Ok(r)
    }

    /// `j: A → N QA` and `h: N QA → N QA` with `p̂ j = 1` and
    /// `h∂ + ∂h = 1 − j p̂`.
    pub fn retraction(&self) -> Result<Retraction> {
        let ring = self.ring();
        let top = self.top();
        let a = self.base.complex();
        let zero_above = |n: usize| Matrix::zeros(0, self.bases[n].len());
        let mut j = Vec::new();
        for n in 0..=top {
            let mut jn = self.j_prime(n);
            if n < top {
                let inner = self
                    .j_prime(n + 1)
                    .dot(&a.differential(n))
                    .minus(&self.vertical(n).dot(&self.j_prime(n)));
                jn = jn.plus(&self.h_prime(n + 1).dot(&inner));
            }
            j.push(jn.reduce(ring));
        }
        let mut h = vec![zero_above(0)];
        for n in 1..=top {
            let hp = self.h_prime(n);
            let left = hp.minus(&hp.dot(&self.vertical(n - 1)).dot(&hp));
            let right = Matrix::identity(self.bases[n].len()).minus(&self.j_prime(n).dot(&self.p_hat(n)));
            h.push(left.dot(&right).reduce(ring));
        }
        let r = Retraction { j, h };
        r.verify(self)?;
        Ok(r)
    }
}

fn sign(i: usize) -> BigInt {
    if i % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

#[derive(Clone, Debug)]
pub struct Retraction {
    /// `j[n]: A^n → N^n QA`.
    pub j: Vec<Matrix>,
    /// `h[n]: N^n QA → N^{n-1} QA`.
    pub h: Vec<Matrix>,
}

impl Retraction {
    pub fn verify(&self, nqa: &Nqa) -> Result<()> {
        let ring = nqa.ring();
        let top = nqa.top();
        for n in 0..=top {
            let p = nqa.p_hat(n);
            if !p.dot(&self.j[n]).eq_in(&Matrix::identity(nqa.base.rank(n)), ring) {
                return Err(Error::InvalidStructure(format!("p̂ j ≠ 1 in degree {n}")));
            }
            let mut lhs = Matrix::zeros(nqa.bases[n].len(), nqa.bases[n].len());
            if n < top {
                lhs = lhs.plus(&self.h[n + 1].dot(&nqa.coboundary(n)));
            }
            if n > 0 {
                lhs = lhs.plus(&nqa.coboundary(n - 1).dot(&self.h[n]));
            }
            let rhs = Matrix::identity(nqa.bases[n].len()).minus(&self.j[n].dot(&p));
            if !lhs.eq_in(&rhs, ring) {
                return Err(Error::InvalidStructure(format!("h∂ + ∂h ≠ 1 − j p̂ in degree {n}")));
            }
            if n < top {
                let a = nqa.base.complex().differential(n);
                if !nqa.coboundary(n).dot(&self.j[n]).eq_in(&self.j[n + 1].dot(&a), ring) {
                    return Err(Error::InvalidStructure(format!("j is not a chain map in degree {n}")));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linear::smith;

    const Z: CoeffRing = CoeffRing::Integers;

    fn times_two() -> BoundedComplex {
        BoundedComplex::from_ranks(Z, &[1, 1], vec![Matrix::from_i64_rows(&[vec![2]]).unwrap()]).unwrap()
    }

    fn sample() -> BoundedComplex {
        // Z^2 → Z^2 → Z with d = [[1,2],[0,3]] then [[3,-2]]... kept small and valid
        let d0 = Matrix::from_i64_rows(&[vec![1, -1], vec![2, -2]]).unwrap();
        let d1 = Matrix::from_i64_rows(&[vec![2, -1]]).unwrap();
        BoundedComplex::from_ranks(Z, &[2, 2, 1], vec![d0, d1]).unwrap()
    }

    #[test]
    fn word_complexes_are_spheres() {
        for r in 0..=4 {
            let wc = WordComplex::new(Z, r).unwrap();
            let h = wc.complex.cohomology().unwrap();
            for d in &h.degrees {
                assert_eq!((d.betti, d.torsion.is_empty()), (usize::from(d.degree == r), true));
            }
            assert!(wc.kernel_of_p_is_boundary().unwrap());
            assert!(wc.retraction.side_conditions(&wc.complex, &wc.target, &wc.p));
        }
    }

    #[test]
    fn ranks_follow_surjection_counts() {
        let n = Nqa::from_complex(&sample(), 5).unwrap();
        assert_eq!(n.dims(), vec![2, 2 + 1, 2]);
    }

    #[test]
    fn coboundary_forms_agree() {
        let n = Nqa::from_complex(&sample(), 5).unwrap();
        for k in 0..n.top() {
            assert_eq!(n.coboundary(k), n.coboundary_alternating(k));
        }
    }

    #[test]
    fn b_on_degree_zero() {
        let n = Nqa::from_complex(&times_two(), 5).unwrap();
        assert_eq!(n.connes_b(0), Matrix::from_i64_rows(&[vec![2]]).unwrap());
        assert_eq!(n.connes_b(0), n.connes_b_formula(0));
    }

    fn fourfold() -> BoundedComplex {
        let t = times_two();
        t.tensor(&t).unwrap().tensor(&sample()).unwrap()
    }

    #[test]
    fn retraction_in_higher_degrees() {
        let a = fourfold();
        let n = Nqa::from_complex(&a, 4).unwrap();
        assert_eq!(n.top(), 4);
        let closed = n.retraction().unwrap();
        let series = n.retraction_series().unwrap();
        assert_eq!(closed.j, series.j);
        assert_eq!(closed.h, series.h);
    }

    #[test]
    fn retraction_series_identities() {
        for a in [times_two(), sample()] {
            let n = Nqa::from_complex(&a, 5).unwrap();
            n.retraction_series().unwrap();
        }
    }

    #[test]
    fn retraction_identities() {
        for a in [times_two(), sample()] {
            let n = Nqa::from_complex(&a, 5).unwrap();
            let closed = n.retraction().unwrap();
            let series = n.retraction_series().unwrap();
            assert_eq!(closed.j, series.j);
            assert_eq!(closed.h, series.h);
        }
    }

    #[test]
    fn cohomotopy_of_times_two() {
        let n = Nqa::from_complex(&times_two(), 5).unwrap();
        let h = n.complex().unwrap().cohomology().unwrap();
        assert!(h.degrees[0].is_zero());
        assert_eq!(h.degrees[1].torsion, vec![BigInt::from(2)]);
    }

    #[test]
    fn mixed_identities() {
        let n = Nqa::from_complex(&sample(), 5).unwrap();
        let m = n.mixed().unwrap();
        let a = MixedComplex::from_complex(n.base().complex(), |_| BigInt::one()).unwrap();
        let r = super::super::mixed::equivalence_check(&a, &m, &n.l_map()).unwrap();
        assert!(r.is_equivalence);
        for k in 0..=n.top() {
            assert_eq!(n.connes_b(k), n.connes_b_formula(k), "degree {k}");
            let d = n.scaled_differential(k);
            if k < n.top() {
                assert_eq!(n.p_hat(k + 1).dot(&n.connes_b(k)), d.dot(&n.p_hat(k)));
            }
        }
        assert!(smith::is_invertible(Z, &Matrix::identity(1)).unwrap());
    }
}
