//! The Fin-ring `[n] ↦ S ∐_k ⋯ ∐_k S` (`n+1` copies) in normal form, the map
//! `QΩ → ∐S` determined by `s ↦ δ_0(s)`, `ds⊗v_i ↦ q_i(s)`, and the
//! identification `QZ<0,1> = ⊕Z`.

use num_bigint::BigInt;
use num_traits::One;

use crate::combo::Combo;
use crate::dold_kan_core::{FinObject, QKey, QObject};
use crate::error::{Error, Result};
use crate::exact_linear::{BoundedComplex, CoeffRing, Matrix};
use crate::fin_maps::FinMap;
use crate::ring_layer::{FinRing, QRing};

use super::amitsur::is_iso;
use super::omega::Omega;
use super::struct_algebra::{Elem, StructAlgebra};

/// A letter `(tag, b)`: the basis element `b ≥ 1` of `S̄` in copy `tag`.
pub type Letter = (u8, u8);
/// A normal-form word: adjacent letters carry different tags; `[]` is `1`.
pub type CWord = Vec<Letter>;

#[derive(Clone, Debug)]
pub struct Coproduct {
    algebra: StructAlgebra,
    w_max: usize,
}

impl Coproduct {
    /// Levels cut at word length `w_max`. The Fin action never lengthens a
    /// word, so each cut is a sub-Fin-module.
    pub fn new(algebra: &StructAlgebra, w_max: usize) -> Self {
        Coproduct {
            algebra: algebra.clone(),
            w_max,
        }
    }

    pub fn algebra(&self) -> &StructAlgebra {
        &self.algebra
    }

    pub fn w_max(&self) -> usize {
        self.w_max
    }

    /// The normal form of `uv`, with no length cut.
    pub fn product_words(&self, u: &[Letter], v: &[Letter]) -> Combo<CWord> {
        match (u.last(), v.first()) {
            (Some(&(t, x)), Some(&(t2, y))) if t == t2 => {
                let (u0, v0) = (&u[..u.len() - 1], &v[1..]);
                let mut out = Combo::zero();
                for (k, c) in self.algebra.mul_basis(x as usize, y as usize) {
                    if *k == 0 {
                        out.add_scaled(&self.product_words(u0, v0), c);
                    } else {
                        let mut w = u0.to_vec();
                        w.push((t, *k as u8));
                        w.extend_from_slice(v0);
                        out.add_term(w, c.clone());
                    }
                }
                self.algebra.ring().reduce_combo(&mut out);
                out
            }
            _ => {
                let mut w = u.to_vec();
                w.extend_from_slice(v);
                Combo::basis(w)
            }
        }
    }

    pub fn product(&self, x: &Combo<CWord>, y: &Combo<CWord>) -> Combo<CWord> {
        let mut out = x.bilinear(y, |u, v| self.product_words(u, v));
        self.algebra.ring().reduce_combo(&mut out);
        out
    }

    /// `s ∈ S` placed in copy `tag`.
    pub fn inject(&self, tag: usize, s: &Elem) -> Combo<CWord> {
        s.map_keys(|&k| if k == 0 { Vec::new() } else { vec![(tag as u8, k as u8)] })
    }

    pub fn delta(&self, i: usize, s: &Elem) -> Combo<CWord> {
        self.inject(i, s)
    }

    /// `q_i(s) = δ_i(s) − δ_0(s)`.
    pub fn q(&self, i: usize, s: &Elem) -> Combo<CWord> {
        self.inject(i, s).minus(&self.inject(0, s))
    }

    fn words(&self, n: usize, len: usize) -> Vec<CWord> {
        let r = self.algebra.rank() as u8;
        let mut out: Vec<CWord> = vec![Vec::new()];
        for _ in 0..len {
            let mut next = Vec::new();
            for w in &out {
                for t in 0..=n as u8 {
                    if w.last().is_some_and(|l| l.0 == t) {
                        continue;
                    }
                    for b in 1..r {
                        let mut v = w.clone();
                        v.push((t, b));
                        next.push(v);
                    }
                }
            }
            out = next;
        }
        out
    }

    /// Normal-form words of length exactly `len` at level `n`.
    pub fn words_of_length(&self, n: usize, len: usize) -> Vec<CWord> {
        self.words(n, len)
    }
}

impl FinObject for Coproduct {
    type Key = CWord;

    fn ring(&self) -> CoeffRing {
        self.algebra.ring()
    }

    fn basis(&self, n: usize) -> Vec<CWord> {
        let mut out: Vec<CWord> = (0..=self.w_max).flat_map(|l| self.words(n, l)).collect();
        out.sort();
        out
    }

    /// Retag every letter by `α` and renormalize.
    fn act_key(&self, alpha: &FinMap, key: &CWord) -> Combo<CWord> {
        let mut out: Combo<CWord> = Combo::basis(Vec::new());
        for &(t, b) in key {
            out = self.product(&out, &Combo::basis(vec![(alpha.apply(t as usize) as u8, b)]));
        }
        out
    }

    fn label(&self, key: &CWord) -> String {
        if key.is_empty() {
            return "1".into();
        }
        key.iter()
            .map(|&(t, b)| format!("{}[{t}]", self.algebra.label(b as usize)))
            .collect::<Vec<_>>()
            .join("·")
    }
}

impl FinRing for Coproduct {
    /// The product with words longer than `w_max` dropped; exact whenever
    /// the lengths of the factors add up to at most `w_max`.
    fn mul_keys(&self, _n: usize, x: &CWord, y: &CWord) -> Combo<CWord> {
        let mut out = self.product_words(x, y);
        out.retain(|w| w.len() <= self.w_max);
        out
    }

    fn unit(&self, _n: usize) -> Combo<CWord> {
        Combo::basis(Vec::new())
    }
}

/// Associativity and unit laws at level `n` on basis triples whose lengths
/// add up to at most `w_max`.
pub fn check_coproduct_level(c: &Coproduct, n: usize) -> Result<()> {
    let basis = c.basis(n);
    for x in &basis {
        for y in basis.iter().filter(|y| x.len() + y.len() <= c.w_max) {
            let xy = c.product_words(x, y);
            for z in basis.iter().filter(|z| x.len() + y.len() + z.len() <= c.w_max) {
                let l = c.product(&xy, &Combo::basis(z.clone()));
                let r = c.product(&Combo::basis(x.clone()), &c.product_words(y, z));
                if l != r {
                    return Err(Error::InvalidStructure(format!("associativity fails on ({x:?}, {y:?}, {z:?})")));
                }
            }
        }
    }
    Ok(())
}

/// `α(xy) = α(x)α(y)` on basis pairs within the length cut.
pub fn check_coproduct_map(c: &Coproduct, alpha: &FinMap) -> Result<()> {
    let basis = c.basis(alpha.source());
    for x in &basis {
        let ax = c.act(alpha, &Combo::basis(x.clone()));
        for y in basis.iter().filter(|y| x.len() + y.len() <= c.w_max) {
            let lhs = c.act(alpha, &c.product_words(x, y));
            let rhs = c.product(&ax, &c.act(alpha, &Combo::basis(y.clone())));
            if lhs != rhs {
                return Err(Error::InvalidStructure(format!("{alpha} is not multiplicative on ({x:?}, {y:?})")));
            }
        }
    }
    Ok(())
}

/// The ring map `Q^nΩ → ∐^n S` on levels up to a word-length bound.
pub struct QOmegaIso {
    omega: Omega,
    q: QRing,
    coproduct: Coproduct,
}

impl QOmegaIso {
    /// `Ω` is kept up to degree `w_max + 1` so that products and Fin actions
    /// of elements of weight at most `w_max` are exact.
    pub fn new(algebra: &StructAlgebra, w_max: usize) -> Result<Self> {
        let omega = Omega::new(algebra, w_max + 1)?;
        Ok(QOmegaIso {
            q: QRing::new(omega.dg()),
            coproduct: Coproduct::new(algebra, w_max),
            omega,
        })
    }

    pub fn q_ring(&self) -> &QRing {
        &self.q
    }

    pub fn coproduct(&self) -> &Coproduct {
        &self.coproduct
    }

    pub fn omega(&self) -> &Omega {
        &self.omega
    }

    /// `r` plus one if the leading coefficient `a_0` is not the unit: the
    /// length of the longest word in the image of `a_0 da_1 ⋯ da_r ⊗ x`.
    pub fn weight(&self, key: &QKey) -> usize {
        key.deg + usize::from(self.omega.form((key.deg, key.idx))[0] != 0)
    }

    /// `a_0 da_1 ⋯ da_r ⊗ v_{w_1}⋯v_{w_r} ↦ δ_0(a_0) q_{w_1}(a_1) ⋯ q_{w_r}(a_r)`.
    pub fn apply_key(&self, key: &QKey) -> Combo<CWord> {
        let f = self.omega.form((key.deg, key.idx));
        let c = &self.coproduct;
        let mut out = c.delta(0, &Combo::basis(f[0] as usize));
        for (&a, &i) in f[1..].iter().zip(&key.word) {
            out = c.product(&out, &c.q(i as usize, &Combo::basis(a as usize)));
        }
        out
    }

    pub fn apply(&self, x: &Combo<QKey>) -> Combo<CWord> {
        let mut out = Combo::zero();
        for (k, c) in x.iter() {
            out.add_scaled(&self.apply_key(k), c);
        }
        self.coproduct.algebra.ring().reduce_combo(&mut out);
        out
    }

    /// Basis of `Q^nΩ` of weight at most `w_max`.
    pub fn source_basis(&self, n: usize) -> Vec<QKey> {
        self.q.basis(n).into_iter().filter(|k| self.weight(k) <= self.coproduct.w_max).collect()
    }

    /// The square matrix from weight-`w` basis elements to words of length
    /// `w`, reading off the top-length part of the image.
    pub fn graded_piece(&self, n: usize, w: usize) -> Result<Matrix> {
        let src: Vec<QKey> = self.q.basis(n).into_iter().filter(|k| self.weight(k) == w).collect();
        let tgt = crate::dold_kan_core::cosimplicial::LevelBasis::new(self.coproduct.words_of_length(n, w));
        let mut m = Matrix::zeros(tgt.len(), src.len());
        for (j, k) in src.iter().enumerate() {
            for (word, c) in self.apply_key(k).iter() {
                if word.len() > w {
                    return Err(Error::InvalidStructure(format!("{k:?} maps past length {w}")));
                }
                if word.len() == w {
                    m[(tgt.position(word).expect("word"), j)] += c;
                }
            }
        }
        Ok(m.reduce(self.coproduct.algebra.ring()))
    }

    /// Bijective on each length-graded piece up to `w_max`, multiplicative
    /// for `∘` on basis pairs of total weight at most `w_max`, and
    /// commuting with the given maps out of level `n`.
    pub fn check(&self, n: usize, maps: &[FinMap]) -> Result<()> {
        let ring = self.coproduct.algebra.ring();
        let w_max = self.coproduct.w_max;
        for w in 0..=w_max {
            if !is_iso(ring, &self.graded_piece(n, w)?)? {
                return Err(Error::InvalidStructure(format!("not bijective on length {w} at level {n}")));
            }
        }
        let keys = self.source_basis(n);
        let images: Vec<Combo<CWord>> = keys.iter().map(|k| self.apply_key(k)).collect();
        for (x, fx) in keys.iter().zip(&images) {
            for (y, fy) in keys.iter().zip(&images) {
                if self.weight(x) + self.weight(y) > w_max {
                    continue;
                }
                let lhs = self.apply(&self.q.mul_keys(n, x, y));
                if lhs != self.coproduct.product(fx, fy) {
                    return Err(Error::InvalidStructure(format!("not multiplicative on ({x:?}, {y:?})")));
                }
            }
        }
        for alpha in maps.iter().filter(|m| m.source() == n) {
            for (x, fx) in keys.iter().zip(&images) {
                let lhs = self.apply(&self.q.act(alpha, &Combo::basis(x.clone())));
                if lhs != self.coproduct.act(alpha, fx) {
                    return Err(Error::InvalidStructure(format!("does not commute with {alpha} on {x:?}")));
                }
            }
        }
        Ok(())
    }
}

/// `e_0 = a⊗1` and `e_i = da⊗v_i + e_0` in `Q^nZ<0,1>`.
pub fn disk_basis_vector(i: usize) -> Combo<QKey> {
    let mut e = Combo::basis(QKey::new(0, 0, Vec::new()));
    if i > 0 {
        e.add_term(QKey::new(1, 0, vec![i as u8]), BigInt::one());
    }
    e
}

/// `α(e_i) = e_{α(i)}` in `QZ<0,1>` for every set map between levels `≤ top`.
pub fn check_disk_permutation(ring: CoeffRing, top: usize) -> Result<()> {
    let q = QObject::new(&BoundedComplex::disk(ring, 0), 1);
    for n in 0..=top {
        if q.basis(n).len() != n + 1 {
            return Err(Error::InvalidStructure(format!("Q^{n}Z<0,1> has rank {} ≠ {}", q.basis(n).len(), n + 1)));
        }
        for m in 0..=top {
            for alpha in FinMap::all(n, m) {
                for i in 0..=n {
                    let lhs = q.act(&alpha, &disk_basis_vector(i));
                    let mut diff = lhs.minus(&disk_basis_vector(alpha.apply(i)));
                    ring.reduce_combo(&mut diff);
                    if !diff.is_zero() {
                        return Err(Error::InvalidStructure(format!("{alpha}(e_{i}) ≠ e_{}", alpha.apply(i))));
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> CoeffRing {
        CoeffRing::modular(2).unwrap()
    }

    #[test]
    fn normal_form_products() {
        let c = Coproduct::new(&StructAlgebra::upper_triangular(CoeffRing::Integers), 4);
        // e22[0]·e12[1]·e12[1] = 0 since e12² = 0
        assert!(c.product_words(&[(0, 2), (1, 1)], &[(1, 1)]).is_zero());
        // e12[0]·e22[0] = e12[0]
        assert_eq!(c.product_words(&[(0, 1)], &[(0, 2)]), Combo::basis(vec![(0, 1)]));
        let d = Coproduct::new(&StructAlgebra::split_idempotent(CoeffRing::Integers), 4);
        // e[0] e[1] · e[1] e[0] = e[0] e[1] e[0]
        assert_eq!(d.product_words(&[(0, 1), (1, 1)], &[(1, 1), (0, 1)]), Combo::basis(vec![(0, 1), (1, 1), (0, 1)]));
        assert_eq!(c.basis(1).len(), 1 + 4 + 8 + 16 + 32);
        assert_eq!(c.words_of_length(2, 2).len(), 3 * 2 * 4);
    }

    #[test]
    fn coproduct_is_a_fin_ring_in_range() {
        let c = Coproduct::new(&StructAlgebra::upper_triangular(z2()), 3);
        for n in 0..=2 {
            check_coproduct_level(&c, n).unwrap();
            for alpha in crate::fin_maps::generators(n).all() {
                check_coproduct_map(&c, &alpha).unwrap();
            }
        }
    }

    #[test]
    fn q_of_the_interval_is_a_free_sum() {
        check_disk_permutation(CoeffRing::Integers, 3).unwrap();
    }

    #[test]
    fn qomega_level_one_dual_numbers() {
        let iso = QOmegaIso::new(&StructAlgebra::dual_numbers(z2()), 3).unwrap();
        assert_eq!(iso.source_basis(1).len(), 7);
        assert_eq!(iso.coproduct().basis(1).len(), 7);
        iso.check(1, &crate::fin_maps::generators(1).all()).unwrap();
    }

    #[test]
    fn qomega_iso_levels_up_to_two() {
        for s in [StructAlgebra::dual_numbers(z2()), StructAlgebra::upper_triangular(z2())] {
            let iso = QOmegaIso::new(&s, 3).unwrap();
            for n in 0..=2 {
                iso.check(n, &crate::fin_maps::generators(n).all()).unwrap();
            }
        }
        let iso = QOmegaIso::new(&StructAlgebra::upper_triangular(CoeffRing::Integers), 2).unwrap();
        for n in 0..=2 {
            iso.check(n, &crate::fin_maps::generators(n).all()).unwrap();
        }
    }
}
