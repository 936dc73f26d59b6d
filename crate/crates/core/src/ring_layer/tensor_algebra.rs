//! Tensor DG-rings `TU`, the Fin-rings `T(QU_1) ∐ … ∐ T(QU_k)` and the
//! isomorphism onto `Q T(U_1 ⊕ … ⊕ U_k)` built from `υ`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::combo::Combo;
use crate::dold_kan_core::cosimplicial::LevelBasis;
use crate::dold_kan_core::qk::q_action;
use crate::dold_kan_core::{BaseComplex, FinObject, QKey};
use crate::error::{Error, Result};
use crate::exact_linear::{BoundedComplex, CoeffRing, FreeModule, Matrix};
use crate::fin_maps::FinMap;
use crate::tensor_exterior::{format_word, words};

use super::dg_ring::DGRing;
use super::fin_ring::{FinRing, QRing};
use super::monoidal::{upsilon, MKey, MultiQ};

/// A word `u_1 ⋯ u_k` in basis elements `(degree, index)` of `U`.
pub type UWord = Vec<(usize, usize)>;

fn sign(p: usize) -> BigInt {
    if p % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `TU` cut at word length `max_len` and degree `top`.
#[derive(Clone, Debug)]
pub struct TensorAlgebra {
    generators: BaseComplex,
    max_len: usize,
    words: Vec<LevelBasis<UWord>>,
    dg: DGRing,
}

fn uwords(u: &BaseComplex, max_len: usize, top: usize) -> Vec<Vec<UWord>> {
    let mut by_degree: Vec<Vec<UWord>> = vec![Vec::new(); top + 1];
    let mut frontier: Vec<UWord> = vec![Vec::new()];
    by_degree[0].push(Vec::new());
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            let d: usize = w.iter().map(|g| g.0).sum();
            for deg in 0..=u.top() {
                if d + deg > top {
                    continue;
                }
                for idx in 0..u.rank(deg) {
                    let mut v = w.clone();
                    v.push((deg, idx));
                    by_degree[d + deg].push(v.clone());
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    for b in &mut by_degree {
        b.sort();
    }
    by_degree
}

impl TensorAlgebra {
    pub fn new(u: &BoundedComplex, max_len: usize, top: usize) -> Result<Self> {
        let generators = BaseComplex::new(u, top);
        let by_degree = uwords(&generators, max_len, top);
        let words: Vec<LevelBasis<UWord>> = by_degree.into_iter().map(LevelBasis::new).collect();
        let label = |w: &UWord| -> String {
            if w.is_empty() {
                return "1".into();
            }
            let parts: Vec<String> = w.iter().map(|&(d, i)| u.module(d).expect("degree").label(i).to_string()).collect();
            parts.join(".")
        };
        let modules = words
            .iter()
            .map(|b| FreeModule::new(b.keys().iter().map(label).collect()))
            .collect::<Result<Vec<_>>>()?;
        let d = (0..top)
            .map(|p| {
                let cols: Vec<Vec<BigInt>> = words[p]
                    .keys()
                    .iter()
                    .map(|w| words[p + 1].project(&d_uword(&generators, w)))
                    .collect();
                Matrix::from_columns(words[p + 1].len(), &cols)
            })
            .collect();
        let complex = BoundedComplex::new(u.ring(), modules, d, false)?;
        let mut unit = vec![BigInt::from(0); words[0].len()];
        unit[words[0].position(&Vec::new()).expect("empty word")] = BigInt::one();
        let dg = {
            let words = &words;
            DGRing::build_unchecked(complex, unit, |x, y| {
                let mut w = words[x.0].keys()[x.1].clone();
                w.extend(words[y.0].keys()[y.1].iter().copied());
                match words[x.0 + y.0].position(&w) {
                    Some(k) if w.len() <= max_len => vec![(k, BigInt::one())],
                    _ => Vec::new(),
                }
            })
        };
        Ok(TensorAlgebra {
            generators,
            max_len,
            words,
            dg,
        })
    }

    /// `S(n) = T Z[n]`.
    pub fn sphere(ring: CoeffRing, n: usize, max_len: usize, top: usize) -> Result<Self> {
        TensorAlgebra::new(&BoundedComplex::sphere(ring, n), max_len, top)
    }

    /// `D(n) = T Z<n, n+1>`.
    pub fn disk(ring: CoeffRing, n: usize, max_len: usize, top: usize) -> Result<Self> {
        TensorAlgebra::new(&BoundedComplex::disk(ring, n), max_len, top)
    }

    pub fn dg(&self) -> &DGRing {
        &self.dg
    }

    pub fn generators(&self) -> &BaseComplex {
        &self.generators
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn top(&self) -> usize {
        self.dg.top()
    }

    pub fn position(&self, w: &UWord) -> Option<(usize, usize)> {
        let deg: usize = w.iter().map(|g| g.0).sum();
        if w.len() > self.max_len {
            return None;
        }
        self.words.get(deg)?.position(w).map(|i| (deg, i))
    }

    pub fn word(&self, b: (usize, usize)) -> &UWord {
        &self.words[b.0].keys()[b.1]
    }
}

/// `d(u_1⋯u_k) = Σ_m (−1)^{|u_1⋯u_{m−1}|} u_1⋯du_m⋯u_k`.
fn d_uword(u: &BaseComplex, w: &UWord) -> Combo<UWord> {
    let mut out = Combo::zero();
    let mut before = 0;
    for (m, &(deg, idx)) in w.iter().enumerate() {
        for (k, c) in u.d(deg, idx) {
            let mut v = w.clone();
            v[m] = (deg + 1, *k);
            out.add_term(v, c * sign(before));
        }
        before += deg;
    }
    out
}

/// A generator of `T(QU_1) ∐ … ∐ T(QU_k)`: a basis element of `QU_tag`.
pub type Tagged = (usize, QKey);

/// `T(QU_1) ∐ … ∐ T(QU_k)`, levelwise the free ring on the union of the
/// bases, cut at word length `max_len` and total degree `top`.
#[derive(Clone, Debug)]
pub struct FreeTQ {
    parts: Vec<BaseComplex>,
    max_len: usize,
    top: usize,
}

impl FreeTQ {
    pub fn new(parts: &[BoundedComplex], max_len: usize, top: usize) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Precondition("need at least one generating complex".into()));
        }
        Ok(FreeTQ {
            parts: parts.iter().map(|u| BaseComplex::new(u, top)).collect(),
            max_len,
            top,
        })
    }

    fn degree(w: &[Tagged]) -> usize {
        w.iter().map(|g| g.1.deg).sum()
    }

    fn generators(&self, n: usize) -> Vec<Tagged> {
        let mut out = Vec::new();
        for (tag, u) in self.parts.iter().enumerate() {
            for r in 0..=u.top() {
                let ws = words(r, n);
                for i in 0..u.rank(r) {
                    out.extend(ws.iter().map(|w| (tag, QKey::new(r, i, w.clone()))));
                }
            }
        }
        out
    }
}

impl FinObject for FreeTQ {
    type Key = Vec<Tagged>;

    fn ring(&self) -> CoeffRing {
        self.parts[0].ring()
    }

    fn basis(&self, n: usize) -> Vec<Vec<Tagged>> {
        let gens = self.generators(n);
        let mut out = vec![Vec::new()];
        let mut frontier: Vec<Vec<Tagged>> = vec![Vec::new()];
        for _ in 0..self.max_len {
            let mut next = Vec::new();
            for w in &frontier {
                let d = FreeTQ::degree(w);
                for g in &gens {
                    if d + g.1.deg <= self.top {
                        let mut v = w.clone();
                        v.push(g.clone());
                        next.push(v);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out.sort();
        out
    }

    /// `α` acts on each letter; terms above the top degree vanish.
    fn act_key(&self, alpha: &FinMap, key: &Vec<Tagged>) -> Combo<Vec<Tagged>> {
        let mut acc: Combo<Vec<Tagged>> = Combo::basis(Vec::new());
        for (tag, k) in key {
            let image = q_action(&self.parts[*tag], alpha, k);
            acc = acc.bilinear(&image, |w, g| {
                let mut v = w.clone();
                v.push((*tag, g.clone()));
                if FreeTQ::degree(&v) <= self.top {
                    Combo::basis(v)
                } else {
                    Combo::zero()
                }
            });
        }
        acc
    }

    fn label(&self, key: &Vec<Tagged>) -> String {
        if key.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = key
            .iter()
            .map(|(t, k)| format!("[{t}:a{}_{}⊗{}]", k.deg, k.idx, format_word(&k.word)))
            .collect();
        parts.join("")
    }
}

impl FinRing for FreeTQ {
    fn mul_keys(&self, _n: usize, x: &Vec<Tagged>, y: &Vec<Tagged>) -> Combo<Vec<Tagged>> {
        let mut w = x.clone();
        w.extend(y.iter().cloned());
        if w.len() <= self.max_len && FreeTQ::degree(&w) <= self.top {
            Combo::basis(w)
        } else {
            Combo::zero()
        }
    }

    fn unit(&self, _n: usize) -> Combo<Vec<Tagged>> {
        Combo::basis(Vec::new())
    }
}

/// `T(QU_1) ∐ … ∐ T(QU_k) → Q T(U_1 ⊕ … ⊕ U_k)`: a generator of `QU_t`
/// goes to the matching generator of `Q(⊕U)`, and words go to iterated `υ`.
pub struct QtIso {
    source: FreeTQ,
    target: TensorAlgebra,
    q: QRing,
    sum: MultiQ,
    offsets: Vec<Vec<usize>>,
}

impl QtIso {
    pub fn new(parts: &[BoundedComplex], max_len: usize, top: usize) -> Result<Self> {
        let source = FreeTQ::new(parts, max_len, top)?;
        let mut sum = parts[0].clone();
        for p in &parts[1..] {
            sum = sum.direct_sum(p)?;
        }
        let target = TensorAlgebra::new(&sum, max_len, top)?;
        let q = QRing::new(target.dg());
        let offsets = (0..parts.len())
            .map(|t| (0..=top).map(|r| parts[..t].iter().map(|p| p.rank(r)).sum()).collect())
            .collect();
        let sum_q = MultiQ::new(vec![target.generators().clone()])?;
        Ok(QtIso {
            source,
            target,
            q,
            sum: sum_q,
            offsets,
        })
    }

    pub fn source(&self) -> &FreeTQ {
        &self.source
    }

    pub fn target(&self) -> &QRing {
        &self.q
    }

    pub fn tensor_algebra(&self) -> &TensorAlgebra {
        &self.target
    }

    fn letter(&self, g: &Tagged) -> MKey {
        let (tag, k) = g;
        MKey {
            factors: vec![(k.deg, k.idx + self.offsets[*tag][k.deg])],
            word: k.word.clone(),
        }
    }

    pub fn apply_key(&self, key: &[Tagged]) -> Combo<QKey> {
        let top = self.target.top();
        if key.is_empty() {
            return self.q.unit(0);
        }
        let mut acc = Combo::basis(self.letter(&key[0]));
        for g in &key[1..] {
            acc = upsilon(&acc, &Combo::basis(self.letter(g)), &self.sum);
            acc.retain(|k| k.degree() <= top);
        }
        let mut out = Combo::zero();
        for (k, c) in acc.iter() {
            if let Some((deg, idx)) = self.target.position(&k.factors) {
                out.add_term(QKey::new(deg, idx, k.word.clone()), c.clone());
            }
        }
        out
    }

    pub fn apply(&self, x: &Combo<Vec<Tagged>>) -> Combo<QKey> {
        let mut out = x.map_linear(|k| self.apply_key(k));
        self.q.ring().reduce_combo(&mut out);
        out
    }

    /// On level `n`: leading terms biject the bases with coefficient 1 and
    /// all other terms have higher degree (so the map is invertible), the
    /// map is multiplicative and unital, and it commutes with the given maps.
    pub fn check(&self, n: usize, maps: &[FinMap]) -> Result<()> {
        let ring = self.q.ring();
        let src = self.source.basis(n);
        let tgt: HashMap<QKey, ()> = self.q.basis(n).into_iter().filter(|k| k.deg <= self.target.top()).map(|k| (k, ())).collect();
        let mut leading = Vec::new();
        for w in &src {
            let image = self.apply_key(w);
            let factors: UWord = w.iter().map(|g| self.letter(g).factors[0]).collect();
            let word: Vec<u8> = w.iter().flat_map(|g| g.1.word.iter().copied()).collect();
            let (deg, idx) = self
                .target
                .position(&factors)
                .ok_or_else(|| Error::InvalidStructure("word outside the tensor algebra".into()))?;
            let lead = QKey::new(deg, idx, word);
            if image.coeff(&lead) != BigInt::one() || image.keys().any(|k| k != &lead && k.deg <= deg) {
                return Err(Error::InvalidStructure(format!("map is not unitriangular at {w:?}")));
            }
            leading.push(lead);
        }
        leading.sort();
        let mut target: Vec<QKey> = tgt.into_keys().collect();
        target.sort();
        if leading != target {
            return Err(Error::InvalidStructure(format!("leading terms do not biject at level {n}")));
        }
        let mut diff = self.apply(&self.source.unit(n)).minus(&self.q.unit(n));
        ring.reduce_combo(&mut diff);
        if !diff.is_zero() {
            return Err(Error::InvalidStructure("unit not preserved".into()));
        }
        for x in &src {
            let fx = self.apply_key(x);
            for y in &src {
                let lhs = self.apply(&self.source.mul_keys(n, x, y));
                let rhs = self.q.mul(n, &fx, &self.apply_key(y));
                let mut d = lhs.minus(&rhs);
                ring.reduce_combo(&mut d);
                if !d.is_zero() {
                    return Err(Error::InvalidStructure(format!("not multiplicative on ({x:?}, {y:?})")));
                }
            }
        }
        for alpha in maps.iter().filter(|a| a.source() == n) {
            for x in &src {
                let lhs = self.apply(&self.source.act(alpha, &Combo::basis(x.clone())));
                let rhs = self.q.act(alpha, &self.apply_key(x));
                let mut d = lhs.minus(&rhs);
                ring.reduce_combo(&mut d);
                if !d.is_zero() {
                    return Err(Error::InvalidStructure(format!("does not commute with {alpha} on {x:?}")));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: CoeffRing = CoeffRing::Integers;

    #[test]
    fn disk_algebra_is_acyclic() {
        let d = TensorAlgebra::disk(Z, 0, 3, 3).unwrap();
        d.dg().check().unwrap();
        let h = d.dg().complex().cohomology().unwrap();
        assert_eq!(h.degrees[0].betti, 1);
        assert!(h.degrees[1].is_zero());
        assert!(h.degrees[2].is_zero());
    }

    #[test]
    fn sphere_algebra_has_zero_differential() {
        let s = TensorAlgebra::sphere(Z, 0, 4, 0).unwrap();
        assert_eq!(s.dg().ranks(), vec![5]);
        assert!(s.dg().complex().differentials().iter().all(Matrix::is_zero));
    }

    #[test]
    fn qt_iso_on_small_disk() {
        let iso = QtIso::new(&[BoundedComplex::disk(Z, 0)], 2, 2).unwrap();
        let mut maps = crate::fin_maps::generators(0).all();
        maps.extend(crate::fin_maps::generators(1).all());
        for n in 0..=1 {
            iso.check(n, &maps).unwrap();
        }
    }
}
