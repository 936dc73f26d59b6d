//! Fin-rings: Fin-objects whose levels are rings and on which every map
//! acts by ring homomorphisms. Includes `(QA, ∘)`, `KA`, the simplicial
//! view, homotopy groups and the shuffle product.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combo::Combo;
use crate::dold_kan_core::{BaseComplex, FinObject, QKey};
use crate::error::{Error, Result};
use crate::exact_linear::complex::homology_at;
use crate::exact_linear::{smith, CoeffRing, DegreeHomology, HomologySummary, Matrix};
use crate::fin_maps::FinMap;
use crate::tensor_exterior::{concat, project_word, sort_sign, subsets, theta_word, words};

use super::dg_ring::DGRing;

pub trait FinRing: FinObject {
    fn mul_keys(&self, n: usize, x: &Self::Key, y: &Self::Key) -> Combo<Self::Key>;

    fn unit(&self, n: usize) -> Combo<Self::Key>;

    fn mul(&self, n: usize, x: &Combo<Self::Key>, y: &Combo<Self::Key>) -> Combo<Self::Key> {
        let mut out = x.bilinear(y, |a, b| self.mul_keys(n, a, b));
        self.ring().reduce_combo(&mut out);
        out
    }
}

fn same<K: Ord + Clone>(ring: CoeffRing, a: &Combo<K>, b: &Combo<K>) -> bool {
    let mut d = a.minus(b);
    ring.reduce_combo(&mut d);
    d.is_zero()
}

/// Associativity and unit laws on all basis triples of level `n`.
pub fn check_ring_level<R: FinRing>(r: &R, n: usize) -> Result<()> {
    let basis = r.basis(n);
    let one = r.unit(n);
    let ring = r.ring();
    for x in &basis {
        let ex = Combo::basis(x.clone());
        if !same(ring, &r.mul(n, &one, &ex), &ex) || !same(ring, &r.mul(n, &ex, &one), &ex) {
            return Err(Error::InvalidStructure(format!("unit law fails on {x:?} at level {n}")));
        }
        for y in &basis {
            let xy = r.mul_keys(n, x, y);
            for z in &basis {
                let ez = Combo::basis(z.clone());
                let l = r.mul(n, &xy, &ez);
                let rr = r.mul(n, &ex, &r.mul_keys(n, y, z));
                if !same(ring, &l, &rr) {
                    return Err(Error::InvalidStructure(format!(
                        "associativity fails on ({x:?}, {y:?}, {z:?}) at level {n}"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// `α(xy) = α(x)α(y)` on all basis pairs and `α(1) = 1`.
pub fn check_ring_map<R: FinRing>(r: &R, alpha: &FinMap) -> Result<()> {
    let (n, m) = (alpha.source(), alpha.target());
    let ring = r.ring();
    if !same(ring, &r.act(alpha, &r.unit(n)), &r.unit(m)) {
        return Err(Error::InvalidStructure(format!("{alpha} does not preserve the unit")));
    }
    let basis = r.basis(n);
    for x in &basis {
        let ax = r.act(alpha, &Combo::basis(x.clone()));
        for y in &basis {
            let lhs = r.act(alpha, &r.mul_keys(n, x, y));
            let rhs = r.mul(m, &ax, &r.act(alpha, &Combo::basis(y.clone())));
            if !same(ring, &lhs, &rhs) {
                return Err(Error::InvalidStructure(format!("{alpha} is not multiplicative on ({x:?}, {y:?})")));
            }
        }
    }
    Ok(())
}

/// Ring laws on levels `0..=top` and multiplicativity of every generator.
pub fn check_fin_ring<R: FinRing>(r: &R, top: usize) -> Result<()> {
    for n in 0..=top {
        check_ring_level(r, n)?;
    }
    for n in 0..=top {
        let mut maps: Vec<FinMap> = FinMap::cyclic(n).into_iter().collect();
        if n < top {
            maps.extend((0..=n + 1).map(|i| FinMap::coface(n, i).expect("coface")));
        }
        if n > 0 {
            maps.extend((0..n).map(|j| FinMap::codegeneracy(n, j).expect("codegeneracy")));
            maps.push(FinMap::mu_top(n).expect("mu_top"));
        }
        for alpha in maps {
            check_ring_map(r, &alpha)?;
        }
    }
    Ok(())
}

/// `(QA, ∘)` for a DG-ring `A`.
#[derive(Clone, Debug)]
pub struct QRing {
    dg: DGRing,
    base: BaseComplex,
}

impl QRing {
    pub fn new(dg: &DGRing) -> Self {
        QRing {
            base: BaseComplex::new(dg.complex(), dg.top()),
            dg: dg.clone(),
        }
    }

    pub fn dg(&self) -> &DGRing {
        &self.dg
    }

    pub fn base(&self) -> &BaseComplex {
        &self.base
    }

    /// `a ⊗ x` for a degree-`|x|` element `a` given on the basis.
    pub fn embed(&self, a: &Combo<(usize, usize)>, x: &[u8]) -> Combo<QKey> {
        a.map_keys(|&(deg, idx)| QKey::new(deg, idx, x.to_vec()))
    }
}

impl FinObject for QRing {
    type Key = QKey;

    fn ring(&self) -> CoeffRing {
        self.dg.ring()
    }

    fn basis(&self, n: usize) -> Vec<QKey> {
        let mut out = Vec::new();
        for r in 0..=self.dg.top() {
            let ws = words(r, n);
            for i in 0..self.dg.rank(r) {
                out.extend(ws.iter().map(|w| QKey::new(r, i, w.clone())));
            }
        }
        out
    }

    fn act_key(&self, alpha: &FinMap, key: &QKey) -> Combo<QKey> {
        crate::dold_kan_core::qk::q_action(&self.base, alpha, key)
    }
}

impl FinRing for QRing {
    /// `(ω⊗x)∘(η⊗y) = ωη⊗xy + (−1)^{|x|} ωdη⊗θ(x)y`.
    fn mul_keys(&self, _n: usize, x: &QKey, y: &QKey) -> Combo<QKey> {
        let mut out = Combo::zero();
        let xy = concat(&x.word, &y.word);
        for (k, c) in self.dg.mul_basis((x.deg, x.idx), (y.deg, y.idx)) {
            out.add_term(QKey::new(x.deg + y.deg, k, xy.clone()), c);
        }
        let sign = if x.word.len() % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let theta = theta_word(&x.word);
        for (j, c) in self.dg.d_basis((y.deg, y.idx)) {
            for (k, e) in self.dg.mul_basis((x.deg, x.idx), (y.deg + 1, j)) {
                for (t, f) in theta.iter() {
                    out.add_term(QKey::new(x.deg + y.deg + 1, k, concat(t, &y.word)), &c * &e * f * &sign);
                }
            }
        }
        out
    }

    fn unit(&self, _n: usize) -> Combo<QKey> {
        self.embed(&self.dg.unit(), &[])
    }
}

/// `KA` with `(a⊗x)(b⊗y) = ab⊗x∧y`.
#[derive(Clone, Debug)]
pub struct KRing {
    dg: DGRing,
    base: BaseComplex,
}

impl KRing {
    pub fn new(dg: &DGRing) -> Self {
        KRing {
            base: BaseComplex::new(dg.complex(), dg.top()),
            dg: dg.clone(),
        }
    }
}

impl FinObject for KRing {
    type Key = QKey;

    fn ring(&self) -> CoeffRing {
        self.dg.ring()
    }

    fn basis(&self, n: usize) -> Vec<QKey> {
        let mut out = Vec::new();
        for r in 0..=self.dg.top() {
            let ws = subsets(r, n);
            for i in 0..self.dg.rank(r) {
                out.extend(ws.iter().map(|w| QKey::new(r, i, w.clone())));
            }
        }
        out
    }

    fn act_key(&self, alpha: &FinMap, key: &QKey) -> Combo<QKey> {
        crate::dold_kan_core::p_hat(&crate::dold_kan_core::qk::q_action(&self.base, alpha, key))
    }
}

impl FinRing for KRing {
    fn mul_keys(&self, _n: usize, x: &QKey, y: &QKey) -> Combo<QKey> {
        let mut out = Combo::zero();
        if let Some((s, w)) = sort_sign(&concat(&x.word, &y.word)) {
            for (k, c) in self.dg.mul_basis((x.deg, x.idx), (y.deg, y.idx)) {
                out.add_term(QKey::new(x.deg + y.deg, k, w.clone()), c * s);
            }
        }
        out
    }

    fn unit(&self, _n: usize) -> Combo<QKey> {
        self.dg.unit().map_keys(|&(deg, idx)| QKey::new(deg, idx, Vec::new()))
    }
}

/// Keeps the `A ⊠ TV` part of a product: `a⊗x · b⊗y ↦ ab⊗xy`.
pub fn graded_product(dg: &DGRing, x: &QKey, y: &QKey) -> Combo<QKey> {
    let xy = concat(&x.word, &y.word);
    Combo::from_terms(
        dg.mul_basis((x.deg, x.idx), (y.deg, y.idx))
            .into_iter()
            .map(|(k, c)| (QKey::new(x.deg + y.deg, k, xy.clone()), c)),
    )
}

/// `p̂` on a single word: `a⊗x ↦ a⊗p(x)`.
pub fn p_hat_key(k: &QKey) -> Combo<QKey> {
    project_word(&k.word).map_keys(|w| QKey::new(k.deg, k.idx, w.clone()))
}

/// Faces `d_i = μ_i` (`d_n` the map sending `n` to `0`) and degeneracies
/// `s_j = ∂_{j+1}` of the simplicial view.
pub fn face(n: usize, i: usize) -> FinMap {
    if i < n {
        FinMap::codegeneracy(n, i).expect("codegeneracy")
    } else {
        FinMap::mu_top(n).expect("mu_top")
    }
}

pub fn degeneracy(n: usize, j: usize) -> FinMap {
    FinMap::coface(n, j + 1).expect("coface")
}

/// `b = Σ_i (−1)^i d_i: R_n → R_{n-1}`.
pub fn simplicial_boundary<X: FinObject>(x: &X, n: usize) -> Result<Matrix> {
    let rows = if n == 0 { 0 } else { x.basis(n - 1).len() };
    let mut m = Matrix::zeros(rows, x.basis(n).len());
    if n == 0 {
        return Ok(m);
    }
    for i in 0..=n {
        let a = x.action_matrix(&face(n, i))?;
        m = if i % 2 == 0 { m.plus(&a) } else { m.minus(&a) };
    }
    Ok(m.reduce(x.ring()))
}

/// `π_n` for `n ≤ top`, from the unnormalized chains `(R_n, b)`.
pub fn homotopy_groups<X: FinObject>(x: &X, top: usize) -> Result<HomologySummary> {
    let ring = x.ring();
    let mut degrees: Vec<DegreeHomology> = Vec::new();
    for n in 0..=top {
        let incoming = simplicial_boundary(x, n + 1)?;
        let outgoing = (n > 0).then(|| simplicial_boundary(x, n)).transpose()?;
        let mut h = homology_at(ring, x.basis(n).len(), Some(&incoming), outgoing.as_ref())?;
        h.degree = n;
        degrees.push(h);
    }
    Ok(HomologySummary { ring, degrees })
}

/// `(p, q)`-shuffles as `(μ, ν)` with the sign of the shuffle permutation.
pub fn shuffles(p: usize, q: usize) -> Vec<(Vec<usize>, Vec<usize>, i32)> {
    let mut out = Vec::new();
    for mu in subsets(p, p + q) {
        let mu: Vec<usize> = mu.iter().map(|&x| x as usize - 1).collect();
        let nu: Vec<usize> = (0..p + q).filter(|i| !mu.contains(i)).collect();
        // inversions of the permutation listing μ then ν
        let inversions: usize = mu.iter().map(|&m| nu.iter().filter(|&&v| v < m).count()).sum();
        out.push((mu, nu, if inversions % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// The composite `s_{k_r} ⋯ s_{k_1}` from level `n`, applying `s_{k_1}` first.
fn degeneracies(n: usize, ks: &[usize]) -> FinMap {
    let mut f = FinMap::identity(n);
    let mut level = n;
    for &k in ks {
        f = f.then(&degeneracy(level, k)).expect("composable");
        level += 1;
    }
    f
}

/// `x ⋆ y = Σ sign(μ,ν) s_ν(x) · s_μ(y)` in `R_{p+q}`.
pub fn shuffle_product<R: FinRing>(r: &R, p: usize, x: &Combo<R::Key>, q: usize, y: &Combo<R::Key>) -> Combo<R::Key> {
    let mut out = Combo::zero();
    for (mu, nu, s) in shuffles(p, q) {
        let sx = r.act(&degeneracies(p, &nu), x);
        let sy = r.act(&degeneracies(q, &mu), y);
        out.add_scaled(&r.mul(p + q, &sx, &sy), &BigInt::from(s));
    }
    r.ring().reduce_combo(&mut out);
    out
}

/// Whether `z ∈ R_n` is `b` of something in `R_{n+1}`.
pub fn is_boundary<X: FinObject>(x: &X, n: usize, z: &Combo<X::Key>) -> Result<bool> {
    let b = simplicial_boundary(x, n + 1)?;
    let v = x.level_basis(n).coords(z)?;
    let target = Matrix::from_columns(v.len(), &[v]);
    match smith::solve(x.ring(), &b, &target) {
        Ok(_) => Ok(true),
        Err(Error::NoSolution(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

pub fn is_cycle<X: FinObject>(x: &X, n: usize, z: &Combo<X::Key>) -> Result<bool> {
    if n == 0 {
        return Ok(true);
    }
    let b = simplicial_boundary(x, n)?;
    let v = x.level_basis(n).coords(z)?;
    Ok(b.apply(&v).iter().all(|c| x.ring().reduce(c).is_zero()))
}

/// Connes' `B = ∂_0 Σ_i (−1)^{ni} t^i` from level `n` to `n+1`.
pub fn connes_operator<X: FinObject>(x: &X, n: usize, z: &Combo<X::Key>) -> Combo<X::Key> {
    let mut sum = Combo::zero();
    for i in 0..=n {
        let sign = BigInt::from(if (n * i) % 2 == 0 { 1 } else { -1 });
        sum.add_scaled(&x.act(&FinMap::cyclic_power(n, i), z), &sign);
    }
    x.act(&FinMap::coface(n, 0).expect("coface"), &sum)
}

fn degenerate_span<X: FinObject>(x: &X, n: usize) -> Result<Option<Matrix>> {
    let mut span: Option<Matrix> = None;
    for j in 0..n {
        let m = x.action_matrix(&degeneracy(n - 1, j))?;
        span = Some(match span {
            None => m,
            Some(s) => s.hstack(&m)?,
        });
    }
    Ok(span)
}

fn in_column_span<X: FinObject>(x: &X, n: usize, span: Option<Matrix>, z: &Combo<X::Key>) -> Result<bool> {
    let ring = x.ring();
    let v = x.level_basis(n).coords(z)?;
    if v.iter().all(|e| ring.is_zero(e)) {
        return Ok(true);
    }
    let Some(span) = span else { return Ok(false) };
    match smith::solve(ring, &span, &Matrix::from_columns(v.len(), &[v])) {
        Ok(_) => Ok(true),
        Err(Error::NoSolution(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Whether `z ∈ R_n` lies in the span of the degeneracies `s_j R_{n-1}`.
pub fn is_degenerate<X: FinObject>(x: &X, n: usize, z: &Combo<X::Key>) -> Result<bool> {
    in_column_span(x, n, degenerate_span(x, n)?, z)
}

/// Whether `z ∈ R_n` is a boundary plus a degenerate chain, so that it
/// vanishes in the homology of the normalized complex.
pub fn is_boundary_mod_degenerate<X: FinObject>(x: &X, n: usize, z: &Combo<X::Key>) -> Result<bool> {
    let b = simplicial_boundary(x, n + 1)?;
    let span = match degenerate_span(x, n)? {
        None => b,
        Some(s) => b.hstack(&s)?,
    };
    in_column_span(x, n, Some(span), z)
}

/// `πR` with the shuffle product, read through representatives.
pub struct GradedHomotopyRing<'a, R: FinRing> {
    ring: &'a R,
    top: usize,
}

impl<'a, R: FinRing> GradedHomotopyRing<'a, R> {
    pub fn new(ring: &'a R, top: usize) -> Self {
        GradedHomotopyRing { ring, top }
    }

    pub fn groups(&self) -> Result<HomologySummary> {
        homotopy_groups(self.ring, self.top)
    }

    pub fn star(&self, p: usize, x: &Combo<R::Key>, q: usize, y: &Combo<R::Key>) -> Result<Combo<R::Key>> {
        if p + q > self.top {
            return Err(Error::Truncation(format!("product lands in degree {} > {}", p + q, self.top)));
        }
        Ok(shuffle_product(self.ring, p, x, q, y))
    }

    /// Whether two cycles of degree `n` define the same class.
    pub fn same_class(&self, n: usize, x: &Combo<R::Key>, y: &Combo<R::Key>) -> Result<bool> {
        is_boundary(self.ring, n, &x.minus(y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor_exterior::epsilon;

    const Z: CoeffRing = CoeffRing::Integers;

    #[test]
    fn shuffle_counts_and_signs() {
        assert_eq!(shuffles(1, 1).len(), 2);
        assert_eq!(shuffles(2, 1).len(), 3);
        let s: i32 = shuffles(1, 1).iter().map(|t| t.2).sum();
        assert_eq!(s, 0);
    }

    #[test]
    fn q_ring_is_a_fin_ring() {
        let a = DGRing::truncated_polynomial(Z, 1, 3, 1, 2).unwrap();
        let q = QRing::new(&a);
        check_fin_ring(&q, 2).unwrap();
        let k = KRing::new(&a);
        check_fin_ring(&k, 2).unwrap();
    }

    #[test]
    fn epsilons_multiply_under_shuffle() {
        let q = QRing::new(&DGRing::truncated_polynomial(Z, 1, 4, 0, 3).unwrap());
        // x^m ⊗ ε_m
        let l = |m: usize| epsilon(m).terms.map_keys(|w| QKey::new(m, 0, w.clone()));
        let h = GradedHomotopyRing::new(&q, 3);
        let prod = h.star(1, &l(1), 1, &l(1)).unwrap();
        assert!(is_cycle(&q, 2, &prod).unwrap());
        assert!(h.same_class(2, &prod, &l(2)).unwrap());
        let prod = h.star(1, &l(1), 2, &l(2)).unwrap();
        assert!(h.same_class(3, &prod, &l(3)).unwrap());
    }
}
