//! Cosimplicial and Fin-abelian groups with free levels, and their
//! normalization.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::combo::Combo;
use crate::error::{Error, Result};
use crate::exact_linear::complex::{matrix_from_json, matrix_to_json};
use crate::exact_linear::{smith, BoundedComplex, CoeffRing, FreeModule, HomologySummary, Matrix};
use crate::fin_maps::FinMap;
use crate::tensor_exterior::{act_word, words, Word};

/// A functor from Fin (or only Δ) to free modules, given by a basis per
/// level and the action of a map on basis elements.
pub trait FinObject {
    type Key: Ord + Clone + Hash + fmt::Debug;

    fn ring(&self) -> CoeffRing;

    fn basis(&self, n: usize) -> Vec<Self::Key>;

    /// `α` applied to a basis element of level `α.source()`.
    fn act_key(&self, alpha: &FinMap, key: &Self::Key) -> Combo<Self::Key>;

    /// Highest level with a known basis, if the object is bounded.
    fn max_level(&self) -> Option<usize> {
        None
    }

    /// Whether arbitrary set maps act, or only monotone ones.
    fn fin_enabled(&self) -> bool {
        true
    }

    fn label(&self, key: &Self::Key) -> String {
        format!("{key:?}")
    }

    fn act(&self, alpha: &FinMap, x: &Combo<Self::Key>) -> Combo<Self::Key> {
        let mut out = x.map_linear(|k| self.act_key(alpha, k));
        self.ring().reduce_combo(&mut out);
        out
    }

    fn level_basis(&self, n: usize) -> LevelBasis<Self::Key> {
        LevelBasis::new(self.basis(n))
    }

    /// Matrix of `α` in the level bases.
    fn action_matrix(&self, alpha: &FinMap) -> Result<Matrix> {
        if !self.fin_enabled() && !alpha.is_monotone() {
            return Err(Error::Precondition(format!("{alpha} is not monotone")));
        }
        let src = self.level_basis(alpha.source());
        let tgt = self.level_basis(alpha.target());
        let mut m = Matrix::zeros(tgt.len(), src.len());
        for (j, key) in src.keys().iter().enumerate() {
            for (k, c) in self.act_key(alpha, key).iter() {
                let i = tgt.position(k).ok_or_else(|| {
                    Error::InvalidStructure(format!("{alpha} sends {key:?} outside the basis ({k:?})"))
                })?;
                m[(i, j)] += c;
            }
        }
        Ok(m.reduce(self.ring()))
    }
}

/// An ordered basis with reverse lookup.
#[derive(Clone, Debug)]
pub struct LevelBasis<K: Ord + Clone + Hash> {
    keys: Vec<K>,
    index: HashMap<K, usize>,
}

impl<K: Ord + Clone + Hash + fmt::Debug> LevelBasis<K> {
    pub fn new(keys: Vec<K>) -> Self {
        let index = keys.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect();
        LevelBasis { keys, index }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn keys(&self) -> &[K] {
        &self.keys
    }

    pub fn position(&self, k: &K) -> Option<usize> {
        self.index.get(k).copied()
    }

    pub fn coords(&self, x: &Combo<K>) -> Result<Vec<BigInt>> {
        let mut v = vec![BigInt::zero(); self.keys.len()];
        for (k, c) in x.iter() {
            let i = self
                .position(k)
                .ok_or_else(|| Error::InvalidStructure(format!("{k:?} is not a basis element")))?;
            v[i] += c;
        }
        Ok(v)
    }

    /// Coordinates, silently dropping keys outside the basis.
    pub fn project(&self, x: &Combo<K>) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.keys.len()];
        for (k, c) in x.iter() {
            if let Some(i) = self.position(k) {
                v[i] += c;
            }
        }
        v
    }

    pub fn combo(&self, v: &[BigInt]) -> Combo<K> {
        Combo::from_terms(self.keys.iter().cloned().zip(v.iter().cloned()))
    }
}

/// `α(β(x)) = (αβ)(x)` on every basis element, for a list of composable pairs.
pub fn check_functorial<X: FinObject>(x: &X, pairs: &[(FinMap, FinMap)]) -> Result<()> {
    for (first, second) in pairs {
        let composite = first.then(second)?;
        for key in x.basis(first.source()) {
            let two = x.act(second, &x.act_key(first, &key));
            let mut once = x.act_key(&composite, &key);
            x.ring().reduce_combo(&mut once);
            if two != once {
                return Err(Error::InvalidStructure(format!(
                    "functoriality fails for {first} then {second} on {key:?}: {two:?} vs {once:?}"
                )));
            }
        }
    }
    Ok(())
}

/// All composable pairs of generators through levels `0..=top`.
pub fn generator_pairs(top: usize, with_fin: bool) -> Vec<(FinMap, FinMap)> {
    let gens = |n: usize| -> Vec<FinMap> {
        let mut g = Vec::new();
        if n < top {
            g.extend((0..=n + 1).map(|i| FinMap::coface(n, i).expect("coface")));
        }
        if n >= 1 {
            g.extend((0..n).map(|j| FinMap::codegeneracy(n, j).expect("codegeneracy")));
            if with_fin {
                g.push(FinMap::mu_top(n).expect("mu_top"));
                g.push(FinMap::cyclic(n).expect("cyclic"));
            }
        }
        g
    };
    let mut out = Vec::new();
    for n in 0..=top {
        for f in gens(n) {
            for g in gens(f.target()) {
                out.push((f.clone(), g));
            }
        }
    }
    out
}

/// A cosimplicial group stored as generator matrices on levels `0..=top`.
/// When Fin acts, the adjacent transpositions are stored too, and any set
/// map acts through its factorization as monotone after permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosimplicialAb {
    ring: CoeffRing,
    levels: Vec<FreeModule>,
    /// `cofaces[n][i]`: level `n` to `n + 1`, for `n < top`.
    cofaces: Vec<Vec<Matrix>>,
    /// `codegeneracies[n][j]`: level `n` to `n - 1`; empty at `n = 0`.
    codegeneracies: Vec<Vec<Matrix>>,
    /// `swaps[n][i]` exchanges `i` and `i + 1` on level `n`.
    swaps: Option<Vec<Vec<Matrix>>>,
}

impl CosimplicialAb {
    pub fn from_object<X: FinObject>(x: &X, top: usize) -> Result<Self> {
        let levels = (0..=top)
            .map(|n| FreeModule::new(x.basis(n).iter().map(|k| x.label(k)).collect()))
            .collect::<Result<Vec<_>>>()?;
        let mut cofaces = Vec::new();
        let mut codegeneracies = Vec::new();
        let mut swaps = Vec::new();
        for n in 0..=top {
            let mut cf = Vec::new();
            if n < top {
                for i in 0..=n + 1 {
                    cf.push(x.action_matrix(&FinMap::coface(n, i)?)?);
                }
            }
            cofaces.push(cf);
            let mut cd = Vec::new();
            for j in 0..n {
                cd.push(x.action_matrix(&FinMap::codegeneracy(n, j)?)?);
            }
            codegeneracies.push(cd);
            let mut sw = Vec::new();
            if x.fin_enabled() {
                for i in 0..n {
                    sw.push(x.action_matrix(&transposition(n, i))?);
                }
            }
            swaps.push(sw);
        }
        let c = CosimplicialAb {
            ring: x.ring(),
            levels,
            cofaces,
            codegeneracies,
            swaps: x.fin_enabled().then_some(swaps),
        };
        c.check_identities()?;
        Ok(c)
    }

    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn rank(&self, n: usize) -> usize {
        self.levels.get(n).map_or(0, FreeModule::rank)
    }

    pub fn coface(&self, n: usize, i: usize) -> Option<&Matrix> {
        self.cofaces.get(n)?.get(i)
    }

    pub fn codegeneracy(&self, n: usize, j: usize) -> Option<&Matrix> {
        self.codegeneracies.get(n)?.get(j)
    }

    /// The cosimplicial identities as matrix equations.
    pub fn check_identities(&self) -> Result<()> {
        let ring = self.ring;
        let eq = |a: Matrix, b: Matrix, what: String| -> Result<()> {
            if a.eq_in(&b, ring) {
                Ok(())
            } else {
                Err(Error::InvalidStructure(format!("cosimplicial identity fails: {what}")))
            }
        };
        let top = self.top();
        for n in 0..top {
            // ∂_j ∂_i = ∂_i ∂_{j-1} for i < j, from level n
            if n + 1 < top {
                for j in 0..=n + 2 {
                    for i in 0..j {
                        eq(
                            self.cofaces[n + 1][j].dot(&self.cofaces[n][i]),
                            self.cofaces[n + 1][i].dot(&self.cofaces[n][j - 1]),
                            format!("d{j} d{i} at level {n}"),
                        )?;
                    }
                }
            }
            // μ_j ∂_i on level n (lands in level n)
            for i in 0..=n + 1 {
                for j in 0..=n {
                    let lhs = self.codegeneracies[n + 1][j].dot(&self.cofaces[n][i]);
                    let rhs = if i < j {
                        self.cofaces[n - 1][i].dot(&self.codegeneracies[n][j - 1])
                    } else if i == j || i == j + 1 {
                        Matrix::identity(self.rank(n))
                    } else {
                        self.cofaces[n - 1][i - 1].dot(&self.codegeneracies[n][j])
                    };
                    eq(lhs, rhs, format!("s{j} d{i} at level {n}"))?;
                }
            }
        }
        for n in 2..=top {
            // μ_j μ_i = μ_i μ_{j+1} for i <= j
            for i in 0..n - 1 {
                for j in i..n - 1 {
                    eq(
                        self.codegeneracies[n - 1][j].dot(&self.codegeneracies[n][i]),
                        self.codegeneracies[n - 1][i].dot(&self.codegeneracies[n][j + 1]),
                        format!("s{j} s{i} at level {n}"),
                    )?;
                }
            }
        }
        Ok(())
    }

    /// Matrix of any map whose source and target lie in `0..=top`.
    pub fn map_matrix(&self, alpha: &FinMap) -> Result<Matrix> {
        if alpha.source() > self.top() || alpha.target() > self.top() {
            return Err(Error::Truncation(format!("{alpha} leaves levels 0..={}", self.top())));
        }
        let (perm, mono) = split_permutation(alpha);
        let mut m = Matrix::identity(self.rank(alpha.source()));
        if !perm.is_empty() {
            let swaps = self
                .swaps
                .as_ref()
                .ok_or_else(|| Error::Precondition(format!("{alpha} is not monotone")))?;
            for &i in &perm {
                m = swaps[alpha.source()][i].dot(&m);
            }
        }
        let (codeg, cofaces) = mono.monotone_factorization()?;
        for c in codeg {
            let j = (0..c.source()).find(|&j| c.apply(j) == c.apply(j + 1)).expect("collapse");
            m = self.codegeneracies[c.source()][j].dot(&m);
        }
        for c in cofaces {
            let i = (0..=c.target()).find(|&i| !c.values().contains(&i)).expect("skip");
            m = self.cofaces[c.source()][i].dot(&m);
        }
        Ok(m.reduce(self.ring))
    }

    pub fn to_json(&self) -> Value {
        let mats = |v: &Vec<Vec<Matrix>>| -> Value {
            Value::Array(
                v.iter()
                    .map(|l| Value::Array(l.iter().map(matrix_to_json).collect()))
                    .collect(),
            )
        };
        json!({
            "ring": self.ring.to_string(),
            "ranks": (0..=self.top()).map(|n| self.rank(n)).collect::<Vec<_>>(),
            "cofaces": mats(&self.cofaces),
            "codegeneracies": mats(&self.codegeneracies),
            "swaps": self.swaps.as_ref().map(mats),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let ring: CoeffRing = v.get("ring").and_then(Value::as_str).unwrap_or("z").parse()?;
        let ranks: Vec<usize> = serde_json::from_value(
            v.get("ranks")
                .cloned()
                .ok_or_else(|| Error::Parse("cosimplicial: missing ranks".into()))?,
        )?;
        if ranks.is_empty() {
            return Err(Error::Parse("cosimplicial: no levels".into()));
        }
        let top = ranks.len() - 1;
        let read = |name: &str, shape: &dyn Fn(usize, usize) -> Option<(usize, usize)>| -> Result<Vec<Vec<Matrix>>> {
            let arr = v
                .get(name)
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse(format!("cosimplicial: missing {name}")))?;
            if arr.len() != ranks.len() {
                return Err(Error::Parse(format!("cosimplicial: {name} needs one entry per level")));
            }
            arr.iter()
                .enumerate()
                .map(|(n, level)| {
                    let ms = level.as_array().ok_or_else(|| Error::Parse(format!("{name}[{n}]")))?;
                    ms.iter()
                        .enumerate()
                        .map(|(i, m)| {
                            let (r, c) = shape(n, i)
                                .ok_or_else(|| Error::Parse(format!("{name}[{n}] has too many maps")))?;
                            matrix_from_json(m, r, c)
                        })
                        .collect()
                })
                .collect()
        };
        let cofaces = read("cofaces", &|n, i| (n < top && i <= n + 1).then(|| (ranks[n + 1], ranks[n])))?;
        let codegeneracies = read("codegeneracies", &|n, j| (j < n).then(|| (ranks[n - 1], ranks[n])))?;
        let swaps = match v.get("swaps") {
            Some(Value::Null) | None => None,
            Some(_) => Some(read("swaps", &|n, i| (i < n).then(|| (ranks[n], ranks[n])))?),
        };
        for n in 0..=top {
            let want = if n < top { n + 2 } else { 0 };
            if cofaces[n].len() != want || codegeneracies[n].len() != n {
                return Err(Error::Parse(format!("cosimplicial: wrong generator count at level {n}")));
            }
        }
        let c = CosimplicialAb {
            ring,
            levels: ranks.iter().enumerate().map(|(n, &r)| FreeModule::numbered(&format!("x{n}_"), r)).collect(),
            cofaces: cofaces.into_iter().map(|l| l.into_iter().map(|m| m.reduce(ring)).collect()).collect(),
            codegeneracies: codegeneracies
                .into_iter()
                .map(|l| l.into_iter().map(|m| m.reduce(ring)).collect())
                .collect(),
            swaps,
        };
        c.check_identities()?;
        Ok(c)
    }
}

impl FinObject for CosimplicialAb {
    type Key = usize;

    fn ring(&self) -> CoeffRing {
        self.ring
    }

    fn basis(&self, n: usize) -> Vec<usize> {
        (0..self.rank(n)).collect()
    }

    fn act_key(&self, alpha: &FinMap, key: &usize) -> Combo<usize> {
        let m = self.map_matrix(alpha).expect("map within stored levels");
        Combo::from_terms((0..m.rows()).map(|i| (i, m[(i, *key)].clone())))
    }

    fn max_level(&self) -> Option<usize> {
        Some(self.top())
    }

    fn fin_enabled(&self) -> bool {
        self.swaps.is_some()
    }

    fn label(&self, key: &usize) -> String {
        key.to_string()
    }

    fn action_matrix(&self, alpha: &FinMap) -> Result<Matrix> {
        self.map_matrix(alpha)
    }
}

/// The transposition of `i` and `i + 1` on `[n]`.
pub fn transposition(n: usize, i: usize) -> FinMap {
    let mut v: Vec<usize> = (0..=n).collect();
    v.swap(i, i + 1);
    FinMap::new(n, n, v).expect("transposition")
}

/// Writes `α = β ∘ σ` with `β` monotone and `σ` a product of adjacent
/// transpositions, returned in application order.
fn split_permutation(alpha: &FinMap) -> (Vec<usize>, FinMap) {
    let vals = alpha.values().to_vec();
    // bubble sort positions by value, recording swaps of the domain
    let mut arr = vals.clone();
    let mut swaps = Vec::new();
    let n = arr.len();
    for pass in 0..n {
        for i in 0..n.saturating_sub(1 + pass) {
            if arr[i] > arr[i + 1] {
                arr.swap(i, i + 1);
                swaps.push(i);
            }
        }
    }
    let mono = FinMap::new(alpha.source(), alpha.target(), arr).expect("sorted values");
    (swaps, mono)
}

/// The Moore complex: level `n` is `∩_{j<n} ker μ_j`, with coboundary the
/// alternating sum of cofaces. `inclusion[n]` holds the chosen basis as
/// columns in level-`n` coordinates.
#[derive(Clone, Debug)]
pub struct Normalized {
    pub complex: BoundedComplex,
    pub inclusion: Vec<Matrix>,
}

fn moore_basis<X: FinObject>(x: &X, n: usize) -> Result<Matrix> {
    let ring = x.ring();
    let dim = x.basis(n).len();
    if n == 0 {
        return Ok(Matrix::identity(dim));
    }
    let blocks: Vec<Matrix> = (0..n)
        .map(|j| x.action_matrix(&FinMap::codegeneracy(n, j)?))
        .collect::<Result<_>>()?;
    let stacked = Matrix::vstack_all(dim, &blocks);
    let k = smith::kernel(ring, &stacked)?;
    Ok(smith::echelon_rows(ring, &k.transpose())?.transpose())
}

pub fn normalize<X: FinObject>(x: &X, top: usize) -> Result<Normalized> {
    if let Some(m) = x.max_level() {
        if top > m {
            return Err(Error::Truncation(format!("levels stop at {m}, asked for {top}")));
        }
    }
    let ring = x.ring();
    let inclusion: Vec<Matrix> = (0..=top).map(|n| moore_basis(x, n)).collect::<Result<_>>()?;
    let mut d = Vec::new();
    for n in 0..top {
        let mut coboundary = Matrix::zeros(x.basis(n + 1).len(), x.basis(n).len());
        for i in 0..=n + 1 {
            let m = x.action_matrix(&FinMap::coface(n, i)?)?;
            coboundary = if i % 2 == 0 { coboundary.plus(&m) } else { coboundary.minus(&m) };
        }
        let image = coboundary.dot(&inclusion[n]);
        d.push(smith::solve(ring, &inclusion[n + 1], &image)?);
    }
    let next_zero = match x.max_level() {
        Some(m) if top + 1 > m => false,
        _ => moore_basis(x, top + 1)?.cols() == 0,
    };
    let modules = inclusion
        .iter()
        .enumerate()
        .map(|(n, m)| FreeModule::numbered(&format!("n{n}_"), m.cols()))
        .collect();
    let complex = BoundedComplex::new(ring, modules, d, !next_zero)?;
    Ok(Normalized { complex, inclusion })
}

/// Ranks of the quotient form `C^n / Σ_{i≥1} ∂_i C^{n-1}`.
pub fn quotient_ranks<X: FinObject>(x: &X, top: usize) -> Result<Vec<usize>> {
    let ring = x.ring();
    let mut out = vec![x.basis(0).len()];
    for n in 1..=top {
        let blocks: Vec<Matrix> = (1..=n)
            .map(|i| x.action_matrix(&FinMap::coface(n - 1, i)?))
            .collect::<Result<_>>()?;
        let dim = x.basis(n).len();
        let mut image = Matrix::zeros(dim, 0);
        for b in &blocks {
            image = image.hstack(b)?;
        }
        out.push(dim - smith::rank(ring, &image)?);
    }
    Ok(out)
}

/// `π^n := H^n(N C)` for `n ≤ top`.
pub fn cohomotopy<X: FinObject>(x: &X, top: usize) -> Result<HomologySummary> {
    normalize(x, top)?.complex.cohomology()
}

/// The constant object with value a free module of the given rank.
#[derive(Clone, Debug)]
pub struct Constant {
    pub ring: CoeffRing,
    pub rank: usize,
}

impl FinObject for Constant {
    type Key = usize;

    fn ring(&self) -> CoeffRing {
        self.ring
    }

    fn basis(&self, _n: usize) -> Vec<usize> {
        (0..self.rank).collect()
    }

    fn act_key(&self, _alpha: &FinMap, key: &usize) -> Combo<usize> {
        Combo::basis(*key)
    }
}

/// `[n] ↦ T^r V^n`, words of a fixed length.
#[derive(Clone, Debug)]
pub struct TensorPower {
    pub ring: CoeffRing,
    pub r: usize,
}

impl FinObject for TensorPower {
    type Key = Word;

    fn ring(&self) -> CoeffRing {
        self.ring
    }

    fn basis(&self, n: usize) -> Vec<Word> {
        words(self.r, n)
    }

    fn act_key(&self, alpha: &FinMap, key: &Word) -> Combo<Word> {
        act_word(alpha, key)
    }

    fn label(&self, key: &Word) -> String {
        crate::tensor_exterior::format_word(key)
    }
}

/// The monotone injection `[k] → [n]` with `0 ↦ 0` and image `{0} ∪ s`.
pub fn subset_injection(n: usize, s: &[u8]) -> FinMap {
    let mut v = vec![0usize];
    v.extend(s.iter().map(|&x| x as usize));
    FinMap::new(s.len(), n, v).expect("increasing subset")
}

/// The Dold-Kan decomposition `X^n = ⊕_{S ⊆ {1..n}} δ_S(N^{|S|} X)`:
/// the matrix whose columns are `δ_S(b)` for `S` by size then lexicographic
/// order and `b` running over the Moore basis of level `|S|`.
pub fn decomposition_matrix<X: FinObject>(x: &X, norm: &Normalized, n: usize) -> Result<Matrix> {
    let dim = x.basis(n).len();
    let mut cols: Vec<Vec<BigInt>> = Vec::new();
    for k in 0..=n {
        if norm.inclusion.get(k).is_none_or(|m| m.cols() == 0) {
            continue;
        }
        for s in crate::tensor_exterior::subsets(k, n) {
            let delta = x.action_matrix(&subset_injection(n, &s))?;
            let image = delta.dot(&norm.inclusion[k]);
            for c in 0..image.cols() {
                cols.push(image.column(c));
            }
        }
    }
    Ok(Matrix::from_columns(dim, &cols))
}

/// Level-`n` matrix of the cosimplicial map whose normalization is `psi`
/// (`psi[k]: N^k X → N^k Y` in Moore coordinates).
pub fn map_from_normalized<X: FinObject, Y: FinObject>(
    x: &X,
    nx: &Normalized,
    y: &Y,
    ny: &Normalized,
    psi: &[Matrix],
    n: usize,
) -> Result<Matrix> {
    let ring = x.ring();
    let phi_x = decomposition_matrix(x, nx, n)?;
    let phi_y = decomposition_matrix(y, ny, n)?;
    let mut row_sizes = Vec::new();
    let mut col_sizes = Vec::new();
    let mut diag: Vec<&Matrix> = Vec::new();
    for k in 0..=n {
        let count = crate::tensor_exterior::subsets(k, n).len();
        for _ in 0..count {
            let (r, c) = (ny.complex.rank(k), nx.complex.rank(k));
            if r == 0 && c == 0 {
                continue;
            }
            row_sizes.push(r);
            col_sizes.push(c);
            diag.push(&psi[k]);
        }
    }
    let blocks: Vec<Vec<Option<&Matrix>>> = (0..diag.len())
        .map(|i| (0..diag.len()).map(|j| (i == j).then_some(diag[i])).collect())
        .collect();
    let middle = Matrix::block(&row_sizes, &col_sizes, &blocks);
    let inv = smith::solve(ring, &phi_x, &Matrix::identity(phi_x.rows()))?;
    Ok(phi_y.dot(&middle).dot(&inv).reduce(ring))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: CoeffRing = CoeffRing::Integers;

    #[test]
    fn constant_normalizes_to_degree_zero() {
        let c = Constant { ring: Z, rank: 2 };
        let n = normalize(&c, 3).unwrap();
        assert_eq!(n.complex.ranks(), vec![2, 0, 0, 0]);
        let h = cohomotopy(&c, 3).unwrap();
        assert_eq!(h.betti(), vec![2, 0, 0, 0]);
        assert_eq!(quotient_ranks(&c, 3).unwrap(), vec![2, 0, 0, 0]);
    }

    #[test]
    fn tensor_powers_have_cohomotopy_in_one_degree() {
        for r in 1..=3 {
            let t = TensorPower { ring: Z, r };
            let h = cohomotopy(&t, r + 1).unwrap();
            for d in &h.degrees {
                let expected = usize::from(d.degree == r);
                assert_eq!((d.betti, d.torsion.len()), (expected, 0), "r={r} degree {}", d.degree);
            }
        }
    }

    #[test]
    fn materialized_object_round_trips() {
        let t = TensorPower { ring: Z, r: 2 };
        let c = CosimplicialAb::from_object(&t, 3).unwrap();
        check_functorial(&c, &generator_pairs(3, true)).unwrap();
        for alpha in FinMap::all(2, 3) {
            assert_eq!(c.map_matrix(&alpha).unwrap(), t.action_matrix(&alpha).unwrap(), "{alpha}");
        }
        let back = CosimplicialAb::from_json(&c.to_json()).unwrap();
        assert_eq!(back.to_json(), c.to_json());
        let mut bad = c.to_json();
        bad["cofaces"][1][0][0][0] = json!(7);
        assert!(CosimplicialAb::from_json(&bad).is_err());
    }

    #[test]
    fn quotient_and_moore_ranks_agree() {
        let t = TensorPower { ring: Z, r: 3 };
        let moore = normalize(&t, 3).unwrap().complex.ranks();
        assert_eq!(moore, quotient_ranks(&t, 3).unwrap());
        assert_eq!(moore, vec![0, 1, 6, 6]);
    }

    #[test]
    fn decomposition_is_invertible() {
        let t = TensorPower { ring: Z, r: 2 };
        let n = normalize(&t, 3).unwrap();
        for level in 0..=3 {
            let phi = decomposition_matrix(&t, &n, level).unwrap();
            assert!(smith::is_invertible(Z, &phi).unwrap(), "level {level}");
        }
    }
}
