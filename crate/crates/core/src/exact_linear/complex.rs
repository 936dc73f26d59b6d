//! Bounded cochain complexes of free modules and their cohomology.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::coeff::CoeffRing;
use super::matrix::Matrix;
use super::smith;
use crate::error::{Error, Result};

/// A free module with a label per basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    labels: Vec<String>,
}

impl FreeModule {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        let mut sorted = labels.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidStructure("duplicate basis labels".into()));
        }
        Ok(FreeModule { labels })
    }

    /// A module of the given rank labelled `prefix0, prefix1, ...`.
    pub fn numbered(prefix: &str, rank: usize) -> Self {
        FreeModule {
            labels: (0..rank).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }
}

/// A matrix together with the modules it maps between.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    pub domain: FreeModule,
    pub codomain: FreeModule,
    pub matrix: Matrix,
}

impl LinMap {
    pub fn new(domain: FreeModule, codomain: FreeModule, matrix: Matrix) -> Result<Self> {
        if matrix.shape() != (codomain.rank(), domain.rank()) {
            return Err(Error::Dimension(format!(
                "matrix {:?} does not fit {} -> {}",
                matrix.shape(),
                domain.rank(),
                codomain.rank()
            )));
        }
        Ok(LinMap {
            domain,
            codomain,
            matrix,
        })
    }
}

/// Cochain complex `C^0 -> C^1 -> ... -> C^top` of free modules.
///
/// `truncated` records that the complex is the bottom part of something
/// larger, so cohomology in the top degree is only an upper bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedComplex {
    ring: CoeffRing,
    modules: Vec<FreeModule>,
    d: Vec<Matrix>,
    truncated: bool,
}

impl BoundedComplex {
    /// `d[k]` maps degree `k` to degree `k + 1`; there are `modules.len() - 1`
    /// of them. Checks shapes and `d∘d = 0` over `ring`.
    pub fn new(ring: CoeffRing, modules: Vec<FreeModule>, d: Vec<Matrix>, truncated: bool) -> Result<Self> {
        if modules.is_empty() {
            return Err(Error::Dimension("complex needs at least degree 0".into()));
        }
        if d.len() + 1 != modules.len() {
            return Err(Error::Dimension(format!(
                "{} modules need {} differentials, got {}",
                modules.len(),
                modules.len() - 1,
                d.len()
            )));
        }
        let d: Vec<Matrix> = d.into_iter().map(|m| m.reduce(ring)).collect();
        for (k, m) in d.iter().enumerate() {
            if m.shape() != (modules[k + 1].rank(), modules[k].rank()) {
                return Err(Error::Dimension(format!("differential in degree {k} has shape {:?}", m.shape())));
            }
        }
        for k in 1..d.len() {
            if !d[k].dot(&d[k - 1]).is_zero_in(ring) {
                return Err(Error::InvalidStructure(format!("d∘d ≠ 0 starting in degree {}", k - 1)));
            }
        }
        Ok(BoundedComplex {
            ring,
            modules,
            d,
            truncated,
        })
    }

    pub fn from_ranks(ring: CoeffRing, ranks: &[usize], d: Vec<Matrix>) -> Result<Self> {
        let modules = ranks
            .iter()
            .enumerate()
            .map(|(k, &r)| FreeModule::numbered(&format!("c{k}_"), r))
            .collect();
        Self::new(ring, modules, d, false)
    }

    pub fn zero(ring: CoeffRing) -> Self {
        BoundedComplex {
            ring,
            modules: vec![FreeModule::numbered("", 0)],
            d: vec![],
            truncated: false,
        }
    }

    /// `Z[n]`: one copy of the ring in degree `n`.
    pub fn sphere(ring: CoeffRing, n: usize) -> Self {
        let ranks: Vec<usize> = (0..=n).map(|k| usize::from(k == n)).collect();
        let d = (0..n).map(|k| Matrix::zeros(ranks[k + 1], ranks[k])).collect();
        Self::from_ranks(ring, &ranks, d).expect("sphere is valid")
    }

    /// `Z<n,n+1>`: the identity from degree `n` to degree `n + 1`.
    pub fn disk(ring: CoeffRing, n: usize) -> Self {
        let ranks: Vec<usize> = (0..=n + 1).map(|k| usize::from(k == n || k == n + 1)).collect();
        let d = (0..=n)
            .map(|k| {
                if k == n {
                    Matrix::identity(1)
                } else {
                    Matrix::zeros(ranks[k + 1], ranks[k])
                }
            })
            .collect();
        Self::from_ranks(ring, &ranks, d).expect("disk is valid")
    }

    pub fn ring(&self) -> CoeffRing {
        self.ring
    }

    pub fn top(&self) -> usize {
        self.modules.len() - 1
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn with_truncated(mut self, truncated: bool) -> Self {
        self.truncated = truncated;
        self
    }

    /// The same complex read over another coefficient ring.
    pub fn reduce_ring(&self, ring: CoeffRing) -> Self {
        BoundedComplex::new(ring, self.modules.clone(), self.d.clone(), self.truncated)
            .expect("reduction preserves d∘d = 0")
    }

    pub fn module(&self, k: usize) -> Option<&FreeModule> {
        self.modules.get(k)
    }

    pub fn rank(&self, k: usize) -> usize {
        self.modules.get(k).map_or(0, FreeModule::rank)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(FreeModule::rank).collect()
    }

    /// The differential leaving degree `k` (a zero matrix outside the stored range).
    pub fn differential(&self, k: usize) -> Matrix {
        match self.d.get(k) {
            Some(m) => m.clone(),
            None => Matrix::zeros(self.rank(k + 1), self.rank(k)),
        }
    }

    pub fn differentials(&self) -> &[Matrix] {
        &self.d
    }

    /// Keeps degrees `0..=top`, marking the result truncated if anything was cut.
    pub fn truncate(&self, top: usize) -> Self {
        if top >= self.top() {
            return self.clone();
        }
        BoundedComplex {
            ring: self.ring,
            modules: self.modules[..=top].to_vec(),
            d: self.d[..top].to_vec(),
            truncated: true,
        }
    }

    /// Pads with zero modules up to degree `top`.
    pub fn extend_to(&self, top: usize) -> Self {
        let mut out = self.clone();
        while out.top() < top {
            let k = out.top();
            out.modules.push(FreeModule::numbered(&format!("c{}_", k + 1), 0));
            out.d.push(Matrix::zeros(0, out.rank(k)));
        }
        out
    }

    pub fn direct_sum(&self, other: &BoundedComplex) -> Result<Self> {
        same_ring(self.ring, other.ring)?;
        let top = self.top().max(other.top());
        let (a, b) = (self.extend_to(top), other.extend_to(top));
        let modules = (0..=top)
            .map(|k| {
                let mut labels: Vec<String> = a.modules[k].labels.iter().map(|l| format!("L{l}")).collect();
                labels.extend(b.modules[k].labels.iter().map(|l| format!("R{l}")));
                FreeModule { labels }
            })
            .collect();
        let d = (0..top)
            .map(|k| {
                Matrix::block(
                    &[a.rank(k + 1), b.rank(k + 1)],
                    &[a.rank(k), b.rank(k)],
                    &[vec![Some(&a.d[k]), None], vec![None, Some(&b.d[k])]],
                )
            })
            .collect();
        BoundedComplex::new(self.ring, modules, d, self.truncated || other.truncated)
    }

    /// Tensor product with `d(x⊗y) = dx⊗y + (-1)^{|x|} x⊗dy`.
    /// Basis of degree `n`: pairs ordered by the degree of the left factor.
    pub fn tensor(&self, other: &BoundedComplex) -> Result<Self> {
        same_ring(self.ring, other.ring)?;
        let top = self.top() + other.top();
        let index = |n: usize| -> Vec<(usize, usize, usize, usize)> {
            let mut v = Vec::new();
            for i in 0..=n.min(self.top()) {
                let j = n - i;
                if j > other.top() {
                    continue;
                }
                for a in 0..self.rank(i) {
                    for b in 0..other.rank(j) {
                        v.push((i, a, j, b));
                    }
                }
            }
            v
        };
        let bases: Vec<Vec<(usize, usize, usize, usize)>> = (0..=top).map(index).collect();
        let modules = bases
            .iter()
            .map(|basis| FreeModule {
                labels: basis
                    .iter()
                    .map(|&(i, a, j, b)| format!("({})⊗({})", self.modules[i].label(a), other.modules[j].label(b)))
                    .collect(),
            })
            .collect();
        let mut d = Vec::new();
        for n in 0..top {
            let target = &bases[n + 1];
            let pos: std::collections::HashMap<(usize, usize, usize, usize), usize> =
                target.iter().enumerate().map(|(p, &k)| (k, p)).collect();
            let mut m = Matrix::zeros(target.len(), bases[n].len());
            for (col, &(i, a, j, b)) in bases[n].iter().enumerate() {
                if i < self.top() {
                    let di = &self.d[i];
                    for a2 in 0..di.rows() {
                        let c = &di[(a2, a)];
                        if !c.is_zero() {
                            m[(pos[&(i + 1, a2, j, b)], col)] += c;
                        }
                    }
                }
                if j < other.top() {
                    let dj = &other.d[j];
                    let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                    for b2 in 0..dj.rows() {
                        let c = &dj[(b2, b)];
                        if !c.is_zero() {
                            m[(pos[&(i, a, j + 1, b2)], col)] += c * &sign;
                        }
                    }
                }
            }
            d.push(m);
        }
        BoundedComplex::new(self.ring, modules, d, self.truncated || other.truncated)
    }

    /// Cohomology in every degree `0..=top`.
    pub fn cohomology(&self) -> Result<HomologySummary> {
        let mut degrees = Vec::new();
        for k in 0..=self.top() {
            let outgoing = self.d.get(k);
            let incoming = if k > 0 { self.d.get(k - 1) } else { None };
            let mut h = homology_at(self.ring, self.rank(k), incoming, outgoing)?;
            h.degree = k;
            h.truncated = self.truncated && k == self.top();
            degrees.push(h);
        }
        Ok(HomologySummary {
            ring: self.ring,
            degrees,
        })
    }

    pub fn is_acyclic(&self) -> Result<bool> {
        Ok(self.cohomology()?.is_zero())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ring": self.ring.to_string(),
            "ranks": self.ranks(),
            "differentials": self.d.iter().map(matrix_to_json).collect::<Vec<_>>(),
            "truncated": self.truncated,
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let ring: CoeffRing = value
            .get("ring")
            .and_then(Value::as_str)
            .unwrap_or("z")
            .parse()?;
        let ranks: Vec<usize> = serde_json::from_value(
            value
                .get("ranks")
                .cloned()
                .ok_or_else(|| Error::Parse("complex: missing ranks".into()))?,
        )?;
        if ranks.is_empty() {
            return Err(Error::Parse("complex: empty ranks".into()));
        }
        let raw = value
            .get("differentials")
            .and_then(Value::as_array)
            .cloned()
            .unwrap_or_default();
        if raw.len() + 1 != ranks.len() {
            return Err(Error::Parse(format!(
                "complex: {} ranks need {} differentials",
                ranks.len(),
                ranks.len() - 1
            )));
        }
        let d = raw
            .iter()
            .enumerate()
            .map(|(k, m)| matrix_from_json(m, ranks[k + 1], ranks[k]))
            .collect::<Result<Vec<_>>>()?;
        let truncated = value.get("truncated").and_then(Value::as_bool).unwrap_or(false);
        Ok(Self::from_ranks(ring, &ranks, d)?.with_truncated(truncated))
    }
}

fn same_ring(a: CoeffRing, b: CoeffRing) -> Result<()> {
    if a != b {
        return Err(Error::UnsupportedRing(format!("mixing {a} and {b}")));
    }
    Ok(())
}

/// A degree-preserving map of complexes; `maps[k]` acts in degree `k`.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub maps: Vec<Matrix>,
}

impl ChainMap {
    pub fn new(source: &BoundedComplex, target: &BoundedComplex, maps: Vec<Matrix>) -> Result<Self> {
        let f = ChainMap { maps };
        f.check(source, target)?;
        Ok(f)
    }

    pub fn identity(c: &BoundedComplex) -> Self {
        ChainMap {
            maps: (0..=c.top()).map(|k| Matrix::identity(c.rank(k))).collect(),
        }
    }

    pub fn degree(&self, k: usize, source: &BoundedComplex, target: &BoundedComplex) -> Matrix {
        self.maps
            .get(k)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(target.rank(k), source.rank(k)))
    }

    /// Shapes match and `f d = d f` in every degree where both sides are stored.
    pub fn check(&self, source: &BoundedComplex, target: &BoundedComplex) -> Result<()> {
        let ring = source.ring();
        let top = source.top().max(target.top());
        for k in 0..=top {
            let f = self.degree(k, source, target);
            if f.shape() != (target.rank(k), source.rank(k)) {
                return Err(Error::Dimension(format!("chain map degree {k} has shape {:?}", f.shape())));
            }
        }
        for k in 0..top {
            let lhs = self.degree(k + 1, source, target).dot(&source.differential(k));
            let rhs = target.differential(k).dot(&self.degree(k, source, target));
            if !lhs.eq_in(&rhs, ring) {
                return Err(Error::InvalidStructure(format!("not a chain map in degree {k}")));
            }
        }
        Ok(())
    }
}

/// Mapping cone of `f: X → Y`, indexed so that `cone(id_{Z[n]}) = Z<n,n+1>`:
/// degree `k` is `X^k ⊕ Y^{k-1}` and `d(x, y) = (dx, f(x) - dy)`.
pub fn cone(x: &BoundedComplex, y: &BoundedComplex, f: &ChainMap) -> Result<BoundedComplex> {
    same_ring(x.ring(), y.ring())?;
    let top = x.top().max(y.top() + 1);
    let xr = |k: usize| x.rank(k);
    let yr = |k: usize| if k == 0 { 0 } else { y.rank(k - 1) };
    let modules = (0..=top)
        .map(|k| {
            let mut labels: Vec<String> = (0..xr(k)).map(|i| format!("x{k}_{i}")).collect();
            labels.extend((0..yr(k)).map(|i| format!("y{}_{i}", k as i64 - 1)));
            FreeModule { labels }
        })
        .collect();
    let d = (0..top)
        .map(|k| {
            let dx = x.differential(k);
            let fx = f.degree(k, x, y);
            let dy = if k == 0 {
                Matrix::zeros(y.rank(0), 0)
            } else {
                y.differential(k - 1).neg()
            };
            Matrix::block(
                &[xr(k + 1), yr(k + 1)],
                &[xr(k), yr(k)],
                &[vec![Some(&dx), None], vec![Some(&fx), Some(&dy)]],
            )
        })
        .collect();
    BoundedComplex::new(x.ring(), modules, d, x.is_truncated() || y.is_truncated())
}

/// `f` is a quasi-isomorphism iff its cone is acyclic.
pub fn is_quasi_isomorphism(x: &BoundedComplex, y: &BoundedComplex, f: &ChainMap) -> Result<bool> {
    let c = cone(x, y, f)?;
    let h = c.cohomology()?;
    // the cone's top degree only sees the truncation of `x`
    Ok(h.degrees.iter().filter(|d| !d.truncated).all(DegreeHomology::is_zero))
}

/// Cohomology of `C^k` given the incoming and outgoing differentials.
pub fn homology_at(
    ring: CoeffRing,
    dim: usize,
    incoming: Option<&Matrix>,
    outgoing: Option<&Matrix>,
) -> Result<DegreeHomology> {
    let (rank_out, _) = rank_and_torsion(ring, outgoing)?;
    let (rank_in, torsion) = rank_and_torsion(ring, incoming)?;
    Ok(DegreeHomology {
        degree: 0,
        betti: dim - rank_out - rank_in,
        torsion,
        truncated: false,
    })
}

fn rank_and_torsion(ring: CoeffRing, m: Option<&Matrix>) -> Result<(usize, Vec<BigInt>)> {
    let Some(m) = m else { return Ok((0, vec![])) };
    match ring {
        CoeffRing::Integers => Ok(smith::invariant_factors(m)),
        CoeffRing::Modular(_) => {
            if !ring.is_field() {
                return Err(Error::UnsupportedRing(format!(
                    "homology over {ring} needs a prime modulus"
                )));
            }
            Ok((smith::rank(ring, m)?, vec![]))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeHomology {
    pub degree: usize,
    pub betti: usize,
    #[serde(with = "bigint_list")]
    pub torsion: Vec<BigInt>,
    pub truncated: bool,
}

impl DegreeHomology {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }

    /// Same group, ignoring the degree and truncation tags.
    pub fn same_group(&self, other: &DegreeHomology) -> bool {
        self.betti == other.betti && self.torsion == other.torsion
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologySummary {
    pub ring: CoeffRing,
    pub degrees: Vec<DegreeHomology>,
}

impl HomologySummary {
    pub fn is_zero(&self) -> bool {
        self.degrees.iter().all(DegreeHomology::is_zero)
    }

    pub fn get(&self, k: usize) -> Option<&DegreeHomology> {
        self.degrees.iter().find(|d| d.degree == k)
    }

    pub fn betti(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.betti).collect()
    }

    /// CSV rows `object,degree,betti,torsion,truncated`.
    pub fn csv_rows(&self, object: &str) -> Vec<String> {
        self.degrees
            .iter()
            .map(|d| {
                let torsion: Vec<String> = d.torsion.iter().map(ToString::to_string).collect();
                format!("{object},{},{},{},{}", d.degree, d.betti, torsion.join(" "), d.truncated)
            })
            .collect()
    }

    /// Degreewise sum, as for the cohomology of a direct sum.
    pub fn sum(&self, other: &HomologySummary) -> HomologySummary {
        let n = self.degrees.len().max(other.degrees.len());
        let degrees = (0..n)
            .map(|k| {
                let a = self.get(k);
                let b = other.get(k);
                let mut torsion: Vec<BigInt> = a.map(|d| d.torsion.clone()).unwrap_or_default();
                torsion.extend(b.map(|d| d.torsion.clone()).unwrap_or_default());
                DegreeHomology {
                    degree: k,
                    betti: a.map_or(0, |d| d.betti) + b.map_or(0, |d| d.betti),
                    torsion: smith::normalize_chain(torsion),
                    truncated: a.is_some_and(|d| d.truncated) || b.is_some_and(|d| d.truncated),
                }
            })
            .collect();
        HomologySummary {
            ring: self.ring,
            degrees,
        }
    }
}

impl fmt::Display for HomologySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.degrees {
            write!(f, "H{}: ", d.degree)?;
            let mut parts = Vec::new();
            if d.betti > 0 {
                parts.push(if d.betti == 1 {
                    "Z".to_string()
                } else {
                    format!("Z^{}", d.betti)
                });
            }
            parts.extend(d.torsion.iter().map(|t| format!("Z/{t}")));
            if parts.is_empty() {
                parts.push("0".into());
            }
            write!(f, "{}", parts.join(" + "))?;
            if d.truncated {
                write!(f, " (truncated)")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

mod bigint_list {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = v.iter().map(ToString::to_string).collect();
        strings.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        strings
            .iter()
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .collect()
    }
}

pub fn bigint_to_json(x: &BigInt) -> Value {
    serde_json::from_str(&x.to_string()).expect("integer literal is valid json")
}

pub fn bigint_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .to_string()
            .parse()
            .map_err(|_| Error::Parse(format!("not an integer: {n}"))),
        Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("not an integer: {s}"))),
        other => Err(Error::Parse(format!("not an integer: {other}"))),
    }
}

/// Row-major nested arrays.
pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(bigint_to_json).collect()))
            .collect(),
    )
}

pub fn matrix_from_json(v: &Value, rows: usize, cols: usize) -> Result<Matrix> {
    let arr = v.as_array().ok_or_else(|| Error::Parse("matrix must be an array".into()))?;
    if arr.len() != rows {
        return Err(Error::Parse(format!("matrix has {} rows, expected {rows}", arr.len())));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for row in arr {
        let r = row.as_array().ok_or_else(|| Error::Parse("matrix row must be an array".into()))?;
        if r.len() != cols {
            return Err(Error::Parse(format!("matrix row has {} entries, expected {cols}", r.len())));
        }
        for x in r {
            data.push(bigint_from_json(x)?);
        }
    }
    Matrix::from_rows(rows, cols, data)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: CoeffRing = CoeffRing::Integers;

    fn times_two() -> BoundedComplex {
        BoundedComplex::from_ranks(Z, &[1, 1], vec![Matrix::from_i64_rows(&[vec![2]]).unwrap()]).unwrap()
    }

    #[test]
    fn rejects_non_complex() {
        let one = Matrix::identity(1);
        assert!(BoundedComplex::from_ranks(Z, &[1, 1, 1], vec![one.clone(), one]).is_err());
    }

    #[test]
    fn sphere_and_disk_cohomology() {
        let h = BoundedComplex::sphere(Z, 2).cohomology().unwrap();
        assert_eq!(h.betti(), vec![0, 0, 1]);
        assert!(BoundedComplex::disk(Z, 3).is_acyclic().unwrap());
    }

    #[test]
    fn multiplication_by_two() {
        let h = times_two().cohomology().unwrap();
        assert!(h.degrees[0].is_zero());
        assert_eq!(h.degrees[1].betti, 0);
        assert_eq!(h.degrees[1].torsion, vec![BigInt::from(2)]);
        let h2 = times_two().reduce_ring(CoeffRing::Modular(2)).cohomology().unwrap();
        assert_eq!(h2.betti(), vec![1, 1]);
    }

    #[test]
    fn cone_of_identity_is_disk() {
        let s = BoundedComplex::sphere(Z, 1);
        let c = cone(&s, &s, &ChainMap::identity(&s)).unwrap();
        assert_eq!(c.ranks(), vec![0, 1, 1]);
        assert!(c.is_acyclic().unwrap());
        assert_eq!(c.differential(1), BoundedComplex::disk(Z, 1).differential(1));
    }

    #[test]
    fn tensor_unit_and_disks() {
        let c = times_two();
        let t = BoundedComplex::sphere(Z, 0).tensor(&c).unwrap();
        assert_eq!(t.ranks(), c.ranks());
        assert_eq!(t.differentials(), c.differentials());
        let dd = BoundedComplex::disk(Z, 1).tensor(&BoundedComplex::disk(Z, 1)).unwrap();
        assert_eq!(dd.ranks(), vec![0, 0, 1, 2, 1]);
        assert!(dd.is_acyclic().unwrap());
    }

    #[test]
    fn direct_sum_adds_cohomology() {
        let a = times_two();
        let b = BoundedComplex::sphere(Z, 2);
        let s = a.direct_sum(&b).unwrap();
        assert_eq!(s.cohomology().unwrap(), a.cohomology().unwrap().sum(&b.cohomology().unwrap()));
    }

    #[test]
    fn json_round_trip() {
        let c = times_two().direct_sum(&BoundedComplex::disk(Z, 1)).unwrap();
        let back = BoundedComplex::from_json(&c.to_json()).unwrap();
        assert_eq!(back.ranks(), c.ranks());
        assert_eq!(back.differentials(), c.differentials());
    }

    #[test]
    fn quasi_isomorphism_detection() {
        let d = BoundedComplex::disk(Z, 0);
        let zero = BoundedComplex::zero(Z);
        let f = ChainMap { maps: vec![Matrix::zeros(0, 1), Matrix::zeros(0, 1)] };
        assert!(is_quasi_isomorphism(&d, &zero, &f).unwrap());
        let s = BoundedComplex::sphere(Z, 0);
        let g = ChainMap { maps: vec![Matrix::zeros(0, 1)] };
        assert!(!is_quasi_isomorphism(&s, &zero, &g).unwrap());
    }
}
