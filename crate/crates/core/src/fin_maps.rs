//! Set maps `[n] -> [m]` between the finite ordinals `[n] = {0, ..., n}`.
//!
//! These are the morphisms of `Fin`; the monotone ones are the morphisms of
//! `Δ`. Maps are stored as dense value arrays and validated on construction.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FinMapRepr", into = "FinMapRepr")]
pub struct FinMap {
    source: usize,
    target: usize,
    values: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct FinMapRepr {
    source: usize,
    target: usize,
    values: Vec<usize>,
}

impl TryFrom<FinMapRepr> for FinMap {
    type Error = Error;
    fn try_from(r: FinMapRepr) -> Result<Self> {
        FinMap::new(r.source, r.target, r.values)
    }
}

impl From<FinMap> for FinMapRepr {
    fn from(f: FinMap) -> Self {
        FinMapRepr {
            source: f.source,
            target: f.target,
            values: f.values,
        }
    }
}

impl FinMap {
    pub fn new(source: usize, target: usize, values: Vec<usize>) -> Result<Self> {
        if values.len() != source + 1 {
            return Err(Error::Dimension(format!(
                "map from [{source}] needs {} values, got {}",
                source + 1,
                values.len()
            )));
        }
        if let Some(&v) = values.iter().find(|&&v| v > target) {
            return Err(Error::Index(format!("value {v} outside [{target}]")));
        }
        Ok(FinMap {
            source,
            target,
            values,
        })
    }

    pub fn identity(n: usize) -> Self {
        FinMap {
            source: n,
            target: n,
            values: (0..=n).collect(),
        }
    }

    /// The coface `∂_i : [n] -> [n+1]`, the monotone injection skipping `i`.
    pub fn coface(n: usize, i: usize) -> Result<Self> {
        if i > n + 1 {
            return Err(Error::Index(format!("coface index {i} > {}", n + 1)));
        }
        let values = (0..=n).map(|k| if k < i { k } else { k + 1 }).collect();
        Ok(FinMap {
            source: n,
            target: n + 1,
            values,
        })
    }

    /// The codegeneracy `μ_j : [n] -> [n-1]` hitting `j` twice, `0 <= j < n`.
    pub fn codegeneracy(n: usize, j: usize) -> Result<Self> {
        if n == 0 || j >= n {
            return Err(Error::Index(format!("codegeneracy μ_{j} on [{n}]")));
        }
        let values = (0..=n).map(|k| if k <= j { k } else { k - 1 }).collect();
        Ok(FinMap {
            source: n,
            target: n - 1,
            values,
        })
    }

    /// The extra map `μ_n : [n] -> [n-1]`: identity below `n`, `n ↦ 0`.
    pub fn mu_top(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Index("μ_n needs n >= 1".into()));
        }
        let values = (0..=n).map(|k| if k < n { k } else { 0 }).collect();
        Ok(FinMap {
            source: n,
            target: n - 1,
            values,
        })
    }

    /// The face `d_i = μ_i`, `0 <= i <= n`, with `μ_n` as the last face.
    pub fn face(n: usize, i: usize) -> Result<Self> {
        if i == n {
            Self::mu_top(n)
        } else {
            Self::codegeneracy(n, i)
        }
    }

    /// The degeneracy `s_j = ∂_{j+1} : [n] -> [n+1]`, `0 <= j <= n`.
    pub fn degeneracy(n: usize, j: usize) -> Result<Self> {
        if j > n {
            return Err(Error::Index(format!("degeneracy s_{j} on [{n}]")));
        }
        Self::coface(n, j + 1)
    }

    /// The cyclic permutation `t_n = (0 1 ... n)`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Index("t_n needs n >= 1".into()));
        }
        let values = (0..=n).map(|k| (k + 1) % (n + 1)).collect();
        Ok(FinMap {
            source: n,
            target: n,
            values,
        })
    }

    /// `t_n^i`; `t_0^i` is the identity.
    pub fn cyclic_power(n: usize, i: usize) -> Self {
        let values = (0..=n).map(|k| (k + i) % (n + 1)).collect();
        FinMap {
            source: n,
            target: n,
            values,
        }
    }

    /// The map `[0] -> [n]` picking `i`, i.e. `∂_{i+1}^{n-i} ∂_0^i`.
    pub fn point(n: usize, i: usize) -> Result<Self> {
        FinMap::new(0, n, vec![i])
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn is_monotone(&self) -> bool {
        self.values.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target + 1];
        self.values.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &FinMap) -> Result<FinMap> {
        compose(g, self)
    }

    pub fn random<R: Rng>(source: usize, target: usize, rng: &mut R) -> Self {
        let values = (0..=source).map(|_| rng.gen_range(0..=target)).collect();
        FinMap {
            source,
            target,
            values,
        }
    }

    /// All `(m+1)^(n+1)` set maps `[n] -> [m]`, lexicographic in values.
    pub fn all(source: usize, target: usize) -> Vec<FinMap> {
        let mut out = Vec::new();
        let mut vals = vec![0usize; source + 1];
        loop {
            out.push(FinMap {
                source,
                target,
                values: vals.clone(),
            });
            let mut k = source + 1;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if vals[k] < target {
                    vals[k] += 1;
                    for v in vals.iter_mut().skip(k + 1) {
                        *v = 0;
                    }
                    break;
                }
            }
        }
    }

    /// Factors a monotone map as cofaces after codegeneracies.
    ///
    /// Returns `(codegeneracies, cofaces)` in application order, so that the
    /// map equals `cofaces[last] ∘ ... ∘ cofaces[0] ∘ codeg[last] ∘ ... ∘ codeg[0]`.
    pub fn monotone_factorization(&self) -> Result<(Vec<FinMap>, Vec<FinMap>)> {
        if !self.is_monotone() {
            return Err(Error::Precondition(format!("{self} is not monotone")));
        }
        // collapse repeated values from the top down so indices stay valid
        let mut codeg = Vec::new();
        let mut dim = self.source;
        for i in (0..self.source).rev() {
            if self.values[i] == self.values[i + 1] {
                codeg.push(FinMap::codegeneracy(dim, i)?);
                dim -= 1;
            }
        }
        let mut image: Vec<usize> = self.values.clone();
        image.dedup();
        let mut cofaces = Vec::new();
        // insert missing target values in increasing order
        let mut cur_dim = dim;
        for v in 0..=self.target {
            if !image.contains(&v) {
                cofaces.push(FinMap::coface(cur_dim, v)?);
                cur_dim += 1;
            }
        }
        debug_assert_eq!(cur_dim, self.target);
        Ok((codeg, cofaces))
    }
}

pub fn compose(g: &FinMap, f: &FinMap) -> Result<FinMap> {
    if f.target != g.source {
        return Err(Error::Dimension(format!(
            "cannot compose {g} after {f}: [{}] vs [{}]",
            f.target, g.source
        )));
    }
    Ok(FinMap {
        source: f.source,
        target: g.target,
        values: f.values.iter().map(|&v| g.values[v]).collect(),
    })
}

/// The generating maps attached to `[n]`.
#[derive(Clone, Debug)]
pub struct Generators {
    pub cofaces: Vec<FinMap>,
    pub codegeneracies: Vec<FinMap>,
    pub mu_top: Option<FinMap>,
    pub cyclic: Option<FinMap>,
}

impl Generators {
    pub fn all(&self) -> Vec<FinMap> {
        let mut out = self.cofaces.clone();
        out.extend(self.codegeneracies.iter().cloned());
        out.extend(self.mu_top.iter().cloned());
        out.extend(self.cyclic.iter().cloned());
        out
    }
}

pub fn generators(n: usize) -> Generators {
    Generators {
        cofaces: (0..=n + 1).map(|i| FinMap::coface(n, i).unwrap()).collect(),
        codegeneracies: (0..n).map(|j| FinMap::codegeneracy(n, j).unwrap()).collect(),
        mu_top: (n >= 1).then(|| FinMap::mu_top(n).unwrap()),
        cyclic: (n >= 1).then(|| FinMap::cyclic(n).unwrap()),
    }
}

/// Faces and degeneracies of the simplicial structure carried by `[n]`.
#[derive(Clone, Debug)]
pub struct SimplicialView {
    pub faces: Vec<FinMap>,
    pub degeneracies: Vec<FinMap>,
}

pub fn simplicial_view(n: usize) -> SimplicialView {
    SimplicialView {
        faces: if n >= 1 {
            (0..=n).map(|i| FinMap::face(n, i).unwrap()).collect()
        } else {
            Vec::new()
        },
        degeneracies: (0..=n).map(|j| FinMap::degeneracy(n, j).unwrap()).collect(),
    }
}

impl fmt::Display for FinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}:[", self.source, self.target)?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for FinMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected n->m:[a0,...,an], got {s:?}"));
        let (dims, vals) = s.trim().split_once(':').ok_or_else(bad)?;
        let (n, m) = dims.split_once("->").ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        let m: usize = m.trim().parse().map_err(|_| bad())?;
        let vals = vals
            .trim()
            .strip_prefix('[')
            .and_then(|v| v.strip_suffix(']'))
            .ok_or_else(bad)?;
        let values = if vals.trim().is_empty() {
            Vec::new()
        } else {
            vals.split(',')
                .map(|v| v.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?
        };
        FinMap::new(n, m, values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(g: &FinMap, f: &FinMap) -> FinMap {
        compose(g, f).unwrap()
    }

    #[test]
    fn generator_values() {
        assert_eq!(FinMap::mu_top(2).unwrap().values(), &[0, 1, 0]);
        assert_eq!(FinMap::cyclic(2).unwrap().values(), &[1, 2, 0]);
        assert_eq!(FinMap::coface(1, 1).unwrap().values(), &[0, 2]);
        let s0 = FinMap::degeneracy(0, 0).unwrap();
        assert_eq!((s0.source(), s0.target(), s0.values()), (0, 1, &[0usize][..]));
    }

    #[test]
    fn composition_examples() {
        let f = FinMap::new(1, 2, vec![2, 0]).unwrap();
        assert_eq!(c(&FinMap::identity(2), &f), f);
        let mu0 = FinMap::codegeneracy(1, 0).unwrap();
        let d0 = FinMap::coface(0, 0).unwrap();
        assert!(c(&mu0, &d0).is_identity());
        let t = FinMap::cyclic(2).unwrap();
        assert!(c(&t, &c(&t, &t)).is_identity());
    }

    #[test]
    fn dimension_mismatch_and_range_errors() {
        let f = FinMap::identity(1);
        let g = FinMap::identity(2);
        assert!(compose(&g, &f).is_err());
        assert!(FinMap::new(1, 1, vec![0, 2]).is_err());
        assert!(FinMap::coface(1, 3).is_err());
        assert!(FinMap::codegeneracy(2, 2).is_err());
        assert!(FinMap::cyclic(0).is_err());
    }

    #[test]
    fn cosimplicial_identities_exhaustive() {
        for n in 0..=5usize {
            // ∂_j ∂_i = ∂_i ∂_{j-1}, i < j
            for j in 0..=n + 2 {
                for i in 0..j {
                    let lhs = c(&FinMap::coface(n + 1, j).unwrap(), &FinMap::coface(n, i).unwrap());
                    let rhs = c(&FinMap::coface(n + 1, i).unwrap(), &FinMap::coface(n, j - 1).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
            if n >= 1 {
                // μ_j μ_i = μ_i μ_{j+1}, i <= j
                if n >= 2 {
                    for j in 0..n - 1 {
                        for i in 0..=j {
                            let lhs = c(&FinMap::codegeneracy(n - 1, j).unwrap(), &FinMap::codegeneracy(n, i).unwrap());
                            let rhs = c(&FinMap::codegeneracy(n - 1, i).unwrap(), &FinMap::codegeneracy(n, j + 1).unwrap());
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
            // μ_j ∂_i mixed identities on [n] -> [n+1] -> [n]
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let lhs = c(&FinMap::codegeneracy(n + 1, j).unwrap(), &FinMap::coface(n, i).unwrap());
                    let expected = if i < j {
                        c(&FinMap::coface(n - 1, i).unwrap(), &FinMap::codegeneracy(n, j - 1).unwrap())
                    } else if i == j || i == j + 1 {
                        FinMap::identity(n)
                    } else {
                        c(&FinMap::coface(n - 1, i - 1).unwrap(), &FinMap::codegeneracy(n, j).unwrap())
                    };
                    assert_eq!(lhs, expected, "μ_{j} ∂_{i} on [{n}]");
                }
            }
        }
    }

    #[test]
    fn simplicial_and_cyclic_identities() {
        for n in 1..=4usize {
            let v = simplicial_view(n);
            let below = simplicial_view(n - 1);
            // d_i d_j = d_{j-1} d_i for i < j
            if n >= 2 {
                for j in 0..=n {
                    for i in 0..j {
                        let lhs = c(&below.faces[i], &v.faces[j]);
                        let rhs = c(&below.faces[j - 1], &v.faces[i]);
                        assert_eq!(lhs, rhs);
                    }
                }
            }
            // t_n d_i = d_{i-1} t_{n-1}... as maps: d_i t_n = t_{n-1} d_{i-1}, 1 <= i <= n
            for i in 1..=n {
                let lhs = c(&v.faces[i], &FinMap::cyclic(n).unwrap());
                let rhs = if n >= 2 {
                    c(&FinMap::cyclic(n - 1).unwrap(), &v.faces[i - 1])
                } else {
                    v.faces[i - 1].clone()
                };
                assert_eq!(lhs, rhs, "d_{i} t_{n}");
            }
            // d_i s_j identities
            let up = simplicial_view(n + 1);
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let lhs = c(&up.faces[i], &v.degeneracies[j]);
                    let expected = if i < j {
                        c(&below.degeneracies[j - 1], &v.faces[i])
                    } else if i == j || i == j + 1 {
                        FinMap::identity(n)
                    } else {
                        c(&below.degeneracies[j], &v.faces[i - 1])
                    };
                    assert_eq!(lhs, expected);
                }
            }
        }
    }

    #[test]
    fn cyclic_order() {
        for n in 1..=6 {
            let t = FinMap::cyclic(n).unwrap();
            let mut p = FinMap::identity(n);
            for _ in 0..=n {
                p = c(&t, &p);
            }
            assert!(p.is_identity());
        }
    }

    #[test]
    fn factorization_recomposes() {
        for n in 0..=3 {
            for m in 0..=3 {
                for f in FinMap::all(n, m).into_iter().filter(|f| f.is_monotone()) {
                    let (codeg, cof) = f.monotone_factorization().unwrap();
                    let mut acc = FinMap::identity(n);
                    for g in codeg.iter().chain(cof.iter()) {
                        acc = c(g, &acc);
                    }
                    assert_eq!(acc, f);
                }
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let f: FinMap = "2->3:[3,0,1]".parse().unwrap();
        assert_eq!(f.to_string(), "2->3:[3,0,1]");
        assert!("2->3:[3,0]".parse::<FinMap>().is_err());
        assert!("garbage".parse::<FinMap>().is_err());
    }

    fn arb_chain() -> impl Strategy<Value = (FinMap, FinMap, FinMap)> {
        (0usize..4, 0usize..4, 0usize..4, 0usize..4, any::<u64>()).prop_map(|(a, b, c, d, seed)| {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            (
                FinMap::random(a, b, &mut rng),
                FinMap::random(b, c, &mut rng),
                FinMap::random(c, d, &mut rng),
            )
        })
    }

    proptest! {
        #[test]
        fn composition_is_associative((f, g, h) in arb_chain()) {
            prop_assert_eq!(c(&h, &c(&g, &f)), c(&c(&h, &g), &f));
        }

        #[test]
        fn monotone_closed_under_composition((f, g, _h) in arb_chain()) {
            if f.is_monotone() && g.is_monotone() {
                prop_assert!(c(&g, &f).is_monotone());
            }
        }
    }
}
