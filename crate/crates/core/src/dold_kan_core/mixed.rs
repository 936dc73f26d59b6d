//! Mixed complexes `(M, b, B)`: `b` lowers degree, `B` raises it, and
//! `b² = B² = bB + Bb = 0`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact_linear::complex::homology_at;
use crate::exact_linear::{is_quasi_isomorphism, BoundedComplex, ChainMap, CoeffRing, FreeModule, HomologySummary, Matrix};

#[derive(Clone, Debug)]
pub struct MixedComplex {
    ring: CoeffRing,
    dims: Vec<usize>,
    /// `b[n]: M_n → M_{n-1}`; `b[0]` has no rows.
    b: Vec<Matrix>,
    /// `big_b[n]: M_n → M_{n+1}`; the last one has no rows.
    big_b: Vec<Matrix>,
}

impl MixedComplex {
    pub fn new(ring: CoeffRing, dims: Vec<usize>, b: Vec<Matrix>, big_b: Vec<Matrix>) -> Result<Self> {
        let top = dims.len().checked_sub(1).ok_or_else(|| Error::Dimension("empty mixed complex".into()))?;
        if b.len() != dims.len() || big_b.len() != dims.len() {
            return Err(Error::Dimension("one b and one B per degree".into()));
        }
        for n in 0..=top {
            let below = if n == 0 { 0 } else { dims[n - 1] };
            let above = if n == top { 0 } else { dims[n + 1] };
            if b[n].shape() != (below, dims[n]) || big_b[n].shape() != (above, dims[n]) {
                return Err(Error::Dimension(format!("operator shapes wrong in degree {n}")));
            }
        }
        let m = MixedComplex {
            ring,
            dims,
            b: b.into_iter().map(|x| x.reduce(ring)).collect(),
            big_b: big_b.into_iter().map(|x| x.reduce(ring)).collect(),
        };
        m.check()?;
        Ok(m)
    }

    fn check(&self) -> Result<()> {
        let ring = self.ring;
        let top = self.top();
        for n in 0..=top {
            if n >= 2 && !self.b[n - 1].dot(&self.b[n]).is_zero_in(ring) {
                return Err(Error::InvalidStructure(format!("b² ≠ 0 in degree {n}")));
            }
            if n + 2 <= top && !self.big_b[n + 1].dot(&self.big_b[n]).is_zero_in(ring) {
                return Err(Error::InvalidStructure(format!("B² ≠ 0 in degree {n}")));
            }
            // bB + Bb on M_n, inside M_n
            let mut s = Matrix::zeros(self.dims[n], self.dims[n]);
            if n < top {
                s = s.plus(&self.b[n + 1].dot(&self.big_b[n]));
            }
            if n > 0 {
                s = s.plus(&self.big_b[n - 1].dot(&self.b[n]));
            }
            if !s.is_zero_in(ring) {
                return Err(Error::InvalidStructure(format!("bB + Bb ≠ 0 in degree {n}")));
            }
        }
        Ok(())
    }

    /// `(A, 0, scale(n)·d)`.
    pub fn from_complex(a: &BoundedComplex, scale: impl Fn(usize) -> BigInt) -> Result<Self> {
        let top = a.top();
        let dims = a.ranks();
        let b = (0..=top)
            .map(|n| Matrix::zeros(if n == 0 { 0 } else { dims[n - 1] }, dims[n]))
            .collect();
        let big_b = (0..=top).map(|n| a.differential(n).scale(&scale(n))).collect();
        MixedComplex::new(a.ring(), dims, b, big_b)
    }

    pub fn ring(&self) -> CoeffRing {
        self.ring
    }

    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn b(&self, n: usize) -> &Matrix {
        &self.b[n]
    }

    pub fn big_b(&self, n: usize) -> &Matrix {
        &self.big_b[n]
    }

    /// Homology with respect to `b`.
    pub fn b_homology(&self) -> Result<HomologySummary> {
        let mut degrees = Vec::new();
        for n in 0..=self.top() {
            let incoming = self.b.get(n + 1);
            let outgoing = (n > 0).then(|| &self.b[n]);
            let mut h = homology_at(self.ring, self.dims[n], incoming, outgoing)?;
            h.degree = n;
            degrees.push(h);
        }
        Ok(HomologySummary {
            ring: self.ring,
            degrees,
        })
    }

    /// `(M, b)` as a cochain complex in degrees `top - n`.
    fn reversed(&self, top: usize) -> Result<BoundedComplex> {
        let dim = |n: usize| self.dims.get(n).copied().unwrap_or(0);
        let modules = (0..=top)
            .map(|k| FreeModule::numbered(&format!("m{}_", top - k), dim(top - k)))
            .collect();
        let d = (0..top)
            .map(|k| {
                let n = top - k;
                self.b
                    .get(n)
                    .cloned()
                    .unwrap_or_else(|| Matrix::zeros(dim(n - 1), dim(n)))
            })
            .collect();
        BoundedComplex::new(self.ring, modules, d, false)
    }
}

/// A degree-preserving map commuting with `b` and `B`.
#[derive(Clone, Debug)]
pub struct MixedMap {
    pub maps: Vec<Matrix>,
}

impl MixedMap {
    pub fn check(&self, source: &MixedComplex, target: &MixedComplex) -> Result<()> {
        let ring = source.ring;
        if self.maps.len() != source.dims.len() {
            return Err(Error::Dimension("mixed map needs one matrix per source degree".into()));
        }
        let f = |n: usize| -> Matrix {
            self.maps
                .get(n)
                .cloned()
                .unwrap_or_else(|| Matrix::zeros(target.dims.get(n).copied().unwrap_or(0), 0))
        };
        let tdim = |n: usize| target.dims.get(n).copied().unwrap_or(0);
        for n in 0..=source.top() {
            if f(n).shape() != (tdim(n), source.dims[n]) {
                return Err(Error::Dimension(format!("mixed map degree {n} has wrong shape")));
            }
            if n > 0 {
                let tb = if n <= target.top() { target.b[n].clone() } else { Matrix::zeros(tdim(n - 1), 0) };
                if !f(n - 1).dot(&source.b[n]).eq_in(&tb.dot(&f(n)), ring) {
                    return Err(Error::InvalidStructure(format!("map does not commute with b in degree {n}")));
                }
            }
            let tbig = if n < target.top() {
                target.big_b[n].clone()
            } else {
                Matrix::zeros(tdim(n + 1), tdim(n))
            };
            let sbig_then_f = if n < source.top() {
                f(n + 1).dot(&source.big_b[n])
            } else {
                Matrix::zeros(tdim(n + 1), source.dims[n])
            };
            if !sbig_then_f.eq_in(&tbig.dot(&f(n)), ring) {
                return Err(Error::InvalidStructure(format!("map does not commute with B in degree {n}")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    pub source: HomologySummary,
    pub target: HomologySummary,
    pub is_equivalence: bool,
}

/// Checks `f` is a mixed map and whether it is an isomorphism on
/// `b`-homology.
pub fn equivalence_check(source: &MixedComplex, target: &MixedComplex, f: &MixedMap) -> Result<EquivalenceReport> {
    f.check(source, target)?;
    let top = source.top().max(target.top());
    let x = source.reversed(top)?;
    let y = target.reversed(top)?;
    let maps = (0..=top)
        .map(|k| {
            let n = top - k;
            f.maps
                .get(n)
                .cloned()
                .unwrap_or_else(|| Matrix::zeros(target.dims.get(n).copied().unwrap_or(0), 0))
        })
        .collect();
    let g = ChainMap::new(&x, &y, maps)?;
    Ok(EquivalenceReport {
        source: source.b_homology()?,
        target: target.b_homology()?,
        is_equivalence: is_quasi_isomorphism(&x, &y, &g)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: CoeffRing = CoeffRing::Integers;

    #[test]
    fn rejects_non_mixed() {
        let one = Matrix::identity(1);
        let z = |r, c| Matrix::zeros(r, c);
        let bad = MixedComplex::new(Z, vec![1, 1], vec![z(0, 1), one.clone()], vec![one, z(0, 1)]);
        assert!(bad.is_err());
    }

    #[test]
    fn identity_is_an_equivalence() {
        let a = BoundedComplex::from_ranks(Z, &[1, 1], vec![Matrix::from_i64_rows(&[vec![2]]).unwrap()]).unwrap();
        let m = MixedComplex::from_complex(&a, |_| BigInt::from(1)).unwrap();
        let id = MixedMap {
            maps: vec![Matrix::identity(1), Matrix::identity(1)],
        };
        let r = equivalence_check(&m, &m, &id).unwrap();
        assert!(r.is_equivalence);
        assert_eq!(r.source.betti(), vec![1, 1]);
        let zero = MixedMap {
            maps: vec![Matrix::zeros(1, 1), Matrix::zeros(1, 1)],
        };
        assert!(!equivalence_check(&m, &m, &zero).unwrap().is_equivalence);
    }
}
