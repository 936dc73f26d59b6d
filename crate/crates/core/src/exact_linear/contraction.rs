//! Deformation retractions onto a quotient complex.
//!
//! Given a surjective quasi-isomorphism `p: C → A` of bounded complexes of
//! free modules, builds `j': A → C` and `h': C → C` of degree −1 with
//! `p j' = 1` and `h'∂ + ∂h' = 1 − j'p`. Everything is found by integer
//! linear solving: a section of `p`, a contraction of the acyclic complex
//! `ker p`, and the standard correction of the section into a chain map.

use super::coeff::CoeffRing;
use super::complex::{BoundedComplex, ChainMap};
use super::matrix::Matrix;
use super::smith;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Contraction {
    /// `j[k]: A^k → C^k`.
    pub j: Vec<Matrix>,
    /// `h[k]: C^k → C^{k-1}`; `h[0]` has zero rows.
    pub h: Vec<Matrix>,
}

impl Contraction {
    /// Checks both identities exactly in every degree.
    pub fn verify(&self, c: &BoundedComplex, a: &BoundedComplex, p: &ChainMap) -> Result<()> {
        let ring = c.ring();
        for k in 0..=c.top() {
            let pk = p.degree(k, c, a);
            if !pk.dot(&self.j[k]).eq_in(&Matrix::identity(a.rank(k)), ring) {
                return Err(Error::InvalidStructure(format!("p j' ≠ 1 in degree {k}")));
            }
            let mut lhs = self.h_at(k + 1, c).dot(&c.differential(k));
            if k > 0 {
                lhs = lhs.plus(&c.differential(k - 1).dot(&self.h[k]));
            }
            let rhs = Matrix::identity(c.rank(k)).minus(&self.j[k].dot(&pk));
            if !lhs.eq_in(&rhs, ring) {
                return Err(Error::InvalidStructure(format!("h'∂ + ∂h' ≠ 1 − j'p in degree {k}")));
            }
        }
        ChainMap { maps: self.j.clone() }.check(a, c)
    }

    /// `h j' = 0`, `p h = 0` and `h h = 0`.
    pub fn side_conditions(&self, c: &BoundedComplex, a: &BoundedComplex, p: &ChainMap) -> bool {
        let ring = c.ring();
        (0..=c.top()).all(|k| {
            let hj = k == 0 || self.h[k].dot(&self.j[k]).is_zero_in(ring);
            let ph = k == 0 || p.degree(k - 1, c, a).dot(&self.h[k]).is_zero_in(ring);
            let hh = k < 2 || self.h[k - 1].dot(&self.h[k]).is_zero_in(ring);
            hj && ph && hh
        })
    }

    fn h_at(&self, k: usize, c: &BoundedComplex) -> Matrix {
        self.h
            .get(k)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(c.rank(k.saturating_sub(1)), c.rank(k)))
    }
}

pub fn contraction(c: &BoundedComplex, a: &BoundedComplex, p: &ChainMap) -> Result<Contraction> {
    let ring = c.ring();
    if !matches!(ring, CoeffRing::Integers) && !ring.is_field() {
        return Err(Error::UnsupportedRing(format!("contraction over {ring}")));
    }
    p.check(c, a)?;
    if a.top() > c.top() {
        return Err(Error::Precondition("target has more degrees than source".into()));
    }
    let top = c.top();
    let a = a.extend_to(top);

    let mut section = Vec::new();
    let mut kernel = Vec::new();
    for k in 0..=top {
        let pk = p.degree(k, c, &a);
        let s = smith::solve(ring, &pk, &Matrix::identity(a.rank(k)))
            .map_err(|_| Error::NoSolution(format!("p is not surjective in degree {k}")))?;
        section.push(s);
        kernel.push(smith::kernel(ring, &pk)?);
    }

    // differential of ker p in kernel coordinates
    let mut dk = Vec::new();
    for k in 0..top {
        let image = c.differential(k).dot(&kernel[k]);
        dk.push(smith::solve(ring, &kernel[k + 1], &image)?);
    }
    let kdim = |k: usize| kernel[k].cols();
    let kd = |k: usize| -> Matrix {
        dk.get(k)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(if k < top { kdim(k + 1) } else { 0 }, kdim(k)))
    };

    // s[k]: K^k → K^{k-1} with s∂ + ∂s = 1, built upwards
    let mut s: Vec<Matrix> = vec![Matrix::zeros(0, kdim(0))];
    for k in 0..=top {
        let mut rest = Matrix::identity(kdim(k));
        if k > 0 {
            rest = rest.minus(&kd(k - 1).dot(&s[k]));
        }
        let next = if k < top {
            // solve X ∂_k = rest, i.e. ∂_kᵀ Xᵀ = restᵀ
            smith::solve(ring, &kd(k).transpose(), &rest.transpose())
                .map_err(|_| Error::NoSolution(format!("ker p is not contractible in degree {k}")))?
                .transpose()
        } else {
            if !rest.is_zero_in(ring) {
                return Err(Error::NoSolution(format!(
                    "p is not a quasi-isomorphism in degree {k}"
                )));
            }
            Matrix::zeros(0, kdim(k))
        };
        s.push(next);
    }

    // j' = σ − s δ with δ = ∂σ − σd landing in ker p
    let mut j = Vec::new();
    for k in 0..=top {
        let mut jk = section[k].clone();
        if k < top {
            let delta = c
                .differential(k)
                .dot(&section[k])
                .minus(&section[k + 1].dot(&a.differential(k)));
            let delta_k = smith::solve(ring, &kernel[k + 1], &delta)?;
            jk = jk.minus(&kernel[k].dot(&s[k + 1]).dot(&delta_k));
        }
        j.push(jk.reduce(ring));
    }

    // h' = s π with π = 1 − j'p
    let mut h = vec![Matrix::zeros(0, c.rank(0))];
    for k in 1..=top {
        let pi = Matrix::identity(c.rank(k)).minus(&j[k].dot(&p.degree(k, c, &a)));
        let pi_k = smith::solve(ring, &kernel[k], &pi)?;
        h.push(kernel[k - 1].dot(&s[k]).dot(&pi_k).reduce(ring));
    }
    // h ↦ h∂h keeps the homotopy and adds h² = 0 (hj' = 0, ph = 0 already hold)
    let h: Vec<Matrix> = (0..=top)
        .map(|k| {
            if k == 0 {
                h[0].clone()
            } else {
                h[k].dot(&c.differential(k - 1)).dot(&h[k]).reduce(ring)
            }
        })
        .collect();
    let out = Contraction { j, h };
    out.verify(c, &a, p)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: CoeffRing = CoeffRing::Integers;

    #[test]
    fn identity_contracts_trivially() {
        let c = BoundedComplex::from_ranks(Z, &[1, 1], vec![Matrix::from_i64_rows(&[vec![2]]).unwrap()]).unwrap();
        let r = contraction(&c, &c, &ChainMap::identity(&c)).unwrap();
        assert!(r.j.iter().all(Matrix::is_identity));
        assert!(r.h.iter().all(Matrix::is_zero));
    }

    #[test]
    fn disk_contracts_to_zero() {
        let d = BoundedComplex::disk(Z, 2);
        let zero = BoundedComplex::zero(Z);
        let p = ChainMap {
            maps: (0..=d.top()).map(|k| Matrix::zeros(0, d.rank(k))).collect(),
        };
        let r = contraction(&d, &zero, &p).unwrap();
        assert_eq!(r.h[3], Matrix::identity(1));
        assert!(r.side_conditions(&d, &zero.extend_to(d.top()), &p));
    }

    #[test]
    fn non_equivalence_is_rejected() {
        let s = BoundedComplex::sphere(Z, 0);
        let zero = BoundedComplex::zero(Z);
        let p = ChainMap { maps: vec![Matrix::zeros(0, 1)] };
        assert!(matches!(contraction(&s, &zero, &p), Err(Error::NoSolution(_))));
    }
}
