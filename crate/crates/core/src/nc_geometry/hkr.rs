//! Homology of `(N∐S, μ)` against `Ω`: the map
//! `l(ω) = Σ_σ sign(σ) φ(ω⊗v_{σ1}⋯v_{σn})`, with `φ: QΩ → ∐S`, should be
//! an isomorphism onto homology, multiplicative for the shuffle product and
//! compatible with `d` and Connes' `B`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::combo::Combo;
use crate::dold_kan_core::{FinObject, QKey};
use crate::error::{Error, Result};
use crate::exact_linear::{smith, HomologySummary, Matrix};
use crate::ring_layer::fin_ring::{
    connes_operator, homotopy_groups, is_boundary, is_degenerate, shuffle_product, simplicial_boundary,
};
use crate::tensor_exterior::permutations;

use super::coproduct::{CWord, QOmegaIso};
use super::omega::Form;
use super::struct_algebra::StructAlgebra;

#[derive(Clone, Debug, Serialize)]
pub struct HkrReport {
    pub ring: String,
    pub top: usize,
    pub w_max: usize,
    /// `(degree, rank, torsion)` of `H_n(N∐S, μ)`.
    pub homology: Vec<(usize, usize, Vec<String>)>,
    pub omega_ranks: Vec<usize>,
    pub modules_match: bool,
    /// Whether `l` hits a basis of homology; only decided over a field.
    pub l_is_iso: Option<bool>,
    pub shuffle_pairs: usize,
    pub shuffle_ok: bool,
    pub connes_ok: bool,
}

impl HkrReport {
    pub fn passed(&self) -> bool {
        self.modules_match && self.l_is_iso != Some(false) && self.shuffle_ok && self.connes_ok
    }
}

pub struct Hkr {
    iso: QOmegaIso,
    top: usize,
}

impl Hkr {
    /// Degrees `0..=top` of homology computed inside the sub-Fin-ring of words
    /// of length at most `w_max`; needs `top < w_max`.
    pub fn new(algebra: &StructAlgebra, top: usize, w_max: usize) -> Result<Self> {
        if top >= w_max {
            return Err(Error::Truncation(format!(
                "degree {top} homology needs words longer than {top} (w_max = {w_max})"
            )));
        }
        Ok(Hkr {
            iso: QOmegaIso::new(algebra, w_max)?,
            top,
        })
    }

    pub fn iso(&self) -> &QOmegaIso {
        &self.iso
    }

    fn weight(f: &Form) -> usize {
        f.len() - 1 + usize::from(f[0] != 0)
    }

    /// `l` on a basis form of degree `n`, landing in level `n`.
    pub fn l_form(&self, f: &Form) -> Combo<CWord> {
        let n = f.len() - 1;
        let idx = self.iso.omega().basis(n).position(f).expect("form in range");
        let x = Combo::from_terms(permutations(n).into_iter().map(|(w, s)| (QKey::new(n, idx, w), BigInt::from(s))));
        self.iso.apply(&x)
    }

    pub fn l(&self, x: &Combo<Form>) -> Combo<CWord> {
        let mut out = Combo::zero();
        for (f, c) in x.iter() {
            out.add_scaled(&self.l_form(f), c);
        }
        self.iso.coproduct().ring().reduce_combo(&mut out);
        out
    }

    /// `B = ∂_0 Σ_i (−1)^{ni} t^i` from level `n` to `n+1`.
    pub fn connes_b(&self, n: usize, x: &Combo<CWord>) -> Combo<CWord> {
        connes_operator(self.iso.coproduct(), n, x)
    }

    pub fn homology(&self) -> Result<HomologySummary> {
        homotopy_groups(self.iso.coproduct(), self.top)
    }

    pub fn run(&self) -> Result<HkrReport> {
        let c = self.iso.coproduct();
        let omega = self.iso.omega();
        let ring = c.ring();
        let w_max = c.w_max();
        let homology = self.homology()?;
        let omega_ranks: Vec<usize> = (0..=self.top).map(|n| omega.basis(n).len()).collect();
        let modules_match = (0..=self.top).all(|n| {
            homology
                .get(n)
                .is_some_and(|h| h.torsion.is_empty() && h.betti == omega_ranks[n])
        });

        let l_is_iso = if ring.is_field() {
            let mut ok = true;
            for n in 0..=self.top {
                let basis = c.level_basis(n);
                let cols: Vec<Vec<BigInt>> = omega
                    .basis(n)
                    .keys()
                    .iter()
                    .map(|f| basis.coords(&self.l_form(f)))
                    .collect::<Result<_>>()?;
                let l = Matrix::from_columns(basis.len(), &cols);
                if n > 0 && !simplicial_boundary(c, n)?.mul(&l)?.is_zero_in(ring) {
                    ok = false;
                    break;
                }
                let b = simplicial_boundary(c, n + 1)?;
                let r_b = smith::rank(ring, &b)?;
                let r_bl = smith::rank(ring, &b.hstack(&l)?)?;
                let betti = homology.get(n).map_or(0, |h| h.betti);
                if r_bl - r_b != omega_ranks[n] || betti != omega_ranks[n] {
                    ok = false;
                    break;
                }
            }
            Some(ok)
        } else {
            None
        };

        let mut shuffle_pairs = 0;
        let mut shuffle_ok = true;
        'outer: for p in 0..=self.top {
            for q in 0..=self.top - p {
                for f in omega.basis(p).keys() {
                    for g in omega.basis(q).keys() {
                        if Hkr::weight(f) + Hkr::weight(g) > w_max {
                            continue;
                        }
                        let lf = self.l_form(f);
                        let lg = self.l_form(g);
                        let star = shuffle_product(c, p, &lf, q, &lg);
                        let prod = self.l(&omega.mul_forms(f, g));
                        shuffle_pairs += 1;
                        if !is_boundary(c, p + q, &star.minus(&prod))? {
                            shuffle_ok = false;
                            break 'outer;
                        }
                    }
                }
            }
        }

        let mut connes_ok = true;
        'connes: for n in 0..self.top {
            for f in omega.basis(n).keys() {
                let lhs = self.connes_b(n, &self.l_form(f));
                let rhs = self.l(&super::omega::Omega::d_form(f));
                if !is_degenerate(c, n + 1, &lhs.minus(&rhs))? {
                    connes_ok = false;
                    break 'connes;
                }
            }
        }

        Ok(HkrReport {
            ring: ring.to_string(),
            top: self.top,
            w_max,
            homology: homology
                .degrees
                .iter()
                .map(|h| (h.degree, h.betti, h.torsion.iter().map(|t| t.to_string()).collect()))
                .collect(),
            omega_ranks,
            modules_match,
            l_is_iso,
            shuffle_pairs,
            shuffle_ok,
            connes_ok,
        })
    }
}

/// Convenience wrapper: the full report for `S` in degrees `0..=top`.
pub fn nchkr_suite(algebra: &StructAlgebra, top: usize, w_max: usize) -> Result<HkrReport> {
    Hkr::new(algebra, top, w_max)?.run()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linear::CoeffRing;

    fn z2() -> CoeffRing {
        CoeffRing::modular(2).unwrap()
    }

    #[test]
    fn dual_numbers_over_z2() {
        let r = nchkr_suite(&StructAlgebra::dual_numbers(z2()), 2, 3).unwrap();
        assert_eq!(r.homology.iter().map(|h| h.1).collect::<Vec<_>>(), vec![2, 2, 2]);
        assert!(r.passed(), "{r:?}");
        assert!(r.shuffle_pairs > 0);
    }

    #[test]
    fn upper_triangular_over_z2() {
        let r = nchkr_suite(&StructAlgebra::upper_triangular(z2()), 2, 3).unwrap();
        assert_eq!(r.omega_ranks, vec![3, 6, 12]);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn degree_zero_is_s() {
        let r = nchkr_suite(&StructAlgebra::truncated_polynomial3(CoeffRing::Integers), 0, 1).unwrap();
        assert_eq!(r.homology[0].1, 3);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn rejects_short_words() {
        assert!(matches!(Hkr::new(&StructAlgebra::dual_numbers(z2()), 2, 2), Err(Error::Truncation(_))));
    }
}
