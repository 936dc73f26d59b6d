//! Cosimplicial maps `QA → QB`, the induced chain map `f̄ = p̂ N(f) j`,
//! and the path-object homotopy between `N f` and `N Q(f̄)`.

use num_bigint::BigInt;
use rand::Rng;

use crate::error::{Error, Result};
use crate::exact_linear::random::random_matrix;
use crate::exact_linear::{smith, BoundedComplex, ChainMap, FreeModule, Matrix};
use crate::fin_maps::FinMap;

use super::cosimplicial::{map_from_normalized, normalize, FinObject};
use super::nqa::{Nqa, Retraction};
use super::qk::{q_of_map, QObject};

/// `PB^n = B^n ⊕ B^{n-1} ⊕ B^n` with `∂(x, y, z) = (dx, x − dy − z, dz)`.
#[derive(Clone, Debug)]
pub struct PathObject {
    base: BoundedComplex,
    complex: BoundedComplex,
}

impl PathObject {
    pub fn new(b: &BoundedComplex) -> Result<Self> {
        let ring = b.ring();
        let top = b.top() + 1;
        let rank = |n: isize| if n < 0 { 0 } else { b.rank(n as usize) };
        let modules = (0..=top)
            .map(|n| {
                let n = n as isize;
                let mut labels = Vec::new();
                labels.extend((0..rank(n)).map(|i| format!("x{n}_{i}")));
                labels.extend((0..rank(n - 1)).map(|i| format!("y{}_{i}", n - 1)));
                labels.extend((0..rank(n)).map(|i| format!("z{n}_{i}")));
                FreeModule::new(labels)
            })
            .collect::<Result<Vec<_>>>()?;
        let d = (0..top)
            .map(|n| {
                let (src, tgt) = ([rank(n as isize), rank(n as isize - 1), rank(n as isize)], [
                    rank(n as isize + 1),
                    rank(n as isize),
                    rank(n as isize + 1),
                ]);
                let dn = b.differential(n);
                let id = Matrix::identity(src[0]);
                let minus_id = id.neg();
                let dy = if n == 0 { Matrix::zeros(tgt[1], 0) } else { b.differential(n - 1).neg() };
                Matrix::block(
                    &tgt,
                    &src,
                    &[
                        vec![Some(&dn), None, None],
                        vec![Some(&id), Some(&dy), Some(&minus_id)],
                        vec![None, None, Some(&dn)],
                    ],
                )
            })
            .collect();
        let complex = BoundedComplex::new(ring, modules, d, b.is_truncated())?;
        Ok(PathObject { base: b.clone(), complex })
    }

    pub fn complex(&self) -> &BoundedComplex {
        &self.complex
    }

    fn split(&self, n: usize) -> (usize, usize) {
        (self.base.rank(n), if n == 0 { 0 } else { self.base.rank(n - 1) })
    }

    /// `ε_0(x, y, z) = x`.
    pub fn eval0(&self) -> ChainMap {
        ChainMap {
            maps: (0..=self.complex.top())
                .map(|n| {
                    let (r, s) = self.split(n);
                    Matrix::identity(r).hstack(&Matrix::zeros(r, s + r)).expect("rows")
                })
                .collect(),
        }
    }

    /// `ε_1(x, y, z) = z`.
    pub fn eval1(&self) -> ChainMap {
        ChainMap {
            maps: (0..=self.complex.top())
                .map(|n| {
                    let (r, s) = self.split(n);
                    Matrix::zeros(r, r + s).hstack(&Matrix::identity(r)).expect("rows")
                })
                .collect(),
        }
    }

    pub fn check(&self) -> Result<()> {
        let top = self.complex.top();
        let b = self.base.extend_to(top);
        self.eval0().check(&self.complex, &b)?;
        self.eval1().check(&self.complex, &b)
    }
}

/// A levelwise map `f_n: Q^n A → Q^n B`, `n = 0..=top`.
#[derive(Clone, Debug)]
pub struct QMap {
    pub levels: Vec<Matrix>,
}

impl QMap {
    /// `Q(g)` for a chain map `g: A → B`.
    pub fn from_chain_map(a: &QObject, b: &QObject, g: &[Matrix], top: usize) -> Self {
        let levels = (0..=top)
            .map(|n| {
                let src = a.level_basis(n);
                let tgt = b.level_basis(n);
                let cols: Vec<Vec<BigInt>> = src
                    .keys()
                    .iter()
                    .map(|k| tgt.project(&q_of_map(g, &crate::combo::Combo::basis(k.clone()))))
                    .collect();
                Matrix::from_columns(tgt.len(), &cols).reduce(a.ring())
            })
            .collect();
        QMap { levels }
    }

    pub fn identity(a: &QObject, top: usize) -> Self {
        QMap {
            levels: (0..=top).map(|n| Matrix::identity(a.basis(n).len())).collect(),
        }
    }

    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }

    /// Commutes with every coface and codegeneracy between stored levels.
    pub fn check_cosimplicial(&self, a: &QObject, b: &QObject) -> Result<()> {
        let ring = a.ring();
        let top = self.top();
        for n in 0..=top {
            let mut maps = Vec::new();
            if n < top {
                maps.extend((0..=n + 1).map(|i| FinMap::coface(n, i)));
            }
            if n > 0 {
                maps.extend((0..n).map(|j| FinMap::codegeneracy(n, j)));
            }
            for alpha in maps {
                let alpha = alpha?;
                let m = alpha.target();
                let lhs = self.levels[m].dot(&a.action_matrix(&alpha)?);
                let rhs = b.action_matrix(&alpha)?.dot(&self.levels[n]);
                if !lhs.eq_in(&rhs, ring) {
                    return Err(Error::InvalidStructure(format!("map does not commute with {alpha}")));
                }
            }
        }
        Ok(())
    }

    /// `N^n f` on the quotient bases of `N QA`, `N QB`.
    pub fn normalized(&self, a: &QObject, na: &Nqa, b: &QObject, nb: &Nqa, n: usize) -> Matrix {
        let src = a.level_basis(n);
        let tgt = b.level_basis(n);
        let f = &self.levels[n];
        let cols: Vec<Vec<BigInt>> = na
            .basis(n)
            .keys()
            .iter()
            .map(|k| {
                let c = src.position(k).expect("surjective key lies in Q^n");
                nb.basis(n).project(&tgt.combo(&f.column(c)))
            })
            .collect();
        Matrix::from_columns(nb.basis(n).len(), &cols)
    }

    /// A cosimplicial map whose Moore normalization is
    /// `N Q(g) + ∂σ + σ∂` for a random `σ`.
    pub fn random<R: Rng>(a: &QObject, b: &QObject, g: &[Matrix], top: usize, rng: &mut R) -> Result<Self> {
        let ring = a.ring();
        let na = normalize(a, top)?;
        let nb = normalize(b, top)?;
        let qg = QMap::from_chain_map(a, b, g, top);
        let sigma: Vec<Matrix> = (0..=top)
            .map(|k| {
                if k == 0 {
                    Matrix::zeros(0, na.complex.rank(0))
                } else {
                    random_matrix(nb.complex.rank(k - 1), na.complex.rank(k), rng)
                }
            })
            .collect();
        let mut psi = Vec::new();
        for k in 0..=top {
            let image = qg.levels[k].dot(&na.inclusion[k]);
            let mut m = smith::solve(ring, &nb.inclusion[k], &image)?;
            if k > 0 {
                m = m.plus(&nb.complex.differential(k - 1).dot(&sigma[k]));
            }
            if k < top {
                m = m.plus(&sigma[k + 1].dot(&na.complex.differential(k)));
            }
            psi.push(m.reduce(ring));
        }
        let levels = (0..=top)
            .map(|n| map_from_normalized(a, &na, b, &nb, &psi, n))
            .collect::<Result<_>>()?;
        Ok(QMap { levels })
    }
}

/// `N Q(g)` on the quotient bases.
pub fn nq_of_chain_map(na: &Nqa, nb: &Nqa, g: &[Matrix], n: usize) -> Matrix {
    let cols: Vec<Vec<BigInt>> = na
        .basis(n)
        .keys()
        .iter()
        .map(|k| nb.basis(n).project(&q_of_map(g, &crate::combo::Combo::basis(k.clone()))))
        .collect();
    Matrix::from_columns(nb.basis(n).len(), &cols)
}

/// Everything attached to one cosimplicial map `f: QA → QB`.
#[derive(Clone, Debug)]
pub struct BarData {
    /// `f̄ = p̂ N(f) j: A → B`.
    pub bar: Vec<Matrix>,
    pub nf: Vec<Matrix>,
    pub nq_bar: Vec<Matrix>,
    /// `δ = N f − N Q(f̄)`.
    pub delta: Vec<Matrix>,
    /// `κ` with `κ∂ + ∂κ = δ`.
    pub kappa: Vec<Matrix>,
    pub path: PathObject,
    /// `(N f, κ, N Q f̄): N QA → P(N QB)`.
    pub homotopy: ChainMap,
}

/// `f̄`, `κ` and the homotopy into the path object, all verified.
pub fn bar(a: &QObject, na: &Nqa, b: &QObject, nb: &Nqa, f: &QMap) -> Result<BarData> {
    super::qk::compatible(na.base(), nb.base())?;
    let top = na.top();
    if f.top() < top {
        return Err(Error::Truncation(format!("map stops at level {}, need {top}", f.top())));
    }
    f.check_cosimplicial(a, b)?;
    let ring = na.ring();
    let ra: Retraction = na.retraction()?;
    let rb: Retraction = nb.retraction()?;
    let nf: Vec<Matrix> = (0..=top).map(|n| f.normalized(a, na, b, nb, n)).collect();
    let bar: Vec<Matrix> = (0..=top)
        .map(|n| nb.p_hat(n).dot(&nf[n]).dot(&ra.j[n]).reduce(ring))
        .collect();
    let nq_bar: Vec<Matrix> = (0..=top).map(|n| nq_of_chain_map(na, nb, &bar, n)).collect();
    let delta: Vec<Matrix> = (0..=top).map(|n| nf[n].minus(&nq_bar[n]).reduce(ring)).collect();
    let da = |n: usize| na.coboundary(n);
    let db = |n: usize| nb.coboundary(n);
    let mut kappa = vec![Matrix::zeros(0, na.basis(0).len())];
    for n in 1..=top {
        let hd = rb.h[n].dot(&delta[n]);
        let mut k = hd.plus(&delta[n - 1].dot(&ra.h[n]));
        let mut corr = hd.dot(&da(n - 1));
        if n >= 2 {
            corr = corr.plus(&db(n - 2).dot(&rb.h[n - 1]).dot(&delta[n - 1]));
        }
        k = k.minus(&corr.dot(&ra.h[n]));
        kappa.push(k.reduce(ring));
    }
    for n in 0..=top {
        let mut lhs = Matrix::zeros(nb.basis(n).len(), na.basis(n).len());
        if n < top {
            lhs = lhs.plus(&kappa[n + 1].dot(&da(n)));
        }
        if n > 0 {
            lhs = lhs.plus(&db(n - 1).dot(&kappa[n]));
        }
        if !lhs.eq_in(&delta[n], ring) {
            return Err(Error::InvalidStructure(format!("κ∂ + ∂κ ≠ δ in degree {n}")));
        }
    }
    let nqb = nb.complex()?;
    let path = PathObject::new(&nqb)?;
    let maps = (0..=top)
        .map(|n| Matrix::vstack_all(na.basis(n).len(), &[nf[n].clone(), kappa[n].clone(), nq_bar[n].clone()]))
        .collect();
    let homotopy = ChainMap::new(&na.complex()?, path.complex(), maps)?;
    Ok(BarData {
        bar,
        nf,
        nq_bar,
        delta,
        kappa,
        path,
        homotopy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linear::random::{random_complex, random_endomorphism};
    use crate::exact_linear::CoeffRing;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const Z: CoeffRing = CoeffRing::Integers;

    fn setup(a: &BoundedComplex) -> (QObject, Nqa) {
        let nqa = Nqa::from_complex(a, 5).unwrap();
        (QObject::from_base(nqa.base().clone()), nqa)
    }

    fn times_two() -> BoundedComplex {
        BoundedComplex::from_ranks(Z, &[1, 1], vec![Matrix::from_i64_rows(&[vec![2]]).unwrap()]).unwrap()
    }

    #[test]
    fn path_object_is_a_complex() {
        let p = PathObject::new(&BoundedComplex::disk(Z, 1)).unwrap();
        p.check().unwrap();
        assert_eq!(p.complex().ranks(), vec![0, 2, 3, 1]);
    }

    #[test]
    fn identity_has_trivial_homotopy() {
        let a = times_two();
        let (q, n) = setup(&a);
        let f = QMap::identity(&q, n.top() + 1);
        let data = bar(&q, &n, &q, &n, &f).unwrap();
        assert!(data.bar.iter().all(Matrix::is_identity));
        assert!(data.delta.iter().all(Matrix::is_zero));
        assert!(data.kappa.iter().all(Matrix::is_zero));
    }

    #[test]
    fn bar_of_q_of_g_is_g() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..5 {
            let a = random_complex(Z, 3, 2, &mut rng);
            let g = random_endomorphism(&a, &mut rng);
            let (q, n) = setup(&a);
            let f = QMap::from_chain_map(&q, &q, &g.maps, n.top() + 1);
            let data = bar(&q, &n, &q, &n, &f).unwrap();
            assert_eq!(data.bar, g.maps);
        }
    }

    #[test]
    fn random_maps_give_homotopies() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let a = times_two().tensor(&times_two()).unwrap();
        let g = random_endomorphism(&a, &mut rng);
        let (q, n) = setup(&a);
        let f = QMap::random(&q, &q, &g.maps, n.top() + 1, &mut rng).unwrap();
        let data = bar(&q, &n, &q, &n, &f).unwrap();
        assert!(data.delta.iter().any(|m| !m.is_zero()));
        let p = &data.path;
        p.check().unwrap();
        let e0: Vec<Matrix> = (0..=n.top()).map(|k| p.eval0().maps[k].dot(&data.homotopy.maps[k])).collect();
        assert_eq!(e0, data.nf);
    }

    #[test]
    fn non_cosimplicial_maps_are_rejected() {
        let a = times_two();
        let (q, n) = setup(&a);
        let mut f = QMap::identity(&q, n.top() + 1);
        f.levels[1] = f.levels[1].scale(&BigInt::from(2));
        assert!(bar(&q, &n, &q, &n, &f).is_err());
    }
}
