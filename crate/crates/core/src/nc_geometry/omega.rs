//! Noncommutative differential forms `Ω^n = S ⊗ S̄^{⊗n}` relative to `k`.
//! A basis form is stored as `[a_0, a_1, …, a_n]` meaning `a_0 da_1 ⋯ da_n`,
//! with `a_0` any basis index of `S` and `a_i ≥ 1`.

use num_bigint::BigInt;
use num_traits::One;

use crate::combo::Combo;
use crate::dold_kan_core::cosimplicial::LevelBasis;
use crate::error::{Error, Result};
use crate::exact_linear::{BoundedComplex, FreeModule, Matrix};
use crate::ring_layer::dg_ring::Basis;
use crate::ring_layer::DGRing;

use super::struct_algebra::{Elem, StructAlgebra};

pub type Form = Vec<u8>;

#[derive(Clone, Debug)]
pub struct Omega {
    algebra: StructAlgebra,
    bases: Vec<LevelBasis<Form>>,
    dg: DGRing,
}

fn forms(r: usize, n: usize) -> Vec<Form> {
    let mut out: Vec<Form> = (0..r as u8).map(|a| vec![a]).collect();
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|f| {
                (1..r as u8).map(move |a| {
                    let mut g = f.clone();
                    g.push(a);
                    g
                })
            })
            .collect();
    }
    out
}

/// `ω · d c` for `c ∈ S`; the unit component of `c` drops out.
fn append_d(omega: &Combo<Form>, c: &Elem) -> Combo<Form> {
    let mut out = Combo::zero();
    for (f, x) in omega.iter() {
        for (&k, y) in c.iter() {
            if k != 0 {
                let mut g = f.clone();
                g.push(k as u8);
                out.add_term(g, x * y);
            }
        }
    }
    out
}

impl Omega {
    /// `Ω_kS` cut at degree `r_max`.
    pub fn new(algebra: &StructAlgebra, r_max: usize) -> Result<Self> {
        let r = algebra.rank();
        let ring = algebra.ring();
        let bases: Vec<LevelBasis<Form>> = (0..=r_max).map(|n| LevelBasis::new(forms(r, n))).collect();
        let label = |f: &Form| -> String {
            let mut s = if f[0] == 0 && f.len() > 1 {
                String::new()
            } else {
                algebra.label(f[0] as usize).to_string()
            };
            for &a in &f[1..] {
                if !s.is_empty() {
                    s.push(' ');
                }
                s.push('d');
                s.push_str(algebra.label(a as usize));
            }
            s
        };
        let modules = bases
            .iter()
            .map(|b| FreeModule::new(b.keys().iter().map(label).collect()))
            .collect::<Result<Vec<_>>>()?;
        let d = (0..r_max)
            .map(|n| {
                let cols: Vec<Vec<BigInt>> = bases[n]
                    .keys()
                    .iter()
                    .map(|f| bases[n + 1].project(&Omega::d_form(f)))
                    .collect();
                Matrix::from_columns(bases[n + 1].len(), &cols)
            })
            .collect();
        let complex = BoundedComplex::new(ring, modules, d, false)?;
        let mut unit = vec![BigInt::from(0); r];
        unit[0] = BigInt::one();
        let dg = {
            let bases = &bases;
            DGRing::build(complex, unit, |x, y| {
                let f = &bases[x.0].keys()[x.1];
                let g = &bases[y.0].keys()[y.1];
                let prod = Omega::mul_forms_in(algebra, f, g);
                prod.iter()
                    .map(|(k, c)| (bases[x.0 + y.0].position(k).expect("form basis"), c.clone()))
                    .collect()
            })?
        };
        Ok(Omega {
            algebra: algebra.clone(),
            bases,
            dg,
        })
    }

    /// `d(a_0 da_1 ⋯ da_n) = da_0 da_1 ⋯ da_n`.
    pub fn d_form(f: &Form) -> Combo<Form> {
        if f[0] == 0 {
            return Combo::zero();
        }
        let mut g = vec![0];
        g.extend(f.iter().copied());
        Combo::basis(g)
    }

    /// `ω · b` for `b ∈ S`, pushing `b` left with `(da)b = d(ab) − a db`.
    fn mul_scalar(s: &StructAlgebra, f: &[u8], b: &Elem) -> Combo<Form> {
        if f.len() == 1 {
            let ab = s.mul(&Combo::basis(f[0] as usize), b);
            return ab.map_keys(|&k| vec![k as u8]);
        }
        let (head, last) = (&f[..f.len() - 1], f[f.len() - 1] as usize);
        let ab = s.mul(&Combo::basis(last), b);
        let mut out = append_d(&Combo::basis(head.to_vec()), &ab);
        let mut rest = Combo::zero();
        for (g, c) in Omega::mul_scalar(s, head, &Combo::basis(last)).iter() {
            rest.add_scaled(&append_d(&Combo::basis(g.clone()), b), c);
        }
        out.sub_assign(&rest);
        s.ring().reduce_combo(&mut out);
        out
    }

    fn mul_forms_in(s: &StructAlgebra, f: &Form, g: &Form) -> Combo<Form> {
        let mut out = Omega::mul_scalar(s, f, &Combo::basis(g[0] as usize));
        for &b in &g[1..] {
            out = append_d(&out, &Combo::basis(b as usize));
        }
        s.ring().reduce_combo(&mut out);
        out
    }

    pub fn mul_forms(&self, f: &Form, g: &Form) -> Combo<Form> {
        Omega::mul_forms_in(&self.algebra, f, g)
    }

    pub fn algebra(&self) -> &StructAlgebra {
        &self.algebra
    }

    pub fn dg(&self) -> &DGRing {
        &self.dg
    }

    pub fn top(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn basis(&self, n: usize) -> &LevelBasis<Form> {
        &self.bases[n]
    }

    pub fn form(&self, b: Basis) -> &Form {
        &self.bases[b.0].keys()[b.1]
    }

    pub fn to_basis(&self, x: &Combo<Form>) -> Combo<Basis> {
        x.map_keys(|f| {
            let n = f.len() - 1;
            (n, self.bases[n].position(f).expect("form in range"))
        })
    }

    /// The DG map `Ω → X` extending a ring map `f: S → X^0`, given by the
    /// images of the basis of `S`:
    /// `a_0 da_1 ⋯ da_n ↦ f(a_0) df(a_1) ⋯ df(a_n)`. Checks that `f` is a
    /// unital ring map and that the extension commutes with `d` and with
    /// products on the common truncated range.
    pub fn extend(&self, target: &DGRing, images: &[Combo<Basis>]) -> Result<Vec<Matrix>> {
        let s = &self.algebra;
        if images.len() != s.rank() || images.iter().any(|x| x.keys().any(|k| k.0 != 0)) {
            return Err(Error::Precondition("need one degree-0 image per basis element of S".into()));
        }
        let ring = s.ring();
        let apply_s = |x: &Elem| -> Combo<Basis> {
            let mut out = Combo::zero();
            for (&i, c) in x.iter() {
                out.add_scaled(&images[i], c);
            }
            out
        };
        let same = |a: &Combo<Basis>, b: &Combo<Basis>| {
            let mut d = a.minus(b);
            ring.reduce_combo(&mut d);
            d.is_zero()
        };
        if !same(&images[0], &target.unit()) {
            return Err(Error::InvalidStructure("f does not preserve the unit".into()));
        }
        for i in 0..s.rank() {
            for j in 0..s.rank() {
                let lhs = apply_s(&Combo::from_terms(s.mul_basis(i, j).iter().cloned()));
                if !same(&lhs, &target.mul(&images[i], &images[j])) {
                    return Err(Error::InvalidStructure(format!("f is not multiplicative on ({i}, {j})")));
                }
            }
        }
        let top = self.top().min(target.top());
        let image_of = |f: &Form| -> Combo<Basis> {
            let mut out = images[f[0] as usize].clone();
            for &a in &f[1..] {
                out = target.mul(&out, &target.d(&images[a as usize]));
            }
            out
        };
        let maps: Vec<Matrix> = (0..=top)
            .map(|n| {
                let mut m = Matrix::zeros(target.rank(n), self.bases[n].len());
                for (j, f) in self.bases[n].keys().iter().enumerate() {
                    for (k, c) in image_of(f).iter() {
                        m[(k.1, j)] += c;
                    }
                }
                m.reduce(ring)
            })
            .collect();
        let apply = |x: &Combo<Basis>| -> Combo<Basis> {
            let mut out = Combo::zero();
            for (b, c) in x.iter() {
                for (k, v) in maps[b.0].column(b.1).iter().enumerate() {
                    out.add_term((b.0, k), c * v);
                }
            }
            ring.reduce_combo(&mut out);
            out
        };
        for n in 0..=top {
            for j in 0..self.bases[n].len() {
                let x = Combo::basis((n, j));
                if n < top && !same(&apply(&self.dg.d(&x)), &target.d(&apply(&x))) {
                    return Err(Error::InvalidStructure(format!("extension does not commute with d on {:?}", self.form((n, j)))));
                }
                for m in 0..=top - n {
                    for k in 0..self.bases[m].len() {
                        let y = Combo::basis((m, k));
                        if !same(&apply(&self.dg.mul(&x, &y)), &target.mul(&apply(&x), &apply(&y))) {
                            return Err(Error::InvalidStructure("extension is not multiplicative".into()));
                        }
                    }
                }
            }
        }
        Ok(maps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linear::CoeffRing;

    fn z2() -> CoeffRing {
        CoeffRing::modular(2).unwrap()
    }

    #[test]
    fn ranks() {
        let o = Omega::new(&StructAlgebra::dual_numbers(z2()), 4).unwrap();
        assert_eq!(o.dg().ranks(), vec![2, 2, 2, 2, 2]);
        let o = Omega::new(&StructAlgebra::upper_triangular(z2()), 3).unwrap();
        assert_eq!(o.dg().ranks(), vec![3, 6, 12, 24]);
        let o = Omega::new(&StructAlgebra::ground(CoeffRing::Integers), 3).unwrap();
        assert_eq!(o.dg().ranks(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn push_through_products() {
        let s = StructAlgebra::dual_numbers(CoeffRing::Integers);
        let o = Omega::new(&s, 3).unwrap();
        // (dx)x = d(x²) − x dx = −x dx
        assert_eq!(o.mul_forms(&vec![0, 1], &vec![1]), Combo::term(vec![1, 1], BigInt::from(-1)));
        // x(dx) is already normal
        assert_eq!(o.mul_forms(&vec![1], &vec![0, 1]), Combo::basis(vec![1, 1]));
        let u = StructAlgebra::upper_triangular(CoeffRing::Integers);
        let o = Omega::new(&u, 2).unwrap();
        // Ω^0 = S as a ring: e12 e22 = e12, e22 e12 = 0
        assert_eq!(o.mul_forms(&vec![1], &vec![2]), Combo::basis(vec![1]));
        assert!(o.mul_forms(&vec![2], &vec![1]).is_zero());
        // (de22) e12 = d(e22 e12) − e22 de12 = −e22 de12
        assert_eq!(o.mul_forms(&vec![0, 2], &vec![1]), Combo::term(vec![2, 1], BigInt::from(-1)));
    }

    #[test]
    fn universal_property_on_identity_and_tensor() {
        let s = StructAlgebra::dual_numbers(CoeffRing::Integers);
        let o = Omega::new(&s, 3).unwrap();
        let id: Vec<Combo<Basis>> = (0..2).map(|i| Combo::basis((0, i))).collect();
        let maps = o.extend(o.dg(), &id).unwrap();
        assert!(maps.iter().all(Matrix::is_identity));
        // S → Ω ⊗ Ω, s ↦ s ⊗ 1
        let t = o.dg().tensor(o.dg(), 3).unwrap();
        let images: Vec<Combo<Basis>> = (0..2).map(|i| Combo::basis((0, i * 2))).collect();
        o.extend(&t, &images).unwrap();
        // a non-multiplicative assignment is rejected: x ↦ 1
        let bad = vec![Combo::basis((0, 0)), Combo::basis((0, 0))];
        assert!(o.extend(o.dg(), &bad).is_err());
    }
}
