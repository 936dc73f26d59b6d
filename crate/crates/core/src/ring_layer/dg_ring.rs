//! DG-rings given by structure constants on a basis of each degree, cut
//! above a top degree (the quotient by the DG-ideal `A^{>top}`).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use serde_json::{json, Value};

use crate::combo::Combo;
use crate::error::{Error, Result};
use crate::exact_linear::complex::{matrix_from_json, matrix_to_json};
use crate::exact_linear::random::random_unimodular;
use crate::exact_linear::{BoundedComplex, CoeffRing, FreeModule, Matrix};

/// A homogeneous basis element `(degree, index)`.
pub type Basis = (usize, usize);

#[derive(Clone, Debug)]
pub struct DGRing {
    complex: BoundedComplex,
    /// `mult[p][q]` has a column `i·rank(q) + j` holding `e_{p,i} e_{q,j}`;
    /// present only for `p + q ≤ top`.
    mult: Vec<Vec<Matrix>>,
    unit: Vec<BigInt>,
}

fn koszul(p: usize) -> BigInt {
    if p % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

impl DGRing {
    /// Builds and checks a DG-ring from a product rule on basis elements.
    pub fn build<F>(complex: BoundedComplex, unit: Vec<BigInt>, product: F) -> Result<Self>
    where
        F: Fn(Basis, Basis) -> Vec<(usize, BigInt)>,
    {
        if unit.len() != complex.rank(0) {
            return Err(Error::Dimension("unit must live in degree 0".into()));
        }
        let r = DGRing::build_unchecked(complex, unit, product);
        r.check()?;
        Ok(r)
    }

    /// As `build`, without the cubic-cost law checks; for rings that are
    /// correct by construction (tensor algebras) and checked separately.
    pub(crate) fn build_unchecked<F>(complex: BoundedComplex, unit: Vec<BigInt>, product: F) -> Self
    where
        F: Fn(Basis, Basis) -> Vec<(usize, BigInt)>,
    {
        let top = complex.top();
        let ring = complex.ring();
        let mult = (0..=top)
            .map(|p| {
                (0..=top - p)
                    .map(|q| {
                        let (rp, rq) = (complex.rank(p), complex.rank(q));
                        let mut m = Matrix::zeros(complex.rank(p + q), rp * rq);
                        for i in 0..rp {
                            for j in 0..rq {
                                for (k, c) in product((p, i), (q, j)) {
                                    m[(k, i * rq + j)] += c;
                                }
                            }
                        }
                        m.reduce(ring)
                    })
                    .collect()
            })
            .collect();
        let unit = unit.into_iter().map(|c| ring.reduce(&c)).collect();
        DGRing { complex, mult, unit }
    }

    pub fn complex(&self) -> &BoundedComplex {
        &self.complex
    }

    pub fn ring(&self) -> CoeffRing {
        self.complex.ring()
    }

    pub fn top(&self) -> usize {
        self.complex.top()
    }

    pub fn rank(&self, p: usize) -> usize {
        self.complex.rank(p)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.complex.ranks()
    }

    pub fn unit_vector(&self) -> &[BigInt] {
        &self.unit
    }

    pub fn unit(&self) -> Combo<Basis> {
        Combo::from_terms(self.unit.iter().enumerate().map(|(i, c)| ((0, i), c.clone())))
    }

    pub fn label(&self, b: Basis) -> &str {
        self.complex.module(b.0).expect("degree in range").label(b.1)
    }

    pub fn basis(&self) -> Vec<Basis> {
        (0..=self.top()).flat_map(|p| (0..self.rank(p)).map(move |i| (p, i))).collect()
    }

    /// `e_x e_y`, zero above the top degree.
    pub fn mul_basis(&self, x: Basis, y: Basis) -> Vec<(usize, BigInt)> {
        let (p, i) = x;
        let (q, j) = y;
        if p + q > self.top() {
            return Vec::new();
        }
        let m = &self.mult[p][q];
        let col = i * self.rank(q) + j;
        (0..m.rows())
            .filter(|&k| !m[(k, col)].is_zero())
            .map(|k| (k, m[(k, col)].clone()))
            .collect()
    }

    pub fn mul(&self, x: &Combo<Basis>, y: &Combo<Basis>) -> Combo<Basis> {
        let mut out = x.bilinear(y, |a, b| {
            Combo::from_terms(self.mul_basis(*a, *b).into_iter().map(|(k, c)| ((a.0 + b.0, k), c)))
        });
        self.ring().reduce_combo(&mut out);
        out
    }

    pub fn d_basis(&self, x: Basis) -> Vec<(usize, BigInt)> {
        let (p, i) = x;
        if p >= self.top() {
            return Vec::new();
        }
        let m = self.complex.differential(p);
        (0..m.rows())
            .filter(|&k| !m[(k, i)].is_zero())
            .map(|k| (k, m[(k, i)].clone()))
            .collect()
    }

    pub fn d(&self, x: &Combo<Basis>) -> Combo<Basis> {
        let mut out = x.map_linear(|b| Combo::from_terms(self.d_basis(*b).into_iter().map(|(k, c)| ((b.0 + 1, k), c))));
        self.ring().reduce_combo(&mut out);
        out
    }

    /// Associativity, unit laws and the Leibniz rule on all basis tuples.
    pub fn check(&self) -> Result<()> {
        let basis = self.basis();
        let one = self.unit();
        let ring = self.ring();
        let eq = |a: &Combo<Basis>, b: &Combo<Basis>| {
            let mut diff = a.minus(b);
            ring.reduce_combo(&mut diff);
            diff.is_zero()
        };
        for &x in &basis {
            let ex = Combo::basis(x);
            if !eq(&self.mul(&one, &ex), &ex) || !eq(&self.mul(&ex, &one), &ex) {
                return Err(Error::InvalidStructure(format!("unit law fails on {}", self.label(x))));
            }
            for &y in &basis {
                if x.0 + y.0 > self.top() {
                    continue;
                }
                let ey = Combo::basis(y);
                let lhs = self.d(&self.mul(&ex, &ey));
                let rhs = self
                    .mul(&self.d(&ex), &ey)
                    .plus(&self.mul(&ex, &self.d(&ey)).scaled(&koszul(x.0)));
                if !eq(&lhs, &rhs) {
                    return Err(Error::InvalidStructure(format!(
                        "Leibniz rule fails on ({}, {})",
                        self.label(x),
                        self.label(y)
                    )));
                }
                for &z in &basis {
                    if x.0 + y.0 + z.0 > self.top() {
                        continue;
                    }
                    let ez = Combo::basis(z);
                    let l = self.mul(&self.mul(&ex, &ey), &ez);
                    let r = self.mul(&ex, &self.mul(&ey, &ez));
                    if !eq(&l, &r) {
                        return Err(Error::InvalidStructure("multiplication is not associative".into()));
                    }
                }
            }
        }
        Ok(())
    }

    /// `Z` (or `Z/m`) in degree 0.
    pub fn ground(ring: CoeffRing) -> Self {
        let c = BoundedComplex::from_ranks(ring, &[1], vec![]).expect("rank one");
        DGRing::build(c, vec![BigInt::one()], |_, _| vec![(0, BigInt::one())]).expect("ground ring")
    }

    /// `Z[x]/(x^k)` with `|x| = deg`, cut at `top`; `dx = c·x²` (needs
    /// `deg = 1` unless `c = 0`).
    pub fn truncated_polynomial(ring: CoeffRing, deg: usize, k: usize, c: i64, top: usize) -> Result<Self> {
        if deg == 0 || k == 0 {
            return Err(Error::Precondition("need a positive generator degree and k ≥ 1".into()));
        }
        if c != 0 && deg != 1 {
            return Err(Error::Precondition("dx = c·x² needs |x| = 1".into()));
        }
        let powers: Vec<usize> = (0..k).filter(|m| m * deg <= top).collect();
        let mut ranks = vec![0usize; top + 1];
        let mut labels: Vec<Vec<String>> = vec![Vec::new(); top + 1];
        for &m in &powers {
            ranks[m * deg] = 1;
            labels[m * deg].push(match m {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{m}"),
            });
        }
        let modules = labels.into_iter().map(FreeModule::new).collect::<Result<Vec<_>>>()?;
        // d(x^m) = c·x^{m+1} for m odd
        let d = (0..top)
            .map(|p| {
                let mut m = Matrix::zeros(ranks[p + 1], ranks[p]);
                if ranks[p] == 1 && ranks[p + 1] == 1 && deg == 1 && p % 2 == 1 && p + 1 < k {
                    m[(0, 0)] = BigInt::from(c);
                }
                m
            })
            .collect();
        let complex = BoundedComplex::new(ring, modules, d, false)?;
        DGRing::build(complex, vec![BigInt::one()], |x, y| {
            let m = (x.0 + y.0) / deg;
            if m < k {
                vec![(0, BigInt::one())]
            } else {
                Vec::new()
            }
        })
    }

    /// `Z ⊕ Z<n,n+1>` with `du = v` and all products of `u, v` zero.
    pub fn square_zero_disk(ring: CoeffRing, n: usize) -> Result<Self> {
        let top = n + 1;
        let mut labels: Vec<Vec<String>> = vec![Vec::new(); top + 1];
        labels[0].push("1".into());
        labels[n].push("u".into());
        labels[n + 1].push("v".into());
        let ranks: Vec<usize> = labels.iter().map(Vec::len).collect();
        let d = (0..top)
            .map(|p| {
                let mut m = Matrix::zeros(ranks[p + 1], ranks[p]);
                if p == n {
                    m[(0, ranks[p] - 1)] = BigInt::one();
                }
                m
            })
            .collect();
        let modules = labels.into_iter().map(FreeModule::new).collect::<Result<Vec<_>>>()?;
        let complex = BoundedComplex::new(ring, modules, d, false)?;
        let mut unit = vec![BigInt::zero(); ranks[0]];
        unit[0] = BigInt::one();
        DGRing::build(complex, unit, |x, y| {
            let is_one = |b: Basis| b == (0, 0);
            if is_one(x) {
                vec![(y.1, BigInt::one())]
            } else if is_one(y) {
                vec![(x.1, BigInt::one())]
            } else {
                Vec::new()
            }
        })
    }

    /// Graded tensor product, `(a⊗b)(a'⊗b') = (−1)^{|b||a'|} aa'⊗bb'`, cut at `top`.
    pub fn tensor(&self, other: &DGRing, top: usize) -> Result<Self> {
        let complex = self.complex.tensor(&other.complex)?.truncate(top);
        let index = |n: usize| -> Vec<(Basis, Basis)> {
            let mut v = Vec::new();
            for i in 0..=n.min(self.top()) {
                let j = n - i;
                if j > other.top() {
                    continue;
                }
                for a in 0..self.rank(i) {
                    for b in 0..other.rank(j) {
                        v.push(((i, a), (j, b)));
                    }
                }
            }
            v
        };
        let bases: Vec<Vec<(Basis, Basis)>> = (0..=complex.top()).map(index).collect();
        let pos: HashMap<(Basis, Basis), usize> = bases
            .iter()
            .flat_map(|b| b.iter().enumerate().map(|(p, &k)| (k, p)))
            .collect();
        let mut unit = vec![BigInt::zero(); complex.rank(0)];
        for (i, c) in self.unit.iter().enumerate() {
            for (j, e) in other.unit.iter().enumerate() {
                unit[pos[&((0, i), (0, j))]] += c * e;
            }
        }
        DGRing::build(complex, unit, |x, y| {
            let (a, b) = bases[x.0][x.1];
            let (a2, b2) = bases[y.0][y.1];
            let sign = koszul(b.0 * a2.0);
            let mut out = Vec::new();
            for (k, c) in self.mul_basis(a, a2) {
                for (l, e) in other.mul_basis(b, b2) {
                    let key = ((a.0 + a2.0, k), (b.0 + b2.0, l));
                    if let Some(&p) = pos.get(&key) {
                        out.push((p, &c * &e * &sign));
                    }
                }
            }
            out
        })
    }

    /// `A × B`, degreewise `A^p ⊕ B^p`.
    pub fn product(&self, other: &DGRing) -> Result<Self> {
        let complex = self.complex.direct_sum(&other.complex)?;
        let shift = |p: usize| self.complex.rank(p);
        let mut unit = self.unit.clone();
        unit.extend(other.unit.iter().cloned());
        DGRing::build(complex, unit, |x, y| {
            let (left_x, left_y) = (x.1 < shift(x.0), y.1 < shift(y.0));
            match (left_x, left_y) {
                (true, true) => self.mul_basis(x, y),
                (false, false) => {
                    let s = shift(x.0 + y.0);
                    other
                        .mul_basis((x.0, x.1 - shift(x.0)), (y.0, y.1 - shift(y.0)))
                        .into_iter()
                        .map(|(k, c)| (k + s, c))
                        .collect()
                }
                _ => Vec::new(),
            }
        })
    }

    /// The same ring in the basis `U_p e` for invertible `U_p` (given with inverses).
    pub fn change_basis(&self, changes: &[(Matrix, Matrix)]) -> Result<Self> {
        let top = self.top();
        let d = (0..top)
            .map(|p| changes[p + 1].0.dot(&self.complex.differential(p)).dot(&changes[p].1))
            .collect();
        let modules = (0..=top)
            .map(|p| FreeModule::numbered(&format!("e{p}_"), self.rank(p)))
            .collect();
        let complex = BoundedComplex::new(self.ring(), modules, d, self.complex.is_truncated())?;
        let unit = changes[0].0.apply(&self.unit);
        DGRing::build(complex, unit, |x, y| {
            let old_x = changes[x.0].1.column(x.1);
            let old_y = changes[y.0].1.column(y.1);
            let cx = Combo::from_terms(old_x.into_iter().enumerate().map(|(i, c)| ((x.0, i), c)));
            let cy = Combo::from_terms(old_y.into_iter().enumerate().map(|(i, c)| ((y.0, i), c)));
            let prod = self.mul(&cx, &cy);
            let n = x.0 + y.0;
            let mut v = vec![BigInt::zero(); self.rank(n)];
            for ((_, k), c) in prod.iter() {
                v[*k] += c;
            }
            changes[n].0.apply(&v).into_iter().enumerate().collect()
        })
    }

    /// Reduction of the structure constants modulo `m`.
    pub fn reduce_ring(&self, ring: CoeffRing) -> Result<Self> {
        let complex = self.complex.reduce_ring(ring);
        DGRing::build(complex, self.unit.clone(), |x, y| self.mul_basis(x, y))
    }

    /// Drops degrees above `top`.
    pub fn truncate(&self, top: usize) -> Result<Self> {
        if top >= self.top() {
            return Ok(self.clone());
        }
        DGRing::build(self.complex.truncate(top), self.unit.clone(), |x, y| self.mul_basis(x, y))
    }

    /// A random small DG-ring: a product or tensor product of truncated
    /// polynomial rings and square-zero disks, in a random basis, with
    /// degrees `≤ top` and ranks `≤ max_rank`.
    pub fn random<R: Rng>(ring: CoeffRing, top: usize, max_rank: usize, rng: &mut R) -> Result<Self> {
        for _ in 0..200 {
            let block = |rng: &mut R| -> Result<DGRing> {
                match rng.gen_range(0..4) {
                    0 => DGRing::truncated_polynomial(ring, 1, rng.gen_range(2..=top + 1), rng.gen_range(-2..=2), top),
                    1 => DGRing::truncated_polynomial(ring, rng.gen_range(1..=top.max(1)), 2, 0, top),
                    2 => DGRing::square_zero_disk(ring, rng.gen_range(0..top.max(1))),
                    _ => Ok(DGRing::ground(ring)),
                }
            };
            let first = block(rng)?;
            let r = match rng.gen_range(0..3) {
                0 => first,
                1 => first.tensor(&block(rng)?, top)?,
                _ => first.product(&block(rng)?)?,
            }
            .truncate(top)?;
            if r.ranks().iter().any(|&k| k > max_rank) {
                continue;
            }
            let changes: Vec<(Matrix, Matrix)> = r.ranks().iter().map(|&k| random_unimodular(k, rng)).collect();
            return r.change_basis(&changes);
        }
        Err(Error::Precondition("no random DG-ring within the rank bound".into()))
    }

    pub fn to_json(&self) -> Value {
        let mut mult = Vec::new();
        for (p, row) in self.mult.iter().enumerate() {
            for (q, m) in row.iter().enumerate() {
                mult.push(json!({"p": p, "q": q, "matrix": matrix_to_json(m)}));
            }
        }
        json!({
            "complex": self.complex.to_json(),
            "mult": mult,
            "unit": self.unit.iter().map(crate::exact_linear::complex::bigint_to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let complex = BoundedComplex::from_json(v.get("complex").ok_or_else(|| Error::Parse("missing complex".into()))?)?;
        let unit = v
            .get("unit")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing unit".into()))?
            .iter()
            .map(crate::exact_linear::complex::bigint_from_json)
            .collect::<Result<Vec<_>>>()?;
        let mut tables: HashMap<(usize, usize), Matrix> = HashMap::new();
        for entry in v
            .get("mult")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing mult".into()))?
        {
            let p = entry["p"].as_u64().ok_or_else(|| Error::Parse("bad p".into()))? as usize;
            let q = entry["q"].as_u64().ok_or_else(|| Error::Parse("bad q".into()))? as usize;
            if p + q > complex.top() {
                return Err(Error::Parse(format!("product table ({p},{q}) above the top degree")));
            }
            let m = matrix_from_json(&entry["matrix"], complex.rank(p + q), complex.rank(p) * complex.rank(q))?;
            tables.insert((p, q), m);
        }
        let c2 = complex.clone();
        DGRing::build(complex, unit, |x, y| {
            let Some(m) = tables.get(&(x.0, y.0)) else {
                return Vec::new();
            };
            let col = x.1 * c2.rank(y.0) + y.1;
            (0..m.rows()).map(|k| (k, m[(k, col)].clone())).collect()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const Z: CoeffRing = CoeffRing::Integers;

    #[test]
    fn polynomial_differential() {
        let a = DGRing::truncated_polynomial(Z, 1, 4, 2, 3).unwrap();
        assert_eq!(a.ranks(), vec![1, 1, 1, 1]);
        assert_eq!(a.d_basis((1, 0)), vec![(0, BigInt::from(2))]);
        assert!(a.d_basis((2, 0)).is_empty());
        assert_eq!(a.d_basis((3, 0)), vec![]);
    }

    #[test]
    fn bad_differential_is_rejected() {
        // d(1) = x breaks d(1·1) = d(1)·1 + 1·d(1)
        let c = BoundedComplex::from_ranks(Z, &[1, 1], vec![Matrix::identity(1)]).unwrap();
        let r = DGRing::build(c, vec![BigInt::one()], |_, _| vec![(0, BigInt::one())]);
        assert!(r.is_err());
    }

    #[test]
    fn tensor_and_product_are_dg_rings() {
        let x = DGRing::truncated_polynomial(Z, 1, 3, 1, 3).unwrap();
        let y = DGRing::square_zero_disk(Z, 1).unwrap();
        let t = x.tensor(&y, 3).unwrap();
        assert_eq!(t.ranks(), vec![1, 2, 3, 2]);
        let p = x.product(&y).unwrap();
        assert_eq!(p.ranks(), vec![2, 2, 2, 0]);
    }

    #[test]
    fn random_rings_round_trip_through_json() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..10 {
            let a = DGRing::random(Z, 3, 2, &mut rng).unwrap();
            let b = DGRing::from_json(&a.to_json()).unwrap();
            assert_eq!(a.to_json(), b.to_json());
            let m = a.reduce_ring(CoeffRing::Modular(2)).unwrap();
            assert_eq!(m.ranks(), a.ranks());
        }
    }
}
