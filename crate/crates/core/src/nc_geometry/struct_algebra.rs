//! Finite free algebras over `k = Z` or `Z/m` given by structure constants,
//! stored in a basis whose element 0 is the unit. The remaining basis
//! elements span the chosen complement `S̄` of `k·1`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::combo::Combo;
use crate::error::{Error, Result};
use crate::exact_linear::complex::{bigint_from_json, bigint_to_json};
use crate::exact_linear::CoeffRing;

/// An element of `S` as a combination of basis indices.
pub type Elem = Combo<usize>;

#[derive(Clone, Debug)]
pub struct StructAlgebra {
    ring: CoeffRing,
    labels: Vec<String>,
    /// `table[i][j]` is `e_i e_j` as sparse coordinates.
    table: Vec<Vec<Vec<(usize, BigInt)>>>,
}

impl StructAlgebra {
    /// `table[i][j][k]` is the coefficient of `e_k` in `e_i e_j`. The basis is
    /// rewritten so the unit comes first: a coordinate `p` of `unit` that is
    /// invertible in `k` is chosen and `e_p` is replaced by the unit.
    pub fn new(ring: CoeffRing, labels: Vec<String>, table: Vec<Vec<Vec<BigInt>>>, unit: Vec<BigInt>) -> Result<Self> {
        let r = labels.len();
        if r == 0 || unit.len() != r || table.len() != r || table.iter().any(|row| row.len() != r || row.iter().any(|v| v.len() != r)) {
            return Err(Error::Dimension(format!("structure constants must be {r}×{r}×{r} with a unit of length {r}")));
        }
        let reduce = |x: &BigInt| ring.reduce(x);
        let unit: Vec<BigInt> = unit.iter().map(reduce).collect();
        let p = (0..r)
            .find(|&i| !ring.is_zero(&unit[i]) && ring.inverse(&unit[i]).is_some())
            .ok_or_else(|| Error::InvalidStructure("the unit is not part of a basis (no invertible coordinate)".into()))?;
        let up_inv = ring.inverse(&unit[p]).expect("invertible");
        // new basis: b_0 = unit, then e_i for i ≠ p
        let order: Vec<usize> = (0..r).filter(|&i| i != p).collect();
        let old_of_new = |b: usize| -> Vec<BigInt> {
            if b == 0 {
                unit.clone()
            } else {
                let mut v = vec![BigInt::zero(); r];
                v[order[b - 1]] = BigInt::one();
                v
            }
        };
        let new_of_old = |x: &[BigInt]| -> Vec<BigInt> {
            let c0 = ring.reduce(&(&x[p] * &up_inv));
            let mut out = vec![c0.clone()];
            out.extend(order.iter().map(|&i| ring.reduce(&(&x[i] - &c0 * &unit[i]))));
            out
        };
        let old_mul = |x: &[BigInt], y: &[BigInt]| -> Vec<BigInt> {
            let mut out = vec![BigInt::zero(); r];
            for i in 0..r {
                if x[i].is_zero() {
                    continue;
                }
                for j in 0..r {
                    if y[j].is_zero() {
                        continue;
                    }
                    let xy = &x[i] * &y[j];
                    for k in 0..r {
                        out[k] += &xy * &table[i][j][k];
                    }
                }
            }
            out
        };
        let mut new_table = vec![vec![Vec::new(); r]; r];
        for (a, row) in new_table.iter_mut().enumerate() {
            for (b, entry) in row.iter_mut().enumerate() {
                let v = new_of_old(&old_mul(&old_of_new(a), &old_of_new(b)));
                *entry = v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
            }
        }
        let mut new_labels = vec![labels[p].clone()];
        new_labels.extend(order.iter().map(|&i| labels[i].clone()));
        let s = StructAlgebra {
            ring,
            labels: new_labels,
            table: new_table,
        };
        s.check()?;
        Ok(s)
    }

    fn from_sparse(ring: CoeffRing, labels: &[&str], products: &[((usize, usize), &[(usize, i64)])]) -> Self {
        let r = labels.len();
        let mut table = vec![vec![vec![BigInt::zero(); r]; r]; r];
        for i in 0..r {
            table[0][i][i] = BigInt::one();
            table[i][0][i] = BigInt::one();
        }
        for ((i, j), terms) in products {
            for &(k, c) in terms.iter() {
                table[*i][*j][k] = BigInt::from(c);
            }
        }
        let mut unit = vec![BigInt::zero(); r];
        unit[0] = BigInt::one();
        StructAlgebra::new(ring, labels.iter().map(|s| s.to_string()).collect(), table, unit).expect("valid algebra")
    }

    /// `k` itself.
    pub fn ground(ring: CoeffRing) -> Self {
        StructAlgebra::from_sparse(ring, &["1"], &[])
    }

    /// `k[x]/(x²)`.
    pub fn dual_numbers(ring: CoeffRing) -> Self {
        StructAlgebra::from_sparse(ring, &["1", "x"], &[])
    }

    /// `k[x]/(x³)`.
    pub fn truncated_polynomial3(ring: CoeffRing) -> Self {
        StructAlgebra::from_sparse(ring, &["1", "x", "x2"], &[((1, 1), &[(2, 1)])])
    }

    /// Upper triangular `2×2` matrices with basis `1, e12, e22`.
    pub fn upper_triangular(ring: CoeffRing) -> Self {
        StructAlgebra::from_sparse(
            ring,
            &["1", "e12", "e22"],
            &[((1, 2), &[(1, 1)]), ((2, 2), &[(2, 1)])],
        )
    }

    /// `k × k` with basis `1, e` where `e² = e`.
    pub fn split_idempotent(ring: CoeffRing) -> Self {
        StructAlgebra::from_sparse(ring, &["1", "e"], &[((1, 1), &[(1, 1)])])
    }

    pub fn ring(&self) -> CoeffRing {
        self.ring
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    /// Rank of `S̄`.
    pub fn bar_rank(&self) -> usize {
        self.labels.len() - 1
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, BigInt)] {
        &self.table[i][j]
    }

    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        let mut out = x.bilinear(y, |&i, &j| Combo::from_terms(self.table[i][j].iter().cloned()));
        self.ring.reduce_combo(&mut out);
        out
    }

    pub fn one(&self) -> Elem {
        Combo::basis(0)
    }

    fn check(&self) -> Result<()> {
        let r = self.rank();
        let ring = self.ring;
        for i in 0..r {
            let e = Combo::basis(i);
            if self.mul(&self.one(), &e) != e || self.mul(&e, &self.one()) != e {
                return Err(Error::InvalidStructure(format!("unit law fails on {}", self.labels[i])));
            }
            for j in 0..r {
                let ij = self.mul(&e, &Combo::basis(j));
                for k in 0..r {
                    let ek = Combo::basis(k);
                    let mut diff = self.mul(&ij, &ek).minus(&self.mul(&e, &self.mul(&Combo::basis(j), &ek)));
                    ring.reduce_combo(&mut diff);
                    if !diff.is_zero() {
                        return Err(Error::InvalidStructure(format!(
                            "associativity fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.rank()).all(|i| (0..self.rank()).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// `{"modulus": m, "rank": r, "structure": [[[c_ij^k]]], "unit": [..], "labels": [..]}`,
    /// modulus 0 meaning `Z`.
    pub fn to_json(&self) -> Value {
        let r = self.rank();
        let structure: Vec<Vec<Vec<Value>>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let mut v = vec![BigInt::zero(); r];
                        for (k, c) in &self.table[i][j] {
                            v[*k] = c.clone();
                        }
                        v.iter().map(bigint_to_json).collect()
                    })
                    .collect()
            })
            .collect();
        let mut unit = vec![json!(0); r];
        unit[0] = json!(1);
        json!({
            "modulus": self.ring.modulus().map(|m| bigint_to_json(&m)).unwrap_or(json!(0)),
            "rank": r,
            "labels": self.labels,
            "structure": structure,
            "unit": unit,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let modulus = v.get("modulus").and_then(Value::as_u64).unwrap_or(0);
        let ring = if modulus == 0 {
            CoeffRing::Integers
        } else {
            CoeffRing::modular(modulus)?
        };
        let rank = v
            .get("rank")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing \"rank\"".into()))? as usize;
        let labels = match v.get("labels").and_then(Value::as_array) {
            Some(ls) => ls
                .iter()
                .map(|l| l.as_str().map(str::to_string).ok_or_else(|| Error::Parse("labels must be strings".into())))
                .collect::<Result<Vec<_>>>()?,
            None => (0..rank).map(|i| format!("e{i}")).collect(),
        };
        if labels.len() != rank {
            return Err(Error::Parse(format!("expected {rank} labels")));
        }
        let list = |x: &Value, what: &str| -> Result<Vec<Value>> {
            x.as_array().cloned().ok_or_else(|| Error::Parse(format!("{what} must be an array")))
        };
        let structure = v.get("structure").ok_or_else(|| Error::Parse("missing \"structure\"".into()))?;
        let table = list(structure, "structure")?
            .iter()
            .map(|row| {
                list(row, "structure row")?
                    .iter()
                    .map(|cell| list(cell, "structure entry")?.iter().map(bigint_from_json).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let unit = list(v.get("unit").ok_or_else(|| Error::Parse("missing \"unit\"".into()))?, "unit")?
            .iter()
            .map(bigint_from_json)
            .collect::<Result<Vec<_>>>()?;
        StructAlgebra::new(ring, labels, table, unit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> CoeffRing {
        CoeffRing::modular(2).unwrap()
    }

    #[test]
    fn standard_algebras_are_valid() {
        for s in [
            StructAlgebra::ground(z2()),
            StructAlgebra::dual_numbers(z2()),
            StructAlgebra::upper_triangular(z2()),
            StructAlgebra::truncated_polynomial3(CoeffRing::Integers),
            StructAlgebra::split_idempotent(CoeffRing::Integers),
        ] {
            s.check().unwrap();
        }
        assert!(!StructAlgebra::upper_triangular(z2()).is_commutative());
        assert!(StructAlgebra::dual_numbers(z2()).is_commutative());
    }

    #[test]
    fn unit_is_moved_to_the_front() {
        // k × k in the basis of the two idempotents, unit (1, 1)
        let e = |a: i64, b: i64| vec![BigInt::from(a), BigInt::from(b)];
        let table = vec![vec![e(1, 0), e(0, 0)], vec![e(0, 0), e(0, 1)]];
        let s = StructAlgebra::new(CoeffRing::Integers, vec!["p".into(), "q".into()], table, e(1, 1)).unwrap();
        assert_eq!(s.labels(), &["p".to_string(), "q".to_string()]);
        // q·q = q = 1 − p in the new basis {1, q}
        assert_eq!(s.mul_basis(1, 1), &[(1, BigInt::one())]);
    }

    #[test]
    fn rejects_nonassociative_constants() {
        let z = BigInt::zero;
        let o = BigInt::one;
        // 1, a with a·a = 1 + a is fine; break it by making 1·a = 0
        let table = vec![vec![vec![o(), z()], vec![z(), z()]], vec![vec![z(), o()], vec![o(), o()]]];
        assert!(StructAlgebra::new(CoeffRing::Integers, vec!["1".into(), "a".into()], table, vec![o(), z()]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = StructAlgebra::upper_triangular(z2());
        let t = StructAlgebra::from_json(&s.to_json()).unwrap();
        assert_eq!(t.table, s.table);
        assert_eq!(t.labels, s.labels);
    }
}
