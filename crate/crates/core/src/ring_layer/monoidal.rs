//! `Q(A_1 ⊗ … ⊗ A_k)` with basis `a_1⊗…⊗a_k⊗x`, and the monoidal map
//! `υ((a⊗x)⊗(b⊗y)) = a⊗b⊗xy + (−1)^{|a|} a⊗db⊗θ(x)y`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::combo::Combo;
use crate::dold_kan_core::{BaseComplex, FinObject, QKey};
use crate::error::{Error, Result};
use crate::exact_linear::CoeffRing;
use crate::fin_maps::FinMap;
use crate::tensor_exterior::{act_word, concat, theta_word, words, Word};

/// `a_1⊗…⊗a_k⊗x` with `a_m` the basis element `(degree, index)` of `A_m`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MKey {
    pub factors: Vec<(usize, usize)>,
    pub word: Word,
}

impl MKey {
    pub fn degree(&self) -> usize {
        self.factors.iter().map(|f| f.0).sum()
    }

    pub fn from_q(k: &QKey) -> Self {
        MKey {
            factors: vec![(k.deg, k.idx)],
            word: k.word.clone(),
        }
    }

    pub fn to_q(&self) -> Option<QKey> {
        match self.factors[..] {
            [(deg, idx)] => Some(QKey::new(deg, idx, self.word.clone())),
            _ => None,
        }
    }
}

impl fmt::Debug for MKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|(d, i)| format!("a{d}_{i}")).collect();
        write!(f, "{}⊗{}", parts.join("⊗"), crate::tensor_exterior::format_word(&self.word))
    }
}

fn sign(p: usize) -> BigInt {
    if p % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `Q(A_1 ⊗ … ⊗ A_k)`, each factor read modulo its own cutoff.
#[derive(Clone, Debug)]
pub struct MultiQ {
    factors: Vec<BaseComplex>,
}

impl MultiQ {
    pub fn new(factors: Vec<BaseComplex>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Precondition("need at least one factor".into()));
        }
        let ring = factors[0].ring();
        if factors.iter().any(|f| f.ring() != ring) {
            return Err(Error::Precondition("factors over different rings".into()));
        }
        Ok(MultiQ { factors })
    }

    pub fn factors(&self) -> &[BaseComplex] {
        &self.factors
    }

    /// `Q(A⊗B)` after `QA`, `QB`.
    pub fn join(&self, other: &MultiQ) -> MultiQ {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        MultiQ { factors }
    }

    /// `d(a_1⊗…⊗a_k)` with Koszul signs.
    pub fn d_factors(&self, factors: &[(usize, usize)]) -> Vec<(Vec<(usize, usize)>, BigInt)> {
        let mut out = Vec::new();
        let mut before = 0;
        for (m, &(deg, idx)) in factors.iter().enumerate() {
            for (k, c) in self.factors[m].d(deg, idx) {
                let mut f = factors.to_vec();
                f[m] = (deg + 1, *k);
                out.push((f, c * sign(before)));
            }
            before += deg;
        }
        out
    }

    fn factor_lists(&self, m: usize) -> Vec<Vec<(usize, usize)>> {
        if m == self.factors.len() {
            return vec![Vec::new()];
        }
        let rest = self.factor_lists(m + 1);
        let mut out = Vec::new();
        let base = &self.factors[m];
        for deg in 0..=base.top() {
            for idx in 0..base.rank(deg) {
                for r in &rest {
                    let mut f = vec![(deg, idx)];
                    f.extend(r.iter().copied());
                    out.push(f);
                }
            }
        }
        out
    }
}

impl FinObject for MultiQ {
    type Key = MKey;

    fn ring(&self) -> CoeffRing {
        self.factors[0].ring()
    }

    fn basis(&self, n: usize) -> Vec<MKey> {
        let mut out = Vec::new();
        for factors in self.factor_lists(0) {
            let r: usize = factors.iter().map(|f| f.0).sum();
            for w in words(r, n) {
                out.push(MKey {
                    factors: factors.clone(),
                    word: w,
                });
            }
        }
        out.sort();
        out
    }

    fn act_key(&self, alpha: &FinMap, key: &MKey) -> Combo<MKey> {
        let image = act_word(alpha, &key.word);
        let mut out = image.map_keys(|w| MKey {
            factors: key.factors.clone(),
            word: w.clone(),
        });
        let a0 = alpha.apply(0);
        if a0 != 0 {
            for (f, c) in self.d_factors(&key.factors) {
                for (w, x) in image.iter() {
                    out.add_term(
                        MKey {
                            factors: f.clone(),
                            word: concat(&[a0 as u8], w),
                        },
                        &c * x,
                    );
                }
            }
        }
        out
    }
}

/// `υ` on basis elements; `right` supplies the differential of the second factor.
pub fn upsilon_key(x: &MKey, y: &MKey, right: &MultiQ) -> Combo<MKey> {
    let mut factors = x.factors.clone();
    factors.extend(y.factors.iter().copied());
    let mut out = Combo::basis(MKey {
        factors,
        word: concat(&x.word, &y.word),
    });
    let s = sign(x.degree());
    let theta = theta_word(&x.word);
    for (g, c) in right.d_factors(&y.factors) {
        for (t, e) in theta.iter() {
            let mut factors = x.factors.clone();
            factors.extend(g.iter().copied());
            out.add_term(
                MKey {
                    factors,
                    word: concat(t, &y.word),
                },
                &c * e * &s,
            );
        }
    }
    out
}

pub fn upsilon(x: &Combo<MKey>, y: &Combo<MKey>, right: &MultiQ) -> Combo<MKey> {
    let mut out = x.bilinear(y, |a, b| upsilon_key(a, b, right));
    right.ring().reduce_combo(&mut out);
    out
}

/// The leading part `g((a⊗x)⊗(b⊗y)) = a⊗b⊗xy`.
pub fn concat_key(x: &MKey, y: &MKey) -> MKey {
    let mut factors = x.factors.clone();
    factors.extend(y.factors.iter().copied());
    MKey {
        factors,
        word: concat(&x.word, &y.word),
    }
}

/// Checks that `υ` is a bijection on level `n`: the leading terms
/// `a⊗b⊗xy` enumerate the target basis exactly once, with coefficient 1,
/// and every other term has strictly larger tensor degree. Such a map is
/// unitriangular and hence invertible over any ring.
pub fn upsilon_is_unitriangular(left: &MultiQ, right: &MultiQ, n: usize) -> Result<bool> {
    let joined = left.join(right);
    let mut target = joined.basis(n);
    target.sort();
    let mut leading = Vec::new();
    for x in left.basis(n) {
        for y in right.basis(n) {
            let lead = concat_key(&x, &y);
            let image = upsilon_key(&x, &y, right);
            if image.coeff(&lead) != BigInt::one() {
                return Ok(false);
            }
            if image.keys().any(|k| k != &lead && k.degree() <= lead.degree()) {
                return Ok(false);
            }
            leading.push(lead);
        }
    }
    leading.sort();
    Ok(leading == target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linear::{BoundedComplex, Matrix};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const Z: CoeffRing = CoeffRing::Integers;

    fn times_two() -> BaseComplex {
        let c = BoundedComplex::from_ranks(Z, &[1, 1], vec![Matrix::from_i64_rows(&[vec![2]]).unwrap()]).unwrap();
        BaseComplex::new(&c, 5)
    }

    fn key(deg: usize, word: &[u8]) -> MKey {
        MKey {
            factors: vec![(deg, 0)],
            word: word.to_vec(),
        }
    }

    #[test]
    fn degree_one_example() {
        let q = MultiQ::new(vec![times_two()]).unwrap();
        let x = key(1, &[1]);
        let y = key(0, &[]);
        // (a⊗v1)⊗(b⊗1) with db = 2b': a⊗b⊗v1 − 2 a⊗b'⊗v1v1
        let u = upsilon_key(&x, &y, &q);
        let lead = MKey {
            factors: vec![(1, 0), (0, 0)],
            word: vec![1],
        };
        let corr = MKey {
            factors: vec![(1, 0), (1, 0)],
            word: vec![1, 1],
        };
        assert_eq!(u.coeff(&lead), BigInt::from(1));
        assert_eq!(u.coeff(&corr), BigInt::from(-2));
        assert_eq!(u.len(), 2);
    }

    #[test]
    fn upsilon_is_natural_and_associative() {
        let q = MultiQ::new(vec![times_two()]).unwrap();
        let qq = q.join(&q);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let n = rng.gen_range(0..3usize);
            let m = rng.gen_range(0..3usize);
            let alpha = FinMap::random(n, m, &mut rng);
            let pick = |rng: &mut ChaCha8Rng| {
                let b = q.basis(n);
                Combo::basis(b[rng.gen_range(0..b.len())].clone())
            };
            let (x, y, z) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            let lhs = qq.act(&alpha, &upsilon(&x, &y, &q));
            let rhs = upsilon(&q.act(&alpha, &x), &q.act(&alpha, &y), &q);
            assert_eq!(lhs, rhs);
            let left = upsilon(&upsilon(&x, &y, &q), &z, &q);
            let right = upsilon(&x, &upsilon(&y, &z, &q), &qq);
            assert_eq!(left, right);
        }
        for n in 0..3 {
            assert!(upsilon_is_unitriangular(&q, &q, n).unwrap());
        }
    }
}
